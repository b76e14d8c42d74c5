/**************************************************************************
 * io.hpp
 *
 * Copyright 2026 The eaqecc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

/**
 * @file io.hpp
 * @brief Code files and report serialization.
 *
 * Code file format:
 *
 *     # comment
 *     q 2
 *     poly 1 1 1          (optional; extension fields only)
 *     n 5
 *     1 0 0 1 0 | 0 1 1 0 0
 *     ...
 *
 * One basis row per line: n integer codes, a literal `|`, n more codes. `#`
 * starts a comment, blank lines are ignored, keywords must appear in the
 * order q, poly, n.
 *
 * JSON report schema (one object):
 *
 *     { "kind": "theorem" | "lemmas",
 *       "positions": [int, ...],                       1-indexed
 *       "input_params": Params | null,
 *       "output_params": Params | null,
 *       "checks": [{"name", "expected", "actual", "status": "PASS"|"FAIL"|"VACUOUS"}],
 *       "overall": bool }
 *
 *     Params = { "label", "q", "n", "k", "d", "c", "pure_d", "dim", "is_stabilizer_qecc" }
 *     with "d" and "pure_d" null when undefined.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "symplectic_code.hpp"
#include "transform.hpp"

namespace eaq {

namespace detail {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-indexed
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const std::size_t start = i;
    if (line[i] == '|') {
      ++i;
    } else {
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#' && line[i] != '|') ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

inline unsigned parse_uint(const Token& t, std::size_t line) {
  if (t.text.empty() || t.text.size() > 9 || t.text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, t.column, "expected a non-negative integer, got '" + t.text + "'");
  return static_cast<unsigned>(std::stoul(t.text));
}

}  // namespace detail

inline LinearCode parse_code_file(std::string_view text) {
  std::optional<unsigned> q;
  std::optional<std::vector<unsigned>> poly;
  std::optional<Field> field;
  std::optional<std::size_t> n;
  std::vector<std::vector<unsigned>> rows;
  std::size_t q_line = 0;
  std::size_t poly_line = 0;

  std::size_t line_no = 0;
  std::size_t last_line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = detail::tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    last_line = line_no;
    const detail::Token& head = tokens.front();

    if (head.text == "q") {
      if (q) throw ParseError(line_no, head.column, "duplicate 'q' line");
      if (tokens.size() != 2) throw ParseError(line_no, head.column, "expected 'q <order>'");
      q = detail::parse_uint(tokens[1], line_no);
      q_line = line_no;
      if (!detail::prime_power(*q)) throw ParseError(line_no, tokens[1].column, "field order " + tokens[1].text + " is not a prime power");
    } else if (head.text == "poly") {
      if (!q) throw ParseError(line_no, head.column, "'poly' must follow 'q'");
      if (poly || n) throw ParseError(line_no, head.column, "'poly' must come once, before 'n'");
      std::vector<unsigned> coeffs;
      for (std::size_t t = 1; t < tokens.size(); ++t) coeffs.push_back(detail::parse_uint(tokens[t], line_no));
      poly = std::move(coeffs);
      poly_line = line_no;
    } else if (head.text == "n") {
      if (!q) throw ParseError(line_no, head.column, "'n' must follow 'q'");
      if (n) throw ParseError(line_no, head.column, "duplicate 'n' line");
      if (tokens.size() != 2) throw ParseError(line_no, head.column, "expected 'n <length>'");
      n = detail::parse_uint(tokens[1], line_no);
      const auto [p, m] = *detail::prime_power(*q);
      try {
        if (poly) field = m == 1 ? Field::prime(p) : Field::extension(p, m, *poly);
        else field = Field::of_order(*q);
        if (poly && m == 1) throw DomainError("'poly' given for the prime field GF(" + std::to_string(p) + ")");
      } catch (const DomainError& e) {
        throw ParseError(poly ? poly_line : q_line, 1, e.what());
      }
    } else if (std::isdigit(static_cast<unsigned char>(head.text[0])) || head.text == "|") {
      if (!n) throw ParseError(line_no, head.column, "basis rows must follow the 'n' line");
      std::vector<unsigned> row;
      std::size_t bar = 0;
      for (const detail::Token& t : tokens) {
        if (t.text == "|") {
          if (bar != 0) throw ParseError(line_no, t.column, "second '|' in row");
          if (row.size() != *n)
            throw ParseError(line_no, t.column, "a-half has " + std::to_string(row.size()) + " entries, expected " + std::to_string(*n));
          bar = t.column;
          continue;
        }
        const unsigned v = detail::parse_uint(t, line_no);
        if (!field->contains(v)) throw ParseError(line_no, t.column, "entry " + t.text + " is not below q = " + std::to_string(*q));
        row.push_back(v);
      }
      if (bar == 0) throw ParseError(line_no, head.column, "row is missing the '|' separator");
      if (row.size() != 2 * *n)
        throw ParseError(line_no, head.column, "row has " + std::to_string(row.size()) + " entries, expected 2n = " + std::to_string(2 * *n));
      rows.push_back(std::move(row));
    } else {
      throw ParseError(line_no, head.column, "unknown field '" + head.text + "'");
    }
    if (end == text.size()) break;
  }
  if (!q) throw ParseError(last_line, 1, "missing 'q' line");
  if (!n) throw ParseError(last_line, 1, "missing 'n' line");
  return {*field, *n, Matrix(*field, 2 * *n, rows)};
}

/// Canonical code file for `code` (RREF rows).
inline std::string serialize_code(const LinearCode& code) {
  std::ostringstream out;
  const Field& f = code.field();
  out << "q " << f.q() << '\n';
  if (f.m() > 1) {
    out << "poly";
    for (unsigned c : f.modulus()) out << ' ' << c;
    out << '\n';
  }
  const std::size_t n = code.length();
  out << "n " << n << '\n';
  for (std::size_t r = 0; r < code.dimension(); ++r) {
    const auto row = code.basis().row(r);
    for (std::size_t c = 0; c < 2 * n; ++c) {
      if (c == n) out << (n ? " |" : "|");
      out << (c == 0 ? "" : " ") << static_cast<unsigned>(row[c]);
    }
    if (n == 0) out << '|';
    out << '\n';
  }
  return out.str();
}

/// Compact (a|b) form, e.g. (10010|01100); elements are joined with ',' when q > 10.
inline std::string format_vector(std::span<const Elem> v, unsigned q) {
  const std::size_t n = v.size() / 2;
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == n) out += '|';
    else if (i != 0 && q > 10) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

enum class Format { Text, Json };

inline nlohmann::json to_json(const CodeParams& p) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"label", p.label()}, {"q", p.q}, {"n", p.n}, {"k", p.k}, {"d", opt(p.d)}, {"c", p.c},
          {"pure_d", opt(p.pure_d)}, {"dim", p.dim}, {"is_stabilizer_qecc", p.is_stabilizer_qecc}};
}

inline CodeParams params_from_json(const nlohmann::json& j) {
  auto opt = [](const nlohmann::json& v) { return v.is_null() ? std::optional<std::size_t>{} : v.get<std::size_t>(); };
  CodeParams p;
  p.q = j.at("q").get<unsigned>();
  p.n = j.at("n").get<std::size_t>();
  p.k = j.at("k").get<std::size_t>();
  p.d = opt(j.at("d"));
  p.c = j.at("c").get<std::size_t>();
  p.pure_d = opt(j.at("pure_d"));
  p.dim = j.at("dim").get<std::size_t>();
  p.is_stabilizer_qecc = j.at("is_stabilizer_qecc").get<bool>();
  return p;
}

inline nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"status", to_string(c.status)}});
  return {{"kind", r.kind},
          {"positions", r.positions.positions()},
          {"input_params", r.input_params ? to_json(*r.input_params) : nlohmann::json(nullptr)},
          {"output_params", r.output_params ? to_json(*r.output_params) : nlohmann::json(nullptr)},
          {"checks", checks},
          {"overall", r.overall()}};
}

inline TheoremReport report_from_json(const nlohmann::json& j) {
  TheoremReport r;
  r.kind = j.at("kind").get<std::string>();
  r.positions = PositionSet(j.at("positions").get<std::vector<std::size_t>>());
  if (!j.at("input_params").is_null()) r.input_params = params_from_json(j.at("input_params"));
  if (!j.at("output_params").is_null()) r.output_params = params_from_json(j.at("output_params"));
  for (const auto& c : j.at("checks")) {
    const auto status = c.at("status").get<std::string>();
    CheckStatus s = CheckStatus::Fail;
    if (status == "PASS") s = CheckStatus::Pass;
    else if (status == "VACUOUS") s = CheckStatus::Vacuous;
    else if (status != "FAIL") throw DomainError("unknown check status '" + status + "'");
    r.checks.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                        c.at("actual").get<std::string>(), s});
  }
  return r;
}

inline std::string emit_report(const TheoremReport& r, Format format) {
  if (format == Format::Json) return to_json(r).dump(2) + "\n";
  std::ostringstream out;
  out << (r.kind == "theorem" ? "construction" : "lemmas") << " at positions {" << r.positions.to_string() << "}\n";
  if (r.input_params && r.output_params) out << r.input_params->label() << " -> " << r.output_params->label() << '\n';
  else if (r.output_params) out << r.output_params->label() << '\n';
  if (r.output_params) {
    const auto& p = *r.output_params;
    out << "  coset distance (dual \\ C): " << detail::to_string(p.d) << '\n';
    out << "  pure distance (dual \\ 0):  " << detail::to_string(p.pure_d) << '\n';
  }
  for (const auto& c : r.checks) {
    std::string status = to_string(c.status);
    status.resize(8, ' ');
    out << status << c.name << ": expected " << c.expected << ", actual " << c.actual << '\n';
  }
  out << "overall: " << (r.overall() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace eaq
