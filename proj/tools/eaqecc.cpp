/**************************************************************************
 * eaqecc.cpp
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

// eaqecc: command-line driver for symplectic codes and the puncture/shorten
// EAQECC construction.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage/parse/precondition
// error, 3 enumeration cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eaq/eaq.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct Options {
  std::string file;
  std::uint64_t cap = eaq::kDefaultEnumerationCap;
  std::string format = "text";
  std::vector<std::size_t> positions;
  std::uint64_t seed = 0;
  std::optional<std::size_t> trusted_d;
  std::size_t size = 0;
  std::optional<std::size_t> limit;
  unsigned q = 2;
  std::size_t n = 0;
  std::size_t dim = 0;
};

eaq::LinearCode load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw eaq::PreconditionError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return eaq::parse_code_file(buf.str());
  } catch (const eaq::ParseError&) {
    std::cerr << path << ": ";
    throw;
  }
}

bool json_out(const Options& o) { return o.format == "json"; }

nlohmann::json code_json(const eaq::LinearCode& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < c.dimension(); ++r) {
    const auto row = c.basis().row(r);
    rows.push_back(std::vector<unsigned>(row.begin(), row.end()));
  }
  return {{"q", c.field().q()}, {"n", c.length()}, {"dim", c.dimension()}, {"basis", rows}};
}

void print_code(const eaq::LinearCode& c, const Options& o) {
  if (json_out(o)) std::cout << code_json(c).dump(2) << '\n';
  else std::cout << eaq::serialize_code(c);
}

eaq::PositionSet positions(const Options& o) { return eaq::PositionSet(o.positions); }

int run_params(const Options& o) {
  const auto code = load(o.file);
  const auto p = eaq::params(code, o.cap);
  if (json_out(o)) {
    std::cout << eaq::to_json(p).dump(2) << '\n';
    return kOk;
  }
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("undef"); };
  std::cout << p.label() << '\n'
            << "  dim C:                      " << p.dim << '\n'
            << "  entanglement c:             " << p.c << '\n'
            << "  logical k:                  " << p.k << '\n'
            << "  coset distance (dual \\ C):  " << opt(p.d) << '\n'
            << "  pure distance (dual \\ 0):   " << opt(p.pure_d) << '\n'
            << "  stabilizer QECC:            " << (p.is_stabilizer_qecc ? "yes" : "no") << '\n';
  return kOk;
}

int run_construct(const Options& o) {
  const auto code = load(o.file);
  const auto result = eaq::construct_eaqecc(code, positions(o), {o.cap, o.trusted_d});
  const auto& report = result.report;
  if (json_out(o)) {
    auto j = eaq::to_json(report);
    j["code"] = code_json(result.code);
    j["dual"] = code_json(eaq::dual(result.code));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "# punctured code\n" << eaq::serialize_code(result.code);
    std::cout << "# symplectic dual of the punctured code\n" << eaq::serialize_code(eaq::dual(result.code));
    std::cout << eaq::emit_report(report, eaq::Format::Text);
  }
  return report.overall() ? kOk : kCheckFailed;
}

int run_verify_lemmas(const Options& o) {
  const auto code = load(o.file);
  std::vector<std::size_t> which = o.positions;
  if (which.empty())
    for (std::size_t i = 1; i <= code.length(); ++i) which.push_back(i);
  const eaq::PositionSet selected(which);
  selected.check_range(code.length());
  bool all = true;
  nlohmann::json reports = nlohmann::json::array();
  for (std::size_t i : selected.positions()) {
    const auto r = eaq::verify_lemmas(code, i, o.cap);
    all = all && r.overall();
    if (json_out(o)) reports.push_back(eaq::to_json(r));
    else std::cout << eaq::emit_report(r, eaq::Format::Text);
  }
  if (json_out(o)) std::cout << nlohmann::json{{"reports", reports}, {"overall", all}}.dump(2) << '\n';
  return all ? kOk : kCheckFailed;
}

int run_search(const Options& o) {
  const auto code = load(o.file);
  const auto hits = eaq::search_positions(code, o.size, o.cap, o.limit);
  bool all = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& h : hits) {
    all = all && h.theorem_holds;
    if (json_out(o)) {
      rows.push_back({{"positions", h.positions.positions()}, {"params", eaq::to_json(h.params)}, {"theorem_holds", h.theorem_holds}});
    } else {
      std::cout << '{' << h.positions.to_string() << "}  " << h.params.label() << "  pure_d="
                << (h.params.pure_d ? std::to_string(*h.params.pure_d) : "undef") << "  "
                << (h.theorem_holds ? "PASS" : "FAIL") << '\n';
    }
  }
  if (json_out(o)) std::cout << nlohmann::json{{"results", rows}, {"overall", all}}.dump(2) << '\n';
  return all ? kOk : kCheckFailed;
}

int run_compare(const Options& o) {
  const auto code = load(o.file);
  const auto a = eaq::compare_applicability(code, o.cap);
  const bool dominates = a.ours_max_l >= a.galindo_max_l;
  if (json_out(o)) {
    std::cout << nlohmann::json{{"ours_max_l", a.ours_max_l},
                                {"galindo_max_l", a.galindo_max_l},
                                {"symplectic_distance", a.symplectic_distance},
                                {"hamming_distance", a.hamming_distance},
                                {"dominates", dominates}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "min symplectic weight of dual:  " << a.symplectic_distance << '\n'
              << "min Hamming weight of dual:     " << a.hamming_distance << '\n'
              << "max l (l < d):                  " << a.ours_max_l << '\n'
              << "max l (2l < w_H):               " << a.galindo_max_l << '\n';
  }
  return dominates ? kOk : kCheckFailed;
}

int run_random(const Options& o) {
  const auto field = eaq::Field::of_order(o.q);
  print_code(eaq::random_self_orthogonal(field, o.n, o.dim, o.seed), o);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic codes and entanglement-assisted code construction by puncturing"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_file) {
    if (with_file) sub->add_option("file", o.file, "code file")->required();
    sub->add_option("--cap", o.cap, "maximum number of codewords to enumerate");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", o.seed, "seed where randomness applies");
  };
  auto add_positions = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--positions", o.positions, "1-indexed positions, e.g. 1,3")->delimiter(',');
    if (required) opt->required();
  };

  auto* params = app.add_subcommand("params", "print [[n,k,d;c]]_q of a code");
  add_common(params, true);
  auto* dual = app.add_subcommand("dual", "print the symplectic dual");
  add_common(dual, true);
  auto* puncture = app.add_subcommand("puncture", "delete positions from every codeword");
  add_common(puncture, true);
  add_positions(puncture, true);
  auto* shorten = app.add_subcommand("shorten", "keep codewords vanishing on positions, then delete them");
  add_common(shorten, true);
  add_positions(shorten, true);
  auto* construct = app.add_subcommand("construct", "build an EAQECC by puncturing a self-orthogonal code");
  add_common(construct, true);
  add_positions(construct, true);
  construct->add_option("--trusted-d", o.trusted_d, "skip computing the input's pure distance");
  auto* lemmas = app.add_subcommand("verify-lemmas", "check the single-position lemmas (all positions by default)");
  add_common(lemmas, true);
  add_positions(lemmas, false);
  auto* search = app.add_subcommand("search", "run the construction over all position sets of a given size");
  add_common(search, true);
  search->add_option("--size", o.size, "number of positions l")->required();
  search->add_option("--limit", o.limit, "evaluate only the first N position sets");
  auto* compare = app.add_subcommand("compare-remark", "largest admissible l: l < d versus 2l < w_H");
  add_common(compare, true);
  auto* random = app.add_subcommand("random", "print a seeded random self-orthogonal code");
  add_common(random, false);
  random->add_option("--q", o.q, "field order")->required();
  random->add_option("--n", o.n, "length")->required();
  random->add_option("--dim", o.dim, "dimension (at most n)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*params) return run_params(o);
    if (*dual) {
      print_code(eaq::dual(load(o.file)), o);
      return kOk;
    }
    if (*puncture) {
      print_code(eaq::puncture(load(o.file), positions(o)), o);
      return kOk;
    }
    if (*shorten) {
      print_code(eaq::shorten(load(o.file), positions(o)), o);
      return kOk;
    }
    if (*construct) return run_construct(o);
    if (*lemmas) return run_verify_lemmas(o);
    if (*search) return run_search(o);
    if (*compare) return run_compare(o);
    if (*random) return run_random(o);
  } catch (const eaq::ResourceError& e) {
    std::cerr << "error: " << e.what() << " (raise --cap to continue)\n";
    return kResource;
  } catch (const eaq::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
