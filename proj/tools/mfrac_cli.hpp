// Copyright 2026 The mfrac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 1 domain error, 2 usage
// error.

#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mfrac/mfrac.hpp"

namespace mfrac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Exact fields are strings ("p/q", "(a+b*sqrt(D))/c", "m/2^n"); fields
/// whose names end in "_approx" are decimal approximations.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> outputs;
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> enclosures;  // ["lo", "hi"]
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool ok = true;
  std::string error_detail;

  void input(std::string key, std::string value) { inputs.emplace_back(std::move(key), std::move(value)); }
  void output(std::string key, std::string value) { outputs.emplace_back(std::move(key), std::move(value)); }
  void enclosure(std::string key, std::string lo, std::string hi) {
    enclosures.emplace_back(std::move(key), std::make_pair(std::move(lo), std::move(hi)));
  }
};

/// f rounded toward negative infinity to `digits` decimal places.
inline std::string decimal_string(const Fraction& f, unsigned digits) {
  const BigInt scaled = floor_div(f.num() * pow10(digits), f.den());
  const BigInt magnitude = abs(scaled);
  const BigInt whole = magnitude / pow10(digits);
  std::string frac = (magnitude - whole * pow10(digits)).str();
  frac.insert(0, digits - frac.size(), '0');
  return (scaled < 0 ? "-" : "") + whole.str() + (digits > 0 ? "." + frac : "");
}

inline std::string fixed_string(double x, int digits = 12) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string join(const std::vector<BigInt>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += xs[i].str();
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline void render(const OutputRecord& rec, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["command"] = rec.command;
    j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rec.inputs) j["inputs"][k] = v;
    j["outputs"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rec.outputs) j["outputs"][k] = v;
    for (const auto& [k, v] : rec.enclosures) j["outputs"][k] = {v.first, v.second};
    if (!rec.columns.empty()) {
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : rec.rows) {
        nlohmann::ordered_json r;
        for (std::size_t i = 0; i < rec.columns.size(); ++i) r[rec.columns[i]] = row[i];
        j["rows"].push_back(std::move(r));
      }
    }
    j["status"] = rec.ok ? "ok" : "error";
    j["error_detail"] = rec.error_detail;
    out << j.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    if (!rec.columns.empty()) {
      for (std::size_t i = 0; i < rec.columns.size(); ++i) out << (i ? "," : "") << csv_field(rec.columns[i]);
      out << "\n";
      for (const auto& row : rec.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << "\n";
      }
      return;
    }
    out << "key,value\n";
    for (const auto& [k, v] : rec.outputs) out << csv_field(k) << "," << csv_field(v) << "\n";
    for (const auto& [k, v] : rec.enclosures) {
      out << csv_field(k + "_lo") << "," << csv_field(v.first) << "\n";
      out << csv_field(k + "_hi") << "," << csv_field(v.second) << "\n";
    }
    if (!rec.ok) out << "error," << csv_field(rec.error_detail) << "\n";
    return;
  }
  for (const auto& [k, v] : rec.outputs) out << k << ": " << v << "\n";
  for (const auto& [k, v] : rec.enclosures) out << k << ": [" << v.first << ", " << v.second << "]\n";
  if (!rec.columns.empty()) {
    for (std::size_t i = 0; i < rec.columns.size(); ++i) out << (i ? " " : "") << rec.columns[i];
    out << "\n";
    for (const auto& row : rec.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
      out << "\n";
    }
  }
  if (!rec.ok) out << "error: " << rec.error_detail << "\n";
}

struct Options {
  std::string format = "text";
  unsigned threads = 1;
};

// ---------------------------------------------------------------------------
// Subcommand bodies. Each fills `rec`; library exceptions propagate.

inline void cmd_enumerate(OutputRecord& rec, unsigned depth, const Options& opt) {
  rec.input("depth", std::to_string(depth));
  const auto vertices = enumerate_tree(depth, reduced_seeds(), opt.threads);
  rec.output("vertices", std::to_string(vertices.size()));
  rec.columns = {"depth", "word", "left", "right", "value"};
  for (const TreeVertex& v : vertices) {
    rec.rows.push_back({std::to_string(v.depth()), v.word.str(), v.triple.f1.str(), v.triple.f2.str(),
                        v.triple.f3.str()});
  }
}

inline void cmd_mu(OutputRecord& rec, const Fraction& x) {
  rec.input("x", x.str());
  const MarkovFraction m = mu(x);
  rec.output("mu", m.value.str());
  rec.output("seed", yes_no(m.is_seed));
  if (!m.is_seed) {
    rec.output("word", m.word.str());
    rec.output("depth", std::to_string(m.depth()));
  }
}

inline void cmd_epsilon(OutputRecord& rec, const DyadicRational& x) {
  rec.input("x", x.str());
  rec.output("epsilon", epsilon(x).str());
}

inline void cmd_slope(OutputRecord& rec, const Fraction& x) {
  rec.input("slope", x.str());
  const MembershipResult m = is_exceptional_slope(x);
  rec.output("exceptional", yes_no(m.exceptional));
  rec.output("normalized", m.normalization.str());
  rec.output("reduced", m.normalization.reduced.str());
  if (!m.exceptional) return;
  rec.output("witness", m.witness ? m.witness->str() : "seed");
  const BundleInvariants inv = bundle_invariants(x);
  rec.output("rank", inv.rank.str());
  rec.output("c1", inv.c1.str());
  rec.output("s", inv.s.str());
  rec.output("c2", inv.c2.str());
  rec.output("form", "(" + inv.form_a.str() + ", " + inv.form_b.str() + ", " + inv.form_c.str() + ")");
  rec.output("discriminant", inv.discriminant().str());
  rec.output("form_content", inv.content().str());
}

inline void cmd_qmark(OutputRecord& rec, const Fraction& x, const std::string& method) {
  rec.input("x", x.str());
  rec.input("method", method);
  DyadicRational v;
  if (method == "farey") {
    v = question_mark_farey(x);
  } else if (method == "salem") {
    v = question_mark_salem(x);
  } else {
    if (x.sign() < 0 || x > Fraction(1)) throw std::domain_error("question mark needs x in [0, 1], got " + x.str());
    if (x.sign() == 0 || x == Fraction(1)) {
      v = DyadicRational(x.num(), 0);
    } else {
      const TurnWord w = farey_path_to(x);
      rec.output("word", w.str());
      v = question_mark_of_word(w);
    }
  }
  rec.output("qmark", v.to_fraction().str());
  rec.output("binary", v.binary_string());
}

inline void cmd_verify(OutputRecord& rec, unsigned depth, const Options& opt) {
  rec.input("depth", std::to_string(depth));
  rec.columns = {"invariant", "passed", "total", "status"};
  bool all = true;
  for (const InvariantResult& r : run_invariant_suite(depth, opt.threads)) {
    rec.rows.push_back({r.name, std::to_string(r.passed), std::to_string(r.total), r.ok() ? "PASS" : "FAIL"});
    all = all && r.ok();
  }
  rec.output("all_passed", yes_no(all));
  if (!all) {
    rec.ok = false;
    rec.error_detail = "invariant failures";
  }
}

inline void cmd_approx_const(OutputRecord& rec, const Fraction& f) {
  rec.input("fraction", f.str());
  const ApproxConstant c = approx_constant(f);
  rec.output("constant", c.value.str());
  rec.output("minimizer", Fraction::reduce(c.a, c.b).str());
  rec.output("minimizer_a", c.a.str());
  rec.output("minimizer_b", c.b.str());
  rec.output("at_least_one_third", yes_no(c.value >= Fraction::reduce(1, 3)));
}

inline void cmd_interval(OutputRecord& rec, const Fraction& f, const std::optional<BigInt>& bound) {
  rec.input("fraction", f.str());
  const MarkovInterval iv = markov_interval(f);
  rec.enclosure("interval", iv.lo.str(), iv.hi.str());
  rec.output("length", iv.length.str());
  rec.output("lo_approx", fixed_string(iv.lo.to_double()));
  rec.output("hi_approx", fixed_string(iv.hi.to_double()));
  if (bound) {
    rec.input("freeness_bound", bound->str());
    const FreenessReport fr = interval_freeness(f, *bound);
    rec.output("free", yes_no(fr.free));
    rec.output("candidates_checked", std::to_string(fr.candidates_checked));
    std::string intruders;
    for (const Fraction& x : fr.intruders) intruders += (intruders.empty() ? "" : " ") + x.str();
    rec.output("intruders", intruders);
  }
}

inline void cmd_mcshane(OutputRecord& rec, unsigned depth, unsigned precision) {
  rec.input("depth", std::to_string(depth));
  rec.input("precision", std::to_string(precision));
  const Enclosure e = mcshane_partial_sum(depth, precision);
  rec.enclosure("enclosure", e.lo.str(), e.hi.str());
  rec.output("lo_approx", decimal_string(e.lo, precision));
  rec.output("gap_to_half_approx", decimal_string(Fraction::reduce(1, 2) - e.hi, precision + 4));
  rec.output("below_half", yes_no(e.hi < Fraction::reduce(1, 2)));
}

inline void cmd_saltus(OutputRecord& rec, const Fraction& x, unsigned depth, unsigned precision) {
  rec.input("x", x.str());
  rec.input("depth", std::to_string(depth));
  rec.input("precision", std::to_string(precision));
  const Enclosure e = saltus_mu(x, depth, precision);
  rec.enclosure("enclosure", e.lo.str(), e.hi.str());
  rec.output("lo_approx", decimal_string(e.lo, precision));
  rec.output("mu", mu(x).value.str());
}

inline void cmd_lyapunov(OutputRecord& rec, const std::string& word, unsigned steps) {
  rec.input("word", word);
  rec.input("steps", std::to_string(steps));
  const LyapunovTrajectory t =
      lyapunov_estimate(word == "const" ? PathRule::constant : PathRule::alternating, steps);
  rec.output("estimate_approx", fixed_string(t.final_estimate()));
  rec.output("ln_phi_approx", fixed_string(std::log((1.0 + std::sqrt(5.0)) / 2.0)));
  rec.columns = {"n", "ln_q_approx", "estimate_approx"};
  for (std::size_t i = 0; i < t.estimates.size(); ++i) {
    rec.rows.push_back({std::to_string(i + 1), fixed_string(t.log_q[i], 6), fixed_string(t.estimates[i])});
  }
}

inline void cmd_unicity(OutputRecord& rec, unsigned depth) {
  rec.input("depth", std::to_string(depth));
  const UnicityReport u = unicity_scan(depth);
  rec.output("fractions", std::to_string(u.vertices));
  rec.output("distinct_denominators", std::to_string(u.distinct_denominators));
  rec.output("duplicates", std::to_string(u.duplicates.size()));
  rec.output("repeated_fractions", std::to_string(u.repeated_fractions.size()));
  rec.columns = {"denominator", "numerators"};
  for (const auto& [q, ps] : u.duplicates) rec.rows.push_back({q.str(), join(ps)});
}

inline void cmd_triples(OutputRecord& rec, const std::string& name, unsigned depth) {
  rec.input("equation", name);
  rec.input("depth", std::to_string(depth));
  const auto eq = equation_by_name(name);
  if (!eq) throw std::domain_error("unsupported equation '" + name + "'");
  const GeneralizedEnumeration g = generalized_enumerate(*eq, depth);
  rec.output("coefficients", eq->str());
  rec.output("triples", std::to_string(g.triples.size()));
  rec.columns = {"depth", "x", "y", "z", "satisfies"};
  for (const auto& t : g.triples) {
    rec.rows.push_back({std::to_string(t.depth), t.values[0].str(), t.values[1].str(), t.values[2].str(),
                        yes_no(satisfies(*eq, t.values))});
  }
}

inline void cmd_congruence(OutputRecord& rec, const BigInt& q) {
  rec.input("q", q.str());
  if (q < 1) throw std::domain_error("congruence modulus must be positive");
  const auto solutions = solve_congruence(q);
  rec.output("solutions", join(solutions));
  rec.output("count", std::to_string(solutions.size()));
  std::string numerators;
  for (const Fraction& f : markov_fractions_up_to(q)) {
    if (f.den() == q) numerators += (numerators.empty() ? "" : " ") + f.num().str();
  }
  rec.output("markov_numerators", numerators);
}

inline void cmd_plot_mu(OutputRecord& rec, unsigned grid, unsigned depth) {
  rec.input("grid", std::to_string(grid));
  rec.input("depth", std::to_string(depth));
  if (grid == 0) throw std::invalid_argument("--grid must be positive");
  constexpr unsigned kPrecision = 12;
  rec.columns = {"x", "x_approx", "mu_lo", "mu_hi", "mu_approx"};
  for (unsigned i = 0; i <= grid; ++i) {
    const Fraction x = Fraction::reduce(i, grid);
    const Enclosure e = saltus_mu(x, depth, kPrecision);
    rec.rows.push_back({x.str(), fixed_string(x.to_double()), decimal_string(e.lo, kPrecision + 2),
                        decimal_string(e.hi, kPrecision + 2) , fixed_string(e.midpoint().to_double())});
  }
}

// ---------------------------------------------------------------------------

inline Fraction parse_fraction_arg(const std::string& token) { return Fraction::parse(token); }

/// Runs the CLI on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Markov fractions, exceptional slopes and their invariants", "mfrac"};
  app.require_subcommand(1);
  app.fallthrough();  // --threads may follow the subcommand
  Options opt;
  const std::vector<std::string> formats{"text", "json", "csv"};
  app.add_option("--threads", opt.threads, "worker threads (output is identical for any value)")
      ->check(CLI::Range(1U, 256U));

  std::function<void(OutputRecord&)> action;
  std::string command;
  const auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", opt.format, "text, json or csv")->check(CLI::IsMember(formats));
    sub->callback([&command, name] { command = name; });
    return sub;
  };

  // Storage for parsed arguments.
  unsigned depth = 0, precision = 0, steps = 0, grid = 0;
  std::string x_token, method = "farey", word, equation;
  std::optional<std::string> bound_token;

  CLI::App* enumerate_cmd = add("enumerate", "vertices of the Markov fraction tree");
  enumerate_cmd->add_option("--depth", depth)->required();

  CLI::App* mu_cmd = add("mu", "Frobenius parametrization mu(x) for x in [0, 1]");
  mu_cmd->add_option("x", x_token, "A/B")->required();

  CLI::App* epsilon_cmd = add("epsilon", "Drezet-Le Potier function on a dyadic M/2^N");
  epsilon_cmd->add_option("x", x_token, "M/2^N")->required();

  CLI::App* slope_cmd = add("slope", "exceptional-slope membership and bundle invariants");
  slope_cmd->add_option("slope", x_token, "P/Q")->required();

  CLI::App* qmark_cmd = add("qmark", "Minkowski question mark function");
  qmark_cmd->add_option("x", x_token, "A/B")->required();
  qmark_cmd->add_option("--method", method)->check(CLI::IsMember({"farey", "salem", "word"}));

  CLI::App* verify_cmd = add("verify", "run the invariant suite");
  verify_cmd->add_option("--depth", depth)->required();

  CLI::App* approx_cmd = add("approx-const", "approximation constant C(p/q)");
  approx_cmd->add_option("fraction", x_token, "P/Q")->required();

  CLI::App* interval_cmd = add("interval", "maximal interval free of other Markov fractions");
  interval_cmd->add_option("fraction", x_token, "P/Q")->required();
  interval_cmd->add_option("--freeness-bound", bound_token, "denominator bound for the freeness check");

  CLI::App* mcshane_cmd = add("mcshane", "enclosure of the McShane partial sum");
  mcshane_cmd->add_option("--depth", depth)->required();
  mcshane_cmd->add_option("--precision", precision)->required()->check(CLI::Range(1U, 1000U));

  CLI::App* saltus_cmd = add("saltus", "enclosure of the truncated saltus sum of mu");
  saltus_cmd->add_option("x", x_token, "A/B")->required();
  saltus_cmd->add_option("--depth", depth)->required();
  saltus_cmd->add_option("--precision", precision)->required()->check(CLI::Range(1U, 1000U));

  CLI::App* lyapunov_cmd = add("lyapunov", "Lyapunov exponent estimate along a tree path");
  lyapunov_cmd->add_option("--word", word)->required()->check(CLI::IsMember({"const", "alternating"}));
  lyapunov_cmd->add_option("--steps", steps)->required()->check(CLI::Range(1U, 10000U));

  CLI::App* unicity_cmd = add("unicity", "scan for denominators with two Markov fractions");
  unicity_cmd->add_option("--depth", depth)->required()->check(CLI::Range(0U, 19U));

  CLI::App* triples_cmd = add("triples", "mutation closure of a Markov-type equation");
  triples_cmd->add_option("--equation", equation, "markov, quadric or x3")->required();
  triples_cmd->add_option("--depth", depth)->required();

  CLI::App* congruence_cmd = add("congruence", "solutions of x^2 + 1 = 0 mod Q");
  congruence_cmd->add_option("q", x_token, "Q")->required();

  CLI::App* plot_cmd = add("plot-mu", "CSV samples of the mu step function");
  plot_cmd->add_option("--grid", grid)->required();
  plot_cmd->add_option("--depth", depth)->required()->check(CLI::Range(0U, 20U));

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (command == "plot-mu" && plot_cmd->count("--format") == 0) opt.format = "csv";

  OutputRecord rec;
  rec.command = command;
  try {
    if (command == "enumerate") {
      cmd_enumerate(rec, depth, opt);
    } else if (command == "mu") {
      cmd_mu(rec, parse_fraction_arg(x_token));
    } else if (command == "epsilon") {
      cmd_epsilon(rec, DyadicRational::parse(x_token));
    } else if (command == "slope") {
      cmd_slope(rec, parse_fraction_arg(x_token));
    } else if (command == "qmark") {
      cmd_qmark(rec, parse_fraction_arg(x_token), method);
    } else if (command == "verify") {
      cmd_verify(rec, depth, opt);
    } else if (command == "approx-const") {
      cmd_approx_const(rec, parse_fraction_arg(x_token));
    } else if (command == "interval") {
      std::optional<BigInt> bound;
      if (bound_token) bound = parse_bigint(*bound_token);
      cmd_interval(rec, parse_fraction_arg(x_token), bound);
    } else if (command == "mcshane") {
      cmd_mcshane(rec, depth, precision);
    } else if (command == "saltus") {
      cmd_saltus(rec, parse_fraction_arg(x_token), depth, precision);
    } else if (command == "lyapunov") {
      cmd_lyapunov(rec, word, steps);
    } else if (command == "unicity") {
      cmd_unicity(rec, depth);
    } else if (command == "triples") {
      cmd_triples(rec, equation, depth);
    } else if (command == "congruence") {
      cmd_congruence(rec, parse_bigint(x_token));
    } else if (command == "plot-mu") {
      cmd_plot_mu(rec, grid, depth);
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    rec.ok = false;
    rec.error_detail = e.what();
    rec.outputs.clear();
    rec.enclosures.clear();
    rec.rows.clear();
    rec.columns.clear();
    if (opt.format != "text") render(rec, opt.format, out);
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  render(rec, opt.format, out);
  return rec.ok ? kExitOk : kExitDomain;
}

}  // namespace mfrac::cli
