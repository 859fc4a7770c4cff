// Copyright 2026 The symtotient Authors
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
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>

#include "CLI11.hpp"
#include "symtot/arith.hpp"
#include "symtot/congruence.hpp"
#include "symtot/elementary.hpp"
#include "symtot/errors.hpp"
#include "symtot/totient.hpp"
#include "symtot/zeros.hpp"
#include "symtotient/cli.hpp"
#include "symtotient/parse.hpp"
#include "symtotient/records.hpp"
#include "symtotient/verify.hpp"

namespace symtot::cli {
namespace {

using Thunk = std::function<BigInt()>;

struct Options {
  std::string n, k, p, m, b, J, coeffs, mode = "joint", method = "closed", format, f = "id";
  std::string quantity, n_range, k_range, p_range;
  std::string suite = "all", budget;
  bool strict = false;
};

std::vector<std::string> names_of(const OutputRecord& rec) {
  std::vector<std::string> names;
  for (const auto& kv : rec.params) names.push_back(kv.first);
  return names;
}

Format format_or(const std::string& text, Format fallback) {
  return text.empty() ? fallback : parse_format(text);
}

unsigned parse_arity(const std::string& text) {
  const auto k = parse_u64(text);
  if (k < 1 || k > 64) throw InvalidArgument("k must lie in [1, 64]");
  return static_cast<unsigned>(k);
}

std::uint64_t parse_prime(const std::string& text) {
  const auto p = parse_u64(text);
  if (!is_prime(p)) throw InvalidArgument("p must be prime, got " + text);
  return p;
}

GcdMode parse_mode(const std::string& text) {
  if (text == "joint") return GcdMode::Joint;
  if (text == "individual") return GcdMode::Individual;
  throw InvalidArgument("unknown mode '" + text + "'");
}

std::string index_param(const SymSystem& sys) { return format_indices(sys.indices()); }

// Writes one evaluation. A missing closed form falls back to the oracle and
// is labelled as such. Returns the exit status for this record.
int emit(RecordWriter& w, OutputRecord rec, Method method, const std::optional<Thunk>& closed,
         const Thunk& brute, std::ostream& err) {
  if (!closed || method == Method::Brute) {
    rec.value = to_decimal(brute());
    rec.method = Method::Brute;
    w.write(rec);
    return kExitOk;
  }
  if (method == Method::Closed) {
    rec.value = to_decimal((*closed)());
    rec.method = Method::Closed;
    w.write(rec);
    return kExitOk;
  }
  const BigInt c = (*closed)();
  const BigInt b = brute();
  if (c == b) {
    rec.value = to_decimal(c);
    rec.method = Method::Both;
    w.write(rec);
    return kExitOk;
  }
  OutputRecord rb = rec;
  rec.value = to_decimal(c);
  rec.method = Method::Closed;
  rb.value = to_decimal(b);
  rb.method = Method::Brute;
  w.write(rec);
  w.write(rb);
  err << "disagreement: closed form " << rec.value << " vs brute force " << rb.value << '\n';
  return kExitDisagreement;
}

int write_single(std::ostream& out, const Options& o, OutputRecord rec,
                 const std::optional<Thunk>& closed, const Thunk& brute, std::ostream& err) {
  const Method method = parse_method(o.method);
  RecordWriter w(out, format_or(o.format, Format::Text), names_of(rec));
  return emit(w, std::move(rec), method, closed, brute, err);
}

int cmd_totient(const Options& o, const Budget& budget, std::ostream& out, std::ostream& err) {
  const unsigned k = parse_arity(o.k);
  const TotientSpec spec{SymSystem(k, parse_indices(o.J, k), parse_mode(o.mode)), parse_u64(o.n)};
  OutputRecord rec{spec.system.mode() == GcdMode::Joint ? "varphi" : "phi",
                   {{"n", o.n}, {"k", o.k}, {"J", index_param(spec.system)}, {"mode", o.mode}},
                   {},
                   Method::Closed};
  return write_single(
      out, o, std::move(rec), Thunk([&] { return totient(spec, budget); }),
      [&] { return totient_bruteforce(spec, budget); }, err);
}

int cmd_zeros(const Options& o, const Budget& budget, std::ostream& out, std::ostream& err) {
  const unsigned k = parse_arity(o.k);
  const std::uint64_t p = parse_prime(o.p);
  const SymSystem sys(k, parse_indices(o.J, k));
  OutputRecord rec{"N", {{"p", o.p}, {"k", o.k}, {"J", index_param(sys)}}, {}, Method::Closed};
  std::optional<Thunk> closed;
  if (closed_zero_count(sys, p)) closed = [&] { return *closed_zero_count(sys, p); };
  return write_single(out, o, std::move(rec), closed,
                      [&] { return count_zeros_bruteforce(sys, p, budget); }, err);
}

int cmd_congruence(const Options& o, const Budget& budget, std::ostream& out,
                   std::ostream& err) {
  auto coeffs = parse_int_list(o.coeffs);
  const auto k = static_cast<unsigned>(coeffs.size());
  const CongruenceProblem prob(std::move(coeffs), parse_i64(o.b), parse_u64(o.n),
                               SymSystem(k, parse_indices(o.J, k), GcdMode::Individual));
  OutputRecord rec{"congruence",
                   {{"coeffs", o.coeffs}, {"b", o.b}, {"n", o.n},
                    {"J", index_param(prob.constraint())}},
                   {},
                   Method::Closed};
  std::optional<Thunk> closed;
  if (std::gcd(prob.rhs(), prob.modulus()) == 1)
    closed = [&] { return count_unit_rhs(prob, budget); };
  return write_single(out, o, std::move(rec), closed,
                      [&] { return count_bruteforce(prob, budget); }, err);
}

ArithmeticFn parse_fn(const std::string& name) {
  if (name == "id") return [](std::uint64_t d) { return BigInt(d); };
  if (name == "one") return [](std::uint64_t) { return BigInt(1); };
  if (name == "tau") return [](std::uint64_t d) { return BigInt(divisor_count(d)); };
  throw InvalidArgument("unknown function '" + name + "' (expected id, one or tau)");
}

int cmd_menon(const Options& o, const Budget& budget, std::ostream& out, std::ostream& err) {
  const unsigned k = parse_arity(o.k);
  const SymSystem sys(k, parse_indices(o.J, k), GcdMode::Individual);
  const auto n = parse_u64(o.n);
  const auto f = parse_fn(o.f);
  const std::vector<std::pair<std::string, std::string>> params{
      {"n", o.n}, {"k", o.k}, {"J", index_param(sys)}, {"f", o.f}};
  const BigInt lhs = menon_lhs(n, sys, f, budget);
  const BigInt rhs = menon_rhs(n, sys, f, budget);
  RecordWriter w(out, format_or(o.format, Format::Text), {"n", "k", "J", "f"});
  w.write({"menon_lhs", params, to_decimal(lhs), Method::Brute});
  w.write({"menon_rhs", params, to_decimal(rhs), Method::Closed});
  if (lhs != rhs) {
    err << "disagreement: lhs " << lhs << " vs rhs " << rhs << '\n';
    return kExitDisagreement;
  }
  return kExitOk;
}

BigInt rounded_direct(std::int64_t m, std::uint64_t n, const SymSystem& sys,
                      const Budget& budget) {
  const auto direct = generalized_ramanujan_direct(m, n, sys, budget);
  const double r = std::round(direct.real());
  if (std::abs(direct - r) >= 1e-6)
    throw InvariantViolation("exponential sum is not within 1e-6 of an integer");
  return BigInt(static_cast<long long>(r));
}

int cmd_ramanujan(const Options& o, const Budget& budget, std::ostream& out,
                  std::ostream& err) {
  const unsigned k = parse_arity(o.k);
  const SymSystem sys(k, parse_indices(o.J, k), GcdMode::Individual);
  const auto m = parse_i64(o.m);
  const auto n = parse_u64(o.n);
  OutputRecord rec{"ramanujan", {{"m", o.m}, {"n", o.n}, {"k", o.k}, {"J", index_param(sys)}},
                   {}, Method::Closed};
  return write_single(
      out, o, std::move(rec), Thunk([&] { return generalized_ramanujan(m, n, sys, budget); }),
      [&] { return rounded_direct(m, n, sys, budget); }, err);
}

// A tabulated quantity: parameter names in iteration order, each drawn from
// the range flag of the same letter, plus fixed parameters.
struct TableQuantity {
  std::vector<char> axes;
  std::function<std::optional<Thunk>(const std::map<char, std::uint64_t>&)> closed;
  std::function<Thunk(const std::map<char, std::uint64_t>&)> brute;
};

std::vector<unsigned> one_to(unsigned k) {
  std::vector<unsigned> J(k);
  std::iota(J.begin(), J.end(), 1U);
  return J;
}

unsigned arity_at(const std::map<char, std::uint64_t>& pt) {
  const auto k = pt.at('k');
  if (k < 1 || k > 64) throw InvalidArgument("k must lie in [1, 64]");
  return static_cast<unsigned>(k);
}

std::map<std::string, TableQuantity> table_quantities(const Options& o, const Budget& budget) {
  using Pt = std::map<char, std::uint64_t>;
  std::map<std::string, TableQuantity> q;
  auto zeros_entry = [&](std::vector<unsigned> J, ZeroCount (*fn)(unsigned, std::uint64_t)) {
    return TableQuantity{
        {'p', 'k'},
        [fn](const Pt& pt) -> std::optional<Thunk> {
          return Thunk([fn, pt] { return fn(arity_at(pt), pt.at('p')); });
        },
        [J, &budget](const Pt& pt) -> Thunk {
          return [J, pt, &budget] {
            return count_zeros_bruteforce(SymSystem(arity_at(pt), J), pt.at('p'), budget);
          };
        }};
  };
  q["N_e2"] = zeros_entry({2}, closed_N_e2);
  q["N_e1e2"] = zeros_entry({1, 2}, closed_N_e1e2);
  auto totient_entry = [&](std::function<BigInt(unsigned, std::uint64_t)> fn,
                           std::function<SymSystem(unsigned)> sys, bool joint) {
    return TableQuantity{
        {'k', 'n'},
        [fn](const Pt& pt) -> std::optional<Thunk> {
          return Thunk([fn, pt] { return fn(arity_at(pt), pt.at('n')); });
        },
        [sys, joint, &budget](const Pt& pt) -> Thunk {
          return [sys, joint, pt, &budget] {
            const auto s = sys(arity_at(pt));
            return joint ? varphi_bruteforce(s, pt.at('n'), budget)
                         : phi_bruteforce(s, pt.at('n'), budget);
          };
        }};
  };
  q["jordan"] = totient_entry([](unsigned k, std::uint64_t n) { return jordan_totient(k, n); },
                              [](unsigned k) { return SymSystem(k, one_to(k)); }, true);
  q["phi_12"] = totient_entry(closed_phi_12, [](unsigned k) { return SymSystem(k, {1, 2}); },
                              false);
  q["toth"] = totient_entry(toth_phi_1k, [](unsigned k) { return SymSystem(k, {1, k}); }, false);
  const std::string J = o.J;
  q["varphi"] = totient_entry(
      [J, &budget](unsigned k, std::uint64_t n) {
        return varphi(SymSystem(k, parse_indices(J, k)), n, budget);
      },
      [J](unsigned k) { return SymSystem(k, parse_indices(J, k)); }, true);
  q["phi"] = totient_entry(
      [J, &budget](unsigned k, std::uint64_t n) {
        return phi(SymSystem(k, parse_indices(J, k)), n, budget);
      },
      [J](unsigned k) { return SymSystem(k, parse_indices(J, k)); }, false);
  q["euler_phi"] = TableQuantity{
      {'n'},
      [](const Pt& pt) -> std::optional<Thunk> {
        return Thunk([pt] { return euler_phi(pt.at('n')); });
      },
      [&budget](const Pt& pt) -> Thunk {
        return [pt, &budget] { return varphi_bruteforce(SymSystem(1, {1}), pt.at('n'), budget); };
      }};
  q["phi_123"] = TableQuantity{
      {'n'},
      [](const Pt& pt) -> std::optional<Thunk> {
        return Thunk([pt] { return closed_phi_123(pt.at('n')); });
      },
      [&budget](const Pt& pt) -> Thunk {
        return [pt, &budget] {
          return phi_bruteforce(SymSystem(3, {1, 2, 3}), pt.at('n'), budget);
        };
      }};
  const std::int64_t m = o.m.empty() ? 1 : parse_i64(o.m);
  auto restricted_entry = [&](unsigned k, std::vector<unsigned> Jr,
                              ZeroCount (*fn)(std::int64_t, std::uint64_t)) {
    return TableQuantity{
        {'n'},
        [fn, m](const Pt& pt) -> std::optional<Thunk> {
          return Thunk([fn, m, pt] { return fn(m, pt.at('n')); });
        },
        [k, Jr, m, &budget](const Pt& pt) -> Thunk {
          return [k, Jr, m, pt, &budget] {
            const CongruenceProblem prob(std::vector<std::int64_t>(k, 1), m, pt.at('n'),
                                         SymSystem(k, Jr, GcdMode::Individual));
            return count_bruteforce(prob, budget);
          };
        }};
  };
  q["g3"] = restricted_entry(3, {2, 3}, g3_closed);
  q["g4"] = restricted_entry(4, {3, 4}, g4_closed);
  return q;
}

std::string quantity_list(const std::map<std::string, TableQuantity>& q) {
  std::string s;
  for (const auto& [name, _] : q) s += (s.empty() ? "" : ", ") + name;
  return s;
}

int cmd_table(const Options& o, const Budget& budget, std::ostream& out, std::ostream& err) {
  const auto quantities = table_quantities(o, budget);
  const auto it = quantities.find(o.quantity);
  if (it == quantities.end())
    throw InvalidArgument("unknown quantity '" + o.quantity + "' (one of " +
                          quantity_list(quantities) + ")");
  const TableQuantity& tq = it->second;
  const Method method = parse_method(o.method);

  std::vector<std::vector<std::uint64_t>> axis_values;
  std::vector<std::string> param_names;
  for (char axis : tq.axes) {
    const std::string& text = axis == 'n' ? o.n_range : axis == 'k' ? o.k_range : o.p_range;
    if (text.empty()) throw InvalidArgument(std::string("missing --") + axis + "-range");
    const Range r = parse_range(text);
    std::vector<std::uint64_t> values;
    for (std::uint64_t v = r.lo; !r.empty() && v <= r.hi; ++v)
      if (axis != 'p' || is_prime(v)) values.push_back(v);
    axis_values.push_back(std::move(values));
    param_names.emplace_back(1, axis);
  }
  std::vector<std::pair<std::string, std::string>> fixed;
  if (o.quantity == "varphi" || o.quantity == "phi") {
    if (o.J.empty()) throw InvalidArgument("--J is required for " + o.quantity);
    fixed.emplace_back("J", o.J);
  }
  if (o.quantity == "g3" || o.quantity == "g4") fixed.emplace_back("m", o.m.empty() ? "1" : o.m);
  for (const auto& kv : fixed) param_names.push_back(kv.first);

  RecordWriter w(out, format_or(o.format, Format::Csv), param_names);
  int status = kExitOk;
  const bool any_empty = std::any_of(axis_values.begin(), axis_values.end(),
                                     [](const auto& v) { return v.empty(); });
  std::vector<std::size_t> idx(axis_values.size(), 0);
  auto advance = [&] {
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < axis_values[i].size()) return true;
      idx[i] = 0;
    }
    return false;
  };
  if (!any_empty) {
    do {
      std::map<char, std::uint64_t> pt;
      OutputRecord rec{o.quantity, {}, {}, Method::Closed};
      for (std::size_t i = 0; i < idx.size(); ++i) {
        pt[tq.axes[i]] = axis_values[i][idx[i]];
        rec.params.emplace_back(std::string(1, tq.axes[i]),
                                std::to_string(axis_values[i][idx[i]]));
      }
      for (const auto& kv : fixed) rec.params.push_back(kv);
      status = std::max(status, emit(w, std::move(rec), method, tq.closed(pt), tq.brute(pt), err));
    } while (advance());
  }
  w.finish();
  return status;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto& suites = suite_names();
  if (std::find(suites.begin(), suites.end(), o.suite) == suites.end())
    throw InvalidArgument("unknown suite '" + o.suite + "'");
  Budget budget = Budget::from_env();
  if (!o.budget.empty()) budget.max_tuples = parse_u64(o.budget);

  constexpr std::size_t kShown = 5;
  std::size_t failed = 0, skipped = 0, run = 0;
  for (const auto& entry : manifest()) {
    if (o.suite != "all" && o.suite != entry.suite) continue;
    const auto start = std::chrono::steady_clock::now();
    const Tally t = run_entry(entry, budget);
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    ++run;
    out << t.theorem << ": " << t.passed << '/' << t.checked << (t.ok() ? " ok" : " FAILED");
    if (!t.skipped.empty()) out << "; " << t.skipped.size() << " skipped";
    out << '\n';
    for (std::size_t i = 0; i < t.failures.size() && i < kShown; ++i)
      out << "  fail " << t.failures[i] << '\n';
    if (t.failures.size() > kShown) out << "  ... " << t.failures.size() - kShown << " more failures\n";
    for (std::size_t i = 0; i < t.skipped.size() && i < kShown; ++i)
      out << "  skipped " << t.skipped[i] << '\n';
    if (t.skipped.size() > kShown) out << "  ... " << t.skipped.size() - kShown << " more skipped\n";
    err << "[verify] " << t.theorem << " " << std::fixed << std::setprecision(2) << took.count()
        << " s\n";
    if (!t.ok()) ++failed;
    if (!t.skipped.empty()) ++skipped;
  }
  out << "summary: " << run - failed << '/' << run << " theorems ok";
  if (skipped) out << ", " << skipped << " with skipped cells";
  out << '\n';
  if (failed) return kExitDisagreement;
  if (skipped && o.strict) return kExitResource;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized totients, zero counts over F_p and restricted congruences"};
  app.name("symtotient");
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* s) {
    s->add_option("--format", o.format, "Output format: text, csv or jsonl");
  };
  auto add_method = [&o](CLI::App* s) {
    s->add_option("--method", o.method, "closed, brute or both")->capture_default_str();
  };

  auto* tot = app.add_subcommand("totient", "Evaluate varphi_J(n) or phi_J(n)");
  tot->add_option("--n", o.n, "Modulus")->required();
  tot->add_option("--k", o.k, "Arity")->required();
  tot->add_option("--J", o.J, "Indices: comma list or a..b (b may be k)")->required();
  tot->add_option("--mode", o.mode, "joint (varphi) or individual (phi)")->capture_default_str();
  add_method(tot);
  add_format(tot);

  auto* zer = app.add_subcommand("zeros", "Count common zeros of e_j, j in J, over F_p^k");
  zer->add_option("--p", o.p, "Prime")->required();
  zer->add_option("--k", o.k, "Arity")->required();
  zer->add_option("--J", o.J, "Indices")->required();
  add_method(zer);
  add_format(zer);

  auto* con = app.add_subcommand("congruence", "Count restricted solutions of a.x = b mod n");
  con->add_option("--coeffs", o.coeffs, "Comma list of coefficients")->required();
  con->add_option("--b", o.b, "Right-hand side")->required();
  con->add_option("--n", o.n, "Modulus")->required();
  con->add_option("--J", o.J, "Indices with gcd(e_j(x), n) = 1")->required();
  add_method(con);
  add_format(con);

  auto* men = app.add_subcommand("menon", "Both sides of the Menon-type identity");
  men->add_option("--n", o.n, "Modulus")->required();
  men->add_option("--k", o.k, "Arity")->required();
  men->add_option("--J", o.J, "Indices")->required();
  men->add_option("--f", o.f, "id, one or tau")->capture_default_str();
  add_format(men);

  auto* ram = app.add_subcommand("ramanujan", "Generalized Ramanujan sum");
  ram->add_option("--m", o.m, "Frequency")->required();
  ram->add_option("--n", o.n, "Modulus")->required();
  ram->add_option("--k", o.k, "Arity")->required();
  ram->add_option("--J", o.J, "Indices")->required();
  add_method(ram);
  add_format(ram);

  auto* tab = app.add_subcommand("table", "Tabulate a quantity over parameter ranges");
  tab->add_option("--quantity", o.quantity, "Quantity name")->required();
  tab->add_option("--n-range", o.n_range, "a..b");
  tab->add_option("--k-range", o.k_range, "a..b");
  tab->add_option("--p-range", o.p_range, "a..b, primes only");
  tab->add_option("--J", o.J, "Indices for varphi and phi");
  tab->add_option("--m", o.m, "Right-hand side for g3 and g4 (default 1)");
  add_method(tab);
  add_format(tab);

  auto* ver = app.add_subcommand("verify", "Run the closed-form versus oracle sweeps");
  ver->add_option("--suite", o.suite, "all, symfield, totient, menon or congruence")
      ->capture_default_str();
  ver->add_option("--budget", o.budget, "Tuple cap for brute-force enumeration");
  ver->add_flag("--strict", o.strict, "Treat skipped cells as failure");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Budget budget = Budget::from_env();
    if (tot->parsed()) return cmd_totient(o, budget, out, err);
    if (zer->parsed()) return cmd_zeros(o, budget, out, err);
    if (con->parsed()) return cmd_congruence(o, budget, out, err);
    if (men->parsed()) return cmd_menon(o, budget, out, err);
    if (ram->parsed()) return cmd_ramanujan(o, budget, out, err);
    if (tab->parsed()) return cmd_table(o, budget, out, err);
    if (ver->parsed()) return cmd_verify(o, out, err);
  } catch (const BudgetExceeded& e) {
    err << "resource error: " << e.what() << '\n';
    return kExitResource;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitDisagreement;
  }
  return kExitUsage;
}

}  // namespace symtot::cli
