// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "support/oracle.hpp"
#include "wpcl/archlib.hpp"
#include "wpcl/errors.hpp"
#include "wpcl/normal_form.hpp"
#include "wpcl/pvm.hpp"
#include "wpcl/semantics.hpp"
#include "wpcl/textio.hpp"

using namespace wpcl;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << detail << "\n";
  if (!ok) ++failures;
}

PortSet ports_of(int n) {
  std::vector<std::string> names = {"p", "q", "r"};
  names.resize(n);
  return PortSet(std::move(names));
}

const std::vector<std::string>& monoids() { return builtin_monoid_names(); }

// ---------------------------------------------------------------------------
// 1. Normal forms evaluate exactly like the formulas they came from.
// ---------------------------------------------------------------------------

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  int checked = 0, skipped = 0;
  std::string fail;
  for (const std::string& name : monoids()) {
    const PvMonoid& m = builtin_monoid(name);
    for (int np = 1; np <= 3 && fail.empty(); ++np) {
      PortSet ports = ports_of(np);
      oracle::Rng r(9100 + 10 * np + checked);
      int done = 0, attempts = 0;
      while (done < 56 && attempts < 160) {
        ++attempts;
        WpclPtr z =
            oracle::random_wpcl(r, ports, m, 4, {.allow_fullval = true});
        Fnf nf;
        try {
          nf = normalize(z, ports, m);
        } catch (const ResourceError&) {
          ++skipped;  // guard refused, not a semantic failure
          continue;
        }
        SemanticTable tab =
            semantic_table(lower_full_valuations(z, ports, m), ports, m);
        for (const auto& [gamma, v] : tab)
          if (!(fnf_value_at(nf, gamma, m) == v)) {
            fail = "disagreement under " + name + " on " +
                   print_wpcl(z, ports) + " at " +
                   print_configuration(gamma, ports);
            break;
          }
        if (!fail.empty()) break;
        ++done;
        ++checked;
      }
    }
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::ostringstream d;
  d << "normalize preserves semantics on " << checked
    << " random formulas (3 monoids, depth <= 4, |P| <= 3, " << skipped
    << " guard-skipped) in " << secs << "s";
  if (!fail.empty()) d << "; " << fail;
  report(1, fail.empty() && checked >= 500 && secs < 120.0, d.str());
}

// ---------------------------------------------------------------------------
// 2. The equivalence decider agrees with exhaustive table comparison.
// ---------------------------------------------------------------------------

void criterion2() {
  int random_pairs = 0, built_pairs = 0, mismatches = 0;
  for (const std::string& name : monoids()) {
    const PvMonoid& m = builtin_monoid(name);
    for (int np = 1; np <= 2; ++np) {
      PortSet ports = ports_of(np);
      oracle::Rng r(4800 + np);
      for (int i = 0; i < 35; ++i) {
        WpclPtr a = oracle::random_wpcl(r, ports, m, 3,
                                        {.allow_fullval = i % 2 == 0});
        WpclPtr b = oracle::random_wpcl(r, ports, m, 3,
                                        {.allow_fullval = i % 2 == 0});
        bool eq = equivalent(a, b, ports, m);
        bool tab = semantic_table(lower_full_valuations(a, ports, m), ports,
                                  m) ==
                   semantic_table(lower_full_valuations(b, ports, m), ports,
                                  m);
        if (eq != tab) ++mismatches;
        ++random_pairs;
      }
    }
  }
  // pairs equal by construction, rewritten along the algebraic laws
  for (const std::string& name : monoids()) {
    const PvMonoid& m = builtin_monoid(name);
    PortSet ports = ports_of(2);
    oracle::Rng r(5900);
    for (int i = 0; i < 3; ++i) {
      WpclPtr z1 = oracle::random_wpcl(r, ports, m, 2, {});
      WpclPtr z2 = oracle::random_wpcl(r, ports, m, 2, {});
      WpclPtr z3 = oracle::random_wpcl(r, ports, m, 2, {});
      std::vector<std::pair<WpclPtr, WpclPtr>> pairs = {
          {wpcl_coalesce(z1, z2), wpcl_coalesce(z2, z1)},
          {wpcl_coalesce(wpcl_coalesce(z1, z2), z3),
           wpcl_coalesce(z1, wpcl_coalesce(z2, z3))},
          {wpcl_otimes(z1, wpcl_oplus(z2, z3)),
           wpcl_oplus(wpcl_otimes(z1, z2), wpcl_otimes(z1, z3))},
          {wpcl_coalesce(wpcl_oplus(z1, z2), z3),
           wpcl_oplus(wpcl_coalesce(z1, z3), wpcl_coalesce(z2, z3))},
          {wpcl_closure(z1),
           wpcl_oplus(z1, wpcl_coalesce(z1, wpcl_const(m.one())))},
          {wpcl_coalesce(z1, wpcl_const(m.zero())), wpcl_const(m.zero())},
      };
      for (const auto& [a, b] : pairs) {
        if (!equivalent(a, b, ports, m)) ++mismatches;
        if (!(semantic_table(lower_full_valuations(a, ports, m), ports, m) ==
              semantic_table(lower_full_valuations(b, ports, m), ports, m)))
          ++mismatches;
        ++built_pairs;
      }
    }
  }
  std::ostringstream d;
  d << "decider matches table equality on " << random_pairs
    << " random and agrees on " << built_pairs
    << " constructed-equivalent pairs, " << mismatches << " mismatches";
  report(2, random_pairs >= 200 && built_pairs >= 50 && mismatches == 0,
         d.str());
}

// ---------------------------------------------------------------------------
// 3. The algebraic laws hold under their hypotheses; the known
//    non-distributivity fails as documented.
// ---------------------------------------------------------------------------

struct Law {
  std::string name;
  std::function<bool(const MonoidFlags&)> gate;
  std::function<std::pair<WpclPtr, WpclPtr>(oracle::Rng&, const PortSet&,
                                            const PvMonoid&)>
      make;
};

void criterion3() {
  PortSet ports = ports_of(2);
  auto sub = [](oracle::Rng& r, const PortSet& p, const PvMonoid& m) {
    return oracle::random_wpcl(r, p, m, 2, {});
  };
  std::vector<Law> laws = {
      {"coalesce-zero-annihilates", [](const MonoidFlags&) { return true; },
       [&](oracle::Rng& r, const PortSet& p, const PvMonoid& m) {
         WpclPtr z = sub(r, p, m);
         return std::pair{wpcl_coalesce(z, wpcl_const(m.zero())),
                          wpcl_const(m.zero())};
       }},
      {"coalesce-commutes",
       [](const MonoidFlags& f) { return f.otimes_commutative; },
       [&](oracle::Rng& r, const PortSet& p, const PvMonoid& m) {
         WpclPtr a = sub(r, p, m), b = sub(r, p, m);
         return std::pair{wpcl_coalesce(a, b), wpcl_coalesce(b, a)};
       }},
      {"coalesce-associates",
       [](const MonoidFlags& f) {
         return f.otimes_associative && f.left_oplus_distributive &&
                f.right_oplus_distributive;
       },
       [&](oracle::Rng& r, const PortSet& p, const PvMonoid& m) {
         WpclPtr a = sub(r, p, m), b = sub(r, p, m), c = sub(r, p, m);
         return std::pair{wpcl_coalesce(wpcl_coalesce(a, b), c),
                          wpcl_coalesce(a, wpcl_coalesce(b, c))};
       }},
      {"product-distributes-left",
       [](const MonoidFlags& f) { return f.left_oplus_distributive; },
       [&](oracle::Rng& r, const PortSet& p, const PvMonoid& m) {
         WpclPtr z = sub(r, p, m), a = sub(r, p, m), b = sub(r, p, m);
         return std::pair{
             wpcl_otimes(z, wpcl_oplus(a, b)),
             wpcl_oplus(wpcl_otimes(z, a), wpcl_otimes(z, b))};
       }},
      {"product-distributes-right",
       [](const MonoidFlags& f) { return f.right_oplus_distributive; },
       [&](oracle::Rng& r, const PortSet& p, const PvMonoid& m) {
         WpclPtr z = sub(r, p, m), a = sub(r, p, m), b = sub(r, p, m);
         return std::pair{
             wpcl_otimes(wpcl_oplus(a, b), z),
             wpcl_oplus(wpcl_otimes(a, z), wpcl_otimes(b, z))};
       }},
      {"coalesce-distributes-right",
       [](const MonoidFlags& f) { return f.left_oplus_distributive; },
       [&](oracle::Rng& r, const PortSet& p, const PvMonoid& m) {
         WpclPtr z = sub(r, p, m), a = sub(r, p, m), b = sub(r, p, m);
         return std::pair{
             wpcl_coalesce(z, wpcl_oplus(a, b)),
             wpcl_oplus(wpcl_coalesce(z, a), wpcl_coalesce(z, b))};
       }},
      {"coalesce-distributes-left",
       [](const MonoidFlags& f) { return f.right_oplus_distributive; },
       [&](oracle::Rng& r, const PortSet& p, const PvMonoid& m) {
         WpclPtr z = sub(r, p, m), a = sub(r, p, m), b = sub(r, p, m);
         return std::pair{
             wpcl_coalesce(wpcl_oplus(a, b), z),
             wpcl_oplus(wpcl_coalesce(a, z), wpcl_coalesce(b, z))};
       }},
      {"star-fixes-constants",
       [](const MonoidFlags& f) {
         return f.left_val_distributive && f.idempotent;
       },
       [&](oracle::Rng& r, const PortSet&, const PvMonoid&) {
         Value d = oracle::random_finite(r);
         return std::pair{wpcl_star(wpcl_const(d)), wpcl_const(d)};
       }},
      {"closure-commutes-with-star",
       [](const MonoidFlags& f) { return f.oplus_preservative; },
       [&](oracle::Rng& r, const PortSet& p, const PvMonoid& m) {
         WpclPtr z = sub(r, p, m);
         return std::pair{wpcl_closure(wpcl_star(z)),
                          wpcl_star(wpcl_closure(z))};
       }},
      {"interaction-filters-coalesce",
       [](const MonoidFlags& f) {
         return f.left_oplus_distributive && f.otimes_commutative &&
                f.otimes_associative;
       },
       [&](oracle::Rng& r, const PortSet& p, const PvMonoid& m) {
         WpclPtr phi = wpcl_pcl(pcl_pil(oracle::random_pil(r, p, 2)));
         WpclPtr a = sub(r, p, m), b = sub(r, p, m);
         return std::pair{
             wpcl_otimes(phi, wpcl_coalesce(a, b)),
             wpcl_coalesce(wpcl_otimes(phi, a), wpcl_otimes(phi, b))};
       }},
  };

  int instances = 0, violations = 0;
  std::vector<std::string> untested;
  for (const Law& law : laws) {
    bool ran = false;
    for (const std::string& name : monoids()) {
      const PvMonoid& m = builtin_monoid(name);
      if (!law.gate(m.flags())) continue;
      ran = true;
      oracle::Rng r(7300 + instances);
      for (int i = 0; i < 100; ++i) {
        auto [lhs, rhs] = law.make(r, ports, m);
        SemanticTable ta =
            semantic_table(lower_full_valuations(lhs, ports, m), ports, m);
        SemanticTable tb =
            semantic_table(lower_full_valuations(rhs, ports, m), ports, m);
        if (!(ta == tb)) ++violations;
        ++instances;
      }
    }
    if (!ran) untested.push_back(law.name);
  }

  // The documented counterexample: a non-boolean factor does not pass
  // through a coalescing (max-avg-plus, gamma = {{p},{q}}).
  const PvMonoid& m = builtin_monoid("max-avg-plus");
  WpclPtr lhs = wpcl_otimes(wpcl_const(Value(2)),
                            wpcl_coalesce(wpcl_const(Value(1)),
                                          wpcl_const(Value(1))));
  WpclPtr rhs = wpcl_coalesce(wpcl_otimes(wpcl_const(Value(2)),
                                          wpcl_const(Value(1))),
                              wpcl_otimes(wpcl_const(Value(2)),
                                          wpcl_const(Value(1))));
  Configuration gamma({Interaction{1}, Interaction{2}});
  bool counterexample = wpcl_eval(gamma, lhs, m) == Value(4) &&
                        wpcl_eval(gamma, rhs, m) == Value(6) &&
                        !equivalent(lhs, rhs, ports, m);

  std::ostringstream d;
  d << laws.size() << " laws, " << instances
    << " instantiations exhaustively checked over C(P), |P| = 2, "
    << violations << " violations; counterexample 4 != 6 "
    << (counterexample ? "confirmed" : "NOT confirmed");
  if (!untested.empty()) d << "; no qualifying monoid for " << untested[0];
  report(3, violations == 0 && untested.empty() && counterexample, d.str());
}

// ---------------------------------------------------------------------------
// 4. Direct closure evaluation equals evaluating the expansion.
// ---------------------------------------------------------------------------

void criterion4() {
  int checked = 0, wrong = 0;
  for (const std::string& name : monoids()) {
    const PvMonoid& m = builtin_monoid(name);
    for (int np = 1; np <= 3; ++np) {
      PortSet ports = ports_of(np);
      oracle::Rng r(3300 + np);
      for (int i = 0; i < 12; ++i) {
        WpclPtr z = lower_full_valuations(
            oracle::random_wpcl(r, ports, m, 3, {.allow_fullval = true}),
            ports, m);
        WpclPtr expanded =
            wpcl_oplus(z, wpcl_coalesce(z, wpcl_const(m.one())));
        for (const Configuration& g : all_configurations(ports)) {
          if (!(closure_eval(z, g, m) == wpcl_eval(g, expanded, m))) ++wrong;
        }
        ++checked;
      }
    }
  }
  std::ostringstream d;
  d << "closure shortcut matches the expansion for " << checked
    << " formulas over every configuration, " << wrong << " disagreements";
  report(4, checked >= 100 && wrong == 0, d.str());
}

// ---------------------------------------------------------------------------
// 5. The documented five-term star normal form.
// ---------------------------------------------------------------------------

void criterion5() {
  PortSet ports = ports_of(3);
  const PvMonoid& m = builtin_monoid("max-avg-plus");
  WpclPtr zeta = parse_wpcl(
      "( w(1) (x) [m: p] (#) w(2) (x) ([m: q] (+) [m: r]) )"
      " (+) w(4) (x) [m: p . q + m: q . r]",
      ports);

  auto cfg = [&](std::initializer_list<PortMask> masks) {
    std::vector<Interaction> xs;
    for (PortMask s : masks) xs.push_back(Interaction{s});
    return Configuration(std::move(xs));
  };
  // ports p=1, q=2, r=4; interactions {p}, {q}, {r}, {p,q}, {q,r}
  Fnf base = normalize(zeta, ports, m);
  bool base_ok =
      !base.is_constant() && base.term_list().size() == 3 &&
      base == Fnf::terms({{Value(3), cfg({1, 2})},
                          {Value(3), cfg({1, 4})},
                          {Value(4), cfg({3, 6})}},
                         m);

  Fnf starred = normalize(wpcl_star(zeta), ports, m);
  Fnf expected = Fnf::terms({{Value(3), cfg({1, 2})},
                             {Value(7, 2), cfg({1, 2, 3, 6})},
                             {Value(7, 2), cfg({1, 4, 3, 6})},
                             {Value(3), cfg({1, 4})},
                             {Value(4), cfg({3, 6})}},
                            m);
  bool star_ok = starred == expected;

  // cross-check the five-term polynomial against the evaluator
  bool table_ok = true;
  SemanticTable tab = semantic_table(wpcl_star(zeta), ports, m);
  for (const auto& [gamma, v] : tab)
    if (!(fnf_value_at(starred, gamma, m) == v)) table_ok = false;

  std::ostringstream d;
  d << "worked example: base form "
    << (base_ok ? "has" : "DOES NOT have") << " the three terms, star form "
    << (star_ok ? "has" : "DOES NOT have")
    << " the five terms with values {3, 3, 4, 7/2, 7/2}, evaluator "
    << (table_ok ? "agrees" : "disagrees");
  report(5, base_ok && star_ok && table_ok, d.str());
}

// ---------------------------------------------------------------------------
// 6. Architecture fixtures reproduce the documented numbers.
// ---------------------------------------------------------------------------

Value eval_fixture(const ArchFixture& fx, const char* monoid) {
  const PvMonoid& m = builtin_monoid(monoid);
  return wpcl_eval(fx.config, lower_full_valuations(fx.formula, fx.ports, m),
                   m);
}

Value maj_of(const std::vector<Value>& xs) {
  std::map<Value, int> freq;
  for (const Value& x : xs) ++freq[x];
  Value best = xs.front();
  int count = 0;
  for (const auto& [v, c] : freq)
    if (c > count || (c == count && best < v)) best = v, count = c;
  return best;
}

void criterion6() {
  WeightMap ms = {{"s1,m1", Value(4)},
                  {"s1,m2", Value(2)},
                  {"s2,m1", Value(6)},
                  {"s2,m2", Value(0)}};
  bool ms_ok =
      eval_fixture(build_master_slave(2, 2, ms, "i"), "max-avg-plus") ==
          Value(5) &&
      eval_fixture(build_master_slave(2, 2, ms, "ii"), "max-avg-plus") ==
          Value(12) &&
      eval_fixture(build_master_slave(2, 2, ms, "iii"), "max-avg-plus") ==
          Value(3);

  WeightMap st = {{"s1,s2", Value(2)}, {"s1,s3", Value(2)},
                  {"s2,s1", Value(4)}, {"s2,s3", Value(4)},
                  {"s3,s1", Value(6)}, {"s3,s2", Value(6)}};
  bool star_ok = eval_fixture(build_star(3, st), "min-avg-plus") == Value(2);

  int pub[3][2] = {{1, 2}, {3, 3}, {5, 6}};
  int sub[3][4] = {{2, 2, 5, 7}, {4, 4, 9, 9}, {6, 5, 6, 5}};
  WeightMap ps;
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 2; ++k)
      ps.emplace("p" + std::to_string(k) + ",t" + std::to_string(j) + "1",
                 Value(pub[j - 1][k - 1]));
    for (int i = 1; i <= 4; ++i)
      ps.emplace("s" + std::to_string(i) + ",t" + std::to_string(j) + "2",
                 Value(sub[j - 1][i - 1]));
  }
  bool ps_ok = true;
  Value prune_expect = Value::pos_inf();
  for (int j = 1; j <= 3; ++j) {
    std::vector<Value> incident;
    for (int k = 0; k < 2; ++k) incident.push_back(Value(pub[j - 1][k]));
    for (int i = 0; i < 4; ++i) incident.push_back(Value(sub[j - 1][i]));
    Value expect = maj_of(incident);
    if (expect < prune_expect) prune_expect = expect;
    if (!(eval_fixture(build_pubsub(2, 3, 4, ps, "topic-" + std::to_string(j)),
                       "min-maj-max") == expect))
      ps_ok = false;
  }
  if (!(eval_fixture(build_pubsub(2, 3, 4, ps, "prune"), "min-maj-max") ==
        prune_expect))
    ps_ok = false;

  ArchFixture fx = build_master_slave(2, 2, ms, "i");
  const PvMonoid& mav = builtin_monoid("max-avg-plus");
  SemanticTable table = semantic_table(
      lower_full_valuations(fx.formula, fx.ports, mav), fx.ports, mav);
  int supersets = 0;
  bool stable = true;
  for (const auto& [gamma, v] : table)
    if (fx.config.subset_of(gamma)) {
      ++supersets;
      if (!(v == Value(5))) stable = false;
    }
  stable = stable && supersets == (1 << 11);

  std::ostringstream d;
  d << "master-slave 5/12/3 " << (ms_ok ? "ok" : "WRONG") << ", star 2 "
    << (star_ok ? "ok" : "WRONG") << ", pubsub topic majorities and prune "
    << (ps_ok ? "ok" : "WRONG") << ", best-scheme value stable on all "
    << supersets << " supersets " << (stable ? "ok" : "WRONG");
  report(6, ms_ok && star_ok && ps_ok && stable, d.str());
}

// ---------------------------------------------------------------------------
// 7. Monoid axioms hold on sampled values.
// ---------------------------------------------------------------------------

void criterion7() {
  int total = 0;
  std::string complaint;
  for (const std::string& name : monoids()) {
    const PvMonoid& m = builtin_monoid(name);
    if (auto why = verify_flags(m, 4000, 20260815))
      complaint = name + ": " + *why;
    total += 4000;
  }
  std::ostringstream d;
  d << "axiom and flag checks on " << total << " sampled cases: "
    << (complaint.empty() ? "no counterexamples" : complaint);
  report(7, complaint.empty() && total >= 10000, d.str());
}

// ---------------------------------------------------------------------------
// 8. Text round trips and the command line contract.
// ---------------------------------------------------------------------------

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(WPCL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void criterion8() {
  PortSet ports = ports_of(3);
  const PvMonoid& m = builtin_monoid("max-avg-plus");
  oracle::Rng r(8800);
  int round_trips = 0, broken = 0;
  for (int i = 0; i < 1000; ++i) {
    WpclPtr z = oracle::random_wpcl(r, ports, m, 4, {.allow_fullval = true});
    if (!ast_equal(parse_wpcl(print_wpcl(z, ports), ports), z)) ++broken;
    ++round_trips;
  }

  auto weights = [](const char* name, const nlohmann::json& obj) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << obj.dump();
    return p.string();
  };
  std::string ms = weights("wpcl_acc_ms.json", {{"s1,m1", "4"},
                                                {"s1,m2", "2"},
                                                {"s2,m1", "6"},
                                                {"s2,m2", "0"}});
  std::string st = weights("wpcl_acc_star.json", {{"s1,s2", "2"},
                                                  {"s1,s3", "2"},
                                                  {"s2,s1", "4"},
                                                  {"s2,s3", "4"},
                                                  {"s3,s1", "6"},
                                                  {"s3,s2", "6"}});

  struct Example {
    std::string args;
    int code;
    std::string expect;  // must appear in the output; empty = no check
  };
  std::vector<Example> examples = {
      {"eval -m max-avg-plus -f 'w(2) (#) w(4)' -c '{ {p},{q} }' --ports p,q",
       0, "6\n"},
      {"eval -m max-avg-plus -f 'w(2) (#) w(4)' -c '{ {p} }' --ports p,q", 0,
       "-inf\n"},
      {"eval -f 'w(1)' -c '{ {p}' --ports p,q", 2, "error:"},
      {"normalize -m max-avg-plus --ports p,q -f '[m: p] (x) w(3)'", 0,
       "3 @ {{p}}\n"},
      {"normalize --ports p,q -f 'w(5)'", 0, "CONST 5\n"},
      {"normalize --ports a,b,c,d,e -f '[true]'", 3, "port limit"},
      {"equiv --ports p,q 'w(2) (#) w(-inf)' 'w(-inf)'", 0, "EQUIVALENT\n"},
      {"equiv --ports p,q 'w(2)' 'w(3)'", 1, "NOT EQUIVALENT"},
      {"table --ports p -f 'w(7)'", 0, "7 @ {{p}}\n"},
      {"demo master-slave i --weights " + ms, 0, "eval: 5"},
      {"demo star --n 3 --weights " + st, 0, "eval: 2"},
  };
  int bad_examples = 0;
  std::string first_bad;
  for (const Example& e : examples) {
    RunResult res = run_cli(e.args);
    bool ok = res.code == e.code &&
              (e.expect.empty() || res.out.find(e.expect) != std::string::npos);
    if (!ok) {
      ++bad_examples;
      if (first_bad.empty())
        first_bad = e.args + " -> exit " + std::to_string(res.code);
    }
  }

  std::ostringstream d;
  d << round_trips << " random formulas survive print-then-parse (" << broken
    << " broken); " << examples.size() << " documented commands, "
    << bad_examples << " off-contract";
  if (!first_bad.empty()) d << "; first: " << first_bad;
  report(8, round_trips >= 1000 && broken == 0 && bad_examples == 0, d.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures == 0)
    std::cout << "ALL CRITERIA PASS\n";
  else
    std::cout << failures << " CRITERIA FAILED\n";
  return failures == 0 ? 0 : 1;
}
