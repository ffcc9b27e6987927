#include "wpcl/pvm.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace wpcl {

Value val_apply(const PvMonoid& m, std::span<const Value> args) {
  if (args.empty())
    throw DomainError("val: applied to an empty argument list");
  for (const Value& v : args)
    if (v == m.zero()) return m.zero();
  if (args.size() == 1) return args[0];
  return m.raw_val(args);
}

Value oplus_fold(const PvMonoid& m, std::span<const Value> args) {
  Value acc = m.zero();
  for (const Value& v : args) acc = m.oplus(acc, v);
  return acc;
}

namespace {

Value value_max(const Value& a, const Value& b) { return a < b ? b : a; }
Value value_min(const Value& a, const Value& b) { return b < a ? b : a; }
Value value_plus(const Value& a, const Value& b) { return a.add(b); }

Value average(std::span<const Value> args) {
  Value sum = 0;
  for (const Value& v : args) sum = sum.add(v);
  if (!sum.is_finite()) return sum;
  return Value::finite(sum.rational() /
                       Rational(static_cast<long long>(args.size())));
}

// Greatest value among those that occur most often.
Value majority(std::span<const Value> args) {
  std::map<Value, int> counts;
  for (const Value& v : args) ++counts[v];
  int best_count = 0;
  const Value* best = nullptr;
  for (const auto& [v, n] : counts) {
    if (n >= best_count) {  // map order is ascending, ties keep the greater
      best_count = n;
      best = &v;
    }
  }
  return *best;
}

MonoidFlags avg_flags() {
  MonoidFlags f;
  f.idempotent = true;
  f.val_symmetric = true;
  f.otimes_commutative = true;
  f.otimes_associative = true;
  f.left_oplus_distributive = true;
  f.right_oplus_distributive = true;
  f.left_val_distributive = true;
  f.oplus_preservative = true;
  return f;
}

MonoidFlags maj_flags() {
  MonoidFlags f;
  f.idempotent = true;
  f.val_symmetric = true;
  f.otimes_commutative = true;
  f.otimes_associative = true;
  f.left_oplus_distributive = true;
  f.right_oplus_distributive = true;
  f.left_val_distributive = false;
  f.oplus_preservative = false;
  return f;
}

}  // namespace

const std::vector<std::string>& builtin_monoid_names() {
  static const std::vector<std::string> names = {
      "max-avg-plus", "min-avg-plus", "min-maj-max"};
  return names;
}

const PvMonoid& builtin_monoid(std::string_view name) {
  static const PvMonoid max_avg_plus("max-avg-plus", Value::neg_inf(),
                                     Value(0), value_max, value_plus, average,
                                     avg_flags());
  static const PvMonoid min_avg_plus("min-avg-plus", Value::pos_inf(),
                                     Value(0), value_min, value_plus, average,
                                     avg_flags());
  static const PvMonoid min_maj_max("min-maj-max", Value::pos_inf(),
                                    Value::neg_inf(), value_min, value_max,
                                    majority, maj_flags());
  if (name == "max-avg-plus") return max_avg_plus;
  if (name == "min-avg-plus") return min_avg_plus;
  if (name == "min-maj-max") return min_maj_max;
  throw DomainError("unknown monoid '" + std::string(name) +
                    "' (expected max-avg-plus, min-avg-plus, or min-maj-max)");
}

std::vector<Value> sample_pool(const PvMonoid& m) {
  std::vector<Value> pool = {m.zero(), m.one()};
  for (long long n = -4; n <= 4; ++n) pool.push_back(Value(n));
  pool.push_back(Value(1, 2));
  pool.push_back(Value(-1, 2));
  pool.push_back(Value(3, 2));
  pool.push_back(Value(1, 3));
  pool.push_back(Value(-2, 3));
  pool.push_back(Value(5, 2));
  return pool;
}

namespace {

struct LawChecker {
  const PvMonoid& m;
  std::mt19937_64 rng;
  std::vector<Value> pool;
  std::optional<std::string> failure;

  LawChecker(const PvMonoid& monoid, std::uint64_t seed)
      : m(monoid), rng(seed), pool(sample_pool(monoid)) {}

  const Value& pick() {
    return pool[std::uniform_int_distribution<std::size_t>(
        0, pool.size() - 1)(rng)];
  }

  std::vector<Value> pick_many(std::size_t lo, std::size_t hi) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    std::vector<Value> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(pick());
    return out;
  }

  static std::string show(std::span<const Value> vs) {
    std::string out = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) out += ", ";
      out += vs[i].to_string();
    }
    return out + "]";
  }

  void fail(const std::string& law, std::span<const Value> args,
            const Value& lhs, const Value& rhs) {
    if (failure) return;
    failure = m.name() + ": " + law + " fails on " + show(args) + ": " +
              lhs.to_string() + " != " + rhs.to_string();
  }

  void expect(const std::string& law, std::span<const Value> args,
              const Value& lhs, const Value& rhs) {
    if (!(lhs == rhs)) fail(law, args, lhs, rhs);
  }

  void run_once() {
    const Value a = pick(), b = pick(), c = pick();
    const Value abc[] = {a, b, c};
    expect("oplus commutativity", abc, m.oplus(a, b), m.oplus(b, a));
    expect("oplus associativity", abc, m.oplus(m.oplus(a, b), c),
           m.oplus(a, m.oplus(b, c)));
    expect("oplus zero neutral", abc, m.oplus(a, m.zero()), a);
    expect("otimes zero absorbing", abc, m.otimes(a, m.zero()), m.zero());
    expect("otimes zero absorbing", abc, m.otimes(m.zero(), a), m.zero());
    expect("otimes one neutral", abc, m.otimes(a, m.one()), a);
    expect("otimes one neutral", abc, m.otimes(m.one(), a), a);
    {
      const Value single[] = {a};
      expect("val unary identity", single, val_apply(m, single), a);
    }
    {
      auto args = pick_many(2, 5);
      args[std::uniform_int_distribution<std::size_t>(0, args.size() - 1)(
          rng)] = m.zero();
      expect("val zero absorption", args, val_apply(m, args), m.zero());
    }
    {
      std::vector<Value> ones(
          std::uniform_int_distribution<std::size_t>(2, 5)(rng), m.one());
      expect("val one preservation", ones, val_apply(m, ones), m.one());
    }
    const MonoidFlags& f = m.flags();
    if (f.idempotent) {
      const Value one_arg[] = {a};
      expect("idempotency", one_arg, m.oplus(a, a), a);
    }
    if (f.otimes_commutative)
      expect("otimes commutativity", abc, m.otimes(a, b), m.otimes(b, a));
    if (f.otimes_associative)
      expect("otimes associativity", abc, m.otimes(m.otimes(a, b), c),
             m.otimes(a, m.otimes(b, c)));
    if (f.left_oplus_distributive)
      expect("left oplus distributivity", abc, m.otimes(a, m.oplus(b, c)),
             m.oplus(m.otimes(a, b), m.otimes(a, c)));
    if (f.right_oplus_distributive)
      expect("right oplus distributivity", abc, m.otimes(m.oplus(b, c), a),
             m.oplus(m.otimes(b, a), m.otimes(c, a)));
    if (f.val_symmetric) {
      auto args = pick_many(2, 5);
      auto shuffled = args;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      expect("val symmetry", args, val_apply(m, args), val_apply(m, shuffled));
    }
    if (f.left_val_distributive) {
      auto args = pick_many(2, 4);
      auto scaled = args;
      for (Value& v : scaled) v = m.otimes(a, v);
      std::vector<Value> shown = {a};
      shown.insert(shown.end(), args.begin(), args.end());
      expect("left val distributivity", shown,
             m.otimes(a, val_apply(m, args)), val_apply(m, scaled));
    }
    if (f.oplus_preservative) {
      auto rest = pick_many(1, 3);
      std::vector<Value> with_sum = {m.oplus(a, b)};
      with_sum.insert(with_sum.end(), rest.begin(), rest.end());
      std::vector<Value> with_a = {a}, with_b = {b};
      with_a.insert(with_a.end(), rest.begin(), rest.end());
      with_b.insert(with_b.end(), rest.begin(), rest.end());
      std::vector<Value> shown = {a, b};
      shown.insert(shown.end(), rest.begin(), rest.end());
      expect("oplus preservation", shown, val_apply(m, with_sum),
             m.oplus(val_apply(m, with_a), val_apply(m, with_b)));
    }
  }
};

}  // namespace

std::optional<std::string> verify_flags(const PvMonoid& m, int samples,
                                        std::uint64_t seed) {
  LawChecker checker(m, seed);
  for (int i = 0; i < samples && !checker.failure; ++i) checker.run_once();
  return checker.failure;
}

}  // namespace wpcl
