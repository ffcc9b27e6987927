#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wpcl/value.hpp"

namespace wpcl {

/// Structural properties an instance claims. Algorithms that need one of
/// these check the flag and throw HypothesisError when it is absent; the
/// sampling checker in verify_flags looks for counterexamples to claims.
struct MonoidFlags {
  bool idempotent = false;             // d (+) d = d
  bool val_symmetric = false;          // val is invariant under permutation
  bool otimes_commutative = false;     // d (x) e = e (x) d
  bool otimes_associative = false;     // (d (x) e) (x) g = d (x) (e (x) g)
  bool left_oplus_distributive = false;   // d (x) (e (+) g) = (d(x)e) (+) (d(x)g)
  bool right_oplus_distributive = false;  // (e (+) g) (x) d = (e(x)d) (+) (g(x)d)
  bool left_val_distributive = false;  // d (x) val(e1..en) = val(d(x)e1 ..)
  bool oplus_preservative = false;     // val(d1 (+) d2, e..) = val(d1, e..) (+) val(d2, e..)
};

/// Product valuation monoid: a commutative (+)-monoid with neutral zero,
/// an n-ary valuation with val(d) = d, val(..zero..) = zero, val(one..one)
/// = one, and a product (x) for which zero is absorbing and one neutral.
///
/// raw_val is only called with two or more arguments, none of them zero;
/// val_apply handles the unary and absorbing cases uniformly first.
class PvMonoid {
 public:
  using Binary = std::function<Value(const Value&, const Value&)>;
  using Nary = std::function<Value(std::span<const Value>)>;

  PvMonoid(std::string name, Value zero, Value one, Binary oplus,
           Binary otimes, Nary raw_val, MonoidFlags flags)
      : name_(std::move(name)),
        zero_(std::move(zero)),
        one_(std::move(one)),
        oplus_(std::move(oplus)),
        otimes_(std::move(otimes)),
        raw_val_(std::move(raw_val)),
        flags_(flags) {}

  const std::string& name() const { return name_; }
  const Value& zero() const { return zero_; }
  const Value& one() const { return one_; }
  const MonoidFlags& flags() const { return flags_; }

  Value oplus(const Value& a, const Value& b) const { return oplus_(a, b); }
  Value otimes(const Value& a, const Value& b) const { return otimes_(a, b); }
  Value raw_val(std::span<const Value> args) const { return raw_val_(args); }

 private:
  std::string name_;
  Value zero_;
  Value one_;
  Binary oplus_;
  Binary otimes_;
  Nary raw_val_;
  MonoidFlags flags_;
};

/// Valuation with the defining special cases applied before raw_val:
/// empty argument list is a domain error, val(d) = d, and any zero argument
/// short-circuits to zero.
Value val_apply(const PvMonoid& m, std::span<const Value> args);

/// Folds (+) over the arguments starting from zero; empty folds to zero.
Value oplus_fold(const PvMonoid& m, std::span<const Value> args);

/// Names accepted by builtin_monoid: max-avg-plus, min-avg-plus, min-maj-max.
const std::vector<std::string>& builtin_monoid_names();

/// Returns the named builtin instance; unknown names are a domain error.
///
/// max-avg-plus: rationals with -inf; (+) max, val average, (x) addition.
/// min-avg-plus: rationals with +inf; (+) min, val average, (x) addition.
/// min-maj-max:  rationals with both infinities; (+) min, val majority
///               (the greatest among the most frequent arguments), (x) max.
const PvMonoid& builtin_monoid(std::string_view name);

/// Randomized check of the axioms and of every claimed flag. Returns a
/// description of the first counterexample found, or nullopt if `samples`
/// random cases (per law) all pass.
std::optional<std::string> verify_flags(const PvMonoid& m, int samples,
                                        std::uint64_t seed);

/// Small pool of values suitable for randomized law checks: the monoid's
/// zero and one plus assorted small rationals.
std::vector<Value> sample_pool(const PvMonoid& m);

}  // namespace wpcl
