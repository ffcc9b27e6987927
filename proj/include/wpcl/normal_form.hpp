#pragma once

#include <optional>
#include <vector>

#include "wpcl/limits.hpp"
#include "wpcl/logic.hpp"
#include "wpcl/pvm.hpp"

namespace wpcl {

/// One summand of a full normal form: a nonzero weight attached to a full
/// monomial block, which is stored as the configuration it characterizes.
struct FnfTerm {
  Value value;
  Configuration config;

  friend bool operator==(const FnfTerm&, const FnfTerm&) = default;
};

/// Full normal form: either a constant polynomial or a finite (+)-sum of
/// weighted full monomial blocks. Canonical shape, enforced by the
/// factories and by normalization:
///   - terms are sorted by configuration and configurations are distinct,
///   - no term carries the monoid zero,
///   - the empty term list is the canonical zero polynomial (a zero
///     constant folds into it),
///   - a term list covering all of C(P) with one shared value folds into
///     that constant (applied where |P| makes the count checkable).
/// Equal semantics over C(P) then coincides with structural equality.
class Fnf {
 public:
  static Fnf constant(Value d, const PvMonoid& m);
  static Fnf terms(std::vector<FnfTerm> list, const PvMonoid& m);

  bool is_constant() const { return constant_; }
  const Value& constant_value() const;
  const std::vector<FnfTerm>& term_list() const;

  bool operator==(const Fnf& other) const;
  bool operator!=(const Fnf& other) const { return !(*this == other); }

 private:
  bool constant_ = false;
  Value const_value_;
  std::vector<FnfTerm> terms_;
};

/// Value of the polynomial at a configuration: the matching term's weight,
/// zero when no term matches, the constant itself for constant forms.
Value fnf_value_at(const Fnf& fnf, const Configuration& gamma,
                   const PvMonoid& m);

/// Normal form of an embedded PCL formula: weight one on every satisfying
/// configuration. Within the port limit this enumerates C(P) semantically;
/// beyond it a structural path composes supports (monomials, unions,
/// coalescings) and refuses shapes that need the whole domain.
Fnf fnf_of_pcl(const PclPtr& f, const PortSet& ports, const PvMonoid& m,
               const Limits& limits = {});

/// Pointwise sum. Equal configurations merge with (+); a constant meeting a
/// term list is expanded over C(P) first (port limit applies).
Fnf fnf_oplus(const Fnf& a, const Fnf& b, const PortSet& ports,
              const PvMonoid& m, const Limits& limits = {});

/// Pointwise product. Only matching configurations survive; a constant
/// scales the other side termwise without expansion.
Fnf fnf_otimes(const Fnf& a, const Fnf& b, const PortSet& ports,
               const PvMonoid& m, const Limits& limits = {});

/// Coalescing: disjoint configuration pairs contribute their (x)-product on
/// the union, everything else drops; equal unions merge with (+).
/// Constants expand over C(P) first (port limit applies).
Fnf fnf_coalesce(const Fnf& a, const Fnf& b, const PortSet& ports,
                 const PvMonoid& m, const Limits& limits = {});

/// Star: every nonempty subset of terms with pairwise disjoint
/// configurations contributes val of its weights on the union of its
/// configurations. Overlapping subsets vanish and are pruned during the
/// search; the exploration is capped by limits.work_budget. A constant
/// collapses to itself when the monoid is left val distributive and is
/// expanded over C(P) otherwise.
Fnf fnf_star(const Fnf& a, const PortSet& ports, const PvMonoid& m,
             const Limits& limits = {});

/// Full normal form of a formula, computed structurally over the expanded
/// core AST. Requires an idempotent monoid whose product is commutative and
/// associative and distributes over (+) from both sides; a missing flag
/// raises HypothesisError naming it.
Fnf normalize(const WpclPtr& zeta, const PortSet& ports, const PvMonoid& m,
              const Limits& limits = {});

/// Full valuation read off the normal form of the argument: if the term
/// configurations are pairwise disjoint the result is one term, val of all
/// weights on the union of all configurations; otherwise the zero
/// polynomial. Constant forms (including the zero polynomial) are a domain
/// error, the operator is defined through the term list.
Fnf full_valuation(const WpclPtr& zeta, const PortSet& ports,
                   const PvMonoid& m, const Limits& limits = {});

/// Replaces each full valuation node by a formula denoting its value, which
/// is how those nodes become evaluable and normalizable.
WpclPtr lower_full_valuations(const WpclPtr& zeta, const PortSet& ports,
                              const PvMonoid& m, const Limits& limits = {});

/// A formula denoting the polynomial: the (+)-sum of value (x) block
/// formulas, where each block is the coalescing of the characteristic
/// monomials of its configuration.
WpclPtr fnf_to_formula(const Fnf& fnf, const PortSet& ports,
                       const PvMonoid& m);

/// Decides semantic equality over C(P) by comparing canonical normal
/// forms: equal term counts, equal weights, and identical grouping of
/// configurations by weight all follow from structural equality.
bool equivalent(const WpclPtr& a, const WpclPtr& b, const PortSet& ports,
                const PvMonoid& m, const Limits& limits = {});

/// A configuration where the two polynomials disagree, with both values;
/// nullopt when they are equal.
struct EquivWitness {
  Configuration config;
  Value left;
  Value right;
};
std::optional<EquivWitness> equivalence_witness(const Fnf& a, const Fnf& b,
                                                const PortSet& ports,
                                                const PvMonoid& m,
                                                const Limits& limits = {});

}  // namespace wpcl
