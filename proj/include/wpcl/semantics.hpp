#pragma once

#include <map>
#include <vector>

#include "wpcl/limits.hpp"
#include "wpcl/logic.hpp"
#include "wpcl/pvm.hpp"

namespace wpcl {

/// Does the interaction satisfy the interaction-level formula? Derived
/// conjunction is evaluated directly.
bool pil_sat(Interaction a, const PilPtr& phi);

/// Weighted interaction-level semantics at a single interaction.
Value wpil_eval(Interaction a, const WpilPtr& zeta, const PvMonoid& m);

/// Does the configuration satisfy the configuration-level formula?
/// true holds everywhere; an embedded interaction formula must hold for
/// every interaction; + asks for a cover by two nonempty, possibly
/// overlapping subconfigurations.
bool pcl_sat(const Configuration& gamma, const PclPtr& f,
             const Limits& limits = {});

/// Weighted configuration-level semantics at gamma:
///   constants are everywhere themselves, an embedded PCL formula is one
///   where satisfied and zero elsewhere, (+)/(x) are pointwise, (#) folds
///   (+) over ordered pairs of disjoint nonempty subconfigurations whose
///   union is gamma, and star folds (+) over unordered partitions of gamma,
///   applying val once per partition to the block values.
///
/// Closure nodes are expanded on entry; full valuation nodes must have been
/// lowered first (see lower_full_valuations). Subformula values are shared
/// across subconfigurations within one call, so nested (#)/star do not
/// recompute. Guards: star needs |gamma| <= limits.star_limit; several paths
/// need a table of 2^|gamma| entries and check limits.dense_limit.
///
/// The engine requires an idempotent monoid with symmetric val (the scope of
/// everything in this library); missing flags raise HypothesisError.
Value wpcl_eval(const Configuration& gamma, const WpclPtr& zeta,
                const PvMonoid& m, const Limits& limits = {});

using SemanticTable = std::map<Configuration, Value>;

/// Whole-domain table: gamma -> value for every gamma in C(P).
/// Guarded by limits.port_limit.
SemanticTable semantic_table(const WpclPtr& zeta, const PortSet& ports,
                             const PvMonoid& m, const Limits& limits = {});

/// Closure semantics computed directly as the (+)-fold of the formula value
/// over all nonempty subconfigurations of gamma. This is an independent
/// route to the same value as evaluating the expansion z (+) (z (#) one),
/// which makes it the oracle of choice for that agreement.
Value closure_eval(const WpclPtr& zeta, const Configuration& gamma,
                   const PvMonoid& m, const Limits& limits = {});

/// Satisfying configurations of f among the nonempty subsets of the given
/// interactions. The universe must be duplicate-free. Used by the normal
/// form construction for embedded PCL formulas.
std::vector<Configuration> pcl_support(const PclPtr& f,
                                       const std::vector<Interaction>& universe,
                                       const Limits& limits = {});

}  // namespace wpcl
