#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wpcl/errors.hpp"
#include "wpcl/limits.hpp"
#include "wpcl/pvm.hpp"
#include "wpcl/value.hpp"

namespace wpcl {

// ---------------------------------------------------------------------------
// Domain: ports, interactions, configurations
// ---------------------------------------------------------------------------

/// Ordered set of named ports. Port indices are positions in this order and
/// double as bit positions in PortMask.
class PortSet {
 public:
  static constexpr int kMaxPorts = 30;

  explicit PortSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of the named port, or -1 if absent.
  int find(std::string_view name) const;

  /// Like find but throws DomainError for unknown names.
  int require(std::string_view name) const;

  bool operator==(const PortSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using PortMask = std::uint32_t;

/// Nonempty set of ports, stored as a bit mask over PortSet indices.
struct Interaction {
  PortMask ports = 0;

  friend auto operator<=>(const Interaction&, const Interaction&) = default;
};

/// Nonempty set of interactions, kept sorted and deduplicated so structural
/// equality coincides with set equality. The empty vector is reserved for
/// intermediate states; domain configurations are nonempty.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Interaction> interactions);

  bool empty() const { return interactions_.empty(); }
  std::size_t size() const { return interactions_.size(); }
  const std::vector<Interaction>& interactions() const { return interactions_; }

  bool contains(Interaction a) const;
  bool subset_of(const Configuration& other) const;
  bool disjoint_with(const Configuration& other) const;
  Configuration union_with(const Configuration& other) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Interaction> interactions_;
};

/// All 2^|P| - 1 interactions over P, in mask order.
std::vector<Interaction> all_interactions(const PortSet& ports);

/// All 2^(2^|P|-1) - 1 configurations over P, in a canonical order.
/// Guarded by limits.port_limit.
std::vector<Configuration> all_configurations(const PortSet& ports,
                                              const Limits& limits = {});

/// |C(P)| for a port count within the guard range (|P| <= 6 fits uint64).
std::uint64_t configuration_count(int port_count);

// ---------------------------------------------------------------------------
// Full monomials
// ---------------------------------------------------------------------------

/// Conjunction mentioning every port exactly once, positively or negatively.
/// At least one port must be positive: an interaction is a nonempty port set,
/// so the all-negative monomial describes no interaction and is rejected.
struct FullMonomial {
  PortMask positives = 0;
  PortMask negatives = 0;
};

FullMonomial characteristic_monomial(Interaction a, const PortSet& ports);
Interaction monomial_interaction(const FullMonomial& m);

// ---------------------------------------------------------------------------
// Formula layers
// ---------------------------------------------------------------------------

struct PilNode;
using PilPtr = std::shared_ptr<const PilNode>;

/// Interaction-level formulas. Core: true, port atoms, negation, disjunction.
/// Conjunction is derived but kept as a node until expand_derived.
/// Double negation collapses at construction.
struct PilNode {
  enum class Kind { True, Atom, Neg, Or, And };
  Kind kind;
  int port = -1;  // Atom
  PilPtr a, b;
};

PilPtr pil_true();
PilPtr pil_false();  // shorthand for neg(true)
PilPtr pil_atom(int port);
PilPtr pil_neg(PilPtr x);
PilPtr pil_or(PilPtr a, PilPtr b);
PilPtr pil_and(PilPtr a, PilPtr b);
PilPtr monomial_pil(const FullMonomial& m, const PortSet& ports);

struct PclNode;
using PclPtr = std::shared_ptr<const PclNode>;

/// Configuration-level formulas. Core: true, embedded interaction formulas,
/// complement, union, coalescing (+). Intersection and implication are
/// derived nodes until expand_derived.
struct PclNode {
  enum class Kind { True, Pil, Not, Union, Coalesce, Intersect, Implies };
  Kind kind;
  PilPtr pil;  // Pil
  PclPtr a, b;
};

PclPtr pcl_true();
PclPtr pcl_pil(PilPtr x);
PclPtr pcl_not(PclPtr x);
PclPtr pcl_union(PclPtr a, PclPtr b);
PclPtr pcl_coalesce(PclPtr a, PclPtr b);
PclPtr pcl_intersect(PclPtr a, PclPtr b);
PclPtr pcl_implies(PclPtr a, PclPtr b);

struct WpilNode;
using WpilPtr = std::shared_ptr<const WpilNode>;

/// Weighted interaction-level formulas: constants, embedded PIL, (+), (x).
struct WpilNode {
  enum class Kind { Const, Pil, Oplus, Otimes };
  Kind kind;
  Value value;  // Const
  PilPtr pil;   // Pil
  WpilPtr a, b;
};

WpilPtr wpil_const(Value d);
WpilPtr wpil_pil(PilPtr x);
WpilPtr wpil_oplus(WpilPtr a, WpilPtr b);
WpilPtr wpil_otimes(WpilPtr a, WpilPtr b);

struct WpclNode;
using WpclPtr = std::shared_ptr<const WpclNode>;

/// Weighted configuration-level formulas. Core: constants, embedded PCL,
/// (+), (x), coalescing (#), star. Closure (~) is derived and expands to
/// z (+) (z (#) one); full valuation is derived and is lowered through the
/// normal form of its argument, since its definition reads off that form.
struct WpclNode {
  enum class Kind {
    Const,
    Pcl,
    Oplus,
    Otimes,
    Coalesce,
    Star,
    Closure,
    FullVal
  };
  Kind kind;
  Value value;  // Const
  PclPtr pcl;   // Pcl
  WpclPtr a, b;
};

WpclPtr wpcl_const(Value d);
WpclPtr wpcl_pcl(PclPtr f);
WpclPtr wpcl_oplus(WpclPtr a, WpclPtr b);
WpclPtr wpcl_otimes(WpclPtr a, WpclPtr b);
WpclPtr wpcl_coalesce(WpclPtr a, WpclPtr b);
WpclPtr wpcl_star(WpclPtr x);
WpclPtr wpcl_closure(WpclPtr x);
WpclPtr wpcl_fullval(WpclPtr x);

/// Embeds a weighted interaction formula into the configuration layer.
WpclPtr embed_wpil(const WpilPtr& x);

// ---------------------------------------------------------------------------
// Derived-operator expansion and structural equality
// ---------------------------------------------------------------------------

PilPtr expand_derived(const PilPtr& x);
PclPtr expand_derived(const PclPtr& x);

/// Expands ~, PCL/PIL derived nodes, and pushes expansion through the tree.
/// The monoid supplies the constant one used by the closure expansion.
/// FullVal nodes are kept; lowering them needs normalization and lives in
/// the normal form layer.
WpclPtr expand_derived(const WpclPtr& x, const PvMonoid& m);

bool ast_equal(const PilPtr& a, const PilPtr& b);
bool ast_equal(const PclPtr& a, const PclPtr& b);
bool ast_equal(const WpilPtr& a, const WpilPtr& b);
bool ast_equal(const WpclPtr& a, const WpclPtr& b);

}  // namespace wpcl
