#include "wpcl/logic.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace wpcl {

PortSet::PortSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DomainError("port set: must not be empty");
  if (static_cast<int>(names_.size()) > kMaxPorts)
    throw DomainError("port set: at most " + std::to_string(kMaxPorts) +
                      " ports are supported");
  for (const std::string& n : names_) {
    if (n.empty()) throw DomainError("port set: empty port name");
  }
  auto sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("port set: duplicate port name");
}

int PortSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

int PortSet::require(std::string_view name) const {
  int i = find(name);
  if (i < 0) throw DomainError("unknown port '" + std::string(name) + "'");
  return i;
}

Configuration::Configuration(std::vector<Interaction> interactions)
    : interactions_(std::move(interactions)) {
  for (Interaction a : interactions_)
    if (a.ports == 0)
      throw DomainError("configuration: empty interaction");
  std::sort(interactions_.begin(), interactions_.end());
  interactions_.erase(
      std::unique(interactions_.begin(), interactions_.end()),
      interactions_.end());
}

bool Configuration::contains(Interaction a) const {
  return std::binary_search(interactions_.begin(), interactions_.end(), a);
}

bool Configuration::subset_of(const Configuration& other) const {
  return std::includes(other.interactions_.begin(), other.interactions_.end(),
                       interactions_.begin(), interactions_.end());
}

bool Configuration::disjoint_with(const Configuration& other) const {
  auto i = interactions_.begin();
  auto j = other.interactions_.begin();
  while (i != interactions_.end() && j != other.interactions_.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return false;
  }
  return true;
}

Configuration Configuration::union_with(const Configuration& other) const {
  std::vector<Interaction> merged;
  merged.reserve(interactions_.size() + other.interactions_.size());
  std::set_union(interactions_.begin(), interactions_.end(),
                 other.interactions_.begin(), other.interactions_.end(),
                 std::back_inserter(merged));
  Configuration out;
  out.interactions_ = std::move(merged);
  return out;
}

std::vector<Interaction> all_interactions(const PortSet& ports) {
  std::vector<Interaction> out;
  PortMask full = (PortMask(1) << ports.size()) - 1;
  out.reserve(full);
  for (PortMask m = 1; m <= full; ++m) out.push_back(Interaction{m});
  return out;
}

std::uint64_t configuration_count(int port_count) {
  if (port_count < 1 || port_count > 6)
    throw DomainError("configuration count supported for 1..6 ports");
  int interactions = (1 << port_count) - 1;
  return (std::uint64_t(1) << interactions) - 1;
}

std::vector<Configuration> all_configurations(const PortSet& ports,
                                              const Limits& limits) {
  if (ports.size() > limits.port_limit)
    throw ResourceError(
        "port limit: enumerating C(P) needs |P| <= " +
        std::to_string(limits.port_limit) + ", got " +
        std::to_string(ports.size()));
  auto atoms = all_interactions(ports);
  std::uint64_t total = (std::uint64_t(1) << atoms.size()) - 1;
  std::vector<Configuration> out;
  out.reserve(total);
  for (std::uint64_t set = 1; set <= total; ++set) {
    std::vector<Interaction> members;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (set >> i & 1) members.push_back(atoms[i]);
    out.push_back(Configuration(std::move(members)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FullMonomial characteristic_monomial(Interaction a, const PortSet& ports) {
  if (a.ports == 0)
    throw DomainError("characteristic monomial: empty interaction");
  PortMask full = (PortMask(1) << ports.size()) - 1;
  if (a.ports & ~full)
    throw DomainError("characteristic monomial: interaction mentions ports "
                      "outside the port set");
  return FullMonomial{a.ports, full & ~a.ports};
}

Interaction monomial_interaction(const FullMonomial& m) {
  if (m.positives == 0)
    throw DomainError("full monomial: no positive port (an all-negative "
                      "monomial matches no interaction)");
  if (m.positives & m.negatives)
    throw DomainError("full monomial: a port occurs both ways");
  return Interaction{m.positives};
}

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

namespace {

PilPtr make_pil(PilNode n) { return std::make_shared<const PilNode>(std::move(n)); }
PclPtr make_pcl(PclNode n) { return std::make_shared<const PclNode>(std::move(n)); }
WpilPtr make_wpil(WpilNode n) { return std::make_shared<const WpilNode>(std::move(n)); }
WpclPtr make_wpcl(WpclNode n) { return std::make_shared<const WpclNode>(std::move(n)); }

}  // namespace

PilPtr pil_true() {
  static const PilPtr t = make_pil({PilNode::Kind::True, -1, nullptr, nullptr});
  return t;
}

PilPtr pil_false() { return pil_neg(pil_true()); }

PilPtr pil_atom(int port) {
  if (port < 0) throw DomainError("pil atom: negative port index");
  return make_pil({PilNode::Kind::Atom, port, nullptr, nullptr});
}

PilPtr pil_neg(PilPtr x) {
  if (x->kind == PilNode::Kind::Neg) return x->a;
  return make_pil({PilNode::Kind::Neg, -1, std::move(x), nullptr});
}

PilPtr pil_or(PilPtr a, PilPtr b) {
  return make_pil({PilNode::Kind::Or, -1, std::move(a), std::move(b)});
}

PilPtr pil_and(PilPtr a, PilPtr b) {
  return make_pil({PilNode::Kind::And, -1, std::move(a), std::move(b)});
}

PilPtr monomial_pil(const FullMonomial& m, const PortSet& ports) {
  monomial_interaction(m);  // validates
  PilPtr acc;
  for (int i = 0; i < ports.size(); ++i) {
    PilPtr lit;
    if (m.positives >> i & 1)
      lit = pil_atom(i);
    else if (m.negatives >> i & 1)
      lit = pil_neg(pil_atom(i));
    else
      continue;
    acc = acc ? pil_and(acc, lit) : lit;
  }
  return acc;
}

PclPtr pcl_true() {
  static const PclPtr t =
      make_pcl({PclNode::Kind::True, nullptr, nullptr, nullptr});
  return t;
}

PclPtr pcl_pil(PilPtr x) {
  // An embedded `true` holds at every configuration and an embedded `false`
  // at none, exactly like true and neg true at this level. Collapsing them
  // keeps one canonical tree per printable formula.
  if (x->kind == PilNode::Kind::True) return pcl_true();
  if (x->kind == PilNode::Kind::Neg && x->a->kind == PilNode::Kind::True)
    return pcl_not(pcl_true());
  return make_pcl({PclNode::Kind::Pil, std::move(x), nullptr, nullptr});
}

PclPtr pcl_not(PclPtr x) {
  return make_pcl({PclNode::Kind::Not, nullptr, std::move(x), nullptr});
}

PclPtr pcl_union(PclPtr a, PclPtr b) {
  return make_pcl({PclNode::Kind::Union, nullptr, std::move(a), std::move(b)});
}

PclPtr pcl_coalesce(PclPtr a, PclPtr b) {
  return make_pcl(
      {PclNode::Kind::Coalesce, nullptr, std::move(a), std::move(b)});
}

PclPtr pcl_intersect(PclPtr a, PclPtr b) {
  return make_pcl(
      {PclNode::Kind::Intersect, nullptr, std::move(a), std::move(b)});
}

PclPtr pcl_implies(PclPtr a, PclPtr b) {
  return make_pcl(
      {PclNode::Kind::Implies, nullptr, std::move(a), std::move(b)});
}

WpilPtr wpil_const(Value d) {
  return make_wpil({WpilNode::Kind::Const, std::move(d), nullptr, nullptr,
                    nullptr});
}

WpilPtr wpil_pil(PilPtr x) {
  return make_wpil(
      {WpilNode::Kind::Pil, Value(), std::move(x), nullptr, nullptr});
}

WpilPtr wpil_oplus(WpilPtr a, WpilPtr b) {
  return make_wpil({WpilNode::Kind::Oplus, Value(), nullptr, std::move(a),
                    std::move(b)});
}

WpilPtr wpil_otimes(WpilPtr a, WpilPtr b) {
  return make_wpil({WpilNode::Kind::Otimes, Value(), nullptr, std::move(a),
                    std::move(b)});
}

WpclPtr wpcl_const(Value d) {
  return make_wpcl({WpclNode::Kind::Const, std::move(d), nullptr, nullptr,
                    nullptr});
}

WpclPtr wpcl_pcl(PclPtr f) {
  return make_wpcl(
      {WpclNode::Kind::Pcl, Value(), std::move(f), nullptr, nullptr});
}

WpclPtr wpcl_oplus(WpclPtr a, WpclPtr b) {
  return make_wpcl({WpclNode::Kind::Oplus, Value(), nullptr, std::move(a),
                    std::move(b)});
}

WpclPtr wpcl_otimes(WpclPtr a, WpclPtr b) {
  return make_wpcl({WpclNode::Kind::Otimes, Value(), nullptr, std::move(a),
                    std::move(b)});
}

WpclPtr wpcl_coalesce(WpclPtr a, WpclPtr b) {
  return make_wpcl({WpclNode::Kind::Coalesce, Value(), nullptr, std::move(a),
                    std::move(b)});
}

WpclPtr wpcl_star(WpclPtr x) {
  return make_wpcl(
      {WpclNode::Kind::Star, Value(), nullptr, std::move(x), nullptr});
}

WpclPtr wpcl_closure(WpclPtr x) {
  return make_wpcl(
      {WpclNode::Kind::Closure, Value(), nullptr, std::move(x), nullptr});
}

WpclPtr wpcl_fullval(WpclPtr x) {
  return make_wpcl(
      {WpclNode::Kind::FullVal, Value(), nullptr, std::move(x), nullptr});
}

WpclPtr embed_wpil(const WpilPtr& x) {
  switch (x->kind) {
    case WpilNode::Kind::Const:
      return wpcl_const(x->value);
    case WpilNode::Kind::Pil:
      return wpcl_pcl(pcl_pil(x->pil));
    case WpilNode::Kind::Oplus:
      return wpcl_oplus(embed_wpil(x->a), embed_wpil(x->b));
    case WpilNode::Kind::Otimes:
      return wpcl_otimes(embed_wpil(x->a), embed_wpil(x->b));
  }
  throw Error("embed_wpil: corrupt node");
}

// ---------------------------------------------------------------------------
// Derived-operator expansion
// ---------------------------------------------------------------------------

PilPtr expand_derived(const PilPtr& x) {
  switch (x->kind) {
    case PilNode::Kind::True:
    case PilNode::Kind::Atom:
      return x;
    case PilNode::Kind::Neg:
      return pil_neg(expand_derived(x->a));
    case PilNode::Kind::Or:
      return pil_or(expand_derived(x->a), expand_derived(x->b));
    case PilNode::Kind::And:
      return pil_neg(
          pil_or(pil_neg(expand_derived(x->a)), pil_neg(expand_derived(x->b))));
  }
  throw Error("expand_derived(pil): corrupt node");
}

PclPtr expand_derived(const PclPtr& x) {
  switch (x->kind) {
    case PclNode::Kind::True:
      return x;
    case PclNode::Kind::Pil:
      return pcl_pil(expand_derived(x->pil));
    case PclNode::Kind::Not:
      return pcl_not(expand_derived(x->a));
    case PclNode::Kind::Union:
      return pcl_union(expand_derived(x->a), expand_derived(x->b));
    case PclNode::Kind::Coalesce:
      return pcl_coalesce(expand_derived(x->a), expand_derived(x->b));
    case PclNode::Kind::Intersect:
      return pcl_not(pcl_union(pcl_not(expand_derived(x->a)),
                               pcl_not(expand_derived(x->b))));
    case PclNode::Kind::Implies:
      return pcl_union(pcl_not(expand_derived(x->a)), expand_derived(x->b));
  }
  throw Error("expand_derived(pcl): corrupt node");
}

WpclPtr expand_derived(const WpclPtr& x, const PvMonoid& m) {
  switch (x->kind) {
    case WpclNode::Kind::Const:
      return x;
    case WpclNode::Kind::Pcl:
      return wpcl_pcl(expand_derived(x->pcl));
    case WpclNode::Kind::Oplus:
      return wpcl_oplus(expand_derived(x->a, m), expand_derived(x->b, m));
    case WpclNode::Kind::Otimes:
      return wpcl_otimes(expand_derived(x->a, m), expand_derived(x->b, m));
    case WpclNode::Kind::Coalesce:
      return wpcl_coalesce(expand_derived(x->a, m), expand_derived(x->b, m));
    case WpclNode::Kind::Star:
      return wpcl_star(expand_derived(x->a, m));
    case WpclNode::Kind::Closure: {
      WpclPtr inner = expand_derived(x->a, m);
      return wpcl_oplus(inner, wpcl_coalesce(inner, wpcl_const(m.one())));
    }
    case WpclNode::Kind::FullVal:
      return wpcl_fullval(expand_derived(x->a, m));
  }
  throw Error("expand_derived(wpcl): corrupt node");
}

// ---------------------------------------------------------------------------
// Structural equality
// ---------------------------------------------------------------------------

bool ast_equal(const PilPtr& a, const PilPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case PilNode::Kind::True:
      return true;
    case PilNode::Kind::Atom:
      return a->port == b->port;
    case PilNode::Kind::Neg:
      return ast_equal(a->a, b->a);
    case PilNode::Kind::Or:
    case PilNode::Kind::And:
      return ast_equal(a->a, b->a) && ast_equal(a->b, b->b);
  }
  return false;
}

bool ast_equal(const PclPtr& a, const PclPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case PclNode::Kind::True:
      return true;
    case PclNode::Kind::Pil:
      return ast_equal(a->pil, b->pil);
    case PclNode::Kind::Not:
      return ast_equal(a->a, b->a);
    case PclNode::Kind::Union:
    case PclNode::Kind::Coalesce:
    case PclNode::Kind::Intersect:
    case PclNode::Kind::Implies:
      return ast_equal(a->a, b->a) && ast_equal(a->b, b->b);
  }
  return false;
}

bool ast_equal(const WpilPtr& a, const WpilPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case WpilNode::Kind::Const:
      return a->value == b->value;
    case WpilNode::Kind::Pil:
      return ast_equal(a->pil, b->pil);
    case WpilNode::Kind::Oplus:
    case WpilNode::Kind::Otimes:
      return ast_equal(a->a, b->a) && ast_equal(a->b, b->b);
  }
  return false;
}

bool ast_equal(const WpclPtr& a, const WpclPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case WpclNode::Kind::Const:
      return a->value == b->value;
    case WpclNode::Kind::Pcl:
      return ast_equal(a->pcl, b->pcl);
    case WpclNode::Kind::Oplus:
    case WpclNode::Kind::Otimes:
    case WpclNode::Kind::Coalesce:
      return ast_equal(a->a, b->a) && ast_equal(a->b, b->b);
    case WpclNode::Kind::Star:
    case WpclNode::Kind::Closure:
    case WpclNode::Kind::FullVal:
      return ast_equal(a->a, b->a);
  }
  return false;
}

}  // namespace wpcl
