#include "wpcl/normal_form.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wpcl/errors.hpp"
#include "wpcl/semantics.hpp"

namespace wpcl {

namespace {

std::string with_count(const char* text, std::size_t count) {
  return std::string(text) + " (" + std::to_string(count) + ")";
}

/// Terms of a normal form, expanding constants over the whole domain.
/// The expansion is what the port limit inside all_configurations guards.
std::vector<FnfTerm> to_terms(const Fnf& f, const PortSet& ports,
                              const PvMonoid&, const Limits& limits) {
  if (!f.is_constant()) return f.term_list();
  std::vector<FnfTerm> out;
  auto domain = all_configurations(ports, limits);
  out.reserve(domain.size());
  for (auto& gamma : domain) out.push_back({f.constant_value(), std::move(gamma)});
  return out;
}

/// A term list covering all of C(P) with one shared value denotes that
/// constant; fold it so equal semantics stays structural equality. Counts
/// beyond four ports cannot materialize as term lists, so the check is
/// limited to where it can fire.
Fnf fold_full_table(Fnf f, const PortSet& ports, const PvMonoid& m) {
  if (f.is_constant() || ports.size() == 0 || ports.size() > 4) return f;
  const auto& ts = f.term_list();
  if (ts.empty() || ts.size() != configuration_count(ports.size())) return f;
  const Value& v = ts.front().value;
  for (const auto& t : ts)
    if (t.value != v) return f;
  return Fnf::constant(v, m);
}

std::vector<Configuration> structural_support(const PclPtr& f,
                                              const PortSet& ports,
                                              const Limits& limits);

std::vector<Configuration> subsets_as_configs(
    const std::vector<Interaction>& sat) {
  std::vector<Configuration> out;
  const std::uint32_t n = static_cast<std::uint32_t>(sat.size());
  out.reserve((std::size_t(1) << n) - 1);
  for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s) {
    std::vector<Interaction> ints;
    for (std::uint32_t i = 0; i < n; ++i)
      if (s & (std::uint32_t(1) << i)) ints.push_back(sat[i]);
    out.emplace_back(std::move(ints));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Configuration> pil_structural_support(const PilPtr& phi,
                                                  const PortSet& ports,
                                                  const Limits&) {
  if (ports.size() > 20)
    throw ResourceError(
        "port limit: enumerating the interactions of an interaction formula "
        "needs |P| <= 20, got " +
        std::to_string(ports.size()));
  std::vector<Interaction> sat;
  const PortMask full = (PortMask(1) << ports.size()) - 1;
  for (PortMask a = 1; a <= full; ++a)
    if (pil_sat(Interaction{a}, phi)) sat.push_back(Interaction{a});
  if (sat.size() > 12)
    throw ResourceError(
        with_count("port limit: interaction formula satisfied by", sat.size()) +
        " interactions; beyond the port limit its support is only enumerable "
        "up to 12");
  return subsets_as_configs(sat);
}

std::vector<Configuration> merge_supports(std::vector<Configuration> a,
                                          const std::vector<Configuration>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

/// Satisfying configurations of a formula over a domain too large to
/// enumerate, composed structurally from small supports. Shapes whose
/// support is co-finite (true, complement, implication) are refused: they
/// need the whole of C(P).
std::vector<Configuration> structural_support(const PclPtr& f,
                                              const PortSet& ports,
                                              const Limits& limits) {
  const std::string beyond =
      " beyond the port limit (" + std::to_string(limits.port_limit) +
      "), and |P| = " + std::to_string(ports.size());
  switch (f->kind) {
    case PclNode::Kind::True:
      throw ResourceError(
          "port limit: the support of true is all of C(P), not enumerable" +
          beyond);
    case PclNode::Kind::Not:
      throw ResourceError(
          "port limit: complement needs the full configuration domain, not "
          "enumerable" +
          beyond);
    case PclNode::Kind::Implies:
      throw ResourceError(
          "port limit: implication expands through complement, not "
          "enumerable" +
          beyond);
    case PclNode::Kind::Pil:
      return pil_structural_support(f->pil, ports, limits);
    case PclNode::Kind::Union:
      return merge_supports(structural_support(f->a, ports, limits),
                            structural_support(f->b, ports, limits));
    case PclNode::Kind::Intersect: {
      auto sa = structural_support(f->a, ports, limits);
      auto sb = structural_support(f->b, ports, limits);
      std::vector<Configuration> out;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::back_inserter(out));
      return out;
    }
    case PclNode::Kind::Coalesce: {
      auto sa = structural_support(f->a, ports, limits);
      auto sb = structural_support(f->b, ports, limits);
      if (sa.size() * sb.size() > limits.work_budget)
        throw ResourceError(
            with_count("work budget", limits.work_budget) +
            " exceeded: coalescing supports of sizes " +
            std::to_string(sa.size()) + " and " + std::to_string(sb.size()));
      std::set<Configuration> out;
      for (const auto& ga : sa)
        for (const auto& gb : sb) out.insert(ga.union_with(gb));
      return {out.begin(), out.end()};
    }
  }
  throw Error("unhandled configuration formula kind");
}

void require_normalize_flags(const PvMonoid& m) {
  const MonoidFlags& fl = m.flags();
  const char* missing = nullptr;
  if (!fl.idempotent) missing = "idempotent";
  else if (!fl.otimes_commutative) missing = "otimes_commutative";
  else if (!fl.otimes_associative) missing = "otimes_associative";
  else if (!fl.left_oplus_distributive) missing = "left_oplus_distributive";
  else if (!fl.right_oplus_distributive) missing = "right_oplus_distributive";
  if (missing)
    throw HypothesisError("normalization requires the monoid flag " +
                          std::string(missing) + ", which " + m.name() +
                          " does not claim");
}

Fnf normalize_core(const WpclPtr& z, const PortSet& ports, const PvMonoid& m,
                   const Limits& limits) {
  switch (z->kind) {
    case WpclNode::Kind::Const:
      return Fnf::constant(z->value, m);
    case WpclNode::Kind::Pcl:
      return fnf_of_pcl(z->pcl, ports, m, limits);
    case WpclNode::Kind::Oplus:
      return fnf_oplus(normalize_core(z->a, ports, m, limits),
                       normalize_core(z->b, ports, m, limits), ports, m,
                       limits);
    case WpclNode::Kind::Otimes:
      return fnf_otimes(normalize_core(z->a, ports, m, limits),
                        normalize_core(z->b, ports, m, limits), ports, m,
                        limits);
    case WpclNode::Kind::Coalesce:
      return fnf_coalesce(normalize_core(z->a, ports, m, limits),
                          normalize_core(z->b, ports, m, limits), ports, m,
                          limits);
    case WpclNode::Kind::Star:
      return fnf_star(normalize_core(z->a, ports, m, limits), ports, m,
                      limits);
    case WpclNode::Kind::Closure:
    case WpclNode::Kind::FullVal:
      break;
  }
  throw Error("derived weighted operator survived expansion");
}

}  // namespace

Fnf Fnf::constant(Value d, const PvMonoid& m) {
  Fnf out;
  if (d == m.zero()) return out;  // canonical zero polynomial: no terms
  out.constant_ = true;
  out.const_value_ = std::move(d);
  return out;
}

Fnf Fnf::terms(std::vector<FnfTerm> list, const PvMonoid& m) {
  std::sort(list.begin(), list.end(),
            [](const FnfTerm& a, const FnfTerm& b) { return a.config < b.config; });
  Fnf out;
  for (auto& t : list) {
    if (t.config.empty())
      throw DomainError("normal form term over the empty configuration");
    if (!out.terms_.empty() && out.terms_.back().config == t.config)
      out.terms_.back().value = m.oplus(out.terms_.back().value, t.value);
    else
      out.terms_.push_back(std::move(t));
  }
  std::erase_if(out.terms_,
                [&](const FnfTerm& t) { return t.value == m.zero(); });
  return out;
}

const Value& Fnf::constant_value() const {
  if (!constant_)
    throw DomainError("normal form is a term sum, not a constant");
  return const_value_;
}

const std::vector<FnfTerm>& Fnf::term_list() const {
  if (constant_)
    throw DomainError("normal form is a constant, it has no term list");
  return terms_;
}

bool Fnf::operator==(const Fnf& other) const {
  if (constant_ != other.constant_) return false;
  return constant_ ? const_value_ == other.const_value_
                   : terms_ == other.terms_;
}

Value fnf_value_at(const Fnf& fnf, const Configuration& gamma,
                   const PvMonoid& m) {
  if (fnf.is_constant()) return fnf.constant_value();
  const auto& ts = fnf.term_list();
  auto it = std::lower_bound(
      ts.begin(), ts.end(), gamma,
      [](const FnfTerm& t, const Configuration& c) { return t.config < c; });
  if (it != ts.end() && it->config == gamma) return it->value;
  return m.zero();
}

Fnf fnf_of_pcl(const PclPtr& f, const PortSet& ports, const PvMonoid& m,
               const Limits& limits) {
  std::vector<Configuration> support;
  if (ports.size() <= limits.port_limit)
    support = pcl_support(f, all_interactions(ports), limits);
  else
    support = structural_support(f, ports, limits);
  std::vector<FnfTerm> ts;
  ts.reserve(support.size());
  for (auto& gamma : support) ts.push_back({m.one(), std::move(gamma)});
  return fold_full_table(Fnf::terms(std::move(ts), m), ports, m);
}

Fnf fnf_oplus(const Fnf& a, const Fnf& b, const PortSet& ports,
              const PvMonoid& m, const Limits& limits) {
  if (a.is_constant() && b.is_constant())
    return Fnf::constant(m.oplus(a.constant_value(), b.constant_value()), m);
  std::vector<FnfTerm> ts = to_terms(a, ports, m, limits);
  std::vector<FnfTerm> tb = to_terms(b, ports, m, limits);
  ts.insert(ts.end(), tb.begin(), tb.end());
  return fold_full_table(Fnf::terms(std::move(ts), m), ports, m);
}

Fnf fnf_otimes(const Fnf& a, const Fnf& b, const PortSet& ports,
               const PvMonoid& m, const Limits&) {
  if (a.is_constant() && b.is_constant())
    return Fnf::constant(m.otimes(a.constant_value(), b.constant_value()), m);
  // One constant side scales the other termwise; no expansion needed, which
  // keeps weighting a large support cheap.
  if (a.is_constant() || b.is_constant()) {
    const Value& d = (a.is_constant() ? a : b).constant_value();
    const bool left = a.is_constant();
    std::vector<FnfTerm> out;
    for (const auto& t : (left ? b : a).term_list())
      out.push_back({left ? m.otimes(d, t.value) : m.otimes(t.value, d),
                     t.config});
    return fold_full_table(Fnf::terms(std::move(out), m), ports, m);
  }
  const auto& ta = a.term_list();
  const auto& tb = b.term_list();
  std::vector<FnfTerm> out;
  std::size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    if (ta[i].config < tb[j].config) ++i;
    else if (tb[j].config < ta[i].config) ++j;
    else {
      out.push_back({m.otimes(ta[i].value, tb[j].value), ta[i].config});
      ++i, ++j;
    }
  }
  return fold_full_table(Fnf::terms(std::move(out), m), ports, m);
}

Fnf fnf_coalesce(const Fnf& a, const Fnf& b, const PortSet& ports,
                 const PvMonoid& m, const Limits& limits) {
  std::vector<FnfTerm> ta = to_terms(a, ports, m, limits);
  std::vector<FnfTerm> tb = to_terms(b, ports, m, limits);
  if (ta.size() * tb.size() > limits.work_budget)
    throw ResourceError(with_count("work budget", limits.work_budget) +
                        " exceeded: coalescing " + std::to_string(ta.size()) +
                        " x " + std::to_string(tb.size()) +
                        " normal form terms");
  std::vector<FnfTerm> out;
  for (const auto& x : ta)
    for (const auto& y : tb)
      if (x.config.disjoint_with(y.config))
        out.push_back(
            {m.otimes(x.value, y.value), x.config.union_with(y.config)});
  return fold_full_table(Fnf::terms(std::move(out), m), ports, m);
}

Fnf fnf_star(const Fnf& a, const PortSet& ports, const PvMonoid& m,
             const Limits& limits) {
  if (a.is_constant() && m.flags().left_val_distributive &&
      m.flags().idempotent)
    // val(d,..,d) = d by left val distributivity against all-one arguments,
    // and the fold over partitions then collapses by idempotency.
    return a;
  std::vector<FnfTerm> ts = to_terms(a, ports, m, limits);
  if (ts.empty()) return Fnf::terms({}, m);

  // Index the interactions that occur in any term so disjointness of the
  // chosen family is a mask test. Families with an overlap contribute zero
  // and are pruned, so the search walks exactly the nonzero ones.
  std::vector<Interaction> ints;
  for (const auto& t : ts)
    for (Interaction x : t.config.interactions()) ints.push_back(x);
  std::sort(ints.begin(), ints.end());
  ints.erase(std::unique(ints.begin(), ints.end()), ints.end());

  std::size_t steps = 0;
  auto charge = [&] {
    if (++steps > limits.work_budget)
      throw ResourceError(
          with_count("work budget", limits.work_budget) +
          " exceeded while enumerating disjoint term families under star");
  };

  std::vector<FnfTerm> out;
  std::vector<std::size_t> chosen;
  std::vector<Value> vals;

  if (ints.size() <= 64) {
    std::vector<std::uint64_t> mask(ts.size(), 0);
    for (std::size_t k = 0; k < ts.size(); ++k)
      for (Interaction x : ts[k].config.interactions())
        mask[k] |= std::uint64_t(1)
                   << (std::lower_bound(ints.begin(), ints.end(), x) -
                       ints.begin());
    std::map<std::uint64_t, Value> acc;
    std::uint64_t used = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      charge();
      if (i == ts.size()) {
        if (chosen.empty()) return;
        vals.clear();
        for (std::size_t k : chosen) vals.push_back(ts[k].value);
        Value v = val_apply(m, vals);
        auto [it, fresh] = acc.emplace(used, v);
        if (!fresh) it->second = m.oplus(it->second, v);
        return;
      }
      self(self, i + 1);
      if ((used & mask[i]) == 0) {
        used |= mask[i];
        chosen.push_back(i);
        self(self, i + 1);
        chosen.pop_back();
        used &= ~mask[i];
      }
    };
    rec(rec, 0);
    for (auto& [u, v] : acc) {
      std::vector<Interaction> glue;
      for (std::size_t bit = 0; bit < ints.size(); ++bit)
        if (u & (std::uint64_t(1) << bit)) glue.push_back(ints[bit]);
      out.push_back({v, Configuration(std::move(glue))});
    }
  } else {
    std::map<Configuration, Value> acc;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      charge();
      if (i == ts.size()) {
        if (chosen.empty()) return;
        vals.clear();
        Configuration u;
        for (std::size_t k : chosen) {
          vals.push_back(ts[k].value);
          u = u.union_with(ts[k].config);
        }
        Value v = val_apply(m, vals);
        auto [it, fresh] = acc.emplace(std::move(u), v);
        if (!fresh) it->second = m.oplus(it->second, v);
        return;
      }
      self(self, i + 1);
      bool ok = true;
      for (std::size_t k : chosen)
        if (!ts[k].config.disjoint_with(ts[i].config)) {
          ok = false;
          break;
        }
      if (ok) {
        chosen.push_back(i);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
    for (auto& [u, v] : acc) out.push_back({std::move(v), u});
  }
  return fold_full_table(Fnf::terms(std::move(out), m), ports, m);
}

Fnf normalize(const WpclPtr& zeta, const PortSet& ports, const PvMonoid& m,
              const Limits& limits) {
  require_normalize_flags(m);
  WpclPtr core =
      expand_derived(lower_full_valuations(zeta, ports, m, limits), m);
  return normalize_core(core, ports, m, limits);
}

Fnf full_valuation(const WpclPtr& zeta, const PortSet& ports,
                   const PvMonoid& m, const Limits& limits) {
  Fnf f = normalize(zeta, ports, m, limits);
  if (f.is_constant() || f.term_list().empty())
    throw DomainError(
        "full valuation is defined through the term list of the normal form; "
        "the argument normalizes to a constant polynomial");
  const auto& ts = f.term_list();
  Configuration u;
  std::size_t total = 0;
  for (const auto& t : ts) {
    total += t.config.size();
    u = u.union_with(t.config);
  }
  if (u.size() != total) return Fnf::terms({}, m);  // overlapping blocks
  std::vector<Value> vals;
  vals.reserve(ts.size());
  for (const auto& t : ts) vals.push_back(t.value);
  return fold_full_table(
      Fnf::terms({{val_apply(m, vals), std::move(u)}}, m), ports, m);
}

WpclPtr lower_full_valuations(const WpclPtr& zeta, const PortSet& ports,
                              const PvMonoid& m, const Limits& limits) {
  switch (zeta->kind) {
    case WpclNode::Kind::Const:
    case WpclNode::Kind::Pcl:
      return zeta;
    case WpclNode::Kind::Oplus:
    case WpclNode::Kind::Otimes:
    case WpclNode::Kind::Coalesce: {
      WpclPtr a = lower_full_valuations(zeta->a, ports, m, limits);
      WpclPtr b = lower_full_valuations(zeta->b, ports, m, limits);
      if (a == zeta->a && b == zeta->b) return zeta;
      if (zeta->kind == WpclNode::Kind::Oplus) return wpcl_oplus(a, b);
      if (zeta->kind == WpclNode::Kind::Otimes) return wpcl_otimes(a, b);
      return wpcl_coalesce(a, b);
    }
    case WpclNode::Kind::Star:
    case WpclNode::Kind::Closure: {
      WpclPtr a = lower_full_valuations(zeta->a, ports, m, limits);
      if (a == zeta->a) return zeta;
      return zeta->kind == WpclNode::Kind::Star ? wpcl_star(a)
                                                : wpcl_closure(a);
    }
    case WpclNode::Kind::FullVal: {
      WpclPtr a = lower_full_valuations(zeta->a, ports, m, limits);
      return fnf_to_formula(full_valuation(a, ports, m, limits), ports, m);
    }
  }
  throw Error("unhandled weighted formula kind");
}

WpclPtr fnf_to_formula(const Fnf& fnf, const PortSet& ports,
                       const PvMonoid& m) {
  if (fnf.is_constant()) return wpcl_const(fnf.constant_value());
  const auto& ts = fnf.term_list();
  if (ts.empty()) return wpcl_const(m.zero());
  WpclPtr out;
  for (const auto& t : ts) {
    PclPtr block;
    for (Interaction x : t.config.interactions()) {
      PclPtr mono =
          pcl_pil(monomial_pil(characteristic_monomial(x, ports), ports));
      block = block ? pcl_coalesce(block, mono) : mono;
    }
    WpclPtr w = wpcl_otimes(wpcl_const(t.value), wpcl_pcl(block));
    out = out ? wpcl_oplus(out, w) : w;
  }
  return out;
}

bool equivalent(const WpclPtr& a, const WpclPtr& b, const PortSet& ports,
                const PvMonoid& m, const Limits& limits) {
  // Folding full uniform tables into constants (and the zero constant into
  // the empty term sum) makes the canonical forms unique, so a structural
  // comparison decides semantic equality.
  return normalize(a, ports, m, limits) == normalize(b, ports, m, limits);
}

std::optional<EquivWitness> equivalence_witness(const Fnf& a, const Fnf& b,
                                                const PortSet& ports,
                                                const PvMonoid& m,
                                                const Limits& limits) {
  if (a == b) return std::nullopt;
  auto witness_at = [&](const Configuration& c) {
    return EquivWitness{c, fnf_value_at(a, c, m), fnf_value_at(b, c, m)};
  };
  auto differ_at = [&](const Configuration& c) {
    return fnf_value_at(a, c, m) != fnf_value_at(b, c, m);
  };

  // Two term sums can only differ inside their supports; scan those first.
  std::size_t support = 0;
  for (const Fnf* f : {&a, &b}) {
    if (f->is_constant()) continue;
    support += f->term_list().size();
    for (const auto& t : f->term_list())
      if (differ_at(t.config)) return witness_at(t.config);
  }

  if (a.is_constant() && b.is_constant())
    return witness_at(Configuration({Interaction{1}}));

  // A constant against a term sum that matches it on the whole support:
  // any configuration outside the support separates them. Probe singletons
  // (at most `support` of them can be taken), then fall back to the full
  // domain while it is enumerable.
  if (ports.size() > 0) {
    const PortMask full = (PortMask(1) << ports.size()) - 1;
    std::size_t probes = 0;
    for (PortMask mask = 1; mask <= full && probes <= support + 1;
         ++mask, ++probes) {
      Configuration c({Interaction{mask}});
      if (differ_at(c)) return witness_at(c);
    }
  }
  if (ports.size() <= limits.port_limit) {
    for (const auto& c : all_configurations(ports, limits))
      if (differ_at(c)) return witness_at(c);
    return std::nullopt;
  }
  throw ResourceError(
      "port limit: the polynomials differ only outside the probed "
      "configurations and the domain is not enumerable beyond the port "
      "limit (" +
      std::to_string(limits.port_limit) + ")");
}

}  // namespace wpcl
