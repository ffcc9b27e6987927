#include "wpcl/semantics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace wpcl {

bool pil_sat(Interaction a, const PilPtr& phi) {
  switch (phi->kind) {
    case PilNode::Kind::True:
      return true;
    case PilNode::Kind::Atom:
      return (a.ports >> phi->port) & 1;
    case PilNode::Kind::Neg:
      return !pil_sat(a, phi->a);
    case PilNode::Kind::Or:
      return pil_sat(a, phi->a) || pil_sat(a, phi->b);
    case PilNode::Kind::And:
      return pil_sat(a, phi->a) && pil_sat(a, phi->b);
  }
  throw Error("pil_sat: corrupt node");
}

Value wpil_eval(Interaction a, const WpilPtr& zeta, const PvMonoid& m) {
  switch (zeta->kind) {
    case WpilNode::Kind::Const:
      return zeta->value;
    case WpilNode::Kind::Pil:
      return pil_sat(a, zeta->pil) ? m.one() : m.zero();
    case WpilNode::Kind::Oplus:
      return m.oplus(wpil_eval(a, zeta->a, m), wpil_eval(a, zeta->b, m));
    case WpilNode::Kind::Otimes:
      return m.otimes(wpil_eval(a, zeta->a, m), wpil_eval(a, zeta->b, m));
  }
  throw Error("wpil_eval: corrupt node");
}

// ---------------------------------------------------------------------------
// Per-subset evaluation engine.
//
// A fixed universe of interactions (the configuration under evaluation, or
// all of I(P) for whole-domain tables) indexes subconfigurations as bit
// masks. Every formula node is evaluated into a table over all nonempty
// masks at once; tables are memoized per node, which realizes the
// (subformula, subconfiguration) cache. Three representations keep the
// common cases cheap: Uniform for constants, Sparse (nonzero entries only)
// for the monomial-shaped formulas that dominate large universes, Dense for
// small universes where 2^n tables and 3^n split scans are affordable.
// ---------------------------------------------------------------------------

namespace {

using Mask = std::uint32_t;

constexpr int kMaxUniverse = 24;

struct BoolTable {
  enum class Rep { All, Sparse, Dense } rep = Rep::Sparse;
  std::vector<Mask> masks;  // Sparse: sorted, nonempty masks
  std::vector<char> bits;   // Dense: size 1<<n, bits[0] == 0
};

struct ValueTable {
  enum class Rep { Uniform, Sparse, Dense } rep = Rep::Uniform;
  Value uniform;                                // Uniform: value at every mask
  std::vector<std::pair<Mask, Value>> entries;  // Sparse: sorted, no zeros
  std::vector<Value> dense;                     // Dense: size 1<<n
};

struct Engine {
  const PvMonoid* m;  // null for purely boolean use
  Limits lim;
  std::vector<Interaction> uni;
  int n = 0;
  Mask full = 0;
  std::unordered_map<const WpclNode*, ValueTable> vmemo;
  std::unordered_map<const PclNode*, BoolTable> bmemo;

  Engine(std::vector<Interaction> universe, const PvMonoid* monoid,
         const Limits& limits)
      : m(monoid), lim(limits), uni(std::move(universe)) {
    std::sort(uni.begin(), uni.end());
    if (std::adjacent_find(uni.begin(), uni.end()) != uni.end())
      throw DomainError("evaluation universe: duplicate interaction");
    n = static_cast<int>(uni.size());
    if (n > kMaxUniverse)
      throw ResourceError("universe limit: at most " +
                          std::to_string(kMaxUniverse) +
                          " interactions per evaluation, got " +
                          std::to_string(n));
    full = n == 32 ? ~Mask(0) : (Mask(1) << n) - 1;
    if (m) {
      if (!m->flags().idempotent)
        throw HypothesisError(
            "evaluation requires an idempotent monoid (missing flag: "
            "idempotent)");
      if (!m->flags().val_symmetric)
        throw HypothesisError(
            "evaluation requires a symmetric valuation (missing flag: "
            "val_symmetric)");
    }
  }

  const Value& zero() const { return m->zero(); }
  const Value& one() const { return m->one(); }

  std::size_t dense_size() const { return std::size_t(1) << n; }

  void require_dense(const char* what) const {
    if (n > lim.dense_limit)
      throw ResourceError(std::string("dense limit: ") + what + " needs a " +
                          "table over " + std::to_string(n) +
                          " interactions, limit is " +
                          std::to_string(lim.dense_limit));
  }

  // ---- boolean tables ----

  BoolTable bool_all() const { return BoolTable{BoolTable::Rep::All, {}, {}}; }

  BoolTable bool_dense(const BoolTable& t) const {
    require_dense("complementing or combining this formula");
    BoolTable out;
    out.rep = BoolTable::Rep::Dense;
    out.bits.assign(dense_size(), 0);
    switch (t.rep) {
      case BoolTable::Rep::All:
        for (Mask s = 1; s <= full; ++s) out.bits[s] = 1;
        break;
      case BoolTable::Rep::Sparse:
        for (Mask s : t.masks) out.bits[s] = 1;
        break;
      case BoolTable::Rep::Dense:
        out.bits = t.bits;
        break;
    }
    return out;
  }

  static BoolTable bool_sparse(std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return BoolTable{BoolTable::Rep::Sparse, std::move(masks), {}};
  }

  bool bool_at(const BoolTable& t, Mask s) const {
    if (s == 0) return false;
    switch (t.rep) {
      case BoolTable::Rep::All:
        return true;
      case BoolTable::Rep::Sparse:
        return std::binary_search(t.masks.begin(), t.masks.end(), s);
      case BoolTable::Rep::Dense:
        return t.bits[s] != 0;
    }
    return false;
  }

  void zeta_counts(std::vector<std::int64_t>& f) const {
    for (int i = 0; i < n; ++i)
      for (Mask s = 0; s <= full; ++s)
        if (s >> i & 1) f[s] += f[s ^ (Mask(1) << i)];
  }

  void mobius_counts(std::vector<std::int64_t>& f) const {
    for (int i = 0; i < n; ++i)
      for (Mask s = 0; s <= full; ++s)
        if (s >> i & 1) f[s] -= f[s ^ (Mask(1) << i)];
  }

  // Note: unordered_map element references are stable under insertion.
  const BoolTable& pcl_table(const PclPtr& f) {
    auto it = bmemo.find(f.get());
    if (it != bmemo.end()) return it->second;
    BoolTable out = pcl_table_uncached(f);
    return bmemo.emplace(f.get(), std::move(out)).first->second;
  }

  BoolTable pcl_table_uncached(const PclPtr& f) {
    switch (f->kind) {
      case PclNode::Kind::True:
        return bool_all();
      case PclNode::Kind::Pil:
        return pil_table(f->pil);
      case PclNode::Kind::Not: {
        BoolTable a = pcl_table(f->a);
        if (a.rep == BoolTable::Rep::All)
          return bool_sparse({});
        if (a.rep == BoolTable::Rep::Sparse && a.masks.empty())
          return bool_all();
        BoolTable d = bool_dense(a);
        for (Mask s = 1; s <= full; ++s) d.bits[s] = !d.bits[s];
        return d;
      }
      case PclNode::Kind::Union: {
        BoolTable a = pcl_table(f->a);
        BoolTable b = pcl_table(f->b);
        if (a.rep == BoolTable::Rep::All || b.rep == BoolTable::Rep::All)
          return bool_all();
        if (a.rep == BoolTable::Rep::Sparse &&
            b.rep == BoolTable::Rep::Sparse) {
          std::vector<Mask> merged = a.masks;
          merged.insert(merged.end(), b.masks.begin(), b.masks.end());
          return bool_sparse(std::move(merged));
        }
        BoolTable da = bool_dense(a), db = bool_dense(b);
        for (Mask s = 1; s <= full; ++s) da.bits[s] |= db.bits[s];
        return da;
      }
      case PclNode::Kind::Coalesce:
        return cover_table(pcl_table(f->a), pcl_table(f->b));
      case PclNode::Kind::Intersect:
      case PclNode::Kind::Implies:
        return pcl_table(expand_derived(f));
    }
    throw Error("pcl table: corrupt node");
  }

  BoolTable pil_table(const PilPtr& phi) {
    Mask good = 0;
    for (int i = 0; i < n; ++i)
      if (pil_sat(uni[i], phi)) good |= Mask(1) << i;
    if (n <= lim.dense_limit) {
      BoolTable out;
      out.rep = BoolTable::Rep::Dense;
      out.bits.assign(dense_size(), 0);
      for (Mask s = 1; s <= full; ++s) out.bits[s] = (s & ~good) == 0;
      return out;
    }
    if (std::popcount(good) <= 12) {
      std::vector<Mask> masks;
      // all nonempty submasks of good
      for (Mask s = good;; s = (s - 1) & good) {
        if (s) masks.push_back(s);
        if (s == 0) break;
      }
      return bool_sparse(std::move(masks));
    }
    throw ResourceError(
        "dense limit: interaction formula satisfied by too many interactions "
        "for sparse evaluation over this configuration");
  }

  // Covers: out[s] = exists nonempty s1, s2 with s1 | s2 == s, a[s1], b[s2].
  // Overlap is allowed, which distinguishes this from value coalescing.
  BoolTable cover_table(const BoolTable& a, const BoolTable& b) {
    if (a.rep == BoolTable::Rep::All && b.rep == BoolTable::Rep::All)
      return bool_all();
    // One side unconstrained: the other side only needs a satisfying subset.
    if (a.rep == BoolTable::Rep::All || b.rep == BoolTable::Rep::All) {
      const BoolTable& s = a.rep == BoolTable::Rep::All ? b : a;
      if (s.rep == BoolTable::Rep::Sparse) {
        std::size_t cost = 0;
        for (Mask base : s.masks)
          cost += std::size_t(1) << (n - std::popcount(base));
        if (cost <= lim.work_budget) {
          std::vector<Mask> out;
          out.reserve(cost);
          for (Mask base : s.masks) {
            Mask comp = full & ~base;
            for (Mask c = comp;; c = (c - 1) & comp) {
              out.push_back(base | c);
              if (c == 0) break;
            }
          }
          return bool_sparse(std::move(out));
        }
      }
      BoolTable d = bool_dense(s);
      // upward closure within the universe
      for (int i = 0; i < n; ++i)
        for (Mask t = 1; t <= full; ++t)
          if (t >> i & 1) d.bits[t] |= d.bits[t ^ (Mask(1) << i)];
      return d;
    }
    if (a.rep == BoolTable::Rep::Sparse && b.rep == BoolTable::Rep::Sparse) {
      std::size_t pairs = a.masks.size() * b.masks.size();
      if (pairs <= lim.work_budget) {
        std::vector<Mask> out;
        out.reserve(pairs);
        for (Mask x : a.masks)
          for (Mask y : b.masks) out.push_back(x | y);
        return bool_sparse(std::move(out));
      }
    }
    // Dense covering product, counted in integers so the subset transform
    // can be inverted exactly.
    BoolTable da = bool_dense(a), db = bool_dense(b);
    std::vector<std::int64_t> ca(dense_size(), 0), cb(dense_size(), 0);
    for (Mask s = 1; s <= full; ++s) {
      ca[s] = da.bits[s];
      cb[s] = db.bits[s];
    }
    zeta_counts(ca);
    zeta_counts(cb);
    for (Mask s = 0; s <= full; ++s) ca[s] *= cb[s];
    mobius_counts(ca);
    BoolTable out;
    out.rep = BoolTable::Rep::Dense;
    out.bits.assign(dense_size(), 0);
    for (Mask s = 1; s <= full; ++s) out.bits[s] = ca[s] > 0;
    return out;
  }

  // ---- value tables ----

  ValueTable uniform(Value v) const {
    ValueTable t;
    t.rep = ValueTable::Rep::Uniform;
    t.uniform = std::move(v);
    return t;
  }

  ValueTable zero_table() const {
    ValueTable t;
    t.rep = ValueTable::Rep::Sparse;
    return t;
  }

  bool is_zero_table(const ValueTable& t) const {
    switch (t.rep) {
      case ValueTable::Rep::Uniform:
        return t.uniform == zero();
      case ValueTable::Rep::Sparse:
        return t.entries.empty();
      case ValueTable::Rep::Dense:
        return false;  // not worth scanning
    }
    return false;
  }

  ValueTable sparse_from_map(std::map<Mask, Value>&& acc) const {
    ValueTable t;
    t.rep = ValueTable::Rep::Sparse;
    t.entries.reserve(acc.size());
    for (auto& [s, v] : acc)
      if (!(v == zero())) t.entries.emplace_back(s, std::move(v));
    return t;
  }

  ValueTable value_dense(const ValueTable& t) const {
    require_dense("evaluating this operator");
    ValueTable out;
    out.rep = ValueTable::Rep::Dense;
    out.dense.assign(dense_size(), zero());
    switch (t.rep) {
      case ValueTable::Rep::Uniform:
        for (Mask s = 1; s <= full; ++s) out.dense[s] = t.uniform;
        break;
      case ValueTable::Rep::Sparse:
        for (const auto& [s, v] : t.entries) out.dense[s] = v;
        break;
      case ValueTable::Rep::Dense:
        out.dense = t.dense;
        break;
    }
    return out;
  }

  Value value_at(const ValueTable& t, Mask s) const {
    if (s == 0) return zero();
    switch (t.rep) {
      case ValueTable::Rep::Uniform:
        return t.uniform;
      case ValueTable::Rep::Sparse: {
        auto it = std::lower_bound(
            t.entries.begin(), t.entries.end(), s,
            [](const auto& e, Mask key) { return e.first < key; });
        if (it != t.entries.end() && it->first == s) return it->second;
        return zero();
      }
      case ValueTable::Rep::Dense:
        return t.dense[s];
    }
    return zero();
  }

  ValueTable from_bool(const BoolTable& b) const {
    switch (b.rep) {
      case BoolTable::Rep::All:
        return uniform(one());
      case BoolTable::Rep::Sparse: {
        ValueTable t;
        t.rep = ValueTable::Rep::Sparse;
        t.entries.reserve(b.masks.size());
        for (Mask s : b.masks) t.entries.emplace_back(s, one());
        return t;
      }
      case BoolTable::Rep::Dense: {
        ValueTable t;
        t.rep = ValueTable::Rep::Dense;
        t.dense.assign(dense_size(), zero());
        for (Mask s = 1; s <= full; ++s)
          if (b.bits[s]) t.dense[s] = one();
        return t;
      }
    }
    throw Error("from_bool: corrupt table");
  }

  ValueTable oplus_tables(const ValueTable& a, const ValueTable& b) const {
    if (is_zero_table(a)) return b;
    if (is_zero_table(b)) return a;
    if (a.rep == ValueTable::Rep::Uniform && b.rep == ValueTable::Rep::Uniform)
      return uniform(m->oplus(a.uniform, b.uniform));
    if (a.rep == ValueTable::Rep::Sparse && b.rep == ValueTable::Rep::Sparse) {
      std::map<Mask, Value> acc;
      for (const auto& [s, v] : a.entries) acc.emplace(s, v);
      for (const auto& [s, v] : b.entries) {
        auto [it, inserted] = acc.emplace(s, v);
        if (!inserted) it->second = m->oplus(it->second, v);
      }
      return sparse_from_map(std::move(acc));
    }
    ValueTable da = value_dense(a), db = value_dense(b);
    for (Mask s = 1; s <= full; ++s)
      da.dense[s] = m->oplus(da.dense[s], db.dense[s]);
    return da;
  }

  ValueTable otimes_tables(const ValueTable& a, const ValueTable& b) const {
    if (a.rep == ValueTable::Rep::Uniform &&
        b.rep == ValueTable::Rep::Uniform)
      return uniform(m->otimes(a.uniform, b.uniform));
    if (a.rep == ValueTable::Rep::Uniform && a.uniform == zero())
      return zero_table();
    if (b.rep == ValueTable::Rep::Uniform && b.uniform == zero())
      return zero_table();
    // Scaling by a constant preserves sparsity: zero absorbs.
    if (a.rep == ValueTable::Rep::Uniform &&
        b.rep == ValueTable::Rep::Sparse) {
      std::map<Mask, Value> acc;
      for (const auto& [s, v] : b.entries) acc.emplace(s, m->otimes(a.uniform, v));
      return sparse_from_map(std::move(acc));
    }
    if (a.rep == ValueTable::Rep::Sparse &&
        b.rep == ValueTable::Rep::Uniform) {
      std::map<Mask, Value> acc;
      for (const auto& [s, v] : a.entries) acc.emplace(s, m->otimes(v, b.uniform));
      return sparse_from_map(std::move(acc));
    }
    if (a.rep == ValueTable::Rep::Sparse &&
        b.rep == ValueTable::Rep::Sparse) {
      std::map<Mask, Value> acc;
      auto ia = a.entries.begin();
      auto ib = b.entries.begin();
      while (ia != a.entries.end() && ib != b.entries.end()) {
        if (ia->first < ib->first)
          ++ia;
        else if (ib->first < ia->first)
          ++ib;
        else {
          acc.emplace(ia->first, m->otimes(ia->second, ib->second));
          ++ia;
          ++ib;
        }
      }
      return sparse_from_map(std::move(acc));
    }
    if (a.rep == ValueTable::Rep::Sparse || b.rep == ValueTable::Rep::Sparse) {
      const bool a_sparse = a.rep == ValueTable::Rep::Sparse;
      const ValueTable& sp = a_sparse ? a : b;
      const ValueTable& other = a_sparse ? b : a;
      std::map<Mask, Value> acc;
      for (const auto& [s, v] : sp.entries) {
        Value w = a_sparse ? m->otimes(v, value_at(other, s))
                           : m->otimes(value_at(other, s), v);
        acc.emplace(s, std::move(w));
      }
      return sparse_from_map(std::move(acc));
    }
    ValueTable da = value_dense(a), db = value_dense(b);
    for (Mask s = 1; s <= full; ++s)
      da.dense[s] = m->otimes(da.dense[s], db.dense[s]);
    return da;
  }

  // out[s] = (+) over ordered pairs (s1, s2) of disjoint nonempty masks with
  // s1 | s2 == s of a[s1] (x) b[s2].
  ValueTable coalesce_tables(const ValueTable& a, const ValueTable& b) const {
    if (is_zero_table(a) || is_zero_table(b)) return zero_table();
    if (a.rep == ValueTable::Rep::Sparse && b.rep == ValueTable::Rep::Sparse) {
      if (a.entries.size() * b.entries.size() <= lim.work_budget) {
        std::map<Mask, Value> acc;
        for (const auto& [s1, v1] : a.entries)
          for (const auto& [s2, v2] : b.entries) {
            if (s1 & s2) continue;
            Value v = m->otimes(v1, v2);
            if (v == zero()) continue;
            auto [it, inserted] = acc.emplace(s1 | s2, v);
            if (!inserted) it->second = m->oplus(it->second, v);
          }
        return sparse_from_map(std::move(acc));
      }
    }
    // Sparse against a constant: every strict superset of an entry receives
    // the entry once, from the unique split (entry, rest).
    if (a.rep == ValueTable::Rep::Sparse &&
        b.rep == ValueTable::Rep::Uniform) {
      if (auto out = spread(a, b.uniform, /*sparse_on_left=*/true)) return *out;
    }
    if (a.rep == ValueTable::Rep::Uniform &&
        b.rep == ValueTable::Rep::Sparse) {
      if (auto out = spread(b, a.uniform, /*sparse_on_left=*/false)) return *out;
    }
    // Dense against a constant: subset transform plus a drop-one-bit fold.
    if (n <= lim.dense_limit &&
        (a.rep == ValueTable::Rep::Uniform ||
         b.rep == ValueTable::Rep::Uniform) &&
        !(a.rep == ValueTable::Rep::Uniform &&
          b.rep == ValueTable::Rep::Uniform)) {
      const bool uniform_left = a.rep == ValueTable::Rep::Uniform;
      const ValueTable& t = uniform_left ? b : a;
      const Value& d = uniform_left ? a.uniform : b.uniform;
      return coalesce_with_constant(value_dense(t), d, uniform_left);
    }
    ValueTable da = value_dense(a), db = value_dense(b);
    ValueTable out;
    out.rep = ValueTable::Rep::Dense;
    out.dense.assign(dense_size(), zero());
    for (Mask s = 1; s <= full; ++s) {
      Value acc = zero();
      for (Mask s1 = (s - 1) & s; s1; s1 = (s1 - 1) & s) {
        const Value& v1 = da.dense[s1];
        if (v1 == zero()) continue;
        const Value& v2 = db.dense[s ^ s1];
        if (v2 == zero()) continue;
        acc = m->oplus(acc, m->otimes(v1, v2));
      }
      out.dense[s] = std::move(acc);
    }
    return out;
  }

  std::optional<ValueTable> spread(const ValueTable& sp, const Value& d,
                                   bool sparse_on_left) const {
    std::size_t cost = 0;
    for (const auto& [s, v] : sp.entries) {
      cost += std::size_t(1) << (n - std::popcount(s));
      if (cost > lim.work_budget) {
        if (n <= lim.dense_limit) return std::nullopt;  // dense fallback
        throw ResourceError(
            "work budget: coalescing against a constant over this "
            "configuration exceeds the configured budget");
      }
    }
    std::map<Mask, Value> acc;
    for (const auto& [base, v] : sp.entries) {
      Value w = sparse_on_left ? m->otimes(v, d) : m->otimes(d, v);
      if (w == zero()) continue;
      Mask comp = full & ~base;
      for (Mask c = comp; c; c = (c - 1) & comp) {
        auto [it, inserted] = acc.emplace(base | c, w);
        if (!inserted) it->second = m->oplus(it->second, w);
      }
    }
    return sparse_from_map(std::move(acc));
  }

  // out[s] = (+) over nonempty strict submasks s1 of s of t[s1] (x) d
  // (or d (x) t[s1]). Computed with a subset transform; folding over
  // drop-one-bit predecessors revisits submasks, which the required
  // idempotency of (+) makes harmless.
  ValueTable coalesce_with_constant(ValueTable t, const Value& d,
                                    bool uniform_on_left) const {
    std::vector<Value> z(dense_size(), zero());
    for (Mask s = 1; s <= full; ++s)
      z[s] = uniform_on_left ? m->otimes(d, t.dense[s])
                             : m->otimes(t.dense[s], d);
    for (int i = 0; i < n; ++i)
      for (Mask s = 1; s <= full; ++s)
        if (s >> i & 1) z[s] = m->oplus(z[s], z[s ^ (Mask(1) << i)]);
    ValueTable out;
    out.rep = ValueTable::Rep::Dense;
    out.dense.assign(dense_size(), zero());
    for (Mask s = 1; s <= full; ++s) {
      Value acc = zero();
      for (int i = 0; i < n; ++i)
        if (s >> i & 1) acc = m->oplus(acc, z[s ^ (Mask(1) << i)]);
      out.dense[s] = std::move(acc);
    }
    return out;
  }

  ValueTable star_table(const ValueTable& a) const {
    if (n > lim.star_limit)
      throw ResourceError(
          "star limit: evaluating star needs |gamma| <= " +
          std::to_string(lim.star_limit) + ", got " + std::to_string(n));
    ValueTable d = value_dense(a);
    ValueTable out;
    out.rep = ValueTable::Rep::Dense;
    out.dense.assign(dense_size(), zero());
    std::vector<int> items;
    std::vector<Mask> blocks;
    std::vector<Value> vals;
    for (Mask s = 1; s <= full; ++s) {
      items.clear();
      for (int i = 0; i < n; ++i)
        if (s >> i & 1) items.push_back(i);
      Value acc = zero();
      // Unordered partitions, blocks created in order of least member.
      auto rec = [&](auto&& self, std::size_t next) -> void {
        if (next == items.size()) {
          vals.clear();
          for (Mask b : blocks) {
            Value v = d.dense[b];
            if (v == zero()) return;  // val absorbs zero, partition is dead
            vals.push_back(std::move(v));
          }
          acc = m->oplus(acc, val_apply(*m, vals));
          return;
        }
        Mask bit = Mask(1) << items[next];
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          blocks[i] |= bit;
          self(self, next + 1);
          blocks[i] &= ~bit;
        }
        blocks.push_back(bit);
        self(self, next + 1);
        blocks.pop_back();
      };
      rec(rec, 0);
      out.dense[s] = std::move(acc);
    }
    return out;
  }

  const ValueTable& wpcl_table(const WpclPtr& zeta) {
    auto it = vmemo.find(zeta.get());
    if (it != vmemo.end()) return it->second;
    ValueTable out = wpcl_table_uncached(zeta);
    return vmemo.emplace(zeta.get(), std::move(out)).first->second;
  }

  ValueTable wpcl_table_uncached(const WpclPtr& zeta) {
    switch (zeta->kind) {
      case WpclNode::Kind::Const:
        return uniform(zeta->value);
      case WpclNode::Kind::Pcl:
        return from_bool(pcl_table(zeta->pcl));
      case WpclNode::Kind::Oplus:
        return oplus_tables(wpcl_table(zeta->a), wpcl_table(zeta->b));
      case WpclNode::Kind::Otimes:
        return otimes_tables(wpcl_table(zeta->a), wpcl_table(zeta->b));
      case WpclNode::Kind::Coalesce:
        return coalesce_tables(wpcl_table(zeta->a), wpcl_table(zeta->b));
      case WpclNode::Kind::Star:
        return star_table(wpcl_table(zeta->a));
      case WpclNode::Kind::Closure:
      case WpclNode::Kind::FullVal:
        break;
    }
    throw Error("wpcl table: derived node reached the evaluator");
  }
};

void reject_fullval(const WpclPtr& zeta) {
  switch (zeta->kind) {
    case WpclNode::Kind::FullVal:
      throw DomainError(
          "full valuation nodes must be lowered before evaluation (see "
          "lower_full_valuations)");
    case WpclNode::Kind::Const:
    case WpclNode::Kind::Pcl:
      return;
    case WpclNode::Kind::Oplus:
    case WpclNode::Kind::Otimes:
    case WpclNode::Kind::Coalesce:
      reject_fullval(zeta->a);
      reject_fullval(zeta->b);
      return;
    case WpclNode::Kind::Star:
    case WpclNode::Kind::Closure:
      reject_fullval(zeta->a);
      return;
  }
}

WpclPtr prepare(const WpclPtr& zeta, const PvMonoid& m) {
  reject_fullval(zeta);
  return expand_derived(zeta, m);
}

}  // namespace

bool pcl_sat(const Configuration& gamma, const PclPtr& f,
             const Limits& limits) {
  if (gamma.empty()) throw DomainError("pcl_sat: empty configuration");
  Engine e(gamma.interactions(), nullptr, limits);
  return e.bool_at(e.pcl_table(expand_derived(f)), e.full);
}

std::vector<Configuration> pcl_support(const PclPtr& f,
                                       const std::vector<Interaction>& universe,
                                       const Limits& limits) {
  Engine e(universe, nullptr, limits);
  BoolTable t = e.pcl_table(expand_derived(f));
  std::vector<Mask> masks;
  switch (t.rep) {
    case BoolTable::Rep::All:
      e.require_dense("enumerating the support of this formula");
      for (Mask s = 1; s <= e.full; ++s) masks.push_back(s);
      break;
    case BoolTable::Rep::Sparse:
      masks = t.masks;
      break;
    case BoolTable::Rep::Dense:
      for (Mask s = 1; s <= e.full; ++s)
        if (t.bits[s]) masks.push_back(s);
      break;
  }
  std::vector<Configuration> out;
  out.reserve(masks.size());
  for (Mask s : masks) {
    std::vector<Interaction> members;
    for (int i = 0; i < e.n; ++i)
      if (s >> i & 1) members.push_back(e.uni[i]);
    out.push_back(Configuration(std::move(members)));
  }
  return out;
}

Value wpcl_eval(const Configuration& gamma, const WpclPtr& zeta,
                const PvMonoid& m, const Limits& limits) {
  if (gamma.empty()) throw DomainError("wpcl_eval: empty configuration");
  Engine e(gamma.interactions(), &m, limits);
  return e.value_at(e.wpcl_table(prepare(zeta, m)), e.full);
}

SemanticTable semantic_table(const WpclPtr& zeta, const PortSet& ports,
                             const PvMonoid& m, const Limits& limits) {
  if (ports.size() > limits.port_limit)
    throw ResourceError("port limit: a whole-domain table needs |P| <= " +
                        std::to_string(limits.port_limit) + ", got " +
                        std::to_string(ports.size()));
  Engine e(all_interactions(ports), &m, limits);
  ValueTable t = e.wpcl_table(prepare(zeta, m));
  SemanticTable out;
  for (Mask s = 1; s <= e.full; ++s) {
    std::vector<Interaction> members;
    for (int i = 0; i < e.n; ++i)
      if (s >> i & 1) members.push_back(e.uni[i]);
    out.emplace(Configuration(std::move(members)), e.value_at(t, s));
  }
  return out;
}

Value closure_eval(const WpclPtr& zeta, const Configuration& gamma,
                   const PvMonoid& m, const Limits& limits) {
  if (gamma.empty()) throw DomainError("closure_eval: empty configuration");
  Engine e(gamma.interactions(), &m, limits);
  ValueTable t = e.wpcl_table(prepare(zeta, m));
  Value acc = m.zero();
  switch (t.rep) {
    case ValueTable::Rep::Uniform:
      // same value at every nonempty subconfiguration
      return t.uniform;
    case ValueTable::Rep::Sparse:
      for (const auto& [s, v] : t.entries) acc = m.oplus(acc, v);
      return acc;
    case ValueTable::Rep::Dense:
      for (Mask s = 1; s <= e.full; ++s) acc = m.oplus(acc, t.dense[s]);
      return acc;
  }
  throw Error("closure_eval: corrupt table");
}

}  // namespace wpcl
