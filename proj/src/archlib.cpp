#include "wpcl/archlib.hpp"

#include <string>
#include <vector>

#include "wpcl/errors.hpp"

namespace wpcl {

namespace {

const Value& weight(const WeightMap& weights, const std::string& key) {
  auto it = weights.find(key);
  if (it == weights.end())
    throw DomainError("missing weight for pair '" + key + "'");
  return it->second;
}

Interaction pair_interaction(const PortSet& ports, const std::string& a,
                             const std::string& b) {
  return Interaction{(PortMask(1) << ports.require(a)) |
                     (PortMask(1) << ports.require(b))};
}

/// d (x) [m_a] for the interaction of the two named ports, weighted by the
/// map entry under "first,second".
WpclPtr weighted_monomial(const PortSet& ports, const WeightMap& weights,
                          const std::string& first, const std::string& second) {
  Interaction a = pair_interaction(ports, first, second);
  return wpcl_otimes(
      wpcl_const(weight(weights, first + "," + second)),
      wpcl_pcl(pcl_pil(monomial_pil(characteristic_monomial(a, ports), ports))));
}

WpclPtr oplus_chain(const std::vector<WpclPtr>& parts) {
  if (parts.empty()) throw Error("empty operand list for a sum");
  WpclPtr out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = wpcl_oplus(out, parts[i]);
  return out;
}

WpclPtr otimes_chain(const std::vector<WpclPtr>& parts) {
  if (parts.empty()) throw Error("empty operand list for a product");
  WpclPtr out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    out = wpcl_otimes(out, parts[i]);
  return out;
}

}  // namespace

ArchFixture build_master_slave(int n_masters, int n_slaves,
                               const WeightMap& weights,
                               const std::string& variant) {
  if (n_masters < 1 || n_slaves < 1)
    throw DomainError("master-slave: needs at least one master and one slave");
  if (n_masters + n_slaves > PortSet::kMaxPorts)
    throw DomainError("master-slave: too many components");

  std::vector<std::string> names;
  for (int j = 1; j <= n_masters; ++j) names.push_back("m" + std::to_string(j));
  for (int i = 1; i <= n_slaves; ++i) names.push_back("s" + std::to_string(i));
  PortSet ports(std::move(names));

  auto phi = [&](int slave, int master) {
    return weighted_monomial(ports, weights, "s" + std::to_string(slave),
                             "m" + std::to_string(master));
  };

  // One scheme assigns each slave to one master; enumerate all of them with
  // slave 1 as the most significant digit.
  long long scheme_count = 1;
  for (int i = 0; i < n_slaves && scheme_count <= 4096; ++i)
    scheme_count *= n_masters;
  if (scheme_count > 4096)
    throw ResourceError("master-slave: too many assignment schemes (" +
                        std::to_string(n_masters) + "^" +
                        std::to_string(n_slaves) + ")");
  std::vector<WpclPtr> schemes;
  std::vector<int> pick(n_slaves, 1);
  for (;;) {
    std::vector<WpclPtr> parts;
    for (int i = 1; i <= n_slaves; ++i) parts.push_back(phi(i, pick[i - 1]));
    schemes.push_back(wpcl_fullval(oplus_chain(parts)));
    int i = n_slaves - 1;
    while (i >= 0 && pick[i] == n_masters) pick[i--] = 1;
    if (i < 0) break;
    ++pick[i];
  }

  WpclPtr formula;
  if (variant == "i") {
    formula = wpcl_closure(oplus_chain(schemes));
  } else if (variant == "ii") {
    std::vector<WpclPtr> closed;
    for (const auto& s : schemes) closed.push_back(wpcl_closure(s));
    formula = otimes_chain(closed);
  } else if (variant == "iii") {
    std::vector<WpclPtr> per_slave;
    for (int i = 1; i <= n_slaves; ++i) {
      std::vector<WpclPtr> parts;
      for (int j = 1; j <= n_masters; ++j) parts.push_back(phi(i, j));
      per_slave.push_back(wpcl_fullval(oplus_chain(parts)));
    }
    formula = wpcl_closure(oplus_chain(per_slave));
  } else {
    throw DomainError("master-slave: unknown variant '" + variant +
                      "' (expected i, ii or iii)");
  }

  std::vector<Interaction> legal;
  for (int i = 1; i <= n_slaves; ++i)
    for (int j = 1; j <= n_masters; ++j)
      legal.push_back(pair_interaction(ports, "s" + std::to_string(i),
                                       "m" + std::to_string(j)));
  return {ports, formula, Configuration(std::move(legal))};
}

ArchFixture build_pubsub(int n_publishers, int n_topics, int n_subscribers,
                         const WeightMap& weights,
                         const std::string& variant) {
  if (n_publishers < 1 || n_topics < 1 || n_subscribers < 1)
    throw DomainError("pubsub: needs publishers, topics and subscribers");
  if (n_publishers + n_subscribers + 2 * n_topics > PortSet::kMaxPorts)
    throw DomainError("pubsub: too many components");

  std::vector<std::string> names;
  for (int k = 1; k <= n_publishers; ++k)
    names.push_back("p" + std::to_string(k));
  for (int i = 1; i <= n_subscribers; ++i)
    names.push_back("s" + std::to_string(i));
  for (int j = 1; j <= n_topics; ++j) {
    names.push_back("t" + std::to_string(j) + "1");
    names.push_back("t" + std::to_string(j) + "2");
  }
  PortSet ports(std::move(names));

  auto pub_leg = [&](int k, int j) {
    return weighted_monomial(ports, weights, "p" + std::to_string(k),
                             "t" + std::to_string(j) + "1");
  };
  auto sub_leg = [&](int i, int j) {
    return weighted_monomial(ports, weights, "s" + std::to_string(i),
                             "t" + std::to_string(j) + "2");
  };

  // Best route to subscriber i: any topic, any publisher, valued over the
  // publisher leg and the subscriber leg of that topic.
  auto zeta_s = [&](int i) {
    std::vector<WpclPtr> routes;
    for (int j = 1; j <= n_topics; ++j)
      for (int k = 1; k <= n_publishers; ++k)
        routes.push_back(wpcl_fullval(wpcl_oplus(pub_leg(k, j), sub_leg(i, j))));
    return oplus_chain(routes);
  };
  // Everything wired to topic j, valued together.
  auto zeta_t = [&](int j) {
    std::vector<WpclPtr> legs;
    for (int k = 1; k <= n_publishers; ++k) legs.push_back(pub_leg(k, j));
    for (int i = 1; i <= n_subscribers; ++i) legs.push_back(sub_leg(i, j));
    return wpcl_fullval(oplus_chain(legs));
  };

  WpclPtr formula;
  if (variant == "total") {
    std::vector<WpclPtr> parts;
    for (int i = 1; i <= n_subscribers; ++i)
      parts.push_back(wpcl_closure(zeta_s(i)));
    formula = otimes_chain(parts);
  } else if (variant == "prune") {
    std::vector<WpclPtr> parts;
    for (int j = 1; j <= n_topics; ++j) parts.push_back(zeta_t(j));
    formula = wpcl_closure(oplus_chain(parts));
  } else if (variant.rfind("subscriber-", 0) == 0 || variant.rfind("topic-", 0) == 0) {
    const bool sub = variant.rfind("subscriber-", 0) == 0;
    const std::string tail = variant.substr(sub ? 11 : 6);
    int idx = 0;
    try {
      idx = std::stoi(tail);
    } catch (const std::exception&) {
      idx = 0;
    }
    if (sub && (idx < 1 || idx > n_subscribers))
      throw DomainError("pubsub: no subscriber '" + tail + "'");
    if (!sub && (idx < 1 || idx > n_topics))
      throw DomainError("pubsub: no topic '" + tail + "'");
    formula = wpcl_closure(sub ? zeta_s(idx) : zeta_t(idx));
  } else {
    throw DomainError("pubsub: unknown variant '" + variant +
                      "' (expected subscriber-<i>, total, topic-<j> or prune)");
  }

  std::vector<Interaction> wiring;
  for (int j = 1; j <= n_topics; ++j) {
    for (int k = 1; k <= n_publishers; ++k)
      wiring.push_back(pair_interaction(ports, "p" + std::to_string(k),
                                        "t" + std::to_string(j) + "1"));
    for (int i = 1; i <= n_subscribers; ++i)
      wiring.push_back(pair_interaction(ports, "s" + std::to_string(i),
                                        "t" + std::to_string(j) + "2"));
  }
  return {ports, formula, Configuration(std::move(wiring))};
}

ArchFixture build_star(int n, const WeightMap& weights) {
  if (n < 3) throw DomainError("star: needs at least three components");
  if (n > PortSet::kMaxPorts) throw DomainError("star: too many components");

  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
  PortSet ports(std::move(names));

  // Component i as the center: its links to every other component, valued
  // together. Weights are read center-first, so "s1,s2" belongs to center 1.
  std::vector<WpclPtr> centers;
  for (int i = 1; i <= n; ++i) {
    std::vector<WpclPtr> links;
    for (int j = 1; j <= n; ++j)
      if (j != i)
        links.push_back(weighted_monomial(ports, weights,
                                          "s" + std::to_string(i),
                                          "s" + std::to_string(j)));
    centers.push_back(wpcl_fullval(oplus_chain(links)));
  }
  WpclPtr formula = wpcl_closure(oplus_chain(centers));

  std::vector<Interaction> wiring;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      wiring.push_back(pair_interaction(ports, "s" + std::to_string(i),
                                        "s" + std::to_string(j)));
  return {ports, formula, Configuration(std::move(wiring))};
}

}  // namespace wpcl
