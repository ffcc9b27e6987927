#pragma once

#include <map>
#include <string>

#include "wpcl/logic.hpp"
#include "wpcl/value.hpp"

namespace wpcl {

/// Interaction weights for an architecture style, keyed by pair labels in
/// the style's own orientation:
///   master-slave  "s<i>,m<j>"    slave first
///   pubsub        "p<k>,t<j>1"   publisher to the sending side of topic j
///                 "s<i>,t<j>2"   subscriber to the receiving side
///   star          "s<i>,s<j>"    central component first (directional, so
///                                "s1,s2" and "s2,s1" are distinct weights)
using WeightMap = std::map<std::string, Value>;

/// A built style instance: the port universe, the style formula with
/// derived operators left unexpanded (so it prints the way it reads), and
/// the configuration the style is meant to be evaluated on.
struct ArchFixture {
  PortSet ports;
  WpclPtr formula;
  Configuration config;
};

/// Master/slave with every slave attached to exactly one master.
/// Variants:
///   i    close(sum over assignment schemes of fullval(sum of the scheme's
///        weighted monomials)) - best scheme
///   ii   product over schemes of close(fullval(...)) - all schemes combined
///   iii  close(sum over slaves of fullval(sum of that slave's options))
/// The returned configuration holds every legal slave-master interaction.
ArchFixture build_master_slave(int n_masters, int n_slaves,
                               const WeightMap& weights,
                               const std::string& variant);

/// Publish/subscribe through topics; topic j has a sending port t<j>1 and a
/// receiving port t<j>2. Variants:
///   subscriber-<i>  close of zeta_s_i, the best publisher/topic route to
///                   subscriber i
///   total           product over subscribers of close(zeta_s_i)
///   topic-<j>       close of zeta_t_j, the valuation of everything wired
///                   to topic j
///   prune           close of the sum of all zeta_t_j - selects the topic
///                   value an (+)-optimal pruning would remove
/// The returned configuration wires every publisher and every subscriber to
/// every topic.
ArchFixture build_pubsub(int n_publishers, int n_topics, int n_subscribers,
                         const WeightMap& weights, const std::string& variant);

/// Star: n single-port components, each in turn considered central and
/// valued over its links to all others; close of the sum picks across
/// centers. The returned configuration holds all binary interactions.
ArchFixture build_star(int n, const WeightMap& weights);

}  // namespace wpcl
