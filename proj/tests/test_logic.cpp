#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "support/oracle.hpp"
#include "wpcl/errors.hpp"
#include "wpcl/logic.hpp"

using namespace wpcl;

TEST_CASE("port sets validate their names") {
  PortSet ports({"p", "q"});
  CHECK(ports.size() == 2);
  CHECK(ports.find("q") == 1);
  CHECK(ports.find("r") == -1);
  CHECK(ports.require("p") == 0);
  CHECK_THROWS_AS((void)ports.require("r"), DomainError);
  CHECK_THROWS_AS(PortSet({}), DomainError);
  CHECK_THROWS_AS(PortSet({"p", "p"}), DomainError);
  CHECK_THROWS_AS(PortSet({""}), DomainError);
  std::vector<std::string> too_many;
  for (int i = 0; i < 31; ++i) too_many.push_back("p" + std::to_string(i));
  CHECK_THROWS_AS(PortSet{too_many}, DomainError);
}

TEST_CASE("configurations are sorted, deduplicated and nonempty-checked") {
  Interaction a{1}, b{2}, ab{3};
  Configuration g({ab, a, b, a});
  CHECK(g.size() == 3);
  CHECK(g.interactions() == std::vector<Interaction>{a, b, ab});
  CHECK_THROWS_AS(Configuration({Interaction{0}}), DomainError);

  CHECK(g.contains(ab));
  CHECK(!g.contains(Interaction{4}));
  CHECK(Configuration({a}).subset_of(g));
  CHECK(!g.subset_of(Configuration({a})));
  CHECK(Configuration({a}).disjoint_with(Configuration({b})));
  CHECK(!Configuration({a, b}).disjoint_with(Configuration({b})));
  CHECK(Configuration({a}).union_with(Configuration({b})) ==
        Configuration({a, b}));
}

TEST_CASE("interaction and configuration domains have the right sizes") {
  PortSet p1({"p"}), p2({"p", "q"}), p3({"p", "q", "r"});
  CHECK(all_interactions(p1).size() == 1);
  CHECK(all_interactions(p2).size() == 3);
  CHECK(all_interactions(p3).size() == 7);
  CHECK(all_configurations(p1).size() == 1);
  CHECK(all_configurations(p2).size() == 7);
  CHECK(all_configurations(p3).size() == 127);
  CHECK(configuration_count(1) == 1);
  CHECK(configuration_count(2) == 7);
  CHECK(configuration_count(3) == 127);
  CHECK(configuration_count(4) == 32767);
  CHECK(configuration_count(5) == 2147483647ull);
  CHECK_THROWS_AS((void)configuration_count(7), DomainError);
}

TEST_CASE("the configuration domain guard refuses five ports") {
  PortSet p5({"a", "b", "c", "d", "e"});
  CHECK_THROWS_AS((void)all_configurations(p5), ResourceError);
  Limits tight;
  tight.port_limit = 1;
  CHECK_THROWS_AS((void)all_configurations(PortSet({"p", "q"}), tight),
                  ResourceError);
}

TEST_CASE("characteristic monomials are inverse to monomial interactions") {
  PortSet ports({"p", "q", "r"});
  for (Interaction a : all_interactions(ports)) {
    FullMonomial mono = characteristic_monomial(a, ports);
    CHECK((mono.positives | mono.negatives) == 7);
    CHECK((mono.positives & mono.negatives) == 0);
    CHECK(monomial_interaction(mono) == a);
  }
  CHECK_THROWS_AS((void)monomial_interaction(FullMonomial{0, 7}), DomainError);
  CHECK_THROWS_AS((void)monomial_interaction(FullMonomial{3, 2}), DomainError);
}

TEST_CASE("a monomial formula is satisfied by exactly its interaction") {
  PortSet ports({"p", "q", "r"});
  for (Interaction a : all_interactions(ports)) {
    PilPtr phi = monomial_pil(characteristic_monomial(a, ports), ports);
    for (Interaction b : all_interactions(ports))
      CHECK(oracle::sat_pil(b, phi) == (a == b));
  }
}

TEST_CASE("double negation collapses at construction") {
  PilPtr x = pil_atom(0);
  CHECK(pil_neg(pil_neg(x)) == x);
  CHECK(pil_neg(x)->kind == PilNode::Kind::Neg);
  CHECK(ast_equal(pil_neg(pil_neg(pil_neg(x))), pil_neg(x)));
}

TEST_CASE("embedded boolean constants collapse to configuration constants") {
  CHECK(pcl_pil(pil_true()) == pcl_true());
  CHECK(ast_equal(pcl_pil(pil_false()), pcl_not(pcl_true())));
}

TEST_CASE("derived interaction operators expand through negation") {
  PilPtr a = pil_atom(0), b = pil_atom(1);
  PilPtr andy = pil_and(a, b);
  CHECK(andy->kind == PilNode::Kind::And);
  PilPtr expanded = expand_derived(andy);
  CHECK(expanded->kind == PilNode::Kind::Neg);
  // same satisfaction everywhere
  PortSet ports({"p", "q"});
  for (Interaction x : all_interactions(ports))
    CHECK(oracle::sat_pil(x, andy) == oracle::sat_pil(x, expanded));
}

TEST_CASE("derived configuration operators expand correctly") {
  PortSet ports({"p", "q"});
  oracle::Rng r(11);
  for (int i = 0; i < 100; ++i) {
    PclPtr f = oracle::random_pcl(r, ports, 3);
    PclPtr expanded = expand_derived(f);
    for (const Configuration& g : all_configurations(ports))
      CHECK(oracle::sat_pcl(g, f) == oracle::sat_pcl(g, expanded));
  }
}

TEST_CASE("weighted closure expands to its definition") {
  PortSet ports({"p", "q"});
  const PvMonoid& m = builtin_monoid("max-avg-plus");
  WpclPtr z = wpcl_closure(wpcl_const(Value(2)));
  WpclPtr expanded = expand_derived(z, m);
  CHECK(expanded->kind == WpclNode::Kind::Oplus);
  CHECK(expanded->b->kind == WpclNode::Kind::Coalesce);
  CHECK(expanded->b->b->kind == WpclNode::Kind::Const);
  CHECK(expanded->b->b->value == m.one());
}

TEST_CASE("structural equality distinguishes shapes") {
  CHECK(ast_equal(wpcl_const(Value(1)), wpcl_const(Value(1))));
  CHECK(!ast_equal(wpcl_const(Value(1)), wpcl_const(Value(2))));
  WpclPtr a = wpcl_oplus(wpcl_const(Value(1)), wpcl_const(Value(2)));
  WpclPtr b = wpcl_oplus(wpcl_const(Value(2)), wpcl_const(Value(1)));
  CHECK(!ast_equal(a, b));
  CHECK(ast_equal(a, wpcl_oplus(wpcl_const(Value(1)), wpcl_const(Value(2)))));
}
