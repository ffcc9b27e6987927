#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "support/oracle.hpp"
#include "wpcl/errors.hpp"
#include "wpcl/normal_form.hpp"
#include "wpcl/textio.hpp"

using namespace wpcl;

TEST_CASE("parsing builds the documented shapes") {
  PortSet ports({"p", "q"});

  WpclPtr a = parse_wpcl("w(2) (#) w(4)", ports);
  CHECK(a->kind == WpclNode::Kind::Coalesce);
  CHECK(a->a->value == Value(2));
  CHECK(a->b->value == Value(4));

  WpclPtr b = parse_wpcl("star( w(2) (+) [m: p . !q] )", ports);
  REQUIRE(b->kind == WpclNode::Kind::Star);
  REQUIRE(b->a->kind == WpclNode::Kind::Oplus);
  CHECK(b->a->a->value == Value(2));
  REQUIRE(b->a->b->kind == WpclNode::Kind::Pcl);
  CHECK(ast_equal(b->a->b->pcl,
                  pcl_pil(monomial_pil(
                      characteristic_monomial(Interaction{1}, ports), ports))));

  WpclPtr c = parse_wpcl("close(w(1))", ports);
  REQUIRE(c->kind == WpclNode::Kind::Closure);
  const PvMonoid& m = builtin_monoid("max-avg-plus");
  WpclPtr expanded = expand_derived(c, m);
  CHECK(ast_equal(expanded,
                  wpcl_oplus(wpcl_const(Value(1)),
                             wpcl_coalesce(wpcl_const(Value(1)),
                                           wpcl_const(m.one())))));
}

TEST_CASE("operator precedence and associativity") {
  PortSet ports({"p", "q", "r"});

  // (x) binds tighter than (#) binds tighter than (+)
  WpclPtr z = parse_wpcl("w(1) (+) w(2) (#) w(3) (x) w(4)", ports);
  REQUIRE(z->kind == WpclNode::Kind::Oplus);
  REQUIRE(z->b->kind == WpclNode::Kind::Coalesce);
  CHECK(z->b->b->kind == WpclNode::Kind::Otimes);

  // binary weighted operators associate to the left
  WpclPtr l = parse_wpcl("w(1) (+) w(2) (+) w(3)", ports);
  CHECK(l->a->kind == WpclNode::Kind::Oplus);
  CHECK(l->b->kind == WpclNode::Kind::Const);

  // implication is right associative and loosest
  PclPtr f = parse_pcl("p => q => r", ports);
  REQUIRE(f->kind == PclNode::Kind::Implies);
  CHECK(f->b->kind == PclNode::Kind::Implies);

  // + binds tighter than ^ binds tighter than U
  PclPtr g = parse_pcl("p U q ^ p + q", ports);
  REQUIRE(g->kind == PclNode::Kind::Union);
  REQUIRE(g->b->kind == PclNode::Kind::Intersect);
  CHECK(g->b->b->kind == PclNode::Kind::Coalesce);

  // ! binds tighter than . binds tighter than |
  PilPtr h = parse_pil("!p . q | r", ports);
  REQUIRE(h->kind == PilNode::Kind::Or);
  REQUIRE(h->a->kind == PilNode::Kind::And);
  CHECK(h->a->a->kind == PilNode::Kind::Neg);
}

TEST_CASE("parentheses and embeddings disambiguate levels") {
  PortSet ports({"p", "q", "r"});

  // configuration-level grouping
  PclPtr a = parse_pcl("(p U q) + r", ports);
  REQUIRE(a->kind == PclNode::Kind::Coalesce);
  CHECK(a->a->kind == PclNode::Kind::Union);

  // interaction-level grouping after the same open paren
  PclPtr b = parse_pcl("(p | q) . r", ports);
  REQUIRE(b->kind == PclNode::Kind::Pil);
  CHECK(b->pil->kind == PilNode::Kind::And);

  // `neg` belongs to the configuration level
  PclPtr c = parse_pcl("neg p U q", ports);
  REQUIRE(c->kind == PclNode::Kind::Union);
  CHECK(c->a->kind == PclNode::Kind::Not);
}

TEST_CASE("monomial sugar lists positives, the rest is negative") {
  PortSet ports({"p", "q", "r"});
  CHECK(ast_equal(
      parse_pil("m: p", ports),
      monomial_pil(characteristic_monomial(Interaction{1}, ports), ports)));
  CHECK(ast_equal(
      parse_pil("m: p . q", ports),
      monomial_pil(characteristic_monomial(Interaction{3}, ports), ports)));
  CHECK(ast_equal(parse_pil("m: p . !q", ports),
                  parse_pil("m: p", ports)));
  CHECK_THROWS_AS((void)parse_pil("m: p . p", ports), ParseError);
  CHECK_THROWS_AS((void)parse_pil("m: !p . !q . !r", ports), ParseError);
  CHECK_THROWS_AS((void)parse_pil("m: p . x", ports), ParseError);
}

TEST_CASE("configuration parsing is canonical and validated") {
  PortSet ports({"p", "q"});
  Configuration g = parse_configuration("{ {p}, {q} }", ports);
  CHECK(g == Configuration({Interaction{1}, Interaction{2}}));
  CHECK(parse_configuration("{{q},{p},{q}}", ports) == g);
  CHECK(parse_configuration("{{p,q}}", ports) ==
        Configuration({Interaction{3}}));

  auto message_of = [&](const char* text) {
    try {
      (void)parse_configuration(text, ports);
      return std::string("no error");
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
  };
  CHECK(message_of("{ }") == "configuration must be nonempty");
  CHECK(message_of("{ {} }") == "interaction must be nonempty");
  CHECK(message_of("{ {x} }") == "unknown port 'x'");
}

TEST_CASE("value parsing round trips and rejects bad input") {
  for (const char* s : {"0", "4", "-4", "3/2", "-5/3", "inf", "-inf"})
    CHECK(print_value(parse_value(s)) == s);
  CHECK_THROWS_AS((void)parse_value("2/0"), ParseError);
  CHECK_THROWS_AS((void)parse_value("1.5"), ParseError);
  CHECK_THROWS_AS((void)parse_value(""), ParseError);
}

TEST_CASE("parse errors carry useful spans") {
  PortSet ports({"p", "q"});
  try {
    (void)parse_wpcl("w(2) (#) w(", ports);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.span.begin == 11);  // points at end of input
  }
  try {
    (void)parse_wpcl("w(2) @ w(3)", ports);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.span.begin == 5);
    CHECK(e.span.end == 6);
  }
}

TEST_CASE("files declare ports then formulas") {
  ParsedFile f = parse_file(
      "ports p, q;\n"
      "w(2) (#) w(4);\n"
      "star(w(1) (+) [m: p]);\n");
  CHECK(f.ports.size() == 2);
  REQUIRE(f.formulas.size() == 2);
  CHECK(f.formulas[0]->kind == WpclNode::Kind::Coalesce);
  CHECK(f.formulas[1]->kind == WpclNode::Kind::Star);
  CHECK_THROWS_AS((void)parse_file("w(1);"), ParseError);
  CHECK_THROWS_AS((void)parse_file("ports p, p; w(1);"), ParseError);
}

TEST_CASE("printing emits minimal parentheses that reparse identically") {
  PortSet ports({"p", "q"});
  auto canon = [&](const char* text) {
    return print_wpcl(parse_wpcl(text, ports), ports);
  };
  CHECK(canon("w(3/2)") == "w(3/2)");
  CHECK(canon("(w(1) (+) w(2))") == "w(1) (+) w(2)");
  CHECK(canon("w(1) (+) (w(2) (+) w(3))") == "w(1) (+) (w(2) (+) w(3))");
  CHECK(canon("(w(1) (+) w(2)) (x) w(3)") == "(w(1) (+) w(2)) (x) w(3)");
  CHECK(canon("star((w(2)))") == "star(w(2))");
  CHECK(canon("[ (p|q) . q ]") == "[(p | q) . q]");
  CHECK(canon("[neg (p U q)]") == "[neg (p U q)]");
  CHECK(canon("[neg p U q]") == "[neg p U q]");
  CHECK(canon("[p => q => p]") == "[p => q => p]");
  CHECK(canon("[(p => q) => p]") == "[(p => q) => p]");
  CHECK(canon("[m: p . !q]") == "[p . !q]");
  CHECK(canon("[false]") == "[neg true]");
  CHECK(canon("fullval(w(1) (x) [p])") == "fullval(w(1) (x) [p])");

  PortSet one({"p"});
  CHECK(print_fnf(Fnf::constant(Value::neg_inf(),
                                builtin_monoid("min-maj-max")),
                  one) == "CONST -inf");
  CHECK(print_fnf(Fnf::terms({}, builtin_monoid("max-avg-plus")), one) ==
        "EMPTY");
  CHECK(print_fnf(Fnf::terms({FnfTerm{Value(6),
                                      parse_configuration("{{p}}", one)}},
                             builtin_monoid("max-avg-plus")),
                  one) == "6 @ {{p}}");
}

TEST_CASE("random syntax trees survive a print and parse round trip") {
  PortSet ports({"p", "q", "r"});
  const PvMonoid& m = builtin_monoid("max-avg-plus");
  oracle::Rng r(301);
  for (int i = 0; i < 400; ++i) {
    WpclPtr z = oracle::random_wpcl(r, ports, m, 4, {.allow_fullval = true});
    std::string text = print_wpcl(z, ports);
    CAPTURE(text);
    WpclPtr back = parse_wpcl(text, ports);
    CHECK(ast_equal(z, back));
    CHECK(print_wpcl(back, ports) == text);
  }
  for (int i = 0; i < 300; ++i) {
    PclPtr f = oracle::random_pcl(r, ports, 4);
    std::string text = print_pcl(f, ports);
    CAPTURE(text);
    CHECK(ast_equal(f, parse_pcl(text, ports)));
  }
  for (int i = 0; i < 300; ++i) {
    PilPtr f = oracle::random_pil(r, ports, 5);
    std::string text = print_pil(f, ports);
    CAPTURE(text);
    CHECK(ast_equal(f, parse_pil(text, ports)));
  }
  for (int i = 0; i < 200; ++i) {
    Configuration g = oracle::random_config(r, ports);
    CHECK(parse_configuration(print_configuration(g, ports), ports) == g);
  }
}
