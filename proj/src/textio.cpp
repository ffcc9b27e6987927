#include "wpcl/textio.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "wpcl/errors.hpp"

namespace wpcl {

namespace {

enum class Tok {
  End,
  Ident,
  Int,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Semi,
  Colon,
  Bang,
  Dot,
  Pipe,
  Plus,
  Caret,
  Slash,
  Minus,
  Arrow,    // =>
  OplusW,   // (+)
  OtimesW,  // (x)
  CoalW,    // (#)
};

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto push = [&](Tok k, std::size_t b, std::size_t e) {
    out.push_back({k, text.substr(b, e - b), SourceSpan{b, e}});
    i = e;
  };
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t b = i;
    if (ident_start(c)) {
      std::size_t e = i + 1;
      while (e < n && ident_char(text[e])) ++e;
      push(Tok::Ident, b, e);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t e = i + 1;
      while (e < n && std::isdigit(static_cast<unsigned char>(text[e]))) ++e;
      push(Tok::Int, b, e);
      continue;
    }
    switch (c) {
      case '(':
        if (i + 2 < n && text[i + 2] == ')' &&
            (text[i + 1] == '+' || text[i + 1] == 'x' || text[i + 1] == '#')) {
          Tok k = text[i + 1] == '+'   ? Tok::OplusW
                  : text[i + 1] == 'x' ? Tok::OtimesW
                                       : Tok::CoalW;
          push(k, b, i + 3);
        } else {
          push(Tok::LParen, b, i + 1);
        }
        continue;
      case ')': push(Tok::RParen, b, i + 1); continue;
      case '[': push(Tok::LBracket, b, i + 1); continue;
      case ']': push(Tok::RBracket, b, i + 1); continue;
      case '{': push(Tok::LBrace, b, i + 1); continue;
      case '}': push(Tok::RBrace, b, i + 1); continue;
      case ',': push(Tok::Comma, b, i + 1); continue;
      case ';': push(Tok::Semi, b, i + 1); continue;
      case ':': push(Tok::Colon, b, i + 1); continue;
      case '!': push(Tok::Bang, b, i + 1); continue;
      case '.': push(Tok::Dot, b, i + 1); continue;
      case '|': push(Tok::Pipe, b, i + 1); continue;
      case '+': push(Tok::Plus, b, i + 1); continue;
      case '^': push(Tok::Caret, b, i + 1); continue;
      case '/': push(Tok::Slash, b, i + 1); continue;
      case '-': push(Tok::Minus, b, i + 1); continue;
      case '=':
        if (i + 1 < n && text[i + 1] == '>') {
          push(Tok::Arrow, b, i + 2);
          continue;
        }
        throw ParseError("expected '=>' after '='", SourceSpan{b, i + 1});
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'",
                         SourceSpan{b, i + 1});
    }
  }
  out.push_back({Tok::End, std::string_view(), SourceSpan{n, n}});
  return out;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;
  const PortSet* ports = nullptr;

  const Token& peek() const { return toks[pos]; }
  const Token& next() { return toks[pos++]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(std::string_view word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }

  std::string shown(const Token& t) const {
    return t.kind == Tok::End ? "end of input"
                              : "'" + std::string(t.text) + "'";
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError("expected " + expected + ", got " + shown(peek()),
                     peek().span);
  }
  void expect(Tok k, const std::string& what) {
    if (!at(k)) fail(what);
    ++pos;
  }

  int port(const Token& t) const {
    int idx = ports->find(t.text);
    if (idx < 0)
      throw ParseError("unknown port '" + std::string(t.text) + "'", t.span);
    return idx;
  }

  // --- interaction level ---------------------------------------------------

  PilPtr pil_or_level() {
    PilPtr out = pil_and_level();
    while (at(Tok::Pipe)) {
      ++pos;
      out = pil_or(out, pil_and_level());
    }
    return out;
  }

  PilPtr pil_and_level() {
    PilPtr out = pil_primary();
    while (at(Tok::Dot)) {
      ++pos;
      out = pil_and(out, pil_primary());
    }
    return out;
  }

  PilPtr pil_primary() {
    if (at(Tok::Bang)) {
      ++pos;
      return pil_neg(pil_primary());
    }
    if (at(Tok::LParen)) {
      ++pos;
      PilPtr inner = pil_or_level();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (at(Tok::Ident)) {
      if (peek().text == "true") {
        ++pos;
        return pil_true();
      }
      if (peek().text == "false") {
        ++pos;
        return pil_false();
      }
      if (peek().text == "m" && toks[pos + 1].kind == Tok::Colon)
        return monomial();
      const Token& t = next();
      return pil_atom(port(t));
    }
    fail("an interaction formula");
  }

  // `m:` literal ('.' literal)*. Listed ports are positive unless negated;
  // every unlisted port is negative, so `m: p` over {p, q} reads p . !q.
  PilPtr monomial() {
    std::size_t begin = peek().span.begin;
    pos += 2;  // m :
    PortMask pos_mask = 0, neg_mask = 0;
    for (;;) {
      bool negated = at(Tok::Bang);
      if (negated) ++pos;
      if (!at(Tok::Ident)) fail("a port literal");
      const Token& t = next();
      PortMask bit = PortMask(1) << port(t);
      if ((pos_mask | neg_mask) & bit)
        throw ParseError(
            "port '" + std::string(t.text) + "' mentioned twice in monomial",
            t.span);
      (negated ? neg_mask : pos_mask) |= bit;
      if (!at(Tok::Dot)) break;
      ++pos;
    }
    SourceSpan span{begin, toks[pos - 1].span.end};
    if (pos_mask == 0)
      throw ParseError("monomial needs at least one positive port", span);
    PortMask all = (PortMask(1) << ports->size()) - 1;
    return monomial_pil(FullMonomial{pos_mask, all & ~pos_mask}, *ports);
  }

  // --- configuration level -------------------------------------------------

  PclPtr pcl_level() {  // implication, right associative, loosest
    PclPtr out = pcl_union_level();
    if (at(Tok::Arrow)) {
      ++pos;
      out = pcl_implies(out, pcl_level());
    }
    return out;
  }

  PclPtr pcl_union_level() {
    PclPtr out = pcl_intersect_level();
    while (at_ident("U")) {
      ++pos;
      out = pcl_union(out, pcl_intersect_level());
    }
    return out;
  }

  PclPtr pcl_intersect_level() {
    PclPtr out = pcl_coalesce_level();
    while (at(Tok::Caret)) {
      ++pos;
      out = pcl_intersect(out, pcl_coalesce_level());
    }
    return out;
  }

  PclPtr pcl_coalesce_level() {
    PclPtr out = pcl_primary();
    while (at(Tok::Plus)) {
      ++pos;
      out = pcl_coalesce(out, pcl_primary());
    }
    return out;
  }

  PclPtr pcl_primary() {
    if (at_ident("neg")) {
      ++pos;
      return pcl_not(pcl_primary());
    }
    if (at(Tok::LParen)) {
      // Parentheses here may group a configuration formula or belong to the
      // embedded interaction level: `(a U b) + c` versus `(p | q) . r`. Try
      // the configuration reading; a following interaction operator (or a
      // parse failure) sends us down the interaction path instead.
      std::size_t save = pos;
      try {
        ++pos;
        PclPtr inner = pcl_level();
        expect(Tok::RParen, "')'");
        if (!at(Tok::Dot) && !at(Tok::Pipe)) return inner;
      } catch (const ParseError&) {
      }
      pos = save;
    }
    return pcl_pil(pil_or_level());
  }

  // --- weighted level --------------------------------------------------------

  WpclPtr wpcl_level() {
    WpclPtr out = wpcl_coalesce_level();
    while (at(Tok::OplusW)) {
      ++pos;
      out = wpcl_oplus(out, wpcl_coalesce_level());
    }
    return out;
  }

  WpclPtr wpcl_coalesce_level() {
    WpclPtr out = wpcl_otimes_level();
    while (at(Tok::CoalW)) {
      ++pos;
      out = wpcl_coalesce(out, wpcl_otimes_level());
    }
    return out;
  }

  WpclPtr wpcl_otimes_level() {
    WpclPtr out = wpcl_primary();
    while (at(Tok::OtimesW)) {
      ++pos;
      out = wpcl_otimes(out, wpcl_primary());
    }
    return out;
  }

  WpclPtr wpcl_primary() {
    if (at(Tok::LBracket)) {
      ++pos;
      PclPtr f = pcl_level();
      expect(Tok::RBracket, "']'");
      return wpcl_pcl(f);
    }
    if (at(Tok::LParen)) {
      ++pos;
      WpclPtr inner = wpcl_level();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (at_ident("w")) {
      ++pos;
      expect(Tok::LParen, "'('");
      Value v = value_tokens();
      expect(Tok::RParen, "')'");
      return wpcl_const(std::move(v));
    }
    if (at_ident("star") || at_ident("close") || at_ident("fullval")) {
      std::string_view word = next().text;
      expect(Tok::LParen, "'('");
      WpclPtr inner = wpcl_level();
      expect(Tok::RParen, "')'");
      if (word == "star") return wpcl_star(std::move(inner));
      if (word == "close") return wpcl_closure(std::move(inner));
      return wpcl_fullval(std::move(inner));
    }
    fail("a weighted formula");
  }

  // --- values and configurations ---------------------------------------------

  Value value_tokens() {
    std::size_t begin = peek().span.begin;
    std::string text;
    if (at(Tok::Minus)) {
      text += '-';
      ++pos;
    }
    if (at_ident("inf")) {
      text += "inf";
      ++pos;
    } else {
      if (!at(Tok::Int)) fail("a number or inf");
      text += next().text;
      if (at(Tok::Slash)) {
        ++pos;
        if (!at(Tok::Int)) fail("a positive denominator");
        text += '/';
        text += next().text;
      }
    }
    SourceSpan span{begin, toks[pos - 1].span.end};
    try {
      return Value::parse(text);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), span);
    }
  }

  Configuration configuration() {
    expect(Tok::LBrace, "'{'");
    if (at(Tok::RBrace))
      throw ParseError("configuration must be nonempty", peek().span);
    std::vector<Interaction> members;
    for (;;) {
      expect(Tok::LBrace, "'{'");
      if (at(Tok::RBrace))
        throw ParseError("interaction must be nonempty", peek().span);
      PortMask mask = 0;
      for (;;) {
        if (!at(Tok::Ident)) fail("a port name");
        mask |= PortMask(1) << port(next());
        if (!at(Tok::Comma)) break;
        ++pos;
      }
      expect(Tok::RBrace, "'}'");
      members.push_back(Interaction{mask});
      if (!at(Tok::Comma)) break;
      ++pos;
    }
    expect(Tok::RBrace, "'}'");
    return Configuration(std::move(members));
  }
};

Parser make_parser(std::string_view text, const PortSet* ports) {
  Parser p;
  p.toks = lex(text);
  p.ports = ports;
  return p;
}

// --- printing ----------------------------------------------------------------

// Levels, loosest first. A node whose level is below the context minimum is
// parenthesized; binary operators print the right operand one level up, so
// right-nested chains of one operator keep their grouping.
int pil_level(const PilNode& x) {
  switch (x.kind) {
    case PilNode::Kind::Or: return 0;
    case PilNode::Kind::And: return 1;
    case PilNode::Kind::Neg:
      return x.a->kind == PilNode::Kind::True ? 3 : 2;  // prints as `false`
    default: return 3;
  }
}

void pil_str(std::string& out, const PilPtr& x, int min_level,
             const PortSet& ports) {
  const bool paren = pil_level(*x) < min_level;
  if (paren) out += '(';
  switch (x->kind) {
    case PilNode::Kind::True:
      out += "true";
      break;
    case PilNode::Kind::Atom:
      out += ports.name(x->port);
      break;
    case PilNode::Kind::Neg:
      if (x->a->kind == PilNode::Kind::True) {
        out += "false";
      } else {
        out += '!';
        pil_str(out, x->a, 2, ports);
      }
      break;
    case PilNode::Kind::And:
      pil_str(out, x->a, 1, ports);
      out += " . ";
      pil_str(out, x->b, 2, ports);
      break;
    case PilNode::Kind::Or:
      pil_str(out, x->a, 0, ports);
      out += " | ";
      pil_str(out, x->b, 1, ports);
      break;
  }
  if (paren) out += ')';
}

int pcl_level(const PclNode& x) {
  switch (x.kind) {
    case PclNode::Kind::Implies: return 0;
    case PclNode::Kind::Union: return 1;
    case PclNode::Kind::Intersect: return 2;
    case PclNode::Kind::Coalesce: return 3;
    case PclNode::Kind::Not: return 4;
    default: return 5;
  }
}

void pcl_str(std::string& out, const PclPtr& x, int min_level,
             const PortSet& ports) {
  const bool paren = pcl_level(*x) < min_level;
  if (paren) out += '(';
  switch (x->kind) {
    case PclNode::Kind::True:
      out += "true";
      break;
    case PclNode::Kind::Pil:
      pil_str(out, x->pil, 0, ports);
      break;
    case PclNode::Kind::Not:
      out += "neg ";
      pcl_str(out, x->a, 4, ports);
      break;
    case PclNode::Kind::Coalesce:
      pcl_str(out, x->a, 3, ports);
      out += " + ";
      pcl_str(out, x->b, 4, ports);
      break;
    case PclNode::Kind::Intersect:
      pcl_str(out, x->a, 2, ports);
      out += " ^ ";
      pcl_str(out, x->b, 3, ports);
      break;
    case PclNode::Kind::Union:
      pcl_str(out, x->a, 1, ports);
      out += " U ";
      pcl_str(out, x->b, 2, ports);
      break;
    case PclNode::Kind::Implies:
      pcl_str(out, x->a, 1, ports);
      out += " => ";
      pcl_str(out, x->b, 0, ports);  // right associative
      break;
  }
  if (paren) out += ')';
}

int wpcl_level(const WpclNode& x) {
  switch (x.kind) {
    case WpclNode::Kind::Oplus: return 0;
    case WpclNode::Kind::Coalesce: return 1;
    case WpclNode::Kind::Otimes: return 2;
    default: return 3;
  }
}

void wpcl_str(std::string& out, const WpclPtr& x, int min_level,
              const PortSet& ports) {
  const bool paren = wpcl_level(*x) < min_level;
  if (paren) out += '(';
  switch (x->kind) {
    case WpclNode::Kind::Const:
      out += "w(";
      out += x->value.to_string();
      out += ')';
      break;
    case WpclNode::Kind::Pcl:
      out += '[';
      pcl_str(out, x->pcl, 0, ports);
      out += ']';
      break;
    case WpclNode::Kind::Star:
    case WpclNode::Kind::Closure:
    case WpclNode::Kind::FullVal:
      out += x->kind == WpclNode::Kind::Star      ? "star("
             : x->kind == WpclNode::Kind::Closure ? "close("
                                                  : "fullval(";
      wpcl_str(out, x->a, 0, ports);
      out += ')';
      break;
    case WpclNode::Kind::Otimes:
      wpcl_str(out, x->a, 2, ports);
      out += " (x) ";
      wpcl_str(out, x->b, 3, ports);
      break;
    case WpclNode::Kind::Coalesce:
      wpcl_str(out, x->a, 1, ports);
      out += " (#) ";
      wpcl_str(out, x->b, 2, ports);
      break;
    case WpclNode::Kind::Oplus:
      wpcl_str(out, x->a, 0, ports);
      out += " (+) ";
      wpcl_str(out, x->b, 1, ports);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

WpclPtr parse_wpcl(std::string_view text, const PortSet& ports) {
  Parser p = make_parser(text, &ports);
  WpclPtr out = p.wpcl_level();
  if (!p.at(Tok::End)) p.fail("end of input");
  return out;
}

PclPtr parse_pcl(std::string_view text, const PortSet& ports) {
  Parser p = make_parser(text, &ports);
  PclPtr out = p.pcl_level();
  if (!p.at(Tok::End)) p.fail("end of input");
  return out;
}

PilPtr parse_pil(std::string_view text, const PortSet& ports) {
  Parser p = make_parser(text, &ports);
  PilPtr out = p.pil_or_level();
  if (!p.at(Tok::End)) p.fail("end of input");
  return out;
}

Configuration parse_configuration(std::string_view text,
                                  const PortSet& ports) {
  Parser p = make_parser(text, &ports);
  Configuration out = p.configuration();
  if (!p.at(Tok::End)) p.fail("end of input");
  return out;
}

Value parse_value(std::string_view text) {
  Parser p = make_parser(text, nullptr);
  Value out = p.value_tokens();
  if (!p.at(Tok::End)) p.fail("end of input");
  return out;
}

ParsedFile parse_file(std::string_view text) {
  Parser p = make_parser(text, nullptr);
  if (!p.at_ident("ports")) p.fail("a port declaration ('ports p, q;')");
  SourceSpan decl = p.peek().span;
  ++p.pos;
  std::vector<std::string> names;
  for (;;) {
    if (!p.at(Tok::Ident)) p.fail("a port name");
    names.emplace_back(p.next().text);
    if (!p.at(Tok::Comma)) break;
    ++p.pos;
  }
  p.expect(Tok::Semi, "';'");
  PortSet ports = [&] {
    try {
      return PortSet(std::move(names));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), decl);
    }
  }();
  p.ports = &ports;
  std::vector<WpclPtr> formulas;
  while (!p.at(Tok::End)) {
    formulas.push_back(p.wpcl_level());
    p.expect(Tok::Semi, "';'");
  }
  return {std::move(ports), std::move(formulas)};
}

std::string print_wpcl(const WpclPtr& zeta, const PortSet& ports) {
  std::string out;
  wpcl_str(out, zeta, 0, ports);
  return out;
}

std::string print_pcl(const PclPtr& f, const PortSet& ports) {
  std::string out;
  pcl_str(out, f, 0, ports);
  return out;
}

std::string print_pil(const PilPtr& phi, const PortSet& ports) {
  std::string out;
  pil_str(out, phi, 0, ports);
  return out;
}

std::string print_value(const Value& v) { return v.to_string(); }

std::string print_configuration(const Configuration& gamma,
                                const PortSet& ports) {
  std::string out = "{";
  bool first_i = true;
  for (Interaction a : gamma.interactions()) {
    if (!first_i) out += ',';
    first_i = false;
    out += '{';
    bool first_p = true;
    for (int i = 0; i < ports.size(); ++i) {
      if (!(a.ports >> i & 1)) continue;
      if (!first_p) out += ',';
      first_p = false;
      out += ports.name(i);
    }
    out += '}';
  }
  out += '}';
  return out;
}

std::string print_fnf(const Fnf& fnf, const PortSet& ports) {
  if (fnf.is_constant()) return "CONST " + fnf.constant_value().to_string();
  const auto& ts = fnf.term_list();
  if (ts.empty()) return "EMPTY";
  std::string out;
  for (const auto& t : ts) {
    if (!out.empty()) out += '\n';
    out += t.value.to_string();
    out += " @ ";
    out += print_configuration(t.config, ports);
  }
  return out;
}

}  // namespace wpcl
