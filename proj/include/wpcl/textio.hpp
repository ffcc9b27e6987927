#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wpcl/logic.hpp"
#include "wpcl/normal_form.hpp"
#include "wpcl/value.hpp"

namespace wpcl {

/// Concrete syntax, tightest binding first.
///   interaction level: ! (not), . (and), | (or); atoms are port names,
///     true, false; `m: p . !q` abbreviates the full monomial And-chain
///     (listed ports positive unless negated, unlisted ports negative)
///   configuration level (inside [ ]): neg, + (coalescing), ^ (intersection),
///     U (union), => (implication, right associative)
///   weighted level: w(value) constants, (x), (#), (+), and the prefix forms
///     star(), close(), fullval(), [configuration formula]
/// Parenthesized groups override; a lone `(x)` is always the product token.

WpclPtr parse_wpcl(std::string_view text, const PortSet& ports);
PclPtr parse_pcl(std::string_view text, const PortSet& ports);
PilPtr parse_pil(std::string_view text, const PortSet& ports);

/// Grammar `{ {p, q}, {r} }`; the result is canonical (sorted, deduplicated).
Configuration parse_configuration(std::string_view text, const PortSet& ports);

/// Grammar: int, int/posint, inf, -inf. Exact rationals only.
Value parse_value(std::string_view text);

/// A port declaration followed by semicolon-terminated formulas:
///   ports p, q; w(2) (#) w(4); [m: p . !q];
struct ParsedFile {
  PortSet ports;
  std::vector<WpclPtr> formulas;
};
ParsedFile parse_file(std::string_view text);

/// Printers emit the minimal parenthesization that reparses to the same
/// tree: parse(print(x)) == x structurally, for every well-formed x.
std::string print_wpcl(const WpclPtr& zeta, const PortSet& ports);
std::string print_pcl(const PclPtr& f, const PortSet& ports);
std::string print_pil(const PilPtr& phi, const PortSet& ports);
std::string print_value(const Value& v);
std::string print_configuration(const Configuration& gamma,
                                const PortSet& ports);

/// One line per term, `value @ {config}`, in canonical term order;
/// `CONST value` for constants; `EMPTY` for the zero polynomial.
std::string print_fnf(const Fnf& fnf, const PortSet& ports);

}  // namespace wpcl
