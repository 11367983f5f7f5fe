#ifndef INVLIM_PARSE_HPP
#define INVLIM_PARSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "invlim/poly.hpp"

namespace invlim {

/// Field descriptor text: "p=7", "p=2;mod=t^2+t+1", "rational".
Field parse_field(const std::string& descriptor);

/// One polynomial expression over k in the variables x1..x<nvars>.
/// Grammar (whitespace insignificant, positions reported on errors):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*'? factor)*            -- '*' optional
///   factor := integer | integer '/' integer | var ['^' integer] | '(' expr ')'
///   var    := 'x' index | 't'                  -- 't' only in extension fields
Polynomial parse_polynomial(const std::string& text, const Field& k, int nvars);

/// A constant expression ("2", "-3/2", "t+1") evaluated to a field element.
Scalar parse_scalar(const std::string& text, const Field& k);

/// A parsed map document. The document lists one assignment "x<i> -> expr"
/// per variable, separated by newlines or '/': optional header lines
/// "field: <descriptor>" and "point: c1, ..., cn" give the coefficient field
/// and a base point. When the document has no field line the fallback (from
/// the command line) is used.
struct ParsedMap {
  Field field;
  PolyEndo map;
  std::optional<std::vector<Scalar>> basepoint;
};

ParsedMap parse_map(const std::string& text, const std::optional<Field>& fallback_field = {});

}  // namespace invlim

#endif
