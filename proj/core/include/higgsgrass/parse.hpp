#pragma once

#include "higgsgrass/poly.hpp"

#include <string_view>

namespace higgsgrass {

/// Parses the artifact-wide polynomial grammar:
///
///   expr    := term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := '-' factor | primary
///   primary := atom ('^' INT)?
///   atom    := INT ('/' INT)? | NAME | '(' expr ')'
///
/// INT is an unsigned decimal literal; INT '/' INT is a rational literal.
/// Exponents must be nonnegative integer literals. Every NAME must belong to
/// `vars`. Throws ParseError with the offending byte offset, and DomainError
/// for unknown variables.
Poly parse_poly(std::string_view text, const VarSetPtr& vars);

} // namespace higgsgrass
