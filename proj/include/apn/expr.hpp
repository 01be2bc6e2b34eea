#pragma once

#include <string_view>

#include "apn/map.hpp"

namespace apn {

/// Evaluate a small map-expression language over the given field:
///
///   expr   := term ('+' term)*
///   term   := [coef '*'] factor | coef
///   factor := 'x' ['^' INT]
///           | 'Tr' ['_' INT] '(' expr ')' ['^' INT]
///           | '(' expr ')' ['^' INT]
///
/// Coefficients and constants are element codes in 0..q-1; Tr_t is the
/// relative trace into F_{p^t} (default t = 1, the absolute trace, whose
/// value is embedded as a prime-subfield constant). Examples: "x^3",
/// "x^3+Tr(x^9)", "x^3+x^256", "2*x^5+1".
MapTable from_expression(const FieldRef& field, std::string_view expr);

}  // namespace apn
