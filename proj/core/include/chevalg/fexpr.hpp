#pragma once

#include <functional>
#include <string>

#include "chevalg/formal.hpp"

namespace chevalg {

/// Resolver for identifiers seen in a field expression. Returning an empty
/// optional makes the identifier a formal variable.
using FexprResolver = std::function<std::optional<FormalPoly>(const std::string&)>;

/// Parses a field expression over `t`, the F_q generator `w`, integers and
/// formal unknowns, with + - * / ^ and parentheses. Division by a
/// non-constant expression is rejected. Throws std::invalid_argument with a
/// position-annotated message on bad input.
FormalPoly parse_field_expr(const GaloisField& f, const std::string& src,
                            const FexprResolver& resolve = nullptr);

/// As parse_field_expr but requires a constant value.
RatFunc parse_rat_func(const GaloisField& f, const std::string& src);

}  // namespace chevalg
