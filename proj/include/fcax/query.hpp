#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fcax/conditional.hpp"
#include "fcax/context.hpp"

namespace fcax {

/// Parsed form of `A1,A2 -> B1` / `A1 ~> !B1` query strings. Names stay
/// unresolved until bound to a context.
struct Query {
    std::vector<std::string> premise;
    std::vector<std::string> conclusion;
    bool defeasible = false;  // ~> instead of ->
    bool negated = false;     // leading ! on the conclusion
};

/// Comma-separated names, whitespace-insensitive; double quotes protect
/// names containing commas, arrows, or '!' ("" escapes a quote). An empty
/// string is the empty list.
std::vector<std::string> parse_name_list(std::string_view text);

/// One `->` or `~>` arrow outside quotes splits premise from conclusion.
Query parse_query(std::string_view text);

/// Binds names to attribute indices; throws ErrorCode::Name for unknown
/// names and ErrorCode::Argument when the query kind does not match.
Implication resolve_implication(const FormalContext& ctx, const Query& q);
Conditional resolve_conditional(const FormalContext& ctx, const Query& q);

}  // namespace fcax
