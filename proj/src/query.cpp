#include "fcax/query.hpp"

#include "fcax/error.hpp"

namespace fcax {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::vector<std::string> parse_name_list(std::string_view text) {
    std::vector<std::string> names;
    std::string current;
    bool quoted = false;
    bool was_quoted = false;
    bool any_content = false;

    auto flush = [&]() {
        std::string name = was_quoted ? current : std::string(trim(current));
        require(!name.empty(), ErrorCode::Parse, "empty name in list '" + std::string(text) + "'");
        names.push_back(std::move(name));
        current.clear();
        was_quoted = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == ',') {
            flush();
            any_content = true;
        } else if (c == '"' && trim(current).empty() && !was_quoted) {
            quoted = true;
            was_quoted = true;
            any_content = true;
            current.clear();
        } else if (was_quoted) {
            // Only whitespace may follow a closing quote before the comma.
            require(c == ' ' || c == '\t', ErrorCode::Parse,
                    "unexpected text after closing quote in '" + std::string(text) + "'");
        } else {
            current += c;
            if (c != ' ' && c != '\t') any_content = true;
        }
    }
    require(!quoted, ErrorCode::Parse, "unterminated quote in '" + std::string(text) + "'");
    if (any_content || !names.empty()) flush();
    return names;
}

Query parse_query(std::string_view text) {
    // Locate the single arrow outside quotes.
    std::size_t arrow_pos = std::string_view::npos;
    bool defeasible = false;
    bool quoted = false;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        char c = text[i];
        if (c == '"') {
            quoted = !quoted;
            continue;
        }
        if (quoted) continue;
        if ((c == '-' || c == '~') && text[i + 1] == '>') {
            require(arrow_pos == std::string_view::npos, ErrorCode::Parse,
                    "more than one arrow in query '" + std::string(text) + "'");
            arrow_pos = i;
            defeasible = c == '~';
        }
    }
    require(arrow_pos != std::string_view::npos, ErrorCode::Parse,
            "expected '->' or '~>' in query '" + std::string(text) + "'");

    Query q;
    q.defeasible = defeasible;
    q.premise = parse_name_list(text.substr(0, arrow_pos));

    std::string_view rhs = trim(text.substr(arrow_pos + 2));
    if (!rhs.empty() && rhs.front() == '!') {
        q.negated = true;
        rhs.remove_prefix(1);
    }
    q.conclusion = parse_name_list(rhs);
    return q;
}

Implication resolve_implication(const FormalContext& ctx, const Query& q) {
    require(!q.defeasible, ErrorCode::Argument, "expected a classical '->' query");
    Implication imp;
    imp.premise = ctx.attributes_by_name(q.premise);
    imp.conclusion = ctx.attributes_by_name(q.conclusion);
    imp.negated = q.negated;
    return imp;
}

Conditional resolve_conditional(const FormalContext& ctx, const Query& q) {
    require(q.defeasible, ErrorCode::Argument, "expected a defeasible '~>' query");
    Conditional cond;
    cond.premise = ctx.attributes_by_name(q.premise);
    cond.conclusion = ctx.attributes_by_name(q.conclusion);
    cond.negated = q.negated;
    return cond;
}

}  // namespace fcax
