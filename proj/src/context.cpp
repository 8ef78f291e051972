#include "fcax/context.hpp"

#include <charconv>
#include <cstddef>
#include <string>

#include "fcax/error.hpp"

namespace fcax {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

struct Line {
    std::size_t number;  // 1-based
    std::string text;    // '\r' stripped
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            std::string_view raw = text.substr(start, i - start);
            if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
            lines.push_back({number, std::string(raw)});
            start = i + 1;
            ++number;
        }
    }
    // A trailing newline produces one empty phantom line; drop it.
    if (!lines.empty() && lines.back().text.empty()) lines.pop_back();
    return lines;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(const Line& line, const char* what) {
    std::string_view t = trim(line.text);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        parse_fail(line.number, std::string("expected ") + what + " count, got '" + std::string(t) + "'");
    return value;
}

FormalContext parse_cxt(std::string_view text) {
    auto lines = split_lines(text);
    std::vector<Line> body;
    for (auto& l : lines)
        if (!trim(l.text).empty()) body.push_back(l);

    std::size_t pos = 0;
    auto next = [&](const char* what) -> const Line& {
        if (pos >= body.size())
            throw Error(ErrorCode::Parse, std::string("unexpected end of input, expected ") + what);
        return body[pos++];
    };

    const Line& header = next("format tag 'B'");
    if (trim(header.text) != "B")
        parse_fail(header.number, "expected format tag 'B', got '" + std::string(trim(header.text)) + "'");

    const Line& object_count_line = next("object");
    std::size_t object_count = parse_count(object_count_line, "object");
    const Line& attribute_count_line = next("attribute");
    std::size_t attribute_count = parse_count(attribute_count_line, "attribute");
    if (object_count == 0) parse_fail(object_count_line.number, "context must have at least one object");
    if (attribute_count == 0)
        parse_fail(attribute_count_line.number, "context must have at least one attribute");

    std::vector<std::string> objects, attributes;
    for (std::size_t g = 0; g < object_count; ++g)
        objects.emplace_back(trim(next("object name").text));
    for (std::size_t m = 0; m < attribute_count; ++m)
        attributes.emplace_back(trim(next("attribute name").text));

    std::vector<Bitset> rows;
    for (std::size_t g = 0; g < object_count; ++g) {
        const Line& line = next("incidence row");
        std::string_view cells = trim(line.text);
        if (cells.size() != attribute_count)
            parse_fail(line.number, "row has " + std::to_string(cells.size()) + " cells, expected " +
                                        std::to_string(attribute_count));
        Bitset row(attribute_count);
        for (std::size_t m = 0; m < attribute_count; ++m) {
            char c = cells[m];
            if (c == 'X' || c == 'x')
                row.set(m);
            else if (c != '.')
                parse_fail(line.number, std::string("invalid incidence cell '") + c + "' at column " +
                                            std::to_string(m + 1));
        }
        rows.push_back(std::move(row));
    }
    if (pos != body.size())
        parse_fail(body[pos].number, "trailing content after incidence rows");

    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

// Splits one CSV record. Unquoted fields are whitespace-trimmed; quoted
// fields are taken verbatim with "" as the escaped quote.
std::vector<std::string> split_csv(const Line& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;       // inside quotes right now
    bool was_quoted = false;   // field started with quotes
    const std::string& s = line.text;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < s.size() && s[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == ',') {
            fields.emplace_back(was_quoted ? current : std::string(trim(current)));
            current.clear();
            was_quoted = false;
        } else if (c == '"' && trim(current).empty() && !was_quoted) {
            quoted = true;
            was_quoted = true;
            current.clear();
        } else if (was_quoted) {
            if (c != ' ' && c != '\t')
                parse_fail(line.number, "unexpected text after closing quote");
        } else {
            current += c;
        }
    }
    if (quoted) parse_fail(line.number, "unterminated quoted field");
    fields.emplace_back(was_quoted ? current : std::string(trim(current)));
    return fields;
}

bool parse_cell(const std::string& cell, const Line& line, std::size_t column) {
    if (cell.empty() || cell == ".") return false;
    if (cell == "X" || cell == "x" || cell == "\xC3\x97")  // multiplication sign
        return true;
    parse_fail(line.number, "invalid cell '" + cell + "' in column " + std::to_string(column + 1) +
                                " (expected X, x, \xC3\x97, '.', or blank)");
}

FormalContext parse_csv(std::string_view text) {
    auto lines = split_lines(text);
    std::vector<Line> records;
    for (auto& l : lines)
        if (!trim(l.text).empty()) records.push_back(l);
    if (records.empty()) throw Error(ErrorCode::Parse, "empty cross-table");

    auto header = split_csv(records[0]);
    if (!header[0].empty())
        parse_fail(records[0].number, "top-left cell must be empty, got '" + header[0] + "'");
    std::vector<std::string> attributes(header.begin() + 1, header.end());
    if (attributes.empty()) parse_fail(records[0].number, "context must have at least one attribute");
    if (records.size() < 2) parse_fail(records[0].number, "context must have at least one object");

    std::vector<std::string> objects;
    std::vector<Bitset> rows;
    for (std::size_t r = 1; r < records.size(); ++r) {
        auto fields = split_csv(records[r]);
        if (fields.size() != attributes.size() + 1)
            parse_fail(records[r].number, "row has " + std::to_string(fields.size() - 1) +
                                              " cells, expected " + std::to_string(attributes.size()));
        objects.push_back(fields[0]);
        Bitset row(attributes.size());
        for (std::size_t m = 0; m < attributes.size(); ++m)
            if (parse_cell(fields[m + 1], records[r], m + 1)) row.set(m);
        rows.push_back(std::move(row));
    }

    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

std::string csv_escape(const std::string& name) {
    bool needs_quotes = name.find_first_of(",\"") != std::string::npos ||
                        (!name.empty() && (name.front() == ' ' || name.back() == ' '));
    if (!needs_quotes) return name;
    std::string out = "\"";
    for (char c : name) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects,
                             std::vector<std::string> attributes,
                             std::vector<Bitset> rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
    require(!objects_.empty(), ErrorCode::Parse, "context must have at least one object");
    require(!attributes_.empty(), ErrorCode::Parse, "context must have at least one attribute");
    require(rows_.size() == objects_.size(), ErrorCode::Parse,
            "incidence has " + std::to_string(rows_.size()) + " rows, expected " +
                std::to_string(objects_.size()));

    for (std::size_t g = 0; g < objects_.size(); ++g) {
        require(!objects_[g].empty(), ErrorCode::Parse, "empty object name");
        require(object_index_.emplace(objects_[g], g).second, ErrorCode::Parse,
                "duplicate object name '" + objects_[g] + "'");
        require(rows_[g].universe() == attributes_.size(), ErrorCode::Parse,
                "row for '" + objects_[g] + "' has wrong width");
    }
    for (std::size_t m = 0; m < attributes_.size(); ++m) {
        require(!attributes_[m].empty(), ErrorCode::Parse, "empty attribute name");
        require(attribute_index_.emplace(attributes_[m], m).second, ErrorCode::Parse,
                "duplicate attribute name '" + attributes_[m] + "'");
    }

    cols_.assign(attributes_.size(), Bitset(objects_.size()));
    for (std::size_t g = 0; g < objects_.size(); ++g)
        rows_[g].for_each([&](std::size_t m) { cols_[m].set(g); });
}

FormalContext FormalContext::parse(std::string_view text, ContextFormat format) {
    return format == ContextFormat::Cxt ? parse_cxt(text) : parse_csv(text);
}

FormalContext FormalContext::parse_auto(std::string_view text) {
    for (auto& line : split_lines(text)) {
        auto t = trim(line.text);
        if (t.empty()) continue;
        return parse(text, t == "B" ? ContextFormat::Cxt : ContextFormat::Csv);
    }
    throw Error(ErrorCode::Parse, "empty context file");
}

std::string FormalContext::to_cxt() const {
    std::string out = "B\n\n";
    out += std::to_string(objects_.size());
    out += '\n';
    out += std::to_string(attributes_.size());
    out += "\n\n";
    for (auto& name : objects_) {
        out += name;
        out += '\n';
    }
    for (auto& name : attributes_) {
        out += name;
        out += '\n';
    }
    for (std::size_t g = 0; g < objects_.size(); ++g) {
        for (std::size_t m = 0; m < attributes_.size(); ++m)
            out += rows_[g].test(m) ? 'X' : '.';
        out += '\n';
    }
    return out;
}

std::string FormalContext::to_csv() const {
    std::string out;
    for (auto& name : attributes_) {
        out += ',';
        out += csv_escape(name);
    }
    out += '\n';
    for (std::size_t g = 0; g < objects_.size(); ++g) {
        out += csv_escape(objects_[g]);
        for (std::size_t m = 0; m < attributes_.size(); ++m) {
            out += ',';
            if (rows_[g].test(m)) out += 'X';
        }
        out += '\n';
    }
    return out;
}

std::optional<std::size_t> FormalContext::object_index(std::string_view name) const {
    auto it = object_index_.find(std::string(name));
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> FormalContext::attribute_index(std::string_view name) const {
    auto it = attribute_index_.find(std::string(name));
    if (it == attribute_index_.end()) return std::nullopt;
    return it->second;
}

void FormalContext::check_universe(const ObjectSet& s) const {
    require(s.universe() == objects_.size(), ErrorCode::Argument,
            "object set indexes a different context");
}

void FormalContext::check_universe(const AttributeSet& s) const {
    require(s.universe() == attributes_.size(), ErrorCode::Argument,
            "attribute set indexes a different context");
}

AttributeSet FormalContext::derive(const ObjectSet& objects) const {
    check_universe(objects);
    Bitset common = Bitset::full(attributes_.size());
    objects.for_each([&](std::size_t g) { common &= rows_[g]; });
    return AttributeSet(std::move(common));
}

ObjectSet FormalContext::derive(const AttributeSet& attributes) const {
    check_universe(attributes);
    Bitset common = Bitset::full(objects_.size());
    attributes.for_each([&](std::size_t m) { common &= cols_[m]; });
    return ObjectSet(std::move(common));
}

AttributeSet FormalContext::closure(const AttributeSet& attributes) const {
    return derive(derive(attributes));
}

ObjectSet FormalContext::closure(const ObjectSet& objects) const {
    return derive(derive(objects));
}

ObjectSet FormalContext::objects_by_name(const std::vector<std::string>& names) const {
    ObjectSet out(objects_.size());
    for (auto& name : names) {
        auto i = object_index(name);
        require(i.has_value(), ErrorCode::Name, "unknown object '" + name + "'");
        out.add(*i);
    }
    return out;
}

AttributeSet FormalContext::attributes_by_name(const std::vector<std::string>& names) const {
    AttributeSet out(attributes_.size());
    for (auto& name : names) {
        auto i = attribute_index(name);
        require(i.has_value(), ErrorCode::Name, "unknown attribute '" + name + "'");
        out.add(*i);
    }
    return out;
}

std::vector<std::string> FormalContext::object_names(const ObjectSet& s) const {
    check_universe(s);
    std::vector<std::string> out;
    s.for_each([&](std::size_t g) { out.push_back(objects_[g]); });
    return out;
}

std::vector<std::string> FormalContext::attribute_names(const AttributeSet& s) const {
    check_universe(s);
    std::vector<std::string> out;
    s.for_each([&](std::size_t m) { out.push_back(attributes_[m]); });
    return out;
}

bool models(const FormalContext& ctx, const Implication& imp) {
    if (!imp.negated) return imp.conclusion.subset_of(ctx.closure(imp.premise));
    return !ctx.derive(imp.premise).intersects(ctx.derive(imp.conclusion));
}

bool respects(const AttributeSet& object_intent, const Implication& imp) {
    if (!imp.premise.subset_of(object_intent)) return true;
    return imp.negated ? !imp.conclusion.subset_of(object_intent)
                       : imp.conclusion.subset_of(object_intent);
}

bool attr_equivalent(const FormalContext& ctx, const AttributeSet& a, const AttributeSet& b) {
    return ctx.derive(a) == ctx.derive(b);
}

}  // namespace fcax
