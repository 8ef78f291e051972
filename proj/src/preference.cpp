#include "fcax/preference.hpp"

#include <bit>
#include <map>
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

}  // namespace

PreferenceOrder PreferenceOrder::discrete(std::size_t object_count) {
    PreferenceOrder order;
    order.below_.assign(object_count, Bitset(object_count));
    return order;
}

PreferenceOrder PreferenceOrder::from_pairs(
    std::size_t object_count,
    std::span<const std::pair<std::size_t, std::size_t>> strict_pairs) {
    PreferenceOrder order = discrete(object_count);
    for (auto& [g, h] : strict_pairs) {
        require(g < object_count && h < object_count, ErrorCode::Argument,
                "preference pair index out of range");
        order.below_[h].set(g);
    }
    // Warshall closure over the "more preferred" bitsets.
    for (std::size_t k = 0; k < object_count; ++k)
        for (std::size_t h = 0; h < object_count; ++h)
            if (order.below_[h].test(k)) order.below_[h] |= order.below_[k];
    for (std::size_t g = 0; g < object_count; ++g)
        require(!order.below_[g].test(g), ErrorCode::Cycle,
                "declared preferences contain a cycle through object " + std::to_string(g));
    return order;
}

bool PreferenceOrder::empty() const {
    for (auto& bits : below_)
        if (bits.any()) return false;
    return true;
}

std::size_t PreferenceOrder::pair_count() const {
    std::size_t n = 0;
    for (auto& bits : below_) n += bits.count();
    return n;
}

std::vector<std::pair<std::size_t, std::size_t>> PreferenceOrder::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t h = 0; h < below_.size(); ++h)
        below_[h].for_each([&](std::size_t g) { out.emplace_back(g, h); });
    return out;
}

PreferenceOrder build_order(const FormalContext& ctx,
                            std::span<const std::pair<std::string, std::string>> declared) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(declared.size());
    for (auto& [more, less] : declared) {
        auto g = ctx.object_index(more);
        require(g.has_value(), ErrorCode::Name, "unknown object '" + more + "'");
        auto h = ctx.object_index(less);
        require(h.has_value(), ErrorCode::Name, "unknown object '" + less + "'");
        pairs.emplace_back(*g, *h);
    }
    try {
        return PreferenceOrder::from_pairs(ctx.object_count(), pairs);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Cycle) throw;
        throw Error(ErrorCode::Cycle, "declared preferences are not a strict order (cycle detected)");
    }
}

PreferenceOrder parse_preferences(const FormalContext& ctx, std::string_view text) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::size_t lineno = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i != text.size() && text[i] != '\n') continue;
        ++lineno;
        std::string_view line = text.substr(start, i - start);
        start = i + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        auto lt = line.find('<');
        require(lt != std::string_view::npos, ErrorCode::Parse,
                "line " + std::to_string(lineno) + ": expected 'NAME < NAME'");
        std::string more(trim(line.substr(0, lt)));
        std::string less(trim(line.substr(lt + 1)));
        require(!more.empty() && !less.empty(), ErrorCode::Parse,
                "line " + std::to_string(lineno) + ": expected 'NAME < NAME'");

        auto g = ctx.object_index(more);
        require(g.has_value(), ErrorCode::Name,
                "line " + std::to_string(lineno) + ": unknown object '" + more + "'");
        auto h = ctx.object_index(less);
        require(h.has_value(), ErrorCode::Name,
                "line " + std::to_string(lineno) + ": unknown object '" + less + "'");
        pairs.emplace_back(*g, *h);
    }
    try {
        return PreferenceOrder::from_pairs(ctx.object_count(), pairs);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Cycle) throw;
        throw Error(ErrorCode::Cycle, "preference file is not a strict order (cycle detected)");
    }
}

ExtendedContext::ExtendedContext(FormalContext context, PreferenceOrder order)
    : context_(std::move(context)), order_(std::move(order)) {
    require(order_.object_count() == context_.object_count(), ErrorCode::Argument,
            "preference order covers " + std::to_string(order_.object_count()) +
                " objects, context has " + std::to_string(context_.object_count()));
}

ObjectSet minimize(const ExtendedContext& ext, const AttributeSet& attributes) {
    ObjectSet extent = ext.context().derive(attributes);
    Bitset minimal(extent.universe());
    extent.for_each([&](std::size_t g) {
        if (!ext.order().more_preferred(g).intersects(extent.bits())) minimal.set(g);
    });
    return ObjectSet(std::move(minimal));
}

AttributeSet minimised_return(const ExtendedContext& ext, const AttributeSet& attributes) {
    return ext.context().derive(minimize(ext, attributes));
}

MinimisationTable::MinimisationTable(const ExtendedContext& ext) {
    const FormalContext& ctx = ext.context();
    attribute_count_ = ctx.attribute_count();
    require(attribute_count_ <= kMaxAttributes, ErrorCode::Limit,
            "minimisation table limited to " + std::to_string(kMaxAttributes) +
                " attributes, context has " + std::to_string(attribute_count_));

    const std::uint64_t n = subset_count();
    const std::uint64_t full_attrs = n - 1;
    extent_.reserve(n);
    minimal_.reserve(n);
    minret_.reserve(n);
    closure_.reserve(n);
    extent_id_.reserve(n);

    std::map<Bitset, std::uint32_t> ids;
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        Bitset extent;
        if (mask == 0) {
            extent = Bitset::full(ctx.object_count());
        } else {
            std::uint64_t low = mask & (~mask + 1);
            extent = extent_[mask ^ low] &
                     ctx.attribute_extent_bits(static_cast<std::size_t>(std::countr_zero(low)));
        }

        Bitset minimal(ctx.object_count());
        extent.for_each([&](std::size_t g) {
            if (!ext.order().more_preferred(g).intersects(extent)) minimal.set(g);
        });

        auto intent_mask = [&](const Bitset& objects) {
            std::uint64_t intent = full_attrs;
            objects.for_each(
                [&](std::size_t g) { intent &= ctx.object_intent_bits(g).as_mask(); });
            return intent;
        };
        minret_.push_back(intent_mask(minimal));
        closure_.push_back(intent_mask(extent));
        extent_id_.push_back(
            ids.emplace(extent, static_cast<std::uint32_t>(ids.size())).first->second);
        minimal_.push_back(std::move(minimal));
        extent_.push_back(std::move(extent));
    }
}

}  // namespace fcax
