#include "fcax/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "fcax/error.hpp"

namespace fcax {

std::vector<FormalConcept> brute_concepts(const FormalContext& ctx) {
    const std::size_t m = ctx.attribute_count();
    require(m <= 20, ErrorCode::Limit, "brute_concepts is limited to 20 attributes");

    std::vector<FormalConcept> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        AttributeSet b(Bitset::from_mask(m, mask));
        out.push_back(concept_from_attrs(ctx, b));
    }
    auto less = [](const FormalConcept& a, const FormalConcept& b) {
        if (a.extent.size() != b.extent.size()) return a.extent.size() < b.extent.size();
        return a.extent.lex_compare(b.extent) < 0;
    };
    std::sort(out.begin(), out.end(), less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ObjectSet brute_min(const ExtendedContext& ext, const AttributeSet& attributes) {
    auto extent = ext.context().derive(attributes).members();
    ObjectSet minimal(ext.context().object_count());
    for (std::size_t g : extent) {
        bool dominated = false;
        for (std::size_t h : extent) {
            if (ext.order().precedes(h, g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.add(g);
    }
    return minimal;
}

bool brute_valid_order(const ExtendedContext& ext) {
    const std::size_t m = ext.context().attribute_count();
    require(m <= 16, ErrorCode::Limit, "brute_valid_order is limited to 16 attributes");

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        AttributeSet a(Bitset::from_mask(m, mask));
        ObjectSet minimal = brute_min(ext, a);
        if (ext.context().closure(minimal) != minimal) return false;
    }
    return true;
}

}  // namespace fcax
