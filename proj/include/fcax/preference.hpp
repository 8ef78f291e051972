#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fcax/context.hpp"

namespace fcax {

/// Strict partial order over object indices, stored transitively closed.
/// `precedes(g, h)` reads "g is more preferred (more typical) than h".
class PreferenceOrder {
public:
    PreferenceOrder() = default;

    static PreferenceOrder discrete(std::size_t object_count);
    /// Transitive closure of the declared strict pairs. Throws
    /// ErrorCode::Cycle when the closure would relate an object to itself.
    static PreferenceOrder from_pairs(
        std::size_t object_count,
        std::span<const std::pair<std::size_t, std::size_t>> strict_pairs);

    std::size_t object_count() const { return below_.size(); }
    bool precedes(std::size_t g, std::size_t h) const { return below_[h].test(g); }
    /// All objects strictly more preferred than g.
    const Bitset& more_preferred(std::size_t g) const { return below_[g]; }

    bool empty() const;
    std::size_t pair_count() const;
    /// All strict pairs (g, h) with g preceding h, in index order.
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    bool operator==(const PreferenceOrder&) const = default;

private:
    std::vector<Bitset> below_;  // below_[h] = { g | g precedes h }
};

/// Resolves declared (morePreferred, lessPreferred) name pairs against the
/// context and builds the closed order.
PreferenceOrder build_order(const FormalContext& ctx,
                            std::span<const std::pair<std::string, std::string>> declared);

/// Preference file: one `NAME < NAME` per line (left is more preferred),
/// `#` comments, blank lines ignored. Redundant pairs are deduplicated by
/// the closure.
PreferenceOrder parse_preferences(const FormalContext& ctx, std::string_view text);

/// A formal context together with a preference order over its objects.
class ExtendedContext {
public:
    ExtendedContext(FormalContext context, PreferenceOrder order);

    const FormalContext& context() const { return context_; }
    const PreferenceOrder& order() const { return order_; }

private:
    FormalContext context_;
    PreferenceOrder order_;
};

/// Minimised derivation: the preference-minimal objects of B'. Equals B'
/// under the discrete order, and is nonempty whenever B' is.
ObjectSet minimize(const ExtendedContext& ext, const AttributeSet& attributes);

/// Minimised-return operator (min B)': extensive and idempotent, but not
/// monotonic.
AttributeSet minimised_return(const ExtendedContext& ext, const AttributeSet& attributes);

/// Memoized derivations and minimisations for every attribute subset of a
/// small context, keyed by attribute bitmask. Used by the exhaustive
/// postulate checks; bounded to kMaxAttributes attributes.
class MinimisationTable {
public:
    static constexpr std::size_t kMaxAttributes = 20;

    explicit MinimisationTable(const ExtendedContext& ext);

    std::size_t attribute_count() const { return attribute_count_; }
    std::uint64_t subset_count() const { return std::uint64_t{1} << attribute_count_; }

    const Bitset& extent(std::uint64_t mask) const { return extent_[mask]; }
    const Bitset& minimal(std::uint64_t mask) const { return minimal_[mask]; }
    std::uint64_t minimised_return_mask(std::uint64_t mask) const { return minret_[mask]; }
    std::uint64_t closure_mask(std::uint64_t mask) const { return closure_[mask]; }

    bool holds(std::uint64_t premise, std::uint64_t conclusion) const {
        return (conclusion & ~minret_[premise]) == 0;
    }
    bool holds_negated(std::uint64_t premise, std::uint64_t conclusion) const {
        return !minimal_[premise].intersects(extent_[conclusion]);
    }
    bool models(std::uint64_t premise, std::uint64_t conclusion) const {
        return (conclusion & ~closure_[premise]) == 0;
    }
    bool models_negated(std::uint64_t premise, std::uint64_t conclusion) const {
        return !extent_[premise].intersects(extent_[conclusion]);
    }
    bool equivalent(std::uint64_t a, std::uint64_t b) const {
        return extent_id_[a] == extent_id_[b];
    }

private:
    std::size_t attribute_count_ = 0;
    std::vector<Bitset> extent_;
    std::vector<Bitset> minimal_;
    std::vector<std::uint64_t> minret_;
    std::vector<std::uint64_t> closure_;
    std::vector<std::uint32_t> extent_id_;
};

}  // namespace fcax
