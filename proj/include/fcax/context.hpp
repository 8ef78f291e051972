#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fcax/bitset.hpp"
#include "fcax/sets.hpp"

namespace fcax {

enum class ContextFormat { Cxt, Csv };

/// A formal context: named objects, named attributes, and an incidence
/// matrix stored row-wise (per object) and column-wise (per attribute).
/// Immutable after construction; all operations are pure.
class FormalContext {
public:
    FormalContext(std::vector<std::string> objects,
                  std::vector<std::string> attributes,
                  std::vector<Bitset> rows);

    static FormalContext parse(std::string_view text, ContextFormat format);
    // Sniffs the format: a first non-blank line of "B" selects CXT.
    static FormalContext parse_auto(std::string_view text);

    std::string to_cxt() const;
    std::string to_csv() const;

    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }
    const std::string& object_name(std::size_t g) const { return objects_[g]; }
    const std::string& attribute_name(std::size_t m) const { return attributes_[m]; }
    std::optional<std::size_t> object_index(std::string_view name) const;
    std::optional<std::size_t> attribute_index(std::string_view name) const;

    bool incident(std::size_t g, std::size_t m) const { return rows_[g].test(m); }
    /// Row g as attribute bits (the object intent g').
    const Bitset& object_intent_bits(std::size_t g) const { return rows_[g]; }
    /// Column m as object bits (the attribute extent m').
    const Bitset& attribute_extent_bits(std::size_t m) const { return cols_[m]; }

    AttributeSet object_intent(std::size_t g) const { return AttributeSet(rows_[g]); }
    ObjectSet attribute_extent(std::size_t m) const { return ObjectSet(cols_[m]); }

    /// Derivation A': attributes shared by every object of A (all of M for
    /// the empty set).
    AttributeSet derive(const ObjectSet& objects) const;
    /// Derivation B': objects having every attribute of B (all of G for the
    /// empty set).
    ObjectSet derive(const AttributeSet& attributes) const;

    AttributeSet closure(const AttributeSet& attributes) const;
    ObjectSet closure(const ObjectSet& objects) const;

    /// Resolves names; throws ErrorCode::Name for unknown entries.
    ObjectSet objects_by_name(const std::vector<std::string>& names) const;
    AttributeSet attributes_by_name(const std::vector<std::string>& names) const;

    std::vector<std::string> object_names(const ObjectSet&) const;
    std::vector<std::string> attribute_names(const AttributeSet&) const;

    bool operator==(const FormalContext& o) const {
        return objects_ == o.objects_ && attributes_ == o.attributes_ && rows_ == o.rows_;
    }

private:
    void check_universe(const ObjectSet&) const;
    void check_universe(const AttributeSet&) const;

    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<Bitset> rows_;
    std::vector<Bitset> cols_;
    std::unordered_map<std::string, std::size_t> object_index_;
    std::unordered_map<std::string, std::size_t> attribute_index_;
};

/// Attribute implication A -> B, or A -> not-B when `negated` is set.
struct Implication {
    AttributeSet premise;
    AttributeSet conclusion;
    bool negated = false;
};

/// Whole-context validity: B subseteq A'' (plain) or A' and B' disjoint
/// (negated).
bool models(const FormalContext& ctx, const Implication& imp);

/// Object-level test against one intent C: premise not subseteq C, or the
/// conclusion is contained (plain) / not contained (negated) in C.
bool respects(const AttributeSet& object_intent, const Implication& imp);

/// Attribute-set equivalence: A' = B'.
bool attr_equivalent(const FormalContext& ctx, const AttributeSet& a, const AttributeSet& b);

}  // namespace fcax
