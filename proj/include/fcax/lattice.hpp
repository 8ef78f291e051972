#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fcax/context.hpp"

namespace fcax {

/// A formal concept: extent A and intent B with A' = B and B' = A.
struct FormalConcept {
    ObjectSet extent;
    AttributeSet intent;

    bool operator==(const FormalConcept&) const = default;
};

/// (B', B''): the concept generated by a set of attributes.
FormalConcept concept_from_attrs(const FormalContext& ctx, const AttributeSet& attributes);
/// (A'', A'): the concept generated by a set of objects.
FormalConcept concept_from_objects(const FormalContext& ctx, const ObjectSet& objects);

/// Sub-concept order: extent inclusion.
bool leq(const FormalConcept& a, const FormalConcept& b);

/// Greatest common sub-concept (extent intersection, closed intent union).
FormalConcept meet(const FormalContext& ctx, const FormalConcept& a, const FormalConcept& b);
/// Least common super-concept (closed extent union, intent intersection).
FormalConcept join(const FormalContext& ctx, const FormalConcept& a, const FormalConcept& b);

/// All concepts of a context in canonical order (extent cardinality, then
/// smallest-differing-element order on extents), with the full sub-concept
/// relation and the cover (Hasse) edges.
class ConceptLattice {
public:
    const FormalContext& context() const { return context_; }
    const std::vector<FormalConcept>& concepts() const { return concepts_; }
    const FormalConcept& concept_at(std::size_t i) const { return concepts_[i]; }
    std::size_t size() const { return concepts_.size(); }

    std::size_t top() const { return top_; }
    std::size_t bottom() const { return bottom_; }

    bool leq(std::size_t i, std::size_t j) const { return above_[i].test(j); }
    /// Cover edges as (sub-concept, super-concept) index pairs.
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
    std::vector<std::pair<std::size_t, std::size_t>> leq_pairs() const;

    std::optional<std::size_t> find(const FormalConcept& c) const;
    /// Index of a concept known to be in the lattice; throws otherwise.
    std::size_t index_of(const FormalConcept& c) const;

private:
    friend ConceptLattice enumerate_concepts(const FormalContext&);
    explicit ConceptLattice(FormalContext context) : context_(std::move(context)) {}

    FormalContext context_;
    std::vector<FormalConcept> concepts_;
    std::vector<Bitset> above_;  // above_[i] = { j | concepts_[i] <= concepts_[j] }
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::size_t top_ = 0;
    std::size_t bottom_ = 0;
};

/// Enumerates every concept exactly once (NextClosure over attribute sets).
ConceptLattice enumerate_concepts(const FormalContext& ctx);

/// Hasse diagram in DOT, reduced labeling: each attribute at its maximal
/// concept, each object at its minimal one. Marked nodes are filled grey.
std::string to_dot(const ConceptLattice& lattice,
                   std::span<const std::size_t> marks = {});

/// {"concepts": [...], "covers": [[sub, super]...], "top": i, "bottom": j}
std::string to_json(const ConceptLattice& lattice);

}  // namespace fcax
