#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "fcax/lattice.hpp"
#include "fcax/preference.hpp"

namespace fcax {

/// The typical concepts of an extended context, as indices into a lattice,
/// with the structural diagnostics computed over the set.
struct TypicalSet {
    std::vector<std::size_t> concepts;  // ascending lattice indices
    bool meet_closed = true;
    /// First (left, right, meet) triple in canonical order whose meet is not
    /// typical, when meet_closed is false.
    std::optional<std::array<std::size_t, 3>> meet_counterexample;
    /// First (left, right, join) triple whose join is not typical.
    std::optional<std::array<std::size_t, 3>> join_counterexample;
    bool has_top = false;
};

/// ((min A)'', (min A)'): the typical concept generated by a set of
/// attributes. Always a member of the concept lattice.
FormalConcept typical_concept_from(const ExtendedContext& ext, const AttributeSet& attributes);

/// Maps a concept to its typical counterpart via its intent. Idempotent and
/// anti-extensive.
FormalConcept phi(const ExtendedContext& ext, const FormalConcept& c);

/// Membership test: (min B)'' = A.
bool is_typical(const ExtendedContext& ext, const FormalConcept& c);

/// Typical subset of a lattice plus meet/join/top diagnostics.
TypicalSet enumerate_typical(const ExtendedContext& ext, const ConceptLattice& lattice);

/// Checks min A = (min A)'' for all A. Since min depends on A only through
/// A', one representative per concept extent suffices; brute_valid_order
/// guards this reduction. Returns a witness intent on failure.
std::pair<bool, std::optional<AttributeSet>> is_valid_order(const ExtendedContext& ext,
                                                            const ConceptLattice& lattice);
std::pair<bool, std::optional<AttributeSet>> is_valid_order(const ExtendedContext& ext);

/// enumerate_typical plus the structural guarantees for valid orders: the
/// set must then be meet-closed and contain the bottom concept (tripwire,
/// ErrorCode::Internal). Callers may pass invalid orders; the diagnostics
/// report the failures instead.
TypicalSet typical_meet_semilattice(const ExtendedContext& ext, const ConceptLattice& lattice);

/// First pair of typical concepts (canonical order) whose join is not
/// typical, with the join's index; absent when joins stay typical.
std::optional<std::array<std::size_t, 3>> find_join_counterexample(const ExtendedContext& ext,
                                                                   const ConceptLattice& lattice);

}  // namespace fcax
