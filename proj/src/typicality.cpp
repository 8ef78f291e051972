#include "fcax/typicality.hpp"

#include "fcax/error.hpp"

namespace fcax {

FormalConcept typical_concept_from(const ExtendedContext& ext, const AttributeSet& attributes) {
    ObjectSet minimal = minimize(ext, attributes);
    AttributeSet intent = ext.context().derive(minimal);
    return {ext.context().derive(intent), intent};
}

FormalConcept phi(const ExtendedContext& ext, const FormalConcept& c) {
    return typical_concept_from(ext, c.intent);
}

bool is_typical(const ExtendedContext& ext, const FormalConcept& c) {
    return ext.context().closure(minimize(ext, c.intent)) == c.extent;
}

TypicalSet enumerate_typical(const ExtendedContext& ext, const ConceptLattice& lattice) {
    TypicalSet out;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (is_typical(ext, lattice.concept_at(i))) out.concepts.push_back(i);

    Bitset typical(lattice.size());
    for (auto i : out.concepts) typical.set(i);

    out.meet_closed = true;
    for (std::size_t a = 0; a < out.concepts.size() && out.meet_closed; ++a) {
        for (std::size_t b = a + 1; b < out.concepts.size(); ++b) {
            std::size_t i = out.concepts[a], j = out.concepts[b];
            std::size_t k = lattice.index_of(
                meet(lattice.context(), lattice.concept_at(i), lattice.concept_at(j)));
            if (!typical.test(k)) {
                out.meet_closed = false;
                out.meet_counterexample = {{i, j, k}};
                break;
            }
        }
    }

    out.join_counterexample = find_join_counterexample(ext, lattice);

    out.has_top = false;
    for (auto t : out.concepts) {
        bool bound = true;
        for (auto s : out.concepts)
            if (!lattice.leq(s, t)) {
                bound = false;
                break;
            }
        if (bound) {
            out.has_top = true;
            break;
        }
    }
    return out;
}

std::pair<bool, std::optional<AttributeSet>> is_valid_order(const ExtendedContext& ext,
                                                            const ConceptLattice& lattice) {
    for (auto& c : lattice.concepts()) {
        ObjectSet minimal = minimize(ext, c.intent);
        if (ext.context().closure(minimal) != minimal) return {false, c.intent};
    }
    return {true, std::nullopt};
}

std::pair<bool, std::optional<AttributeSet>> is_valid_order(const ExtendedContext& ext) {
    return is_valid_order(ext, enumerate_concepts(ext.context()));
}

TypicalSet typical_meet_semilattice(const ExtendedContext& ext, const ConceptLattice& lattice) {
    TypicalSet out = enumerate_typical(ext, lattice);
    auto [valid, witness] = is_valid_order(ext, lattice);
    if (valid) {
        require(out.meet_closed, ErrorCode::Internal,
                "typical set of a valid order must be meet-closed");
        bool has_bottom = false;
        for (auto i : out.concepts) has_bottom = has_bottom || i == lattice.bottom();
        require(has_bottom, ErrorCode::Internal,
                "typical set of a valid order must contain the bottom concept");
    }
    return out;
}

std::optional<std::array<std::size_t, 3>> find_join_counterexample(const ExtendedContext& ext,
                                                                   const ConceptLattice& lattice) {
    std::vector<std::size_t> typical;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (is_typical(ext, lattice.concept_at(i))) typical.push_back(i);

    for (std::size_t a = 0; a < typical.size(); ++a) {
        for (std::size_t b = a + 1; b < typical.size(); ++b) {
            std::size_t i = typical[a], j = typical[b];
            FormalConcept joined =
                join(lattice.context(), lattice.concept_at(i), lattice.concept_at(j));
            if (!is_typical(ext, joined))
                return std::array<std::size_t, 3>{i, j, lattice.index_of(joined)};
        }
    }
    return std::nullopt;
}

}  // namespace fcax
