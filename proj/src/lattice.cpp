#include "fcax/lattice.hpp"

#include <algorithm>
#include <json.hpp>

#include "fcax/error.hpp"

namespace fcax {

namespace {

// Canonical concept order: extent cardinality, then the smallest differing
// object decides. Deterministic for fixed input.
bool canonical_less(const FormalConcept& a, const FormalConcept& b) {
    std::size_t ca = a.extent.size(), cb = b.extent.size();
    if (ca != cb) return ca < cb;
    return a.extent.lex_compare(b.extent) < 0;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    return out;
}

}  // namespace

FormalConcept concept_from_attrs(const FormalContext& ctx, const AttributeSet& attributes) {
    ObjectSet extent = ctx.derive(attributes);
    return {extent, ctx.derive(extent)};
}

FormalConcept concept_from_objects(const FormalContext& ctx, const ObjectSet& objects) {
    AttributeSet intent = ctx.derive(objects);
    return {ctx.derive(intent), intent};
}

bool leq(const FormalConcept& a, const FormalConcept& b) {
    return a.extent.subset_of(b.extent);
}

FormalConcept meet(const FormalContext& ctx, const FormalConcept& a, const FormalConcept& b) {
    return {a.extent & b.extent, ctx.closure(a.intent | b.intent)};
}

FormalConcept join(const FormalContext& ctx, const FormalConcept& a, const FormalConcept& b) {
    return {ctx.closure(a.extent | b.extent), a.intent & b.intent};
}

ConceptLattice enumerate_concepts(const FormalContext& ctx) {
    const std::size_t m = ctx.attribute_count();

    // NextClosure: walk all closed attribute sets in lectic order.
    std::vector<AttributeSet> intents;
    AttributeSet current = ctx.closure(AttributeSet(m));
    for (;;) {
        intents.push_back(current);
        if (current.size() == m) break;
        for (std::size_t i = m; i-- > 0;) {
            if (current.contains(i)) {
                current.remove(i);
                continue;
            }
            AttributeSet candidate = current;
            candidate.add(i);
            AttributeSet closed = ctx.closure(candidate);
            // Valid successor iff closing added nothing below position i.
            Bitset added = closed.bits() - current.bits();
            std::size_t lowest = m;
            added.for_each([&](std::size_t j) { lowest = std::min(lowest, j); });
            if (lowest == i) {
                current = closed;
                break;
            }
        }
    }

    ConceptLattice lattice(ctx);
    lattice.concepts_.reserve(intents.size());
    for (auto& intent : intents)
        lattice.concepts_.push_back({ctx.derive(intent), intent});
    std::sort(lattice.concepts_.begin(), lattice.concepts_.end(), canonical_less);

    const std::size_t n = lattice.concepts_.size();
    lattice.above_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (lattice.concepts_[i].extent.subset_of(lattice.concepts_[j].extent))
                lattice.above_[i].set(j);

    std::vector<Bitset> below(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        lattice.above_[i].for_each([&](std::size_t j) { below[j].set(i); });

    // j covers i iff nothing sits strictly between them.
    for (std::size_t i = 0; i < n; ++i) {
        Bitset strictly_above = lattice.above_[i];
        strictly_above.reset(i);
        strictly_above.for_each([&](std::size_t j) {
            Bitset between = strictly_above & below[j];
            between.reset(j);
            if (between.none()) lattice.covers_.emplace_back(i, j);
        });
    }
    std::sort(lattice.covers_.begin(), lattice.covers_.end());

    for (std::size_t i = 0; i < n; ++i) {
        if (lattice.concepts_[i].extent.size() == ctx.object_count()) lattice.top_ = i;
        if (lattice.concepts_[i].intent.size() == m) lattice.bottom_ = i;
    }
    return lattice;
}

std::vector<std::pair<std::size_t, std::size_t>> ConceptLattice::leq_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < above_.size(); ++i)
        above_[i].for_each([&](std::size_t j) { out.emplace_back(i, j); });
    return out;
}

std::optional<std::size_t> ConceptLattice::find(const FormalConcept& c) const {
    auto it = std::lower_bound(concepts_.begin(), concepts_.end(), c, canonical_less);
    if (it != concepts_.end() && *it == c)
        return static_cast<std::size_t>(it - concepts_.begin());
    return std::nullopt;
}

std::size_t ConceptLattice::index_of(const FormalConcept& c) const {
    auto i = find(c);
    require(i.has_value(), ErrorCode::Argument, "concept is not part of this lattice");
    return *i;
}

std::string to_dot(const ConceptLattice& lattice, std::span<const std::size_t> marks) {
    const FormalContext& ctx = lattice.context();
    const std::size_t n = lattice.size();

    Bitset marked(n);
    for (auto i : marks) {
        require(i < n, ErrorCode::Argument, "mark index out of range");
        marked.set(i);
    }

    // Reduced labeling: attribute m at its attribute concept (m', m''),
    // object g at its object concept (g'', g').
    std::vector<std::vector<std::string>> attr_labels(n), object_labels(n);
    for (std::size_t mi = 0; mi < ctx.attribute_count(); ++mi) {
        AttributeSet one(ctx.attribute_count());
        one.add(mi);
        attr_labels[lattice.index_of(concept_from_attrs(ctx, one))].push_back(
            ctx.attribute_name(mi));
    }
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        ObjectSet one(ctx.object_count());
        one.add(g);
        object_labels[lattice.index_of(concept_from_objects(ctx, one))].push_back(
            ctx.object_name(g));
    }

    std::string out = "digraph lattice {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < n; ++i) {
        std::string label = dot_escape(join_names(attr_labels[i]));
        if (!object_labels[i].empty()) {
            if (!label.empty()) label += "\\n";
            label += dot_escape(join_names(object_labels[i]));
        }
        out += "  c" + std::to_string(i) + " [label=\"" + label + "\"";
        if (marked.test(i)) out += ", style=filled, fillcolor=gray";
        out += "];\n";
    }
    for (auto& [sub, super] : lattice.covers())
        out += "  c" + std::to_string(sub) + " -> c" + std::to_string(super) + ";\n";
    out += "}\n";
    return out;
}

std::string to_json(const ConceptLattice& lattice) {
    const FormalContext& ctx = lattice.context();
    nlohmann::ordered_json j;
    j["concepts"] = nlohmann::ordered_json::array();
    for (auto& c : lattice.concepts()) {
        j["concepts"].push_back({{"extent", ctx.object_names(c.extent)},
                                 {"intent", ctx.attribute_names(c.intent)}});
    }
    j["covers"] = nlohmann::ordered_json::array();
    for (auto& [sub, super] : lattice.covers()) j["covers"].push_back({sub, super});
    j["top"] = lattice.top();
    j["bottom"] = lattice.bottom();
    return j.dump(2) + "\n";
}

}  // namespace fcax
