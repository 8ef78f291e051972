#include "fcax/report.hpp"

#include <algorithm>
#include <json.hpp>

#include "fcax/error.hpp"
#include "fcax/lattice.hpp"
#include "fcax/oracle.hpp"
#include "fcax/query.hpp"
#include "fcax/typicality.hpp"

namespace fcax {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string braces(const std::vector<std::string>& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    out += "}";
    return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void reject_dot(OutputFormat format) {
    require(format != OutputFormat::Dot, ErrorCode::Argument,
            "dot output is only available for the lattice command");
}

void oracle_check(bool agree, const std::string& what) {
    require(agree, ErrorCode::OracleMismatch, "oracle cross-check failed: " + what);
}

std::string concept_text(const FormalContext& ctx, const FormalConcept& c) {
    return "extent=" + braces(ctx.object_names(c.extent)) +
           " intent=" + braces(ctx.attribute_names(c.intent));
}

ordered_json concept_json(const FormalContext& ctx, const FormalConcept& c) {
    return {{"extent", ctx.object_names(c.extent)}, {"intent", ctx.attribute_names(c.intent)}};
}

void check_lattice_oracle(const FormalContext& ctx, const ConceptLattice& lattice) {
    oracle_check(lattice.concepts() == brute_concepts(ctx), "concept enumeration");
}

// Same TypicalSet recomputed through the brute-force minimisation.
void check_typical_oracle(const ExtendedContext& ext, const ConceptLattice& lattice,
                          const std::vector<std::size_t>& typical) {
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        const FormalConcept& c = lattice.concept_at(i);
        if (ext.context().closure(brute_min(ext, c.intent)) == c.extent) expected.push_back(i);
    }
    oracle_check(typical == expected, "typical concepts");
}

ordered_json typical_set_json(const ExtendedContext& ext, const ConceptLattice& lattice,
                              const TypicalSet& typical) {
    auto [valid, witness] = is_valid_order(ext, lattice);
    ordered_json j;
    j["typical"] = typical.concepts;
    j["meet_closed"] = typical.meet_closed;
    j["has_top"] = typical.has_top;
    if (typical.join_counterexample) {
        auto [left, right, joined] = *typical.join_counterexample;
        j["join_counterexample"] = {{"left", left},
                                    {"right", right},
                                    {"join", concept_json(ext.context(), lattice.concept_at(joined))}};
    } else {
        j["join_counterexample"] = nullptr;
    }
    j["valid_order"] = valid;
    j["validity_witness"] =
        witness ? ordered_json(ext.context().attribute_names(*witness)) : ordered_json(nullptr);
    return j;
}

std::string typical_set_text(const ExtendedContext& ext, const ConceptLattice& lattice,
                             const TypicalSet& typical) {
    auto [valid, witness] = is_valid_order(ext, lattice);
    std::string out = "typical concepts: " + std::to_string(typical.concepts.size()) + " of " +
                      std::to_string(lattice.size()) + "\n";
    for (auto i : typical.concepts)
        out += "  c" + std::to_string(i) + "  " + concept_text(ext.context(), lattice.concept_at(i)) +
               "\n";
    out += "meet_closed: " + std::string(typical.meet_closed ? "true" : "false") + "\n";
    if (typical.meet_counterexample) {
        auto [l, r, m] = *typical.meet_counterexample;
        out += "  meet(c" + std::to_string(l) + ", c" + std::to_string(r) + ") = c" +
               std::to_string(m) + " is not typical\n";
    }
    out += "has_top: " + std::string(typical.has_top ? "true" : "false") + "\n";
    if (typical.join_counterexample) {
        auto [l, r, j] = *typical.join_counterexample;
        out += "join_counterexample: join(c" + std::to_string(l) + ", c" + std::to_string(r) +
               ") = c" + std::to_string(j) + " is not typical\n";
    }
    out += "valid_order: " + std::string(valid ? "true" : "false") + "\n";
    if (witness)
        out += "validity_witness: " + braces(ext.context().attribute_names(*witness)) + "\n";
    return out;
}

std::string render_typical_set(const ExtendedContext& ext, OutputFormat format, bool oracle,
                               bool semilattice_checks) {
    reject_dot(format);
    ConceptLattice lattice = enumerate_concepts(ext.context());
    TypicalSet typical = semilattice_checks ? typical_meet_semilattice(ext, lattice)
                                            : enumerate_typical(ext, lattice);
    if (oracle) {
        check_lattice_oracle(ext.context(), lattice);
        check_typical_oracle(ext, lattice, typical.concepts);
    }
    if (format == OutputFormat::Json) return dump(typical_set_json(ext, lattice, typical));
    return typical_set_text(ext, lattice, typical);
}

}  // namespace

std::string report_lattice(const FormalContext& ctx, const PreferenceOrder* prefs,
                           OutputFormat format, bool oracle) {
    ConceptLattice lattice = enumerate_concepts(ctx);
    if (oracle) check_lattice_oracle(ctx, lattice);

    std::optional<TypicalSet> typical;
    if (prefs) {
        ExtendedContext ext(ctx, *prefs);
        typical = enumerate_typical(ext, lattice);
        if (oracle) check_typical_oracle(ext, lattice, typical->concepts);
    }

    if (format == OutputFormat::Dot)
        return to_dot(lattice, typical ? std::span<const std::size_t>(typical->concepts)
                                       : std::span<const std::size_t>{});
    if (format == OutputFormat::Json) return to_json(lattice);

    std::string out = "context: " + std::to_string(ctx.object_count()) + " objects, " +
                      std::to_string(ctx.attribute_count()) + " attributes\n";
    out += "concepts: " + std::to_string(lattice.size()) + " (bottom c" +
           std::to_string(lattice.bottom()) + ", top c" + std::to_string(lattice.top()) + ")\n";
    for (std::size_t i = 0; i < lattice.size(); ++i)
        out += "c" + std::to_string(i) + "  " + concept_text(ctx, lattice.concept_at(i)) + "\n";
    std::string covers;
    for (auto& [sub, super] : lattice.covers()) {
        if (!covers.empty()) covers += ' ';
        covers += "c" + std::to_string(sub) + "<c" + std::to_string(super);
    }
    out += "covers: " + covers + "\n";
    if (typical) {
        std::string marks;
        for (auto i : typical->concepts) {
            if (!marks.empty()) marks += ' ';
            marks += "c" + std::to_string(i);
        }
        out += "typical: " + marks + "\n";
    }
    return out;
}

std::string report_derive(const FormalContext& ctx, const PreferenceOrder* prefs,
                          const std::string& names, bool from_objects, OutputFormat format,
                          bool oracle) {
    reject_dot(format);
    auto name_list = parse_name_list(names);

    if (from_objects) {
        ObjectSet objects = ctx.objects_by_name(name_list);
        AttributeSet intent = ctx.derive(objects);
        ObjectSet extent = ctx.closure(objects);
        if (format == OutputFormat::Json) {
            ordered_json j;
            j["objects"] = ctx.object_names(objects);
            j["intent"] = ctx.attribute_names(intent);
            j["closure"] = ctx.object_names(extent);
            return dump(j);
        }
        return "objects: " + braces(ctx.object_names(objects)) + "\nintent (A'): " +
               braces(ctx.attribute_names(intent)) + "\nclosure (A''): " +
               braces(ctx.object_names(extent)) + "\n";
    }

    AttributeSet attributes = ctx.attributes_by_name(name_list);
    ObjectSet extent = ctx.derive(attributes);
    AttributeSet closed = ctx.closure(attributes);

    std::optional<ObjectSet> minimal;
    std::optional<AttributeSet> typical_intent;
    if (prefs) {
        ExtendedContext ext(ctx, *prefs);
        minimal = minimize(ext, attributes);
        typical_intent = minimised_return(ext, attributes);
        if (oracle) oracle_check(*minimal == brute_min(ext, attributes), "minimised derivation");
    }

    if (format == OutputFormat::Json) {
        ordered_json j;
        j["attributes"] = ctx.attribute_names(attributes);
        j["extent"] = ctx.object_names(extent);
        j["closure"] = ctx.attribute_names(closed);
        j["min"] = minimal ? ordered_json(ctx.object_names(*minimal)) : ordered_json(nullptr);
        j["typical_intent"] = typical_intent ? ordered_json(ctx.attribute_names(*typical_intent))
                                             : ordered_json(nullptr);
        return dump(j);
    }

    std::string out = "attributes: " + braces(ctx.attribute_names(attributes)) + "\n";
    out += "extent (B'): " + braces(ctx.object_names(extent)) + "\n";
    out += "closure (B''): " + braces(ctx.attribute_names(closed)) + "\n";
    if (minimal) out += "min: " + braces(ctx.object_names(*minimal)) + "\n";
    if (typical_intent)
        out += "typical intent ((min B)'): " + braces(ctx.attribute_names(*typical_intent)) + "\n";
    return out;
}

QueryReport report_query(const FormalContext& ctx, const PreferenceOrder* prefs,
                         std::string_view query, OutputFormat format, bool oracle) {
    reject_dot(format);
    Query q = parse_query(query);

    bool result = false;
    if (q.defeasible) {
        require(prefs != nullptr, ErrorCode::Argument,
                "defeasible queries need a preference order");
        ExtendedContext ext(ctx, *prefs);
        Conditional c = resolve_conditional(ctx, q);
        result = holds(ext, c);
        if (oracle) {
            ObjectSet minimal = brute_min(ext, c.premise);
            bool expected = c.negated ? !minimal.intersects(ctx.derive(c.conclusion))
                                      : minimal.subset_of(ctx.derive(c.conclusion));
            oracle_check(result == expected, "conditional evaluation");
        }
    } else {
        Implication imp = resolve_implication(ctx, q);
        result = models(ctx, imp);
        if (oracle) {
            // Second route: every object intent must respect the implication.
            bool expected = true;
            for (std::size_t g = 0; g < ctx.object_count(); ++g)
                expected = expected && respects(ctx.object_intent(g), imp);
            oracle_check(result == expected, "implication evaluation");
        }
    }

    QueryReport report;
    report.holds = result;
    if (format == OutputFormat::Json) {
        ordered_json j;
        j["query"] = std::string(query);
        j["kind"] = q.defeasible ? "conditional" : "implication";
        j["holds"] = result;
        report.rendered = dump(j);
    } else {
        report.rendered = std::string("holds: ") + (result ? "true" : "false") + "\n";
    }
    return report;
}

std::string report_typical(const ExtendedContext& ext,
                           const std::optional<std::string>& attributes, OutputFormat format,
                           bool oracle) {
    if (!attributes) return render_typical_set(ext, format, oracle, false);

    reject_dot(format);
    AttributeSet from = ext.context().attributes_by_name(parse_name_list(*attributes));
    FormalConcept c = typical_concept_from(ext, from);
    if (oracle) {
        ObjectSet minimal = brute_min(ext, from);
        AttributeSet intent = ext.context().derive(minimal);
        FormalConcept expected{ext.context().derive(intent), intent};
        oracle_check(c == expected, "typical concept");
    }
    if (format == OutputFormat::Json) {
        ordered_json j;
        j["attributes"] = ext.context().attribute_names(from);
        j["typical_concept"] = concept_json(ext.context(), c);
        return dump(j);
    }
    return "attributes: " + braces(ext.context().attribute_names(from)) +
           "\ntypical concept: " + concept_text(ext.context(), c) + "\n";
}

std::string report_semilattice(const ExtendedContext& ext, OutputFormat format, bool oracle) {
    return render_typical_set(ext, format, oracle, true);
}

ValidateReport report_validate_order(const ExtendedContext& ext, OutputFormat format,
                                     bool oracle) {
    reject_dot(format);
    auto [valid, witness] = is_valid_order(ext);
    if (oracle) oracle_check(valid == brute_valid_order(ext), "order validity");

    ValidateReport report;
    report.valid = valid;
    if (format == OutputFormat::Json) {
        ordered_json j;
        j["valid_order"] = valid;
        j["validity_witness"] =
            witness ? ordered_json(ext.context().attribute_names(*witness)) : ordered_json(nullptr);
        report.rendered = dump(j);
    } else {
        report.rendered = "valid_order: " + std::string(valid ? "true" : "false") + "\n";
        if (witness)
            report.rendered +=
                "validity_witness: " + braces(ext.context().attribute_names(*witness)) + "\n";
    }
    return report;
}

KlmReport report_klm(const ExtendedContext& ext, const KlmRunConfig& config, OutputFormat format,
                     bool oracle) {
    reject_dot(format);

    KlmOptions options;
    options.sample_count = config.samples;
    options.seed = config.seed;
    options.exhaustive_bound = config.exhaustive_bound;
    options.lle = config.lle;
    switch (config.mode) {
        case KlmRunConfig::Mode::Auto:
            options.mode = ext.context().attribute_count() <= config.exhaustive_bound
                               ? KlmOptions::Mode::Exhaustive
                               : KlmOptions::Mode::Sampled;
            break;
        case KlmRunConfig::Mode::Exhaustive:
            options.mode = KlmOptions::Mode::Exhaustive;
            break;
        case KlmRunConfig::Mode::Sampled:
            options.mode = KlmOptions::Mode::Sampled;
            break;
    }

    auto reports = verify_klm(ext, options);

    if (oracle && options.mode == KlmOptions::Mode::Exhaustive) {
        // Replay every tuple through the direct per-instance evaluation.
        const std::size_t m = ext.context().attribute_count();
        for (Postulate p : kAllPostulates) {
            std::size_t arity = postulate_arity(p);
            std::vector<std::uint64_t> masks(arity, 0);
            std::uint64_t failures = 0;
            std::vector<AttributeSet> tuple(arity, AttributeSet(m));
            for (;;) {
                for (std::size_t k = 0; k < arity; ++k)
                    tuple[k] = AttributeSet(Bitset::from_mask(m, masks[k]));
                if (!check_postulate(ext, p, tuple, options.lle)) ++failures;
                std::size_t k = 0;
                while (k < arity && ++masks[k] == (std::uint64_t{1} << m)) masks[k++] = 0;
                if (k == arity) break;
            }
            oracle_check(failures == reports[static_cast<std::size_t>(p)].violations.size(),
                         std::string("postulate ") + std::string(postulate_name(p)));
        }
    }

    bool ok = true;
    for (auto& r : reports) ok = ok && r.violations.empty();

    KlmReport out;
    out.ok = ok;
    const char* mode_name =
        options.mode == KlmOptions::Mode::Exhaustive ? "exhaustive" : "sampled";

    if (format == OutputFormat::Json) {
        ordered_json j;
        j["mode"] = mode_name;
        if (options.mode == KlmOptions::Mode::Sampled) {
            j["samples"] = options.sample_count;
            j["seed"] = options.seed;
        }
        j["reports"] = ordered_json::array();
        for (auto& r : reports) {
            ordered_json violations = ordered_json::array();
            for (auto& tuple : r.violations) {
                ordered_json instance = ordered_json::array();
                for (auto& s : tuple) instance.push_back(ext.context().attribute_names(s));
                violations.push_back(instance);
            }
            j["reports"].push_back({{"postulate", std::string(postulate_name(r.postulate))},
                                    {"checked", r.checked},
                                    {"violations", violations}});
        }
        j["ok"] = ok;
        out.rendered = dump(j);
    } else {
        std::string text = std::string("mode: ") + mode_name + "\n";
        for (auto& r : reports) {
            std::string name(postulate_name(r.postulate));
            text += name + std::string(12 - std::min<std::size_t>(11, name.size()), ' ') +
                    "checked=" + std::to_string(r.checked) +
                    " violations=" + std::to_string(r.violations.size()) + "\n";
        }
        text += std::string("result: ") + (ok ? "ok" : "violations found") + "\n";
        out.rendered = text;
    }
    return out;
}

}  // namespace fcax
