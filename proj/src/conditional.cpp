#include "fcax/conditional.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>

#include "fcax/error.hpp"

namespace fcax {

namespace {

// splitmix64; one independent stream per postulate so reports do not depend
// on evaluation order.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

AttributeSet random_subset(SplitMix64& rng, std::size_t m) {
    Bitset bits(m);
    for (std::size_t base = 0; base < m; base += 64) {
        std::uint64_t word = rng.next();
        std::size_t width = std::min<std::size_t>(64, m - base);
        for (std::size_t b = 0; b < width; ++b)
            if ((word >> b) & 1) bits.set(base + b);
    }
    return AttributeSet(std::move(bits));
}

void require_arity(Postulate p, std::size_t got) {
    std::size_t want = postulate_arity(p);
    require(got == want, ErrorCode::Arity,
            std::string(postulate_name(p)) + " takes " + std::to_string(want) +
                " attribute sets, got " + std::to_string(got));
}

}  // namespace

bool holds(const ExtendedContext& ext, const Conditional& c) {
    ObjectSet minimal = minimize(ext, c.premise);
    ObjectSet conclusion_extent = ext.context().derive(c.conclusion);
    if (c.negated) return !minimal.intersects(conclusion_extent);
    return minimal.subset_of(conclusion_extent);
}

AttributeSet consequences(const ExtendedContext& ext, const AttributeSet& attributes) {
    return minimised_return(ext, attributes);
}

std::size_t postulate_arity(Postulate p) {
    switch (p) {
        case Postulate::Reflexivity:
            return 1;
        case Postulate::Lemma1:
        case Postulate::Lemma2:
            return 2;
        default:
            return 3;
    }
}

std::string_view postulate_name(Postulate p) {
    switch (p) {
        case Postulate::Reflexivity:
            return "Reflexivity";
        case Postulate::Lle:
            return "LLE";
        case Postulate::Rw:
            return "RW";
        case Postulate::Cut:
            return "Cut";
        case Postulate::And:
            return "And";
        case Postulate::Cm:
            return "CM";
        case Postulate::Rm:
            return "RM";
        case Postulate::Lemma1:
            return "Lemma1";
        case Postulate::Lemma2:
            return "Lemma2";
    }
    return "?";
}

bool check_postulate(const ExtendedContext& ext, Postulate p,
                     std::span<const AttributeSet> s, LleMode lle) {
    require_arity(p, s.size());
    auto h = [&](const AttributeSet& a, const AttributeSet& b) {
        return holds(ext, {a, b, false});
    };
    auto h_not = [&](const AttributeSet& a, const AttributeSet& b) {
        return holds(ext, {a, b, true});
    };
    switch (p) {
        case Postulate::Reflexivity:
            return h(s[0], s[0]);
        case Postulate::Lle: {
            bool equivalent = lle == LleMode::Semantic
                                  ? attr_equivalent(ext.context(), s[0], s[1])
                                  : s[0] == s[1];
            return !(equivalent && h(s[0], s[2])) || h(s[1], s[2]);
        }
        case Postulate::Rw:
            return !(models(ext.context(), {s[0], s[1], false}) && h(s[2], s[0])) ||
                   h(s[2], s[1]);
        case Postulate::Cut:
            return !(h(s[0] | s[1], s[2]) && h(s[0], s[1])) || h(s[0], s[2]);
        case Postulate::And:
            return !(h(s[0], s[1]) && h(s[0], s[2])) || h(s[0], s[1] | s[2]);
        case Postulate::Cm:
            return !(h(s[0], s[1]) && h(s[0], s[2])) || h(s[0] | s[1], s[2]);
        case Postulate::Rm:
            return !(h(s[0], s[1]) && !h_not(s[0], s[2])) || h(s[0] | s[2], s[1]);
        case Postulate::Lemma1:
            return check_lemma1(ext.context(), s[0], s[1]);
        case Postulate::Lemma2:
            return check_lemma2(ext, s[0], s[1]);
    }
    throw Error(ErrorCode::Internal, "unreachable postulate");
}

bool check_lemma1(const FormalContext& ctx, const AttributeSet& a, const AttributeSet& b) {
    return (ctx.derive(a) & ctx.derive(b)) == ctx.derive(a | b);
}

bool check_lemma2(const ExtendedContext& ext, const AttributeSet& a, const AttributeSet& b) {
    if (!holds(ext, {a, b, false})) return true;
    return minimize(ext, a) == minimize(ext, a | b);
}

namespace {

std::vector<AttributeSet> sets_from_masks(std::size_t m,
                                          std::initializer_list<std::uint64_t> masks) {
    std::vector<AttributeSet> out;
    for (auto mask : masks) out.emplace_back(Bitset::from_mask(m, mask));
    return out;
}

PostulateReport run_exhaustive(const ExtendedContext& ext, const MinimisationTable& t,
                               Postulate p, LleMode lle) {
    PostulateReport report{p, 0, {}};
    const std::size_t m = t.attribute_count();
    const std::uint64_t n = t.subset_count();
    auto fail = [&](std::initializer_list<std::uint64_t> masks) {
        report.violations.push_back(sets_from_masks(m, masks));
    };

    switch (p) {
        case Postulate::Reflexivity:
            for (std::uint64_t a = 0; a < n; ++a) {
                ++report.checked;
                if (!t.holds(a, a)) fail({a});
            }
            break;
        case Postulate::Lle:
            for (std::uint64_t a = 0; a < n; ++a)
                for (std::uint64_t b = 0; b < n; ++b) {
                    bool equivalent = lle == LleMode::Semantic ? t.equivalent(a, b) : a == b;
                    if (!equivalent) {
                        report.checked += n;
                        continue;
                    }
                    for (std::uint64_t c = 0; c < n; ++c) {
                        ++report.checked;
                        if (t.holds(a, c) && !t.holds(b, c)) fail({a, b, c});
                    }
                }
            break;
        case Postulate::Rw:
            for (std::uint64_t a = 0; a < n; ++a)
                for (std::uint64_t b = 0; b < n; ++b) {
                    if (!t.models(a, b)) {
                        report.checked += n;
                        continue;
                    }
                    for (std::uint64_t c = 0; c < n; ++c) {
                        ++report.checked;
                        if (t.holds(c, a) && !t.holds(c, b)) fail({a, b, c});
                    }
                }
            break;
        case Postulate::Cut:
            for (std::uint64_t a = 0; a < n; ++a)
                for (std::uint64_t b = 0; b < n; ++b) {
                    if (!t.holds(a, b)) {
                        report.checked += n;
                        continue;
                    }
                    for (std::uint64_t c = 0; c < n; ++c) {
                        ++report.checked;
                        if (t.holds(a | b, c) && !t.holds(a, c)) fail({a, b, c});
                    }
                }
            break;
        case Postulate::And:
            for (std::uint64_t a = 0; a < n; ++a)
                for (std::uint64_t b = 0; b < n; ++b) {
                    if (!t.holds(a, b)) {
                        report.checked += n;
                        continue;
                    }
                    for (std::uint64_t c = 0; c < n; ++c) {
                        ++report.checked;
                        if (t.holds(a, c) && !t.holds(a, b | c)) fail({a, b, c});
                    }
                }
            break;
        case Postulate::Cm:
            for (std::uint64_t a = 0; a < n; ++a)
                for (std::uint64_t b = 0; b < n; ++b) {
                    if (!t.holds(a, b)) {
                        report.checked += n;
                        continue;
                    }
                    for (std::uint64_t c = 0; c < n; ++c) {
                        ++report.checked;
                        if (t.holds(a, c) && !t.holds(a | b, c)) fail({a, b, c});
                    }
                }
            break;
        case Postulate::Rm:
            for (std::uint64_t a = 0; a < n; ++a)
                for (std::uint64_t b = 0; b < n; ++b) {
                    if (!t.holds(a, b)) {
                        report.checked += n;
                        continue;
                    }
                    for (std::uint64_t c = 0; c < n; ++c) {
                        ++report.checked;
                        if (!t.holds_negated(a, c) && !t.holds(a | c, b)) fail({a, b, c});
                    }
                }
            break;
        case Postulate::Lemma1:
            for (std::uint64_t a = 0; a < n; ++a)
                for (std::uint64_t b = 0; b < n; ++b) {
                    ++report.checked;
                    if ((t.extent(a) & t.extent(b)) != t.extent(a | b)) fail({a, b});
                }
            break;
        case Postulate::Lemma2:
            for (std::uint64_t a = 0; a < n; ++a)
                for (std::uint64_t b = 0; b < n; ++b) {
                    ++report.checked;
                    if (t.holds(a, b) && t.minimal(a) != t.minimal(a | b)) fail({a, b});
                }
            break;
    }
    (void)ext;
    return report;
}

PostulateReport run_sampled(const ExtendedContext& ext, Postulate p, std::uint64_t samples,
                            std::uint64_t seed, LleMode lle) {
    PostulateReport report{p, 0, {}};
    const std::size_t m = ext.context().attribute_count();
    const std::size_t arity = postulate_arity(p);
    // Independent stream per postulate, split off the user seed.
    SplitMix64 stream_seed(seed);
    for (std::size_t skip = 0; skip <= static_cast<std::size_t>(p); ++skip) stream_seed.next();
    SplitMix64 rng(stream_seed.next());

    std::vector<AttributeSet> tuple(arity, AttributeSet(m));
    for (std::uint64_t i = 0; i < samples; ++i) {
        for (std::size_t k = 0; k < arity; ++k) tuple[k] = random_subset(rng, m);
        ++report.checked;
        if (!check_postulate(ext, p, tuple, lle)) report.violations.push_back(tuple);
    }
    return report;
}

}  // namespace

std::vector<PostulateReport> verify_klm(const ExtendedContext& ext, const KlmOptions& options) {
    std::vector<PostulateReport> reports;
    reports.reserve(kAllPostulates.size());
    if (options.mode == KlmOptions::Mode::Exhaustive) {
        const std::size_t m = ext.context().attribute_count();
        require(m <= options.exhaustive_bound, ErrorCode::Limit,
                "exhaustive mode is bounded to " + std::to_string(options.exhaustive_bound) +
                    " attributes, context has " + std::to_string(m));
        MinimisationTable table(ext);
        for (Postulate p : kAllPostulates)
            reports.push_back(run_exhaustive(ext, table, p, options.lle));
    } else {
        require(options.sample_count >= 1, ErrorCode::Argument,
                "sampled mode requires at least one sample");
        for (Postulate p : kAllPostulates)
            reports.push_back(
                run_sampled(ext, p, options.sample_count, options.seed, options.lle));
    }
    return reports;
}

}  // namespace fcax
