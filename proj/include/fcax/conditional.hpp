#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fcax/preference.hpp"

namespace fcax {

/// Non-monotonic conditional A ~> B, or A ~> not-B when `negated` is set.
/// Evaluated against the whole extended context, never per object.
struct Conditional {
    AttributeSet premise;
    AttributeSet conclusion;
    bool negated = false;
};

/// Plain: min A subseteq B' (equivalently B subseteq (min A)').
/// Negated: min A and B' disjoint.
bool holds(const ExtendedContext& ext, const Conditional& c);

/// The consequence set of A: (min A)'. B subseteq consequences(A) iff
/// A ~> B holds.
AttributeSet consequences(const ExtendedContext& ext, const AttributeSet& attributes);

enum class Postulate {
    Reflexivity,
    Lle,  // Left Logical Equivalence
    Rw,   // Right Weakening
    Cut,
    And,
    Cm,  // Cautious Monotonicity
    Rm,  // Rational Monotonicity
    Lemma1,
    Lemma2,
};

inline constexpr std::array<Postulate, 9> kAllPostulates = {
    Postulate::Reflexivity, Postulate::Lle, Postulate::Rw,
    Postulate::Cut,         Postulate::And, Postulate::Cm,
    Postulate::Rm,          Postulate::Lemma1, Postulate::Lemma2,
};

std::size_t postulate_arity(Postulate p);
std::string_view postulate_name(Postulate p);

/// Equivalence used by the LLE antecedent: the semantic reading compares
/// derivations (A' = B'), the syntactic one the sets themselves.
enum class LleMode { Semantic, Syntactic };

/// One rule instance: true iff the consequent holds whenever all
/// antecedents do. Arity must match the postulate (1 for Reflexivity, 2 for
/// the lemmas, 3 otherwise); throws ErrorCode::Arity otherwise.
bool check_postulate(const ExtendedContext& ext, Postulate p,
                     std::span<const AttributeSet> sets,
                     LleMode lle = LleMode::Semantic);

/// A' intersect B' = (A union B)'.
bool check_lemma1(const FormalContext& ctx, const AttributeSet& a, const AttributeSet& b);
/// If A ~> B then min A = min (A union B); vacuously true otherwise.
bool check_lemma2(const ExtendedContext& ext, const AttributeSet& a, const AttributeSet& b);

struct PostulateReport {
    Postulate postulate;
    std::uint64_t checked = 0;
    std::vector<std::vector<AttributeSet>> violations;
};

struct KlmOptions {
    enum class Mode { Exhaustive, Sampled };
    Mode mode = Mode::Exhaustive;
    std::uint64_t sample_count = 1000;
    std::uint64_t seed = 0;
    /// Exhaustive mode refuses contexts with more attributes than this.
    std::size_t exhaustive_bound = 6;
    LleMode lle = LleMode::Semantic;
};

/// Checks every postulate and both lemmas, either on all attribute-subset
/// tuples of the matching arity (Exhaustive) or on seed-reproducible random
/// tuples (Sampled). Returns one report per postulate in kAllPostulates
/// order.
std::vector<PostulateReport> verify_klm(const ExtendedContext& ext, const KlmOptions& options = {});

}  // namespace fcax
