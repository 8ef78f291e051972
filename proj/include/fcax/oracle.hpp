#pragma once

#include <vector>

#include "fcax/lattice.hpp"
#include "fcax/preference.hpp"

namespace fcax {

// Brute-force reference implementations. These exhaust subsets directly and
// stay independent of the optimized paths they validate; the CLI exposes
// them behind --oracle.

/// Every concept (B', B'') for B over the attribute power set, deduplicated,
/// in canonical order. Bounded to 20 attributes.
std::vector<FormalConcept> brute_concepts(const FormalContext& ctx);

/// Minimised derivation by double loop over B'.
ObjectSet brute_min(const ExtendedContext& ext, const AttributeSet& attributes);

/// Checks min A = (min A)'' for every attribute subset. Bounded to 16
/// attributes.
bool brute_valid_order(const ExtendedContext& ext);

}  // namespace fcax
