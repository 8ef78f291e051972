#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fcax/conditional.hpp"
#include "fcax/context.hpp"
#include "fcax/preference.hpp"

namespace fcax {

enum class OutputFormat { Text, Json, Dot };

// Command-level report builders shared by the C API and (through it) the
// CLI. All outputs are byte-deterministic for fixed inputs and seed. With
// `oracle` set, results are cross-checked against an independent route and
// ErrorCode::OracleMismatch is thrown on disagreement.

std::string report_lattice(const FormalContext& ctx, const PreferenceOrder* prefs,
                           OutputFormat format, bool oracle);

std::string report_derive(const FormalContext& ctx, const PreferenceOrder* prefs,
                          const std::string& names, bool from_objects, OutputFormat format,
                          bool oracle);

struct QueryReport {
    std::string rendered;
    bool holds = false;
};
QueryReport report_query(const FormalContext& ctx, const PreferenceOrder* prefs,
                         std::string_view query, OutputFormat format, bool oracle);

/// With `attributes` present, reports the typical concept generated by the
/// listed attribute names; otherwise the full typical-set report.
std::string report_typical(const ExtendedContext& ext,
                           const std::optional<std::string>& attributes, OutputFormat format,
                           bool oracle);

std::string report_semilattice(const ExtendedContext& ext, OutputFormat format, bool oracle);

struct ValidateReport {
    std::string rendered;
    bool valid = false;
};
ValidateReport report_validate_order(const ExtendedContext& ext, OutputFormat format,
                                     bool oracle);

struct KlmReport {
    std::string rendered;
    bool ok = false;
};
struct KlmRunConfig {
    enum class Mode { Auto, Exhaustive, Sampled };
    Mode mode = Mode::Auto;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    std::size_t exhaustive_bound = 6;
    LleMode lle = LleMode::Semantic;
};
KlmReport report_klm(const ExtendedContext& ext, const KlmRunConfig& config,
                     OutputFormat format, bool oracle);

}  // namespace fcax
