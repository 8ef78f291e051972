#include "fcax/fcax.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "fcax/error.hpp"
#include "fcax/report.hpp"

struct fcax_error {
    fcax_status status;
    std::string message;
};

struct fcax_context {
    fcax::FormalContext impl;
};

struct fcax_prefs {
    fcax::PreferenceOrder impl;
};

namespace {

fcax_status status_of(fcax::ErrorCode code) {
    switch (code) {
        case fcax::ErrorCode::Parse:
            return FCAX_E_PARSE;
        case fcax::ErrorCode::Name:
            return FCAX_E_NAME;
        case fcax::ErrorCode::Cycle:
            return FCAX_E_CYCLE;
        case fcax::ErrorCode::Arity:
            return FCAX_E_ARITY;
        case fcax::ErrorCode::Limit:
            return FCAX_E_LIMIT;
        case fcax::ErrorCode::Argument:
            return FCAX_E_ARG;
        case fcax::ErrorCode::OracleMismatch:
            return FCAX_E_ORACLE;
        case fcax::ErrorCode::Internal:
            return FCAX_E_INTERNAL;
    }
    return FCAX_E_INTERNAL;
}

fcax_status fill_error(fcax_error** err, fcax_status status, const std::string& message) {
    if (err) *err = new fcax_error{status, message};
    return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
fcax_status guarded(fcax_error** err, Fn&& fn) {
    if (err) *err = nullptr;
    try {
        fn();
        return FCAX_OK;
    } catch (const fcax::Error& e) {
        return fill_error(err, status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fill_error(err, FCAX_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fill_error(err, FCAX_E_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fcax::OutputFormat output_format(int format) {
    switch (format) {
        case FCAX_FORMAT_TEXT:
            return fcax::OutputFormat::Text;
        case FCAX_FORMAT_JSON:
            return fcax::OutputFormat::Json;
        case FCAX_FORMAT_DOT:
            return fcax::OutputFormat::Dot;
    }
    throw fcax::Error(fcax::ErrorCode::Argument, "unknown output format");
}

void require_arg(bool ok, const char* message) {
    fcax::require(ok, fcax::ErrorCode::Argument, message);
}

fcax::ExtendedContext extended(const fcax_context* ctx, const fcax_prefs* prefs) {
    require_arg(prefs != nullptr, "this command requires a preference order");
    return fcax::ExtendedContext(ctx->impl, prefs->impl);
}

}  // namespace

extern "C" {

const char* fcax_version(void) { return "0.1.0"; }

fcax_status fcax_error_status(const fcax_error* err) {
    return err ? err->status : FCAX_OK;
}

const char* fcax_error_message(const fcax_error* err) {
    return err ? err->message.c_str() : "";
}

void fcax_error_free(fcax_error* err) { delete err; }

void fcax_string_free(char* s) { std::free(s); }

fcax_status fcax_context_parse(const char* text, int text_format, fcax_context** out,
                               fcax_error** err) {
    return guarded(err, [&] {
        require_arg(text && out, "text and out must be non-null");
        fcax::FormalContext parsed = [&] {
            switch (text_format) {
                case FCAX_TEXT_AUTO:
                    return fcax::FormalContext::parse_auto(text);
                case FCAX_TEXT_CXT:
                    return fcax::FormalContext::parse(text, fcax::ContextFormat::Cxt);
                case FCAX_TEXT_CSV:
                    return fcax::FormalContext::parse(text, fcax::ContextFormat::Csv);
            }
            throw fcax::Error(fcax::ErrorCode::Argument, "unknown context format");
        }();
        *out = new fcax_context{std::move(parsed)};
    });
}

void fcax_context_free(fcax_context* ctx) { delete ctx; }

int fcax_context_object_count(const fcax_context* ctx) {
    return ctx ? static_cast<int>(ctx->impl.object_count()) : 0;
}

int fcax_context_attribute_count(const fcax_context* ctx) {
    return ctx ? static_cast<int>(ctx->impl.attribute_count()) : 0;
}

const char* fcax_context_object_name(const fcax_context* ctx, int g) {
    if (!ctx || g < 0 || g >= fcax_context_object_count(ctx)) return nullptr;
    return ctx->impl.object_name(static_cast<std::size_t>(g)).c_str();
}

const char* fcax_context_attribute_name(const fcax_context* ctx, int m) {
    if (!ctx || m < 0 || m >= fcax_context_attribute_count(ctx)) return nullptr;
    return ctx->impl.attribute_name(static_cast<std::size_t>(m)).c_str();
}

int fcax_context_incident(const fcax_context* ctx, int g, int m) {
    if (!ctx || g < 0 || g >= fcax_context_object_count(ctx) || m < 0 ||
        m >= fcax_context_attribute_count(ctx))
        return -1;
    return ctx->impl.incident(static_cast<std::size_t>(g), static_cast<std::size_t>(m)) ? 1 : 0;
}

fcax_status fcax_context_serialize(const fcax_context* ctx, int text_format, char** out,
                                   fcax_error** err) {
    return guarded(err, [&] {
        require_arg(ctx && out, "ctx and out must be non-null");
        switch (text_format) {
            case FCAX_TEXT_CXT:
                *out = copy_string(ctx->impl.to_cxt());
                return;
            case FCAX_TEXT_CSV:
                *out = copy_string(ctx->impl.to_csv());
                return;
        }
        throw fcax::Error(fcax::ErrorCode::Argument, "serialization needs CXT or CSV");
    });
}

fcax_status fcax_prefs_parse(const fcax_context* ctx, const char* text, fcax_prefs** out,
                             fcax_error** err) {
    return guarded(err, [&] {
        require_arg(ctx && text && out, "ctx, text, and out must be non-null");
        *out = new fcax_prefs{fcax::parse_preferences(ctx->impl, text)};
    });
}

void fcax_prefs_free(fcax_prefs* prefs) { delete prefs; }

int fcax_prefs_pair_count(const fcax_prefs* prefs) {
    return prefs ? static_cast<int>(prefs->impl.pair_count()) : 0;
}

int fcax_prefs_precedes(const fcax_prefs* prefs, int g, int h) {
    if (!prefs || g < 0 || h < 0 || static_cast<std::size_t>(g) >= prefs->impl.object_count() ||
        static_cast<std::size_t>(h) >= prefs->impl.object_count())
        return -1;
    return prefs->impl.precedes(static_cast<std::size_t>(g), static_cast<std::size_t>(h)) ? 1 : 0;
}

fcax_status fcax_eval_query(const fcax_context* ctx, const fcax_prefs* prefs, const char* query,
                            int* out_holds, fcax_error** err) {
    return guarded(err, [&] {
        require_arg(ctx && query && out_holds, "ctx, query, and out_holds must be non-null");
        auto report = fcax::report_query(ctx->impl, prefs ? &prefs->impl : nullptr, query,
                                         fcax::OutputFormat::Text, false);
        *out_holds = report.holds ? 1 : 0;
    });
}

fcax_status fcax_report_lattice(const fcax_context* ctx, const fcax_prefs* prefs, int format,
                                int oracle, char** out, fcax_error** err) {
    return guarded(err, [&] {
        require_arg(ctx && out, "ctx and out must be non-null");
        *out = copy_string(fcax::report_lattice(ctx->impl, prefs ? &prefs->impl : nullptr,
                                                output_format(format), oracle != 0));
    });
}

fcax_status fcax_report_derive(const fcax_context* ctx, const fcax_prefs* prefs,
                               const char* names, int from_objects, int format, int oracle,
                               char** out, fcax_error** err) {
    return guarded(err, [&] {
        require_arg(ctx && names && out, "ctx, names, and out must be non-null");
        *out = copy_string(fcax::report_derive(ctx->impl, prefs ? &prefs->impl : nullptr, names,
                                               from_objects != 0, output_format(format),
                                               oracle != 0));
    });
}

fcax_status fcax_report_query(const fcax_context* ctx, const fcax_prefs* prefs,
                              const char* query, int format, int oracle, char** out,
                              int* out_holds, fcax_error** err) {
    return guarded(err, [&] {
        require_arg(ctx && query && out, "ctx, query, and out must be non-null");
        auto report = fcax::report_query(ctx->impl, prefs ? &prefs->impl : nullptr, query,
                                         output_format(format), oracle != 0);
        *out = copy_string(report.rendered);
        if (out_holds) *out_holds = report.holds ? 1 : 0;
    });
}

fcax_status fcax_report_typical(const fcax_context* ctx, const fcax_prefs* prefs,
                                const char* attributes, int format, int oracle, char** out,
                                fcax_error** err) {
    return guarded(err, [&] {
        require_arg(ctx && out, "ctx and out must be non-null");
        std::optional<std::string> attrs;
        if (attributes) attrs = attributes;
        *out = copy_string(fcax::report_typical(extended(ctx, prefs), attrs,
                                                output_format(format), oracle != 0));
    });
}

fcax_status fcax_report_semilattice(const fcax_context* ctx, const fcax_prefs* prefs, int format,
                                    int oracle, char** out, fcax_error** err) {
    return guarded(err, [&] {
        require_arg(ctx && out, "ctx and out must be non-null");
        *out = copy_string(
            fcax::report_semilattice(extended(ctx, prefs), output_format(format), oracle != 0));
    });
}

fcax_status fcax_report_validate_order(const fcax_context* ctx, const fcax_prefs* prefs,
                                       int format, int oracle, char** out, int* out_valid,
                                       fcax_error** err) {
    return guarded(err, [&] {
        require_arg(ctx && out, "ctx and out must be non-null");
        auto report = fcax::report_validate_order(extended(ctx, prefs), output_format(format),
                                                  oracle != 0);
        *out = copy_string(report.rendered);
        if (out_valid) *out_valid = report.valid ? 1 : 0;
    });
}

fcax_status fcax_report_klm(const fcax_context* ctx, const fcax_prefs* prefs, int mode,
                            long long samples, unsigned long long seed, int lle_syntactic,
                            int exhaustive_bound, int format, int oracle, char** out, int* out_ok,
                            fcax_error** err) {
    return guarded(err, [&] {
        require_arg(ctx && out, "ctx and out must be non-null");
        fcax::KlmRunConfig config;
        switch (mode) {
            case FCAX_KLM_AUTO:
                config.mode = fcax::KlmRunConfig::Mode::Auto;
                break;
            case FCAX_KLM_EXHAUSTIVE:
                config.mode = fcax::KlmRunConfig::Mode::Exhaustive;
                break;
            case FCAX_KLM_SAMPLED:
                config.mode = fcax::KlmRunConfig::Mode::Sampled;
                break;
            default:
                throw fcax::Error(fcax::ErrorCode::Argument, "unknown klm mode");
        }
        require_arg(samples >= 0, "samples must be non-negative");
        config.samples = static_cast<std::uint64_t>(samples);
        config.seed = seed;
        config.lle = lle_syntactic ? fcax::LleMode::Syntactic : fcax::LleMode::Semantic;
        if (exhaustive_bound > 0) config.exhaustive_bound = static_cast<std::size_t>(exhaustive_bound);
        auto report = fcax::report_klm(extended(ctx, prefs), config, output_format(format),
                                       oracle != 0);
        *out = copy_string(report.rendered);
        if (out_ok) *out_ok = report.ok ? 1 : 0;
    });
}

}  // extern "C"
