// fcax command line: parses context/preference files and drives the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fcax/fcax.h"

namespace {

constexpr int kExitQueryFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOracle = 3;

struct ContextDeleter {
    void operator()(fcax_context* c) const { fcax_context_free(c); }
};
struct PrefsDeleter {
    void operator()(fcax_prefs* p) const { fcax_prefs_free(p); }
};
using ContextHandle = std::unique_ptr<fcax_context, ContextDeleter>;
using PrefsHandle = std::unique_ptr<fcax_prefs, PrefsDeleter>;

struct OwnedString {
    char* data = nullptr;
    ~OwnedString() { fcax_string_free(data); }
};

int exit_code_for(fcax_status status) {
    return status == FCAX_E_ORACLE ? kExitOracle : kExitUsage;
}

[[noreturn]] void fail(fcax_error* err, fcax_status status) {
    std::cerr << "fcax: " << (err ? fcax_error_message(err) : "unknown error") << "\n";
    fcax_error_free(err);
    std::exit(exit_code_for(status));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "fcax: cannot open '" << path << "'\n";
        std::exit(kExitUsage);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct CommonArgs {
    std::string context_path;
    std::string prefs_path;
    std::string context_format = "auto";
    std::string format = "text";
    bool oracle = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool prefs_required,
                const std::string& formats = "text,json") {
    cmd->add_option("context", args.context_path, "context file (CXT or CSV cross-table)")
        ->required();
    auto* prefs = cmd->add_option("--prefs", args.prefs_path,
                                  "preference file (NAME < NAME lines)");
    if (prefs_required) prefs->required();
    cmd->add_option("--context-format", args.context_format, "context format")
        ->check(CLI::IsMember({"auto", "cxt", "csv"}))
        ->capture_default_str();
    std::vector<std::string> choices;
    std::stringstream ss(formats);
    for (std::string f; std::getline(ss, f, ',');) choices.push_back(f);
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember(choices))
        ->capture_default_str();
    cmd->add_flag("--oracle", args.oracle, "cross-check against the brute-force oracle");
}

int text_format_of(const std::string& name) {
    if (name == "cxt") return FCAX_TEXT_CXT;
    if (name == "csv") return FCAX_TEXT_CSV;
    return FCAX_TEXT_AUTO;
}

int output_format_of(const std::string& name) {
    if (name == "json") return FCAX_FORMAT_JSON;
    if (name == "dot") return FCAX_FORMAT_DOT;
    return FCAX_FORMAT_TEXT;
}

ContextHandle load_context(const CommonArgs& args) {
    std::string text = read_file(args.context_path);
    fcax_context* ctx = nullptr;
    fcax_error* err = nullptr;
    fcax_status status =
        fcax_context_parse(text.c_str(), text_format_of(args.context_format), &ctx, &err);
    if (status != FCAX_OK) fail(err, status);
    return ContextHandle(ctx);
}

PrefsHandle load_prefs(const fcax_context* ctx, const CommonArgs& args) {
    if (args.prefs_path.empty()) return nullptr;
    std::string text = read_file(args.prefs_path);
    fcax_prefs* prefs = nullptr;
    fcax_error* err = nullptr;
    fcax_status status = fcax_prefs_parse(ctx, text.c_str(), &prefs, &err);
    if (status != FCAX_OK) fail(err, status);
    return PrefsHandle(prefs);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"formal concept analysis with object preferences"};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() { return std::string(fcax_version()); });

    CommonArgs lattice_args;
    auto* lattice = app.add_subcommand("lattice", "enumerate the concept lattice");
    add_common(lattice, lattice_args, false, "text,json,dot");

    CommonArgs derive_args;
    std::string derive_names;
    bool derive_objects = false;
    auto* derive = app.add_subcommand("derive", "derivation and closure of a name list");
    add_common(derive, derive_args, false);
    derive->add_option("names", derive_names, "comma-separated attribute (or object) names")
        ->required();
    derive->add_flag("--objects", derive_objects, "treat the names as objects");

    CommonArgs implication_args;
    std::string implication_query;
    bool implication_assert = false;
    auto* implication = app.add_subcommand("implication", "evaluate a classical A -> B query");
    add_common(implication, implication_args, false);
    implication->add_option("query", implication_query, "query, e.g. \"bird -> flies\"")
        ->required();
    implication->add_flag("--assert", implication_assert, "exit 1 when the query does not hold");

    CommonArgs conditional_args;
    std::string conditional_query;
    bool conditional_assert = false;
    auto* conditional = app.add_subcommand("conditional", "evaluate a defeasible A ~> B query");
    add_common(conditional, conditional_args, true);
    conditional->add_option("query", conditional_query, "query, e.g. \"bird ~> flies\"")
        ->required();
    conditional->add_flag("--assert", conditional_assert, "exit 1 when the query does not hold");

    CommonArgs typical_args;
    std::string typical_attrs;
    auto* typical = app.add_subcommand("typical", "typical concepts of an extended context");
    add_common(typical, typical_args, true);
    typical->add_option("attributes", typical_attrs,
                        "optional attribute list; reports its typical concept");

    CommonArgs semilattice_args;
    auto* semilattice =
        app.add_subcommand("semilattice", "typical set with meet-semilattice diagnostics");
    add_common(semilattice, semilattice_args, true);

    CommonArgs validate_args;
    bool validate_assert = false;
    auto* validate = app.add_subcommand("validate-order", "check min A = (min A)'' for all A");
    add_common(validate, validate_args, true);
    validate->add_flag("--assert", validate_assert, "exit 1 when the order is not valid");

    CommonArgs klm_args;
    std::string klm_mode = "auto";
    long long klm_samples = 1000;
    unsigned long long klm_seed = 0;
    int klm_bound = 6;
    bool klm_lle_syntactic = false;
    bool klm_assert = false;
    auto* klm = app.add_subcommand("klm-check", "verify the KLM postulates and both lemmas");
    klm->add_option("--mode", klm_mode, "exhaustive, sampled, or auto")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}))
        ->capture_default_str();
    klm->add_option("--samples", klm_samples, "tuples per postulate in sampled mode")
        ->capture_default_str();
    klm->add_option("--seed", klm_seed, "seed for sampled mode")->capture_default_str();
    klm->add_option("--bound", klm_bound, "attribute bound for exhaustive mode")
        ->capture_default_str();
    klm->add_flag("--lle-syntactic", klm_lle_syntactic,
                  "check LLE under set equality instead of equal derivations");
    klm->add_flag("--assert", klm_assert, "exit 1 when violations are found");
    add_common(klm, klm_args, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 exits 0 for --help/--version, which is what we want; every
        // real parse error maps to the usage exit code.
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    fcax_error* err = nullptr;
    fcax_status status = FCAX_OK;
    OwnedString rendered;

    if (lattice->parsed()) {
        auto ctx = load_context(lattice_args);
        auto prefs = load_prefs(ctx.get(), lattice_args);
        status = fcax_report_lattice(ctx.get(), prefs.get(), output_format_of(lattice_args.format),
                                     lattice_args.oracle, &rendered.data, &err);
        if (status != FCAX_OK) fail(err, status);
        std::cout << rendered.data;
        return 0;
    }

    if (derive->parsed()) {
        auto ctx = load_context(derive_args);
        auto prefs = load_prefs(ctx.get(), derive_args);
        status = fcax_report_derive(ctx.get(), prefs.get(), derive_names.c_str(),
                                    derive_objects ? 1 : 0, output_format_of(derive_args.format),
                                    derive_args.oracle, &rendered.data, &err);
        if (status != FCAX_OK) fail(err, status);
        std::cout << rendered.data;
        return 0;
    }

    if (implication->parsed() || conditional->parsed()) {
        const CommonArgs& args = implication->parsed() ? implication_args : conditional_args;
        const std::string& query =
            implication->parsed() ? implication_query : conditional_query;
        bool with_assert = implication->parsed() ? implication_assert : conditional_assert;

        auto ctx = load_context(args);
        auto prefs = load_prefs(ctx.get(), args);
        int holds = 0;
        status = fcax_report_query(ctx.get(), prefs.get(), query.c_str(),
                                   output_format_of(args.format), args.oracle, &rendered.data,
                                   &holds, &err);
        if (status != FCAX_OK) fail(err, status);
        std::cout << rendered.data;
        return with_assert && !holds ? kExitQueryFailed : 0;
    }

    if (typical->parsed()) {
        auto ctx = load_context(typical_args);
        auto prefs = load_prefs(ctx.get(), typical_args);
        status = fcax_report_typical(ctx.get(), prefs.get(),
                                     typical->count("attributes") ? typical_attrs.c_str() : nullptr,
                                     output_format_of(typical_args.format), typical_args.oracle,
                                     &rendered.data, &err);
        if (status != FCAX_OK) fail(err, status);
        std::cout << rendered.data;
        return 0;
    }

    if (semilattice->parsed()) {
        auto ctx = load_context(semilattice_args);
        auto prefs = load_prefs(ctx.get(), semilattice_args);
        status = fcax_report_semilattice(ctx.get(), prefs.get(),
                                         output_format_of(semilattice_args.format),
                                         semilattice_args.oracle, &rendered.data, &err);
        if (status != FCAX_OK) fail(err, status);
        std::cout << rendered.data;
        return 0;
    }

    if (validate->parsed()) {
        auto ctx = load_context(validate_args);
        auto prefs = load_prefs(ctx.get(), validate_args);
        int valid = 0;
        status = fcax_report_validate_order(ctx.get(), prefs.get(),
                                            output_format_of(validate_args.format),
                                            validate_args.oracle, &rendered.data, &valid, &err);
        if (status != FCAX_OK) fail(err, status);
        std::cout << rendered.data;
        return validate_assert && !valid ? kExitQueryFailed : 0;
    }

    if (klm->parsed()) {
        auto ctx = load_context(klm_args);
        auto prefs = load_prefs(ctx.get(), klm_args);
        int mode = klm_mode == "exhaustive" ? FCAX_KLM_EXHAUSTIVE
                   : klm_mode == "sampled"  ? FCAX_KLM_SAMPLED
                                            : FCAX_KLM_AUTO;
        int ok = 0;
        status = fcax_report_klm(ctx.get(), prefs.get(), mode, klm_samples, klm_seed,
                                 klm_lle_syntactic ? 1 : 0, klm_bound,
                                 output_format_of(klm_args.format), klm_args.oracle,
                                 &rendered.data, &ok, &err);
        if (status != FCAX_OK) fail(err, status);
        std::cout << rendered.data;
        return klm_assert && !ok ? kExitQueryFailed : 0;
    }

    return kExitUsage;
}
