#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fcax/error.hpp"
#include "fcax/oracle.hpp"
#include "fcax/preference.hpp"
#include "support.hpp"

using namespace fcax;
using testsupport::load_context;
using testsupport::load_extended;

namespace {

AttributeSet attrs(const FormalContext& ctx, std::initializer_list<const char*> names) {
    std::vector<std::string> list;
    for (auto* n : names) list.emplace_back(n);
    return ctx.attributes_by_name(list);
}

ObjectSet objs(const FormalContext& ctx, std::initializer_list<const char*> names) {
    std::vector<std::string> list;
    for (auto* n : names) list.emplace_back(n);
    return ctx.objects_by_name(list);
}

}  // namespace

TEST_CASE("build_order keeps exactly the declared strict pairs") {
    FormalContext ctx = load_context("animals.cxt");
    std::vector<std::pair<std::string, std::string>> declared = {{"duck", "penguin"},
                                                                 {"robin", "penguin"}};
    PreferenceOrder order = build_order(ctx, declared);
    CHECK(order.pair_count() == 2);
    CHECK(order.precedes(*ctx.object_index("duck"), *ctx.object_index("penguin")));
    CHECK(order.precedes(*ctx.object_index("robin"), *ctx.object_index("penguin")));
    CHECK_FALSE(order.precedes(*ctx.object_index("penguin"), *ctx.object_index("duck")));
    CHECK_FALSE(order.precedes(*ctx.object_index("orca"), *ctx.object_index("duck")));
}

TEST_CASE("empty declaration gives the discrete order") {
    FormalContext ctx = load_context("animals.cxt");
    PreferenceOrder order = build_order(ctx, {});
    CHECK(order.empty());
    CHECK(order.pair_count() == 0);
}

TEST_CASE("cycles and unknown names are rejected") {
    FormalContext ctx = load_context("animals.cxt");
    std::vector<std::pair<std::string, std::string>> cycle = {{"duck", "robin"},
                                                              {"robin", "duck"}};
    CHECK_THROWS_AS(build_order(ctx, cycle), Error);
    std::vector<std::pair<std::string, std::string>> longer = {
        {"duck", "robin"}, {"robin", "penguin"}, {"penguin", "duck"}};
    CHECK_THROWS_AS(build_order(ctx, longer), Error);
    std::vector<std::pair<std::string, std::string>> unknown = {{"duck", "albatross"}};
    CHECK_THROWS_AS(build_order(ctx, unknown), Error);
}

TEST_CASE("transitive closure is stored eagerly") {
    FormalContext ctx = load_context("animals.cxt");
    std::vector<std::pair<std::string, std::string>> chain = {{"orca", "duck"},
                                                              {"duck", "robin"}};
    PreferenceOrder order = build_order(ctx, chain);
    CHECK(order.pair_count() == 3);
    CHECK(order.precedes(*ctx.object_index("orca"), *ctx.object_index("robin")));
    // Irreflexive and antisymmetric by construction.
    for (std::size_t g = 0; g < 4; ++g) {
        CHECK_FALSE(order.precedes(g, g));
        for (std::size_t h = 0; h < 4; ++h)
            if (order.precedes(g, h)) CHECK_FALSE(order.precedes(h, g));
    }
}

TEST_CASE("preference file format") {
    FormalContext ctx = load_context("animals.cxt");
    PreferenceOrder order = parse_preferences(ctx,
                                              "# comment line\n"
                                              "duck < penguin   # trailing comment\n"
                                              "\n"
                                              "robin < penguin\n"
                                              "duck < penguin\n");  // duplicate deduplicated
    CHECK(order.pair_count() == 2);

    CHECK_THROWS_WITH_AS(parse_preferences(ctx, "duck penguin\n"),
                         doctest::Contains("line 1"), Error);
    CHECK_THROWS_WITH_AS(parse_preferences(ctx, "\nalbatross < duck\n"),
                         doctest::Contains("line 2"), Error);
    CHECK_THROWS_AS(parse_preferences(ctx, "duck < robin\nrobin < duck\n"), Error);
}

TEST_CASE("minimised derivation on the animals fixture") {
    ExtendedContext ext = load_extended("animals.cxt", "animals.ord");
    const FormalContext& ctx = ext.context();

    CHECK(minimize(ext, attrs(ctx, {"bird"})) == objs(ctx, {"duck", "robin"}));
    // Objects outside B' never dominate: penguin stays minimal here.
    CHECK(minimize(ext, attrs(ctx, {"antarctic"})) == objs(ctx, {"orca", "penguin"}));
    // min of the empty set: globally minimal objects.
    CHECK(minimize(ext, AttributeSet(ctx.attribute_count())) ==
          objs(ctx, {"orca", "duck", "robin"}));
}

TEST_CASE("minimised derivation under the mythology order") {
    ExtendedContext ext = load_extended("mythology.csv", "mythology.ord");
    CHECK(minimize(ext, attrs(ext.context(), {"hero"})) == objs(ext.context(), {"Achilles"}));
}

TEST_CASE("empty order reduces minimisation to derivation") {
    FormalContext ctx = load_context("animals.cxt");
    ExtendedContext ext(ctx, PreferenceOrder::discrete(ctx.object_count()));
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        AttributeSet b = testsupport::random_attributes(rng, ctx.attribute_count());
        CHECK(minimize(ext, b) == ctx.derive(b));
        CHECK(minimised_return(ext, b) == ctx.closure(b));
    }
}

TEST_CASE("minimised return reproduces the non-monotonicity witness") {
    ExtendedContext ext = load_extended("animals.cxt", "animals_robin.ord");
    const FormalContext& ctx = ext.context();

    AttributeSet bird = attrs(ctx, {"bird"});
    AttributeSet bird_antarctic = attrs(ctx, {"bird", "antarctic"});
    CHECK(minimised_return(ext, bird) ==
          attrs(ctx, {"bird", "flies", "southern", "northern"}));
    CHECK(minimised_return(ext, bird_antarctic) == attrs(ctx, {"bird", "antarctic", "southern"}));
    CHECK(bird.subset_of(bird_antarctic));
    CHECK_FALSE(minimised_return(ext, bird).subset_of(minimised_return(ext, bird_antarctic)));
}

TEST_CASE("minimised return is the full set on M") {
    ExtendedContext ext = load_extended("animals.cxt", "animals.ord");
    AttributeSet full = AttributeSet::full(ext.context().attribute_count());
    CHECK(minimised_return(ext, full) == full);
}

TEST_CASE("randomized minimisation properties") {
    std::mt19937_64 rng(20240812);
    for (int round = 0; round < 200; ++round) {
        ExtendedContext ext = testsupport::random_extended(rng);
        const FormalContext& ctx = ext.context();
        const std::size_t m = ctx.attribute_count();
        AttributeSet a = testsupport::random_attributes(rng, m);
        AttributeSet b = testsupport::random_attributes(rng, m);

        ObjectSet min_a = minimize(ext, a);
        CHECK(min_a.subset_of(ctx.derive(a)));
        if (!ctx.derive(a).empty()) CHECK_FALSE(min_a.empty());
        if (ctx.derive(a) == ctx.derive(b)) CHECK(min_a == minimize(ext, b));

        AttributeSet ret = minimised_return(ext, a);
        CHECK(a.subset_of(ret));                       // extensive
        CHECK(minimised_return(ext, ret) == ret);      // idempotent
        CHECK(minimize(ext, ret) == min_a);

        // Lemma 2 shape: once min A lands inside B', joining B changes nothing.
        if (min_a.subset_of(ctx.derive(b))) CHECK(min_a == minimize(ext, a | b));

        CHECK(min_a == brute_min(ext, a));
        CHECK(ret == ctx.derive(brute_min(ext, a)));
    }
}

TEST_CASE("minimisation table agrees with the direct operations") {
    std::mt19937_64 rng(20240813);
    for (int round = 0; round < 40; ++round) {
        ExtendedContext ext = testsupport::random_extended(rng, 6, 6);
        const FormalContext& ctx = ext.context();
        const std::size_t m = ctx.attribute_count();
        MinimisationTable table(ext);
        REQUIRE(table.subset_count() == (std::uint64_t{1} << m));
        for (std::uint64_t mask = 0; mask < table.subset_count(); ++mask) {
            AttributeSet a(Bitset::from_mask(m, mask));
            CHECK(table.extent(mask) == ctx.derive(a).bits());
            CHECK(table.minimal(mask) == minimize(ext, a).bits());
            CHECK(table.minimised_return_mask(mask) == minimised_return(ext, a).bits().as_mask());
            CHECK(table.closure_mask(mask) == ctx.closure(a).bits().as_mask());
            for (std::uint64_t other = 0; other < table.subset_count(); ++other) {
                if (table.equivalent(mask, other) !=
                    attr_equivalent(ctx, a, AttributeSet(Bitset::from_mask(m, other)))) {
                    CHECK(false);
                }
            }
        }
    }
}

TEST_CASE("extended context rejects mismatched order sizes") {
    FormalContext ctx = load_context("animals.cxt");
    CHECK_THROWS_AS(ExtendedContext(ctx, PreferenceOrder::discrete(3)), Error);
}
