#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fcax/bitset.hpp"

using fcax::Bitset;

TEST_CASE("basics across word boundaries") {
    for (std::size_t n : {1u, 7u, 64u, 65u, 130u}) {
        Bitset b(n);
        CHECK(b.none());
        CHECK(b.count() == 0);
        b.set(0);
        b.set(n - 1);
        CHECK(b.test(0));
        CHECK(b.test(n - 1));
        CHECK(b.count() == (n == 1 ? 1 : 2));
        b.reset(0);
        CHECK_FALSE(b.test(0));

        Bitset full = Bitset::full(n);
        CHECK(full.count() == n);
        CHECK(b.is_subset_of(full));
        CHECK((full & b) == b);
        CHECK((full - b).count() == n - b.count());
    }
}

TEST_CASE("lex order puts the set with the smaller member first") {
    Bitset a(70), b(70);
    a.set(3);
    b.set(5);
    CHECK(a.lex_compare(b) < 0);
    CHECK(b.lex_compare(a) > 0);
    CHECK(a.lex_compare(a) == 0);
    CHECK(a < b);

    Bitset c(70), d(70);
    c.set(0);
    d.set(0);
    d.set(69);
    CHECK(d.lex_compare(c) < 0);  // d also contains 69, the first difference
}

TEST_CASE("randomized set algebra against std::set") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> size_dist(1, 150);
    for (int round = 0; round < 100; ++round) {
        std::size_t n = size_dist(rng);
        std::uniform_int_distribution<std::size_t> elem(0, n - 1);
        std::set<std::size_t> xs, ys;
        Bitset bx(n), by(n);
        for (std::size_t k = 0; k < n / 2; ++k) {
            std::size_t i = elem(rng), j = elem(rng);
            xs.insert(i);
            bx.set(i);
            ys.insert(j);
            by.set(j);
        }

        CHECK(bx.count() == xs.size());
        CHECK(bx.members() == std::vector<std::size_t>(xs.begin(), xs.end()));

        std::set<std::size_t> expected_and, expected_or, expected_diff;
        for (auto i : xs)
            if (ys.count(i)) expected_and.insert(i);
        expected_or = xs;
        expected_or.insert(ys.begin(), ys.end());
        for (auto i : xs)
            if (!ys.count(i)) expected_diff.insert(i);

        CHECK((bx & by).members() ==
              std::vector<std::size_t>(expected_and.begin(), expected_and.end()));
        CHECK((bx | by).members() ==
              std::vector<std::size_t>(expected_or.begin(), expected_or.end()));
        CHECK((bx - by).members() ==
              std::vector<std::size_t>(expected_diff.begin(), expected_diff.end()));
        CHECK(bx.is_subset_of(by) == std::includes(ys.begin(), ys.end(), xs.begin(), xs.end()));
        CHECK(bx.intersects(by) == !expected_and.empty());
    }
}

TEST_CASE("mask round-trips") {
    Bitset b = Bitset::from_mask(10, 0b1001000101u);
    CHECK(b.as_mask() == 0b1001000101u);
    CHECK(b.count() == 4);
    CHECK(Bitset::from_mask(64, ~std::uint64_t{0}).count() == 64);
    CHECK(Bitset::from_mask(3, 0xffu).count() == 3);  // out-of-universe bits dropped
}
