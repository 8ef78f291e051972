#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fcax/context.hpp"
#include "fcax/preference.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(FCAX_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline fcax::FormalContext load_context(const std::string& name) {
    return fcax::FormalContext::parse_auto(read_file(fixture_path(name)));
}

inline fcax::ExtendedContext load_extended(const std::string& context_name,
                                           const std::string& prefs_name) {
    fcax::FormalContext ctx = load_context(context_name);
    fcax::PreferenceOrder order =
        fcax::parse_preferences(ctx, read_file(fixture_path(prefs_name)));
    return fcax::ExtendedContext(std::move(ctx), std::move(order));
}

// Random context: sizes in [1, max], incidence density in [0.1, 0.9].
inline fcax::FormalContext random_context(std::mt19937_64& rng, std::size_t max_objects = 8,
                                          std::size_t max_attributes = 8) {
    std::uniform_int_distribution<std::size_t> object_dist(1, max_objects);
    std::uniform_int_distribution<std::size_t> attribute_dist(1, max_attributes);
    std::uniform_real_distribution<double> density_dist(0.1, 0.9);
    std::size_t g = object_dist(rng), m = attribute_dist(rng);
    double density = density_dist(rng);

    std::vector<std::string> objects, attributes;
    for (std::size_t i = 0; i < g; ++i) objects.push_back("g" + std::to_string(i));
    for (std::size_t i = 0; i < m; ++i) attributes.push_back("m" + std::to_string(i));

    std::bernoulli_distribution cell(density);
    std::vector<fcax::Bitset> rows;
    for (std::size_t i = 0; i < g; ++i) {
        fcax::Bitset row(m);
        for (std::size_t j = 0; j < m; ++j)
            if (cell(rng)) row.set(j);
        rows.push_back(std::move(row));
    }
    return fcax::FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

// Random strict order: a random permutation fixes a topological order, then
// forward edges are kept with probability edge_prob. Always acyclic.
inline fcax::PreferenceOrder random_order(std::mt19937_64& rng, std::size_t object_count,
                                          double edge_prob = 0.3) {
    std::vector<std::size_t> perm(object_count);
    for (std::size_t i = 0; i < object_count; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    std::bernoulli_distribution edge(edge_prob);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < object_count; ++i)
        for (std::size_t j = i + 1; j < object_count; ++j)
            if (edge(rng)) pairs.emplace_back(perm[i], perm[j]);
    return fcax::PreferenceOrder::from_pairs(object_count, pairs);
}

inline fcax::ExtendedContext random_extended(std::mt19937_64& rng, std::size_t max_objects = 8,
                                             std::size_t max_attributes = 8,
                                             double edge_prob = 0.3) {
    fcax::FormalContext ctx = random_context(rng, max_objects, max_attributes);
    fcax::PreferenceOrder order = random_order(rng, ctx.object_count(), edge_prob);
    return fcax::ExtendedContext(std::move(ctx), std::move(order));
}

inline fcax::AttributeSet random_attributes(std::mt19937_64& rng, std::size_t m) {
    std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << m) - 1);
    return fcax::AttributeSet(fcax::Bitset::from_mask(m, dist(rng)));
}

}  // namespace testsupport
