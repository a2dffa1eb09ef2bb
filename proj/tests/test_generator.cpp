#include <doctest.h>

#include <set>

#include "gsum/generator.hpp"
#include "gsum/ntriples.hpp"
#include "gsum/stats.hpp"
#include "util.hpp"

using namespace gsum;
using namespace testutil;

TEST_CASE("zero edges give isolated vertices") {
    GeneratorParams params;
    params.vertex_count = 10;
    params.edge_count = 0;
    params.seed = 1;
    LabeledGraph g = generate_synthetic(params);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("the same seed produces byte-identical serializations") {
    GeneratorParams params;
    params.vertex_count = 200;
    params.edge_count = 900;
    params.vertex_label_alphabet = 6;
    params.max_labels_per_vertex = 2;
    params.degree_skew = 0.7;
    params.seed = 123;
    std::string a = write_ntriples(generate_synthetic(params));
    std::string b = write_ntriples(generate_synthetic(params));
    CHECK(a == b);
}

TEST_CASE("distinct seeds give distinct edge sets") {
    GeneratorParams params;
    params.vertex_count = 100;
    params.edge_count = 300;
    std::set<std::string> serializations;
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        params.seed = seed;
        serializations.insert(write_ntriples(generate_synthetic(params)));
    }
    CHECK(serializations.size() == 20);
}

TEST_CASE("the requested edge count is met exactly") {
    GeneratorParams params;
    params.vertex_count = 150;
    params.edge_count = 2000;
    params.seed = 5;
    LabeledGraph g = generate_synthetic(params);
    CHECK(g.edge_count() == 2000);
    g.check_invariants();
}

TEST_CASE("skew concentrates degree: max over mean is at least 5x across 20 seeds") {
    GeneratorParams params;
    params.vertex_count = 1000;
    params.edge_count = 5000;
    params.degree_skew = 1.0;
    for (std::uint64_t seed = 1; seed <= 20; seed++) {
        params.seed = seed;
        GraphStats s = compute_statistics(generate_synthetic(params));
        CHECK(double(s.max_degree) >= 5.0 * s.mean_degree);
    }
}

TEST_CASE("infeasible parameters are a configuration error") {
    GeneratorParams params;
    params.vertex_count = 3;
    params.edge_count = 10;  // n^2 = 9
    CHECK_THROWS_AS(generate_synthetic(params), ConfigError);

    params.vertex_count = 0;
    params.edge_count = 1;
    CHECK_THROWS_AS(generate_synthetic(params), ConfigError);

    params = GeneratorParams{};
    params.vertex_count = 4;
    params.edge_label_alphabet = 0;
    CHECK_THROWS_AS(generate_synthetic(params), ConfigError);
}
