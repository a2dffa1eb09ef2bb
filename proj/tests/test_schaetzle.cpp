#include <doctest.h>

#include <set>

#include "gsum/oracle.hpp"
#include "gsum/schaetzle.hpp"
#include "util.hpp"

using namespace gsum;
using namespace testutil;

TEST_CASE("signature at the initial partition pairs labels with the shared id") {
    LabeledGraph g = load_university();
    std::vector<Hash128> ids(g.vertex_count(), Hash128{});
    VertexId jra = g.find_term("jra").value();

    Signature sig = signature_of(jra, g, ids);
    REQUIRE(sig.size() == 2);
    std::set<std::string> symbols;
    for (const SignatureEntry& e : sig) {
        CHECK(e.block == Hash128{});
        for (LabelId l : g.dict().edge.set_members(e.symbol))
            symbols.insert(g.dict().edge.label_name(l));
    }
    CHECK(symbols == std::set<std::string>{"name", "worksAt"});

    VertexId sink = g.find_term("\"Jannik Rau\"").value();
    CHECK(signature_of(sink, g, ids).empty());
}

TEST_CASE("signatures equal a recomputation from the raw edge list") {
    LabeledGraph g = random_graph(401, 60, 250);
    TestRng rng(8);
    std::vector<Hash128> ids(g.vertex_count());
    for (auto& id : ids) id = Hash128{rng.next(), rng.next()};

    for (VertexId v = 0; v < g.vertex_count(); v++) {
        std::set<std::pair<std::uint32_t, Hash128>> expected;
        for (const Edge& e : g.edges())
            if (e.source == v) expected.insert({e.labels, ids[e.target]});
        Signature sig = signature_of(v, g, ids);
        std::set<std::pair<std::uint32_t, Hash128>> actual;
        for (const SignatureEntry& e : sig) actual.insert({e.symbol, e.block});
        CHECK(actual == expected);
        CHECK(std::is_sorted(sig.begin(), sig.end()));
    }
}

TEST_CASE("the university run stops early after two iterations with three blocks") {
    LabeledGraph g = load_university();
    RunOptions opts;
    opts.capture_partitions = true;
    PartitionTrace trace = bisim_schaetzle(g, 10, opts);
    CHECK(trace.terminated_early);
    CHECK(trace.iterations_executed == 2);
    CHECK(trace.block_counts == std::vector<std::size_t>{3, 3});
    CHECK(trace.final_partition.block_count() == 3);
    CHECK(canonical_export(trace.final_partition, g) == read_golden("edge_forward_k2.txt"));
}

TEST_CASE("an edgeless graph terminates in one iteration with one block") {
    GraphBuilder builder;
    for (int i = 0; i < 5; i++) builder.add_vertex("v" + std::to_string(i), TermKind::Iri);
    LabeledGraph g = builder.finish();
    PartitionTrace trace = bisim_schaetzle(g, 7, {});
    CHECK(trace.terminated_early);
    CHECK(trace.iterations_executed == 1);
    CHECK(trace.final_partition.block_count() == 1);
}

TEST_CASE("k = 0 returns the single-block partition") {
    LabeledGraph g = load_university();
    PartitionTrace trace = bisim_schaetzle(g, 0, {});
    CHECK(trace.iterations_executed == 0);
    CHECK(trace.final_partition.block_count() == 1);
}

TEST_CASE("random graphs agree with the oracle at every level") {
    for (std::uint64_t seed : {501, 502, 503, 504, 505, 506}) {
        LabeledGraph g = random_graph(seed);
        RunOptions opts;
        opts.exact_mode = true;
        for (unsigned k = 0; k <= 5; k++) {
            PartitionTrace trace = bisim_schaetzle(g, k, opts);
            CHECK(partitions_equal(trace.final_partition, oracle_edge_labeled_forward(g, k)));
        }
    }
}

TEST_CASE("iteration partitions refine monotonically") {
    LabeledGraph g = random_graph(601, 120, 600);
    RunOptions opts;
    opts.capture_partitions = true;
    PartitionTrace trace = bisim_schaetzle(g, 6, opts);
    REQUIRE(trace.initial_partition.has_value());
    const Partition* previous = &*trace.initial_partition;
    for (std::size_t i = 0; i < trace.iteration_partitions.size(); i++) {
        CHECK(is_refinement(trace.iteration_partitions[i], *previous));
        if (i > 0) CHECK(trace.block_counts[i] >= trace.block_counts[i - 1]);
        previous = &trace.iteration_partitions[i];
    }
}

TEST_CASE("forcing one extra iteration after early termination changes nothing") {
    for (std::uint64_t seed : {701, 702, 703}) {
        LabeledGraph g = random_graph(seed, 80, 300);
        PartitionTrace normal = bisim_schaetzle(g, 10, {});
        if (!normal.terminated_early) continue;
        RunOptions opts;
        opts.force_full_k = true;
        opts.capture_partitions = true;
        PartitionTrace forced = bisim_schaetzle(g, unsigned(normal.iterations_executed) + 1, opts);
        REQUIRE(forced.iteration_partitions.size() == normal.iterations_executed + 1);
        CHECK(partitions_equal(forced.iteration_partitions[normal.iterations_executed],
                               forced.iteration_partitions[normal.iterations_executed - 1]));
        CHECK(partitions_equal(forced.final_partition, normal.final_partition));
    }
}

TEST_CASE("multiple threads give the same partition") {
    LabeledGraph g = random_graph(801, 150, 700);
    RunOptions serial;
    RunOptions parallel;
    parallel.threads = 8;
    CHECK(partitions_equal(bisim_schaetzle(g, 4, serial).final_partition,
                           bisim_schaetzle(g, 4, parallel).final_partition));
}

TEST_CASE("exploded signatures split pairs the merged semantics keeps together") {
    // v and w both have {p,q} out-label sets, but v reaches distinguishable
    // targets under p/q swapped relative to w.
    auto build = [](bool explode) {
        IngestionConfig config;
        config.explode_label_sets = explode;
        GraphBuilder builder(config);
        builder.add_triple("v", TermKind::Iri, "p", "a", TermKind::Iri);
        builder.add_triple("v", TermKind::Iri, "q", "a", TermKind::Iri);
        builder.add_triple("w", TermKind::Iri, "p", "b", TermKind::Iri);
        builder.add_triple("w", TermKind::Iri, "q", "c", TermKind::Iri);
        return builder.finish();
    };
    // merged: v sees one {p,q} symbol, w sees {p} and {q} separately
    LabeledGraph merged = build(false);
    PartitionTrace m = bisim_schaetzle(merged, 1, {});
    VertexId v = merged.find_term("v").value();
    VertexId w = merged.find_term("w").value();
    CHECK(m.final_partition.block_of[v] != m.final_partition.block_of[w]);

    // exploded: both see the pairs (p, .), (q, .) at level 1
    LabeledGraph exploded = build(true);
    PartitionTrace e = bisim_schaetzle(exploded, 1, {});
    v = exploded.find_term("v").value();
    w = exploded.find_term("w").value();
    CHECK(e.final_partition.block_of[v] == e.final_partition.block_of[w]);
}
