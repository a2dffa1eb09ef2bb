#include <doctest.h>

#include <cstdio>
#include <set>

#include "gsum/generator.hpp"
#include "gsum/ntriples.hpp"
#include "util.hpp"

using namespace gsum;
using namespace testutil;

namespace {

std::set<std::string> vertex_label_names(const LabeledGraph& g, const std::string& term) {
    VertexId v = g.find_term(term).value();
    std::set<std::string> out;
    for (LabelId l : g.dict().vertex.set_members(g.vertex_label_set(v)))
        out.insert(g.dict().vertex.label_name(l));
    return out;
}

}  // namespace

TEST_CASE("the university statements parse into the labeled graph") {
    LabeledGraph g = load_university();
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 8);
    CHECK(vertex_label_names(g, "jra") == std::set<std::string>{"Student"});
    CHECK(vertex_label_names(g, "uulm") == std::set<std::string>{"Organization"});
    CHECK(vertex_label_names(g, "\"Jannik Rau\"") == std::set<std::string>{"Literal"});
    CHECK(g.term_kind(g.find_term("\"Jannik Rau\"").value()) == TermKind::Literal);
}

TEST_CASE("comments and blank lines yield the empty graph") {
    LabeledGraph g = parse_ntriples_string("# nothing here\n\n   \n# more\n");
    CHECK(g.vertex_count() == 0);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("malformed statements report their line number") {
    CHECK_THROWS_WITH_AS(parse_ntriples_string("<a> <p> <b> .\nnot a triple\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_ntriples_string("<a> <p> \"open .\n"),
                         doctest::Contains("unterminated literal"), ParseError);
    CHECK_THROWS_WITH_AS(parse_ntriples_string("<a> <p> <b>\n"),
                         doctest::Contains("'.'"), ParseError);
}

TEST_CASE("literal forms are canonicalized and kept distinct") {
    LabeledGraph g = parse_ntriples_string(
        "<a> <p> \"x\" .\n"
        "<b> <p> \"x\"@en .\n"
        "<c> <p> \"x\"^^<http://www.w3.org/2001/XMLSchema#string> .\n"
        "<d> <p> \"tab\\there\" .\n");
    CHECK(g.find_term("\"x\"").has_value());
    CHECK(g.find_term("\"x\"@en").has_value());
    CHECK(g.find_term("\"x\"^^<http://www.w3.org/2001/XMLSchema#string>").has_value());
    CHECK(g.find_term("\"tab\\there\"").has_value());
    CHECK(g.vertex_count() == 8);
}

TEST_CASE("blank nodes are terms of their own kind") {
    LabeledGraph g = parse_ntriples_string("_:b1 <p> _:b2 .\n_:b1 <p> <x> .\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.term_kind(g.find_term("_:b1").value()) == TermKind::Blank);
}

TEST_CASE("escape decoding and re-encoding round-trips") {
    std::string input = "<a> <p> \"quote \\\" backslash \\\\ newline \\n unicode \\u00e9\" .\n";
    LabeledGraph g = parse_ntriples_string(input);
    std::string serialized = write_ntriples(g);
    LabeledGraph reparsed = parse_ntriples_string(serialized);
    CHECK(structurally_equal(g, reparsed));
}

TEST_CASE("parse-serialize-parse is a fixpoint on generated graphs") {
    GeneratorParams params;
    params.vertex_count = 400;
    params.edge_count = 3000;  // about 10k lines with labels
    params.edge_label_alphabet = 6;
    params.vertex_label_alphabet = 8;
    params.max_labels_per_vertex = 2;
    params.seed = 99;
    LabeledGraph g = generate_synthetic(params);

    LabeledGraph reparsed = parse_ntriples_string(write_ntriples(g));
    CHECK(structurally_equal(g, reparsed));
    // iterating the round trip stays at the fixpoint
    LabeledGraph again = parse_ntriples_string(write_ntriples(reparsed));
    CHECK(structurally_equal(reparsed, again));
}

TEST_CASE("the university graph round-trips through serialization") {
    LabeledGraph g = load_university();
    LabeledGraph reparsed = parse_ntriples_string(write_ntriples(g));
    CHECK(structurally_equal(g, reparsed));
}

TEST_CASE("gzip files round-trip by extension") {
    LabeledGraph g = random_graph(5, 60, 250);
    std::string path = "/tmp/gsum_test_roundtrip.nt.gz";
    write_ntriples_file(g, path);
    LabeledGraph reparsed = parse_ntriples_file(path);
    CHECK(structurally_equal(g, reparsed));
    std::remove(path.c_str());
}
