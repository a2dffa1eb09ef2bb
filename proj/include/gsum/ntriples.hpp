#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "gsum/graph.hpp"

namespace gsum {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_number(line) {}
    std::size_t line_number;
};

/// Parses N-Triples statements (IRIs, literals with language tag or datatype,
/// blank nodes; one statement per line, # comments and blank lines allowed)
/// into a graph. Objects of the configured type predicate become vertex
/// labels of the subject; literal objects become vertices carrying the
/// configured literal label.
LabeledGraph parse_ntriples(std::istream& input, const IngestionConfig& config = {});
LabeledGraph parse_ntriples_string(const std::string& text, const IngestionConfig& config = {});

/// Reads a file, transparently gunzipping when the path ends in ".gz".
LabeledGraph parse_ntriples_file(const std::string& path, const IngestionConfig& config = {});

/// Serializes the graph back to N-Triples in the same dialect: one triple per
/// edge label, one type statement per vertex label. The configured literal
/// label on literal vertices is implied by the syntax and not emitted.
/// Deterministic: vertices in id order, labels and predicates sorted.
std::string write_ntriples(const LabeledGraph& g, const IngestionConfig& config = {});

/// Writes to a file, gzip-compressed when the path ends in ".gz".
void write_ntriples_file(const LabeledGraph& g, const std::string& path,
                         const IngestionConfig& config = {});

}  // namespace gsum
