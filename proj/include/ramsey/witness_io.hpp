#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Line-oriented witness file format (`ramsey-witness v1`):
///
///     ramsey-witness v1
///     vertices <N>
///     red <u> <v>        (u < v, 0-based; every unlisted pair is blue)
///
/// Lines starting with '#' are comments. Readers reject duplicate edges,
/// self-loops, out-of-range indices, and malformed lines. Writers emit LF
/// line endings and edges sorted lexicographically, so output is bit-exact
/// reproducible.
struct WitnessParseError : std::runtime_error {
    explicit WitnessParseError(const std::string& what) : std::runtime_error(what) {}
};

void write_witness(std::ostream& out, const TwoColoring& coloring,
                   const std::vector<std::string>& header_comments = {});

void write_witness_file(const std::string& path, const TwoColoring& coloring,
                        const std::vector<std::string>& header_comments = {});

TwoColoring read_witness(std::istream& in);
TwoColoring read_witness_file(const std::string& path);

}  // namespace ramsey
