#include "ramsey/witness_io.hpp"

#include <fstream>
#include <sstream>

namespace ramsey {

namespace {
constexpr const char* kMagic = "ramsey-witness v1";
}

void write_witness(std::ostream& out, const TwoColoring& coloring,
                   const std::vector<std::string>& header_comments) {
    out << kMagic << "\n";
    out << "vertices " << coloring.size() << "\n";
    for (const auto& c : header_comments) out << "# " << c << "\n";
    for (auto [u, v] : coloring.red().edges()) out << "red " << u << " " << v << "\n";
}

void write_witness_file(const std::string& path, const TwoColoring& coloring,
                        const std::vector<std::string>& header_comments) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF on every platform
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_witness(out, coloring, header_comments);
    if (!out) throw std::runtime_error("write failed: " + path);
}

TwoColoring read_witness(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw WitnessParseError("empty witness file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kMagic) throw WitnessParseError("bad magic line: '" + line + "'");

    int n = -1;
    Graph red;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string keyword;
        ss >> keyword;
        auto fail = [&](const std::string& why) {
            throw WitnessParseError("line " + std::to_string(lineno) + ": " + why);
        };
        if (keyword == "vertices") {
            if (n >= 0) fail("duplicate vertices line");
            if (!(ss >> n) || n < 0) fail("bad vertex count");
            red = Graph(n);
        } else if (keyword == "red") {
            if (n < 0) fail("red edge before vertices line");
            int u, v;
            if (!(ss >> u >> v)) fail("bad edge line");
            if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex index out of range");
            if (u == v) fail("self-loop");
            if (u > v) fail("edge endpoints must satisfy u < v");
            if (red.has_edge(u, v)) fail("duplicate edge");
            red.add_edge(u, v);
        } else {
            fail("unknown keyword '" + keyword + "'");
        }
        std::string rest;
        if (ss >> rest) fail("trailing junk '" + rest + "'");
    }
    if (n < 0) throw WitnessParseError("missing vertices line");
    return TwoColoring(red);
}

TwoColoring read_witness_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return read_witness(in);
}

}  // namespace ramsey
