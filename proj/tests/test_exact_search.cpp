#include <sstream>

#include "doctest.h"
#include "ramsey/exact_search.hpp"
#include "ramsey/witness_io.hpp"

using namespace ramsey;
using namespace ramsey::exact_search;

namespace {

FamilySpec fam(const char* s) { return FamilySpec::parse(s); }

}  // namespace

TEST_CASE("good colorings for C4 vs C4 stop at N = 6") {
    auto r5 = exists_good_coloring(fam("C4"), fam("C4"), 5);
    CHECK(r5.status == ColoringStatus::Found);
    auto r6 = exists_good_coloring(fam("C4"), fam("C4"), 6);
    CHECK(r6.status == ColoringStatus::None);

    auto out = ramsey_number(fam("C4"), fam("C4"), 8);
    CHECK(out.status == OutcomeStatus::RamseyValue);
    CHECK(out.value == 6);
    REQUIRE(out.witness.has_value());
    CHECK(out.witness->size() == 5);
    CHECK(verify_witness(*out.witness, fam("C4"), fam("C4")).pass);
}

TEST_CASE("matching vs fan matches 3n at small n") {
    CHECK(exists_good_coloring(fam("M2"), fam("F2"), 5).status == ColoringStatus::Found);
    CHECK(exists_good_coloring(fam("M2"), fam("F2"), 6).status == ColoringStatus::None);
    auto out = ramsey_number(fam("M2"), fam("F2"), 12);
    CHECK(out.status == OutcomeStatus::RamseyValue);
    CHECK(out.value == 6);
}

TEST_CASE("star vs small wheel") {
    auto out = ramsey_number(fam("S2"), fam("W4"), 12);
    CHECK(out.status == OutcomeStatus::RamseyValue);
    CHECK(out.value == 5);  // m = 2 <= n = 2: m + 2n - 1

    out = ramsey_number(fam("S1"), fam("W4"), 12);
    CHECK(out.value == 5);  // any red edge is a K_{1,1}; all-blue K_5 holds a W_4
}

TEST_CASE("even cycle pair values") {
    auto out = ramsey_number(fam("C6"), fam("C4"), 12);
    CHECK(out.status == OutcomeStatus::RamseyValue);
    CHECK(out.value == 7);
}

TEST_CASE("degenerate families") {
    // K_1 sits inside every coloring, so R(K_1, anything) = 1.
    auto out = ramsey_number(fam("K1"), fam("W6"), 5);
    CHECK(out.status == OutcomeStatus::RamseyValue);
    CHECK(out.value == 1);
    // R(K_2, K_2) = 2: one edge must be red or blue.
    out = ramsey_number(fam("K2"), fam("K2"), 5);
    CHECK(out.value == 2);
    // W_1 = K_2, M_1 = K_2: same behavior through the wheel and matching paths.
    CHECK(ramsey_number(fam("W1"), fam("M1"), 5).value == 2);
}

TEST_CASE("color-swap symmetry") {
    const char* pairs[][2] = {{"C4", "S3"}, {"M2", "F2"}, {"S2", "W4"}, {"C4", "C6"}};
    for (const auto& p : pairs) {
        auto a = ramsey_number(fam(p[0]), fam(p[1]), 9);
        auto b = ramsey_number(fam(p[1]), fam(p[0]), 9);
        CHECK(a.status == b.status);
        CHECK(a.value == b.value);
    }
}

TEST_CASE("monotonicity: a good coloring restricts downward") {
    for (int n = 2; n <= 5; ++n) {
        auto big = exists_good_coloring(fam("C4"), fam("C4"), n);
        REQUIRE(big.status == ColoringStatus::Found);
        // Restriction of the found coloring to the first n-1 vertices stays good.
        if (n >= 3) {
            std::vector<int> keep(n - 1);
            for (int i = 0; i < n - 1; ++i) keep[i] = i;
            Graph red = induced_subgraph(big.coloring->red(), keep).graph;
            CHECK(verify_witness(TwoColoring(red), fam("C4"), fam("C4")).pass);
        }
    }
}

TEST_CASE("transcript and witness round-trip") {
    auto out = ramsey_number(fam("C6"), fam("C4"), 7);
    REQUIRE(out.transcript.size() == 7);
    CHECK(out.transcript.front().rfind("N=1 status=found nodes=", 0) == 0);
    CHECK(out.transcript.back().rfind("N=7 status=none nodes=", 0) == 0);

    REQUIRE(out.witness.has_value());
    std::ostringstream buf;
    write_witness(buf, *out.witness);
    std::istringstream in(buf.str());
    TwoColoring back = read_witness(in);
    CHECK(back.red() == out.witness->red());
    CHECK(verify_witness(back, fam("C6"), fam("C4")).pass);
}

TEST_CASE("budget exhaustion is reported, never silently wrong") {
    Options opts;
    opts.node_budget = 20;
    auto r = exists_good_coloring(fam("C6"), fam("C6"), 8, opts);
    CHECK(r.status == ColoringStatus::Exhausted);
    auto out = ramsey_number(fam("C6"), fam("C6"), 8, opts);
    CHECK(out.status == OutcomeStatus::ExhaustedBudget);
}

TEST_CASE("parallel search matches sequential") {
    Options seq;
    Options par;
    par.threads = 4;
    auto a = exists_good_coloring(fam("C4"), fam("C4"), 5, seq);
    auto b = exists_good_coloring(fam("C4"), fam("C4"), 5, par);
    REQUIRE(a.status == b.status);
    CHECK(a.coloring->red() == b.coloring->red());

    auto na = exists_good_coloring(fam("C4"), fam("C4"), 6, seq);
    auto nb = exists_good_coloring(fam("C4"), fam("C4"), 6, par);
    CHECK(na.status == ColoringStatus::None);
    CHECK(nb.status == ColoringStatus::None);

    auto sa = ramsey_number(fam("M2"), fam("F2"), 7, seq);
    auto sb = ramsey_number(fam("M2"), fam("F2"), 7, par);
    CHECK(sa.value == sb.value);
    CHECK(sa.witness->red() == sb.witness->red());
}

TEST_CASE("environment variable overrides the default budget") {
    CHECK(default_node_budget() == 1'000'000'000ULL);
}
