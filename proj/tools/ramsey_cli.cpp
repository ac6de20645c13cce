#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/decompositions.hpp"
#include "ramsey/detectors.hpp"
#include "ramsey/exact_search.hpp"
#include "ramsey/formulas.hpp"
#include "ramsey/selftest.hpp"
#include "ramsey/witness_io.hpp"

namespace {

using namespace ramsey;

constexpr int kExitFailure = 1;  // certification / verification failure
constexpr int kExitUsage = 2;    // malformed input or out-of-regime parameters

std::string witness_summary(const detectors::DetectionResult& hit) {
    std::string s;
    for (std::size_t i = 0; i < hit.witness.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(hit.witness[i]);
    }
    return s;
}

int cmd_construct(const std::string& name, int m, int n, std::optional<int> k,
                  const std::string& out_path) {
    constructions::WitnessReport rep = [&]() {
        if (name == "star-wheel") return constructions::witness_star_wheel(m, n);
        if (name == "cycle-wheel") return constructions::witness_cycle_wheel_two_cliques(m, n);
        if (name == "cycle-fan") return constructions::witness_cycle_fan_three_cliques(m, n);
        if (name == "cycle-star") return constructions::witness_cycle_star_cliques(m, n);
        if (name == "matching-fan") return constructions::witness_matching_fan(n);
        if (name == "mindeg-wheel") {
            // Graph witness wrapped as a coloring: blue = the graph itself,
            // red = its complement. With delta = delta(G) it avoids a red
            // K_{1,n-delta} and a blue W_{2k}.
            int kk = k.value_or(m);
            Graph g = constructions::witness_mindegree_wheel(n, kk);
            int delta = degree_stats(g).min_degree;
            constructions::WitnessReport r{TwoColoring(g.complement()),
                                           FamilySpec(FamilyKind::Star, n - delta),
                                           FamilySpec(FamilyKind::Wheel, 2 * kk)};
            r.claimed_bound = n + 1;
            r.generator = "mindeg-wheel";
            r.params = {{"n", n}, {"k", kk}};
            return r;
        }
        throw std::invalid_argument("unknown witness generator '" + name + "'");
    }();

    if (!rep.certify()) {
        std::cerr << "certification FAILED for " << rep.generator << ":";
        if (rep.red_hit.found())
            std::cerr << " red " << rep.avoided_red.to_string() << " at " << witness_summary(rep.red_hit);
        if (rep.blue_hit.found())
            std::cerr << " blue " << rep.avoided_blue.to_string() << " at "
                      << witness_summary(rep.blue_hit);
        std::cerr << "\n";
        return kExitFailure;
    }

    auto comments = rep.header_comments();
    comments.push_back("certified: yes");
    if (out_path.empty()) {
        write_witness(std::cout, rep.coloring, comments);
    } else {
        write_witness_file(out_path, rep.coloring, comments);
        std::cout << rep.generator << ": " << rep.coloring.size() << " vertices, claimed bound "
                  << rep.claimed_bound << " -> " << out_path << " (certified)\n";
    }
    return 0;
}

int cmd_verify(const std::string& path, const std::string& red_spec,
               const std::string& blue_spec) {
    TwoColoring coloring = read_witness_file(path);
    FamilySpec red = FamilySpec::parse(red_spec);
    FamilySpec blue = FamilySpec::parse(blue_spec);
    auto report = exact_search::verify_witness(coloring, red, blue);
    std::cout << "vertices: " << coloring.size() << "\n";
    std::cout << "red " << red.to_string() << ": "
              << (report.red_hit.found()
                      ? "FOUND at " + witness_summary(report.red_hit)
                      : report.red_hit.status == detectors::Status::Exhausted ? "budget exhausted"
                                                                              : "absent")
              << "\n";
    std::cout << "blue " << blue.to_string() << ": "
              << (report.blue_hit.found()
                      ? "FOUND at " + witness_summary(report.blue_hit)
                      : report.blue_hit.status == detectors::Status::Exhausted ? "budget exhausted"
                                                                               : "absent")
              << "\n";
    if (report.pass) {
        std::cout << "PASS: good coloring, witnesses R(" << red.to_string() << ", "
                  << blue.to_string() << ") >= " << coloring.size() + 1 << "\n";
        return 0;
    }
    std::cout << "FAIL: not a good coloring\n";
    return kExitFailure;
}

nlohmann::json bound_to_json(const std::string& pair, std::optional<long long> m,
                             std::optional<long long> n, const BoundValue& b) {
    nlohmann::json j;
    j["pair"] = pair;
    if (m) j["m"] = *m;
    if (n) j["n"] = *n;
    j["lower"] = b.lower ? nlohmann::json(*b.lower) : nlohmann::json();
    j["upper"] = b.upper ? nlohmann::json(*b.upper) : nlohmann::json();
    j["exactness"] = to_string(b.exactness);
    j["regime"] = b.regime.case_label;
    j["q"] = b.regime.q ? nlohmann::json(*b.regime.q) : nlohmann::json();
    j["provenance"] = b.provenance;
    j["error_class"] = to_string(b.error_class);
    if (b.exactness == Exactness::Asymptotic || b.unquantified) {
        j["leading"] = b.leading_coeff.to_string();
        j["leading_basis"] = std::string(1, b.leading_basis);
    }
    if (b.conjectured) j["conjectured"] = *b.conjectured;
    if (b.unquantified) j["unquantified_constant"] = true;
    return j;
}

BoundValue evaluate_pair(const std::string& pair, long long m, long long n, long long k,
                         std::optional<long long> assume_large) {
    if (pair == "star-wheel") return formulas::star_wheel_value(m, n);
    if (pair == "cycle-cycle") return formulas::even_cycle_ramsey(m, n);
    if (pair == "cycle-wheel") return formulas::cycle_wheel_bounds(m, n);
    if (pair == "cycle-star") return formulas::cycle_star_value(m, n, assume_large);
    if (pair == "wheel-diag") return formulas::even_wheel_diag_bounds(n);
    if (pair == "odd-wheel-diag") return formulas::odd_wheel_diag_bounds(n);
    if (pair == "odd-star-wheel") return formulas::odd_star_wheel_value(m, n);
    if (pair == "odd-cycle-wheel") return formulas::odd_cycle_wheel_value(m, n);
    if (pair == "matching-fan") return formulas::matching_fan_value(n);
    if (pair == "mindeg-threshold") return formulas::mindegree_wheel_threshold(n, k);
    throw std::invalid_argument("unknown pair '" + pair + "'");
}

int cmd_value(const std::string& pair, long long m, long long n, long long k, bool json,
              std::optional<long long> assume_large) {
    BoundValue b = evaluate_pair(pair, m, n, k, assume_large);
    if (json) {
        std::cout << bound_to_json(pair, m, n, b).dump(2) << "\n";
    } else {
        std::cout << b.render() << "\n";
        if (!b.regime.case_label.empty()) std::cout << "  regime: " << b.regime.case_label;
        if (b.regime.q) std::cout << " (q=" << *b.regime.q << ")";
        if (!b.regime.case_label.empty()) std::cout << "\n";
        std::cout << "  provenance: " << b.provenance << "\n";
    }
    return 0;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    return out + "\"";
}

int cmd_table(int figure, long long n, long long steps, const std::string& pair, long long m_min,
              long long m_max) {
    if (figure != 0) {
        const long long limit = figure == 1 ? (5 * n + 3) / 4 : (5 * n + 1) / 2;
        std::cout << "m_over_n,leading_coeff_over_n\n";
        long long prev_m = 0;
        for (long long i = 0; i <= steps; ++i) {
            long long m = std::max<long long>(1, i * limit / std::max<long long>(1, steps));
            if (m == prev_m) continue;
            prev_m = m;
            Rational mu(m, n);
            std::cout << mu.to_string() << "," << formulas::figure_coefficient(figure, mu).to_string()
                      << "\n";
        }
        return 0;
    }
    std::cout << "m,n,regime,q,lower,upper,exactness,provenance\n";
    for (long long m = m_min; m <= m_max; ++m) {
        BoundValue b = evaluate_pair(pair, m, n, 0, std::nullopt);
        std::cout << m << "," << n << "," << b.regime.case_label << ","
                  << (b.regime.q ? std::to_string(*b.regime.q) : "") << ","
                  << (b.lower ? std::to_string(*b.lower) : "") << ","
                  << (b.upper ? std::to_string(*b.upper) : "") << "," << to_string(b.exactness)
                  << "," << csv_quote(b.provenance) << "\n";
    }
    return 0;
}

int cmd_search(const std::string& red_spec, const std::string& blue_spec, int nmax, int threads,
               const std::string& witness_out) {
    FamilySpec red = FamilySpec::parse(red_spec);
    FamilySpec blue = FamilySpec::parse(blue_spec);
    exact_search::Options opts;
    opts.node_budget = exact_search::default_node_budget();
    opts.threads = threads;
    auto out = exact_search::ramsey_number(red, blue, nmax, opts);
    for (const auto& line : out.transcript) std::cout << line << "\n";
    switch (out.status) {
        case exact_search::OutcomeStatus::RamseyValue:
            std::cout << "R(" << red.to_string() << ", " << blue.to_string() << ") = " << out.value
                      << "\n";
            break;
        case exact_search::OutcomeStatus::LowerBoundOnly:
            std::cout << "R(" << red.to_string() << ", " << blue.to_string() << ") >= "
                      << out.value + 1 << " (good coloring found at N = " << out.value << ")\n";
            break;
        case exact_search::OutcomeStatus::ExhaustedBudget:
            std::cout << "budget exhausted (RAMSEY_NODE_BUDGET = "
                      << exact_search::default_node_budget() << ")\n";
            break;
    }
    std::cout << "nodes=" << out.stats.nodes << " pruned=" << out.stats.pruned << "\n";
    if (!witness_out.empty() && out.witness) {
        std::vector<std::string> comments = {
            "generator: search",
            "params: red=" + red.to_string() + " blue=" + blue.to_string(),
            "claimed-bound: " + std::to_string(out.witness->size() + 1),
            "avoids-red: " + red.to_string(),
            "avoids-blue: " + blue.to_string(),
        };
        write_witness_file(witness_out, *out.witness, comments);
        std::cout << "witness -> " << witness_out << "\n";
    }
    return 0;
}

int cmd_selftest(int criterion) {
    if (criterion != 0) {
        auto res = selftest::run_criterion(criterion);
        std::cout << res.line() << "\n";
        return res.pass ? 0 : kExitFailure;
    }
    auto all = selftest::run_all(&std::cout);
    for (const auto& r : all)
        if (!r.pass) return kExitFailure;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ramsey - witness constructions, detectors, bound formulas, and an exact search\n"
        "oracle for star/cycle/fan/matching vs even-wheel Ramsey numbers.\n\n"
        "Family DSL: C<k> cycle, W<k> wheel (k+1 vertices: hub joined to a k-cycle;\n"
        "W1=K2, W2=K3 -- note some texts write W_k for the graph on k vertices),\n"
        "F<k> fan, S<m> star K_{1,m}, M<n> matching nK_2, K<n> clique."};
    app.require_subcommand(1);

    std::string witness_name, out_path, file_path, red_spec, blue_spec, pair;
    long long m = 0, n = 0, k = 0, steps = 100, m_min = 2, m_max = 0;
    int figure = 0, nmax = 12, threads = 1, criterion = 0;
    long long assume_large = 0;
    bool json = false;

    auto* construct = app.add_subcommand(
        "construct", "Generate and certify a lower-bound witness coloring");
    construct->add_option("--witness", witness_name,
                          "star-wheel|mindeg-wheel|cycle-wheel|cycle-fan|cycle-star|matching-fan")
        ->required();
    construct->add_option("--m", m, "m (for mindeg-wheel: k unless --k is given)");
    construct->add_option("--n", n, "n")->required();
    construct->add_option("--k", k, "k (mindeg-wheel only)");
    construct->add_option("-o,--output", out_path, "output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "Certify a witness file against two families");
    verify->add_option("--file", file_path, "witness file (ramsey-witness v1)")->required();
    verify->add_option("--red", red_spec, "family that must be absent in red")->required();
    verify->add_option("--blue", blue_spec, "family that must be absent in blue")->required();

    auto* value = app.add_subcommand("value", "Evaluate a Ramsey value/bound formula");
    value->add_option("--pair", pair,
                      "star-wheel|cycle-cycle|cycle-wheel|cycle-star|wheel-diag|odd-star-wheel|"
                      "odd-cycle-wheel|odd-wheel-diag|matching-fan|mindeg-threshold")
        ->required();
    value->add_option("--m", m, "m");
    value->add_option("--n", n, "n")->required();
    value->add_option("--k", k, "k (mindeg-threshold only)");
    value->add_flag("--json", json, "emit JSON");
    value->add_option("--assume-large-m", assume_large,
                      "treat m >= this cutoff as 'sufficiently large' for cycle-star exactness");

    auto* table = app.add_subcommand("table", "CSV sweeps of the piecewise bound formulas");
    table->add_option("--figure", figure, "1 = cycle-wheel curve, 2 = cycle-star curve");
    table->add_option("--n", n, "n")->required();
    table->add_option("--steps", steps, "sample count for --figure sweeps");
    table->add_option("--pair", pair, "pair table mode (instead of --figure)");
    table->add_option("--m-min", m_min, "first m for --pair tables");
    table->add_option("--m-max", m_max, "last m for --pair tables (default 3n)");

    auto* search = app.add_subcommand("search", "Exact Ramsey search on tiny instances");
    search->add_option("--red", red_spec, "red family")->required();
    search->add_option("--blue", blue_spec, "blue family")->required();
    search->add_option("--nmax", nmax, "largest N to try (<= 12 recommended)");
    search->add_option("--threads", threads, "worker threads (default 1; deterministic result)");
    search->add_option("--witness-out", out_path, "write the best good coloring found");

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest_cmd->add_option("--criterion", criterion, "run a single criterion (1-9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (construct->parsed())
            return cmd_construct(witness_name, static_cast<int>(m), static_cast<int>(n),
                                 k > 0 ? std::optional<int>(static_cast<int>(k)) : std::nullopt,
                                 out_path);
        if (verify->parsed()) return cmd_verify(file_path, red_spec, blue_spec);
        if (value->parsed())
            return cmd_value(pair, m, n, k, json,
                             assume_large > 0 ? std::optional<long long>(assume_large)
                                              : std::nullopt);
        if (table->parsed()) {
            if (figure == 0 && pair.empty())
                throw std::invalid_argument("table: need --figure or --pair");
            if (m_max == 0) m_max = 3 * n;
            return cmd_table(figure, n, steps, pair, m_min, m_max);
        }
        if (search->parsed()) return cmd_search(red_spec, blue_spec, nmax, threads, out_path);
        if (selftest_cmd->parsed()) return cmd_selftest(criterion);
    } catch (const formulas::ExcludedCase& e) {
        std::cerr << "excluded case: " << e.what() << "\n";
        return kExitUsage;
    } catch (const WitnessParseError& e) {
        std::cerr << "witness parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
