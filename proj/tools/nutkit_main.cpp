#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nutkit/census.hpp"
#include "nutkit/classify.hpp"
#include "nutkit/cyclo.hpp"
#include "nutkit/errors.hpp"
#include "nutkit/kernel.hpp"
#include "nutkit/matrix.hpp"
#include "nutkit/voltage.hpp"

namespace {

using namespace nutkit;

FamilyParams parse_params(const std::string& family_text, std::int64_t n, std::int64_t a,
                          std::optional<std::int64_t> b) {
    auto family = family_from_string(family_text);
    if (!family)
        throw InvalidParams("unknown family '" + family_text +
                            "' (expected one of circulant, b1, b2, b3, t1, t2, t3, t4)");
    return FamilyParams::make(*family, n, a, b);
}

std::string verdict_text(bool v) { return v ? "true" : "false"; }

void print_divisor_set(std::ostream& out, const std::set<std::int64_t>& s) {
    out << "{";
    bool first = true;
    for (std::int64_t f : s) {
        if (!first) out << ", ";
        out << f;
        first = false;
    }
    out << "}";
}

int run_check(const FamilyParams& params) {
    const Graph g = build_family(params);
    const KernelBasis basis = kernel_basis(adjacency_matrix(g));
    const std::int64_t eta = basis.dimension();

    const NutVerdict predicate = classify(params);
    const NutVerdict kernel_verdict = classify_kernel(g);

    std::cout << params.describe() << ": " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges\n";
    std::cout << "  connected: " << verdict_text(is_connected(g))
              << ", bipartite: " << verdict_text(is_bipartite(g))
              << ", cubic: " << verdict_text(is_cubic(g)) << "\n";
    std::cout << "  predicate verdict : " << predicate.describe() << "\n";
    if (params.family == Family::T1 || params.family == Family::T4) {
        const NutVerdict cyc = classify_cyclotomic(params);
        std::cout << "  cyclotomic verdict: " << cyc.describe() << "\n";
    } else {
        std::cout << "  cyclotomic verdict: n/a for this family\n";
    }
    std::cout << "  kernel verdict    : " << kernel_verdict.describe();
    if (kernel_verdict.reason != ReasonCode::NullityNotOne) std::cout << " (nullity " << eta << ")";
    std::cout << "\n";
    if (eta == 1) {
        std::cout << "  kernel vector     :";
        for (const Int& x : basis.vectors.front()) std::cout << " " << x.get_str();
        std::cout << "\n";
    }
    if (params.family == Family::T1) {
        const SparseIntPoly w = t1_witness_poly(params.n, params.a, *params.b);
        std::cout << "  witness polynomial: " << w.to_string() << "\n";
        std::cout << "  dividing cyclotomics (f | n): ";
        print_divisor_set(std::cout, cyclotomic_root_filter(w, params.n));
        std::cout << "\n";
    } else if (params.family == Family::T4) {
        const SparseIntPoly w = t4_witness_poly(params.n, params.a, *params.b);
        const SparseIntPoly q = q_poly(params.a, *params.b);
        const SparseIntPoly r = r_poly(params.a, *params.b);
        std::cout << "  witness polynomial: " << w.to_string() << "\n";
        std::cout << "  Q polynomial: " << q.to_string() << "\n";
        std::cout << "  R polynomial: " << r.to_string() << "\n";
        std::set<std::int64_t> q_hits, r_hits;
        for (std::int64_t f : divisors(params.n / 2))
            if (f >= 2 && divides_cyclotomic(f, q)) q_hits.insert(f);
        for (std::int64_t f : divisors(params.n))
            if ((params.n / f) % 2 != 0 && divides_cyclotomic(f, r)) r_hits.insert(f);
        std::cout << "  offending f for Q (f | n/2, f >= 2): ";
        print_divisor_set(std::cout, q_hits);
        std::cout << "\n  offending f for R (f | n, n/f odd) : ";
        print_divisor_set(std::cout, r_hits);
        std::cout << "\n";
    } else if (params.family == Family::Circulant) {
        std::vector<Int> row(static_cast<std::size_t>(params.n), 0);
        row[static_cast<std::size_t>(params.a)] = 1;
        row[static_cast<std::size_t>(params.n - params.a)] = 1;
        row[static_cast<std::size_t>(params.n / 2)] = 1;
        std::cout << "  representer nullity: " << circulant_nullity(row) << "\n";
    }
    return 0;
}

int run_kernel(const FamilyParams& params) {
    const Graph g = build_family(params);
    const KernelBasis basis = kernel_basis(adjacency_matrix(g));
    if (basis.dimension() == 0) {
        std::cerr << params.describe() << " has a trivial kernel\n";
        return 0;
    }
    for (const auto& vec : basis.vectors) {
        for (const Int& x : vec) std::cout << x.get_str() << "\n";
        if (basis.dimension() > 1) std::cout << "\n";
    }
    return 0;
}

int run_graph(const FamilyParams& params, const std::string& out_path) {
    const Graph g = build_family(params);
    const std::string text = to_adjacency_text(g);
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << text;
    return 0;
}

int run_census_command(const std::string& families_text, std::int64_t n_max, unsigned workers,
                       const std::string& format, const std::string& out_path) {
    std::vector<Family> families;
    if (families_text == "all") {
        families = {Family::Circulant, Family::B1, Family::B2, Family::B3,
                    Family::T1,        Family::T2, Family::T3, Family::T4};
    } else {
        std::stringstream ss(families_text);
        std::string token;
        while (std::getline(ss, token, ',')) {
            auto f = family_from_string(token);
            if (!f) throw InvalidParams("unknown family '" + token + "' in --families");
            families.push_back(*f);
        }
    }
    if (families.empty()) throw InvalidParams("--families selected nothing");

    const CensusResult result = run_census(families, n_max, workers);

    const std::string payload = format == "json" ? census_json(result) : census_csv(result);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
        out << payload;
    }

    for (const CensusSummaryLine& line : result.summary)
        std::cerr << family_name(line.family) << " n=" << line.n << " tuples=" << line.tuples
                  << " nuts=" << line.nuts << "\n";
    if (!result.all_agree()) {
        for (std::size_t idx : result.disagreements) {
            const CensusRecord& rec = result.records[idx];
            std::cerr << "DISAGREEMENT at " << family_name(rec.family) << "(" << rec.n << ", "
                      << rec.a;
            if (rec.b) std::cerr << ", " << *rec.b;
            std::cerr << ")\n";
        }
        return 2;
    }
    std::cerr << "all verdict methods agree on " << result.records.size() << " tuples\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact nut-graph analysis of cubic circulant, bicirculant and tricirculant families"};
    app.require_subcommand(1);

    std::string family_text;
    std::int64_t n = 0, a = 0;
    std::optional<std::int64_t> b;

    auto add_param_args = [&](CLI::App* cmd) {
        cmd->add_option("family", family_text, "circulant, b1, b2, b3, t1, t2, t3 or t4")->required();
        cmd->add_option("n", n, "orbit length n")->required();
        cmd->add_option("a", a, "first parameter")->required();
        cmd->add_option("b", b, "second parameter (two-parameter families)");
    };

    CLI::App* check = app.add_subcommand("check", "inspect one family member with all methods");
    add_param_args(check);

    CLI::App* kernel = app.add_subcommand("kernel", "print an integer kernel basis, one entry per line");
    add_param_args(kernel);

    CLI::App* graph_cmd = app.add_subcommand("graph", "emit the adjacency list of one family member");
    add_param_args(graph_cmd);
    std::string graph_out;
    graph_cmd->add_option("--emit-graph", graph_out, "output path (stdout when omitted)");

    CLI::App* census = app.add_subcommand("census", "cross-verify all methods over parameter ranges");
    std::string families_text = "all";
    std::int64_t n_max = 60;
    unsigned workers = nutkit::default_workers();
    std::string format = "csv";
    std::string census_out;
    census->add_option("--families", families_text, "comma-separated family list or 'all'");
    census->add_option("--n-max", n_max, "largest (even) n to enumerate")->check(CLI::PositiveNumber);
    census->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    census->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    census->add_option("--out", census_out, "output path (stdout when omitted)");

    CLI::App* appendix = app.add_subcommand("appendix", "regenerate a cyclotomic divisibility table");
    std::string which = "a";
    std::string appendix_out;
    appendix->add_option("--which", which, "a (Q table) or b (R table)")
        ->required()
        ->check(CLI::IsMember({"a", "b"}));
    appendix->add_option("--out", appendix_out, "output path (stdout when omitted)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (check->parsed()) return run_check(parse_params(family_text, n, a, b));
        if (kernel->parsed()) return run_kernel(parse_params(family_text, n, a, b));
        if (graph_cmd->parsed()) return run_graph(parse_params(family_text, n, a, b), graph_out);
        if (census->parsed())
            return run_census_command(families_text, n_max, workers, format, census_out);
        if (appendix->parsed()) {
            nutkit::emit_appendix(which == "a" ? nutkit::AppendixTable::A : nutkit::AppendixTable::B,
                                  appendix_out);
            return 0;
        }
    } catch (const nutkit::InvalidParams& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        std::cerr << "usage hint: check <family> <n> <a> [b]; families circulant|b1|b2|b3 take the "
                     "ranges listed in --help\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
