#include "nutkit/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nutkit/cyclo.hpp"
#include "nutkit/errors.hpp"
#include "nutkit/kernel.hpp"
#include "nutkit/matrix.hpp"

namespace nutkit {

std::vector<FamilyParams> enumerate_family(Family family, std::int64_t n_max) {
    std::vector<FamilyParams> out;
    for (std::int64_t n = 2; n <= n_max; n += 2) {
        switch (family) {
            case Family::Circulant:
                for (std::int64_t a = 1; 2 * a < n; ++a) out.push_back(FamilyParams::make(family, n, a));
                break;
            case Family::B1:
                for (std::int64_t a = 1; a < n; ++a)
                    for (std::int64_t b = a + 1; b < n; ++b)
                        out.push_back(FamilyParams::make(family, n, a, b));
                break;
            case Family::B2:
                for (std::int64_t a = 1; a < n; ++a) out.push_back(FamilyParams::make(family, n, a));
                break;
            case Family::B3:
                for (std::int64_t a = 1; 2 * a < n; ++a)
                    for (std::int64_t b = a; 2 * b < n; ++b)
                        out.push_back(FamilyParams::make(family, n, a, b));
                break;
            case Family::T1:
                for (std::int64_t a = 0; a < n; ++a)
                    for (std::int64_t b = a + 1; b < n; ++b)
                        out.push_back(FamilyParams::make(family, n, a, b));
                break;
            case Family::T2:
                for (std::int64_t a = 1; a < n; ++a)
                    for (std::int64_t b = 1; 2 * b < n; ++b)
                        out.push_back(FamilyParams::make(family, n, a, b));
                break;
            case Family::T3:
                for (std::int64_t a = 0; a < n; ++a) out.push_back(FamilyParams::make(family, n, a));
                break;
            case Family::T4:
                for (std::int64_t a = 1; 2 * a < n; ++a)
                    for (std::int64_t b = a; 2 * b < n; ++b)
                        out.push_back(FamilyParams::make(family, n, a, b));
                break;
        }
    }
    return out;
}

CensusRecord census_record(const FamilyParams& params) {
    CensusRecord rec;
    rec.family = params.family;
    rec.n = params.n;
    rec.a = params.a;
    rec.b = params.b;

    rec.predicate_verdict = classify(params).is_nut;
    if (params.family == Family::T1)
        rec.cyclotomic_verdict = t1_poly_criterion(params.n, params.a, *params.b);
    else if (params.family == Family::T4)
        rec.cyclotomic_verdict = t4_cyclotomic_criterion(params.n, params.a, *params.b);

    const Graph g = build_family(params);
    const KernelBasis basis = kernel_basis(adjacency_matrix(g));
    rec.nullity = basis.dimension();
    rec.kernel_verdict = is_nut_kernel(basis);

    rec.agree = rec.predicate_verdict == rec.kernel_verdict &&
                (!rec.cyclotomic_verdict || *rec.cyclotomic_verdict == rec.kernel_verdict);
    return rec;
}

CensusResult run_census(const std::vector<Family>& families, std::int64_t n_max, unsigned workers) {
    if (n_max < 2) throw InvalidParams("run_census: n_max must be at least 2");

    // Canonical family order keeps the output independent of the input order.
    std::vector<Family> ordered;
    for (Family f : {Family::Circulant, Family::B1, Family::B2, Family::B3, Family::T1, Family::T2,
                     Family::T3, Family::T4})
        if (std::find(families.begin(), families.end(), f) != families.end()) ordered.push_back(f);

    std::vector<FamilyParams> tuples;
    for (Family f : ordered) {
        auto chunk = enumerate_family(f, n_max);
        tuples.insert(tuples.end(), chunk.begin(), chunk.end());
    }

    CensusResult result;
    result.records.resize(tuples.size());
    parallel_for(tuples.size(), workers,
                 [&](std::size_t i) { result.records[i] = census_record(tuples[i]); });

    for (std::size_t i = 0; i < result.records.size(); ++i) {
        const CensusRecord& rec = result.records[i];
        if (!rec.agree) result.disagreements.push_back(i);
        if (result.summary.empty() || result.summary.back().family != rec.family ||
            result.summary.back().n != rec.n)
            result.summary.push_back({rec.family, rec.n, 0, 0});
        ++result.summary.back().tuples;
        if (rec.kernel_verdict) ++result.summary.back().nuts;
    }
    return result;
}

namespace {

std::string bool_text(bool v) { return v ? "true" : "false"; }

} // namespace

std::string census_csv(const CensusResult& result) {
    std::ostringstream out;
    out << "family,n,a,b,predicate,cyclotomic,kernel,nullity,agree\n";
    for (const CensusRecord& rec : result.records) {
        out << family_name(rec.family) << "," << rec.n << "," << rec.a << ",";
        if (rec.b) out << *rec.b;
        out << "," << bool_text(rec.predicate_verdict) << ",";
        if (rec.cyclotomic_verdict) out << bool_text(*rec.cyclotomic_verdict);
        out << "," << bool_text(rec.kernel_verdict) << "," << rec.nullity << ","
            << bool_text(rec.agree) << "\n";
    }
    return out.str();
}

std::string census_json(const CensusResult& result) {
    nlohmann::ordered_json doc;
    doc["records"] = nlohmann::ordered_json::array();
    for (const CensusRecord& rec : result.records) {
        nlohmann::ordered_json item;
        item["family"] = family_name(rec.family);
        item["n"] = rec.n;
        item["a"] = rec.a;
        if (rec.b)
            item["b"] = *rec.b;
        else
            item["b"] = nullptr;
        item["predicate"] = rec.predicate_verdict;
        if (rec.cyclotomic_verdict)
            item["cyclotomic"] = *rec.cyclotomic_verdict;
        else
            item["cyclotomic"] = nullptr;
        item["kernel"] = rec.kernel_verdict;
        item["nullity"] = rec.nullity;
        item["agree"] = rec.agree;
        doc["records"].push_back(std::move(item));
    }
    doc["summary"] = nlohmann::ordered_json::array();
    for (const CensusSummaryLine& line : result.summary) {
        nlohmann::ordered_json item;
        item["family"] = family_name(line.family);
        item["n"] = line.n;
        item["tuples"] = line.tuples;
        item["nuts"] = line.nuts;
        doc["summary"].push_back(std::move(item));
    }
    doc["disagreements"] = result.disagreements;
    return doc.dump(2) + "\n";
}

std::string appendix_csv(AppendixTable which) {
    static const std::int64_t kBlocks[] = {2, 3, 4, 5, 6, 7, 10, 12, 14, 15, 20, 21, 28, 30, 42, 60, 84};
    const WitnessKind kind = which == AppendixTable::A ? WitnessKind::Q : WitnessKind::R;
    std::ostringstream out;
    out << "f,a_mod_f,b_mod_f\n";
    for (std::int64_t f : kBlocks)
        for (const auto& [a, b] : divisibility_table(f, kind)) out << f << "," << a << "," << b << "\n";
    return out.str();
}

void emit_appendix(AppendixTable which, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << appendix_csv(which);
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

unsigned default_workers() {
    if (const char* env = std::getenv("NUTKIT_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
    if (workers < 1) workers = 1;
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace nutkit
