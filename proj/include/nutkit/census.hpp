#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nutkit/classify.hpp"
#include "nutkit/voltage.hpp"

namespace nutkit {

/// One parameter tuple with all verdicts.
struct CensusRecord {
    Family family;
    std::int64_t n = 0;
    std::int64_t a = 0;
    std::optional<std::int64_t> b;
    bool predicate_verdict = false;
    std::optional<bool> cyclotomic_verdict;  // only the t1/t4 families have one
    bool kernel_verdict = false;
    std::int64_t nullity = 0;
    bool agree = false;
};

struct CensusSummaryLine {
    Family family;
    std::int64_t n = 0;
    std::int64_t tuples = 0;
    std::int64_t nuts = 0;
};

struct CensusResult {
    std::vector<CensusRecord> records;
    std::vector<CensusSummaryLine> summary;
    std::vector<std::size_t> disagreements;  // indices into records

    bool all_agree() const { return disagreements.empty(); }
};

/// Every valid parameter tuple of the family for even n <= n_max, in
/// (n, a, b) order.
std::vector<FamilyParams> enumerate_family(Family family, std::int64_t n_max);

/// Runs all verdict methods over every valid tuple of the given families for
/// even n <= n_max. Tuples are independent work items; records come back in
/// enumeration order (family, n, a, b) no matter how many workers run.
CensusResult run_census(const std::vector<Family>& families, std::int64_t n_max, unsigned workers);

/// Computes the record of a single tuple (all verdict routes plus nullity).
CensusRecord census_record(const FamilyParams& params);

std::string census_csv(const CensusResult& result);
std::string census_json(const CensusResult& result);

enum class AppendixTable { A, B };  // A: Q divisibility, B: R divisibility

/// CSV of the 17 divisibility blocks
/// (f in {2,3,4,5,6,7,10,12,14,15,20,21,28,30,42,60,84}), byte-stable.
std::string appendix_csv(AppendixTable which);

/// Writes appendix_csv(which) to a file. Throws std::runtime_error on I/O
/// failure.
void emit_appendix(AppendixTable which, const std::string& path);

/// NUTKIT_WORKERS when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
unsigned default_workers();

/// Index-addressed parallel map: deterministic output regardless of worker
/// count. Rethrows the first worker exception.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

} // namespace nutkit
