#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wzsum/certificate.hpp"
#include "wzsum/congruence.hpp"
#include "wzsum/report.hpp"

namespace wzsum {

/// Configuration shared by the verification suites. Grid bounds must be
/// positive and the prime list may contain odd primes only.
struct RunConfig {
    // identity grid
    int theorem = 0; // 1, 2, or 0 for both
    long lmax = 4;
    long smax = 3;
    long mextent = 10;
    bool replay = false;
    bool trace = false;

    // certificate checks
    std::optional<CertificateId> cert; // unset = both certificates
    bool symbolic = true;
    bool grid = true;
    bool ratios = true;
    bool boundary = true;
    bool edge_k0 = false;  // probe k = 0, outside the stated hypotheses; report-only
    bool describe = false; // include the rendered certificate descriptions
    long wz_lmax = 5;
    long wz_smax = 4;
    long wz_next = 10;
    long ratio_samples = 500;
    std::string mutate; // name of a canned mutation to apply (test hook)

    // congruence grid
    std::vector<long> primes = {3, 5, 7, 11, 13};
    int rmax = 2;
    std::optional<SumFamily> family;
    std::optional<WeightKind> weight;
    std::optional<SumRange> range;
    bool force_p3 = false;
    long max_terms = 20000;
    long bridge_nmax = 200;
    bool with_sums = false;

    void validate() const;
};

struct SuiteResult {
    RecordSet records;

    /// 0 when every ASSERTED record passed, 1 otherwise.
    int exit_code() const { return records.all_asserted_pass() ? 0 : 1; }
};

/// Both theorem identities over the (ell, s, M) grid, with optional proof replay.
SuiteResult run_identity_suite(const RunConfig& config);

/// Pointwise recurrence grid, symbolic certification, boundary values and
/// ratio-consistency sampling for the selected certificates.
SuiteResult run_wz_suite(const RunConfig& config);

/// Every stated congruence over the prime/exponent grid, plus the binomial
/// bridge identity.
SuiteResult run_congruence_suite(const RunConfig& config);

} // namespace wzsum
