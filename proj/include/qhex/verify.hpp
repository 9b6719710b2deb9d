#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qhex/identity.hpp"
#include "qhex/region.hpp"

namespace qhex::verify {

/// Outcome of one verification case. Skipped cases are legitimate only where
/// an identity's own hypothesis fails (zero central determinant); resource
/// caps count as failures.
struct CaseResult {
    bool ok = true;
    bool skipped = false;
    std::string message;

    static CaseResult pass() { return {}; }
    static CaseResult fail(std::string msg) { return {false, false, std::move(msg)}; }
    static CaseResult skip(std::string msg) { return {true, true, std::move(msg)}; }
};

struct SweepReport {
    std::string suite;
    std::uint64_t total = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped = 0;
    std::string first_failure;

    bool ok() const { return failed == 0; }
    void merge(const SweepReport& other);
};

struct SweepOptions {
    bool parallel = true;  // fan out cases with OpenMP when available
};

/// Runs n cases through fn and aggregates deterministically: results are
/// collected by case index, so the report is identical in serial and
/// parallel runs.
SweepReport run_cases(const std::string& suite, std::size_t n,
                      const std::function<CaseResult(std::size_t)>& fn, const SweepOptions& opt);

/// All strictly increasing sequences of the given length over [lo, hi].
std::vector<DentSequence> increasing_sequences(int length, std::int64_t lo, std::int64_t hi);

/// Fixed-seed random matrix specs: m in [1, max_m], k in [0, max_k], values
/// drawn without replacement from [lo, hi].
std::vector<PropMatrixSpec> random_prop_specs(std::size_t count, std::uint64_t seed, int max_m,
                                              int max_k, std::int64_t lo, std::int64_t hi);

// Individual sweeps. Defaults are the documented verification bounds.
SweepReport sweep_ring_laws(std::uint64_t seed, std::size_t iters, const SweepOptions& opt);
SweepReport sweep_qpoch(int max_m, int max_k, std::uint64_t seed, const SweepOptions& opt);
SweepReport sweep_gf_closed_vs_dp(std::int64_t base_range, std::int64_t max_delta,
                                  const SweepOptions& opt);
SweepReport sweep_gf_entry_closed(int max_m, int max_k, const SweepOptions& opt);
SweepReport sweep_det_engines(std::uint64_t seed, std::size_t iters, const SweepOptions& opt);
SweepReport sweep_reduce_identity(int max_m, int max_k, const SweepOptions& opt);
SweepReport sweep_prop1_random(std::size_t count, std::uint64_t seed, int max_m, int max_k,
                               const SweepOptions& opt);
SweepReport sweep_prop1_vanishing(int max_m, int max_k, const SweepOptions& opt);
SweepReport sweep_dodgson(std::uint64_t seed, std::size_t iters, const SweepOptions& opt);
SweepReport sweep_submatrix(int max_m, int max_k, const SweepOptions& opt);
SweepReport sweep_recursion(int max_m, int max_k, const SweepOptions& opt);
SweepReport sweep_krat(int max_m, std::uint64_t seed, const SweepOptions& opt);
SweepReport sweep_krat_specialize(std::size_t count, std::uint64_t seed, int max_m, int max_k,
                                  const SweepOptions& opt);
SweepReport sweep_endtoend(int max_m, int max_k, std::uint64_t cap, const SweepOptions& opt);
SweepReport sweep_vanishing_regions(int max_m, int max_k, std::uint64_t cap, const SweepOptions& opt);

/// Named suites reachable from the command line. The sweep cap is larger
/// than the default enumeration cap: the bottom-heavy window regions at
/// m = 4, k = 2 hold about two million families each and their depth-first
/// search passes through several times 10^7 states.
struct SuiteParams {
    int max_m = -1;  // -1 = suite default
    int max_k = -1;
    std::uint64_t seed = 0x51ab5eedULL;
    std::uint64_t cap = 200'000'000;
    SweepOptions options;
};

std::vector<std::string> suite_names();
SweepReport run_suite(const std::string& name, const SuiteParams& params);

}  // namespace qhex::verify
