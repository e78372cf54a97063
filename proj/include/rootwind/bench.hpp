#ifndef ROOTWIND_BENCH_HPP
#define ROOTWIND_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rootwind {

// One degree row of the subresultant benchmark: cumulative wall time over
// all trials at that degree for each construction route, the largest
// coefficient bit length seen in each sequence, and whether the two routes
// produced identical sequences on every trial.
struct BenchRow {
    int degree = 0;
    int trials = 0;
    double naive_seconds = 0.0;
    double structured_seconds = 0.0;
    std::size_t naive_max_bits = 0;
    std::size_t structured_max_bits = 0;
    bool outputs_equal = false;
};

// Determinant route vs structured recursion on random integer-coefficient
// pairs (deg P = d, deg Q = d-1) for d = 2..max_deg. Inputs and all
// non-timing outputs are deterministic under the seed.
std::vector<BenchRow> bench_chains(int max_deg, int trials, std::uint64_t seed);

} // namespace rootwind

#endif
