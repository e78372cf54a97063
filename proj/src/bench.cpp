#include "rootwind/bench.hpp"

#include <chrono>
#include <random>
#include <stdexcept>

#include "rootwind/rational.hpp"
#include "rootwind/subresultant.hpp"

namespace rootwind {

namespace {

UniPoly random_poly(std::mt19937_64& rng, int deg) {
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i)
        c[static_cast<std::size_t>(i)] = Rational(static_cast<long>(rng() % 19) - 9);
    while (sign_of(c.back()) == 0) c.back() = Rational(static_cast<long>(rng() % 19) - 9);
    return UniPoly(std::move(c));
}

std::size_t max_bits(const SubresSeq<Rational>& s) {
    std::size_t best = 0;
    for (const UniPoly& p : s.sresp)
        for (const Rational& c : p.coeffs()) best = std::max(best, bit_length(c));
    for (const Rational& c : s.sres) best = std::max(best, bit_length(c));
    return best;
}

} // namespace

std::vector<BenchRow> bench_chains(int max_deg, int trials, std::uint64_t seed) {
    if (max_deg < 2) throw std::invalid_argument("bench needs max_deg >= 2");
    if (trials < 1) throw std::invalid_argument("bench needs trials >= 1");
    using clock = std::chrono::steady_clock;
    std::mt19937_64 rng(seed);

    std::vector<BenchRow> rows;
    for (int d = 2; d <= max_deg; ++d) {
        BenchRow row;
        row.degree = d;
        row.trials = trials;
        row.outputs_equal = true;
        for (int t = 0; t < trials; ++t) {
            const UniPoly p = random_poly(rng, d);
            UniPoly q = random_poly(rng, d - 1);

            const auto t0 = clock::now();
            const SubresSeq<Rational> naive = subresultants_naive(p, q);
            const auto t1 = clock::now();
            const SubresSeq<Rational> structured = subresultants_structured(p, q);
            const auto t2 = clock::now();

            row.naive_seconds += std::chrono::duration<double>(t1 - t0).count();
            row.structured_seconds += std::chrono::duration<double>(t2 - t1).count();
            row.naive_max_bits = std::max(row.naive_max_bits, max_bits(naive));
            row.structured_max_bits = std::max(row.structured_max_bits, max_bits(structured));
            if (!(naive == structured)) row.outputs_equal = false;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace rootwind
