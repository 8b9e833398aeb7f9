#ifndef OREPOLY_BENCH_HPP
#define OREPOLY_BENCH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "orepoly/skew.hpp"

namespace orepoly {

struct BenchRow {
    std::string algo;
    int degree;
    uint32_t r;
    uint64_t median_ns;
};

// Median wall time of one product of two random degree-`degree` polynomials
// per (algorithm, degree) cell; used to pick the dispatcher thresholds.
std::vector<BenchRow> run_mul_bench(const SkewContext& ctx, const std::vector<int>& degrees,
                                    const std::vector<std::string>& algos, int trials,
                                    uint64_t seed);

std::string bench_csv(const std::vector<BenchRow>& rows);

// Plain-text tuning config: lines of "key value"; '#' comments.  Keys:
//   classical_below <int>|r   -- use the classical product when
//                                min(deg A, deg B) is below the value
void load_tuning(std::istream& in);

}  // namespace orepoly

#endif
