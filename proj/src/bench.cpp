#include "orepoly/bench.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <sstream>

namespace orepoly {

namespace {

using MulFn = SkewPoly (*)(const SkewPoly&, const SkewPoly&);

MulFn algo_by_name(const std::string& name) {
    if (name == "classical") return &mul_classical;
    if (name == "commutative") return &mul_commutative;
    if (name == "karatsuba") return &mul_karatsuba;
    if (name == "matrix") return &mul_matrix;
    if (name == "auto") return static_cast<MulFn>(&mul);
    throw math_error("unknown multiplication algorithm '" + name + "'");
}

}  // namespace

std::vector<BenchRow> run_mul_bench(const SkewContext& ctx, const std::vector<int>& degrees,
                                    const std::vector<std::string>& algos, int trials,
                                    uint64_t seed) {
    std::vector<BenchRow> rows;
    std::mt19937_64 rng(seed);
    for (const auto& name : algos) {
        MulFn fn = algo_by_name(name);
        for (int d : degrees) {
            std::vector<uint64_t> times;
            for (int t = 0; t < trials; ++t) {
                SkewPoly a = random_skew_monic(ctx, d, rng);
                SkewPoly b = random_skew_monic(ctx, d, rng);
                auto t0 = std::chrono::steady_clock::now();
                SkewPoly c = fn(a, b);
                auto t1 = std::chrono::steady_clock::now();
                if (c.deg() != 2 * d) throw math_error("benchmark product has wrong degree");
                times.push_back(
                    uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
            }
            std::sort(times.begin(), times.end());
            rows.push_back({name, d, ctx.r(), times[times.size() / 2]});
        }
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out = "algo,degree,r,median_ns\n";
    for (const auto& r : rows)
        out += r.algo + "," + std::to_string(r.degree) + "," + std::to_string(r.r) + "," +
               std::to_string(r.median_ns) + "\n";
    return out;
}

void load_tuning(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key, value;
        if (!(ls >> key)) continue;
        if (!(ls >> value)) throw math_error("tuning key '" + key + "' needs a value");
        if (key == "classical_below") {
            mul_tuning().classical_below = (value == "r") ? -1 : std::stoi(value);
        } else {
            throw math_error("unknown tuning key '" + key + "'");
        }
    }
}

}  // namespace orepoly
