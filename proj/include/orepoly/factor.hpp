#ifndef OREPOLY_FACTOR_HPP
#define OREPOLY_FACTOR_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "orepoly/centre.hpp"

namespace orepoly {

// Retry budgets for the randomized searches; the defaults cover the paper's
// success-probability lower bounds with failure odds well under 1e-4.
struct FactorConfig {
    int first_factor_budget_per_e = 64;
    int factor_step_budget = 64;
    int divisor_budget = 128;
};
FactorConfig& factor_config();

// P = P_et * X^v with P_et etale (nonzero constant coefficient), v maximal.
std::pair<int, SkewPoly> strip_x(const SkewPoly& p);

// True iff the reduced norm is irreducible in k^sigma[Y].
bool is_irreducible(const SkewPoly& p);

struct TypeEntry {
    CentrePoly n;              // irreducible centre factor
    std::vector<int> e_seq;    // nonincreasing; e_i = #Jordan blocks of size >= i
    std::vector<int> dual_seq; // Young-transpose: sizes of the Jordan blocks
};
struct TypeProfile {
    std::vector<TypeEntry> entries;
};

// Jordan-type data of phi^r per irreducible centre factor; P monic etale.
TypeProfile type_profile(const SkewPoly& p);

// Similarity of phi-modules D_P and D_Q; P, Q monic of degree >= 1.
bool are_similar(const SkewPoly& p, const SkewPoly& q);

// Ordered decomposition into pure-type pieces: P equals the product of all
// pieces left to right, each piece of type (e) with norm n^e.
struct SplitGroup {
    CentrePoly n;
    std::vector<SkewPoly> pieces;  // product order
};
std::vector<SplitGroup> split_by_norm_factors(
    const SkewPoly& p, const std::vector<std::pair<CentrePoly, int>>& norm_factors);

// One monic irreducible right divisor of a pure type-(e) polynomial with
// norm n^e that right-divides embed(n).
SkewPoly first_factor(const SkewPoly& p, const CentrePoly& n, std::mt19937_64& rng);

// Full factorization of a pure type-(e) polynomial given one irreducible
// right factor; returned leftmost-first so the product reconstructs p.
std::vector<SkewPoly> factor_step(const SkewPoly& p, const CentrePoly& n, const SkewPoly& p1,
                                  std::mt19937_64& rng);

struct FactorizationResult {
    uint64_t unit;                  // leading coefficient in k
    std::vector<SkewPoly> factors;  // monic irreducible, leftmost-first
    int x_power;                    // stripped right factor X^v

    // unit * (product of factors) * X^x_power reconstructs the input
};

FactorizationResult skew_factorization(const SkewPoly& p, std::mt19937_64& rng);

}  // namespace orepoly

#endif
