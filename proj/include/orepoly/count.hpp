#ifndef OREPOLY_COUNT_HPP
#define OREPOLY_COUNT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "orepoly/centre.hpp"

namespace orepoly {

struct FactorizationResult;
struct TypeProfile;

using gp::bigint;

// Young-diagram transpose of a nonincreasing positive sequence; an involution.
std::vector<int> dual_type(const std::vector<int>& e_seq);

// Weighted count of admissible path sequences for a dual-type table over an
// irreducible factor of degree delta: the number of Jordan-Hoelder chains of
// the corresponding primary module.  Memoized on (q, delta, table).
bigint count_type_e_step(uint64_t q, int delta, const std::vector<int>& a_seq);

// Number of factorizations of a (monic) etale skew polynomial into monic
// irreducibles.  Non-etale input is rejected.
bigint count_factorizations(const SkewPoly& p);
bigint count_from_profile(const SkewContext& ctx, const TypeProfile& tp);

// Uniform monic irreducible right divisor of a pure type-(e) polynomial with
// norm n^e.
SkewPoly random_right_divisor(const SkewPoly& p, const CentrePoly& n, std::mt19937_64& rng);

// Exactly uniform sample from the set of factorizations of p.
FactorizationResult random_factorization(const SkewPoly& p, std::mt19937_64& rng);

}  // namespace orepoly

#endif
