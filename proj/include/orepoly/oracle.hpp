#ifndef OREPOLY_ORACLE_HPP
#define OREPOLY_ORACLE_HPP

#include <vector>

#include "orepoly/skew.hpp"

namespace orepoly::oracle {

/*
 * Brute-force reference implementations for tests.  Everything here uses its
 * own naive long division and exhaustive search, stays independent of the
 * fast algorithms it cross-checks, and re-verifies each claim by
 * multiplication before returning it.  Enumeration is guarded to desk scale:
 * |k|^d <= 10^6.
 */

// All monic right divisors of p of exact degree d.
std::vector<SkewPoly> enumerate_right_divisors(const SkewPoly& p, int d);

// All factorizations of monic(p) into monic irreducibles, leftmost-first.
std::vector<std::vector<SkewPoly>> enumerate_factorizations(const SkewPoly& p);

// Irreducibility by exhaustive divisor search.
bool is_irreducible_naive(const SkewPoly& p);

struct NaiveGcd {
    SkewPoly g, u, v;  // u*a + v*b = g, g monic
};
NaiveGcd naive_extended_rgcd(const SkewPoly& a, const SkewPoly& b);

std::pair<SkewPoly, SkewPoly> naive_divmod_right(const SkewPoly& a, const SkewPoly& b);

}  // namespace orepoly::oracle

#endif
