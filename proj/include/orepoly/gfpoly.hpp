#ifndef OREPOLY_GFPOLY_HPP
#define OREPOLY_GFPOLY_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "orepoly/gf.hpp"

namespace orepoly::gp {

using bigint = boost::multiprecision::cpp_int;

// Dense univariate polynomial over a runtime Gf: little-endian packed
// coefficients, no stored trailing zeros, empty vector = zero polynomial.
using Poly = std::vector<uint64_t>;

inline bool is_zero(const Poly& a) { return a.empty(); }
inline int deg(const Poly& a) { return int(a.size()) - 1; }  // -1 for zero
void trim(const Gf& F, Poly& a);
Poly one();
Poly var();

Poly add(const Gf& F, const Poly& a, const Poly& b);
Poly sub(const Gf& F, const Poly& a, const Poly& b);
Poly scale(const Gf& F, uint64_t c, const Poly& a);
Poly mul(const Gf& F, const Poly& a, const Poly& b);
Poly monic(const Gf& F, const Poly& a);
bool eq(const Poly& a, const Poly& b);

// a = q*b + r with deg r < deg b
std::pair<Poly, Poly> divmod(const Gf& F, const Poly& a, const Poly& b);
Poly mod(const Gf& F, const Poly& a, const Poly& b);
Poly gcd(const Gf& F, Poly a, Poly b);  // monic
// g = u*a + v*b, g monic
struct ExtGcd {
    Poly g, u, v;
};
ExtGcd ext_gcd(const Gf& F, const Poly& a, const Poly& b);
Poly inv_mod(const Gf& F, const Poly& a, const Poly& f);

uint64_t eval(const Gf& F, const Poly& a, uint64_t x);
Poly derivative(const Gf& F, const Poly& a);
Poly powmod(const Gf& F, Poly base, bigint e, const Poly& f);
// g(h) mod f
Poly compose_mod(const Gf& F, const Poly& g, const Poly& h, const Poly& f);
Poly compose(const Gf& F, const Poly& g, const Poly& h);
// T^(q^j) mod f where q = F.order()
Poly frob_power(const Gf& F, uint64_t j, const Poly& f);

Poly random_poly(const Gf& F, int degree, std::mt19937_64& rng);        // exact degree
Poly random_monic(const Gf& F, int degree, std::mt19937_64& rng);
Poly random_below(const Gf& F, int degree_bound, std::mt19937_64& rng); // any degree < bound

bool is_irreducible(const Gf& F, const Poly& f);
Poly random_irreducible(const Gf& F, int degree, std::mt19937_64& rng);

// Monic irreducible factors with multiplicity, sorted by (degree, packed
// coefficient order).  The leading coefficient is returned separately.
struct Factorization {
    uint64_t unit;
    std::vector<std::pair<Poly, int>> factors;
};
Factorization factorize(const Gf& F, const Poly& f, std::mt19937_64& rng);

// All roots in F, ascending packed order.
std::vector<uint64_t> roots(const Gf& F, const Poly& f, std::mt19937_64& rng);

// Unique interpolating polynomial of degree < xs.size() (xs distinct).
Poly interpolate(const Gf& F, const std::vector<uint64_t>& xs, const std::vector<uint64_t>& ys);

}  // namespace orepoly::gp

#endif
