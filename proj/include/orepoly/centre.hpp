#ifndef OREPOLY_CENTRE_HPP
#define OREPOLY_CENTRE_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "orepoly/skew.hpp"

namespace orepoly {

/*
 * Element of the centre k^sigma[X^r], written in the variable Y = X^r.
 * Coefficients are packed in the standalone fixed-field representation
 * (ctx.subfield()).
 */
struct CentrePoly {
    const SkewContext* ctx = nullptr;
    gp::Poly c;  // over ctx->subfield()

    bool is_zero() const { return c.empty(); }
    int deg() const;
    bool operator==(const CentrePoly& o) const { return c == o.c; }
};

CentrePoly centre_zero(const SkewContext& ctx);
CentrePoly centre_one(const SkewContext& ctx);
CentrePoly centre_from(const SkewContext& ctx, gp::Poly coeffs);

CentrePoly c_add(const CentrePoly& a, const CentrePoly& b);
CentrePoly c_sub(const CentrePoly& a, const CentrePoly& b);
CentrePoly c_mul(const CentrePoly& a, const CentrePoly& b);
CentrePoly c_pow(const CentrePoly& a, int e);
CentrePoly c_monic(const CentrePoly& a);
std::pair<CentrePoly, CentrePoly> c_divmod(const CentrePoly& a, const CentrePoly& b);
CentrePoly c_gcd(const CentrePoly& a, const CentrePoly& b);
bool c_irreducible(const CentrePoly& a);

// Substitution Y -> X^r with coefficients lifted into k.
SkewPoly centre_embed(const CentrePoly& c);
// Partial inverse; errors identify the first offending index.
CentrePoly centre_project(const SkewPoly& p);

// The reduced norm k[X,sigma] -> k^sigma[Y].  All three methods agree on
// their common domains; charpoly is the definitional oracle.
CentrePoly reduced_norm_small(const SkewPoly& p);     // deg p < r
CentrePoly reduced_norm_matrix(const SkewPoly& p);    // p != 0
CentrePoly reduced_norm_charpoly(const SkewPoly& p);  // p monic, deg >= 1
// Splits p = a * p~ and returns (N_{k/k^sigma}(a) in the subfield rep,
// the monic norm of p~); dispatches on deg vs r.
std::pair<uint64_t, CentrePoly> reduced_norm(const SkewPoly& p);

struct CentreFactorization {
    uint64_t unit;  // subfield-packed leading coefficient
    std::vector<std::pair<CentrePoly, int>> factors;  // sorted (degree, packed lex)
};
CentreFactorization commutative_factorize(const CentrePoly& c);
CentreFactorization commutative_factorize(const CentrePoly& c, std::mt19937_64& rng);

}  // namespace orepoly

#endif
