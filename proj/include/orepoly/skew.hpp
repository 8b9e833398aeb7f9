#ifndef OREPOLY_SKEW_HPP
#define OREPOLY_SKEW_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "orepoly/context.hpp"

namespace orepoly {

/*
 * Element of k[X, sigma^e]: packed coefficients over k, index i holding the
 * coefficient of X^i, normalized with no stored trailing zeros.  The zero
 * polynomial has an empty coefficient vector and no degree; deg() throws on
 * it rather than returning a sentinel.
 *
 * The twist exponent e is 1 for the standard ring and r-1 for the opposite
 * ring k[X, sigma^{-1}] that reciprocals live in.  Mixing twists or contexts
 * in a binary operation is an error.
 */
class SkewPoly {
public:
    SkewPoly() = default;
    SkewPoly(const SkewContext& ctx, std::vector<uint64_t> coeffs, uint32_t twist = 1);

    const SkewContext& ctx() const { return *ctx_; }
    const SkewContext* ctx_ptr() const { return ctx_; }
    uint32_t twist() const { return twist_; }

    bool is_zero() const { return c_.empty(); }
    int deg() const;
    uint64_t coeff(int i) const {
        return (i >= 0 && size_t(i) < c_.size()) ? c_[size_t(i)] : 0;
    }
    uint64_t lead() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<uint64_t>& coeffs() const { return c_; }

    bool operator==(const SkewPoly& o) const { return c_ == o.c_ && twist_ == o.twist_; }

private:
    const SkewContext* ctx_ = nullptr;
    uint32_t twist_ = 1;
    std::vector<uint64_t> c_;
};

SkewPoly skew_zero(const SkewContext& ctx, uint32_t twist = 1);
SkewPoly skew_const(const SkewContext& ctx, uint64_t c, uint32_t twist = 1);
SkewPoly skew_one(const SkewContext& ctx, uint32_t twist = 1);
SkewPoly skew_x(const SkewContext& ctx, uint32_t twist = 1);
SkewPoly skew_monomial(const SkewContext& ctx, uint64_t c, int i, uint32_t twist = 1);
SkewPoly random_skew_below(const SkewContext& ctx, int degree_bound, std::mt19937_64& rng,
                           uint32_t twist = 1);
SkewPoly random_skew_monic(const SkewContext& ctx, int degree, std::mt19937_64& rng,
                           uint32_t twist = 1);

SkewPoly add(const SkewPoly& a, const SkewPoly& b);
SkewPoly sub(const SkewPoly& a, const SkewPoly& b);
SkewPoly neg(const SkewPoly& a);
SkewPoly scale_left(uint64_t c, const SkewPoly& a);   // c * A
SkewPoly scale_right(const SkewPoly& a, uint64_t c);  // A * c
SkewPoly monic(const SkewPoly& a);

// The four products; all agree with mul_classical.
SkewPoly mul_classical(const SkewPoly& a, const SkewPoly& b);
SkewPoly mul_commutative(const SkewPoly& a, const SkewPoly& b);
SkewPoly mul_karatsuba(const SkewPoly& a, const SkewPoly& b);
SkewPoly mul_matrix(const SkewPoly& a, const SkewPoly& b);
SkewPoly mul(const SkewPoly& a, const SkewPoly& b);

inline SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) { return add(a, b); }
inline SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return sub(a, b); }
inline SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) { return mul(a, b); }

// Dispatcher tuning, read at multiplication time.  classical_below < 0 means
// "use r" (the default crossover).
struct MulTuning {
    int classical_below = -1;
};
MulTuning& mul_tuning();

// B^{(j)}: sigma^j applied to every coefficient.
SkewPoly twist_coeffs(const SkewPoly& b, int64_t j);

// tau_n: coefficient reversal at degree n into the opposite-twist ring.
SkewPoly reciprocal(const SkewPoly& p, int n);

// The anti-isomorphism k[X,sigma^e] -> k[X,sigma^{-e}]; an involution that
// reverses products, used to transport left-handed operations.
SkewPoly opposite(const SkewPoly& p);

// A = Q*B + R, deg R < deg B (Newton iteration on reciprocals with a
// schoolbook fallback for small quotient degrees).
std::pair<SkewPoly, SkewPoly> divmod_right(const SkewPoly& a, const SkewPoly& b);
// A = B*Q + R, deg R < deg B (via the opposite ring).
std::pair<SkewPoly, SkewPoly> divmod_left(const SkewPoly& a, const SkewPoly& b);
SkewPoly quo_right(const SkewPoly& a, const SkewPoly& b);  // exactness not required
SkewPoly rem_right(const SkewPoly& a, const SkewPoly& b);
bool divides_right(const SkewPoly& d, const SkewPoly& a);  // remainder of a by d is zero

// M = [[u0 u1],[v0 v1]] with u0*A + u1*B = g (monic rgcd) and
// v0*A = -v1*B = llcm(A,B) up to left unit.
struct RgcdResult {
    SkewPoly g;
    SkewPoly u0, u1, v0, v1;
};
RgcdResult rgcd_extended(const SkewPoly& a, const SkewPoly& b);

SkewPoly rgcd(const SkewPoly& a, const SkewPoly& b);
SkewPoly llcm(const SkewPoly& a, const SkewPoly& b);
SkewPoly lgcd(const SkewPoly& a, const SkewPoly& b);
SkewPoly rlcm(const SkewPoly& a, const SkewPoly& b);

// r x r matrix over k, the image of a skew polynomial of degree < r^2 under
// the splitting of k[X,sigma] modulo the central polynomial pi_t(X^r).
struct SkewMat {
    const SkewContext* ctx = nullptr;
    std::vector<uint64_t> e;  // row-major, r x r
    uint64_t& at(uint32_t i, uint32_t j) { return e[i * ctx->r() + j]; }
    uint64_t at(uint32_t i, uint32_t j) const { return e[i * ctx->r() + j]; }
};

SkewMat matrix_rep(const SkewPoly& a);
SkewPoly matrix_unrep(const SkewMat& m, uint32_t twist = 1);
SkewMat mat_mul(const SkewMat& a, const SkewMat& b);

}  // namespace orepoly

#endif
