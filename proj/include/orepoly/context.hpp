#ifndef OREPOLY_CONTEXT_HPP
#define OREPOLY_CONTEXT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "orepoly/gf.hpp"
#include "orepoly/gfpoly.hpp"

namespace orepoly {

/*
 * The tower k / k^sigma.
 *
 * k = GF(p^n) with a fixed defining modulus, sigma = (absolute Frobenius)^s,
 * k^sigma = GF(q) with q = p^m, m = gcd(n, s), and r = n/m the order of
 * sigma.  The fixed field gets its own standalone representation `subfield()`
 * (as GF(p^m) over GF(p)) plus an embedding into k, so centre polynomials can
 * live over a genuine GF(q).
 *
 * Immutable after construction; all members are const-safe to share across
 * threads.
 */
class SkewContext {
public:
    // modulus: little-endian over GF(p), length n+1, monic irreducible.
    // Empty selects the deterministic lowest irreducible (packed order).
    SkewContext(uint32_t p, uint32_t n, uint32_t s, std::vector<uint32_t> modulus = {});

    const Gf& field() const { return k_; }
    const Gf& subfield() const { return sub_; }
    uint32_t p() const { return k_.characteristic(); }
    uint32_t n() const { return k_.degree(); }
    uint32_t s() const { return s_; }
    uint32_t m() const { return sub_.degree(); }
    uint32_t r() const { return r_; }
    uint64_t q() const { return sub_.order(); }

    // sigma^j(a) for any integer j (reduced mod r); elements packed in k.
    uint64_t sigma(uint64_t a) const;
    uint64_t sigma_pow(uint64_t a, int64_t j) const;
    // (a, sigma(a), ..., sigma^{r-1}(a)), computed incrementally.
    std::vector<uint64_t> conjugates(uint64_t a) const;
    // product of all conjugates; lands in the fixed field (inside k).
    uint64_t relative_norm(uint64_t a) const;
    bool is_fixed(uint64_t a) const { return sigma(a) == a; }

    // k^sigma (own representation) <-> sigma-fixed elements of k
    uint64_t embed_sub(uint64_t sub_packed) const;
    uint64_t project_sub(uint64_t k_packed) const;  // throws if not fixed

    // Fixed primitive element of k over k^sigma and its minimal polynomial
    // (degree r, coefficients in the subfield representation).
    uint64_t t() const { return t_; }
    const gp::Poly& pi_t() const { return pi_t_; }
    const std::vector<uint64_t>& t_conjugates() const { return t_conj_; }

    // Coordinates of a in the k^sigma-basis (1, t, ..., t^{r-1});
    // entries packed in the subfield representation.
    std::vector<uint64_t> t_coordinates(uint64_t a) const;
    uint64_t from_t_coordinates(const std::vector<uint64_t>& coords) const;

    std::string spec_string() const;

private:
    void build_embedding();
    void choose_primitive();
    void build_basis_matrix();

    Gf k_;
    Gf sub_;
    uint32_t s_;
    uint32_t r_;
    uint64_t sub_gen_in_k_;               // image of subfield's z-class in k
    std::vector<uint64_t> sub_pow_in_k_;  // images of z^l, l < m
    uint64_t t_;
    std::vector<uint64_t> t_conj_;
    gp::Poly pi_t_;
    std::vector<uint64_t> sigma_table_;   // one-step sigma per element, small fields
    // GF(p) change of basis: digits of a -> coords over basis {t^i u^l}
    std::vector<std::vector<uint32_t>> basis_inv_;
};

// Spec-surface element of k tied to its context.
struct FieldElement {
    uint64_t packed = 0;
    const SkewContext* ctx = nullptr;

    bool operator==(const FieldElement&) const = default;
};

FieldElement fe(const SkewContext& ctx, uint64_t packed);
FieldElement fe_add(FieldElement a, FieldElement b);
FieldElement fe_sub(FieldElement a, FieldElement b);
FieldElement fe_mul(FieldElement a, FieldElement b);
FieldElement fe_inv(FieldElement a);
FieldElement frobenius_power(FieldElement a, int64_t j);
std::vector<FieldElement> conjugates(FieldElement a);
FieldElement relative_norm(FieldElement a);
// coerce_fixed_field: up takes a subfield-packed value, down returns one.
FieldElement coerce_up(const SkewContext& ctx, uint64_t sub_packed);
uint64_t coerce_down(FieldElement a);

}  // namespace orepoly

#endif
