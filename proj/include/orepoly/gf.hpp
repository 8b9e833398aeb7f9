#ifndef OREPOLY_GF_HPP
#define OREPOLY_GF_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "orepoly/errors.hpp"

namespace orepoly {

/*
 * Runtime finite field GF(p^m).
 *
 * Elements are stored packed: an element with polynomial-basis coefficients
 * (c_0, ..., c_{m-1}) over GF(p) is the integer sum c_i * p^i, so packed
 * values enumerate the field as 0 .. q-1 and digit i is the coefficient of
 * z^i where z is the class of the defining variable.  Fields small enough
 * get discrete log/exp tables; larger fields fall back to polynomial
 * arithmetic.  p is limited to machine-word scale (p^2 must fit in 64 bits)
 * and q = p^m must fit in 63 bits.
 */
class Gf {
public:
    // modulus: little-endian, length m+1, monic, irreducible over GF(p).
    // Empty modulus selects the deterministic default (see find_modulus).
    Gf(uint32_t p, uint32_t m, std::vector<uint32_t> modulus = {});

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return m_; }
    uint64_t order() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    bool has_tables() const { return tabled_; }

    uint64_t zero() const { return 0; }
    uint64_t one() const { return 1; }
    // Class of the defining variable z (packed value p); equals 1 when m == 1.
    uint64_t var() const { return m_ > 1 ? p_ : 1; }
    // A multiplicative generator of GF(p^m)*.
    uint64_t mul_gen() const { return gen_; }

    uint64_t add(uint64_t a, uint64_t b) const;
    uint64_t sub(uint64_t a, uint64_t b) const;
    uint64_t neg(uint64_t a) const;
    uint64_t mul(uint64_t a, uint64_t b) const {
        if (!tabled_) return mul_slow(a, b);
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    uint64_t inv(uint64_t a) const;
    uint64_t div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }
    uint64_t pow(uint64_t a, uint64_t e) const;
    // a^(p^j): the j-th power of the absolute Frobenius.
    uint64_t frob(uint64_t a, uint64_t j) const;

    uint32_t digit(uint64_t a, uint32_t i) const;
    uint64_t from_digits(const std::vector<uint32_t>& d) const;
    std::vector<uint32_t> digits(uint64_t a) const;
    // Image of an integer under Z -> GF(p) -> GF(p^m).
    uint64_t from_int(int64_t v) const;

    uint64_t random(std::mt19937_64& rng) const {
        return std::uniform_int_distribution<uint64_t>(0, q_ - 1)(rng);
    }

    bool same_field(const Gf& other) const {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

    // Lowest irreducible monic polynomial of degree m over GF(p) in packed
    // order (coefficients read as a base-p integer, constant digit first).
    static std::vector<uint32_t> find_modulus(uint32_t p, uint32_t m);
    static bool is_irreducible_gfp(uint32_t p, const std::vector<uint32_t>& f);
    static bool is_prime(uint64_t n);

private:
    uint64_t mul_slow(uint64_t a, uint64_t b) const;
    void build_tables();
    void find_generator();

    uint32_t p_;
    uint32_t m_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint64_t> ppow_;  // p^0 .. p^m
    bool tabled_ = false;
    uint64_t gen_ = 0;
    std::vector<uint32_t> log_;
    std::vector<uint64_t> exp_;
};

}  // namespace orepoly

#endif
