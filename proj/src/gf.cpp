#include "orepoly/gf.hpp"

#include <algorithm>

namespace orepoly {

namespace {

constexpr uint64_t kTableLimit = uint64_t(1) << 16;

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t mod) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % mod);
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// --- dense polynomial helpers over GF(p), used only for bootstrap ---

using PP = std::vector<uint32_t>;

void pp_trim(PP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PP pp_mulmod(const PP& a, const PP& b, const PP& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + uint64_t(a[i]) * b[j]) % p;
    }
    // reduce modulo monic f
    size_t m = f.size() - 1;
    for (size_t i = acc.size(); i-- > m;) {
        uint64_t c = acc[i] % p;
        if (c == 0) continue;
        acc[i] = 0;
        for (size_t j = 0; j < m; ++j)
            acc[i - m + j] = (acc[i - m + j] + c * (p - f[j] % p)) % p;
    }
    PP out(acc.begin(), acc.begin() + std::min(acc.size(), m));
    pp_trim(out);
    return out;
}

PP pp_powmod_pe(const PP& base, uint32_t p, uint64_t e_is_p_to, const PP& f) {
    // base^(p^e_is_p_to) mod f by iterated p-th powers
    PP r = base;
    for (uint64_t i = 0; i < e_is_p_to; ++i) {
        PP acc = {1};
        PP sq = r;
        uint32_t e = p;
        while (e) {
            if (e & 1) acc = pp_mulmod(acc, sq, f, p);
            sq = pp_mulmod(sq, sq, f, p);
            e >>= 1;
        }
        r = acc;
    }
    return r;
}

PP pp_gcd(PP a, PP b, uint32_t p) {
    pp_trim(a);
    pp_trim(b);
    while (!b.empty()) {
        // a mod b
        PP r = a;
        size_t db = b.size() - 1;
        // invert leading coefficient of b mod p
        uint64_t lb = b.back(), linv = 1;
        for (uint32_t e = p - 2; e; e >>= 1) {
            if (e & 1) linv = linv * lb % p;
            lb = lb * lb % p;
        }
        while (r.size() >= b.size() && !r.empty()) {
            uint64_t c = uint64_t(r.back()) * linv % p;
            size_t shift = r.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                r[shift + j] = uint32_t((r[shift + j] + c * (p - b[j] % p)) % p);
            pp_trim(r);
            if (r.size() <= db) break;
        }
        a = b;
        b = r;
    }
    return a;
}

}  // namespace

bool Gf::is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool Gf::is_irreducible_gfp(uint32_t p, const std::vector<uint32_t>& f) {
    if (f.size() < 2 || f.back() != 1) return false;
    uint32_t m = uint32_t(f.size()) - 1;
    if (m == 1) return true;
    PP x = {0, 1};
    // x^(p^m) == x mod f
    PP xq = pp_powmod_pe(x, p, m, f);
    PP diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    pp_trim(diff);
    if (!diff.empty()) return false;
    for (uint64_t ell : prime_factors(m)) {
        PP xe = pp_powmod_pe(x, p, m / ell, f);
        PP d = xe;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        pp_trim(d);
        PP g = pp_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<uint32_t> Gf::find_modulus(uint32_t p, uint32_t m) {
    if (m == 1) return {0, 1};  // z itself: GF(p) needs no extension, use z - 0
    // enumerate lower coefficients as a base-p counter, lowest packed first
    uint64_t total = 1;
    for (uint32_t i = 0; i < m; ++i) total *= p;
    std::vector<uint32_t> f(m + 1, 0);
    f[m] = 1;
    for (uint64_t v = 0; v < total; ++v) {
        uint64_t t = v;
        for (uint32_t i = 0; i < m; ++i) {
            f[i] = uint32_t(t % p);
            t /= p;
        }
        if (is_irreducible_gfp(p, f)) return f;
    }
    throw math_error("no irreducible modulus found");  // unreachable
}

Gf::Gf(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) : p_(p), m_(m) {
    if (!is_prime(p)) throw math_error("characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw math_error("extension degree must be positive");
    if (static_cast<uint64_t>(p) * p < p) throw math_error("characteristic too large");
    ppow_.resize(m + 1);
    ppow_[0] = 1;
    for (uint32_t i = 1; i <= m; ++i) {
        if (ppow_[i - 1] > (uint64_t(1) << 62) / p)
            throw math_error("field order exceeds 63 bits");
        ppow_[i] = ppow_[i - 1] * p;
    }
    q_ = ppow_[m];
    if (modulus.empty()) {
        modulus_ = find_modulus(p, m);
    } else {
        if (modulus.size() != m + 1 || modulus.back() % p != 1)
            throw math_error("modulus must be monic of degree m");
        for (auto& c : modulus) c %= p;
        if (m > 1 && !is_irreducible_gfp(p, modulus))
            throw math_error("modulus is reducible over GF(p)");
        modulus_ = modulus;
    }
    if (q_ <= kTableLimit) {
        find_generator();
        build_tables();
        tabled_ = true;
    } else {
        find_generator();
    }
}

uint64_t Gf::add(uint64_t a, uint64_t b) const {
    if (p_ == 2) return a ^ b;
    uint64_t out = 0;
    for (uint32_t i = 0; i < m_; ++i) {
        uint64_t da = (a / ppow_[i]) % p_, db = (b / ppow_[i]) % p_;
        uint64_t s = da + db;
        if (s >= p_) s -= p_;
        out += s * ppow_[i];
    }
    return out;
}

uint64_t Gf::sub(uint64_t a, uint64_t b) const { return add(a, neg(b)); }

uint64_t Gf::neg(uint64_t a) const {
    if (p_ == 2) return a;
    uint64_t out = 0;
    for (uint32_t i = 0; i < m_; ++i) {
        uint64_t da = (a / ppow_[i]) % p_;
        out += (da ? p_ - da : 0) * ppow_[i];
    }
    return out;
}

uint64_t Gf::mul_slow(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    std::vector<uint64_t> acc(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i) {
        uint64_t da = (a / ppow_[i]) % p_;
        if (da == 0) continue;
        for (uint32_t j = 0; j < m_; ++j) {
            uint64_t db = (b / ppow_[j]) % p_;
            acc[i + j] = (acc[i + j] + da * db) % p_;
        }
    }
    for (uint32_t i = 2 * m_ - 1; i-- > m_;) {
        uint64_t c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (uint32_t j = 0; j < m_; ++j)
            acc[i - m_ + j] = (acc[i - m_ + j] + c * (p_ - modulus_[j])) % p_;
    }
    uint64_t out = 0;
    for (uint32_t i = 0; i < m_; ++i) out += acc[i] * ppow_[i];
    return out;
}

uint64_t Gf::inv(uint64_t a) const {
    if (a == 0) throw math_error("division by zero in GF(p^m)");
    if (tabled_) return exp_[(q_ - 1) - log_[a]];
    return pow(a, q_ - 2);
}

uint64_t Gf::pow(uint64_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    e %= (q_ - 1);
    if (tabled_) return exp_[mulmod_u64(log_[a], e, q_ - 1)];
    uint64_t r = 1, sq = a;
    while (e) {
        if (e & 1) r = mul_slow(r, sq);
        sq = mul_slow(sq, sq);
        e >>= 1;
    }
    return r;
}

uint64_t Gf::frob(uint64_t a, uint64_t j) const {
    if (a == 0 || a == 1) return a;
    j %= m_;  // Frobenius has order m on GF(p^m)
    if (j == 0) return a;
    // exponent p^j mod (q-1)
    uint64_t e = 1;
    for (uint64_t i = 0; i < j; ++i) e = mulmod_u64(e, p_, q_ - 1);
    return pow(a, e);
}

uint32_t Gf::digit(uint64_t a, uint32_t i) const { return uint32_t((a / ppow_[i]) % p_); }

uint64_t Gf::from_digits(const std::vector<uint32_t>& d) const {
    uint64_t out = 0;
    for (uint32_t i = 0; i < m_ && i < d.size(); ++i) out += uint64_t(d[i] % p_) * ppow_[i];
    return out;
}

std::vector<uint32_t> Gf::digits(uint64_t a) const {
    std::vector<uint32_t> d(m_);
    for (uint32_t i = 0; i < m_; ++i) d[i] = digit(a, i);
    return d;
}

uint64_t Gf::from_int(int64_t v) const {
    int64_t r = v % int64_t(p_);
    if (r < 0) r += p_;
    return uint64_t(r);
}

void Gf::find_generator() {
    auto primes = prime_factors(q_ - 1);
    auto order_ok = [&](uint64_t c) {
        for (uint64_t ell : primes) {
            // c^((q-1)/ell) via slow powering (tables not built yet)
            uint64_t e = (q_ - 1) / ell, r = 1, sq = c;
            while (e) {
                if (e & 1) r = mul_slow(r, sq);
                sq = mul_slow(sq, sq);
                e >>= 1;
            }
            if (r == 1) return false;
        }
        return true;
    };
    for (uint64_t c = q_ > 2 ? 2 : 1; c < q_; ++c) {
        if (order_ok(c)) {
            gen_ = c;
            return;
        }
    }
    gen_ = 1;  // GF(2)
}

void Gf::build_tables() {
    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 0);
    uint64_t acc = 1;
    for (uint64_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = acc;
        exp_[i + (q_ - 1)] = acc;
        log_[acc] = uint32_t(i);
        acc = mul_slow(acc, gen_);
    }
    if (acc != 1) throw math_error("generator order mismatch while building tables");
}

}  // namespace orepoly
