#include "orepoly/gfpoly.hpp"

#include <algorithm>
#include <map>

namespace orepoly::gp {

namespace {
constexpr int kKaratsubaCutoff = 24;
}

void trim(const Gf&, Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly one() { return {1}; }
Poly var() { return {0, 1}; }

bool eq(const Poly& a, const Poly& b) { return a == b; }

Poly add(const Gf& F, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        uint64_t x = i < a.size() ? a[i] : 0;
        uint64_t y = i < b.size() ? b[i] : 0;
        out[i] = F.add(x, y);
    }
    trim(F, out);
    return out;
}

Poly sub(const Gf& F, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        uint64_t x = i < a.size() ? a[i] : 0;
        uint64_t y = i < b.size() ? b[i] : 0;
        out[i] = F.sub(x, y);
    }
    trim(F, out);
    return out;
}

Poly scale(const Gf& F, uint64_t c, const Poly& a) {
    if (c == 0) return {};
    Poly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = F.mul(c, a[i]);
    trim(F, out);
    return out;
}

namespace {

Poly mul_school(const Gf& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j]) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    trim(F, out);
    return out;
}

Poly shift_up(const Poly& a, size_t k) {
    if (a.empty()) return {};
    Poly out(a.size() + k, 0);
    std::copy(a.begin(), a.end(), out.begin() + k);
    return out;
}

Poly mul_rec(const Gf& F, const Poly& a, const Poly& b) {
    if (int(std::min(a.size(), b.size())) <= kKaratsubaCutoff) return mul_school(F, a, b);
    size_t h = std::max(a.size(), b.size()) / 2;
    Poly a0(a.begin(), a.begin() + std::min(h, a.size()));
    Poly a1(a.begin() + std::min(h, a.size()), a.end());
    Poly b0(b.begin(), b.begin() + std::min(h, b.size()));
    Poly b1(b.begin() + std::min(h, b.size()), b.end());
    trim(F, a0);
    trim(F, b0);
    Poly c0 = mul_rec(F, a0, b0);
    Poly c2 = mul_rec(F, a1, b1);
    Poly mid = mul_rec(F, add(F, a0, a1), add(F, b0, b1));
    mid = sub(F, sub(F, mid, c0), c2);
    Poly out = add(F, c0, add(F, shift_up(mid, h), shift_up(c2, 2 * h)));
    return out;
}

}  // namespace

Poly mul(const Gf& F, const Poly& a, const Poly& b) { return mul_rec(F, a, b); }

Poly monic(const Gf& F, const Poly& a) {
    if (a.empty()) throw math_error("monic of zero polynomial");
    return scale(F, F.inv(a.back()), a);
}

std::pair<Poly, Poly> divmod(const Gf& F, const Poly& a, const Poly& b) {
    if (b.empty()) throw math_error("polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    Poly r = a;
    Poly q(a.size() - b.size() + 1, 0);
    uint64_t linv = F.inv(b.back());
    for (size_t shift = q.size(); shift-- > 0;) {
        size_t i = shift + b.size() - 1;
        if (r[i] == 0) continue;
        uint64_t c = F.mul(r[i], linv);
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j)
            r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
    }
    trim(F, q);
    trim(F, r);
    return {q, r};
}

Poly mod(const Gf& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly gcd(const Gf& F, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return monic(F, a);
}

ExtGcd ext_gcd(const Gf& F, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = one(), v0 = {}, u1 = {}, v1 = one();
    while (!r1.empty()) {
        auto [q, r] = divmod(F, r0, r1);
        Poly u2 = sub(F, u0, mul(F, q, u1));
        Poly v2 = sub(F, v0, mul(F, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.empty()) throw math_error("ext_gcd of two zero polynomials");
    uint64_t c = F.inv(r0.back());
    return {scale(F, c, r0), scale(F, c, u0), scale(F, c, v0)};
}

Poly inv_mod(const Gf& F, const Poly& a, const Poly& f) {
    auto e = ext_gcd(F, mod(F, a, f), f);
    if (deg(e.g) != 0) throw math_error("element not invertible modulo f");
    return mod(F, e.u, f);
}

uint64_t eval(const Gf& F, const Poly& a, uint64_t x) {
    uint64_t r = 0;
    for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
    return r;
}

Poly derivative(const Gf& F, const Poly& a) {
    if (a.size() < 2) return {};
    Poly out(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) {
        uint64_t k = F.from_int(int64_t(i));
        out[i - 1] = F.mul(k, a[i]);
    }
    trim(F, out);
    return out;
}

Poly powmod(const Gf& F, Poly base, bigint e, const Poly& f) {
    base = mod(F, base, f);
    Poly r = one();
    while (e > 0) {
        if ((e & 1) != 0) r = mod(F, mul(F, r, base), f);
        base = mod(F, mul(F, base, base), f);
        e >>= 1;
    }
    return r;
}

Poly compose_mod(const Gf& F, const Poly& g, const Poly& h, const Poly& f) {
    Poly r;
    Poly hm = mod(F, h, f);
    for (size_t i = g.size(); i-- > 0;) {
        r = mod(F, mul(F, r, hm), f);
        if (g[i]) r = add(F, r, Poly{g[i]});
    }
    return r;
}

Poly compose(const Gf& F, const Poly& g, const Poly& h) {
    Poly r;
    for (size_t i = g.size(); i-- > 0;) {
        r = mul(F, r, h);
        if (g[i]) r = add(F, r, Poly{g[i]});
    }
    return r;
}

Poly frob_power(const Gf& F, uint64_t j, const Poly& f) {
    // T^(q^j) mod f: compose the base map T -> T^q with itself, using that
    // coefficients in GF(q) are fixed by x -> x^q.
    Poly result = mod(F, var(), f);
    if (j == 0) return result;
    Poly base = powmod(F, var(), bigint(F.order()), f);
    while (j) {
        if (j & 1) result = compose_mod(F, result, base, f);
        j >>= 1;
        if (j) base = compose_mod(F, base, base, f);
    }
    return result;
}

Poly random_poly(const Gf& F, int degree, std::mt19937_64& rng) {
    Poly out(degree + 1);
    for (int i = 0; i < degree; ++i) out[i] = F.random(rng);
    do {
        out[degree] = F.random(rng);
    } while (out[degree] == 0);
    return out;
}

Poly random_monic(const Gf& F, int degree, std::mt19937_64& rng) {
    Poly out(degree + 1);
    for (int i = 0; i < degree; ++i) out[i] = F.random(rng);
    out[degree] = 1;
    return out;
}

Poly random_below(const Gf& F, int degree_bound, std::mt19937_64& rng) {
    Poly out(degree_bound);
    for (int i = 0; i < degree_bound; ++i) out[i] = F.random(rng);
    trim(F, out);
    return out;
}

bool is_irreducible(const Gf& F, const Poly& f) {
    int d = deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    Poly fr = frob_power(F, uint64_t(d), f);
    if (!eq(fr, mod(F, var(), f))) return false;
    uint64_t n = uint64_t(d);
    for (uint64_t ell = 2; ell * ell <= n; ++ell) {
        if (n % ell) continue;
        while (n % ell == 0) n /= ell;
        Poly g = gcd(F, sub(F, frob_power(F, uint64_t(d) / ell, f), var()), f);
        if (deg(g) != 0) return false;
    }
    if (n > 1) {
        Poly g = gcd(F, sub(F, frob_power(F, uint64_t(d) / n, f), var()), f);
        if (deg(g) != 0) return false;
    }
    return true;
}

Poly random_irreducible(const Gf& F, int degree, std::mt19937_64& rng) {
    for (int tries = 0; tries < 64 * (degree + 2); ++tries) {
        Poly f = random_monic(F, degree, rng);
        if (is_irreducible(F, f)) return f;
    }
    throw retry_error("no irreducible polynomial found within retry budget");
}

namespace {

// lexicographic order used to make factorization output deterministic
bool poly_less(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Poly pth_root(const Gf& F, const Poly& f) {
    uint32_t p = F.characteristic();
    Poly out((f.size() - 1) / p + 1);
    // c^(1/p) = c^(p^(m-1)) in GF(p^m)
    for (size_t i = 0; i < out.size(); ++i) out[i] = F.frob(f[i * p], F.degree() - 1);
    return out;
}

void equal_degree(const Gf& F, const Poly& f, int d, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
    if (deg(f) == d) {
        out.push_back(f);
        return;
    }
    Poly splitter;
    while (true) {
        Poly a = random_below(F, deg(f), rng);
        if (deg(a) < 1) continue;
        Poly g = gcd(F, a, f);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            splitter = g;
            break;
        }
        Poly b;
        if (F.characteristic() == 2) {
            // trace map over GF(2): a + a^2 + ... + a^(2^(dm-1)) mod f
            uint64_t bits = uint64_t(d) * F.degree();
            Poly t = a, acc = a;
            for (uint64_t i = 1; i < bits; ++i) {
                t = mod(F, mul(F, t, t), f);
                acc = add(F, acc, t);
            }
            b = acc;
        } else {
            bigint e = (boost::multiprecision::pow(bigint(F.order()), unsigned(d)) - 1) / 2;
            b = sub(F, powmod(F, a, e, f), one());
        }
        Poly g2 = gcd(F, b, f);
        if (deg(g2) > 0 && deg(g2) < deg(f)) {
            splitter = g2;
            break;
        }
    }
    equal_degree(F, splitter, d, rng, out);
    equal_degree(F, divmod(F, f, splitter).first, d, rng, out);
}

}  // namespace

Factorization factorize(const Gf& F, const Poly& f, std::mt19937_64& rng) {
    if (f.empty()) throw math_error("factorize: zero polynomial");
    Factorization result;
    result.unit = f.back();
    Poly work = monic(F, f);
    std::map<Poly, int, bool (*)(const Poly&, const Poly&)> found(poly_less);

    int p_mult = 1;
    while (deg(work) > 0) {
        Poly d = derivative(F, work);
        if (d.empty()) {
            work = pth_root(F, work);
            p_mult *= int(F.characteristic());
            continue;
        }
        Poly sqf = divmod(F, work, gcd(F, work, d)).first;  // squarefree, same support
        // distinct-degree split of sqf, then equal-degree refinement
        Poly u = sqf;
        int i = 1;
        Poly h = mod(F, var(), u);
        while (deg(u) > 0 && 2 * i <= deg(u)) {
            h = powmod(F, h, bigint(F.order()), u);
            Poly g = gcd(F, sub(F, h, var()), u);
            if (deg(g) > 0) {
                std::vector<Poly> irr;
                equal_degree(F, g, i, rng, irr);
                for (auto& ir : irr) {
                    int e = 0;
                    while (true) {
                        auto [q, r] = divmod(F, work, ir);
                        if (!r.empty()) break;
                        work = q;
                        ++e;
                    }
                    found[ir] += e * p_mult;
                }
                u = divmod(F, u, g).first;
                h = mod(F, h, u);
            }
            ++i;
        }
        if (deg(u) > 0) {
            int e = 0;
            while (true) {
                auto [q, r] = divmod(F, work, u);
                if (!r.empty()) break;
                work = q;
                ++e;
            }
            found[u] += e * p_mult;
        }
    }
    for (auto& [poly, mult] : found) result.factors.emplace_back(poly, mult);
    return result;
}

std::vector<uint64_t> roots(const Gf& F, const Poly& f, std::mt19937_64& rng) {
    if (f.empty()) throw math_error("roots: zero polynomial");
    // root part: gcd(f, T^q - T)
    Poly h = powmod(F, var(), bigint(F.order()), f);
    Poly rp = gcd(F, sub(F, h, var()), f);
    std::vector<uint64_t> out;
    if (deg(rp) < 1) return out;
    std::vector<Poly> lin;
    equal_degree(F, rp, 1, rng, lin);
    for (auto& l : lin) out.push_back(F.neg(F.mul(l[0], F.inv(l[1]))));
    std::sort(out.begin(), out.end());
    return out;
}

Poly interpolate(const Gf& F, const std::vector<uint64_t>& xs, const std::vector<uint64_t>& ys) {
    Poly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly basis = one();
        uint64_t denom = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = mul(F, basis, Poly{F.neg(xs[j]), 1});
            denom = F.mul(denom, F.sub(xs[i], xs[j]));
        }
        acc = add(F, acc, scale(F, F.mul(ys[i], F.inv(denom)), basis));
    }
    return acc;
}

}  // namespace orepoly::gp
