#include "orepoly/oracle.hpp"

#include <algorithm>

namespace orepoly::oracle {

namespace {

constexpr uint64_t kEnumGuard = 1000000;

uint64_t pow_guarded(uint64_t base, int e) {
    uint64_t v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > kEnumGuard) return kEnumGuard + 1;
        v *= base;
    }
    return v;
}

}  // namespace

std::pair<SkewPoly, SkewPoly> naive_divmod_right(const SkewPoly& a, const SkewPoly& b) {
    const SkewContext& ctx = a.ctx();
    const Gf& F = ctx.field();
    if (b.is_zero()) throw math_error("naive division by zero");
    if (a.is_zero() || a.deg() < b.deg()) return {skew_zero(ctx, a.twist()), a};
    int64_t e = a.twist();
    int db = b.deg();
    std::vector<uint64_t> rem(a.coeffs());
    std::vector<uint64_t> quo(rem.size() - db, 0);
    for (int i = int(rem.size()) - 1; i >= db; --i) {
        if (!rem[i]) continue;
        int j = i - db;
        uint64_t c = F.mul(rem[i], F.inv(ctx.sigma_pow(b.lead(), e * j)));
        quo[j] = c;
        for (int u = 0; u <= db; ++u)
            if (b.coeff(u))
                rem[j + u] = F.sub(rem[j + u], F.mul(c, ctx.sigma_pow(b.coeff(u), e * j)));
    }
    return {SkewPoly(ctx, std::move(quo), a.twist()), SkewPoly(ctx, std::move(rem), a.twist())};
}

std::vector<SkewPoly> enumerate_right_divisors(const SkewPoly& p, int d) {
    const SkewContext& ctx = p.ctx();
    const Gf& F = ctx.field();
    if (p.is_zero()) throw math_error("divisor enumeration of the zero polynomial");
    if (d < 0 || d > p.deg()) return {};
    uint64_t total = pow_guarded(F.order(), d);
    if (total > kEnumGuard) throw math_error("divisor enumeration would exceed the desk-scale guard");
    std::vector<SkewPoly> out;
    std::vector<uint64_t> coeffs(d + 1, 0);
    coeffs[d] = 1;
    for (uint64_t v = 0; v < total; ++v) {
        uint64_t t = v;
        for (int i = 0; i < d; ++i) {
            coeffs[i] = t % F.order();
            t /= F.order();
        }
        SkewPoly cand(ctx, coeffs, p.twist());
        auto [q, r] = naive_divmod_right(p, cand);
        if (!r.is_zero()) continue;
        if (!(mul_classical(q, cand) == p)) continue;  // self-certification
        out.push_back(cand);
    }
    return out;
}

bool is_irreducible_naive(const SkewPoly& p) {
    if (p.is_zero() || p.deg() < 1) throw math_error("irreducibility needs degree >= 1");
    for (int d = 1; d < p.deg(); ++d)
        if (!enumerate_right_divisors(p, d).empty()) return false;
    return true;
}

std::vector<std::vector<SkewPoly>> enumerate_factorizations(const SkewPoly& p) {
    const SkewPoly pm = monic(p);
    if (pm.deg() == 0) return {{}};
    std::vector<std::vector<SkewPoly>> out;
    for (int d = 1; d <= pm.deg(); ++d) {
        for (auto& div : enumerate_right_divisors(pm, d)) {
            if (!is_irreducible_naive(div)) continue;
            SkewPoly q = naive_divmod_right(pm, div).first;
            for (auto seq : enumerate_factorizations(q)) {
                seq.push_back(div);
                // self-certify the full product
                SkewPoly prod = skew_one(pm.ctx(), pm.twist());
                for (auto& f : seq) prod = mul_classical(prod, f);
                if (prod == pm) out.push_back(std::move(seq));
            }
        }
    }
    return out;
}

NaiveGcd naive_extended_rgcd(const SkewPoly& a, const SkewPoly& b) {
    const SkewContext& ctx = a.ctx();
    if (a.is_zero() && b.is_zero()) throw math_error("rgcd of two zero polynomials");
    SkewPoly r0 = a, r1 = b;
    SkewPoly u0 = skew_one(ctx, a.twist()), v0 = skew_zero(ctx, a.twist());
    SkewPoly u1 = skew_zero(ctx, a.twist()), v1 = skew_one(ctx, a.twist());
    while (!r1.is_zero()) {
        auto [q, r] = naive_divmod_right(r0, r1);
        SkewPoly u2 = sub(u0, mul_classical(q, u1));
        SkewPoly v2 = sub(v0, mul_classical(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    uint64_t c = ctx.field().inv(r0.lead());
    return {scale_left(c, r0), scale_left(c, u0), scale_left(c, v0)};
}

}  // namespace orepoly::oracle
