#include "orepoly/centre.hpp"

#include <algorithm>
#include <string>

namespace orepoly {

namespace {
const SkewContext& ctx_of(const CentrePoly& a) {
    if (!a.ctx) throw math_error("centre polynomial without context");
    return *a.ctx;
}
}  // namespace

int CentrePoly::deg() const {
    if (c.empty()) throw math_error("degree of the zero centre polynomial");
    return int(c.size()) - 1;
}

CentrePoly centre_zero(const SkewContext& ctx) { return {&ctx, {}}; }
CentrePoly centre_one(const SkewContext& ctx) { return {&ctx, gp::one()}; }

CentrePoly centre_from(const SkewContext& ctx, gp::Poly coeffs) {
    gp::trim(ctx.subfield(), coeffs);
    return {&ctx, std::move(coeffs)};
}

CentrePoly c_add(const CentrePoly& a, const CentrePoly& b) {
    return {a.ctx, gp::add(ctx_of(a).subfield(), a.c, b.c)};
}
CentrePoly c_sub(const CentrePoly& a, const CentrePoly& b) {
    return {a.ctx, gp::sub(ctx_of(a).subfield(), a.c, b.c)};
}
CentrePoly c_mul(const CentrePoly& a, const CentrePoly& b) {
    return {a.ctx, gp::mul(ctx_of(a).subfield(), a.c, b.c)};
}
CentrePoly c_pow(const CentrePoly& a, int e) {
    CentrePoly r = centre_one(ctx_of(a));
    CentrePoly sq = a;
    while (e) {
        if (e & 1) r = c_mul(r, sq);
        e >>= 1;
        if (e) sq = c_mul(sq, sq);
    }
    return r;
}
CentrePoly c_monic(const CentrePoly& a) { return {a.ctx, gp::monic(ctx_of(a).subfield(), a.c)}; }
std::pair<CentrePoly, CentrePoly> c_divmod(const CentrePoly& a, const CentrePoly& b) {
    auto [q, r] = gp::divmod(ctx_of(a).subfield(), a.c, b.c);
    return {CentrePoly{a.ctx, q}, CentrePoly{a.ctx, r}};
}
CentrePoly c_gcd(const CentrePoly& a, const CentrePoly& b) {
    return {a.ctx, gp::gcd(ctx_of(a).subfield(), a.c, b.c)};
}
bool c_irreducible(const CentrePoly& a) { return gp::is_irreducible(ctx_of(a).subfield(), a.c); }

SkewPoly centre_embed(const CentrePoly& c) {
    const SkewContext& ctx = ctx_of(c);
    uint32_t r = ctx.r();
    std::vector<uint64_t> out(c.c.empty() ? 0 : (c.c.size() - 1) * r + 1, 0);
    for (size_t i = 0; i < c.c.size(); ++i) out[i * r] = ctx.embed_sub(c.c[i]);
    return SkewPoly(ctx, std::move(out), 1);
}

CentrePoly centre_project(const SkewPoly& p) {
    const SkewContext& ctx = p.ctx();
    uint32_t r = ctx.r();
    if (p.is_zero()) return centre_zero(ctx);
    gp::Poly out(size_t(p.deg()) / r + 1, 0);
    for (int i = 0; i <= p.deg(); ++i) {
        uint64_t a = p.coeff(i);
        if (a == 0) continue;
        if (uint32_t(i) % r != 0)
            throw math_error("not central: nonzero coefficient at index " + std::to_string(i));
        if (!ctx.is_fixed(a))
            throw math_error("not central: coefficient at index " + std::to_string(i) +
                             " is not fixed by sigma");
        out[uint32_t(i) / r] = ctx.project_sub(a);
    }
    return centre_from(ctx, std::move(out));
}

// ---- reduced norm ----

namespace {
// division-free determinant over k[Y] by memoized minor expansion
gp::Poly det_minors_k(const Gf& F, const std::vector<std::vector<gp::Poly>>& M) {
    size_t n = M.size();
    if (n > 20) throw math_error("minor determinant limited to r <= 20");
    size_t full = (size_t(1) << n) - 1;
    std::vector<gp::Poly> memo(full + 1);
    std::vector<size_t> order;
    order.reserve(full + 1);
    for (size_t mask = 0; mask <= full; ++mask) order.push_back(mask);
    std::sort(order.begin(), order.end(), [](size_t a, size_t b) {
        return __builtin_popcountll(a) > __builtin_popcountll(b);
    });
    memo[full] = gp::one();
    for (size_t mask : order) {
        if (mask == full) continue;
        size_t row = size_t(__builtin_popcountll(mask));
        gp::Poly acc;
        bool positive = true;
        for (size_t j = 0; j < n; ++j) {
            if (mask & (size_t(1) << j)) continue;
            const gp::Poly& entry = M[row][j];
            if (!entry.empty() && !memo[mask | (size_t(1) << j)].empty()) {
                gp::Poly term = gp::mul(F, entry, memo[mask | (size_t(1) << j)]);
                acc = positive ? gp::add(F, acc, term) : gp::sub(F, acc, term);
            }
            positive = !positive;
        }
        memo[mask] = std::move(acc);
    }
    return memo[0];
}
}  // namespace

CentrePoly reduced_norm_small(const SkewPoly& p) {
    const SkewContext& ctx = p.ctx();
    if (p.is_zero()) throw math_error("reduced norm of the zero polynomial");
    uint32_t r = ctx.r();
    const Gf& F = ctx.field();
    const Gf& S = ctx.subfield();
    int d = p.deg();
    if (d >= int(r)) throw math_error("reduced_norm_small requires deg < r");
    if (d <= 1) {
        // per-coefficient formula, valid at d <= 1:
        // N(P) = sum_i s_i N(a_i) Y^i with s_i = (-1)^{(r+1)(d-i)}
        gp::Poly out(d + 1, 0);
        bool alternate = (r % 2 == 0) && (ctx.p() != 2);
        for (int i = 0; i <= d; ++i) {
            uint64_t na = ctx.project_sub(ctx.relative_norm(p.coeff(i)));
            if (alternate && ((d - i) % 2 == 1)) na = S.neg(na);
            out[i] = na;
        }
        return centre_from(ctx, std::move(out));
    }
    // Degree below r makes the multiplication-matrix components constants:
    // entry (i, j) is sigma^j(a_{(i-j) mod r}) with an extra Y above the
    // diagonal.  Expand the determinant directly over k[Y].
    std::vector<std::vector<gp::Poly>> M(r, std::vector<gp::Poly>(r));
    for (uint32_t i = 0; i < r; ++i)
        for (uint32_t j = 0; j < r; ++j) {
            uint32_t c = (i + r - j) % r;
            if (int(c) > d) continue;
            uint64_t v = ctx.sigma_pow(p.coeff(int(c)), int64_t(j));
            if (!v) continue;
            M[i][j] = (i < j) ? gp::Poly{0, v} : gp::Poly{v};
        }
    gp::Poly det = det_minors_k(F, M);
    if (gp::deg(det) != d) throw math_error("small norm determinant has unexpected degree");
    det = gp::monic(F, det);
    gp::Poly out(det.size());
    for (size_t i = 0; i < det.size(); ++i) {
        if (!ctx.is_fixed(det[i])) throw math_error("norm coefficient is not fixed by sigma");
        out[i] = ctx.project_sub(det[i]);
    }
    uint64_t unit = ctx.project_sub(ctx.relative_norm(p.lead()));
    return centre_from(ctx, gp::scale(S, unit, out));
}

namespace {

// determinant over A = sub[Z]/(R) when R is irreducible (A a field)
gp::Poly det_field(const Gf& S, std::vector<std::vector<gp::Poly>>& M, const gp::Poly& R) {
    size_t n = M.size();
    gp::Poly det = gp::one();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = SIZE_MAX;
        for (size_t row = col; row < n; ++row)
            if (!M[row][col].empty()) {
                piv = row;
                break;
            }
        if (piv == SIZE_MAX) return {};
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = gp::scale(S, S.neg(1), det);
        }
        det = gp::mod(S, gp::mul(S, det, M[col][col]), R);
        gp::Poly inv = gp::inv_mod(S, M[col][col], R);
        for (size_t row = col + 1; row < n; ++row) {
            if (M[row][col].empty()) continue;
            gp::Poly f = gp::mod(S, gp::mul(S, M[row][col], inv), R);
            for (size_t j = col; j < n; ++j)
                M[row][j] = gp::sub(S, M[row][j], gp::mod(S, gp::mul(S, f, M[col][j]), R));
        }
    }
    return det;
}

// division-free determinant by memoized minor expansion over column subsets
gp::Poly det_minors(const Gf& S, const std::vector<std::vector<gp::Poly>>& M, const gp::Poly& R) {
    size_t n = M.size();
    if (n > 20) throw math_error("fallback determinant limited to r <= 20");
    size_t full = (size_t(1) << n) - 1;
    std::vector<gp::Poly> memo(full + 1);
    std::vector<size_t> order;
    order.reserve(full + 1);
    for (size_t mask = 0; mask <= full; ++mask) order.push_back(mask);
    std::sort(order.begin(), order.end(), [](size_t a, size_t b) {
        return __builtin_popcountll(a) > __builtin_popcountll(b);
    });
    memo[full] = gp::one();
    for (size_t mask : order) {
        if (mask == full) continue;
        size_t row = size_t(__builtin_popcountll(mask));
        gp::Poly acc;
        bool positive = true;
        for (size_t j = 0; j < n; ++j) {
            if (mask & (size_t(1) << j)) continue;
            const gp::Poly& entry = M[row][j];
            if (!entry.empty() && !memo[mask | (size_t(1) << j)].empty()) {
                gp::Poly term = gp::mod(S, gp::mul(S, entry, memo[mask | (size_t(1) << j)]), R);
                acc = positive ? gp::add(S, acc, term) : gp::sub(S, acc, term);
            }
            positive = !positive;
        }
        memo[mask] = std::move(acc);
    }
    return memo[0];
}

}  // namespace

CentrePoly reduced_norm_matrix(const SkewPoly& p) {
    const SkewContext& ctx = p.ctx();
    if (p.is_zero()) throw math_error("reduced norm of the zero polynomial");
    const Gf& S = ctx.subfield();
    uint32_t r = ctx.r();
    uint64_t unit = ctx.project_sub(ctx.relative_norm(p.lead()));
    if (p.deg() == 0) return centre_from(ctx, gp::Poly{unit});
    SkewPoly pm = monic(p);
    int d = pm.deg();
    if (r == 1) {
        // the ring is commutative and equals its centre
        gp::Poly out(pm.coeffs().size());
        for (size_t i = 0; i < out.size(); ++i) out[i] = ctx.project_sub(pm.coeff(int(i)));
        return centre_from(ctx, gp::scale(S, unit, out));
    }

    // A = sub[Z]/(R) with R = pi_t o R0, deg_Z R = r*n0 > d
    int n0 = d / int(r) + 1;
    gp::Poly R0(n0 + 1, 0), R;
    R0[n0] = 1;
    bool irreducible_R = false;
    for (uint64_t counter = 0; counter < 64; ++counter) {
        uint64_t v = counter;
        for (int i = 0; i < n0; ++i) {
            R0[i] = v % S.order();
            v /= S.order();
        }
        R = gp::compose(S, ctx.pi_t(), R0);
        if (gp::is_irreducible(S, R)) {
            irreducible_R = true;
            break;
        }
    }
    if (!irreducible_R) R = gp::compose(S, ctx.pi_t(), R0);

    // images of t^v in A (t maps to the class of R0)
    std::vector<gp::Poly> tpow(r);
    tpow[0] = gp::one();
    for (uint32_t v = 1; v < r; ++v) tpow[v] = gp::mod(S, gp::mul(S, tpow[v - 1], R0), R);
    auto embed_k = [&](uint64_t a) {
        gp::Poly acc;
        auto coords = ctx.t_coordinates(a);
        for (uint32_t v = 0; v < r; ++v)
            if (coords[v]) acc = gp::add(S, acc, gp::scale(S, coords[v], tpow[v]));
        return acc;
    };

    // matrix of right multiplication by pm on the basis (1, X, ..., X^{r-1});
    // pm = sum_c P_c(X^r) X^c, entry (i,j) = sigma^j(P_{(i-j) mod r}) with an
    // extra factor X^r above the diagonal
    std::vector<gp::Poly> comp(r);
    for (int i = 0; i <= d; ++i)
        if (pm.coeff(i)) {
            auto& pc = comp[uint32_t(i) % r];
            size_t slot = uint32_t(i) / r;
            if (pc.size() <= slot) pc.resize(slot + 1, 0);
            pc[slot] = pm.coeff(i);
        }
    std::vector<std::vector<gp::Poly>> M(r, std::vector<gp::Poly>(r));
    for (uint32_t i = 0; i < r; ++i)
        for (uint32_t j = 0; j < r; ++j) {
            const gp::Poly& pc = comp[(i + r - j) % r];
            if (pc.empty()) continue;
            gp::Poly entry;
            for (size_t u = 0; u < pc.size(); ++u) {
                if (!pc[u]) continue;
                gp::Poly img = embed_k(ctx.sigma_pow(pc[u], int64_t(j)));
                if (img.empty()) continue;
                size_t shift = u + (i < j ? 1 : 0);
                gp::Poly shifted(img.size() + shift, 0);
                std::copy(img.begin(), img.end(), shifted.begin() + shift);
                entry = gp::add(S, entry, shifted);
            }
            M[i][j] = gp::mod(S, entry, R);
        }

    gp::Poly det = irreducible_R ? det_field(S, M, R) : det_minors(S, M, R);
    if (gp::deg(det) != d) throw math_error("norm determinant has unexpected degree");
    det = gp::monic(S, det);
    return centre_from(ctx, gp::scale(S, unit, det));
}

namespace {

// characteristic polynomial over the field k via Hessenberg reduction
gp::Poly charpoly_k(const Gf& F, std::vector<std::vector<uint64_t>> M) {
    size_t n = M.size();
    for (size_t col = 0; col + 2 <= n; ++col) {
        size_t piv = SIZE_MAX;
        for (size_t row = col + 1; row < n; ++row)
            if (M[row][col]) {
                piv = row;
                break;
            }
        if (piv == SIZE_MAX) continue;
        if (piv != col + 1) {
            std::swap(M[piv], M[col + 1]);
            for (size_t rr = 0; rr < n; ++rr) std::swap(M[rr][piv], M[rr][col + 1]);
        }
        uint64_t inv = F.inv(M[col + 1][col]);
        for (size_t row = col + 2; row < n; ++row) {
            if (!M[row][col]) continue;
            uint64_t f = F.mul(M[row][col], inv);
            for (size_t j = 0; j < n; ++j) M[row][j] = F.sub(M[row][j], F.mul(f, M[col + 1][j]));
            for (size_t rr = 0; rr < n; ++rr)
                M[rr][col + 1] = F.add(M[rr][col + 1], F.mul(f, M[rr][row]));
        }
    }
    std::vector<gp::Poly> p(n + 1);
    p[0] = gp::one();
    for (size_t i = 1; i <= n; ++i) {
        gp::Poly t = gp::mul(F, gp::Poly{F.neg(M[i - 1][i - 1]), 1}, p[i - 1]);
        uint64_t subdiag = 1;
        for (size_t k = 1; k < i; ++k) {
            subdiag = F.mul(subdiag, M[i - k][i - k - 1]);
            uint64_t c = F.mul(M[i - 1 - k][i - 1], subdiag);
            if (c) t = gp::sub(F, t, gp::scale(F, c, p[i - 1 - k]));
        }
        p[i] = std::move(t);
    }
    return p[n];
}

}  // namespace

CentrePoly reduced_norm_charpoly(const SkewPoly& p) {
    const SkewContext& ctx = p.ctx();
    if (p.is_zero() || !p.is_monic())
        throw math_error("reduced_norm_charpoly requires a monic polynomial");
    if (p.deg() < 1) throw math_error("reduced_norm_charpoly requires deg >= 1");
    const Gf& F = ctx.field();
    uint32_t r = ctx.r();
    size_t d = size_t(p.deg());
    // matrix of phi (columns = images of 1, X, ..., X^{d-1})
    std::vector<std::vector<uint64_t>> C(d, std::vector<uint64_t>(d, 0));
    for (size_t i = 0; i + 1 < d; ++i) C[i + 1][i] = 1;
    for (size_t i = 0; i < d; ++i) C[i][d - 1] = F.neg(p.coeff(int(i)));
    // phi^r = C sigma(C) ... sigma^{r-1}(C); phi is sigma-semilinear
    std::vector<std::vector<uint64_t>> acc = C;
    std::vector<std::vector<uint64_t>> tw = C;
    for (uint32_t jj = 1; jj < r; ++jj) {
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) tw[i][j] = ctx.sigma(tw[i][j]);
        std::vector<std::vector<uint64_t>> next(d, std::vector<uint64_t>(d, 0));
        for (size_t i = 0; i < d; ++i)
            for (size_t k = 0; k < d; ++k) {
                if (!acc[i][k]) continue;
                for (size_t j = 0; j < d; ++j)
                    if (tw[k][j]) next[i][j] = F.add(next[i][j], F.mul(acc[i][k], tw[k][j]));
            }
        acc = std::move(next);
    }
    gp::Poly chi = charpoly_k(F, std::move(acc));
    gp::Poly out(chi.size());
    for (size_t i = 0; i < chi.size(); ++i) {
        if (!ctx.is_fixed(chi[i])) throw math_error("charpoly coefficient is not fixed by sigma");
        out[i] = ctx.project_sub(chi[i]);
    }
    return centre_from(ctx, std::move(out));
}

std::pair<uint64_t, CentrePoly> reduced_norm(const SkewPoly& p) {
    const SkewContext& ctx = p.ctx();
    if (p.is_zero()) throw math_error("reduced norm of the zero polynomial");
    uint64_t unit = ctx.project_sub(ctx.relative_norm(p.lead()));
    SkewPoly pm = monic(p);
    if (pm.deg() == 0) return {unit, centre_one(ctx)};
    CentrePoly nrm = pm.deg() < int(ctx.r()) ? reduced_norm_small(pm) : reduced_norm_matrix(pm);
    return {unit, nrm};
}

CentreFactorization commutative_factorize(const CentrePoly& c) {
    std::mt19937_64 rng(0xC0FFEE);
    return commutative_factorize(c, rng);
}

CentreFactorization commutative_factorize(const CentrePoly& c, std::mt19937_64& rng) {
    const SkewContext& ctx = ctx_of(c);
    if (c.is_zero()) throw math_error("factorization of the zero centre polynomial");
    auto f = gp::factorize(ctx.subfield(), c.c, rng);
    CentreFactorization out;
    out.unit = f.unit;
    for (auto& [poly, mult] : f.factors) out.factors.push_back({CentrePoly{c.ctx, poly}, mult});
    return out;
}

}  // namespace orepoly
