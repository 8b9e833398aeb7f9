#include "orepoly/factor.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "orepoly/count.hpp"

namespace orepoly {

FactorConfig& factor_config() {
    static FactorConfig cfg;
    return cfg;
}

std::pair<int, SkewPoly> strip_x(const SkewPoly& p) {
    if (p.is_zero()) throw math_error("strip_x of the zero polynomial");
    int v = 0;
    while (p.coeff(v) == 0) ++v;
    // right-multiplication by X^v is a plain shift, so stripping is too
    std::vector<uint64_t> c(p.coeffs().begin() + v, p.coeffs().end());
    return {v, SkewPoly(p.ctx(), std::move(c), p.twist())};
}

bool is_irreducible(const SkewPoly& p) {
    if (p.is_zero() || p.deg() < 1) throw math_error("irreducibility needs degree >= 1");
    if (p.deg() == 1) return true;
    return c_irreducible(reduced_norm(p).second);
}

// ---- arithmetic in E = k^sigma[Y]/(N) and in E[T] ----

namespace {

struct EF {
    const Gf& S;
    const gp::Poly& N;  // monic irreducible

    gp::Poly add(const gp::Poly& a, const gp::Poly& b) const { return gp::add(S, a, b); }
    gp::Poly sub(const gp::Poly& a, const gp::Poly& b) const { return gp::sub(S, a, b); }
    gp::Poly mul(const gp::Poly& a, const gp::Poly& b) const {
        return gp::mod(S, gp::mul(S, a, b), N);
    }
    gp::Poly neg(const gp::Poly& a) const { return gp::scale(S, S.neg(1), a); }
    gp::Poly inv(const gp::Poly& a) const { return gp::inv_mod(S, a, N); }
    gp::Poly powq(const gp::Poly& a) const { return gp::powmod(S, a, gp::bigint(S.order()), N); }
    bool is_zero(const gp::Poly& a) const { return a.empty(); }
    gp::Poly one() const { return gp::one(); }
    gp::Poly random(std::mt19937_64& rng) const {
        return gp::random_below(S, std::max(gp::deg(N), 1), rng);
    }
};

using EPoly = std::vector<gp::Poly>;  // element i = coefficient of T^i, in E

void etrim(EPoly& f) {
    while (!f.empty() && f.back().empty()) f.pop_back();
}
int edeg(const EPoly& f) { return int(f.size()) - 1; }

EPoly eadd(const EF& E, const EPoly& a, const EPoly& b) {
    EPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        gp::Poly x = i < a.size() ? a[i] : gp::Poly{};
        gp::Poly y = i < b.size() ? b[i] : gp::Poly{};
        out[i] = E.add(x, y);
    }
    etrim(out);
    return out;
}

EPoly esub(const EF& E, const EPoly& a, const EPoly& b) {
    EPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        gp::Poly x = i < a.size() ? a[i] : gp::Poly{};
        gp::Poly y = i < b.size() ? b[i] : gp::Poly{};
        out[i] = E.sub(x, y);
    }
    etrim(out);
    return out;
}

EPoly emul(const EF& E, const EPoly& a, const EPoly& b) {
    if (a.empty() || b.empty()) return {};
    EPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].empty()) out[i + j] = E.add(out[i + j], E.mul(a[i], b[j]));
    }
    etrim(out);
    return out;
}

EPoly escale(const EF& E, const gp::Poly& c, const EPoly& a) {
    EPoly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = E.mul(c, a[i]);
    etrim(out);
    return out;
}

std::pair<EPoly, EPoly> edivmod(const EF& E, const EPoly& a, const EPoly& b) {
    if (b.empty()) throw math_error("E-polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    EPoly r = a, q(a.size() - b.size() + 1);
    gp::Poly linv = E.inv(b.back());
    for (size_t shift = q.size(); shift-- > 0;) {
        size_t i = shift + b.size() - 1;
        if (r[i].empty()) continue;
        gp::Poly c = E.mul(r[i], linv);
        q[shift] = c;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].empty()) r[shift + j] = E.sub(r[shift + j], E.mul(c, b[j]));
    }
    etrim(q);
    etrim(r);
    return {q, r};
}

EPoly emod(const EF& E, const EPoly& a, const EPoly& b) { return edivmod(E, a, b).second; }

EPoly emonic(const EF& E, const EPoly& a) {
    if (a.empty()) throw math_error("monic of zero E-polynomial");
    return escale(E, E.inv(a.back()), a);
}

EPoly egcd(const EF& E, EPoly a, EPoly b) {
    while (!b.empty()) {
        EPoly r = emod(E, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : emonic(E, a);
}

gp::Poly eeval(const EF& E, const EPoly& f, const gp::Poly& x) {
    gp::Poly r;
    for (size_t i = f.size(); i-- > 0;) r = E.add(E.mul(r, x), f[i]);
    return r;
}

EPoly ecompose_mod(const EF& E, const EPoly& g, const EPoly& h, const EPoly& f) {
    EPoly r;
    for (size_t i = g.size(); i-- > 0;) {
        r = emod(E, emul(E, r, h), f);
        if (!g[i].empty()) r = eadd(E, r, EPoly{g[i]});
    }
    return r;
}

EPoly epow_u64(const EF& E, EPoly base, uint64_t e, const EPoly& f) {
    EPoly r = EPoly{E.one()};
    base = emod(E, base, f);
    while (e) {
        if (e & 1) r = emod(E, emul(E, r, base), f);
        base = emod(E, emul(E, base, base), f);
        e >>= 1;
    }
    return r;
}

// T^(#E) mod f where #E = q^delta: one q-power then delta-1 Frobenius steps
// by modular composition with coefficientwise q-powers.
EPoly e_frob_full(const EF& E, const EPoly& f) {
    int delta = gp::deg(E.N);
    EPoly tq = epow_u64(E, EPoly{{}, E.one()}, E.S.order(), f);
    EPoly acc = tq;  // T^{q^1}
    for (int j = 1; j < delta; ++j) {
        EPoly twisted(acc.size());
        for (size_t i = 0; i < acc.size(); ++i)
            twisted[i] = acc[i].empty() ? gp::Poly{} : E.powq(acc[i]);
        acc = ecompose_mod(E, twisted, tq, f);
    }
    return acc;
}

// all roots in E of a product of distinct linear factors
void esplit_linears(const EF& E, const EPoly& w, std::mt19937_64& rng,
                    std::vector<gp::Poly>& out) {
    if (edeg(w) < 1) return;
    if (edeg(w) == 1) {
        out.push_back(E.neg(E.mul(w[0], E.inv(w[1]))));
        return;
    }
    int delta = gp::deg(E.N);
    EPoly splitter;
    while (true) {
        // random element of E[T]/(w); an affine T + c cannot split roots of
        // equal trace in characteristic 2, so draw full random coefficients
        EPoly a(size_t(edeg(w)));
        for (auto& c : a) c = E.random(rng);
        etrim(a);
        if (edeg(a) < 1) continue;
        EPoly b;
        if (E.S.characteristic() == 2) {
            uint64_t bits = uint64_t(delta) * E.S.degree();
            EPoly t = emod(E, a, w), acc = t;
            for (uint64_t i = 1; i < bits; ++i) {
                t = emod(E, emul(E, t, t), w);
                acc = eadd(E, acc, t);
            }
            b = acc;
        } else {
            gp::bigint half = (boost::multiprecision::pow(gp::bigint(E.S.order()),
                                                          unsigned(delta)) -
                               1) /
                              2;
            EPoly base = emod(E, a, w), r{E.one()};
            gp::bigint e = half;
            while (e > 0) {
                if ((e & 1) != 0) r = emod(E, emul(E, r, base), w);
                base = emod(E, emul(E, base, base), w);
                e >>= 1;
            }
            b = esub(E, r, EPoly{E.one()});
        }
        EPoly g = egcd(E, b, w);
        if (edeg(g) > 0 && edeg(g) < edeg(w)) {
            splitter = g;
            break;
        }
    }
    esplit_linears(E, splitter, rng, out);
    esplit_linears(E, edivmod(E, w, splitter).first, rng, out);
}

// simple roots of f in E
std::vector<gp::Poly> e_simple_roots(const EF& E, const EPoly& f, std::mt19937_64& rng) {
    EPoly frob = e_frob_full(E, f);
    EPoly w = egcd(E, esub(E, frob, EPoly{{}, E.one()}), f);
    std::vector<gp::Poly> all;
    esplit_linears(E, w, rng, all);
    // derivative of f over E
    EPoly fp;
    for (size_t i = 1; i < f.size(); ++i) {
        gp::Poly c = gp::scale(E.S, E.S.from_int(int64_t(i)), f[i]);
        fp.push_back(gp::mod(E.S, c, E.N));
    }
    etrim(fp);
    std::vector<gp::Poly> simple;
    for (auto& a : all)
        if (!E.is_zero(eeval(E, fp, a))) simple.push_back(a);
    return simple;
}

// E-coordinate array of an element of k[X,sigma]/(embed(N)): the coefficient
// of t^i in the component C_j where W = sum_j C_j(X^r) X^j, i, j < r.
std::vector<gp::Poly> e_coordinates(const SkewPoly& w, const gp::Poly& N) {
    const SkewContext& ctx = w.ctx();
    uint32_t r = ctx.r();
    int delta = gp::deg(N);
    std::vector<gp::Poly> out(size_t(r) * r);
    if (w.is_zero()) return out;
    for (int idx = 0; idx <= w.deg(); ++idx) {
        uint64_t a = w.coeff(idx);
        if (!a) continue;
        uint32_t j = uint32_t(idx) % r;
        size_t u = uint32_t(idx) / r;
        auto coords = ctx.t_coordinates(a);
        for (uint32_t i = 0; i < r; ++i) {
            if (!coords[i]) continue;
            auto& cell = out[size_t(i) * r + j];
            if (cell.size() <= u) cell.resize(u + 1, 0);
            cell[u] = coords[i];
        }
    }
    for (auto& cell : out) {
        gp::trim(ctx.subfield(), cell);
        if (gp::deg(cell) >= delta) throw math_error("E-coordinate exceeds the residue degree");
    }
    return out;
}

}  // namespace

// ---- type computation ----

TypeProfile type_profile(const SkewPoly& p) {
    if (p.is_zero() || !p.is_monic()) throw math_error("type_profile requires a monic polynomial");
    if (p.coeff(0) == 0) throw math_error("type_profile requires an etale polynomial");
    TypeProfile out;
    if (p.deg() == 0) return out;
    auto [unit, nrm] = reduced_norm(p);
    (void)unit;
    auto fac = commutative_factorize(nrm);
    for (auto& [n, mult] : fac.factors) {
        int delta = n.deg();
        TypeEntry entry;
        entry.n = n;
        SkewPoly cur = p;
        SkewPoly emb = centre_embed(n);
        int total = 0;
        while (true) {
            SkewPoly g = rgcd(cur, emb);
            if (g.deg() == 0) break;
            if (g.deg() % delta != 0)
                throw math_error("type peeling produced a non-multiple degree");
            int e = g.deg() / delta;
            if (!entry.e_seq.empty() && e > entry.e_seq.back())
                throw math_error("type sequence is not nonincreasing");
            entry.e_seq.push_back(e);
            total += e;
            cur = quo_right(cur, g);
            if (cur.deg() == 0) break;
        }
        if (total != mult) throw math_error("type peeling missed norm multiplicity");
        entry.dual_seq = dual_type(entry.e_seq);
        out.entries.push_back(std::move(entry));
    }
    return out;
}

bool are_similar(const SkewPoly& p, const SkewPoly& q) {
    if (p.is_zero() || q.is_zero() || !p.is_monic() || !q.is_monic())
        throw math_error("similarity requires monic nonzero polynomials");
    if (p.ctx_ptr() != q.ctx_ptr()) throw math_error("similarity across different contexts");
    if (p.deg() != q.deg()) return false;
    auto [vp, pe] = strip_x(p);
    auto [vq, qe] = strip_x(q);
    if (vp != vq) return false;
    if (pe.deg() == 0) return true;
    TypeProfile tp = type_profile(pe), tq = type_profile(qe);
    if (tp.entries.size() != tq.entries.size()) return false;
    for (size_t i = 0; i < tp.entries.size(); ++i) {
        // commutative_factorize output is sorted, so entries align
        if (!(tp.entries[i].n == tq.entries[i].n)) return false;
        if (tp.entries[i].e_seq != tq.entries[i].e_seq) return false;
    }
    return true;
}

// ---- reduction to pure types ----

std::vector<SplitGroup> split_by_norm_factors(
    const SkewPoly& p, const std::vector<std::pair<CentrePoly, int>>& norm_factors) {
    const SkewContext& ctx = p.ctx();
    if (p.is_zero() || !p.is_monic())
        throw math_error("split_by_norm_factors requires a monic polynomial");
    if (p.coeff(0) == 0) throw math_error("split_by_norm_factors requires an etale polynomial");
    // the multiset must multiply to the norm
    CentrePoly prod = centre_one(ctx);
    for (auto& [n, mult] : norm_factors) prod = c_mul(prod, c_pow(n, mult));
    if (!(prod == reduced_norm(p).second))
        throw math_error("norm factor multiset does not match the reduced norm");

    std::vector<SplitGroup> groups;
    std::function<void(const SkewPoly&, size_t, size_t)> split = [&](const SkewPoly& cur,
                                                                     size_t lo, size_t hi) {
        if (lo >= hi) {
            if (cur.deg() != 0) throw math_error("split exhausted factors with residue left");
            return;
        }
        if (hi - lo == 1) {
            const CentrePoly& n = norm_factors[lo].first;
            SkewPoly emb = centre_embed(n);
            SplitGroup g{n, {}};
            SkewPoly rest = cur;
            while (rest.deg() > 0) {
                SkewPoly piece = rgcd(rest, emb);
                if (piece.deg() == 0) throw math_error("pure-type peeling stalled");
                g.pieces.push_back(piece);
                rest = quo_right(rest, piece);
            }
            std::reverse(g.pieces.begin(), g.pieces.end());  // product order
            groups.push_back(std::move(g));
            return;
        }
        // balance the cut on primary-part degrees
        long long total = 0;
        std::vector<long long> cum(hi - lo + 1, 0);
        for (size_t i = lo; i < hi; ++i) {
            total += (long long)norm_factors[i].first.deg() * norm_factors[i].second;
            cum[i - lo + 1] = total;
        }
        size_t mid = lo + 1;
        long long best = -1;
        for (size_t i = lo + 1; i < hi; ++i) {
            long long diff = std::llabs(2 * cum[i - lo] - total);
            if (best < 0 || diff < best) {
                best = diff;
                mid = i;
            }
        }
        CentrePoly right = centre_one(ctx);
        for (size_t i = mid; i < hi; ++i)
            right = c_mul(right, c_pow(norm_factors[i].first, norm_factors[i].second));
        SkewPoly q1 = rgcd(cur, centre_embed(right));
        SkewPoly q2 = quo_right(cur, q1);
        split(q2, lo, mid);
        split(q1, mid, hi);
    };
    split(monic(p), 0, norm_factors.size());
    return groups;
}

// ---- factoring pure types ----

SkewPoly first_factor(const SkewPoly& p, const CentrePoly& n, std::mt19937_64& rng) {
    const SkewContext& ctx = p.ctx();
    if (p.is_zero() || !p.is_monic()) throw math_error("first_factor requires a monic polynomial");
    int delta = n.deg();
    int e = p.deg() / delta;
    if (p.deg() % delta != 0) throw math_error("first_factor: degree is not a multiple of deg N");
    if (e == 1) return monic(p);

    SkewPoly embN = centre_embed(n);
    auto [qq, rr] = divmod_right(embN, p);
    if (!rr.is_zero()) throw math_error("first_factor: P does not divide embed(N)");
    SkewPoly Q = qq;  // embed(N) = Q*P = P*Q

    EF E{ctx.subfield(), n.c};
    int budget = factor_config().first_factor_budget_per_e * e;
    for (int attempt = 0; attempt < budget; ++attempt) {
        SkewPoly rt = random_skew_below(ctx, p.deg(), rng);
        SkewPoly r0 = rem_right(mul(rt, Q), embN);
        // Right multiplication by R_0 acts on the module k[X,sigma]Q/(N),
        // which has E-dimension e; its powers applied to the cyclic
        // generator Q give the dependence that defines F.  (The raw ring
        // powers R_0^i need not satisfy a degree-e relation.)
        std::vector<std::vector<gp::Poly>> rows;
        rows.push_back(e_coordinates(Q, n.c));
        SkewPoly pw = Q;
        for (int i = 1; i <= e; ++i) {
            pw = rem_right(mul(pw, r0), embN);
            rows.push_back(e_coordinates(pw, n.c));
        }
        // solve rows[e] = sum_{i<e} lambda_i rows[i] over E
        size_t ncols = rows[0].size();
        std::vector<std::vector<gp::Poly>> m(e, std::vector<gp::Poly>(ncols));
        for (int i = 0; i < e; ++i) m[i] = rows[i];
        std::vector<std::vector<gp::Poly>> combo(e, std::vector<gp::Poly>(e));
        for (int i = 0; i < e; ++i) combo[i][i] = E.one();
        std::vector<gp::Poly> target = rows[e];
        std::vector<gp::Poly> lambda(e);
        std::vector<bool> used(e, false);
        bool solved = true;
        for (size_t col = 0; col < ncols; ++col) {
            int piv = -1;
            for (int i = 0; i < e; ++i)
                if (!used[i] && !m[i][col].empty()) {
                    piv = i;
                    break;
                }
            if (piv < 0) {
                if (!target[col].empty()) {
                    solved = false;  // dependence missing, cannot happen
                    break;
                }
                continue;
            }
            used[piv] = true;
            gp::Poly inv = E.inv(m[piv][col]);
            for (int i = 0; i < e; ++i) {
                if (i == piv || m[i][col].empty()) continue;
                gp::Poly f = E.mul(m[i][col], inv);
                for (size_t cc = col; cc < ncols; ++cc)
                    m[i][cc] = E.sub(m[i][cc], E.mul(f, m[piv][cc]));
                for (int l = 0; l < e; ++l)
                    combo[i][l] = E.sub(combo[i][l], E.mul(f, combo[piv][l]));
            }
            if (!target[col].empty()) {
                gp::Poly f = E.mul(target[col], inv);
                for (size_t cc = col; cc < ncols; ++cc)
                    target[cc] = E.sub(target[cc], E.mul(f, m[piv][cc]));
                for (int l = 0; l < e; ++l)
                    lambda[l] = E.add(lambda[l], E.mul(f, combo[piv][l]));
            }
        }
        if (!solved) continue;

        // F(T) = T^e - sum lambda_i T^i
        EPoly F(e + 1);
        F[e] = E.one();
        for (int i = 0; i < e; ++i) F[i] = E.neg(lambda[i]);
        etrim(F);
        if (edeg(F) != e) continue;
        auto roots = e_simple_roots(E, F, rng);
        if (roots.empty()) continue;
        SkewPoly lift = centre_embed(CentrePoly{&ctx, roots.front()});
        SkewPoly cand = rgcd(p, sub(mul(Q, rt), lift));
        if (!cand.is_zero() && cand.deg() == delta) return cand;
    }
    throw retry_error("first_factor exhausted its retry budget");
}

std::vector<SkewPoly> factor_step(const SkewPoly& p, const CentrePoly& n, const SkewPoly& p1,
                                  std::mt19937_64& rng) {
    const SkewContext& ctx = p.ctx();
    if (p.is_zero() || !p.is_monic()) throw math_error("factor_step requires a monic polynomial");
    int delta = n.deg();
    SkewPoly embN = centre_embed(n);
    std::vector<SkewPoly> out;  // rightmost first, reversed at the end
    SkewPoly cur = p;
    SkewPoly f = p1;
    while (cur.deg() > delta) {
        auto [qcur, rem] = divmod_right(embN, cur);
        if (!rem.is_zero())
            throw math_error("factor_step: intermediate quotient does not divide embed(N)");
        bool advanced = false;
        for (int attempt = 0; attempt < factor_config().factor_step_budget; ++attempt) {
            SkewPoly rnd = random_skew_below(ctx, embN.deg(), rng);
            SkewPoly a = rgcd(cur, mul(mul(f, qcur), rnd));
            if (a.is_zero()) continue;
            SkewPoly l = llcm(a, f);
            SkewPoly btil = quo_right(l, f);
            if (!btil.is_zero() && btil.deg() == delta) {
                out.push_back(f);
                cur = quo_right(cur, f);
                f = btil;
                advanced = true;
                break;
            }
        }
        if (!advanced) f = first_factor(cur, n, rng);
    }
    out.push_back(cur.deg() == delta ? monic(cur) : f);
    std::reverse(out.begin(), out.end());
    return out;
}

FactorizationResult skew_factorization(const SkewPoly& p, std::mt19937_64& rng) {
    if (p.is_zero()) throw math_error("factorization of the zero polynomial");
    FactorizationResult out;
    out.unit = p.lead();
    auto [v, et] = strip_x(monic(p));
    out.x_power = v;
    if (et.deg() == 0) return out;
    auto fac = commutative_factorize(reduced_norm(et).second);
    auto groups = split_by_norm_factors(et, fac.factors);
    for (auto& g : groups) {
        for (auto& piece : g.pieces) {
            int e = piece.deg() / g.n.deg();
            if (e == 1) {
                out.factors.push_back(piece);
                continue;
            }
            SkewPoly p1 = first_factor(piece, g.n, rng);
            auto seq = factor_step(piece, g.n, p1, rng);
            for (auto& f : seq) out.factors.push_back(std::move(f));
        }
    }
    return out;
}

}  // namespace orepoly
