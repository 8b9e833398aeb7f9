#include "orepoly/count.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "orepoly/factor.hpp"

namespace orepoly {

std::vector<int> dual_type(const std::vector<int>& e_seq) {
    for (size_t i = 0; i < e_seq.size(); ++i) {
        if (e_seq[i] <= 0) throw math_error("dual_type requires positive entries");
        if (i && e_seq[i] > e_seq[i - 1]) throw math_error("dual_type requires a nonincreasing sequence");
    }
    if (e_seq.empty()) return {};
    std::vector<int> out(e_seq[0]);
    for (int j = 0; j < e_seq[0]; ++j)
        out[j] = int(std::count_if(e_seq.begin(), e_seq.end(), [&](int e) { return e > j; }));
    return out;
}

namespace {

// one-cell decrements of a dual-type table together with their weights
struct PathMove {
    bigint weight;
    std::vector<int> reduced;
};

std::vector<PathMove> admissible_moves(uint64_t q, int delta, const std::vector<int>& a) {
    std::vector<PathMove> out;
    int m = int(a.size());
    for (int i = 0; i < m; ++i) {
        if (i + 1 < m && a[i] == a[i + 1]) continue;  // only the last cell of a run
        int i0 = i;
        while (i0 > 0 && a[i0 - 1] == a[i]) --i0;
        bigint w = 0;
        for (int l = i0; l <= i; ++l) w += boost::multiprecision::pow(bigint(q), unsigned(delta * l));
        PathMove mv;
        mv.weight = w;
        mv.reduced = a;
        mv.reduced[i] -= 1;
        if (mv.reduced[i] == 0) mv.reduced.erase(mv.reduced.begin() + i);
        out.push_back(std::move(mv));
    }
    return out;
}

using MemoKey = std::tuple<uint64_t, int, std::vector<int>>;
std::map<MemoKey, bigint> g_count_memo;
std::mutex g_count_mutex;

}  // namespace

bigint count_type_e_step(uint64_t q, int delta, const std::vector<int>& a_seq) {
    for (size_t i = 0; i < a_seq.size(); ++i) {
        if (a_seq[i] <= 0) throw math_error("count table entries must be positive");
        if (i && a_seq[i] > a_seq[i - 1]) throw math_error("count table must be nonincreasing");
    }
    if (a_seq.empty()) return 1;
    MemoKey key{q, delta, a_seq};
    {
        std::lock_guard<std::mutex> lk(g_count_mutex);
        auto it = g_count_memo.find(key);
        if (it != g_count_memo.end()) return it->second;
    }
    bigint total = 0;
    for (auto& mv : admissible_moves(q, delta, a_seq))
        total += mv.weight * count_type_e_step(q, delta, mv.reduced);
    {
        std::lock_guard<std::mutex> lk(g_count_mutex);
        g_count_memo.emplace(std::move(key), total);
    }
    return total;
}

namespace {

bigint factorial(int n) {
    bigint f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

bigint count_from_profile(const SkewContext& ctx, const TypeProfile& tp) {
    bigint result = 1;
    int tau_total = 0;
    bigint tau_fact_prod = 1;
    for (auto& entry : tp.entries) {
        int tau = 0;
        for (int e : entry.e_seq) tau += e;
        tau_total += tau;
        tau_fact_prod *= factorial(tau);
        result *= count_type_e_step(ctx.q(), entry.n.deg(), entry.dual_seq);
    }
    return result * factorial(tau_total) / tau_fact_prod;
}

bigint count_factorizations(const SkewPoly& p) {
    if (p.is_zero()) throw math_error("count_factorizations of the zero polynomial");
    SkewPoly pm = monic(p);
    if (pm.deg() == 0) return 1;
    if (pm.coeff(0) == 0)
        throw math_error("count_factorizations requires an etale polynomial (strip X first)");
    TypeProfile tp = type_profile(pm);
    return count_from_profile(p.ctx(), tp);
}

// ---- uniform sampling ----

namespace {

// uniform bigint in [0, bound)
bigint random_below_big(const bigint& bound, std::mt19937_64& rng) {
    if (bound <= 0) throw math_error("random_below_big: empty range");
    size_t bits = boost::multiprecision::msb(bound) + 1;
    while (true) {
        bigint v = 0;
        for (size_t got = 0; got < bits; got += 64) {
            v <<= 64;
            v |= bigint(rng());
        }
        v >>= (((bits + 63) / 64) * 64 - bits);
        if (v < bound) return v;
    }
}

// sub-coordinate vector of a skew polynomial class mod P (k-dim = deg P)
std::vector<uint64_t> sub_coords(const SkewPoly& w, int degp) {
    const SkewContext& ctx = w.ctx();
    uint32_t r = ctx.r();
    std::vector<uint64_t> out(size_t(degp) * r, 0);
    if (w.is_zero()) return out;
    for (int i = 0; i <= w.deg(); ++i) {
        auto coords = ctx.t_coordinates(w.coeff(i));
        for (uint32_t v = 0; v < r; ++v) out[size_t(i) * r + v] = coords[v];
    }
    return out;
}

// rank over the subfield of a list of vectors
size_t sub_rank(const Gf& S, std::vector<std::vector<uint64_t>> rows) {
    size_t rank = 0, ncols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t piv = SIZE_MAX;
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col]) {
                piv = i;
                break;
            }
        if (piv == SIZE_MAX) continue;
        std::swap(rows[piv], rows[rank]);
        uint64_t inv = S.inv(rows[rank][col]);
        for (size_t j = col; j < ncols; ++j) rows[rank][j] = S.mul(inv, rows[rank][j]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || !rows[i][col]) continue;
            uint64_t f = rows[i][col];
            for (size_t j = col; j < ncols; ++j)
                rows[i][j] = S.sub(rows[i][j], S.mul(f, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

SkewPoly random_right_divisor(const SkewPoly& p, const CentrePoly& n, std::mt19937_64& rng) {
    const SkewContext& ctx = p.ctx();
    if (p.is_zero() || !p.is_monic())
        throw math_error("random_right_divisor requires a monic polynomial");
    int delta = n.deg();
    if (p.deg() % delta != 0)
        throw math_error("random_right_divisor: degree is not a multiple of deg N");
    int e = p.deg() / delta;
    if (e == 1) return monic(p);
    SkewPoly embN = centre_embed(n);
    auto [q, rem] = divmod_right(embN, p);
    if (!rem.is_zero()) throw math_error("random_right_divisor: P does not divide embed(N)");

    SkewPoly p0 = first_factor(p, n, rng);
    const Gf& S = ctx.subfield();
    int degp = p.deg();
    for (int attempt = 0; attempt < factor_config().divisor_budget; ++attempt) {
        // u = right multiplication by Q*R, uniform on End_phi(D_P)
        SkewPoly rr = random_skew_below(ctx, degp, rng);
        SkewPoly qr = rem_right(mul(q, rr), p);
        // orbit vectors u^i(x0) with x0 the class of P0
        std::vector<SkewPoly> orbit(e);
        orbit[0] = p0;
        for (int i = 1; i < e; ++i) orbit[i] = rem_right(mul(orbit[i - 1], qr), p);
        // projected cyclicity test: the E-span of the orbit has E-dim e,
        // checked as sub-rank of {Y^a u^i x0} = e*delta
        std::vector<std::vector<uint64_t>> rows;
        for (int i = 0; i < e; ++i) {
            SkewPoly w = orbit[i];
            for (int a = 0; a < delta; ++a) {
                rows.push_back(sub_coords(w, degp));
                if (a + 1 < delta) {
                    std::vector<uint64_t> shifted(w.coeffs().size() + ctx.r(), 0);
                    std::copy(w.coeffs().begin(), w.coeffs().end(), shifted.begin() + ctx.r());
                    w = rem_right(SkewPoly(ctx, std::move(shifted), w.twist()), p);
                }
            }
        }
        if (sub_rank(S, std::move(rows)) != size_t(e) * delta) continue;
        // z = M(u)(x0) for a uniform E-polynomial M of degree < e
        SkewPoly z = skew_zero(ctx);
        bool all_zero = true;
        for (int i = 0; i < e; ++i) {
            gp::Poly mi = gp::random_below(S, delta, rng);
            if (mi.empty()) continue;
            all_zero = false;
            z = add(z, rem_right(mul(centre_embed(CentrePoly{&ctx, mi}), orbit[i]), p));
        }
        if (all_zero || z.is_zero()) continue;
        SkewPoly g = rgcd(p, z);
        if (!g.is_zero() && g.deg() == delta) return g;
    }
    throw retry_error("random_right_divisor exhausted its retry budget");
}

FactorizationResult random_factorization(const SkewPoly& p, std::mt19937_64& rng) {
    const SkewContext& ctx = p.ctx();
    if (p.is_zero()) throw math_error("random_factorization of the zero polynomial");
    FactorizationResult out;
    out.unit = p.lead();
    auto [v, et] = strip_x(monic(p));
    out.x_power = v;
    SkewPoly cur = et;
    std::vector<SkewPoly> rightmost_first;
    while (cur.deg() > 0) {
        TypeProfile tp = type_profile(cur);
        // weight of each centre factor = number of factorizations whose
        // rightmost factor has that norm
        std::vector<bigint> class_weight(tp.entries.size(), 0);
        std::vector<bigint> class_max(tp.entries.size(), 0);
        bigint total = 0;
        for (size_t l = 0; l < tp.entries.size(); ++l) {
            auto& entry = tp.entries[l];
            for (auto& mv : admissible_moves(ctx.q(), entry.n.deg(), entry.dual_seq)) {
                TypeProfile after = tp;
                if (mv.reduced.empty())
                    after.entries.erase(after.entries.begin() + long(l));
                else {
                    after.entries[l].dual_seq = mv.reduced;
                    after.entries[l].e_seq = dual_type(mv.reduced);
                }
                bigint c_after = count_from_profile(ctx, after);
                class_weight[l] += mv.weight * c_after;
                class_max[l] = std::max(class_max[l], c_after);
            }
            total += class_weight[l];
        }
        // pick the norm class of the rightmost factor
        bigint draw = random_below_big(total, rng);
        size_t pick = 0;
        while (draw >= class_weight[pick]) {
            draw -= class_weight[pick];
            ++pick;
        }
        auto& entry = tp.entries[pick];
        // all norm-N divisors of cur right-divide the socle rgcd(cur, embed(N))
        SkewPoly socle = rgcd(cur, centre_embed(entry.n));
        bool accepted = false;
        for (int attempt = 0; attempt < factor_config().divisor_budget; ++attempt) {
            SkewPoly d = random_right_divisor(socle, entry.n, rng);
            SkewPoly next = quo_right(cur, d);
            bigint c_next = next.deg() == 0
                                ? bigint(1)
                                : count_from_profile(ctx, type_profile(next));
            if (random_below_big(class_max[pick], rng) < c_next) {
                rightmost_first.push_back(d);
                cur = next;
                accepted = true;
                break;
            }
        }
        if (!accepted) throw retry_error("random_factorization rejection loop exhausted");
    }
    out.factors.assign(rightmost_first.rbegin(), rightmost_first.rend());
    return out;
}

}  // namespace orepoly
