#include "orepoly/context.hpp"

#include <algorithm>
#include <numeric>

namespace orepoly {

namespace {

constexpr uint64_t kSigmaTableLimit = uint64_t(1) << 16;
constexpr uint64_t kDetSeed = 0x09e377;  // fixed seed for deterministic searches

// Solve M x = y over GF(p) where M is given column-major (n rows).
// Returns empty on inconsistency.
std::vector<uint32_t> solve_gfp(uint32_t p, std::vector<std::vector<uint32_t>> cols,
                                std::vector<uint32_t> y) {
    size_t nrows = y.size(), ncols = cols.size();
    auto inv_p = [p](uint32_t a) {
        uint64_t r = 1, b = a;
        for (uint32_t e = p - 2; e; e >>= 1) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
        }
        return uint32_t(r);
    };
    std::vector<size_t> pivot_col(nrows, SIZE_MAX);
    size_t rank = 0;
    for (size_t c = 0; c < ncols && rank < nrows; ++c) {
        size_t piv = SIZE_MAX;
        for (size_t rr = rank; rr < nrows; ++rr)
            if (cols[c][rr] % p != 0) {
                piv = rr;
                break;
            }
        if (piv == SIZE_MAX) continue;
        for (size_t cc = 0; cc < ncols; ++cc) std::swap(cols[cc][piv], cols[cc][rank]);
        std::swap(y[piv], y[rank]);
        uint32_t s = inv_p(cols[c][rank]);
        for (size_t cc = 0; cc < ncols; ++cc)
            cols[cc][rank] = uint32_t(uint64_t(cols[cc][rank]) * s % p);
        y[rank] = uint32_t(uint64_t(y[rank]) * s % p);
        for (size_t rr = 0; rr < nrows; ++rr) {
            if (rr == rank || cols[c][rr] % p == 0) continue;
            uint32_t f = cols[c][rr] % p;
            for (size_t cc = 0; cc < ncols; ++cc)
                cols[cc][rr] = uint32_t((cols[cc][rr] + uint64_t(p - f) * cols[cc][rank]) % p);
            y[rr] = uint32_t((y[rr] + uint64_t(p - f) * y[rank]) % p);
        }
        pivot_col[rank] = c;
        ++rank;
    }
    for (size_t rr = rank; rr < nrows; ++rr)
        if (y[rr] % p != 0) return {};
    std::vector<uint32_t> x(ncols, 0);
    for (size_t rr = 0; rr < rank; ++rr) x[pivot_col[rr]] = y[rr] % p;
    return x;
}

}  // namespace

SkewContext::SkewContext(uint32_t p, uint32_t n, uint32_t s, std::vector<uint32_t> modulus)
    : k_(p, n, std::move(modulus)),
      sub_(p, std::gcd(n, s)),
      s_(s) {
    if (s < 1 || s > n) throw math_error("frobenius exponent s must satisfy 1 <= s <= n");
    r_ = n / std::gcd(n, s);
    if (k_.order() <= kSigmaTableLimit) {
        sigma_table_.resize(k_.order());
        for (uint64_t a = 0; a < k_.order(); ++a) sigma_table_[a] = k_.frob(a, s_ % n);
    }
    build_embedding();
    choose_primitive();
    build_basis_matrix();
}

uint64_t SkewContext::sigma(uint64_t a) const {
    if (!sigma_table_.empty()) return sigma_table_[a];
    return k_.frob(a, s_ % k_.degree());
}

uint64_t SkewContext::sigma_pow(uint64_t a, int64_t j) const {
    int64_t jr = j % int64_t(r_);
    if (jr < 0) jr += r_;
    if (jr == 0) return a;
    if (!sigma_table_.empty() && jr <= 4) {
        for (int64_t i = 0; i < jr; ++i) a = sigma_table_[a];
        return a;
    }
    return k_.frob(a, (uint64_t(jr) * s_) % k_.degree());
}

std::vector<uint64_t> SkewContext::conjugates(uint64_t a) const {
    std::vector<uint64_t> out(r_);
    out[0] = a;
    for (uint32_t j = 1; j < r_; ++j) out[j] = sigma(out[j - 1]);
    return out;
}

uint64_t SkewContext::relative_norm(uint64_t a) const {
    uint64_t acc = a, conj = a;
    for (uint32_t j = 1; j < r_; ++j) {
        conj = sigma(conj);
        acc = k_.mul(acc, conj);
    }
    return acc;
}

void SkewContext::build_embedding() {
    uint32_t m = sub_.degree();
    if (m == 1) {
        sub_gen_in_k_ = 1;
        sub_pow_in_k_ = {1};
        return;
    }
    // lowest root in k of the subfield's defining polynomial
    gp::Poly f(sub_.modulus().begin(), sub_.modulus().end());
    std::mt19937_64 rng(kDetSeed);
    auto rts = gp::roots(k_, f, rng);
    if (rts.empty()) throw math_error("subfield modulus has no root in k");
    sub_gen_in_k_ = rts.front();
    sub_pow_in_k_.resize(m);
    sub_pow_in_k_[0] = 1;
    for (uint32_t l = 1; l < m; ++l) sub_pow_in_k_[l] = k_.mul(sub_pow_in_k_[l - 1], sub_gen_in_k_);
}

uint64_t SkewContext::embed_sub(uint64_t sub_packed) const {
    uint64_t out = 0;
    for (uint32_t l = 0; l < sub_.degree(); ++l) {
        uint32_t d = sub_.digit(sub_packed, l);
        if (d) out = k_.add(out, k_.mul(d, sub_pow_in_k_[l]));
    }
    return out;
}

uint64_t SkewContext::project_sub(uint64_t k_packed) const {
    if (!is_fixed(k_packed))
        throw math_error("element is not fixed by sigma; cannot project to the fixed field");
    std::vector<std::vector<uint32_t>> cols(sub_.degree());
    for (uint32_t l = 0; l < sub_.degree(); ++l) {
        cols[l].resize(k_.degree());
        for (uint32_t i = 0; i < k_.degree(); ++i) cols[l][i] = k_.digit(sub_pow_in_k_[l], i);
    }
    std::vector<uint32_t> y(k_.degree());
    for (uint32_t i = 0; i < k_.degree(); ++i) y[i] = k_.digit(k_packed, i);
    auto x = solve_gfp(k_.characteristic(), std::move(cols), std::move(y));
    if (x.empty() && k_packed != 0)
        throw math_error("fixed element outside the subfield image");  // cannot happen
    x.resize(sub_.degree(), 0);
    return sub_.from_digits(x);
}

void SkewContext::choose_primitive() {
    if (r_ == 1) {
        t_ = 1;
        t_conj_ = {1};
        pi_t_ = {sub_.neg(1), 1};  // T - 1
        return;
    }
    auto orbit_full = [&](uint64_t cand) {
        auto cj = conjugates(cand);
        for (uint32_t i = 0; i < r_; ++i)
            for (uint32_t j = i + 1; j < r_; ++j)
                if (cj[i] == cj[j]) return false;
        return true;
    };
    t_ = k_.var();
    if (!orbit_full(t_)) {
        // fallback scan; the canonical generator always has full orbit, but
        // keep the search for user-supplied moduli edge cases
        uint64_t cand = 2;
        while (cand < k_.order() && !orbit_full(cand)) ++cand;
        if (cand >= k_.order()) throw math_error("no primitive element over the fixed field");
        t_ = cand;
    }
    t_conj_ = conjugates(t_);
    // pi_t = prod (T - sigma^j(t)), computed over k, projected to k^sigma
    gp::Poly prod = gp::one();
    for (uint32_t j = 0; j < r_; ++j)
        prod = gp::mul(k_, prod, gp::Poly{k_.neg(t_conj_[j]), 1});
    pi_t_.resize(prod.size());
    for (size_t i = 0; i < prod.size(); ++i) pi_t_[i] = project_sub(prod[i]);
}

void SkewContext::build_basis_matrix() {
    // columns: GF(p)-digits of t^i * u^l, index i*m + l
    uint32_t n = k_.degree(), m = sub_.degree();
    std::vector<std::vector<uint32_t>> cols(n, std::vector<uint32_t>(n));
    uint64_t tp = 1;
    for (uint32_t i = 0; i < r_; ++i) {
        for (uint32_t l = 0; l < m; ++l) {
            uint64_t b = k_.mul(tp, sub_pow_in_k_[l]);
            for (uint32_t row = 0; row < n; ++row) cols[i * m + l][row] = k_.digit(b, row);
        }
        tp = k_.mul(tp, t_);
    }
    // invert by solving against each unit vector once (n small)
    basis_inv_.assign(n, {});
    for (uint32_t row = 0; row < n; ++row) {
        std::vector<uint32_t> y(n, 0);
        y[row] = 1;
        auto x = solve_gfp(k_.characteristic(), cols, y);
        if (x.empty()) throw math_error("primitive basis is singular");
        basis_inv_[row] = std::move(x);
    }
}

std::vector<uint64_t> SkewContext::t_coordinates(uint64_t a) const {
    uint32_t n = k_.degree(), m = sub_.degree(), p = k_.characteristic();
    std::vector<uint32_t> coords(n, 0);
    for (uint32_t row = 0; row < n; ++row) {
        uint32_t d = k_.digit(a, row);
        if (!d) continue;
        for (uint32_t j = 0; j < n; ++j)
            coords[j] = uint32_t((coords[j] + uint64_t(d) * basis_inv_[row][j]) % p);
    }
    std::vector<uint64_t> out(r_);
    for (uint32_t i = 0; i < r_; ++i) {
        std::vector<uint32_t> digs(coords.begin() + i * m, coords.begin() + (i + 1) * m);
        out[i] = sub_.from_digits(digs);
    }
    return out;
}

uint64_t SkewContext::from_t_coordinates(const std::vector<uint64_t>& coords) const {
    uint64_t out = 0, tp = 1;
    for (uint32_t i = 0; i < r_ && i < coords.size(); ++i) {
        out = k_.add(out, k_.mul(embed_sub(coords[i]), tp));
        tp = k_.mul(tp, t_);
    }
    return out;
}

std::string SkewContext::spec_string() const {
    std::string s = "GF(" + std::to_string(p()) + "^" + std::to_string(n()) + "; modulus=";
    for (uint32_t i = 0; i <= n(); ++i) {
        if (i) s += ",";
        s += std::to_string(k_.modulus()[i]);
    }
    s += "; frob=" + std::to_string(s_) + ")";
    return s;
}

// ---- FieldElement surface ----

namespace {
const SkewContext& same_ctx(const FieldElement& a, const FieldElement& b) {
    if (a.ctx == nullptr || b.ctx == nullptr) throw math_error("field element without context");
    if (a.ctx != b.ctx) throw math_error("field elements from different contexts");
    return *a.ctx;
}
}  // namespace

FieldElement fe(const SkewContext& ctx, uint64_t packed) { return {packed, &ctx}; }

FieldElement fe_add(FieldElement a, FieldElement b) {
    return {same_ctx(a, b).field().add(a.packed, b.packed), a.ctx};
}
FieldElement fe_sub(FieldElement a, FieldElement b) {
    return {same_ctx(a, b).field().sub(a.packed, b.packed), a.ctx};
}
FieldElement fe_mul(FieldElement a, FieldElement b) {
    return {same_ctx(a, b).field().mul(a.packed, b.packed), a.ctx};
}
FieldElement fe_inv(FieldElement a) { return {a.ctx->field().inv(a.packed), a.ctx}; }

FieldElement frobenius_power(FieldElement a, int64_t j) {
    return {a.ctx->sigma_pow(a.packed, j), a.ctx};
}

std::vector<FieldElement> conjugates(FieldElement a) {
    std::vector<FieldElement> out;
    for (uint64_t c : a.ctx->conjugates(a.packed)) out.push_back({c, a.ctx});
    return out;
}

FieldElement relative_norm(FieldElement a) { return {a.ctx->relative_norm(a.packed), a.ctx}; }

FieldElement coerce_up(const SkewContext& ctx, uint64_t sub_packed) {
    return {ctx.embed_sub(sub_packed), &ctx};
}

uint64_t coerce_down(FieldElement a) { return a.ctx->project_sub(a.packed); }

}  // namespace orepoly
