#include <algorithm>
#include <set>

#include "doctest.h"
#include "orepoly/count.hpp"
#include "orepoly/factor.hpp"
#include "orepoly/oracle.hpp"
#include "orepoly/textio.hpp"

using namespace orepoly;

namespace {
const SkewContext& ctx4() {
    static SkewContext c(2, 2, 1);
    return c;
}
const SkewContext& ctx9() {
    static SkewContext c(3, 2, 1);
    return c;
}
const SkewContext& ctx16r4() {
    static SkewContext c(2, 4, 1);
    return c;
}
SkewPoly sp(const SkewContext& c, const std::string& s) { return parse_skew_poly(c, s); }
CentrePoly cp(const SkewContext& c, const std::string& s) { return parse_centre_poly(c, s); }

SkewPoly product_of(const SkewContext& ctx, const std::vector<SkewPoly>& fs) {
    SkewPoly acc = skew_one(ctx);
    for (const auto& f : fs) acc = mul(acc, f);
    return acc;
}

SkewPoly reconstruct(const SkewContext& ctx, const FactorizationResult& f) {
    SkewPoly acc = scale_left(f.unit, product_of(ctx, f.factors));
    std::vector<uint64_t> shifted(acc.coeffs().size() + f.x_power, 0);
    std::copy(acc.coeffs().begin(), acc.coeffs().end(), shifted.begin() + f.x_power);
    return SkewPoly(ctx, std::move(shifted), acc.twist());
}
}  // namespace

TEST_CASE("strip_x") {
    auto [v0, e0] = strip_x(sp(ctx4(), "X^2+1"));
    CHECK(v0 == 0);
    CHECK(e0 == sp(ctx4(), "X^2+1"));
    auto [v1, e1] = strip_x(sp(ctx4(), "X^3+X"));
    CHECK(v1 == 1);
    CHECK(e1 == sp(ctx4(), "X^2+1"));
    auto [v2, e2] = strip_x(sp(ctx4(), "X^4"));
    CHECK(v2 == 4);
    CHECK(e2 == skew_one(ctx4()));
    CHECK_THROWS_AS(strip_x(skew_zero(ctx4())), math_error);
}

TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(sp(ctx4(), "X+w")));
    CHECK_FALSE(is_irreducible(sp(ctx4(), "X^2+1")));
    CHECK_THROWS_AS(is_irreducible(skew_const(ctx4(), 1)), math_error);
    // agreement with the exhaustive oracle at desk scale
    std::mt19937_64 rng(3);
    for (const SkewContext* ctx : {&ctx4(), &ctx9()}) {
        for (int trial = 0; trial < 25; ++trial) {
            SkewPoly q = random_skew_monic(*ctx, 1 + int(rng() % 3), rng);
            if (q.coeff(0) == 0) continue;
            CHECK(is_irreducible(q) == oracle::is_irreducible_naive(q));
        }
    }
}

TEST_CASE("are_similar") {
    CHECK(are_similar(sp(ctx4(), "X+w"), sp(ctx4(), "X+w+1")));  // both have norm Y+1
    SkewPoly p = sp(ctx9(), "X^2 + w*X + 2");
    CHECK(are_similar(p, p));
    CHECK_FALSE(are_similar(sp(ctx4(), "X+w"), sp(ctx4(), "X^2+X+w")));  // degree mismatch
    CHECK_THROWS_AS(are_similar(sp(ctx4(), "w*X"), sp(ctx4(), "X")), math_error);
    // similarity is an equivalence on a sample: symmetric + transitive spot check
    std::mt19937_64 rng(17);
    std::vector<SkewPoly> sample;
    for (int i = 0; i < 12; ++i) sample.push_back(random_skew_monic(ctx4(), 2, rng));
    for (auto& a : sample)
        for (auto& b : sample) {
            if (a.coeff(0) == 0 || b.coeff(0) == 0) continue;
            CHECK(are_similar(a, b) == are_similar(b, a));
            for (auto& c : sample) {
                if (c.coeff(0) == 0) continue;
                if (are_similar(a, b) && are_similar(b, c)) CHECK(are_similar(a, c));
            }
        }
}

TEST_CASE("type_profile spec examples") {
    TypeProfile t1 = type_profile(sp(ctx4(), "X^2+1"));
    REQUIRE(t1.entries.size() == 1);
    CHECK(t1.entries[0].n == cp(ctx4(), "Y+1"));
    CHECK(t1.entries[0].e_seq == std::vector<int>{2});
    CHECK(t1.entries[0].dual_seq == std::vector<int>{1, 1});

    TypeProfile t2 = type_profile(sp(ctx4(), "X^2 + (w+1)*X + w"));  // (X+w)(X+1)
    REQUIRE(t2.entries.size() == 1);
    CHECK(t2.entries[0].e_seq == std::vector<int>{1, 1});
    CHECK(t2.entries[0].dual_seq == std::vector<int>{2});

    TypeProfile t3 = type_profile(sp(ctx4(), "X+w"));
    REQUIRE(t3.entries.size() == 1);
    CHECK(t3.entries[0].e_seq == std::vector<int>{1});

    CHECK_THROWS_AS(type_profile(sp(ctx4(), "X^2+X")), math_error);    // not etale
    CHECK_THROWS_AS(type_profile(sp(ctx4(), "w*X+1")), math_error);    // not monic
}

TEST_CASE("type_profile invariants on random inputs") {
    std::mt19937_64 rng(23);
    for (const SkewContext* ctx : {&ctx4(), &ctx9(), &ctx16r4()}) {
        for (int trial = 0; trial < 20; ++trial) {
            SkewPoly p = random_skew_monic(*ctx, 1 + int(rng() % 8), rng);
            if (p.coeff(0) == 0) continue;
            TypeProfile tp = type_profile(p);
            int degsum = 0;
            for (auto& e : tp.entries) {
                for (size_t i = 1; i < e.e_seq.size(); ++i)
                    CHECK(e.e_seq[i] <= e.e_seq[i - 1]);
                int tau = 0;
                for (int x : e.e_seq) tau += x;
                degsum += tau * e.n.deg();
                // dual of dual is the original
                CHECK(dual_type(e.dual_seq) == e.e_seq);
            }
            CHECK(degsum == p.deg());
        }
    }
}

TEST_CASE("split_by_norm_factors") {
    // X^2+1 stays in one piece of type (2)
    auto f1 = commutative_factorize(reduced_norm(sp(ctx4(), "X^2+1")).second);
    auto g1 = split_by_norm_factors(sp(ctx4(), "X^2+1"), f1.factors);
    REQUIRE(g1.size() == 1);
    REQUIRE(g1[0].pieces.size() == 1);
    CHECK(g1[0].pieces[0] == sp(ctx4(), "X^2+1"));

    // (X+w)(X+1) splits into two type-(1) pieces whose ordered product is P
    SkewPoly p2 = sp(ctx4(), "X^2 + (w+1)*X + w");
    auto f2 = commutative_factorize(reduced_norm(p2).second);
    auto g2 = split_by_norm_factors(p2, f2.factors);
    REQUIRE(g2.size() == 1);
    REQUIRE(g2[0].pieces.size() == 2);
    CHECK(mul(g2[0].pieces[0], g2[0].pieces[1]) == p2);
    CHECK(g2[0].pieces[1] == sp(ctx4(), "X+1"));  // only linear right divisor

    // irreducible P comes back whole
    SkewPoly p3 = sp(ctx4(), "X+w");
    auto f3 = commutative_factorize(reduced_norm(p3).second);
    auto g3 = split_by_norm_factors(p3, f3.factors);
    REQUIRE(g3.size() == 1);
    CHECK(g3[0].pieces == std::vector<SkewPoly>{p3});

    // mismatched multiset is rejected
    auto wrong = commutative_factorize(cp(ctx4(), "Y^2+Y+1"));
    CHECK_THROWS_AS(split_by_norm_factors(p2, wrong.factors), math_error);
}

TEST_CASE("split reconstruction on random multi-factor inputs") {
    std::mt19937_64 rng(29);
    for (const SkewContext* ctx : {&ctx4(), &ctx9(), &ctx16r4()}) {
        for (int trial = 0; trial < 15; ++trial) {
            SkewPoly p = random_skew_monic(*ctx, 2 + int(rng() % 10), rng);
            if (p.coeff(0) == 0) continue;
            auto fac = commutative_factorize(reduced_norm(p).second);
            auto groups = split_by_norm_factors(p, fac.factors);
            SkewPoly acc = skew_one(*ctx);
            for (auto& g : groups) {
                int delta = g.n.deg();
                for (auto& piece : g.pieces) {
                    // pure type: norm a power of n, and the piece divides embed(n)
                    CHECK(piece.deg() % delta == 0);
                    CHECK(reduced_norm(piece).second == c_pow(g.n, piece.deg() / delta));
                    CHECK(divmod_right(centre_embed(g.n), piece).second.is_zero());
                    acc = mul(acc, piece);
                }
            }
            CHECK(acc == p);
        }
    }
}

TEST_CASE("first_factor on X^2+1 over CTX4") {
    std::mt19937_64 rng(31);
    std::set<std::vector<uint64_t>> seen;
    for (int trial = 0; trial < 30; ++trial) {
        SkewPoly f = first_factor(sp(ctx4(), "X^2+1"), cp(ctx4(), "Y+1"), rng);
        CHECK(f.deg() == 1);
        CHECK(f.is_monic());
        CHECK(divides_right(f, sp(ctx4(), "X^2+1")));
        seen.insert(f.coeffs());
    }
    // the divisor set is {X+1, X+w, X+w+1}; all should appear in 30 draws
    CHECK(seen.size() == 3);
    // e = 1 returns the polynomial itself
    CHECK(first_factor(sp(ctx4(), "X+w"), cp(ctx4(), "Y+1"), rng) == sp(ctx4(), "X+w"));
}

TEST_CASE("first_factor over CTX9 returns a norm-(Y+1) divisor") {
    std::mt19937_64 rng(37);
    SkewPoly p = sp(ctx9(), "X^2+1");
    CentrePoly n = cp(ctx9(), "Y+1");
    REQUIRE(reduced_norm(p).second == c_pow(n, 2));
    for (int trial = 0; trial < 10; ++trial) {
        SkewPoly f = first_factor(p, n, rng);
        CHECK(f.deg() == 1);
        CHECK(divides_right(f, p));
        CHECK(reduced_norm(f).second == n);
    }
}

TEST_CASE("factor_step spec examples") {
    std::mt19937_64 rng(41);
    auto seq = factor_step(sp(ctx4(), "X^2+1"), cp(ctx4(), "Y+1"), sp(ctx4(), "X+w"), rng);
    REQUIRE(seq.size() == 2);
    CHECK(seq[1] == sp(ctx4(), "X+w"));
    CHECK(seq[0] == sp(ctx4(), "X+w+1"));
    CHECK(mul(seq[0], seq[1]) == sp(ctx4(), "X^2+1"));
    // e = 1: single factor immediately
    auto seq1 = factor_step(sp(ctx4(), "X+1"), cp(ctx4(), "Y+1"), sp(ctx4(), "X+1"), rng);
    CHECK(seq1 == std::vector<SkewPoly>{sp(ctx4(), "X+1")});
    // CTX9: any first factor completes to a 2-term product
    SkewPoly p9 = sp(ctx9(), "X^2+1");
    SkewPoly f9 = first_factor(p9, cp(ctx9(), "Y+1"), rng);
    auto seq9 = factor_step(p9, cp(ctx9(), "Y+1"), f9, rng);
    REQUIRE(seq9.size() == 2);
    CHECK(mul(seq9[0], seq9[1]) == p9);
}

TEST_CASE("intermediate right quotients still divide embed(N)") {
    // proof obligation behind the FactorStep state update
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        SkewPoly p = random_skew_monic(ctx16r4(), 4, rng);
        if (p.coeff(0) == 0) continue;
        auto tp = type_profile(p);
        if (tp.entries.size() != 1) continue;
        const CentrePoly& n = tp.entries[0].n;
        if (tp.entries[0].e_seq.size() < 2 || tp.entries[0].e_seq[0] != 1) continue;
        SkewPoly emb = centre_embed(n);
        if (!divmod_right(emb, p).second.is_zero()) continue;
        SkewPoly p1 = first_factor(p, n, rng);
        SkewPoly p2 = quo_right(p, p1);
        CHECK(divmod_right(emb, p2).second.is_zero());
    }
}

TEST_CASE("skew_factorization spec examples") {
    std::mt19937_64 rng(43);
    auto f = skew_factorization(sp(ctx4(), "X^2+1"), rng);
    CHECK(f.unit == 1);
    CHECK(f.x_power == 0);
    REQUIRE(f.factors.size() == 2);
    CHECK(reconstruct(ctx4(), f) == sp(ctx4(), "X^2+1"));
    // membership in the enumerated factorization set
    auto all = oracle::enumerate_factorizations(sp(ctx4(), "X^2+1"));
    bool member = false;
    for (auto& seq : all) member = member || seq == f.factors;
    CHECK(member);
    CHECK(all.size() == 3);

    auto firr = skew_factorization(sp(ctx4(), "X+w"), rng);
    REQUIRE(firr.factors.size() == 1);
    CHECK(firr.factors[0] == sp(ctx4(), "X+w"));

    // w*X^3 + w*X = w * (X^2+1) * X
    auto fx = skew_factorization(sp(ctx4(), "w*X^3 + w*X"), rng);
    CHECK(fx.unit == ctx4().field().var());
    CHECK(fx.x_power == 1);
    REQUIRE(fx.factors.size() == 2);
    CHECK(reconstruct(ctx4(), fx) == sp(ctx4(), "w*X^3 + w*X"));

    CHECK_THROWS_AS(skew_factorization(skew_zero(ctx4()), rng), math_error);
}

TEST_CASE("factorization reconstructs and emits irreducibles with matching norms") {
    std::mt19937_64 rng(47);
    for (const SkewContext* ctx : {&ctx4(), &ctx9(), &ctx16r4()}) {
        for (int trial = 0; trial < 25; ++trial) {
            SkewPoly p = random_skew_below(*ctx, 2 + int(rng() % 14), rng);
            if (p.is_zero() || p.deg() < 1) continue;
            auto f = skew_factorization(p, rng);
            CHECK(reconstruct(*ctx, f) == p);
            std::multiset<gp::Poly> norm_multiset;
            for (auto& factor : f.factors) {
                CHECK(is_irreducible(factor));
                CHECK(factor.is_monic());
                norm_multiset.insert(reduced_norm(factor).second.c);
            }
            // factor norms match the commutative factorization of the norm
            auto [v, et] = strip_x(monic(p));
            (void)v;
            std::multiset<gp::Poly> expect;
            if (et.deg() > 0)
                for (auto& [n, mult] : commutative_factorize(reduced_norm(et).second).factors)
                    for (int i = 0; i < mult; ++i) expect.insert(n.c);
            CHECK(norm_multiset == expect);
        }
    }
}

TEST_CASE("exhaustive factorization membership for deg <= 3 over CTX4") {
    std::mt19937_64 rng(53);
    // degree 4 runs in the acceptance suite
    for (int d = 1; d <= 3; ++d) {
        uint64_t total = 1;
        for (int i = 0; i < d; ++i) total *= 4;
        for (uint64_t v = 0; v < total; ++v) {
            std::vector<uint64_t> coeffs(d + 1, 0);
            uint64_t t = v;
            for (int i = 0; i < d; ++i) {
                coeffs[i] = t % 4;
                t /= 4;
            }
            if (coeffs[0] == 0) continue;
            coeffs[d] = 1;
            SkewPoly p(ctx4(), coeffs);
            auto f = skew_factorization(p, rng);
            CHECK(reconstruct(ctx4(), f) == p);
            auto all = oracle::enumerate_factorizations(p);
            bool member = false;
            for (auto& seq : all) member = member || seq == f.factors;
            CHECK(member);
        }
    }
}
