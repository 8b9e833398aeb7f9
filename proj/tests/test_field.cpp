#include "doctest.h"
#include "orepoly/context.hpp"

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
const SkewContext& ctx16() {
    static SkewContext c(2, 4, 2);
    return c;
}
}  // namespace

TEST_CASE("build_context basic parameters") {
    CHECK(ctx4().r() == 2);
    CHECK(ctx4().q() == 2);
    CHECK(ctx4().field().order() == 4);
    CHECK(ctx9().r() == 2);
    CHECK(ctx9().q() == 3);
    CHECK(ctx16().r() == 2);
    CHECK(ctx16().q() == 4);

    CHECK_THROWS_AS(SkewContext(4, 2, 1), math_error);   // p not prime
    CHECK_THROWS_AS(SkewContext(2, 2, 3), math_error);   // s out of range
    CHECK_THROWS_AS(SkewContext(2, 2, 0), math_error);
    // z^2 + 1 = (z+1)^2 over GF(2)
    CHECK_THROWS_AS(SkewContext(2, 2, 1, {1, 0, 1}), math_error);
}

TEST_CASE("deterministic modulus is reproducible") {
    SkewContext a(2, 2, 1), b(2, 2, 1);
    CHECK(a.field().modulus() == b.field().modulus());
    CHECK(a.field().modulus() == std::vector<uint32_t>{1, 1, 1});  // z^2+z+1
    CHECK(ctx9().field().modulus() == std::vector<uint32_t>{1, 0, 1});  // z^2+1
}

TEST_CASE("frobenius_power on CTX4") {
    uint64_t w = ctx4().field().var();
    uint64_t w1 = ctx4().field().add(w, 1);
    CHECK(ctx4().sigma_pow(w, 1) == w1);  // omega^2 = omega + 1
    CHECK(ctx4().sigma_pow(w, 2) == w);   // sigma^r = id
    CHECK(ctx4().sigma_pow(1, 5) == 1);
    CHECK(ctx4().sigma_pow(w, -1) == ctx4().sigma_pow(w, 1));  // r = 2
}

TEST_CASE("conjugates") {
    uint64_t w = ctx4().field().var();
    auto cj = ctx4().conjugates(w);
    REQUIRE(cj.size() == 2);
    CHECK(cj[0] == w);
    CHECK(cj[1] == ctx4().field().add(w, 1));
    auto cz = ctx4().conjugates(0);
    CHECK(cz == std::vector<uint64_t>{0, 0});
    // fixed-field elements are constant sequences
    for (uint64_t a = 0; a < 2; ++a) {
        for (auto c : ctx4().conjugates(a)) CHECK(c == a);
    }
    // conjugates[j] == sigma^j for all j
    for (uint64_t a = 0; a < ctx16().field().order(); ++a) {
        auto cj16 = ctx16().conjugates(a);
        for (uint32_t j = 0; j < ctx16().r(); ++j) CHECK(cj16[j] == ctx16().sigma_pow(a, j));
    }
}

TEST_CASE("relative norm") {
    uint64_t w = ctx4().field().var();
    CHECK(ctx4().relative_norm(w) == 1);  // omega * omega^2 = 1
    CHECK(ctx4().relative_norm(0) == 0);
    CHECK(ctx4().relative_norm(1) == 1);
    // multiplicative, and sigma-fixed
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        uint64_t a = ctx9().field().random(rng), b = ctx9().field().random(rng);
        uint64_t na = ctx9().relative_norm(a), nb = ctx9().relative_norm(b);
        CHECK(ctx9().relative_norm(ctx9().field().mul(a, b)) == ctx9().field().mul(na, nb));
        CHECK(ctx9().is_fixed(na));
    }
}

TEST_CASE("sigma is a field automorphism") {
    std::mt19937_64 rng(7);
    for (const SkewContext* ctx : {&ctx4(), &ctx9(), &ctx16()}) {
        const Gf& F = ctx->field();
        for (int i = 0; i < 100; ++i) {
            uint64_t a = F.random(rng), b = F.random(rng);
            CHECK(ctx->sigma(F.mul(a, b)) == F.mul(ctx->sigma(a), ctx->sigma(b)));
            CHECK(ctx->sigma(F.add(a, b)) == F.add(ctx->sigma(a), ctx->sigma(b)));
        }
    }
}

TEST_CASE("fixed field has exactly q elements (exhaustive, |k| <= 81)") {
    SkewContext c81(3, 4, 2);
    for (const SkewContext* ctx :
         std::initializer_list<const SkewContext*>{&ctx4(), &ctx9(), &ctx16(), &c81}) {
        uint64_t count = 0;
        for (uint64_t a = 0; a < ctx->field().order(); ++a)
            if (ctx->is_fixed(a)) ++count;
        CHECK(count == ctx->q());
    }
}

TEST_CASE("sigma order is exactly r") {
    for (const SkewContext* ctx : {&ctx4(), &ctx9(), &ctx16()}) {
        uint64_t t = ctx->t();
        CHECK(ctx->sigma_pow(t, ctx->r()) == t);
        for (uint32_t j = 1; j < ctx->r(); ++j) CHECK(ctx->sigma_pow(t, j) != t);
    }
}

TEST_CASE("coerce_fixed_field round-trips") {
    CHECK(ctx4().embed_sub(1) == 1);
    CHECK(ctx4().embed_sub(0) == 0);
    CHECK(ctx4().project_sub(1) == 1);
    CHECK(ctx4().project_sub(0) == 0);
    // GF(4) generator of the fixed field of CTX16 round-trips
    uint64_t g = ctx16().subfield().var();
    uint64_t img = ctx16().embed_sub(g);
    CHECK(ctx16().is_fixed(img));
    CHECK(ctx16().project_sub(img) == g);
    // full round-trip over the subfield
    for (uint64_t a = 0; a < ctx16().subfield().order(); ++a)
        CHECK(ctx16().project_sub(ctx16().embed_sub(a)) == a);
    // projecting a non-fixed element fails
    uint64_t w = ctx4().field().var();
    CHECK_THROWS_AS(ctx4().project_sub(w), math_error);
}

TEST_CASE("primitive element data") {
    // CTX4: t = omega, pi_t = T^2 + T + 1 over GF(2)
    CHECK(ctx4().t() == ctx4().field().var());
    CHECK(ctx4().pi_t() == gp::Poly{1, 1, 1});
    // CTX9: deg pi_t = r = 2
    CHECK(gp::deg(ctx9().pi_t()) == 2);
    // pi_t(t) = 0, checked through the embedding
    for (const SkewContext* ctx : {&ctx4(), &ctx9(), &ctx16()}) {
        const Gf& F = ctx->field();
        uint64_t acc = 0, tp = 1;
        for (size_t i = 0; i < ctx->pi_t().size(); ++i) {
            acc = F.add(acc, F.mul(ctx->embed_sub(ctx->pi_t()[i]), tp));
            tp = F.mul(tp, ctx->t());
        }
        CHECK(acc == 0);
    }
    // r = 1 degenerate tower: t = 1, pi_t = T - 1
    SkewContext flat(2, 2, 2);
    CHECK(flat.r() == 1);
    CHECK(flat.t() == 1);
    CHECK(flat.pi_t() == gp::Poly{1, 1});  // T + 1 over GF(4), char 2
}

TEST_CASE("t-coordinates invert") {
    std::mt19937_64 rng(11);
    for (const SkewContext* ctx : {&ctx4(), &ctx9(), &ctx16()}) {
        for (int i = 0; i < 50; ++i) {
            uint64_t a = ctx->field().random(rng);
            CHECK(ctx->from_t_coordinates(ctx->t_coordinates(a)) == a);
        }
    }
}

TEST_CASE("field elements from different contexts do not mix") {
    FieldElement a = fe(ctx4(), 1);
    FieldElement b = fe(ctx9(), 1);
    CHECK_THROWS_AS(fe_add(a, b), math_error);
    CHECK(fe_mul(a, a).packed == 1);
    CHECK(relative_norm(fe(ctx4(), ctx4().field().var())).packed == 1);
    CHECK(coerce_down(coerce_up(ctx16(), 2)) == 2);
}
