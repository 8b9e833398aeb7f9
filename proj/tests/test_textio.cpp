#include "doctest.h"
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
}  // namespace

TEST_CASE("field spec parsing") {
    FieldSpec s1 = parse_field_spec("GF(2^2;frob=1)");
    CHECK(s1.p == 2);
    CHECK(s1.n == 2);
    CHECK(s1.s == 1);
    CHECK(s1.modulus.empty());
    FieldSpec s2 = parse_field_spec("GF(3^2; modulus=1,0,1; frob=1)");
    CHECK(s2.modulus == std::vector<uint32_t>{1, 0, 1});
    FieldSpec s3 = parse_field_spec("GF(5)");
    CHECK(s3.n == 1);
    CHECK(s3.s == 1);
    CHECK_THROWS_AS(parse_field_spec("GF(2^2"), parse_error);
    CHECK_THROWS_AS(parse_field_spec("GF(2^2; bogus=1)"), parse_error);
    CHECK_THROWS_AS(parse_field_spec("GF(2^2;frob=1) junk"), parse_error);
    // spec string round-trips through the parser
    auto ctx = make_context(s1);
    FieldSpec back = parse_field_spec(ctx->spec_string());
    CHECK(back.p == 2);
    CHECK(back.n == 2);
    CHECK(back.modulus == ctx->field().modulus());
}

TEST_CASE("skew polynomial parsing") {
    CHECK(parse_skew_poly(ctx4(), "X^2+1") == SkewPoly(ctx4(), {1, 0, 1}));
    CHECK(parse_skew_poly(ctx4(), "(w+1)*X + w") == SkewPoly(ctx4(), {2, 3}));
    CHECK(parse_skew_poly(ctx4(), "0").is_zero());
    CHECK(parse_skew_poly(ctx9(), "2*X^2 + w*X") == SkewPoly(ctx9(), {0, 3, 2}));
    // noncommutative products evaluate in written order: X*w = sigma(w)X
    CHECK(parse_skew_poly(ctx4(), "X*w") == parse_skew_poly(ctx4(), "(w+1)*X"));
    CHECK(parse_skew_poly(ctx9(), "(X+w)^2") ==
          mul(parse_skew_poly(ctx9(), "X+w"), parse_skew_poly(ctx9(), "X+w")));
    // subtraction works in odd characteristic
    CHECK(parse_skew_poly(ctx9(), "X - 1") == SkewPoly(ctx9(), {2, 1}));
    CHECK_THROWS_AS(parse_skew_poly(ctx4(), "X +"), parse_error);
    CHECK_THROWS_AS(parse_skew_poly(ctx4(), "X^2 + Z"), parse_error);
    CHECK_THROWS_AS(parse_skew_poly(ctx4(), "(X"), parse_error);
}

TEST_CASE("print/parse round trip on random polynomials") {
    std::mt19937_64 rng(71);
    for (const SkewContext* ctx : {&ctx4(), &ctx9()}) {
        for (int trial = 0; trial < 80; ++trial) {
            SkewPoly p = random_skew_below(*ctx, 1 + int(rng() % 10), rng);
            CHECK(parse_skew_poly(*ctx, format_skew_poly(p)) == p);
        }
    }
    CHECK(format_skew_poly(skew_zero(ctx4())) == "0");
    CHECK(format_skew_poly(parse_skew_poly(ctx4(), "X*w")) == "(w+1)*X");
}

TEST_CASE("centre polynomial round trip and tag") {
    SkewContext c16(2, 4, 2);  // subfield GF(4): generator u appears
    std::mt19937_64 rng(73);
    for (const SkewContext* ctx :
         std::initializer_list<const SkewContext*>{&ctx4(), &ctx9(), &c16}) {
        for (int trial = 0; trial < 60; ++trial) {
            CentrePoly p = centre_from(*ctx, gp::random_below(ctx->subfield(), 6, rng));
            CHECK(parse_centre_poly(*ctx, format_centre_poly(p)) == p);
            // tagged form parses identically
            CHECK(parse_centre_poly(*ctx, format_centre_poly(p, true)) == p);
        }
    }
    CHECK(format_centre_poly(parse_centre_poly(ctx4(), "Y^2+1"), true) == "Y^2 + 1  # Y = X^r");
}
