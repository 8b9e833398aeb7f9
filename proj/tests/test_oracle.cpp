#include <set>

#include "doctest.h"
#include "orepoly/factor.hpp"
#include "orepoly/oracle.hpp"
#include "orepoly/textio.hpp"

using namespace orepoly;

namespace {
const SkewContext& ctx4() {
    static SkewContext c(2, 2, 1);
    return c;
}
SkewPoly sp(const SkewContext& c, const std::string& s) { return parse_skew_poly(c, s); }
}  // namespace

TEST_CASE("divisor enumeration on X^2+1") {
    auto divs = oracle::enumerate_right_divisors(sp(ctx4(), "X^2+1"), 1);
    std::set<std::vector<uint64_t>> got;
    for (auto& d : divs) got.insert(d.coeffs());
    std::set<std::vector<uint64_t>> want = {
        sp(ctx4(), "X+1").coeffs(), sp(ctx4(), "X+w").coeffs(), sp(ctx4(), "X+w+1").coeffs()};
    CHECK(got == want);
    // degree-deg(P) divisors: just monic(P)
    auto full = oracle::enumerate_right_divisors(sp(ctx4(), "w*X^2+w"), 2);
    REQUIRE(full.size() == 1);
    CHECK(full[0] == sp(ctx4(), "X^2+1"));
    // irreducible polynomials have no proper divisors
    for (int d = 1; d < 1; ++d) CHECK(oracle::enumerate_right_divisors(sp(ctx4(), "X+w"), d).empty());
    CHECK(oracle::is_irreducible_naive(sp(ctx4(), "X+w")));
}

TEST_CASE("factorization enumeration") {
    auto fs = oracle::enumerate_factorizations(sp(ctx4(), "X^2+1"));
    CHECK(fs.size() == 3);
    for (auto& seq : fs) {
        REQUIRE(seq.size() == 2);
        CHECK(mul(seq[0], seq[1]) == sp(ctx4(), "X^2+1"));
    }
    auto single = oracle::enumerate_factorizations(sp(ctx4(), "X+w"));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::vector<SkewPoly>{sp(ctx4(), "X+w")});
    auto unique_f = oracle::enumerate_factorizations(sp(ctx4(), "X^2 + (w+1)*X + w"));
    CHECK(unique_f.size() == 1);
}

TEST_CASE("enumeration guard") {
    SkewContext big(2, 8, 1);  // |k| = 256: 256^3 > 1e6
    CHECK_THROWS_AS(oracle::enumerate_right_divisors(random_skew_monic(big, 4, *[] {
                        static std::mt19937_64 r(1);
                        return &r;
                    }()), 3),
                    math_error);
}

TEST_CASE("Ore's theorem on enumerated factorization sets") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 12; ++trial) {
        SkewPoly p = random_skew_monic(ctx4(), 3, rng);
        if (p.coeff(0) == 0) continue;
        auto fs = oracle::enumerate_factorizations(p);
        REQUIRE(!fs.empty());
        size_t len = fs[0].size();
        for (auto& seq : fs) CHECK(seq.size() == len);
        // blockwise similarity matching: for each pair of factorizations the
        // factor multisets match up to similarity
        for (size_t i = 1; i < fs.size(); ++i) {
            std::vector<bool> used(len, false);
            for (auto& f : fs[0]) {
                bool matched = false;
                for (size_t j = 0; j < len && !matched; ++j) {
                    if (used[j]) continue;
                    if (are_similar(f, fs[i][j])) {
                        used[j] = true;
                        matched = true;
                    }
                }
                CHECK(matched);
            }
        }
    }
}

TEST_CASE("naive extended rgcd") {
    auto g = oracle::naive_extended_rgcd(sp(ctx4(), "X^2+1"), sp(ctx4(), "X+w"));
    CHECK(g.g == sp(ctx4(), "X+w"));
    CHECK(g.u.is_zero());
    CHECK(g.v == skew_one(ctx4()));
    auto g2 = oracle::naive_extended_rgcd(sp(ctx4(), "w*X^2+1"), skew_zero(ctx4()));
    CHECK(g2.g == monic(sp(ctx4(), "w*X^2+1")));
    // Bezout identity on random pairs
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        SkewPoly a = random_skew_below(ctx4(), 8, rng);
        SkewPoly b = random_skew_below(ctx4(), 8, rng);
        if (a.is_zero() && b.is_zero()) continue;
        auto r = oracle::naive_extended_rgcd(a, b);
        CHECK(add(mul(r.u, a), mul(r.v, b)) == r.g);
    }
}
