#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kmu/polynomial.hpp"
#include "test_util.hpp"

using namespace kmu;
using kmu_test::parse;

namespace {
ContextPtr ctx_xy() { return VarContext::make({"x", "y"}); }
}  // namespace

TEST_CASE("parse: commutativity, binomial identity") {
    auto c = ctx_xy();
    CHECK(parse(c, "x*y - y*x").is_zero());
    auto cx = VarContext::make({"x"});
    CHECK(parse(cx, "(x+1)^2 - x^2 - 2*x - 1").is_zero());
}

TEST_CASE("parse: original Tom generator") {
    auto c = VarContext::make({"x1", "x2", "x3", "x4", "z1", "z2", "z3", "z4"});
    Polynomial p = parse(c, "x3*z2 - x4*z1");
    CHECK(p == parse(c, "x3") * parse(c, "z2") - parse(c, "x4") * parse(c, "z1"));
    // Canonical form leads with the larger grevlex monomial, x4*z1 here.
    CHECK(p.to_string() == "-x4*z1 + x3*z2");
}

TEST_CASE("parse: errors carry position / name / exponent info") {
    auto c = ctx_xy();
    CHECK_THROWS_AS(parse(c, "x + q"), ParseError);
    CHECK_THROWS_AS(parse(c, "x^-1"), ParseError);
    CHECK_THROWS_AS(parse(c, "x + "), ParseError);
    CHECK_THROWS_AS(parse(c, "2 x"), ParseError);  // no implicit multiplication
    try {
        parse(c, "x + q");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("arith: basic identities and context mismatch") {
    auto c = ctx_xy();
    Polynomial x = parse(c, "x"), y = parse(c, "y");
    CHECK((x + y).to_string() == "x + y");
    CHECK((x + y) * (x - y) == parse(c, "x^2 - y^2"));
    CHECK((x - x).is_zero());

    auto other = VarContext::make({"x", "y", "z"});
    CHECK_THROWS_AS(x + parse(other, "z"), ContextMismatchError);
}

TEST_CASE("P_3 of the generic Tom Pfaffians minus itself is zero") {
    auto c = VarContext::make({"x1", "x2", "x4", "a35", "a25", "a23"});
    Polynomial p3 = parse(c, "x1*a35 - x2*a25 + x4*a23");
    CHECK((p3 - p3).is_zero());
}

TEST_CASE("exact_div: examples") {
    auto c = ctx_xy();
    CHECK(parse(c, "x^2*y + x*y^2").exact_div(parse(c, "x*y")) ==
          parse(c, "x + y"));
    CHECK_THROWS_AS(parse(c, "x + 1").exact_div(parse(c, "x")),
                    InexactDivisionError);
    try {
        parse(c, "x + 1").exact_div(parse(c, "x"));
    } catch (const InexactDivisionError& e) {
        CHECK(e.remainder == "1");  // nonzero remainder witness
    }
}

TEST_CASE("exact_div: original-Tom H_4 entries divide by x4") {
    // H_4 = x4 * (g_1..g_4) componentwise with g = (x1x3, x1x4, x2x3, x2x4).
    auto c = VarContext::make({"x1", "x2", "x3", "x4"});
    const char* h4[] = {"x1*x3*x4", "x1*x4^2", "x2*x3*x4", "x2*x4^2"};
    const char* g[] = {"x1*x3", "x1*x4", "x2*x3", "x2*x4"};
    for (int i = 0; i < 4; ++i)
        CHECK(parse(c, h4[i]).exact_div(parse(c, "x4")) == parse(c, g[i]));
}

TEST_CASE("substitute: explicit-example g_1 and trivial assignments") {
    auto src = VarContext::make({"t2", "t4"});
    auto dst = VarContext::make({"x1", "x2", "x3", "z2"});
    Polynomial p = parse(src, "t4*t4*t2");
    Polynomial image = p.substitute(
        {{"t2", parse(dst, "x1*x2*z2")}, {"t4", parse(dst, "x3")}}, dst);
    CHECK(image == parse(dst, "x3^2*x1*x2*z2"));
    CHECK(image.exact_div(parse(dst, "x3")) == parse(dst, "x3*x1*x2*z2"));

    auto c = ctx_xy();
    Polynomial q = parse(c, "x^2 - 3*y + 1");
    CHECK(q.substitute({{"x", parse(c, "x")}, {"y", parse(c, "y")}}, c) == q);
    CHECK(parse(c, "x + y")
              .substitute({{"x", Polynomial::zero(c)}, {"y", Polynomial::zero(c)}},
                          c)
              .is_zero());
    CHECK_THROWS_AS(q.substitute({{"x", parse(c, "x")}}, c), Error);
}

TEST_CASE("linear_coeffs: examples and error") {
    auto c = VarContext::make({"a", "b", "z1", "z2"});
    auto coeffs = parse(c, "a*z1 + b*z2").linear_coeffs({"z1", "z2"});
    REQUIRE(coeffs.size() == 2);
    CHECK(coeffs[0] == parse(c, "a"));
    CHECK(coeffs[1] == parse(c, "b"));
    CHECK_THROWS_AS(parse(c, "z1*z2").linear_coeffs({"z1", "z2"}), Error);
    CHECK_THROWS_AS(parse(c, "a").linear_coeffs({"z1", "z2"}), Error);
}

TEST_CASE("linear_coeffs: generic Tom P_1 gives the first Q row") {
    // P_1 = x2*a45 - x3*a35 + x4*a34 with a_ij = sum_k a_ij^k z_k; the
    // z-coefficients must be x2*a45_k - x3*a35_k + x4*a34_k.
    std::vector<std::string> names = {"x2", "x3", "x4"};
    for (const char* base : {"a34", "a35", "a45"})
        for (int k = 1; k <= 4; ++k)
            names.push_back(std::string(base) + "_" + std::to_string(k));
    for (int k = 1; k <= 4; ++k) names.push_back("z" + std::to_string(k));
    auto c = VarContext::make(names);

    auto lin = [&](const std::string& base) {
        Polynomial s = Polynomial::zero(c);
        for (int k = 1; k <= 4; ++k)
            s = s + parse(c, base + "_" + std::to_string(k)) *
                        parse(c, "z" + std::to_string(k));
        return s;
    };
    Polynomial p1 = parse(c, "x2") * lin("a45") - parse(c, "x3") * lin("a35") +
                    parse(c, "x4") * lin("a34");
    auto row = p1.linear_coeffs({"z1", "z2", "z3", "z4"});
    REQUIRE(row.size() == 4);
    for (int k = 1; k <= 4; ++k) {
        std::string ks = std::to_string(k);
        CHECK(row[k - 1] ==
              parse(c, "x2*a45_" + ks + " - x3*a35_" + ks + " + x4*a34_" + ks));
    }
}

TEST_CASE("canonical printing: decreasing order, round trip") {
    auto c = VarContext::make({"x", "y", "z"});
    Polynomial p = parse(c, "1 - z + 3*x*y^2 - 2*x^2");
    std::string s = p.to_string();
    CHECK(parse(c, s) == p);
    CHECK(s == "3*x*y^2 - 2*x^2 - z + 1");  // grevlex decreasing

    auto cl = VarContext::make({"x", "y", "z"}, MonomialOrder::Lex);
    Polynomial q = parse(cl, "y^3 + x*z");
    CHECK(q.to_string() == "x*z + y^3");  // lex: any x-term beats y^3
}

TEST_CASE("property: ring laws, round trip, division, substitution") {
    auto c = VarContext::make({"x", "y", "z", "w"});
    kmu_test::Rng rng(20260823);
    for (int it = 0; it < 60; ++it) {
        Polynomial a = kmu_test::random_poly(c, rng);
        Polynomial b = kmu_test::random_poly(c, rng);
        Polynomial d = kmu_test::random_poly(c, rng);
        CHECK((a + b) + d == a + (b + d));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(parse(c, a.to_string()) == a);

        Polynomial nz = kmu_test::random_nonzero_poly(c, rng);
        CHECK((a * nz).exact_div(nz) == a);

        std::map<std::string, Polynomial> sub;
        for (const auto& n : c->names())
            sub.emplace(n, kmu_test::random_poly(c, rng, 1, 2));
        CHECK((a + b).substitute(sub, c) ==
              a.substitute(sub, c) + b.substitute(sub, c));
        CHECK((a * b).substitute(sub, c) ==
              a.substitute(sub, c) * b.substitute(sub, c));
    }
}

TEST_CASE("property: linear_coeffs recombination") {
    auto c = VarContext::make({"a", "b", "c", "z1", "z2", "z3"});
    kmu_test::Rng rng(42);
    auto coef_ctx = VarContext::make({"a", "b", "c"});
    for (int it = 0; it < 40; ++it) {
        Polynomial p = Polynomial::zero(c);
        for (int k = 1; k <= 3; ++k)
            p = p + kmu_test::random_poly(coef_ctx, rng).embedded(c) *
                        parse(c, "z" + std::to_string(k));
        auto coeffs = p.linear_coeffs({"z1", "z2", "z3"});
        Polynomial back = Polynomial::zero(c);
        for (int k = 1; k <= 3; ++k)
            back = back + coeffs[k - 1] * parse(c, "z" + std::to_string(k));
        CHECK(back == p);
    }
}

TEST_CASE("Ideal preserves generator order and signs") {
    auto c = ctx_xy();
    Ideal i(c, {parse(c, "-x"), parse(c, "y - x")});
    CHECK(i.gens[0] == parse(c, "-x"));
    CHECK(i.gens[1] == parse(c, "y - x"));
}

TEST_CASE("VarContext validation") {
    CHECK_THROWS_AS(VarContext::make({"x", "x"}), Error);
    CHECK_THROWS_AS(VarContext::make({""}), Error);
    auto c = VarContext::make({"x"});
    CHECK_THROWS_AS(c->index_of("nope"), Error);
}
