#include <doctest.h>

#include "fubini/bipoly.hpp"
#include "fubini/poly.hpp"
#include "fubini/ratfunc.hpp"
#include "fubini/serialize.hpp"

using namespace fubini;

namespace {

Rat q(long n, long d = 1) { return Rat(Int(n), Int(d)); }

PolyQ lam(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return PolyQ(std::move(v));
}

}  // namespace

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    CHECK(q(6, -4).str() == "-3/2");
    CHECK(q(0, -7).str() == "0");
    CHECK(q(10, 5).is_integer());
    CHECK(Rat::parse("-3/7") == q(-3, 7));
    CHECK(Rat::parse("+13") == q(13));
    CHECK(Rat::parse("4/6").str() == "2/3");
    CHECK_THROWS_AS(Rat::parse("1/0"), DomainError);
    CHECK_THROWS(Rat::parse("1/-2"));
    CHECK_THROWS(Rat::parse("abc"));
    CHECK_THROWS(Rat::parse(""));
}

TEST_CASE("rational arithmetic") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(1, 2) - q(1, 3) == q(1, 6));
    CHECK(q(2, 3) * q(9, 4) == q(3, 2));
    CHECK(q(2, 3) / q(4, 9) == q(3, 2));
    CHECK(-q(1, 2) == q(-1, 2));
    CHECK(pow(q(2, 3), 3) == q(8, 27));
    CHECK(pow(q(2, 3), -2) == q(9, 4));
    CHECK(q(-1, 3) < q(-1, 4));
    CHECK_THROWS_AS(q(1) / Rat(), DomainError);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), DomainError);
    CHECK_THROWS_AS(pow(Rat(), -1), DomainError);
    CHECK(neg_one_pow(3) == -1);
    CHECK(neg_one_pow(0) == 1);
}

TEST_CASE("big integers do not overflow") {
    CHECK(to_string(pow(Int(2), 100u)) == "1267650600228229401496703205376");
    CHECK(int_from_string("-123456789012345678901234567890") * Int(-1) ==
          int_from_string("123456789012345678901234567890"));
}

TEST_CASE("polynomial canonical form and evaluation") {
    const PolyZ f{Int(0), Int(1), Int(2)};
    CHECK(f.degree() == 2);
    CHECK(PolyZ{Int(1), Int(0), Int(0)}.degree() == 0);
    CHECK(PolyZ{}.degree() == -1);
    CHECK(PolyZ{}.eval(q(5, 3)) == Rat());
    CHECK(f.eval(q(1)) == q(3));
    CHECK(f.eval(q(-1, 2)) == Rat());
    CHECK((f - f).is_zero());
    CHECK(f * PolyZ{} == PolyZ{});
}

TEST_CASE("polynomial ring identities") {
    const PolyZ y = PolyZ::identity();
    const PolyZ lhs = PolyZ{Int(0), Int(1), Int(2)};
    CHECK(lhs == y * PolyZ{Int(1), Int(2)});
    const PolyZ a{Int(1), Int(-3), Int(2)}, b{Int(4), Int(0), Int(0), Int(5)}, c{Int(-2), Int(7)};
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(pow(PolyZ{Int(1), Int(1)}, 4) == PolyZ{Int(1), Int(4), Int(6), Int(4), Int(1)});
    CHECK(a.compose(PolyZ{Int(1), Int(1)}).eval(q(2)) == a.eval(q(3)));
    CHECK(b.derivative() == PolyZ{Int(0), Int(0), Int(15)});
}

TEST_CASE("exact definite integrals") {
    CHECK(integrate(PolyZ{Int(1)}, q(-1), q(0)) == q(1));
    CHECK(integrate(PolyZ{Int(0), Int(1), Int(2)}, q(-1), q(0)) == q(1, 6));
    CHECK(integrate(PolyZ::monomial(Int(1), 3), q(-1), q(0)) == q(-1, 4));
    CHECK(integrate(PolyQ{}, q(-1), q(0)) == Rat());
    CHECK(antiderivative(lam({0, 2})) == lam({0, 0, 1}));
}

TEST_CASE("division, gcd and root counting") {
    const PolyQ a = lam({-1, 0, 1});  // λ^2 - 1
    const PolyQ b = lam({-2, 2});     // 2λ - 2
    const auto [quot, rem] = divmod(a, b);
    CHECK(rem.is_zero());
    CHECK(quot == PolyQ{q(1, 2), q(1, 2)});
    CHECK(gcd(a, b) == lam({-1, 1}));
    CHECK(gcd(PolyQ{}, PolyQ{}).is_zero());
    CHECK_THROWS_AS(divmod(a, PolyQ{}), DomainError);

    const Rat zero;
    CHECK(count_real_roots(a, nullptr, nullptr) == 2);
    CHECK(count_real_roots(a, nullptr, &zero) == 1);
    CHECK(count_real_roots(lam({1, 0, 1}), nullptr, nullptr) == 0);
    CHECK(count_real_roots(pow(lam({-1, 1}), 3), nullptr, nullptr) == 1);
    CHECK(count_real_roots(pow(lam({-1, 1}), 2), nullptr, &zero) == 0);
}

TEST_CASE("rational functions normalize to a canonical form") {
    const RatFunc r = RatFunc::normalize(lam({-2, 2}), lam({-1, 0, 1}));
    CHECK(r.numerator() == lam({2}));
    CHECK(r.denominator() == lam({1, 1}));

    const RatFunc unchanged = RatFunc::normalize(lam({1}), lam({-1, 1}));
    CHECK(unchanged.numerator() == lam({1}));
    CHECK(unchanged.denominator() == lam({-1, 1}));

    const RatFunc b2 = RatFunc::normalize(lam({0, -2}), pow(lam({-1, 1}), 2));
    CHECK(b2.denominator() == lam({1, -2, 1}));
    CHECK(b2 == RatFunc::normalize(lam({0, 4}), lam({-2, 4, -2})));

    CHECK_THROWS_AS(RatFunc::normalize(lam({1}), PolyQ{}), DomainError);
    CHECK(RatFunc::normalize(PolyQ{}, lam({3, 1})) == RatFunc{});
}

TEST_CASE("rational function arithmetic and evaluation") {
    const RatFunc a = RatFunc::normalize(lam({1}), lam({-1, 1}));
    const RatFunc b = RatFunc::normalize(lam({0, 1}), lam({1, 1}));
    const Rat x = q(3, 7);
    CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK((a / b).eval(x) == a.eval(x) / b.eval(x));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a.eval(q(1)), DomainError);
    CHECK_THROWS_AS(a / RatFunc{}, DomainError);
    CHECK(a.eval_double(1e6) == doctest::Approx(1.0 / (1e6 - 1)));
    CHECK(pow(a, 3) == a * a * a);
}

TEST_CASE("polynomial into rational function composition") {
    const RatFunc r = RatFunc::normalize(lam({0, 1}), lam({1, -1}));  // λ/(1-λ)
    const PolyZ p{Int(0), Int(1), Int(2)};
    const RatFunc c = compose(p, r);
    for (const Rat& x : {q(-2), q(1, 3), q(5, 2)}) CHECK(c.eval(x) == p.eval(r.eval(x)));
    CHECK(compose(PolyZ{}, r) == RatFunc{});
}

TEST_CASE("two-variable polynomials") {
    const BiPolyZ f = BiPolyZ::monomial(Int(1), 1, 0) + BiPolyZ::monomial(Int(1), 0, 1);  // x + y
    CHECK(f.eval(q(1), q(3, 7)) == q(10, 7));
    CHECK(f.degree_x() == 1);
    CHECK(f.degree_y() == 1);
    CHECK((f * f).coeff(1, 1) == Int(2));
    CHECK(f.substitute_affine(Int(-1), Int(1), Int(1), Int(0)).eval(q(2), q(5)) == q(4));
    CHECK(f.eval_x(Int(2)) == PolyZ{Int(2), Int(1)});
    CHECK((f - f).is_zero());
}

TEST_CASE("serialization") {
    CHECK(serialize(PolyZ{Int(0), Int(1), Int(2)}) == R"(["0","1","2"])");
    CHECK(serialize(PolyZ{}) == "[]");
    CHECK(serialize(q(-3, 7)) == "-3/7");
    CHECK(pretty(PolyZ{Int(0), Int(1), Int(6), Int(6)}, "y") == "6y^3 + 6y^2 + y");
    CHECK(pretty(RatFunc::normalize(lam({0, -2}), pow(lam({-1, 1}), 2)), "λ") == "(-2λ)/(λ-1)^2");
    CHECK(pretty(RatFunc::normalize(lam({1}), lam({-1, 1})), "λ") == "1/(λ-1)");
    const PolyQ back = poly_from_json(to_json(PolyQ{q(1, 2), q(-3)}));
    CHECK(back == PolyQ{q(1, 2), q(-3)});
    const BiPolyZ f = BiPolyZ::monomial(Int(1), 2, 0) + BiPolyZ::monomial(Int(2), 1, 1) +
                      BiPolyZ::monomial(Int(2), 0, 2) + BiPolyZ::monomial(Int(1), 0, 1);
    CHECK(pretty(f) == "x^2 + 2xy + 2y^2 + y");
}
