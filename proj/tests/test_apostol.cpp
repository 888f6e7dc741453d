#include <doctest.h>

#include <cmath>

#include "fubini/apostol.hpp"
#include "fubini/bernoulli.hpp"

using namespace fubini;

namespace {

Rat q(long n, long d = 1) { return Rat(Int(n), Int(d)); }

PolyQ lam(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return PolyQ(std::move(v));
}

RatFunc over_power(const PolyQ& num, unsigned power) { return RatFunc::normalize(num, pow(lam({-1, 1}), power)); }

}  // namespace

TEST_CASE("Apostol-Bernoulli functions of low index") {
    CHECK(apostol_bernoulli(0).fn == RatFunc{});
    CHECK(apostol_bernoulli(1).fn == over_power(lam({1}), 1));
    CHECK(apostol_bernoulli(2).fn == over_power(lam({0, -2}), 2));
    // 3λ(λ+1)/(λ-1)^3, -4λ(λ^2+4λ+1)/(λ-1)^4, 5λ(λ+1)(λ^2+10λ+1)/(λ-1)^5
    CHECK(apostol_bernoulli(3).fn == over_power(lam({0, 3, 3}), 3));
    CHECK(apostol_bernoulli(4).fn == over_power(lam({0, -4, -16, -4}), 4));
    CHECK(apostol_bernoulli(5).fn == over_power(lam({0, 5, 55, 55, 5}), 5));
}

TEST_CASE("construction routes agree") {
    for (unsigned n = 1; n <= 20; ++n) CHECK(apostol_via_fubini(n).fn == apostol_bernoulli(n).fn);
    for (unsigned n = 1; n <= 19; ++n) {
        const auto g = apostol_explicit_reciprocal(n);
        CHECK(g.n == n + 1);
        CHECK(g.fn == apostol_bernoulli(n + 1).fn);
    }
    CHECK_THROWS_AS(apostol_explicit_reciprocal(0), DomainError);
    CHECK_THROWS_AS(apostol_via_fubini(0), DomainError);
}

TEST_CASE("split formula") {
    CHECK(apostol_explicit_split(0, q(3)) == q(1, 2));
    CHECK(apostol_explicit_split(1, q(2)) == q(-2));
    CHECK(apostol_explicit_split(2, q(-2)) == apostol_bernoulli(3).fn.eval(q(-2)) / q(3));
    CHECK_THROWS_AS(apostol_explicit_split(2, q(1)), DomainError);
    CHECK_THROWS_AS(apostol_explicit_split(2, q(-1)), DomainError);
}

TEST_CASE("sums of products") {
    CHECK(apostol_sum_of_products(0, q(2)) == std::pair(q(1), q(1)));
    CHECK(apostol_sum_of_products(0, q(-1)) == std::pair(q(1, 4), q(1, 4)));
    const auto [a, b] = apostol_sum_of_products(1, q(3));
    CHECK(a == b);
    CHECK_THROWS_AS(apostol_sum_of_products(1, q(1)), DomainError);
}

TEST_CASE("integrals over the negative half-line") {
    CHECK(apostol_moment_integral(0, 1) == std::pair(q(-1), q(-1)));
    CHECK(apostol_moment_integral(1, 1) == std::pair(q(-2, 3), q(-2, 3)));
    CHECK(apostol_moment_integral(0, 2) == std::pair(q(1, 2), q(1, 2)));
    CHECK(apostol_product_integral(0, 1) == std::pair(q(-1), q(-1)));
    CHECK(apostol_product_integral(1, 1) == std::pair(q(4, 3), q(4, 3)));
    CHECK(apostol_product_integral(0, 2) == std::pair(q(1, 2), q(1, 2)));
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned k = 0; k <= 6; ++k) {
            const auto [e, f] = apostol_moment_integral(k, n);
            CHECK(e == f);
        }
        for (unsigned m = 0; m <= 8; ++m) {
            const auto [e, f] = apostol_product_integral(m, n);
            CHECK(e == f);
        }
    }
}

TEST_CASE("quadrature oracle agrees with the exact values") {
    const auto unit = improper_quadrature_oracle(over_power(lam({1}), 2), 1e-9);
    CHECK(std::abs(unit.value - 1.0) < 1e-9);
    struct Spot {
        RatFunc f;
        Rat exact;
    };
    const Spot spots[] = {
        {apostol_product_integrand(0, 1), apostol_product_integral(0, 1).first},
        {apostol_product_integrand(1, 1), apostol_product_integral(1, 1).first},
        {apostol_product_integrand(2, 3), apostol_product_integral(2, 3).first},
        {apostol_moment_integrand(0, 1), apostol_moment_integral(0, 1).first},
        {apostol_moment_integrand(2, 3), apostol_moment_integral(2, 3).first},
        {apostol_moment_integrand(4, 2), apostol_moment_integral(4, 2).first},
    };
    for (const auto& s : spots) {
        const auto r = improper_quadrature_oracle(s.f, 1e-9);
        CHECK(std::abs(r.value - s.exact.to_double()) < 1e-9);
    }
}

TEST_CASE("quadrature oracle rejects bad integrands") {
    CHECK_THROWS_AS(improper_quadrature_oracle(RatFunc::normalize(lam({1}), lam({1, 1, 0})), 1e-9), DomainError);
    CHECK_THROWS_AS(improper_quadrature_oracle(over_power(lam({1}), 1), 1e-9), DomainError);
    CHECK_THROWS_AS(improper_quadrature_oracle(over_power(lam({1}), 2), 0.0), DomainError);
}
