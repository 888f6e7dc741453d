#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "fubini/combinatorics.hpp"
#include "fubini/fubini.hpp"

using namespace fubini;

namespace {

Rat q(long n, long d = 1) { return Rat(Int(n), Int(d)); }

PolyZ ints(std::initializer_list<long> c) {
    std::vector<Int> v;
    for (long x : c) v.emplace_back(x);
    return PolyZ(std::move(v));
}

// Ordered set partitions counted as weak orderings: maps from {0..n-1} onto
// {0..k-1}, by block count.
std::vector<long> surjection_counts(unsigned n) {
    std::vector<long> counts(n + 1, 0);
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }
    std::vector<unsigned> f(n, 0);
    while (true) {
        std::vector<bool> hit(n, false);
        unsigned top = 0;
        for (unsigned v : f) {
            hit[v] = true;
            top = std::max(top, v);
        }
        if (std::all_of(hit.begin(), hit.begin() + top + 1, [](bool b) { return b; })) ++counts[top + 1];
        unsigned i = 0;
        while (i < n && ++f[i] == n) f[i++] = 0;
        if (i == n) break;
    }
    return counts;
}

}  // namespace

TEST_CASE("Fubini polynomials of low degree") {
    CHECK(fubini_poly(0).poly == ints({1}));
    CHECK(fubini_poly(1).poly == ints({0, 1}));
    CHECK(fubini_poly(2).poly == ints({0, 1, 2}));
    CHECK(fubini_poly(3).poly == ints({0, 1, 6, 6}));
    CHECK(fubini_poly(4).poly == ints({0, 1, 14, 36, 24}));
    CHECK(fubini_poly(7).poly == ints({0, 1, 126, 1806, 8400, 16800, 15120, 5040}));
    CHECK(fubini_poly(3).n == 3);
}

TEST_CASE("derivative recurrence matches the Stirling construction") {
    CHECK(fubini_poly_recurrence(1).poly == ints({0, 1}));
    CHECK(fubini_poly_recurrence(2).poly == ints({0, 1, 2}));
    CHECK(fubini_poly_recurrence(4).poly == ints({0, 1, 14, 36, 24}));
    for (unsigned n = 0; n <= 40; ++n) CHECK(fubini_poly_recurrence(n).poly == fubini_poly(n).poly);
}

TEST_CASE("Fubini numbers") {
    const char* frozen[] = {"1",
                            "1",
                            "3",
                            "13",
                            "75",
                            "541",
                            "4683",
                            "47293",
                            "545835",
                            "7087261",
                            "102247563",
                            "1622632573",
                            "28091567595",
                            "526858348381",
                            "10641342970443",
                            "230283190977853",
                            "5315654681981355",
                            "130370767029135901",
                            "3385534663256845323",
                            "92801587319328411133",
                            "2677687796244384203115"};
    for (unsigned n = 0; n <= 20; ++n) CHECK(to_string(fubini_number(n)) == frozen[n]);
}

TEST_CASE("ordered set partitions by enumeration") {
    CHECK(fubini_number_bruteforce(0) == 1);
    CHECK(fubini_number_bruteforce(2) == 3);
    CHECK(fubini_number_bruteforce(4) == 75);
    for (unsigned n = 0; n <= 10; ++n) CHECK(fubini_number_bruteforce(n) == fubini_number(n));
    for (unsigned n = 0; n <= 6; ++n) {
        const auto surj = surjection_counts(n);
        const auto counts = ordered_partition_counts(n);
        REQUIRE(counts.size() == n + 1);
        for (unsigned k = 0; k <= n; ++k) CHECK(counts[k] == surj[k]);
    }
    for (unsigned n = 0; n <= 8; ++n) CHECK(PolyZ(ordered_partition_counts(n)) == fubini_poly(n).poly);
    CHECK_THROWS_AS(fubini_number_bruteforce(11), DomainError);
    CHECK_THROWS_AS(ordered_partition_counts(12), DomainError);
}

TEST_CASE("two-variable Fubini polynomials") {
    const BiPolyZ f0 = fubini_two_var(0).poly;
    CHECK(f0 == BiPolyZ::monomial(Int(1), 0, 0));
    const BiPolyZ f1 = fubini_two_var(1).poly;
    CHECK(f1 == BiPolyZ::monomial(Int(1), 1, 0) + BiPolyZ::monomial(Int(1), 0, 1));
    const BiPolyZ f3 = fubini_two_var(3).poly;
    // x^3 + 3x^2y + 6xy^2 + 3xy + 6y^3 + 6y^2 + y
    CHECK(f3.coeff(3, 0) == 1);
    CHECK(f3.coeff(2, 1) == 3);
    CHECK(f3.coeff(1, 2) == 6);
    CHECK(f3.coeff(1, 1) == 3);
    CHECK(f3.row(0) == ints({0, 1, 6, 6}));
    for (unsigned n = 0; n <= 12; ++n) {
        const BiPolyZ f = fubini_two_var(n).poly;
        CHECK(f.eval_x(Int(0)) == fubini_poly(n).poly);
        CHECK(f.eval(q(0), q(1)) == Rat(fubini_number(n)));
    }
}

TEST_CASE("explicit formulas") {
    CHECK(fubini_explicit_reflection(1).poly == ints({0, 1}));
    CHECK(fubini_explicit_reflection(2).poly == ints({0, 1, 2}));
    CHECK(fubini_explicit_reflection(3).poly == ints({0, 1, 6, 6}));
    CHECK_THROWS_AS(fubini_explicit_reflection(0), DomainError);
    for (unsigned n = 1; n <= 25; ++n) CHECK(fubini_explicit_reflection(n).poly == fubini_poly(n).poly);

    CHECK(fubini_explicit_split(0, q(3, 7)) == q(1));
    for (const Rat& y : {q(1), q(-2), q(3, 7), q(-1, 3)}) CHECK(fubini_explicit_split(1, y) == y);
    CHECK(fubini_explicit_split(2, q(1)) == q(3));
    CHECK_THROWS_AS(fubini_explicit_split(3, q(-1, 2)), DomainError);
    for (unsigned n = 0; n <= 10; ++n) {
        const auto [cleared, expected] = fubini_explicit_split_cleared(n);
        CHECK(cleared == expected);
    }
    for (unsigned n = 0; n <= 20; ++n) CHECK(fubini_number_split(n) == Rat(fubini_number(n)));
    for (unsigned n = 1; n <= 20; ++n) CHECK(fubini_number_split_neg2(n) == Rat(fubini_number(n)));
    CHECK_THROWS_AS(fubini_number_split_neg2(0), DomainError);
}

TEST_CASE("geometric moment series") {
    // sum k^3 / 3^k = 33/8
    CHECK(geometric_moment_limit(3, q(1, 3)) == q(33, 8));
    for (unsigned n = 0; n <= 6; ++n) CHECK(geometric_moment_limit(n, q(1, 2)) == Rat(2 * fubini_number(n)));
    for (unsigned n = 0; n <= 6; ++n)
        for (const Rat& x : {q(1, 2), q(-1, 2), q(2, 5)})
            CHECK(geometric_moment_partial_sum(n, x, 30) + geometric_moment_tail(n, x, 30) ==
                  geometric_moment_limit(n, x));
    CHECK(std::abs(geometric_moment_partial_sum(0, q(1, 2), 60).to_double() - 2.0) < 1e-12);
    CHECK(std::abs(geometric_moment_partial_sum(1, q(1, 2), 80).to_double() - 2.0) < 1e-12);
    CHECK(std::abs(geometric_moment_partial_sum(3, q(1, 2), 80).to_double() - 26.0) < 1e-12);
    CHECK_THROWS_AS(geometric_moment_limit(2, q(1)), DomainError);
    CHECK_THROWS_AS(geometric_moment_partial_sum(2, q(-3, 2), 5), DomainError);
}
