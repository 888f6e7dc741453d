#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <thread>
#include <vector>

#include "fubini/combinatorics.hpp"

using namespace fubini;

namespace {

// Permutations of {0..n-1} tallied by cycle count.
std::vector<long> cycle_counts(unsigned n) {
    std::vector<long> counts(n + 1, 0);
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        std::vector<bool> seen(n, false);
        unsigned cycles = 0;
        for (unsigned i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (unsigned j = i; !seen[j]; j = perm[j]) seen[j] = true;
        }
        ++counts[cycles];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

// Set partitions of an n-set tallied by block count, built element by element.
void extend_partitions(unsigned n, unsigned placed, unsigned blocks, std::vector<long>& counts) {
    if (placed == n) {
        ++counts[blocks];
        return;
    }
    for (unsigned b = 0; b < blocks; ++b) extend_partitions(n, placed + 1, blocks, counts);
    extend_partitions(n, placed + 1, blocks + 1, counts);
}

std::vector<long> partition_counts(unsigned n) {
    std::vector<long> counts(n + 1, 0);
    extend_partitions(n, 0, 0, counts);
    return counts;
}

}  // namespace

TEST_CASE("second-kind Stirling numbers") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(3, 5) == 0);
    CHECK(stirling2(5, 0) == 0);
    const long row10[] = {0, 1, 511, 9330, 34105, 42525, 22827, 5880, 750, 45, 1};
    for (unsigned k = 0; k <= 10; ++k) CHECK(stirling2(10, k) == row10[k]);
}

TEST_CASE("first-kind Stirling numbers") {
    CHECK(stirling1_unsigned(0, 0) == 1);
    CHECK(stirling1_unsigned(3, 2) == 3);
    CHECK(stirling1_unsigned(4, 2) == 11);
    const long row10[] = {0, 362880, 1026576, 1172700, 723680, 269325, 63273, 9450, 870, 45, 1};
    for (unsigned k = 0; k <= 10; ++k) CHECK(stirling1_unsigned(10, k) == row10[k]);
    CHECK(stirling1_signed(4, 2) == 11);
    CHECK(stirling1_signed(4, 3) == -6);
}

TEST_CASE("Stirling numbers against enumeration") {
    for (unsigned n = 0; n <= 8; ++n) {
        const auto cycles = cycle_counts(n);
        const auto blocks = partition_counts(n);
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(stirling1_unsigned(n, k) == cycles[k]);
            CHECK(stirling2(n, k) == blocks[k]);
        }
    }
}

TEST_CASE("binomials and factorials") {
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(3, 7) == 0);
    CHECK(factorial(0) == 1);
    CHECK(to_string(factorial(25)) == "15511210043330985984000000");
}

TEST_CASE("Stirling-binomial inversion sum") {
    CHECK(lemma2_lhs(0, 0) == 1);
    CHECK(lemma2_lhs(2, 0) == 1);
    CHECK(lemma2_lhs(2, 1) == 2);
    for (unsigned m = 0; m <= 40; ++m)
        for (unsigned j = 0; j <= m; ++j) CHECK(lemma2_lhs(m, j) == neg_one_pow(m) * binomial(m, j));
    CHECK_THROWS_AS(lemma2_lhs(2, 3), DomainError);
}

TEST_CASE("binomial recurrence for second-kind Stirling numbers") {
    CHECK(stirling_cross_identity(0, 0) == std::pair<Int, Int>(1, 1));
    CHECK(stirling_cross_identity(2, 1) == std::pair<Int, Int>(3, 3));
    CHECK(stirling_cross_identity(3, 2) == std::pair<Int, Int>(6, 6));
    for (unsigned i = 0; i <= 30; ++i)
        for (unsigned j = 0; j <= i + 1; ++j) {
            const auto [lhs, rhs] = stirling_cross_identity(i, j);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("signed first-kind and second-kind matrices are inverse") {
    for (unsigned n = 0; n <= 40; ++n)
        for (unsigned m = 0; m <= 40; ++m) CHECK(stirling_inverse_entry(n, m) == (n == m ? 1 : 0));
}

TEST_CASE("triangle growth is safe under concurrent readers") {
    std::vector<std::thread> pool;
    std::vector<Int> results(8);
    for (unsigned t = 0; t < 8; ++t)
        pool.emplace_back([t, &results] {
            Int acc(0);
            for (unsigned n = 0; n <= 60 + t; ++n) acc += stirling2(n, n / 2) + stirling1_unsigned(n, n / 3);
            results[t] = acc;
        });
    for (auto& th : pool) th.join();
    for (unsigned t = 0; t < 8; ++t) {
        Int acc(0);
        for (unsigned n = 0; n <= 60 + t; ++n) acc += stirling2(n, n / 2) + stirling1_unsigned(n, n / 3);
        CHECK(results[t] == acc);
    }
}
