#pragma once

#include <utility>
#include <vector>

#include "fubini/bipoly.hpp"
#include "fubini/poly.hpp"

namespace fubini {

/// F_n(y) = sum_k S2(n,k) k! y^k.
struct FubiniPoly {
    unsigned n = 0;
    PolyZ poly;

    friend bool operator==(const FubiniPoly&, const FubiniPoly&) = default;
};

/// F_n(x;y) = sum_k C(n,k) F_k(y) x^(n-k).
struct FubiniBiPoly {
    unsigned n = 0;
    BiPolyZ poly;

    friend bool operator==(const FubiniBiPoly&, const FubiniBiPoly&) = default;
};

inline constexpr unsigned kDefaultEnumerationCap = 10;

/// Built from the second-kind Stirling row; memoized.
const FubiniPoly& fubini_poly(unsigned n);

/// Independent route: F_{n+1} = y d/dy[(1+y) F_n], iterated from F_0 = 1.
FubiniPoly fubini_poly_recurrence(unsigned n);

/// F_n = F_n(1).
Int fubini_number(unsigned n);

/// Counts ordered set partitions of {1..n} by direct enumeration; uses no
/// Stirling numbers. Throws DomainError above `cap`.
Int fubini_number_bruteforce(unsigned n, unsigned cap = kDefaultEnumerationCap);

/// Entry k is the number of ordered partitions of {1..n} into exactly k
/// blocks, by the same enumeration.
std::vector<Int> ordered_partition_counts(unsigned n, unsigned cap = kDefaultEnumerationCap);

FubiniBiPoly fubini_two_var(unsigned n);

/// y * sum_{k=1}^{n} S2(n,k) (-1)^(n+k) k! (y+1)^(k-1), expanded. n >= 1.
FubiniPoly fubini_explicit_reflection(unsigned n);

/// sum_k S2(n,k) k! y^k [2^(n+1)(y+1) y^k + (-1)^(k+1)] / (2y+1)^(k+1).
/// Throws DomainError at y = -1/2.
Rat fubini_explicit_split(unsigned n, const Rat& y);

/// The split formula multiplied through by (2y+1)^(n+1), as a pair
/// (cleared sum, (2y+1)^(n+1) F_n(y)); the two polynomials agree.
std::pair<PolyZ, PolyZ> fubini_explicit_split_cleared(unsigned n);

/// Split formula at y = 1: sum_k S2(n,k) k! [2^(n+2) + (-1)^(k+1)] / 3^(k+1).
Rat fubini_number_split(unsigned n);

/// Split formula at y = -2. n >= 1.
Rat fubini_number_split_neg2(unsigned n);

/// sum_{k=0}^{terms} k^n x^k, exact. Requires |x| < 1.
Rat geometric_moment_partial_sum(unsigned n, const Rat& x, unsigned terms);

/// F_n(x/(1-x)) / (1-x), the value of the full series. Requires |x| < 1.
Rat geometric_moment_limit(unsigned n, const Rat& x);

/// Exact remainder sum_{k>terms} k^n x^k, expanded through the binomial
/// theorem into the full series of lower moments.
Rat geometric_moment_tail(unsigned n, const Rat& x, unsigned terms);

}  // namespace fubini
