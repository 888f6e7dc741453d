#pragma once

#include <utility>

#include "fubini/rat.hpp"

namespace fubini {

// Convention: B_1 = -1/2, as produced by the Stirling explicit sum.

/// B_n = sum_k S2(n,k) (-1)^k k!/(k+1); memoized.
Rat bernoulli(unsigned n);

/// Integral of F_n over [-1, 0]. n >= 1.
Rat bernoulli_via_integral(unsigned n);

/// (exact integral of y^k F_n(y) over [-1,0],
///  ((-1)^k/k!) sum_j S1(k+1,j+1) B_{n+j}). n >= 1.
std::pair<Rat, Rat> fubini_moment_integral(unsigned k, unsigned n);

/// (exact integral of F_m F_n over [-1,0], (-1)^m sum_j C(m,j) B_{n+j}). n >= 1.
std::pair<Rat, Rat> fubini_product_integral(unsigned m, unsigned n);

/// (sum_{k,j} S2(n,k) S2(m,j) (-1)^(k+j) k! j!/(k+j+1),
///  (-1)^m sum_j C(m,j) B_{n+j}). n >= 1.
std::pair<Rat, Rat> double_sum_identity(unsigned n, unsigned m);

/// B_{n,p} = ((p+1)/p!) sum_j (-1)^j S1(p,j) B_{n+j}; B_{n,0} = B_n.
Rat p_bernoulli(unsigned n, unsigned p);

/// B_{2n-1,p} = ((p+1)/p) sum_{k=0}^{2n-1} S2(2n,k+1) (-1)^k (k+1)!/(k+p+1).
/// n >= 1, p >= 1.
Rat p_bernoulli_odd_explicit(unsigned n, unsigned p);

/// B_{2n,p} = ((p+1)/p) sum_{k=0}^{2n} S2(2n+1,k+1) (-1)^(k+1) (k+1)!/(k+p+1).
/// n >= 1, p >= 1.
Rat p_bernoulli_even_explicit(unsigned n, unsigned p);

/// (exact integral of y^p F_n over [-1,0], +-((p+1)/(p+2)) B_{n-1,p+1})
/// with sign (-1)^p for odd n and (-1)^(p+1) for even n. n >= 2.
std::pair<Rat, Rat> fubini_moment_parity(unsigned p, unsigned n);

namespace testing {

/// Adds `delta` to every value bernoulli(n) returns until reset. The memo
/// cache is untouched. Exists only to exercise the verifier's failure path.
void sabotage_bernoulli(unsigned n, const Rat& delta);
void clear_bernoulli_sabotage();

}  // namespace testing

}  // namespace fubini
