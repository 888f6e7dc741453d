#pragma once

#include <utility>

#include "fubini/ratfunc.hpp"

namespace fubini {

/// The Apostol-Bernoulli function as an exact rational function of λ.
/// Its only pole is λ = 1.
struct ApostolBernoulli {
    unsigned n = 0;
    RatFunc fn;

    friend bool operator==(const ApostolBernoulli&, const ApostolBernoulli&) = default;
};

/// (n/(λ-1)) sum_{k<n} S2(n-1,k) k! (λ/(1-λ))^k, term by term in RatFunc
/// arithmetic; zero for n = 0. Memoized.
const ApostolBernoulli& apostol_bernoulli(unsigned n);

/// (n/(λ-1)) F_{n-1}(λ/(1-λ)) by polynomial-into-rational composition. n >= 1.
ApostolBernoulli apostol_via_fubini(unsigned n);

/// Returns the function of index n+1 from
/// (n+1) (-1)^n λ sum_k S2(n,k) k! (1/(λ-1))^(k+1).
/// Only valid for n >= 1; the n = 0 instance of that sum is λ/(λ-1), not
/// the index-1 function, so n = 0 throws DomainError.
ApostolBernoulli apostol_explicit_reciprocal(unsigned n);

/// sum_k S2(n,k) k! (-λ)^k [2^(n+1) λ^k + (λ-1)^(k+1)] / (λ^2-1)^(k+1),
/// which equals the index-(n+1) function at λ divided by n+1. λ ≠ ±1.
Rat apostol_explicit_split(unsigned n, const Rat& lambda);

/// With a_k = B_{k+1}(λ)/(k+1):
/// (sum_k C(n,k) a_k a_{n-k}, -(a_{n+1} + a_n)). λ ≠ 1.
std::pair<Rat, Rat> apostol_sum_of_products(unsigned n, const Rat& lambda);

/// λ^k/(λ-1)^(k+1) times the index-(n+1) function.
RatFunc apostol_moment_integrand(unsigned k, unsigned n);

/// Product of the index-(m+1) and index-(n+1) functions.
RatFunc apostol_product_integrand(unsigned m, unsigned n);

/// Integral of the moment integrand over (-inf, 0] as
/// (exact value via y = λ/(1-λ), ((n+1)/k!) sum_j S1(k+1,j+1) B_{n+j}).
/// The substitution gives (-1)^k (n+1) times the integral of y^k F_n(y)
/// over [-1, 0]. n >= 1.
std::pair<Rat, Rat> apostol_moment_integral(unsigned k, unsigned n);

/// Integral of the product integrand over (-inf, 0] as
/// (exact value (m+1)(n+1) ∫_{-1}^{0} F_m F_n, (-1)^m (m+1)(n+1) sum_j C(m,j) B_{n+j}).
/// n >= 1.
std::pair<Rat, Rat> apostol_product_integral(unsigned m, unsigned n);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// Numerical integral of f over (-inf, 0] after mapping λ = -t/(1-t),
/// t in [0, 1). Throws DomainError if f has a real pole in (-inf, 0] or
/// decays slower than 1/λ^2, and when the error estimate exceeds `tolerance`.
QuadratureResult improper_quadrature_oracle(const RatFunc& f, double tolerance);

}  // namespace fubini
