#include <algorithm>
#include <random>
#include <set>

#include "fubini/apostol.hpp"
#include "fubini/bernoulli.hpp"
#include "fubini/combinatorics.hpp"
#include "fubini/fubini.hpp"
#include "fubini/serialize.hpp"
#include "fubini/verifier.hpp"

namespace fubini::verify {

namespace {

// ---------------------------------------------------------------- helpers

unsigned nat(const Params& p, const char* key) {
    return static_cast<unsigned>(p.at(key).numerator().get_ui());
}

const Rat& rat(const Params& p, const char* key) { return p.at(key); }

Sides sides(const Rat& a, const Rat& b) { return {a.str(), b.str()}; }
Sides sides(const Int& a, const Int& b) { return {fubini::to_string(a), fubini::to_string(b)}; }
Sides sides(const std::pair<Rat, Rat>& ab) { return sides(ab.first, ab.second); }
Sides sides(const std::pair<Int, Int>& ab) { return sides(ab.first, ab.second); }
Sides sides(const PolyZ& a, const PolyZ& b) { return {serialize(a), serialize(b)}; }
Sides sides(const BiPolyZ& a, const BiPolyZ& b) { return {serialize(a), serialize(b)}; }
Sides sides(const RatFunc& a, const RatFunc& b) { return {serialize(a), serialize(b)}; }

Sides refutation(bool printed_holds) { return {printed_holds ? "holds" : "refuted", "refuted"}; }

Rat sign_rat(long e) { return Rat(neg_one_pow(e)); }

const PolyZ& F(unsigned n) { return fubini_poly(n).poly; }
Rat Fy(unsigned n, const Rat& y) { return F(n).eval(y); }
Rat Fnum(unsigned n) { return Rat(fubini_number(n)); }

// Grid builders. `lo` is the smallest index that satisfies the identity.
std::vector<Params> over_n(unsigned lo, unsigned hi) {
    std::vector<Params> out;
    for (unsigned n = lo; n <= hi; ++n) out.push_back({{"n", Rat(n)}});
    return out;
}

std::vector<Params> over_two(const char* a, unsigned a_lo, unsigned a_hi, const char* b, unsigned b_lo,
                             unsigned b_hi) {
    std::vector<Params> out;
    for (unsigned i = a_lo; i <= a_hi; ++i)
        for (unsigned j = b_lo; j <= b_hi; ++j) out.push_back({{a, Rat(i)}, {b, Rat(j)}});
    return out;
}

// Independent Bernoulli oracle: sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1,
// which fixes B_1 = -1/2 without touching Stirling numbers.
Rat bernoulli_classical(unsigned n) {
    std::vector<Rat> b{Rat(1)};
    for (unsigned m = 1; m <= n; ++m) {
        Rat acc;
        for (unsigned k = 0; k < m; ++k) acc += Rat(binomial(m + 1, k)) * b[k];
        b.push_back(-acc / Rat(m + 1));
    }
    return b[n];
}

// (-1)^m sum_j C(m,j) B_{n+j}
Rat binomial_bernoulli(unsigned m, unsigned n) {
    Rat s;
    for (unsigned j = 0; j <= m; ++j) s += Rat(binomial(m, j)) * bernoulli(n + j);
    return sign_rat(m) * s;
}

Rat two_var_at(unsigned n, const Rat& x, const Rat& y) { return fubini_two_var(n).poly.eval(x, y); }

// Part 1: every sample point. Part 2: one symbolic case per n.
std::vector<Params> points_then_symbolic(unsigned lo, const Bounds& b, const char* point_key) {
    std::vector<Params> out;
    const auto points = sample_grid(b.samples);
    for (unsigned n = lo; n <= b.n_max; ++n) {
        for (const auto& y : points) out.push_back({{"n", Rat(n)}, {"part", Rat(1)}, {point_key, y}});
        out.push_back({{"n", Rat(n)}, {"part", Rat(2)}});
    }
    return out;
}

RatFunc rf(const Rat& c) { return RatFunc(PolyQ::constant(c)); }
RatFunc rf(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return RatFunc(PolyQ(std::move(v)));
}

// B_{k+1}(λ)/(k+1)
RatFunc scaled_apostol(unsigned k) { return apostol_bernoulli(k + 1).fn / rf(Rat(k + 1)); }

Sides shifted_square_symbolic(unsigned n) {
    const RatFunc d = rf({1, 2});
    const RatFunc y = rf({0, 1});
    const RatFunc lhs = rf(Rat(pow(Int(2), n + 1))) * rf({1, 1}) * compose(F(n), y * y / d);
    const RatFunc rhs = d * RatFunc(to_rational(F(n))) + compose(F(n), -y / d);
    return sides(lhs, rhs);
}

Sides apostol_split_symbolic(unsigned n) {
    const RatFunc l = rf({0, 1});
    const RatFunc denom = rf({-1, 0, 1});
    const RatFunc lead = rf(Rat(pow(Int(2), n + 1)));
    RatFunc sum;
    for (unsigned k = 0; k <= n; ++k) {
        const RatFunc bracket = lead * pow(l, k) + pow(rf({-1, 1}), k + 1);
        sum = sum + rf(Rat(stirling2(n, k) * factorial(k))) * pow(-l, k) * bracket / pow(denom, k + 1);
    }
    return sides(sum, scaled_apostol(n));
}

Sides apostol_products_symbolic(unsigned n) {
    RatFunc lhs;
    for (unsigned k = 0; k <= n; ++k) lhs = lhs + rf(Rat(binomial(n, k))) * scaled_apostol(k) * scaled_apostol(n - k);
    return sides(lhs, -(scaled_apostol(n + 1) + scaled_apostol(n)));
}

// ------------------------------------------------------- printed forms

// Uncorrected shifted-square identity:
// F_n(y) = 2^(n+1)(1+y) F_n(y^2/(1+2y)) - (1+2y) F_n(-y).
bool printed_shifted_square_holds(unsigned n, const Rat& y) {
    const Rat lhs = Fy(n, y);
    const Rat rhs = Rat(pow(Int(2), n + 1)) * (Rat(1) + y) * Fy(n, y * y / (Rat(1) + Rat(2) * y)) -
                    (Rat(1) + Rat(2) * y) * Fy(n, -y);
    return lhs == rhs;
}

// Uncorrected odd p-Bernoulli formula: upper Stirling argument 2n-1, sign (-1)^(k+1).
Rat printed_pb_odd(unsigned n, unsigned p) {
    Rat sum;
    for (unsigned k = 0; k <= 2 * n - 1; ++k)
        sum += sign_rat(k + 1) * Rat(stirling2(2 * n - 1, k + 1) * factorial(k + 1), Int(k + p + 1));
    return Rat(Int(p + 1), Int(p)) * sum;
}

// Uncorrected even p-Bernoulli formula: sign (-1)^k.
Rat printed_pb_even(unsigned n, unsigned p) {
    Rat sum;
    for (unsigned k = 0; k <= 2 * n; ++k)
        sum += sign_rat(k) * Rat(stirling2(2 * n + 1, k + 1) * factorial(k + 1), Int(k + p + 1));
    return Rat(Int(p + 1), Int(p)) * sum;
}

// The explicit sum (n+1)(-1)^n λ sum_k S2(n,k) k! (1/(λ-1))^(k+1) read at n = 0.
RatFunc printed_reciprocal_n0() {
    const RatFunc inverse = RatFunc(PolyQ::constant(Rat(1))) / RatFunc(PolyQ{Rat(-1), Rat(1)});
    return RatFunc(PolyQ::identity()) * inverse;
}

// Uncorrected product integral: ∫ B_m B_n over (-inf, 0] against
// (-1)^m (m+1)(n+1) sum_j C(m,j) B_{n+j}. The exact left side of B_m B_n
// comes from the corrected statement at indices (m-1, n-1).
bool printed_product_integral_holds(unsigned m, unsigned n) {
    const Rat exact = Rat(Int(m) * Int(n)) * integrate(F(m - 1) * F(n - 1), Rat(-1), Rat(0));
    const Rat printed = Rat(Int(m + 1) * Int(n + 1)) * binomial_bernoulli(m, n);
    return exact == printed;
}

bool printed_stirling_cross_holds(unsigned i, unsigned j) {
    Int s(0);
    for (unsigned k = 0; k <= i; ++k) s += stirling2(i, k) * binomial(k, j);
    return s == stirling2(i + 1, j + 1);
}

// ---------------------------------------------------------------- entries

std::vector<RegistryEntry> build_registry() {
    std::vector<RegistryEntry> r;

    auto add = [&r](RegistryEntry e) { r.push_back(std::move(e)); };

    add({.id = "eq1_series",
         .formula = "sum_{k>=0} k^n x^k = F_n(x/(1-x))/(1-x); at x = 1/2 the sum is 2 F_n",
         .description = "Geometric moment series: exact partial sum to N = 80 plus exact tail equals the closed form",
         .quick = {.n_max = 6},
         .full = {.n_max = 10},
         .grid =
             [](const Bounds& b) {
                 std::vector<Params> out;
                 for (unsigned n = 0; n <= b.n_max; ++n)
                     for (const Rat& x : {Rat(Int(1), Int(2)), Rat(Int(1), Int(3)), Rat(Int(-1), Int(2)),
                                          Rat(Int(2), Int(5))})
                         out.push_back({{"n", Rat(n)}, {"terms", Rat(80)}, {"x", x}});
                 return out;
             },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 const unsigned terms = nat(p, "terms");
                 const Rat& x = rat(p, "x");
                 return sides(geometric_moment_partial_sum(n, x, terms) + geometric_moment_tail(n, x, terms),
                              geometric_moment_limit(n, x));
             }});

    add({.id = "eq4_shift",
         .formula = "y F_n(x+1;y) = (1+y) F_n(x;y) - x^n",
         .description = "Unit shift in x of the two-variable polynomial, as a bivariate identity",
         .quick = {.n_max = 8},
         .full = {.n_max = 20},
         .grid = [](const Bounds& b) { return over_n(0, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 const BiPolyZ f = fubini_two_var(n).poly;
                 const BiPolyZ y = BiPolyZ::monomial(Int(1), 0, 1);
                 const BiPolyZ lhs = y * f.substitute_affine(Int(1), Int(1), Int(1), Int(0));
                 const BiPolyZ rhs = BiPolyZ::from_y(PolyZ{Int(1), Int(1)}) * f - BiPolyZ::monomial(Int(1), n, 0);
                 return sides(lhs, rhs);
             }});

    add({.id = "eq5_binomial",
         .formula = "sum_k C(n,k) F_k = 2 F_n, n >= 1",
         .description = "Binomial transform of Fubini numbers",
         .quick = {.n_max = 15},
         .full = {.n_max = 40},
         .grid = [](const Bounds& b) { return over_n(1, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 Int s(0);
                 for (unsigned k = 0; k <= n; ++k) s += binomial(n, k) * fubini_number(k);
                 return sides(s, Int(2 * fubini_number(n)));
             }});

    add({.id = "eq6_alt_binomial",
         .formula = "2 sum_k C(n,k) (-1)^k F_k = (-1)^n F_n + 1",
         .description = "Alternating binomial transform of Fubini numbers",
         .quick = {.n_max = 15},
         .full = {.n_max = 40},
         .grid = [](const Bounds& b) { return over_n(0, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 Int s(0);
                 for (unsigned k = 0; k <= n; ++k) s += neg_one_pow(k) * binomial(n, k) * fubini_number(k);
                 return sides(Int(2 * s), Int(neg_one_pow(n) * fubini_number(n) + 1));
             }});

    add({.id = "eq7_x1",
         .formula = "y F_n(1;y) = (1+y) F_n(y), n >= 1",
         .description = "Two-variable polynomial at x = 1, as a polynomial identity in y",
         .quick = {.n_max = 8},
         .full = {.n_max = 20},
         .grid = [](const Bounds& b) { return over_n(1, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 const PolyZ at_one = fubini_two_var(n).poly.eval_x(Int(1));
                 return sides(at_one.shifted_up(1), PolyZ{Int(1), Int(1)} * F(n));
             }});

    add({.id = "eq9_xneg1",
         .formula = "(1+y) F_n(-1;y) = y F_n(y) + (-1)^n",
         .description = "Two-variable polynomial at x = -1, as a polynomial identity in y",
         .quick = {.n_max = 8},
         .full = {.n_max = 20},
         .grid = [](const Bounds& b) { return over_n(0, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 const PolyZ at_minus_one = fubini_two_var(n).poly.eval_x(Int(-1));
                 return sides(PolyZ{Int(1), Int(1)} * at_minus_one,
                              F(n).shifted_up(1) + PolyZ::constant(Int(neg_one_pow(n))));
             }});

    add({.id = "eq10_egf",
         .formula = "F_n(y) = y sum_{k=1}^{n} C(n,k) F_{n-k}(y), n >= 1",
         .description = "Coefficient form of the exponential generating function 1/(1 - y(e^t - 1))",
         .quick = {.n_max = 10},
         .full = {.n_max = 30},
         .grid = [](const Bounds& b) { return over_n(1, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 PolyZ s;
                 for (unsigned k = 1; k <= n; ++k) s += F(n - k) * binomial(n, k);
                 return sides(F(n), s.shifted_up(1));
             }});

    add({.id = "eq11_recurrence",
         .formula = "F_{n+1}(y) = y d/dy [(1+y) F_n(y)]",
         .description = "Stirling construction equals the derivative recurrence, coefficientwise",
         .quick = {.n_max = 15},
         .full = {.n_max = 40},
         .grid = [](const Bounds& b) { return over_n(0, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 return sides(F(n), fubini_poly_recurrence(n).poly);
             }});

    add({.id = "eq12_products_numbers",
         .formula = "2 sum_k C(n,k) F_k F_{n-k} = F_{n+1} + F_n",
         .description = "Sums of products of Fubini numbers",
         .quick = {.n_max = 10},
         .full = {.n_max = 20},
         .grid = [](const Bounds& b) { return over_n(0, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 Int s(0);
                 for (unsigned k = 0; k <= n; ++k) s += binomial(n, k) * fubini_number(k) * fubini_number(n - k);
                 return sides(Int(2 * s), Int(fubini_number(n + 1) + fubini_number(n)));
             }});

    add({.id = "eq13_products_poly",
         .formula = "(y+1) sum_k C(n,k) F_k(y) F_{n-k}(y) = F_{n+1}(y) + F_n(y)",
         .description = "Sums of products of Fubini polynomials, as a polynomial identity",
         .quick = {.n_max = 10},
         .full = {.n_max = 20},
         .grid = [](const Bounds& b) { return over_n(0, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 PolyZ s;
                 for (unsigned k = 0; k <= n; ++k) s += (F(k) * F(n - k)) * binomial(n, k);
                 return sides(PolyZ{Int(1), Int(1)} * s, F(n + 1) + F(n));
             }});

    add({.id = "eq13_general_xy",
         .formula = "y sum_k C(n,k) F_k(x1;y) F_{n-k}(x2;y) = F_{n+1}(s;y) - s F_n(s;y), s = x1+x2-1",
         .description = "Two-variable sums of products at rational sample points (x1, x2, y)",
         .quick = {.n_max = 6, .samples = 9},
         .full = {.n_max = 15, .samples = 25},
         .grid =
             [](const Bounds& b) {
                 std::vector<Params> out;
                 const auto pts = sample_grid(b.samples);
                 const std::size_t s = pts.size();
                 for (unsigned n = 0; n <= b.n_max; ++n)
                     for (std::size_t i = 0; i < s; ++i)
                         out.push_back({{"n", Rat(n)},
                                        {"x1", pts[(i + 7) % s]},
                                        {"x2", pts[(i + 3) % s]},
                                        {"y", pts[i]}});
                 return out;
             },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 const Rat &x1 = rat(p, "x1"), &x2 = rat(p, "x2"), &y = rat(p, "y");
                 Rat s;
                 for (unsigned k = 0; k <= n; ++k)
                     s += Rat(binomial(n, k)) * two_var_at(k, x1, y) * two_var_at(n - k, x2, y);
                 const Rat shift = x1 + x2 - Rat(1);
                 return sides(y * s, two_var_at(n + 1, shift, y) - shift * two_var_at(n, shift, y));
             }});

    add({.id = "eq14_ordered_partitions",
         .formula = "F_n = sum_k S2(n,k) k! = number of ordered set partitions of an n-set",
         .description = "Fubini numbers (part 1) and block-count refinement (part 2) against enumeration",
         .quick = {.n_max = 7},
         .full = {.n_max = 10},
         .grid =
             [](const Bounds& b) {
                 std::vector<Params> out;
                 const unsigned top = std::min(b.n_max, kDefaultEnumerationCap);
                 for (unsigned n = 0; n <= top; ++n) {
                     out.push_back({{"n", Rat(n)}, {"part", Rat(1)}});
                     if (n <= 8) out.push_back({{"n", Rat(n)}, {"part", Rat(2)}});
                 }
                 return out;
             },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 if (nat(p, "part") == 1) return sides(fubini_number(n), fubini_number_bruteforce(n));
                 return sides(F(n), PolyZ(ordered_partition_counts(n)));
             }});

    add({.id = "eq15_special_values",
         .formula = "F_{2k}(-1/2) = 0 and F_n(-2) = (-1)^n 2 F_n",
         .description = "Special values from the reflection formula; part 1 at y = -2 (n >= 1), part 2 at y = -1/2 (even n >= 2)",
         .quick = {.n_max = 10},
         .full = {.n_max = 20},
         .grid =
             [](const Bounds& b) {
                 std::vector<Params> out;
                 for (unsigned n = 1; n <= b.n_max; ++n) {
                     out.push_back({{"n", Rat(n)}, {"part", Rat(1)}});
                     if (n % 2 == 0) out.push_back({{"n", Rat(n)}, {"part", Rat(2)}});
                 }
                 return out;
             },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 if (nat(p, "part") == 1) return sides(Fy(n, Rat(-2)), sign_rat(n) * Rat(2) * Fnum(n));
                 if (n % 2 != 0 || n == 0) throw DomainError("the y = -1/2 zero needs even n >= 2");
                 return sides(Fy(n, Rat(Int(-1), Int(2))), Rat(0));
             }});

    add({.id = "eq17_alt_products",
         .formula = "sum_k C(n,k) (-1)^k F_k F_{n-k} = 0 (n odd), (4/3) F_n (n even), n >= 1",
         .description = "Alternating sums of products of Fubini numbers",
         .quick = {.n_max = 10},
         .full = {.n_max = 20},
         .grid = [](const Bounds& b) { return over_n(1, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 Int s(0);
                 for (unsigned k = 0; k <= n; ++k)
                     s += neg_one_pow(k) * binomial(n, k) * fubini_number(k) * fubini_number(n - k);
                 const Rat rhs = (n % 2 != 0) ? Rat(0) : Rat(Int(4), Int(3)) * Fnum(n);
                 return sides(Rat(s), rhs);
             }});

    add({.id = "eq18_two_var_reflection",
         .formula = "F_n(x;y-1) = (-1)^n F_n(1-x;-y)",
         .description = "Reflection of the two-variable polynomial, as a bivariate identity",
         .quick = {.n_max = 8},
         .full = {.n_max = 20},
         .grid = [](const Bounds& b) { return over_n(0, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 const BiPolyZ f = fubini_two_var(n).poly;
                 const BiPolyZ lhs = f.substitute_affine(Int(1), Int(0), Int(1), Int(-1));
                 BiPolyZ rhs = f.substitute_affine(Int(-1), Int(1), Int(-1), Int(0));
                 if (n % 2 != 0) rhs = -rhs;
                 return sides(lhs, rhs);
             }});

    add({.id = "eq19_reflection",
         .formula = "F_n(y) = (-1)^n (y/(y+1)) F_n(-y-1), n >= 1",
         .description = "Reflection formula at rational sample points, y = -1 singular (part 1); cleared of y+1 as a polynomial identity (part 2)",
         .quick = {.n_max = 6, .samples = 9},
         .full = {.n_max = 15, .samples = 25},
         .grid = [](const Bounds& b) { return points_then_symbolic(1, b, "y"); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 if (nat(p, "part") == 2) {
                     PolyZ rhs = F(n).compose(PolyZ{Int(-1), Int(-1)}).shifted_up(1);
                     if (n % 2 != 0) rhs = -rhs;
                     return sides(PolyZ{Int(1), Int(1)} * F(n), rhs);
                 }
                 const Rat& y = rat(p, "y");
                 if (y == Rat(-1)) throw DomainError("reflection formula is singular at y = -1");
                 return sides(Fy(n, y), sign_rat(n) * y / (y + Rat(1)) * Fy(n, -y - Rat(1)));
             }});

    add({.id = "eq21_explicit",
         .formula = "F_n(y) = y sum_{k=1}^{n} S2(n,k) (-1)^(n+k) k! (y+1)^(k-1), n >= 1",
         .description = "Explicit formula in powers of y+1, coefficientwise",
         .quick = {.n_max = 12},
         .full = {.n_max = 25},
         .grid = [](const Bounds& b) { return over_n(1, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 return sides(fubini_explicit_reflection(n).poly, F(n));
             }});

    add({.id = "eq23_two_y",
         .formula = "sum_k C(n,k) F_k(x1;y1) F_{n-k}(x2;y2) = [y2 F_n(x1+x2;y2) - y1 F_n(x1+x2;y1)]/(y2-y1)",
         .description = "Sums of products at two different y values; part 1 with x1 = x2 = 0, part 2 two-variable",
         .quick = {.n_max = 6, .samples = 9},
         .full = {.n_max = 15, .samples = 25},
         .grid =
             [](const Bounds& b) {
                 std::vector<Params> out;
                 const auto pts = sample_grid(b.samples);
                 const std::size_t s = pts.size();
                 for (unsigned n = 0; n <= b.n_max; ++n)
                     for (std::size_t i = 0; i < s; ++i) {
                         out.push_back({{"n", Rat(n)}, {"part", Rat(1)}, {"y1", pts[i]}, {"y2", pts[(i + 5) % s]}});
                         out.push_back({{"n", Rat(n)},
                                        {"part", Rat(2)},
                                        {"x1", pts[(i + 2) % s]},
                                        {"x2", pts[(i + 9) % s]},
                                        {"y1", pts[i]},
                                        {"y2", pts[(i + 5) % s]}});
                     }
                 return out;
             },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 const Rat &y1 = rat(p, "y1"), &y2 = rat(p, "y2");
                 if (y1 == y2) throw DomainError("needs y1 != y2");
                 const bool two_var = nat(p, "part") == 2;
                 const Rat x1 = two_var ? rat(p, "x1") : Rat(0);
                 const Rat x2 = two_var ? rat(p, "x2") : Rat(0);
                 Rat s;
                 for (unsigned k = 0; k <= n; ++k)
                     s += Rat(binomial(n, k)) * two_var_at(k, x1, y1) * two_var_at(n - k, x2, y2);
                 const Rat x = x1 + x2;
                 return sides(s, (y2 * two_var_at(n, x, y2) - y1 * two_var_at(n, x, y1)) / (y2 - y1));
             }});

    add({.id = "eq24_corrected_split",
         .formula = "2^(n+1) (1+y) F_n(y^2/(1+2y)) = (1+2y) F_n(y) + F_n(-y/(1+2y))",
         .description = "Corrected shifted-square identity at rational sample points, y = -1/2 singular (part 1); as canonical rational functions of y (part 2)",
         .corrected = true,
         .printed_form = "F_n(y) = 2^(n+1) (1+y) F_n(y^2/(1+2y)) - (1+2y) F_n(-y)",
         .quick = {.n_max = 6, .samples = 9},
         .full = {.n_max = 15, .samples = 25},
         .grid = [](const Bounds& b) { return points_then_symbolic(0, b, "y"); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 if (nat(p, "part") == 2) return shifted_square_symbolic(n);
                 const Rat& y = rat(p, "y");
                 const Rat d = Rat(1) + Rat(2) * y;
                 if (d.is_zero()) throw DomainError("singular at y = -1/2");
                 const Rat lhs = Rat(pow(Int(2), n + 1)) * (Rat(1) + y) * Fy(n, y * y / d);
                 return sides(lhs, d * Fy(n, y) + Fy(n, -y / d));
             },
         .witness_params = {{"n", Rat(1)}, {"y", Rat(1)}},
         .printed_witness = [] { return refutation(printed_shifted_square_holds(1, Rat(1))); }});

    add({.id = "eq25_moment",
         .formula = "∫_{-1}^{0} y^k F_n(y) dy = ((-1)^k/k!) sum_{j=0}^{k} S1(k+1,j+1) B_{n+j}, n >= 1",
         .description = "Moment integrals of Fubini polynomials: exact integral against the Stirling-Bernoulli sum",
         .quick = {.n_max = 8, .k_max = 5},
         .full = {.n_max = 20, .k_max = 10},
         .grid = [](const Bounds& b) { return over_two("k", 0, b.k_max, "n", 1, b.n_max); },
         .evaluate = [](const Params& p) { return sides(fubini_moment_integral(nat(p, "k"), nat(p, "n"))); }});

    add({.id = "eq26_integral",
         .formula = "∫_{-1}^{0} F_n(y) dy = B_n, n >= 1",
         .description = "Integral representation of Bernoulli numbers",
         .quick = {.n_max = 12},
         .full = {.n_max = 30},
         .grid = [](const Bounds& b) { return over_n(1, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 return sides(bernoulli_via_integral(n), bernoulli(n));
             }});

    add({.id = "eq28_parity",
         .formula = "∫_{-1}^{0} y^p F_n(y) dy = (-1)^p ((p+1)/(p+2)) B_{n-1,p+1} (n odd), (-1)^(p+1) ((p+1)/(p+2)) B_{n-1,p+1} (n even), n >= 2",
         .description = "Parity form of the moment integral through p-Bernoulli numbers",
         .quick = {.n_max = 8, .p_max = 4},
         .full = {.n_max = 15, .p_max = 8},
         .grid = [](const Bounds& b) { return over_two("n", 2, b.n_max, "p", 0, b.p_max); },
         .evaluate = [](const Params& p) { return sides(fubini_moment_parity(nat(p, "p"), nat(p, "n"))); }});

    add({.id = "eq29_two_var_specialization",
         .formula = "F_n(0;y) = F_n(y) and F_n(0;1) = F_n",
         .description = "Specializations of the two-variable polynomial; part 3 checks the x^n coefficient is 1",
         .quick = {.n_max = 8},
         .full = {.n_max = 20},
         .grid =
             [](const Bounds& b) {
                 std::vector<Params> out;
                 for (unsigned n = 0; n <= b.n_max; ++n)
                     for (unsigned part = 1; part <= 3; ++part) out.push_back({{"n", Rat(n)}, {"part", Rat(part)}});
                 return out;
             },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 const BiPolyZ f = fubini_two_var(n).poly;
                 switch (nat(p, "part")) {
                     case 1: return sides(f.eval_x(Int(0)), F(n));
                     case 2: return sides(f.eval(Rat(0), Rat(1)), Fnum(n));
                     default:
                         return Sides{std::to_string(f.degree_x()) + ":" + serialize(f.row(n)),
                                      std::to_string(n) + ":" + serialize(PolyZ::constant(Int(1)))};
                 }
             }});

    add({.id = "eq30_product_integral",
         .formula = "∫_{-1}^{0} F_m(y) F_n(y) dy = (-1)^m sum_{j=0}^{m} C(m,j) B_{n+j}, n >= 1",
         .description = "Integrals of products of Fubini polynomials (part 1); m <-> n symmetry of the right side (part 2)",
         .quick = {.n_max = 6, .m_max = 6},
         .full = {.n_max = 12, .m_max = 12},
         .grid =
             [](const Bounds& b) {
                 std::vector<Params> out;
                 for (unsigned m = 0; m <= b.m_max; ++m)
                     for (unsigned n = 1; n <= b.n_max; ++n) {
                         out.push_back({{"m", Rat(m)}, {"n", Rat(n)}, {"part", Rat(1)}});
                         if (m >= 1) out.push_back({{"m", Rat(m)}, {"n", Rat(n)}, {"part", Rat(2)}});
                     }
                 return out;
             },
         .evaluate =
             [](const Params& p) {
                 const unsigned m = nat(p, "m"), n = nat(p, "n");
                 if (nat(p, "part") == 1) return sides(fubini_product_integral(m, n));
                 if (m == 0) throw DomainError("symmetric form needs m >= 1");
                 return sides(binomial_bernoulli(m, n), binomial_bernoulli(n, m));
             }});

    add({.id = "eq32_bernoulli",
         .formula = "B_n = sum_{k=0}^{n} S2(n,k) (-1)^k k!/(k+1)",
         .description = "Stirling explicit formula against the classical recurrence sum_k C(n+1,k) B_k = 0",
         .quick = {.n_max = 15},
         .full = {.n_max = 30},
         .grid = [](const Bounds& b) { return over_n(0, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 return sides(bernoulli(n), bernoulli_classical(n));
             }});

    add({.id = "eq33_lemma2",
         .formula = "sum_{k=j}^{m} S2(m,k) S1(k+1,j+1) (-1)^k = (-1)^m C(m,j)",
         .description = "Stirling-binomial inversion lemma",
         .quick = {.m_max = 15},
         .full = {.m_max = 40},
         .grid =
             [](const Bounds& b) {
                 std::vector<Params> out;
                 for (unsigned m = 0; m <= b.m_max; ++m)
                     for (unsigned j = 0; j <= m; ++j) out.push_back({{"j", Rat(j)}, {"m", Rat(m)}});
                 return out;
             },
         .evaluate =
             [](const Params& p) {
                 const unsigned m = nat(p, "m"), j = nat(p, "j");
                 return sides(lemma2_lhs(m, j), Int(neg_one_pow(m) * binomial(m, j)));
             }});

    add({.id = "eq84_split",
         .formula = "F_n(y) = sum_k S2(n,k) k! y^k [2^(n+1)(y+1) y^k + (-1)^(k+1)] / (2y+1)^(k+1), y != -1/2",
         .description = "Split explicit formula at sample points (part 1) and cleared of (2y+1)^(n+1) symbolically (part 2)",
         .quick = {.n_max = 6, .samples = 9},
         .full = {.n_max = 15, .samples = 25},
         .grid =
             [](const Bounds& b) {
                 std::vector<Params> out;
                 const auto pts = sample_grid(b.samples);
                 for (unsigned n = 0; n <= b.n_max; ++n) {
                     for (const auto& y : pts) out.push_back({{"n", Rat(n)}, {"part", Rat(1)}, {"y", y}});
                     if (n <= 10) out.push_back({{"n", Rat(n)}, {"part", Rat(2)}});
                 }
                 return out;
             },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 if (nat(p, "part") == 2) {
                     const auto [cleared, expected] = fubini_explicit_split_cleared(n);
                     return sides(cleared, expected);
                 }
                 const Rat& y = rat(p, "y");
                 return sides(fubini_explicit_split(n, y), Fy(n, y));
             }});

    add({.id = "eq85_number_split",
         .formula = "F_n = sum_k S2(n,k) k! [2^(n+2) + (-1)^(k+1)] / 3^(k+1)",
         .description = "Split formula at y = 1",
         .quick = {.n_max = 10},
         .full = {.n_max = 20},
         .grid = [](const Bounds& b) { return over_n(0, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 return sides(fubini_number_split(n), Fnum(n));
             }});

    add({.id = "eq86_number_split_neg2",
         .formula = "F_n = sum_k (-1)^(n-k) S2(n,k) k! 2^(k-1) [2^(n+k+1) + 1] / 3^(k+1), n >= 1",
         .description = "Split formula at y = -2",
         .quick = {.n_max = 10},
         .full = {.n_max = 20},
         .grid = [](const Bounds& b) { return over_n(1, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 return sides(fubini_number_split_neg2(n), Fnum(n));
             }});

    add({.id = "double_sum",
         .formula = "sum_{k,j} S2(n,k) S2(m,j) (-1)^(k+j) k! j!/(k+j+1) = (-1)^m sum_j C(m,j) B_{n+j}, n >= 1",
         .description = "Double Stirling sum extending the Bernoulli explicit formula",
         .quick = {.n_max = 6, .m_max = 6},
         .full = {.n_max = 12, .m_max = 12},
         .grid = [](const Bounds& b) { return over_two("m", 0, b.m_max, "n", 1, b.n_max); },
         .evaluate = [](const Params& p) { return sides(double_sum_identity(nat(p, "n"), nat(p, "m"))); }});

    add({.id = "pb_relation",
         .formula = "sum_{j=0}^{p} (-1)^j S1(p,j) B_{n+j} = (p!/(p+1)) B_{n,p}",
         .description = "p-Bernoulli numbers: B_{n,0} = B_n (part 1) and the shifted form sum_j (-1)^(j+1) S1(p+1,j+1) B_{n+j} = ((p+1)!/(p+2)) B_{n-1,p+1} (part 2)",
         .quick = {.n_max = 10, .p_max = 5},
         .full = {.n_max = 20, .p_max = 10},
         .grid =
             [](const Bounds& b) {
                 std::vector<Params> out;
                 for (unsigned n = 0; n <= b.n_max; ++n) {
                     out.push_back({{"n", Rat(n)}, {"p", Rat(0)}, {"part", Rat(1)}});
                     if (n >= 1)
                         for (unsigned q = 0; q <= b.p_max; ++q)
                             out.push_back({{"n", Rat(n)}, {"p", Rat(q)}, {"part", Rat(2)}});
                 }
                 return out;
             },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n"), q = nat(p, "p");
                 if (nat(p, "part") == 1) return sides(p_bernoulli(n, 0), bernoulli(n));
                 if (n == 0) throw DomainError("shifted form needs n >= 1");
                 Rat s;
                 for (unsigned j = 0; j <= q; ++j)
                     s += sign_rat(j + 1) * Rat(stirling1_unsigned(q + 1, j + 1)) * bernoulli(n + j);
                 return sides(s, Rat(factorial(q + 1), Int(q + 2)) * p_bernoulli(n - 1, q + 1));
             }});

    add({.id = "pb_odd_explicit",
         .formula = "B_{2n-1,p} = ((p+1)/p) sum_{k=0}^{2n-1} S2(2n,k+1) (-1)^k (k+1)!/(k+p+1), n >= 1, p >= 1",
         .description = "Corrected explicit formula for odd-index p-Bernoulli numbers against the Stirling relation",
         .corrected = true,
         .printed_form = "B_{2n-1,p} = ((p+1)/p) sum_{k=0}^{2n-1} S2(2n-1,k+1) (-1)^(k+1) (k+1)!/(k+p+1)",
         .quick = {.n_max = 5, .p_max = 5},
         .full = {.n_max = 10, .p_max = 10},
         .grid = [](const Bounds& b) { return over_two("n", 1, b.n_max, "p", 1, b.p_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n"), q = nat(p, "p");
                 return sides(p_bernoulli_odd_explicit(n, q), p_bernoulli(2 * n - 1, q));
             },
         .witness_params = {{"n", Rat(2)}, {"p", Rat(1)}},
         .printed_witness = [] { return refutation(printed_pb_odd(2, 1) == p_bernoulli(3, 1)); }});

    add({.id = "pb_even_explicit",
         .formula = "B_{2n,p} = ((p+1)/p) sum_{k=0}^{2n} S2(2n+1,k+1) (-1)^(k+1) (k+1)!/(k+p+1), n >= 1, p >= 1",
         .description = "Corrected explicit formula for even-index p-Bernoulli numbers against the Stirling relation",
         .corrected = true,
         .printed_form = "B_{2n,p} = ((p+1)/p) sum_{k=0}^{2n} S2(2n+1,k+1) (-1)^k (k+1)!/(k+p+1)",
         .quick = {.n_max = 5, .p_max = 5},
         .full = {.n_max = 10, .p_max = 10},
         .grid = [](const Bounds& b) { return over_two("n", 1, b.n_max, "p", 1, b.p_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n"), q = nat(p, "p");
                 return sides(p_bernoulli_even_explicit(n, q), p_bernoulli(2 * n, q));
             },
         .witness_params = {{"n", Rat(2)}, {"p", Rat(2)}},
         .printed_witness = [] { return refutation(printed_pb_even(2, 2) == p_bernoulli(4, 2)); }});

    add({.id = "ab_routes",
         .formula = "B_n(λ) = (n/(λ-1)) sum_{k=0}^{n-1} S2(n-1,k) k! (λ/(1-λ))^k = (n/(λ-1)) F_{n-1}(λ/(1-λ))",
         .description = "Apostol-Bernoulli functions: termwise rational-function sum equals the Fubini composition, as canonical rational functions",
         .quick = {.n_max = 8},
         .full = {.n_max = 20},
         .grid = [](const Bounds& b) { return over_n(1, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 return sides(apostol_bernoulli(n).fn, apostol_via_fubini(n).fn);
             }});

    add({.id = "ab_guoqi",
         .formula = "B_{n+1}(λ)/(n+1) = (-1)^n λ sum_{k=0}^{n} S2(n,k) k! (1/(λ-1))^(k+1), n >= 1",
         .description = "Explicit formula from the reflection explicit formula; the n = 0 reading is refuted",
         .corrected = true,
         .printed_form = "B_{n+1}(λ)/(n+1) = (-1)^n λ sum_{k=0}^{n} S2(n,k) k! (1/(λ-1))^(k+1), n >= 0",
         .quick = {.n_max = 8},
         .full = {.n_max = 19},
         .grid = [](const Bounds& b) { return over_n(1, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 return sides(apostol_explicit_reciprocal(n).fn, apostol_bernoulli(n + 1).fn);
             },
         .witness_params = {{"n", Rat(0)}},
         .printed_witness = [] { return refutation(printed_reciprocal_n0() == apostol_bernoulli(1).fn); }});

    add({.id = "ab_split",
         .formula = "B_{n+1}(λ)/(n+1) = sum_k S2(n,k) k! (-λ)^k [2^(n+1) λ^k + (λ-1)^(k+1)] / (λ^2-1)^(k+1), λ != ±1",
         .description = "Split explicit formula for Apostol-Bernoulli functions at rational sample points (part 1) and as canonical rational functions (part 2)",
         .quick = {.n_max = 5, .samples = 9},
         .full = {.n_max = 12, .samples = 25},
         .grid = [](const Bounds& b) { return points_then_symbolic(0, b, "lambda"); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 if (nat(p, "part") == 2) return apostol_split_symbolic(n);
                 const Rat& l = rat(p, "lambda");
                 const Rat split = apostol_explicit_split(n, l);
                 return sides(split, apostol_bernoulli(n + 1).fn.eval(l) / Rat(n + 1));
             }});

    add({.id = "ab_sum_products",
         .formula = "sum_k C(n,k) a_k a_{n-k} = -(a_{n+1} + a_n), a_k = B_{k+1}(λ)/(k+1)",
         .description = "Sums of products of Apostol-Bernoulli functions at rational sample points, λ = 1 the pole (part 1); as canonical rational functions (part 2)",
         .quick = {.n_max = 5, .samples = 9},
         .full = {.n_max = 10, .samples = 25},
         .grid = [](const Bounds& b) { return points_then_symbolic(0, b, "lambda"); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n");
                 if (nat(p, "part") == 2) return apostol_products_symbolic(n);
                 return sides(apostol_sum_of_products(n, rat(p, "lambda")));
             }});

    add({.id = "ab_moment_integral",
         .formula = "∫_{-inf}^{0} λ^k/(λ-1)^(k+1) B_{n+1}(λ) dλ = ((n+1)/k!) sum_{j=0}^{k} S1(k+1,j+1) B_{n+j}, n >= 1",
         .description = "Improper moment integral reduced exactly by y = λ/(1-λ)",
         .quick = {.n_max = 4, .k_max = 3},
         .full = {.n_max = 8, .k_max = 6},
         .grid = [](const Bounds& b) { return over_two("k", 0, b.k_max, "n", 1, b.n_max); },
         .evaluate = [](const Params& p) { return sides(apostol_moment_integral(nat(p, "k"), nat(p, "n"))); }});

    add({.id = "ab_product_integral",
         .formula = "∫_{-inf}^{0} B_{m+1}(λ) B_{n+1}(λ) dλ = (-1)^m (m+1)(n+1) sum_{j=0}^{m} C(m,j) B_{n+j}, n >= 1",
         .description = "Corrected-index integral of products of Apostol-Bernoulli functions",
         .corrected = true,
         .printed_form = "∫_{-inf}^{0} B_m(λ) B_n(λ) dλ = (-1)^m (m+1)(n+1) sum_{j=0}^{m} C(m,j) B_{n+j}",
         .quick = {.n_max = 4, .m_max = 4},
         .full = {.n_max = 8, .m_max = 8},
         .grid = [](const Bounds& b) { return over_two("m", 0, b.m_max, "n", 1, b.n_max); },
         .evaluate = [](const Params& p) { return sides(apostol_product_integral(nat(p, "m"), nat(p, "n"))); },
         .witness_params = {{"m", Rat(1)}, {"n", Rat(1)}},
         .printed_witness = [] { return refutation(printed_product_integral_holds(1, 1)); }});

    add({.id = "stirling_inverse",
         .formula = "sum_k s1(n,k) S2(k,m) = [n = m], s1(n,k) = (-1)^(n+k) S1(n,k)",
         .description = "Signed first-kind and second-kind Stirling matrices are mutually inverse",
         .quick = {.n_max = 15, .m_max = 15},
         .full = {.n_max = 40, .m_max = 40},
         .grid = [](const Bounds& b) { return over_two("m", 0, b.m_max, "n", 0, b.n_max); },
         .evaluate =
             [](const Params& p) {
                 const unsigned n = nat(p, "n"), m = nat(p, "m");
                 return sides(stirling_inverse_entry(n, m), Int(n == m ? 1 : 0));
             }});

    add({.id = "stirling_cross",
         .formula = "sum_k C(i,k) S2(k,j) = S2(i+1,j+1)",
         .description = "Binomial recurrence for second-kind Stirling numbers; the transposed sum is refuted",
         .corrected = true,
         .printed_form = "sum_k S2(i,k) C(k,j) = S2(i+1,j+1)",
         .quick = {.n_max = 15},
         .full = {.n_max = 40},
         .grid =
             [](const Bounds& b) {
                 std::vector<Params> out;
                 for (unsigned i = 0; i <= b.n_max; ++i)
                     for (unsigned j = 0; j <= i; ++j) out.push_back({{"i", Rat(i)}, {"j", Rat(j)}});
                 return out;
             },
         .evaluate = [](const Params& p) { return sides(stirling_cross_identity(nat(p, "i"), nat(p, "j"))); },
         .witness_params = {{"i", Rat(2)}, {"j", Rat(0)}},
         .printed_witness = [] { return refutation(printed_stirling_cross_holds(2, 0)); }});

    std::sort(r.begin(), r.end(), [](const RegistryEntry& a, const RegistryEntry& b) { return a.id < b.id; });
    return r;
}

}  // namespace

std::vector<Rat> sample_grid(unsigned samples) {
    static const std::vector<Rat> fixed = [] {
        std::vector<Rat> v{Rat(0)};
        const std::pair<int, int> magnitudes[] = {{1, 1}, {2, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 7},
                                                  {5, 2}, {3, 1}, {3, 2}, {1, 7}, {4, 5}, {7, 3}};
        for (const auto& [num, den] : magnitudes) {
            v.emplace_back(Int(num), Int(den));
            v.emplace_back(Int(-num), Int(den));
        }
        return v;
    }();
    if (samples <= fixed.size()) return {fixed.begin(), fixed.begin() + samples};
    std::vector<Rat> out = fixed;
    std::set<Rat> seen(fixed.begin(), fixed.end());
    std::mt19937 rng(20240601u);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 20);
    while (out.size() < samples) {
        Rat candidate(Int(num(rng)), Int(den(rng)));
        if (seen.insert(candidate).second) out.push_back(candidate);
    }
    return out;
}

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> entries = build_registry();
    return entries;
}

const RegistryEntry& find_entry(std::string_view id) {
    for (const auto& e : registry())
        if (e.id == id) return e;
    throw UsageError("unknown identity id: '" + std::string(id) + "' (see list-identities)");
}

Bounds BoundOverrides::apply(Bounds b) const {
    if (n_max) b.n_max = *n_max;
    if (m_max) b.m_max = *m_max;
    if (k_max) b.k_max = *k_max;
    if (p_max) b.p_max = *p_max;
    if (samples) b.samples = *samples;
    return b;
}

}  // namespace fubini::verify
