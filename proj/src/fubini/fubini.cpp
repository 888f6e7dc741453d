#include "fubini/fubini.hpp"


#include "fubini/combinatorics.hpp"
#include "fubini/memo.hpp"

namespace fubini {

namespace {

const MemoTable<FubiniPoly>& poly_cache() {
    static const MemoTable<FubiniPoly> cache;
    return cache;
}

FubiniPoly build_fubini_poly(unsigned n) {
    const auto& s2 = stirling2_table().row(n);
    std::vector<Int> coeffs(n + 1);
    for (unsigned k = 0; k <= n; ++k) coeffs[k] = s2[k] * factorial(k);
    return {n, PolyZ(std::move(coeffs))};
}

// Restricted growth strings: element i joins one of the `blocks` open
// blocks or opens a new one. Each set partition is visited once.
void enumerate_partitions(unsigned remaining, unsigned blocks, std::vector<unsigned long>& by_blocks) {
    if (remaining == 0) {
        ++by_blocks[blocks];
        return;
    }
    for (unsigned b = 0; b < blocks; ++b) enumerate_partitions(remaining - 1, blocks, by_blocks);
    enumerate_partitions(remaining - 1, blocks + 1, by_blocks);
}

void require_inside_unit_interval(const Rat& x) {
    if (abs(x) >= Rat(1)) throw DomainError("geometric moment series requires |x| < 1, got " + x.str());
}

}  // namespace

const FubiniPoly& fubini_poly(unsigned n) { return poly_cache().get(n, build_fubini_poly); }

FubiniPoly fubini_poly_recurrence(unsigned n) {
    const PolyZ y = PolyZ::identity();
    const PolyZ one_plus_y{Int(1), Int(1)};
    PolyZ current = PolyZ::constant(Int(1));
    for (unsigned step = 0; step < n; ++step) current = y * (one_plus_y * current).derivative();
    return {n, current};
}

Int fubini_number(unsigned n) {
    Int sum(0);
    for (const auto& c : fubini_poly(n).poly.coefficients()) sum += c;
    return sum;
}

std::vector<Int> ordered_partition_counts(unsigned n, unsigned cap) {
    if (n > cap) throw DomainError("enumeration cap exceeded: n = " + std::to_string(n));
    std::vector<unsigned long> unordered(n + 1, 0);
    enumerate_partitions(n, 0, unordered);
    std::vector<Int> out(n + 1);
    Int block_orders(1);
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) block_orders *= k;
        out[k] = Int(unordered[k]) * block_orders;
    }
    return out;
}

Int fubini_number_bruteforce(unsigned n, unsigned cap) {
    Int total(0);
    for (const auto& c : ordered_partition_counts(n, cap)) total += c;
    return total;
}

FubiniBiPoly fubini_two_var(unsigned n) {
    std::vector<PolyZ> rows(n + 1);
    for (unsigned k = 0; k <= n; ++k) rows[n - k] = fubini_poly(k).poly * binomial(n, k);
    return {n, BiPolyZ(std::move(rows))};
}

FubiniPoly fubini_explicit_reflection(unsigned n) {
    if (n == 0) throw DomainError("reflection explicit formula requires n >= 1");
    const PolyZ y_plus_one{Int(1), Int(1)};
    PolyZ sum;
    PolyZ power = PolyZ::constant(Int(1));  // (y+1)^(k-1)
    for (unsigned k = 1; k <= n; ++k) {
        Int c = stirling2(n, k) * factorial(k);
        if ((n + k) % 2 != 0) c = -c;
        sum += power * c;
        power = power * y_plus_one;
    }
    return {n, sum.shifted_up(1)};
}

Rat fubini_explicit_split(unsigned n, const Rat& y) {
    const Rat two_y_plus_one = Rat(2) * y + Rat(1);
    if (two_y_plus_one.is_zero()) throw DomainError("split formula is singular at y = -1/2");
    const Rat lead = Rat(pow(Int(2), n + 1)) * (y + Rat(1));
    Rat sum;
    for (unsigned k = 0; k <= n; ++k) {
        const Rat yk = pow(y, static_cast<long>(k));
        const Rat bracket = lead * yk + Rat(neg_one_pow(k + 1));
        sum += Rat(stirling2(n, k) * factorial(k)) * yk * bracket / pow(two_y_plus_one, static_cast<long>(k + 1));
    }
    return sum;
}

std::pair<PolyZ, PolyZ> fubini_explicit_split_cleared(unsigned n) {
    const PolyZ y = PolyZ::identity();
    const PolyZ two_y_plus_one{Int(1), Int(2)};
    const PolyZ lead = PolyZ{Int(1), Int(1)} * pow(Int(2), n + 1);
    PolyZ sum;
    for (unsigned k = 0; k <= n; ++k) {
        const PolyZ yk = pow(y, k);
        const PolyZ bracket = lead * yk + PolyZ::constant(Int(neg_one_pow(k + 1)));
        sum += (yk * bracket * pow(two_y_plus_one, n - k)) * (stirling2(n, k) * factorial(k));
    }
    return {sum, pow(two_y_plus_one, n + 1) * fubini_poly(n).poly};
}

Rat fubini_number_split(unsigned n) {
    const Int lead = pow(Int(2), n + 2);
    Rat sum;
    for (unsigned k = 0; k <= n; ++k) {
        const Int bracket = lead + neg_one_pow(k + 1);
        sum += Rat(stirling2(n, k) * factorial(k) * bracket, pow(Int(3), k + 1));
    }
    return sum;
}

Rat fubini_number_split_neg2(unsigned n) {
    if (n == 0) throw DomainError("the y = -2 split formula requires n >= 1");
    Rat sum;
    for (unsigned k = 0; k <= n; ++k) {
        const Int bracket = pow(Int(2), n + k + 1) + 1;
        // 2^(k-1) is 1/2 at k = 0.
        const Rat two_pow = pow(Rat(2), static_cast<long>(k) - 1);
        Rat term = Rat(stirling2(n, k) * factorial(k) * bracket, pow(Int(3), k + 1)) * two_pow;
        if ((n - k) % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

Rat geometric_moment_partial_sum(unsigned n, const Rat& x, unsigned terms) {
    require_inside_unit_interval(x);
    Rat sum;
    Rat xk(1);
    for (unsigned k = 0; k <= terms; ++k) {
        sum += Rat(pow(Int(k), n)) * xk;  // 0^0 = 1
        xk *= x;
    }
    return sum;
}

Rat geometric_moment_limit(unsigned n, const Rat& x) {
    require_inside_unit_interval(x);
    const Rat one_minus = Rat(1) - x;
    return fubini_poly(n).poly.eval(x / one_minus) / one_minus;
}

Rat geometric_moment_tail(unsigned n, const Rat& x, unsigned terms) {
    require_inside_unit_interval(x);
    const Int offset(terms + 1);
    Rat sum;
    for (unsigned i = 0; i <= n; ++i)
        sum += Rat(binomial(n, i) * pow(offset, n - i)) * geometric_moment_limit(i, x);
    return pow(x, static_cast<long>(terms) + 1) * sum;
}

}  // namespace fubini
