#include "fubini/bernoulli.hpp"

#include <atomic>
#include <mutex>

#include "fubini/combinatorics.hpp"
#include "fubini/fubini.hpp"
#include "fubini/memo.hpp"

namespace fubini {

namespace {

const MemoTable<Rat>& bernoulli_cache() {
    static const MemoTable<Rat> cache;
    return cache;
}

Rat build_bernoulli(unsigned n) {
    const auto& s2 = stirling2_table().row(n);
    Rat sum;
    for (unsigned k = 0; k <= n; ++k) {
        Rat term(s2[k] * factorial(k), Int(k + 1));
        if (k % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

struct Sabotage {
    std::atomic<bool> active{false};
    std::mutex mutex;
    unsigned index = 0;
    Rat delta;
};

Sabotage& sabotage() {
    static Sabotage s;
    return s;
}

void require_positive(unsigned n, const char* what) {
    if (n == 0) throw DomainError(std::string(what) + " requires n >= 1");
}

// (-1)^m sum_j C(m,j) B_{n+j}
Rat binomial_bernoulli_sum(unsigned m, unsigned n) {
    Rat sum;
    for (unsigned j = 0; j <= m; ++j) sum += Rat(binomial(m, j)) * bernoulli(n + j);
    return (m % 2 == 0) ? sum : -sum;
}

Rat moment_integral_exact(unsigned k, unsigned n) {
    return integrate(fubini_poly(n).poly.shifted_up(k), Rat(-1), Rat(0));
}

}  // namespace

Rat bernoulli(unsigned n) {
    Rat value = bernoulli_cache().get(n, build_bernoulli);
    auto& s = sabotage();
    if (s.active.load(std::memory_order_acquire)) {
        std::lock_guard lock(s.mutex);
        if (s.index == n) value += s.delta;
    }
    return value;
}

Rat bernoulli_via_integral(unsigned n) {
    require_positive(n, "the integral representation");
    return integrate(fubini_poly(n).poly, Rat(-1), Rat(0));
}

std::pair<Rat, Rat> fubini_moment_integral(unsigned k, unsigned n) {
    require_positive(n, "the moment integral");
    Rat sum;
    for (unsigned j = 0; j <= k; ++j) sum += Rat(stirling1_unsigned(k + 1, j + 1)) * bernoulli(n + j);
    Rat formula = sum / Rat(factorial(k));
    if (k % 2 != 0) formula = -formula;
    return {moment_integral_exact(k, n), formula};
}

std::pair<Rat, Rat> fubini_product_integral(unsigned m, unsigned n) {
    require_positive(n, "the product integral");
    const PolyZ product = fubini_poly(m).poly * fubini_poly(n).poly;
    return {integrate(product, Rat(-1), Rat(0)), binomial_bernoulli_sum(m, n)};
}

std::pair<Rat, Rat> double_sum_identity(unsigned n, unsigned m) {
    require_positive(n, "the double sum identity");
    Rat sum;
    for (unsigned k = 0; k <= n; ++k) {
        const Int a = stirling2(n, k) * factorial(k);
        if (a == 0) continue;
        for (unsigned j = 0; j <= m; ++j) {
            Rat term(a * stirling2(m, j) * factorial(j), Int(k + j + 1));
            if ((k + j) % 2 != 0) term = -term;
            sum += term;
        }
    }
    return {sum, binomial_bernoulli_sum(m, n)};
}

Rat p_bernoulli(unsigned n, unsigned p) {
    Rat sum;
    for (unsigned j = 0; j <= p; ++j) {
        Rat term = Rat(stirling1_unsigned(p, j)) * bernoulli(n + j);
        if (j % 2 != 0) term = -term;
        sum += term;
    }
    return Rat(Int(p + 1), factorial(p)) * sum;
}

Rat p_bernoulli_odd_explicit(unsigned n, unsigned p) {
    require_positive(n, "the odd p-Bernoulli formula");
    if (p == 0) throw DomainError("the odd p-Bernoulli formula requires p >= 1");
    Rat sum;
    for (unsigned k = 0; k <= 2 * n - 1; ++k) {
        Rat term(stirling2(2 * n, k + 1) * factorial(k + 1), Int(k + p + 1));
        if (k % 2 != 0) term = -term;
        sum += term;
    }
    return Rat(Int(p + 1), Int(p)) * sum;
}

Rat p_bernoulli_even_explicit(unsigned n, unsigned p) {
    require_positive(n, "the even p-Bernoulli formula");
    if (p == 0) throw DomainError("the even p-Bernoulli formula requires p >= 1");
    Rat sum;
    for (unsigned k = 0; k <= 2 * n; ++k) {
        Rat term(stirling2(2 * n + 1, k + 1) * factorial(k + 1), Int(k + p + 1));
        if (k % 2 == 0) term = -term;
        sum += term;
    }
    return Rat(Int(p + 1), Int(p)) * sum;
}

std::pair<Rat, Rat> fubini_moment_parity(unsigned p, unsigned n) {
    if (n < 2) throw DomainError("the parity form of the moment integral requires n >= 2");
    Rat formula = Rat(Int(p + 1), Int(p + 2)) * p_bernoulli(n - 1, p + 1);
    const bool n_odd = n % 2 != 0;
    const unsigned sign_exponent = n_odd ? p : p + 1;
    if (sign_exponent % 2 != 0) formula = -formula;
    return {moment_integral_exact(p, n), formula};
}

namespace testing {

void sabotage_bernoulli(unsigned n, const Rat& delta) {
    auto& s = sabotage();
    std::lock_guard lock(s.mutex);
    s.index = n;
    s.delta = delta;
    s.active.store(true, std::memory_order_release);
}

void clear_bernoulli_sabotage() {
    auto& s = sabotage();
    std::lock_guard lock(s.mutex);
    s.active.store(false, std::memory_order_release);
}

}  // namespace testing

}  // namespace fubini
