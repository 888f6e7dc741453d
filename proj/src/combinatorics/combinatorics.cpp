#include "fubini/combinatorics.hpp"

#include <mutex>

namespace fubini {

StirlingTriangle::StirlingTriangle(StirlingKind kind) : kind_(kind) { rows_.push_back({Int(1)}); }

void StirlingTriangle::grow_to(unsigned n) const {
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
        const auto& prev = rows_.back();
        const auto m = static_cast<unsigned>(rows_.size());  // new row index
        std::vector<Int> next(m + 1, Int(0));
        for (unsigned k = 1; k <= m; ++k) {
            const Int carried = k < prev.size() ? prev[k] : Int(0);
            // second kind: k*S(m-1,k); first kind: (m-1)*S(m-1,k)
            const unsigned long weight = kind_ == StirlingKind::second ? k : m - 1;
            next[k] = carried * weight + prev[k - 1];
        }
        rows_.push_back(std::move(next));
    }
}

const std::vector<Int>& StirlingTriangle::row(unsigned n) const {
    {
        std::shared_lock lock(mutex_);
        if (n < rows_.size()) return rows_[n];
    }
    grow_to(n);
    std::shared_lock lock(mutex_);
    return rows_[n];
}

Int StirlingTriangle::at(unsigned n, unsigned k) const {
    if (k > n) return Int(0);
    return row(n)[k];
}

const StirlingTriangle& stirling2_table() {
    static const StirlingTriangle table(StirlingKind::second);
    return table;
}

const StirlingTriangle& stirling1_table() {
    static const StirlingTriangle table(StirlingKind::first_unsigned);
    return table;
}

Int stirling2(unsigned n, unsigned k) { return stirling2_table().at(n, k); }

Int stirling1_unsigned(unsigned n, unsigned k) { return stirling1_table().at(n, k); }

Int stirling1_signed(unsigned n, unsigned k) {
    Int v = stirling1_unsigned(n, k);
    return ((n + k) % 2 == 0) ? v : Int(-v);
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Int factorial(unsigned n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Int lemma2_lhs(unsigned m, unsigned j) {
    if (j > m) throw DomainError("lemma2_lhs requires j <= m");
    Int sum(0);
    for (unsigned k = j; k <= m; ++k) {
        const Int t = stirling2(m, k) * stirling1_unsigned(k + 1, j + 1);
        if (k % 2 == 0)
            sum += t;
        else
            sum -= t;
    }
    return sum;
}

std::pair<Int, Int> stirling_cross_identity(unsigned i, unsigned j) {
    Int lhs(0);
    for (unsigned k = 0; k <= i; ++k) lhs += binomial(i, k) * stirling2(k, j);
    return {lhs, stirling2(i + 1, j + 1)};
}

Int stirling_inverse_entry(unsigned n, unsigned m) {
    Int sum(0);
    for (unsigned k = 0; k <= n; ++k) sum += stirling1_signed(n, k) * stirling2(k, m);
    return sum;
}

}  // namespace fubini
