#include "wpbound/quotient.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace wpbound {

CyclicQuotient::CyclicQuotient(std::int64_t n, std::int64_t a) : n_(n), a_(a) {
    if (n < 2) {
        throw std::invalid_argument("cyclic quotient order must be >= 2, got " + std::to_string(n));
    }
    if (a < 1 || a >= n || std::gcd(a, n) != 1) {
        throw std::invalid_argument("1/" + std::to_string(n) + "(1," + std::to_string(a) +
                                    ") needs 1 <= a < n with gcd(a, n) = 1");
    }
}

std::vector<std::int64_t> hj_expand(const CyclicQuotient& s) {
    std::vector<std::int64_t> b;
    std::int64_t p = s.order();
    std::int64_t q = s.weight();
    while (q != 0) {
        std::int64_t c = (p + q - 1) / q;
        b.push_back(c);
        std::int64_t next = c * q - p;
        p = q;
        q = next;
    }
    return b;
}

ResolutionChain discrepancies(std::span<const std::int64_t> b) {
    if (b.empty()) {
        throw std::invalid_argument("empty resolution chain");
    }
    for (auto bi : b) {
        if (bi < 2) {
            throw std::invalid_argument("chain entry " + std::to_string(bi) + " is below 2");
        }
    }
    const std::size_t k = b.size();
    // Thomas algorithm on the tridiagonal matrix with diagonal -b_i and unit
    // off-diagonals. All pivots are nonzero since b_i >= 2.
    std::vector<Rational> upper(k), rhs(k);
    Rational pivot = -Rational(static_cast<long>(b[0]));
    upper[0] = Rational(1) / pivot;
    rhs[0] = Rational(static_cast<long>(b[0] - 2)) / pivot;
    for (std::size_t i = 1; i < k; ++i) {
        pivot = -Rational(static_cast<long>(b[i])) - upper[i - 1];
        upper[i] = Rational(1) / pivot;
        rhs[i] = (Rational(static_cast<long>(b[i] - 2)) - rhs[i - 1]) / pivot;
    }
    ResolutionChain chain;
    chain.b.assign(b.begin(), b.end());
    chain.disc.resize(k);
    chain.disc[k - 1] = rhs[k - 1];
    for (std::size_t i = k - 1; i-- > 0;) {
        chain.disc[i] = rhs[i] - upper[i] * chain.disc[i + 1];
    }
    chain.delta_sq = 0;
    for (std::size_t i = 0; i < k; ++i) {
        chain.delta_sq += chain.disc[i] * Rational(static_cast<long>(b[i] - 2));
    }
    return chain;
}

ResolutionChain resolve(const CyclicQuotient& s) {
    auto b = hj_expand(s);
    return discrepancies(b);
}

Rational delta_sq_of(const CyclicQuotient& s) { return resolve(s).delta_sq; }

Rational worst_deficiency(std::int64_t n) {
    if (n < 2) {
        throw std::invalid_argument("worst_deficiency needs n >= 2, got " + std::to_string(n));
    }
    Rational worst = 0;
    for (std::int64_t a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        Rational d = -delta_sq_of(CyclicQuotient(n, a));
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace wpbound
