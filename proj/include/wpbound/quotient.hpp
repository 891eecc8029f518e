#pragma once

// Cyclic quotient surface singularities 1/n(1,a): Hirzebruch-Jung chains,
// discrepancies and the self-intersection of the discrepancy divisor.

#include "wpbound/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wpbound {

class CyclicQuotient {
public:
    /// Requires n >= 2, 1 <= a < n and gcd(a, n) = 1; throws std::invalid_argument.
    CyclicQuotient(std::int64_t n, std::int64_t a);

    std::int64_t order() const noexcept { return n_; }
    std::int64_t weight() const noexcept { return a_; }

private:
    std::int64_t n_;
    std::int64_t a_;
};

struct ResolutionChain {
    std::vector<std::int64_t> b;  // -E_i^2, each >= 2
    std::vector<Rational> disc;   // discrepancy coefficients, each in (-1, 0]
    Rational delta_sq;            // Delta^2, in [-n, 0]
};

/// Ceiling continued fraction n/a = b1 - 1/(b2 - 1/(... - 1/bk)).
std::vector<std::int64_t> hj_expand(const CyclicQuotient& s);

/// Solves a_{i-1} - b_i a_i + a_{i+1} = b_i - 2 (a_0 = a_{k+1} = 0) exactly and
/// returns Delta^2 = sum a_i (b_i - 2). Throws on an empty chain or b_i < 2.
ResolutionChain discrepancies(std::span<const std::int64_t> b);

/// Full resolution data of 1/n(1,a).
ResolutionChain resolve(const CyclicQuotient& s);

Rational delta_sq_of(const CyclicQuotient& s);

/// D(n) = max over admissible a of -Delta^2(1/n(1,a)), by exhaustive enumeration.
Rational worst_deficiency(std::int64_t n);

}  // namespace wpbound
