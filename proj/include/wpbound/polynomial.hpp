#pragma once

// Dense univariate polynomials over the rationals with Sturm-sequence root
// counting. Used to locate the largest integer where a branch inequality
// still holds.

#include "wpbound/rational.hpp"

#include <initializer_list>
#include <vector>

namespace wpbound {

class Polynomial {
public:
    Polynomial() = default;
    /// Coefficients from the constant term upward.
    Polynomial(std::initializer_list<Rational> coeffs);
    explicit Polynomial(std::vector<Rational> coeffs);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    Rational operator()(const Rational& x) const;

    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws std::domain_error on division by zero.
    static void divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot, Polynomial& rem);
    static Polynomial gcd(Polynomial a, Polynomial b);

    /// Every real root lies strictly inside (-B, B) for the returned B.
    Rational cauchy_bound() const;

private:
    void trim();

    std::vector<Rational> c_;
};

/// Sturm chain of the square-free part of a nonzero polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p);

    /// Number of distinct real roots in the half-open interval (a, b], a < b.
    int count_roots(const Rational& a, const Rational& b) const;

private:
    int sign_changes(const Rational& x) const;

    std::vector<Polynomial> chain_;
};

/// The polynomial in one variable x (i.e. {0, 1}).
Polynomial variable();

}  // namespace wpbound
