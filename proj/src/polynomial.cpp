#include "wpbound/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpbound {

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
    static const Rational zero = 0;
    if (i < 0 || i > degree()) return zero;
    return c_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        d.push_back(c_[i] * static_cast<long>(i));
    }
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c = p.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
}

void Polynomial::divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot, Polynomial& rem) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = num.c_;
    std::vector<Rational> q;
    const int dd = den.degree();
    if (num.degree() >= dd) q.assign(static_cast<std::size_t>(num.degree() - dd + 1), Rational(0));
    for (int k = num.degree() - dd; k >= 0; --k) {
        Rational f = r[static_cast<std::size_t>(k + dd)] / den.leading();
        q[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= dd; ++j) {
            r[static_cast<std::size_t>(k + j)] -= f * den.c_[static_cast<std::size_t>(j)];
        }
    }
    quot = Polynomial(std::move(q));
    rem = Polynomial(std::move(r));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = (Rational(1) / a.leading()) * a;
    return a;
}

Rational Polynomial::cauchy_bound() const {
    if (degree() < 1) return 1;
    Rational worst = 0;
    for (int i = 0; i < degree(); ++i) {
        Rational ratio = abs(c_[static_cast<std::size_t>(i)] / leading());
        if (ratio > worst) worst = ratio;
    }
    return worst + 1;
}

Polynomial variable() { return Polynomial{0, 1}; }

SturmSequence::SturmSequence(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
    Polynomial g = Polynomial::gcd(p, p.derivative());
    Polynomial sqfree, rem;
    Polynomial::divmod(p, g, sqfree, rem);
    chain_.push_back(sqfree);
    chain_.push_back(sqfree.derivative());
    while (!chain_.back().is_zero()) {
        Polynomial q, r;
        Polynomial::divmod(chain_[chain_.size() - 2], chain_.back(), q, r);
        chain_.push_back(Rational(-1) * r);
    }
    chain_.pop_back();
}

int SturmSequence::sign_changes(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& p : chain_) {
        int s = sgn(p(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
    return sign_changes(a) - sign_changes(b);
}

}  // namespace wpbound
