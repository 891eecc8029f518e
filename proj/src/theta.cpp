#include "wpbound/theta.hpp"

#include "wpbound/quotient.hpp"

#include <string>

namespace wpbound {

namespace {

Rational excess(const WeightVector& w) { return Rational(static_cast<long>(w.sum() - 5)); }

Rational ten_m_w4(const WeightVector& w) {
    return Rational(Integer(10) * w.product() * Integer(static_cast<long>(w.largest())));
}

Rational m_of(const WeightVector& w) { return Rational(w.product()); }

}  // namespace

RefinedModeUnavailable::RefinedModeUnavailable(Stratum offending)
    : std::runtime_error("refined accounting is unavailable: singular stratum J=" + offending.label() +
                         " has dimension " + std::to_string(offending.dim) + " (r=" +
                         std::to_string(offending.r) + "); use general mode"),
      stratum_(std::move(offending)) {}

AffineBudget general_theta1(const WeightVector& w) {
    Rational e = excess(w);
    return {0, ten_m_w4(w) - e * e, 2 * e};
}

AffineBudget general_theta2(const WeightVector& w) {
    Rational e = excess(w);
    return {0, ten_m_w4(w) - e, -e};
}

AffineBudget k_prime(const AffineBudget& theta1, const AffineBudget& theta2) {
    AffineBudget sum = theta1 + theta2;
    if (sum.c2 <= -5) {
        throw std::domain_error("k2' = " + to_string(sum.c2) + " is not > -5");
    }
    return sum;
}

AffineBudget coprime_theta1(const WeightVector& w, const PointFlags& q) {
    if (!is_pairwise_coprime(w)) {
        throw std::invalid_argument("coprime budget needs pairwise coprime weights, got " + w.to_string());
    }
    Integer points = 0;
    for (int i = 0; i < 5; ++i) {
        if (w[i] > 1 && q[i]) points += Integer(static_cast<long>(w[i]));
    }
    Rational e = excess(w);
    return {Rational(w.product() * points), -e * e, 2 * e};
}

SingularityBudget refined_budget(const WeightVector& w, Accounting accounting, const PointFlags& q) {
    auto strata = singular_strata(w);
    for (const auto& s : strata) {
        if (s.dim >= 2) throw RefinedModeUnavailable(s);
    }
    SingularityBudget budget;
    budget.accounting = accounting;
    for (auto& s : strata) {
        if (s.dominated && accounting == Accounting::absorbed) continue;
        BudgetEntry e;
        if (s.dim == 1) {
            e.count_per_degree = 1;
        } else {
            e.count_constant = q[s.point_index()] ? 1 : 0;
        }
        e.deficiency = worst_deficiency(s.r);
        e.stratum = std::move(s);
        budget.entries.push_back(std::move(e));
    }
    return budget;
}

AffineBudget refined_theta1(const SingularityBudget& budget, const WeightVector& w) {
    Rational m = m_of(w);
    Rational e = excess(w);
    AffineBudget t{0, -e * e, 2 * e};
    for (const auto& entry : budget.entries) {
        if (entry.stratum.dim == 0) {
            t.c0 += m * entry.count_constant * entry.deficiency;
        } else {
            t.c1 += m * entry.count_per_degree * entry.deficiency;
        }
    }
    return t;
}

AffineBudget refined_theta2(const SingularityBudget& budget, const WeightVector& w) {
    Rational m = m_of(w);
    Rational e = excess(w);
    AffineBudget t{0, -e, -e};
    for (const auto& entry : budget.entries) {
        Rational cost = m * Rational(static_cast<long>(entry.stratum.r - 1)) + Rational(entry.stratum.h - 1);
        if (entry.stratum.dim == 0) {
            t.c0 += entry.count_constant * cost;
        } else {
            t.c1 += entry.count_per_degree * cost;
        }
    }
    return t;
}

}  // namespace wpbound
