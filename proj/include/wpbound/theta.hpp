#pragma once

// Correction budgets theta1 (for c1^2) and theta2 (for c2) between the cover
// in P^4 and the minimal resolution of the surface in P^4(w).

#include "wpbound/rational.hpp"
#include "wpbound/strata.hpp"
#include "wpbound/weights.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace wpbound {

/// The affine form c0 + c1*dhat + c2*deltahat.
struct AffineBudget {
    Rational c0 = 0;
    Rational c1 = 0;
    Rational c2 = 0;

    Rational at(const Rational& dhat, const Rational& delta) const { return c0 + c1 * dhat + c2 * delta; }

    friend AffineBudget operator+(const AffineBudget& a, const AffineBudget& b) {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
    }
    friend bool operator==(const AffineBudget& a, const AffineBudget& b) {
        return a.c0 == b.c0 && a.c1 == b.c1 && a.c2 == b.c2;
    }
};

/// Presence flags q_i for the coordinate points P_i (sorted-weight index).
/// 1 means the point is assumed to lie on the surface.
using PointFlags = std::array<int, 5>;
inline constexpr PointFlags kAllPointsPresent{1, 1, 1, 1, 1};

enum class Accounting {
    absorbed,  // dominated points absorbed into their curve
    strict,          // dominated points also charged at their own h
};

struct BudgetEntry {
    Stratum stratum;
    int count_per_degree = 0;  // multiplies dhat (curve strata)
    int count_constant = 0;    // point presence flag (point strata)
    Rational deficiency = 0;   // D(r)
};

struct SingularityBudget {
    std::vector<BudgetEntry> entries;
    Accounting accounting = Accounting::absorbed;
};

class RefinedModeUnavailable : public std::runtime_error {
public:
    explicit RefinedModeUnavailable(Stratum offending);

    const Stratum& stratum() const noexcept { return stratum_; }

private:
    Stratum stratum_;
};

/// (0, 10 m w4 - (|w|-5)^2, 2(|w|-5))
AffineBudget general_theta1(const WeightVector& w);
/// (0, 10 m w4 - (|w|-5), -(|w|-5))
AffineBudget general_theta2(const WeightVector& w);

/// theta1 + theta2. Throws std::domain_error when the deltahat coefficient is <= -5.
AffineBudget k_prime(const AffineBudget& theta1, const AffineBudget& theta2);

/// Pairwise-coprime theta1 with the crude per-point cost w_i. Flags on weight-1
/// coordinates are ignored (those points are smooth). Throws std::invalid_argument
/// when the weights are not pairwise coprime.
AffineBudget coprime_theta1(const WeightVector& w, const PointFlags& q);

/// Worst-case singularity accounting used by the refined budgets. Throws
/// RefinedModeUnavailable if a singular stratum of dimension >= 2 exists.
SingularityBudget refined_budget(const WeightVector& w,
                                 Accounting accounting = Accounting::absorbed,
                                 const PointFlags& q = kAllPointsPresent);

AffineBudget refined_theta1(const SingularityBudget& budget, const WeightVector& w);
AffineBudget refined_theta2(const SingularityBudget& budget, const WeightVector& w);

}  // namespace wpbound
