#pragma once

// Degree bounds for non-general-type surfaces: the inequalities relating
// degree, sectional genus and chi of the cover in P^4, the quadratic and
// cubic branch bounds, and the sweep over the auxiliary degree r.

#include "wpbound/polynomial.hpp"
#include "wpbound/rational.hpp"
#include "wpbound/theta.hpp"
#include "wpbound/weights.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpbound {

enum class Mode { general, coprime, refined };
enum class CubicVariant { canonical, printed_ex1 };

/// Requested mode/variant does not apply to the weights.
class IncompatibleMode : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One admissible configuration of the cover: degree, minimal hypersurface
/// degree, auxiliary degree r, K.H and the gamma of the chi estimate.
struct InequalityPoint {
    Integer dhat;
    std::int64_t shat = 2;
    std::int64_t r = 2;
    Rational delta = 0;
    Rational gamma = 0;

    /// From 2 pihat - 2 = dhat + deltahat.
    Rational pihat() const { return (Rational(dhat) + delta + 2) / 2; }
};

/// Chern numbers of a smooth surface. Noether: 12 chi = c1^2 + c2, K^2 = c1^2.
struct ChernData {
    Rational chi = 0;
    Rational c1sq = 0;
    Rational c2 = 0;
    Rational k2 = 0;

    bool satisfies_noether() const { return 12 * chi == c1sq + c2 && k2 == c1sq; }
};

/// dhat^2/r + (r-5) dhat
Rational delta_upper_bound(const Integer& dhat, std::int64_t r);
/// (dhat^2/r + (r-4) dhat + 1) / 2
Rational pi_upper_bound(const Integer& dhat, std::int64_t r);

/// dhat (shat-1)^2 / (2 shat), the largest admissible gamma.
Rational gamma_max(const Integer& dhat, std::int64_t shat);

/// Lower bound for chi(O) of the cover. Requires dhat > shat(shat-1) and
/// 0 <= gamma <= gamma_max; throws std::domain_error otherwise.
Rational chi_lower_bound(const Integer& dhat, std::int64_t shat, const Rational& gamma);
Rational chi_lower_bound(const InequalityPoint& p);

/// Minimum over admissible gamma. The bound is concave in gamma, so the
/// minimum is at gamma = 0 or gamma = gamma_max.
Rational chi_lower_bound_min(const Integer& dhat, std::int64_t shat);

/// dhat^2 - 10 dhat - 5 deltahat + c2 - c1^2. Throws std::invalid_argument if
/// `c` violates Noether's formula.
Rational double_point_residual(const Integer& dhat, const Rational& delta, const ChernData& c);
/// dhat^2 - 5 dhat - 10(pihat - 1) + 12 chi - 2 K^2, the same relation in terms
/// of sectional genus, chi and K^2.
Rational double_point_residual_genus(const Integer& dhat, const Rational& pihat, const ChernData& c);

struct IntegerBound {
    Integer value;
    bool floor_dominates = false;  // no integer above `floor` satisfies f <= 0
};

/// Largest integer n >= floor with f(n) <= 0 (or floor itself when none exceeds
/// it). Requires a positive leading coefficient. The answer is certified with a
/// Sturm root count, so f(n) > 0 for every n > value.
IntegerBound largest_nonpositive_integer(const Polynomial& f, const Integer& floor);

// Branch polynomials in dhat.
Polynomial delta_upper_bound_polynomial(std::int64_t r);
/// chi lower bound with gamma = gamma_slope * dhat.
Polynomial chi_lower_bound_polynomial(std::int64_t shat, const Rational& gamma_slope);
Polynomial quadratic_polynomial(std::int64_t r, const Integer& m, const AffineBudget& kprime);
/// The cubic at one gamma endpoint (gamma_max_endpoint selects gamma = gamma_max).
Polynomial cubic_canonical_polynomial(std::int64_t shat, const Integer& m, const AffineBudget& theta1,
                                      bool gamma_max_endpoint);
Polynomial cubic_printed_ex1_polynomial(std::int64_t shat);

/// Bound from the quadratic branch at auxiliary degree r; at least r^2.
/// Throws std::domain_error unless r > 5 + k2'.
Integer quadratic_bound(std::int64_t r, const Integer& m, const AffineBudget& kprime);

struct CubicOutcome {
    Integer bound;
    bool gamma_max_active = false;  // the gamma = gamma_max endpoint decided the bound
};

/// Cubic branch bound for a given shat, floored at max(shat^2, shat(shat-1)).
CubicOutcome cubic_outcome_canonical(std::int64_t shat, const Integer& m, const AffineBudget& theta1);
Integer cubic_bound_canonical(std::int64_t shat, const Integer& m, const AffineBudget& theta1);
/// The cubic written out for weights (1,1,1,1,2). Requires shat >= 3.
Integer cubic_bound_printed_ex1(std::int64_t shat);

struct BoundOptions {
    Mode mode = Mode::refined;
    CubicVariant variant = CubicVariant::canonical;
    std::optional<std::int64_t> r_max;
    Accounting accounting = Accounting::absorbed;
    PointFlags q = kAllPointsPresent;
};

struct QuadEntry {
    std::int64_t r = 0;
    Integer bound;      // quadratic branch at r
    Integer candidate;  // max(bound, cubic bounds for shat < r)
};

struct CubicEntry {
    std::int64_t shat = 0;
    Integer bound;
    CubicVariant variant = CubicVariant::canonical;  // variant actually used
    bool gamma_max_active = false;
};

struct BoundReport {
    explicit BoundReport(WeightVector w) : weights(std::move(w)) {}

    WeightVector weights;
    Mode mode = Mode::refined;
    CubicVariant variant = CubicVariant::canonical;
    Accounting accounting = Accounting::absorbed;
    PointFlags q = kAllPointsPresent;
    AffineBudget theta1;
    AffineBudget theta2;
    AffineBudget kprime;
    std::vector<BudgetEntry> budget;  // refined mode only
    std::vector<QuadEntry> quad_table;
    std::vector<CubicEntry> cubic_table;
    std::int64_t r_min = 0;
    std::int64_t r_max = 0;
    std::int64_t r_star = 0;
    Integer dhat_bound;
    Rational d_bound;          // dhat_bound / m
    Rational sw_cubed_ratio;   // dhat_bound / |w|^3
    std::vector<std::string> warnings;
};

bool is_example_one_weights(const WeightVector& w);

/// Sweeps r over [r_min, r_max] (default r_max = r_min + 50) and returns the
/// r minimizing max(quadratic(r), cubic(shat) for 2 <= shat < r).
/// Throws IncompatibleMode and RefinedModeUnavailable.
BoundReport overall_bound(const WeightVector& w, const BoundOptions& options);

const char* to_string(Mode mode);
const char* to_string(CubicVariant variant);
const char* to_string(Accounting accounting);
Mode parse_mode(std::string_view text);
CubicVariant parse_variant(std::string_view text);
Accounting parse_accounting(std::string_view text);

}  // namespace wpbound
