#include "wpbound/bounds.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace wpbound {

namespace {

Rational q(std::int64_t x) { return Rational(static_cast<long>(x)); }

void require_positive_degree(std::int64_t r, const char* what) {
    if (r <= 0) {
        throw std::domain_error(std::string(what) + " needs r > 0, got " + std::to_string(r));
    }
}

Rational sextic_constant(std::int64_t shat) {
    Rational s = q(shat);
    return (s * s * s * s - 5 * s * s * s - s * s + 5 * s) / 24;
}

}  // namespace

Rational delta_upper_bound(const Integer& dhat, std::int64_t r) {
    require_positive_degree(r, "delta_upper_bound");
    Rational d(dhat);
    return d * d / q(r) + q(r - 5) * d;
}

Rational pi_upper_bound(const Integer& dhat, std::int64_t r) {
    require_positive_degree(r, "pi_upper_bound");
    Rational d(dhat);
    return (d * d / q(r) + q(r - 4) * d + 1) / 2;
}

Rational gamma_max(const Integer& dhat, std::int64_t shat) {
    return Rational(dhat) * q((shat - 1) * (shat - 1)) / q(2 * shat);
}

Rational chi_lower_bound(const Integer& dhat, std::int64_t shat, const Rational& gamma) {
    if (shat < 1) {
        throw std::domain_error("chi bound needs shat >= 1");
    }
    if (dhat <= Integer(static_cast<long>(shat * (shat - 1)))) {
        throw std::domain_error("chi bound needs dhat > shat(shat-1), got dhat=" + to_string(dhat) +
                                ", shat=" + std::to_string(shat));
    }
    if (gamma < 0 || gamma > gamma_max(dhat, shat)) {
        throw std::domain_error("gamma " + to_string(gamma) + " outside [0, " +
                                to_string(gamma_max(dhat, shat)) + "]");
    }
    Rational d(dhat);
    Rational s = q(shat);
    return d * d * d / (6 * s) + d * d * (s - 5) / (4 * s) + d * (3 * s * s - 30 * s + 71) / 24 -
           sextic_constant(shat) - gamma * gamma / 2 - gamma * (d / s + s - Rational(5, 2));
}

Rational chi_lower_bound(const InequalityPoint& p) { return chi_lower_bound(p.dhat, p.shat, p.gamma); }

Rational chi_lower_bound_min(const Integer& dhat, std::int64_t shat) {
    Rational at_zero = chi_lower_bound(dhat, shat, 0);
    Rational at_max = chi_lower_bound(dhat, shat, gamma_max(dhat, shat));
    return at_max < at_zero ? at_max : at_zero;
}

Rational double_point_residual(const Integer& dhat, const Rational& delta, const ChernData& c) {
    if (!c.satisfies_noether()) {
        throw std::invalid_argument("Chern data violates Noether's formula");
    }
    Rational d(dhat);
    return d * d - 10 * d - 5 * delta + c.c2 - c.c1sq;
}

Rational double_point_residual_genus(const Integer& dhat, const Rational& pihat, const ChernData& c) {
    Rational d(dhat);
    return d * d - 5 * d - 10 * (pihat - 1) + 12 * c.chi - 2 * c.k2;
}

namespace {

// True when f is strictly increasing on [x, inf), decided from f' for
// degree <= 3. False means "not shown", not "not increasing".
bool increasing_from(const Polynomial& f, const Rational& x) {
    Polynomial d = f.derivative();
    switch (d.degree()) {
        case 0:
            return d.leading() > 0;
        case 1:
            return d.leading() > 0 && d(x) > 0;
        case 2: {
            if (d.leading() <= 0) return false;
            Rational vertex = -d.coeff(1) / (2 * d.coeff(2));
            return d(vertex > x ? vertex : x) > 0;
        }
        default:
            return false;
    }
}

}  // namespace

IntegerBound largest_nonpositive_integer(const Polynomial& f, const Integer& floor) {
    if (f.degree() < 1) {
        if (!f.is_zero() && f.leading() > 0) return {floor, true};
        throw std::domain_error("constant polynomial is not eventually positive");
    }
    if (f.leading() <= 0) {
        throw std::domain_error("polynomial must have a positive leading coefficient");
    }
    // f(n) > 0 for all n >= hi.
    Integer hi = ceil(f.cauchy_bound());
    if (hi <= floor) hi = floor + 1;

    auto at = [&f](const Integer& n) { return f(Rational(n)); };
    std::optional<SturmSequence> sturm;
    // No root in (lo, hi] given f(lo) > 0 and f(hi) > 0.
    auto positive_above = [&](const Integer& lo) {
        if (increasing_from(f, Rational(lo))) return true;
        if (!sturm) sturm.emplace(f);
        return sturm->count_roots(Rational(lo), Rational(hi)) == 0;
    };

    if (at(floor) <= 0) {
        Integer lo = floor;
        Integer top = hi;
        while (top - lo > 1) {
            Integer mid = (lo + top) / 2;
            if (at(mid) <= 0) {
                lo = mid;
            } else {
                top = mid;
            }
        }
        if (positive_above(lo + 1)) return {lo, lo == floor};
    } else if (positive_above(floor)) {
        return {floor, true};
    }

    // Several sign changes above the floor: recursive bisection, skipping
    // intervals that contain no root. Precondition: f(top) > 0.
    if (!sturm) sturm.emplace(f);
    std::function<std::optional<Integer>(const Integer&, const Integer&)> search =
        [&](const Integer& lo, const Integer& top) -> std::optional<Integer> {
        if (top - lo <= 1) return std::nullopt;
        if (sturm->count_roots(Rational(lo), Rational(top)) == 0) return std::nullopt;
        Integer mid = (lo + top) / 2;
        if (auto right = search(mid, top)) return right;
        if (at(mid) <= 0) return mid;
        return search(lo, mid);
    };
    if (auto found = search(floor, hi)) return {*found, false};
    return {floor, true};
}

Polynomial delta_upper_bound_polynomial(std::int64_t r) {
    require_positive_degree(r, "delta_upper_bound_polynomial");
    return Polynomial{0, q(r - 5), Rational(1) / q(r)};
}

Polynomial chi_lower_bound_polynomial(std::int64_t shat, const Rational& g) {
    Rational s = q(shat);
    Rational cubic = Rational(1) / (6 * s);
    Rational quad = (s - 5) / (4 * s) - g * g / 2 - g / s;
    Rational lin = (3 * s * s - 30 * s + 71) / 24 - g * (s - Rational(5, 2));
    return Polynomial{-sextic_constant(shat), lin, quad, cubic};
}

Polynomial quadratic_polynomial(std::int64_t r, const Integer& m, const AffineBudget& kprime) {
    require_positive_degree(r, "quadratic_polynomial");
    Rational five_k2 = 5 + kprime.c2;
    Rational lead = 1 - five_k2 / q(r);
    Rational lin = -(10 + kprime.c1 + five_k2 * q(r - 5));
    Rational constant = -(6 * Rational(m) + kprime.c0);
    return Polynomial{constant, lin, lead};
}

Polynomial cubic_canonical_polynomial(std::int64_t shat, const Integer& m, const AffineBudget& theta1,
                                      bool gamma_max_endpoint) {
    Rational slope = gamma_max_endpoint ? q((shat - 1) * (shat - 1)) / q(2 * shat) : Rational(0);
    Polynomial base{-(18 * Rational(m) + 2 * theta1.c0), -(10 + 2 * theta1.c1), 1};
    return base - (5 + 2 * theta1.c2) * delta_upper_bound_polynomial(shat) +
           Rational(12) * chi_lower_bound_polynomial(shat, slope);
}

Polynomial cubic_printed_ex1_polynomial(std::int64_t shat) {
    Rational s = q(shat);
    Rational s2 = s * s;
    Rational s3 = s2 * s;
    Rational s4 = s3 * s;
    return Polynomial{-(s4 - 5 * s3 - s2 + 5 * s + 64) / 2,
                      -(9 * s3 - 16 * s2 - 23 * s - 30) / (2 * s),
                      -(3 * s4 - 12 * s3 + 22 * s2 + 2 * s + 15) / (2 * s2),
                      2 / s};
}

Integer quadratic_bound(std::int64_t r, const Integer& m, const AffineBudget& kprime) {
    if (q(r) <= 5 + kprime.c2) {
        throw std::domain_error("quadratic branch needs r > 5 + k2' = " + to_string(5 + kprime.c2) +
                                ", got r=" + std::to_string(r));
    }
    Integer floor(static_cast<long>(r));
    floor *= floor;
    return largest_nonpositive_integer(quadratic_polynomial(r, m, kprime), floor).value;
}

namespace {

Integer cubic_floor(std::int64_t shat) {
    return Integer(static_cast<long>(std::max(shat * shat, shat * (shat - 1))));
}

}  // namespace

CubicOutcome cubic_outcome_canonical(std::int64_t shat, const Integer& m, const AffineBudget& theta1) {
    if (shat < 2) {
        throw std::domain_error("cubic branch needs shat >= 2");
    }
    if (5 + 2 * theta1.c2 <= 0) {
        throw std::domain_error("cubic branch needs 5 + 2 t2 > 0, got t2 = " + to_string(theta1.c2));
    }
    Integer floor = cubic_floor(shat);
    // chi_lower_bound_min is the pointwise minimum of the two endpoint
    // polynomials, so F = min(F0, F1) and the bound is the larger of the two.
    auto at_zero = largest_nonpositive_integer(cubic_canonical_polynomial(shat, m, theta1, false), floor);
    auto at_max = largest_nonpositive_integer(cubic_canonical_polynomial(shat, m, theta1, true), floor);
    if (at_max.value > at_zero.value) return {at_max.value, true};
    return {at_zero.value, false};
}

Integer cubic_bound_canonical(std::int64_t shat, const Integer& m, const AffineBudget& theta1) {
    return cubic_outcome_canonical(shat, m, theta1).bound;
}

Integer cubic_bound_printed_ex1(std::int64_t shat) {
    if (shat < 3) {
        throw std::domain_error("printed cubic is only stated for shat >= 3");
    }
    return largest_nonpositive_integer(cubic_printed_ex1_polynomial(shat), cubic_floor(shat)).value;
}

bool is_example_one_weights(const WeightVector& w) {
    return w.weights() == std::array<Weight, 5>{1, 1, 1, 1, 2};
}

BoundReport overall_bound(const WeightVector& w, const BoundOptions& options) {
    if (options.variant == CubicVariant::printed_ex1 && !is_example_one_weights(w)) {
        throw IncompatibleMode("variant printed-ex1 only applies to weights (1,1,1,1,2), got (" +
                               w.to_string() + ")");
    }
    BoundReport report(w);
    report.mode = options.mode;
    report.variant = options.variant;
    report.accounting = options.accounting;
    report.q = options.q;

    switch (options.mode) {
        case Mode::general:
            report.theta1 = general_theta1(w);
            report.theta2 = general_theta2(w);
            break;
        case Mode::coprime:
            if (!is_pairwise_coprime(w)) {
                throw IncompatibleMode("coprime mode needs pairwise coprime weights, got (" + w.to_string() +
                                       ")");
            }
            report.theta1 = coprime_theta1(w, options.q);
            report.theta2 = general_theta2(w);
            break;
        case Mode::refined: {
            auto budget = refined_budget(w, options.accounting, options.q);
            report.theta1 = refined_theta1(budget, w);
            report.theta2 = refined_theta2(budget, w);
            report.budget = std::move(budget.entries);
            break;
        }
    }
    report.kprime = k_prime(report.theta1, report.theta2);

    report.r_min = to_int64(floor(5 + report.kprime.c2)) + 1;
    report.r_max = options.r_max.value_or(report.r_min + 50);
    if (report.r_max < report.r_min) {
        throw std::invalid_argument("r max " + std::to_string(report.r_max) + " is below r min " +
                                    std::to_string(report.r_min));
    }

    const Integer& m = w.product();
    bool printed_fallback = false;
    for (std::int64_t shat = 2; shat < report.r_max; ++shat) {
        CubicEntry e;
        e.shat = shat;
        if (options.variant == CubicVariant::printed_ex1 && shat >= 3) {
            e.variant = CubicVariant::printed_ex1;
            e.bound = cubic_bound_printed_ex1(shat);
        } else {
            printed_fallback = printed_fallback || options.variant == CubicVariant::printed_ex1;
            auto outcome = cubic_outcome_canonical(shat, m, report.theta1);
            e.variant = CubicVariant::canonical;
            e.bound = outcome.bound;
            e.gamma_max_active = outcome.gamma_max_active;
        }
        report.cubic_table.push_back(std::move(e));
    }

    Integer cubic_prefix = 0;
    std::size_t next_cubic = 0;
    for (std::int64_t r = report.r_min; r <= report.r_max; ++r) {
        while (next_cubic < report.cubic_table.size() && report.cubic_table[next_cubic].shat < r) {
            cubic_prefix = std::max(cubic_prefix, report.cubic_table[next_cubic].bound);
            ++next_cubic;
        }
        QuadEntry e;
        e.r = r;
        e.bound = quadratic_bound(r, m, report.kprime);
        e.candidate = std::max(e.bound, cubic_prefix);
        if (report.quad_table.empty() || e.candidate < report.dhat_bound) {
            report.dhat_bound = e.candidate;
            report.r_star = r;
        }
        report.quad_table.push_back(std::move(e));
    }
    report.d_bound = make_rational(report.dhat_bound, m);
    Integer sw(static_cast<long>(w.sum()));
    report.sw_cubed_ratio = make_rational(report.dhat_bound, sw * sw * sw);

    if (printed_fallback) {
        report.warnings.push_back("printed-ex1 cubic is not stated for shat=2; canonical cubic used there");
    }
    bool gamma_active = std::any_of(report.cubic_table.begin(), report.cubic_table.end(),
                                    [](const CubicEntry& e) { return e.gamma_max_active; });
    if (gamma_active) {
        report.warnings.push_back(
            "gamma=gamma_max endpoint decides some cubic bounds; its coefficient reads the bare 's' as shat");
    }
    if (report.r_star == report.r_max && report.r_max > report.r_min) {
        report.warnings.push_back("minimum attained at r max=" + std::to_string(report.r_max) +
                                  "; a wider sweep may improve the bound");
    }
    return report;
}

const char* to_string(Mode mode) {
    switch (mode) {
        case Mode::general: return "general";
        case Mode::coprime: return "coprime";
        case Mode::refined: return "refined";
    }
    return "?";
}

const char* to_string(CubicVariant variant) {
    return variant == CubicVariant::canonical ? "canonical" : "printed-ex1";
}

const char* to_string(Accounting accounting) {
    return accounting == Accounting::absorbed ? "absorbed" : "strict";
}

Mode parse_mode(std::string_view text) {
    if (text == "general") return Mode::general;
    if (text == "coprime") return Mode::coprime;
    if (text == "refined") return Mode::refined;
    throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

CubicVariant parse_variant(std::string_view text) {
    if (text == "canonical") return CubicVariant::canonical;
    if (text == "printed-ex1") return CubicVariant::printed_ex1;
    throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

Accounting parse_accounting(std::string_view text) {
    if (text == "absorbed") return Accounting::absorbed;
    if (text == "strict") return Accounting::strict;
    throw std::invalid_argument("unknown accounting '" + std::string(text) + "'");
}

}  // namespace wpbound
