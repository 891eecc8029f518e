#include "wpbound/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace wpbound {

namespace {

std::string str(const Rational& x) { return to_string(x); }
std::string str(const Integer& x) { return to_string(x); }

Json weights_json(const WeightVector& w) {
    Json a = Json::array();
    for (Weight x : w.weights()) a.push_back(x);
    return a;
}

Json stratum_json(const Stratum& s) {
    Json j;
    j["J"] = s.vanishing;
    j["dim"] = s.dim;
    j["r"] = s.r;
    j["h"] = str(s.h);
    j["singular"] = s.singular;
    j["dominated"] = s.dominated;
    return j;
}

Stratum stratum_from_json(const Json& j) {
    Stratum s;
    s.vanishing = j.at("J").get<std::vector<int>>();
    s.dim = j.at("dim").get<int>();
    s.r = j.at("r").get<Weight>();
    s.h = parse_integer(j.at("h").get<std::string>());
    s.singular = j.at("singular").get<bool>();
    s.dominated = j.at("dominated").get<bool>();
    return s;
}

AffineBudget budget_from_json(const Json& j) {
    return {parse_rational(j.at("c0").get<std::string>()), parse_rational(j.at("c1").get<std::string>()),
            parse_rational(j.at("c2").get<std::string>())};
}

std::string csv_safe(std::string s) {
    std::replace(s.begin(), s.end(), ';', ',');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

std::string form_text(const AffineBudget& b) {
    return str(b.c0) + " + (" + str(b.c1) + ")*dhat + (" + str(b.c2) + ")*deltahat";
}

}  // namespace

VariantChoice parse_variant_choice(std::string_view text) {
    if (text == "auto") return VariantChoice::automatic;
    return parse_variant(text) == CubicVariant::canonical ? VariantChoice::canonical
                                                          : VariantChoice::printed_ex1;
}

Format parse_format(std::string_view text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    if (text == "text") return Format::text;
    throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

BoundReport compute_report(const WeightVector& w, const RunConfig& config, bool lenient) {
    std::vector<std::string> notes;
    BoundOptions options;
    options.mode = config.mode;
    options.r_max = config.r_max;
    options.q = config.q;
    options.accounting = config.accounting;

    switch (config.variant) {
        case VariantChoice::canonical:
            options.variant = CubicVariant::canonical;
            break;
        case VariantChoice::printed_ex1:
            options.variant = CubicVariant::printed_ex1;
            if (lenient && !is_example_one_weights(w)) {
                options.variant = CubicVariant::canonical;
                notes.push_back("printed-ex1 does not apply to these weights; canonical cubic used");
            }
            break;
        case VariantChoice::automatic:
            options.variant = is_example_one_weights(w) ? CubicVariant::printed_ex1 : CubicVariant::canonical;
            notes.push_back(std::string("variant auto selected ") + to_string(options.variant));
            break;
    }
    if (lenient && options.mode == Mode::coprime && !is_pairwise_coprime(w)) {
        options.mode = Mode::general;
        notes.push_back("weights are not pairwise coprime; fell back to general mode");
    }

    BoundReport report = [&] {
        try {
            return overall_bound(w, options);
        } catch (const RefinedModeUnavailable& e) {
            notes.push_back(std::string(e.what()) + "; fell back to general mode");
            options.mode = Mode::general;
            return overall_bound(w, options);
        }
    }();
    report.warnings.insert(report.warnings.begin(), notes.begin(), notes.end());
    return report;
}

Json to_json(const AffineBudget& b) {
    Json j;
    j["c0"] = str(b.c0);
    j["c1"] = str(b.c1);
    j["c2"] = str(b.c2);
    return j;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["weights"] = weights_json(r.weights);
    j["m"] = str(r.weights.product());
    j["sw"] = r.weights.sum();
    j["mode"] = to_string(r.mode);
    j["variant"] = to_string(r.variant);
    j["accounting"] = to_string(r.accounting);
    j["q"] = r.q;
    j["theta1"] = to_json(r.theta1);
    j["theta2"] = to_json(r.theta2);
    j["kprime"] = to_json(r.kprime);
    Json budget = Json::array();
    for (const auto& e : r.budget) {
        Json b;
        b["stratum"] = stratum_json(e.stratum);
        b["count_per_degree"] = e.count_per_degree;
        b["count_constant"] = e.count_constant;
        b["deficiency"] = str(e.deficiency);
        budget.push_back(std::move(b));
    }
    j["budget"] = std::move(budget);
    j["r_min"] = r.r_min;
    j["r_max"] = r.r_max;
    j["r_star"] = r.r_star;
    j["dhat_bound"] = str(r.dhat_bound);
    j["d_bound"] = str(r.d_bound);
    j["d_bound_floor"] = str(floor(r.d_bound));
    j["dhat_over_sw_cubed"] = str(r.sw_cubed_ratio);
    Json quad = Json::array();
    for (const auto& e : r.quad_table) {
        quad.push_back(Json{{"r", e.r}, {"bound", str(e.bound)}, {"candidate", str(e.candidate)}});
    }
    j["quad_table"] = std::move(quad);
    Json cubic = Json::array();
    for (const auto& e : r.cubic_table) {
        cubic.push_back(Json{{"shat", e.shat},
                             {"bound", str(e.bound)},
                             {"variant", to_string(e.variant)},
                             {"gamma_max_active", e.gamma_max_active}});
    }
    j["cubic_table"] = std::move(cubic);
    j["warnings"] = r.warnings;
    return j;
}

BoundReport report_from_json(const Json& j) {
    auto ws = j.at("weights").get<std::array<Weight, 5>>();
    BoundReport r(WeightVector::from_weights(ws));
    if (str(r.weights.product()) != j.at("m").get<std::string>()) {
        throw std::invalid_argument("report m does not match its weights");
    }
    r.mode = parse_mode(j.at("mode").get<std::string>());
    r.variant = parse_variant(j.at("variant").get<std::string>());
    r.accounting = parse_accounting(j.at("accounting").get<std::string>());
    r.q = j.at("q").get<PointFlags>();
    r.theta1 = budget_from_json(j.at("theta1"));
    r.theta2 = budget_from_json(j.at("theta2"));
    r.kprime = budget_from_json(j.at("kprime"));
    for (const auto& b : j.at("budget")) {
        BudgetEntry e;
        e.stratum = stratum_from_json(b.at("stratum"));
        e.count_per_degree = b.at("count_per_degree").get<int>();
        e.count_constant = b.at("count_constant").get<int>();
        e.deficiency = parse_rational(b.at("deficiency").get<std::string>());
        r.budget.push_back(std::move(e));
    }
    r.r_min = j.at("r_min").get<std::int64_t>();
    r.r_max = j.at("r_max").get<std::int64_t>();
    r.r_star = j.at("r_star").get<std::int64_t>();
    r.dhat_bound = parse_integer(j.at("dhat_bound").get<std::string>());
    r.d_bound = parse_rational(j.at("d_bound").get<std::string>());
    r.sw_cubed_ratio = parse_rational(j.at("dhat_over_sw_cubed").get<std::string>());
    for (const auto& e : j.at("quad_table")) {
        r.quad_table.push_back({e.at("r").get<std::int64_t>(), parse_integer(e.at("bound").get<std::string>()),
                                parse_integer(e.at("candidate").get<std::string>())});
    }
    for (const auto& e : j.at("cubic_table")) {
        r.cubic_table.push_back({e.at("shat").get<std::int64_t>(),
                                 parse_integer(e.at("bound").get<std::string>()),
                                 parse_variant(e.at("variant").get<std::string>()),
                                 e.at("gamma_max_active").get<bool>()});
    }
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

std::string csv_header() {
    return "weights;m;sw;mode;variant;k0';k1';k2';r_star;dhat_bound;d_bound;warnings\n";
}

std::string csv_row(const BoundReport& r) {
    std::string warnings;
    for (std::size_t i = 0; i < r.warnings.size(); ++i) {
        if (i) warnings += " | ";
        warnings += csv_safe(r.warnings[i]);
    }
    std::ostringstream os;
    os << r.weights.to_string('+') << ';' << str(r.weights.product()) << ';' << r.weights.sum() << ';'
       << to_string(r.mode) << ';' << to_string(r.variant) << ';' << str(r.kprime.c0) << ';'
       << str(r.kprime.c1) << ';' << str(r.kprime.c2) << ';' << r.r_star << ';' << str(r.dhat_bound) << ';'
       << str(r.d_bound) << ';' << warnings << '\n';
    return os.str();
}

std::string format_text(const BoundReport& r) {
    std::ostringstream os;
    os << "weights      (" << r.weights.to_string() << ")  m=" << str(r.weights.product())
       << "  |w|=" << r.weights.sum() << '\n';
    os << "mode         " << to_string(r.mode) << "  variant " << to_string(r.variant) << "  accounting "
       << to_string(r.accounting) << '\n';
    os << "theta1       " << form_text(r.theta1) << '\n';
    os << "theta2       " << form_text(r.theta2) << '\n';
    os << "k'           (" << str(r.kprime.c0) << ", " << str(r.kprime.c1) << ", " << str(r.kprime.c2) << ")\n";
    if (!r.budget.empty()) {
        os << "singularity budget\n";
        os << "  " << std::left << std::setw(12) << "J" << std::setw(5) << "dim" << std::setw(8) << "r"
           << std::setw(10) << "h" << std::setw(8) << "count" << "D(r)\n";
        for (const auto& e : r.budget) {
            std::string count = e.stratum.dim > 0 ? "dhat" : std::to_string(e.count_constant);
            os << "  " << std::setw(12) << e.stratum.label() << std::setw(5) << e.stratum.dim << std::setw(8)
               << e.stratum.r << std::setw(10) << str(e.stratum.h) << std::setw(8) << count
               << str(e.deficiency) << '\n';
        }
    }
    os << "cubic branch\n";
    os << "  " << std::right << std::setw(6) << "shat" << std::setw(14) << "bound" << "  variant\n";
    for (const auto& e : r.cubic_table) {
        os << "  " << std::setw(6) << e.shat << std::setw(14) << str(e.bound) << "  " << to_string(e.variant)
           << (e.gamma_max_active ? " (gamma_max)" : "") << '\n';
    }
    os << "quadratic branch\n";
    os << "  " << std::setw(6) << "r" << std::setw(14) << "bound" << std::setw(14) << "candidate" << '\n';
    for (const auto& e : r.quad_table) {
        os << "  " << std::setw(6) << e.r << std::setw(14) << str(e.bound) << std::setw(14) << str(e.candidate)
           << (e.r == r.r_star ? "  <- r*" : "") << '\n';
    }
    os << "r*           " << r.r_star << "  (swept " << r.r_min << ".." << r.r_max << ")\n";
    os << "dhat bound   " << str(r.dhat_bound) << '\n';
    os << "d bound      " << str(r.d_bound) << "  (floor " << str(floor(r.d_bound)) << ")\n";
    os << "dhat/|w|^3   " << str(r.sw_cubed_ratio) << '\n';
    for (const auto& w : r.warnings) os << "warning: " << w << '\n';
    return os.str();
}

namespace {

std::vector<Stratum> flagged_strata(const WeightVector& w) {
    auto all = enumerate_strata(w);
    auto sing = singular_strata(w);
    for (auto& s : all) {
        for (const auto& t : sing) {
            if (t.mask() == s.mask()) s.dominated = t.dominated;
        }
    }
    return all;
}

}  // namespace

Json strata_json(const WeightVector& w) {
    Json j;
    j["weights"] = weights_json(w);
    j["pairwise_coprime"] = is_pairwise_coprime(w);
    Json rows = Json::array();
    for (const auto& s : flagged_strata(w)) rows.push_back(stratum_json(s));
    j["strata"] = std::move(rows);
    return j;
}

std::string strata_text(const WeightVector& w) {
    std::ostringstream os;
    os << "weights (" << w.to_string() << ")" << (is_pairwise_coprime(w) ? "  pairwise coprime" : "") << '\n';
    os << std::left << std::setw(12) << "J" << std::setw(5) << "dim" << std::setw(8) << "r" << std::setw(12)
       << "h" << std::setw(10) << "singular" << "dominated\n";
    for (const auto& s : flagged_strata(w)) {
        os << std::setw(12) << s.label() << std::setw(5) << s.dim << std::setw(8) << s.r << std::setw(12)
           << str(s.h) << std::setw(10) << (s.singular ? "yes" : "no") << (s.dominated ? "yes" : "no") << '\n';
    }
    return os.str();
}

std::string strata_csv(const WeightVector& w) {
    std::ostringstream os;
    os << "J;dim;r;h;singular;dominated\n";
    for (const auto& s : flagged_strata(w)) {
        std::string label = s.label();
        std::replace(label.begin(), label.end(), ',', '+');
        os << label << ';' << s.dim << ';' << s.r << ';' << str(s.h) << ';' << (s.singular ? 1 : 0) << ';'
           << (s.dominated ? 1 : 0) << '\n';
    }
    return os.str();
}

Json resolution_json(const CyclicQuotient& s) {
    auto chain = resolve(s);
    Json j;
    j["n"] = s.order();
    j["a"] = s.weight();
    j["chain"] = chain.b;
    Json disc = Json::array();
    for (const auto& d : chain.disc) disc.push_back(str(d));
    j["discrepancies"] = std::move(disc);
    j["delta_sq"] = str(chain.delta_sq);
    return j;
}

Json order_json(std::int64_t n) {
    Rational worst = worst_deficiency(n);
    Json j;
    j["n"] = n;
    Json rows = Json::array();
    for (std::int64_t a = 1; a < n; ++a) {
        if (std::gcd(a, n) == 1) rows.push_back(resolution_json(CyclicQuotient(n, a)));
    }
    j["resolutions"] = std::move(rows);
    j["worst_deficiency"] = str(worst);
    return j;
}

namespace {

std::string chain_text(const std::vector<std::int64_t>& b) {
    std::string s = "[";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(b[i]);
    }
    return s + "]";
}

}  // namespace

std::string resolution_text(const CyclicQuotient& s) {
    auto chain = resolve(s);
    std::ostringstream os;
    os << "1/" << s.order() << "(1," << s.weight() << ")\n";
    os << "chain          " << chain_text(chain.b) << '\n';
    os << "discrepancies  ";
    for (std::size_t i = 0; i < chain.disc.size(); ++i) os << (i ? " " : "") << str(chain.disc[i]);
    os << '\n' << "delta^2        " << str(chain.delta_sq) << '\n';
    return os.str();
}

std::string order_text(std::int64_t n) {
    std::ostringstream os;
    os << std::left << std::setw(6) << "a" << std::setw(24) << "chain" << "delta^2\n";
    for (std::int64_t a = 1; a < n; ++a) {
        if (std::gcd(a, n) != 1) continue;
        auto chain = resolve(CyclicQuotient(n, a));
        os << std::setw(6) << a << std::setw(24) << chain_text(chain.b) << str(chain.delta_sq) << '\n';
    }
    os << "D(" << n << ") = " << str(worst_deficiency(n)) << '\n';
    return os.str();
}

std::string run_batch(Weight max_weight, const RunConfig& config, unsigned jobs) {
    auto systems = enumerate_well_formed(max_weight);
    std::vector<std::string> rows(systems.size());
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        for (std::size_t i = next++; i < systems.size(); i = next++) {
            try {
                rows[i] = csv_row(compute_report(systems[i], config, true));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, jobs);
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    if (failure) std::rethrow_exception(failure);

    std::string out = csv_header();
    for (const auto& row : rows) out += row;
    return out;
}

}  // namespace wpbound
