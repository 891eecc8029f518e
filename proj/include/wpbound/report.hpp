#pragma once

// Report assembly and serialization (JSON, CSV, aligned text), plus the
// batch sweep over enumerated weight systems.

#include "wpbound/bounds.hpp"
#include "wpbound/quotient.hpp"
#include "wpbound/strata.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace wpbound {

using Json = nlohmann::ordered_json;

enum class VariantChoice { canonical, printed_ex1, automatic };
enum class Format { json, csv, text };

VariantChoice parse_variant_choice(std::string_view text);
Format parse_format(std::string_view text);

struct RunConfig {
    Mode mode = Mode::refined;
    VariantChoice variant = VariantChoice::automatic;
    std::optional<std::int64_t> r_max;
    PointFlags q = kAllPointsPresent;
    Accounting accounting = Accounting::absorbed;
};

/// Runs overall_bound with the front-end policy: "auto" picks printed-ex1 for
/// (1,1,1,1,2) and canonical otherwise, and refined mode falls back to general
/// when a singular stratum of dimension >= 2 exists. With `lenient` set,
/// incompatible coprime/printed-ex1 requests also fall back (with a warning)
/// instead of throwing IncompatibleMode.
BoundReport compute_report(const WeightVector& w, const RunConfig& config, bool lenient = false);

Json to_json(const AffineBudget& b);
Json to_json(const BoundReport& report);
BoundReport report_from_json(const Json& j);

std::string csv_header();
std::string csv_row(const BoundReport& report);
std::string format_text(const BoundReport& report);

Json strata_json(const WeightVector& w);
std::string strata_text(const WeightVector& w);
std::string strata_csv(const WeightVector& w);

Json resolution_json(const CyclicQuotient& s);
/// Every admissible a for order n, plus D(n).
Json order_json(std::int64_t n);
std::string resolution_text(const CyclicQuotient& s);
std::string order_text(std::int64_t n);

/// CSV for every well-formed system with w4 <= max_weight, rows in
/// enumeration order independent of `jobs`.
std::string run_batch(Weight max_weight, const RunConfig& config, unsigned jobs);

}  // namespace wpbound
