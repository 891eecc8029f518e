// wpbound: degree bounds for quasismooth non-general-type surfaces in P^4(w).
//
//   wpbound compute --weights 1,1,1,2,6 [--mode refined] [--variant auto] ...
//   wpbound strata  --weights 1,1,1,2,6
//   wpbound hj      --n 6 [--a 1]
//   wpbound batch   --max-weight 12 --out results.csv
//
// Exit status: 0 ok, 1 other failure, 2 invalid weights, 3 weights not
// well-formed, 4 mode/variant incompatible with the weights.

#include "wpbound/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

namespace {

using namespace wpbound;

constexpr int kExitFailure = 1;
constexpr int kExitInvalidWeights = 2;
constexpr int kExitNotWellFormed = 3;
constexpr int kExitIncompatible = 4;

PointFlags parse_flags(const std::string& text) {
    PointFlags q{};
    std::size_t k = 0;
    for (char c : text) {
        if (c == ',' || c == ' ') continue;
        if ((c != '0' && c != '1') || k >= 5) {
            throw std::invalid_argument("--q expects five 0/1 flags, got '" + text + "'");
        }
        q[k++] = c - '0';
    }
    if (k != 5) throw std::invalid_argument("--q expects five 0/1 flags, got '" + text + "'");
    return q;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << content;
    if (!f.flush()) throw std::runtime_error("failed writing " + out_path);
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree bounds for non-general-type surfaces in weighted projective 4-space"};
    app.require_subcommand(1);

    std::string weights_text, mode_text = "refined", variant_text = "auto", format_text_opt = "text";
    std::string q_text, out_path, accounting_text = "absorbed";
    std::int64_t r_max = 0;
    std::int64_t n = 0, a = 0;
    Weight max_weight = 0;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto add_budget_options = [&](CLI::App* cmd) {
        cmd->add_option("--mode", mode_text, "general | coprime | refined")
            ->check(CLI::IsMember({"general", "coprime", "refined"}));
        cmd->add_option("--variant", variant_text, "canonical | printed-ex1 | auto")
            ->check(CLI::IsMember({"canonical", "printed-ex1", "auto"}));
        cmd->add_option("--rmax", r_max, "upper end of the r sweep (default r_min + 50)");
        cmd->add_option("--q", q_text, "five 0/1 presence flags for the coordinate points P0..P4");
        cmd->add_option("--accounting", accounting_text, "absorbed | strict")
            ->check(CLI::IsMember({"absorbed", "strict"}));
        cmd->add_option("--out", out_path, "write output to this file instead of stdout");
    };

    auto* compute = app.add_subcommand("compute", "degree bound for one weight system");
    compute->add_option("--weights", weights_text, "five weights, e.g. 1,1,1,2,6")->required();
    add_budget_options(compute);
    compute->add_option("--format", format_text_opt, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    auto* strata = app.add_subcommand("strata", "coordinate strata and their stabilizers");
    strata->add_option("--weights", weights_text, "five weights")->required();
    strata->add_option("--format", format_text_opt, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    strata->add_option("--out", out_path, "output file");

    auto* hj = app.add_subcommand("hj", "resolution of the cyclic quotient singularity 1/n(1,a)");
    hj->add_option("--n", n, "order n >= 2")->required();
    hj->add_option("--a", a, "weight a; omit to tabulate every a and D(n)");
    hj->add_option("--format", format_text_opt, "json | text")->check(CLI::IsMember({"json", "text"}));
    hj->add_option("--out", out_path, "output file");

    auto* batch = app.add_subcommand("batch", "sweep all well-formed systems up to a maximal weight");
    batch->add_option("--max-weight", max_weight, "largest weight to enumerate")->required()->check(
        CLI::PositiveNumber);
    add_budget_options(batch);
    batch->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        auto config = [&] {
            RunConfig c;
            c.mode = parse_mode(mode_text);
            c.variant = parse_variant_choice(variant_text);
            if (r_max > 0) c.r_max = r_max;
            if (!q_text.empty()) c.q = parse_flags(q_text);
            c.accounting = parse_accounting(accounting_text);
            return c;
        };
        Format format = parse_format(format_text_opt);

        if (*compute) {
            auto w = parse_weights(weights_text);
            auto report = compute_report(w, config());
            switch (format) {
                case Format::json: emit(render(to_json(report)), out_path); break;
                case Format::csv: emit(csv_header() + csv_row(report), out_path); break;
                case Format::text: emit(format_text(report), out_path); break;
            }
        } else if (*strata) {
            auto w = parse_weights(weights_text);
            switch (format) {
                case Format::json: emit(render(strata_json(w)), out_path); break;
                case Format::csv: emit(strata_csv(w), out_path); break;
                case Format::text: emit(strata_text(w), out_path); break;
            }
        } else if (*hj) {
            std::string content;
            if (hj->count("--a")) {
                CyclicQuotient s(n, a);
                content = format == Format::json ? render(resolution_json(s)) : resolution_text(s);
            } else {
                if (n < 2) throw std::invalid_argument("--n must be at least 2");
                content = format == Format::json ? render(order_json(n)) : order_text(n);
            }
            emit(content, out_path);
        } else if (*batch) {
            emit(run_batch(max_weight, config(), jobs), out_path);
        }
    } catch (const NotWellFormed& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotWellFormed;
    } catch (const WeightError& e) {
        std::cerr << "error: invalid weights: " << e.what() << '\n';
        return kExitInvalidWeights;
    } catch (const IncompatibleMode& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIncompatible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return 0;
}
