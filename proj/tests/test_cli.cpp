#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// stdout captured, stderr folded in
Run run(const std::string& args) {
    std::string cmd = std::string(WPBOUND_CLI) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::ordered_json run_json(const std::string& args) {
    Run r = run(args + " --format json");
    REQUIRE(r.code == 0);
    return nlohmann::ordered_json::parse(r.out);
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("wpbound_cli_" + name);
}

}  // namespace

TEST_CASE("compute exit codes") {
    CHECK(run("compute --weights 1,1,1,1,2").code == 0);
    CHECK(run("compute --weights 1,1,1,2").code == 2);
    CHECK(run("compute --weights 1,1,0,1,2").code == 2);
    CHECK(run("compute --weights 1,x,1,1,2").code == 2);
    Run bad = run("compute --weights 1,2,2,2,2");
    CHECK(bad.code == 3);
    CHECK(bad.out.find("2,2,2,2") != std::string::npos);
    CHECK(run("compute --weights 1,1,1,2,6 --mode coprime").code == 4);
    CHECK(run("compute --weights 1,1,1,2,6 --variant printed-ex1").code == 4);
    CHECK(run("compute --weights 1,1,1,1,2 --out /nonexistent/dir/x.json").code == 1);
}

TEST_CASE("compute json output") {
    auto ex1 = run_json("compute --weights 1,1,1,1,2");
    CHECK(ex1["dhat_bound"] == "140");
    CHECK(ex1["r_star"] == 7);
    CHECK(ex1["variant"] == "printed-ex1");

    auto ex2 = run_json("compute --weights 2,6,1,1,1 --mode refined");
    CHECK(ex2["weights"] == nlohmann::ordered_json::array({1, 1, 1, 2, 6}));
    CHECK(ex2["kprime"]["c0"] == "103");
    CHECK(ex2["dhat_bound"] == "713");

    auto fallback = run_json("compute --weights 1,1,2,2,2");
    CHECK(fallback["mode"] == "general");

    auto general = run_json("compute --weights 1,1,1,1,2 --mode general --variant canonical --rmax 20");
    CHECK(general["r_max"] == 20);
}

TEST_CASE("compute writes to a file") {
    auto path = scratch("ex1.csv");
    std::filesystem::remove(path);
    CHECK(run("compute --weights 1,1,1,1,2 --format csv --out " + path.string()).code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("1+1+1+1+2;2;6;refined;printed-ex1;3;-2;1;7;140;70;") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("strata subcommand") {
    auto count_rows = [](const nlohmann::ordered_json& j, bool want_dominated) {
        int singular = 0, points = 0;
        for (const auto& s : j["strata"]) {
            if (!s["singular"].get<bool>()) continue;
            if (!want_dominated && s["dominated"].get<bool>()) continue;
            ++singular;
            if (s["dim"] == 0) ++points;
        }
        return std::pair{singular, points};
    };
    CHECK(count_rows(run_json("strata --weights 1,1,1,2,6"), false).first == 2);
    CHECK(count_rows(run_json("strata --weights 1,1,1,2,6"), true).first == 3);
    CHECK(count_rows(run_json("strata --weights 1,1,1,1,1"), true).first == 0);
    CHECK(count_rows(run_json("strata --weights 1,2,3,5,7"), true).second == 4);
    CHECK(run("strata --weights 1,2,2,2,2").code == 3);
}

TEST_CASE("hj subcommand") {
    auto one = run_json("hj --n 12 --a 5");
    CHECK(one["chain"] == nlohmann::ordered_json::array({3, 2, 3}));
    CHECK(one["delta_sq"] == "-1");
    auto all = run_json("hj --n 6");
    CHECK(all["worst_deficiency"] == "8/3");
    CHECK(run("hj --n 6 --a 2").code != 0);
    CHECK(run("hj --n 7 --a 3").out.find("delta^2") != std::string::npos);
}

TEST_CASE("batch subcommand") {
    auto a = scratch("batch_a.csv"), b = scratch("batch_b.csv");
    CHECK(run("batch --max-weight 4 --jobs 1 --out " + a.string()).code == 0);
    CHECK(run("batch --max-weight 4 --jobs 3 --out " + b.string()).code == 0);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string sa = slurp(a);
    CHECK_FALSE(sa.empty());
    CHECK(sa == slurp(b));
    CHECK(sa.rfind("weights;m;sw;", 0) == 0);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}
