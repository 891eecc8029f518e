#include "wpbound/theta.hpp"

#include <doctest.h>

using namespace wpbound;

namespace {

AffineBudget form(long c0, long c1, long c2) { return {Rational(c0), Rational(c1), Rational(c2)}; }

}  // namespace

TEST_CASE("general budgets") {
    auto ex1 = parse_weights("1,1,1,1,2");
    auto triv = parse_weights("1,1,1,1,1");
    auto ex2 = parse_weights("1,1,1,2,6");
    CHECK(general_theta1(ex1) == form(0, 39, 2));
    CHECK(general_theta1(triv) == form(0, 10, 0));
    CHECK(general_theta1(ex2) == form(0, 684, 12));
    CHECK(general_theta2(ex1) == form(0, 39, -1));
    CHECK(general_theta2(triv) == form(0, 10, 0));
    CHECK(general_theta2(ex2) == form(0, 714, -6));
    auto k = k_prime(general_theta1(ex2), general_theta2(ex2));
    CHECK(k == form(0, 1398, 6));
}

TEST_CASE("k prime rejects k2' <= -5") {
    CHECK_THROWS_AS(k_prime(form(0, 0, -3), form(0, 0, -2)), std::domain_error);
    CHECK_NOTHROW(k_prime(form(0, 0, -3), form(0, 0, -1)));
}

TEST_CASE("coprime budget") {
    auto ex1 = parse_weights("1,1,1,1,2");
    CHECK(coprime_theta1(ex1, {0, 0, 0, 0, 1}) == form(4, -1, 2));
    CHECK(coprime_theta1(ex1, {0, 0, 0, 0, 0}) == form(0, -1, 2));
    // flags on weight-1 coordinates carry no cost
    CHECK(coprime_theta1(ex1, {1, 1, 1, 1, 1}) == form(4, -1, 2));
    auto w = parse_weights("1,2,3,5,7");
    CHECK(coprime_theta1(w, kAllPointsPresent) == form(210 * 17, -169, 26));
    CHECK_THROWS_AS(coprime_theta1(parse_weights("1,1,1,2,6"), kAllPointsPresent), std::invalid_argument);
}

TEST_CASE("refined budget entries") {
    auto ex1 = refined_budget(parse_weights("1,1,1,1,2"));
    REQUIRE(ex1.entries.size() == 1);
    CHECK(ex1.entries[0].stratum.r == 2);
    CHECK(ex1.entries[0].stratum.h == 2);
    CHECK(ex1.entries[0].count_constant == 1);
    CHECK(ex1.entries[0].count_per_degree == 0);
    CHECK(ex1.entries[0].deficiency == 0);

    auto ex2 = refined_budget(parse_weights("1,1,1,2,6"));
    REQUIRE(ex2.entries.size() == 2);
    CHECK(ex2.entries[0].stratum.dim == 1);
    CHECK(ex2.entries[0].count_per_degree == 1);
    CHECK(ex2.entries[0].count_constant == 0);
    CHECK(ex2.entries[0].deficiency == 0);
    CHECK(ex2.entries[1].stratum.r == 6);
    CHECK(ex2.entries[1].stratum.h == 12);
    CHECK(ex2.entries[1].count_constant == 1);
    CHECK(ex2.entries[1].deficiency == Rational(8, 3));

    try {
        refined_budget(parse_weights("1,1,2,2,2"));
        FAIL("expected RefinedModeUnavailable");
    } catch (const RefinedModeUnavailable& e) {
        CHECK(e.stratum().vanishing == std::vector<int>{0, 1});
        CHECK(e.stratum().dim == 2);
        CHECK(e.stratum().r == 2);
    }
}

TEST_CASE("refined budgets reproduce the worked examples") {
    auto ex1 = parse_weights("1,1,1,1,2");
    auto b1 = refined_budget(ex1);
    CHECK(refined_theta1(b1, ex1) == form(0, -1, 2));
    CHECK(refined_theta2(b1, ex1) == form(3, -1, -1));
    CHECK(k_prime(refined_theta1(b1, ex1), refined_theta2(b1, ex1)) == form(3, -2, 1));

    auto ex2 = parse_weights("1,1,1,2,6");
    auto b2 = refined_budget(ex2);
    CHECK(refined_theta1(b2, ex2) == form(32, -36, 12));
    CHECK(refined_theta2(b2, ex2) == form(71, 7, -6));
    CHECK(k_prime(refined_theta1(b2, ex2), refined_theta2(b2, ex2)) == form(103, -29, 6));

    auto triv = parse_weights("1,1,1,1,1");
    auto b0 = refined_budget(triv);
    CHECK(refined_theta1(b0, triv) == form(0, 0, 0));
    CHECK(refined_theta2(b0, triv) == form(0, 0, 0));
}

TEST_CASE("q flags switch point costs off") {
    auto ex1 = parse_weights("1,1,1,1,2");
    auto b = refined_budget(ex1, Accounting::absorbed, {1, 1, 1, 1, 0});
    CHECK(refined_theta2(b, ex1) == form(0, -1, -1));
}

TEST_CASE("strict accounting changes only c0") {
    auto ex2 = parse_weights("1,1,1,2,6");
    auto absorbed = refined_budget(ex2, Accounting::absorbed);
    auto strict = refined_budget(ex2, Accounting::strict);
    CHECK(strict.entries.size() == 3);
    auto p1 = refined_theta1(absorbed, ex2), s1 = refined_theta1(strict, ex2);
    auto p2 = refined_theta2(absorbed, ex2), s2 = refined_theta2(strict, ex2);
    CHECK(s1.c1 == p1.c1);
    CHECK(s1.c2 == p1.c2);
    CHECK(s2.c1 == p2.c1);
    CHECK(s2.c2 == p2.c2);
    // dominated point r=2, h=12: cost 12*1 + 11
    CHECK(s2.c0 == p2.c0 + 23);
    CHECK(s1.c0 == p1.c0);
}

TEST_CASE("budget properties over enumerated systems") {
    for (const auto& w : enumerate_well_formed(20)) {
        auto k = k_prime(general_theta1(w), general_theta2(w));
        CHECK(k.c2 == w.sum() - 5);
        CHECK(k.c2 > -5);
        if (w.largest() > 12) continue;
        auto g1 = general_theta1(w);
        auto g2 = general_theta2(w);
        try {
            auto b = refined_budget(w);
            auto r1 = refined_theta1(b, w);
            auto r2 = refined_theta2(b, w);
            CHECK(r1.c1 <= g1.c1);
            CHECK(r2.c1 <= g2.c1);
            for (const auto& e : b.entries) {
                CHECK(e.deficiency >= 0);
                CHECK(e.deficiency <= e.stratum.r);
                CHECK_FALSE(e.stratum.dominated);
                if (e.stratum.dim > 0) {
                    CHECK(e.count_per_degree == 1);
                    CHECK(e.count_constant == 0);
                } else {
                    CHECK(e.count_per_degree == 0);
                    CHECK(e.count_constant == 1);
                }
            }
            if (is_pairwise_coprime(w)) {
                CHECK(coprime_theta1(w, kAllPointsPresent).c0 >= r1.c0);
            }
        } catch (const RefinedModeUnavailable&) {
            bool has_big = false;
            for (const auto& s : singular_strata(w)) has_big = has_big || s.dim >= 2;
            CHECK(has_big);
        }
    }
}
