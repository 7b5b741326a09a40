#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oslo/partner_functions.hpp"

using namespace oslo::partner_functions;
using oslo::Rational;

static Rational rat(long long n, long long d = 1) { return Rational(n, d); }

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3") == rat(3));
    CHECK(parse_rational("3/6") == rat(1, 2));
    CHECK(parse_rational("-2/4") == rat(-1, 2));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("candidate construction and evaluation domain") {
    auto recip = CandidateFunction::reciprocal();
    CHECK(recip(rat(4)) == rat(1, 4));
    CHECK_THROWS_AS(recip(rat(0)), std::domain_error);
    CHECK_THROWS_AS(recip(rat(-1)), std::domain_error);

    auto scaled = CandidateFunction::scaled_reciprocal(rat(2));
    CHECK(scaled(rat(4)) == rat(1, 2));
    CHECK_THROWS_AS(CandidateFunction::scaled_reciprocal(rat(0)), std::invalid_argument);

    auto affine = CandidateFunction::affine_decreasing(rat(2), rat(1));
    CHECK(affine(rat(1)) == rat(1));
    CHECK_THROWS_AS(affine(rat(2)), std::domain_error);  // f(2) = 0, not positive
    CHECK_THROWS_AS(affine(rat(3)), std::domain_error);
    CHECK_THROWS_AS(CandidateFunction::affine_decreasing(rat(-1), rat(1)),
                    std::invalid_argument);

    CHECK(CandidateFunction::parse("reciprocal").name() == "reciprocal");
    CHECK(CandidateFunction::parse("scaled:1/2").name() == "scaled_reciprocal(1/2)");
    CHECK(CandidateFunction::parse("affine:2:1")(rat(1)) == rat(1));
    CHECK_THROWS_AS(CandidateFunction::parse("cubic"), std::invalid_argument);
}

TEST_CASE("pair_value") {
    auto recip = CandidateFunction::reciprocal();
    CHECK(pair_value(recip, rat(2), rat(2)) == rat(2));
    CHECK(pair_value(recip, rat(2), rat(1)) == rat(5, 2));
    CHECK(pair_value(CandidateFunction::scaled_reciprocal(rat(2)), rat(3), rat(3)) == rat(4));
}

TEST_CASE("partner_set worked examples") {
    std::set<Rational> sample{rat(1, 2), rat(1), rat(2), rat(3), rat(4)};

    auto recip = CandidateFunction::reciprocal();
    CHECK(partner_set(recip, rat(2), sample) == std::set<Rational>{rat(2)});

    auto doubled = CandidateFunction::scaled_reciprocal(rat(2));
    CHECK(partner_set(doubled, rat(2), sample).empty());

    auto halved = CandidateFunction::scaled_reciprocal(rat(1, 2));
    CHECK(partner_set(halved, rat(1), sample) ==
          std::set<Rational>{rat(1, 2), rat(1), rat(2), rat(3)});

    CHECK_THROWS_AS(partner_set(recip, rat(2), std::set<Rational>{}), std::invalid_argument);
}

TEST_CASE("reciprocal identity") {
    auto eq = verify_reciprocal_identity(rat(2), rat(2));
    CHECK(eq.identity_holds);
    CHECK(eq.equality_iff_equal);
    CHECK(eq.excess == 0);

    auto neq = verify_reciprocal_identity(rat(3), rat(5));
    CHECK(neq.identity_holds);
    CHECK(neq.equality_iff_equal);
    CHECK(neq.excess == rat(4, 15));  // (3-5)^2 / 15

    auto small = verify_reciprocal_identity(rat(1, 3), rat(1, 3));
    CHECK(small.identity_holds);
    CHECK(small.excess == 0);

    CHECK_THROWS_AS(verify_reciprocal_identity(rat(0), rat(1)), std::domain_error);
}

TEST_CASE("reciprocal identity holds on random rationals") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
        Rational x(1 + rng() % 50, 1 + rng() % 50);
        Rational y(1 + rng() % 50, 1 + rng() % 50);
        auto r = verify_reciprocal_identity(x, y);
        CHECK(r.identity_holds);
        CHECK(r.equality_iff_equal);
        CHECK(r.excess >= 0);
    }
}

TEST_CASE("monotonicity_witness") {
    std::set<Rational> pair_sample{rat(1), rat(2)};
    auto recip = CandidateFunction::reciprocal();
    auto consistent = monotonicity_witness(recip, rat(1), rat(2), pair_sample);
    CHECK(consistent.verdict == MonotonicityVerdict::consistent);

    // f(x) = 2 - x: y partners x exactly when (1-x)(1-y) >= 0, so a dense
    // grid below 2 exposes multiple partners at once.
    std::set<Rational> dense;
    for (int p = 1; p <= 19; ++p) dense.insert(rat(p, 10));
    auto affine = CandidateFunction::affine_decreasing(rat(2), rat(1));
    auto broken = monotonicity_witness(affine, rat(1, 2), rat(3, 2), dense);
    CHECK(broken.verdict == MonotonicityVerdict::violation);
    CHECK(broken.detail == "uniqueness");
    CHECK(broken.witnesses.size() >= 2);

    auto halved = CandidateFunction::scaled_reciprocal(rat(1, 2));
    std::set<Rational> sample{rat(1, 2), rat(1), rat(2), rat(3), rat(4)};
    auto multi = monotonicity_witness(halved, rat(1), rat(2), sample);
    CHECK(multi.verdict == MonotonicityVerdict::violation);
    CHECK(multi.detail == "uniqueness");

    // scaled_reciprocal(2) has no partners anywhere: sample too sparse to decide
    auto doubled = CandidateFunction::scaled_reciprocal(rat(2));
    auto sparse = monotonicity_witness(doubled, rat(1), rat(2), sample);
    CHECK(sparse.verdict == MonotonicityVerdict::inconclusive);

    CHECK_THROWS_AS(monotonicity_witness(recip, rat(2), rat(1), sample), std::invalid_argument);
}

TEST_CASE("default grid") {
    auto grid = default_grid(20);
    CHECK(grid.size() == 255);  // distinct values of p/q, 1 <= p,q <= 20
    CHECK(grid.contains(rat(1, 20)));
    CHECK(grid.contains(rat(20)));
    CHECK(grid.contains(rat(1)));
    for (const auto& x : grid) CHECK(x > 0);
    CHECK(default_grid(1) == std::set<Rational>{rat(1)});
}

TEST_CASE("reciprocal has exactly itself as partner over any sample containing x") {
    auto recip = CandidateFunction::reciprocal();
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::set<Rational> sample;
        for (int i = 0; i < 30; ++i) sample.insert(Rational(1 + rng() % 40, 1 + rng() % 40));
        Rational x(1 + rng() % 40, 1 + rng() % 40);
        sample.insert(x);
        CHECK(partner_set(recip, x, sample) == std::set<Rational>{x});
    }
}

TEST_CASE("partner relation is symmetric across shared sample points") {
    auto halved = CandidateFunction::scaled_reciprocal(rat(1, 2));
    auto grid = default_grid(8);
    for (const auto& x : grid) {
        for (const auto& y : partner_set(halved, x, grid))
            CHECK(partner_set(halved, y, grid).contains(x));
    }
}

TEST_CASE("scaled_reciprocal above 1 never admits partners") {
    auto grid = default_grid(10);
    for (const auto& c : {rat(3, 2), rat(2), rat(7, 3)}) {
        auto f = CandidateFunction::scaled_reciprocal(c);
        for (const auto& x : grid) CHECK(partner_set(f, x, grid).empty());
    }
}
