#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oslo/numeric.hpp"
#include "oslo/prime_circles.hpp"

using namespace oslo::prime_circles;
using oslo::BigInt;

// Independent scan oracle: walk x upward until x^2 + x + k passes pq.
static std::optional<std::uint64_t> scan_witness(std::uint64_t p, std::uint64_t q,
                                                 std::uint64_t k) {
    BigInt pq = BigInt(p) * q;
    for (BigInt x = 0; x * x + x + k <= pq; ++x)
        if (x * x + x + k == pq) return static_cast<std::uint64_t>(x);
    return std::nullopt;
}

TEST_CASE("friend_witness worked examples") {
    CHECK(friend_witness(3, 19, 1) == 7);   // 57 = 49 + 7 + 1
    CHECK(friend_witness(3, 5, 1) == std::nullopt);
    CHECK(friend_witness(3, 5, 3) == 3);    // 15 = 9 + 3 + 3
    CHECK(friend_witness(19, 3, 1) == 7);   // symmetric in p, q
}

TEST_CASE("friend_witness validates inputs") {
    CHECK_THROWS_AS(friend_witness(3, 3, 1), std::invalid_argument);   // p == q
    CHECK_THROWS_AS(friend_witness(2, 5, 1), std::invalid_argument);   // even
    CHECK_THROWS_AS(friend_witness(9, 5, 1), std::invalid_argument);   // composite
    CHECK_THROWS_AS(friend_witness(3, 5, 0), std::invalid_argument);   // k must be positive
}

TEST_CASE("strict-positive mode excludes x = 0") {
    // pq = k gives witness x = 0: 3 * 5 = 15 = 0 + 0 + 15
    CHECK(friend_witness(3, 5, 15) == 0);
    CHECK(friend_witness(3, 5, 15, true) == std::nullopt);
}

TEST_CASE("closed-form witness agrees with the scan oracle") {
    auto primes = oslo::sieve_primes(100);
    for (std::size_t i = 1; i < primes.size(); ++i) {      // skip 2
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            for (std::uint64_t k = 1; k <= 60; ++k) {
                auto fast = friend_witness(primes[i], primes[j], k);
                auto slow = scan_witness(primes[i], primes[j], k);
                CHECK(fast == slow);
            }
        }
    }
}

TEST_CASE("witnesses validate in arbitrary precision") {
    std::mt19937_64 rng(41);
    auto primes = oslo::sieve_primes(2000);
    int validated = 0;
    while (validated < 200) {
        std::uint64_t p = primes[1 + rng() % (primes.size() - 1)];
        std::uint64_t q = primes[1 + rng() % (primes.size() - 1)];
        std::uint64_t k = 1 + rng() % 200;
        if (p == q) continue;
        if (auto x = friend_witness(p, q, k)) {
            FriendWitness w{p, q, k, *x};
            CHECK(w.valid());
            ++validated;
        }
    }
    CHECK_FALSE(FriendWitness{3, 19, 1, 8}.valid());   // wrong x
    CHECK_FALSE(FriendWitness{3, 19, 2, 7}.valid());   // wrong k
    CHECK_FALSE(FriendWitness{9, 19, 1, 12}.valid());  // not prime
}

TEST_CASE("smaller_friends") {
    auto fr = smaller_friends(19, 1);
    REQUIRE(fr.size() == 2);
    CHECK(fr[0] == FriendWitness{19, 3, 1, 7});
    CHECK(fr[1] == FriendWitness{19, 7, 1, 11});

    CHECK(smaller_friends(3, 1).empty());    // no odd prime below 3
    CHECK(smaller_friends(5, 100).empty());  // 3*5 = 15 < 100 leaves no room
}

TEST_CASE("verify_friend_lemmas on the worked example") {
    auto rep = verify_friend_lemmas(19, 1);
    CHECK(rep.at_most_two);
    REQUIRE(rep.friends.size() == 2);
    CHECK(rep.sum_identity == true);        // 11 + 7 + 1 = 19
    CHECK(rep.mutual_friendship == true);   // 21 = 16 + 4 + 1
    CHECK(rep.witness_formula == true);     // 11 - 7 = 4
    CHECK(rep.ok());

    auto vacuous = verify_friend_lemmas(3, 1);
    CHECK(vacuous.friends.empty());
    CHECK(vacuous.ok());
}

TEST_CASE("lemma sweep is green for p < 300, k <= 60") {
    auto primes = oslo::sieve_primes(300);
    for (auto p : primes) {
        if (p == 2) continue;
        for (std::uint64_t k = 1; k <= 60; ++k) {
            auto rep = verify_friend_lemmas(p, k, primes);
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("friendship graph edges carry validating witnesses") {
    FriendshipGraph graph({19, 3, 7}, 1);
    CHECK(graph.vertices() == std::vector<std::uint64_t>{3, 7, 19});
    REQUIRE(graph.edges().size() == 3);  // the 3-7-19 triangle
    for (const auto& e : graph.edges()) CHECK(e.valid());
    CHECK(graph.adjacent(0, 1));
    CHECK(graph.adjacent(1, 2));
    CHECK(graph.adjacent(0, 2));

    FriendshipGraph sparse({3, 5, 19}, 1);
    CHECK(sparse.edges().size() == 1);  // only 3-19

    CHECK_THROWS_AS(FriendshipGraph({3, 3, 7}, 1), std::invalid_argument);
    CHECK_THROWS_AS(FriendshipGraph({3, 9}, 1), std::invalid_argument);
    CHECK_THROWS_AS(FriendshipGraph({3, 7}, 0), std::invalid_argument);
}

TEST_CASE("canonical form is rotation and reflection invariant") {
    std::vector<std::uint64_t> cycle{7, 3, 19, 37};
    auto canon = CircularArrangement::canonical_form(cycle);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        auto v = cycle;
        std::rotate(v.begin(), v.begin() + static_cast<long>(rng() % v.size()), v.end());
        if (rng() & 1) std::reverse(v.begin(), v.end());
        CHECK(CircularArrangement::canonical_form(v) == canon);
    }
    // idempotence
    CHECK(CircularArrangement::canonical_form(canon) == canon);
    CHECK(canon.front() == 3);
}

TEST_CASE("valid_arrangements on known sets") {
    auto triangle = valid_arrangements({3, 7, 19}, 1);
    REQUIRE(triangle.size() == 1);
    CHECK(triangle[0].order() == std::vector<std::uint64_t>{3, 7, 19});

    CHECK(valid_arrangements({3, 5, 19}, 1).empty());  // 3*5 = 15 is not x^2+x+1

    // a genuine 4-cycle: 3-7-19-37 under k = 1
    auto square = valid_arrangements({3, 7, 19, 37}, 1);
    REQUIRE(square.size() == 1);
    CHECK(square[0].order() == std::vector<std::uint64_t>{3, 7, 19, 37});
}

TEST_CASE("valid_arrangements guards and argument errors") {
    CHECK_THROWS_AS(valid_arrangements({3, 7}, 1), std::invalid_argument);
    CHECK_THROWS_AS(valid_arrangements({3, 7, 7}, 1), std::invalid_argument);
    CHECK_THROWS_AS(valid_arrangements({3, 7, 15}, 1), std::invalid_argument);
    std::vector<std::uint64_t> big = {3,  5,  7,  11, 13, 17, 19,
                                      23, 29, 31, 37, 41, 43};
    CHECK_THROWS_AS(valid_arrangements(big, 1), oslo::guard_error);
}

TEST_CASE("arrangement count never exceeds one on random prime subsets") {
    auto primes = oslo::sieve_primes(500);
    std::vector<std::uint64_t> odd(primes.begin() + 1, primes.end());
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t size = 3 + rng() % 6;  // |S| in [3, 8]
        std::set<std::uint64_t> chosen;
        while (chosen.size() < size) chosen.insert(odd[rng() % odd.size()]);
        std::uint64_t k = 1 + rng() % 50;
        auto arrangements =
            valid_arrangements({chosen.begin(), chosen.end()}, k);
        CHECK(arrangements.size() <= 1);
    }
}
