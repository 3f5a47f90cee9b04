#include <doctest.h>

#include <algorithm>

#include "etacert/congruences.hpp"

using namespace etacert;

TEST_CASE("binomial_reduce reproduces the reduced quotients") {
    CHECK(binomial_reduce(ExponentVector(7, {{1, -1}, {7, -1}}), 5, 1) ==
          ExponentVector(35, {{1, 4}, {5, -1}, {7, -1}}));
    CHECK(binomial_reduce(ExponentVector(4, {{1, -1}, {4, -1}}), 7, 1) ==
          ExponentVector(28, {{1, 6}, {4, -1}, {7, -1}}));
    CHECK(binomial_reduce(ExponentVector(5, {{1, -1}, {5, -1}}), 5, 1) ==
          ExponentVector(5, {{1, 4}, {5, -2}}));

    SUBCASE("reduction is a congruence of series mod p^alpha") {
        const ExponentVector r0(5, {{1, -1}, {5, -1}});
        const auto reduced = binomial_reduce(r0, 5, 1);
        CHECK(eta_quotient_series(r0, 200, 5) == eta_quotient_series(reduced, 200, 5));
    }

    SUBCASE("requested delta must carry a negative exponent") {
        CHECK_THROWS_AS((void)binomial_reduce(ExponentVector(7, {{7, -1}}), 5, 1, 1),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)binomial_reduce(ExponentVector(7, {{1, 2}, {7, -1}}), 5, 1, 1),
                        std::invalid_argument);
    }
}

TEST_CASE("check_binomial_lemma") {
    CHECK(!check_binomial_lemma(5, 1, 500));
    CHECK(!check_binomial_lemma(7, 1, 500));
    CHECK(!check_binomial_lemma(5, 2, 200));
}

TEST_CASE("paper_case registry") {
    CHECK(paper_case("k8").claimed_floor_v == 42);
    CHECK(paper_case("k17").claimed_orbit == std::vector<std::int64_t>{7});
    CHECK(paper_case("k4-a").tuple.t == 11);
    CHECK(paper_case("k4-b").rprime == ExponentVector(28, {{1, 1}, {4, 1}}));
    CHECK_THROWS_AS((void)paper_case("k9"), std::invalid_argument);
    CHECK(paper_case_names() ==
          std::vector<std::string>{"k7", "k8", "k17", "k4-a", "k4-b"});
}

TEST_CASE("registry claims match recomputation") {
    for (const auto& name : paper_case_names()) {
        CAPTURE(name);
        const auto pc = paper_case(name);
        CHECK(residue_orbit(pc.tuple) == pc.claimed_orbit);
        CHECK(series_bound(pc.tuple, pc.rprime).second == pc.claimed_floor_v);
        CHECK(!delta_star_check(pc.tuple));
    }
}

TEST_CASE("verify_theorem") {
    const auto thm1 = verify_theorem(Theorem::one);
    CHECK(thm1.all_verified);
    REQUIRE(thm1.certificates.size() == 3);
    for (const auto& cert : thm1.certificates) CHECK(cert.verified);
    CHECK(thm1.claims == std::vector<CongruenceClaim>{
                             {7, 25, 17, 5}, {8, 25, 16, 5}, {17, 25, 7, 5}});

    const auto thm2 = verify_theorem(Theorem::two);
    CHECK(thm2.all_verified);
    REQUIRE(thm2.certificates.size() == 2);
    CHECK(thm2.claims == std::vector<CongruenceClaim>{
                             {4, 49, 11, 7}, {4, 49, 25, 7}, {4, 49, 32, 7}, {4, 49, 39, 7}});

    SUBCASE("claims hold under the oracle for small n") {
        std::vector<CongruenceClaim> all = thm1.claims;
        all.insert(all.end(), thm2.claims.begin(), thm2.claims.end());
        for (const auto& claim : all) {
            const auto table = pk_oracle_table(claim.k, claim.m * 10 + claim.t, claim.u);
            for (std::int64_t n = 0; n <= 10; ++n)
                CHECK(table[static_cast<std::size_t>(claim.m * n + claim.t)] == 0);
        }
    }
}

TEST_CASE("oracle_scan") {
    const auto chan = oracle_scan(2, 3, 3, 50);
    CHECK(std::find(chan.begin(), chan.end(), 2) != chan.end());

    const auto bs = oracle_scan(1, 25, 5, 30);
    CHECK(std::find(bs.begin(), bs.end(), 23) != bs.end());

    CHECK(oracle_scan(2, 49, 7, 20) == std::vector<std::int64_t>{15, 29, 36, 43});

    SUBCASE("work guard") {
        CHECK_THROWS_AS((void)oracle_scan(2, 49, 7, 5000), std::invalid_argument);
        CHECK_THROWS_AS((void)oracle_scan(2, 49, 7, 100, 4000), std::invalid_argument);
        CHECK_NOTHROW((void)oracle_scan(2, 49, 7, 100, 5000));
    }
}

TEST_CASE("the k8 conclusion misprint: 25n+16 holds, 25n+18 does not") {
    const auto table = pk_oracle_table(8, 25 * 10 + 18, 5);
    bool found_nonzero_at_18 = false;
    for (std::int64_t n = 0; n <= 10; ++n) {
        CHECK(table[static_cast<std::size_t>(25 * n + 16)] == 0);
        if (table[static_cast<std::size_t>(25 * n + 18)] != 0) found_nonzero_at_18 = true;
    }
    CHECK(found_nonzero_at_18);
    // First witness, located by expansion: p_8(18) = 1 mod 5.
    CHECK(table[18] == 1);
}

TEST_CASE("regression congruences hold under the oracle") {
    // p_k(25n + 24 - k) = 0 mod 5 for the nine previously known k.
    for (std::int64_t k : {0, 1, 2, 3, 4, 5, 10, 15, 20}) {
        CAPTURE(k);
        const std::int64_t t = 24 - k;
        const auto table = pk_oracle_table(k, 25 * 12 + t, 5);
        for (std::int64_t n = 0; n <= 12; ++n)
            CHECK(table[static_cast<std::size_t>(25 * n + t)] == 0);
    }
}
