#include <doctest.h>

#include <random>

#include "etacert/series.hpp"

using namespace etacert;

namespace {

std::vector<BigInt> coeff_vec(std::initializer_list<std::int64_t> xs) {
    std::vector<BigInt> out;
    for (auto x : xs) out.emplace_back(x);
    return out;
}

// Independent oracle: multiply out (1-q^delta)(1-q^{2 delta})... term by term.
TruncatedSeries euler_factor_by_product(std::int64_t delta, std::int64_t trunc) {
    TruncatedSeries out(trunc, std::nullopt);
    out.set_coeff(0, 1);
    for (std::int64_t n = 1; delta * n <= trunc; ++n) {
        TruncatedSeries factor(trunc, std::nullopt);
        factor.set_coeff(0, 1);
        factor.set_coeff(delta * n, -1);
        out = mul(out, factor);
    }
    return out;
}

}  // namespace

TEST_CASE("euler_factor matches the direct product expansion") {
    CHECK(euler_factor(1, 7).coeffs() == coeff_vec({1, -1, -1, 0, 0, 1, 0, 1}));
    CHECK(euler_factor(5, 4).coeffs() == coeff_vec({1, 0, 0, 0, 0}));
    CHECK(euler_factor(1, 7, 5).coeffs() == coeff_vec({1, 4, 4, 0, 0, 1, 0, 1}));
    for (std::int64_t delta : {1, 2, 3, 5}) {
        CAPTURE(delta);
        CHECK(euler_factor(delta, 60) == euler_factor_by_product(delta, 60));
    }
}

TEST_CASE("euler_factor pentagonal sparsity") {
    const std::int64_t T = 200;
    const auto f = euler_factor(1, T);
    std::vector<int> expected(T + 1, 0);
    expected[0] = 1;
    for (std::int64_t j = 1;; ++j) {
        const std::int64_t g1 = j * (3 * j - 1) / 2;
        const std::int64_t g2 = j * (3 * j + 1) / 2;
        if (g1 > T) break;
        const int sign = (j % 2 == 0) ? 1 : -1;
        expected[g1] = sign;
        if (g2 <= T) expected[g2] = sign;
    }
    for (std::int64_t n = 0; n <= T; ++n) CHECK(f.coeff(n) == expected[n]);
}

TEST_CASE("mul basics") {
    TruncatedSeries geo(coeff_vec({1, 1, 1}), std::nullopt);
    TruncatedSeries one_minus_q(coeff_vec({1, -1, 0}), std::nullopt);
    CHECK(mul(geo, one_minus_q).coeffs() == coeff_vec({1, 0, 0}));

    const auto f = euler_factor(1, 10);
    CHECK(mul(f, invert(f)).is_one());

    SUBCASE("truncates to the shorter operand") {
        TruncatedSeries longer(coeff_vec({1, 2, 3, 4, 5}), std::nullopt);
        CHECK(mul(geo, longer).trunc() == 2);
    }

    SUBCASE("modulus mismatch rejected") {
        TruncatedSeries mod5(coeff_vec({1, 1}), 5);
        TruncatedSeries mod7(coeff_vec({1, 1}), 7);
        CHECK_THROWS_AS((void)mul(mod5, mod7), std::invalid_argument);
        CHECK_THROWS_AS((void)mul(mod5, geo), std::invalid_argument);
    }
}

TEST_CASE("invert") {
    CHECK(invert(TruncatedSeries(coeff_vec({1, -1, 0, 0}), std::nullopt)).coeffs() ==
          coeff_vec({1, 1, 1, 1}));

    SUBCASE("1/(q;q) gives the partition numbers, cross-checked by the oracle") {
        const auto p = invert(euler_factor(1, 20));
        for (std::int64_t n = 0; n <= 20; ++n) CHECK(p.coeff(n) == pk_oracle(0, n));
        CHECK(p.coeff(20) == 627);
    }

    SUBCASE("non-unit constant term") {
        CHECK_THROWS_AS((void)invert(TruncatedSeries(coeff_vec({2, 1, 1}), 4)),
                        std::domain_error);
        CHECK_THROWS_AS((void)invert(TruncatedSeries(coeff_vec({2, 1, 1}), std::nullopt)),
                        std::domain_error);
    }
}

TEST_CASE("pow_series") {
    TruncatedSeries a(coeff_vec({1, 3, -2, 5}), std::nullopt);
    SUBCASE("zeroth power") {
        CHECK(pow_series(a, 0).is_one());
    }
    SUBCASE("group law pow(pow(a,3),-1) = pow(a,-3)") {
        CHECK(pow_series(pow_series(a, 3), -1) == pow_series(a, -3));
    }
    SUBCASE("Frobenius on Euler factors: (q;q)^p = (q^p;q^p) mod p") {
        for (std::int64_t p : {3, 5, 7}) {
            CAPTURE(p);
            CHECK(pow_series(euler_factor(1, 60, p), p) == euler_factor(p, 60, p));
        }
    }
}

TEST_CASE("eta_quotient_series") {
    SUBCASE("empty product") {
        const auto one = eta_quotient_series(ExponentVector(1, {}), 5);
        CHECK(one.is_one());
    }
    SUBCASE("g_{7,5} vanishes at 17 mod 5") {
        const auto g = eta_quotient_series(ExponentVector(35, {{1, 4}, {5, -1}, {7, -1}}),
                                           20, 5);
        CHECK(g.coeff(17) == 0);
    }
    SUBCASE("p_4 series vanishes at 11 mod 7") {
        const auto s = eta_quotient_series(ExponentVector(4, {{1, -1}, {4, -1}}), 60, 7);
        CHECK(s.coeff(11) == 0);
    }
}

TEST_CASE("pk_series examples") {
    CHECK(pk_series(0, 4).coeff(4) == 5);
    CHECK(pk_series(2, 2).coeff(2) == 3);
    CHECK(pk_series(7, 0).coeff(0) == 1);
    // k = 1 collapses the two factors onto the same divisor.
    CHECK(pk_exponent_vector(1) == ExponentVector(1, {{1, -2}}));
}

TEST_CASE("pk_oracle examples") {
    CHECK(pk_oracle(1, 1) == 2);
    CHECK(pk_oracle(7, 17, 5) == 0);
    CHECK(pk_oracle(0, 0) == 1);
}

TEST_CASE("oracle equivalence on a sampled grid") {
    // Full k in 0..20, n <= 200 grid lives in the acceptance suite.
    for (std::int64_t k : {0, 1, 2, 7, 13}) {
        const auto series = pk_series(k, 80);
        const auto table = pk_oracle_table(k, 80);
        for (std::int64_t n = 0; n <= 80; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(series.coeff(n) == table[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("random eta quotients times their inverse quotient give 1") {
    std::mt19937 rng(20160311);
    std::uniform_int_distribution<std::int64_t> exp_dist(-6, 6);
    const std::int64_t level = 12;
    const std::int64_t T = 100;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::pair<std::int64_t, std::int64_t>> entries;
        for (std::int64_t d : {1, 2, 3, 4, 6, 12}) entries.emplace_back(d, exp_dist(rng));
        ExponentVector r(level, entries);
        CHECK(mul(eta_quotient_series(r, T), eta_quotient_series(r.negated(), T)).is_one());
    }
}

TEST_CASE("reduction commutes with arithmetic") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<std::int64_t> cdist(-30, 30);
    std::vector<std::int64_t> mods = {2, 5, 7, 24, 25};
    for (std::int64_t u : mods) {
        std::vector<BigInt> a(31), b(31);
        a[0] = 1;
        b[0] = 1;
        for (std::size_t i = 1; i < a.size(); ++i) {
            a[i] = cdist(rng);
            b[i] = cdist(rng);
        }
        TruncatedSeries az(a, std::nullopt), bz(b, std::nullopt);
        TruncatedSeries am(a, u), bm(b, u);
        CHECK(TruncatedSeries(mul(az, bz).coeffs(), u) == mul(am, bm));
        CHECK(TruncatedSeries(invert(az).coeffs(), u) == invert(am));
        CHECK(TruncatedSeries(pow_series(az, 4).coeffs(), u) == pow_series(am, 4));
        CHECK(TruncatedSeries(pow_series(az, -3).coeffs(), u) == pow_series(am, -3));
    }
    SUBCASE("eta quotient over Z reduces to the modular computation") {
        ExponentVector r(6, {{1, 3}, {2, -2}, {3, 1}, {6, -1}});
        CHECK(TruncatedSeries(eta_quotient_series(r, 60).coeffs(), 5) ==
              eta_quotient_series(r, 60, 5));
    }
}

TEST_CASE("ExponentVector construction") {
    CHECK_THROWS_AS(ExponentVector(6, {{4, 1}}), std::invalid_argument);
    // Duplicate keys sum; zero entries are normalized away.
    ExponentVector merged(6, {{1, -1}, {1, -1}, {2, 3}, {2, -3}});
    CHECK(merged == ExponentVector(1, {{1, -2}}));
    CHECK(merged.entries().size() == 1);
    CHECK(merged.weighted_sum() == -2);
}
