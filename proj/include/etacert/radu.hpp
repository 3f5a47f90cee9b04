#ifndef ETACERT_RADU_HPP
#define ETACERT_RADU_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "etacert/series.hpp"

namespace etacert {

/// Exact fraction, stored reduced with positive denominator.  Every cusp
/// bound and the Sturm-type bound v live in this type; no floating point
/// appears anywhere on the verification path.
using Rational = boost::multiprecision::cpp_rational;

/// Floor toward minus infinity.
BigInt rational_floor(const Rational& x);

/// "numerator/denominator" rendering used in certificates.
std::string rational_to_string(const Rational& x);
Rational rational_from_string(const std::string& s);

/// The quintuple (m, M, N, t, r) fed to the admissibility check and the
/// finite-check lemma.
struct RaduTuple {
    std::int64_t m;        // arithmetic progression modulus
    std::int64_t level_m;  // level of r
    std::int64_t level_n;  // congruence-subgroup level
    std::int64_t t;        // residue, 0 <= t < m
    ExponentVector r;

    RaduTuple() : m(1), level_m(1), level_n(1), t(0) {}
    RaduTuple(std::int64_t m_, std::int64_t level_m_, std::int64_t level_n_,
              std::int64_t t_, ExponentVector r_);

    friend bool operator==(const RaduTuple&, const RaduTuple&) = default;
};

struct CertificateFailure {
    std::string stage;   // delta-star | cusp-bound | coefficient
    std::string detail;

    friend bool operator==(const CertificateFailure&, const CertificateFailure&) = default;
};

/// Full audit record of one congruence verification.  A verified certificate
/// is a proof of c_r(m n + t') == 0 (mod u) for all n >= 0 and all t' in the
/// orbit.
struct Certificate {
    RaduTuple tuple;
    ExponentVector rprime;
    std::int64_t u = 0;
    std::int64_t kappa = 0;
    std::int64_t index = 0;  // [Gamma : Gamma_0(N)]
    std::vector<std::int64_t> orbit;
    std::vector<std::pair<std::int64_t, Rational>> cusp_bounds;  // (delta, bound), by delta
    Rational v;
    std::int64_t floor_v = 0;
    std::int64_t coefficients_checked = 0;
    bool verified = false;
    std::optional<CertificateFailure> failure;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);

/// gcd(m^2 - 1, 24).
std::int64_t kappa(std::int64_t m);

/// [Gamma : Gamma_0(N)] = N prod_{p | N} (1 + 1/p), exact integer arithmetic.
std::int64_t sl2_index(std::int64_t n);

/// |P^1(Z/N)| by direct orbit enumeration; independent oracle for sl2_index.
std::int64_t projective_line_size(std::int64_t n);

/// Squares of the units modulo 24m, sorted ascending.
std::vector<std::int64_t> square_classes(std::int64_t m);

/// The orbit P_{m,r}(t) of t under the square-class action, sorted ascending.
std::vector<std::int64_t> residue_orbit(const RaduTuple& tuple);

/// Admissibility check; returns the id of the first violated condition, or
/// nullopt on pass.  Even m is rejected outright ("unsupported-even-m").
std::optional<std::string> delta_star_check(const RaduTuple& tuple);

/// p_{m,r}(gamma_delta) + p*_{r'}(gamma_delta) at gamma_delta = [[1,0],[delta,1]].
Rational cusp_lower_bound(const RaduTuple& tuple, const ExponentVector& rprime,
                          std::int64_t delta);

/// The bound v of the finite-check lemma, with its floor.
std::pair<Rational, std::int64_t> series_bound(const RaduTuple& tuple,
                                               const ExponentVector& rprime);

/// Full verification pipeline; failure is a result, not an exception.
Certificate verify_congruence(const RaduTuple& tuple, const ExponentVector& rprime,
                              std::int64_t u);

std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace etacert

#endif
