#include "etacert/radu.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

namespace etacert {

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

nlohmann::json exponent_vector_to_json(const ExponentVector& r) {
    nlohmann::json entries = nlohmann::json::object();
    for (auto [delta, e] : r.entries()) entries[std::to_string(delta)] = e;
    return nlohmann::json{{"level", r.level()}, {"entries", entries}};
}

ExponentVector exponent_vector_from_json(const nlohmann::json& j) {
    std::vector<std::pair<std::int64_t, std::int64_t>> entries;
    for (auto& [key, value] : j.at("entries").items())
        entries.emplace_back(std::stoll(key), value.get<std::int64_t>());
    return ExponentVector(j.at("level").get<std::int64_t>(), entries);
}

}  // namespace

BigInt rational_floor(const Rational& x) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

std::string rational_to_string(const Rational& x) {
    return boost::multiprecision::numerator(x).str() + "/" +
           boost::multiprecision::denominator(x).str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

RaduTuple::RaduTuple(std::int64_t m_, std::int64_t level_m_, std::int64_t level_n_,
                     std::int64_t t_, ExponentVector r_)
    : m(m_), level_m(level_m_), level_n(level_n_), t(t_), r(std::move(r_)) {
    if (m < 1 || level_m < 1 || level_n < 1)
        throw std::invalid_argument("RaduTuple: m, M, N must be positive");
    if (t < 0 || t >= m) throw std::invalid_argument("RaduTuple: t must lie in [0, m)");
    if (r.level() != level_m) throw std::invalid_argument("RaduTuple: r.level != M");
}

std::int64_t kappa(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("kappa: m must be positive");
    return std::gcd(m * m - 1, std::int64_t{24});
}

std::int64_t sl2_index(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("sl2_index: N must be positive");
    std::int64_t result = n;
    for (std::int64_t p : prime_factors(n)) result = result / p * (p + 1);
    return result;
}

std::int64_t projective_line_size(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("projective_line_size: N must be positive");
    if (n > 1000000) throw std::invalid_argument("projective_line_size: N too large");
    if (n == 1) return 1;
    std::vector<std::int64_t> units;
    for (std::int64_t u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) units.push_back(u);
    std::vector<bool> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    std::int64_t count = 0;
    for (std::int64_t c = 0; c < n; ++c) {
        for (std::int64_t a = 0; a < n; ++a) {
            if (std::gcd(std::gcd(a, c), n) != 1) continue;
            if (seen[static_cast<std::size_t>(c * n + a)]) continue;
            ++count;
            for (std::int64_t u : units)
                seen[static_cast<std::size_t>((u * c % n) * n + u * a % n)] = true;
        }
    }
    return count;
}

std::vector<std::int64_t> square_classes(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("square_classes: m must be positive");
    const std::int64_t mm = 24 * m;
    std::set<std::int64_t> out;
    for (std::int64_t s = 1; s < mm; ++s)
        if (std::gcd(s, mm) == 1) out.insert(s * s % mm);
    return {out.begin(), out.end()};
}

std::vector<std::int64_t> residue_orbit(const RaduTuple& tuple) {
    const std::int64_t m = tuple.m;
    const std::int64_t w = tuple.r.weighted_sum();
    std::set<std::int64_t> out;
    for (std::int64_t s : square_classes(m)) {
        // Every square class mod 24m is 1 mod 24; a failure here means
        // square_classes is broken.
        if ((s - 1) % 24 != 0)
            throw std::logic_error("residue_orbit: square class not 1 mod 24");
        std::int64_t tp = (tuple.t * s + (s - 1) / 24 * w) % m;
        if (tp < 0) tp += m;
        out.insert(tp);
    }
    return {out.begin(), out.end()};
}

std::optional<std::string> delta_star_check(const RaduTuple& tuple) {
    const std::int64_t m = tuple.m;
    const std::int64_t n = tuple.level_n;
    const std::int64_t kap = kappa(m);
    const std::int64_t w = tuple.r.weighted_sum();

    // The even-m branch of the admissibility conditions is deliberately
    // unimplemented; all supported cases have odd m.
    if (m % 2 == 0) return "unsupported-even-m";
    for (std::int64_t p : prime_factors(m))
        if (n % p != 0) return "C1";
    for (auto [delta, e] : tuple.r.entries())
        if ((m * n) % delta != 0) return "C2";
    std::int64_t s3 = 0;
    for (auto [delta, e] : tuple.r.entries()) s3 += e * (m * n / delta);
    if ((kap * n * s3) % 24 != 0) return "C3";
    if ((kap * n * tuple.r.exponent_sum()) % 8 != 0) return "C4";
    const std::int64_t g = std::gcd(kap * (-24 * tuple.t - w), 24 * m);
    if (n % (24 * m / g) != 0) return "C5";
    return std::nullopt;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational cusp_lower_bound(const RaduTuple& tuple, const ExponentVector& rprime,
                          std::int64_t delta) {
    if (tuple.level_n % delta != 0)
        throw std::invalid_argument("cusp_lower_bound: delta must divide N");
    if (rprime.level() != tuple.level_n)
        throw std::invalid_argument("cusp_lower_bound: rprime.level != N");
    if (tuple.m > 10000)
        throw std::invalid_argument("cusp_lower_bound: m exceeds the lambda-sweep guard");

    const std::int64_t m = tuple.m;
    const std::int64_t kap = kappa(m);
    const std::int64_t a = 1;
    const std::int64_t c = delta;

    std::optional<Rational> best;
    for (std::int64_t lambda = 0; lambda < m; ++lambda) {
        Rational sum = 0;
        for (auto [d, e] : tuple.r.entries()) {
            const std::int64_t g = std::gcd(std::abs(d * (a + kap * lambda * c)),
                                            std::abs(m * c));
            sum += Rational(e * g * g, d * m);
        }
        sum /= 24;
        if (!best || sum < *best) best = sum;
    }
    Rational lower = best ? *best : Rational(0);

    Rational star = 0;
    for (auto [d, e] : rprime.entries()) {
        const std::int64_t g = std::gcd(d, c);
        star += Rational(e * g * g, d);
    }
    star /= 24;
    return lower + star;
}

std::pair<Rational, std::int64_t> series_bound(const RaduTuple& tuple,
                                               const ExponentVector& rprime) {
    if (rprime.level() != tuple.level_n)
        throw std::invalid_argument("series_bound: rprime.level != N");
    const auto orbit = residue_orbit(tuple);
    const std::int64_t t_min = orbit.front();
    const std::int64_t index = sl2_index(tuple.level_n);

    Rational v = Rational((tuple.r.exponent_sum() + rprime.exponent_sum()) * index -
                              rprime.weighted_sum(),
                          24);
    v -= Rational(tuple.r.weighted_sum(), 24 * tuple.m);
    v -= Rational(t_min, tuple.m);
    return {v, static_cast<std::int64_t>(rational_floor(v))};
}

Certificate verify_congruence(const RaduTuple& tuple, const ExponentVector& rprime,
                              std::int64_t u) {
    if (u < 2) throw std::invalid_argument("verify_congruence: u must be >= 2");
    Certificate cert{tuple, rprime, u};
    cert.kappa = kappa(tuple.m);
    cert.index = sl2_index(tuple.level_n);
    cert.orbit = residue_orbit(tuple);

    if (auto cond = delta_star_check(tuple)) {
        cert.failure = CertificateFailure{"delta-star", *cond};
        return cert;
    }

    for (std::int64_t delta : divisors(tuple.level_n))
        cert.cusp_bounds.emplace_back(delta, cusp_lower_bound(tuple, rprime, delta));
    for (const auto& [delta, bound] : cert.cusp_bounds) {
        if (bound < 0) {
            cert.failure = CertificateFailure{
                "cusp-bound", "delta=" + std::to_string(delta) +
                                  " bound=" + rational_to_string(bound)};
            return cert;
        }
    }

    std::tie(cert.v, cert.floor_v) = series_bound(tuple, rprime);

    const std::int64_t trunc = tuple.m * cert.floor_v + cert.orbit.back();
    const auto series = eta_quotient_series(tuple.r, std::max<std::int64_t>(trunc, 0), u);
    for (std::int64_t tp : cert.orbit) {
        for (std::int64_t n = 0; n <= cert.floor_v; ++n) {
            const BigInt& value = series.coeff(tuple.m * n + tp);
            ++cert.coefficients_checked;
            if (value != 0) {
                cert.failure = CertificateFailure{
                    "coefficient", "n=" + std::to_string(n) + " t=" + std::to_string(tp) +
                                       " value=" + value.str()};
                return cert;
            }
        }
    }

    cert.verified = true;
    return cert;
}

void to_json(nlohmann::json& j, const Certificate& c) {
    nlohmann::json cusp_bounds = nlohmann::json::array();
    for (const auto& [delta, bound] : c.cusp_bounds)
        cusp_bounds.push_back({{"delta", delta}, {"bound", rational_to_string(bound)}});
    j = nlohmann::json{
        {"tuple",
         {{"m", c.tuple.m},
          {"level_m", c.tuple.level_m},
          {"level_n", c.tuple.level_n},
          {"t", c.tuple.t},
          {"r", exponent_vector_to_json(c.tuple.r)}}},
        {"rprime", exponent_vector_to_json(c.rprime)},
        {"u", c.u},
        {"kappa", c.kappa},
        {"index", c.index},
        {"orbit", c.orbit},
        {"cusp_bounds", cusp_bounds},
        {"v", rational_to_string(c.v)},
        {"floor_v", c.floor_v},
        {"coefficients_checked", c.coefficients_checked},
        {"verdict", c.verified ? "verified" : "failed"},
    };
    if (c.failure)
        j["failure"] = {{"stage", c.failure->stage}, {"detail", c.failure->detail}};
    else
        j["failure"] = nullptr;
}

void from_json(const nlohmann::json& j, Certificate& c) {
    const auto& jt = j.at("tuple");
    c.tuple = RaduTuple(jt.at("m").get<std::int64_t>(), jt.at("level_m").get<std::int64_t>(),
                        jt.at("level_n").get<std::int64_t>(), jt.at("t").get<std::int64_t>(),
                        exponent_vector_from_json(jt.at("r")));
    c.rprime = exponent_vector_from_json(j.at("rprime"));
    c.u = j.at("u").get<std::int64_t>();
    c.kappa = j.at("kappa").get<std::int64_t>();
    c.index = j.at("index").get<std::int64_t>();
    c.orbit = j.at("orbit").get<std::vector<std::int64_t>>();
    c.cusp_bounds.clear();
    for (const auto& cb : j.at("cusp_bounds"))
        c.cusp_bounds.emplace_back(cb.at("delta").get<std::int64_t>(),
                                   rational_from_string(cb.at("bound").get<std::string>()));
    c.v = rational_from_string(j.at("v").get<std::string>());
    c.floor_v = j.at("floor_v").get<std::int64_t>();
    c.coefficients_checked = j.at("coefficients_checked").get<std::int64_t>();
    c.verified = j.at("verdict").get<std::string>() == "verified";
    if (j.contains("failure") && !j.at("failure").is_null())
        c.failure = CertificateFailure{j.at("failure").at("stage").get<std::string>(),
                                       j.at("failure").at("detail").get<std::string>()};
    else
        c.failure.reset();
}

}  // namespace etacert
