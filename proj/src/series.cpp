#include "etacert/series.hpp"

#include <numeric>

namespace etacert {

namespace {

void require_same_modulus(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("series arithmetic requires equal modulus fields");
}

// Modular inverse via extended Euclid; throws when gcd(a, u) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t u) {
    std::int64_t r0 = u, r1 = ((a % u) + u) % u;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("constant term is not a unit of Z/u");
    return ((s0 % u) + u) % u;
}

// Fast path for residue series: coefficients fit int64 and partial Cauchy
// sums are reduced often enough to never overflow.
bool small_modulus(const TruncatedSeries& a) {
    return a.modulus() && *a.modulus() <= (std::int64_t{1} << 31);
}

std::vector<std::int64_t> to_small(const TruncatedSeries& a) {
    std::vector<std::int64_t> v(a.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = static_cast<std::int64_t>(a.coeffs()[i]);
    return v;
}

TruncatedSeries from_small(const std::vector<std::int64_t>& v, std::int64_t u) {
    std::vector<BigInt> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i];
    return TruncatedSeries(std::move(c), u);
}

TruncatedSeries mul_small(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::int64_t u = *a.modulus();
    const std::size_t n = std::min(a.coeffs().size(), b.coeffs().size());
    auto av = to_small(a);
    auto bv = to_small(b);
    // u^2 * batch must stay below 2^63.
    const std::int64_t batch =
        std::max<std::int64_t>(1, (std::int64_t{1} << 62) / (u * u));
    std::vector<std::int64_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (av[i] != 0)
            for (std::size_t j = 0; j < n - i; ++j) out[i + j] += av[i] * bv[j];
        if (static_cast<std::int64_t>(i) % batch == batch - 1)
            for (auto& x : out) x %= u;
    }
    for (auto& x : out) x %= u;
    return from_small(out, u);
}

TruncatedSeries invert_small(const TruncatedSeries& a) {
    const std::int64_t u = *a.modulus();
    const std::size_t n = a.coeffs().size();
    auto av = to_small(a);
    const std::int64_t inv0 = mod_inverse(av[0], u);
    std::vector<std::int64_t> bv(n, 0);
    bv[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        std::int64_t acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += (av[j] * bv[k - j]) % u;
            if (acc >= (std::int64_t{1} << 62)) acc %= u;
        }
        bv[k] = ((-inv0 * (acc % u)) % u + u) % u;
    }
    return from_small(bv, u);
}

}  // namespace

TruncatedSeries euler_factor(std::int64_t delta, std::int64_t trunc,
                             std::optional<std::int64_t> modulus) {
    if (delta < 1) throw std::invalid_argument("euler_factor: delta must be >= 1");
    TruncatedSeries out(trunc, modulus);
    out.set_coeff(0, 1);
    for (std::int64_t j = 1;; ++j) {
        const std::int64_t g1 = j * (3 * j - 1) / 2;
        const std::int64_t g2 = j * (3 * j + 1) / 2;
        if (delta * g1 > trunc) break;
        const int sign = (j % 2 == 0) ? 1 : -1;
        out.set_coeff(delta * g1, out.coeff(delta * g1) + sign);
        if (delta * g2 <= trunc) out.set_coeff(delta * g2, out.coeff(delta * g2) + sign);
    }
    return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_modulus(a, b);
    if (small_modulus(a)) return mul_small(a, b);
    const std::size_t n = std::min(a.coeffs().size(), b.coeffs().size());
    std::vector<BigInt> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < n - i; ++j)
            out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return TruncatedSeries(std::move(out), a.modulus());
}

TruncatedSeries invert(const TruncatedSeries& a) {
    if (a.modulus()) {
        if (small_modulus(a)) return invert_small(a);
        // Huge moduli never occur here; reduce through the generic recurrence.
    } else if (a.coeff(0) != 1 && a.coeff(0) != -1) {
        throw std::domain_error("constant term must be a unit of Z");
    }
    const std::size_t n = a.coeffs().size();
    std::vector<BigInt> b(n);
    BigInt inv0;
    if (a.modulus()) {
        inv0 = mod_inverse(static_cast<std::int64_t>(a.coeff(0) % *a.modulus()), *a.modulus());
    } else {
        inv0 = a.coeff(0);  // +-1 is self-inverse
    }
    b[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        BigInt acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += a.coeffs()[j] * b[k - j];
        b[k] = -inv0 * acc;
        if (a.modulus()) b[k] = TruncatedSeries::reduce(b[k], *a.modulus());
    }
    return TruncatedSeries(std::move(b), a.modulus());
}

TruncatedSeries pow_series(const TruncatedSeries& a, std::int64_t e) {
    TruncatedSeries base = e < 0 ? invert(a) : a;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    TruncatedSeries result(a.trunc(), a.modulus());
    result.set_coeff(0, 1);
    while (k != 0) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k != 0) base = mul(base, base);
    }
    return result;
}

TruncatedSeries eta_quotient_series(const ExponentVector& r, std::int64_t trunc,
                                    std::optional<std::int64_t> modulus) {
    TruncatedSeries out(trunc, modulus);
    out.set_coeff(0, 1);
    for (auto [delta, e] : r.entries())
        out = mul(out, pow_series(euler_factor(delta, trunc, modulus), e));
    return out;
}

ExponentVector pk_exponent_vector(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("pk: k must be >= 0");
    if (k == 0) return ExponentVector(1, {{1, -1}});
    // k = 1 collapses to {1: -2} via duplicate-key summing.
    return ExponentVector(k, {{1, -1}, {k, -1}});
}

TruncatedSeries pk_series(std::int64_t k, std::int64_t trunc,
                          std::optional<std::int64_t> modulus) {
    return eta_quotient_series(pk_exponent_vector(k), trunc, modulus);
}

std::vector<BigInt> pk_oracle_table(std::int64_t k, std::int64_t n,
                                    std::optional<std::int64_t> modulus) {
    if (k < 0 || n < 0) throw std::invalid_argument("pk_oracle: k, n must be >= 0");
    std::vector<BigInt> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    // First color: unrestricted parts, classic part-major coin counting.
    for (std::int64_t part = 1; part <= n; ++part)
        for (std::int64_t s = part; s <= n; ++s) {
            dp[s] += dp[s - part];
            if (modulus) dp[s] %= *modulus;
        }
    // Second color: parts k, 2k, ...; absent entirely when k = 0.
    if (k >= 1)
        for (std::int64_t part = k; part <= n; part += k)
            for (std::int64_t s = part; s <= n; ++s) {
                dp[s] += dp[s - part];
                if (modulus) dp[s] %= *modulus;
            }
    return dp;
}

BigInt pk_oracle(std::int64_t k, std::int64_t n, std::optional<std::int64_t> modulus) {
    return pk_oracle_table(k, n, modulus).back();
}

}  // namespace etacert
