#ifndef ETACERT_SERIES_HPP
#define ETACERT_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace etacert {

using BigInt = boost::multiprecision::cpp_int;

/// Eta-quotient exponent data: a finitely supported map delta -> r_delta over
/// the divisors of a level M.  Duplicate keys are summed on construction and
/// zero entries are dropped, so the stored support is always minimal.
class ExponentVector {
public:
    ExponentVector() : level_(1) {}

    ExponentVector(std::int64_t level,
                   std::initializer_list<std::pair<std::int64_t, std::int64_t>> entries)
        : ExponentVector(level,
                         std::vector<std::pair<std::int64_t, std::int64_t>>(entries)) {}

    ExponentVector(std::int64_t level,
                   const std::vector<std::pair<std::int64_t, std::int64_t>>& entries)
        : level_(level) {
        if (level < 1) throw std::invalid_argument("ExponentVector: level must be positive");
        for (auto [delta, r] : entries) {
            if (delta < 1 || level % delta != 0)
                throw std::invalid_argument("ExponentVector: key does not divide level");
            entries_[delta] += r;
        }
        std::erase_if(entries_, [](const auto& kv) { return kv.second == 0; });
    }

    std::int64_t level() const { return level_; }
    const std::map<std::int64_t, std::int64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    std::int64_t exponent(std::int64_t delta) const {
        auto it = entries_.find(delta);
        return it == entries_.end() ? 0 : it->second;
    }

    /// Sum of delta * r_delta over the support.
    std::int64_t weighted_sum() const {
        std::int64_t s = 0;
        for (auto [delta, r] : entries_) s += delta * r;
        return s;
    }

    /// Sum of r_delta over the support.
    std::int64_t exponent_sum() const {
        std::int64_t s = 0;
        for (auto [delta, r] : entries_) s += r;
        return s;
    }

    ExponentVector negated() const {
        ExponentVector out;
        out.level_ = level_;
        for (auto [delta, r] : entries_) out.entries_[delta] = -r;
        return out;
    }

    // Quotient equality is support-based; levels may differ.
    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::int64_t level_;
    std::map<std::int64_t, std::int64_t> entries_;
};

/// Coefficients c(0..T) of a formal power series, over Z or Z/u.  Residues
/// are kept as the least nonnegative representatives; the no-modulus path is
/// arbitrary precision throughout.
class TruncatedSeries {
public:
    TruncatedSeries(std::int64_t trunc, std::optional<std::int64_t> modulus)
        : modulus_(modulus), coeffs_(static_cast<std::size_t>(trunc) + 1) {
        if (trunc < 0) throw std::invalid_argument("TruncatedSeries: trunc must be >= 0");
        if (modulus && *modulus < 1)
            throw std::invalid_argument("TruncatedSeries: modulus must be positive");
    }

    TruncatedSeries(std::vector<BigInt> coeffs, std::optional<std::int64_t> modulus)
        : modulus_(modulus), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficients");
        if (modulus_) {
            if (*modulus_ < 1)
                throw std::invalid_argument("TruncatedSeries: modulus must be positive");
            for (auto& c : coeffs_) c = reduce(c, *modulus_);
        }
    }

    std::int64_t trunc() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    std::optional<std::int64_t> modulus() const { return modulus_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& coeff(std::int64_t n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

    void set_coeff(std::int64_t n, BigInt value) {
        if (modulus_) value = reduce(value, *modulus_);
        coeffs_.at(static_cast<std::size_t>(n)) = std::move(value);
    }

    bool is_one() const {
        if (coeffs_[0] != 1) return false;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    static BigInt reduce(const BigInt& x, std::int64_t u) {
        BigInt r = x % u;
        if (r < 0) r += u;
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::optional<std::int64_t> modulus_;
    std::vector<BigInt> coeffs_;
};

/// (q^delta; q^delta)_inf truncated at T, by the pentagonal-number expansion.
TruncatedSeries euler_factor(std::int64_t delta, std::int64_t trunc,
                             std::optional<std::int64_t> modulus = std::nullopt);

/// Cauchy product; result is truncated to the shorter operand.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; the constant term must be a unit.
TruncatedSeries invert(const TruncatedSeries& a);

/// Binary powering over mul/invert; pow(a, 0) = 1.
TruncatedSeries pow_series(const TruncatedSeries& a, std::int64_t e);

/// f_r(q) = prod_{delta | M} (q^delta; q^delta)_inf^{r_delta} truncated at T.
TruncatedSeries eta_quotient_series(const ExponentVector& r, std::int64_t trunc,
                                    std::optional<std::int64_t> modulus = std::nullopt);

/// Exponent vector of the p_k generating function 1/((q;q)(q^k;q^k)).
ExponentVector pk_exponent_vector(std::int64_t k);

/// Generating series of the 2-color partition numbers p_k(n).
TruncatedSeries pk_series(std::int64_t k, std::int64_t trunc,
                          std::optional<std::int64_t> modulus = std::nullopt);

/// Independent combinatorial count of p_k(n) by bounded-part DP.  Shares no
/// code with the series path.
BigInt pk_oracle(std::int64_t k, std::int64_t n,
                 std::optional<std::int64_t> modulus = std::nullopt);

/// p_k(0..n) in one DP sweep, for scans and spot checks.
std::vector<BigInt> pk_oracle_table(std::int64_t k, std::int64_t n,
                                    std::optional<std::int64_t> modulus = std::nullopt);

}  // namespace etacert

#endif
