#ifndef ETACERT_CONGRUENCES_HPP
#define ETACERT_CONGRUENCES_HPP

#include <string>
#include <vector>

#include "etacert/radu.hpp"
#include "etacert/series.hpp"

namespace etacert {

/// One of the five verification cases: the exact constants used to prove the
/// two theorems, together with the values they are claimed to reproduce.
struct PaperCase {
    std::string name;  // k7, k8, k17, k4-a, k4-b
    std::int64_t k;    // 2-color parameter
    std::int64_t u;    // congruence modulus
    RaduTuple tuple;
    ExponentVector rprime;
    std::int64_t claimed_floor_v;
    std::vector<std::int64_t> claimed_orbit;
    // Progressions p_k(m n + t) == 0 (mod u) established by the case.
    std::vector<std::pair<std::int64_t, std::int64_t>> theorem_residues;  // (m, t)
};

/// Statement p_k(m n + t) == 0 (mod u) for all n >= 0.
struct CongruenceClaim {
    std::int64_t k;
    std::int64_t m;
    std::int64_t t;
    std::int64_t u;

    friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

const std::vector<std::string>& paper_case_names();
PaperCase paper_case(const std::string& name);

/// Replaces the factor (q^delta;q^delta)^{r_delta < 0} by
/// (q^delta;q^delta)^{r_delta + p^alpha} (q^{p delta};q^{p delta})^{-p^{alpha-1}},
/// congruent mod p^alpha by the binomial theorem.
ExponentVector binomial_reduce(const ExponentVector& r0, std::int64_t p,
                               std::int64_t alpha, std::int64_t delta = 1);

/// Expands (q;q)^{p^alpha} / (q^p;q^p)^{p^{alpha-1}} mod p^alpha to T terms;
/// returns the first index whose coefficient differs from the series 1, or
/// nullopt on pass.
std::optional<std::int64_t> check_binomial_lemma(std::int64_t p, std::int64_t alpha,
                                                 std::int64_t trunc);

enum class Theorem { one, two };

struct TheoremResult {
    std::vector<Certificate> certificates;  // ordered by case name
    std::vector<CongruenceClaim> claims;
    bool all_verified = false;
};

/// Runs the verification cases behind one theorem: re-derives each reduced
/// exponent vector from the p_k generating function, checks it against the
/// registry, and runs the full congruence pipeline.
TheoremResult verify_theorem(Theorem which);

/// Exhaustive residue screen by the DP oracle.  Output is evidence only,
/// never proof.
std::vector<std::int64_t> oracle_scan(std::int64_t k, std::int64_t m, std::int64_t u,
                                      std::int64_t n_checks,
                                      std::int64_t work_guard = 50000);

}  // namespace etacert

#endif
