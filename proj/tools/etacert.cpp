#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "etacert/congruences.hpp"
#include "etacert/radu.hpp"
#include "etacert/series.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::int64_t work_guard_or(std::int64_t fallback) {
    if (const char* env = std::getenv("ETACERT_WORK_GUARD")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("ETACERT_WORK_GUARD is not an integer");
        }
    }
    return fallback;
}

// "1:4,5:-1,7:-1" -> ExponentVector at the given level.
etacert::ExponentVector parse_exponent_vector(const std::string& text, std::int64_t level) {
    std::vector<std::pair<std::int64_t, std::int64_t>> entries;
    if (!text.empty()) {
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError("exponent entry '" + item + "' is not delta:r");
            try {
                entries.emplace_back(std::stoll(item.substr(0, colon)),
                                     std::stoll(item.substr(colon + 1)));
            } catch (const std::exception&) {
                throw CLI::ValidationError("exponent entry '" + item + "' is not delta:r");
            }
        }
    }
    try {
        return etacert::ExponentVector(level, entries);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(e.what());
    }
}

std::string orbit_to_string(const std::vector<std::int64_t>& orbit) {
    std::string out = "{";
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(orbit[i]);
    }
    return out + "}";
}

void print_certificate_text(const etacert::Certificate& cert) {
    std::cout << "tuple: (m=" << cert.tuple.m << ", M=" << cert.tuple.level_m
              << ", N=" << cert.tuple.level_n << ", t=" << cert.tuple.t << ")\n";
    std::cout << "modulus u: " << cert.u << "\n";
    std::cout << "kappa: " << cert.kappa << "  index [Gamma:Gamma0(N)]: " << cert.index
              << "\n";
    std::cout << "orbit: " << orbit_to_string(cert.orbit) << "\n";
    for (const auto& [delta, bound] : cert.cusp_bounds)
        std::cout << "cusp bound at delta=" << delta << ": "
                  << etacert::rational_to_string(bound) << "\n";
    std::cout << "v: " << etacert::rational_to_string(cert.v)
              << "  floor(v): " << cert.floor_v << "\n";
    std::cout << "coefficients checked: " << cert.coefficients_checked << "\n";
    std::cout << "verdict: " << (cert.verified ? "verified" : "failed") << "\n";
    if (cert.failure)
        std::cout << "failure: stage=" << cert.failure->stage
                  << " detail=" << cert.failure->detail << "\n";
}

int cmd_verify_paper(bool json_mode) {
    const auto thm1 = etacert::verify_theorem(etacert::Theorem::one);
    const auto thm2 = etacert::verify_theorem(etacert::Theorem::two);
    std::vector<etacert::Certificate> all = thm1.certificates;
    all.insert(all.end(), thm2.certificates.begin(), thm2.certificates.end());

    if (json_mode) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& cert : all) out.push_back(cert);
        std::cout << out.dump(2) << "\n";
    } else {
        const auto& names = etacert::paper_case_names();
        for (std::size_t i = 0; i < all.size(); ++i) {
            const auto& cert = all[i];
            std::cout << names[i] << "  orbit=" << orbit_to_string(cert.orbit)
                      << "  floor_v=" << cert.floor_v << "  verdict="
                      << (cert.verified ? "verified" : "failed") << "\n";
        }
    }
    return (thm1.all_verified && thm2.all_verified) ? kExitOk : kExitVerificationFailed;
}

struct VerifyArgs {
    std::int64_t m = 0, level_m = 0, level_n = 0, t = 0, u = 0;
    std::string r_text, rprime_text;
    bool json_mode = false;
};

int cmd_verify(const VerifyArgs& args) {
    etacert::Certificate cert;
    try {
        etacert::RaduTuple tuple(args.m, args.level_m, args.level_n, args.t,
                                 parse_exponent_vector(args.r_text, args.level_m));
        cert = etacert::verify_congruence(
            tuple, parse_exponent_vector(args.rprime_text, args.level_n), args.u);
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(e.what());
    }
    if (args.json_mode)
        std::cout << nlohmann::json(cert).dump(2) << "\n";
    else
        print_certificate_text(cert);
    return cert.verified ? kExitOk : kExitVerificationFailed;
}

int cmd_coeff(std::int64_t k, std::int64_t up_to, std::optional<std::int64_t> modulus) {
    const std::int64_t guard = work_guard_or(modulus ? 100000 : 10000);
    if (up_to > guard)
        throw CLI::ValidationError("--up-to exceeds the work guard (" +
                                   std::to_string(guard) + ")");
    const auto series = etacert::pk_series(k, up_to, modulus);
    // Spot check the series path against the independent DP count.
    const std::int64_t check_to = std::min<std::int64_t>(up_to, 500);
    const auto oracle = etacert::pk_oracle_table(k, check_to, modulus);
    for (std::int64_t n = 0; n <= check_to; ++n) {
        if (series.coeff(n) != oracle[static_cast<std::size_t>(n)]) {
            std::cerr << "internal error: series/oracle disagree at n=" << n << "\n";
            return kExitVerificationFailed;
        }
    }
    for (std::int64_t n = 0; n <= up_to; ++n)
        std::cout << n << " " << series.coeff(n).str() << "\n";
    return kExitOk;
}

int cmd_scan(std::int64_t k, std::int64_t m, std::int64_t u, std::int64_t n_checks) {
    const std::int64_t guard = work_guard_or(50000);
    std::vector<std::int64_t> hits;
    try {
        hits = etacert::oracle_scan(k, m, u, n_checks, guard);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError(e.what());
    }
    for (std::int64_t t : hits)
        std::cout << "CANDIDATE (not a proof) t=" << t << "\n";
    std::cout << hits.size() << " candidate(s) for p_" << k << "(" << m << "n+t) = 0 (mod "
              << u << "), n <= " << n_checks << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eta-quotient congruence verifier"};
    app.require_subcommand(1);

    bool json_mode = false;
    auto* verify_paper =
        app.add_subcommand("verify-paper", "verify all registered congruence cases");
    verify_paper->add_flag("--json", json_mode, "emit the full certificates as JSON");

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "verify one congruence from raw constants");
    verify->add_option("--m", vargs.m, "progression modulus m")->required();
    verify->add_option("--M", vargs.level_m, "level M of r")->required();
    verify->add_option("--N", vargs.level_n, "congruence-subgroup level N")->required();
    verify->add_option("--t", vargs.t, "residue t")->required();
    verify->add_option("--r", vargs.r_text, "exponents of r as delta:r pairs, e.g. 1:4,5:-1")
        ->required();
    verify->add_option("--rprime", vargs.rprime_text, "exponents of r' as delta:r pairs")
        ->required();
    verify->add_option("--mod", vargs.u, "congruence modulus u")->required();
    verify->add_flag("--json", vargs.json_mode, "emit the certificate as JSON");

    std::int64_t coeff_k = 0, coeff_up_to = 0;
    std::int64_t coeff_mod = 0;
    auto* coeff = app.add_subcommand("coeff", "print p_k(0..n)");
    coeff->add_option("--k", coeff_k, "2-color parameter k")->required();
    coeff->add_option("--up-to", coeff_up_to, "largest n")->required();
    auto* coeff_mod_opt = coeff->add_option("--mod", coeff_mod, "reduce modulo u");

    std::int64_t scan_k = 0, scan_m = 0, scan_u = 0, scan_n = 30;
    auto* scan = app.add_subcommand("scan", "screen residues t with the DP oracle");
    scan->add_option("--k", scan_k, "2-color parameter k")->required();
    scan->add_option("--m", scan_m, "progression modulus m")->required();
    scan->add_option("--mod", scan_u, "congruence modulus u")->required();
    scan->add_option("--n-checks", scan_n, "check n = 0..n-checks (default 30)");

    try {
        app.parse(argc, argv);
        if (verify_paper->parsed()) return cmd_verify_paper(json_mode);
        if (verify->parsed()) return cmd_verify(vargs);
        if (coeff->parsed())
            return cmd_coeff(coeff_k, coeff_up_to,
                             coeff_mod_opt->count() ? std::optional<std::int64_t>(coeff_mod)
                                                    : std::nullopt);
        if (scan->parsed()) return cmd_scan(scan_k, scan_m, scan_u, scan_n);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
