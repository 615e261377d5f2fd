// ctproof: prove, derive, approx and quad subcommands.
//
// Exit status: 0 success, 1 proof or verification failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "ct/approximants.hpp"
#include "ct/errors.hpp"
#include "ct/prover.hpp"
#include "ct/quadrature.hpp"
#include "ct/rational_integration.hpp"
#include "ct/serialize.hpp"
#include "ct/telescoper.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr std::uint64_t kDefaultSeed = 20191112;
constexpr unsigned kSpotChecks = 3;
constexpr unsigned kSpotWindow = 12;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string a_text;
    std::string b_text;
    unsigned n_max = 8;
    std::string mode = "verify";
    long precision_bits = 256;
    double tol = 1e-12;
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    int max_order = 2;
    int max_cert_degree = 4;
    std::string gnuplot;
};

ct::Rational parse_rational(const std::string& name, const std::string& text) {
    try {
        return ct::Rational::parse(text);
    } catch (const ct::Error& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

ct::ParameterPair parse_params(const RunConfig& cfg) {
    const ct::Rational a = parse_rational("a", cfg.a_text);
    const ct::Rational b = parse_rational("b", cfg.b_text);
    const auto params = ct::ParameterPair::unchecked(a, b);
    if (!params.valid()) {
        throw UsageError("invalid parameters: requires a > b > 0 (got a = " + a.to_string() + ", b = " + b.to_string() +
                         ")");
    }
    return params;
}

std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_short(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string recurrence_text(const ct::Recurrence& rec) {
    std::ostringstream os;
    for (int k = 0; k <= rec.order(); ++k) {
        if (k > 0) os << " + ";
        os << "(" << rec.coeff(k).to_string('n') << ")*y(n";
        if (k > 0) os << "+" << k;
        os << ")";
    }
    os << " = 0";
    return os.str();
}

std::string certificate_text(const ct::Certificate& cert) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < cert.parts().size(); ++j) {
        const auto& part = cert.parts()[j];
        if (part.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (j > 0) os << "n" << (j > 1 ? "^" + std::to_string(j) : "") << "*";
        os << "[" << part.to_string() << "]";
    }
    if (first) os << "0";
    return os.str();
}

// Writes text to path, or to stdout when path is empty.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    file << text;
    if (!file) throw std::runtime_error("write to " + path + " failed");
}

struct SpotCheck {
    unsigned n;
    bool equal;
};

// Recurrence-propagated values at seeded n beyond the direct-check range,
// compared against direct integration of both sides.
std::vector<SpotCheck> spot_checks(const ct::ProofObject& proof, const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<unsigned> pick(cfg.n_max + 1, cfg.n_max + kSpotWindow);
    std::vector<unsigned> ns;
    for (unsigned i = 0; i < kSpotChecks; ++i) ns.push_back(pick(rng));
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    std::vector<ct::LogCombination> init;
    for (const auto& v : proof.base_cases) init.push_back(v.left);
    const auto propagated = ct::propagate_recurrence(*proof.recurrence, init, ns.back());
    std::vector<SpotCheck> out;
    for (unsigned n : ns) {
        const auto left = ct::integrate_01(proof.left_family->at(n));
        const auto right = ct::integrate_01(proof.right_family->at(n));
        out.push_back({n, left == right && left == propagated[n]});
    }
    return out;
}

int cmd_prove(const RunConfig& cfg) {
    const auto params = parse_params(cfg);
    const auto mode = cfg.mode == "discover" ? ct::ProofMode::discover : ct::ProofMode::verify_closed_form;
    const auto proof = ct::prove_identity(params, mode, cfg.n_max, {cfg.max_order, cfg.max_cert_degree});

    std::vector<SpotCheck> spots;
    if (proof.verdict.proved) spots = spot_checks(proof, cfg);
    const bool spots_ok = std::all_of(spots.begin(), spots.end(), [](const SpotCheck& s) { return s.equal; });

    ct::Json j = ct::to_json(proof);
    ct::Json spot_json = ct::Json::array();
    for (const auto& s : spots) spot_json.push_back({{"n", s.n}, {"equal", s.equal}});
    j["spot_checks"] = {{"seed", cfg.seed}, {"checks", spot_json}};

    // The summary goes to stdout when the proof object has a file of its own.
    std::ostream& summary = cfg.out.empty() ? std::cerr : std::cout;
    summary << "parameters: a = " << params.a() << ", b = " << params.b() << "\n";
    summary << "mode: " << cfg.mode << "\n";
    if (proof.recurrence) summary << "recurrence: " << recurrence_text(*proof.recurrence) << "\n";
    if (proof.verdict.proved) {
        summary << "telescoping verified for n = 0.." << proof.degree_bound << " (covers every n)\n";
        for (const auto& v : proof.base_cases) {
            summary << "L(" << v.n << ") = R(" << v.n << ") = " << v.left.to_string() << "\n";
        }
        summary << "direct comparison: n = 0.." << cfg.n_max << " equal\n";
        summary << "substitution x = b(1-u)/(b+u): ok\n";
        summary << "spot checks (seed " << cfg.seed << "):";
        for (const auto& s : spots) summary << " n=" << s.n << (s.equal ? " ok" : " MISMATCH");
        summary << "\n";
    }
    const bool proved = proof.verdict.proved && spots_ok;
    summary << "verdict: "
            << (proved ? "proved" : "failed: " + (proof.verdict.proved ? "spot check mismatch" : proof.verdict.reason))
            << "\n";

    emit(cfg.out, j.dump(2) + "\n");
    return proved ? kExitOk : kExitFailure;
}

int cmd_derive(const RunConfig& cfg) {
    const auto params = parse_params(cfg);
    const auto left_family = ct::make_left_family(params);
    const auto right_family = ct::make_right_family(params);
    std::optional<ct::Telescoper> left;
    std::optional<ct::Telescoper> right;
    try {
        left = ct::discover(left_family, cfg.max_order, cfg.max_cert_degree);
        right = ct::discover(right_family, cfg.max_order, cfg.max_cert_degree);
    } catch (const ct::AnsatzExhausted& e) {
        std::cerr << "derive: " << e.what() << "\n";
        return kExitFailure;
    }

    const bool left_ok = ct::verify_telescoping_all_n(left_family, left->recurrence, left->certificate,
                                                      left->verified_degree_bound);
    const bool right_ok = ct::verify_telescoping_all_n(right_family, right->recurrence, right->certificate,
                                                       right->verified_degree_bound);
    const bool shared = left->recurrence == right->recurrence;

    ct::Json j;
    j["params"] = {{"a", ct::to_json(params.a())}, {"b", ct::to_json(params.b())}};
    j["bounds"] = {{"max_order", cfg.max_order}, {"max_cert_degree", cfg.max_cert_degree}};
    auto side = [](const ct::IntegrandFamily& fam, const ct::Telescoper& t, bool ok) {
        ct::Json s;
        s["family"] = ct::to_json(fam);
        s["recurrence"] = ct::to_json(t.recurrence);
        s["certificate"] = ct::to_json(t.certificate);
        s["verified_degree_bound"] = t.verified_degree_bound;
        s["verified"] = ok;
        return s;
    };
    j["left"] = side(left_family, *left, left_ok);
    j["right"] = side(right_family, *right, right_ok);
    j["shared_recurrence"] = shared;
    j["tool_version"] = ct::kToolVersion;

    std::ostringstream os;
    os << "parameters: a = " << params.a() << ", b = " << params.b() << "\n";
    os << "left recurrence:  " << recurrence_text(left->recurrence) << "\n";
    os << "left certificate: " << certificate_text(left->certificate) << "\n";
    os << "left verified for n = 0.." << left->verified_degree_bound << ": " << (left_ok ? "yes" : "no") << "\n";
    os << "right recurrence:  " << recurrence_text(right->recurrence) << "\n";
    os << "right certificate: " << certificate_text(right->certificate) << "\n";
    os << "right verified for n = 0.." << right->verified_degree_bound << ": " << (right_ok ? "yes" : "no") << "\n";
    os << "shared recurrence: " << (shared ? "yes" : "no") << "\n";
    std::cout << os.str();
    if (!cfg.out.empty()) emit(cfg.out, j.dump(2) + "\n");
    return left_ok && right_ok && shared ? kExitOk : kExitFailure;
}

int cmd_approx(const RunConfig& cfg) {
    const auto params = parse_params(cfg);
    const auto rows = ct::approximant_table(params, cfg.n_max, cfg.precision_bits);
    emit(cfg.out, ct::approximants_csv(rows, cfg.precision_bits));
    if (!cfg.gnuplot.empty()) emit(cfg.gnuplot, ct::error_data(rows, cfg.precision_bits));
    return kExitOk;
}

int cmd_quad(const RunConfig& cfg) {
    const auto params = parse_params(cfg);
    const ct::IntegrandFamily families[] = {ct::make_left_family(params), ct::make_right_family(params)};
    const char* const names[] = {"left", "right"};
    std::ostringstream os;
    os << "n,side,exact,quadrature,abs_diff,error_estimate,status\n";
    for (unsigned n = 0; n <= cfg.n_max; ++n) {
        for (int s = 0; s < 2; ++s) {
            const auto f = families[s].at(n);
            const ct::BigFloat exact = ct::integrate_01(f).to_float(cfg.precision_bits);
            const double exact_d = exact.to_double();
            double value = 0.0;
            double estimate = 0.0;
            std::string status = "ok";
            try {
                const auto r = ct::quad_01(f, cfg.tol);
                value = r.value;
                estimate = r.error_estimate;
            } catch (const ct::ToleranceNotMet& e) {
                value = e.best_value();
                estimate = e.error_estimate();
                status = "tolerance-not-met";
            }
            const double diff = std::abs(value - exact_d);
            os << n << ',' << names[s] << ',' << exact.to_scientific(17) << ',' << fmt_double(value) << ','
               << fmt_short(diff) << ',' << fmt_short(estimate) << ',' << status << '\n';
        }
    }
    emit(cfg.out, os.str());
    return kExitOk;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--a", cfg.a_text, "parameter a (p/q or exact decimal)")->required();
    sub->add_option("--b", cfg.b_text, "parameter b, 0 < b < a")->required();
    sub->add_option("--n-max", cfg.n_max, "largest n")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_option("--precision-bits", cfg.precision_bits, "binary precision of printed reals (>= 64)")
        ->capture_default_str()
        ->check(CLI::Range(64L, 1L << 20));
    sub->add_option("--out", cfg.out, "output file (default: standard output)");
}

void add_search_bounds(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--max-order", cfg.max_order, "largest recurrence order tried")
        ->capture_default_str()
        ->check(CLI::Range(1, 8));
    sub->add_option("--max-cert-degree", cfg.max_cert_degree, "largest certificate numerator degree tried")
        ->capture_default_str()
        ->check(CLI::Range(1, 16));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact creative-telescoping prover for a parametric integral identity"};
    app.set_version_flag("--version", std::string(ct::kToolVersion));
    app.require_subcommand(1);
    RunConfig cfg;

    auto* prove = app.add_subcommand("prove", "prove the identity for one (a, b) and emit a proof object");
    add_common(prove, cfg);
    add_search_bounds(prove, cfg);
    prove->add_option("--mode", cfg.mode, "verify: closed-form certificates; discover: search for them")
        ->capture_default_str()
        ->check(CLI::IsMember({"verify", "discover"}));
    prove->add_option("--seed", cfg.seed, "seed for the extra spot-check values of n")->capture_default_str();

    auto* derive = app.add_subcommand("derive", "discover recurrences and certificates for both integrands");
    add_common(derive, cfg);
    add_search_bounds(derive, cfg);

    auto* approx = app.add_subcommand("approx", "rational approximations to the target logarithm (CSV)");
    add_common(approx, cfg);
    approx->add_option("--gnuplot", cfg.gnuplot, "also write 'n abs_error' data to this file");

    auto* quad = app.add_subcommand("quad", "exact values against adaptive Gauss-Kronrod quadrature (CSV)");
    add_common(quad, cfg);
    quad->add_option("--tol", cfg.tol, "absolute quadrature tolerance (>= 1e-14)")
        ->capture_default_str()
        ->check(CLI::Range(1e-14, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*prove) return cmd_prove(cfg);
        if (*derive) return cmd_derive(cfg);
        if (*approx) return cmd_approx(cfg);
        return cmd_quad(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
