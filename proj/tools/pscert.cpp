// Command-line surface for the certificate pipeline:
//   certify    polynomial + region -> certificate file
//   verify     certificate (+ optional polynomial/region) -> report
//   opconst    certificate -> review / commutator constants
//   harness    trial spec (JSON) -> TrialReport table
//   pseudospec query (JSON) -> resolvent-bound reports + containment scan
//
// Exit codes: 0 success, 1 verification / trial failure, 2 parse error,
// 3 budget exceeded, 4 precondition failure.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pscert/bounds.hpp"
#include "pscert/certgen.hpp"
#include "pscert/certificate.hpp"
#include "pscert/certverify.hpp"
#include "pscert/errors.hpp"
#include "pscert/harness.hpp"
#include "pscert/herm.hpp"
#include "pscert/region.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pscert::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw pscert::ParseError("cannot open output file: " + out_path);
    out << text;
}

pscert::Region region_from_holes_json(const nlohmann::ordered_json& j) {
    std::string text;
    for (const auto& line : j) text += line.get<std::string>() + "\n";
    return pscert::normalize_constraints(pscert::build_region(pscert::parse_holes(text)));
}

struct CertifyArgs {
    std::string poly_path, region_path, out_path;
    pscert::GenConfig cfg;
    std::string gap;
};

int run_certify(const CertifyArgs& a) {
    pscert::BivarPoly p = pscert::parse_bivar(read_file(a.poly_path));
    pscert::Region region =
        pscert::normalize_constraints(pscert::build_region(pscert::parse_holes(read_file(a.region_path))));
    if (!a.gap.empty()) {
        // Optional positivity pre-check at a caller-chosen certified gap.
        pscert::Rational gap = pscert::parse_rational(a.gap);
        if (gap <= 0) throw pscert::ParseError("--gap must be positive");
        pscert::CertifiedBound b = pscert::certified_min(p, &region, gap, a.cfg.eval_cap);
        if (b.value <= 0)
            throw pscert::NonpositiveLowerBound(
                "certified lower bound at the requested gap is not positive");
    }
    pscert::Certificate cert = pscert::generate_certificate(p, region, a.cfg);
    write_output(a.out_path, pscert::to_string_certificate(cert));
    std::cerr << "certificate: mode=" << cert.params.mode << " c=" << cert.params.c.get_str()
              << " k=" << cert.params.k << " N=" << cert.params.n
              << " terms=" << cert.terms.size() << "\n";
    return 0;
}

int run_verify(const std::string& cert_path, const std::string& poly_path,
               const std::string& region_path, const std::string& out_path) {
    pscert::Certificate cert = pscert::parse_certificate(read_file(cert_path));
    pscert::VerificationReport rep;
    if (!poly_path.empty() && !region_path.empty()) {
        pscert::Region region = pscert::normalize_constraints(
            pscert::build_region(pscert::parse_holes(read_file(region_path))));
        rep = pscert::verify_certificate(cert, pscert::parse_bivar(read_file(poly_path)), region);
    } else if (!poly_path.empty()) {
        rep = pscert::verify_certificate(cert, pscert::parse_bivar(read_file(poly_path)));
    } else {
        rep = pscert::verify_certificate(cert);
    }
    std::ostringstream out;
    out << "identity_ok: " << (rep.identity_ok ? "yes" : "no") << "\n"
        << "weights_ok: " << (rep.weights_ok ? "yes" : "no") << "\n"
        << "constraint_match: " << (rep.constraint_match ? "yes" : "no") << "\n"
        << "term_count: " << rep.term_count << "\n"
        << "max_square_degree: " << rep.max_square_degree << "\n";
    if (!rep.identity_ok) out << "residual: " << pscert::to_string(rep.residual) << "\n";
    write_output(out_path, out.str());
    return rep.ok() ? 0 : 1;
}

int run_opconst(const std::string& cert_path, const std::string& out_path) {
    pscert::Certificate cert = pscert::parse_certificate(read_file(cert_path));
    pscert::HermPoly p = pscert::real_to_herm(cert.target);
    pscert::Rational review = pscert::review_constant(cert);
    pscert::Rational comm = pscert::commutator_constant(p.conj(), p);
    std::ostringstream out;
    out << "review_constant: " << review.get_str() << " ~= " << pscert::to_double(review) << "\n"
        << "commutator_constant(conj(p), p): " << comm.get_str() << " ~= "
        << pscert::to_double(comm) << "\n";
    write_output(out_path, out.str());
    return 0;
}

pscert::harness::AlmostNormalSpec matrix_spec(const nlohmann::ordered_json& j,
                                              const pscert::Region* region, std::uint64_t seed) {
    pscert::harness::AlmostNormalSpec spec;
    spec.n = j.value("n", 50);
    spec.kind = j.value("kind", std::string("normal-plus-upper-triangular"));
    spec.delta = j.value("delta", 1e-3);
    spec.seed = seed;
    spec.region = region;
    return spec;
}

std::vector<std::uint64_t> seed_list(const nlohmann::ordered_json& j, long seed_override) {
    if (seed_override >= 0) return {static_cast<std::uint64_t>(seed_override)};
    std::vector<std::uint64_t> seeds;
    if (j.contains("seeds"))
        for (const auto& s : j.at("seeds")) seeds.push_back(s.get<std::uint64_t>());
    if (seeds.empty()) seeds.push_back(0);
    return seeds;
}

int run_harness(const std::string& spec_path, const std::string& out_path, long seed_override,
                const pscert::GenConfig& cfg) {
    namespace hn = pscert::harness;
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(read_file(spec_path));
    } catch (const nlohmann::json::exception& e) {
        throw pscert::ParseError(std::string("harness spec is not valid JSON: ") + e.what());
    }
    pscert::HermPoly p = pscert::parse_herm(j.at("p").get<std::string>());
    pscert::Region region = region_from_holes_json(j.value("holes", nlohmann::ordered_json::array()));
    pscert::Rational eps = pscert::parse_rational(j.value("eps", std::string("1/10")));
    std::vector<std::string> checks;
    if (j.contains("checks"))
        for (const auto& c : j.at("checks")) checks.push_back(c.get<std::string>());
    else
        checks = {"norm", "review", "mult"};

    std::optional<hn::NormBoundCert> nb;
    auto need_cert = [&]() -> const hn::NormBoundCert& {
        if (!nb) nb = hn::make_norm_bound_cert(p, region, eps, cfg);
        return *nb;
    };
    std::optional<pscert::Rational> review_c;  // hoisted across seeds
    auto need_review = [&]() -> const pscert::Rational& {
        if (!review_c) review_c = pscert::review_constant(need_cert().cert);
        return *review_c;
    };
    std::vector<hn::TrialReport> rows;
    for (std::uint64_t seed : seed_list(j.value("matrix", nlohmann::ordered_json::object()),
                                        seed_override)) {
        hn::Mat a = hn::gen_almost_normal(
            matrix_spec(j.value("matrix", nlohmann::ordered_json::object()), &region, seed));
        std::string label = "seed " + std::to_string(seed);
        for (const std::string& check : checks) {
            if (check == "norm") {
                rows.push_back(hn::check_norm_bound(p, a, region, need_cert(), label));
            } else if (check == "review") {
                rows.push_back(hn::check_review_bound(need_cert().cert, need_review(), a, label));
            } else if (check == "mult") {
                rows.push_back(hn::appr_mult_check(p, p, a, label));
            } else if (check == "structure") {
                for (hn::TrialReport& r : hn::structure_defects(p, a, region, eps, cfg))
                    rows.push_back(std::move(r));
            } else {
                throw pscert::ParseError("unknown harness check: " + check);
            }
        }
    }
    bool all_pass = true;
    for (const hn::TrialReport& r : rows) {
        std::cout << hn::to_string(r) << "\n";
        all_pass = all_pass && r.pass;
    }
    if (!out_path.empty()) write_output(out_path, hn::trial_csv(rows));
    return all_pass ? 0 : 1;
}

int run_pseudospec(const std::string& query_path, const std::string& out_path, long seed_override,
                   const pscert::GenConfig& cfg) {
    namespace hn = pscert::harness;
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(read_file(query_path));
    } catch (const nlohmann::json::exception& e) {
        throw pscert::ParseError(std::string("pseudospectrum query is not valid JSON: ") + e.what());
    }
    pscert::HermPoly p = pscert::parse_herm(j.at("p").get<std::string>());
    pscert::Region region = region_from_holes_json(j.value("holes", nlohmann::ordered_json::array()));
    pscert::Rational kappa = pscert::parse_rational(j.at("kappa").get<std::string>());
    pscert::Rational gamma = pscert::parse_rational(j.value("gamma", std::string("1/100")));
    auto mj = j.value("matrix", nlohmann::ordered_json::object());
    std::vector<std::uint64_t> seeds = seed_list(mj, seed_override);
    hn::Mat a = hn::gen_almost_normal(matrix_spec(mj, &region, seeds.front()));

    std::vector<hn::TrialReport> rows;
    double pnorm = hn::operator_norm(hn::apply_poly(p, a));
    double kap = pscert::to_double(kappa);
    for (const auto& g : j.value("grid", nlohmann::ordered_json::array())) {
        pscert::Rational re = pscert::parse_rational(g.at(0).get<std::string>());
        pscert::Rational im = pscert::parse_rational(g.at(1).get<std::string>());
        std::string label =
            "mu = (" + re.get_str() + ", " + im.get_str() + ")";
        hn::Cpx mu(pscert::to_double(re), pscert::to_double(im));
        if (std::abs(mu) >= pnorm + kap) {
            rows.push_back(hn::pseudospec_point_obvious(p, a, mu, kap, label + " obvious"));
        } else {
            rows.push_back(hn::pseudospec_point_certified(p, a, region, pscert::GaussRat(re, im),
                                                          kappa, gamma, cfg, label + " certified"));
        }
    }
    bool all_pass = true;
    for (const hn::TrialReport& r : rows) {
        std::cout << hn::to_string(r) << "\n";
        all_pass = all_pass && r.pass;
    }
    if (j.contains("scan")) {
        const auto& s = j.at("scan");
        double kp = s.value("kappa_prime", kap / 2);
        long grid_n = s.value("grid_n", 200);
        hn::ContainmentReport cr = hn::pseudospec_containment(p, a, region, kap, kp, grid_n);
        std::cout << "containment: scanned=" << cr.scanned
                  << " inside_pseudospec=" << cr.inside_pseudospec
                  << " violations=" << cr.violations << " kappa_prime=" << cr.kappa_prime
                  << " " << (cr.pass ? "PASS" : "FAIL") << "\n";
        all_pass = all_pass && cr.pass;
    }
    if (!out_path.empty()) write_output(out_path, hn::trial_csv(rows));
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact positivity certificates on the disk with holes, and a matrix harness"};
    app.require_subcommand(1);

    CertifyArgs ca;
    long seed_override = -1;
    std::string cert_path, poly_path, region_path, out_path, spec_path;

    auto add_budgets = [&](CLI::App* cmd, pscert::GenConfig& cfg) {
        cmd->add_option("--mode", cfg.mode, "generation mode: search or paper")
            ->check(CLI::IsMember({"search", "paper"}));
        cmd->add_option("--term-cap", cfg.term_budget, "raw term budget for substitution");
        cmd->add_option("--eval-cap", cfg.eval_cap, "grid evaluations per certified bound");
        cmd->add_option("--n-cap", cfg.n_cap, "largest admissible Polya exponent");
    };

    CLI::App* certify = app.add_subcommand("certify", "polynomial + region -> certificate");
    certify->add_option("polynomial", ca.poly_path, "polynomial file")->required();
    certify->add_option("region", ca.region_path, "region file (hole triples)")->required();
    add_budgets(certify, ca.cfg);
    certify->add_option("--gap", ca.gap, "positivity pre-check gap, num/den");
    certify->add_option("--out", ca.out_path, "certificate output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "certificate -> verification report");
    verify->add_option("certificate", cert_path, "certificate file")->required();
    verify->add_option("polynomial", poly_path, "target polynomial file (optional)");
    verify->add_option("region", region_path, "region file (optional)");
    verify->add_option("--out", out_path, "report output path (default stdout)");

    CLI::App* opconst = app.add_subcommand("opconst", "certificate -> operator constants");
    opconst->add_option("certificate", cert_path, "certificate file")->required();
    opconst->add_option("--out", out_path, "report output path (default stdout)");

    pscert::GenConfig hcfg;
    CLI::App* harness = app.add_subcommand("harness", "trial spec (JSON) -> TrialReport table");
    harness->add_option("spec", spec_path, "trial spec file")->required();
    add_budgets(harness, hcfg);
    harness->add_option("--seed", seed_override, "override the spec's seed list");
    harness->add_option("--out", out_path, "CSV output path");

    pscert::GenConfig pcfg;
    CLI::App* pseudospec = app.add_subcommand("pseudospec", "query (JSON) -> containment report");
    pseudospec->add_option("query", spec_path, "query file")->required();
    add_budgets(pseudospec, pcfg);
    pseudospec->add_option("--seed", seed_override, "override the query's seed list");
    pseudospec->add_option("--out", out_path, "CSV output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (certify->parsed()) return run_certify(ca);
        if (verify->parsed()) return run_verify(cert_path, poly_path, region_path, out_path);
        if (opconst->parsed()) return run_opconst(cert_path, out_path);
        if (harness->parsed()) return run_harness(spec_path, out_path, seed_override, hcfg);
        if (pseudospec->parsed()) return run_pseudospec(spec_path, out_path, seed_override, pcfg);
    } catch (const pscert::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const pscert::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const pscert::TermBudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const pscert::SearchExhausted& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "precondition failure: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
