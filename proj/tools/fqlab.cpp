// fqlab: exhaustive checks of the A_k / B_k permutation families and monomial graph girth.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fqlab/cli/commands.hpp"
#include "fqlab/cli/report.hpp"
#include "fqlab/pp.hpp"

namespace {

struct OutputOptions {
    std::string json_path;
    std::string csv_path;
};

void add_common(CLI::App& sub, OutputOptions& out, fqlab::cli::RunContext& ctx) {
    sub.add_option("--json", out.json_path, "Write the JSON report to PATH");
    sub.add_option("--csv", out.csv_path, "Write flat CSV rows to PATH");
    sub.add_option("--jobs", ctx.jobs, "Worker threads (0 = all cores)");
    sub.add_option("--cache", ctx.cache_dir, "Result cache directory");
    sub.add_option("--girth-cap", ctx.girth_cap, "Largest q for girth computations");
    sub.add_option("--field-cap", ctx.field_cap, "Largest field order");
}

int emit(const fqlab::cli::RunReport& report, const OutputOptions& out) {
    const auto j = report.to_json();
    if (!out.json_path.empty()) {
        std::ofstream file(out.json_path);
        file << j.dump(2) << '\n';
    }
    if (!out.csv_path.empty()) {
        std::ofstream file(out.csv_path);
        fqlab::cli::write_csv(report, file);
    }
    if (out.json_path.empty() && out.csv_path.empty()) std::cout << j.dump(2) << '\n';

    for (const auto& v : report.verdicts) {
        std::clog << (v.value("pass", false) ? "[pass] " : "[FAIL] ") << v.dump() << '\n';
    }
    std::clog << report.command << ": " << (report.overall ? "pass" : "fail") << " ("
              << report.elapsed_ms << " ms)\n";
    return report.overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-field permutation polynomial and monomial graph checks"};
    app.set_version_flag("--version", std::string(fqlab::cli::kToolVersion));
    app.require_subcommand(1);

    auto ctx = fqlab::cli::RunContext::from_environment();
    ctx.verbose = true;
    OutputOptions out;

    fqlab::cli::SweepArgs sweep_args;
    std::string which = "A";
    auto* sweep = app.add_subcommand("sweep", "Direct PP sweep over k = 1..q-1 for each q");
    sweep->add_option("--q", sweep_args.qs, "Field orders")->delimiter(',')->required();
    sweep->add_option("--which", which, "A, B or two")->check(CLI::IsMember({"A", "B", "two"}));
    sweep->add_flag("--with-criterion,!--no-criterion", sweep_args.with_criterion,
                    "Also evaluate the binomial-sum criterion (default on)");
    sweep->add_flag("--with-girth", sweep_args.with_girth, "Also test girth >= 8 per k");
    add_common(*sweep, out, ctx);

    fqlab::cli::IdentityArgs identity_args;
    auto* identities = app.add_subcommand("identities", "Digit-pattern identity grids");
    identities->add_option("--q", identity_args.qs, "Field orders with e >= 3")->delimiter(',');
    identities->add_option("--p", identity_args.ps, "Odd primes for the closing-sum grid")
        ->delimiter(',');
    add_common(*identities, out, ctx);

    fqlab::cli::GirthArgs girth_args;
    std::uint64_t girth_k = 0;
    std::vector<std::uint64_t> exponents;
    auto* girth = app.add_subcommand("girth", "Exact girth of a monomial graph");
    girth->add_option("--q", girth_args.q, "Field order")->required();
    auto* k_opt = girth->add_option("--k", girth_k, "Use G_q(XY, X^k Y^2k)");
    girth->add_option("--exponents", exponents, "f_x,f_y,g_x,g_y for G_q(X^a Y^b, X^c Y^d)")
        ->delimiter(',')
        ->expected(4)
        ->excludes(k_opt);
    add_common(*girth, out, ctx);

    std::uint64_t q_max = 27;
    auto* verify = app.add_subcommand("verify-all", "Every suite for all odd q <= q-max");
    verify->add_option("--q-max", q_max, "Largest field order");
    add_common(*verify, out, ctx);

    std::vector<std::uint64_t> info_qs;
    auto* info = app.add_subcommand("field-info", "Modulus and generator for each q");
    info->add_option("--q", info_qs, "Field orders")->delimiter(',')->required();
    add_common(*info, out, ctx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sweep) {
            sweep_args.which = *fqlab::parse_family(which);
            return emit(fqlab::cli::cmd_sweep(sweep_args, ctx), out);
        }
        if (*identities) {
            if (identity_args.qs.empty() && identity_args.ps.empty()) {
                std::cerr << "identities: give --q and/or --p\n";
                return 2;
            }
            return emit(fqlab::cli::cmd_identities(identity_args, ctx), out);
        }
        if (*girth) {
            if (k_opt->count() > 0) girth_args.k = girth_k;
            if (exponents.size() == 4) {
                girth_args.exponents = {exponents[0], exponents[1], exponents[2], exponents[3]};
            }
            return emit(fqlab::cli::cmd_girth(girth_args, ctx), out);
        }
        if (*verify) return emit(fqlab::cli::cmd_verify_all(q_max, ctx), out);
        if (*info) return emit(fqlab::cli::cmd_field_info(info_qs, ctx), out);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 2;
}
