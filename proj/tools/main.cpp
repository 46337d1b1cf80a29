#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "commands.hpp"
#include "opburgers/errors.hpp"

using namespace opburgers::cli;

namespace {

void add_catalog_options(CLI::App* cmd, opburgers::CatalogOptions& o) {
    cmd->add_option("--beta", o.beta, "fractional order for fractional scenarios")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--C", o.C, "eigenvalue / bracket target for Mittag-Leffler coefficients");
    cmd->add_option("--clock", o.clock, "time clock f")->check(CLI::IsMember({"t", "log1p"}));
    cmd->add_option("--c", o.c, "Riccati constant");
    cmd->add_option("--t0", o.t0, "time shift t0");
}

CLI::Validator grid_validator() {
    return CLI::Validator(
        [](std::string& text) -> std::string {
            try {
                parse_grid(text);
            } catch (const std::exception&) {
                return "grid must look like 8x8 (axes then time)";
            }
            return {};
        },
        "NxM...");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solutions of operator Burgers equations: catalog, verification, transforms"};
    app.require_subcommand(1);

    std::string format = "text";
    auto* list = app.add_subcommand("list", "list the scenario catalog");
    list->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string describe_id;
    std::string describe_format = "text";
    opburgers::CatalogOptions describe_options;
    auto* describe = app.add_subcommand("describe", "show one scenario");
    describe->add_option("id", describe_id)->required();
    describe->add_option("--format", describe_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    add_catalog_options(describe, describe_options);

    RunConfig run;
    std::string grid_text;
    auto* verify = app.add_subcommand("verify", "run structural checks and residual sweeps");
    auto* sweep = app.add_subcommand("sweep", "residual convergence sweep for one candidate");
    for (auto* cmd : {verify, sweep}) {
        cmd->add_option("id", run.scenario)->required();
        cmd->add_option("--grid", grid_text, "node counts, axes then time, e.g. 8x8")->check(grid_validator());
        cmd->add_option("--perturb", run.perturb, "add this multiple of sum x_d^2 to the candidates");
        cmd->add_option("--format", run.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", run.out, "write the report here instead of stdout");
        cmd->add_option("--candidate", run.candidate, "restrict to one candidate solution");
        cmd->add_option("--levels", run.levels, "refinement levels")->check(CLI::Range(3, 8));
        add_catalog_options(cmd, run.catalog);
    }
    double tol = 0.0;
    auto* tol_opt = verify->add_option("--tol", tol, "tolerance for the finest residual level");
    verify->add_option("--seed", run.seed, "seed for sample-point selection");
    verify->add_option("--dump-points", run.dump_points, "per-point residual terms as CSV");

    TransformConfig tcfg;
    std::string transform_grid;
    int n = 0;
    auto* transform = app.add_subcommand("transform", "tabulate the exponential transform");
    transform->add_option("id", tcfg.scenario)->required();
    transform->add_option("direction", tcfg.direction, "forward or backward")->required();
    auto* n_opt = transform->add_option("--n", n, "heat polynomial degree for forward input");
    transform->add_option("--grid", transform_grid, "NxM samples (space x time)")->check(grid_validator());
    transform->add_option("--candidate", tcfg.candidate, "candidate solution");
    transform->add_option("--out", tcfg.out, "write CSV here instead of stdout");
    add_catalog_options(transform, tcfg.catalog);

    SpecialConfig scfg;
    auto* special = app.add_subcommand("special", "evaluate a special function");
    special->set_help_flag("--help", "print this help message and exit");  // -h would clash with --h
    special->add_option("function", scfg.function, "ml, hermite or kernel")
        ->required()
        ->check(CLI::IsMember({"ml", "hermite", "kernel"}));
    special->add_option("--beta", scfg.beta, "Mittag-Leffler order");
    special->add_option("--z", scfg.z, "Mittag-Leffler argument");
    special->add_option("--n", scfg.n, "Hermite degree");
    special->add_option("--f", scfg.f, "Hermite first argument");
    special->add_option("--h", scfg.h, "Hermite second argument");
    special->add_option("--eta", scfg.eta, "kernel distance");
    special->add_option("--t", scfg.t, "kernel time");
    special->add_option("--t0", scfg.t0, "time shift for the derived solution");
    special->add_option("--count", scfg.count, "tabulate the kernel at this many eta in [0.5, 2.5]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*list) return cmd_list(format, std::cout);
        if (*describe) return cmd_describe(describe_id, describe_options, describe_format, std::cout);
        if (*verify || *sweep) {
            if (!grid_text.empty()) run.grid = parse_grid(grid_text);
            if (*tol_opt) run.tol = tol;
            return *verify ? cmd_verify(run, std::cout, std::cerr) : cmd_sweep(run, std::cout, std::cerr);
        }
        if (*transform) {
            if (!transform_grid.empty()) tcfg.grid = parse_grid(transform_grid);
            if (*n_opt) tcfg.n = n;
            return cmd_transform(tcfg, std::cout, std::cerr);
        }
        if (*special) return cmd_special(scfg, std::cout, std::cerr);
    } catch (const opburgers::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const opburgers::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
