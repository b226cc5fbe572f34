#include "workbench/cli/run.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "commands.hpp"
#include "workbench/cli/suites.hpp"
#include "workbench/liefields.hpp"

namespace workbench::cli {

namespace {

void add_grid(CLI::App* c, GridOpts& g) {
    c->add_option("--alpha", g.alpha, "weight exponent of (1-|z|^2)^alpha")->capture_default_str();
    c->add_option("--n-rad", g.n_rad, "radial Gauss-Legendre nodes")->capture_default_str();
    c->add_option("--n-ang", g.n_ang, "angular nodes (power of two)")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical workbench for function spaces, group algebras, vector fields and generalized functions",
                 "workbench"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "seed for random sweeps")->capture_default_str();
    app.add_option("--out", g.out, "write the result to this file instead of stdout");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::function<Output()> action;
    auto bind = [&](CLI::App* c, std::function<Output()> fn) { c->callback([&action, fn] { action = fn; }); };

    // toeplitz
    ToeplitzOpts toe;
    auto* c_toe = app.add_subcommand("toeplitz", "Bergman Toeplitz matrix of a symbol");
    c_toe->add_option("--symbol", toe.symbol, "expression in z and conj(z)")->required();
    c_toe->add_option("--cutoff", toe.cutoff, "truncation degree N")->capture_default_str();
    add_grid(c_toe, toe.grid);
    bind(c_toe, [&] { return cmd_toeplitz(g, toe); });

    // bergman
    auto* c_berg = app.add_subcommand("bergman", "Bergman space operations");
    c_berg->require_subcommand(1);
    BergmanNormOpts bn;
    auto* c_bn = c_berg->add_subcommand("norm", "A^p norm of a sampled function");
    c_bn->add_option("--f", bn.f, "expression")->required();
    c_bn->add_option("--p", bn.p)->capture_default_str();
    c_bn->add_flag("--strict-paper", bn.strict_paper, "also report the literal norm reading");
    add_grid(c_bn, bn.grid);
    bind(c_bn, [&] { return cmd_bergman_norm(g, bn); });
    BergmanKernelOpts bk;
    auto* c_bk = c_berg->add_subcommand("kernel", "K(z, u)");
    c_bk->add_option("--z", bk.z)->required();
    c_bk->add_option("--u", bk.u)->required();
    bind(c_bk, [&] { return cmd_bergman_kernel(g, bk); });
    ToeplitzOpts bp;
    auto* c_bp = c_berg->add_subcommand("project", "Bergman projection onto polynomials of degree <= cutoff");
    c_bp->add_option("--symbol", bp.symbol)->required();
    c_bp->add_option("--cutoff", bp.cutoff)->capture_default_str();
    add_grid(c_bp, bp.grid);
    bind(c_bp, [&] { return cmd_bergman_project(g, bp); });
    BergmanConvOpts bc;
    auto* c_bc = c_berg->add_subcommand("convolution", "check ||f*g|| <= ||f|| ||g||");
    c_bc->add_option("--f", bc.f)->required();
    c_bc->add_option("--g", bc.g)->required();
    c_bc->add_option("--p", bc.p)->capture_default_str();
    c_bc->add_flag("--strict-paper", bc.strict_paper, "also require the literal norm reading");
    add_grid(c_bc, bc.grid);
    bind(c_bc, [&] { return cmd_bergman_convolution(g, bc); });

    // bloch
    BlochOpts bl;
    auto* c_bl = app.add_subcommand("bloch", "alpha-Bloch norm of a polynomial");
    c_bl->add_option("--alpha", bl.alpha)->capture_default_str();
    c_bl->add_option("--poly", bl.poly, "comma-separated coefficients, constant first")->required();
    c_bl->add_option("--n-rad", bl.n_rad)->capture_default_str();
    c_bl->add_option("--n-ang", bl.n_ang)->capture_default_str();
    bind(c_bl, [&] { return cmd_bloch(g, bl); });

    // hardy
    auto* c_hardy = app.add_subcommand("hardy", "Hardy space operations");
    c_hardy->require_subcommand(1);
    HardyNormOpts hn;
    auto* c_hn = c_hardy->add_subcommand("norm", "H^p norm of a polynomial");
    c_hn->add_option("--poly", hn.poly)->required();
    c_hn->add_option("--p", hn.p)->capture_default_str();
    c_hn->add_option("--radii", hn.radii, "comma-separated radius ladder");
    c_hn->add_option("--m", hn.m, "angles per circle")->capture_default_str();
    bind(c_hn, [&] { return cmd_hardy_norm(g, hn); });
    HardyKernelOpts hk;
    auto* c_hk = c_hardy->add_subcommand("kernel", "Szego or Poisson kernel");
    c_hk->add_option("--z", hk.z)->required();
    c_hk->add_option("--xi", hk.xi)->required();
    c_hk->add_option("--kind", hk.kind)->check(CLI::IsMember({"szego", "poisson"}))->capture_default_str();
    bind(c_hk, [&] { return cmd_hardy_kernel(g, hk); });
    HardyToeplitzOpts ht;
    auto* c_ht = c_hardy->add_subcommand("toeplitz", "Toeplitz matrix of a boundary symbol");
    c_ht->add_option("--symbol", ht.symbol, "expression in xi on the unit circle")->required();
    c_ht->add_option("--n", ht.n, "truncation N")->capture_default_str();
    c_ht->add_option("--m", ht.m, "boundary samples")->capture_default_str();
    bind(c_ht, [&] { return cmd_hardy_toeplitz(g, ht); });
    DiscOpts hd;
    auto* c_hd = c_hardy->add_subcommand("disc-membership", "negative Fourier coefficients vanish?");
    c_hd->add_option("--f", hd.f)->required();
    c_hd->add_option("--m", hd.m)->capture_default_str();
    c_hd->add_option("--tol", hd.tol)->capture_default_str();
    bind(c_hd, [&] { return cmd_hardy_disc(g, hd); });

    // gelfand
    auto* c_gel = app.add_subcommand("gelfand", "finite Gelfand pairs");
    c_gel->require_subcommand(1);
    GelfandOpts go;
    for (const char* name : {"check", "spherical"}) {
        auto* c = c_gel->add_subcommand(name, std::string(name) == "check" ? "is (G, K) a Gelfand pair?"
                                                                            : "spherical functions of (G, K)");
        c->add_option("--group", go.group, "table file or builtin name (zN, dN, s3, s4, q8)")->required();
        c->add_option("--subgroup", go.subgroup, "comma-separated element indices")->required();
        if (std::string(name) == "check") bind(c, [&] { return cmd_gelfand_check(g, go); });
        else bind(c, [&] { return cmd_gelfand_spherical(g, go); });
    }

    // lie
    auto* c_lie = app.add_subcommand("lie", "polynomial vector fields");
    c_lie->require_subcommand(1);
    LieOpts lo;
    auto* c_lb = c_lie->add_subcommand("bracket", "[X, Y] of the first two fields");
    auto* c_lj = c_lie->add_subcommand("jacobi", "Jacobi sum of the first three fields");
    auto* c_lf = c_lie->add_subcommand("flows", "flow commutator against [X, Y]");
    for (auto* c : {c_lb, c_lj, c_lf}) c->add_option("--fields", lo.fields, "JSON fields file")->required();
    c_lf->add_option("--point", lo.point, "comma-separated base point (default origin)");
    c_lf->add_option("--steps", lo.steps)->capture_default_str();
    bind(c_lb, [&] { return cmd_lie_bracket(g, lo); });
    bind(c_lj, [&] { return cmd_lie_jacobi(g, lo); });
    bind(c_lf, [&] { return cmd_lie_flows(g, lo); });

    // colombeau
    auto* c_col = app.add_subcommand("colombeau", "mollifier regularization rates");
    c_col->require_subcommand(1);
    RateOpts ro;
    auto* c_rate = c_col->add_subcommand("rate", "epsilon ladder with a fitted log-log slope");
    c_rate->add_option("--f", ro.f, "catalog name: const, zero, poly:k, abs, heaviside, exp, sin, indicator, spike:w")
        ->required();
    c_rate->add_option("--q", ro.q, "mollifier order")->capture_default_str();
    c_rate->add_option("--alpha", ro.alpha, "derivative order; selects the seminorm ladder");
    c_rate->add_option("--kind", ro.kind)->check(CLI::IsMember({"exact", "even"}))->capture_default_str();
    c_rate->add_option("--quantity", ro.quantity)
        ->check(CLI::IsMember({"auto", "defect", "seminorm"}))
        ->capture_default_str();
    c_rate->add_option("--count", ro.count, "ladder length")->capture_default_str();
    bind(c_rate, [&] { return cmd_colombeau_rate(g, ro); });

    // suite
    std::string suite_name;
    std::string out_dir = ".";
    auto* c_suite = app.add_subcommand("suite", "run a property suite");
    c_suite->add_option("name", suite_name, "bergman, bloch, hardy, gelfand, lie, colombeau or all")->required();
    c_suite->add_option("--out-dir", out_dir, "directory for the JSON and CSV reports")->capture_default_str();
    c_suite->callback([&] {
        action = [&]() -> Output {
            std::ostringstream log;
            const auto reports = run_suites(suite_name, g.seed, out_dir, log);
            const bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
            return {log.str(), ok ? 0 : 1};
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!action) throw std::invalid_argument("no command given");
        Output o = action();
        if (!g.out.empty() && suite_name.empty()) {
            std::ofstream f(g.out, std::ios::binary);
            if (!f) throw std::invalid_argument("cannot write '" + g.out + "'");
            f << o.text;
        } else {
            out << o.text;
        }
        return o.code;
    } catch (const liefields::DivergenceError& e) {
        err << "error: numerical divergence: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace workbench::cli
