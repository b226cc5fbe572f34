#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "workbench/bergman.hpp"
#include "workbench/bloch.hpp"
#include "workbench/cli/expression.hpp"
#include "workbench/colombeau.hpp"
#include "workbench/group_library.hpp"
#include "workbench/hardy.hpp"

namespace workbench::cli {

namespace {

using numcore::HoloPoly;

Json base_config(const std::string& command, const Globals& g) {
    Json c;
    c["command"] = command;
    c["seed"] = g.seed;
    return c;
}

void require_format(const Globals& g, const std::string& allowed) {
    if (!g.format.empty() && g.format != allowed)
        throw std::invalid_argument("--format " + g.format + " is not available here (" + allowed + " only)");
}

Output json_output(const Json& record, int code = 0) { return {dump(record), code}; }

Output record(const std::string& command, const Globals& g, const Json& params, const Json& value,
              const Json& tolerance = nullptr, const Json& holds = nullptr) {
    require_format(g, "json");
    Json config = base_config(command, g);
    config["format"] = "json";
    const int code = holds.is_boolean() && !holds.get<bool>() ? 1 : 0;
    return json_output(make_record(command, params, value, tolerance, holds, config), code);
}

Json grid_json(const GridOpts& o) { return {{"alpha", o.alpha}, {"n_rad", o.n_rad}, {"n_ang", o.n_ang}}; }

Json matrix_json(const Eigen::MatrixXcd& m) {
    Json rows = Json::array();
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(format_complex(m(j, k)));
        rows.push_back(row);
    }
    return rows;
}

// Matrices default to CSV; --format json wraps them in a record.
Output matrix_output(const std::string& command, const Globals& g, const Json& params, const Eigen::MatrixXcd& m) {
    if (g.format.empty() || g.format == "csv") {
        Json config = base_config(command, g);
        config["format"] = "csv";
        config["params"] = params;
        std::ostringstream s;
        write_matrix_csv(s, m, config);
        return {s.str(), 0};
    }
    Json config = base_config(command, g);
    config["format"] = "json";
    return json_output(make_record(command, params, matrix_json(m), nullptr, nullptr, config));
}

HoloPoly parse_poly(const std::string& coeffs) {
    const auto c = parse_complex_list(coeffs);
    if (c.empty()) throw std::invalid_argument("empty coefficient list");
    return HoloPoly(c);
}

numcore::DiscQuadrature make_grid(const GridOpts& o) { return numcore::build_disc_quadrature(o.alpha, o.n_rad, o.n_ang); }

std::vector<double> parse_point(const std::string& text, int dim) {
    if (text.empty()) return std::vector<double>(static_cast<std::size_t>(dim), 0.0);
    auto p = parse_real_list(text);
    if (static_cast<int>(p.size()) != dim)
        throw std::invalid_argument("--point needs " + std::to_string(dim) + " coordinates");
    return p;
}

std::vector<liefields::PolyVectorField> load_fields(const std::string& path, std::size_t needed) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fields file '" + path + "'");
    auto fields = read_fields(in);
    if (fields.size() < needed)
        throw std::invalid_argument("fields file must hold at least " + std::to_string(needed) + " fields");
    for (std::size_t i = 1; i < needed; ++i)
        if (fields[i].dim() != fields[0].dim()) throw std::invalid_argument("fields have different dimensions");
    return fields;
}

std::vector<int> parse_exponent(std::string key, int nvars) {
    std::erase_if(key, [](char c) { return c == '(' || c == ')' || c == '[' || c == ']' || c == ' '; });
    std::vector<int> e;
    if (!key.empty()) e = parse_int_list(key);
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("exponent '" + key + "' needs " + std::to_string(nvars) + " entries");
    for (int v : e)
        if (v < 0) throw std::invalid_argument("negative exponent in '" + key + "'");
    return e;
}

}  // namespace

// ------------------------------------------------------------ file formats

gelfand::FiniteGroup load_group(const std::string& file_or_name) {
    if (std::filesystem::is_regular_file(file_or_name)) {
        std::ifstream in(file_or_name);
        return gelfand::read_group_table(in);
    }
    return gelfand::builtin_group(file_or_name);
}

std::vector<liefields::PolyVectorField> read_fields(std::istream& in) {
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("fields file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("fields") || !doc["fields"].is_array())
        throw std::invalid_argument("fields file needs a \"fields\" array");
    std::vector<liefields::PolyVectorField> out;
    for (const auto& f : doc["fields"]) {
        if (!f.is_object() || !f.contains("components") || !f["components"].is_array())
            throw std::invalid_argument("each field needs a \"components\" array");
        const auto& comps = f["components"];
        const int dim = f.contains("dim") ? f["dim"].get<int>() : static_cast<int>(comps.size());
        if (dim < 1 || static_cast<int>(comps.size()) != dim)
            throw std::invalid_argument("field dim does not match its component count");
        std::vector<liefields::MPoly> parts;
        for (const auto& c : comps) {
            if (!c.is_object()) throw std::invalid_argument("a component must map exponent tuples to coefficients");
            liefields::MPoly p(dim);
            for (const auto& [key, value] : c.items()) {
                if (!value.is_number()) throw std::invalid_argument("coefficient of '" + key + "' is not a number");
                p.add_term(parse_exponent(key, dim), value.get<double>());
            }
            parts.push_back(std::move(p));
        }
        out.emplace_back(std::move(parts));
    }
    return out;
}

Json field_json(const liefields::PolyVectorField& x) {
    Json comps = Json::array();
    for (const auto& c : x.components()) {
        Json m = Json::object();
        for (const auto& [e, v] : c.terms()) {
            std::string key;
            for (std::size_t i = 0; i < e.size(); ++i) key += (i ? "," : "") + std::to_string(e[i]);
            m[key] = v;
        }
        comps.push_back(m);
    }
    return {{"dim", x.dim()}, {"components", comps}};
}

// ------------------------------------------------------------ bergman

Output cmd_toeplitz(const Globals& g, const ToeplitzOpts& o) {
    const auto q = make_grid(o.grid);
    const auto m = bergman::toeplitz_matrix(numcore::sample(q, parse_expression(o.symbol)), q, o.cutoff);
    return matrix_output("toeplitz", g, {{"symbol", o.symbol}, {"cutoff", o.cutoff}, {"grid", grid_json(o.grid)}}, m.entries());
}

Output cmd_bergman_norm(const Globals& g, const BergmanNormOpts& o) {
    const auto q = make_grid(o.grid);
    const auto f = numcore::sample(q, parse_expression(o.f));
    Json params{{"f", o.f}, {"p", o.p}, {"grid", grid_json(o.grid)}, {"strict_paper", o.strict_paper}};
    Json value{{"norm", bergman::bergman_norm(f, o.p, q)}};
    if (o.strict_paper) value["norm_literal"] = bergman::bergman_norm_literal(f, o.p, q);
    return record("bergman norm", g, params, value);
}

Output cmd_bergman_kernel(const Globals& g, const BergmanKernelOpts& o) {
    const cplx z = parse_complex(o.z), u = parse_complex(o.u);
    return record("bergman kernel", g, {{"z", o.z}, {"u", o.u}}, complex_json(bergman::bergman_kernel(z, u)));
}

Output cmd_bergman_project(const Globals& g, const ToeplitzOpts& o) {
    const auto q = make_grid(o.grid);
    const auto p = bergman::bergman_project(numcore::sample(q, parse_expression(o.symbol)), q, o.cutoff);
    return record("bergman project", g, {{"symbol", o.symbol}, {"cutoff", o.cutoff}, {"grid", grid_json(o.grid)}},
                  {{"coefficients", complex_list_json(p.coeffs())}});
}

Output cmd_bergman_convolution(const Globals& g, const BergmanConvOpts& o) {
    const auto q = make_grid(o.grid);
    const auto f = numcore::sample(q, parse_expression(o.f));
    const auto h = numcore::sample(q, parse_expression(o.g));
    const auto r = bergman::check_convolution_submultiplicative(f, h, o.p, q);
    Json params{{"f", o.f}, {"g", o.g}, {"p", o.p}, {"grid", grid_json(o.grid)}, {"strict_paper", o.strict_paper}};
    Json value{{"lhs", r.lhs}, {"rhs", r.rhs}};
    bool holds = r.holds;
    if (o.strict_paper) {
        value["lhs_literal"] = r.lhs_literal;
        value["rhs_literal"] = r.rhs_literal;
        value["holds_literal"] = r.holds_literal;
        holds = holds && r.holds_literal;
    }
    return record("bergman convolution", g, params, value, 1e-9, holds);
}

// ------------------------------------------------------------ bloch

Output cmd_bloch(const Globals& g, const BlochOpts& o) {
    const auto f = parse_poly(o.poly);
    const bloch::SupGrid grid{o.n_rad, o.n_ang};
    const auto r = bloch::bloch_seminorm(f, o.alpha, grid);
    return record("bloch", g, {{"alpha", o.alpha}, {"poly", o.poly}, {"grid", {{"n_rad", o.n_rad}, {"n_ang", o.n_ang}}}},
                  {{"norm", r.norm},
                   {"seminorm", r.seminorm},
                   {"argmax", format_complex(r.argmax)},
                   {"refinement_change", r.refinement_change}});
}

// ------------------------------------------------------------ hardy

Output cmd_hardy_norm(const Globals& g, const HardyNormOpts& o) {
    const auto f = parse_poly(o.poly);
    const auto radii = o.radii.empty() ? hardy::default_radius_ladder() : parse_real_list(o.radii);
    Json value{{"norm", hardy::hardy_norm(f, o.p, radii, o.m)}};
    if (o.p == 2.0) value["parseval"] = hardy::parseval_mean(f, radii.back());
    return record("hardy norm", g, {{"poly", o.poly}, {"p", o.p}, {"radii", radii}, {"m", o.m}}, value);
}

Output cmd_hardy_kernel(const Globals& g, const HardyKernelOpts& o) {
    const cplx z = parse_complex(o.z), xi = parse_complex(o.xi);
    Json value;
    if (o.kind == "szego") value = complex_json(hardy::szego_kernel(z, xi));
    else if (o.kind == "poisson") value = hardy::poisson_kernel(z, xi);
    else throw std::invalid_argument("--kind must be szego or poisson");
    return record("hardy kernel", g, {{"z", o.z}, {"xi", o.xi}, {"kind", o.kind}}, value);
}

Output cmd_hardy_toeplitz(const Globals& g, const HardyToeplitzOpts& o) {
    if (!numcore::is_power_of_two(static_cast<std::size_t>(std::max(o.m, 0))))
        throw std::invalid_argument("--m must be a power of two");
    if (o.m < 4 * o.n + 2) throw std::invalid_argument("--m must be at least 4n + 2");
    const auto coeffs = numcore::boundary_fourier(numcore::BoundaryGrid::sample(parse_expression(o.symbol), static_cast<std::size_t>(o.m)));
    const auto t = hardy::hardy_toeplitz(coeffs, o.n);
    return matrix_output("hardy toeplitz", g, {{"symbol", o.symbol}, {"n", o.n}, {"m", o.m}}, t.entries());
}

Output cmd_hardy_disc(const Globals& g, const DiscOpts& o) {
    const auto r = hardy::disc_algebra_report(numcore::BoundaryGrid::sample(parse_expression(o.f), static_cast<std::size_t>(o.m)), o.tol);
    Json value{{"member", r.member}, {"max_negative", r.max_negative}};
    value["witness"] = r.member ? Json() : Json(r.witness);
    return record("hardy disc-membership", g, {{"f", o.f}, {"m", o.m}}, value, o.tol, r.member);
}

// ------------------------------------------------------------ gelfand

Output cmd_gelfand_check(const Globals& g, const GelfandOpts& o) {
    const auto grp = load_group(o.group);
    const gelfand::SubgroupK k(grp, parse_int_list(o.subgroup));
    const auto r = gelfand::is_gelfand_pair(grp, k);
    Json value{{"gelfand", r.gelfand}, {"n_cosets", r.n_cosets}, {"max_commutator", r.max_commutator}};
    value["witness"] = r.gelfand ? Json() : Json::array({r.witness_i, r.witness_j});
    const auto basis = gelfand::double_cosets(grp, k);
    value["double_cosets"] = basis.cosets;
    return record("gelfand check", g, {{"group", o.group}, {"order", grp.order()}, {"subgroup", k.members()}}, value,
                  nullptr, r.gelfand);
}

Output cmd_gelfand_spherical(const Globals& g, const GelfandOpts& o) {
    const auto grp = load_group(o.group);
    const gelfand::SubgroupK k(grp, parse_int_list(o.subgroup));
    const auto phis = gelfand::spherical_functions(grp, k, g.seed);
    Json fns = Json::array();
    double defect = 0.0;
    for (const auto& phi : phis) {
        const double d = gelfand::multiplicativity_defect(phi, grp, k);
        defect = std::max(defect, d);
        fns.push_back({{"values", complex_list_json(phi)}, {"multiplicativity_defect", d}});
    }
    return record("gelfand spherical", g, {{"group", o.group}, {"order", grp.order()}, {"subgroup", k.members()}},
                  {{"count", phis.size()}, {"functions", fns}}, 1e-10, defect <= 1e-10);
}

// ------------------------------------------------------------ lie

Output cmd_lie_bracket(const Globals& g, const LieOpts& o) {
    const auto f = load_fields(o.fields, 2);
    const auto b = liefields::lie_bracket(f[0], f[1]);
    const auto l = liefields::check_lemma64(f[0], f[1]);
    const bool anti = (b + liefields::lie_bracket(f[1], f[0])).is_zero();
    Json value{{"bracket", field_json(b)},
               {"antisymmetric", anti},
               {"lemma64", {{"exact", l.exact}, {"max_diff", l.max_diff}}}};
    return record("lie bracket", g, {{"fields", o.fields}, {"x", field_json(f[0])}, {"y", field_json(f[1])}}, value, 0.0,
                  anti && l.exact);
}

Output cmd_lie_jacobi(const Globals& g, const LieOpts& o) {
    const auto f = load_fields(o.fields, 3);
    const auto j = liefields::jacobi_sum(f[0], f[1], f[2]);
    return record("lie jacobi", g, {{"fields", o.fields}}, {{"jacobi_sum", field_json(j)}}, 0.0, j.is_zero());
}

Output cmd_lie_flows(const Globals& g, const LieOpts& o) {
    const auto f = load_fields(o.fields, 2);
    const auto p = parse_point(o.point, f[0].dim());
    const auto r = liefields::flow_commutator_sweep(f[0], f[1], p, {0.1, 0.05, 0.025}, o.steps);
    Json value{{"ts", r.ts}, {"errors", r.errors}, {"slope", r.slope}, {"exact", r.exact},
               {"bracket_at_point", liefields::lie_bracket(f[0], f[1]).evaluate(p)}};
    return record("lie flows", g, {{"fields", o.fields}, {"point", p}, {"steps", o.steps}}, value, 0.9, r.passes);
}

// ------------------------------------------------------------ colombeau

Output cmd_colombeau_rate(const Globals& g, const RateOpts& o) {
    using namespace colombeau;
    const auto fn = catalog_function(o.f);
    Mollifier m;
    if (o.kind == "exact") m = build_exact_order_mollifier(o.q);
    else if (o.kind == "even") m = build_mollifier(o.q);
    else throw std::invalid_argument("--kind must be exact or even");
    std::string quantity = o.quantity;
    if (quantity == "auto") quantity = o.alpha >= 0 ? "seminorm" : "defect";
    const auto ladder = epsilon_ladder(o.count);
    EpsilonNet net;
    if (quantity == "defect") net = taylor_defect(fn.f, m, ladder);
    else if (quantity == "seminorm") net = seminorm_net(fn.f, m, ladder, std::max(o.alpha, 0));
    else throw std::invalid_argument("--quantity must be auto, defect or seminorm");
    const auto r = estimate_order(net);

    Json params{{"f", o.f}, {"q", o.q}, {"kind", o.kind}, {"quantity", quantity}, {"count", o.count}};
    params["alpha"] = quantity == "seminorm" ? Json(std::max(o.alpha, 0)) : Json();
    params["compact"] = {{"lo", net.k.lo}, {"hi", net.k.hi}, {"n", net.k.n}};
    Json fit{{"slope", r.slope}, {"class", to_string(r.classification)}, {"order", r.order}, {"points_used", r.points_used}};

    if (g.format.empty() || g.format == "csv") {
        Json config = base_config("colombeau rate", g);
        config["format"] = "csv";
        config["params"] = params;
        CsvTable t;
        t.columns = {"eps", quantity == "defect" ? "defect" : "seminorm"};
        for (std::size_t i = 0; i < net.epsilons.size(); ++i) t.rows.push_back({net.epsilons[i], net.values[i]});
        t.trailer.push_back("fit: " + fit.dump());
        std::ostringstream s;
        write_table_csv(s, t, config);
        return {s.str(), 0};
    }
    Json config = base_config("colombeau rate", g);
    config["format"] = "json";
    Json value{{"epsilons", net.epsilons}, {"values", net.values}, {"fit", fit}};
    return json_output(make_record("colombeau rate", params, value, nullptr, nullptr, config));
}

}  // namespace workbench::cli
