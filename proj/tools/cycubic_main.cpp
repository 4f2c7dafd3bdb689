// Command-line front end: reproducible runs of the cubic-condition,
// section-verification, mirror and Jacobian-ring pipelines over JSON fixture
// files. All reports are JSON with a schema_version field; exit status is
// 0 = pass, 1 = condition/pipeline failure, 2 = input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cycubic/serialize.hpp"

namespace {

using cycubic::Json;

constexpr const char* kSchemaVersion = "1";

struct CommonOpts {
    std::vector<std::string> inputs;
    std::string output;
    int order = -1; // truncation override
    int kmax = 6;
    bool witnesses = false;
};

void emit(const Json& report, const std::string& output) {
    if (output.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(output);
        if (!out) throw cycubic::StructuralError("cannot write output file: " + output);
        out << report.dump(2) << "\n";
    }
}

cycubic::PeriodMap load_period(const std::string& path, int order_override) {
    Json j = cycubic::load_json_file(path);
    cycubic::PeriodMap p = cycubic::period_map_from_json(j);
    if (order_override >= 0) {
        for (auto& row : p.entries)
            for (auto& e : row) e = e.truncated(order_override);
    }
    return p;
}

int run_check_cubic(const CommonOpts& opts) {
    if (opts.inputs.size() != 1)
        throw cycubic::StructuralError("check-cubic needs exactly one period-map file");
    Json file = cycubic::load_json_file(opts.inputs[0]);
    cycubic::PeriodMap p = load_period(opts.inputs[0], opts.order);
    cycubic::AffineFrame alpha = cycubic::frame_from_json(file, p);

    Json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "check-cubic";
    auto torus = cycubic::check_torus_lagrangian_condition(p, alpha);
    report["p_minus_constant"] = torus.minus_constant;
    if (!torus.minus_constant && opts.witnesses) report["p_minus_witness"] = torus.minus_witness;
    report["cubic_condition"] = torus.cubic.pass;
    if (!torus.cubic.pass && opts.witnesses) report["cubic_witness"] = torus.cubic.witness;
    report["pass"] = torus.pass;
    if (torus.pass) {
        auto [plus, minus] = cycubic::split_symmetric(p);
        cycubic::CubicData cubic = cycubic::integrate_prepotential(plus, alpha);
        Json tensor = Json::array();
        for (const auto& e : cubic.tensor) tensor.push_back(cycubic::series_to_json(e));
        report["cubic_tensor"] = tensor;
        report["prepotential"] = cycubic::series_to_json(*cubic.prepotential);
        Json actions = Json::array();
        for (const auto& t : cycubic::action_variables(plus, alpha))
            actions.push_back(cycubic::series_to_json(t));
        report["action_variables"] = actions;
    } else if (!torus.cubic.pass) {
        report["witness"] = torus.cubic.witness;
    } else {
        report["witness"] = torus.minus_witness;
    }
    emit(report, opts.output);
    return torus.pass ? 0 : 1;
}

int run_verify_section(const CommonOpts& opts) {
    if (opts.inputs.size() != 2)
        throw cycubic::StructuralError(
            "verify-section needs two inputs: a period-map file and a section file");
    Json file = cycubic::load_json_file(opts.inputs[0]);
    cycubic::PeriodMap p = load_period(opts.inputs[0], opts.order);
    cycubic::AffineFrame alpha = cycubic::frame_from_json(file, p);
    cycubic::SectionCandidate s = cycubic::section_from_json(cycubic::load_json_file(opts.inputs[1]));

    Json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "verify-section";
    Json xi = Json::array();
    for (const auto& comp : cycubic::one_form_xi(p, s, alpha))
        xi.push_back(cycubic::series_to_json(comp));
    report["xi"] = xi;
    auto iso = cycubic::is_isotropic(p, s, alpha);
    report["isotropic"] = iso.pass;
    if (!iso.pass && opts.witnesses) report["isotropy_witness"] = iso.witness;
    auto residual = cycubic::normal_function_residual(p, s, alpha);
    bool residual_zero = true;
    Json res = Json::array();
    for (const auto& comp : residual) {
        if (!comp.is_zero()) residual_zero = false;
        res.push_back(cycubic::series_to_json(comp));
    }
    report["normal_function_residual"] = res;
    report["residual_zero"] = residual_zero;
    auto tau = cycubic::check_tau_homogeneity(p, alpha);
    report["tau_homogeneity"] = tau.pass;
    if (!tau.pass && opts.witnesses) report["tau_witness"] = tau.witness;
    bool pass = iso.pass && tau.pass;
    report["pass"] = pass;
    emit(report, opts.output);
    return pass ? 0 : 1;
}

int run_mirror(const CommonOpts& opts) {
    if (opts.inputs.size() != 1)
        throw cycubic::StructuralError("mirror needs exactly one fixture file");
    cycubic::MirrorPipelineConfig cfg =
        cycubic::mirror_config_from_json(cycubic::load_json_file(opts.inputs[0]));
    if (opts.order >= 0) cfg.truncation_order = opts.order;

    Json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "mirror";
    try {
        auto basis = cycubic::frobenius_solve(cfg.op, cfg.truncation_order);
        Json omegas = Json::array();
        for (const auto& w : basis.solutions) omegas.push_back(cycubic::log_series_to_json(w));
        report["frobenius_basis"] = omegas;
        auto maps = cycubic::mirror_map(basis);
        report["q_of_z"] = cycubic::series_to_json(maps.q_of_z);
        report["z_of_q"] = cycubic::series_to_json(maps.z_of_q);
        auto k = cycubic::normalized_yukawa(cfg.algebraic_yukawa(cfg.truncation_order), basis, maps,
                                            cfg.classical_triple);
        report["yukawa_q"] = cycubic::series_to_json(k);
        int kmax = std::min(opts.kmax, cfg.truncation_order);
        auto counts = cycubic::extract_counts(k, cfg.classical_triple, kmax);
        Json table = Json::array();
        Json warnings = Json::array();
        for (size_t i = 0; i < counts.n.size(); ++i) {
            table.push_back({{"k", i + 1},
                             {"n_k", cycubic::rat_string(counts.n[i])},
                             {"integral", static_cast<bool>(counts.integral[i])}});
            if (!counts.integral[i])
                warnings.push_back("n_" + std::to_string(i + 1) + " is not an integer");
        }
        report["counts"] = table;
        report["warnings"] = warnings;
        auto ap = cycubic::action_periods(basis);
        report["action_periods"] = ap.heads;
        report["quotient_rule_consistent"] = ap.quotient_rule_consistent;
        report["pass"] = true;
        emit(report, opts.output);
        return 0;
    } catch (const cycubic::DomainError& e) {
        report["pass"] = false;
        report["error"] = e.what();
        emit(report, opts.output);
        return 1;
    }
}

int run_jacobian_ring(const CommonOpts& opts) {
    if (opts.inputs.size() != 1)
        throw cycubic::StructuralError("jacobian-ring needs exactly one input file");
    cycubic::JacobianRingInput in =
        cycubic::jacobian_ring_input_from_json(cycubic::load_json_file(opts.inputs[0]));
    cycubic::JacobianRing ring = cycubic::jacobian_ring(in.cubic, in.degrees);

    Json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = "jacobian-ring";
    Json dims = Json::array();
    for (const auto& [d, piece] : ring.pieces)
        dims.push_back({{"degree", d},
                        {"dim_s", piece.dim_s},
                        {"dim_j", piece.dim_j},
                        {"dim_r", piece.dim_r}});
    report["dimensions"] = dims;
    Json classes = Json::array();
    for (const auto& q : in.quadrics) {
        auto coords = cycubic::infinitesimal_invariant(ring, q);
        Json c = Json::array();
        bool zero = true;
        for (const auto& x : coords) {
            if (x != 0) zero = false;
            c.push_back(cycubic::rat_string(x));
        }
        classes.push_back({{"coordinates", c}, {"zero", zero}});
    }
    report["infinitesimal_invariants"] = classes;
    report["pass"] = true;
    emit(report, opts.output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic conditions, Lagrangian verification and the quintic mirror pipeline"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto add_common = [&](CLI::App* sub, bool with_kmax) {
        sub->add_option("--input", opts.inputs, "input fixture file(s)")->required();
        sub->add_option("--output", opts.output, "report file (default: stdout)");
        sub->add_option("--order", opts.order, "truncation-order override");
        sub->add_flag("--witnesses", opts.witnesses, "include failure witnesses in the report");
        if (with_kmax) sub->add_option("--kmax", opts.kmax, "highest curve degree to extract");
    };

    auto* check = app.add_subcommand("check-cubic", "cubic/Lagrangian condition on a period map");
    add_common(check, false);
    auto* verify = app.add_subcommand("verify-section", "isotropy and normal-function residual");
    add_common(verify, false);
    auto* mirror = app.add_subcommand("mirror", "one-parameter mirror pipeline");
    add_common(mirror, true);
    auto* jring = app.add_subcommand("jacobian-ring", "graded Jacobian ring of a cubic");
    add_common(jring, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check_cubic(opts);
        if (verify->parsed()) return run_verify_section(opts);
        if (mirror->parsed()) return run_mirror(opts);
        if (jring->parsed()) return run_jacobian_ring(opts);
    } catch (const cycubic::ConditionError& e) {
        std::cerr << "condition failure: " << e.what() << "\n";
        if (!e.witness().empty()) std::cerr << "witness: " << e.witness() << "\n";
        return 1;
    } catch (const cycubic::StructuralError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
