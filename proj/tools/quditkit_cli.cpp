// quditkit command-line front end. One binary, one subcommand per run,
// JSON on stdout (CSV for scans on request). Exit codes: 0 success,
// 2 invalid input, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quditkit/quditkit.hpp"

namespace {

using namespace quditkit;

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --state accepts "-" (stdin), inline JSON, "werner:<x>", a catalog name,
// or a path to a JSON file.
DensityOp load_state(const std::string& spec) {
    if (spec == "-") return density_from_json(parse_json(slurp(std::cin)));
    if (!spec.empty() && spec.front() == '{') return density_from_json(parse_json(spec));
    if (spec.rfind("werner:", 0) == 0) {
        const double x = std::stod(spec.substr(7));
        return werner(x);
    }
    std::ifstream file(spec);
    if (file.good()) return density_from_json(parse_json(slurp(file)));
    // last resort: a parameterless catalog name
    const auto state = named_state(spec);
    if (std::holds_alternative<Ket>(state)) return dm_from_ket(std::get<Ket>(state));
    return std::get<DensityOp>(state);
}

std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> dims;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) dims.push_back(std::stoul(item));
    return dims;
}

int cmd_gen(std::size_t dim) {
    const GeneratorBasis basis = full_basis(dim);
    json out = json::array();
    for (std::size_t i = 0; i < basis.flat.size(); ++i)
        out.push_back(json{{"label", basis.flat_labels[i]}, {"matrix", to_json(basis.flat[i])}});
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_state(const std::string& name, double theta, double phi, double x, int k,
              const std::string& bloch, const std::string& dims_text) {
    DensityOp rho = [&] {
        if (!bloch.empty()) {
            const DimSpec dims(parse_dims(dims_text.empty() ? "2" : dims_text));
            return dm_from_bloch(bloch_from_json(parse_json(bloch), dims));
        }
        if (name.empty()) throw validation_error("state: provide --name or --bloch");
        const std::map<std::string, double> params{
            {"theta", theta}, {"phi", phi}, {"x", x}, {"k", static_cast<double>(k)}};
        const auto state = named_state(name, params);
        if (std::holds_alternative<Ket>(state)) return dm_from_ket(std::get<Ket>(state));
        return std::get<DensityOp>(state);
    }();
    std::cout << to_json(rho).dump(2) << "\n";
    return 0;
}

Matrix load_observable(const std::string& spec) {
    if (spec == "sigma-x") return pauli_x();
    if (spec == "sigma-y") return pauli_y();
    if (spec == "sigma-z") return pauli_z();
    if (!spec.empty() && spec.front() == '{') return matrix_from_json(parse_json(spec));
    std::ifstream file(spec);
    if (file.good()) return matrix_from_json(parse_json(slurp(file)));
    throw validation_error("quantify: cannot parse observable '" + spec + "'");
}

int cmd_quantify(const std::string& state_spec, const std::string& metric, double p,
                 const std::string& base, std::size_t subsystem,
                 const std::string& observable) {
    const DensityOp rho = load_state(state_spec);
    json details = json::object();
    double value = 0.0;
    if (metric == "expectation" || metric == "variance") {
        if (observable.empty())
            throw validation_error("quantify: metric '" + metric + "' needs --observable");
        const Matrix obs = load_observable(observable);
        value = metric == "expectation" ? expectation(rho, obs) : variance(rho, obs);
    } else if (metric == "purity") {
        value = purity(rho);
        details["class"] = purity_class(rho).cls == PurityClass::pure ? "pure" : "mixed";
    } else if (metric == "entropy") {
        value = von_neumann_entropy(rho, base == "e" ? EntropyBase::natural : EntropyBase::two);
        details["base"] = base == "e" ? "e" : "2";
    } else if (metric == "ent-entropy") {
        value = entanglement_entropy(rho, subsystem);
        details["subsystem"] = subsystem;
        details["base"] = "2";
    } else if (metric == "concurrence") {
        value = concurrence(rho);
    } else if (metric == "coherence") {
        value = p_norm_coherence(rho, p);
        details["p"] = p;
    } else {
        throw validation_error("quantify: unknown metric '" + metric + "'");
    }
    std::cout << json{{"metric", metric}, {"value", value}, {"details", details}}.dump(2) << "\n";
    return 0;
}

int cmd_separability(const std::string& state_spec) {
    const DensityOp rho = load_state(state_spec);
    const PptResult ppt = ppt_test(rho);
    json out{{"ppt_min_eig", ppt.min_eig}, {"verdict", to_string(ppt.verdict)}};
    if (purity_class(rho).cls == PurityClass::pure) {
        const EigDecomp eig = hermitian_eig(rho.matrix(), 1e-8);
        std::vector<cx> amps(rho.dim());
        for (std::size_t i = 0; i < rho.dim(); ++i)
            amps[i] = eig.eigenvectors(i, rho.dim() - 1);
        const Ket psi = Ket::normalized(std::move(amps), rho.dims());
        out["schmidt_rank"] = schmidt(psi).rank;
    } else {
        out["schmidt_rank"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

ChshSettings parse_settings(const std::string& spec) {
    if (spec.empty() || spec == "optimal") return optimal_chsh_settings();
    const json j = parse_json(spec);
    const auto vec = [&](const char* key) {
        const auto v = j.at(key).get<std::vector<double>>();
        if (v.size() != 3) throw validation_error("chsh: settings vectors must have 3 entries");
        return Vec3{v[0], v[1], v[2]};
    };
    ChshSettings s{vec("r"), vec("q"), vec("s"), vec("t")};
    s.validate();
    return s;
}

int cmd_chsh(const std::string& state_spec, const std::string& settings_spec) {
    const DensityOp rho = load_state(state_spec);
    const ChshSettings settings = parse_settings(settings_spec);
    const double value = chsh_value(rho, settings);
    std::cout << json{{"chsh", value},
                      {"classical_bound", 2.0},
                      {"tsirelson_bound", 2.0 * std::sqrt(2.0)}}
                     .dump(2)
              << "\n";
    return 0;
}

int cmd_chsh_scan(double from, double to, double step, const std::string& out_path,
                  const std::string& format) {
    const std::vector<ChshScanRow> rows = chsh_scan(from, to, step);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file.good()) throw validation_error("chsh-scan: cannot open output file");
        os = &file;
    }
    if (format == "csv") {
        *os << "x,chsh,ppt_min_eig,concurrence\n";
        for (const ChshScanRow& r : rows) {
            char line[160];
            std::snprintf(line, sizeof(line), "%.10g,%.17g,%.17g,%.17g\n", r.x, r.chsh,
                          r.ppt_min_eig, r.concurrence);
            *os << line;
        }
    } else {
        json out = json::array();
        for (const ChshScanRow& r : rows)
            out.push_back(json{{"x", r.x},
                               {"chsh", r.chsh},
                               {"ppt_min_eig", r.ppt_min_eig},
                               {"concurrence", r.concurrence}});
        *os << out.dump(2) << "\n";
    }
    return 0;
}

json outcome_to_json(const TeleportOutcome& out) {
    return json{{"branch", {out.branch[0], out.branch[1]}},
                {"probability", out.probability},
                {"correction", out.correction},
                {"fidelity", out.fidelity}};
}

int cmd_teleport(double theta, double phi, bool enumerate, std::uint64_t seed,
                 std::uint64_t shots) {
    const Ket input = hopf_ket(theta, phi);
    json out;
    bool fidelity_ok = true;
    if (enumerate || shots == 0) {
        json branches = json::array();
        for (const TeleportOutcome& o : teleport_enumerate(input)) {
            branches.push_back(outcome_to_json(o));
            fidelity_ok = fidelity_ok && o.fidelity >= 1.0 - 1e-8;
        }
        out = json{{"mode", "enumerate"}, {"branches", branches}};
    } else {
        const TeleportTally tally = teleport_sample(input, seed, shots);
        json branches = json::array();
        for (int b = 0; b < 4; ++b) {
            json j = outcome_to_json(tally.branches[b]);
            j["count"] = tally.counts[b];
            branches.push_back(j);
            fidelity_ok = fidelity_ok && tally.branches[b].fidelity >= 1.0 - 1e-8;
        }
        out = json{{"mode", "sample"}, {"seed", seed}, {"shots", shots}, {"branches", branches}};
    }
    std::cout << out.dump(2) << "\n";
    return fidelity_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-qudit density-matrix toolkit"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "dump a generator basis as JSON");
    std::size_t gen_dim = 2;
    gen->add_option("--dim", gen_dim, "subsystem dimension")->capture_default_str();

    auto* state = app.add_subcommand("state", "emit a density operator as JSON");
    std::string state_name, state_bloch, state_dims;
    double state_theta = 0.0, state_phi = 0.0, state_x = 0.0;
    int state_k = 0;
    state->add_option("--name", state_name, "catalog state name");
    state->add_option("--theta", state_theta, "polar angle for hopf");
    state->add_option("--phi", state_phi, "azimuthal angle for hopf");
    state->add_option("--x", state_x, "Werner parameter");
    state->add_option("--k", state_k, "qutrit basis index");
    state->add_option("--bloch", state_bloch, "Bloch coefficients as a JSON array");
    state->add_option("--dims", state_dims, "comma-separated subsystem dimensions");

    auto* quantify = app.add_subcommand("quantify", "evaluate a quantifier on a state");
    std::string q_state = "-", q_metric = "purity", q_base = "2", q_observable;
    double q_p = 2.0;
    std::size_t q_subsystem = 0;
    quantify->add_option("--state", q_state, "state JSON, '-' for stdin, or a name");
    quantify
        ->add_option("--metric", q_metric,
                     "purity|entropy|ent-entropy|concurrence|coherence|expectation|variance")
        ->capture_default_str();
    quantify->add_option("--p", q_p, "p for the p-norm coherence")->capture_default_str();
    quantify->add_option("--base", q_base, "entropy base: 2 or e")->capture_default_str();
    quantify->add_option("--subsystem", q_subsystem, "subsystem for ent-entropy");
    quantify->add_option("--observable", q_observable,
                         "matrix JSON or sigma-x|sigma-y|sigma-z, for expectation/variance");

    auto* separability = app.add_subcommand("separability", "Schmidt rank and PPT test");
    std::string sep_state = "-";
    separability->add_option("--state", sep_state, "state JSON, '-' for stdin, or a name");

    auto* chsh = app.add_subcommand("chsh", "evaluate the CHSH expectation value");
    std::string chsh_state = "bell-phi-plus", chsh_settings = "optimal";
    chsh->add_option("--state", chsh_state, "state JSON, '-', werner:x, or a name")
        ->capture_default_str();
    chsh->add_option("--settings", chsh_settings, "'optimal' or JSON with r,q,s,t vectors")
        ->capture_default_str();

    auto* scan = app.add_subcommand("chsh-scan", "scan the Werner family");
    double scan_from = -1.0, scan_to = 1.0, scan_step = 0.01;
    std::string scan_out, scan_format = "csv";
    scan->add_option("--from", scan_from, "start of the x grid")->capture_default_str();
    scan->add_option("--to", scan_to, "end of the x grid")->capture_default_str();
    scan->add_option("--step", scan_step, "grid step")->capture_default_str();
    scan->add_option("--out", scan_out, "output path (stdout when omitted)");
    scan->add_option("--format", scan_format, "csv|json")->capture_default_str();

    auto* teleport = app.add_subcommand("teleport", "run the teleportation protocol");
    double tp_theta = 0.0, tp_phi = 0.0;
    bool tp_enumerate = false;
    std::uint64_t tp_seed = 1, tp_shots = 0;
    teleport->add_option("--theta", tp_theta, "input polar angle");
    teleport->add_option("--phi", tp_phi, "input azimuthal angle");
    teleport->add_flag("--enumerate", tp_enumerate, "enumerate all four branches");
    teleport->add_option("--seed", tp_seed, "sampling seed");
    teleport->add_option("--shots", tp_shots, "number of sampled shots");

    auto* selftest = app.add_subcommand("selftest", "run the built-in acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_dim);
        if (state->parsed())
            return cmd_state(state_name, state_theta, state_phi, state_x, state_k, state_bloch,
                             state_dims);
        if (quantify->parsed())
            return cmd_quantify(q_state, q_metric, q_p, q_base, q_subsystem, q_observable);
        if (separability->parsed()) return cmd_separability(sep_state);
        if (chsh->parsed()) return cmd_chsh(chsh_state, chsh_settings);
        if (scan->parsed())
            return cmd_chsh_scan(scan_from, scan_to, scan_step, scan_out, scan_format);
        if (teleport->parsed())
            return cmd_teleport(tp_theta, tp_phi, tp_enumerate, tp_seed, tp_shots);
        if (selftest->parsed()) return print_acceptance(std::cout) == 0 ? 0 : 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const quditkit::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
