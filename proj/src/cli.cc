#include "gscforge/cli.h"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "gscforge/errors.h"
#include "gscforge/overhead.h"
#include "gscforge/stabsim.h"
#include "gscforge/svsim.h"

namespace gscforge {

namespace {

constexpr const char *kHeader = "# gsc-forge v1\n";

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

FlipKind parse_kind(const std::string &s) { return s == "z" ? FlipKind::Z : FlipKind::X; }

GscParams parse_gsc(const std::vector<std::size_t> &v) {
    GscParams p{v.at(0), v.at(1)};
    p.validate();
    return p;
}

// Writes to --out when given, else to the main stream.
void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot write " + path);
    f << text;
}

struct Config {
    std::string c1 = "five_qubit";
    std::string c2 = "steane";
    std::string rc = "trivial";
    std::string code;
    std::vector<std::size_t> gsc{3, 5};
    std::string kind = "x";
    std::string step = "0";
    std::vector<double> ps{0.002, 0.005, 0.01, 0.02};
    std::size_t shots = 100000;
    std::optional<uint64_t> seed;
    std::string out_path;
    bool json = false;
    bool emit = false;
    bool hadamard = false;
    std::string gate = "flip-gsch";
    std::size_t logical = 0;
    std::size_t control = 0;
    std::size_t target = 0;
    bool same_block = false;
    double p = 0.25;
    std::size_t shor_rounds = 0;
    std::size_t r = 3;
    std::size_t inputs = 5;
    double tolerance = 0;
    std::string blueprint = "h";
    std::string oracle = "all";
    double budget = 1e8;
};

uint64_t resolve_seed(Config &cfg, std::ostream &err) {
    if (!cfg.seed) {
        cfg.seed = (static_cast<uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
        err << "seed " << *cfg.seed << "\n";
    }
    return *cfg.seed;
}

int codes_list(std::ostream &out) {
    out << kHeader << "name n k d transversal_phase\n";
    for (const auto &[name, code] : registry()) {
        out << name << " " << code.n << " " << code.k << " "
            << (code.distance ? std::to_string(*code.distance) : std::string("?")) << " ";
        if (code.transversal_phase) {
            out << "step=" << fmt(code.transversal_phase->step) << ",direction=" << code.transversal_phase->direction;
        } else {
            out << "-";
        }
        out << "\n";
    }
    return kExitOk;
}

int codes_verify(const Config &cfg, std::ostream &out) {
    auto code = load_code(cfg.code);
    out << kHeader << "code: " << code.name << " [[" << code.n << "," << code.k << ","
        << (code.distance ? std::to_string(*code.distance) : std::string("?")) << "]]\n";
    auto report = verify_code(code);
    for (const auto &f : report.failures) out << "FAIL " << f << "\n";
    if (!report.ok()) return kExitValidation;
    out << "checks: ok\n";
    const std::size_t max_weight = code.distance.value_or(code.n);
    auto d = distance_bruteforce(code, max_weight, cfg.budget);
    out << "distance: " << (d ? std::to_string(*d) : "> " + std::to_string(max_weight)) << "\n";
    if (code.distance && d != code.distance) {
        out << "FAIL declared distance " << *code.distance << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

int codes_gsc(const Config &cfg, std::ostream &out) {
    auto params = parse_gsc(cfg.gsc);
    auto code = cfg.hadamard ? gsch(params) : gsc(params);
    if (cfg.json) {
        out << code_to_json(code) << "\n";
        return kExitOk;
    }
    out << kHeader << "# a: " << params.a << "\n# b: " << params.b << "\n";
    out << code.name << " [[" << code.n << "," << code.k << "," << params.distance() << "]] with "
        << code.generators.size() << " generators\n";
    if (cfg.emit) {
        for (std::size_t i = 0; i < code.generators.size(); i++) {
            out << "g" << i + 1 << " " << code.generators[i].str() << "\n";
        }
        out << "X_L " << code.logical_x[0].str() << "\n";
        out << "Z_L " << code.logical_z[0].str() << "\n";
    }
    return kExitOk;
}

int protocol_build(const Config &cfg, std::ostream &out) {
    auto params = parse_gsc(cfg.gsc);
    const auto kind = parse_kind(cfg.kind);
    auto c1 = load_code(cfg.c1);
    Circuit circuit(0);
    if (cfg.gate == "flip-gsch") {
        auto layout = gsc_target_layout(params, c1);
        if (cfg.shor_rounds > 0) layout.add_ancillas("ancilla", 2 * params.b + flip_operator(layout, 1, kind).weight());
        circuit = controlled_flip_gsch(layout, kind, BuildOptions{cfg.shor_rounds});
    } else if (cfg.gate == "hadamard") {
        circuit = hadamard_generic(params, c1, cfg.logical);
    } else if (cfg.gate == "cflip") {
        circuit = controlled_flip_generic(params, c1, load_code(cfg.c2), kind, cfg.control, cfg.target, cfg.same_block);
    } else if (cfg.gate == "zrot") {
        circuit = z_rotation_generic(params, c1, load_code(cfg.rc), cfg.p, cfg.logical);
    } else if (cfg.gate == "blueprint-h") {
        circuit = blueprint_fault_intolerant(BlueprintKind::Hadamard, c1);
    } else if (cfg.gate == "blueprint-flip") {
        circuit = blueprint_fault_intolerant(BlueprintKind::Flip, c1, load_code(cfg.c2), kind);
    } else {
        circuit = blueprint_z_rotation(c1, load_code(cfg.rc), cfg.p, cfg.logical);
    }
    std::ostringstream s;
    s << kHeader << "# gate: " << cfg.gate << "\n# c1: " << c1.name << "\n# gsc: " << params.a << " " << params.b
      << "\n# kind: " << cfg.kind << "\n# shor_rounds: " << cfg.shor_rounds << "\n# qubits: " << circuit.num_qubits()
      << "\n# instructions: " << circuit.size() << "\n# two_qubit_gates: " << circuit.two_qubit_gate_count()
      << "\n# qec_rounds: " << circuit.count_qec_rounds() << "\n"
      << circuit.to_text();
    emit(s.str(), cfg.out_path, out);
    return kExitOk;
}

int decode_table(const Config &cfg, std::ostream &out) {
    auto params = parse_gsc(cfg.gsc);
    const std::size_t step = std::stoul(cfg.step);
    if (step >= params.a) throw std::invalid_argument("step must be below a = " + std::to_string(params.a));
    auto combined = combined_code(params, load_code(cfg.c1), step, parse_kind(cfg.kind));
    auto table = build_table(combined);
    std::ostringstream s;
    s << kHeader << "# c1: " << cfg.c1 << "\n# gsc: " << params.a << " " << params.b << "\n# step: " << step
      << "\n# kind: " << cfg.kind << "\n# stabilizers: " << table.num_stabilizers() << "\n# entries: " << table.size()
      << "\n";
    for (std::size_t i = 0; i < combined.stabilizers.size(); i++) {
        s << "# g" << i << " " << combined.stabilizers[i].str() << "\n";
    }
    s << table.to_text();
    emit(s.str(), cfg.out_path, out);
    return kExitOk;
}

int ler_run(Config &cfg, std::ostream &out, std::ostream &err) {
    ExperimentSpec spec;
    spec.target = load_code(cfg.c1);
    spec.params = parse_gsc(cfg.gsc);
    spec.step = cfg.step == "control" ? kControlStep : std::stoi(cfg.step);
    spec.kind = parse_kind(cfg.kind);
    spec.ps = cfg.ps;
    spec.shots = cfg.shots;
    spec.seed = resolve_seed(cfg, err);
    spec.validate();
    auto points = run_experiment(spec);
    std::vector<std::pair<std::string, std::string>> meta{
        {"c1", spec.target.name},
        {"gsc", std::to_string(spec.params.a) + " " + std::to_string(spec.params.b)},
        {"kind", cfg.kind},
        {"shots", std::to_string(spec.shots)},
        {"seed", std::to_string(spec.seed)},
        {"noise", "depolarize1 on every qubit before the final step"}};
    try {
        meta.emplace_back("slope", fmt(estimate_slope(points)));
    } catch (const std::invalid_argument &) {
        meta.emplace_back("slope", "n/a");
    }
    emit(ler_csv(cfg.step, points, meta), cfg.out_path, out);
    return kExitOk;
}

void print_checks(const std::vector<GateCheck> &rows, std::ostream &out) {
    out << "gate qubits inputs branches max_error result expected\n";
    for (const auto &r : rows) {
        out << r.gate << " " << r.qubits << " " << r.inputs << " " << r.branches << " " << fmt(r.max_error) << " "
            << (!r.skipped.empty() ? "SKIP" : r.pass ? "PASS" : "FAIL") << " " << r.effect;
        if (!r.skipped.empty()) out << " [" << r.skipped << "]";
        out << "\n";
    }
}

int verify_gates(Config &cfg, std::ostream &out, std::ostream &err) {
    auto c1 = load_code(cfg.c1);
    auto params = parse_gsc(cfg.gsc);
    const uint64_t seed = resolve_seed(cfg, err);
    const double tol = cfg.tolerance > 0 ? cfg.tolerance : 1e-9;
    auto rows = verify_gate_table(c1, params, seed, cfg.inputs, tol);
    out << kHeader << "# c1: " << c1.name << "\n# gsc: " << params.a << " " << params.b << "\n# seed: " << seed
        << "\n# inputs: " << cfg.inputs << "\n# tolerance: " << fmt(tol) << "\n";
    print_checks(rows, out);
    for (const auto &r : rows) {
        if (r.skipped.empty() && !r.pass) return kExitValidation;
    }
    return kExitOk;
}

int verify_blueprint_cmd(Config &cfg, std::ostream &out, std::ostream &err) {
    auto c1 = load_code(cfg.c1);
    auto c2 = load_code(cfg.c2);
    const uint64_t seed = resolve_seed(cfg, err);
    const double tol = cfg.tolerance > 0 ? cfg.tolerance : 1e-10;
    auto kind = cfg.blueprint == "flip" ? BlueprintKind::Flip : BlueprintKind::Hadamard;
    auto row = verify_blueprint(kind, c1, c2, parse_kind(cfg.kind), seed, cfg.inputs, tol);
    out << kHeader << "# kind: " << cfg.blueprint << "\n# c1: " << c1.name << "\n# c2: " << c2.name
        << "\n# seed: " << seed << "\n# inputs: " << cfg.inputs << "\n# tolerance: " << fmt(tol) << "\n";
    print_checks({row}, out);
    return row.pass || !row.skipped.empty() ? kExitOk : kExitValidation;
}

int overhead_report(const Config &cfg, std::ostream &out) {
    auto p = overhead_params(load_code(cfg.c1), load_code(cfg.rc), parse_gsc(cfg.gsc), cfg.r);
    if (cfg.json) {
        out << overhead_json(p) << "\n";
        return kExitOk;
    }
    out << kHeader << "# c1: " << cfg.c1 << "\n# rc: " << cfg.rc << "\n# gsc: " << p.a << " " << p.b
        << "\n# r: " << p.r << "\n# flip_weight: " << p.flip_weight << "\n";
    const std::pair<const char *, std::size_t> rows[] = {
        {"N2 GSC", n2_gsc(p)},
        {"N2 RC", n2_rc(p)},
        {"N2 GSCH-controlled flip", n2_controlled_flip(p)},
        {"N2 GSCH-controlled flip (as built)", n2_controlled_flip_as_built(p)},
        {"N2 H", n2_hadamard(p)},
        {"N2 C1-C2 flip", n2_flip_c1_c2(p)},
        {"N2 Z^p", n2_z_rotation(p)},
        {"N1 GSC", n1_gsc(p)},
        {"N1 GSCH-controlled flip", n1_controlled_flip(p)},
        {"N1 H", n1_hadamard(p)},
        {"N1 C1-C2 flip", n1_flip_c1_c2(p)},
        {"N1 Z^p", n1_z_rotation(p)},
        {"qubits GSC register", qubits_gsc_register(p)},
        {"qubits H", qubits_hadamard(p)},
        {"qubits C1-C2 flip", qubits_flip_c1_c2(p)},
        {"qubits Z^p", qubits_z_rotation(p)},
        {"QEC rounds per flip", qec_rounds(p)},
    };
    for (const auto &[name, value] : rows) out << name << ": " << value << "\n";
    return kExitOk;
}

int dj_cmd(Config &cfg, std::ostream &out, std::ostream &err) {
    const uint64_t seed = resolve_seed(cfg, err);
    std::vector<DjOracle> oracles;
    if (cfg.oracle == "all") {
        oracles = {DjOracle::Constant0,      DjOracle::Constant1,      DjOracle::BalancedFirst,
                   DjOracle::BalancedSecond, DjOracle::BalancedParity, DjOracle::BalancedParityNot};
    } else {
        oracles = {dj_oracle_from_name(cfg.oracle)};
    }
    out << kHeader << "# shots: " << cfg.shots << "\n# seed: " << seed << "\noracle 00 01 10 11 verdict\n";
    bool ok = true;
    for (auto o : oracles) {
        auto counts = deutsch_jozsa(o, cfg.shots, seed);
        const bool constant = o == DjOracle::Constant0 || o == DjOracle::Constant1;
        const std::size_t zeros = counts["00"];
        ok = ok && (constant ? zeros == cfg.shots : zeros == 0);
        out << dj_oracle_name(o) << " " << zeros << " " << counts["01"] << " " << counts["10"] << " " << counts["11"]
            << " " << (zeros == cfg.shots ? "constant" : "balanced") << "\n";
    }
    return ok ? kExitOk : kExitValidation;
}

}  // namespace

int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Stabilizer-generic gates: codes, circuits, decoders, simulation and resource counts", "gsc-forge"};
    app.require_subcommand(1);
    Config cfg;
    const std::vector<std::string> kinds{"x", "z"};

    auto add_gsc = [&](CLI::App *sub, std::vector<std::size_t> def) {
        cfg.gsc = def;
        sub->add_option("--gsc", cfg.gsc, "GSC shape: a b")->expected(2)->capture_default_str();
    };
    auto add_seed = [&](CLI::App *sub) {
        sub->add_option("--seed", cfg.seed, "RNG seed (random and printed to stderr when omitted)");
    };

    auto codes = app.add_subcommand("codes", "Code registry");
    codes->require_subcommand(1);
    auto codes_list_cmd = codes->add_subcommand("list", "List the built-in codes");
    auto codes_verify_cmd = codes->add_subcommand("verify", "Check a code and its distance");
    codes_verify_cmd->add_option("--code", cfg.code, "Registry name or JSON file")->required();
    codes_verify_cmd->add_option("--budget", cfg.budget, "Distance search budget")->capture_default_str();
    auto codes_gsc_cmd = codes->add_subcommand("gsc", "Generalized Shor code GSC_{a,b}");
    std::size_t ga = 3, gb = 3;
    codes_gsc_cmd->add_option("--a", ga, "Number of cat subregisters")->capture_default_str();
    codes_gsc_cmd->add_option("--b", gb, "Qubits per subregister")->capture_default_str();
    codes_gsc_cmd->add_flag("--emit", cfg.emit, "Print generators and logicals");
    codes_gsc_cmd->add_flag("--hadamard", cfg.hadamard, "The GSCH view (logicals swapped)");
    codes_gsc_cmd->add_flag("--json", cfg.json, "Code-definition JSON");

    auto protocol = app.add_subcommand("protocol", "Circuit construction");
    protocol->require_subcommand(1);
    auto build = protocol->add_subcommand("build", "Emit a gadget circuit as text");
    build->add_option("--gate", cfg.gate, "Gadget")
        ->check(CLI::IsMember(
            {"flip-gsch", "hadamard", "cflip", "zrot", "blueprint-h", "blueprint-flip", "blueprint-zrot"}))
        ->capture_default_str();
    build->add_option("--c1", cfg.c1, "Data (or target) code")->capture_default_str();
    build->add_option("--c2", cfg.c2, "Second data code")->capture_default_str();
    build->add_option("--rc", cfg.rc, "Rotation code")->capture_default_str();
    add_gsc(build, {3, 5});
    build->add_option("--kind", cfg.kind, "Flip kind")->check(CLI::IsMember(kinds))->capture_default_str();
    build->add_option("--logical", cfg.logical, "Logical index acted on")->capture_default_str();
    build->add_option("--control", cfg.control, "Control logical")->capture_default_str();
    build->add_option("--target", cfg.target, "Target logical")->capture_default_str();
    build->add_flag("--same-block", cfg.same_block, "Control and target in one C1 block");
    build->add_option("--p", cfg.p, "Rotation Z^p")->capture_default_str();
    build->add_option("--shor-rounds", cfg.shor_rounds, "Inline Shor extraction rounds")->capture_default_str();
    build->add_option("--out", cfg.out_path, "Output file");

    auto decode = app.add_subcommand("decode", "Lookup decoders");
    decode->require_subcommand(1);
    auto table = decode->add_subcommand("table", "Syndrome table of a combined code");
    table->add_option("--c1", cfg.c1, "Target code")->capture_default_str();
    add_gsc(table, {3, 5});
    table->add_option("--step", cfg.step, "Protocol step")->capture_default_str();
    table->add_option("--kind", cfg.kind, "Flip kind")->check(CLI::IsMember(kinds))->capture_default_str();
    table->add_option("--out", cfg.out_path, "Output file");

    auto ler = app.add_subcommand("ler", "Logical error rates");
    ler->require_subcommand(1);
    auto ler_run_cmd = ler->add_subcommand("run", "Monte Carlo LER sweep (CSV)");
    ler_run_cmd->add_option("--c1", cfg.c1, "Target code")->capture_default_str();
    add_gsc(ler_run_cmd, {3, 5});
    ler_run_cmd->add_option("--step", cfg.step, "Step 0..a-1 or 'control'")->capture_default_str();
    ler_run_cmd->add_option("--p", cfg.ps, "Physical error rates")->capture_default_str();
    ler_run_cmd->add_option("--shots", cfg.shots, "Shots per point")->capture_default_str();
    ler_run_cmd->add_option("--kind", cfg.kind, "Flip kind")->check(CLI::IsMember(kinds))->capture_default_str();
    add_seed(ler_run_cmd);
    ler_run_cmd->add_option("--out", cfg.out_path, "Output CSV file");

    auto verify = app.add_subcommand("verify", "State-vector verification");
    verify->require_subcommand(1);
    auto gates = verify->add_subcommand("gates", "Gate table of the stabilizer-generic gadgets");
    gates->add_option("--c1", cfg.c1, "Data code")->capture_default_str();
    add_gsc(gates, {3, 3});
    add_seed(gates);
    gates->add_option("--inputs", cfg.inputs, "Random logical inputs per gate")->capture_default_str();
    gates->add_option("--tolerance", cfg.tolerance, "Distance tolerance (default 1e-9)");
    auto blueprint = verify->add_subcommand("blueprint", "Single-ancilla blueprints against their expansions");
    blueprint->add_option("--kind", cfg.blueprint, "Blueprint")->check(CLI::IsMember({"h", "flip"}))->capture_default_str();
    blueprint->add_option("--c1", cfg.c1, "Control / data code")->capture_default_str();
    blueprint->add_option("--c2", cfg.c2, "Target code of the flip")->capture_default_str();
    blueprint->add_option("--flip", cfg.kind, "Flip kind")->check(CLI::IsMember(kinds))->capture_default_str();
    add_seed(blueprint);
    blueprint->add_option("--inputs", cfg.inputs, "Random logical inputs")->capture_default_str();
    blueprint->add_option("--tolerance", cfg.tolerance, "Distance tolerance (default 1e-10)");

    auto overhead = app.add_subcommand("overhead", "Resource counts");
    overhead->require_subcommand(1);
    auto report = overhead->add_subcommand("report", "Gate and qubit overhead");
    report->add_option("--c1", cfg.c1, "Largest data code")->capture_default_str();
    report->add_option("--rc", cfg.rc, "Rotation code")->capture_default_str();
    add_gsc(report, {3, 3});
    report->add_option("--r", cfg.r, "Measurement rounds per QEC round")->capture_default_str();
    report->add_flag("--json", cfg.json, "Versioned JSON");

    auto dj = app.add_subcommand("dj", "Deutsch-Jozsa on GSC_{3,3} registers");
    dj->add_option("--oracle", cfg.oracle, "Oracle name or 'all'")->capture_default_str();
    dj->add_option("--shots", cfg.shots, "Shots per oracle (default 1000)");
    add_seed(dj);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    // Every subcommand shares cfg.gsc, so restore its own default when unset.
    auto gsc_default = [&](CLI::App *sub, std::vector<std::size_t> def) {
        if (sub->count("--gsc") == 0) cfg.gsc = def;
    };

    try {
        if (codes_list_cmd->parsed()) return codes_list(out);
        if (codes_verify_cmd->parsed()) return codes_verify(cfg, out);
        if (codes_gsc_cmd->parsed()) {
            cfg.gsc = {ga, gb};
            return codes_gsc(cfg, out);
        }
        if (build->parsed()) {
            gsc_default(build, {3, 5});
            return protocol_build(cfg, out);
        }
        if (table->parsed()) {
            gsc_default(table, {3, 5});
            return decode_table(cfg, out);
        }
        if (ler_run_cmd->parsed()) {
            gsc_default(ler_run_cmd, {3, 5});
            return ler_run(cfg, out, err);
        }
        if (gates->parsed()) {
            gsc_default(gates, {3, 3});
            return verify_gates(cfg, out, err);
        }
        if (blueprint->parsed()) return verify_blueprint_cmd(cfg, out, err);
        if (report->parsed()) {
            gsc_default(report, {3, 3});
            return overhead_report(cfg, out);
        }
        if (dj->parsed()) {
            if (dj->count("--shots") == 0) cfg.shots = 1000;
            return dj_cmd(cfg, out, err);
        }
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetError &e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace gscforge
