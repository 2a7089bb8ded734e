#include "gscforge/stabsim.h"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gscforge/errors.h"

namespace gscforge {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t shot_seed(uint64_t base, uint64_t index) { return splitmix64(splitmix64(base) ^ index); }

namespace {

void flip_sign(PauliString &row) { row.set_phase(row.phase() + 2); }

void row_h(PauliString &row, std::size_t q) {
    bool x = row.x(q), z = row.z(q);
    if (x && z) flip_sign(row);
    row.xs().set(q, z);
    row.zs().set(q, x);
}

void row_s(PauliString &row, std::size_t q) {
    bool x = row.x(q), z = row.z(q);
    if (x && z) flip_sign(row);
    row.zs().set(q, z ^ x);
}

void row_s_dag(PauliString &row, std::size_t q) {
    bool x = row.x(q), z = row.z(q);
    if (x && !z) flip_sign(row);
    row.zs().set(q, z ^ x);
}

void row_cx(PauliString &row, std::size_t c, std::size_t t) {
    bool xc = row.x(c), zc = row.z(c), xt = row.x(t), zt = row.z(t);
    if (xc && zt && !(xt ^ zc)) flip_sign(row);
    row.xs().set(t, xt ^ xc);
    row.zs().set(c, zc ^ zt);
}

void check_qubit(std::size_t q, std::size_t n) {
    if (q >= n) throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n));
}

}  // namespace

Tableau::Tableau(std::size_t num_qubits) : n_(num_qubits) {
    for (std::size_t q = 0; q < n_; q++) {
        stabilizers_.push_back(PauliString::single(n_, q, 'Z'));
        destabilizers_.push_back(PauliString::single(n_, q, 'X'));
    }
}

void Tableau::row_gate(PauliString &row, const Gate &g) const {
    switch (g.kind) {
        case GateKind::H:
            row_h(row, g.q0);
            break;
        case GateKind::S:
            row_s(row, g.q0);
            break;
        case GateKind::X:
            if (row.z(g.q0)) flip_sign(row);
            break;
        case GateKind::Y:
            if (row.x(g.q0) != row.z(g.q0)) flip_sign(row);
            break;
        case GateKind::Z:
            if (row.x(g.q0)) flip_sign(row);
            break;
        case GateKind::CX:
            row_cx(row, g.q0, g.q1);
            break;
        case GateKind::CY:
            row_s_dag(row, g.q1);
            row_cx(row, g.q0, g.q1);
            row_s(row, g.q1);
            break;
        case GateKind::CZ:
            row_h(row, g.q1);
            row_cx(row, g.q0, g.q1);
            row_h(row, g.q1);
            break;
    }
}

void Tableau::apply(const Gate &gate) {
    check_qubit(gate.q0, n_);
    if (is_two_qubit(gate.kind)) {
        check_qubit(gate.q1, n_);
        if (gate.q0 == gate.q1) throw std::invalid_argument("two-qubit gate on a single qubit");
    }
    for (auto &row : stabilizers_) row_gate(row, gate);
    for (auto &row : destabilizers_) row_gate(row, gate);
}

void Tableau::h(std::size_t q) { apply(Gate{GateKind::H, q}); }
void Tableau::s(std::size_t q) { apply(Gate{GateKind::S, q}); }
void Tableau::s_dag(std::size_t q) {
    check_qubit(q, n_);
    for (auto &row : stabilizers_) row_s_dag(row, q);
    for (auto &row : destabilizers_) row_s_dag(row, q);
}
void Tableau::x(std::size_t q) { apply(Gate{GateKind::X, q}); }
void Tableau::y(std::size_t q) { apply(Gate{GateKind::Y, q}); }
void Tableau::z(std::size_t q) { apply(Gate{GateKind::Z, q}); }
void Tableau::cx(std::size_t c, std::size_t t) { apply(Gate{GateKind::CX, c, t}); }
void Tableau::cy(std::size_t c, std::size_t t) { apply(Gate{GateKind::CY, c, t}); }
void Tableau::cz(std::size_t c, std::size_t t) { apply(Gate{GateKind::CZ, c, t}); }

void Tableau::apply_pauli(const PauliString &p) {
    if (p.size() != n_) throw std::invalid_argument("Pauli width does not match the tableau");
    for (auto &row : stabilizers_) {
        if (!commutes(row, p)) flip_sign(row);
    }
}

std::optional<bool> Tableau::peek(const PauliString &p) const {
    if (p.size() != n_) throw std::invalid_argument("Pauli width does not match the tableau");
    for (const auto &row : stabilizers_) {
        if (!commutes(row, p)) return std::nullopt;
    }
    PauliString product(n_);
    for (std::size_t j = 0; j < n_; j++) {
        if (!commutes(destabilizers_[j], p)) product *= stabilizers_[j];
    }
    return ((product.phase() - p.phase()) & 3) == 2;
}

bool Tableau::collapse(const PauliString &p, std::size_t pivot, bool outcome) {
    const PauliString pivot_row = stabilizers_[pivot];
    for (std::size_t j = 0; j < n_; j++) {
        if (j != pivot && !commutes(stabilizers_[j], p)) stabilizers_[j] *= pivot_row;
        if (j != pivot && !commutes(destabilizers_[j], p)) destabilizers_[j] *= pivot_row;
    }
    destabilizers_[pivot] = pivot_row;
    stabilizers_[pivot] = p;
    stabilizers_[pivot].set_phase(p.phase() + (outcome ? 2 : 0));
    return outcome;
}

bool Tableau::measure_forced(const PauliString &p, bool outcome_if_random) {
    if (!p.is_hermitian()) throw std::invalid_argument("cannot measure non-Hermitian " + p.str());
    for (std::size_t j = 0; j < n_; j++) {
        if (!commutes(stabilizers_[j], p)) return collapse(p, j, outcome_if_random);
    }
    return *peek(p);
}

bool Tableau::measure(const PauliString &p, Rng &rng) {
    if (p.size() != n_) throw std::invalid_argument("Pauli width does not match the tableau");
    return measure_forced(p, rng() & 1);
}

void Tableau::encode(std::size_t offset, const std::vector<PauliString> &local, Rng &rng) {
    if (local.empty()) return;
    const std::size_t m = local.front().size();
    if (offset + m > n_ || local.size() != m) {
        throw std::invalid_argument("encode block does not fit the tableau or is not fully specified");
    }
    for (std::size_t q = offset; q < offset + m; q++) {
        if (measure(PauliString::single(n_, q, 'Z'), rng)) x(q);
    }
    auto partners = anticommuting_partners(local);
    for (std::size_t k = 0; k < m; k++) {
        if (measure(local[k].embedded(n_, offset), rng)) apply_pauli(partners[k].embedded(n_, offset));
    }
}

void propagate_frame(PauliString &frame, const Gate &g) {
    const std::size_t q0 = g.q0, q1 = g.q1;
    auto swap_xz = [&](std::size_t q) {
        bool x = frame.x(q), z = frame.z(q);
        frame.xs().set(q, z);
        frame.zs().set(q, x);
    };
    auto cx = [&](std::size_t c, std::size_t t) {
        if (frame.x(c)) frame.xs().flip(t);
        if (frame.z(t)) frame.zs().flip(c);
    };
    switch (g.kind) {
        case GateKind::H:
            swap_xz(q0);
            break;
        case GateKind::S:
            if (frame.x(q0)) frame.zs().flip(q0);
            break;
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
            break;
        case GateKind::CX:
            cx(q0, q1);
            break;
        case GateKind::CY:
            if (frame.x(q1)) frame.zs().flip(q1);
            cx(q0, q1);
            if (frame.x(q1)) frame.zs().flip(q1);
            break;
        case GateKind::CZ:
            swap_xz(q1);
            cx(q0, q1);
            swap_xz(q1);
            break;
    }
    frame.set_phase(0);
}

bool MeasurementRecord::bit(const std::string &key) const {
    for (const auto &[k, v] : bits) {
        if (k == key) return v;
    }
    throw std::out_of_range("no measurement recorded under '" + key + "'");
}

MeasurementRecord run_circuit(const Circuit &circuit, Tableau &tableau, Rng &rng, const RunOptions &options) {
    if (circuit.num_qubits() != tableau.num_qubits()) {
        throw std::invalid_argument("circuit has " + std::to_string(circuit.num_qubits()) + " qubits, tableau has " +
                                    std::to_string(tableau.num_qubits()));
    }
    MeasurementRecord record;
    const std::size_t n = tableau.num_qubits();
    for (const auto &inst : circuit.instructions()) {
        if (auto g = std::get_if<Gate>(&inst)) {
            tableau.apply(*g);
        } else if (auto ph = std::get_if<PhaseGate>(&inst)) {
            double r = std::fmod(ph->p, 2.0);
            if (r < 0) r += 2.0;
            if (std::abs(r - 1.0) < 1e-12) {
                tableau.z(ph->qubit);
            } else if (r > 1e-12 && r < 2.0 - 1e-12) {
                throw CapabilityError("stabilizer simulation cannot apply non-Clifford '" + instruction_text(inst) +
                                      "'");
            }
        } else if (auto dep = std::get_if<Depolarize1>(&inst)) {
            for (auto q : dep->qubits) {
                double u = to_unit(rng());
                if (u >= dep->probability) continue;
                char c = u < dep->probability / 3 ? 'X' : u < 2 * dep->probability / 3 ? 'Y' : 'Z';
                tableau.apply_pauli(PauliString::single(n, q, c));
            }
        } else if (auto m = std::get_if<MeasurePauli>(&inst)) {
            record.bits.emplace_back(m->key, tableau.measure(m->observable, rng));
        } else if (auto cc = std::get_if<ClassicallyControlledPauli>(&inst)) {
            if (record.bit(cc->key) == cc->required) tableau.apply_pauli(cc->pauli);
        } else if (auto qec = std::get_if<QecRound>(&inst)) {
            if (!options.check_qec) continue;
            for (const auto &s : qec->stabilizers) {
                auto v = tableau.peek(s);
                if (!v || *v) {
                    record.violations.push_back("QEC round " + qec->label + ": " + s.str() +
                                                (v ? " has value -1" : " is not definite"));
                }
            }
        } else if (auto obs = std::get_if<ObservableCheck>(&inst)) {
            auto v = tableau.peek(obs->observable);
            if (!v || (*v ? -1 : 1) != obs->expected_sign) {
                record.violations.push_back("observable " + obs->observable.str() +
                                            (v ? " has the wrong sign" : " is not definite"));
            }
        } else if (auto enc = std::get_if<Encode>(&inst)) {
            tableau.encode(enc->offset, enc->stabilizers, rng);
        }
    }
    return record;
}

std::vector<PauliString> observables_for(int step, const GscParams &params, const StabilizerCode &target,
                                         FlipKind kind) {
    params.validate();
    if (step < kControlStep || step >= static_cast<int>(params.a)) {
        throw std::invalid_argument("step must be -1 (control) or in [0, a)");
    }
    if (target.k == 0) throw std::invalid_argument("target code has no logical qubit");
    const std::size_t ab = params.num_qubits();
    const std::size_t n = ab + target.n;
    const auto &flip = kind == FlipKind::X ? target.logical_x[0] : target.logical_z[0];
    const auto &probe = kind == FlipKind::X ? target.logical_z[0] : target.logical_x[0];
    std::vector<PauliString> out;
    for (std::size_t j = static_cast<std::size_t>(step + 1); j < params.a; j++) {
        PauliString x(n);
        for (std::size_t q = 0; q < params.b; q++) x.set(params.subregister_start(j) + q, 'X');
        out.push_back(std::move(x));
    }
    // Control m of each used subregister drives factor m of the flip; the probe
    // picks up Z there iff it anticommutes with that factor. When that set has
    // the parity of b it is replaced by Z on the whole subregister, which
    // differs by Z-pair stabilizers only.
    auto entangled = probe.embedded(n, ab);
    const auto support = flip.support();
    std::vector<std::size_t> hit;
    for (std::size_t m = 0; m < support.size(); m++) {
        char pc = probe.at(support[m]);
        if (pc != 'I' && !commutes(PauliString::single(1, 0, flip.at(support[m])), PauliString::single(1, 0, pc))) {
            hit.push_back(m);
        }
    }
    const bool whole = hit.size() % 2 == params.b % 2;
    for (int j = 0; j <= step; j++) {
        const std::size_t start = params.subregister_start(static_cast<std::size_t>(j));
        if (whole) {
            for (std::size_t q = 0; q < params.b; q++) entangled *= PauliString::single(n, start + q, 'Z');
        } else {
            for (auto m : hit) entangled *= PauliString::single(n, start + m, 'Z');
        }
    }
    entangled.set_phase(probe.phase());
    out.push_back(std::move(entangled));
    return out;
}

void ExperimentSpec::validate() const {
    params.validate();
    if (step < kControlStep || step >= static_cast<int>(params.a)) {
        throw std::invalid_argument("step " + std::to_string(step) + " outside control or [0, " +
                                    std::to_string(params.a) + ")");
    }
    if (target.k == 0 || target.logical_x.empty()) throw std::invalid_argument("target code has no logical qubit");
    for (double p : ps) {
        if (!(p >= 0 && p <= 1)) throw std::invalid_argument("depolarizing probability outside [0, 1]");
    }
}

std::pair<double, double> clopper_pearson(std::size_t k, std::size_t n, double confidence) {
    if (k > n) throw std::invalid_argument("more failures than shots");
    if (n == 0) return {0.0, 1.0};
    const double alpha = 1 - confidence;
    const double kd = static_cast<double>(k), nd = static_cast<double>(n);
    double lo = k == 0 ? 0.0 : boost::math::ibeta_inv(kd, nd - kd + 1, alpha / 2);
    double hi = k == n ? 1.0 : boost::math::ibeta_inv(kd + 1, nd - kd, 1 - alpha / 2);
    return {lo, hi};
}

LerHarness::LerHarness(const ExperimentSpec &spec) : spec_(spec) {
    spec_.validate();
    layout_ = gsc_target_layout(spec_.params, spec_.target);
    observables_ = observables_for(spec_.step, spec_.params, spec_.target, spec_.kind);

    GateBuilder builder(layout_);
    builder.encode(0);
    builder.encode(1, spec_.kind == FlipKind::Z);
    prefix_ = builder.take();
    for (int j = 0; j < spec_.step; j++) {
        prefix_.append(transversal_flip_step(layout_, static_cast<std::size_t>(j), spec_.kind));
    }

    if (spec_.is_control()) {
        for (std::size_t s = 0; s < 2; s++) {
            const auto &seg = layout_.segment(s);
            blocks_.push_back({seg.offset, seg.size(), seg.code.generators, build_code_table(seg.code)});
        }
        return;
    }
    auto step = static_cast<std::size_t>(spec_.step);
    auto final_step = transversal_flip_step(layout_, step, spec_.kind);
    for (const auto &inst : final_step.instructions()) {
        if (auto g = std::get_if<Gate>(&inst)) final_gates_.push_back(*g);
    }
    auto combined = combined_code(spec_.params, spec_.target, step, spec_.kind);
    auto table = build_table(combined);
    blocks_.push_back({0, layout_.num_qubits(), combined.stabilizers, std::move(table)});
}

PauliString LerHarness::sample_error(double p, uint64_t shot_index) const {
    const std::size_t n = layout_.num_qubits();
    PauliString e(n);
    uint64_t state = shot_seed(spec_.seed, shot_index);
    for (std::size_t q = 0; q < n; q++) {
        state += 0x9E3779B97F4A7C15ull;
        double u = to_unit(splitmix64(state));
        if (u >= p) continue;
        e.set(q, u < p / 3 ? 'X' : u < 2 * p / 3 ? 'Y' : 'Z');
    }
    return e;
}

bool LerHarness::frame_shot_fails(const PauliString &error) const {
    PauliString e = error;
    for (const auto &g : final_gates_) propagate_frame(e, g);
    PauliString residual = e;
    for (const auto &b : blocks_) {
        auto local = b.size == e.size() ? e : e.slice(b.offset, b.size);
        auto correction = decode(syndrome(local, b.stabilizers), b.table);
        residual *= correction.size() == e.size() ? correction : correction.embedded(e.size(), b.offset);
    }
    for (const auto &o : observables_) {
        if (!commutes(residual, o)) return true;
    }
    return false;
}

bool LerHarness::tableau_shot_fails(const PauliString &error, Rng &rng) const {
    const std::size_t n = layout_.num_qubits();
    Tableau t(n);
    run_circuit(prefix_, t, rng);
    t.apply_pauli(error);
    for (const auto &g : final_gates_) t.apply(g);
    for (const auto &b : blocks_) {
        BitVector s(b.stabilizers.size());
        for (std::size_t j = 0; j < b.stabilizers.size(); j++) {
            const auto &stab = b.stabilizers[j];
            s.set(j, t.measure(stab.size() == n ? stab : stab.embedded(n, b.offset), rng));
        }
        auto correction = decode(s, b.table);
        t.apply_pauli(correction.size() == n ? correction : correction.embedded(n, b.offset));
    }
    for (const auto &o : observables_) {
        auto v = t.peek(o);
        if (!v || *v) return true;
    }
    return false;
}

namespace {

std::size_t thread_count() {
    if (const char *env = std::getenv("GSC_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
        if (end != env && v == 0) return std::max(1u, std::thread::hardware_concurrency());
    }
    return 1;
}

}  // namespace

LerPoint LerHarness::run_point(double p, std::size_t shots) const {
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("depolarizing probability outside [0, 1]");
    const std::size_t threads = std::min(thread_count(), std::max<std::size_t>(shots, 1));
    std::vector<std::size_t> failures(threads, 0);
    auto work = [&](std::size_t w) {
        std::size_t begin = shots * w / threads, end = shots * (w + 1) / threads;
        std::size_t f = 0;
        for (std::size_t s = begin; s < end; s++) f += frame_shot_fails(sample_error(p, s));
        failures[w] = f;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < threads; w++) pool.emplace_back(work, w);
        for (auto &th : pool) th.join();
    }
    LerPoint out;
    out.p = p;
    out.shots = shots;
    for (auto f : failures) out.failures += f;
    out.ler = shots ? static_cast<double>(out.failures) / static_cast<double>(shots) : 0.0;
    std::tie(out.ci_low, out.ci_high) = clopper_pearson(out.failures, shots);
    return out;
}

LerPoint run_point(const ExperimentSpec &spec, double p, std::size_t shots) {
    return LerHarness(spec).run_point(p, shots);
}

std::vector<LerPoint> run_experiment(const ExperimentSpec &spec) {
    LerHarness harness(spec);
    std::vector<LerPoint> out;
    for (double p : spec.ps) out.push_back(harness.run_point(p, spec.shots));
    return out;
}

double estimate_slope(const std::vector<LerPoint> &points) {
    std::vector<std::pair<double, double>> xy;
    for (const auto &pt : points) {
        if (pt.failures > 0 && pt.p > 0) xy.emplace_back(std::log(pt.p), std::log(pt.ler));
    }
    if (xy.size() < 3) {
        throw std::invalid_argument("slope needs at least 3 points with failures, got " + std::to_string(xy.size()));
    }
    double mx = 0, my = 0;
    for (auto [x, y] : xy) {
        mx += x;
        my += y;
    }
    mx /= xy.size();
    my /= xy.size();
    double sxy = 0, sxx = 0;
    for (auto [x, y] : xy) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if (sxx == 0) throw std::invalid_argument("slope needs at least two distinct p values");
    return sxy / sxx;
}

namespace {

std::string sig6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string ler_csv(const std::string &step_label, const std::vector<LerPoint> &points,
                    const std::vector<std::pair<std::string, std::string>> &meta) {
    std::ostringstream out;
    out << "# gsc-forge v1\n";
    for (const auto &[k, v] : meta) out << "# " << k << ": " << v << "\n";
    out << "step,p,shots,failures,ler,ci_low,ci_high\n";
    for (const auto &pt : points) {
        out << step_label << "," << sig6(pt.p) << "," << pt.shots << "," << pt.failures << "," << sig6(pt.ler) << ","
            << sig6(pt.ci_low) << "," << sig6(pt.ci_high) << "\n";
    }
    return out.str();
}

const char *dj_oracle_name(DjOracle oracle) {
    switch (oracle) {
        case DjOracle::Constant0:
            return "constant0";
        case DjOracle::Constant1:
            return "constant1";
        case DjOracle::BalancedFirst:
            return "balanced_first";
        case DjOracle::BalancedSecond:
            return "balanced_second";
        case DjOracle::BalancedParity:
            return "balanced_parity";
        case DjOracle::BalancedParityNot:
            return "balanced_parity_not";
    }
    return "?";
}

DjOracle dj_oracle_from_name(const std::string &name) {
    for (auto o : {DjOracle::Constant0, DjOracle::Constant1, DjOracle::BalancedFirst, DjOracle::BalancedSecond,
                   DjOracle::BalancedParity, DjOracle::BalancedParityNot}) {
        if (name == dj_oracle_name(o)) return o;
    }
    throw std::invalid_argument("unknown oracle '" + name +
                                "' (expected constant0, constant1, balanced_first, balanced_second, "
                                "balanced_parity or balanced_parity_not)");
}

DjCircuit deutsch_jozsa_circuit(DjOracle oracle) {
    const GscParams params{3, 3};
    RegisterLayout layout;
    auto helper = layout.add_gsc("helper", params);
    auto helper2 = layout.add_gsc("helper2", params);
    auto d0 = layout.add(Role::C1, "d0", gsc(params), params);
    auto d1 = layout.add(Role::C1, "d1", gsc(params), params);
    auto k = layout.add(Role::C2, "k", gsc(params), params);

    GateBuilder b(layout);
    b.encode(d0);
    b.encode(d1);
    b.encode(k);
    b.pauli(layout.logical_x({k}));
    for (auto seg : {d0, d1, k}) b.hadamard(helper, layout.logical({seg}));
    const auto flip_k = layout.logical_x({k});
    switch (oracle) {
        case DjOracle::Constant0:
            break;
        case DjOracle::Constant1:
            b.pauli(flip_k);
            break;
        case DjOracle::BalancedFirst:
            b.controlled_flip(helper, helper2, layout.logical({d0}), flip_k);
            break;
        case DjOracle::BalancedSecond:
            b.controlled_flip(helper, helper2, layout.logical({d1}), flip_k);
            break;
        case DjOracle::BalancedParity:
        case DjOracle::BalancedParityNot:
            b.controlled_flip(helper, helper2, layout.logical({d0}), flip_k);
            b.controlled_flip(helper, helper2, layout.logical({d1}), flip_k);
            if (oracle == DjOracle::BalancedParityNot) b.pauli(flip_k);
            break;
    }
    for (auto seg : {d0, d1}) b.hadamard(helper, layout.logical({seg}));
    DjCircuit out;
    out.key0 = b.measure(layout.logical_z({d0}), "d");
    out.key1 = b.measure(layout.logical_z({d1}), "d");
    out.circuit = b.take();
    return out;
}

std::map<std::string, std::size_t> deutsch_jozsa(DjOracle oracle, std::size_t shots, uint64_t seed) {
    std::map<std::string, std::size_t> counts;
    if (shots == 0) return counts;
    auto dj = deutsch_jozsa_circuit(oracle);
    for (std::size_t s = 0; s < shots; s++) {
        Rng rng(shot_seed(seed, s));
        Tableau t(dj.circuit.num_qubits());
        auto record = run_circuit(dj.circuit, t, rng);
        if (!record.violations.empty()) {
            throw std::logic_error("Deutsch-Jozsa run violated a check: " + record.violations.front());
        }
        std::string bits;
        bits += record.bit(dj.key0) ? '1' : '0';
        bits += record.bit(dj.key1) ? '1' : '0';
        counts[bits]++;
    }
    return counts;
}

}  // namespace gscforge
