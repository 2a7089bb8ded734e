#include "gscforge/svsim.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "gscforge/errors.h"

namespace gscforge {

namespace {

constexpr Amplitude kI(0, 1);

Amplitude i_pow(unsigned k) {
    switch (k & 3) {
        case 0:
            return 1;
        case 1:
            return kI;
        case 2:
            return -1;
    }
    return -kI;
}

uint64_t mask_of(const BitVector &bits) { return bits.num_words() ? bits.words()[0] : 0; }

void check_width(std::size_t n) {
    if (n > StateVector::kMaxQubits) {
        throw std::invalid_argument("state vectors are limited to " + std::to_string(StateVector::kMaxQubits) +
                                    " qubits, requested " + std::to_string(n));
    }
}

// Action of a Pauli on basis states: P|b> = coef(b) |b ^ x>.
struct PauliAction {
    uint64_t x;
    uint64_t z;
    Amplitude base;
    explicit PauliAction(const PauliString &p)
        : x(mask_of(p.xs())), z(mask_of(p.zs())), base(i_pow(p.phase() + __builtin_popcountll(x & z))) {}
    Amplitude coef(uint64_t b) const { return __builtin_popcountll(z & b) & 1 ? -base : base; }
};

// The +1 eigenstate of n independent commuting operators on n qubits.
std::vector<Amplitude> stabilizer_state(const std::vector<PauliString> &ops, std::size_t n) {
    for (std::size_t seed = 0; seed < (std::size_t{1} << n); seed++) {
        StateVector s(n);
        s.amplitudes()[0] = 0;
        s.amplitudes()[seed] = 1;
        for (const auto &g : ops) s.project(g, false);
        if (s.norm() > 1e-6) {
            s.normalize();
            return s.amplitudes();
        }
    }
    throw std::domain_error("operators have no common +1 eigenstate");
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : n_(num_qubits) {
    check_width(n_);
    amp_.assign(std::size_t{1} << n_, 0);
    amp_[0] = 1;
}

StateVector::StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
    : n_(num_qubits), amp_(std::move(amplitudes)) {
    check_width(n_);
    if (amp_.size() != (std::size_t{1} << n_)) throw std::invalid_argument("amplitude count is not 2^n");
}

double StateVector::norm() const {
    double s = 0;
    for (const auto &a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::normalize() {
    double nm = norm();
    if (nm < 1e-300) throw std::domain_error("cannot normalize the zero vector");
    for (auto &a : amp_) a /= nm;
}

void StateVector::apply(const Gate &g) {
    if (g.q0 >= n_ || (is_two_qubit(g.kind) && (g.q1 >= n_ || g.q1 == g.q0))) {
        throw std::invalid_argument(std::string("bad qubits for ") + gate_name(g.kind));
    }
    const uint64_t m0 = uint64_t{1} << g.q0, m1 = uint64_t{1} << g.q1;
    const std::size_t dim = amp_.size();
    switch (g.kind) {
        case GateKind::H: {
            const double r = 1 / std::sqrt(2.0);
            for (std::size_t i = 0; i < dim; i++) {
                if (i & m0) continue;
                Amplitude a = amp_[i], b = amp_[i | m0];
                amp_[i] = (a + b) * r;
                amp_[i | m0] = (a - b) * r;
            }
            break;
        }
        case GateKind::S:
            for (std::size_t i = 0; i < dim; i++) {
                if (i & m0) amp_[i] *= kI;
            }
            break;
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
            apply_pauli(PauliString::single(n_, g.q0, gate_name(g.kind)[0]));
            break;
        case GateKind::CX:
            for (std::size_t i = 0; i < dim; i++) {
                if ((i & m0) && !(i & m1)) std::swap(amp_[i], amp_[i | m1]);
            }
            break;
        case GateKind::CY:
            for (std::size_t i = 0; i < dim; i++) {
                if ((i & m0) && !(i & m1)) {
                    Amplitude a = amp_[i], b = amp_[i | m1];
                    amp_[i] = -kI * b;
                    amp_[i | m1] = kI * a;
                }
            }
            break;
        case GateKind::CZ:
            for (std::size_t i = 0; i < dim; i++) {
                if ((i & m0) && (i & m1)) amp_[i] = -amp_[i];
            }
            break;
    }
}

void StateVector::apply_phase(double p, std::size_t qubit) {
    if (qubit >= n_) throw std::invalid_argument("phase gate qubit out of range");
    const Amplitude f = std::polar(1.0, M_PI * p);
    const uint64_t m = uint64_t{1} << qubit;
    for (std::size_t i = 0; i < amp_.size(); i++) {
        if (i & m) amp_[i] *= f;
    }
}

void StateVector::apply_pauli(const PauliString &p) {
    if (p.size() != n_) throw std::invalid_argument("Pauli width does not match the state");
    PauliAction act(p);
    if (act.x == 0) {
        for (std::size_t b = 0; b < amp_.size(); b++) amp_[b] *= act.coef(b);
        return;
    }
    const uint64_t top = uint64_t{1} << (63 - __builtin_clzll(act.x));
    for (std::size_t b = 0; b < amp_.size(); b++) {
        if (b & top) continue;
        const std::size_t c = b ^ act.x;
        Amplitude to_c = act.coef(b) * amp_[b];
        Amplitude to_b = act.coef(c) * amp_[c];
        amp_[c] = to_c;
        amp_[b] = to_b;
    }
}

double StateVector::expectation(const PauliString &p) const {
    if (p.size() != n_) throw std::invalid_argument("Pauli width does not match the state");
    PauliAction act(p);
    Amplitude total = 0;
    for (std::size_t b = 0; b < amp_.size(); b++) total += std::conj(amp_[b ^ act.x]) * act.coef(b) * amp_[b];
    return total.real();
}

double StateVector::project(const PauliString &p, bool outcome) {
    if (p.size() != n_) throw std::invalid_argument("Pauli width does not match the state");
    const double s = outcome ? -1.0 : 1.0;
    const double prob = std::clamp((1 + s * expectation(p)) / 2, 0.0, 1.0);
    PauliAction act(p);
    if (act.x == 0) {
        for (std::size_t b = 0; b < amp_.size(); b++) amp_[b] *= (1.0 + s * act.coef(b)) / 2.0;
    } else {
        const uint64_t top = uint64_t{1} << (63 - __builtin_clzll(act.x));
        for (std::size_t b = 0; b < amp_.size(); b++) {
            if (b & top) continue;
            const std::size_t c = b ^ act.x;
            Amplitude nb = (amp_[b] + s * act.coef(c) * amp_[c]) / 2.0;
            Amplitude nc = (amp_[c] + s * act.coef(b) * amp_[b]) / 2.0;
            amp_[b] = nb;
            amp_[c] = nc;
        }
    }
    if (prob > 1e-14) {
        const double k = 1 / std::sqrt(prob);
        for (auto &a : amp_) a *= k;
    }
    return prob;
}

StateVector StateVector::tensor(const StateVector &high) const {
    check_width(n_ + high.n_);
    std::vector<Amplitude> out(amp_.size() * high.amp_.size());
    for (std::size_t h = 0; h < high.amp_.size(); h++) {
        for (std::size_t l = 0; l < amp_.size(); l++) out[l | (h << n_)] = amp_[l] * high.amp_[h];
    }
    return StateVector(n_ + high.n_, std::move(out));
}

StateVector logical_basis_state(const StabilizerCode &code, std::size_t x) {
    if (x >= (std::size_t{1} << code.k)) throw std::invalid_argument("logical index out of range");
    auto ops = code.generators;
    ops.insert(ops.end(), code.logical_z.begin(), code.logical_z.end());
    StateVector s(code.n, stabilizer_state(ops, code.n));
    for (std::size_t j = 0; j < code.k; j++) {
        if ((x >> (code.k - 1 - j)) & 1) s.apply_pauli(code.logical_x[j]);
    }
    return s;
}

StateVector encode_logical(const StabilizerCode &code, const std::vector<Amplitude> &amplitudes) {
    if (amplitudes.size() != (std::size_t{1} << code.k)) {
        throw std::invalid_argument("code " + code.name + " needs " + std::to_string(std::size_t{1} << code.k) +
                                    " logical amplitudes");
    }
    check_width(code.n);
    StateVector out(code.n);
    out.amplitudes()[0] = 0;
    for (std::size_t x = 0; x < amplitudes.size(); x++) {
        if (amplitudes[x] == Amplitude(0)) continue;
        auto basis = logical_basis_state(code, x);
        for (std::size_t i = 0; i < out.dimension(); i++) out.amplitudes()[i] += amplitudes[x] * basis[i];
    }
    out.normalize();
    return out;
}

void encode_block(StateVector &state, std::size_t offset, const std::vector<PauliString> &local) {
    if (local.empty()) return;
    const std::size_t m = local.front().size();
    const std::size_t n = state.num_qubits();
    if (offset + m > n || local.size() != m) throw std::invalid_argument("encode block does not fit the state");
    const uint64_t block = ((uint64_t{1} << m) - 1) << offset;
    std::vector<double> marginal(std::size_t{1} << m, 0.0);
    auto &amp = state.amplitudes();
    for (std::size_t i = 0; i < amp.size(); i++) marginal[(i & block) >> offset] += std::norm(amp[i]);
    std::size_t best = 0;
    for (std::size_t k = 1; k < marginal.size(); k++) {
        if (marginal[k] > marginal[best]) best = k;
    }
    const double scale = 1 / std::sqrt(marginal[best]);
    const auto fresh = stabilizer_state(local, m);
    std::vector<Amplitude> out(amp.size());
    for (std::size_t i = 0; i < amp.size(); i++) {
        if (((i & block) >> offset) != best) continue;
        const std::size_t rest = i & ~block;
        for (std::size_t k = 0; k < fresh.size(); k++) out[rest | (k << offset)] = amp[i] * scale * fresh[k];
    }
    amp = std::move(out);
}

namespace {

void check_dimensions(const Circuit &circuit, const StateVector &state) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("circuit has " + std::to_string(circuit.num_qubits()) + " qubits, state has " +
                                    std::to_string(state.num_qubits()));
    }
}

// Probability of the +1 outcome.
double outcome_zero_probability(const StateVector &state, const MeasurePauli &m) {
    return std::clamp((1 + state.expectation(m.observable)) / 2, 0.0, 1.0);
}

bool is_random(double p0) { return p0 <= 1 - 1e-12 && p0 >= 1e-12; }

void finish_measurement(StateVector &state, const MeasurePauli &m, bool outcome, double p0, SvRunResult &result) {
    if (is_random(p0)) {
        result.random_outcomes.push_back(outcome);
        result.probability *= outcome ? 1 - p0 : p0;
    }
    state.project(m.observable, outcome);
    result.record.bits.emplace_back(m.key, outcome);
}

// Everything except measurements.
void apply_instruction(const Instruction &inst, StateVector &state, SvRunResult &result, const SvRunOptions &options) {
    if (auto g = std::get_if<Gate>(&inst)) {
        state.apply(*g);
    } else if (auto ph = std::get_if<PhaseGate>(&inst)) {
        state.apply_phase(ph->p, ph->qubit);
    } else if (std::holds_alternative<Depolarize1>(inst)) {
        throw CapabilityError("state-vector simulation is noiseless; cannot run '" + instruction_text(inst) + "'");
    } else if (auto cc = std::get_if<ClassicallyControlledPauli>(&inst)) {
        if (result.record.bit(cc->key) == cc->required) state.apply_pauli(cc->pauli);
    } else if (auto qec = std::get_if<QecRound>(&inst)) {
        if (!options.check_qec) return;
        for (const auto &s : qec->stabilizers) {
            double e = state.expectation(s);
            if (std::abs(e - 1) > 1e-8) {
                result.record.violations.push_back("QEC round " + qec->label + ": <" + s.str() +
                                                   "> = " + std::to_string(e));
            }
        }
    } else if (auto obs = std::get_if<ObservableCheck>(&inst)) {
        double e = state.expectation(obs->observable);
        if (std::abs(e - obs->expected_sign) > 1e-8) {
            result.record.violations.push_back("observable " + obs->observable.str() + " has expectation " +
                                               std::to_string(e));
        }
    } else if (auto enc = std::get_if<Encode>(&inst)) {
        encode_block(state, enc->offset, enc->stabilizers);
    }
}

void check_norm(const StateVector &state, const Instruction &inst, const SvRunOptions &options) {
    if (options.check_norm && std::abs(state.norm() - 1) > 1e-10) {
        throw std::logic_error("norm drifted to " + std::to_string(state.norm()) + " after '" +
                               instruction_text(inst) + "'");
    }
}

// Runs instructions [begin, end) on one branch; random measurements fork a
// copy that takes outcome 1 while this branch continues with outcome 0.
void explore(const Circuit &circuit, std::size_t begin, StateVector state, SvRunResult result,
             const SvRunOptions &options, std::vector<Branch> &out) {
    const auto &insts = circuit.instructions();
    for (std::size_t i = begin; i < insts.size(); i++) {
        if (auto m = std::get_if<MeasurePauli>(&insts[i])) {
            const double p0 = outcome_zero_probability(state, *m);
            if (is_random(p0)) {
                StateVector other = state;
                SvRunResult other_result = result;
                finish_measurement(other, *m, true, p0, other_result);
                check_norm(other, insts[i], options);
                explore(circuit, i + 1, std::move(other), std::move(other_result), options, out);
            }
            finish_measurement(state, *m, p0 < 1e-12, p0, result);
        } else {
            apply_instruction(insts[i], state, result, options);
        }
        check_norm(state, insts[i], options);
    }
    out.push_back(Branch{std::move(state), std::move(result)});
}

}  // namespace

SvRunResult run(const Circuit &circuit, StateVector &state, Rng &rng, const SvRunOptions &options) {
    check_dimensions(circuit, state);
    SvRunResult result;
    for (const auto &inst : circuit.instructions()) {
        if (auto m = std::get_if<MeasurePauli>(&inst)) {
            const double p0 = outcome_zero_probability(state, *m);
            bool outcome = p0 < 1e-12;
            if (is_random(p0)) {
                if (options.forced) {
                    const std::size_t k = result.random_outcomes.size();
                    outcome = k < options.forced->size() && (*options.forced)[k];
                } else {
                    outcome = to_unit(rng()) >= p0;
                }
            }
            finish_measurement(state, *m, outcome, p0, result);
        } else {
            apply_instruction(inst, state, result, options);
        }
        check_norm(state, inst, options);
    }
    return result;
}

std::vector<Branch> run_all_branches(const Circuit &circuit, const StateVector &initial, const SvRunOptions &options) {
    check_dimensions(circuit, initial);
    std::vector<Branch> out;
    explore(circuit, 0, initial, SvRunResult{}, options, out);
    return out;
}

double state_distance(const std::vector<Amplitude> &a, const std::vector<Amplitude> &b, bool up_to_global_phase) {
    if (a.size() != b.size()) throw std::invalid_argument("compared states differ in size");
    Amplitude phase = 1;
    if (up_to_global_phase) {
        Amplitude inner = 0;
        for (std::size_t i = 0; i < a.size(); i++) inner += std::conj(b[i]) * a[i];
        if (std::abs(inner) > 0) phase = inner / std::abs(inner);
    }
    double dist2 = 0;
    for (std::size_t i = 0; i < a.size(); i++) dist2 += std::norm(a[i] - phase * b[i]);
    return std::sqrt(dist2);
}

bool assert_equiv(const std::vector<Amplitude> &a, const std::vector<Amplitude> &b, double tolerance,
                  bool up_to_global_phase) {
    return state_distance(a, b, up_to_global_phase) <= tolerance;
}

bool assert_equiv(const StateVector &a, const StateVector &b, double tolerance, bool up_to_global_phase) {
    return assert_equiv(a.amplitudes(), b.amplitudes(), tolerance, up_to_global_phase);
}

std::vector<Amplitude> logical_readout(const RegisterLayout &layout, const std::vector<std::size_t> &segments,
                                       const StateVector &state, double tolerance) {
    const std::size_t n = state.num_qubits();
    if (layout.num_qubits() != n) throw std::invalid_argument("layout and state sizes differ");
    // Contiguous qubit ranges copied into the data index or the environment index.
    struct Range {
        std::size_t offset, size, dest;
    };
    std::vector<Range> data_ranges, env_ranges;
    std::vector<bool> is_data(n, false);
    std::size_t nd = 0, k_total = 0;
    for (auto s : segments) {
        const auto &seg = layout.segment(s);
        data_ranges.push_back({seg.offset, seg.size(), nd});
        for (std::size_t q = seg.offset; q < seg.offset + seg.size(); q++) is_data[q] = true;
        nd += seg.size();
        k_total += seg.code.k;
    }
    std::size_t ne = 0;
    for (std::size_t q = 0; q < n; q++) {
        if (is_data[q]) continue;
        if (!env_ranges.empty() && env_ranges.back().offset + env_ranges.back().size == q) {
            env_ranges.back().size++;
        } else {
            env_ranges.push_back({q, 1, ne});
        }
        ne++;
    }
    auto gather = [](std::size_t i, const std::vector<Range> &ranges) {
        std::size_t out = 0;
        for (const auto &r : ranges) out |= ((i >> r.offset) & ((std::size_t{1} << r.size) - 1)) << r.dest;
        return out;
    };
    const std::size_t num_logical = std::size_t{1} << k_total;
    // Logical basis states of the data register, first segment in the low bits.
    std::vector<StateVector> basis;
    for (std::size_t x = 0; x < num_logical; x++) {
        StateVector v(0);
        std::size_t shift = k_total;
        for (auto s : segments) {
            const auto &code = layout.segment(s).code;
            shift -= code.k;
            v = v.tensor(logical_basis_state(code, (x >> shift) & ((std::size_t{1} << code.k) - 1)));
        }
        basis.push_back(std::move(v));
    }
    std::vector<std::vector<Amplitude>> w(num_logical, std::vector<Amplitude>(std::size_t{1} << ne, 0));
    for (std::size_t i = 0; i < state.dimension(); i++) {
        const Amplitude a = state[i];
        if (a == Amplitude(0)) continue;
        const std::size_t d = gather(i, data_ranges), e = gather(i, env_ranges);
        for (std::size_t x = 0; x < num_logical; x++) w[x][e] += std::conj(basis[x][d]) * a;
    }
    auto sq = [](const std::vector<Amplitude> &v) {
        double s = 0;
        for (const auto &c : v) s += std::norm(c);
        return s;
    };
    std::size_t best = 0;
    for (std::size_t x = 1; x < num_logical; x++) {
        if (sq(w[x]) > sq(w[best])) best = x;
    }
    const double nb = std::sqrt(sq(w[best]));
    if (nb < 1e-12) throw std::runtime_error("logical readout: the data has no overlap with the code space");
    std::vector<Amplitude> out(num_logical);
    double total = 0;
    for (std::size_t x = 0; x < num_logical; x++) {
        Amplitude c = 0;
        for (std::size_t e = 0; e < w[x].size(); e++) c += std::conj(w[best][e]) * w[x][e];
        out[x] = c / nb;
        total += std::norm(out[x]);
    }
    const double expected = state.norm() * state.norm();
    if (!(std::abs(total - expected) <= tolerance)) {
        throw std::runtime_error("logical readout lost weight " + std::to_string(expected - total) +
                                 ": the data left the code space or is entangled with other registers");
    }
    const double k = 1 / std::sqrt(total);
    for (auto &c : out) c *= k;
    return out;
}

std::vector<Amplitude> logical_readout(const StabilizerCode &code, const StateVector &state, double tolerance) {
    RegisterLayout layout;
    layout.add(Role::C1, "data", code);
    return logical_readout(layout, {0}, state, tolerance);
}

StateVector layout_state(const RegisterLayout &layout,
                         const std::vector<std::pair<std::size_t, std::vector<Amplitude>>> &logical_inputs) {
    check_width(layout.num_qubits());
    StateVector out(0);
    for (std::size_t s = 0; s < layout.segments().size(); s++) {
        const auto &seg = layout.segment(s);
        const std::vector<Amplitude> *amps = nullptr;
        for (const auto &[idx, a] : logical_inputs) {
            if (idx == s) amps = &a;
        }
        out = out.tensor(amps ? encode_logical(seg.code, *amps) : StateVector(seg.size()));
    }
    return out;
}

std::vector<Amplitude> random_logical_amplitudes(std::size_t count, Rng &rng) {
    std::normal_distribution<double> g;
    std::vector<Amplitude> v(count);
    double total = 0;
    for (auto &c : v) {
        c = Amplitude(g(rng), g(rng));
        total += std::norm(c);
    }
    for (auto &c : v) c /= std::sqrt(total);
    return v;
}

namespace {

// Logical j of a k-qubit amplitude vector lives at bit k - 1 - j.
std::size_t logical_bit(std::size_t k, std::size_t j) { return std::size_t{1} << (k - 1 - j); }

std::vector<Amplitude> logical_h(std::vector<Amplitude> v, std::size_t k, std::size_t j) {
    const auto m = logical_bit(k, j);
    const double r = 1 / std::sqrt(2.0);
    for (std::size_t x = 0; x < v.size(); x++) {
        if (x & m) continue;
        Amplitude a = v[x], b = v[x | m];
        v[x] = (a + b) * r;
        v[x | m] = (a - b) * r;
    }
    return v;
}

std::vector<Amplitude> logical_controlled(std::vector<Amplitude> v, std::size_t k, std::size_t c, std::size_t t,
                                          FlipKind kind) {
    const auto mc = logical_bit(k, c), mt = logical_bit(k, t);
    for (std::size_t x = 0; x < v.size(); x++) {
        if (!(x & mc)) continue;
        if (kind == FlipKind::Z) {
            if (x & mt) v[x] = -v[x];
        } else if (!(x & mt)) {
            std::swap(v[x], v[x | mt]);
        }
    }
    return v;
}

std::vector<Amplitude> logical_phase(std::vector<Amplitude> v, std::size_t k, std::size_t j, double p) {
    const auto m = logical_bit(k, j);
    const Amplitude f = std::polar(1.0, M_PI * p);
    for (std::size_t x = 0; x < v.size(); x++) {
        if (x & m) v[x] *= f;
    }
    return v;
}

// sum_x amps[x] |x-bar> over the listed segments (first segment most
// significant), every other segment in |0...0>.
StateVector joint_state(const RegisterLayout &layout, const std::vector<std::size_t> &segments,
                        const std::vector<Amplitude> &amps) {
    std::size_t k_total = 0;
    for (auto s : segments) k_total += layout.segment(s).code.k;
    if (amps.size() != (std::size_t{1} << k_total)) throw std::invalid_argument("wrong number of logical amplitudes");
    check_width(layout.num_qubits());
    std::vector<Amplitude> total(std::size_t{1} << layout.num_qubits(), 0);
    for (std::size_t x = 0; x < amps.size(); x++) {
        if (amps[x] == Amplitude(0)) continue;
        StateVector v(0);
        std::size_t shift = k_total;
        for (std::size_t s = 0; s < layout.segments().size(); s++) {
            const auto &seg = layout.segment(s);
            auto it = std::find(segments.begin(), segments.end(), s);
            if (it == segments.end()) {
                v = v.tensor(StateVector(seg.size()));
                continue;
            }
            // Logical bits of this segment inside x.
            std::size_t before = 0;
            for (auto jt = segments.begin(); jt != it; jt++) before += layout.segment(*jt).code.k;
            shift = k_total - before - seg.code.k;
            v = v.tensor(logical_basis_state(seg.code, (x >> shift) & ((std::size_t{1} << seg.code.k) - 1)));
        }
        for (std::size_t i = 0; i < total.size(); i++) total[i] += amps[x] * v[i];
    }
    StateVector out(layout.num_qubits(), std::move(total));
    out.normalize();
    return out;
}

GateCheck named(std::string gate, std::string effect) {
    GateCheck row;
    row.gate = std::move(gate);
    row.effect = std::move(effect);
    return row;
}

struct GateCase {
    GateCheck row;
    Circuit circuit;
    RegisterLayout layout;
    std::vector<std::size_t> data;
    std::size_t k_total;
    std::function<std::vector<Amplitude>(const std::vector<Amplitude> &)> expected;
};

void run_gate_case(GateCase &c, Rng &rng, std::size_t inputs, double tolerance) {
    c.row.qubits = c.layout.num_qubits();
    if (c.row.qubits > StateVector::kMaxQubits) {
        c.row.skipped = std::to_string(c.row.qubits) + " qubits exceed the state-vector cap";
        return;
    }
    for (std::size_t n = 0; n < inputs; n++) {
        auto v = random_logical_amplitudes(std::size_t{1} << c.k_total, rng);
        const auto expected = c.expected(v);
        for (const auto &b : run_all_branches(c.circuit, joint_state(c.layout, c.data, v))) {
            c.row.branches++;
            double err;
            try {
                err = state_distance(logical_readout(c.layout, c.data, b.state), expected);
            } catch (const std::runtime_error &) {
                err = std::numeric_limits<double>::infinity();
            }
            c.row.max_error = std::max(c.row.max_error, err);
        }
        c.row.inputs++;
    }
    c.row.pass = c.row.max_error <= tolerance;
}

}  // namespace

std::vector<GateCheck> verify_gate_table(const StabilizerCode &c1, const GscParams &params, uint64_t seed,
                                         std::size_t inputs, double tolerance) {
    if (c1.k == 0) throw std::invalid_argument("code " + c1.name + " has no logical qubits");
    const std::size_t k = c1.k;
    const bool same_block = k >= 2;
    const std::size_t j = same_block ? 1 : 0;
    const auto &trivial = registry_code("trivial");
    Rng rng(seed);
    std::vector<GateCase> cases;

    GateCase h{named("H", same_block && k == 2 ? "(a+b, a-b, c+d, c-d)/sqrt2" : "H on logical " + std::to_string(j)),
               hadamard_generic(params, c1, j),
               hadamard_layout(params, c1),
               {1},
               k,
               [&](const std::vector<Amplitude> &v) { return logical_h(v, k, j); }};
    if (k == 1) h.row.effect = "(a+b, a-b)/sqrt2";
    cases.push_back(std::move(h));

    if (same_block) {
        RegisterLayout layout;
        layout.add_gsc("helper", params);
        layout.add_gsc("helper2", params);
        layout.add(Role::C1, "c1", c1);
        cases.push_back({named("CX", k == 2 ? "(a, b, d, c)" : "CX from logical 0 to 1"),
                         controlled_flip_generic(params, c1, c1, FlipKind::X, 0, 1, true),
                         std::move(layout),
                         {2},
                         k,
                         [&](const std::vector<Amplitude> &v) { return logical_controlled(v, k, 0, 1, FlipKind::X); }});
    } else {
        auto layout = flip_layout(params, c1, c1);
        GateCase cx{named("CX", "(a, b, d, c) across two blocks"), Circuit(0), layout, {2, 3}, 2 * k,
                    [&](const std::vector<Amplitude> &v) { return logical_controlled(v, 2 * k, 0, k, FlipKind::X); }};
        if (layout.num_qubits() <= StateVector::kMaxQubits) {
            cx.circuit = controlled_flip_generic(params, c1, c1, FlipKind::X);
        }
        cases.push_back(std::move(cx));
    }

    auto rot_layout = rotation_layout(params, c1, trivial);
    GateCase t{named("T", k == 2 ? "(a, w b, c, w d), w = e^{i pi/4}" : "T on logical " + std::to_string(j)),
               Circuit(0),
               rot_layout,
               {2},
               k,
               [&](const std::vector<Amplitude> &v) { return logical_phase(v, k, j, 0.25); }};
    if (k == 1) t.row.effect = "(a, w b), w = e^{i pi/4}";
    if (rot_layout.num_qubits() <= StateVector::kMaxQubits) t.circuit = z_rotation_generic(params, c1, trivial, 0.25, j);
    cases.push_back(std::move(t));

    std::vector<GateCheck> rows;
    for (auto &c : cases) {
        run_gate_case(c, rng, inputs, tolerance);
        rows.push_back(c.row);
    }
    return rows;
}

GateCheck verify_blueprint(BlueprintKind kind, const StabilizerCode &c1, const StabilizerCode &c2, FlipKind flip,
                           uint64_t seed, std::size_t inputs, double tolerance) {
    const bool is_flip = kind == BlueprintKind::Flip;
    GateCheck row;
    row.gate = is_flip ? (flip == FlipKind::X ? "blueprint-cx" : "blueprint-cz") : "blueprint-h";
    row.effect = is_flip ? "|0>(a|0>|f> + b|1>O|f>) + |1>(a|0>|f> - b|1>O|f>), /sqrt2"
                         : "|0>((a+b)|0> + (b-a)|1>) + |1>((a-b)|0> + (a+b)|1>), /2";
    RegisterLayout layout;
    layout.add(Role::Ancilla, "a", registry_code("trivial"));
    layout.add(Role::C1, "c1", c1);
    if (is_flip) layout.add(Role::C2, "c2", c2);
    row.qubits = layout.num_qubits();
    if (row.qubits > StateVector::kMaxQubits) {
        row.skipped = std::to_string(row.qubits) + " qubits exceed the state-vector cap";
        return row;
    }
    const auto circuit = blueprint_fault_intolerant(kind, c1, is_flip ? std::optional(c2) : std::nullopt, flip);
    const auto pre = circuit.slice(0, *circuit.first_measurement());
    const std::vector<std::size_t> data = is_flip ? std::vector<std::size_t>{1, 2} : std::vector<std::size_t>{1};
    const std::size_t k_total = c1.k + (is_flip ? c2.k : 0);
    const auto x0 = layout.logical_x({1}), z0 = layout.logical_z({1});
    const auto target_op = is_flip ? (flip == FlipKind::X ? layout.logical_x({2}) : layout.logical_z({2})) : x0;
    const double r = 1 / std::sqrt(2.0);
    Rng rng(seed);
    for (std::size_t n = 0; n < inputs; n++) {
        auto v = random_logical_amplitudes(std::size_t{1} << k_total, rng);
        const auto psi = joint_state(layout, data, v);
        std::vector<Amplitude> expected(psi.dimension());
        if (is_flip) {
            auto z_psi = psi;
            z_psi.apply_pauli(z0);
            StateVector p0 = psi, p1 = psi;
            for (std::size_t i = 0; i < psi.dimension(); i++) {
                p0.amplitudes()[i] = (psi[i] + z_psi[i]) / 2.0;
                p1.amplitudes()[i] = (psi[i] - z_psi[i]) / 2.0;
            }
            p1.apply_pauli(target_op);
            for (std::size_t i = 0; i < psi.dimension(); i += 2) {
                expected[i] = (p0[i] + p1[i]) * r;
                expected[i + 1] = (p0[i] - p1[i]) * r;
            }
        } else {
            auto zx = psi;
            zx.apply_pauli(x0);
            zx.apply_pauli(z0);
            for (std::size_t i = 0; i < psi.dimension(); i += 2) {
                expected[i] = (psi[i] + zx[i]) / 2.0;
                expected[i + 1] = (psi[i] - zx[i]) / 2.0;
            }
        }
        StateVector state = psi;
        Rng unused(0);
        run(pre, state, unused);
        row.max_error = std::max(row.max_error, state_distance(state.amplitudes(), expected, false));

        const auto logical = is_flip ? logical_controlled(v, k_total, 0, c1.k, flip) : logical_h(v, c1.k, 0);
        for (const auto &b : run_all_branches(circuit, psi)) {
            row.branches++;
            row.max_error = std::max(row.max_error, state_distance(logical_readout(layout, data, b.state), logical));
        }
        row.inputs++;
    }
    row.pass = row.max_error <= tolerance;
    return row;
}

}  // namespace gscforge
