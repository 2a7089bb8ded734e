#include "gscforge/protocol.h"

#include <stdexcept>

#include "gscforge/errors.h"

namespace gscforge {

namespace {

GateKind controlled_kind(char pauli) {
    switch (pauli) {
        case 'X':
            return GateKind::CX;
        case 'Y':
            return GateKind::CY;
        case 'Z':
            return GateKind::CZ;
    }
    throw std::invalid_argument("no controlled gate for identity");
}

GateKind single_kind(char pauli) {
    switch (pauli) {
        case 'X':
            return GateKind::X;
        case 'Y':
            return GateKind::Y;
        case 'Z':
            return GateKind::Z;
    }
    throw std::invalid_argument("no gate for identity");
}

// Cat state |0...0> + |1...1> on w qubits: adjacent ZZ pairs and X on all.
std::vector<PauliString> cat_stabilizers(std::size_t w) {
    std::vector<PauliString> out;
    for (std::size_t j = 0; j + 1 < w; j++) {
        PauliString s(w);
        s.set(j, 'Z');
        s.set(j + 1, 'Z');
        out.push_back(std::move(s));
    }
    PauliString all_x(w);
    for (std::size_t j = 0; j < w; j++) all_x.set(j, 'X');
    out.push_back(std::move(all_x));
    return out;
}

const GscParams &gsc_params_of(const Segment &segment) {
    if (!segment.gsc) {
        throw std::invalid_argument("segment '" + segment.name + "' is not a GSC register");
    }
    return *segment.gsc;
}

void require_hermitian(const PauliString &op) {
    if (!op.is_hermitian()) throw std::invalid_argument("flip operator " + op.str() + " is not Hermitian");
}

}  // namespace

const char *role_name(Role role) {
    switch (role) {
        case Role::Gsc:
            return "GSC";
        case Role::C1:
            return "C1";
        case Role::C2:
            return "C2";
        case Role::Rc:
            return "RC";
        case Role::Ancilla:
            return "ANCILLA";
    }
    return "?";
}

std::size_t RegisterLayout::add(Role role, std::string name, StabilizerCode code, std::optional<GscParams> gsc) {
    for (const auto &s : segments_) {
        if (s.name == name) throw std::invalid_argument("duplicate segment name '" + name + "'");
    }
    std::size_t offset = num_qubits_;
    num_qubits_ += code.n;
    segments_.push_back(Segment{role, std::move(name), std::move(code), offset, gsc});
    return segments_.size() - 1;
}

std::size_t RegisterLayout::add_gsc(std::string name, const GscParams &params) {
    return add(Role::Gsc, std::move(name), gsc(params), params);
}

std::size_t RegisterLayout::add_ancillas(std::string name, std::size_t count) {
    StabilizerCode bare;
    bare.name = "ancillas";
    bare.n = count;
    return add(Role::Ancilla, std::move(name), std::move(bare));
}

std::size_t RegisterLayout::find(const std::string &name) const {
    for (std::size_t i = 0; i < segments_.size(); i++) {
        if (segments_[i].name == name) return i;
    }
    throw std::out_of_range("no segment named '" + name + "'");
}

std::size_t RegisterLayout::segment_of(const PauliString &p) const {
    auto support = p.support();
    if (support.empty()) throw std::invalid_argument("identity operator has no segment");
    for (std::size_t i = 0; i < segments_.size(); i++) {
        const auto &s = segments_[i];
        if (support.front() >= s.offset && support.front() < s.offset + s.size()) {
            if (support.back() >= s.offset + s.size()) {
                throw std::invalid_argument("operator " + p.str() + " spans several segments");
            }
            return i;
        }
    }
    throw std::invalid_argument("operator " + p.str() + " lies outside the layout");
}

PauliString RegisterLayout::embed(std::size_t segment, const PauliString &local) const {
    const auto &s = segments_.at(segment);
    if (local.size() != s.size()) {
        throw std::invalid_argument("operator width " + std::to_string(local.size()) + " does not match segment '" +
                                    s.name + "'");
    }
    return local.embedded(num_qubits_, s.offset);
}

PauliString RegisterLayout::logical_x(const LogicalRef &ref) const {
    return embed(ref.segment, segments_.at(ref.segment).code.logical_x.at(ref.index));
}

PauliString RegisterLayout::logical_z(const LogicalRef &ref) const {
    return embed(ref.segment, segments_.at(ref.segment).code.logical_z.at(ref.index));
}

LogicalPair RegisterLayout::gsch_logical(std::size_t segment) const {
    gsc_params_of(segments_.at(segment));
    return {logical_z({segment}), logical_x({segment})};
}

std::vector<PauliString> RegisterLayout::stabilizers(std::size_t segment) const {
    std::vector<PauliString> out;
    for (const auto &g : segments_.at(segment).code.generators) out.push_back(embed(segment, g));
    return out;
}

RegisterLayout gsc_target_layout(const GscParams &params, const StabilizerCode &target) {
    RegisterLayout layout;
    layout.add_gsc("gsc", params);
    layout.add(Role::C1, "c1", target);
    return layout;
}

PauliString flip_operator(const RegisterLayout &layout, std::size_t segment, FlipKind kind) {
    return kind == FlipKind::X ? layout.logical_x({segment}) : layout.logical_z({segment});
}

Circuit transversal_flip_step(const RegisterLayout &layout, std::size_t gsc_segment, const PauliString &target_op,
                              std::size_t i) {
    const auto &seg = layout.segment(gsc_segment);
    const auto &params = gsc_params_of(seg);
    if (i >= params.a) {
        throw std::invalid_argument("subregister index " + std::to_string(i) + " >= a = " + std::to_string(params.a));
    }
    require_hermitian(target_op);
    auto support = target_op.support();
    if (support.size() > params.b) {
        throw SizingError("b = " + std::to_string(params.b) + " is smaller than the flip weight |O| = " +
                          std::to_string(support.size()) + "; need b >= |O|");
    }
    for (auto q : support) {
        if (q >= seg.offset && q < seg.offset + seg.size()) {
            throw std::invalid_argument("flip operator overlaps the controlling GSC register");
        }
    }
    Circuit out(layout.num_qubits());
    const std::size_t first = seg.offset + params.subregister_start(i);
    for (std::size_t j = 0; j < support.size(); j++) {
        out.gate(controlled_kind(target_op.at(support[j])), first + j, support[j]);
    }
    if (target_op.sign()) out.gate(GateKind::Z, first);
    return out;
}

Circuit transversal_flip_step(const RegisterLayout &layout, std::size_t i, FlipKind kind) {
    return transversal_flip_step(layout, 0, flip_operator(layout, 1, kind), i);
}

std::vector<PauliString> modified_stabilizers(const GscParams &params, std::size_t i, const PauliString &target_op,
                                              std::size_t gsc_offset) {
    params.validate();
    if (i >= params.a) {
        throw std::invalid_argument("step " + std::to_string(i) + " >= a = " + std::to_string(params.a));
    }
    std::vector<PauliString> out;
    for (std::size_t j = 0; j + 1 < params.a; j++) {
        auto g = gsc_x_stabilizer(params, j).embedded(target_op.size(), gsc_offset);
        if (j == i) g *= target_op;
        out.push_back(std::move(g));
    }
    return out;
}

CombinedCode combined_code(const RegisterLayout &layout, std::size_t gsc_segment, const PauliString &target_op,
                           std::size_t step) {
    CombinedCode out;
    out.layout = layout;
    out.gsc_segment = gsc_segment;
    out.target_segment = layout.segment_of(target_op);
    out.params = gsc_params_of(layout.segment(gsc_segment));
    out.step = step;
    out.flip = target_op;
    require_hermitian(target_op);
    if (out.target_segment == gsc_segment) {
        throw std::invalid_argument("flip operator acts on the controlling GSC register");
    }

    const auto &g = layout.segment(gsc_segment);
    const auto &t = layout.segment(out.target_segment);
    for (const auto &s : g.code.generators) {
        if (s.has_z_only()) out.stabilizers.push_back(layout.embed(gsc_segment, s));
    }
    std::vector<PauliString> target_x;
    for (const auto &s : t.code.generators) {
        auto full = layout.embed(out.target_segment, s);
        if (s.has_x_only()) {
            target_x.push_back(std::move(full));
        } else {
            out.stabilizers.push_back(std::move(full));
        }
    }
    std::size_t first_x_row = out.stabilizers.size();
    for (auto &s : modified_stabilizers(out.params, step, target_op, g.offset)) out.stabilizers.push_back(std::move(s));
    if (step + 1 < out.params.a) out.modified_row = first_x_row + step;
    for (auto &s : target_x) out.stabilizers.push_back(std::move(s));

    for (std::size_t a = 0; a < out.stabilizers.size(); a++) {
        for (std::size_t b = a + 1; b < out.stabilizers.size(); b++) {
            if (!commutes(out.stabilizers[a], out.stabilizers[b])) {
                throw std::invalid_argument("combined code rows g" + std::to_string(a) + " and g" + std::to_string(b) +
                                            " anticommute; the flip operator is not a logical of the target");
            }
        }
    }
    if (rank_gf2(out.stabilizers) != out.stabilizers.size()) {
        throw std::invalid_argument("combined code rows are dependent");
    }
    for (const auto &seg_index : {gsc_segment, out.target_segment}) {
        const auto &seg = layout.segment(seg_index);
        for (std::size_t k = 0; k < seg.code.k; k++) {
            out.logical_x.push_back(layout.logical_x({seg_index, k}));
            out.logical_z.push_back(layout.logical_z({seg_index, k}));
        }
    }
    return out;
}

CombinedCode combined_code(const GscParams &params, const StabilizerCode &target, std::size_t step, FlipKind kind) {
    auto layout = gsc_target_layout(params, target);
    return combined_code(layout, 0, flip_operator(layout, 1, kind), step);
}

GateBuilder::GateBuilder(RegisterLayout layout, BuildOptions options)
    : layout_(std::move(layout)), options_(options), circuit_(layout_.num_qubits()) {
    for (std::size_t i = 0; i < layout_.segments().size(); i++) {
        if (layout_.segment(i).role == Role::Ancilla) ancilla_segment_ = i;
    }
    if (options_.shor_rounds > 0 && !ancilla_segment_) {
        throw std::invalid_argument("inline Shor extraction needs an ancilla block in the layout");
    }
}

std::string GateBuilder::next_key(const std::string &stem) { return stem + std::to_string(key_counter_++); }

void GateBuilder::encode(std::size_t segment, bool plus) {
    const auto &seg = layout_.segment(segment);
    Encode e;
    e.label = seg.name + (plus ? ":plus" : ":zero");
    e.offset = seg.offset;
    e.stabilizers = seg.code.generators;
    const auto &logicals = plus ? seg.code.logical_x : seg.code.logical_z;
    e.stabilizers.insert(e.stabilizers.end(), logicals.begin(), logicals.end());
    circuit_.append(std::move(e));
}

void GateBuilder::pauli(const PauliString &op) {
    for (auto q : op.support()) circuit_.gate(single_kind(op.at(q)), q);
}

std::string GateBuilder::measure(const PauliString &op, const std::string &stem) {
    auto key = next_key(stem);
    circuit_.append(MeasurePauli{op, key});
    return key;
}

void GateBuilder::require_sized(std::size_t gsc_segment, const PauliString &target_op) const {
    const auto &params = gsc_params_of(layout_.segment(gsc_segment));
    if (target_op.weight() > params.b) {
        throw SizingError("GSC register '" + layout_.segment(gsc_segment).name + "' has b = " +
                          std::to_string(params.b) + " but the flip " + target_op.str() + " has weight " +
                          std::to_string(target_op.weight()) + "; need b >= |O|");
    }
}

void GateBuilder::flip_from_gsch(std::size_t gsc_segment, const PauliString &target_op) {
    require_sized(gsc_segment, target_op);
    const auto &params = gsc_params_of(layout_.segment(gsc_segment));
    for (std::size_t i = 0; i < params.a; i++) {
        circuit_.append(transversal_flip_step(layout_, gsc_segment, target_op, i));
        auto code = combined_code(layout_, gsc_segment, target_op, i);
        if (options_.shor_rounds > 0) {
            const auto &g = layout_.segment(gsc_segment);
            for (const auto &s : code.stabilizers) {
                auto first = s.support().front();
                if (first >= g.offset && first < g.offset + g.size()) shor_extraction(s, options_.shor_rounds);
            }
        }
        circuit_.append(QecRound{"step" + std::to_string(i), std::move(code.stabilizers)});
    }
}

void GateBuilder::hadamard(std::size_t helper, const LogicalPair &target) {
    encode(helper);
    flip_from_gsch(helper, target.x);
    flip_from_gsch(helper, target.z);
    auto key = measure(layout_.logical_z({helper}), "h");
    circuit_.append(ClassicallyControlledPauli{key, true, target.x});
    circuit_.append(ClassicallyControlledPauli{key, false, target.z});
}

void GateBuilder::controlled_flip(std::size_t helper, std::size_t second_helper, const LogicalPair &control,
                                  const PauliString &target_op) {
    require_sized(helper, control.z);
    require_sized(helper, target_op);
    encode(helper);
    flip_from_gsch(helper, control.z);
    hadamard(second_helper, layout_.gsch_logical(helper));
    flip_from_gsch(helper, target_op);
    auto key = measure(layout_.gsch_logical(helper).x, "f");
    circuit_.append(ClassicallyControlledPauli{key, true, control.z});
}

void GateBuilder::z_rotation(std::size_t helper, std::size_t second_helper, const LogicalPair &target, std::size_t rc,
                             double p) {
    const auto &seg = layout_.segment(rc);
    const auto &phase = seg.code.transversal_phase;
    if (!phase) {
        throw CapabilityError("rotation code '" + seg.code.name + "' declares no transversal Z rotation");
    }
    if (!phase->supports(p)) {
        throw CapabilityError("rotation code '" + seg.code.name + "' only supports angles in steps of " +
                              std::to_string(phase->step) + ", got p = " + std::to_string(p));
    }
    encode(rc);
    controlled_flip(helper, second_helper, target, layout_.logical_x({rc}));
    for (std::size_t q = seg.offset; q < seg.offset + seg.size(); q++) {
        circuit_.append(PhaseGate{phase->direction * p, q});
    }
    auto key = measure(layout_.logical_x({rc}), "z");
    circuit_.append(ClassicallyControlledPauli{key, true, target.z});
}

void GateBuilder::shor_extraction(const PauliString &stabilizer, std::size_t rounds) {
    if (rounds == 0) throw std::invalid_argument("Shor extraction needs at least one round");
    if (!ancilla_segment_) throw std::invalid_argument("Shor extraction needs an ancilla block in the layout");
    const auto &anc = layout_.segment(*ancilla_segment_);
    auto support = stabilizer.support();
    if (support.size() > anc.size()) {
        throw SizingError("stabilizer of weight " + std::to_string(support.size()) + " needs that many ancillas, " +
                          "the ancilla block has " + std::to_string(anc.size()));
    }
    for (std::size_t r = 0; r < rounds; r++) {
        circuit_.append(Encode{"cat", anc.offset, cat_stabilizers(support.size())});
        for (std::size_t j = 0; j < support.size(); j++) {
            circuit_.gate(controlled_kind(stabilizer.at(support[j])), anc.offset + j, support[j]);
        }
        if (stabilizer.sign()) circuit_.gate(GateKind::Z, anc.offset);
        for (std::size_t j = 0; j < support.size(); j++) {
            measure(PauliString::single(layout_.num_qubits(), anc.offset + j, 'X'), "s");
        }
    }
}

Circuit controlled_flip_gsch(const RegisterLayout &layout, FlipKind kind, BuildOptions options) {
    std::size_t target = 0;
    for (std::size_t i = 0; i < layout.segments().size(); i++) {
        auto role = layout.segment(i).role;
        if (role != Role::Gsc && role != Role::Ancilla) {
            target = i;
            break;
        }
    }
    if (layout.segment(0).role != Role::Gsc || target == 0) {
        throw std::invalid_argument("controlled_flip_gsch needs a GSC register followed by a target");
    }
    GateBuilder builder(layout, options);
    builder.flip_from_gsch(0, flip_operator(layout, target, kind));
    return builder.take();
}

RegisterLayout hadamard_layout(const GscParams &params, const StabilizerCode &c1) {
    RegisterLayout layout;
    layout.add_gsc("helper", params);
    layout.add(Role::C1, "c1", c1);
    return layout;
}

RegisterLayout flip_layout(const GscParams &params, const StabilizerCode &c1, const StabilizerCode &c2) {
    RegisterLayout layout;
    layout.add_gsc("helper", params);
    layout.add_gsc("helper2", params);
    layout.add(Role::C1, "c1", c1);
    layout.add(Role::C2, "c2", c2);
    return layout;
}

RegisterLayout rotation_layout(const GscParams &params, const StabilizerCode &c1, const StabilizerCode &rc) {
    RegisterLayout layout;
    layout.add_gsc("helper", params);
    layout.add_gsc("helper2", params);
    layout.add(Role::C1, "c1", c1);
    layout.add(Role::Rc, "rc", rc);
    return layout;
}

Circuit hadamard_generic(const GscParams &params, const StabilizerCode &c1, std::size_t logical) {
    auto layout = hadamard_layout(params, c1);
    GateBuilder builder(layout);
    builder.hadamard(0, layout.logical({1, logical}));
    return builder.take();
}

Circuit controlled_flip_generic(const GscParams &params, const StabilizerCode &c1, const StabilizerCode &c2,
                                FlipKind kind, std::size_t control, std::size_t target, bool same_block) {
    RegisterLayout layout;
    if (same_block) {
        layout.add_gsc("helper", params);
        layout.add_gsc("helper2", params);
        layout.add(Role::C1, "c1", c1);
    } else {
        layout = flip_layout(params, c1, c2);
    }
    std::size_t target_segment = same_block ? 2 : 3;
    LogicalRef target_ref{target_segment, target};
    auto op = kind == FlipKind::X ? layout.logical_x(target_ref) : layout.logical_z(target_ref);
    GateBuilder builder(layout);
    builder.controlled_flip(0, 1, layout.logical({2, control}), op);
    return builder.take();
}

Circuit z_rotation_generic(const GscParams &params, const StabilizerCode &c1, const StabilizerCode &rc, double p,
                           std::size_t logical) {
    auto layout = rotation_layout(params, c1, rc);
    GateBuilder builder(layout);
    builder.z_rotation(0, 1, layout.logical({2, logical}), 3, p);
    return builder.take();
}

Circuit shor_syndrome_extraction(const PauliString &stabilizer, std::size_t rounds) {
    if (rounds == 0) throw std::invalid_argument("Shor extraction needs at least one round");
    RegisterLayout layout;
    StabilizerCode data;
    data.name = "data";
    data.n = stabilizer.size();
    layout.add(Role::C1, "data", data);
    layout.add_ancillas("ancilla", stabilizer.weight());
    GateBuilder builder(layout);
    builder.shor_extraction(layout.embed(0, stabilizer), rounds);
    return builder.take();
}

Circuit blueprint_fault_intolerant(BlueprintKind kind, const StabilizerCode &c1, const std::optional<StabilizerCode> &c2,
                                   FlipKind flip) {
    RegisterLayout layout;
    layout.add(Role::Ancilla, "a", registry_code("trivial"));
    layout.add(Role::C1, "c1", c1);
    if (kind == BlueprintKind::Flip) {
        if (!c2) throw std::invalid_argument("the flip blueprint needs a target code");
        layout.add(Role::C2, "c2", *c2);
    }
    Circuit out(layout.num_qubits());
    auto controlled = [&](const PauliString &op) {
        for (auto q : op.support()) out.gate(controlled_kind(op.at(q)), 0, q);
        if (op.sign()) out.gate(GateKind::Z, 0);
    };
    out.append(Encode{"a:zero", 0, {PauliString::from_text("Z")}});
    const auto c1_x = layout.logical_x({1});
    const auto c1_z = layout.logical_z({1});
    out.gate(GateKind::H, 0);
    if (kind == BlueprintKind::Hadamard) {
        controlled(c1_x);
        controlled(c1_z);
        out.gate(GateKind::H, 0);
        out.append(MeasurePauli{PauliString::single(layout.num_qubits(), 0, 'Z'), "a"});
        out.append(ClassicallyControlledPauli{"a", true, c1_x});
        out.append(ClassicallyControlledPauli{"a", false, c1_z});
    } else {
        controlled(c1_z);
        out.gate(GateKind::H, 0);
        controlled(flip == FlipKind::X ? layout.logical_x({2}) : layout.logical_z({2}));
        out.gate(GateKind::H, 0);
        out.append(MeasurePauli{PauliString::single(layout.num_qubits(), 0, 'Z'), "a"});
        out.append(ClassicallyControlledPauli{"a", true, c1_z});
    }
    return out;
}

Circuit blueprint_z_rotation(const StabilizerCode &c1, const StabilizerCode &rc, double p, std::size_t logical) {
    const auto &phase = rc.transversal_phase;
    if (!phase || !phase->supports(p)) {
        throw CapabilityError("rotation code '" + rc.name + "' has no transversal Z rotation by " + std::to_string(p));
    }
    RegisterLayout layout;
    layout.add(Role::Ancilla, "a", registry_code("trivial"));
    layout.add(Role::C1, "c1", c1);
    layout.add(Role::Rc, "rc", rc);
    const std::size_t n = layout.num_qubits();
    const auto c1_z = layout.logical_z({1, logical});
    const auto rc_x = layout.logical_x({2});
    Circuit out(n);
    auto controlled = [&](const PauliString &op) {
        for (auto q : op.support()) out.gate(controlled_kind(op.at(q)), 0, q);
        if (op.sign()) out.gate(GateKind::Z, 0);
    };
    out.append(Encode{"a:zero", 0, {PauliString::from_text("Z")}});
    auto rc_zero = rc.generators;
    rc_zero.insert(rc_zero.end(), rc.logical_z.begin(), rc.logical_z.end());
    out.append(Encode{"rc:zero", layout.segment(2).offset, rc_zero});
    out.gate(GateKind::H, 0);
    controlled(c1_z);
    out.gate(GateKind::H, 0);
    controlled(rc_x);
    out.gate(GateKind::H, 0);
    out.append(MeasurePauli{PauliString::single(n, 0, 'Z'), "a"});
    out.append(ClassicallyControlledPauli{"a", true, c1_z});
    for (std::size_t q = layout.segment(2).offset; q < n; q++) out.append(PhaseGate{phase->direction * p, q});
    out.append(MeasurePauli{rc_x, "z"});
    out.append(ClassicallyControlledPauli{"z", true, c1_z});
    return out;
}

}  // namespace gscforge
