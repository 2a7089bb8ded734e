#include "gscforge/overhead.h"

#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace gscforge {

std::size_t OverheadParams::t_gsc() const {
    std::size_t d = a < b ? a : b;
    return (d - 1) / 2;
}

void OverheadParams::validate() const {
    if (a < 3 || b < 3) throw std::invalid_argument("overhead model needs a, b >= 3");
    if (r < 1) throw std::invalid_argument("overhead model needs r >= 1");
    if (d_c1 > n_c1) throw std::invalid_argument("d_C1 cannot exceed n_C1");
    if (flip_weight == 0) throw std::invalid_argument("the flipped logical must have weight >= 1");
}

OverheadParams overhead_params(const StabilizerCode &c1, const StabilizerCode &rc, const GscParams &gsc,
                               std::size_t r) {
    OverheadParams p;
    p.a = gsc.a;
    p.b = gsc.b;
    p.n_c1 = c1.n;
    p.d_c1 = c1.distance.value_or(std::min(gsc.distance(), c1.n));
    p.n_rc = rc.n;
    p.r = r;
    for (const auto *code : {&c1, &rc}) {
        if (!code->logical_x.empty()) p.flip_weight = std::max(p.flip_weight, code->logical_x.front().weight());
    }
    for (const auto &g : rc.generators) {
        p.rc_stabilizer_weight += g.weight();
        p.rc_max_weight = std::max(p.rc_max_weight, g.weight());
    }
    p.validate();
    return p;
}

std::size_t n2_gsc(const OverheadParams &p) {
    p.validate();
    return p.r * (2 * p.a * (p.b - 1) + 2 * p.b * (p.a - 1));
}

std::size_t n2_rc(const OverheadParams &p) { return p.r * p.rc_stabilizer_weight; }

std::size_t n2_controlled_flip(const OverheadParams &p) { return p.a * (p.b + n2_gsc(p) + p.flip_weight); }

std::size_t n2_controlled_flip_as_built(const OverheadParams &p) {
    return p.a * p.flip_weight + p.a * n2_gsc(p) + (p.a - 1) * p.r * p.flip_weight;
}

std::size_t n2_hadamard(const OverheadParams &p) { return 2 * n2_controlled_flip(p); }

std::size_t n2_flip_c1_c2(const OverheadParams &p) { return 2 * n2_controlled_flip(p) + n2_hadamard(p); }

std::size_t n2_z_rotation(const OverheadParams &p) { return 2 * n2_flip_c1_c2(p) + n2_gsc(p) + n2_rc(p); }

std::size_t n1_gsc(const OverheadParams &p) {
    p.validate();
    return p.t_gsc();
}

std::size_t n1_controlled_flip(const OverheadParams &p) { return p.a * n1_gsc(p); }

std::size_t n1_hadamard(const OverheadParams &p) { return 2 * n1_controlled_flip(p); }

std::size_t n1_flip_c1_c2(const OverheadParams &p) { return 2 * n1_controlled_flip(p) + n1_hadamard(p); }

std::size_t n1_z_rotation(const OverheadParams &p) {
    // RC corrects as many errors as the GSC does.
    return 2 * n1_flip_c1_c2(p) + p.n_rc + 2 * n1_gsc(p);
}

std::size_t qubits_gsc_register(const OverheadParams &p) {
    p.validate();
    return p.a * p.b + 2 * p.b + p.flip_weight;
}

std::size_t qubits_rc_register(const OverheadParams &p) { return p.n_rc + p.rc_max_weight; }

std::size_t qubits_hadamard(const OverheadParams &p) { return qubits_gsc_register(p); }

std::size_t qubits_flip_c1_c2(const OverheadParams &p) { return 2 * qubits_gsc_register(p); }

std::size_t qubits_z_rotation(const OverheadParams &p) { return 2 * qubits_gsc_register(p) + qubits_rc_register(p); }

std::size_t qec_rounds(const OverheadParams &p) {
    p.validate();
    return p.a;
}

std::size_t triorthogonal_qubits(std::size_t d, double c) {
    if (d < 2) throw std::invalid_argument("triorthogonal bound needs d >= 2");
    if (!(c > 0)) throw std::invalid_argument("triorthogonal bound needs c > 0");
    const double l = std::log(static_cast<double>(d));
    return static_cast<std::size_t>(std::ceil(c * static_cast<double>(d * d) * l * l));
}

std::size_t count_n2_gsc(const GscParams &gsc_params, std::size_t r) {
    std::size_t total = 0;
    for (const auto &g : gsc(gsc_params).generators) total += shor_syndrome_extraction(g, r).two_qubit_gate_count();
    return total;
}

std::size_t count_n2_controlled_flip(const GscParams &gsc_params, std::size_t r, const StabilizerCode &target,
                                     FlipKind kind) {
    auto layout = gsc_target_layout(gsc_params, target);
    const auto flip = flip_operator(layout, 1, kind);
    layout.add_ancillas("ancilla", 2 * gsc_params.b + flip.weight());
    return controlled_flip_gsch(layout, kind, BuildOptions{r}).two_qubit_gate_count();
}

std::string overhead_json(const OverheadParams &p) {
    p.validate();
    nlohmann::ordered_json j;
    j["schema"] = "gsc-forge/overhead/v1";
    j["params"] = {{"a", p.a},          {"b", p.b},
                   {"n_c1", p.n_c1},    {"d_c1", p.d_c1},
                   {"n_rc", p.n_rc},    {"n_mc", p.n_mc()},
                   {"r", p.r},          {"flip_weight", p.flip_weight},
                   {"t_gsc", p.t_gsc()}};
    j["n2"] = {{"gsc", n2_gsc(p)},
               {"rc", n2_rc(p)},
               {"controlled_flip_gsch", n2_controlled_flip(p)},
               {"controlled_flip_gsch_as_built", n2_controlled_flip_as_built(p)},
               {"hadamard", n2_hadamard(p)},
               {"controlled_flip", n2_flip_c1_c2(p)},
               {"z_rotation", n2_z_rotation(p)}};
    j["n1"] = {{"gsc", n1_gsc(p)},
               {"controlled_flip_gsch", n1_controlled_flip(p)},
               {"hadamard", n1_hadamard(p)},
               {"controlled_flip", n1_flip_c1_c2(p)},
               {"z_rotation", n1_z_rotation(p)}};
    j["qubits"] = {{"gsc_register", qubits_gsc_register(p)},
                   {"rc_register", qubits_rc_register(p)},
                   {"hadamard", qubits_hadamard(p)},
                   {"controlled_flip", qubits_flip_c1_c2(p)},
                   {"z_rotation", qubits_z_rotation(p)}};
    j["qec_rounds"] = qec_rounds(p);
    j["bounds"] = {{"n2_gsc", "O(n_MC^3)"},
                   {"n2_rc", "O(n_RC^3)"},
                   {"n2_controlled_flip_gsch", "O(n_MC^4)"},
                   {"n2_hadamard", "O(n_C1^4)"},
                   {"n2_controlled_flip", "O(n_C1^4)"},
                   {"n2_z_rotation", "O(n_MC^4)"},
                   {"n1_t", "O(d_C1^2 + n_TC)"},
                   {"qubits_hadamard", "O(n_C1^2)"},
                   {"qubits_controlled_flip", "O(n_C1^2)"},
                   {"qubits_z_rotation", "O(n_MC^2)"}};
    return j.dump(2);
}

}  // namespace gscforge
