#pragma once

#include <cstddef>
#include <string>

#include "gscforge/codes.h"
#include "gscforge/protocol.h"

namespace gscforge {

/// Inputs of the resource model.
struct OverheadParams {
    std::size_t a = 3;
    std::size_t b = 3;
    std::size_t n_c1 = 0;
    std::size_t d_c1 = 0;
    std::size_t n_rc = 0;
    /// Shor-style measurement rounds per QEC round.
    std::size_t r = 1;
    /// |O-bar_MC|, the weight of the flipped logical.
    std::size_t flip_weight = 0;
    /// Sum of the RC generator weights (double-qubit gates of one RC extraction round).
    std::size_t rc_stabilizer_weight = 0;
    /// Largest RC generator weight (ancillas for an RC extraction).
    std::size_t rc_max_weight = 0;

    std::size_t n_mc() const { return n_c1 > n_rc ? n_c1 : n_rc; }
    /// floor((min(a, b) - 1) / 2).
    std::size_t t_gsc() const;
    /// Throws std::invalid_argument unless a, b >= 3, r >= 1, d_c1 <= n_c1 and
    /// flip_weight >= 1.
    void validate() const;
};

/// Parameters for C1 and RC taken from the codes. The flip weight is the
/// larger weight of X-bar on C1 and RC, and d_c1 falls back to min(a, b).
OverheadParams overhead_params(const StabilizerCode &c1, const StabilizerCode &rc, const GscParams &gsc,
                               std::size_t r);

/// r (2 a (b - 1) + 2 b (a - 1)).
std::size_t n2_gsc(const OverheadParams &params);
/// r times the total RC generator weight.
std::size_t n2_rc(const OverheadParams &params);
/// a (b + N2_GSC + |O|), evaluated exactly.
std::size_t n2_controlled_flip(const OverheadParams &params);
/// The two-qubit gates emitted by controlled_flip_gsch with r inlined Shor
/// rounds: a |O| flip gates, a N2_GSC, and r |O| for the modified stabilizer
/// after each of the first a - 1 steps (the last step leaves none).
std::size_t n2_controlled_flip_as_built(const OverheadParams &params);
std::size_t n2_hadamard(const OverheadParams &params);
std::size_t n2_flip_c1_c2(const OverheadParams &params);
std::size_t n2_z_rotation(const OverheadParams &params);

std::size_t n1_gsc(const OverheadParams &params);
std::size_t n1_controlled_flip(const OverheadParams &params);
std::size_t n1_hadamard(const OverheadParams &params);
std::size_t n1_flip_c1_c2(const OverheadParams &params);
std::size_t n1_z_rotation(const OverheadParams &params);

/// ab + 2b + |O|: GSC data plus ancillas for the modified X-stabilizer.
std::size_t qubits_gsc_register(const OverheadParams &params);
/// n_RC plus ancillas for its largest generator.
std::size_t qubits_rc_register(const OverheadParams &params);
std::size_t qubits_hadamard(const OverheadParams &params);
std::size_t qubits_flip_c1_c2(const OverheadParams &params);
std::size_t qubits_z_rotation(const OverheadParams &params);
/// Extra QEC rounds of one GSCH-controlled flip: one per step.
std::size_t qec_rounds(const OverheadParams &params);

/// ceil(c d^2 ln^2 d), an explicit instance of the asymptotic size bound of a
/// triorthogonal code of distance d. Throws std::invalid_argument unless d >= 2
/// and c > 0.
std::size_t triorthogonal_qubits(std::size_t d, double c);

/// Two-qubit gates of r-round Shor extraction of every GSC generator.
std::size_t count_n2_gsc(const GscParams &gsc, std::size_t r);
/// Two-qubit gates of controlled_flip_gsch on GSC + target with r inlined Shor
/// rounds. Cat-state preparation is an Encode and is not counted.
std::size_t count_n2_controlled_flip(const GscParams &gsc, std::size_t r, const StabilizerCode &target,
                                     FlipKind kind = FlipKind::X);

/// The full report as versioned JSON ("schema": "gsc-forge/overhead/v1").
std::string overhead_json(const OverheadParams &params);

}  // namespace gscforge
