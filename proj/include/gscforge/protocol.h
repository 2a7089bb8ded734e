#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gscforge/circuit.h"
#include "gscforge/codes.h"

namespace gscforge {

enum class Role { Gsc, C1, C2, Rc, Ancilla };
enum class FlipKind { X, Z };

const char *role_name(Role role);

struct Segment {
    Role role;
    std::string name;
    StabilizerCode code;
    std::size_t offset;
    /// Set for GSC registers.
    std::optional<GscParams> gsc;

    std::size_t size() const { return code.n; }
};

/// A logical qubit of one segment.
struct LogicalRef {
    std::size_t segment;
    std::size_t index = 0;
};

/// A logical qubit given by its full-register X and Z operators.
struct LogicalPair {
    PauliString x;
    PauliString z;
};

/// Contiguous, non-overlapping code blocks laid out in insertion order.
class RegisterLayout {
   public:
    std::size_t add(Role role, std::string name, StabilizerCode code, std::optional<GscParams> gsc = std::nullopt);
    std::size_t add_gsc(std::string name, const GscParams &params);
    /// A bare block of qubits with no code (Shor-extraction ancillas).
    std::size_t add_ancillas(std::string name, std::size_t count);

    const std::vector<Segment> &segments() const { return segments_; }
    const Segment &segment(std::size_t i) const { return segments_.at(i); }
    std::size_t num_qubits() const { return num_qubits_; }
    /// Index of the segment with this name; throws std::out_of_range.
    std::size_t find(const std::string &name) const;
    /// Index of the unique segment holding all of p's support.
    std::size_t segment_of(const PauliString &p) const;

    PauliString embed(std::size_t segment, const PauliString &local) const;
    PauliString logical_x(const LogicalRef &ref) const;
    PauliString logical_z(const LogicalRef &ref) const;
    LogicalPair logical(const LogicalRef &ref) const { return {logical_x(ref), logical_z(ref)}; }
    /// The GSC register viewed as GSCH: logical X = Z-bar_GSC, logical Z = X-bar_GSC.
    LogicalPair gsch_logical(std::size_t segment) const;
    /// Generators of one segment as full-register strings.
    std::vector<PauliString> stabilizers(std::size_t segment) const;

   private:
    std::vector<Segment> segments_;
    std::size_t num_qubits_ = 0;
};

/// GSC register followed by a single target block (role C1).
RegisterLayout gsc_target_layout(const GscParams &params, const StabilizerCode &target);

/// The flip operator O-bar on logical 0 of a segment, as a full-register string.
PauliString flip_operator(const RegisterLayout &layout, std::size_t segment, FlipKind kind);

/// One bit-wise step of the flip controlled by the GSCH register: the j-th
/// factor of `target_op` is applied, controlled by qubit j of subregister s_i.
/// Throws SizingError if b < |target_op|.
Circuit transversal_flip_step(const RegisterLayout &layout, std::size_t gsc_segment, const PauliString &target_op,
                              std::size_t i);
/// Same, on a gsc_target_layout with O-bar = X-bar or Z-bar of the target.
Circuit transversal_flip_step(const RegisterLayout &layout, std::size_t i, FlipKind kind);

/// The a-1 GSC X-stabilizers after step i: row j is g_x(j), times target_op
/// when j == i. Rows are full-register strings when `gsc_offset` and the
/// width of target_op place them; the GSC part starts at gsc_offset.
std::vector<PauliString> modified_stabilizers(const GscParams &params, std::size_t i, const PauliString &target_op,
                                              std::size_t gsc_offset = 0);

/// The two-partition code in force after step i of the controlled flip.
struct CombinedCode {
    RegisterLayout layout;
    std::size_t gsc_segment = 0;
    std::size_t target_segment = 1;
    GscParams params;
    std::size_t step = 0;
    PauliString flip;
    /// GSC Z-stabilizers, target stabilizers that are not pure X, the GSC
    /// X-stabilizers (modified at `step`), then the target's pure-X stabilizers.
    std::vector<PauliString> stabilizers;
    std::vector<PauliString> logical_x;
    std::vector<PauliString> logical_z;
    /// Index of the modified row, if any.
    std::optional<std::size_t> modified_row;

    std::size_t num_qubits() const { return layout.num_qubits(); }
    const Segment &gsc() const { return layout.segment(gsc_segment); }
    const Segment &target() const { return layout.segment(target_segment); }
    SymplecticTable table() const { return SymplecticTable{stabilizers}; }
};

/// Builds and checks (rank and pairwise commutation) the combined code.
/// Throws std::invalid_argument when a pair anticommutes.
CombinedCode combined_code(const RegisterLayout &layout, std::size_t gsc_segment, const PauliString &target_op,
                           std::size_t step);
CombinedCode combined_code(const GscParams &params, const StabilizerCode &target, std::size_t step, FlipKind kind);

struct BuildOptions {
    /// Rounds of Shor-style extraction of the GSC-partition stabilizers inlined
    /// after every flip step; 0 emits QEC markers only. Needs an ancilla block.
    std::size_t shor_rounds = 0;
};

/// Incremental builder for the stabilizer-generic gates. Measurement keys are
/// numbered in emission order, so identical call sequences give identical circuits.
class GateBuilder {
   public:
    explicit GateBuilder(RegisterLayout layout, BuildOptions options = {});

    const RegisterLayout &layout() const { return layout_; }
    const Circuit &circuit() const { return circuit_; }
    Circuit take() { return std::move(circuit_); }

    /// Ideal preparation of every logical qubit of a segment in |0> (or |+>).
    void encode(std::size_t segment, bool plus = false);
    /// Transversal logical Pauli.
    void pauli(const PauliString &op);
    std::string measure(const PauliString &op, const std::string &stem = "m");

    /// The a bit-wise steps of the flip of `target_op` controlled by the GSCH
    /// logical of `gsc_segment`, each followed by a QEC round.
    void flip_from_gsch(std::size_t gsc_segment, const PauliString &target_op);
    /// Logical Hadamard on `target` using `helper` (re-encoded to |0>_GSC first).
    void hadamard(std::size_t helper, const LogicalPair &target);
    /// Logical controlled-O from `control` to `target_op`. The first helper
    /// mediates the flip; the second implements the helper's own Hadamard.
    void controlled_flip(std::size_t helper, std::size_t second_helper, const LogicalPair &control,
                         const PauliString &target_op);
    /// Logical Z^p on `target` by teleporting the transversal rotation of the
    /// rotation-code segment `rc`.
    void z_rotation(std::size_t helper, std::size_t second_helper, const LogicalPair &target, std::size_t rc, double p);

    /// Shor-style extraction of one stabilizer using the ancilla block.
    void shor_extraction(const PauliString &stabilizer, std::size_t rounds);

   private:
    std::string next_key(const std::string &stem);
    void require_sized(std::size_t gsc_segment, const PauliString &target_op) const;

    RegisterLayout layout_;
    BuildOptions options_;
    Circuit circuit_;
    std::size_t key_counter_ = 0;
    std::optional<std::size_t> ancilla_segment_;
};

/// The full GSCH-controlled flip on a gsc_target_layout (plus an ancilla block
/// when options.shor_rounds > 0).
Circuit controlled_flip_gsch(const RegisterLayout &layout, FlipKind kind, BuildOptions options = {});

/// Standard layouts: helpers first, then the data registers, then RC.
RegisterLayout hadamard_layout(const GscParams &params, const StabilizerCode &c1);
RegisterLayout flip_layout(const GscParams &params, const StabilizerCode &c1, const StabilizerCode &c2);
RegisterLayout rotation_layout(const GscParams &params, const StabilizerCode &c1, const StabilizerCode &rc);

/// H-bar on logical `logical` of C1 (hadamard_layout).
Circuit hadamard_generic(const GscParams &params, const StabilizerCode &c1, std::size_t logical = 0);
/// Controlled O-bar with control logical `control` of C1 and target logical
/// `target` of C2 (flip_layout). When C1 and C2 are the same code with k >= 2,
/// pass `same_block = true` to act between two logicals of a single C1 block.
Circuit controlled_flip_generic(const GscParams &params, const StabilizerCode &c1, const StabilizerCode &c2,
                                FlipKind kind, std::size_t control = 0, std::size_t target = 0,
                                bool same_block = false);
/// Z-bar^p on logical `logical` of C1 via the rotation code (rotation_layout).
/// Throws CapabilityError if the rotation code has no suitable transversal phase.
Circuit z_rotation_generic(const GscParams &params, const StabilizerCode &c1, const StabilizerCode &rc, double p,
                           std::size_t logical = 0);

/// r rounds of Shor-style extraction of one stabilizer on its own register with
/// weight(stabilizer) ancillas appended after the data qubits.
Circuit shor_syndrome_extraction(const PauliString &stabilizer, std::size_t rounds);

enum class BlueprintKind { Hadamard, Flip };

/// Single-ancilla (non-fault-tolerant) gates. The ancilla is qubit 0, C1
/// follows, then C2 for the flip.
Circuit blueprint_fault_intolerant(BlueprintKind kind, const StabilizerCode &c1,
                                   const std::optional<StabilizerCode> &c2 = std::nullopt,
                                   FlipKind flip = FlipKind::X);
/// Single-ancilla Z-bar^p on logical `logical` of C1: the flip blueprint onto
/// X-bar of the rotation code, its transversal phase, then an X-bar measurement
/// of RC with a Z-bar correction. Layout: ancilla, C1, RC.
Circuit blueprint_z_rotation(const StabilizerCode &c1, const StabilizerCode &rc, double p, std::size_t logical = 0);

}  // namespace gscforge
