#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gscforge/circuit.h"
#include "gscforge/codes.h"
#include "gscforge/protocol.h"
#include "gscforge/stabsim.h"

namespace gscforge {

using Amplitude = std::complex<double>;

/// Dense pure state over n <= 24 qubits. Qubit q is bit q of the basis index.
class StateVector {
   public:
    static constexpr std::size_t kMaxQubits = 24;

    /// |0...0>.
    explicit StateVector(std::size_t num_qubits);
    /// Takes the amplitudes as given (size must be 2^n).
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const { return n_; }
    std::size_t dimension() const { return amp_.size(); }
    const std::vector<Amplitude> &amplitudes() const { return amp_; }
    std::vector<Amplitude> &amplitudes() { return amp_; }
    Amplitude operator[](std::size_t i) const { return amp_[i]; }

    double norm() const;
    /// Throws std::domain_error when the norm is zero.
    void normalize();

    void apply(const Gate &gate);
    /// diag(1, e^{i pi p}) on one qubit.
    void apply_phase(double p, std::size_t qubit);
    void apply_pauli(const PauliString &p);
    /// <psi| P |psi>, real for Hermitian P.
    double expectation(const PauliString &p) const;
    /// Replaces the state by (psi + s P psi) / 2 with s = +1 (outcome 0) or -1
    /// (outcome 1) and returns the probability of that outcome before renormalizing.
    double project(const PauliString &p, bool outcome);

    /// |other> (x) |this>: the other state occupies the new high qubits.
    StateVector tensor(const StateVector &high) const;

   private:
    std::size_t n_;
    std::vector<Amplitude> amp_;
};

/// The state sum_x amplitudes[x] |x-bar> of a code, where |0-bar> is the +1
/// eigenstate of every generator and Z-bar, and |x-bar> applies X-bar_j for
/// each set bit. Logical 0 is the most significant bit of x, so for k = 2 the
/// order is |00>, |01>, |10>, |11>. Amplitudes are normalized first.
StateVector encode_logical(const StabilizerCode &code, const std::vector<Amplitude> &amplitudes);
/// Unnormalized linear combinations are often handier: |x-bar> itself.
StateVector logical_basis_state(const StabilizerCode &code, std::size_t x);

/// Replaces qubits [offset, offset + n) by the +1 eigenstate of the local
/// operators. The discarded block is collapsed onto its most likely basis
/// pattern, which leaves the rest unchanged whenever the block was a product.
void encode_block(StateVector &state, std::size_t offset, const std::vector<PauliString> &local);

struct SvRunOptions {
    /// Outcomes for the random measurements in order; missing entries are 0.
    /// When unset, outcomes are drawn from rng with Born probabilities.
    std::optional<std::vector<bool>> forced;
    /// Check every QecRound stabilizer has expectation +1.
    bool check_qec = false;
    /// Check the norm stays 1 within 1e-10 after every instruction.
    bool check_norm = false;
};

struct SvRunResult {
    MeasurementRecord record;
    /// Outcomes of the measurements that were not deterministic, in order.
    std::vector<bool> random_outcomes;
    /// Probability of this sequence of random outcomes.
    double probability = 1.0;
};

/// Applies the circuit exactly. Depolarize1 raises CapabilityError.
SvRunResult run(const Circuit &circuit, StateVector &state, Rng &rng, const SvRunOptions &options = {});

struct Branch {
    StateVector state;
    SvRunResult result;
};

/// Every measurement branch of the circuit from `initial`, each with its
/// final state and probability.
std::vector<Branch> run_all_branches(const Circuit &circuit, const StateVector &initial,
                                     const SvRunOptions &options = {});

/// min over unit phases phi of ||a - phi b|| <= tolerance (plain distance when
/// up_to_global_phase is false). Sizes must match.
bool assert_equiv(const std::vector<Amplitude> &a, const std::vector<Amplitude> &b, double tolerance,
                  bool up_to_global_phase = true);
bool assert_equiv(const StateVector &a, const StateVector &b, double tolerance, bool up_to_global_phase = true);
/// The distance assert_equiv compares against its tolerance.
double state_distance(const std::vector<Amplitude> &a, const std::vector<Amplitude> &b, bool up_to_global_phase = true);

/// Normalized complex Gaussian amplitudes.
std::vector<Amplitude> random_logical_amplitudes(std::size_t count, Rng &rng);

/// Logical amplitudes of the listed data segments (logical 0 of the first
/// segment most significant), with everything else treated as an environment
/// in a product state. Throws std::runtime_error if the data leaks out of the
/// code space or is entangled with the environment beyond `tolerance`.
std::vector<Amplitude> logical_readout(const RegisterLayout &layout, const std::vector<std::size_t> &segments,
                                       const StateVector &state, double tolerance = 1e-8);
/// The whole state as one code block.
std::vector<Amplitude> logical_readout(const StabilizerCode &code, const StateVector &state, double tolerance = 1e-8);

/// Product of encode_logical states of every segment, laid out as in `layout`.
/// Segments without an entry are left in |0...0>.
StateVector layout_state(const RegisterLayout &layout,
                         const std::vector<std::pair<std::size_t, std::vector<Amplitude>>> &logical_inputs);

/// One row of a gate check: every branch of every random input compared with
/// the expected logical action.
struct GateCheck {
    std::string gate;
    std::string effect;
    std::size_t qubits = 0;
    std::size_t inputs = 0;
    std::size_t branches = 0;
    double max_error = 0;
    bool pass = false;
    /// Set when the row was not run (e.g. the layout exceeds the qubit cap).
    std::string skipped;
};

/// H-bar, CX-bar and T-bar (trivial rotation code) on C1 with GSC helpers of
/// the given shape. For k >= 2 the gates act on logical 1 (CX-bar from logical
/// 0 to 1 inside the block); for k = 1 on logical 0, with CX-bar between two
/// C1 blocks.
std::vector<GateCheck> verify_gate_table(const StabilizerCode &c1, const GscParams &params, uint64_t seed,
                                         std::size_t inputs = 5, double tolerance = 1e-9);

/// The single-ancilla blueprint: its pre-measurement state against the
/// closed-form expansion, and the logical action of every completed branch.
GateCheck verify_blueprint(BlueprintKind kind, const StabilizerCode &c1, const StabilizerCode &c2, FlipKind flip,
                           uint64_t seed, std::size_t inputs = 5, double tolerance = 1e-10);

}  // namespace gscforge
