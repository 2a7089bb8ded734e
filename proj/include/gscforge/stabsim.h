#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gscforge/circuit.h"
#include "gscforge/codes.h"
#include "gscforge/decoder.h"
#include "gscforge/protocol.h"

namespace gscforge {

using Rng = std::mt19937_64;

/// Counter-based mixing; seed for shot `index` of a run with `base`.
uint64_t splitmix64(uint64_t x);
uint64_t shot_seed(uint64_t base, uint64_t index);
/// Uniform double in [0, 1) from the top 53 bits.
inline double to_unit(uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

/// Aaronson-Gottesman stabilizer tableau over n qubits, starting in |0...0>.
class Tableau {
   public:
    explicit Tableau(std::size_t num_qubits);

    std::size_t num_qubits() const { return n_; }
    const std::vector<PauliString> &stabilizers() const { return stabilizers_; }
    const std::vector<PauliString> &destabilizers() const { return destabilizers_; }

    void h(std::size_t q);
    void s(std::size_t q);
    void s_dag(std::size_t q);
    void x(std::size_t q);
    void y(std::size_t q);
    void z(std::size_t q);
    void cx(std::size_t c, std::size_t t);
    void cy(std::size_t c, std::size_t t);
    void cz(std::size_t c, std::size_t t);
    void apply(const Gate &gate);
    /// Applies a Pauli operator (signs of anticommuting rows flip).
    void apply_pauli(const PauliString &p);

    /// Outcome bit (1 for -1) when p has a definite value, else nullopt.
    std::optional<bool> peek(const PauliString &p) const;
    /// Projective measurement of a Hermitian Pauli; random outcomes use rng.
    bool measure(const PauliString &p, Rng &rng);
    /// Measurement with the outcome forced when it is random.
    bool measure_forced(const PauliString &p, bool outcome_if_random);

    /// Replaces qubits [offset, offset + n) by the +1 eigenstate of the local
    /// operators (n independent commuting Paulis on n qubits).
    void encode(std::size_t offset, const std::vector<PauliString> &local, Rng &rng);

   private:
    void row_gate(PauliString &row, const Gate &gate) const;
    bool collapse(const PauliString &p, std::size_t pivot, bool outcome);

    std::size_t n_;
    std::vector<PauliString> stabilizers_;
    std::vector<PauliString> destabilizers_;
};

/// Conjugates a Pauli frame through a Clifford gate, dropping signs.
void propagate_frame(PauliString &frame, const Gate &gate);

struct RunOptions {
    /// Check that every QecRound stabilizer has the definite value +1.
    bool check_qec = true;
};

struct MeasurementRecord {
    std::vector<std::pair<std::string, bool>> bits;
    /// Human-readable descriptions of failed ObservableCheck / QEC checks.
    std::vector<std::string> violations;

    /// Bit recorded under key; throws std::out_of_range.
    bool bit(const std::string &key) const;
};

/// Runs a Clifford circuit on the tableau. PhaseGate is accepted only for
/// integer p; other angles raise CapabilityError naming the instruction.
MeasurementRecord run_circuit(const Circuit &circuit, Tableau &tableau, Rng &rng, const RunOptions &options = {});

/// Step selector for the control case.
inline constexpr int kControlStep = -1;

/// Observables of the noiseless state after the flip steps 0..step, on a
/// gsc_target_layout: X on every untouched subregister s_j (j > step), and the
/// probe logical of the target (Z-bar for an X flip, X-bar for a Z flip) times
/// Z on s_0..s_step. Each of those subregisters contributes Z on all b qubits
/// when that is equivalent to the Heisenberg image of the probe, otherwise Z
/// on exactly the controls whose flip factor anticommutes with the probe. The
/// control case gives a X-type observables plus the bare probe.
std::vector<PauliString> observables_for(int step, const GscParams &params, const StabilizerCode &target,
                                         FlipKind kind = FlipKind::X);

struct ExperimentSpec {
    StabilizerCode target;
    GscParams params;
    /// Protocol step 0..a-1, or kControlStep.
    int step = 0;
    FlipKind kind = FlipKind::X;
    std::vector<double> ps;
    std::size_t shots = 100000;
    uint64_t seed = 0;

    bool is_control() const { return step == kControlStep; }
    /// Throws std::invalid_argument on an out-of-range step or empty target.
    void validate() const;
};

struct LerPoint {
    double p = 0;
    std::size_t shots = 0;
    std::size_t failures = 0;
    double ler = 0;
    double ci_low = 0;
    double ci_high = 0;
};

/// Two-sided Clopper-Pearson interval for k successes in n trials.
std::pair<double, double> clopper_pearson(std::size_t k, std::size_t n, double confidence = 0.95);

/// Decoder tables, gates and observables for one experiment, reusable across p.
class LerHarness {
   public:
    explicit LerHarness(const ExperimentSpec &spec);

    const ExperimentSpec &spec() const { return spec_; }
    const RegisterLayout &layout() const { return layout_; }
    const std::vector<PauliString> &observables() const { return observables_; }

    /// Frame simulation. Threads from GSC_THREADS; results never depend on it.
    LerPoint run_point(double p, std::size_t shots) const;
    /// The noise sample of one shot: X, Y or Z each with probability p/3 per qubit.
    PauliString sample_error(double p, uint64_t shot_index) const;
    /// True iff the shot fails in the frame simulation.
    bool frame_shot_fails(const PauliString &error) const;
    /// The same shot replayed on a full tableau: encode, noiseless prefix,
    /// the error, the final step, ideal syndrome measurement, correction and
    /// observable readout.
    bool tableau_shot_fails(const PauliString &error, Rng &rng) const;

   private:
    ExperimentSpec spec_;
    RegisterLayout layout_;
    std::vector<PauliString> observables_;
    std::vector<Gate> final_gates_;
    Circuit prefix_;
    // One block over the combined code, or one per register in the control case.
    struct DecodeBlock {
        std::size_t offset;
        std::size_t size;
        std::vector<PauliString> stabilizers;
        SyndromeTable table;
    };
    std::vector<DecodeBlock> blocks_;
};

LerPoint run_point(const ExperimentSpec &spec, double p, std::size_t shots);
std::vector<LerPoint> run_experiment(const ExperimentSpec &spec);

/// Least-squares slope of log(ler) against log(p). Needs >= 3 points with
/// failures > 0; throws std::invalid_argument otherwise.
double estimate_slope(const std::vector<LerPoint> &points);

/// "# gsc-forge v1" header, a comment line per entry of `meta`, then
/// step,p,shots,failures,ler,ci_low,ci_high rows with 6 significant digits.
std::string ler_csv(const std::string &step_label, const std::vector<LerPoint> &points,
                    const std::vector<std::pair<std::string, std::string>> &meta = {});

enum class DjOracle { Constant0, Constant1, BalancedFirst, BalancedSecond, BalancedParity, BalancedParityNot };
const char *dj_oracle_name(DjOracle oracle);
/// Parses the names printed by dj_oracle_name; throws std::invalid_argument.
DjOracle dj_oracle_from_name(const std::string &name);

struct DjCircuit {
    Circuit circuit;
    /// Measurement keys of the two logical data bits.
    std::string key0;
    std::string key1;
};

/// The stabilizer-generic Deutsch-Jozsa circuit on three GSC_{3,3} registers
/// (two data qubits and the phase-kickback qubit) plus two GSC helpers.
DjCircuit deutsch_jozsa_circuit(DjOracle oracle);
/// Counts of the measured data bits ("00", "01", ...) over `shots` runs.
std::map<std::string, std::size_t> deutsch_jozsa(DjOracle oracle, std::size_t shots, uint64_t seed);

}  // namespace gscforge
