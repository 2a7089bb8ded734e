#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gscforge/pauli.h"

namespace gscforge {

enum class GateKind : uint8_t { H, S, X, Y, Z, CX, CY, CZ };

const char *gate_name(GateKind kind);
bool is_two_qubit(GateKind kind);

/// A Clifford gate. For two-qubit kinds q0 is the control and q1 the target.
struct Gate {
    GateKind kind;
    std::size_t q0;
    std::size_t q1 = 0;
    bool operator==(const Gate &) const = default;
};

/// diag(1, e^{i pi p}) on one qubit.
struct PhaseGate {
    double p;
    std::size_t qubit;
    bool operator==(const PhaseGate &) const = default;
};

/// Independent single-qubit depolarizing noise: X, Y or Z each with probability p/3.
struct Depolarize1 {
    double probability;
    std::vector<std::size_t> qubits;
    bool operator==(const Depolarize1 &) const = default;
};

/// Projective measurement of a Hermitian Pauli; the recorded bit is 1 for the -1 outcome.
struct MeasurePauli {
    PauliString observable;
    std::string key;
    bool operator==(const MeasurePauli &) const = default;
};

/// Applies `pauli` iff the recorded bit under `key` equals `required`.
struct ClassicallyControlledPauli {
    std::string key;
    bool required;
    PauliString pauli;
    bool operator==(const ClassicallyControlledPauli &) const = default;
};

/// Marks an error-correction round over the listed stabilizers (full-register
/// strings). Simulators decide how to extract and decode.
struct QecRound {
    std::string label;
    std::vector<PauliString> stabilizers;
    bool operator==(const QecRound &) const = default;
};

/// Asserts that the state is an eigenstate of `observable` with the given sign.
struct ObservableCheck {
    PauliString observable;
    int expected_sign = 1;
    bool operator==(const ObservableCheck &) const = default;
};

/// Ideal preparation of qubits [offset, offset + n): the block is discarded and
/// replaced by the unique +1 eigenstate of the n independent, commuting local
/// operators in `stabilizers`.
struct Encode {
    std::string label;
    std::size_t offset;
    std::vector<PauliString> stabilizers;
    std::size_t size() const { return stabilizers.empty() ? 0 : stabilizers.front().size(); }
    bool operator==(const Encode &) const = default;
};

using Instruction = std::variant<Gate, PhaseGate, Depolarize1, MeasurePauli, ClassicallyControlledPauli, QecRound,
                                 ObservableCheck, Encode>;

/// Ordered instruction list over a fixed number of qubits. Appending checks
/// qubit bounds and that classical controls refer to earlier measurements.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Instruction> &instructions() const { return instructions_; }
    std::size_t size() const { return instructions_.size(); }

    void append(Instruction instruction);
    void append(const Circuit &other);

    void gate(GateKind kind, std::size_t q0, std::size_t q1 = 0) { append(Gate{kind, q0, q1}); }

    std::size_t two_qubit_gate_count() const;
    std::size_t count_qec_rounds() const;
    /// Index of the first MeasurePauli, if any.
    std::optional<std::size_t> first_measurement() const;
    /// Instructions [begin, end) as a new circuit.
    Circuit slice(std::size_t begin, std::size_t end) const;

    /// One instruction per line, e.g. "CX 0 9", "MEASURE XXXIIIIII m0".
    std::string to_text() const;

    bool operator==(const Circuit &other) const = default;

   private:
    std::size_t num_qubits_ = 0;
    std::vector<Instruction> instructions_;
    std::vector<std::string> keys_;
};

std::string instruction_text(const Instruction &instruction);

}  // namespace gscforge
