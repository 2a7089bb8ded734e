#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gscforge/pauli.h"

namespace gscforge {

/// A code whose transversal application of diag(1, e^{i pi p}) to every qubit
/// implements a logical rotation.
struct TransversalPhase {
    /// Physical angle fractions must be integer multiples of this step (0 = any).
    double step = 0;
    /// +1 if the transversal rotation by p acts as logical Z^p, -1 if as Z^{-p}.
    int direction = 1;

    bool supports(double p) const;
};

struct StabilizerCode {
    std::string name;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<PauliString> generators;
    std::vector<PauliString> logical_x;
    std::vector<PauliString> logical_z;
    std::optional<std::size_t> distance;
    std::optional<TransversalPhase> transversal_phase;

    /// floor((d - 1) / 2), using 1 when the distance is unknown.
    std::size_t correctable_weight() const;
};

/// Parameters of GSC_{a,b}: `a` cat-state subregisters of `b` qubits each.
struct GscParams {
    std::size_t a = 3;
    std::size_t b = 3;

    /// Throws std::invalid_argument unless a is odd, a >= 3 and b >= 3.
    void validate() const;
    std::size_t num_qubits() const { return a * b; }
    std::size_t distance() const { return a < b ? a : b; }
    /// First qubit of subregister s_i.
    std::size_t subregister_start(std::size_t i) const { return b * i; }
};

/// Qubit index of the first Z of the i-th Z-stabilizer: floor(i/(b-1))*b + i%(b-1).
std::size_t gsc_z_pair_start(std::size_t i, std::size_t b);

/// X on the 2b qubits of subregisters s_i and s_{i+1}, as an ab-qubit string.
PauliString gsc_x_stabilizer(const GscParams &params, std::size_t i);

/// The generalized Shor code: Z pairs inside each subregister, X on adjacent
/// subregister pairs, Z-bar = X on s_0, X-bar = Z on the first qubit of every
/// subregister. Generators are ordered Z-stabilizers first.
StabilizerCode gsc(const GscParams &params);

/// Same generators as gsc(params) with the logical X and Z swapped.
StabilizerCode gsch(const GscParams &params);

struct BasisTerm {
    /// One character per qubit, '0' or '1'.
    std::string bits;
    double amplitude;
};

/// Computational-basis expansion of |x>_GSCH: every cat-product string whose
/// number of |1...1> subregisters has parity x, each with amplitude 2^{-(a-1)/2}.
std::vector<BasisTerm> gsch_basis(const GscParams &params, int x);

/// Built-in codes keyed by name: trivial, four_qubit, five_qubit, steane, shor,
/// reed_muller and dodecacode (a [[15,1,5]] code).
const std::map<std::string, StabilizerCode> &registry();

/// Registry lookup; throws std::out_of_range listing the known names.
const StabilizerCode &registry_code(const std::string &name);

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Checks sizes, generator commutation and independence, logical commutation
/// with the generators, and the X/Z pairing of the logical operators.
ValidationReport verify_code(const StabilizerCode &code);

/// Smallest weight <= max_weight of a Pauli that commutes with every generator
/// but is not in the stabilizer group. Throws BudgetError if the enumeration
/// sum_w C(n,w) 3^w exceeds `budget`.
std::optional<std::size_t> distance_bruteforce(const StabilizerCode &code, std::size_t max_weight,
                                               double budget = 1e8);

/// JSON code-definition format: {name, n, k, stabilizers, logical_x, logical_z, distance?}.
std::string code_to_json(const StabilizerCode &code);
StabilizerCode code_from_json(const std::string &text);

/// Resolves a registry name, or failing that reads a code-definition file.
StabilizerCode load_code(const std::string &name_or_path);

}  // namespace gscforge
