#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gscforge/pauli.h"
#include "gscforge/protocol.h"

namespace gscforge {

/// A block of qubits whose errors up to weight t are corrected.
struct Partition {
    std::size_t offset;
    std::size_t size;
    std::size_t t;
};

/// Errors a combined-code table is built to correct.
struct ErrorSet {
    /// Weight <= t_GSC errors on the GSC partition (identity first).
    std::vector<PauliString> gsc_errors;
    /// Weight <= t_C errors on the target partition (identity first).
    std::vector<PauliString> target_errors;
    /// GSC part with a Z component on the modified stabilizer's GSC support,
    /// target part anticommuting with the flip on some qubit of its support.
    std::vector<PauliString> cross_backward;
    /// GSC part with an X component on the modified stabilizer's GSC support,
    /// target part with a Y, or a factor commuting with the flip, on its support.
    std::vector<PauliString> cross_forward;

    /// Errors supported on one partition only (without the identity).
    std::vector<PauliString> single_partition() const;
};

/// Enumerates the families above. Throws BudgetError beyond 10^7 cross errors.
ErrorSet enumerate_errors(const CombinedCode &combined);

/// Bit j set iff `error` anticommutes with stabilizer j.
BitVector syndrome(const PauliString &error, std::span<const PauliString> stabilizers);
BitVector syndrome(const PauliString &error, const CombinedCode &combined);

/// Map from syndrome to a minimum-weight correction (ties: lexicographically
/// smallest Pauli text). Stored in a flat open-addressing table keyed by the
/// packed syndrome words, with corrections kept as sparse (qubit, letter) runs.
class SyndromeTable {
   public:
    SyndromeTable() = default;
    SyndromeTable(std::vector<PauliString> stabilizers, std::size_t num_qubits);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_stabilizers() const { return stabilizers_.size(); }
    const std::vector<PauliString> &stabilizers() const { return stabilizers_; }
    std::size_t size() const { return entries_.size(); }
    std::size_t syndrome_words() const { return words_; }

    /// Per-(qubit, letter) syndrome contributions; letter 0 = X, 1 = Y, 2 = Z.
    std::span<const uint64_t> signature(std::size_t qubit, int letter) const {
        return {signatures_.data() + (qubit * 3 + letter) * words_, words_};
    }

    /// Keeps the better of the stored and offered correction. `terms` are
    /// (qubit << 2 | letter) with letter 1 = X, 2 = Y, 3 = Z, sorted by qubit.
    void offer(std::span<const uint64_t> key, std::span<const uint32_t> terms);

    /// Stored correction terms for a packed syndrome, or nullopt on a miss.
    std::optional<std::span<const uint32_t>> find(std::span<const uint64_t> key) const;

    std::optional<PauliString> lookup(const BitVector &syndrome) const;

    /// All entries as "<syndrome-hex> <pauli-text>" lines sorted by syndrome.
    std::string to_text() const;
    static SyndromeTable from_text(const std::string &text, std::vector<PauliString> stabilizers);

    bool operator==(const SyndromeTable &other) const { return to_text() == other.to_text(); }

   private:
    struct Entry {
        uint32_t begin;
        uint32_t length;
    };

    std::size_t slot_for(std::span<const uint64_t> key) const;
    void grow();
    PauliString to_pauli(std::span<const uint32_t> terms) const;

    std::size_t num_qubits_ = 0;
    std::size_t words_ = 1;
    std::vector<PauliString> stabilizers_;
    std::vector<uint64_t> signatures_;
    std::size_t capacity_ = 0;
    std::vector<uint64_t> keys_;
    std::vector<uint32_t> slots_;
    std::vector<Entry> entries_;
    std::vector<uint32_t> pool_;
};

/// Every product of one error of weight <= t from each partition, offered in a
/// deterministic order. Throws BudgetError beyond 10^7 products.
SyndromeTable build_table(std::vector<PauliString> stabilizers, std::size_t num_qubits,
                          const std::vector<Partition> &partitions);
/// The combined code's table: products of per-partition errors, which include
/// every single-partition error and both cross families.
SyndromeTable build_table(const CombinedCode &combined);
/// Table for a code on its own (the control case).
SyndromeTable build_code_table(const StabilizerCode &code);

/// Table hit: the stored correction; miss: identity.
PauliString decode(const BitVector &syndrome, const SyndromeTable &table);

/// Partition blocks and t values of a combined code.
std::vector<Partition> partitions_of(const CombinedCode &combined);

}  // namespace gscforge
