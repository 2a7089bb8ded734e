#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gscforge {

/// Fixed-length bit vector packed into 64-bit words. Bits past `size()` in the
/// last word are always zero, so word-wise comparisons and hashes are exact.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t num_bits);

    std::size_t size() const { return num_bits_; }
    std::size_t num_words() const { return words_.size(); }

    bool get(std::size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1; }
    void set(std::size_t k, bool v) {
        uint64_t m = uint64_t{1} << (k & 63);
        if (v) {
            words_[k >> 6] |= m;
        } else {
            words_[k >> 6] &= ~m;
        }
    }
    void flip(std::size_t k) { words_[k >> 6] ^= uint64_t{1} << (k & 63); }

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }

    std::size_t popcount() const;
    bool any() const;

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    bool operator==(const BitVector &other) const = default;

    /// "0110..." with bit 0 first.
    std::string to_string() const;
    /// Hex digits, most significant nibble first; bit k is bit k of the integer.
    std::string to_hex() const;
    static BitVector from_hex(std::string_view hex, std::size_t num_bits);

   private:
    std::size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector &v) const noexcept;
};

/// An n-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... with exact phase.
///
/// Qubit k holds X when only its x bit is set, Z when only its z bit is set,
/// and Y when both are set. Y is defined as iXZ, so Y*Y = I with phase +1 and
/// X*Z = -iY.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t num_qubits);

    /// Parses "[+|-|+i|-i]<IXYZ...>", e.g. "ZZII" or "-iXY". Whitespace and
    /// '_' (as an alias for I) are accepted.
    static PauliString from_text(std::string_view text);
    /// A single-qubit Pauli ('X', 'Y' or 'Z') on qubit q of an n-qubit register.
    static PauliString single(std::size_t num_qubits, std::size_t q, char pauli);
    /// Product of `pauli` on every listed qubit.
    static PauliString on_qubits(std::size_t num_qubits, std::span<const std::size_t> qubits, char pauli);

    std::size_t size() const { return num_qubits_; }

    bool x(std::size_t q) const { return xs_.get(q); }
    bool z(std::size_t q) const { return zs_.get(q); }
    /// 'I', 'X', 'Y' or 'Z'.
    char at(std::size_t q) const;
    void set(std::size_t q, char pauli);

    /// Exponent k of the global phase i^k, in [0, 4).
    uint8_t phase() const { return phase_; }
    void set_phase(uint8_t k) { phase_ = k & 3; }
    /// True iff the phase is +1 or -1 (the operator is Hermitian).
    bool is_hermitian() const { return (phase_ & 1) == 0; }
    /// -1 phase as a bit; only meaningful for Hermitian strings.
    bool sign() const { return phase_ == 2; }

    const BitVector &xs() const { return xs_; }
    const BitVector &zs() const { return zs_; }
    BitVector &xs() { return xs_; }
    BitVector &zs() { return zs_; }

    std::size_t weight() const;
    std::vector<std::size_t> support() const;
    bool is_identity() const { return !xs_.any() && !zs_.any(); }
    /// Identity operators only, ignoring phase.
    bool has_x_only() const { return !zs_.any(); }
    bool has_z_only() const { return !xs_.any(); }

    /// Copies this operator into qubits [offset, offset + size()) of a larger register.
    PauliString embedded(std::size_t num_qubits, std::size_t offset) const;
    /// The restriction to qubits [offset, offset + count), with phase +1.
    PauliString slice(std::size_t offset, std::size_t count) const;

    /// Text with a leading phase token when the phase is not +1 ("-XZ", "+iY").
    std::string str() const;
    /// Text without any phase token.
    std::string body() const;

    /// In-place right multiplication: *this = *this * rhs.
    PauliString &operator*=(const PauliString &rhs);

    bool operator==(const PauliString &other) const = default;
    /// Equality of the Pauli letters, ignoring phase.
    bool equal_up_to_phase(const PauliString &other) const { return xs_ == other.xs_ && zs_ == other.zs_; }

   private:
    std::size_t num_qubits_ = 0;
    BitVector xs_;
    BitVector zs_;
    uint8_t phase_ = 0;
};

/// True iff the symplectic inner product of p and q is even.
/// Throws std::invalid_argument on a length mismatch.
bool commutes(const PauliString &p, const PauliString &q);

/// Group product p*q with exact phase.
PauliString multiply(const PauliString &p, const PauliString &q);

inline PauliString operator*(const PauliString &p, const PauliString &q) { return multiply(p, q); }

/// Ordered rows of equal-length Pauli strings; the row layout of a generator matrix.
struct SymplecticTable {
    std::vector<PauliString> rows;

    std::size_t num_qubits() const { return rows.empty() ? 0 : rows.front().size(); }
    /// Row-major bits: the x block of every row followed by the z block (2n columns).
    std::vector<std::vector<uint8_t>> bit_matrix() const;
};

/// GF(2) rank of the 2n-column symplectic matrix formed by the rows.
std::size_t rank_gf2(const SymplecticTable &table);
std::size_t rank_gf2(std::span<const PauliString> rows);

/// True iff p (ignoring phase) lies in the GF(2) row space of the rows.
bool in_row_space(std::span<const PauliString> rows, const PauliString &p);

/// For n independent mutually commuting rows, returns a partner D_j for every
/// row S_j such that D_j anticommutes with S_j and commutes with every other
/// row. Throws std::invalid_argument if the rows are dependent.
std::vector<PauliString> anticommuting_partners(std::span<const PauliString> rows);

}  // namespace gscforge

template <>
struct std::hash<gscforge::BitVector> {
    std::size_t operator()(const gscforge::BitVector &v) const noexcept { return gscforge::BitVectorHash{}(v); }
};
