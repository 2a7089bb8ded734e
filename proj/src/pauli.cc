#include "gscforge/pauli.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gscforge {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

std::size_t popcount_and(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    std::size_t total = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        total += std::popcount(a[k] & b[k]);
    }
    return total;
}

void require_same_size(const PauliString &p, const PauliString &q, const char *op) {
    if (p.size() != q.size()) {
        throw std::invalid_argument(std::string(op) + ": Pauli strings act on " + std::to_string(p.size()) + " and " +
                                    std::to_string(q.size()) + " qubits");
    }
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

BitVector::BitVector(std::size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {}

std::size_t BitVector::popcount() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](uint64_t w) { return w != 0; });
}

BitVector &BitVector::operator^=(const BitVector &other) {
    for (std::size_t k = 0; k < words_.size(); k++) words_[k] ^= other.words_[k];
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    for (std::size_t k = 0; k < words_.size(); k++) words_[k] &= other.words_[k];
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    for (std::size_t k = 0; k < words_.size(); k++) words_[k] |= other.words_[k];
    return *this;
}

std::string BitVector::to_string() const {
    std::string out(num_bits_, '0');
    for (std::size_t k = 0; k < num_bits_; k++) {
        if (get(k)) out[k] = '1';
    }
    return out;
}

std::string BitVector::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::size_t nibbles = std::max<std::size_t>(1, (num_bits_ + 3) / 4);
    std::string out(nibbles, '0');
    for (std::size_t j = 0; j < nibbles; j++) {
        unsigned v = 0;
        for (std::size_t b = 0; b < 4; b++) {
            std::size_t k = 4 * j + b;
            if (k < num_bits_ && get(k)) v |= 1u << b;
        }
        out[nibbles - 1 - j] = digits[v];
    }
    return out;
}

BitVector BitVector::from_hex(std::string_view hex, std::size_t num_bits) {
    BitVector out(num_bits);
    std::size_t n = hex.size();
    for (std::size_t j = 0; j < n; j++) {
        int v = hex_value(hex[n - 1 - j]);
        if (v < 0) {
            throw std::invalid_argument("invalid hex digit in '" + std::string(hex) + "'");
        }
        for (std::size_t b = 0; b < 4; b++) {
            if (!((v >> b) & 1)) continue;
            std::size_t k = 4 * j + b;
            if (k >= num_bits) {
                throw std::invalid_argument("hex value '" + std::string(hex) + "' does not fit in " +
                                            std::to_string(num_bits) + " bits");
            }
            out.set(k, true);
        }
    }
    return out;
}

std::size_t BitVectorHash::operator()(const BitVector &v) const noexcept {
    uint64_t h = 0x9E3779B97F4A7C15ull ^ v.size();
    for (auto w : v.words()) {
        h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h *= 0xBF58476D1CE4E5B9ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
}

PauliString::PauliString(std::size_t num_qubits) : num_qubits_(num_qubits), xs_(num_qubits), zs_(num_qubits) {}

PauliString PauliString::from_text(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] == ' ') pos++;
    uint8_t phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        pos++;
        if (pos < text.size() && text[pos] == 'i') {
            phase = (phase + 1) & 3;
            pos++;
        }
    }
    std::string letters;
    for (; pos < text.size(); pos++) {
        char c = text[pos];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        if (c == '_') c = 'I';
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("invalid Pauli character '" + std::string(1, c) + "' in '" +
                                        std::string(text) + "'");
        }
        letters.push_back(c);
    }
    PauliString out(letters.size());
    for (std::size_t q = 0; q < letters.size(); q++) {
        out.set(q, letters[q]);
    }
    out.phase_ = phase;
    return out;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t q, char pauli) {
    if (q >= num_qubits) {
        throw std::out_of_range("qubit " + std::to_string(q) + " outside a " + std::to_string(num_qubits) +
                                "-qubit register");
    }
    PauliString out(num_qubits);
    out.set(q, pauli);
    return out;
}

PauliString PauliString::on_qubits(std::size_t num_qubits, std::span<const std::size_t> qubits, char pauli) {
    PauliString out(num_qubits);
    for (auto q : qubits) {
        if (q >= num_qubits) {
            throw std::out_of_range("qubit " + std::to_string(q) + " outside a " + std::to_string(num_qubits) +
                                    "-qubit register");
        }
        out.set(q, pauli);
    }
    return out;
}

char PauliString::at(std::size_t q) const {
    static constexpr char letters[] = {'I', 'X', 'Z', 'Y'};
    return letters[(xs_.get(q) ? 1 : 0) | (zs_.get(q) ? 2 : 0)];
}

void PauliString::set(std::size_t q, char pauli) {
    switch (pauli) {
        case 'I':
            xs_.set(q, false);
            zs_.set(q, false);
            break;
        case 'X':
            xs_.set(q, true);
            zs_.set(q, false);
            break;
        case 'Y':
            xs_.set(q, true);
            zs_.set(q, true);
            break;
        case 'Z':
            xs_.set(q, false);
            zs_.set(q, true);
            break;
        default:
            throw std::invalid_argument("invalid Pauli character '" + std::string(1, pauli) + "'");
    }
}

std::size_t PauliString::weight() const {
    std::size_t total = 0;
    auto xw = xs_.words();
    auto zw = zs_.words();
    for (std::size_t k = 0; k < xw.size(); k++) {
        total += std::popcount(xw[k] | zw[k]);
    }
    return total;
}

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < num_qubits_; q++) {
        if (xs_.get(q) || zs_.get(q)) out.push_back(q);
    }
    return out;
}

PauliString PauliString::embedded(std::size_t num_qubits, std::size_t offset) const {
    if (offset + num_qubits_ > num_qubits) {
        throw std::out_of_range("cannot embed a " + std::to_string(num_qubits_) + "-qubit Pauli at offset " +
                                std::to_string(offset) + " of a " + std::to_string(num_qubits) + "-qubit register");
    }
    PauliString out(num_qubits);
    for (std::size_t q = 0; q < num_qubits_; q++) {
        out.xs_.set(offset + q, xs_.get(q));
        out.zs_.set(offset + q, zs_.get(q));
    }
    out.phase_ = phase_;
    return out;
}

PauliString PauliString::slice(std::size_t offset, std::size_t count) const {
    if (offset + count > num_qubits_) {
        throw std::out_of_range("slice outside the Pauli string");
    }
    PauliString out(count);
    for (std::size_t q = 0; q < count; q++) {
        out.xs_.set(q, xs_.get(offset + q));
        out.zs_.set(q, zs_.get(offset + q));
    }
    return out;
}

std::string PauliString::body() const {
    std::string out(num_qubits_, 'I');
    for (std::size_t q = 0; q < num_qubits_; q++) {
        out[q] = at(q);
    }
    return out;
}

std::string PauliString::str() const {
    static constexpr const char *prefixes[] = {"", "+i", "-", "-i"};
    return prefixes[phase_] + body();
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    require_same_size(*this, rhs, "multiply");
    // Write each factor as i^(k + |x&z|) X^x Z^z, commute Z^z1 past X^x2,
    // then convert the result back to the Y = iXZ letter convention.
    auto x1 = xs_.words();
    auto z1 = zs_.words();
    auto x2 = rhs.xs_.words();
    auto z2 = rhs.zs_.words();
    std::size_t k = phase_ + rhs.phase_;
    k += popcount_and(x1, z1);
    k += popcount_and(x2, z2);
    k += 2 * popcount_and(z1, x2);
    xs_ ^= rhs.xs_;
    zs_ ^= rhs.zs_;
    k += 4 * num_qubits_;
    k -= popcount_and(xs_.words(), zs_.words());
    phase_ = static_cast<uint8_t>(k & 3);
    return *this;
}

bool commutes(const PauliString &p, const PauliString &q) {
    require_same_size(p, q, "commutes");
    auto px = p.xs().words();
    auto pz = p.zs().words();
    auto qx = q.xs().words();
    auto qz = q.zs().words();
    uint64_t acc = 0;
    for (std::size_t k = 0; k < px.size(); k++) {
        acc ^= (px[k] & qz[k]) ^ (pz[k] & qx[k]);
    }
    return (std::popcount(acc) & 1) == 0;
}

PauliString multiply(const PauliString &p, const PauliString &q) {
    PauliString out = p;
    out *= q;
    return out;
}

std::vector<std::vector<uint8_t>> SymplecticTable::bit_matrix() const {
    std::vector<std::vector<uint8_t>> out;
    std::size_t n = num_qubits();
    for (const auto &row : rows) {
        std::vector<uint8_t> bits(2 * n, 0);
        for (std::size_t q = 0; q < n; q++) {
            bits[q] = row.x(q);
            bits[n + q] = row.z(q);
        }
        out.push_back(std::move(bits));
    }
    return out;
}

namespace {

/// Packs rows as [x | z] bit vectors of length 2n.
std::vector<BitVector> pack_rows(std::span<const PauliString> rows, std::size_t extra_columns = 0) {
    std::vector<BitVector> out;
    if (rows.empty()) return out;
    std::size_t n = rows.front().size();
    for (const auto &row : rows) {
        if (row.size() != n) {
            throw std::invalid_argument("symplectic table rows have different lengths");
        }
        BitVector v(2 * n + extra_columns);
        for (std::size_t q = 0; q < n; q++) {
            if (row.x(q)) v.set(q, true);
            if (row.z(q)) v.set(n + q, true);
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// Row-reduces in place over the first `num_columns` columns; returns pivot columns.
std::vector<std::size_t> eliminate(std::vector<BitVector> &rows, std::size_t num_columns) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < num_columns && r < rows.size(); c++) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) p++;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); i++) {
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

}  // namespace

std::size_t rank_gf2(std::span<const PauliString> rows) {
    if (rows.empty()) return 0;
    auto packed = pack_rows(rows);
    return eliminate(packed, packed.front().size()).size();
}

std::size_t rank_gf2(const SymplecticTable &table) { return rank_gf2(std::span<const PauliString>(table.rows)); }

bool in_row_space(std::span<const PauliString> rows, const PauliString &p) {
    if (p.is_identity()) return true;
    if (rows.empty()) return false;
    std::vector<PauliString> extended(rows.begin(), rows.end());
    std::size_t base = rank_gf2(extended);
    extended.push_back(p);
    return rank_gf2(extended) == base;
}

std::vector<PauliString> anticommuting_partners(std::span<const PauliString> rows) {
    std::size_t m = rows.size();
    if (m == 0) return {};
    std::size_t n = rows.front().size();
    // Unknown d = (dx | dz). Row i of the system is [S_i.z | S_i.x], so its dot
    // product with d is the symplectic form <S_i, d>. The augmented identity
    // block tracks the row operations so all m right-hand sides solve at once.
    std::vector<BitVector> system;
    for (std::size_t i = 0; i < m; i++) {
        if (rows[i].size() != n) {
            throw std::invalid_argument("symplectic table rows have different lengths");
        }
        BitVector v(2 * n + m);
        for (std::size_t q = 0; q < n; q++) {
            if (rows[i].z(q)) v.set(q, true);
            if (rows[i].x(q)) v.set(n + q, true);
        }
        v.set(2 * n + i, true);
        system.push_back(std::move(v));
    }
    auto pivots = eliminate(system, 2 * n);
    if (pivots.size() != m) {
        throw std::invalid_argument("anticommuting_partners: rows are not independent");
    }
    std::vector<PauliString> out;
    for (std::size_t j = 0; j < m; j++) {
        PauliString d(n);
        for (std::size_t r = 0; r < m; r++) {
            if (!system[r].get(2 * n + j)) continue;
            std::size_t c = pivots[r];
            if (c < n) {
                d.xs().set(c, true);
            } else {
                d.zs().set(c - n, true);
            }
        }
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace gscforge
