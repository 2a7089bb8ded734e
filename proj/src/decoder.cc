#include "gscforge/decoder.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gscforge/errors.h"

namespace gscforge {

namespace {

constexpr double kMaxEntries = 1e7;
constexpr uint32_t kEmpty = UINT32_MAX;

uint64_t mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint32_t encode_term(std::size_t qubit, char letter) {
    uint32_t code = letter == 'X' ? 1 : letter == 'Y' ? 2 : 3;
    return static_cast<uint32_t>(qubit << 2) | code;
}

// Lexicographic order of the full Pauli texts of two sorted sparse lists,
// using I < X < Y < Z.
bool text_less(std::span<const uint32_t> a, std::span<const uint32_t> b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        uint32_t qa = a[i] >> 2, qb = b[j] >> 2;
        if (qa != qb) return qa > qb;  // the other string has I at the smaller qubit
        uint32_t la = a[i] & 3, lb = b[j] & 3;
        if (la != lb) return la < lb;
        i++;
        j++;
    }
    return i == a.size() && j < b.size();
}

// Every error of weight <= t on [offset, offset + size), identity first, then
// by weight, qubits ascending, letters X < Y < Z.
struct SparseList {
    std::vector<uint32_t> terms;
    std::vector<uint32_t> begin;  // begin.size() == count + 1

    std::size_t count() const { return begin.size() - 1; }
    std::span<const uint32_t> at(std::size_t i) const { return {terms.data() + begin[i], begin[i + 1] - begin[i]}; }
};

double count_errors(std::size_t size, std::size_t t) {
    double total = 0, binom = 1;
    for (std::size_t w = 0; w <= t && w <= size; w++) {
        if (w > 0) binom = binom * static_cast<double>(size - w + 1) / static_cast<double>(w);
        total += binom * std::pow(3.0, static_cast<double>(w));
    }
    return total;
}

SparseList enumerate_sparse(const Partition &part) {
    SparseList out;
    out.begin.push_back(0);
    std::vector<uint32_t> current;
    auto recurse = [&](auto &&self, std::size_t remaining, std::size_t first) -> void {
        if (remaining == 0) {
            out.terms.insert(out.terms.end(), current.begin(), current.end());
            out.begin.push_back(static_cast<uint32_t>(out.terms.size()));
            return;
        }
        for (std::size_t q = first; q + remaining <= part.offset + part.size; q++) {
            for (char letter : {'X', 'Y', 'Z'}) {
                current.push_back(encode_term(q, letter));
                self(self, remaining - 1, q + 1);
                current.pop_back();
            }
        }
    };
    for (std::size_t w = 0; w <= part.t && w <= part.size; w++) recurse(recurse, w, part.offset);
    return out;
}

PauliString sparse_to_pauli(std::size_t n, std::span<const uint32_t> terms) {
    PauliString p(n);
    for (auto term : terms) p.set(term >> 2, "IXYZ"[term & 3]);
    return p;
}

}  // namespace

std::vector<PauliString> ErrorSet::single_partition() const {
    std::vector<PauliString> out;
    for (const auto &e : gsc_errors)
        if (!e.is_identity()) out.push_back(e);
    for (const auto &e : target_errors)
        if (!e.is_identity()) out.push_back(e);
    return out;
}

std::vector<Partition> partitions_of(const CombinedCode &combined) {
    const auto &g = combined.gsc();
    const auto &t = combined.target();
    std::vector<Partition> out = {
        {g.offset, g.size(), (combined.params.distance() - 1) / 2},
        {t.offset, t.size(), t.code.correctable_weight()},
    };
    std::sort(out.begin(), out.end(), [](const Partition &a, const Partition &b) { return a.offset < b.offset; });
    return out;
}

ErrorSet enumerate_errors(const CombinedCode &combined) {
    const std::size_t n = combined.num_qubits();
    const auto &g = combined.gsc();
    const auto &t = combined.target();
    Partition gp{g.offset, g.size(), (combined.params.distance() - 1) / 2};
    Partition tp{t.offset, t.size(), t.code.correctable_weight()};

    ErrorSet out;
    auto materialize = [&](const Partition &part, std::vector<PauliString> &dest) {
        auto list = enumerate_sparse(part);
        for (std::size_t i = 0; i < list.count(); i++) dest.push_back(sparse_to_pauli(n, list.at(i)));
    };
    materialize(gp, out.gsc_errors);
    materialize(tp, out.target_errors);
    if (!combined.modified_row) return out;

    if (static_cast<double>(out.gsc_errors.size()) * static_cast<double>(out.target_errors.size()) > kMaxEntries) {
        throw BudgetError("cross-partition families exceed the limit of 10^7 errors");
    }
    std::vector<std::size_t> gx_support;
    const std::size_t first = g.offset + combined.params.subregister_start(combined.step);
    for (std::size_t q = first; q < first + 2 * combined.params.b; q++) gx_support.push_back(q);
    const auto flip_support = combined.flip.support();

    auto gsc_has = [&](const PauliString &e, bool want_z) {
        for (auto q : gx_support) {
            if (want_z ? e.z(q) : e.x(q)) return true;
        }
        return false;
    };
    auto target_matches = [&](const PauliString &e, bool backward) {
        for (auto q : flip_support) {
            char f = combined.flip.at(q);
            char c = e.at(q);
            if (c == 'I') continue;
            if (backward ? c != f : (c == 'Y' || c == f)) return true;
        }
        return false;
    };
    for (const auto &eg : out.gsc_errors) {
        if (eg.is_identity()) continue;
        bool backward_g = gsc_has(eg, true);
        bool forward_g = gsc_has(eg, false);
        if (!backward_g && !forward_g) continue;
        for (const auto &ec : out.target_errors) {
            if (ec.is_identity()) continue;
            if (backward_g && target_matches(ec, true)) {
                auto e = eg * ec;
                e.set_phase(0);
                out.cross_backward.push_back(std::move(e));
            }
            if (forward_g && target_matches(ec, false)) {
                auto e = eg * ec;
                e.set_phase(0);
                out.cross_forward.push_back(std::move(e));
            }
        }
    }
    return out;
}

BitVector syndrome(const PauliString &error, std::span<const PauliString> stabilizers) {
    BitVector out(stabilizers.size());
    for (std::size_t j = 0; j < stabilizers.size(); j++) {
        if (!commutes(error, stabilizers[j])) out.set(j, true);
    }
    return out;
}

BitVector syndrome(const PauliString &error, const CombinedCode &combined) {
    return syndrome(error, combined.stabilizers);
}

SyndromeTable::SyndromeTable(std::vector<PauliString> stabilizers, std::size_t num_qubits)
    : num_qubits_(num_qubits), stabilizers_(std::move(stabilizers)) {
    words_ = std::max<std::size_t>(1, (stabilizers_.size() + 63) / 64);
    signatures_.assign(num_qubits_ * 3 * words_, 0);
    for (std::size_t j = 0; j < stabilizers_.size(); j++) {
        const auto &s = stabilizers_[j];
        if (s.size() != num_qubits_) throw std::invalid_argument("stabilizer width does not match the table");
        for (std::size_t q = 0; q < num_qubits_; q++) {
            bool anti[3] = {s.z(q), s.x(q) != s.z(q), s.x(q)};
            for (int letter = 0; letter < 3; letter++) {
                if (anti[letter]) signatures_[(q * 3 + letter) * words_ + j / 64] |= uint64_t{1} << (j % 64);
            }
        }
    }
    capacity_ = 16;
    keys_.assign(capacity_ * words_, 0);
    slots_.assign(capacity_, kEmpty);
}

std::size_t SyndromeTable::slot_for(std::span<const uint64_t> key) const {
    uint64_t h = 0;
    for (std::size_t k = 0; k < words_; k++) h = mix(h ^ key[k]);
    std::size_t slot = h & (capacity_ - 1);
    while (slots_[slot] != kEmpty) {
        if (std::equal(key.begin(), key.end(), keys_.begin() + slot * words_)) return slot;
        slot = (slot + 1) & (capacity_ - 1);
    }
    return slot;
}

void SyndromeTable::grow() {
    std::vector<uint64_t> old_keys = std::move(keys_);
    std::vector<uint32_t> old_slots = std::move(slots_);
    std::size_t old_capacity = capacity_;
    capacity_ *= 2;
    keys_.assign(capacity_ * words_, 0);
    slots_.assign(capacity_, kEmpty);
    for (std::size_t s = 0; s < old_capacity; s++) {
        if (old_slots[s] == kEmpty) continue;
        std::span<const uint64_t> key(old_keys.data() + s * words_, words_);
        std::size_t slot = slot_for(key);
        std::copy(key.begin(), key.end(), keys_.begin() + slot * words_);
        slots_[slot] = old_slots[s];
    }
}

void SyndromeTable::offer(std::span<const uint64_t> key, std::span<const uint32_t> terms) {
    if (2 * (entries_.size() + 1) > capacity_) grow();
    std::size_t slot = slot_for(key);
    if (slots_[slot] == kEmpty) {
        std::copy(key.begin(), key.end(), keys_.begin() + slot * words_);
        slots_[slot] = static_cast<uint32_t>(entries_.size());
        entries_.push_back({static_cast<uint32_t>(pool_.size()), static_cast<uint32_t>(terms.size())});
        pool_.insert(pool_.end(), terms.begin(), terms.end());
        return;
    }
    Entry &entry = entries_[slots_[slot]];
    std::span<const uint32_t> stored(pool_.data() + entry.begin, entry.length);
    bool better = terms.size() < stored.size() || (terms.size() == stored.size() && text_less(terms, stored));
    if (better) {
        entry.begin = static_cast<uint32_t>(pool_.size());
        entry.length = static_cast<uint32_t>(terms.size());
        pool_.insert(pool_.end(), terms.begin(), terms.end());
    }
}

std::optional<std::span<const uint32_t>> SyndromeTable::find(std::span<const uint64_t> key) const {
    if (capacity_ == 0) return std::nullopt;
    std::size_t slot = slot_for(key);
    if (slots_[slot] == kEmpty) return std::nullopt;
    const Entry &entry = entries_[slots_[slot]];
    return std::span<const uint32_t>(pool_.data() + entry.begin, entry.length);
}

PauliString SyndromeTable::to_pauli(std::span<const uint32_t> terms) const { return sparse_to_pauli(num_qubits_, terms); }

std::optional<PauliString> SyndromeTable::lookup(const BitVector &syndrome) const {
    if (syndrome.size() != stabilizers_.size()) {
        throw std::invalid_argument("syndrome has " + std::to_string(syndrome.size()) + " bits, table expects " +
                                    std::to_string(stabilizers_.size()));
    }
    std::vector<uint64_t> key(words_, 0);
    auto w = syndrome.words();
    std::copy(w.begin(), w.end(), key.begin());
    auto hit = find(key);
    if (!hit) return std::nullopt;
    return to_pauli(*hit);
}

std::string SyndromeTable::to_text() const {
    std::vector<std::pair<std::string, std::string>> lines;
    for (std::size_t s = 0; s < capacity_; s++) {
        if (slots_[s] == kEmpty) continue;
        BitVector key(stabilizers_.size());
        for (std::size_t k = 0; k < key.num_words(); k++) key.words()[k] = keys_[s * words_ + k];
        const Entry &entry = entries_[slots_[s]];
        lines.emplace_back(key.to_hex(), to_pauli({pool_.data() + entry.begin, entry.length}).body());
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto &[hex, pauli] : lines) out += hex + " " + pauli + "\n";
    return out;
}

SyndromeTable SyndromeTable::from_text(const std::string &text, std::vector<PauliString> stabilizers) {
    if (stabilizers.empty()) throw std::invalid_argument("a table needs its stabilizers");
    std::size_t n = stabilizers.front().size();
    SyndromeTable table(std::move(stabilizers), n);
    std::istringstream in(text);
    std::string hex, pauli;
    while (in >> hex >> pauli) {
        auto key = BitVector::from_hex(hex, table.num_stabilizers());
        auto p = PauliString::from_text(pauli);
        if (p.size() != n) throw std::invalid_argument("table entry '" + pauli + "' has the wrong width");
        std::vector<uint32_t> terms;
        for (auto q : p.support()) terms.push_back(encode_term(q, p.at(q)));
        std::vector<uint64_t> words(table.words_, 0);
        std::copy(key.words().begin(), key.words().end(), words.begin());
        table.offer(words, terms);
    }
    return table;
}

SyndromeTable build_table(std::vector<PauliString> stabilizers, std::size_t num_qubits,
                          const std::vector<Partition> &partitions) {
    double total = 1;
    for (const auto &p : partitions) total *= count_errors(p.size, p.t);
    if (total > kMaxEntries) {
        throw BudgetError("lookup table would enumerate " + std::to_string(static_cast<long long>(total)) +
                          " errors, above the limit of 10^7");
    }
    SyndromeTable table(std::move(stabilizers), num_qubits);
    const std::size_t words = table.syndrome_words();

    auto sorted = partitions;
    std::sort(sorted.begin(), sorted.end(), [](const Partition &a, const Partition &b) { return a.offset < b.offset; });
    std::vector<SparseList> lists;
    std::vector<std::vector<uint64_t>> sigs;
    for (const auto &part : sorted) {
        if (part.offset + part.size > num_qubits) throw std::invalid_argument("partition exceeds the register");
        lists.push_back(enumerate_sparse(part));
        const auto &list = lists.back();
        std::vector<uint64_t> sig(list.count() * words, 0);
        for (std::size_t i = 0; i < list.count(); i++) {
            for (auto term : list.at(i)) {
                auto contribution = table.signature(term >> 2, static_cast<int>((term & 3) - 1));
                for (std::size_t k = 0; k < words; k++) sig[i * words + k] ^= contribution[k];
            }
        }
        sigs.push_back(std::move(sig));
    }

    const std::size_t parts = lists.size();
    std::vector<std::size_t> index(parts, 0);
    std::vector<uint64_t> key(words);
    std::vector<uint32_t> terms;
    while (true) {
        std::fill(key.begin(), key.end(), 0);
        terms.clear();
        for (std::size_t p = 0; p < parts; p++) {
            for (std::size_t k = 0; k < words; k++) key[k] ^= sigs[p][index[p] * words + k];
            auto t = lists[p].at(index[p]);
            terms.insert(terms.end(), t.begin(), t.end());
        }
        table.offer(key, terms);
        bool exhausted = true;
        for (std::size_t p = parts; p-- > 0;) {
            if (++index[p] < lists[p].count()) {
                exhausted = false;
                break;
            }
            index[p] = 0;
        }
        if (exhausted) return table;
    }
}

SyndromeTable build_table(const CombinedCode &combined) {
    return build_table(combined.stabilizers, combined.num_qubits(), partitions_of(combined));
}

SyndromeTable build_code_table(const StabilizerCode &code) {
    return build_table(code.generators, code.n, {Partition{0, code.n, code.correctable_weight()}});
}

PauliString decode(const BitVector &syndrome, const SyndromeTable &table) {
    if (auto hit = table.lookup(syndrome)) return *hit;
    return PauliString(table.num_qubits());
}

}  // namespace gscforge
