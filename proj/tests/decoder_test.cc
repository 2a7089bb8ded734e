#include "gscforge/decoder.h"

#include <gtest/gtest.h>

#include <random>

#include "gscforge/errors.h"

using namespace gscforge;

namespace {

PauliString error_on(std::size_t n, std::initializer_list<std::pair<std::size_t, char>> factors) {
    PauliString p(n);
    for (auto [q, c] : factors) p.set(q, c);
    return p;
}

// Residual of decoding E: trivial iff it lies in the stabilizer group.
bool decodes(const PauliString &e, const CombinedCode &code, const SyndromeTable &table) {
    auto correction = decode(syndrome(e, code), table);
    return in_row_space(code.stabilizers, correction * e);
}

// Conjugates a Pauli through the controlled-Pauli gates of a flip step.
// Reference implementation written from the gate definitions alone: a
// controlled-P from c to t maps X_c -> X_c P_t, and any Pauli on t that
// anticommutes with P picks up Z_c.
PauliString propagate(PauliString e, const Circuit &step) {
    for (const auto &inst : step.instructions()) {
        auto g = std::get_if<Gate>(&inst);
        if (!g) continue;
        char p = g->kind == GateKind::CX ? 'X' : g->kind == GateKind::CY ? 'Y' : g->kind == GateKind::CZ ? 'Z' : 0;
        if (!p) {
            continue;  // single-qubit Paulis only change signs
        }
        const std::size_t n = e.size();
        bool flip_target = e.x(g->q0);
        bool anti = !commutes(PauliString::single(n, g->q1, p), PauliString::single(n, g->q1, e.at(g->q1) == 'I' ? p : e.at(g->q1)));
        if (flip_target) e *= PauliString::single(n, g->q1, p);
        if (anti) e *= PauliString::single(n, g->q0, 'Z');
    }
    e.set_phase(0);
    return e;
}

}  // namespace

TEST(syndrome, reference_cross_error) {
    auto code = combined_code(GscParams{3, 3}, gsc(GscParams{3, 3}), 0, FlipKind::X);
    auto s = syndrome(error_on(18, {{0, 'Z'}, {9, 'X'}}), code);
    EXPECT_EQ(s.to_string(), "0000001000000000");
    EXPECT_FALSE(s.get(12));
    EXPECT_FALSE(syndrome(PauliString(18), code).any());
    auto x9 = syndrome(error_on(18, {{9, 'X'}}), code);
    EXPECT_EQ(x9.to_string(), "0000001000001000");
    EXPECT_THROW(syndrome(PauliString(5), code), std::invalid_argument);
}

TEST(enumerate_errors, reference_backward_family_is_covered) {
    auto code = combined_code(GscParams{3, 3}, gsc(GscParams{3, 3}), 0, FlipKind::X);
    auto errors = enumerate_errors(code);
    std::set<std::string> backward;
    for (const auto &e : errors.cross_backward) backward.insert(e.str());
    std::size_t found = 0;
    for (std::size_t k = 0; k < 6; k++) {
        for (std::size_t j : {0, 3, 6}) {
            found += backward.count(error_on(18, {{k, 'Z'}, {9 + j, 'X'}}).str());
        }
    }
    EXPECT_EQ(found, 18u);
    // Everything in the family has one factor in each partition.
    for (const auto &e : errors.cross_backward) EXPECT_EQ(e.weight(), 2u);
}

TEST(enumerate_errors, last_step_has_no_cross_families) {
    auto code = combined_code(GscParams{3, 3}, registry_code("five_qubit"), 2, FlipKind::X);
    auto errors = enumerate_errors(code);
    EXPECT_TRUE(errors.cross_backward.empty());
    EXPECT_TRUE(errors.cross_forward.empty());
}

TEST(enumerate_errors, every_single_qubit_pauli_appears) {
    auto code = combined_code(GscParams{3, 5}, registry_code("five_qubit"), 0, FlipKind::X);
    auto singles = enumerate_errors(code).single_partition();
    std::set<std::string> seen;
    for (const auto &e : singles) seen.insert(e.str());
    for (std::size_t q = 0; q < 20; q++)
        for (char c : {'X', 'Y', 'Z'}) EXPECT_TRUE(seen.count(PauliString::single(20, q, c).str())) << q << c;
}

TEST(build_table, reference_instance_decodes_all_families) {
    auto code = combined_code(GscParams{3, 3}, gsc(GscParams{3, 3}), 0, FlipKind::X);
    auto table = build_table(code);
    auto errors = enumerate_errors(code);
    for (const auto &e : errors.single_partition()) EXPECT_TRUE(decodes(e, code, table)) << e.str();
    for (const auto &e : errors.cross_backward) EXPECT_TRUE(decodes(e, code, table)) << e.str();
    for (const auto &e : errors.cross_forward) EXPECT_TRUE(decodes(e, code, table)) << e.str();
    EXPECT_TRUE(decode(BitVector(16), table).is_identity());
}

TEST(build_table, gsc_3_5_five_qubit_single_errors_exact) {
    auto code = combined_code(GscParams{3, 5}, registry_code("five_qubit"), 0, FlipKind::X);
    auto table = build_table(code);
    for (std::size_t q = 0; q < 20; q++) {
        for (char c : {'X', 'Y', 'Z'}) {
            auto e = PauliString::single(20, q, c);
            auto correction = decode(syndrome(e, code), table);
            EXPECT_TRUE(in_row_space(code.stabilizers, correction * e)) << e.str() << " -> " << correction.str();
        }
    }
}

TEST(build_table, enumerated_errors_never_miscorrect) {
    for (const char *name : {"five_qubit", "steane", "shor", "trivial", "four_qubit"}) {
        for (auto kind : {FlipKind::X, FlipKind::Z}) {
            for (std::size_t i = 0; i < 3; i++) {
                auto code = combined_code(GscParams{3, 5}, registry_code(name), i, kind);
                auto table = build_table(code);
                auto errors = enumerate_errors(code);
                std::vector<PauliString> all = errors.single_partition();
                all.insert(all.end(), errors.cross_backward.begin(), errors.cross_backward.end());
                all.insert(all.end(), errors.cross_forward.begin(), errors.cross_forward.end());
                for (const auto &e : all) {
                    auto residual = decode(syndrome(e, code), table) * e;
                    bool trivial = in_row_space(code.stabilizers, residual);
                    // Codes of distance <= 2 detect but cannot correct target errors.
                    if (code.target().code.correctable_weight() == 0 && !e.slice(15, code.target().size()).is_identity())
                        continue;
                    ASSERT_TRUE(trivial) << name << " step " << i << ": " << e.str();
                    for (const auto &l : code.logical_x) ASSERT_TRUE(commutes(residual, l));
                    for (const auto &l : code.logical_z) ASSERT_TRUE(commutes(residual, l));
                }
            }
        }
    }
}

TEST(build_table, first_order_faults_through_a_step_are_corrected) {
    // Every single-qubit fault before step i, pushed through the step's gates,
    // decodes to a residual in the stabilizer group of the step-i code.
    for (const char *name : {"five_qubit", "steane", "shor"}) {
        for (auto kind : {FlipKind::X, FlipKind::Z}) {
            GscParams params{3, 5};
            auto layout = gsc_target_layout(params, registry_code(name));
            for (std::size_t i = 0; i < params.a; i++) {
                auto code = combined_code(params, registry_code(name), i, kind);
                auto table = build_table(code);
                auto step = transversal_flip_step(layout, i, kind);
                for (std::size_t q = 0; q < layout.num_qubits(); q++) {
                    for (char c : {'X', 'Y', 'Z'}) {
                        auto e = propagate(PauliString::single(layout.num_qubits(), q, c), step);
                        ASSERT_TRUE(decodes(e, code, table)) << name << " step " << i << " fault " << c << q
                                                             << " -> " << e.str();
                    }
                }
            }
        }
    }
}

TEST(build_table, deterministic_and_text_round_trip) {
    auto code = combined_code(GscParams{3, 3}, registry_code("steane"), 1, FlipKind::Z);
    auto a = build_table(code);
    auto b = build_table(code);
    EXPECT_EQ(a.to_text(), b.to_text());
    auto back = SyndromeTable::from_text(a.to_text(), code.stabilizers);
    EXPECT_EQ(back.to_text(), a.to_text());
    EXPECT_EQ(back.size(), a.size());
}

TEST(build_table, prefers_lower_weight_then_lexicographic) {
    // Repetition code ZZI, IZZ: X0 and X1X2 share a syndrome.
    std::vector<PauliString> stabs = {PauliString::from_text("ZZI"), PauliString::from_text("IZZ")};
    auto table = build_table(stabs, 3, {Partition{0, 3, 2}});
    EXPECT_EQ(decode(syndrome(PauliString::from_text("IXX"), stabs), table).str(), "XII");
    // Z errors are invisible; the identity wins the all-zero syndrome.
    EXPECT_TRUE(decode(BitVector(2), table).is_identity());
    // Weight-1 ties with an equal syndrome resolve to the lexicographically smaller text.
    std::vector<PauliString> one = {PauliString::from_text("ZZ")};
    auto t1 = build_table(one, 2, {Partition{0, 2, 1}});
    EXPECT_EQ(decode(syndrome(PauliString::from_text("IX"), one), t1).str(), "IX");
}

TEST(decode, miss_returns_identity_and_checks_length) {
    auto table = build_code_table(registry_code("steane"));
    BitVector s(6);
    s.set(0, true);
    s.set(1, true);
    s.set(2, true);
    s.set(3, true);
    s.set(4, true);
    EXPECT_TRUE(table.lookup(s).has_value() || decode(s, table).is_identity());
    EXPECT_THROW(decode(BitVector(3), table), std::invalid_argument);
}

TEST(decode, code_tables_correct_single_errors) {
    for (const char *name : {"five_qubit", "steane", "shor", "reed_muller", "dodecacode"}) {
        const auto &code = registry_code(name);
        auto table = build_code_table(code);
        for (std::size_t q = 0; q < code.n; q++) {
            for (char c : {'X', 'Y', 'Z'}) {
                auto e = PauliString::single(code.n, q, c);
                auto correction = decode(syndrome(e, code.generators), table);
                EXPECT_TRUE(in_row_space(code.generators, correction * e)) << name << " " << e.str();
            }
        }
    }
}

TEST(build_table, budget_guard) {
    auto big = gsc(GscParams{9, 9});
    EXPECT_THROW(build_table(big.generators, big.n, {Partition{0, big.n, 4}}), BudgetError);
}
