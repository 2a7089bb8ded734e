#include "gscforge/codes.h"

#include <gtest/gtest.h>

#include <cmath>

#include "gscforge/errors.h"

using namespace gscforge;

namespace {

std::vector<std::string> texts(const std::vector<PauliString> &ops) {
    std::vector<std::string> out;
    for (const auto &p : ops) out.push_back(p.str());
    return out;
}

// Independent distance oracle: walk every Pauli of weight <= w_max in base-4
// order and test it against the generators and logicals with commutes() only.
std::optional<std::size_t> naive_distance(const StabilizerCode &code, std::size_t w_max) {
    std::optional<std::size_t> best;
    const std::size_t n = code.n;
    std::vector<int> digits(n, 0);
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    while (true) {
        std::size_t w = 0;
        for (int d : digits) w += d != 0;
        if (w > 0 && w <= w_max && (!best || w < *best)) {
            PauliString p(n);
            for (std::size_t q = 0; q < n; q++) p.set(q, letters[digits[q]]);
            bool normalizer = true;
            for (const auto &g : code.generators) normalizer &= commutes(p, g);
            bool logical = false;
            for (const auto &l : code.logical_x) logical |= !commutes(p, l);
            for (const auto &l : code.logical_z) logical |= !commutes(p, l);
            if (normalizer && logical) best = w;
        }
        std::size_t q = 0;
        while (q < n && digits[q] == 3) digits[q++] = 0;
        if (q == n) break;
        digits[q]++;
    }
    return best;
}

}  // namespace

TEST(codes, gsc_3_4_matches_reference_table) {
    auto code = gsc(GscParams{3, 4});
    std::vector<std::string> expected = {
        "ZZIIIIIIIIII", "IZZIIIIIIIII", "IIZZIIIIIIII", "IIIIZZIIIIII", "IIIIIZZIIIII", "IIIIIIZZIIII",
        "IIIIIIIIZZII", "IIIIIIIIIZZI", "IIIIIIIIIIZZ", "XXXXXXXXIIII", "IIIIXXXXXXXX",
    };
    EXPECT_EQ(texts(code.generators), expected);
    EXPECT_EQ(texts(code.logical_z), std::vector<std::string>{"XXXXIIIIIIII"});
    EXPECT_EQ(texts(code.logical_x), std::vector<std::string>{"ZIIIZIIIZIII"});
    EXPECT_EQ(gsc_z_pair_start(3, 4), 4u);
    EXPECT_TRUE(verify_code(code).ok());
}

TEST(codes, gsc_3_3_is_shor_code) {
    auto code = gsc(GscParams{3, 3});
    EXPECT_EQ(code.logical_z[0].str(), "XXXIIIIII");
    EXPECT_EQ(code.logical_x[0].str(), "ZIIZIIZII");
    EXPECT_EQ(code.generators, registry_code("shor").generators);
}

TEST(codes, gsc_generator_counts) {
    for (std::size_t a : {3, 5, 7}) {
        for (std::size_t b : {3, 4, 5, 6}) {
            auto code = gsc(GscParams{a, b});
            std::size_t z_pairs = 0, x_blocks = 0;
            for (const auto &g : code.generators) {
                if (g.has_z_only() && g.weight() == 2) z_pairs++;
                if (g.has_x_only() && g.weight() == 2 * b) x_blocks++;
            }
            EXPECT_EQ(z_pairs, a * (b - 1));
            EXPECT_EQ(x_blocks, a - 1);
            EXPECT_TRUE(verify_code(code).ok()) << a << "," << b;
        }
    }
    auto c35 = gsc(GscParams{3, 5});
    EXPECT_EQ(c35.n, 15u);
    EXPECT_EQ(c35.generators.size(), 14u);
}

TEST(codes, gsc_rejects_bad_params) {
    EXPECT_THROW(gsc(GscParams{4, 3}), std::invalid_argument);
    EXPECT_THROW(gsc(GscParams{1, 3}), std::invalid_argument);
    EXPECT_THROW(gsc(GscParams{3, 2}), std::invalid_argument);
}

TEST(codes, gsch_swaps_logicals) {
    auto g = gsc(GscParams{3, 3});
    auto h = gsch(GscParams{3, 3});
    EXPECT_EQ(h.logical_z, g.logical_x);
    EXPECT_EQ(h.logical_x, g.logical_z);
    EXPECT_EQ(gsch(GscParams{3, 4}).generators, gsc(GscParams{3, 4}).generators);
    EXPECT_EQ(gsch(GscParams{5, 5}).n, 25u);
    EXPECT_TRUE(verify_code(h).ok());
}

TEST(codes, gsch_basis_3_4_matches_reference_expansion) {
    auto zero = gsch_basis(GscParams{3, 4}, 0);
    auto one = gsch_basis(GscParams{3, 4}, 1);
    auto bits = [](const std::vector<BasisTerm> &terms) {
        std::vector<std::string> out;
        for (const auto &t : terms) out.push_back(t.bits);
        std::sort(out.begin(), out.end());
        return out;
    };
    EXPECT_EQ(bits(zero), (std::vector<std::string>{"000000000000", "000011111111", "111100001111",
                                                    "111111110000"}));
    EXPECT_EQ(bits(one), (std::vector<std::string>{"000000001111", "000011110000", "111100000000",
                                                   "111111111111"}));
    for (const auto &t : zero) EXPECT_DOUBLE_EQ(t.amplitude, 0.5);
    for (const auto &t : one) EXPECT_DOUBLE_EQ(t.amplitude, 0.5);
}

TEST(codes, gsch_basis_partitions_cat_strings) {
    for (std::size_t a : {3, 5}) {
        for (std::size_t b : {3, 4}) {
            auto zero = gsch_basis(GscParams{a, b}, 0);
            auto one = gsch_basis(GscParams{a, b}, 1);
            double norm0 = 0, norm1 = 0;
            for (const auto &t : zero) norm0 += t.amplitude * t.amplitude;
            for (const auto &t : one) norm1 += t.amplitude * t.amplitude;
            EXPECT_NEAR(norm0, 1.0, 1e-12);
            EXPECT_NEAR(norm1, 1.0, 1e-12);
            std::set<std::string> all;
            for (const auto &t : zero) all.insert(t.bits);
            for (const auto &t : one) all.insert(t.bits);
            EXPECT_EQ(all.size(), std::size_t{1} << a);
        }
    }
    EXPECT_THROW(gsch_basis(GscParams{3, 3}, 2), std::invalid_argument);
}

TEST(codes, registry_entries_verify) {
    for (const auto &[name, code] : registry()) {
        auto report = verify_code(code);
        EXPECT_TRUE(report.ok()) << name << ": " << (report.ok() ? "" : report.failures.front());
        EXPECT_EQ(code.name, name);
    }
    EXPECT_EQ(registry().size(), 7u);
    EXPECT_THROW(registry_code("toric"), std::out_of_range);
}

TEST(codes, registry_examples) {
    const auto &five = registry_code("five_qubit");
    EXPECT_EQ(five.n, 5u);
    EXPECT_EQ(five.k, 1u);
    EXPECT_EQ(texts(five.generators), (std::vector<std::string>{"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}));
    EXPECT_EQ(naive_distance(five, 3), std::optional<std::size_t>(3));

    const auto &four = registry_code("four_qubit");
    EXPECT_EQ(texts(four.generators), (std::vector<std::string>{"XXXX", "ZZZZ"}));
    EXPECT_EQ(four.k, 2u);

    const auto &trivial = registry_code("trivial");
    EXPECT_EQ(trivial.n, 1u);
    EXPECT_TRUE(trivial.generators.empty());
}

TEST(codes, registry_distances_match_metadata) {
    for (const char *name : {"trivial", "four_qubit", "five_qubit", "steane", "shor", "reed_muller"}) {
        const auto &code = registry_code(name);
        EXPECT_EQ(distance_bruteforce(code, *code.distance), code.distance) << name;
    }
    const auto &d5 = registry_code("dodecacode");
    EXPECT_EQ(d5.n, 15u);
    EXPECT_EQ(distance_bruteforce(d5, 4), std::nullopt);
}

TEST(codes, distance_bruteforce_agrees_with_naive_oracle) {
    for (const char *name : {"four_qubit", "five_qubit", "steane"}) {
        const auto &code = registry_code(name);
        EXPECT_EQ(distance_bruteforce(code, 3), naive_distance(code, 3)) << name;
    }
}

TEST(codes, gsc_distance_is_min_a_b) {
    for (auto [a, b] : {std::pair<std::size_t, std::size_t>{3, 3}, {3, 4}, {3, 5}}) {
        auto code = gsc(GscParams{a, b});
        EXPECT_EQ(distance_bruteforce(code, std::min(a, b)), std::min(a, b));
    }
}

TEST(codes, distance_budget_is_enforced) {
    EXPECT_THROW(distance_bruteforce(registry_code("dodecacode"), 10), BudgetError);
}

TEST(codes, verify_reports_anticommuting_generators) {
    StabilizerCode bad;
    bad.name = "bad";
    bad.n = 1;
    bad.k = 0;
    bad.generators = {PauliString::from_text("X"), PauliString::from_text("Z")};
    auto report = verify_code(bad);
    ASSERT_FALSE(report.ok());
    bool mentions = false;
    for (const auto &f : report.failures) mentions |= f.find("g0 and g1 anticommute") != std::string::npos;
    EXPECT_TRUE(mentions);
}

TEST(codes, json_round_trip) {
    for (const auto &[name, code] : registry()) {
        auto back = code_from_json(code_to_json(code));
        EXPECT_EQ(back.generators, code.generators);
        EXPECT_EQ(back.logical_x, code.logical_x);
        EXPECT_EQ(back.logical_z, code.logical_z);
        EXPECT_EQ(back.distance, code.distance);
        EXPECT_EQ(back.transversal_phase.has_value(), code.transversal_phase.has_value());
    }
    EXPECT_THROW(code_from_json("{\"name\": 3}"), std::invalid_argument);
    EXPECT_THROW(code_from_json("not json"), std::invalid_argument);
}

TEST(codes, transversal_phase_support) {
    TransversalPhase rm{0.25, -1};
    EXPECT_TRUE(rm.supports(0.25));
    EXPECT_TRUE(rm.supports(1.0));
    EXPECT_FALSE(rm.supports(0.1));
    EXPECT_TRUE(TransversalPhase{}.supports(0.1));
}
