#include "gscforge/overhead.h"

#include <gtest/gtest.h>

#include <cmath>
#include <nlohmann/json.hpp>
#include <random>

using namespace gscforge;

namespace {

// Bit-flip repetition code on w qubits: X-bar = X^w has weight w.
StabilizerCode repetition(std::size_t w) {
    StabilizerCode code;
    code.name = "rep" + std::to_string(w);
    code.n = w;
    code.k = 1;
    for (std::size_t i = 0; i + 1 < w; i++) {
        PauliString g(w);
        g.set(i, 'Z');
        g.set(i + 1, 'Z');
        code.generators.push_back(g);
    }
    code.logical_x.push_back(PauliString::from_text(std::string(w, 'X')));
    code.logical_z.push_back(PauliString::single(w, 0, 'Z'));
    code.distance = 1;
    return code;
}

OverheadParams params(std::size_t a, std::size_t b, std::size_t r, std::size_t flip) {
    OverheadParams p;
    p.a = a;
    p.b = b;
    p.r = r;
    p.flip_weight = flip;
    p.n_c1 = 7;
    p.d_c1 = 3;
    p.n_rc = 15;
    return p;
}

TEST(Overhead, GscClosedForm) {
    EXPECT_EQ(n2_gsc(params(3, 3, 3, 3)), 72u);
    EXPECT_EQ(n2_gsc(params(3, 5, 3, 3)), 132u);
    EXPECT_EQ(n2_gsc(params(3, 3, 1, 3)), 24u);
    EXPECT_EQ(count_n2_gsc(GscParams{3, 3}, 1), 24u);
}

TEST(Overhead, GscMatchesCountedExtraction) {
    for (std::size_t a : {3, 5}) {
        for (std::size_t b : {3, 5}) {
            for (std::size_t r : {1, 2, 3}) {
                EXPECT_EQ(n2_gsc(params(a, b, r, 1)), count_n2_gsc(GscParams{a, b}, r)) << a << "," << b << "," << r;
            }
        }
    }
}

TEST(Overhead, ControlledFlipClosedForm) { EXPECT_EQ(n2_controlled_flip(params(3, 3, 3, 3)), 234u); }

TEST(Overhead, AsBuiltModelMatchesCountedCircuits) {
    for (std::size_t a : {3, 5}) {
        for (std::size_t b : {3, 5}) {
            for (std::size_t r : {1, 3}) {
                for (std::size_t w : {std::size_t{1}, std::size_t{3}, b}) {
                    auto target = repetition(w);
                    auto counted = count_n2_controlled_flip(GscParams{a, b}, r, target, FlipKind::X);
                    EXPECT_EQ(counted, n2_controlled_flip_as_built(params(a, b, r, w)))
                        << "a=" << a << " b=" << b << " r=" << r << " w=" << w;
                }
            }
        }
    }
    // Z-bar of the repetition code has weight 1.
    EXPECT_EQ(count_n2_controlled_flip(GscParams{3, 3}, 3, repetition(3), FlipKind::Z),
              n2_controlled_flip_as_built(params(3, 3, 3, 1)));
}

// The closed form charges b step gates and one |O| per iteration; the circuit
// spends |O| step gates and r |O| on the modified stabilizer of steps 0..a-2.
TEST(Overhead, ClosedFormAndCircuitDifferByTheModifiedRowTerms) {
    auto p = params(3, 3, 3, 3);
    EXPECT_EQ(n2_controlled_flip_as_built(p), 243u);
    EXPECT_EQ(count_n2_controlled_flip(GscParams{3, 3}, 3, repetition(3)), 243u);
    for (std::size_t r : {1, 3}) {
        auto q = params(5, 5, r, 5);
        const long diff = static_cast<long>(n2_controlled_flip(q)) - static_cast<long>(n2_controlled_flip_as_built(q));
        EXPECT_EQ(diff, static_cast<long>(q.a * q.flip_weight) - static_cast<long>((q.a - 1) * q.r * q.flip_weight));
    }
}

TEST(Overhead, RejectsDegenerateParams) {
    EXPECT_THROW(n2_controlled_flip(params(3, 3, 3, 0)), std::invalid_argument);
    EXPECT_THROW(n2_gsc(params(3, 3, 0, 1)), std::invalid_argument);
    EXPECT_THROW(n2_gsc(params(2, 3, 1, 1)), std::invalid_argument);
    auto p = params(3, 3, 1, 1);
    p.d_c1 = 9;
    EXPECT_THROW(n1_gsc(p), std::invalid_argument);
}

TEST(Overhead, SingleQubitAndQubitCounts) {
    auto p = params(3, 3, 3, 3);
    EXPECT_EQ(p.t_gsc(), 1u);
    EXPECT_EQ(n1_controlled_flip(p), 3u);
    EXPECT_EQ(n1_hadamard(p), 6u);
    EXPECT_EQ(n1_flip_c1_c2(p), 12u);
    EXPECT_EQ(qubits_gsc_register(p), 18u);
    EXPECT_EQ(qubits_flip_c1_c2(p), 36u);
    EXPECT_EQ(qec_rounds(p), 3u);
    EXPECT_EQ(params(5, 7, 1, 1).t_gsc(), 2u);
}

TEST(Overhead, CompositeGatesFollowTheirParts) {
    auto p = params(5, 5, 3, 4);
    p.rc_stabilizer_weight = 40;
    p.rc_max_weight = 8;
    EXPECT_EQ(n2_hadamard(p), 2 * n2_controlled_flip(p));
    EXPECT_EQ(n2_flip_c1_c2(p), 4 * n2_controlled_flip(p));
    EXPECT_EQ(n2_rc(p), 120u);
    EXPECT_EQ(n2_z_rotation(p), 8 * n2_controlled_flip(p) + n2_gsc(p) + 120);
    EXPECT_EQ(n1_z_rotation(p), 2 * n1_flip_c1_c2(p) + 15 + 2 * p.t_gsc());
    EXPECT_EQ(qubits_z_rotation(p), 2 * (25 + 10 + 4) + 15 + 8);
}

// Random parameter sets: the GSC-side counts depend on C1 and RC only
// through n_MC, so swapping their sizes changes nothing.
TEST(Overhead, SwapSymmetry) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; trial++) {
        auto p = params(3 + 2 * (rng() % 4), 3 + rng() % 6, 1 + rng() % 5, 1 + rng() % 9);
        p.n_c1 = 3 + rng() % 20;
        p.n_rc = 3 + rng() % 20;
        p.d_c1 = 1 + rng() % std::min(p.n_c1, p.n_rc);
        auto q = p;
        std::swap(q.n_c1, q.n_rc);
        EXPECT_EQ(p.n_mc(), q.n_mc());
        EXPECT_EQ(n2_controlled_flip(p), n2_controlled_flip(q));
        EXPECT_EQ(n2_flip_c1_c2(p), n2_flip_c1_c2(q));
        EXPECT_EQ(n1_flip_c1_c2(p), n1_flip_c1_c2(q));
        EXPECT_EQ(qubits_flip_c1_c2(p), qubits_flip_c1_c2(q));
    }
}

TEST(Triorthogonal, Examples) {
    EXPECT_EQ(triorthogonal_qubits(3, 1), 11u);
    EXPECT_THROW(triorthogonal_qubits(1, 1), std::invalid_argument);
    EXPECT_THROW(triorthogonal_qubits(3, 0), std::invalid_argument);
}

TEST(Triorthogonal, MonotoneAndTight) {
    for (double c : {0.5, 1.0, 3.0}) {
        for (std::size_t d = 2; d < 200; d++) {
            EXPECT_LE(triorthogonal_qubits(d, c), triorthogonal_qubits(d + 1, c));
        }
    }
    for (std::size_t d = 2; d < 200; d++) {
        const double l = std::log(static_cast<double>(d));
        const double model = static_cast<double>(d * d) * l * l;
        const double ratio = static_cast<double>(triorthogonal_qubits(d, 1)) / model;
        EXPECT_GE(ratio, 1.0);
        EXPECT_LE(ratio, 1.0 + 1.0 / model);
    }
}

TEST(Overhead, ParamsFromCodesAndJson) {
    auto p = overhead_params(registry_code("steane"), registry_code("reed_muller"), GscParams{3, 7}, 3);
    EXPECT_EQ(p.n_c1, 7u);
    EXPECT_EQ(p.n_rc, 15u);
    EXPECT_EQ(p.n_mc(), 15u);
    EXPECT_EQ(p.d_c1, 3u);
    EXPECT_GE(p.flip_weight, 3u);
    std::size_t weight = 0;
    for (const auto &g : registry_code("reed_muller").generators) weight += g.weight();
    EXPECT_EQ(p.rc_stabilizer_weight, weight);
    auto j = nlohmann::json::parse(overhead_json(p));
    EXPECT_EQ(j["schema"], "gsc-forge/overhead/v1");
    EXPECT_EQ(j["n2"]["gsc"], n2_gsc(p));
    EXPECT_EQ(j["n2"]["controlled_flip_gsch"], n2_controlled_flip(p));
    EXPECT_EQ(j["qubits"]["z_rotation"], qubits_z_rotation(p));
    EXPECT_EQ(j["qec_rounds"], 3);
}

}  // namespace
