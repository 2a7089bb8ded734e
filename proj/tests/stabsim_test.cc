#include "gscforge/stabsim.h"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <cstdlib>

#include "gscforge/errors.h"

using namespace gscforge;

namespace {

using cd = std::complex<double>;

// Minimal dense simulator used only as an oracle for the tableau.
struct Dense {
    std::size_t n;
    std::vector<cd> amp;
    explicit Dense(std::size_t n) : n(n), amp(std::size_t{1} << n) { amp[0] = 1; }

    void one(std::size_t q, cd m00, cd m01, cd m10, cd m11) {
        for (std::size_t i = 0; i < amp.size(); i++) {
            if (i >> q & 1) continue;
            auto j = i | (std::size_t{1} << q);
            cd a = amp[i], b = amp[j];
            amp[i] = m00 * a + m01 * b;
            amp[j] = m10 * a + m11 * b;
        }
    }
    void gate(const Gate &g) {
        const double r = 1 / std::sqrt(2.0);
        const cd I(0, 1);
        switch (g.kind) {
            case GateKind::H:
                return one(g.q0, r, r, r, -r);
            case GateKind::S:
                return one(g.q0, 1, 0, 0, I);
            case GateKind::X:
                return one(g.q0, 0, 1, 1, 0);
            case GateKind::Y:
                return one(g.q0, 0, -I, I, 0);
            case GateKind::Z:
                return one(g.q0, 1, 0, 0, -1);
            default:
                break;
        }
        // Controlled single-qubit Pauli.
        std::vector<cd> out(amp.size());
        for (std::size_t i = 0; i < amp.size(); i++) {
            if (!(i >> g.q0 & 1)) {
                out[i] += amp[i];
                continue;
            }
            std::size_t bit = i >> g.q1 & 1;
            std::size_t j = i ^ (std::size_t{1} << g.q1);
            if (g.kind == GateKind::CX) out[j] += amp[i];
            if (g.kind == GateKind::CZ) out[i] += bit ? -amp[i] : amp[i];
            if (g.kind == GateKind::CY) out[j] += (bit ? cd(0, -1) : cd(0, 1)) * amp[i];
        }
        amp = out;
    }
    // <psi| P |psi>, with P given letter by letter.
    cd expect(const PauliString &p) const {
        cd total = 0;
        const cd I(0, 1);
        for (std::size_t i = 0; i < amp.size(); i++) {
            std::size_t j = i;
            cd coef = std::pow(I, p.phase());
            for (std::size_t q = 0; q < n; q++) {
                bool bit = i >> q & 1;
                switch (p.at(q)) {
                    case 'X':
                        j ^= std::size_t{1} << q;
                        break;
                    case 'Y':
                        j ^= std::size_t{1} << q;
                        coef *= bit ? -I : I;
                        break;
                    case 'Z':
                        if (bit) coef = -coef;
                        break;
                }
            }
            total += std::conj(amp[j]) * coef * amp[i];
        }
        return total;
    }
};

Gate random_gate(std::mt19937_64 &rng, std::size_t n) {
    auto kind = static_cast<GateKind>(rng() % 8);
    std::size_t q0 = rng() % n, q1 = rng() % n;
    while (is_two_qubit(kind) && q1 == q0) q1 = rng() % n;
    return Gate{kind, q0, is_two_qubit(kind) ? q1 : 0};
}

PauliString random_pauli(std::mt19937_64 &rng, std::size_t n) {
    PauliString p(n);
    for (std::size_t q = 0; q < n; q++) p.set(q, "IXYZ"[rng() % 4]);
    p.set_phase(rng() % 2 ? 2 : 0);
    return p;
}

void expect_valid_tableau(const Tableau &t) {
    const auto n = t.num_qubits();
    std::vector<PauliString> all = t.stabilizers();
    all.insert(all.end(), t.destabilizers().begin(), t.destabilizers().end());
    EXPECT_EQ(rank_gf2(all), 2 * n);
    for (std::size_t i = 0; i < n; i++) {
        EXPECT_TRUE(t.stabilizers()[i].is_hermitian());
        for (std::size_t j = 0; j < n; j++) {
            EXPECT_TRUE(commutes(t.stabilizers()[i], t.stabilizers()[j]));
            EXPECT_TRUE(commutes(t.destabilizers()[i], t.destabilizers()[j]));
            EXPECT_EQ(commutes(t.stabilizers()[i], t.destabilizers()[j]), i != j);
        }
    }
}

struct ScopedEnv {
    std::string name;
    ScopedEnv(const char *n, const char *v) : name(n) { setenv(n, v, 1); }
    ~ScopedEnv() { unsetenv(name.c_str()); }
};

}  // namespace

TEST(tableau, measure_zero_state) {
    Tableau t(1);
    Rng rng(1);
    EXPECT_EQ(t.peek(PauliString::from_text("Z")), false);
    EXPECT_FALSE(t.measure(PauliString::from_text("Z"), rng));
    EXPECT_EQ(t.peek(PauliString::from_text("-Z")), true);
    EXPECT_FALSE(t.peek(PauliString::from_text("X")).has_value());
}

TEST(tableau, encoded_gsc_zero_has_definite_logical) {
    auto code = gsc(GscParams{3, 3});
    auto stabs = code.generators;
    stabs.push_back(code.logical_z[0]);
    for (uint64_t seed = 0; seed < 5; seed++) {
        Tableau t(9);
        Rng rng(seed);
        t.encode(0, stabs, rng);
        EXPECT_EQ(t.peek(code.logical_z[0]), false);
        for (const auto &g : code.generators) EXPECT_EQ(t.peek(g), false) << g.str();
        EXPECT_FALSE(t.peek(code.logical_x[0]).has_value());
    }
}

TEST(tableau, encode_reproduces_generators_of_every_registry_code) {
    for (const auto &[name, code] : registry()) {
        if (code.n == 0) continue;
        auto stabs = code.generators;
        stabs.insert(stabs.end(), code.logical_z.begin(), code.logical_z.end());
        // Embed the code between two spectator qubits that are entangled first.
        Tableau t(code.n + 2);
        Rng rng(3);
        t.h(0);
        t.cx(0, 1);
        t.cx(1, code.n + 1);
        t.encode(1, stabs, rng);
        for (const auto &g : stabs) EXPECT_EQ(t.peek(g.embedded(code.n + 2, 1)), false) << name << " " << g.str();
        expect_valid_tableau(t);
    }
}

TEST(tableau, matches_dense_oracle_on_random_circuits) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; trial++) {
        const std::size_t n = 2 + trial % 4;
        Tableau t(n);
        Dense d(n);
        for (int k = 0; k < 25; k++) {
            auto g = random_gate(rng, n);
            t.apply(g);
            d.gate(g);
        }
        expect_valid_tableau(t);
        for (int k = 0; k < 30; k++) {
            auto p = random_pauli(rng, n);
            auto e = d.expect(p);
            auto v = t.peek(p);
            if (v) {
                EXPECT_NEAR(e.real(), *v ? -1.0 : 1.0, 1e-9) << p.str();
            } else {
                EXPECT_NEAR(std::abs(e), 0.0, 1e-9) << p.str();
            }
        }
    }
}

TEST(tableau, measurement_collapses_consistently) {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 30; trial++) {
        const std::size_t n = 3 + trial % 3;
        Tableau t(n);
        Rng rng(trial);
        for (int k = 0; k < 20; k++) t.apply(random_gate(gen, n));
        auto p = random_pauli(gen, n);
        if (p.is_identity()) continue;
        bool first = t.measure(p, rng);
        EXPECT_EQ(t.peek(p), first);
        EXPECT_EQ(t.measure(p, rng), first);
        expect_valid_tableau(t);
    }
}

TEST(tableau, forced_outcomes) {
    Tableau t(2);
    t.h(0);
    t.cx(0, 1);
    EXPECT_TRUE(t.measure_forced(PauliString::from_text("ZI"), true));
    EXPECT_EQ(t.peek(PauliString::from_text("IZ")), true);
    EXPECT_EQ(t.peek(PauliString::from_text("XX")), std::nullopt);
}

TEST(run_circuit, depolarizing_with_p_one_flips_z_two_thirds_of_the_time) {
    Circuit c(1);
    c.append(Depolarize1{1.0, {0}});
    c.append(MeasurePauli{PauliString::from_text("Z"), "m"});
    const std::size_t shots = 30000;
    std::size_t flips = 0;
    Rng rng(99);
    for (std::size_t s = 0; s < shots; s++) {
        Tableau t(1);
        flips += run_circuit(c, t, rng).bit("m");
    }
    auto [lo, hi] = clopper_pearson(flips, shots, 0.999);
    EXPECT_LE(lo, 2.0 / 3.0);
    EXPECT_GE(hi, 2.0 / 3.0);
}

TEST(run_circuit, phase_gate_capability) {
    Circuit c(1);
    c.append(Gate{GateKind::H, 0});
    c.append(PhaseGate{1.0, 0});
    c.append(PhaseGate{2.0, 0});
    c.append(PhaseGate{-1.0, 0});
    c.append(ObservableCheck{PauliString::from_text("X"), 1});
    Tableau t(1);
    Rng rng(0);
    EXPECT_TRUE(run_circuit(c, t, rng).violations.empty());

    Circuit bad(1);
    bad.append(PhaseGate{0.25, 0});
    Tableau t2(1);
    try {
        run_circuit(bad, t2, rng);
        FAIL() << "expected CapabilityError";
    } catch (const CapabilityError &e) {
        EXPECT_NE(std::string(e.what()).find("PHASE 0.25 0"), std::string::npos) << e.what();
    }
}

TEST(run_circuit, classical_control_and_checks) {
    Circuit c(2);
    c.append(Gate{GateKind::H, 0});
    c.append(MeasurePauli{PauliString::from_text("ZI"), "m"});
    c.append(ClassicallyControlledPauli{"m", true, PauliString::from_text("XI")});
    c.append(ObservableCheck{PauliString::from_text("ZI"), 1});
    c.append(ObservableCheck{PauliString::from_text("IX"), 1});
    for (uint64_t seed = 0; seed < 8; seed++) {
        Tableau t(2);
        Rng rng(seed);
        auto rec = run_circuit(c, t, rng);
        ASSERT_EQ(rec.violations.size(), 1u);
        EXPECT_NE(rec.violations[0].find("not definite"), std::string::npos);
        EXPECT_THROW(rec.bit("nope"), std::out_of_range);
    }
}

TEST(run_circuit, generic_gadgets_pass_their_qec_checks) {
    const GscParams params{3, 3};
    const auto &c1 = registry_code("four_qubit");
    const auto &steane = registry_code("steane");
    const auto &five = registry_code("five_qubit");
    struct Case {
        RegisterLayout layout;
        Circuit gadget;
    };
    std::vector<Case> cases = {
        {hadamard_layout(params, c1), hadamard_generic(params, c1, 1)},
        {flip_layout(params, steane, registry_code("shor")),
         controlled_flip_generic(params, steane, registry_code("shor"), FlipKind::Z)},
        {flip_layout(GscParams{3, 5}, five, steane), controlled_flip_generic(GscParams{3, 5}, five, steane, FlipKind::X)},
    };
    for (auto &[layout, gadget] : cases) {
        // Data registers start in random encoded states; helpers are left raw.
        for (uint64_t seed = 0; seed < 6; seed++) {
            GateBuilder prep(layout);
            for (std::size_t s = 0; s < layout.segments().size(); s++) {
                auto role = layout.segment(s).role;
                if (role == Role::C1 || role == Role::C2) prep.encode(s, seed & 1);
            }
            Circuit c = prep.take();
            c.append(gadget);
            Tableau t(c.num_qubits());
            Rng rng(seed);
            auto rec = run_circuit(c, t, rng);
            EXPECT_TRUE(rec.violations.empty()) << rec.violations.front();
        }
    }
}

TEST(observables_for, counts_and_shapes) {
    const GscParams params{3, 3};
    const auto &target = gsc(params);
    auto obs0 = observables_for(0, params, target);
    ASSERT_EQ(obs0.size(), 3u);
    EXPECT_EQ(obs0[0].body(), "IIIXXXIIIIIIIIIIII");
    EXPECT_EQ(obs0[1].body(), "IIIIIIXXXIIIIIIIII");
    // Z-bar of the target is X on its s_0; it meets the flip X-bar (Z on 0, 3, 6) on one qubit, as
    // odd as b, so the whole of s_0 carries Z.
    EXPECT_EQ(obs0[2].body(), "ZZZIIIIIIXXXIIIIII");
    auto obs2 = observables_for(2, params, target);
    ASSERT_EQ(obs2.size(), 1u);
    EXPECT_EQ(obs2[0].body(), "ZZZZZZZZZXXXIIIIII");
    EXPECT_EQ(observables_for(kControlStep, params, target).size(), 4u);
    EXPECT_THROW(observables_for(3, params, target), std::invalid_argument);
    // [[4,2,2]]: X-bar = XXII and Z-bar = ZIZI meet on one qubit while b = 4 is even.
    auto q = observables_for(0, GscParams{3, 4}, registry_code("four_qubit"));
    EXPECT_EQ(q.back().body(), "ZIIIIIIIIIIIZIZI");
}

TEST(observables_for, hold_on_the_noiseless_state) {
    for (const char *name : {"five_qubit", "steane", "shor", "four_qubit", "trivial"}) {
        for (auto kind : {FlipKind::X, FlipKind::Z}) {
            for (int step = kControlStep; step < 3; step++) {
                ExperimentSpec spec{registry_code(name), GscParams{3, 5}, step, kind, {}, 0, 0};
                LerHarness h(spec);
                Rng rng(step + 7);
                EXPECT_FALSE(h.tableau_shot_fails(PauliString(h.layout().num_qubits()), rng))
                    << name << " step " << step;
                EXPECT_FALSE(h.frame_shot_fails(PauliString(h.layout().num_qubits())));
            }
        }
    }
}

TEST(ler, frame_and_tableau_agree_shot_by_shot) {
    for (const char *name : {"five_qubit", "steane"}) {
        for (auto kind : {FlipKind::X, FlipKind::Z}) {
            for (int step : {kControlStep, 0, 1, 2}) {
                ExperimentSpec spec{registry_code(name), GscParams{3, 5}, step, kind, {}, 0, 11};
                LerHarness h(spec);
                Rng rng(1);
                std::size_t frame = 0, tab = 0;
                for (std::size_t s = 0; s < 150; s++) {
                    auto e = h.sample_error(0.08, s);
                    bool f = h.frame_shot_fails(e);
                    bool t = h.tableau_shot_fails(e, rng);
                    ASSERT_EQ(f, t) << name << " step " << step << " error " << e.str();
                    frame += f;
                    tab += t;
                }
                EXPECT_EQ(frame, tab);
                EXPECT_GT(frame, 0u);
            }
        }
    }
}

TEST(ler, single_faults_never_fail) {
    // Every weight-1 error is corrected at every step (first-order faults).
    for (const char *name : {"five_qubit", "steane", "shor"}) {
        for (int step : {kControlStep, 0, 1, 2}) {
            ExperimentSpec spec{registry_code(name), GscParams{3, 5}, step, FlipKind::X, {}, 0, 0};
            LerHarness h(spec);
            const auto n = h.layout().num_qubits();
            for (std::size_t q = 0; q < n; q++)
                for (char c : {'X', 'Y', 'Z'}) EXPECT_FALSE(h.frame_shot_fails(PauliString::single(n, q, c)));
        }
    }
}

TEST(ler, zero_noise_and_thread_independence) {
    ExperimentSpec spec{registry_code("five_qubit"), GscParams{3, 5}, 0, FlipKind::X, {}, 0, 7};
    LerHarness h(spec);
    EXPECT_EQ(h.run_point(0.0, 2000).failures, 0u);
    auto single = h.run_point(0.05, 4000);
    std::size_t threaded;
    {
        ScopedEnv env("GSC_THREADS", "3");
        threaded = h.run_point(0.05, 4000).failures;
    }
    EXPECT_EQ(single.failures, threaded);
    EXPECT_GT(single.failures, 0u);
    EXPECT_LE(single.ci_low, single.ler);
    EXPECT_GE(single.ci_high, single.ler);
    EXPECT_EQ(run_point(spec, 0.05, 4000).failures, single.failures);
}

TEST(ler, sampled_error_rate_matches_channel) {
    ExperimentSpec spec{registry_code("steane"), GscParams{3, 5}, 0, FlipKind::X, {}, 0, 3};
    LerHarness h(spec);
    std::size_t counts[4] = {0, 0, 0, 0};
    const std::size_t shots = 5000;
    for (std::size_t s = 0; s < shots; s++) {
        auto e = h.sample_error(0.3, s);
        for (std::size_t q = 0; q < e.size(); q++) counts[std::string("IXYZ").find(e.at(q))]++;
    }
    const double total = static_cast<double>(shots * h.layout().num_qubits());
    for (int k = 1; k < 4; k++) EXPECT_NEAR(counts[k] / total, 0.1, 0.005);
}

TEST(clopper_pearson, matches_binomial_tail_oracle) {
    auto binom_cdf = [](std::size_t k, std::size_t n, double p) {
        // P[X <= k] by direct summation in log space.
        double total = 0;
        for (std::size_t j = 0; j <= k; j++) {
            double lc = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0);
            total += std::exp(lc + j * std::log(p) + (n - j) * std::log1p(-p));
        }
        return total;
    };
    for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 10}, {3, 10}, {17, 200}, {200, 200}}) {
        auto [lo, hi] = clopper_pearson(k, n);
        if (k > 0) EXPECT_NEAR(1 - binom_cdf(k - 1, n, lo), 0.025, 1e-9);
        if (k < n) EXPECT_NEAR(binom_cdf(k, n, hi), 0.025, 1e-9);
    }
    EXPECT_NEAR(clopper_pearson(0, 10).second, 1 - std::pow(0.025, 0.1), 1e-12);
    EXPECT_EQ(clopper_pearson(0, 10).first, 0.0);
    EXPECT_EQ(clopper_pearson(5, 5).second, 1.0);
}

TEST(estimate_slope, exact_power_law) {
    std::vector<LerPoint> pts;
    for (double p : {0.001, 0.003, 0.01, 0.03}) {
        LerPoint pt;
        pt.p = p;
        pt.shots = 1;
        pt.failures = 1;
        pt.ler = p * p;
        pts.push_back(pt);
    }
    EXPECT_NEAR(estimate_slope(pts), 2.0, 1e-12);
    pts.resize(2);
    EXPECT_THROW(estimate_slope(pts), std::invalid_argument);
}

TEST(ler_csv, format) {
    LerPoint pt{0.01, 100000, 123, 0.00123, 0.0010213, 0.00146789};
    auto csv = ler_csv("0", {pt}, {{"seed", "7"}});
    EXPECT_EQ(csv,
              "# gsc-forge v1\n# seed: 7\nstep,p,shots,failures,ler,ci_low,ci_high\n"
              "0,0.01,100000,123,0.00123,0.0010213,0.00146789\n");
}

TEST(deutsch_jozsa, constant_and_balanced) {
    EXPECT_TRUE(deutsch_jozsa(DjOracle::Constant0, 0, 1).empty());
    for (auto o : {DjOracle::Constant0, DjOracle::Constant1}) {
        auto counts = deutsch_jozsa(o, 10, 5);
        EXPECT_EQ(counts["00"], 10u) << dj_oracle_name(o);
    }
    for (auto o : {DjOracle::BalancedFirst, DjOracle::BalancedSecond, DjOracle::BalancedParity,
                   DjOracle::BalancedParityNot}) {
        auto counts = deutsch_jozsa(o, 10, 5);
        EXPECT_EQ(counts.count("00"), 0u) << dj_oracle_name(o);
    }
    EXPECT_EQ(dj_oracle_from_name("balanced_parity"), DjOracle::BalancedParity);
    EXPECT_THROW(dj_oracle_from_name("bogus"), std::invalid_argument);
}

TEST(deutsch_jozsa, balanced_outcomes_identify_the_oracle) {
    // The ideal output is the deterministic string s with f(x) = s.x (+ c).
    EXPECT_EQ(deutsch_jozsa(DjOracle::BalancedFirst, 4, 2), (std::map<std::string, std::size_t>{{"10", 4}}));
    EXPECT_EQ(deutsch_jozsa(DjOracle::BalancedSecond, 4, 2), (std::map<std::string, std::size_t>{{"01", 4}}));
    EXPECT_EQ(deutsch_jozsa(DjOracle::BalancedParityNot, 4, 2), (std::map<std::string, std::size_t>{{"11", 4}}));
}
