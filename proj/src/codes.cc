#include "gscforge/codes.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gscforge/errors.h"
#include <nlohmann/json.hpp>

namespace gscforge {

bool TransversalPhase::supports(double p) const {
    if (step <= 0) return true;
    double q = p / step;
    return std::abs(q - std::round(q)) < 1e-9;
}

std::size_t StabilizerCode::correctable_weight() const {
    std::size_t d = distance.value_or(3);
    return d == 0 ? 0 : (d - 1) / 2;
}

void GscParams::validate() const {
    if (a < 3 || a % 2 == 0) {
        throw std::invalid_argument("GSC needs an odd number of cat states a >= 3, got a = " + std::to_string(a));
    }
    if (b < 3) {
        throw std::invalid_argument("GSC needs b >= 3 qubits per cat state, got b = " + std::to_string(b));
    }
}

std::size_t gsc_z_pair_start(std::size_t i, std::size_t b) { return (i / (b - 1)) * b + i % (b - 1); }

PauliString gsc_x_stabilizer(const GscParams &params, std::size_t i) {
    PauliString g(params.num_qubits());
    for (std::size_t j = params.b * i; j < params.b * i + 2 * params.b; j++) {
        g.set(j, 'X');
    }
    return g;
}

StabilizerCode gsc(const GscParams &params) {
    params.validate();
    const std::size_t n = params.num_qubits();
    StabilizerCode code;
    code.name = "gsc_" + std::to_string(params.a) + "_" + std::to_string(params.b);
    code.n = n;
    code.k = 1;
    for (std::size_t i = 0; i < params.a * (params.b - 1); i++) {
        std::size_t q = gsc_z_pair_start(i, params.b);
        PauliString g(n);
        g.set(q, 'Z');
        g.set(q + 1, 'Z');
        code.generators.push_back(std::move(g));
    }
    for (std::size_t i = 0; i + 1 < params.a; i++) {
        code.generators.push_back(gsc_x_stabilizer(params, i));
    }
    PauliString logical_z(n);
    for (std::size_t j = 0; j < params.b; j++) logical_z.set(j, 'X');
    // Z on the first qubit of each subregister, i.e. stride b.
    PauliString logical_x(n);
    for (std::size_t j = 0; j < params.a; j++) logical_x.set(params.b * j, 'Z');
    code.logical_x.push_back(std::move(logical_x));
    code.logical_z.push_back(std::move(logical_z));
    code.distance = params.distance();
    return code;
}

StabilizerCode gsch(const GscParams &params) {
    StabilizerCode code = gsc(params);
    code.name = "gsch_" + std::to_string(params.a) + "_" + std::to_string(params.b);
    std::swap(code.logical_x, code.logical_z);
    return code;
}

std::vector<BasisTerm> gsch_basis(const GscParams &params, int x) {
    params.validate();
    if (x != 0 && x != 1) {
        throw std::invalid_argument("gsch_basis: logical value must be 0 or 1");
    }
    const double amplitude = std::pow(2.0, -0.5 * static_cast<double>(params.a - 1));
    std::vector<BasisTerm> out;
    for (uint64_t i = 0; i < (uint64_t{1} << params.a); i++) {
        if (static_cast<int>(std::popcount(i) & 1) != x) continue;
        std::string bits;
        for (std::size_t j = 0; j < params.a; j++) {
            bits.append(params.b, ((i >> j) & 1) ? '1' : '0');
        }
        out.push_back({std::move(bits), amplitude});
    }
    return out;
}

namespace {

StabilizerCode make_code(std::string name, std::size_t n, std::size_t k, std::vector<std::string> generators,
                         std::vector<std::string> logical_x, std::vector<std::string> logical_z,
                         std::size_t distance) {
    StabilizerCode code;
    code.name = std::move(name);
    code.n = n;
    code.k = k;
    for (const auto &g : generators) code.generators.push_back(PauliString::from_text(g));
    for (const auto &g : logical_x) code.logical_x.push_back(PauliString::from_text(g));
    for (const auto &g : logical_z) code.logical_z.push_back(PauliString::from_text(g));
    code.distance = distance;
    return code;
}

// Punctured first-order Reed-Muller code: qubit q stands for the nonzero
// 4-bit number q + 1. X checks are the 4 coordinate hyperplanes, Z checks add
// their 6 pairwise intersections.
StabilizerCode reed_muller_15() {
    auto has_bit = [](std::size_t q, std::size_t bit) { return (((q + 1) >> bit) & 1) != 0; };
    StabilizerCode code;
    code.name = "reed_muller";
    code.n = 15;
    code.k = 1;
    for (std::size_t bit = 0; bit < 4; bit++) {
        PauliString g(15);
        for (std::size_t q = 0; q < 15; q++) {
            if (has_bit(q, bit)) g.set(q, 'X');
        }
        code.generators.push_back(std::move(g));
    }
    for (std::size_t bit = 0; bit < 4; bit++) {
        PauliString g(15);
        for (std::size_t q = 0; q < 15; q++) {
            if (has_bit(q, bit)) g.set(q, 'Z');
        }
        code.generators.push_back(std::move(g));
    }
    for (std::size_t b1 = 0; b1 < 4; b1++) {
        for (std::size_t b2 = b1 + 1; b2 < 4; b2++) {
            PauliString g(15);
            for (std::size_t q = 0; q < 15; q++) {
                if (has_bit(q, b1) && has_bit(q, b2)) g.set(q, 'Z');
            }
            code.generators.push_back(std::move(g));
        }
    }
    // X-bar: all-X times the bit-0 check leaves X where bit 0 is clear (weight 7).
    PauliString logical_x(15);
    for (std::size_t q = 0; q < 15; q++) {
        if (!has_bit(q, 0)) logical_x.set(q, 'X');
    }
    code.logical_x.push_back(std::move(logical_x));
    code.logical_z.push_back(PauliString::from_text("ZZZIIIIIIIIIIII"));
    code.distance = 3;
    code.transversal_phase = TransversalPhase{0.25, -1};
    return code;
}

// Cyclic [[15,1,5]] code generated by the shifts of IZZIZIYIIIXYIXZ (any 14 of
// the 15 are independent). Found by random search over cyclic generators and
// checked to have no nontrivial logical of weight <= 4.
StabilizerCode fifteen_one_five() {
    const std::string seed = "IZZIZIYIIIXYIXZ";
    std::vector<std::string> generators;
    for (std::size_t shift = 0; shift < 14; shift++) {
        generators.push_back(seed.substr(15 - shift) + seed.substr(0, 15 - shift));
    }
    return make_code("dodecacode", 15, 1, generators, {"YZZYIIIIIXIIIII"}, {"XYXIIIXIIIIXIII"}, 5);
}

std::map<std::string, StabilizerCode> build_registry() {
    std::map<std::string, StabilizerCode> out;

    auto trivial = make_code("trivial", 1, 1, {}, {"X"}, {"Z"}, 1);
    trivial.transversal_phase = TransversalPhase{0, 1};
    out.emplace(trivial.name, trivial);

    out.emplace("four_qubit",
                make_code("four_qubit", 4, 2, {"XXXX", "ZZZZ"}, {"XXII", "XIXI"}, {"ZIZI", "ZZII"}, 2));

    out.emplace("five_qubit", make_code("five_qubit", 5, 1, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}, {"XXXXX"},
                                        {"ZZZZZ"}, 3));

    auto steane = make_code("steane", 7, 1,
                            {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}, {"XXXIIII"},
                            {"ZZZIIII"}, 3);
    steane.transversal_phase = TransversalPhase{0.5, -1};
    out.emplace(steane.name, steane);

    auto shor = gsc(GscParams{3, 3});
    shor.name = "shor";
    out.emplace(shor.name, shor);

    auto rm = reed_muller_15();
    out.emplace(rm.name, rm);

    auto d5 = fifteen_one_five();
    out.emplace(d5.name, d5);
    return out;
}

}  // namespace

const std::map<std::string, StabilizerCode> &registry() {
    static const std::map<std::string, StabilizerCode> codes = build_registry();
    return codes;
}

const StabilizerCode &registry_code(const std::string &name) {
    const auto &codes = registry();
    auto it = codes.find(name);
    if (it == codes.end()) {
        std::string known;
        for (const auto &[key, _] : codes) {
            known += known.empty() ? key : ", " + key;
        }
        throw std::out_of_range("unknown code '" + name + "'; known codes: " + known);
    }
    return it->second;
}

ValidationReport verify_code(const StabilizerCode &code) {
    ValidationReport report;
    auto fail = [&](std::string message) { report.failures.push_back(std::move(message)); };

    auto check_size = [&](const PauliString &p, const std::string &label) {
        if (p.size() != code.n) {
            fail(label + " acts on " + std::to_string(p.size()) + " qubits, expected " + std::to_string(code.n));
            return false;
        }
        if (!p.is_hermitian()) {
            fail(label + " is not Hermitian (phase " + p.str() + ")");
        }
        return true;
    };

    bool sizes_ok = true;
    for (std::size_t i = 0; i < code.generators.size(); i++) {
        sizes_ok &= check_size(code.generators[i], "g" + std::to_string(i));
    }
    for (std::size_t i = 0; i < code.logical_x.size(); i++) {
        sizes_ok &= check_size(code.logical_x[i], "X" + std::to_string(i));
    }
    for (std::size_t i = 0; i < code.logical_z.size(); i++) {
        sizes_ok &= check_size(code.logical_z[i], "Z" + std::to_string(i));
    }
    if (code.logical_x.size() != code.k || code.logical_z.size() != code.k) {
        fail("expected " + std::to_string(code.k) + " logical X and Z operators, got " +
             std::to_string(code.logical_x.size()) + " and " + std::to_string(code.logical_z.size()));
    }
    if (code.generators.size() + code.k != code.n) {
        fail("generator count " + std::to_string(code.generators.size()) + " != n - k = " +
             std::to_string(code.n - code.k));
    }
    if (!sizes_ok) return report;

    for (std::size_t i = 0; i < code.generators.size(); i++) {
        for (std::size_t j = i + 1; j < code.generators.size(); j++) {
            if (!commutes(code.generators[i], code.generators[j])) {
                fail("generators g" + std::to_string(i) + " and g" + std::to_string(j) + " anticommute");
            }
        }
    }
    std::size_t rank = rank_gf2(code.generators);
    if (rank != code.generators.size()) {
        fail("generators are dependent: rank " + std::to_string(rank) + " of " +
             std::to_string(code.generators.size()));
    }
    auto check_logicals = [&](const std::vector<PauliString> &ops, const char *label) {
        for (std::size_t i = 0; i < ops.size(); i++) {
            for (std::size_t j = 0; j < code.generators.size(); j++) {
                if (!commutes(ops[i], code.generators[j])) {
                    fail(std::string(label) + std::to_string(i) + " anticommutes with generator g" +
                         std::to_string(j));
                }
            }
        }
    };
    check_logicals(code.logical_x, "X");
    check_logicals(code.logical_z, "Z");
    std::size_t pairs = std::min(code.logical_x.size(), code.logical_z.size());
    for (std::size_t i = 0; i < pairs; i++) {
        for (std::size_t j = 0; j < pairs; j++) {
            bool anti = !commutes(code.logical_x[i], code.logical_z[j]);
            if (anti != (i == j)) {
                fail("X" + std::to_string(i) + (anti ? " anticommutes" : " commutes") + " with Z" +
                     std::to_string(j));
            }
        }
        for (std::size_t j = i + 1; j < pairs; j++) {
            if (!commutes(code.logical_x[i], code.logical_x[j])) {
                fail("X" + std::to_string(i) + " anticommutes with X" + std::to_string(j));
            }
            if (!commutes(code.logical_z[i], code.logical_z[j])) {
                fail("Z" + std::to_string(i) + " anticommutes with Z" + std::to_string(j));
            }
        }
    }
    return report;
}

std::optional<std::size_t> distance_bruteforce(const StabilizerCode &code, std::size_t max_weight,
                                               double budget) {
    const std::size_t n = code.n;
    double total = 0;
    double binom = 1;
    for (std::size_t w = 1; w <= max_weight && w <= n; w++) {
        binom = binom * static_cast<double>(n - w + 1) / static_cast<double>(w);
        total += binom * std::pow(3.0, static_cast<double>(w));
    }
    if (total > budget) {
        throw BudgetError("distance_bruteforce: enumerating " + std::to_string(static_cast<long long>(total)) +
                          " Paulis exceeds the budget of " + std::to_string(static_cast<long long>(budget)));
    }

    // Column signature of every single-qubit Pauli: commutation bits against
    // the generators, then against every logical operator. A Pauli in the
    // normalizer lies outside the stabilizer group iff it anticommutes with
    // some logical.
    std::vector<const PauliString *> checks;
    for (const auto &g : code.generators) checks.push_back(&g);
    std::size_t num_generators = checks.size();
    for (const auto &l : code.logical_x) checks.push_back(&l);
    for (const auto &l : code.logical_z) checks.push_back(&l);
    const std::size_t words = (checks.size() + 63) / 64;
    std::vector<uint64_t> signature(n * 3 * words, 0);
    const char letters[3] = {'X', 'Y', 'Z'};
    for (std::size_t q = 0; q < n; q++) {
        for (std::size_t l = 0; l < 3; l++) {
            auto p = PauliString::single(n, q, letters[l]);
            for (std::size_t c = 0; c < checks.size(); c++) {
                if (!commutes(p, *checks[c])) {
                    signature[(q * 3 + l) * words + c / 64] |= uint64_t{1} << (c % 64);
                }
            }
        }
    }
    auto is_logical = [&](const std::vector<uint64_t> &acc) {
        for (std::size_t c = 0; c < num_generators; c++) {
            if ((acc[c / 64] >> (c % 64)) & 1) return false;
        }
        for (std::size_t c = num_generators; c < checks.size(); c++) {
            if ((acc[c / 64] >> (c % 64)) & 1) return true;
        }
        return false;
    };

    for (std::size_t w = 1; w <= max_weight && w <= n; w++) {
        std::vector<std::vector<uint64_t>> acc(w + 1, std::vector<uint64_t>(words, 0));
        bool found = false;
        auto recurse = [&](auto &&self, std::size_t depth, std::size_t first) -> void {
            if (found) return;
            if (depth == w) {
                found = is_logical(acc[depth]);
                return;
            }
            for (std::size_t q = first; q + (w - depth) <= n && !found; q++) {
                for (std::size_t l = 0; l < 3 && !found; l++) {
                    const uint64_t *sig = &signature[(q * 3 + l) * words];
                    for (std::size_t k = 0; k < words; k++) acc[depth + 1][k] = acc[depth][k] ^ sig[k];
                    self(self, depth + 1, q + 1);
                }
            }
        };
        recurse(recurse, 0, 0);
        if (found) return w;
    }
    return std::nullopt;
}

std::string code_to_json(const StabilizerCode &code) {
    nlohmann::ordered_json j;
    j["name"] = code.name;
    j["n"] = code.n;
    j["k"] = code.k;
    auto strings = [](const std::vector<PauliString> &ops) {
        std::vector<std::string> out;
        for (const auto &p : ops) out.push_back(p.str());
        return out;
    };
    j["stabilizers"] = strings(code.generators);
    j["logical_x"] = strings(code.logical_x);
    j["logical_z"] = strings(code.logical_z);
    if (code.distance) j["distance"] = *code.distance;
    if (code.transversal_phase) {
        j["transversal_phase"] = {{"step", code.transversal_phase->step},
                                  {"direction", code.transversal_phase->direction}};
    }
    return j.dump(2);
}

StabilizerCode code_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("code definition is not valid JSON: ") + e.what());
    }
    try {
        StabilizerCode code;
        code.name = j.at("name").get<std::string>();
        code.n = j.at("n").get<std::size_t>();
        code.k = j.at("k").get<std::size_t>();
        for (const auto &s : j.at("stabilizers")) code.generators.push_back(PauliString::from_text(s.get<std::string>()));
        for (const auto &s : j.at("logical_x")) code.logical_x.push_back(PauliString::from_text(s.get<std::string>()));
        for (const auto &s : j.at("logical_z")) code.logical_z.push_back(PauliString::from_text(s.get<std::string>()));
        if (j.contains("distance") && !j["distance"].is_null()) code.distance = j["distance"].get<std::size_t>();
        if (j.contains("transversal_phase")) {
            const auto &t = j["transversal_phase"];
            code.transversal_phase = TransversalPhase{t.at("step").get<double>(), t.at("direction").get<int>()};
        }
        return code;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed code definition: ") + e.what());
    }
}

StabilizerCode load_code(const std::string &name_or_path) {
    const auto &codes = registry();
    if (auto it = codes.find(name_or_path); it != codes.end()) return it->second;
    std::ifstream in(name_or_path);
    if (!in) {
        // Reports the registry names.
        return registry_code(name_or_path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return code_from_json(buffer.str());
}

}  // namespace gscforge
