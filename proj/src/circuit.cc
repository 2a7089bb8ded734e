#include "gscforge/circuit.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gscforge {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::CX:
            return "CX";
        case GateKind::CY:
            return "CY";
        case GateKind::CZ:
            return "CZ";
    }
    return "?";
}

bool is_two_qubit(GateKind kind) { return kind == GateKind::CX || kind == GateKind::CY || kind == GateKind::CZ; }

void Circuit::append(Instruction instruction) {
    auto check_qubit = [&](std::size_t q) {
        if (q >= num_qubits_) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " out of range for a " +
                                        std::to_string(num_qubits_) + "-qubit circuit");
        }
    };
    auto check_pauli = [&](const PauliString &p) {
        if (p.size() != num_qubits_) {
            throw std::invalid_argument("Pauli " + p.str() + " has " + std::to_string(p.size()) +
                                        " qubits, circuit has " + std::to_string(num_qubits_));
        }
        if (!p.is_hermitian()) {
            throw std::invalid_argument("Pauli " + p.str() + " is not Hermitian");
        }
    };
    std::visit(overloaded{
                   [&](const Gate &g) {
                       check_qubit(g.q0);
                       if (is_two_qubit(g.kind)) {
                           check_qubit(g.q1);
                           if (g.q0 == g.q1) throw std::invalid_argument("two-qubit gate on a single qubit");
                       }
                   },
                   [&](const PhaseGate &g) { check_qubit(g.qubit); },
                   [&](const Depolarize1 &d) {
                       if (d.probability < 0 || d.probability > 1) {
                           throw std::invalid_argument("depolarizing probability outside [0, 1]");
                       }
                       for (auto q : d.qubits) check_qubit(q);
                   },
                   [&](const MeasurePauli &m) {
                       check_pauli(m.observable);
                       if (std::find(keys_.begin(), keys_.end(), m.key) != keys_.end()) {
                           throw std::invalid_argument("measurement key '" + m.key + "' used twice");
                       }
                       keys_.push_back(m.key);
                   },
                   [&](const ClassicallyControlledPauli &c) {
                       check_pauli(c.pauli);
                       if (std::find(keys_.begin(), keys_.end(), c.key) == keys_.end()) {
                           throw std::invalid_argument("classical control on unknown key '" + c.key + "'");
                       }
                   },
                   [&](const QecRound &r) {
                       for (const auto &s : r.stabilizers) check_pauli(s);
                   },
                   [&](const ObservableCheck &o) { check_pauli(o.observable); },
                   [&](const Encode &e) {
                       if (e.stabilizers.empty()) throw std::invalid_argument("empty encoding");
                       for (const auto &s : e.stabilizers) {
                           if (s.size() != e.size()) throw std::invalid_argument("ragged encoding stabilizers");
                       }
                       if (e.stabilizers.size() != e.size()) {
                           throw std::invalid_argument("encoding '" + e.label + "' needs exactly one operator per qubit");
                       }
                       check_qubit(e.offset + e.size() - 1);
                   },
               },
               instruction);
    instructions_.push_back(std::move(instruction));
}

void Circuit::append(const Circuit &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("cannot append a circuit of a different width");
    }
    for (const auto &inst : other.instructions_) append(inst);
}

std::size_t Circuit::two_qubit_gate_count() const {
    std::size_t count = 0;
    for (const auto &inst : instructions_) {
        if (auto g = std::get_if<Gate>(&inst); g && is_two_qubit(g->kind)) count++;
    }
    return count;
}

std::size_t Circuit::count_qec_rounds() const {
    return static_cast<std::size_t>(std::count_if(instructions_.begin(), instructions_.end(), [](const Instruction &i) {
        return std::holds_alternative<QecRound>(i);
    }));
}

std::optional<std::size_t> Circuit::first_measurement() const {
    for (std::size_t k = 0; k < instructions_.size(); k++) {
        if (std::holds_alternative<MeasurePauli>(instructions_[k])) return k;
    }
    return std::nullopt;
}

Circuit Circuit::slice(std::size_t begin, std::size_t end) const {
    Circuit out(num_qubits_);
    end = std::min(end, instructions_.size());
    // Keys produced before `begin` stay valid targets for classical controls.
    for (std::size_t k = 0; k < begin && k < instructions_.size(); k++) {
        if (auto m = std::get_if<MeasurePauli>(&instructions_[k])) out.keys_.push_back(m->key);
    }
    for (std::size_t k = begin; k < end; k++) out.append(instructions_[k]);
    return out;
}

std::string instruction_text(const Instruction &instruction) {
    std::ostringstream out;
    std::visit(overloaded{
                   [&](const Gate &g) {
                       out << gate_name(g.kind) << ' ' << g.q0;
                       if (is_two_qubit(g.kind)) out << ' ' << g.q1;
                   },
                   [&](const PhaseGate &g) { out << "PHASE " << format_double(g.p) << ' ' << g.qubit; },
                   [&](const Depolarize1 &d) {
                       out << "DEPOLARIZE1 " << format_double(d.probability);
                       for (auto q : d.qubits) out << ' ' << q;
                   },
                   [&](const MeasurePauli &m) { out << "MEASURE " << m.observable.str() << ' ' << m.key; },
                   [&](const ClassicallyControlledPauli &c) {
                       out << "IF " << c.key << ' ' << (c.required ? 1 : 0) << ' ' << c.pauli.str();
                   },
                   [&](const QecRound &r) {
                       out << "QEC " << r.label;
                       for (const auto &s : r.stabilizers) out << ' ' << s.str();
                   },
                   [&](const ObservableCheck &o) {
                       out << "OBSERVABLE " << (o.expected_sign > 0 ? "+1 " : "-1 ") << o.observable.str();
                   },
                   [&](const Encode &e) {
                       out << "ENCODE " << e.label << ' ' << e.offset;
                       for (const auto &s : e.stabilizers) out << ' ' << s.str();
                   },
               },
               instruction);
    return out.str();
}

std::string Circuit::to_text() const {
    std::string out = "QUBITS " + std::to_string(num_qubits_) + "\n";
    for (const auto &inst : instructions_) {
        out += instruction_text(inst);
        out += '\n';
    }
    return out;
}

}  // namespace gscforge
