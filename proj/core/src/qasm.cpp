#include "qpm/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace qpm {

namespace {

std::string fmt_angle(double angle) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", angle);
    return buf;
}

std::string qref(std::uint32_t q) { return "q[" + std::to_string(q) + "]"; }

std::string join_qubits(const std::vector<std::uint32_t>& qubits) {
    std::string out;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (i)
            out += ',';
        out += qref(qubits[i]);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

struct Line {
    int number;
    std::string_view text; // comment-stripped, trimmed, non-empty
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    while (!text.empty()) {
        ++number;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty())
            lines.push_back({number, line});
    }
    return lines;
}

// Splits "mnemonic op1,op2,..." into the mnemonic and trimmed operands.
struct GateLine {
    std::string_view mnemonic;
    std::vector<std::string_view> operands;
};

GateLine split_gate_line(const Line& line) {
    GateLine g;
    std::string_view rest = line.text;
    const auto sp = rest.find_first_of(" \t");
    g.mnemonic = rest.substr(0, sp);
    if (sp == std::string_view::npos)
        return g;
    rest = trim(rest.substr(sp));
    if (rest.empty())
        return g;
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view tok = trim(rest.substr(0, comma));
        if (tok.empty())
            throw ParseError(Errc::SyntaxError, line.number, "empty operand");
        g.operands.push_back(tok);
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    return g;
}

std::uint32_t parse_qubit_ref(std::string_view tok, int line, std::uint32_t num_qubits) {
    if (tok.size() < 4 || tok.substr(0, 2) != "q[" || tok.back() != ']')
        throw ParseError(Errc::SyntaxError, line,
                         "expected qubit reference q[i], got '" + std::string(tok) + "'");
    const std::string_view digits = tok.substr(2, tok.size() - 3);
    std::uint32_t index = 0;
    const auto [ptr, ec] = std::from_chars(digits.begin(), digits.end(), index);
    if (ec != std::errc() || ptr != digits.end())
        throw ParseError(Errc::SyntaxError, line, "bad qubit index '" + std::string(digits) + "'");
    if (index >= num_qubits)
        throw ParseError(Errc::QubitOutOfRange, line,
                         "qubit " + std::to_string(index) + " with qubits " +
                             std::to_string(num_qubits));
    return index;
}

double parse_angle(std::string_view tok, int line) {
    const std::string s(tok);
    char* end = nullptr;
    const double value = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || s.empty())
        throw ParseError(Errc::SyntaxError, line, "bad angle '" + s + "'");
    return value;
}

std::vector<std::uint32_t> parse_qubit_list(const std::vector<std::string_view>& tokens,
                                            std::size_t count_from, std::size_t count_to, int line,
                                            std::uint32_t num_qubits) {
    std::vector<std::uint32_t> qubits;
    qubits.reserve(count_to - count_from);
    for (std::size_t i = count_from; i < count_to; ++i)
        qubits.push_back(parse_qubit_ref(tokens[i], line, num_qubits));
    return qubits;
}

} // namespace

std::string serialize(const Circuit& circuit) {
    std::string out = "version 1.0\nqubits " + std::to_string(circuit.num_qubits()) + "\n";
    if (!circuit.name().empty())
        out += "# name: " + circuit.name() + "\n";
    for (const auto& op : circuit.ops()) {
        switch (op.kind) {
        case GateKind::H:
            out += "h " + qref(op.qubits[0]);
            break;
        case GateKind::X:
            out += "x " + qref(op.qubits[0]);
            break;
        case GateKind::Ry:
            out += "ry " + qref(op.qubits[0]) + "," + fmt_angle(op.angle);
            break;
        case GateKind::Rz:
            out += "rz " + qref(op.qubits[0]) + "," + fmt_angle(op.angle);
            break;
        case GateKind::ControlledX: {
            const std::size_t controls = op.qubits.size() - 1;
            if (controls == 1)
                out += "cnot " + join_qubits(op.qubits);
            else if (controls == 2)
                out += "toffoli " + join_qubits(op.qubits);
            else
                out += "cX " + join_qubits(op.qubits);
            break;
        }
        case GateKind::ControlledPhase:
            out += "cphase " + join_qubits(op.qubits) + "," + fmt_angle(op.angle);
            break;
        case GateKind::DenseUnitary:
            throw Error(Errc::UnsupportedOpForSerialization,
                        "dense unitaries have no gate-level text form");
        }
        out += "\n";
    }
    return out;
}

Circuit parse(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    if (lines.empty())
        throw ParseError(Errc::MissingHeader, 1, "expected 'version 1.0'");

    {
        const GateLine header = split_gate_line(lines[0]);
        if (header.mnemonic != "version" || header.operands.size() != 1 ||
            header.operands[0] != "1.0")
            throw ParseError(Errc::MissingHeader, lines[0].number, "expected 'version 1.0'");
    }
    if (lines.size() < 2)
        throw ParseError(Errc::MissingHeader, lines[0].number + 1, "expected 'qubits <N>'");

    std::uint32_t num_qubits = 0;
    {
        const Line& line = lines[1];
        const GateLine header = split_gate_line(line);
        if (header.mnemonic != "qubits" || header.operands.size() != 1)
            throw ParseError(Errc::MissingHeader, line.number, "expected 'qubits <N>'");
        const std::string_view digits = header.operands[0];
        const auto [ptr, ec] = std::from_chars(digits.begin(), digits.end(), num_qubits);
        if (ec != std::errc() || ptr != digits.end() || num_qubits < 1)
            throw ParseError(Errc::SyntaxError, line.number,
                             "bad qubit count '" + std::string(digits) + "'");
    }

    std::vector<GateOp> ops;
    for (std::size_t li = 2; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const GateLine g = split_gate_line(line);
        const auto expect = [&](std::size_t n) {
            if (g.operands.size() != n)
                throw ParseError(Errc::SyntaxError, line.number,
                                 std::string(g.mnemonic) + " expects " + std::to_string(n) +
                                     " operands, got " + std::to_string(g.operands.size()));
        };
        try {
            if (g.mnemonic == "h") {
                expect(1);
                ops.push_back(GateOp::h(parse_qubit_ref(g.operands[0], line.number, num_qubits)));
            } else if (g.mnemonic == "x") {
                expect(1);
                ops.push_back(GateOp::x(parse_qubit_ref(g.operands[0], line.number, num_qubits)));
            } else if (g.mnemonic == "ry" || g.mnemonic == "rz") {
                expect(2);
                const auto q = parse_qubit_ref(g.operands[0], line.number, num_qubits);
                const double angle = parse_angle(g.operands[1], line.number);
                ops.push_back(g.mnemonic == "ry" ? GateOp::ry(q, angle) : GateOp::rz(q, angle));
            } else if (g.mnemonic == "cnot") {
                expect(2);
                auto qs = parse_qubit_list(g.operands, 0, 2, line.number, num_qubits);
                ops.push_back(GateOp::controlled_x({qs[0]}, qs[1]));
            } else if (g.mnemonic == "toffoli") {
                expect(3);
                auto qs = parse_qubit_list(g.operands, 0, 3, line.number, num_qubits);
                ops.push_back(GateOp::controlled_x({qs[0], qs[1]}, qs[2]));
            } else if (g.mnemonic == "cX") {
                if (g.operands.size() < 4)
                    throw ParseError(Errc::SyntaxError, line.number,
                                     "cX expects at least 3 controls and a target");
                auto qs =
                    parse_qubit_list(g.operands, 0, g.operands.size(), line.number, num_qubits);
                const std::uint32_t target = qs.back();
                qs.pop_back();
                ops.push_back(GateOp::controlled_x(std::move(qs), target));
            } else if (g.mnemonic == "cphase") {
                if (g.operands.size() < 2)
                    throw ParseError(Errc::SyntaxError, line.number,
                                     "cphase expects at least one qubit and an angle");
                auto qs = parse_qubit_list(g.operands, 0, g.operands.size() - 1, line.number,
                                           num_qubits);
                const double angle = parse_angle(g.operands.back(), line.number);
                ops.push_back(GateOp::controlled_phase(std::move(qs), angle));
            } else {
                throw ParseError(Errc::UnknownGate, line.number,
                                 "unknown gate '" + std::string(g.mnemonic) + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            // construction-level problems (duplicate qubits, ...) surface
            // with the offending line attached
            throw ParseError(Errc::SyntaxError, line.number, e.what());
        }
    }
    return Circuit(num_qubits, std::move(ops));
}

} // namespace qpm
