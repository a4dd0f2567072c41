#include "qpm/dna.hpp"

#include <bit>
#include <cctype>

namespace qpm {

namespace {

int base_code(char b) {
    switch (b) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    case 'T': return 3;
    }
    return -1;
}

// Smallest q_t with 2^{q_t} >= count (0 for a single memory).
std::uint32_t tag_qubits_for(std::uint64_t count) {
    std::uint32_t q = 0;
    while ((std::uint64_t(1) << q) < count)
        ++q;
    return q;
}

} // namespace

Dna Dna::from_string(std::string_view s) {
    if (s.empty())
        throw Error(Errc::InvalidBase, "empty sequence");
    std::string bases;
    bases.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
        if (base_code(up) < 0)
            throw Error(Errc::InvalidBase,
                        std::string("'") + s[i] + "' at position " + std::to_string(i));
        bases.push_back(up);
    }
    return Dna(std::move(bases));
}

Dna Dna::window(std::uint32_t pos, std::uint32_t len) const {
    return Dna(bases_.substr(pos, len));
}

std::uint64_t encode_pattern(const Dna& p) {
    if (p.size() > 32)
        throw Error(Errc::DimensionTooLarge,
                    "pattern of " + std::to_string(p.size()) + " bases exceeds 64 encoded bits");
    std::uint64_t bits = 0;
    for (std::uint32_t i = 0; i < p.size(); ++i)
        bits = (bits << 2) | static_cast<std::uint64_t>(base_code(p[i]));
    return bits;
}

std::uint32_t hamming_distance(const Dna& a, const Dna& b) {
    if (a.size() != b.size())
        throw Error(Errc::LengthMismatch,
                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " bases");
    return static_cast<std::uint32_t>(std::popcount(encode_pattern(a) ^ encode_pattern(b)));
}

std::vector<std::pair<std::uint32_t, Dna>> substrings(const Dna& reference, std::uint32_t m) {
    if (m > reference.size())
        throw Error(Errc::PatternLongerThanReference,
                    std::to_string(m) + " > " + std::to_string(reference.size()));
    std::vector<std::pair<std::uint32_t, Dna>> windows;
    windows.reserve(reference.size() - m + 1);
    for (std::uint32_t i = 0; i + m <= reference.size(); ++i)
        windows.emplace_back(i, reference.window(i, m));
    return windows;
}

QuantumDatabase make_database(const Dna& reference, std::uint32_t m,
                              const std::vector<std::uint32_t>& exclusions) {
    const auto windows = substrings(reference, m);
    QuantumDatabase db;
    db.q_d = 2 * m;
    db.q_t = tag_qubits_for(windows.size());
    for (const auto& [index, window] : windows) {
        bool excluded = false;
        for (auto e : exclusions)
            excluded = excluded || (e == index);
        if (!excluded)
            db.memories.emplace_back(index, encode_pattern(window));
    }
    if (db.memories.empty())
        throw Error(Errc::LayoutInvalid, "all windows excluded");
    return db;
}

namespace {

void check_layout(const QuantumDatabase& db) {
    if (db.q_d == 0 || db.memories.empty())
        throw Error(Errc::LayoutInvalid, "empty database");
    for (const auto& [tag, bits] : db.memories) {
        if (tag >= db.tag_space())
            throw Error(Errc::LayoutInvalid, "tag " + std::to_string(tag) + " needs more than " +
                                                 std::to_string(db.q_t) + " tag qubits");
        if (db.q_d < 64 && (bits >> db.q_d) != 0)
            throw Error(Errc::LayoutInvalid, "pattern wider than the data register");
    }
}

std::vector<std::uint32_t> tag_qubit_list(const QuantumDatabase& db) {
    std::vector<std::uint32_t> tags(db.q_t);
    for (std::uint32_t t = 0; t < db.q_t; ++t)
        tags[t] = t;
    return tags;
}

// X on every tag qubit whose bit of `tag` is 0, so that the following
// controlled block fires exactly for tag value `tag`.
void dress(std::vector<GateOp>& ops, const QuantumDatabase& db, std::uint32_t tag) {
    for (std::uint32_t t = 0; t < db.q_t; ++t)
        if (!((tag >> t) & 1u))
            ops.push_back(GateOp::x(t));
}

} // namespace

Circuit build_qpd_circuit(const QuantumDatabase& db) {
    check_layout(db);
    const auto tags = tag_qubit_list(db);
    std::vector<GateOp> ops;
    for (std::uint32_t t = 0; t < db.q_t; ++t)
        ops.push_back(GateOp::h(t));
    for (const auto& [tag, bits] : db.memories) {
        dress(ops, db, tag);
        for (std::uint32_t b = 0; b < db.q_d; ++b)
            if ((bits >> b) & 1u)
                ops.push_back(GateOp::controlled_x(tags, db.q_t + b));
        dress(ops, db, tag);
    }
    return Circuit(db.num_qubits(), std::move(ops), "qpd-init");
}

Circuit build_hamming_evolution(const Dna& query, const QuantumDatabase& db) {
    if (2 * query.size() != db.q_d)
        throw Error(Errc::LengthMismatch, "query of " + std::to_string(query.size()) +
                                              " bases vs data register of " +
                                              std::to_string(db.q_d) + " qubits");
    check_layout(db);
    const std::uint64_t bits = encode_pattern(query);
    std::vector<GateOp> ops;
    for (std::uint32_t b = 0; b < db.q_d; ++b)
        if ((bits >> b) & 1u)
            ops.push_back(GateOp::x(db.q_t + b));
    return Circuit(db.num_qubits(), std::move(ops), "hamming-evolution");
}

} // namespace qpm
