// qpm: DNA sub-sequence alignment on a simulated quantum associative
// memory, plus the classical baseline, resource estimation, and circuit
// text import/export.
//
// Exit codes: 0 success, 2 bad input, 3 resource ceiling, 4 serialization
// limit.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qpm/classical.hpp"
#include "qpm/dna.hpp"
#include "qpm/errors.hpp"
#include "qpm/qasm.hpp"
#include "qpm/qibam.hpp"
#include "qpm/resources.hpp"
#include "qpm/rng.hpp"
#include "qpm/version.hpp"

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// FASTA (first record) or bare sequence text. Whitespace is stripped;
// validation happens in Dna::from_string.
std::string read_sequence_file(const std::string& path) {
    const std::string text = read_text_file(path);
    std::istringstream in(text);
    std::string line, seq;
    bool seen_header = false;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.empty())
            continue;
        if (line[0] == '>') {
            if (seen_header)
                break; // first record only
            seen_header = true;
            continue;
        }
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                seq += c;
    }
    if (seq.empty())
        throw std::runtime_error(path + ": no sequence data");
    return seq;
}

std::vector<std::string> read_query_lines(const std::string& path) {
    const std::string text = read_text_file(path);
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> out;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || std::isspace(static_cast<unsigned char>(line.back()))))
            line.pop_back();
        if (!line.empty())
            out.push_back(line);
    }
    if (out.empty())
        throw std::runtime_error(path + ": no queries");
    return out;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + out_path);
    f << text;
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json tool_block() {
    return json{{"name", "qpm"}, {"version", qpm::kVersion}};
}

// ---------------------------------------------------------------- align --

struct AlignOptions {
    std::string ref_seq, ref_file;
    std::string query, query_file;
    double gamma = 0.25;
    std::string schedule = "two-phase";
    std::uint64_t iterations = 1;
    bool auto_iterations = false;
    bool boyer = false;
    std::uint32_t max_rounds = 30;
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    bool exclude_last = false;
    std::string format = "json";
    std::string out;
};

struct LoadedReference {
    qpm::Dna dna;
    json echo; // source + sequence
};

LoadedReference load_reference(const std::string& inline_seq, const std::string& file) {
    if (!file.empty()) {
        const std::string seq = read_sequence_file(file);
        return {qpm::Dna::from_string(seq), json{{"source", file}, {"sequence", qpm::Dna::from_string(seq).str()}}};
    }
    const qpm::Dna dna = qpm::Dna::from_string(inline_seq);
    return {dna, json{{"source", "inline"}, {"sequence", dna.str()}}};
}

std::vector<std::uint32_t> exclusions_for(const AlignOptions& opt, std::uint32_t n,
                                          std::uint32_t m) {
    if (!opt.exclude_last)
        return {};
    if (m > n)
        return {}; // align reports the length error itself
    return {n - m + 1 - 1};
}

qpm::Schedule schedule_from(const std::string& s) {
    return s == "single" ? qpm::Schedule::SingleQuery : qpm::Schedule::EzhovTwoPhase;
}

// Number of minimum-distance windows among the non-excluded ones.
std::uint64_t known_solution_count(const qpm::Dna& ref, const qpm::Dna& query,
                                   const std::vector<std::uint32_t>& exclusions) {
    const qpm::ClassicalAlignment truth = qpm::classical_align(ref, query);
    std::uint32_t best = UINT32_MAX;
    std::uint64_t count = 0;
    for (std::uint32_t i = 0; i < truth.distances.size(); ++i) {
        if (std::find(exclusions.begin(), exclusions.end(), i) != exclusions.end())
            continue;
        if (truth.distances[i] < best) {
            best = truth.distances[i];
            count = 1;
        } else if (truth.distances[i] == best) {
            ++count;
        }
    }
    return count;
}

json iterations_echo(const AlignOptions& opt, const qpm::QueryConfig& cfg) {
    if (opt.boyer)
        return json{{"mode", "boyer"}, {"max_rounds", opt.max_rounds}};
    if (opt.auto_iterations)
        return json{{"mode", "auto"},
                    {"solutions", std::get<qpm::AutoKnown>(cfg.iterations).num_solutions}};
    return json{{"mode", "fixed"}, {"count", opt.iterations}};
}

json classical_block(const qpm::ClassicalAlignment& truth) {
    return json{{"distances", truth.distances},
                {"min_distance", truth.min_distance},
                {"min_indices", truth.min_indices}};
}

json database_block(const qpm::QuantumDatabase& db) {
    return json{{"tag_qubits", db.q_t},
                {"data_qubits", db.q_d},
                {"total_qubits", db.num_qubits()},
                {"num_memories", db.memories.size()}};
}

json result_block(const qpm::AlignmentResult& res) {
    json hist = json::object();
    for (const auto& [tag, count] : res.histogram)
        hist[std::to_string(tag)] = count;
    json stored = json::object();
    for (const auto& [tag, dist] : res.classical_distances)
        stored[std::to_string(tag)] = dist;
    return json{{"tag_probabilities", res.tag_probabilities},
                {"histogram", hist},
                {"ranking", res.ranking},
                {"stored_window_distances", stored},
                {"best_index", res.best_index}};
}

// One aligned (or randomized-search) query; returns the per-run JSON.
json run_one_query(const qpm::Dna& ref, const std::string& query_text,
                   const AlignOptions& opt, std::uint64_t seed) {
    const qpm::Dna query = qpm::Dna::from_string(query_text);
    const auto exclusions = exclusions_for(opt, ref.size(), query.size());

    qpm::QueryConfig cfg;
    cfg.gamma = opt.gamma;
    cfg.schedule = schedule_from(opt.schedule);
    cfg.shots = opt.shots;
    cfg.seed = seed;
    if (opt.boyer)
        cfg.iterations = qpm::BoyerRandomized{opt.max_rounds, seed};
    else if (opt.auto_iterations)
        cfg.iterations = qpm::AutoKnown{known_solution_count(ref, query, exclusions)};
    else
        cfg.iterations = qpm::Fixed{opt.iterations};

    json run;
    run["query"] = query.str();
    run["seed"] = seed;
    run["iterations"] = iterations_echo(opt, cfg);
    run["database"] = database_block(qpm::make_database(ref, query.size(), exclusions));

    if (opt.boyer) {
        const qpm::BoyerResult br = qpm::boyer_search(ref, query, cfg);
        run["result"] = json{{"tag", br.tag}, {"verified", br.verified}, {"rounds", br.rounds}};
    } else {
        run["result"] = result_block(qpm::align(ref, query, cfg, exclusions));
    }
    run["classical"] = classical_block(qpm::classical_align(ref, query));
    return run;
}

void write_align_csv(std::ostream& os, const json& runs, bool batch) {
    os << (batch ? "query,tag,exact_probability,shot_count,classical_distance\n"
                 : "tag,exact_probability,shot_count,classical_distance\n");
    for (const auto& run : runs) {
        const json& res = run["result"];
        const auto& probs = res["tag_probabilities"];
        for (std::size_t tag = 0; tag < probs.size(); ++tag) {
            const std::string key = std::to_string(tag);
            const std::uint64_t count =
                res["histogram"].contains(key) ? res["histogram"][key].get<std::uint64_t>() : 0;
            if (batch)
                os << run["query"].get<std::string>() << ',';
            os << tag << ',' << fmt_double(probs[tag].get<double>()) << ',' << count << ',';
            if (res["stored_window_distances"].contains(key))
                os << res["stored_window_distances"][key].get<std::uint32_t>();
            os << '\n';
        }
    }
}

int cmd_align(const AlignOptions& opt) {
    const auto t0 = Clock::now();
    const LoadedReference ref = load_reference(opt.ref_seq, opt.ref_file);
    const double ingest_s = seconds_since(t0);

    std::vector<std::string> queries;
    const bool batch = !opt.query_file.empty();
    if (batch)
        queries = read_query_lines(opt.query_file);
    else
        queries.push_back(opt.query);

    const auto t1 = Clock::now();
    json runs = json::array();
    for (std::size_t i = 0; i < queries.size(); ++i) {
        const std::uint64_t seed = batch ? qpm::mix_seed(opt.seed, i) : opt.seed;
        runs.push_back(run_one_query(ref.dna, queries[i], opt, seed));
    }
    const double align_s = seconds_since(t1);

    if (opt.format == "csv") {
        std::ostringstream os;
        if (opt.boyer) {
            // randomized search has no per-tag probability table
            os << (batch ? "query,tag,verified,rounds\n" : "tag,verified,rounds\n");
            for (const auto& run : runs) {
                if (batch)
                    os << run["query"].get<std::string>() << ',';
                os << run["result"]["tag"].get<std::uint64_t>() << ','
                   << (run["result"]["verified"].get<bool>() ? 1 : 0) << ','
                   << run["result"]["rounds"].get<std::uint32_t>() << '\n';
            }
        } else {
            write_align_csv(os, runs, batch);
        }
        write_output(os.str(), opt.out);
        return 0;
    }

    json doc;
    doc["schema_version"] = 1;
    doc["tool"] = tool_block();
    doc["command"] = "align";
    doc["input"] = json{{"reference", ref.echo},
                        {"gamma", opt.gamma},
                        {"schedule", opt.schedule},
                        {"shots", opt.shots},
                        {"seed", opt.seed},
                        {"exclude_last", opt.exclude_last}};
    if (batch) {
        doc["input"]["query_file"] = opt.query_file;
        doc["runs"] = runs;
    } else {
        doc["input"]["query"] = runs[0]["query"];
        for (const auto& key : {"seed", "iterations", "database", "result", "classical"})
            doc[key] = runs[0][key];
    }
    doc["timing"] = json{{"ingest_seconds", ingest_s},
                         {"align_seconds", align_s},
                         {"total_seconds", seconds_since(t0)}};
    write_output(doc.dump(2) + "\n", opt.out);
    return 0;
}

// ------------------------------------------------------------- baseline --

int cmd_baseline(const AlignOptions& opt) {
    const auto t0 = Clock::now();
    const LoadedReference ref = load_reference(opt.ref_seq, opt.ref_file);
    const qpm::Dna query = qpm::Dna::from_string(opt.query);
    const qpm::ClassicalAlignment truth = qpm::classical_align(ref.dna, query);

    if (opt.format == "csv") {
        std::ostringstream os;
        os << "index,distance\n";
        for (std::size_t i = 0; i < truth.distances.size(); ++i)
            os << i << ',' << truth.distances[i] << '\n';
        write_output(os.str(), opt.out);
        return 0;
    }

    json doc;
    doc["schema_version"] = 1;
    doc["tool"] = tool_block();
    doc["command"] = "baseline";
    doc["input"] = json{{"reference", ref.echo}, {"query", query.str()}};
    doc["result"] = classical_block(truth);
    doc["timing"] = json{{"total_seconds", seconds_since(t0)}};
    write_output(doc.dump(2) + "\n", opt.out);
    return 0;
}

// ------------------------------------------------------------- estimate --

json breakdown_block(const qpm::GateBreakdown& b) {
    return json{{"h", b.h.str()},
                {"c0x", b.c0x.str()},
                {"cx", b.cx.str()},
                {"cx_controls", b.cx_controls}};
}

int cmd_estimate(std::uint64_t alphabet, std::uint64_t n, std::uint64_t m,
                 const std::string& format, const std::string& out) {
    const qpm::ResourceEstimate est = qpm::estimate(alphabet, n, m);

    if (format == "csv") {
        std::ostringstream os;
        os << "field,value\n";
        os << "data_qubits," << est.q_d << '\n';
        os << "tag_qubits," << est.q_t << '\n';
        os << "total_qubits," << est.q_total << '\n';
        const auto emit = [&os](const char* prefix, const qpm::GateBreakdown& b) {
            os << prefix << "_h," << b.h.str() << '\n';
            os << prefix << "_c0x," << b.c0x.str() << '\n';
            os << prefix << "_cx," << b.cx.str() << '\n';
            os << prefix << "_cx_controls," << b.cx_controls << '\n';
        };
        emit("init_hamming", est.init_hamming);
        os << "query_qsd," << est.query_qsd.str() << '\n';
        emit("memory_mark", est.memory_mark);
        emit("grover_gate", est.grover_gate);
        write_output(os.str(), out);
        return 0;
    }

    json doc;
    doc["schema_version"] = 1;
    doc["tool"] = tool_block();
    doc["command"] = "estimate";
    doc["input"] = json{{"alphabet", alphabet}, {"ref_length", n}, {"query_length", m}};
    doc["result"] = json{{"data_qubits", est.q_d},
                         {"tag_qubits", est.q_t},
                         {"total_qubits", est.q_total},
                         {"init_hamming", breakdown_block(est.init_hamming)},
                         {"query_qsd", est.query_qsd.str()},
                         {"memory_mark", breakdown_block(est.memory_mark)},
                         {"grover_gate", breakdown_block(est.grover_gate)}};
    write_output(doc.dump(2) + "\n", out);
    return 0;
}

// ---------------------------------------------------- emit-qasm / run-qasm --

int cmd_emit_qasm(const std::string& stage, const AlignOptions& opt, std::uint32_t m_flag) {
    const LoadedReference ref = load_reference(opt.ref_seq, opt.ref_file);

    std::optional<qpm::Dna> query;
    if (!opt.query.empty())
        query = qpm::Dna::from_string(opt.query);

    std::uint32_t m = m_flag;
    if (m == 0 && query)
        m = query->size();
    if (m == 0)
        throw std::runtime_error("stage '" + stage + "' needs -M or --query");

    std::vector<std::uint32_t> exclusions;
    if (opt.exclude_last && ref.dna.size() >= m)
        exclusions = {ref.dna.size() - m};

    if (stage == "query-oracle") {
        // dense simulator-native object; serialization is the stated limit
        const qpm::GateOp oracle = qpm::build_query_oracle({2 * m, opt.gamma, 0});
        const qpm::Circuit c(2 * m, {oracle}, "query-oracle");
        write_output(qpm::serialize(c), opt.out); // throws: exit 4
        return 0;
    }

    const qpm::QuantumDatabase db = qpm::make_database(ref.dna, m, exclusions);
    std::optional<qpm::Circuit> circuit;
    if (stage == "init") {
        circuit = qpm::build_qpd_circuit(db);
    } else if (stage == "hamming") {
        if (!query)
            throw std::runtime_error("stage 'hamming' needs --query");
        circuit = qpm::build_hamming_evolution(*query, db);
    } else if (stage == "diffusion") {
        circuit = qpm::Circuit(db.num_qubits(), qpm::build_diffusion(db.num_qubits()),
                               "diffusion");
    } else if (stage == "memory-oracle") {
        if (!query)
            throw std::runtime_error("stage 'memory-oracle' needs --query");
        circuit = qpm::Circuit(db.num_qubits(), qpm::build_memory_oracle(db, *query),
                               "memory-oracle");
    } else {
        throw std::runtime_error("unknown stage '" + stage + "'");
    }
    write_output(qpm::serialize(*circuit), opt.out);
    return 0;
}

int cmd_run_qasm(const std::string& path, std::vector<std::uint32_t> qubits,
                 std::uint64_t shots, std::uint64_t seed, const std::string& format,
                 const std::string& out) {
    const auto t0 = Clock::now();
    const std::string text = read_text_file(path);

    qpm::Circuit circuit = [&] {
        try {
            return qpm::parse(text);
        } catch (const qpm::ParseError& e) {
            throw std::runtime_error(path + ":" + std::to_string(e.line()) + ": " + e.what());
        }
    }();

    const qpm::StateVector state =
        qpm::execute(circuit, qpm::StateVector(circuit.num_qubits()));

    if (qubits.empty())
        for (std::uint32_t q = 0; q < circuit.num_qubits(); ++q)
            qubits.push_back(q);

    const std::vector<double> probs = state.marginal(qubits);
    const qpm::Histogram hist = state.sample(qubits, shots, seed);

    if (format == "csv") {
        std::ostringstream os;
        os << "outcome,probability,count\n";
        for (std::uint64_t outcome = 0; outcome < probs.size(); ++outcome) {
            if (probs[outcome] <= 0.0)
                continue;
            const auto it = hist.find(outcome);
            os << outcome << ',' << fmt_double(probs[outcome]) << ','
               << (it == hist.end() ? 0 : it->second) << '\n';
        }
        write_output(os.str(), out);
        return 0;
    }

    json prob_obj = json::object();
    for (std::uint64_t outcome = 0; outcome < probs.size(); ++outcome)
        if (probs[outcome] > 0.0)
            prob_obj[std::to_string(outcome)] = probs[outcome];
    json hist_obj = json::object();
    for (const auto& [outcome, count] : hist)
        hist_obj[std::to_string(outcome)] = count;

    json doc;
    doc["schema_version"] = 1;
    doc["tool"] = tool_block();
    doc["command"] = "run-qasm";
    doc["input"] = json{{"file", path}, {"qubits", qubits}, {"shots", shots}, {"seed", seed}};
    doc["result"] = json{{"num_qubits", circuit.num_qubits()},
                         {"probabilities", prob_obj},
                         {"histogram", hist_obj}};
    doc["timing"] = json{{"total_seconds", seconds_since(t0)}};
    write_output(doc.dump(2) + "\n", out);
    return 0;
}

int exit_code_for(const qpm::Error& e) {
    switch (e.code()) {
    case qpm::Errc::QubitCeilingExceeded:
    case qpm::Errc::QubitCountOutOfRange:
    case qpm::Errc::DimensionTooLarge:
        return 3;
    case qpm::Errc::UnsupportedOpForSerialization:
        return 4;
    default:
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum pattern matching for DNA sub-sequence alignment"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("qpm ") + qpm::kVersion);

    AlignOptions opt;
    std::uint32_t m_flag = 0;
    std::string stage, qasm_file;
    std::vector<std::uint32_t> qubits_list;
    std::uint64_t est_alphabet = 4, est_n = 0, est_m = 0;

    const auto add_reference = [&](CLI::App* sub) {
        auto* group = sub->add_option_group("reference", "reference sequence source");
        group->add_option("--ref-seq", opt.ref_seq, "inline reference sequence");
        group->add_option("--ref-file", opt.ref_file, "FASTA or raw sequence file");
        group->require_option(1);
    };
    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", opt.out, "write output to a file instead of stdout");
    };

    CLI::App* align = app.add_subcommand("align", "quantum alignment of a query read");
    add_reference(align);
    auto* q_group = align->add_option_group("query", "query source");
    q_group->add_option("--query", opt.query, "inline query read");
    q_group->add_option("--query-file", opt.query_file, "file with one query per line");
    q_group->require_option(1);
    align->add_option("--gamma", opt.gamma, "query spread in (0,1); smaller is sharper")
        ->capture_default_str();
    align->add_option("--schedule", opt.schedule, "oracle schedule")
        ->check(CLI::IsMember({"single", "two-phase"}))
        ->capture_default_str();
    auto* it_opt = align->add_option("--iterations", opt.iterations,
                                     "fixed amplification iteration count")
                       ->check(CLI::PositiveNumber);
    auto* auto_flag =
        align->add_flag("--auto", opt.auto_iterations,
                        "derive the iteration count from the classical match count");
    auto* boyer_flag = align->add_flag(
        "--boyer", opt.boyer, "randomized iteration search with classical verification");
    it_opt->excludes(auto_flag)->excludes(boyer_flag);
    auto_flag->excludes(boyer_flag);
    align->add_option("--max-rounds", opt.max_rounds, "randomized search round budget")
        ->needs(boyer_flag)
        ->capture_default_str();
    align->add_option("--shots", opt.shots, "measurement shots")->capture_default_str();
    align->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    align->add_flag("--exclude-last", opt.exclude_last,
                    "withhold the last reference window from the database");
    add_output(align);

    CLI::App* baseline =
        app.add_subcommand("baseline", "exhaustive classical Hamming alignment");
    add_reference(baseline);
    baseline->add_option("--query", opt.query, "inline query read")->required();
    add_output(baseline);

    CLI::App* estimate =
        app.add_subcommand("estimate", "gate and qubit counts for a target instance");
    estimate->add_option("-A,--alphabet", est_alphabet, "alphabet size")
        ->capture_default_str();
    estimate->add_option("-N,--ref-length", est_n, "reference length")->required();
    estimate->add_option("-M,--query-length", est_m, "query length")->required();
    add_output(estimate);

    CLI::App* emit = app.add_subcommand("emit-qasm", "write a pipeline stage as circuit text");
    emit->add_option("--stage", stage, "init | hamming | diffusion | memory-oracle | query-oracle")
        ->required()
        ->check(CLI::IsMember({"init", "hamming", "diffusion", "memory-oracle", "query-oracle"}));
    add_reference(emit);
    emit->add_option("--query", opt.query, "query read (hamming, memory-oracle)");
    emit->add_option("-M,--query-length", m_flag, "query length (init, diffusion)");
    emit->add_option("--gamma", opt.gamma, "query spread (query-oracle)")
        ->capture_default_str();
    emit->add_flag("--exclude-last", opt.exclude_last,
                   "withhold the last reference window from the database");
    emit->add_option("--out", opt.out, "write output to a file instead of stdout");

    CLI::App* run = app.add_subcommand("run-qasm", "execute a circuit text file on |0...0>");
    run->add_option("file", qasm_file, "circuit text file")->required();
    run->add_option("--qubits-list", qubits_list, "comma-separated qubits to report")
        ->delimiter(',');
    run->add_option("--shots", opt.shots, "measurement shots")->capture_default_str();
    run->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    add_output(run);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (align->parsed())
            return cmd_align(opt);
        if (baseline->parsed())
            return cmd_baseline(opt);
        if (estimate->parsed())
            return cmd_estimate(est_alphabet, est_n, est_m, opt.format, opt.out);
        if (emit->parsed())
            return cmd_emit_qasm(stage, opt, m_flag);
        if (run->parsed())
            return cmd_run_qasm(qasm_file, qubits_list, opt.shots, opt.seed, opt.format,
                                opt.out);
    } catch (const qpm::Error& e) {
        std::cerr << "qpm: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "qpm: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
