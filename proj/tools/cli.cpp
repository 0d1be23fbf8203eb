#include "schur/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "schur/alphabet.hpp"
#include "schur/errors.hpp"
#include "schur/serialize.hpp"
#include "schur/swy_graph.hpp"
#include "schur/transform.hpp"

namespace schur::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::string approx(const Radical& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", r.to_double());
    return buf;
}

void require_pattern_dimension(const CliConfig& cfg) {
    if (cfg.engine == AmplitudeEngine::pattern_d2 && cfg.d != 2) {
        throw UsageError("the pattern engine needs --d 2");
    }
}

int cmd_encode(const CliConfig& cfg, const std::string& text, std::ostream& out) {
    const Word word = parse_word(text, cfg.d);
    const SchurWeylState state = encode(word, cfg.d, cfg.engine);
    if (cfg.format == OutputFormat::json) {
        out << dump(state_to_json(state));
        return kOk;
    }
    const int offset = external_letter_offset(cfg.d);
    for (const auto& [triplet, amplitude] : state.terms()) {
        out << "amp=" << amplitude.to_string() << " approx=" << approx(amplitude) << ' '
            << triplet.to_string(offset) << '\n';
    }
    return kOk;
}

int cmd_decode(const CliConfig& cfg, const std::string& path, std::istream& in, std::ostream& out) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(path);
        if (!file) {
            throw FormatError("cannot read " + path);
        }
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    const SchurWeylState state = state_from_json(j);
    if (cfg.engine == AmplitudeEngine::pattern_d2 && state.d() != 2) {
        throw UsageError("the pattern engine needs d = 2");
    }
    const ComputationalState result = decode(state, cfg.engine);
    if (cfg.format == OutputFormat::json) {
        out << dump(computational_to_json(result));
        return kOk;
    }
    for (const auto& [word, amplitude] : result.terms()) {
        out << format_word(word, result.d()) << ' ' << amplitude.to_string() << " approx=" << approx(amplitude) << '\n';
    }
    return kOk;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    file << content;
    file.close();
    if (!file) {
        throw FormatError("cannot write " + path);
    }
}

int cmd_graph(const CliConfig& cfg, int n, const std::string& dot_path, const std::string& json_path,
              std::ostream& out) {
    const SwyGraph g = SwyGraph::build(cfg.d, n, cfg.engine);
    if (!dot_path.empty()) {
        write_file(dot_path, to_dot(g));
    }
    if (!json_path.empty()) {
        write_file(json_path, dump(graph_to_json(g)));
    }
    if (dot_path.empty() && json_path.empty()) {
        out << (cfg.format == OutputFormat::json ? dump(graph_to_json(g)) : to_dot(g));
    }
    return kOk;
}

struct SuiteResult {
    std::string name;
    std::string status;  // PASS, FAIL or SKIP
    std::string detail;
};

SuiteResult pattern_suite(const SwyGraph& g) {
    if (g.d() != 2) {
        return {"pattern-equivalence", "SKIP", "d != 2"};
    }
    std::size_t bad = 0;
    for (const auto& e : g.edges()) {
        const auto& lower = g.vertex(e.lower).tableau.pattern();
        const auto& upper = g.vertex(e.upper).tableau.pattern();
        if (!(pattern_amplitude_d2(lower, upper) == louck_amplitude(lower, upper))) {
            ++bad;
        }
    }
    return {"pattern-equivalence", bad ? "FAIL" : "PASS",
            std::to_string(g.edges().size()) + " edges, " + std::to_string(bad) + " mismatches"};
}

// For every vertex below the top level and every letter, the outgoing
// amplitudes have squared sum exactly 1.
SuiteResult normalization_suite(const SwyGraph& g) {
    std::size_t columns = 0;
    std::size_t bad = 0;
    for (const auto& v : g.vertices()) {
        if (v.level == g.n_max()) {
            break;
        }
        for (int k = 1; k <= g.d(); ++k) {
            Radical sum;
            for (const auto& e : g.up_edges(v.id, k)) {
                sum += e.amplitude * e.amplitude;
            }
            ++columns;
            if (!(sum == Radical(1))) {
                ++bad;
            }
        }
    }
    return {"column-normalization", bad ? "FAIL" : "PASS",
            std::to_string(columns) + " columns, " + std::to_string(bad) + " failures"};
}

SuiteResult dimension_suite(int d, int n) {
    bool ok = dimension_check(d, n);
    return {"dimension", ok ? "PASS" : "FAIL", "d^n = " + std::to_string(d) + "^" + std::to_string(n)};
}

SuiteResult unitarity_suite(const CliConfig& cfg, int n) {
    ExactSparseMatrix m(0, 0);
    try {
        m = schur_matrix(cfg.d, n, cfg.size_bound, cfg.engine);
    } catch (const SizeBoundExceeded&) {
        return {"unitarity", "SKIP", "d^n exceeds the size bound " + std::to_string(cfg.size_bound)};
    }
    bool ok = verify_unitary(m);
    return {"unitarity", ok ? "PASS" : "FAIL",
            std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", " + std::to_string(m.entries().size()) +
                " nonzero entries"};
}

int cmd_check(const CliConfig& cfg, int n, std::ostream& out) {
    const SwyGraph g = SwyGraph::build(cfg.d, n, cfg.engine);
    std::vector<SuiteResult> results = {pattern_suite(g), normalization_suite(g), dimension_suite(cfg.d, n),
                                        unitarity_suite(cfg, n)};
    bool failed = std::any_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.status == "FAIL"; });
    if (cfg.format == OutputFormat::json) {
        Json suites = Json::array();
        for (const auto& r : results) {
            suites.push_back({{"name", r.name}, {"status", r.status}, {"detail", r.detail}});
        }
        out << dump({{"d", cfg.d}, {"n", n}, {"passed", !failed}, {"suites", std::move(suites)}});
    } else {
        for (const auto& r : results) {
            out << r.name << ": " << r.status << " (" << r.detail << ")\n";
        }
        out << (failed ? "FAIL" : "PASS") << '\n';
    }
    return failed ? kCheckFailed : kOk;
}

int cmd_matrix(const CliConfig& cfg, int n, std::ostream& out) {
    const ExactSparseMatrix m = schur_matrix(cfg.d, n, cfg.size_bound, cfg.engine);
    const SchurBasisIndex basis = SchurBasisIndex::build(cfg.d, n);
    if (cfg.format == OutputFormat::json) {
        out << dump(matrix_to_json(m, basis));
        return kOk;
    }
    const int offset = external_letter_offset(cfg.d);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        out << "row " << r << ": " << basis.at(r).to_string(offset) << '\n';
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
        out << "col " << c << ": " << format_word(word_at(c, cfg.d, n), cfg.d) << '\n';
    }
    for (const auto& [index, value] : m.entries()) {
        out << "entry " << index.first << ' ' << index.second << ' ' << value.to_string() << '\n';
    }
    return kOk;
}

}  // namespace

Word parse_word(const std::string& text, int d) {
    std::vector<std::string> tokens;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string token;
        while (std::getline(ss, token, ',')) {
            tokens.push_back(token);
        }
        if (!text.empty() && text.back() == ',') {
            tokens.emplace_back();
        }
    } else {
        if (d > 9 && !text.empty()) {
            throw FormatError("words for d > 9 must be comma-separated");
        }
        for (char c : text) {
            tokens.emplace_back(1, c);
        }
    }
    const int lo = to_external_letter(1, d);
    const int hi = to_external_letter(d, d);
    Word word;
    for (const auto& token : tokens) {
        if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
            token.size() > 9) {
            throw FormatError("bad letter '" + token + "': alphabet is " + std::to_string(lo) + ".." +
                              std::to_string(hi));
        }
        int letter = std::stoi(token);
        if (letter < lo || letter > hi) {
            throw FormatError("bad letter '" + token + "': alphabet is " + std::to_string(lo) + ".." +
                              std::to_string(hi));
        }
        word.push_back(from_external_letter(letter, d));
    }
    return word;
}

std::string format_word(const Word& word, int d) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (d != 2 && i > 0) {
            out += ',';
        }
        out += std::to_string(to_external_letter(word[i], d));
    }
    return out;
}

std::size_t resolve_size_bound(std::optional<std::size_t> flag, const char* env) {
    if (flag) {
        return *flag;
    }
    if (env && *env) {
        std::string text(env);
        if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) || text.size() > 18) {
            throw UsageError("SCHUR_SIZE_BOUND must be a nonnegative integer");
        }
        return std::stoull(text);
    }
    return kDefaultSizeBound;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact classical Schur-Weyl transform", "schur"};
    app.fallthrough();
    app.require_subcommand(1);

    CliConfig cfg;
    std::string engine = "louck";
    std::string format = "text";
    std::optional<std::size_t> size_bound;
    int n = -1;
    std::string word;
    std::string input = "-";
    std::string dot_path;
    std::string json_path;

    app.add_option("--d", cfg.d, "alphabet size")->check(CLI::PositiveNumber);
    app.add_option("--engine", engine, "amplitude engine")
        ->check(CLI::IsMember({"louck", "pattern", "pattern-d2", "both", "both-verify"}));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--size-bound", size_bound, "largest d^n for full-matrix work");

    auto* encode_cmd = app.add_subcommand("encode", "computational word -> Schur-Weyl basis");
    encode_cmd->add_option("word", word, "word over {0,1} for d = 2, else letters 1..d")->required();

    auto* decode_cmd = app.add_subcommand("decode", "Schur-Weyl state JSON -> computational basis");
    decode_cmd->add_option("input", input, "state JSON file, - for stdin");

    auto* graph_cmd = app.add_subcommand("graph", "Schur-Weyl-Young graph up to level n");
    graph_cmd->add_option("--n", n, "top level")->required()->check(CLI::NonNegativeNumber);
    graph_cmd->add_option("--dot", dot_path, "write DOT to this path");
    graph_cmd->add_option("--json", json_path, "write JSON to this path");

    auto* check_cmd = app.add_subcommand("check", "exact consistency suites");
    check_cmd->add_option("--n", n, "number of qudits")->required()->check(CLI::NonNegativeNumber);

    auto* matrix_cmd = app.add_subcommand("matrix", "full transform matrix");
    matrix_cmd->add_option("--n", n, "number of qudits")->required()->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        cfg.engine = parse_engine(engine);
        cfg.format = format == "json" ? OutputFormat::json : OutputFormat::text;
        cfg.size_bound = resolve_size_bound(size_bound, std::getenv("SCHUR_SIZE_BOUND"));
        if (!decode_cmd->parsed()) {
            require_pattern_dimension(cfg);
        }
        if (encode_cmd->parsed()) {
            return cmd_encode(cfg, word, out);
        }
        if (decode_cmd->parsed()) {
            return cmd_decode(cfg, input, in, out);
        }
        if (graph_cmd->parsed()) {
            return cmd_graph(cfg, n, dot_path, json_path, out);
        }
        if (check_cmd->parsed()) {
            return cmd_check(cfg, n, out);
        }
        return cmd_matrix(cfg, n, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const AmplitudeMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }
}

}  // namespace schur::cli
