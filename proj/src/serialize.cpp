#include "schur/serialize.hpp"

#include <limits>

#include "schur/alphabet.hpp"
#include "schur/errors.hpp"

namespace schur {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) {
        throw FormatError(std::string("expected an object with field '") + key + "'");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw FormatError(std::string("missing field '") + key + "'");
    }
    return *it;
}

long as_long(const Json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw FormatError(std::string("'") + what + "' must be an integer");
    }
    return j.get<long>();
}

int as_int(const Json& j, const char* what) {
    long v = as_long(j, what);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw FormatError(std::string("'") + what + "' out of range");
    }
    return static_cast<int>(v);
}

std::size_t as_index(const Json& j, const char* what) {
    long v = as_long(j, what);
    if (v < 0) {
        throw FormatError(std::string("'") + what + "' must be nonnegative");
    }
    return static_cast<std::size_t>(v);
}

const Json& as_array(const Json& j, const char* what) {
    if (!j.is_array()) {
        throw FormatError(std::string("'") + what + "' must be an array");
    }
    return j;
}

Json integer_to_json(const Integer& v) {
    if (v.fits_slong_p()) {
        return v.get_si();
    }
    return v.get_str();
}

Integer integer_from_json(const Json& j, const char* what) {
    if (j.is_number_integer()) {
        return Integer(j.get<long>());
    }
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) {
            throw FormatError(std::string("'") + what + "' is not a decimal integer");
        }
        return v;
    }
    throw FormatError(std::string("'") + what + "' must be an integer");
}

std::vector<int> ints_from_json(const Json& j, const char* what, int offset = 0) {
    std::vector<int> out;
    for (const auto& v : as_array(j, what)) {
        out.push_back(as_int(v, what) - offset);
    }
    return out;
}

std::vector<std::vector<int>> rows_from_json(const Json& j, const char* what, int offset = 0) {
    std::vector<std::vector<int>> out;
    for (const auto& row : as_array(j, what)) {
        out.push_back(ints_from_json(row, what, offset));
    }
    return out;
}

Json rows_to_json(const std::vector<std::vector<int>>& rows, int offset = 0) {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json r = Json::array();
        for (int v : row) {
            r.push_back(v + offset);
        }
        out.push_back(std::move(r));
    }
    return out;
}

int letter_base(int d) { return 1 + external_letter_offset(d); }

int read_d(const Json& j) {
    int d = as_int(field(j, "d"), "d");
    if (d < 1) {
        throw FormatError("'d' must be positive");
    }
    if (j.contains("letter_base") && as_int(j["letter_base"], "letter_base") != letter_base(d)) {
        throw FormatError("'letter_base' must be " + std::to_string(letter_base(d)) + " for d = " + std::to_string(d));
    }
    return d;
}

Json word_to_json(const Word& w, int d) {
    Json out = Json::array();
    for (int letter : w) {
        out.push_back(to_external_letter(letter, d));
    }
    return out;
}

}  // namespace

Json radical_to_json(const Radical& r) {
    Json terms = Json::array();
    for (const auto& [radicand, coefficient] : r.terms()) {
        terms.push_back({{"radicand", integer_to_json(radicand)},
                         {"num", integer_to_json(coefficient.get_num())},
                         {"den", integer_to_json(coefficient.get_den())}});
    }
    return {{"terms", std::move(terms)}, {"approx", r.to_double()}};
}

Radical radical_from_json(const Json& j) {
    const Json& terms = j.is_array() ? j : field(j, "terms");
    Radical out;
    for (const auto& t : as_array(terms, "terms")) {
        Integer radicand = integer_from_json(field(t, "radicand"), "radicand");
        Integer num = integer_from_json(field(t, "num"), "num");
        Integer den = integer_from_json(field(t, "den"), "den");
        if (radicand <= 0) {
            throw FormatError("'radicand' must be positive");
        }
        if (den == 0) {
            throw FormatError("'den' must be nonzero");
        }
        out += Radical::term(make_rational(num, den), radicand);
    }
    return out;
}

Json triplet_to_json(const SchurWeylTriplet& t) {
    return {{"shape", t.shape().parts()},
            {"weyl_rows", rows_to_json(t.weyl().rows(), external_letter_offset(t.d()))},
            {"young_path", t.young().rows()}};
}

SchurWeylTriplet triplet_from_json(const Json& j, int d) {
    auto weyl = StandardWeylTableau::from_rows(
        rows_from_json(field(j, "weyl_rows"), "weyl_rows", external_letter_offset(d)), d);
    GrowthPath young = j.contains("young_path")
                           ? GrowthPath::from_rows(ints_from_json(j["young_path"], "young_path"))
                           : syt_to_path(StandardYoungTableau::from_rows(
                                 rows_from_json(field(j, "young_rows"), "young_rows")));
    if (j.contains("shape")) {
        return SchurWeylTriplet(Partition(ints_from_json(j["shape"], "shape")), std::move(weyl), std::move(young));
    }
    return SchurWeylTriplet(std::move(weyl), std::move(young));
}

Json state_to_json(const SchurWeylState& s) {
    Json terms = Json::array();
    for (const auto& [triplet, amplitude] : s.terms()) {
        Json t = triplet_to_json(triplet);
        t["amplitude"] = radical_to_json(amplitude);
        terms.push_back(std::move(t));
    }
    return {{"d", s.d()}, {"n", s.n()}, {"letter_base", letter_base(s.d())}, {"terms", std::move(terms)}};
}

SchurWeylState state_from_json(const Json& j) {
    const int d = read_d(j);
    const int n = as_int(field(j, "n"), "n");
    if (n < 0) {
        throw FormatError("'n' must be nonnegative");
    }
    SchurWeylState out(n, d);
    for (const auto& t : as_array(field(j, "terms"), "terms")) {
        Radical amplitude = t.contains("amplitude") ? radical_from_json(t["amplitude"]) : Radical(1);
        out.add(triplet_from_json(t, d), amplitude);
    }
    return out;
}

Json computational_to_json(const ComputationalState& s) {
    Json terms = Json::array();
    for (const auto& [word, amplitude] : s.terms()) {
        terms.push_back({{"word", word_to_json(word, s.d())}, {"amplitude", radical_to_json(amplitude)}});
    }
    return {{"d", s.d()}, {"n", s.n()}, {"letter_base", letter_base(s.d())}, {"terms", std::move(terms)}};
}

ComputationalState computational_from_json(const Json& j) {
    const int d = read_d(j);
    const int n = as_int(field(j, "n"), "n");
    if (n < 0) {
        throw FormatError("'n' must be nonnegative");
    }
    ComputationalState out(n, d);
    for (const auto& t : as_array(field(j, "terms"), "terms")) {
        Word word = ints_from_json(field(t, "word"), "word", external_letter_offset(d));
        out.add(word, radical_from_json(field(t, "amplitude")));
    }
    return out;
}

Json graph_to_json(const SwyGraph& g) {
    const int offset = external_letter_offset(g.d());
    Json vertices = Json::array();
    for (const auto& v : g.vertices()) {
        vertices.push_back({{"id", v.id},
                            {"level", v.level},
                            {"shape", v.shape.parts()},
                            {"tableau_rows", rows_to_json(v.tableau.rows(), offset)}});
    }
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({{"lower", e.lower},
                         {"upper", e.upper},
                         {"k", e.added_entry + offset},
                         {"amplitude", radical_to_json(e.amplitude)}});
    }
    return {{"d", g.d()},
            {"n_max", g.n_max()},
            {"letter_base", letter_base(g.d())},
            {"vertices", std::move(vertices)},
            {"edges", std::move(edges)}};
}

SwyGraph graph_from_json(const Json& j) {
    const int d = read_d(j);
    const int offset = external_letter_offset(d);
    const int n_max = as_int(field(j, "n_max"), "n_max");
    std::vector<SwyVertex> vertices;
    for (const auto& v : as_array(field(j, "vertices"), "vertices")) {
        vertices.push_back({as_index(field(v, "id"), "id"),
                            as_int(field(v, "level"), "level"),
                            Partition(ints_from_json(field(v, "shape"), "shape")),
                            StandardWeylTableau::from_rows(rows_from_json(field(v, "tableau_rows"), "tableau_rows", offset), d)});
    }
    std::vector<SwyEdge> edges;
    for (const auto& e : as_array(field(j, "edges"), "edges")) {
        edges.push_back({as_index(field(e, "lower"), "lower"),
                         as_index(field(e, "upper"), "upper"),
                         as_int(field(e, "k"), "k") - offset,
                         radical_from_json(field(e, "amplitude"))});
    }
    return SwyGraph::from_parts(d, n_max, std::move(vertices), std::move(edges));
}

Json matrix_to_json(const ExactSparseMatrix& m, const SchurBasisIndex& basis) {
    if (basis.size() != m.rows()) {
        throw std::invalid_argument("basis size differs from the matrix row count");
    }
    Json rows = Json::array();
    for (const auto& t : basis.triplets()) {
        rows.push_back(triplet_to_json(t));
    }
    Json columns = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
        columns.push_back(word_to_json(word_at(c, basis.d(), basis.n()), basis.d()));
    }
    Json entries = Json::array();
    for (const auto& [index, value] : m.entries()) {
        entries.push_back({{"row", index.first}, {"col", index.second}, {"amplitude", radical_to_json(value)}});
    }
    return {{"d", basis.d()},
            {"n", basis.n()},
            {"letter_base", letter_base(basis.d())},
            {"order", "triplet-major"},
            {"basis", std::move(rows)},
            {"columns", std::move(columns)},
            {"entries", std::move(entries)}};
}

ExactSparseMatrix matrix_from_json(const Json& j) {
    read_d(j);
    const std::size_t rows = as_array(field(j, "basis"), "basis").size();
    const std::size_t cols = j.contains("columns") ? as_array(j["columns"], "columns").size() : rows;
    ExactSparseMatrix m(rows, cols);
    for (const auto& e : as_array(field(j, "entries"), "entries")) {
        std::size_t r = as_index(field(e, "row"), "row");
        std::size_t c = as_index(field(e, "col"), "col");
        if (r >= rows || c >= cols) {
            throw FormatError("matrix entry outside the basis");
        }
        m.set(r, c, radical_from_json(field(e, "amplitude")));
    }
    return m;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace schur
