#pragma once

#include <string>

#include <json.hpp>

#include "schur/swy_graph.hpp"
#include "schur/transform.hpp"

namespace schur {

using Json = nlohmann::json;

// Tableau letters in JSON use the external alphabet of d; every document
// carries "letter_base" (0 for d = 2, 1 otherwise) so readers need not guess.
// Integers that do not fit in 64 bits are written as decimal strings.
// Readers throw FormatError on malformed documents and InvariantViolation
// when a tableau or path breaks its invariants.

// {"terms": [{"radicand", "num", "den"}...] sorted by radicand, "approx"}.
// The reader also accepts the bare terms list.
Json radical_to_json(const Radical& r);
Radical radical_from_json(const Json& j);

// {d, n, letter_base, terms: [{shape, weyl_rows, young_path, amplitude}]},
// terms in triplet-major order. young_path lists the row (1-based) receiving
// each box; the reader also accepts "young_rows" holding the tableau itself.
Json triplet_to_json(const SchurWeylTriplet& t);
SchurWeylTriplet triplet_from_json(const Json& j, int d);
Json state_to_json(const SchurWeylState& s);
SchurWeylState state_from_json(const Json& j);

// {d, n, letter_base, terms: [{word, amplitude}]}, terms sorted by word.
Json computational_to_json(const ComputationalState& s);
ComputationalState computational_from_json(const Json& j);

// {d, n_max, letter_base, vertices: [{id, level, shape, tableau_rows}],
//  edges: [{lower, upper, k, amplitude}]}.
Json graph_to_json(const SwyGraph& g);
SwyGraph graph_from_json(const Json& j);

// {d, n, order: "triplet-major", basis: [triplet...], columns: [word...],
//  entries: [{row, col, amplitude}]}.
Json matrix_to_json(const ExactSparseMatrix& m, const SchurBasisIndex& basis);
ExactSparseMatrix matrix_from_json(const Json& j);

// Two-space indentation, trailing newline.
std::string dump(const Json& j);

}  // namespace schur
