#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "schur/branching.hpp"

namespace schur {

class ComputationalState {
public:
    ComputationalState(int n, int d) : n_(n), d_(d) {}
    static ComputationalState basis(const Word& word, int d);

    void add(const Word& word, const Radical& amplitude);

    int n() const { return n_; }
    int d() const { return d_; }
    const auto& terms() const { return terms_.terms(); }
    std::size_t size() const { return terms_.size(); }
    Radical amplitude(const Word& w) const { return terms_.amplitude(w); }
    Radical norm_squared() const { return terms_.norm_squared(); }

    friend bool operator==(const ComputationalState& a, const ComputationalState& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    int d_;
    LinearCombination<Word> terms_;
};

// Computational basis word -> Schur-Weyl basis, one left-to-right branching
// step per qudit starting from the leftmost.
SchurWeylState encode(const Word& word, int d, AmplitudeEngine engine = AmplitudeEngine::louck);
// Schur-Weyl state -> computational basis, by right-to-left branching.
ComputationalState decode(const SchurWeylState& state, AmplitudeEngine engine = AmplitudeEngine::louck);

// Every triplet |lambda t y> of (C^d)^{(x) n} in triplet-major canonical order.
class SchurBasisIndex {
public:
    static SchurBasisIndex build(int d, int n);

    int d() const { return d_; }
    int n() const { return n_; }
    std::size_t size() const { return triplets_.size(); }
    const std::vector<SchurWeylTriplet>& triplets() const { return triplets_; }
    const SchurWeylTriplet& at(std::size_t row) const { return triplets_.at(row); }
    std::optional<std::size_t> position(const SchurWeylTriplet& t) const;

private:
    int d_ = 1;
    int n_ = 0;
    std::vector<SchurWeylTriplet> triplets_;
    std::map<SchurWeylTriplet, std::size_t, TripletOrder> positions_;
};

// Column index of a word: the word read as a base-d numeral, first letter
// most significant.
std::size_t word_index(const Word& word, int d);
Word word_at(std::size_t index, int d, int n);

class ExactSparseMatrix {
public:
    using Entries = std::map<std::pair<std::size_t, std::size_t>, Radical>;

    ExactSparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    // Zero erases the entry.
    void set(std::size_t row, std::size_t col, const Radical& value);
    Radical at(std::size_t row, std::size_t col) const;
    const Entries& entries() const { return entries_; }

    friend bool operator==(const ExactSparseMatrix&, const ExactSparseMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    Entries entries_;
};

inline constexpr std::size_t kDefaultSizeBound = 4096;

// Rows are Schur-Weyl triplets (SchurBasisIndex order), columns are words
// (word_index order); column c is encode(word_at(c)). Throws
// SizeBoundExceeded when d^n > size_bound.
ExactSparseMatrix schur_matrix(int d, int n, std::size_t size_bound = kDefaultSizeBound,
                               AmplitudeEngine engine = AmplitudeEngine::louck);

// Exact check of M * M^T = I (amplitudes are real).
bool verify_unitary(const ExactSparseMatrix& m);

// sum over lambda of |Weyl tableaux| * |standard Young tableaux| == d^n.
bool dimension_check(int d, int n);

}  // namespace schur
