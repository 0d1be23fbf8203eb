#include "schur/transform.hpp"

#include <stdexcept>

#include "schur/errors.hpp"

namespace schur {

ComputationalState ComputationalState::basis(const Word& word, int d) {
    ComputationalState out(static_cast<int>(word.size()), d);
    out.add(word, Radical(1));
    return out;
}

void ComputationalState::add(const Word& word, const Radical& amplitude) {
    if (static_cast<int>(word.size()) != n_) {
        throw InvariantViolation("uniform word length");
    }
    for (int letter : word) {
        if (letter < 1 || letter > d_) {
            throw InvariantViolation("letters in 1..d");
        }
    }
    terms_.add(word, amplitude);
}

SchurWeylState encode(const Word& word, int d, AmplitudeEngine engine) {
    for (int letter : word) {
        if (letter < 1 || letter > d) {
            throw std::invalid_argument("letter " + std::to_string(letter) + " outside 1.." + std::to_string(d));
        }
    }
    HybridState state = HybridState::from_word(word, d);
    while (state.suffix_length() > 0) {
        state = branch_up_state(state, engine);
    }
    SchurWeylState out(static_cast<int>(word.size()), d);
    for (const auto& [key, amplitude] : state.terms()) {
        out.add(key.triplet, amplitude);
    }
    return out;
}

ComputationalState decode(const SchurWeylState& state, AmplitudeEngine engine) {
    HybridState hybrid = HybridState::from_schur(state);
    while (hybrid.split() > 0) {
        hybrid = branch_down_state(hybrid, engine);
    }
    ComputationalState out(state.n(), state.d());
    for (const auto& [key, amplitude] : hybrid.terms()) {
        out.add(key.suffix, amplitude);
    }
    return out;
}

SchurBasisIndex SchurBasisIndex::build(int d, int n) {
    SchurBasisIndex index;
    index.d_ = d;
    index.n_ = n;
    for (const auto& shape : partitions(n, d)) {
        const auto paths = enumerate_paths(shape);
        for (const auto& weyl : enumerate_weyl(shape, d)) {
            for (const auto& path : paths) {
                index.positions_.emplace(SchurWeylTriplet(weyl, path), index.triplets_.size());
                index.triplets_.emplace_back(weyl, path);
            }
        }
    }
    return index;
}

std::optional<std::size_t> SchurBasisIndex::position(const SchurWeylTriplet& t) const {
    auto it = positions_.find(t);
    if (it == positions_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t word_index(const Word& word, int d) {
    std::size_t index = 0;
    for (int letter : word) {
        index = index * d + static_cast<std::size_t>(letter - 1);
    }
    return index;
}

Word word_at(std::size_t index, int d, int n) {
    Word word(n);
    for (int i = n - 1; i >= 0; --i) {
        word[i] = static_cast<int>(index % d) + 1;
        index /= d;
    }
    return word;
}

void ExactSparseMatrix::set(std::size_t row, std::size_t col, const Radical& value) {
    if (row >= rows_ || col >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
    if (value.is_zero()) {
        entries_.erase({row, col});
    } else {
        entries_[{row, col}] = value;
    }
}

Radical ExactSparseMatrix::at(std::size_t row, std::size_t col) const {
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Radical() : it->second;
}

namespace {

std::size_t checked_power(int d, int n, std::size_t bound) {
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::size_t>(d);
        if (total > bound) {
            throw SizeBoundExceeded("d^n = " + std::to_string(d) + "^" + std::to_string(n) +
                                    " exceeds the size bound " + std::to_string(bound));
        }
    }
    return total;
}

}  // namespace

ExactSparseMatrix schur_matrix(int d, int n, std::size_t size_bound, AmplitudeEngine engine) {
    if (d < 1 || n < 0) {
        throw std::invalid_argument("schur_matrix needs d >= 1 and n >= 0");
    }
    const std::size_t dim = checked_power(d, n, size_bound);
    const SchurBasisIndex basis = SchurBasisIndex::build(d, n);
    if (basis.size() != dim) {
        throw std::logic_error("Schur-Weyl basis size differs from d^n");
    }
    ExactSparseMatrix m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const SchurWeylState column = encode(word_at(col, d, n), d, engine);
        for (const auto& [triplet, amplitude] : column.terms()) {
            m.set(*basis.position(triplet), col, amplitude);
        }
    }
    return m;
}

bool verify_unitary(const ExactSparseMatrix& m) {
    if (m.rows() != m.cols()) {
        return false;
    }
    std::vector<std::vector<std::pair<std::size_t, const Radical*>>> by_row(m.rows());
    std::vector<std::vector<std::pair<std::size_t, const Radical*>>> by_col(m.cols());
    for (const auto& [index, value] : m.entries()) {
        by_row[index.first].emplace_back(index.second, &value);
        by_col[index.second].emplace_back(index.first, &value);
    }
    const Radical one(1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::map<std::size_t, Radical> products;
        for (const auto& [c, a] : by_row[r]) {
            for (const auto& [r2, b] : by_col[c]) {
                products[r2] += *a * *b;
            }
        }
        for (const auto& [r2, value] : products) {
            if (!(value == (r2 == r ? one : Radical()))) {
                return false;
            }
        }
        if (products.find(r) == products.end()) {
            return false;
        }
    }
    return true;
}

bool dimension_check(int d, int n) {
    Integer total = 0;
    for (const auto& shape : partitions(n, d)) {
        total += Integer(enumerate_weyl(shape, d).size()) * Integer(enumerate_syt(shape).size());
    }
    Integer expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n));
    return total == expected;
}

}  // namespace schur
