#include "schur/branching.hpp"

#include <algorithm>
#include <stdexcept>

#include "schur/errors.hpp"

namespace schur {

SchurWeylTriplet::SchurWeylTriplet(int d) : weyl_(StandardWeylTableau::empty(d)) {}

SchurWeylTriplet::SchurWeylTriplet(StandardWeylTableau weyl, GrowthPath young)
    : weyl_(std::move(weyl)), young_(std::move(young)) {
    if (weyl_.shape() != young_.shape()) {
        throw InvariantViolation("weyl and young tableaux share one shape");
    }
}

SchurWeylTriplet::SchurWeylTriplet(const Partition& shape, StandardWeylTableau weyl, GrowthPath young)
    : SchurWeylTriplet(std::move(weyl), std::move(young)) {
    if (shape != young_.shape()) {
        throw InvariantViolation("weyl and young tableaux share one shape");
    }
}

std::string SchurWeylTriplet::to_string(int letter_offset) const {
    return "shape=" + shape().to_string() + " t=" + format_rows(weyl_.rows(), letter_offset) +
           " y=" + format_rows(path_to_syt(young_).rows());
}

bool TripletOrder::operator()(const SchurWeylTriplet& a, const SchurWeylTriplet& b) const {
    CanonicalOrder order;
    if (a.shape() != b.shape()) {
        return order(a.shape(), b.shape());
    }
    if (!(a.weyl() == b.weyl())) {
        return order(a.weyl(), b.weyl());
    }
    return order(a.young(), b.young());
}

bool HybridKeyOrder::operator()(const HybridKey& a, const HybridKey& b) const {
    TripletOrder order;
    if (order(a.triplet, b.triplet)) {
        return true;
    }
    if (order(b.triplet, a.triplet)) {
        return false;
    }
    return a.suffix < b.suffix;
}

SchurWeylState SchurWeylState::basis(const SchurWeylTriplet& triplet) {
    SchurWeylState out(triplet.n(), triplet.d());
    out.add(triplet, Radical(1));
    return out;
}

void SchurWeylState::add(const SchurWeylTriplet& triplet, const Radical& amplitude) {
    if (triplet.n() != n_ || triplet.d() != d_) {
        throw InvariantViolation("triplet matches the register length and d");
    }
    terms_.add(triplet, amplitude);
}

HybridState HybridState::from_word(const Word& word, int d) {
    HybridState out(0, static_cast<int>(word.size()), d);
    out.add(SchurWeylTriplet(d), word, Radical(1));
    return out;
}

HybridState HybridState::from_schur(const SchurWeylState& state) {
    HybridState out(state.n(), 0, state.d());
    for (const auto& [triplet, amplitude] : state.terms()) {
        out.add(triplet, {}, amplitude);
    }
    return out;
}

void HybridState::add(const SchurWeylTriplet& triplet, const Word& suffix, const Radical& amplitude) {
    if (triplet.n() != split_ || static_cast<int>(suffix.size()) != suffix_length_ || triplet.d() != d_) {
        throw InvariantViolation("hybrid term matches the register split and d");
    }
    for (int letter : suffix) {
        if (letter < 1 || letter > d_) {
            throw InvariantViolation("letters in 1..d");
        }
    }
    terms_.add(HybridKey{triplet, suffix}, amplitude);
}

namespace {

// Row of the top level that gains a box between two patterns.
int added_row(const GelfandTsetlinPattern& lower, const GelfandTsetlinPattern& upper) {
    const auto& a = lower.level(lower.d());
    const auto& b = upper.level(upper.d());
    auto it = std::mismatch(a.begin(), a.end(), b.begin()).first;
    return static_cast<int>(it - a.begin()) + 1;
}

}  // namespace

SchurWeylState branch_up(const SchurWeylTriplet& triplet, int k, AmplitudeEngine engine) {
    const int d = triplet.d();
    if (k < 1 || k > d) {
        throw std::invalid_argument("letter " + std::to_string(k) + " outside 1.." + std::to_string(d));
    }
    SchurWeylState out(triplet.n() + 1, d);
    const auto& lower = triplet.weyl().pattern();
    for (const auto& upper : upper_neighbors(lower, k)) {
        SchurWeylTriplet next(gt_to_weyl(upper), triplet.young().extended(added_row(lower, upper)));
        out.add(next, edge_amplitude(lower, upper, engine));
    }
    return out;
}

std::vector<DownBranch> branch_down(const SchurWeylTriplet& triplet, AmplitudeEngine engine) {
    if (triplet.n() == 0) {
        throw std::invalid_argument("cannot branch down from the empty triplet");
    }
    std::vector<DownBranch> out;
    const auto& upper = triplet.weyl().pattern();
    const GrowthPath young = triplet.young().truncated();
    for (int k = 1; k <= triplet.d(); ++k) {
        for (const auto& lower : lower_neighbors(upper, k)) {
            if (lower.shape() != young.shape()) {
                continue;
            }
            Radical amplitude = edge_amplitude(lower, upper, engine);
            if (!amplitude.is_zero()) {
                out.push_back({SchurWeylTriplet(gt_to_weyl(lower), young), k, std::move(amplitude)});
            }
        }
    }
    return out;
}

HybridState branch_up_state(const HybridState& state, AmplitudeEngine engine) {
    if (state.suffix_length() < 1) {
        throw std::invalid_argument("branch_up_state needs a nonempty computational suffix");
    }
    HybridState out(state.split() + 1, state.suffix_length() - 1, state.d());
    for (const auto& [key, amplitude] : state.terms()) {
        const Word rest(key.suffix.begin() + 1, key.suffix.end());
        const SchurWeylState up = branch_up(key.triplet, key.suffix.front(), engine);
        for (const auto& [next, a] : up.terms()) {
            out.add(next, rest, amplitude * a);
        }
    }
    return out;
}

HybridState branch_down_state(const HybridState& state, AmplitudeEngine engine) {
    if (state.split() < 1) {
        throw std::invalid_argument("branch_down_state needs a nonempty Schur-Weyl register");
    }
    HybridState out(state.split() - 1, state.suffix_length() + 1, state.d());
    for (const auto& [key, amplitude] : state.terms()) {
        for (const auto& branch : branch_down(key.triplet, engine)) {
            Word suffix;
            suffix.reserve(key.suffix.size() + 1);
            suffix.push_back(branch.letter);
            suffix.insert(suffix.end(), key.suffix.begin(), key.suffix.end());
            out.add(branch.triplet, suffix, amplitude * branch.amplitude);
        }
    }
    return out;
}

}  // namespace schur
