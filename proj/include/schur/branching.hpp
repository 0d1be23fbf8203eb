#pragma once

#include <string>
#include <vector>

#include "schur/amplitudes.hpp"
#include "schur/linear_combination.hpp"
#include "schur/tableaux.hpp"

namespace schur {

using Word = std::vector<int>;  // letters in 1..d

// Schur-Weyl basis label |lambda t y> of (C^d)^{(x) n}.
class SchurWeylTriplet {
public:
    // The empty triplet of level 0.
    explicit SchurWeylTriplet(int d);
    // Throws InvariantViolation unless weyl and young share one shape.
    SchurWeylTriplet(StandardWeylTableau weyl, GrowthPath young);
    SchurWeylTriplet(const Partition& shape, StandardWeylTableau weyl, GrowthPath young);

    const Partition& shape() const { return young_.shape(); }
    const StandardWeylTableau& weyl() const { return weyl_; }
    const GrowthPath& young() const { return young_; }
    int n() const { return young_.size(); }
    int d() const { return weyl_.d(); }

    std::string to_string(int letter_offset = 0) const;

    friend bool operator==(const SchurWeylTriplet& a, const SchurWeylTriplet& b) {
        return a.weyl_ == b.weyl_ && a.young_ == b.young_;
    }

private:
    StandardWeylTableau weyl_;
    GrowthPath young_;
};

// Triplet-major canonical order: shape, then Weyl tableau, then Young path.
struct TripletOrder {
    bool operator()(const SchurWeylTriplet& a, const SchurWeylTriplet& b) const;
};

class SchurWeylState {
public:
    SchurWeylState(int n, int d) : n_(n), d_(d) {}
    static SchurWeylState basis(const SchurWeylTriplet& triplet);

    void add(const SchurWeylTriplet& triplet, const Radical& amplitude);

    int n() const { return n_; }
    int d() const { return d_; }
    const auto& terms() const { return terms_.terms(); }
    std::size_t size() const { return terms_.size(); }
    Radical amplitude(const SchurWeylTriplet& t) const { return terms_.amplitude(t); }
    Radical norm_squared() const { return terms_.norm_squared(); }

    friend bool operator==(const SchurWeylState& a, const SchurWeylState& b) {
        return a.n_ == b.n_ && a.d_ == b.d_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    int d_;
    LinearCombination<SchurWeylTriplet, TripletOrder> terms_;
};

// A Schur-Weyl register over the first `split` qudits followed by a
// computational register holding the remaining letters.
struct HybridKey {
    SchurWeylTriplet triplet;
    Word suffix;
    friend bool operator==(const HybridKey&, const HybridKey&) = default;
};

struct HybridKeyOrder {
    bool operator()(const HybridKey& a, const HybridKey& b) const;
};

class HybridState {
public:
    HybridState(int split, int suffix_length, int d) : split_(split), suffix_length_(suffix_length), d_(d) {}
    // |empty>|word> with amplitude 1.
    static HybridState from_word(const Word& word, int d);
    // A pure Schur-Weyl state with an empty suffix.
    static HybridState from_schur(const SchurWeylState& state);

    void add(const SchurWeylTriplet& triplet, const Word& suffix, const Radical& amplitude);

    int split() const { return split_; }
    int suffix_length() const { return suffix_length_; }
    int d() const { return d_; }
    const auto& terms() const { return terms_.terms(); }
    std::size_t size() const { return terms_.size(); }
    Radical norm_squared() const { return terms_.norm_squared(); }

    friend bool operator==(const HybridState& a, const HybridState& b) {
        return a.split_ == b.split_ && a.suffix_length_ == b.suffix_length_ && a.d_ == b.d_ && a.terms_ == b.terms_;
    }

private:
    int split_;
    int suffix_length_;
    int d_;
    LinearCombination<HybridKey, HybridKeyOrder> terms_;
};

// Left-to-right rule: |mu t y>|k> as a superposition one level up.
SchurWeylState branch_up(const SchurWeylTriplet& triplet, int k, AmplitudeEngine engine = AmplitudeEngine::louck);

struct DownBranch {
    SchurWeylTriplet triplet;
    int letter;
    Radical amplitude;
};

// Right-to-left rule: |lambda t y> as pairs |mu t* y*>|k>. y* drops the last
// growth step; terms are ordered by letter, then triplet.
std::vector<DownBranch> branch_down(const SchurWeylTriplet& triplet, AmplitudeEngine engine = AmplitudeEngine::louck);

// Linear extensions: consume the first suffix letter / emit a letter at the
// front of the suffix.
HybridState branch_up_state(const HybridState& state, AmplitudeEngine engine = AmplitudeEngine::louck);
HybridState branch_down_state(const HybridState& state, AmplitudeEngine engine = AmplitudeEngine::louck);

}  // namespace schur
