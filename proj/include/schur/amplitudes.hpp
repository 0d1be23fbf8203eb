#pragma once

#include <string>
#include <vector>

#include "schur/radical.hpp"
#include "schur/tableaux.hpp"

namespace schur {

// Shape of an edge between adjacent levels of the Schur-Weyl-Young graph.
// Levels 1..k-1 of the two patterns coincide; each level j >= k of the upper
// pattern is the lower level plus one in slot tau[j].
struct TransitionContext {
    GelfandTsetlinPattern lower;
    GelfandTsetlinPattern upper;
    int k = 1;              // letter added to the lower tableau
    std::vector<int> tau;   // tau[j] for j = k..d; entries below k unused (0)

    int tau_at(int j) const { return tau.at(j); }
};

// Throws NotAnEdge when the patterns are not joined by an edge.
TransitionContext transition_context(const GelfandTsetlinPattern& lower, const GelfandTsetlinPattern& upper);

// Louck's transition amplitude for any d. Partial hooks are taken on the
// lower pattern; sgn(0) = +1.
Radical louck_amplitude(const GelfandTsetlinPattern& lower, const GelfandTsetlinPattern& upper);
Radical louck_amplitude(const TransitionContext& ctx);

// Which of the four d = 2 Pattern Rules applies and how the patterns were
// reduced before the base rule was evaluated.
struct PatternRuleTrace {
    int shape_rule = 1;  // 1..4, from the shapes of the two top rows
    int base_rule = 1;   // 1 or 2, the rule applied after reduction
    char variant = 'a';  // 'a' when m_{1,1} is unchanged, 'b' otherwise
    int shift = 0;       // amount subtracted from every entry (k or k-1)
    int reduced_n = 0;   // n of the reduced upper pattern

    std::string to_string() const;  // e.g. "rule 3 -> rule 1a (shift 1)"
};

PatternRuleTrace classify_pattern_rule(const GelfandTsetlinPattern& lower, const GelfandTsetlinPattern& upper);
// Throws WrongDimension unless d = 2, NotAnEdge for non-edges.
Radical pattern_amplitude_d2(const GelfandTsetlinPattern& lower, const GelfandTsetlinPattern& upper);

enum class AmplitudeEngine {
    louck,       // any d
    pattern_d2,  // d = 2 only
    both_verify, // Louck, cross-checked against the Pattern Rules when d = 2
};

std::string to_string(AmplitudeEngine engine);
AmplitudeEngine parse_engine(const std::string& name);

// Dispatches to the chosen engine. both_verify throws AmplitudeMismatch on
// disagreement.
Radical edge_amplitude(const GelfandTsetlinPattern& lower, const GelfandTsetlinPattern& upper,
                       AmplitudeEngine engine = AmplitudeEngine::louck);

// Every pattern reachable from `lower` by adding letter k, in canonical order.
std::vector<GelfandTsetlinPattern> upper_neighbors(const GelfandTsetlinPattern& lower, int k);
// Every pattern from which `upper` is reached by adding letter k, in
// canonical order.
std::vector<GelfandTsetlinPattern> lower_neighbors(const GelfandTsetlinPattern& upper, int k);

}  // namespace schur
