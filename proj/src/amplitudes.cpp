#include "schur/amplitudes.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "schur/errors.hpp"

namespace schur {

TransitionContext transition_context(const GelfandTsetlinPattern& lower, const GelfandTsetlinPattern& upper) {
    const int d = lower.d();
    if (d < 1 || upper.d() != d) {
        throw NotAnEdge("patterns " + lower.to_string() + " and " + upper.to_string() + " have different depths");
    }
    int k = 0;
    for (int j = 1; j <= d && k == 0; ++j) {
        if (lower.level(j) != upper.level(j)) {
            k = j;
        }
    }
    if (k == 0) {
        throw NotAnEdge("identical patterns " + lower.to_string());
    }
    TransitionContext ctx{lower, upper, k, std::vector<int>(d + 1, 0)};
    for (int j = k; j <= d; ++j) {
        int slot = 0;
        for (int i = 1; i <= j; ++i) {
            int diff = upper.at(i, j) - lower.at(i, j);
            if (diff == 1 && slot == 0) {
                slot = i;
            } else if (diff != 0) {
                slot = -1;
                break;
            }
        }
        if (slot <= 0) {
            throw NotAnEdge(lower.to_string() + " -> " + upper.to_string() + ": level " + std::to_string(j) +
                            " does not gain exactly one box");
        }
        ctx.tau[j] = slot;
    }
    return ctx;
}

namespace {

Integer hook_product(int count, const std::function<long(int)>& factor, int skip) {
    Integer out = 1;
    for (int i = 1; i <= count; ++i) {
        if (i != skip) {
            out *= factor(i);
        }
    }
    return out;
}

}  // namespace

Radical louck_amplitude(const TransitionContext& ctx) {
    const GelfandTsetlinPattern& m = ctx.lower;
    const int d = m.d();
    const int k = ctx.k;
    auto p = [&m](int i, int j) -> long { return partial_hook(m, i, j); };

    int sign = 1;
    Integer num = 1;
    Integer den = 1;
    for (int j = k + 1; j <= d; ++j) {
        const int a = ctx.tau_at(j - 1);
        const int b = ctx.tau_at(j);
        if (a - b < 0) {
            sign = -sign;
        }
        num *= hook_product(j - 1, [&](int i) { return p(b, j) - p(i, j - 1); }, a);
        num *= hook_product(j, [&](int i) { return p(a, j - 1) - p(i, j) + 1; }, b);
        den *= hook_product(j, [&](int i) { return p(b, j) - p(i, j); }, b);
        den *= hook_product(j - 1, [&](int i) { return p(a, j - 1) - p(i, j - 1) + 1; }, a);
    }
    if (k > 1) {
        const int b = ctx.tau_at(k);
        num *= hook_product(k - 1, [&](int i) { return p(b, k) - p(i, k - 1); }, 0);
        den *= hook_product(k, [&](int i) { return p(b, k) - p(i, k); }, b);
    }
    if (den == 0) {
        throw std::logic_error("vanishing hook product on edge " + m.to_string() + " -> " + ctx.upper.to_string());
    }
    return Radical::from_sqrt(sign, abs(num), abs(den));
}

Radical louck_amplitude(const GelfandTsetlinPattern& lower, const GelfandTsetlinPattern& upper) {
    return louck_amplitude(transition_context(lower, upper));
}

std::string PatternRuleTrace::to_string() const {
    std::string out = "rule " + std::to_string(shape_rule);
    if (shape_rule > 2) {
        out += " -> rule " + std::to_string(base_rule);
    }
    out += variant;
    if (shift > 0) {
        out += " (shift " + std::to_string(shift) + ")";
    }
    return out;
}

PatternRuleTrace classify_pattern_rule(const GelfandTsetlinPattern& lower, const GelfandTsetlinPattern& upper) {
    if (lower.d() != 2 || upper.d() != 2) {
        throw WrongDimension("Pattern Rules apply to d = 2 only, got d = " + std::to_string(lower.d()));
    }
    transition_context(lower, upper);
    const int b = lower.at(2, 2);
    PatternRuleTrace trace;
    // First top entry grows: (n-k-1, k) <-> (n-k, k), Rule 1 when k = 0.
    // Second top entry grows: (n-k, k-1) <-> (n-k, k), Rule 2 when k = 1.
    const bool first_grows = upper.at(2, 2) == b;
    trace.base_rule = first_grows ? 1 : 2;
    trace.shape_rule = b == 0 ? trace.base_rule : trace.base_rule + 2;
    trace.shift = b;
    trace.variant = lower.at(1, 1) == upper.at(1, 1) ? 'a' : 'b';
    trace.reduced_n = upper.at(1, 2) + upper.at(2, 2) - 2 * b;
    return trace;
}

Radical pattern_amplitude_d2(const GelfandTsetlinPattern& lower, const GelfandTsetlinPattern& upper) {
    const PatternRuleTrace rule = classify_pattern_rule(lower, upper);
    const int n = rule.reduced_n;
    const int m11 = upper.at(1, 1) - rule.shift;
    if (rule.base_rule == 1) {
        return rule.variant == 'a' ? Radical::from_sqrt(1, n - m11, n) : Radical::from_sqrt(1, m11, n);
    }
    return rule.variant == 'a' ? Radical::from_sqrt(1, m11, n) : Radical::from_sqrt(-1, n - m11, n);
}

std::string to_string(AmplitudeEngine engine) {
    switch (engine) {
        case AmplitudeEngine::louck: return "louck";
        case AmplitudeEngine::pattern_d2: return "pattern";
        case AmplitudeEngine::both_verify: return "both";
    }
    return "?";
}

AmplitudeEngine parse_engine(const std::string& name) {
    if (name == "louck") return AmplitudeEngine::louck;
    if (name == "pattern" || name == "pattern-d2") return AmplitudeEngine::pattern_d2;
    if (name == "both" || name == "both-verify") return AmplitudeEngine::both_verify;
    throw std::invalid_argument("unknown amplitude engine '" + name + "'");
}

Radical edge_amplitude(const GelfandTsetlinPattern& lower, const GelfandTsetlinPattern& upper,
                       AmplitudeEngine engine) {
    switch (engine) {
        case AmplitudeEngine::louck:
            return louck_amplitude(lower, upper);
        case AmplitudeEngine::pattern_d2:
            return pattern_amplitude_d2(lower, upper);
        case AmplitudeEngine::both_verify: {
            Radical louck = louck_amplitude(lower, upper);
            if (lower.d() == 2) {
                Radical pattern = pattern_amplitude_d2(lower, upper);
                if (!(pattern == louck)) {
                    throw AmplitudeMismatch("edge " + lower.to_string() + " -> " + upper.to_string() + ": Louck " +
                                            louck.to_string() + " vs Pattern Rules " + pattern.to_string());
                }
            }
            return louck;
        }
    }
    throw std::logic_error("unreachable amplitude engine");
}

namespace {

bool interlaces(const std::vector<int>& upper_level, const std::vector<int>& lower_level) {
    for (size_t i = 0; i < lower_level.size(); ++i) {
        if (!(upper_level[i] >= lower_level[i] && lower_level[i] >= upper_level[i + 1])) {
            return false;
        }
    }
    return true;
}

// Shifts one slot of every level j >= k by `delta`, keeping the pattern valid.
std::vector<GelfandTsetlinPattern> neighbors(const GelfandTsetlinPattern& start, int k, int delta) {
    const int d = start.d();
    if (k < 1 || k > d) {
        throw std::invalid_argument("letter " + std::to_string(k) + " outside 1.." + std::to_string(d));
    }
    std::vector<GelfandTsetlinPattern> out;
    std::vector<std::vector<int>> levels = start.levels();
    std::function<void(int)> shift_level = [&](int j) {
        if (j > d) {
            out.emplace_back(levels);
            return;
        }
        auto& level = levels[j - 1];
        for (int slot = 0; slot < j; ++slot) {
            level[slot] += delta;
            bool ok = level[slot] >= 0 && (slot == 0 || level[slot - 1] >= level[slot]) &&
                      (slot + 1 == j || level[slot] >= level[slot + 1]) &&
                      (j == 1 || interlaces(level, levels[j - 2]));
            if (ok) {
                shift_level(j + 1);
            }
            level[slot] -= delta;
        }
    };
    shift_level(k);
    std::sort(out.begin(), out.end(), CanonicalOrder{});
    return out;
}

}  // namespace

std::vector<GelfandTsetlinPattern> upper_neighbors(const GelfandTsetlinPattern& lower, int k) {
    return neighbors(lower, k, +1);
}

std::vector<GelfandTsetlinPattern> lower_neighbors(const GelfandTsetlinPattern& upper, int k) {
    return neighbors(upper, k, -1);
}

}  // namespace schur
