#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "schur/amplitudes.hpp"
#include "schur/errors.hpp"

using namespace schur;

namespace {

GelfandTsetlinPattern G(const std::string& text) { return GelfandTsetlinPattern::parse(text); }
Radical R(const std::string& text) { return Radical::parse(text); }

// Every (lower, upper) edge with upper level at most n_max, over all d-letter
// tableaux.
std::vector<std::pair<GelfandTsetlinPattern, GelfandTsetlinPattern>> all_edges(int d, int n_max) {
    std::vector<std::pair<GelfandTsetlinPattern, GelfandTsetlinPattern>> out;
    for (int n = 0; n < n_max; ++n) {
        for (const auto& shape : partitions(n, d)) {
            for (const auto& lower : enumerate_patterns(shape, d)) {
                for (int k = 1; k <= d; ++k) {
                    for (const auto& upper : upper_neighbors(lower, k)) {
                        out.emplace_back(lower, upper);
                    }
                }
            }
        }
    }
    return out;
}

// Shape of the sub-tableau holding letters <= j, read off the rows.
std::vector<int> sub_shape(const std::vector<std::vector<int>>& rows, int j) {
    std::vector<int> out;
    for (const auto& row : rows) {
        int len = static_cast<int>(std::count_if(row.begin(), row.end(), [j](int v) { return v <= j; }));
        if (len > 0) {
            out.push_back(len);
        }
    }
    return out;
}

int box_difference(std::vector<int> small, std::vector<int> big) {
    small.resize(std::max(small.size(), big.size()));
    big.resize(small.size());
    int diff = 0;
    for (std::size_t i = 0; i < small.size(); ++i) {
        if (big[i] < small[i]) {
            return -1;
        }
        diff += big[i] - small[i];
    }
    return diff;
}

// Edge test on tableau rows: the letters below k sit identically and every
// sub-tableau of letters <= j (j >= k) gains exactly one box.
int tableau_edge_letter(const StandardWeylTableau& lower, const StandardWeylTableau& upper) {
    int d = lower.d();
    int k = 0;
    for (int j = 1; j <= d; ++j) {
        int diff = box_difference(sub_shape(lower.rows(), j), sub_shape(upper.rows(), j));
        if (k == 0 && diff == 0) {
            continue;
        }
        if (diff != 1) {
            return 0;
        }
        if (k == 0) {
            k = j;
        }
    }
    return k;
}

// Squared SU(2) Clebsch-Gordan coefficient for coupling the lower spin
// j = (m12 - m22)/2 with a spin 1/2 carrying letter k (1 = up, 2 = down).
Rational clebsch_gordan_squared(const GelfandTsetlinPattern& lower, const GelfandTsetlinPattern& upper, int k) {
    const int two_j = lower.at(1, 2) - lower.at(2, 2);
    const int two_m = 2 * upper.at(1, 1) - (upper.at(1, 2) + upper.at(2, 2));
    const bool raises_spin = upper.at(1, 2) > lower.at(1, 2);
    const bool up = k == 1;
    const int sign = raises_spin == up ? 1 : -1;
    return make_rational(two_j + sign * two_m + 1, 2 * (two_j + 1));
}

}  // namespace

TEST(TransitionContext, Examples) {
    auto c1 = transition_context(G("(2 1; 2)"), G("(3 1; 2)"));
    EXPECT_EQ(c1.k, 2);
    EXPECT_EQ(c1.tau_at(2), 1);
    auto c2 = transition_context(G("(3 2; 2)"), G("(3 3; 3)"));
    EXPECT_EQ(c2.k, 1);
    EXPECT_EQ(c2.tau_at(1), 1);
    EXPECT_EQ(c2.tau_at(2), 2);
    auto c3 = transition_context(G("(1 0; 0)"), G("(1 1; 1)"));
    EXPECT_EQ(c3.k, 1);
    EXPECT_EQ(c3.tau_at(1), 1);
    EXPECT_EQ(c3.tau_at(2), 2);
}

TEST(TransitionContext, RejectsNonEdges) {
    EXPECT_THROW(transition_context(G("(2 1; 2)"), G("(2 1; 2)")), NotAnEdge);
    EXPECT_THROW(transition_context(G("(2 0; 1)"), G("(3 1; 2)")), NotAnEdge);
    EXPECT_THROW(transition_context(G("(2 0; 2)"), G("(3 1; 2)")), NotAnEdge);
    EXPECT_THROW(transition_context(G("(2 0; 2)"), G("(2 0 0; 2 0; 2)")), NotAnEdge);
    EXPECT_THROW(transition_context(G("(2 0; 2)"), G("(4 0; 3)")), NotAnEdge);
}

TEST(LouckAmplitude, WorkedExamples) {
    EXPECT_EQ(louck_amplitude(G("(2 1; 2)"), G("(3 1; 2)")), Radical::from_sqrt(1, 1, 2));
    EXPECT_EQ(louck_amplitude(G("(3 2; 2)"), G("(3 3; 3)")), Radical::from_sqrt(-1, 1, 2));
    EXPECT_EQ(louck_amplitude(G("(7 4; 4)"), G("(7 5; 5)")), Radical::from_sqrt(-1, 3, 4));
    EXPECT_EQ(louck_amplitude(G("(7 4; 4)"), G("(7 5; 5)")).to_string(), "-1/2*sqrt(3)");
}

TEST(LouckAmplitude, OneLetterAlphabet) {
    for (int n = 1; n <= 6; ++n) {
        GelfandTsetlinPattern lower(std::vector<std::vector<int>>{{n - 1}});
        GelfandTsetlinPattern upper(std::vector<std::vector<int>>{{n}});
        EXPECT_EQ(louck_amplitude(lower, upper), Radical(1));
    }
}

TEST(PatternRules, WorkedExamples) {
    EXPECT_EQ(pattern_amplitude_d2(G("(2 1; 2)"), G("(3 1; 2)")), R("1/2*sqrt(2)"));
    EXPECT_EQ(classify_pattern_rule(G("(2 1; 2)"), G("(3 1; 2)")).to_string(), "rule 3 -> rule 1a (shift 1)");
    EXPECT_EQ(pattern_amplitude_d2(G("(3 2; 2)"), G("(3 3; 3)")), R("-1/2*sqrt(2)"));
    EXPECT_EQ(classify_pattern_rule(G("(3 2; 2)"), G("(3 3; 3)")).to_string(), "rule 4 -> rule 2b (shift 2)");
    EXPECT_EQ(pattern_amplitude_d2(G("(7 4; 4)"), G("(7 5; 5)")), R("-1/2*sqrt(3)"));
    EXPECT_EQ(pattern_amplitude_d2(G("(0 0; 0)"), G("(1 0; 1)")), Radical(1));
    EXPECT_EQ(classify_pattern_rule(G("(0 0; 0)"), G("(1 0; 1)")).to_string(), "rule 1b");
    EXPECT_EQ(pattern_amplitude_d2(G("(1 0; 0)"), G("(1 1; 1)")), R("-1/2*sqrt(2)"));
    EXPECT_EQ(louck_amplitude(G("(1 0; 0)"), G("(1 1; 1)")), R("-1/2*sqrt(2)"));
}

TEST(PatternRules, Errors) {
    EXPECT_THROW(pattern_amplitude_d2(G("(1 0 0; 1 0; 1)"), G("(2 0 0; 2 0; 2)")), WrongDimension);
    EXPECT_THROW(pattern_amplitude_d2(G("(2 1; 2)"), G("(2 1; 2)")), NotAnEdge);
}

TEST(EdgeAmplitude, Engines) {
    EXPECT_EQ(parse_engine("louck"), AmplitudeEngine::louck);
    EXPECT_EQ(parse_engine("pattern"), AmplitudeEngine::pattern_d2);
    EXPECT_EQ(parse_engine("both"), AmplitudeEngine::both_verify);
    EXPECT_THROW(parse_engine("fast"), std::invalid_argument);
    auto lower = G("(2 1; 2)");
    auto upper = G("(3 1; 2)");
    for (auto engine : {AmplitudeEngine::louck, AmplitudeEngine::pattern_d2, AmplitudeEngine::both_verify}) {
        EXPECT_EQ(edge_amplitude(lower, upper, engine), R("1/2*sqrt(2)")) << to_string(engine);
    }
    EXPECT_THROW(edge_amplitude(G("(1 0 0; 1 0; 1)"), G("(2 0 0; 2 0; 2)"), AmplitudeEngine::pattern_d2),
                 WrongDimension);
    EXPECT_EQ(edge_amplitude(G("(1 0 0; 1 0; 1)"), G("(2 0 0; 2 0; 2)"), AmplitudeEngine::both_verify), Radical(1));
}

TEST(Neighbors, SmallCases) {
    auto ups = upper_neighbors(G("(1 0; 1)"), 1);
    ASSERT_EQ(ups.size(), 1u);
    EXPECT_EQ(ups[0], G("(2 0; 2)"));
    ups = upper_neighbors(G("(1 0; 1)"), 2);
    ASSERT_EQ(ups.size(), 2u);
    EXPECT_EQ(ups[0], G("(2 0; 1)"));
    EXPECT_EQ(ups[1], G("(1 1; 1)"));
    EXPECT_TRUE(lower_neighbors(GelfandTsetlinPattern::zero(2), 1).empty());
    auto downs = lower_neighbors(G("(2 1; 1)"), 1);
    ASSERT_EQ(downs.size(), 1u);
    EXPECT_EQ(downs[0], G("(2 0; 0)"));
}

TEST(AmplitudeProperty, PatternRulesEqualLouck) {
    std::size_t edges = 0;
    for (const auto& [lower, upper] : all_edges(2, 8)) {
        ASSERT_EQ(pattern_amplitude_d2(lower, upper), louck_amplitude(lower, upper))
            << lower.to_string() << " -> " << upper.to_string();
        ++edges;
    }
    EXPECT_GT(edges, 100u);
}

TEST(AmplitudeProperty, SquaresMatchClebschGordan) {
    for (const auto& [lower, upper] : all_edges(2, 8)) {
        int k = transition_context(lower, upper).k;
        Radical a = louck_amplitude(lower, upper);
        EXPECT_EQ(a * a, Radical(clebsch_gordan_squared(lower, upper, k)))
            << lower.to_string() << " -> " << upper.to_string();
    }
}

TEST(AmplitudeProperty, ColumnNormalization) {
    for (int d = 1; d <= 3; ++d) {
        for (int n = 0; n < 6; ++n) {
            for (const auto& shape : partitions(n, d)) {
                for (const auto& lower : enumerate_patterns(shape, d)) {
                    for (int k = 1; k <= d; ++k) {
                        Radical sum;
                        for (const auto& upper : upper_neighbors(lower, k)) {
                            Radical a = louck_amplitude(lower, upper);
                            sum += a * a;
                        }
                        EXPECT_EQ(sum, Radical(1)) << lower.to_string() << " + " << k;
                    }
                }
            }
        }
    }
}

TEST(AmplitudeProperty, SquaresRationalAndSignParity) {
    for (int d = 2; d <= 3; ++d) {
        for (const auto& [lower, upper] : all_edges(d, 6)) {
            Radical a = louck_amplitude(lower, upper);
            ASSERT_FALSE(a.is_zero());
            ASSERT_TRUE((a * a).as_rational().has_value());
            auto ctx = transition_context(lower, upper);
            int negatives = 0;
            for (int j = ctx.k + 1; j <= d; ++j) {
                if (ctx.tau_at(j - 1) < ctx.tau_at(j)) {
                    ++negatives;
                }
            }
            EXPECT_EQ(a.sign(), negatives % 2 ? -1 : 1) << lower.to_string() << " -> " << upper.to_string();
        }
    }
}

TEST(AmplitudeProperty, NegativeExactlyInRuleTwoB) {
    for (const auto& [lower, upper] : all_edges(2, 7)) {
        auto trace = classify_pattern_rule(lower, upper);
        bool rule_2b = trace.base_rule == 2 && trace.variant == 'b';
        EXPECT_EQ(louck_amplitude(lower, upper).sign() < 0, rule_2b);
    }
}

TEST(NeighborProperty, MatchesTableauOracle) {
    for (int d = 1; d <= 3; ++d) {
        for (int n = 0; n < 5; ++n) {
            std::vector<StandardWeylTableau> lowers;
            std::vector<StandardWeylTableau> uppers;
            for (const auto& s : partitions(n, d)) {
                for (auto& t : enumerate_weyl(s, d)) {
                    lowers.push_back(t);
                }
            }
            for (const auto& s : partitions(n + 1, d)) {
                for (auto& t : enumerate_weyl(s, d)) {
                    uppers.push_back(t);
                }
            }
            for (const auto& lo : lowers) {
                std::map<int, std::vector<GelfandTsetlinPattern>> expected;
                for (const auto& up : uppers) {
                    int k = tableau_edge_letter(lo, up);
                    if (k > 0) {
                        expected[k].push_back(up.pattern());
                        EXPECT_NO_THROW(transition_context(lo.pattern(), up.pattern()));
                        auto downs = lower_neighbors(up.pattern(), k);
                        EXPECT_NE(std::find(downs.begin(), downs.end(), lo.pattern()), downs.end());
                    }
                    if (d == 2) {
                        // For two letters, content and frame alone decide edges.
                        auto lc = content(lo).counts;
                        auto uc = content(up).counts;
                        int grown = 0;
                        int letter = 0;
                        for (int i = 0; i < d; ++i) {
                            grown += uc[i] - lc[i] == 1 ? 1 : (uc[i] == lc[i] ? 0 : 99);
                            letter = uc[i] - lc[i] == 1 ? i + 1 : letter;
                        }
                        bool frame_grows = box_difference(lo.shape().parts(), up.shape().parts()) == 1;
                        EXPECT_EQ(grown == 1 && frame_grows ? letter : 0, k);
                    }
                }
                for (int k = 1; k <= d; ++k) {
                    auto got = upper_neighbors(lo.pattern(), k);
                    std::sort(expected[k].begin(), expected[k].end(), CanonicalOrder{});
                    EXPECT_EQ(got, expected[k]);
                }
            }
        }
    }
}
