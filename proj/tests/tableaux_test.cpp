#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "oracles.hpp"
#include "schur/errors.hpp"
#include "schur/tableaux.hpp"

using namespace schur;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<std::vector<int>> as_vectors(const std::vector<Partition>& ps) {
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) {
        out.push_back(p.parts());
    }
    return out;
}

std::string invariant_message(const std::function<void()>& f) {
    try {
        f();
    } catch (const InvariantViolation& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Partition, Basics) {
    Partition p = P({4, 2, 2, 0});
    EXPECT_EQ(p, P({4, 2, 2}));
    EXPECT_EQ(p.size(), 8);
    EXPECT_EQ(p.length(), 3);
    EXPECT_EQ(p.part(4), 0);
    EXPECT_EQ(p.padded(4), (std::vector<int>{4, 2, 2, 0}));
    EXPECT_EQ(p.to_string(), "(4,2,2)");
    EXPECT_EQ(Partition().to_string(), "()");
    EXPECT_THROW(P({1, 2}), InvariantViolation);
    EXPECT_THROW(P({2, -1}), InvariantViolation);
}

TEST(Partition, Enumeration) {
    EXPECT_EQ(as_vectors(partitions(0, 2)), (std::vector<std::vector<int>>{{}}));
    EXPECT_EQ(as_vectors(partitions(3, 2)), (std::vector<std::vector<int>>{{3}, {2, 1}}));
    auto eight = partitions(8, 4);
    EXPECT_NE(std::find(eight.begin(), eight.end(), P({4, 2, 2, 0})), eight.end());
    for (int n = 0; n <= 8; ++n) {
        for (int k = 1; k <= 4; ++k) {
            auto got = as_vectors(partitions(n, k));
            EXPECT_EQ(got, oracle::all_partitions(n, k)) << n << " " << k;
        }
    }
}

TEST(Partition, AddableRemovable) {
    EXPECT_EQ(removable_boxes(P({4, 2, 2})), (std::vector<BoxCoord>{{1, 4}, {3, 2}}));
    EXPECT_EQ(addable_boxes(P({4, 2, 2}), 4), (std::vector<BoxCoord>{{1, 5}, {2, 3}, {4, 1}}));
    EXPECT_EQ(addable_boxes(P({4, 2, 2}), 3), (std::vector<BoxCoord>{{1, 5}, {2, 3}}));
    EXPECT_EQ(addable_boxes(Partition()), (std::vector<BoxCoord>{{1, 1}}));
    EXPECT_TRUE(removable_boxes(Partition()).empty());
}

TEST(PartitionProperty, AddThenRemove) {
    for (int n = 0; n <= 7; ++n) {
        for (const auto& p : partitions(n, n)) {
            auto add = addable_boxes(p);
            EXPECT_EQ(add.size(), removable_boxes(p).size() + 1) << p.to_string();
            for (const auto& box : add) {
                Partition q = p.with_box(box.row);
                EXPECT_EQ(q.part(box.row), box.col);
                EXPECT_EQ(q.without_box(box.row), p);
            }
        }
    }
}

TEST(YoungTableau, PathConversion) {
    auto y = StandardYoungTableau::from_rows({{1, 2}, {3}});
    GrowthPath path = syt_to_path(y);
    EXPECT_EQ(path.shapes(), (std::vector<Partition>{Partition(), P({1}), P({2}), P({2, 1})}));
    EXPECT_EQ(path.to_string(), "() < (1) < (2) < (2,1)");
    EXPECT_EQ(path_to_syt(path).rows(), y.rows());

    auto five = StandardYoungTableau::from_rows({{1, 3, 4}, {2, 5}});
    EXPECT_EQ(path_to_syt(syt_to_path(five)).rows(), five.rows());

    GrowthPath one = GrowthPath::from_shapes({Partition(), P({1})});
    EXPECT_EQ(path_to_syt(one).rows(), (std::vector<std::vector<int>>{{1}}));

    EXPECT_THROW(GrowthPath::from_shapes({Partition(), P({2})}), InvariantViolation);
    EXPECT_THROW(GrowthPath::from_rows({2}), InvariantViolation);
    EXPECT_THROW(StandardYoungTableau::from_rows({{2, 1}}), InvariantViolation);
    EXPECT_THROW(StandardYoungTableau::from_rows({{1, 3}, {2, 4}, {}}), InvariantViolation);
}

TEST(YoungTableau, EnumerationCounts) {
    EXPECT_EQ(enumerate_syt(P({2, 1})).size(), 2u);
    EXPECT_EQ(enumerate_syt(P({2, 2})).size(), 2u);
    EXPECT_EQ(enumerate_syt(P({5})).size(), 1u);
}

TEST(YoungTableauProperty, MatchesBruteForceAndHookLength) {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& p : partitions(n, n)) {
            auto got = enumerate_syt(p);
            std::set<oracle::Rows> rows;
            for (const auto& y : got) {
                rows.insert(y.rows());
            }
            EXPECT_EQ(rows.size(), got.size());
            EXPECT_EQ(rows, oracle::brute_force_syt(p.parts())) << p.to_string();
            EXPECT_EQ(static_cast<long>(got.size()), oracle::hook_length_count(p.parts())) << p.to_string();
        }
    }
}

TEST(YoungTableauProperty, PathBijection) {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& p : partitions(n, n)) {
            auto paths = enumerate_paths(p);
            EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end(), CanonicalOrder{}));
            for (const auto& path : paths) {
                auto y = path_to_syt(path);
                EXPECT_EQ(syt_to_path(y), path);
                EXPECT_EQ(path_to_syt(syt_to_path(y)).rows(), y.rows());
            }
        }
    }
}

TEST(WeylTableau, Validation) {
    EXPECT_EQ(invariant_message([] { StandardWeylTableau::from_rows({{2, 1}}, 2); }),
              "invariant: weakly increasing rows");
    EXPECT_EQ(invariant_message([] { StandardWeylTableau::from_rows({{1, 2}, {1}}, 2); }),
              "invariant: strictly increasing columns");
    EXPECT_EQ(invariant_message([] { StandardWeylTableau::from_rows({{1}, {2}, {3}}, 2); }),
              "invariant: at most d rows");
    EXPECT_EQ(invariant_message([] { StandardWeylTableau::from_rows({{1, 3}}, 2); }), "invariant: letters in 1..d");
    EXPECT_EQ(invariant_message([] { StandardWeylTableau::from_rows({{1}, {2, 2}}, 3); }),
              "invariant: rows form a Young frame");
}

TEST(WeylTableau, EnumerationAndContent) {
    auto two = enumerate_weyl(P({2}), 2);
    ASSERT_EQ(two.size(), 3u);
    std::set<std::vector<int>> contents;
    for (const auto& t : two) {
        contents.insert(content(t).counts);
    }
    EXPECT_EQ(contents, (std::set<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}}));
    EXPECT_EQ(enumerate_weyl(P({1, 1}), 2).size(), 1u);
    EXPECT_EQ(enumerate_weyl(P({3}), 2).size(), 4u);
    EXPECT_THROW(enumerate_weyl(P({1, 1, 1}), 2), InvariantViolation);

    auto t = StandardWeylTableau::from_rows({{1, 1, 2, 2}, {2, 3}, {4, 4}}, 4);
    EXPECT_EQ(content(t).counts, (std::vector<int>{2, 3, 1, 2}));
    EXPECT_EQ(content(StandardWeylTableau::empty(3)).counts, (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(content(StandardWeylTableau::from_rows({{1, 1, 2}, {2}}, 2)).counts, (std::vector<int>{2, 2}));
}

TEST(WeylTableauProperty, MatchesBruteForce) {
    for (int d = 1; d <= 3; ++d) {
        for (int n = 0; n <= 6; ++n) {
            for (const auto& p : partitions(n, d)) {
                auto got = enumerate_weyl(p, d);
                std::set<oracle::Rows> rows;
                for (const auto& t : got) {
                    rows.insert(t.rows());
                }
                EXPECT_EQ(rows.size(), got.size());
                EXPECT_EQ(rows, oracle::brute_force_weyl(p.parts(), d)) << p.to_string() << " d=" << d;
                EXPECT_EQ(static_cast<long>(got.size()), oracle::hook_content_count(p.parts(), d));
            }
        }
    }
}

TEST(GelfandTsetlin, Conversions) {
    auto lower = StandardWeylTableau::from_rows({{1, 1}, {2}}, 2);
    EXPECT_EQ(weyl_to_gt(lower), GelfandTsetlinPattern::parse("(2 1; 2)"));
    auto upper = StandardWeylTableau::from_rows({{1, 1, 1}, {2, 2, 2}}, 2);
    EXPECT_EQ(weyl_to_gt(upper).to_string(), "(3 3; 3)");
    EXPECT_EQ(gt_to_weyl(GelfandTsetlinPattern::parse("(3 1; 2)")).rows(),
              (std::vector<std::vector<int>>{{1, 1, 2}, {2}}));
    EXPECT_EQ(GelfandTsetlinPattern::parse("(2 1 0; 2 1; 1)").to_string(), "(2 1 0; 2 1; 1)");
    EXPECT_EQ(GelfandTsetlinPattern::parse("(2 1; 2)").render(), "2 1\n 2\n");
    EXPECT_EQ(GelfandTsetlinPattern::parse("(2 1; 2)").shape(), P({2, 1}));
}

TEST(GelfandTsetlin, Validation) {
    EXPECT_THROW(GelfandTsetlinPattern::parse("(2 1; 3)"), InvariantViolation);
    EXPECT_THROW(GelfandTsetlinPattern::parse("(1 2; 1)"), InvariantViolation);
    EXPECT_THROW(GelfandTsetlinPattern::parse("(2 1; )"), std::exception);
    EXPECT_EQ(invariant_message([] { GelfandTsetlinPattern::parse("(2 0; 3)"); }), "invariant: in-betweenness");
}

TEST(GelfandTsetlin, PartialHook) {
    auto p = GelfandTsetlinPattern::parse("(2 1; 2)");
    EXPECT_EQ(partial_hook(p, 1, 2), 3);
    EXPECT_EQ(partial_hook(p, 2, 2), 1);
    EXPECT_EQ(partial_hook(GelfandTsetlinPattern::parse("(5 0; 3)"), 1, 1), 3);
    EXPECT_THROW(partial_hook(p, 2, 1), std::out_of_range);
}

TEST(GelfandTsetlinProperty, BijectionWithWeyl) {
    for (int d = 1; d <= 3; ++d) {
        for (int n = 0; n <= 5; ++n) {
            for (const auto& p : partitions(n, d)) {
                auto patterns = enumerate_patterns(p, d);
                EXPECT_TRUE(std::is_sorted(patterns.begin(), patterns.end(), CanonicalOrder{}));
                for (const auto& gt : patterns) {
                    auto t = gt_to_weyl(gt);
                    EXPECT_EQ(weyl_to_gt(t), gt);
                    EXPECT_EQ(t.shape(), p);
                    auto rebuilt = StandardWeylTableau::from_rows(t.rows(), d);
                    EXPECT_EQ(rebuilt, t);
                    EXPECT_EQ(rebuilt.pattern(), gt);
                    EXPECT_EQ(gt.level(d), p.padded(d));
                }
            }
        }
    }
}

TEST(CanonicalOrder, WeylTableauxSortByPatternDescending) {
    auto tabs = enumerate_weyl(P({2}), 2);
    EXPECT_EQ(tabs[0].rows(), (std::vector<std::vector<int>>{{1, 1}}));
    EXPECT_EQ(tabs[1].rows(), (std::vector<std::vector<int>>{{1, 2}}));
    EXPECT_EQ(tabs[2].rows(), (std::vector<std::vector<int>>{{2, 2}}));
    EXPECT_EQ(format_rows(tabs[1].rows(), -1), "[[0,1]]");
}
