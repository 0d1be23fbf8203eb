#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace schur {

// Weakly decreasing tuple of nonnegative integers. Stored without trailing
// zeros; callers that need a fixed number of rows use padded().
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                        // n, the number of boxes
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int row) const;                 // 1-based; 0 past the last row
    std::vector<int> padded(int rows) const; // throws if length() > rows

    Partition with_box(int row) const;
    Partition without_box(int row) const;

    std::string to_string() const;           // "(4,2,2)", "()" for the empty partition

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

struct BoxCoord {
    int row = 1;  // 1-based, top row is 1
    int col = 1;  // 1-based, left column is 1
    friend bool operator==(const BoxCoord&, const BoxCoord&) = default;
    friend auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
};

// All partitions of n with at most max_parts nonzero parts, in descending
// lexicographic order.
std::vector<Partition> partitions(int n, int max_parts);

std::vector<BoxCoord> removable_boxes(const Partition& p);
// The row just below the last nonzero part is always addable unless it
// would exceed max_rows.
std::vector<BoxCoord> addable_boxes(const Partition& p, std::optional<int> max_rows = std::nullopt);

// A chain of partitions from the empty one, growing by one box per step.
// Stored as the row receiving each box; this is also the canonical
// representation of a standard Young tableau (box i+1 sits at the end of
// row rows()[i]).
class GrowthPath {
public:
    GrowthPath() = default;
    static GrowthPath from_rows(std::vector<int> rows);
    static GrowthPath from_shapes(const std::vector<Partition>& shapes);

    int size() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& rows() const { return rows_; }
    std::vector<Partition> shapes() const;  // lambda_0 = () ... lambda_n
    const Partition& shape() const { return shape_; }
    int last_row() const;

    GrowthPath extended(int row) const;
    GrowthPath truncated() const;

    std::string to_string() const;  // "() < (1) < (2) < (2,1)"

    friend bool operator==(const GrowthPath& a, const GrowthPath& b) { return a.rows_ == b.rows_; }
    // Lexicographic order on the row sequence, which is the lexicographic
    // order on shape sequences when shapes compare in descending order.
    friend auto operator<=>(const GrowthPath& a, const GrowthPath& b) { return a.rows_ <=> b.rows_; }

private:
    std::vector<int> rows_;
    Partition shape_;
};

class StandardYoungTableau {
public:
    static StandardYoungTableau from_rows(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const Partition& shape() const { return shape_; }
    int size() const { return shape_.size(); }

    friend bool operator==(const StandardYoungTableau&, const StandardYoungTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
};

GrowthPath syt_to_path(const StandardYoungTableau& y);
StandardYoungTableau path_to_syt(const GrowthPath& path);

std::vector<GrowthPath> enumerate_paths(const Partition& shape);
std::vector<StandardYoungTableau> enumerate_syt(const Partition& shape);

// d levels; level j (1-based) holds m_{1,j} >= ... >= m_{j,j} >= 0 and
// adjacent levels interlace: m_{i,j} >= m_{i,j-1} >= m_{i+1,j}.
class GelfandTsetlinPattern {
public:
    GelfandTsetlinPattern() = default;
    // levels[j-1] is level j; the last entry is the top row.
    explicit GelfandTsetlinPattern(std::vector<std::vector<int>> levels);
    // Rows listed top first, as the pattern is usually written.
    static GelfandTsetlinPattern from_top_rows(std::vector<std::vector<int>> top_first);
    // "(2 1; 2)": rows top first, separated by ';'.
    static GelfandTsetlinPattern parse(const std::string& text);
    // All-zero pattern with d levels.
    static GelfandTsetlinPattern zero(int d);

    int d() const { return static_cast<int>(levels_.size()); }
    int at(int i, int j) const;  // m_{i,j}, 1 <= i <= j <= d
    const std::vector<int>& level(int j) const { return levels_.at(j - 1); }
    const std::vector<std::vector<int>>& levels() const { return levels_; }
    Partition shape() const;

    std::string to_string() const;  // "(2 1; 2)"
    std::string render() const;     // d centered lines, top row first

    friend bool operator==(const GelfandTsetlinPattern&, const GelfandTsetlinPattern&) = default;
    friend auto operator<=>(const GelfandTsetlinPattern&, const GelfandTsetlinPattern&) = default;

private:
    std::vector<std::vector<int>> levels_;
};

// Partial hook p_{i,j} = m_{i,j} + j - i.
int partial_hook(const GelfandTsetlinPattern& p, int i, int j);

struct ContentVector {
    std::vector<int> counts;  // counts[i-1] = number of boxes holding letter i
    friend bool operator==(const ContentVector&, const ContentVector&) = default;
};

// Frame filled from {1..d}: rows weakly increase, columns strictly increase,
// at most d rows. Carries its Gelfand-Tsetlin pattern alongside the grid.
class StandardWeylTableau {
public:
    // Validates; throws InvariantViolation naming the broken invariant.
    static StandardWeylTableau from_rows(std::vector<std::vector<int>> rows, int d);
    static StandardWeylTableau empty(int d);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int d() const { return d_; }
    Partition shape() const { return pattern_.shape(); }
    int size() const { return shape().size(); }
    const GelfandTsetlinPattern& pattern() const { return pattern_; }

    friend bool operator==(const StandardWeylTableau& a, const StandardWeylTableau& b) {
        return a.d_ == b.d_ && a.rows_ == b.rows_;
    }

private:
    friend StandardWeylTableau gt_to_weyl(const GelfandTsetlinPattern& p);

    std::vector<std::vector<int>> rows_;
    int d_ = 1;
    GelfandTsetlinPattern pattern_;
};

ContentVector content(const StandardWeylTableau& t);
GelfandTsetlinPattern weyl_to_gt(const StandardWeylTableau& t);
StandardWeylTableau gt_to_weyl(const GelfandTsetlinPattern& p);

// Patterns with top row = shape padded to d, descending lexicographic order
// of the entries read top row first, left to right.
std::vector<GelfandTsetlinPattern> enumerate_patterns(const Partition& shape, int d);
std::vector<StandardWeylTableau> enumerate_weyl(const Partition& shape, int d);

// Canonical basis order used for every enumeration and for matrix indexing.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
    bool operator()(const GrowthPath& a, const GrowthPath& b) const { return a < b; }
    bool operator()(const GelfandTsetlinPattern& a, const GelfandTsetlinPattern& b) const;
    bool operator()(const StandardWeylTableau& a, const StandardWeylTableau& b) const {
        return (*this)(a.pattern(), b.pattern());
    }
};

// "[[1,1,2],[2]]" with every letter shifted by letter_offset.
std::string format_rows(const std::vector<std::vector<int>>& rows, int letter_offset = 0);

}  // namespace schur
