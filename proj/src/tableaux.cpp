#include "schur/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "schur/errors.hpp"

namespace schur {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
            throw InvariantViolation("weakly decreasing parts");
        }
    }
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int row) const {
    if (row < 1) {
        throw std::out_of_range("partition row index must be >= 1");
    }
    return row <= length() ? parts_[row - 1] : 0;
}

std::vector<int> Partition::padded(int rows) const {
    if (length() > rows) {
        throw InvariantViolation("at most " + std::to_string(rows) + " rows");
    }
    std::vector<int> out = parts_;
    out.resize(rows, 0);
    return out;
}

Partition Partition::with_box(int row) const {
    if (row < 1 || row > length() + 1 || (row > 1 && part(row - 1) == part(row))) {
        throw std::invalid_argument("no addable box in row " + std::to_string(row) + " of " + to_string());
    }
    std::vector<int> parts = parts_;
    parts.resize(std::max<size_t>(parts.size(), row), 0);
    ++parts[row - 1];
    return Partition(std::move(parts));
}

Partition Partition::without_box(int row) const {
    if (row < 1 || row > length() || part(row) == part(row + 1)) {
        throw std::invalid_argument("no removable box in row " + std::to_string(row) + " of " + to_string());
    }
    std::vector<int> parts = parts_;
    --parts[row - 1];
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        out += (i ? "," : "") + std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<Partition> partitions(int n, int max_parts) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> fill = [&](int remaining, int largest) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_parts) {
            return;
        }
        for (int part = std::min(remaining, largest); part >= 1; --part) {
            current.push_back(part);
            fill(remaining - part, part);
            current.pop_back();
        }
    };
    if (n >= 0 && max_parts >= 0) {
        fill(n, n);
    }
    return out;
}

std::vector<BoxCoord> removable_boxes(const Partition& p) {
    std::vector<BoxCoord> out;
    for (int row = 1; row <= p.length(); ++row) {
        if (p.part(row) > p.part(row + 1)) {
            out.push_back({row, p.part(row)});
        }
    }
    return out;
}

std::vector<BoxCoord> addable_boxes(const Partition& p, std::optional<int> max_rows) {
    std::vector<BoxCoord> out;
    for (int row = 1; row <= p.length() + 1; ++row) {
        if (max_rows && row > *max_rows) {
            break;
        }
        if (row == 1 || p.part(row - 1) > p.part(row)) {
            out.push_back({row, p.part(row) + 1});
        }
    }
    return out;
}

// --------------------------------------------------------------- GrowthPath

GrowthPath GrowthPath::from_rows(std::vector<int> rows) {
    GrowthPath path;
    for (int row : rows) {
        if (row < 1 || row > path.shape_.length() + 1 ||
            (row > 1 && path.shape_.part(row - 1) == path.shape_.part(row))) {
            throw InvariantViolation("growth path adds one box per step");
        }
        path.shape_ = path.shape_.with_box(row);
    }
    path.rows_ = std::move(rows);
    return path;
}

GrowthPath GrowthPath::from_shapes(const std::vector<Partition>& shapes) {
    if (shapes.empty() || !shapes.front().empty()) {
        throw InvariantViolation("growth path starts at the empty partition");
    }
    std::vector<int> rows;
    for (size_t i = 1; i < shapes.size(); ++i) {
        const Partition& prev = shapes[i - 1];
        const Partition& next = shapes[i];
        if (next.size() != prev.size() + 1 || next.length() > prev.length() + 1) {
            throw InvariantViolation("growth path adds one box per step");
        }
        int changed = 0;
        for (int row = 1; row <= next.length(); ++row) {
            int diff = next.part(row) - prev.part(row);
            if (diff == 1 && changed == 0) {
                changed = row;
            } else if (diff != 0) {
                throw InvariantViolation("growth path adds one box per step");
            }
        }
        rows.push_back(changed);
    }
    return from_rows(std::move(rows));
}

std::vector<Partition> GrowthPath::shapes() const {
    std::vector<Partition> out{Partition()};
    for (int row : rows_) {
        out.push_back(out.back().with_box(row));
    }
    return out;
}

int GrowthPath::last_row() const {
    if (rows_.empty()) {
        throw std::out_of_range("empty growth path has no last step");
    }
    return rows_.back();
}

GrowthPath GrowthPath::extended(int row) const {
    GrowthPath out = *this;
    out.shape_ = shape_.with_box(row);
    out.rows_.push_back(row);
    return out;
}

GrowthPath GrowthPath::truncated() const {
    GrowthPath out = *this;
    out.shape_ = shape_.without_box(last_row());
    out.rows_.pop_back();
    return out;
}

std::string GrowthPath::to_string() const {
    std::string out;
    for (const auto& s : shapes()) {
        out += (out.empty() ? "" : " < ") + s.to_string();
    }
    return out;
}

// ----------------------------------------------------- StandardYoungTableau

namespace {

Partition shape_of_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> lengths;
    for (const auto& r : rows) {
        if (r.empty() || (!lengths.empty() && static_cast<int>(r.size()) > lengths.back())) {
            throw InvariantViolation("rows form a Young frame");
        }
        lengths.push_back(static_cast<int>(r.size()));
    }
    return Partition(std::move(lengths));
}

}  // namespace

StandardYoungTableau StandardYoungTableau::from_rows(std::vector<std::vector<int>> rows) {
    StandardYoungTableau y;
    y.shape_ = shape_of_rows(rows);
    const int n = y.shape_.size();
    std::vector<bool> seen(n + 1, false);
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < rows[r].size(); ++c) {
            int e = rows[r][c];
            if (e < 1 || e > n || seen[e]) {
                throw InvariantViolation("entries are 1..n, each once");
            }
            seen[e] = true;
            if (c > 0 && rows[r][c - 1] >= e) {
                throw InvariantViolation("strictly increasing rows");
            }
            if (r > 0 && rows[r - 1][c] >= e) {
                throw InvariantViolation("strictly increasing columns");
            }
        }
    }
    y.rows_ = std::move(rows);
    return y;
}

GrowthPath syt_to_path(const StandardYoungTableau& y) {
    std::vector<int> row_of(y.size() + 1, 0);
    for (size_t r = 0; r < y.rows().size(); ++r) {
        for (int e : y.rows()[r]) {
            row_of[e] = static_cast<int>(r) + 1;
        }
    }
    return GrowthPath::from_rows(std::vector<int>(row_of.begin() + 1, row_of.end()));
}

StandardYoungTableau path_to_syt(const GrowthPath& path) {
    std::vector<std::vector<int>> rows(path.shape().length());
    int entry = 1;
    for (int row : path.rows()) {
        rows[row - 1].push_back(entry++);
    }
    return StandardYoungTableau::from_rows(std::move(rows));
}

std::vector<GrowthPath> enumerate_paths(const Partition& shape) {
    std::vector<GrowthPath> out;
    std::vector<int> rows;
    std::vector<int> filled(shape.length() + 1, 0);
    const int n = shape.size();
    std::function<void()> grow = [&] {
        if (static_cast<int>(rows.size()) == n) {
            out.push_back(GrowthPath::from_rows(rows));
            return;
        }
        for (int row = 1; row <= shape.length(); ++row) {
            bool fits = filled[row - 1] < shape.part(row);
            bool supported = row == 1 || filled[row - 2] > filled[row - 1];
            if (fits && supported) {
                ++filled[row - 1];
                rows.push_back(row);
                grow();
                rows.pop_back();
                --filled[row - 1];
            }
        }
    };
    grow();
    return out;
}

std::vector<StandardYoungTableau> enumerate_syt(const Partition& shape) {
    std::vector<StandardYoungTableau> out;
    for (const auto& path : enumerate_paths(shape)) {
        out.push_back(path_to_syt(path));
    }
    return out;
}

// ---------------------------------------------------- GelfandTsetlinPattern

GelfandTsetlinPattern::GelfandTsetlinPattern(std::vector<std::vector<int>> levels)
    : levels_(std::move(levels)) {
    for (size_t j = 1; j <= levels_.size(); ++j) {
        const auto& level = levels_[j - 1];
        if (level.size() != j) {
            throw InvariantViolation("level j holds j entries");
        }
        for (size_t i = 0; i < j; ++i) {
            if (level[i] < 0) {
                throw InvariantViolation("nonnegative entries");
            }
            if (i > 0 && level[i] > level[i - 1]) {
                throw InvariantViolation("weakly decreasing levels");
            }
        }
        if (j >= 2) {
            const auto& below = levels_[j - 2];
            for (size_t i = 0; i + 1 < j; ++i) {
                if (!(level[i] >= below[i] && below[i] >= level[i + 1])) {
                    throw InvariantViolation("in-betweenness");
                }
            }
        }
    }
}

GelfandTsetlinPattern GelfandTsetlinPattern::from_top_rows(std::vector<std::vector<int>> top_first) {
    std::reverse(top_first.begin(), top_first.end());
    return GelfandTsetlinPattern(std::move(top_first));
}

GelfandTsetlinPattern GelfandTsetlinPattern::parse(const std::string& text) {
    std::string body = text;
    auto first = body.find_first_not_of(" \t");
    auto last = body.find_last_not_of(" \t");
    if (first == std::string::npos || body[first] != '(' || body[last] != ')') {
        throw std::invalid_argument("malformed pattern: '" + text + "'");
    }
    body = body.substr(first + 1, last - first - 1);
    std::vector<std::vector<int>> rows;
    std::stringstream levels(body);
    std::string row;
    while (std::getline(levels, row, ';')) {
        std::replace(row.begin(), row.end(), ',', ' ');
        std::stringstream entries(row);
        std::vector<int> values;
        int v;
        while (entries >> v) {
            values.push_back(v);
        }
        if (!entries.eof()) {
            throw std::invalid_argument("malformed pattern: '" + text + "'");
        }
        rows.push_back(std::move(values));
    }
    return from_top_rows(std::move(rows));
}

GelfandTsetlinPattern GelfandTsetlinPattern::zero(int d) {
    std::vector<std::vector<int>> levels;
    for (int j = 1; j <= d; ++j) {
        levels.emplace_back(j, 0);
    }
    return GelfandTsetlinPattern(std::move(levels));
}

int GelfandTsetlinPattern::at(int i, int j) const {
    if (j < 1 || j > d() || i < 1 || i > j) {
        throw std::out_of_range("pattern index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    return levels_[j - 1][i - 1];
}

Partition GelfandTsetlinPattern::shape() const {
    return levels_.empty() ? Partition() : Partition(levels_.back());
}

std::string GelfandTsetlinPattern::to_string() const {
    std::string out = "(";
    for (int j = d(); j >= 1; --j) {
        for (size_t i = 0; i < levels_[j - 1].size(); ++i) {
            out += (i ? " " : "") + std::to_string(levels_[j - 1][i]);
        }
        if (j > 1) {
            out += "; ";
        }
    }
    return out + ")";
}

std::string GelfandTsetlinPattern::render() const {
    size_t width = 1;
    for (const auto& level : levels_) {
        for (int v : level) {
            width = std::max(width, std::to_string(v).size());
        }
    }
    // Level j occupies slots (d-j), (d-j)+2, ... of a 2d-1 slot line.
    std::string out;
    for (int j = d(); j >= 1; --j) {
        std::string line((2 * d() - 1) * width, ' ');
        for (int i = 1; i <= j; ++i) {
            std::string v = std::to_string(at(i, j));
            size_t slot = static_cast<size_t>(d() - j + 2 * (i - 1));
            line.replace(slot * width + (width - v.size()), v.size(), v);
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + "\n";
    }
    return out;
}

int partial_hook(const GelfandTsetlinPattern& p, int i, int j) {
    return p.at(i, j) + j - i;
}

bool CanonicalOrder::operator()(const GelfandTsetlinPattern& a, const GelfandTsetlinPattern& b) const {
    if (a.d() != b.d()) {
        return a.d() < b.d();
    }
    for (int j = a.d(); j >= 1; --j) {
        const auto& la = a.level(j);
        const auto& lb = b.level(j);
        if (la != lb) {
            return la > lb;
        }
    }
    return false;
}

// ----------------------------------------------------- StandardWeylTableau

StandardWeylTableau StandardWeylTableau::from_rows(std::vector<std::vector<int>> rows, int d) {
    if (d < 1) {
        throw InvariantViolation("alphabet size d >= 1");
    }
    Partition shape = shape_of_rows(rows);
    if (shape.length() > d) {
        throw InvariantViolation("at most d rows");
    }
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < rows[r].size(); ++c) {
            int e = rows[r][c];
            if (e < 1 || e > d) {
                throw InvariantViolation("letters in 1..d");
            }
            if (c > 0 && rows[r][c - 1] > e) {
                throw InvariantViolation("weakly increasing rows");
            }
            if (r > 0 && rows[r - 1][c] >= e) {
                throw InvariantViolation("strictly increasing columns");
            }
        }
    }
    StandardWeylTableau t;
    t.rows_ = std::move(rows);
    t.d_ = d;
    std::vector<std::vector<int>> levels;
    for (int j = 1; j <= d; ++j) {
        std::vector<int> level(j, 0);
        for (int i = 1; i <= j && i <= static_cast<int>(t.rows_.size()); ++i) {
            const auto& row = t.rows_[i - 1];
            level[i - 1] = static_cast<int>(std::count_if(row.begin(), row.end(), [j](int e) { return e <= j; }));
        }
        levels.push_back(std::move(level));
    }
    t.pattern_ = GelfandTsetlinPattern(std::move(levels));
    return t;
}

StandardWeylTableau StandardWeylTableau::empty(int d) { return from_rows({}, d); }

ContentVector content(const StandardWeylTableau& t) {
    ContentVector out{std::vector<int>(t.d(), 0)};
    for (const auto& row : t.rows()) {
        for (int e : row) {
            ++out.counts[e - 1];
        }
    }
    return out;
}

GelfandTsetlinPattern weyl_to_gt(const StandardWeylTableau& t) { return t.pattern(); }

StandardWeylTableau gt_to_weyl(const GelfandTsetlinPattern& p) {
    const int d = p.d();
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= d; ++i) {
        std::vector<int> row;
        for (int j = i; j <= d; ++j) {
            int below = j > i ? p.at(i, j - 1) : 0;
            row.insert(row.end(), p.at(i, j) - below, j);
        }
        if (row.empty()) {
            break;
        }
        rows.push_back(std::move(row));
    }
    StandardWeylTableau t;
    t.rows_ = std::move(rows);
    t.d_ = d;
    t.pattern_ = p;
    return t;
}

std::vector<GelfandTsetlinPattern> enumerate_patterns(const Partition& shape, int d) {
    if (d < 1) {
        throw InvariantViolation("alphabet size d >= 1");
    }
    std::vector<std::vector<int>> levels(d);
    levels[d - 1] = shape.padded(d);
    std::vector<GelfandTsetlinPattern> out;
    // Fill level j-1 entry by entry, each from its largest admissible value
    // down, which yields descending lexicographic order.
    std::function<void(int, int)> fill = [&](int j, int i) {
        if (j == 1) {
            out.emplace_back(levels);
            return;
        }
        if (i == j) {
            fill(j - 1, 1);
            return;
        }
        const auto& above = levels[j - 1];
        auto& below = levels[j - 2];
        for (int v = above[i - 1]; v >= above[i]; --v) {
            below[i - 1] = v;
            fill(j, i + 1);
        }
    };
    for (int j = 1; j < d; ++j) {
        levels[j - 1].assign(j, 0);
    }
    fill(d, 1);
    return out;
}

std::vector<StandardWeylTableau> enumerate_weyl(const Partition& shape, int d) {
    std::vector<StandardWeylTableau> out;
    for (const auto& p : enumerate_patterns(shape, d)) {
        out.push_back(gt_to_weyl(p));
    }
    return out;
}

std::string format_rows(const std::vector<std::vector<int>>& rows, int letter_offset) {
    std::string out = "[";
    for (size_t r = 0; r < rows.size(); ++r) {
        out += r ? ",[" : "[";
        for (size_t c = 0; c < rows[r].size(); ++c) {
            out += (c ? "," : "") + std::to_string(rows[r][c] + letter_offset);
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace schur
