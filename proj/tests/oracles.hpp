#pragma once

// Independent reference computations used only by the tests. None of these
// call into the enumeration or branching code they are checked against.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<int>>;

inline long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

inline int arm_leg_hook(const std::vector<int>& shape, int r, int c) {
    int arm = shape[r] - c - 1;
    int leg = 0;
    for (std::size_t below = r + 1; below < shape.size() && shape[below] > c; ++below) {
        ++leg;
    }
    return arm + leg + 1;
}

// n! / prod(hooks)
inline long hook_length_count(const std::vector<int>& shape) {
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    long hooks = 1;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        for (int c = 0; c < shape[r]; ++c) {
            hooks *= arm_leg_hook(shape, static_cast<int>(r), c);
        }
    }
    return factorial(n) / hooks;
}

// prod over boxes of (d + col - row) / hook
inline long hook_content_count(const std::vector<int>& shape, int d) {
    long num = 1;
    long den = 1;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        for (int c = 0; c < shape[r]; ++c) {
            num *= d + c - static_cast<int>(r);
            den *= arm_leg_hook(shape, static_cast<int>(r), c);
        }
    }
    return num / den;
}

inline Rows fill(const std::vector<int>& shape, const std::vector<int>& values) {
    Rows rows;
    std::size_t next = 0;
    for (int len : shape) {
        rows.emplace_back(values.begin() + next, values.begin() + next + len);
        next += len;
    }
    return rows;
}

inline bool rows_ok(const Rows& rows, bool strict_rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0 && (strict_rows ? rows[r][c - 1] >= rows[r][c] : rows[r][c - 1] > rows[r][c])) {
                return false;
            }
            if (r > 0 && rows[r - 1][c] >= rows[r][c]) {
                return false;
            }
        }
    }
    return true;
}

// Every filling of the frame with 1..n used once, kept if standard.
inline std::set<Rows> brute_force_syt(const std::vector<int>& shape) {
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    std::set<Rows> out;
    do {
        Rows rows = fill(shape, values);
        if (rows_ok(rows, true)) {
            out.insert(rows);
        }
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

// Every filling of the frame from {1..d}, kept if semistandard.
inline std::set<Rows> brute_force_weyl(const std::vector<int>& shape, int d) {
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    std::vector<int> values(n, 1);
    std::set<Rows> out;
    while (true) {
        Rows rows = fill(shape, values);
        if (rows_ok(rows, false)) {
            out.insert(rows);
        }
        int i = n - 1;
        while (i >= 0 && values[i] == d) {
            values[i--] = 1;
        }
        if (i < 0) {
            break;
        }
        ++values[i];
    }
    return out;
}

// All partitions of n by plain recursion on the largest part.
inline void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> all_partitions(int n, int max_parts) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    partitions_rec(n, n, cur, all);
    std::vector<std::vector<int>> out;
    for (auto& p : all) {
        if (static_cast<int>(p.size()) <= max_parts) {
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace oracle
