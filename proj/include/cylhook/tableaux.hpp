#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cylhook/diagram.hpp"
#include "cylhook/errors.hpp"

namespace cylhook {

/// A linear extension (reverse standard tableau) of a finite skew diagram:
/// a bijection from the n cells onto [1, n] whose entries strictly decrease
/// along rows (left to right) and down columns.
struct Tableau {
    SkewShape shape;
    std::vector<int> entries; // aligned with shape.cells (row-major)

    int entry_at(const Cell& c) const {
        long i = shape.index_of(c);
        if (i < 0) throw CellNotInDiagram("Tableau: cell not in shape");
        return entries[static_cast<std::size_t>(i)];
    }
};

/// The wraparound condition making a linear extension valid on the cylinder:
/// entry(1, b) < entry(m, b - ell) whenever both cells are present.
inline bool is_restricted_extension(const Tableau& t) {
    const SkewShape& s = t.shape;
    long ell = s.ell();
    int m = s.m();
    for (const Cell& c : s.cells) {
        if (c.row != 1) continue;
        Cell partner{m, c.col - ell};
        if (!s.contains(partner)) continue;
        if (!(t.entry_at(c) < t.entry_at(partner))) return false;
    }
    return true;
}

namespace detail {

// Backtracking over entry assignments in row-major cell order, trying
// candidate values in increasing order; emits tableaux in lexicographic
// order of the row-major entry vector.
//
// Every constraint relates the current cell to an earlier row-major cell:
// left and up neighbors must hold larger entries, and the wraparound pair
// (1, b) / (m, b-ell) is checked when its later member is placed.
template <typename Sink>
void for_each_extension(const SkewShape& shape, bool restricted, Sink&& sink) {
    const std::size_t n = shape.cells.size();
    std::vector<int> entries(n, 0);
    std::vector<bool> used(n + 1, false);

    // Earlier row-major indices constraining position i: entries at
    // `must_exceed` indices have to be larger than ours, the entry at
    // `must_be_below` smaller.
    std::vector<std::vector<long>> must_exceed(n);
    std::vector<long> must_be_below(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const Cell& c = shape.cells[i];
        long left = shape.index_of({c.row, c.col - 1});
        long up = shape.index_of({c.row - 1, c.col});
        if (left >= 0) must_exceed[i].push_back(left);
        if (up >= 0) must_exceed[i].push_back(up);
        if (restricted) {
            if (shape.m() == 1) {
                long p = shape.index_of({1, c.col - shape.ell()});
                if (p >= 0) must_exceed[i].push_back(p);
            } else if (c.row == shape.m()) {
                must_be_below[i] = shape.index_of({1, c.col + shape.ell()});
            }
        }
    }

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            sink(entries);
            return;
        }
        for (int v = 1; v <= static_cast<int>(n); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (long j : must_exceed[i])
                if (entries[static_cast<std::size_t>(j)] <= v) { ok = false; break; }
            if (!ok) continue;
            if (must_be_below[i] >= 0 && entries[static_cast<std::size_t>(must_be_below[i])] >= v) continue;
            used[static_cast<std::size_t>(v)] = true;
            entries[i] = v;
            self(self, i + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
        entries[i] = 0;
    };
    rec(rec, 0);
}

// Counting DP over row-fill vectors. Works in the increasing orientation
// (entries 1..n inserted in order, each row filling left to right); the
// count equals the decreasing-orientation count via entry -> n+1-entry.
// The wraparound constraint becomes: cell (m, b-ell) is filled before
// (1, b), which is still a function of the fill vector.
class FillCountDp {
  public:
    FillCountDp(const SkewShape& shape, bool restricted)
        : shape_(shape), restricted_(restricted), m_(shape.m()), ell_(shape.ell()) {
        cap_.resize(static_cast<std::size_t>(m_));
        for (int a = 1; a <= m_; ++a)
            cap_[static_cast<std::size_t>(a - 1)] =
                static_cast<int>(shape.outer.part(a) - shape.inner.part(a));
    }

    long long count() {
        std::vector<int> t(static_cast<std::size_t>(m_), 0);
        return rec(t);
    }

  private:
    long long rec(std::vector<int>& t) {
        std::string key(t.size(), '\0');
        for (std::size_t i = 0; i < t.size(); ++i) key[i] = static_cast<char>(t[i]);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        bool full = true;
        long long total = 0;
        for (int a = 1; a <= m_; ++a) {
            std::size_t ai = static_cast<std::size_t>(a - 1);
            if (t[ai] >= cap_[ai]) continue;
            full = false;
            long col = shape_.inner.part(a) + t[ai] + 1;
            if (a >= 2 && shape_.contains({a - 1, col})) {
                if (shape_.inner.part(a - 1) + t[ai - 1] < col) continue; // cell above not yet filled
            }
            if (restricted_ && a == 1 && m_ >= 2 && shape_.contains({m_, col - ell_})) {
                std::size_t mi = static_cast<std::size_t>(m_ - 1);
                if (shape_.inner.part(m_) + t[mi] < col - ell_) continue;
            }
            ++t[ai];
            total += rec(t);
            --t[ai];
        }
        if (full) total = 1;
        memo_.emplace(std::move(key), total);
        return total;
    }

    const SkewShape& shape_;
    bool restricted_;
    int m_;
    long ell_;
    std::vector<int> cap_;
    std::unordered_map<std::string, long long> memo_;
};

inline long long count_by_backtracking(const SkewShape& shape, bool restricted) {
    long long n = 0;
    for_each_extension(shape, restricted, [&](const std::vector<int>&) { ++n; });
    return n;
}

inline long long count_by_dp(const SkewShape& shape, bool restricted) {
    return FillCountDp(shape, restricted).count();
}

} // namespace detail

/// All linear extensions of the shape, in lexicographic order of the
/// row-major entry vector. The empty shape yields one empty tableau.
inline std::vector<Tableau> enumerate_linear_extensions(const SkewShape& shape) {
    std::vector<Tableau> out;
    detail::for_each_extension(shape, false,
                               [&](const std::vector<int>& e) { out.push_back(Tableau{shape, e}); });
    return out;
}

/// The ell-restricted subset, same order.
inline std::vector<Tableau> enumerate_restricted_extensions(const SkewShape& shape) {
    std::vector<Tableau> out;
    detail::for_each_extension(shape, true,
                               [&](const std::vector<int>& e) { out.push_back(Tableau{shape, e}); });
    return out;
}

/// f^{lambda/mu}. Memoized fill-vector recursion; plain backtracking below
/// ten cells.
inline long long count_linear_extensions(const SkewShape& shape) {
    if (shape.size() < 10) return detail::count_by_backtracking(shape, false);
    return detail::count_by_dp(shape, false);
}

/// Number of linear extensions of the cylindric skew diagram, counted as
/// ell-restricted extensions of the fundamental-strip shape.
inline long long count_restricted(const GeneralizedPartition& lambda, const GeneralizedPartition& mu) {
    SkewShape shape = skew_cells(lambda, mu);
    if (shape.size() < 10) return detail::count_by_backtracking(shape, true);
    return detail::count_by_dp(shape, true);
}

/// Grid rendering with '.' in non-cells.
inline std::string render_tableau(const Tableau& t) {
    const SkewShape& s = t.shape;
    if (s.cells.empty()) return "(empty)\n";
    std::int64_t clo = s.cells.front().col, chi = s.cells.front().col;
    for (const Cell& c : s.cells) {
        clo = std::min(clo, c.col);
        chi = std::max(chi, c.col);
    }
    int width = 1;
    for (long long v = static_cast<long long>(s.cells.size()); v >= 10; v /= 10) ++width;
    std::string out;
    for (int a = 1; a <= s.m(); ++a) {
        for (std::int64_t b = clo; b <= chi; ++b) {
            std::string tok = s.contains({a, b}) ? std::to_string(t.entry_at({a, b})) : ".";
            out += std::string(static_cast<std::size_t>(width + 1 - static_cast<int>(tok.size())), ' ') + tok;
        }
        out += '\n';
    }
    return out;
}

} // namespace cylhook
