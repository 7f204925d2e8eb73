#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cylhook/diagram.hpp"
#include "cylhook/errors.hpp"
#include "cylhook/excited.hpp"
#include "cylhook/rational.hpp"

namespace cylhook {

/// A monotone lattice path: consecutive cells differ by (1,0) (a step down,
/// written D) or (0,-1) (a step left, written L).
struct LatticePath {
    std::vector<Cell> cells;

    std::string steps() const {
        std::string s;
        for (std::size_t i = 1; i < cells.size(); ++i)
            s += (cells[i].row == cells[i - 1].row + 1) ? 'D' : 'L';
        return s;
    }

    friend bool operator==(const LatticePath& a, const LatticePath& b) { return a.cells == b.cells; }
};

/// All paths from u to v, ordered lexicographically by step string (D < L).
/// Travel requires u.row <= v.row and u.col >= v.col; otherwise the set is
/// empty. Equal rows or equal columns give the single straight path.
inline std::vector<LatticePath> enumerate_paths(const Cell& u, const Cell& v) {
    std::vector<LatticePath> out;
    if (u.row > v.row || u.col < v.col) return out;
    std::vector<Cell> cur{u};
    auto rec = [&](auto&& self, const Cell& c) -> void {
        if (c == v) {
            out.push_back(LatticePath{cur});
            return;
        }
        if (c.row < v.row) {
            cur.push_back({c.row + 1, c.col});
            self(self, cur.back());
            cur.pop_back();
        }
        if (c.col > v.col) {
            cur.push_back({c.row, c.col - 1});
            self(self, cur.back());
            cur.pop_back();
        }
    };
    rec(rec, u);
    return out;
}

/// |L(u, v)| = C(row_diff + col_diff, row_diff).
inline long long count_paths(const Cell& u, const Cell& v) {
    if (u.row > v.row || u.col < v.col) return 0;
    return Rational::binomial((v.row - u.row) + (u.col - v.col), v.row - u.row).to_long();
}

// ---------------------------------------------------------------------------
// Single-row (bar) case: index tuples in bijection with excited diagrams.
// ---------------------------------------------------------------------------

/// For the single-row cylindric shape with n cells and period (1,-ell),
/// write n = q(ell+1) + r with 0 <= r <= ell. The excited diagrams are
/// indexed by tuples (i_1, ..., i_q) with i_1 >= r+1 and gaps i_{k+1} - i_k
/// >= ell+1: the complement consists of the cells c_1..c_r together with
/// the q runs [c_{i_k}, c_{i_k + ell}], where c_i = (1, n-i+1) is the i-th
/// cell from the right end of the row.
struct BarTuple {
    long n = 0;
    long ell = 1;
    long q = 0;
    long r = 0;
    std::vector<long> indices;
};

inline void bar_split(long n, long ell, long& q, long& r) {
    q = n / (ell + 1);
    r = n - q * (ell + 1);
}

inline BarTuple make_bar_tuple(long n, long ell, std::vector<long> indices) {
    if (n < 0 || ell < 1) throw InvalidTuple("make_bar_tuple: need n >= 0 and ell >= 1");
    BarTuple t;
    t.n = n;
    t.ell = ell;
    bar_split(n, ell, t.q, t.r);
    if (static_cast<long>(indices.size()) != t.q)
        throw InvalidTuple("make_bar_tuple: wrong tuple length");
    for (std::size_t k = 0; k < indices.size(); ++k) {
        long lo = k == 0 ? t.r + 1 : indices[k - 1] + ell + 1;
        if (indices[k] < lo) throw InvalidTuple("make_bar_tuple: constraint violated");
    }
    t.indices = std::move(indices);
    return t;
}

inline Cell bar_cell(long n, long i) { return {1, n - i + 1}; }

/// Sum of indices of the minimal tuple (the one mapping to mu itself).
inline long bar_tuple_min_sum(long n, long ell) {
    long q, r;
    bar_split(n, ell, q, r);
    return q * (q - 1) / 2 * (ell + 1) + q * (r + 1);
}

/// The excited diagram associated with a tuple, as a complement state on
/// the normalized bar shape lambda=(n), mu=(0). Depth equals the number of
/// unit increments from the minimal tuple.
inline CylExcitedDiagram bar_tuple_to_excited(const BarTuple& t) {
    std::vector<CylCell> comp;
    long sum = 0;
    for (long i = 1; i <= t.r; ++i) {
        Cell c = bar_cell(t.n, i);
        comp.push_back({c.row, c.col});
    }
    for (long k = 0; k < t.q; ++k) {
        sum += t.indices[static_cast<std::size_t>(k)];
        for (long i = t.indices[static_cast<std::size_t>(k)]; i <= t.indices[static_cast<std::size_t>(k)] + t.ell; ++i) {
            Cell c = bar_cell(t.n, i);
            comp.push_back({c.row, c.col});
        }
    }
    std::sort(comp.begin(), comp.end());
    return CylExcitedDiagram{std::move(comp), sum - bar_tuple_min_sum(t.n, t.ell)};
}

/// All tuples with i_q <= bound (ascending lexicographic order). With q = 0
/// the single empty tuple is returned regardless of the bound.
inline std::vector<BarTuple> enumerate_bar_tuples(long ell, long n, long bound) {
    long q, r;
    bar_split(n, ell, q, r);
    std::vector<BarTuple> out;
    std::vector<long> idx(static_cast<std::size_t>(q), 0);
    auto rec = [&](auto&& self, long k, long lo) -> void {
        if (k == q) {
            BarTuple t;
            t.n = n;
            t.ell = ell;
            t.q = q;
            t.r = r;
            t.indices = idx;
            out.push_back(std::move(t));
            return;
        }
        // remaining elements k+1..q-1 each need ell+1 more room below bound
        long hi = bound - (q - 1 - k) * (ell + 1);
        for (long i = lo; i <= hi; ++i) {
            idx[static_cast<std::size_t>(k)] = i;
            self(self, k + 1, i + ell + 1);
        }
    };
    rec(rec, 0, r + 1);
    return out;
}

// ---------------------------------------------------------------------------
// Hook case: paths <-> excited diagrams of (ell^{m-1}, k) in ((ell+1)^m).
// ---------------------------------------------------------------------------

/// For the rectangle lambda = ((ell+1)^m), removing a path from (1, ell+1)
/// to (m, k+1) leaves an excited diagram of (ell^{m-1}, k), and every
/// excited diagram arises this way.
inline ExcitedDiagram path_to_excited(const LatticePath& p, long ell, int m, long k) {
    if (k < 0 || k > ell) throw BadEndpoints("path_to_excited: need 0 <= k <= ell");
    if (p.cells.empty() || !(p.cells.front() == Cell{1, ell + 1}) ||
        !(p.cells.back() == Cell{m, k + 1}))
        throw BadEndpoints("path_to_excited: endpoints must be (1, ell+1) and (m, k+1)");
    std::vector<Cell> sorted = p.cells;
    std::sort(sorted.begin(), sorted.end());
    ExcitedDiagram d;
    for (int a = 1; a <= m; ++a)
        for (long b = 1; b <= ell + 1; ++b) {
            Cell c{a, b};
            if (!std::binary_search(sorted.begin(), sorted.end(), c)) d.cells.push_back(c);
        }
    return d;
}

/// A closed chain of ell+m cells on the cylinder: u1 -> u2 -> ... -> un -> u1
/// where u -> v means some lifts differ by (1,0) or (0,-1).
struct Loop {
    std::vector<CylCell> cells; // in chain order
};

inline bool cyl_step(const CylCell& u, const CylCell& v, const Omega& w) {
    return v == canonicalize({u.row + 1, u.col}, w) || v == canonicalize({u.row, u.col - 1}, w);
}

inline bool is_loop(const std::vector<CylCell>& chain, const Omega& w) {
    if (static_cast<long>(chain.size()) != w.m + w.ell) return false;
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (!cyl_step(chain[i], chain[(i + 1) % chain.size()], w)) return false;
    return true;
}

/// Paths realizing the non-intersecting loops of the cylindric diagram,
/// grouped by shift: stratum i holds the paths from (1, lambda_1 - i) to
/// (m, lambda_1 - ell - i) that stay inside the fundamental strip. Their
/// projections are exactly the complements of the cylindric excited
/// diagrams of the hook-shaped skew diagram.
inline std::vector<std::vector<LatticePath>> loop_paths(const GeneralizedPartition& lambda, long max_shift) {
    std::vector<std::vector<LatticePath>> out;
    long top = lambda.part(1);
    for (long i = 0; i <= max_shift; ++i) {
        std::vector<LatticePath> stratum;
        for (LatticePath& p : enumerate_paths({1, top - i}, {lambda.m(), top - lambda.ell() - i})) {
            bool inside = true;
            for (const Cell& c : p.cells)
                if (!lambda.contains_periodic(c)) { inside = false; break; }
            if (inside) stratum.push_back(std::move(p));
        }
        out.push_back(std::move(stratum));
    }
    return out;
}

/// Chain-ordered projection of a strip path (the closing step wraps by one
/// period).
inline Loop project_to_loop(const LatticePath& p, const Omega& w) {
    Loop loop;
    loop.cells.reserve(p.cells.size());
    for (const Cell& c : p.cells) loop.cells.push_back(canonicalize(c, w));
    return loop;
}

} // namespace cylhook
