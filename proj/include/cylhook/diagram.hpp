#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cylhook/errors.hpp"

namespace cylhook {

/// A lattice cell (row, col) in Z^2. Rows grow downward, columns grow to
/// the right; the componentwise order is (a,b) <= (a',b') iff a <= a' and
/// b <= b'.
struct Cell {
    std::int64_t row = 0;
    std::int64_t col = 0;

    friend bool operator==(const Cell& a, const Cell& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
    friend Cell operator+(const Cell& a, const Cell& b) { return {a.row + b.row, a.col + b.col}; }
    friend Cell operator-(const Cell& a, const Cell& b) { return {a.row - b.row, a.col - b.col}; }
};

/// Componentwise partial order on Z^2.
inline bool cell_leq(const Cell& a, const Cell& b) { return a.row <= b.row && a.col <= b.col; }

/// The period vector omega = (m, -ell) of a cylinder, with m, ell >= 1.
struct Omega {
    int m;
    long ell;

    Omega(int m_, long ell_) : m(m_), ell(ell_) {
        if (m < 1 || ell < 1) throw Error("Omega: require m >= 1 and ell >= 1");
    }
    Cell period() const { return {m, -ell}; }

    friend bool operator==(const Omega& a, const Omega& b) { return a.m == b.m && a.ell == b.ell; }
    friend bool operator!=(const Omega& a, const Omega& b) { return !(a == b); }
};

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    // b > 0
    std::int64_t q = a / b;
    if ((a % b) != 0 && a < 0) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Canonical representative of a point of the cylinder Z^2 / Z(m,-ell):
/// the unique translate with row in [1, m].
struct CylCell {
    std::int64_t row = 1;
    std::int64_t col = 0;

    friend bool operator==(const CylCell& a, const CylCell& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator!=(const CylCell& a, const CylCell& b) { return !(a == b); }
    friend bool operator<(const CylCell& a, const CylCell& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    }
};

inline CylCell canonicalize(const Cell& c, const Omega& w) {
    std::int64_t k = floor_div(c.row - 1, w.m);
    return {c.row - k * w.m, c.col + k * w.ell};
}

inline Cell lift(const CylCell& c) { return {c.row, c.col}; }

/// True iff some lifts x~, y~ satisfy x~ <= y~ componentwise. Lifting y by
/// k*omega requires k >= ceil((x.row - y.row)/m) and k <= floor((y.col -
/// x.col)/ell), so the relation holds iff that interval of shifts is
/// nonempty.
inline bool poset_leq_cyl(const CylCell& x, const CylCell& y, const Omega& w) {
    std::int64_t kmin = ceil_div(x.row - y.row, w.m);
    std::int64_t kmax = floor_div(y.col - x.col, w.ell);
    return kmin <= kmax;
}

/// An ell-restricted generalized partition of length m: a weakly decreasing
/// integer sequence (parts may be negative) with parts[0] - parts[m-1] <= ell.
/// The restriction is exactly what makes the periodic diagram below an
/// order ideal of Z^2 across period boundaries.
///
/// The associated diagrams:
///   strip     = { (a,b) : 1 <= a <= m, b <= parts[a-1] }
///   periodic  = strip + Z*(m,-ell)       (invariant under translation)
///   cylindric = image of periodic under Z^2 -> Z^2 / Z(m,-ell)
class GeneralizedPartition {
  public:
    GeneralizedPartition(std::vector<long> parts, Omega omega)
        : parts_(std::move(parts)), omega_(omega) {
        if (static_cast<int>(parts_.size()) != omega_.m)
            throw BadLength("partition length does not match m");
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i - 1] < parts_[i]) throw NotWeaklyDecreasing("parts must be weakly decreasing");
        if (parts_.front() - parts_.back() > omega_.ell)
            throw NotRestricted("parts[0] - parts[m-1] exceeds ell");
    }

    const Omega& omega() const { return omega_; }
    int m() const { return omega_.m; }
    long ell() const { return omega_.ell; }
    const std::vector<long>& parts() const { return parts_; }
    long part(int a) const { return parts_[static_cast<std::size_t>(a - 1)]; } // 1-based

    /// Column bound of the periodic diagram in an arbitrary row:
    /// (row, col) is a cell iff col <= row_bound(row). Weakly decreasing in
    /// row; drops by ell every m rows.
    std::int64_t row_bound(std::int64_t row) const {
        std::int64_t k = floor_div(row - 1, omega_.m);
        return parts_[static_cast<std::size_t>(row - 1 - k * omega_.m)] - k * omega_.ell;
    }

    bool contains_periodic(const Cell& c) const { return c.col <= row_bound(c.row); }
    bool contains_cyl(const CylCell& c) const { return c.col <= row_bound(c.row); }

    /// Pointwise containment (same period).
    bool contains(const GeneralizedPartition& inner) const {
        if (omega_ != inner.omega_) return false;
        for (int a = 1; a <= m(); ++a)
            if (inner.part(a) > part(a)) return false;
        return true;
    }

    friend bool operator==(const GeneralizedPartition& a, const GeneralizedPartition& b) {
        return a.omega_ == b.omega_ && a.parts_ == b.parts_;
    }

  private:
    std::vector<long> parts_;
    Omega omega_;
};

inline GeneralizedPartition validate_partition(const std::vector<long>& parts, int m, long ell) {
    return GeneralizedPartition(parts, Omega(m, ell));
}

/// Number of cells of the hook of x in the periodic diagram: the cells of
/// the column of x weakly below it plus the cells of the row of x strictly
/// to its right. Finite because the column bound drops by ell each period.
inline long hook_length_periodic(const GeneralizedPartition& lambda, const Cell& x) {
    std::int64_t bound = lambda.row_bound(x.row);
    if (x.col > bound) throw CellNotInDiagram("hook_length_periodic: cell outside diagram");
    std::int64_t arm = bound - x.col;
    // Largest row r >= x.row with row_bound(r) >= x.col; row_bound is weakly
    // decreasing, so binary search.
    std::int64_t lo = x.row;
    std::int64_t hi = x.row + static_cast<std::int64_t>(lambda.m()) * ((bound - x.col) / lambda.ell() + 2);
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (lambda.row_bound(mid) >= x.col)
            lo = mid;
        else
            hi = mid - 1;
    }
    std::int64_t leg = lo - x.row + 1;
    return static_cast<long>(arm + leg);
}

inline std::vector<Cell> hook_cells_periodic(const GeneralizedPartition& lambda, const Cell& x) {
    std::int64_t bound = lambda.row_bound(x.row);
    if (x.col > bound) throw CellNotInDiagram("hook_cells_periodic: cell outside diagram");
    std::vector<Cell> out;
    for (std::int64_t r = x.row; lambda.row_bound(r) >= x.col; ++r) out.push_back({r, x.col});
    for (std::int64_t b = x.col + 1; b <= bound; ++b) out.push_back({x.row, b});
    std::sort(out.begin(), out.end());
    return out;
}

/// Hook length on the cylinder; independent of the chosen lift.
inline long hook_length_cyl(const GeneralizedPartition& lambda, const CylCell& x) {
    if (!lambda.contains_cyl(x)) throw CellNotInDiagram("hook_length_cyl: cell outside diagram");
    return hook_length_periodic(lambda, lift(x));
}

/// The finite skew diagram lambda/mu inside one fundamental strip.
struct SkewShape {
    GeneralizedPartition outer;
    GeneralizedPartition inner;
    std::vector<Cell> cells; // row-major

    int m() const { return outer.m(); }
    long ell() const { return outer.ell(); }
    long long size() const { return static_cast<long long>(cells.size()); }

    bool contains(const Cell& c) const {
        return c.row >= 1 && c.row <= m() &&
               c.col > inner.part(static_cast<int>(c.row)) &&
               c.col <= outer.part(static_cast<int>(c.row));
    }

    /// Index of a cell in row-major order, or -1.
    long index_of(const Cell& c) const {
        if (!contains(c)) return -1;
        long idx = 0;
        for (int a = 1; a < c.row; ++a) idx += static_cast<long>(outer.part(a) - inner.part(a));
        return idx + static_cast<long>(c.col - inner.part(static_cast<int>(c.row)) - 1);
    }
};

inline SkewShape skew_cells(const GeneralizedPartition& lambda, const GeneralizedPartition& mu) {
    if (lambda.omega() != mu.omega())
        throw NotContained("skew_cells: mismatched period");
    if (!lambda.contains(mu)) throw NotContained("skew_cells: inner partition not contained in outer");
    std::vector<Cell> cells;
    for (int a = 1; a <= lambda.m(); ++a)
        for (long b = mu.part(a) + 1; b <= lambda.part(a); ++b)
            cells.push_back({a, b});
    return SkewShape{lambda, mu, std::move(cells)};
}

/// ASCII rendering of a window of the periodic diagram (skew when `mu` is
/// given): rows top to bottom, '#' cell, '.' non-cell.
inline std::string render_window(const GeneralizedPartition& lambda, const GeneralizedPartition* mu,
                                 std::int64_t row_lo, std::int64_t row_hi,
                                 std::int64_t col_lo, std::int64_t col_hi) {
    std::string out;
    for (std::int64_t r = row_lo; r <= row_hi; ++r) {
        for (std::int64_t c = col_lo; c <= col_hi; ++c) {
            Cell cell{r, c};
            bool in = lambda.contains_periodic(cell) && (mu == nullptr || !mu->contains_periodic(cell));
            out += in ? '#' : '.';
        }
        out += '\n';
    }
    return out;
}

// ----- ordinary (finite) partitions, used by the finite excited machinery -----

using Partition = std::vector<long>;

inline void validate_ordinary_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) throw Error("ordinary partition parts must be nonnegative");
        if (i > 0 && p[i - 1] < p[i]) throw NotWeaklyDecreasing("ordinary partition must be weakly decreasing");
    }
}

inline bool partition_contains(const Partition& p, const Cell& c) {
    return c.row >= 1 && c.row <= static_cast<std::int64_t>(p.size()) &&
           c.col >= 1 && c.col <= p[static_cast<std::size_t>(c.row - 1)];
}

inline bool partition_leq(const Partition& mu, const Partition& lambda) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
        long l = i < lambda.size() ? lambda[i] : 0;
        if (mu[i] > l) return false;
    }
    return true;
}

inline long long partition_size(const Partition& p) {
    long long s = 0;
    for (long v : p) s += v;
    return s;
}

/// Classical hook length (arm + leg + 1) in a finite Young diagram.
inline long hook_length_finite(const Partition& lambda, const Cell& x) {
    if (!partition_contains(lambda, x)) throw CellNotInDiagram("hook_length_finite: cell outside diagram");
    long arm = lambda[static_cast<std::size_t>(x.row - 1)] - x.col;
    long leg = 0;
    for (std::size_t r = static_cast<std::size_t>(x.row); r < lambda.size() && lambda[r] >= x.col; ++r)
        ++leg;
    return arm + leg + 1;
}

// Hash support for cells.
struct CellHash {
    std::size_t operator()(const Cell& c) const {
        std::size_t h = std::hash<std::int64_t>()(c.row);
        h ^= std::hash<std::int64_t>()(c.col) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace cylhook
