#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <string>
#include <unordered_set>
#include <vector>

#include "cylhook/diagram.hpp"
#include "cylhook/errors.hpp"

namespace cylhook {

/// A finite excited diagram: the current position of the |mu| marked cells
/// inside the ambient Young diagram lambda.
struct ExcitedDiagram {
    std::vector<Cell> cells; // sorted row-major

    friend bool operator==(const ExcitedDiagram& a, const ExcitedDiagram& b) { return a.cells == b.cells; }
    friend bool operator<(const ExcitedDiagram& a, const ExcitedDiagram& b) { return a.cells < b.cells; }
};

/// Cells y = (a,b) of D whose three neighbors (a+1,b), (a,b+1), (a+1,b+1)
/// all lie in lambda but outside D.
inline std::vector<Cell> active_cells_finite(const Partition& lambda, const ExcitedDiagram& D) {
    auto in_D = [&](const Cell& c) { return std::binary_search(D.cells.begin(), D.cells.end(), c); };
    std::vector<Cell> out;
    for (const Cell& y : D.cells) {
        Cell down{y.row + 1, y.col}, right{y.row, y.col + 1}, diag{y.row + 1, y.col + 1};
        bool ok = partition_contains(lambda, down) && !in_D(down) &&
                  partition_contains(lambda, right) && !in_D(right) &&
                  partition_contains(lambda, diag) && !in_D(diag);
        if (ok) out.push_back(y);
    }
    return out;
}

/// Elementary excitation at y: D minus y plus (a+1, b+1).
inline ExcitedDiagram excite_finite(const Partition& lambda, const ExcitedDiagram& D, const Cell& y) {
    auto act = active_cells_finite(lambda, D);
    if (std::find(act.begin(), act.end(), y) == act.end())
        throw NotActive("excite_finite: cell is not D-active");
    ExcitedDiagram next;
    next.cells.reserve(D.cells.size());
    for (const Cell& c : D.cells)
        if (c != y) next.cells.push_back(c);
    next.cells.push_back({y.row + 1, y.col + 1});
    std::sort(next.cells.begin(), next.cells.end());
    return next;
}

namespace detail {

inline std::string cells_key(const std::vector<Cell>& cells) {
    std::string key(cells.size() * 2 * sizeof(std::int64_t), '\0');
    char* p = key.data();
    for (const Cell& c : cells) {
        std::memcpy(p, &c.row, sizeof c.row);
        p += sizeof c.row;
        std::memcpy(p, &c.col, sizeof c.col);
        p += sizeof c.col;
    }
    return key;
}

inline std::string cyl_cells_key(const std::vector<CylCell>& cells) {
    std::string key(cells.size() * 2 * sizeof(std::int64_t), '\0');
    char* p = key.data();
    for (const CylCell& c : cells) {
        std::memcpy(p, &c.row, sizeof c.row);
        p += sizeof c.row;
        std::memcpy(p, &c.col, sizeof c.col);
        p += sizeof c.col;
    }
    return key;
}

} // namespace detail

/// Breadth-first closure of mu under elementary excitations inside lambda,
/// deduplicated by cell set; sorted within each discovery level, flattened.
inline std::vector<ExcitedDiagram> enumerate_excited_finite(const Partition& lambda, const Partition& mu) {
    validate_ordinary_partition(lambda);
    validate_ordinary_partition(mu);
    if (!partition_leq(mu, lambda)) throw NotContained("enumerate_excited_finite: mu not contained in lambda");

    ExcitedDiagram start;
    for (std::size_t a = 0; a < mu.size(); ++a)
        for (long b = 1; b <= mu[a]; ++b) start.cells.push_back({static_cast<std::int64_t>(a + 1), b});
    std::sort(start.cells.begin(), start.cells.end());

    std::vector<ExcitedDiagram> out;
    std::unordered_set<std::string> seen;
    std::vector<ExcitedDiagram> level{start};
    seen.insert(detail::cells_key(start.cells));
    while (!level.empty()) {
        std::sort(level.begin(), level.end());
        std::vector<ExcitedDiagram> next;
        for (const ExcitedDiagram& d : level) {
            out.push_back(d);
            for (const Cell& y : active_cells_finite(lambda, d)) {
                ExcitedDiagram e = excite_finite(lambda, d, y);
                if (seen.insert(detail::cells_key(e.cells)).second) next.push_back(e);
            }
        }
        level = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cylindric excited diagrams.
// ---------------------------------------------------------------------------

/// A cylindric excited diagram, stored by its complement: the n cells of
/// the cylindric diagram NOT covered by the excited copy of mu. The
/// complement is what the hook products in the series run over, and unlike
/// the diagram itself it is finite.
struct CylExcitedDiagram {
    std::vector<CylCell> complement; // sorted, canonical representatives
    long depth = 0;                  // breadth-first discovery distance from the start

    friend bool operator==(const CylExcitedDiagram& a, const CylExcitedDiagram& b) {
        return a.complement == b.complement;
    }
    friend bool operator<(const CylExcitedDiagram& a, const CylExcitedDiagram& b) {
        return a.complement < b.complement;
    }
};

namespace detail {

/// Active cells computed from the complement. y is active iff y lies in the
/// cylindric diagram, outside the complement, and all three of
/// canon(y+(1,0)), canon(y+(0,1)), canon(y+(1,1)) belong to the complement.
/// Only cells diagonally above a complement cell can qualify, so the scan
/// is O(n) set lookups.
inline std::vector<CylCell> cyl_active_from_complement(const GeneralizedPartition& lambda,
                                                       const std::vector<CylCell>& comp) {
    const Omega& w = lambda.omega();
    auto in_comp = [&](const CylCell& c) { return std::binary_search(comp.begin(), comp.end(), c); };
    std::vector<CylCell> out;
    for (const CylCell& z : comp) {
        CylCell y = canonicalize({z.row - 1, z.col - 1}, w);
        if (!lambda.contains_cyl(y) || in_comp(y)) continue;
        CylCell down = canonicalize({y.row + 1, y.col}, w);
        CylCell right = canonicalize({y.row, y.col + 1}, w);
        if (in_comp(down) && in_comp(right)) out.push_back(y);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Complement after the periodic elementary excitation at active cell y:
/// the orbit of (a+1, b+1) leaves the complement and the orbit of y enters.
/// Unchecked; callers validate activity.
inline std::vector<CylCell> cyl_excite_complement(const GeneralizedPartition& lambda,
                                                  const std::vector<CylCell>& comp, const CylCell& y) {
    CylCell removed = canonicalize({y.row + 1, y.col + 1}, lambda.omega());
    std::vector<CylCell> next;
    next.reserve(comp.size());
    for (const CylCell& c : comp)
        if (c != removed) next.push_back(c);
    next.push_back(y);
    std::sort(next.begin(), next.end());
    return next;
}

inline std::int64_t min_col(const std::vector<CylCell>& comp, std::int64_t empty_value = 0) {
    std::int64_t m = empty_value;
    bool first = true;
    for (const CylCell& c : comp) {
        if (first || c.col < m) m = c.col;
        first = false;
    }
    return m;
}

} // namespace detail

inline std::vector<CylCell> active_cells_cyl(const GeneralizedPartition& lambda, const CylExcitedDiagram& D) {
    return detail::cyl_active_from_complement(lambda, D.complement);
}

inline CylExcitedDiagram excite_cyl(const GeneralizedPartition& lambda, const CylExcitedDiagram& D,
                                    const CylCell& y) {
    auto act = active_cells_cyl(lambda, D);
    if (!std::binary_search(act.begin(), act.end(), y))
        throw NotActive("excite_cyl: cell is not D-active");
    return CylExcitedDiagram{detail::cyl_excite_complement(lambda, D.complement, y), D.depth + 1};
}

struct CylEnumeration {
    std::vector<std::vector<CylExcitedDiagram>> strata; // by depth
    bool truncated = false;                             // some neighbor fell outside the window
    unsigned long long states = 0;
};

/// All cylindric excited diagrams whose complement stays within `window`
/// columns of the starting complement: a state is retained iff every
/// complement cell's canonical column is >= min_col(start) - window.
///
/// Along any excitation the affected complement cell's canonical column
/// strictly decreases, so every retained state is reachable through
/// retained states only and the result is complete for the window.
inline CylEnumeration enumerate_excited_cyl(const GeneralizedPartition& lambda,
                                            const GeneralizedPartition& mu, long window) {
    if (window < 0) throw Error("enumerate_excited_cyl: window must be nonnegative");
    SkewShape shape = skew_cells(lambda, mu); // validates containment
    std::vector<CylCell> start;
    start.reserve(shape.cells.size());
    for (const Cell& c : shape.cells) start.push_back({c.row, c.col});
    std::sort(start.begin(), start.end());

    const std::int64_t threshold = detail::min_col(start) - window;

    CylEnumeration result;
    std::unordered_set<std::string> seen;
    std::vector<CylExcitedDiagram> level{CylExcitedDiagram{start, 0}};
    seen.insert(detail::cyl_cells_key(start));
    long depth = 0;
    while (!level.empty()) {
        std::sort(level.begin(), level.end());
        std::vector<CylExcitedDiagram> next;
        for (const CylExcitedDiagram& d : level) {
            ++result.states;
            for (const CylCell& y : detail::cyl_active_from_complement(lambda, d.complement)) {
                std::vector<CylCell> comp = detail::cyl_excite_complement(lambda, d.complement, y);
                if (detail::min_col(comp) < threshold) {
                    result.truncated = true;
                    continue;
                }
                std::string key = detail::cyl_cells_key(comp);
                if (seen.insert(std::move(key)).second)
                    next.push_back(CylExcitedDiagram{std::move(comp), depth + 1});
            }
        }
        result.strata.push_back(std::move(level));
        level = std::move(next);
        ++depth;
    }
    return result;
}

} // namespace cylhook
