#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cylhook/paths.hpp"

using namespace cylhook;

TEST_CASE("path enumeration and counting") {
    auto ps = enumerate_paths({1, 3}, {2, 1});
    REQUIRE(ps.size() == 3);
    CHECK(count_paths({1, 3}, {2, 1}) == 3);
    CHECK(ps[0].steps() == "DLL");
    CHECK(ps[1].steps() == "LDL");
    CHECK(ps[2].steps() == "LLD");
    for (const LatticePath& p : ps) {
        CHECK(p.cells.front() == Cell{1, 3});
        CHECK(p.cells.back() == Cell{2, 1});
    }

    // adjacent cells: one path of two cells
    CHECK(enumerate_paths({1, 1}, {2, 1}).size() == 1);
    // degenerate straight runs
    CHECK(enumerate_paths({1, 4}, {1, 1}).size() == 1);
    CHECK(enumerate_paths({1, 1}, {1, 1}).size() == 1);
    // unreachable
    CHECK(enumerate_paths({2, 1}, {1, 3}).empty());
    CHECK(count_paths({2, 1}, {1, 3}) == 0);

    for (long dr = 0; dr <= 4; ++dr)
        for (long dc = 0; dc <= 4; ++dc) {
            long long n = count_paths({1, 1 + dc}, {1 + dr, 1});
            CHECK(n == static_cast<long long>(enumerate_paths({1, 1 + dc}, {1 + dr, 1}).size()));
            CHECK(n == Rational::binomial(dr + dc, dr).to_long());
        }
}

TEST_CASE("gap tuples: construction and enumeration") {
    // n = 2, ell = 1: q = 1, r = 0; tuples (i), i in [1, bound]
    auto ts = enumerate_bar_tuples(1, 2, 7);
    CHECK(ts.size() == 7);
    for (std::size_t i = 0; i < ts.size(); ++i) CHECK(ts[i].indices == std::vector<long>{static_cast<long>(i) + 1});

    // minimal bound gives exactly the minimal tuple
    long q, r;
    bar_split(7, 2, q, r); // 7 = 2*3 + 1
    CHECK(q == 2);
    CHECK(r == 1);
    auto min_only = enumerate_bar_tuples(2, 7, r + 1 + (q - 1) * 3);
    REQUIRE(min_only.size() == 1);
    CHECK(min_only[0].indices == std::vector<long>{2, 5});

    // n = 5, ell = 2: q = 1, r = 2; count = bound - 2
    CHECK(enumerate_bar_tuples(2, 5, 10).size() == 8);

    // q = 0: the empty tuple regardless of bound
    CHECK(enumerate_bar_tuples(4, 3, 0).size() == 1);
    CHECK(enumerate_bar_tuples(4, 3, 0)[0].indices.empty());

    CHECK_THROWS_AS(make_bar_tuple(7, 2, {2}), InvalidTuple);      // wrong length
    CHECK_THROWS_AS(make_bar_tuple(7, 2, {1, 5}), InvalidTuple);   // i1 < r+1
    CHECK_THROWS_AS(make_bar_tuple(7, 2, {2, 4}), InvalidTuple);   // gap < ell+1
    CHECK_NOTHROW(make_bar_tuple(7, 2, {2, 5}));
}

TEST_CASE("tuple map: minimal tuple gives the start state, increments are excitations") {
    for (long ell = 1; ell <= 4; ++ell)
        for (long n = 1; n <= 8; ++n) {
            GeneralizedPartition lambda({n}, Omega(1, ell)), mu({0}, Omega(1, ell));
            long q, r;
            bar_split(n, ell, q, r);
            std::vector<long> idx;
            for (long k = 0; k < q; ++k) idx.push_back(r + 1 + k * (ell + 1));
            CylExcitedDiagram start = bar_tuple_to_excited(make_bar_tuple(n, ell, idx));
            CHECK(start.depth == 0);
            SkewShape s = skew_cells(lambda, mu);
            std::vector<CylCell> start_expected;
            for (const Cell& c : s.cells) start_expected.push_back({c.row, c.col});
            std::sort(start_expected.begin(), start_expected.end());
            CHECK(start.complement == start_expected);

            // increment at the last slot where the gap allows: equals an excitation
            if (q >= 1) {
                auto idx2 = idx;
                idx2.back() += 1;
                CylExcitedDiagram expect = bar_tuple_to_excited(make_bar_tuple(n, ell, idx2));
                // the active cell is c_{i_g + ell + 1} of the unincremented state
                long i_g = idx.back();
                CylCell y{1, n - (i_g + ell + 1) + 1};
                CylExcitedDiagram moved = excite_cyl(lambda, start, y);
                CHECK(moved.complement == expect.complement);
                CHECK(moved.depth == expect.depth);
            }
        }
}

TEST_CASE("tuple map is a bijection onto the windowed enumeration") {
    for (long ell = 1; ell <= 3; ++ell)
        for (long n = 1; n <= 6; ++n) {
            GeneralizedPartition lambda({n}, Omega(1, ell)), mu({0}, Omega(1, ell));
            const long window = 12;
            CylEnumeration e = enumerate_excited_cyl(lambda, mu, window);
            std::set<std::vector<CylCell>> bfs_states;
            for (const auto& stratum : e.strata)
                for (const CylExcitedDiagram& d : stratum) bfs_states.insert(d.complement);

            std::set<std::vector<CylCell>> tuple_states;
            for (const BarTuple& t : enumerate_bar_tuples(ell, n, (n - ell) + window)) {
                auto d = bar_tuple_to_excited(t);
                CHECK(tuple_states.insert(d.complement).second); // injective
            }
            CHECK(tuple_states == bfs_states);
        }
}

TEST_CASE("rectangle paths <-> finite excited diagrams") {
    for (long ell = 1; ell <= 4; ++ell)
        for (int m = 1; m <= 4; ++m)
            for (long k = 0; k <= std::min ((long)4, ell); ++k) {
                Partition lambda(static_cast<std::size_t>(m), ell + 1);
                Partition nu(static_cast<std::size_t>(m), ell);
                nu.back() = k;
                auto paths = enumerate_paths({1, ell + 1}, {m, k + 1});
                auto excited = enumerate_excited_finite(lambda, nu);
                CHECK(paths.size() == excited.size());

                std::set<std::vector<Cell>> excited_sets;
                for (const ExcitedDiagram& d : excited) excited_sets.insert(d.cells);
                for (const LatticePath& p : paths) {
                    ExcitedDiagram d = path_to_excited(p, ell, m, k);
                    CHECK(excited_sets.count(d.cells) == 1);
                    // complement round-trip returns the original path cells
                    std::vector<Cell> comp;
                    for (long a = 1; a <= m; ++a)
                        for (long b = 1; b <= ell + 1; ++b)
                            if (!std::binary_search(d.cells.begin(), d.cells.end(), Cell{a, b}))
                                comp.push_back({a, b});
                    std::vector<Cell> pc = p.cells;
                    std::sort(pc.begin(), pc.end());
                    CHECK(comp == pc);
                }
            }
    CHECK_THROWS_AS(path_to_excited(enumerate_paths({1, 3}, {2, 1})[0], 2, 3, 0), BadEndpoints);
}

TEST_CASE("straight-to-the-corner path maps to nu itself") {
    long ell = 3;
    int m = 3;
    long k = 1;
    // go down the last column, then left along the bottom row
    std::vector<Cell> cells;
    for (long a = 1; a <= m; ++a) cells.push_back({a, ell + 1});
    for (long b = ell; b >= k + 1; --b) cells.push_back({m, b});
    ExcitedDiagram d = path_to_excited(LatticePath{cells}, ell, m, k);
    Partition nu(static_cast<std::size_t>(m), ell);
    nu.back() = k;
    std::vector<Cell> expected;
    for (std::size_t a = 0; a < nu.size(); ++a)
        for (long b = 1; b <= nu[a]; ++b) expected.push_back({static_cast<long>(a + 1), b});
    std::sort(expected.begin(), expected.end());
    CHECK(d.cells == expected);
}

TEST_CASE("loops: strip paths project to loops and strata stay disjoint") {
    for (long ell = 1; ell <= 3; ++ell)
        for (int m = 1; m <= 3; ++m) {
            std::vector<long> parts(static_cast<std::size_t>(m), ell + 1);
            GeneralizedPartition lambda(parts, Omega(m, ell));
            auto strata = loop_paths(lambda, 6);
            std::set<std::vector<CylCell>> all_complements;
            for (const auto& stratum : strata) {
                CHECK(static_cast<long long>(stratum.size()) ==
                      Rational::binomial(ell + m - 1, m - 1).to_long());
                for (const LatticePath& p : stratum) {
                    Loop loop = project_to_loop(p, lambda.omega());
                    CHECK(is_loop(loop.cells, lambda.omega()));
                    std::vector<CylCell> cells = loop.cells;
                    std::sort(cells.begin(), cells.end());
                    CHECK(all_complements.insert(cells).second); // distinct across strata
                }
            }
        }
}

TEST_CASE("loop stratum zero equals the excited stratum of minimal window") {
    long ell = 2;
    int m = 2;
    std::vector<long> lparts(static_cast<std::size_t>(m), ell + 1);
    std::vector<long> mparts(static_cast<std::size_t>(m), ell);
    mparts.back() = 0;
    GeneralizedPartition lambda(lparts, Omega(m, ell));
    GeneralizedPartition mu(mparts, Omega(m, ell));

    CylEnumeration e = enumerate_excited_cyl(lambda, mu, 0);
    std::set<std::vector<CylCell>> window0;
    for (const auto& stratum : e.strata)
        for (const CylExcitedDiagram& d : stratum) window0.insert(d.complement);

    std::set<std::vector<CylCell>> stratum0;
    auto strata = loop_paths(lambda, 0);
    for (const LatticePath& p : strata[0]) {
        std::vector<CylCell> cells;
        for (const Cell& c : p.cells) cells.push_back(canonicalize(c, lambda.omega()));
        std::sort(cells.begin(), cells.end());
        stratum0.insert(cells);
    }
    CHECK(window0 == stratum0);
}
