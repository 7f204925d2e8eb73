#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cylhook/diagram.hpp"

using namespace cylhook;

namespace {

// Brute-force oracle: search lifts y + k*omega over |k| <= 50.
bool leq_brute(const CylCell& x, const CylCell& y, const Omega& w) {
    for (long k = -50; k <= 50; ++k) {
        Cell yy{y.row + k * w.m, y.col - k * w.ell};
        if (x.row <= yy.row && x.col <= yy.col) return true;
    }
    return false;
}

std::vector<GeneralizedPartition> sample_partitions(int max_m, long max_ell, long max_top) {
    std::vector<GeneralizedPartition> out;
    for (int m = 1; m <= max_m; ++m)
        for (long ell = 1; ell <= max_ell; ++ell) {
            std::vector<std::vector<long>> stubs{{}};
            for (int a = 0; a < m; ++a) {
                std::vector<std::vector<long>> next;
                for (const auto& s : stubs) {
                    long hi = s.empty() ? max_top : s.back();
                    long lo = (s.empty() ? max_top : s.front()) - ell;
                    for (long v = lo; v <= hi; ++v) {
                        auto t = s;
                        t.push_back(v);
                        next.push_back(std::move(t));
                    }
                }
                stubs = std::move(next);
            }
            for (auto& s : stubs)
                if (s.front() - s.back() <= ell) out.emplace_back(s, Omega(m, ell));
        }
    return out;
}

} // namespace

TEST_CASE("partition validation") {
    CHECK_NOTHROW(validate_partition({5, 4, 4, 2}, 4, 4));
    CHECK_NOTHROW(validate_partition({0, 0, 0}, 3, 2));
    CHECK_NOTHROW(validate_partition({2, -1}, 2, 3)); // negative parts allowed
    CHECK_THROWS_AS(validate_partition({3, 1}, 2, 1), NotRestricted);
    CHECK_THROWS_AS(validate_partition({1, 2}, 2, 3), NotWeaklyDecreasing);
    CHECK_THROWS_AS(validate_partition({1, 1}, 3, 1), BadLength);
    CHECK_THROWS_AS(Omega(0, 1), Error);
    CHECK_THROWS_AS(Omega(1, 0), Error);
}

TEST_CASE("periodic membership") {
    GeneralizedPartition two({2}, Omega(1, 1));
    CHECK(two.contains_periodic({1, 2}));
    CHECK(!two.contains_periodic({1, 3}));
    CHECK(two.contains_periodic({2, 1}));  // one period down
    CHECK(!two.contains_periodic({2, 2}));

    GeneralizedPartition big({5, 4, 4, 2}, Omega(4, 4));
    CHECK(big.contains_periodic({5, 1})); // wraps to (1, 5)
    CHECK(!big.contains_periodic({5, 2}));
}

TEST_CASE("periodicity of membership") {
    std::mt19937 rng(7);
    for (const auto& gp : sample_partitions(3, 3, 3)) {
        for (int trial = 0; trial < 20; ++trial) {
            Cell c{static_cast<long>(rng() % 17) - 8, static_cast<long>(rng() % 17) - 8};
            Cell shifted = c + gp.omega().period();
            CHECK(gp.contains_periodic(c) == gp.contains_periodic(shifted));
        }
    }
}

TEST_CASE("canonicalize") {
    Omega w(3, 2);
    CHECK(canonicalize({4, 5}, w) == CylCell{1, 7});   // (m+1, b) -> (1, b+ell)
    CHECK(canonicalize({1, 5}, w) == CylCell{1, 5});   // identity on the strip
    CHECK(canonicalize({0, 5}, w) == CylCell{3, 3});
    Omega w2(2, 3);
    CHECK(canonicalize({7, 1}, w2) == CylCell{1, 10}); // k = 3 periods

    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Omega ww(1 + static_cast<int>(rng() % 4), 1 + static_cast<long>(rng() % 4));
        Cell c{static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 41) - 20};
        CylCell canon = canonicalize(c, ww);
        CHECK(canon.row >= 1);
        CHECK(canon.row <= ww.m);
        // idempotent and translation invariant
        CHECK(canonicalize(lift(canon), ww) == canon);
        long k = static_cast<long>(rng() % 9) - 4;
        CHECK(canonicalize({c.row + k * ww.m, c.col - k * ww.ell}, ww) == canon);
    }
}

TEST_CASE("cylinder partial order") {
    Omega w11(1, 1);
    CHECK(poset_leq_cyl({1, 0}, {1, 0}, w11)); // reflexive
    CHECK(poset_leq_cyl({1, 0}, {1, 1}, w11));

    Omega w22(2, 2);
    CHECK(poset_leq_cyl(canonicalize({2, 1}, w22), canonicalize({1, 3}, w22), w22));

    std::mt19937 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        Omega w(1 + static_cast<int>(rng() % 3), 1 + static_cast<long>(rng() % 3));
        auto rnd_cell = [&]() {
            return canonicalize({static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 13) - 6}, w);
        };
        CylCell x = rnd_cell(), y = rnd_cell(), z = rnd_cell();
        CHECK(poset_leq_cyl(x, y, w) == leq_brute(x, y, w));
        CHECK(poset_leq_cyl(x, x, w));
        if (poset_leq_cyl(x, y, w) && poset_leq_cyl(y, z, w)) CHECK(poset_leq_cyl(x, z, w));
    }
}

TEST_CASE("periodic diagrams are downward closed (order filters of the dual)") {
    // For every cell x of the periodic diagram, the cells directly above and
    // directly to the left also belong to it; equivalently the diagram is an
    // upward-closed set in the order whose extensions the tableaux realize.
    for (const auto& gp : sample_partitions(4, 4, 4)) {
        for (long r = -4; r <= 2 * gp.m() + 4; ++r)
            for (long b = -12; b <= 8; ++b) {
                if (!gp.contains_periodic({r, b})) continue;
                CHECK(gp.contains_periodic({r - 1, b}));
                CHECK(gp.contains_periodic({r, b - 1}));
            }
    }
}

TEST_CASE("hook cells and lengths") {
    // row of length two on the (1,-1) cylinder: lengths 1,3,5,7,... from the right
    GeneralizedPartition two({2}, Omega(1, 1));
    CHECK(hook_length_cyl(two, {1, 2}) == 1);
    CHECK(hook_length_cyl(two, {1, 1}) == 3);
    CHECK(hook_length_cyl(two, {1, 0}) == 5);
    CHECK(hook_length_cyl(two, {1, -1}) == 7);
    CHECK(hook_cells_periodic(two, {1, 0}).size() == 5);

    // single cell
    GeneralizedPartition one({1}, Omega(1, 3));
    auto h = hook_cells_periodic(one, {1, 1});
    CHECK(h == std::vector<Cell>{{1, 1}});

    // the marked cell of the three-row example: hook of 5 cells
    GeneralizedPartition fig({5, 3, 2}, Omega(3, 3));
    CHECK(hook_length_periodic(fig, {2, 1}) == 5);
    CHECK(hook_cells_periodic(fig, {2, 1}) ==
          std::vector<Cell>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {4, 1}});

    CHECK_THROWS_AS(hook_length_cyl(two, CylCell{1, 3}), CellNotInDiagram);
    CHECK_THROWS_AS(hook_cells_periodic(two, Cell{1, 5}), CellNotInDiagram);
}

TEST_CASE("hook length independent of lift; binary-search leg matches cell walk") {
    std::mt19937 rng(17);
    for (const auto& gp : sample_partitions(3, 3, 3)) {
        for (int trial = 0; trial < 10; ++trial) {
            long r = static_cast<long>(rng() % (2 * gp.m())) + 1;
            long b = gp.row_bound(r) - static_cast<long>(rng() % 6);
            Cell x{r, b};
            long len = hook_length_periodic(gp, x);
            CHECK(len == static_cast<long>(hook_cells_periodic(gp, x).size()));
            Cell shifted = x + gp.omega().period();
            CHECK(hook_length_periodic(gp, shifted) == len);
            CHECK(hook_length_cyl(gp, canonicalize(x, gp.omega())) == len);
        }
    }
}

TEST_CASE("skew cells") {
    GeneralizedPartition l({2, 2}, Omega(2, 2)), m({1, 0}, Omega(2, 2));
    SkewShape s = skew_cells(l, m);
    CHECK(s.size() == 3);
    CHECK(s.cells == std::vector<Cell>{{1, 2}, {2, 1}, {2, 2}});
    CHECK(s.index_of({2, 1}) == 1);
    CHECK(s.index_of({1, 1}) == -1);

    CHECK(skew_cells(l, l).size() == 0);

    GeneralizedPartition l2({3, 1}, Omega(2, 2)), m2({0, 0}, Omega(2, 2));
    CHECK(skew_cells(l2, m2).size() == 4);

    CHECK_THROWS_AS(skew_cells(m, l), NotContained);
    GeneralizedPartition other({1}, Omega(1, 1));
    CHECK_THROWS_AS(skew_cells(l, other), NotContained);
}

TEST_CASE("ascii rendering") {
    GeneralizedPartition two({2}, Omega(1, 1));
    CHECK(render_window(two, nullptr, 0, 2, -1, 3) ==
          "#####\n"
          "####.\n"
          "###..\n");
    GeneralizedPartition mu({0}, Omega(1, 1));
    CHECK(render_window(two, &mu, 0, 2, -1, 3) ==
          "...##\n"
          "..##.\n"
          ".##..\n");
}
