#include "supersat/intgraph.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace supersat;

namespace {

IntGraph grid(std::initializer_list<std::pair<int, int>> pts) {
    return build_intgraph_points(std::vector<std::pair<int, int>>(pts));
}

} // namespace

TEST_SUITE("intgraph") {

TEST_CASE("adjacency follows the axis rule") {
    IntGraph g = grid({{1, 1}, {2, 2}, {1, 2}});
    CHECK(g.adjacent(0, 1));
    CHECK(!g.adjacent(0, 2));
    CHECK(!g.adjacent(1, 2));

    IntGraph row = grid({{1, 1}, {1, 2}, {1, 3}});
    auto kc = clique_counts(row, 4);
    CHECK(kc[0] == 3);
    CHECK(kc[1] == 0);
}

TEST_CASE("clique counts on the diagonal") {
    IntGraph k4 = grid({{1, 1}, {2, 2}, {3, 3}, {4, 4}});
    auto kc = clique_counts(k4, 4);
    CHECK(kc[0] == 4);
    CHECK(kc[1] == 6);
    CHECK(kc[2] == 4);
    CHECK(kc[3] == 1);

    // oracle: exhaustive subset scan on random specs
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::set<std::pair<int, int>> pts;
        while (pts.size() < 8)
            pts.insert({1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 6)});
        IntGraph g = build_intgraph_points({pts.begin(), pts.end()});
        auto counts = clique_counts(g, 5);
        std::vector<unsigned long> brute(5, 0);
        for (unsigned mask = 1; mask < (1u << 8); ++mask) {
            int size = __builtin_popcount(mask);
            if (size > 5) continue;
            bool clique = true;
            for (int a = 0; a < 8 && clique; ++a)
                for (int b = a + 1; b < 8 && clique; ++b)
                    if ((mask >> a & 1) && (mask >> b & 1) && !g.adjacent(a, b)) clique = false;
            if (clique) ++brute[size - 1];
        }
        for (int t = 0; t < 5; ++t) CHECK(counts[t] == BigNat(brute[t]));
    }
}

TEST_CASE("edge-plus-isolated-vertex counts") {
    CHECK(p3bar_count(grid({{1, 1}, {2, 2}, {1, 2}})) == 1);
    CHECK(p3bar_count(grid({{1, 1}, {2, 2}, {3, 3}})) == 0); // triangle
    // grid characterization agrees with the cubic scan
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        std::set<std::pair<int, int>> pts;
        size_t want = 3 + rng() % 6;
        while (pts.size() < want)
            pts.insert({1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 5)});
        IntGraph g = build_intgraph_points({pts.begin(), pts.end()});
        CHECK(p3bar_count(g) == p3bar_count_scan(g));
    }
}

TEST_CASE("canonical configurations") {
    CHECK(is_canonical(grid({{1, 1}, {1, 2}, {1, 5}})));
    CHECK(is_canonical(grid({{1, 1}})));
    CHECK(is_canonical(grid({{1, 1}, {2, 2}}))); // one point off a line of one
    CHECK(!is_canonical(grid({{1, 1}, {2, 2}, {1, 2}, {2, 1}})));
}

TEST_CASE("interval estimates at a degenerate spec") {
    IntGraph row = grid({{1, 1}, {1, 2}, {1, 3}});
    CosetUnionEstimates e = union_estimates(row, 8);
    CHECK(e.k2 == 0);
    CHECK(e.size.lo == e.size.hi);
    CHECK(e.size.lo == BigRat(BigNat(3) * factorial(7)));
    CHECK_THROWS_AS(union_estimates(row, 4), std::invalid_argument);
}

TEST_CASE("grid inequalities on worked instances") {
    GridInequalities two_k2 = grid_inequality_check(grid({{1, 1}, {2, 2}, {1, 2}, {2, 1}}));
    CHECK(two_k2.one == IneqStatus::exempt);

    GridInequalities k4 = grid_inequality_check(grid({{1, 1}, {2, 2}, {3, 3}, {4, 4}}));
    CHECK(k4.two == IneqStatus::holds); // 6*3 = 18 >= 9

    GridInequalities line = grid_inequality_check(grid({{1, 1}, {1, 2}, {1, 3}}));
    CHECK(line.three == IneqStatus::not_applicable);
}

TEST_CASE("orbit enumeration of grid classes") {
    CHECK(enumerate_grid_graphs(1).size() == 1);
    CHECK(enumerate_grid_graphs(2).size() == 3); // single point, two on a line, two generic
    CHECK(enumerate_grid_graphs(3).size() == 7);
    CHECK(enumerate_grid_graphs(4).size() == 17);

    // oracle: canonicalise every mask by brute force over the whole group
    // (all row permutations x column permutations x transpose)
    for (int kmax = 2; kmax <= 3; ++kmax) {
        std::vector<std::pair<int, int>> cells;
        for (int r = 1; r <= kmax; ++r)
            for (int c = 1; c <= kmax; ++c) cells.push_back({r, c});
        std::vector<int> perm_base(kmax);
        for (int i = 0; i < kmax; ++i) perm_base[i] = i;

        long universe = 0;
        std::set<std::vector<std::pair<int, int>>> reps;
        for (unsigned mask = 1; mask < (1u << cells.size()); ++mask) {
            if (__builtin_popcount(mask) > kmax) continue;
            ++universe;
            std::vector<std::pair<int, int>> pts;
            for (size_t i = 0; i < cells.size(); ++i)
                if (mask >> i & 1) pts.push_back(cells[i]);
            std::vector<std::pair<int, int>> best;
            std::vector<int> rp = perm_base;
            do {
                std::vector<int> cp = perm_base;
                do {
                    for (int t = 0; t < 2; ++t) {
                        std::vector<std::pair<int, int>> img;
                        for (auto [r, c] : pts) {
                            int nr = rp[r - 1] + 1, nc = cp[c - 1] + 1;
                            img.push_back(t ? std::pair{nc, nr} : std::pair{nr, nc});
                        }
                        std::sort(img.begin(), img.end());
                        if (best.empty() || img < best) best = img;
                    }
                } while (std::next_permutation(cp.begin(), cp.end()));
            } while (std::next_permutation(rp.begin(), rp.end()));
            reps.insert(best);
        }
        CHECK(universe == static_cast<long>(grid_mask_universe_size(kmax)));
        auto classes = enumerate_grid_graphs(kmax);
        CHECK(classes.size() == reps.size());
        for (const auto& c : classes) CHECK(reps.count(c) == 1);
    }
}

TEST_CASE("refined per-perm interval uses the overlap input") {
    IntGraph g = grid({{1, 1}, {2, 2}});
    CosetUnionEstimates e = union_estimates(g, 9);
    Interval base = e.per_perm_refined(BigNat(0));
    Interval shifted = e.per_perm_refined(BigNat(2));
    CHECK(shifted.lo > base.lo);
}

} // TEST_SUITE
