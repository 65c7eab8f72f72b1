#pragma once

#include "supersat/numeric.hpp"
#include "supersat/permfam.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace supersat {

struct Interval {
    BigRat lo;
    BigRat hi;

    bool contains(const BigRat& v) const { return lo <= v && v <= hi; }
    bool contains(const BigNat& v) const { return contains(BigRat(v)); }
};

Interval make_interval(const BigRat& center, const BigRat& halfwidth);

// Intersection graph of a coset spec: vertices are the grid points,
// (i,j) ~ (i',j') iff i != i' and j != j' (cosets meet exactly when the
// points share no axis-aligned line).
struct IntGraph {
    std::vector<std::pair<int, int>> points;
    std::vector<std::uint64_t> adj; // bitmask rows, up to 64 vertices

    int order() const { return static_cast<int>(points.size()); }
    bool adjacent(int u, int v) const { return (adj[u] >> v) & 1; }
};

IntGraph build_intgraph(const CosetSpec& spec);
IntGraph build_intgraph_points(const std::vector<std::pair<int, int>>& points);

// k_1..k_{t_max} by recursive clique extension.
std::vector<BigNat> clique_counts(const IntGraph& g, int t_max);

// Induced copies of an edge plus an isolated vertex; computed from the
// grid characterization (the third vertex must be one of the two mixed
// corners) and cross-checked against a triple scan in tests.
BigNat p3bar_count(const IntGraph& g);
BigNat p3bar_count_scan(const IntGraph& g);

// Some row or column carries at least k_1 - 1 of the points.
bool is_canonical(const IntGraph& g);

// The five interval estimates for a union of cosets at ground-set size n,
// as exact-rational center +- halfwidth:
//   size:           k1 (n-1)! - k2 (n-2)! + k3 (n-3)!          +- k4 (n-4)!
//   per_perm:       k1 D_{n-1} - k2 D_{n-2}                    +- 3 k1 k2 (n-3)!
//   within:         C(k1,2)(n-1)! D_{n-1} - (k1-1) k2 (n-2)! D_{n-1}
//                                                              +- 2 k1^2 k2 (n-1)!(n-3)!
//   per_perm_refined(overlap): k1 D_{n-1} - k2 Dp_{n-2}
//                     + (k3 + overlap) d_{n-3}                 +- (28 k2 + 4 k3 + k4)(n-4)!
//   within_refined: sum a_i (n-i)! D_{n-1},
//                     a1 = C(k1,2), a2 = -(k1-1) k2,
//                     a3 = ((2 k1 - 3) k3 + (k2 - k1 + 1) k2 + p3bar)/2
//                                                              +- 12 k1^3 k2 (n-1)!(n-4)!
struct CosetUnionEstimates {
    long n = 0;
    BigNat k1, k2, k3, k4, p3bar;
    Interval size;
    Interval per_perm;
    Interval within;
    Interval within_refined;

    Interval per_perm_refined(const BigNat& overlap_sum) const;

  private:
    friend CosetUnionEstimates union_estimates(const IntGraph&, long);
    BigRat refined_center_base; // k1 D_{n-1} - k2 Dp_{n-2} + k3 d_{n-3}
    BigRat refined_halfwidth;
    BigRat d_nm3;
};

CosetUnionEstimates union_estimates(const IntGraph& g, long n);

// Edge-overlap statistic sum_{xy in E} |{x1,y1} cap {pi^{-1}(x2), pi^{-1}(y2)}|.
BigNat edge_overlap_sum(const IntGraph& g, const Perm& pi);

enum class IneqStatus { holds, exempt, not_applicable, violated };

std::string to_string(IneqStatus s);

// The three structural inequalities for grid graphs:
//   I:   k2 >= max(k1, 2 k1 - 6), unless canonical or isomorphic to one of
//        2K2, P4, P5, C4+K1;
//   II:  k2 (k2 - k1 + 1) >= 2 k3 + 1, when k2 >= k1;
//   III: k2 (k2 - k1 + 1) + p3bar - k3 >= k1 k2 / 50, when not canonical.
struct GridInequalities {
    IneqStatus one, two, three;
    bool three_strong = false; // same left side >= k1 k2 / 12 (reported only)
};

GridInequalities grid_inequality_check(const IntGraph& g);

// All point configurations of size 1..k1_max inside [k1_max]^2, up to row
// permutations, column permutations and transpose; one lexicographically
// least representative per orbit, in increasing (size, point list) order.
std::vector<std::vector<std::pair<int, int>>> enumerate_grid_graphs(int k1_max);

// Number of raw configurations (orbit sizes summed); used to cross-check
// the orbit enumeration against a full scan.
unsigned long grid_mask_universe_size(int k1_max);

} // namespace supersat
