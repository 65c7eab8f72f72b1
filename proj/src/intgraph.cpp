#include "supersat/intgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace supersat {

Interval make_interval(const BigRat& center, const BigRat& halfwidth) {
    if (halfwidth < 0) throw std::invalid_argument("negative halfwidth");
    return Interval{center - halfwidth, center + halfwidth};
}

IntGraph build_intgraph_points(const std::vector<std::pair<int, int>>& points) {
    if (points.size() > 64) throw std::length_error("intersection graph capped at 64 vertices");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw std::invalid_argument("duplicate grid point");
    IntGraph g;
    g.points = points;
    g.adj.assign(points.size(), 0);
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = 0; j < points.size(); ++j)
            if (i != j && points[i].first != points[j].first && points[i].second != points[j].second)
                g.adj[i] |= std::uint64_t(1) << j;
    return g;
}

IntGraph build_intgraph(const CosetSpec& spec) { return build_intgraph_points(spec.points); }

namespace {

void clique_extend(const IntGraph& g, std::uint64_t cand, int size, int t_max,
                   std::vector<unsigned long long>& counts) {
    if (size >= t_max) return;
    std::uint64_t rest = cand;
    while (rest) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        ++counts[size]; // clique of size (size+1) completed by v
        clique_extend(g, rest & g.adj[v], size + 1, t_max, counts);
    }
}

} // namespace

std::vector<BigNat> clique_counts(const IntGraph& g, int t_max) {
    if (t_max < 1) throw std::invalid_argument("clique_counts: t_max must be >= 1");
    std::vector<unsigned long long> counts(t_max, 0);
    int m = g.order();
    std::uint64_t all = (m == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << m) - 1);
    clique_extend(g, all, 0, t_max, counts);
    std::vector<BigNat> out(t_max);
    for (int t = 0; t < t_max; ++t) out[t] = BigNat(static_cast<unsigned long>(counts[t]));
    return out;
}

BigNat p3bar_count(const IntGraph& g) {
    // for an edge yz, the non-neighbours of both endpoints are exactly the
    // two mixed corners (y1,z2) and (z1,y2)
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < g.order(); ++i) index[g.points[i]] = i;
    unsigned long long c = 0;
    for (int y = 0; y < g.order(); ++y) {
        for (int z = y + 1; z < g.order(); ++z) {
            if (!g.adjacent(y, z)) continue;
            auto [y1, y2] = g.points[y];
            auto [z1, z2] = g.points[z];
            auto it = index.find({y1, z2});
            if (it != index.end()) ++c;
            it = index.find({z1, y2});
            if (it != index.end()) ++c;
        }
    }
    return BigNat(static_cast<unsigned long>(c));
}

BigNat p3bar_count_scan(const IntGraph& g) {
    unsigned long long c = 0;
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            for (int z = y + 1; z < g.order(); ++z) {
                if (x == y || x == z) continue;
                if (g.adjacent(y, z) && !g.adjacent(x, y) && !g.adjacent(x, z)) ++c;
            }
    return BigNat(static_cast<unsigned long>(c));
}

bool is_canonical(const IntGraph& g) {
    int m = g.order();
    std::map<int, int> row_count, col_count;
    for (auto& [r, c] : g.points) {
        ++row_count[r];
        ++col_count[c];
    }
    int best = 0;
    for (auto& [r, cnt] : row_count) best = std::max(best, cnt);
    for (auto& [c, cnt] : col_count) best = std::max(best, cnt);
    return best >= m - 1;
}

CosetUnionEstimates union_estimates(const IntGraph& g, long n) {
    if (n < 5) throw std::invalid_argument("union_estimates: need n >= 5");
    CosetUnionEstimates e;
    e.n = n;
    std::vector<BigNat> kc = clique_counts(g, 4);
    e.k1 = kc[0];
    e.k2 = kc[1];
    e.k3 = kc[2];
    e.k4 = kc[3];
    e.p3bar = p3bar_count(g);

    DerangementTable dt = derangements(n);
    FactorialTable fact(n);
    const BigNat& D1 = dt.D[n - 1];
    const BigNat& D2 = dt.D[n - 2];
    const BigNat& Dp2 = dt.Dp[n - 2];
    const BigNat& d3 = dt.d[n - 3];

    e.size = make_interval(
        BigRat(e.k1 * fact(n - 1) - e.k2 * fact(n - 2) + e.k3 * fact(n - 3)),
        BigRat(e.k4 * fact(n - 4)));
    e.per_perm = make_interval(BigRat(e.k1 * D1 - e.k2 * D2),
                               BigRat(3 * e.k1 * e.k2 * fact(n - 3)));
    e.within = make_interval(
        BigRat(binom(e.k1, 2) * fact(n - 1) * D1 - (e.k1 - 1) * e.k2 * fact(n - 2) * D1),
        BigRat(2 * e.k1 * e.k1 * e.k2 * fact(n - 1) * fact(n - 3)));

    e.refined_center_base = BigRat(e.k1 * D1 - e.k2 * Dp2 + e.k3 * d3);
    e.refined_halfwidth = BigRat((28 * e.k2 + 4 * e.k3 + e.k4) * fact(n - 4));
    e.d_nm3 = BigRat(d3);

    BigRat a3 = make_rat(1, 2) *
                BigRat((2 * e.k1 - 3) * e.k3 + (e.k2 - e.k1 + 1) * e.k2 + e.p3bar);
    BigRat wr_center = BigRat(binom(e.k1, 2) * fact(n - 1) * D1) -
                       BigRat((e.k1 - 1) * e.k2 * fact(n - 2) * D1) +
                       a3 * BigRat(fact(n - 3) * D1);
    e.within_refined =
        make_interval(wr_center, BigRat(12 * e.k1 * e.k1 * e.k1 * e.k2 * fact(n - 1) * fact(n - 4)));
    return e;
}

Interval CosetUnionEstimates::per_perm_refined(const BigNat& overlap_sum) const {
    return make_interval(refined_center_base + BigRat(overlap_sum) * d_nm3, refined_halfwidth);
}

BigNat edge_overlap_sum(const IntGraph& g, const Perm& pi) {
    std::vector<int> inv(pi.n() + 1, 0);
    for (int i = 1; i <= pi.n(); ++i) inv[pi(i)] = i;
    long acc = 0;
    for (int y = 0; y < g.order(); ++y)
        for (int z = y + 1; z < g.order(); ++z) {
            if (!g.adjacent(y, z)) continue;
            auto [y1, y2] = g.points[y];
            auto [z1, z2] = g.points[z];
            if (inv[y2] == y1 || inv[z2] == y1) ++acc;
            if (inv[y2] == z1 || inv[z2] == z1) ++acc;
        }
    return BigNat(acc);
}

std::string to_string(IneqStatus s) {
    switch (s) {
        case IneqStatus::holds: return "holds";
        case IneqStatus::exempt: return "exempt";
        case IneqStatus::not_applicable: return "not-applicable";
        case IneqStatus::violated: return "VIOLATED";
    }
    return "?";
}

namespace {

// adjacency matrices of the four exceptional graphs, as edge lists
const std::vector<std::pair<int, int>> k2k2_edges{{0, 1}, {2, 3}};
const std::vector<std::pair<int, int>> p4_edges{{0, 1}, {1, 2}, {2, 3}};
const std::vector<std::pair<int, int>> p5_edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
const std::vector<std::pair<int, int>> c4k1_edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};

bool iso_to(const IntGraph& g, int verts, const std::vector<std::pair<int, int>>& edges) {
    if (g.order() != verts) return false;
    std::vector<std::uint64_t> target(verts, 0);
    for (auto [u, v] : edges) {
        target[u] |= std::uint64_t(1) << v;
        target[v] |= std::uint64_t(1) << u;
    }
    std::vector<int> perm(verts);
    for (int i = 0; i < verts; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int u = 0; u < verts && ok; ++u)
            for (int v = u + 1; v < verts && ok; ++v)
                if (g.adjacent(u, v) != (((target[perm[u]] >> perm[v]) & 1) != 0)) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool is_exceptional(const IntGraph& g) {
    return iso_to(g, 4, k2k2_edges) || iso_to(g, 4, p4_edges) || iso_to(g, 5, p5_edges) ||
           iso_to(g, 5, c4k1_edges);
}

} // namespace

GridInequalities grid_inequality_check(const IntGraph& g) {
    std::vector<BigNat> kc = clique_counts(g, 3);
    BigNat k1 = kc[0], k2 = kc[1], k3 = kc[2];
    BigNat p3 = p3bar_count(g);
    GridInequalities r;

    BigNat threshold = 2 * k1 - 6;
    if (threshold < k1) threshold = k1;
    if (k2 >= threshold)
        r.one = IneqStatus::holds;
    else if (is_canonical(g) || is_exceptional(g))
        r.one = IneqStatus::exempt;
    else
        r.one = IneqStatus::violated;

    if (k2 >= k1)
        r.two = (k2 * (k2 - k1 + 1) >= 2 * k3 + 1) ? IneqStatus::holds : IneqStatus::violated;
    else
        r.two = IneqStatus::not_applicable;

    if (!is_canonical(g)) {
        BigRat lhs(k2 * (k2 - k1 + 1) + p3 - k3);
        r.three = (lhs >= make_rat(k1 * k2, BigNat(50))) ? IneqStatus::holds : IneqStatus::violated;
        r.three_strong = lhs >= make_rat(k1 * k2, BigNat(12));
    } else {
        r.three = IneqStatus::not_applicable;
        r.three_strong = true;
    }
    return r;
}

namespace {

using GridMask = std::uint64_t;

// bit (r-1)*kmax + (c-1); the orbit representative minimises the sorted
// point list, i.e. has the lowest differing bit set
bool mask_less(GridMask a, GridMask b) {
    if (a == b) return false;
    GridMask diff = a ^ b;
    return (a >> __builtin_ctzll(diff)) & 1;
}

GridMask swap_rows(GridMask m, int r1, int r2, int kmax) {
    GridMask row_bits = (kmax == 64) ? ~GridMask(0) : ((GridMask(1) << kmax) - 1);
    GridMask a = (m >> (r1 * kmax)) & row_bits;
    GridMask b = (m >> (r2 * kmax)) & row_bits;
    m &= ~(row_bits << (r1 * kmax));
    m &= ~(row_bits << (r2 * kmax));
    m |= b << (r1 * kmax);
    m |= a << (r2 * kmax);
    return m;
}

GridMask swap_cols(GridMask m, int c1, int c2, int kmax) {
    GridMask out = 0;
    for (int r = 0; r < kmax; ++r) {
        GridMask row = (m >> (r * kmax)) & ((GridMask(1) << kmax) - 1);
        GridMask b1 = (row >> c1) & 1, b2 = (row >> c2) & 1;
        row &= ~((GridMask(1) << c1) | (GridMask(1) << c2));
        row |= b2 << c1;
        row |= b1 << c2;
        out |= row << (r * kmax);
    }
    return out;
}

GridMask transpose(GridMask m, int kmax) {
    GridMask out = 0;
    while (m) {
        int b = __builtin_ctzll(m);
        m &= m - 1;
        int r = b / kmax, c = b % kmax;
        out |= GridMask(1) << (c * kmax + r);
    }
    return out;
}

void enumerate_masks(int kmax, int max_points, std::vector<GridMask>& out) {
    // all subsets of the kmax x kmax grid with 1..max_points cells
    int cells = kmax * kmax;
    std::vector<int> idx;
    auto rec = [&](auto&& self, int from, int remaining) -> void {
        if (!idx.empty()) {
            GridMask m = 0;
            for (int b : idx) m |= GridMask(1) << b;
            out.push_back(m);
        }
        if (remaining == 0) return;
        for (int b = from; b < cells; ++b) {
            idx.push_back(b);
            self(self, b + 1, remaining - 1);
            idx.pop_back();
        }
    };
    rec(rec, 0, max_points);
}

} // namespace

unsigned long grid_mask_universe_size(int k1_max) {
    BigNat total = 0;
    for (int i = 1; i <= k1_max; ++i) total += binom(k1_max * k1_max, i);
    return total.get_ui();
}

std::vector<std::vector<std::pair<int, int>>> enumerate_grid_graphs(int k1_max) {
    if (k1_max < 1 || k1_max > 6) throw std::length_error("enumerate_grid_graphs: cap is 6");
    int kmax = k1_max;

    std::vector<GridMask> universe;
    enumerate_masks(kmax, k1_max, universe);
    std::sort(universe.begin(), universe.end());

    auto index_of = [&universe](GridMask m) -> size_t {
        return static_cast<size_t>(
            std::lower_bound(universe.begin(), universe.end(), m) - universe.begin());
    };

    std::vector<bool> visited(universe.size(), false);
    std::vector<GridMask> reps;

    for (size_t start = 0; start < universe.size(); ++start) {
        if (visited[start]) continue;
        // breadth-first orbit walk: adjacent row/column transpositions and
        // the transpose generate the full symmetry group
        GridMask best = universe[start];
        std::deque<GridMask> queue{universe[start]};
        visited[start] = true;
        while (!queue.empty()) {
            GridMask cur = queue.front();
            queue.pop_front();
            if (mask_less(cur, best)) best = cur;
            auto push = [&](GridMask nb) {
                size_t i = index_of(nb);
                if (!visited[i]) {
                    visited[i] = true;
                    queue.push_back(nb);
                }
            };
            for (int r = 0; r + 1 < kmax; ++r) push(swap_rows(cur, r, r + 1, kmax));
            for (int c = 0; c + 1 < kmax; ++c) push(swap_cols(cur, c, c + 1, kmax));
            push(transpose(cur, kmax));
        }
        reps.push_back(best);
    }

    std::vector<std::vector<std::pair<int, int>>> out;
    out.reserve(reps.size());
    for (GridMask m : reps) {
        std::vector<std::pair<int, int>> pts;
        while (m) {
            int b = __builtin_ctzll(m);
            m &= m - 1;
            pts.push_back({b / kmax + 1, b % kmax + 1});
        }
        out.push_back(std::move(pts));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

} // namespace supersat
