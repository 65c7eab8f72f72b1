#include "supersat/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace supersat {

namespace {

using Clock = std::chrono::steady_clock;

struct SweepState {
    int nverts = 0;
    const std::vector<std::uint64_t>* adj = nullptr;
    std::vector<long> best;                       // min disj per cardinality
    std::vector<unsigned long long> count;        // minimizers per cardinality
    std::vector<std::vector<std::uint64_t>> samples;
    int sample_cap = 100;
};

void sweep_rec(SweepState& st, int v, std::uint64_t chosen, int size, long disj) {
    if (v == st.nverts) {
        long& b = st.best[size];
        if (disj < b) {
            b = disj;
            st.count[size] = 1;
            st.samples[size].assign(1, chosen);
        } else if (disj == b) {
            ++st.count[size];
            if (static_cast<int>(st.samples[size].size()) < st.sample_cap)
                st.samples[size].push_back(chosen);
        }
        return;
    }
    sweep_rec(st, v + 1, chosen, size, disj);
    long add = __builtin_popcountll((*st.adj)[v] & chosen);
    sweep_rec(st, v + 1, chosen | (std::uint64_t(1) << v), size + 1, disj + add);
}

std::vector<int> mask_indices(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(__builtin_ctzll(m));
        m &= m - 1;
    }
    return out;
}

std::vector<MinimizerReport> sweep_reports(const std::vector<std::uint64_t>& adj, int nverts,
                                           const std::string& kind, long n, long k,
                                           int sample_cap,
                                           const std::function<BigNat(long)>& construction) {
    SweepState st;
    st.nverts = nverts;
    st.adj = &adj;
    st.best.assign(nverts + 1, std::numeric_limits<long>::max());
    st.count.assign(nverts + 1, 0);
    st.samples.assign(nverts + 1, {});
    st.sample_cap = sample_cap;
    auto t0 = Clock::now();
    sweep_rec(st, 0, 0, 0, 0);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();

    std::vector<MinimizerReport> out;
    for (int s = 0; s <= nverts; ++s) {
        MinimizerReport r;
        r.kind = kind;
        r.n = n;
        r.k = k;
        r.s = s;
        r.minimum = st.best[s];
        r.num_minimizers = BigNat(static_cast<unsigned long>(st.count[s]));
        r.counted = true;
        for (std::uint64_t m : st.samples[s]) r.sample_minimizers.push_back(mask_indices(m));
        r.construction_value = construction(s);
        r.construction_optimal = r.construction_value == r.minimum;
        r.exhaustive = true;
        r.seconds = secs;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

std::vector<MinimizerReport> min_disj_sets_sweep(int n, int k, int sample_cap) {
    BigNat verts = binom(n, k);
    if (verts > 24) throw std::length_error("min_disj_sets_sweep: C(n,k) above 24");
    std::vector<SetMask> universe = lex_segment(n, k, verts).members;
    int m = static_cast<int>(universe.size());
    std::vector<std::uint64_t> adj(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && (universe[i] & universe[j]) == 0) adj[i] |= std::uint64_t(1) << j;
    return sweep_reports(adj, m, "sets", n, k, sample_cap,
                         [n, k](long s) { return disj_lex_formula(n, k, BigNat(s)); });
}

std::vector<MinimizerReport> min_disj_perms_sweep(int n, int sample_cap) {
    if (n > 4) throw std::length_error("min_disj_perms_sweep: n above 4");
    std::vector<Perm> perms = all_perms(n);
    int m = static_cast<int>(perms.size());
    std::vector<std::uint64_t> packed(m);
    for (int i = 0; i < m; ++i) packed[i] = pack_perm(perms[i]);
    std::vector<std::uint64_t> adj(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && (packed[i] & packed[j]) == 0) adj[i] |= std::uint64_t(1) << j;
    return sweep_reports(adj, m, "perms", n, 0, sample_cap,
                         [n](long s) { return disj_perm_formula(n, BigNat(s)); });
}

void dedup_samples_up_to_relabeling(MinimizerReport& report) {
    if (report.kind != "sets" || report.sample_minimizers.empty()) return;
    int n = static_cast<int>(report.n);
    int k = static_cast<int>(report.k);
    std::vector<SetMask> universe = lex_segment(n, k, binom(n, k)).members;
    std::vector<int> relabel(n);
    std::set<std::vector<SetMask>> seen;
    std::vector<std::vector<int>> kept;
    for (const auto& fam : report.sample_minimizers) {
        std::vector<SetMask> canon;
        for (int i = 0; i < n; ++i) relabel[i] = i;
        do {
            std::vector<SetMask> image;
            for (int idx : fam) {
                SetMask src = universe[idx], dst = 0;
                while (src) {
                    int b = __builtin_ctzll(src);
                    src &= src - 1;
                    dst |= SetMask(1) << relabel[b];
                }
                image.push_back(dst);
            }
            std::sort(image.begin(), image.end());
            if (canon.empty() || image < canon) canon = image;
        } while (std::next_permutation(relabel.begin(), relabel.end()));
        if (seen.insert(canon).second) kept.push_back(fam);
    }
    report.sample_minimizers = std::move(kept);
}

namespace {

struct BnbState {
    const std::vector<std::uint64_t>* adj = nullptr;
    int nverts = 0;
    int target = 0;
    long incumbent = 0;
    bool found_below = false;
    std::uint64_t witness = 0;
    Clock::time_point deadline;
    bool budgeted = false;
    bool expired = false;
    unsigned long long ticks = 0;
};

void bnb_rec(BnbState& st, int v, std::uint64_t chosen, int size, long disj) {
    if (disj >= st.incumbent) return;
    if (size == st.target) {
        st.incumbent = disj;
        st.witness = chosen;
        st.found_below = true;
        return;
    }
    if (v == st.nverts || st.nverts - v < st.target - size) return;
    if (st.budgeted && ((++st.ticks & 0xFFFF) == 0) && Clock::now() > st.deadline) {
        st.expired = true;
        return;
    }
    if (st.expired) return;
    // take v first: constructions cluster at the lex front
    long add = __builtin_popcountll((*st.adj)[v] & chosen);
    bnb_rec(st, v + 1, chosen | (std::uint64_t(1) << v), size + 1, disj + add);
    bnb_rec(st, v + 1, chosen, size, disj);
}

} // namespace

MinimizerReport min_disj_sets(int n, int k, const BigNat& s, double time_budget_s) {
    BigNat verts = binom(n, k);
    if (verts > 64) throw std::length_error("min_disj_sets: C(n,k) above 64");
    std::vector<SetMask> universe = lex_segment(n, k, verts).members;
    int m = static_cast<int>(universe.size());
    if (s < 0 || s > verts) throw std::out_of_range("min_disj_sets: s out of range");
    std::vector<std::uint64_t> adj(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && (universe[i] & universe[j]) == 0) adj[i] |= std::uint64_t(1) << j;

    MinimizerReport r;
    r.kind = "sets";
    r.n = n;
    r.k = k;
    r.s = s;
    r.construction_value = disj_lex_formula(n, k, s);

    auto t0 = Clock::now();
    BnbState st;
    st.adj = &adj;
    st.nverts = m;
    st.target = static_cast<int>(s.get_ui());
    st.incumbent = r.construction_value.get_si() + 1; // lex value reachable
    st.budgeted = time_budget_s > 0;
    st.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(time_budget_s));
    bnb_rec(st, 0, 0, 0, 0);
    r.exhaustive = !st.expired;
    r.minimum = st.found_below ? BigNat(st.incumbent) : r.construction_value;
    r.construction_optimal = r.minimum == r.construction_value;
    if (st.found_below && r.minimum < r.construction_value)
        r.sample_minimizers.push_back(mask_indices(st.witness));
    r.counted = false;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

MinimizerReport min_disj_perms(int n, const BigNat& s, double time_budget_s) {
    if (n > 4) throw std::length_error("min_disj_perms: n above 4");
    std::vector<Perm> perms = all_perms(n);
    int m = static_cast<int>(perms.size());
    if (s < 0 || s > m) throw std::out_of_range("min_disj_perms: s out of range");
    std::vector<std::uint64_t> packed(m);
    for (int i = 0; i < m; ++i) packed[i] = pack_perm(perms[i]);
    std::vector<std::uint64_t> adj(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && (packed[i] & packed[j]) == 0) adj[i] |= std::uint64_t(1) << j;

    MinimizerReport r;
    r.kind = "perms";
    r.n = n;
    r.s = s;
    r.construction_value = disj_perm_formula(n, s);

    auto t0 = Clock::now();
    BnbState st;
    st.adj = &adj;
    st.nverts = m;
    st.target = static_cast<int>(s.get_ui());
    st.incumbent = r.construction_value.get_si() + 1;
    st.budgeted = time_budget_s > 0;
    st.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(time_budget_s));
    bnb_rec(st, 0, 0, 0, 0);
    r.exhaustive = !st.expired;
    r.minimum = st.found_below ? BigNat(st.incumbent) : r.construction_value;
    r.construction_optimal = r.minimum == r.construction_value;
    if (st.found_below && r.minimum < r.construction_value)
        r.sample_minimizers.push_back(mask_indices(st.witness));
    r.counted = false;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

bool duality_check(int n, int k) {
    BigNat verts = binom(n, k);
    if (verts > 20) throw std::length_error("duality_check: 2^C(n,k) not enumerable");
    std::vector<SetMask> universe = lex_segment(n, k, verts).members;
    int m = static_cast<int>(universe.size());
    std::vector<std::uint64_t> adj(m, 0);
    long degree = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j)
            if (i != j && (universe[i] & universe[j]) == 0) adj[i] |= std::uint64_t(1) << j;
        degree = std::max(degree, long(__builtin_popcountll(adj[i])));
    }
    for (int i = 0; i < m; ++i)
        if (__builtin_popcountll(adj[i]) != degree) return false; // not regular

    long total_edges = m * degree / 2;
    std::vector<long> min_e(m + 1, std::numeric_limits<long>::max());
    std::vector<std::set<std::uint64_t>> argmin(m + 1);
    std::uint64_t full = (m == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << m) - 1);
    for (std::uint64_t sub = 0;; ++sub) {
        long e = 0;
        std::uint64_t t = sub;
        while (t) {
            int v = __builtin_ctzll(t);
            t &= t - 1;
            e += __builtin_popcountll(adj[v] & sub & ((std::uint64_t(1) << v) - 1));
        }
        int size = __builtin_popcountll(sub);
        if (e < min_e[size]) {
            min_e[size] = e;
            argmin[size] = {sub};
        } else if (e == min_e[size]) {
            argmin[size].insert(sub);
        }
        if (sub == full) break;
    }

    for (int s = 0; s <= m; ++s) {
        // identity e(V\S) = e(G) - d s + e(S) forces the minima to align
        if (min_e[m - s] != total_edges - degree * s + min_e[s]) return false;
        std::set<std::uint64_t> complements;
        for (std::uint64_t a : argmin[s]) complements.insert(full & ~a);
        if (complements != argmin[m - s]) return false;
    }
    return true;
}

std::pair<BigNat, BigNat> counterexample_closed_forms(int k) {
    BigNat disj_lex = (binom(2 * k - 1, k) - 1) * binom(2 * k - 2, k - 1);
    BigNat gap = (binom(2 * k - 1, k) - 1) - (binom(2 * k - 2, k - 1) - 1);
    return {disj_lex, gap};
}

CounterexampleTable verify_counterexample(int k) {
    if (k < 5 || k > 8)
        throw std::out_of_range("verify_counterexample: direct counting supports 5 <= k <= 8");
    CounterexampleTable t;
    t.k = k;
    t.n = 3 * k - 1;
    t.s = binom(t.n - 1, k - 1) + binom(2 * k - 1, k) - 1;

    SetFamily f = counterexample_family(k);
    t.disj_family = disj_zeta(f);
    auto [lex_value, gap] = counterexample_closed_forms(k);
    t.disj_lex = lex_value;
    t.expected_gap = gap;
    t.family_beats_lex = t.disj_family < t.disj_lex;

    t.lex_beats_balls = true;
    for (int ell = 2; ell <= k; ++ell) {
        BallRow row;
        row.ell = ell;
        SetFamily ball = ell_ball(t.n, k, ell, t.s);
        row.disj = disj_zeta(ball);
        int r = -1;
        for (int cand = 0; cand <= t.n; ++cand)
            if (ball_inner_size(t.n, k, ell, cand) <= t.s) r = cand;
        row.radius = r;
        SetFamily inner = ell_ball_inner(t.n, k, ell, r);
        row.inner_size = BigNat(static_cast<unsigned long>(inner.size()));
        row.inner_disj = disj_zeta(inner);
        if (!(row.disj > t.disj_lex)) t.lex_beats_balls = false;
        t.balls.push_back(std::move(row));
    }
    return t;
}

} // namespace supersat
