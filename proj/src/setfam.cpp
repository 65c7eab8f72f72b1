#include "supersat/setfam.hpp"

#include "supersat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

namespace supersat {

std::vector<int> mask_elements(SetMask m) {
    std::vector<int> out;
    while (m) {
        int b = __builtin_ctzll(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

SetMask mask_from_elements(const std::vector<int>& elems) {
    SetMask m = 0;
    for (int e : elems) {
        if (e < 1 || e > 64) throw std::invalid_argument("element out of [1,64]");
        SetMask bit = SetMask(1) << (e - 1);
        if (m & bit) throw std::invalid_argument("repeated element");
        m |= bit;
    }
    return m;
}

bool lex_less(SetMask a, SetMask b) {
    // compare increasing element sequences; for equal-size sets this is
    // decided by the lowest bit of the symmetric difference
    if (a == b) return false;
    if (popcount(a) == popcount(b)) {
        SetMask diff = a ^ b;
        return (a >> __builtin_ctzll(diff)) & 1;
    }
    std::vector<int> ea = mask_elements(a), eb = mask_elements(b);
    return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

SetFamily make_family(int n, int k, std::vector<SetMask> members) {
    if (n < 1 || n > 64) throw std::invalid_argument("ground set must satisfy 1 <= n <= 64");
    if (k < 1 || k > n) throw std::invalid_argument("uniformity must satisfy 1 <= k <= n");
    SetMask full = (n == 64) ? ~SetMask(0) : ((SetMask(1) << n) - 1);
    for (SetMask m : members) {
        if (m & ~full) throw std::invalid_argument("set leaves the ground set");
        if (popcount(m) != k) throw std::invalid_argument("set is not k-uniform");
    }
    std::sort(members.begin(), members.end(), lex_less);
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("duplicate member");
    SetFamily f;
    f.n = n;
    f.k = k;
    f.members = std::move(members);
    return f;
}

namespace {

// first k-set in lex order, {1..k}
SetMask first_kset(int k) { return (k == 64) ? ~SetMask(0) : ((SetMask(1) << k) - 1); }

// successor in the lex order on increasing element sequences
bool next_kset_lex(std::vector<int>& e, int n) {
    int k = static_cast<int>(e.size());
    for (int i = k - 1; i >= 0; --i) {
        if (e[i] < n - (k - 1 - i)) {
            ++e[i];
            for (int j = i + 1; j < k; ++j) e[j] = e[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

SetFamily lex_segment(int n, int k, const BigNat& s) {
    if (n < 1 || n > 64 || k < 1 || k > n) throw std::invalid_argument("lex_segment: bad (n,k)");
    if (s < 0 || s > binom(n, k)) throw std::out_of_range("lex_segment: s out of range");
    if (s > 50000000) throw std::length_error("lex_segment: family too large to materialize");
    SetFamily f;
    f.n = n;
    f.k = k;
    if (s == 0) return f;
    unsigned long count = s.get_ui();
    f.members.reserve(count);
    std::vector<int> e(k);
    for (int i = 0; i < k; ++i) e[i] = i + 1;
    f.members.push_back(first_kset(k));
    while (f.members.size() < count && next_kset_lex(e, n)) f.members.push_back(mask_from_elements(e));
    return f;
}

SetFamily colex_complement(int n, int k, const BigNat& s) {
    BigNat total = binom(n, k);
    if (s < 0 || s > total) throw std::out_of_range("colex_complement: s out of range");
    SetFamily seg = lex_segment(n, k, total - s);
    std::set<SetMask> drop(seg.members.begin(), seg.members.end());
    SetFamily all = lex_segment(n, k, total);
    std::vector<SetMask> keep;
    keep.reserve(s.get_ui());
    for (SetMask m : all.members)
        if (!drop.count(m)) keep.push_back(m);
    return make_family(n, k, std::move(keep));
}

BigNat disj_naive(const SetFamily& f, int workers) {
    const auto& v = f.members;
    size_t m = v.size();
    if (m < 2) return BigNat(0);
    if (workers < 1) workers = 1;
    size_t hw = std::thread::hardware_concurrency();
    workers = static_cast<int>(std::min<size_t>(workers, std::max<size_t>(hw, 1)));

    auto count_range = [&v, m](size_t lo, size_t hi, unsigned long long* out) {
        unsigned long long c = 0;
        for (size_t i = lo; i < hi; ++i) {
            SetMask a = v[i];
            for (size_t j = i + 1; j < m; ++j)
                if ((a & v[j]) == 0) ++c;
        }
        *out = c;
    };

    if (workers == 1 || m < 4096) {
        unsigned long long c = 0;
        count_range(0, m, &c);
        return BigNat(static_cast<unsigned long>(c));
    }
    // partition the triangular pair space into strips of similar area
    std::vector<unsigned long long> partial(workers, 0);
    std::vector<std::thread> threads;
    std::vector<size_t> cuts(workers + 1, 0);
    for (int w = 1; w < workers; ++w) {
        double frac = double(w) / workers;
        cuts[w] = static_cast<size_t>(m - std::sqrt(std::max(0.0, 1.0 - frac)) * m);
    }
    cuts[workers] = m;
    for (int w = 0; w < workers; ++w)
        threads.emplace_back(count_range, cuts[w], cuts[w + 1], &partial[w]);
    for (auto& t : threads) t.join();
    unsigned long long c = 0;
    for (auto p : partial) c += p;
    return BigNat(static_cast<unsigned long>(c));
}

BigNat disj_zeta(const SetFamily& f, int n_cap) {
    if (f.n > n_cap) throw std::length_error("disj_zeta: n above configured cap");
    int n = f.n;
    size_t lattice = size_t(1) << n;
    std::vector<std::uint64_t> g(lattice, 0);
    for (SetMask m : f.members) g[m] += 1;
    for (int b = 0; b < n; ++b) {
        SetMask bit = SetMask(1) << b;
        for (size_t m = 0; m < lattice; ++m)
            if (m & bit) g[m] += g[m ^ bit];
    }
    SetMask full = lattice - 1;
    BigNat ordered = 0;
    unsigned long long acc = 0;
    for (SetMask m : f.members) {
        acc += g[~m & full];
        if (acc > (1ULL << 62)) {
            ordered += BigNat(static_cast<unsigned long>(acc));
            acc = 0;
        }
    }
    ordered += BigNat(static_cast<unsigned long>(acc));
    return ordered / 2;
}

BigNat disj_cross_naive(const SetFamily& f, const SetFamily& g) {
    if (f.n != g.n) throw std::invalid_argument("disj_cross_naive: ground sets differ");
    unsigned long long c = 0;
    for (SetMask a : f.members)
        for (SetMask b : g.members)
            if ((a & b) == 0) ++c;
    return BigNat(static_cast<unsigned long>(c));
}

BigNat disj_lex_formula(long n, long k, const BigNat& s) {
    BigNat total = binom(n, k);
    if (s < 0 || s > total) throw std::out_of_range("disj_lex_formula: s out of range");
    // r minimal with s <= C(n,k) - C(n-r,k)
    long r = 0;
    while (s > total - binom(n - r, k)) ++r;
    BigNat acc = 0;
    for (long i = 1; i <= r - 1; ++i)
        acc += (s - (total - binom(n - i, k))) * binom(n - i - k, k - 1);
    return acc;
}

BigRat star_upper_bound(long n, long k, long r, const BigRat& gamma) {
    if (r < 1) throw std::invalid_argument("star_upper_bound: r must be >= 1");
    BigRat head = BigRat(binom(r - 1, 2)) + BigRat(r - 1) * gamma;
    return head * BigRat(binom(n - 1, k - 1)) * BigRat(binom(n - k - 1, k - 1));
}

BigRat quad_upper_bound(const BigRat& s, long r) {
    if (r < 1) throw std::invalid_argument("quad_upper_bound: r must be >= 1");
    return make_rat(1, 2) * (BigRat(1) - make_rat(1, r)) * s * s;
}

BigNat ball_inner_size(long n, long k, long ell, long r) {
    BigNat acc = 0;
    for (long t = ell; t <= std::min(k, r); ++t) acc += binom(r, t) * binom(n - r, k - t);
    return acc;
}

SetFamily ell_ball_inner(int n, int k, int ell, int r) {
    std::vector<SetMask> members;
    SetMask prefix = (r == 0) ? 0 : ((r == 64) ? ~SetMask(0) : ((SetMask(1) << r) - 1));
    SetFamily all = lex_segment(n, k, binom(n, k));
    for (SetMask m : all.members)
        if (popcount(m & prefix) >= ell) members.push_back(m);
    return make_family(n, k, std::move(members));
}

SetFamily ell_ball(int n, int k, int ell, const BigNat& s) {
    if (ell < 1 || ell > k) throw std::invalid_argument("ell_ball: need 1 <= ell <= k");
    if (s < 0 || s > binom(n, k)) throw std::out_of_range("ell_ball: s out of range");
    // largest r with |inner(r)| <= s; then s <= |inner(r+1)| automatically
    int r = -1;
    for (int cand = 0; cand <= n; ++cand)
        if (ball_inner_size(n, k, ell, cand) <= s) r = cand;
    if (r < 0) throw std::domain_error("ell_ball: no valid r for (ell,s)");

    SetMask prefix = (r == 0) ? 0 : ((SetMask(1) << r) - 1);
    SetMask next_bit = (r < n) ? (SetMask(1) << r) : 0;
    std::vector<SetMask> members;
    std::vector<SetMask> boundary;
    SetFamily all = lex_segment(n, k, binom(n, k));
    for (SetMask m : all.members) {
        int inner = popcount(m & prefix);
        if (inner >= ell)
            members.push_back(m);
        else if (next_bit && (m & next_bit) && inner == ell - 1)
            boundary.push_back(m);
    }
    BigNat need = s - BigNat(static_cast<unsigned long>(members.size()));
    if (need < 0 || need > BigNat(static_cast<unsigned long>(boundary.size())))
        throw std::domain_error("ell_ball: boundary cannot reach requested size");
    // `all` is already in lex order, hence so is `boundary`
    for (unsigned long i = 0; i < need.get_ui(); ++i) members.push_back(boundary[i]);
    return make_family(n, k, std::move(members));
}

SetFamily counterexample_family(int k) {
    if (k < 2) throw std::invalid_argument("counterexample_family: k must be >= 2");
    int n = 3 * k - 1;
    if (n > 64) throw std::invalid_argument("counterexample_family: ground set exceeds 64");
    std::vector<int> a_elems{1};
    for (int e = 2 * k + 1; e <= 3 * k - 1; ++e) a_elems.push_back(e);
    SetMask removed = mask_from_elements(a_elems);

    std::vector<SetMask> members;
    SetFamily star = ell_ball_inner(n, k, 1, 1); // all k-sets containing 1
    for (SetMask m : star.members)
        if (m != removed) members.push_back(m);
    // all k-subsets of {2,...,2k}
    std::vector<int> e(k);
    for (int i = 0; i < k; ++i) e[i] = i + 2;
    while (true) {
        members.push_back(mask_from_elements(e));
        int kk = k;
        bool moved = false;
        for (int i = kk - 1; i >= 0 && !moved; --i) {
            if (e[i] < 2 * k - (kk - 1 - i)) {
                ++e[i];
                for (int j = i + 1; j < kk; ++j) e[j] = e[j - 1] + 1;
                moved = true;
            }
        }
        if (!moved) break;
    }
    return make_family(n, k, std::move(members));
}

KneserParams kneser_params(long m, long a) {
    if (m < 2 * a) throw std::invalid_argument("kneser_params: need m >= 2a");
    KneserParams p;
    p.vertices = binom(m, a);
    p.degree = binom(m - a, a);
    p.lambda = binom(m - a - 1, a - 1);
    return p;
}

MixingGap expander_mixing_gap(long m, long a, const SetFamily& S, const SetFamily& T) {
    KneserParams kp = kneser_params(m, a);
    if ((S.n != m && !S.members.empty()) || (T.n != m && !T.members.empty()))
        throw std::invalid_argument("expander_mixing_gap: family ground set differs from m");
    // ordered pairs (u,v), u in S, v in T, u disjoint from v
    unsigned long long e = 0;
    for (SetMask u : S.members)
        for (SetMask v : T.members)
            if ((u & v) == 0) ++e;
    BigNat st = BigNat(static_cast<unsigned long>(S.size())) * BigNat(static_cast<unsigned long>(T.size()));
    BigRat expectation = make_rat(kp.degree * st, kp.vertices);
    MixingGap g;
    g.gap = abs_rat(BigRat(BigNat(static_cast<unsigned long>(e))) - expectation);
    g.bound = std::sqrt(to_double(BigRat(st))) * kp.lambda.get_d();
    g.holds = g.gap * g.gap <= BigRat(kp.lambda * kp.lambda * st);
    return g;
}

BigRat cross_disj_lower(long n, long k, const BigNat& size_i, const BigNat& size_j) {
    if (k < 1 || n < k) throw std::invalid_argument("cross_disj_lower: need 1 <= k <= n");
    BigRat main = (BigRat(1) - make_rat(k * k, n)) * BigRat(size_i) * BigRat(size_j);
    BigRat err = make_rat(3 * k, 2 * n) * BigRat(size_i + size_j) * BigRat(binom(n - 1, k - 1));
    return main - err;
}

KneserSpectrumCheck kneser_spectrum_check(long m, long a) {
    if (m > 8) throw std::length_error("kneser_spectrum_check: m capped at 8");
    KneserParams kp = kneser_params(m, a);
    SetFamily level = lex_segment(static_cast<int>(m), static_cast<int>(a), kp.vertices);
    size_t verts = level.size();
    std::vector<double> mat(verts * verts, 0.0);
    for (size_t i = 0; i < verts; ++i)
        for (size_t j = i + 1; j < verts; ++j)
            if ((level.members[i] & level.members[j]) == 0)
                mat[i * verts + j] = mat[j * verts + i] = 1.0;
    std::vector<double> eig = jacobi_eigenvalues(std::move(mat), static_cast<int>(verts));

    double degree = kp.degree.get_d();
    // drop one copy of the degree (the trivial eigenvalue), then take the
    // largest remaining absolute value
    bool dropped = false;
    double extreme = 0;
    for (double v : eig) {
        if (!dropped && std::abs(v - degree) <= 1e-6 * std::max(1.0, degree)) {
            dropped = true;
            continue;
        }
        extreme = std::max(extreme, std::abs(v));
    }
    KneserSpectrumCheck r;
    r.extreme = extreme;
    r.expected = kp.lambda.get_d();
    r.ok = dropped && std::abs(r.extreme - r.expected) <= 1e-6 * std::max(1.0, r.expected);
    return r;
}

NearestStars nearest_star_union(const SetFamily& f, int ell, const BigNat& center_cap) {
    if (ell < 1 || ell > f.n) throw std::invalid_argument("nearest_star_union: bad ell");
    if (binom(f.n, ell) > center_cap) throw std::length_error("nearest_star_union: center cap exceeded");

    BigNat family_size(static_cast<unsigned long>(f.size()));
    NearestStars best;
    bool have = false;
    std::vector<int> centers(ell);
    for (int i = 0; i < ell; ++i) centers[i] = i + 1;
    while (true) {
        SetMask cm = mask_from_elements(centers);
        unsigned long long meet = 0;
        for (SetMask m : f.members)
            if (m & cm) ++meet;
        BigNat union_size = binom(f.n, f.k) - binom(f.n - ell, f.k);
        BigNat dist = family_size + union_size - 2 * BigNat(static_cast<unsigned long>(meet));
        if (!have || dist < best.distance) {
            best.centers = centers;
            best.distance = dist;
            have = true;
        }
        if (!next_kset_lex(centers, f.n)) break;
    }
    return best;
}

} // namespace supersat
