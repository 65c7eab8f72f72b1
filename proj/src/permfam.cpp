#include "supersat/permfam.hpp"

#include "supersat/spectral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace supersat {

Perm identity_perm(int n) {
    Perm p;
    p.img.resize(n);
    for (int i = 0; i < n; ++i) p.img[i] = i + 1;
    return p;
}

bool is_perm(const Perm& p) {
    int n = p.n();
    std::vector<bool> seen(n + 1, false);
    for (int v : p.img) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

bool perm_disjoint(const Perm& a, const Perm& b) {
    if (a.n() != b.n()) throw std::invalid_argument("perm_disjoint: size mismatch");
    for (int i = 0; i < a.n(); ++i)
        if (a.img[i] == b.img[i]) return false;
    return true;
}

std::uint64_t pack_perm(const Perm& p) {
    int n = p.n();
    if (n > 8) throw std::length_error("pack_perm: needs n <= 8");
    std::uint64_t m = 0;
    for (int i = 0; i < n; ++i) m |= std::uint64_t(1) << (i * n + (p.img[i] - 1));
    return m;
}

PermFamily make_perm_family(int n, std::vector<Perm> members) {
    for (const Perm& p : members) {
        if (p.n() != n || !is_perm(p)) throw std::invalid_argument("not a permutation of [n]");
    }
    std::sort(members.begin(), members.end(),
              [](const Perm& a, const Perm& b) { return a.img < b.img; });
    for (size_t i = 1; i < members.size(); ++i)
        if (members[i].img == members[i - 1].img) throw std::invalid_argument("duplicate member");
    PermFamily f;
    f.n = n;
    f.members = std::move(members);
    return f;
}

std::vector<Perm> all_perms(int n, int enum_cap) {
    if (n < 1) throw std::invalid_argument("all_perms: n must be >= 1");
    if (n > enum_cap) throw std::length_error("all_perms: enumeration cap exceeded");
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.img.begin(), p.img.end()));
    return out;
}

CosetSpec make_coset_spec(int n, std::vector<std::pair<int, int>> points) {
    std::set<std::pair<int, int>> seen;
    for (auto& pt : points) {
        if (pt.first < 1 || pt.first > n || pt.second < 1 || pt.second > n)
            throw std::invalid_argument("coset point outside [n]^2");
        if (!seen.insert(pt).second) throw std::invalid_argument("duplicate coset point");
    }
    CosetSpec s;
    s.n = n;
    s.points = std::move(points);
    return s;
}

CliqueLabel make_clique(std::vector<std::pair<int, int>> points) {
    std::set<int> rows, cols;
    for (auto& pt : points) {
        if (!rows.insert(pt.first).second) throw std::invalid_argument("clique rows not distinct");
        if (!cols.insert(pt.second).second) throw std::invalid_argument("clique columns not distinct");
    }
    CliqueLabel c;
    c.points = std::move(points);
    return c;
}

bool spec_contains_perm(const CosetSpec& spec, const Perm& p) {
    for (auto [i, j] : spec.points)
        if (p(i) == j) return true;
    return false;
}

PermFamily coset_members(int n, int i, int j, int enum_cap) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("coset point outside [n]^2");
    std::vector<Perm> mem;
    for (const Perm& p : all_perms(n, enum_cap))
        if (p(i) == j) mem.push_back(p);
    return make_perm_family(n, std::move(mem));
}

PermFamily union_members(const CosetSpec& spec, int enum_cap) {
    std::vector<Perm> mem;
    for (const Perm& p : all_perms(spec.n, enum_cap))
        if (spec_contains_perm(spec, p)) mem.push_back(p);
    return make_perm_family(spec.n, std::move(mem));
}

PermFamily lex_perm_segment(int n, const BigNat& s, int enum_cap) {
    if (s < 0 || s > factorial(n)) throw std::out_of_range("lex_perm_segment: s out of range");
    if (n > enum_cap) throw std::length_error("lex_perm_segment: enumeration cap exceeded");
    unsigned long want = s.get_ui();
    std::vector<Perm> mem;
    mem.reserve(want);
    Perm p = identity_perm(n);
    while (mem.size() < want) {
        mem.push_back(p);
        if (!std::next_permutation(p.img.begin(), p.img.end())) break;
    }
    PermFamily f;
    f.n = n;
    f.members = std::move(mem); // generated in lex order already
    return f;
}

BigNat disj_perm(const PermFamily& f) {
    size_t m = f.size();
    if (m < 2) return BigNat(0);
    unsigned long long c = 0;
    if (f.n <= 8) {
        std::vector<std::uint64_t> packed(m);
        for (size_t i = 0; i < m; ++i) packed[i] = pack_perm(f.members[i]);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                if ((packed[i] & packed[j]) == 0) ++c;
    } else {
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                if (perm_disjoint(f.members[i], f.members[j])) ++c;
    }
    return BigNat(static_cast<unsigned long>(c));
}

BigNat disj_perm_one(const Perm& p, const PermFamily& f) {
    unsigned long long c = 0;
    for (const Perm& q : f.members)
        if (perm_disjoint(p, q)) ++c;
    return BigNat(static_cast<unsigned long>(c));
}

BigNat disj_perm_formula(long n, const BigNat& s) {
    if (s < 0 || s > factorial(n)) throw std::out_of_range("disj_perm_formula: s out of range");
    BigNat block = factorial(n - 1);
    BigNat ell = s / block;
    BigNat r = s - ell * block;
    DerangementTable dt = derangements(std::max(1L, n - 1));
    const BigNat& D = dt.D[n - 1];
    BigNat pairs = (ell * (ell - 1)) / 2;
    return pairs * block * D + ell * r * D;
}

BigNat exact_intersection_size(const CliqueLabel& x, long n) {
    if (static_cast<long>(x.size()) > n) throw std::invalid_argument("clique larger than n");
    return factorial(n - static_cast<long>(x.size()));
}

long clique_overlap_defect(const Perm& pi, const CliqueLabel& x) {
    // c = l - |{rows} cap {pi^{-1}(cols)}|; pi^{-1}(j) in rows <=> pi(row) = j
    std::set<int> rows;
    for (auto [i, j] : x.points) rows.insert(i);
    long hit = 0;
    for (auto [i, j] : x.points) {
        (void)i;
        for (int r : rows)
            if (pi(r) == j) {
                ++hit;
                break;
            }
    }
    return static_cast<long>(x.size()) - hit;
}

BigNat clique_disj_count(long n, long l, long c, const FactorialTable& fact) {
    BigInt acc = 0;
    BigNat coeff = 1; // C(n-l-c, i)
    long m = n - l - c;
    for (long i = 0; i <= m; ++i) {
        BigInt term = coeff * fact(n - l - i);
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
        coeff = coeff * (m - i) / (i + 1);
    }
    return acc;
}

BigNat exact_disj_to_clique(const Perm& pi, const CliqueLabel& x, const FactorialTable& fact) {
    for (auto [i, j] : x.points)
        if (pi(i) == j) throw std::invalid_argument("exact_disj_to_clique: pi lies in a coset of X");
    long l = static_cast<long>(x.size());
    long c = clique_overlap_defect(pi, x);
    return clique_disj_count(pi.n(), l, c, fact);
}

std::vector<CliqueLabel> spec_cliques(const CosetSpec& spec) {
    std::vector<CliqueLabel> out;
    size_t m = spec.points.size();
    std::vector<std::pair<int, int>> cur;
    auto rec = [&](auto&& self, size_t from) -> void {
        for (size_t i = from; i < m; ++i) {
            auto [r, c] = spec.points[i];
            bool ok = true;
            for (auto [r2, c2] : cur)
                if (r2 == r || c2 == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(spec.points[i]);
            CliqueLabel cl;
            cl.points = cur;
            out.push_back(cl);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

BigNat exact_disj_to_union(const Perm& pi, const CosetSpec& spec, const FactorialTable& fact,
                           AltSumMemo* memo) {
    if (spec_contains_perm(spec, pi))
        throw std::invalid_argument("exact_disj_to_union: pi lies in the union");
    BigInt acc = 0;
    for (const CliqueLabel& x : spec_cliques(spec)) {
        long l = static_cast<long>(x.size());
        long c = clique_overlap_defect(pi, x);
        BigNat v;
        if (memo) {
            auto it = memo->find({l, c});
            if (it == memo->end()) it = memo->emplace(std::pair{l, c}, clique_disj_count(pi.n(), l, c, fact)).first;
            v = it->second;
        } else {
            v = clique_disj_count(pi.n(), l, c, fact);
        }
        if (x.size() % 2 == 1)
            acc += v;
        else
            acc -= v;
    }
    return acc;
}

BigInt exact_disj_to_union_truncated(const Perm& pi, const CosetSpec& spec, long max_size,
                                     const FactorialTable& fact) {
    if (spec_contains_perm(spec, pi))
        throw std::invalid_argument("exact_disj_to_union_truncated: pi lies in the union");
    BigInt acc = 0;
    for (const CliqueLabel& x : spec_cliques(spec)) {
        if (static_cast<long>(x.size()) > max_size) continue;
        BigNat v = exact_disj_to_clique(pi, x, fact);
        if (x.size() % 2 == 1)
            acc += v;
        else
            acc -= v;
    }
    return acc;
}

bool CrossKey::operator<(const CrossKey& o) const {
    return std::tie(p, q, na, nc, fpos, uval) < std::tie(o.p, o.q, o.na, o.nc, o.fpos, o.uval);
}

namespace {

using CrossProfile = CrossKey;

// Ordered disjoint pairs between two coset intersections, by
// inclusion-exclusion over the set S of agreement positions.  Positions
// constrained on one side only can agree only on their forced value, and
// only when that value is unconstrained on the other side (na/nc count
// them); free positions take values outside both column sets.
BigNat cross_disj_by_profile(long n, const CrossProfile& pr, const FactorialTable& fact) {
    BigInt acc = 0;
    long f_top = std::min(pr.fpos, pr.uval);
    for (long alpha = 0; alpha <= pr.na; ++alpha) {
        for (long gamma = 0; gamma <= pr.nc; ++gamma) {
            BigNat falling = 1; // uval (uval-1) ... over f terms
            for (long f = 0; f <= f_top; ++f) {
                BigInt term = binom(pr.na, alpha) * binom(pr.nc, gamma) * binom(pr.fpos, f) *
                              falling * fact(n - pr.p - gamma - f) * fact(n - pr.q - alpha - f);
                if ((alpha + gamma + f) % 2 == 0)
                    acc += term;
                else
                    acc -= term;
                falling *= (pr.uval - f);
            }
        }
    }
    return acc;
}

bool cross_profile_of(const CliqueLabel& x, const CliqueLabel& y, long n, CrossProfile& out) {
    std::set<std::pair<int, int>> xpts(x.points.begin(), x.points.end());
    for (auto& pt : y.points)
        if (xpts.count(pt)) return false; // shared constraint: never disjoint
    std::map<int, int> xrow, yrow; // row -> forced column
    std::set<int> xcol, ycol;
    for (auto [r, c] : x.points) {
        xrow[r] = c;
        xcol.insert(c);
    }
    for (auto [r, c] : y.points) {
        yrow[r] = c;
        ycol.insert(c);
    }
    long na = 0, nc = 0, shared_rows = 0, shared_cols = 0;
    for (auto [r, c] : x.points) {
        if (yrow.count(r))
            ++shared_rows;
        else if (!ycol.count(c))
            ++na;
    }
    for (auto [r, c] : y.points) {
        if (!xrow.count(r) && !xcol.count(c)) ++nc;
    }
    for (int c : xcol)
        if (ycol.count(c)) ++shared_cols;
    out.p = static_cast<long>(x.size());
    out.q = static_cast<long>(y.size());
    out.na = na;
    out.nc = nc;
    out.fpos = n - (out.p + out.q - shared_rows);
    out.uval = n - (out.p + out.q - shared_cols);
    return true;
}

} // namespace

BigNat exact_cross_clique_disj(const CliqueLabel& x, const CliqueLabel& y, long n,
                               const FactorialTable& fact) {
    for (auto [r, c] : x.points)
        if (r > n || c > n) throw std::invalid_argument("clique point outside [n]^2");
    for (auto [r, c] : y.points)
        if (r > n || c > n) throw std::invalid_argument("clique point outside [n]^2");
    CrossProfile pr;
    if (!cross_profile_of(x, y, n, pr)) return BigNat(0);
    return cross_disj_by_profile(n, pr, fact);
}

BigNat exact_disj_within_union(const CosetSpec& spec, const FactorialTable& fact, size_t point_cap,
                               CrossMemo* memo) {
    if (spec.points.size() > point_cap)
        throw std::length_error("exact_disj_within_union: spec size above cap");
    std::vector<CliqueLabel> cliques = spec_cliques(spec);
    CrossMemo local;
    CrossMemo& cache = memo ? *memo : local;
    BigInt acc = 0;
    for (const CliqueLabel& x : cliques) {
        for (const CliqueLabel& y : cliques) {
            CrossProfile pr;
            if (!cross_profile_of(x, y, spec.n, pr)) continue;
            auto it = cache.find(pr);
            if (it == cache.end()) it = cache.emplace(pr, cross_disj_by_profile(spec.n, pr, fact)).first;
            if ((x.size() + y.size()) % 2 == 0)
                acc += it->second;
            else
                acc -= it->second;
        }
    }
    if (acc % 2 != 0) throw std::logic_error("exact_disj_within_union: odd ordered count");
    return acc / 2;
}

BigNat exact_membership_class_size(const CosetSpec& spec, const CliqueLabel& x,
                                   const FactorialTable& fact) {
    std::set<std::pair<int, int>> spts(spec.points.begin(), spec.points.end());
    for (auto& pt : x.points)
        if (!spts.count(pt)) throw std::invalid_argument("clique not inside the spec");
    BigInt acc = 0;
    for (const CliqueLabel& y : spec_cliques(spec)) {
        if (y.size() < x.size()) continue;
        std::set<std::pair<int, int>> ypts(y.points.begin(), y.points.end());
        bool contains = true;
        for (auto& pt : x.points)
            if (!ypts.count(pt)) {
                contains = false;
                break;
            }
        if (!contains) continue;
        BigNat v = fact(spec.n - static_cast<long>(y.size()));
        if ((y.size() - x.size()) % 2 == 0)
            acc += v;
        else
            acc -= v;
    }
    return acc;
}

BigNat exact_union_size(const CosetSpec& spec, const FactorialTable& fact) {
    BigInt acc = 0;
    for (const CliqueLabel& x : spec_cliques(spec)) {
        BigNat v = fact(spec.n - static_cast<long>(x.size()));
        if (x.size() % 2 == 1)
            acc += v;
        else
            acc -= v;
    }
    return acc;
}

SpectrumReport derangement_graph_spectrum(int n, int n_cap) {
    if (n < 2) throw std::invalid_argument("derangement_graph_spectrum: n must be >= 2");
    if (n > n_cap) throw std::length_error("derangement_graph_spectrum: cap exceeded");
    std::vector<Perm> perms = all_perms(n);
    size_t m = perms.size();
    std::vector<std::uint64_t> packed(m);
    for (size_t i = 0; i < m; ++i) packed[i] = pack_perm(perms[i]);

    DerangementTable dt = derangements(n);
    SpectrumReport rep;
    rep.n = n;
    rep.d_n = dt.d[n];

    std::vector<double> a(m * m, 0.0);
    std::vector<long> row_sums(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if ((packed[i] & packed[j]) == 0) {
                a[i * m + j] = 1.0;
                a[j * m + i] = 1.0;
                ++row_sums[i];
                ++row_sums[j];
            }
    rep.row_sums_ok = true;
    for (size_t i = 0; i < m; ++i)
        if (row_sums[i] != rep.d_n.get_si()) rep.row_sums_ok = false;

    std::vector<double> eig = jacobi_eigenvalues(std::move(a), static_cast<int>(m));
    rep.distinct_eigenvalues = cluster_values(eig, 1e-3);

    double dn = rep.d_n.get_d();
    rep.lambda0 = eig.front();
    rep.lambda0_ok = std::abs(rep.lambda0 - dn) <= 1e-6 * std::max(1.0, dn);

    // the least eigenvalue; its magnitude ties the second-largest absolute
    // value (e.g. +3 and -3 both occur for n = 4)
    std::vector<double> rest;
    for (double v : rep.distinct_eigenvalues)
        if (std::abs(v - rep.lambda0) > 1e-3) rest.push_back(v);
    double lam1 = rest.empty() ? 0.0 : *std::min_element(rest.begin(), rest.end());
    double lam2 = 0.0;
    for (double v : rest)
        if (std::abs(v - lam1) > 1e-3 && std::abs(v) > std::abs(lam2)) lam2 = v;
    rep.lambda1 = lam1;
    double expected1 = -dn / (n - 1);
    rep.lambda1_ok = !rest.empty() && std::abs(lam1 - expected1) <= 1e-6 * std::max(1.0, dn);
    rep.lambda2_abs = std::abs(lam2);
    rep.lambda2_ratio = dn > 0 ? rep.lambda2_abs * n * n / dn : 0.0;
    return rep;
}

} // namespace supersat
