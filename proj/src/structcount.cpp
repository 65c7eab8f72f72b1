#include "supersat/structcount.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace supersat {

SetFamily shadow(const SetFamily& f, int s) {
    if (s < 1 || s > f.k) throw std::invalid_argument("shadow: need 1 <= s <= k");
    std::set<SetMask> out;
    for (SetMask m : f.members) {
        // all s-subsets of m
        std::vector<int> elems = mask_elements(m);
        int k = f.k;
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            SetMask sub = 0;
            for (int i : idx) sub |= SetMask(1) << (elems[i] - 1);
            out.insert(sub);
            int i = s - 1;
            while (i >= 0 && idx[i] == k - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return make_family(f.n, s, std::vector<SetMask>(out.begin(), out.end()));
}

BigRat kk_lower_bound(const BigNat& t, long r, long s) {
    if (s < 1 || s > r) throw std::invalid_argument("kk_lower_bound: need 1 <= s <= r");
    return gen_binom(lovasz_root(t, r), s);
}

BigNat hilton_milner_bound(long n, long k) {
    if (k < 2 || n < 2 * k + 1)
        throw std::invalid_argument("hilton_milner_bound: need k >= 2 and n >= 2k+1");
    return binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1;
}

namespace {

int max_matching_rec(const std::vector<SetMask>& v, size_t from, SetMask used, int depth) {
    int best = depth;
    for (size_t i = from; i < v.size(); ++i) {
        if (static_cast<int>(depth + v.size() - i) <= best) break;
        if (v[i] & used) continue;
        best = std::max(best, max_matching_rec(v, i + 1, used | v[i], depth + 1));
    }
    return best;
}

bool has_matching_rec(const std::vector<SetMask>& v, size_t from, SetMask used, int need) {
    if (need == 0) return true;
    for (size_t i = from; i < v.size(); ++i) {
        if (static_cast<int>(v.size() - i) < need) return false;
        if (v[i] & used) continue;
        if (has_matching_rec(v, i + 1, used | v[i], need - 1)) return true;
    }
    return false;
}

} // namespace

int max_matching_size(const SetFamily& f) { return max_matching_rec(f.members, 0, 0, 0); }

bool has_matching(const std::vector<SetMask>& members, int s) {
    return has_matching_rec(members, 0, 0, s);
}

namespace {

// independent-set count by branching on a maximum-degree vertex, with
// memoization on the remaining vertex mask (per connected component)
BigNat count_is(std::uint64_t mask, const std::vector<std::uint64_t>& adj,
                std::map<std::uint64_t, BigNat>& memo) {
    if (mask == 0) return BigNat(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    // split off one connected component
    std::uint64_t comp = 0, frontier = mask & (~mask + 1);
    while (frontier) {
        comp |= frontier;
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = __builtin_ctzll(f);
            f &= f - 1;
            next |= adj[v] & mask & ~comp;
        }
        frontier = next;
    }

    BigNat result;
    if (comp != mask) {
        result = count_is(comp, adj, memo) * count_is(mask & ~comp, adj, memo);
    } else {
        int pick = -1, best_deg = -1;
        std::uint64_t m = mask;
        while (m) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            int deg = __builtin_popcountll(adj[v] & mask);
            if (deg > best_deg) {
                best_deg = deg;
                pick = v;
            }
        }
        if (best_deg == 0) {
            BigNat r;
            mpz_ui_pow_ui(r.get_mpz_t(), 2, __builtin_popcountll(mask));
            result = r;
        } else {
            result = count_is(mask & ~(std::uint64_t(1) << pick), adj, memo) +
                     count_is(mask & ~(adj[pick] | (std::uint64_t(1) << pick)), adj, memo);
        }
    }
    memo.emplace(mask, result);
    return result;
}

std::vector<std::uint64_t> kneser_adjacency(const std::vector<SetMask>& verts) {
    size_t m = verts.size();
    std::vector<std::uint64_t> adj(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if ((verts[i] & verts[j]) == 0) {
                adj[i] |= std::uint64_t(1) << j;
                adj[j] |= std::uint64_t(1) << i;
            }
    return adj;
}

} // namespace

BigNat count_no_matching_families(int n, int k, int s, long vertex_cap) {
    if (s < 2) throw std::invalid_argument("count_no_matching_families: s must be >= 2");
    BigNat verts = binom(n, k);
    std::vector<SetMask> universe = lex_segment(n, k, verts).members;
    size_t m = universe.size();
    if (s == 2) {
        if (m > 64) throw std::length_error("count_no_matching_families: > 64 vertices");
        std::vector<std::uint64_t> adj = kneser_adjacency(universe);
        std::map<std::uint64_t, BigNat> memo;
        std::uint64_t all = (m == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << m) - 1);
        return count_is(all, adj, memo);
    }
    if (static_cast<long>(m) > vertex_cap)
        throw std::length_error("count_no_matching_families: vertex cap exceeded");
    // walk the subset tree, cutting branches as soon as an s-matching forms
    BigNat count = 0;
    std::vector<SetMask> chosen;
    auto rec = [&](auto&& self, size_t from) -> void {
        count += 1; // the current family (possibly empty)
        for (size_t i = from; i < m; ++i) {
            chosen.push_back(universe[i]);
            if (!has_matching(chosen, s)) self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

namespace {

// Bron-Kerbosch with pivoting, collecting maximal independent sets of the
// graph given by adj (i.e. maximal cliques of the complement).
void bron_kerbosch(std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   const std::vector<std::uint64_t>& nonadj,
                   std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    std::uint64_t m = px;
    while (m) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        int cnt = __builtin_popcountll(p & nonadj[v]);
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    std::uint64_t cand = p & ~nonadj[pivot];
    while (cand) {
        int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        std::uint64_t vb = std::uint64_t(1) << v;
        bron_kerbosch(r | vb, p & nonadj[v], x & nonadj[v], nonadj, out);
        p &= ~vb;
        x |= vb;
    }
}

} // namespace

std::vector<SetFamily> enumerate_maximal_families(int n, int k, int s, long vertex_cap) {
    if (s < 2) throw std::invalid_argument("enumerate_maximal_families: s must be >= 2");
    BigNat vcount = binom(n, k);
    std::vector<SetMask> universe = lex_segment(n, k, vcount).members;
    size_t m = universe.size();
    std::vector<SetFamily> out;

    if (s == 2) {
        if (m > 64) throw std::length_error("enumerate_maximal_families: > 64 vertices");
        std::vector<std::uint64_t> adj = kneser_adjacency(universe);
        std::vector<std::uint64_t> nonadj(m);
        std::uint64_t all = (m == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << m) - 1);
        for (size_t i = 0; i < m; ++i) nonadj[i] = (all & ~adj[i]) & ~(std::uint64_t(1) << i);
        std::vector<std::uint64_t> sets;
        bron_kerbosch(0, all, 0, nonadj, sets);
        for (std::uint64_t sm : sets) {
            std::vector<SetMask> members;
            std::uint64_t t = sm;
            while (t) {
                int v = __builtin_ctzll(t);
                t &= t - 1;
                members.push_back(universe[v]);
            }
            out.push_back(make_family(n, k, std::move(members)));
        }
    } else {
        if (static_cast<long>(m) > vertex_cap)
            throw std::length_error("enumerate_maximal_families: vertex cap exceeded");
        std::vector<SetMask> chosen;
        auto rec = [&](auto&& self, size_t from) -> void {
            bool leaf = true;
            for (size_t i = from; i < m; ++i) {
                chosen.push_back(universe[i]);
                if (!has_matching(chosen, s)) {
                    leaf = false;
                    self(self, i + 1);
                }
                chosen.pop_back();
            }
            if (!leaf) return;
            // no extension among later sets; maximal iff no earlier set fits either
            for (size_t i = 0; i < m; ++i) {
                if (std::find(chosen.begin(), chosen.end(), universe[i]) != chosen.end()) continue;
                std::vector<SetMask> trial = chosen;
                trial.push_back(universe[i]);
                if (!has_matching(trial, s)) return;
            }
            out.push_back(make_family(n, k, chosen));
        };
        rec(rec, 0);
    }

    std::sort(out.begin(), out.end(), [](const SetFamily& a, const SetFamily& b) {
        return a.members < b.members;
    });
    return out;
}

SetFamily matching_closure(const SetFamily& f, int s) {
    std::vector<SetMask> universe = lex_segment(f.n, f.k, binom(f.n, f.k)).members;
    std::vector<SetMask> out;
    for (SetMask g : universe) {
        std::vector<SetMask> trial = f.members;
        if (std::find(trial.begin(), trial.end(), g) == trial.end()) trial.push_back(g);
        if (!has_matching(trial, s)) out.push_back(g);
    }
    return make_family(f.n, f.k, std::move(out));
}

SetFamily minimal_generating(const SetFamily& fmax, int s) {
    if (matching_closure(fmax, s).members != fmax.members)
        throw std::invalid_argument("minimal_generating: family is not maximal");
    std::vector<SetMask> gen = fmax.members;
    size_t i = 0;
    while (i < gen.size()) {
        std::vector<SetMask> trial = gen;
        trial.erase(trial.begin() + i);
        SetFamily tf = make_family(fmax.n, fmax.k, trial);
        if (matching_closure(tf, s).members == fmax.members)
            gen = std::move(trial);
        else
            ++i;
    }
    return make_family(fmax.n, fmax.k, std::move(gen));
}

BollobasResult bollobas_check(const SetPairSystem& sys) {
    BollobasResult r;
    r.m = static_cast<long>(sys.pairs.size());
    if (sys.pairs.empty()) {
        r.valid = true;
        r.bound = 1;
        r.within = true;
        return r;
    }
    int a = popcount(sys.pairs[0].first);
    int b = popcount(sys.pairs[0].second);
    for (auto& [A, B] : sys.pairs)
        if (popcount(A) != a || popcount(B) != b)
            throw std::invalid_argument("bollobas_check: non-uniform sizes");
    r.valid = true;
    for (size_t i = 0; i < sys.pairs.size() && r.valid; ++i) {
        if (sys.pairs[i].first & sys.pairs[i].second) r.valid = false;
        for (size_t j = 0; j < sys.pairs.size() && r.valid; ++j)
            if (i != j && (sys.pairs[i].first & sys.pairs[j].second) == 0) r.valid = false;
    }
    r.bound = binom(a + b, a);
    r.within = !r.valid || BigNat(r.m) <= r.bound;
    return r;
}

TypicalityReport typicality_report(long n, long k, long s) {
    if (s < 2) throw std::invalid_argument("typicality_report: s must be >= 2");
    if (n < (2 * s - 1) * k - s + 1)
        throw std::invalid_argument("typicality_report: n below (2s-1)k - s + 1");
    TypicalityReport r;
    r.n = n;
    r.k = k;
    r.s = s;
    r.N0 = binom(n, k) - binom(n - s + 1, k);
    r.N2 = r.N0 - binom(n - s, k - 1);
    r.N1_bound = BigRat(r.N0) - make_rat(binom(n - k - s + 1, k - 1), BigNat(s + 1));
    r.log2M_bound = n * binom(s * k, k);
    BigRat mx = std::max(r.N1_bound, BigRat(r.N2));
    r.margin = BigRat(2 * r.log2M_bound) + mx - BigRat(r.N0);
    r.T = binom(n, s - 1);
    r.deep_range = n >= 2 * s * k + 38 * s * s * s * s;
    r.margin_target = make_rat(-n * binom(s * k, k), BigNat(18));
    r.target_met = r.margin <= r.margin_target;
    return r;
}

ShadowIdentityResult shadow_identity_check(const SetFamily& f) {
    // maximality as an intersecting family
    if (has_matching(f.members, 2))
        throw std::invalid_argument("shadow_identity_check: family is not intersecting");
    if (matching_closure(f, 2).members != f.members)
        throw std::invalid_argument("shadow_identity_check: family is not maximal");

    int n = f.n, k = f.k;
    ShadowIdentityResult res;
    BigNat best_dist;
    int best_center = -1;
    BigNat star_size = binom(n - 1, k - 1);
    for (int c = 1; c <= n; ++c) {
        SetMask cb = SetMask(1) << (c - 1);
        unsigned long meet = 0;
        for (SetMask m : f.members)
            if (m & cb) ++meet;
        BigNat dist = BigNat(static_cast<unsigned long>(f.size())) + star_size - 2 * BigNat(meet);
        if (best_center < 0 || dist < best_dist) {
            best_dist = dist;
            best_center = c;
        }
    }
    res.center = best_center;

    // relabel the center to n
    auto relabel = [n, best_center](SetMask m) -> SetMask {
        SetMask cb = SetMask(1) << (best_center - 1);
        SetMask nb = SetMask(1) << (n - 1);
        bool has_c = m & cb, has_n = m & nb;
        m &= ~(cb | nb);
        if (has_c) m |= nb;
        if (has_n) m |= cb;
        return m;
    };

    SetMask nb = SetMask(1) << (n - 1);
    SetMask body = nb - 1; // elements 1..n-1
    std::vector<SetMask> p_members, q_members;
    std::set<SetMask> fset;
    for (SetMask m : f.members) fset.insert(relabel(m));
    for (SetMask m : fset)
        if (!(m & nb)) p_members.push_back(body & ~m); // complements within [n-1]
    // missing sets of the star: B contains n, B not in family
    std::vector<int> e(k - 1);
    if (k >= 2) {
        for (int i = 0; i < k - 1; ++i) e[i] = i + 1;
        while (true) {
            SetMask m = nb | mask_from_elements(e);
            if (!fset.count(m)) q_members.push_back(m & ~nb);
            int i = k - 2;
            while (i >= 0 && e[i] == (n - 1) - (k - 2 - i)) --i;
            if (i < 0) break;
            ++e[i];
            for (int j = i + 1; j < k - 1; ++j) e[j] = e[j - 1] + 1;
        }
    }
    res.outside = BigNat(static_cast<unsigned long>(p_members.size()));
    res.missing = BigNat(static_cast<unsigned long>(q_members.size()));

    std::set<SetMask> q_set(q_members.begin(), q_members.end());
    std::set<SetMask> shadow_set;
    if (!p_members.empty()) {
        int psize = n - 1 - k;
        if (k - 1 > psize) {
            shadow_set.clear(); // nothing of size k-1 inside smaller sets
        } else if (psize >= 1) {
            SetFamily p = make_family(n - 1, psize, p_members);
            if (k - 1 >= 1)
                for (SetMask m : shadow(p, k - 1).members) shadow_set.insert(m);
        }
    }
    res.holds = shadow_set == q_set;
    return res;
}

} // namespace supersat
