#pragma once

#include "supersat/exactcomb.hpp"
#include "supersat/numeric.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace supersat {

// A permutation of [n] as its image sequence (1-based values).
struct Perm {
    std::vector<int> img;

    int n() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i - 1]; } // i in [1,n]
};

Perm identity_perm(int n);
bool is_perm(const Perm& p);

// sigma and pi are disjoint when sigma(i) != pi(i) for every position.
bool perm_disjoint(const Perm& a, const Perm& b);

// Position-value incidence mask for n <= 8: bit (i-1)*n + (img[i]-1).
// Two permutations are disjoint exactly when their masks do not meet.
std::uint64_t pack_perm(const Perm& p);

struct PermFamily {
    int n = 0;
    std::vector<Perm> members; // duplicate-free, lex order on image sequences

    size_t size() const { return members.size(); }
};

PermFamily make_perm_family(int n, std::vector<Perm> members);

// All of S_n in lex order (enumeration cap applies).
std::vector<Perm> all_perms(int n, int enum_cap = 8);

// A list of grid points (i,j) naming the cosets T_(i,j) = {p : p(i) = j}.
struct CosetSpec {
    int n = 0;
    std::vector<std::pair<int, int>> points; // pairwise distinct, 1-based
};

CosetSpec make_coset_spec(int n, std::vector<std::pair<int, int>> points);

// A set of grid points with pairwise distinct rows and pairwise distinct
// columns; exactly the vertex sets whose cosets have a common permutation.
struct CliqueLabel {
    std::vector<std::pair<int, int>> points;

    size_t size() const { return points.size(); }
};

// Validates the all-rows-distinct / all-columns-distinct invariant.
CliqueLabel make_clique(std::vector<std::pair<int, int>> points);

bool spec_contains_perm(const CosetSpec& spec, const Perm& p);

// Explicit families (enumeration-capped).
PermFamily coset_members(int n, int i, int j, int enum_cap = 8);
PermFamily union_members(const CosetSpec& spec, int enum_cap = 8);

// T(n,s): the first s permutations of S_n under lex order.
PermFamily lex_perm_segment(int n, const BigNat& s, int enum_cap = 8);

// Unordered disjoint-pair count of an explicit family.
BigNat disj_perm(const PermFamily& f);

// Disjoint pairs between one permutation and each member of a family.
BigNat disj_perm_one(const Perm& p, const PermFamily& f);

// Exact disjoint-pair count of T(n,s):
//   C(l,2) (n-1)! D_{n-1} + l r D_{n-1}   where s = l (n-1)! + r.
BigNat disj_perm_formula(long n, const BigNat& s);

// |intersection of the cosets of X| = (n - |X|)!.
BigNat exact_intersection_size(const CliqueLabel& x, long n);

// Number of permutations in the intersection of the cosets of X that are
// disjoint from pi, for pi outside every coset of X:
//   sum_{i=0}^{n-l-c} (-1)^i C(n-l-c, i) (n-l-i)!
// where c = l - |{rows of X} cap {pi^{-1}(cols of X)}|.
BigNat exact_disj_to_clique(const Perm& pi, const CliqueLabel& x, const FactorialTable& fact);

// Same alternating sum as a function of (n, l, c) alone.
BigNat clique_disj_count(long n, long l, long c, const FactorialTable& fact);

// Overlap defect c of a clique against a permutation.
long clique_overlap_defect(const Perm& pi, const CliqueLabel& x);

// All subsets of the spec's points that form cliques (nonempty).
std::vector<CliqueLabel> spec_cliques(const CosetSpec& spec);

// Memo for the alternating sums, keyed by (clique size, overlap defect);
// shared across calls at one ground-set size.
using AltSumMemo = std::map<std::pair<long, long>, BigNat>;

// Memo for cross-clique counts, keyed by the size profile of the pair.
struct CrossKey {
    long p, q, na, nc, fpos, uval;
    bool operator<(const CrossKey& o) const;
};
using CrossMemo = std::map<CrossKey, BigNat>;

// Number of members of the coset union disjoint from pi (pi outside the
// union), by inclusion-exclusion over cliques; exact at every n.
BigNat exact_disj_to_union(const Perm& pi, const CosetSpec& spec, const FactorialTable& fact,
                           AltSumMemo* memo = nullptr);

// Truncations of the clique inclusion-exclusion after sizes <= max_size
// (odd truncations overshoot, even ones undershoot).
BigInt exact_disj_to_union_truncated(const Perm& pi, const CosetSpec& spec, long max_size,
                                     const FactorialTable& fact);

// Ordered pairs (sigma, pi), sigma in the coset intersection of X, pi in
// that of Y, sigma disjoint from pi.  Exact at every n via two-level
// inclusion-exclusion over agreement positions.
BigNat exact_cross_clique_disj(const CliqueLabel& x, const CliqueLabel& y, long n,
                               const FactorialTable& fact);

// Unordered disjoint pairs inside the coset union, exact at every n:
//   (1/2) sum over ordered clique pairs (X,Y) of
//         (-1)^{|X|+|Y|} exact_cross_clique_disj(X,Y).
BigNat exact_disj_within_union(const CosetSpec& spec, const FactorialTable& fact,
                               size_t point_cap = 12, CrossMemo* memo = nullptr);

// |M_X|: permutations lying in exactly the cosets of X and no others,
//   sum over cliques Y >= X of (-1)^{|Y|-|X|} (n-|Y|)!.
BigNat exact_membership_class_size(const CosetSpec& spec, const CliqueLabel& x,
                                   const FactorialTable& fact);

// Exact size of the union, by inclusion-exclusion over cliques.
BigNat exact_union_size(const CosetSpec& spec, const FactorialTable& fact);

struct SpectrumReport {
    long n = 0;
    BigNat d_n;
    double lambda0 = 0;    // largest eigenvalue
    double lambda1 = 0;    // second-largest distinct absolute value, signed
    double lambda2_abs = 0;
    double lambda2_ratio = 0; // |lambda2| n^2 / d_n (constant K is unknown)
    bool lambda0_ok = false;  // lambda0 = d_n within 1e-6 d_n
    bool lambda1_ok = false;  // lambda1 = -d_n/(n-1) within 1e-6 d_n
    bool row_sums_ok = false; // A 1 = d_n 1, exact integer check
    std::vector<double> distinct_eigenvalues; // clustered, descending
};

// Dense symmetric eigensolve of the derangement graph on S_n (n <= cap).
SpectrumReport derangement_graph_spectrum(int n, int n_cap = 6);

} // namespace supersat
