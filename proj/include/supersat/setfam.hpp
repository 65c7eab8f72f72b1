#pragma once

#include "supersat/exactcomb.hpp"
#include "supersat/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace supersat {

// A k-subset of [n] as a bitmask: element i <-> bit (i-1).  Ground sets are
// capped at 64 elements so a set is one machine word.
using SetMask = std::uint64_t;

inline int popcount(SetMask m) { return __builtin_popcountll(m); }

// Elements of a mask in increasing order (1-based).
std::vector<int> mask_elements(SetMask m);
SetMask mask_from_elements(const std::vector<int>& elems);

// Lexicographic order on k-sets: sets written as increasing element
// sequences, compared element-wise.  The first C(n-1,k-1) sets are exactly
// the star of element 1.
bool lex_less(SetMask a, SetMask b);

struct SetFamily {
    int n = 0;
    int k = 0;
    std::vector<SetMask> members; // duplicate-free, sorted in lex order

    size_t size() const { return members.size(); }
};

// Validates uniformity, range, duplicates; sorts members into lex order.
SetFamily make_family(int n, int k, std::vector<SetMask> members);

// First s k-subsets of [n] in lex order.
SetFamily lex_segment(int n, int k, const BigNat& s);

// Complement of lex_segment(n, k, C(n,k) - s) within the full level.
SetFamily colex_complement(int n, int k, const BigNat& s);

// Number of unordered disjoint pairs, by pairwise bitmask tests.
BigNat disj_naive(const SetFamily& f, int workers = 1);

// Same value via a subset-sum (zeta) transform over the 2^n lattice;
// requires n <= cap (memory: one 64-bit word per subset of [n]).
BigNat disj_zeta(const SetFamily& f, int n_cap = 28);

// Cross disjoint pairs {A,B}, A in f, B in g (families over the same [n]).
BigNat disj_cross_naive(const SetFamily& f, const SetFamily& g);

// Exact disjoint-pair count of the lex initial segment, formula-only:
//   sum_{i=1}^{r-1} (s - (C(n,k) - C(n-i,k))) C(n-i-k, k-1)
// with r minimal such that s <= C(n,k) - C(n-r,k).
BigNat disj_lex_formula(long n, long k, const BigNat& s);

// Star-decomposition upper bound (C(r-1,2) + (r-1)g) C(n-1,k-1) C(n-k-1,k-1).
BigRat star_upper_bound(long n, long k, long r, const BigRat& gamma);

// (1/2)(1 - 1/r) s^2.
BigRat quad_upper_bound(const BigRat& s, long r);

// l-ball of size s: all k-sets with |F cap [r]| >= l, plus boundary sets
// (|F cap [r+1]| >= l, |F cap [r]| < l) in lex order until size s.  Uses
// the largest r whose inner ball still fits below s.  l = 1 reproduces
// lex_segment.
SetFamily ell_ball(int n, int k, int ell, const BigNat& s);

// Number of k-sets F over [n] with |F cap [r]| >= l.
BigNat ball_inner_size(long n, long k, long ell, long r);

// The inner full ball alone (completion-independent part of ell_ball).
SetFamily ell_ball_inner(int n, int k, int ell, int r);

// The family of the Bollobas-Leader counterexample at n = 3k-1: the full
// star of 1 minus the set {1, 2k+1, ..., 3k-1}, together with all
// k-subsets of {2, ..., 2k}.
SetFamily counterexample_family(int k);

struct KneserParams {
    BigNat vertices; // C(m,a)
    BigNat degree;   // C(m-a,a)
    BigNat lambda;   // C(m-a-1,a-1)
};

KneserParams kneser_params(long m, long a);

struct MixingGap {
    BigRat gap;   // | e(S,T) - d|S||T|/N |, e = ordered pair count
    double bound; // lambda sqrt(|S||T|)
    bool holds;   // gap^2 <= lambda^2 |S||T|, checked in exact arithmetic
};

// Expander mixing inequality data for vertex sets S, T of the Kneser graph
// KG(m,a).  e(S,T) counts ordered pairs, so edges inside S cap T count
// twice; e(S,S)/2 is the internal edge count.
MixingGap expander_mixing_gap(long m, long a, const SetFamily& S, const SetFamily& T);

// (1 - k^2/n) sI sJ - (3k/2n)(sI + sJ) C(n-1,k-1); may be negative.
BigRat cross_disj_lower(long n, long k, const BigNat& size_i, const BigNat& size_j);

struct KneserSpectrumCheck {
    double extreme = 0;  // largest |eigenvalue| after removing one copy of the degree
    double expected = 0; // C(m-a-1,a-1)
    bool ok = false;     // within 1e-6 relative
};

// Dense eigensolve of KG(m,a); m <= 8 keeps the graph at C(8,4) vertices.
KneserSpectrumCheck kneser_spectrum_check(long m, long a);

struct NearestStars {
    std::vector<int> centers; // lexicographically least optimal center set
    BigNat distance;          // |F delta union-of-stars|
};

// Exhaustive minimiser of |F delta S| over unions of ell stars.
NearestStars nearest_star_union(const SetFamily& f, int ell, const BigNat& center_cap = BigNat(200000));

} // namespace supersat
