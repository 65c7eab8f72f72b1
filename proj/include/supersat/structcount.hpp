#pragma once

#include "supersat/numeric.hpp"
#include "supersat/setfam.hpp"

#include <optional>
#include <vector>

namespace supersat {

// All s-sets contained in some member of f.
SetFamily shadow(const SetFamily& f, int s);

// gen_binom(lovasz_root(t, r), s): lower bound on the s-shadow of a family
// of t r-sets.
BigRat kk_lower_bound(const BigNat& t, long r, long s);

// C(n-1,k-1) - C(n-k-1,k-1) + 1 for k >= 2, n >= 2k+1.
BigNat hilton_milner_bound(long n, long k);

// Maximum number of pairwise disjoint members, branch and bound.
int max_matching_size(const SetFamily& f);

// True when the family contains s pairwise disjoint members.
bool has_matching(const std::vector<SetMask>& members, int s);

// Number of subfamilies of C([n],k) with no s pairwise disjoint members.
// s = 2 counts independent sets in the Kneser graph by component-wise
// branching with memoization; s >= 3 walks the full subset tree (cap on
// C(n,k) applies).
BigNat count_no_matching_families(int n, int k, int s, long vertex_cap = 24);

// All maximal families with no matching of size s, as sorted member lists.
std::vector<SetFamily> enumerate_maximal_families(int n, int k, int s, long vertex_cap = 24);

// {G : adding G to f creates no s pairwise disjoint members}.
SetFamily matching_closure(const SetFamily& f, int s);

// Greedy inclusion-minimal generating subfamily of a maximal family:
// deleting members in lex order while the closure still reproduces fmax.
SetFamily minimal_generating(const SetFamily& fmax, int s);

struct SetPairSystem {
    std::vector<std::pair<SetMask, SetMask>> pairs; // (A_i, B_i), disjoint within a pair
};

struct BollobasResult {
    bool valid = false; // uniform sizes, A_i disjoint B_i, A_i meets B_j for i != j
    long m = 0;
    BigNat bound; // C(a+b, a)
    bool within = false;
};

BollobasResult bollobas_check(const SetPairSystem& sys);

struct TypicalityReport {
    long n = 0, k = 0, s = 0;
    BigNat N0;          // C(n,k) - C(n-s+1,k)
    BigNat N2;          // N0 - C(n-s,k-1)
    BigRat N1_bound;    // N0 - C(n-k-s+1,k-1)/(s+1)
    BigNat log2M_bound; // n C(sk,k)
    BigRat margin;      // 2 log2M_bound + max(N1_bound, N2) - N0
    BigNat T;           // C(n,s-1), number of extremal families (reported)
    bool deep_range = false;  // n >= 2sk + 38 s^4
    BigRat margin_target;     // -(1/18) n C(sk,k), meaningful in deep range
    bool target_met = false;  // margin <= margin_target
};

TypicalityReport typicality_report(long n, long k, long s);

struct ShadowIdentityResult {
    bool holds = false;
    int center = 0; // star center minimising |F delta S| (least on ties)
    BigNat outside; // |F \ S|
    BigNat missing; // |S \ F|
};

// For a maximal intersecting family: relabel the nearest star's center to
// n, form P = {[n-1] \ A : A outside the star} and Q = {B \ {n} : B
// missing from the star}, and test shadow(P, k-1) == Q.
ShadowIdentityResult shadow_identity_check(const SetFamily& f);

} // namespace supersat
