#pragma once

#include "supersat/numeric.hpp"
#include "supersat/permfam.hpp"
#include "supersat/setfam.hpp"

#include <optional>
#include <string>
#include <vector>

namespace supersat {

struct MinimizerReport {
    std::string kind;            // "sets" or "perms"
    long n = 0, k = 0;           // k unused for perms
    BigNat s;
    BigNat minimum;              // exact minimum disj over size-s families
    BigNat num_minimizers;       // 0 when counting was skipped
    bool counted = false;
    std::vector<std::vector<int>> sample_minimizers; // member indices, capped
    BigNat construction_value;   // disj of the lex / T construction
    bool construction_optimal = false;
    bool exhaustive = true;      // false when the time budget expired
    double seconds = 0;
};

// Exact minima of disj over all families of every size, by one walk of the
// subset lattice of C([n],k) (requires C(n,k) <= 24).  Entry s of the
// result describes size-s families.
std::vector<MinimizerReport> min_disj_sets_sweep(int n, int k, int sample_cap = 100);

// Exact minimum for one size, branch and bound seeded with the lex value
// (handles C(n,k) up to 64; the sweep is preferred when it applies).
MinimizerReport min_disj_sets(int n, int k, const BigNat& s, double time_budget_s = 0);

// Collapse sample minimizers to one representative per relabeling class
// of the ground set (set families only; num_minimizers stays raw).
void dedup_samples_up_to_relabeling(MinimizerReport& report);

// Permutation side: one walk of the subset lattice of S_n (n <= 4).
std::vector<MinimizerReport> min_disj_perms_sweep(int n, int sample_cap = 100);

MinimizerReport min_disj_perms(int n, const BigNat& s, double time_budget_s = 0);

// Edge-minimising families of a regular graph come in complementary pairs:
// checks min_e(s) + d s = min_e(N-s) + e(G) ... via the exact identity
// e(V\S) = e(G) - d|S| + e(S), and that the argmin sets are complements.
bool duality_check(int n, int k);

struct BallRow {
    int ell = 0;
    int radius = 0;       // the r of the sandwich
    BigNat disj;          // canonical completion
    BigNat inner_disj;    // inner full ball alone (completion-independent)
    BigNat inner_size;
};

struct CounterexampleTable {
    int k = 0, n = 0;
    BigNat s;
    BigNat disj_family;      // the star-swap construction
    BigNat disj_lex;         // (C(2k-1,k)-1) C(2k-2,k-1)
    BigNat expected_gap;     // (C(2k-1,k)-1) - (C(2k-2,k-1)-1)
    std::vector<BallRow> balls; // ell = 2..k
    bool family_beats_lex = false;
    bool lex_beats_balls = false; // disj_lex < disj(B_ell) for all ell >= 2
};

// Exact counts via the zeta transform for 5 <= k <= 8.
CounterexampleTable verify_counterexample(int k);

// disj_lex closed form and the removal/addition gap, for reporting beyond
// the directly countable range.
std::pair<BigNat, BigNat> counterexample_closed_forms(int k);

} // namespace supersat
