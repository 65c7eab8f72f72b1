#pragma once

#include "supersat/numeric.hpp"

#include <vector>

namespace supersat {

// n!
BigNat factorial(long n);

// C(n,k); zero when k < 0 or k > n.
BigNat binom(long n, long k);
BigNat binom(const BigNat& n, long k);

// Cached 0!..n_max! table; the inclusion-exclusion engines evaluate many
// factorials at a fixed ground-set size, so they share one of these.
class FactorialTable {
  public:
    explicit FactorialTable(long n_max);
    const BigNat& operator()(long n) const;
    long n_max() const { return static_cast<long>(fact_.size()) - 1; }

  private:
    std::vector<BigNat> fact_;
};

// Derangement numbers d_n with the derived sequences
//   D_n  = d_n + d_{n-1}
//   Dp_n = d_n + 2 d_{n-1}
// d_0 = 1, d_1 = 0, d_n = (n-1)(d_{n-1} + d_{n-2}).  Index 0 of D and Dp
// uses the convention d_{-1} = 0.
struct DerangementTable {
    long n_max = 0;
    std::vector<BigNat> d;
    std::vector<BigNat> D;
    std::vector<BigNat> Dp;
};

DerangementTable derangements(long n_max);

// d_n by the alternating sum n! * sum_{i<=n} (-1)^i / i!, evaluated in
// exact integers.  Kept separate from the recurrence so the two routes
// can be checked against each other.
BigNat derangement_inclusion_exclusion(long n);

// Generalised binomial coefficient x(x-1)...(x-r+1)/r! for rational x.
BigRat gen_binom(const BigRat& x, long r);

// The unique x >= r with gen_binom(x, r) = t for t >= 1.  Exact when t is
// an integral binomial C(m, r); otherwise located by bisection with exact
// rational midpoints to relative width <= 1e-12.
BigRat lovasz_root(const BigNat& t, long r);

} // namespace supersat
