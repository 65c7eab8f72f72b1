#include "supersat/exactcomb.hpp"

#include <stdexcept>

namespace supersat {

BigNat factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigNat r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigNat binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return BigNat(0);
    BigNat r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigNat binom(const BigNat& n, long k) {
    if (k < 0 || n < 0 || n < k) return BigNat(0);
    BigNat r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

FactorialTable::FactorialTable(long n_max) {
    if (n_max < 0) n_max = 0;
    fact_.resize(static_cast<size_t>(n_max) + 1);
    fact_[0] = 1;
    for (long i = 1; i <= n_max; ++i) fact_[i] = fact_[i - 1] * i;
}

const BigNat& FactorialTable::operator()(long n) const {
    if (n < 0 || n >= static_cast<long>(fact_.size()))
        throw std::out_of_range("FactorialTable: index out of range");
    return fact_[static_cast<size_t>(n)];
}

DerangementTable derangements(long n_max) {
    if (n_max < 1) throw std::invalid_argument("derangements: n_max must be >= 1");
    DerangementTable t;
    t.n_max = n_max;
    t.d.resize(n_max + 1);
    t.D.resize(n_max + 1);
    t.Dp.resize(n_max + 1);
    t.d[0] = 1;
    if (n_max >= 1) t.d[1] = 0;
    for (long n = 2; n <= n_max; ++n) t.d[n] = (n - 1) * (t.d[n - 1] + t.d[n - 2]);
    t.D[0] = t.d[0];
    t.Dp[0] = t.d[0];
    for (long n = 1; n <= n_max; ++n) {
        t.D[n] = t.d[n] + t.d[n - 1];
        t.Dp[n] = t.d[n] + 2 * t.d[n - 1];
    }
    return t;
}

BigNat derangement_inclusion_exclusion(long n) {
    if (n < 0) throw std::invalid_argument("negative n");
    // sum_{i=0}^{n} (-1)^i n!/i!, accumulating n!/i! by downward division
    BigInt acc = 0;
    BigInt term = factorial(n); // n!/0!
    for (long i = 0; i <= n; ++i) {
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
        if (i < n) term /= (i + 1); // n!/(i+1)! from n!/i!
    }
    return acc;
}

BigRat gen_binom(const BigRat& x, long r) {
    if (r < 0) throw std::invalid_argument("gen_binom: negative r");
    BigRat num(1);
    for (long i = 0; i < r; ++i) num *= x - i;
    BigRat denom(factorial(r));
    return num / denom;
}

BigRat lovasz_root(const BigNat& t, long r) {
    if (t < 1) throw std::invalid_argument("lovasz_root: t must be >= 1");
    if (r < 1) throw std::invalid_argument("lovasz_root: r must be >= 1");

    // integral fast path: largest m with C(m, r) <= t
    BigNat lo_m = r, hi_m = r;
    while (binom(hi_m, r) < t) hi_m = hi_m * 2 + 1;
    while (lo_m < hi_m) {
        BigNat mid = (lo_m + hi_m + 1) / 2;
        if (binom(mid, r) <= t)
            lo_m = mid;
        else
            hi_m = mid - 1;
    }
    if (binom(lo_m, r) == t) return BigRat(lo_m);

    // bisect inside (m, m+1); gen_binom is strictly increasing for x >= r
    BigRat target(t);
    BigRat lo(lo_m), hi(lo_m + 1);
    const BigRat rel_tol = make_rat(1, 1000000000000L);
    while ((hi - lo) / lo > rel_tol) {
        BigRat mid = (lo + hi) / 2;
        if (gen_binom(mid, r) < target)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

} // namespace supersat
