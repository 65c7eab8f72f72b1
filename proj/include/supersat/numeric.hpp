#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supersat {

// All counts are exact. BigNat values are arbitrary-precision and kept
// nonnegative by construction; BigRat values are always stored reduced
// with a positive denominator (gmp canonical form).
using BigNat = mpz_class;
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigNat to_big(unsigned long long v) { return BigNat(static_cast<unsigned long>(v)); }

inline std::string to_decimal(const BigNat& v) { return v.get_str(); }

inline std::string to_decimal(const BigRat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline BigRat make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    BigRat r(num);
    r /= BigRat(den);
    return r;
}

inline double to_double(const BigRat& v) { return v.get_d(); }

inline BigRat abs_rat(const BigRat& v) { return v < 0 ? BigRat(-v) : v; }

} // namespace supersat
