#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace chipfire {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big(std::int64_t v) {
    BigInt r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline bool divides(const BigInt& d, const BigInt& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient; the caller guarantees d | n.
inline BigInt exact_div(const BigInt& n, const BigInt& d) {
    BigInt r;
    mpz_divexact(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

/// Floor division and the matching nonnegative remainder (for d > 0).
inline BigInt floor_div(const BigInt& n, const BigInt& d) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

inline BigInt mod(const BigInt& n, const BigInt& d) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

/// Throws std::overflow_error if the value does not fit.
std::int64_t to_int64(const BigInt& v);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Reduces a rational modulo 1 into [0, 1).
Rational frac(const Rational& q);

}  // namespace chipfire
