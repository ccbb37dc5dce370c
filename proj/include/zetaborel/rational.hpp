#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zetaborel {

/// Exact scalars used everywhere: arbitrary-precision integers and canonical
/// rationals (denominator > 0, gcd(|num|, den) = 1 after every operation).
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Build a canonical rational from any integer pair (den != 0).
inline Rat make_rat(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline Rat make_rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

/// C(n, k) for n >= 0; returns 0 when k < 0 or k > n so convolution loops can
/// index freely.
inline BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

/// Generalized binomial <p, q> for p, q >= 0:
///   C(p, q)                     when p >= q,
///   (-1)^(p-q)/(p-q) * 1/C(q,p) when p <  q.
inline Rat gen_binom(long long p, long long q) {
    if (p < 0 || q < 0) throw std::domain_error("gen_binom: p, q must be >= 0");
    if (p >= q) return Rat(binomial(p, q));
    const int sign = ((q - p) % 2 == 0) ? 1 : -1;
    // p - q < 0, so the sign of the denominator folds into the result.
    return make_rat(BigInt(sign), BigInt(p - q) * binomial(q, p));
}

/// Falling factorial x(x-1)...(x-m+1); 1 when m = 0.
inline BigInt falling_factorial(const BigInt& x, long long m) {
    if (m < 0) throw std::domain_error("falling_factorial: m must be >= 0");
    BigInt r = 1;
    for (long long i = 0; i < m; ++i) r *= x - i;
    return r;
}

inline BigInt falling_factorial(long long x, long long m) {
    return falling_factorial(BigInt(x), m);
}

/// Exact harmonic number H_n = 1 + 1/2 + ... + 1/n.
inline Rat harmonic(long long n) {
    if (n < 1) throw std::domain_error("harmonic: n must be >= 1");
    Rat h = 0;
    for (long long j = 1; j <= n; ++j) h += make_rat(1, j);
    return h;
}

inline BigInt factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial: n must be >= 0");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Canonical text form: "num/den", integers as plain "num".
inline std::string rat_to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "num", "num/den" (also "n/1"); throws std::invalid_argument on
/// malformed input.
inline Rat rat_from_string(std::string_view s) {
    auto bad = [&] { return std::invalid_argument("rat_from_string: '" + std::string(s) + "'"); };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(BigInt(std::string(s)));
        BigInt num{std::string(s.substr(0, slash))};
        BigInt den{std::string(s.substr(slash + 1))};
        return make_rat(num, den);
    } catch (const std::exception&) {
        throw bad();
    }
}

template <class Real>
Real to_real(const Rat& q) {
    return q.template convert_to<Real>();
}

template <class Real>
Real to_real(const BigInt& n) {
    return n.template convert_to<Real>();
}

}  // namespace zetaborel
