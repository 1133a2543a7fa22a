#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace motivic {

// All coefficient arithmetic is exact: arbitrary-precision integers for ring
// and polynomial coefficients, rationals for polygon ordinates and zeta
// reconstruction. No floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a mechanically checked identity fails to hold. Commands map
// this to exit code 1, as opposed to exit code 2 for malformed input.
class CertificateError : public std::runtime_error {
public:
    explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an enumeration would exceed the configured element budget.
class BudgetError : public std::invalid_argument {
public:
    BudgetError(const std::string& what, Int required)
        : std::invalid_argument(what), required_budget(std::move(required)) {}
    Int required_budget;
};

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r = 1, b = base;
    while (exp != 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// binomial(n, k) for n >= 0
inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// p-adic valuation of a nonzero integer; nullopt for 0 (infinite).
inline std::optional<long> p_adic_valuation(Int n, const Int& p) {
    if (n == 0) return std::nullopt;
    if (p < 2) throw std::invalid_argument("p_adic_valuation: p must be >= 2");
    if (n < 0) n = -n;
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace motivic
