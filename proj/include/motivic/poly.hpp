#pragma once

#include "motivic/bigint.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace motivic {

// Dense univariate polynomial over Int. Used for Poincare polynomials, Weil
// zeta numerators and generic integer polynomial plumbing.
class Poly {
public:
    Poly() = default;
    explicit Poly(Int constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(const Int& coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is reported as -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0);
    }
    const std::vector<Int>& coeffs() const { return c_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    Int operator()(const Int& x) const; // evaluation

    std::string to_string(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_; // c_[i] is the coefficient of var^i; trailing zeros removed
};

// Sparse polynomial in two variables u, v over Int, canonical form (no zero
// coefficients). Terms are ordered by (u exponent, v exponent).
class BiPoly {
public:
    using Key = std::pair<int, int>; // (u exponent, v exponent)

    BiPoly() = default;
    explicit BiPoly(Int constant) {
        if (constant != 0) t_[{0, 0}] = std::move(constant);
    }
    static BiPoly monomial(const Int& coeff, int u_exp, int v_exp);
    static BiPoly uv(); // the product u*v

    bool is_zero() const { return t_.empty(); }
    const std::map<Key, Int>& terms() const { return t_; }
    Int coeff(int u_exp, int v_exp) const;
    int degree_u() const;
    int degree_v() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly operator-() const;
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly pow(unsigned e) const;
    Int operator()(const Int& u_val, const Int& v_val) const;

    // largest k with (uv)^k dividing the polynomial; nullopt (infinite) for 0
    std::optional<long> uv_valuation() const;

    std::string to_string() const;

private:
    void add_term(const Key& k, const Int& c);
    std::map<Key, Int> t_;
};

} // namespace motivic
