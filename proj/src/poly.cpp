#include "motivic/poly.hpp"

#include <sstream>

namespace motivic {

Poly Poly::monomial(const Int& coeff, int degree) {
    if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    Poly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<size_t>(degree) + 1, Int(0));
        p.c_.back() = coeff;
    }
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

Int Poly::operator()(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Int& c = c_[i];
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

BiPoly BiPoly::monomial(const Int& coeff, int u_exp, int v_exp) {
    if (u_exp < 0 || v_exp < 0) throw std::invalid_argument("BiPoly::monomial: negative exponent");
    BiPoly p;
    if (coeff != 0) p.t_[{u_exp, v_exp}] = coeff;
    return p;
}

BiPoly BiPoly::uv() { return monomial(1, 1, 1); }

Int BiPoly::coeff(int u_exp, int v_exp) const {
    auto it = t_.find({u_exp, v_exp});
    return it == t_.end() ? Int(0) : it->second;
}

int BiPoly::degree_u() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first);
    return d;
}

int BiPoly::degree_v() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.second);
    return d;
}

void BiPoly::add_term(const Key& k, const Int& c) {
    auto [it, inserted] = t_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    } else if (it->second == 0) {
        t_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_)
            r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r(Int(1));
    BiPoly b = *this;
    while (e != 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Int BiPoly::operator()(const Int& u_val, const Int& v_val) const {
    Int r = 0;
    for (const auto& [k, c] : t_)
        r += c * int_pow(u_val, static_cast<unsigned long>(k.first)) *
             int_pow(v_val, static_cast<unsigned long>(k.second));
    return r;
}

std::optional<long> BiPoly::uv_valuation() const {
    if (t_.empty()) return std::nullopt;
    long v = -1;
    for (const auto& [k, c] : t_) {
        long m = std::min(k.first, k.second);
        if (v < 0 || m < v) v = m;
    }
    return v;
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool has_var = k.first > 0 || k.second > 0;
        if (!has_var || a != 1) {
            os << a.str();
            if (has_var) os << "*";
        }
        if (k.first > 0) {
            os << "u";
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second > 0) {
            if (k.first > 0) os << "*";
            os << "v";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

} // namespace motivic
