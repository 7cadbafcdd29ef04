// Univariate rational functions over the rationals: the symbolic-q scalar
// backend. Elements are fractions num/den of polynomials in q, normalized so
// that gcd(num, den) = 1 and den is monic.

#pragma once

#include "fdalg/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fdalg {

/// Dense polynomial in one indeterminate q with Rat coefficients.
/// coeffs[i] is the coefficient of q^i; no trailing zeros are stored.
class QPoly {
public:
    QPoly() = default;
    QPoly(Rat c) { if (!c.is_zero()) c_.push_back(std::move(c)); }
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly variable() { return QPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    const Rat& leading() const { return c_.back(); }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_constant() const { return c_.size() <= 1; }
    Rat constant_value() const { return c_.empty() ? Rat(0) : c_[0]; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return QPoly(std::move(r));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return QPoly(std::move(r));
    }
    QPoly operator-() const {
        std::vector<Rat> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = -c_[i];
        return QPoly(std::move(r));
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(r));
    }

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        if (d.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
        QPoly rem = *this;
        std::vector<Rat> q;
        if (rem.degree() >= d.degree()) q.assign(rem.degree() - d.degree() + 1, Rat(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int shift = rem.degree() - d.degree();
            Rat f = rem.leading() / d.leading();
            q[shift] = f;
            std::vector<Rat> nr(rem.c_);
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                nr[i + shift] -= f * d.c_[i];
            nr.pop_back(); // leading term cancels exactly
            rem = QPoly(std::move(nr));
        }
        return {QPoly(std::move(q)), rem};
    }

    QPoly monic() const {
        if (is_zero()) return *this;
        Rat inv = Rat(1) / leading();
        std::vector<Rat> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * inv;
        return QPoly(std::move(r));
    }

    static QPoly gcd(QPoly a, QPoly b) {
        while (!b.is_zero()) {
            QPoly r = a.divmod(b).second;
            a = std::move(b);
            b = r.monic(); // keeps coefficient growth in check
        }
        return a.monic();
    }

    std::string str() const;
    static QPoly parse(const std::string& s);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// Rational function in q. The field Q(q).
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(long n) : num_(Rat(n)), den_(Rat(1)) {}
    RatFunc(Rat c) : num_(std::move(c)), den_(Rat(1)) {}
    RatFunc(QPoly num, QPoly den = QPoly(Rat(1))) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    static RatFunc variable() { return RatFunc(QPoly::variable()); }
    static RatFunc parse(const std::string& s);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == QPoly(Rat(1)) && den_ == QPoly(Rat(1)); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    std::string str() const {
        if (den_ == QPoly(Rat(1))) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    RatFunc operator-() const { RatFunc r; r.num_ = -num_; r.den_ = den_; return r; }
    RatFunc& operator+=(const RatFunc& o) { return *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    RatFunc& operator-=(const RatFunc& o) { return *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    RatFunc& operator*=(const RatFunc& o) { return *this = RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc& operator/=(const RatFunc& o) {
        if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return *this = RatFunc(num_ * o.den_, den_ * o.num_);
    }

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) { den_ = QPoly(Rat(1)); return; }
        QPoly g = QPoly::gcd(num_, den_);
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
        Rat lead = den_.leading();
        if (!lead.is_one()) {
            QPoly inv = QPoly(Rat(1) / lead);
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
    QPoly num_, den_;
};

// ---- string form ----------------------------------------------------------
// Polynomials print as e.g. "q^3-2*q+1/2", highest degree first, no spaces.
// Rational functions with nontrivial denominator print as "(num)/(den)".

inline std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = degree(); e >= 0; --e) {
        Rat c = coeff(static_cast<std::size_t>(e));
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        if (e == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += e == 1 ? "q" : "q^" + std::to_string(e);
        }
    }
    return out;
}

inline QPoly QPoly::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("QPoly::parse: empty string");
    std::vector<Rat> coeffs;
    auto add_term = [&](const std::string& term) {
        if (term.empty()) throw std::invalid_argument("QPoly::parse: empty term in '" + s + "'");
        std::string coef = term;
        long expo = 0;
        auto qpos = term.find('q');
        if (qpos != std::string::npos) {
            coef = term.substr(0, qpos);
            std::string rest = term.substr(qpos + 1);
            if (rest.empty())
                expo = 1;
            else if (rest[0] == '^')
                expo = std::stol(rest.substr(1));
            else
                throw std::invalid_argument("QPoly::parse: bad term '" + term + "'");
            if (!coef.empty() && coef.back() == '*') coef.pop_back();
            if (coef.empty() || coef == "+") coef = "1";
            else if (coef == "-") coef = "-1";
        }
        if (expo < 0) throw std::invalid_argument("QPoly::parse: negative exponent in '" + term + "'");
        if (coeffs.size() <= static_cast<std::size_t>(expo)) coeffs.resize(expo + 1, Rat(0));
        coeffs[expo] += Rat::parse(coef);
    };
    std::size_t start = 0;
    for (std::size_t i = 1; i <= t.size(); ++i) {
        if (i == t.size() || ((t[i] == '+' || t[i] == '-') && t[i - 1] != '^' && t[i - 1] != '+' && t[i - 1] != '-')) {
            add_term(t.substr(start, i - start));
            start = i;
        }
    }
    return QPoly(std::move(coeffs));
}

inline RatFunc RatFunc::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("RatFunc::parse: empty string");
    if (t[0] == '(') {
        auto close = t.find(')');
        if (close == std::string::npos || close + 2 >= t.size() || t[close + 1] != '/' ||
            t[close + 2] != '(' || t.back() != ')')
            throw std::invalid_argument("RatFunc::parse: expected '(num)/(den)' in '" + s + "'");
        QPoly num = QPoly::parse(t.substr(1, close - 1));
        QPoly den = QPoly::parse(t.substr(close + 3, t.size() - close - 4));
        return RatFunc(std::move(num), std::move(den));
    }
    // No parenthesized denominator: either a polynomial or a plain rational
    // constant "p/q" (both parses agree on the latter).
    if (t.find('q') == std::string::npos && t.find('/') != std::string::npos)
        return RatFunc(Rat::parse(t));
    return RatFunc(QPoly::parse(t));
}

} // namespace fdalg
