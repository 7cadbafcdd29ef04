// Exact rational scalars backed by GMP.

#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <utility>

namespace fdalg {

/// Arbitrary-precision rational number. Always kept in canonical form
/// (gcd(num, den) = 1, den > 0), so equality is plain comparison.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }

    /// Parses "p" or "p/q" (optionally signed). Throws on malformed input.
    static Rat parse(const std::string& s);

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

private:
    mpq_class v_;
};

inline Rat Rat::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("Rat::parse: empty string");
    if (t[0] == '+') t.erase(0, 1); // GMP rejects an explicit plus sign
    auto ok_part = [](const std::string& p, bool sign_allowed) {
        if (p.empty()) return false;
        std::size_t i = (sign_allowed && (p[0] == '-' || p[0] == '+')) ? 1 : 0;
        if (i == p.size()) return false;
        for (; i < p.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(p[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    if (slash == std::string::npos) {
        if (!ok_part(t, true)) throw std::invalid_argument("Rat::parse: bad integer '" + s + "'");
        return Rat(mpq_class(t));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!ok_part(num, true) || !ok_part(den, false))
        throw std::invalid_argument("Rat::parse: bad fraction '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("Rat::parse: zero denominator in '" + s + "'");
    return Rat(mpq_class(mpz_class(num), d));
}

} // namespace fdalg
