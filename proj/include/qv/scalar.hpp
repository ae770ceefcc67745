#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qv {

// Thrown for violated preconditions and malformed input; the CLI maps it to
// exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& x) { return x == 0; }

// Element of the prime field F_p for a small prime p. A default-constructed
// value has p == 0 and acts as an unbound 0/1 literal: it adopts the modulus
// of the other operand on first use, so zero-filled matrices can be built
// before the modulus is known.
struct Fp {
    std::int64_t v = 0;
    std::int64_t p = 0;

    Fp() = default;
    Fp(std::int64_t value, std::int64_t prime) : v(value), p(prime) {
        if (p < 0) throw Error("Fp: negative modulus");
        if (p > 0) {
            v %= p;
            if (v < 0) v += p;
        }
    }

    static Fp zero(std::int64_t prime) { return Fp(0, prime); }
    static Fp one(std::int64_t prime) { return Fp(1, prime); }

    friend std::int64_t joint_modulus(const Fp& a, const Fp& b) {
        if (a.p != 0 && b.p != 0 && a.p != b.p)
            throw Error("Fp: mixed moduli " + std::to_string(a.p) + " and " +
                        std::to_string(b.p));
        return a.p != 0 ? a.p : b.p;
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        return Fp(a.v + b.v, joint_modulus(a, b));
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        return Fp(a.v - b.v, joint_modulus(a, b));
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        return Fp(a.v * b.v, joint_modulus(a, b));
    }
    Fp operator-() const { return Fp(-v, p); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {
        if (p == 0 && (v == 1 || v == -1)) return *this;
        if (p == 0) throw Error("Fp: inverse needs a bound modulus");
        if (v == 0) throw Error("Fp: division by zero");
        // extended Euclid
        std::int64_t a = v, m = p, x0 = 1, x1 = 0;
        while (m != 0) {
            std::int64_t q = a / m;
            std::int64_t t = a - q * m;
            a = m; m = t;
            t = x0 - q * x1;
            x0 = x1; x1 = t;
        }
        return Fp(x0, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v != b.v; }
    friend bool operator<(const Fp& a, const Fp& b) { return a.v < b.v; }
};

inline bool is_zero(const Fp& x) { return x.v == 0; }

// Canonical text form: "n" when the denominator is 1, otherwise "n/d".
inline std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline std::string to_string(const Fp& x) { return std::to_string(x.v); }

// Accepts "n" and "n/d" with optional sign; denominator must be positive
// after normalization.
inline Rational parse_rational(const std::string& s) {
    auto bad = [&]() -> Error { return Error("malformed rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw bad();
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw bad();
    }
}

}  // namespace qv
