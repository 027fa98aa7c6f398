#pragma once
// Scalar backends: exact Gaussian rationals (cpp_rational pairs) and complex
// doubles, behind one trait interface.  Also the shared text grammar for
// rational-or-decimal scalars ("p/q", "3", "-0.25", "1e-3").

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace loinv {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// floor square root; empty if the argument is not a perfect square
inline std::optional<Int> sqrt_exact(const Int& x) {
    if (x < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(x);
    if (r * r == x) return r;
    return std::nullopt;
}

// exact square root of a nonnegative rational, if it exists
inline std::optional<Rational> sqrt_exact(const Rational& x) {
    auto n = sqrt_exact(rat_num(x));
    auto d = sqrt_exact(rat_den(x));
    if (n && d) return Rational(*n, *d);
    return std::nullopt;
}

struct GaussianRational {
    Rational re, im;
    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(int r) : re(r), im(0) {}
    GaussianRational(int r, int i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm_sq() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational inverse() const {
        Rational n = norm_sq();
        if (n == 0) throw std::domain_error("division by zero");
        return {re / n, -im / n};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

// ---------------------------------------------------------------- text grammar

namespace detail {
// strict base-10 integer: [+-]?[0-9]+ (leading zeros are plain digits, never
// an octal prefix as in the cpp_int string constructor)
inline Int parse_int_decimal(const std::string& s) {
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
    if (i == s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    while (i < s.size() && s[i] == '0') ++i;
    std::string digits = s.substr(i);
    for (char c : digits)
        if (!isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad integer '" + s + "'");
    Int v(digits.empty() ? "0" : digits);
    return neg ? Int(-v) : v;
}
}  // namespace detail

// "p/q" | "p" | decimal ("-0.25", "1e-3", "2.5e2"); exact value always
inline Rational parse_rational(const std::string& s_in) {
    std::string s;
    for (char c : s_in) if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty scalar");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int p = detail::parse_int_decimal(s.substr(0, slash));
        Int q = detail::parse_int_decimal(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator in '" + s_in + "'");
        return Rational(p, q);
    }
    // decimal / scientific
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { neg = s[i] == '-'; ++i; }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size() && (isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw std::invalid_argument("bad scalar '" + s_in + "'");
            seen_dot = true;
        } else {
            digits += s[i];
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad scalar '" + s_in + "'");
    long expo = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) { eneg = s[i] == '-'; ++i; }
        if (i == s.size()) throw std::invalid_argument("bad exponent in '" + s_in + "'");
        std::string e;
        for (; i < s.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad scalar '" + s_in + "'");
            e += s[i];
        }
        expo = std::stol(e) * (eneg ? -1 : 1);
    }
    if (i != s.size()) throw std::invalid_argument("bad scalar '" + s_in + "'");
    Rational r(detail::parse_int_decimal(digits));
    long shift = expo - frac_digits;
    Int ten(10);
    if (shift > 0) r *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(shift)));
    if (shift < 0) r /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-shift)));
    return neg ? -r : r;
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << rat_num(r);
    if (rat_den(r) != 1) os << "/" << rat_den(r);
    return os.str();
}

// canonical coefficient text: "p/q" when real, "p/q+r/s i" otherwise
inline std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return to_string(z.re);
    std::string s;
    if (z.re != 0) {
        s = to_string(z.re);
        if (z.im > 0) s += "+";
    }
    if (z.im < 0) s += "-";
    Rational a = z.im < 0 ? Rational(-z.im) : z.im;
    s += to_string(a) + " i";
    return s;
}

// ---------------------------------------------------------------- traits

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool exact = true;
    using real_type = Rational;
    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return {1}; }
    static GaussianRational conj(const GaussianRational& x) { return x.conj(); }
    static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
    static GaussianRational make(const Rational& re, const Rational& im) { return {re, im}; }
    static double abs(const GaussianRational& x) { return std::abs(x.to_complex()); }
    static Rational abs_sq(const GaussianRational& x) { return x.norm_sq(); }
    static Rational real_from(const Int& v) { return Rational(v); }
    static GaussianRational mul_int(const GaussianRational& x, const Int& v) {
        return x * GaussianRational(Rational(v));
    }
    static GaussianRational div_int(const GaussianRational& x, const Int& v) {
        return x * GaussianRational(Rational(1, v));
    }
    static std::complex<double> to_complex(const GaussianRational& x) { return x.to_complex(); }
    static std::string str(const GaussianRational& x) { return to_string(x); }
};

template <>
struct scalar_traits<std::complex<double>> {
    static constexpr bool exact = false;
    using real_type = double;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
    static bool is_zero(const std::complex<double>& x) { return x == std::complex<double>{0.0, 0.0}; }
    static std::complex<double> make(const Rational& re, const Rational& im) {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
    static double abs(const std::complex<double>& x) { return std::abs(x); }
    static double abs_sq(const std::complex<double>& x) { return std::norm(x); }
    static double real_from(const Int& v) { return static_cast<double>(v); }
    static std::complex<double> mul_int(const std::complex<double>& x, const Int& v) {
        return x * static_cast<double>(v);
    }
    static std::complex<double> div_int(const std::complex<double>& x, const Int& v) {
        return x / static_cast<double>(v);
    }
    static std::complex<double> to_complex(const std::complex<double>& x) { return x; }
    static std::string str(const std::complex<double>& x) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", x.real(), x.imag());
        return buf;
    }
};

}  // namespace loinv
