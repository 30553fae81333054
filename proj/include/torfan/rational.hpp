#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace torfan {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Point of the ray lattice N (or of M when used as a facet normal).
using IntVec = std::vector<Int>;
/// Point of M_R with exact rational coordinates.
using RatVec = std::vector<Rat>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// q = num/den in lowest terms with positive denominator. den == 0 throws.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

/// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int t = n / d;
    if (n % d != 0 && n < 0) --t;
    return t;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline std::string format_int(const Int& n) { return n.str(); }

/// "p/q" in lowest terms, or plain "p" when integral.
inline std::string format_rat(const Rat& q) {
    if (is_integral(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        return make_rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw Error("malformed rational '" + text + "'");
    }
}

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

template <typename A, typename B>
auto dot(const std::vector<A>& a, const std::vector<B>& b) {
    if (a.size() != b.size()) throw Error("dot: dimension mismatch");
    decltype(a[0] * b[0]) s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec neg(const RatVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw Error("add: dimension mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec scale(const Rat& t, const RatVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = t * v[i];
    return r;
}

inline bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

inline bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& n) { return n == 0; });
}

/// gcd of absolute values; 0 for the zero vector.
inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline bool is_primitive(const IntVec& v) { return content(v) == 1; }

/// lcm of coordinate denominators: the least m > 0 with m*v integral.
inline Int denominator_lcm(const RatVec& v) {
    Int l = 1;
    for (const Rat& q : v) l = lcm(l, denominator(q));
    return l;
}

/// Clear denominators and divide by the content; the zero vector throws.
/// Sign is normalized so the first nonzero coordinate of the input keeps its sign.
inline IntVec to_primitive_integer(const RatVec& v) {
    Int l = denominator_lcm(v);
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = numerator(v[i] * l);
    Int c = content(w);
    if (c == 0) throw Error("to_primitive_integer: zero vector");
    for (Int& x : w) x /= c;
    return w;
}

template <typename T>
bool lex_less(const std::vector<T>& a, const std::vector<T>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <typename T>
std::string format_vec(const std::vector<T>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        if constexpr (std::is_same_v<T, Rat>)
            s += format_rat(v[i]);
        else
            s += v[i].str();
    }
    return s + ")";
}

}  // namespace torfan
