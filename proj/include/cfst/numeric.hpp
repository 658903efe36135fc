#pragma once

// Exact integer/rational arithmetic used throughout. Convergent denominators
// overflow machine words after a few dozen partial quotients, so everything
// downstream of the word layer works on arbitrary-precision values.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cfst {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const BigRat& r) { return boost::multiprecision::denominator(r); }

// cpp_rational's (num, den) constructor rejects negative denominators in
// this Boost version; normalize the sign first.
inline BigRat make_rat(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return BigRat(num, den);
}

// Floor division (cpp_int's operator/ truncates toward zero).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = isqrt(n);
    return r * r == n;
}

inline BigInt pow_int(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// Natural log of a positive big integer. Splits off the most significant
// bits so the result stays accurate (absolute error ~1e-12) far beyond the
// double range; growth estimates need ~1e-9 at the log level.
inline double log_big(const BigInt& n) {
    if (n <= 0) throw std::domain_error("log_big requires a positive value");
    const std::size_t bits = boost::multiprecision::msb(n);  // floor(log2 n)
    if (bits <= 52) return std::log(n.convert_to<double>());
    BigInt top = n >> static_cast<unsigned>(bits - 52);      // 53-bit leading chunk
    return std::log(top.convert_to<double>()) + static_cast<double>(bits - 52) * std::log(2.0);
}

inline std::string to_string(const BigInt& n) { return n.str(); }

// Rationals serialize as "p" or "p/q".
inline std::string rat_to_string(const BigRat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline BigRat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return make_rat(std::move(num), std::move(den));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + text + "' (expected p or p/q)");
    }
}

inline BigInt rat_floor(const BigRat& r) { return floor_div(numerator(r), denominator(r)); }

inline BigInt rat_ceil(const BigRat& r) {
    return -floor_div(-numerator(r), denominator(r));
}

inline double rat_to_double(const BigRat& r) { return r.convert_to<double>(); }

}  // namespace cfst
