// Exact rational scalar used throughout the library, plus the "p/q" text
// representation shared by reports and the CLI.
//
// All arithmetic that feeds a result table is exact; doubles appear only at
// the final step of explicitly floating-point quantities (Fourier transforms
// and distances).  boost::multiprecision's GMP-backed rational keeps values
// canonical (reduced, positive denominator) and cannot overflow.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

#include "spectre/error.hpp"

namespace spectre {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;                       // truncates toward zero
    if (n < 0 && t * d != n) --t;
    return t;
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

inline long long to_ll(const Int& n) { return n.convert_to<long long>(); }

// Serialized form is always "num/den" with den >= 1, including "3/1" for
// integers, so readers never need two parsers.
inline std::string frac_string(const Rat& q) {
    return rat_num(q).str() + "/" + rat_den(q).str();
}

// Accepts "p/q", plain integers, and optional leading '-'.
inline Rat parse_frac(const std::string& text) {
    auto bad = [&]() -> Rat { fail(errc::parse_error, "expected a rational like \"14/45\", got \"" + text + "\""); };
    if (text.empty()) return bad();
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        if (slash == 0 || slash + 1 == text.size()) return bad();
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den <= 0) return bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        return bad();
    }
}

inline Rat rat_pow(Rat base, unsigned exp) {
    Rat out = 1;
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace spectre
