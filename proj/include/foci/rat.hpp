#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>

#include "foci/errors.hpp"

namespace foci {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Int rat_floor(const Rat& r) {
    Int q = r.numerator() / r.denominator();
    if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
    return q;
}

inline int sgn(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
inline int sgn(const Rat& v) { return sgn(v.numerator()); }

inline std::string int_str(const Int& v) { return v.str(); }

// Exact rationals travel through JSON as "p/q" strings ("p" when q = 1).
inline std::string rat_str(const Rat& r) {
    if (r.denominator() == 1) return r.numerator().str();
    return r.numerator().str() + "/" + r.denominator().str();
}

inline Rat parse_rat(const std::string& s) {
    auto bad = [&] { throw ValidationError("malformed rational '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s), 1);
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat();  // unreachable
}

inline double rat_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace foci
