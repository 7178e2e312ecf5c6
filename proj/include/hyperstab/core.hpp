#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hyperstab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Bad arguments supplied by a caller (maps to CLI exit code 2).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computed quantity violated an identity that must hold.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// The requested case has no printed closed form, or exceeds a resource bound.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rational& r)
{
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Int ipow(const Int& base, unsigned e)
{
    Int r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

inline long long ipow_ll(long long base, unsigned e)
{
    long long r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        if constexpr (std::is_same_v<T, std::string>) out += v[i];
        else out += std::to_string(v[i]);
    }
    return out;
}

} // namespace hyperstab
