#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace k3walls {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Every failure carries a short stable code; the CLI surfaces it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

// "p/q", lowest terms, q > 0 (integers too: "3/1").
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

// Accepts "p/q", "n" or a finite decimal like "-0.25".
Rational parse_rational(const std::string& s);
Integer parse_integer(const std::string& s);

double to_double(const Rational& q);

// Floor of a rational, towards -inf.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace k3walls
