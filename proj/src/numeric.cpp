#include "k3walls/numeric.hpp"

#include <cctype>

namespace k3walls {

std::string to_string(const Rational& q) { return num(q).str() + "/" + den(q).str(); }

std::string to_string(const Integer& n) { return n.str(); }

static bool all_digits(const std::string& s, std::size_t from)
{
    if (from >= s.size()) return false;
    for (std::size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(const std::string& raw)
{
    std::string s = raw;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (!all_digits(s, start)) throw Error("invalid_argument", "not an integer: '" + raw + "'");
    Integer v(s.substr(start));
    return s[0] == '-' ? Integer(-v) : v;
}

Rational parse_rational(const std::string& raw)
{
    auto slash = raw.find('/');
    if (slash != std::string::npos) {
        Integer p = parse_integer(raw.substr(0, slash));
        Integer q = parse_integer(raw.substr(slash + 1));
        if (q == 0) throw Error("invalid_argument", "zero denominator in '" + raw + "'");
        return Rational(p, q);
    }
    auto dot = raw.find('.');
    if (dot == std::string::npos) return Rational(parse_integer(raw));
    std::string whole = raw.substr(0, dot), frac = raw.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    std::string digits = (neg || (!whole.empty() && whole[0] == '+')) ? whole.substr(1) : whole;
    if (digits.empty()) digits = "0";
    if (!all_digits(digits, 0) || !all_digits(frac, 0))
        throw Error("invalid_argument", "not a number: '" + raw + "'");
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Rational v(Integer(digits) * scale + Integer(frac), scale);
    return neg ? Rational(-v) : v;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

}  // namespace k3walls
