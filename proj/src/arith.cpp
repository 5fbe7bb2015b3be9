#include "heartfan/arith.hpp"

#include <cctype>
#include <stdexcept>

namespace heartfan {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

namespace {

bool is_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw std::invalid_argument("not an exact rational: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(trim(s.substr(0, slash)));
    auto den_text = trim(s.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw std::invalid_argument("sign in denominator: '" + std::string(s) + "'");
    Integer den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::vector<Rational> parse_rational_list(std::string_view text, char sep) {
    std::vector<Rational> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        out.push_back(parse_rational(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

std::string format_fixed(const Rational& x, int digits) {
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rational scaled = x * scale;
    Integer num = abs(scaled.get_num());
    Integer den = scaled.get_den();
    Integer q = (2 * num + den) / (2 * den);   // round half away from zero
    std::string digits_str = q.get_str();
    if (static_cast<int>(digits_str.size()) <= digits)
        digits_str = std::string(digits + 1 - digits_str.size(), '0') + digits_str;
    std::string whole = digits_str.substr(0, digits_str.size() - digits);
    std::string frac = digits_str.substr(digits_str.size() - digits);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = (sign(x) < 0 && q != 0) ? "-" : "";
    out += whole;
    if (!frac.empty()) out += "." + frac;
    return out;
}

int sign(const Integer& x) { return sgn(x); }

int sign(const Rational& x) { return sgn(x); }

}  // namespace heartfan
