#include "matslocc/scalar.hpp"

#include <cctype>
#include <cstddef>

namespace matslocc {

std::string format_rational(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string format_scalar(const GaussianRational& x) {
    if (x.is_real()) return format_rational(x.re);
    std::string out = format_rational(x.re);
    if (sgn(x.im) >= 0)
        out += "+" + format_rational(x.im) + "*i";
    else
        out += "-" + format_rational(-x.im) + "*i";
    return out;
}

namespace {

// One signed term: `123`, `-4/5`, `i`, `2*i`, `-7/3*i`.
struct Term {
    Rational value;
    bool imaginary;
};

size_t parse_term(const std::string& s, size_t pos, Term& t) {
    size_t n = s.size();
    bool neg = false;
    if (pos < n && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos < n && s[pos] == 'i') {
        t.value = neg ? -1 : 1;
        t.imaginary = true;
        return pos + 1;
    }
    size_t start = pos;
    while (pos < n && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("scalar: expected digits at position " + std::to_string(start) + " in '" + s + "'");
    std::string num = s.substr(start, pos - start);
    std::string den = "1";
    if (pos < n && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < n && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw ParseError("scalar: missing denominator in '" + s + "'");
        den = s.substr(dstart, pos - dstart);
    }
    Integer den_z(den);
    if (den_z == 0) throw ParseError("scalar: zero denominator in '" + s + "'");
    Rational v(Integer(num), den_z);
    v.canonicalize();
    if (neg) v = -v;
    t.imaginary = false;
    if (pos + 1 < n && s[pos] == '*' && s[pos + 1] == 'i') {
        t.imaginary = true;
        pos += 2;
    }
    t.value = v;
    return pos;
}

} // namespace

GaussianRational parse_scalar(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("scalar: empty string");
    GaussianRational out;
    size_t pos = 0;
    Term t;
    pos = parse_term(s, pos, t);
    (t.imaginary ? out.im : out.re) += t.value;
    if (pos < s.size()) {
        if (s[pos] != '+' && s[pos] != '-')
            throw ParseError("scalar: unexpected character '" + std::string(1, s[pos]) + "' in '" + raw + "'");
        pos = parse_term(s, pos, t);
        if (!t.imaginary) throw ParseError("scalar: second term must be imaginary in '" + raw + "'");
        out.im += t.value;
    }
    if (pos != s.size()) throw ParseError("scalar: trailing characters in '" + raw + "'");
    return out;
}

Rational parse_rational(const std::string& s) {
    GaussianRational g = parse_scalar(s);
    if (!g.is_real()) throw ParseError("expected a real rational, got '" + s + "'");
    return g.re;
}

} // namespace matslocc
