#include "treeweights/rational.hpp"

#include <cctype>

namespace treeweights {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den)) {
            throw ParseError("invalid fraction: '" + text + "'");
        }
        BigInt d(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rational(BigInt(num), d);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (!is_integer_token(whole.empty() ? "0" : whole) || frac.empty()) {
            throw ParseError("invalid decimal: '" + text + "'");
        }
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw ParseError("invalid decimal: '" + text + "'");
            }
        }
        const bool negative = !whole.empty() && whole[0] == '-';
        BigInt whole_part = whole.empty() || whole == "-" || whole == "+"
                                ? BigInt(0)
                                : BigInt(whole);
        if (whole_part < 0) whole_part = -whole_part;
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const BigInt numer = whole_part * scale + BigInt(frac);
        Rational r(numer, scale);
        return negative ? -r : r;
    }
    if (!is_integer_token(text)) {
        throw ParseError("invalid number: '" + text + "'");
    }
    return Rational(BigInt(text));
}

std::string format_rational(const Rational& value) {
    const BigInt num = numerator(value);
    const BigInt den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace treeweights
