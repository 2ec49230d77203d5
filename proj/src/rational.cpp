#include "qsc/rational.hpp"

#include "qsc/errors.hpp"

#include <cctype>

namespace qsc {

namespace {

Integer parse_integer(std::string_view text, bool allow_sign) {
    std::size_t pos = 0;
    bool negative = false;
    if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size())
        throw ParseError("expected digits in '" + std::string(text) + "'");
    Integer value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("invalid rational literal '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, true));
    const Integer num = parse_integer(text.substr(0, slash), true);
    const Integer den = parse_integer(text.substr(slash + 1), false);
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    if (denominator(value) == 1)
        return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

Integer floor(const Rational& value) {
    const Integer num = numerator(value);
    const Integer den = denominator(value);
    Integer q = num / den;
    if (num % den != 0 && num < 0)
        q -= 1;
    return q;
}

} // namespace qsc
