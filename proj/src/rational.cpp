#include "rational.hpp"

#include <cctype>

#include "errors.hpp"

namespace leibniz {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational rat_parse(const std::string& text) {
    const size_t slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    size_t start = 0;
    if (!num.empty() && num[0] == '-') start = 1;
    if (!all_digits(num, start, num.size()))
        throw ParseError("invalid rational literal '" + text + "'");
    if (slash != std::string::npos) {
        const std::string den = text.substr(slash + 1);
        if (!all_digits(den, 0, den.size()))
            throw ParseError("invalid rational literal '" + text + "'");
        bool all_zero = true;
        for (char c : den)
            if (c != '0') { all_zero = false; break; }
        if (all_zero) throw ParseError("zero denominator in '" + text + "'");
    }
    mpq_class value;
    if (value.set_str(text, 10) != 0)
        throw ParseError("invalid rational literal '" + text + "'");
    value.canonicalize();
    return value;
}

std::string rat_str(const Rational& value) {
    return value.get_str();
}

bool vec_is_zero(const Vec& v) {
    for (const Rational& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace leibniz
