#include "lefschetz/rational.hpp"

#include <cctype>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || den.empty() || !is_integer_literal(den) ||
        den.front() == '-' || den.front() == '+')
        throw MalformedInput("not an exact fraction: \"" + std::string(text) + "\"");
    const mpz_class n{strip_plus(num)};
    const mpz_class d{std::string(den)};
    if (d == 0) throw MalformedInput("zero denominator in \"" + std::string(text) + "\"");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_str();
}

}  // namespace lefschetz
