#include "visgame/geom/scalar.h"

#include <cctype>
#include <stdexcept>

namespace visgame::geom {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("malformed integer: " + std::string(s));
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

Scalar parse_decimal(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        exponent = parse_integer(s.substr(e + 1)).get_si();
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("malformed decimal: " + std::string(s));
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed decimal: " + std::string(s));
        digits = std::string(s);
    }
    if (digits.empty()) digits = "0";
    mpz_class num(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Scalar q = exponent >= 0 ? Scalar(num * scale) : Scalar(num, scale);
    q.canonicalize();
    return negative ? Scalar(-q) : q;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty scalar");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        Scalar q(num, den);
        q.canonicalize();
        return q;
    }
    return parse_decimal(text);
}

std::string format_scalar(const Scalar& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Scalar& value) { return value.get_d(); }

int sign(const Scalar& value) { return sgn(value); }

Scalar ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace visgame::geom
