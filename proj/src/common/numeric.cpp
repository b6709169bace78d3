#include "fracspec/common/numeric.hpp"

#include "fracspec/common/errors.hpp"

#include <cctype>
#include <cmath>

namespace fracspec {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    s = trim(s);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ConfigError("malformed rational '" + std::string(whole) + "'");
    BigInt value = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ConfigError("malformed rational '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(s.substr(0, slash), text);
        const BigInt den = parse_integer(s.substr(slash + 1), text);
        if (den == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view frac = s.substr(dot + 1);
        std::string_view head = s.substr(0, dot);
        const bool negative = !head.empty() && head.front() == '-';
        if (head.empty() || head == "-" || head == "+") head = "0";
        BigInt den = 1;
        BigInt frac_num = 0;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ConfigError("malformed rational '" + std::string(text) + "'");
            frac_num = frac_num * 10 + (c - '0');
            den *= 10;
        }
        BigInt int_part = parse_integer(head, text);
        if (int_part < 0) int_part = -int_part;
        Rational value = Rational(int_part) + Rational(frac_num, den);
        return negative ? Rational(-value) : value;
    }
    return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result = 1;
    Rational factor = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= factor;
        factor *= factor;
        exponent >>= 1u;
    }
    return result;
}

double pairwise_sum(std::span<const double> values) {
    constexpr std::size_t kBlock = 32;
    if (values.size() <= kBlock) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double unit_ball_volume(int n) {
    return std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double unit_sphere_area(int n) {
    return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n);
}

}  // namespace fracspec
