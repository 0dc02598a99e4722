#include "symspec/rational.hpp"

#include <cctype>

namespace symspec {

namespace {

std::optional<BigInt> parse_integer(std::string_view text)
{
    if (text.empty())
        return std::nullopt;
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size())
        return std::nullopt;
    BigInt value = 0;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            return std::nullopt;
        value = value * 10 + (text[pos] - '0');
    }
    return negative ? BigInt(-value) : value;
}

BigInt pow10(long exponent)
{
    BigInt result = 1;
    for (long i = 0; i < exponent; ++i)
        result *= 10;
    return result;
}

std::optional<Rational> parse_decimal(std::string_view text)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    BigInt mantissa = 0;
    long scale = 0;
    bool any_digit = false;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa = mantissa * 10 + (c - '0');
            any_digit = true;
            if (seen_point)
                ++scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit)
        return std::nullopt;
    long exponent = 0;
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E')
            return std::nullopt;
        auto exp = parse_integer(text.substr(pos + 1));
        if (!exp || abs(*exp) > 4000)
            return std::nullopt;
        exponent = exp->convert_to<long>();
    }
    exponent -= scale;
    Rational value = exponent >= 0 ? Rational(mantissa * pow10(exponent))
                                   : Rational(mantissa, pow10(-exponent));
    return negative ? Rational(-value) : value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        return std::nullopt;

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = parse_integer(text.substr(0, slash));
        auto den = parse_integer(text.substr(slash + 1));
        if (!num || !den || *den == 0)
            return std::nullopt;
        return Rational(*num, *den);
    }
    return parse_decimal(text);
}

std::string to_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_fraction_string(const Rational& q)
{
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q)
{
    return q.convert_to<double>();
}

bool is_integer(const Rational& q)
{
    return denominator(q) == 1;
}

BigInt floor(const Rational& q)
{
    BigInt quotient = numerator(q) / denominator(q);  // truncates toward zero
    if (numerator(q) < 0 && quotient * denominator(q) != numerator(q))
        --quotient;
    return quotient;
}

bool is_nonpositive_integer(const Rational& q)
{
    return is_integer(q) && q <= 0;
}

}  // namespace symspec
