#include "drkit/rational.hpp"

namespace drkit {

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("sign without digits in rational literal");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("bad digit in rational literal: '" + std::string(text) + "'");
    return BigInt(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::int64_t to_int64(const BigInt& v) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("value does not fit in 64 bits: " + v.str());
    return v.convert_to<std::int64_t>();
}

}  // namespace drkit
