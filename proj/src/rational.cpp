#include "hgd/rational.hpp"

#include <cctype>

namespace hgd {

std::optional<Rational> Rational::parse(std::string_view text)
{
    auto parse_int = [](std::string_view s, BigInt & out) -> bool {
        if (s.empty())
            return false;
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = (s[0] == '-');
            i = 1;
        }
        if (i == s.size())
            return false;
        BigInt v = 0;
        for (; i < s.size(); ++i) {
            if (! std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
            v = v * 10 + (s[i] - '0');
        }
        out = neg ? -v : v;
        return true;
    };

    auto slash = text.find('/');
    BigInt num, den = 1;
    if (slash == std::string_view::npos) {
        if (! parse_int(text, num))
            return std::nullopt;
    }
    else {
        if (! parse_int(text.substr(0, slash), num))
            return std::nullopt;
        if (! parse_int(text.substr(slash + 1), den))
            return std::nullopt;
        if (den == 0)
            return std::nullopt;
    }
    return Rational(num, den);
}

std::string Rational::str_canonical() const
{
    return numerator().str() + "/" + denominator().str();
}

std::string Rational::str() const
{
    if (is_integer())
        return numerator().str();
    return str_canonical();
}

} // namespace hgd
