#include "hypermatch/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>

#include "hypermatch/errors.hpp"

namespace hm {

BigInt floor_rat(const Rat& r) {
    BigInt q = r.numerator() / r.denominator();
    // cpp_int division truncates toward zero; fix up negatives with a remainder.
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) q -= 1;
    return q;
}

BigInt ceil_rat(const Rat& r) {
    BigInt q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) q += 1;
    return q;
}

Rat parse_rational(const std::string& text) {
    auto parse_int = [](const std::string& part) -> BigInt {
        if (part.empty()) throw ParseError("empty rational component in '" + part + "'");
        size_t i = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (i == part.size()) throw ParseError("sign without digits in rational");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw ParseError("bad rational '" + part + "'");
        return BigInt(part);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text), 1);
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational '" + text + "'");
    return Rat(num, den);
}

std::string format_rational(const Rat& r) {
    if (r.denominator() == 1) return r.numerator().str();
    return r.numerator().str() + "/" + r.denominator().str();
}

std::optional<Rat> exact_sqrt(const Rat& r) {
    if (r < Rat(0)) return std::nullopt;
    BigInt sn = boost::multiprecision::sqrt(r.numerator());
    BigInt sd = boost::multiprecision::sqrt(r.denominator());
    if (sn * sn != r.numerator() || sd * sd != r.denominator()) return std::nullopt;
    return Rat(sn, sd);
}

BigInt pow_int(const BigInt& base, unsigned exp) {
    BigInt acc = 1;
    for (unsigned i = 0; i < exp; ++i) acc *= base;
    return acc;
}

BigInt factorial_big(unsigned m) {
    BigInt acc = 1;
    for (unsigned i = 2; i <= m; ++i) acc *= i;
    return acc;
}

}  // namespace hm
