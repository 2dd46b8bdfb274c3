#include "vkcgs/rational.hpp"

#include <stdexcept>

namespace vkcgs {

std::string formatRational(const Rational& value) {
    const BigInt num = numerator(value);
    const BigInt den = denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

namespace {

BigInt parseInteger(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    try {
        return BigInt(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed integer literal: '" + text + "'");
    }
}

}  // namespace

Rational parseRational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parseInteger(text));
    }
    BigInt num = parseInteger(text.substr(0, slash));
    BigInt den = parseInteger(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    if (den < 0) {  // keep the canonical form: positive denominator
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

BigInt floorRational(const Rational& value) {
    const BigInt num = numerator(value);
    const BigInt den = denominator(value);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) {
        --q;
    }
    return q;
}

}  // namespace vkcgs
