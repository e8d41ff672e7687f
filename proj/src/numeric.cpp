#include "gms/numeric.hpp"

#include <stdexcept>

namespace gms {

BigInt factorial(std::size_t n) {
    BigInt result = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt pow2(std::size_t e) {
    BigInt result = 1;
    result <<= e;
    return result;
}

std::string to_decimal(const Rational& value, std::size_t digits) {
    if (value < 0) {
        throw std::invalid_argument("to_decimal: negative value");
    }
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    BigInt scale = 1;
    for (std::size_t i = 0; i < digits; ++i) {
        scale *= 10;
    }
    const BigInt scaled = num * scale / den;
    std::string text = scaled.str();
    if (digits == 0) {
        return text;
    }
    if (text.size() <= digits) {
        text.insert(0, digits + 1 - text.size(), '0');
    }
    text.insert(text.size() - digits, ".");
    return text;
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

}  // namespace gms
