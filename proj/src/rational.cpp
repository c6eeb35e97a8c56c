#include <qdivisor/rational.hpp>

#include <stdexcept>

namespace qdivisor {

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer factorial(long n)
{
    if (n < 0) {
        throw std::domain_error("factorial of a negative integer");
    }
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Rational ratio(const Integer &num, const Integer &den)
{
    if (den == 0) {
        throw std::domain_error("ratio: zero denominator");
    }
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Rational power(const Rational &base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            throw std::domain_error("zero raised to a negative power");
        }
        return power(Rational(1) / base, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational out(num, den);
    out.canonicalize();
    return out;
}

std::string to_string(const Rational &value)
{
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_str();
}

Rational parse_rational(std::string_view text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    const auto valid_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };
    const auto slash = text.find('/');
    std::string num(text.substr(0, slash));
    std::string den = slash == std::string_view::npos ? std::string("1") : std::string(text.substr(slash + 1));
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
    if (num.front() == '+') {
        num.erase(0, 1);
    }
    Integer d(den);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in rational literal");
    }
    Rational out(Integer(num), d);
    out.canonicalize();
    return out;
}

} // namespace qdivisor
