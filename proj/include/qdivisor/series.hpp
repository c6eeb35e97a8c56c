#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <qdivisor/rational.hpp>

namespace qdivisor {

struct ShiftMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonUnitConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Truncated power series sum_{n=0}^{order} c_n q^(shift + n) with exact
// rational coefficients.
//
// The shift is a rational with denominator dividing 24 (theta_2, eta and the
// q^(1/8) series need it). An integral shift, and the integer part of a
// fractional shift above 1, is folded into the coefficient vector on
// construction, so a series with integral exponents always reports shift 0.
// Values are immutable once built.
class QSeries
{
public:
    // The zero series to order 0.
    QSeries();
    // The zero series to the given order.
    explicit QSeries(int order);
    QSeries(std::vector<Rational> coeffs, Rational shift = 0);

    static QSeries constant(const Rational &c, int order);
    // c * q^exponent, truncated at order (zero if exponent > order).
    static QSeries monomial(const Rational &c, int exponent, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational &shift() const { return shift_; }
    std::span<const Rational> coeffs() const { return coeffs_; }

    // Unchecked access for hot loops; n must lie in [0, order].
    const Rational &operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }

    bool is_zero() const;
    QSeries truncated(int order) const;

    friend bool operator==(const QSeries &a, const QSeries &b)
    {
        return a.shift_ == b.shift_ && a.coeffs_ == b.coeffs_;
    }

private:
    void normalize();

    Rational shift_;
    std::vector<Rational> coeffs_;
};

QSeries add(const QSeries &a, const QSeries &b);
QSeries sub(const QSeries &a, const QSeries &b);
QSeries negate(const QSeries &a);
QSeries scale(const QSeries &a, const Rational &c);

// Cauchy product. The parallel version splits the output coefficients across
// OpenMP threads; mul_serial is the single-threaded reference.
QSeries mul(const QSeries &a, const QSeries &b);
QSeries mul_serial(const QSeries &a, const QSeries &b);

// Multiplicative inverse; the recurrence only visits the nonzero coefficients
// of a, so sparse denominators such as 1 + a q^m + q^(2m) cost O(order).
QSeries invert(const QSeries &a);
QSeries divide(const QSeries &num, const QSeries &den);
QSeries pow(const QSeries &a, unsigned exponent);

// D = q d/dq, applied termwise including the fractional shift.
QSeries derive(const QSeries &a);

// q -> q^k, keeping the order of the input.
QSeries substitute_power(const QSeries &a, int k);

// Multiplies by q^r for rational r.
QSeries times_qpow(const QSeries &a, const Rational &r);

Rational coefficient(const QSeries &a, int n);

// True when shifts match and c_n agree for all n <= max_order.
bool equal_to_order(const QSeries &a, const QSeries &b, int max_order);

QSeries operator+(const QSeries &a, const QSeries &b);
QSeries operator-(const QSeries &a, const QSeries &b);
QSeries operator-(const QSeries &a);
QSeries operator*(const QSeries &a, const QSeries &b);
QSeries operator*(const Rational &c, const QSeries &a);

std::string to_string(const QSeries &a, int max_terms = 12);

} // namespace qdivisor
