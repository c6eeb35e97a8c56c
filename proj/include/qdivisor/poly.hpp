#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <qdivisor/rational.hpp>

namespace qdivisor {

// Dense univariate polynomial with exact rational coefficients. Trailing zero
// coefficients are trimmed, so the zero polynomial has no coefficients.
class Poly
{
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(const Rational &c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const std::vector<Rational> &coeffs() const { return coeffs_; }

    Rational evaluate(const Rational &x) const;
    // p(alpha * x + beta)
    Poly compose_affine(const Rational &alpha, const Rational &beta) const;

    friend Poly operator+(const Poly &a, const Poly &b);
    friend Poly operator-(const Poly &a, const Poly &b);
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(const Rational &c, const Poly &a);
    friend bool operator==(const Poly &a, const Poly &b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

} // namespace qdivisor
