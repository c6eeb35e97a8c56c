#include <qdivisor/poly.hpp>

#include <algorithm>

namespace qdivisor {

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational &c, std::size_t degree)
{
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Poly(std::move(coeffs));
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational Poly::evaluate(const Rational &x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::compose_affine(const Rational &alpha, const Rational &beta) const
{
    // Horner in the polynomial ring.
    const Poly inner{beta, alpha};
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner + Poly{*it};
    }
    return acc;
}

Poly operator+(const Poly &a, const Poly &b)
{
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = a[k] + b[k];
    }
    return Poly(std::move(out));
}

Poly operator-(const Poly &a, const Poly &b)
{
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = a[k] - b[k];
    }
    return Poly(std::move(out));
}

Poly operator*(const Poly &a, const Poly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly operator*(const Rational &c, const Poly &a)
{
    std::vector<Rational> out(a.coeffs_);
    for (auto &x : out) {
        x *= c;
    }
    return Poly(std::move(out));
}

} // namespace qdivisor
