#pragma once

#include <vector>

#include <qdivisor/series.hpp>

namespace qdivisor {

// Polynomial in a formal marker x whose coefficients are integral-exponent
// q-series sharing one truncation order. Entry t is the coefficient of x^t.
class XPoly
{
public:
    // Zero polynomial of the given x-degree and q-order.
    XPoly(int xdeg, int order);
    explicit XPoly(std::vector<QSeries> coeffs);

    static XPoly one(int xdeg, int order);

    int xdeg() const { return static_cast<int>(coeffs_.size()) - 1; }
    int order() const { return coeffs_.front().order(); }
    const QSeries &operator[](int t) const { return coeffs_[static_cast<std::size_t>(t)]; }
    const std::vector<QSeries> &coeffs() const { return coeffs_; }

    friend bool operator==(const XPoly &a, const XPoly &b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<QSeries> coeffs_;
};

XPoly add(const XPoly &a, const XPoly &b);
XPoly sub(const XPoly &a, const XPoly &b);
XPoly scale(const XPoly &a, const Rational &c);
XPoly scale(const XPoly &a, const QSeries &c);
// Product truncated at x-degree max_xdeg.
XPoly mul(const XPoly &a, const XPoly &b, int max_xdeg);
// x -> -x
XPoly reflect(const XPoly &a);
// Formal log of F = 1 + O(x), as -sum_{k>=1} (1 - F)^k / k truncated at F's x-degree.
XPoly formal_log(const XPoly &f);

} // namespace qdivisor
