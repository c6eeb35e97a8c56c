#include <qdivisor/xpoly.hpp>

#include <algorithm>
#include <stdexcept>

namespace qdivisor {

XPoly::XPoly(int xdeg, int order)
{
    if (xdeg < 0) {
        throw std::invalid_argument("XPoly: negative x-degree");
    }
    coeffs_.assign(static_cast<std::size_t>(xdeg) + 1, QSeries(order));
}

XPoly::XPoly(std::vector<QSeries> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("XPoly: no coefficients");
    }
    const int order = coeffs_.front().order();
    for (const auto &c : coeffs_) {
        if (c.shift() != 0) {
            throw ShiftMismatch("XPoly: coefficients must have integral exponents");
        }
        if (c.order() != order) {
            throw std::invalid_argument("XPoly: coefficients must share one truncation order");
        }
    }
}

XPoly XPoly::one(int xdeg, int order)
{
    XPoly out(xdeg, order);
    out.coeffs_[0] = QSeries::constant(1, order);
    return out;
}

namespace {

int common_order(const XPoly &a, const XPoly &b) { return std::min(a.order(), b.order()); }

} // namespace

XPoly add(const XPoly &a, const XPoly &b)
{
    const int order = common_order(a, b);
    const int deg = std::max(a.xdeg(), b.xdeg());
    std::vector<QSeries> out;
    out.reserve(static_cast<std::size_t>(deg) + 1);
    for (int t = 0; t <= deg; ++t) {
        QSeries s(order);
        if (t <= a.xdeg()) {
            s = add(s, a[t]);
        }
        if (t <= b.xdeg()) {
            s = add(s, b[t]);
        }
        out.push_back(std::move(s));
    }
    return XPoly(std::move(out));
}

XPoly sub(const XPoly &a, const XPoly &b) { return add(a, scale(b, -1)); }

XPoly scale(const XPoly &a, const Rational &c)
{
    std::vector<QSeries> out;
    for (const auto &s : a.coeffs()) {
        out.push_back(scale(s, c));
    }
    return XPoly(std::move(out));
}

XPoly scale(const XPoly &a, const QSeries &c)
{
    std::vector<QSeries> out;
    for (const auto &s : a.coeffs()) {
        out.push_back(mul(s, c));
    }
    return XPoly(std::move(out));
}

XPoly mul(const XPoly &a, const XPoly &b, int max_xdeg)
{
    const int order = common_order(a, b);
    const int deg = std::min(max_xdeg, a.xdeg() + b.xdeg());
    std::vector<QSeries> out(static_cast<std::size_t>(deg) + 1, QSeries(order));
    for (int i = 0; i <= a.xdeg() && i <= deg; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; j <= b.xdeg() && i + j <= deg; ++j) {
            out[i + j] = add(out[i + j], mul(a[i], b[j]));
        }
    }
    return XPoly(std::move(out));
}

XPoly reflect(const XPoly &a)
{
    std::vector<QSeries> out(a.coeffs());
    for (int t = 1; t <= a.xdeg(); t += 2) {
        out[t] = negate(out[t]);
    }
    return XPoly(std::move(out));
}

XPoly formal_log(const XPoly &f)
{
    const QSeries one = QSeries::constant(1, f.order());
    if (!equal_to_order(f[0], one, f.order())) {
        throw std::domain_error("formal_log: x^0 coefficient must be 1");
    }
    const int deg = f.xdeg();
    // g = 1 - F has no x^0 term, so (1 - F)^k vanishes below x^k.
    const XPoly g = sub(XPoly::one(deg, f.order()), f);
    XPoly acc(deg, f.order());
    XPoly power = g;
    for (int k = 1; k <= deg; ++k) {
        acc = sub(acc, scale(power, Rational(1, k)));
        power = mul(power, g, deg);
    }
    return acc;
}

} // namespace qdivisor
