#include <qdivisor/series.hpp>

#include <algorithm>
#include <sstream>

namespace qdivisor {

namespace {

constexpr int parallel_threshold = 96;

bool admissible_shift(const Rational &shift) { return 24 % shift.get_den() == 0; }

std::vector<int> nonzero_indices(const QSeries &a, int first, int last)
{
    std::vector<int> out;
    for (int i = first; i <= last; ++i) {
        if (a[i] != 0) {
            out.push_back(i);
        }
    }
    return out;
}

void require_same_shift(const QSeries &a, const QSeries &b, const char *op)
{
    if (a.shift() != b.shift()) {
        throw ShiftMismatch(std::string(op) + ": shifts " + to_string(a.shift()) + " and " + to_string(b.shift())
                            + " differ");
    }
}

} // namespace

QSeries::QSeries() : QSeries(0) {}

QSeries::QSeries(int order)
{
    if (order < 0) {
        throw std::invalid_argument("QSeries: negative truncation order");
    }
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries::QSeries(std::vector<Rational> coeffs, Rational shift) : shift_(std::move(shift)), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("QSeries: empty coefficient vector");
    }
    if (!admissible_shift(shift_)) {
        throw std::invalid_argument("QSeries: shift denominator must divide 24, got " + to_string(shift_));
    }
    normalize();
}

void QSeries::normalize()
{
    if (shift_ == 0) {
        return;
    }
    if (shift_.get_den() != 1) {
        // Fold the integer part of a shift above 1 so that equal series compare equal.
        if (shift_ > 1) {
            Integer whole;
            mpz_fdiv_q(whole.get_mpz_t(), shift_.get_num_mpz_t(), shift_.get_den_mpz_t());
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(whole.get_si()), Rational(0));
            shift_ -= whole;
        }
        return;
    }
    const long s = shift_.get_num().get_si();
    if (s > 0) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(s), Rational(0));
    } else {
        const auto drop = static_cast<std::size_t>(-s);
        if (drop >= coeffs_.size()) {
            throw std::domain_error("QSeries: negative shift leaves no coefficients");
        }
        if (std::any_of(coeffs_.begin(), coeffs_.begin() + static_cast<long>(drop),
                        [](const Rational &c) { return c != 0; })) {
            throw std::domain_error("QSeries: negative exponents are not representable");
        }
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(drop));
    }
    shift_ = 0;
}

QSeries QSeries::constant(const Rational &c, int order)
{
    QSeries out(order);
    out.coeffs_[0] = c;
    return out;
}

QSeries QSeries::monomial(const Rational &c, int exponent, int order)
{
    QSeries out(order);
    if (exponent < 0) {
        throw std::invalid_argument("QSeries::monomial: negative exponent");
    }
    if (exponent <= order) {
        out.coeffs_[static_cast<std::size_t>(exponent)] = c;
    }
    return out;
}

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational &c) { return c == 0; });
}

QSeries QSeries::truncated(int order) const
{
    if (order < 0 || order > this->order()) {
        throw OutOfRange("QSeries::truncated: order " + std::to_string(order) + " outside [0, "
                         + std::to_string(this->order()) + "]");
    }
    return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), shift_);
}

QSeries add(const QSeries &a, const QSeries &b)
{
    require_same_shift(a, b, "add");
    const int order = std::min(a.order(), b.order());
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        out[n] = a[n] + b[n];
    }
    return QSeries(std::move(out), a.shift());
}

QSeries sub(const QSeries &a, const QSeries &b)
{
    require_same_shift(a, b, "sub");
    const int order = std::min(a.order(), b.order());
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        out[n] = a[n] - b[n];
    }
    return QSeries(std::move(out), a.shift());
}

QSeries negate(const QSeries &a) { return scale(a, -1); }

QSeries scale(const QSeries &a, const Rational &c)
{
    std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
    for (auto &x : out) {
        x *= c;
    }
    return QSeries(std::move(out), a.shift());
}

QSeries mul_serial(const QSeries &a, const QSeries &b)
{
    const int order = std::min(a.order(), b.order());
    const auto nz = nonzero_indices(a, 0, order);
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    Rational term;
    for (int i : nz) {
        for (int k = i; k <= order; ++k) {
            if (b[k - i] != 0) {
                mpq_mul(term.get_mpq_t(), a[i].get_mpq_t(), b[k - i].get_mpq_t());
                out[k] += term;
            }
        }
    }
    return QSeries(std::move(out), a.shift() + b.shift());
}

QSeries mul(const QSeries &a, const QSeries &b)
{
    const int order = std::min(a.order(), b.order());
    if (order < parallel_threshold) {
        return mul_serial(a, b);
    }
    const auto nz = nonzero_indices(a, 0, order);
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);

#pragma omp parallel
    {
        Rational term;
#pragma omp for schedule(dynamic, 8)
        for (int k = 0; k <= order; ++k) {
            Rational acc;
            for (int i : nz) {
                if (i > k) {
                    break;
                }
                if (b[k - i] != 0) {
                    mpq_mul(term.get_mpq_t(), a[i].get_mpq_t(), b[k - i].get_mpq_t());
                    acc += term;
                }
            }
            out[k] = std::move(acc);
        }
    }
    return QSeries(std::move(out), a.shift() + b.shift());
}

QSeries invert(const QSeries &a)
{
    if (a.shift() != 0) {
        throw NonUnitConstantTerm("invert: series carries a fractional shift");
    }
    if (a[0] == 0) {
        throw NonUnitConstantTerm("invert: constant term is zero");
    }
    const int order = a.order();
    const auto nz = nonzero_indices(a, 1, order);
    const Rational inv0 = Rational(1) / a[0];
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    out[0] = inv0;
    Rational term;
    for (int k = 1; k <= order; ++k) {
        Rational acc;
        for (int j : nz) {
            if (j > k) {
                break;
            }
            if (out[k - j] != 0) {
                mpq_mul(term.get_mpq_t(), a[j].get_mpq_t(), out[k - j].get_mpq_t());
                acc += term;
            }
        }
        out[k] = -acc * inv0;
    }
    return QSeries(std::move(out));
}

QSeries divide(const QSeries &num, const QSeries &den) { return mul(num, invert(den)); }

QSeries pow(const QSeries &a, unsigned exponent)
{
    QSeries result = QSeries::constant(1, a.order());
    QSeries base = a;
    bool first = true;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = first ? base : mul(result, base);
            first = false;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

QSeries derive(const QSeries &a)
{
    std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
    for (int n = 0; n <= a.order(); ++n) {
        out[n] *= a.shift() + n;
    }
    return QSeries(std::move(out), a.shift());
}

QSeries substitute_power(const QSeries &a, int k)
{
    if (k < 1) {
        throw std::invalid_argument("substitute_power: exponent must be positive");
    }
    if (a.shift() != 0) {
        throw ShiftMismatch("substitute_power: series carries a fractional shift");
    }
    std::vector<Rational> out(static_cast<std::size_t>(a.order()) + 1);
    for (int n = 0; n * k <= a.order(); ++n) {
        out[n * k] = a[n];
    }
    return QSeries(std::move(out));
}

QSeries times_qpow(const QSeries &a, const Rational &r)
{
    return QSeries(std::vector<Rational>(a.coeffs().begin(), a.coeffs().end()), a.shift() + r);
}

Rational coefficient(const QSeries &a, int n)
{
    if (n < 0 || n > a.order()) {
        throw OutOfRange("coefficient: index " + std::to_string(n) + " outside [0, " + std::to_string(a.order())
                         + "]");
    }
    return a[n];
}

bool equal_to_order(const QSeries &a, const QSeries &b, int max_order)
{
    if (a.shift() != b.shift() || max_order > a.order() || max_order > b.order()) {
        return false;
    }
    for (int n = 0; n <= max_order; ++n) {
        if (a[n] != b[n]) {
            return false;
        }
    }
    return true;
}

QSeries operator+(const QSeries &a, const QSeries &b) { return add(a, b); }
QSeries operator-(const QSeries &a, const QSeries &b) { return sub(a, b); }
QSeries operator-(const QSeries &a) { return negate(a); }
QSeries operator*(const QSeries &a, const QSeries &b) { return mul(a, b); }
QSeries operator*(const Rational &c, const QSeries &a) { return scale(a, c); }

std::string to_string(const QSeries &a, int max_terms)
{
    std::ostringstream os;
    int written = 0;
    for (int n = 0; n <= a.order() && written < max_terms; ++n) {
        if (a[n] == 0) {
            continue;
        }
        if (written > 0) {
            os << " + ";
        }
        os << to_string(a[n]) << "*q^" << to_string(a.shift() + n);
        ++written;
    }
    if (written == 0) {
        os << "0";
    }
    os << " + O(q^" << to_string(a.shift() + a.order() + 1) << ")";
    return os.str();
}

} // namespace qdivisor
