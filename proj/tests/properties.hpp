#pragma once

#include <string>
#include <vector>

#include "support.hpp"

namespace qdivisor::testing {

struct PropertyRun {
    std::string name;
    int cases = 0;
    int failures = 0;
    int first_failure = -1;

    void record(int index, bool ok)
    {
        ++cases;
        if (!ok) {
            if (failures++ == 0) {
                first_failure = index;
            }
        }
    }
};

inline QSeries one_like(int order) { return QSeries::constant(1, order); }

inline PropertyRun ring_axioms(int cases, std::uint64_t seed)
{
    PropertyRun run{"ring axioms"};
    SeriesGen g(seed);
    for (int i = 0; i < cases; ++i) {
        const QSeries a = g.series();
        const QSeries b = g.series();
        const QSeries c = g.series();
        const Rational s = g.rational();
        const int m = std::min({a.order(), b.order(), c.order()});
        const QSeries zero(m);
        bool ok = a + b == b + a;
        ok = ok && (a + b) + c == a + (b + c);
        ok = ok && a * b == b * a;
        ok = ok && (a * b) * c == a * (b * c);
        ok = ok && a * (b + c) == a * b + a * c;
        ok = ok && (a - a) == QSeries(a.order());
        ok = ok && (a + zero) == a.truncated(m);
        ok = ok && a * one_like(a.order()) == a;
        ok = ok && s * (a * b) == (s * a) * b;
        // The engine product against a schoolbook product.
        const QSeries ab = a * b;
        ok = ok && std::vector<Rational>(ab.coeffs().begin(), ab.coeffs().end()) == naive_mul(a.coeffs(), b.coeffs());
        // Fractional shifts add under multiplication.
        const Rational sa = g.fractional_shift();
        const Rational sb = g.fractional_shift();
        const QSeries fa = g.series(a.order(), sa);
        const QSeries fb = g.series(b.order(), sb);
        const QSeries p = fa * fb;
        const QSeries q = fb * fa;
        ok = ok && p == q;
        ok = ok && mul(fa, fb) == mul_serial(fa, fb);
        run.record(i, ok);
    }
    return run;
}

inline PropertyRun invert_round_trip(int cases, std::uint64_t seed)
{
    PropertyRun run{"invert round trip"};
    SeriesGen g(seed);
    for (int i = 0; i < cases; ++i) {
        const QSeries a = g.unit_series(g.uniform(0, 14));
        const QSeries inv = invert(a);
        bool ok = a * inv == one_like(a.order());
        ok = ok && invert(inv) == a;
        const QSeries b = g.series(a.order());
        ok = ok && divide(b, a) * a == b;
        run.record(i, ok);
    }
    return run;
}

inline PropertyRun derivation_product_rule(int cases, std::uint64_t seed)
{
    PropertyRun run{"D product rule"};
    SeriesGen g(seed);
    for (int i = 0; i < cases; ++i) {
        const int order = g.uniform(0, 14);
        const QSeries a = g.series(order, g.fractional_shift());
        const QSeries b = g.series(g.uniform(0, 14), g.fractional_shift());
        const QSeries lhs = derive(a * b);
        const QSeries rhs = derive(a) * b + a * derive(b);
        bool ok = lhs == rhs;
        // D is linear and kills constants.
        const QSeries c = g.series(order, a.shift());
        ok = ok && derive(a + c) == derive(a) + derive(c);
        ok = ok && derive(QSeries::constant(g.rational(), order)).is_zero();
        run.record(i, ok);
    }
    return run;
}

inline PropertyRun substitute_power_morphism(int cases, std::uint64_t seed)
{
    PropertyRun run{"substitute_power morphism"};
    SeriesGen g(seed);
    for (int i = 0; i < cases; ++i) {
        const QSeries a = g.series();
        const QSeries b = g.series();
        const int k = g.uniform(1, 5);
        const int j = g.uniform(1, 4);
        bool ok = substitute_power(a * b, k) == substitute_power(a, k) * substitute_power(b, k);
        ok = ok && substitute_power(a + b, k) == substitute_power(a, k) + substitute_power(b, k);
        ok = ok && substitute_power(substitute_power(a, j), k) == substitute_power(a, j * k);
        ok = ok && substitute_power(a, 1) == a;
        // Coefficientwise definition.
        const QSeries s = substitute_power(a, k);
        for (int n = 0; n <= s.order() && ok; ++n) {
            ok = s[n] == (n % k == 0 ? a[n / k] : Rational(0));
        }
        run.record(i, ok);
    }
    return run;
}

inline std::vector<PropertyRun> engine_properties(int cases)
{
    return {ring_axioms(cases, 0x5eed0001), invert_round_trip(cases, 0x5eed0002),
            derivation_product_rule(cases, 0x5eed0003), substitute_power_morphism(cases, 0x5eed0004)};
}

} // namespace qdivisor::testing
