#include <qdivisor/report.hpp>

#include <algorithm>

namespace qdivisor {

void IdentityReport::record_mismatch(const Mismatch &m)
{
    if (!first_mismatch || m.exponent < first_mismatch->exponent) {
        first_mismatch = m;
    }
    verdict = Verdict::fail;
}

std::optional<Mismatch> first_mismatch(const QSeries &lhs, const QSeries &rhs)
{
    if (lhs.shift() != rhs.shift()) {
        throw ShiftMismatch("first_mismatch: shifts " + to_string(lhs.shift()) + " and " + to_string(rhs.shift())
                            + " differ");
    }
    const int order = std::min(lhs.order(), rhs.order());
    for (int n = 0; n <= order; ++n) {
        if (lhs[n] != rhs[n]) {
            return Mismatch{n, lhs[n], rhs[n]};
        }
    }
    return std::nullopt;
}

IdentityReport compare_series(std::string id, const QSeries &lhs, const QSeries &rhs)
{
    IdentityReport report;
    report.id = std::move(id);
    report.order_checked = std::min(lhs.order(), rhs.order());
    report.checked = static_cast<std::size_t>(report.order_checked) + 1;
    if (auto m = first_mismatch(lhs, rhs)) {
        report.record_mismatch(*m);
    }
    return report;
}

const char *to_string(Verdict v) { return v == Verdict::pass ? "pass" : "fail"; }

} // namespace qdivisor
