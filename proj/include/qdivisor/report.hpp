#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

#include <qdivisor/rational.hpp>
#include <qdivisor/series.hpp>

namespace qdivisor {

enum class Verdict { pass, fail };

struct Mismatch {
    int exponent = 0;
    Rational lhs;
    Rational rhs;

    friend bool operator==(const Mismatch &, const Mismatch &) = default;
};

// Verdict for one checked identity. verdict == pass iff first_mismatch is empty.
struct IdentityReport {
    std::string id;
    int order_checked = 0;
    Verdict verdict = Verdict::pass;
    std::optional<Mismatch> first_mismatch;
    std::chrono::nanoseconds elapsed{0};
    // Number of coefficients (or grid cells) compared.
    std::size_t checked = 0;
    std::string detail;

    bool passed() const { return verdict == Verdict::pass; }
    void record_mismatch(const Mismatch &m);
};

// Minimal exponent n <= min(order) where the coefficients differ.
// Throws ShiftMismatch when the shifts differ.
std::optional<Mismatch> first_mismatch(const QSeries &lhs, const QSeries &rhs);

IdentityReport compare_series(std::string id, const QSeries &lhs, const QSeries &rhs);

// Measures wall time of a scope into report.elapsed.
class ReportTimer
{
public:
    explicit ReportTimer(IdentityReport &report) : report_(report), start_(std::chrono::steady_clock::now()) {}
    ~ReportTimer() { report_.elapsed = std::chrono::steady_clock::now() - start_; }
    ReportTimer(const ReportTimer &) = delete;
    ReportTimer &operator=(const ReportTimer &) = delete;

private:
    IdentityReport &report_;
    std::chrono::steady_clock::time_point start_;
};

const char *to_string(Verdict v);

} // namespace qdivisor
