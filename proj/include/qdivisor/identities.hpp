#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <qdivisor/report.hpp>
#include <qdivisor/series.hpp>

namespace qdivisor::identities {

struct UnknownIdentity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// One displayed equality: both sides as truncated series.
struct Part {
    std::string label;
    QSeries lhs;
    QSeries rhs;
};

struct Identity {
    std::string id;
    std::string description;
    // How infinite sums, products and lattices are cut off at a given order.
    std::string cutoff;
    // Either parts (compared coefficientwise) or run (a self-contained check).
    std::function<std::vector<Part>(int order)> parts;
    std::function<IdentityReport(int order)> run;
};

// Every registered identity, sorted by id.
const std::vector<Identity> &registry();
const Identity &find(const std::string &id);
std::vector<std::string> ids();

// Both sides of each part of a part-based identity. Throws UnknownIdentity,
// or std::invalid_argument when the identity is a self-contained check.
std::vector<Part> evaluate_parts(const std::string &id, int order);
// Compares the parts to the given order; the reported mismatch is the
// smallest exponent over all parts and detail names its part.
IdentityReport compare_parts(const std::string &id, int order, const std::vector<Part> &parts);

IdentityReport check(const std::string &id, int order);
// All identities ordered by id. The parallel version runs identities on
// separate OpenMP threads and stores each report in its registry slot.
std::vector<IdentityReport> check_all(int order);
std::vector<IdentityReport> check_all_serial(int order);

// Building blocks shared with the tests.

// Polynomial in x with integer coefficients, index = power of x.
using XPolyInt = std::vector<long>;

// sum_{n>=1} N(q^n) / P(q^n); N(0) = 0 and P(0) != 0 are required.
QSeries lambert_family(const XPolyInt &num, const XPolyInt &den, int order);
// As lambert_family with (num, den) chosen by the parity of n.
QSeries lambert_family_parity(const XPolyInt &num_odd, const XPolyInt &den_odd, const XPolyInt &num_even,
                              const XPolyInt &den_even, int order);
// sum_{n in Z} N(q^n) / P(q^n) with deg N < deg P: the n < 0 half is folded
// onto n > 0 through q^(-n) -> reversed polynomials.
QSeries bilateral_sum(const XPolyInt &num, const XPolyInt &den, int order);
// sum_{j >= 1, j = r (mod m)} q^j / (1 - q^j)
QSeries residue_lambert(int modulus, int residue, int order);
// sum_{a, b in Z} q^(a^2 + ab + b^2) by direct enumeration with
// |a|, |b| <= floor(sqrt(2 order)) + 1.
QSeries hex_lattice(int order);

} // namespace qdivisor::identities
