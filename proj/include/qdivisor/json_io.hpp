#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <qdivisor/quasimodular.hpp>
#include <qdivisor/report.hpp>
#include <qdivisor/wz.hpp>

namespace qdivisor {

// Rationals travel as strings, "p/q" or "p".
nlohmann::json rational_to_json(const Rational &value);
// Accepts a string or a JSON integer.
Rational rational_from_json(const nlohmann::json &j);

// {id, order_checked, verdict, first_mismatch: {n, lhs, rhs} | null,
//  elapsed_ms, checked, detail}
nlohmann::json to_json(const IdentityReport &report);
IdentityReport report_from_json(const nlohmann::json &j);
nlohmann::json to_json(const std::vector<IdentityReport> &reports);

// id,order_checked,verdict,mismatch_n,mismatch_lhs,mismatch_rhs,elapsed_ms,checked,detail
std::string to_csv(const std::vector<IdentityReport> &reports);
std::vector<IdentityReport> reports_from_csv(const std::string &text);

// {basis: ["E2", ...], monomials: [{exponents, numerator, denominator}]}
nlohmann::json to_json(const QMExpr &expr);
QMExpr qmexpr_from_json(const nlohmann::json &j);

// {numerator: [{exponents: [i, j], coefficient}], denominator: [...]}
// for sum c n^i k^j; coefficients are integers or integer strings.
RationalCertificate certificate_from_json(const nlohmann::json &j);
nlohmann::json to_json(const RationalCertificate &cert);

} // namespace qdivisor
