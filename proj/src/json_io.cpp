#include <qdivisor/json_io.hpp>

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace qdivisor {

using nlohmann::json;

namespace {

double to_ms(std::chrono::nanoseconds ns) { return static_cast<double>(ns.count()) / 1e6; }

std::chrono::nanoseconds from_ms(double ms)
{
    return std::chrono::nanoseconds(static_cast<std::chrono::nanoseconds::rep>(ms * 1e6));
}

Verdict parse_verdict(const std::string &s)
{
    if (s == "pass") {
        return Verdict::pass;
    }
    if (s == "fail") {
        return Verdict::fail;
    }
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string &line)
{
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

json poly_to_json(const BivariatePoly &p)
{
    json arr = json::array();
    for (const auto &[e, c] : p.terms) {
        arr.push_back({{"exponents", {e.first, e.second}}, {"coefficient", c.get_str()}});
    }
    return arr;
}

BivariatePoly poly_from_json(const json &j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("certificate polynomial must be an array of terms");
    }
    BivariatePoly p;
    for (const auto &term : j) {
        const auto &e = term.at("exponents");
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("certificate term needs two exponents");
        }
        const Rational c = rational_from_json(term.at("coefficient"));
        if (!is_integer(c)) {
            throw std::invalid_argument("certificate coefficients must be integers");
        }
        const auto key = std::make_pair(e[0].get<int>(), e[1].get<int>());
        if (key.first < 0 || key.second < 0) {
            throw std::invalid_argument("certificate exponents must be non-negative");
        }
        p.terms[key] += c.get_num();
        if (p.terms[key] == 0) {
            p.terms.erase(key);
        }
    }
    return p;
}

} // namespace

json rational_to_json(const Rational &value) { return to_string(value); }

Rational rational_from_json(const json &j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(Integer(std::to_string(j.get<long long>())));
    }
    throw std::invalid_argument("expected a rational as string or integer");
}

json to_json(const IdentityReport &report)
{
    json j;
    j["id"] = report.id;
    j["order_checked"] = report.order_checked;
    j["verdict"] = to_string(report.verdict);
    if (report.first_mismatch) {
        j["first_mismatch"] = {{"n", report.first_mismatch->exponent},
                               {"lhs", rational_to_json(report.first_mismatch->lhs)},
                               {"rhs", rational_to_json(report.first_mismatch->rhs)}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["elapsed_ms"] = to_ms(report.elapsed);
    j["checked"] = report.checked;
    j["detail"] = report.detail;
    return j;
}

IdentityReport report_from_json(const json &j)
{
    IdentityReport r;
    r.id = j.at("id").get<std::string>();
    r.order_checked = j.at("order_checked").get<int>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    const auto &m = j.at("first_mismatch");
    if (!m.is_null()) {
        r.first_mismatch = Mismatch{m.at("n").get<int>(), rational_from_json(m.at("lhs")), rational_from_json(m.at("rhs"))};
    }
    if ((r.verdict == Verdict::pass) != !r.first_mismatch) {
        throw std::invalid_argument("report '" + r.id + "': verdict and first_mismatch disagree");
    }
    r.elapsed = from_ms(j.at("elapsed_ms").get<double>());
    r.checked = j.value("checked", std::size_t{0});
    r.detail = j.value("detail", std::string{});
    return r;
}

json to_json(const std::vector<IdentityReport> &reports)
{
    json arr = json::array();
    for (const auto &r : reports) {
        arr.push_back(to_json(r));
    }
    return arr;
}

std::string to_csv(const std::vector<IdentityReport> &reports)
{
    std::ostringstream os;
    os << "id,order_checked,verdict,mismatch_n,mismatch_lhs,mismatch_rhs,elapsed_ms,checked,detail\n";
    for (const auto &r : reports) {
        os << csv_field(r.id) << ',' << r.order_checked << ',' << to_string(r.verdict) << ',';
        if (r.first_mismatch) {
            os << r.first_mismatch->exponent << ',' << to_string(r.first_mismatch->lhs) << ','
               << to_string(r.first_mismatch->rhs);
        } else {
            os << ",,";
        }
        os << ',' << to_ms(r.elapsed) << ',' << r.checked << ',' << csv_field(r.detail) << '\n';
    }
    return os.str();
}

std::vector<IdentityReport> reports_from_csv(const std::string &text)
{
    std::istringstream is(text);
    std::string line;
    std::vector<IdentityReport> out;
    if (!std::getline(is, line)) {
        return out;
    }
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 9) {
            throw std::invalid_argument("csv row has " + std::to_string(f.size()) + " fields, expected 9");
        }
        IdentityReport r;
        r.id = f[0];
        r.order_checked = std::stoi(f[1]);
        r.verdict = parse_verdict(f[2]);
        if (!f[3].empty()) {
            r.first_mismatch = Mismatch{std::stoi(f[3]), parse_rational(f[4]), parse_rational(f[5])};
        }
        r.elapsed = from_ms(std::stod(f[6]));
        r.checked = std::stoull(f[7]);
        r.detail = f[8];
        out.push_back(std::move(r));
    }
    return out;
}

json to_json(const QMExpr &expr)
{
    json basis = json::array();
    for (const auto &g : expr.basis()) {
        basis.push_back(to_string(g));
    }
    json monomials = json::array();
    for (const auto &[e, c] : expr.terms()) {
        monomials.push_back(
            {{"exponents", e}, {"numerator", c.get_num().get_str()}, {"denominator", c.get_den().get_str()}});
    }
    return {{"basis", basis}, {"monomials", monomials}};
}

QMExpr qmexpr_from_json(const json &j)
{
    std::vector<EisensteinId> basis;
    for (const auto &g : j.at("basis")) {
        basis.push_back(parse_eisenstein(g.get<std::string>()));
    }
    QMExpr expr(basis);
    for (const auto &m : j.at("monomials")) {
        const Rational num = rational_from_json(m.at("numerator"));
        const Rational den = rational_from_json(m.at("denominator"));
        if (!is_integer(num) || !is_integer(den)) {
            throw std::invalid_argument("monomial numerator and denominator must be integers");
        }
        expr.add_term(m.at("exponents").get<std::vector<int>>(), ratio(num.get_num(), den.get_num()));
    }
    return expr;
}

RationalCertificate certificate_from_json(const json &j)
{
    RationalCertificate cert{poly_from_json(j.at("numerator")), poly_from_json(j.at("denominator"))};
    if (cert.denominator.terms.empty()) {
        throw std::invalid_argument("certificate denominator is the zero polynomial");
    }
    return cert;
}

json to_json(const RationalCertificate &cert)
{
    return {{"numerator", poly_to_json(cert.numerator)}, {"denominator", poly_to_json(cert.denominator)}};
}

} // namespace qdivisor
