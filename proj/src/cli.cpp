#include <qdivisor/cli.hpp>

#include <cstdlib>
#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include <qdivisor/etatheta.hpp>
#include <qdivisor/identities.hpp>
#include <qdivisor/json_io.hpp>
#include <qdivisor/macmahon.hpp>
#include <qdivisor/quasimodular.hpp>

namespace qdivisor::cli {

using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    int a = 1;
    int t = 1;
    int order = builtin_default_order;
    Format format = Format::text;
    RouteChoice route = RouteChoice::all;
    std::string output_path;
    std::string identity = "all";
    std::string target;
    std::string basis = "E2,E4,E6";
    int max_weight = 2;
    bool de2 = false;
    int t_max = 5;
};

const std::map<std::string, Format> format_names{{"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
const std::map<std::string, RouteChoice> route_names{{"direct", RouteChoice::direct},
                                                     {"product", RouteChoice::product},
                                                     {"cheb", RouteChoice::cheb},
                                                     {"all", RouteChoice::all}};

std::string report_line(const IdentityReport &r)
{
    std::ostringstream os;
    os << r.id << ' ' << to_string(r.verdict) << " order=" << r.order_checked << " checked=" << r.checked
       << " elapsed_ms=" << static_cast<double>(r.elapsed.count()) / 1e6;
    if (r.first_mismatch) {
        os << " first_mismatch n=" << r.first_mismatch->exponent << " lhs=" << to_string(r.first_mismatch->lhs)
           << " rhs=" << to_string(r.first_mismatch->rhs);
    }
    if (!r.detail.empty()) {
        os << " (" << r.detail << ')';
    }
    return os.str();
}

void emit_reports(std::ostream &os, Format f, const std::vector<IdentityReport> &reports, bool single)
{
    switch (f) {
    case Format::json:
        os << (single ? to_json(reports.front()) : to_json(reports)).dump(2) << '\n';
        break;
    case Format::csv:
        os << to_csv(reports);
        break;
    case Format::text:
        for (const auto &r : reports) {
            os << report_line(r) << '\n';
        }
        break;
    }
}

bool all_pass(const std::vector<IdentityReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const IdentityReport &r) { return r.passed(); });
}

int cmd_coeffs(const RunConfig &cfg, std::ostream &os)
{
    require_supported_a(cfg.a);
    if (cfg.t < 0) {
        throw UsageError("--t must be non-negative");
    }
    const MacParams p{cfg.a, cfg.t, cfg.order};
    std::vector<RouteResult> results;
    if (cfg.route == RouteChoice::all) {
        for (Route r : {Route::direct, Route::product, Route::cheb}) {
            results.push_back(compute_route(r, p));
        }
    } else {
        const Route r = cfg.route == RouteChoice::direct    ? Route::direct
                        : cfg.route == RouteChoice::product ? Route::product
                                                            : Route::cheb;
        results.push_back(compute_route(r, p));
    }
    const QSeries &s = results.front().series;
    std::optional<Mismatch> disagreement;
    std::string disagreeing;
    for (std::size_t i = 1; i < results.size() && !disagreement; ++i) {
        disagreement = first_mismatch(s, results[i].series);
        if (disagreement) {
            disagreeing = std::string(to_string(results.front().route)) + " vs " + to_string(results[i].route);
        }
    }
    const bool compared = results.size() > 1;
    std::string route_label = cfg.route == RouteChoice::all ? "all" : to_string(results.front().route);

    switch (cfg.format) {
    case Format::json: {
        json rows = json::array();
        for (int n = 0; n <= s.order(); ++n) {
            if (s[n] != 0) {
                rows.push_back({{"n", n}, {"value", rational_to_json(s[n])}});
            }
        }
        json j{{"a", cfg.a}, {"t", cfg.t}, {"order", cfg.order}, {"route", route_label}, {"coefficients", rows}};
        if (compared) {
            j["agreement"] = disagreement ? "disagree" : "ok";
            if (disagreement) {
                j["first_disagreement"] = {{"routes", disagreeing},
                                           {"n", disagreement->exponent},
                                           {"lhs", rational_to_json(disagreement->lhs)},
                                           {"rhs", rational_to_json(disagreement->rhs)}};
            }
        } else {
            j["agreement"] = nullptr;
        }
        os << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        os << "n,value\n";
        for (int n = 0; n <= s.order(); ++n) {
            if (s[n] != 0) {
                os << n << ',' << to_string(s[n]) << '\n';
            }
        }
        break;
    case Format::text:
        for (int n = 0; n <= s.order(); ++n) {
            if (s[n] != 0) {
                os << n << ' ' << to_string(s[n]) << '\n';
            }
        }
        if (compared) {
            if (disagreement) {
                os << "agreement: disagree (" << disagreeing << " at n=" << disagreement->exponent << ": "
                   << to_string(disagreement->lhs) << " vs " << to_string(disagreement->rhs) << ")\n";
            } else {
                os << "agreement: ok\n";
            }
        }
        break;
    }
    return disagreement ? exit_disagreement : exit_ok;
}

int cmd_verify(const RunConfig &cfg, std::ostream &os)
{
    std::vector<IdentityReport> reports;
    const bool single = cfg.identity != "all";
    if (single) {
        reports.push_back(identities::check(cfg.identity, cfg.order));
    } else {
        reports = identities::check_all(cfg.order);
    }
    emit_reports(os, cfg.format, reports, single);
    return all_pass(reports) ? exit_ok : exit_disagreement;
}

int cmd_scan(const RunConfig &cfg, std::ostream &os)
{
    if (cfg.t_max < 1) {
        throw UsageError("--tmax must be at least 1");
    }
    const std::vector<IdentityReport> reports{scan_congruence_2mod3(cfg.t_max, cfg.order),
                                              scan_congruence_1mod3_mod3(cfg.order)};
    emit_reports(os, cfg.format, reports, false);
    return all_pass(reports) ? exit_ok : exit_disagreement;
}

QSeries parse_target(const std::string &spec, int order)
{
    std::vector<std::string> f;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ':');) {
        f.push_back(item);
    }
    try {
        if (f.size() == 3 && f[0] == "U") {
            const int a = std::stoi(f[1]);
            const int t = std::stoi(f[2]);
            require_supported_a(a);
            if (t < 0) {
                throw UsageError("target t must be non-negative");
            }
            return u_product(a, t, order)[t];
        }
        if (f.size() == 2 && f[0] == "S") {
            const int j = std::stoi(f[1]);
            if (j < 0) {
                throw UsageError("target j must be non-negative");
            }
            return lambert_S(j, order);
        }
    } catch (const std::logic_error &) {
        // stoi failures and UnsupportedA fall through to the usage message.
    }
    throw UsageError("--target must look like U:a:t (a in -2..2) or S:j, got '" + spec + "'");
}

int cmd_fit_de2(const RunConfig &cfg, std::ostream &os)
{
    if (cfg.t_max < 1 || cfg.t_max > 4) {
        throw UsageError("--de2 needs --tmax in 1..4");
    }
    const De2Result res = de2_proposition_check(cfg.t_max, cfg.order);
    json rows = json::array();
    for (const auto &row : res.rows) {
        json r{{"t", row.t}, {"constant", row.constant ? rational_to_json(*row.constant) : json(nullptr)}};
        if (row.residual) {
            r["residual"] = {{"n", row.residual->exponent},
                             {"lhs", rational_to_json(row.residual->lhs)},
                             {"rhs", rational_to_json(row.residual->rhs)}};
        } else {
            r["residual"] = nullptr;
        }
        r["fit"] = to_json(row.fit);
        rows.push_back(r);
    }
    switch (cfg.format) {
    case Format::json:
        os << json{{"constant", res.constant ? rational_to_json(*res.constant) : json(nullptr)},
                   {"rows", rows},
                   {"report", to_json(res.report)}}
                  .dump(2)
           << '\n';
        break;
    case Format::csv:
        os << "t,constant,residual_n\n";
        for (const auto &row : res.rows) {
            os << row.t << ',' << (row.constant ? to_string(*row.constant) : "") << ','
               << (row.residual ? std::to_string(row.residual->exponent) : "") << '\n';
        }
        break;
    case Format::text:
        for (const auto &row : res.rows) {
            os << "t=" << row.t << " constant=" << (row.constant ? to_string(*row.constant) : "none") << " residual="
               << (row.residual ? "n=" + std::to_string(row.residual->exponent) : std::string("none")) << '\n';
        }
        os << "constant: " << (res.constant ? to_string(*res.constant) : "inconsistent") << '\n';
        os << report_line(res.report) << '\n';
        break;
    }
    return res.report.passed() ? exit_ok : exit_disagreement;
}

std::string expr_text(const QMExpr &expr)
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : expr.terms()) {
        os << (first ? "" : " + ") << '(' << to_string(c) << ')';
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                os << '*' << to_string(expr.basis()[i]);
                if (e[i] > 1) {
                    os << '^' << e[i];
                }
            }
        }
        first = false;
    }
    return first ? "0" : os.str();
}

int cmd_fit(const RunConfig &cfg, std::ostream &os)
{
    if (cfg.de2) {
        return cmd_fit_de2(cfg, os);
    }
    if (cfg.target.empty()) {
        throw UsageError("fit needs --target (or --de2)");
    }
    if (cfg.max_weight < 0) {
        throw UsageError("--max-weight must be non-negative");
    }
    std::vector<EisensteinId> basis;
    try {
        basis = parse_basis(cfg.basis);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    const QSeries target = parse_target(cfg.target, cfg.order);
    try {
        const QMExpr expr = fit_quasimodular(target, basis, cfg.max_weight);
        switch (cfg.format) {
        case Format::json:
            os << json{{"target", cfg.target}, {"order", cfg.order}, {"expr", to_json(expr)}}.dump(2) << '\n';
            break;
        case Format::csv:
            os << "exponents,numerator,denominator\n";
            for (const auto &[e, c] : expr.terms()) {
                std::string ex;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    ex += (i ? " " : "") + std::to_string(e[i]);
                }
                os << ex << ',' << c.get_num().get_str() << ',' << c.get_den().get_str() << '\n';
            }
            break;
        case Format::text:
            os << cfg.target << " = " << expr_text(expr) << '\n';
            break;
        }
        return exit_ok;
    } catch (const Infeasible &e) {
        if (cfg.format == Format::json) {
            os << json{{"target", cfg.target}, {"order", cfg.order}, {"infeasible", e.what()}}.dump(2) << '\n';
        } else {
            os << "Infeasible: " << e.what() << '\n';
        }
        return exit_disagreement;
    }
}

int cmd_list(const RunConfig &cfg, std::ostream &os)
{
    const auto &reg = identities::registry();
    switch (cfg.format) {
    case Format::json: {
        json arr = json::array();
        for (const auto &i : reg) {
            arr.push_back({{"id", i.id}, {"description", i.description}, {"cutoff", i.cutoff}});
        }
        os << arr.dump(2) << '\n';
        break;
    }
    case Format::csv:
        os << "id,description,cutoff\n";
        for (const auto &i : reg) {
            os << i.id << ",\"" << i.description << "\",\"" << i.cutoff << "\"\n";
        }
        break;
    case Format::text:
        for (const auto &i : reg) {
            os << i.id << "  " << i.description << '\n';
        }
        break;
    }
    return exit_ok;
}

} // namespace

int default_order()
{
    const char *env = std::getenv("QDIVISOR_DEFAULT_ORDER");
    if (env == nullptr || *env == '\0') {
        return builtin_default_order;
    }
    const std::string s(env);
    std::size_t pos = 0;
    int v = -1;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::logic_error &) {
        pos = 0;
    }
    if (pos != s.size() || v < 0) {
        throw std::invalid_argument("QDIVISOR_DEFAULT_ORDER must be a non-negative integer, got '" + s + "'");
    }
    return v;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    try {
        cfg.order = default_order();
    } catch (const std::invalid_argument &e) {
        err << "qdivisor: " << e.what() << '\n';
        return exit_usage;
    }

    CLI::App app{"Exact q-series engine for MacMahon-type divisor sums", "qdivisor"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App *sub) {
        sub->add_option("--order", cfg.order, "truncation order (default 120 or QDIVISOR_DEFAULT_ORDER)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", cfg.format, "json, csv or text")
            ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
        sub->add_option("--output", cfg.output_path, "write results to this file");
    };

    CLI::App *coeffs = app.add_subcommand("coeffs", "print MO(a,t;n) for n <= order");
    coeffs->add_option("--a", cfg.a, "a in {-2,-1,0,1,2}")->required();
    coeffs->add_option("--t", cfg.t, "number of indices t >= 0")->required();
    coeffs->add_option("--route", cfg.route, "direct, product, cheb or all")
        ->transform(CLI::CheckedTransformer(route_names, CLI::ignore_case));
    add_common(coeffs);

    CLI::App *verify = app.add_subcommand("verify", "check a registered identity, or all of them");
    verify->add_option("id", cfg.identity, "identity id or 'all'")->required();
    add_common(verify);

    CLI::App *scan = app.add_subcommand("scan", "congruence scans MO(1,t;3n+2) = 0 and 3 | MO(1,3;3n+1)");
    scan->add_option("--tmax", cfg.t_max, "largest t in the 3n+2 scan");
    add_common(scan);

    CLI::App *fit = app.add_subcommand("fit", "express a series through Eisenstein monomials");
    fit->add_option("--target", cfg.target, "U:a:t or S:j");
    fit->add_option("--basis", cfg.basis, "comma separated generators such as E2,E4@2");
    fit->add_option("--max-weight", cfg.max_weight, "largest monomial weight");
    fit->add_flag("--de2", cfg.de2, "determine the constant in the E2-derivative relation for U_t(-2,q)");
    fit->add_option("--tmax", cfg.t_max, "largest t for --de2");
    add_common(fit);

    CLI::App *list = app.add_subcommand("list-identities", "list registered identity ids");
    add_common(list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "qdivisor: " << e.what() << '\n';
        return exit_usage;
    }
    if (fit->parsed() && fit->count("--tmax") == 0) {
        cfg.t_max = 3;
    }

    std::ofstream file;
    if (!cfg.output_path.empty()) {
        file.open(cfg.output_path);
        if (!file) {
            err << "qdivisor: cannot open " << cfg.output_path << " for writing\n";
            return exit_usage;
        }
    }
    std::ostream &os = cfg.output_path.empty() ? out : file;

    try {
        if (coeffs->parsed()) {
            return cmd_coeffs(cfg, os);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, os);
        }
        if (scan->parsed()) {
            return cmd_scan(cfg, os);
        }
        if (fit->parsed()) {
            return cmd_fit(cfg, os);
        }
        return cmd_list(cfg, os);
    } catch (const UsageError &e) {
        err << "qdivisor: " << e.what() << '\n';
        return exit_usage;
    } catch (const UnsupportedA &e) {
        err << "qdivisor: " << e.what() << '\n';
        return exit_usage;
    } catch (const identities::UnknownIdentity &e) {
        err << "qdivisor: " << e.what() << '\n';
        return exit_unknown_identity;
    } catch (const InsufficientOrder &e) {
        err << "qdivisor: insufficient order: " << e.what() << '\n';
        return exit_insufficient_order;
    } catch (const RouteDisagreement &e) {
        err << "qdivisor: " << e.what() << '\n';
        return exit_disagreement;
    } catch (const std::exception &e) {
        err << "qdivisor: internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace qdivisor::cli
