#pragma once

// chiy command-line front end. Kept in a header so tests can drive it
// in-process through run_cli().
//
// Exit codes: 0 success; 1 an audit check is violated or a verify check
// fails; 2 usage or input error.

#include "chiy/chiy.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chiy::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_input = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "table";
    std::string out_path;
    int max_dim = 14;
};

inline void check_dim(int dim, const Options& opt)
{
    if (dim < 1 || dim > opt.max_dim)
        throw UsageError("dimension " + std::to_string(dim) + " outside [1, " + std::to_string(opt.max_dim) +
                         "] (raise the ceiling with --max-dim)");
}

inline std::string read_input(const std::string& path, std::istream& in)
{
    if (path.empty() || path == "-")
        return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream f(path);
    if (!f)
        throw UsageError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(f), {});
}

inline ParsedDescriptor load_manifold(const std::string& path, std::istream& in, const Options& opt)
{
    return parse_descriptor(read_input(path, in), opt.max_dim);
}

inline int parse_int(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("expected an integer ") + what + ", got '" + s + "'");
    }
}

// ---------------------------------------------------------------------------
// universal

inline int cmd_universal(int dim, const std::string& what, int p, const Options& opt, std::ostream& out)
{
    check_dim(dim, opt);
    const bool structured = opt.format == "structured";
    Json doc;
    doc["dim"] = dim;
    doc["what"] = what;

    auto emit_polys = [&](const std::string& label, const std::vector<ChernPolynomial>& polys, int first) {
        Json arr = Json::array();
        for (std::size_t i = 0; i < polys.size(); ++i) {
            const int idx = first + static_cast<int>(i);
            if (structured)
                arr.push_back({{"label", label + std::to_string(idx)}, {"index", idx}, {"terms", to_json(polys[i])}});
            else
                out << label << idx << " = " << polys[i] << '\n';
        }
        doc["polynomials"] = std::move(arr);
    };

    if (what == "chi_y") {
        if (!structured)
            out << "chi_y = sum_p chi^p y^p, dim " << dim << '\n';
        emit_polys("chi^", chi_y_universal(dim).coeffs, 0);
    } else if (what == "K") {
        if (!structured)
            out << "chi_y = sum_j K_j (y+1)^j, dim " << dim << '\n';
        emit_polys("K_", k_table(dim).entries, 0);
    } else if (what == "chi_p") {
        if (p < 0 || p > dim)
            throw UsageError("--p must lie in [0, " + std::to_string(dim) + "]");
        emit_polys("chi^", {chi_p(dim, p)}, p);
    } else if (what == "support") {
        Json arr = Json::array();
        for (int j = 0; j <= dim; j += 2) {
            auto support = k_support(dim, j);
            auto allowed = k_support_bound(dim, j);
            bool contained = std::includes(allowed.begin(), allowed.end(), support.begin(), support.end());
            if (structured) {
                arr.push_back({{"j", j}, {"indices", support}, {"allowed", allowed}, {"contained", contained}});
            } else {
                out << "K_" << j << ": c_i for i in {";
                bool first = true;
                for (int i : support) {
                    out << (first ? "" : ",") << i;
                    first = false;
                }
                out << "}" << (contained ? "" : "  NOT within the allowed set") << '\n';
            }
        }
        doc["supports"] = std::move(arr);
    } else {
        throw UsageError("--what must be one of chi_y, K, chi_p, support");
    }
    if (structured)
        out << doc.dump(2) << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------------------
// catalog

inline ManifoldChernData build_family(const std::string& family, const std::vector<std::string>& params,
                                      std::istream& in, const Options& opt);

// "cp:2", "torus:1", "hypersurface:2:4", "ball-quotient:3", or a descriptor path.
inline ManifoldChernData build_factor(const std::string& spec, std::istream& in, const Options& opt)
{
    std::vector<std::string> pieces;
    std::stringstream ss(spec);
    for (std::string piece; std::getline(ss, piece, ':');)
        pieces.push_back(piece);
    if (pieces.size() >= 2 && pieces[0] != "product") {
        static const std::vector<std::string> families = {"cp", "torus", "hypersurface", "ball-quotient"};
        if (std::find(families.begin(), families.end(), pieces[0]) != families.end())
            return build_family(pieces[0], {pieces.begin() + 1, pieces.end()}, in, opt);
    }
    return load_manifold(spec, in, opt).manifold;
}

inline ManifoldChernData build_family(const std::string& family, const std::vector<std::string>& params,
                                      std::istream& in, const Options& opt)
{
    auto need = [&](std::size_t count, const char* usage) {
        if (params.size() != count)
            throw UsageError(std::string("usage: catalog ") + usage);
    };
    if (family == "cp") {
        need(1, "cp <n>");
        int n = parse_int(params[0], "dimension");
        check_dim(n, opt);
        return projective_space(n);
    }
    if (family == "torus") {
        need(1, "torus <n>");
        int n = parse_int(params[0], "dimension");
        check_dim(n, opt);
        return complex_torus(n);
    }
    if (family == "hypersurface") {
        need(2, "hypersurface <n> <degree>");
        int n = parse_int(params[0], "dimension");
        int d = parse_int(params[1], "degree");
        check_dim(n, opt);
        if (d < 1)
            throw UsageError("hypersurface degree must be at least 1");
        return hypersurface(n, d);
    }
    if (family == "ball-quotient") {
        need(1, "ball-quotient <n>");
        int n = parse_int(params[0], "dimension");
        check_dim(n, opt);
        return ball_quotient(n);
    }
    if (family == "product") {
        need(2, "product <factor> <factor>   (factor: cp:N, torus:N, hypersurface:N:D, ball-quotient:N or a file)");
        auto a = build_factor(params[0], in, opt);
        auto b = build_factor(params[1], in, opt);
        check_dim(a.dim + b.dim, opt);
        return product(a, b);
    }
    throw UsageError("unknown family '" + family + "' (cp, torus, hypersurface, ball-quotient, product)");
}

// ---------------------------------------------------------------------------
// eval

inline int cmd_eval(const std::string& input, std::istream& in, const Options& opt, std::ostream& out)
{
    auto parsed = load_manifold(input, in, opt);
    const auto& m = parsed.manifold;
    EvaluatedGenus g = evaluate_genus(m);
    std::vector<Rational> k = expand_about_minus_one(g.coeffs);
    Specializations s = specializations(g);
    std::vector<std::string> warnings = parsed.warnings;
    if (!all_integral(g))
        warnings.emplace_back("non-integral chi^p: not the Chern data of any compact complex manifold");
    std::optional<SerreVerdict> serre;
    if (m.hodge)
        serre = serre_check(*m.hodge);

    if (opt.format == "structured") {
        Json doc;
        doc["manifold"] = m.name;
        doc["dim"] = m.dim;
        Json chi = Json::array(), kj = Json::array();
        for (const auto& v : g.coeffs)
            chi.push_back(v.to_string());
        for (const auto& v : k)
            kj.push_back(v.to_string());
        doc["chi_p"] = std::move(chi);
        doc["K"] = std::move(kj);
        doc["euler"] = s.euler.to_string();
        doc["todd"] = s.todd.to_string();
        doc["signature"] = s.signature.to_string();
        doc["plausible"] = all_integral(g) && m.integral();
        if (serre)
            doc["serre"] = {{"symmetric", serre->symmetric}, {"chi_duality", serre->chi_duality}};
        doc["warnings"] = warnings;
        out << doc.dump(2) << '\n';
        return exit_ok;
    }
    out << "manifold   " << m.name << " (dim " << m.dim << ")\n";
    out << "chi_y      " << to_polynomial(g) << '\n';
    for (std::size_t j = 0; j < k.size(); ++j)
        out << "K_" << j << (j < 10 ? "        " : "       ") << k[j] << '\n';
    out << "euler      " << s.euler << '\n';
    out << "todd       " << s.todd << '\n';
    out << "signature  " << s.signature << '\n';
    out << "plausible  " << (all_integral(g) && m.integral() ? "yes" : "no") << '\n';
    if (serre)
        out << "hodge      agrees with Chern numbers; Serre symmetry " << (serre->passed() ? "ok" : "FAILS") << '\n';
    for (const auto& w : warnings)
        out << "warning: " << w << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------------------
// audit

inline void render_report(const AuditReport& r, std::ostream& out)
{
    out << "manifold " << r.manifold << "  dim " << r.dim << "  mode " << to_string(r.mode) << '\n';
    out << "  i  left >= right  verdict";
    bool any_display = false;
    for (const auto& c : r.checks)
        any_display = any_display || c.display.has_value();
    out << (any_display ? "     displayed A_i >= bound" : "") << '\n';
    for (const auto& c : r.checks) {
        out << "  " << c.index << "  " << c.left << " >= " << c.right << "  " << to_string(c.verdict);
        if (c.display)
            out << "     " << c.display->left << " >= " << c.display->right << " (x" << c.display->factor << ")";
        out << '\n';
    }
    out << "  chi^p      ";
    for (const auto& v : r.chi_p)
        out << v << ' ';
    out << '\n';
    out << "  chi^p = (-1)^(n-p) for p >= "
        << (r.chi_p_pattern_from ? std::to_string(*r.chi_p_pattern_from) : std::string("(none)")) << '\n';
    out << "  chi_y = (-1)^n chi_y(CP^n): " << (r.full_cpn_pattern ? "yes" : "no") << '\n';
    out << "  L2 h^{p,n-p}: ";
    for (const auto& v : r.l2_reconstruction)
        out << v.value << ' ';
    out << '\n';
    for (const auto& n : r.notes)
        out << "  note: " << n << '\n';
    for (const auto& w : r.warnings)
        out << "  warning: " << w << '\n';
}

inline int cmd_audit(const std::string& mode, const std::string& input, std::istream& in, const Options& opt,
                     std::ostream& out)
{
    auto parsed = load_manifold(input, in, opt);
    std::vector<AuditMode> modes;
    if (mode == "all") {
        modes = {AuditMode::hyperbolic, AuditMode::nonelliptic};
        if (parsed.manifold.dim >= 2)
            modes.push_back(AuditMode::yau);
    } else {
        try {
            modes = {audit_mode_from_string(mode)};
        } catch (const std::invalid_argument&) {
            throw UsageError("--mode must be hyperbolic, nonelliptic, yau or all");
        }
        if (modes[0] == AuditMode::yau && parsed.manifold.dim < 2)
            throw UsageError("the Yau inequality needs dimension at least 2");
    }
    std::vector<AuditReport> reports;
    for (AuditMode m : modes) {
        reports.push_back(audit(parsed.manifold, m));
        auto& r = reports.back();
        std::vector<std::string> merged = parsed.warnings;
        for (auto& w : r.warnings)
            if (std::find(merged.begin(), merged.end(), w) == merged.end())
                merged.push_back(std::move(w));
        r.warnings = std::move(merged);
    }
    bool violated = false;
    for (const auto& r : reports)
        violated = violated || r.any_violated();

    if (opt.format == "structured") {
        if (reports.size() == 1) {
            out << to_json(reports.front()).dump(2) << '\n';
        } else {
            Json arr = Json::array();
            for (const auto& r : reports)
                arr.push_back(to_json(r));
            out << arr.dump(2) << '\n';
        }
    } else {
        for (const auto& r : reports)
            render_report(r, out);
    }
    return violated ? exit_failed : exit_ok;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyRow {
    int dim = 0;
    bool duality = true;
    bool euler_collapse = true;
    bool closed_forms = true;
    bool odd_dependence = true;
    bool support = true;
    bool cpn_genus = true;
    bool bound_identity = true;
    bool all() const
    {
        return duality && euler_collapse && closed_forms && odd_dependence && support && cpn_genus && bound_identity;
    }
};

inline VerifyRow verify_dimension(int n)
{
    VerifyRow row;
    row.dim = n;
    const auto& g = chi_y_universal(n);
    for (int p = 0; p <= n; ++p)
        if (!(g[static_cast<std::size_t>(p)] == Rational(sign_power(n)) * g[static_cast<std::size_t>(n - p)]))
            row.duality = false;

    ChernPolynomial at_minus_one(n);
    for (int p = 0; p <= n; ++p)
        at_minus_one += Rational(sign_power(p)) * g[static_cast<std::size_t>(p)];
    row.euler_collapse = at_minus_one == ChernPolynomial::monomial(Partition{n});

    row.closed_forms = verify_k_closed_forms(n).all_match();
    auto odd = odd_k_dependence(n);
    row.odd_dependence = odd.all_hold() &&
                         (odd.relations.empty() || odd.relations[0].coefficients[0] == Rational(-n, 2));
    for (int j = 0; j <= n; j += 2) {
        auto s = k_support(n, j);
        auto allowed = k_support_bound(n, j);
        if (!std::includes(allowed.begin(), allowed.end(), s.begin(), s.end()))
            row.support = false;
    }
    auto cp = projective_space(n);
    EvaluatedGenus gcp = evaluate_genus(cp);
    for (int p = 0; p <= n; ++p)
        if (gcp.coeffs[static_cast<std::size_t>(p)] != Rational(sign_power(p)))
            row.cpn_genus = false;
    auto k = expand_about_minus_one(gcp.coeffs);
    for (int j = 0; j <= n; ++j) {
        Rational lhs = Rational(sign_power(j)) * k[static_cast<std::size_t>(j)];
        if (lhs != cpn_k_bound(n, j) || lhs != Rational(binomial(n + 1, j + 1)))
            row.bound_identity = false;
    }
    return row;
}

inline int cmd_verify(int from, int to, const Options& opt, std::ostream& out)
{
    if (from > to)
        throw UsageError("--from must not exceed --to");
    check_dim(from, opt);
    check_dim(to, opt);
    bool all = true;
    Json arr = Json::array();
    for (int n = from; n <= to; ++n) {
        VerifyRow row = verify_dimension(n);
        all = all && row.all();
        if (opt.format == "structured") {
            arr.push_back({{"dim", n},
                           {"duality", row.duality},
                           {"euler_collapse", row.euler_collapse},
                           {"closed_forms", row.closed_forms},
                           {"odd_dependence", row.odd_dependence},
                           {"support", row.support},
                           {"cpn_genus", row.cpn_genus},
                           {"bound_identity", row.bound_identity}});
        } else {
            auto mark = [](bool b) { return b ? "ok  " : "FAIL"; };
            out << "n=" << n << (n < 10 ? " " : "") << "  duality " << mark(row.duality) << " euler "
                << mark(row.euler_collapse) << " closed-forms " << mark(row.closed_forms) << " odd "
                << mark(row.odd_dependence) << " support " << mark(row.support) << " cpn "
                << mark(row.cpn_genus) << " bound " << mark(row.bound_identity) << '\n';
        }
    }
    if (opt.format == "structured")
        out << arr.dump(2) << '\n';
    return all ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------

inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact chi_y-genus computations and Chern number audits", "chiy"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "structured"}));
    app.add_option("--out", opt.out_path, "Write output to this file instead of standard output");
    app.add_option("--max-dim", opt.max_dim, "Largest dimension accepted")->check(CLI::Range(1, 40));

    int dim = 0, p = -1;
    std::string what = "chi_y";
    auto* universal = app.add_subcommand("universal", "Universal polynomials in Chern classes");
    universal->add_option("--dim", dim, "Complex dimension")->required();
    universal->add_option("--what", what, "chi_y | K | chi_p | support");
    universal->add_option("--p", p, "Index for --what chi_p");

    std::string family;
    std::vector<std::string> params;
    auto* catalog = app.add_subcommand("catalog", "Emit a descriptor for a reference manifold");
    catalog->add_option("family", family, "cp | torus | hypersurface | ball-quotient | product")->required();
    catalog->add_option("params", params, "Family parameters");

    std::string input = "-";
    auto* eval = app.add_subcommand("eval", "Evaluate chi_y, K_j and specializations on a descriptor");
    eval->add_option("input", input, "Descriptor file, or - for standard input");

    std::string mode = "all";
    auto* audit_cmd = app.add_subcommand("audit", "Audit a descriptor against the Chern number inequalities");
    audit_cmd->add_option("--mode", mode, "hyperbolic | nonelliptic | yau | all");
    audit_cmd->add_option("input", input, "Descriptor file, or - for standard input");

    int from = 1, to = 10;
    auto* verify = app.add_subcommand("verify", "Check the structure of K_j over a range of dimensions");
    verify->add_option("--from", from, "First dimension");
    verify->add_option("--to", to, "Last dimension");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    std::ostringstream buffer;
    std::ostream& sink = opt.out_path.empty() ? out : buffer;
    int code = exit_ok;
    try {
        if (*universal)
            code = cmd_universal(dim, what, p, opt, sink);
        else if (*catalog)
            sink << to_descriptor(build_family(family, params, in, opt)).dump(2) << '\n';
        else if (*eval)
            code = cmd_eval(input, in, opt, sink);
        else if (*audit_cmd)
            code = cmd_audit(mode, input, in, opt, sink);
        else if (*verify)
            code = cmd_verify(from, to, opt, sink);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const DescriptorError& e) {
        err << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) {
            err << "error: cannot write '" << opt.out_path << "'\n";
            return exit_input;
        }
        f << buffer.str();
    }
    return code;
}

} // namespace chiy::cli
