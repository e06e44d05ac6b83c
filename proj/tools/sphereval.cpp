// sphereval command-line front end.

#include "sphereval/errors.hpp"
#include "sphereval/io.hpp"
#include "sphereval/lefschetz.hpp"
#include "sphereval/specfun.hpp"
#include "sphereval/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using namespace sphereval;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int K = 32;
    int points = 128;
    std::uint64_t seed = 20240517;
    double berg_tol = 1e-8;
    int berg_terms = 0;
    double cond_cap = 1e10;

    MvalOptions mval() const {
        MvalOptions o;
        o.K = K;
        o.cond_cap = cond_cap;
        o.transforms.points = points;
        o.transforms.berg_tol = berg_tol;
        o.transforms.berg_terms = berg_terms;
        return o;
    }
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json number_or_string(double x) {
    if (std::isfinite(x)) return x;
    return fmt(x);
}

void emit(const Json& j, const std::string& out) {
    if (out.empty() || out == "-")
        std::cout << j.dump(2) << '\n';
    else
        write_json_file(out, j);
}

void require_range(const char* what, int v, int lo, int hi) {
    if (v < lo || v > hi)
        throw UsageError(std::string(what) + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got " +
                         std::to_string(v));
}

bool looks_like_builtin(const std::string& s) {
    static const std::regex re(R"((Pi|MeanSection|MeanSectionFull)_\d+|SteinerJ)");
    return std::regex_match(s, re);
}

/// File path or builtin name, returned in representation `kind`.
ValuationRep load_valuation(const std::string& in, RepKind kind, std::optional<int> n, std::optional<int> i,
                            const Config& cfg) {
    if (!std::filesystem::exists(in) && looks_like_builtin(in)) {
        if (!n) throw UsageError("--n is required with builtin input " + in);
        require_range("--n", *n, 3, 64);
        return convert(builtin(in, *n, cfg.mval()), kind, cfg.mval());
    }
    ValuationRep v = valuation_from_json(read_json_file(in), kind, i);
    if (n && *n != v.n)
        throw UsageError("--n " + std::to_string(*n) + " disagrees with n = " + std::to_string(v.n) + " in " + in);
    return v;
}

RepKind parse_rep(const std::string& s) {
    try {
        return rep_from_string(s);
    } catch (const Error&) {
        throw UsageError("representation must be generating, crofton or klain, got '" + s + "'");
    }
}

// multipliers

struct MultipliersArgs {
    std::string transform;
    int n = 3;
    std::optional<int> i, j;
    bool inverse = false;
    std::string format = "csv";
};

TransformTag make_tag(const MultipliersArgs& a) {
    const int n = a.n;
    auto need = [&](const std::optional<int>& v, const char* flag) {
        if (!v) throw UsageError("--transform " + a.transform + " needs " + flag);
        return *v;
    };
    TransformTag tag;
    if (a.transform == "cosine") {
        const int i = need(a.i, "--i");
        require_range("--i", i, 1, n - 1);
        tag = TransformTag::cosine(i);
    } else if (a.transform == "perp") {
        const int i = need(a.i, "--i");
        require_range("--i", i, 1, n - 1);
        tag = TransformTag::perp(i);
    } else if (a.transform == "radon-up") {
        const int i = need(a.i, "--i"), j = need(a.j, "--j");
        require_range("--i", i, 1, n - 2);
        require_range("--j", j, i + 1, n - 1);
        tag = TransformTag::radon_up(i, j);
    } else if (a.transform == "radon-down") {
        const int i = need(a.i, "--i"), j = need(a.j, "--j");
        require_range("--i", i, 1, n - 2);
        require_range("--j", j, i + 1, n - 1);
        tag = TransformTag::radon_down(j, i);
    } else if (a.transform == "box" || a.transform == "berg") {
        const int j = a.j.value_or(n);
        require_range("--j", j, 2, n);
        tag = a.transform == "box" ? TransformTag::box(j) : TransformTag::berg_conv(j);
    } else {
        throw UsageError("--transform must be one of cosine, radon-up, radon-down, box, berg, perp; got '" +
                         a.transform + "'");
    }
    return a.inverse ? TransformTag::inverse_of(tag) : tag;
}

int cmd_multipliers(const MultipliersArgs& a, const Config& cfg) {
    require_range("--n", a.n, 3, 64);
    require_range("--kmax", cfg.K, 0, 256);
    const TransformTag tag = make_tag(a);
    const MultiplierSeq m = multipliers(tag, a.n, cfg.K, cfg.mval().transforms);
    std::vector<int> ks;
    for (int k = 0; k <= cfg.K; ++k)
        if (!m.even_only || k % 2 == 0) ks.push_back(k);
    if (a.format == "json") {
        Json rows = Json::array();
        for (int k : ks) rows.push_back({{"k", k}, {"value", m.values[k]}});
        emit({{"transform", m.name}, {"n", a.n}, {"condition", number_or_string(m.condition)}, {"rows", rows}}, "");
    } else {
        std::cout << "k,value\n";
        for (int k : ks) std::cout << k << ',' << fmt(m.values[k]) << '\n';
    }
    return 0;
}

// convert / apply

struct ConvertArgs {
    std::string from = "generating", to, in, out;
    std::optional<int> n, i;
};

int cmd_convert(const ConvertArgs& a, const Config& cfg) {
    const RepKind from = parse_rep(a.from), to = parse_rep(a.to);
    const ValuationRep v = load_valuation(a.in, from, a.n, a.i, cfg);
    emit(to_json(convert(v, to, cfg.mval())), a.out);
    return 0;
}

struct ApplyArgs {
    std::string op, rep = "generating", in, out;
    std::optional<int> n, i;
    int power = 1;
    bool report = false;
};

Json report_json(const OperatorReport& r) {
    Json c = Json::array();
    for (const auto& [expr, value] : r.constants) c.push_back({{"expr", expr}, {"value", value}});
    Json j = {{"op", r.op},
              {"input", to_string(r.input)},
              {"output", to_string(r.output)},
              {"degree_in", r.degree_in},
              {"degree_out", r.degree_out},
              {"constants", c},
              {"condition", number_or_string(r.condition)}};
    if (r.op == "fourier") j["margin"] = r.margin;
    return j;
}

int cmd_apply(const ApplyArgs& a, const Config& cfg) {
    if (a.power < 1) throw UsageError("--power must be >= 1, got " + std::to_string(a.power));
    const MvalOptions opts = cfg.mval();
    ValuationRep v = load_valuation(a.in, parse_rep(a.rep), a.n, a.i, cfg);
    Json reports = Json::array();
    for (int m = 0; m < a.power; ++m) {
        OperatorReport r;
        if (a.op == "lambda")
            v = lambda_op(v, &r);
        else if (a.op == "lop")
            v = l_op(v, opts, &r);
        else if (a.op == "lop-berg")
            v = l_op_berg(v, opts, &r);
        else if (a.op == "fourier")
            v = fourier_op(v, opts, &r);
        else
            throw UsageError("--op must be one of lambda, lop, lop-berg, fourier; got '" + a.op + "'");
        reports.push_back(report_json(r));
    }
    emit(to_json(v), a.out);
    if (a.report) std::cerr << reports.dump(2) << '\n';
    return 0;
}

// body

struct BodyArgs {
    std::string file, op;
    std::vector<double> dir;
};

ConvexBody body_from_json(const Json& j) {
    if (j.is_object() && j.contains("type")) {
        const std::string t = j.at("type").get<std::string>();
        const int n = j.value("n", 3);
        if (t == "ball") return ConvexBody::ball(n, j.value("r", 1.0));
        if (t == "cube") return ConvexBody::unit_cube(n);
        if (t == "subspace_cube") return ConvexBody::subspace_cube(n, j.at("i").get<int>());
        if (t != "polytope") throw UsageError("body type must be polytope, ball, cube or subspace_cube, got '" + t + "'");
    }
    return ConvexBody::polytope(vertices_from_json(j));
}

int cmd_body(const BodyArgs& a) {
    const ConvexBody K = body_from_json(read_json_file(a.file));
    if (static_cast<int>(a.dir.size()) != K.dim())
        throw UsageError("--dir needs " + std::to_string(K.dim()) + " components, got " + std::to_string(a.dir.size()));
    Vec u = Eigen::Map<const Vec>(a.dir.data(), static_cast<Eigen::Index>(a.dir.size()));
    if (!(u.norm() > 0.0)) throw UsageError("--dir must be nonzero");
    u.normalize();
    double value = 0.0;
    if (a.op == "support")
        value = support(K, u);
    else if (a.op == "projvol")
        value = projection_volume(K, u);
    else
        throw UsageError("--op must be support or projvol, got '" + a.op + "'");
    std::cout << fmt(value) << '\n';
    return 0;
}

// verify

struct VerifyArgs {
    std::vector<int> dims{3};
    std::vector<int> criteria;
    long mc_samples = 1000000;
    std::string out;
};

int cmd_verify(const VerifyArgs& a, const Config& cfg) {
    for (int n : a.dims) require_range("--n", n, 3, 5);
    require_range("--kmax", cfg.K, 2, 64);
    for (int c : a.criteria) require_range("--criterion", c, 1, criterion_count);
    if (a.mc_samples < 1000) throw UsageError("--mc-samples must be >= 1000");
    VerifyConfig vc;
    vc.dims = a.dims;
    vc.K = cfg.K;
    vc.points = cfg.points;
    vc.seed = cfg.seed;
    vc.mc_samples = a.mc_samples;
    std::vector<CheckResult> results;
    if (a.criteria.empty()) {
        results = run_all(vc);
    } else {
        for (int c : a.criteria) {
            auto r = run_criterion(c, vc);
            results.insert(results.end(), r.begin(), r.end());
        }
    }
    Json checks = Json::array();
    bool ok = true;
    for (const auto& r : results) {
        ok = ok && r.pass;
        checks.push_back({{"criterion", r.criterion},
                          {"check", r.check},
                          {"status", r.pass ? "pass" : "fail"},
                          {"residual", number_or_string(r.residual)},
                          {"tolerance", r.tolerance},
                          {"detail", r.detail}});
    }
    Json report = {{"config", {{"n", a.dims}, {"kmax", cfg.K}, {"points", cfg.points}, {"seed", cfg.seed}}},
                   {"status", ok ? "pass" : "fail"},
                   {"checks", checks}};
    emit(report, a.out);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minkowski valuations on the sphere: multipliers, conversions, operators and checks"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--kmax", cfg.K, "band limit K")->envname("SPHEREVAL_KMAX");
    app.add_option("--points", cfg.points, "quadrature points")->envname("SPHEREVAL_POINTS");
    app.add_option("--seed", cfg.seed, "seed for Monte Carlo oracles")->envname("SPHEREVAL_SEED");
    app.add_option("--berg-tol", cfg.berg_tol, "Berg series tolerance");
    app.add_option("--berg-terms", cfg.berg_terms, "Berg series length (0: max(64, 32 K))");
    app.add_option("--cond-cap", cfg.cond_cap, "condition cap for inverse transforms");

    MultipliersArgs ma;
    auto* mult = app.add_subcommand("multipliers", "multiplier table of a transform (CSV k,value)");
    mult->add_option("--transform", ma.transform, "cosine|radon-up|radon-down|box|berg|perp")->required();
    mult->add_option("--n", ma.n, "ambient dimension");
    mult->add_option("--i", ma.i, "subspace dimension");
    mult->add_option("--j", ma.j, "second dimension (Radon target or source, Berg/box index)");
    mult->add_flag("--inverse", ma.inverse, "multipliers of the inverse");
    mult->add_option("--format", ma.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    ConvertArgs ca;
    auto* conv = app.add_subcommand("convert", "convert between generating, crofton and klain forms");
    conv->add_option("--from", ca.from, "input representation");
    conv->add_option("--to", ca.to, "output representation")->required();
    conv->add_option("--n", ca.n, "ambient dimension (builtin input)");
    conv->add_option("--i", ca.i, "degree for generating files without i");
    conv->add_option("--in", ca.in, "profile JSON or builtin name (Pi_2, MeanSection_3, SteinerJ, ...)")->required();
    conv->add_option("--out", ca.out, "output file (stdout if absent)");

    ApplyArgs aa;
    auto* apply = app.add_subcommand("apply", "apply a Lefschetz operator");
    apply->add_option("--op", aa.op, "lambda|lop|lop-berg|fourier")->required();
    apply->add_option("--rep", aa.rep, "input representation");
    apply->add_option("--n", aa.n, "ambient dimension (builtin input)");
    apply->add_option("--i", aa.i, "degree for generating files without i");
    apply->add_option("--in", aa.in, "profile JSON or builtin name")->required();
    apply->add_option("--out", aa.out, "output file (stdout if absent)");
    apply->add_option("--power", aa.power, "number of applications");
    apply->add_flag("--report", aa.report, "operator report as JSON on stderr");

    BodyArgs ba;
    auto* body = app.add_subcommand("body", "convex body queries");
    body->require_subcommand(1);
    auto* eval = body->add_subcommand("eval", "support function or projection volume");
    eval->add_option("--file", ba.file, "body JSON: vertex array or {\"type\": ...}")->required();
    eval->add_option("--op", ba.op, "support|projvol")->required();
    eval->add_option("--dir", ba.dir, "direction x,y,z")->required()->delimiter(',');

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "run the acceptance checks, JSON report");
    ver->add_option("--n", va.dims, "dimensions for dimension-parameterized checks");
    ver->add_option("--criterion", va.criteria, "restrict to these criteria");
    ver->add_option("--mc-samples", va.mc_samples, "Haar Monte Carlo samples");
    ver->add_option("--out", va.out, "report file (stdout if absent)");

    int ki = 0;
    bool ext = false;
    auto* kap = app.add_subcommand("kappa", "volume of the unit ball");
    kap->add_option("--i", ki, "dimension")->required();
    kap->add_flag("--ext", ext, "Gamma continuation for negative dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\nrun with --help for usage\n";
        return 2;
    }

    try {
        if (*mult) return cmd_multipliers(ma, cfg);
        if (*conv) return cmd_convert(ca, cfg);
        if (*apply) return cmd_apply(aa, cfg);
        if (*eval) return cmd_body(ba);
        if (*ver) return cmd_verify(va, cfg);
        if (*kap) {
            std::cout << fmt(ext ? kappa_ext(ki) : kappa(ki)) << '\n';
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
