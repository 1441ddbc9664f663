#include "condsym/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>

#include "condsym/calculus.hpp"
#include "condsym/eval.hpp"
#include "condsym/lie.hpp"
#include "condsym/normal.hpp"
#include "condsym/parser.hpp"
#include "condsym/reduction.hpp"
#include "condsym/report.hpp"
#include "condsym/solutions.hpp"
#include "condsym/waveforms.hpp"

namespace condsym::cli {

namespace {

struct CommonOpts {
    int n = 3;
    std::string alpha = "alpha"; // parameter-generic by default
    std::string convention = "euler";
    std::uint64_t seed = 42;
    int samples = 200;
    double tol = 1e-6;
    std::string output = "text";
    bool strict = false;
    bool no_timestamp = false;
    std::vector<std::string> region;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n, "spatial dimension")->capture_default_str();
    cmd->add_option("--alpha", o.alpha,
                    "alpha parameter: a rational like -1 or 3/2, or the literal 'alpha' for a "
                    "parameter-generic run")
        ->capture_default_str();
    cmd->add_option("--convention", o.convention, "anz1 exponent convention")
        ->check(CLI::IsMember({"paper", "euler"}))
        ->capture_default_str();
    cmd->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
    cmd->add_option("--samples", o.samples, "numeric sample count")->capture_default_str();
    cmd->add_option("--tol", o.tol, "numeric tolerance")->capture_default_str();
    cmd->add_option("--output", o.output, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_flag("--strict", o.strict, "exit 3 when inconclusive checks are present");
    cmd->add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp from JSON reports");
    cmd->add_option("--region", o.region,
                    "coordinate region override, e.g. x0=1:2 (repeatable)");
}

Expr parse_alpha(const std::string& s) {
    if (s == "alpha") return ex::symbol(sym::alpha());
    return parse(s);
}

lie::Region parse_region(const CommonOpts& o) {
    lie::Region r = lie::Region::defaults(o.n);
    for (const auto& spec : o.region) {
        auto eq = spec.find('=');
        auto colon = spec.find(':');
        if (eq == std::string::npos || colon == std::string::npos || colon < eq)
            throw CLI::ValidationError("--region", "expected coord=lo:hi, got '" + spec + "'");
        std::string coord = spec.substr(0, eq);
        double lo = std::stod(spec.substr(eq + 1, colon - eq - 1));
        double hi = std::stod(spec.substr(colon + 1));
        int idx = SymTab::instance().lookup(coord);
        if (idx < 0 || SymTab::instance().kind(static_cast<Sym>(idx)) != SymKind::Coordinate)
            throw CLI::ValidationError("--region", "'" + coord + "' is not a coordinate");
        int ci = SymTab::instance().index(static_cast<Sym>(idx));
        if (ci > o.n) throw CLI::ValidationError("--region", "coordinate beyond n");
        r.coord[ci] = {lo, hi};
    }
    return r;
}

nlohmann::ordered_json config_json(const CommonOpts& o, const std::string& extra_key = "",
                                   const std::string& extra_val = "") {
    nlohmann::ordered_json j;
    j["n"] = o.n;
    j["alpha"] = o.alpha;
    j["convention"] = o.convention;
    j["seed"] = o.seed;
    j["samples"] = o.samples;
    j["tol"] = o.tol;
    if (!extra_key.empty()) j[extra_key] = extra_val;
    return j;
}

int emit(report::Report& rep, const CommonOpts& o, std::string& out) {
    rep.with_timestamp = !o.no_timestamp;
    if (o.output == "json") out = rep.to_json().dump(2) + "\n";
    else out = rep.to_text();
    return rep.exit_code(o.strict);
}

// vector-field registry for the invariance/transform subcommands
lie::VectorField make_operator(const std::string& name, int n, const Expr& alpha) {
    using namespace waveforms;
    if (name.size() == 2 && name[0] == 'P' && isdigit(name[1]))
        return translation_p(n, name[1] - '0');
    if (name.size() == 3 && name[0] == 'J' && isdigit(name[1]) && isdigit(name[2]))
        return lorentz_j(n, name[1] - '0', name[2] - '0');
    if (name.size() == 3 && name[0] == 'd' && name[1] == 'x' && isdigit(name[2]))
        return plain_translation(n, name[2] - '0');
    if (name == "D") return op_D(n, alpha);
    if (name == "euler") return euler_field(n);
    if (name == "uscale") return u_scaling(n);
    if (name.rfind("xscale", 0) == 0 && name.size() == 7)
        return axis_scaling(n, name[6] - '0');
    if (name == "op2-euler") {
        Op2Spec spec;
        spec.n = n;
        spec.phi.push_back(ex::rat(1));
        for (int a = 1; a <= n; ++a) spec.phi.push_back(ex::w(a));
        spec.psi = ex::rat(0);
        auto v = op_op2(spec);
        v.name = "op2-euler";
        return v;
    }
    if (name == "op2-uscale") {
        Op2Spec spec;
        spec.n = n;
        for (int mu = 0; mu <= n; ++mu) spec.phi.push_back(ex::rat(0));
        spec.psi = ex::u();
        auto v = op_op2(spec);
        v.name = "op2-uscale";
        return v;
    }
    if (name == "op2-rot12") {
        Op2Spec spec;
        spec.n = n;
        for (int mu = 0; mu <= n; ++mu) spec.phi.push_back(ex::rat(0));
        spec.phi[1] = ex::neg(ex::w(2));
        spec.phi[2] = ex::w(1);
        spec.psi = ex::rat(0);
        auto v = op_op2(spec);
        v.name = "op2-rot12";
        return v;
    }
    if (name == "op2-psi-u2") {
        Op2Spec spec;
        spec.n = n;
        for (int mu = 0; mu <= n; ++mu) spec.phi.push_back(ex::rat(0));
        spec.psi = ex::pow(ex::u(), ex::rat(2));
        auto v = op_op2(spec);
        v.name = "op2-psi-u2";
        return v;
    }
    if (name == "op1-linear") {
        Op1Spec spec;
        spec.n = n;
        spec.alpha = alpha;
        spec.C.assign(n + 1, std::vector<Rational>(n + 1, Rational(0)));
        spec.C[0][1] = Rational(1);
        spec.C[1][0] = Rational(1); // boost block of J_{01} in the C slot
        spec.d = Rational(1, 2);
        auto v = op_op1(spec);
        v.name = "op1-linear";
        return v;
    }
    if (name == "op1-phi-u") {
        Op1Spec spec;
        spec.n = n;
        spec.alpha = alpha;
        spec.phi = {Op1Monomial{Rational(1), Rational(1), {}}};
        auto v = op_op1(spec);
        v.name = "op1-phi-u";
        return v;
    }
    throw CLI::ValidationError("--op", "unknown operator '" + name + "'");
}

lie::PDESystem make_system(const std::string& name, int n, const Expr& alpha) {
    using namespace waveforms;
    if (name == "wave") return build_wave(n);
    if (name == "wave+add1") return with_condition(build_wave(n), make_add1(n, alpha));
    if (name == "wave+add2") return with_condition(build_wave(n), make_add2(n, alpha));
    if (name == "wave+Fu") return build_wave(n, F_opaque());
    throw CLI::ValidationError("--system", "unknown system '" + name + "'");
}

report::CheckRow verdict_row(const std::string& id, const std::string& target,
                             const lie::Verdict& v, double tol) {
    report::CheckRow row;
    row.id = id;
    row.target = target;
    row.mode = v.mode;
    row.status = v.status == lie::Invariance::Invariant
                     ? "pass"
                     : (v.status == lie::Invariance::NotInvariant ? "fail" : "inconclusive");
    row.tolerance = tol;
    if (v.mode == "numeric") {
        row.max_residual = v.max_residual;
        row.samples = v.samples;
        row.seed = v.seed;
        row.location = v.argmax_x;
    } else if (!v.residuals.empty()) {
        row.note = "residual: " + v.residuals.front();
    }
    if (!v.note.empty()) row.note = v.note;
    return row;
}

// ---------------------------------------------------------------------------

int cmd_reduce(const CommonOpts& o, const std::string& ansatz, const std::string& beta_opt,
               const std::string& compare, const std::string& project,
               const std::string& mvec, std::string& out) {
    Expr alpha = parse_alpha(o.alpha);
    report::Report rep;
    rep.command = "reduce";
    rep.config = config_json(o, "ansatz", ansatz);
    if (!beta_opt.empty()) rep.config["beta"] = beta_opt;
    if (!compare.empty()) rep.config["compare"] = compare;
    if (!project.empty()) rep.config["project"] = project;

    reduction::ReducedSystem rs;
    Expr beta;
    if (ansatz == "anz1") {
        if (!beta_opt.empty()) beta = beta_opt == "beta" ? ex::symbol(sym::beta())
                                                         : parse(beta_opt);
        else beta = o.convention == "paper" ? reduction::anz1_beta_paper(alpha)
                                            : reduction::anz1_beta_euler(alpha);
        rs = reduction::derive_anz1(o.n, beta);
    } else if (ansatz == "anz2") {
        rs = reduction::derive_anz2(o.n, alpha);
    } else {
        throw CLI::ValidationError("--ansatz", "must be anz1 or anz2");
    }

    nlohmann::ordered_json eqs = nlohmann::ordered_json::array();
    for (const auto& eq : rs.equations) {
        nlohmann::ordered_json je;
        je["scale_x0"] = format(eq.scale_x0.render());
        je["scale_ln"] = eq.scale_ln;
        je["equation"] = format(eq.eq);
        eqs.push_back(je);
    }
    rep.config["equations"] = eqs;

    std::vector<Rational> m;
    if (!mvec.empty()) {
        std::stringstream ss(mvec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            Expr r = parse(tok);
            if (!r.is_rat()) throw CLI::ValidationError("--m", "components must be rational");
            m.push_back(r.rat());
        }
    }

    if (!project.empty()) {
        auto mode = project == "radial" ? reduction::ProjMode::Radial
                                        : reduction::ProjMode::Directional;
        if (mode == reduction::ProjMode::Directional && m.empty()) {
            m.assign(o.n, Rational(0));
            m[0] = Rational(1);
        }
        nlohmann::ordered_json odes = nlohmann::ordered_json::array();
        for (const auto& eq : rs.equations)
            odes.push_back(format(reduction::project_ode(eq.eq, o.n, mode, m)));
        rep.config["projected"] = odes;
    }

    if (!compare.empty()) {
        auto fx = waveforms::paper_fixture(compare, o.n, alpha);
        std::vector<reduction::DiffReport> reports;
        if (fx.kind == "reduced-pde") {
            reports = reduction::compare_system_with_paper(rs, fx.statements, o.n, compare);
        } else {
            throw CLI::ValidationError("--compare", "fixture '" + compare +
                                                        "' is not a reduced equation");
        }
        nlohmann::ordered_json jdiffs = nlohmann::ordered_json::array();
        for (const auto& dr : reports) {
            report::CheckRow row;
            row.id = "diff:" + dr.fixture_id;
            row.target = dr.fixture_id;
            row.mode = "symbolic";
            row.status = dr.verdict == "match" ? "pass"
                                               : (dr.verdict == "mismatch" ? "fail"
                                                                           : "inconclusive");
            row.tolerance = 0;
            if (!dr.mismatched_terms.empty()) {
                std::string terms;
                for (const auto& t : dr.mismatched_terms) terms += (terms.empty() ? "" : ", ") + t;
                row.note = "mismatched terms: " + terms;
            }
            rep.checks.push_back(row);
            nlohmann::ordered_json jd;
            jd["fixture"] = dr.fixture_id;
            jd["verdict"] = dr.verdict;
            jd["rows"] = nlohmann::ordered_json::array();
            for (const auto& r : dr.rows)
                jd["rows"].push_back({{"term", r.term},
                                      {"derived", r.derived},
                                      {"fixture", r.fixture},
                                      {"equal", r.equal}});
            jdiffs.push_back(jd);
        }
        rep.config["diff"] = jdiffs;

        // numeric arbitration for anz1: does the derived bucket reproduce the
        // FD residual of the composed field?
        if (ansatz == "anz1" && beta.is_rat()) {
            FuncBinding phi0;
            for (int a = 1; a <= o.n; ++a) phi0.formals.push_back(sym::invariant(a));
            phi0.body = ex::add(ex::pow(ex::w(1), ex::rat(2)),
                                ex::mul(ex::w(2), ex::add(ex::w(1), ex::rat(3))));
            numerics::FDConfig fd;
            Expr raw = reduction::substitute_ansatz(waveforms::build_wave(o.n),
                                                    reduction::ansatz_anz1(o.n, beta));
            auto oracle = reduction::arbitrate_anz1(raw, beta, o.n, phi0, 25, o.seed, fd);
            report::CheckRow row;
            row.id = "oracle:anz1-derived";
            row.target = "fd-box";
            row.mode = "numeric";
            row.tolerance = o.tol;
            row.max_residual = oracle.max_rel_dev;
            row.samples = oracle.points;
            row.seed = o.seed;
            row.status = oracle.max_rel_dev <= o.tol ? "pass" : "fail";
            rep.checks.push_back(row);
        }
    }

    CommonOpts oo = o;
    return emit(rep, oo, out);
}

int cmd_invariance(const CommonOpts& o, const std::string& system, const std::string& opname,
                   const std::string& mode, std::string& out) {
    Expr alpha = parse_alpha(o.alpha);
    lie::Region region = parse_region(o); // validated even for symbolic runs
    lie::PDESystem sys = make_system(system, o.n, alpha);
    lie::VectorField v = make_operator(opname, o.n, alpha);
    report::Report rep;
    rep.command = "invariance";
    rep.config = config_json(o, "system", system);
    rep.config["op"] = opname;
    rep.config["mode"] = mode;

    if (mode == "symbolic" || mode == "both") {
        auto verdict = lie::check_invariance_symbolic(sys, v);
        rep.checks.push_back(verdict_row("invariance:" + opname, sys.id, verdict, 0));
    }
    if (mode == "numeric" || mode == "both") {
        std::map<Sym, double> params;
        bool opaque_F = false;
        for (const auto& eq : sys.equations)
            if (mentions_symbol(eq, sym::bigF())) opaque_F = true;
        if (opaque_F) {
            report::CheckRow row;
            row.id = "invariance:" + opname;
            row.target = sys.id;
            row.mode = "numeric";
            row.status = "inconclusive";
            row.note = "numeric checks need a concrete nonlinearity, not an opaque F";
            rep.checks.push_back(row);
        } else if (!alpha.is_rat()) {
            report::CheckRow row;
            row.id = "invariance:" + opname;
            row.target = sys.id;
            row.mode = "numeric";
            row.status = "inconclusive";
            row.note = "numeric checks need a rational alpha";
            rep.checks.push_back(row);
        } else {
            params[sym::alpha()] = alpha.rat().to_double();
            auto verdict =
                lie::check_invariance_numeric(sys, v, params, o.samples, o.seed, o.tol, region);
            rep.checks.push_back(verdict_row("invariance:" + opname, sys.id, verdict, o.tol));
        }
    }
    CommonOpts oo = o;
    return emit(rep, oo, out);
}

int cmd_verify(const CommonOpts& o, const std::string& solution, const std::string& layers,
               std::string& out) {
    solutions::VerifyConfig cfg;
    cfg.n = o.n;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    cfg.tol = o.tol;
    cfg.convention = o.convention;

    report::Report rep;
    rep.command = "verify";
    rep.config = config_json(o, "solution", solution);
    rep.config["layers"] = layers;

    bool l1 = layers.find('1') != std::string::npos;
    bool l2 = layers.find('2') != std::string::npos;
    bool l3 = layers.find('3') != std::string::npos;
    if (l1 && l2 && l3) {
        rep.checks = solutions::verify_three_layer(solution, cfg);
    } else {
        if (l1)
            for (auto& r : solutions::verify(solution, "fixture", "symbolic", cfg))
                rep.checks.push_back(r);
        if (l2)
            for (auto& r : solutions::verify(solution, "derived", "symbolic", cfg))
                rep.checks.push_back(r);
        if (l3) {
            for (auto& r : solutions::verify(solution, "wave", "numeric", cfg))
                rep.checks.push_back(r);
            std::string cond = solutions::entry(solution).ansatz == "anz1" ? "add1" : "add2";
            for (auto& r : solutions::verify(solution, cond, "numeric", cfg))
                rep.checks.push_back(r);
        }
    }
    CommonOpts oo = o;
    return emit(rep, oo, out);
}

int cmd_transform(const CommonOpts& o, const std::string& solution, const std::string& opname,
                  double epsilon, std::string& out) {
    Expr alpha = parse_alpha(o.alpha);
    solutions::VerifyConfig cfg;
    cfg.n = o.n;
    cfg.samples = std::min(o.samples, 60); // flow transport integrates per probe
    cfg.seed = o.seed;
    cfg.tol = o.tol;
    cfg.convention = o.convention;

    lie::VectorField v = make_operator(opname, o.n, alpha);
    report::Report rep;
    rep.command = "transform";
    rep.config = config_json(o, "solution", solution);
    rep.config["op"] = opname;
    rep.config["epsilon"] = epsilon;
    rep.checks = solutions::transform_and_verify(solution, v, epsilon, {"wave"}, cfg);
    CommonOpts oo = o;
    return emit(rep, oo, out);
}

int cmd_catalog(const CommonOpts& o, std::string& out) {
    report::Report rep;
    rep.command = "catalog";
    rep.config = config_json(o);
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : solutions::catalog()) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["level"] = e.level;
        je["ansatz"] = e.ansatz;
        je["mode"] = e.mode;
        je["alpha"] = format(e.alpha);
        je["body"] = format(e.body);
        if (e.alt_body) je["alt_body"] = format(*e.alt_body);
        je["provenance"] = e.provenance;
        if (e.partner) je["partner"] = *e.partner;
        if (!e.note.empty()) je["note"] = e.note;
        entries.push_back(je);
    }
    rep.config["entries"] = entries;
    if (o.output == "json") {
        rep.with_timestamp = !o.no_timestamp;
        out = rep.to_json().dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "catalog (" << solutions::catalog().size() << " entries)\n";
        for (const auto& e : solutions::catalog()) {
            os << "  " << e.id << "  [" << e.ansatz << ", " << e.mode
               << ", alpha=" << format(e.alpha) << "]\n    " << format(e.body) << "\n";
        }
        out = os.str();
    }
    return 0;
}

int cmd_fixtures(const CommonOpts& o, const std::string& id, std::string& out) {
    report::Report rep;
    rep.command = "fixtures";
    rep.config = config_json(o);
    Expr alpha = parse_alpha(o.alpha);
    std::vector<std::string> ids = id.empty() ? waveforms::fixture_ids()
                                              : std::vector<std::string>{id};
    nlohmann::ordered_json jf = nlohmann::ordered_json::array();
    std::ostringstream os;
    for (const auto& fid : ids) {
        auto fx = waveforms::paper_fixture(fid, o.n, alpha);
        nlohmann::ordered_json je;
        je["id"] = fx.id;
        je["kind"] = fx.kind;
        je["statements"] = nlohmann::ordered_json::array();
        os << fx.id << " (" << fx.kind << ")\n";
        for (const auto& st : fx.statements) {
            je["statements"].push_back(format(st));
            os << "    " << format(st) << "\n";
        }
        if (!fx.note.empty()) {
            je["note"] = fx.note;
            os << "    note: " << fx.note << "\n";
        }
        jf.push_back(je);
    }
    rep.config["fixtures"] = jf;
    if (o.output == "json") {
        rep.with_timestamp = !o.no_timestamp;
        out = rep.to_json().dump(2) + "\n";
    } else {
        out = os.str();
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& argv, std::string& out, std::string& err) {
    CLI::App app{"condsym: symbolic-numeric verification of conditional symmetries, "
                 "reductions and exact solutions of the wave equation with additional "
                 "conditions"};
    app.require_subcommand(1);

    CommonOpts o;

    auto* reduce = app.add_subcommand("reduce", "substitute an ansatz and split by x0-scale");
    std::string ansatz = "anz1", beta_opt, compare, project, mvec;
    add_common(reduce, o);
    reduce->add_option("--ansatz", ansatz, "anz1 | anz2")->capture_default_str();
    reduce->add_option("--beta", beta_opt,
                       "anz1 exponent override: rational, 'alpha', '-alpha' or 'beta' "
                       "(generic); default follows --convention");
    reduce->add_option("--compare", compare, "fixture id to diff against (reduced1/reduced3/...)");
    reduce->add_option("--project", project, "project onto an ODE: directional | radial");
    reduce->add_option("--m", mvec, "rational unit direction, e.g. 1,0,0 or 3/5,4/5,0");

    auto* invariance = app.add_subcommand("invariance", "check (conditional) invariance");
    std::string system = "wave", opname = "D", mode = "both";
    add_common(invariance, o);
    invariance->add_option("--system", system, "wave | wave+add1 | wave+add2 | wave+Fu")
        ->capture_default_str();
    invariance->add_option("--op", opname,
                           "P0..Pn, J01.., dx0.., D, euler, uscale, xscale<a>, op2-euler, "
                           "op2-uscale, op2-rot12, op2-psi-u2, op1-linear, op1-phi-u")
        ->capture_default_str();
    invariance->add_option("--mode", mode, "symbolic | numeric | both")
        ->check(CLI::IsMember({"symbolic", "numeric", "both"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "verify catalogued solutions layer by layer");
    std::string solution = "red3-phi", layers = "1,2,3";
    add_common(verify, o);
    verify->add_option("--solution", solution, "catalog entry id")->capture_default_str();
    verify->add_option("--layers", layers, "subset of 1,2,3")->capture_default_str();

    auto* transform = app.add_subcommand("transform",
                                         "flow-transport a composed solution and re-verify");
    std::string tsolution = "red3-phi", topname = "dx2";
    double epsilon = 0.4;
    add_common(transform, o);
    transform->add_option("--solution", tsolution, "catalog entry id")->capture_default_str();
    transform->add_option("--op", topname, "generator to transport along")->capture_default_str();
    transform->add_option("--epsilon", epsilon, "group parameter")->capture_default_str();

    auto* catalogc = app.add_subcommand("catalog", "list the solution catalog");
    add_common(catalogc, o);

    auto* fixtures = app.add_subcommand("fixtures", "print the catalogued printed formulas verbatim");
    std::string fixture_id;
    add_common(fixtures, o);
    fixtures->add_option("--id", fixture_id, "single fixture id (default: all)");

    std::vector<std::string> args = argv;
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out = app.help();
        if (app.got_subcommand(reduce)) out = reduce->help();
        if (app.got_subcommand(invariance)) out = invariance->help();
        if (app.got_subcommand(verify)) out = verify->help();
        if (app.got_subcommand(transform)) out = transform->help();
        if (app.got_subcommand(catalogc)) out = catalogc->help();
        if (app.got_subcommand(fixtures)) out = fixtures->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err = std::string("usage error: ") + e.what() + "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(reduce)) return cmd_reduce(o, ansatz, beta_opt, compare, project, mvec, out);
        if (app.got_subcommand(invariance)) return cmd_invariance(o, system, opname, mode, out);
        if (app.got_subcommand(verify)) return cmd_verify(o, solution, layers, out);
        if (app.got_subcommand(transform)) return cmd_transform(o, tsolution, topname, epsilon, out);
        if (app.got_subcommand(catalogc)) return cmd_catalog(o, out);
        if (app.got_subcommand(fixtures)) return cmd_fixtures(o, fixture_id, out);
    } catch (const CLI::ValidationError& e) {
        err = std::string("usage error: ") + e.what() + "\n";
        return 2;
    } catch (const ParseError& e) {
        err = std::string("usage error: ") + e.what() + "\n";
        return 2;
    } catch (const std::exception& e) {
        err = std::string("error: ") + e.what() + "\n";
        return 2;
    }
    err = "no subcommand\n";
    return 2;
}

} // namespace condsym::cli
