#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <map>
#include <random>
#include <sstream>

#include "contact_sextic/algebra.hpp"
#include "contact_sextic/contact.hpp"
#include "contact_sextic/curves.hpp"
#include "contact_sextic/error.hpp"
#include "contact_sextic/families.hpp"
#include "contact_sextic/numeric.hpp"
#include "plot.hpp"
#include "registry.hpp"

namespace contact_sextic::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool json = false;
    unsigned seed = 1;
    std::optional<double> tol;
    std::string out;
};

// --family/--params/--param/--curve, shared by every command that takes a curve
struct CurveInput {
    std::string family;
    std::string params;
    std::vector<std::string> param_kv;
    std::string curve_file;

    void attach(CLI::App* app) {
        app->add_option("--family,--name", family, "named family (see: family list)");
        app->add_option("--params", params, "family parameters as a JSON object");
        app->add_option("--param", param_kv, "one parameter as key=value, repeatable");
        app->add_option("--curve", curve_file, "curve JSON file");
    }

    bool given() const { return !family.empty() || !curve_file.empty(); }

    json parameters() const {
        json p = json::object();
        if (!params.empty()) {
            try {
                p = json::parse(params);
            } catch (const json::exception& e) {
                throw UsageError(std::string("--params is not JSON: ") + e.what());
            }
        }
        for (const auto& kv : param_kv) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw UsageError("--param expects key=value, got " + kv);
            const std::string v = kv.substr(eq + 1);
            // numbers and arrays as JSON, everything else ("1/2", "x^2 - 1") as a string
            json parsed = json::parse(v, nullptr, false);
            p[kv.substr(0, eq)] = parsed.is_discarded() || parsed.is_number_float() ? json(v) : parsed;
        }
        return p;
    }

    // the curve plus {"family", "params"} when it came from the registry
    std::pair<CurveDoc, json> resolve() const {
        if (!family.empty() && !curve_file.empty()) throw UsageError("give either --family or --curve, not both");
        if (!curve_file.empty()) return {curve_from_json(read_json_file(curve_file)), json::object()};
        if (family.empty()) throw UsageError("a curve is required: --family NAME or --curve FILE");
        const FamilySpec& f = find_family(family);
        const json p = normalise_params(f, parameters());
        return {f.build(p), {{"family", f.name}, {"params", p}}};
    }
};

Check check_for(const CurveInput& in) {
    return in.family.empty() ? Check::Ode : find_family(in.family).check;
}

const ParametricCurve& need_parametric(const CurveDoc& c) {
    if (!c.parametric) throw UsageError("this command needs a parametrised curve");
    return *c.parametric;
}

const ImplicitCurve& need_implicit(const CurveDoc& c) {
    if (!c.implicit) throw UsageError("this command needs an implicit curve");
    return *c.implicit;
}

json verify_doc(const CurveDoc& c, Check check) {
    const ParametricCurve& par = need_parametric(c);
    json out;
    bool ok = true;
    if (check == Check::Ode) {
        const Verification v = verify_solution(par);
        out["check"] = "seventh_order";
        out["residual"] = v.residual.to_string();
        ok = v.solves;
    } else {
        const MultiPoly r = halphen_residual(par);
        out["check"] = "halphen";
        out["residual"] = r.to_string();
        ok = r.is_zero();
    }
    if (c.implicit) {
        const MultiPoly inc = substitute_rational(c.implicit->polynomial(), {{"x", par.x()}, {"y", par.y()}});
        out["incidence"] = inc.to_string();
        ok = ok && inc.is_zero();
    }
    if (c.z) {
        // z dx/dt - dy/dt = 0 along a contact curve
        const RationalFunction w = *c.z * par.x().derivative() - par.y().derivative();
        out["contact"] = w.numerator_poly().to_string();
        ok = ok && w.is_zero();
    }
    out["passed"] = ok;
    return out;
}

Rational random_q(std::mt19937& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (;;) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (!nonzero || q != 0) return q;
    }
}

json random_general_params(std::mt19937& rng) {
    for (;;) {
        std::array<Rational, 7> c;
        for (int k = 0; k < 7; ++k) c[k] = random_q(rng, k == 3 || k == 4);
        if (c[4] + c[5] * c[6] == 0) continue;
        json p;
        for (int k = 0; k < 7; ++k) p["c" + std::to_string(k + 1)] = to_string(c[k]);
        return p;
    }
}

ExactJet jet_of(const CurveDoc& c, const std::string& t, const std::string& x0, const std::string& y0,
                unsigned order) {
    if (!t.empty()) {
        const ParametricCurve& par = need_parametric(c);
        const Rational tq = parse_rational(t);
        ExactJet jet;
        jet.x0 = par.x().evaluate(tq);
        jet.y.push_back(par.y().evaluate(tq));
        for (const auto& d : jet_from_parametric(par, order)) jet.y.push_back(d.evaluate(tq));
        return jet;
    }
    if (x0.empty() || y0.empty()) throw UsageError("give --t, or both --x0 and --y0");
    return implicit_jet(need_implicit(c), parse_rational(x0), parse_rational(y0), order);
}

json rational_matrix(const RationalMatrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& q : row) r.push_back(to_string(q));
        out.push_back(r);
    }
    return out;
}

std::array<double, 4> parse_box(const std::string& s) {
    std::array<double, 4> v{};
    std::istringstream in(s);
    char comma;
    if (!(in >> v[0] >> comma >> v[1] >> comma >> v[2] >> comma >> v[3]) || v[0] >= v[1] || v[2] >= v[3])
        throw UsageError("--viewport expects xmin,xmax,ymin,ymax");
    return v;
}

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            out.push_back(std::stol(tok));
        } catch (const std::exception&) {
            throw UsageError("not an integer list: " + s);
        }
    }
    return out;
}

std::string csv_of(const Trajectory& tr) {
    std::ostringstream s;
    s.precision(17);
    s << "x,y,y1,y2,y3,y4,y5,y6\n";
    for (const auto& p : tr.samples) {
        s << p.x;
        for (double v : p.y) s << ',' << v;
        s << '\n';
    }
    return s.str();
}

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::Parse:
            return Usage;
        case ErrorCode::MaxIterations:
            return CheckFailed;
        default:
            return MathDomain;
    }
}

std::string human_readable(const json& payload) {
    std::ostringstream s;
    for (const auto& [k, v] : payload.items()) s << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    return s.str();
}

CommandResult run(const std::vector<std::string>& args) {
    CommandResult res;
    Globals g;
    CLI::App app{"Exact and numeric tools for rational solutions of the seventh-order contact-symmetric ODE",
                 "contact_sextic"};
    app.require_subcommand(1);
    app.add_flag("--json", g.json, "print the payload as JSON");
    app.add_option("--seed", g.seed, "seed for randomised checks");
    app.add_option("--tol", g.tol, "tolerance (fit: residual, integrate: rtol)");
    app.add_option("--out", g.out, "output file");

    // verify
    CurveInput v_in;
    int v_random = 0;
    auto* verify = app.add_subcommand("verify", "exact residual and incidence checks");
    v_in.attach(verify);
    verify->add_option("--random", v_random, "check N random parameter tuples of the general family (uses --seed)");

    auto* algebra = app.add_subcommand("algebra", "bracket table and Killing form of the ten generators");

    // transform
    CurveInput t_in;
    std::string t_point, t_flow, t_time = "1";
    auto* transform = app.add_subcommand("transform", "point transformation or contact flow of a curve");
    t_in.attach(transform);
    transform->add_option("--point", t_point, "point transformation as JSON {\"c1\"..\"c7\"}");
    transform->add_option("--flow", t_flow, "contact flow H8, H9 or H10")->check(CLI::IsMember({"H8", "H9", "H10"}));
    transform->add_option("--time", t_time, "flow parameter (rational)");

    // resultant
    std::string r_u, r_v, r_var = "z", r_b;
    bool r_symbolic = false;
    auto* resultant_cmd = app.add_subcommand("resultant", "Sylvester resultant, or the elimination split for new_curve");
    resultant_cmd->add_option("--u", r_u, "first polynomial");
    resultant_cmd->add_option("--v", r_v, "second polynomial");
    resultant_cmd->add_option("--var", r_var, "variable to eliminate");
    resultant_cmd->add_option("--b", r_b, "split Res_z(u, v) for Q = 0, P = x(x - 1)^3 at this b");
    resultant_cmd->add_flag("--symbolic", r_symbolic, "split over Q[b] instead");

    // invariants
    CurveInput i_in;
    std::string i_poly, i_sextic, i_deltas;
    long i_degree = 0;
    bool i_singular = false;
    auto* invariants = app.add_subcommand("invariants", "discriminant, cube test, cross-ratio, singular points, genus");
    i_in.attach(invariants);
    invariants->add_option("--poly", i_poly, "f(x, y) directly");
    invariants->add_flag("--singular", i_singular, "also locate singular points");
    invariants->add_option("--sextic", i_sextic, "binary sextic in x: quadratic invariant");
    invariants->add_option("--degree", i_degree, "arithmetic genus: curve degree");
    invariants->add_option("--deltas", i_deltas, "arithmetic genus: comma-separated delta invariants");

    // integrate
    CurveInput n_in;
    std::string n_jet, n_t, n_x0, n_y0;
    double n_to = 0.0;
    IntegratorConfig n_cfg;
    auto* integrate_cmd = app.add_subcommand("integrate", "adaptive Dormand-Prince integration, CSV to --out");
    n_in.attach(integrate_cmd);
    integrate_cmd->add_option("--jet", n_jet, "start jet JSON file");
    integrate_cmd->add_option("--t", n_t, "start at parameter t of the family");
    integrate_cmd->add_option("--x0", n_x0, "start point x (implicit branch)");
    integrate_cmd->add_option("--y0", n_y0, "start point y (implicit branch)");
    integrate_cmd->add_option("--to", n_to, "end of the interval")->required();
    integrate_cmd->add_option("--atol", n_cfg.atol, "absolute tolerance");
    integrate_cmd->add_option("--eps-sing", n_cfg.eps_sing, "smallest allowed |y'''|");
    integrate_cmd->add_option("--max-steps", n_cfg.max_steps, "step budget");

    // fit
    std::string f_data, f_guess;
    FitConfig f_cfg;
    f_cfg.tolerance = 1e-9;
    auto* fit = app.add_subcommand("fit", "Newton fit of c1..c7 to a jet");
    fit->add_option("--data", f_data, "jet JSON file with y..y^(6)")->required();
    fit->add_option("--guess", f_guess, "initial guess as JSON {\"c1\"..\"c7\"}");
    fit->add_option("--max-iter", f_cfg.max_iterations, "Newton iteration limit");
    fit->add_option("--damping", f_cfg.damping, "first trial step of the line search");

    // family list | build | jet
    auto* family = app.add_subcommand("family", "named solution families");
    family->require_subcommand(1);
    auto* f_list = family->add_subcommand("list", "names and parameter schemas");
    CurveInput b_in;
    auto* f_build = family->add_subcommand("build", "curve JSON for a family member");
    b_in.attach(f_build);
    CurveInput j_in;
    std::string j_t, j_x0, j_y0;
    unsigned j_order = 6;
    auto* f_jet = family->add_subcommand("jet", "exact jet of a family member at a point");
    j_in.attach(f_jet);
    f_jet->add_option("--t", j_t, "curve parameter of the point");
    f_jet->add_option("--x0", j_x0, "point x (implicit branch)");
    f_jet->add_option("--y0", j_y0, "point y (implicit branch)");
    f_jet->add_option("--order", j_order, "highest derivative");

    // plot
    CurveInput p_in;
    PlotConfig p_cfg;
    std::string p_viewport, p_csv;
    double p_tmin = 0, p_tmax = 0;
    auto* plot = app.add_subcommand("plot", "SVG and CSV of the real parametrised curve");
    p_in.attach(plot);
    plot->add_option("--samples", p_cfg.samples, "t-grid size");
    auto* o_tmin = plot->add_option("--tmin", p_tmin, "uniform t-grid start (default: whole line)");
    auto* o_tmax = plot->add_option("--tmax", p_tmax, "uniform t-grid end");
    o_tmin->needs(o_tmax);
    o_tmax->needs(o_tmin);
    plot->add_option("--viewport", p_viewport, "xmin,xmax,ymin,ymax");
    plot->add_option("--width", p_cfg.width, "pixels");
    plot->add_option("--height", p_cfg.height, "pixels");
    plot->add_option("--csv", p_csv, "sample CSV path (default: --out with .csv)");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    for (auto* sub : family->get_subcommands({})) sub->fallthrough();

    std::vector<const char*> argv{"contact_sextic"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        res.message = out.str() + err.str();
        res.exit_code = code == 0 ? Ok : Usage;
        return res;
    }
    res.json_output = g.json;

    // every command fills payload and may set exit_code; --out is honoured here
    // unless the command writes its own artifact
    bool out_written = false;
    auto emit = [&](const std::string& path, const std::string& text) {
        write_text_file(path, text);
        res.artifacts.push_back(path);
    };

    try {
        json& pl = res.payload;
        if (verify->parsed()) {
            if (v_random > 0) {
                if (v_in.family != "general") throw UsageError("--random is only defined for --family general");
                std::mt19937 rng(g.seed);
                json trials = json::array();
                bool all = true;
                for (int i = 0; i < v_random; ++i) {
                    const json p = random_general_params(rng);
                    const FamilySpec& f = find_family("general");
                    json r = verify_doc(f.build(normalise_params(f, p)), Check::Ode);
                    r["params"] = p;
                    all = all && r["passed"].get<bool>();
                    trials.push_back(r);
                }
                pl = {{"family", "general"}, {"seed", g.seed}, {"trials", trials}, {"passed", all}};
            } else {
                auto [doc, meta] = v_in.resolve();
                pl = meta;
                pl.update(verify_doc(doc, check_for(v_in)));
            }
            if (!pl["passed"].get<bool>()) res.exit_code = CheckFailed;
        } else if (algebra->parsed()) {
            const AlgebraTable t = build_algebra_table();
            const auto names = symmetry_generator_names();
            json brackets = json::array();
            for (int i = 0; i < 10; ++i) {
                json row = json::array();
                for (int j = 0; j < 10; ++j) {
                    json e = json::object();
                    for (int k = 0; k < 10; ++k)
                        if (t.structure[i][j][k] != 0) e[names[k]] = to_string(t.structure[i][j][k]);
                    row.push_back(e);
                }
                brackets.push_back(row);
            }
            json point_type = json::array();
            for (const auto& h : t.basis) point_type.push_back(h.is_point_type());
            const Signature sig = t.killing_signature();
            const Rational det = t.killing_determinant();
            const bool ok = t.span_dimension == 10 && t.is_antisymmetric() && t.satisfies_jacobi() && det != 0 &&
                            t.point_type_count() == 7;
            pl = {{"basis", names},
                  {"point_type", point_type},
                  {"span_dimension", t.span_dimension},
                  {"brackets", brackets},
                  {"antisymmetric", t.is_antisymmetric()},
                  {"jacobi", t.satisfies_jacobi()},
                  {"killing", rational_matrix(t.killing)},
                  {"killing_determinant", to_string(det)},
                  {"killing_signature", {{"positive", sig.positive}, {"negative", sig.negative}, {"zero", sig.zero}}},
                  {"point_type_count", t.point_type_count()},
                  {"passed", ok}};
            if (!ok) res.exit_code = CheckFailed;
        } else if (transform->parsed()) {
            if (!t_flow.empty() && !t_point.empty()) throw UsageError("give either --point or --flow");
            auto [doc, meta] = t_in.resolve();
            const ParametricCurve& par = need_parametric(doc);
            CurveDoc out;
            if (!t_flow.empty()) {
                const ContactGenerator gen = t_flow == "H8"   ? ContactGenerator::H8
                                             : t_flow == "H9" ? ContactGenerator::H9
                                                              : ContactGenerator::H10;
                const ContactCurve cc = doc.z ? apply_contact_flow(ContactCurve{par, *doc.z}, {gen, parse_rational(t_time)})
                                              : apply_contact_flow(par, {gen, parse_rational(t_time)});
                out.parametric = cc.curve;
                out.z = cc.z;
            } else {
                json pj = json::object();
                if (!t_point.empty()) {
                    pj = json::parse(t_point, nullptr, false);
                    if (!pj.is_object()) throw UsageError("--point must be a JSON object");
                }
                PointTransformationParams q;
                Rational* slots[7] = {&q.c1, &q.c2, &q.c3, &q.c4, &q.c5, &q.c6, &q.c7};
                for (const auto& [k, val] : pj.items()) {
                    if (k.size() != 2 || k[0] != 'c' || k[1] < '1' || k[1] > '7')
                        throw UsageError("unknown point parameter " + k);
                    *slots[k[1] - '1'] = rational_from_json(val);
                }
                out.parametric = apply_point_transformation(par, q);
            }
            pl = curve_to_json(out);
        } else if (resultant_cmd->parsed()) {
            if (!r_b.empty() || r_symbolic) {
                const EliminationSplit s =
                    r_symbolic ? split_elimination_symbolic(r_b.empty() ? Rational(1, 2) : parse_rational(r_b))
                               : split_elimination(parse_rational(r_b));
                const MultiPoly expected = r_symbolic ? new_curve_polynomial()
                                                      : new_curve_polynomial().evaluate("b", parse_rational(r_b));
                const bool ok = s.solution == expected && !s.spurious.is_zero() && s.spurious.total_degree() > 0;
                pl = {{"resultant", s.resultant.to_string()},
                      {"solution", s.solution.to_string()},
                      {"spurious", s.spurious.to_string()},
                      {"solution_is_new_curve", s.solution == expected},
                      {"passed", ok}};
                if (!ok) res.exit_code = CheckFailed;
            } else {
                if (r_u.empty() || r_v.empty()) throw UsageError("resultant needs --u and --v, or --b");
                const MultiPoly r = resultant(MultiPoly::parse(r_u), MultiPoly::parse(r_v), r_var);
                pl = {{"var", r_var}, {"resultant", r.to_string()}, {"total_degree", r.total_degree()}};
            }
        } else if (invariants->parsed()) {
            std::optional<ImplicitCurve> curve;
            if (!i_poly.empty()) {
                if (i_in.given()) throw UsageError("give either --poly or a curve, not both");
                curve = ImplicitCurve(MultiPoly::parse(i_poly));
            } else if (i_in.given()) {
                curve = need_implicit(i_in.resolve().first);
            }
            if (curve) {
                const MultiPoly& f = curve->polynomial();
                pl["implicit"] = f.to_string();
                pl["degree"] = curve->degree();
                if (f.degree("y") >= 1) pl["discriminant_y"] = discriminant_wrt(f, "y").to_string();
                if (f.degree("y") == 3) {
                    const auto Q = discriminant_is_cube(*curve);
                    pl["cube_quartic"] = Q ? json(Q->to_string()) : json(nullptr);
                    if (Q && Q->degree("x") == 4) {
                        pl["quartic_real_roots"] = count_real_roots(Q->to_unipoly("x"));
                        const auto r = complex_roots(*Q);
                        const EquianharmonicCheck e = equianharmonic_check({r[0], r[1], r[2], r[3]});
                        pl["cross_ratio"] = {e.cross_ratio.real(), e.cross_ratio.imag()};
                        pl["equianharmonic"] = e.equianharmonic;
                        pl["equianharmonic_distance"] = e.distance;
                    }
                }
                if (i_singular) {
                    json pts = json::array();
                    for (const auto& s : singular_points(*curve)) {
                        json e = {{"x", {s.x.real(), s.x.imag()}},
                                  {"y", {s.y.real(), s.y.imag()}},
                                  {"multiplicity", s.multiplicity}};
                        if (s.is_exact()) e["exact"] = {to_string(*s.x_exact), to_string(*s.y_exact)};
                        pts.push_back(e);
                    }
                    pl["singular_points"] = pts;
                }
            }
            if (!i_sextic.empty()) {
                const Rational qi = quadratic_invariant(SexticForm::from_polynomial(MultiPoly::parse(i_sextic)));
                pl["quadratic_invariant"] = to_string(qi);
                pl["null_cone"] = qi == 0;
            }
            if (i_degree != 0 || !i_deltas.empty()) pl["arithmetic_genus"] = arithmetic_genus(i_degree, parse_longs(i_deltas));
            if (pl.empty()) throw UsageError("invariants needs --poly, a curve, --sextic or --degree");
        } else if (integrate_cmd->parsed()) {
            NumericJet start;
            if (!n_jet.empty()) {
                if (n_in.given()) throw UsageError("give either --jet or a curve, not both");
                start = jet_from_json(read_json_file(n_jet));
            } else {
                start = to_numeric(jet_of(n_in.resolve().first, n_t, n_x0, n_y0, 6));
            }
            if (g.tol) n_cfg.rtol = *g.tol;
            const Trajectory tr = integrate(start, n_to, n_cfg);
            const auto& last = tr.samples.back();
            pl = {{"status", tr.status == IntegrationStatus::Completed ? "completed" : "singularity_approached"},
                  {"accepted", tr.accepted},
                  {"rejected", tr.rejected},
                  {"samples", tr.samples.size()},
                  {"final", {{"x", last.x}, {"y", last.y}}}};
            if (!g.out.empty()) {
                emit(g.out, csv_of(tr));
                out_written = true;
            }
        } else if (fit->parsed()) {
            const NumericJet data = jet_from_json(read_json_file(f_data));
            if (g.tol) f_cfg.tolerance = *g.tol;
            if (!f_guess.empty()) {
                const json gj = json::parse(f_guess, nullptr, false);
                if (!gj.is_object()) throw UsageError("--guess must be a JSON object");
                for (const auto& [k, val] : gj.items()) {
                    if (k.size() != 2 || k[0] != 'c' || k[1] < '1' || k[1] > '7') throw UsageError("unknown parameter " + k);
                    f_cfg.initial_guess[k[1] - '1'] = val.is_string() ? to_double(parse_rational(val.get<std::string>()))
                                                                      : val.get<double>();
                }
            }
            const FitResult r = fit_parameters(data, f_cfg);
            pl = fit_to_json(r);
            pl["tolerance"] = f_cfg.tolerance;
        } else if (family->parsed()) {
            if (f_list->parsed()) {
                json fs = json::array();
                for (const auto& f : families()) fs.push_back(describe(f));
                pl = {{"families", fs}};
            } else if (f_build->parsed()) {
                auto [doc, meta] = b_in.resolve();
                pl = meta;
                pl.update(curve_to_json(doc));
            } else if (f_jet->parsed()) {
                auto [doc, meta] = j_in.resolve();
                pl = meta;
                pl.update(jet_to_json(jet_of(doc, j_t.empty() && j_x0.empty() ? "1/2" : j_t, j_x0, j_y0, j_order)));
            }
        } else if (plot->parsed()) {
            auto [doc, meta] = p_in.resolve();
            const ParametricCurve& par = need_parametric(doc);
            if (o_tmin->count()) {
                p_cfg.tmin = p_tmin;
                p_cfg.tmax = p_tmax;
            }
            if (!p_viewport.empty()) p_cfg.viewport = parse_box(p_viewport);
            p_cfg.title = meta.contains("family") ? meta["family"].get<std::string>() : "curve";
            if (meta.contains("params"))
                for (const auto& [k, val] : meta["params"].items())
                    p_cfg.title += " " + k + "=" + (val.is_string() ? val.get<std::string>() : val.dump());
            const Plot p = sample_curve(par, p_cfg);
            const std::string svg = g.out.empty() ? "curve.svg" : g.out;
            std::string csv = p_csv;
            if (csv.empty()) csv = std::filesystem::path(svg).replace_extension(".csv").string();
            emit(svg, render_svg(p, p_cfg));
            emit(csv, render_csv(p));
            out_written = true;
            json cusps = json::array();
            for (const auto& c : p.cusps) cusps.push_back({{"t", c.t}, {"x", c.x}, {"y", c.y}});
            pl = meta;
            pl["svg"] = svg;
            pl["csv"] = csv;
            pl["viewport"] = p.viewport;
            pl["segments"] = p.segments.size();
            pl["poles"] = p.poles;
            pl["cusps"] = cusps;
        }
        if (!g.out.empty() && !out_written) emit(g.out, pl.dump(2) + "\n");
        if (!res.artifacts.empty()) pl["artifacts"] = res.artifacts;
    } catch (const UsageError& e) {
        res.exit_code = Usage;
        res.message = e.what();
    } catch (const Error& e) {
        res.exit_code = exit_code_for(e.code());
        res.message = e.what();
        res.payload = {{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
    }
    return res;
}

}  // namespace contact_sextic::cli
