#include "qtri_cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <qtri/conditions.hpp>
#include <qtri/errors.hpp>
#include <qtri/oeis.hpp>
#include <qtri/properties.hpp>
#include <qtri/transforms.hpp>
#include <qtri/triangles.hpp>

#include "qtri_cli/inputs.hpp"
#include "qtri_cli/report_json.hpp"

namespace qtri::cli
{

namespace
{

const std::vector<std::string> check_names{"rows-log-concave", "rowgen-strong-qlcx", "rowgen-strong-qlcv",
                                           "rowgen-qlcx", "rowgen-qlcv", "tp"};

struct TargetOptions {
    std::string triangle_file;
    std::string oeis_id;
    std::size_t arity = 0;
    std::string preset_name;
    std::string params;
    std::string scheme_file;
    std::size_t s = 2;
    std::optional<std::size_t> n;
    std::optional<std::string> cache_dir;
    bool offline = false;
};

struct Options {
    TargetOptions target;
    std::string out_path;
    std::string json_path;
    std::vector<std::string> checks;
    std::size_t r = 2;
    std::string theorem;
    std::string consts;
    long k_max = 20;
    std::string input;
    std::string direction = "convex";
    std::size_t m = 1;
};

struct Resolved {
    Triangle triangle;
    Json description;
};

std::size_t require_n(const TargetOptions &t)
{
    if (!t.n) {
        throw ConfigError("--n is required for generated targets");
    }
    return *t.n;
}

Resolved resolve_target(const TargetOptions &t, bool allow_oeis)
{
    const int given = !t.triangle_file.empty() + !t.oeis_id.empty() + !t.preset_name.empty() + !t.params.empty()
                      + !t.scheme_file.empty();
    if (given != 1) {
        throw ConfigError(allow_oeis ? "give exactly one of --triangle, --oeis, --preset, --params, --scheme"
                                     : "give exactly one of --preset, --params, --scheme");
    }
    Json d;
    if (!t.triangle_file.empty()) {
        d["triangle"] = t.triangle_file;
        return {parse_triangle(read_text_file(t.triangle_file)), d};
    }
    if (!t.oeis_id.empty()) {
        if (t.arity == 0) {
            throw ConfigError("--oeis needs --arity");
        }
        const auto dir = resolve_cache_dir(t.cache_dir);
        const BFile b = fetch_bfile(t.oeis_id, dir, t.offline);
        Triangle tri = reshape_complete_rows(b, t.arity);
        d["oeis"] = t.oeis_id;
        d["arity"] = t.arity;
        d["entries"] = b.entries.size();
        d["complete_rows"] = tri.num_rows();
        return {std::move(tri), d};
    }
    const std::size_t n = require_n(t);
    d["n"] = n;
    if (!t.preset_name.empty()) {
        const Preset p = preset(t.preset_name, t.s);
        d["preset"] = p.name;
        if (p.kind == Preset::Kind::s_pascal) {
            d["s"] = p.s;
        }
        return {generate(p, n), d};
    }
    if (!t.params.empty()) {
        const ConstParams p = ConstParams::parse(t.params);
        Json pj = Json::array();
        for (const auto &v : p.as_vector()) {
            pj.push_back(to_json(v));
        }
        d["params"] = pj;
        return {gen_const(p, n), d};
    }
    d["scheme"] = t.scheme_file;
    const SchemeFile sf = parse_scheme_file(read_text_file(t.scheme_file));
    if (const auto *rec = std::get_if<RecursiveSpec>(&sf)) {
        return {gen_recursive(rec->f, rec->g, n), d};
    }
    return {gen_penta(std::get<PentaSchemes>(sf), n), d};
}

Json run_header(const std::string &command, const std::vector<std::string> &args)
{
    Json j;
    j["tool"] = "qtri";
    j["version"] = QTRI_VERSION;
    j["command"] = command;
    j["argv"] = args;
    return j;
}

int status_of(const std::vector<Verdict> &verdicts)
{
    int status = exit_holds;
    for (Verdict v : verdicts) {
        if (v == Verdict::fails) {
            return exit_fails;
        }
        if (v == Verdict::precondition || v == Verdict::inapplicable) {
            status = exit_inapplicable;
        }
    }
    return status;
}

std::string_view status_name(int status)
{
    switch (status) {
    case exit_holds:
        return "holds";
    case exit_fails:
        return "fails";
    default:
        return "inapplicable";
    }
}

void summarize(std::ostream &err, const PropertyReport &r)
{
    err << r.property << ": " << to_string(r.verdict);
    if (r.holds()) {
        err << " on " << r.range.what << " in [" << r.range.first << ", " << r.range.last << "]";
    } else if (r.witness) {
        err << " at";
        for (long i : r.witness->indices) {
            err << ' ' << i;
        }
        if (!r.witness->rows.empty()) {
            err << " rows {";
            for (auto i : r.witness->rows) {
                err << ' ' << i;
            }
            err << " } cols {";
            for (auto i : r.witness->cols) {
                err << ' ' << i;
            }
            err << " }";
        }
        if (r.witness->coefficient) {
            err << " coefficient " << *r.witness->coefficient;
        }
        err << " value " << to_string(r.witness->value);
        if (!r.witness->detail.empty()) {
            err << " (" << r.witness->detail << ")";
        }
    }
    err << '\n';
}

void emit(Json report, int status, std::chrono::steady_clock::time_point start, const std::string &json_path,
          std::ostream &out)
{
    report["status"] = status_name(status);
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    report["timing_ms"] = elapsed.count();
    const std::string text = report.dump(2);
    out << text << '\n';
    if (!json_path.empty()) {
        std::ofstream f(json_path);
        f << text << '\n';
        if (!f) {
            throw Error("cannot write " + json_path);
        }
    }
}

void write_output(const std::string &path, const std::string &text, std::ostream &out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << text;
    if (!f.flush()) {
        throw Error("cannot write " + path);
    }
}

int cmd_generate(const Options &o, const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    const auto start = std::chrono::steady_clock::now();
    Resolved r = resolve_target(o.target, false);
    const std::string text = format_triangle(r.triangle);
    if (o.out_path.empty() || o.out_path == "-") {
        out << text;
        err << "generated " << r.triangle.num_rows() << " rows\n";
        return exit_holds;
    }
    write_output(o.out_path, text, out);
    Json report = run_header("generate", args);
    report["inputs"] = r.description;
    report["output"] = {{"path", o.out_path}, {"arity", r.triangle.arity()}, {"rows", r.triangle.num_rows()}};
    report["reports"] = Json::array();
    err << "wrote " << r.triangle.num_rows() << " rows to " << o.out_path << '\n';
    emit(std::move(report), exit_holds, start, o.json_path, out);
    return exit_holds;
}

int cmd_check(const Options &o, const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    const auto start = std::chrono::steady_clock::now();
    if (o.checks.empty()) {
        throw ConfigError("name at least one check: rows-log-concave, rowgen-strong-qlcx, rowgen-strong-qlcv, "
                          "rowgen-qlcx, rowgen-qlcv, tp");
    }
    Resolved r = resolve_target(o.target, true);
    const Triangle &t = r.triangle;

    std::vector<PropertyReport> reports;
    for (const auto &name : o.checks) {
        if (name == "rows-log-concave") {
            PropertyReport agg;
            agg.property = "rows log-concave";
            agg.range = {"row n", 0, static_cast<long>(t.n_max())};
            for (std::size_t n = 0; n < t.num_rows(); ++n) {
                PropertyReport row = is_log_concave(NumSeq(t.row(n)));
                if (!row.holds()) {
                    agg.verdict = row.verdict;
                    agg.witness = row.witness;
                    agg.witness->indices.insert(agg.witness->indices.begin(), static_cast<long>(n));
                    agg.witness->detail = "row n, position k: " + agg.witness->detail;
                    break;
                }
            }
            reports.push_back(std::move(agg));
        } else if (name == "rowgen-strong-qlcx") {
            reports.push_back(is_strongly_q_log_convex(row_gen_fns(t)));
        } else if (name == "rowgen-strong-qlcv") {
            reports.push_back(is_strongly_q_log_concave(row_gen_fns(t)));
        } else if (name == "rowgen-qlcx") {
            reports.push_back(is_q_log_convex(row_gen_fns(t)));
        } else if (name == "rowgen-qlcv") {
            reports.push_back(is_q_log_concave(row_gen_fns(t)));
        } else if (name == "tp") {
            reports.push_back(is_TP_r(triangle_matrix(t, t.n_max()), o.r));
        }
    }

    Json report = run_header("check", args);
    Json inputs = r.description;
    inputs["arity"] = t.arity();
    inputs["n_max"] = t.n_max();
    inputs["checks"] = o.checks;
    if (std::find(o.checks.begin(), o.checks.end(), "tp") != o.checks.end()) {
        inputs["r"] = o.r;
    }
    report["inputs"] = std::move(inputs);
    Json list = Json::array();
    std::vector<Verdict> verdicts;
    for (const auto &rep : reports) {
        summarize(err, rep);
        list.push_back(to_json(rep));
        verdicts.push_back(rep.verdict);
    }
    report["reports"] = std::move(list);
    const int status = status_of(verdicts);
    emit(std::move(report), status, start, o.json_path, out);
    return status;
}

int cmd_conditions(const Options &o, const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    const auto start = std::chrono::steady_clock::now();
    Json inputs;
    inputs["theorem"] = o.theorem;
    ConditionReport rep;
    if (o.theorem == "thm21") {
        PentaSchemes schemes;
        if (!o.target.scheme_file.empty() == !o.consts.empty()) {
            throw ConfigError("thm21 needs exactly one of --scheme FILE or --consts gamma,e,f,g,h");
        }
        if (!o.consts.empty()) {
            std::vector<Rational> v;
            std::stringstream ss(o.consts);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                v.push_back(parse_rational(tok));
            }
            if (v.size() != 5) {
                throw ConfigError("--consts needs five values gamma,e,f,g,h");
            }
            schemes = PentaSchemes{CoeffScheme::constant(v[0]), CoeffScheme::constant(v[1]),
                                   CoeffScheme::constant(v[2]), CoeffScheme::constant(v[3]),
                                   CoeffScheme::constant(v[4])};
            inputs["consts"] = o.consts;
        } else {
            const SchemeFile sf = parse_scheme_file(read_text_file(o.target.scheme_file));
            if (!std::holds_alternative<PentaSchemes>(sf)) {
                throw ConfigError("thm21 needs a \"penta\" scheme file");
            }
            schemes = std::get<PentaSchemes>(sf);
            inputs["scheme"] = o.target.scheme_file;
        }
        inputs["k_max"] = o.k_max;
        rep = check_thm21(schemes, o.k_max);
    } else {
        if (o.target.params.empty()) {
            throw ConfigError(o.theorem + " needs --params alpha,beta,gamma,e,f,g,h");
        }
        const ConstParams p = ConstParams::parse(o.target.params);
        inputs["params"] = o.target.params;
        rep = o.theorem == "cor22" ? check_cor22(p) : check_thm34(p);
    }

    for (const auto &c : rep.conditions) {
        err << rep.theorem << " (" << c.id << "): " << (c.established ? "holds" : "not established");
        for (const auto &cl : c.clauses) {
            if (!cl.holds) {
                err << "; " << cl.text << " fails";
                if (cl.k) {
                    err << " at k = " << *cl.k;
                }
                err << " (" << to_string(*cl.lhs) << " < " << to_string(*cl.rhs) << ")";
            }
        }
        err << '\n';
    }
    for (const auto &h : rep.hypotheses) {
        summarize(err, h);
    }
    for (const auto &a : rep.annotations) {
        err << "note: " << a << '\n';
    }

    Json report = run_header("conditions", args);
    report["inputs"] = std::move(inputs);
    report["reports"] = Json::array({to_json(rep)});
    const int status = rep.all_established() ? exit_holds : exit_fails;
    emit(std::move(report), status, start, o.json_path, out);
    return status;
}

int cmd_transform(const Options &o, const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    const auto start = std::chrono::steady_clock::now();
    if (o.direction != "convex" && o.direction != "concave") {
        throw ConfigError("--direction must be convex or concave");
    }
    if (!o.target.n) {
        throw ConfigError("--n is required");
    }
    const PolySeq input = parse_poly_file(read_text_file(o.input));
    const auto dir = o.direction == "convex" ? PropertyDirection::convex : PropertyDirection::concave;
    const PreservationReport rep = check_preservation(input, o.target.s, *o.target.n, dir);

    summarize(err << "input ", rep.input);
    if (rep.verdict == Verdict::inapplicable) {
        err << "transform not checked: the input lacks the property\n";
    } else {
        summarize(err << "output ", rep.output);
    }

    Json report = run_header("transform", args);
    report["inputs"] = {{"input", o.input},         {"polynomials", input.size()}, {"s", o.target.s},
                        {"n_max", *o.target.n},      {"direction", o.direction}};
    report["reports"] = Json::array({to_json(rep)});
    const int status = status_of({rep.verdict});
    emit(std::move(report), status, start, o.json_path, out);
    return status;
}

int cmd_form(const Options &o, std::ostream &out)
{
    if (!o.target.n) {
        throw ConfigError("--n is required");
    }
    const BilinearForm form = transform_minor_form(*o.target.n, o.m, o.target.s);
    write_output(o.out_path, format_bilinear_form(form), out);
    return exit_holds;
}

void add_target_options(CLI::App *cmd, TargetOptions &t, bool with_oeis)
{
    if (with_oeis) {
        cmd->add_option("--triangle", t.triangle_file, "Triangle file ('# arity=<a> n_max=<n>' header)");
        cmd->add_option("--oeis", t.oeis_id, "OEIS id of a flattened triangle, e.g. A027907");
        cmd->add_option("--arity", t.arity, "Row width step for --oeis targets");
        cmd->add_option("--cache-dir", t.cache_dir, "b-file cache directory (default $QTRI_CACHE_DIR)");
        cmd->add_flag("--offline", t.offline, "Never touch the network; fail on a cache miss");
    }
    cmd->add_option("--preset", t.preset_name, "Named triangle")
        ->check(CLI::IsMember(preset_names()));
    cmd->add_option("--params", t.params, "Constant parameters alpha,beta,gamma,e,f,g,h");
    cmd->add_option("--scheme", t.scheme_file, "JSON coefficient scheme file");
    cmd->add_option("--s", t.s, "s for the s_pascal preset")->check(CLI::PositiveNumber);
    cmd->add_option("--n", t.n, "Last row to generate");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact log-concavity, q-log-convexity and total-positivity checks for triangular arrays"};
    app.require_subcommand(1);
    Options o;

    auto *gen = app.add_subcommand("generate", "Write a triangle file");
    add_target_options(gen, o.target, false);
    gen->add_option("--out", o.out_path, "Output path (default: standard output)");
    gen->add_option("--json", o.json_path, "Also write the JSON report here");

    auto *check = app.add_subcommand("check", "Check properties of a triangle");
    add_target_options(check, o.target, true);
    check->add_option("checks", o.checks, "Checks to run")->check(CLI::IsMember(check_names));
    check->add_option("--r", o.r, "Minor order for the tp check")->check(CLI::PositiveNumber);
    check->add_option("--json", o.json_path, "Also write the JSON report here");

    auto *cond = app.add_subcommand("conditions", "Evaluate a sufficient-condition system");
    cond->add_option("theorem", o.theorem, "thm21 | cor22 | thm34")
        ->required()
        ->check(CLI::IsMember({"thm21", "cor22", "thm34"}));
    cond->add_option("--params", o.target.params, "alpha,beta,gamma,e,f,g,h (cor22, thm34)");
    cond->add_option("--consts", o.consts, "Constant gamma,e,f,g,h (thm21)");
    cond->add_option("--scheme", o.target.scheme_file, "Penta scheme file (thm21)");
    cond->add_option("--k-max", o.k_max, "Last k checked (thm21)");
    cond->add_option("--json", o.json_path, "Also write the JSON report here");

    auto *trans = app.add_subcommand("transform", "Check preservation under the bi^s-nomial transform");
    trans->add_option("--input", o.input, "Polynomial file, one polynomial per line")->required();
    trans->add_option("--s", o.target.s, "s of the transform")->check(CLI::PositiveNumber);
    trans->add_option("--n", o.target.n, "Last transformed index n_max");
    trans->add_option("--direction", o.direction, "convex | concave");
    trans->add_option("--json", o.json_path, "Also write the JSON report here");

    auto *form = app.add_subcommand("form", "Print the bilinear form of B_{n-1}B_{m+1} - B_n B_m");
    form->add_option("--n", o.target.n, "n >= 1")->required();
    form->add_option("--m", o.m, "m >= n")->required();
    form->add_option("--s", o.target.s, "s of the transform")->check(CLI::PositiveNumber);
    form->add_option("--out", o.out_path, "Output path (default: standard output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_holds : exit_usage;
    }

    try {
        if (gen->parsed()) {
            return cmd_generate(o, args, out, err);
        }
        if (check->parsed()) {
            return cmd_check(o, args, out, err);
        }
        if (cond->parsed()) {
            return cmd_conditions(o, args, out, err);
        }
        if (trans->parsed()) {
            return cmd_transform(o, args, out, err);
        }
        if (form->parsed()) {
            return cmd_form(o, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace qtri::cli
