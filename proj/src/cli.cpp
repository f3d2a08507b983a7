#include "frieze/cli.hpp"

#include "frieze/gallery.hpp"
#include "frieze/json_io.hpp"
#include "frieze/pattern.hpp"
#include "frieze/scalar_text.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace frieze::cli {

namespace {

std::pair<int, int> parse_row_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw InputError("row range must look like \"1..8\": " + text);
    try {
        int first = std::stoi(text.substr(0, dots));
        int last = std::stoi(text.substr(dots + 2));
        if (first > last) throw InputError("row range is empty: " + text);
        return {first, last};
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("malformed row range: " + text);
    }
}

Diagonal parse_diagonal_arg(std::string text) {
    if (text.rfind("d=", 0) == 0) text = text.substr(2);
    auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError("diagonal must look like \"a,b\": " + text);
    try {
        return Diagonal(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("malformed diagonal: " + text);
    }
}

std::vector<int> parse_cell_sizes(const std::string& text) {
    std::vector<int> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            sizes.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InputError("malformed cell size list: " + text);
        }
    }
    if (sizes.empty()) throw InputError("cell size list is empty");
    return sizes;
}

/// Cuts cells of the requested sizes off the polygon, left to right.
Dissection path_dissection(int n, const std::vector<int>& sizes) {
    std::vector<int> remaining(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) remaining[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Diagonal> diags;
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
        const int d = sizes[i];
        const int m = static_cast<int>(remaining.size());
        if (d < 3 || d > m - 1)
            throw SizeMismatch("cell sizes cannot be realized in this order");
        diags.emplace_back(remaining.front(), remaining[static_cast<std::size_t>(d - 1)]);
        std::vector<int> next(remaining.begin() + (d - 1), remaining.end());
        next.push_back(remaining.front());
        remaining = std::move(next);
    }
    return Dissection(n, std::move(diags));
}

int print_ptolemy_report(const CheckReport& r, std::ostream& out) {
    out << "checked " << r.relations_checked << " relations\n";
    for (const auto& v : r.violations)
        out << "violation " << v.d1.str() << "x" << v.d2.str() << ": lhs = " << format_scalar(v.lhs)
            << ", rhs = " << format_scalar(v.rhs) << '\n';
    if (r.pass()) {
        out << "PASS\n";
        return 0;
    }
    out << "FAIL (" << r.violations.size() << " violations)\n";
    return 1;
}

int print_diamond_report(const DiamondReport& r, std::ostream& out) {
    out << "checked " << r.relations_checked << " relations\n";
    for (const auto& v : r.violations)
        out << "violation (" << v.i << "," << v.j << "): lhs = " << format_scalar(v.lhs)
            << ", rhs = " << format_scalar(v.rhs) << '\n';
    if (r.pass()) {
        out << "PASS\n";
        return 0;
    }
    out << "FAIL (" << r.violations.size() << " violations)\n";
    return 1;
}

void emit_json(const nlohmann::json& j, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << j.dump(2) << '\n';
    else
        save_json(j, out_path);
}

Triangulation fan_triangulation(int n) {
    std::vector<Diagonal> diags;
    for (int k = 3; k <= n - 1; ++k) diags.emplace_back(1, k);
    return Triangulation(Dissection(n, std::move(diags)));
}

std::string dissection_str(const Dissection& d) {
    std::string s;
    for (const Diagonal& g : d) {
        if (!s.empty()) s += ' ';
        s += g.str();
    }
    return s.empty() ? "(empty)" : s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for weak friezes on dissected polygons"};
    app.name("friezetool");
    app.require_subcommand(1);

    std::string in_path, out_path;
    std::string factor_arg, rows_arg = "1..8", cells_arg;
    bool mode_weak = false, mode_full = false, mode_diamond = false, mode_overlap = false;
    bool fan = false, triangulation_mode = false;
    int gallery_n = 0;
    std::uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "verify Ptolemy or diamond-rule relations");
    check->add_option("--in", in_path, "input file (frieze for --weak/--full, matrix otherwise)")
        ->required();
    check->add_flag("--weak", mode_weak, "relations required by the dissection");
    check->add_flag("--full", mode_full, "all crossing pairs");
    check->add_flag("--diamond", mode_diamond, "generalized diamond rule on a matrix");
    check->add_flag("--overlap", mode_overlap, "overlap identities on a matrix");

    auto* glue_cmd = app.add_subcommand("glue", "glue piecewise weak friezes along a dissection");
    glue_cmd->add_option("--in", in_path, "polygon spec file")->required();
    glue_cmd->add_option("--out", out_path, "output frieze file (stdout JSON when absent)");

    auto* det_cmd = app.add_subcommand("det", "exact determinant of the weak frieze matrix");
    det_cmd->add_option("--in", in_path, "frieze file")->required();
    det_cmd->add_option("--factor", factor_arg,
                        "gluing diagonal a,b: report the determinant factorization");

    auto* render_cmd = app.add_subcommand("render", "print the frieze pattern rows");
    render_cmd->add_option("--in", in_path, "frieze file")->required();
    render_cmd->add_option("--rows", rows_arg, "row range, e.g. 1..8");

    auto* matrix_cmd = app.add_subcommand("matrix", "emit the weak frieze matrix");
    matrix_cmd->add_option("--in", in_path, "frieze file")->required();
    matrix_cmd->add_option("--out", out_path, "output matrix file (stdout JSON when absent)");

    auto* gallery = app.add_subcommand("gallery", "classical families and random instances");
    gallery->require_subcommand(1);

    auto* g_bhj = gallery->add_subcommand("bhj", "constant-1 glued frieze for given cell sizes");
    g_bhj->add_option("--n", gallery_n, "polygon size")->required();
    g_bhj->add_option("--cells", cells_arg, "cell sizes, e.g. 4,4,4")->required();
    g_bhj->add_option("--out", out_path, "write the frieze file");

    auto* g_cc = gallery->add_subcommand("cc", "Conway-Coxeter frieze of a random triangulation");
    g_cc->add_option("--n", gallery_n, "polygon size")->required();
    g_cc->add_option("--seed", seed, "triangulation seed");
    g_cc->add_option("--out", out_path, "write the frieze file");

    auto* g_bm = gallery->add_subcommand("bm", "symbolic cluster-variable frieze");
    g_bm->add_option("--n", gallery_n, "polygon size")->required();
    g_bm->add_option("--seed", seed, "triangulation seed");
    g_bm->add_flag("--fan", fan, "use the fan triangulation at vertex 1");
    g_bm->add_option("--out", out_path, "write the frieze file");

    auto* g_mal = gallery->add_subcommand("maldonado", "diamond-rule matrix from an evaluated frieze");
    g_mal->add_option("--n", gallery_n, "polygon size")->required();
    g_mal->add_option("--seed", seed, "triangulation and evaluation seed");
    g_mal->add_option("--out", out_path, "write the matrix file");

    auto* g_rand = gallery->add_subcommand("random", "random dissection with random piece values");
    g_rand->add_option("--n", gallery_n, "polygon size")->required();
    g_rand->add_option("--seed", seed, "generation seed");
    g_rand->add_flag("--triangulation", triangulation_mode, "force a triangulation");
    g_rand->add_option("--out", out_path, "write the frieze file");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check)) {
            int modes = int(mode_weak) + int(mode_full) + int(mode_diamond) + int(mode_overlap);
            if (modes != 1)
                throw InputError("pick exactly one of --weak, --full, --diamond, --overlap");
            nlohmann::json j = load_json(in_path);
            if (mode_weak) return print_ptolemy_report(check_weak_frieze(frieze_from_json(j)), out);
            if (mode_full) return print_ptolemy_report(check_frieze(frieze_from_json(j)), out);
            MaldonadoMatrix m(matrix_from_json(j));
            if (mode_diamond) return print_diamond_report(maldonado_check(m), out);
            return print_diamond_report(overlap_identity_check(m), out);
        }

        if (app.got_subcommand(glue_cmd)) {
            PolygonSpec spec = polygon_spec_from_json(load_json(in_path));
            WeakFrieze f = glue(spec.n, spec.gluing, spec.pieces);
            if (out_path.empty()) {
                emit_json(frieze_to_json(f), out_path, out);
            } else {
                save_json(frieze_to_json(f), out_path);
                out << "glued weak frieze on " << f.size() << " vertices (dissection size "
                    << f.dissection().size() << ")\n";
                out << "wrote " << out_path << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(det_cmd)) {
            WeakFrieze f = frieze_from_json(load_json(in_path));
            if (factor_arg.empty()) {
                out << format_scalar(det_bareiss(frieze_matrix(f))) << '\n';
                return 0;
            }
            Diagonal d = parse_diagonal_arg(factor_arg);
            GlueDetCheck gc = glue_det_check(f, d);
            out << "det(M_f) = " << format_scalar(gc.lhs) << '\n';
            out << "f(" << d.str() << ") = " << format_scalar(f.value(d)) << '\n';
            out << "det(M_P) = " << format_scalar(gc.det_p) << '\n';
            out << "det(M_Q) = " << format_scalar(gc.det_q) << '\n';
            out << "rhs = -f(d)^-2 * det(M_P) * det(M_Q) = " << format_scalar(gc.rhs) << '\n';
            out << (gc.pass ? "PASS" : "FAIL") << '\n';
            return gc.pass ? 0 : 1;
        }

        if (app.got_subcommand(render_cmd)) {
            WeakFrieze f = frieze_from_json(load_json(in_path));
            auto [first, last] = parse_row_range(rows_arg);
            out << render_text(render_pattern(f, first, last));
            return 0;
        }

        if (app.got_subcommand(matrix_cmd)) {
            WeakFrieze f = frieze_from_json(load_json(in_path));
            emit_json(matrix_to_json(frieze_matrix(f)), out_path, out);
            return 0;
        }

        if (app.got_subcommand(gallery)) {
            if (gallery->got_subcommand(g_bhj)) {
                std::vector<int> sizes = parse_cell_sizes(cells_arg);
                Scalar formula = bhj_det_formula(gallery_n, sizes); // validates the sizes
                Dissection d = path_dissection(gallery_n, sizes);
                WeakFrieze f = dissection_frieze(gallery_n, d);
                Scalar det = det_bareiss(frieze_matrix(f));
                out << "dissection: " << dissection_str(d) << '\n';
                out << "det(M_f) = " << format_scalar(det) << '\n';
                out << "formula = " << format_scalar(formula) << '\n';
                bool pass = det == formula;
                out << (pass ? "PASS" : "FAIL") << '\n';
                if (!out_path.empty()) save_json(frieze_to_json(f), out_path);
                return pass ? 0 : 1;
            }
            if (gallery->got_subcommand(g_cc)) {
                Dissection d = random_dissection(gallery_n, seed, RandomMode::triangulation);
                WeakFrieze f = dissection_frieze(gallery_n, d);
                Scalar det = det_bareiss(frieze_matrix(f));
                Scalar formula(-(Rational(-2).pow(static_cast<unsigned long>(gallery_n - 2))));
                out << "triangulation: " << dissection_str(d) << '\n';
                out << "det(M_f) = " << format_scalar(det) << '\n';
                out << "formula = " << format_scalar(formula) << '\n';
                bool pass = det == formula;
                out << (pass ? "PASS" : "FAIL") << '\n';
                if (!out_path.empty()) save_json(frieze_to_json(f), out_path);
                return pass ? 0 : 1;
            }
            if (gallery->got_subcommand(g_bm)) {
                Triangulation t = fan ? fan_triangulation(gallery_n)
                                      : Triangulation(random_dissection(gallery_n, seed,
                                                                        RandomMode::triangulation));
                WeakFrieze f = baur_marsh_frieze(t);
                Scalar det = det_bareiss(frieze_matrix(f));
                Scalar formula = bm_det_formula(f);
                out << "triangulation: " << dissection_str(t.dissection()) << '\n';
                out << "det(M_f) = " << format_scalar(det) << '\n';
                out << "formula = " << format_scalar(formula) << '\n';
                bool pass = det == formula;
                out << (pass ? "PASS" : "FAIL") << '\n';
                if (!out_path.empty()) save_json(frieze_to_json(f), out_path);
                return pass ? 0 : 1;
            }
            if (gallery->got_subcommand(g_mal)) {
                Triangulation t(random_dissection(gallery_n, seed, RandomMode::triangulation));
                WeakFrieze sym = baur_marsh_frieze(t);
                std::set<std::string> var_set;
                for (const auto& [dg, v] : sym.values()) {
                    auto vs = v.variables();
                    var_set.insert(vs.begin(), vs.end());
                }
                Rng rng(seed ^ 0xa5a5a5a5a5a5a5a5ull);
                auto point = random_rational_point({var_set.begin(), var_set.end()}, rng, true);
                WeakFrieze f = evaluate_frieze(sym, point);
                MaldonadoMatrix m(frieze_matrix(f));
                DiamondReport diamond = maldonado_check(m);
                DiamondReport overlap = overlap_identity_check(m);
                Scalar det = det_bareiss(m.matrix());
                Scalar formula = maldonado_det_formula(m);
                out << "triangulation: " << dissection_str(t.dissection()) << '\n';
                out << "diamond rule: " << (diamond.pass() ? "PASS" : "FAIL") << '\n';
                out << "overlap identities: " << (overlap.pass() ? "PASS" : "FAIL") << '\n';
                out << "det(C) = " << format_scalar(det) << '\n';
                out << "formula = " << format_scalar(formula) << '\n';
                bool pass = diamond.pass() && overlap.pass() && det == formula;
                out << (pass ? "PASS" : "FAIL") << '\n';
                if (!out_path.empty()) save_json(matrix_to_json(m.matrix()), out_path);
                return pass ? 0 : 1;
            }
            if (gallery->got_subcommand(g_rand)) {
                Dissection d = random_dissection(
                    gallery_n, seed, triangulation_mode ? RandomMode::triangulation : RandomMode::any);
                RandomFrieze rf = random_weak_frieze(gallery_n, d, seed);
                out << "dissection: " << dissection_str(d) << '\n';
                bool pass = true;
                for (const Diagonal& g : d) {
                    GlueDetCheck gc = glue_det_check(rf.frieze, g);
                    pass = pass && gc.pass;
                    out << "factor " << g.str() << ": det(M_f) = " << format_scalar(gc.lhs)
                        << ", rhs = " << format_scalar(gc.rhs) << ", "
                        << (gc.pass ? "PASS" : "FAIL") << '\n';
                }
                out << (pass ? "PASS" : "FAIL") << '\n';
                if (!out_path.empty()) save_json(frieze_to_json(rf.frieze), out_path);
                return pass ? 0 : 1;
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace frieze::cli
