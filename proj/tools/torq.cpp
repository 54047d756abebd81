// torq: command-line front end for the exact toric geometry library.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "torq/io.hpp"

namespace {

using namespace torq;
using nlohmann::json;

struct Options {
    std::string format = "text";
    std::string out;
};

void emit(const std::string& s, const Options& opt) {
    if (opt.out.empty()) {
        std::cout << s;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw io::io_error("cannot open output file: " + opt.out);
    f << s;
}

std::string base_dir_of(const std::string& path) {
    auto p = std::filesystem::path(path).parent_path();
    return p.empty() ? std::string(".") : p.string();
}

json load_kind(const std::string& path, const std::string& kind) {
    json doc = io::load_json_file(path);
    if (io::document_kind(doc) != kind)
        throw error("expected a " + kind + " document: " + path);
    return doc;
}

std::string group_str(const AbelianGroupPresentation& g) {
    std::vector<std::string> parts;
    if (g.free_rank == 1) parts.push_back("Z");
    else if (g.free_rank > 1)
        parts.push_back("Z^" + std::to_string(g.free_rank));
    for (const Int& d : g.torsion) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

// report = list of (key, json value); text format prints "key: value"
std::string render_report(const std::vector<std::pair<std::string, json>>& kv,
                          const Options& opt) {
    if (opt.format == "json") {
        json o = json::object();
        for (const auto& [k, v] : kv) o[k] = v;
        return io::dump_canonical(o);
    }
    std::string s;
    for (const auto& [k, v] : kv) {
        s += k + ": ";
        if (v.is_string()) s += v.get<std::string>();
        else s += v.dump();
        s += "\n";
    }
    return s;
}

json monomials_json(const std::vector<Vec>& vs) {
    json a = json::array();
    for (const Vec& v : vs) a.push_back(io::vec_to_json(v));
    return a;
}

std::string monomials_text(const std::vector<Vec>& vs) {
    std::string s;
    for (const Vec& v : vs) s += vec_str(v) + "\n";
    return s;
}

// ---------------------------------------------------------------- validate

int cmd_validate(const std::string& path, const Options& opt) {
    json doc = io::load_json_file(path);
    std::string kind = io::document_kind(doc);
    std::vector<std::pair<std::string, json>> rep{{"kind", kind}};
    if (kind == "fan") {
        Fan f = io::fan_from_json(doc);
        rep.push_back({"rank", f.ambient_rank()});
        rep.push_back({"rays", f.num_rays()});
        rep.push_back({"cones", f.num_cones()});
        rep.push_back({"complete", is_complete(f)});
    } else if (kind == "divisor") {
        WeilDivisor d = io::divisor_from_json(doc, base_dir_of(path));
        rep.push_back({"rays", d.fan.num_rays()});
        rep.push_back({"cartier", is_cartier(d).has_value()});
        rep.push_back({"q_cartier", is_qcartier(d).has_value()});
        rep.push_back({"principal", is_principal(d).has_value()});
    } else if (kind == "triangle") {
        Triangle t = io::triangle_from_json(doc, base_dir_of(path));
        rep.push_back({"rank", t.base_fan.ambient_rank()});
        rep.push_back({"mhat_rank", t.mhat_rank});
        rep.push_back({"axioms", "ok"});
    } else if (kind == "presentation") {
        QuotientPresentation qp =
            io::presentation_from_json(doc, base_dir_of(path));
        PresentationReport pr = check_presentation(qp.fan_map);
        rep.push_back({"finite_cokernel", pr.finite_cokernel});
        rep.push_back({"face_fan", pr.face_fan.has_value()});
        rep.push_back({"max_cone_bijection", pr.max_bijective});
        rep.push_back({"ray_bijection", pr.ray_bijective});
        rep.push_back({"primitive_ray_images", pr.primitive_images});
        if (!pr.verdict()) {
            rep.push_back({"valid", false});
            emit(render_report(rep, opt), opt);
            return 2;
        }
    } else if (kind == "ideal") {
        MonomialIdeal i = io::ideal_from_json(doc);
        rep.push_back({"generators", i.generators.size()});
    }
    rep.push_back({"valid", true});
    emit(render_report(rep, opt), opt);
    return 0;
}

// ----------------------------------------------------------------- builders

int cmd_build(const std::string& path, const Options& opt) {
    Triangle t = io::triangle_from_json(load_kind(path, "triangle"),
                                        base_dir_of(path));
    emit(io::dump_canonical(io::presentation_to_json(build_presentation(t))), opt);
    return 0;
}

int cmd_triangle_builder(const std::string& which, const std::string& fan_path,
                         const std::string& div_path, const Options& opt) {
    Fan f = io::fan_from_json(load_kind(fan_path, "fan"));
    Triangle t = [&] {
        if (which == "cox") return cox_triangle(f);
        if (which == "canonical") return canonical_triangle(f);
        if (which == "kajiwara") return kajiwara_triangle(f);
        WeilDivisor d = io::divisor_from_json(load_kind(div_path, "divisor"),
                                              base_dir_of(div_path));
        if (!d.fan.same_fan(f))
            throw error("ample: divisor fan does not match the fan file");
        return ample_triangle(d);
    }();
    emit(io::dump_canonical(io::triangle_to_json(t)), opt);
    return 0;
}

// ----------------------------------------------------------------- classify

int cmd_classify(const std::string& path, const Options& opt) {
    QuotientPresentation qp =
        io::presentation_from_json(load_kind(path, "presentation"),
                                   base_dir_of(path));
    const Triangle& t = qp.triangle;
    Classification c = classify(t);
    WeightGroup w(t);
    ClassGroup cl(t.base_fan);
    std::vector<Vec> snake_cols;
    for (std::size_t i = 0; i < t.mhat_rank; ++i)
        snake_cols.push_back(cl.class_of(t.basis_divisor(i)));
    json snake = snake_cols.empty()
                     ? io::matrix_to_json(IntMatrix(0, 0))
                     : io::matrix_to_json(IntMatrix::from_cols(snake_cols));
    emit(render_report({{"good", c.good},
                        {"geometric", c.geometric},
                        {"principal", c.principal},
                        {"weight_group", group_str(w.group())},
                        {"class_group", group_str(cl.group())},
                        {"snake_matrix", snake}},
                       opt),
         opt);
    return 0;
}

// --------------------------------------------------- sections / irrelevant

int cmd_sections(const std::string& fan_path, const std::string& div_path,
                 const Options& opt) {
    Fan f = io::fan_from_json(load_kind(fan_path, "fan"));
    WeilDivisor d = io::divisor_from_json(load_kind(div_path, "divisor"),
                                          base_dir_of(div_path));
    if (!d.fan.same_fan(f))
        throw error("sections: divisor fan does not match the fan file");
    SectionSpace s = sections_basis(d);
    if (opt.format == "json") {
        emit(render_report({{"dimension", s.basis.size()},
                            {"monomials", monomials_json(s.basis)}},
                           opt),
             opt);
    } else {
        emit("dimension: " + std::to_string(s.basis.size()) + "\n" +
                 monomials_text(s.basis),
             opt);
    }
    return 0;
}

int cmd_irrelevant(const std::string& path, const Options& opt) {
    QuotientPresentation qp =
        io::presentation_from_json(load_kind(path, "presentation"),
                                   base_dir_of(path));
    GradedCoordinateRing r = section_monoid(qp);
    std::vector<Vec> gens = irrelevant_generators(r);
    if (opt.format == "json") {
        emit(render_report({{"hilbert_basis", monomials_json(r.hilbert_basis)},
                            {"irrelevant_generators", monomials_json(gens)},
                            {"weight_group", group_str(r.weights.group())}},
                           opt),
             opt);
    } else {
        emit("hilbert basis:\n" + monomials_text(r.hilbert_basis) +
                 "irrelevant generators:\n" + monomials_text(gens),
             opt);
    }
    return 0;
}

int cmd_vanishing(const std::string& pres_path, const std::string& ideal_path,
                  long bound, unsigned power, const Options& opt) {
    QuotientPresentation qp =
        io::presentation_from_json(load_kind(pres_path, "presentation"),
                                   base_dir_of(pres_path));
    GradedCoordinateRing r = section_monoid(qp);
    MonomialIdeal ideal = io::ideal_from_json(load_kind(ideal_path, "ideal"));
    bool zero = vanishing_test(r, ideal);
    std::vector<std::pair<std::string, json>> rep{{"zero_sheaf", zero}};
    if (bound > 0) {
        VanishingReport vr = vanishing_crosscheck(r, ideal, Int(bound), power);
        rep.push_back({"truncation_zero", vr.truncation_zero});
        rep.push_back({"crosscheck_agrees", vr.agree});
    }
    emit(render_report(rep, opt), opt);
    return 0;
}

// ------------------------------------------------------------------- render

std::string render_svg(const Fan& f) {
    // rank-1 fans are drawn on the horizontal axis
    if (f.ambient_rank() > 2) throw error("render supports rank-2 fans only");
    char buf[128];
    std::string s =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-220 -220 440 "
        "440\">\n"
        "<rect x=\"-220\" y=\"-220\" width=\"440\" height=\"440\" "
        "fill=\"white\"/>\n";
    auto pt = [](const Vec& v, double radius) {
        double x = v[0].convert_to<double>();
        double y = v.size() > 1 ? v[1].convert_to<double>() : 0.0;
        double n = std::sqrt(x * x + y * y);
        return std::pair<double, double>(radius * x / n, -radius * y / n);
    };
    for (std::size_t mi : f.max_cones()) {
        const Cone& c = f.cone(mi);
        if (c.dim() != 2) continue;
        std::vector<Vec> ext = extreme_rays(c);
        auto [x1, y1] = pt(ext[0], 200.0);
        auto [x2, y2] = pt(ext[1], 200.0);
        std::snprintf(buf, sizeof buf,
                      "<polygon points=\"0,0 %.2f,%.2f %.2f,%.2f\" "
                      "fill=\"#d8d8e8\"/>\n",
                      x1, y1, x2, y2);
        s += buf;
    }
    for (const Vec& r : f.rays()) {
        auto [x, y] = pt(r, 180.0);
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"0\" y1=\"0\" x2=\"%.2f\" y2=\"%.2f\" "
                      "stroke=\"black\" stroke-width=\"2\"/>\n",
                      x, y);
        s += buf;
        auto [lx, ly] = pt(r, 200.0);
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\" "
                      "text-anchor=\"middle\">%s</text>\n",
                      lx, ly, vec_str(r).c_str());
        s += buf;
    }
    s += "</svg>\n";
    return s;
}

int cmd_render(const std::string& fan_path, const Options& opt) {
    Fan f = io::fan_from_json(load_kind(fan_path, "fan"));
    emit(render_svg(f), opt);
    return 0;
}

// ----------------------------------------------------------------- selftest

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<int> coef(-2, 2), idx(0, int(n) - 1);
    for (int step = 0; step < 8; ++step) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        Int c(coef(rng));
        for (std::size_t k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
    }
    return u;
}

int cmd_selftest(const Options& opt) {
    unsigned long seed = 0;
    if (const char* e = std::getenv("TORQ_SEED")) seed = std::strtoul(e, nullptr, 10);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-10, 10), dimd(1, 4);
    std::size_t checks = 0;
    auto fail = [&](const std::string& what) {
        emit("selftest FAILED: " + what + "\n", opt);
        return 2;
    };

    for (int it = 0; it < 100; ++it) {
        std::size_t r = dimd(rng), c = dimd(rng);
        IntMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a.at(i, j) = entry(rng);
        SmithDecomposition s = smith_normal_form(a);
        if (s.left * a * s.right != s.diag) return fail("smith product identity");
        for (std::size_t i = 0; i + 1 < std::min(r, c); ++i)
            if (s.d(i + 1) != 0 && (s.d(i) == 0 || s.d(i + 1) % s.d(i) != 0))
                return fail("smith divisibility chain");
        // cokernel is invariant under unimodular row operations
        if (cokernel(a) != cokernel(random_unimodular(rng, r) * a))
            return fail("cokernel unimodular invariance");
        checks += 3;
    }

    std::uniform_int_distribution<int> sml(-4, 4);
    for (int it = 0; it < 60; ++it) {
        std::size_t n = dimd(rng) % 3 + 1;
        std::vector<Vec> gens(dimd(rng));
        for (Vec& g : gens) {
            g.resize(n);
            for (Int& x : g) x = sml(rng);
        }
        Cone c(n, gens);
        if (!same_cone(dual_cone(dual_cone(c)), c)) return fail("double dual");
        for (const Vec& g : c.generators())
            if (!contains(c, g)) return fail("generator containment");
        checks += 2;
    }

    // random change of homogeneous coordinates keeps presentations valid
    Vec e1{Int(1), Int(0)}, e2{Int(0), Int(1)}, e3{Int(-1), Int(-1)};
    Fan p2 = new_fan(2, {Cone(2, {e1, e2}), Cone(2, {e2, e3}), Cone(2, {e3, e1})});
    Triangle base = cox_triangle(p2);
    for (int it = 0; it < 10; ++it) {
        IntMatrix u = random_unimodular(rng, base.mhat_rank);
        Triangle t = new_triangle(p2, u * base.phi1,
                                  base.phi2 * inverse_unimodular(u));
        QuotientPresentation qp = build_presentation(t);
        if (!check_presentation(qp.fan_map).verdict())
            return fail("presentation rebuild");
        if (cokernel(t.phi1) != cokernel(base.phi1))
            return fail("weight group invariance");
        checks += 2;
    }

    emit("selftest: " + std::to_string(checks) + " checks passed (seed " +
             std::to_string(seed) + ")\n",
         opt);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for toric varieties: fans, quotient "
                 "presentations, homogeneous coordinates"};
    app.require_subcommand(1);

    Options opt;
    std::string path1, path2;
    long bound = 0;
    unsigned power = 6;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("-o,--output", opt.out, "write output to a file");
        return sub;
    };

    auto* validate = common(app.add_subcommand("validate", "validate a document"));
    validate->add_option("path", path1)->required();
    auto* build = common(app.add_subcommand("build", "presentation from a triangle"));
    build->add_option("path", path1)->required();
    auto* cox = common(app.add_subcommand("cox", "Cox triangle of a fan"));
    cox->add_option("fan", path1)->required();
    auto* canonical =
        common(app.add_subcommand("canonical", "canonical triangle of a fan"));
    canonical->add_option("fan", path1)->required();
    auto* kajiwara = common(
        app.add_subcommand("kajiwara", "Cartier-divisor triangle of a fan"));
    kajiwara->add_option("fan", path1)->required();
    auto* ample =
        common(app.add_subcommand("ample", "triangle of an ample divisor"));
    ample->add_option("fan", path1)->required();
    ample->add_option("divisor", path2)->required();
    auto* classify_cmd =
        common(app.add_subcommand("classify", "classify a presentation"));
    classify_cmd->add_option("path", path1)->required();
    auto* sections =
        common(app.add_subcommand("sections", "monomial sections of a divisor"));
    sections->add_option("fan", path1)->required();
    sections->add_option("divisor", path2)->required();
    auto* irrelevant = common(
        app.add_subcommand("irrelevant", "coordinate ring and irrelevant ideal"));
    irrelevant->add_option("path", path1)->required();
    auto* vanishing =
        common(app.add_subcommand("vanishing", "zero-sheaf test for S/I"));
    vanishing->add_option("presentation", path1)->required();
    vanishing->add_option("ideal", path2)->required();
    vanishing->add_option("--bound", bound,
                          "also run the bounded annihilation crosscheck");
    vanishing->add_option("--power", power, "power bound for the crosscheck");
    auto* render = common(app.add_subcommand("render", "SVG of a rank-2 fan"));
    render->add_option("fan", path1)->required();
    auto* selftest =
        common(app.add_subcommand("selftest", "randomized internal checks"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (validate->parsed()) return cmd_validate(path1, opt);
        if (build->parsed()) return cmd_build(path1, opt);
        if (cox->parsed()) return cmd_triangle_builder("cox", path1, "", opt);
        if (canonical->parsed())
            return cmd_triangle_builder("canonical", path1, "", opt);
        if (kajiwara->parsed())
            return cmd_triangle_builder("kajiwara", path1, "", opt);
        if (ample->parsed())
            return cmd_triangle_builder("ample", path1, path2, opt);
        if (classify_cmd->parsed()) return cmd_classify(path1, opt);
        if (sections->parsed()) return cmd_sections(path1, path2, opt);
        if (irrelevant->parsed()) return cmd_irrelevant(path1, opt);
        if (vanishing->parsed())
            return cmd_vanishing(path1, path2, bound, power, opt);
        if (render->parsed()) return cmd_render(path1, opt);
        if (selftest->parsed()) return cmd_selftest(opt);
    } catch (const torq::io::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const torq::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
