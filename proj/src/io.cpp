#include "torq/io.hpp"

#include <filesystem>
#include <fstream>

namespace torq::io {

namespace {

const Int kDoubleExact = (Int(1) << 53) - 1;

json require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw error(std::string("missing field \"") + key + "\"");
    return *it;
}

// A fan given inline or by relative path.
Fan fan_field(const json& j, const std::string& base_dir) {
    json f = require(j, "fan");
    if (f.is_string()) {
        std::filesystem::path p(f.get<std::string>());
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        json doc = load_json_file(p.string());
        if (document_kind(doc) != "fan")
            throw error("referenced file is not a fan document: " + p.string());
        return fan_from_json(doc);
    }
    return fan_from_json(f);
}

} // namespace

json int_to_json(const Int& v) {
    if (v <= kDoubleExact && v >= -kDoubleExact)
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw error("not an integer string: " + j.get<std::string>());
        }
    }
    throw error("expected an integer (number or decimal string)");
}

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

Vec vec_from_json(const json& j) {
    if (!j.is_array()) throw error("expected an array of integers");
    Vec v;
    for (const json& x : j) v.push_back(int_from_json(x));
    return v;
}

json matrix_to_json(const IntMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(vec_to_json(m.row(i)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrix_from_json(const json& j) {
    std::size_t rows = require(j, "rows").get<std::size_t>();
    std::size_t cols = require(j, "cols").get<std::size_t>();
    json entries = require(j, "entries");
    if (!entries.is_array() || entries.size() != rows)
        throw error("matrix entries do not match the declared row count");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vec r = vec_from_json(entries[i]);
        if (r.size() != cols)
            throw error("matrix entries do not match the declared column count");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = r[k];
    }
    return m;
}

json fan_to_json(const Fan& f) {
    json rays = json::array();
    for (const Vec& r : f.rays()) rays.push_back(vec_to_json(r));
    json maxc = json::array();
    for (std::size_t mi : f.max_cones()) maxc.push_back(f.cone_rays(mi));
    return json{{"kind", "fan"},
                {"rank", f.ambient_rank()},
                {"rays", rays},
                {"max_cones", maxc}};
}

Fan fan_from_json(const json& j) {
    std::size_t rank = require(j, "rank").get<std::size_t>();
    std::vector<Vec> rays;
    for (const json& r : require(j, "rays")) {
        Vec v = vec_from_json(r);
        if (v.size() != rank) throw error("ray length does not match the rank");
        rays.push_back(std::move(v));
    }
    std::vector<Cone> cones;
    for (const json& c : require(j, "max_cones")) {
        std::vector<Vec> gens;
        for (const json& ix : c) {
            std::size_t i = ix.get<std::size_t>();
            if (i >= rays.size()) throw error("max_cones: ray index out of range");
            gens.push_back(rays[i]);
        }
        cones.emplace_back(rank, std::move(gens));
    }
    if (cones.empty()) cones.push_back(Cone::zero(rank));
    Fan f = new_fan(rank, cones);
    // every listed ray must actually occur
    if (f.num_rays() != rays.size())
        throw error("fan document lists rays not generating any cone");
    return f;
}

json divisor_to_json(const WeilDivisor& d) {
    return json{{"kind", "divisor"},
                {"fan", fan_to_json(d.fan)},
                {"coeffs", vec_to_json(d.coeffs)}};
}

WeilDivisor divisor_from_json(const json& j, const std::string& base_dir) {
    Fan f = fan_field(j, base_dir);
    return WeilDivisor(std::move(f), vec_from_json(require(j, "coeffs")));
}

json triangle_to_json(const Triangle& t) {
    return json{{"kind", "triangle"},
                {"fan", fan_to_json(t.base_fan)},
                {"phi1", matrix_to_json(t.phi1)},
                {"phi2", matrix_to_json(t.phi2)}};
}

Triangle triangle_from_json(const json& j, const std::string& base_dir) {
    Fan f = fan_field(j, base_dir);
    return new_triangle(f, matrix_from_json(require(j, "phi1")),
                        matrix_from_json(require(j, "phi2")));
}

json ideal_to_json(const MonomialIdeal& i) {
    json gens = json::array();
    for (const Vec& g : i.generators) gens.push_back(vec_to_json(g));
    return json{{"kind", "ideal"}, {"generators", gens}};
}

MonomialIdeal ideal_from_json(const json& j) {
    MonomialIdeal i;
    for (const json& g : require(j, "generators"))
        i.generators.push_back(vec_from_json(g));
    return i;
}

json presentation_to_json(const QuotientPresentation& qp) {
    json sigma = json::array();
    for (const Vec& g : qp.sigma_bar.generators()) sigma.push_back(vec_to_json(g));
    const Fan& src = qp.fan_map.source();
    json cones = json::array();
    for (std::size_t i = 0; i < src.num_cones(); ++i)
        cones.push_back(src.cone_rays(i));
    return json{{"kind", "presentation"},
                {"triangle", triangle_to_json(qp.triangle)},
                {"fan_hat", fan_to_json(src)},
                {"cones_hat", cones},
                {"q", matrix_to_json(qp.fan_map.matrix())},
                {"ray_bijection", qp.ray_bijection},
                {"sigma_bar", sigma}};
}

QuotientPresentation presentation_from_json(const json& j,
                                            const std::string& base_dir) {
    Triangle t = triangle_from_json(require(j, "triangle"), base_dir);
    QuotientPresentation qp = build_presentation(t);
    // stored combinatorics, if present, must match the rebuild
    if (j.contains("fan_hat")) {
        Fan stored = fan_from_json(j["fan_hat"]);
        if (!stored.same_fan(qp.fan_map.source()))
            throw error("presentation document disagrees with its own triangle");
    }
    return qp;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw io_error("JSON parse error in " + path + ": " + e.what());
    }
}

std::string document_kind(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw error("document has no \"kind\" field");
    std::string k = j["kind"].get<std::string>();
    if (k != "fan" && k != "divisor" && k != "triangle" && k != "presentation" &&
        k != "ideal")
        throw error("unknown document kind: " + k);
    return k;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

} // namespace torq::io
