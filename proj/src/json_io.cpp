#include "charvar/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

#include "json.hpp"

namespace charvar {

namespace {

using nlohmann::json;

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

json parse_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

std::vector<Vertex> vertex_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    std::vector<Vertex> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw ParseError(where + ": vertex names must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::vector<std::vector<Vertex>> simplex_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of simplices");
    std::vector<std::vector<Vertex>> out;
    for (const auto& s : j) out.push_back(vertex_list(s, where));
    return out;
}

SimplicialComplex complex_from(const json& j, const std::string& where) {
    if (j.is_array()) return SimplicialComplex::from_maximal(simplex_list(j, where));
    if (!j.is_object()) throw ParseError(where + ": expected an object or a simplex list");
    if (!j.contains("maximal_simplices"))
        throw ParseError(where + ": missing 'maximal_simplices'");
    auto maximal = simplex_list(j.at("maximal_simplices"), where + ".maximal_simplices");
    std::set<Vertex> covered;
    for (const auto& s : maximal)
        for (const auto& v : s) covered.insert(v);
    if (j.contains("vertices"))
        for (const auto& v : vertex_list(j.at("vertices"), where + ".vertices"))
            if (covered.insert(v).second) maximal.push_back({v});
    try {
        return SimplicialComplex::from_maximal(maximal);
    } catch (const Error& e) {
        throw ParseError(where + ": " + e.what());
    }
}

Simplex simplex_from(const json& j, const std::string& where) {
    return Simplex::of(vertex_list(j, where));
}

json simplex_json(const Simplex& s) {
    json out = json::array();
    for (const auto& v : s.verts) out.push_back(v);
    return out;
}

json complex_json(const SimplicialComplex& X) {
    json out;
    out["vertices"] = X.vertices();
    std::vector<Simplex> maximal = X.maximal_simplices();
    std::sort(maximal.begin(), maximal.end());
    json tops = json::array();
    for (const auto& s : maximal) tops.push_back(simplex_json(s));
    out["maximal_simplices"] = std::move(tops);
    return out;
}

/* Small values stay JSON numbers (matching the documented examples); values
 * a 64-bit integer cannot hold become decimal strings. */
json int_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

Int int_from(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError(where + ": '" + j.get<std::string>() + "' is not an integer");
        }
    }
    throw ParseError(where + ": expected an integer or a decimal string");
}

json group_json(const FgAbelianGroup& g) {
    json out;
    out["free_rank"] = g.free_rank;
    json factors = json::array();
    for (const auto& d : g.invariant_factors) factors.push_back(int_json(d));
    out["invariant_factors"] = std::move(factors);
    return out;
}

FgAbelianGroup group_from(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("free_rank") || !j.contains("invariant_factors"))
        throw ParseError(where + ": expected {free_rank, invariant_factors}");
    FgAbelianGroup g;
    g.free_rank = j.at("free_rank").get<int>();
    for (const auto& d : j.at("invariant_factors"))
        g.invariant_factors.push_back(int_from(d, where + ".invariant_factors"));
    return g;
}

json move_json(const CertMove& mv) {
    struct Visitor {
        json operator()(const RefineMove&) const { return json{{"kind", "refine"}}; }
        json operator()(const ConeTargetMove& m) const {
            return json{{"kind", "cone-target"},
                        {"center", m.center},
                        {"escape", simplex_json(m.escape)}};
        }
        json operator()(const DiskFactorizationMove& m) const {
            json seq = json::array();
            for (const auto& d : m.sequence) seq.push_back(simplex_json(d));
            return json{{"kind", "disk-factorization"}, {"bad_edge", simplex_json(m.bad_edge)},
                        {"s", m.s},                     {"t", m.t},
                        {"j", m.j},                     {"sequence", std::move(seq)},
                        {"waypoints", m.waypoints},     {"fresh", m.fresh}};
        }
        json operator()(const StarFillingMove& m) const {
            json disk = json::array();
            for (const auto& t : m.disk_triangles) disk.push_back(simplex_json(t));
            json images = json::object();
            for (const auto& [v, img] : m.new_images) images[v] = img;
            return json{{"kind", "star-filling"}, {"cleared", m.cleared},
                        {"link", m.link},         {"ring", m.ring},
                        {"disk_triangles", std::move(disk)}, {"new_images", std::move(images)}};
        }
    };
    return std::visit(Visitor{}, mv);
}

CertMove move_from(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError(where + ": every move needs a 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "refine") return RefineMove{};
        if (kind == "cone-target") {
            ConeTargetMove m;
            m.center = j.at("center").get<std::string>();
            m.escape = simplex_from(j.at("escape"), where + ".escape");
            return m;
        }
        if (kind == "disk-factorization") {
            DiskFactorizationMove m;
            m.bad_edge = simplex_from(j.at("bad_edge"), where + ".bad_edge");
            m.s = j.at("s").get<std::string>();
            m.t = j.at("t").get<std::string>();
            m.j = j.at("j").get<int>();
            for (const auto& d : j.at("sequence"))
                m.sequence.push_back(simplex_from(d, where + ".sequence"));
            m.waypoints = vertex_list(j.at("waypoints"), where + ".waypoints");
            m.fresh = vertex_list(j.at("fresh"), where + ".fresh");
            return m;
        }
        if (kind == "star-filling") {
            StarFillingMove m;
            m.cleared = j.at("cleared").get<std::string>();
            m.link = vertex_list(j.at("link"), where + ".link");
            m.ring = vertex_list(j.at("ring"), where + ".ring");
            for (const auto& t : j.at("disk_triangles"))
                m.disk_triangles.push_back(simplex_from(t, where + ".disk_triangles"));
            for (const auto& [v, img] : j.at("new_images").items()) {
                if (!img.is_string())
                    throw ParseError(where + ".new_images: images must be strings");
                m.new_images[v] = img.get<std::string>();
            }
            return m;
        }
    } catch (const json::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": unknown move kind '" + kind + "'");
}

json certificate_json(const PushoffCertificate& cert) {
    json moves = json::array();
    for (const auto& mv : cert.moves) moves.push_back(move_json(mv));
    return json{{"moves", std::move(moves)}};
}

PushoffCertificate certificate_from(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("moves"))
        throw ParseError(where + ": expected {\"moves\": [...]}");
    PushoffCertificate cert;
    int index = 0;
    for (const auto& mv : j.at("moves"))
        cert.moves.push_back(move_from(mv, where + ".moves[" + std::to_string(index++) + "]"));
    return cert;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

SimplicialComplex load_complex_file(const std::string& path) {
    return complex_from(read_file(path), path);
}

Subcomplex load_subcomplex_file(const std::string& path) {
    return complex_from(read_file(path), path);
}

SurfaceComplex load_surface_file(const std::string& path) {
    json j = read_file(path);
    SimplicialComplex complex = complex_from(j, path);
    std::vector<Simplex> pinned_cells;
    if (j.is_object() && j.contains("pinned"))
        for (const auto& s : simplex_list(j.at("pinned"), path + ".pinned"))
            pinned_cells.push_back(Simplex::of(s));
    const SimplicialComplex derived = surface_boundary(complex);
    for (const auto& s : derived.simplices()) pinned_cells.push_back(s);
    Subcomplex pinned =
        pinned_cells.empty() ? Subcomplex{} : Subcomplex::from_simplices(pinned_cells);
    try {
        return SurfaceComplex::make(std::move(complex), std::move(pinned));
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::map<Vertex, Vertex> load_map_file(const std::string& path) {
    json j = read_file(path);
    if (!j.is_object() || !j.contains("vertex_images"))
        throw ParseError(path + ": expected {\"vertex_images\": {...}}");
    std::map<Vertex, Vertex> out;
    for (const auto& [v, img] : j.at("vertex_images").items()) {
        if (!img.is_string()) throw ParseError(path + ": vertex images must be strings");
        out[v] = img.get<std::string>();
    }
    return out;
}

PushoffCertificate load_certificate_file(const std::string& path) {
    return certificate_from(read_file(path), path);
}

SimplicialMap load_pushed_map_file(const std::string& path) {
    json j = read_file(path);
    if (!j.is_object() || !j.contains("vertex_images") || !j.contains("surface") ||
        !j.contains("target"))
        throw ParseError(path + ": expected the full map schema {vertex_images, surface, target}");
    SimplicialComplex source = complex_from(j.at("surface"), path + ".surface");
    SimplicialComplex target = complex_from(j.at("target"), path + ".target");
    std::map<Vertex, Vertex> images;
    for (const auto& [v, img] : j.at("vertex_images").items()) {
        if (!img.is_string()) throw ParseError(path + ": vertex images must be strings");
        images[v] = img.get<std::string>();
    }
    try {
        return SimplicialMap::make(std::move(source), std::move(target), std::move(images));
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string complex_to_json(const SimplicialComplex& X) { return dump(complex_json(X)); }

std::string certificate_to_json(const PushoffCertificate& cert) {
    return dump(certificate_json(cert));
}

std::string pushed_map_to_json(const SimplicialMap& h) {
    json out;
    json images = json::object();
    for (const auto& [v, img] : h.vertex_images()) images[v] = img;
    out["vertex_images"] = std::move(images);
    out["surface"] = complex_json(h.source());
    out["target"] = complex_json(h.target());
    return dump(out);
}

std::string group_to_json(const FgAbelianGroup& g) { return group_json(g).dump() + "\n"; }

std::string homology_to_json(const std::vector<FgAbelianGroup>& H) {
    json out = json::array();
    for (const auto& g : H) out.push_back(group_json(g));
    return dump(out);
}

std::string polynomial_to_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (long k = 0; k <= std::max(p.degree(), 0L); ++k) coeffs.push_back(p.coeff(k).str());
    return json{{"coeffs", std::move(coeffs)}}.dump() + "\n";
}

std::string hypothesis_report_to_json(const HypothesisReport& report) {
    json out;
    out["density"] = report.density;
    json conn = json::array();
    for (const auto& c : report.local_connectivity) {
        json e;
        e["probe"] = simplex_json(c.probe);
        e["attributed_to"] = simplex_json(c.attributed_to);
        e["level"] = c.level;
        e["status"] = status_name(c.status);
        if (!c.note.empty()) e["note"] = c.note;
        conn.push_back(std::move(e));
    }
    out["local_connectivity"] =
        json{{"status", status_name(report.local_connectivity_status())}, {"checks", conn}};
    json stars = json::array();
    for (const auto& c : report.punctured_stars) {
        json e;
        e["probe"] = c.probe;
        e["attributed_to"] = simplex_json(c.attributed_to);
        e["status"] = status_name(c.status);
        e["h1"] = group_json(c.h1);
        e["loops_filled"] = c.loops_filled;
        e["loops_total"] = c.loops_total;
        if (!c.note.empty()) e["note"] = c.note;
        stars.push_back(std::move(e));
    }
    out["punctured_stars"] =
        json{{"status", status_name(report.punctured_star_status())}, {"checks", stars}};
    out["all_ok"] = report.all_ok();
    out["ok_for_low_dim"] = report.ok_for_low_dim();
    return dump(out);
}

SimplicialComplex parse_complex_json(const std::string& text) {
    return complex_from(parse_text(text, "complex"), "complex");
}

PushoffCertificate parse_certificate_json(const std::string& text) {
    return certificate_from(parse_text(text, "certificate"), "certificate");
}

FgAbelianGroup parse_group_json(const std::string& text) {
    return group_from(parse_text(text, "group"), "group");
}

IntPolynomial parse_polynomial_json(const std::string& text) {
    json j = parse_text(text, "polynomial");
    if (!j.is_object() || !j.contains("coeffs"))
        throw ParseError("polynomial: expected {\"coeffs\": [...]}");
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(int_from(c, "polynomial.coeffs"));
    return IntPolynomial(std::move(coeffs));
}

} // namespace charvar
