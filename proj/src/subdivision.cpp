#include "charvar/subdivision.hpp"

#include <algorithm>

namespace charvar {

Vertex barycenter_name(const Simplex& s) { return "(" + s.to_string() + ")"; }
Vertex center_name(const Simplex& s) { return "c(" + s.to_string() + ")"; }
Vertex midpoint_name(const Simplex& e) { return "m(" + e.to_string() + ")"; }

Simplex SubdivisionRecord::carrier_of(const Simplex& refined_simplex) const {
    Simplex carrier;
    for (const auto& v : refined_simplex.verts) {
        auto it = vertex_carrier.find(v);
        if (it == vertex_carrier.end())
            throw NotFoundError("carrier_of: unknown refined vertex '" + v + "'");
        carrier = carrier.unite(it->second);
    }
    if (!original.contains(carrier))
        throw InternalError("carrier_of: vertex carriers do not span an original simplex");
    return carrier;
}

Subcomplex SubdivisionRecord::transport(const Subcomplex& Y) const {
    require_subcomplex(original, Y, "transport");
    std::vector<Simplex> keep;
    for (const auto& s : refined.simplices())
        if (Y.contains(carrier_of(s))) keep.push_back(s);
    return keep.empty() ? Subcomplex{} : Subcomplex::from_simplices(keep);
}

SubdivisionRecord barycentric_subdivision(const SimplicialComplex& X) {
    SubdivisionRecord rec;
    rec.original = X;
    std::vector<Simplex> flags;
    for (const auto& top : X.maximal_simplices()) {
        std::vector<Vertex> order = top.verts;
        std::sort(order.begin(), order.end());
        do {
            std::vector<Vertex> flag_names;
            std::vector<Vertex> prefix;
            for (const auto& v : order) {
                prefix.push_back(v);
                flag_names.push_back(barycenter_name(Simplex::span(prefix)));
            }
            flags.push_back(Simplex::of(std::move(flag_names)));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    rec.refined = flags.empty() ? SimplicialComplex{} : SimplicialComplex::from_simplices(flags);
    for (const auto& s : X.simplices()) {
        Vertex name = barycenter_name(s);
        if (X.has_vertex(name))
            throw ValidationError("barycentric_subdivision: name collision with vertex '" + name + "'");
        rec.vertex_carrier[name] = s;
        rec.new_vertex_role[name] = VertexRole{VertexRole::Barycenter, s, {}};
    }
    return rec;
}

namespace {

void check_fresh(const SimplicialComplex& X, const Vertex& name) {
    if (X.has_vertex(name))
        throw ValidationError("subdivision: generated name '" + name + "' collides with an existing vertex");
}

FCentricResult refine_against_map(const SimplicialMap& f) {
    FCentricResult out;
    const SimplicialComplex& S = f.source();
    out.surface.original = S;
    out.target = barycentric_subdivision(f.target());

    std::vector<Simplex> pieces;
    std::map<Vertex, Vertex> images;

    for (const auto& s : S.simplices()) {
        if (s.dim() == 0) {
            const Vertex& v = s.verts[0];
            pieces.push_back(s);
            out.surface.vertex_carrier[v] = s;
            images[v] = barycenter_name(f.image(s));
        } else if (s.dim() == 1) {
            Vertex m = midpoint_name(s);
            check_fresh(S, m);
            pieces.push_back(Simplex::of({s.verts[0], m}));
            pieces.push_back(Simplex::of({m, s.verts[1]}));
            out.surface.vertex_carrier[m] = s;
            out.surface.new_vertex_role[m] = VertexRole{VertexRole::Barycenter, s, {}};
            images[m] = barycenter_name(f.image(s));
        } else if (s.dim() == 2) {
            Vertex c = center_name(s);
            check_fresh(S, c);
            out.surface.vertex_carrier[c] = s;
            Simplex img = f.image(s);
            VertexRole role;
            role.carrier = s;
            if (img.dim() == 1) {
                /* The interior point must hit the midpoint of the image edge:
                 * the two vertices sharing an image endpoint get weight 1/4,
                 * the remaining vertex gets 1/2. */
                role.kind = VertexRole::ChosenPoint;
                std::map<Vertex, std::vector<Vertex>> classes;
                for (const auto& v : s.verts) classes[f(v)].push_back(v);
                for (const auto& [w, vs] : classes) {
                    (void)w;
                    Rational weight = vs.size() == 2 ? Rational(1, 4) : Rational(1, 2);
                    for (const auto& v : vs) role.coords[v] = weight;
                }
            } else {
                role.kind = VertexRole::Barycenter;
            }
            out.surface.new_vertex_role[c] = role;
            images[c] = barycenter_name(img);
            for (const auto& e : s.faces()) {
                if (e.dim() != 1) continue;
                Vertex m = midpoint_name(e);
                for (const auto& v : e.verts) pieces.push_back(Simplex::of({v, m, c}));
            }
        }
    }
    out.surface.refined =
        pieces.empty() ? SimplicialComplex{} : SimplicialComplex::from_simplices(pieces);
    out.refined_map = SimplicialMap::make(out.surface.refined, out.target.refined, std::move(images));
    return out;
}

} // namespace

FCentricResult f_centric_subdivision(const SimplicialMap& f) {
    if (f.source().dim() != 2)
        throw ValidationError("f_centric_subdivision: source is not 2-dimensional");
    return refine_against_map(f);
}

FCentricResult low_dim_refinement(const SimplicialMap& f) {
    if (f.source().dim() > 1)
        throw ValidationError("low_dim_refinement: source has dimension > 1");
    return refine_against_map(f);
}

} // namespace charvar
