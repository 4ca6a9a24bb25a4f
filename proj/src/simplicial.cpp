#include "charvar/simplicial.hpp"

#include <algorithm>
#include <sstream>

namespace charvar {

Simplex Simplex::of(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw ValidationError("duplicate vertex in simplex [" + Simplex{vs}.to_string() + "]");
    return Simplex{std::move(vs)};
}

Simplex Simplex::span(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return Simplex{std::move(vs)};
}

bool Simplex::has_vertex(const Vertex& v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
}

bool Simplex::contains(const Simplex& other) const {
    return std::includes(verts.begin(), verts.end(), other.verts.begin(), other.verts.end());
}

Simplex Simplex::intersect(const Simplex& other) const {
    std::vector<Vertex> out;
    std::set_intersection(verts.begin(), verts.end(), other.verts.begin(), other.verts.end(),
                          std::back_inserter(out));
    return Simplex{std::move(out)};
}

Simplex Simplex::unite(const Simplex& other) const {
    std::vector<Vertex> out;
    std::set_union(verts.begin(), verts.end(), other.verts.begin(), other.verts.end(),
                   std::back_inserter(out));
    return Simplex{std::move(out)};
}

std::vector<Simplex> Simplex::faces() const {
    std::vector<Simplex> out;
    const std::size_t n = verts.size();
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Vertex> face;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) face.push_back(verts[i]);
        out.push_back(Simplex{std::move(face)});
    }
    return out;
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) os << ".";
        os << verts[i];
    }
    return os.str();
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<std::vector<Vertex>>& maximal) {
    std::vector<Simplex> ss;
    ss.reserve(maximal.size());
    for (const auto& vs : maximal) ss.push_back(Simplex::of(vs));
    return from_simplices(ss);
}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices) {
    SimplicialComplex c;
    for (const auto& s : simplices) {
        if (s.empty()) throw ValidationError("empty simplex");
        if (s.dim() <= 12) {
            for (auto& f : s.faces()) c.simplices_.insert(std::move(f));
        } else {
            throw ValidationError("simplex dimension too large");
        }
    }
    c.finish();
    return c;
}

void SimplicialComplex::finish() {
    dim_ = -1;
    maximal_.clear();
    std::set<Vertex> verts;
    for (const auto& s : simplices_) {
        dim_ = std::max(dim_, s.dim());
        for (const auto& v : s.verts) verts.insert(v);
    }
    // A simplex is maximal iff no single-vertex extension is present.
    for (const auto& s : simplices_) {
        bool extendable = false;
        for (const auto& v : verts) {
            if (s.has_vertex(v)) continue;
            Simplex ext = s.unite(Simplex{{v}});
            if (simplices_.count(ext)) {
                extendable = true;
                break;
            }
        }
        if (!extendable) maximal_.push_back(s);
    }
}

bool SimplicialComplex::has_vertex(const Vertex& v) const {
    return simplices_.count(Simplex{{v}}) > 0;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int k) const {
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
        if (s.dim() == k) out.push_back(s);
    return out;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
    std::vector<Vertex> out;
    for (const auto& s : simplices_)
        if (s.dim() == 0) out.push_back(s.verts[0]);
    return out;
}

std::set<Vertex> SimplicialComplex::vertex_set() const {
    std::set<Vertex> out;
    for (const auto& s : simplices_)
        if (s.dim() == 0) out.insert(s.verts[0]);
    return out;
}

bool SimplicialComplex::contains_complex(const SimplicialComplex& sub) const {
    for (const auto& s : sub.simplices_)
        if (!simplices_.count(s)) return false;
    return true;
}

std::vector<Vertex> SimplicialComplex::neighbors(const Vertex& v) const {
    std::vector<Vertex> out;
    for (const auto& s : simplices_) {
        if (s.dim() != 1) continue;
        if (s.verts[0] == v) out.push_back(s.verts[1]);
        else if (s.verts[1] == v) out.push_back(s.verts[0]);
    }
    return out;
}

void require_subcomplex(const SimplicialComplex& X, const Subcomplex& Y, const char* what) {
    if (!X.contains_complex(Y))
        throw ValidationError(std::string(what) + ": not a subcomplex of the ambient complex");
}

bool is_full_subcomplex(const SimplicialComplex& X, const Subcomplex& Y) {
    require_subcomplex(X, Y, "is_full_subcomplex");
    const std::set<Vertex> yv = Y.vertex_set();
    for (const auto& s : X.simplices()) {
        bool spanned = true;
        for (const auto& v : s.verts)
            if (!yv.count(v)) {
                spanned = false;
                break;
            }
        if (spanned && !Y.contains(s)) return false;
    }
    return true;
}

StarAndLink star_and_link(const SimplicialComplex& X, const Simplex& sigma) {
    if (!X.contains(sigma))
        throw NotFoundError("star_and_link: simplex [" + sigma.to_string() + "] not in complex");
    StarAndLink out;
    std::vector<Simplex> link_simplices;
    for (const auto& s : X.simplices()) {
        if (!s.contains(sigma)) continue;
        out.open_star.push_back(s);
        if (s != sigma) {
            std::vector<Vertex> rest;
            std::set_difference(s.verts.begin(), s.verts.end(), sigma.verts.begin(),
                                sigma.verts.end(), std::back_inserter(rest));
            if (!rest.empty()) link_simplices.push_back(Simplex{std::move(rest)});
        }
    }
    out.link = link_simplices.empty() ? Subcomplex{} : Subcomplex::from_simplices(link_simplices);
    return out;
}

Subcomplex closed_star(const SimplicialComplex& X, const Simplex& sigma) {
    auto sl = star_and_link(X, sigma);
    return Subcomplex::from_simplices(sl.open_star);
}

bool complement_dense(const SimplicialComplex& X, const Subcomplex& Y) {
    require_subcomplex(X, Y, "complement_dense");
    for (const auto& m : X.maximal_simplices())
        if (Y.contains(m)) return false;
    return true;
}

SimplicialMap SimplicialMap::make(SimplicialComplex source, SimplicialComplex target,
                                  std::map<Vertex, Vertex> images) {
    return make(std::make_shared<const SimplicialComplex>(std::move(source)),
                std::make_shared<const SimplicialComplex>(std::move(target)), std::move(images));
}

SimplicialMap SimplicialMap::make(std::shared_ptr<const SimplicialComplex> source,
                                  std::shared_ptr<const SimplicialComplex> target,
                                  std::map<Vertex, Vertex> images) {
    SimplicialMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.images_ = std::move(images);
    for (const auto& [v, w] : f.images_) {
        if (!f.source_->has_vertex(v))
            throw ValidationError("map: source vertex '" + v + "' not in source complex");
        if (!f.target_->has_vertex(w))
            throw ValidationError("map: image vertex '" + w + "' not in target complex");
    }
    for (const auto& v : f.source_->vertices())
        if (!f.images_.count(v)) throw ValidationError("map: no image for vertex '" + v + "'");
    for (const auto& m : f.source_->maximal_simplices()) {
        Simplex img = f.image(m);
        if (!f.target_->contains(img))
            throw ValidationError("map not simplicial: image [" + img.to_string() +
                                  "] of [" + m.to_string() + "] is not a simplex of the target");
    }
    return f;
}

const Vertex& SimplicialMap::operator()(const Vertex& v) const {
    auto it = images_.find(v);
    if (it == images_.end()) throw NotFoundError("map: vertex '" + v + "' has no image");
    return it->second;
}

Simplex SimplicialMap::image(const Simplex& s) const {
    std::vector<Vertex> im;
    im.reserve(s.verts.size());
    for (const auto& v : s.verts) im.push_back((*this)(v));
    return Simplex::span(std::move(im));
}

bool SimplicialMap::is_identity() const {
    for (const auto& [v, w] : images_)
        if (v != w) return false;
    return *source_ == *target_;
}

Subcomplex preimage_subcomplex(const SimplicialMap& f, const Subcomplex& Y) {
    require_subcomplex(f.target(), Y, "preimage_subcomplex");
    if (!is_full_subcomplex(f.target(), Y))
        throw FullnessRequired("preimage_subcomplex: subcomplex is not full in the target");
    std::vector<Simplex> hit;
    for (const auto& s : f.source().simplices())
        if (Y.contains(f.image(s))) hit.push_back(s);
    return hit.empty() ? Subcomplex{} : Subcomplex::from_simplices(hit);
}

} // namespace charvar
