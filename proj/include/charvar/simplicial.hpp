#pragma once
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "charvar/errors.hpp"

namespace charvar {

/* Vertices are opaque string identifiers.  The lexicographic order on names is
 * the canonical total order used for every deterministic tie-break. */
using Vertex = std::string;

/* A simplex is a strictly sorted, duplicate-free vertex list.  Aggregate
 * initialization from a list assumes the list is already sorted; the named
 * constructors below establish the invariant from arbitrary input. */
struct Simplex {
    std::vector<Vertex> verts;

    /* Sorts; throws ValidationError on duplicate vertices. */
    static Simplex of(std::vector<Vertex> vs);

    /* Sorts and deduplicates.  Used for images under simplicial maps, where
     * collapsing is legitimate. */
    static Simplex span(std::vector<Vertex> vs);

    int dim() const { return static_cast<int>(verts.size()) - 1; }
    bool empty() const { return verts.empty(); }
    bool has_vertex(const Vertex& v) const;
    bool contains(const Simplex& other) const; // other is a face of this
    Simplex intersect(const Simplex& other) const;
    Simplex unite(const Simplex& other) const;

    /* All nonempty faces, including the simplex itself. */
    std::vector<Simplex> faces() const;

    std::string to_string() const;

    auto operator<=>(const Simplex&) const = default;
};

/* Finite abstract simplicial complex.  Immutable once built: the full
 * face-closed simplex set is materialized eagerly. */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_maximal(const std::vector<std::vector<Vertex>>& maximal);
    static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

    bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
    bool has_vertex(const Vertex& v) const;
    const std::set<Simplex>& simplices() const { return simplices_; }
    std::vector<Simplex> simplices_of_dim(int k) const;
    const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
    std::vector<Vertex> vertices() const;
    std::set<Vertex> vertex_set() const;

    int dim() const { return dim_; }
    bool empty() const { return simplices_.empty(); }
    std::size_t size() const { return simplices_.size(); }

    /* True when every simplex of `sub` is a simplex of this complex. */
    bool contains_complex(const SimplicialComplex& sub) const;

    /* Vertices adjacent to v (joined by an edge). */
    std::vector<Vertex> neighbors(const Vertex& v) const;

    bool operator==(const SimplicialComplex& other) const { return simplices_ == other.simplices_; }

private:
    std::set<Simplex> simplices_;
    std::vector<Simplex> maximal_;
    int dim_ = -1;

    void finish();
};

/* A subcomplex is itself a complex; operations taking an (X, Y) pair validate
 * containment of Y in X. */
using Subcomplex = SimplicialComplex;

/* Result of the open-star operation. */
struct StarAndLink {
    std::vector<Simplex> open_star; // simplices containing sigma; not face-closed
    Subcomplex link;
};

/* Every simplex of X spanned by vertices of Y already lies in Y. */
bool is_full_subcomplex(const SimplicialComplex& X, const Subcomplex& Y);

StarAndLink star_and_link(const SimplicialComplex& X, const Simplex& sigma);

/* Closed star of sigma: face closure of the open star. */
Subcomplex closed_star(const SimplicialComplex& X, const Simplex& sigma);

/* No maximal simplex of X lies in Y, i.e. X minus Y is dense in X. */
bool complement_dense(const SimplicialComplex& X, const Subcomplex& Y);

/* Throws ValidationError unless Y is a subcomplex of X. */
void require_subcomplex(const SimplicialComplex& X, const Subcomplex& Y, const char* what);

/* Vertex-induced simplicial map between fixed complexes.  Source and target
 * are shared so copies of the map are cheap. */
class SimplicialMap {
public:
    SimplicialMap() = default;

    static SimplicialMap make(SimplicialComplex source, SimplicialComplex target,
                              std::map<Vertex, Vertex> images);
    static SimplicialMap make(std::shared_ptr<const SimplicialComplex> source,
                              std::shared_ptr<const SimplicialComplex> target,
                              std::map<Vertex, Vertex> images);

    const SimplicialComplex& source() const { return *source_; }
    const SimplicialComplex& target() const { return *target_; }
    std::shared_ptr<const SimplicialComplex> source_ptr() const { return source_; }
    std::shared_ptr<const SimplicialComplex> target_ptr() const { return target_; }

    const Vertex& operator()(const Vertex& v) const;
    Simplex image(const Simplex& s) const;
    const std::map<Vertex, Vertex>& vertex_images() const { return images_; }

    bool is_identity() const;

private:
    std::shared_ptr<const SimplicialComplex> source_, target_;
    std::map<Vertex, Vertex> images_;
};

/* Simplices of the source whose image simplex lies in Y.  Y must be full in
 * the target; under fullness the result is exactly the preimage of |Y|. */
Subcomplex preimage_subcomplex(const SimplicialMap& f, const Subcomplex& Y);

} // namespace charvar
