#pragma once
#include <map>
#include <optional>

#include "charvar/bigint.hpp"
#include "charvar/simplicial.hpp"

namespace charvar {

/* Where a subdivision vertex sits inside its carrier simplex. */
struct VertexRole {
    enum Kind { Barycenter, ChosenPoint };
    Kind kind = Barycenter;
    Simplex carrier;
    /* Barycentric coordinates on the carrier; only stored for ChosenPoint. */
    std::map<Vertex, Rational> coords;
};

/* Records a refinement of a complex together with carrier bookkeeping, enough
 * to transport subcomplexes and replay the construction. */
struct SubdivisionRecord {
    SimplicialComplex original;
    SimplicialComplex refined;
    /* Every refined vertex maps to the smallest original simplex containing it. */
    std::map<Vertex, Simplex> vertex_carrier;
    /* Roles of vertices that are new in the refinement. */
    std::map<Vertex, VertexRole> new_vertex_role;

    /* Smallest original simplex containing the refined simplex: the union of
     * the vertex carriers, which must span a simplex of the original. */
    Simplex carrier_of(const Simplex& refined_simplex) const;

    /* Refined subcomplex triangulating |Y| for a subcomplex Y of the original. */
    Subcomplex transport(const Subcomplex& Y) const;
};

/* Canonical name of the barycenter vertex of a simplex: "(a.b.c)". */
Vertex barycenter_name(const Simplex& s);

/* Full barycentric subdivision; refined vertices are barycenters of original
 * simplices and refined simplices are flags. */
SubdivisionRecord barycentric_subdivision(const SimplicialComplex& X);

/* Subdivision adapted to a simplicial map f with 2-dimensional source:
 * the 1-skeleton is subdivided barycentrically and every 2-simplex receives a
 * single interior vertex placed so that its f-image is the barycenter of the
 * image simplex.  The same geometric map is then simplicial from the refined
 * source to the barycentric subdivision of the target. */
struct FCentricResult {
    SubdivisionRecord surface;     // refinement of f's source
    SubdivisionRecord target;      // barycentric subdivision of f's target
    SimplicialMap refined_map;     // induced map surface.refined -> target.refined
};

FCentricResult f_centric_subdivision(const SimplicialMap& f);

/* Same construction for sources of dimension <= 1 (used by the push-off
 * pipeline on curves and point clouds; 0-dimensional sources are untouched
 * apart from the target subdivision). */
FCentricResult low_dim_refinement(const SimplicialMap& f);

/* Name of the interior vertex a 2-simplex receives: "c(a.b.c)". */
Vertex center_name(const Simplex& s);
/* Name of an edge midpoint: "m(a.b)". */
Vertex midpoint_name(const Simplex& e);

} // namespace charvar
