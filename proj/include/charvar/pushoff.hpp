#pragma once
#include <optional>
#include <string>
#include <vector>

#include "charvar/abelian.hpp"
#include "charvar/certificate.hpp"
#include "charvar/simplicial.hpp"

namespace charvar {

/* Triangulated compact manifold of dimension <= 2 with a pinned subcomplex
 * (containing the topological boundary) on which maps may not move. */
struct SurfaceComplex {
    SimplicialComplex complex;
    Subcomplex boundary; // derived: free edges (dim 2) or endpoint vertices (dim 1)
    Subcomplex pinned;   // contains boundary

    int dim() const { return complex.dim(); }

    /* Validates pureness and the manifold link conditions, derives the
     * boundary, and checks boundary <= pinned <= complex. */
    static SurfaceComplex make(SimplicialComplex complex, Subcomplex pinned);
};

/* Compute the boundary subcomplex of a valid surface triangulation. */
Subcomplex surface_boundary(const SimplicialComplex& surface);

/* Throws ValidationError when `surface` is not a pure complex of dim <= 2
 * satisfying the manifold conditions (edge multiplicities and vertex links). */
void require_surface(const SimplicialComplex& surface);

struct PushoffProblem {
    SimplicialComplex space; // X
    Subcomplex obstacle;     // Y, subcomplex of X
    SurfaceComplex surface;  // S
    SimplicialMap f;         // S.complex -> X, pinned part mapping off the obstacle

    static PushoffProblem make(SimplicialComplex space, Subcomplex obstacle,
                               SurfaceComplex surface, std::map<Vertex, Vertex> images);
};

/* Chain of target simplices certifying that the two triangles around a bad
 * edge see each other through the obstacle's complement, with the vertex
 * waypoints used to route the replacement map. */
struct ReachabilitySequence {
    std::vector<Simplex> simplices; // Delta_1..Delta_m, all containing the edge image
    std::vector<Vertex> waypoints;  // v'_1..v'_{m+1}
    int length() const { return int(simplices.size()); }
};

/* The pipeline's working state: the current retriangulation of the surface,
 * the current map, and the (subdivided) target and obstacle it maps into. */
struct PipelineStage {
    SimplicialComplex surface;
    Subcomplex pinned;
    SimplicialComplex target;
    Subcomplex obstacle;
    SimplicialMap map; // surface -> target
    std::vector<CertMove> moves;
};

/* Step 1: subdivide adapted to f and re-route every subdivision vertex whose
 * default image would sit inside the obstacle, so that no 2-simplex of the
 * refined surface maps into the obstacle (and, for dim <= 1 surfaces, no
 * edge does).  Throws DensityViolated when no escape simplex exists. */
PipelineStage step1_clear_triangles(const PushoffProblem& problem);

/* Breadth-first search over target simplices containing the bad edge's
 * image; transitions are allowed when the intersection is not inside the
 * obstacle.  Throws LocalConnectivityViolated when the goal is unreachable. */
ReachabilitySequence find_reachability_sequence(const PipelineStage& stage,
                                                const Simplex& bad_edge);

/* Step 2: eliminate every edge whose image lies in the obstacle by the
 * suspension retriangulation over reachability waypoints. */
PipelineStage step2_clear_bad_edges(const PipelineStage& stage);

struct Obstruction {
    Vertex vertex;                  // surface vertex that could not be cleared
    Vertex image;                   // its obstacle image
    std::vector<Vertex> loop;       // link walk in the punctured closed star
    FgAbelianGroup punctured_h1;    // H_1 evidence for that star
    std::string note;
};

struct Step3Outcome {
    std::optional<PipelineStage> stage;      // set when cleared
    std::optional<Obstruction> obstruction;  // set when not
    bool cleared() const { return stage.has_value(); }
};

/* Step 3: remove the remaining vertices mapping into the obstacle by star
 * replacements; disk fillings are searched with `budget` interior vertices. */
Step3Outcome step3_clear_vertices(const PipelineStage& stage, int budget);

struct PushoffResult {
    bool cleared = false;
    /* On success: */
    SurfaceComplex surface;      // final retriangulation, pinned part intact
    SimplicialMap map;           // h : surface -> target, image disjoint from obstacle
    SimplicialComplex target;    // X or its barycentric subdivision
    Subcomplex obstacle;         // the obstacle at the target's level
    PushoffCertificate certificate;
    /* On failure: */
    std::optional<Obstruction> obstruction;
};

/* Full pipeline.  When f already misses the obstacle the result is f itself
 * with an empty certificate. */
PushoffResult pushoff(const PushoffProblem& problem, int budget = 8);

struct VerifyResult {
    bool ok = false;
    std::string reason; // empty when ok
};

/* Replays the certificate from problem.f, checking every move's structural
 * side conditions, that the final map equals h, that h misses the obstacle,
 * and that h agrees with f on the pinned subcomplex. */
VerifyResult verify_certificate(const PushoffProblem& problem, const SimplicialMap& h,
                                const PushoffCertificate& cert);

} // namespace charvar
