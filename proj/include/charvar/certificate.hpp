#pragma once
#include <map>
#include <variant>
#include <vector>

#include "charvar/simplicial.hpp"

namespace charvar {

/* Elementary, mechanically checkable modifications of (surface, map).  A
 * certificate is the ordered list of these; replaying them from the input map
 * must reproduce the output map exactly. */

/* Deterministic refinement: the surface is subdivided adapted to the current
 * map (midpoints on edges, one interior vertex per triangle) and the target
 * is subdivided barycentrically.  Carries no data; the verifier recomputes
 * the whole construction and the obstacle transport. */
struct RefineMove {
    bool operator==(const RefineMove&) const = default;
};

/* Re-route one subdivision vertex: its image becomes the barycenter of
 * `escape`, a simplex of the original target that contains the vertex's old
 * image carrier and is not in the obstacle.  Both old and new images of the
 * vertex's closed star lie in the closure of `escape`, which is contractible,
 * so the change is a homotopy rel the star boundary. */
struct ConeTargetMove {
    Vertex center;
    Simplex escape;
    bool operator==(const ConeTargetMove&) const = default;
};

/* Replace the two triangles around a bad edge (image inside the obstacle) by
 * a suspension over a path of fresh vertices mapping to waypoints.  Old and
 * new maps on the quad factor through a fan disk: j = 2 when the edge image
 * is a vertex, 3 when it is an edge; `sequence` is the simplex chain
 * witnessing reachability, `waypoints` the chosen images v'_1..v'_{m+1}. */
struct DiskFactorizationMove {
    Simplex bad_edge;                // [e0, e1] in the current surface
    Vertex s, t;                     // opposite vertices of the two triangles
    int j = 3;                       // aux disk dimension
    std::vector<Simplex> sequence;   // Delta_1..Delta_m in the current target
    std::vector<Vertex> waypoints;   // v'_1..v'_{m+1}, none in the obstacle
    std::vector<Vertex> fresh;       // u_2..u_m, new surface vertices
    bool operator==(const DiskFactorizationMove&) const = default;
};

/* Replace the closed star of a vertex mapping into the obstacle.  For a
 * 2-dimensional surface: a collar from the link cycle to a fresh ring, plus a
 * filling disk on the ring whose images live in the punctured closed star of
 * the old image.  For a 1-dimensional surface: the two star edges are
 * replaced by an arc of fresh vertices tracing a path in the punctured
 * closed star.  Everything lands in the closed star of the old image, which
 * is a cone, so the replacement is a homotopy rel the link. */
struct StarFillingMove {
    Vertex cleared;                     // the vertex being removed
    std::vector<Vertex> link;           // cyclic link order (or the two path ends)
    std::vector<Vertex> ring;           // fresh ring (2-dim) or fresh arc (1-dim)
    std::vector<Simplex> disk_triangles; // filling disk on ring + interior names
    std::map<Vertex, Vertex> new_images; // images of ring and interior vertices
    bool operator==(const StarFillingMove&) const = default;
};

using CertMove = std::variant<RefineMove, ConeTargetMove, DiskFactorizationMove, StarFillingMove>;

struct PushoffCertificate {
    std::vector<CertMove> moves;
    bool empty() const { return moves.empty(); }
    bool operator==(const PushoffCertificate&) const = default;
};

const char* move_kind(const CertMove& m);

} // namespace charvar
