#pragma once
#include <optional>

#include "charvar/simplicial.hpp"

namespace charvar {

/* A simplicial null-homotopy: a triangulated disk, its boundary cycle listed
 * in order, and a simplicial map into the ambient complex restricting to the
 * given loop on the boundary. */
struct DiskFilling {
    SimplicialComplex disk;
    std::vector<Vertex> boundary;        // disk vertices, cyclic order
    std::map<Vertex, Vertex> images;
    int interior_vertices = 0;
};

/* Search for a filling of the closed edge walk `loop` (consecutive entries,
 * including the wrap-around, must be equal or adjacent in X).  The budget
 * bounds the number of interior vertices; the search deepens iteratively,
 * trying chord-only polygon triangulations first, then fans coned from single
 * vertices, then longer combinations.  Returns nothing when the budget is
 * exhausted, which is inconclusive. */
std::optional<DiskFilling> nullhomotopy_search(const std::vector<Vertex>& loop,
                                               const SimplicialComplex& X, int budget);

/* Checks that a filling is a genuine triangulated disk, that its boundary is
 * the declared cycle, that the map is simplicial into X and matches the loop
 * on the boundary.  On failure `why` (if non-null) receives the reason. */
bool validate_disk_filling(const DiskFilling& fill, const std::vector<Vertex>& loop,
                           const SimplicialComplex& X, std::string* why);

} // namespace charvar
