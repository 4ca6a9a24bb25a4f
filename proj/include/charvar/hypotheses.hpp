#pragma once
#include <string>
#include <vector>

#include "charvar/abelian.hpp"
#include "charvar/simplicial.hpp"

namespace charvar {

enum class CheckStatus { OK, FAIL, UNKNOWN };

const char* status_name(CheckStatus s);

/* One open-star connectivity probe: the complement of the obstacle inside the
 * open star of an obstacle simplex must be non-empty and path-connected.
 * Probes run in the barycentric subdivision (where the obstacle is full) and
 * optionally at deeper subdivision levels; each probe is attributed to the
 * smallest original obstacle simplex carrying it. */
struct StarConnectivityCheck {
    Simplex probe;         // obstacle simplex at the probed level
    Simplex attributed_to; // original obstacle simplex
    int level = 0;         // 0 = first barycentric subdivision
    CheckStatus status = CheckStatus::OK;
    std::string note;
};

/* One punctured-star probe at a vertex of the subdivided obstacle: the full
 * subcomplex of the closed star on non-obstacle vertices stands in for a
 * punctured neighborhood.  It must be non-empty, connected, have H_1 = 0,
 * and every fundamental-group generator loop must fill by a disk search.
 * The closed star itself is a cone, so its own pi_2 vanishes for free. */
struct PuncturedStarCheck {
    Simplex attributed_to; // original obstacle simplex whose barycenter was probed
    Vertex probe;          // the subdivision vertex
    CheckStatus status = CheckStatus::UNKNOWN;
    FgAbelianGroup h1;
    int loops_filled = 0, loops_total = 0;
    std::string note;
};

struct HypothesisReport {
    bool density = false;
    std::vector<StarConnectivityCheck> local_connectivity;
    std::vector<PuncturedStarCheck> punctured_stars;

    CheckStatus local_connectivity_status() const;
    CheckStatus punctured_star_status() const;
    /* Everything a 2-dimensional push-off needs. */
    bool all_ok() const;
    /* Only density and star connectivity, enough for surfaces of dim <= 1. */
    bool ok_for_low_dim() const;
};

/* Sufficient combinatorial checks for the push-off hypotheses.  `depth` is
 * the number of extra barycentric subdivisions the connectivity probes are
 * repeated at; `fill_budget` bounds the loop-filling searches. */
HypothesisReport check_hypotheses(const SimplicialComplex& X, const Subcomplex& Y, int depth = 0,
                                  int fill_budget = 6);

/* Full subcomplex of the closed star of v on the vertices outside Y; the
 * combinatorial stand-in for a punctured neighborhood of v. */
Subcomplex punctured_closed_star(const SimplicialComplex& X, const Subcomplex& Y, const Vertex& v);

} // namespace charvar
