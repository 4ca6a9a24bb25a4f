#pragma once
#include "charvar/abelian.hpp"
#include "charvar/simplicial.hpp"

namespace charvar {

/* Edge-path presentation of the fundamental group.  Generators are the edges
 * outside a breadth-first spanning tree, oriented from smaller to larger
 * endpoint; each 2-simplex [a<b<c] contributes the relator for the path
 * a->b->c->a.  Relator words are signed 1-based generator indices. */
struct GroupPresentation {
    std::vector<Simplex> generators;            // non-tree edges
    std::vector<std::vector<int>> relators;
    std::vector<Simplex> tree_edges;
    Vertex basepoint;

    /* Cyclic walk through the complex realizing a generator: tree path from
     * the basepoint to one endpoint, the generator edge, tree path back.
     * The closing repetition of the basepoint is implicit, matching the walk
     * convention of nullhomotopy_search. */
    std::vector<Vertex> generator_loop(int index) const;

private:
    friend GroupPresentation pi1_presentation(const SimplicialComplex&, const Vertex&);
    std::map<Vertex, Vertex> parent_;           // BFS tree, basepoint maps to itself
};

GroupPresentation pi1_presentation(const SimplicialComplex& X, const Vertex& basepoint);

FgAbelianGroup abelianization(const GroupPresentation& p);

} // namespace charvar
