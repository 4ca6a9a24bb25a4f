#pragma once
#include "charvar/abelian.hpp"
#include "charvar/simplicial.hpp"

namespace charvar {

/* Boundary matrices over Z with the sorted-vertex sign convention: the face
 * dropping the i-th smallest vertex enters with sign (-1)^i.  Entry [k] maps
 * k-chains to (k-1)-chains; bases are the k-simplices in canonical sorted
 * order.  boundary[0] has zero rows. */
std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& X);

/* Simplicial homology H_0 .. H_dim as a vector of groups. */
std::vector<FgAbelianGroup> homology(const SimplicialComplex& X);

/* Alternating sum of face counts. */
long euler_characteristic(const SimplicialComplex& X);

} // namespace charvar
