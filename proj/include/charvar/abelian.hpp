#pragma once
#include <string>
#include <vector>

#include "charvar/intmatrix.hpp"

namespace charvar {

/* Finitely generated abelian group in invariant-factor form: Z^free_rank plus
 * Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k. */
struct FgAbelianGroup {
    int free_rank = 0;
    std::vector<Int> invariant_factors;

    static FgAbelianGroup trivial() { return {}; }
    static FgAbelianGroup free_abelian(int rank) { return {rank, {}}; }
    static FgAbelianGroup cyclic(const Int& n);

    /* Cokernel shape from a Smith diagonal padded to `generators` columns. */
    static FgAbelianGroup from_smith_diagonal(const std::vector<Int>& diag, int generators);

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    std::string to_string() const;

    bool operator==(const FgAbelianGroup&) const = default;
};

} // namespace charvar
