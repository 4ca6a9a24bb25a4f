#include "charvar/abelian.hpp"

#include <sstream>

#include "charvar/errors.hpp"

namespace charvar {

FgAbelianGroup FgAbelianGroup::cyclic(const Int& n) {
    Int a = n < 0 ? Int(-n) : n;
    if (a == 0) return free_abelian(1);
    if (a == 1) return trivial();
    return {0, {a}};
}

FgAbelianGroup FgAbelianGroup::from_smith_diagonal(const std::vector<Int>& diag, int generators) {
    FgAbelianGroup g;
    int rank = 0;
    for (const auto& d : diag) {
        if (d == 0) continue;
        ++rank;
        if (d > 1) g.invariant_factors.push_back(d);
        if (d < -1) g.invariant_factors.push_back(-d);
    }
    g.free_rank = generators - rank;
    if (g.free_rank < 0) throw InternalError("smith diagonal longer than generator count");
    return g;
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : invariant_factors) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

} // namespace charvar
