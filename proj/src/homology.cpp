#include "charvar/homology.hpp"

#include <map>

namespace charvar {

std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& X) {
    const int d = X.dim();
    std::vector<IntMatrix> out;
    if (d < 0) return out;
    std::vector<std::vector<Simplex>> basis(d + 1);
    std::vector<std::map<Simplex, int>> index(d + 1);
    for (int k = 0; k <= d; ++k) {
        basis[k] = X.simplices_of_dim(k);
        for (std::size_t i = 0; i < basis[k].size(); ++i) index[k][basis[k][i]] = int(i);
    }
    out.emplace_back(0, int(basis[0].size()));
    for (int k = 1; k <= d; ++k) {
        IntMatrix m(int(basis[k - 1].size()), int(basis[k].size()));
        for (std::size_t j = 0; j < basis[k].size(); ++j) {
            const Simplex& s = basis[k][j];
            for (int i = 0; i <= k; ++i) {
                std::vector<Vertex> face = s.verts;
                face.erase(face.begin() + i);
                int row = index[k - 1].at(Simplex{std::move(face)});
                m.at(row, int(j)) = (i % 2 == 0) ? 1 : -1;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<FgAbelianGroup> homology(const SimplicialComplex& X) {
    const int d = X.dim();
    std::vector<FgAbelianGroup> out;
    if (d < 0) return out;
    auto bd = boundary_matrices(X);
    std::vector<SnfResult> snf;
    snf.reserve(bd.size());
    for (const auto& m : bd) snf.push_back(smith_normal_form(m));
    for (int k = 0; k <= d; ++k) {
        const int nk = bd[k].cols();
        const int rank_k = snf[k].rank();
        const int rank_up = (k + 1 <= d) ? snf[k + 1].rank() : 0;
        FgAbelianGroup g;
        g.free_rank = nk - rank_k - rank_up;
        if (g.free_rank < 0) throw InternalError("homology rank bookkeeping broke");
        if (k + 1 <= d)
            for (const auto& x : snf[k + 1].diagonal())
                if (x > 1) g.invariant_factors.push_back(x);
        out.push_back(std::move(g));
    }
    return out;
}

long euler_characteristic(const SimplicialComplex& X) {
    long chi = 0;
    for (const auto& s : X.simplices()) chi += (s.dim() % 2 == 0) ? 1 : -1;
    return chi;
}

} // namespace charvar
