#include "charvar/pi1.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace charvar {

std::vector<Vertex> GroupPresentation::generator_loop(int index) const {
    const Simplex& e = generators.at(index);
    auto path_to_base = [&](Vertex v) {
        std::vector<Vertex> path{v};
        while (parent_.at(v) != v) {
            v = parent_.at(v);
            path.push_back(v);
        }
        return path; // v .. basepoint
    };
    std::vector<Vertex> up = path_to_base(e.verts[0]);
    std::reverse(up.begin(), up.end()); // basepoint .. u
    std::vector<Vertex> down = path_to_base(e.verts[1]); // v .. basepoint
    std::vector<Vertex> loop = std::move(up);
    loop.insert(loop.end(), down.begin(), down.end() - 1); // drop the closing basepoint
    return loop;
}

GroupPresentation pi1_presentation(const SimplicialComplex& X, const Vertex& basepoint) {
    if (!X.has_vertex(basepoint))
        throw NotFoundError("pi1_presentation: basepoint '" + basepoint + "' not in complex");

    GroupPresentation p;
    p.basepoint = basepoint;

    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& e : X.simplices_of_dim(1)) {
        adj[e.verts[0]].push_back(e.verts[1]);
        adj[e.verts[1]].push_back(e.verts[0]);
    }

    std::set<Simplex> tree;
    p.parent_[basepoint] = basepoint;
    std::deque<Vertex> queue{basepoint};
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (const auto& w : adj[v]) { // adjacency lists are sorted by construction
            if (p.parent_.count(w)) continue;
            p.parent_[w] = v;
            tree.insert(Simplex::of({v, w}));
            queue.push_back(w);
        }
    }
    for (const auto& v : X.vertices())
        if (!p.parent_.count(v))
            throw NotConnectedError("pi1_presentation: complex is not connected");

    std::map<Simplex, int> gen_index; // 1-based
    for (const auto& e : X.simplices_of_dim(1)) {
        if (tree.count(e)) {
            p.tree_edges.push_back(e);
        } else {
            p.generators.push_back(e);
            gen_index[e] = int(p.generators.size());
        }
    }

    auto letter = [&](const Vertex& u, const Vertex& v) -> int {
        Simplex e = Simplex::of({u, v});
        auto it = gen_index.find(e);
        if (it == gen_index.end()) return 0; // tree edge
        return u < v ? it->second : -it->second;
    };
    for (const auto& t : X.simplices_of_dim(2)) {
        const Vertex &a = t.verts[0], &b = t.verts[1], &c = t.verts[2];
        std::vector<int> word;
        for (int x : {letter(a, b), letter(b, c), letter(c, a)})
            if (x != 0) word.push_back(x);
        // free reduction (cyclic reduction is not needed for abelianization)
        std::vector<int> reduced;
        for (int x : word) {
            if (!reduced.empty() && reduced.back() == -x) reduced.pop_back();
            else reduced.push_back(x);
        }
        p.relators.push_back(std::move(reduced));
    }
    return p;
}

FgAbelianGroup abelianization(const GroupPresentation& p) {
    IntMatrix rel(int(p.relators.size()), int(p.generators.size()));
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        for (int x : p.relators[i]) {
            if (x > 0) rel.at(int(i), x - 1) += 1;
            else rel.at(int(i), -x - 1) -= 1;
        }
    auto snf = smith_normal_form(rel);
    return FgAbelianGroup::from_smith_diagonal(snf.diagonal(), int(p.generators.size()));
}

} // namespace charvar
