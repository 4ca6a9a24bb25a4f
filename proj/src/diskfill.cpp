#include "charvar/diskfill.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "charvar/errors.hpp"

namespace charvar {

namespace {

using DiskEdge = std::pair<Vertex, Vertex>;

DiskEdge mk_edge(const Vertex& a, const Vertex& b) {
    return a < b ? DiskEdge{a, b} : DiskEdge{b, a};
}

/* Canonical form of a cyclic walk under rotation and reflection, used to memo
 * failed subproblems.  The walk is small, so the quadratic scan is fine. */
std::string normalize_walk(const std::vector<Vertex>& w) {
    std::size_t n = w.size();
    std::vector<Vertex> best;
    auto consider = [&](const std::vector<Vertex>& seq) {
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<Vertex> rot(n);
            for (std::size_t i = 0; i < n; ++i) rot[i] = seq[(s + i) % n];
            if (best.empty() || rot < best) best = std::move(rot);
        }
    };
    consider(w);
    std::vector<Vertex> rev(w.rbegin(), w.rend());
    consider(rev);
    std::string key;
    for (const auto& v : best) {
        key += v;
        key += '|';
    }
    return key;
}

struct Searcher {
    explicit Searcher(const SimplicialComplex& x) : X(x) {}

    const SimplicialComplex& X;
    long node_cap = 200000;
    long nodes = 0;
    bool aborted = false;

    std::set<Simplex> tris;                 // emitted disk triangles
    std::map<DiskEdge, int> edge_use;       // triangle count per disk edge
    std::map<Vertex, Vertex> images;        // disk vertex -> X vertex
    int fresh = 0;
    int cones_used = 0;
    std::map<std::string, int> failed;      // normalized walk -> highest budget that failed

    bool span_in_X(std::initializer_list<Vertex> vs) const {
        Simplex s = Simplex::span(vs);
        return X.contains(s);
    }

    /* All additions go through here so the disk stays a disk: no duplicate
     * triangles, no edge in more than two triangles. */
    bool can_add(const std::vector<Simplex>& add) const {
        std::map<DiskEdge, int> delta;
        for (const auto& t : add) {
            if (tris.count(t)) return false;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    delta[mk_edge(t.verts[i], t.verts[j])] += 1;
        }
        for (const auto& [e, d] : delta) {
            auto it = edge_use.find(e);
            int base = it == edge_use.end() ? 0 : it->second;
            if (base + d > 2) return false;
        }
        return true;
    }

    void apply(const std::vector<Simplex>& add) {
        for (const auto& t : add) {
            tris.insert(t);
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    edge_use[mk_edge(t.verts[i], t.verts[j])] += 1;
        }
    }

    void revert(const std::vector<Simplex>& add) {
        for (const auto& t : add) {
            tris.erase(t);
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    auto it = edge_use.find(mk_edge(t.verts[i], t.verts[j]));
                    if (--it->second == 0) edge_use.erase(it);
                }
        }
    }

    int edge_usage(const Vertex& a, const Vertex& b) const {
        auto it = edge_use.find(mk_edge(a, b));
        return it == edge_use.end() ? 0 : it->second;
    }

    /* Vertices z with span{a, z} in X, plus a itself; candidates for cone
     * images.  Sorted, so the search order is deterministic. */
    std::vector<Vertex> cone_candidates(const Vertex& a) const {
        std::vector<Vertex> out{a};
        for (const auto& z : X.neighbors(a)) out.push_back(z);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool search(std::vector<Vertex>& ring, std::vector<Vertex>& walk, int budget) {
        if (aborted) return false;
        if (++nodes > node_cap) {
            aborted = true;
            return false;
        }
        std::string key = normalize_walk(walk);
        auto memo = failed.find(key);
        if (memo != failed.end() && memo->second >= budget) return false;

        std::size_t n = ring.size();

        if (n == 3) {
            if (span_in_X({walk[0], walk[1], walk[2]})) {
                std::vector<Simplex> add{Simplex::of({ring[0], ring[1], ring[2]})};
                if (can_add(add)) {
                    apply(add);
                    return true;
                }
            }
        }

        if (n >= 4) {
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t i1 = (i + 1) % n, i2 = (i + 2) % n;
                if (!span_in_X({walk[i], walk[i1], walk[i2]})) continue;
                // The chord becomes a ring edge needing one more triangle, so
                // it must not already be in use.
                if (edge_usage(ring[i], ring[i2]) != 0) continue;
                std::vector<Simplex> add{Simplex::of({ring[i], ring[i1], ring[i2]})};
                if (!can_add(add)) continue;
                apply(add);
                std::vector<Vertex> nring, nwalk;
                for (std::size_t t = 0; t < n; ++t) {
                    if (t == i1) continue;
                    nring.push_back(ring[t]);
                    nwalk.push_back(walk[t]);
                }
                if (search(nring, nwalk, budget)) return true;
                revert(add);
            }
        }

        if (budget >= 1) {
            // Full fan: cone the whole ring to one fresh interior vertex.
            for (const auto& z : cone_candidates(walk[0])) {
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i)
                    ok = span_in_X({walk[i], walk[(i + 1) % n], z});
                if (!ok) continue;
                Vertex hub = "d" + std::to_string(fresh);
                std::vector<Simplex> add;
                for (std::size_t i = 0; i < n; ++i)
                    add.push_back(Simplex::of({ring[i], ring[(i + 1) % n], hub}));
                if (!can_add(add)) continue;
                ++fresh;
                images[hub] = z;
                apply(add);
                ++cones_used;
                return true;
            }
            // Partial fans over an arc, longest arcs first.
            for (std::size_t len = n - 1; len >= 2; --len) {
                for (std::size_t i = 0; i < n; ++i) {
                    bool ok = true;
                    std::vector<Vertex> cands = cone_candidates(walk[i]);
                    for (const auto& z : cands) {
                        ok = true;
                        for (std::size_t t = 0; t < len && ok; ++t)
                            ok = span_in_X({walk[(i + t) % n], walk[(i + t + 1) % n], z});
                        if (!ok) continue;
                        Vertex hub = "d" + std::to_string(fresh);
                        std::vector<Simplex> add;
                        for (std::size_t t = 0; t < len; ++t)
                            add.push_back(
                                Simplex::of({ring[(i + t) % n], ring[(i + t + 1) % n], hub}));
                        if (!can_add(add)) continue;
                        ++fresh;
                        images[hub] = z;
                        apply(add);
                        ++cones_used;
                        std::vector<Vertex> nring{ring[i], hub}, nwalk{walk[i], z};
                        for (std::size_t t = len; t < n; ++t) {
                            nring.push_back(ring[(i + t) % n]);
                            nwalk.push_back(walk[(i + t) % n]);
                        }
                        if (search(nring, nwalk, budget - 1)) return true;
                        --cones_used;
                        revert(add);
                        images.erase(hub);
                        --fresh;
                    }
                }
            }
        }

        auto& slot = failed[key];
        if (budget > slot) slot = budget;
        return false;
    }
};

} // namespace

std::optional<DiskFilling> nullhomotopy_search(const std::vector<Vertex>& loop,
                                               const SimplicialComplex& X, int budget) {
    if (loop.size() < 3)
        throw ValidationError("nullhomotopy_search: loop must have length >= 3 "
                              "(pad shorter loops by repeating a vertex's neighbor)");
    std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!X.has_vertex(loop[i]))
            throw ValidationError("nullhomotopy_search: loop vertex '" + loop[i] +
                                  "' not in complex");
        Simplex step = Simplex::span({loop[i], loop[(i + 1) % n]});
        if (!X.contains(step))
            throw ValidationError("nullhomotopy_search: consecutive loop entries '" + loop[i] +
                                  "', '" + loop[(i + 1) % n] + "' are not equal or adjacent");
    }

    Searcher s{X};
    std::vector<Vertex> ring;
    for (std::size_t i = 0; i < n; ++i) {
        Vertex b = "b" + std::to_string(i);
        ring.push_back(b);
        s.images[b] = loop[i];
    }

    for (int cap = 0; cap <= budget; ++cap) {
        std::vector<Vertex> r = ring, w = loop;
        Searcher attempt = s; // memo survives across deepening rounds via copy-back
        if (attempt.search(r, w, cap)) {
            DiskFilling fill;
            std::vector<Simplex> maximal(attempt.tris.begin(), attempt.tris.end());
            fill.disk = SimplicialComplex::from_simplices(maximal);
            fill.boundary = ring;
            fill.images = attempt.images;
            fill.interior_vertices = attempt.fresh;
            return fill;
        }
        if (attempt.aborted) return std::nullopt;
        s.failed = std::move(attempt.failed);
    }
    return std::nullopt;
}

bool validate_disk_filling(const DiskFilling& fill, const std::vector<Vertex>& loop,
                           const SimplicialComplex& X, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const SimplicialComplex& D = fill.disk;
    if (fill.boundary.size() != loop.size())
        return fail("boundary length does not match loop length");
    std::size_t n = loop.size();
    if (n < 3) return fail("boundary cycle shorter than 3");

    std::set<Vertex> bset(fill.boundary.begin(), fill.boundary.end());
    if (bset.size() != n) return fail("boundary vertices are not distinct");

    // Pure 2-dimensional: every maximal simplex is a triangle.
    for (const auto& m : D.maximal_simplices())
        if (m.dim() != 2) return fail("disk is not pure of dimension 2: " + m.to_string());

    // Every vertex mapped, and simplices map to simplices.
    for (const auto& v : D.vertices()) {
        auto it = fill.images.find(v);
        if (it == fill.images.end()) return fail("disk vertex '" + v + "' has no image");
        if (!X.has_vertex(it->second))
            return fail("image vertex '" + it->second + "' is not in the target complex");
    }
    for (const auto& t : D.simplices_of_dim(2)) {
        std::vector<Vertex> im;
        for (const auto& v : t.verts) im.push_back(fill.images.at(v));
        Simplex s = Simplex::span(im);
        if (!X.contains(s))
            return fail("image of " + t.to_string() + " is " + s.to_string() +
                        ", not a simplex of the target");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (fill.images.at(fill.boundary[i]) != loop[i])
            return fail("boundary image does not match the loop at position " +
                        std::to_string(i));

    // Edge multiplicity, and the free edges are exactly the declared cycle.
    std::map<DiskEdge, int> use;
    for (const auto& t : D.simplices_of_dim(2))
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) use[mk_edge(t.verts[i], t.verts[j])] += 1;
    std::set<DiskEdge> declared;
    for (std::size_t i = 0; i < n; ++i)
        declared.insert(mk_edge(fill.boundary[i], fill.boundary[(i + 1) % n]));
    std::set<DiskEdge> free_edges;
    for (const auto& [e, c] : use) {
        if (c > 2) return fail("disk edge in more than two triangles");
        if (c == 1) free_edges.insert(e);
    }
    if (free_edges != declared) return fail("free edges are not exactly the boundary cycle");

    // Links: a cycle at interior vertices, a path at boundary vertices.
    for (const auto& v : D.vertices()) {
        std::map<Vertex, int> deg;
        int link_edges = 0;
        for (const auto& t : D.simplices_of_dim(2)) {
            if (!t.has_vertex(v)) continue;
            std::vector<Vertex> rest;
            for (const auto& u : t.verts)
                if (u != v) rest.push_back(u);
            deg[rest[0]] += 1;
            deg[rest[1]] += 1;
            ++link_edges;
        }
        if (deg.empty()) return fail("isolated vertex '" + v + "'");
        int ones = 0;
        for (const auto& [u, d] : deg) {
            if (d > 2) return fail("link of '" + v + "' branches");
            if (d == 1) ++ones;
        }
        // Connectivity of the link graph.
        std::set<Vertex> seen{deg.begin()->first};
        std::vector<Vertex> stack{deg.begin()->first};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (const auto& t : D.simplices_of_dim(2)) {
                if (!t.has_vertex(v) || !t.has_vertex(u)) continue;
                for (const auto& w : t.verts)
                    if (w != v && w != u && !seen.count(w)) {
                        seen.insert(w);
                        stack.push_back(w);
                    }
            }
        }
        if (seen.size() != deg.size()) return fail("link of '" + v + "' is disconnected");
        bool on_boundary = bset.count(v) > 0;
        if (on_boundary) {
            if (ones != 2 || link_edges != int(deg.size()) - 1)
                return fail("link of boundary vertex '" + v + "' is not a path");
        } else {
            if (ones != 0 || link_edges != int(deg.size()))
                return fail("link of interior vertex '" + v + "' is not a cycle");
        }
    }

    // Connectivity and Euler characteristic pin down the disk.
    long verts = long(D.vertices().size());
    long edges = long(D.simplices_of_dim(1).size());
    long faces = long(D.simplices_of_dim(2).size());
    if (verts - edges + faces != 1) return fail("Euler characteristic is not 1");
    std::set<Vertex> seen{D.vertices().front()};
    std::vector<Vertex> stack{D.vertices().front()};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (const auto& w : D.neighbors(u))
            if (!seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    if (seen.size() != D.vertices().size()) return fail("disk is disconnected");

    if (why) why->clear();
    return true;
}

} // namespace charvar
