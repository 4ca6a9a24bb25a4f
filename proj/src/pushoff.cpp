#include "charvar/pushoff.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "charvar/diskfill.hpp"
#include "charvar/homology.hpp"
#include "charvar/hypotheses.hpp"
#include "charvar/subdivision.hpp"
#include "replay.hpp"

namespace charvar {

namespace {

/* Link of a vertex in a 2-complex must be a single cycle or a single simple
 * path for the complex to be a surface triangulation there. */
void check_vertex_link(const SimplicialComplex& S, const Vertex& v) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& t : S.simplices_of_dim(2)) {
        if (!t.has_vertex(v)) continue;
        std::vector<Vertex> rest;
        for (const auto& u : t.verts)
            if (u != v) rest.push_back(u);
        adj[rest[0]].push_back(rest[1]);
        adj[rest[1]].push_back(rest[0]);
    }
    if (adj.empty()) throw ValidationError("surface: vertex '" + v + "' lies in no triangle");
    int odd = 0;
    std::size_t edges = 0;
    for (auto& [u, ns] : adj) {
        if (ns.size() > 2)
            throw ValidationError("surface: link of '" + v + "' branches at '" + u + "'");
        if (ns.size() == 1) ++odd;
        edges += ns.size();
    }
    edges /= 2;
    if (odd != 0 && odd != 2)
        throw ValidationError("surface: link of '" + v + "' has " + std::to_string(odd) +
                              " loose ends");
    std::size_t expect = odd == 0 ? adj.size() : adj.size() - 1;
    if (edges != expect)
        throw ValidationError("surface: link of '" + v + "' is not a single cycle or path");
    std::set<Vertex> seen{adj.begin()->first};
    std::deque<Vertex> queue{adj.begin()->first};
    while (!queue.empty()) {
        Vertex cur = queue.front();
        queue.pop_front();
        for (const auto& nb : adj[cur])
            if (seen.insert(nb).second) queue.push_back(nb);
    }
    if (seen.size() != adj.size())
        throw ValidationError("surface: link of '" + v + "' is disconnected");
}

std::map<Simplex, int> edge_triangle_counts(const SimplicialComplex& S) {
    std::map<Simplex, int> count;
    for (const auto& t : S.simplices_of_dim(2))
        for (const auto& e : t.faces())
            if (e.dim() == 1) ++count[e];
    return count;
}

/* Deterministic (dim, lex)-least simplex of the space that contains `img`
 * and avoids the obstacle. */
Simplex find_escape(const SimplicialComplex& space, const Subcomplex& obstacle,
                    const Simplex& img) {
    const Simplex* best = nullptr;
    for (const auto& d : space.simplices()) {
        if (!d.contains(img) || obstacle.contains(d)) continue;
        if (!best || d.dim() < best->dim() ||
            (d.dim() == best->dim() && d.verts < best->verts))
            best = &d;
    }
    if (!best)
        throw DensityViolated("no escape simplex around " + img.to_string() +
                              ": every simplex containing it lies in the obstacle");
    return *best;
}

struct QuadSides {
    Simplex sigma, tau;
    Vertex s, t;
};

QuadSides quad_sides(const SimplicialComplex& surface, const Simplex& bad_edge) {
    if (bad_edge.dim() != 1 || !surface.contains(bad_edge))
        throw ValidationError("quad_sides: " + bad_edge.to_string() +
                              " is not an edge of the surface");
    std::vector<Simplex> around;
    for (const auto& t : surface.simplices_of_dim(2))
        if (t.contains(bad_edge)) around.push_back(t);
    if (around.size() != 2)
        throw ValidationError("quad_sides: edge " + bad_edge.to_string() + " is not interior");
    auto opposite = [&](const Simplex& t) {
        for (const auto& u : t.verts)
            if (u != bad_edge.verts[0] && u != bad_edge.verts[1]) return u;
        throw InternalError("quad_sides: degenerate triangle");
    };
    return QuadSides{around[0], around[1], opposite(around[0]), opposite(around[1])};
}

/* Deterministic cyclic order of the link of an interior vertex: starts at the
 * least link vertex and proceeds toward its smaller neighbor. */
std::vector<Vertex> link_cycle(const SimplicialComplex& S, const Vertex& v) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& t : S.simplices_of_dim(2)) {
        if (!t.has_vertex(v)) continue;
        std::vector<Vertex> rest;
        for (const auto& u : t.verts)
            if (u != v) rest.push_back(u);
        adj[rest[0]].push_back(rest[1]);
        adj[rest[1]].push_back(rest[0]);
    }
    for (auto& [u, ns] : adj) {
        (void)u;
        if (ns.size() != 2)
            throw InternalError("link_cycle: vertex '" + v + "' is not interior");
        std::sort(ns.begin(), ns.end());
    }
    std::vector<Vertex> cycle;
    Vertex start = adj.begin()->first, cur = start, prev;
    do {
        cycle.push_back(cur);
        const auto& ns = adj[cur];
        Vertex next = cycle.size() == 1 ? ns[0] : (ns[0] == prev ? ns[1] : ns[0]);
        prev = cur;
        cur = next;
    } while (cur != start);
    return cycle;
}

std::optional<std::vector<Vertex>> skeleton_path(const SimplicialComplex& K, const Vertex& a,
                                                const Vertex& b) {
    if (!K.has_vertex(a) || !K.has_vertex(b)) return std::nullopt;
    std::map<Vertex, Vertex> parent{{a, a}};
    std::deque<Vertex> queue{a};
    while (!queue.empty() && parent.count(b) == 0) {
        Vertex cur = queue.front();
        queue.pop_front();
        for (const auto& nb : K.neighbors(cur))
            if (parent.emplace(nb, cur).second) queue.push_back(nb);
    }
    if (parent.count(b) == 0) return std::nullopt;
    std::vector<Vertex> path{b};
    while (path.back() != a) path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
}

PipelineStage stage_from_state(const replay::State& st, std::vector<CertMove> moves) {
    PipelineStage out;
    out.surface = st.surface;
    out.pinned = st.pinned;
    out.target = st.target;
    out.obstacle = st.obstacle;
    out.map = st.to_map();
    out.moves = std::move(moves);
    return out;
}

} // namespace

void require_surface(const SimplicialComplex& S) {
    if (S.empty()) return;
    const int d = S.dim();
    if (d > 2)
        throw ValidationError("surface: dimension " + std::to_string(d) + " exceeds 2");
    for (const auto& t : S.maximal_simplices())
        if (t.dim() != d)
            throw ValidationError("surface: not pure, " + t.to_string() + " is maximal of dim " +
                                  std::to_string(t.dim()));
    if (d == 0) return;
    if (d == 1) {
        for (const auto& v : S.vertices()) {
            std::size_t deg = S.neighbors(v).size();
            if (deg < 1 || deg > 2)
                throw ValidationError("surface: vertex '" + v + "' has degree " +
                                      std::to_string(deg));
        }
        return;
    }
    for (const auto& [e, c] : edge_triangle_counts(S))
        if (c > 2)
            throw ValidationError("surface: edge " + e.to_string() + " lies in " +
                                  std::to_string(c) + " triangles");
    for (const auto& v : S.vertices()) check_vertex_link(S, v);
}

Subcomplex surface_boundary(const SimplicialComplex& S) {
    if (S.empty() || S.dim() == 0) return {};
    std::vector<Simplex> cells;
    if (S.dim() == 2) {
        for (const auto& [e, c] : edge_triangle_counts(S))
            if (c == 1) cells.push_back(e);
    } else {
        for (const auto& v : S.vertices())
            if (S.neighbors(v).size() == 1) cells.push_back(Simplex::of({v}));
    }
    return cells.empty() ? Subcomplex{} : Subcomplex::from_simplices(cells);
}

SurfaceComplex SurfaceComplex::make(SimplicialComplex complex, Subcomplex pinned) {
    require_surface(complex);
    require_subcomplex(complex, pinned, "surface pinned part");
    Subcomplex boundary = surface_boundary(complex);
    if (!pinned.contains_complex(boundary))
        throw ValidationError("surface: the pinned subcomplex must contain the boundary");
    SurfaceComplex out;
    out.complex = std::move(complex);
    out.boundary = std::move(boundary);
    out.pinned = std::move(pinned);
    return out;
}

PushoffProblem PushoffProblem::make(SimplicialComplex space, Subcomplex obstacle,
                                    SurfaceComplex surface, std::map<Vertex, Vertex> images) {
    require_subcomplex(space, obstacle, "pushoff problem");
    SimplicialMap f = SimplicialMap::make(surface.complex, space, std::move(images));
    for (const auto& v : surface.pinned.vertices())
        if (obstacle.has_vertex(f(v)))
            throw ValidationError("pushoff problem: pinned vertex '" + v +
                                  "' maps into the obstacle");
    PushoffProblem out;
    out.space = std::move(space);
    out.obstacle = std::move(obstacle);
    out.surface = std::move(surface);
    out.f = std::move(f);
    return out;
}

PipelineStage step1_clear_triangles(const PushoffProblem& problem) {
    replay::State st = replay::State::initial(problem);
    std::vector<CertMove> moves;
    auto push = [&](CertMove mv) {
        replay::apply_move(st, mv);
        moves.push_back(std::move(mv));
    };
    push(RefineMove{});
    const SimplicialComplex& S = problem.surface.complex;
    const int d = S.dim();
    if (d == 2) {
        for (const auto& tri : S.simplices_of_dim(2)) {
            Simplex img = problem.f.image(tri);
            if (!problem.obstacle.contains(img)) continue;
            push(ConeTargetMove{center_name(tri), find_escape(problem.space, problem.obstacle, img)});
        }
    } else if (d == 1) {
        for (const auto& e : S.simplices_of_dim(1)) {
            Simplex img = problem.f.image(e);
            if (!problem.obstacle.contains(img)) continue;
            push(ConeTargetMove{midpoint_name(e), find_escape(problem.space, problem.obstacle, img)});
        }
    } else if (d == 0) {
        for (const auto& v : S.vertices()) {
            Simplex img = Simplex::of({problem.f(v)});
            if (!problem.obstacle.contains(img)) continue;
            push(ConeTargetMove{v, find_escape(problem.space, problem.obstacle, img)});
        }
    }
    SimplicialMap cur = st.to_map();
    for (const auto& top : st.surface.maximal_simplices())
        if (st.obstacle.contains(cur.image(top)))
            throw InternalError("step 1 left a top cell mapping into the obstacle: " +
                                top.to_string());
    return stage_from_state(st, std::move(moves));
}

ReachabilitySequence find_reachability_sequence(const PipelineStage& stage,
                                                const Simplex& bad_edge) {
    QuadSides sides = quad_sides(stage.surface, bad_edge);
    Simplex edge_image = stage.map.image(bad_edge);
    if (!stage.obstacle.contains(edge_image))
        throw ValidationError("find_reachability_sequence: " + bad_edge.to_string() +
                              " does not map into the obstacle");
    Simplex start = stage.map.image(sides.sigma);
    Simplex goal = stage.map.image(sides.tau);
    std::vector<Simplex> candidates;
    for (const auto& d : stage.target.simplices())
        if (d.contains(edge_image) && !stage.obstacle.contains(d)) candidates.push_back(d);

    std::map<Simplex, Simplex> parent{{start, start}};
    std::deque<Simplex> queue{start};
    while (!queue.empty() && parent.count(goal) == 0) {
        Simplex cur = queue.front();
        queue.pop_front();
        for (const auto& next : candidates) {
            if (parent.count(next) || next == cur) continue;
            Simplex shared = cur.intersect(next);
            if (shared.empty() || stage.obstacle.contains(shared)) continue;
            parent.emplace(next, cur);
            queue.push_back(next);
        }
    }
    if (parent.count(goal) == 0)
        throw LocalConnectivityViolated(
            "the two sides of bad edge " + bad_edge.to_string() +
            " cannot see each other off the obstacle around " + edge_image.to_string());
    std::vector<Simplex> seq{goal};
    while (seq.back() != start) seq.push_back(parent.at(seq.back()));
    std::reverse(seq.begin(), seq.end());

    ReachabilitySequence out;
    out.simplices = seq;
    out.waypoints.push_back(stage.map(sides.s));
    for (std::size_t i = 1; i < seq.size(); ++i) {
        Simplex shared = seq[i - 1].intersect(seq[i]);
        const Vertex* pick = nullptr;
        for (const auto& u : shared.verts)
            if (!stage.obstacle.has_vertex(u)) {
                pick = &u;
                break;
            }
        if (!pick)
            throw LocalConnectivityViolated("shared face " + shared.to_string() +
                                            " has no vertex outside the obstacle");
        out.waypoints.push_back(*pick);
    }
    out.waypoints.push_back(stage.map(sides.t));
    return out;
}

PipelineStage step2_clear_bad_edges(const PipelineStage& stage) {
    if (stage.surface.dim() < 2) return stage;
    replay::State st = replay::State::from_stage(stage);
    std::vector<CertMove> moves = stage.moves;

    std::vector<Simplex> bads;
    {
        SimplicialMap cur = st.to_map();
        for (const auto& e : st.surface.simplices_of_dim(1))
            if (st.obstacle.contains(cur.image(e))) bads.push_back(e);
    }
    std::map<Simplex, int> quad_use;
    for (const auto& e : bads)
        for (const auto& t : st.surface.simplices_of_dim(2))
            if (t.contains(e)) ++quad_use[t];
    for (const auto& [t, c] : quad_use)
        if (c > 1)
            throw InternalError("quads around bad edges overlap at " + t.to_string());

    for (const auto& e : bads) {
        PipelineStage cur = stage_from_state(st, {});
        ReachabilitySequence seq = find_reachability_sequence(cur, e);
        QuadSides sides = quad_sides(st.surface, e);
        std::vector<Simplex> chain = seq.simplices;
        std::vector<Vertex> waypoints = seq.waypoints;
        if (chain.size() == 1) {
            /* A length-1 chain would retriangulate by the plain edge flip,
             * whose new diagonal can collide with the flip of a sibling bad
             * edge.  Repeating the simplex inserts one fresh vertex instead
             * and is always safe. */
            chain.push_back(chain[0]);
            const Vertex* pick = nullptr;
            for (const auto& u : chain[0].verts)
                if (!st.obstacle.has_vertex(u)) {
                    pick = &u;
                    break;
                }
            if (!pick)
                throw InternalError("reachability simplex has no vertex outside the obstacle");
            waypoints.insert(waypoints.begin() + 1, *pick);
        }
        std::vector<Vertex> fresh;
        for (std::size_t i = 2; i <= chain.size(); ++i)
            fresh.push_back("u" + std::to_string(i) + "(" + e.verts[0] + "." + e.verts[1] + ")");
        DiskFactorizationMove mv;
        mv.bad_edge = e;
        mv.s = sides.s;
        mv.t = sides.t;
        mv.j = cur.map.image(e).dim() + 2;
        mv.sequence = std::move(chain);
        mv.waypoints = std::move(waypoints);
        mv.fresh = std::move(fresh);
        replay::apply_move(st, mv);
        moves.push_back(std::move(mv));
    }
    return stage_from_state(st, std::move(moves));
}

Step3Outcome step3_clear_vertices(const PipelineStage& stage, int budget) {
    replay::State st = replay::State::from_stage(stage);
    std::vector<CertMove> moves = stage.moves;
    const int sdim = st.surface.dim();
    Step3Outcome out;

    std::vector<Vertex> bads;
    for (const auto& v : st.surface.vertices())
        if (st.obstacle.has_vertex(st.images.at(v))) bads.push_back(v);

    for (const auto& w : bads) {
        const Vertex old_image = st.images.at(w);
        Subcomplex punctured = punctured_closed_star(st.target, st.obstacle, old_image);
        auto evidence_h1 = [&]() {
            if (punctured.empty()) return FgAbelianGroup::trivial();
            std::vector<FgAbelianGroup> H = homology(punctured);
            return H.size() > 1 ? H[1] : FgAbelianGroup::trivial();
        };
        if (sdim == 2) {
            std::vector<Vertex> link = link_cycle(st.surface, w);
            std::vector<Vertex> walk;
            for (const auto& l : link) walk.push_back(st.images.at(l));
            std::optional<DiskFilling> fill;
            if (!punctured.empty()) fill = nullhomotopy_search(walk, punctured, budget);
            if (!fill) {
                Obstruction ob;
                ob.vertex = w;
                ob.image = old_image;
                ob.loop = walk;
                ob.punctured_h1 = evidence_h1();
                if (punctured.empty())
                    ob.note = "the punctured closed star of the image is empty";
                else if (!ob.punctured_h1.is_trivial())
                    ob.note = "the link walk is essential: the punctured closed star has H_1 = " +
                              ob.punctured_h1.to_string();
                else
                    ob.note = "no filling found within the search budget; inconclusive";
                out.obstruction = std::move(ob);
                return out;
            }
            /* Rename the found disk onto a fresh ring; a degenerate collar
             * glues the ring to the old link. */
            std::map<Vertex, Vertex> rename;
            std::vector<Vertex> ring;
            for (std::size_t i = 0; i < fill->boundary.size(); ++i) {
                Vertex name = "q" + std::to_string(i) + "(" + w + ")";
                rename[fill->boundary[i]] = name;
                ring.push_back(name);
            }
            int fresh_index = 0;
            for (const auto& v : fill->disk.vertices())
                if (rename.count(v) == 0)
                    rename[v] = "d" + std::to_string(fresh_index++) + "(" + w + ")";
            StarFillingMove mv;
            mv.cleared = w;
            mv.link = link;
            mv.ring = std::move(ring);
            for (const auto& t : fill->disk.simplices_of_dim(2))
                mv.disk_triangles.push_back(Simplex::of(
                    {rename.at(t.verts[0]), rename.at(t.verts[1]), rename.at(t.verts[2])}));
            for (const auto& [v, img] : fill->images) mv.new_images[rename.at(v)] = img;
            replay::apply_move(st, mv);
            moves.push_back(std::move(mv));
        } else {
            std::vector<Vertex> ends;
            for (const auto& e : st.surface.simplices_of_dim(1))
                if (e.has_vertex(w))
                    ends.push_back(e.verts[0] == w ? e.verts[1] : e.verts[0]);
            if (ends.size() != 2) throw InternalError("bad vertex '" + w + "' is not interior");
            std::sort(ends.begin(), ends.end());
            Vertex from = st.images.at(ends[0]), to = st.images.at(ends[1]);
            std::optional<std::vector<Vertex>> path = skeleton_path(punctured, from, to);
            if (!path) {
                Obstruction ob;
                ob.vertex = w;
                ob.image = old_image;
                ob.loop = {from, to};
                ob.punctured_h1 = evidence_h1();
                ob.note = punctured.empty()
                              ? "the punctured closed star of the image is empty"
                              : "the neighbor images lie in different components of the "
                                "punctured closed star";
                out.obstruction = std::move(ob);
                return out;
            }
            const int hops = int(path->size()) - 1;
            const int arc_len = std::max(1, hops - 1);
            StarFillingMove mv;
            mv.cleared = w;
            mv.link = {ends[0], ends[1]};
            for (int i = 0; i < arc_len; ++i)
                mv.ring.push_back("q" + std::to_string(i) + "(" + w + ")");
            for (int i = 0; i < arc_len; ++i)
                mv.new_images[mv.ring[std::size_t(i)]] =
                    hops >= 2 ? (*path)[std::size_t(i) + 1] : (*path)[0];
            replay::apply_move(st, mv);
            moves.push_back(std::move(mv));
        }
    }
    out.stage = stage_from_state(st, std::move(moves));
    return out;
}

PushoffResult pushoff(const PushoffProblem& problem, int budget) {
    PushoffResult result;
    bool already_clear = true;
    for (const auto& [v, img] : problem.f.vertex_images()) {
        (void)v;
        if (problem.obstacle.has_vertex(img)) {
            already_clear = false;
            break;
        }
    }
    if (already_clear) {
        result.cleared = true;
        result.surface = problem.surface;
        result.map = problem.f;
        result.target = problem.space;
        result.obstacle = problem.obstacle;
    } else {
        PipelineStage s1 = step1_clear_triangles(problem);
        PipelineStage s2 = step2_clear_bad_edges(s1);
        Step3Outcome s3 = step3_clear_vertices(s2, budget);
        if (!s3.cleared()) {
            result.cleared = false;
            result.obstruction = s3.obstruction;
            return result;
        }
        const PipelineStage& fin = *s3.stage;
        result.cleared = true;
        result.surface = SurfaceComplex::make(fin.surface, fin.pinned);
        result.map = fin.map;
        result.target = fin.target;
        result.obstacle = fin.obstacle;
        result.certificate.moves = fin.moves;
    }
    VerifyResult check = verify_certificate(problem, result.map, result.certificate);
    if (!check.ok)
        throw InternalError("push-off produced a certificate its own verifier rejects: " +
                            check.reason);
    return result;
}

VerifyResult verify_certificate(const PushoffProblem& problem, const SimplicialMap& h,
                                const PushoffCertificate& cert) {
    try {
        replay::State st = replay::State::initial(problem);
        for (const auto& mv : cert.moves) replay::apply_move(st, mv);
        SimplicialMap replayed = st.to_map();
        if (!(replayed.source() == h.source()))
            return {false, "replayed surface differs from the source of h"};
        if (!(replayed.target() == h.target()))
            return {false, "replayed target differs from the target of h"};
        if (replayed.vertex_images() != h.vertex_images())
            return {false, "replayed map differs from h"};
        for (const auto& [v, img] : replayed.vertex_images())
            if (st.obstacle.has_vertex(img))
                return {false, "vertex '" + v + "' still maps into the obstacle"};
        if (!st.surface.contains_complex(st.pinned))
            return {false, "pinned subcomplex missing from the final surface"};
        for (const auto& v : problem.surface.pinned.vertices()) {
            Vertex expected = st.refined ? barycenter_name(Simplex::of({problem.f(v)}))
                                         : problem.f(v);
            auto it = replayed.vertex_images().find(v);
            if (it == replayed.vertex_images().end())
                return {false, "pinned vertex '" + v + "' missing from the final surface"};
            if (it->second != expected) return {false, "pinned vertex '" + v + "' moved"};
        }
        return {true, ""};
    } catch (const Error& err) {
        return {false, err.what()};
    }
}

} // namespace charvar
