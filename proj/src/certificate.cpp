#include "charvar/certificate.hpp"

#include <algorithm>
#include <set>

#include "charvar/diskfill.hpp"
#include "charvar/hypotheses.hpp"
#include "charvar/pushoff.hpp"
#include "charvar/subdivision.hpp"
#include "replay.hpp"

namespace charvar {

const char* move_kind(const CertMove& m) {
    struct Visitor {
        const char* operator()(const RefineMove&) const { return "refine"; }
        const char* operator()(const ConeTargetMove&) const { return "cone-target"; }
        const char* operator()(const DiskFactorizationMove&) const { return "disk-factorization"; }
        const char* operator()(const StarFillingMove&) const { return "star-filling"; }
    };
    return std::visit(Visitor{}, m);
}

namespace replay {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw ValidationError("certificate replay: " + msg);
}

void require(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
}

void apply_one(State& st, const RefineMove&) {
    require(!st.refined && st.moves_applied == 0, "refinement must be the single first move");
    SimplicialMap cur = st.to_map();
    FCentricResult res =
        st.surface.dim() == 2 ? f_centric_subdivision(cur) : low_dim_refinement(cur);
    st.pinned = res.surface.transport(st.pinned);
    st.surface = res.surface.refined;
    st.obstacle = res.target.transport(st.obstacle);
    st.target = res.target.refined;
    st.images = res.refined_map.vertex_images();
    st.target_carrier = res.target.vertex_carrier;
    st.refined = true;
}

void apply_one(State& st, const ConeTargetMove& mv) {
    require(st.refined, "cone-target before refinement");
    require(st.surface.has_vertex(mv.center), "cone center '" + mv.center + "' not in the surface");
    require(!st.pinned.has_vertex(mv.center), "cone center '" + mv.center + "' is pinned");
    require(st.space.contains(mv.escape),
            "escape simplex " + mv.escape.to_string() + " not in the original target");
    require(!st.space_obstacle.contains(mv.escape),
            "escape simplex " + mv.escape.to_string() + " lies in the obstacle");
    /* Old and new images of the whole closed star must stay in the closure of
     * the escape simplex; that closure is a cone, which justifies the move. */
    Subcomplex star = closed_star(st.surface, Simplex::of({mv.center}));
    for (const auto& u : star.vertices()) {
        auto img = st.images.find(u);
        require(img != st.images.end(), "vertex '" + u + "' has no image");
        auto carrier = st.target_carrier.find(img->second);
        require(carrier != st.target_carrier.end(),
                "image '" + img->second + "' has no recorded carrier");
        require(mv.escape.contains(carrier->second),
                "closed star of '" + mv.center + "' leaves the escape simplex");
    }
    Vertex moved = barycenter_name(mv.escape);
    require(st.target.has_vertex(moved), "escape barycenter missing from the refined target");
    st.images[mv.center] = moved;
    st.to_map();
}

void apply_one(State& st, const DiskFactorizationMove& mv) {
    require(st.refined, "disk factorization before refinement");
    require(st.surface.dim() == 2, "disk factorization needs a 2-dimensional surface");
    require(mv.bad_edge.dim() == 1 && st.surface.contains(mv.bad_edge),
            "bad edge " + mv.bad_edge.to_string() + " not an edge of the surface");
    std::vector<Simplex> around;
    for (const auto& t : st.surface.simplices_of_dim(2))
        if (t.contains(mv.bad_edge)) around.push_back(t);
    require(around.size() == 2, "bad edge is not interior");
    const Vertex& e0 = mv.bad_edge.verts[0];
    const Vertex& e1 = mv.bad_edge.verts[1];
    auto opposite = [&](const Simplex& t) {
        for (const auto& v : t.verts)
            if (v != e0 && v != e1) return v;
        fail("degenerate triangle around the bad edge");
    };
    require(mv.s != mv.t, "side vertices coincide");
    Simplex sigma, tau;
    if (opposite(around[0]) == mv.s && opposite(around[1]) == mv.t) {
        sigma = around[0];
        tau = around[1];
    } else if (opposite(around[1]) == mv.s && opposite(around[0]) == mv.t) {
        sigma = around[1];
        tau = around[0];
    } else {
        fail("side vertices do not match the triangles around the bad edge");
    }
    require(!st.pinned.contains(mv.bad_edge) && !st.pinned.contains(sigma) &&
                !st.pinned.contains(tau),
            "quad around the bad edge touches the pinned subcomplex");

    SimplicialMap cur = st.to_map();
    Simplex edge_image = cur.image(mv.bad_edge);
    require(st.obstacle.contains(edge_image), "edge image is not inside the obstacle");
    require(mv.j == edge_image.dim() + 2, "aux disk dimension does not match the edge image");
    const int m = int(mv.sequence.size());
    require(m >= 1, "empty reachability sequence");
    require(int(mv.waypoints.size()) == m + 1, "waypoint count must be sequence length + 1");
    require(int(mv.fresh.size()) == m - 1, "fresh vertex count must be sequence length - 1");

    for (const auto& d : mv.sequence) {
        require(st.target.contains(d), "sequence simplex " + d.to_string() + " not in the target");
        require(d.contains(edge_image), "sequence simplex does not contain the edge image");
        require(!st.obstacle.contains(d), "sequence simplex lies in the obstacle");
    }
    require(mv.sequence.front().contains(cur.image(sigma)),
            "first sequence simplex must contain the sigma-side image");
    require(mv.sequence.back() == cur.image(tau),
            "last sequence simplex must equal the tau-side image");
    for (int i = 0; i + 1 < m; ++i) {
        Simplex shared = mv.sequence[std::size_t(i)].intersect(mv.sequence[std::size_t(i) + 1]);
        require(!shared.empty(), "consecutive sequence simplices are disjoint");
        require(!st.obstacle.contains(shared),
                "consecutive sequence simplices meet only inside the obstacle");
    }
    require(mv.waypoints.front() == cur(mv.s) && mv.waypoints.back() == cur(mv.t),
            "end waypoints must be the side-vertex images");
    for (const auto& w : mv.waypoints) {
        require(st.target.has_vertex(w), "waypoint '" + w + "' not a target vertex");
        require(!st.obstacle.has_vertex(w), "waypoint '" + w + "' lies in the obstacle");
    }
    for (int i = 1; i <= m; ++i) {
        const Simplex& d = mv.sequence[std::size_t(i) - 1];
        require(d.has_vertex(mv.waypoints[std::size_t(i) - 1]) &&
                    d.has_vertex(mv.waypoints[std::size_t(i)]),
                "waypoint outside its panel simplex");
    }
    std::set<Vertex> fresh_set(mv.fresh.begin(), mv.fresh.end());
    require(fresh_set.size() == mv.fresh.size(), "duplicate fresh vertex names");
    for (const auto& u : mv.fresh)
        require(!st.surface.has_vertex(u), "fresh vertex '" + u + "' already in the surface");

    /* Build the aux fan disk D and check that both quads factor through it. */
    std::vector<Vertex> poles{"w0"};
    if (mv.j == 3)
        poles.push_back("w1");
    else
        require(cur(e0) == cur(e1), "j = 2 needs the edge endpoints to share an image");
    auto vname = [](int i) { return "v" + std::to_string(i); };
    std::vector<std::vector<Vertex>> disk_top;
    for (int i = 1; i <= m; ++i) {
        std::vector<Vertex> top = poles;
        top.push_back(vname(i));
        top.push_back(vname(i + 1));
        disk_top.push_back(std::move(top));
    }
    SimplicialComplex D = SimplicialComplex::from_maximal(disk_top);
    std::map<Vertex, Vertex> p_img;
    p_img["w0"] = cur(e0);
    if (mv.j == 3) p_img["w1"] = cur(e1);
    for (int i = 1; i <= m + 1; ++i) p_img[vname(i)] = mv.waypoints[std::size_t(i) - 1];
    SimplicialMap p = SimplicialMap::make(D, st.target, p_img);

    std::map<Vertex, Vertex> q_img;
    q_img[e0] = "w0";
    q_img[e1] = mv.j == 3 ? "w1" : "w0";
    q_img[mv.s] = vname(1);
    q_img[mv.t] = vname(m + 1);
    SimplicialMap q = SimplicialMap::make(
        SimplicialComplex::from_maximal({sigma.verts, tau.verts}), D, q_img);
    for (const auto& [v, d] : q.vertex_images())
        require(p(d) == cur(v), "old quad map fails to factor through the aux disk");

    std::vector<Vertex> path{mv.s};
    path.insert(path.end(), mv.fresh.begin(), mv.fresh.end());
    path.push_back(mv.t);
    std::vector<std::vector<Vertex>> new_quad;
    for (int i = 0; i < m; ++i) {
        new_quad.push_back({e0, path[std::size_t(i)], path[std::size_t(i) + 1]});
        new_quad.push_back({e1, path[std::size_t(i)], path[std::size_t(i) + 1]});
    }
    std::map<Vertex, Vertex> qp_img;
    qp_img[e0] = "w0";
    qp_img[e1] = mv.j == 3 ? "w1" : "w0";
    for (int i = 0; i <= m; ++i) qp_img[path[std::size_t(i)]] = vname(i + 1);
    SimplicialMap qp =
        SimplicialMap::make(SimplicialComplex::from_maximal(new_quad), D, qp_img);
    for (const auto& v : {e0, e1, mv.s, mv.t})
        require(qp(v) == q(v), "old and new quads disagree on the quad boundary");

    /* Retriangulate: drop the two triangles, insert the suspension panels. */
    std::vector<std::vector<Vertex>> new_max;
    for (const auto& t : st.surface.maximal_simplices())
        if (t != sigma && t != tau) new_max.push_back(t.verts);
    for (const auto& t : new_quad) new_max.push_back(t);
    SimplicialComplex next = SimplicialComplex::from_maximal(new_max);
    require(!next.contains(mv.bad_edge), "bad edge survived the retriangulation");
    require_surface(next);
    require(next.contains_complex(st.pinned), "pinned subcomplex damaged");
    st.surface = std::move(next);
    for (int i = 1; i < m; ++i)
        st.images[path[std::size_t(i)]] = mv.waypoints[std::size_t(i)];
    SimplicialMap out = st.to_map();
    for (const auto& t : new_quad)
        for (const auto& e : Simplex::of(t).faces())
            if (e.dim() == 1)
                require(!st.obstacle.contains(out.image(e)),
                        "a replacement edge maps into the obstacle");
}

void apply_one(State& st, const StarFillingMove& mv) {
    require(st.refined, "star filling before refinement");
    const int sdim = st.surface.dim();
    require(sdim == 1 || sdim == 2, "star filling applies to 1- or 2-dimensional surfaces");
    require(st.surface.has_vertex(mv.cleared),
            "cleared vertex '" + mv.cleared + "' not in the surface");
    require(!st.pinned.has_vertex(mv.cleared), "cleared vertex '" + mv.cleared + "' is pinned");
    auto img_it = st.images.find(mv.cleared);
    require(img_it != st.images.end(), "cleared vertex has no image");
    const Vertex old_image = img_it->second;
    require(st.obstacle.has_vertex(old_image), "cleared vertex does not map into the obstacle");

    std::set<Vertex> link_set(mv.link.begin(), mv.link.end());
    require(link_set.size() == mv.link.size(), "link walk repeats a vertex");
    std::set<Vertex> ring_set(mv.ring.begin(), mv.ring.end());
    require(ring_set.size() == mv.ring.size(), "duplicate ring name");
    for (const auto& [v, img] : mv.new_images) {
        require(!st.surface.has_vertex(v), "replacement vertex '" + v + "' already in the surface");
        require(st.target.has_vertex(img), "replacement image '" + img + "' not a target vertex");
    }
    for (const auto& r : mv.ring)
        require(mv.new_images.count(r) > 0, "ring vertex '" + r + "' has no image");

    Subcomplex punctured = punctured_closed_star(st.target, st.obstacle, old_image);

    std::vector<std::vector<Vertex>> new_max;
    if (sdim == 2) {
        const int L = int(mv.link.size());
        require(L >= 3, "link cycle too short");
        require(int(mv.ring.size()) == L, "ring size must match the link");
        std::set<Simplex> star_tris, expected;
        for (const auto& t : st.surface.simplices_of_dim(2))
            if (t.has_vertex(mv.cleared)) star_tris.insert(t);
        for (int i = 0; i < L; ++i)
            expected.insert(Simplex::of(
                {mv.cleared, mv.link[std::size_t(i)], mv.link[std::size_t((i + 1) % L)]}));
        require(star_tris == expected, "link walk does not trace the star of the cleared vertex");

        std::set<Vertex> disk_verts;
        std::vector<Simplex> disk_simps;
        for (const auto& t : mv.disk_triangles) {
            require(t.dim() == 2, "disk triangles must be 2-dimensional");
            for (const auto& v : t.verts) disk_verts.insert(v);
            disk_simps.push_back(t);
        }
        for (const auto& v : disk_verts)
            require(mv.new_images.count(v) > 0, "disk vertex '" + v + "' has no image");
        for (const auto& [v, img] : mv.new_images) {
            (void)img;
            require(disk_verts.count(v) > 0, "image given for '" + v + "' outside the disk");
        }
        DiskFilling fill;
        fill.disk = SimplicialComplex::from_simplices(disk_simps);
        fill.boundary = mv.ring;
        fill.images = mv.new_images;
        fill.interior_vertices = int(disk_verts.size()) - L;
        std::vector<Vertex> walk;
        for (const auto& l : mv.link) walk.push_back(st.images.at(l));
        std::string why;
        require(validate_disk_filling(fill, walk, punctured, &why), "disk filling invalid: " + why);

        for (const auto& t : st.surface.maximal_simplices())
            if (!t.has_vertex(mv.cleared)) new_max.push_back(t.verts);
        for (int i = 0; i < L; ++i) {
            std::size_t a = std::size_t(i), b = std::size_t((i + 1) % L);
            new_max.push_back({mv.link[a], mv.link[b], mv.ring[a]});
            new_max.push_back({mv.link[b], mv.ring[a], mv.ring[b]});
        }
        for (const auto& t : mv.disk_triangles) new_max.push_back(t.verts);
    } else {
        require(mv.link.size() == 2 && mv.link[0] != mv.link[1], "path star needs two distinct ends");
        require(mv.disk_triangles.empty(), "path star carries no disk triangles");
        require(!mv.ring.empty(), "arc must contain at least one fresh vertex");
        std::set<Simplex> star_edges, expected;
        for (const auto& e : st.surface.simplices_of_dim(1))
            if (e.has_vertex(mv.cleared)) star_edges.insert(e);
        expected = {Simplex::of({mv.cleared, mv.link[0]}), Simplex::of({mv.cleared, mv.link[1]})};
        require(star_edges == expected, "link does not trace the star of the cleared vertex");
        for (const auto& [v, img] : mv.new_images) {
            (void)img;
            require(ring_set.count(v) > 0, "image given for '" + v + "' outside the arc");
        }
        std::vector<Vertex> chain{st.images.at(mv.link[0])};
        for (const auto& r : mv.ring) chain.push_back(mv.new_images.at(r));
        chain.push_back(st.images.at(mv.link[1]));
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            require(punctured.contains(Simplex::span({chain[i], chain[i + 1]})),
                    "arc leaves the punctured closed star");

        for (const auto& e : st.surface.maximal_simplices())
            if (!e.has_vertex(mv.cleared)) new_max.push_back(e.verts);
        std::vector<Vertex> arc{mv.link[0]};
        arc.insert(arc.end(), mv.ring.begin(), mv.ring.end());
        arc.push_back(mv.link[1]);
        for (std::size_t i = 0; i + 1 < arc.size(); ++i)
            new_max.push_back({arc[i], arc[i + 1]});
    }
    SimplicialComplex next = SimplicialComplex::from_maximal(new_max);
    require(!next.has_vertex(mv.cleared), "cleared vertex survived the replacement");
    require_surface(next);
    require(next.contains_complex(st.pinned), "pinned subcomplex damaged");
    st.surface = std::move(next);
    st.images.erase(mv.cleared);
    for (const auto& [v, img] : mv.new_images) st.images[v] = img;
    st.to_map();
}

} // namespace

State State::initial(const PushoffProblem& problem) {
    State st;
    st.space = problem.space;
    st.space_obstacle = problem.obstacle;
    st.surface = problem.surface.complex;
    st.pinned = problem.surface.pinned;
    st.target = problem.space;
    st.obstacle = problem.obstacle;
    st.images = problem.f.vertex_images();
    return st;
}

State State::from_stage(const PipelineStage& stage) {
    State st;
    st.surface = stage.surface;
    st.pinned = stage.pinned;
    st.target = stage.target;
    st.obstacle = stage.obstacle;
    st.images = stage.map.vertex_images();
    st.refined = true;
    st.moves_applied = int(stage.moves.size());
    return st;
}

SimplicialMap State::to_map() const { return SimplicialMap::make(surface, target, images); }

void apply_move(State& st, const CertMove& move) {
    std::visit([&](const auto& m) { apply_one(st, m); }, move);
    ++st.moves_applied;
}

} // namespace replay

} // namespace charvar
