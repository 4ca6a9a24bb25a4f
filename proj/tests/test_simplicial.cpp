#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charvar/simplicial.hpp"
#include "charvar/subdivision.hpp"

using namespace charvar;

namespace {

SimplicialComplex sphere2() {
    return SimplicialComplex::from_maximal(
        {{"0", "1", "2"}, {"0", "1", "3"}, {"0", "2", "3"}, {"1", "2", "3"}});
}

} // namespace

TEST_CASE("simplex construction and faces") {
    Simplex s = Simplex::of({"c", "a", "b"});
    CHECK(s.verts == std::vector<Vertex>{"a", "b", "c"});
    CHECK(s.dim() == 2);
    CHECK(s.to_string() == "a.b.c");
    CHECK_THROWS_AS(Simplex::of({"a", "a"}), ValidationError);
    CHECK(Simplex::span({"b", "a", "b"}) == Simplex::of({"a", "b"}));
    CHECK(s.faces().size() == 7);
    CHECK(s.contains(Simplex::of({"a", "c"})));
    CHECK_FALSE(s.contains(Simplex::of({"a", "d"})));
    Simplex t = Simplex::of({"b", "c", "d"});
    CHECK(s.intersect(t) == Simplex::of({"b", "c"}));
    CHECK(s.unite(t) == Simplex::of({"a", "b", "c", "d"}));
    CHECK(s.has_vertex("b"));
    CHECK(Simplex().empty());
    CHECK(Simplex().dim() == -1);
}

TEST_CASE("complex closure and queries") {
    SimplicialComplex X = sphere2();
    CHECK(X.size() == 14);
    CHECK(X.dim() == 2);
    CHECK(X.vertices() == std::vector<Vertex>{"0", "1", "2", "3"});
    CHECK(X.maximal_simplices().size() == 4);
    CHECK(X.contains(Simplex::of({"1", "3"})));
    CHECK_FALSE(X.contains(Simplex::of({"0", "1", "2", "3"})));
    CHECK(X.simplices_of_dim(1).size() == 6);
    CHECK(X.neighbors("0") == std::vector<Vertex>{"1", "2", "3"});
    CHECK(SimplicialComplex().empty());
    CHECK(SimplicialComplex().dim() == -1);

    SimplicialComplex tri = SimplicialComplex::from_simplices({Simplex::of({"a", "b", "c"})});
    CHECK(tri.size() == 7);

    // isolated vertices are legitimate maximal simplices
    SimplicialComplex pts = SimplicialComplex::from_maximal({{"p"}, {"q"}});
    CHECK(pts.dim() == 0);
    CHECK(pts.size() == 2);
}

TEST_CASE("full subcomplexes") {
    SimplicialComplex X = SimplicialComplex::from_simplices({Simplex::of({"a", "b", "c"})});
    Subcomplex edge = SimplicialComplex::from_maximal({{"a", "b"}});
    CHECK(is_full_subcomplex(X, edge));
    Subcomplex two = SimplicialComplex::from_maximal({{"a"}, {"b"}});
    CHECK_FALSE(is_full_subcomplex(X, two)); // a.b spans them but is missing
    CHECK(X.contains_complex(edge));
    CHECK_FALSE(edge.contains_complex(X));
}

TEST_CASE("stars, links and density") {
    SimplicialComplex X = sphere2();
    StarAndLink sl = star_and_link(X, Simplex::of({"0"}));
    CHECK(sl.open_star.size() == 7); // the vertex, 3 edges, 3 triangles
    CHECK(sl.link.dim() == 1);
    CHECK(sl.link.size() == 6); // triangle boundary on 1,2,3
    CHECK(sl.link.contains(Simplex::of({"1", "2"})));
    CHECK_FALSE(sl.link.has_vertex("0"));

    Subcomplex st = closed_star(X, Simplex::of({"0"}));
    CHECK(st.size() == 13); // everything but the opposite triangle
    CHECK_FALSE(st.contains(Simplex::of({"1", "2", "3"})));
    CHECK(st.contains(Simplex::of({"1", "2"})));

    CHECK(complement_dense(X, SimplicialComplex::from_maximal({{"0"}})));
    CHECK_FALSE(complement_dense(X, SimplicialComplex::from_maximal({{"1", "2", "3"}})));

    CHECK_NOTHROW(require_subcomplex(X, SimplicialComplex::from_maximal({{"0", "1"}}), "Y"));
    CHECK_THROWS_AS(require_subcomplex(X, SimplicialComplex::from_maximal({{"0", "z"}}), "Y"),
                    ValidationError);
}

TEST_CASE("simplicial maps") {
    SimplicialComplex path = SimplicialComplex::from_maximal({{"a", "b"}, {"b", "c"}});
    SimplicialComplex edge = SimplicialComplex::from_maximal({{"x", "y"}});

    SimplicialMap f =
        SimplicialMap::make(path, edge, {{"a", "x"}, {"b", "y"}, {"c", "x"}});
    CHECK(f("b") == "y");
    CHECK(f.image(Simplex::of({"a", "b"})) == Simplex::of({"x", "y"}));
    CHECK_FALSE(f.is_identity());

    // collapsing an edge to a vertex is simplicial
    SimplicialMap g =
        SimplicialMap::make(path, edge, {{"a", "x"}, {"b", "x"}, {"c", "y"}});
    CHECK(g.image(Simplex::of({"a", "b"})) == Simplex::of({"x"}));

    SimplicialComplex two = SimplicialComplex::from_maximal({{"x"}, {"y"}});
    CHECK_THROWS_AS(
        SimplicialMap::make(path, two, {{"a", "x"}, {"b", "y"}, {"c", "x"}}),
        ValidationError); // image of a.b is not a simplex of the target
    CHECK_THROWS_AS(SimplicialMap::make(path, edge, {{"a", "x"}, {"b", "y"}}),
                    ValidationError); // c has no image
    CHECK_THROWS_AS(
        SimplicialMap::make(path, edge, {{"a", "x"}, {"b", "y"}, {"c", "z"}}),
        ValidationError); // z is not a target vertex

    SimplicialMap id = SimplicialMap::make(edge, edge, {{"x", "x"}, {"y", "y"}});
    CHECK(id.is_identity());

    SimplicialMap h =
        SimplicialMap::make(path, edge, {{"a", "x"}, {"b", "y"}, {"c", "x"}});
    Subcomplex Y = SimplicialComplex::from_maximal({{"x"}});
    Subcomplex pre = preimage_subcomplex(h, Y);
    CHECK(pre.vertex_set() == std::set<Vertex>{"a", "c"});
    CHECK(pre.dim() == 0);
}

TEST_CASE("barycentric subdivision") {
    SimplicialComplex tri = SimplicialComplex::from_simplices({Simplex::of({"a", "b", "c"})});
    SubdivisionRecord rec = barycentric_subdivision(tri);
    CHECK(rec.refined.vertices().size() == 7);
    CHECK(rec.refined.simplices_of_dim(1).size() == 12);
    CHECK(rec.refined.simplices_of_dim(2).size() == 6);
    CHECK(rec.refined.contains(Simplex::of({"(a)", "(a.b)", "(a.b.c)"})));

    CHECK(barycenter_name(Simplex::of({"b", "a"})) == "(a.b)");
    CHECK(rec.vertex_carrier.at("(a.b)") == Simplex::of({"a", "b"}));
    CHECK(rec.vertex_carrier.at("(a)") == Simplex::of({"a"}));
    CHECK(rec.new_vertex_role.at("(a.b.c)").kind == VertexRole::Barycenter);
    CHECK(rec.carrier_of(Simplex::of({"(a)", "(a.b)"})) == Simplex::of({"a", "b"}));
    CHECK(rec.carrier_of(Simplex::of({"(a.b.c)"})) == Simplex::of({"a", "b", "c"}));

    Subcomplex Y = SimplicialComplex::from_maximal({{"a", "b"}});
    Subcomplex Yb = rec.transport(Y);
    CHECK(Yb.size() == 5); // two half edges and three vertices
    CHECK(Yb.contains(Simplex::of({"(a)", "(a.b)"})));
    CHECK_FALSE(Yb.has_vertex("(a.b.c)"));
    CHECK(is_full_subcomplex(rec.refined, Yb));

    // subdividing a sphere keeps the face counts consistent
    SubdivisionRecord sph = barycentric_subdivision(sphere2());
    CHECK(sph.refined.vertices().size() == 14);
    CHECK(sph.refined.simplices_of_dim(2).size() == 24);
}

TEST_CASE("map-adapted subdivision") {
    SimplicialComplex tri = SimplicialComplex::from_simplices({Simplex::of({"a", "b", "c"})});
    SimplicialComplex img = SimplicialComplex::from_simplices({Simplex::of({"x", "y", "z"})});
    SimplicialMap f = SimplicialMap::make(tri, img, {{"a", "x"}, {"b", "y"}, {"c", "z"}});

    FCentricResult res = f_centric_subdivision(f);
    CHECK(res.surface.refined.vertices().size() == 7);
    CHECK(res.surface.refined.simplices_of_dim(2).size() == 6);
    CHECK(res.surface.refined.has_vertex("a")); // originals keep their names
    CHECK(res.surface.refined.has_vertex("m(a.b)"));
    CHECK(res.surface.refined.has_vertex("c(a.b.c)"));
    CHECK(res.refined_map("a") == "(x)");
    CHECK(res.refined_map("m(a.b)") == "(x.y)");
    CHECK(res.refined_map("c(a.b.c)") == "(x.y.z)");
    CHECK(res.target.refined == barycentric_subdivision(img).refined);
    CHECK(res.surface.new_vertex_role.at("c(a.b.c)").kind == VertexRole::Barycenter);

    // collapsed triangle: the interior vertex is a chosen point, weighted so
    // its image is the barycenter of the image edge
    SimplicialComplex seg = SimplicialComplex::from_maximal({{"x", "y"}});
    SimplicialMap g = SimplicialMap::make(tri, seg, {{"a", "x"}, {"b", "x"}, {"c", "y"}});
    FCentricResult rg = f_centric_subdivision(g);
    CHECK(rg.refined_map("c(a.b.c)") == "(x.y)");
    const VertexRole& role = rg.surface.new_vertex_role.at("c(a.b.c)");
    CHECK(role.kind == VertexRole::ChosenPoint);
    CHECK(role.coords.at("c") == Rational(1, 2));
    CHECK(role.coords.at("a") == Rational(1, 4));

    SimplicialComplex path = SimplicialComplex::from_maximal({{"p", "q"}, {"q", "r"}});
    SimplicialMap h = SimplicialMap::make(path, seg, {{"p", "x"}, {"q", "y"}, {"r", "x"}});
    FCentricResult rl = low_dim_refinement(h);
    CHECK(rl.surface.refined.has_vertex("m(p.q)"));
    CHECK(rl.refined_map("m(p.q)") == "(x.y)");
    CHECK(rl.refined_map("q") == "(y)");
}
