#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "charvar/diskfill.hpp"
#include "charvar/homology.hpp"
#include "charvar/intmatrix.hpp"
#include "charvar/pi1.hpp"
#include "charvar/poly.hpp"

using namespace charvar;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    IntMatrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[std::size_t(r)][std::size_t(c)];
    return m;
}

void check_snf_laws(const IntMatrix& m) {
    SnfResult snf = smith_normal_form(m);
    CHECK(snf.u.mul(m).mul(snf.v) == snf.d);
    Int du = determinant(snf.u), dv = determinant(snf.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (int r = 0; r < snf.d.rows(); ++r)
        for (int c = 0; c < snf.d.cols(); ++c)
            if (r != c) CHECK(snf.d.at(r, c) == 0);
    std::vector<Int> diag = snf.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (i + 1 < diag.size() && diag[i + 1] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    }
}

SimplicialComplex circle(int n) {
    std::vector<std::vector<Vertex>> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({"v" + std::to_string(i), "v" + std::to_string((i + 1) % n)});
    return SimplicialComplex::from_maximal(edges);
}

SimplicialComplex sphere2() {
    return SimplicialComplex::from_maximal(
        {{"0", "1", "2"}, {"0", "1", "3"}, {"0", "2", "3"}, {"1", "2", "3"}});
}

SimplicialComplex rp2() {
    return SimplicialComplex::from_maximal({{"1", "2", "3"},
                                            {"1", "2", "4"},
                                            {"1", "3", "5"},
                                            {"1", "4", "6"},
                                            {"1", "5", "6"},
                                            {"2", "3", "6"},
                                            {"2", "4", "5"},
                                            {"2", "5", "6"},
                                            {"3", "4", "5"},
                                            {"3", "4", "6"}});
}

// 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
SimplicialComplex torus7() {
    std::vector<std::vector<Vertex>> faces;
    auto v = [](int i) { return "t" + std::to_string(((i % 7) + 7) % 7); };
    for (int i = 0; i < 7; ++i) {
        faces.push_back({v(i), v(i + 1), v(i + 3)});
        faces.push_back({v(i), v(i + 2), v(i + 3)});
    }
    return SimplicialComplex::from_maximal(faces);
}

} // namespace

TEST_CASE("matrix basics") {
    IntMatrix a = from_rows({{1, 2}, {3, 4}});
    CHECK(determinant(a) == -2);
    CHECK(a.mul(IntMatrix::identity(2)) == a);
    CHECK(a.transpose().at(0, 1) == 3);
    CHECK(determinant(from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == 30);
    CHECK(determinant(IntMatrix::identity(4)) == 1);
}

TEST_CASE("smith normal form on known matrices") {
    SnfResult a = smith_normal_form(from_rows({{1, 2}, {3, 4}}));
    CHECK(a.diagonal() == std::vector<Int>{1, 2});
    SnfResult b = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    CHECK(b.diagonal() == std::vector<Int>{1, 6});
    SnfResult c = smith_normal_form(from_rows({{1, 1}, {1, 1}}));
    CHECK(c.diagonal() == std::vector<Int>{1, 0});
    CHECK(c.rank() == 1);
    SnfResult z = smith_normal_form(IntMatrix(2, 3));
    CHECK(z.diagonal() == std::vector<Int>{0, 0});
    CHECK(z.rank() == 0);
    SnfResult s = smith_normal_form(from_rows({{6}}));
    CHECK(s.diagonal() == std::vector<Int>{6});
}

TEST_CASE("smith normal form laws on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
        check_snf_laws(m);
    }
}

TEST_CASE("abelian group normal forms") {
    CHECK(FgAbelianGroup::trivial().to_string() == "0");
    CHECK(FgAbelianGroup::free_abelian(1).to_string() == "Z");
    CHECK(FgAbelianGroup::free_abelian(3).to_string() == "Z^3");
    CHECK(FgAbelianGroup::cyclic(4).to_string() == "Z/4");
    CHECK(FgAbelianGroup::cyclic(1).is_trivial());
    FgAbelianGroup mixed{1, {2, 6}};
    CHECK(mixed.to_string() == "Z + Z/2 + Z/6");

    FgAbelianGroup g = FgAbelianGroup::from_smith_diagonal({1, 1, 2, 0}, 5);
    CHECK(g.free_rank == 2);
    CHECK(g.invariant_factors == std::vector<Int>{2});
}

TEST_CASE("homology of known spaces") {
    CHECK(homology(SimplicialComplex::from_maximal({{"p"}})) ==
          std::vector<FgAbelianGroup>{FgAbelianGroup::free_abelian(1)});
    CHECK(homology(SimplicialComplex::from_maximal({{"p"}, {"q"}}))[0] ==
          FgAbelianGroup::free_abelian(2));

    std::vector<FgAbelianGroup> hc = homology(circle(5));
    CHECK(hc[0] == FgAbelianGroup::free_abelian(1));
    CHECK(hc[1] == FgAbelianGroup::free_abelian(1));

    std::vector<FgAbelianGroup> hs = homology(sphere2());
    CHECK(hs[0] == FgAbelianGroup::free_abelian(1));
    CHECK(hs[1].is_trivial());
    CHECK(hs[2] == FgAbelianGroup::free_abelian(1));

    std::vector<FgAbelianGroup> hp = homology(rp2());
    CHECK(hp[0] == FgAbelianGroup::free_abelian(1));
    CHECK(hp[1] == FgAbelianGroup::cyclic(2));
    CHECK(hp[2].is_trivial());

    std::vector<FgAbelianGroup> ht = homology(torus7());
    CHECK(ht[1] == FgAbelianGroup::free_abelian(2));
    CHECK(ht[2] == FgAbelianGroup::free_abelian(1));

    CHECK(euler_characteristic(sphere2()) == 2);
    CHECK(euler_characteristic(rp2()) == 1);
    CHECK(euler_characteristic(torus7()) == 0);
    CHECK(euler_characteristic(circle(6)) == 0);
}

TEST_CASE("boundary of a boundary vanishes") {
    std::vector<IntMatrix> d = boundary_matrices(torus7());
    REQUIRE(d.size() == 3);
    IntMatrix dd = d[1].mul(d[2]);
    for (int r = 0; r < dd.rows(); ++r)
        for (int c = 0; c < dd.cols(); ++c) CHECK(dd.at(r, c) == 0);
}

TEST_CASE("edge-path presentations") {
    GroupPresentation c = pi1_presentation(circle(4), "v0");
    CHECK(c.generators.size() == 1);
    CHECK(c.relators.empty());
    CHECK(abelianization(c) == FgAbelianGroup::free_abelian(1));

    // a generator loop is a cyclic edge walk from the basepoint; the closing
    // edge back to it is implicit, matching what nullhomotopy_search expects
    std::vector<Vertex> loop = c.generator_loop(0);
    REQUIRE(loop.size() >= 2);
    CHECK(loop.front() == "v0");
    const SimplicialComplex X = circle(4);
    for (std::size_t i = 0; i + 1 < loop.size(); ++i)
        CHECK(X.contains(Simplex::of({loop[i], loop[i + 1]})));
    CHECK(X.contains(Simplex::of({loop.back(), loop.front()})));

    CHECK(abelianization(pi1_presentation(sphere2(), "0")).is_trivial());
    CHECK(abelianization(pi1_presentation(rp2(), "1")) == FgAbelianGroup::cyclic(2));
    CHECK(abelianization(pi1_presentation(torus7(), "t0")) == FgAbelianGroup::free_abelian(2));

    // figure eight: two circles sharing the vertex a
    SimplicialComplex eight = SimplicialComplex::from_maximal(
        {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "d"}, {"d", "e"}, {"e", "a"}});
    GroupPresentation p8 = pi1_presentation(eight, "a");
    CHECK(p8.generators.size() == 2);
    CHECK(abelianization(p8) == FgAbelianGroup::free_abelian(2));

    CHECK_THROWS_AS(pi1_presentation(circle(3), "nope"), NotFoundError);
}

TEST_CASE("disk fillings") {
    SimplicialComplex tri = SimplicialComplex::from_simplices({Simplex::of({"a", "b", "c"})});
    auto fill = nullhomotopy_search({"a", "b", "c"}, tri, 2);
    REQUIRE(fill.has_value());
    CHECK(fill->interior_vertices == 0);
    std::string why;
    CHECK(validate_disk_filling(*fill, {"a", "b", "c"}, tri, &why));

    // wheel: rim fillable by coning at the hub
    std::vector<std::vector<Vertex>> wheel;
    std::vector<Vertex> rim;
    for (int i = 0; i < 5; ++i) {
        rim.push_back("x" + std::to_string(i));
        wheel.push_back({"h", "x" + std::to_string(i), "x" + std::to_string((i + 1) % 5)});
    }
    SimplicialComplex W = SimplicialComplex::from_maximal(wheel);
    auto wf = nullhomotopy_search(rim, W, 3);
    REQUIRE(wf.has_value());
    CHECK(validate_disk_filling(*wf, rim, W, nullptr));

    // hollow square: the loop is essential, search must come back empty
    CHECK_FALSE(nullhomotopy_search({"v0", "v1", "v2", "v3"}, circle(4), 4).has_value());

    // stuttering walks are allowed
    auto st = nullhomotopy_search({"a", "a", "b", "c"}, tri, 2);
    REQUIRE(st.has_value());
    CHECK(validate_disk_filling(*st, {"a", "a", "b", "c"}, tri, nullptr));

    // tampering with an image must be caught
    DiskFilling bad = *fill;
    REQUIRE(!bad.images.empty());
    auto& tampered = bad.images.begin()->second;
    tampered = tampered == "a" ? "b" : "a";
    why.clear();
    bool ok = validate_disk_filling(bad, {"a", "b", "c"}, tri, &why);
    if (!ok) CHECK_FALSE(why.empty());
    CHECK_FALSE(ok);
}

TEST_CASE("integer polynomials") {
    CHECK(IntPolynomial().is_zero());
    CHECK(IntPolynomial().to_string() == "0");
    CHECK(IntPolynomial().degree() == -1);
    IntPolynomial p({1, 0, 0, 0, 0, 0, 4});
    p = p + IntPolynomial::monomial(1, 9);
    CHECK(p.to_string() == "1 + 4t^6 + t^9");
    CHECK(IntPolynomial({-1, 1}).to_string() == "-1 + t");
    CHECK(IntPolynomial({0, 2}).to_string() == "2t");
    CHECK(IntPolynomial({0, 0, 1}).to_string() == "t^2");

    IntPolynomial one_plus_t({1, 1});
    CHECK(one_plus_t.pow(2) == IntPolynomial({1, 2, 1}));
    CHECK(one_plus_t.pow(0) == IntPolynomial::constant(1));
    CHECK((one_plus_t * IntPolynomial({1, -1})) == IntPolynomial({1, 0, -1}));
    CHECK(one_plus_t.shifted(3).degree() == 4);
    CHECK((-one_plus_t).coeff(0) == -1);
    CHECK(one_plus_t.coeff(17) == 0);

    IntPolynomial prod = one_plus_t.pow(5);
    CHECK(prod.divide_exact(one_plus_t.pow(2)) == one_plus_t.pow(3));
    CHECK_THROWS_AS(IntPolynomial({1, 1, 1}).divide_exact(IntPolynomial({0, 1})), InternalError);
    CHECK((one_plus_t * Int(3)).coeff(1) == 3);
    CHECK(IntPolynomial({2, 4}).divide_exact(Int(2)) == IntPolynomial({1, 2}));
}

TEST_CASE("binomials and factorials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0); // convention for r < k
    CHECK(binomial(200, 3) == Int(200) * 199 * 198 / 6);
    CHECK(factorial(5) == 120);
    CHECK(factorial(0) == 1);
}
