#include "charvar/generator.hpp"

#include <random>

namespace charvar {

namespace {

std::string num(int i) { return std::to_string(i); }

GeneratedProblem finish(std::string label, SimplicialComplex X, Subcomplex Y,
                        std::vector<std::vector<Vertex>> surface_top,
                        std::map<Vertex, Vertex> images, bool already_clear = false) {
    GeneratedProblem out;
    out.label = std::move(label);
    SurfaceComplex S =
        SurfaceComplex::make(SimplicialComplex::from_maximal(surface_top), Subcomplex{});
    out.problem = PushoffProblem::make(std::move(X), std::move(Y), std::move(S), std::move(images));
    out.already_clear = already_clear;
    return out;
}

/* Bipyramid over a k-gon mapping onto a coned wheel; the north pole lands on
 * the obstacle vertex and is cleared by a layered star filling. */
GeneratedProblem coned_wheel(int k, int idx) {
    std::vector<std::vector<Vertex>> xt, st;
    for (int i = 0; i < k; ++i) {
        Vertex a = "c" + num(i), b = "c" + num((i + 1) % k);
        xt.push_back({"y", "z", a, b});
        st.push_back({"n", "p" + num(i), "p" + num((i + 1) % k)});
        st.push_back({"s", "p" + num(i), "p" + num((i + 1) % k)});
    }
    std::map<Vertex, Vertex> images{{"n", "y"}, {"s", "z"}};
    for (int i = 0; i < k; ++i) images["p" + num(i)] = "c" + num(i);
    return finish("coned-wheel-k" + num(k) + "-" + num(idx),
                  SimplicialComplex::from_maximal(xt),
                  SimplicialComplex::from_maximal({{"y"}}), st, std::move(images));
}

std::vector<std::vector<Vertex>> sphere_faces(const std::string& prefix) {
    Vertex a = prefix + "0", b = prefix + "1", c = prefix + "2", d = prefix + "3";
    return {{a, b, c}, {a, b, d}, {a, c, d}, {b, c, d}};
}

SimplicialComplex suspension_of_sphere() {
    std::vector<std::vector<Vertex>> top;
    for (const auto& f : sphere_faces("t"))
        for (const auto& pole : {"a", "b"}) {
            std::vector<Vertex> t{pole};
            t.insert(t.end(), f.begin(), f.end());
            top.push_back(std::move(t));
        }
    return SimplicialComplex::from_maximal(top);
}

/* Sphere with one vertex on a suspension pole; a single wheel fills the
 * link walk. */
GeneratedProblem suspension_sphere(int idx) {
    std::map<Vertex, Vertex> images{{"s0", "a"}, {"s1", "t1"}, {"s2", "t2"}, {"s3", "t3"}};
    return finish("suspension-sphere-" + num(idx), suspension_of_sphere(),
                  SimplicialComplex::from_maximal({{"a"}}), sphere_faces("s"),
                  std::move(images));
}

/* Sphere with an edge landing on an edge obstacle inside a join with a
 * 4-cycle; reachability needs several hops around the cycle. */
GeneratedProblem edge_obstacle(int idx) {
    std::vector<std::vector<Vertex>> xt;
    const std::vector<Vertex> cyc{"p", "u", "q", "v"};
    for (std::size_t i = 0; i < cyc.size(); ++i)
        xt.push_back({"y0", "y1", cyc[i], cyc[(i + 1) % cyc.size()]});
    std::map<Vertex, Vertex> images{{"e0", "y0"}, {"e1", "y1"}, {"e2", "p"}, {"e3", "u"}};
    return finish("edge-obstacle-" + num(idx), SimplicialComplex::from_maximal(xt),
                  SimplicialComplex::from_maximal({{"y0", "y1"}}), sphere_faces("e"),
                  std::move(images));
}

/* Sphere with a whole edge collapsed onto the obstacle vertex of a coned
 * 4-cycle: a degenerate bad edge (j = 2) plus three star fillings. */
GeneratedProblem collapsed_edge(int idx) {
    std::vector<std::vector<Vertex>> xt;
    const std::vector<Vertex> cyc{"p", "u", "q", "v"};
    for (std::size_t i = 0; i < cyc.size(); ++i)
        xt.push_back({"y", cyc[i], cyc[(i + 1) % cyc.size()]});
    std::map<Vertex, Vertex> images{{"e0", "y"}, {"e1", "y"}, {"e2", "p"}, {"e3", "u"}};
    return finish("collapsed-edge-" + num(idx), SimplicialComplex::from_maximal(xt),
                  SimplicialComplex::from_maximal({{"y"}}), sphere_faces("e"),
                  std::move(images));
}

/* Circle through the apex of a coned polygon; cleared by the path version of
 * the star replacement. */
GeneratedProblem circle_through_apex(int gon, bool spread, int idx) {
    std::vector<std::vector<Vertex>> xt;
    for (int i = 0; i < gon; ++i) xt.push_back({"z", "x" + num(i), "x" + num((i + 1) % gon)});
    std::vector<std::vector<Vertex>> st{{"a0", "a1"}, {"a1", "a2"}, {"a2", "a3"}, {"a3", "a0"}};
    std::map<Vertex, Vertex> images{
        {"a0", "z"}, {"a1", "x0"}, {"a2", "x1"}, {"a3", spread ? "x1" : "x0"}};
    return finish("circle-apex-g" + num(gon) + (spread ? "-spread-" : "-tight-") + num(idx),
                  SimplicialComplex::from_maximal(xt),
                  SimplicialComplex::from_maximal({{"z"}}), st, std::move(images));
}

/* Two disjoint spheres, one touching the obstacle pole and one entirely
 * clean; the clean one must come through untouched apart from refinement. */
GeneratedProblem disjoint_pair(int idx) {
    std::vector<std::vector<Vertex>> st = sphere_faces("s");
    for (const auto& f : sphere_faces("r")) st.push_back(f);
    std::map<Vertex, Vertex> images{{"s0", "a"}, {"s1", "t1"}, {"s2", "t2"}, {"s3", "t3"}};
    for (int i = 0; i < 4; ++i) images["r" + num(i)] = "t" + num(i);
    return finish("disjoint-pair-" + num(idx), suspension_of_sphere(),
                  SimplicialComplex::from_maximal({{"a"}}), st, std::move(images));
}

/* Already off the obstacle: the pipeline must return the input map with an
 * empty certificate. */
GeneratedProblem untouched_sphere(int idx) {
    std::map<Vertex, Vertex> images;
    for (int i = 0; i < 4; ++i) images["r" + num(i)] = "t" + num(i);
    GeneratedProblem out = finish("untouched-sphere-" + num(idx), suspension_of_sphere(),
                                  SimplicialComplex::from_maximal({{"a"}}), sphere_faces("r"),
                                  std::move(images), true);
    return out;
}

} // namespace

std::vector<GeneratedProblem> generate_problem_suite(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<GeneratedProblem> out;
    int idx = 0;
    while (int(out.size()) < count) {
        switch (idx % 7) {
            case 0: out.push_back(coned_wheel(3 + int(rng() % 2), idx)); break;
            case 1: out.push_back(suspension_sphere(idx)); break;
            case 2: out.push_back(edge_obstacle(idx)); break;
            case 3: out.push_back(collapsed_edge(idx)); break;
            case 4: out.push_back(circle_through_apex(4 + int(rng() % 3), rng() % 2 == 0, idx)); break;
            case 5: out.push_back(disjoint_pair(idx)); break;
            default: out.push_back(untouched_sphere(idx)); break;
        }
        ++idx;
    }
    return out;
}

} // namespace charvar
