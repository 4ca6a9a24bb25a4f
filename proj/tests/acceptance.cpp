#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "charvar/charvar.hpp"
#include "charvar/generator.hpp"
#include "charvar/homology.hpp"
#include "charvar/hypotheses.hpp"
#include "charvar/intmatrix.hpp"
#include "charvar/pushoff.hpp"
#include "charvar/subdivision.hpp"

using namespace charvar;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

void criterion(int number, const std::string& name, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    try {
        body();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("PASS  criterion %2d: %s (%lld ms)\n", number, name.c_str(),
                    static_cast<long long>(ms));
    } catch (const std::exception& e) {
        ++g_failures;
        std::printf("FAIL  criterion %2d: %s: %s\n", number, name.c_str(), e.what());
    }
}

std::string show(const IntPolynomial& p) { return p.to_string(); }

// ---- fixtures ----------------------------------------------------------

SimplicialComplex sphere2(const std::string& p) {
    return SimplicialComplex::from_maximal({{p + "0", p + "1", p + "2"},
                                            {p + "0", p + "1", p + "3"},
                                            {p + "0", p + "2", p + "3"},
                                            {p + "1", p + "2", p + "3"}});
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

SimplicialComplex wheel6() {
    std::vector<std::vector<Vertex>> faces;
    for (int i = 0; i < 6; ++i)
        faces.push_back({"z", "x" + std::to_string(i), "x" + std::to_string((i + 1) % 6)});
    return SimplicialComplex::from_maximal(faces);
}

// circle through the cone point of a triangulated disk
PushoffProblem circle_instance() {
    SurfaceComplex S = SurfaceComplex::make(
        SimplicialComplex::from_maximal({{"a0", "a1"}, {"a1", "a2"}, {"a2", "a3"}, {"a3", "a0"}}),
        {});
    return PushoffProblem::make(wheel6(), SimplicialComplex::from_maximal({{"z"}}), S,
                                {{"a0", "z"}, {"a1", "x0"}, {"a2", "x1"}, {"a3", "x0"}});
}

// 2-sphere through one vertex of the 4-simplex boundary
PushoffProblem pole_sphere_instance() {
    std::vector<std::vector<Vertex>> tets;
    const std::vector<Vertex> w{"w0", "w1", "w2", "w3", "w4"};
    for (std::size_t skip = 0; skip < w.size(); ++skip) {
        std::vector<Vertex> t;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (i != skip) t.push_back(w[i]);
        tets.push_back(std::move(t));
    }
    return PushoffProblem::make(
        SimplicialComplex::from_maximal(tets), SimplicialComplex::from_maximal({{"w4"}}),
        SurfaceComplex::make(sphere2("s"), {}),
        {{"s0", "w0"}, {"s1", "w1"}, {"s2", "w2"}, {"s3", "w4"}});
}

// disk with a pinned rim, its interior vertex on the obstacle pole
PushoffProblem pinned_disk_instance() {
    std::vector<std::vector<Vertex>> xt, disk;
    const SimplicialComplex ts = sphere2("t");
    for (const auto& f : ts.maximal_simplices())
        for (const auto& pole : {"a", "b"}) {
            std::vector<Vertex> t{pole};
            t.insert(t.end(), f.verts.begin(), f.verts.end());
            xt.push_back(std::move(t));
        }
    for (int i = 0; i < 4; ++i)
        disk.push_back({"d", "b" + std::to_string(i), "b" + std::to_string((i + 1) % 4)});
    SimplicialComplex D = SimplicialComplex::from_maximal(disk);
    SurfaceComplex S = SurfaceComplex::make(D, surface_boundary(D));
    return PushoffProblem::make(
        SimplicialComplex::from_maximal(xt), SimplicialComplex::from_maximal({{"a"}}),
        std::move(S),
        {{"d", "a"}, {"b0", "t0"}, {"b1", "t1"}, {"b2", "t2"}, {"b3", "t1"}});
}

bool image_misses(const SimplicialMap& h, const Subcomplex& obstacle) {
    for (const auto& [v, w] : h.vertex_images()) {
        (void)v;
        if (obstacle.has_vertex(w)) return false;
    }
    return true;
}

std::string shape_key(const std::string& label) {
    auto cut = label.rfind('-');
    if (cut == std::string::npos) return label;
    for (std::size_t i = cut + 1; i < label.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(label[i]))) return label;
    return label.substr(0, cut);
}

void run_and_check(const PushoffProblem& problem, int budget, const std::string& what) {
    PushoffResult res = pushoff(problem, budget);
    expect(res.cleared, what + ": not cleared");
    expect(image_misses(res.map, res.obstacle), what + ": image still meets the obstacle");
    VerifyResult vr = verify_certificate(problem, res.map, res.certificate);
    expect(vr.ok, what + ": certificate rejected: " + vr.reason);
}

} // namespace

int main() {
    criterion(1, "Poincare golden values r = 1..4", [] {
        expect(show(poincare_su2(1)) == "1", "r=1");
        expect(show(poincare_su2(2)) == "1", "r=2");
        expect(show(poincare_su2(3)) == "1 + t^6", "r=3");
        expect(show(poincare_su2(4)) == "1 + 4t^6 + t^9", "r=4");
    });

    criterion(2, "rational and series forms agree up to r = 200", [] {
        const IntPolynomial one_plus_t({1, 1});
        const IntPolynomial one_minus_t4({1, 0, 0, 0, -1});
        for (long r = 1; r <= 200; ++r) {
            IntPolynomial p = poincare_su2(r, PoincareMethod::Both); // throws on mismatch
            PoincareParts parts = poincare_su2_parts(r);
            expect((p - one_plus_t) * one_minus_t4 == parts.q.shifted(1),
                   "reduced-form identity fails at r = " + std::to_string(r));
        }
    });

    criterion(3, "degree law and b_6 coefficient up to r = 200", [] {
        for (long r = 2; r <= 200; ++r) {
            IntPolynomial p = poincare_su2(r);
            expect(p.coeff(6) == binomial(r, 3), "b_6 at r = " + std::to_string(r));
            for (long k = 1; k <= 5; ++k)
                expect(p.coeff(k) == 0, "low-degree coefficient at r = " + std::to_string(r));
            if (r < 3) continue;
            DegreeTop dt = degree_and_top(r);
            expect(dt.degree == 3 * r - 3 && dt.top == 1 && p.degree() == dt.degree,
                   "degree law at r = " + std::to_string(r));
        }
    });

    criterion(4, "duality fails for every r >= 4, with k = 4 from r >= 5", [] {
        expect(duality_check(3).symmetric(), "r = 3 should be symmetric");
        for (long r = 4; r <= 200; ++r) {
            DualityReport rep = duality_check(r);
            expect(!rep.symmetric(), "r = " + std::to_string(r) + " should fail duality");
            if (r < 5) continue;
            bool k4 = false;
            for (const auto& mm : rep.mismatches)
                if (mm.k == 4 && mm.b_k == 0) k4 = true;
            expect(k4, "missing k = 4 mismatch at r = " + std::to_string(r));
        }
    });

    criterion(5, "homotopy table spot checks and pi_2 = 0", [] {
        const Family fams[] = {Family::GL, Family::SL, Family::U, Family::SU};
        for (Family fam : fams) {
            for (long r = 3; r <= 10; ++r) {
                HomotopyAnswer k2 = pi_k_irr(fam, 2, r, 2);
                expect(k2.kind == HomotopyAnswer::Kind::GROUP &&
                           *k2.group == FgAbelianGroup::cyclic(2),
                       "k=2, n=2 row");
                HomotopyAnswer k3 = pi_k_irr(fam, 3, r, 3);
                expect(k3.kind == HomotopyAnswer::Kind::GROUP &&
                           *k3.group == FgAbelianGroup::free_abelian(int(r)),
                       "k=3 row");
                HomotopyAnswer k4 = pi_k_irr(fam, 3, r, 4);
                expect(k4.kind == HomotopyAnswer::Kind::GROUP &&
                           *k4.group == FgAbelianGroup::free_abelian(1),
                       "k=4, n=3 row");
            }
            for (long r = 4; r <= 10; ++r) {
                HomotopyAnswer top = pi_k_irr(fam, 2, r, 4);
                expect(top.kind == HomotopyAnswer::Kind::GROUP, "k=2n row kind");
                expect(top.group->free_rank == 1 &&
                           top.group->invariant_factors ==
                               std::vector<Int>(std::size_t(r), Int(2)),
                       "k=2n row value");
            }
            for (long n = 1; n <= 10; ++n)
                for (long r = 1; r <= 10; ++r)
                    expect(pi2_full(fam, n, r).is_trivial(), "pi_2 must vanish");
        }
    });

    criterion(6, "codimension special cases (GL,2,2) and (SL,2,2)", [] {
        CodimBounds gl = codim_bounds(Family::GL, 2, 2);
        expect(gl.singular.has_value() && *gl.singular == 5, "(GL,2,2) singular codim");
        CodimBounds sl = codim_bounds(Family::SL, 2, 2);
        expect(sl.singular.has_value() && *sl.singular == 3, "(SL,2,2) singular codim");
        expect(gl.reducible_lower_complex == 1 && gl.reducible_lower_real == 2,
               "(GL,2,2) reducible bounds");
    });

    criterion(7, "homology oracle and subdivision invariance", [] {
        std::vector<FgAbelianGroup> hs = homology(sphere2("v"));
        expect(hs.size() == 3 && hs[0] == FgAbelianGroup::free_abelian(1) &&
                   hs[1].is_trivial() && hs[2] == FgAbelianGroup::free_abelian(1),
               "boundary tetrahedron");
        expect(homology(rp2())[1] == FgAbelianGroup::cyclic(2), "projective plane");

        std::mt19937_64 rng(20240801);
        for (int trial = 0; trial < 50; ++trial) {
            int n = 1 + int(rng() % 7);
            std::vector<std::vector<Vertex>> maximal;
            int pieces = 1 + int(rng() % 5);
            for (int p = 0; p < pieces; ++p) {
                int size = 1 + int(rng() % std::min(4, n));
                std::vector<int> pool(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) pool[std::size_t(i)] = i;
                std::shuffle(pool.begin(), pool.end(), rng);
                std::vector<Vertex> cell;
                for (int i = 0; i < size; ++i) cell.push_back("v" + std::to_string(pool[std::size_t(i)]));
                maximal.push_back(std::move(cell));
            }
            SimplicialComplex X = SimplicialComplex::from_maximal(maximal);
            expect(homology(X) == homology(barycentric_subdivision(X).refined),
                   "homology changed under subdivision, trial " + std::to_string(trial));
        }
    });

    criterion(8, "Smith normal form laws on 500 random matrices", [] {
        std::mt19937_64 rng(4096);
        std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9);
        for (int trial = 0; trial < 500; ++trial) {
            IntMatrix m(dim(rng), dim(rng));
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
            SnfResult snf = smith_normal_form(m);
            expect(snf.u.mul(m).mul(snf.v) == snf.d, "U M V != D");
            Int du = determinant(snf.u), dv = determinant(snf.v);
            expect((du == 1 || du == -1) && (dv == 1 || dv == -1), "not unimodular");
            std::vector<Int> diag = snf.diagonal();
            for (int r = 0; r < snf.d.rows(); ++r)
                for (int c = 0; c < snf.d.cols(); ++c)
                    if (r != c) expect(snf.d.at(r, c) == 0, "off-diagonal entry");
            for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
                expect(diag[i] >= 0, "negative diagonal");
                if (diag[i + 1] != 0)
                    expect(diag[i] != 0 && diag[i + 1] % diag[i] == 0, "divisibility chain");
            }
        }
    });

    criterion(9, "push-off postconditions on the generated suite", [] {
        run_and_check(circle_instance(), 12, "circle through the cone point");
        run_and_check(pole_sphere_instance(), 12, "sphere through a 4-simplex pole");

        PushoffProblem pinned = pinned_disk_instance();
        PushoffResult pres = pushoff(pinned, 12);
        expect(pres.cleared, "pinned disk: not cleared");
        expect(image_misses(pres.map, pres.obstacle), "pinned disk: image meets the obstacle");
        for (const auto& v : pinned.surface.pinned.vertices())
            expect(pres.map(v) == barycenter_name(Simplex::of({pinned.f(v)})),
                   "pinned disk: pinned vertex '" + v + "' moved");
        VerifyResult pv = verify_certificate(pinned, pres.map, pres.certificate);
        expect(pv.ok, "pinned disk: certificate rejected: " + pv.reason);

        // admissible random instances: the hypothesis checks gate entry
        std::vector<GeneratedProblem> pool = generate_problem_suite(20240801, 240);
        std::map<std::string, bool> admissible_shape;
        std::vector<const GeneratedProblem*> admitted;
        for (const auto& g : pool) {
            if (int(admitted.size()) == 100) break;
            std::string key = shape_key(g.label);
            auto it = admissible_shape.find(key);
            if (it == admissible_shape.end()) {
                HypothesisReport rep = check_hypotheses(g.problem.space, g.problem.obstacle);
                bool ok = g.problem.surface.dim() <= 1 ? rep.ok_for_low_dim() : rep.all_ok();
                it = admissible_shape.emplace(key, ok).first;
            }
            if (it->second) admitted.push_back(&g);
        }
        expect(admitted.size() == 100, "could not collect 100 admissible instances, got " +
                                           std::to_string(admitted.size()));

        int cleared = 0;
        for (const GeneratedProblem* g : admitted) {
            PushoffResult res = pushoff(g->problem, 12);
            if (!res.cleared) {
                expect(res.obstruction.has_value() && !res.obstruction->note.empty(),
                       g->label + ": failure without evidence");
                continue;
            }
            ++cleared;
            expect(image_misses(res.map, res.obstacle), g->label + ": image meets obstacle");
            if (g->already_clear)
                expect(res.certificate.empty(), g->label + ": spurious certificate");
            VerifyResult vr = verify_certificate(g->problem, res.map, res.certificate);
            expect(vr.ok, g->label + ": certificate rejected: " + vr.reason);
        }
        expect(cleared >= 95, "success rate below 95%: " + std::to_string(cleared) + "/100");
    });

    criterion(10, "negative control: punctured disk rejected by the checks", [] {
        HypothesisReport rep =
            check_hypotheses(wheel6(), SimplicialComplex::from_maximal({{"z"}}));
        expect(rep.punctured_star_status() == CheckStatus::FAIL,
               "condition 3 should fail on the punctured disk");
        bool saw_h1 = false;
        for (const auto& c : rep.punctured_stars)
            if (c.status == CheckStatus::FAIL && c.h1 == FgAbelianGroup::free_abelian(1))
                saw_h1 = true;
        expect(saw_h1, "missing H_1 = Z evidence");
        expect(!rep.all_ok(), "report should not be all-ok");
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
