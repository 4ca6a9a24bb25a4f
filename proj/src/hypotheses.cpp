#include "charvar/hypotheses.hpp"

#include <algorithm>
#include <deque>

#include "charvar/diskfill.hpp"
#include "charvar/homology.hpp"
#include "charvar/pi1.hpp"
#include "charvar/subdivision.hpp"

namespace charvar {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::OK: return "OK";
        case CheckStatus::FAIL: return "FAIL";
        case CheckStatus::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

Subcomplex punctured_closed_star(const SimplicialComplex& X, const Subcomplex& Y,
                                 const Vertex& v) {
    Subcomplex cs = closed_star(X, Simplex::of({v}));
    std::set<Vertex> bad = Y.vertex_set();
    std::vector<Simplex> keep;
    for (const auto& s : cs.simplices()) {
        bool clean = true;
        for (const auto& u : s.verts)
            if (bad.count(u)) {
                clean = false;
                break;
            }
        if (clean) keep.push_back(s);
    }
    return SimplicialComplex::from_simplices(keep);
}

namespace {

CheckStatus worse(CheckStatus a, CheckStatus b) {
    auto rank = [](CheckStatus s) {
        return s == CheckStatus::FAIL ? 2 : s == CheckStatus::UNKNOWN ? 1 : 0;
    };
    return rank(a) >= rank(b) ? a : b;
}

/* The open star of sigma minus the obstacle is path-connected exactly when
 * the non-obstacle simplices containing sigma form a connected graph under
 * face comparability: crossing between two open cells of the star happens
 * through a common face, which is again a star cell. */
CheckStatus star_connectivity(const SimplicialComplex& X, const Subcomplex& Y,
                              const Simplex& sigma, std::string* note) {
    std::vector<Simplex> cells;
    for (const auto& d : star_and_link(X, sigma).open_star)
        if (!Y.contains(d)) cells.push_back(d);
    if (cells.empty()) {
        *note = "open star minus obstacle is empty";
        return CheckStatus::FAIL;
    }
    std::vector<int> comp(cells.size(), -1);
    std::deque<std::size_t> queue{0};
    comp[0] = 0;
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (comp[k] >= 0) continue;
            if (cells[i].contains(cells[k]) || cells[k].contains(cells[i])) {
                comp[k] = 0;
                queue.push_back(k);
            }
        }
    }
    for (std::size_t k = 0; k < cells.size(); ++k)
        if (comp[k] < 0) {
            *note = "open star minus obstacle is disconnected (e.g. " + cells[0].to_string() +
                    " vs " + cells[k].to_string() + ")";
            return CheckStatus::FAIL;
        }
    note->clear();
    return CheckStatus::OK;
}

} // namespace

CheckStatus HypothesisReport::local_connectivity_status() const {
    CheckStatus out = CheckStatus::OK;
    for (const auto& c : local_connectivity) out = worse(out, c.status);
    return out;
}

CheckStatus HypothesisReport::punctured_star_status() const {
    CheckStatus out = CheckStatus::OK;
    for (const auto& c : punctured_stars) out = worse(out, c.status);
    return out;
}

bool HypothesisReport::all_ok() const {
    return density && local_connectivity_status() == CheckStatus::OK &&
           punctured_star_status() == CheckStatus::OK;
}

bool HypothesisReport::ok_for_low_dim() const {
    return density && local_connectivity_status() == CheckStatus::OK;
}

HypothesisReport check_hypotheses(const SimplicialComplex& X, const Subcomplex& Y, int depth,
                                  int fill_budget) {
    require_subcomplex(X, Y, "check_hypotheses");
    HypothesisReport report;
    report.density = complement_dense(X, Y);

    /* Connectivity probes run where the obstacle is full: in the barycentric
     * subdivision, then `depth` further subdivisions.  Probes are attributed
     * to the original obstacle simplex by composing carriers. */
    std::vector<SubdivisionRecord> records;
    records.push_back(barycentric_subdivision(X));
    std::vector<Subcomplex> obstacle_levels{records[0].transport(Y)};
    for (int level = 1; level <= depth; ++level) {
        records.push_back(barycentric_subdivision(records[level - 1].refined));
        obstacle_levels.push_back(records[level].transport(obstacle_levels[level - 1]));
    }
    auto attribute = [&](Simplex s, int level) {
        for (int l = level; l >= 0; --l) s = records[std::size_t(l)].carrier_of(s);
        return s;
    };
    for (int level = 0; level <= depth; ++level) {
        const SimplicialComplex& Xl = records[std::size_t(level)].refined;
        const Subcomplex& Yl = obstacle_levels[std::size_t(level)];
        for (const auto& sigma : Yl.simplices()) {
            StarConnectivityCheck check;
            check.probe = sigma;
            check.attributed_to = attribute(sigma, level);
            check.level = level;
            check.status = star_connectivity(Xl, Yl, sigma, &check.note);
            report.local_connectivity.push_back(std::move(check));
        }
    }

    /* Punctured-star probes at every vertex of the subdivided obstacle. */
    const SimplicialComplex& X1 = records[0].refined;
    const Subcomplex& Y1 = obstacle_levels[0];
    for (const auto& v : Y1.vertices()) {
        PuncturedStarCheck check;
        check.probe = v;
        check.attributed_to = records[0].vertex_carrier.at(v);
        Subcomplex K = punctured_closed_star(X1, Y1, v);
        if (K.empty()) {
            check.status = CheckStatus::FAIL;
            check.note = "punctured closed star is empty";
            report.punctured_stars.push_back(std::move(check));
            continue;
        }
        std::vector<FgAbelianGroup> H = homology(K);
        if (H[0].free_rank != 1) {
            check.status = CheckStatus::FAIL;
            check.note = "punctured closed star is disconnected";
            report.punctured_stars.push_back(std::move(check));
            continue;
        }
        check.h1 = H.size() > 1 ? H[1] : FgAbelianGroup::trivial();
        if (!check.h1.is_trivial()) {
            check.status = CheckStatus::FAIL;
            check.note = "punctured closed star has H_1 = " + check.h1.to_string();
            report.punctured_stars.push_back(std::move(check));
            continue;
        }
        GroupPresentation pres = pi1_presentation(K, K.vertices().front());
        check.loops_total = int(pres.generators.size());
        for (int i = 0; i < check.loops_total; ++i) {
            std::vector<Vertex> loop = pres.generator_loop(i);
            if (nullhomotopy_search(loop, K, fill_budget)) ++check.loops_filled;
        }
        if (check.loops_filled == check.loops_total) {
            check.status = CheckStatus::OK;
        } else {
            check.status = CheckStatus::UNKNOWN;
            check.note = "filled " + std::to_string(check.loops_filled) + " of " +
                         std::to_string(check.loops_total) +
                         " generator loops within the search budget";
        }
        report.punctured_stars.push_back(std::move(check));
    }
    return report;
}

} // namespace charvar
