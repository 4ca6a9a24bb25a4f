#pragma once
#include <map>

#include "charvar/certificate.hpp"
#include "charvar/pushoff.hpp"

namespace charvar::replay {

/* Working state a certificate is replayed through.  The producer drives the
 * identical apply_move the verifier uses, so a move that applies cleanly for
 * one applies cleanly for the other. */
struct State {
    SimplicialComplex space;       // the original target X
    Subcomplex space_obstacle;     // the original obstacle Y
    SimplicialComplex surface;
    Subcomplex pinned;
    SimplicialComplex target;      // X, or its barycentric subdivision after refining
    Subcomplex obstacle;           // obstacle at the target's level
    std::map<Vertex, Vertex> images;
    bool refined = false;
    int moves_applied = 0;
    /* After refining: refined target vertex -> smallest original simplex
     * containing it.  Cone-target justifications are checked against this. */
    std::map<Vertex, Simplex> target_carrier;

    static State initial(const PushoffProblem& problem);
    /* Resume mid-pipeline.  The original space and carriers are not known at
     * this point, so cone-target moves cannot be replayed from here; the
     * later steps never emit them. */
    static State from_stage(const PipelineStage& stage);

    /* Builds (and thereby validates) the current simplicial map. */
    SimplicialMap to_map() const;
};

/* Applies one move, checking all its side conditions; throws ValidationError
 * with a reason when the move does not apply. */
void apply_move(State& st, const CertMove& move);

} // namespace charvar::replay
