#ifndef SIMSUP_SIMULATION_HPP
#define SIMSUP_SIMULATION_HPP

#include <optional>

#include "simsup/automaton.hpp"
#include "simsup/pairset.hpp"

namespace simsup {

/// Which transition relation supplies the matching obligations of the
/// simulation operator. `full` uses the spec's entire relation (the
/// literal definition); `restricted` uses only transitions between spec
/// states present in the current pair set, i.e. the transitions of
/// restrict_to(r, z) before trimming. The synthesis algorithms iterate
/// in restricted mode.
enum class ObligationMode { full, restricted };

/// One application of the simulation operator F_s: keeps (q, x) in z iff
/// q marked implies x marked, and every obligation q -e-> q' has a match
/// x -e-> x' with (q', x') in z. The result is always a subset of z.
StatePairSet f_s_step(const Automaton& r, const Automaton& g, const StatePairSet& z,
                      ObligationMode mode);

struct SimulationRelation {
    StatePairSet pairs;
};

/// Greatest fixpoint of F_s (full mode) from Q x X; present iff it
/// relates the two initial states, in which case it is the largest
/// simulation relation from r to g. Throws on alphabet mismatch.
std::optional<SimulationRelation> greatest_simulation(const Automaton& r, const Automaton& g);

bool is_simulated_by(const Automaton& r, const Automaton& g);

/// Two-way matching fixpoint on the disjoint union, relating the
/// initial states; stronger than language equivalence.
bool is_bisimilar(const Automaton& a, const Automaton& b);

}  // namespace simsup

#endif  // SIMSUP_SIMULATION_HPP
