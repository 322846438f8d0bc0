#ifndef SIMSUP_ORACLE_HPP
#define SIMSUP_ORACLE_HPP

#include <cstdint>
#include <utility>

#include "simsup/automaton.hpp"
#include "simsup/pairset.hpp"
#include "simsup/synthesis.hpp"

// Independent reference implementations used to validate the operators,
// conditions and supremality on small instances. Deliberately naive in
// structure: every check is a direct translation of the quantified
// condition it decides. The bounded checks walk reach-set configurations
// (the per-string predicates factor through them), which decides the same
// universally quantified formulas as literal enumeration of all strings
// up to the bound; witnesses are concrete strings.

namespace simsup::oracle {

struct ConditionResult {
    bool ok = true;
    bool epsilon_case = false;  // witness is an eps-clause counterexample
    Word s1, s2;                // witness strings (controllable checks use s1 only)
    StateId q = kNoState;       // violating spec state (state-level checks)
    EventId sigma = kEpsilon;

    explicit operator bool() const { return ok; }
};

/// Def-6 controllable condition over all s in L(rz) with |s| <= k.
ConditionResult bounded_controllable_condition(const Automaton& rz, const Automaton& g, int k);

/// Def-21 strong observable condition (eps-clause plus the two-string
/// clause) over strings bounded by k per track.
ConditionResult bounded_strong_observable_condition(const Automaton& rz, const Automaton& g,
                                                    int k);

/// Def-7 observable condition over bounded string pairs.
ConditionResult bounded_observable_condition(const Automaton& rz, const Automaton& g, int k);

/// Classical language controllability of L(sub) w.r.t. L(g), bounded.
ConditionResult bounded_language_controllable(const Automaton& sub, const Automaton& g, int k);

/// Classical language observability (controllable events), bounded.
ConditionResult bounded_language_observable(const Automaton& sub, const Automaton& g, int k);

/// All pairs (q, x) with q in d(q0, s1), x in a(x0, s2), P(s1) = P(s2),
/// |s1|,|s2| <= k. The independent route for the Prop-5 correspondence.
StatePairSet bounded_projection_pairs(const Automaton& r, const Automaton& g, int k);

/// Independent stability checks, re-derived from the failure-set
/// definitions: does restrict_to leave no removable state in z's
/// projection? The controllable side walks co-reachable pairs against
/// Gamma_n of the plant; the strong-observable side walks reach-set
/// configurations exhaustively (no bound needed; the configuration
/// space is finite).
bool controllable_operator_stable(const Automaton& rz, const Automaton& g);
bool strong_observable_operator_stable(const Automaton& rz, const Automaton& g);

struct SupremalResult {
    bool exists = false;       // some valid pair set was found
    bool union_closed = true;  // the union of valid sets is itself valid
    StatePairSet set;          // the union, when exists
};

/// Enumerates every Z containing (q0, x0); keeps Z iff Z is a simulation
/// set (restricted obligations, re-derived here from the definition) and
/// restrict_to(r, Z) is stable under the mode's removal operators.
/// Throws std::invalid_argument when |Q|*|X| > 16.
SupremalResult brute_force_supremal(const Automaton& r, const Automaton& g, SynthesisMode mode);

struct RandomInstanceSpec {
    int min_spec_states = 1;
    int max_spec_states = 4;
    int min_plant_states = 1;
    int max_plant_states = 4;
    int alphabet_size = 3;
    double transition_density = 0.5;
    double fraction_uncontrollable = 0.3;
    double fraction_unobservable = 0.3;
    double marked_fraction = 0.25;
    // When set, the spec is a random substructure of the plant, which
    // guarantees a simulation relation exists.
    bool spec_substructure_of_plant = false;
    double substructure_keep = 0.7;
    std::uint64_t seed = 0;
};

/// Seeded, reproducible instance generation; a pure function of the spec.
std::pair<Automaton, Automaton> random_instance(const RandomInstanceSpec& spec);

}  // namespace simsup::oracle

#endif  // SIMSUP_ORACLE_HPP
