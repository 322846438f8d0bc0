#ifndef SIMSUP_OPERATORS_HPP
#define SIMSUP_OPERATORS_HPP

#include <map>
#include <string>
#include <vector>

#include "simsup/automaton.hpp"
#include "simsup/pairset.hpp"
#include "simsup/products.hpp"

namespace simsup {

/// One machine-checkable reason for removing a spec state. Every word is
/// replayable against the input automata (see tests).
struct RemovalReason {
    enum class Kind {
        controllable,       // sigma uncontrollable, in Gamma_n(x) at a reachable pair, undefined at q
        strong_observable,  // (s1, s2, sigma) with P(s1)=P(s2), s1s,s2s in L(G), undefined at q
        epsilon_clause,     // unobservable plant string missing from the restricted spec
    };

    Kind kind;
    EventId sigma = kEpsilon;
    // controllable: s reaches the pair (q, x); t co-reaches {x, x_active}
    // with sigma active at x_active (the Gamma_n witness).
    StateId pair_plant = kNoState;
    StateId active_plant = kNoState;
    Word reach_word;   // controllable: s; strong_observable: s1; epsilon: counterexample
    Word second_word;  // controllable: t; strong_observable: s2

    std::string format(const Automaton& r, const Automaton& g) const;
};

/// Removed spec states (indices into the full spec) with their reasons.
struct RemovalDiagnostics {
    std::map<StateId, std::vector<RemovalReason>> by_state;

    void add(StateId q, RemovalReason reason);
    void merge(const RemovalDiagnostics& other);
};

/// Q_d(Z): spec states with a violation edge in the controllable product
/// of restrict_to(r, z) with g. Returned in the full spec's indexing.
std::vector<StateId> q_d(const Automaton& r, const Automaton& g, const StatePairSet& z,
                         RemovalDiagnostics* diag = nullptr);

/// F_c(Z) = Z \ (Q_d(Z) x X).
StatePairSet f_c(const Automaton& r, const Automaton& g, const StatePairSet& z,
                 RemovalDiagnostics* diag = nullptr);

/// Q_d'(Z): the eps-clause failure (initial spec state when some
/// unobservable plant string escapes the restricted spec) plus the
/// twin-track failures on controllable continuations.
std::vector<StateId> q_d_prime(const Automaton& r, const Automaton& g, const StatePairSet& z,
                               RemovalDiagnostics* diag = nullptr);

/// F_so(Z) = Z \ (Q_d'(Z) x X).
StatePairSet f_so(const Automaton& r, const Automaton& g, const StatePairSet& z,
                  RemovalDiagnostics* diag = nullptr);

struct CalculabilityResult {
    bool ok = true;
    std::string witness;  // human-readable violating witness when !ok

    explicit operator bool() const { return ok; }
};

/// Def-15 well-posedness: no multi-string spec state misses an
/// uncontrollable continuation available after a common string in g.
CalculabilityResult is_calculable_controllable(const Automaton& r, const Automaton& g);

/// Def-20 well-posedness: no multi-string spec state misses a
/// controllable continuation available after a projection-equal string.
CalculabilityResult is_calculable_strong_observable(const Automaton& r, const Automaton& g);

/// h2(Z) = F_s(Z) n F_so(Z), F_s in restricted mode.
StatePairSet h2(const Automaton& r, const Automaton& g, const StatePairSet& z,
                RemovalDiagnostics* diag = nullptr);

/// h3(Z) = F_s(Z) n F_c(Z) n F_so(Z), F_s in restricted mode.
StatePairSet h3(const Automaton& r, const Automaton& g, const StatePairSet& z,
                RemovalDiagnostics* diag = nullptr);

}  // namespace simsup

#endif  // SIMSUP_OPERATORS_HPP
