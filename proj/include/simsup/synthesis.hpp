#ifndef SIMSUP_SYNTHESIS_HPP
#define SIMSUP_SYNTHESIS_HPP

#include <string>
#include <vector>

#include "simsup/automaton.hpp"
#include "simsup/operators.hpp"
#include "simsup/pairset.hpp"

namespace simsup {

enum class SynthesisMode { strong_observable, controllable_strong_observable };

struct IterationRecord {
    int index = 0;           // 1-based
    std::size_t size = 0;    // |Z| after this iteration
    StateSet removed;        // spec rows emptied by this iteration
    RemovalDiagnostics diagnostics;
};

struct SynthesisTrace {
    SynthesisMode mode = SynthesisMode::controllable_strong_observable;
    CalculabilityResult calc_controllable;        // checked by algorithm2 only
    CalculabilityResult calc_strong_observable;
    std::vector<IterationRecord> iterations;
    bool exists = false;
    Automaton result;                // meaningful iff exists
    StatePairSet final_set;
    std::string nonexistent_reason;  // meaningful iff !exists
};

/// Computes the supremal simulation-based strong observable subautomaton:
/// calculability gate, then y <- h2(y) from Q x X to the fixpoint.
SynthesisTrace algorithm1(const Automaton& r, const Automaton& g);

/// Computes the supremal simulation-based controllable and strong
/// observable subautomaton: both calculability gates, then y <- h3(y).
SynthesisTrace algorithm2(const Automaton& r, const Automaton& g);

struct VerificationReport {
    struct Check {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Check> checks;
    bool valid_result = false;  // check (1) holds; degenerate inputs fail here

    bool all_pass() const;
    const Check& check(const std::string& name) const;
};

/// Independent checks on a candidate subautomaton: (1) sub simulated by g,
/// (2) controllable condition, (3) strong observable condition, (4) sub
/// simulated by r, (5) bounded language controllability/observability up
/// to bound k (default (|sub|+1)*(|X|+1)).
VerificationReport verify_result(const Automaton& r, const Automaton& g, const Automaton& sub,
                                 int bound = -1);

}  // namespace simsup

#endif  // SIMSUP_SYNTHESIS_HPP
