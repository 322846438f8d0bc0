#include "simsup/synthesis.hpp"

#include <algorithm>
#include <stdexcept>

#include "simsup/oracle.hpp"
#include "simsup/simulation.hpp"

namespace simsup {

namespace {

SynthesisTrace run_fixpoint(const Automaton& r, const Automaton& g, SynthesisMode mode) {
    if (!(r.alphabet() == g.alphabet())) throw std::invalid_argument("alphabet mismatch");

    SynthesisTrace trace;
    trace.mode = mode;
    trace.calc_strong_observable = is_calculable_strong_observable(r, g);
    bool calculable = trace.calc_strong_observable.ok;
    if (mode == SynthesisMode::controllable_strong_observable) {
        trace.calc_controllable = is_calculable_controllable(r, g);
        calculable = calculable && trace.calc_controllable.ok;
    }
    if (!calculable) {
        trace.exists = false;
        trace.nonexistent_reason = "not calculable";
        trace.final_set = StatePairSet(r.num_states(), g.num_states());
        return trace;
    }

    StatePairSet y = StatePairSet::full(r.num_states(), g.num_states());
    int iter = 0;
    for (;;) {
        if (r.initial() == kNoState || g.initial() == kNoState ||
            !y.contains(r.initial(), g.initial())) {
            trace.exists = false;
            trace.nonexistent_reason = "initial pair removed";
            trace.final_set = y;
            return trace;
        }
        ++iter;
        IterationRecord rec;
        rec.index = iter;
        StatePairSet next = mode == SynthesisMode::strong_observable
                                ? h2(r, g, y, &rec.diagnostics)
                                : h3(r, g, y, &rec.diagnostics);
        rec.size = next.size();
        for (StateId q = 0; q < r.num_states(); ++q)
            if (y.row_nonempty(q) && !next.row_nonempty(q)) rec.removed.push_back(q);
        bool fixed = next == y;
        trace.iterations.push_back(std::move(rec));
        if (fixed) {
            trace.exists = true;
            trace.final_set = y;
            trace.result = restrict_to(r, y);
            return trace;
        }
        y = std::move(next);
    }
}

}  // namespace

SynthesisTrace algorithm1(const Automaton& r, const Automaton& g) {
    return run_fixpoint(r, g, SynthesisMode::strong_observable);
}

SynthesisTrace algorithm2(const Automaton& r, const Automaton& g) {
    return run_fixpoint(r, g, SynthesisMode::controllable_strong_observable);
}

// ---------------------------------------------------------------------------
// Result verification
// ---------------------------------------------------------------------------

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const VerificationReport::Check& VerificationReport::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw std::invalid_argument("no such check: " + name);
}

VerificationReport verify_result(const Automaton& r, const Automaton& g, const Automaton& sub,
                                 int bound) {
    if (bound < 0) bound = (sub.num_states() + 1) * (g.num_states() + 1);
    VerificationReport rep;

    // (0) sub is a subautomaton of r: states, marking and transitions included.
    {
        bool ok = true;
        std::string detail;
        for (StateId s = 0; ok && s < sub.num_states(); ++s) {
            StateId rs = r.state_index(sub.state_name(s));
            if (rs == kNoState) {
                ok = false;
                detail = "state " + sub.state_name(s) + " not in the spec";
                break;
            }
            if (sub.is_marked(s) && !r.is_marked(rs)) {
                ok = false;
                detail = "state " + sub.state_name(s) + " marked but unmarked in the spec";
                break;
            }
            for (EventId e = 0; ok && e < sub.alphabet().size(); ++e) {
                for (StateId t : sub.successors(s, e)) {
                    StateId rt = r.state_index(sub.state_name(t));
                    EventId re = r.alphabet().index_of(sub.alphabet().event(e).name);
                    const auto& rsucc = r.successors(rs, re);
                    if (rt == kNoState ||
                        !std::binary_search(rsucc.begin(), rsucc.end(), rt)) {
                        ok = false;
                        detail = "transition " + sub.state_name(s) + " -" +
                                 sub.alphabet().event(e).name + "-> " + sub.state_name(t) +
                                 " not in the spec";
                        break;
                    }
                }
            }
        }
        rep.checks.push_back({"subautomaton_of_spec", ok, detail});
    }

    // (1) sub simulated by the plant.
    bool sim_g = is_simulated_by(sub, g);
    rep.checks.push_back({"simulated_by_plant", sim_g, sim_g ? "" : "no simulation relation"});
    rep.valid_result = sim_g;

    // (2) controllable condition: no violation edges over the full pair set.
    {
        StatePairSet full = StatePairSet::full(sub.num_states(), g.num_states());
        RemovalDiagnostics diag;
        auto qd = q_d(sub, g, full, &diag);
        std::string detail;
        if (!qd.empty())
            detail = "witness " + diag.by_state.begin()->second.front().format(sub, g);
        rep.checks.push_back({"controllable_condition", qd.empty(), detail});
    }

    // (3) strong observable condition (incl. the eps-clause).
    {
        StatePairSet full = StatePairSet::full(sub.num_states(), g.num_states());
        RemovalDiagnostics diag;
        auto qdp = q_d_prime(sub, g, full, &diag);
        std::string detail;
        if (!qdp.empty())
            detail = "witness " + diag.by_state.begin()->second.front().format(sub, g);
        rep.checks.push_back({"strong_observable_condition", qdp.empty(), detail});
    }

    // (4) sub simulated by the spec.
    {
        bool sim_r = is_simulated_by(sub, r);
        rep.checks.push_back({"simulated_by_spec", sim_r, sim_r ? "" : "no simulation relation"});
    }

    // (5) bounded language controllability and observability.
    {
        auto lc = oracle::bounded_language_controllable(sub, g, bound);
        rep.checks.push_back({"language_controllable", lc.ok,
                              lc.ok ? "" : "witness s=" + format_word(g.alphabet(), lc.s1) +
                                               " sigma=" + g.alphabet().event(lc.sigma).name});
        auto lo = oracle::bounded_language_observable(sub, g, bound);
        rep.checks.push_back({"language_observable", lo.ok,
                              lo.ok ? "" : "witness s=" + format_word(g.alphabet(), lo.s1) +
                                               " s'=" + format_word(g.alphabet(), lo.s2) +
                                               " sigma=" + g.alphabet().event(lo.sigma).name});
    }

    return rep;
}

}  // namespace simsup
