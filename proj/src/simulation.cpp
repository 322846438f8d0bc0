#include "simsup/simulation.hpp"

#include <stdexcept>
#include <vector>

namespace simsup {

namespace {

void require_shared_alphabet(const Automaton& r, const Automaton& g) {
    if (!(r.alphabet() == g.alphabet())) throw std::invalid_argument("alphabet mismatch");
}

}  // namespace

StatePairSet f_s_step(const Automaton& r, const Automaton& g, const StatePairSet& z,
                      ObligationMode mode) {
    if (z.num_spec() != r.num_states() || z.num_plant() != g.num_states())
        throw std::invalid_argument("pair set universe mismatch");

    std::vector<bool> row_present(static_cast<size_t>(r.num_states()), false);
    if (mode == ObligationMode::restricted) {
        for (int q : z.spec_projection()) row_present[static_cast<size_t>(q)] = true;
    }

    StatePairSet out = z;
    // Jacobi style: all pairs judged against the incoming z.
    for (int q = 0; q < r.num_states(); ++q) {
        for (int x = 0; x < g.num_states(); ++x) {
            if (!z.contains(q, x)) continue;
            bool keep = !r.is_marked(q) || g.is_marked(x);
            for (EventId e = 0; keep && e < r.alphabet().size(); ++e) {
                for (StateId q2 : r.successors(q, e)) {
                    if (mode == ObligationMode::restricted && !row_present[static_cast<size_t>(q2)])
                        continue;
                    bool matched = false;
                    for (StateId x2 : g.successors(x, e)) {
                        if (z.contains(q2, x2)) {
                            matched = true;
                            break;
                        }
                    }
                    if (!matched) {
                        keep = false;
                        break;
                    }
                }
            }
            if (!keep) out.erase(q, x);
        }
    }
    return out;
}

std::optional<SimulationRelation> greatest_simulation(const Automaton& r, const Automaton& g) {
    require_shared_alphabet(r, g);
    StatePairSet z = StatePairSet::full(r.num_states(), g.num_states());
    for (;;) {
        StatePairSet next = f_s_step(r, g, z, ObligationMode::full);
        if (next == z) break;
        z = std::move(next);
    }
    if (r.initial() == kNoState || g.initial() == kNoState || !z.contains(r.initial(), g.initial()))
        return std::nullopt;
    return SimulationRelation{std::move(z)};
}

bool is_simulated_by(const Automaton& r, const Automaton& g) {
    return greatest_simulation(r, g).has_value();
}

bool is_bisimilar(const Automaton& a, const Automaton& b) {
    require_shared_alphabet(a, b);
    if (a.is_empty() || b.is_empty()) return a.is_empty() == b.is_empty();

    // Coarsest two-way matching relation on the disjoint union; states of
    // b are offset by a.num_states().
    int n = a.num_states() + b.num_states();
    auto marked = [&](int u) {
        return u < a.num_states() ? a.is_marked(u) : b.is_marked(u - a.num_states());
    };
    auto successors = [&](int u, EventId e) -> const StateSet& {
        return u < a.num_states() ? a.successors(u, e) : b.successors(u - a.num_states(), e);
    };
    auto offset = [&](int u) { return u < a.num_states() ? 0 : a.num_states(); };

    std::vector<std::vector<bool>> rel(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n)));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) rel[static_cast<size_t>(u)][static_cast<size_t>(v)] = marked(u) == marked(v);

    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (!rel[static_cast<size_t>(u)][static_cast<size_t>(v)]) continue;
                bool ok = true;
                for (EventId e = 0; ok && e < a.alphabet().size(); ++e) {
                    for (StateId u2raw : successors(u, e)) {
                        int u2 = u2raw + offset(u);
                        bool matched = false;
                        for (StateId v2raw : successors(v, e)) {
                            if (rel[static_cast<size_t>(u2)][static_cast<size_t>(v2raw + offset(v))]) {
                                matched = true;
                                break;
                            }
                        }
                        if (!matched) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) break;
                    for (StateId v2raw : successors(v, e)) {
                        int v2 = v2raw + offset(v);
                        bool matched = false;
                        for (StateId u2raw : successors(u, e)) {
                            if (rel[static_cast<size_t>(u2raw + offset(u))][static_cast<size_t>(v2)]) {
                                matched = true;
                                break;
                            }
                        }
                        if (!matched) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) {
                    rel[static_cast<size_t>(u)][static_cast<size_t>(v)] = false;
                    changed = true;
                }
            }
        }
    }
    return rel[static_cast<size_t>(a.initial())][static_cast<size_t>(b.initial() + a.num_states())];
}

}  // namespace simsup
