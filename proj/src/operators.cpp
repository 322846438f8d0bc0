#include "simsup/operators.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "simsup/simulation.hpp"

namespace simsup {

namespace {

/// restrict_to reindexes; map its state ids back into the full spec's.
std::vector<StateId> spec_index_map(const Automaton& rz, const Automaton& r) {
    std::vector<StateId> map(static_cast<size_t>(rz.num_states()), kNoState);
    for (StateId q = 0; q < rz.num_states(); ++q) map[static_cast<size_t>(q)] = r.state_index(rz.state_name(q));
    return map;
}

}  // namespace

std::string RemovalReason::format(const Automaton& r, const Automaton& g) const {
    const EventAlphabet& sigma_names = r.alphabet();
    switch (kind) {
        case Kind::controllable: {
            std::string out = "ctrl(sigma=" + sigma_names.event(sigma).name;
            out += ",s=" + format_word(sigma_names, reach_word);
            if (pair_plant != kNoState) out += ",x=" + g.state_name(pair_plant);
            if (active_plant != kNoState) out += ",x'=" + g.state_name(active_plant);
            out += ",t=" + format_word(sigma_names, second_word) + ")";
            return out;
        }
        case Kind::strong_observable:
            return "so(sigma=" + sigma_names.event(sigma).name +
                   ",s1=" + format_word(sigma_names, reach_word) +
                   ",s2=" + format_word(sigma_names, second_word) + ")";
        case Kind::epsilon_clause:
            return "eps(s'=" + format_word(sigma_names, reach_word) + ")";
    }
    return "?";
}

void RemovalDiagnostics::add(StateId q, RemovalReason reason) {
    by_state[q].push_back(std::move(reason));
}

void RemovalDiagnostics::merge(const RemovalDiagnostics& other) {
    for (const auto& [q, reasons] : other.by_state)
        for (const auto& reason : reasons) by_state[q].push_back(reason);
}

// ---------------------------------------------------------------------------
// Controllable operator
// ---------------------------------------------------------------------------

std::vector<StateId> q_d(const Automaton& r, const Automaton& g, const StatePairSet& z,
                         RemovalDiagnostics* diag) {
    Automaton rz = restrict_to(r, z);
    ControllableProduct cp = controllable_product(rz, g);
    auto to_r = spec_index_map(rz, r);

    std::vector<bool> in_qd(static_cast<size_t>(r.num_states()), false);
    for (const auto& v : cp.violations) {
        auto [qz, x] = cp.pairs[static_cast<size_t>(v.pair)];
        StateId q = to_r[static_cast<size_t>(qz)];
        if (diag && !in_qd[static_cast<size_t>(q)]) {
            RemovalReason reason;
            reason.kind = RemovalReason::Kind::controllable;
            reason.sigma = v.event;
            reason.pair_plant = x;
            reason.reach_word = cp.witness(v.pair);
            // Gamma_n replay witness: a plant state sharing a string with x
            // where sigma is actually active.
            for (StateId xa : nondet_state_set(g, x)) {
                if (g.successors(xa, v.event).empty()) continue;
                if (auto t = common_string_witness(g, x, xa)) {
                    reason.active_plant = xa;
                    reason.second_word = *t;
                    break;
                }
            }
            diag->add(q, std::move(reason));
        }
        in_qd[static_cast<size_t>(q)] = true;
    }
    std::vector<StateId> out;
    for (StateId q = 0; q < r.num_states(); ++q)
        if (in_qd[static_cast<size_t>(q)]) out.push_back(q);
    return out;
}

StatePairSet f_c(const Automaton& r, const Automaton& g, const StatePairSet& z,
                 RemovalDiagnostics* diag) {
    StatePairSet out = z;
    for (StateId q : q_d(r, g, z, diag)) out.remove_spec_row(q);
    return out;
}

// ---------------------------------------------------------------------------
// Strong observable operator
// ---------------------------------------------------------------------------

std::vector<StateId> q_d_prime(const Automaton& r, const Automaton& g, const StatePairSet& z,
                               RemovalDiagnostics* diag) {
    Automaton rz = restrict_to(r, z);
    std::vector<bool> in_qd(static_cast<size_t>(r.num_states()), false);

    if (rz.initial() != kNoState) {
        if (auto cex = unobs_inclusion_check(g, rz)) {
            StateId q0 = r.state_index(rz.state_name(rz.initial()));
            in_qd[static_cast<size_t>(q0)] = true;
            if (diag) {
                RemovalReason reason;
                reason.kind = RemovalReason::Kind::epsilon_clause;
                reason.reach_word = *cex;
                diag->add(q0, std::move(reason));
            }
        }
    }

    TrackProduct tp = so_track_product(rz, g);
    auto to_r = spec_index_map(rz, r);
    for (int i = 0; i < static_cast<int>(tp.nodes.size()); ++i) {
        const TrackProduct::Node& n = tp.nodes[static_cast<size_t>(i)];
        if (!n.s1_nonempty) continue;
        for (EventId e = 0; e < g.alphabet().size(); ++e) {
            if (!g.alphabet().event(e).controllable) continue;
            if (g.successors(n.x1, e).empty() || g.successors(n.x2, e).empty()) continue;
            if (!rz.successors(n.q2, e).empty()) continue;
            StateId q = to_r[static_cast<size_t>(n.q2)];
            if (diag && !in_qd[static_cast<size_t>(q)]) {
                auto [s1, s2] = tp.witness(i);
                RemovalReason reason;
                reason.kind = RemovalReason::Kind::strong_observable;
                reason.sigma = e;
                reason.reach_word = std::move(s1);
                reason.second_word = std::move(s2);
                diag->add(q, std::move(reason));
            }
            in_qd[static_cast<size_t>(q)] = true;
        }
    }

    std::vector<StateId> out;
    for (StateId q = 0; q < r.num_states(); ++q)
        if (in_qd[static_cast<size_t>(q)]) out.push_back(q);
    return out;
}

StatePairSet f_so(const Automaton& r, const Automaton& g, const StatePairSet& z,
                  RemovalDiagnostics* diag) {
    StatePairSet out = z;
    for (StateId q : q_d_prime(r, g, z, diag)) out.remove_spec_row(q);
    return out;
}

// ---------------------------------------------------------------------------
// Calculability
// ---------------------------------------------------------------------------

CalculabilityResult is_calculable_controllable(const Automaton& r, const Automaton& g) {
    if (!(r.alphabet() == g.alphabet())) throw std::invalid_argument("alphabet mismatch");
    CalculabilityResult res;
    if (r.initial() == kNoState || g.initial() == kNoState) return res;

    StringCountClass counts = string_count_class(r);
    std::vector<bool> multi(static_cast<size_t>(r.num_states()), false);
    for (StateId q : counts.multi_string_states()) multi[static_cast<size_t>(q)] = true;

    // Pairs co-reachable by a common string (synchronous product of the
    // accessible parts), with BFS witnesses.
    struct Node {
        StateId q, x;
        int parent;
        EventId event;
    };
    std::vector<Node> nodes{{r.initial(), g.initial(), -1, kEpsilon}};
    std::set<std::pair<StateId, StateId>> seen{{r.initial(), g.initial()}};
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        Node n = nodes[static_cast<size_t>(i)];
        if (multi[static_cast<size_t>(n.q)]) {
            for (EventId e = 0; e < g.alphabet().size(); ++e) {
                if (g.alphabet().event(e).controllable) continue;
                if (g.successors(n.x, e).empty()) continue;
                if (!r.successors(n.q, e).empty()) continue;
                Word s;
                for (int j = i; nodes[static_cast<size_t>(j)].parent != -1; j = nodes[static_cast<size_t>(j)].parent)
                    s.push_back(nodes[static_cast<size_t>(j)].event);
                std::reverse(s.begin(), s.end());
                res.ok = false;
                res.witness = "q=" + r.state_name(n.q) + " s=" + format_word(r.alphabet(), s) +
                              " sigma=" + r.alphabet().event(e).name;
                return res;
            }
        }
        for (EventId e = 0; e < r.alphabet().size(); ++e)
            for (StateId q2 : r.successors(n.q, e))
                for (StateId x2 : g.successors(n.x, e))
                    if (seen.insert({q2, x2}).second) nodes.push_back({q2, x2, i, e});
    }
    return res;
}

CalculabilityResult is_calculable_strong_observable(const Automaton& r, const Automaton& g) {
    if (!(r.alphabet() == g.alphabet())) throw std::invalid_argument("alphabet mismatch");
    CalculabilityResult res;
    if (r.initial() == kNoState || g.initial() == kNoState) return res;

    StringCountClass counts = string_count_class(r);
    std::vector<bool> multi(static_cast<size_t>(r.num_states()), false);
    for (StateId q : counts.multi_string_states()) multi[static_cast<size_t>(q)] = true;

    ObservableProduct op = observable_product(r, g);
    for (int i = 0; i < static_cast<int>(op.pairs.size()); ++i) {
        auto [q, x] = op.pairs[static_cast<size_t>(i)];
        if (!multi[static_cast<size_t>(q)]) continue;
        for (EventId e = 0; e < g.alphabet().size(); ++e) {
            if (!g.alphabet().event(e).controllable) continue;
            if (g.successors(x, e).empty()) continue;
            if (!r.successors(q, e).empty()) continue;
            auto [s1, s2] = op.witness(i);
            res.ok = false;
            res.witness = "q=" + r.state_name(q) + " s=" + format_word(r.alphabet(), s1) +
                          " s'=" + format_word(r.alphabet(), s2) +
                          " sigma=" + r.alphabet().event(e).name;
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Composite maps
// ---------------------------------------------------------------------------

StatePairSet h2(const Automaton& r, const Automaton& g, const StatePairSet& z,
                RemovalDiagnostics* diag) {
    StatePairSet sim = f_s_step(r, g, z, ObligationMode::restricted);
    return sim.intersect(f_so(r, g, z, diag));
}

StatePairSet h3(const Automaton& r, const Automaton& g, const StatePairSet& z,
                RemovalDiagnostics* diag) {
    StatePairSet sim = f_s_step(r, g, z, ObligationMode::restricted);
    return sim.intersect(f_c(r, g, z, diag)).intersect(f_so(r, g, z, diag));
}

}  // namespace simsup
