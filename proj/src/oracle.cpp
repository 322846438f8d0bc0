#include "simsup/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>

namespace simsup::oracle {

namespace {

StateSet step_set(const Automaton& a, const StateSet& from, EventId e) {
    StateSet out;
    for (StateId u : from)
        for (StateId v : a.successors(u, e)) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool any_active(const Automaton& a, const StateSet& from, EventId e) {
    for (StateId u : from)
        if (!a.successors(u, e).empty()) return true;
    return false;
}

/// Pareto frontier over per-track depths: keeps only positions not
/// dominated (pointwise <=) by an already-explored one.
class DepthFrontier {
public:
    bool admit(const std::vector<int>& key_id, int l1, int l2) {
        auto& fr = frontiers_[key_id];
        for (auto [a, b] : fr)
            if (a <= l1 && b <= l2) return false;
        fr.erase(std::remove_if(fr.begin(), fr.end(),
                                [&](std::pair<int, int> p) { return l1 <= p.first && l2 <= p.second; }),
                 fr.end());
        fr.emplace_back(l1, l2);
        return true;
    }

private:
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> frontiers_;
};

/// Flattens reach sets into a single comparable key.
std::vector<int> make_key(std::initializer_list<const StateSet*> sets, int extra = -1) {
    std::vector<int> key;
    for (const StateSet* s : sets) {
        key.push_back(-2);  // separator
        key.insert(key.end(), s->begin(), s->end());
    }
    if (extra != -1) key.push_back(extra);
    return key;
}

}  // namespace

// ---------------------------------------------------------------------------
// Single-track bounded checks
// ---------------------------------------------------------------------------

ConditionResult bounded_controllable_condition(const Automaton& rz, const Automaton& g, int k) {
    ConditionResult res;
    if (rz.initial() == kNoState || g.initial() == kNoState) return res;  // L(rz) or L(g) empty

    struct Frame {
        StateSet d, a;
        Word word;
    };
    std::deque<Frame> queue;
    std::map<std::pair<StateSet, StateSet>, int> seen;
    queue.push_back({{rz.initial()}, {g.initial()}, {}});
    seen[{queue.front().d, queue.front().a}] = 0;
    while (!queue.empty()) {
        Frame f = std::move(queue.front());
        queue.pop_front();
        for (EventId e = 0; e < g.alphabet().size(); ++e) {
            if (g.alphabet().event(e).controllable) continue;
            if (!any_active(g, f.a, e)) continue;  // s.sigma not in L(g)
            for (StateId q : f.d) {
                if (rz.successors(q, e).empty()) {
                    res.ok = false;
                    res.s1 = f.word;
                    res.q = q;
                    res.sigma = e;
                    return res;
                }
            }
        }
        if (static_cast<int>(f.word.size()) >= k) continue;
        for (EventId e = 0; e < rz.alphabet().size(); ++e) {
            StateSet d2 = step_set(rz, f.d, e);
            if (d2.empty()) continue;  // s must stay in L(rz)
            StateSet a2 = step_set(g, f.a, e);
            auto key = std::make_pair(d2, a2);
            if (seen.emplace(key, 0).second) {
                Word w = f.word;
                w.push_back(e);
                queue.push_back({std::move(d2), std::move(a2), std::move(w)});
            }
        }
    }
    return res;
}

ConditionResult bounded_language_controllable(const Automaton& sub, const Automaton& g, int k) {
    ConditionResult res;
    if (sub.initial() == kNoState || g.initial() == kNoState) return res;

    struct Frame {
        StateSet d, a;
        Word word;
    };
    std::deque<Frame> queue;
    std::map<std::pair<StateSet, StateSet>, int> seen;
    queue.push_back({{sub.initial()}, {g.initial()}, {}});
    seen[{queue.front().d, queue.front().a}] = 0;
    while (!queue.empty()) {
        Frame f = std::move(queue.front());
        queue.pop_front();
        for (EventId e = 0; e < g.alphabet().size(); ++e) {
            if (g.alphabet().event(e).controllable) continue;
            if (!any_active(g, f.a, e)) continue;
            if (step_set(sub, f.d, e).empty()) {
                res.ok = false;
                res.s1 = f.word;
                res.sigma = e;
                return res;
            }
        }
        if (static_cast<int>(f.word.size()) >= k) continue;
        for (EventId e = 0; e < sub.alphabet().size(); ++e) {
            StateSet d2 = step_set(sub, f.d, e);
            if (d2.empty()) continue;
            StateSet a2 = step_set(g, f.a, e);
            if (a2.empty()) continue;  // vacuous forever once s leaves L(g)
            auto key = std::make_pair(d2, a2);
            if (seen.emplace(key, 0).second) {
                Word w = f.word;
                w.push_back(e);
                queue.push_back({std::move(d2), std::move(a2), std::move(w)});
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Two-track bounded checks
// ---------------------------------------------------------------------------

namespace {

/// Shared skeleton for the projection-synchronized two-track walks.
/// Each track carries (spec reach set, plant reach set); unobservable
/// events advance one track, observable events advance both.
struct TwoTrackFrame {
    StateSet d1, a1, d2, a2;
    Word s1, s2;
    bool s1_nonempty = false;
};

}  // namespace

ConditionResult bounded_strong_observable_condition(const Automaton& rz, const Automaton& g,
                                                    int k) {
    ConditionResult res;
    if (g.initial() == kNoState) return res;

    // eps-clause: every unobservable-only plant string must be in L(rz).
    {
        struct Frame {
            StateSet a, d;
            Word word;
        };
        std::deque<Frame> queue;
        std::map<std::pair<StateSet, StateSet>, int> seen;
        StateSet d0;
        if (rz.initial() != kNoState) d0.push_back(rz.initial());
        if (d0.empty()) {
            res.ok = false;
            res.epsilon_case = true;
            res.s1 = {};
            return res;
        }
        queue.push_back({{g.initial()}, d0, {}});
        seen[{queue.front().a, queue.front().d}] = 0;
        while (!queue.empty()) {
            Frame f = std::move(queue.front());
            queue.pop_front();
            if (static_cast<int>(f.word.size()) >= k) continue;
            for (EventId e : g.alphabet().unobservable_events()) {
                StateSet a2 = step_set(g, f.a, e);
                if (a2.empty()) continue;
                StateSet d2 = step_set(rz, f.d, e);
                Word w = f.word;
                w.push_back(e);
                if (d2.empty()) {
                    res.ok = false;
                    res.epsilon_case = true;
                    res.s1 = w;
                    return res;
                }
                if (seen.emplace(std::make_pair(a2, d2), 0).second)
                    queue.push_back({std::move(a2), std::move(d2), std::move(w)});
            }
        }
    }
    if (rz.initial() == kNoState) return res;

    // main clause over projection-equal pairs (s1, s2).
    std::deque<TwoTrackFrame> queue;
    DepthFrontier frontier;
    TwoTrackFrame init{{rz.initial()}, {g.initial()}, {rz.initial()}, {g.initial()}, {}, {}, false};
    frontier.admit(make_key({&init.d1, &init.a1, &init.d2, &init.a2}, 0), 0, 0);
    queue.push_back(init);
    while (!queue.empty()) {
        TwoTrackFrame f = std::move(queue.front());
        queue.pop_front();
        if (f.s1_nonempty) {
            for (EventId e = 0; e < g.alphabet().size(); ++e) {
                if (!g.alphabet().event(e).controllable) continue;
                if (!any_active(g, f.a1, e)) continue;  // s1.sigma in L(g)
                if (!any_active(g, f.a2, e)) continue;  // s2.sigma in L(g)
                for (StateId q : f.d2) {
                    if (rz.successors(q, e).empty()) {
                        res.ok = false;
                        res.s1 = f.s1;
                        res.s2 = f.s2;
                        res.q = q;
                        res.sigma = e;
                        return res;
                    }
                }
            }
        }
        int l1 = static_cast<int>(f.s1.size());
        int l2 = static_cast<int>(f.s2.size());
        for (EventId e = 0; e < rz.alphabet().size(); ++e) {
            bool obs = rz.alphabet().event(e).observable;
            if (!obs) {
                if (l1 < k) {
                    StateSet d1 = step_set(rz, f.d1, e);
                    StateSet a1 = step_set(g, f.a1, e);
                    if (!d1.empty() && !a1.empty()) {
                        TwoTrackFrame nf{d1, a1, f.d2, f.a2, f.s1, f.s2, true};
                        nf.s1.push_back(e);
                        if (frontier.admit(make_key({&nf.d1, &nf.a1, &nf.d2, &nf.a2}, 1), l1 + 1, l2))
                            queue.push_back(std::move(nf));
                    }
                }
                if (l2 < k) {
                    StateSet d2 = step_set(rz, f.d2, e);
                    StateSet a2 = step_set(g, f.a2, e);
                    if (!d2.empty() && !a2.empty()) {
                        TwoTrackFrame nf{f.d1, f.a1, d2, a2, f.s1, f.s2, f.s1_nonempty};
                        nf.s2.push_back(e);
                        if (frontier.admit(
                                make_key({&nf.d1, &nf.a1, &nf.d2, &nf.a2}, nf.s1_nonempty ? 1 : 0),
                                l1, l2 + 1))
                            queue.push_back(std::move(nf));
                    }
                }
            } else if (l1 < k && l2 < k) {
                StateSet d1 = step_set(rz, f.d1, e);
                StateSet a1 = step_set(g, f.a1, e);
                StateSet d2 = step_set(rz, f.d2, e);
                StateSet a2 = step_set(g, f.a2, e);
                if (!d1.empty() && !a1.empty() && !d2.empty() && !a2.empty()) {
                    TwoTrackFrame nf{d1, a1, d2, a2, f.s1, f.s2, true};
                    nf.s1.push_back(e);
                    nf.s2.push_back(e);
                    if (frontier.admit(make_key({&nf.d1, &nf.a1, &nf.d2, &nf.a2}, 1), l1 + 1, l2 + 1))
                        queue.push_back(std::move(nf));
                }
            }
        }
    }
    return res;
}

ConditionResult bounded_observable_condition(const Automaton& rz, const Automaton& g, int k) {
    ConditionResult res;
    if (rz.initial() == kNoState || g.initial() == kNoState) return res;

    // tracks: s (carrying the quantified q and s.sigma in L(g)) and s'
    // (carrying s'.sigma in L(rz)).
    struct Frame {
        StateSet d1, a1, d2;
        Word s1, s2;
    };
    std::deque<Frame> queue;
    DepthFrontier frontier;
    Frame init{{rz.initial()}, {g.initial()}, {rz.initial()}, {}, {}};
    frontier.admit(make_key({&init.d1, &init.a1, &init.d2}), 0, 0);
    queue.push_back(init);
    while (!queue.empty()) {
        Frame f = std::move(queue.front());
        queue.pop_front();
        for (EventId e = 0; e < g.alphabet().size(); ++e) {
            if (!g.alphabet().event(e).controllable) continue;
            if (!any_active(g, f.a1, e)) continue;       // s.sigma in L(g)
            if (!any_active(rz, f.d2, e)) continue;      // s'.sigma in L(rz)
            for (StateId q : f.d1) {
                if (rz.successors(q, e).empty()) {
                    res.ok = false;
                    res.s1 = f.s1;
                    res.s2 = f.s2;
                    res.q = q;
                    res.sigma = e;
                    return res;
                }
            }
        }
        int l1 = static_cast<int>(f.s1.size());
        int l2 = static_cast<int>(f.s2.size());
        for (EventId e = 0; e < rz.alphabet().size(); ++e) {
            bool obs = rz.alphabet().event(e).observable;
            if (!obs) {
                if (l1 < k) {
                    StateSet d1 = step_set(rz, f.d1, e);
                    if (!d1.empty()) {
                        StateSet a1 = step_set(g, f.a1, e);
                        Frame nf{d1, a1, f.d2, f.s1, f.s2};
                        nf.s1.push_back(e);
                        if (frontier.admit(make_key({&nf.d1, &nf.a1, &nf.d2}), l1 + 1, l2))
                            queue.push_back(std::move(nf));
                    }
                }
                if (l2 < k) {
                    StateSet d2 = step_set(rz, f.d2, e);
                    if (!d2.empty()) {
                        Frame nf{f.d1, f.a1, d2, f.s1, f.s2};
                        nf.s2.push_back(e);
                        if (frontier.admit(make_key({&nf.d1, &nf.a1, &nf.d2}), l1, l2 + 1))
                            queue.push_back(std::move(nf));
                    }
                }
            } else if (l1 < k && l2 < k) {
                StateSet d1 = step_set(rz, f.d1, e);
                StateSet d2 = step_set(rz, f.d2, e);
                if (d1.empty() || d2.empty()) continue;
                StateSet a1 = step_set(g, f.a1, e);
                Frame nf{d1, a1, d2, f.s1, f.s2};
                nf.s1.push_back(e);
                nf.s2.push_back(e);
                if (frontier.admit(make_key({&nf.d1, &nf.a1, &nf.d2}), l1 + 1, l2 + 1))
                    queue.push_back(std::move(nf));
            }
        }
    }
    return res;
}

ConditionResult bounded_language_observable(const Automaton& sub, const Automaton& g, int k) {
    ConditionResult res;
    if (sub.initial() == kNoState || g.initial() == kNoState) return res;

    struct Frame {
        StateSet d1, d2, a2;
        Word s1, s2;
    };
    std::deque<Frame> queue;
    DepthFrontier frontier;
    Frame init{{sub.initial()}, {sub.initial()}, {g.initial()}, {}, {}};
    frontier.admit(make_key({&init.d1, &init.d2, &init.a2}), 0, 0);
    queue.push_back(init);
    while (!queue.empty()) {
        Frame f = std::move(queue.front());
        queue.pop_front();
        for (EventId e = 0; e < g.alphabet().size(); ++e) {
            if (!g.alphabet().event(e).controllable) continue;
            if (step_set(sub, f.d1, e).empty()) continue;  // s.sigma in L(sub)
            if (!any_active(g, f.a2, e)) continue;         // s'.sigma in L(g)
            if (step_set(sub, f.d2, e).empty()) {          // but s'.sigma not in L(sub)
                res.ok = false;
                res.s1 = f.s1;
                res.s2 = f.s2;
                res.sigma = e;
                return res;
            }
        }
        int l1 = static_cast<int>(f.s1.size());
        int l2 = static_cast<int>(f.s2.size());
        for (EventId e = 0; e < sub.alphabet().size(); ++e) {
            bool obs = sub.alphabet().event(e).observable;
            if (!obs) {
                if (l1 < k) {
                    StateSet d1 = step_set(sub, f.d1, e);
                    if (!d1.empty()) {
                        Frame nf{d1, f.d2, f.a2, f.s1, f.s2};
                        nf.s1.push_back(e);
                        if (frontier.admit(make_key({&nf.d1, &nf.d2, &nf.a2}), l1 + 1, l2))
                            queue.push_back(std::move(nf));
                    }
                }
                if (l2 < k) {
                    StateSet d2 = step_set(sub, f.d2, e);
                    StateSet a2 = step_set(g, f.a2, e);
                    if (!d2.empty() && !a2.empty()) {
                        Frame nf{f.d1, d2, a2, f.s1, f.s2};
                        nf.s2.push_back(e);
                        if (frontier.admit(make_key({&nf.d1, &nf.d2, &nf.a2}), l1, l2 + 1))
                            queue.push_back(std::move(nf));
                    }
                }
            } else if (l1 < k && l2 < k) {
                StateSet d1 = step_set(sub, f.d1, e);
                StateSet d2 = step_set(sub, f.d2, e);
                StateSet a2 = step_set(g, f.a2, e);
                if (d1.empty() || d2.empty() || a2.empty()) continue;
                Frame nf{d1, d2, a2, f.s1, f.s2};
                nf.s1.push_back(e);
                nf.s2.push_back(e);
                if (frontier.admit(make_key({&nf.d1, &nf.d2, &nf.a2}), l1 + 1, l2 + 1))
                    queue.push_back(std::move(nf));
            }
        }
    }
    return res;
}

StatePairSet bounded_projection_pairs(const Automaton& r, const Automaton& g, int k) {
    StatePairSet out(r.num_states(), g.num_states());
    if (r.initial() == kNoState || g.initial() == kNoState) return out;

    struct Frame {
        StateSet d, a;
        int l1, l2;
    };
    std::deque<Frame> queue;
    DepthFrontier frontier;
    Frame init{{r.initial()}, {g.initial()}, 0, 0};
    frontier.admit(make_key({&init.d, &init.a}), 0, 0);
    queue.push_back(init);
    while (!queue.empty()) {
        Frame f = std::move(queue.front());
        queue.pop_front();
        for (StateId q : f.d)
            for (StateId x : f.a) out.insert(q, x);
        for (EventId e = 0; e < r.alphabet().size(); ++e) {
            bool obs = r.alphabet().event(e).observable;
            if (!obs) {
                if (f.l1 < k) {
                    StateSet d = step_set(r, f.d, e);
                    if (!d.empty()) {
                        Frame nf{d, f.a, f.l1 + 1, f.l2};
                        if (frontier.admit(make_key({&nf.d, &nf.a}), nf.l1, nf.l2))
                            queue.push_back(std::move(nf));
                    }
                }
                if (f.l2 < k) {
                    StateSet a = step_set(g, f.a, e);
                    if (!a.empty()) {
                        Frame nf{f.d, a, f.l1, f.l2 + 1};
                        if (frontier.admit(make_key({&nf.d, &nf.a}), nf.l1, nf.l2))
                            queue.push_back(std::move(nf));
                    }
                }
            } else if (f.l1 < k && f.l2 < k) {
                StateSet d = step_set(r, f.d, e);
                StateSet a = step_set(g, f.a, e);
                if (d.empty() || a.empty()) continue;
                Frame nf{d, a, f.l1 + 1, f.l2 + 1};
                if (frontier.admit(make_key({&nf.d, &nf.a}), nf.l1, nf.l2))
                    queue.push_back(std::move(nf));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Operator stability (unbounded, exact)
// ---------------------------------------------------------------------------

bool controllable_operator_stable(const Automaton& rz, const Automaton& g) {
    if (rz.initial() == kNoState || g.initial() == kNoState) return true;

    // Gamma_n rows of the plant.
    std::vector<std::vector<bool>> gn(static_cast<size_t>(g.num_states()),
                                      std::vector<bool>(static_cast<size_t>(g.alphabet().size()), false));
    for (StateId x = 0; x < g.num_states(); ++x) {
        StateSet xx;
        try {
            xx = nondet_state_set(g, x);
        } catch (const std::invalid_argument&) {
            continue;  // unreachable plant state
        }
        for (StateId v : xx)
            for (EventId e : active_events(g, v)) gn[static_cast<size_t>(x)][static_cast<size_t>(e)] = true;
    }

    // Pairs co-reachable by a common string.
    std::deque<std::pair<StateId, StateId>> queue{{rz.initial(), g.initial()}};
    std::map<std::pair<StateId, StateId>, int> seen{{{rz.initial(), g.initial()}, 0}};
    while (!queue.empty()) {
        auto [q, x] = queue.front();
        queue.pop_front();
        for (EventId e = 0; e < g.alphabet().size(); ++e) {
            if (!g.alphabet().event(e).controllable && gn[static_cast<size_t>(x)][static_cast<size_t>(e)] &&
                rz.successors(q, e).empty())
                return false;
            for (StateId q2 : rz.successors(q, e))
                for (StateId x2 : g.successors(x, e))
                    if (seen.emplace(std::make_pair(q2, x2), 0).second) queue.emplace_back(q2, x2);
        }
    }
    return true;
}

bool strong_observable_operator_stable(const Automaton& rz, const Automaton& g) {
    if (g.initial() == kNoState) return true;

    // eps-clause: exhaustive walk of the unobservable fragments.
    {
        if (rz.initial() == kNoState) return false;  // eps itself escapes
        std::deque<std::pair<StateSet, StateSet>> queue;  // (plant set, spec set)
        std::map<std::pair<StateSet, StateSet>, int> seen;
        queue.push_back({{g.initial()}, {rz.initial()}});
        seen[queue.front()] = 0;
        while (!queue.empty()) {
            auto [a, d] = queue.front();
            queue.pop_front();
            for (EventId e : g.alphabet().unobservable_events()) {
                StateSet a2 = step_set(g, a, e);
                if (a2.empty()) continue;
                StateSet d2 = step_set(rz, d, e);
                if (d2.empty()) return false;
                if (seen.emplace(std::make_pair(a2, d2), 0).second)
                    queue.push_back({std::move(a2), std::move(d2)});
            }
        }
    }

    // main clause: exhaustive two-track configuration walk.
    struct Frame {
        StateSet d1, a1, d2, a2;
        bool nonempty;
    };
    std::deque<Frame> queue;
    std::map<std::tuple<StateSet, StateSet, StateSet, StateSet, bool>, int> seen;
    Frame init{{rz.initial()}, {g.initial()}, {rz.initial()}, {g.initial()}, false};
    seen[{init.d1, init.a1, init.d2, init.a2, false}] = 0;
    queue.push_back(init);
    while (!queue.empty()) {
        Frame f = std::move(queue.front());
        queue.pop_front();
        if (f.nonempty) {
            for (EventId e = 0; e < g.alphabet().size(); ++e) {
                if (!g.alphabet().event(e).controllable) continue;
                if (!any_active(g, f.a1, e) || !any_active(g, f.a2, e)) continue;
                for (StateId q : f.d2)
                    if (rz.successors(q, e).empty()) return false;
            }
        }
        auto push = [&](StateSet d1, StateSet a1, StateSet d2, StateSet a2, bool ne) {
            if (d1.empty() || a1.empty() || d2.empty() || a2.empty()) return;
            if (seen.emplace(std::make_tuple(d1, a1, d2, a2, ne), 0).second)
                queue.push_back({std::move(d1), std::move(a1), std::move(d2), std::move(a2), ne});
        };
        for (EventId e = 0; e < rz.alphabet().size(); ++e) {
            if (!rz.alphabet().event(e).observable) {
                push(step_set(rz, f.d1, e), step_set(g, f.a1, e), f.d2, f.a2, true);
                push(f.d1, f.a1, step_set(rz, f.d2, e), step_set(g, f.a2, e), f.nonempty);
            } else {
                push(step_set(rz, f.d1, e), step_set(g, f.a1, e), step_set(rz, f.d2, e),
                     step_set(g, f.a2, e), true);
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Brute-force supremal set
// ---------------------------------------------------------------------------

namespace {

/// Greatest pair set over a fixed spec row-set S: obligations are the
/// spec transitions between S-rows, pruning is chaotic-iteration to the
/// fixpoint. Direct translation of the simulation conditions.
StatePairSet fixed_row_sim_gfp(const Automaton& r, const Automaton& g,
                               const std::vector<bool>& in_s) {
    StatePairSet z(r.num_states(), g.num_states());
    for (int q = 0; q < r.num_states(); ++q) {
        if (!in_s[static_cast<size_t>(q)]) continue;
        for (int x = 0; x < g.num_states(); ++x)
            if (!r.is_marked(q) || g.is_marked(x)) z.insert(q, x);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int q = 0; q < r.num_states(); ++q) {
            if (!in_s[static_cast<size_t>(q)]) continue;
            for (int x = 0; x < g.num_states(); ++x) {
                if (!z.contains(q, x)) continue;
                bool ok = true;
                for (EventId e = 0; ok && e < r.alphabet().size(); ++e) {
                    for (StateId q2 : r.successors(q, e)) {
                        if (!in_s[static_cast<size_t>(q2)]) continue;
                        bool matched = false;
                        for (StateId x2 : g.successors(x, e))
                            if (z.contains(q2, x2)) {
                                matched = true;
                                break;
                            }
                        if (!matched) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (!ok) {
                    z.erase(q, x);
                    changed = true;
                }
            }
        }
    }
    return z;
}

}  // namespace

SupremalResult brute_force_supremal(const Automaton& r, const Automaton& g, SynthesisMode mode) {
    int nq = r.num_states();
    int nx = g.num_states();
    // Enumeration guard, sized so the desk-scale fixtures stay inside.
    if (nq * nx > 30) throw std::invalid_argument("brute_force_supremal: |Q|*|X| > 30");

    SupremalResult res;
    res.set = StatePairSet(nq, nx);
    if (r.initial() == kNoState || g.initial() == kNoState) return res;

    // A row-set S is a valid solution shape iff the restricted spec is
    // stable under both removal operators and the greatest simulation
    // set over S keeps every row and the initial pair.
    auto consistent = [&](std::uint32_t rows, StatePairSet* out) {
        std::vector<bool> in_s(static_cast<size_t>(nq), false);
        StatePairSet zrows(nq, nx);
        for (int q = 0; q < nq; ++q)
            if (rows >> q & 1) {
                in_s[static_cast<size_t>(q)] = true;
                zrows.insert(q, 0);
            }
        Automaton rz = restrict_to(r, zrows);
        if (!strong_observable_operator_stable(rz, g)) return false;
        if (mode == SynthesisMode::controllable_strong_observable &&
            !controllable_operator_stable(rz, g))
            return false;
        StatePairSet z = fixed_row_sim_gfp(r, g, in_s);
        if (!z.contains(r.initial(), g.initial())) return false;
        for (int q = 0; q < nq; ++q)
            if ((rows >> q & 1) && !z.row_nonempty(q)) return false;  // a row starved
        if (out) *out = z;
        return true;
    };

    std::uint32_t sup_rows = 0;
    bool any = false;
    for (std::uint32_t rows = 0; rows < (1u << nq); ++rows) {
        if (!(rows >> r.initial() & 1)) continue;
        if (any && (rows | sup_rows) == sup_rows) continue;  // below the union already
        if (!consistent(rows, nullptr)) continue;
        any = true;
        sup_rows |= rows;
    }
    res.exists = any;
    if (any) {
        res.union_closed = consistent(sup_rows, &res.set);
        if (!res.union_closed) res.set = StatePairSet(nq, nx);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

namespace {

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    double unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }
    bool chance(double p) { return unit() < p; }
};

Automaton random_automaton(SplitMix64& rng, const std::vector<Event>& events, int n,
                           const std::string& prefix, double density, double marked_fraction) {
    AutomatonDraft draft;
    draft.name = prefix;
    draft.events = events;
    for (int i = 0; i < n; ++i)
        draft.states.push_back({prefix + std::to_string(i), rng.chance(marked_fraction)});
    draft.initials.push_back(prefix + "0");
    for (int s = 0; s < n; ++s)
        for (const Event& e : events)
            for (int t = 0; t < n; ++t)
                if (rng.chance(density))
                    draft.edges.push_back(
                        {prefix + std::to_string(s), e.name, prefix + std::to_string(t)});
    return compile(draft);
}

}  // namespace

std::pair<Automaton, Automaton> random_instance(const RandomInstanceSpec& spec) {
    SplitMix64 rng{spec.seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull};

    std::vector<Event> events;
    for (int i = 0; i < spec.alphabet_size; ++i) {
        Event e;
        e.name = "e" + std::to_string(i);
        e.controllable = !rng.chance(spec.fraction_uncontrollable);
        e.observable = !rng.chance(spec.fraction_unobservable);
        events.push_back(e);
    }

    int ng = spec.min_plant_states + rng.below(spec.max_plant_states - spec.min_plant_states + 1);
    Automaton g = random_automaton(rng, events, ng, "x", spec.transition_density,
                                   spec.marked_fraction);

    if (spec.spec_substructure_of_plant) {
        AutomatonDraft draft;
        draft.name = "r";
        draft.events = events;
        for (StateId s = 0; s < g.num_states(); ++s)
            draft.states.push_back({g.state_name(s), g.is_marked(s) && rng.chance(spec.substructure_keep)});
        draft.initials.push_back(g.state_name(g.initial()));
        for (StateId s = 0; s < g.num_states(); ++s)
            for (EventId e = 0; e < g.alphabet().size(); ++e)
                for (StateId t : g.successors(s, e))
                    if (rng.chance(spec.substructure_keep))
                        draft.edges.push_back(
                            {g.state_name(s), g.alphabet().event(e).name, g.state_name(t)});
        return {compile(draft), g};
    }

    int nr = spec.min_spec_states + rng.below(spec.max_spec_states - spec.min_spec_states + 1);
    Automaton r = random_automaton(rng, events, nr, "q", spec.transition_density,
                                   spec.marked_fraction);
    return {r, g};
}

}  // namespace simsup::oracle
