#include "simsup/products.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace simsup {

namespace {

void require_shared_alphabet(const Automaton& r, const Automaton& g) {
    if (!(r.alphabet() == g.alphabet())) throw std::invalid_argument("alphabet mismatch");
}

/// Gamma_n for every plant state of Ac(g), as event membership rows.
/// Unreachable states keep an all-false row.
std::vector<std::vector<bool>> nondet_active_table(const Automaton& g) {
    int n = g.num_states();
    int ne = g.alphabet().size();
    std::vector<std::vector<bool>> gn(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(ne), false));
    if (g.initial() == kNoState) return gn;

    // Self-product closure: x_sets[u] accumulates X_u.
    std::vector<std::vector<bool>> seen(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    std::deque<std::pair<StateId, StateId>> queue;
    seen[static_cast<size_t>(g.initial())][static_cast<size_t>(g.initial())] = true;
    queue.emplace_back(g.initial(), g.initial());
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        for (EventId e = 0; e < ne; ++e) {
            for (StateId u2 : g.successors(u, e))
                for (StateId v2 : g.successors(v, e))
                    if (!seen[static_cast<size_t>(u2)][static_cast<size_t>(v2)]) {
                        seen[static_cast<size_t>(u2)][static_cast<size_t>(v2)] = true;
                        queue.emplace_back(u2, v2);
                    }
        }
    }
    for (StateId u = 0; u < n; ++u) {
        for (StateId v = 0; v < n; ++v) {
            if (!seen[static_cast<size_t>(u)][static_cast<size_t>(v)]) continue;
            for (EventId e = 0; e < ne; ++e)
                if (!g.successors(v, e).empty()) gn[static_cast<size_t>(u)][static_cast<size_t>(e)] = true;
        }
    }
    return gn;
}

}  // namespace

// ---------------------------------------------------------------------------
// Controllable product
// ---------------------------------------------------------------------------

int ControllableProduct::find(StateId q, StateId x) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].first == q && pairs[i].second == x) return static_cast<int>(i);
    return -1;
}

Word ControllableProduct::witness(int pair_index) const {
    Word w;
    for (int i = pair_index; parent[static_cast<size_t>(i)] != -1; i = parent[static_cast<size_t>(i)])
        w.push_back(parent_event[static_cast<size_t>(i)]);
    std::reverse(w.begin(), w.end());
    return w;
}

ControllableProduct controllable_product(const Automaton& rz, const Automaton& g) {
    require_shared_alphabet(rz, g);
    ControllableProduct p;
    if (rz.initial() == kNoState || g.initial() == kNoState) return p;

    auto gn = nondet_active_table(g);
    int ne = g.alphabet().size();

    std::map<std::pair<StateId, StateId>, int> index;
    auto intern = [&](StateId q, StateId x, int par, EventId ev) {
        auto [it, inserted] = index.emplace(std::make_pair(q, x), static_cast<int>(p.pairs.size()));
        if (inserted) {
            p.pairs.emplace_back(q, x);
            p.transitions.emplace_back(static_cast<size_t>(ne));
            p.parent.push_back(par);
            p.parent_event.push_back(ev);
        }
        return it->second;
    };

    p.initial = intern(rz.initial(), g.initial(), -1, kEpsilon);
    for (int i = 0; i < static_cast<int>(p.pairs.size()); ++i) {
        auto [q, x] = p.pairs[static_cast<size_t>(i)];
        for (EventId e = 0; e < ne; ++e) {
            const auto& qsucc = rz.successors(q, e);
            const auto& xsucc = g.successors(x, e);
            bool in_gn = gn[static_cast<size_t>(x)][static_cast<size_t>(e)];
            if (!g.alphabet().event(e).controllable && in_gn && qsucc.empty()) {
                p.violations.push_back({i, e});
                continue;
            }
            if (qsucc.empty() || xsucc.empty()) continue;
            for (StateId q2 : qsucc)
                for (StateId x2 : xsucc)
                    p.transitions[static_cast<size_t>(i)][static_cast<size_t>(e)].push_back(
                        intern(q2, x2, i, e));
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// Observable product
// ---------------------------------------------------------------------------

int ObservableProduct::find(StateId q, StateId x) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].first == q && pairs[i].second == x) return static_cast<int>(i);
    return -1;
}

std::pair<Word, Word> ObservableProduct::witness(int pair_index) const {
    Word s1, s2;
    for (int i = pair_index; parent[static_cast<size_t>(i)] != -1; i = parent[static_cast<size_t>(i)]) {
        auto [l, r] = parent_label[static_cast<size_t>(i)];
        if (l != kEpsilon) s1.push_back(l);
        if (r != kEpsilon) s2.push_back(r);
    }
    std::reverse(s1.begin(), s1.end());
    std::reverse(s2.begin(), s2.end());
    return {s1, s2};
}

ObservableProduct observable_product(const Automaton& r, const Automaton& g) {
    require_shared_alphabet(r, g);
    ObservableProduct p;
    if (r.initial() == kNoState || g.initial() == kNoState) return p;

    const EventAlphabet& sigma = r.alphabet();
    std::map<std::pair<StateId, StateId>, int> index;
    auto intern = [&](StateId q, StateId x, int par, EventId l, EventId rr) {
        auto [it, inserted] = index.emplace(std::make_pair(q, x), static_cast<int>(p.pairs.size()));
        if (inserted) {
            p.pairs.emplace_back(q, x);
            p.parent.push_back(par);
            p.parent_label.emplace_back(l, rr);
        }
        return it->second;
    };

    p.initial = intern(r.initial(), g.initial(), -1, kEpsilon, kEpsilon);
    for (int i = 0; i < static_cast<int>(p.pairs.size()); ++i) {
        auto [q, x] = p.pairs[static_cast<size_t>(i)];
        for (EventId e = 0; e < sigma.size(); ++e) {
            if (!sigma.event(e).observable) {
                // case P(s2)=eps: plant moves alone
                for (StateId x2 : g.successors(x, e))
                    p.edges.push_back({i, kEpsilon, e, intern(q, x2, i, kEpsilon, e)});
                // case P(s1)=eps: spec moves alone
                for (StateId q2 : r.successors(q, e))
                    p.edges.push_back({i, e, kEpsilon, intern(q2, x, i, e, kEpsilon)});
                // synchronized unobservable pairs (both projections eps)
                for (EventId e2 = 0; e2 < sigma.size(); ++e2) {
                    if (sigma.event(e2).observable) continue;
                    for (StateId q2 : r.successors(q, e))
                        for (StateId x2 : g.successors(x, e2))
                            p.edges.push_back({i, e, e2, intern(q2, x2, i, e, e2)});
                }
            } else {
                // synchronized observable: equal projections force e on both sides
                for (StateId q2 : r.successors(q, e))
                    for (StateId x2 : g.successors(x, e))
                        p.edges.push_back({i, e, e, intern(q2, x2, i, e, e)});
            }
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// Twin-track product
// ---------------------------------------------------------------------------

bool TrackProduct::contains(const Node& n) const {
    return std::find(nodes.begin(), nodes.end(), n) != nodes.end();
}

std::pair<Word, Word> TrackProduct::witness(int node_index) const {
    Word s1, s2;
    for (int i = node_index; parent[static_cast<size_t>(i)] != -1; i = parent[static_cast<size_t>(i)]) {
        auto [m1, m2] = move[static_cast<size_t>(i)];
        if (m1 != kEpsilon) s1.push_back(m1);
        if (m2 != kEpsilon) s2.push_back(m2);
    }
    std::reverse(s1.begin(), s1.end());
    std::reverse(s2.begin(), s2.end());
    return {s1, s2};
}

TrackProduct so_track_product(const Automaton& rz, const Automaton& g) {
    require_shared_alphabet(rz, g);
    TrackProduct p;
    if (rz.initial() == kNoState || g.initial() == kNoState) return p;

    const EventAlphabet& sigma = rz.alphabet();
    std::map<std::tuple<StateId, StateId, StateId, StateId, bool>, int> index;
    auto intern = [&](TrackProduct::Node n, int par, EventId m1, EventId m2) {
        auto key = std::make_tuple(n.q1, n.x1, n.q2, n.x2, n.s1_nonempty);
        auto [it, inserted] = index.emplace(key, static_cast<int>(p.nodes.size()));
        if (inserted) {
            p.nodes.push_back(n);
            p.parent.push_back(par);
            p.move.emplace_back(m1, m2);
        }
        return it->second;
    };

    intern({rz.initial(), g.initial(), rz.initial(), g.initial(), false}, -1, kEpsilon, kEpsilon);
    for (int i = 0; i < static_cast<int>(p.nodes.size()); ++i) {
        TrackProduct::Node n = p.nodes[static_cast<size_t>(i)];
        for (EventId e = 0; e < sigma.size(); ++e) {
            if (!sigma.event(e).observable) {
                // s1 track advances alone
                for (StateId q1 : rz.successors(n.q1, e))
                    for (StateId x1 : g.successors(n.x1, e))
                        intern({q1, x1, n.q2, n.x2, true}, i, e, kEpsilon);
                // s2 track advances alone
                for (StateId q2 : rz.successors(n.q2, e))
                    for (StateId x2 : g.successors(n.x2, e))
                        intern({n.q1, n.x1, q2, x2, n.s1_nonempty}, i, kEpsilon, e);
            } else {
                // observable: both tracks advance on e
                for (StateId q1 : rz.successors(n.q1, e))
                    for (StateId x1 : g.successors(n.x1, e))
                        for (StateId q2 : rz.successors(n.q2, e))
                            for (StateId x2 : g.successors(n.x2, e))
                                intern({q1, x1, q2, x2, true}, i, e, e);
            }
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// eps-clause inclusion
// ---------------------------------------------------------------------------

std::optional<Word> unobs_inclusion_check(const Automaton& g, const Automaton& rz) {
    require_shared_alphabet(g, rz);
    if (g.initial() == kNoState) return std::nullopt;  // no plant strings at all
    if (rz.initial() == kNoState) return Word{};       // eps itself is missing

    std::vector<EventId> uo = g.alphabet().unobservable_events();

    // Subset construction on rz's unobservable part, paired with g's states.
    struct Config {
        StateId x;
        StateSet d;
        Word word;
    };
    std::set<std::pair<StateId, StateSet>> seen;
    std::deque<Config> queue;
    queue.push_back({g.initial(), {rz.initial()}, {}});
    seen.insert({g.initial(), {rz.initial()}});
    while (!queue.empty()) {
        Config c = std::move(queue.front());
        queue.pop_front();
        for (EventId e : uo) {
            StateSet d2;
            for (StateId q : c.d)
                for (StateId q2 : rz.successors(q, e)) d2.push_back(q2);
            std::sort(d2.begin(), d2.end());
            d2.erase(std::unique(d2.begin(), d2.end()), d2.end());
            for (StateId x2 : g.successors(c.x, e)) {
                Word w = c.word;
                w.push_back(e);
                if (d2.empty()) return w;  // shortest by BFS order
                if (seen.insert({x2, d2}).second) queue.push_back({x2, d2, std::move(w)});
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Oracle-facing witness enumeration
// ---------------------------------------------------------------------------

std::vector<PairWitness> reachable_pairs_by_strings(const Automaton& r, const Automaton& g,
                                                    int maxlen) {
    require_shared_alphabet(r, g);
    std::vector<PairWitness> out;
    if (r.initial() == kNoState || g.initial() == kNoState) return out;

    // All string pairs (s1, s2) with equal projection, lengths <= maxlen:
    // interleave unobservable singles and observable sync steps.
    struct Frame {
        StateSet d, a;
        Word s1, s2;
    };
    std::deque<Frame> queue;
    queue.push_back({{r.initial()}, {g.initial()}, {}, {}});
    // Emit all pairs for every dequeued frame (frames are unique string pairs).
    std::set<std::tuple<Word, Word>> seen_words;
    seen_words.insert({Word{}, Word{}});
    while (!queue.empty()) {
        Frame f = std::move(queue.front());
        queue.pop_front();
        for (StateId q : f.d)
            for (StateId x : f.a) out.push_back({q, x, f.s1, f.s2});

        for (EventId e = 0; e < r.alphabet().size(); ++e) {
            if (!r.alphabet().event(e).observable) {
                if (static_cast<int>(f.s1.size()) < maxlen) {
                    StateSet d2 = step(r, f.d, {e});
                    if (!d2.empty()) {
                        Word s1 = f.s1;
                        s1.push_back(e);
                        if (seen_words.insert({s1, f.s2}).second)
                            queue.push_back({d2, f.a, s1, f.s2});
                    }
                }
                if (static_cast<int>(f.s2.size()) < maxlen) {
                    StateSet a2 = step(g, f.a, {e});
                    if (!a2.empty()) {
                        Word s2 = f.s2;
                        s2.push_back(e);
                        if (seen_words.insert({f.s1, s2}).second)
                            queue.push_back({f.d, a2, f.s1, s2});
                    }
                }
            } else if (static_cast<int>(f.s1.size()) < maxlen &&
                       static_cast<int>(f.s2.size()) < maxlen) {
                StateSet d2 = step(r, f.d, {e});
                StateSet a2 = step(g, f.a, {e});
                if (!d2.empty() && !a2.empty()) {
                    Word s1 = f.s1, s2 = f.s2;
                    s1.push_back(e);
                    s2.push_back(e);
                    if (seen_words.insert({s1, s2}).second) queue.push_back({d2, a2, s1, s2});
                }
            }
        }
    }
    return out;
}

std::optional<Word> common_string_witness(const Automaton& g, StateId u, StateId v) {
    if (g.initial() == kNoState) return std::nullopt;
    struct Node {
        StateId a, b;
        int parent;
        EventId event;
    };
    std::vector<Node> nodes{{g.initial(), g.initial(), -1, kEpsilon}};
    std::set<std::pair<StateId, StateId>> seen{{g.initial(), g.initial()}};
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        Node n = nodes[static_cast<size_t>(i)];
        if (n.a == u && n.b == v) {
            Word w;
            for (int j = i; nodes[static_cast<size_t>(j)].parent != -1; j = nodes[static_cast<size_t>(j)].parent)
                w.push_back(nodes[static_cast<size_t>(j)].event);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (EventId e = 0; e < g.alphabet().size(); ++e)
            for (StateId a2 : g.successors(n.a, e))
                for (StateId b2 : g.successors(n.b, e))
                    if (seen.insert({a2, b2}).second) nodes.push_back({a2, b2, i, e});
    }
    return std::nullopt;
}

}  // namespace simsup
