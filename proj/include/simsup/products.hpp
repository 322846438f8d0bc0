#ifndef SIMSUP_PRODUCTS_HPP
#define SIMSUP_PRODUCTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "simsup/automaton.hpp"

namespace simsup {

/// Pair automaton of a restricted spec and the plant with one implicit
/// violation state. A violation edge on e exists at (q, x) exactly when
/// e is uncontrollable, in Gamma_n(x) of the plant, and undefined at q.
struct ControllableProduct {
    struct ViolationEdge {
        int pair;
        EventId event;
    };

    std::vector<std::pair<StateId, StateId>> pairs;  // (spec, plant), BFS discovery order
    int initial = -1;                                // index into pairs; -1 when the spec is empty
    // transitions[pair][event] -> successor pair indices (synchronized moves only)
    std::vector<std::vector<std::vector<int>>> transitions;
    std::vector<ViolationEdge> violations;
    // BFS tree for witness extraction
    std::vector<int> parent;
    std::vector<EventId> parent_event;

    int find(StateId q, StateId x) const;
    /// Common string reaching the pair, read off the BFS tree.
    Word witness(int pair_index) const;
};

ControllableProduct controllable_product(const Automaton& rz, const Automaton& g);

/// Pair automaton synchronizing two strings with equal projection
/// (labels in (Sigma u {eps})^2; the (eps,eps) self-loop is implicit).
struct ObservableProduct {
    struct Edge {
        int from;
        EventId left;   // kEpsilon for the spec-side eps
        EventId right;  // kEpsilon for the plant-side eps
        int to;
    };

    std::vector<std::pair<StateId, StateId>> pairs;
    int initial = -1;
    std::vector<Edge> edges;
    std::vector<int> parent;
    std::vector<std::pair<EventId, EventId>> parent_label;

    int find(StateId q, StateId x) const;
    /// Witness strings (s1, s2) with P(s1) = P(s2) reaching the pair.
    std::pair<Word, Word> witness(int pair_index) const;
};

ObservableProduct observable_product(const Automaton& r, const Automaton& g);

/// Twin-track closure deciding the strong-observable failure sets: the
/// s1 track and the s2 track each synchronize a spec copy with a plant
/// copy; observable events advance both tracks, unobservable events
/// advance one. A tuple with s1_nonempty is reachable iff there are
/// s1 in L(rz)\{eps} and s2 with P(s1)=P(s2) co-reaching its components.
struct TrackProduct {
    struct Node {
        StateId q1, x1, q2, x2;
        bool s1_nonempty;
        bool operator==(const Node&) const = default;
    };

    std::vector<Node> nodes;  // BFS discovery order; node 0 is the initial tuple
    std::vector<int> parent;
    // event consumed per track for the discovery move (kEpsilon = track stayed)
    std::vector<std::pair<EventId, EventId>> move;

    bool contains(const Node& n) const;
    /// Witness strings (s1, s2) reaching the node.
    std::pair<Word, Word> witness(int node_index) const;
};

TrackProduct so_track_product(const Automaton& rz, const Automaton& g);

/// Decides L_uo(g) subset of L_uo(rz) on the unobservable fragments
/// (the eps-clause of strong observability). Returns a shortest
/// counterexample string, or nullopt when the inclusion holds.
std::optional<Word> unobs_inclusion_check(const Automaton& g, const Automaton& rz);

/// Bounded witness enumeration for the observable product: all
/// (pair, s1, s2) with |s1|,|s2| <= maxlen, P(s1)=P(s2), q in d(q0,s1),
/// x in a(x0,s2). Oracle support; exponential in maxlen.
struct PairWitness {
    StateId q, x;
    Word s1, s2;
};
std::vector<PairWitness> reachable_pairs_by_strings(const Automaton& r, const Automaton& g,
                                                    int maxlen);

/// Common string reaching both u and v from the initial state of g,
/// or nullopt. Diagnostics helper for Gamma_n witnesses.
std::optional<Word> common_string_witness(const Automaton& g, StateId u, StateId v);

}  // namespace simsup

#endif  // SIMSUP_PRODUCTS_HPP
