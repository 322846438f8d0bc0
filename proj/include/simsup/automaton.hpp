#ifndef SIMSUP_AUTOMATON_HPP
#define SIMSUP_AUTOMATON_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "simsup/pairset.hpp"

namespace simsup {

using StateId = int;
using EventId = int;
inline constexpr StateId kNoState = -1;
inline constexpr EventId kEpsilon = -1;

/// An event string; entries index into the alphabet.
using Word = std::vector<EventId>;

/// Sorted, duplicate-free list of state ids.
using StateSet = std::vector<StateId>;

struct Event {
    std::string name;
    bool controllable = true;
    bool observable = true;

    bool operator==(const Event&) const = default;
};

/// Alphabet with canonical (lexicographic by name) event order.
class EventAlphabet {
public:
    EventAlphabet() = default;
    /// Sorts events by name. Throws std::invalid_argument on duplicate names.
    explicit EventAlphabet(std::vector<Event> events);

    int size() const { return static_cast<int>(events_.size()); }
    const Event& event(EventId e) const { return events_[static_cast<size_t>(e)]; }
    const std::vector<Event>& events() const { return events_; }
    /// Index of the named event, or kEpsilon if unknown.
    EventId index_of(const std::string& name) const;
    bool contains(const std::string& name) const { return index_of(name) != kEpsilon; }

    std::vector<EventId> controllable_events() const;
    std::vector<EventId> uncontrollable_events() const;
    std::vector<EventId> observable_events() const;
    std::vector<EventId> unobservable_events() const;

    bool operator==(const EventAlphabet&) const = default;

private:
    std::vector<Event> events_;
};

/// Raw automaton description, prior to invariant enforcement.
/// This is what the parser and hand-written fixtures produce; validate()
/// reports invariant violations, compile() turns it into an Automaton.
struct AutomatonDraft {
    struct StateDecl {
        std::string name;
        bool marked = false;
    };
    struct Edge {
        std::string src;
        std::string event;
        std::string dst;
    };

    std::string name = "A";
    std::vector<Event> events;
    std::vector<StateDecl> states;
    std::vector<std::string> initials;
    std::vector<Edge> edges;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Nondeterministic finite automaton over a flagged alphabet.
///
/// States and events are kept in canonical (lexicographic) order so that
/// every downstream iteration, trace and DOT export is byte-stable.
/// The designated empty automaton (no states, initial == kNoState) is a
/// legal value; its language is the empty set.
class Automaton {
public:
    Automaton() = default;

    const std::string& name() const { return name_; }
    const EventAlphabet& alphabet() const { return alphabet_; }
    int num_states() const { return static_cast<int>(state_names_.size()); }
    const std::string& state_name(StateId s) const { return state_names_[static_cast<size_t>(s)]; }
    const std::vector<std::string>& state_names() const { return state_names_; }
    /// Index of the named state, or kNoState if unknown.
    StateId state_index(const std::string& name) const;
    StateId initial() const { return initial_; }
    bool is_marked(StateId s) const { return marked_[static_cast<size_t>(s)]; }
    std::vector<StateId> marked_states() const;
    bool is_empty() const { return state_names_.empty(); }

    /// Successor set of (state, event); sorted, duplicate-free.
    const StateSet& successors(StateId s, EventId e) const {
        return transitions_[static_cast<size_t>(s)][static_cast<size_t>(e)];
    }
    bool has_transition(StateId s, EventId e) const { return !successors(s, e).empty(); }
    std::size_t num_transitions() const;

    bool operator==(const Automaton&) const = default;

    friend Automaton compile(const AutomatonDraft& draft);
    friend Automaton make_empty(const EventAlphabet& alphabet, const std::string& name);

private:
    std::string name_ = "A";
    EventAlphabet alphabet_;
    std::vector<std::string> state_names_;
    std::vector<bool> marked_;
    StateId initial_ = kNoState;
    // transitions_[state][event] -> sorted successor ids
    std::vector<std::vector<StateSet>> transitions_;
};

/// Checks the Automaton invariants on a draft and names every offender.
ValidationReport validate(const AutomatonDraft& draft);

/// Canonicalizes a draft into an Automaton. Throws std::invalid_argument
/// carrying the first validation violation if the draft is bad.
Automaton compile(const AutomatonDraft& draft);

/// The designated empty automaton over the given alphabet.
Automaton make_empty(const EventAlphabet& alphabet, const std::string& name = "empty");

// ---------------------------------------------------------------------------
// Structural operators
// ---------------------------------------------------------------------------

/// Ac: restriction to states reachable from the initial state.
Automaton accessible(const Automaton& a);

/// Rc: restriction of the spec r to the spec states present in z's
/// Q-projection, marked set intersected, transitions clipped to kept
/// endpoints, then trimmed with accessible(). Returns the designated
/// empty automaton when r's initial state is cut.
/// Throws std::invalid_argument when z's spec universe differs from r.
Automaton restrict_to(const Automaton& r, const StatePairSet& z);

/// Extended transition: states reachable from `from` by exactly the word s.
StateSet step(const Automaton& a, const StateSet& from, const Word& s);

/// States reachable from the initial state by s; empty set if a is empty.
StateSet step_from_initial(const Automaton& a, const Word& s);

/// Natural projection: subsequence of observable events.
Word project(const EventAlphabet& alphabet, const Word& s);

/// Gamma(x): events with a defined transition at x.
std::vector<EventId> active_events(const Automaton& a, StateId x);

/// X_x: states sharing some reaching string with x, computed as the
/// self-product reachability closure. Throws if x is unreachable.
StateSet nondet_state_set(const Automaton& a, StateId x);

/// Gamma_n(x): union of active events over nondet_state_set(a, x).
std::vector<EventId> nondet_active_events(const Automaton& a, StateId x);

/// Per-state classification of |S_q| (number of distinct strings reaching q).
enum class StringCount { unreachable, exactly_one, two_or_more };

struct StringCountClass {
    std::vector<StringCount> per_state;
    /// Q_M = states reached by two or more distinct strings.
    StateSet multi_string_states() const;
};

/// Classifies |S_q| for every state via subset construction on the
/// accessible part: a cycle on an initial-to-accepting path means
/// infinitely many strings; otherwise accepting paths are counted up to 2.
StringCountClass string_count_class(const Automaton& a);

/// {s in L(a) : |s| <= k}, in canonical (lexicographic word) order.
std::set<Word> bounded_language(const Automaton& a, int k);

// ---------------------------------------------------------------------------
// Word helpers
// ---------------------------------------------------------------------------

/// Renders a word as dot-joined event names; the empty word prints "eps".
std::string format_word(const EventAlphabet& alphabet, const Word& s);

/// Parses dot-joined event names ("eps" for the empty word).
/// Throws std::invalid_argument on unknown events.
Word parse_word(const EventAlphabet& alphabet, const std::string& text);

}  // namespace simsup

#endif  // SIMSUP_AUTOMATON_HPP
