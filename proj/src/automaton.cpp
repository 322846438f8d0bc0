#include "simsup/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace simsup {

namespace {

void sort_unique(StateSet& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

// ---------------------------------------------------------------------------
// EventAlphabet
// ---------------------------------------------------------------------------

EventAlphabet::EventAlphabet(std::vector<Event> events) : events_(std::move(events)) {
    std::sort(events_.begin(), events_.end(),
              [](const Event& a, const Event& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < events_.size(); ++i) {
        if (events_[i].name == events_[i - 1].name)
            throw std::invalid_argument("duplicate event " + events_[i].name);
    }
}

EventId EventAlphabet::index_of(const std::string& name) const {
    auto it = std::lower_bound(events_.begin(), events_.end(), name,
                               [](const Event& e, const std::string& n) { return e.name < n; });
    if (it == events_.end() || it->name != name) return kEpsilon;
    return static_cast<EventId>(it - events_.begin());
}

std::vector<EventId> EventAlphabet::controllable_events() const {
    std::vector<EventId> out;
    for (int e = 0; e < size(); ++e)
        if (events_[static_cast<size_t>(e)].controllable) out.push_back(e);
    return out;
}

std::vector<EventId> EventAlphabet::uncontrollable_events() const {
    std::vector<EventId> out;
    for (int e = 0; e < size(); ++e)
        if (!events_[static_cast<size_t>(e)].controllable) out.push_back(e);
    return out;
}

std::vector<EventId> EventAlphabet::observable_events() const {
    std::vector<EventId> out;
    for (int e = 0; e < size(); ++e)
        if (events_[static_cast<size_t>(e)].observable) out.push_back(e);
    return out;
}

std::vector<EventId> EventAlphabet::unobservable_events() const {
    std::vector<EventId> out;
    for (int e = 0; e < size(); ++e)
        if (!events_[static_cast<size_t>(e)].observable) out.push_back(e);
    return out;
}

// ---------------------------------------------------------------------------
// Automaton construction
// ---------------------------------------------------------------------------

StateId Automaton::state_index(const std::string& name) const {
    auto it = std::lower_bound(state_names_.begin(), state_names_.end(), name);
    if (it == state_names_.end() || *it != name) return kNoState;
    return static_cast<StateId>(it - state_names_.begin());
}

std::vector<StateId> Automaton::marked_states() const {
    std::vector<StateId> out;
    for (StateId s = 0; s < num_states(); ++s)
        if (marked_[static_cast<size_t>(s)]) out.push_back(s);
    return out;
}

std::size_t Automaton::num_transitions() const {
    std::size_t n = 0;
    for (const auto& per_state : transitions_)
        for (const auto& succ : per_state) n += succ.size();
    return n;
}

ValidationReport validate(const AutomatonDraft& draft) {
    ValidationReport rep;
    std::unordered_set<std::string> event_names;
    for (const auto& e : draft.events) {
        if (!event_names.insert(e.name).second)
            rep.violations.push_back("duplicate event " + e.name);
    }
    std::unordered_set<std::string> state_names;
    for (const auto& s : draft.states) {
        if (!state_names.insert(s.name).second)
            rep.violations.push_back("duplicate state " + s.name);
    }
    if (draft.initials.empty() && !draft.states.empty())
        rep.violations.push_back("missing initial state");
    if (draft.initials.size() > 1)
        rep.violations.push_back("more than one initial state");
    for (const auto& i : draft.initials) {
        if (!state_names.count(i)) rep.violations.push_back("unknown state " + i);
    }
    for (const auto& e : draft.edges) {
        if (!state_names.count(e.src)) rep.violations.push_back("unknown state " + e.src);
        if (!state_names.count(e.dst)) rep.violations.push_back("unknown state " + e.dst);
        if (!event_names.count(e.event)) rep.violations.push_back("unknown event " + e.event);
    }
    return rep;
}

Automaton compile(const AutomatonDraft& draft) {
    ValidationReport rep = validate(draft);
    if (!rep.ok()) throw std::invalid_argument("invalid automaton: " + rep.violations.front());

    Automaton a;
    a.name_ = draft.name;
    a.alphabet_ = EventAlphabet(draft.events);
    for (const auto& s : draft.states) a.state_names_.push_back(s.name);
    std::sort(a.state_names_.begin(), a.state_names_.end());
    a.marked_.assign(a.state_names_.size(), false);
    for (const auto& s : draft.states)
        if (s.marked) a.marked_[static_cast<size_t>(a.state_index(s.name))] = true;
    a.initial_ = draft.initials.empty() ? kNoState : a.state_index(draft.initials.front());
    a.transitions_.assign(a.state_names_.size(),
                          std::vector<StateSet>(static_cast<size_t>(a.alphabet_.size())));
    for (const auto& e : draft.edges) {
        StateId src = a.state_index(e.src);
        StateId dst = a.state_index(e.dst);
        EventId ev = a.alphabet_.index_of(e.event);
        a.transitions_[static_cast<size_t>(src)][static_cast<size_t>(ev)].push_back(dst);
    }
    for (auto& per_state : a.transitions_)
        for (auto& succ : per_state) sort_unique(succ);
    return a;
}

Automaton make_empty(const EventAlphabet& alphabet, const std::string& name) {
    Automaton a;
    a.name_ = name;
    a.alphabet_ = alphabet;
    a.initial_ = kNoState;
    return a;
}

// ---------------------------------------------------------------------------
// Structural operators
// ---------------------------------------------------------------------------

namespace {

std::vector<bool> reachable_states(const Automaton& a) {
    std::vector<bool> seen(static_cast<size_t>(a.num_states()), false);
    if (a.initial() == kNoState) return seen;
    std::deque<StateId> queue{a.initial()};
    seen[static_cast<size_t>(a.initial())] = true;
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        for (EventId e = 0; e < a.alphabet().size(); ++e) {
            for (StateId t : a.successors(s, e)) {
                if (!seen[static_cast<size_t>(t)]) {
                    seen[static_cast<size_t>(t)] = true;
                    queue.push_back(t);
                }
            }
        }
    }
    return seen;
}

/// Rebuilds an automaton keeping exactly the states in `keep` (and the
/// initial state if kept); transitions clipped to kept endpoints.
Automaton subautomaton(const Automaton& a, const std::vector<bool>& keep) {
    AutomatonDraft draft;
    draft.name = a.name();
    draft.events = a.alphabet().events();
    bool initial_kept = a.initial() != kNoState && keep[static_cast<size_t>(a.initial())];
    if (!initial_kept) return make_empty(a.alphabet(), a.name());
    for (StateId s = 0; s < a.num_states(); ++s) {
        if (!keep[static_cast<size_t>(s)]) continue;
        draft.states.push_back({a.state_name(s), a.is_marked(s)});
    }
    draft.initials.push_back(a.state_name(a.initial()));
    for (StateId s = 0; s < a.num_states(); ++s) {
        if (!keep[static_cast<size_t>(s)]) continue;
        for (EventId e = 0; e < a.alphabet().size(); ++e) {
            for (StateId t : a.successors(s, e)) {
                if (!keep[static_cast<size_t>(t)]) continue;
                draft.edges.push_back({a.state_name(s), a.alphabet().event(e).name, a.state_name(t)});
            }
        }
    }
    return compile(draft);
}

}  // namespace

Automaton accessible(const Automaton& a) {
    if (a.is_empty()) return a;
    return subautomaton(a, reachable_states(a));
}

Automaton restrict_to(const Automaton& r, const StatePairSet& z) {
    if (z.num_spec() != r.num_states())
        throw std::invalid_argument("pair set universe does not match the spec");
    std::vector<bool> keep(static_cast<size_t>(r.num_states()), false);
    for (StateId q : z.spec_projection()) keep[static_cast<size_t>(q)] = true;
    Automaton clipped = subautomaton(r, keep);
    return accessible(clipped);
}

StateSet step(const Automaton& a, const StateSet& from, const Word& s) {
    for (EventId e : s) {
        if (e < 0 || e >= a.alphabet().size())
            throw std::invalid_argument("unknown event in word");
    }
    StateSet cur = from;
    sort_unique(cur);
    for (EventId e : s) {
        StateSet next;
        for (StateId u : cur)
            for (StateId v : a.successors(u, e)) next.push_back(v);
        sort_unique(next);
        cur = std::move(next);
        if (cur.empty()) break;
    }
    return cur;
}

StateSet step_from_initial(const Automaton& a, const Word& s) {
    if (a.initial() == kNoState) return {};
    return step(a, {a.initial()}, s);
}

Word project(const EventAlphabet& alphabet, const Word& s) {
    Word out;
    for (EventId e : s) {
        if (e < 0 || e >= alphabet.size()) throw std::invalid_argument("unknown event in word");
        if (alphabet.event(e).observable) out.push_back(e);
    }
    return out;
}

std::vector<EventId> active_events(const Automaton& a, StateId x) {
    if (x < 0 || x >= a.num_states()) throw std::invalid_argument("unknown state");
    std::vector<EventId> out;
    for (EventId e = 0; e < a.alphabet().size(); ++e)
        if (!a.successors(x, e).empty()) out.push_back(e);
    return out;
}

namespace {

/// Reachable pairs of the self-product: (u, v) such that some string
/// reaches both u and v from the initial state.
std::vector<std::vector<bool>> common_string_pairs(const Automaton& a) {
    int n = a.num_states();
    std::vector<std::vector<bool>> seen(static_cast<size_t>(n),
                                        std::vector<bool>(static_cast<size_t>(n), false));
    if (a.initial() == kNoState) return seen;
    std::deque<std::pair<StateId, StateId>> queue;
    seen[static_cast<size_t>(a.initial())][static_cast<size_t>(a.initial())] = true;
    queue.emplace_back(a.initial(), a.initial());
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        for (EventId e = 0; e < a.alphabet().size(); ++e) {
            for (StateId u2 : a.successors(u, e)) {
                for (StateId v2 : a.successors(v, e)) {
                    if (!seen[static_cast<size_t>(u2)][static_cast<size_t>(v2)]) {
                        seen[static_cast<size_t>(u2)][static_cast<size_t>(v2)] = true;
                        queue.emplace_back(u2, v2);
                    }
                }
            }
        }
    }
    return seen;
}

}  // namespace

StateSet nondet_state_set(const Automaton& a, StateId x) {
    if (x < 0 || x >= a.num_states()) throw std::invalid_argument("unknown state");
    auto pairs = common_string_pairs(a);
    if (!pairs[static_cast<size_t>(x)][static_cast<size_t>(x)])
        throw std::invalid_argument("state " + a.state_name(x) + " is unreachable");
    StateSet out;
    for (StateId v = 0; v < a.num_states(); ++v)
        if (pairs[static_cast<size_t>(x)][static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<EventId> nondet_active_events(const Automaton& a, StateId x) {
    std::vector<bool> active(static_cast<size_t>(a.alphabet().size()), false);
    for (StateId v : nondet_state_set(a, x))
        for (EventId e : active_events(a, v)) active[static_cast<size_t>(e)] = true;
    std::vector<EventId> out;
    for (EventId e = 0; e < a.alphabet().size(); ++e)
        if (active[static_cast<size_t>(e)]) out.push_back(e);
    return out;
}

// ---------------------------------------------------------------------------
// String counting
// ---------------------------------------------------------------------------

namespace {

struct SubsetGraph {
    std::vector<StateSet> nodes;                  // node 0 = {initial}
    std::vector<std::vector<int>> succ;           // succ[node] -> target nodes, one per defined event
};

SubsetGraph build_subset_graph(const Automaton& a) {
    SubsetGraph g;
    if (a.initial() == kNoState) return g;
    std::map<StateSet, int> index;
    g.nodes.push_back({a.initial()});
    index[g.nodes[0]] = 0;
    g.succ.emplace_back();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        for (EventId e = 0; e < a.alphabet().size(); ++e) {
            StateSet next;
            for (StateId u : g.nodes[i])
                for (StateId v : a.successors(u, e)) next.push_back(v);
            sort_unique(next);
            if (next.empty()) continue;
            auto [it, inserted] = index.emplace(next, static_cast<int>(g.nodes.size()));
            if (inserted) {
                g.nodes.push_back(next);
                g.succ.emplace_back();
            }
            g.succ[i].push_back(it->second);
        }
    }
    return g;
}

}  // namespace

StateSet StringCountClass::multi_string_states() const {
    StateSet out;
    for (std::size_t q = 0; q < per_state.size(); ++q)
        if (per_state[q] == StringCount::two_or_more) out.push_back(static_cast<StateId>(q));
    return out;
}

StringCountClass string_count_class(const Automaton& a) {
    StringCountClass result;
    result.per_state.assign(static_cast<size_t>(a.num_states()), StringCount::unreachable);
    SubsetGraph g = build_subset_graph(a);
    if (g.nodes.empty()) return result;

    int n = static_cast<int>(g.nodes.size());
    for (StateId q = 0; q < a.num_states(); ++q) {
        std::vector<bool> accepting(static_cast<size_t>(n), false);
        bool any = false;
        for (int i = 0; i < n; ++i) {
            if (std::binary_search(g.nodes[static_cast<size_t>(i)].begin(),
                                   g.nodes[static_cast<size_t>(i)].end(), q)) {
                accepting[static_cast<size_t>(i)] = true;
                any = true;
            }
        }
        if (!any) continue;  // unreachable

        // Nodes that can still reach an accepting node.
        std::vector<std::vector<int>> pred(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int t : g.succ[static_cast<size_t>(i)]) pred[static_cast<size_t>(t)].push_back(i);
        std::vector<bool> relevant(static_cast<size_t>(n), false);
        std::deque<int> queue;
        for (int i = 0; i < n; ++i)
            if (accepting[static_cast<size_t>(i)]) {
                relevant[static_cast<size_t>(i)] = true;
                queue.push_back(i);
            }
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int p : pred[static_cast<size_t>(i)])
                if (!relevant[static_cast<size_t>(p)]) {
                    relevant[static_cast<size_t>(p)] = true;
                    queue.push_back(p);
                }
        }

        // Cycle within relevant nodes => infinitely many strings.
        std::vector<int> color(static_cast<size_t>(n), 0);  // 0 white, 1 on stack, 2 done
        bool cycle = false;
        std::vector<std::pair<int, std::size_t>> stack;
        if (relevant[0]) {
            stack.emplace_back(0, 0);
            color[0] = 1;
            while (!stack.empty() && !cycle) {
                auto& [node, edge] = stack.back();
                const auto& out = g.succ[static_cast<size_t>(node)];
                bool advanced = false;
                while (edge < out.size()) {
                    int t = out[edge++];
                    if (!relevant[static_cast<size_t>(t)]) continue;
                    if (color[static_cast<size_t>(t)] == 1) {
                        cycle = true;
                        break;
                    }
                    if (color[static_cast<size_t>(t)] == 0) {
                        color[static_cast<size_t>(t)] = 1;
                        stack.emplace_back(t, 0);
                        advanced = true;
                        break;
                    }
                }
                if (cycle) break;
                if (!advanced && stack.back().second >= g.succ[static_cast<size_t>(stack.back().first)].size()) {
                    color[static_cast<size_t>(stack.back().first)] = 2;
                    stack.pop_back();
                }
            }
        }
        if (cycle) {
            result.per_state[static_cast<size_t>(q)] = StringCount::two_or_more;
            continue;
        }

        // Acyclic: count accepting paths from node 0, capped at 2.
        // Topological order via DFS finish times on relevant nodes.
        std::vector<int> topo;
        std::vector<int> mark(static_cast<size_t>(n), 0);
        std::vector<std::pair<int, std::size_t>> st;
        if (relevant[0]) {
            st.emplace_back(0, 0);
            mark[0] = 1;
            while (!st.empty()) {
                auto& [node, edge] = st.back();
                const auto& out = g.succ[static_cast<size_t>(node)];
                bool advanced = false;
                while (edge < out.size()) {
                    int t = out[edge++];
                    if (!relevant[static_cast<size_t>(t)] || mark[static_cast<size_t>(t)]) continue;
                    mark[static_cast<size_t>(t)] = 1;
                    st.emplace_back(t, 0);
                    advanced = true;
                    break;
                }
                if (!advanced && st.back().second >= g.succ[static_cast<size_t>(st.back().first)].size()) {
                    topo.push_back(st.back().first);
                    st.pop_back();
                }
            }
        }
        std::reverse(topo.begin(), topo.end());
        std::vector<int> count(static_cast<size_t>(n), 0);
        if (relevant[0]) count[0] = 1;
        int total = 0;
        for (int node : topo) {
            int c = count[static_cast<size_t>(node)];
            if (c == 0) continue;
            if (accepting[static_cast<size_t>(node)]) total = std::min(2, total + c);
            for (int t : g.succ[static_cast<size_t>(node)]) {
                if (!relevant[static_cast<size_t>(t)]) continue;
                count[static_cast<size_t>(t)] = std::min(2, count[static_cast<size_t>(t)] + c);
            }
        }
        result.per_state[static_cast<size_t>(q)] =
            total >= 2 ? StringCount::two_or_more
                       : (total == 1 ? StringCount::exactly_one : StringCount::unreachable);
    }
    return result;
}

std::set<Word> bounded_language(const Automaton& a, int k) {
    std::set<Word> out;
    if (a.initial() == kNoState) return out;
    // Walk distinct words via their (deterministic) reach sets.
    struct Frame {
        StateSet reach;
        Word word;
    };
    std::deque<Frame> queue;
    queue.push_back({{a.initial()}, {}});
    out.insert(Word{});
    while (!queue.empty()) {
        Frame f = std::move(queue.front());
        queue.pop_front();
        if (static_cast<int>(f.word.size()) >= k) continue;
        for (EventId e = 0; e < a.alphabet().size(); ++e) {
            StateSet next;
            for (StateId u : f.reach)
                for (StateId v : a.successors(u, e)) next.push_back(v);
            sort_unique(next);
            if (next.empty()) continue;
            Word w = f.word;
            w.push_back(e);
            out.insert(w);
            queue.push_back({std::move(next), std::move(w)});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Word helpers
// ---------------------------------------------------------------------------

std::string format_word(const EventAlphabet& alphabet, const Word& s) {
    if (s.empty()) return "eps";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += '.';
        out += alphabet.event(s[i]).name;
    }
    return out;
}

Word parse_word(const EventAlphabet& alphabet, const std::string& text) {
    if (text.empty() || text == "eps") return {};
    Word out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('.', start);
        if (end == std::string::npos) end = text.size();
        std::string name = text.substr(start, end - start);
        EventId e = alphabet.index_of(name);
        if (e == kEpsilon) throw std::invalid_argument("unknown event " + name);
        out.push_back(e);
        start = end + 1;
        if (end == text.size()) break;
    }
    return out;
}

}  // namespace simsup
