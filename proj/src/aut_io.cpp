#include "simsup/aut_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace simsup {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

}  // namespace

Automaton parse_aut(const std::string& text) {
    AutomatonDraft draft;
    std::unordered_set<std::string> events, states;
    bool saw_initial = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& directive = tokens[0];
        if (directive == "automaton") {
            if (tokens.size() != 2) throw ParseError("automaton expects a name", lineno);
            draft.name = tokens[1];
        } else if (directive == "event") {
            if (tokens.size() != 4) throw ParseError("event expects <name> <c|uc> <o|uo>", lineno);
            if (!events.insert(tokens[1]).second)
                throw ParseError("duplicate event " + tokens[1], lineno);
            Event e;
            e.name = tokens[1];
            if (tokens[2] == "c")
                e.controllable = true;
            else if (tokens[2] == "uc")
                e.controllable = false;
            else
                throw ParseError("expected c or uc, got " + tokens[2], lineno);
            if (tokens[3] == "o")
                e.observable = true;
            else if (tokens[3] == "uo")
                e.observable = false;
            else
                throw ParseError("expected o or uo, got " + tokens[3], lineno);
            draft.events.push_back(e);
        } else if (directive == "state") {
            if (tokens.size() != 2 && !(tokens.size() == 3 && tokens[2] == "marked"))
                throw ParseError("state expects <name> [marked]", lineno);
            if (!states.insert(tokens[1]).second)
                throw ParseError("duplicate state " + tokens[1], lineno);
            draft.states.push_back({tokens[1], tokens.size() == 3});
        } else if (directive == "initial") {
            if (tokens.size() != 2) throw ParseError("initial expects a state name", lineno);
            if (saw_initial) throw ParseError("more than one initial state", lineno);
            if (!states.count(tokens[1])) throw ParseError("unknown state " + tokens[1], lineno);
            draft.initials.push_back(tokens[1]);
            saw_initial = true;
        } else if (directive == "trans") {
            if (tokens.size() != 4) throw ParseError("trans expects <src> <event> <dst>", lineno);
            if (!states.count(tokens[1])) throw ParseError("unknown state " + tokens[1], lineno);
            if (!events.count(tokens[2])) throw ParseError("unknown event " + tokens[2], lineno);
            if (!states.count(tokens[3])) throw ParseError("unknown state " + tokens[3], lineno);
            draft.edges.push_back({tokens[1], tokens[2], tokens[3]});
        } else {
            throw ParseError("unknown directive " + directive, lineno);
        }
    }
    if (!saw_initial && !draft.states.empty()) throw ParseError("missing initial state", lineno);
    return compile(draft);
}

Automaton parse_aut_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_aut(buf.str());
}

std::string write_aut(const Automaton& a) {
    std::ostringstream out;
    out << "automaton " << a.name() << "\n";
    for (const Event& e : a.alphabet().events())
        out << "event " << e.name << ' ' << (e.controllable ? "c" : "uc") << ' '
            << (e.observable ? "o" : "uo") << "\n";
    for (StateId s = 0; s < a.num_states(); ++s)
        out << "state " << a.state_name(s) << (a.is_marked(s) ? " marked" : "") << "\n";
    if (a.initial() != kNoState) out << "initial " << a.state_name(a.initial()) << "\n";
    for (StateId s = 0; s < a.num_states(); ++s)
        for (EventId e = 0; e < a.alphabet().size(); ++e)
            for (StateId t : a.successors(s, e))
                out << "trans " << a.state_name(s) << ' ' << a.alphabet().event(e).name << ' '
                    << a.state_name(t) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

std::string export_dot(const Automaton& a) {
    std::ostringstream out;
    out << "digraph \"" << a.name() << "\" {\n  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    if (a.initial() != kNoState) {
        out << "  __init [shape=point, style=invis];\n";
        out << "  __init -> \"" << a.state_name(a.initial()) << "\";\n";
    }
    for (StateId s = 0; s < a.num_states(); ++s) {
        out << "  \"" << a.state_name(s) << "\"";
        if (a.is_marked(s)) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (StateId s = 0; s < a.num_states(); ++s)
        for (EventId e = 0; e < a.alphabet().size(); ++e)
            for (StateId t : a.successors(s, e))
                out << "  \"" << a.state_name(s) << "\" -> \"" << a.state_name(t)
                    << "\" [label=\"" << a.alphabet().event(e).name << "\"];\n";
    out << "}\n";
    return out.str();
}

namespace {

std::string pair_label(const Automaton& r, const Automaton& g, StateId q, StateId x) {
    return "(" + r.state_name(q) + "," + g.state_name(x) + ")";
}

}  // namespace

std::string export_dot(const ControllableProduct& p, const Automaton& rz, const Automaton& g) {
    std::ostringstream out;
    out << "digraph controllable_product {\n  rankdir=LR;\n  node [shape=circle];\n";
    bool has_violation = !p.violations.empty();
    if (has_violation)
        out << "  \"(qv,xv)\" [style=filled, fillcolor=lightgray];\n";
    if (p.initial >= 0) {
        out << "  __init [shape=point, style=invis];\n";
        auto [q0, x0] = p.pairs[static_cast<size_t>(p.initial)];
        out << "  __init -> \"" << pair_label(rz, g, q0, x0) << "\";\n";
    }
    for (std::size_t i = 0; i < p.pairs.size(); ++i) {
        auto [q, x] = p.pairs[i];
        out << "  \"" << pair_label(rz, g, q, x) << "\"";
        if (rz.is_marked(q) && g.is_marked(x)) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (std::size_t i = 0; i < p.pairs.size(); ++i) {
        auto [q, x] = p.pairs[i];
        for (EventId e = 0; e < g.alphabet().size(); ++e)
            for (int t : p.transitions[i][static_cast<size_t>(e)]) {
                auto [q2, x2] = p.pairs[static_cast<size_t>(t)];
                out << "  \"" << pair_label(rz, g, q, x) << "\" -> \"" << pair_label(rz, g, q2, x2)
                    << "\" [label=\"" << g.alphabet().event(e).name << "\"];\n";
            }
    }
    for (const auto& v : p.violations) {
        auto [q, x] = p.pairs[static_cast<size_t>(v.pair)];
        out << "  \"" << pair_label(rz, g, q, x) << "\" -> \"(qv,xv)\" [label=\""
            << g.alphabet().event(v.event).name << "\", style=dashed];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const ObservableProduct& p, const Automaton& r, const Automaton& g) {
    std::ostringstream out;
    out << "digraph observable_product {\n  rankdir=LR;\n  node [shape=circle];\n";
    if (p.initial >= 0) {
        out << "  __init [shape=point, style=invis];\n";
        auto [q0, x0] = p.pairs[static_cast<size_t>(p.initial)];
        out << "  __init -> \"" << pair_label(r, g, q0, x0) << "\";\n";
    }
    for (std::size_t i = 0; i < p.pairs.size(); ++i) {
        auto [q, x] = p.pairs[i];
        out << "  \"" << pair_label(r, g, q, x) << "\"";
        if (r.is_marked(q) && g.is_marked(x)) out << " [shape=doublecircle]";
        out << ";\n";
    }
    auto name_of = [&](EventId e) {
        return e == kEpsilon ? std::string("~") : g.alphabet().event(e).name;
    };
    for (const auto& edge : p.edges) {
        auto [q, x] = p.pairs[static_cast<size_t>(edge.from)];
        auto [q2, x2] = p.pairs[static_cast<size_t>(edge.to)];
        out << "  \"" << pair_label(r, g, q, x) << "\" -> \"" << pair_label(r, g, q2, x2)
            << "\" [label=\"(" << name_of(edge.left) << "," << name_of(edge.right) << ")\"];\n";
    }
    out << "}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Trace serialization
// ---------------------------------------------------------------------------

std::string write_trace(const SynthesisTrace& trace, const Automaton& r, const Automaton& g) {
    std::ostringstream out;
    out << "mode=" << (trace.mode == SynthesisMode::strong_observable ? "so" : "cso") << "\n";
    if (trace.mode == SynthesisMode::controllable_strong_observable)
        out << "calculable_controllable=" << (trace.calc_controllable.ok ? "true" : "false")
            << "\n";
    out << "calculable_strong_observable="
        << (trace.calc_strong_observable.ok ? "true" : "false") << "\n";
    for (const auto& rec : trace.iterations) {
        out << "iter=" << rec.index << "\n";
        out << "size=" << rec.size << "\n";
        out << "removed=";
        for (std::size_t i = 0; i < rec.removed.size(); ++i)
            out << (i ? "," : "") << r.state_name(rec.removed[i]);
        out << "\n";
        out << "reason=";
        bool first = true;
        for (StateId q : rec.removed) {
            auto it = rec.diagnostics.by_state.find(q);
            if (it == rec.diagnostics.by_state.end()) {
                out << (first ? "" : ";") << r.state_name(q) << ":sim";
            } else {
                out << (first ? "" : ";") << r.state_name(q) << ":"
                    << it->second.front().format(r, g);
            }
            first = false;
        }
        out << "\n";
    }
    if (trace.exists) {
        out << "outcome=result\n";
        out << "states=";
        for (StateId s = 0; s < trace.result.num_states(); ++s)
            out << (s ? "," : "") << trace.result.state_name(s);
        out << "\n";
    } else {
        out << "outcome=nonexistent\n";
        out << "cause=" << trace.nonexistent_reason;
        if (!trace.calc_controllable.ok)
            out << " [" << trace.calc_controllable.witness << "]";
        else if (!trace.calc_strong_observable.ok)
            out << " [" << trace.calc_strong_observable.witness << "]";
        out << "\n";
    }
    return out.str();
}

}  // namespace simsup
