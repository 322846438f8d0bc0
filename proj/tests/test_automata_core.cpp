#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "simsup/automaton.hpp"
#include "simsup/oracle.hpp"

using namespace simsup;

namespace {

Word w(const Automaton& a, const std::string& text) { return parse_word(a.alphabet(), text); }

StateSet ids(const Automaton& a, const std::vector<std::string>& names) {
    StateSet out;
    for (const auto& n : names) out.push_back(a.state_index(n));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("validate reports invariant violations by name") {
    AutomatonDraft ok;
    ok.events = {{"a", true, true}};
    ok.states = {{"q0", false}};
    ok.initials = {"q0"};
    CHECK(validate(ok).ok());

    AutomatonDraft unknown = ok;
    unknown.edges.push_back({"q0", "a", "q9"});
    auto rep = validate(unknown);
    REQUIRE(!rep.ok());
    CHECK(rep.violations.front() == "unknown state q9");

    AutomatonDraft dup = ok;
    dup.events.push_back({"a", false, false});
    rep = validate(dup);
    REQUIRE(!rep.ok());
    CHECK(rep.violations.front() == "duplicate event a");

    AutomatonDraft no_init = ok;
    no_init.initials.clear();
    CHECK(!validate(no_init).ok());

    AutomatonDraft two_init = ok;
    two_init.states.push_back({"q1", false});
    two_init.initials.push_back("q1");
    CHECK(!validate(two_init).ok());
}

TEST_CASE("accessible trims unreachable states") {
    Automaton g1 = load_fixture("t1_plant");
    CHECK(accessible(g1) == g1);  // fully reachable

    // T1 plant plus an isolated state.
    Automaton with_isolated = parse_aut(R"(
automaton G1
event a c o
event b c o
event c c o
event u uc o
state x0
state x1
state x2
state x3
state x4
state x5
initial x0
trans x0 a x1
trans x0 b x2
trans x1 u x3
trans x2 c x4
)");
    Automaton trimmed = accessible(with_isolated);
    CHECK(trimmed.num_states() == 5);
    CHECK(trimmed.state_index("x5") == kNoState);
    CHECK(trimmed == g1);

    // idempotence on a batch of random automata
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        oracle::RandomInstanceSpec spec;
        spec.seed = seed;
        spec.transition_density = 0.25;
        auto [r, g] = oracle::random_instance(spec);
        CHECK(accessible(accessible(r)) == accessible(r));
        CHECK(accessible(accessible(g)) == accessible(g));
    }
}

TEST_CASE("restrict_to keeps the pair set's spec rows and trims") {
    Automaton r1 = load_fixture("t1_spec");
    Automaton g1 = load_fixture("t1_plant");

    StatePairSet full = StatePairSet::full(r1.num_states(), g1.num_states());
    CHECK(restrict_to(r1, full) == accessible(r1));

    StatePairSet none(r1.num_states(), g1.num_states());
    Automaton empty = restrict_to(r1, none);
    CHECK(empty.is_empty());
    CHECK(empty.initial() == kNoState);

    StatePairSet no_q1 = full;
    no_q1.remove_spec_row(r1.state_index("q1"));
    Automaton rest = restrict_to(r1, no_q1);
    CHECK(rest.state_names() == std::vector<std::string>{"q0", "q2", "q3"});
    CHECK(rest.successors(rest.state_index("q0"), rest.alphabet().index_of("a")).empty());
    CHECK(rest.successors(rest.state_index("q0"), rest.alphabet().index_of("b")) ==
          StateSet{rest.state_index("q2")});

    // universe mismatch
    CHECK_THROWS_AS(restrict_to(r1, StatePairSet::full(3, 5)), std::invalid_argument);

    // the result depends only on the Q-projection
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        oracle::RandomInstanceSpec spec;
        spec.seed = seed + 1000;
        auto [r, g] = oracle::random_instance(spec);
        oracle::RandomInstanceSpec bits;
        bits.seed = seed;
        StatePairSet z(r.num_states(), g.num_states());
        std::uint64_t h = seed * 2654435761u;
        for (int q = 0; q < r.num_states(); ++q)
            for (int x = 0; x < g.num_states(); ++x)
                if ((h = h * 6364136223846793005ull + 1442695040888963407ull) >> 62) z.insert(q, x);
        StatePairSet widened = z;
        for (int q : z.spec_projection())
            for (int x = 0; x < g.num_states(); ++x) widened.insert(q, x);
        CHECK(restrict_to(r, z) == restrict_to(r, widened));
    }
}

TEST_CASE("step follows words through the relation") {
    Automaton g1 = load_fixture("t1_plant");
    StateSet x0 = {g1.state_index("x0")};
    CHECK(step(g1, x0, {}) == x0);
    CHECK(step(g1, x0, w(g1, "a.u")) == ids(g1, {"x3"}));
    CHECK(step(g1, x0, w(g1, "a.c")).empty());
}

TEST_CASE("project erases unobservable events") {
    Automaton g2 = load_fixture("t2_plant");
    CHECK(project(g2.alphabet(), {}) == Word{});
    CHECK(project(g2.alphabet(), w(g2, "g.d")) == w(g2, "d"));
    CHECK(project(g2.alphabet(), w(g2, "d.r")) == w(g2, "d.r"));
}

TEST_CASE("active_events reads the outgoing relation") {
    Automaton g1 = load_fixture("t1_plant");
    auto gamma_x0 = active_events(g1, g1.state_index("x0"));
    REQUIRE(gamma_x0.size() == 2);
    CHECK(g1.alphabet().event(gamma_x0[0]).name == "a");
    CHECK(g1.alphabet().event(gamma_x0[1]).name == "b");
    CHECK(active_events(g1, g1.state_index("x3")).empty());
    auto gamma_x1 = active_events(g1, g1.state_index("x1"));
    REQUIRE(gamma_x1.size() == 1);
    CHECK(g1.alphabet().event(gamma_x1[0]).name == "u");
    CHECK_THROWS_AS(active_events(g1, 99), std::invalid_argument);
}

TEST_CASE("nondet_state_set is the common-string closure") {
    Automaton g1 = load_fixture("t1_plant");
    // deterministic: every reachable state only pairs with itself
    for (StateId s = 0; s < g1.num_states(); ++s)
        CHECK(nondet_state_set(g1, s) == StateSet{s});

    Automaton split = parse_aut(R"(
automaton A
event a c o
event u uc o
event c c o
state x0
state x1
state x2
initial x0
trans x0 a x1
trans x0 a x2
trans x1 u x1
trans x2 c x2
)");
    CHECK(nondet_state_set(split, split.state_index("x1")) == ids(split, {"x1", "x2"}));
    auto gn = nondet_active_events(split, split.state_index("x1"));
    REQUIRE(gn.size() == 2);
    CHECK(split.alphabet().event(gn[0]).name == "c");
    CHECK(split.alphabet().event(gn[1]).name == "u");

    Automaton unreachable = parse_aut(R"(
automaton A
event a c o
state x0
state x1
initial x0
)");
    CHECK_THROWS_AS(nondet_state_set(unreachable, unreachable.state_index("x1")),
                    std::invalid_argument);

    // symmetry and reflexivity on random automata
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        oracle::RandomInstanceSpec spec;
        spec.seed = seed + 7;
        auto [r, g] = oracle::random_instance(spec);
        for (StateId u = 0; u < g.num_states(); ++u) {
            StateSet xu;
            try {
                xu = nondet_state_set(g, u);
            } catch (const std::invalid_argument&) {
                continue;
            }
            CHECK(std::binary_search(xu.begin(), xu.end(), u));
            auto gamma = active_events(g, u);
            auto gamma_n = nondet_active_events(g, u);
            CHECK(std::includes(gamma_n.begin(), gamma_n.end(), gamma.begin(), gamma.end()));
            for (StateId v : xu) {
                StateSet xv = nondet_state_set(g, v);
                CHECK(std::binary_search(xv.begin(), xv.end(), u));
            }
        }
    }
}

TEST_CASE("string_count_class counts strings, not paths") {
    Automaton two_strings = parse_aut(R"(
automaton A
event a c o
event b c o
state q0
state q1
initial q0
trans q0 a q1
trans q0 b q1
)");
    auto c = string_count_class(two_strings);
    CHECK(c.multi_string_states() == StateSet{two_strings.state_index("q1")});

    Automaton loop = parse_aut(R"(
automaton A
event a c o
state q0
initial q0
trans q0 a q0
)");
    CHECK(string_count_class(loop).multi_string_states() == StateSet{0});

    Automaton two_paths = parse_aut(R"(
automaton A
event a c o
state q0
state q1
state q2
initial q0
trans q0 a q1
trans q0 a q2
)");
    CHECK(string_count_class(two_paths).multi_string_states().empty());
}

TEST_CASE("string_count_class agrees with brute-force enumeration") {
    int tested = 0;
    for (std::uint64_t seed = 0; seed < 150 && tested < 40; ++seed) {
        oracle::RandomInstanceSpec spec;
        spec.seed = seed + 31;
        spec.max_spec_states = 5;
        spec.max_plant_states = 5;
        spec.transition_density = 0.25;
        auto [a, unused] = oracle::random_instance(spec);

        // subset-construction macro-state count, rebuilt here
        std::set<StateSet> macros;
        std::vector<StateSet> frontier{{a.initial()}};
        macros.insert(frontier[0]);
        while (!frontier.empty()) {
            StateSet cur = frontier.back();
            frontier.pop_back();
            for (EventId e = 0; e < a.alphabet().size(); ++e) {
                StateSet next = step(a, cur, {e});
                if (!next.empty() && macros.insert(next).second) frontier.push_back(next);
            }
        }
        int depth = static_cast<int>(macros.size()) + 1;

        // literal enumeration of every string up to `depth`, with a budget
        // so cyclic dense instances are skipped rather than enumerated
        std::vector<int> counted(static_cast<size_t>(a.num_states()), 0);
        std::vector<std::pair<StateSet, int>> stack{{{a.initial()}, 0}};
        std::size_t budget = 400000;
        bool feasible = true;
        for (StateId q : stack[0].first) counted[static_cast<size_t>(q)] = 1;
        while (!stack.empty() && feasible) {
            auto [cur, len] = stack.back();
            stack.pop_back();
            if (len >= depth) continue;
            for (EventId e = 0; e < a.alphabet().size(); ++e) {
                StateSet next = step(a, cur, {e});
                if (next.empty()) continue;
                for (StateId q : next)
                    counted[static_cast<size_t>(q)] = std::min(2, counted[static_cast<size_t>(q)] + 1);
                if (budget-- == 0) {
                    feasible = false;
                    break;
                }
                stack.push_back({std::move(next), len + 1});
            }
        }
        if (!feasible) continue;
        ++tested;

        auto cls = string_count_class(a);
        for (StateId q = 0; q < a.num_states(); ++q) {
            StringCount expect = counted[static_cast<size_t>(q)] == 0 ? StringCount::unreachable
                                 : counted[static_cast<size_t>(q)] == 1 ? StringCount::exactly_one
                                                                        : StringCount::two_or_more;
            CHECK(cls.per_state[static_cast<size_t>(q)] == expect);
        }
    }
    CHECK(tested >= 40);
}

TEST_CASE("bounded_language enumerates the short strings") {
    Automaton g1 = load_fixture("t1_plant");
    Automaton empty = make_empty(g1.alphabet());
    CHECK(bounded_language(empty, 3).empty());
    CHECK(bounded_language(g1, 0) == std::set<Word>{{}});

    std::set<Word> expect = {{}, w(g1, "a"), w(g1, "b"), w(g1, "a.u"), w(g1, "b.c")};
    CHECK(bounded_language(g1, 2) == expect);

    // monotone in the bound; projection matches the inductive definition
    Automaton g2 = load_fixture("t2_plant");
    for (int k = 0; k < 4; ++k) {
        auto lo = bounded_language(g2, k);
        auto hi = bounded_language(g2, k + 1);
        CHECK(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
        for (const Word& word : lo) {
            Word p;
            for (EventId e : word)
                if (g2.alphabet().event(e).observable) p.push_back(e);
            CHECK(project(g2.alphabet(), word) == p);
        }
    }
}

TEST_CASE("words render and parse") {
    Automaton g2 = load_fixture("t2_plant");
    CHECK(format_word(g2.alphabet(), {}) == "eps");
    CHECK(format_word(g2.alphabet(), w(g2, "g.d")) == "g.d");
    CHECK(parse_word(g2.alphabet(), "eps") == Word{});
    CHECK_THROWS_AS(parse_word(g2.alphabet(), "zz"), std::invalid_argument);
}
