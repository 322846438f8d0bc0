#include <doctest.h>

#include <chrono>
#include <deque>
#include <iostream>

#include "fixtures.hpp"
#include "simsup/oracle.hpp"
#include "simsup/simulation.hpp"
#include "simsup/synthesis.hpp"

// Acceptance suite: one criterion per test case, one printed verdict line
// per criterion. Every tolerance is pinned here, in code.

using namespace simsup;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << "[criterion " << criterion << "] " << (pass ? "PASS" : "FAIL") << " - " << detail
              << std::endl;
}

StatePairSet random_subset(const StatePairSet& z, std::uint64_t seed) {
    StatePairSet out(z.num_spec(), z.num_plant());
    std::uint64_t h = seed * 0x9e3779b97f4a7c15ull + 1;
    for (auto [q, x] : z.pairs()) {
        h = h * 6364136223846793005ull + 1442695040888963407ull;
        if (h >> 63) out.insert(q, x);
    }
    return out;
}

/// Literal Def-13 simulation-set test (full obligations), local to the
/// acceptance suite so the supremality check does not lean on the engine.
bool full_mode_simulation_set(const Automaton& r, const Automaton& g, const StatePairSet& z) {
    for (auto [q, x] : z.pairs()) {
        if (r.is_marked(q) && !g.is_marked(x)) return false;
        for (EventId e = 0; e < r.alphabet().size(); ++e) {
            for (StateId q2 : r.successors(q, e)) {
                bool matched = false;
                for (StateId x2 : g.successors(x, e))
                    if (z.contains(q2, x2)) {
                        matched = true;
                        break;
                    }
                if (!matched) return false;
            }
        }
    }
    return true;
}

/// Enumerates every full-mode-valid solution (literal simulation set with
/// stable rows containing the initial pair) and requires each to be
/// contained in the engine's answer; with a nonexistent verdict, requires
/// that none exists. Returns false on any escape.
bool full_valid_solutions_contained(const Automaton& r, const Automaton& g, SynthesisMode mode,
                                    const SynthesisTrace& engine) {
    int nq = r.num_states(), nx = g.num_states(), nbits = nq * nx;
    if (nbits > 16 || r.initial() == kNoState || g.initial() == kNoState) return true;

    std::vector<int> row_verdict(std::size_t(1) << nq, -1);
    auto rows_stable = [&](std::uint32_t rows) {
        int& v = row_verdict[rows];
        if (v < 0) {
            StatePairSet zr(nq, nx);
            for (int q = 0; q < nq; ++q)
                if (rows >> q & 1) zr.insert(q, 0);
            Automaton rz = restrict_to(r, zr);
            bool ok = oracle::strong_observable_operator_stable(rz, g);
            if (ok && mode == SynthesisMode::controllable_strong_observable)
                ok = oracle::controllable_operator_stable(rz, g);
            v = ok;
        }
        return v == 1;
    };

    std::uint32_t init_bit = 1u << (r.initial() * nx + g.initial());
    for (std::uint32_t mask = 0; mask < (1u << nbits); ++mask) {
        if (!(mask & init_bit)) continue;
        StatePairSet z(nq, nx);
        std::uint32_t rows = 0;
        for (int b = 0; b < nbits; ++b)
            if (mask >> b & 1) {
                z.insert(b / nx, b % nx);
                rows |= 1u << (b / nx);
            }
        if (!full_mode_simulation_set(r, g, z)) continue;
        if (!rows_stable(rows)) continue;
        if (!engine.exists || !z.subset_of(engine.final_set)) return false;
    }
    return true;
}

/// 30-state tree unfolding of the plant: breadth-first prefix tree, one
/// reaching string per state, hence calculable by construction and
/// simulated by the plant.
Automaton tree_unfolding(const Automaton& g, int max_states) {
    AutomatonDraft draft;
    draft.name = "unfold";
    draft.events = g.alphabet().events();
    struct Node {
        StateId plant;
        std::string name;
    };
    std::deque<Node> queue;
    int counter = 0;
    auto fresh = [&](StateId plant) {
        // fixed-width names keep the canonical order equal to creation order
        std::string digits = std::to_string(counter++);
        std::string name = "u" + std::string(3 - digits.size(), '0') + digits;
        draft.states.push_back({name, g.is_marked(plant)});
        return name;
    };
    std::string root = fresh(g.initial());
    draft.initials.push_back(root);
    queue.push_back({g.initial(), root});
    while (!queue.empty() && counter < max_states) {
        Node n = queue.front();
        queue.pop_front();
        for (EventId e = 0; e < g.alphabet().size() && counter < max_states; ++e) {
            for (StateId t : g.successors(n.plant, e)) {
                if (counter >= max_states) break;
                std::string child = fresh(t);
                draft.edges.push_back({n.name, g.alphabet().event(e).name, child});
                queue.push_back({t, child});
            }
        }
    }
    return compile(draft);
}

}  // namespace

TEST_CASE("criterion 1: manufacturing example reproduction") {
    auto t0 = Clock::now();
    Automaton r = load_fixture("mfg_spec");
    Automaton g = load_fixture("mfg_plant");
    bool pass = r.num_states() == 13 && g.num_states() == 15;

    StatePairSet full = StatePairSet::full(r.num_states(), g.num_states());
    auto qd = q_d(r, g, full);
    auto qdp = q_d_prime(r, g, full);
    auto has = [&](const std::vector<StateId>& v, const char* name) {
        return std::find(v.begin(), v.end(), r.state_index(name)) != v.end();
    };
    pass = pass && has(qd, "q2") && has(qd, "q4");
    pass = pass && has(qdp, "q1");

    SynthesisTrace trace = algorithm2(r, g);
    pass = pass && trace.calc_controllable.ok && trace.calc_strong_observable.ok;
    pass = pass && trace.iterations.size() == 2;  // y2 = y1
    pass = pass && trace.exists && trace.final_set.contains(r.initial(), g.initial());
    std::vector<std::string> expect = {"q0", "q10", "q11", "q12", "q3",
                                       "q5", "q6", "q7", "q8",  "q9"};
    pass = pass && trace.exists && trace.result.state_names() == expect;

    double secs = seconds_since(t0);
    pass = pass && secs < 1.0;
    report(1, pass,
           "Q_d(QxX) contains {q2,q4}, Q_d'(QxX) contains q1, fixpoint in 2 iterations, "
           "result = {q0,q3,q5..q12}, " +
               std::to_string(secs) + "s (< 1s)");
    CHECK(pass);
}

TEST_CASE("criteria 2, 5, 8: oracle supremality, soundness, termination") {
    auto t0 = Clock::now();
    int calculable = 0;
    int engine_exists = 0, exact = 0, nonclosed = 0;
    int validity_fail = 0, containment_fail = 0, nonexist_fail = 0, full_escape = 0;
    int verify_fail = 0, condition_fail = 0, confirm_fail = 0;
    int bound_fail = 0;
    std::uint64_t seed = 0;

    for (; calculable < 500 && seed < 5000; ++seed) {
        oracle::RandomInstanceSpec spec;
        spec.seed = seed;
        spec.alphabet_size = 3;
        spec.fraction_unobservable = 0.3;
        spec.fraction_uncontrollable = 0.3;
        spec.transition_density = 0.35 + 0.1 * (seed % 3);
        spec.spec_substructure_of_plant = (seed % 2) == 0;
        auto [r, g] = oracle::random_instance(spec);
        if (!is_calculable_controllable(r, g).ok) continue;
        if (!is_calculable_strong_observable(r, g).ok) continue;
        ++calculable;
        int k = 2 * std::max(1, r.num_states()) * std::max(1, g.num_states());

        for (auto mode :
             {SynthesisMode::strong_observable, SynthesisMode::controllable_strong_observable}) {
            SynthesisTrace trace =
                mode == SynthesisMode::strong_observable ? algorithm1(r, g) : algorithm2(r, g);

            // criterion 8: termination bound
            if (trace.iterations.size() >
                static_cast<std::size_t>(r.num_states() * g.num_states() + 1))
                ++bound_fail;

            auto orc = oracle::brute_force_supremal(r, g, mode);

            if (trace.exists) {
                if (mode == SynthesisMode::controllable_strong_observable) ++engine_exists;
                // validity: the engine's answer is itself operator-stable
                bool stable = oracle::strong_observable_operator_stable(trace.result, g);
                if (stable && mode == SynthesisMode::controllable_strong_observable)
                    stable = oracle::controllable_operator_stable(trace.result, g);
                if (!stable) ++validity_fail;
                // supremal containment: engine rows within the oracle's union
                if (orc.exists && orc.union_closed) {
                    for (int q = 0; q < r.num_states(); ++q)
                        if (trace.final_set.row_nonempty(q) && !orc.set.row_nonempty(q)) {
                            ++containment_fail;
                            break;
                        }
                    if (mode == SynthesisMode::controllable_strong_observable &&
                        trace.final_set == orc.set)
                        ++exact;
                } else if (orc.exists) {
                    ++nonclosed;
                }
                // criterion 5: verification and bounded-condition oracles
                VerificationReport rep = verify_result(r, g, trace.result);
                bool ok = rep.check("simulated_by_plant").pass &&
                          rep.check("strong_observable_condition").pass &&
                          rep.check("simulated_by_spec").pass &&
                          rep.check("subautomaton_of_spec").pass;
                if (mode == SynthesisMode::controllable_strong_observable)
                    ok = ok && rep.check("controllable_condition").pass;
                if (!ok) ++verify_fail;
                if (!oracle::bounded_strong_observable_condition(trace.result, g, k).ok)
                    ++condition_fail;
                if (mode == SynthesisMode::controllable_strong_observable &&
                    !oracle::bounded_controllable_condition(trace.result, g, k).ok)
                    ++condition_fail;
            }
            // the oracle may keep a smaller solution the greedy iteration
            // discarded, but never the other way round
            if (!orc.exists && trace.exists) ++nonexist_fail;
            // paper-literal supremality: every full-mode-valid solution is
            // below the engine's answer; with a nonexistent verdict, none
            // may exist at all (the criterion-5 confirmation)
            if (!full_valid_solutions_contained(r, g, mode, trace)) {
                if (trace.exists)
                    ++full_escape;
                else
                    ++confirm_fail;
            }
        }
    }
    double secs = seconds_since(t0);

    bool pass2 = calculable >= 500 && validity_fail == 0 && containment_fail == 0 &&
                 nonexist_fail == 0 && full_escape == 0 && secs < 300.0;
    report(2, pass2,
           std::to_string(calculable) + " calculable instances, engine answers valid (" +
               std::to_string(validity_fail) + " violations), rows within supremal union (" +
               std::to_string(containment_fail) + "), oracle-nonexistent never contradicted (" +
               std::to_string(nonexist_fail) + "), full-mode solutions contained (" +
               std::to_string(full_escape) + "); exact pair match " + std::to_string(exact) + "/" +
               std::to_string(engine_exists) + ", non-closed unions " + std::to_string(nonclosed) +
               ", " + std::to_string(secs) + "s (< 300s)");
    CHECK(pass2);

    bool pass5 = verify_fail == 0 && condition_fail == 0 && confirm_fail == 0;
    report(5, pass5,
           "all synthesized results pass verify_result and the bounded-condition oracles (" +
               std::to_string(verify_fail) + "+" + std::to_string(condition_fail) +
               " violations); every nonexistence verdict confirmed against full-mode solutions (" +
               std::to_string(confirm_fail) + " violations)");
    CHECK(pass5);

    bool pass8 = bound_fail == 0;
    report(8, pass8, "iteration count <= |Q|*|X|+1 on every run (" + std::to_string(bound_fail) +
                         " violations)");
    CHECK(pass8);
}

TEST_CASE("criterion 3: monotonicity of the operators") {
    int fs_pairs = 0, op_pairs = 0, fs_fail = 0, fc_fail = 0, fso_fail = 0;
    for (std::uint64_t seed = 0; fs_pairs < 1000 || op_pairs < 1000; ++seed) {
        REQUIRE(seed < 20000);
        oracle::RandomInstanceSpec spec;
        spec.seed = seed + 31337;
        spec.alphabet_size = 3;
        spec.fraction_unobservable = 0.3;
        auto [r, g] = oracle::random_instance(spec);
        bool calculable = is_calculable_controllable(r, g).ok &&
                          is_calculable_strong_observable(r, g).ok;
        for (int rep = 0; rep < 3; ++rep) {
            StatePairSet big = random_subset(StatePairSet::full(r.num_states(), g.num_states()),
                                             seed * 5 + static_cast<std::uint64_t>(rep));
            StatePairSet small = random_subset(big, seed * 7 + static_cast<std::uint64_t>(rep) + 3);
            if (fs_pairs < 1000) {
                ++fs_pairs;
                if (!f_s_step(r, g, small, ObligationMode::full)
                         .subset_of(f_s_step(r, g, big, ObligationMode::full)))
                    ++fs_fail;
            }
            if (calculable && op_pairs < 1000) {
                ++op_pairs;
                if (!f_c(r, g, small).subset_of(f_c(r, g, big))) ++fc_fail;
                if (!f_so(r, g, small).subset_of(f_so(r, g, big))) ++fso_fail;
            }
        }
    }
    bool pass = fs_fail == 0 && fc_fail == 0 && fso_fail == 0;
    report(3, pass,
           std::to_string(fs_pairs) + " nested pairs for full-mode F_s (" +
               std::to_string(fs_fail) + " violations), " + std::to_string(op_pairs) +
               " on calculable instances for F_c/F_so (" + std::to_string(fc_fail) + "/" +
               std::to_string(fso_fail) + " violations)");
    CHECK(pass);
}

TEST_CASE("criterion 4: observable product matches bounded enumeration") {
    int tested = 0, mismatch = 0;
    for (std::uint64_t seed = 0; tested < 200; ++seed) {
        REQUIRE(seed < 4000);
        oracle::RandomInstanceSpec spec;
        spec.seed = seed + 777000;
        spec.alphabet_size = 3;
        spec.fraction_unobservable = 0.4;
        spec.transition_density = 0.3 + 0.15 * (seed % 3);
        auto [r, g] = oracle::random_instance(spec);
        if (r.initial() == kNoState || g.initial() == kNoState) continue;
        ++tested;
        ObservableProduct p = observable_product(r, g);
        StatePairSet from_product(r.num_states(), g.num_states());
        for (auto [q, x] : p.pairs) from_product.insert(q, x);
        StatePairSet from_strings =
            oracle::bounded_projection_pairs(r, g, r.num_states() * g.num_states());
        if (!(from_product == from_strings)) ++mismatch;
    }
    bool pass = mismatch == 0;
    report(4, pass,
           std::to_string(tested) + " instances, reachable pairs equal the bounded string "
                                    "enumeration (" +
               std::to_string(mismatch) + " mismatches)");
    CHECK(pass);
}

TEST_CASE("criterion 6: strong observability implies observability") {
    int premise_held = 0, counterexamples = 0;
    for (std::uint64_t seed = 0; premise_held < 200; ++seed) {
        REQUIRE(seed < 6000);
        oracle::RandomInstanceSpec spec;
        spec.seed = seed + 424242;
        spec.alphabet_size = 3;
        spec.fraction_unobservable = 0.35;
        spec.spec_substructure_of_plant = true;  // subautomata of the plant
        auto [r, g] = oracle::random_instance(spec);
        Automaton rz = accessible(r);
        if (rz.is_empty() || !is_simulated_by(rz, g)) continue;
        int k = 2 * std::max(1, rz.num_states()) * std::max(1, g.num_states());
        if (!oracle::bounded_strong_observable_condition(rz, g, k).ok) continue;
        ++premise_held;
        if (!oracle::bounded_observable_condition(rz, g, k).ok) ++counterexamples;
    }
    bool pass = counterexamples == 0;
    report(6, pass,
           std::to_string(premise_held) +
               " simulated subautomata passing the strong condition, observable-condition "
               "counterexamples: " +
               std::to_string(counterexamples));
    CHECK(pass);
}

TEST_CASE("criterion 7: desk-scale performance") {
    oracle::RandomInstanceSpec spec;
    spec.seed = 2026;
    spec.min_plant_states = spec.max_plant_states = 30;
    spec.alphabet_size = 6;
    spec.transition_density = 0.05;
    spec.fraction_unobservable = 0.15;
    spec.fraction_uncontrollable = 0.3;
    auto [ignored, g] = oracle::random_instance(spec);
    REQUIRE(g.num_states() == 30);
    int unobs = 0;
    for (const Event& e : g.alphabet().events())
        if (!e.observable) ++unobs;

    // 30-state prefix-tree spec of the random plant: every state has one
    // reaching string, so the instance is calculable and the whole
    // product/fixpoint pipeline runs.
    Automaton r = tree_unfolding(g, 30);
    REQUIRE(r.num_states() == 30);

    auto t0 = Clock::now();
    SynthesisTrace trace = algorithm2(r, g);
    double secs = seconds_since(t0);

    bool pass = trace.calc_controllable.ok && trace.calc_strong_observable.ok && secs < 30.0;
    pass = pass && trace.iterations.size() >= 1;
    report(7, pass,
           "|Q|=|X|=30, |Sigma|=6 (" + std::to_string(unobs) +
               " unobservable), synthesis with " + std::to_string(trace.iterations.size()) +
               " iterations in " + std::to_string(secs) + "s (< 30s), outcome=" +
               (trace.exists ? "result(" + std::to_string(trace.result.num_states()) + " states)"
                             : "nonexistent"));
    CHECK(pass);
}
