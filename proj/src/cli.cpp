#include "simsup/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "simsup/aut_io.hpp"
#include "simsup/oracle.hpp"
#include "simsup/simulation.hpp"
#include "simsup/synthesis.hpp"

namespace simsup {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoResult = 2;
constexpr int kExitNotCalculable = 3;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

SynthesisMode parse_mode(const std::string& mode) {
    if (mode == "so") return SynthesisMode::strong_observable;
    if (mode == "cso") return SynthesisMode::controllable_strong_observable;
    throw std::runtime_error("mode must be so or cso");
}

int do_check(const std::string& plant_file, const std::string& spec_file, std::ostream& out) {
    Automaton g = parse_aut_file(plant_file);
    Automaton r = parse_aut_file(spec_file);
    out << "simulated_by_plant=" << (is_simulated_by(r, g) ? "true" : "false") << "\n";
    auto cc = is_calculable_controllable(r, g);
    out << "calculable_controllable=" << (cc.ok ? "true" : "false");
    if (!cc.ok) out << " [" << cc.witness << "]";
    out << "\n";
    auto cso = is_calculable_strong_observable(r, g);
    out << "calculable_strong_observable=" << (cso.ok ? "true" : "false");
    if (!cso.ok) out << " [" << cso.witness << "]";
    out << "\n";
    StatePairSet full = StatePairSet::full(r.num_states(), g.num_states());
    RemovalDiagnostics cdiag;
    auto qd = q_d(r, g, full, &cdiag);
    out << "controllable_condition=" << (qd.empty() ? "true" : "false");
    if (!qd.empty()) out << " [" << cdiag.by_state.begin()->second.front().format(r, g) << "]";
    out << "\n";
    RemovalDiagnostics sdiag;
    auto qdp = q_d_prime(r, g, full, &sdiag);
    out << "strong_observable_condition=" << (qdp.empty() ? "true" : "false");
    if (!qdp.empty()) out << " [" << sdiag.by_state.begin()->second.front().format(r, g) << "]";
    out << "\n";
    return kExitOk;
}

int do_synthesize(const std::string& plant_file, const std::string& spec_file,
                  const std::string& mode_name, const std::string& out_file,
                  const std::string& trace_file, const std::string& dot_file, std::ostream& out) {
    Automaton g = parse_aut_file(plant_file);
    Automaton r = parse_aut_file(spec_file);
    SynthesisMode mode = parse_mode(mode_name);
    SynthesisTrace trace =
        mode == SynthesisMode::strong_observable ? algorithm1(r, g) : algorithm2(r, g);

    std::string trace_text = write_trace(trace, r, g);
    out << trace_text;
    if (!trace_file.empty()) write_file(trace_file, trace_text);
    if (!trace.exists) {
        bool calculable = trace.calc_strong_observable.ok &&
                          (mode == SynthesisMode::strong_observable || trace.calc_controllable.ok);
        return calculable ? kExitNoResult : kExitNotCalculable;
    }
    if (!out_file.empty()) write_file(out_file, write_aut(trace.result));
    if (!dot_file.empty()) write_file(dot_file, export_dot(trace.result));
    return kExitOk;
}

int do_verify(const std::string& plant_file, const std::string& spec_file,
              const std::string& candidate_file, int bound, std::ostream& out) {
    Automaton g = parse_aut_file(plant_file);
    Automaton r = parse_aut_file(spec_file);
    Automaton sub = parse_aut_file(candidate_file);
    VerificationReport rep = verify_result(r, g, sub, bound);
    for (const auto& c : rep.checks) {
        out << c.name << "=" << (c.pass ? "pass" : "fail");
        if (!c.detail.empty()) out << " [" << c.detail << "]";
        out << "\n";
    }
    if (!rep.valid_result) out << "outcome=not_a_valid_result\n";
    return rep.all_pass() ? kExitOk : kExitNoResult;
}

int do_oracle(const std::string& plant_file, const std::string& spec_file,
              const std::string& mode_name, std::ostream& out) {
    Automaton g = parse_aut_file(plant_file);
    Automaton r = parse_aut_file(spec_file);
    SynthesisMode mode = parse_mode(mode_name);
    auto res = oracle::brute_force_supremal(r, g, mode);
    if (!res.exists) {
        out << "outcome=nonexistent\n";
        return kExitNoResult;
    }
    out << "outcome=" << (res.union_closed ? "supremal" : "non_closed_union") << "\n";
    out << "pairs=";
    bool first = true;
    for (auto [q, x] : res.set.pairs()) {
        out << (first ? "" : ",") << "(" << r.state_name(q) << "," << g.state_name(x) << ")";
        first = false;
    }
    out << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"supremal simulation-based subautomaton synthesis"};
    app.require_subcommand(1);

    std::string plant, spec, candidate, mode = "cso";
    std::string out_file, trace_file, dot_file;
    int bound = -1;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--plant", plant, "plant automaton file")->required();
        cmd->add_option("--spec", spec, "specification automaton file")->required();
    };

    CLI::App* check = app.add_subcommand("check", "report simulation, calculability and condition verdicts");
    add_io(check);

    CLI::App* synthesize = app.add_subcommand("synthesize", "compute the supremal subautomaton");
    add_io(synthesize);
    synthesize->add_option("--mode", mode, "so|cso")->required();
    synthesize->add_option("--out", out_file, "write the result automaton here");
    synthesize->add_option("--trace", trace_file, "write the iteration trace here");
    synthesize->add_option("--dot", dot_file, "write the result as DOT here");

    CLI::App* verify = app.add_subcommand("verify", "verify a candidate subautomaton");
    add_io(verify);
    verify->add_option("--candidate", candidate, "candidate automaton file")->required();
    verify->add_option("--bound", bound, "bounded-language check depth");

    CLI::App* orc = app.add_subcommand("oracle", "brute-force supremal set (small instances)");
    add_io(orc);
    orc->add_option("--mode", mode, "so|cso")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (check->parsed()) return do_check(plant, spec, out);
        if (synthesize->parsed())
            return do_synthesize(plant, spec, mode, out_file, trace_file, dot_file, out);
        if (verify->parsed()) return do_verify(plant, spec, candidate, bound, out);
        if (orc->parsed()) return do_oracle(plant, spec, mode, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    err << "error: no subcommand\n";
    return kExitError;
}

}  // namespace simsup
