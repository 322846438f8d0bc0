#ifndef SIMSUP_AUT_IO_HPP
#define SIMSUP_AUT_IO_HPP

#include <stdexcept>
#include <string>

#include "simsup/automaton.hpp"
#include "simsup/products.hpp"
#include "simsup/synthesis.hpp"

namespace simsup {

struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& message, int line_number)
        : std::runtime_error(message + " (line " + std::to_string(line_number) + ")"),
          line(line_number) {}
};

/// Parses the line-oriented automaton format:
///   automaton <name>
///   event <name> <c|uc> <o|uo>
///   state <name> [marked]
///   initial <name>
///   trans <src> <event> <dst>
/// '#' starts a comment; blank lines are ignored; events and states must
/// be declared before use; exactly one initial. Throws ParseError.
Automaton parse_aut(const std::string& text);
Automaton parse_aut_file(const std::string& path);

/// Canonical serialization; parse_aut(write_aut(a)) == a.
std::string write_aut(const Automaton& a);

std::string export_dot(const Automaton& a);
std::string export_dot(const ControllableProduct& p, const Automaton& rz, const Automaton& g);
std::string export_dot(const ObservableProduct& p, const Automaton& r, const Automaton& g);

/// Line-oriented key=value trace; one block of iter=/size=/removed=/reason=
/// per iteration.
std::string write_trace(const SynthesisTrace& trace, const Automaton& r, const Automaton& g);

}  // namespace simsup

#endif  // SIMSUP_AUT_IO_HPP
