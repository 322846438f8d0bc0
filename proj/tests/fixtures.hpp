#ifndef SIMSUP_TESTS_FIXTURES_HPP
#define SIMSUP_TESTS_FIXTURES_HPP

#include <string>

#include "simsup/aut_io.hpp"

inline simsup::Automaton load_fixture(const std::string& name) {
    return simsup::parse_aut_file(std::string(SIMSUP_FIXTURE_DIR) + "/" + name + ".aut");
}

inline std::string fixture_path(const std::string& name) {
    return std::string(SIMSUP_FIXTURE_DIR) + "/" + name + ".aut";
}

#endif
