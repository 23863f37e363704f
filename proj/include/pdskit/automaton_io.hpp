#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pdskit/automata.hpp"

namespace pdskit::io {

// Line-oriented text formats. '#' starts a comment anywhere on a line.
//
//   mealy <n> <a> <b>      followed by exactly n*a lines  "q x q' y"
//   psemi <n> <a>          followed by at most n*a lines  "q x q'"
//
// Duplicate (q, x) cells are rejected. Errors carry the 1-based line number.

automata::MealyAutomaton parse_mealy(std::string_view text);
automata::PartialSemiautomaton parse_psemi(std::string_view text);

/// Comment lines are emitted verbatim after "# " before the header.
std::string format_mealy(const automata::MealyAutomaton& aut,
                         const std::vector<std::string>& comments = {});
std::string format_psemi(const automata::PartialSemiautomaton& aut,
                         const std::vector<std::string>& comments = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pdskit::io
