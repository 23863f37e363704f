#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdskit {

using State = std::uint32_t;
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Bad arguments: out-of-range states or symbols, malformed sizes, unmet preconditions.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed automaton or map text. The message carries the line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}
    std::size_t line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

/// An exhaustive enumeration would exceed its configured cap. Nothing was computed.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Outcome of a bounded search. Absent means proven non-existence; GaveUp
/// means a node or length cap was hit first.
enum class SearchStatus { Found, Absent, GaveUp };

const char* to_string(SearchStatus s) noexcept;

std::string format_word(const Word& w);
std::string format_list(const std::vector<std::uint32_t>& xs);

}  // namespace pdskit
