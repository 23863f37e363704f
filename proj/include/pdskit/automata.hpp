#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdskit/common.hpp"

namespace pdskit::automata {

/// Complete deterministic Mealy automaton with dense 0-based states, inputs and outputs.
/// Tables are row-major: cell (q, x) lives at q * n_inputs + x.
class MealyAutomaton {
public:
    MealyAutomaton(std::uint32_t n_states, std::uint32_t n_inputs, std::uint32_t n_outputs,
                   std::vector<State> next, std::vector<Symbol> out);

    std::uint32_t n_states() const noexcept { return n_; }
    std::uint32_t n_inputs() const noexcept { return a_; }
    std::uint32_t n_outputs() const noexcept { return b_; }

    State next(State q, Symbol x) const noexcept { return next_[std::size_t(q) * a_ + x]; }
    Symbol out(State q, Symbol x) const noexcept { return out_[std::size_t(q) * a_ + x]; }

    const std::vector<State>& next_table() const noexcept { return next_; }
    const std::vector<Symbol>& out_table() const noexcept { return out_; }

    void check_state(State q) const;
    void check_word(std::span<const Symbol> w) const;

    friend bool operator==(const MealyAutomaton&, const MealyAutomaton&) = default;

private:
    std::uint32_t n_, a_, b_;
    std::vector<State> next_;
    std::vector<Symbol> out_;
};

/// Semiautomaton whose transition table may have undefined cells.
class PartialSemiautomaton {
public:
    static constexpr State kUndefined = 0xffffffffu;

    PartialSemiautomaton(std::uint32_t n_states, std::uint32_t n_inputs, std::vector<State> next);

    std::uint32_t n_states() const noexcept { return n_; }
    std::uint32_t n_inputs() const noexcept { return a_; }

    std::optional<State> next(State q, Symbol x) const noexcept {
        State t = next_[std::size_t(q) * a_ + x];
        if (t == kUndefined) return std::nullopt;
        return t;
    }
    /// Raw cell, kUndefined when absent.
    State cell(State q, Symbol x) const noexcept { return next_[std::size_t(q) * a_ + x]; }
    const std::vector<State>& next_table() const noexcept { return next_; }

    bool is_complete() const noexcept;

    void check_state(State q) const;
    void check_word(std::span<const Symbol> w) const;

    friend bool operator==(const PartialSemiautomaton&, const PartialSemiautomaton&) = default;

private:
    std::uint32_t n_, a_;
    std::vector<State> next_;
};

/// Sorted, duplicate-free list of states.
using StateSet = std::vector<State>;

/// Sorts and deduplicates; throws InputError on an out-of-range member.
StateSet make_state_set(std::span<const State> states, std::uint32_t n_states);

/// Partition of an ordered ground set. Always held in canonical form: each
/// block ascending, blocks ordered by their smallest element.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<StateSet> blocks);

    const std::vector<StateSet>& blocks() const noexcept { return blocks_; }
    StateSet ground() const;
    std::size_t size() const noexcept { return blocks_.size(); }

    bool is_discrete() const noexcept;
    bool is_trivial() const noexcept { return blocks_.size() <= 1; }

    /// True when every block of *this lies inside some block of coarser.
    bool refines(const Partition& coarser) const;

    /// Block index of each ground element, in ground order.
    std::vector<std::uint32_t> labels() const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<StateSet> blocks_;
};

/// Returns (delta(q, w), lambda(q, w)).
std::pair<State, Word> run(const MealyAutomaton& aut, State q, std::span<const Symbol> w);

StateSet image(const MealyAutomaton& aut, std::span<const State> states, std::span<const Symbol> w);

/// Undefined (nullopt) exactly when some member hits an undefined cell along w.
std::optional<StateSet> image(const PartialSemiautomaton& aut, std::span<const State> states,
                              std::span<const Symbol> w);

/// Coarsest output-consistent partition of all states (state equivalence).
Partition equivalence_classes(const MealyAutomaton& aut);

bool is_reduced(const MealyAutomaton& aut);

/// Quotient by state equivalence. States of the result are numbered in the
/// canonical block order, so a reduced automaton maps to itself.
MealyAutomaton minimize(const MealyAutomaton& aut);

/// Initial-state uncertainty after w: states of S share a block iff their output words agree.
Partition uncertainty(const MealyAutomaton& aut, std::span<const State> states,
                      std::span<const Symbol> w);

}  // namespace pdskit::automata
