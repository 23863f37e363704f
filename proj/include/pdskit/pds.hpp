#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pdskit/automata.hpp"

namespace pdskit::pds {

/// (initial state, current state) pair tracked by the search.
struct Track {
    State initial;
    State current;
    friend auto operator<=>(const Track&, const Track&) = default;
};

/// Initial-state uncertainty together with the current states reached so far.
/// Canonical: pairs sorted by initial state, cells sorted by smallest initial state.
struct UncertaintyNode {
    std::vector<std::vector<Track>> cells;
    std::size_t depth = 0;

    /// Two pairs of one cell share a current state: they can never be separated.
    bool is_dead() const;
    bool is_discrete() const;
    void canonicalize();
};

UncertaintyNode initial_node(std::span<const State> subset);

/// Applies one input symbol: each cell splits by output and advances.
UncertaintyNode expand(const automata::MealyAutomaton& aut, const UncertaintyNode& node, Symbol x);

struct SearchLimits {
    std::optional<std::size_t> max_len;
    std::size_t max_nodes = 10'000'000;
};

struct PdsResult {
    SearchStatus status = SearchStatus::Absent;
    Word word;                    // meaningful only when status == Found
    std::size_t nodes_visited = 0;

    bool found() const noexcept { return status == SearchStatus::Found; }
    std::size_t length() const noexcept { return word.size(); }
};

/// Breadth-first search for a shortest preset distinguishing sequence of
/// `subset`. Among shortest words the lexicographically smallest is returned.
/// Throws InputError when |subset| < 2 or a state is out of range.
PdsResult shortest_pds(const automata::MealyAutomaton& aut, std::span<const State> subset,
                       const SearchLimits& limits = {});

bool has_pds(const automata::MealyAutomaton& aut, std::span<const State> subset);

struct WorstCasePds {
    std::size_t max_length = 0;     // 0 when no (automaton, subset) pair had a PDS
    std::optional<automata::MealyAutomaton> witness;
    automata::StateSet witness_subset;
    std::uint64_t automata_enumerated = 0;
    std::uint64_t pairs_with_pds = 0;
};

/// Maximum shortest-PDS length over every complete Mealy automaton with exactly
/// n states, a inputs and b outputs, and every k-subset of states. Alphabet sizes
/// are fixed, so this is the worst case for those dimensions only; the unbounded
/// worst case ranges over all alphabets. Refuses with CapExceeded when (n*b)^(n*a) > cap.
WorstCasePds worst_case_pds(std::uint32_t n, std::uint32_t a, std::uint32_t b, std::uint32_t k,
                            std::uint64_t cap = 10'000'000, unsigned jobs = 1);

/// Number of automata worst_case_pds would enumerate, saturated at UINT64_MAX.
std::uint64_t automata_count(std::uint32_t n, std::uint32_t a, std::uint32_t b);

/// Decodes automaton number `index` in worst_case_pds enumeration order.
automata::MealyAutomaton automaton_at(std::uint32_t n, std::uint32_t a, std::uint32_t b,
                                      std::uint64_t index);

}  // namespace pdskit::pds
