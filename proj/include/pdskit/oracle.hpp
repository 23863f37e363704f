#pragma once

// Brute-force reference implementations. Each one follows the textbook
// definition directly and shares no search code with the modules it checks.

#include <cstdint>
#include <optional>
#include <vector>

#include "pdskit/automata.hpp"
#include "pdskit/kgraph.hpp"
#include "pdskit/semigroup.hpp"

namespace pdskit::oracle {

/// First word in (length, lexicographic) order of length <= max_len whose output
/// words pairwise differ on `subset`.
std::optional<Word> shortest_pds_by_enumeration(const automata::MealyAutomaton& aut,
                                                const std::vector<State>& subset, std::size_t max_len);

/// Two states are equivalent iff no word of length <= n-1 separates them.
bool equivalent_by_enumeration(const automata::MealyAutomaton& aut, State p, State q);

/// max lcm over all integer partitions of k.
std::uint64_t max_partition_lcm(std::uint32_t k);

/// max order over all permutations of k points, each order found by repeated
/// multiplication until the identity comes back.
std::uint64_t max_element_order(std::uint32_t k);

/// Worst-case complexity over all non-empty bases of `set`, each basis scored
/// by multiplying out every word of length 1, 2, ... until a length adds nothing new.
std::uint64_t worst_case_complexity_by_products(const std::vector<semigroup::Transformation>& set);

/// Components from the transitive closure of the adjacency matrix.
std::vector<std::vector<kgraph::Vertex>> scc_by_closure(const kgraph::KGraph& g);

/// Irreducibility straight from the definition: w is defined on all states and
/// every word beta of length <= max_beta defined on delta(Q, w) keeps the image size.
bool irreducible_by_definition(const automata::PartialSemiautomaton& aut, const Word& w,
                               std::size_t max_beta);

/// First carefully synchronizing word in (length, lexicographic) order up to max_len.
std::optional<Word> shortest_careful_by_enumeration(const automata::PartialSemiautomaton& aut,
                                                    std::size_t max_len);

/// First irreducible word (by the bounded definition) in (length, lexicographic) order.
std::optional<Word> shortest_irreducible_by_enumeration(const automata::PartialSemiautomaton& aut,
                                                        std::size_t max_len, std::size_t max_beta);

}  // namespace pdskit::oracle
