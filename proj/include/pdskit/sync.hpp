#pragma once

#include <optional>
#include <span>

#include "pdskit/automata.hpp"

namespace pdskit::sync {

struct SyncLimits {
    std::size_t max_nodes = 1u << 22;
};

struct WordResult {
    SearchStatus status = SearchStatus::Absent;
    Word word;
    std::size_t image_size = 0;  // |delta(Q, word)| when found
};

// All three operations search the lattice of image sets: nodes are subsets S of
// states reachable from Q, with an edge S -> delta(S, a) whenever letter a is
// defined on every state of S.

/// Shortest word defined on all states that maps Q to a single state;
/// lexicographically smallest among the shortest.
WordResult shortest_carefully_synchronizing(const automata::PartialSemiautomaton& aut,
                                            const SyncLimits& limits = {});

/// w is defined on all of Q and no strictly smaller image set is reachable
/// from delta(Q, w). Throws CapExceeded if the reachability search hits the cap.
bool is_irreducible(const automata::PartialSemiautomaton& aut, std::span<const Symbol> w,
                    const SyncLimits& limits = {});

/// Shortest (then lexicographically smallest) irreducible word. A reachable set
/// of least cardinality is always irreducible, so only GaveUp can replace Found.
WordResult shortest_irreducible(const automata::PartialSemiautomaton& aut,
                                const SyncLimits& limits = {});

}  // namespace pdskit::sync
