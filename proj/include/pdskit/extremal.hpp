#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pdskit/automata.hpp"
#include "pdskit/landau.hpp"
#include "pdskit/semigroup.hpp"

namespace pdskit::extremal {

/// The reduced two-input machine with no PDS for any three states. State q_i of
/// the drawing is index i-1. Input 0 rotates q_i -> q_{i+1} (q_n -> q_1) with
/// output 0; input 1 sends every state to q_1, with output 1 only from q_1.
automata::MealyAutomaton fig1_automaton(std::uint32_t n);

/// Semiautomaton from the lower-bound construction for transformation complexity.
/// States 0..n-2 carry the k-subsets, n-1 is an absorbing sink. Letter i moves the
/// j-th smallest point of subsets[i] to the j-th smallest of subsets[i+1]; the last
/// letter closes the cycle through `pi`; everything else falls into the sink.
struct SokolovskiiInstance {
    std::uint32_t n = 0, k = 0;
    std::uint32_t m = 0;                                   // C(n-1, k) letters
    std::vector<std::vector<std::uint32_t>> subsets;      // D_1..D_m, lexicographic
    semigroup::Transformation pi;                          // max-order permutation of k positions
    std::uint64_t pi_order = 0;                            // r_k
    automata::PartialSemiautomaton semiautomaton;
    std::vector<semigroup::Transformation> basis;          // one map per letter
    Word cycle_word;                                       // 0 1 ... m-1
    semigroup::Transformation target;                      // action of cycle_word^(r_k - 1)

    std::uint32_t sink() const noexcept { return n - 1; }
};

inline constexpr std::uint64_t kDefaultSubsetCap = 1u << 16;

SokolovskiiInstance sokolovskii_instance(std::uint32_t n, std::uint32_t k,
                                         std::uint64_t cap = kDefaultSubsetCap);

struct LowerBoundReport {
    std::uint32_t n = 0, k = 0, m = 0;
    std::uint64_t r_k = 0;
    std::optional<std::uint64_t> computed;  // complexity of the target over the basis
    std::uint64_t bound = 0;                // C(n-1, k) (r_k - 1)
    std::uint64_t exact = 0;                // m (r_k - 1), length of the witness word
    bool pass = false;                      // computed >= bound
    bool equals_exact = false;
    bool cycle_check = false;               // D_1 returns to itself only under cycle_word powers
    std::uint64_t closure_size = 0;
};

/// Builds the instance, measures the target's complexity by closure search and
/// runs cycle_characterization up to length 2m.
LowerBoundReport verify_lower_bound(std::uint32_t n, std::uint32_t k,
                                    std::uint64_t closure_cap = semigroup::kDefaultClosureCap);

/// For every length L <= max_len, counts words w with delta(D_1, w) = D_1 by
/// dynamic programming over image sets, and checks the count is 1 when m
/// divides L (the word cycle_word^(L/m), verified directly) and 0 otherwise.
bool cycle_characterization(const SokolovskiiInstance& inst, std::size_t max_len);

}  // namespace pdskit::extremal
