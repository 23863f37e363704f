#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pdskit/semigroup.hpp"

namespace pdskit::landau {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint32_t kDefaultCap = 200;

struct LandauValue {
    std::uint32_t k = 0;
    BigInt value;                      // g(k), the maximum order of a permutation of k points
    std::vector<std::uint32_t> parts;  // ascending cycle lengths > 1; fixed points fill the rest
};

/// Landau's function by a knapsack over prime powers. The parts returned are
/// the distinct prime powers of g(k): the unique maximizer with no redundant
/// cycle, so the choice is deterministic.
LandauValue landau(std::uint32_t k, std::uint32_t cap = kDefaultCap);

/// Disjoint cycles with the lengths of landau(k).parts, laid out on
/// consecutive points in ascending length order; remaining points fixed.
semigroup::Transformation max_order_permutation(std::uint32_t k);

}  // namespace pdskit::landau
