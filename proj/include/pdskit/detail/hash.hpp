#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pdskit::detail {

// FNV-1a over the elements; good enough for search-state dedup tables.
struct VectorHash {
    template <typename T>
    std::size_t operator()(const std::vector<T>& v) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (const T& x : v) {
            h ^= std::uint64_t(x);
            h *= 1099511628211ull;
        }
        return std::size_t(h ^ (h >> 29));
    }
};

}  // namespace pdskit::detail
