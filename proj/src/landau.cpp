#include "pdskit/landau.hpp"

#include <algorithm>

namespace pdskit::landau {

namespace {

std::vector<std::uint32_t> primes_up_to(std::uint32_t k) {
    std::vector<bool> composite(k + 1);
    std::vector<std::uint32_t> ps;
    for (std::uint32_t i = 2; i <= k; ++i) {
        if (composite[i]) continue;
        ps.push_back(i);
        for (std::uint64_t j = std::uint64_t(i) * i; j <= k; j += i) composite[j] = true;
    }
    return ps;
}

}  // namespace

LandauValue landau(std::uint32_t k, std::uint32_t cap) {
    if (k < 1 || k > cap)
        throw InputError("landau: k must be in [1, " + std::to_string(cap) + "]");
    const auto primes = primes_up_to(k);
    // best[b]: largest lcm of distinct-prime powers with sum <= b, over the primes seen so far.
    std::vector<BigInt> best(k + 1, BigInt(1));
    std::vector<std::vector<std::uint32_t>> chosen(primes.size(), std::vector<std::uint32_t>(k + 1, 0));
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        const std::uint32_t p = primes[pi];
        std::vector<BigInt> next = best;
        for (std::uint32_t b = 0; b <= k; ++b) {
            for (std::uint64_t q = p; q <= b; q *= p) {
                BigInt cand = best[b - q] * q;
                if (cand > next[b]) {
                    next[b] = std::move(cand);
                    chosen[pi][b] = std::uint32_t(q);
                }
            }
        }
        best = std::move(next);
    }
    LandauValue out;
    out.k = k;
    out.value = best[k];
    std::uint32_t b = k;
    for (std::size_t pi = primes.size(); pi-- > 0;) {
        if (const std::uint32_t q = chosen[pi][b]) {
            out.parts.push_back(q);
            b -= q;
        }
    }
    std::sort(out.parts.begin(), out.parts.end());
    return out;
}

semigroup::Transformation max_order_permutation(std::uint32_t k) {
    const LandauValue lv = landau(k, std::max(k, kDefaultCap));
    std::vector<std::uint32_t> m(k);
    for (std::uint32_t i = 0; i < k; ++i) m[i] = i;
    std::uint32_t start = 0;
    for (std::uint32_t len : lv.parts) {
        for (std::uint32_t i = 0; i < len; ++i) m[start + i] = start + (i + 1) % len;
        start += len;
    }
    return semigroup::Transformation(std::move(m));
}

}  // namespace pdskit::landau
