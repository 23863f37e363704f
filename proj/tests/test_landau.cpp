#include <doctest.h>

#include "pdskit/landau.hpp"
#include "pdskit/oracle.hpp"

using namespace pdskit;
using pdskit::landau::BigInt;

TEST_CASE("small values") {
    CHECK(landau::landau(1).value == 1);
    CHECK(landau::landau(1).parts.empty());
    CHECK(landau::landau(5).value == 6);
    CHECK(landau::landau(5).parts == std::vector<std::uint32_t>{2, 3});
    CHECK(landau::landau(7).value == 12);
    CHECK(landau::landau(7).parts == std::vector<std::uint32_t>{3, 4});
    CHECK_THROWS_AS(landau::landau(0), InputError);
    CHECK_THROWS_AS(landau::landau(201), InputError);
    CHECK(landau::landau(300, 300).value > 0);
}

TEST_CASE("agrees with the partition maximum up to 30") {
    for (std::uint32_t k = 1; k <= 30; ++k) {
        CAPTURE(k);
        CHECK(landau::landau(k).value == oracle::max_partition_lcm(k));
    }
}

TEST_CASE("agrees with the largest element order up to 9") {
    for (std::uint32_t k = 1; k <= 9; ++k) {
        CAPTURE(k);
        CHECK(landau::landau(k).value == oracle::max_element_order(k));
    }
}

TEST_CASE("parts are prime powers summing to at most k") {
    for (std::uint32_t k = 1; k <= 120; ++k) {
        const auto v = landau::landau(k);
        std::uint64_t sum = 0;
        BigInt prod = 1;
        for (auto p : v.parts) {
            sum += p;
            prod *= p;
        }
        CHECK(sum <= k);
        CHECK(prod == v.value);
    }
    CHECK(landau::landau(100).value == BigInt("232792560"));
}

TEST_CASE("max-order permutation") {
    using semigroup::Transformation;
    CHECK(landau::max_order_permutation(1) == Transformation::identity(1));
    CHECK(landau::max_order_permutation(2) == Transformation({1, 0}));
    const auto p5 = landau::max_order_permutation(5);
    CHECK(p5 == Transformation({1, 0, 3, 4, 2}));
    CHECK(semigroup::order(p5) == 6);
    for (std::uint32_t k = 1; k <= 20; ++k) CHECK(BigInt(semigroup::order(landau::max_order_permutation(k))) == landau::landau(k).value);
}
