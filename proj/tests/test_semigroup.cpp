#include <doctest.h>

#include <random>

#include "pdskit/extremal.hpp"
#include "pdskit/oracle.hpp"
#include "pdskit/semigroup.hpp"

using namespace pdskit;
using namespace pdskit::semigroup;

namespace {

Transformation t(std::vector<std::uint32_t> v) { return Transformation(std::move(v)); }

}  // namespace

TEST_CASE("composition applies the left factor first") {
    const auto f = t({1, 2, 0});
    CHECK(compose(f, Transformation::identity(3)) == f);
    CHECK(compose(t({1, 0}), t({1, 0})).is_identity());
    CHECK(compose(f, Transformation::constant(3, 0)) == Transformation::constant(3, 0));
    CHECK(compose(t({0, 0, 1}), f) == t({1, 1, 2}));
    CHECK_THROWS_AS(compose(f, t({0, 1})), InputError);
    CHECK_THROWS_AS(t({0, 3, 1}), InputError);
}

TEST_CASE("order of permutations") {
    CHECK(order(Transformation::identity(4)) == 1);
    CHECK(order(t({1, 0, 3, 4, 2})) == 6);
    CHECK_THROWS_AS(order(t({0, 0})), InputError);
}

TEST_CASE("partial bijections") {
    const auto f = PartialBijection::restrict(t({2, 0, 1, 1}), std::vector<std::uint32_t>{0, 1});
    CHECK(f.to_string() == "{0->2,1->0}");
    CHECK(f.image_set() == std::vector<std::uint32_t>{0, 2});
    CHECK_FALSE(f.is_permutation());
    CHECK_THROWS_AS(PartialBijection::restrict(t({1, 1, 0}), std::vector<std::uint32_t>{0, 1}), InputError);
    const PartialBijection g({0, 2}, {2, 0});
    CHECK(g.is_permutation());
    CHECK(g.order() == 2);
    CHECK(compose(g, g).is_identity());
}

TEST_CASE("closure levels") {
    auto c = closure(std::vector{Transformation::identity(3)});
    CHECK(c.size() == 1);
    CHECK(c.levels == std::vector<std::uint32_t>{1});

    c = closure(std::vector{t({1, 0})});
    CHECK(c.size() == 2);
    CHECK(c.level_of(t({1, 0})) == 1u);
    CHECK(c.level_of(t({0, 1})) == 2u);

    c = closure(std::vector{Transformation::constant(4, 0)});
    CHECK(c.size() == 1);
    CHECK(c.max_level() == 1);

    CHECK(closure(std::vector{t({1, 2, 3, 4, 0}), t({1, 0, 2, 3, 4})}).size() == 120);
    CHECK_THROWS_AS(closure(std::vector{t({1, 2, 3, 4, 0}), t({1, 0, 2, 3, 4})}, 100), CapExceeded);
    CHECK_THROWS_AS(closure(std::vector<Transformation>{}), InputError);
}

TEST_CASE("complexity") {
    const std::vector basis{t({1, 0}), t({0, 0})};
    CHECK(complexity(basis, t({0, 0})) == 1u);
    CHECK(complexity(std::vector{t({1, 0})}, t({0, 1})) == 2u);
    CHECK_FALSE(complexity(std::vector{t({1, 0})}, t({0, 0})).has_value());

    const auto inst = extremal::sokolovskii_instance(4, 2);
    CHECK(complexity(inst.basis, inst.target) == 3u);
}

TEST_CASE("restriction complexity") {
    CHECK(restriction_complexity(std::vector{t({0, 1, 0})}, PartialBijection::identity({0, 1})) == 1u);
    const auto inst = extremal::sokolovskii_instance(4, 2);
    // pi^(r_k - 1) on D_1, which is the swap of D_1 = {0, 1}.
    CHECK(restriction_complexity(inst.basis, PartialBijection({0, 1}, {1, 0})) == 3u);
    // The closure of {0,1,0} is itself, which fixes 0 and 1.
    CHECK_FALSE(restriction_complexity(std::vector{t({0, 1, 0})}, PartialBijection({0, 1}, {1, 0})).has_value());
}

TEST_CASE("worst-case complexity of small sets against product enumeration") {
    CHECK(worst_case_complexity(full_transformation_semigroup(1)).value == 1);

    const auto s2 = symmetric_group(2);
    const auto t2 = full_transformation_semigroup(2);
    CHECK(s2.size() == 2);
    CHECK(t2.size() == 4);
    const auto ls2 = worst_case_complexity(s2);
    const auto lt2 = worst_case_complexity(t2);
    CHECK(ls2.value == oracle::worst_case_complexity_by_products(s2));
    CHECK(lt2.value == oracle::worst_case_complexity_by_products(t2));
    // Values recorded from the enumeration above.
    CHECK(ls2.value == 2);
    CHECK(lt2.value == 2);
    CHECK(ls2.value <= lt2.value);
    CHECK(lt2.bases_examined == 15);

    const auto s3 = symmetric_group(3);
    CHECK(worst_case_complexity(s3).value == oracle::worst_case_complexity_by_products(s3));
    CHECK(worst_case_complexity(s3).value == 3);
}

TEST_CASE("canonical enumeration and workers give the same answer") {
    const auto s3 = symmetric_group(3);
    WorstCaseOptions plain, canon, jobs;
    canon.canonical = true;
    jobs.jobs = 3;
    const auto a = worst_case_complexity(s3, plain);
    const auto b = worst_case_complexity(s3, canon);
    const auto c = worst_case_complexity(s3, jobs);
    CHECK(a.value == b.value);
    CHECK(b.bases_examined < a.bases_examined);
    CHECK(a.value == c.value);
    CHECK(a.basis == c.basis);
    CHECK(a.witness == c.witness);

    std::mt19937_64 rng(8);
    std::vector<Transformation> set;
    for (int i = 0; i < 8; ++i) {
        std::vector<std::uint32_t> img(3);
        for (auto& v : img) v = std::uint32_t(rng() % 3);
        set.push_back(t(img));
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    CHECK(worst_case_complexity(set).value == oracle::worst_case_complexity_by_products(set));

    WorstCaseOptions tiny;
    tiny.cap_bases = 10;
    CHECK_THROWS_AS(worst_case_complexity(s3, tiny), CapExceeded);
}

TEST_CASE("directed diameters") {
    CHECK(directed_diameter(std::vector{t({1, 2, 0})}) == 3);
    CHECK(group_worst_diameter(std::vector{Transformation::identity(3)}) == 1);
    const auto s2 = symmetric_group(2);
    CHECK(group_worst_diameter(s2) == worst_case_complexity(s2).value);
    CHECK_THROWS_AS(directed_diameter(std::vector{t({0, 0})}), InputError);
    CHECK_THROWS_AS(group_worst_diameter(std::vector{t({1, 2, 0})}), InputError);

    // Worst case over S_n is the worst diameter over its subgroups.
    for (std::uint32_t n : {2u, 3u}) {
        std::uint64_t best = 0;
        for (const auto& g : subgroups_of_symmetric(n)) best = std::max(best, group_worst_diameter(g));
        CHECK(best == worst_case_complexity(symmetric_group(n)).value);
    }
    CHECK(subgroups_of_symmetric(3).size() == 6);
}

TEST_CASE("map parsing") {
    const auto maps = parse_maps(2, "1,0;0,0");
    REQUIRE(maps.size() == 2);
    CHECK(maps[0] == t({1, 0}));
    CHECK(maps[1] == t({0, 0}));
    CHECK(parse_maps(3, " 1, 2 ,0 ").front() == t({1, 2, 0}));
    CHECK_THROWS_AS(parse_maps(2, "1,0,1"), InputError);
    CHECK_THROWS_AS(parse_maps(2, "1,x"), InputError);
    CHECK_THROWS_AS(parse_maps(2, ""), InputError);
    CHECK(full_transformation_semigroup(3).size() == 27);
    CHECK(symmetric_group(4).size() == 24);
}
