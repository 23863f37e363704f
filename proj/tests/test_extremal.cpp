#include <algorithm>
#include <doctest.h>

#include "pdskit/extremal.hpp"
#include "pdskit/pds.hpp"

using namespace pdskit;
using namespace pdskit::extremal;

TEST_CASE("two-input machine transitions") {
    const auto aut = fig1_automaton(4);
    CHECK(aut.next(0, 1) == 0);
    CHECK(aut.out(0, 1) == 1);
    CHECK(aut.next(2, 0) == 3);
    CHECK(aut.out(2, 0) == 0);
    CHECK(aut.next(3, 0) == 0);
    CHECK(automata::is_reduced(fig1_automaton(3)));
    CHECK_THROWS_AS(fig1_automaton(2), InputError);
}

TEST_CASE("construction shape") {
    const auto a = sokolovskii_instance(4, 2);
    CHECK(a.m == 3);
    CHECK(a.subsets == std::vector<std::vector<std::uint32_t>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(a.pi == semigroup::Transformation({1, 0}));
    CHECK(a.pi_order == 2);
    CHECK(a.sink() == 3);
    CHECK(a.semiautomaton.is_complete());

    const auto b = sokolovskii_instance(5, 3);
    CHECK(b.m == 4);
    CHECK(b.pi_order == 3);

    CHECK_THROWS_AS(sokolovskii_instance(4, 4), InputError);
    CHECK_THROWS_AS(sokolovskii_instance(30, 10, 1000), CapExceeded);
}

TEST_CASE("letter i carries D_i onto D_{i+1}") {
    for (auto [n, k] : {std::pair{4u, 2u}, {5u, 2u}, {5u, 3u}, {6u, 2u}, {7u, 3u}}) {
        const auto inst = sokolovskii_instance(n, k);
        for (std::uint32_t i = 0; i < inst.m; ++i) {
            const auto img = automata::image(inst.semiautomaton, inst.subsets[i], Word{i});
            REQUIRE(img.has_value());
            CHECK(*img == inst.subsets[(i + 1) % inst.m]);
            // Letter i sends every state outside D_i to the sink.
            for (std::uint32_t q = 0; q < n; ++q) {
                const auto& d = inst.subsets[i];
                if (std::find(d.begin(), d.end(), q) == d.end())
                    CHECK(*automata::image(inst.semiautomaton, automata::StateSet{q}, Word{i}) == automata::StateSet{n - 1});
            }
        }
    }
}

TEST_CASE("lower bound") {
    auto r = verify_lower_bound(4, 2);
    CHECK(r.computed == 3u);
    CHECK(r.bound == 3);
    CHECK(r.pass);
    CHECK(r.cycle_check);

    r = verify_lower_bound(5, 2);
    CHECK(r.bound == 6);
    CHECK(r.pass);
    CHECK(r.cycle_check);

    r = verify_lower_bound(5, 3);
    CHECK(r.bound == 8);
    CHECK(r.pass);
    CHECK(r.cycle_check);

    r = verify_lower_bound(6, 2);
    CHECK(r.bound == 10);
    CHECK(r.pass);
}

TEST_CASE("cycle characterization fails on a broken instance") {
    auto inst = sokolovskii_instance(5, 2);
    CHECK(cycle_characterization(inst, 2 * inst.m));
    // Make letter 0 also fix D_1: a second return word appears at length 1.
    std::vector<State> next = inst.semiautomaton.next_table();
    for (auto q : inst.subsets[0]) next[std::size_t(q) * inst.m + 1] = q;
    inst.semiautomaton = automata::PartialSemiautomaton(inst.n, inst.m, next);
    CHECK_FALSE(cycle_characterization(inst, 2 * inst.m));
}
