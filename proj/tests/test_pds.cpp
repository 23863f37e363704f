#include <doctest.h>

#include <numeric>
#include <random>

#include "pdskit/extremal.hpp"
#include "pdskit/oracle.hpp"
#include "pdskit/pds.hpp"

using namespace pdskit;
using namespace pdskit::pds;
using automata::MealyAutomaton;

TEST_CASE("shortest PDS on the two-input machine") {
    const auto aut = extremal::fig1_automaton(4);
    auto r = shortest_pds(aut, std::vector<State>{0, 1});
    CHECK(r.status == SearchStatus::Found);
    CHECK(r.word == Word{1});

    r = shortest_pds(aut, std::vector<State>{1, 3});
    CHECK(r.found());
    CHECK(r.word == Word{0, 1});

    r = shortest_pds(aut, std::vector<State>{0, 1, 2});
    CHECK(r.status == SearchStatus::Absent);
}

TEST_CASE("has_pds over all pairs and triples, n = 5") {
    const auto aut = extremal::fig1_automaton(5);
    for (State p = 0; p < 5; ++p)
        for (State q = p + 1; q < 5; ++q) {
            CHECK(has_pds(aut, std::vector<State>{p, q}));
            for (State t = q + 1; t < 5; ++t) CHECK_FALSE(has_pds(aut, std::vector<State>{p, q, t}));
        }
    const MealyAutomaton two(2, 1, 2, {0, 1}, {0, 1});
    CHECK(has_pds(two, std::vector<State>{0, 1}));
}

TEST_CASE("limits and argument checks") {
    const auto aut = extremal::fig1_automaton(4);
    SearchLimits lim;
    lim.max_len = 1;
    CHECK(shortest_pds(aut, std::vector<State>{1, 3}, lim).status == SearchStatus::GaveUp);
    lim.max_len = 2;
    CHECK(shortest_pds(aut, std::vector<State>{1, 3}, lim).found());
    lim = {};
    lim.max_nodes = 1;
    CHECK(shortest_pds(aut, std::vector<State>{1, 3}, lim).status == SearchStatus::GaveUp);
    CHECK_THROWS_AS(shortest_pds(aut, std::vector<State>{1}), InputError);
    CHECK_THROWS_AS(shortest_pds(aut, std::vector<State>{1, 1}), InputError);
    CHECK_THROWS_AS(shortest_pds(aut, std::vector<State>{1, 9}), InputError);
}

TEST_CASE("uncertainty nodes") {
    const auto aut = extremal::fig1_automaton(4);
    auto node = initial_node(std::vector<State>{0, 1, 2});
    CHECK(node.cells.size() == 1);
    node = expand(aut, node, 1);
    CHECK(node.cells.size() == 2);
    // q2 and q3 both land on q1 with equal outputs: never separable again.
    CHECK(node.is_dead());
    CHECK_FALSE(node.is_discrete());
}

TEST_CASE("shortest PDS agrees with word enumeration on random machines") {
    std::mt19937_64 rng(90);
    for (int t = 0; t < 300; ++t) {
        const std::uint32_t n = 2 + rng() % 4, a = 1 + rng() % 2, b = 1 + rng() % 3;
        std::vector<State> next(std::size_t(n) * a);
        std::vector<Symbol> out(next.size());
        for (auto& q : next) q = State(rng() % n);
        for (auto& y : out) y = Symbol(rng() % b);
        const MealyAutomaton aut(n, a, b, next, out);
        std::vector<State> all(n);
        std::iota(all.begin(), all.end(), 0u);
        std::shuffle(all.begin(), all.end(), rng);
        const std::vector<State> s(all.begin(), all.begin() + 2 + rng() % (n - 1));
        const auto r = shortest_pds(aut, s);
        REQUIRE(r.status != SearchStatus::GaveUp);
        const auto brute = oracle::shortest_pds_by_enumeration(aut, s, r.found() ? r.length() : 12);
        CHECK(brute.has_value() == r.found());
        if (brute && r.found()) CHECK(*brute == r.word);
    }
}

TEST_CASE("worst case over small machines") {
    CHECK(worst_case_pds(2, 2, 2, 2).max_length == 1);
    const auto w = worst_case_pds(3, 2, 2, 2);
    CHECK(w.max_length == 2);
    CHECK(w.automata_enumerated == 46656);
    REQUIRE(w.witness.has_value());
    CHECK(shortest_pds(*w.witness, w.witness_subset).length() == 2);
    CHECK_THROWS_AS(worst_case_pds(1, 2, 2, 2), InputError);
    CHECK_THROWS_AS(worst_case_pds(3, 2, 2, 4), InputError);
    CHECK_THROWS_AS(worst_case_pds(4, 3, 3, 2, 1000), CapExceeded);
}

TEST_CASE("worst case does not depend on the number of workers") {
    const auto one = worst_case_pds(3, 2, 2, 2, 10'000'000, 1);
    const auto four = worst_case_pds(3, 2, 2, 2, 10'000'000, 4);
    CHECK(one.max_length == four.max_length);
    CHECK(one.witness == four.witness);
    CHECK(one.witness_subset == four.witness_subset);
    CHECK(one.pairs_with_pds == four.pairs_with_pds);
}

TEST_CASE("enumeration order") {
    CHECK(automata_count(2, 2, 2) == 256);
    CHECK(automata_count(3, 2, 2) == 46656);
    const auto first = automaton_at(2, 1, 2, 0);
    CHECK(first.next_table() == std::vector<State>{0, 0});
    CHECK(first.out_table() == std::vector<Symbol>{0, 0});
    const auto last = automaton_at(2, 1, 2, 15);
    CHECK(last.next_table() == std::vector<State>{1, 1});
    CHECK(last.out_table() == std::vector<Symbol>{1, 1});
}
