#include <doctest.h>

#include <random>

#include "pdskit/oracle.hpp"
#include "pdskit/sync.hpp"

using namespace pdskit;
using namespace pdskit::sync;
using automata::PartialSemiautomaton;

namespace {

constexpr State U = PartialSemiautomaton::kUndefined;

PartialSemiautomaton random_psemi(std::mt19937_64& rng, std::uint32_t n, std::uint32_t a) {
    std::vector<State> next(std::size_t(n) * a);
    for (auto& q : next) q = rng() % 4 == 0 ? U : State(rng() % n);
    return PartialSemiautomaton(n, a, next);
}

}  // namespace

TEST_CASE("carefully synchronizing words") {
    const PartialSemiautomaton one(1, 1, {0});
    auto r = shortest_carefully_synchronizing(one);
    CHECK(r.status == SearchStatus::Found);
    CHECK(r.word.empty());

    const PartialSemiautomaton constant(2, 2, {1, 0, 0, 0});  // letter 1 is constant 0
    r = shortest_carefully_synchronizing(constant);
    CHECK(r.word == Word{1});

    // Letter 0 merges 0 and 1 but is undefined on 2; letter 1 sends 2 to 0.
    const PartialSemiautomaton p(3, 2, {0, 0, 0, 1, U, 0});
    r = shortest_carefully_synchronizing(p);
    CHECK(r.word == Word{1, 0});
    CHECK(r.image_size == 1);
    CHECK(oracle::shortest_careful_by_enumeration(p, 3) == Word{1, 0});

    const PartialSemiautomaton perm(2, 1, {1, 0});
    CHECK(shortest_carefully_synchronizing(perm).status == SearchStatus::Absent);
    CHECK(shortest_carefully_synchronizing(p, SyncLimits{1}).status == SearchStatus::GaveUp);
}

TEST_CASE("irreducibility") {
    const PartialSemiautomaton p(3, 2, {0, 0, 0, 1, U, 0});
    CHECK(is_irreducible(p, Word{1, 0}));
    CHECK_FALSE(is_irreducible(p, Word{0}));
    CHECK_FALSE(is_irreducible(p, Word{}));

    const PartialSemiautomaton perm(3, 2, {1, 0, 2, 2, 0, 1});
    CHECK(is_irreducible(perm, Word{}));
    CHECK(shortest_irreducible(perm).word.empty());

    const PartialSemiautomaton constant(2, 2, {1, 0, 0, 0});
    const auto r = shortest_irreducible(constant);
    CHECK(r.word == Word{1});
    CHECK(r.image_size == 1);
}

TEST_CASE("a shortest irreducible word need not synchronize") {
    // Letter 0 folds 2 onto 0; letter 1 swaps 0 and 1 and is undefined on 2.
    // Nothing ever shrinks {0, 1}, so "0" is irreducible with an image of size 2.
    const PartialSemiautomaton p(3, 2, {0, 1, 1, 0, 0, U});
    const auto r = shortest_irreducible(p);
    CHECK(r.word == Word{0});
    CHECK(r.image_size == 2);
    CHECK(oracle::shortest_irreducible_by_enumeration(p, 5, 5) == Word{0});
    CHECK(shortest_carefully_synchronizing(p).status == SearchStatus::Absent);
}

TEST_CASE("random partial semiautomata against exhaustive oracles") {
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 150; ++t) {
        const auto p = random_psemi(rng, 1 + std::uint32_t(rng() % 4), 1 + std::uint32_t(rng() % 2));
        const std::size_t beta = std::size_t(1) << p.n_states();
        const auto careful = shortest_carefully_synchronizing(p);
        const bool found = careful.status == SearchStatus::Found;
        const auto brute = oracle::shortest_careful_by_enumeration(p, found ? careful.word.size() : 10);
        if (careful.status == SearchStatus::Found) {
            CHECK(brute == careful.word);
            CHECK(is_irreducible(p, careful.word));
        } else {
            CHECK(careful.status == SearchStatus::Absent);
            CHECK_FALSE(brute.has_value());
        }
        const auto irr = shortest_irreducible(p);
        REQUIRE(irr.status == SearchStatus::Found);
        CHECK(oracle::shortest_irreducible_by_enumeration(p, irr.word.size(), beta) == irr.word);
        for (int i = 0; i < 5; ++i) {
            Word w(rng() % 5);
            for (auto& x : w) x = Symbol(rng() % p.n_inputs());
            CHECK(is_irreducible(p, w) == oracle::irreducible_by_definition(p, w, beta));
        }
    }
}
