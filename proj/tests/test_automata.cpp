#include <doctest.h>

#include <random>

#include "pdskit/automaton_io.hpp"
#include "pdskit/extremal.hpp"
#include "pdskit/oracle.hpp"

using namespace pdskit;
using namespace pdskit::automata;

namespace {

MealyAutomaton random_mealy(std::mt19937_64& rng, std::uint32_t n, std::uint32_t a, std::uint32_t b) {
    std::uniform_int_distribution<std::uint32_t> st(0, n - 1), sym(0, b - 1);
    std::vector<State> next(std::size_t(n) * a);
    std::vector<Symbol> out(next.size());
    for (auto& q : next) q = st(rng);
    for (auto& y : out) y = sym(rng);
    return MealyAutomaton(n, a, b, next, out);
}

}  // namespace

TEST_CASE("construction validates dimensions and ranges") {
    CHECK_THROWS_AS(MealyAutomaton(0, 1, 1, {}, {}), InputError);
    CHECK_THROWS_AS(MealyAutomaton(2, 1, 1, {0, 2}, {0, 0}), InputError);
    CHECK_THROWS_AS(MealyAutomaton(2, 1, 1, {0, 1}, {0, 1}), InputError);
    CHECK_THROWS_AS(MealyAutomaton(2, 1, 1, {0}, {0}), InputError);
    CHECK_NOTHROW(PartialSemiautomaton(2, 1, {PartialSemiautomaton::kUndefined, 1}));
    CHECK_THROWS_AS(PartialSemiautomaton(2, 1, {3, 1}), InputError);
}

TEST_CASE("run on the two-input machine") {
    const auto aut = extremal::fig1_automaton(4);
    // q1 --1/1--> q1
    auto [q, y] = run(aut, 0, Word{1});
    CHECK(q == 0);
    CHECK(y == Word{1});
    // q2 --0/0--> q3 --1/0--> q1
    std::tie(q, y) = run(aut, 1, Word{0, 1});
    CHECK(q == 0);
    CHECK(y == Word{0, 0});
    std::tie(q, y) = run(aut, 2, Word{});
    CHECK(q == 2);
    CHECK(y.empty());
    CHECK_THROWS_AS(run(aut, 4, Word{}), InputError);
    CHECK_THROWS_AS(run(aut, 0, Word{2}), InputError);
}

TEST_CASE("image") {
    const auto aut = extremal::fig1_automaton(4);
    const StateSet s{0, 1};
    CHECK(image(aut, s, Word{}) == s);
    CHECK(image(aut, s, Word{1}) == StateSet{0});
    CHECK(image(aut, StateSet{3, 0}, Word{0}) == StateSet{0, 1});

    const PartialSemiautomaton p(2, 1, {PartialSemiautomaton::kUndefined, 0});
    CHECK_FALSE(image(p, StateSet{0}, Word{0}).has_value());
    CHECK(image(p, StateSet{1}, Word{0}) == StateSet{0});
    CHECK(image(p, StateSet{0, 1}, Word{}) == StateSet{0, 1});
}

TEST_CASE("partition canonical form and refinement") {
    const Partition p({{3, 1}, {0}, {2}});
    CHECK(p.to_string() == "{0}{1,3}{2}");
    CHECK(p.labels() == std::vector<std::uint32_t>{0, 1, 2, 1});
    CHECK(p.refines(Partition({{0, 2}, {1, 3}})));
    CHECK_FALSE(Partition({{0, 1}, {2, 3}}).refines(p));
    CHECK_THROWS_AS(Partition({{0, 1}, {1}}), InputError);
    CHECK_THROWS_AS(Partition(std::vector<StateSet>{StateSet{}}), InputError);
}

TEST_CASE("reducedness and minimization") {
    CHECK(is_reduced(extremal::fig1_automaton(4)));
    CHECK(is_reduced(extremal::fig1_automaton(3)));
    // States 1 and 2 have identical rows.
    const MealyAutomaton dup(3, 1, 2, {1, 0, 0}, {0, 1, 1});
    CHECK_FALSE(is_reduced(dup));
    const auto m = minimize(dup);
    CHECK(m.n_states() == 2);
    CHECK(is_reduced(m));
    CHECK(minimize(extremal::fig1_automaton(5)) == extremal::fig1_automaton(5));
}

TEST_CASE("equivalence classes agree with word enumeration on random machines") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 200; ++t) {
        const auto aut = random_mealy(rng, 6, 2, 2);
        const auto labels = equivalence_classes(aut).labels();
        for (State p = 0; p < 6; ++p)
            for (State q = p + 1; q < 6; ++q)
                CHECK((labels[p] == labels[q]) == oracle::equivalent_by_enumeration(aut, p, q));
        CHECK(is_reduced(aut) == (equivalence_classes(aut).is_discrete()));
    }
}

TEST_CASE("uncertainty") {
    const auto aut = extremal::fig1_automaton(4);
    const StateSet s{0, 1, 2};
    CHECK(uncertainty(aut, s, Word{}).is_trivial());
    CHECK(uncertainty(aut, s, Word{1}).to_string() == "{0}{1,2}");
    CHECK(uncertainty(aut, s, Word{1, 0}).to_string() == "{0}{1,2}");
    CHECK_THROWS_AS(uncertainty(aut, StateSet{}, Word{}), InputError);
}

TEST_CASE("mealy text format round trip and errors") {
    const auto aut = extremal::fig1_automaton(5);
    const auto text = io::format_mealy(aut, {"five states"});
    CHECK(text.rfind("# five states\nmealy 5 2 2\n", 0) == 0);
    CHECK(io::parse_mealy(text) == aut);

    CHECK(io::parse_mealy("mealy 1 1 1\n0 0 0 0  # loop\n").n_states() == 1);
    auto line_of = [](const char* text) {
        try {
            io::parse_mealy(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t(0);
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("moore 1 1 1\n") == 1);
    CHECK(line_of("mealy 1 1 1\n0 0 0 0\n0 0 0 0\n") == 3);
    CHECK(line_of("mealy 2 1 1\n0 0 0 0\n") == 2);
    CHECK(line_of("mealy 1 1 1\n0 0 1 0\n") == 2);
    CHECK(line_of("mealy 1 1 1\n0 x 0 0\n") == 2);
    CHECK(line_of("mealy 1 1 1\n0 0 0\n") == 2);
}

TEST_CASE("psemi text format round trip") {
    const PartialSemiautomaton p(3, 2, {1, PartialSemiautomaton::kUndefined, 2, 0, PartialSemiautomaton::kUndefined, 1});
    const auto text = io::format_psemi(p);
    CHECK(io::parse_psemi(text) == p);
    CHECK(io::parse_psemi("psemi 2 1\n").next(0, 0) == std::nullopt);
    CHECK_THROWS_AS(io::parse_psemi("psemi 2 1\n0 0 1\n0 0 1\n"), ParseError);
}
