#include <doctest.h>

#include <algorithm>
#include <random>

#include "pdskit/extremal.hpp"
#include "pdskit/oracle.hpp"
#include "pdskit/kgraph.hpp"

using namespace pdskit;
using namespace pdskit::kgraph;

namespace {

Transformation t(std::vector<std::uint32_t> v) { return Transformation(std::move(v)); }

std::vector<Transformation> random_basis(std::mt19937_64& rng, std::uint32_t n, std::size_t count, bool perms) {
    std::vector<Transformation> basis;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<std::uint32_t> img(n);
        if (perms || rng() % 2) {
            std::iota(img.begin(), img.end(), 0u);
            std::shuffle(img.begin(), img.end(), rng);
        } else {
            for (auto& v : img) v = std::uint32_t(rng() % n);
        }
        basis.push_back(t(img));
    }
    return basis;
}

}  // namespace

TEST_CASE("construction") {
    const KGraph id{std::vector<Transformation>{Transformation::identity(4)}, 2};
    CHECK(id.vertex_count() == 6);
    CHECK(id.arcs().size() == 6);
    for (Vertex v = 0; v < 6; ++v) {
        REQUIRE(id.out_arcs(v).size() == 1);
        const auto& arc = id.arc(id.out_arcs(v)[0]);
        CHECK(arc.target == v);
        CHECK(arc.map.is_identity());
    }

    const KGraph constant{std::vector<Transformation>{Transformation::constant(4, 1)}, 2};
    CHECK(constant.arcs().empty());

    CHECK(id.vertex(0) == Subset{0, 1});
    CHECK(id.vertex(5) == Subset{2, 3});
    CHECK(id.vertex_of(std::vector<std::uint32_t>{1, 3}) == 4);
    CHECK_THROWS_AS(id.vertex_of(std::vector<std::uint32_t>{3, 1}), InputError);
    CHECK_THROWS_AS(KGraph(std::vector{Transformation::identity(4)}, 5), InputError);
    CHECK_THROWS_AS(KGraph(std::vector{Transformation::identity(20)}, 10, 1000), CapExceeded);
}

TEST_CASE("lower-bound construction cycle") {
    const auto inst = extremal::sokolovskii_instance(4, 2);
    const KGraph g(inst.basis, 2);
    // D_1 -> D_2 under the first letter.
    const auto d1 = g.vertex_of(inst.subsets[0]);
    const auto arc = g.arc_for(d1, 0);
    REQUIRE(arc >= 0);
    CHECK(g.arc(std::size_t(arc)).target == g.vertex_of(inst.subsets[1]));

    const auto comps = scc(g);
    const auto c = comps.component_of[d1];
    for (const auto& d : inst.subsets) CHECK(comps.component_of[g.vertex_of(d)] == c);

    const auto cycle = walk_from_letters(g, d1, inst.cycle_word);
    CHECK(end_vertex(g, cycle) == d1);
    CHECK(eval_walk(g, cycle).to_string() == "{0->1,1->0}");
}

TEST_CASE("strongly connected components agree with transitive closure") {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 100; ++trial) {
        const KGraph g(random_basis(rng, 5, 1 + rng() % 3, false), 2);
        const auto comps = scc(g);
        CHECK(comps.members == oracle::scc_by_closure(g));
    }
    const KGraph id{std::vector<Transformation>{Transformation::identity(4)}, 2};
    CHECK(scc(id).members.size() == 6);
}

TEST_CASE("walk evaluation") {
    const KGraph g{std::vector<Transformation>{t({1, 2, 3, 0}), t({1, 0, 2, 3})}, 2};
    const Vertex d = 0;
    CHECK(eval_walk(g, Walk{d, {}}).is_identity());
    CHECK(eval_walk(g, Walk{d, {}}).domain() == Subset{0, 1});

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        // A closed walk: a random walk followed by a way back.
        auto w = random_walk(g, d, rng() % 10, rng());
        const auto back = shortest_path(g, end_vertex(g, w), d);
        w.arcs.insert(w.arcs.end(), back.arcs.begin(), back.arcs.end());
        const auto e = eval_walk(g, w);
        auto power = e;
        for (std::size_t k = 1; k <= 4; ++k) {
            CHECK(eval_walk(g, repeat(g, w, k)) == power);
            power = semigroup::compose(power, e);
        }
    }
    CHECK_THROWS_AS(walk_from_letters(g, 0, std::vector<std::uint32_t>{2}), InputError);
    CHECK_THROWS_AS(validate(g, Walk{0, {std::uint32_t(g.arcs().size())}}), InputError);
}

TEST_CASE("saturation keeps the evaluation") {
    const auto inst = extremal::sokolovskii_instance(4, 2);
    const KGraph lg(inst.basis, 2);
    const auto d1 = lg.vertex_of(inst.subsets[0]);
    const auto cycle = walk_from_letters(lg, d1, inst.cycle_word);
    CHECK(eval_walk(lg, saturate(lg, cycle, d1)) == eval_walk(lg, cycle));

    std::mt19937_64 rng(77);
    int checked = 0;
    while (checked < 30) {
        const KGraph g(random_basis(rng, 5, 2, true), 2);
        if (scc(g).members.size() != 1) continue;
        const auto w = random_walk(g, Vertex(rng() % g.vertex_count()), 20, rng());
        const auto pivot = Vertex(rng() % g.vertex_count());
        const auto s = saturate(g, w, pivot);
        CHECK(eval_walk(g, s) == eval_walk(g, w));
        CHECK(s.start == w.start);
        ++checked;
    }

    // Pivot outside the walk's component.
    const KGraph split{std::vector<Transformation>{Transformation::identity(3)}, 2};
    CHECK_THROWS_AS(saturate(split, Walk{0, {}}, 1), InputError);
}

TEST_CASE("compression") {
    const KGraph g{std::vector<Transformation>{t({1, 0, 2, 3}), t({0, 2, 1, 3})}, 2};
    // c = letter 0 at {0,1} swaps the pair; c^2 is the identity.
    const Walk c2 = walk_from_letters(g, 0, std::vector<std::uint32_t>{0, 0});
    const auto r = compress_walk(g, c2);
    CHECK(eval_walk(g, r.walk).is_identity());
    CHECK(r.walk.length() <= 2);

    const Walk one = walk_from_letters(g, 0, std::vector<std::uint32_t>{1});
    const auto r1 = compress_walk(g, one);
    CHECK(r1.walk.length() <= 1);
    CHECK(eval_walk(g, r1.walk) == eval_walk(g, one));

    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint32_t n = 5;
        const KGraph rg(random_basis(rng, n, 1 + rng() % 3, false), 2);
        const auto w = random_walk(rg, Vertex(rng() % rg.vertex_count()), 200, rng());
        const auto out = compress_walk(rg, w);
        validate(rg, out.walk);
        CHECK(out.walk.start == w.start);
        CHECK(eval_walk(rg, out.walk) == eval_walk(rg, w));
        std::size_t r_hat = 0;
        for (const auto& comp : out.components) {
            CHECK(comp.length <= comp.bound);
            r_hat = std::max(r_hat, comp.factor_length);
        }
        CHECK(out.walk.length() < 2 * 10 * (r_hat + 1));
    }
}

TEST_CASE("dot export") {
    const KGraph g{std::vector<Transformation>{t({1, 2, 0})}, 2};
    const auto dot = g.to_dot();
    CHECK(dot.rfind("digraph kgraph {\n", 0) == 0);
    CHECK(dot.find("v0 [label=\"{0,1}\"];") != std::string::npos);
    CHECK(dot.find("v0 -> v2 [label=\"0\"];") != std::string::npos);
    CHECK(dot.back() == '\n');
}
