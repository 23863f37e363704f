#include "pdskit/extremal.hpp"

#include <bit>
#include <map>
#include <numeric>

#include "pdskit/bounds.hpp"

namespace pdskit::extremal {

using automata::MealyAutomaton;
using automata::PartialSemiautomaton;
using semigroup::Transformation;

MealyAutomaton fig1_automaton(std::uint32_t n) {
    if (n < 3) throw InputError("fig1_automaton needs n >= 3");
    std::vector<State> next(std::size_t(n) * 2);
    std::vector<Symbol> out(std::size_t(n) * 2);
    for (State q = 0; q < n; ++q) {
        next[2 * q] = (q + 1) % n;
        out[2 * q] = 0;
        next[2 * q + 1] = 0;
        out[2 * q + 1] = q == 0 ? 1 : 0;
    }
    return MealyAutomaton(n, 2, 2, std::move(next), std::move(out));
}

SokolovskiiInstance sokolovskii_instance(std::uint32_t n, std::uint32_t k, std::uint64_t cap) {
    if (k < 1 || k >= n) throw InputError("sokolovskii_instance needs 1 <= k < n");
    const bounds::BigInt m_big = bounds::binomial(n - 1, k);
    if (m_big > cap)
        throw CapExceeded("construction needs " + m_big.str() + " letters, cap is " + std::to_string(cap));
    const std::uint32_t m = m_big.convert_to<std::uint32_t>();

    std::vector<std::vector<std::uint32_t>> subsets;
    std::vector<std::uint32_t> c(k);
    std::iota(c.begin(), c.end(), 0u);
    for (;;) {
        subsets.push_back(c);
        int i = int(k) - 1;
        while (i >= 0 && c[i] == (n - 1) - k + std::uint32_t(i)) --i;
        if (i < 0) break;
        ++c[i];
        for (std::uint32_t j = std::uint32_t(i) + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }

    const Transformation pi = landau::max_order_permutation(k);
    const std::uint32_t sink = n - 1;
    std::vector<State> next(std::size_t(n) * m, sink);
    for (std::uint32_t i = 0; i < m; ++i) {
        const auto& from = subsets[i];
        const bool last = i + 1 == m;
        const auto& to = subsets[last ? 0 : i + 1];
        for (std::uint32_t j = 0; j < k; ++j)
            next[std::size_t(from[j]) * m + i] = last ? to[pi(j)] : to[j];
    }
    PartialSemiautomaton semi(n, m, next);

    std::vector<Transformation> basis;
    for (std::uint32_t i = 0; i < m; ++i) {
        std::vector<std::uint32_t> img(n);
        for (std::uint32_t q = 0; q < n; ++q) img[q] = next[std::size_t(q) * m + i];
        basis.emplace_back(std::move(img));
    }
    Word cycle(m);
    std::iota(cycle.begin(), cycle.end(), 0u);

    const std::uint64_t r_k = semigroup::order(pi);
    Transformation target = Transformation::identity(n);
    for (std::uint64_t s = 0; s + 1 < r_k; ++s)
        for (Symbol x : cycle) target = semigroup::compose(target, basis[x]);

    return SokolovskiiInstance{
        .n = n,
        .k = k,
        .m = m,
        .subsets = std::move(subsets),
        .pi = pi,
        .pi_order = r_k,
        .semiautomaton = std::move(semi),
        .basis = std::move(basis),
        .cycle_word = std::move(cycle),
        .target = std::move(target),
    };
}

bool cycle_characterization(const SokolovskiiInstance& inst, std::size_t max_len) {
    if (inst.n > 64) throw InputError("cycle_characterization supports n <= 64");
    using Mask = std::uint64_t;
    using Count = landau::BigInt;
    Mask d1 = 0;
    for (auto q : inst.subsets.front()) d1 |= Mask{1} << q;

    // cycle_word^s must itself return D_1 to D_1.
    {
        auto img = automata::image(inst.semiautomaton, inst.subsets.front(), inst.cycle_word);
        if (!img || *img != inst.subsets.front()) return false;
    }

    std::map<Mask, Count> layer{{d1, Count(1)}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::map<Mask, Count> next;
        for (const auto& [set, count] : layer) {
            for (Symbol a = 0; a < inst.m; ++a) {
                Mask img = 0;
                for (Mask rest = set; rest; rest &= rest - 1) {
                    const auto q = State(std::countr_zero(rest));
                    img |= Mask{1} << *inst.semiautomaton.next(q, a);
                }
                next[img] += count;
            }
        }
        layer = std::move(next);
        auto it = layer.find(d1);
        const Count returns = it == layer.end() ? Count(0) : it->second;
        if (returns != Count(len % inst.m == 0 ? 1 : 0)) return false;
    }
    return true;
}

LowerBoundReport verify_lower_bound(std::uint32_t n, std::uint32_t k, std::uint64_t closure_cap) {
    const SokolovskiiInstance inst = sokolovskii_instance(n, k);
    LowerBoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.m = inst.m;
    rep.r_k = inst.pi_order;
    rep.bound = bounds::binomial(n - 1, k).convert_to<std::uint64_t>() * (rep.r_k - 1);
    rep.exact = std::uint64_t(inst.m) * (rep.r_k - 1);
    const auto c = semigroup::closure(inst.basis, closure_cap);
    rep.closure_size = c.size();
    if (auto l = c.level_of(inst.target)) rep.computed = *l;
    rep.pass = rep.computed ? *rep.computed >= rep.bound : rep.bound == 0;
    rep.equals_exact = rep.computed && *rep.computed == rep.exact;
    rep.cycle_check = cycle_characterization(inst, 2 * std::size_t(inst.m));
    return rep;
}

}  // namespace pdskit::extremal
