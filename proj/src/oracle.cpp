#include "pdskit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pdskit::oracle {

using automata::MealyAutomaton;
using automata::PartialSemiautomaton;
using semigroup::Transformation;

namespace {

// Advances w to the next word of the same length over {0..a-1}; false on wraparound.
bool next_word(Word& w, std::uint32_t a) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (++w[i] < a) return true;
        w[i] = 0;
    }
    return false;
}

Word outputs(const MealyAutomaton& aut, State q, const Word& w) {
    Word y;
    y.reserve(w.size());
    for (Symbol x : w) {
        y.push_back(aut.out(q, x));
        q = aut.next(q, x);
    }
    return y;
}

// delta(S, w) as a sorted set, or nullopt when some transition is undefined.
std::optional<std::vector<State>> image_of(const PartialSemiautomaton& aut, std::vector<State> s,
                                           const Word& w) {
    for (Symbol x : w) {
        for (auto& q : s) {
            auto t = aut.next(q, x);
            if (!t) return std::nullopt;
            q = *t;
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return s;
}

std::vector<State> all_states(std::uint32_t n) {
    std::vector<State> s(n);
    std::iota(s.begin(), s.end(), 0u);
    return s;
}

std::uint64_t order_by_powers(const std::vector<std::uint32_t>& p) {
    std::vector<std::uint32_t> cur = p;
    std::uint64_t ord = 1;
    for (;;) {
        bool id = true;
        for (std::size_t x = 0; x < cur.size(); ++x) id = id && cur[x] == x;
        if (id) return ord;
        for (auto& v : cur) v = p[v];
        ++ord;
    }
}

void partitions(std::uint32_t rest, std::uint32_t max_part, std::uint64_t lcm_so_far, std::uint64_t& best) {
    if (rest == 0) {
        best = std::max(best, lcm_so_far);
        return;
    }
    for (std::uint32_t p = std::min(rest, max_part); p >= 1; --p)
        partitions(rest - p, p, std::lcm(lcm_so_far, std::uint64_t(p)), best);
}

std::vector<std::uint32_t> product_of(const std::vector<Transformation>& basis, const Word& w, std::uint32_t n) {
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t y = x;
        for (Symbol s : w) y = basis[s](y);
        img[x] = y;
    }
    return img;
}

std::uint64_t complexity_by_products(const std::vector<Transformation>& basis) {
    const std::uint32_t n = basis.front().ground();
    std::set<std::vector<std::uint32_t>> seen;
    std::uint64_t worst = 0;
    for (std::size_t len = 1;; ++len) {
        Word w(len, 0);
        bool fresh = false;
        do {
            if (seen.insert(product_of(basis, w, n)).second) fresh = true;
        } while (next_word(w, std::uint32_t(basis.size())));
        if (!fresh) return worst;
        worst = len;
    }
}

}  // namespace

std::optional<Word> shortest_pds_by_enumeration(const MealyAutomaton& aut, const std::vector<State>& subset,
                                                std::size_t max_len) {
    for (std::size_t len = 0; len <= max_len; ++len) {
        Word w(len, 0);
        do {
            std::set<Word> seen;
            bool ok = true;
            for (State q : subset) ok = ok && seen.insert(outputs(aut, q, w)).second;
            if (ok) return w;
        } while (next_word(w, aut.n_inputs()));
    }
    return std::nullopt;
}

bool equivalent_by_enumeration(const MealyAutomaton& aut, State p, State q) {
    for (std::size_t len = 1; len + 1 <= aut.n_states(); ++len) {
        Word w(len, 0);
        do {
            if (outputs(aut, p, w) != outputs(aut, q, w)) return false;
        } while (next_word(w, aut.n_inputs()));
    }
    return true;
}

std::uint64_t max_partition_lcm(std::uint32_t k) {
    std::uint64_t best = 1;
    partitions(k, k, 1, best);
    return best;
}

std::uint64_t max_element_order(std::uint32_t k) {
    std::vector<std::uint32_t> p(k);
    std::iota(p.begin(), p.end(), 0u);
    std::uint64_t best = 1;
    do {
        best = std::max(best, order_by_powers(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

std::uint64_t worst_case_complexity_by_products(const std::vector<Transformation>& set) {
    if (set.empty() || set.size() > 20) throw InputError("oracle supports 1..20 elements");
    std::uint64_t worst = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << set.size()); ++mask) {
        std::vector<Transformation> basis;
        for (std::size_t i = 0; i < set.size(); ++i)
            if (mask >> i & 1) basis.push_back(set[i]);
        worst = std::max(worst, complexity_by_products(basis));
    }
    return worst;
}

std::vector<std::vector<kgraph::Vertex>> scc_by_closure(const kgraph::KGraph& g) {
    const std::size_t v = g.vertex_count();
    std::vector<std::vector<char>> reach(v, std::vector<char>(v, 0));
    for (std::size_t i = 0; i < v; ++i) reach[i][i] = 1;
    for (const auto& arc : g.arcs()) reach[arc.source][arc.target] = 1;
    for (std::size_t m = 0; m < v; ++m)
        for (std::size_t i = 0; i < v; ++i)
            if (reach[i][m])
                for (std::size_t j = 0; j < v; ++j)
                    if (reach[m][j]) reach[i][j] = 1;

    std::vector<std::vector<kgraph::Vertex>> comps;
    std::vector<char> placed(v, 0);
    for (std::size_t i = 0; i < v; ++i) {
        if (placed[i]) continue;
        std::vector<kgraph::Vertex> c;
        for (std::size_t j = i; j < v; ++j)
            if (reach[i][j] && reach[j][i]) {
                c.push_back(kgraph::Vertex(j));
                placed[j] = 1;
            }
        comps.push_back(std::move(c));
    }
    return comps;
}

bool irreducible_by_definition(const PartialSemiautomaton& aut, const Word& w, std::size_t max_beta) {
    const auto img = image_of(aut, all_states(aut.n_states()), w);
    if (!img) return false;
    // Depth-first over beta, extending one letter at a time; an undefined prefix
    // stays undefined under every extension.
    const std::size_t target = img->size();
    bool shrinks = false;
    auto visit = [&](auto&& self, const std::vector<State>& s, std::size_t depth) -> void {
        if (shrinks || depth == max_beta) return;
        for (Symbol x = 0; x < aut.n_inputs() && !shrinks; ++x) {
            auto t = image_of(aut, s, Word{x});
            if (!t) continue;
            if (t->size() < target) {
                shrinks = true;
                return;
            }
            self(self, *t, depth + 1);
        }
    };
    visit(visit, *img, 0);
    return !shrinks;
}

std::optional<Word> shortest_careful_by_enumeration(const PartialSemiautomaton& aut, std::size_t max_len) {
    const auto q = all_states(aut.n_states());
    for (std::size_t len = 0; len <= max_len; ++len) {
        Word w(len, 0);
        do {
            auto img = image_of(aut, q, w);
            if (img && img->size() == 1) return w;
        } while (next_word(w, aut.n_inputs()));
    }
    return std::nullopt;
}

std::optional<Word> shortest_irreducible_by_enumeration(const PartialSemiautomaton& aut, std::size_t max_len,
                                                        std::size_t max_beta) {
    for (std::size_t len = 0; len <= max_len; ++len) {
        Word w(len, 0);
        do {
            if (irreducible_by_definition(aut, w, max_beta)) return w;
        } while (next_word(w, aut.n_inputs()));
    }
    return std::nullopt;
}

}  // namespace pdskit::oracle
