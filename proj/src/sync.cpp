#include "pdskit/sync.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "pdskit/detail/hash.hpp"

namespace pdskit::sync {

using automata::PartialSemiautomaton;

namespace {

using Bits = std::vector<std::uint64_t>;

Bits full_set(std::uint32_t n) {
    Bits b((n + 63) / 64, ~std::uint64_t{0});
    if (n % 64) b.back() = (std::uint64_t{1} << (n % 64)) - 1;
    return b;
}

std::size_t cardinality(const Bits& b) {
    std::size_t c = 0;
    for (auto w : b) c += std::size_t(std::popcount(w));
    return c;
}

// delta(S, a), or false when a is undefined somewhere on S.
bool apply(const PartialSemiautomaton& aut, const Bits& s, Symbol a, Bits& out) {
    out.assign(s.size(), 0);
    for (std::size_t w = 0; w < s.size(); ++w) {
        for (std::uint64_t rest = s[w]; rest; rest &= rest - 1) {
            const State q = State(w * 64 + std::size_t(std::countr_zero(rest)));
            const State t = aut.cell(q, a);
            if (t == PartialSemiautomaton::kUndefined) return false;
            out[t / 64] |= std::uint64_t{1} << (t % 64);
        }
    }
    return true;
}

// Breadth-first exploration of the image-set lattice from one root. Nodes are
// numbered in discovery order, which is shortest-then-lexicographic word order.
struct Lattice {
    std::vector<Bits> nodes;
    std::vector<std::uint32_t> parent;
    std::vector<Symbol> via;
    std::vector<std::vector<std::uint32_t>> succ;
    bool complete = true;

    Lattice(const PartialSemiautomaton& aut, Bits root, std::size_t max_nodes,
            bool stop_below = false) {
        const std::size_t root_size = cardinality(root);
        std::unordered_map<Bits, std::uint32_t, detail::VectorHash> index;
        index.emplace(root, 0);
        nodes.push_back(std::move(root));
        parent.push_back(0);
        via.push_back(0);
        Bits img;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            succ.emplace_back();
            for (Symbol a = 0; a < aut.n_inputs(); ++a) {
                if (!apply(aut, nodes[i], a, img)) continue;
                auto it = index.find(img);
                if (it == index.end()) {
                    if (nodes.size() >= max_nodes) {
                        complete = false;
                        return;
                    }
                    it = index.emplace(img, std::uint32_t(nodes.size())).first;
                    nodes.push_back(img);
                    parent.push_back(std::uint32_t(i));
                    via.push_back(a);
                    if (stop_below && cardinality(img) < root_size) return;
                }
                succ[i].push_back(it->second);
            }
        }
    }

    Word word_to(std::uint32_t id) const {
        Word w;
        for (; id != 0; id = parent[id]) w.push_back(via[id]);
        std::reverse(w.begin(), w.end());
        return w;
    }
};

}  // namespace

WordResult shortest_carefully_synchronizing(const PartialSemiautomaton& aut, const SyncLimits& limits) {
    WordResult r;
    const Lattice lat(aut, full_set(aut.n_states()), limits.max_nodes);
    for (std::uint32_t i = 0; i < lat.nodes.size(); ++i) {
        if (cardinality(lat.nodes[i]) == 1) {
            r.status = SearchStatus::Found;
            r.word = lat.word_to(i);
            r.image_size = 1;
            return r;
        }
    }
    r.status = lat.complete ? SearchStatus::Absent : SearchStatus::GaveUp;
    return r;
}

bool is_irreducible(const PartialSemiautomaton& aut, std::span<const Symbol> w, const SyncLimits& limits) {
    aut.check_word(w);
    Bits s = full_set(aut.n_states()), img;
    for (Symbol a : w) {
        if (!apply(aut, s, a, img)) return false;
        s.swap(img);
    }
    const std::size_t size = cardinality(s);
    const Lattice lat(aut, std::move(s), limits.max_nodes, true);
    for (const auto& node : lat.nodes)
        if (cardinality(node) < size) return false;
    if (!lat.complete) throw CapExceeded("irreducibility search exceeded the node cap");
    return true;
}

WordResult shortest_irreducible(const PartialSemiautomaton& aut, const SyncLimits& limits) {
    WordResult r;
    const Lattice lat(aut, full_set(aut.n_states()), limits.max_nodes);
    if (!lat.complete) {
        r.status = SearchStatus::GaveUp;
        return r;
    }
    // least[i]: smallest cardinality reachable from node i. Edges never grow a
    // set, so relaxing to a fixpoint terminates.
    std::vector<std::size_t> least(lat.nodes.size());
    for (std::size_t i = 0; i < least.size(); ++i) least[i] = cardinality(lat.nodes[i]);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = least.size(); i-- > 0;)
            for (auto t : lat.succ[i])
                if (least[t] < least[i]) {
                    least[i] = least[t];
                    changed = true;
                }
    }
    for (std::uint32_t i = 0; i < lat.nodes.size(); ++i) {
        const std::size_t size = cardinality(lat.nodes[i]);
        if (least[i] == size) {
            r.status = SearchStatus::Found;
            r.word = lat.word_to(i);
            r.image_size = size;
            return r;
        }
    }
    r.status = SearchStatus::Absent;
    return r;
}

}  // namespace pdskit::sync
