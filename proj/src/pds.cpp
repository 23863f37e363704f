#include "pdskit/pds.hpp"

#include <algorithm>
#include <limits>
#include <thread>
#include <unordered_map>

#include "pdskit/detail/hash.hpp"

namespace pdskit::pds {

using automata::MealyAutomaton;

bool UncertaintyNode::is_dead() const {
    for (const auto& cell : cells) {
        std::vector<State> cur;
        cur.reserve(cell.size());
        for (const auto& t : cell) cur.push_back(t.current);
        std::sort(cur.begin(), cur.end());
        if (std::adjacent_find(cur.begin(), cur.end()) != cur.end()) return true;
    }
    return false;
}

bool UncertaintyNode::is_discrete() const {
    return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 1; });
}

void UncertaintyNode::canonicalize() {
    for (auto& c : cells) std::sort(c.begin(), c.end());
    std::sort(cells.begin(), cells.end(),
              [](const auto& x, const auto& y) { return x.front().initial < y.front().initial; });
}

UncertaintyNode initial_node(std::span<const State> subset) {
    UncertaintyNode node;
    std::vector<Track> cell;
    for (State q : subset) cell.push_back({q, q});
    if (!cell.empty()) node.cells.push_back(std::move(cell));
    node.canonicalize();
    return node;
}

UncertaintyNode expand(const MealyAutomaton& aut, const UncertaintyNode& node, Symbol x) {
    UncertaintyNode child;
    child.depth = node.depth + 1;
    for (const auto& cell : node.cells) {
        std::vector<std::pair<Symbol, Track>> moved;
        moved.reserve(cell.size());
        for (const auto& t : cell) moved.push_back({aut.out(t.current, x), {t.initial, aut.next(t.current, x)}});
        std::sort(moved.begin(), moved.end());
        for (std::size_t i = 0; i < moved.size();) {
            std::size_t j = i;
            std::vector<Track> part;
            while (j < moved.size() && moved[j].first == moved[i].first) part.push_back(moved[j++].second);
            child.cells.push_back(std::move(part));
            i = j;
        }
    }
    child.canonicalize();
    return child;
}

namespace {

constexpr std::uint32_t kCellEnd = std::numeric_limits<std::uint32_t>::max();

// Search key: the current states of every unresolved cell. Which initial state
// sits where does not affect the future, and resolved (singleton) cells drop out,
// so an empty key is the discrete partition.
using Key = std::vector<std::uint32_t>;

// Returns false when the child is dead.
bool step(const MealyAutomaton& aut, const Key& key, Symbol x, Key& out,
          std::vector<std::vector<State>>& scratch) {
    scratch.clear();
    std::vector<std::pair<Symbol, State>> moved;
    std::size_t i = 0;
    while (i < key.size()) {
        moved.clear();
        for (; key[i] != kCellEnd; ++i) moved.push_back({aut.out(key[i], x), aut.next(key[i], x)});
        ++i;
        std::sort(moved.begin(), moved.end());
        for (std::size_t s = 0; s < moved.size();) {
            std::size_t e = s;
            while (e < moved.size() && moved[e].first == moved[s].first) ++e;
            if (e - s >= 2) {
                std::vector<State> part;
                for (std::size_t t = s; t < e; ++t) {
                    if (t > s && moved[t].second == moved[t - 1].second) return false;
                    part.push_back(moved[t].second);
                }
                scratch.push_back(std::move(part));
            }
            s = e;
        }
    }
    std::sort(scratch.begin(), scratch.end());
    out.clear();
    for (const auto& c : scratch) {
        out.insert(out.end(), c.begin(), c.end());
        out.push_back(kCellEnd);
    }
    return true;
}

struct Visit {
    std::uint32_t parent;
    Symbol symbol;
};

}  // namespace

PdsResult shortest_pds(const MealyAutomaton& aut, std::span<const State> subset,
                       const SearchLimits& limits) {
    const automata::StateSet s = automata::make_state_set(subset, aut.n_states());
    if (s.size() != subset.size()) throw InputError("subset contains duplicate states");
    if (s.size() < 2) throw InputError("a distinguishing sequence needs at least two states");

    PdsResult result;
    std::unordered_map<Key, std::uint32_t, detail::VectorHash> index;
    std::vector<Key> keys;
    std::vector<Visit> visits;

    Key root(s.begin(), s.end());
    root.push_back(kCellEnd);
    index.emplace(root, 0);
    keys.push_back(root);
    visits.push_back({0, 0});

    auto rebuild = [&](std::uint32_t id, Symbol last) {
        Word w{last};
        while (id != 0) {
            w.push_back(visits[id].symbol);
            id = visits[id].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    Key child;
    std::vector<std::vector<State>> scratch;
    std::size_t level_begin = 0, depth = 0;
    while (level_begin < keys.size()) {
        const std::size_t level_end = keys.size();
        if (limits.max_len && depth + 1 > *limits.max_len) {
            result.status = SearchStatus::GaveUp;
            result.nodes_visited = keys.size();
            return result;
        }
        for (std::size_t id = level_begin; id < level_end; ++id) {
            for (Symbol x = 0; x < aut.n_inputs(); ++x) {
                if (!step(aut, keys[id], x, child, scratch)) continue;
                if (child.empty()) {
                    result.status = SearchStatus::Found;
                    result.word = rebuild(std::uint32_t(id), x);
                    result.nodes_visited = keys.size();
                    return result;
                }
                if (index.contains(child)) continue;
                if (keys.size() >= limits.max_nodes) {
                    result.status = SearchStatus::GaveUp;
                    result.nodes_visited = keys.size();
                    return result;
                }
                index.emplace(child, std::uint32_t(keys.size()));
                keys.push_back(child);
                visits.push_back({std::uint32_t(id), x});
            }
        }
        level_begin = level_end;
        ++depth;
    }
    result.status = SearchStatus::Absent;
    result.nodes_visited = keys.size();
    return result;
}

bool has_pds(const MealyAutomaton& aut, std::span<const State> subset) {
    SearchLimits unbounded;
    unbounded.max_nodes = std::numeric_limits<std::size_t>::max();
    return shortest_pds(aut, subset, unbounded).found();
}

std::uint64_t automata_count(std::uint32_t n, std::uint32_t a, std::uint32_t b) {
    const std::uint64_t base = std::uint64_t(n) * b;
    const std::uint64_t cells = std::uint64_t(n) * a;
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < cells; ++i) {
        if (base != 0 && total > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        total *= base;
    }
    return total;
}

MealyAutomaton automaton_at(std::uint32_t n, std::uint32_t a, std::uint32_t b, std::uint64_t index) {
    const std::size_t cells = std::size_t(n) * a;
    const std::uint64_t base = std::uint64_t(n) * b;
    std::vector<State> next(cells);
    std::vector<Symbol> out(cells);
    for (std::size_t c = cells; c-- > 0;) {
        const std::uint64_t digit = index % base;
        index /= base;
        next[c] = State(digit / b);
        out[c] = Symbol(digit % b);
    }
    return MealyAutomaton(n, a, b, std::move(next), std::move(out));
}

namespace {

std::vector<automata::StateSet> k_subsets(std::uint32_t n, std::uint32_t k) {
    std::vector<automata::StateSet> all;
    std::vector<State> c(k);
    for (std::uint32_t i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        all.push_back(c);
        int i = int(k) - 1;
        while (i >= 0 && c[i] == n - k + std::uint32_t(i)) --i;
        if (i < 0) break;
        ++c[i];
        for (std::uint32_t j = std::uint32_t(i) + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return all;
}

struct Best {
    std::size_t length = 0;
    std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
    std::size_t subset = 0;
    std::uint64_t with_pds = 0;
};

}  // namespace

WorstCasePds worst_case_pds(std::uint32_t n, std::uint32_t a, std::uint32_t b, std::uint32_t k,
                            std::uint64_t cap, unsigned jobs) {
    if (k < 2 || k > n) throw InputError("worst_case_pds needs 2 <= k <= n");
    if (a == 0 || b == 0) throw InputError("alphabets must be non-empty");
    const std::uint64_t total = automata_count(n, a, b);
    if (total > cap)
        throw CapExceeded("enumeration of " +
                          (total == std::numeric_limits<std::uint64_t>::max() ? std::string(">2^64")
                                                                             : std::to_string(total)) +
                          " automata exceeds cap " + std::to_string(cap));
    const auto subsets = k_subsets(n, k);
    jobs = std::max(1u, std::min<unsigned>(jobs, unsigned(std::min<std::uint64_t>(total, 256))));

    std::vector<Best> partial(jobs);
    auto work = [&](unsigned j) {
        const std::uint64_t lo = total * j / jobs, hi = total * (j + 1) / jobs;
        Best& best = partial[j];
        SearchLimits unbounded;
        unbounded.max_nodes = std::numeric_limits<std::size_t>::max();
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            const MealyAutomaton aut = automaton_at(n, a, b, idx);
            for (std::size_t si = 0; si < subsets.size(); ++si) {
                const PdsResult r = shortest_pds(aut, subsets[si], unbounded);
                if (!r.found()) continue;
                ++best.with_pds;
                if (r.length() > best.length) best = {r.length(), idx, si, best.with_pds};
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
        for (auto& t : pool) t.join();
    }

    WorstCasePds out;
    out.automata_enumerated = total;
    Best best;
    for (const Best& p : partial) {
        out.pairs_with_pds += p.with_pds;
        if (p.length > best.length || (p.length == best.length && p.length > 0 && p.index < best.index))
            best = p;
    }
    out.max_length = best.length;
    if (best.length > 0) {
        out.witness = automaton_at(n, a, b, best.index);
        out.witness_subset = subsets[best.subset];
    }
    return out;
}

}  // namespace pdskit::pds
