#include "pdskit/automata.hpp"

#include <algorithm>
#include <map>

namespace pdskit::automata {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

}  // namespace

MealyAutomaton::MealyAutomaton(std::uint32_t n_states, std::uint32_t n_inputs,
                               std::uint32_t n_outputs, std::vector<State> next,
                               std::vector<Symbol> out)
    : n_(n_states), a_(n_inputs), b_(n_outputs), next_(std::move(next)), out_(std::move(out)) {
    require(n_ >= 1 && a_ >= 1 && b_ >= 1, "mealy automaton needs at least one state, input and output");
    const std::size_t cells = std::size_t(n_) * a_;
    require(next_.size() == cells && out_.size() == cells, "mealy tables must have n*a cells");
    for (std::size_t i = 0; i < cells; ++i) {
        require(next_[i] < n_, "transition target out of range at cell " + std::to_string(i));
        require(out_[i] < b_, "output symbol out of range at cell " + std::to_string(i));
    }
}

void MealyAutomaton::check_state(State q) const {
    require(q < n_, "state " + std::to_string(q) + " out of range");
}

void MealyAutomaton::check_word(std::span<const Symbol> w) const {
    for (Symbol x : w) require(x < a_, "input symbol " + std::to_string(x) + " out of range");
}

PartialSemiautomaton::PartialSemiautomaton(std::uint32_t n_states, std::uint32_t n_inputs,
                                           std::vector<State> next)
    : n_(n_states), a_(n_inputs), next_(std::move(next)) {
    require(n_ >= 1 && a_ >= 1, "semiautomaton needs at least one state and input");
    require(next_.size() == std::size_t(n_) * a_, "semiautomaton table must have n*a cells");
    for (std::size_t i = 0; i < next_.size(); ++i)
        require(next_[i] == kUndefined || next_[i] < n_,
                "transition target out of range at cell " + std::to_string(i));
}

bool PartialSemiautomaton::is_complete() const noexcept {
    return std::none_of(next_.begin(), next_.end(), [](State t) { return t == kUndefined; });
}

void PartialSemiautomaton::check_state(State q) const {
    require(q < n_, "state " + std::to_string(q) + " out of range");
}

void PartialSemiautomaton::check_word(std::span<const Symbol> w) const {
    for (Symbol x : w) require(x < a_, "input symbol " + std::to_string(x) + " out of range");
}

StateSet make_state_set(std::span<const State> states, std::uint32_t n_states) {
    StateSet s(states.begin(), states.end());
    for (State q : s) require(q < n_states, "state " + std::to_string(q) + " out of range");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Partition::Partition(std::vector<StateSet> blocks) : blocks_(std::move(blocks)) {
    StateSet seen;
    for (auto& b : blocks_) {
        require(!b.empty(), "partition blocks must be non-empty");
        std::sort(b.begin(), b.end());
        seen.insert(seen.end(), b.begin(), b.end());
    }
    std::sort(seen.begin(), seen.end());
    require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
            "partition blocks must be disjoint");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const StateSet& x, const StateSet& y) { return x.front() < y.front(); });
}

StateSet Partition::ground() const {
    StateSet g;
    for (const auto& b : blocks_) g.insert(g.end(), b.begin(), b.end());
    std::sort(g.begin(), g.end());
    return g;
}

bool Partition::is_discrete() const noexcept {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const StateSet& b) { return b.size() == 1; });
}

bool Partition::refines(const Partition& coarser) const {
    std::map<State, std::size_t> owner;
    for (std::size_t i = 0; i < coarser.blocks_.size(); ++i)
        for (State q : coarser.blocks_[i]) owner[q] = i;
    for (const auto& b : blocks_) {
        auto first = owner.find(b.front());
        if (first == owner.end()) return false;
        for (State q : b) {
            auto it = owner.find(q);
            if (it == owner.end() || it->second != first->second) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> Partition::labels() const {
    std::map<State, std::uint32_t> owner;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (State q : blocks_[i]) owner[q] = std::uint32_t(i);
    std::vector<std::uint32_t> out;
    out.reserve(owner.size());
    for (const auto& [q, i] : owner) out.push_back(i);
    return out;
}

std::string Partition::to_string() const {
    std::string s;
    for (const auto& b : blocks_) s += '{' + format_list(b) + '}';
    return s;
}

std::pair<State, Word> run(const MealyAutomaton& aut, State q, std::span<const Symbol> w) {
    aut.check_state(q);
    aut.check_word(w);
    Word out;
    out.reserve(w.size());
    for (Symbol x : w) {
        out.push_back(aut.out(q, x));
        q = aut.next(q, x);
    }
    return {q, std::move(out)};
}

StateSet image(const MealyAutomaton& aut, std::span<const State> states, std::span<const Symbol> w) {
    aut.check_word(w);
    StateSet cur = make_state_set(states, aut.n_states());
    for (Symbol x : w) {
        for (State& q : cur) q = aut.next(q, x);
        std::sort(cur.begin(), cur.end());
        cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    }
    return cur;
}

std::optional<StateSet> image(const PartialSemiautomaton& aut, std::span<const State> states,
                              std::span<const Symbol> w) {
    aut.check_word(w);
    StateSet cur = make_state_set(states, aut.n_states());
    for (Symbol x : w) {
        for (State& q : cur) {
            State t = aut.cell(q, x);
            if (t == PartialSemiautomaton::kUndefined) return std::nullopt;
            q = t;
        }
        std::sort(cur.begin(), cur.end());
        cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    }
    return cur;
}

Partition equivalence_classes(const MealyAutomaton& aut) {
    const std::uint32_t n = aut.n_states(), a = aut.n_inputs();
    std::vector<std::uint32_t> cls(n);
    std::size_t count = 0;
    {
        std::map<std::vector<Symbol>, std::uint32_t> ids;
        for (State q = 0; q < n; ++q) {
            std::vector<Symbol> row(aut.out_table().begin() + std::ptrdiff_t(q) * a,
                                    aut.out_table().begin() + std::ptrdiff_t(q + 1) * a);
            cls[q] = ids.emplace(std::move(row), std::uint32_t(ids.size())).first->second;
        }
        count = ids.size();
    }
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
        std::vector<std::uint32_t> refined(n);
        for (State q = 0; q < n; ++q) {
            std::vector<std::uint32_t> sig{cls[q]};
            for (Symbol x = 0; x < a; ++x) sig.push_back(cls[aut.next(q, x)]);
            refined[q] = ids.emplace(std::move(sig), std::uint32_t(ids.size())).first->second;
        }
        cls = std::move(refined);
        if (ids.size() == count) break;
        count = ids.size();
    }
    std::vector<StateSet> blocks(count);
    for (State q = 0; q < n; ++q) blocks[cls[q]].push_back(q);
    return Partition(std::move(blocks));
}

bool is_reduced(const MealyAutomaton& aut) {
    return equivalence_classes(aut).size() == aut.n_states();
}

MealyAutomaton minimize(const MealyAutomaton& aut) {
    const Partition p = equivalence_classes(aut);
    const auto label = p.labels();
    const std::uint32_t m = std::uint32_t(p.size()), a = aut.n_inputs();
    std::vector<State> next(std::size_t(m) * a);
    std::vector<Symbol> out(std::size_t(m) * a);
    for (std::uint32_t i = 0; i < m; ++i) {
        const State rep = p.blocks()[i].front();
        for (Symbol x = 0; x < a; ++x) {
            next[std::size_t(i) * a + x] = label[aut.next(rep, x)];
            out[std::size_t(i) * a + x] = aut.out(rep, x);
        }
    }
    return MealyAutomaton(m, a, aut.n_outputs(), std::move(next), std::move(out));
}

Partition uncertainty(const MealyAutomaton& aut, std::span<const State> states,
                      std::span<const Symbol> w) {
    require(!states.empty(), "uncertainty needs a non-empty state set");
    const StateSet s = make_state_set(states, aut.n_states());
    aut.check_word(w);
    std::map<Word, StateSet> groups;
    for (State q : s) groups[run(aut, q, w).second].push_back(q);
    std::vector<StateSet> blocks;
    for (auto& [_, b] : groups) blocks.push_back(std::move(b));
    return Partition(std::move(blocks));
}

}  // namespace pdskit::automata
