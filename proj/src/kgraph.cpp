#include "pdskit/kgraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "pdskit/detail/hash.hpp"

namespace pdskit::kgraph {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k, std::uint64_t saturate_at) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > saturate_at) return saturate_at + 1;
    }
    return r;
}

}  // namespace

KGraph::KGraph(std::vector<Transformation> basis, std::uint32_t k, std::uint64_t cap)
    : k_(k), basis_(std::move(basis)) {
    require(!basis_.empty(), "k-graph basis must be non-empty");
    n_ = basis_.front().ground();
    for (const auto& f : basis_) require(f.ground() == n_, "basis maps must share a ground size");
    require(k >= 1 && k <= n_, "k-graph needs 1 <= k <= n");
    const std::uint64_t count = choose(n_, k, cap);
    if (count > cap)
        throw CapExceeded("k-graph would have more than " + std::to_string(cap) + " vertices");

    Subset c(k);
    std::iota(c.begin(), c.end(), 0u);
    for (;;) {
        vertices_.push_back(c);
        int i = int(k) - 1;
        while (i >= 0 && c[i] == n_ - k + std::uint32_t(i)) --i;
        if (i < 0) break;
        ++c[i];
        for (std::uint32_t j = std::uint32_t(i) + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }

    out_begin_.assign(vertices_.size() + 1, 0);
    for (Vertex v = 0; v < vertices_.size(); ++v) {
        const Subset& d = vertices_[v];
        for (std::uint32_t letter = 0; letter < basis_.size(); ++letter) {
            const Transformation& f = basis_[letter];
            if (!f.injective_on(d)) continue;
            std::vector<std::uint32_t> images;
            for (auto x : d) images.push_back(f(x));
            Subset target = images;
            std::sort(target.begin(), target.end());
            arcs_.push_back({v, vertex_of(target), letter, PartialBijection(d, std::move(images))});
        }
        out_begin_[v + 1] = std::uint32_t(arcs_.size());
    }
    out_list_.resize(arcs_.size());
    std::iota(out_list_.begin(), out_list_.end(), 0u);

    in_begin_.assign(vertices_.size() + 1, 0);
    for (const Arc& a : arcs_) ++in_begin_[a.target + 1];
    std::partial_sum(in_begin_.begin(), in_begin_.end(), in_begin_.begin());
    in_list_.resize(arcs_.size());
    std::vector<std::uint32_t> fill(in_begin_.begin(), in_begin_.end() - 1);
    for (std::uint32_t i = 0; i < arcs_.size(); ++i) in_list_[fill[arcs_[i].target]++] = i;
}

Vertex KGraph::vertex_of(std::span<const std::uint32_t> s) const {
    require(s.size() == k_, "vertex must have exactly k points");
    // Lexicographic rank of a sorted k-subset.
    std::uint64_t rank = 0;
    std::uint32_t prev = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
        require(s[i] < n_, "vertex point out of range");
        require(i == 0 || s[i] > s[i - 1], "vertex points must be strictly ascending");
        for (std::uint32_t x = (i == 0 ? 0 : prev + 1); x < s[i]; ++x)
            rank += choose(n_ - 1 - x, k_ - 1 - i, ~0ull);
        prev = s[i];
    }
    return Vertex(rank);
}

std::span<const std::uint32_t> KGraph::out_arcs(Vertex v) const {
    return {out_list_.data() + out_begin_.at(v), out_list_.data() + out_begin_.at(v + 1)};
}

std::span<const std::uint32_t> KGraph::in_arcs(Vertex v) const {
    return {in_list_.data() + in_begin_.at(v), in_list_.data() + in_begin_.at(v + 1)};
}

long KGraph::arc_for(Vertex v, std::uint32_t letter) const {
    for (auto a : out_arcs(v))
        if (arcs_[a].letter == letter) return long(a);
    return -1;
}

std::string KGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph kgraph {\n";
    for (Vertex v = 0; v < vertices_.size(); ++v)
        os << "  v" << v << " [label=\"{" << format_list(vertices_[v]) << "}\"];\n";
    for (const Arc& a : arcs_)
        os << "  v" << a.source << " -> v" << a.target << " [label=\"" << a.letter << "\"];\n";
    os << "}\n";
    return os.str();
}

Components scc(const KGraph& g) {
    const std::size_t nv = g.vertex_count();
    constexpr std::uint32_t kUnseen = ~0u;
    std::vector<std::uint32_t> index(nv, kUnseen), low(nv), comp(nv, kUnseen);
    std::vector<bool> on_stack(nv);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> raw;
    std::uint32_t counter = 0;

    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> call;
    for (Vertex root = 0; root < nv; ++root) {
        if (index[root] != kUnseen) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto outs = g.out_arcs(f.v);
            if (f.next < outs.size()) {
                const Vertex w = g.arc(outs[f.next++]).target;
                if (index[w] == kUnseen) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const Vertex v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<Vertex> members;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    members.push_back(w);
                } while (w != v);
                std::sort(members.begin(), members.end());
                raw.push_back(std::move(members));
            }
        }
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    Components out;
    out.component_of.assign(nv, 0);
    for (std::uint32_t c = 0; c < raw.size(); ++c)
        for (Vertex v : raw[c]) out.component_of[v] = c;
    out.members = std::move(raw);
    return out;
}

void validate(const KGraph& g, const Walk& w) {
    require(w.start < g.vertex_count(), "walk start vertex out of range");
    Vertex at = w.start;
    for (auto a : w.arcs) {
        require(a < g.arcs().size(), "walk arc index out of range");
        require(g.arc(a).source == at, "walk arcs do not chain");
        at = g.arc(a).target;
    }
}

Vertex end_vertex(const KGraph& g, const Walk& w) {
    return w.arcs.empty() ? w.start : g.arc(w.arcs.back()).target;
}

std::vector<Vertex> vertices_along(const KGraph& g, const Walk& w) {
    std::vector<Vertex> vs{w.start};
    vs.reserve(w.arcs.size() + 1);
    for (auto a : w.arcs) vs.push_back(g.arc(a).target);
    return vs;
}

namespace {

// Images of the start vertex's points, in the start vertex's order.
std::vector<std::uint32_t> track(const KGraph& g, Vertex start, std::span<const std::uint32_t> arcs) {
    std::vector<std::uint32_t> cur = g.vertex(start);
    for (auto a : arcs) {
        const Transformation& f = g.basis()[g.arc(a).letter];
        for (auto& x : cur) x = f(x);
    }
    return cur;
}

}  // namespace

PartialBijection eval_walk(const KGraph& g, const Walk& w) {
    validate(g, w);
    return PartialBijection(g.vertex(w.start), track(g, w.start, w.arcs));
}

Walk walk_from_letters(const KGraph& g, Vertex start, std::span<const std::uint32_t> letters) {
    require(start < g.vertex_count(), "start vertex out of range");
    Walk w{start, {}};
    Vertex at = start;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        require(letters[i] < g.basis().size(), "letter out of range");
        const long a = g.arc_for(at, letters[i]);
        require(a >= 0, "letter " + std::to_string(letters[i]) + " at step " + std::to_string(i) +
                            " is not injective on {" + format_list(g.vertex(at)) + "}");
        w.arcs.push_back(std::uint32_t(a));
        at = g.arc(std::size_t(a)).target;
    }
    return w;
}

std::vector<std::uint32_t> letters_of(const KGraph& g, const Walk& w) {
    std::vector<std::uint32_t> out;
    for (auto a : w.arcs) out.push_back(g.arc(a).letter);
    return out;
}

Walk repeat(const KGraph& g, const Walk& closed, std::size_t times) {
    require(end_vertex(g, closed) == closed.start, "only closed walks can be repeated");
    Walk w{closed.start, {}};
    for (std::size_t i = 0; i < times; ++i) w.arcs.insert(w.arcs.end(), closed.arcs.begin(), closed.arcs.end());
    return w;
}

Walk shortest_path(const KGraph& g, Vertex from, Vertex to) {
    require(from < g.vertex_count() && to < g.vertex_count(), "vertex out of range");
    constexpr std::uint32_t kNone = ~0u;
    std::vector<std::uint32_t> via(g.vertex_count(), kNone);
    std::vector<bool> seen(g.vertex_count());
    std::deque<Vertex> queue{from};
    seen[from] = true;
    while (!queue.empty() && !seen[to]) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (auto a : g.out_arcs(v)) {
            const Vertex t = g.arc(a).target;
            if (seen[t]) continue;
            seen[t] = true;
            via[t] = a;
            queue.push_back(t);
        }
    }
    require(seen[to], "no path between the given vertices");
    Walk w{from, {}};
    for (Vertex v = to; v != from; v = g.arc(via[v]).source) w.arcs.push_back(via[v]);
    std::reverse(w.arcs.begin(), w.arcs.end());
    return w;
}

namespace {

// Shortest paths into and out of one pivot, ties broken by smallest letter.
class PivotPaths {
public:
    PivotPaths(const KGraph& g, Vertex pivot) : g_(g), pivot_(pivot) {
        const std::size_t nv = g.vertex_count();
        constexpr std::uint32_t kFar = ~0u;
        dist_to_.assign(nv, kFar);
        dist_to_[pivot] = 0;
        std::deque<Vertex> queue{pivot};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (auto a : g.in_arcs(v)) {
                const Vertex s = g.arc(a).source;
                if (dist_to_[s] != kFar) continue;
                dist_to_[s] = dist_to_[v] + 1;
                queue.push_back(s);
            }
        }
        next_to_.assign(nv, kFar);
        for (Vertex v = 0; v < nv; ++v) {
            if (v == pivot || dist_to_[v] == kFar) continue;
            for (auto a : g.out_arcs(v))
                if (dist_to_[g.arc(a).target] + 1 == dist_to_[v]) {
                    next_to_[v] = a;
                    break;
                }
        }
        from_ = shortest_tree(pivot);
    }

    void append_to_pivot(Vertex v, std::vector<std::uint32_t>& arcs) const {
        while (v != pivot_) {
            arcs.push_back(next_to_[v]);
            v = g_.arc(next_to_[v]).target;
        }
    }

    void append_from_pivot(Vertex v, std::vector<std::uint32_t>& arcs) const {
        const std::size_t at = arcs.size();
        for (Vertex u = v; u != pivot_; u = g_.arc(from_[u]).source) arcs.push_back(from_[u]);
        std::reverse(arcs.begin() + std::ptrdiff_t(at), arcs.end());
    }

private:
    std::vector<std::uint32_t> shortest_tree(Vertex root) const {
        std::vector<std::uint32_t> via(g_.vertex_count(), ~0u);
        std::vector<bool> seen(g_.vertex_count());
        std::deque<Vertex> queue{root};
        seen[root] = true;
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (auto a : g_.out_arcs(v)) {
                const Vertex t = g_.arc(a).target;
                if (seen[t]) continue;
                seen[t] = true;
                via[t] = a;
                queue.push_back(t);
            }
        }
        return via;
    }

    const KGraph& g_;
    Vertex pivot_;
    std::vector<std::uint32_t> dist_to_, next_to_, from_;
};

// Permutation of a vertex's positions induced by a closed walk at that vertex.
std::vector<std::uint32_t> positions_after(const KGraph& g, Vertex v, std::span<const std::uint32_t> arcs) {
    const Subset& d = g.vertex(v);
    const auto images = track(g, v, arcs);
    std::vector<std::uint32_t> pos(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        pos[i] = std::uint32_t(std::lower_bound(d.begin(), d.end(), images[i]) - d.begin());
    return pos;
}

std::uint64_t perm_order(const std::vector<std::uint32_t>& p) {
    std::vector<bool> seen(p.size());
    std::uint64_t l = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        l = std::lcm(l, len);
    }
    return l;
}

Walk saturate_with(const KGraph& g, const Walk& w, const PivotPaths& paths) {
    const auto verts = vertices_along(g, w);
    Walk out{w.start, {}};
    std::vector<std::uint32_t> round;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        round.clear();
        paths.append_to_pivot(verts[i], round);
        paths.append_from_pivot(verts[i], round);
        const std::uint64_t m = round.empty() ? 0 : perm_order(positions_after(g, verts[i], round));
        for (std::uint64_t r = 0; r < m; ++r) out.arcs.insert(out.arcs.end(), round.begin(), round.end());
        if (i < w.arcs.size()) out.arcs.push_back(w.arcs[i]);
    }
    return out;
}

// Shortest sequence of generator indices whose product (apply left to right) is
// `target`, searching the group the generators span. Empty when target is the identity.
std::vector<std::size_t> shortest_product(const std::vector<std::vector<std::uint32_t>>& gens,
                                          const std::vector<std::uint32_t>& target) {
    std::vector<std::uint32_t> id(target.size());
    std::iota(id.begin(), id.end(), 0u);
    if (target == id) return {};
    using Perm = std::vector<std::uint32_t>;
    struct Node {
        std::size_t parent;
        std::size_t gen;
    };
    std::unordered_map<Perm, std::size_t, detail::VectorHash> seen;
    std::vector<Perm> perms;
    std::vector<Node> nodes;
    constexpr std::size_t kRoot = ~std::size_t{0};
    auto unwind = [&](std::size_t at) {
        std::vector<std::size_t> seq;
        for (; at != kRoot; at = nodes[at].parent) seq.push_back(nodes[at].gen);
        std::reverse(seq.begin(), seq.end());
        return seq;
    };
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!seen.emplace(gens[i], perms.size()).second) continue;
        perms.push_back(gens[i]);
        nodes.push_back({kRoot, i});
        if (gens[i] == target) return unwind(perms.size() - 1);
    }
    Perm next(target.size());
    for (std::size_t at = 0; at < perms.size(); ++at) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t x = 0; x < next.size(); ++x) next[x] = gens[i][perms[at][x]];
            if (seen.contains(next)) continue;
            seen.emplace(next, perms.size());
            perms.push_back(next);
            nodes.push_back({at, i});
            if (next == target) return unwind(perms.size() - 1);
        }
    }
    throw std::logic_error("product of closed pieces not generated by the pieces");
}

}  // namespace

Walk saturate(const KGraph& g, const Walk& w, Vertex pivot) {
    validate(g, w);
    require(pivot < g.vertex_count(), "pivot vertex out of range");
    const Components comps = scc(g);
    for (Vertex v : vertices_along(g, w))
        require(comps.component_of[v] == comps.component_of[pivot],
                "walk leaves the pivot's strongly connected component");
    return saturate_with(g, w, PivotPaths(g, pivot));
}

Compression compress_walk(const KGraph& g, const Walk& w) {
    validate(g, w);
    require(g.k() <= 8, "walk compression supports k <= 8");
    const Components comps = scc(g);
    const auto verts = vertices_along(g, w);

    Compression out;
    out.walk.start = w.start;
    std::size_t s = 0;
    while (s < verts.size()) {
        std::size_t e = s;
        const std::uint32_t c = comps.component_of[verts[s]];
        while (e + 1 < verts.size() && comps.component_of[verts[e + 1]] == c) ++e;

        const Walk segment{verts[s], std::vector<std::uint32_t>(w.arcs.begin() + std::ptrdiff_t(s),
                                                                w.arcs.begin() + std::ptrdiff_t(e))};
        ComponentReport rep;
        rep.component = c;
        rep.vertices = comps.members[c].size();
        rep.pivot = comps.members[c].front();
        rep.original_length = segment.length();

        std::vector<std::uint32_t> chosen = segment.arcs;
        if (!segment.arcs.empty()) {
            const Walk sat = saturate_with(g, segment, PivotPaths(g, rep.pivot));
            const auto sv = vertices_along(g, sat);
            std::vector<std::size_t> hits;
            for (std::size_t i = 0; i < sv.size(); ++i)
                if (sv[i] == rep.pivot) hits.push_back(i);

            std::vector<std::vector<std::uint32_t>> piece_perms;
            for (std::size_t h = 0; h + 1 < hits.size(); ++h)
                piece_perms.push_back(positions_after(
                    g, rep.pivot, std::span(sat.arcs).subspan(hits[h], hits[h + 1] - hits[h])));
            const auto total = positions_after(
                g, rep.pivot, std::span(sat.arcs).subspan(hits.front(), hits.back() - hits.front()));
            const auto factors = shortest_product(piece_perms, total);

            std::vector<std::uint32_t> rebuilt(sat.arcs.begin(), sat.arcs.begin() + std::ptrdiff_t(hits.front()));
            for (auto f : factors)
                rebuilt.insert(rebuilt.end(), sat.arcs.begin() + std::ptrdiff_t(hits[f]),
                               sat.arcs.begin() + std::ptrdiff_t(hits[f + 1]));
            rebuilt.insert(rebuilt.end(), sat.arcs.begin() + std::ptrdiff_t(hits.back()), sat.arcs.end());

            rep.pieces = piece_perms.size();
            rep.factor_length = factors.size();
            if (rebuilt.size() < chosen.size()) chosen = std::move(rebuilt);
        }
        rep.length = chosen.size();
        rep.bound = 2 * (rep.vertices - 1) + (2 * rep.vertices - 1) * rep.factor_length;
        out.walk.arcs.insert(out.walk.arcs.end(), chosen.begin(), chosen.end());
        out.components.push_back(rep);

        if (e < w.arcs.size()) {
            out.walk.arcs.push_back(w.arcs[e]);
            ++out.bridges;
        }
        s = e + 1;
    }
    return out;
}

Walk random_walk(const KGraph& g, Vertex start, std::size_t length, std::uint64_t seed) {
    require(start < g.vertex_count(), "start vertex out of range");
    std::mt19937_64 rng(seed);
    Walk w{start, {}};
    Vertex at = start;
    for (std::size_t i = 0; i < length; ++i) {
        const auto outs = g.out_arcs(at);
        if (outs.empty()) break;
        const auto a = outs[std::uniform_int_distribution<std::size_t>(0, outs.size() - 1)(rng)];
        w.arcs.push_back(a);
        at = g.arc(a).target;
    }
    return w;
}

}  // namespace pdskit::kgraph
