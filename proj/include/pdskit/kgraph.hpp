#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pdskit/semigroup.hpp"

namespace pdskit::kgraph {

using semigroup::PartialBijection;
using semigroup::Transformation;
using Vertex = std::uint32_t;
using Subset = std::vector<std::uint32_t>;

struct Arc {
    Vertex source;
    Vertex target;
    std::uint32_t letter;   // index of the originating basis map
    PartialBijection map;   // that map restricted to the source subset
};

/// Directed multigraph on the k-subsets of {0..n-1}: one arc per (vertex, basis map)
/// where the map is injective on the vertex. Vertices are numbered in lexicographic
/// order; arcs are sorted by source, then letter. Immutable once built.
class KGraph {
public:
    KGraph(std::vector<Transformation> basis, std::uint32_t k, std::uint64_t cap = 1u << 20);

    std::uint32_t ground() const noexcept { return n_; }
    std::uint32_t k() const noexcept { return k_; }
    const std::vector<Transformation>& basis() const noexcept { return basis_; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const Subset& vertex(Vertex v) const { return vertices_.at(v); }
    /// Throws InputError when `s` is not a sorted k-subset of the ground set.
    Vertex vertex_of(std::span<const std::uint32_t> s) const;

    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    const Arc& arc(std::size_t i) const { return arcs_.at(i); }
    /// Arc indices leaving v, ascending by letter.
    std::span<const std::uint32_t> out_arcs(Vertex v) const;
    std::span<const std::uint32_t> in_arcs(Vertex v) const;
    /// Arc leaving v under `letter`, or -1 when that map is not injective on v.
    long arc_for(Vertex v, std::uint32_t letter) const;

    std::string to_dot() const;

private:
    std::uint32_t n_, k_;
    std::vector<Transformation> basis_;
    std::vector<Subset> vertices_;
    std::vector<Arc> arcs_;
    std::vector<std::uint32_t> out_begin_, out_list_, in_begin_, in_list_;
};

struct Components {
    std::vector<std::vector<Vertex>> members;  // each ascending; ordered by smallest member
    std::vector<std::uint32_t> component_of;   // per vertex
};

/// Strongly connected components (iterative Tarjan).
Components scc(const KGraph& g);

struct Walk {
    Vertex start = 0;
    std::vector<std::uint32_t> arcs;  // arc indices into the graph

    std::size_t length() const noexcept { return arcs.size(); }
    friend bool operator==(const Walk&, const Walk&) = default;
};

/// Checks that consecutive arcs chain; throws InputError otherwise.
void validate(const KGraph& g, const Walk& w);
Vertex end_vertex(const KGraph& g, const Walk& w);
std::vector<Vertex> vertices_along(const KGraph& g, const Walk& w);

/// Composition of the arc maps; the identity on the start vertex for an empty walk.
PartialBijection eval_walk(const KGraph& g, const Walk& w);

/// Follows basis letters from a start vertex; throws when a letter is not injective there.
Walk walk_from_letters(const KGraph& g, Vertex start, std::span<const std::uint32_t> letters);
std::vector<std::uint32_t> letters_of(const KGraph& g, const Walk& w);

/// Walk concatenation helpers.
Walk repeat(const KGraph& g, const Walk& closed, std::size_t times);

/// Shortest path from `from` to `to` (BFS, ties broken by letter); throws if unreachable.
Walk shortest_path(const KGraph& g, Vertex from, Vertex to);

/// Equivalent walk that detours to `pivot` around every vertex: at each visited
/// vertex it inserts the round trip (path to pivot, path back) raised to the order
/// of the permutation that round trip induces. Every vertex of w must share
/// the pivot's strongly connected component.
Walk saturate(const KGraph& g, const Walk& w, Vertex pivot);

struct ComponentReport {
    std::uint32_t component = 0;     // index into scc(g).members
    std::size_t vertices = 0;        // |V_c|
    Vertex pivot = 0;
    std::size_t original_length = 0; // arcs of the input inside this component
    std::size_t pieces = 0;          // closed pivot-to-pivot pieces after saturation
    std::size_t factor_length = 0;   // r: factors in the shortest product found
    std::size_t length = 0;          // arcs of the output inside this component
    std::size_t bound = 0;           // 2(|V_c|-1) + (2|V_c|-1) r
};

struct Compression {
    Walk walk;
    std::vector<ComponentReport> components;
    std::size_t bridges = 0;
};

/// Equivalent walk of bounded length. The input is cut into maximal segments
/// inside one strongly connected component joined by bridging arcs. Each segment
/// is saturated at its component's smallest vertex, cut at the pivot into
/// prefix, closed pieces and suffix, and the product of the pieces' permutations
/// is re-expressed by a shortest product over those permutations. A segment is
/// kept as is when that is shorter.
Compression compress_walk(const KGraph& g, const Walk& w);

/// Random walk of up to `length` arcs; stops early at a vertex without out-arcs.
Walk random_walk(const KGraph& g, Vertex start, std::size_t length, std::uint64_t seed);

}  // namespace pdskit::kgraph
