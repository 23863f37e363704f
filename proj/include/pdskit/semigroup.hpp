#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pdskit/common.hpp"
#include "pdskit/detail/hash.hpp"

namespace pdskit::semigroup {

/// A self-map of {0, ..., n-1}, stored as its image array.
class Transformation {
public:
    Transformation() = default;
    explicit Transformation(std::vector<std::uint32_t> images);

    static Transformation identity(std::uint32_t n);
    static Transformation constant(std::uint32_t n, std::uint32_t value);

    std::uint32_t ground() const noexcept { return std::uint32_t(map_.size()); }
    std::uint32_t operator()(std::uint32_t x) const noexcept { return map_[x]; }
    const std::vector<std::uint32_t>& images() const noexcept { return map_; }

    bool is_bijection() const;
    bool is_identity() const;
    /// True when distinct points of `points` keep distinct images.
    bool injective_on(std::span<const std::uint32_t> points) const;

    std::string to_string() const { return format_list(map_); }

    friend bool operator==(const Transformation&, const Transformation&) = default;
    friend auto operator<=>(const Transformation&, const Transformation&) = default;

private:
    std::vector<std::uint32_t> map_;
};

struct TransformationHash {
    std::size_t operator()(const Transformation& t) const noexcept {
        return detail::VectorHash{}(t.images());
    }
};

/// Left composition: (f g)(x) = g(f(x)), i.e. apply f first.
Transformation compose(const Transformation& f, const Transformation& g);

/// Order of a permutation: lcm of its cycle lengths. Throws for non-bijections.
std::uint64_t order(const Transformation& perm);

/// A bijection between two equal-size subsets of {0, ..., n-1}: domain[i] -> images[i].
/// Held with the domain ascending.
class PartialBijection {
public:
    PartialBijection() = default;
    PartialBijection(std::vector<std::uint32_t> domain, std::vector<std::uint32_t> images);

    static PartialBijection identity(std::vector<std::uint32_t> domain);
    static PartialBijection restrict(const Transformation& f, std::span<const std::uint32_t> domain);

    const std::vector<std::uint32_t>& domain() const noexcept { return domain_; }
    const std::vector<std::uint32_t>& images() const noexcept { return images_; }
    std::vector<std::uint32_t> image_set() const;
    std::size_t size() const noexcept { return domain_.size(); }

    /// Image of a domain point. Throws InputError outside the domain.
    std::uint32_t operator()(std::uint32_t x) const;

    /// Domain equals image set.
    bool is_permutation() const;
    bool is_identity() const;
    /// Order as a permutation of its domain. Throws unless is_permutation().
    std::uint64_t order() const;

    std::string to_string() const;

    friend bool operator==(const PartialBijection&, const PartialBijection&) = default;

private:
    std::vector<std::uint32_t> domain_, images_;
};

/// Apply f then g; requires f's image set to equal g's domain.
PartialBijection compose(const PartialBijection& f, const PartialBijection& g);

struct ClosureResult {
    std::vector<Transformation> elements;  // breadth-first discovery order
    std::vector<std::uint32_t> levels;     // shortest product length of each element
    std::unordered_map<Transformation, std::uint32_t, TransformationHash> index;

    std::size_t size() const noexcept { return elements.size(); }
    std::optional<std::uint32_t> level_of(const Transformation& f) const;
    std::uint32_t max_level() const;
};

inline constexpr std::uint64_t kDefaultClosureCap = 1ull << 24;

/// All products of basis elements with their shortest lengths, by right
/// multiplication breadth-first search. Throws CapExceeded past `cap` elements.
ClosureResult closure(std::span<const Transformation> basis, std::uint64_t cap = kDefaultClosureCap);

/// Shortest product length of f over basis, nullopt if f is not in the closure.
std::optional<std::uint64_t> complexity(std::span<const Transformation> basis, const Transformation& f,
                                        std::uint64_t cap = kDefaultClosureCap);

/// Least complexity of a closure element whose restriction to f's domain is f.
/// Searches over injective image tuples of the domain (the k-graph walk view).
std::optional<std::uint64_t> restriction_complexity(std::span<const Transformation> basis,
                                                    const PartialBijection& f,
                                                    std::uint64_t cap = kDefaultClosureCap);

struct WorstCaseOptions {
    std::uint64_t cap_bases = 1ull << 20;
    std::uint64_t cap_closure = kDefaultClosureCap;
    /// Skip bases that some relabelling of the ground set maps to an earlier
    /// basis. Sound because complexity is invariant under relabelling.
    bool canonical = false;
    unsigned jobs = 1;
};

struct WorstCase {
    std::uint64_t value = 0;
    std::vector<std::size_t> basis;  // indices into the candidate set
    Transformation witness;
    std::uint64_t bases_examined = 0;
};

/// max over non-empty bases B of `set` and f in <B> of the complexity of f over B.
/// The witness is the first attaining basis in subset-mask order and the first
/// attaining element in breadth-first order.
WorstCase worst_case_complexity(std::span<const Transformation> set, const WorstCaseOptions& opts = {});

/// max over the closure of the generators (all bijections) of their complexity.
std::uint64_t directed_diameter(std::span<const Transformation> generators,
                                std::uint64_t cap = kDefaultClosureCap);

/// max over generating subsets B of the group G of directed_diameter(B).
/// G must be a set of permutations closed under composition.
std::uint64_t group_worst_diameter(std::span<const Transformation> group,
                                   std::uint64_t cap_bases = 1ull << 20);

/// Every subgroup of the symmetric group on n points, as sorted element lists.
/// Enumerates all subsets of S_n, so only n <= 3 is accepted.
std::vector<std::vector<Transformation>> subgroups_of_symmetric(std::uint32_t n);

/// T_n and S_n in lexicographic order of image arrays.
std::vector<Transformation> full_transformation_semigroup(std::uint32_t n);
std::vector<Transformation> symmetric_group(std::uint32_t n);

/// "1,0;0,0" -> two maps on ground 2. Every map must have exactly `ground` entries.
std::vector<Transformation> parse_maps(std::uint32_t ground, std::string_view text);

}  // namespace pdskit::semigroup
