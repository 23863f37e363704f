#include "pdskit/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <thread>
#include <unordered_set>

namespace pdskit::semigroup {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InputError(msg);
}

std::uint32_t common_ground(std::span<const Transformation> maps) {
    require(!maps.empty(), "basis must be non-empty");
    const std::uint32_t n = maps.front().ground();
    for (const auto& f : maps) require(f.ground() == n, "maps must share a ground size");
    return n;
}

}  // namespace

Transformation::Transformation(std::vector<std::uint32_t> images) : map_(std::move(images)) {
    for (auto y : map_) require(y < map_.size(), "transformation image out of range");
}

Transformation Transformation::identity(std::uint32_t n) {
    std::vector<std::uint32_t> m(n);
    std::iota(m.begin(), m.end(), 0u);
    return Transformation(std::move(m));
}

Transformation Transformation::constant(std::uint32_t n, std::uint32_t value) {
    require(value < n, "constant value out of range");
    return Transformation(std::vector<std::uint32_t>(n, value));
}

bool Transformation::is_bijection() const {
    std::vector<bool> hit(map_.size());
    for (auto y : map_) {
        if (hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

bool Transformation::is_identity() const {
    for (std::size_t i = 0; i < map_.size(); ++i)
        if (map_[i] != i) return false;
    return true;
}

bool Transformation::injective_on(std::span<const std::uint32_t> points) const {
    std::vector<bool> hit(map_.size());
    for (auto p : points) {
        const auto y = map_[p];
        if (hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

Transformation compose(const Transformation& f, const Transformation& g) {
    require(f.ground() == g.ground(), "compose: ground sizes differ");
    std::vector<std::uint32_t> m(f.ground());
    for (std::uint32_t x = 0; x < f.ground(); ++x) m[x] = g(f(x));
    return Transformation(std::move(m));
}

namespace {

std::uint64_t cycle_lcm(const std::vector<std::uint32_t>& perm_on_positions) {
    std::vector<bool> seen(perm_on_positions.size());
    std::uint64_t l = 1;
    for (std::size_t i = 0; i < perm_on_positions.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm_on_positions[j]) {
            seen[j] = true;
            ++len;
        }
        l = std::lcm(l, len);
    }
    return l;
}

}  // namespace

std::uint64_t order(const Transformation& perm) {
    require(perm.is_bijection(), "order is defined for permutations only");
    return cycle_lcm(perm.images());
}

PartialBijection::PartialBijection(std::vector<std::uint32_t> domain, std::vector<std::uint32_t> images) {
    require(domain.size() == images.size(), "partial bijection: domain and images differ in size");
    std::vector<std::size_t> idx(domain.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return domain[a] < domain[b]; });
    for (auto i : idx) {
        domain_.push_back(domain[i]);
        images_.push_back(images[i]);
    }
    require(std::adjacent_find(domain_.begin(), domain_.end()) == domain_.end(),
            "partial bijection: repeated domain point");
    auto im = images_;
    std::sort(im.begin(), im.end());
    require(std::adjacent_find(im.begin(), im.end()) == im.end(), "partial bijection is not injective");
}

PartialBijection PartialBijection::identity(std::vector<std::uint32_t> domain) {
    auto images = domain;
    return PartialBijection(std::move(domain), std::move(images));
}

PartialBijection PartialBijection::restrict(const Transformation& f, std::span<const std::uint32_t> domain) {
    std::vector<std::uint32_t> d(domain.begin(), domain.end()), im;
    for (auto x : d) {
        require(x < f.ground(), "restriction domain point out of range");
        im.push_back(f(x));
    }
    return PartialBijection(std::move(d), std::move(im));
}

std::vector<std::uint32_t> PartialBijection::image_set() const {
    auto s = images_;
    std::sort(s.begin(), s.end());
    return s;
}

std::uint32_t PartialBijection::operator()(std::uint32_t x) const {
    auto it = std::lower_bound(domain_.begin(), domain_.end(), x);
    require(it != domain_.end() && *it == x, "point outside the partial bijection's domain");
    return images_[std::size_t(it - domain_.begin())];
}

bool PartialBijection::is_permutation() const { return image_set() == domain_; }

bool PartialBijection::is_identity() const { return images_ == domain_; }

std::uint64_t PartialBijection::order() const {
    require(is_permutation(), "order needs a permutation of the domain");
    std::vector<std::uint32_t> pos(domain_.size());
    for (std::size_t i = 0; i < domain_.size(); ++i)
        pos[i] = std::uint32_t(std::lower_bound(domain_.begin(), domain_.end(), images_[i]) - domain_.begin());
    return cycle_lcm(pos);
}

std::string PartialBijection::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < domain_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(domain_[i]) + "->" + std::to_string(images_[i]);
    }
    return '{' + s + '}';
}

PartialBijection compose(const PartialBijection& f, const PartialBijection& g) {
    require(f.image_set() == g.domain(), "compose: image of the first map must be the second's domain");
    std::vector<std::uint32_t> im;
    im.reserve(f.size());
    for (auto y : f.images()) im.push_back(g(y));
    return PartialBijection(f.domain(), std::move(im));
}

std::optional<std::uint32_t> ClosureResult::level_of(const Transformation& f) const {
    auto it = index.find(f);
    if (it == index.end()) return std::nullopt;
    return levels[it->second];
}

std::uint32_t ClosureResult::max_level() const {
    return levels.empty() ? 0 : *std::max_element(levels.begin(), levels.end());
}

namespace {

// Breadth-first closure. Stops early once `target` is discovered.
ClosureResult closure_until(std::span<const Transformation> basis, std::uint64_t cap,
                            const Transformation* target) {
    common_ground(basis);
    ClosureResult r;
    auto add = [&](Transformation t, std::uint32_t level) {
        if (r.index.contains(t)) return false;
        if (r.elements.size() >= cap)
            throw CapExceeded("closure exceeds cap of " + std::to_string(cap) + " elements");
        r.index.emplace(t, std::uint32_t(r.elements.size()));
        r.elements.push_back(std::move(t));
        r.levels.push_back(level);
        return true;
    };
    for (const auto& b : basis) {
        add(b, 1);
        if (target && b == *target) return r;
    }
    for (std::size_t i = 0; i < r.elements.size(); ++i) {
        for (const auto& b : basis) {
            Transformation t = compose(r.elements[i], b);
            const bool hit = target && t == *target;
            if (add(std::move(t), r.levels[i] + 1) && hit) return r;
        }
    }
    return r;
}

}  // namespace

ClosureResult closure(std::span<const Transformation> basis, std::uint64_t cap) {
    return closure_until(basis, cap, nullptr);
}

std::optional<std::uint64_t> complexity(std::span<const Transformation> basis, const Transformation& f,
                                        std::uint64_t cap) {
    require(common_ground(basis) == f.ground(), "target ground differs from basis ground");
    const ClosureResult r = closure_until(basis, cap, &f);
    if (auto l = r.level_of(f)) return *l;
    return std::nullopt;
}

std::optional<std::uint64_t> restriction_complexity(std::span<const Transformation> basis,
                                                    const PartialBijection& f, std::uint64_t cap) {
    const std::uint32_t n = common_ground(basis);
    for (auto x : f.domain()) require(x < n, "domain point out of range");
    for (auto y : f.images()) require(y < n, "image point out of range");
    using Tuple = std::vector<std::uint32_t>;
    const Tuple& target = f.images();
    std::unordered_map<Tuple, std::uint64_t, detail::VectorHash> level;
    std::deque<Tuple> queue;
    auto apply = [&](const Tuple& t, const Transformation& g, Tuple& out) {
        out.resize(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) out[i] = g(t[i]);
        return g.injective_on(t);
    };
    Tuple next;
    for (const auto& g : basis) {
        if (!apply(f.domain(), g, next)) continue;
        if (next == target) return 1;
        if (level.emplace(next, 1).second) queue.push_back(next);
    }
    while (!queue.empty()) {
        Tuple t = std::move(queue.front());
        queue.pop_front();
        const std::uint64_t l = level.at(t);
        for (const auto& g : basis) {
            if (!apply(t, g, next)) continue;
            if (next == target) return l + 1;
            if (level.contains(next)) continue;
            if (level.size() >= cap)
                throw CapExceeded("restriction search exceeds cap of " + std::to_string(cap) + " tuples");
            level.emplace(next, l + 1);
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

std::vector<Transformation> full_transformation_semigroup(std::uint32_t n) {
    require(n >= 1 && n <= 8, "T_n enumeration supports 1 <= n <= 8");
    std::vector<Transformation> all;
    std::vector<std::uint32_t> m(n, 0);
    for (;;) {
        all.emplace_back(m);
        int i = int(n) - 1;
        while (i >= 0 && m[i] == n - 1) m[i--] = 0;
        if (i < 0) break;
        ++m[i];
    }
    return all;
}

std::vector<Transformation> symmetric_group(std::uint32_t n) {
    require(n >= 1 && n <= 10, "S_n enumeration supports 1 <= n <= 10");
    std::vector<Transformation> all;
    std::vector<std::uint32_t> m(n);
    std::iota(m.begin(), m.end(), 0u);
    do all.emplace_back(m);
    while (std::next_permutation(m.begin(), m.end()));
    return all;
}

namespace {

struct BasisBest {
    std::uint64_t value = 0;
    std::uint64_t mask = 0;
    Transformation witness;
    std::uint64_t examined = 0;
};

// For each relabelling sigma of the ground set, where each set element goes
// (or -1 when its conjugate is not in the set).
std::vector<std::vector<long>> conjugation_tables(std::span<const Transformation> set) {
    const std::uint32_t n = set.front().ground();
    std::unordered_map<Transformation, long, TransformationHash> where;
    for (std::size_t i = 0; i < set.size(); ++i) where.emplace(set[i], long(i));
    std::vector<std::vector<long>> tables;
    for (const auto& sigma : symmetric_group(n)) {
        if (sigma.is_identity()) continue;
        std::vector<long> t(set.size());
        for (std::size_t i = 0; i < set.size(); ++i) {
            std::vector<std::uint32_t> m(n);
            for (std::uint32_t x = 0; x < n; ++x) m[sigma(x)] = sigma(set[i](x));
            auto it = where.find(Transformation(std::move(m)));
            t[i] = it == where.end() ? -1 : it->second;
        }
        tables.push_back(std::move(t));
    }
    return tables;
}

bool is_canonical(std::uint64_t mask, const std::vector<std::vector<long>>& tables) {
    for (const auto& t : tables) {
        std::uint64_t image = 0;
        bool ok = true;
        for (std::size_t i = 0; i < t.size() && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            if (t[i] < 0) ok = false;
            else image |= 1ull << t[i];
        }
        if (ok && image < mask) return false;
    }
    return true;
}

}  // namespace

WorstCase worst_case_complexity(std::span<const Transformation> set, const WorstCaseOptions& opts) {
    common_ground(set);
    require(set.size() < 63, "candidate set too large for subset enumeration");
    const std::uint64_t bases = (1ull << set.size()) - 1;
    if (bases > opts.cap_bases)
        throw CapExceeded("enumerating " + std::to_string(bases) + " bases exceeds cap " +
                          std::to_string(opts.cap_bases));
    std::vector<std::vector<long>> tables;
    if (opts.canonical && set.front().ground() <= 8) tables = conjugation_tables(set);

    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, unsigned(std::min<std::uint64_t>(bases, 64))));
    std::vector<BasisBest> partial(jobs);
    auto work = [&](unsigned j) {
        const std::uint64_t lo = 1 + bases * j / jobs, hi = 1 + bases * (j + 1) / jobs;
        BasisBest& best = partial[j];
        std::vector<Transformation> basis;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            if (!tables.empty() && !is_canonical(mask, tables)) continue;
            basis.clear();
            for (std::size_t i = 0; i < set.size(); ++i)
                if (mask >> i & 1) basis.push_back(set[i]);
            const ClosureResult c = closure(basis, opts.cap_closure);
            ++best.examined;
            const std::uint32_t top = c.max_level();
            if (top > best.value) {
                const auto at = std::find(c.levels.begin(), c.levels.end(), top) - c.levels.begin();
                best.value = top;
                best.mask = mask;
                best.witness = c.elements[std::size_t(at)];
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

    WorstCase out;
    const BasisBest* best = nullptr;
    for (const auto& p : partial) {
        out.bases_examined += p.examined;
        if (p.value > 0 && (!best || p.value > best->value)) best = &p;
    }
    if (best) {
        out.value = best->value;
        out.witness = best->witness;
        for (std::size_t i = 0; i < set.size(); ++i)
            if (best->mask >> i & 1) out.basis.push_back(i);
    }
    return out;
}

std::uint64_t directed_diameter(std::span<const Transformation> generators, std::uint64_t cap) {
    common_ground(generators);
    for (const auto& g : generators) require(g.is_bijection(), "generators must be permutations");
    return closure(generators, cap).max_level();
}

std::uint64_t group_worst_diameter(std::span<const Transformation> group, std::uint64_t cap_bases) {
    common_ground(group);
    for (const auto& g : group) require(g.is_bijection(), "group elements must be permutations");
    std::unordered_set<Transformation, TransformationHash> members(group.begin(), group.end());
    require(members.size() == group.size(), "group elements must be distinct");
    for (const auto& f : group)
        for (const auto& g : group)
            require(members.contains(compose(f, g)), "element set is not closed under composition");
    require(group.size() < 63, "group too large for subset enumeration");
    const std::uint64_t bases = (1ull << group.size()) - 1;
    if (bases > cap_bases)
        throw CapExceeded("enumerating " + std::to_string(bases) + " generating sets exceeds cap " +
                          std::to_string(cap_bases));
    std::uint64_t best = 0;
    std::vector<Transformation> basis;
    for (std::uint64_t mask = 1; mask <= bases; ++mask) {
        basis.clear();
        for (std::size_t i = 0; i < group.size(); ++i)
            if (mask >> i & 1) basis.push_back(group[i]);
        const ClosureResult c = closure(basis);
        if (c.size() != group.size()) continue;
        best = std::max<std::uint64_t>(best, c.max_level());
    }
    return best;
}

std::vector<std::vector<Transformation>> subgroups_of_symmetric(std::uint32_t n) {
    require(n >= 1 && n <= 3, "subgroup enumeration supports n <= 3");
    const auto sn = symmetric_group(n);
    std::vector<std::vector<Transformation>> groups;
    for (std::uint64_t mask = 1; mask < (1ull << sn.size()); ++mask) {
        std::vector<Transformation> gens;
        for (std::size_t i = 0; i < sn.size(); ++i)
            if (mask >> i & 1) gens.push_back(sn[i]);
        auto elems = closure(gens).elements;
        std::sort(elems.begin(), elems.end());
        if (std::find(groups.begin(), groups.end(), elems) == groups.end()) groups.push_back(std::move(elems));
    }
    std::sort(groups.begin(), groups.end());
    return groups;
}

std::vector<Transformation> parse_maps(std::uint32_t ground, std::string_view text) {
    require(ground >= 1, "ground size must be positive");
    std::vector<Transformation> maps;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto semi = text.find(';', start);
        std::string_view part = text.substr(start, semi == std::string_view::npos ? text.npos : semi - start);
        std::vector<std::uint32_t> images;
        std::size_t p = 0;
        while (p <= part.size()) {
            auto comma = part.find(',', p);
            std::string_view tok = part.substr(p, comma == std::string_view::npos ? part.npos : comma - p);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            std::uint32_t v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            require(!tok.empty() && ec == std::errc{} && ptr == tok.data() + tok.size(),
                    "bad map entry '" + std::string(tok) + "'");
            require(v < ground, "map entry " + std::to_string(v) + " out of range");
            images.push_back(v);
            if (comma == std::string_view::npos) break;
            p = comma + 1;
        }
        require(images.size() == ground, "map " + std::to_string(maps.size()) + " has " +
                                             std::to_string(images.size()) + " entries, expected " +
                                             std::to_string(ground));
        maps.emplace_back(std::move(images));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return maps;
}

}  // namespace pdskit::semigroup
