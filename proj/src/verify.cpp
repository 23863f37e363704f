#include "pdskit/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "pdskit/bounds.hpp"
#include "pdskit/extremal.hpp"
#include "pdskit/kgraph.hpp"
#include "pdskit/landau.hpp"
#include "pdskit/oracle.hpp"
#include "pdskit/pds.hpp"
#include "pdskit/semigroup.hpp"
#include "pdskit/sync.hpp"

namespace pdskit::verify {

using automata::MealyAutomaton;
using automata::PartialSemiautomaton;
using semigroup::Transformation;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (ok) detail.str("");
        if (!ok) detail << "; ";
        ok = false;
        detail << why;
    }
};

std::vector<std::vector<State>> subsets_of_size(std::uint32_t n, std::uint32_t k) {
    std::vector<std::vector<State>> out;
    std::vector<State> c(k);
    std::iota(c.begin(), c.end(), 0u);
    for (;;) {
        out.push_back(c);
        int i = int(k) - 1;
        while (i >= 0 && c[i] == n - k + State(i)) --i;
        if (i < 0) return out;
        ++c[i];
        for (std::uint32_t j = std::uint32_t(i) + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

std::uint32_t uniform(std::mt19937_64& rng, std::uint32_t lo, std::uint32_t hi) {
    return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

MealyAutomaton random_mealy(std::mt19937_64& rng, std::uint32_t n, std::uint32_t a, std::uint32_t b) {
    std::vector<State> next(std::size_t(n) * a);
    std::vector<Symbol> out(next.size());
    for (auto& q : next) q = uniform(rng, 0, n - 1);
    for (auto& y : out) y = uniform(rng, 0, b - 1);
    return MealyAutomaton(n, a, b, std::move(next), std::move(out));
}

Word random_word(std::mt19937_64& rng, std::uint32_t a, std::size_t max_len) {
    Word w(uniform(rng, 0, std::uint32_t(max_len)));
    for (auto& x : w) x = uniform(rng, 0, a - 1);
    return w;
}

Transformation random_map(std::mt19937_64& rng, std::uint32_t n) {
    std::vector<std::uint32_t> img(n);
    if (uniform(rng, 0, 1) == 0) {
        std::iota(img.begin(), img.end(), 0u);
        std::shuffle(img.begin(), img.end(), rng);
    } else {
        for (auto& v : img) v = uniform(rng, 0, n - 1);
    }
    return Transformation(std::move(img));
}

void fig1_reproduction(Outcome& o, Level) {
    for (std::uint32_t n = 3; n <= 6; ++n) {
        const auto aut = extremal::fig1_automaton(n);
        if (!automata::is_reduced(aut)) o.fail("n=" + std::to_string(n) + " not reduced");
        for (State p = 0; p < n; ++p)
            for (State q = p + 1; q < n; ++q)
                if (oracle::equivalent_by_enumeration(aut, p, q))
                    o.fail("n=" + std::to_string(n) + " oracle finds equivalent states");
        for (const auto& s : subsets_of_size(n, 2))
            if (!pds::shortest_pds(aut, s).found()) o.fail("n=" + std::to_string(n) + " 2-subset without PDS");
        for (const auto& s : subsets_of_size(n, 3))
            if (pds::shortest_pds(aut, s).status != SearchStatus::Absent)
                o.fail("n=" + std::to_string(n) + " 3-subset not proven PDS-free");
    }
    if (o.ok) o.detail << "n=3..6 reduced; all 2-subsets have a PDS; no 3-subset does";
}

void moore_worst_case(Outcome& o, Level level, unsigned jobs) {
    const std::uint32_t n = level == Level::Full ? 3 : 2;
    const auto w = pds::worst_case_pds(n, 2, 2, 2, 10'000'000, jobs);
    o.detail << "n=" << n << " |A|=|B|=2: " << w.automata_enumerated << " automata, max length " << w.max_length
             << " (n-1 = " << n - 1 << ")";
    if (w.max_length != n - 1) o.fail(o.detail.str() + " mismatch");
    if (w.witness) {
        const auto brute = oracle::shortest_pds_by_enumeration(*w.witness, w.witness_subset, n + 2);
        if (!brute || brute->size() != w.max_length) o.fail("witness disagrees with word enumeration");
    }
}

void lower_bound_construction(Outcome& o, Level level) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cases{{4, 2}, {5, 2}};
    if (level == Level::Full) cases.insert(cases.end(), {{5, 3}, {6, 2}});
    bool first = true;
    for (auto [n, k] : cases) {
        const auto rep = extremal::verify_lower_bound(n, k);
        std::ostringstream line;
        line << "(" << n << "," << k << "): ";
        if (rep.computed) line << *rep.computed;
        else line << "unreachable";
        line << " >= " << rep.bound;
        if (!rep.cycle_check) line << " cycle check failed";
        if (!rep.pass || !rep.cycle_check) o.fail(line.str());
        if (o.ok) o.detail << (first ? "" : "; ") << line.str();
        first = false;
    }
}

void landau_oracles(Outcome& o, Level level) {
    for (std::uint32_t k = 1; k <= 30; ++k)
        if (landau::landau(k).value != oracle::max_partition_lcm(k)) o.fail("partition maximum differs at k=" + std::to_string(k));
    const std::uint32_t perm_k = level == Level::Full ? 10 : 8;
    for (std::uint32_t k = 1; k <= perm_k; ++k)
        if (landau::landau(k).value != oracle::max_element_order(k)) o.fail("element order differs at k=" + std::to_string(k));
    if (o.ok) o.detail << "k<=30 vs partitions, k<=" << perm_k << " vs permutations";
}

void walk_compression(Outcome& o, Level level) {
    const int instances = level == Level::Full ? 500 : 100;
    std::mt19937_64 rng(0x5eed0005);
    std::size_t total_in = 0, total_out = 0;
    for (int t = 0; t < instances && o.ok; ++t) {
        const std::uint32_t n = uniform(rng, 2, 5);
        std::vector<Transformation> basis(uniform(rng, 1, 4));
        for (auto& f : basis) f = random_map(rng, n);
        const kgraph::KGraph g(basis, 2);
        const auto start = kgraph::Vertex(uniform(rng, 0, std::uint32_t(g.vertex_count() - 1)));
        const auto walk = kgraph::random_walk(g, start, uniform(rng, 0, 200), rng());
        const auto c = kgraph::compress_walk(g, walk);
        kgraph::validate(g, c.walk);
        if (c.walk.start != walk.start || !(kgraph::eval_walk(g, c.walk) == kgraph::eval_walk(g, walk)))
            o.fail("instance " + std::to_string(t) + ": evaluation changed");
        for (const auto& comp : c.components)
            if (comp.length > comp.bound)
                o.fail("instance " + std::to_string(t) + ": component length " + std::to_string(comp.length) +
                       " over bound " + std::to_string(comp.bound));
        total_in += walk.length();
        total_out += c.walk.length();
    }
    if (o.ok) o.detail << instances << " instances, " << total_in << " arcs in, " << total_out << " arcs out";
}

void semigroup_oracles(Outcome& o, Level) {
    const auto t2 = semigroup::full_transformation_semigroup(2);
    const auto s2 = semigroup::symmetric_group(2);
    const auto lt = semigroup::worst_case_complexity(t2).value;
    const auto ls = semigroup::worst_case_complexity(s2).value;
    const auto lt_naive = oracle::worst_case_complexity_by_products(t2);
    const auto ls_naive = oracle::worst_case_complexity_by_products(s2);
    o.detail << "l(T_2)=" << lt << " (naive " << lt_naive << "), l(S_2)=" << ls << " (naive " << ls_naive << ")";
    if (lt != lt_naive || ls != ls_naive || ls > lt) o.fail(o.detail.str());
}

void entropy_limit(Outcome& o, Level) {
    for (double p : {0.5, 0.25}) {
        const double v = bounds::entropy_limit_check(1000, p);
        const double m = std::floor(p * 1000);
        const double via_lgamma = (std::lgamma(1001.0) - std::lgamma(m + 1) - std::lgamma(1001.0 - m)) / 1000;
        const double gap = std::fabs(v - bounds::entropy(p));
        char buf[96];
        std::snprintf(buf, sizeof buf, "p=%.2f gap %.5f; ", p, gap);
        o.detail << buf;
        if (gap >= 0.01) o.fail(buf);
        if (std::fabs(v - via_lgamma) > 1e-9) o.fail("exact binomial disagrees with lgamma");
    }
    const double r = bounds::central_binomial_ratio(1000);
    char buf[64];
    std::snprintf(buf, sizeof buf, "central ratio %.5f", r);
    o.detail << buf;
    if (std::fabs(r - 1) >= 0.02) o.fail(buf);
}

PartialSemiautomaton random_psemi(std::mt19937_64& rng) {
    const std::uint32_t n = uniform(rng, 1, 4), a = uniform(rng, 1, 2);
    std::vector<State> next(std::size_t(n) * a);
    for (auto& q : next) q = uniform(rng, 0, 3) == 0 ? PartialSemiautomaton::kUndefined : uniform(rng, 0, n - 1);
    return PartialSemiautomaton(n, a, std::move(next));
}

void sync_properties(Outcome& o, Level level) {
    const int instances = level == Level::Full ? 200 : 60;
    std::mt19937_64 rng(0x5eed0008);
    int careful = 0, words = 0;
    for (int t = 0; t < instances && o.ok; ++t) {
        const auto aut = random_psemi(rng);
        const std::size_t beta_bound = std::size_t(1) << aut.n_states();
        std::vector<Word> probes{Word{}};
        const auto cs = sync::shortest_carefully_synchronizing(aut);
        if (cs.status == SearchStatus::Found) {
            ++careful;
            if (!sync::is_irreducible(aut, cs.word)) o.fail("instance " + std::to_string(t) + ": careful word reducible");
            probes.push_back(cs.word);
        }
        const auto irr = sync::shortest_irreducible(aut);
        if (irr.status == SearchStatus::Found) probes.push_back(irr.word);
        for (int i = 0; i < 4; ++i) probes.push_back(random_word(rng, aut.n_inputs(), 5));
        for (const auto& w : probes) {
            ++words;
            if (sync::is_irreducible(aut, w) != oracle::irreducible_by_definition(aut, w, beta_bound))
                o.fail("instance " + std::to_string(t) + ": irreducibility disagrees on " + format_word(w));
        }
    }
    if (o.ok) o.detail << instances << " automata, " << careful << " careful words, " << words << " words cross-checked";
}

void pds_oracles(Outcome& o, Level level) {
    const int instances = level == Level::Full ? 300 : 100;
    const int triples = level == Level::Full ? 1000 : 300;
    std::mt19937_64 rng(0x5eed0009);
    int found = 0;
    for (int t = 0; t < instances && o.ok; ++t) {
        const std::uint32_t n = uniform(rng, 2, 5), a = uniform(rng, 1, 2), b = uniform(rng, 1, 2);
        const auto aut = random_mealy(rng, n, a, b);
        std::vector<State> all(n);
        std::iota(all.begin(), all.end(), 0u);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<State> s(all.begin(), all.begin() + uniform(rng, 2, n));
        const auto r = pds::shortest_pds(aut, s);
        // A found word bounds the enumeration; otherwise search every word up to the horizon.
        const std::size_t horizon = r.found() ? r.length() : (a == 1 ? 24 : 14);
        const auto brute = oracle::shortest_pds_by_enumeration(aut, s, horizon);
        if (r.found()) {
            ++found;
            if (!brute || *brute != r.word) o.fail("instance " + std::to_string(t) + ": word differs from enumeration");
        } else if (r.status == SearchStatus::Absent) {
            if (brute) o.fail("instance " + std::to_string(t) + ": enumeration found " + format_word(*brute));
        } else {
            o.fail("instance " + std::to_string(t) + ": search gave up");
        }
    }
    for (int t = 0; t < triples && o.ok; ++t) {
        const std::uint32_t n = uniform(rng, 1, 5), a = uniform(rng, 1, 2), b = uniform(rng, 1, 3);
        const auto aut = random_mealy(rng, n, a, b);
        std::vector<State> all(n);
        std::iota(all.begin(), all.end(), 0u);
        const Word alpha = random_word(rng, a, 6), beta = random_word(rng, a, 6);
        Word ab = alpha;
        ab.insert(ab.end(), beta.begin(), beta.end());
        if (!automata::uncertainty(aut, all, ab).refines(automata::uncertainty(aut, all, alpha)))
            o.fail("triple " + std::to_string(t) + ": refinement fails");
    }
    if (o.ok) o.detail << instances << " automata (" << found << " with PDS), " << triples << " refinement triples";
}

void s3_complexity(Outcome& o, Level, unsigned jobs) {
    const auto s3 = semigroup::symmetric_group(3);
    semigroup::WorstCaseOptions opts;
    opts.jobs = jobs;
    const auto value = semigroup::worst_case_complexity(s3, opts).value;
    const auto naive = oracle::worst_case_complexity_by_products(s3);
    opts.canonical = true;
    const auto canon = semigroup::worst_case_complexity(s3, opts).value;
    std::uint64_t by_subgroups = 0;
    for (const auto& g : semigroup::subgroups_of_symmetric(3))
        by_subgroups = std::max(by_subgroups, semigroup::group_worst_diameter(g));
    o.detail << "l(S_3)=" << value << " (naive " << naive << ", canonical " << canon << ", max subgroup diameter "
             << by_subgroups << ")";
    if (value != naive || value != canon || value != by_subgroups) o.fail(o.detail.str());
}

struct CheckDef {
    int id;
    const char* name;
    double budget;
};

constexpr CheckDef kChecks[] = {
    {1, "fig1-reproduction", 5},       {2, "moore-worst-case", 60},  {3, "lower-bound-construction", 120},
    {4, "landau-oracles", 10},         {5, "walk-compression", 120}, {6, "semigroup-oracles", 10},
    {7, "entropy-limit", 5},           {8, "sync-properties", 120},  {9, "pds-oracles", 120},
    {10, "symmetric-3-complexity", 60},
};

}  // namespace

Level parse_level(std::string_view name) {
    if (name == "quick") return Level::Quick;
    if (name == "full") return Level::Full;
    throw InputError("unknown verify level '" + std::string(name) + "' (expected quick or full)");
}

const char* to_string(Level level) noexcept { return level == Level::Full ? "full" : "quick"; }

std::vector<int> check_ids(Level level) {
    std::vector<int> ids{1, 2, 3, 4, 5, 6, 7, 8, 9};
    if (level == Level::Full) ids.push_back(10);
    return ids;
}

CheckResult run_check(int id, Level level, unsigned jobs) {
    const CheckDef* def = nullptr;
    for (const auto& s : kChecks)
        if (s.id == id) def = &s;
    if (!def) throw InputError("no check with id " + std::to_string(id));

    CheckResult r;
    r.id = id;
    r.name = def->name;
    r.budget_seconds = def->budget;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        switch (id) {
            case 1: fig1_reproduction(o, level); break;
            case 2: moore_worst_case(o, level, jobs); break;
            case 3: lower_bound_construction(o, level); break;
            case 4: landau_oracles(o, level); break;
            case 5: walk_compression(o, level); break;
            case 6: semigroup_oracles(o, level); break;
            case 7: entropy_limit(o, level); break;
            case 8: sync_properties(o, level); break;
            case 9: pds_oracles(o, level); break;
            case 10: s3_complexity(o, level, jobs); break;
        }
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = o.ok;
    r.detail = o.detail.str();
    if (r.seconds > r.budget_seconds) {
        r.passed = false;
        r.detail += " (over time budget)";
    }
    return r;
}

std::vector<CheckResult> run_all(Level level, unsigned jobs) {
    std::vector<CheckResult> out;
    for (int id : check_ids(level)) out.push_back(run_check(id, level, jobs));
    return out;
}

std::string format_line(const CheckResult& r) {
    char head[128];
    std::snprintf(head, sizeof head, "%s %2d %-26s %8.2fs/%gs  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.seconds, r.budget_seconds);
    return head + r.detail;
}

}  // namespace pdskit::verify
