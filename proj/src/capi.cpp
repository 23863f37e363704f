#include "pdskit/pdskit.h"

#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "pdskit/automaton_io.hpp"
#include "pdskit/bounds.hpp"
#include "pdskit/extremal.hpp"
#include "pdskit/kgraph.hpp"
#include "pdskit/landau.hpp"
#include "pdskit/pds.hpp"
#include "pdskit/semigroup.hpp"
#include "pdskit/sync.hpp"
#include "pdskit/verify.hpp"

using namespace pdskit;

struct pk_ints {
    std::vector<std::int64_t> v;
};
struct pk_text {
    std::string s;
};
struct pk_mealy {
    automata::MealyAutomaton a;
};
struct pk_psemi {
    automata::PartialSemiautomaton a;
};
struct pk_maps {
    std::uint32_t ground;
    std::vector<semigroup::Transformation> maps;
};
struct pk_kgraph {
    kgraph::KGraph g;
};
struct pk_walk {
    kgraph::Walk w;
};

namespace {

thread_local std::string last_error;

template <class F>
pk_status guard(F&& f) noexcept {
    try {
        last_error.clear();
        return f();
    } catch (const ParseError& e) {
        last_error = e.what();
        return PK_ERR_PARSE;
    } catch (const CapExceeded& e) {
        last_error = e.what();
        return PK_ERR_CAP;
    } catch (const IoError& e) {
        last_error = e.what();
        return PK_ERR_IO;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return PK_ERR_INPUT;
    } catch (const std::out_of_range& e) {
        last_error = e.what();
        return PK_ERR_INPUT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return PK_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return PK_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return PK_ERR_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) throw InputError(std::string(what) + " is null");
}

template <class It>
pk_ints* make_ints(It first, It last) {
    auto* out = new pk_ints;
    for (; first != last; ++first) out->v.push_back(std::int64_t(*first));
    return out;
}

template <class C>
pk_ints* make_ints(const C& c) {
    return make_ints(c.begin(), c.end());
}

pk_text* make_text(std::string s) { return new pk_text{std::move(s)}; }

std::vector<std::uint32_t> to_vec(const std::uint32_t* p, std::size_t n) {
    if (n && !p) throw InputError("array is null");
    return std::vector<std::uint32_t>(p, p + n);
}

std::vector<std::string> comment_lines(const char* comment) {
    std::vector<std::string> out;
    if (!comment) return out;
    std::istringstream in(comment);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

pk_status from_search(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return PK_OK;
        case SearchStatus::Absent: return PK_ABSENT;
        case SearchStatus::GaveUp: return PK_GAVE_UP;
    }
    return PK_ERR_INTERNAL;
}

}  // namespace

extern "C" {

const char* pk_status_name(pk_status s) {
    switch (s) {
        case PK_OK: return "ok";
        case PK_ABSENT: return "absent";
        case PK_GAVE_UP: return "gave-up";
        case PK_ERR_INPUT: return "input-error";
        case PK_ERR_PARSE: return "parse-error";
        case PK_ERR_CAP: return "cap-exceeded";
        case PK_ERR_IO: return "io-error";
        case PK_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* pk_last_error(void) { return last_error.c_str(); }

size_t pk_ints_size(const pk_ints* v) { return v ? v->v.size() : 0; }
const int64_t* pk_ints_data(const pk_ints* v) { return v ? v->v.data() : nullptr; }
void pk_ints_free(pk_ints* v) { delete v; }

const char* pk_text_str(const pk_text* t) { return t ? t->s.c_str() : ""; }
void pk_text_free(pk_text* t) { delete t; }

// ---- Mealy ----

pk_status pk_mealy_create(uint32_t n, uint32_t a, uint32_t b, const uint32_t* next, const uint32_t* out,
                          pk_mealy** result) {
    return guard([&] {
        need(result, "result");
        const std::size_t cells = std::size_t(n) * a;
        *result = new pk_mealy{automata::MealyAutomaton(n, a, b, to_vec(next, cells), to_vec(out, cells))};
        return PK_OK;
    });
}

pk_status pk_mealy_parse(const char* text, pk_mealy** result) {
    return guard([&] {
        need(text, "text");
        need(result, "result");
        *result = new pk_mealy{io::parse_mealy(text)};
        return PK_OK;
    });
}

pk_status pk_mealy_load(const char* path, pk_mealy** result) {
    return guard([&] {
        need(path, "path");
        need(result, "result");
        const std::string text = io::read_file(path);
        try {
            *result = new pk_mealy{io::parse_mealy(text)};
        } catch (const ParseError& e) {
            last_error = std::string(path) + ": " + e.what();
            return PK_ERR_PARSE;
        }
        return PK_OK;
    });
}

pk_status pk_mealy_format(const pk_mealy* m, const char* comment, pk_text** result) {
    return guard([&] {
        need(m, "automaton");
        need(result, "result");
        *result = make_text(io::format_mealy(m->a, comment_lines(comment)));
        return PK_OK;
    });
}

pk_status pk_mealy_save(const pk_mealy* m, const char* path, const char* comment) {
    return guard([&] {
        need(m, "automaton");
        need(path, "path");
        io::write_file(path, io::format_mealy(m->a, comment_lines(comment)));
        return PK_OK;
    });
}

void pk_mealy_free(pk_mealy* m) { delete m; }

pk_status pk_mealy_dims(const pk_mealy* m, uint32_t* n, uint32_t* a, uint32_t* b) {
    return guard([&] {
        need(m, "automaton");
        if (n) *n = m->a.n_states();
        if (a) *a = m->a.n_inputs();
        if (b) *b = m->a.n_outputs();
        return PK_OK;
    });
}

pk_status pk_mealy_run(const pk_mealy* m, uint32_t q, const uint32_t* word, size_t len, uint32_t* final_state,
                       pk_ints** outputs) {
    return guard([&] {
        need(m, "automaton");
        const auto [end, out] = automata::run(m->a, q, to_vec(word, len));
        if (final_state) *final_state = end;
        if (outputs) *outputs = make_ints(out);
        return PK_OK;
    });
}

pk_status pk_mealy_image(const pk_mealy* m, const uint32_t* states, size_t count, const uint32_t* word, size_t len,
                         pk_ints** result) {
    return guard([&] {
        need(m, "automaton");
        need(result, "result");
        *result = make_ints(automata::image(m->a, to_vec(states, count), to_vec(word, len)));
        return PK_OK;
    });
}

pk_status pk_mealy_is_reduced(const pk_mealy* m, int* reduced) {
    return guard([&] {
        need(m, "automaton");
        need(reduced, "result");
        *reduced = automata::is_reduced(m->a) ? 1 : 0;
        return PK_OK;
    });
}

pk_status pk_mealy_minimize(const pk_mealy* m, pk_mealy** result) {
    return guard([&] {
        need(m, "automaton");
        need(result, "result");
        *result = new pk_mealy{automata::minimize(m->a)};
        return PK_OK;
    });
}

pk_status pk_mealy_uncertainty(const pk_mealy* m, const uint32_t* states, size_t count, const uint32_t* word,
                               size_t len, pk_text** result) {
    return guard([&] {
        need(m, "automaton");
        need(result, "result");
        *result = make_text(automata::uncertainty(m->a, to_vec(states, count), to_vec(word, len)).to_string());
        return PK_OK;
    });
}

// ---- partial semiautomata ----

pk_status pk_psemi_create(uint32_t n, uint32_t a, const uint32_t* next, pk_psemi** result) {
    return guard([&] {
        need(result, "result");
        *result = new pk_psemi{automata::PartialSemiautomaton(n, a, to_vec(next, std::size_t(n) * a))};
        return PK_OK;
    });
}

pk_status pk_psemi_parse(const char* text, pk_psemi** result) {
    return guard([&] {
        need(text, "text");
        need(result, "result");
        *result = new pk_psemi{io::parse_psemi(text)};
        return PK_OK;
    });
}

pk_status pk_psemi_load(const char* path, pk_psemi** result) {
    return guard([&] {
        need(path, "path");
        need(result, "result");
        const std::string text = io::read_file(path);
        try {
            *result = new pk_psemi{io::parse_psemi(text)};
        } catch (const ParseError& e) {
            last_error = std::string(path) + ": " + e.what();
            return PK_ERR_PARSE;
        }
        return PK_OK;
    });
}

pk_status pk_psemi_format(const pk_psemi* p, const char* comment, pk_text** result) {
    return guard([&] {
        need(p, "semiautomaton");
        need(result, "result");
        *result = make_text(io::format_psemi(p->a, comment_lines(comment)));
        return PK_OK;
    });
}

pk_status pk_psemi_save(const pk_psemi* p, const char* path, const char* comment) {
    return guard([&] {
        need(p, "semiautomaton");
        need(path, "path");
        io::write_file(path, io::format_psemi(p->a, comment_lines(comment)));
        return PK_OK;
    });
}

void pk_psemi_free(pk_psemi* p) { delete p; }

pk_status pk_psemi_dims(const pk_psemi* p, uint32_t* n, uint32_t* a) {
    return guard([&] {
        need(p, "semiautomaton");
        if (n) *n = p->a.n_states();
        if (a) *a = p->a.n_inputs();
        return PK_OK;
    });
}

pk_status pk_psemi_image(const pk_psemi* p, const uint32_t* states, size_t count, const uint32_t* word, size_t len,
                         pk_ints** result) {
    return guard([&] {
        need(p, "semiautomaton");
        need(result, "result");
        const auto img = automata::image(p->a, to_vec(states, count), to_vec(word, len));
        if (!img) return PK_ABSENT;
        *result = make_ints(*img);
        return PK_OK;
    });
}

// ---- PDS ----

pk_status pk_shortest_pds(const pk_mealy* m, const uint32_t* subset, size_t count, int64_t max_len,
                          uint64_t max_nodes, pk_ints** word, uint64_t* nodes_visited) {
    return guard([&] {
        need(m, "automaton");
        pds::SearchLimits limits;
        if (max_len >= 0) limits.max_len = std::size_t(max_len);
        limits.max_nodes = max_nodes;
        const auto r = pds::shortest_pds(m->a, to_vec(subset, count), limits);
        if (nodes_visited) *nodes_visited = r.nodes_visited;
        if (word && r.found()) *word = make_ints(r.word);
        return from_search(r.status);
    });
}

pk_status pk_worst_case_pds(uint32_t n, uint32_t a, uint32_t b, uint32_t k, uint64_t cap, unsigned jobs,
                            pk_worst_pds* result) {
    return guard([&] {
        need(result, "result");
        const auto w = pds::worst_case_pds(n, a, b, k, cap, jobs);
        result->max_length = w.max_length;
        result->automata_enumerated = w.automata_enumerated;
        result->pairs_with_pds = w.pairs_with_pds;
        result->witness = w.witness ? new pk_mealy{*w.witness} : nullptr;
        result->witness_subset = w.witness ? make_ints(w.witness_subset) : nullptr;
        return PK_OK;
    });
}

// ---- transformations ----

pk_status pk_maps_create(uint32_t ground, const uint32_t* images, size_t count, pk_maps** result) {
    return guard([&] {
        need(result, "result");
        auto* m = new pk_maps{ground, {}};
        try {
            for (std::size_t i = 0; i < count; ++i)
                m->maps.emplace_back(to_vec(images + i * ground, ground));
        } catch (...) {
            delete m;
            throw;
        }
        *result = m;
        return PK_OK;
    });
}

pk_status pk_maps_parse(uint32_t ground, const char* text, pk_maps** result) {
    return guard([&] {
        need(text, "text");
        need(result, "result");
        *result = new pk_maps{ground, semigroup::parse_maps(ground, text)};
        return PK_OK;
    });
}

pk_status pk_maps_full(uint32_t n, pk_maps** result) {
    return guard([&] {
        need(result, "result");
        *result = new pk_maps{n, semigroup::full_transformation_semigroup(n)};
        return PK_OK;
    });
}

pk_status pk_maps_symmetric(uint32_t n, pk_maps** result) {
    return guard([&] {
        need(result, "result");
        *result = new pk_maps{n, semigroup::symmetric_group(n)};
        return PK_OK;
    });
}

size_t pk_maps_count(const pk_maps* m) { return m ? m->maps.size() : 0; }
uint32_t pk_maps_ground(const pk_maps* m) { return m ? m->ground : 0; }

pk_status pk_maps_get(const pk_maps* m, size_t i, pk_text** result) {
    return guard([&] {
        need(m, "maps");
        need(result, "result");
        *result = make_text(m->maps.at(i).to_string());
        return PK_OK;
    });
}

void pk_maps_free(pk_maps* m) { delete m; }

pk_status pk_closure(const pk_maps* basis, uint64_t cap, uint64_t* size, pk_ints** levels) {
    return guard([&] {
        need(basis, "basis");
        const auto c = semigroup::closure(basis->maps, cap);
        if (size) *size = c.size();
        if (levels) {
            std::vector<std::int64_t> hist(c.size() ? c.max_level() : 0, 0);
            for (auto l : c.levels) ++hist[l - 1];
            *levels = make_ints(hist);
        }
        return PK_OK;
    });
}

pk_status pk_complexity(const pk_maps* basis, const uint32_t* f, uint64_t cap, uint64_t* value) {
    return guard([&] {
        need(basis, "basis");
        need(value, "result");
        const auto v = semigroup::complexity(basis->maps, semigroup::Transformation(to_vec(f, basis->ground)), cap);
        if (!v) return PK_ABSENT;
        *value = *v;
        return PK_OK;
    });
}

pk_status pk_restriction_complexity(const pk_maps* basis, const uint32_t* domain, const uint32_t* images,
                                    size_t size, uint64_t cap, uint64_t* value) {
    return guard([&] {
        need(basis, "basis");
        need(value, "result");
        const semigroup::PartialBijection f(to_vec(domain, size), to_vec(images, size));
        const auto v = semigroup::restriction_complexity(basis->maps, f, cap);
        if (!v) return PK_ABSENT;
        *value = *v;
        return PK_OK;
    });
}

pk_status pk_worst_case_complexity(const pk_maps* set, uint64_t cap_bases, uint64_t cap_closure, int canonical,
                                   unsigned jobs, pk_worst_complexity* result) {
    return guard([&] {
        need(set, "set");
        need(result, "result");
        semigroup::WorstCaseOptions opts;
        opts.cap_bases = cap_bases;
        opts.cap_closure = cap_closure;
        opts.canonical = canonical != 0;
        opts.jobs = jobs;
        const auto w = semigroup::worst_case_complexity(set->maps, opts);
        result->value = w.value;
        result->bases_examined = w.bases_examined;
        result->basis = make_ints(w.basis);
        result->witness = make_text(w.witness.to_string());
        return PK_OK;
    });
}

pk_status pk_directed_diameter(const pk_maps* generators, uint64_t cap, uint64_t* value) {
    return guard([&] {
        need(generators, "generators");
        need(value, "result");
        *value = semigroup::directed_diameter(generators->maps, cap);
        return PK_OK;
    });
}

pk_status pk_group_worst_diameter(const pk_maps* group, uint64_t cap_bases, uint64_t* value) {
    return guard([&] {
        need(group, "group");
        need(value, "result");
        *value = semigroup::group_worst_diameter(group->maps, cap_bases);
        return PK_OK;
    });
}

// ---- k-graphs ----

pk_status pk_kgraph_build(const pk_maps* basis, uint32_t k, uint64_t cap, pk_kgraph** result) {
    return guard([&] {
        need(basis, "basis");
        need(result, "result");
        *result = new pk_kgraph{kgraph::KGraph(basis->maps, k, cap)};
        return PK_OK;
    });
}

void pk_kgraph_free(pk_kgraph* g) { delete g; }

pk_status pk_kgraph_counts(const pk_kgraph* g, uint64_t* vertices, uint64_t* arcs) {
    return guard([&] {
        need(g, "graph");
        if (vertices) *vertices = g->g.vertex_count();
        if (arcs) *arcs = g->g.arcs().size();
        return PK_OK;
    });
}

pk_status pk_kgraph_vertex(const pk_kgraph* g, uint32_t v, pk_ints** subset) {
    return guard([&] {
        need(g, "graph");
        need(subset, "result");
        *subset = make_ints(g->g.vertex(v));
        return PK_OK;
    });
}

pk_status pk_kgraph_vertex_of(const pk_kgraph* g, const uint32_t* subset, size_t k, uint32_t* v) {
    return guard([&] {
        need(g, "graph");
        need(v, "result");
        *v = g->g.vertex_of(to_vec(subset, k));
        return PK_OK;
    });
}

pk_status pk_kgraph_scc(const pk_kgraph* g, uint64_t* components, pk_ints** component_of) {
    return guard([&] {
        need(g, "graph");
        const auto c = kgraph::scc(g->g);
        if (components) *components = c.members.size();
        if (component_of) *component_of = make_ints(c.component_of);
        return PK_OK;
    });
}

pk_status pk_kgraph_dot(const pk_kgraph* g, pk_text** result) {
    return guard([&] {
        need(g, "graph");
        need(result, "result");
        *result = make_text(g->g.to_dot());
        return PK_OK;
    });
}

pk_status pk_walk_from_letters(const pk_kgraph* g, uint32_t start, const uint32_t* letters, size_t len,
                               pk_walk** result) {
    return guard([&] {
        need(g, "graph");
        need(result, "result");
        *result = new pk_walk{kgraph::walk_from_letters(g->g, start, to_vec(letters, len))};
        return PK_OK;
    });
}

pk_status pk_walk_random(const pk_kgraph* g, uint32_t start, size_t len, uint64_t seed, pk_walk** result) {
    return guard([&] {
        need(g, "graph");
        need(result, "result");
        *result = new pk_walk{kgraph::random_walk(g->g, start, len, seed)};
        return PK_OK;
    });
}

void pk_walk_free(pk_walk* w) { delete w; }
size_t pk_walk_length(const pk_walk* w) { return w ? w->w.length() : 0; }
uint32_t pk_walk_start(const pk_walk* w) { return w ? w->w.start : 0; }

pk_status pk_walk_letters(const pk_kgraph* g, const pk_walk* w, pk_ints** letters) {
    return guard([&] {
        need(g, "graph");
        need(w, "walk");
        need(letters, "result");
        *letters = make_ints(kgraph::letters_of(g->g, w->w));
        return PK_OK;
    });
}

pk_status pk_walk_eval(const pk_kgraph* g, const pk_walk* w, pk_text** result) {
    return guard([&] {
        need(g, "graph");
        need(w, "walk");
        need(result, "result");
        *result = make_text(kgraph::eval_walk(g->g, w->w).to_string());
        return PK_OK;
    });
}

pk_status pk_walk_saturate(const pk_kgraph* g, const pk_walk* w, uint32_t pivot, pk_walk** result) {
    return guard([&] {
        need(g, "graph");
        need(w, "walk");
        need(result, "result");
        *result = new pk_walk{kgraph::saturate(g->g, w->w, pivot)};
        return PK_OK;
    });
}

pk_status pk_walk_compress(const pk_kgraph* g, const pk_walk* w, pk_walk** result, pk_ints** components,
                           uint64_t* bridges) {
    return guard([&] {
        need(g, "graph");
        need(w, "walk");
        need(result, "result");
        auto c = kgraph::compress_walk(g->g, w->w);
        if (components) {
            auto* out = new pk_ints;
            for (const auto& r : c.components)
                out->v.insert(out->v.end(),
                              {std::int64_t(r.component), std::int64_t(r.vertices), std::int64_t(r.pivot),
                               std::int64_t(r.original_length), std::int64_t(r.pieces), std::int64_t(r.factor_length),
                               std::int64_t(r.length), std::int64_t(r.bound)});
            *components = out;
        }
        if (bridges) *bridges = c.bridges;
        *result = new pk_walk{std::move(c.walk)};
        return PK_OK;
    });
}

// ---- extremal ----

pk_status pk_fig1(uint32_t n, pk_mealy** result) {
    return guard([&] {
        need(result, "result");
        *result = new pk_mealy{extremal::fig1_automaton(n)};
        return PK_OK;
    });
}

pk_status pk_sokolovskii(uint32_t n, uint32_t k, uint64_t cap_subsets, pk_sokolovskii_info* result) {
    return guard([&] {
        need(result, "result");
        auto inst = extremal::sokolovskii_instance(n, k, cap_subsets);
        result->m = inst.m;
        result->r_k = inst.pi_order;
        result->semiautomaton = new pk_psemi{std::move(inst.semiautomaton)};
        result->basis = new pk_maps{n, std::move(inst.basis)};
        result->pi = make_text(inst.pi.to_string());
        return PK_OK;
    });
}

pk_status pk_verify_lower_bound(uint32_t n, uint32_t k, uint64_t cap_closure, pk_lower_bound* result) {
    return guard([&] {
        need(result, "result");
        const auto r = extremal::verify_lower_bound(n, k, cap_closure);
        *result = pk_lower_bound{r.n,           r.k,      r.m,         r.r_k,    r.computed.has_value(),
                                 r.computed.value_or(0), r.bound, r.exact, r.pass,  r.equals_exact,
                                 r.cycle_check, r.closure_size};
        return PK_OK;
    });
}

// ---- Landau ----

pk_status pk_landau(uint32_t k, uint32_t cap, pk_text** value, pk_ints** parts) {
    return guard([&] {
        const auto v = landau::landau(k, cap);
        if (value) *value = make_text(v.value.str());
        if (parts) *parts = make_ints(v.parts);
        return PK_OK;
    });
}

pk_status pk_max_order_permutation(uint32_t k, pk_ints** images) {
    return guard([&] {
        need(images, "result");
        *images = make_ints(landau::max_order_permutation(k).images());
        return PK_OK;
    });
}

// ---- sync ----

namespace {

pk_status word_result(const sync::WordResult& r, pk_ints** word, uint64_t* image_size) {
    if (r.status == SearchStatus::Found) {
        if (word) *word = make_ints(r.word);
        if (image_size) *image_size = r.image_size;
    }
    return from_search(r.status);
}

}  // namespace

pk_status pk_sync_careful(const pk_psemi* p, uint64_t max_nodes, pk_ints** word, uint64_t* image_size) {
    return guard([&] {
        need(p, "semiautomaton");
        return word_result(sync::shortest_carefully_synchronizing(p->a, {max_nodes}), word, image_size);
    });
}

pk_status pk_sync_irreducible(const pk_psemi* p, uint64_t max_nodes, pk_ints** word, uint64_t* image_size) {
    return guard([&] {
        need(p, "semiautomaton");
        return word_result(sync::shortest_irreducible(p->a, {max_nodes}), word, image_size);
    });
}

pk_status pk_sync_is_irreducible(const pk_psemi* p, const uint32_t* word, size_t len, uint64_t max_nodes,
                                 int* irreducible) {
    return guard([&] {
        need(p, "semiautomaton");
        need(irreducible, "result");
        *irreducible = sync::is_irreducible(p->a, to_vec(word, len), {max_nodes}) ? 1 : 0;
        return PK_OK;
    });
}

// ---- bounds ----

pk_status pk_entropy(double p, double* value) {
    return guard([&] {
        need(value, "result");
        *value = bounds::entropy(p);
        return PK_OK;
    });
}

pk_status pk_binary_entropy(double x, double* value) {
    return guard([&] {
        need(value, "result");
        *value = bounds::binary_entropy(x);
        return PK_OK;
    });
}

pk_status pk_phi(double a, double* value) {
    return guard([&] {
        need(value, "result");
        *value = bounds::phi(a);
        return PK_OK;
    });
}

pk_status pk_entropy_limit(uint64_t n, double p, double* value) {
    return guard([&] {
        need(value, "result");
        *value = bounds::entropy_limit_check(n, p);
        return PK_OK;
    });
}

pk_status pk_bounds_header(pk_text** result) {
    return guard([&] {
        need(result, "result");
        *result = make_text(bounds::csv_header());
        return PK_OK;
    });
}

pk_status pk_bound_row_csv(uint32_t n, uint32_t k, pk_text** result) {
    return guard([&] {
        need(result, "result");
        *result = make_text(bounds::csv_row(bounds::bound_row(n, k)));
        return PK_OK;
    });
}

pk_status pk_bounds_table(uint32_t n_min, uint32_t n_max, uint32_t fixed_k, double ratio, pk_text** result) {
    return guard([&] {
        need(result, "result");
        bounds::TableRule rule;
        if (fixed_k) rule.fixed_k = fixed_k;
        rule.ratio = ratio;
        *result = make_text(bounds::bounds_table(n_min, n_max, rule));
        return PK_OK;
    });
}

// ---- verify ----

pk_status pk_verify(const char* level, unsigned jobs, pk_text** report, int* failures) {
    return guard([&] {
        need(level, "level");
        const auto lv = verify::parse_level(level);
        std::string text;
        int failed = 0;
        for (const auto& r : verify::run_all(lv, jobs)) {
            text += verify::format_line(r) + "\n";
            failed += !r.passed;
        }
        if (report) *report = make_text(std::move(text));
        if (failures) *failures = failed;
        return PK_OK;
    });
}

}  // extern "C"
