// Command-line front end. Talks to the library only through the C interface.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdskit/pdskit.h"

namespace {

using Json = nlohmann::ordered_json;

// A library call that failed with an error status.
struct Failure : std::runtime_error {
    pk_status status;
    Failure(pk_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

pk_status check(pk_status s) {
    if (s < 0) throw Failure(s, std::string(pk_status_name(s)) + ": " + pk_last_error());
    return s;
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
template <class T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using Ints = Handle<pk_ints, pk_ints_free>;
using Text = Handle<pk_text, pk_text_free>;
using Mealy = Handle<pk_mealy, pk_mealy_free>;
using Psemi = Handle<pk_psemi, pk_psemi_free>;
using Maps = Handle<pk_maps, pk_maps_free>;
using Graph = Handle<pk_kgraph, pk_kgraph_free>;
using WalkH = Handle<pk_walk, pk_walk_free>;

std::vector<std::int64_t> values(const pk_ints* v) {
    const auto* d = pk_ints_data(v);
    return std::vector<std::int64_t>(d, d + pk_ints_size(v));
}

std::string joined(const std::vector<std::int64_t>& xs, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

std::vector<std::uint32_t> parse_list(const std::string& text, const char* what) {
    std::vector<std::uint32_t> out;
    if (text.empty()) return out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || item[0] == '-' || v > 0xfffffffful)
            throw Failure(PK_ERR_INPUT, std::string("bad ") + what + " entry '" + item + "'");
        out.push_back(std::uint32_t(v));
    }
    return out;
}

std::string state_map(std::uint32_t n) {
    std::string s;
    for (std::uint32_t i = 0; i < n; ++i) s += (i ? "," : "") + ("q" + std::to_string(i + 1)) + "=" + std::to_string(i);
    return s;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

struct Options {
    bool json = false;
    bool timing = false;
    unsigned jobs = 1;
    std::uint64_t cap_nodes = 1u << 22;
    std::uint64_t cap_bases = 1u << 20;
    std::uint64_t cap_subsets = 1u << 16;
    std::uint64_t cap_closure = 1u << 24;
};

class Report {
public:
    explicit Report(std::string subcommand) { data_["subcommand"] = std::move(subcommand); }

    template <class T>
    void set(const std::string& key, T&& v) {
        data_[key] = std::forward<T>(v);
    }
    void input(const std::string& key, Json v) { data_["input." + key] = std::move(v); }
    void status(pk_status s) { status_ = s; }
    pk_status status() const { return status_; }

    int finish(const Options& o, double seconds, const std::string& error = {}) {
        // subcommand, echoed inputs, status, then results.
        Json out;
        out["subcommand"] = data_["subcommand"];
        for (auto& [k, v] : data_.items())
            if (k.rfind("input.", 0) == 0) out[k] = v;
        out["status"] = error.empty() ? pk_status_name(status_) : "error";
        if (!error.empty()) out["error"] = error;
        for (auto& [k, v] : data_.items())
            if (k != "subcommand" && k.rfind("input.", 0) != 0) out[k] = v;
        if (o.timing) out["elapsed_seconds"] = seconds;

        if (o.json) {
            std::cout << out.dump(2) << "\n";
        } else {
            for (auto& [k, v] : out.items()) std::cout << k << ": " << render(v) << "\n";
        }
        if (!error.empty()) return 1;
        return status_ == PK_GAVE_UP ? 2 : 0;
    }

private:
    static std::string render(const Json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_null()) return "";
        if (v.is_array()) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + render(v[i]);
            return s;
        }
        return v.dump();
    }

    Json data_ = Json::object();
    pk_status status_ = PK_OK;
};

// ---- subcommands ----

void run_pds(Report& r, const Options& o, const std::string& file, const std::string& subset_text,
             std::int64_t max_len) {
    r.input("file", file);
    r.input("subset", subset_text);
    if (max_len >= 0) r.input("max_len", max_len);
    pk_mealy* raw = nullptr;
    check(pk_mealy_load(file.c_str(), &raw));
    Mealy m(raw);
    const auto subset = parse_list(subset_text, "subset");
    pk_ints* word = nullptr;
    std::uint64_t nodes = 0;
    const pk_status s =
        check(pk_shortest_pds(m.get(), subset.data(), subset.size(), max_len, o.cap_nodes, &word, &nodes));
    Ints w(word);
    r.status(s);
    if (s == PK_OK) {
        const auto letters = values(w.get());
        r.set("word", joined(letters));
        r.set("length", letters.size());
        pk_text* part = nullptr;
        std::vector<std::uint32_t> w32(letters.begin(), letters.end());
        check(pk_mealy_uncertainty(m.get(), subset.data(), subset.size(), w32.data(), w32.size(), &part));
        Text p(part);
        r.set("partition", pk_text_str(p.get()));
    }
    r.set("nodes_visited", nodes);
}

void run_pds_worst(Report& r, const Options& o, std::uint32_t n, std::uint32_t a, std::uint32_t b, std::uint32_t k,
                   std::uint64_t cap) {
    r.input("states", n);
    r.input("inputs", a);
    r.input("outputs", b);
    r.input("k", k);
    pk_worst_pds w{};
    check(pk_worst_case_pds(n, a, b, k, cap, o.jobs, &w));
    Mealy witness(w.witness);
    Ints subset(w.witness_subset);
    r.set("automata_enumerated", w.automata_enumerated);
    r.set("pairs_with_pds", w.pairs_with_pds);
    r.set("max_length", w.max_length);
    if (witness) {
        r.set("witness_subset", joined(values(subset.get())));
        pk_text* t = nullptr;
        check(pk_mealy_format(witness.get(), nullptr, &t));
        Text text(t);
        std::string flat = pk_text_str(text.get());
        for (auto& c : flat)
            if (c == '\n') c = ';';
        if (!flat.empty() && flat.back() == ';') flat.pop_back();
        r.set("witness", flat);
    }
}

Maps load_maps(Report& r, std::uint32_t ground, const std::string& maps, const std::string& set) {
    pk_maps* raw = nullptr;
    if (!set.empty()) {
        r.input("set", set);
        if (set == "tn") check(pk_maps_full(ground, &raw));
        else if (set == "sn") check(pk_maps_symmetric(ground, &raw));
        else throw Failure(PK_ERR_INPUT, "--set must be tn or sn");
    } else {
        if (maps.empty()) throw Failure(PK_ERR_INPUT, "--maps or --set is required");
        r.input("maps", maps);
        check(pk_maps_parse(ground, maps.c_str(), &raw));
    }
    return Maps(raw);
}

void run_closure(Report& r, const Options& o, std::uint32_t ground, const std::string& maps) {
    r.input("ground", ground);
    auto basis = load_maps(r, ground, maps, {});
    std::uint64_t size = 0;
    pk_ints* lv = nullptr;
    check(pk_closure(basis.get(), o.cap_closure, &size, &lv));
    Ints levels(lv);
    const auto hist = values(levels.get());
    r.set("size", size);
    r.set("max_level", hist.size());
    r.set("level_counts", hist);
}

void run_worst(Report& r, const Options& o, std::uint32_t ground, const std::string& maps, std::string set,
               bool canon) {
    r.input("ground", ground);
    if (maps.empty() && set.empty()) set = "tn";
    auto candidates = load_maps(r, ground, maps, set);
    r.input("canonical", canon);
    pk_worst_complexity w{};
    check(pk_worst_case_complexity(candidates.get(), o.cap_bases, o.cap_closure, canon, o.jobs, &w));
    Ints basis(w.basis);
    Text witness(w.witness);
    r.set("value", w.value);
    r.set("bases_examined", w.bases_examined);
    std::string maps_text;
    for (auto i : values(basis.get())) {
        pk_text* t = nullptr;
        check(pk_maps_get(candidates.get(), std::size_t(i), &t));
        Text mt(t);
        if (!maps_text.empty()) maps_text += ";";
        maps_text += pk_text_str(mt.get());
    }
    r.set("basis", maps_text);
    r.set("witness", pk_text_str(witness.get()));
}

void run_diam(Report& r, const Options& o, std::uint32_t ground, const std::string& maps, const std::string& set,
              bool group) {
    r.input("ground", ground);
    auto gens = load_maps(r, ground, maps, set);
    std::uint64_t v = 0;
    if (group || !set.empty()) {
        r.input("group", true);
        check(pk_group_worst_diameter(gens.get(), o.cap_bases, &v));
        r.set("worst_diameter", v);
    } else {
        check(pk_directed_diameter(gens.get(), o.cap_closure, &v));
        r.set("diameter", v);
    }
}

std::string vertex_label(const pk_kgraph* g, std::uint32_t v) {
    pk_ints* raw = nullptr;
    check(pk_kgraph_vertex(g, v, &raw));
    Ints s(raw);
    return "{" + joined(values(s.get())) + "}";
}

Graph build_graph(Report& r, const Options& o, std::uint32_t ground, std::uint32_t k, const std::string& maps,
                  Maps& basis) {
    r.input("ground", ground);
    r.input("k", k);
    basis = load_maps(r, ground, maps, {});
    pk_kgraph* raw = nullptr;
    check(pk_kgraph_build(basis.get(), k, o.cap_subsets, &raw));
    Graph g(raw);
    std::uint64_t nv = 0, na = 0;
    check(pk_kgraph_counts(g.get(), &nv, &na));
    r.set("vertices", nv);
    r.set("arcs", na);
    return g;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Failure(PK_ERR_IO, "cannot write '" + path + "'");
}

void run_kgraph(Report& r, const Options& o, const std::string& mode, std::uint32_t ground, std::uint32_t k,
                const std::string& maps, const std::string& dot, const std::string& start, const std::string& letters,
                std::int64_t random_len, std::uint64_t seed) {
    Maps basis;
    auto g = build_graph(r, o, ground, k, maps, basis);
    if (!dot.empty()) {
        pk_text* t = nullptr;
        check(pk_kgraph_dot(g.get(), &t));
        Text text(t);
        write_text(dot, pk_text_str(text.get()));
        r.set("dot", dot);
    }
    if (mode == "scc") {
        std::uint64_t count = 0;
        pk_ints* raw = nullptr;
        check(pk_kgraph_scc(g.get(), &count, &raw));
        Ints comp(raw);
        const auto of = values(comp.get());
        r.set("components", count);
        std::vector<std::string> members(count);
        for (std::size_t v = 0; v < of.size(); ++v) {
            auto& m = members[std::size_t(of[v])];
            m += (m.empty() ? "" : " ") + vertex_label(g.get(), std::uint32_t(v));
        }
        for (std::size_t c = 0; c < count; ++c) r.set("component." + std::to_string(c), members[c]);
    } else if (mode == "compress") {
        if (start.empty()) throw Failure(PK_ERR_INPUT, "--start is required (a k-subset such as 0,1)");
        const auto s = parse_list(start, "start");
        std::uint32_t v0 = 0;
        check(pk_kgraph_vertex_of(g.get(), s.data(), s.size(), &v0));
        r.input("start", start);
        pk_walk* raw = nullptr;
        if (random_len >= 0) {
            r.input("random_len", random_len);
            r.input("seed", seed);
            check(pk_walk_random(g.get(), v0, std::size_t(random_len), seed, &raw));
        } else {
            r.input("letters", letters);
            const auto ls = parse_list(letters, "letters");
            check(pk_walk_from_letters(g.get(), v0, ls.data(), ls.size(), &raw));
        }
        WalkH walk(raw);
        pk_walk* craw = nullptr;
        pk_ints* comps = nullptr;
        std::uint64_t bridges = 0;
        check(pk_walk_compress(g.get(), walk.get(), &craw, &comps, &bridges));
        WalkH out(craw);
        Ints cs(comps);

        auto eval = [&](const pk_walk* w) {
            pk_text* t = nullptr;
            check(pk_walk_eval(g.get(), w, &t));
            Text text(t);
            return std::string(pk_text_str(text.get()));
        };
        auto letters_of = [&](const pk_walk* w) {
            pk_ints* li = nullptr;
            check(pk_walk_letters(g.get(), w, &li));
            Ints l(li);
            return joined(values(l.get()));
        };
        const std::string e_in = eval(walk.get()), e_out = eval(out.get());
        r.set("input_length", pk_walk_length(walk.get()));
        r.set("output_length", pk_walk_length(out.get()));
        r.set("eval", e_out);
        r.set("eval_preserved", e_in == e_out);
        r.set("bridges", bridges);
        r.set("walk", letters_of(out.get()));
        const auto f = values(cs.get());
        bool within = true;
        static const char* names[PK_COMPONENT_FIELDS] = {"component", "vertices",      "pivot",  "original_length",
                                                          "pieces",    "factor_length", "length", "bound"};
        for (std::size_t i = 0; i + PK_COMPONENT_FIELDS <= f.size(); i += PK_COMPONENT_FIELDS) {
            const std::string prefix = "segment." + std::to_string(i / PK_COMPONENT_FIELDS) + ".";
            for (std::size_t j = 0; j < PK_COMPONENT_FIELDS; ++j) {
                if (j == 2) r.set(prefix + names[j], vertex_label(g.get(), std::uint32_t(f[i + j])));
                else r.set(prefix + names[j], f[i + j]);
            }
            within = within && f[i + 6] <= f[i + 7];
        }
        r.set("within_bound", within);
        if (e_in != e_out || !within) throw Failure(PK_ERR_INTERNAL, "compression check failed");
    }
}

void run_fig1(Report& r, std::uint32_t n, const std::string& out_path) {
    r.input("n", n);
    pk_mealy* raw = nullptr;
    check(pk_fig1(n, &raw));
    Mealy m(raw);
    r.set("state_map", state_map(n));
    int reduced = 0;
    check(pk_mealy_is_reduced(m.get(), &reduced));
    r.set("reduced", reduced != 0);

    std::uint64_t pairs = 0, pairs_with = 0, longest = 0, triples = 0, triples_with = 0;
    for (std::uint32_t p = 0; p < n; ++p)
        for (std::uint32_t q = p + 1; q < n; ++q) {
            const std::uint32_t s[2] = {p, q};
            pk_ints* w = nullptr;
            const auto st = check(pk_shortest_pds(m.get(), s, 2, -1, 1u << 22, &w, nullptr));
            Ints word(w);
            ++pairs;
            if (st == PK_OK) {
                ++pairs_with;
                longest = std::max<std::uint64_t>(longest, pk_ints_size(word.get()));
            }
            for (std::uint32_t t = q + 1; t < n; ++t) {
                const std::uint32_t s3[3] = {p, q, t};
                ++triples;
                if (check(pk_shortest_pds(m.get(), s3, 3, -1, 1u << 22, nullptr, nullptr)) == PK_OK) ++triples_with;
            }
        }
    r.set("pairs", pairs);
    r.set("pairs_with_pds", pairs_with);
    r.set("longest_pair_pds", longest);
    r.set("triples", triples);
    r.set("triples_with_pds", triples_with);
    if (!out_path.empty()) {
        const std::string comment = "two-input machine with no PDS for any 3 states, n=" + std::to_string(n) +
                                    "\nstate q_i is index i-1";
        check(pk_mealy_save(m.get(), out_path.c_str(), comment.c_str()));
        r.set("out", out_path);
    }
}

void run_sokolovskii(Report& r, const Options& o, std::uint32_t n, std::uint32_t k, const std::string& out_path,
                     bool verify) {
    r.input("n", n);
    r.input("k", k);
    pk_sokolovskii_info info{};
    check(pk_sokolovskii(n, k, o.cap_subsets, &info));
    Psemi semi(info.semiautomaton);
    Maps basis(info.basis);
    Text pi(info.pi);
    r.set("state_map", state_map(n));
    r.set("sink", n - 1);
    r.set("letters", info.m);
    r.set("pi", pk_text_str(pi.get()));
    r.set("r_k", info.r_k);
    if (!out_path.empty()) {
        const std::string comment = "lower-bound construction n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                    "\nstate q_i is index i-1; state " + std::to_string(n - 1) + " is the sink";
        check(pk_psemi_save(semi.get(), out_path.c_str(), comment.c_str()));
        r.set("out", out_path);
    }
    if (verify) {
        pk_lower_bound lb{};
        check(pk_verify_lower_bound(n, k, o.cap_closure, &lb));
        r.set("closure_size", lb.closure_size);
        if (lb.has_computed) r.set("computed", lb.computed);
        else r.set("computed", "unreachable");
        r.set("bound", lb.bound);
        r.set("witness_length", lb.exact);
        r.set("meets_bound", lb.pass != 0);
        r.set("equals_witness_length", lb.equals_exact != 0);
        r.set("cycle_check", lb.cycle_check != 0);
        if (!lb.pass || !lb.cycle_check) throw Failure(PK_ERR_INTERNAL, "lower bound check failed");
    }
}

void run_landau(Report& r, std::uint32_t k, std::uint32_t cap) {
    r.input("k", k);
    pk_text* v = nullptr;
    pk_ints* p = nullptr;
    check(pk_landau(k, cap, &v, &p));
    Text value(v);
    Ints parts(p);
    const auto ps = values(parts.get());
    std::int64_t used = 0;
    for (auto x : ps) used += x;
    r.set("value", pk_text_str(value.get()));
    r.set("partition", ps.empty() ? std::string("1") : joined(ps, "+"));
    r.set("fixed_points", std::int64_t(k) - used);
}

Psemi load_psemi(Report& r, const std::string& file) {
    r.input("file", file);
    pk_psemi* raw = nullptr;
    check(pk_psemi_load(file.c_str(), &raw));
    return Psemi(raw);
}

void run_sync(Report& r, const Options& o, const std::string& mode, const std::string& file, const std::string& word) {
    auto p = load_psemi(r, file);
    if (mode == "check") {
        r.input("word", word);
        const auto w = parse_list(word, "word");
        std::uint32_t n = 0;
        check(pk_psemi_dims(p.get(), &n, nullptr));
        std::vector<std::uint32_t> all(n);
        for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
        pk_ints* img = nullptr;
        const bool defined = check(pk_psemi_image(p.get(), all.data(), n, w.data(), w.size(), &img)) == PK_OK;
        Ints image(img);
        r.set("defined", defined);
        if (defined) r.set("image", joined(values(image.get())));
        int irr = 0;
        check(pk_sync_is_irreducible(p.get(), w.data(), w.size(), o.cap_nodes, &irr));
        r.set("irreducible", irr != 0);
        return;
    }
    pk_ints* raw = nullptr;
    std::uint64_t size = 0;
    const pk_status s = mode == "careful" ? check(pk_sync_careful(p.get(), o.cap_nodes, &raw, &size))
                                          : check(pk_sync_irreducible(p.get(), o.cap_nodes, &raw, &size));
    Ints w(raw);
    r.status(s);
    if (s == PK_OK) {
        const auto letters = values(w.get());
        r.set("word", joined(letters));
        r.set("length", letters.size());
        r.set("image_size", size);
    }
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream in(line);
    for (std::string f; std::getline(in, f, ',');) out.push_back(f);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

// Numbers stay numbers in JSON; empty fields become null.
Json csv_value(const std::string& field) {
    if (field.empty()) return nullptr;
    std::size_t used = 0;
    try {
        const long long v = std::stoll(field, &used);
        if (used == field.size()) return v;
    } catch (const std::exception&) {
    }
    try {
        const double d = std::stod(field, &used);
        if (used == field.size()) return d;
    } catch (const std::exception&) {
    }
    return field;
}

void run_bounds_row(Report& r, std::uint32_t n, std::uint32_t k) {
    r.input("n", n);
    r.input("k", k);
    pk_text* h = nullptr;
    pk_text* row = nullptr;
    check(pk_bounds_header(&h));
    Text header(h);
    check(pk_bound_row_csv(n, k, &row));
    Text rt(row);
    const auto keys = split_csv(pk_text_str(header.get()));
    const auto vals = split_csv(pk_text_str(rt.get()));
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (keys[i] == "n" || keys[i] == "k") continue;
        r.set(keys[i], csv_value(i < vals.size() ? vals[i] : ""));
    }
}

void run_bounds_table(Report& r, std::uint32_t n_min, std::uint32_t n_max, std::uint32_t k, double ratio,
                      const std::string& csv) {
    r.input("n_min", n_min);
    r.input("n_max", n_max);
    if (k) r.input("k", k);
    else r.input("ratio", format_double(ratio));
    pk_text* t = nullptr;
    check(pk_bounds_table(n_min, n_max, k, ratio, &t));
    Text table(t);
    const std::string text = pk_text_str(table.get());
    std::size_t rows = 0;
    for (char c : text) rows += c == '\n';
    r.set("rows", rows >= 2 ? rows - 2 : 0);
    if (csv.empty()) {
        r.set("csv", text);
    } else {
        write_text(csv, text);
        r.set("csv", csv);
    }
}

int run_verify(Report& r, const Options& o, const std::string& level) {
    r.input("level", level);
    pk_text* t = nullptr;
    int failures = 0;
    check(pk_verify(level.c_str(), o.jobs, &t, &failures));
    Text report(t);
    std::stringstream in(pk_text_str(report.get()));
    std::size_t i = 0;
    for (std::string line; std::getline(in, line);) {
        // Drop the timing column unless asked, so reruns print identical reports.
        if (!o.timing) {
            const auto pos = line.find("s/");
            if (pos != std::string::npos) {
                auto begin = line.rfind(' ', pos);
                auto end = line.find(' ', pos);
                if (begin != std::string::npos && end != std::string::npos) line.erase(begin, end - begin);
            }
        }
        r.set("check." + std::to_string(++i), line);
    }
    r.set("failures", failures);
    return failures;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pdskit: distinguishing sequences, transformation complexity and related bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_flag("--json", o.json, "Print the report as JSON");
    app.add_flag("--timing", o.timing, "Include wall-clock time in the report");
    app.add_option("--jobs", o.jobs, "Worker threads for exhaustive enumerations")->check(CLI::Range(1u, 1024u));
    app.add_option("--cap-nodes", o.cap_nodes, "Node cap for breadth-first searches")->capture_default_str();
    app.add_option("--cap-bases", o.cap_bases, "Cap on bases or subsets enumerated")->capture_default_str();
    app.add_option("--cap-subsets", o.cap_subsets, "Cap on k-subsets / construction letters")->capture_default_str();
    app.add_option("--cap-closure", o.cap_closure, "Cap on closure elements")->capture_default_str();

    std::string file, subset, maps, set, dot, out, word, start, letters, csv, level = "quick";
    std::int64_t max_len = -1, random_len = -1;
    std::uint64_t seed = 1, cap = 10'000'000;
    std::uint32_t n = 0, a = 0, b = 0, k = 0, ground = 0, n_min = 2, n_max = 0, landau_cap = 200;
    double ratio = 0.5;
    bool canon = false, group = false, verify = false;

    auto* pds = app.add_subcommand("pds", "Shortest preset distinguishing sequence of a state subset");
    pds->add_option("--file", file, "Mealy automaton (.maut)")->required();
    pds->add_option("--subset", subset, "Comma-separated states, 0-based")->required();
    pds->add_option("--max-len", max_len, "Give up beyond this length");

    auto* worst = app.add_subcommand("pds-worst", "Worst shortest-PDS length over all automata of given size");
    worst->add_option("--states", n)->required();
    worst->add_option("--inputs", a)->required();
    worst->add_option("--outputs", b)->required();
    worst->add_option("--k", k)->required();
    worst->add_option("--cap", cap, "Refuse when more automata than this")->capture_default_str();

    auto* sg = app.add_subcommand("semigroup", "Transformation semigroup complexity");
    sg->require_subcommand(1);
    auto* closure = sg->add_subcommand("closure", "Closure of a basis with product lengths");
    closure->add_option("--ground", ground)->required();
    closure->add_option("--maps", maps, "Image arrays, e.g. \"1,0;0,0\"")->required();
    auto* sworst = sg->add_subcommand("worst", "Worst-case complexity over all bases of a set");
    sworst->add_option("--ground", ground)->required();
    sworst->add_option("--set", set, "tn or sn (default tn)");
    sworst->add_option("--maps", maps, "Explicit candidate set instead of --set");
    sworst->add_flag("--canon", canon, "Skip bases equal up to relabelling");
    auto* diam = sg->add_subcommand("diam", "Directed diameter of a generated group");
    diam->add_option("--ground", ground)->required();
    diam->add_option("--maps", maps, "Generators");
    diam->add_option("--set", set, "sn: worst diameter over all generating sets");
    diam->add_flag("--group", group, "Treat --maps as a whole group and take the worst generating set");

    auto* kg = app.add_subcommand("kgraph", "k-subset graphs of a basis");
    kg->require_subcommand(1);
    std::vector<CLI::App*> kg_modes;
    for (const char* mode : {"build", "scc", "compress"}) {
        auto* c = kg->add_subcommand(mode);
        c->add_option("--ground", ground)->required();
        c->add_option("--k", k)->required();
        c->add_option("--maps", maps)->required();
        c->add_option("--dot", dot, "Write the graph as DOT");
        kg_modes.push_back(c);
    }
    kg_modes[0]->description("Vertex and arc counts");
    kg_modes[1]->description("Strongly connected components");
    kg_modes[2]->description("Compress a walk");
    kg_modes[2]->add_option("--start", start, "Start vertex as a k-subset, e.g. 0,1");
    kg_modes[2]->add_option("--letters", letters, "Walk as basis indices");
    kg_modes[2]->add_option("--random-len", random_len, "Random walk of this many arcs instead");
    kg_modes[2]->add_option("--seed", seed)->capture_default_str();

    auto* ex = app.add_subcommand("extremal", "Extremal constructions");
    ex->require_subcommand(1);
    auto* fig1 = ex->add_subcommand("fig1", "Reduced machine with no PDS for any 3 states");
    fig1->add_option("--n", n)->required();
    fig1->add_option("--out", out, "Write the machine (.maut)");
    auto* sok = ex->add_subcommand("sokolovskii", "Lower-bound construction for transformation complexity");
    sok->add_option("--n", n)->required();
    sok->add_option("--k", k)->required();
    sok->add_option("--out", out, "Write the semiautomaton (.psemi)");
    sok->add_flag("--verify", verify, "Measure the target's complexity against the bound");

    auto* land = app.add_subcommand("landau", "Maximum order of a permutation of k points");
    land->add_option("--k", k)->required();
    land->add_option("--cap", landau_cap, "Largest k accepted")->capture_default_str();

    auto* sy = app.add_subcommand("sync", "Careful synchronization of partial semiautomata");
    sy->require_subcommand(1);
    std::vector<CLI::App*> sy_modes;
    for (const char* mode : {"careful", "irreducible", "check"}) {
        auto* c = sy->add_subcommand(mode);
        c->add_option("--file", file, "Partial semiautomaton (.psemi)")->required();
        sy_modes.push_back(c);
    }
    sy_modes[0]->description("Shortest carefully synchronizing word");
    sy_modes[1]->description("Shortest irreducible word");
    sy_modes[2]->description("Is a word irreducible");
    sy_modes[2]->add_option("--word", word, "Comma-separated letters")->required();

    auto* bd = app.add_subcommand("bounds", "Closed-form bounds");
    bd->require_subcommand(1);
    auto* row = bd->add_subcommand("row", "One row of the bounds table");
    row->add_option("--n", n)->required();
    row->add_option("--k", k)->required();
    auto* table = bd->add_subcommand("table", "CSV table over a range of n");
    table->add_option("--n-min", n_min)->capture_default_str();
    table->add_option("--n-max", n_max)->required();
    table->add_option("--ratio", ratio, "k = round(ratio n)")->capture_default_str();
    table->add_option("--k", k, "Fixed k instead of a ratio");
    table->add_option("--csv", csv, "Output file (printed when omitted)");

    auto* ver = app.add_subcommand("verify", "Run the acceptance checks");
    ver->add_option("--level", level, "quick or full")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::string name;
    for (const auto* c = app.get_subcommands().front(); c; c = c->get_subcommands().empty() ? nullptr : c->get_subcommands().front())
        name += (name.empty() ? "" : " ") + c->get_name();

    Report r(name);
    const auto t0 = std::chrono::steady_clock::now();
    auto seconds = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
    try {
        if (*pds) run_pds(r, o, file, subset, max_len);
        else if (*worst) run_pds_worst(r, o, n, a, b, k, cap);
        else if (*closure) run_closure(r, o, ground, maps);
        else if (*sworst) run_worst(r, o, ground, maps, set, canon);
        else if (*diam) run_diam(r, o, ground, maps, set, group);
        else if (*kg_modes[0]) run_kgraph(r, o, "build", ground, k, maps, dot, start, letters, random_len, seed);
        else if (*kg_modes[1]) run_kgraph(r, o, "scc", ground, k, maps, dot, start, letters, random_len, seed);
        else if (*kg_modes[2]) run_kgraph(r, o, "compress", ground, k, maps, dot, start, letters, random_len, seed);
        else if (*fig1) run_fig1(r, n, out);
        else if (*sok) run_sokolovskii(r, o, n, k, out, verify);
        else if (*land) run_landau(r, k, landau_cap);
        else if (*sy_modes[0]) run_sync(r, o, "careful", file, word);
        else if (*sy_modes[1]) run_sync(r, o, "irreducible", file, word);
        else if (*sy_modes[2]) run_sync(r, o, "check", file, word);
        else if (*row) run_bounds_row(r, n, k);
        else if (*table) run_bounds_table(r, n_min, n_max, k, ratio, csv);
        else if (*ver) {
            const int failures = run_verify(r, o, level);
            if (failures) return r.finish(o, seconds(), std::to_string(failures) + " check(s) failed");
        }
    } catch (const Failure& e) {
        return r.finish(o, seconds(), e.what());
    }
    return r.finish(o, seconds());
}
