#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "pdskit/pdskit.h"

namespace {

std::vector<std::int64_t> values(const pk_ints* v) {
    return std::vector<std::int64_t>(pk_ints_data(v), pk_ints_data(v) + pk_ints_size(v));
}

}  // namespace

TEST_CASE("mealy handles, text round trip and searches") {
    pk_mealy* m = nullptr;
    REQUIRE(pk_fig1(4, &m) == PK_OK);
    pk_text* text = nullptr;
    REQUIRE(pk_mealy_format(m, "first\nsecond", &text) == PK_OK);
    const std::string s = pk_text_str(text);
    CHECK(s.rfind("# first\n# second\nmealy 4 2 2\n", 0) == 0);

    pk_mealy* back = nullptr;
    REQUIRE(pk_mealy_parse(s.c_str(), &back) == PK_OK);
    pk_text* again = nullptr;
    REQUIRE(pk_mealy_format(back, "first\nsecond", &again) == PK_OK);
    CHECK(s == pk_text_str(again));

    const std::uint32_t pair[] = {0, 1}, triple[] = {0, 1, 2}, far[] = {1, 3};
    pk_ints* word = nullptr;
    std::uint64_t nodes = 0;
    CHECK(pk_shortest_pds(m, pair, 2, -1, 1000, &word, &nodes) == PK_OK);
    CHECK(values(word) == std::vector<std::int64_t>{1});
    pk_ints_free(word);
    word = nullptr;
    CHECK(pk_shortest_pds(m, triple, 3, -1, 1000, &word, nullptr) == PK_ABSENT);
    CHECK(word == nullptr);
    CHECK(pk_shortest_pds(m, far, 2, 1, 1000, nullptr, nullptr) == PK_GAVE_UP);

    std::uint32_t q = 9;
    pk_ints* out = nullptr;
    const std::uint32_t w01[] = {0, 1};
    CHECK(pk_mealy_run(m, 1, w01, 2, &q, &out) == PK_OK);
    CHECK(q == 0);
    CHECK(values(out) == std::vector<std::int64_t>{0, 0});

    pk_text* part = nullptr;
    const std::uint32_t w1[] = {1};
    CHECK(pk_mealy_uncertainty(m, triple, 3, w1, 1, &part) == PK_OK);
    CHECK(std::string(pk_text_str(part)) == "{0}{1,2}");

    int reduced = 0;
    CHECK(pk_mealy_is_reduced(m, &reduced) == PK_OK);
    CHECK(reduced == 1);

    pk_ints_free(out);
    pk_text_free(part);
    pk_text_free(text);
    pk_text_free(again);
    pk_mealy_free(back);
    pk_mealy_free(m);
}

TEST_CASE("error codes and messages") {
    pk_mealy* m = nullptr;
    CHECK(pk_mealy_parse("mealy 1 1 1\n0 0 0 0\n0 0 0 0\n", &m) == PK_ERR_PARSE);
    CHECK(m == nullptr);
    CHECK(std::string(pk_last_error()).find("line 3") != std::string::npos);

    CHECK(pk_mealy_load("/nonexistent/dir/x.maut", &m) == PK_ERR_IO);
    const std::uint32_t next[] = {0, 5}, out[] = {0, 0};
    CHECK(pk_mealy_create(2, 1, 1, next, out, &m) == PK_ERR_INPUT);
    CHECK(std::strlen(pk_last_error()) > 0);
    CHECK(pk_mealy_create(2, 1, 1, nullptr, out, &m) == PK_ERR_INPUT);

    pk_worst_pds w{};
    CHECK(pk_worst_case_pds(4, 3, 3, 2, 1000, 1, &w) == PK_ERR_CAP);
    CHECK(pk_worst_case_pds(1, 2, 2, 2, 1000, 1, &w) == PK_ERR_INPUT);
    CHECK(std::string(pk_status_name(PK_GAVE_UP)) == "gave-up");
    CHECK(std::string(pk_status_name(PK_ABSENT)) == "absent");

    pk_text* t = nullptr;
    CHECK(pk_verify("slow", 1, &t, nullptr) == PK_ERR_INPUT);

    // A successful call clears the previous message.
    double h = 0;
    CHECK(pk_entropy(0.5, &h) == PK_OK);
    CHECK(std::string(pk_last_error()).empty());
}

TEST_CASE("file round trip") {
    const std::string path = "capi_roundtrip.psemi";
    const std::uint32_t next[] = {0, 0, 0, 1, PK_UNDEFINED, 0};
    pk_psemi* p = nullptr;
    REQUIRE(pk_psemi_create(3, 2, next, &p) == PK_OK);
    REQUIRE(pk_psemi_save(p, path.c_str(), "three states") == PK_OK);
    pk_psemi* q = nullptr;
    REQUIRE(pk_psemi_load(path.c_str(), &q) == PK_OK);
    pk_text *a = nullptr, *b = nullptr;
    pk_psemi_format(p, nullptr, &a);
    pk_psemi_format(q, nullptr, &b);
    CHECK(std::string(pk_text_str(a)) == pk_text_str(b));

    pk_ints* word = nullptr;
    std::uint64_t size = 0;
    CHECK(pk_sync_careful(q, 1000, &word, &size) == PK_OK);
    CHECK(values(word) == std::vector<std::int64_t>{1, 0});
    int irr = 0;
    const std::uint32_t w[] = {1, 0};
    CHECK(pk_sync_is_irreducible(q, w, 2, 1000, &irr) == PK_OK);
    CHECK(irr == 1);

    const std::uint32_t all[] = {0, 1, 2}, zero[] = {0};
    pk_ints* img = nullptr;
    CHECK(pk_psemi_image(q, all, 3, zero, 1, &img) == PK_ABSENT);

    pk_ints_free(word);
    pk_text_free(a);
    pk_text_free(b);
    pk_psemi_free(p);
    pk_psemi_free(q);
    std::remove(path.c_str());
}

TEST_CASE("semigroup and k-graph calls") {
    pk_maps* maps = nullptr;
    REQUIRE(pk_maps_parse(2, "1,0;0,0", &maps) == PK_OK);
    CHECK(pk_maps_count(maps) == 2);
    std::uint64_t size = 0;
    pk_ints* levels = nullptr;
    CHECK(pk_closure(maps, 1000, &size, &levels) == PK_OK);
    CHECK(size == 4);
    CHECK(values(levels) == std::vector<std::int64_t>{2, 2});
    const std::uint32_t id[] = {0, 1};
    std::uint64_t v = 0;
    CHECK(pk_complexity(maps, id, 1000, &v) == PK_OK);
    CHECK(v == 2);

    pk_maps* t2 = nullptr;
    REQUIRE(pk_maps_full(2, &t2) == PK_OK);
    pk_worst_complexity w{};
    CHECK(pk_worst_case_complexity(t2, 1000, 1000, 0, 1, &w) == PK_OK);
    CHECK(w.value == 2);
    pk_ints_free(w.basis);
    pk_text_free(w.witness);

    pk_maps* gens = nullptr;
    REQUIRE(pk_maps_parse(4, "1,2,3,0;1,0,2,3", &gens) == PK_OK);
    pk_kgraph* g = nullptr;
    REQUIRE(pk_kgraph_build(gens, 2, 1000, &g) == PK_OK);
    std::uint64_t nv = 0, na = 0;
    pk_kgraph_counts(g, &nv, &na);
    CHECK(nv == 6);
    CHECK(na == 12);
    pk_walk* walk = nullptr;
    REQUIRE(pk_walk_random(g, 0, 60, 3, &walk) == PK_OK);
    pk_walk* out = nullptr;
    pk_ints* comps = nullptr;
    std::uint64_t bridges = 9;
    REQUIRE(pk_walk_compress(g, walk, &out, &comps, &bridges) == PK_OK);
    pk_text *e1 = nullptr, *e2 = nullptr;
    pk_walk_eval(g, walk, &e1);
    pk_walk_eval(g, out, &e2);
    CHECK(std::string(pk_text_str(e1)) == pk_text_str(e2));
    CHECK(pk_ints_size(comps) % PK_COMPONENT_FIELDS == 0);
    CHECK(bridges == 0);

    pk_text_free(e1);
    pk_text_free(e2);
    pk_ints_free(comps);
    pk_walk_free(out);
    pk_walk_free(walk);
    pk_kgraph_free(g);
    pk_maps_free(gens);
    pk_maps_free(t2);
    pk_ints_free(levels);
    pk_maps_free(maps);
}

TEST_CASE("numbers") {
    pk_text* value = nullptr;
    pk_ints* parts = nullptr;
    CHECK(pk_landau(7, 200, &value, &parts) == PK_OK);
    CHECK(std::string(pk_text_str(value)) == "12");
    CHECK(values(parts) == std::vector<std::int64_t>{3, 4});
    pk_text_free(value);
    pk_ints_free(parts);

    pk_lower_bound lb{};
    CHECK(pk_verify_lower_bound(4, 2, 1u << 20, &lb) == PK_OK);
    CHECK(lb.has_computed == 1);
    CHECK(lb.computed == 3);
    CHECK(lb.pass == 1);

    pk_text* row = nullptr;
    CHECK(pk_bound_row_csv(3, 2, &row) == PK_OK);
    CHECK(std::string(pk_text_str(row)).rfind("3,2,low2,2,9,", 0) == 0);
    pk_text_free(row);
    double x = 0;
    CHECK(pk_phi(0.75, &x) == PK_OK);
    CHECK(x == 1.0);
    CHECK(pk_phi(1.5, &x) == PK_ERR_INPUT);
}
