#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "prism.h"

namespace {

std::string fixture(const char* leaf)
{
    return std::string(PRISM_SOURCE_DIR) + "/fixtures/" + leaf;
}

std::string take(char* s)
{
    std::string r = s ? s : "";
    prism_free_string(s);
    return r;
}

} // namespace

TEST_SUITE("capi")
{
    TEST_CASE("status names cover every code")
    {
        for (int s = PRISM_OK; s <= PRISM_E_INTERNAL; ++s)
            CHECK(std::string(prism_status_name(static_cast<prism_status>(s))).size() > 0);
        CHECK(std::string(prism_status_name(PRISM_OK)) != std::string(prism_status_name(PRISM_E_PARSE)));
    }

    TEST_CASE("errors set last_error and success clears it")
    {
        prism_signature* s = nullptr;
        CHECK(prism_signature_lookup("O999_9", 0, &s) == PRISM_E_UNKNOWN_NAME);
        CHECK(s == nullptr);
        CHECK(std::string(prism_last_error()).find("O999_9") != std::string::npos);
        CHECK(prism_signature_lookup("O236_5,n", 0, &s) == PRISM_E_FAMILY_PARAMETER);
        CHECK(prism_signature_parse("1 2 3", &s) == PRISM_E_PARSE);
        const int bad[9] = {2, 2, 2, 3, 2, 2, 2, 2, 2};
        CHECK(prism_signature_new(bad, "bad", &s) == PRISM_E_CUSP_TYPE_INVALID);
        CHECK(prism_signature_lookup("O333_2", 0, nullptr) == PRISM_E_INVALID_ARGUMENT);
        REQUIRE(prism_signature_lookup("O333_2", 0, &s) == PRISM_OK);
        CHECK(std::string(prism_last_error()).empty());
        prism_signature_free(s);
        prism_signature_free(nullptr);
    }

    TEST_CASE("signature accessors")
    {
        prism_signature* s = nullptr;
        REQUIRE(prism_signature_lookup("O333_2", 0, &s) == PRISM_OK);
        int a[9];
        REQUIRE(prism_signature_get(s, a) == PRISM_OK);
        CHECK(a[5] == 4);
        char* str = nullptr;
        REQUIRE(prism_signature_cusp_type(s, &str) == PRISM_OK);
        CHECK(take(str) == "(3,3,3)");
        long long l = 0;
        REQUIRE(prism_signature_vertex_lcm(s, &l) == PRISM_OK);
        CHECK(l == 24);
        REQUIRE(prism_signature_format(s, &str) == PRISM_OK);
        CHECK(take(str).find("3 3 2 3 3 4 2 2 3") != std::string::npos);
        prism_signature_free(s);
        CHECK(prism_catalog_count() > 60);
        REQUIRE(prism_catalog_row(0, &str) == PRISM_OK);
        CHECK(take(str).find('\t') != std::string::npos);
        CHECK(prism_catalog_row(100000, &str) == PRISM_E_INVALID_ARGUMENT);
    }

    TEST_CASE("reps through the handle")
    {
        prism_reps* r = nullptr;
        CHECK(prism_reps_read_file(fixture("nope.rep").c_str(), &r) == PRISM_E_IO);
        REQUIRE(prism_reps_read_file(fixture("sigma_2_1.rep").c_str(), &r) == PRISM_OK);
        CHECK(prism_reps_count(r) == 1);
        int n = 0;
        REQUIRE(prism_reps_degree(r, 0, &n) == PRISM_OK);
        CHECK(n == 24);
        std::vector<int> x(24);
        REQUIRE(prism_reps_images(r, 0, 0, x.data(), x.size()) == PRISM_OK);
        CHECK(prism_reps_images(r, 0, 0, x.data(), 3) == PRISM_E_INVALID_ARGUMENT);
        CHECK(prism_reps_images(r, 0, 7, x.data(), x.size()) == PRISM_E_INVALID_ARGUMENT);
        CHECK(prism_reps_degree(r, 5, &n) == PRISM_E_INVALID_ARGUMENT);
        char* str = nullptr;
        REQUIRE(prism_reps_evaluate(r, 0, "x", &str) == PRISM_OK);
        CHECK(take(str).rfind("(0,1,2)", 0) == 0);
        CHECK(prism_reps_evaluate(r, 0, "q", &str) == PRISM_E_PARSE);

        prism_signature* s = nullptr;
        REQUIRE(prism_signature_lookup("O333_2", 0, &s) == PRISM_OK);
        prism_check_info info{};
        REQUIRE(prism_check(s, r, 0, &info, &str) == PRISM_OK);
        CHECK(take(str) == "Z");
        CHECK(info.manifold == 1);
        CHECK(info.cusps == 1);
        CHECK(info.h1_rank == 1);
        CHECK(info.h1_torsion == 0);

        prism_surface_info surf{};
        REQUIRE(prism_surface(s, r, 0, &surf) == PRISM_OK);
        CHECK(surf.genus == 2);
        CHECK(surf.area_num == 4 * surf.area_den);

        int ideal = 0;
        REQUIRE(prism_triangulate(s, r, 0, &str, &ideal) == PRISM_OK);
        CHECK(take(str).rfind("ntet 144", 0) == 0);
        CHECK(ideal == 1);

        size_t count = 0;
        std::vector<int> buf(24);
        REQUIRE(prism_find_isometries(s, r, 0, s, r, 0, 0, buf.data(), buf.size(), &count) == PRISM_OK);
        CHECK(count == 1);
        CHECK(buf[5] == 5);
        int ok = 0;
        REQUIRE(prism_verify_intertwine(buf.data(), 24, r, 0, r, 0, "x>x+,y>y+", &ok) == PRISM_OK);
        CHECK(ok == 1);
        CHECK(prism_verify_intertwine(buf.data(), 24, r, 0, r, 0, "x>", &ok) == PRISM_E_PARSE);

        prism_signature_free(s);
        prism_reps_free(r);
    }

    TEST_CASE("building reps and the search")
    {
        prism_reps* r = nullptr;
        REQUIRE(prism_reps_new(&r) == PRISM_OK);
        const int id[1] = {0};
        REQUIRE(prism_reps_push(r, 1, id, id, id, id) == PRISM_OK);
        const int bad[2] = {0, 0};
        CHECK(prism_reps_push(r, 2, bad, bad, bad, bad) == PRISM_E_INVALID_REP);
        CHECK(prism_reps_count(r) == 1);

        prism_signature* s = nullptr;
        REQUIRE(prism_signature_lookup("O333_2", 0, &s) == PRISM_OK);
        prism_check_info info{};
        REQUIRE(prism_check(s, r, 0, &info, nullptr) == PRISM_OK);
        CHECK(info.relators_ok == 1);
        CHECK(info.manifold == 0);

        prism_enumerate_options o;
        prism_enumerate_options_init(&o);
        o.keep = 1;
        prism_reps* out = nullptr;
        unsigned long long total = 0, by[7] = {};
        REQUIRE(prism_enumerate(s, 6, &o, &out, &total, by) == PRISM_OK);
        CHECK(prism_reps_count(out) == total);
        unsigned long long sum = 0;
        for (auto b : by) sum += b;
        CHECK(sum == total);
        CHECK(by[1] == 1);
        prism_reps* bf = nullptr;
        REQUIRE(prism_brute_force(s, 4, &bf) == PRISM_OK);
        CHECK(prism_reps_count(bf) == by[4]);
        CHECK(prism_brute_force(s, 12, &bf) == PRISM_E_INDEX_TOO_LARGE);
        o.workers = 0;
        CHECK(prism_enumerate(s, 6, &o, &out, &total, by) == PRISM_E_INVALID_ARGUMENT);

        double v = 0, e = 0;
        REQUIRE(prism_volume(s, 1e-10, &v, &e) == PRISM_OK);
        CHECK(std::abs(48 * v - 45.0273570343769) < 1e-6);
        double h = 0;
        REQUIRE(prism_cusp(s, &h, &v) == PRISM_OK);
        CHECK(std::isfinite(v));

        prism_reps_free(bf);
        prism_reps_free(out);
        prism_reps_free(r);
        prism_signature_free(s);
    }
}
