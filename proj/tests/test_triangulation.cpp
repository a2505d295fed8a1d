#include "doctest.h"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/pending/disjoint_sets.hpp>

#include "cell.hpp"
#include "fixtures.hpp"
#include "triangulation.hpp"

using namespace prism;

namespace {

struct Dsu {
    std::vector<int> rank, parent;
    boost::disjoint_sets<int*, int*> s;
    explicit Dsu(int n) : rank(n), parent(n), s(rank.data(), parent.data())
    {
        for (int i = 0; i < n; ++i) s.make_set(i);
    }
};

} // namespace

TEST_SUITE("triangulation")
{
    TEST_CASE("fixture triangulations are closed under gluing")
    {
        for (const auto& c : fx::covers()) {
            CAPTURE(c.file);
            auto rep = fx::load(c.file);
            auto t = triangulate(fx::sig(c), rep);
            CHECK(t.n_tets == 6 * rep.degree());
            auto v = validate_triangulation(t, static_cast<int>(cusp_orbits(rep).size()));
            CHECK(v.ok());
            for (const auto& p : v.problems) MESSAGE(p);
        }
    }

    TEST_CASE("gluings respect vertex types, and ideal classes are cusps")
    {
        for (const auto& c : fx::covers()) {
            CAPTURE(c.file);
            auto rep = fx::load(c.file);
            auto t = triangulate(fx::sig(c), rep);
            REQUIRE(static_cast<int>(t.labels.size()) == t.n_tets);
            Dsu d(4 * t.n_tets);
            for (int a = 0; a < t.n_tets; ++a)
                for (int f = 0; f < 4; ++f) {
                    const auto& g = t.gluing[a][f];
                    for (int v = 0; v < 4; ++v) {
                        if (v == 3 - f) continue;
                        int w = g.perm[v];
                        CHECK(cell::template_vertex(t.labels[a][v]) == cell::template_vertex(t.labels[g.tet][w]));
                        d.s.union_set(4 * a + v, 4 * g.tet + w);
                    }
                }
            std::set<int> ideal;
            for (int a = 0; a < t.n_tets; ++a)
                for (int v = 0; v < 4; ++v)
                    if (t.labels[a][v] == cell::Vinf) ideal.insert(d.s.find_set(4 * a + v));
            CHECK(static_cast<int>(ideal.size()) == static_cast<int>(cusp_orbits(rep).size()));
            CHECK(t.ideal_classes == static_cast<int>(ideal.size()));
        }
    }

    TEST_CASE("export and parse round-trip")
    {
        for (const auto& c : fx::covers()) {
            auto t = triangulate(fx::sig(c), fx::load(c.file));
            std::istringstream in(export_gluing_table(t));
            auto u = parse_gluing_table(in);
            CHECK(u.same_gluings(t));
            CHECK(export_gluing_table(u) == export_gluing_table(t));
        }
    }

    TEST_CASE("every block has the same internal gluings")
    {
        auto t = triangulate(lookup("O333_2"), fx::load("sigma_2_1"));
        const std::string first = block_table(t, 0);
        for (int k = 1; k < 24; ++k) CHECK(block_table(t, k) == first);
    }

    TEST_CASE("degree-1 export matches the frozen table")
    {
        auto t = triangulate(lookup("O333_2"), trivial_rep());
        std::ifstream f(fx::path("golden/O333_2_trivial.tri"));
        std::stringstream want;
        want << f.rdbuf();
        CHECK(export_gluing_table(t) == want.str());
    }

    TEST_CASE("broken tables are caught")
    {
        auto t = triangulate(lookup("O333_2"), fx::load("sigma_2_1"));
        auto u = t;
        std::swap(u.gluing[0][0].perm[0], u.gluing[0][0].perm[1]);
        CHECK_FALSE(validate_triangulation(u).ok());
        CHECK_FALSE(validate_triangulation(t, 2).ok());
        std::istringstream bad("ntet 1\ntet 0 : (0,0123)\n");
        CHECK_THROWS(parse_gluing_table(bad));
    }
}
