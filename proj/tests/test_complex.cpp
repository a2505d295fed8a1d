#include "doctest.h"

#include <algorithm>
#include <random>

#include "complex.hpp"
#include "error.hpp"
#include "fixtures.hpp"

using namespace prism;

namespace {

// determinant by cofactor expansion; fine for the tiny matrices below
mpz_class det(const std::vector<std::vector<mpz_class>>& m)
{
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    mpz_class d = 0;
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<mpz_class>> sub;
        for (size_t r = 1; r < n; ++r) {
            std::vector<mpz_class> row;
            for (size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            sub.push_back(row);
        }
        mpz_class t = m[0][c] * det(sub);
        d += (c % 2 ? -t : t);
    }
    return d;
}

// d_k = gcd of all k x k minors; invariant factors are d_k / d_{k-1}
AbelianGroup by_minors(const std::vector<std::vector<mpz_class>>& m, int cols)
{
    const int rows = static_cast<int>(m.size());
    std::vector<mpz_class> dk{1};
    for (int k = 1; k <= std::min(rows, cols); ++k) {
        mpz_class g = 0;
        std::vector<int> rs(rows), cs(cols);
        std::vector<bool> rsel(rows, false), csel(cols, false);
        std::fill(rsel.begin(), rsel.begin() + k, true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + k, true);
            do {
                std::vector<std::vector<mpz_class>> sub;
                for (int r = 0; r < rows; ++r) {
                    if (!rsel[r]) continue;
                    std::vector<mpz_class> row;
                    for (int c = 0; c < cols; ++c)
                        if (csel[c]) row.push_back(m[r][c]);
                    sub.push_back(row);
                }
                mpz_class d = det(sub);
                g = gcd(g, d);
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
        if (g == 0) break;
        dk.push_back(g);
    }
    AbelianGroup a;
    const int r = static_cast<int>(dk.size()) - 1;
    a.rank = cols - r;
    for (int k = 1; k <= r; ++k) {
        mpz_class f = dk[k] / dk[k - 1];
        if (f > 1) a.torsion.push_back(f);
    }
    return a;
}

} // namespace

TEST_SUITE("complex")
{
    TEST_CASE("Smith normal form on small cases")
    {
        using M = std::vector<std::vector<mpz_class>>;
        CHECK(smith_invariants(M{{2, 0}, {0, 3}}, 2).str() == "Z/6");
        CHECK(smith_invariants(M{{2, 4}, {6, 8}}, 2).str() == "Z/2 + Z/4");
        CHECK(smith_invariants(M{{0, 0}}, 2).str() == "Z^2");
        CHECK(smith_invariants(M{{1, 1}}, 2).is_Z());
        CHECK(smith_invariants(M{{1, 0}, {0, 1}}, 2).str() == "0");
    }

    TEST_CASE("Smith normal form agrees with determinant divisors")
    {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
        for (int trial = 0; trial < 300; ++trial) {
            int rows = dim(rng), cols = dim(rng);
            std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
            for (auto& row : m)
                for (auto& x : row) x = entry(rng);
            auto want = by_minors(m, cols);
            auto got = smith_invariants(m, cols);
            CAPTURE(trial);
            REQUIRE(got == want);
        }
    }

    TEST_CASE("edge classes are the cycles of the relator words")
    {
        for (const auto& c : fx::covers()) {
            CAPTURE(c.file);
            auto s = fx::sig(c);
            auto rep = fx::load(c.file);
            auto cx = build_complex(s, rep);
            for (const auto& rel : relators(s)) {
                CAPTURE(rel.label);
                std::vector<std::vector<int>> cyc = evaluate_word(rep, rel.base).cycles();
                for (auto& v : cyc) std::sort(v.begin(), v.end());
                std::sort(cyc.begin(), cyc.end());
                // the mirrored instance is the one the word walks around; axes have only one
                CHECK(cx.edge_cells(rel.label, true) == cyc);
                CHECK(cx.edge_cells(rel.label, false).size() == cyc.size());
            }
        }
    }

    TEST_CASE("spine invariants on the fixtures")
    {
        for (const auto& c : fx::covers()) {
            CAPTURE(c.file);
            auto s = fx::sig(c);
            auto rep = fx::load(c.file);
            auto cx = build_complex(s, rep);
            auto sp = build_spine(cx);
            auto co = coarsen_spine(sp);
            CHECK(sp.check().empty());
            CHECK(co.check().empty());
            CHECK(sp.euler() == 0);
            CHECK(co.euler() == 0);
            auto full = fundamental_presentation(sp);
            auto coarse = fundamental_presentation(co);
            CHECK(full.n_generators == sp.E() - sp.V() + 1);
            CHECK(static_cast<int>(full.relators.size()) == sp.F());
            auto h = first_homology(full);
            CHECK(h.is_Z());
            CHECK(first_homology(coarse) == h);
            // tree choice does not matter
            for (std::uint64_t seed : {1u, 2u, 3u, 99u})
                CHECK(first_homology(fundamental_presentation(co, seed)) == h);
            CHECK(cover_homology(s, rep) == h);
        }
    }

    TEST_CASE("surfaces of the fixture covers")
    {
        auto r = geodesic_surface(lookup("O333_2"), fx::load("sigma_2_1"));
        CHECK(r.connected());
        CHECK(r.genus[0] == 2);
        CHECK(r.euler[0] == -2);
        // Gauss-Bonnet for a closed hyperbolic surface: area = -2 pi chi
        CHECK(r.area_over_pi == boost::rational<long long>(-2 * r.euler[0]));
    }

    TEST_CASE("non-manifold and invalid reps are refused")
    {
        auto s = lookup("O333_2");
        CHECK_THROWS_AS(geodesic_surface(s, trivial_rep()), Error);
        CHECK_THROWS_AS(build_complex(s, fx::load("sigma_3_1")), Error);
    }
}
