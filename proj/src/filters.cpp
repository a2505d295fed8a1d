#include "filters.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "complex.hpp"
#include "error.hpp"

namespace prism {

IsotropyGraph IsotropyGraph::from_signature(const Signature& s)
{
    IsotropyGraph g;
    g.alive.assign(tmpl::n_vertices, 1);
    for (int j = 1; j <= 9; ++j) g.edges.push_back({tmpl::edge_ends[j][0], tmpl::edge_ends[j][1], s[j]});
    return g;
}

int IsotropyGraph::degree(int v) const
{
    int d = 0;
    for (const auto& e : edges) d += (e.u == v) + (e.v == v);
    return d;
}

CuspKillResult cusp_killing(const Signature& s, std::optional<std::uint64_t> shuffle_seed)
{
    CuspKillResult res;
    IsotropyGraph g = IsotropyGraph::from_signature(s);
    std::mt19937_64 rng(shuffle_seed.value_or(0));
    // peripheral torsion: the three edges at the cusp
    g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(), [](const GraphEdge& e) { return e.u == 0 || e.v == 0; }),
                  g.edges.end());
    res.trace.push_back("erase cusp edges a1 a2 a5");
    const int nv = static_cast<int>(g.alive.size());
    for (;;) {
        auto before = g.edges.size();
        g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(), [](const GraphEdge& e) { return e.label == 1; }),
                      g.edges.end());
        if (g.edges.size() != before) res.trace.push_back("delete edges labelled 1");
        for (int v = 0; v < nv; ++v)
            if (g.alive[v] && g.degree(v) == 0) g.alive[v] = 0;

        std::vector<int> cand;
        for (int v = 0; v < nv; ++v) {
            if (!g.alive[v]) continue;
            int d = g.degree(v);
            bool loop = std::any_of(g.edges.begin(), g.edges.end(), [&](const GraphEdge& e) { return e.u == v && e.v == v; });
            if (d == 1 || (d == 2 && !loop)) cand.push_back(v);
        }
        if (cand.empty()) break;
        int v = shuffle_seed ? cand[rng() % cand.size()] : cand.front();
        std::vector<size_t> inc;
        for (size_t i = 0; i < g.edges.size(); ++i)
            if (g.edges[i].u == v || g.edges[i].v == v) inc.push_back(i);
        std::string vn = tmpl::vertex_names[v];
        if (inc.size() == 1) {
            // the other two generators at v are already trivial
            res.trace.push_back("leaf " + vn + ": drop edge labelled " + std::to_string(g.edges[inc[0]].label));
            g.edges.erase(g.edges.begin() + inc[0]);
        } else {
            const auto a = g.edges[inc[0]], b = g.edges[inc[1]];
            int p = a.u == v ? a.v : a.u, q = b.u == v ? b.v : b.u;
            int l = std::gcd(a.label, b.label);
            res.trace.push_back("merge at " + vn + ": " + std::to_string(a.label) + ", " + std::to_string(b.label) +
                                " -> " + std::to_string(l));
            g.edges.erase(g.edges.begin() + inc[1]);
            g.edges.erase(g.edges.begin() + inc[0]);
            g.edges.push_back({std::min(p, q), std::max(p, q), l});
        }
        g.alive[v] = 0;
    }
    res.trivial = g.edges.empty();
    res.residual = std::move(g);
    return res;
}

DoubleCoverResult double_cover_exists(const Signature& s)
{
    if (cusp_type(s) != CuspType::C236) throw Error(Errc::NotA236Cusp, "double-cover test needs a (2,3,6) cusp");
    DoubleCoverResult r;
    std::set<std::vector<int>> found;
    for (int mask = 0; mask < 512; ++mask) {
        auto neg = [&](int j) { return (mask >> (j - 1)) & 1; };
        bool ok = true;
        for (int j : {1, 2, 5}) {
            bool want = s[j] == 2 || s[j] == 6;
            if (neg(j) != want) ok = false;
        }
        for (int j = 1; j <= 9 && ok; ++j)
            if (neg(j) && s[j] % 2) ok = false;
        if (!ok) continue;
        int deg[tmpl::n_vertices] = {};
        for (int j = 1; j <= 9; ++j)
            if (neg(j)) ++deg[tmpl::edge_ends[j][0]], ++deg[tmpl::edge_ends[j][1]];
        if (std::any_of(std::begin(deg), std::end(deg), [](int d) { return d != 0 && d != 2; })) continue;
        // negative edges form disjoint cycles; take the one through the cusp
        std::vector<int> cyc;
        std::vector<char> seen(tmpl::n_vertices, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int j = 1; j <= 9; ++j) {
                if (!neg(j)) continue;
                int a = tmpl::edge_ends[j][0], b = tmpl::edge_ends[j][1];
                if (a != u && b != u) continue;
                if (std::find(cyc.begin(), cyc.end(), j) == cyc.end()) cyc.push_back(j);
                int o = a == u ? b : a;
                if (!seen[o]) seen[o] = 1, stack.push_back(o);
            }
        }
        std::sort(cyc.begin(), cyc.end());
        found.insert(cyc);
    }
    r.witnesses.assign(found.begin(), found.end());
    r.exists = !r.witnesses.empty();
    return r;
}

PrefilterReport prefilter(const Signature& s)
{
    PrefilterReport p;
    p.ck_trivial = cusp_killing(s).trivial;
    if (!p.ck_trivial) p.reasons.push_back("CK: cusp-killing quotient is nontrivial");
    if (cusp_type(s) == CuspType::C236) {
        p.dc = double_cover_exists(s).exists ? DcStatus::Exists : DcStatus::Absent;
        if (p.dc == DcStatus::Absent) p.reasons.push_back("DC: no (3,3,3)-cusped double cover");
    }
    p.mcd = vertex_data(s).lcm;
    p.eliminated = !p.reasons.empty();
    return p;
}

FilterResult filter_covers(const Signature& s, const std::vector<PermRep>& reps, int workers)
{
    // 0 rejected as non-manifold, 1 multi-cusped, 2 bad homology, 3 survivor
    std::vector<int> stage(reps.size(), 0);
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < reps.size();) {
            const auto& r = reps[i];
            if (!validate_rep(s, r).ok() || !is_manifold(s, r).manifold) continue;
            stage[i] = 1;
            if (cusp_orbits(r).size() != 1) continue;
            stage[i] = 2;
            if (!cover_homology(s, r).is_Z()) continue;
            stage[i] = 3;
        }
    };
    workers = std::max(1, workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    FilterResult f;
    f.input = reps.size();
    for (size_t i = 0; i < reps.size(); ++i) {
        f.manifold += stage[i] >= 1;
        f.one_cusp += stage[i] >= 2;
        f.homology_z += stage[i] >= 3;
        if (stage[i] == 3) {
            f.survivors.push_back(reps[i]);
            f.survivor_index.push_back(i);
        }
    }
    return f;
}

} // namespace prism
