#include "complex.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <boost/pending/disjoint_sets.hpp>

#include "error.hpp"

namespace prism {

namespace {

// Number classes by first appearance so ids are deterministic.
std::vector<int> class_ids(boost::disjoint_sets_with_storage<>& ds, int n, int& count)
{
    std::vector<int> root_id(n, -1), out(n);
    count = 0;
    for (int i = 0; i < n; ++i) {
        int r = static_cast<int>(ds.find_set(i));
        if (root_id[r] < 0) root_id[r] = count++;
        out[i] = root_id[r];
    }
    return out;
}

int sgn_edge(int s) { return s > 0 ? s - 1 : -s - 1; }

} // namespace

CoverComplex build_complex(const Signature& s, const PermRep& rep)
{
    {
        auto v = validate_rep(s, rep);
        if (!v.ok()) throw Error(Errc::InvalidRep, "representation does not satisfy the presentation");
    }
    using namespace cell;
    CoverComplex cx;
    cx.n = rep.degree();
    cx.sig = s;
    const int n = cx.n;
    cx.glue.resize(n);
    boost::disjoint_sets_with_storage<> de(n * n_edges), dv(n * n_vertices);
    for (int k = 0; k < n; ++k) {
        for (int f = 0; f < 4; ++f) {
            int t = rep.g[face_gen[f]][k];
            cx.glue[k][f] = t;
            int m = face_size[f];
            for (int i = 0; i < m; ++i) {
                int u = face_vertices[f][i], v = face_vertices[f][(i + 1) % m];
                dv.union_set(k * n_vertices + u, t * n_vertices + mirror_vertex(u));
                int e = edge_between(u, v), e2 = edge_between(mirror_vertex(u), mirror_vertex(v));
                de.union_set(k * n_edges + e, t * n_edges + e2);
            }
        }
    }
    cx.edge_class = class_ids(de, n * n_edges, cx.n_edge_classes);
    cx.vertex_class = class_ids(dv, n * n_vertices, cx.n_vertex_classes);
    cx.edge_class_label.assign(cx.n_edge_classes, 0);
    cx.vertex_class_vertex.assign(cx.n_vertex_classes, -1);
    for (int i = 0; i < n * n_edges; ++i) cx.edge_class_label[cx.edge_class[i]] = edges[i % n_edges].label;
    for (int i = 0; i < n * n_vertices; ++i)
        cx.vertex_class_vertex[cx.vertex_class[i]] = template_vertex(i % n_vertices);
    return cx;
}

std::vector<std::vector<int>> CoverComplex::edge_cells(int label, bool mirror) const
{
    int e = cell::edge_id(label, mirror && !cell::is_axis(label));
    std::map<int, std::vector<int>> by;
    for (int k = 0; k < n; ++k) by[edge_of(k, e)].push_back(k);
    std::vector<std::vector<int>> out;
    for (auto& [c, v] : by) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> CoverComplex::vertex_cells(int local_vertex) const
{
    std::map<int, std::vector<int>> by;
    for (int k = 0; k < n; ++k) by[vertex_of(k, local_vertex)].push_back(k);
    std::vector<std::vector<int>> out;
    for (auto& [c, v] : by) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- spine ----

std::string SpineComplex::check() const
{
    auto start = [&](int s) { return s > 0 ? edges[s - 1][0] : edges[-s - 1][1]; };
    auto end = [&](int s) { return s > 0 ? edges[s - 1][1] : edges[-s - 1][0]; };
    for (size_t c = 0; c < cells.size(); ++c) {
        const auto& w = cells[c].word;
        for (size_t i = 0; i < w.size(); ++i) {
            int e = sgn_edge(w[i]);
            if (e < 0 || e >= E()) return "cell " + std::to_string(c) + ": bad edge";
            if (end(w[i]) != start(w[(i + 1) % w.size()]))
                return "cell " + std::to_string(c) + ": boundary does not close up";
        }
    }
    return {};
}

std::string SpineComplex::report() const
{
    std::ostringstream os;
    os << "vertices = " << V() << "\nedges = " << E() << "\ntwo_cells = " << F() << "\neuler = " << euler()
       << '\n';
    for (int e = 0; e < E(); ++e) os << "edge " << e << " : " << edges[e][0] << " -> " << edges[e][1] << '\n';
    for (int c = 0; c < F(); ++c) {
        os << "cell " << c << " [" << cells[c].face1 << "x1-, " << cells[c].face3 << "x3-] :";
        for (int s : cells[c].word) os << ' ' << (s > 0 ? "+" : "-") << sgn_edge(s);
        os << '\n';
    }
    return os.str();
}

SpineComplex build_spine(const CoverComplex& cx)
{
    using namespace cell;
    SpineComplex sp;
    std::vector<int> vid(cx.n_vertex_classes, -1), eid(cx.n_edge_classes, -1);
    for (int c = 0; c < cx.n_vertex_classes; ++c)
        if (cx.vertex_class_vertex[c] != Vinf) vid[c] = sp.n_vertices++;
    static const int compact[] = {3, 4, 6, 7, 8, 9};
    auto is_compact = [](int label) { return std::find(std::begin(compact), std::end(compact), label) != std::end(compact); };
    for (int c = 0; c < cx.n_edge_classes; ++c)
        if (is_compact(cx.edge_class_label[c])) eid[c] = static_cast<int>(sp.edges.size()), sp.edges.push_back({-1, -1});
    for (int k = 0; k < cx.n; ++k)
        for (int e = 0; e < n_edges; ++e) {
            int id = eid[cx.edge_of(k, e)];
            if (id < 0) continue;
            std::array<int, 2> ends{vid[cx.vertex_of(k, edges[e].tail)], vid[cx.vertex_of(k, edges[e].head)]};
            if (sp.edges[id][0] < 0) sp.edges[id] = ends;
            else if (sp.edges[id] != ends) throw std::logic_error("spine: inconsistent edge orientation");
        }
    auto sg = [&](int k, int label, bool mirror, int sign) {
        return sign * (eid[cx.edge_of(k, edge_id(label, mirror))] + 1);
    };
    for (int k = 0; k < cx.n; ++k)
        sp.cells.push_back({{sg(k, 3, true, 1), sg(k, 6, true, 1), sg(k, 9, true, 1), sg(k, 4, false, -1)}, 1, 0});
    for (int k = 0; k < cx.n; ++k)
        sp.cells.push_back({{sg(k, 9, true, -1), sg(k, 8, true, 1), sg(k, 7, false, -1)}, 0, 1});
    return sp;
}

namespace {

// rotation of w starting at index pos
std::vector<int> rotate_from(const std::vector<int>& w, size_t pos)
{
    std::vector<int> r;
    r.reserve(w.size());
    for (size_t i = 0; i < w.size(); ++i) r.push_back(w[(pos + i) % w.size()]);
    return r;
}

std::vector<int> invert_word(const std::vector<int>& w)
{
    std::vector<int> r(w.rbegin(), w.rend());
    for (int& s : r) s = -s;
    return r;
}

} // namespace

SpineComplex coarsen_spine(const SpineComplex& sp)
{
    std::vector<SpineCell> cells = sp.cells;
    std::vector<char> cell_alive(cells.size(), 1), edge_alive(sp.edges.size(), 1);
    const int E = sp.E();
    for (;;) {
        std::vector<std::vector<std::pair<int, int>>> occ(E);
        for (size_t c = 0; c < cells.size(); ++c) {
            if (!cell_alive[c]) continue;
            for (size_t i = 0; i < cells[c].word.size(); ++i)
                occ[sgn_edge(cells[c].word[i])].push_back({static_cast<int>(c), static_cast<int>(i)});
        }
        std::vector<int> degree(sp.n_vertices, 0);
        for (int e = 0; e < E; ++e)
            if (edge_alive[e]) ++degree[sp.edges[e][0]], ++degree[sp.edges[e][1]];

        bool progress = false;
        for (int e = 0; e < E && !progress; ++e) {
            if (!edge_alive[e] || occ[e].size() != 2) continue;
            auto [c1, p1] = occ[e][0];
            auto [c2, p2] = occ[e][1];
            if (c1 != c2) {
                const auto& wa = cells[c1].word;
                const auto& wb = cells[c2].word;
                auto a = rotate_from(wa, (p1 + 1) % wa.size());  // alpha e^sa
                auto b = rotate_from(wb, p2);                     // e^sb beta
                if ((a.back() > 0) == (b.front() > 0)) b = rotate_from(invert_word(wb), wb.size() - 1 - p2);
                if (a.size() + b.size() == 2) continue;  // would leave an empty boundary
                std::vector<int> w(a.begin(), a.end() - 1);
                w.insert(w.end(), b.begin() + 1, b.end());
                cells[c1].word = std::move(w);
                cells[c1].face1 += cells[c2].face1;
                cells[c1].face3 += cells[c2].face3;
                cell_alive[c2] = 0;
                edge_alive[e] = 0;
                progress = true;
            } else {
                auto& w = cells[c1].word;
                int len = static_cast<int>(w.size());
                int first = -1;
                if ((p1 + 1) % len == p2) first = p1;
                else if ((p2 + 1) % len == p1) first = p2;
                if (first < 0 || len <= 2 || w[first] != -w[(first + 1) % len]) continue;
                int s = w[first];
                int tip = s > 0 ? sp.edges[e][1] : sp.edges[e][0];
                if (degree[tip] != 1) continue;
                int second = (first + 1) % len;
                std::vector<int> nw;
                for (int i = 0; i < len; ++i)
                    if (i != first && i != second) nw.push_back(w[i]);
                w = std::move(nw);
                edge_alive[e] = 0;
                progress = true;
            }
        }
        if (!progress) break;
    }

    SpineComplex out;
    std::vector<int> vmap(sp.n_vertices, -1), emap(E, -1);
    for (int e = 0; e < E; ++e)
        if (edge_alive[e])
            for (int v : sp.edges[e]) vmap[v] = 0;
    for (int v = 0; v < sp.n_vertices; ++v)
        if (vmap[v] == 0) vmap[v] = out.n_vertices++;
    for (int e = 0; e < E; ++e)
        if (edge_alive[e]) {
            emap[e] = out.E();
            out.edges.push_back({vmap[sp.edges[e][0]], vmap[sp.edges[e][1]]});
        }
    for (size_t c = 0; c < cells.size(); ++c) {
        if (!cell_alive[c]) continue;
        SpineCell nc = cells[c];
        for (int& s : nc.word) s = s > 0 ? emap[s - 1] + 1 : -(emap[-s - 1] + 1);
        out.cells.push_back(std::move(nc));
    }
    return out;
}

// ---- presentation and homology ----

std::string Presentation::report() const
{
    std::ostringstream os;
    os << "generators = " << n_generators << "\nrelators = " << relators.size() << '\n';
    for (const auto& r : relators) {
        os << "  ";
        if (r.empty()) os << "1";
        for (size_t i = 0; i < r.size(); ++i)
            os << (i ? " " : "") << 'g' << (std::abs(r[i]) - 1) << (r[i] < 0 ? "^-1" : "");
        os << '\n';
    }
    return os.str();
}

Presentation fundamental_presentation(const SpineComplex& sp, std::optional<std::uint64_t> seed)
{
    const int V = sp.V(), E = sp.E();
    std::vector<std::vector<int>> adj(V);
    for (int e = 0; e < E; ++e) {
        adj[sp.edges[e][0]].push_back(e);
        if (sp.edges[e][1] != sp.edges[e][0]) adj[sp.edges[e][1]].push_back(e);
    }
    int root = 0;
    if (seed) {
        std::mt19937_64 rng(*seed);
        for (auto& a : adj) std::shuffle(a.begin(), a.end(), rng);
        if (V > 0) root = static_cast<int>(rng() % V);
    }
    std::vector<char> seen(V, 0), tree(E, 0);
    std::vector<int> queue;
    if (V > 0) {
        seen[root] = 1;
        queue.push_back(root);
    }
    for (size_t i = 0; i < queue.size(); ++i) {
        int u = queue[i];
        for (int e : adj[u]) {
            int v = sp.edges[e][0] == u ? sp.edges[e][1] : sp.edges[e][0];
            if (!seen[v]) {
                seen[v] = 1;
                tree[e] = 1;
                queue.push_back(v);
            }
        }
    }
    if (static_cast<int>(queue.size()) != V) throw Error(Errc::DisconnectedSpine, "spine 1-skeleton is disconnected");
    Presentation p;
    std::vector<int> gen(E, -1);
    for (int e = 0; e < E; ++e)
        if (!tree[e]) gen[e] = p.n_generators++;
    for (const auto& c : sp.cells) {
        std::vector<int> r;
        for (int s : c.word) {
            int g = gen[sgn_edge(s)];
            if (g >= 0) r.push_back(s > 0 ? g + 1 : -(g + 1));
        }
        p.relators.push_back(std::move(r));
    }
    return p;
}

std::string AbelianGroup::str() const
{
    std::string s;
    if (rank == 1) s = "Z";
    else if (rank > 1) s = "Z^" + std::to_string(rank);
    for (const auto& d : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
    return s.empty() ? "0" : s;
}

AbelianGroup smith_invariants(std::vector<std::vector<mpz_class>> a, int n_cols)
{
    const int R = static_cast<int>(a.size()), C = n_cols;
    for (auto& row : a) row.resize(C);
    int t = 0;
    std::vector<mpz_class> diag;
    while (t < R && t < C) {
        // pivot: smallest nonzero magnitude in the trailing block
        int pr = -1, pc = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j)
                if (a[i][j] != 0 && (pr < 0 || abs(a[i][j]) < abs(a[pr][pc]))) pr = i, pc = j;
        if (pr < 0) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (a[i][t] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (int j = t; j < C; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < C; ++j) {
                if (a[t][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (int i = t; i < R; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility of the trailing block
            for (int i = t + 1; i < R && clean; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (int k = t; k < C; ++k) a[t][k] += a[i][k];
                        clean = false;
                        break;
                    }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    AbelianGroup g;
    g.rank = C - static_cast<int>(diag.size());
    for (auto& d : diag)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

AbelianGroup first_homology(const Presentation& p)
{
    std::vector<std::vector<mpz_class>> m;
    for (const auto& r : p.relators) {
        std::vector<mpz_class> row(p.n_generators);
        for (int s : r) row[std::abs(s) - 1] += s > 0 ? 1 : -1;
        m.push_back(std::move(row));
    }
    return smith_invariants(std::move(m), p.n_generators);
}

AbelianGroup cover_homology(const Signature& s, const PermRep& rep)
{
    return first_homology(fundamental_presentation(coarsen_spine(build_spine(build_complex(s, rep)))));
}

// ---- totally geodesic surface ----

SurfaceReport geodesic_surface(const Signature& s, const PermRep& rep)
{
    if (!validate_rep(s, rep).ok()) throw Error(Errc::InvalidRep, "representation does not satisfy the presentation");
    if (!is_manifold(s, rep).manifold) throw Error(Errc::NotAManifold, "cover is not a manifold");
    SurfaceReport r;
    auto comps = orbits(rep.degree(), {&rep.g[Y], &rep.g[Z]});
    Perm zy = evaluate_word(rep, {{Z, -1}, {Y, 1}});
    std::vector<int> comp_of(rep.degree());
    for (size_t c = 0; c < comps.size(); ++c)
        for (int k : comps[c]) comp_of[k] = static_cast<int>(c);
    std::vector<int> verts(comps.size(), 0);
    for (const Perm* p : std::array<const Perm*, 3>{&rep.g[Y], &rep.g[Z], &zy})
        for (const auto& cyc : p->cycles()) ++verts[comp_of[cyc.front()]];
    r.components = static_cast<int>(comps.size());
    const boost::rational<long long> piece =
        2 * (boost::rational<long long>(1) - boost::rational<long long>(1, s[4]) -
             boost::rational<long long>(1, s[5]) - boost::rational<long long>(1, s[6]));
    for (size_t c = 0; c < comps.size(); ++c) {
        int m = static_cast<int>(comps[c].size());
        int chi = verts[c] - m;  // V - E + F with E = 2m, F = m
        r.component_sizes.push_back(m);
        r.euler.push_back(chi);
        r.genus.push_back(1 - chi / 2);
        r.area_over_pi += piece * m;
    }
    r.separating_guaranteed = !(s[7] == 2 && s[8] == 2 && s[9] == 2);
    return r;
}

} // namespace prism
