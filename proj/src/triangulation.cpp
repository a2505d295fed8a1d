#include "triangulation.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/pending/disjoint_sets.hpp>

#include "cell.hpp"
#include "error.hpp"

namespace prism {

namespace {

using namespace cell;

// Subdivision of one doubled prism. D is cut along v1-v5, face 1 along v1-v4,
// face 2 along v_inf-v4 (and the mirrored diagonals).
constexpr int tet_labels[6][4] = {
    {V3, V5, V4m, V1}, {V1, V5, V4m, Vinf}, {V1, V2m, V4m, Vinf},
    {V3, V5, V4, V1},  {V1, V5, V4, Vinf},  {V1, V2, V4, Vinf},
};

// which prism face (0..3) or its mirror contains the three labels; -1 if interior
std::pair<int, bool> boundary_face(const std::array<int, 3>& lab)
{
    for (int f = 0; f < 4; ++f)
        for (int mirror = 0; mirror < 2; ++mirror) {
            int hit = 0;
            for (int v : lab)
                for (int i = 0; i < face_size[f]; ++i) {
                    int fv = mirror ? mirror_vertex(face_vertices[f][i]) : face_vertices[f][i];
                    if (fv == v) ++hit;
                }
            if (hit == 3) return {f, mirror != 0};
        }
    return {-1, false};
}

std::array<int, 3> face_labels(int t, int f)
{
    return {tet_labels[t][tet_face_vertices[f][0]], tet_labels[t][tet_face_vertices[f][1]],
            tet_labels[t][tet_face_vertices[f][2]]};
}

// local tet (0..5) and face whose label set equals lab (excluding one tet/face)
std::pair<int, int> find_face(const std::array<int, 3>& lab, int skip_t, int skip_f)
{
    std::array<int, 3> want = lab;
    std::sort(want.begin(), want.end());
    for (int t = 0; t < 6; ++t)
        for (int f = 0; f < 4; ++f) {
            if (t == skip_t && f == skip_f) continue;
            auto l = face_labels(t, f);
            std::sort(l.begin(), l.end());
            if (l == want) return {t, f};
        }
    return {-1, -1};
}

FaceGluing make_gluing(int src_t, int src_f, int dst_global, int dst_t, int dst_f, bool mirror_labels)
{
    FaceGluing g;
    g.tet = dst_global;
    for (int i = 0; i < 3; ++i) {
        int v = tet_face_vertices[src_f][i];
        int lab = tet_labels[src_t][v];
        if (mirror_labels) lab = mirror_vertex(lab);
        int j = std::find(tet_labels[dst_t], tet_labels[dst_t] + 4, lab) - tet_labels[dst_t];
        g.perm[v] = j;
    }
    g.perm[3 - src_f] = 3 - dst_f;
    return g;
}

} // namespace

TriangulationData triangulate(const Signature& s, const PermRep& rep)
{
    if (!validate_rep(s, rep).ok()) throw Error(Errc::InvalidRep, "representation does not satisfy the presentation");
    const int n = rep.degree();
    TriangulationData td;
    td.n_tets = 6 * n;
    td.gluing.resize(td.n_tets);
    td.labels.resize(td.n_tets);
    std::array<Perm, 4> inv;
    for (int g = 0; g < 4; ++g) inv[g] = rep.g[g].inverse();
    for (int k = 0; k < n; ++k)
        for (int t = 0; t < 6; ++t) {
            std::copy(tet_labels[t], tet_labels[t] + 4, td.labels[6 * k + t].begin());
            for (int f = 0; f < 4; ++f) {
                auto lab = face_labels(t, f);
                auto [pf, mirror] = boundary_face(lab);
                if (pf < 0) {
                    auto [u, uf] = find_face(lab, t, f);
                    if (u < 0) throw std::logic_error("triangulation: unmatched interior face");
                    td.gluing[6 * k + t][f] = make_gluing(t, f, 6 * k + u, u, uf, false);
                } else {
                    // face f of cell k meets f- of s_f(k); f- of cell k meets f of s_f^-1(k)
                    int other = mirror ? inv[face_gen[pf]][k] : rep.g[face_gen[pf]][k];
                    std::array<int, 3> ml{mirror_vertex(lab[0]), mirror_vertex(lab[1]), mirror_vertex(lab[2])};
                    auto [u, uf] = find_face(ml, -1, -1);
                    if (u < 0) throw std::logic_error("triangulation: unmatched boundary face");
                    td.gluing[6 * k + t][f] = make_gluing(t, f, 6 * other + u, u, uf, true);
                }
            }
        }
    // vertex classes
    boost::disjoint_sets_with_storage<> ds(4 * td.n_tets);
    for (int t = 0; t < td.n_tets; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& g = td.gluing[t][f];
            for (int i = 0; i < 3; ++i) {
                int v = tet_face_vertices[f][i];
                ds.union_set(4 * t + v, 4 * g.tet + g.perm[v]);
            }
        }
    std::set<int> ideal, finite;
    for (int t = 0; t < td.n_tets; ++t)
        for (int v = 0; v < 4; ++v)
            (td.labels[t][v] == Vinf ? ideal : finite).insert(static_cast<int>(ds.find_set(4 * t + v)));
    for (int r : ideal)
        if (finite.count(r)) throw std::logic_error("triangulation: ideal and finite vertices identified");
    td.ideal_classes = static_cast<int>(ideal.size());
    td.finite_classes = static_cast<int>(finite.size());
    return td;
}

TriangulationReport validate_triangulation(const TriangulationData& t, int expected_cusps)
{
    TriangulationReport r;
    auto where = [](int tet, int f) {
        return "tet " + std::to_string(tet) + " face " + std::to_string(f);
    };
    if (static_cast<int>(t.gluing.size()) != t.n_tets) r.problems.push_back("gluing table size differs from tet count");
    for (int a = 0; a < static_cast<int>(t.gluing.size()); ++a)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing[a][f];
            if (g.tet < 0 || g.tet >= t.n_tets) {
                r.problems.push_back(where(a, f) + ": unglued");
                continue;
            }
            std::array<int, 4> chk = g.perm;
            std::sort(chk.begin(), chk.end());
            if (chk != std::array<int, 4>{0, 1, 2, 3}) {
                r.problems.push_back(where(a, f) + ": not a permutation");
                continue;
            }
            int bf = 3 - g.perm[3 - f];
            if (g.tet == a && bf == f) {
                r.problems.push_back(where(a, f) + ": glued to itself");
                continue;
            }
            const auto& back = t.gluing[g.tet][bf];
            bool inv = back.tet == a;
            for (int v = 0; v < 4 && inv; ++v) inv = back.perm[g.perm[v]] == v;
            if (!inv) r.problems.push_back(where(a, f) + ": gluing is not an involution (partner " + where(g.tet, bf) + ")");
        }
    if (expected_cusps >= 0 && t.ideal_classes != expected_cusps)
        r.problems.push_back("ideal vertex classes " + std::to_string(t.ideal_classes) + " != cusps " +
                             std::to_string(expected_cusps));
    return r;
}

std::string block_table(const TriangulationData& t, int block)
{
    std::ostringstream os;
    for (int i = 0; i < 6; ++i) {
        int a = 6 * block + i;
        os << (i ? "6k+" + std::to_string(i) : std::string("6k")) << ':';
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing[a][f];
            os << ' ';
            if (g.tet < 0 || boundary_face(face_labels(i, f)).first >= 0) {
                os << '-';
                continue;
            }
            // digits are the images of the face's own vertices
            os << (g.tet % 6 ? "6k+" + std::to_string(g.tet % 6) : std::string("6k")) << '(';
            for (int j = 0; j < 3; ++j) os << g.perm[tet_face_vertices[f][j]];
            os << ')';
        }
        os << '\n';
    }
    return os.str();
}

std::string export_gluing_table(const TriangulationData& t)
{
    std::ostringstream os;
    os << "ntet " << t.n_tets << '\n';
    for (int a = 0; a < t.n_tets; ++a) {
        os << "tet " << a << " :";
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing[a][f];
            if (g.tet < 0) {
                os << " (-,----)";
                continue;
            }
            os << " (" << g.tet << ',';
            for (int v : g.perm) os << v;
            os << ')';
        }
        os << '\n';
    }
    return os.str();
}

TriangulationData parse_gluing_table(std::istream& in)
{
    TriangulationData t;
    std::string word;
    if (!(in >> word >> t.n_tets) || word != "ntet" || t.n_tets < 0)
        throw Error(Errc::Parse, "gluing table must start with 'ntet N'");
    t.gluing.resize(t.n_tets);
    std::string line;
    std::getline(in, line);
    for (int a = 0; a < t.n_tets; ++a) {
        if (!std::getline(in, line)) throw Error(Errc::Parse, "gluing table truncated");
        std::istringstream is(line);
        int idx = -1;
        std::string colon;
        if (!(is >> word >> idx >> colon) || word != "tet" || idx != a || colon != ":")
            throw Error(Errc::Parse, "bad line for tet " + std::to_string(a));
        for (int f = 0; f < 4; ++f) {
            std::string tok;
            if (!(is >> tok) || tok.size() < 5 || tok.front() != '(' || tok.back() != ')')
                throw Error(Errc::Parse, "bad face entry for tet " + std::to_string(a));
            auto comma = tok.find(',');
            if (comma == std::string::npos) throw Error(Errc::Parse, "bad face entry for tet " + std::to_string(a));
            std::string ts = tok.substr(1, comma - 1), ps = tok.substr(comma + 1, tok.size() - comma - 2);
            if (ts == "-") continue;
            if (ps.size() != 4) throw Error(Errc::Parse, "face permutation needs four digits");
            FaceGluing g;
            try {
                g.tet = std::stoi(ts);
            } catch (const std::exception&) {
                throw Error(Errc::Parse, "bad tet index '" + ts + "'");
            }
            for (int i = 0; i < 4; ++i) {
                if (ps[i] < '0' || ps[i] > '3') throw Error(Errc::Parse, "bad permutation digit");
                g.perm[i] = ps[i] - '0';
            }
            t.gluing[a][f] = g;
        }
    }
    return t;
}

} // namespace prism
