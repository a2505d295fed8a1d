#pragma once

// Local structure of one doubled-prism cell: the prism P and its mirror
// image across D. v1, v3, v5, v_inf lie on D and exist once; v2, v4 have
// mirror copies.

#include <array>

#include "perm.hpp"

namespace prism::cell {

enum V : int { Vinf = 0, V1, V2, V3, V4, V5, V2m, V4m };
constexpr int n_vertices = 8;
constexpr const char* vertex_names[n_vertices] = {"v_inf", "v1", "v2", "v3", "v4", "v5", "v2'", "v4'"};

constexpr int mirror_vertex(int v)
{
    return v == V2 ? V2m : v == V2m ? V2 : v == V4 ? V4m : v == V4m ? V4 : v;
}
constexpr int template_vertex(int v) { return v == V2m ? V2 : v == V4m ? V4 : v; }

struct EdgeDef {
    int label;
    bool mirror;
    int tail, head;
};

constexpr int n_edges = 14;
constexpr std::array<EdgeDef, n_edges> edges = {{
    {1, false, Vinf, V1},
    {2, false, Vinf, V2},
    {3, false, V1, V2},
    {4, false, V1, V3},
    {5, false, Vinf, V5},
    {6, false, V2, V4},
    {7, false, V3, V5},
    {8, false, V4, V5},
    {9, false, V4, V3},
    {2, true, Vinf, V2m},
    {3, true, V1, V2m},
    {6, true, V2m, V4m},
    {8, true, V4m, V5},
    {9, true, V4m, V3},
}};

constexpr int edge_between(int u, int v)
{
    for (int e = 0; e < n_edges; ++e)
        if ((edges[e].tail == u && edges[e].head == v) || (edges[e].tail == v && edges[e].head == u))
            return e;
    return -1;
}

constexpr int edge_id(int label, bool mirror)
{
    for (int e = 0; e < n_edges; ++e)
        if (edges[e].label == label && edges[e].mirror == mirror) return e;
    return -1;
}

constexpr bool is_axis(int label) { return label == 1 || label == 4 || label == 5 || label == 7; }

// Face f of the prism; its mirror f- uses mirror_vertex on every vertex.
constexpr int face_size[4] = {3, 4, 4, 3};
constexpr int face_vertices[4][4] = {
    {Vinf, V1, V2, -1},
    {V1, V2, V4, V3},
    {Vinf, V2, V4, V5},
    {V3, V4, V5, -1},
};
// face f is paired by generator f: face f of cell k meets face f- of cell s_f(k)
constexpr Gen face_gen[4] = {X, Y, Z, W};

} // namespace prism::cell
