#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace prism {

// Edge labels are 1-based (a1..a9) everywhere.
struct Signature {
    std::array<int, 9> a{};
    std::string name;

    int operator[](int label) const { return a[label - 1]; }
    bool operator==(const Signature& o) const { return a == o.a; }
};

enum class CuspType { C236, C333, C244 };
const char* cusp_type_name(CuspType c);

// Combinatorics of the prism. Vertex 0 is the ideal vertex.
namespace tmpl {

constexpr int n_vertices = 6;
constexpr const char* vertex_names[n_vertices] = {"v_inf", "v1", "v2", "v3", "v4", "v5"};
constexpr int vertex_edges[n_vertices][3] = {
    {1, 2, 5}, {1, 3, 4}, {2, 3, 6}, {4, 7, 9}, {6, 8, 9}, {5, 7, 8}};
// endpoints of edge a_j, indexed by j
constexpr int edge_ends[10][2] = {
    {-1, -1}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {0, 5}, {2, 4}, {3, 5}, {4, 5}, {3, 4}};

constexpr int doubling_face[4] = {1, 4, 5, 7};
// faces 0..3; face 0 and 3 are triangles
constexpr int face_edges[4][4] = {{1, 2, 3, 0}, {3, 4, 6, 9}, {2, 5, 6, 8}, {7, 8, 9, 0}};
constexpr int face_size[4] = {3, 4, 4, 3};
// generator g in {x,y,z,w} pairs face g; its axis is the edge D shares with that face
constexpr int axis_label[4] = {1, 4, 5, 7};

bool face_has(int face, int label);
// Throws std::logic_error if the relator/face incidences disagree.
void self_check();

} // namespace tmpl

// Throws Error(CuspTypeInvalid | VertexNotSpherical | InvalidArgument).
Signature make_signature(const std::array<int, 9>& a, std::string name = {});
CuspType cusp_type(const Signature& s);

struct VertexGroupData {
    int vertex;                      // template vertex 1..5
    boost::rational<long long> nv;   // 1/ai + 1/aj + 1/ak - 1
    long long order;                 // 2/nv
};

struct VertexReport {
    std::vector<VertexGroupData> vertices;
    long long lcm = 1;
};

VertexReport vertex_data(const Signature& s);

// One catalog row. Family rows carry a4 = n.
struct CatalogRow {
    std::string name;          // e.g. "O236_5,n", "O236_6,2k+1", "O333_2"
    std::array<int, 9> a{};    // a4 ignored for families
    bool family = false;
    int min_n = 0;
    int parity = -1;           // -1 any, 0 even, 1 odd
    std::string mcd_formula;   // families only, e.g. "lcm(12,n)"

    Signature instantiate(int n = 0) const;
};

// 40 (2,3,6) rows in table order followed by the 22 (3,3,3) rows.
const std::vector<CatalogRow>& builtin_tables();

// Parity-split family rows (O236_6,2k / O236_6,2k+1 etc), as used by the obstruction tables.
const std::vector<CatalogRow>& family_variants();

// Accepts "O333_2", "O236_5,n" (with n), "O236_6,2k+1" (with n), or
// "O236_5,12" style names with the parameter inline.
Signature lookup(const std::string& name, std::optional<int> n = std::nullopt);

std::string format_line(const Signature& s);
Signature parse_line(const std::string& line);

} // namespace prism
