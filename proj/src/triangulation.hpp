#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "perm.hpp"

namespace prism {

// Faces of a tetrahedron in the order 012, 013, 023, 123; face f is opposite vertex 3-f.
constexpr int tet_face_vertices[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

struct FaceGluing {
    int tet = -1;                 // -1: unglued
    std::array<int, 4> perm{};    // images of vertices 0..3
    bool operator==(const FaceGluing& o) const { return tet == o.tet && (tet < 0 || perm == o.perm); }
};

struct TriangulationData {
    int n_tets = 0;
    std::vector<std::array<FaceGluing, 4>> gluing;
    // cell-local vertex label of each tet vertex; empty when parsed from text
    std::vector<std::array<int, 4>> labels;
    int ideal_classes = -1;
    int finite_classes = -1;

    bool same_gluings(const TriangulationData& o) const { return n_tets == o.n_tets && gluing == o.gluing; }
};

// Tetrahedra 6k..6k+5 subdivide cell k; 6k+3.. mirror 6k.. across D.
TriangulationData triangulate(const Signature& s, const PermRep& rep);

struct TriangulationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// expected_cusps < 0 skips the ideal-class comparison.
TriangulationReport validate_triangulation(const TriangulationData& t, int expected_cusps = -1);

// Internal gluings of one block of six, in the table layout (target tet offset, face-image digits).
std::string block_table(const TriangulationData& t, int block = 0);

std::string export_gluing_table(const TriangulationData& t);
TriangulationData parse_gluing_table(std::istream& in);

} // namespace prism
