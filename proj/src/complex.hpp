#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <gmpxx.h>

#include "catalog.hpp"
#include "cell.hpp"
#include "perm.hpp"

namespace prism {

struct CoverComplex {
    int n = 0;
    Signature sig;
    // glue[k][f]: cell whose face f- meets face f of cell k
    std::vector<std::array<int, 4>> glue;
    // instance index k*14+e (edges) and k*8+v (vertices) -> class id
    std::vector<int> edge_class;
    std::vector<int> vertex_class;
    int n_edge_classes = 0;
    int n_vertex_classes = 0;
    std::vector<int> edge_class_label;    // label a_j of each edge class
    std::vector<int> vertex_class_vertex; // template vertex (0..5) of each vertex class

    int edge_of(int cell, int local) const { return edge_class[cell * cell::n_edges + local]; }
    int vertex_of(int cell, int local) const { return vertex_class[cell * cell::n_vertices + local]; }

    // Cells of each class of label j, restricted to one side (mirror or plain). Sorted.
    std::vector<std::vector<int>> edge_cells(int label, bool mirror) const;
    // Cells carrying an instance of the local vertex v, grouped by class. Sorted.
    std::vector<std::vector<int>> vertex_cells(int local_vertex) const;
};

CoverComplex build_complex(const Signature& s, const PermRep& rep);

// Signed edge: +(e+1) for e traversed tail->head, -(e+1) otherwise.
struct SpineCell {
    std::vector<int> word;
    int face1 = 0;  // copies of face 1- merged into this cell
    int face3 = 0;  // copies of face 3-
};

struct SpineComplex {
    int n_vertices = 0;
    std::vector<std::array<int, 2>> edges;  // tail, head
    std::vector<SpineCell> cells;

    int V() const { return n_vertices; }
    int E() const { return static_cast<int>(edges.size()); }
    int F() const { return static_cast<int>(cells.size()); }
    int euler() const { return V() - E() + F(); }
    // empty if every boundary word chains head-to-tail
    std::string check() const;
    std::string report() const;
};

SpineComplex build_spine(const CoverComplex& cx);
SpineComplex coarsen_spine(const SpineComplex& sp);

struct Presentation {
    int n_generators = 0;
    std::vector<std::vector<int>> relators;  // signed generators, +(g+1) / -(g+1)
    std::string report() const;
};

// BFS tree from vertex 0; seed != nullopt shuffles the edge order.
Presentation fundamental_presentation(const SpineComplex& sp, std::optional<std::uint64_t> seed = std::nullopt);

struct AbelianGroup {
    int rank = 0;
    std::vector<mpz_class> torsion;  // d1 | d2 | ..., each > 1

    bool is_Z() const { return rank == 1 && torsion.empty(); }
    std::string str() const;  // "Z", "Z^2 + Z/3", "Z/2 + Z/4", "0"
    bool operator==(const AbelianGroup& o) const { return rank == o.rank && torsion == o.torsion; }
};

AbelianGroup smith_invariants(std::vector<std::vector<mpz_class>> m, int n_cols);
AbelianGroup first_homology(const Presentation& p);
// Full pipeline: complex, spine, coarse spine, presentation, SNF.
AbelianGroup cover_homology(const Signature& s, const PermRep& rep);

struct SurfaceReport {
    int components = 0;
    std::vector<int> component_sizes;   // cells per component
    std::vector<int> euler;             // per component
    std::vector<int> genus;             // per component
    boost::rational<long long> area_over_pi;  // total
    bool separating_guaranteed = false;
    bool connected() const { return components == 1; }
};

SurfaceReport geodesic_surface(const Signature& s, const PermRep& rep);

} // namespace prism
