#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "catalog.hpp"
#include "perm.hpp"

namespace prism {

using cplx = std::complex<double>;

struct EmbeddingGeometry {
    int a3 = 0;                 // 2 or 3
    double y1 = 0, y2 = 0;      // a3 == 2: boundary vertices at i*y1, i*y2
    cplx z1, z2;                // both cases (z = i*y for a3 == 2)
    double sA = 0, sB = 0, tA = 0, tB = 0;
    double qa = 0, qb = 0, qc = 0;  // qa r^2 + qb r + qc = 0
    double s = 0, t = 0, r = 0;     // compact-face hemisphere: center s+it, radius r
    std::array<Eigen::Matrix2cd, 4> M;    // M1..M4
    std::array<Eigen::Matrix2cd, 4> rho;  // images of x,y,z,w, det 1

    double equation_residual() const;  // |s^2+t^2-1-r^2-2r cos(pi/a9)| etc.
};

// Throws Error(UnsupportedA3 | NoPositiveRoot).
EmbeddingGeometry embed(const Signature& s);

Eigen::Matrix2cd matrix_of(const EmbeddingGeometry& g, const Word& w);
// distance of the normalized product from +-I
double power_residual(const Eigen::Matrix2cd& m, int exp);
std::array<double, 9> relator_residuals(const EmbeddingGeometry& g, const Signature& s);
double verify_matrix_rep(const EmbeddingGeometry& g, const Signature& s);

struct CuspData {
    double height = 1;
    std::optional<double> volume;  // (3,3,3), a3 = 2, r <= 1 only
};

CuspData maximal_cusp(const Signature& s, const EmbeddingGeometry& g);
double cusp_volume(const Signature& s, const EmbeddingGeometry& g);  // throws CuspVolumeUnsupported

struct VolumeResult {
    std::array<double, 4> region{};
    double total = 0;
    double error = 0;
    double Xl = 0, Xu = 0, xmax = 0;
};

// Four single-variable integrals; throws UnsupportedSignature or QuadratureNonconvergent.
VolumeResult prism_volume(const Signature& s, const EmbeddingGeometry& g, double tol = 1e-12);

std::string geometry_report(const Signature& s, const EmbeddingGeometry& g);

} // namespace prism
