#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "error.hpp"

namespace prism {

namespace {

constexpr double pi = 3.14159265358979323846;

Eigen::Matrix2cd mat(cplx a, cplx b, cplx c, cplx d)
{
    Eigen::Matrix2cd m;
    m << a, b, c, d;
    return m;
}

Eigen::Matrix2cd normalized(const Eigen::Matrix2cd& m)
{
    return m / std::sqrt(m.determinant());
}

} // namespace

double EmbeddingGeometry::equation_residual() const
{
    // linear rows are satisfied by construction; report them anyway
    double c9 = sA * sB + tA * tB - qb / 2;  // recovers cos(pi/a9)
    double lin = std::max(std::abs(s - (sA * r + sB)), std::abs(t - (tA * r + tB)));
    double quad = std::abs(s * s + t * t - 1 - r * r - 2 * r * c9);
    double poly = std::abs(qa * r * r + qb * r + qc);
    return std::max({lin, quad, poly});
}

EmbeddingGeometry embed(const Signature& sig)
{
    EmbeddingGeometry g;
    g.a3 = sig[3];
    if (g.a3 != 2 && g.a3 != 3) throw Error(Errc::UnsupportedA3, "embedding needs a3 in {2,3}");
    auto th = [&](int j) { return pi / sig[j]; };
    auto c = [&](int j) { return std::cos(th(j)); };
    auto sn = [&](int j) { return std::sin(th(j)); };

    const double det = -c(2) * sn(1) - c(1) * sn(2);
    g.sA = (c(8) * sn(1) + c(7) * sn(2)) / det;
    g.sB = (-c(6) * sn(1) - c(4) * sn(2)) / det;
    g.tA = (c(2) * c(7) - c(1) * c(8)) / det;
    g.tB = (c(1) * c(6) - c(2) * c(4)) / det;
    g.qa = g.sA * g.sA + g.tA * g.tA - 1;
    g.qb = 2 * g.sA * g.sB + 2 * g.tA * g.tB - 2 * c(9);
    g.qc = g.sB * g.sB + g.tB * g.tB - 1;

    // positive roots; prefer the smaller when there are two
    std::vector<double> roots;
    if (std::abs(g.qa) < 1e-14) {
        if (std::abs(g.qb) > 1e-14) roots.push_back(-g.qc / g.qb);
    } else {
        double disc = g.qb * g.qb - 4 * g.qa * g.qc;
        if (disc >= 0) {
            double sq = std::sqrt(disc);
            // stable form
            double q = -0.5 * (g.qb + std::copysign(sq, g.qb));
            roots.push_back(q / g.qa);
            if (q != 0) roots.push_back(g.qc / q);
        }
    }
    double best = -1;
    for (double r : roots)
        if (r > 1e-9 && (best < 0 || r < best)) best = r;
    if (best < 0) throw Error(Errc::NoPositiveRoot, "no positive radius solves the face-angle equations");
    g.r = best;
    g.s = g.sA * g.r + g.sB;
    g.t = g.tA * g.r + g.tB;

    const double s = g.s, t = g.t, r = g.r;
    const cplx i(0, 1);
    if (g.a3 == 2) {
        g.y1 = c(4) / sn(1);
        g.y2 = -c(6) / sn(2);
        g.z1 = i * g.y1;
        g.z2 = i * g.y2;
        g.M[0] = mat(0, -1, 1, 0);
        g.M[3] = mat(cplx(-s, t) / r, (s * s + t * t) / r - r, 1 / r, cplx(-s, -t) / r);
    } else {
        g.z1 = cplx(-0.5, c(4) / sn(1) + 0.5 / std::tan(th(1)));
        g.z2 = cplx(-0.5, -(c(6) / sn(2) + 0.5 / std::tan(th(2))));
        g.y1 = g.z1.imag();
        g.y2 = g.z2.imag();
        g.M[0] = mat(-1, -1, 1, 0);
        g.M[3] = mat(cplx(-s - 1, t) / r, cplx(-s - 1, t) * cplx(-s, -t) / r - r, 1 / r, cplx(-s, -t) / r);
    }
    const cplx e1 = std::exp(-i * th(1)), e2 = std::exp(i * th(2));
    g.M[1] = mat(e1, -g.z1 * (e1 - std::conj(e1)), 0, std::conj(e1));
    g.M[2] = mat(e2, g.z2 * (std::conj(e2) - e2), 0, std::conj(e2));
    Eigen::Matrix2cd m2inv = g.M[1].inverse();
    g.rho[X] = normalized(m2inv);
    g.rho[Y] = normalized(m2inv * g.M[0]);
    g.rho[Z] = normalized(m2inv * g.M[2]);
    g.rho[W] = normalized(m2inv * g.M[3]);
    return g;
}

Eigen::Matrix2cd matrix_of(const EmbeddingGeometry& g, const Word& w)
{
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    for (const auto& l : w) {
        Eigen::Matrix2cd b = l.e < 0 ? Eigen::Matrix2cd(g.rho[l.g].inverse()) : g.rho[l.g];
        for (int k = 0; k < std::abs(l.e); ++k) m = m * b;
    }
    return m;
}

double power_residual(const Eigen::Matrix2cd& m, int exp)
{
    Eigen::Matrix2cd b = normalized(m), p = Eigen::Matrix2cd::Identity();
    for (int k = 0; k < exp; ++k) p = p * b;
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    return std::min((p - id).cwiseAbs().maxCoeff(), (p + id).cwiseAbs().maxCoeff());
}

std::array<double, 9> relator_residuals(const EmbeddingGeometry& g, const Signature& s)
{
    std::array<double, 9> out{};
    auto rels = relators(s);
    for (int k = 0; k < 9; ++k) out[k] = power_residual(matrix_of(g, rels[k].base), rels[k].exp);
    return out;
}

double verify_matrix_rep(const EmbeddingGeometry& g, const Signature& s)
{
    auto r = relator_residuals(g, s);
    return *std::max_element(r.begin(), r.end());
}

CuspData maximal_cusp(const Signature& s, const EmbeddingGeometry& g)
{
    CuspData d;
    d.height = std::max(1.0, g.r);
    if (cusp_type(s) == CuspType::C333 && g.a3 == 2 && g.r <= 1)
        d.volume = (g.y1 - g.y2) * (g.y1 - g.y2) * std::sqrt(3.0) / 8;
    return d;
}

double cusp_volume(const Signature& s, const EmbeddingGeometry& g)
{
    auto d = maximal_cusp(s, g);
    if (!d.volume) throw Error(Errc::CuspVolumeUnsupported, "cusp volume is only implemented for (3,3,3) cusps with a3 = 2 and r <= 1");
    return *d.volume;
}

VolumeResult prism_volume(const Signature& sig, const EmbeddingGeometry& g, double tol)
{
    if (g.a3 != 2 || cusp_type(sig) != CuspType::C333)
        throw Error(Errc::UnsupportedSignature, "volume integrals need a3 = 2 and a (3,3,3) cusp");
    const double cot1 = 1 / std::tan(pi / sig[1]), cot2 = 1 / std::tan(pi / sig[2]);
    const double y1 = g.y1, y2 = g.y2, X = g.s, Y = g.t, R = g.r;
    auto yu = [=](double x) { return y1 - x * cot1; };
    auto yl = [=](double x) { return y2 + x * cot2; };
    // the two hemispheres meet above the line y = m x + c0
    if (std::abs(Y) < 1e-14) throw Error(Errc::UnsupportedSignature, "hemisphere intersection line is vertical");
    const double m = -X / Y, c0 = (1 - R * R + X * X + Y * Y) / (2 * Y);
    auto ell = [=](double x) { return m * x + c0; };

    VolumeResult v;
    v.xmax = (y1 - y2) / (cot1 + cot2);
    v.Xl = (c0 - y2) / (cot2 - m);
    v.Xu = (y1 - c0) / (m + cot1);
    if (!(0 < v.Xl && v.Xl <= v.Xu && v.Xu < v.xmax && v.xmax < 1 + R + std::abs(X)))
        throw Error(Errc::UnsupportedSignature, "prism cross-section is not in the four-region configuration");

    // int_lo^hi dy / (2 (p^2 - (y - y0)^2)) in closed form
    auto inner = [](double p, double lo, double hi) {
        return std::log((p + hi) * (p - lo) / ((p - hi) * (p + lo))) / (4 * p);
    };
    auto unit = [=](auto lo, auto hi) {
        return [=](double x) { return inner(std::sqrt(1 - x * x), lo(x), hi(x)); };
    };
    auto rsph = [=](auto lo, auto hi) {
        return [=](double x) {
            double p = std::sqrt(R * R - (x - X) * (x - X));
            return inner(p, lo(x) - Y, hi(x) - Y);
        };
    };
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    double errs[4] = {};
    auto integrate = [&](auto f, double a, double b, int k) {
        double e = 0;
        double val = GK::integrate(f, a, b, 30, tol, &e);
        errs[k] = e;
        if (!std::isfinite(val)) throw Error(Errc::QuadratureNonconvergent, "volume integrand is not finite");
        return val;
    };
    v.region[0] = integrate(unit(yl, yu), 0, v.Xl, 0);
    v.region[1] = integrate(unit(ell, yu), v.Xl, v.Xu, 1);
    v.region[2] = integrate(rsph(yl, ell), v.Xl, v.Xu, 2);
    v.region[3] = integrate(rsph(yl, yu), v.Xu, v.xmax, 3);
    v.total = v.region[0] + v.region[1] + v.region[2] + v.region[3];
    v.error = errs[0] + errs[1] + errs[2] + errs[3];
    if (v.error > std::max(100 * tol, 1e-8))
        throw Error(Errc::QuadratureNonconvergent, "quadrature error estimate above tolerance");
    return v;
}

std::string geometry_report(const Signature& s, const EmbeddingGeometry& g)
{
    std::ostringstream os;
    os << std::setprecision(15);
    os << "case = a3=" << g.a3 << '\n';
    if (g.a3 == 2) os << "y1 = " << g.y1 << "\ny2 = " << g.y2 << '\n';
    else os << "z1 = " << g.z1.real() << " + " << g.z1.imag() << "i\nz2 = " << g.z2.real() << " + " << g.z2.imag() << "i\n";
    os << "s = " << g.s << "\nt = " << g.t << "\nr = " << g.r << '\n';
    os << "equation_residual = " << g.equation_residual() << '\n';
    os << "relator_residual = " << verify_matrix_rep(g, s) << '\n';
    const char* names[4] = {"x", "y", "z", "w"};
    for (int k = 0; k < 4; ++k) {
        const auto& m = g.rho[k];
        os << "rho(" << names[k] << ") = [[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]\n";
    }
    return os.str();
}

} // namespace prism
