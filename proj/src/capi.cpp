#include "prism.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <sstream>
#include <string>

#include "catalog.hpp"
#include "complex.hpp"
#include "error.hpp"
#include "filters.hpp"
#include "geometry.hpp"
#include "lowindex.hpp"
#include "perm.hpp"
#include "triangulation.hpp"

struct prism_signature {
    prism::Signature sig;
};

struct prism_reps {
    std::vector<prism::PermRep> reps;
};

namespace {

thread_local std::string last_error;

prism_status to_status(prism::Errc e)
{
    using prism::Errc;
    switch (e) {
    case Errc::Ok: return PRISM_OK;
    case Errc::InvalidArgument: return PRISM_E_INVALID_ARGUMENT;
    case Errc::Parse: return PRISM_E_PARSE;
    case Errc::Io: return PRISM_E_IO;
    case Errc::CuspTypeInvalid: return PRISM_E_CUSP_TYPE_INVALID;
    case Errc::VertexNotSpherical: return PRISM_E_VERTEX_NOT_SPHERICAL;
    case Errc::FamilyParameterOutOfRange: return PRISM_E_FAMILY_PARAMETER;
    case Errc::UnknownName: return PRISM_E_UNKNOWN_NAME;
    case Errc::RelatorViolation: return PRISM_E_RELATOR_VIOLATION;
    case Errc::NotTransitive: return PRISM_E_NOT_TRANSITIVE;
    case Errc::DegreeNotDivisible: return PRISM_E_DEGREE_NOT_DIVISIBLE;
    case Errc::SignatureMismatch: return PRISM_E_SIGNATURE_MISMATCH;
    case Errc::DegreeMismatch: return PRISM_E_DEGREE_MISMATCH;
    case Errc::InvalidRep: return PRISM_E_INVALID_REP;
    case Errc::DisconnectedSpine: return PRISM_E_DISCONNECTED_SPINE;
    case Errc::NotAManifold: return PRISM_E_NOT_A_MANIFOLD;
    case Errc::NoPositiveRoot: return PRISM_E_NO_POSITIVE_ROOT;
    case Errc::UnsupportedA3: return PRISM_E_UNSUPPORTED_A3;
    case Errc::CuspVolumeUnsupported: return PRISM_E_CUSP_VOLUME_UNSUPPORTED;
    case Errc::UnsupportedSignature: return PRISM_E_UNSUPPORTED_SIGNATURE;
    case Errc::QuadratureNonconvergent: return PRISM_E_QUADRATURE;
    case Errc::NotA236Cusp: return PRISM_E_NOT_A_236_CUSP;
    case Errc::IndexTooLarge: return PRISM_E_INDEX_TOO_LARGE;
    }
    return PRISM_E_INTERNAL;
}

// Call from inside a catch block.
prism_status fail()
{
    try {
        throw;
    } catch (const prism::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return PRISM_E_OUT_OF_MEMORY;
    } catch (const std::exception& e) {
        last_error = e.what();
        return PRISM_E_INTERNAL;
    } catch (...) {
        last_error = "unknown exception";
        return PRISM_E_INTERNAL;
    }
}

prism_status ok()
{
    last_error.clear();
    return PRISM_OK;
}

void need(bool cond, const char* what)
{
    if (!cond) throw prism::Error(prism::Errc::InvalidArgument, what);
}

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

const prism::PermRep& at(const prism_reps* r, size_t i)
{
    need(r != nullptr, "null rep list");
    if (i >= r->reps.size()) throw prism::Error(prism::Errc::InvalidArgument, "rep index out of range");
    return r->reps[i];
}

const prism::Signature& sig_of(const prism_signature* s)
{
    need(s != nullptr, "null signature");
    return s->sig;
}

const prism::CatalogRow& catalog_at(size_t i)
{
    const auto& a = prism::builtin_tables();
    const auto& b = prism::family_variants();
    if (i < a.size()) return a[i];
    if (i < a.size() + b.size()) return b[i - a.size()];
    throw prism::Error(prism::Errc::InvalidArgument, "catalog index out of range");
}

// "y>z+,z>y-"
std::vector<prism::GenMap> parse_map(const std::string& text)
{
    auto gen = [](char c) -> prism::Gen {
        switch (c) {
        case 'x': return prism::X;
        case 'y': return prism::Y;
        case 'z': return prism::Z;
        case 'w': return prism::W;
        }
        throw prism::Error(prism::Errc::Parse, std::string("bad generator '") + c + "' in map");
    };
    std::vector<prism::GenMap> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.size() != 4 || item[1] != '>' || (item[3] != '+' && item[3] != '-'))
            throw prism::Error(prism::Errc::Parse, "bad map entry '" + item + "'");
        out.push_back({gen(item[0]), gen(item[2]), item[3] == '+' ? 1 : -1});
    }
    return out;
}

} // namespace

extern "C" {

const char* prism_status_name(prism_status s) noexcept
{
    switch (s) {
    case PRISM_OK: return "ok";
    case PRISM_E_OUT_OF_MEMORY: return "out_of_memory";
    case PRISM_E_INTERNAL: return "internal";
    default: break;
    }
    if (s > PRISM_OK && s <= PRISM_E_INDEX_TOO_LARGE) return prism::errc_name(static_cast<prism::Errc>(s));
    return "unknown";
}

const char* prism_last_error(void) noexcept
{
    return last_error.c_str();
}

void prism_free_string(char* s) noexcept
{
    std::free(s);
}

prism_status prism_signature_new(const int a[9], const char* name, prism_signature** out) noexcept try {
    need(a && out, "null argument");
    std::array<int, 9> v{};
    std::copy(a, a + 9, v.begin());
    *out = new prism_signature{prism::make_signature(v, name ? name : "")};
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_signature_lookup(const char* name, int n, prism_signature** out) noexcept try {
    need(name && out, "null argument");
    *out = new prism_signature{prism::lookup(name, n > 0 ? std::optional<int>(n) : std::nullopt)};
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_signature_parse(const char* line, prism_signature** out) noexcept try {
    need(line && out, "null argument");
    *out = new prism_signature{prism::parse_line(line)};
    return ok();
} catch (...) {
    return fail();
}

void prism_signature_free(prism_signature* s) noexcept
{
    delete s;
}

prism_status prism_signature_get(const prism_signature* s, int a[9]) noexcept try {
    need(a != nullptr, "null argument");
    const auto& g = sig_of(s);
    std::copy(g.a.begin(), g.a.end(), a);
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_signature_format(const prism_signature* s, char** out) noexcept try {
    need(out != nullptr, "null argument");
    *out = dup(prism::format_line(sig_of(s)));
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_signature_cusp_type(const prism_signature* s, char** out) noexcept try {
    need(out != nullptr, "null argument");
    *out = dup(prism::cusp_type_name(prism::cusp_type(sig_of(s))));
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_signature_vertex_lcm(const prism_signature* s, long long* out) noexcept try {
    need(out != nullptr, "null argument");
    *out = prism::vertex_data(sig_of(s)).lcm;
    return ok();
} catch (...) {
    return fail();
}

size_t prism_catalog_count(void) noexcept
{
    return prism::builtin_tables().size() + prism::family_variants().size();
}

prism_status prism_catalog_row(size_t i, char** out) noexcept try {
    need(out != nullptr, "null argument");
    const auto& r = catalog_at(i);
    std::ostringstream os;
    os << r.name << '\t';
    for (int k = 0; k < 9; ++k) {
        if (k) os << ' ';
        if (r.family && k == 3) os << 'n';
        else os << r.a[k];
    }
    os << '\t' << r.min_n << '\t' << (r.parity < 0 ? "any" : r.parity ? "odd" : "even");
    *out = dup(os.str());
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_reps_new(prism_reps** out) noexcept try {
    need(out != nullptr, "null argument");
    *out = new prism_reps{};
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_reps_read_file(const char* path, prism_reps** out) noexcept try {
    need(path && out, "null argument");
    *out = new prism_reps{prism::read_reps_file(path)};
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_reps_parse(const char* text, prism_reps** out) noexcept try {
    need(text && out, "null argument");
    std::istringstream is(text);
    *out = new prism_reps{prism::read_reps(is)};
    return ok();
} catch (...) {
    return fail();
}

void prism_reps_free(prism_reps* r) noexcept
{
    delete r;
}

size_t prism_reps_count(const prism_reps* r) noexcept
{
    return r ? r->reps.size() : 0;
}

prism_status prism_reps_push(prism_reps* r, int degree, const int* x, const int* y, const int* z,
                             const int* w) noexcept try {
    need(r && x && y && z && w && degree > 0, "bad argument");
    std::array<std::vector<int>, 4> g;
    const int* src[4] = {x, y, z, w};
    for (int k = 0; k < 4; ++k) g[k].assign(src[k], src[k] + degree);
    r->reps.push_back(prism::make_rep(std::move(g)));
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_reps_degree(const prism_reps* r, size_t i, int* out) noexcept try {
    need(out != nullptr, "null argument");
    *out = at(r, i).degree();
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_reps_images(const prism_reps* r, size_t i, int gen, int* buf, size_t len) noexcept try {
    const auto& rep = at(r, i);
    need(gen >= 0 && gen < 4, "generator must be 0..3");
    need(buf && len >= static_cast<size_t>(rep.degree()), "buffer too small");
    const auto& im = rep.g[gen].images();
    std::copy(im.begin(), im.end(), buf);
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_reps_format(const prism_reps* r, size_t i, char** out) noexcept try {
    need(out != nullptr, "null argument");
    std::ostringstream os;
    prism::write_rep(os, at(r, i));
    *out = dup(os.str());
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_reps_evaluate(const prism_reps* r, size_t i, const char* word, char** out) noexcept try {
    need(word && out, "null argument");
    *out = dup(prism::evaluate_word(at(r, i), prism::parse_word(word)).cycle_string());
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_check(const prism_signature* s, const prism_reps* r, size_t i, prism_check_info* out,
                         char** h1) noexcept try {
    need(out != nullptr, "null argument");
    const auto& sig = sig_of(s);
    const auto& rep = at(r, i);
    auto v = prism::validate_rep(sig, rep);
    prism_check_info info{};
    info.relators_ok = v.failures.empty();
    info.transitive = v.transitive;
    std::string hs;
    if (v.ok()) {
        info.manifold = prism::is_manifold(sig, rep).manifold;
        info.cusps = static_cast<int>(prism::cusp_orbits(rep).size());
        if (info.manifold) {
            auto h = prism::cover_homology(sig, rep);
            info.h1_rank = h.rank;
            info.h1_torsion = static_cast<int>(h.torsion.size());
            hs = h.str();
        }
    }
    if (h1) *h1 = dup(hs);
    *out = info;
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_spine(const prism_signature* s, const prism_reps* r, size_t i, prism_spine_info* out) noexcept try {
    need(out != nullptr, "null argument");
    auto full = prism::build_spine(prism::build_complex(sig_of(s), at(r, i)));
    auto coarse = prism::coarsen_spine(full);
    *out = {full.V(), full.E(), full.F(), coarse.V(), coarse.E(), coarse.F()};
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_spine_report(const prism_signature* s, const prism_reps* r, size_t i, char** out) noexcept try {
    need(out != nullptr, "null argument");
    auto coarse = prism::coarsen_spine(prism::build_spine(prism::build_complex(sig_of(s), at(r, i))));
    auto p = prism::fundamental_presentation(coarse);
    *out = dup(coarse.report() + p.report() + "H1 = " + prism::first_homology(p).str() + '\n');
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_surface(const prism_signature* s, const prism_reps* r, size_t i, prism_surface_info* out) noexcept try {
    need(out != nullptr, "null argument");
    auto rep = prism::geodesic_surface(sig_of(s), at(r, i));
    prism_surface_info info{};
    info.components = rep.components;
    info.genus = rep.genus.empty() ? 0 : rep.genus.front();
    for (int e : rep.euler) info.euler += e;
    info.area_num = rep.area_over_pi.numerator();
    info.area_den = rep.area_over_pi.denominator();
    info.separating = rep.separating_guaranteed;
    *out = info;
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_triangulate(const prism_signature* s, const prism_reps* r, size_t i, char** table,
                               int* ideal_classes) noexcept try {
    need(table != nullptr, "null argument");
    auto t = prism::triangulate(sig_of(s), at(r, i));
    auto v = prism::validate_triangulation(t);
    if (!v.ok()) throw prism::Error(prism::Errc::InvalidRep, "triangulation check failed: " + v.problems.front());
    if (ideal_classes) *ideal_classes = t.ideal_classes;
    *table = dup(prism::export_gluing_table(t));
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_triangulation_block(const prism_signature* s, const prism_reps* r, size_t i, int block,
                                       char** out) noexcept try {
    need(out != nullptr, "null argument");
    const auto& rep = at(r, i);
    need(block >= 0 && block < rep.degree(), "block out of range");
    *out = dup(prism::block_table(prism::triangulate(sig_of(s), rep), block));
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_find_isometries(const prism_signature* sa, const prism_reps* ra, size_t ia,
                                   const prism_signature* sb, const prism_reps* rb, size_t ib, int reversing,
                                   int* buf, size_t len, size_t* count) noexcept try {
    need(count != nullptr, "null argument");
    auto found = prism::find_isometries(sig_of(sa), at(ra, ia), sig_of(sb), at(rb, ib),
                                        reversing ? prism::Orientation::Reversing : prism::Orientation::Preserving);
    *count = found.size();
    size_t pos = 0;
    for (const auto& phi : found) {
        if (!buf || pos + phi.size() > len) break;
        std::copy(phi.images().begin(), phi.images().end(), buf + pos);
        pos += phi.size();
    }
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_verify_intertwine(const int* phi, int degree, const prism_reps* ra, size_t ia,
                                     const prism_reps* rb, size_t ib, const char* map, int* out) noexcept try {
    need(phi && map && out && degree > 0, "bad argument");
    const auto& a = at(ra, ia);
    const auto& b = at(rb, ib);
    if (a.degree() != degree || b.degree() != degree)
        throw prism::Error(prism::Errc::DegreeMismatch, "map degree differs from the reps");
    prism::Perm p(std::vector<int>(phi, phi + degree));
    *out = prism::verify_intertwine(p, a, b, parse_map(map));
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_geometry_report(const prism_signature* s, char** out) noexcept try {
    need(out != nullptr, "null argument");
    const auto& sig = sig_of(s);
    *out = dup(prism::geometry_report(sig, prism::embed(sig)));
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_relator_residual(const prism_signature* s, double* out) noexcept try {
    need(out != nullptr, "null argument");
    const auto& sig = sig_of(s);
    *out = prism::verify_matrix_rep(prism::embed(sig), sig);
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_cusp(const prism_signature* s, double* height, double* volume) noexcept try {
    need(height && volume, "null argument");
    const auto& sig = sig_of(s);
    auto c = prism::maximal_cusp(sig, prism::embed(sig));
    *height = c.height;
    *volume = c.volume ? *c.volume : std::numeric_limits<double>::quiet_NaN();
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_volume(const prism_signature* s, double tol, double* volume, double* error) noexcept try {
    need(volume != nullptr, "null argument");
    need(tol > 0, "tolerance must be positive");
    const auto& sig = sig_of(s);
    auto v = prism::prism_volume(sig, prism::embed(sig), tol);
    *volume = v.total;
    if (error) *error = v.error;
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_prefilter(const prism_signature* s, prism_prefilter_info* out) noexcept try {
    need(out != nullptr, "null argument");
    auto p = prism::prefilter(sig_of(s));
    out->ck_trivial = p.ck_trivial;
    out->dc = p.dc == prism::DcStatus::Exists ? 1 : p.dc == prism::DcStatus::Absent ? 0 : -1;
    out->mcd = p.mcd;
    out->eliminated = p.eliminated;
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_filter(const prism_signature* s, const prism_reps* r, int workers, prism_filter_counts* out,
                          prism_reps** survivors) noexcept try {
    need(r && out && workers >= 1, "bad argument");
    auto f = prism::filter_covers(sig_of(s), r->reps, workers);
    *out = {f.input, f.manifold, f.one_cusp, f.homology_z};
    if (survivors) *survivors = new prism_reps{std::move(f.survivors)};
    return ok();
} catch (...) {
    return fail();
}

void prism_enumerate_options_init(prism_enumerate_options* o) noexcept
{
    if (!o) return;
    *o = prism_enumerate_options{};
    o->workers = 1;
}

prism_status prism_enumerate(const prism_signature* s, int max_index, const prism_enumerate_options* o,
                             prism_reps** out, unsigned long long* count, unsigned long long* by_index) noexcept try {
    need(max_index >= 1, "max index must be >= 1");
    prism_enumerate_options d;
    prism_enumerate_options_init(&d);
    if (!o) o = &d;
    need(o->workers >= 1, "workers must be >= 1");
    prism::EnumerationOptions opt;
    opt.workers = o->workers;
    if (o->split_depth > 0) opt.split_depth = o->split_depth;
    if (o->checkpoint_path) opt.checkpoint_path = o->checkpoint_path;
    if (o->output_path) opt.output_path = o->output_path;
    std::vector<prism::PermRep> kept;
    if (o->keep && out) opt.sink = [&kept](const prism::PermRep& r) { kept.push_back(r); };
    if (o->progress) {
        auto fn = o->progress;
        void* user = o->user;
        opt.progress = [fn, user](size_t done, size_t total, std::uint64_t res) { fn(done, total, res, user); };
    }
    auto st = prism::enumerate_subgroups({sig_of(s), max_index}, opt);
    if (count) *count = st.results;
    if (by_index)
        for (int k = 0; k <= max_index; ++k)
            by_index[k] = k < static_cast<int>(st.by_index.size()) ? st.by_index[k] : 0;
    if (out) *out = new prism_reps{std::move(kept)};
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_brute_force(const prism_signature* s, int index, prism_reps** out) noexcept try {
    need(out != nullptr, "null argument");
    *out = new prism_reps{prism::brute_force_reps(sig_of(s), index)};
    return ok();
} catch (...) {
    return fail();
}

prism_status prism_canonical(const prism_reps* r, size_t i, prism_reps* dst) noexcept try {
    need(dst != nullptr, "null argument");
    dst->reps.push_back(prism::canonical_form(at(r, i)));
    return ok();
} catch (...) {
    return fail();
}

} // extern "C"
