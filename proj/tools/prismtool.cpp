#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "prism.h"

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(prism_status s)
{
    if (s != PRISM_OK) throw Failure(std::string(prism_status_name(s)) + ": " + prism_last_error());
}

std::string take(char* s)
{
    std::string out = s ? s : "";
    prism_free_string(s);
    return out;
}

using SigPtr = std::unique_ptr<prism_signature, decltype(&prism_signature_free)>;
using RepsPtr = std::unique_ptr<prism_reps, decltype(&prism_reps_free)>;

SigPtr load_sig(const std::string& name, int n)
{
    prism_signature* s = nullptr;
    // a bare line of nine integers is accepted too
    if (!name.empty() && std::isdigit(static_cast<unsigned char>(name[0]))) check(prism_signature_parse(name.c_str(), &s));
    else check(prism_signature_lookup(name.c_str(), n, &s));
    return SigPtr(s, prism_signature_free);
}

RepsPtr load_reps(const std::vector<std::string>& paths)
{
    prism_reps* all = nullptr;
    check(prism_reps_new(&all));
    RepsPtr out(all, prism_reps_free);
    for (const auto& p : paths) {
        prism_reps* r = nullptr;
        check(prism_reps_read_file(p.c_str(), &r));
        RepsPtr hold(r, prism_reps_free);
        for (size_t i = 0; i < prism_reps_count(r); ++i) {
            int n = 0;
            check(prism_reps_degree(r, i, &n));
            std::vector<int> g[4];
            for (int k = 0; k < 4; ++k) {
                g[k].resize(n);
                check(prism_reps_images(r, i, k, g[k].data(), g[k].size()));
            }
            check(prism_reps_push(all, n, g[0].data(), g[1].data(), g[2].data(), g[3].data()));
        }
    }
    return out;
}

std::string rep_text(const prism_reps* r, size_t i)
{
    char* s = nullptr;
    check(prism_reps_format(r, i, &s));
    return take(s);
}

void write_reps(const prism_reps* r, const std::string& path)
{
    std::ofstream f(path);
    if (!f) throw Failure("io: cannot write " + path);
    for (size_t i = 0; i < prism_reps_count(r); ++i) f << (i ? "\n" : "") << rep_text(r, i);
}

std::vector<int> parse_ints(const std::string& s)
{
    std::istringstream is(s);
    std::vector<int> v;
    for (int x; is >> x;) v.push_back(x);
    if (!is.eof()) throw Failure("parse: bad integer list '" + s + "'");
    return v;
}

// "key: i0 i1 ..." lines
std::vector<int> phi_from_file(const std::string& path, const std::string& key)
{
    std::ifstream f(path);
    if (!f) throw Failure("io: cannot open " + path);
    for (std::string line; std::getline(f, line);) {
        auto c = line.find(':');
        if (c != std::string::npos && line.substr(0, c) == key) return parse_ints(line.substr(c + 1));
    }
    throw Failure("unknown_name: no entry " + key + " in " + path);
}

std::string yes(int b)
{
    return b ? "yes" : "no";
}

void progress_line(size_t done, size_t total, unsigned long long results, void*)
{
    std::fprintf(stderr, "\rprefixes %zu/%zu  classes %llu", done, total, results);
    if (done == total) std::fputc('\n', stderr);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"prism orbifold covers: catalog, certificates, geometry, filters and low-index search"};
    app.require_subcommand(1);

    std::string sig_name;
    int family_n = 0;
    std::vector<std::string> rep_paths;
    double tol = 1e-9;
    int workers = std::max(1u, std::thread::hardware_concurrency());
    auto sig_opts = [&](CLI::App* c, bool required) {
        auto* o = c->add_option("--sig", sig_name, "catalog name (O333_2, O236_5,n) or nine integers");
        if (required) o->required();
        c->add_option("--n", family_n, "family parameter");
    };

    // catalog
    auto* cat = app.add_subcommand("catalog", "list or validate signatures");
    std::string cat_name;
    bool cat_list = false;
    cat->add_option("--name", cat_name, "catalog row or nine integers");
    cat->add_option("--n", family_n, "family parameter");
    cat->add_flag("--list", cat_list, "print every catalog row");

    auto* chk = app.add_subcommand("check", "validate reps: relators, manifold, cusps, homology");
    sig_opts(chk, true);
    chk->add_option("--reps", rep_paths, "rep files")->required();

    auto* spn = app.add_subcommand("spine", "spine counts and homology");
    sig_opts(spn, true);
    spn->add_option("--reps", rep_paths, "rep files")->required();
    bool spine_report = false;
    spn->add_flag("--report", spine_report, "print cells and the presentation");

    auto* srf = app.add_subcommand("surface", "totally geodesic surface");
    sig_opts(srf, true);
    srf->add_option("--reps", rep_paths, "rep files")->required();

    auto* tri = app.add_subcommand("triangulate", "export the ideal triangulation");
    sig_opts(tri, true);
    tri->add_option("--reps", rep_paths, "rep file")->required();
    std::string tri_out;
    int tri_block = -1;
    size_t tri_index = 0;
    tri->add_option("--out", tri_out, "gluing table path (default stdout)");
    tri->add_option("--block", tri_block, "print the internal gluings of one cell");
    tri->add_option("--index", tri_index, "which rep of the file");

    auto* geo = app.add_subcommand("geometry", "embedding, matrix residuals, cusp, volume");
    sig_opts(geo, true);
    bool geo_volume = false, geo_cusp = false;
    geo->add_flag("--volume", geo_volume, "integrate the prism volume");
    geo->add_flag("--cusp", geo_cusp, "maximal cusp data");
    geo->add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber);

    auto* pre = app.add_subcommand("prefilter", "cusp killing, double cover and MCD columns");
    sig_opts(pre, false);
    bool pre_all = false;
    pre->add_flag("--all", pre_all, "every finite row (families need --n)");

    auto* en = app.add_subcommand("enumerate", "low-index subgroup classes");
    sig_opts(en, true);
    int max_index = 1, split_depth = 0;
    std::string en_out, en_ckpt;
    bool en_progress = false;
    en->add_option("--max-index", max_index, "largest index")->required()->check(CLI::Range(1, 64));
    en->add_option("--workers", workers, "threads")->check(CLI::PositiveNumber);
    en->add_option("--split-depth", split_depth, "search depth of the work units");
    en->add_option("--out", en_out, "write reps here");
    en->add_option("--checkpoint", en_ckpt, "checkpoint file; resumed when present (needs --out)");
    en->add_flag("--progress", en_progress, "progress on stderr");

    auto* pipe = app.add_subcommand("pipeline", "enumerate, then filter manifold / one cusp / H1 = Z");
    sig_opts(pipe, true);
    std::string pipe_out, pipe_from;
    pipe->add_option("--index", max_index, "cover degree")->required()->check(CLI::Range(1, 64));
    pipe->add_option("--workers", workers, "threads")->check(CLI::PositiveNumber);
    pipe->add_option("--from", pipe_from, "filter reps from this file instead of enumerating");
    pipe->add_option("--out", pipe_out, "write survivors here");
    pipe->add_flag("--progress", en_progress, "progress on stderr");

    auto* iso = app.add_subcommand("isom", "combinatorial isometries between covers");
    std::string sig_b, reps_a, reps_b, phi_text, phi_file, phi_key, map_spec;
    bool reversing = false;
    size_t ia = 0, ib = 0;
    iso->add_option("--sig", sig_name, "signature of the first cover")->required();
    iso->add_option("--sig-b", sig_b, "signature of the second cover (default --sig)");
    iso->add_option("--reps", reps_a, "first rep file")->required();
    iso->add_option("--reps-b", reps_b, "second rep file (default --reps)");
    iso->add_option("--index", ia, "rep within the first file");
    iso->add_option("--index-b", ib, "rep within the second file");
    iso->add_flag("--reversing", reversing, "orientation-reversing maps");
    iso->add_option("--phi", phi_text, "verify this map instead of searching");
    iso->add_option("--phi-file", phi_file, "file of 'key: images' lines");
    iso->add_option("--phi-key", phi_key, "entry of --phi-file");
    iso->add_option("--map", map_spec, "generator map for --phi, e.g. y>z+,z>y+,w>w+");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cat->parsed()) {
            if (cat_list) {
                for (size_t i = 0; i < prism_catalog_count(); ++i) {
                    char* s = nullptr;
                    check(prism_catalog_row(i, &s));
                    std::cout << take(s) << '\n';
                }
                return 0;
            }
            if (cat_name.empty()) throw Failure("invalid_argument: give --name or --list");
            auto sig = load_sig(cat_name, family_n);
            char* line = nullptr;
            char* cusp = nullptr;
            long long lcm = 0;
            check(prism_signature_format(sig.get(), &line));
            check(prism_signature_cusp_type(sig.get(), &cusp));
            check(prism_signature_vertex_lcm(sig.get(), &lcm));
            std::cout << "signature = " << take(line) << "\ncusp = " << take(cusp) << "\nvertex_lcm = " << lcm << '\n';
            return 0;
        }

        if (chk->parsed()) {
            auto sig = load_sig(sig_name, family_n);
            auto reps = load_reps(rep_paths);
            const size_t n = prism_reps_count(reps.get());
            bool all = true;
            for (size_t i = 0; i < n; ++i) {
                prism_check_info info{};
                char* h = nullptr;
                check(prism_check(sig.get(), reps.get(), i, &info, &h));
                std::string h1 = take(h);
                if (n > 1) std::cout << "rep " << i << ": ";
                if (!info.relators_ok || !info.transitive) {
                    std::cout << "invalid: " << (info.relators_ok ? "not transitive" : "relator violated") << '\n';
                    all = false;
                    continue;
                }
                std::cout << "manifold: " << yes(info.manifold) << "; cusps: " << info.cusps;
                if (info.manifold) std::cout << "; H1: " << h1;
                std::cout << '\n';
                all = all && info.manifold && info.cusps == 1 && info.h1_rank == 1 && info.h1_torsion == 0;
            }
            return all ? 0 : 1;
        }

        if (spn->parsed()) {
            auto sig = load_sig(sig_name, family_n);
            auto reps = load_reps(rep_paths);
            for (size_t i = 0; i < prism_reps_count(reps.get()); ++i) {
                prism_spine_info sp{};
                check(prism_spine(sig.get(), reps.get(), i, &sp));
                std::cout << "rep = " << i << "\nspine_vertices = " << sp.vertices << "\nspine_edges = " << sp.edges
                          << "\nspine_cells = " << sp.cells << "\ncoarse_vertices = " << sp.coarse_vertices
                          << "\ncoarse_edges = " << sp.coarse_edges << "\ncoarse_cells = " << sp.coarse_cells << '\n';
                char* s = nullptr;
                check(prism_spine_report(sig.get(), reps.get(), i, &s));
                std::string rep = take(s);
                if (spine_report) std::cout << rep;
                else std::cout << rep.substr(rep.rfind("H1 = "));
            }
            return 0;
        }

        if (srf->parsed()) {
            auto sig = load_sig(sig_name, family_n);
            auto reps = load_reps(rep_paths);
            for (size_t i = 0; i < prism_reps_count(reps.get()); ++i) {
                prism_surface_info s{};
                check(prism_surface(sig.get(), reps.get(), i, &s));
                std::cout << "rep = " << i << "\ncomponents = " << s.components << "\norientable = yes\ngenus = " << s.genus
                          << "\neuler = " << s.euler << "\narea = " << s.area_num;
                if (s.area_den != 1) std::cout << '/' << s.area_den;
                std::cout << "pi\nseparating = " << (s.separating ? "yes" : "not guaranteed") << '\n';
            }
            return 0;
        }

        if (tri->parsed()) {
            auto sig = load_sig(sig_name, family_n);
            auto reps = load_reps(rep_paths);
            if (tri_block >= 0) {
                char* s = nullptr;
                check(prism_triangulation_block(sig.get(), reps.get(), tri_index, tri_block, &s));
                std::cout << take(s);
                return 0;
            }
            char* t = nullptr;
            int ideal = 0;
            check(prism_triangulate(sig.get(), reps.get(), tri_index, &t, &ideal));
            std::string table = take(t);
            if (tri_out.empty()) {
                std::cout << table;
            } else {
                std::ofstream f(tri_out, std::ios::binary);
                if (!f) throw Failure("io: cannot write " + tri_out);
                f << table;
                std::cout << "ideal_classes = " << ideal << "\nwritten = " << tri_out << '\n';
            }
            return 0;
        }

        if (geo->parsed()) {
            auto sig = load_sig(sig_name, family_n);
            std::cout.precision(15);
            if (geo_volume) {
                double v = 0, err = 0;
                check(prism_volume(sig.get(), tol * 1e-3, &v, &err));
                std::cout << "volume = " << v << "\nquadrature_error = " << err << '\n';
                return 0;
            }
            if (geo_cusp) {
                double h = 0, v = 0;
                check(prism_cusp(sig.get(), &h, &v));
                std::cout << "cusp_height = " << h << '\n';
                if (!std::isnan(v)) std::cout << "cusp_volume = " << v << '\n';
                return 0;
            }
            char* r = nullptr;
            check(prism_geometry_report(sig.get(), &r));
            std::cout << take(r);
            double res = 0;
            check(prism_relator_residual(sig.get(), &res));
            return res < tol ? 0 : 1;
        }

        if (pre->parsed()) {
            auto row = [](const prism_signature* s, const std::string& name) {
                prism_prefilter_info p{};
                check(prism_prefilter(s, &p));
                std::cout << name << '\t' << (p.ck_trivial ? 1 : 0) << '\t'
                          << (p.dc < 0 ? "-" : std::to_string(p.dc)) << '\t' << p.mcd << '\t'
                          << (p.eliminated ? "eliminated" : "open") << '\n';
            };
            std::cout << "name\tck_trivial\tdc\tmcd\tverdict\n";
            if (!pre_all) {
                auto sig = load_sig(sig_name, family_n);
                char* line = nullptr;
                check(prism_signature_format(sig.get(), &line));
                std::string l = take(line);
                row(sig.get(), l.substr(0, l.find(' ')));
                return 0;
            }
            for (size_t i = 0; i < prism_catalog_count(); ++i) {
                char* s = nullptr;
                check(prism_catalog_row(i, &s));
                std::string line = take(s);
                std::string name = line.substr(0, line.find('\t'));
                bool family = line.find(" n ") != std::string::npos;
                if (family && family_n <= 0) continue;
                prism_signature* sig = nullptr;
                prism_status st = prism_signature_lookup(name.c_str(), family ? family_n : 0, &sig);
                if (st == PRISM_E_FAMILY_PARAMETER) continue;  // parity or minimum excludes this n
                check(st);
                SigPtr hold(sig, prism_signature_free);
                row(sig, name);
            }
            return 0;
        }

        if (en->parsed()) {
            auto sig = load_sig(sig_name, family_n);
            prism_enumerate_options o;
            prism_enumerate_options_init(&o);
            o.workers = workers;
            o.split_depth = split_depth;
            if (!en_ckpt.empty()) {
                if (en_out.empty()) throw Failure("invalid_argument: --checkpoint needs --out");
                o.checkpoint_path = en_ckpt.c_str();
                o.output_path = en_out.c_str();
            }
            o.keep = !en_out.empty() && en_ckpt.empty();
            if (en_progress) o.progress = progress_line;
            prism_reps* out = nullptr;
            unsigned long long count = 0;
            std::vector<unsigned long long> by(max_index + 1);
            check(prism_enumerate(sig.get(), max_index, &o, o.keep ? &out : nullptr, &count, by.data()));
            RepsPtr hold(out, prism_reps_free);
            if (o.keep) write_reps(out, en_out);
            for (int k = 1; k <= max_index; ++k) std::cout << "index_" << k << " = " << by[k] << '\n';
            std::cout << "classes = " << count << '\n';
            return 0;
        }

        if (pipe->parsed()) {
            auto sig = load_sig(sig_name, family_n);
            RepsPtr cand(nullptr, prism_reps_free);
            if (!pipe_from.empty()) {
                cand = load_reps({pipe_from});
            } else {
                prism_enumerate_options o;
                prism_enumerate_options_init(&o);
                o.workers = workers;
                o.keep = 1;
                if (en_progress) o.progress = progress_line;
                prism_reps* all = nullptr;
                check(prism_enumerate(sig.get(), max_index, &o, &all, nullptr, nullptr));
                RepsPtr hold(all, prism_reps_free);
                prism_reps* sel = nullptr;
                check(prism_reps_new(&sel));
                cand.reset(sel);
                for (size_t i = 0; i < prism_reps_count(all); ++i) {
                    int d = 0;
                    check(prism_reps_degree(all, i, &d));
                    if (d != max_index) continue;
                    std::vector<int> g[4];
                    for (int k = 0; k < 4; ++k) {
                        g[k].resize(d);
                        check(prism_reps_images(all, i, k, g[k].data(), g[k].size()));
                    }
                    check(prism_reps_push(sel, d, g[0].data(), g[1].data(), g[2].data(), g[3].data()));
                }
            }
            prism_filter_counts c{};
            prism_reps* surv = nullptr;
            check(prism_filter(sig.get(), cand.get(), workers, &c, &surv));
            RepsPtr hold(surv, prism_reps_free);
            std::cout << "candidates = " << c.input << "\nmanifold = " << c.manifold << "\none_cusp = " << c.one_cusp
                      << "\nhomology_z = " << c.homology_z << '\n';
            if (!pipe_out.empty()) write_reps(surv, pipe_out);
            return 0;
        }

        if (iso->parsed()) {
            auto sa = load_sig(sig_name, 0);
            auto sb = load_sig(sig_b.empty() ? sig_name : sig_b, 0);
            auto ra = load_reps({reps_a});
            auto rb = load_reps({reps_b.empty() ? reps_a : reps_b});
            int n = 0;
            check(prism_reps_degree(ra.get(), ia, &n));
            if (!phi_text.empty() || !phi_file.empty()) {
                auto phi = phi_text.empty() ? phi_from_file(phi_file, phi_key) : parse_ints(phi_text);
                if (map_spec.empty()) throw Failure("invalid_argument: --phi needs --map");
                if (static_cast<int>(phi.size()) != n) throw Failure("degree_mismatch: map has wrong length");
                int good = 0;
                check(prism_verify_intertwine(phi.data(), n, ra.get(), ia, rb.get(), ib, map_spec.c_str(), &good));
                std::cout << "intertwines = " << yes(good) << '\n';
                return good ? 0 : 1;
            }
            size_t count = 0;
            check(prism_find_isometries(sa.get(), ra.get(), ia, sb.get(), rb.get(), ib, reversing, nullptr, 0, &count));
            std::vector<int> buf(count * n);
            check(prism_find_isometries(sa.get(), ra.get(), ia, sb.get(), rb.get(), ib, reversing, buf.data(),
                                        buf.size(), &count));
            std::cout << "isometries = " << count << '\n';
            for (size_t k = 0; k < count; ++k) {
                std::cout << "phi =";
                for (int j = 0; j < n; ++j) std::cout << ' ' << buf[k * n + j];
                std::cout << '\n';
            }
            return 0;
        }
    } catch (const Failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
