#include "catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "error.hpp"

namespace prism {

const char* cusp_type_name(CuspType c)
{
    switch (c) {
    case CuspType::C236: return "(2,3,6)";
    case CuspType::C333: return "(3,3,3)";
    case CuspType::C244: return "(2,4,4)";
    }
    return "?";
}

namespace tmpl {

bool face_has(int face, int label)
{
    for (int i = 0; i < face_size[face]; ++i)
        if (face_edges[face][i] == label) return true;
    return false;
}

void self_check()
{
    // two-generator relators: (y^-1 x, a3), (z^-1 x, a2), (z^-1 y, a6), (y^-1 w, a9), (z^-1 w, a8)
    static const int pairs[5][3] = {{1, 0, 3}, {2, 0, 2}, {2, 1, 6}, {1, 3, 9}, {2, 3, 8}};
    for (auto& p : pairs) {
        if (!face_has(p[0], p[2]) || !face_has(p[1], p[2]))
            throw std::logic_error("template: relator edge a" + std::to_string(p[2]) +
                                   " not shared by its generators' faces");
        for (int f = 0; f < 4; ++f)
            if (f != p[0] && f != p[1] && face_has(f, p[2]))
                throw std::logic_error("template: edge a" + std::to_string(p[2]) + " on a third face");
        for (int d : doubling_face)
            if (d == p[2]) throw std::logic_error("template: relator edge lies on D");
    }
    for (int g = 0; g < 4; ++g) {
        int l = axis_label[g];
        if (!face_has(g, l) || std::find(doubling_face, doubling_face + 4, l) == doubling_face + 4)
            throw std::logic_error("template: axis of generator is not D meet its face");
    }
    // every edge: two faces counting D, endpoints agree with vertex triples
    for (int j = 1; j <= 9; ++j) {
        int count = std::count(doubling_face, doubling_face + 4, j);
        for (int f = 0; f < 4; ++f) count += face_has(f, j);
        if (count != 2) throw std::logic_error("template: edge a" + std::to_string(j) + " not on two faces");
        for (int e = 0; e < 2; ++e) {
            const int* ve = vertex_edges[edge_ends[j][e]];
            if (std::find(ve, ve + 3, j) == ve + 3)
                throw std::logic_error("template: edge/vertex incidence mismatch");
        }
    }
}

} // namespace tmpl

namespace {

std::array<int, 3> sorted3(int a, int b, int c)
{
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

void check_template_once()
{
    static const bool ok = [] { tmpl::self_check(); return true; }();
    (void)ok;
}

} // namespace

CuspType cusp_type(const Signature& s)
{
    auto t = sorted3(s[1], s[2], s[5]);
    if (t == std::array<int, 3>{2, 3, 6}) return CuspType::C236;
    if (t == std::array<int, 3>{3, 3, 3}) return CuspType::C333;
    if (t == std::array<int, 3>{2, 4, 4}) return CuspType::C244;
    throw Error(Errc::CuspTypeInvalid, "cusp triple (a1,a2,a5) is not (2,3,6), (3,3,3) or (2,4,4)");
}

Signature make_signature(const std::array<int, 9>& a, std::string name)
{
    check_template_once();
    for (int i = 0; i < 9; ++i)
        if (a[i] < 2) throw Error(Errc::InvalidArgument, "a" + std::to_string(i + 1) + " must be >= 2");
    Signature s{a, std::move(name)};
    cusp_type(s);
    for (int v = 1; v < tmpl::n_vertices; ++v) {
        const int* e = tmpl::vertex_edges[v];
        // 1/p + 1/q + 1/r > 1  <=>  qr + pr + pq > pqr
        long long p = s[e[0]], q = s[e[1]], r = s[e[2]];
        if (q * r + p * r + p * q <= p * q * r)
            throw Error(Errc::VertexNotSpherical, std::string("vertex ") + tmpl::vertex_names[v] +
                                                      " is not spherical");
    }
    return s;
}

VertexReport vertex_data(const Signature& s)
{
    VertexReport out;
    for (int v = 1; v < tmpl::n_vertices; ++v) {
        const int* e = tmpl::vertex_edges[v];
        boost::rational<long long> nv(-1);
        for (int i = 0; i < 3; ++i) nv += boost::rational<long long>(1, s[e[i]]);
        auto ord = boost::rational<long long>(2) / nv;
        if (ord.denominator() != 1) throw Error(Errc::VertexNotSpherical, "vertex order is not an integer");
        out.vertices.push_back({v, nv, ord.numerator()});
        out.lcm = std::lcm(out.lcm, ord.numerator());
    }
    return out;
}

Signature CatalogRow::instantiate(int n) const
{
    if (!family) return make_signature(a, name);
    if (n < min_n)
        throw Error(Errc::FamilyParameterOutOfRange,
                    name + ": n must be >= " + std::to_string(min_n));
    if (parity >= 0 && n % 2 != parity)
        throw Error(Errc::FamilyParameterOutOfRange,
                    name + ": n must be " + (parity ? "odd" : "even"));
    auto b = a;
    b[3] = n;
    std::string base = name.substr(0, name.find(','));
    return make_signature(b, base + "," + std::to_string(n));
}

namespace {

CatalogRow row(std::string name, std::array<int, 9> a)
{
    return CatalogRow{std::move(name), a, false, 0, -1, {}};
}

CatalogRow fam(std::string name, std::array<int, 9> a, int min_n, std::string mcd, int parity = -1)
{
    return CatalogRow{std::move(name), a, true, min_n, parity, std::move(mcd)};
}

std::vector<CatalogRow> make_tables()
{
    // n = 0 marks the family parameter (a4)
    std::vector<CatalogRow> t = {
        row("O236_1", {2, 3, 3, 4, 6, 2, 2, 2, 2}),
        row("O236_2", {2, 3, 3, 4, 6, 2, 2, 2, 3}),
        row("O236_3", {2, 3, 3, 5, 6, 2, 2, 2, 2}),
        row("O236_4", {2, 3, 3, 5, 6, 2, 2, 2, 3}),
        fam("O236_5,n", {2, 6, 2, 0, 3, 2, 2, 2, 2}, 7, "lcm(12,n)"),
        fam("O236_6,n", {2, 6, 2, 0, 3, 2, 2, 3, 2}, 7, "lcm(12,n)"),
        fam("O236_7,n", {2, 6, 2, 0, 3, 2, 2, 4, 2}, 7, "lcm(24,n)"),
        fam("O236_8,n", {2, 6, 2, 0, 3, 2, 2, 5, 2}, 7, "lcm(60,n)"),
        row("O236_9", {2, 3, 2, 4, 6, 2, 2, 2, 2}),
        row("O236_10", {2, 3, 2, 4, 6, 2, 2, 2, 3}),
        row("O236_11", {2, 3, 2, 5, 6, 2, 2, 2, 2}),
        row("O236_12", {2, 3, 2, 5, 6, 2, 2, 2, 3}),
        fam("O236_13,n", {2, 3, 2, 0, 6, 2, 2, 2, 2}, 6, "lcm(12,n)"),
        row("O236_14", {2, 3, 2, 3, 6, 3, 2, 2, 2}),
        row("O236_15", {2, 3, 2, 3, 6, 3, 2, 2, 3}),
        row("O236_16", {2, 3, 2, 3, 6, 3, 2, 2, 4}),
        row("O236_17", {2, 3, 2, 3, 6, 3, 2, 2, 5}),
        row("O236_18", {2, 3, 2, 4, 6, 3, 2, 2, 2}),
        row("O236_19", {2, 3, 2, 4, 6, 3, 2, 2, 3}),
        row("O236_20", {2, 3, 2, 5, 6, 3, 2, 2, 2}),
        row("O236_21", {2, 3, 2, 5, 6, 3, 2, 2, 3}),
        fam("O236_22,n", {2, 3, 2, 0, 6, 3, 2, 2, 2}, 6, "lcm(12,n)"),
        row("O236_23", {2, 3, 2, 2, 6, 4, 2, 2, 2}),
        row("O236_24", {2, 3, 2, 2, 6, 4, 2, 2, 3}),
        row("O236_25", {2, 3, 2, 3, 6, 4, 2, 2, 2}),
        row("O236_26", {2, 3, 2, 3, 6, 4, 2, 2, 3}),
        row("O236_27", {2, 3, 2, 4, 6, 4, 2, 2, 2}),
        row("O236_28", {2, 3, 2, 4, 6, 4, 2, 2, 3}),
        row("O236_29", {2, 3, 2, 5, 6, 4, 2, 2, 2}),
        row("O236_30", {2, 3, 2, 5, 6, 4, 2, 2, 3}),
        fam("O236_31,n", {2, 3, 2, 0, 6, 4, 2, 2, 2}, 6, "lcm(24,n)"),
        row("O236_32", {2, 3, 2, 2, 6, 5, 2, 2, 2}),
        row("O236_33", {2, 3, 2, 2, 6, 5, 2, 2, 3}),
        row("O236_34", {2, 3, 2, 3, 6, 5, 2, 2, 2}),
        row("O236_35", {2, 3, 2, 3, 6, 5, 2, 2, 3}),
        row("O236_36", {2, 3, 2, 4, 6, 5, 2, 2, 2}),
        row("O236_37", {2, 3, 2, 4, 6, 5, 2, 2, 3}),
        row("O236_38", {2, 3, 2, 5, 6, 5, 2, 2, 2}),
        row("O236_39", {2, 3, 2, 5, 6, 5, 2, 2, 3}),
        fam("O236_40,n", {2, 3, 2, 0, 6, 5, 2, 2, 2}, 6, "lcm(60,n)"),

        row("O333_1", {3, 3, 2, 3, 3, 4, 2, 2, 2}),
        row("O333_2", {3, 3, 2, 3, 3, 4, 2, 2, 3}),
        row("O333_3", {3, 3, 2, 3, 3, 4, 2, 3, 2}),
        row("O333_4", {3, 3, 2, 3, 3, 4, 3, 2, 2}),
        row("O333_5", {3, 3, 2, 3, 3, 4, 4, 2, 2}),
        row("O333_6", {3, 3, 2, 3, 3, 4, 5, 2, 2}),
        row("O333_7", {3, 3, 2, 3, 3, 5, 2, 2, 2}),
        row("O333_8", {3, 3, 2, 3, 3, 5, 2, 2, 3}),
        row("O333_9", {3, 3, 2, 3, 3, 5, 2, 3, 2}),
        row("O333_10", {3, 3, 2, 3, 3, 5, 3, 2, 2}),
        row("O333_11", {3, 3, 2, 3, 3, 5, 4, 2, 2}),
        row("O333_12", {3, 3, 2, 3, 3, 5, 5, 2, 2}),
        row("O333_13", {3, 3, 2, 4, 3, 4, 2, 2, 2}),
        row("O333_14", {3, 3, 2, 4, 3, 4, 2, 2, 3}),
        row("O333_15", {3, 3, 2, 4, 3, 4, 2, 3, 2}),
        row("O333_16", {3, 3, 2, 4, 3, 5, 2, 2, 2}),
        row("O333_17", {3, 3, 2, 4, 3, 5, 2, 2, 3}),
        row("O333_18", {3, 3, 2, 4, 3, 5, 2, 3, 2}),
        row("O333_19", {3, 3, 2, 4, 3, 5, 3, 2, 2}),
        row("O333_20", {3, 3, 2, 5, 3, 5, 2, 2, 2}),
        row("O333_21", {3, 3, 2, 5, 3, 5, 2, 2, 3}),
        row("O333_22", {3, 3, 2, 5, 3, 5, 2, 3, 2}),
    };
    return t;
}

std::vector<CatalogRow> make_variants()
{
    std::vector<CatalogRow> out;
    for (const auto& r : builtin_tables()) {
        if (!r.family) continue;
        bool split = r.name == "O236_6,n" || r.name == "O236_8,n" || r.name == "O236_22,n" ||
                     r.name == "O236_40,n";
        if (!split) {
            out.push_back(r);
            continue;
        }
        std::string base = r.name.substr(0, r.name.find(','));
        CatalogRow even = r, odd = r;
        even.name = base + ",2k";
        even.parity = 0;
        even.min_n = r.min_n + (r.min_n % 2);
        odd.name = base + ",2k+1";
        odd.parity = 1;
        odd.min_n = r.min_n + 1 - (r.min_n % 2);
        out.push_back(even);
        out.push_back(odd);
    }
    return out;
}

} // namespace

const std::vector<CatalogRow>& builtin_tables()
{
    static const std::vector<CatalogRow> t = make_tables();
    return t;
}

const std::vector<CatalogRow>& family_variants()
{
    static const std::vector<CatalogRow> t = make_variants();
    return t;
}

Signature lookup(const std::string& name, std::optional<int> n)
{
    auto find = [](const std::vector<CatalogRow>& rows, const std::string& nm) -> const CatalogRow* {
        for (const auto& r : rows)
            if (r.name == nm) return &r;
        return nullptr;
    };
    if (const CatalogRow* r = find(builtin_tables(), name)) {
        if (!r->family) return r->instantiate();
        if (!n) throw Error(Errc::FamilyParameterOutOfRange, name + " needs a parameter n");
        return r->instantiate(*n);
    }
    if (const CatalogRow* r = find(family_variants(), name)) {
        if (!n) throw Error(Errc::FamilyParameterOutOfRange, name + " needs a parameter n");
        return r->instantiate(*n);
    }
    // "O236_5,12"
    auto comma = name.find(',');
    if (comma != std::string::npos) {
        std::string tail = name.substr(comma + 1);
        if (!tail.empty() && std::all_of(tail.begin(), tail.end(), ::isdigit)) {
            if (const CatalogRow* r = find(builtin_tables(), name.substr(0, comma) + ",n"))
                return r->instantiate(std::stoi(tail));
        }
    }
    throw Error(Errc::UnknownName, "no catalog row named " + name);
}

std::string format_line(const Signature& s)
{
    std::ostringstream os;
    if (!s.name.empty()) os << s.name << ' ';
    for (int i = 0; i < 9; ++i) os << (i ? " " : "") << s.a[i];
    return os.str();
}

Signature parse_line(const std::string& line)
{
    std::istringstream is(line);
    std::vector<std::string> tok;
    for (std::string t; is >> t;) tok.push_back(t);
    std::string name;
    if (tok.size() == 10) {
        name = tok.front();
        tok.erase(tok.begin());
    }
    if (tok.size() != 9) throw Error(Errc::Parse, "signature line needs 9 integers");
    std::array<int, 9> a{};
    for (int i = 0; i < 9; ++i) {
        try {
            size_t used = 0;
            a[i] = std::stoi(tok[i], &used);
            if (used != tok[i].size()) throw std::invalid_argument(tok[i]);
        } catch (const std::exception&) {
            throw Error(Errc::Parse, "bad integer '" + tok[i] + "'");
        }
    }
    return make_signature(a, name);
}

} // namespace prism
