#include "perm.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "error.hpp"

namespace prism {

Perm::Perm(std::vector<int> images) : p_(std::move(images))
{
    std::vector<char> seen(p_.size(), 0);
    for (int v : p_) {
        if (v < 0 || v >= size() || seen[v]) throw Error(Errc::InvalidRep, "not a permutation");
        seen[v] = 1;
    }
}

Perm Perm::identity(int n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    Perm p;
    p.p_ = std::move(v);
    return p;
}

Perm Perm::inverse() const
{
    Perm q;
    q.p_.resize(p_.size());
    for (int i = 0; i < size(); ++i) q.p_[p_[i]] = i;
    return q;
}

Perm Perm::pow(int e) const
{
    Perm base = e < 0 ? inverse() : *this;
    Perm r = identity(size());
    for (int k = std::abs(e); k > 0; k >>= 1) {
        if (k & 1) r = compose(base, r);
        base = compose(base, base);
    }
    return r;
}

bool Perm::is_identity() const
{
    for (int i = 0; i < size(); ++i)
        if (p_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Perm::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(p_.size(), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int j = i; !seen[j]; j = p_[j]) {
            seen[j] = 1;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string Perm::cycle_string() const
{
    std::ostringstream os;
    for (const auto& c : cycles()) {
        if (c.size() == 1) continue;
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
        os << ')';
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

Perm compose(const Perm& p, const Perm& q)
{
    std::vector<int> r(q.size());
    for (int i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return Perm(std::move(r));
}

Word parse_word(const std::string& s)
{
    Word w;
    size_t i = 0;
    auto gen_of = [](char c) -> int {
        switch (std::tolower(static_cast<unsigned char>(c))) {
        case 'x': return X;
        case 'y': return Y;
        case 'z': return Z;
        case 'w': return W;
        }
        return -1;
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
            ++i;
            continue;
        }
        int g = gen_of(c);
        if (g < 0) throw Error(Errc::Parse, std::string("bad generator '") + c + "' in word");
        int e = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
        ++i;
        if (i < s.size() && s[i] == '^') {
            ++i;
            size_t used = 0;
            int k = 0;
            try {
                k = std::stoi(s.substr(i), &used);
            } catch (const std::exception&) {
                throw Error(Errc::Parse, "bad exponent in word");
            }
            if (k == 0) throw Error(Errc::Parse, "zero exponent in word");
            e *= k;
            i += used;
        }
        w.push_back({static_cast<Gen>(g), e});
    }
    return w;
}

std::string format_word(const Word& w)
{
    if (w.empty()) return "1";
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ' ';
        s += gen_char[l.g];
        if (l.e != 1) s += "^" + std::to_string(l.e);
    }
    return s;
}

Word inverse(const Word& w)
{
    Word r(w.rbegin(), w.rend());
    for (auto& l : r) l.e = -l.e;
    return r;
}

Word concat(const Word& a, const Word& b)
{
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

std::vector<Relator> relators(const Signature& s)
{
    return {
        {{{X, 1}}, s[1], 1},
        {{{Y, 1}}, s[4], 4},
        {{{Z, 1}}, s[5], 5},
        {{{W, 1}}, s[7], 7},
        {{{Y, -1}, {X, 1}}, s[3], 3},
        {{{Z, -1}, {X, 1}}, s[2], 2},
        {{{Z, -1}, {Y, 1}}, s[6], 6},
        {{{Y, -1}, {W, 1}}, s[9], 9},
        {{{Z, -1}, {W, 1}}, s[8], 8},
    };
}

PermRep make_rep(std::array<std::vector<int>, 4> images)
{
    PermRep r;
    for (int i = 1; i < 4; ++i)
        if (images[i].size() != images[0].size())
            throw Error(Errc::InvalidRep, "generator images have different degrees");
    for (int i = 0; i < 4; ++i) r.g[i] = Perm(std::move(images[i]));
    if (r.degree() == 0) throw Error(Errc::InvalidRep, "empty representation");
    return r;
}

PermRep trivial_rep()
{
    return make_rep({std::vector<int>{0}, {0}, {0}, {0}});
}

Perm evaluate_word(const PermRep& rep, const Word& w)
{
    Perm r = Perm::identity(rep.degree());
    for (const auto& l : w) r = compose(rep.g[l.g].pow(l.e), r);
    return r;
}

std::vector<std::vector<int>> orbits(int n, const std::vector<const Perm*>& gens)
{
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> orb{s};
        comp[s] = static_cast<int>(out.size());
        for (size_t k = 0; k < orb.size(); ++k)
            for (const Perm* p : gens) {
                int t = (*p)[orb[k]];
                if (comp[t] < 0) {
                    comp[t] = comp[s];
                    orb.push_back(t);
                }
            }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

ValidationReport validate_rep(const Signature& s, const PermRep& rep)
{
    ValidationReport r;
    auto rels = relators(s);
    for (size_t k = 0; k < rels.size(); ++k) {
        Perm p = evaluate_word(rep, rels[k].base).pow(rels[k].exp);
        for (int i = 0; i < p.size(); ++i)
            if (p[i] != i) {
                r.failures.push_back({static_cast<int>(k), i});
                break;
            }
    }
    r.transitive = orbits(rep.degree(), {&rep.g[0], &rep.g[1], &rep.g[2], &rep.g[3]}).size() == 1;
    return r;
}

void require_valid(const Signature& s, const PermRep& rep)
{
    auto r = validate_rep(s, rep);
    if (!r.failures.empty()) {
        auto rel = relators(s)[r.failures.front().relator];
        throw Error(Errc::RelatorViolation, "relator (" + format_word(rel.base) + ")^" +
                                                std::to_string(rel.exp) + " moves point " +
                                                std::to_string(r.failures.front().point));
    }
    if (!r.transitive) throw Error(Errc::NotTransitive, "representation is not transitive");
}

ManifoldReport is_manifold(const Signature& s, const PermRep& rep)
{
    ManifoldReport m;
    int n = rep.degree();
    auto rels = relators(s);
    bool all = true;
    for (size_t k = 0; k < rels.size(); ++k) {
        if (n % rels[k].exp) m.degree_divisible = false;
        RelatorCycles rc{static_cast<int>(k), rels[k].exp, {}, true};
        for (const auto& c : evaluate_word(rep, rels[k].base).cycles()) {
            rc.cycle_lengths.push_back(static_cast<int>(c.size()));
            if (static_cast<int>(c.size()) != rels[k].exp) rc.ok = false;
        }
        std::sort(rc.cycle_lengths.begin(), rc.cycle_lengths.end());
        all = all && rc.ok;
        m.relators.push_back(std::move(rc));
    }
    m.manifold = all && m.degree_divisible;
    return m;
}

std::vector<std::vector<int>> cusp_orbits(const PermRep& rep)
{
    return orbits(rep.degree(), {&rep.g[X], &rep.g[Z]});
}

std::vector<Perm> find_isometries(const Signature& sa, const PermRep& a, const Signature& sb,
                                  const PermRep& b, Orientation o)
{
    if (!(sa == sb)) throw Error(Errc::SignatureMismatch, "covers of different orbifolds");
    int n = a.degree();
    if (b.degree() != n) throw Error(Errc::DegreeMismatch, "covers of different degree");
    std::array<Perm, 4> tau;
    for (int g = 0; g < 4; ++g) tau[g] = o == Orientation::Preserving ? b.g[g] : b.g[g].inverse();

    std::vector<Perm> out;
    std::vector<int> phi(n), used(n);
    std::vector<int> queue;
    for (int c = 0; c < n; ++c) {
        std::fill(phi.begin(), phi.end(), -1);
        std::fill(used.begin(), used.end(), 0);
        phi[0] = c;
        used[c] = 1;
        queue.assign(1, 0);
        bool ok = true;
        for (size_t k = 0; k < queue.size() && ok; ++k) {
            int i = queue[k];
            for (int g = 0; g < 4 && ok; ++g) {
                int j = a.g[g][i], img = tau[g][phi[i]];
                if (phi[j] < 0) {
                    if (used[img]) {
                        ok = false;
                        break;
                    }
                    phi[j] = img;
                    used[img] = 1;
                    queue.push_back(j);
                } else if (phi[j] != img) {
                    ok = false;
                }
            }
        }
        // phi is the cell map A -> B; report it in the right-action convention
        if (ok && static_cast<int>(queue.size()) == n) out.push_back(Perm(phi).inverse());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_intertwine(const Perm& phi, const PermRep& a, const PermRep& b,
                       const std::vector<GenMap>& map)
{
    int n = phi.size();
    if (a.degree() != n || b.degree() != n) throw Error(Errc::DegreeMismatch, "degree mismatch");
    for (const auto& m : map) {
        Perm t = m.sign > 0 ? b.g[m.to] : b.g[m.to].inverse();
        for (int i = 0; i < n; ++i)
            if (phi[a.g[m.from][i]] != t[phi[i]]) return false;
    }
    return true;
}

std::vector<PermRep> read_reps(std::istream& in)
{
    std::vector<PermRep> out;
    std::array<std::vector<int>, 4> cur;
    std::array<bool, 4> have{};
    int count = 0;
    int lineno = 0;
    auto flush = [&] {
        if (count == 0) return;
        if (count != 4) throw Error(Errc::Parse, "rep record ending near line " + std::to_string(lineno) +
                                                     " lacks one of x,y,z,w");
        out.push_back(make_rep(cur));
        cur = {};
        have = {};
        count = 0;
    };
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            flush();
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": expected 'g: ...'");
        std::string key = line.substr(first, colon - first);
        while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
        int g = key == "x" ? 0 : key == "y" ? 1 : key == "z" ? 2 : key == "w" ? 3 : -1;
        if (g < 0) throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": unknown generator '" + key + "'");
        if (have[g]) flush();  // a new record without a blank separator
        std::istringstream is(line.substr(colon + 1));
        std::vector<int> v;
        std::string tok;
        while (is >> tok) {
            try {
                size_t used = 0;
                v.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
            }
        }
        cur[g] = std::move(v);
        have[g] = true;
        ++count;
    }
    flush();
    return out;
}

std::vector<PermRep> read_reps_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw Error(Errc::Io, "cannot open " + path);
    return read_reps(f);
}

void write_rep(std::ostream& out, const PermRep& rep)
{
    for (int g = 0; g < 4; ++g) {
        out << gen_char[g] << ':';
        for (int v : rep.g[g].images()) out << ' ' << v;
        out << '\n';
    }
}

} // namespace prism
