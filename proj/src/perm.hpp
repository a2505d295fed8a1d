#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "catalog.hpp"

namespace prism {

// images[i] is the image of i.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);  // throws Error(InvalidRep) unless bijective
    static Perm identity(int n);

    int size() const { return static_cast<int>(p_.size()); }
    int operator[](int i) const { return p_[i]; }
    const std::vector<int>& images() const { return p_; }

    Perm inverse() const;
    Perm pow(int e) const;  // negative exponents allowed
    bool is_identity() const;
    std::vector<std::vector<int>> cycles() const;  // each cycle starts at its least point
    std::string cycle_string() const;

    bool operator==(const Perm& o) const { return p_ == o.p_; }
    bool operator<(const Perm& o) const { return p_ < o.p_; }

private:
    std::vector<int> p_;
};

// compose(p, q)(i) = p[q[i]]
Perm compose(const Perm& p, const Perm& q);

enum Gen : int { X = 0, Y = 1, Z = 2, W = 3 };
constexpr char gen_char[4] = {'x', 'y', 'z', 'w'};

struct Letter {
    Gen g;
    int e;  // nonzero
};
using Word = std::vector<Letter>;

Word parse_word(const std::string& s);  // "y^-1 x", "Yx" (capital = inverse), "" = identity
std::string format_word(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

struct Relator {
    Word base;
    int exp;
    int label;  // edge label j with exp == a_j
};

// (x,a1),(y,a4),(z,a5),(w,a7),(y^-1x,a3),(z^-1x,a2),(z^-1y,a6),(y^-1w,a9),(z^-1w,a8)
std::vector<Relator> relators(const Signature& s);

struct PermRep {
    std::array<Perm, 4> g;

    int degree() const { return g[0].size(); }
    const Perm& operator[](Gen i) const { return g[i]; }
    bool operator==(const PermRep& o) const { return g == o.g; }
    bool operator<(const PermRep& o) const { return g < o.g; }
};

PermRep make_rep(std::array<std::vector<int>, 4> images);  // checks sizes and bijectivity
PermRep trivial_rep();

// Right action: chi1^a1 ... chik^ak  ->  s(chik)^ak o ... o s(chi1)^a1
Perm evaluate_word(const PermRep& rep, const Word& w);

struct RelatorFailure {
    int relator;  // index into relators()
    int point;    // first point not fixed by base^exp
};

struct ValidationReport {
    std::vector<RelatorFailure> failures;
    bool transitive = true;
    bool ok() const { return failures.empty() && transitive; }
};

ValidationReport validate_rep(const Signature& s, const PermRep& rep);
// Throws Error(RelatorViolation | NotTransitive) with the first problem.
void require_valid(const Signature& s, const PermRep& rep);

struct RelatorCycles {
    int relator;
    int exp;
    std::vector<int> cycle_lengths;  // sorted
    bool ok;                         // all lengths equal exp
};

struct ManifoldReport {
    bool manifold = false;
    bool degree_divisible = true;
    std::vector<RelatorCycles> relators;
};

ManifoldReport is_manifold(const Signature& s, const PermRep& rep);

std::vector<std::vector<int>> orbits(int n, const std::vector<const Perm*>& gens);
std::vector<std::vector<int>> cusp_orbits(const PermRep& rep);

enum class Orientation { Preserving, Reversing };

// All phi with phi.sA(g) = sB(g)^(+-1).phi, products read left to right as for right
// actions, i.e. sA(g) o phi = phi o sB(g)^(+-1). The cell map A -> B is phi^-1.
// Sorted by images.
std::vector<Perm> find_isometries(const Signature& sa, const PermRep& a, const Signature& sb,
                                  const PermRep& b, Orientation o);

struct GenMap {
    Gen from;
    Gen to;
    int sign;  // +1 or -1
};

// phi o sA(g) == sB(g')^sign o phi for every entry
bool verify_intertwine(const Perm& phi, const PermRep& a, const PermRep& b,
                       const std::vector<GenMap>& map);

// Rep files: "x: i0 i1 ..." / y / z / w, records separated by blank lines. '#' starts a comment.
std::vector<PermRep> read_reps(std::istream& in);
std::vector<PermRep> read_reps_file(const std::string& path);
void write_rep(std::ostream& out, const PermRep& rep);

} // namespace prism
