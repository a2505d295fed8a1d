#pragma once

#include <array>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "perm.hpp"

namespace fx {

std::string path(const std::string& rel);  // relative to fixtures/

struct Cover {
    std::string file;   // e.g. "sigma_2_1"
    std::string sig;    // O333_2 or O333_3
};

// the four unprimed covers, then the four primed ones
const std::vector<Cover>& covers();
prism::PermRep load(const std::string& file);
prism::Signature sig(const Cover& c);
// "phi_2_1", "rho_1_plus", ...
prism::Perm map(const std::string& key);

// cycle sets of the nine relator words on sigma_2_1
struct WordCycles {
    std::string word;
    std::string cycles;
};
const std::vector<WordCycles>& sigma21_cycles();

// obstruction columns
struct Obstruction {
    std::string name;  // parity variants for split families
    int ck;            // 1 = cusp killing quotient trivial
    int dc;            // -1 for (3,3,3) rows
    int mcd;           // finite rows
    int mcd_base;      // families: lcm(mcd_base, n)
};
const std::vector<Obstruction>& obstruction_rows();

} // namespace fx
