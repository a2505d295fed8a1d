#include "fixtures.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace fx {

std::string path(const std::string& rel)
{
    return std::string(PRISM_SOURCE_DIR) + "/fixtures/" + rel;
}

const std::vector<Cover>& covers()
{
    static const std::vector<Cover> c = {
        {"sigma_2_1", "O333_2"},   {"sigma_2_2", "O333_2"},   {"sigma_3_1", "O333_3"},   {"sigma_3_2", "O333_3"},
        {"sigma_p_2_1", "O333_2"}, {"sigma_p_2_2", "O333_2"}, {"sigma_p_3_1", "O333_3"}, {"sigma_p_3_2", "O333_3"},
    };
    return c;
}

prism::PermRep load(const std::string& file)
{
    auto reps = prism::read_reps_file(path(file + ".rep"));
    if (reps.size() != 1) throw prism::Error(prism::Errc::Parse, file + ": expected one rep");
    return reps.front();
}

prism::Signature sig(const Cover& c)
{
    return prism::lookup(c.sig);
}

prism::Perm map(const std::string& key)
{
    std::ifstream f(path("maps.txt"));
    for (std::string line; std::getline(f, line);) {
        auto c = line.find(':');
        if (c == std::string::npos || line.substr(0, c) != key) continue;
        std::istringstream is(line.substr(c + 1));
        std::vector<int> v;
        for (int x; is >> x;) v.push_back(x);
        return prism::Perm(v);
    }
    throw prism::Error(prism::Errc::UnknownName, "no map " + key);
}

const std::vector<WordCycles>& sigma21_cycles()
{
    static const std::vector<WordCycles> c = {
        {"x", "(0,1,2)(3,12,7)(4,10,16)(5,19,15)(6,18,11)(8,20,9)(13,17,14)(21,22,23)"},
        {"y", "(0,3,4)(1,6,7)(2,10,11)(5,20,21)(8,19,17)(9,14,23)(12,18,16)(13,15,22)"},
        {"z", "(0,2,5)(1,8,9)(3,13,14)(4,17,10)(6,22,21)(7,12,23)(11,18,20)(15,19,16)"},
        {"w", "(0,1)(2,9)(3,15)(4,18)(5,8)(6,12)(7,22)(10,20)(11,17)(13,16)(14,19)(21,23)"},
        {"Yx", "(0,10)(1,3)(2,6)(4,12)(5,22)(7,18)(8,14)(9,21)(11,16)(13,23)(15,17)(19,20)"},
        {"Zx", "(0,19,5)(1,8,2)(3,13,12)(4,16,15)(6,22,18)(7,21,23)(9,20,11)(10,14,17)"},
        {"Zy", "(0,20,16,17)(1,14,15,12)(2,3,23,18)(4,11,21,13)(5,10,8,6)(7,9,19,22)"},
        {"Yw", "(0,18,6)(1,22,3)(2,17,14)(4,15,16)(5,23,19)(7,12,13)(8,11,20)(9,21,10)"},
        {"Zw", "(0,8)(1,2)(3,19)(4,20)(5,9)(6,23)(7,21)(10,11)(12,22)(13,15)(14,16)(17,18)"},
    };
    return c;
}

const std::vector<Obstruction>& obstruction_rows()
{
    static const std::vector<Obstruction> r = [] {
        std::vector<Obstruction> v;
        struct R { int row, ck, dc, mcd; };
        const R t5[] = {{1, 0, 1, 24},   {2, 1, 1, 24},   {3, 0, 0, 60},   {4, 1, 0, 60},   {9, 0, 1, 24},
                        {10, 0, 1, 24},  {11, 0, 1, 60},  {12, 1, 1, 60},  {14, 0, 0, 12},  {15, 1, 0, 12},
                        {16, 0, 0, 24},  {17, 1, 0, 60},  {18, 0, 1, 24},  {19, 1, 1, 24},  {20, 0, 0, 60},
                        {21, 1, 0, 60},  {23, 0, 1, 24},  {24, 0, 1, 24},  {25, 0, 1, 24},  {26, 1, 1, 24},
                        {27, 0, 1, 24},  {28, 0, 1, 24},  {29, 0, 1, 120}, {30, 1, 1, 120}, {32, 0, 1, 60},
                        {33, 1, 1, 60},  {34, 0, 0, 60},  {35, 1, 0, 60},  {36, 0, 1, 120}, {37, 1, 1, 120},
                        {38, 0, 0, 60},  {39, 1, 0, 60}};
        for (const auto& x : t5) v.push_back({"O236_" + std::to_string(x.row), x.ck, x.dc, x.mcd, 0});
        v.push_back({"O236_5,n", 0, 1, 0, 12});
        v.push_back({"O236_6,2k", 0, 1, 0, 12});
        v.push_back({"O236_6,2k+1", 1, 1, 0, 12});
        v.push_back({"O236_7,n", 0, 1, 0, 24});
        v.push_back({"O236_8,2k", 0, 1, 0, 60});
        v.push_back({"O236_8,2k+1", 1, 1, 0, 60});
        v.push_back({"O236_13,n", 0, 1, 0, 12});
        v.push_back({"O236_22,2k", 0, 1, 0, 12});
        v.push_back({"O236_22,2k+1", 0, 0, 0, 12});
        v.push_back({"O236_31,n", 0, 1, 0, 24});
        v.push_back({"O236_40,2k", 0, 1, 0, 60});
        v.push_back({"O236_40,2k+1", 0, 0, 0, 60});
        const int t6[22][2] = {{0, 24},  {1, 24},  {1, 24},  {1, 24},  {0, 24}, {1, 120}, {0, 60}, {1, 60},
                               {1, 60},  {1, 60},  {0, 120}, {1, 60},  {0, 24}, {0, 24},  {0, 24}, {0, 120},
                               {1, 120}, {1, 120}, {1, 120}, {0, 60},  {1, 60}, {1, 60}};
        for (int i = 0; i < 22; ++i) v.push_back({"O333_" + std::to_string(i + 1), t6[i][0], -1, t6[i][1], 0});
        return v;
    }();
    return r;
}

} // namespace fx
