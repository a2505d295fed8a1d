#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "perm.hpp"

namespace prism {

struct GraphEdge {
    int u, v;
    int label;
};

// Singular locus of the orbifold: template vertices 0..5 (0 = cusp) and labelled edges.
struct IsotropyGraph {
    std::vector<char> alive;   // per vertex
    std::vector<GraphEdge> edges;

    static IsotropyGraph from_signature(const Signature& s);
    int degree(int v) const;   // loops count twice
};

struct CuspKillResult {
    bool trivial = false;
    IsotropyGraph residual;
    std::vector<std::string> trace;
};

// Reduction order: lowest reducible vertex first, or a seeded random choice.
CuspKillResult cusp_killing(const Signature& s, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

struct DoubleCoverResult {
    bool exists = false;
    // distinct edge sets (labels) of the negative cycle through the cusp
    std::vector<std::vector<int>> witnesses;
};

// Throws Error(NotA236Cusp).
DoubleCoverResult double_cover_exists(const Signature& s);

enum class DcStatus { Exists, Absent, NotApplicable };

struct PrefilterReport {
    bool ck_trivial = false;
    DcStatus dc = DcStatus::NotApplicable;
    long long mcd = 0;
    bool eliminated = false;
    std::vector<std::string> reasons;
    static constexpr const char* ut = "not implemented";
};

PrefilterReport prefilter(const Signature& s);

struct FilterResult {
    std::size_t input = 0;
    std::size_t manifold = 0;
    std::size_t one_cusp = 0;
    std::size_t homology_z = 0;
    std::vector<PermRep> survivors;
    std::vector<std::size_t> survivor_index;  // positions in the input list
};

// Stages: manifold, one cusp, H1 = Z. Order of survivors follows the input.
FilterResult filter_covers(const Signature& s, const std::vector<PermRep>& reps, int workers = 1);

} // namespace prism
