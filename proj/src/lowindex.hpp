#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "perm.hpp"

namespace prism {

struct EnumerationTask {
    Signature sig;
    int max_index = 1;
};

struct EnumerationStats {
    std::uint64_t nodes = 0;
    std::uint64_t results = 0;
    std::vector<std::uint64_t> by_index;  // by_index[k] = classes of index k
};

struct EnumerationOptions {
    int workers = 1;
    int split_depth = 3;  // prefixes = search nodes at this branching depth
    // called in search order; may be null
    std::function<void(const PermRep&)> sink;
    // progress(prefixes done, prefixes total, results so far)
    std::function<void(std::size_t, std::size_t, std::uint64_t)> progress;
    // with a checkpoint path, completed prefixes are recorded there and their
    // reps appended to output_path; an existing checkpoint is resumed
    std::string checkpoint_path;
    std::string output_path;
};

// One transitive representation per conjugacy class of subgroups of index <= max_index.
// Results come out in a fixed search order that does not depend on the worker count.
EnumerationStats enumerate_subgroups(const EnumerationTask& task, const EnumerationOptions& opt = {});
std::vector<PermRep> enumerate_subgroups_list(const Signature& s, int max_index, int workers = 1);

// Exhaustive oracle; throws Error(IndexTooLarge) above 8.
std::vector<PermRep> brute_force_reps(const Signature& s, int index);

// Canonical relabelling under simultaneous conjugation: minimum over all
// base points of the breadth-first standardisation.
PermRep canonical_form(const PermRep& r);

} // namespace prism
