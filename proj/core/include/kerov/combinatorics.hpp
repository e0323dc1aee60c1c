#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kerov/rational.hpp"

namespace kerov {

// All set partitions of {0, ..., n-1}, as lists of blocks (each block sorted,
// blocks ordered by minimum).
void for_each_set_partition(
    int n, const std::function<void(const std::vector<std::vector<int>>&)>& visit);

// Compositions of total into exactly `parts` parts, each >= min_part, in
// lexicographic order.
void for_each_composition(
    int total, int parts, int min_part,
    const std::function<void(const std::vector<int>&)>& visit);

// Integer partitions of n (weakly decreasing), largest part first.
void for_each_partition(int n,
                        const std::function<void(const std::vector<int>&)>& visit);

// Euler characteristic of the order complex: sum over non-empty chains
// C_1 < ... < C_l in the family of (-1)^(l-1). Sets are bitmasks; duplicates
// are ignored.
Int chain_euler_characteristic(const std::vector<std::uint64_t>& family);

// The alternating chain sum including the empty chain: 1 - chi(family).
Int chain_alternating_sum(const std::vector<std::uint64_t>& family);

// sum_k (-1)^k S(n, k) k!  where S(n, k) counts set partitions into k classes;
// equals (-1)^n.
Int stirling_alternating_sum(int n);

}  // namespace kerov
