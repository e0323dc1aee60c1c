#include <doctest.h>

#include "kerov/combinatorics.hpp"

using namespace kerov;

TEST_CASE("set partitions") {
  int bell4 = 0;
  for_each_set_partition(4, [&](const std::vector<std::vector<int>>& blocks) {
    ++bell4;
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    CHECK(total == 4);
  });
  CHECK(bell4 == 15);
}

TEST_CASE("compositions") {
  std::vector<std::vector<int>> seen;
  for_each_composition(7, 3, 2, [&](const std::vector<int>& c) { seen.push_back(c); });
  CHECK(seen == std::vector<std::vector<int>>{
                    {2, 2, 3}, {2, 3, 2}, {3, 2, 2}});
  int none = 0;
  for_each_composition(3, 2, 2, [&](const std::vector<int>&) { ++none; });
  CHECK(none == 0);
}

TEST_CASE("integer partitions") {
  std::vector<std::vector<int>> parts;
  for_each_partition(4, [&](const std::vector<int>& p) { parts.push_back(p); });
  CHECK(parts == std::vector<std::vector<int>>{
                     {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
}

TEST_CASE("chain euler characteristic") {
  CHECK(chain_euler_characteristic({0b1}) == 1);
  CHECK(chain_euler_characteristic({0b01, 0b11}) == 1);  // chains: two 1-chains, one 2-chain
  CHECK(chain_euler_characteristic({}) == 0);
  // antichain of two sets: two 1-chains, no 2-chain
  CHECK(chain_euler_characteristic({0b01, 0b10}) == 2);
  // duplicates ignored
  CHECK(chain_euler_characteristic({0b1, 0b1}) == 1);
  CHECK(chain_alternating_sum({}) == 1);
  CHECK(chain_alternating_sum({0b01, 0b10}) == -1);
}

TEST_CASE("stirling alternating sum") {
  CHECK(stirling_alternating_sum(1) == -1);
  CHECK(stirling_alternating_sum(2) == 1);
  CHECK(stirling_alternating_sum(3) == -1);
  for (int n = 1; n <= 12; ++n)
    CHECK(stirling_alternating_sum(n) == (n % 2 == 0 ? 1 : -1));
}
