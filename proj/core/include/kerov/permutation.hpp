#pragma once

#include <functional>
#include <vector>

namespace kerov {

// Permutation of {0, ..., n-1}. Composition convention, fixed repo-wide:
// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  explicit Permutation(int n);  // identity on n points, n >= 1
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n) { return Permutation(n); }
  // 0 -> 1 -> ... -> k-1 -> 0
  static Permutation long_cycle(int k);
  // disjoint consecutive cycles of the given lengths on {0, ..., sum-1}
  static Permutation multi_cycle(const std::vector<int>& parts);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

Permutation operator*(const Permutation& a, const Permutation& b);

using Cycle = std::vector<int>;

// Canonical decomposition: every cycle starts at its minimal element, cycles
// sorted by minimal element, fixed points included as 1-cycles.
std::vector<Cycle> cycles(const Permutation& p);
int cycle_count(const Permutation& p);
int permutation_sign(const Permutation& p);  // (-1)^(degree - cycle count)

// Orbit of 0 under the generated group covers all points.
bool is_transitive(const std::vector<Permutation>& gens, int n);

using FactorizationVisitor =
    std::function<void(const Permutation& s1, const Permutation& s2)>;

// Visits every ordered pair (s1, s2) with s1 * s2 == target; s2 runs over S(n)
// in lexicographic order of image sequences.
void enumerate_factorizations(const Permutation& target,
                              const FactorizationVisitor& visit);

// Deterministic partition of S(n) by the image of the first point: shard s
// handles first images v with v % shard_count == s. The union over shards
// visits every pair exactly once, for any shard_count >= 1.
void enumerate_factorizations_shard(const Permutation& target, int shard,
                                    int shard_count,
                                    const FactorizationVisitor& visit);

}  // namespace kerov
