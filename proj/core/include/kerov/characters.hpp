#pragma once

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "kerov/diagram.hpp"
#include "kerov/rational.hpp"

namespace kerov {

// Ground-truth symmetric group characters via the Murnaghan-Nakayama rule,
// memoized on (lambda, mu). The memo table supports concurrent reads with
// serialized writes.
class CharacterOracle {
 public:
  // chi^lambda(mu) for |mu| = |lambda|; zero when no border strip fits.
  Int character(const Partition& lambda, const Partition& mu);
  Int dimension(const Partition& lambda);

  // Sigma_{parts}^lambda = (n)_k chi^lambda(parts, 1^(n-k)) / dim, and 0 when
  // k = sum(parts) exceeds n = |lambda|.
  Rat normalized_character(const Partition& lambda, const std::vector<int>& parts);

  // kappa^id of cycle classes: Moebius inversion over set partitions,
  // kappa(k_1..k_l) = sum_Pi (-1)^(|Pi|-1) (|Pi|-1)! prod_b Sigma_{k_b}.
  Rat cycle_cumulant(const Partition& lambda, const std::vector<int>& ks);

 private:
  Int character_locked(const Partition& lambda, const Partition& mu);

  std::map<std::pair<Partition, Partition>, Int> memo_;
  std::shared_mutex mutex_;
};

}  // namespace kerov
