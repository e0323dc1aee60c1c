#pragma once

#include <vector>

#include "kerov/rational.hpp"
#include "kerov/series.hpp"

namespace kerov {

// Weakly decreasing positive row lengths.
using Partition = std::vector<int>;

bool is_partition(const Partition& rows);

// Generalized Young diagram made of stacked rectangle bands: band i has
// height p_i and width q_i, with q_1 >= q_2 >= ... > 0 (French convention,
// widest band at the bottom). Construction normalizes away zero bands and
// merges adjacent bands of equal width.
class MultiRectangular {
 public:
  MultiRectangular() = default;  // empty diagram
  MultiRectangular(std::vector<Rat> heights, std::vector<Rat> widths);
  static MultiRectangular from_partition(const Partition& rows);

  const std::vector<Rat>& heights() const { return p_; }
  const std::vector<Rat>& widths() const { return q_; }
  int bands() const { return static_cast<int>(p_.size()); }
  bool empty() const { return p_.empty(); }
  Rat area() const;

  bool operator==(const MultiRectangular&) const = default;

 private:
  std::vector<Rat> p_, q_;
};

MultiRectangular dilate(const MultiRectangular& d, const Rat& s);

// Fundamental shape functionals S_n = (n-1) * integral of content^(n-2) over
// the diagram, content = x - y. Exact closed form per band; S_1 = 0.
TruncatedSeries s_functionals(const MultiRectangular& d, int nmax);

// Moments of the Kerov transition measure: z G(z) = exp S(z); M_1 = 0.
TruncatedSeries transition_moments(const MultiRectangular& d, int nmax);

// Free cumulants of the diagram, R_n = r_from_s(s_functionals); R_1 = 0.
TruncatedSeries free_cumulants(const MultiRectangular& d, int nmax);

// Normalized character on a k-cycle straight from the Cauchy transform:
// Sigma_k = -(1/k) [z^{-1}] 1/(G(z-1) G(z-2) ... G(z-k)).
Rat frobenius_character(const MultiRectangular& d, int k);

}  // namespace kerov
