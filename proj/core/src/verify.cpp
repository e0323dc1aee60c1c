#include "kerov/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "kerov/characters.hpp"
#include "kerov/combinatorics.hpp"
#include "kerov/diagram.hpp"
#include "kerov/kerov.hpp"
#include "kerov/marriage.hpp"
#include "kerov/permutation.hpp"
#include "kerov/series.hpp"
#include "kerov/stanley.hpp"

namespace kerov {

bool RunReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string format_report(const RunReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (c.seeded) os << " (seed " << c.seed << ")";
    os << " [" << c.seconds << " s]\n";
    for (const auto& d : c.details) os << "       " << d << "\n";
  }
  os << (report.all_passed() ? "all checks passed\n" : "CHECKS FAILED\n");
  return os.str();
}

namespace {

class Checker {
 public:
  explicit Checker(std::string name) : start_(clock::now()) {
    result_.name = std::move(name);
    result_.passed = true;
  }

  void seed(std::uint64_t s) {
    result_.seeded = true;
    result_.seed = s;
  }

  void require(bool ok, const std::string& what) {
    if (!ok) {
      result_.passed = false;
      if (result_.details.size() < 20) result_.details.push_back(what);
    }
  }

  void note(const std::string& line) { result_.details.push_back(line); }

  CheckResult finish() {
    result_.seconds =
        std::chrono::duration<double>(clock::now() - start_).count();
    return std::move(result_);
  }

 private:
  using clock = std::chrono::steady_clock;
  CheckResult result_;
  clock::time_point start_;
};

std::vector<Partition> partitions_up_to(int max_boxes) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_boxes; ++n)
    for_each_partition(n, [&](const std::vector<int>& lam) { out.push_back(lam); });
  return out;
}

Rat evaluate_at_series(const CumulantPolynomial& poly, const TruncatedSeries& s) {
  return poly.evaluate([&](int idx) { return s.coeff(idx); });
}

std::string desc(const std::vector<int>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

Rat random_rational(std::mt19937_64& rng, int num_lo, int num_hi, int den_hi) {
  std::uniform_int_distribution<int> num(num_lo, num_hi), den(1, den_hi);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

MultiRectangular random_diagram(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bands(1, 3);
  const int m = bands(rng);
  std::vector<Rat> p, q;
  Rat width = Rat(0);
  for (int i = 0; i < m; ++i) {
    p.push_back(random_rational(rng, 1, 4, 3));
    width += random_rational(rng, 1, 4, 3);
  }
  for (int i = 0; i < m; ++i) {
    q.push_back(width);
    width -= random_rational(rng, 0, 1, 3) * Rat(1, 2);
    if (width <= 0) width = Rat(1, 7);
    if (width > q.back()) width = q.back();
  }
  return MultiRectangular(std::move(p), std::move(q));
}

}  // namespace

CheckResult verify_oracle_identity(int max_boxes, int max_k) {
  Checker check("oracle-identity: MN characters vs K_k at free cumulants (|lambda| <= " +
                std::to_string(max_boxes) + ", k <= " + std::to_string(max_k) + ")");
  CharacterOracle oracle;
  std::vector<CumulantPolynomial> kerov(max_k + 1);
  for (int k = 1; k <= max_k; ++k) kerov[k] = kerov_polynomial(k).polynomial;
  for (const auto& lam : partitions_up_to(max_boxes)) {
    MultiRectangular d = MultiRectangular::from_partition(lam);
    TruncatedSeries r = free_cumulants(d, max_k + 1);
    for (int k = 1; k <= max_k; ++k) {
      Rat expected = oracle.normalized_character(lam, {k});
      Rat via_kerov = evaluate_at_series(kerov[k], r);
      check.require(expected == via_kerov,
                    "K_" + std::to_string(k) + " mismatch at lambda=" + desc(lam) +
                        ": oracle " + rational_to_string(expected) + " vs " +
                        rational_to_string(via_kerov));
      Rat via_frobenius = frobenius_character(d, k);
      check.require(expected == via_frobenius,
                    "Frobenius mismatch at lambda=" + desc(lam) + ", k=" +
                        std::to_string(k));
    }
  }
  return check.finish();
}

CheckResult verify_generalized(int max_sum, int max_boxes) {
  Checker check("generalized: (-1)^(l-1) kappa^id vs generalized polynomials (sum <= " +
                std::to_string(max_sum) + ", |lambda| <= " + std::to_string(max_boxes) + ")");
  CharacterOracle oracle;
  auto lams = partitions_up_to(max_boxes);

  // sanity: K_{1,1} = R_2 and parts=[k] matches the plain polynomial
  CumulantPolynomial r2 = CumulantPolynomial::variable(2);
  check.require(generalized_kerov({1, 1}).polynomial == r2,
                "K_{1,1} != R_2");
  for (int k = 1; k <= std::min(max_sum, 5); ++k)
    check.require(generalized_kerov({k}).polynomial ==
                      kerov_polynomial(k).polynomial,
                  "K_{[k]} != K_k at k=" + std::to_string(k));

  for (int total = 1; total <= max_sum; ++total) {
    for_each_partition(total, [&](const std::vector<int>& parts) {
      CumulantPolynomial poly = generalized_kerov(parts).polynomial;
      const int l = static_cast<int>(parts.size());
      for (const auto& lam : lams) {
        TruncatedSeries r =
            free_cumulants(MultiRectangular::from_partition(lam), total + 1);
        Rat kappa = oracle.cycle_cumulant(lam, parts);
        if (l % 2 == 0) kappa = -kappa;
        Rat via_poly = evaluate_at_series(poly, r);
        check.require(kappa == via_poly,
                      "mismatch parts=" + desc(parts) + " lambda=" + desc(lam) +
                          ": " + rational_to_string(kappa) + " vs " +
                          rational_to_string(via_poly));
      }
    });
  }
  return check.finish();
}

CheckResult verify_dual_route(int max_k) {
  Checker check("dual-route: derivative assembly vs direct enumeration (k <= " +
                std::to_string(max_k) + ")");
  for (int k = 1; k <= max_k; ++k) {
    CumulantPolynomial via_enum = kerov_polynomial(k).polynomial;
    CumulantPolynomial via_deriv = kerov_via_derivatives(k);
    check.require(via_enum == via_deriv,
                  "routes disagree at k=" + std::to_string(k) + ": " +
                      via_enum.to_text() + " vs " + via_deriv.to_text());
  }
  return check.finish();
}

CheckResult verify_linear_quadratic(int max_k) {
  Checker check("linear/quadratic: special-case counters vs coefficients (k <= " +
                std::to_string(max_k) + ")");
  for (int k = 1; k <= max_k; ++k) {
    CumulantPolynomial poly = kerov_polynomial(k).polynomial;
    for (int l = 2; l <= k + 1; ++l) {
      Rat coeff = poly.coefficient(Monomial{{l, 1}});
      check.require(Rat(static_cast<long>(linear_coefficient(k, l))) == coeff,
                    "linear counter mismatch k=" + std::to_string(k) +
                        " l=" + std::to_string(l));
    }
    for (int l1 = 2; l1 <= k; ++l1)
      for (int l2 = l1; l1 + l2 <= k + 1; ++l2) {
        Monomial m = l1 == l2 ? Monomial{{l1, 2}} : Monomial{{l1, 1}, {l2, 1}};
        Rat coeff = poly.coefficient(m);
        check.require(
            Rat(static_cast<long>(quadratic_coefficient(k, l1, l2))) == coeff,
            "quadratic counter mismatch k=" + std::to_string(k) + " (" +
                std::to_string(l1) + "," + std::to_string(l2) + ")");
        check.require(quadratic_identity_check(k, l1, l2),
                      "mixed-derivative identity fails at k=" +
                          std::to_string(k) + " (" + std::to_string(l1) + "," +
                          std::to_string(l2) + ")");
      }
  }
  return check.finish();
}

CheckResult verify_condition_equivalence(int max_k) {
  Checker check(
      "condition-equivalence: marriage == double-marriage == q-admissible, "
      "pruning sound (k <= " + std::to_string(max_k) + ")");
  std::uint64_t triples = 0, pruned_pairs = 0;
  for (int k = 1; k <= max_k; ++k) {
    enumerate_factorizations(
        Permutation::long_cycle(k),
        [&](const Permutation& s1, const Permutation& s2) {
          IntersectionGraph g = build_intersection_graph(s1, s2);
          const int total = g.white_count + g.black_count();
          const bool pruned = has_disconnecting_edge(g);
          if (pruned) ++pruned_pairs;
          for_each_composition(
              total, g.black_count(), 2, [&](const std::vector<int>& q) {
                ++triples;
                const bool strict = marriage_condition(g, q);
                const bool doubled = double_marriage_condition(g, q);
                const bool transport = q_admissible(g, q);
                check.require(strict == doubled && doubled == transport,
                              "conditions disagree at k=" + std::to_string(k) +
                                  " s2=" + desc(s2.images()) + " q=" + desc(q));
                if (pruned)
                  check.require(!strict, "pruned pair passes the marriage "
                                         "condition: k=" + std::to_string(k) +
                                             " s2=" + desc(s2.images()));
              });
        });
  }
  check.note("checked " + std::to_string(triples) + " (pair, coloring) triples, " +
             std::to_string(pruned_pairs) + " pruned pairs");
  return check.finish();
}

namespace {

std::vector<std::vector<int>> random_set_partition(std::mt19937_64& rng, int r) {
  std::vector<int> rgs(r, 0);
  int mx = 0;
  for (int i = 1; i < r; ++i) {
    std::uniform_int_distribution<int> pick(0, mx + 1);
    rgs[i] = pick(rng);
    mx = std::max(mx, rgs[i]);
  }
  std::vector<std::vector<int>> blocks(mx + 1);
  for (int i = 0; i < r; ++i) blocks[rgs[i]].push_back(i);
  return blocks;
}

}  // namespace

CheckResult verify_lemmas(std::uint64_t seed) {
  Checker check("lemmas: Euler characteristic, Stirling sum, chain identities");
  check.seed(seed);
  std::mt19937_64 rng(seed);

  // Closure families: chi == 1 whenever A&B or A|B stays in the family.
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> ground_pick(2, 7), count_pick(1, 5);
    const int ground = ground_pick(rng);
    std::uniform_int_distribution<std::uint64_t> set_pick(
        0, (std::uint64_t(1) << ground) - 1);
    std::vector<std::uint64_t> family;
    for (int i = 0, n = count_pick(rng); i < n; ++i)
      family.push_back(set_pick(rng));
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < family.size() && !changed; ++i)
        for (std::size_t j = i; j < family.size() && !changed; ++j) {
          std::uint64_t meet = family[i] & family[j];
          std::uint64_t join = family[i] | family[j];
          bool has_meet =
              std::find(family.begin(), family.end(), meet) != family.end();
          bool has_join =
              std::find(family.begin(), family.end(), join) != family.end();
          if (!has_meet && !has_join) {
            family.push_back(rng() % 2 ? meet : join);
            changed = true;
          }
        }
    }
    check.require(chain_euler_characteristic(family) == 1,
                  "closure family with chi != 1 (trial " + std::to_string(trial) + ")");
  }

  for (int n = 1; n <= 12; ++n)
    check.require(stirling_alternating_sum(n) == (n % 2 == 0 ? 1 : -1),
                  "Stirling alternating sum wrong at n=" + std::to_string(n));

  // Chain identity over genuine factorizations: the alternating sum over the
  // family of neighborhood-violating subsets detects exactly the triples with
  // no violation.
  for (int k = 1; k <= 5; ++k) {
    enumerate_factorizations(
        Permutation::long_cycle(k),
        [&](const Permutation& s1, const Permutation& s2) {
          IntersectionGraph g = build_intersection_graph(s1, s2);
          const int m = g.black_count();
          for_each_composition(
              g.white_count + m, m, 2, [&](const std::vector<int>& q) {
                std::vector<std::uint64_t> bad;
                for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << m);
                     ++mask) {
                  std::uint64_t nbhd = 0;
                  long demand = 0;
                  for (int j = 0; j < m; ++j)
                    if (mask >> j & 1) {
                      nbhd |= g.black_whites[j];
                      demand += q[j] - 1;
                    }
                  if (std::popcount(nbhd) <= demand) bad.push_back(mask);
                }
                Int expected = bad.empty() ? 1 : 0;
                check.require(chain_alternating_sum(bad) == expected,
                              "factorization chain sum wrong at k=" +
                                  std::to_string(k) + " q=" + desc(q));
              });
        });
  }

  // Equal-sum sequences: detector is (-1)^(r-1) iff the sequences agree.
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<int> r_pick(1, 5), v_pick(1, 4);
    const int r = r_pick(rng);
    std::vector<int> ks(r), ns;
    for (auto& v : ks) v = v_pick(rng);
    ns = ks;
    if (rng() % 10 < 7) {
      for (int moves = 0; moves < 3; ++moves) {
        int i = static_cast<int>(rng() % r), j = static_cast<int>(rng() % r);
        if (ns[i] > 1) {
          --ns[i];
          ++ns[j];
        }
      }
    }
    std::vector<std::uint64_t> family;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << r); ++mask) {
      long sk = 0, sn = 0;
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1) {
          sk += ks[i];
          sn += ns[i];
        }
      if (sk <= sn) family.push_back(mask);
    }
    Int expected = 0;
    if (ks == ns) expected = (r % 2 == 1) ? 1 : -1;
    check.require(chain_alternating_sum(family) == expected,
                  "sequence chain sum wrong: k=" + desc(ks) + " n=" + desc(ns));
  }

  // Block-function variant (all n_i >= 2, phi(b) >= |b|).
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<int> r_pick(1, 5), v_pick(2, 5);
    const int r = r_pick(rng);
    std::vector<int> ns(r);
    for (auto& v : ns) v = v_pick(rng);
    auto blocks = random_set_partition(rng, r);
    const int nb = static_cast<int>(blocks.size());
    const int total = std::accumulate(ns.begin(), ns.end(), 0);
    std::vector<int> phi(nb);
    bool equality = rng() % 2 == 0;
    if (equality) {
      for (int b = 0; b < nb; ++b) {
        phi[b] = 0;
        for (int i : blocks[b]) phi[b] += ns[i];
      }
    } else {
      int used = 0;
      for (int b = 0; b < nb; ++b) {
        phi[b] = static_cast<int>(blocks[b].size());
        used += phi[b];
      }
      for (int extra = total - used; extra > 0; --extra)
        ++phi[rng() % nb];
    }
    std::vector<std::uint64_t> family;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << r); ++mask) {
      long lhs = 0, rhs = 0;
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1) rhs += ns[i];
      for (int b = 0; b < nb; ++b) {
        bool meets = false;
        int outside = 0;
        for (int i : blocks[b]) {
          if (mask >> i & 1)
            meets = true;
          else
            ++outside;
        }
        if (meets) lhs += phi[b] - outside;
      }
      if (lhs <= rhs) family.push_back(mask);
    }
    bool exact = true;
    for (int b = 0; b < nb && exact; ++b) {
      int s = 0;
      for (int i : blocks[b]) s += ns[i];
      exact = phi[b] == s;
    }
    Int expected = 0;
    if (exact) expected = (nb % 2 == 1) ? 1 : -1;
    check.require(chain_alternating_sum(family) == expected,
                  "block chain sum wrong at trial " + std::to_string(trial));
  }

  return check.finish();
}

CheckResult verify_divisibility(const std::vector<int>& primes) {
  Checker check("divisibility: (K_p - R_{p+1} + 2R_2)/p and (K_{p-1} - R_p)/p");
  for (int p : primes) {
    try {
      PrimeDivisibilityReport report = prime_divisibility_report(p);
      check.require(report.sigma_quotient.coefficients_integral() &&
                        report.sigma_quotient.coefficients_nonnegative(),
                    "sigma quotient not nonnegative-integral at p=" +
                        std::to_string(p));
      check.require(report.lower_quotient.coefficients_integral() &&
                        report.lower_quotient.coefficients_nonnegative(),
                    "lower quotient not nonnegative-integral at p=" +
                        std::to_string(p));
      check.note("p=" + std::to_string(p) + ": (K_p - R_" +
                 std::to_string(p + 1) + " + 2R_2)/" + std::to_string(p) +
                 " = " + report.sigma_quotient.to_text());
    } catch (const std::exception& e) {
      check.require(false, std::string("divisibility threw: ") + e.what());
    }
  }
  return check.finish();
}

CheckResult verify_homogeneity(std::uint64_t seed, int diagram_count) {
  Checker check("homogeneity: R_k(s d) = s^k R_k(d), S_n(s d) = s^n S_n(d)");
  check.seed(seed);
  std::mt19937_64 rng(seed);
  const int order = 6;
  const std::vector<Rat> scales{Rat(2), Rat(3, 2)};
  for (int i = 0; i < diagram_count; ++i) {
    MultiRectangular d = random_diagram(rng);
    TruncatedSeries r = free_cumulants(d, order);
    TruncatedSeries s = s_functionals(d, order);
    for (const Rat& scale : scales) {
      MultiRectangular scaled = dilate(d, scale);
      TruncatedSeries rs = free_cumulants(scaled, order);
      TruncatedSeries ss = s_functionals(scaled, order);
      for (int n = 2; n <= order; ++n) {
        check.require(rs.coeff(n) == rat_pow(scale, n) * r.coeff(n),
                      "R_" + std::to_string(n) + " not homogeneous (diagram " +
                          std::to_string(i) + ")");
        check.require(ss.coeff(n) == rat_pow(scale, n) * s.coeff(n),
                      "S_" + std::to_string(n) + " not homogeneous (diagram " +
                          std::to_string(i) + ")");
      }
    }
    check.require(dilate(d, Rat(1)) == d, "dilation by 1 changed the diagram");
  }
  return check.finish();
}

CheckResult verify_series_calculus(std::uint64_t seed) {
  Checker check("series-calculus: roundtrips, non-crossing brute force, commuting square");
  check.seed(seed);
  std::mt19937_64 rng(seed);

  const int order = 10;
  for (int trial = 0; trial < 25; ++trial) {
    TruncatedSeries r(SeriesRole::free_cumulants, order);
    for (int n = 1; n <= order; ++n)
      r.set_coeff(n, random_rational(rng, -5, 5, 4));
    check.require(r_from_s(s_from_r(r)) == r, "R -> S -> R roundtrip failed");
    check.require(lagrange_free_cumulant(moments_from_free_cumulants(r)) == r,
                  "R -> M -> R roundtrip failed");
  }

  // Moments from cumulants vs the sum over explicitly enumerated non-crossing
  // partitions, n <= 8.
  {
    TruncatedSeries r(SeriesRole::free_cumulants, 8);
    for (int n = 1; n <= 8; ++n) r.set_coeff(n, random_rational(rng, -4, 4, 3));
    TruncatedSeries m = moments_from_free_cumulants(r);
    for (int n = 1; n <= 8; ++n) {
      Rat brute = 0;
      for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
        // crossing: a < b < c < d with {a,c} and {b,d} in different blocks
        std::vector<int> owner(n);
        for (std::size_t b = 0; b < blocks.size(); ++b)
          for (int x : blocks[b]) owner[x] = static_cast<int>(b);
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
              for (int d2 = c + 1; d2 < n; ++d2)
                if (owner[a] == owner[c] && owner[b] == owner[d2] &&
                    owner[a] != owner[b])
                  return;
        Rat prod = 1;
        for (const auto& block : blocks)
          prod *= r.coeff(static_cast<int>(block.size()));
        brute += prod;
      });
      check.require(m.coeff(n) == brute,
                    "non-crossing brute force disagrees at n=" + std::to_string(n));
    }
  }

  // Commuting square on random diagrams.
  for (int trial = 0; trial < 10; ++trial) {
    MultiRectangular d = random_diagram(rng);
    TruncatedSeries via_lagrange = lagrange_free_cumulant(transition_moments(d, 8));
    TruncatedSeries via_s = free_cumulants(d, 8);
    bool same = true;
    for (int n = 1; n <= 8; ++n)
      same = same && via_lagrange.coeff(n) == via_s.coeff(n);
    check.require(same, "commuting square broken (trial " + std::to_string(trial) + ")");
  }

  // dS_n/dR_k == dM_{n-1}/dR_{k-1} as polynomial identities.
  for (int n = 2; n <= 8; ++n) {
    CumulantPolynomial sn = symbolic_s_in_r(n);
    CumulantPolynomial mn1 = symbolic_moment_in_r(n - 1);
    for (int k = 2; k <= n; ++k)
      check.require(sn.derivative(k) == mn1.derivative(k - 1),
                    "dS/dR identity fails at n=" + std::to_string(n) +
                        ", k=" + std::to_string(k));
  }
  return check.finish();
}

CheckResult verify_goulden_rattan(int max_k) {
  Checker check("goulden-rattan: derived rewrites, nonnegativity report (k <= " +
                std::to_string(max_k) + ")");
  auto kerov_for = [&](int k) { return kerov_polynomial(k).polynomial; };
  CumulantPolynomial l2 = goulden_rattan_L(2, kerov_for(2));
  check.require(l2.is_zero(), "L_2 != 0");
  CumulantPolynomial l3 = goulden_rattan_L(3, kerov_for(3));
  check.require(l3 == CumulantPolynomial::variable(2), "L_3 != C_2");
  CumulantPolynomial l4 = goulden_rattan_L(4, kerov_for(4));
  check.require(l4 == CumulantPolynomial::variable(3) * Rat(5, 2),
                "L_4 != (5/2) C_3");
  CumulantPolynomial expected_l5 =
      CumulantPolynomial::variable(4) * Rat(5) +
      CumulantPolynomial::variable(2) * Rat(8);
  check.require(goulden_rattan_L(5, kerov_for(5)) == expected_l5,
                "L_5 != 5 C_4 + 8 C_2");
  for (int k = 2; k <= max_k; ++k) {
    CumulantPolynomial lk = goulden_rattan_L(k, kerov_for(k));
    check.note("L_" + std::to_string(k) + " = " + lk.to_text("C") +
               (lk.coefficients_nonnegative() ? "   [nonnegative]"
                                              : "   [HAS NEGATIVE COEFFICIENT]"));
  }
  return check.finish();
}

}  // namespace kerov
