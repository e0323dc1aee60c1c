#include "kerov/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kerov {

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  images_.resize(n);
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::long_cycle(int k) {
  if (k < 1) throw std::invalid_argument("cycle length must be positive");
  std::vector<int> img(k);
  for (int i = 0; i < k; ++i) img[i] = (i + 1) % k;
  return Permutation(std::move(img));
}

Permutation Permutation::multi_cycle(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("parts must be nonempty");
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("cycle lengths must be positive");
    n += p;
  }
  std::vector<int> img(n);
  int off = 0;
  for (int p : parts) {
    for (int i = 0; i < p; ++i) img[off + i] = off + (i + 1) % p;
    off += p;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a(b(i));
  return Permutation(std::move(img));
}

std::vector<Cycle> cycles(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(n, 0);
  std::vector<Cycle> out;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    Cycle c{i};
    seen[i] = 1;
    for (int j = p(i); j != i; j = p(j)) {
      c.push_back(j);
      seen[j] = 1;
    }
    out.push_back(std::move(c));
  }
  return out;
}

int cycle_count(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(n, 0);
  int count = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++count;
    for (int j = i; !seen[j]; j = p(j)) seen[j] = 1;
  }
  return count;
}

int permutation_sign(const Permutation& p) {
  return (p.degree() - cycle_count(p)) % 2 == 0 ? 1 : -1;
}

bool is_transitive(const std::vector<Permutation>& gens, int n) {
  for (const auto& g : gens)
    if (g.degree() != n) throw std::invalid_argument("generator degree mismatch");
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      int y = g(x);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

namespace {

// Lexicographic enumeration of image sequences with positions 1..n-1 free.
void enumerate_rest(std::vector<int>& img, std::vector<char>& used, int pos,
                    const Permutation& target,
                    const FactorizationVisitor& visit) {
  const int n = static_cast<int>(img.size());
  if (pos == n) {
    Permutation s2(img);
    visit(target * s2.inverse(), s2);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    img[pos] = v;
    enumerate_rest(img, used, pos + 1, target, visit);
    used[v] = 0;
  }
}

}  // namespace

void enumerate_factorizations_shard(const Permutation& target, int shard,
                                    int shard_count,
                                    const FactorizationVisitor& visit) {
  if (shard_count < 1 || shard < 0 || shard >= shard_count)
    throw std::invalid_argument("bad shard spec");
  const int n = target.degree();
  std::vector<int> img(n);
  std::vector<char> used(n, 0);
  for (int first = 0; first < n; ++first) {
    if (first % shard_count != shard) continue;
    img[0] = first;
    used[first] = 1;
    enumerate_rest(img, used, 1, target, visit);
    used[first] = 0;
  }
}

void enumerate_factorizations(const Permutation& target,
                              const FactorizationVisitor& visit) {
  enumerate_factorizations_shard(target, 0, 1, visit);
}

}  // namespace kerov
