#include "bikei/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace bikei {

bool is_permutation(std::span<const Element> images) {
  const auto n = static_cast<Element>(images.size());
  std::vector<bool> seen(images.size(), false);
  for (Element v : images) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_identity(std::span<const Element> perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<Element>(i)) return false;
  return true;
}

bool is_involution(std::span<const Element> perm) {
  const auto n = static_cast<Element>(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    Element v = perm[i];
    if (v < 0 || v >= n || perm[v] != static_cast<Element>(i)) return false;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

Permutation compose(std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation out(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation inverse(std::span<const Element> perm) {
  Permutation out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = static_cast<Element>(i);
  return out;
}

std::vector<int> cycle_lengths(std::span<const Element> perm) {
  std::vector<int> lengths;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = perm[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::uint64_t exponent(std::span<const Element> perm) {
  std::uint64_t e = 1;
  for (int len : cycle_lengths(perm)) e = std::lcm(e, static_cast<std::uint64_t>(len));
  return e;
}

}  // namespace bikei
