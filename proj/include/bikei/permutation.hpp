#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bikei {

using Element = int;
// Images of 0..n-1.
using Permutation = std::vector<Element>;

bool is_permutation(std::span<const Element> images);
bool is_identity(std::span<const Element> perm);
bool is_involution(std::span<const Element> perm);

Permutation identity_permutation(int n);
// (a * b)(x) = a(b(x))
Permutation compose(std::span<const Element> a, std::span<const Element> b);
Permutation inverse(std::span<const Element> perm);
std::vector<int> cycle_lengths(std::span<const Element> perm);
// Smallest k >= 1 with perm^k = id; the lcm of the cycle lengths.
std::uint64_t exponent(std::span<const Element> perm);

}  // namespace bikei
