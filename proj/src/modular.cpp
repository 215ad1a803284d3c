#include "bikei/modular.hpp"

#include <numeric>
#include <utility>

#include "bikei/errors.hpp"
#include "bikei/tsr.hpp"

namespace bikei {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % n);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t n) {
  std::int64_t r = 1 % n;
  a = mod(a, n);
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

// g = x a + y b with g = gcd(a, b) >= 0
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  std::int64_t x1 = 0, y1 = 0;
  const std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

void reduce(IntMatrix& m, std::int64_t n) {
  for (auto& row : m)
    for (auto& v : row) v = mod(v, n);
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("count exceeds 64-bit range");
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

int rank_mod_prime(IntMatrix m, std::int64_t p) {
  reduce(m, p);
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    const std::int64_t inv = powmod(m[rank][c], p - 2, p);
    for (auto& v : m[rank]) v = mulmod(v, inv, p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::int64_t f = m[r][c];
      for (int k = 0; k < cols; ++k) m[r][k] = mod(m[r][k] - mulmod(f, m[rank][k], p), p);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::int64_t> smith_diagonal_mod(IntMatrix m, int cols, std::int64_t n) {
  reduce(m, n);
  const int rows = static_cast<int>(m.size());
  const int diag = std::min(rows, cols);

  // Replaces rows/columns (a, b) by unimodular combinations so that entry
  // a_val becomes gcd(a_val, b_val) and b_val becomes 0.
  auto combine_rows = [&](int a, int b, int c) {
    const std::int64_t va = m[a][c], vb = m[b][c];
    if (vb == 0) return;
    if (va != 0 && vb % va == 0) {
      const std::int64_t q = vb / va;
      for (int k = 0; k < cols; ++k) m[b][k] = mod(m[b][k] - mulmod(q, m[a][k], n), n);
      return;
    }
    std::int64_t x = 0, y = 0;
    const std::int64_t g = ext_gcd(va, vb, x, y);
    const std::int64_t pa = va / g, pb = vb / g;
    for (int k = 0; k < cols; ++k) {
      const std::int64_t ra = m[a][k], rb = m[b][k];
      m[a][k] = mod(mulmod(mod(x, n), ra, n) + mulmod(mod(y, n), rb, n), n);
      m[b][k] = mod(mulmod(pa, rb, n) - mulmod(pb, ra, n), n);
    }
  };
  auto combine_cols = [&](int a, int b, int r) {
    const std::int64_t va = m[r][a], vb = m[r][b];
    if (vb == 0) return;
    if (va != 0 && vb % va == 0) {
      const std::int64_t q = vb / va;
      for (int k = 0; k < rows; ++k) m[k][b] = mod(m[k][b] - mulmod(q, m[k][a], n), n);
      return;
    }
    std::int64_t x = 0, y = 0;
    const std::int64_t g = ext_gcd(va, vb, x, y);
    const std::int64_t pa = va / g, pb = vb / g;
    for (int k = 0; k < rows; ++k) {
      const std::int64_t ca = m[k][a], cb = m[k][b];
      m[k][a] = mod(mulmod(mod(x, n), ca, n) + mulmod(mod(y, n), cb, n), n);
      m[k][b] = mod(mulmod(pa, cb, n) - mulmod(pb, ca, n), n);
    }
  };

  std::vector<std::int64_t> d(diag, 0);
  for (int t = 0; t < diag; ++t) {
    // bring any nonzero entry of the trailing block to (t, t)
    int pr = -1, pc = -1;
    for (int r = t; r < rows && pr < 0; ++r)
      for (int c = t; c < cols; ++c)
        if (m[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    if (pc != t)
      for (auto& row : m) std::swap(row[t], row[pc]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int r = t + 1; r < rows; ++r) combine_rows(t, r, t);
      for (int c = t + 1; c < cols; ++c) combine_cols(t, c, t);
      for (int r = t + 1; r < rows; ++r)
        if (m[r][t] != 0) dirty = true;
    }
    d[t] = m[t][t];
  }
  return d;
}

std::uint64_t count_homogeneous_solutions(const IntMatrix& rows, int cols, std::int64_t n) {
  if (n < 1) throw InputError("modulus must be positive");
  if (n == 1) return 1;
  if (rows.empty()) return checked_pow(n, cols);
  if (is_prime(n)) return checked_pow(n, cols - rank_mod_prime(rows, n));
  const auto d = smith_diagonal_mod(rows, cols, n);
  std::uint64_t count = checked_pow(n, cols - static_cast<int>(d.size()));
  for (std::int64_t v : d) count = checked_mul(count, std::gcd(v, n));
  return count;
}

}  // namespace bikei
