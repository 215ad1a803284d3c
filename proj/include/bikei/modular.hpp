#pragma once

#include <cstdint>
#include <vector>

namespace bikei {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

bool is_prime(std::int64_t n);

// Multiplication that throws ResourceError on overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

// Rank of the matrix over the field Z_p.
int rank_mod_prime(IntMatrix rows, std::int64_t p);

// Diagonal entries d_1..d_m, m = min(rows, cols), of a diagonal form of the
// matrix reached by unimodular row and column operations, with all entries
// kept reduced mod n (zero entries reported as 0).
std::vector<std::int64_t> smith_diagonal_mod(IntMatrix rows, int cols, std::int64_t n);

// Number of x in (Z_n)^cols with rows * x = 0. Prime moduli use Gaussian
// elimination, composite ones the diagonal form: n^(cols - m) * prod gcd(d_i, n).
std::uint64_t count_homogeneous_solutions(const IntMatrix& rows, int cols, std::int64_t n);

}  // namespace bikei
