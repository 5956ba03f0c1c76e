#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "splinedim/graded_matrix.hpp"
#include "splinedim/rational.hpp"

namespace splinedim {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Dense matrix over Z/pZ, row-major, entries reduced into [0, p).
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t prime() const { return p_; }
  std::uint64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint64_t* row(std::size_t r) { return data_.data() + r * cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint64_t p_;
  std::vector<std::uint64_t> data_;
};

/// Scales each row by the lcm of its denominators; rank is unchanged.
IntegerMatrix clear_denominators(const GradedMatrix& m);
ModMatrix reduce(const IntegerMatrix& m, std::uint64_t p);

/// Fraction-free (Bareiss) elimination over Z. Serial reference.
std::size_t bareiss_rank(IntegerMatrix m);
/// Same elimination with the row updates of each step spread over OpenMP threads.
std::size_t bareiss_rank_parallel(IntegerMatrix m);

/// Gaussian elimination over Z/pZ. Serial reference; destroys its input.
std::size_t modular_rank(ModMatrix& m);
/// OpenMP kernel; bit-identical result to modular_rank.
std::size_t modular_rank_parallel(ModMatrix& m);

/// Upper bound B (in bits) with |minor| <= 2^B for every square minor of
/// the given size, from Hadamard's inequality on rows and on columns.
std::size_t hadamard_bits(const IntegerMatrix& m, std::size_t minor_size);
/// Same bound from precomputed squared row and column norms.
std::size_t hadamard_bits(std::vector<std::size_t> row_bits, std::vector<std::size_t> col_bits, std::size_t minor_size);
/// ceil(log2(sqrt(norm2))), 0 for a zero vector.
std::size_t norm_bits(const Integer& norm2);

/// Random primes in [2^31, 2^32), without repeats, from a seeded stream.
class PrimeStream {
 public:
  static constexpr std::size_t kMinBits = 31;

  explicit PrimeStream(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t next();

 private:
  std::mt19937_64 rng_;
  std::vector<std::uint64_t> used_;
};

struct CertifiedRank {
  std::size_t rank = 0;
  std::size_t primes = 0;
};

/// Exact rank of an integer matrix from ranks modulo random primes.
/// rank_mod(F) must return the rank of the matrix reduced into F. Each prime
/// only lower-bounds the rational rank; the result is final once the product
/// of the primes used exceeds every possible (rank+1)-minor, at which point
/// all such minors are divisible by that product and hence vanish.
/// minor_bits(s) bounds log2 of s-by-s minors; full_rank = min(rows, cols).
CertifiedRank certify_rank(const std::function<std::size_t(const PrimeField&)>& rank_mod,
                           const std::function<std::size_t(std::size_t)>& minor_bits, std::size_t full_rank,
                           std::uint64_t seed, const std::function<bool(std::uint64_t)>& admissible = {});

struct RankOptions {
  enum class Method { automatic, bareiss, modular };
  Method method = Method::automatic;
  std::uint64_t seed = 1;
  bool parallel = true;
  /// automatic: Bareiss up to this many entries, certified modular above.
  std::size_t bareiss_cell_limit = 20000;
};

/// Exact rank over Q. Both methods are exact; the seed only picks primes.
std::size_t rank(const GradedMatrix& m, const RankOptions& options = {});
std::size_t rank(const IntegerMatrix& m, const RankOptions& options = {});
inline std::size_t nullity(const GradedMatrix& m, const RankOptions& options = {}) {
  return m.cols() - rank(m, options);
}

}  // namespace splinedim
