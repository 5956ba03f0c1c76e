#include "splinedim/rank.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

namespace splinedim {

IntegerMatrix clear_denominators(const GradedMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& q = m.at(r, c);
      if (q != 0) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& q = m.at(r, c);
      if (q != 0) out.at(r, c) = q.get_num() * (scale / q.get_den());
    }
  }
  return out;
}

ModMatrix reduce(const IntegerMatrix& m, std::uint64_t p) {
  const PrimeField field{p};
  ModMatrix out(m.rows(), m.cols(), p);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != 0) out.at(r, c) = field.from_integer(m.at(r, c));
    }
  }
  return out;
}

namespace {

// One Bareiss step below pivot row `rank`: every entry becomes a minor of
// the original matrix, so the division by `prev` is exact.
void bareiss_update_row(IntegerMatrix& m, std::size_t i, std::size_t rank, std::size_t col, const Integer& prev) {
  const Integer& pivot = m.at(rank, col);
  const Integer factor = m.at(i, col);
  Integer tmp;
  for (std::size_t j = col + 1; j < m.cols(); ++j) {
    tmp = m.at(i, j) * pivot;
    tmp -= factor * m.at(rank, j);
    mpz_divexact(m.at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
  }
  m.at(i, col) = 0;
}

template <bool Parallel>
std::size_t bareiss_impl(IntegerMatrix& m) {
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < m.cols(); ++j) swap(m.at(pivot, j), m.at(rank, j));
    }
    const auto first = static_cast<long long>(rank + 1);
    const auto last = static_cast<long long>(m.rows());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
      for (long long i = first; i < last; ++i) {
        bareiss_update_row(m, static_cast<std::size_t>(i), rank, col, prev);
      }
    } else {
      for (long long i = first; i < last; ++i) bareiss_update_row(m, static_cast<std::size_t>(i), rank, col, prev);
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return rank;
}

inline void eliminate_row(std::uint64_t* row, const std::uint64_t* pivot_row, std::size_t col, std::size_t cols,
                          std::uint64_t p) {
  const std::uint64_t f = row[col];
  if (f == 0) return;
  const std::uint64_t nf = p - f;
  for (std::size_t j = col + 1; j < cols; ++j) row[j] = (row[j] + nf * pivot_row[j]) % p;
  row[col] = 0;
}

template <bool Parallel>
std::size_t modular_impl(ModMatrix& m) {
  const std::uint64_t p = m.prime();
  const PrimeField field{p};
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) std::swap_ranges(m.row(pivot) + col, m.row(pivot) + cols, m.row(rank) + col);
    std::uint64_t* prow = m.row(rank);
    const std::uint64_t inv = field.inv(prow[col]);
    for (std::size_t j = col; j < cols; ++j) prow[j] = field.mul(prow[j], inv);
    const auto first = static_cast<long long>(rank + 1);
    const auto last = static_cast<long long>(m.rows());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if (last - first > 32)
      for (long long i = first; i < last; ++i) eliminate_row(m.row(static_cast<std::size_t>(i)), prow, col, cols, p);
    } else {
      for (long long i = first; i < last; ++i) eliminate_row(m.row(static_cast<std::size_t>(i)), prow, col, cols, p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t bareiss_rank(IntegerMatrix m) { return bareiss_impl<false>(m); }
std::size_t bareiss_rank_parallel(IntegerMatrix m) { return bareiss_impl<true>(m); }
std::size_t modular_rank(ModMatrix& m) { return modular_impl<false>(m); }
std::size_t modular_rank_parallel(ModMatrix& m) { return modular_impl<true>(m); }

std::size_t norm_bits(const Integer& norm2) {
  if (norm2 == 0) return 0;
  const std::size_t bits = mpz_sizeinbase(norm2.get_mpz_t(), 2);  // >= log2(norm2)
  return (bits + 1) / 2;
}

std::size_t hadamard_bits(std::vector<std::size_t> row_bits, std::vector<std::size_t> col_bits,
                          std::size_t minor_size) {
  auto top_sum = [minor_size](std::vector<std::size_t>& bits) {
    std::sort(bits.begin(), bits.end(), std::greater<>());
    std::size_t sum = 0;
    for (std::size_t i = 0; i < std::min(minor_size, bits.size()); ++i) sum += bits[i];
    return sum;
  };
  return std::min(top_sum(row_bits), top_sum(col_bits));
}

std::size_t hadamard_bits(const IntegerMatrix& m, std::size_t minor_size) {
  std::vector<Integer> rows(m.rows());
  std::vector<Integer> cols(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& v = m.at(r, c);
      if (v == 0) continue;
      Integer sq = v * v;
      rows[r] += sq;
      cols[c] += sq;
    }
  }
  std::vector<std::size_t> rb;
  std::vector<std::size_t> cb;
  for (const auto& n : rows) rb.push_back(norm_bits(n));
  for (const auto& n : cols) cb.push_back(norm_bits(n));
  return hadamard_bits(std::move(rb), std::move(cb), minor_size);
}

std::uint64_t PrimeStream::next() {
  std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 31, (std::uint64_t{1} << 32) - 1);
  for (;;) {
    Integer candidate(static_cast<unsigned long>(dist(rng_)));
    mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
    const std::uint64_t p = candidate.get_ui();
    if (p >= (std::uint64_t{1} << 32)) continue;
    if (std::find(used_.begin(), used_.end(), p) != used_.end()) continue;
    used_.push_back(p);
    return p;
  }
}

CertifiedRank certify_rank(const std::function<std::size_t(const PrimeField&)>& rank_mod,
                           const std::function<std::size_t(std::size_t)>& minor_bits, std::size_t full_rank,
                           std::uint64_t seed, const std::function<bool(std::uint64_t)>& admissible) {
  PrimeStream primes(seed);
  CertifiedRank result;
  std::size_t product_bits = 0;
  for (;;) {
    const std::uint64_t p = primes.next();
    if (admissible && !admissible(p)) continue;
    const std::size_t r = rank_mod(PrimeField{p});
    ++result.primes;
    product_bits += PrimeStream::kMinBits;
    result.rank = std::max(result.rank, r);
    if (result.rank >= full_rank) return result;
    if (product_bits > minor_bits(result.rank + 1)) return result;
  }
}

std::size_t rank(const IntegerMatrix& m, const RankOptions& options) {
  using Method = RankOptions::Method;
  Method method = options.method;
  if (method == Method::automatic) {
    method = m.rows() * m.cols() <= options.bareiss_cell_limit ? Method::bareiss : Method::modular;
  }
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (method == Method::bareiss) return options.parallel ? bareiss_rank_parallel(m) : bareiss_rank(m);

  std::vector<std::size_t> rb(m.rows());
  std::vector<std::size_t> cb(m.cols());
  {
    std::vector<Integer> rows(m.rows());
    std::vector<Integer> cols(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m.at(r, c) == 0) continue;
        Integer sq = m.at(r, c) * m.at(r, c);
        rows[r] += sq;
        cols[c] += sq;
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) rb[r] = norm_bits(rows[r]);
    for (std::size_t c = 0; c < m.cols(); ++c) cb[c] = norm_bits(cols[c]);
  }
  auto rank_mod = [&](const PrimeField& f) {
    ModMatrix mm = reduce(m, f.p);
    return options.parallel ? modular_rank_parallel(mm) : modular_rank(mm);
  };
  auto bits = [&](std::size_t s) { return hadamard_bits(rb, cb, s); };
  return certify_rank(rank_mod, bits, std::min(m.rows(), m.cols()), options.seed).rank;
}

std::size_t rank(const GradedMatrix& m, const RankOptions& options) { return rank(clear_denominators(m), options); }

}  // namespace splinedim
