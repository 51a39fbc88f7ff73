#pragma once

// Integer combinatorics of the Euclidean algorithm: weight sequences,
// remainder sequences and weighted Fibonacci sequences.

#include <cstdint>
#include <span>
#include <vector>

namespace rigidity {

using Int = std::int64_t;

// Overflow-trapping arithmetic. Throws std::overflow_error instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Mathematical remainder: the representative of a modulo n in [0, n).
/// Requires n > 0; negative a is handled.
Int rem(Int a, Int n);

/// Data of the Euclidean algorithm on the pair (m, n).
///
/// With s_{-1} = m and s_0 = n the algorithm produces
///   s_{i-1} = k_i s_i + s_{i+1}
/// for 0 <= i <= d+1 and terminates with s_{d+2} = 0. The leading quotient
/// k_0 is dropped; the weight sequence is k_1..k_{d+1}.
struct EuclidData {
  Int m = 0;
  Int n = 0;
  std::vector<Int> k;   ///< k_1 .. k_{d+1}; empty when n divides m
  std::vector<Int> s;   ///< s_1 .. s_{d+2}; the last entry is always 0
  std::vector<Int> fb;  ///< Fb_{-1} .. Fb_{d+1}; starts 0, 1

  /// |k| = d + 1.
  int length() const { return static_cast<int>(k.size()); }

  /// k_l for 1 <= l <= |k|.
  Int weight(int l) const;
  /// s_l for -1 <= l <= |k| + 1, with s_{-1} = m and s_0 = n.
  Int remainder(int l) const;
  /// Fb_l for -1 <= l <= |k|.
  Int fib(int l) const;
};

/// Runs the Euclidean algorithm on (m, n). Throws std::invalid_argument
/// unless both are positive.
EuclidData weight_sequence(Int m, Int n);

/// Weighted Fibonacci sequence (Fb_{-1}, Fb_0, ..., Fb_{|weights|}) with
/// Fb_{-1} = 0, Fb_0 = 1 and Fb_l = a_l Fb_{l-1} + Fb_{l-2}.
std::vector<Int> weighted_fibonacci(std::span<const Int> weights);

/// Writes 0 < r <= Fb_l as sum_{i=1}^{l} lambda_i Fb_{i-1} with
/// 0 <= lambda_i <= k_i and lambda_1 > 0. Greedy from the largest index;
/// returns (lambda_1, ..., lambda_l).
std::vector<Int> fib_decompose(Int r, const EuclidData& data, int l);

/// Observed and predicted remainder bounds for a single (l, r).
struct RemainderRangeReport {
  Int rm = 0;            ///< <r m>_n
  Int r1m = 0;           ///< <(r-1) m>_n
  bool lower_bound = false;      ///< <r m>_n >= s_l
  bool upper_bound = false;      ///< <(r-1) m>_n <= n - s_l
  bool lower_equality = false;   ///< <r m>_n == s_l
  bool upper_equality = false;   ///< <(r-1) m>_n == n - s_l
  bool predicted_lower_equality = false;
  bool predicted_upper_equality = false;
};

/// True when (l, r) lies in the admissible range: 0 < l <= |k| and
/// 0 < r <= Fb_l for odd l <= d, 0 < r < Fb_l otherwise.
bool remainder_range_admissible(const EuclidData& data, int l, Int r);

/// Evaluates the remainder bounds and their equality characterisations.
/// Throws std::invalid_argument outside the admissible range.
RemainderRangeReport rem_range_check(const EuclidData& data, int l, Int r);

}  // namespace rigidity
