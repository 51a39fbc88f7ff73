#pragma once

// Brute-force references for the Euclidean combinatorics: the algorithm by
// repeated subtraction and Fibonacci-base decompositions by exhaustive search.

#include <functional>
#include <vector>

namespace oracle {

struct Euclid {
  std::vector<long long> k;
  std::vector<long long> s;  // s_1 .. s_{d+2}
};

inline Euclid euclid_by_subtraction(long long m, long long n) {
  Euclid out;
  long long a = n;
  long long b = m;
  while (b >= a) b -= a;  // drop the leading quotient
  out.s.push_back(b);
  while (b != 0) {
    long long q = 0;
    while (a >= b) {
      a -= b;
      ++q;
    }
    out.k.push_back(q);
    out.s.push_back(a);
    const long long next = a;
    a = b;
    b = next;
  }
  return out;
}

inline long long mod(long long a, long long n) { return ((a % n) + n) % n; }

/// All λ with r = Σ λ_i Fb_{i-1}, 0 <= λ_i <= k_i, λ_1 > 0.
inline std::vector<std::vector<long long>> all_decompositions(long long r,
                                                             const std::vector<long long>& k,
                                                             const std::vector<long long>& fb,
                                                             int l) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> lambda(static_cast<std::size_t>(l), 0);
  std::function<void(int, long long)> go = [&](int i, long long rest) {
    if (i == 0) {
      if (rest == 0 && lambda[0] > 0) out.push_back(lambda);
      return;
    }
    const long long base = fb[static_cast<std::size_t>(i)];  // Fb_{i-1}
    for (long long c = 0; c <= k[static_cast<std::size_t>(i - 1)] && c * base <= rest; ++c) {
      lambda[static_cast<std::size_t>(i - 1)] = c;
      go(i - 1, rest - c * base);
    }
    lambda[static_cast<std::size_t>(i - 1)] = 0;
  };
  go(l, r);
  return out;
}

}  // namespace oracle
