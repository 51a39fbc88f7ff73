#include "rigidity/euclid.hpp"

#include <stdexcept>
#include <string>

namespace rigidity {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in addition");
  }
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in subtraction");
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in multiplication");
  }
  return out;
}

Int rem(Int a, Int n) {
  if (n <= 0) {
    throw std::invalid_argument("rem: modulus must be positive");
  }
  Int r = a % n;
  return r < 0 ? r + n : r;
}

Int EuclidData::weight(int l) const {
  if (l < 1 || l > length()) {
    throw std::out_of_range("weight index " + std::to_string(l) + " outside 1.." +
                            std::to_string(length()));
  }
  return k[static_cast<std::size_t>(l - 1)];
}

Int EuclidData::remainder(int l) const {
  if (l == -1) return m;
  if (l == 0) return n;
  if (l < -1 || l > length() + 1) {
    throw std::out_of_range("remainder index " + std::to_string(l) + " outside -1.." +
                            std::to_string(length() + 1));
  }
  return s[static_cast<std::size_t>(l - 1)];
}

Int EuclidData::fib(int l) const {
  if (l < -1 || l > length()) {
    throw std::out_of_range("Fibonacci index " + std::to_string(l) + " outside -1.." +
                            std::to_string(length()));
  }
  return fb[static_cast<std::size_t>(l + 1)];
}

std::vector<Int> weighted_fibonacci(std::span<const Int> weights) {
  std::vector<Int> out;
  out.reserve(weights.size() + 2);
  out.push_back(0);
  out.push_back(1);
  for (Int a : weights) {
    if (a <= 0) {
      throw std::invalid_argument("weighted_fibonacci: weights must be positive");
    }
    const std::size_t j = out.size();
    out.push_back(checked_add(checked_mul(a, out[j - 1]), out[j - 2]));
  }
  return out;
}

EuclidData weight_sequence(Int m, Int n) {
  if (m <= 0 || n <= 0) {
    throw std::invalid_argument("weight_sequence: m and n must be positive, got (" +
                                std::to_string(m) + ", " + std::to_string(n) + ")");
  }
  EuclidData data;
  data.m = m;
  data.n = n;
  // k_0 is discarded: only the remainder s_1 of the first division matters.
  Int prev = n;
  Int cur = m % n;
  data.s.push_back(cur);
  while (cur != 0) {
    data.k.push_back(prev / cur);
    const Int next = prev % cur;
    data.s.push_back(next);
    prev = cur;
    cur = next;
  }
  data.fb = weighted_fibonacci(data.k);
  return data;
}

namespace {

void decompose_into(Int r, const EuclidData& data, int l, std::vector<Int>& lambda) {
  if (l == 1) {
    lambda[0] = r;  // Fb_0 = 1
    return;
  }
  const Int base = data.fib(l - 1);
  Int p = r / base;
  if (p > data.weight(l)) p = data.weight(l);
  const Int q = r - p * base;
  if (q == 0) {
    lambda[static_cast<std::size_t>(l - 1)] = p - 1;
    decompose_into(base, data, l - 1, lambda);
  } else {
    lambda[static_cast<std::size_t>(l - 1)] = p;
    decompose_into(q, data, l - 1, lambda);
  }
}

}  // namespace

std::vector<Int> fib_decompose(Int r, const EuclidData& data, int l) {
  if (l < 1 || l > data.length()) {
    throw std::invalid_argument("fib_decompose: index l=" + std::to_string(l) +
                                " outside 1.." + std::to_string(data.length()));
  }
  if (r <= 0 || r > data.fib(l)) {
    throw std::invalid_argument("fib_decompose: r=" + std::to_string(r) + " outside (0, Fb_" +
                                std::to_string(l) + "]");
  }
  std::vector<Int> lambda(static_cast<std::size_t>(l), 0);
  decompose_into(r, data, l, lambda);
  return lambda;
}

bool remainder_range_admissible(const EuclidData& data, int l, Int r) {
  const int len = data.length();
  if (l < 1 || l > len || r <= 0) return false;
  const bool odd_interior = (l % 2 == 1) && l < len;  // l <= d odd
  return odd_interior ? r <= data.fib(l) : r < data.fib(l);
}

RemainderRangeReport rem_range_check(const EuclidData& data, int l, Int r) {
  if (!remainder_range_admissible(data, l, r)) {
    throw std::invalid_argument("rem_range_check: (l=" + std::to_string(l) + ", r=" +
                                std::to_string(r) + ") outside the admissible range");
  }
  const Int n = data.n;
  const Int sl = data.remainder(l);
  const int d = data.length() - 1;
  const bool last = (l == d + 1);

  RemainderRangeReport out;
  out.rm = rem(checked_mul(r, data.m), n);
  out.r1m = rem(checked_mul(r - 1, data.m), n);
  out.lower_bound = out.rm >= sl;
  out.upper_bound = out.r1m <= n - sl;
  out.lower_equality = out.rm == sl;
  out.upper_equality = out.r1m == n - sl;

  if (l % 2 == 1) {
    out.predicted_lower_equality = (r == data.fib(l - 1));
    out.predicted_upper_equality =
        (d % 2 == 0) && last && r == data.fib(d + 1) - data.fib(d) + 1;
  } else {
    out.predicted_lower_equality =
        (d % 2 != 0) && last && r == data.fib(d + 1) - data.fib(d);
    out.predicted_upper_equality = (r == data.fib(l - 1) + 1);
  }
  return out;
}

}  // namespace rigidity
