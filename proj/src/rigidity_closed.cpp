#include <array>
#include <stdexcept>
#include <string>

#include "rigidity/rigidity.hpp"

namespace rigidity {

namespace {

int parity(int l) { return ((l % 2) + 2) % 2; }

struct Row {
  Int value;
  std::string branch;
};

// The three rows shared by type A and the arm of type D. The scan runs over
// l = -1 .. |k| with s_{-1} = M and s_0 = N.
Row euclid_rows(const EuclidData& data, Int t, Int factor) {
  const int len = data.length();
  if (len % 2 == 1 && t == data.remainder(len)) {
    return {checked_mul(factor, data.fib(len) - data.fib(len - 1)), "last"};
  }
  for (int l = -1; l <= len; ++l) {
    const Int hi = data.remainder(l);
    const Int lo = data.remainder(l + 1);
    const std::string at = "[l=" + std::to_string(l) + "]";
    if ((parity(l) == 0 || l == len) && lo < t && t < hi) {
      return {checked_mul(factor, data.fib(l)) - 1, "open" + at};
    }
    if (parity(l) == 1 && l < len && lo <= t && t <= hi) {
      return {checked_mul(factor, data.fib(l)), "closed" + at};
    }
  }
  throw std::logic_error("no table row for t=" + std::to_string(t));
}

// c0 + c1 Fb_1 + c2 Fb_2 + c3 Fb_3
using Coeffs = std::array<Int, 4>;

constexpr Coeffs F1m{-1, 1, 0, 0};
constexpr Coeffs F1{0, 1, 0, 0};
constexpr Coeffs F2m{-1, 0, 1, 0};
constexpr Coeffs F3{0, 0, 0, 1};
constexpr Coeffs F3m{-1, 0, 0, 1};
constexpr Coeffs F1F2{0, 1, 1, 0};
constexpr Coeffs F1F3{0, 1, 0, 1};
constexpr Coeffs F1F2F3{0, 1, 1, 1};
constexpr Coeffs F1_2F2{0, 1, 2, 0};
constexpr Coeffs F1_3F2{0, 1, 3, 0};
constexpr Coeffs F1_4F2{0, 1, 4, 0};
constexpr Coeffs TwoF1{0, 2, 0, 0};
constexpr Coeffs TwoF1m{-1, 2, 0, 0};
constexpr Coeffs ThreeF1{0, 3, 0, 0};
constexpr Coeffs TwoF3{0, 0, 0, 2};

Int evaluate(const Coeffs& c, const EuclidData& data) {
  Int out = c[0];
  for (int i = 1; i <= 3; ++i) {
    if (c[static_cast<std::size_t>(i)] == 0) continue;
    if (i > data.length()) {
      throw std::logic_error("table entry needs Fb_" + std::to_string(i) + " but |k|=" +
                             std::to_string(data.length()));
    }
    out = checked_add(out, checked_mul(c[static_cast<std::size_t>(i)], data.fib(i)));
  }
  return out;
}

// E7, columns <u>_9.
constexpr std::array<Coeffs, 9> kE7t1{F1m, F1_3F2, F1F2, F3m, F1, F1_3F2, F2m, F1F2, F1};
constexpr std::array<Coeffs, 9> kE7t2{F1m, F1, F1F2, F1, F1, F1, TwoF1, F1, F1};
constexpr std::array<Coeffs, 9> kE7t345{F1m, F1, F1, F1, F1, F1, F1, F1, F1};
constexpr std::array<Coeffs, 9> kE7t6{F1m, F1_2F2, F1_3F2, F1, F1F2, F1, TwoF1, TwoF1, F1};
constexpr std::array<Coeffs, 9> kE7t7{F1m, F1F2, F1, F1, F1, F1, F1, TwoF1, F1};

// E8, columns <u>_15.
constexpr std::array<Coeffs, 15> kE8t1{F1m,  F1_4F2, F3,    F1_2F2, F1F2F3, F1,      TwoF3, F1F2,
                                       F1F2, F1,     TwoF1, F1F2,   TwoF1,  ThreeF1, F1};
constexpr std::array<Coeffs, 15> kE8t2{F1m, F1, F1F2, F1F2, F1,    F1, F1, F1F2,
                                       F1,  F1, F1,   F1F2, TwoF1, F1, F1};
constexpr std::array<Coeffs, 15> kE8t3456{F1m, F1, F1, F1, F1, F1, F1, F1,
                                          F1,  F1, F1, F1, F1, F1, F1};
constexpr std::array<Coeffs, 15> kE8t7{F1m, F1_2F2, F1_2F2, F1,    F1F2,  F1,    F1, F1F2,
                                       F1,  F1,     TwoF1,  F1,    TwoF1, TwoF1, F1};
constexpr std::array<Coeffs, 15> kE8t8{F1m, F1F2, F1, F1, F1, F1,    F1, F1,
                                       F1,  F1,   F1, F1, F1, TwoF1, F1};

// E6, columns <u>_6.
constexpr std::array<Coeffs, 6> kE6t3{F1m, F1, F1, F1, F1, F1};
constexpr std::array<Coeffs, 6> kE6t6{F1m, F1F2, F1, F1, TwoF1, F1};
constexpr std::array<Coeffs, 6> kE6xT15{F1m, F1_2F2, F1F3, F1, TwoF1, ThreeF1};
constexpr std::array<Coeffs, 6> kE6xT24{F1m, F1, F1, F1, F1, TwoF1};
constexpr std::array<Coeffs, 6> kE6yT15{TwoF1m, F1_4F2, F1, F1F2, TwoF1, F1};
constexpr std::array<Coeffs, 6> kE6yT24{TwoF1m, F1, F1, F1, F1, F1};

Row type_a(const AlgebraType& atype, const EuclidData& data, Label label) {
  const Int m = atype.delta().param_m();
  Int t = label.index;
  if (2 * t > m) t = m - t;
  const Int factor = atype.s() == 1 ? 2 : 1;
  Row row = euclid_rows(data, t, factor);
  row.branch = "A." + row.branch;
  return row;
}

Row type_d(const AlgebraType& atype, const EuclidData& data, Label label) {
  const Int m = atype.delta().param_m();
  const Int n = atype.n();
  const Int u = atype.u().num;
  if (atype.s() == 3) {
    if (label.index == 2 && !label.is_fork()) {
      if (u % 3 == 0) return {data.fib(1) - 1, "D4.triality.t=2[3|u]"};
      return {data.fib(1), "D4.triality.t=2[3!u]"};
    }
    switch (u % 3) {
      case 0:
        return {checked_mul(3, data.fib(1)) - 1, "D4.triality.orbit[u%3=0]"};
      case 1:
        return {data.fib(1), "D4.triality.orbit[u%3=1]"};
      default:
        return {checked_mul(2, data.fib(1)), "D4.triality.orbit[u%3=2]"};
    }
  }
  if (!label.is_fork()) {
    Row row = euclid_rows(data, label.index, 1);
    row.branch = "D.arm." + row.branch;
    return row;
  }
  if (m >= n) return {0, "D.fork.short"};
  const bool even = (data.fib(1) + n + atype.s()) % 2 == 0;
  if (n % m == 0) {
    return even ? Row{checked_mul(2, data.fib(1)) - 1, "D.fork.divides.even"}
                : Row{data.fib(1) - 1, "D.fork.divides.odd"};
  }
  return even ? Row{data.fib(1), "D.fork.coprime.even"}
              : Row{checked_add(data.fib(1), data.fib(2)), "D.fork.coprime.odd"};
}

Row type_e(const AlgebraType& atype, const EuclidData& data, Label label) {
  const Int u = atype.u().num;
  const int t = label.index;
  const int rank = atype.delta().rank();
  auto pick = [&](const auto& table, Int modulus, const std::string& rows) {
    const Int col = u % modulus;
    return Row{evaluate(table[static_cast<std::size_t>(col)], data),
               atype.delta().name() + ".t=" + rows + "[u%" + std::to_string(modulus) + "=" +
                   std::to_string(col) + "]"};
  };
  if (rank == 7) {
    if (t == 1) return pick(kE7t1, 9, "1");
    if (t == 2) return pick(kE7t2, 9, "2");
    if (t <= 5) return pick(kE7t345, 9, "3,4,5");
    if (t == 6) return pick(kE7t6, 9, "6");
    return pick(kE7t7, 9, "7");
  }
  if (rank == 8) {
    if (t == 1) return pick(kE8t1, 15, "1");
    if (t == 2) return pick(kE8t2, 15, "2");
    if (t <= 6) return pick(kE8t3456, 15, "3,4,5,6");
    if (t == 7) return pick(kE8t7, 15, "7");
    return pick(kE8t8, 15, "8");
  }
  if (t == 3) return pick(kE6t3, 6, "3");
  if (t == 6) return pick(kE6t6, 6, "6");
  const bool block_x = (atype.s() == 1) == ((u / 6) % 2 == 0);
  const bool outer = (t == 1 || t == 5);
  Row row = block_x ? pick(outer ? kE6xT15 : kE6xT24, 6, outer ? "1,5" : "2,4")
                    : pick(outer ? kE6yT15 : kE6yT24, 6, outer ? "1,5" : "2,4");
  row.branch += block_x ? "[block=x]" : "[block=y]";
  return row;
}

}  // namespace

EuclidData closed_form_data(const AlgebraType& atype) {
  const Dynkin& delta = atype.delta();
  const Int n = atype.n();
  switch (delta.kind()) {
    case DynkinKind::A: {
      const Int m = delta.param_m();
      if (atype.s() == 2) return weight_sequence(checked_add(n, m), checked_add(2 * n, m));
      return weight_sequence(m, n);
    }
    case DynkinKind::D:
    case DynkinKind::E:
      return weight_sequence(delta.param_m(), n);
  }
  throw std::logic_error("unknown Dynkin kind");
}

RigidityReport rd_closed(const AlgebraType& atype, Label t) {
  const Dynkin& delta = atype.delta();
  delta.slot(t);
  const EuclidData data = closed_form_data(atype);
  Row row;
  switch (delta.kind()) {
    case DynkinKind::A:
      row = type_a(atype, data, t);
      break;
    case DynkinKind::D:
      row = type_d(atype, data, t);
      break;
    case DynkinKind::E:
      row = type_e(atype, data, t);
      break;
  }
  return RigidityReport{atype, Vertex{0, t}, row.value, row.branch, std::nullopt};
}

std::vector<Endpoint> endpoint_scan(const AlgebraType& atype) {
  if (atype.delta().kind() != DynkinKind::A) {
    throw std::invalid_argument("endpoint_scan needs type A, got " + atype.name());
  }
  const int half = static_cast<int>(atype.delta().param_m() / 2);
  std::vector<Endpoint> out;
  Int previous = 0;
  for (int t = 1; t <= half; ++t) {
    const Int rd = *rd_closed(atype, Label::plain(t)).rd;
    if (t == 1 || rd < previous) out.push_back({t, rd});
    previous = rd;
  }
  return out;
}

}  // namespace rigidity
