#include <charconv>
#include <numeric>
#include <stdexcept>

#include "rigidity/quiver.hpp"

namespace rigidity {

namespace {

Int parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  Int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an exact rational: '" + std::string(whole) + "'");
  }
  return value;
}

[[noreturn]] void reject(const std::string& what) {
  throw std::invalid_argument("invalid type: " + what);
}

}  // namespace

Rational Rational::of(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Rational out;
  if (slash == std::string_view::npos) {
    out = of(parse_int(text, text), 1);
  } else {
    const std::string_view den = text.substr(slash + 1);
    if (!den.empty() && den.front() == '+') {
      throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    }
    const Int d = parse_int(den, text);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    out = of(parse_int(text.substr(0, slash), text), d);
  }
  if (out.num <= 0) throw std::invalid_argument("u must be positive, got '" + std::string(text) + "'");
  return out;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

AlgebraType AlgebraType::make(DynkinKind kind, int rank, Rational u, int s) {
  Dynkin delta = Dynkin::make(kind, rank);
  const std::string where = delta.name() + " with u=" + u.str() + ", s=" + std::to_string(s);
  if (u.num <= 0 || u.den <= 0) reject(where + ": u must be positive");
  u = Rational::of(u.num, u.den);
  Int n = 0;
  switch (kind) {
    case DynkinKind::A:
      if (s == 1) {
        if (rank % u.den != 0) reject(where + ": u*r is not an integer");
        n = checked_mul(u.num, rank / u.den);
      } else if (s == 2) {
        if (rank < 3 || rank % 2 == 0) reject(where + ": s=2 needs A_{2p+1} with p >= 1");
        if (!u.is_integer()) reject(where + ": s=2 needs integral u");
        n = checked_sub(checked_mul(u.num, rank), (rank - 1) / 2 + 1);
      } else {
        reject(where + ": s must be 1 or 2 for type A");
      }
      break;
    case DynkinKind::D:
      if (s == 3 && rank != 4) reject(where + ": s=3 only for D4");
      if (s < 1 || s > 3) reject(where + ": s must be 1, 2 or 3 for type D");
      if (u.is_integer()) {
        n = checked_mul(u.num, delta.m_delta());
      } else {
        if (s != 1 || u.den != 3 || rank % 3 != 0) {
          reject(where + ": fractional u only as v/3 on D_{3w} with s=1");
        }
        n = checked_mul(u.num, 2 * (rank / 3) - 1);
      }
      break;
    case DynkinKind::E:
      if (!u.is_integer()) reject(where + ": type E needs integral u");
      if (s == 2 && rank != 6) reject(where + ": s=2 only for E6");
      if (s != 1 && s != 2) reject(where + ": s must be 1 or 2 for type E");
      n = checked_mul(u.num, delta.m_delta());
      break;
  }
  if (n <= 0) reject(where + ": non-positive shift");
  return AlgebraType(std::move(delta), u, s, n);
}

AlgebraType AlgebraType::from_shift(DynkinKind kind, int rank, Int n, int s) {
  const Dynkin delta = Dynkin::make(kind, rank);
  if (n <= 0) reject(delta.name() + ": shift n must be positive");
  Rational u;
  if (kind == DynkinKind::A && s == 2) {
    u = Rational::of(checked_add(n, (rank - 1) / 2 + 1), rank);
  } else if (kind == DynkinKind::D && rank % 3 == 0 && n % (2 * (rank / 3) - 1) == 0) {
    u = Rational::of(n / (2 * (rank / 3) - 1), 3);
  } else {
    u = Rational::of(n, delta.m_delta());
  }
  AlgebraType out = make(kind, rank, u, s);
  if (out.n() != n) reject(delta.name() + ": shift " + std::to_string(n) + " not allowed");
  return out;
}

Int AlgebraType::period() const {
  if (delta_.kind() == DynkinKind::A && s_ == 2) {
    return checked_add(checked_mul(2, n_), delta_.param_m());
  }
  return checked_mul(s_, n_);
}

std::string AlgebraType::name() const {
  return "(" + delta_.name() + ", " + u_.str() + ", " + std::to_string(s_) + ")";
}

Vertex AlgebraType::phi(const Vertex& v) const {
  delta_.slot(v.t);
  if (s_ == 1) return v;
  switch (delta_.kind()) {
    case DynkinKind::A: {
      // τ^{-m/2} ω, the reflection through the middle of the diagram.
      const Int half = delta_.param_m() / 2;
      return tau(omega(delta_, v), -half);
    }
    case DynkinKind::D: {
      const int m = delta_.rank() - 1;
      if (s_ == 2) {
        if (v.t.fork == Fork::plus) return Vertex{v.x, Label::minus(m)};
        if (v.t.fork == Fork::minus) return Vertex{v.x, Label::plus(m)};
        return v;
      }
      // 1 -> m- -> m+ -> 1
      if (v.t == Label::plain(1)) return Vertex{v.x, Label::minus(m)};
      if (v.t.fork == Fork::minus) return Vertex{v.x, Label::plus(m)};
      if (v.t.fork == Fork::plus) return Vertex{v.x, Label::plain(1)};
      return v;
    }
    case DynkinKind::E:
      return tau(omega(delta_, v), -6);
  }
  return v;
}

Vertex AlgebraType::generator(const Vertex& v) const {
  if (delta_.kind() == DynkinKind::A && s_ == 2) return tau(omega(delta_, v), n_);
  return tau(phi(v), n_);
}

bool AlgebraType::same_orbit(const Vertex& v, const Vertex& w) const {
  const Int p = period();
  Vertex y = v;
  for (int j = 0; j < s_; ++j) {
    if (y.t == w.t && rem(checked_sub(w.x, y.x), p) == 0) return true;
    y = generator(y);
  }
  return false;
}

Vertex AlgebraType::canonical(const Vertex& v) const {
  const Int p = period();
  Vertex y = v;
  Vertex best{rem(v.x, p), v.t};
  for (int j = 1; j < s_; ++j) {
    y = generator(y);
    const Vertex cand{rem(y.x, p), y.t};
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace rigidity
