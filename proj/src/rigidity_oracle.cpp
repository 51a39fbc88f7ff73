#include <algorithm>
#include <stdexcept>

#include "rigidity/rigidity.hpp"

namespace rigidity {

namespace {

std::vector<Vertex> canonical_members(const AlgebraType& atype, const Hammock& h) {
  std::vector<Vertex> out;
  out.reserve(h.size());
  for (const Vertex& w : h.members()) out.push_back(atype.canonical(w));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_atlas(const AlgebraType& atype, const HammockAtlas& atlas) {
  if (!(atlas.delta() == atype.delta())) {
    throw std::invalid_argument("hammock atlas for " + atlas.delta().name() + " used with " +
                                atype.name());
  }
}

}  // namespace

std::vector<Int> se_oracle(const AlgebraType& atype, const HammockAtlas& atlas, const Vertex& v,
                           Int horizon) {
  check_atlas(atype, atlas);
  if (horizon < 1) throw std::invalid_argument("horizon must be positive");
  const std::vector<Vertex> targets = canonical_members(atype, atlas.minus(v));
  std::vector<Int> out;
  // Keep x bounded by reducing ω^i v into the fundamental domain each step.
  Vertex w = atype.canonical(v);
  for (Int i = 1; i <= horizon; ++i) {
    w = atype.canonical(omega(atype.delta(), w));
    if (std::binary_search(targets.begin(), targets.end(), w)) out.push_back(i);
  }
  return out;
}

std::vector<Int> se_oracle(const AlgebraType& atype, const Vertex& v, Int horizon) {
  return se_oracle(atype, HammockAtlas(atype.delta()), v, horizon);
}

Int omega_period(const AlgebraType& atype, const Vertex& v) {
  const Vertex start = atype.canonical(v);
  const Int cap = checked_mul(checked_mul(4 * atype.s(), atype.n()), atype.delta().m_delta() + 1);
  Vertex w = start;
  for (Int p = 1; p <= cap; ++p) {
    w = atype.canonical(omega(atype.delta(), w));
    if (w == start) return p;
  }
  throw std::logic_error("ω-period search exceeded its cap on " + atype.name());
}

RigidityReport rd_oracle(const AlgebraType& atype, const HammockAtlas& atlas, const Vertex& v) {
  const Int period = omega_period(atype, v);
  const std::vector<Int> se = se_oracle(atype, atlas, v, period);
  RigidityReport out{atype, v, std::nullopt, "oracle", std::nullopt};
  if (!se.empty()) {
    out.witness = se.front();
    out.rd = se.front() - 1;
  }
  return out;
}

RigidityReport rd_oracle(const AlgebraType& atype, const Vertex& v) {
  return rd_oracle(atype, HammockAtlas(atype.delta()), v);
}

}  // namespace rigidity
