#include "rigidity/hammock.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rigidity {

Hammock::Hammock(Vertex base, std::vector<Entry> entries) : base_(base) {
  std::erase_if(entries, [](const Entry& e) { return e.multiplicity == 0; });
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.vertex < b.vertex; });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const Entry& a, const Entry& b) { return a.vertex == b.vertex; }),
                entries.end());
  entries_ = std::move(entries);
}

std::vector<Vertex> Hammock::members() const {
  std::vector<Vertex> out;
  out.reserve(entries_.size());
  for (const Entry& e : entries_) out.push_back(e.vertex);
  return out;
}

int Hammock::multiplicity(const Vertex& v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, const Vertex& w) { return e.vertex < w; });
  return it != entries_.end() && it->vertex == v ? it->multiplicity : 0;
}

bool Hammock::contains(const Vertex& v) const { return multiplicity(v) > 0; }

Hammock Hammock::translated(Int k) const {
  Hammock out;
  out.base_ = tau(base_, k);
  out.entries_ = entries_;
  for (Entry& e : out.entries_) e.vertex = tau(e.vertex, k);
  return out;
}

namespace {

std::vector<Vertex> vertices_at_level(const Dynkin& delta, Int level) {
  std::vector<Vertex> out;
  for (Label t : delta.labels()) {
    const Int c = delta.level_offset(t);
    if ((c - level) % 2 == 0) out.push_back(Vertex{(c - level) / 2, t});
  }
  return out;
}

// Knits outward from v one level at a time. Backward knitting applies
//   f(τw) = max(0, Σ_{u -> w} f(u) - f(w)),
// forward knitting the mirrored rule. Values start at 1 on v and 0 on the
// rest of the two levels through v.
Hammock knit(const Dynkin& delta, const Vertex& v, bool backward) {
  std::map<Vertex, int> value;
  value[v] = 1;
  auto get = [&](const Vertex& w) {
    auto it = value.find(w);
    return it == value.end() ? 0 : it->second;
  };
  const Int start = delta.level(v);
  const Int step = backward ? -1 : 1;
  const Int cap = 8 * delta.m_delta() + 8;
  int empty_run = 0;
  for (Int i = 1; i <= cap; ++i) {
    const Int level = start + step * i;
    bool any = false;
    for (const Vertex& z : vertices_at_level(delta, level)) {
      const Vertex across = backward ? tau(z, -1) : tau(z, 1);
      const std::vector<Vertex> middle =
          backward ? delta.predecessors(across) : delta.successors(across);
      int sum = -get(across);
      for (const Vertex& u : middle) sum += get(u);
      if (sum > 0) {
        value[z] = sum;
        any = true;
      }
    }
    empty_run = any ? 0 : empty_run + 1;
    if (empty_run == 2) {
      std::vector<Hammock::Entry> entries;
      entries.reserve(value.size());
      for (const auto& [w, f] : value) entries.push_back({w, f});
      return Hammock(v, std::move(entries));
    }
  }
  throw std::logic_error("hammock knitting did not terminate on " + delta.name());
}

}  // namespace

Hammock hammock_minus(const Dynkin& delta, const Vertex& v) { return knit(delta, v, true); }

Hammock hammock_plus_knitted(const Dynkin& delta, const Vertex& v) {
  return knit(delta, v, false);
}

Hammock hammock_plus(const Dynkin& delta, const Vertex& v) {
  const Hammock h = hammock_minus(delta, omega_inverse(delta, tau(v)));
  return Hammock(v, h.entries());
}

HammockAtlas::HammockAtlas(const Dynkin& delta) : delta_(delta) {
  for (Label t : delta_.labels()) at_zero_.push_back(hammock_minus(delta_, Vertex{0, t}));
}

Hammock HammockAtlas::minus(const Vertex& v) const {
  return at_zero_[static_cast<std::size_t>(delta_.slot(v.t))].translated(v.x);
}

Hammock HammockAtlas::plus(const Vertex& v) const {
  const Hammock h = minus(omega_inverse(delta_, tau(v)));
  return Hammock(v, h.entries());
}

}  // namespace rigidity
