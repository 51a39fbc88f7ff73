#pragma once

// Hammocks H^-(x) and H^+(x) on ZΔ, computed by clamped mesh knitting.

#include <utility>
#include <vector>

#include "rigidity/quiver.hpp"

namespace rigidity {

/// Finite support of a stable Hom functor on ZΔ, with the dimension of the
/// Hom space recorded per vertex.
class Hammock {
 public:
  struct Entry {
    Vertex vertex;
    int multiplicity = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Hammock() = default;
  /// Entries are sorted and deduplicated; zero multiplicities are dropped.
  Hammock(Vertex base, std::vector<Entry> entries);

  const Vertex& base() const { return base_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<Vertex> members() const;
  std::size_t size() const { return entries_.size(); }

  bool contains(const Vertex& v) const;
  /// 0 for non-members.
  int multiplicity(const Vertex& v) const;

  /// τ^k applied to every member and to the base.
  Hammock translated(Int k) const;

  friend bool operator==(const Hammock&, const Hammock&) = default;

 private:
  Vertex base_;
  std::vector<Entry> entries_;
};

/// H^-(v) = {y | Hom(y, v) != 0}, by backward knitting from v.
Hammock hammock_minus(const Dynkin& delta, const Vertex& v);
/// H^+(v) = {y | Hom(v, y) != 0}, as H^-(ω^{-1} τ v) re-based at v.
Hammock hammock_plus(const Dynkin& delta, const Vertex& v);
/// H^+(v) by forward knitting from v. Agrees with hammock_plus.
Hammock hammock_plus_knitted(const Dynkin& delta, const Vertex& v);

/// H^-(0, t) for every label, precomputed once. Thread-safe after
/// construction.
class HammockAtlas {
 public:
  explicit HammockAtlas(const Dynkin& delta);

  const Dynkin& delta() const { return delta_; }
  Hammock minus(const Vertex& v) const;
  Hammock plus(const Vertex& v) const;

 private:
  Dynkin delta_;
  std::vector<Hammock> at_zero_;  // by slot
};

}  // namespace rigidity
