#pragma once

// Maximal r-orthogonal single-orbit subsets of ZΔ and rigidity dimensions.

#include <optional>
#include <string>
#include <vector>

#include "rigidity/hammock.hpp"
#include "rigidity/quiver.hpp"

namespace rigidity {

struct OrthogonalityCertificate {
  AlgebraType atype;
  Vertex generator_vertex;
  Int r = 0;
  /// Both coverage lists are empty.
  bool is_maximal = false;
  /// Fundamental-domain vertices outside G v reached by no H^+(ω^i v), 0 < i <= r.
  std::vector<Vertex> uncovered;
  /// Fundamental-domain vertices of G v that some H^+(ω^i v) reaches.
  std::vector<Vertex> overlapping;
  /// τ ω^r v lies in G v.
  bool stability_ok = false;
};

/// Checks ZΔ \ M = ∪_{w ∈ M, 0 < i <= r} H^+(ω^i w) for M = G v over the
/// fundamental domain 0 <= x < period() times all labels.
OrthogonalityCertificate is_maximal_orthogonal(const AlgebraType& atype, const Vertex& v, Int r);
OrthogonalityCertificate is_maximal_orthogonal(const AlgebraType& atype, const HammockAtlas& atlas,
                                               const Vertex& v, Int r);

struct RigdimClosed {
  Int r = 0;
  Int rigdim = 0;
  /// Which family matched, e.g. "A.s=1.m=2".
  std::string family;
  /// The family parameter a.
  Int a = 0;
};

/// Closed-form (r, rigdim) for the families whose generator sits at label 1;
/// absent for every other type.
std::optional<RigdimClosed> rigdim_closed(const AlgebraType& atype);

struct SubCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct RigdimVerification {
  AlgebraType atype;
  std::optional<RigdimClosed> closed;
  Vertex vertex;
  Int r = 0;
  Int rigdim = 0;
  std::vector<SubCheck> checks;
  std::optional<OrthogonalityCertificate> certificate;

  bool ok() const;
};

/// Recomputes r as the rd of label 1, checks that no label has larger rd,
/// certifies maximal r-orthogonality and compares with the closed form.
/// Failures are recorded, not thrown.
RigdimVerification rigdim_verify(const AlgebraType& atype);

}  // namespace rigidity
