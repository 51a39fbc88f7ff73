#pragma once

// Rigidity degrees: closed forms per Dynkin type, and a brute-force oracle
// that enumerates SE_G(x) on ZΔ.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigidity/hammock.hpp"
#include "rigidity/quiver.hpp"

namespace rigidity {

struct RigidityReport {
  AlgebraType atype;
  Vertex vertex;
  /// Absent means infinite.
  std::optional<Int> rd;
  /// Closed-form table row that fired; "oracle" for oracle-only reports.
  std::string branch;
  /// Smallest element of SE_G; oracle only.
  std::optional<Int> witness;

  /// rd + 2, or absent when rd is infinite.
  std::optional<Int> domdim_bound() const {
    return rd ? std::optional<Int>(*rd + 2) : std::nullopt;
  }
};

/// The pair (M, N) feeding the Euclidean algorithm for a type, together with
/// the label-independent constants of the closed forms.
EuclidData closed_form_data(const AlgebraType& atype);

/// Closed-form rigidity degree of the modules on label t. Type A labels
/// beyond m/2 are reflected to m - t first.
RigidityReport rd_closed(const AlgebraType& atype, Label t);

/// SE_G(v) ∩ [1, horizon].
std::vector<Int> se_oracle(const AlgebraType& atype, const Vertex& v, Int horizon);
std::vector<Int> se_oracle(const AlgebraType& atype, const HammockAtlas& atlas, const Vertex& v,
                           Int horizon);

/// min{p >= 1 | ω^p v ∈ G v}.
Int omega_period(const AlgebraType& atype, const Vertex& v);

/// rd(v) = min SE_G(v) - 1, searched over one ω-period.
RigidityReport rd_oracle(const AlgebraType& atype, const Vertex& v);
RigidityReport rd_oracle(const AlgebraType& atype, const HammockAtlas& atlas, const Vertex& v);

struct Endpoint {
  int t = 0;
  Int rd = 0;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// Labels t <= m/2 with t = 1 or rd(t) < rd(t-1). Type A only.
std::vector<Endpoint> endpoint_scan(const AlgebraType& atype);

}  // namespace rigidity
