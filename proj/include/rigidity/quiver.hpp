#pragma once

// Translation quivers ZΔ for Dynkin diagrams, the automorphisms τ, ω, φ and
// the admissible cyclic groups G = <τ^n φ>.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rigidity/euclid.hpp"

namespace rigidity {

enum class DynkinKind : std::uint8_t { A, D, E };

/// The two ends of the fork of D_{m+1}. They are never encoded as integers.
enum class Fork : std::uint8_t { none, plus, minus };

/// A vertex of the Dynkin diagram.
///
/// A_r and E_r use index 1..r. D_{m+1} uses index 1..m-1 on the arm and
/// index m with fork plus/minus for the two fork ends.
struct Label {
  int index = 1;
  Fork fork = Fork::none;

  static constexpr Label plain(int t) { return Label{t, Fork::none}; }
  static constexpr Label plus(int m) { return Label{m, Fork::plus}; }
  static constexpr Label minus(int m) { return Label{m, Fork::minus}; }

  bool is_fork() const { return fork != Fork::none; }

  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;
};

/// A vertex (x, t) of ZΔ.
struct Vertex {
  Int x = 0;
  Label t;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A Dynkin diagram together with the coordinates used on ZΔ.
///
/// Each label carries a level offset c(t); the vertex (x, t) sits at level
/// -2x + c(t) and every arrow of ZΔ raises the level by exactly one. τ shifts
/// x by +1 and lowers the level by two.
class Dynkin {
 public:
  /// Throws std::invalid_argument for ranks outside A_{r>=1}, D_{r>=4},
  /// E_{6,7,8}.
  static Dynkin make(DynkinKind kind, int rank);

  DynkinKind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::string name() const;

  /// Length bound of nonzero paths in the mesh category: r, 2r-3, 11/17/29.
  Int m_delta() const;
  Int coxeter() const { return m_delta() + 1; }
  /// h for type A, h/2 for types D and E.
  Int h_star() const;
  /// The parameter m used in the per-type formulas: h for A_{m-1}, h/2 for
  /// D_{m+1}, h* for E.
  Int param_m() const;

  std::span<const Label> labels() const { return labels_; }
  bool valid(Label t) const;
  /// Position of a label in labels(); throws std::invalid_argument if invalid.
  int slot(Label t) const;
  int level_offset(Label t) const { return offsets_[static_cast<std::size_t>(slot(t))]; }
  Int level(const Vertex& v) const;

  std::vector<Vertex> predecessors(const Vertex& v) const;
  std::vector<Vertex> successors(const Vertex& v) const;

  /// Label syntax: integers, plus "m+"/"m-" (or "<m>+"/"<m>-") for D fork ends.
  Label parse_label(std::string_view text) const;
  std::string label_string(Label t) const;
  /// DOT-safe label token: fork ends render as "p"/"m".
  std::string label_token(Label t) const;

  friend bool operator==(const Dynkin& a, const Dynkin& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_;
  }

 private:
  Dynkin() = default;

  DynkinKind kind_ = DynkinKind::A;
  int rank_ = 1;
  std::vector<Label> labels_;
  std::vector<int> offsets_;
  std::vector<std::vector<int>> adjacency_;  // by slot
};

std::string vertex_string(const Dynkin& delta, const Vertex& v);

Vertex tau(const Vertex& v, Int k = 1);
Vertex tau_inverse(const Vertex& v);

/// The lift of the syzygy functor to ZΔ, by the closed per-type formulas.
Vertex omega(const Dynkin& delta, const Vertex& v);
Vertex omega_inverse(const Dynkin& delta, const Vertex& v);
/// ω^k for any integer k.
Vertex omega_power(const Dynkin& delta, const Vertex& v, Int k);

/// Exact non-negative rational, used for the type parameter u = n / m_Δ.
struct Rational {
  Int num = 0;
  Int den = 1;

  /// Parses "p" or "p/q"; rejects floats, signs other than a leading '+',
  /// zero denominators and non-positive values.
  static Rational parse(std::string_view text);
  static Rational of(Int num, Int den = 1);
  bool is_integer() const { return den == 1; }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// A representation-finite self-injective type (Δ, u, s): the stable
/// AR-quiver is ZΔ / <τ^n φ> with φ of order s.
class AlgebraType {
 public:
  /// Builds the type from the classification triple. Throws
  /// std::invalid_argument for combinations outside the classification.
  static AlgebraType make(DynkinKind kind, int rank, Rational u, int s);
  /// Expert constructor taking the τ-exponent n of the generator directly.
  /// For (A_{2p+1}, u, 2) this is the shift of the generator τ^n ω.
  static AlgebraType from_shift(DynkinKind kind, int rank, Int n, int s);

  const Dynkin& delta() const { return delta_; }
  int s() const { return s_; }
  const Rational& u() const { return u_; }
  /// τ-exponent of the generator: u m_Δ, except u(2p+1)-(p+1) for A with s = 2.
  Int n() const { return n_; }
  /// g^s = τ^period for the generator g.
  Int period() const;
  std::string name() const;

  /// The order-s automorphism φ with a fixed vertex.
  Vertex phi(const Vertex& v) const;
  /// The generator g of G.
  Vertex generator(const Vertex& v) const;
  /// True iff w lies in the G-orbit of v.
  bool same_orbit(const Vertex& v, const Vertex& w) const;
  /// Orbit representative with 0 <= x < period(), minimal over the orbit.
  Vertex canonical(const Vertex& v) const;

 private:
  AlgebraType(Dynkin delta, Rational u, int s, Int n)
      : delta_(std::move(delta)), u_(u), s_(s), n_(n) {}

  Dynkin delta_;
  Rational u_;
  int s_ = 1;
  Int n_ = 1;
};

/// Free-function spellings of the AlgebraType members.
inline Vertex phi(const AlgebraType& atype, const Vertex& v) { return atype.phi(v); }
inline bool group_member(const AlgebraType& atype, const Vertex& v, const Vertex& w) {
  return atype.same_orbit(v, w);
}

}  // namespace rigidity
