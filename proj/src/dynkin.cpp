#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "rigidity/quiver.hpp"

namespace rigidity {

namespace {

void add_edge(std::vector<std::vector<int>>& adj, int a, int b) {
  adj[static_cast<std::size_t>(a)].push_back(b);
  adj[static_cast<std::size_t>(b)].push_back(a);
}

}  // namespace

Dynkin Dynkin::make(DynkinKind kind, int rank) {
  Dynkin d;
  d.kind_ = kind;
  d.rank_ = rank;
  switch (kind) {
    case DynkinKind::A: {
      if (rank < 1) throw std::invalid_argument("A_r needs r >= 1");
      for (int t = 1; t <= rank; ++t) {
        d.labels_.push_back(Label::plain(t));
        d.offsets_.push_back(-t);
      }
      d.adjacency_.resize(static_cast<std::size_t>(rank));
      for (int t = 1; t < rank; ++t) add_edge(d.adjacency_, t - 1, t);
      break;
    }
    case DynkinKind::D: {
      if (rank < 4) throw std::invalid_argument("D_r needs r >= 4");
      const int m = rank - 1;
      for (int t = 1; t < m; ++t) {
        d.labels_.push_back(Label::plain(t));
        d.offsets_.push_back(-t);
      }
      // The fork ends sit one level above m-1, at the same x.
      d.labels_.push_back(Label::plus(m));
      d.offsets_.push_back(-m + 2);
      d.labels_.push_back(Label::minus(m));
      d.offsets_.push_back(-m + 2);
      d.adjacency_.resize(static_cast<std::size_t>(rank));
      for (int t = 1; t < m - 1; ++t) add_edge(d.adjacency_, t - 1, t);
      add_edge(d.adjacency_, m - 2, m - 1);
      add_edge(d.adjacency_, m - 2, m);
      break;
    }
    case DynkinKind::E: {
      if (rank < 6 || rank > 8) throw std::invalid_argument("E_r needs r in {6, 7, 8}");
      const int branch = rank - 3;  // 3, 4, 5
      for (int t = 1; t < rank; ++t) {
        d.labels_.push_back(Label::plain(t));
        d.offsets_.push_back(-t);
      }
      d.labels_.push_back(Label::plain(rank));
      d.offsets_.push_back(-branch + 1);
      d.adjacency_.resize(static_cast<std::size_t>(rank));
      for (int t = 1; t < rank - 1; ++t) add_edge(d.adjacency_, t - 1, t);
      add_edge(d.adjacency_, branch - 1, rank - 1);
      break;
    }
  }
  return d;
}

std::string Dynkin::name() const {
  const char* k = kind_ == DynkinKind::A ? "A" : kind_ == DynkinKind::D ? "D" : "E";
  return k + std::to_string(rank_);
}

Int Dynkin::m_delta() const {
  switch (kind_) {
    case DynkinKind::A:
      return rank_;
    case DynkinKind::D:
      return 2 * rank_ - 3;
    case DynkinKind::E:
      return rank_ == 6 ? 11 : rank_ == 7 ? 17 : 29;
  }
  return 0;
}

Int Dynkin::h_star() const {
  return kind_ == DynkinKind::A ? coxeter() : coxeter() / 2;
}

Int Dynkin::param_m() const {
  return kind_ == DynkinKind::D ? rank_ - 1 : h_star();
}

bool Dynkin::valid(Label t) const {
  return std::find(labels_.begin(), labels_.end(), t) != labels_.end();
}

int Dynkin::slot(Label t) const {
  if (kind_ != DynkinKind::D || !t.is_fork()) {
    const bool in_range =
        !t.is_fork() && t.index >= 1 &&
        t.index <= (kind_ == DynkinKind::D ? rank_ - 2 : rank_);
    if (in_range) return t.index - 1;
  } else if (t.index == rank_ - 1) {
    return t.fork == Fork::plus ? rank_ - 2 : rank_ - 1;
  }
  throw std::invalid_argument("label " + label_string(t) + " is not a vertex of " + name());
}

Int Dynkin::level(const Vertex& v) const {
  return checked_add(checked_mul(-2, v.x), level_offset(v.t));
}

std::vector<Vertex> Dynkin::predecessors(const Vertex& v) const {
  const int sv = slot(v.t);
  const int cv = offsets_[static_cast<std::size_t>(sv)];
  std::vector<Vertex> out;
  for (int a : adjacency_[static_cast<std::size_t>(sv)]) {
    const int ca = offsets_[static_cast<std::size_t>(a)];
    out.push_back(Vertex{v.x + (ca + 1 - cv) / 2, labels_[static_cast<std::size_t>(a)]});
  }
  return out;
}

std::vector<Vertex> Dynkin::successors(const Vertex& v) const {
  const int sv = slot(v.t);
  const int cv = offsets_[static_cast<std::size_t>(sv)];
  std::vector<Vertex> out;
  for (int b : adjacency_[static_cast<std::size_t>(sv)]) {
    const int cb = offsets_[static_cast<std::size_t>(b)];
    out.push_back(Vertex{v.x + (cb - cv - 1) / 2, labels_[static_cast<std::size_t>(b)]});
  }
  return out;
}

Label Dynkin::parse_label(std::string_view text) const {
  auto fail = [&]() -> Label {
    throw std::invalid_argument("cannot parse label '" + std::string(text) + "' for " + name());
  };
  if (text.empty()) return fail();
  if (kind_ == DynkinKind::D && (text.back() == '+' || text.back() == '-')) {
    const std::string_view head = text.substr(0, text.size() - 1);
    const int m = rank_ - 1;
    bool ok = head == "m";
    if (!ok) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), value);
      ok = ec == std::errc() && ptr == head.data() + head.size() && value == m;
    }
    if (!ok) return fail();
    return text.back() == '+' ? Label::plus(m) : Label::minus(m);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return fail();
  const Label t = Label::plain(value);
  if (!valid(t)) return fail();
  return t;
}

std::string Dynkin::label_string(Label t) const {
  switch (t.fork) {
    case Fork::plus:
      return "m+";
    case Fork::minus:
      return "m-";
    case Fork::none:
      break;
  }
  return std::to_string(t.index);
}

std::string Dynkin::label_token(Label t) const {
  switch (t.fork) {
    case Fork::plus:
      return "p";
    case Fork::minus:
      return "m";
    case Fork::none:
      break;
  }
  return std::to_string(t.index);
}

std::string vertex_string(const Dynkin& delta, const Vertex& v) {
  return "(" + std::to_string(v.x) + "," + delta.label_string(v.t) + ")";
}

Vertex tau(const Vertex& v, Int k) { return Vertex{checked_add(v.x, k), v.t}; }

Vertex tau_inverse(const Vertex& v) { return tau(v, -1); }

namespace {

Label flip(Label t) {
  if (t.fork == Fork::plus) return Label::minus(t.index);
  if (t.fork == Fork::minus) return Label::plus(t.index);
  return t;
}

}  // namespace

Vertex omega(const Dynkin& delta, const Vertex& v) {
  delta.slot(v.t);
  const Int m = delta.param_m();
  switch (delta.kind()) {
    case DynkinKind::A:
      return Vertex{v.x + v.t.index, Label::plain(static_cast<int>(m) - v.t.index)};
    case DynkinKind::D:
      // The fork ends are exchanged exactly when m is even.
      return Vertex{v.x + m, m % 2 == 0 ? flip(v.t) : v.t};
    case DynkinKind::E:
      if (delta.rank() == 6 && v.t.index <= 5) {
        return Vertex{v.x + v.t.index + 3, Label::plain(6 - v.t.index)};
      }
      return Vertex{v.x + m, v.t};
  }
  return v;
}

Vertex omega_inverse(const Dynkin& delta, const Vertex& v) {
  delta.slot(v.t);
  const Int m = delta.param_m();
  switch (delta.kind()) {
    case DynkinKind::A:
      return Vertex{v.x - (m - v.t.index), Label::plain(static_cast<int>(m) - v.t.index)};
    case DynkinKind::D:
      return Vertex{v.x - m, m % 2 == 0 ? flip(v.t) : v.t};
    case DynkinKind::E:
      if (delta.rank() == 6 && v.t.index <= 5) {
        return Vertex{v.x - 9 + v.t.index, Label::plain(6 - v.t.index)};
      }
      return Vertex{v.x - m, v.t};
  }
  return v;
}

Vertex omega_power(const Dynkin& delta, const Vertex& v, Int k) {
  // ω^2 = τ^h on every ZΔ.
  Int q = k / 2;
  Int r = k - 2 * q;
  if (r < 0) {
    r += 2;
    q -= 1;
  }
  Vertex out = tau(v, checked_mul(q, delta.coxeter()));
  return r == 1 ? omega(delta, out) : out;
}

}  // namespace rigidity
