#include "rigidity/orthogonal.hpp"

#include <algorithm>

#include "rigidity/parallel.hpp"
#include "rigidity/rigidity.hpp"

namespace rigidity {

OrthogonalityCertificate is_maximal_orthogonal(const AlgebraType& atype, const HammockAtlas& atlas,
                                               const Vertex& v, Int r) {
  const Dynkin& delta = atype.delta();
  OrthogonalityCertificate cert{atype, v, r, false, {}, {}, false};

  // G-reduced union of H^+(ω^i v) for 0 < i <= r. Translating v by G only
  // translates these sets by G, so one orbit representative suffices.
  std::vector<Vertex> covered;
  Vertex w = atype.canonical(v);
  for (Int i = 1; i <= r; ++i) {
    w = atype.canonical(omega(delta, w));
    for (const Vertex& y : atlas.plus(w).members()) covered.push_back(atype.canonical(y));
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());

  const Vertex home = atype.canonical(v);
  const Int period = atype.period();
  const auto labels = delta.labels();
  struct Verdict {
    std::vector<Vertex> uncovered;
    std::vector<Vertex> overlapping;
  };
  const std::vector<Verdict> per_x =
      parallel_map(static_cast<std::size_t>(period), [&](std::size_t x) {
        Verdict out;
        for (Label t : labels) {
          const Vertex y{static_cast<Int>(x), t};
          const Vertex c = atype.canonical(y);
          const bool in_orbit = c == home;
          const bool hit = std::binary_search(covered.begin(), covered.end(), c);
          if (!in_orbit && !hit) out.uncovered.push_back(y);
          if (in_orbit && hit) out.overlapping.push_back(y);
        }
        return out;
      });
  for (const Verdict& part : per_x) {
    cert.uncovered.insert(cert.uncovered.end(), part.uncovered.begin(), part.uncovered.end());
    cert.overlapping.insert(cert.overlapping.end(), part.overlapping.begin(),
                            part.overlapping.end());
  }
  cert.is_maximal = cert.uncovered.empty() && cert.overlapping.empty();
  cert.stability_ok = atype.same_orbit(v, tau(omega_power(delta, v, r)));
  return cert;
}

OrthogonalityCertificate is_maximal_orthogonal(const AlgebraType& atype, const Vertex& v, Int r) {
  return is_maximal_orthogonal(atype, HammockAtlas(atype.delta()), v, r);
}

std::optional<RigdimClosed> rigdim_closed(const AlgebraType& atype) {
  const Dynkin& delta = atype.delta();
  const Int n = atype.n();
  if (delta.kind() == DynkinKind::A) {
    const Int m = delta.param_m();
    if (atype.s() == 1) {
      if (m == 2 && n % 2 == 0) {
        const Int a = n / 2;
        return RigdimClosed{2 * a - 1, 2 * a + 1, "A.s=1.m=2", a};
      }
      if ((n + 1) % m == 0) {
        const Int a = (n + 1) / m;
        return RigdimClosed{2 * (a * m - a - 1), 2 * (a * m - a), "A.s=1.n=am-1", a};
      }
      return std::nullopt;
    }
    if ((n + 1) % m == 0 && (n + 1) / m > 1) {
      const Int a = (n + 1) / m;
      return RigdimClosed{2 * a * m + m - 2 * a - 3, (2 * a + 1) * (m - 1), "A.s=2.n=am-1", a};
    }
    return std::nullopt;
  }
  if (delta.kind() == DynkinKind::E && delta.rank() == 7 && atype.s() == 1 &&
      atype.u().num % 9 == 5) {
    const Int a = atype.u().num / 9;
    return RigdimClosed{119 * a + 66, 119 * a + 68, "E7.u=9a+5", a};
  }
  return std::nullopt;
}

bool RigdimVerification::ok() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.ok; });
}

RigdimVerification rigdim_verify(const AlgebraType& atype) {
  const Vertex v{0, Label::plain(1)};
  RigdimVerification out{atype, rigdim_closed(atype), v, 0, 0, {}, std::nullopt};
  if (!out.closed) {
    out.checks.push_back({"family", false, atype.name() + " matches no closed-form family"});
    return out;
  }
  out.checks.push_back({"family", true, out.closed->family});

  const HammockAtlas atlas(atype.delta());
  const RigidityReport closed = rd_closed(atype, v.t);
  const RigidityReport oracle = rd_oracle(atype, atlas, v);
  out.r = closed.rd.value_or(-1);
  out.rigdim = out.r + 2;
  out.checks.push_back({"rd(1) closed = oracle", closed.rd == oracle.rd,
                        "closed " + std::to_string(out.r) + ", oracle " +
                            (oracle.rd ? std::to_string(*oracle.rd) : std::string("inf"))});

  Int largest = out.r;
  std::string argmax = "1";
  for (Label t : atype.delta().labels()) {
    const Int rd = rd_closed(atype, t).rd.value_or(-1);
    if (rd > largest) {
      largest = rd;
      argmax = atype.delta().label_string(t);
    }
  }
  out.checks.push_back({"rd(1) is maximal", largest == out.r,
                        largest == out.r ? "max rd " + std::to_string(largest)
                                         : "label " + argmax + " has rd " + std::to_string(largest)});

  out.certificate = is_maximal_orthogonal(atype, atlas, v, out.r);
  out.checks.push_back({"maximal orthogonal", out.certificate->is_maximal,
                        std::to_string(out.certificate->uncovered.size()) + " uncovered, " +
                            std::to_string(out.certificate->overlapping.size()) + " overlapping"});
  out.checks.push_back({"tau omega^r stable", out.certificate->stability_ok, ""});
  out.checks.push_back({"r matches closed form", out.r == out.closed->r,
                        "closed form r = " + std::to_string(out.closed->r)});
  out.checks.push_back({"rigdim matches closed form", out.rigdim == out.closed->rigdim,
                        "closed form rigdim = " + std::to_string(out.closed->rigdim)});
  return out;
}

}  // namespace rigidity
