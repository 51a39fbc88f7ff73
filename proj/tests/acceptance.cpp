// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/euclid_brute.hpp"
#include "oracles/root_knitting.hpp"
#include "rigidity/orthogonal.hpp"
#include "rigidity/parallel.hpp"
#include "rigidity/rigidity.hpp"

using namespace rigidity;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Mismatches {
  std::size_t checked = 0;
  std::vector<std::string> bad;

  void merge(const Mismatches& other) {
    checked += other.checked;
    bad.insert(bad.end(), other.bad.begin(), other.bad.end());
  }
  Outcome outcome(const std::string& what) const {
    std::ostringstream out;
    out << checked << " " << what << ", " << bad.size() << " mismatches";
    if (!bad.empty()) out << " (first: " << bad.front() << ")";
    return {bad.empty(), out.str()};
  }
};

// Labels a criterion sweeps: t <= m/2 for type A, everything otherwise.
std::vector<Label> swept_labels(const AlgebraType& a) {
  std::vector<Label> out;
  for (Label t : a.delta().labels()) {
    if (a.delta().kind() == DynkinKind::A && 2 * t.index > a.delta().param_m()) continue;
    out.push_back(t);
  }
  return out;
}

Mismatches agreement(const std::vector<AlgebraType>& types) {
  const auto parts = parallel_map(types.size(), [&](std::size_t i) {
    const AlgebraType& a = types[i];
    const HammockAtlas atlas(a.delta());
    Mismatches m;
    for (Label t : swept_labels(a)) {
      ++m.checked;
      const RigidityReport closed = rd_closed(a, t);
      const RigidityReport brute = rd_oracle(a, atlas, Vertex{0, t});
      if (!closed.rd || !brute.rd || *closed.rd != *brute.rd) {
        std::ostringstream out;
        out << a.name() << " t=" << a.delta().label_string(t) << " closed "
            << (closed.rd ? std::to_string(*closed.rd) : "inf") << " oracle "
            << (brute.rd ? std::to_string(*brute.rd) : "inf");
        m.bad.push_back(out.str());
      }
    }
    return m;
  });
  Mismatches all;
  for (const Mismatches& p : parts) all.merge(p);
  return all;
}

std::vector<AlgebraType> sweep_a1() {
  std::vector<AlgebraType> out;
  for (int m = 2; m <= 10; ++m) {
    for (Int n = 1; n <= 30; ++n) out.push_back(AlgebraType::from_shift(DynkinKind::A, m - 1, n, 1));
  }
  return out;
}

std::vector<AlgebraType> sweep_a2() {
  std::vector<AlgebraType> out;
  for (int p = 1; p <= 5; ++p) {
    for (Int u = 1; u <= 6; ++u) out.push_back(AlgebraType::make(DynkinKind::A, 2 * p + 1, Rational::of(u), 2));
  }
  return out;
}

std::vector<AlgebraType> sweep_d() {
  std::vector<AlgebraType> out;
  for (int s = 1; s <= 2; ++s) {
    for (int m = 3; m <= 7; ++m) {
      for (Int u = 1; u <= 5; ++u) out.push_back(AlgebraType::make(DynkinKind::D, m + 1, Rational::of(u), s));
    }
  }
  for (int w = 2; w <= 4; ++w) {
    for (Int v : {1, 2, 4, 5}) out.push_back(AlgebraType::make(DynkinKind::D, 3 * w, Rational::of(v, 3), 1));
  }
  for (Int u = 1; u <= 9; ++u) out.push_back(AlgebraType::make(DynkinKind::D, 4, Rational::of(u), 3));
  return out;
}

std::vector<AlgebraType> sweep_e() {
  std::vector<AlgebraType> out;
  for (int s = 1; s <= 2; ++s) {
    for (Int u = 1; u <= 13; ++u) out.push_back(AlgebraType::make(DynkinKind::E, 6, Rational::of(u), s));
  }
  for (Int u = 1; u <= 10; ++u) out.push_back(AlgebraType::make(DynkinKind::E, 7, Rational::of(u), 1));
  for (Int u = 1; u <= 8; ++u) out.push_back(AlgebraType::make(DynkinKind::E, 8, Rational::of(u), 1));
  return out;
}

// Certifies r at (0,1) and, when asked, that r - 1 is not maximal.
Outcome certify(const AlgebraType& a, Int r, Int rigdim, bool check_below) {
  std::ostringstream out;
  out << a.name();
  const RigdimVerification rv = rigdim_verify(a);
  bool ok = rv.ok() && rv.r == r && rv.rigdim == rigdim;
  out << " r=" << rv.r << " rigdim=" << rv.rigdim;
  for (const SubCheck& c : rv.checks) {
    if (!c.ok) out << " [" << c.name << " failed: " << c.detail << "]";
  }
  if (check_below && r > 0) {
    const bool below = is_maximal_orthogonal(a, Vertex{0, Label::plain(1)}, r - 1).is_maximal;
    if (below) out << " [r-1 also maximal]";
    ok = ok && !below;
  }
  return {ok, out.str()};
}

Outcome criterion_1() { return agreement(sweep_a1()).outcome("labels"); }
Outcome criterion_2() { return agreement(sweep_a2()).outcome("labels"); }
Outcome criterion_3() { return agreement(sweep_d()).outcome("labels"); }
Outcome criterion_4() { return agreement(sweep_e()).outcome("labels"); }

Outcome criterion_5() {
  const AlgebraType a8 = AlgebraType::make(DynkinKind::A, 8, Rational::of(17, 8), 1);
  const Int expected[] = {30, 3, 3, 3, 3, 3, 3, 30};
  const HammockAtlas atlas(a8.delta());
  std::ostringstream out;
  bool ok = true;
  out << "rd =";
  for (int t = 1; t <= 8; ++t) {
    const RigidityReport closed = rd_closed(a8, Label::plain(t));
    const RigidityReport brute = rd_oracle(a8, atlas, Vertex{0, Label::plain(t)});
    ok = ok && closed.rd == expected[t - 1] && brute.rd == expected[t - 1];
    out << " " << (closed.rd ? std::to_string(*closed.rd) : "inf");
  }
  const Outcome dim = certify(a8, 30, 32, false);
  out << "; " << dim.detail;
  return {ok && dim.ok, out.str()};
}

Outcome criterion_6() {
  std::vector<std::function<Outcome()>> jobs;
  for (Int a = 1; a <= 4; ++a) {
    jobs.push_back([a] {
      return certify(AlgebraType::from_shift(DynkinKind::A, 1, 2 * a, 1), 2 * a - 1, 2 * a + 1, false);
    });
  }
  for (int m = 2; m <= 5; ++m) {
    for (Int a = 1; a <= 3; ++a) {
      jobs.push_back([m, a] {
        return certify(AlgebraType::from_shift(DynkinKind::A, m - 1, a * m - 1, 1),
                       2 * (a * m - a - 1), 2 * (a * m - a), true);
      });
    }
  }
  const auto results = parallel_map(jobs.size(), [&](std::size_t i) { return jobs[i](); });
  Outcome all{true, std::to_string(results.size()) + " types certified"};
  for (const Outcome& o : results) {
    if (!o.ok) {
      all.ok = false;
      all.detail += "; " + o.detail;
    }
  }
  return all;
}

Outcome criterion_7() {
  // m = 4, a = 2, u = 3 and m = 6, a = 3, u = 4.
  const Outcome four = certify(AlgebraType::make(DynkinKind::A, 3, Rational::of(3), 2), 13, 15, true);
  const Outcome six = certify(AlgebraType::make(DynkinKind::A, 5, Rational::of(4), 2), 33, 35, true);
  return {four.ok && six.ok, four.detail + "; " + six.detail};
}

Outcome criterion_8() {
  return certify(AlgebraType::make(DynkinKind::E, 7, Rational::of(5), 1), 66, 68, false);
}

Mismatches euclid_properties() {
  const auto rows = parallel_map(200, [](std::size_t i) {
    const Int m = static_cast<Int>(i) + 1;
    Mismatches out;
    for (Int n = 1; n <= 200; ++n) {
      const EuclidData data = weight_sequence(m, n);
      const int len = data.length();
      const int d = len - 1;
      for (int l = 1; l <= len; ++l) {
        for (Int r = 1; r <= data.fib(l); ++r) {
          // r = Σ λ_i Fb_{i-1} forces <r m>_n = <Σ (-1)^{i-1} λ_i s_i>_n.
          const std::vector<Int> lambda = fib_decompose(r, data, l);
          Int alternating = 0;
          Int sum = 0;
          for (int j = 1; j <= l; ++j) {
            const Int c = lambda[static_cast<std::size_t>(j - 1)];
            sum += c * data.fib(j - 1);
            alternating += (j % 2 == 1 ? c : -c) * data.remainder(j);
          }
          ++out.checked;
          const Int rm = oracle::mod(r * m, n);
          if (sum != r || rm != oracle::mod(alternating, n)) {
            out.bad.push_back("congruence (" + std::to_string(m) + "," + std::to_string(n) +
                              ") l=" + std::to_string(l) + " r=" + std::to_string(r));
          }
          if (!remainder_range_admissible(data, l, r)) continue;
          const Int r1m = oracle::mod((r - 1) * m, n);
          const Int sl = data.remainder(l);
          const bool last = l == d + 1;
          bool lower_eq = false;
          bool upper_eq = false;
          if (l % 2 == 1) {
            lower_eq = r == data.fib(l - 1);
            upper_eq = d % 2 == 0 && last && r == data.fib(d + 1) - data.fib(d) + 1;
          } else {
            lower_eq = d % 2 != 0 && last && r == data.fib(d + 1) - data.fib(d);
            upper_eq = r == data.fib(l - 1) + 1;
          }
          ++out.checked;
          if (rm < sl || r1m > n - sl || (rm == sl) != lower_eq || (r1m == n - sl) != upper_eq) {
            out.bad.push_back("bounds (" + std::to_string(m) + "," + std::to_string(n) +
                              ") l=" + std::to_string(l) + " r=" + std::to_string(r));
          }
        }
      }
    }
    return out;
  });
  Mismatches all;
  for (const Mismatches& r : rows) all.merge(r);
  return all;
}

Mismatches rectangle_properties() {
  Mismatches out;
  for (int m = 2; m <= 12; ++m) {
    const Dynkin a = Dynkin::make(DynkinKind::A, m - 1);
    for (int t = 1; 2 * t <= m; ++t) {
      std::set<Vertex> expected;
      for (int y = 0; y < t; ++y) {
        for (int tp = 1; tp < m; ++tp) {
          if (tp + y >= t && tp + y < m) expected.insert(Vertex{y, Label::plain(tp)});
        }
      }
      const auto members = hammock_minus(a, Vertex{0, Label::plain(t)}).members();
      std::set<Vertex> knitted(members.begin(), members.end());
      std::set<Vertex> rooted;
      for (const auto& [y, mult] : oracle::hammock_minus(a, Vertex{0, Label::plain(t)})) {
        (void)mult;
        rooted.insert(y);
      }
      ++out.checked;
      if (knitted != expected || rooted != expected) {
        out.bad.push_back("rectangle m=" + std::to_string(m) + " t=" + std::to_string(t));
      }
    }
  }
  return out;
}

// SE membership against the remainder tests, on every swept type of A and D.
Mismatches se_properties() {
  std::vector<AlgebraType> types = sweep_a1();
  for (const AlgebraType& a : sweep_a2()) types.push_back(a);
  for (const AlgebraType& a : sweep_d()) {
    if (a.s() != 3 && a.u().is_integer()) types.push_back(a);
  }
  for (const AlgebraType& a : sweep_d()) {
    if (!a.u().is_integer()) types.push_back(a);
  }
  const auto parts = parallel_map(types.size(), [&](std::size_t i) {
    const AlgebraType& a = types[i];
    const HammockAtlas atlas(a.delta());
    const Int m = a.delta().param_m();
    Int big_m = m;
    Int big_n = a.n();
    if (a.delta().kind() == DynkinKind::A && a.s() == 2) {
      big_m = a.n() + m;
      big_n = 2 * a.n() + m;
    }
    const bool parity_form = a.delta().kind() == DynkinKind::A && a.s() == 1;
    Mismatches out;
    for (Label t : a.delta().labels()) {
      if (t.is_fork()) continue;
      if (a.delta().kind() == DynkinKind::A && 2 * t.index > m) continue;
      const Int horizon = 2 * big_n + 4;
      const auto se = se_oracle(a, atlas, Vertex{0, t}, horizon);
      const std::set<Int> in(se.begin(), se.end());
      for (Int i = 1; i <= horizon; ++i) {
        bool predicted = false;
        if (parity_form) {
          const Int k = i / 2;
          predicted = i % 2 == 0 ? oracle::mod(k * m, big_n) < t.index
                                 : oracle::mod(k * m, big_n) >= big_n - t.index;
        } else {
          predicted = oracle::mod(i * big_m, big_n) < t.index ||
                      oracle::mod((i - 1) * big_m, big_n) >= big_n - t.index;
        }
        ++out.checked;
        if (predicted != (in.count(i) > 0)) {
          out.bad.push_back(a.name() + " t=" + a.delta().label_string(t) + " i=" + std::to_string(i));
        }
      }
    }
    return out;
  });
  Mismatches all;
  for (const Mismatches& p : parts) all.merge(p);
  return all;
}

Outcome criterion_9() {
  const Mismatches e = euclid_properties();
  const Mismatches r = rectangle_properties();
  const Mismatches s = se_properties();
  const Outcome eo = e.outcome("remainder checks");
  const Outcome ro = r.outcome("rectangles");
  const Outcome so = s.outcome("SE memberships");
  return {eo.ok && ro.ok && so.ok, eo.detail + "; " + ro.detail + "; " + so.detail};
}

Outcome criterion_10() {
  const std::vector<AlgebraType> types = sweep_d();
  const auto parts = parallel_map(types.size(), [&](std::size_t i) {
    const AlgebraType& a = types[i];
    const HammockAtlas atlas(a.delta());
    Mismatches out;
    for (Label t : a.delta().labels()) {
      const Vertex v{0, t};
      const RigidityReport rep = rd_oracle(a, atlas, v);
      ++out.checked;
      if (!rep.rd) continue;
      if (is_maximal_orthogonal(a, atlas, v, *rep.rd).is_maximal) {
        out.bad.push_back(a.name() + " t=" + a.delta().label_string(t) + " rd=" +
                          std::to_string(*rep.rd));
      }
    }
    return out;
  });
  Mismatches all;
  for (const Mismatches& p : parts) all.merge(p);
  std::ostringstream out;
  out << all.checked << " vertices, " << all.bad.size() << " maximal orbits";
  for (const std::string& b : all.bad) out << "; " << b;
  return {all.bad.empty(), out.str()};
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "type A, s=1 closed form = oracle", 30, criterion_1},
      {2, "type A, s=2 closed form = oracle", 30, criterion_2},
      {3, "type D closed form = oracle", 60, criterion_3},
      {4, "type E closed form = oracle", 120, criterion_4},
      {5, "worked example (A8, 17/8, 1)", 1, criterion_5},
      {6, "families m=2, n=2a and n=am-1", 30, criterion_6},
      {7, "family A, s=2, n=am-1", 30, criterion_7},
      {8, "(E7, 5, 1) rigidity dimension 68", 120, criterion_8},
      {9, "property suites", 60, criterion_9},
      {10, "type D negative control", 600, criterion_10},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s: %s (%.2fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), seconds, in_time ? "" : ", over time limit");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
