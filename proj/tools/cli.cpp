#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "rigidity/dot.hpp"
#include "rigidity/hammock.hpp"
#include "rigidity/orthogonal.hpp"
#include "rigidity/parallel.hpp"
#include "rigidity/rigidity.hpp"

namespace rigidity::cli {

namespace {

using json = nlohmann::ordered_json;

struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

DynkinKind parse_kind(const std::string& text) {
  if (text == "A" || text == "a") return DynkinKind::A;
  if (text == "D" || text == "d") return DynkinKind::D;
  if (text == "E" || text == "e") return DynkinKind::E;
  throw SpecError("unknown Dynkin type '" + text + "' (expected A, D or E)");
}

Dynkin make_delta(const RunConfig& c) {
  if (!c.rank) throw SpecError("--rank is required");
  try {
    return Dynkin::make(parse_kind(c.delta), *c.rank);
  } catch (const SpecError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

AlgebraType make_type(const RunConfig& c) {
  const DynkinKind kind = parse_kind(c.delta);
  if (!c.rank) throw SpecError("--rank is required");
  if (c.u && c.n) throw SpecError("give either --u or --n, not both");
  try {
    if (c.n) return AlgebraType::from_shift(kind, *c.rank, *c.n, c.s);
    return AlgebraType::make(kind, *c.rank, Rational::parse(c.u.value_or("1")), c.s);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

Label parse_label(const Dynkin& delta, const std::optional<std::string>& t) {
  try {
    return delta.parse_label(t.value_or("1"));
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
}

std::string format_of(const RunConfig& c) { return c.dot ? "dot" : c.format; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string opt_str(const std::optional<Int>& v, const std::string& none) {
  return v ? std::to_string(*v) : none;
}

json opt_json(const std::optional<Int>& v, const json& none) { return v ? json(*v) : none; }

json vertex_json(const Dynkin& delta, const Vertex& v) {
  return json{{"x", v.x}, {"t", delta.label_string(v.t)}};
}

std::string type_columns(const AlgebraType& a) {
  return a.delta().name() + "," + a.u().str() + "," + std::to_string(a.s()) + "," +
         std::to_string(a.n());
}

// rd -------------------------------------------------------------------------

RunResult cmd_rd(const RunConfig& c) {
  const AlgebraType atype = make_type(c);
  const Dynkin& delta = atype.delta();
  const Vertex v{c.x, parse_label(delta, c.t)};
  const HammockAtlas atlas(delta);
  const RigidityReport closed = rd_closed(atype, v.t);
  const RigidityReport oracle = rd_oracle(atype, atlas, v);
  const bool agree = closed.rd == oracle.rd;

  RunResult r;
  const std::string fmt = format_of(c);
  if (fmt == "json") {
    json j{{"type", atype.name()},
           {"vertex", vertex_json(delta, v)},
           {"rd", opt_json(closed.rd, "inf")},
           {"branch", closed.branch},
           {"witness", opt_json(oracle.witness, nullptr)},
           {"domdim_bound", opt_json(closed.domdim_bound(), "inf")},
           {"oracle_rd", opt_json(oracle.rd, "inf")},
           {"agree", agree}};
    if (c.horizon) j["se"] = se_oracle(atype, atlas, v, *c.horizon);
    r.out = j.dump(2) + "\n";
  } else if (fmt == "csv") {
    r.out = "delta,u,s,n,x,t,rd,branch,witness,domdim_bound,oracle_rd\n" + type_columns(atype) +
            "," + std::to_string(v.x) + "," + delta.label_string(v.t) + "," +
            opt_str(closed.rd, "inf") + "," + csv_quote(closed.branch) + "," +
            opt_str(oracle.witness, "") + "," + opt_str(closed.domdim_bound(), "inf") + "," +
            opt_str(oracle.rd, "inf") + "\n";
  } else if (fmt == "dot") {
    r.out = orbit_quiver_dot(atype, &v);
  } else {
    std::ostringstream out;
    out << "type " << atype.name() << "\n"
        << "vertex " << vertex_string(delta, v) << "\n"
        << "rd " << opt_str(closed.rd, "inf") << "\n"
        << "branch " << closed.branch << "\n"
        << "witness " << opt_str(oracle.witness, "none") << "\n"
        << "domdim_bound " << opt_str(closed.domdim_bound(), "inf") << "\n";
    if (c.horizon) {
      out << "se";
      for (Int i : se_oracle(atype, atlas, v, *c.horizon)) out << " " << i;
      out << "\n";
    }
    r.out = out.str();
  }
  if (!agree) {
    r.exit_code = kExitVerificationFailed;
    r.err = "closed form and oracle disagree on " + atype.name() + " at " +
            vertex_string(delta, v) + ": closed " + opt_str(closed.rd, "inf") + ", oracle " +
            opt_str(oracle.rd, "inf") + "\n";
  }
  return r;
}

// table ----------------------------------------------------------------------

struct TableRow {
  Label t;
  RigidityReport closed;
  RigidityReport oracle;
};

std::vector<TableRow> table_rows(const AlgebraType& atype, const HammockAtlas& atlas) {
  std::vector<TableRow> rows;
  for (Label t : atype.delta().labels()) {
    rows.push_back({t, rd_closed(atype, t), rd_oracle(atype, atlas, Vertex{0, t})});
  }
  return rows;
}

RunResult cmd_table(const RunConfig& c) {
  const AlgebraType atype = make_type(c);
  const Dynkin& delta = atype.delta();
  const HammockAtlas atlas(delta);
  const std::vector<TableRow> rows = table_rows(atype, atlas);

  RunResult r;
  std::string mismatches;
  for (const TableRow& row : rows) {
    if (row.closed.rd != row.oracle.rd) {
      mismatches += "closed form and oracle disagree on " + atype.name() + " at t=" +
                    delta.label_string(row.t) + "\n";
    }
  }
  const std::string fmt = format_of(c);
  if (fmt == "json") {
    json list = json::array();
    for (const TableRow& row : rows) {
      list.push_back(json{{"t", delta.label_string(row.t)},
                          {"rd", opt_json(row.closed.rd, "inf")},
                          {"branch", row.closed.branch},
                          {"witness", opt_json(row.oracle.witness, nullptr)},
                          {"domdim_bound", opt_json(row.closed.domdim_bound(), "inf")},
                          {"oracle_rd", opt_json(row.oracle.rd, "inf")}});
    }
    r.out = json{{"type", atype.name()}, {"rows", list}}.dump(2) + "\n";
  } else if (fmt == "csv") {
    r.out = "t,rd,branch,witness\n";
    for (const TableRow& row : rows) {
      r.out += delta.label_string(row.t) + "," + opt_str(row.closed.rd, "inf") + "," +
               csv_quote(row.closed.branch) + "," + opt_str(row.oracle.witness, "") + "\n";
    }
  } else if (fmt == "dot") {
    r.out = orbit_quiver_dot(atype);
  } else {
    std::ostringstream out;
    out << "type " << atype.name() << "\n";
    for (const TableRow& row : rows) {
      out << "t=" << delta.label_string(row.t) << " rd=" << opt_str(row.closed.rd, "inf")
          << " branch=" << row.closed.branch << " witness=" << opt_str(row.oracle.witness, "none")
          << "\n";
    }
    r.out = out.str();
  }
  if (!mismatches.empty()) {
    r.exit_code = kExitVerificationFailed;
    r.err = mismatches;
  }
  return r;
}

// verify ---------------------------------------------------------------------

std::vector<AlgebraType> sweep_types(const RunConfig& c) {
  if (c.rank && (c.u || c.n)) return {make_type(c)};
  const DynkinKind kind = parse_kind(c.delta);
  std::vector<AlgebraType> out;
  auto add = [&](int rank, Rational u, int s) {
    try {
      out.push_back(AlgebraType::make(kind, rank, u, s));
    } catch (const std::invalid_argument&) {
      // combination outside the classification; not part of the sweep
    }
  };
  auto ranks = [&](int lo, int default_hi) {
    std::vector<int> rs;
    if (c.rank) {
      rs.push_back(*c.rank);
    } else {
      for (int r = lo; r <= c.rank_max.value_or(default_hi); ++r) rs.push_back(r);
    }
    return rs;
  };
  switch (kind) {
    case DynkinKind::A:
      if (c.s == 1) {
        for (int rank : ranks(1, 9)) {
          for (Int n = 1; n <= c.n_max.value_or(30); ++n) add(rank, Rational::of(n, rank), 1);
        }
      } else {
        for (int rank : ranks(3, 11)) {
          for (Int u = 1; u <= c.u_max.value_or(6); ++u) add(rank, Rational::of(u), c.s);
        }
      }
      break;
    case DynkinKind::D:
      for (int rank : ranks(4, 8)) {
        const Int u_max = c.u_max.value_or(5);
        for (Int u = 1; u <= u_max; ++u) add(rank, Rational::of(u), c.s);
        if (c.s == 1 && rank % 3 == 0) {
          for (Int v = 1; v < 3 * u_max; ++v) {
            if (v % 3 != 0) add(rank, Rational::of(v, 3), 1);
          }
        }
      }
      break;
    case DynkinKind::E:
      for (int rank : ranks(6, 8)) {
        for (Int u = 1; u <= c.u_max.value_or(10); ++u) add(rank, Rational::of(u), c.s);
      }
      break;
  }
  if (out.empty()) throw SpecError("the sweep contains no valid type for " + c.delta);
  return out;
}

struct TypeVerdict {
  std::size_t labels = 0;
  bool certified = false;
  std::vector<std::string> problems;
};

TypeVerdict verify_type(const AlgebraType& atype) {
  TypeVerdict verdict;
  const Dynkin& delta = atype.delta();
  const HammockAtlas atlas(delta);
  for (const TableRow& row : table_rows(atype, atlas)) {
    ++verdict.labels;
    if (row.closed.rd != row.oracle.rd) {
      verdict.problems.push_back(atype.name() + " t=" + delta.label_string(row.t) + ": closed " +
                                 opt_str(row.closed.rd, "inf") + " (" + row.closed.branch +
                                 "), oracle " + opt_str(row.oracle.rd, "inf"));
    }
  }
  if (rigdim_closed(atype)) {
    verdict.certified = true;
    const RigdimVerification rv = rigdim_verify(atype);
    for (const SubCheck& check : rv.checks) {
      if (!check.ok) {
        verdict.problems.push_back(atype.name() + " rigdim: " + check.name + " failed (" +
                                   check.detail + ")");
      }
    }
  }
  return verdict;
}

RunResult cmd_verify(const RunConfig& c) {
  const std::vector<AlgebraType> types = sweep_types(c);
  const std::vector<TypeVerdict> verdicts =
      parallel_map(types.size(), [&](std::size_t i) { return verify_type(types[i]); });
  std::size_t labels = 0;
  std::size_t certificates = 0;
  std::vector<std::string> problems;
  for (const TypeVerdict& v : verdicts) {
    labels += v.labels;
    certificates += v.certified ? 1 : 0;
    problems.insert(problems.end(), v.problems.begin(), v.problems.end());
  }
  const std::string status =
      problems.empty() ? "all agree" : std::to_string(problems.size()) + " disagreements";

  RunResult r;
  const std::string fmt = format_of(c);
  if (fmt == "json") {
    r.out = json{{"types", types.size()},
                 {"labels", labels},
                 {"certificates", certificates},
                 {"disagreements", problems},
                 {"status", status}}
                .dump(2) +
            "\n";
  } else if (fmt == "csv") {
    r.out = "types,labels,certificates,disagreements\n" + std::to_string(types.size()) + "," +
            std::to_string(labels) + "," + std::to_string(certificates) + "," +
            std::to_string(problems.size()) + "\n";
  } else {
    std::ostringstream out;
    for (const std::string& p : problems) out << p << "\n";
    out << "checked " << types.size() << " types, " << labels << " labels, " << certificates
        << " certificates: " << status << "\n";
    r.out = out.str();
  }
  if (!problems.empty()) r.exit_code = kExitVerificationFailed;
  return r;
}

// rigdim ---------------------------------------------------------------------

RunResult cmd_rigdim(const RunConfig& c) {
  const AlgebraType atype = make_type(c);
  const Dynkin& delta = atype.delta();
  const RigdimVerification rv = rigdim_verify(atype);
  RunResult r;
  const std::string fmt = format_of(c);
  if (!rv.closed) {
    Int largest = 0;
    for (Label t : delta.labels()) largest = std::max(largest, rd_closed(atype, t).rd.value_or(0));
    if (fmt == "json") {
      r.out = json{{"type", atype.name()}, {"family", nullptr}, {"max_rd", largest},
                   {"rigdim", nullptr}}
                  .dump(2) +
              "\n";
    } else if (fmt == "csv") {
      r.out = "delta,u,s,n,family,r,rigdim\n" + type_columns(atype) + ",,,\n";
    } else {
      r.out = "type " + atype.name() + "\nno closed-form rigidity dimension\nmax rd " +
              std::to_string(largest) + "\n";
    }
    return r;
  }
  if (fmt == "json") {
    json checks = json::array();
    for (const SubCheck& check : rv.checks) {
      checks.push_back(json{{"name", check.name}, {"ok", check.ok}, {"detail", check.detail}});
    }
    json cert = nullptr;
    if (rv.certificate) {
      json uncovered = json::array();
      json overlapping = json::array();
      for (const Vertex& v : rv.certificate->uncovered) uncovered.push_back(vertex_json(delta, v));
      for (const Vertex& v : rv.certificate->overlapping) {
        overlapping.push_back(vertex_json(delta, v));
      }
      cert = json{{"generator_vertex", vertex_json(delta, rv.certificate->generator_vertex)},
                  {"r", rv.certificate->r},
                  {"is_maximal", rv.certificate->is_maximal},
                  {"stability_ok", rv.certificate->stability_ok},
                  {"uncovered", uncovered},
                  {"overlapping", overlapping}};
    }
    r.out = json{{"type", atype.name()},
                 {"family", rv.closed->family},
                 {"a", rv.closed->a},
                 {"r", rv.r},
                 {"rigdim", rv.rigdim},
                 {"ok", rv.ok()},
                 {"checks", checks},
                 {"certificate", cert}}
                .dump(2) +
            "\n";
  } else if (fmt == "csv") {
    r.out = "delta,u,s,n,family,r,rigdim\n" + type_columns(atype) + "," + rv.closed->family + "," +
            std::to_string(rv.r) + "," + std::to_string(rv.rigdim) + "\n";
  } else {
    std::ostringstream out;
    out << "type " << atype.name() << "\nfamily " << rv.closed->family << " (a=" << rv.closed->a
        << ")\nr " << rv.r << "\nrigdim " << rv.rigdim << "\n";
    for (const SubCheck& check : rv.checks) {
      out << (check.ok ? "ok   " : "FAIL ") << check.name;
      if (!check.detail.empty()) out << ": " << check.detail;
      out << "\n";
    }
    r.out = out.str();
  }
  if (!rv.ok()) {
    r.exit_code = kExitVerificationFailed;
    r.err = "rigidity dimension verification failed for " + atype.name() + "\n";
  }
  return r;
}

// hammock --------------------------------------------------------------------

RunResult cmd_hammock(const RunConfig& c) {
  const Dynkin delta = make_delta(c);
  const Vertex v{c.x, parse_label(delta, c.t)};
  const Hammock h = c.plus ? hammock_plus(delta, v) : hammock_minus(delta, v);
  RunResult r;
  const std::string fmt = format_of(c);
  if (fmt == "dot") {
    r.out = hammock_dot(delta, h);
  } else if (fmt == "json") {
    json members = json::array();
    for (const Hammock::Entry& e : h.entries()) {
      json m = vertex_json(delta, e.vertex);
      m["multiplicity"] = e.multiplicity;
      members.push_back(m);
    }
    r.out = json{{"delta", delta.name()},
                 {"side", c.plus ? "plus" : "minus"},
                 {"base", vertex_json(delta, v)},
                 {"size", h.size()},
                 {"members", members}}
                .dump(2) +
            "\n";
  } else if (fmt == "csv") {
    r.out = "x,t,multiplicity\n";
    for (const Hammock::Entry& e : h.entries()) {
      r.out += std::to_string(e.vertex.x) + "," + delta.label_string(e.vertex.t) + "," +
               std::to_string(e.multiplicity) + "\n";
    }
  } else {
    std::ostringstream out;
    out << (c.plus ? "H+" : "H-") << vertex_string(delta, v) << " on Z" << delta.name() << ", "
        << h.size() << " members\n";
    for (const Hammock::Entry& e : h.entries()) {
      out << vertex_string(delta, e.vertex) << " " << e.multiplicity << "\n";
    }
    r.out = out.str();
  }
  return r;
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult r;
  try {
    if (config.command == "rd") {
      r = cmd_rd(config);
    } else if (config.command == "table") {
      r = cmd_table(config);
    } else if (config.command == "verify") {
      r = cmd_verify(config);
    } else if (config.command == "rigdim") {
      r = cmd_rigdim(config);
    } else if (config.command == "hammock") {
      r = cmd_hammock(config);
    } else {
      return RunResult{kExitInvalidType, "", "unknown command '" + config.command + "'\n"};
    }
  } catch (const SpecError& e) {
    return RunResult{kExitInvalidType, "", std::string("error: ") + e.what() + "\n"};
  }
  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) {
      return RunResult{kExitVerificationFailed, "", "cannot write " + *config.output + "\n"};
    }
    file << r.out;
    r.out.clear();
  }
  return r;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Rigidity degrees and dimensions of representation-finite self-injective algebras"};
  app.require_subcommand(1);
  RunConfig config;

  auto type_options = [&](CLI::App* sub) {
    sub->add_option("--delta", config.delta, "Dynkin type: A, D or E")->required();
    sub->add_option("--rank", config.rank, "rank r of the diagram");
    sub->add_option("--u", config.u, "type parameter as an exact rational, e.g. 17/8");
    sub->add_option("--n", config.n, "raw tau-shift n instead of --u");
    sub->add_option("--s", config.s, "twist order 1, 2 or 3");
    sub->add_option("--format", config.format, "json, csv, dot or text")
        ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    sub->add_flag("--dot", config.dot, "same as --format dot");
    sub->add_option("--output", config.output, "write to this file instead of stdout");
  };
  auto vertex_options = [&](CLI::App* sub) {
    sub->add_option("--t", config.t, "label: 1..r, or m+ / m- on the fork of D");
    sub->add_option("--x", config.x, "slice coordinate x");
  };

  CLI::App* rd = app.add_subcommand("rd", "rigidity degree of one vertex");
  type_options(rd);
  vertex_options(rd);
  rd->add_option("--horizon", config.horizon, "also list SE up to this bound");

  CLI::App* table = app.add_subcommand("table", "rigidity degrees of all labels");
  type_options(table);

  CLI::App* verify = app.add_subcommand("verify", "closed form against oracle over a sweep");
  type_options(verify);
  verify->add_option("--rank-max", config.rank_max, "largest rank in the sweep");
  verify->add_option("--n-max", config.n_max, "largest shift n (type A, s=1)");
  verify->add_option("--u-max", config.u_max, "largest integral u");

  CLI::App* rigdim = app.add_subcommand("rigdim", "rigidity dimension with certificate");
  type_options(rigdim);

  CLI::App* hammock = app.add_subcommand("hammock", "hammock of a vertex of ZΔ");
  type_options(hammock);
  vertex_options(hammock);
  hammock->add_flag("--plus", config.plus, "H+ instead of H-");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  config.command = app.get_subcommands().front()->get_name();

  const RunResult result = run(config);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

}  // namespace rigidity::cli
