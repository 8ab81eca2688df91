#include "summa/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "summa/errors.hpp"

namespace summa::cli {

namespace {

[[noreturn]] void wrong_kind(const Options& opts, const Problem& problem) {
  throw SchemaError("command '" + opts.command + "' does not accept kind \"" + kind_name(problem.kind) + "\"");
}

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json residue_groups(const std::map<PoleKey, Rat>& groups) {
  Json out = Json::array();
  for (const auto& [key, value] : groups) {
    out.push_back(Json{{"orbit", encode(key.pole)}, {"j", key.order}, {"value", encode(value)}});
  }
  return out;
}

// Every (orbit, order) group that carries a pole, including those whose
// residue cancels.
std::map<PoleKey, Rat> all_groups(const RationalProblem& p) {
  std::map<PoleKey, Rat> out;
  for (const auto& [key, c] : p.f.principal()) {
    if (p.ctx) {
      PoleKey group{q_orbit_position(key.pole, *p.ctx).representative, key.order};
      if (!out.contains(group)) out[group] = qres(p.f, *p.ctx, group.pole, group.order);
    } else {
      PoleKey group{key.pole - Rat(floor(key.pole)), key.order};
      if (!out.contains(group)) out[group] = dres(p.f, group.pole, group.order);
    }
  }
  return out;
}

Json matrix_json(const ResidueMatrix& m) {
  Json orbits = Json::array();
  for (const auto& o : m.orbits) orbits.push_back(o.label());
  return Json{{"orbits", orbits}, {"matrix", m.rows}};
}

OresTable ledger_ores(const ResidueTable& t) {
  OresTable out;
  for (const auto& [key, res] : t) {
    OresKey k{key.point.orbit, key.order};
    out[k] += SymScalar(res);
    if (out[k].is_zero()) out.erase(k);
  }
  return out;
}

// Sample points away from every pole, for evaluation cross-checks.
std::vector<Rat> sample_points(const RatPF& f, std::size_t count) {
  std::set<Rat> avoid;
  for (const auto& [key, c] : f.principal()) {
    for (int d = -2; d <= 2; ++d) avoid.insert(key.pole + Rat(d));
  }
  std::vector<Rat> out;
  for (long num = 1; out.size() < count; ++num) {
    Rat x(mpz_class(num * 7 + 1), mpz_class(13));
    if (!avoid.contains(x) && !avoid.contains(x + Rat(1)) && !x.is_zero()) out.push_back(x);
  }
  return out;
}

Json residues(const Options& opts, const Problem& problem) {
  switch (problem.kind) {
    case ProblemKind::Elliptic: {
      const auto& f = std::get<ZetaExpansion>(problem.payload);
      return Json{{"ores", encode(f.ores_table())},
                  {"pano0", encode(f.pano0())},
                  {"pano1", encode(f.pano1())},
                  {"pdisp", optional_int(f.pdisp())},
                  {"wpdisp", optional_int(f.wpdisp())}};
    }
    case ProblemKind::RationalShift: {
      const auto& p = std::get<RationalProblem>(problem.payload);
      return Json{{"dres", residue_groups(all_groups(p))}};
    }
    case ProblemKind::RationalQ: {
      const auto& p = std::get<RationalProblem>(problem.payload);
      return Json{{"q", encode(p.ctx->q())}, {"qres", residue_groups(all_groups(p))}, {"qres_inf", encode(qres_inf(p.f))}};
    }
    case ProblemKind::Divisors: {
      const auto& divisors = std::get<std::vector<DivisorData>>(problem.payload);
      Json out = matrix_json(residue_matrix(divisors));
      Json functions = Json::array();
      for (std::size_t i = 0; i < divisors.size(); ++i) {
        ZetaExpansion f = logderiv(divisors[i], std::to_string(i));
        functions.push_back(Json{{"ores", encode(f.ores_table())}, {"pano0", encode(f.pano0())}, {"pano1", encode(f.pano1())}});
      }
      out["functions"] = std::move(functions);
      return out;
    }
    case ProblemKind::Ledger: {
      const auto& t = std::get<ResidueTable>(problem.payload);
      LedgerReport report = ledger_reduce(t);
      return Json{{"ores", encode(ledger_ores(t))}, {"pano0", encode(report.pano0)}, {"pano1", encode(report.pano1)}};
    }
  }
  wrong_kind(opts, problem);
}

Json summable(const Options& opts, const Problem& problem) {
  Json out;
  switch (problem.kind) {
    case ProblemKind::Elliptic: {
      const auto& f = std::get<ZetaExpansion>(problem.payload);
      SummabilityVerdict v = is_summable(f);
      out["summable"] = v.summable;
      if (opts.certify && v.witness) {
        out["witness"] = encode(*v.witness);
        out["certified"] = v.witness->tau(1) - *v.witness == f;
      }
      if (opts.oracle) out["oracle_agrees"] = oracle_summable(f).summable == v.summable;
      return out;
    }
    case ProblemKind::RationalShift:
    case ProblemKind::RationalQ: {
      const auto& p = std::get<RationalProblem>(problem.payload);
      RatVerdict v = p.ctx ? q_summable(p.f, *p.ctx) : shift_summable(p.f);
      out["summable"] = v.summable;
      if (opts.certify && v.witness) {
        const RatPF& w = *v.witness;
        out["witness"] = encode(w, p.ctx);
        out["certified"] = (p.ctx ? tau_q(w, *p.ctx) : tau_shift(w)) - w == p.f;
      }
      if (opts.oracle) {
        // Residue criterion on one side; pointwise evaluation of the witness on the other.
        bool criterion = p.ctx ? qres_table(p.f, *p.ctx).empty() && qres_inf(p.f).is_zero() : dres_table(p.f).empty();
        bool agrees = criterion == v.summable;
        if (agrees && v.witness) {
          const RatPF& w = *v.witness;
          for (const Rat& x : sample_points(p.f, 5)) {
            Rat y = p.ctx ? p.ctx->q() * x : x + Rat(1);
            try {
              if (w.evaluate(y) - w.evaluate(x) != p.f.evaluate(x)) agrees = false;
            } catch (const std::domain_error&) {
              // a witness pole at a sample point says nothing either way
            }
          }
        }
        out["oracle_agrees"] = agrees;
      }
      return out;
    }
    case ProblemKind::Divisors: {
      const auto& divisors = std::get<std::vector<DivisorData>>(problem.payload);
      auto ell = diffdep(divisors);
      out["ell"] = ell ? encode(*ell) : Json(nullptr);
      out["summable"] = ell ? combination_summable(divisors, *ell).summable : false;
      return out;
    }
    case ProblemKind::Ledger: {
      LedgerReport report = ledger_reduce(std::get<ResidueTable>(problem.payload));
      bool zero = report.pano0.is_zero() && report.pano1.is_zero();
      for (const auto& [key, c] : report.fbar) zero = zero && c.is_zero();
      out["summable"] = zero;
      return out;
    }
  }
  wrong_kind(opts, problem);
}

Json reduce_cmd(const Options& opts, const Problem& problem) {
  if (problem.kind != ProblemKind::Elliptic) wrong_kind(opts, problem);
  const auto& f = std::get<ZetaExpansion>(problem.payload);
  ReductionReport r = reduce(f);
  Json out{{"canonical", encode(r.canonical)},
           {"witness", encode(r.witness)},
           {"summable", r.summable},
           {"ores", encode(r.ores)},
           {"pano0", encode(r.pano0)},
           {"pano1", encode(r.pano1)}};
  if (opts.certify) out["certified"] = f - (r.witness.tau(1) - r.witness) == r.canonical;
  if (opts.oracle) out["oracle_agrees"] = oracle_summable(f).summable == r.summable;
  return out;
}

Json diffdep_cmd(const Options& opts, const Problem& problem) {
  if (problem.kind != ProblemKind::Divisors) wrong_kind(opts, problem);
  const auto& divisors = std::get<std::vector<DivisorData>>(problem.payload);
  auto ell = diffdep(divisors);
  Json out = matrix_json(residue_matrix(divisors));
  out["ell"] = ell ? encode(*ell) : Json(nullptr);
  out["combination_summable"] = ell ? Json(combination_summable(divisors, *ell).summable) : Json(nullptr);
  return out;
}

Json ledger_cmd(const Options& opts, const Problem& problem) {
  if (problem.kind != ProblemKind::Ledger) wrong_kind(opts, problem);
  LedgerReport r = ledger_reduce(std::get<ResidueTable>(problem.payload));
  return Json{{"ftilde", encode(r.ftilde)}, {"fbar", encode(r.fbar)}, {"pano1", encode(r.pano1)}, {"pano0", encode(r.pano0)}};
}

void flatten(const Json& node, const std::string& path, std::string& out) {
  if (node.is_object() && !node.empty()) {
    for (auto it = node.begin(); it != node.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    return;
  }
  if (node.is_array() && !node.empty()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  out += path.empty() ? std::string(".") : path;
  out += " = ";
  out += node.is_string() ? node.get<std::string>() : node.dump();
  out += "\n";
}

std::size_t max_terms_from_env() {
  const char* raw = std::getenv("SUMMA_MAX_TERMS");
  if (raw == nullptr || *raw == '\0') return 10000;
  std::string text(raw);
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) || text.size() > 12) {
    throw SchemaError("SUMMA_MAX_TERMS must be a non-negative integer, got \"" + text + "\"");
  }
  return static_cast<std::size_t>(std::stoull(text));
}

bool read_source(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

}  // namespace

Json run_command(const Options& opts, const Problem& problem) {
  if (opts.command == "residues") return residues(opts, problem);
  if (opts.command == "summable") return summable(opts, problem);
  if (opts.command == "reduce") return reduce_cmd(opts, problem);
  if (opts.command == "diffdep") return diffdep_cmd(opts, problem);
  if (opts.command == "ledger") return ledger_cmd(opts, problem);
  throw std::invalid_argument("unknown command '" + opts.command + "'");
}

std::string flatten_text(const Json& doc) {
  std::string out;
  flatten(doc, "", out);
  return out;
}

FileResult process_text(const Options& opts, const std::string& text, const std::string& source) {
  FileResult result;
  try {
    Problem problem = parse_problem(text, source, opts.max_terms);
    Json report = run_command(opts, problem);
    result.out = opts.format == Format::Json ? report.dump(2) + "\n" : flatten_text(report);
  } catch (const Error& e) {
    result.exit_code = e.kind() == ErrorKind::Precondition ? kExitPrecondition : kExitInput;
    const char* label = e.kind() == ErrorKind::Parse ? "parse error" : e.kind() == ErrorKind::Schema ? "schema error" : "precondition violated";
    std::string message = e.what();
    // Schema and parse messages already start with the source location.
    if (message.rfind(source, 0) != 0) message = source + ": " + message;
    result.err = "summa: " + std::string(label) + ": " + message + "\n";
  } catch (const std::exception& e) {
    result.exit_code = kExitInternal;
    result.err = "summa: internal error: " + source + ": " + e.what() + "\n";
  }
  return result;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Options opts;
  std::string format = "json";
  CLI::App app{"Exact residue-based summability decisions for elliptic and rational functions", "summa"};
  app.require_subcommand(1);

  struct Subcommand {
    const char* name;
    const char* help;
  };
  const Subcommand subcommands[] = {
      {"residues", "orbital and panorbital residues (discrete residues for rational kinds)"},
      {"summable", "decide summability; --certify adds a verified witness"},
      {"reduce", "reduce an elliptic function to its canonical remainder"},
      {"diffdep", "integer relation among logarithmic derivatives of divisors"},
      {"ledger", "formal residue ledger of the algebraic reduction"},
  };
  for (const Subcommand& entry : subcommands) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    sub->add_option("files", opts.files, "problem files ('-' for stdin)")->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--certify", opts.certify, "include and verify the witness");
    sub->add_flag("--oracle", opts.oracle, "cross-check against an independent decision procedure");
    sub->callback([&opts, name = entry.name] { opts.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  opts.format = format == "text" ? Format::Text : Format::Json;

  try {
    opts.max_terms = max_terms_from_env();
  } catch (const SchemaError& e) {
    err << "summa: schema error: " << e.what() << "\n";
    return kExitInput;
  }

  std::vector<std::future<FileResult>> jobs;
  for (const std::string& path : opts.files) {
    std::string text;
    if (!read_source(path, text)) {
      std::promise<FileResult> failed;
      failed.set_value(FileResult{kExitInput, "", "summa: parse error: " + path + ": cannot read file\n"});
      jobs.push_back(failed.get_future());
      continue;
    }
    jobs.push_back(std::async(std::launch::async, [&opts, text = std::move(text), path] {
      return process_text(opts, text, path);
    }));
  }

  int exit_code = kExitOk;
  bool first = true;
  for (auto& job : jobs) {
    FileResult r = job.get();
    if (!r.out.empty()) {
      if (!first && opts.format == Format::Text) out << "\n";
      out << r.out;
      first = false;
    }
    err << r.err;
    exit_code = std::max(exit_code, r.exit_code);
  }
  return exit_code;
}

}  // namespace summa::cli
