// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "generators.hpp"
#include "summa/algledger.hpp"
#include "summa/logdiff.hpp"
#include "summa/ratres.hpp"
#include "summa/reduce.hpp"

using namespace summa;
using namespace summa::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

bool within_bounds(const ZetaExpansion& f, std::size_t max_terms, std::int64_t offset_bound, int max_order) {
  if (f.terms().size() > max_terms) return false;
  for (const auto& [key, c] : f.terms()) {
    if (key.point.offset < -offset_bound || key.point.offset > offset_bound) return false;
    if (key.order > max_order) return false;
  }
  return true;
}

Outcome obstruction_completeness() {
  Outcome o;
  Rng rng(1001);
  ExpansionShape shape;
  shape.max_terms = 40;
  shape.symbolic = 0.2;
  std::vector<ZetaExpansion> inputs;
  for (int i = 0; i < 1000; ++i) {
    inputs.push_back(random_decision_input(rng, shape));
    if (!within_bounds(inputs.back(), 40, 10, 5)) o.fail("generated input " + std::to_string(i) + " out of bounds");
  }
  int summable = 0;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    bool fast = is_summable(inputs[i]).summable;
    bool slow = oracle_summable(inputs[i]).summable;
    summable += fast;
    if (fast != slow) o.fail("disagreement on input " + std::to_string(i));
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 5.0) o.fail("took " + std::to_string(seconds) + " s");
  if (summable == 0 || summable == 1000) o.fail("degenerate sample: " + std::to_string(summable) + " summable");
  if (o.pass) {
    std::ostringstream s;
    s << "1000 inputs, " << summable << " summable, " << seconds << " s";
    o.detail = s.str();
  }
  return o;
}

Outcome round_trip() {
  Outcome o;
  Rng rng(2002);
  ExpansionShape shape;
  shape.symbolic = 0.2;
  for (int i = 0; i < 500; ++i) {
    ZetaExpansion f = telescoped(random_expansion(rng, shape));
    SummabilityVerdict v = is_summable(f);
    if (!v.summable || !v.witness) {
      o.fail("witness " + std::to_string(i) + " rejected");
    } else if (v.witness->tau(1) - *v.witness != f) {
      o.fail("witness " + std::to_string(i) + " does not telescope");
    }
  }
  return o;
}

Outcome zeta_difference() {
  Outcome o;
  TermTable t;
  accumulate(t, TermKey{OrbitPoint{OrbitId::hat(), -1}, 1}, SymScalar(1));
  accumulate(t, TermKey{OrbitPoint{OrbitId::hat(), 0}, 1}, SymScalar(-1));
  ZetaExpansion f = ZetaExpansion::make(SymScalar(), t);
  if (!f.ores_table().empty()) o.fail("nonzero orbital residue");
  if (f.pano1() != SymScalar(-1)) o.fail("pano1 = " + f.pano1().str());
  if (is_summable(f).summable) o.fail("difference reported summable");
  SummabilityVerdict d = is_summable(f.derive());
  if (!d.summable || !d.witness) {
    o.fail("derivative not summable");
  } else if ((*d.witness + ZetaExpansion::wp()).has_poles()) {
    o.fail("witness is not -wp up to a constant");
  } else if (d.witness->tau(1) - *d.witness != f.derive()) {
    o.fail("witness does not telescope");
  }
  return o;
}

Outcome reduction_invariance() {
  Outcome o;
  Rng rng(4004);
  ExpansionShape shape;
  shape.symbolic = 0.3;
  for (int i = 0; i < 500; ++i) {
    ZetaExpansion f = random_expansion(rng, shape);
    ReductionReport r = reduce(f);
    const ZetaExpansion& c = r.canonical;
    if (c.ores_table() != f.ores_table()) o.fail("ores changed on input " + std::to_string(i));
    if (c.pano0() != f.pano0() || c.pano1() != f.pano1()) o.fail("pano changed on input " + std::to_string(i));
    if (f - (r.witness.tau(1) - r.witness) != c) o.fail("identity broken on input " + std::to_string(i));
  }
  return o;
}

Outcome repinning() {
  Outcome o;
  Rng rng(5005);
  ExpansionShape shape;
  int moved = 0;
  for (int i = 0; i < 200; ++i) {
    ZetaExpansion f = random_expansion(rng, shape);
    RepinDelta delta{random_orbit(rng, false), uniform(rng, -4, 4), uniform(rng, -3, 3), uniform(rng, -3, 3)};
    Rat r = *f.ores(delta.orbit, 1).as_rational();
    moved += !r.is_zero();
    SymScalar eta = SymScalar::symbol("eta1", Rat(delta.b1) * r) + SymScalar::symbol("eta2", Rat(delta.b2) * r);
    SymScalar want0 = f.pano0() + eta;
    SymScalar want1 = f.pano1() - Rat(delta.k) * SymScalar(r);
    PanorbitalPair got = repin(f.ores_table(), f.pano0(), f.pano1(), delta);
    if (got.pano0 - f.pano0() != eta) o.fail("pano0 delta wrong on input " + std::to_string(i));
    if (got.pano1 - f.pano1() != -Rat(delta.k) * SymScalar(r)) o.fail("pano1 delta wrong on input " + std::to_string(i));
    ZetaExpansion g = repin_expansion(f, delta);
    if (g.pano0() != want0 || g.pano1() != want1) o.fail("re-expanded function disagrees on input " + std::to_string(i));
  }
  if (moved < 50) o.fail("only " + std::to_string(moved) + " inputs with nonzero residue");
  return o;
}

Outcome order_reduction() {
  Outcome o;
  Rng rng(6006);
  for (int i = 0; i < 100; ++i) {
    DivisorData d = random_divisor(rng);
    for (int r = 0; r <= 5; ++r)
      if (!order_reduction_check(d, r)) o.fail("divisor " + std::to_string(i) + ", r = " + std::to_string(r));
  }
  return o;
}

Outcome rational_criteria() {
  Outcome o;
  Rng rng(7007);
  for (int i = 0; i < 500; ++i) {
    RatPF g = random_shift_function(rng);
    RatPF f = tau_shift(g) - g;
    if (!dres_table(f).empty()) o.fail("shift: nonzero dres on input " + std::to_string(i));
    if (!shift_summable(f).summable) o.fail("shift: input " + std::to_string(i) + " rejected");
  }
  const Rat qs[] = {Rat(2), Rat(mpz_class(3), mpz_class(2)), Rat(mpz_class(-5), mpz_class(3))};
  for (const Rat& q : qs) {
    QContext ctx(q);
    for (int i = 0; i < 500; ++i) {
      RatPF g = random_q_function(rng);
      RatPF f = tau_q(g, ctx) - g;
      if (!qres_table(f, ctx).empty() || !qres_inf(f).is_zero())
        o.fail("q = " + q.str() + ": nonzero residue on input " + std::to_string(i));
      if (!q_summable(f, ctx).summable) o.fail("q = " + q.str() + ": input " + std::to_string(i) + " rejected");
    }
    for (int i = 0; i < 20; ++i) {
      Rat c = random_nonzero_rat(rng);
      RatPF f = RatPF::make(RatMode::Q, LaurentPart{{0, c}}, {});
      if (qres_inf(f) != c || q_summable(f, ctx).summable) o.fail("q = " + q.str() + ": constant accepted");
    }
  }
  return o;
}

Outcome ledger() {
  Outcome o;
  Rng rng(8008);
  int nonzero = 0;
  for (int i = 0; i < 200; ++i) {
    ResidueTable t = random_admissible_table(rng);
    LedgerReport r = ledger_reduce(t);
    for (const auto& [key, c] : r.fbar)
      if (key.point.orbit.is_hat() && key.point.offset >= 2) o.fail("fbar has a pole ahead on table " + std::to_string(i));
    SymScalar want;
    for (const auto& [key, c] : t)
      want += SymScalar::symbol("d_" + std::to_string(key.order) + "_" + key.point.orbit.label(),
                                c * Rat(key.point.offset));
    if (r.pano1 != want) o.fail("pano1 mismatch on table " + std::to_string(i) + ": " + r.pano1.str());
    nonzero += !want.is_zero();
  }
  if (nonzero < 100) o.fail("only " + std::to_string(nonzero) + " tables with nonzero pano1");
  return o;
}

std::vector<std::vector<mpz_class>> columns(const ResidueMatrix& m) {
  std::vector<std::vector<mpz_class>> out(m.cols, std::vector<mpz_class>(m.rows.size()));
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out[c][r] = mpz_class(static_cast<long>(m.rows[r][c]));
  return out;
}

// d scaled by a, with every point moved along its orbit; orbit sums are unchanged.
std::map<OrbitPoint, std::int64_t> scaled_and_moved(Rng& rng, const DivisorData& d, std::int64_t a) {
  std::map<OrbitPoint, std::int64_t> out;
  for (const auto& [p, m] : d.entries()) out[OrbitPoint{p.orbit, p.offset + uniform(rng, -3, 3)}] += a * m;
  return out;
}

Outcome differential_dependence() {
  Outcome o;
  Rng rng(9009);
  for (int i = 0; i < 100; ++i) {
    DivisorData d1 = random_divisor(rng);
    DivisorData d2 = random_divisor(rng);
    std::int64_t a = uniform(rng, -4, 4);
    std::int64_t b = uniform(rng, -4, 4);
    std::map<OrbitPoint, std::int64_t> e3 = scaled_and_moved(rng, d1, a);
    for (const auto& [p, m] : scaled_and_moved(rng, d2, b)) e3[p] += m;
    std::vector<DivisorData> triple{d1, d2, DivisorData(e3)};
    auto ell = diffdep(triple);
    if (!ell) {
      o.fail("triple " + std::to_string(i) + " reported independent");
      continue;
    }
    mpz_class g = 0;
    bool nonzero = false;
    for (const auto& x : *ell) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      nonzero = nonzero || x != 0;
    }
    if (!nonzero || g != 1) o.fail("triple " + std::to_string(i) + ": ell not primitive");
    auto cols = columns(residue_matrix(triple));
    for (std::size_t r = 0; r < cols[0].size(); ++r) {
      mpz_class s = 0;
      for (std::size_t c = 0; c < 3; ++c) s += (*ell)[c] * cols[c][r];
      if (s != 0) o.fail("triple " + std::to_string(i) + ": relation fails on row " + std::to_string(r));
    }
    if (!combination_summable(triple, *ell).summable) o.fail("triple " + std::to_string(i) + ": combination not summable");
  }
  int pairs = 0;
  for (int i = 0; pairs < 100; ++i) {
    std::vector<DivisorData> pair{random_divisor(rng), random_divisor(rng)};
    auto cols = columns(residue_matrix(pair));
    // Independent exactly when some 2x2 minor is nonzero.
    bool independent = false;
    for (std::size_t r = 0; r < cols[0].size(); ++r)
      for (std::size_t s = r + 1; s < cols[0].size(); ++s)
        independent = independent || cols[0][r] * cols[1][s] != cols[0][s] * cols[1][r];
    if (!independent) continue;
    ++pairs;
    if (diffdep(pair)) o.fail("independent pair " + std::to_string(i) + " yielded a relation");
  }
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run_cli(const std::string& args, const std::filesystem::path& scratch) {
  std::string cmd = "cd '" SUMMA_GOLDEN_DIR "' && '" SUMMA_CLI_PATH "' " + args + " > '" + (scratch / "out").string() +
                    "' 2> '" + (scratch / "err").string() + "'";
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(scratch / "out");
  r.err = slurp(scratch / "err");
  return r;
}

Outcome determinism() {
  Outcome o;
  std::filesystem::path golden(SUMMA_GOLDEN_DIR);
  std::filesystem::path scratch = std::filesystem::temp_directory_path() / ("summa_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(scratch);
  std::ifstream cases(golden / "cases");
  std::string line;
  int count = 0;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string part; std::getline(ss, part, '|');) f.push_back(part);
    if (f.size() != 5) {
      o.fail("malformed case line: " + line);
      continue;
    }
    std::string args = f[1] + " " + f[2] + " " + f[3];
    Run first = run_cli(args, scratch);
    Run second = run_cli(args, scratch);
    ++count;
    if (first.code != second.code || first.out != second.out || first.err != second.err)
      o.fail(f[0] + ": runs differ");
    if (first.code != std::stoi(f[4])) o.fail(f[0] + ": exit " + std::to_string(first.code));
    if (first.out != slurp(golden / (f[0] + ".out"))) o.fail(f[0] + ": stdout differs from golden file");
    if (std::filesystem::exists(golden / (f[0] + ".err")) && first.err != slurp(golden / (f[0] + ".err")))
      o.fail(f[0] + ": stderr differs from golden file");
  }
  std::filesystem::remove_all(scratch);
  if (count == 0) o.fail("no golden cases");
  if (o.pass) o.detail = std::to_string(count) + " cases";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"obstruction completeness", obstruction_completeness},
      {"round-trip certificate", round_trip},
      {"zeta shift difference", zeta_difference},
      {"reduction invariance", reduction_invariance},
      {"re-pinning deltas", repinning},
      {"order reduction", order_reduction},
      {"rational shift and q criteria", rational_criteria},
      {"residue ledger", ledger},
      {"differential dependence", differential_dependence},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
