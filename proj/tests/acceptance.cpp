// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerance is exact equality throughout.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "json.hpp"
#include "smod/homology.hpp"
#include "smod/linalg.hpp"
#include "smod/specialize.hpp"
#include "smod/verify.hpp"

using namespace smod;
using namespace smod::testing;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

const fs::path kCorpus = SMOD_CORPUS;

const json& manifest() {
  static const json m = [] {
    std::ifstream f(kCorpus / "manifest.json");
    return json::parse(f);
  }();
  return m;
}

Report run_entry(const json& e, bool timing = false) {
  Inputs in;
  in.ring = load_ring((kCorpus / e.at("ring").get<std::string>()).string());
  VerifyTask t;
  t.theorem = e.at("theorem");
  for (const auto& f : e.at("inputs")) {
    t.inputs.push_back((kCorpus / f.get<std::string>()).string());
    load_object(in, t.inputs.back());
  }
  t.trials = e.value("trials", 1);
  t.seed = e.value("seed", 0);
  t.timing = timing;
  if (e.contains("alpha")) t.forced = SubstPoint::parse(e.at("alpha").get<std::string>());
  return run_verification(t, in);
}

// Runs every manifest entry of the given theorems; each needs >= min_trials
// passing trials and no failures.
std::size_t run_theorems(Criterion& c, const std::vector<std::string>& ids, std::size_t min_trials,
                         long max_ms = -1, long max_trial_ms = -1) {
  std::size_t entries = 0;
  for (const auto& e : manifest().at("entries")) {
    if (std::find(ids.begin(), ids.end(), e.at("theorem").get<std::string>()) == ids.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Report r;
    try {
      r = run_entry(e, max_trial_ms > 0);
    } catch (const std::exception& ex) {
      c.check(false, e.at("name").get<std::string>() + ": " + ex.what());
      continue;
    }
    const long ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                          std::chrono::steady_clock::now() - start)
                                          .count());
    ++entries;
    const std::string name = e.at("name");
    c.check(r.failed == 0 && r.passed >= min_trials,
            name + ": " + std::to_string(r.passed) + " passed, " + std::to_string(r.failed) + " failed");
    for (const auto& t : r.trials) {
      if (!t.pass) c.check(false, name + " trial " + std::to_string(t.index) + ": " + t.detail);
      if (max_trial_ms > 0) c.check(t.ms < max_trial_ms, name + " trial too slow");
    }
    if (max_ms > 0) c.check(ms < max_ms, name + " took " + std::to_string(ms) + " ms");
  }
  return entries;
}

std::size_t count_entries(const std::string& theorem) {
  std::size_t n = 0;
  for (const auto& e : manifest().at("entries")) n += e.at("theorem") == theorem;
  return n;
}

// Criterion 1: exact parametric Koszul complexes stay exact.
Criterion exactness() {
  Criterion c;
  std::size_t exact = 0;
  for (const auto& e : manifest().at("entries")) {
    if (e.at("theorem") != "exactness_1_5") continue;
    Inputs in;
    in.ring = load_ring((kCorpus / e.at("ring").get<std::string>()).string());
    load_object(in, (kCorpus / e.at("inputs")[0].get<std::string>()).string());
    exact += be_exactness(in.complexes.begin()->second).overall;
  }
  c.check(exact >= 5, "only " + std::to_string(exact) + " exact complexes in the corpus");
  run_theorems(c, {"exactness_1_5"}, 25, 5000);
  return c;
}

Poly<RatFun> random_entry(std::mt19937_64& rng, const RingPtr& r) {
  static const char* mons[] = {"1", "x1", "x2", "x1^2", "x1*x2", "x2^2"};
  static const char* coefs[] = {"1", "-1", "2", "u1", "-u1", "u1^2", "(u1+1)", "1/(u1-2)", "3*u1 - 1"};
  std::uniform_int_distribution<int> terms(0, 2), mon(0, 5), coef(0, 8);
  std::string s;
  const int k = terms(rng);
  if (k == 0) return Poly<RatFun>(r);
  for (int t = 0; t < k; ++t) s += std::string(t ? " + " : "") + "(" + coefs[coef(rng)] + ")*" + mons[mon(rng)];
  return parse_poly<RatFun>(s, r);
}

// Criterion 2: rank and determinantal ideal of random parametric matrices.
Criterion rank_and_minors() {
  Criterion c;
  const RingPtr r = uring({"u1"}, {"x1", "x2"});
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 3);
  std::size_t deficient = 0;
  for (int k = 0; k < 12; ++k) {
    Matrix<RatFun> a(r, static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = random_entry(rng, r);
    }
    if (k % 3 == 2 && a.rows() > 1) {
      // Forces a rank drop: last row is a parametric multiple of the first.
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a.at(a.rows() - 1, j) = a.at(0, j) * parse_poly<RatFun>("u1 + 1", r);
      }
    }
    Certificate cert;
    note_denominators(a, &cert);
    const std::size_t rk = rank_matrix(a, &cert);
    deficient += rk < std::min(a.rows(), a.cols());
    const ReducedGB<RatFun> det = determinantal_ideal(a, rk, &cert);
    for (const auto& g : det.polys()) note_denominators(g, &cert);
    for (std::uint64_t t = 0; t < 25; ++t) {
      const SubstPoint alpha = sample_alpha(77, cert, 7, 1, 100 * k + t);
      const Matrix<Rational> aa = subst(a, alpha);
      const std::size_t rq = rank_matrix(aa);
      const std::string where = "matrix " + std::to_string(k) + " alpha " + alpha.to_strings()[0];
      c.check(rq == rk, where + ": rank " + std::to_string(rk) + " vs " + std::to_string(rq));
      c.check(specialize_gb(det, alpha) == determinantal_ideal(aa, rk), where + ": determinantal ideal");
    }
  }
  c.check(deficient > 0, "no rank-deficient matrix was generated");
  return c;
}

Criterion maps() {
  Criterion c;
  c.check(count_entries("kic_2_5") >= 5 && count_entries("ses_2_4") >= 5, "fewer than 5 maps");
  run_theorems(c, {"ses_2_4", "kic_2_5"}, 25);
  return c;
}

Criterion anndim() {
  Criterion c;
  c.check(count_entries("anndim_3_4") >= 8, "fewer than 8 modules");
  run_theorems(c, {"anndim_3_4"}, 25);
  for (const auto& e : manifest().at("negative")) {
    const Report r = run_entry(e);
    c.check(r.failed == r.trials.size(), "negative control passed at an uncertified point");
    const auto& t = r.trials.at(0);
    c.check(t.detail.find("dim 1 vs 2 MISMATCH") != std::string::npos, "negative control: " + t.detail);
    c.check(t.vanishing == std::vector<std::string>{e.at("vanishing").get<std::string>()},
            "negative control did not name the excluding factor");
  }
  return c;
}

Criterion projdim_grade_perfect() {
  Criterion c;
  run_theorems(c, {"projdim_2_6", "grade_4_4", "perfect_4_5"}, 10);
  return c;
}

Criterion tor_ext() {
  Criterion c;
  c.check(count_entries("tor_4_2") >= 5 && count_entries("ext_4_3") >= 5, "fewer than 5 pairs");
  run_theorems(c, {"tor_4_2", "ext_4_3"}, 10, -1, 60000);
  return c;
}

Criterion section_ops() {
  Criterion c;
  run_theorems(c, {"dsum_3_1", "subops_3_2", "colon_3_6", "gens_3_3"}, 25);
  return c;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

FPModule<Rational> power(const FPModule<Rational>& l, long k) {
  FPModule<Rational> out = FPModule<Rational>::free(l.ring, 0);
  for (long i = 0; i < k; ++i) out = direct_sum(out, l);
  return out;
}

// Criterion 8: complete intersections against closed forms, and basis
// canonicality under shuffled, rescaled and redundant generators.
Criterion oracles() {
  Criterion c;
  const RingPtr q = qring({"x1", "x2"});
  const std::vector<std::vector<const char*>> cis = {
      {"x1"}, {"x1^2 - x2"}, {"x1", "x2"}, {"x1*x2 - 1", "x1 + x2"}, {"x1^2", "x2^3"}, {"x1 - 3", "x2^2 + x1"}};
  for (const auto& gens : cis) {
    const std::vector<Poly<Rational>> f = [&] {
      std::vector<Poly<Rational>> out;
      for (const char* g : gens) out.push_back(parse_poly<Rational>(g, q));
      return out;
    }();
    const long cc = static_cast<long>(f.size());
    std::string name = "(";
    for (const char* g : gens) name += std::string(name.size() > 1 ? ", " : "") + g;
    name += ")";
    Matrix<Rational> row(q, 1, 0);
    for (const auto& g : f) row = row.hconcat(Matrix<Rational>::from_rows(q, {{g}}, 1));
    const FPModule<Rational> ri = FPModule<Rational>::present(row);
    const FPModule<Rational> r = FPModule<Rational>::free(q, 1);
    FreeComplex<Rational> explicit_kz{q, {1, static_cast<std::size_t>(cc)}, {row}};
    if (cc == 2) {
      explicit_kz.ranks.push_back(1);
      explicit_kz.maps.push_back(Matrix<Rational>::from_rows(q, {{-f[1]}, {f[0]}}, 1));
    }
    c.check(be_exactness(explicit_kz).overall, name + ": Koszul complex not exact");
    FreeComplex<Rational> kz = free_resolution(ri, 4);
    c.check(be_exactness(kz).overall, name + ": resolution not exact");
    c.check(static_cast<long>(kz.length()) == cc, name + ": resolution length");
    c.check(proj_dim(ri) == cc, name + ": proj.dim");
    c.check(grade_on(f, r) == cc, name + ": grade on R");
    c.check(is_perfect(ri), name + ": not perfect");
    for (long i = 0; i <= 2; ++i) {
      const auto fi = fingerprint(tor(ri, r, i));
      c.check(fi == fingerprint(i == 0 ? ri : power(ri, 0)), name + ": Tor_" + std::to_string(i) + "(R/I, R)");
      c.check(fingerprint(ext(ri, r, i)) == fingerprint(power(ri, i == cc ? 1 : 0)),
              name + ": Ext^" + std::to_string(i) + "(R/I, R)");
      c.check(fingerprint(tor(ri, ri, i)) == fingerprint(power(ri, binom(cc, i))),
              name + ": Tor_" + std::to_string(i) + "(R/I, R/I)");
      c.check(fingerprint(ext(ri, ri, i)) == fingerprint(power(ri, binom(cc, i))),
              name + ": Ext^" + std::to_string(i) + "(R/I, R/I)");
    }
  }

  const RingPtr q3 = qring({"x1", "x2", "x3"});
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2), count(2, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Poly<Rational>> gens;
    const int s = count(rng);
    for (int k = 0; k < s; ++k) {
      Poly<Rational> g(q3);
      for (int t = 0; t < 3; ++t) {
        Monomial m{};
        for (std::size_t v = 0; v < 3; ++v) m.e[v] = static_cast<std::uint16_t>(expo(rng));
        g += Poly<Rational>::monomial(q3, m, Rational(coef(rng)));
      }
      if (!g.is_zero()) gens.push_back(g);
    }
    const ReducedGB<Rational> base = ideal_gb<Rational>(q3, gens);
    std::vector<Poly<Rational>> other = gens;
    std::shuffle(other.begin(), other.end(), rng);
    for (auto& g : other) {
      Rational scale(coef(rng));
      if (scale == 0) scale = Rational(1, 2);
      g = g.scaled(scale);
    }
    if (other.size() > 1) other.push_back(other[0] * other[1] + other[1]);
    c.check(ideal_gb<Rational>(q3, other) == base, "shuffle " + std::to_string(trial) + ": basis differs");
  }
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Criterion determinism() {
  Criterion c;
  const fs::path dir = fs::temp_directory_path() / "smod_acceptance";
  fs::create_directories(dir);
  const std::string base = std::string(SMOD_BIN) + " verify --theorem tor_4_2 --trials 25 --seed 7 --inputs " +
                           (kCorpus / "modules/m1.mod").string() + "," + (kCorpus / "modules/m3.mod").string() +
                           " --out ";
  const fs::path a = dir / "a.json";
  const fs::path b = dir / "b.json";
  const int ra = std::system((base + a.string() + " > /dev/null").c_str());
  const int rb = std::system((base + b.string() + " --threads 1 > /dev/null").c_str());
  c.check(ra == 0 && rb == 0, "smod verify did not exit 0");
  const std::string ja = slurp(a);
  c.check(!ja.empty() && ja == slurp(b), "reports differ");
  return c;
}

}  // namespace

int main() {
  struct Row {
    int id;
    const char* what;
    Criterion (*run)();
  };
  const std::vector<Row> rows = {
      {1, "exactness of parametric Koszul complexes", exactness},
      {2, "rank and determinantal ideals of random matrices", rank_and_minors},
      {3, "short exact sequences and Ker/Im/Coker", maps},
      {4, "dim and Ann, with negative control", anndim},
      {5, "proj.dim, grade, perfection", projdim_grade_perfect},
      {6, "Tor and Ext", tor_ext},
      {7, "direct sum, submodule operations, colon, products, generators", section_ops},
      {8, "complete-intersection oracles and basis canonicality", oracles},
      {9, "byte-identical reports for a fixed seed", determinism},
  };
  bool all = true;
  for (const auto& row : rows) {
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = row.run();
    } catch (const std::exception& e) {
      c.check(false, std::string("error: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << row.id << ": " << (c.pass ? "PASS" : "FAIL") << "  " << row.what << "  ("
              << std::fixed << std::setprecision(2) << s << " s)\n";
    for (std::size_t k = 0; k < std::min<std::size_t>(c.notes.size(), 10); ++k) {
      std::cout << "    " << c.notes[k] << "\n";
    }
    all = all && c.pass;
  }
  return all ? 0 : 1;
}
