// Command-line front end: individual computations and verification
// campaigns. Exit codes: 0 success, 1 failed verification or computation,
// 2 usage or input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <type_traits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "smod/errors.hpp"
#include "smod/homology.hpp"
#include "smod/io.hpp"
#include "smod/linalg.hpp"
#include "smod/specialize.hpp"
#include "smod/verify.hpp"

namespace fs = std::filesystem;
using namespace smod;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string ring;
  std::string alpha;
  std::string out;
  int threads = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 10;
  int bound = 7;
  bool timing = false;
  bool serial = false;
  bool trials_given = false;
  std::string ideal, module, matrix, complex, poly, theorem, corpus = "corpus";
  std::vector<std::string> modules, inputs;
  std::size_t size = 1, cap = 12;
  int index = -1;
};

// Objects over R, or over R_alpha when a point is given.
template <class K>
struct Conv {
  using Field = K;
  const std::optional<SubstPoint>& alpha;

  FPModule<K> operator()(const FPModule<RatFun>& l) const {
    if constexpr (std::is_same_v<K, RatFun>) return l;
    else return specialize_module(l, *alpha);
  }
  Matrix<K> operator()(const Matrix<RatFun>& a) const {
    if constexpr (std::is_same_v<K, RatFun>) return a;
    else return subst(a, *alpha);
  }
  std::vector<Poly<K>> operator()(const std::vector<Poly<RatFun>>& fs) const {
    if constexpr (std::is_same_v<K, RatFun>) return fs;
    else return subst(fs, *alpha);
  }
  FreeComplex<K> operator()(const FreeComplex<RatFun>& c) const {
    if constexpr (std::is_same_v<K, RatFun>) return c;
    else return specialize_complex(c, *alpha);
  }
  RingPtr ring(const RingPtr& r) const {
    if constexpr (std::is_same_v<K, RatFun>) return r;
    else return r->specialized();
  }
};

template <class F>
std::string with_field(const std::optional<SubstPoint>& alpha, F&& body) {
  if (alpha) return body(Conv<Rational>{alpha});
  return body(Conv<RatFun>{alpha});
}

std::string ring_path(const Options& o, const std::vector<std::string>& files) {
  if (!o.ring.empty()) return o.ring;
  if (files.empty()) throw UsageError("--ring is required");
  return (fs::path(files.front()).parent_path() / "ring.txt").string();
}

Inputs load_all(const Options& o, const std::vector<std::string>& files) {
  Inputs in;
  in.ring = load_ring(ring_path(o, files));
  for (const auto& f : files) load_object(in, f);
  return in;
}

std::optional<SubstPoint> parse_alpha(const Options& o, const Inputs& in) {
  if (o.alpha.empty()) return std::nullopt;
  SubstPoint a;
  try {
    a = SubstPoint::parse(o.alpha);
  } catch (const Error& e) {
    throw UsageError(std::string("bad --alpha: ") + e.what());
  }
  if (a.size() != in.ring->nparams()) {
    throw UsageError("--alpha has " + std::to_string(a.size()) + " coordinates, the ring has " +
                     std::to_string(in.ring->nparams()) + " parameters");
  }
  return a;
}

const std::string& require_kind(const Inputs& in, ObjectKind kind, const std::string& file) {
  if (in.loaded.empty() || in.loaded.back().first != kind) {
    throw InputError(file, 1, "expected a " + kind_name(kind) + " object");
  }
  return in.loaded.back().second;
}

void emit(const Options& o, const std::string& command, const std::optional<SubstPoint>& alpha,
          const std::string& text, const Certificate& cert, const Inputs& in) {
  std::cout << text;
  if (cert.size() != 0) {
    std::cout << "certificate:";
    for (const auto& f : cert.to_strings(in.ring->params())) std::cout << " " << f;
    std::cout << "\n";
  }
  if (o.out.empty()) return;
  json j;
  j["command"] = command;
  j["alpha"] = alpha ? alpha->to_strings() : std::vector<std::string>{};
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) lines.push_back(l);
  j["output"] = lines;
  j["cert_factors"] = cert.to_strings(in.ring->params());
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << j.dump(2) << "\n";
}

std::string show_int(int v) { return v == kInfinity ? "inf" : std::to_string(v); }

// One of --ideal / --module / --matrix.
int cmd_gb(const Options& o, bool dim_only) {
  const int given = !o.ideal.empty() + !o.module.empty() + !o.matrix.empty();
  if (given != 1) throw UsageError("give exactly one of --ideal, --module, --matrix");
  const std::string file = !o.ideal.empty() ? o.ideal : !o.module.empty() ? o.module : o.matrix;
  Inputs in = load_all(o, {file});
  const auto alpha = parse_alpha(o, in);
  Certificate cert;
  const std::string text = with_field(alpha, [&](auto cv) {
    using K = typename decltype(cv)::Field;
    ReducedGB<K> gb;
    if (!o.ideal.empty()) {
      gb = ideal_gb<K>(cv.ring(in.ring), cv(in.ideals.at(require_kind(in, ObjectKind::ideal, file))), &cert);
    } else if (!o.module.empty()) {
      const auto l = cv(in.modules.at(require_kind(in, ObjectKind::module, file)));
      if (dim_only) return "dim " + std::to_string(dim_ideal(annihilator(l, &cert))) + "\n";
      gb = column_gb(l.pres, &cert);
    } else {
      gb = column_gb(cv(in.matrices.at(require_kind(in, ObjectKind::matrix, file))), &cert);
    }
    if (dim_only) {
      if (gb.rank() != 1) throw UsageError("dim needs an ideal or a module");
      return "dim " + std::to_string(dim_ideal(gb)) + "\n";
    }
    std::string text = gb.to_string();
    if (text.empty() || text.back() != '\n') text += "\n";
    return text;
  });
  emit(o, dim_only ? "dim" : "gb", alpha, text, cert, in);
  return 0;
}

int cmd_nf(const Options& o) {
  if (o.ideal.empty() || o.poly.empty()) throw UsageError("nf needs --ideal and --poly");
  Inputs in = load_all(o, {o.ideal});
  const auto alpha = parse_alpha(o, in);
  Certificate cert;
  const std::string text = with_field(alpha, [&](auto cv) {
    using K = typename decltype(cv)::Field;
    const auto gb = ideal_gb<K>(cv.ring(in.ring), cv(in.ideals.at(require_kind(in, ObjectKind::ideal, o.ideal))), &cert);
    Poly<RatFun> f;
    try {
      f = parse_poly<RatFun>(o.poly, in.ring);
    } catch (const Error& e) {
      throw UsageError(std::string("bad --poly: ") + e.what());
    }
    return normal_form(cv(std::vector<Poly<RatFun>>{f})[0], gb, &cert).to_string() + "\n";
  });
  emit(o, "nf", alpha, text, cert, in);
  return 0;
}

template <class Body>
int matrix_command(const Options& o, const std::string& name, Body body) {
  if (o.matrix.empty()) throw UsageError(name + " needs --matrix");
  Inputs in = load_all(o, {o.matrix});
  const auto alpha = parse_alpha(o, in);
  Certificate cert;
  const std::string& obj = require_kind(in, ObjectKind::matrix, o.matrix);
  const std::string text = with_field(alpha, [&](auto cv) { return body(cv(in.matrices.at(obj)), cert); });
  emit(o, name, alpha, text, cert, in);
  return 0;
}

template <class Body>
int module_command(const Options& o, const std::string& name, Body body) {
  if (o.module.empty()) throw UsageError(name + " needs --module");
  Inputs in = load_all(o, {o.module});
  const auto alpha = parse_alpha(o, in);
  Certificate cert;
  const std::string& obj = require_kind(in, ObjectKind::module, o.module);
  const std::string text = with_field(alpha, [&](auto cv) { return body(cv(in.modules.at(obj)), cert); });
  emit(o, name, alpha, text, cert, in);
  return 0;
}

int cmd_specialize(const Options& o) {
  const std::string file = !o.module.empty()  ? o.module
                           : !o.matrix.empty() ? o.matrix
                           : !o.ideal.empty()  ? o.ideal
                                               : o.complex;
  if (file.empty()) throw UsageError("specialize needs --module, --matrix, --ideal or --complex");
  if (o.alpha.empty()) throw UsageError("specialize needs --alpha");
  Inputs in = load_all(o, {file});
  const auto alpha = parse_alpha(o, in);
  Certificate cert;
  const auto& [kind, name] = in.loaded.back();
  std::string text;
  switch (kind) {
    case ObjectKind::module:
      text = print_module(name, specialize_module(in.modules.at(name), *alpha, &cert));
      break;
    case ObjectKind::matrix:
      text = print_matrix(name, subst(in.matrices.at(name), *alpha, &cert));
      break;
    case ObjectKind::ideal:
      text = print_ideal(name, in.ring->specialized(), subst(in.ideals.at(name), *alpha, &cert));
      break;
    case ObjectKind::complex:
      text = print_complex(name, specialize_complex(in.complexes.at(name), *alpha, &cert));
      break;
    default:
      throw UsageError("cannot specialize a " + kind_name(kind));
  }
  emit(o, "specialize", alpha, text, cert, in);
  return 0;
}

int cmd_exact(const Options& o) {
  if (o.complex.empty()) throw UsageError("exact needs --complex");
  Inputs in = load_all(o, {o.complex});
  const auto alpha = parse_alpha(o, in);
  Certificate cert;
  const std::string& obj = require_kind(in, ObjectKind::complex, o.complex);
  const std::string text = with_field(alpha, [&](auto cv) {
    return be_exactness(cv(in.complexes.at(obj)), &cert).to_string();
  });
  emit(o, "exact", alpha, text, cert, in);
  return 0;
}

int cmd_torext(const Options& o, bool is_tor) {
  if (o.modules.size() != 2) throw UsageError("give two modules with --modules L,M");
  Inputs in = load_all(o, o.modules);
  const auto alpha = parse_alpha(o, in);
  Certificate cert;
  const std::size_t n = in.ring->nvars();
  if (o.index > static_cast<int>(n)) throw UsageError("--index exceeds the number of variables");
  const std::string text = with_field(alpha, [&](auto cv) {
    using K = typename decltype(cv)::Field;
    const FPModule<K> l = cv(in.modules.at(in.nth(ObjectKind::module, 0)));
    const FPModule<K> m = cv(in.modules.at(in.nth(ObjectKind::module, 1)));
    std::string out;
    const std::size_t lo = o.index < 0 ? 0 : static_cast<std::size_t>(o.index);
    const std::size_t hi = o.index < 0 ? n : lo;
    for (std::size_t i = lo; i <= hi; ++i) {
      const FPModule<K> t = is_tor ? tor(l, m, i, &cert) : ext(l, m, i, &cert);
      const std::string label = (is_tor ? "Tor_" : "Ext^") + std::to_string(i);
      out += print_module(label, simplify(t, &cert));
      out += label + " fingerprint\n" + fingerprint(t, &cert).to_string();
    }
    return out;
  });
  emit(o, is_tor ? "tor" : "ext", alpha, text, cert, in);
  return 0;
}

int cmd_grade(const Options& o) {
  if (o.ideal.empty() || o.module.empty()) throw UsageError("grade needs --ideal and --module");
  Inputs in = load_all(o, {o.ideal, o.module});
  const auto alpha = parse_alpha(o, in);
  Certificate cert;
  const std::string text = with_field(alpha, [&](auto cv) {
    const auto i = cv(in.ideals.at(in.nth(ObjectKind::ideal, 0)));
    const auto l = cv(in.modules.at(in.nth(ObjectKind::module, 0)));
    return "grade " + show_int(grade_on(i, l, &cert)) + "\n";
  });
  emit(o, "grade", alpha, text, cert, in);
  return 0;
}

int cmd_verify(const Options& o) {
  if (o.theorem.empty() || o.inputs.empty()) throw UsageError("verify needs --theorem and --inputs");
  VerifyTask task;
  task.theorem = o.theorem;
  task.ring_file = ring_path(o, o.inputs);
  task.inputs = o.inputs;
  task.trials = o.trials;
  task.seed = o.seed;
  task.bound = o.bound;
  task.timing = o.timing;
  task.parallel = !o.serial;
  try {
    theorem_inputs(o.theorem);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (o.trials < 1 || o.bound < 1) throw UsageError("--trials and --bound must be at least 1");
  Inputs in = load_all(o, o.inputs);
  task.forced = parse_alpha(o, in);
  if (task.forced && !o.trials_given) task.trials = 1;
  Report rep;
  try {
    rep = run_verification(task, in);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  for (const auto& t : rep.trials) {
    std::cout << "trial " << t.index << " alpha=(";
    const auto a = t.alpha.to_strings();
    for (std::size_t k = 0; k < a.size(); ++k) std::cout << (k ? "," : "") << a[k];
    std::cout << ") " << (t.pass ? "pass" : "FAIL") << ": " << t.detail << "\n";
  }
  std::cout << o.theorem << ": " << rep.passed << " passed, " << rep.failed << " failed; certificate size "
            << rep.cert_factors.size() << "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << rep.to_json();
  }
  return rep.failed == 0 ? 0 : 1;
}

json read_manifest(const std::string& dir) {
  const fs::path p = fs::path(dir) / "manifest.json";
  try {
    return json::parse(read_file(p.string()));
  } catch (const json::exception& e) {
    throw InputError(p.string(), 0, e.what());
  }
}

int cmd_corpus_list(const Options& o) {
  const json m = read_manifest(o.corpus);
  for (const auto& e : m.at("entries")) {
    std::cout << e.at("name").get<std::string>() << "  " << e.at("theorem").get<std::string>() << "  ";
    const auto files = e.at("inputs").get<std::vector<std::string>>();
    for (std::size_t k = 0; k < files.size(); ++k) std::cout << (k ? "," : "") << files[k];
    std::cout << "\n";
  }
  return 0;
}

int cmd_corpus_run(const Options& o) {
  const json m = read_manifest(o.corpus);
  std::size_t failed = 0;
  for (const auto& e : m.at("entries")) {
    Options eo = o;
    std::vector<std::string> files;
    for (const auto& f : e.at("inputs")) files.push_back((fs::path(o.corpus) / f.get<std::string>()).string());
    eo.ring = (fs::path(o.corpus) / e.at("ring").get<std::string>()).string();
    VerifyTask task;
    task.theorem = e.at("theorem").get<std::string>();
    task.ring_file = eo.ring;
    task.inputs = files;
    task.trials = e.value("trials", o.trials);
    task.seed = e.value("seed", o.seed);
    task.bound = o.bound;
    task.parallel = !o.serial;
    Report rep;
    try {
      rep = run_verification(task, load_all(eo, files));
    } catch (const std::exception& ex) {
      std::cout << e.at("name").get<std::string>() << " " << task.theorem << ": error: " << ex.what() << "\n";
      ++failed;
      continue;
    }
    std::cout << e.at("name").get<std::string>() << " " << task.theorem << ": " << rep.passed << "/"
              << rep.trials.size() << " passed, certificate size " << rep.cert_factors.size() << "\n";
    for (const auto& t : rep.trials) {
      if (!t.pass) std::cout << "  trial " << t.index << ": " << t.detail << "\n";
    }
    failed += rep.failed != 0;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smod: modules over k(u)[x] and their specializations u -> alpha"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--ring", o.ring, "ring file (default: ring.txt beside the first input)");
    s->add_option("--alpha", o.alpha, "specialization point a1,a2,... (rational literals)");
    s->add_option("--out", o.out, "write a JSON report here");
    s->add_option("--threads", o.threads, "OpenMP threads (0: runtime default)");
    s->add_option("--seed", o.seed, "sampling seed");
    s->add_option("--trials", o.trials, "number of trials");
    s->add_option("--bound", o.bound, "sample coordinates in [-bound, bound]")->capture_default_str();
  };

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal, module or matrix columns");
  auto* dim = app.add_subcommand("dim", "Krull dimension of an ideal or module");
  for (auto* s : {gb, dim}) {
    common(s);
    s->add_option("--ideal", o.ideal);
    s->add_option("--module", o.module);
    s->add_option("--matrix", o.matrix);
  }
  auto* nf = app.add_subcommand("nf", "normal form of a polynomial modulo an ideal");
  common(nf);
  nf->add_option("--ideal", o.ideal)->required();
  nf->add_option("--poly", o.poly)->required();
  auto* syz = app.add_subcommand("syz", "syzygies of the columns of a matrix");
  auto* rank = app.add_subcommand("rank", "rank of a matrix");
  auto* mins = app.add_subcommand("minors", "t x t minors of a matrix");
  for (auto* s : {syz, rank, mins}) {
    common(s);
    s->add_option("--matrix", o.matrix)->required();
  }
  mins->add_option("--size", o.size, "minor size t")->capture_default_str();
  auto* res = app.add_subcommand("resolve", "free resolution of a module");
  auto* pd = app.add_subcommand("projdim", "projective dimension of a module");
  for (auto* s : {res, pd}) {
    common(s);
    s->add_option("--module", o.module)->required();
  }
  res->add_option("--cap", o.cap, "maximum number of maps")->capture_default_str();
  auto* exact = app.add_subcommand("exact", "acyclicity test of a free complex");
  common(exact);
  exact->add_option("--complex", o.complex)->required();
  auto* spec = app.add_subcommand("specialize", "substitute u -> alpha in an object");
  common(spec);
  spec->add_option("--module", o.module);
  spec->add_option("--matrix", o.matrix);
  spec->add_option("--ideal", o.ideal);
  spec->add_option("--complex", o.complex);
  auto* tor_c = app.add_subcommand("tor", "Tor_i(L, M)");
  auto* ext_c = app.add_subcommand("ext", "Ext^i(L, M)");
  for (auto* s : {tor_c, ext_c}) {
    common(s);
    s->add_option("--modules", o.modules, "L,M")->delimiter(',')->required();
    s->add_option("--index", o.index, "homological index (default: all 0..n)");
  }
  auto* grade = app.add_subcommand("grade", "grade of an ideal on a module");
  common(grade);
  grade->add_option("--ideal", o.ideal)->required();
  grade->add_option("--module", o.module)->required();
  auto* verify = app.add_subcommand("verify", "randomized verification of a preservation theorem");
  common(verify);
  verify->add_option("--theorem", o.theorem)->required();
  verify->add_option("--inputs", o.inputs, "object files")->delimiter(',')->required();
  verify->add_flag("--timing", o.timing, "record per-trial wall time in the report");
  verify->add_flag("--serial", o.serial, "run trials on one thread");
  auto* corpus = app.add_subcommand("corpus", "committed verification corpus");
  corpus->require_subcommand(1);
  auto* clist = corpus->add_subcommand("list", "list manifest entries");
  auto* crun = corpus->add_subcommand("run", "verify every manifest entry");
  for (auto* s : {clist, crun}) {
    s->add_option("--corpus", o.corpus, "corpus directory")->capture_default_str();
  }
  common(crun);
  crun->add_flag("--serial", o.serial, "run trials on one thread");

  try {
    app.parse(argc, argv);
    if (*verify) o.trials_given = verify->get_option("--trials")->count() != 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
#ifdef _OPENMP
  if (o.threads > 0) omp_set_num_threads(o.threads);
#endif

  try {
    if (*gb) return cmd_gb(o, false);
    if (*dim) return cmd_gb(o, true);
    if (*nf) return cmd_nf(o);
    if (*syz) {
      return matrix_command(o, "syz", [](const auto& a, Certificate& c) {
        return print_matrix("S", syzygies(a, &c));
      });
    }
    if (*rank) {
      return matrix_command(o, "rank", [](const auto& a, Certificate& c) {
        return "rank " + std::to_string(rank_matrix(a, &c)) + "\n";
      });
    }
    if (*mins) {
      return matrix_command(o, "minors", [&](const auto& a, Certificate&) {
        std::string out;
        for (const auto& p : minors(a, o.size)) out += p.to_string() + "\n";
        return out;
      });
    }
    if (*res) {
      return module_command(o, "resolve", [&](const auto& l, Certificate& c) {
        return print_complex("F", free_resolution(l, o.cap, &c));
      });
    }
    if (*pd) {
      return module_command(o, "projdim", [](const auto& l, Certificate& c) {
        return "proj.dim " + std::to_string(proj_dim(l, &c)) + "\n";
      });
    }
    if (*exact) return cmd_exact(o);
    if (*spec) return cmd_specialize(o);
    if (*tor_c) return cmd_torext(o, true);
    if (*ext_c) return cmd_torext(o, false);
    if (*grade) return cmd_grade(o);
    if (*verify) return cmd_verify(o);
    if (*clist) return cmd_corpus_list(o);
    if (*crun) return cmd_corpus_run(o);
  } catch (const UsageError& e) {
    std::cerr << "smod: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "smod: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "smod: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
