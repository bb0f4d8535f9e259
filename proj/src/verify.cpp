#include "smod/verify.hpp"

#include <chrono>
#include <functional>
#include <set>

#include "json.hpp"

#include "smod/errors.hpp"
#include "smod/homology.hpp"
#include "smod/specialize.hpp"

namespace smod {

namespace {

using Q = Rational;
using R = RatFun;

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    detail += (detail.empty() ? "" : "; ") + what + (ok ? "" : " MISMATCH");
  }
};

struct Campaign {
  Certificate cert;
  std::function<Outcome(const SubstPoint&)> trial;
};

std::string show(int v) { return v == kInfinity ? "inf" : std::to_string(v); }

std::string pair(const std::string& label, int r, int q) {
  return label + " " + show(r) + (r == q ? " = " : " vs ") + show(q);
}

void compare_fp(Outcome& out, const std::string& label, const FPModule<Q>& from_r,
                const FPModule<Q>& from_q) {
  const auto a = fingerprint(from_r);
  const auto b = fingerprint(from_q);
  out.check(a == b, label + ": " + describe_difference(a, b));
}

void note_module(const FPModule<R>& l, Certificate* cert) { note_denominators(l.pres, cert); }

void note_submodule(const Submodule<R>& s, Certificate* cert) {
  note_module(s.ambient, cert);
  note_denominators(s.gens, cert);
}

void note_map(const ModuleMap<R>& v, Certificate* cert) {
  note_module(v.source, cert);
  note_module(v.target, cert);
  note_denominators(v.v0, cert);
  note_denominators(v.v1, cert);
}

const FPModule<R>& module_at(const Inputs& in, std::size_t i) {
  return in.modules.at(in.nth(ObjectKind::module, i));
}
const std::vector<Poly<R>>& ideal_at(const Inputs& in, std::size_t i) {
  return in.ideals.at(in.nth(ObjectKind::ideal, i));
}
const Submodule<R>& submodule_at(const Inputs& in, std::size_t i) {
  return in.submodules.at(in.nth(ObjectKind::submodule, i));
}
const FreeComplex<R>& complex_at(const Inputs& in, std::size_t i) {
  return in.complexes.at(in.nth(ObjectKind::complex, i));
}
const ModuleMap<R>& map_at(const Inputs& in, std::size_t i) {
  return in.maps.at(in.nth(ObjectKind::map, i));
}

Campaign exactness(const Inputs& in) {
  Campaign c;
  const FreeComplex<R> cx = complex_at(in, 0);
  for (const auto& m : cx.maps) note_denominators(m, &c.cert);
  const ExactnessReport rep = be_exactness(cx, &c.cert);
  c.trial = [cx, rep](const SubstPoint& a) {
    Outcome out;
    const ExactnessReport q = be_exactness(specialize_complex(cx, a));
    out.check(rep.overall == q.overall, std::string("exact ") + (rep.overall ? "yes" : "no") + " / " +
                                            (q.overall ? "yes" : "no"));
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
      const auto& x = rep.rows[i];
      const auto& y = q.rows[i];
      out.check(x.rank_phi == y.rank_phi && x.passed_rank == y.passed_rank &&
                    x.passed_depth == y.passed_depth,
                pair("rank phi_" + std::to_string(x.index), static_cast<int>(x.rank_phi),
                     static_cast<int>(y.rank_phi)));
    }
    return out;
  };
  return c;
}

Campaign homology(const Inputs& in) {
  Campaign c;
  const FreeComplex<R> cx = complex_at(in, 0);
  for (const auto& m : cx.maps) note_denominators(m, &c.cert);
  const std::vector<FPModule<R>> hs = complex_homology(as_module_complex(cx), &c.cert);
  for (const auto& h : hs) note_module(h, &c.cert);
  c.trial = [cx, hs](const SubstPoint& a) {
    Outcome out;
    const auto hq = complex_homology(as_module_complex(specialize_complex(cx, a)));
    for (std::size_t i = 0; i < hs.size(); ++i) {
      compare_fp(out, "H_" + std::to_string(i), specialize_module(hs[i], a), hq[i]);
    }
    return out;
  };
  return c;
}

// 0 -> Ker v -> L -> M -> Coker v -> 0 with objects indexed from the right.
template <class K>
ModuleComplex<K> four_term(const ModuleMap<K>& v, const ModuleMap<K>& inc, const ModuleMap<K>& proj) {
  return ModuleComplex<K>{{proj.target, v.target, v.source, inc.source}, {proj, v, inc}};
}

template <class K>
std::pair<ModuleMap<K>, ModuleMap<K>> ses_maps(const ModuleMap<K>& v, Certificate* cert) {
  const Submodule<K> ker = kernel(v, cert);
  const FPModule<K> kp = submodule_presentation(ker, cert);
  ModuleMap<K> inc = lift_map(ker.gens, kp, v.source, cert);
  const FPModule<K> cok = cokernel(v);
  ModuleMap<K> proj = lift_map(Matrix<K>::identity(v.target.ring, v.target.gens), v.target, cok, cert);
  return {inc, proj};
}

std::string zero_flags(const std::vector<bool>& z) {
  std::string s;
  for (bool b : z) s += b ? '0' : 'H';
  return s;
}

Campaign ses(const Inputs& in) {
  Campaign c;
  const ModuleMap<R> v = map_at(in, 0);
  note_map(v, &c.cert);
  const auto [inc, proj] = ses_maps(v, &c.cert);
  note_map(inc, &c.cert);
  note_map(proj, &c.cert);
  std::vector<bool> zr;
  for (const auto& h : complex_homology(four_term(v, inc, proj), &c.cert)) zr.push_back(is_zero(h, &c.cert));
  c.trial = [v, inc, proj, zr](const SubstPoint& a) {
    Outcome out;
    const auto cq = four_term(specialize_map(v, a), specialize_map(inc, a), specialize_map(proj, a));
    std::vector<bool> zq;
    for (const auto& h : complex_homology(cq)) zq.push_back(is_zero(h));
    out.check(zr == zq, "homology zero flags " + zero_flags(zr) + " / " + zero_flags(zq));
    return out;
  };
  return c;
}

Campaign kic(const Inputs& in) {
  Campaign c;
  const ModuleMap<R> v = map_at(in, 0);
  note_map(v, &c.cert);
  const Submodule<R> ker = kernel(v, &c.cert);
  const Submodule<R> im = image(v);
  const FPModule<R> kp = submodule_presentation(ker, &c.cert);
  const FPModule<R> ip = submodule_presentation(im, &c.cert);
  const FPModule<R> cok = cokernel(v);
  note_submodule(ker, &c.cert);
  note_module(kp, &c.cert);
  note_module(ip, &c.cert);
  c.trial = [v, ker, im, kp, ip, cok](const SubstPoint& a) {
    Outcome out;
    const ModuleMap<Q> va = specialize_map(v, a);
    const Submodule<Q> kq = kernel(va);
    const Submodule<Q> iq = image(va);
    out.check(sub_equal(specialize_submodule(ker, a), kq), "Ker as submodule");
    out.check(sub_equal(specialize_submodule(im, a), iq), "Im as submodule");
    compare_fp(out, "Ker", specialize_module(kp, a), submodule_presentation(kq));
    compare_fp(out, "Im", specialize_module(ip, a), submodule_presentation(iq));
    compare_fp(out, "Coker", specialize_module(cok, a), cokernel(va));
    return out;
  };
  return c;
}

Campaign projdim(const Inputs& in) {
  Campaign c;
  const FPModule<R> l = module_at(in, 0);
  note_module(l, &c.cert);
  const int pd = proj_dim(l, &c.cert);
  c.trial = [l, pd](const SubstPoint& a) {
    Outcome out;
    const int q = proj_dim(specialize_module(l, a));
    out.check(pd == q, pair("proj.dim", pd, q));
    return out;
  };
  return c;
}

Campaign dsum(const Inputs& in) {
  Campaign c;
  const FPModule<R> l = module_at(in, 0);
  const FPModule<R> m = module_at(in, 1);
  note_module(l, &c.cert);
  note_module(m, &c.cert);
  const FPModule<R> s = direct_sum(l, m);
  c.trial = [l, m, s](const SubstPoint& a) {
    Outcome out;
    compare_fp(out, "sum", specialize_module(s, a),
               direct_sum(specialize_module(l, a), specialize_module(m, a)));
    return out;
  };
  return c;
}

Campaign subops(const Inputs& in) {
  Campaign c;
  const Submodule<R> m = submodule_at(in, 0);
  const Submodule<R> n = submodule_at(in, 1);
  note_submodule(m, &c.cert);
  note_submodule(n, &c.cert);
  const Submodule<R> plus = sub_sum(m, n);
  const Submodule<R> meet = sub_intersect(m, n, &c.cert);
  note_submodule(meet, &c.cert);
  const FPModule<R> qm = quotient_module(m);
  const FPModule<R> qn = quotient_module(n);
  c.trial = [m, n, plus, meet, qm, qn](const SubstPoint& a) {
    Outcome out;
    const Submodule<Q> ma = specialize_submodule(m, a);
    const Submodule<Q> na = specialize_submodule(n, a);
    out.check(sub_equal(specialize_submodule(plus, a), sub_sum(ma, na)), "M+N");
    out.check(sub_equal(specialize_submodule(meet, a), sub_intersect(ma, na)), "M cap N");
    compare_fp(out, "L/M", specialize_module(qm, a), quotient_module(ma));
    compare_fp(out, "L/N", specialize_module(qn, a), quotient_module(na));
    return out;
  };
  return c;
}

Campaign gens(const Inputs& in) {
  Campaign c;
  const std::vector<Poly<R>> i = ideal_at(in, 0);
  note_denominators(i, &c.cert);
  const ReducedGB<R> g = ideal_gb<R>(in.ring, i, &c.cert);
  const int d = dim_ideal(g);
  c.trial = [i, g, d](const SubstPoint& a) {
    Outcome out;
    const std::vector<Poly<Q>> ia = subst(i, a);
    const ReducedGB<Q> gq = ideal_gb<Q>(g.ring()->specialized(), ia);
    out.check(specialize_gb(g, a) == gq, "reduced basis");
    const int dq = dim_ideal(gq);
    out.check(d == dq, pair("dim", d, dq));
    return out;
  };
  return c;
}

Campaign anndim(const Inputs& in) {
  Campaign c;
  const FPModule<R> l = module_at(in, 0);
  note_module(l, &c.cert);
  const ReducedGB<R> ann = annihilator(l, &c.cert);
  const int d = dim_ideal(ann);
  c.trial = [l, ann, d](const SubstPoint& a) {
    Outcome out;
    const ReducedGB<Q> aq = annihilator(specialize_module(l, a));
    const int dq = dim_ideal(aq);
    out.check(d == dq, pair("dim", d, dq));
    out.check(specialize_gb(ann, a) == aq, "Ann");
    return out;
  };
  return c;
}

Campaign colon(const Inputs& in) {
  Campaign c;
  const FPModule<R> l = module_at(in, 0);
  const std::vector<Poly<R>> i = ideal_at(in, 0);
  note_module(l, &c.cert);
  note_denominators(i, &c.cert);
  const Submodule<R> col = colon_module(l, i, &c.cert);
  const Submodule<R> prod = product_submodule(l, i);
  note_submodule(col, &c.cert);
  c.trial = [l, i, col, prod](const SubstPoint& a) {
    Outcome out;
    const FPModule<Q> la = specialize_module(l, a);
    const std::vector<Poly<Q>> ia = subst(i, a);
    out.check(sub_equal(specialize_submodule(col, a), colon_module(la, ia)), "0:I");
    out.check(sub_equal(specialize_submodule(prod, a), product_submodule(la, ia)), "IL");
    return out;
  };
  return c;
}

template <bool IsTor>
Campaign torext(const Inputs& in) {
  Campaign c;
  const FPModule<R> l = module_at(in, 0);
  const FPModule<R> m = module_at(in, 1);
  note_module(l, &c.cert);
  note_module(m, &c.cert);
  std::vector<FPModule<R>> ts;
  for (std::size_t i = 0; i <= in.ring->nvars(); ++i) {
    ts.push_back(IsTor ? tor(l, m, i, &c.cert) : ext(l, m, i, &c.cert));
    note_module(ts.back(), &c.cert);
  }
  c.trial = [l, m, ts](const SubstPoint& a) {
    Outcome out;
    const FPModule<Q> la = specialize_module(l, a);
    const FPModule<Q> ma = specialize_module(m, a);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const FPModule<Q> q = IsTor ? tor(la, ma, i) : ext(la, ma, i);
      compare_fp(out, std::string(IsTor ? "Tor_" : "Ext^") + std::to_string(i), specialize_module(ts[i], a), q);
    }
    return out;
  };
  return c;
}

Campaign grade(const Inputs& in) {
  Campaign c;
  const std::vector<Poly<R>> i = ideal_at(in, 0);
  const FPModule<R> l = module_at(in, 0);
  note_denominators(i, &c.cert);
  note_module(l, &c.cert);
  const int g = grade_on(i, l, &c.cert);
  c.trial = [i, l, g](const SubstPoint& a) {
    Outcome out;
    const int q = grade_on(subst(i, a), specialize_module(l, a));
    out.check(g == q, pair("grade", g, q));
    return out;
  };
  return c;
}

Campaign perfect(const Inputs& in) {
  Campaign c;
  const FPModule<R> l = module_at(in, 0);
  note_module(l, &c.cert);
  const int pd = proj_dim(l, &c.cert);
  const int g = grade_module(l, &c.cert);
  c.trial = [l, pd, g](const SubstPoint& a) {
    Outcome out;
    const FPModule<Q> la = specialize_module(l, a);
    const int pq = proj_dim(la);
    const int gq = grade_module(la);
    out.check(pd == pq, pair("proj.dim", pd, pq));
    out.check(g == gq, pair("grade", g, gq));
    out.check(pd != g || pq == gq, std::string("perfect ") + (pd == g ? "yes" : "no") + " / " +
                                       (pq == gq ? "yes" : "no"));
    return out;
  };
  return c;
}

struct Entry {
  const char* id;
  const char* inputs;
  Campaign (*build)(const Inputs&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {"exactness_1_5", "complex", exactness},
      {"ses_2_4", "map", ses},
      {"kic_2_5", "map", kic},
      {"projdim_2_6", "module", projdim},
      {"homology_2_7", "complex", homology},
      {"dsum_3_1", "module, module", dsum},
      {"subops_3_2", "submodule, submodule (same ambient module)", subops},
      {"gens_3_3", "ideal", gens},
      {"anndim_3_4", "module", anndim},
      {"colon_3_6", "module, ideal", colon},
      {"tor_4_2", "module, module", torext<true>},
      {"ext_4_3", "module, module", torext<false>},
      {"grade_4_4", "ideal, module", grade},
      {"perfect_4_5", "module", perfect},
  };
  return r;
}

const Entry& lookup(const std::string& id) {
  for (const auto& e : registry()) {
    if (id == e.id) return e;
  }
  throw Error("unknown theorem '" + id + "'");
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.id);
    return out;
  }();
  return ids;
}

std::string theorem_inputs(const std::string& theorem) { return lookup(theorem).inputs; }

Report run_verification(const VerifyTask& task, const Inputs& in) {
  const Entry& entry = lookup(task.theorem);
  if (task.trials < 1) throw Error("trials must be at least 1");
  if (!in.ring) throw Error("no ring loaded");
  Campaign campaign;
  try {
    campaign = entry.build(in);
  } catch (const std::out_of_range&) {
    throw Error(task.theorem + " expects inputs: " + entry.inputs);
  }
  Report rep;
  rep.task = task;
  const auto& names = in.ring->params();
  rep.cert_factors = campaign.cert.to_strings(names);
  rep.trials.resize(task.trials);
  const std::size_t m = in.ring->nparams();
  if (task.forced && task.forced->size() != m) {
    throw Error("alpha has " + std::to_string(task.forced->size()) + " coordinates, expected " +
                std::to_string(m));
  }

  const long n = static_cast<long>(task.trials);
#pragma omp parallel for schedule(dynamic) if (task.parallel)
  for (long t = 0; t < n; ++t) {
    TrialRecord& rec = rep.trials[static_cast<std::size_t>(t)];
    rec.index = static_cast<std::size_t>(t);
    const auto start = std::chrono::steady_clock::now();
    try {
      rec.alpha = task.forced ? *task.forced
                              : sample_alpha(task.seed, campaign.cert, task.bound, m, rec.index);
      for (const auto& f : campaign.cert.factors()) {
        if (ratfun_eval(RatFun(f), rec.alpha) == 0) rec.vanishing.push_back(f.to_string(names));
      }
      Outcome out = campaign.trial(rec.alpha);
      rec.pass = out.pass;
      rec.detail = out.detail;
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.detail = std::string("error: ") + e.what();
    }
    if (!rec.vanishing.empty()) {
      rec.detail += "; alpha is uncertified, vanishing factor";
      for (const auto& f : rec.vanishing) rec.detail += " " + f;
    }
    if (task.timing) {
      rec.ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start)
                                     .count());
    }
  }
  for (const auto& r : rep.trials) (r.pass ? rep.passed : rep.failed) += 1;
  return rep;
}

std::string Report::to_json() const {
  using json = nlohmann::ordered_json;
  json t;
  t["theorem"] = task.theorem;
  t["ring"] = task.ring_file;
  t["inputs"] = task.inputs;
  t["trials"] = task.trials;
  t["seed"] = task.seed;
  t["bound"] = task.bound;
  if (task.forced) t["alpha"] = task.forced->to_strings();
  json trs = json::array();
  std::set<std::vector<std::string>> distinct;
  for (const auto& r : trials) {
    json j;
    j["index"] = r.index;
    j["alpha"] = r.alpha.to_strings();
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    j["cert_factors"] = cert_factors;
    j["cert_size"] = cert_factors.size();
    j["vanishing"] = r.vanishing;
    j["ms"] = r.ms;
    trs.push_back(std::move(j));
    distinct.insert(cert_factors);
  }
  json out;
  out["task"] = std::move(t);
  out["trials"] = std::move(trs);
  out["summary"] = {{"pass", passed},
                    {"fail", failed},
                    {"distinct_certificates", distinct.size()},
                    {"cert_size", cert_factors.size()}};
  return out.dump(2) + "\n";
}

}  // namespace smod
