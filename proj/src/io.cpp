#include "smod/io.hpp"

#include <fstream>
#include <sstream>

#include "smod/errors.hpp"

namespace smod {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream is(text);
  std::string raw;
  std::size_t n = 0;
  while (std::getline(is, raw)) {
    ++n;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({n, t});
  }
  return out;
}

std::size_t to_count(const std::string& s, const std::string& file, std::size_t line) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InputError(file, line, "expected a non-negative integer, got '" + s + "'");
  }
}

// Header "kw1 v1 kw2 v2 ...": returns the value after each expected keyword.
std::map<std::string, std::string> header_fields(const std::vector<std::string>& w, std::size_t from,
                                                 const std::vector<std::string>& keys,
                                                 const std::string& file, std::size_t line) {
  std::map<std::string, std::string> out;
  std::size_t i = from;
  for (const auto& k : keys) {
    if (i + 1 >= w.size() + (k == "ranks" ? 1 : 0) || w[i] != k) {
      throw InputError(file, line, "expected '" + k + " <value>' in header");
    }
    if (k == "ranks") {
      std::string rest;
      for (std::size_t j = i + 1; j < w.size(); ++j) rest += (rest.empty() ? "" : " ") + w[j];
      out[k] = rest;
      i = w.size();
    } else {
      out[k] = w[i + 1];
      i += 2;
    }
  }
  if (i != w.size()) throw InputError(file, line, "unexpected trailing header tokens");
  return out;
}

class Reader {
 public:
  Reader(Inputs& in, const std::string& file) : in_(in), file_(file) {}

  Poly<RatFun> poly(const std::string& text, std::size_t line) const {
    try {
      return parse_poly<RatFun>(text, in_.ring);
    } catch (const Error& e) {
      throw InputError(file_, line, e.what());
    }
  }

  std::vector<Poly<RatFun>> entries(const Line& l, std::size_t expected) const {
    std::vector<Poly<RatFun>> out;
    if (expected == 0) throw InputError(file_, l.number, "no entries expected here");
    for (const auto& t : split(l.text, ',')) out.push_back(poly(t, l.number));
    if (out.size() != expected) {
      throw InputError(file_, l.number, "expected " + std::to_string(expected) + " entries, got " +
                                            std::to_string(out.size()));
    }
    return out;
  }

  Matrix<RatFun> columns(const std::vector<Line>& ls, std::size_t b, std::size_t e,
                         std::size_t rows) const {
    std::vector<VecPoly<RatFun>> cols;
    for (std::size_t k = b; k < e; ++k) cols.emplace_back(in_.ring, entries(ls[k], rows));
    return Matrix<RatFun>::from_columns(in_.ring, rows, cols);
  }

  Matrix<RatFun> rows(const std::vector<Line>& ls, std::size_t b, std::size_t e, std::size_t nrows,
                      std::size_t ncols, std::size_t header_line) const {
    if (e - b != nrows) {
      throw InputError(file_, header_line, "expected " + std::to_string(nrows) + " rows, got " +
                                               std::to_string(e - b));
    }
    Matrix<RatFun> a(in_.ring, nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
      if (ncols == 0) {
        if (ls[b + i].text != "-") throw InputError(file_, ls[b + i].number, "empty row must be '-'");
        continue;
      }
      auto es = entries(ls[b + i], ncols);
      for (std::size_t j = 0; j < ncols; ++j) a.at(i, j) = std::move(es[j]);
    }
    return a;
  }

  void check_ring(const std::string& name, std::size_t line) const {
    if (name != in_.ring->name()) {
      throw InputError(file_, line, "object refers to ring '" + name + "' but the ring is '" +
                                        in_.ring->name() + "'");
    }
  }

  void claim(ObjectKind kind, const std::string& name, std::size_t line) {
    for (const auto& [k, n] : in_.loaded) {
      if (n == name) throw InputError(file_, line, "duplicate object name '" + name + "'");
    }
    in_.loaded.emplace_back(kind, name);
  }

 private:
  Inputs& in_;
  std::string file_;
};

template <class K>
std::string join_row(const std::vector<Poly<K>>& es) {
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? ", " : "") + es[i].to_string();
  return out;
}

template <class K>
std::string column_lines(const Matrix<K>& a) {
  std::string out;
  for (std::size_t j = 0; j < a.cols(); ++j) out += join_row(a.column(j).entries) + "\n";
  return out;
}

template <class K>
std::string row_lines(const Matrix<K>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Poly<K>> row;
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j));
    out += a.cols() == 0 ? "-\n" : join_row(row) + "\n";
  }
  return out;
}

std::string ring_name(const RingPtr& r) { return r ? r->name() : "R"; }

}  // namespace

std::string kind_name(ObjectKind k) {
  switch (k) {
    case ObjectKind::module: return "module";
    case ObjectKind::ideal: return "ideal";
    case ObjectKind::submodule: return "submodule";
    case ObjectKind::matrix: return "matrix";
    case ObjectKind::complex: return "complex";
    case ObjectKind::map: return "map";
  }
  return "object";
}

const FPModule<RatFun>& Inputs::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw Error("unknown module '" + name + "'");
  return it->second;
}

const std::string& Inputs::nth(ObjectKind kind, std::size_t i) const {
  std::size_t seen = 0;
  for (const auto& [k, n] : loaded) {
    if (k == kind && seen++ == i) return n;
  }
  throw Error("expected at least " + std::to_string(i + 1) + " " + kind_name(kind) + " input(s)");
}

std::size_t Inputs::count(ObjectKind kind) const {
  std::size_t c = 0;
  for (const auto& [k, n] : loaded) c += k == kind ? 1 : 0;
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError(path, 0, "cannot open file");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RingPtr parse_ring(const std::string& text, const std::string& file) {
  std::string name = "R";
  std::vector<std::string> params;
  std::vector<std::string> vars;
  TermOrder order = TermOrder::grevlex;
  std::size_t elim = 0;
  bool have_vars = false;
  for (const auto& l : content_lines(text)) {
    for (const auto& item : split(l.text, ';')) {
      if (item.empty()) continue;
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw InputError(file, l.number, "expected 'key: value'");
      const std::string key = trim(item.substr(0, colon));
      const std::string value = trim(item.substr(colon + 1));
      auto names = [&] {
        std::vector<std::string> out;
        if (value.empty()) return out;
        for (auto& n : split(value, ',')) out.push_back(n);
        return out;
      };
      if (key == "name") {
        name = value;
      } else if (key == "params") {
        params = names();
      } else if (key == "vars") {
        vars = names();
        have_vars = true;
      } else if (key == "order") {
        auto w = words(value);
        if (w.size() == 1 && w[0] == "grevlex") {
          order = TermOrder::grevlex;
        } else if (w.size() == 1 && w[0] == "lex") {
          order = TermOrder::lex;
        } else if (w.size() == 2 && w[0] == "block") {
          order = TermOrder::block;
          elim = to_count(w[1], file, l.number);
        } else {
          throw InputError(file, l.number, "order must be grevlex, lex or 'block k'");
        }
      } else {
        throw InputError(file, l.number, "unknown ring key '" + key + "'");
      }
    }
  }
  if (!have_vars) throw InputError(file, 0, "ring has no 'vars:' entry");
  try {
    return Ring::make(params, vars, order, elim, CoeffMode::ratfun, name);
  } catch (const Error& e) {
    throw InputError(file, 0, e.what());
  }
}

RingPtr load_ring(const std::string& path) { return parse_ring(read_file(path), path); }

std::string parse_object(Inputs& in, const std::string& text, const std::string& file) {
  if (!in.ring) throw InputError(file, 0, "no ring loaded");
  auto ls = content_lines(text);
  if (ls.empty()) throw InputError(file, 0, "empty object file");
  Reader rd(in, file);
  const auto w = words(ls[0].text);
  const std::size_t hl = ls[0].number;
  if (w.size() < 2) throw InputError(file, hl, "expected '<kind> <name> ...' header");
  const std::string& kind = w[0];
  const std::string& name = w[1];

  if (kind == "module") {
    auto f = header_fields(w, 2, {"ring", "gens"}, file, hl);
    rd.check_ring(f["ring"], hl);
    const std::size_t g = to_count(f["gens"], file, hl);
    auto pres = rd.columns(ls, 1, ls.size(), g);
    rd.claim(ObjectKind::module, name, hl);
    in.modules[name] = FPModule<RatFun>::present(std::move(pres));
    in.modules[name].ring = in.ring;
  } else if (kind == "ideal") {
    auto f = header_fields(w, 2, {"ring"}, file, hl);
    rd.check_ring(f["ring"], hl);
    std::vector<Poly<RatFun>> gens;
    for (std::size_t k = 1; k < ls.size(); ++k) gens.push_back(rd.poly(ls[k].text, ls[k].number));
    rd.claim(ObjectKind::ideal, name, hl);
    in.ideals[name] = std::move(gens);
  } else if (kind == "submodule") {
    auto f = header_fields(w, 2, {"of", "ring"}, file, hl);
    rd.check_ring(f["ring"], hl);
    auto it = in.modules.find(f["of"]);
    if (it == in.modules.end()) throw InputError(file, hl, "unknown ambient module '" + f["of"] + "'");
    auto gens = rd.columns(ls, 1, ls.size(), it->second.gens);
    rd.claim(ObjectKind::submodule, name, hl);
    in.submodules[name] = Submodule<RatFun>{it->second, std::move(gens)};
  } else if (kind == "matrix") {
    auto f = header_fields(w, 2, {"ring", "rows", "cols"}, file, hl);
    rd.check_ring(f["ring"], hl);
    auto a = rd.rows(ls, 1, ls.size(), to_count(f["rows"], file, hl), to_count(f["cols"], file, hl), hl);
    rd.claim(ObjectKind::matrix, name, hl);
    in.matrices[name] = std::move(a);
  } else if (kind == "complex") {
    auto f = header_fields(w, 2, {"ring", "ranks"}, file, hl);
    rd.check_ring(f["ring"], hl);
    FreeComplex<RatFun> c;
    c.ring = in.ring;
    for (const auto& r : words(f["ranks"])) c.ranks.push_back(to_count(r, file, hl));
    if (c.ranks.empty()) throw InputError(file, hl, "complex needs at least one rank");
    std::size_t k = 1;
    for (std::size_t i = 1; i < c.ranks.size(); ++i) {
      if (k >= ls.size() || ls[k].text != "map " + std::to_string(i)) {
        throw InputError(file, k < ls.size() ? ls[k].number : hl, "expected 'map " + std::to_string(i) + "'");
      }
      const std::size_t b = k + 1;
      c.maps.push_back(rd.rows(ls, b, std::min(ls.size(), b + c.ranks[i - 1]), c.ranks[i - 1], c.ranks[i], ls[k].number));
      k = b + c.ranks[i - 1];
    }
    if (k != ls.size()) throw InputError(file, ls[k].number, "unexpected content after the last map");
    rd.claim(ObjectKind::complex, name, hl);
    in.complexes[name] = std::move(c);
  } else if (kind == "map") {
    auto f = header_fields(w, 2, {"ring"}, file, hl);
    rd.check_ring(f["ring"], hl);
    // Section boundaries.
    std::map<std::string, std::size_t> at;
    for (std::size_t k = 1; k < ls.size(); ++k) {
      const auto first = words(ls[k].text)[0];
      if (first == "source" || first == "target" || first == "v0") {
        if (at.count(first)) throw InputError(file, ls[k].number, "repeated section '" + first + "'");
        at[first] = k;
      }
    }
    for (const char* s : {"source", "target", "v0"}) {
      if (!at.count(s)) throw InputError(file, hl, std::string("map is missing the '") + s + "' section");
    }
    auto section_end = [&](std::size_t start) {
      std::size_t e = ls.size();
      for (const auto& [n, k] : at) {
        if (k > start) e = std::min(e, k);
      }
      return e;
    };
    auto module_section = [&](const std::string& key) {
      const std::size_t k = at[key];
      const auto sw = words(ls[k].text);
      const std::size_t e = section_end(k);
      if (sw.size() == 2) {
        if (e != k + 1) throw InputError(file, ls[k].number, "named " + key + " takes no relation lines");
        auto it = in.modules.find(sw[1]);
        if (it == in.modules.end()) throw InputError(file, ls[k].number, "unknown module '" + sw[1] + "'");
        return it->second;
      }
      if (sw.size() != 3 || sw[1] != "gens") throw InputError(file, ls[k].number, "expected '" + key + " <module>' or '" + key + " gens g'");
      const std::size_t g = to_count(sw[2], file, ls[k].number);
      auto m = FPModule<RatFun>::present(rd.columns(ls, k + 1, e, g));
      m.ring = in.ring;
      return m;
    };
    FPModule<RatFun> src = module_section("source");
    FPModule<RatFun> tgt = module_section("target");
    const std::size_t k = at["v0"];
    if (ls[k].text != "v0") throw InputError(file, ls[k].number, "expected 'v0'");
    Matrix<RatFun> v0 = rd.rows(ls, k + 1, section_end(k), tgt.gens, src.gens, ls[k].number);
    try {
      auto v = lift_map(v0, src, tgt);
      rd.claim(ObjectKind::map, name, hl);
      in.maps[name] = std::move(v);
    } catch (const NotAHomomorphism& e) {
      throw InputError(file, ls[k].number, e.what());
    }
  } else {
    throw InputError(file, hl, "unknown object kind '" + kind + "'");
  }
  return name;
}

std::string load_object(Inputs& in, const std::string& path) {
  return parse_object(in, read_file(path), path);
}

std::string print_ring(const Ring& r) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
  };
  std::string ord = r.order() == TermOrder::grevlex ? "grevlex"
                    : r.order() == TermOrder::lex   ? "lex"
                                                    : "block " + std::to_string(r.elim_count());
  return "name: " + r.name() + "\nparams: " + join(r.params()) + "\nvars: " + join(r.vars()) +
         "\norder: " + ord + "\n";
}

template <class K>
std::string print_module(const std::string& name, const FPModule<K>& l) {
  return "module " + name + " ring " + ring_name(l.ring) + " gens " + std::to_string(l.gens) + "\n" +
         column_lines(l.pres);
}

template <class K>
std::string print_ideal(const std::string& name, const RingPtr& ring, const std::vector<Poly<K>>& gens) {
  std::string out = "ideal " + name + " ring " + ring_name(ring) + "\n";
  for (const auto& g : gens) out += g.to_string() + "\n";
  return out;
}

template <class K>
std::string print_submodule(const std::string& name, const std::string& of, const Submodule<K>& s) {
  return "submodule " + name + " of " + of + " ring " + ring_name(s.ambient.ring) + "\n" +
         column_lines(s.gens);
}

template <class K>
std::string print_matrix(const std::string& name, const Matrix<K>& a) {
  return "matrix " + name + " ring " + ring_name(a.ring()) + " rows " + std::to_string(a.rows()) +
         " cols " + std::to_string(a.cols()) + "\n" + row_lines(a);
}

template <class K>
std::string print_complex(const std::string& name, const FreeComplex<K>& c) {
  std::string out = "complex " + name + " ring " + ring_name(c.ring) + " ranks";
  for (auto r : c.ranks) out += " " + std::to_string(r);
  out += "\n";
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    out += "map " + std::to_string(i + 1) + "\n" + row_lines(c.maps[i]);
  }
  return out;
}

template <class K>
std::string print_map(const std::string& name, const ModuleMap<K>& v) {
  std::string out = "map " + name + " ring " + ring_name(v.source.ring) + "\n";
  out += "source gens " + std::to_string(v.source.gens) + "\n" + column_lines(v.source.pres);
  out += "target gens " + std::to_string(v.target.gens) + "\n" + column_lines(v.target.pres);
  out += "v0\n" + row_lines(v.v0);
  return out;
}

#define SMOD_INSTANTIATE(K)                                                                      \
  template std::string print_module(const std::string&, const FPModule<K>&);                     \
  template std::string print_ideal(const std::string&, const RingPtr&, const std::vector<Poly<K>>&); \
  template std::string print_submodule(const std::string&, const std::string&, const Submodule<K>&); \
  template std::string print_matrix(const std::string&, const Matrix<K>&);                       \
  template std::string print_complex(const std::string&, const FreeComplex<K>&);                 \
  template std::string print_map(const std::string&, const ModuleMap<K>&);

SMOD_INSTANTIATE(Rational)
SMOD_INSTANTIATE(RatFun)

#undef SMOD_INSTANTIATE

}  // namespace smod
