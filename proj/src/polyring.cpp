#include "smod/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "smod/coeff.hpp"
#include "smod/errors.hpp"

namespace smod {

// --- Monomial ---------------------------------------------------------------

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](std::uint16_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e[i] > other.e[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (e[i] != 0 && other.e[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

namespace {

int lex_range(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  }
  return 0;
}

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t from) {
  unsigned da = 0;
  unsigned db = 0;
  for (std::size_t i = from; i < kMaxVars; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > from;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int monomial_cmp(TermOrder order, std::size_t elim_count, const Monomial& a, const Monomial& b) {
  switch (order) {
    case TermOrder::lex:
      return lex_range(a, b, 0, kMaxVars);
    case TermOrder::grevlex:
      return grevlex_range(a, b, 0);
    case TermOrder::block: {
      int c = lex_range(a, b, 0, elim_count);
      return c != 0 ? c : grevlex_range(a, b, elim_count);
    }
  }
  return 0;
}

// --- Ring -------------------------------------------------------------------

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

}  // namespace

RingPtr Ring::make(std::vector<std::string> params, std::vector<std::string> vars, TermOrder order,
                   std::size_t elim_count, CoeffMode mode, std::string name) {
  if (vars.size() > kMaxVars) {
    throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  if (mode == CoeffMode::rational && !params.empty()) {
    throw Error("rational coefficient mode does not admit parameters");
  }
  std::set<std::string> seen;
  for (const auto* list : {&params, &vars}) {
    for (const auto& n : *list) {
      if (!valid_name(n)) throw Error("invalid symbol name '" + n + "'");
      if (!seen.insert(n).second) throw Error("duplicate symbol name '" + n + "'");
    }
  }
  if (order == TermOrder::block && elim_count >= vars.size()) {
    throw Error("block order must eliminate fewer than all variables");
  }
  if (order != TermOrder::block) elim_count = 0;
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->name_ = std::move(name);
  ring->params_ = std::move(params);
  ring->vars_ = std::move(vars);
  ring->order_ = order;
  ring->elim_count_ = elim_count;
  ring->mode_ = mode;
  if (mode == CoeffMode::ratfun) {
    ring->specialized_ =
        make({}, ring->vars_, order, elim_count, CoeffMode::rational, ring->name_ + "_alpha");
  }
  return ring;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  return monomial_cmp(order_, elim_count_, a, b);
}

RingPtr Ring::specialized() const {
  if (mode_ == CoeffMode::rational) return shared_from_this();
  return specialized_;
}

RingPtr Ring::with_order(TermOrder order, std::size_t elim_count) const {
  return make(params_, vars_, order, elim_count, mode_, name_);
}

RingPtr Ring::with_leading_var(const std::string& var) const {
  std::vector<std::string> vars;
  vars.push_back(var);
  vars.insert(vars.end(), vars_.begin(), vars_.end());
  return make(params_, std::move(vars), TermOrder::block, 1, mode_, name_ + "_ext");
}

bool Ring::same_as(const Ring& other) const {
  return this == &other || (params_ == other.params_ && vars_ == other.vars_ &&
                            order_ == other.order_ && elim_count_ == other.elim_count_ &&
                            mode_ == other.mode_);
}

std::string Ring::describe() const {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
    return s;
  };
  std::string ord = order_ == TermOrder::grevlex ? "grevlex"
                    : order_ == TermOrder::lex   ? "lex"
                                                 : "block " + std::to_string(elim_count_);
  return "params: " + join(params_) + "; vars: " + join(vars_) + "; order: " + ord;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b || !a->same_as(*b)) throw RingMismatch();
}

// --- coefficient printing ---------------------------------------------------

std::string coeff_to_string(const Rational& c, const Ring&) { return to_string(c); }

std::string coeff_to_string(const RatFun& c, const Ring& ring) { return c.to_string(ring.params()); }

namespace {

std::string monomial_text(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.vars()[i];
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out;
}

// Term text without its sign; returns whether the term is negative.
bool term_text(const Rational& c, const Monomial& m, const Ring& ring, std::string& body) {
  const bool neg = c < 0;
  const Rational mag = neg ? Rational(-c) : c;
  std::string mono = monomial_text(m, ring);
  if (mono.empty()) {
    body = to_string(mag);
  } else if (mag == 1) {
    body = mono;
  } else {
    body = to_string(mag) + "*" + mono;
  }
  return neg;
}

bool term_text(const RatFun& c, const Monomial& m, const Ring& ring, std::string& body) {
  if (c.is_constant()) return term_text(c.num().constant_value(), m, ring, body);
  std::string mono = monomial_text(m, ring);
  if (c.den().is_one() && c.num().terms().size() == 1) {
    // Single parameter monomial: print as a plain product.
    const auto& [e, q] = *c.num().terms().begin();
    ParamPoly unit = ParamPoly::monomial(e, Rational(1));
    const bool neg = q < 0;
    const Rational mag = neg ? Rational(-q) : q;
    body = mag == 1 ? unit.to_string(ring.params())
                    : to_string(mag) + "*" + unit.to_string(ring.params());
    if (!mono.empty()) body += "*" + mono;
    return neg;
  }
  const bool neg = c.num().leading_coeff() < 0;
  const ParamPoly num = neg ? -c.num() : c.num();
  body = "(" + num.to_string(ring.params()) + ")";
  if (!c.den().is_one()) body += "/(" + c.den().to_string(ring.params()) + ")";
  if (!mono.empty()) body += "*" + mono;
  return neg;
}

}  // namespace

// --- Poly -------------------------------------------------------------------

template <class K>
Poly<K> Poly<K>::constant(RingPtr ring, const K& c) {
  Poly p(std::move(ring));
  if (!coeff_is_zero(c)) p.terms_.push_back({Monomial{}, c});
  return p;
}

template <class K>
Poly<K> Poly<K>::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error("variable index out of range");
  Monomial m;
  m.e[index] = 1;
  return monomial(std::move(ring), m, K(1));
}

template <class K>
Poly<K> Poly<K>::monomial(RingPtr ring, const Monomial& m, const K& c) {
  Poly p(std::move(ring));
  if (!coeff_is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <class K>
Poly<K> Poly<K>::from_terms(RingPtr ring, std::vector<Term<K>> terms) {
  const Ring& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&](const Term<K>& a, const Term<K>& b) { return r.compare(a.m, b.m) > 0; });
  Poly p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
      if (coeff_is_zero(p.terms_.back().c)) p.terms_.pop_back();
    } else if (!coeff_is_zero(t.c)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

template <class K>
Poly<K> Poly<K>::from_sorted(RingPtr ring, std::vector<Term<K>> terms) {
  Poly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

template <class K>
bool Poly<K>::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

template <class K>
unsigned Poly<K>::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

template <class K>
Poly<K> Poly<K>::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

template <class K>
Poly<K>& Poly<K>::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (!ring_) ring_ = o.ring_;
  if (o.ring_ && ring_ != o.ring_) require_same_ring(ring_, o.ring_);
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  const Ring& r = *ring_;
  std::vector<Term<K>> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = r.compare(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      K sum = terms_[i].c + o.terms_[j].c;
      if (!coeff_is_zero(sum)) out.push_back({terms_[i].m, std::move(sum)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

template <class K>
Poly<K>& Poly<K>::operator-=(const Poly& o) {
  return *this += -o;
}

template <class K>
Poly<K> Poly<K>::mul(const Poly& o) const {
  RingPtr ring = ring_ ? ring_ : o.ring_;
  if (ring_ && o.ring_ && ring_ != o.ring_) require_same_ring(ring_, o.ring_);
  if (terms_.empty() || o.terms_.empty()) return Poly(ring);
  std::vector<Term<K>> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prods.push_back({a.m * b.m, a.c * b.c});
  }
  return from_terms(std::move(ring), std::move(prods));
}

template <class K>
Poly<K> Poly<K>::scaled(const K& c) const {
  if (coeff_is_zero(c)) return Poly(ring_);
  Poly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

template <class K>
Poly<K> Poly<K>::mul_term(const Monomial& m, const K& c) const {
  if (coeff_is_zero(c)) return Poly(ring_);
  Poly r = *this;
  for (auto& t : r.terms_) {
    t.m = t.m * m;
    t.c *= c;
  }
  return r;
}

template <class K>
Poly<K> Poly<K>::monic() const {
  if (terms_.empty() || coeff_is_one(terms_[0].c)) return *this;
  K inv = K(1) / terms_[0].c;
  return scaled(inv);
}

template <class K>
bool Poly<K>::equal_terms(const Poly& o) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].m == o.terms_[i].m) || !(terms_[i].c == o.terms_[i].c)) return false;
  }
  return true;
}

template <class K>
Poly<K> Poly<K>::in_ring(RingPtr ring) const {
  return from_terms(std::move(ring), terms_);
}

template <class K>
std::string Poly<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::string body;
    bool neg = term_text(terms_[i].c, terms_[i].m, *ring_, body);
    if (i == 0) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

template <class K>
std::optional<Poly<K>> divide_exact(const Poly<K>& f, const Poly<K>& g) {
  if (g.is_zero()) throw DivisionByZero();
  const RingPtr& ring = f.ring() ? f.ring() : g.ring();
  Poly<K> q(ring);
  Poly<K> r = f;
  const Term<K>& lg = g.leading();
  const K inv = K(1) / lg.c;
  while (!r.is_zero()) {
    const Term<K>& lr = r.leading();
    if (!lg.m.divides(lr.m)) return std::nullopt;
    Monomial m = lr.m / lg.m;
    K c = lr.c * inv;
    q += Poly<K>::monomial(ring, m, c);
    r -= g.mul_term(m, c);
  }
  return q;
}

template class Poly<Rational>;
template class Poly<RatFun>;
template std::optional<Poly<Rational>> divide_exact(const Poly<Rational>&, const Poly<Rational>&);
template std::optional<Poly<RatFun>> divide_exact(const Poly<RatFun>&, const Poly<RatFun>&);

// --- parser -----------------------------------------------------------------

namespace {

template <class K>
class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Poly<K> parse() {
    Poly<K> p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, "operator or end of input");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly<K> expr() {
    skip();
    bool neg = false;
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    Poly<K> acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly<K> term() {
    Poly<K> acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else {
        skip();
        std::size_t at = pos_;
        if (!eat('/')) break;
        Poly<K> d = factor();
        if (!d.is_constant()) throw ParseError(at, "divisor free of ring variables");
        if (d.is_zero()) throw DivisionByZero();
        acc = acc.scaled(K(1) / d.leading().c);
      }
    }
    return acc;
  }

  Poly<K> factor() {
    Poly<K> base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(start, "non-negative integer exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 1000) throw ParseError(start, "exponent at most 1000");
      Poly<K> r = Poly<K>::constant(ring_, K(1));
      for (unsigned long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Poly<K> atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "number, name or '('");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<K> inner = expr();
      if (!eat(')')) throw ParseError(pos_, "')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Rational q(std::string(s_.substr(start, pos_ - start)), 10);
      return Poly<K>::constant(ring_, K(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(s_.substr(start, pos_ - start));
      const auto& vars = ring_->vars();
      if (auto it = std::find(vars.begin(), vars.end(), name); it != vars.end()) {
        return Poly<K>::variable(ring_, static_cast<std::size_t>(it - vars.begin()));
      }
      if constexpr (std::is_same_v<K, RatFun>) {
        const auto& params = ring_->params();
        if (auto it = std::find(params.begin(), params.end(), name); it != params.end()) {
          auto idx = static_cast<std::size_t>(it - params.begin());
          return Poly<K>::constant(ring_, RatFun(ParamPoly::variable(idx)));
        }
      }
      throw UnknownSymbol(name);
    }
    throw ParseError(pos_, "number, name or '('");
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class K>
Poly<K> parse_poly(std::string_view text, const RingPtr& ring) {
  const bool ratfun = std::is_same_v<K, RatFun>;
  if (ratfun != (ring->mode() == CoeffMode::ratfun)) {
    throw Error("coefficient type does not match the ring's coefficient mode");
  }
  return Parser<K>(text, ring).parse();
}

template Poly<Rational> parse_poly(std::string_view, const RingPtr&);
template Poly<RatFun> parse_poly(std::string_view, const RingPtr&);

RatFun parse_ratfun(std::string_view text, const std::vector<std::string>& param_names) {
  RingPtr ring = Ring::make(param_names, {}, TermOrder::grevlex, 0, CoeffMode::ratfun);
  Poly<RatFun> p = parse_poly<RatFun>(text, ring);
  return p.is_zero() ? RatFun() : p.leading().c;
}

}  // namespace smod
