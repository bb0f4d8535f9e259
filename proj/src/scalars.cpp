#include "smod/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "smod/errors.hpp"

namespace smod {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw ParseError(0, "rational literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto all_digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
  };
  std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!all_digits(i, num_end)) throw ParseError(i, "digits");
  if (slash != std::string::npos && !all_digits(slash + 1, s.size())) {
    throw ParseError(slash + 1, "denominator digits");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError(0, "rational literal");
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

std::vector<std::string> default_param_names(std::size_t m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 0; i < m; ++i) names.push_back("u" + std::to_string(i + 1));
  return names;
}

namespace {

void trim(ParamExps& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

ParamExps exps_mul(const ParamExps& a, const ParamExps& b) {
  ParamExps r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] + a[i]);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] + b[i]);
  return r;
}

bool exps_divides(const ParamExps& a, const ParamExps& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

ParamExps exps_div(const ParamExps& b, const ParamExps& a) {
  ParamExps r = b;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] - a[i]);
  trim(r);
  return r;
}

std::string format_exps(const ParamExps& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "u" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

ParamPoly::ParamPoly(long c) {
  if (c != 0) terms_.emplace(ParamExps{}, Rational(c));
}

ParamPoly::ParamPoly(const Rational& c) {
  if (c != 0) terms_.emplace(ParamExps{}, c);
}

ParamPoly ParamPoly::variable(std::size_t index) {
  ParamExps e(index + 1, 0);
  e[index] = 1;
  return monomial(std::move(e), Rational(1));
}

ParamPoly ParamPoly::monomial(ParamExps exps, const Rational& c) {
  ParamPoly p;
  trim(exps);
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool ParamPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

Rational ParamPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->first.empty() ? terms_.begin()->second : Rational(0);
}

unsigned ParamPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    if (var < e.size()) d = std::max<unsigned>(d, e[var]);
  }
  return d;
}

std::size_t ParamPoly::width() const {
  std::size_t w = 0;
  for (const auto& [e, c] : terms_) w = std::max(w, e.size());
  return w;
}

Rational ParamPoly::eval(std::span<const Rational> alpha) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= alpha.size()) throw Error("substitution point too short for parameter u" + std::to_string(i + 1));
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), alpha[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), alpha[i].get_den_mpz_t(), e[i]);
      t *= p;
    }
    sum += t;
  }
  return sum;
}

ParamPoly ParamPoly::monic() const {
  if (is_zero()) return *this;
  const Rational lc = leading_coeff();
  if (lc == 1) return *this;
  return scaled(1 / lc);
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  ParamPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
  return r;
}

void ParamPoly::add_term(const ParamExps& e, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(exps_mul(ea, eb), ca * cb);
  }
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

std::string ParamPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    std::string mono = format_exps(e, names);
    std::string body;
    if (mono.empty()) {
      body = smod::to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = smod::to_string(mag) + "*" + mono;
    }
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::string ParamPoly::to_string() const { return to_string(default_param_names(width())); }

std::optional<ParamPoly> divide_exact(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  ParamPoly q;
  ParamPoly r = a;
  const ParamExps& lb = b.leading_exps();
  const Rational& cb = b.leading_coeff();
  while (!r.is_zero()) {
    const ParamExps lr = r.leading_exps();
    if (!exps_divides(lb, lr)) return std::nullopt;
    ParamPoly t = ParamPoly::monomial(exps_div(lr, lb), r.leading_coeff() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

// Lowest-index parameter occurring in p, or npos.
std::size_t first_var(const ParamPoly& p) {
  std::size_t best = std::string::npos;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size() && i < best; ++i) {
      if (e[i] != 0) {
        best = i;
        break;
      }
    }
  }
  return best;
}

// Coefficients of p viewed as a polynomial in u_var, keyed by degree.
std::map<unsigned, ParamPoly> split(const ParamPoly& p, std::size_t var) {
  std::map<unsigned, ParamPoly> out;
  for (const auto& [e, c] : p.terms()) {
    unsigned d = var < e.size() ? e[var] : 0;
    ParamExps rest = e;
    if (var < rest.size()) rest[var] = 0;
    out[d] += ParamPoly::monomial(std::move(rest), c);
  }
  return out;
}

ParamPoly var_power(std::size_t var, unsigned d) {
  ParamExps e(var + 1, 0);
  e[var] = static_cast<std::uint16_t>(d);
  return ParamPoly::monomial(std::move(e), Rational(1));
}

ParamPoly content_in(const ParamPoly& p, std::size_t var) {
  ParamPoly g;
  for (const auto& [d, c] : split(p, var)) {
    g = param_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

ParamPoly exact(const ParamPoly& a, const ParamPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal: inexact division in gcd");
  return *std::move(q);
}

ParamPoly primitive_part(const ParamPoly& p, std::size_t var) {
  return exact(p, content_in(p, var)).monic();
}

ParamPoly pseudo_remainder(const ParamPoly& a, const ParamPoly& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const ParamPoly lb = split(b, var).rbegin()->second;
  ParamPoly r = a;
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(var);
    if (dr < db) break;
    const ParamPoly lr = split(r, var).rbegin()->second;
    r = lb * r - lr * var_power(var, dr - db) * b;
  }
  return r;
}

}  // namespace

ParamPoly param_gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);
  const std::size_t va = first_var(a);
  const std::size_t vb = first_var(b);
  const std::size_t v = std::min(va, vb);
  if (a.degree_in(v) == 0) return param_gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return param_gcd(content_in(a, v), b);

  const ParamPoly ca = content_in(a, v);
  const ParamPoly cb = content_in(b, v);
  const ParamPoly c = param_gcd(ca, cb);
  ParamPoly p = exact(a, ca).monic();
  ParamPoly q = exact(b, cb).monic();
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (!q.is_zero()) {
    if (q.degree_in(v) == 0) {
      p = ParamPoly(1);
      break;
    }
    ParamPoly r = pseudo_remainder(p, q, v);
    p = std::move(q);
    q = r.is_zero() ? ParamPoly() : primitive_part(r, v);
  }
  return (c * p).monic();
}

// --- RatFun -----------------------------------------------------------------

RatFun::RatFun(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = ParamPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    ParamPoly g = param_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact(num_, g);
      den_ = exact(den_, g);
    }
  }
  const Rational lc = den_.leading_coeff();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

std::size_t RatFun::width() const { return std::max(num_.width(), den_.width()); }

Rational RatFun::eval(std::span<const Rational> alpha) const {
  return eval(alpha, default_param_names(std::max(width(), alpha.size())));
}

Rational RatFun::eval(std::span<const Rational> alpha, const std::vector<std::string>& names) const {
  const Rational d = den_.eval(alpha);
  if (d == 0) throw BadSubstitution(den_.to_string(names));
  return num_.eval(alpha) / d;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFun(den_, num_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFun();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  if (o.is_constant()) {
    num_ = num_.scaled(o.num_.constant_value());
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw DivisionByZero();
  return *this *= o.inverse();
}

std::string RatFun::to_string(const std::vector<std::string>& names) const {
  if (den_.is_one()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

std::string RatFun::to_string() const { return to_string(default_param_names(width())); }

std::vector<std::string> SubstPoint::to_strings() const {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(smod::to_string(v));
  return out;
}

SubstPoint SubstPoint::parse(std::string_view text) {
  SubstPoint p;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    bool blank = std::all_of(item.begin(), item.end(),
                             [](unsigned char c) { return std::isspace(c); });
    if (!(blank && text.find(',') == std::string_view::npos && p.values.empty())) {
      p.values.push_back(parse_rational(item));
    }
    start = comma + 1;
  }
  return p;
}

Rational ratfun_eval(const RatFun& a, const SubstPoint& alpha) { return a.eval(alpha.span()); }

}  // namespace smod
