#pragma once

// Multivariate polynomials over Q with up to kMaxVars variables.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netml/error.hpp"
#include "netml/qla.hpp"

namespace netml {

inline constexpr std::size_t kMaxVars = 10;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] > o.e[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] && o.e[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return m;
  }
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    return m;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = std::min(a.e[i], b.e[i]);
    return m;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  static Monomial var(std::size_t i, std::uint16_t power = 1) {
    Monomial m;
    m.e[i] = power;
    return m;
  }
};

/// Plain lexicographic comparison of exponent vectors; the canonical storage
/// order of Poly, independent of any term order.
struct MonomialStorageLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.e < b.e; }
};

enum class OrderKind { grevlex, lex, block };

/// A monomial order on the first `nvars` variables of a ring. `block(k)`
/// compares the first k variables by grevlex and breaks ties with grevlex on
/// the remaining ones, so it eliminates the first block.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t block_size = 0;

  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder block(std::size_t k) { return {OrderKind::block, k}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
    switch (kind) {
      case OrderKind::lex:
        for (std::size_t i = 0; i < nvars; ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
      case OrderKind::grevlex:
        return grevlex_range(a, b, 0, nvars);
      case OrderKind::block: {
        std::size_t k = std::min(block_size, nvars);
        if (int c = grevlex_range(a, b, 0, k)) return c;
        return grevlex_range(a, b, k, nvars);
      }
    }
    return 0;
  }

  std::string name() const {
    switch (kind) {
      case OrderKind::lex:
        return "lex";
      case OrderKind::grevlex:
        return "grevlex";
      case OrderKind::block:
        return "block(" + std::to_string(block_size) + ")";
    }
    return "?";
  }

 private:
  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }
};

using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
  if (names.size() > kMaxVars) throw ContextError("at most 10 variables are supported");
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) throw ContextError("duplicate variable '" + names[i] + "'");
    }
  }
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline bool same_context(const VarList& a, const VarList& b) { return a == b || *a == *b; }

inline std::size_t var_index(const VarList& vars, std::string_view name) {
  for (std::size_t i = 0; i < vars->size(); ++i) {
    if ((*vars)[i] == name) return i;
  }
  throw ContextError("unknown variable '" + std::string(name) + "'");
}

class Poly {
 public:
  using TermMap = std::map<Monomial, Rat, MonomialStorageLess>;

  explicit Poly(VarList vars) : vars_(std::move(vars)) {}

  static Poly constant(const VarList& vars, const Rat& c) {
    Poly p(vars);
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
  }
  static Poly variable(const VarList& vars, std::size_t i) {
    if (i >= vars->size()) throw ContextError("variable index out of range");
    Poly p(vars);
    p.terms_.emplace(Monomial::var(i), Rat(1));
    return p;
  }
  static Poly variable(const VarList& vars, std::string_view name) {
    return variable(vars, var_index(vars, name));
  }
  static Poly term(const VarList& vars, const Monomial& m, const Rat& c) {
    Poly p(vars);
    if (c != 0) p.terms_.emplace(m, c);
    return p;
  }

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  Rat coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m.e[var]);
    return d;
  }

  Poly& operator+=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.vars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    }
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return same_context(a.vars_, b.vars_) && a.terms_ == b.terms_;
  }

  /// Terms sorted by decreasing order.
  std::vector<std::pair<Monomial, Rat>> sorted_terms(const MonomialOrder& ord) const {
    std::vector<std::pair<Monomial, Rat>> v(terms_.begin(), terms_.end());
    const std::size_t n = nvars();
    std::sort(v.begin(), v.end(),
              [&](const auto& x, const auto& y) { return ord.compare(x.first, y.first, n) > 0; });
    return v;
  }

  /// Rewrites the polynomial in another ring, mapping variables by name.
  Poly embed(const VarList& target) const {
    if (same_context(vars_, target)) {
      Poly p = *this;
      p.vars_ = target;
      return p;
    }
    std::vector<std::size_t> map(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) map[i] = kMaxVars;
    for (const auto& [m, c] : terms_) {
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (m.e[i] && map[i] == kMaxVars) map[i] = var_index(target, (*vars_)[i]);
      }
    }
    Poly p(target);
    for (const auto& [m, c] : terms_) {
      Monomial t;
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (m.e[i]) t.e[map[i]] = m.e[i];
      }
      p.add_term(t, c);
    }
    return p;
  }

 private:
  void check(const Poly& o) const {
    if (!same_context(vars_, o.vars_)) throw ContextError("polynomials live in different rings");
  }

  VarList vars_;
  TermMap terms_;
};

inline Poly pow(const Poly& p, unsigned k) {
  Poly r = Poly::constant(p.vars(), 1);
  Poly base = p;
  while (k) {
    if (k & 1U) r = r * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return r;
}

/// Leading monomial and coefficient under `ord`.
inline std::pair<Monomial, Rat> leading_term(const Poly& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw UndefinedLeadingTermError("zero polynomial has no leading term");
  const std::size_t n = p.nvars();
  auto it = p.terms().begin();
  auto best = it;
  for (++it; it != p.terms().end(); ++it) {
    if (ord.compare(it->first, best->first, n) > 0) best = it;
  }
  return {best->first, best->second};
}

inline bool is_homogeneous(const Poly& p) {
  if (p.is_zero()) return true;
  unsigned d = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != d) return false;
  }
  return true;
}

/// Components in increasing degree; zero components are omitted.
inline std::vector<Poly> homogeneous_components(const Poly& p) {
  std::map<unsigned, Poly> parts;
  for (const auto& [m, c] : p.terms()) {
    auto it = parts.try_emplace(m.degree(), p.vars()).first;
    it->second.add_term(m, c);
  }
  std::vector<Poly> out;
  for (auto& [d, q] : parts) out.push_back(std::move(q));
  return out;
}

inline Poly derivative(const Poly& p, std::size_t var) {
  Poly d(p.vars());
  for (const auto& [m, c] : p.terms()) {
    if (m.e[var] == 0) continue;
    Monomial t = m;
    --t.e[var];
    d.add_term(t, c * m.e[var]);
  }
  return d;
}

inline Rat evaluate(const Poly& p, std::span<const Rat> point) {
  if (point.size() != p.nvars()) throw ContextError("evaluation point has the wrong length");
  Rat s = 0;
  for (const auto& [m, c] : p.terms()) {
    Rat t = c;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      for (unsigned k = 0; k < m.e[i]; ++k) t *= point[i];
    }
    s += t;
  }
  return s;
}

/// Simultaneous substitution. Every variable of p is replaced by its
/// assigned polynomial, or by the same-named variable of `target` when
/// unassigned. Assigned polynomials must live in `target`.
inline Poly substitute(const Poly& p, const std::map<std::string, Poly>& assignment,
                       const VarList& target) {
  for (const auto& [name, q] : assignment) {
    var_index(p.vars(), name);
    if (!same_context(q.vars(), target)) throw ContextError("substituted polynomial is not in the target ring");
  }
  std::vector<Poly> images;
  images.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    const auto& name = (*p.vars())[i];
    auto it = assignment.find(name);
    images.push_back(it != assignment.end() ? it->second : Poly::variable(target, name));
  }
  std::vector<std::vector<Poly>> powers(p.nvars());
  Poly out(target);
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(target, c);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (m.e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly::constant(target, 1));
      while (pw.size() <= m.e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[m.e[i]];
    }
    out += t;
  }
  return out;
}

/// Substitution of constants; the result stays in p's ring.
inline Poly substitute(const Poly& p, const std::map<std::string, Rat>& values) {
  std::map<std::string, Poly> a;
  for (const auto& [name, v] : values) a.emplace(name, Poly::constant(p.vars(), v));
  return substitute(p, a, p.vars());
}

/// Human-readable form, terms in decreasing grevlex order, e.g.
/// "3/2*x^2*y - z".
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(MonomialOrder::grevlex())) {
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (a != 1 || m.is_one()) {
      os << a.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (m.e[i] == 0) continue;
      if (wrote) os << '*';
      os << (*p.vars())[i];
      if (m.e[i] > 1) os << '^' << m.e[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace detail {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := primary ['^' integer]
// primary:= rational | variable | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view s, VarList vars) : s_(s), vars_(std::move(vars)) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("polynomial parse error at offset " + std::to_string(i_) + ": " + what);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char ch) {
    skip();
    if (i_ < s_.size() && s_[i_] == ch) {
      ++i_;
      return true;
    }
    return false;
  }
  Poly expr() {
    Poly acc(vars_);
    bool neg = false;
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    Poly t = term();
    acc += neg ? -t : t;
    while (true) {
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
  Poly term() {
    Poly t = factor();
    while (eat('*')) t = t * factor();
    return t;
  }
  Poly factor() {
    Poly b = primary();
    if (eat('^')) {
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected exponent");
      b = pow(b, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start)))));
    }
    return b;
  }
  Poly primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[i_];
    if (ch == '(') {
      ++i_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        std::size_t d0 = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (d0 == i_) fail("expected denominator");
      }
      return Poly::constant(vars_, parse_rat(s_.substr(start, i_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
        ++i_;
      }
      return Poly::variable(vars_, s_.substr(start, i_ - start));
    }
    fail(std::string("unexpected '") + ch + "'");
  }

  std::string_view s_;
  VarList vars_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text, const VarList& vars) {
  return detail::PolyParser(text, vars).parse();
}

}  // namespace netml
