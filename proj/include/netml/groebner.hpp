#pragma once

// Buchberger's algorithm over Q with the Gebauer-Moeller pair criteria,
// normal forms, elimination, Rabinowitsch localization and standard
// monomial counting.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netml/mpoly.hpp"
#include "netml/qla.hpp"

namespace netml {

struct GroebnerOptions {
  /// Per-variable weights for the degree used in pair selection; empty
  /// means standard degree. They never change the resulting basis.
  std::vector<unsigned> weights;
};

namespace detail {

struct Term {
  Monomial m;
  mpz_class c;
};

/// Integer polynomial with terms sorted in decreasing order.
struct IPoly {
  std::vector<Term> t;

  bool zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().m; }
  const mpz_class& lc() const { return t.front().c; }
};

class Ring {
 public:
  Ring(std::size_t n, MonomialOrder ord, std::vector<unsigned> weights)
      : n_(n), ord_(ord), w_(std::move(weights)) {
    if (w_.empty()) w_.assign(n_, 1);
  }

  std::size_t nvars() const { return n_; }
  const MonomialOrder& order() const { return ord_; }

  int cmp(const Monomial& a, const Monomial& b) const { return ord_.compare(a, b, n_); }

  unsigned wdeg(const Monomial& m) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += w_[i] * m.e[i];
    return d;
  }

  void sort(IPoly& p) const {
    std::sort(p.t.begin(), p.t.end(), [&](const Term& a, const Term& b) { return cmp(a.m, b.m) > 0; });
  }

  /// Integer primitive representative of a rational polynomial, positive
  /// leading coefficient. Returns the factor f with result = f * p.
  IPoly from_poly(const Poly& p, Rat* factor = nullptr) const {
    IPoly r;
    mpz_class den = 1;
    for (const auto& [m, c] : p.terms()) den = lcm(den, mpz_class(c.get_den()));
    r.t.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
      mpz_class v = c.get_num() * (den / c.get_den());
      r.t.push_back({m, std::move(v)});
    }
    sort(r);
    Rat f(den);
    mpz_class g = content(r);
    if (!r.zero() && r.lc() < 0) g = -g;
    if (g != 0 && g != 1) {
      divide(r, g);
      f /= Rat(g);
    }
    if (factor) *factor = f;
    return r;
  }

  Poly to_poly(const IPoly& p, const VarList& vars, bool monic) const {
    Poly out(vars);
    if (p.zero()) return out;
    Rat s = monic ? Rat(1) / Rat(p.lc()) : Rat(1);
    for (const auto& t : p.t) out.add_term(t.m, Rat(t.c) * s);
    return out;
  }

  static mpz_class content(const IPoly& p) {
    mpz_class g = 0;
    for (const auto& t : p.t) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  static void divide(IPoly& p, const mpz_class& g) {
    for (auto& t : p.t) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }

  /// Makes p primitive with positive leading coefficient.
  static void normalize(IPoly& p) {
    if (p.zero()) return;
    mpz_class g = content(p);
    if (p.lc() < 0) g = -g;
    if (g != 1) divide(p, g);
  }

  /// Returns a * p - b * shift * g, where the leading terms cancel; terms
  /// of p before `from` are ignored.
  IPoly combine(const IPoly& p, std::size_t from, const mpz_class& a, const mpz_class& b,
                const Monomial& shift, const IPoly& g) const {
    IPoly r;
    r.t.reserve(p.t.size() - from + g.t.size());
    std::size_t i = from + 1, j = 1;
    Monomial gm;
    bool have_gm = false;
    mpz_class tmp;
    while (i < p.t.size() || j < g.t.size()) {
      if (j < g.t.size() && !have_gm) {
        gm = g.t[j].m * shift;
        have_gm = true;
      }
      int c;
      if (i == p.t.size()) {
        c = -1;
      } else if (j == g.t.size()) {
        c = 1;
      } else {
        c = cmp(p.t[i].m, gm);
      }
      if (c > 0) {
        r.t.push_back({p.t[i].m, a * p.t[i].c});
        ++i;
      } else if (c < 0) {
        tmp = b * g.t[j].c;
        r.t.push_back({gm, -tmp});
        ++j;
        have_gm = false;
      } else {
        tmp = a * p.t[i].c;
        mpz_submul(tmp.get_mpz_t(), b.get_mpz_t(), g.t[j].c.get_mpz_t());
        if (tmp != 0) r.t.push_back({gm, tmp});
        ++i;
        ++j;
        have_gm = false;
      }
    }
    return r;
  }

  /// Reduces p by `divisors`. With full == false only the leading term is
  /// reduced away; otherwise every term. When `mult` is given it is scaled
  /// so that the returned polynomial equals mult * p modulo the divisors.
  IPoly reduce(IPoly p, const std::vector<const IPoly*>& divisors, bool full, Rat* mult = nullptr) const {
    std::vector<Term> done;
    std::size_t s = 0;  // p.t[0, s) are already moved to `done`
    std::size_t steps = 0;
    while (s < p.t.size()) {
      const Monomial& lead = p.t[s].m;
      const IPoly* div = nullptr;
      for (const IPoly* g : divisors) {
        if (g->lm().divides(lead) && (!div || g->t.size() < div->t.size())) div = g;
      }
      if (!div) {
        if (!full) break;
        done.push_back(std::move(p.t[s]));
        ++s;
        continue;
      }
      mpz_class d = gcd(p.t[s].c, div->lc());
      mpz_class a = div->lc() / d;
      mpz_class b = p.t[s].c / d;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      Monomial shift = lead / div->lm();
      p = combine(p, s, a, b, shift, *div);
      s = 0;
      if (a != 1) {
        for (auto& t : done) t.c *= a;
        if (mult) *mult *= Rat(a);
      }
      if (++steps % 16 == 0) {
        mpz_class g = 0;
        for (const auto& t : done) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        for (const auto& t : p.t) {
          if (g == 1) break;
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        }
        if (g > 1) {
          for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
          divide(p, g);
          if (mult) *mult /= Rat(g);
        }
      }
    }
    if (!done.empty()) {
      done.insert(done.end(), std::make_move_iterator(p.t.begin() + static_cast<std::ptrdiff_t>(s)),
                  std::make_move_iterator(p.t.end()));
      p.t = std::move(done);
    }
    return p;
  }

  IPoly spoly(const IPoly& f, const IPoly& g) const {
    Monomial l = lcm(f.lm(), g.lm());
    Monomial sf = l / f.lm();
    Monomial sg = l / g.lm();
    mpz_class d = gcd(f.lc(), g.lc());
    mpz_class a = g.lc() / d;
    mpz_class b = f.lc() / d;
    IPoly shifted;
    shifted.t.reserve(f.t.size());
    for (const auto& t : f.t) shifted.t.push_back({t.m * sf, t.c});
    return combine(shifted, 0, a, b, sg, g);
  }

 private:
  std::size_t n_;
  MonomialOrder ord_;
  std::vector<unsigned> w_;
};

class Buchberger {
 public:
  explicit Buchberger(const Ring& ring) : r_(ring) {}

  std::vector<IPoly> run(std::vector<IPoly> input) {
    std::sort(input.begin(), input.end(), [&](const IPoly& a, const IPoly& b) {
      unsigned da = r_.wdeg(a.lm()), db = r_.wdeg(b.lm());
      if (da != db) return da < db;
      return r_.cmp(a.lm(), b.lm()) < 0;
    });
    for (auto& f : input) {
      IPoly h = r_.reduce(std::move(f), active_refs(), false);
      if (h.zero()) continue;
      Ring::normalize(h);
      add(std::move(h));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (before(pairs_[k], pairs_[best])) best = k;
      }
      Pair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      IPoly s = r_.spoly(polys_[pr.i], polys_[pr.j]);
      IPoly h = r_.reduce(std::move(s), active_refs(), false);
      if (h.zero()) continue;
      Ring::normalize(h);
      add(std::move(h));
    }
    return interreduce();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned deg;
  };

  bool before(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (int c = r_.cmp(a.lcm, b.lcm)) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  std::vector<const IPoly*> active_refs() const {
    std::vector<const IPoly*> v;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) v.push_back(&polys_[k]);
    }
    return v;
  }

  // Gebauer-Moeller update for a new basis element.
  void add(IPoly h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    const Monomial& lh = polys_[hi].lm();

    struct Cand {
      std::size_t g;
      Monomial l;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      c.push_back({g, lcm(lh, polys_[g].lm()), lh.coprime(polys_[g].lm())});
    }
    std::vector<Cand> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q) {
          if (c[q].l.divides(c[k].l)) keep = false;
        }
        for (std::size_t q = 0; q < d.size() && keep; ++q) {
          if (d[q].l.divides(c[k].l)) keep = false;
        }
      }
      if (keep) d.push_back(c[k]);
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + d.size());
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && lcm(polys_[p.i].lm(), lh) != p.lcm && lcm(lh, polys_[p.j].lm()) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (const auto& e : d) {
      if (e.coprime) continue;
      next.push_back({e.g, hi, e.l, r_.wdeg(e.l)});
    }
    pairs_ = std::move(next);
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(polys_[g].lm())) active_[g] = false;
    }
  }

  std::vector<IPoly> interreduce() {
    std::vector<IPoly> g;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) g.push_back(polys_[k]);
    }
    std::sort(g.begin(), g.end(), [&](const IPoly& a, const IPoly& b) { return r_.cmp(a.lm(), b.lm()) < 0; });
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<const IPoly*> others;
      for (std::size_t q = 0; q < g.size(); ++q) {
        if (q != k) others.push_back(&g[q]);
      }
      // The tail is reduced with tracking so the lead term can be scaled by
      // the same multiplier.
      IPoly src;
      src.t.assign(g[k].t.begin() + 1, g[k].t.end());
      Rat mult = 1;
      IPoly red = r_.reduce(std::move(src), others, true, &mult);
      Rat lead = Rat(g[k].lc()) * mult;
      IPoly out;
      mpz_class den = lead.get_den();
      out.t.push_back({g[k].lm(), lead.get_num()});
      for (auto& t : red.t) out.t.push_back({t.m, t.c * den});
      Ring::normalize(out);
      g[k] = std::move(out);
    }
    return g;
  }

  const Ring& r_;
  std::vector<IPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// A finitely generated ideal of a polynomial ring. Copies share a cache of
/// reduced Groebner bases keyed by monomial order; concurrent readers may
/// duplicate work but always observe a complete basis.
class Ideal {
 public:
  Ideal(VarList vars, std::vector<Poly> generators) : vars_(std::move(vars)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      if (!same_context(g.vars(), vars_)) throw ContextError("ideal generator is not in the ideal's ring");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const std::vector<Poly>& generators() const { return gens_; }

  std::shared_ptr<const std::vector<Poly>> cached(const MonomialOrder& ord) const {
    std::lock_guard lock(cache_->mu);
    for (const auto& [o, gb] : cache_->entries) {
      if (o == ord) return gb;
    }
    return nullptr;
  }
  void store(const MonomialOrder& ord, std::shared_ptr<const std::vector<Poly>> gb) const {
    std::lock_guard lock(cache_->mu);
    for (const auto& [o, existing] : cache_->entries) {
      if (o == ord) return;
    }
    cache_->entries.emplace_back(ord, std::move(gb));
  }

 private:
  struct Cache {
    std::mutex mu;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<Poly>>>> entries;
  };

  VarList vars_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced Groebner basis (monic, sorted by increasing leading monomial).
inline std::vector<Poly> groebner_basis(const Ideal& ideal, const MonomialOrder& ord,
                                        const GroebnerOptions& opts = {}) {
  if (auto hit = ideal.cached(ord)) return *hit;
  detail::Ring ring(ideal.nvars(), ord, opts.weights);
  std::vector<detail::IPoly> in;
  for (const auto& g : ideal.generators()) in.push_back(ring.from_poly(g));
  detail::Buchberger bb(ring);
  auto out = bb.run(std::move(in));
  auto gb = std::make_shared<std::vector<Poly>>();
  for (const auto& p : out) gb->push_back(ring.to_poly(p, ideal.vars(), true));
  ideal.store(ord, gb);
  return *gb;
}

/// Remainder of p on division by a Groebner basis `gb` of the same ring.
inline Poly reduce_by(const Poly& p, const std::vector<Poly>& gb, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  detail::Ring ring(p.nvars(), ord, {});
  std::vector<detail::IPoly> divs;
  for (const auto& g : gb) {
    if (!same_context(g.vars(), p.vars())) throw ContextError("basis element is not in the polynomial's ring");
    divs.push_back(ring.from_poly(g));
  }
  std::vector<const detail::IPoly*> refs;
  for (const auto& d : divs) refs.push_back(&d);
  Rat factor;
  detail::IPoly ip = ring.from_poly(p, &factor);
  Rat mult = 1;
  detail::IPoly r = ring.reduce(std::move(ip), refs, true, &mult);
  // r = mult * factor * p  (mod I)
  Poly out = ring.to_poly(r, p.vars(), false);
  return out * (Rat(1) / (mult * factor));
}

inline Poly normal_form(const Poly& p, const Ideal& ideal, const MonomialOrder& ord) {
  if (!same_context(p.vars(), ideal.vars())) throw ContextError("polynomial is not in the ideal's ring");
  return reduce_by(p, groebner_basis(ideal, ord), ord);
}

inline bool contains(const Ideal& ideal, const Poly& p) {
  return normal_form(p, ideal, MonomialOrder::grevlex()).is_zero();
}

/// I ∩ Q[remaining variables], returned in the ring of the remaining
/// variables (in their original relative order).
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop, const GroebnerOptions& opts = {}) {
  const auto& names = *ideal.vars();
  std::vector<bool> dropped(names.size(), false);
  for (const auto& d : drop) dropped[var_index(ideal.vars(), d)] = true;
  std::vector<std::string> order, rest;
  std::vector<unsigned> weights;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (dropped[i]) {
      order.push_back(names[i]);
      if (!opts.weights.empty()) weights.push_back(opts.weights[i]);
    }
  }
  const std::size_t k = order.size();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!dropped[i]) {
      order.push_back(names[i]);
      rest.push_back(names[i]);
      if (!opts.weights.empty()) weights.push_back(opts.weights[i]);
    }
  }
  VarList elim_ring = make_vars(order);
  VarList rest_ring = make_vars(rest);
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(elim_ring));
  auto gb = groebner_basis(Ideal(elim_ring, gens), MonomialOrder::block(k), GroebnerOptions{weights});
  std::vector<Poly> kept;
  for (const auto& g : gb) {
    bool free = true;
    for (const auto& [m, c] : g.terms()) {
      for (std::size_t i = 0; i < k && free; ++i) {
        if (m.e[i]) free = false;
      }
      if (!free) break;
    }
    if (free) kept.push_back(g.embed(rest_ring));
  }
  return Ideal(rest_ring, std::move(kept));
}

/// Extends the ring by an auxiliary variable w and adds w*f - 1, so the
/// solutions of the result are those of I with f != 0.
inline Ideal saturate_count(const Ideal& ideal, const Poly& f) {
  std::vector<std::string> names = *ideal.vars();
  std::string w = "w";
  while (std::find(names.begin(), names.end(), w) != names.end()) w += "_";
  names.push_back(w);
  VarList ext = make_vars(names);
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(ext));
  gens.push_back(Poly::variable(ext, w) * f.embed(ext) - Poly::constant(ext, 1));
  return Ideal(ext, std::move(gens));
}

/// Leading monomials of a basis.
inline std::vector<Monomial> leading_monomials(const std::vector<Poly>& gb, const MonomialOrder& ord) {
  std::vector<Monomial> v;
  for (const auto& g : gb) v.push_back(leading_term(g, ord).first);
  return v;
}

/// Monomials outside the monomial ideal generated by `lead`, or nullopt when
/// there are infinitely many.
inline std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& lead, std::size_t nvars) {
  for (const auto& m : lead) {
    if (m.degree() == 0) return std::vector<Monomial>{};
  }
  for (std::size_t i = 0; i < nvars; ++i) {
    bool pure = false;
    for (const auto& m : lead) {
      if (m.e[i] == 0) continue;
      bool only = true;
      for (std::size_t j = 0; j < nvars; ++j) {
        if (j != i && m.e[j]) only = false;
      }
      if (only) pure = true;
    }
    if (!pure) return std::nullopt;
  }
  auto in_ideal = [&](const Monomial& m) {
    for (const auto& l : lead) {
      if (l.divides(m)) return true;
    }
    return false;
  };
  std::vector<Monomial> out;
  std::set<Monomial, MonomialStorageLess> seen{Monomial{}};
  out.push_back(Monomial{});
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t i = 0; i < nvars; ++i) {
      Monomial m = out[k] * Monomial::var(i);
      if (in_ideal(m) || !seen.insert(m).second) continue;
      out.push_back(m);
    }
  }
  return out;
}

/// dim_Q Q[x]/I, or nullopt when I is not zero-dimensional.
inline std::optional<std::size_t> quotient_dimension(const Ideal& ideal, const MonomialOrder& ord = MonomialOrder::grevlex()) {
  auto gb = groebner_basis(ideal, ord);
  auto std_mons = standard_monomials(leading_monomials(gb, ord), ideal.nvars());
  if (!std_mons) return std::nullopt;
  return std_mons->size();
}

/// Matrix of multiplication by f on Q[x]/I in the standard monomial basis
/// (column j holds the normal form of f * basis[j]).
inline QMat multiplication_matrix(const std::vector<Poly>& gb, const std::vector<Monomial>& basis, const Poly& f,
                                  const MonomialOrder& ord) {
  std::map<Monomial, std::size_t, MonomialStorageLess> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  QMat m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Poly nf = reduce_by(f * Poly::term(f.vars(), basis[j], 1), gb, ord);
    for (const auto& [mon, c] : nf.terms()) m(index.at(mon), j) = c;
  }
  return m;
}

/// dim_Q Q[x, w]/(I + <w f - 1>), i.e. the length of the solutions of I off
/// {f = 0}. For zero-dimensional I this is the stable rank of
/// multiplication by f on Q[x]/I; otherwise the auxiliary-variable ideal is
/// used directly. nullopt when the localized system is not finite.
inline std::optional<std::size_t> localized_dimension(const Ideal& ideal, const Poly& f,
                                                      const MonomialOrder& ord = MonomialOrder::grevlex()) {
  if (!same_context(ideal.vars(), f.vars())) throw ContextError("localizing polynomial is not in the ideal's ring");
  auto gb = groebner_basis(ideal, ord);
  auto basis = standard_monomials(leading_monomials(gb, ord), ideal.nvars());
  if (!basis) return quotient_dimension(saturate_count(ideal, f), ord);
  if (basis->empty()) return 0;
  QMat m = multiplication_matrix(gb, *basis, f, ord);
  QMat power = m;
  std::size_t r = rank(power);
  while (r > 0) {
    power = power * m;
    std::size_t next = rank(power);
    if (next == r) break;
    r = next;
  }
  return r;
}

}  // namespace netml
