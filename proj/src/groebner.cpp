#include "annideal/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "annideal/text.hpp"

namespace annideal {

std::strong_ordering pot_compare(const ModuleTerm& a, const ModuleTerm& b) noexcept {
  if (a.position != b.position) return b.position <=> a.position;
  return grlex_compare(a.monomial, b.monomial);
}

// ---------------------------------------------------------------- Poly

Poly Poly::from_form(const Form& f) {
  Poly p(f.field());
  if (f.is_zero()) return p;
  const int d = f.degree();
  auto c = f.coefficients();
  for (int j = 0; j <= d; ++j)
    if (!c[static_cast<std::size_t>(j)].is_zero()) p.terms_.push_back({Monomial{d - j, j}, c[static_cast<std::size_t>(j)]});
  return p;
}

Poly Poly::from_terms(const Field& field, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  Poly p(field);
  for (auto& t : terms) {
    if (!(t.coeff.field() == field)) detail::throw_mixed_fields(field, t.coeff.field());
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  }
  return p;
}

Poly Poly::parse(const Field& field, std::string_view src) {
  std::vector<Term> terms;
  for (auto& t : text::parse_terms(field, src)) {
    if (t.x < 0 || t.z < 0) throw ParseError("negative exponent in '" + std::string(src) + "'");
    terms.push_back({Monomial{t.x, t.z}, t.coeff});
  }
  return from_terms(field, std::move(terms));
}

const Term& Poly::leading_term() const {
  if (is_zero()) throw UsageError("leading term of the zero polynomial");
  return terms_.front();
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

std::vector<Form> Poly::homogeneous_components() const {
  std::map<int, std::vector<FieldElement>, std::greater<>> parts;
  for (const auto& t : terms_) {
    const int d = t.monomial.degree();
    auto& v = parts.try_emplace(d, std::vector<FieldElement>(static_cast<std::size_t>(d + 1), field_.zero())).first->second;
    v[static_cast<std::size_t>(t.monomial.z)] = t.coeff;
  }
  std::vector<Form> out;
  for (auto& [d, v] : parts) out.push_back(Form::from_coefficients(field_, std::move(v)));
  return out;
}

Form Poly::to_form() const {
  if (is_zero()) return Form::zero(field_);
  if (!is_homogeneous()) throw UsageError("polynomial " + to_string() + " is not homogeneous");
  return homogeneous_components().front();
}

Poly Poly::monic() const { return scaled(leading_term().coeff.inv()); }

Poly Poly::scaled(const FieldElement& c) const {
  if (c.is_zero()) return Poly(field_);
  Poly out(*this);
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Poly Poly::times(const Monomial& m) const {
  Poly out(*this);
  for (auto& t : out.terms_) t.monomial = t.monomial * m;
  return out;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) detail::throw_mixed_fields(a.field_, b.field_);
  Poly out(a.field_);
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].monomial > b.terms_[j].monomial)) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].monomial > a.terms_[i].monomial) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      FieldElement c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!c.is_zero()) out.terms_.push_back({a.terms_[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<Term> terms;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return Poly::from_terms(a.field_, std::move(terms));
}

std::string Poly::to_string() const {
  std::vector<text::Term> terms;
  for (const auto& t : terms_) terms.push_back({t.monomial.x, t.monomial.z, t.coeff});
  return text::render_terms(terms);
}

PolyVector::PolyVector(std::vector<Poly> components) : components_(std::move(components)) {
  if (components_.empty()) throw UsageError("PolyVector needs at least one component");
  for (const auto& p : components_)
    if (!(p.field() == components_.front().field())) detail::throw_mixed_fields(p.field(), components_.front().field());
}

bool PolyVector::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::string PolyVector::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ", ";
    out += components_[i].to_string();
  }
  return out + "]";
}

PolyVector combine(std::span<const Poly> w, std::span<const PolyVector> rows) {
  if (w.size() != rows.size() || rows.empty()) throw UsageError("combine: length mismatch");
  std::vector<Poly> acc(rows.front().size(), Poly::zero(rows.front().field()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != acc.size()) throw UsageError("combine: rows of different lengths");
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] = acc[c] + w[i] * rows[i][c];
  }
  return PolyVector(std::move(acc));
}

std::vector<Poly> to_polys(std::span<const Form> forms) {
  std::vector<Poly> out;
  for (const auto& f : forms) out.push_back(Poly::from_form(f));
  return out;
}

std::vector<Form> to_forms(std::span<const Poly> polys) {
  std::vector<Form> out;
  for (const auto& p : polys) out.push_back(p.to_form());
  return out;
}

// ---------------------------------------------------------------- module engine

namespace {

struct VTerm {
  ModuleTerm key;
  FieldElement c;
};
using Vec = std::vector<VTerm>;

bool greater(const ModuleTerm& a, const ModuleTerm& b) { return pot_compare(a, b) > 0; }

Vec to_vec(const Poly& p, int position) {
  Vec v;
  for (const auto& t : p.terms()) v.push_back({{position, t.monomial}, t.coeff});
  return v;
}

Poly from_vec(const Field& field, const Vec& v, int position) {
  std::vector<Term> terms;
  for (const auto& t : v)
    if (t.key.position == position) terms.push_back({t.key.monomial, t.c});
  return Poly::from_terms(field, std::move(terms));
}

// p[head..] - c * mono * g.
Vec sub_mul(const Vec& p, std::size_t head, const FieldElement& c, const Monomial& mono, const Vec& g) {
  Vec out;
  out.reserve(p.size() - head + g.size());
  std::size_t i = head, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j < g.size()) {
      ModuleTerm k{g[j].key.position, g[j].key.monomial * mono};
      if (i == p.size() || greater(k, p[i].key)) {
        out.push_back({k, -(c * g[j].c)});
        ++j;
        continue;
      }
      if (!greater(p[i].key, k)) {
        FieldElement v = p[i].c - c * g[j].c;
        if (!v.is_zero()) out.push_back({k, std::move(v)});
        ++i;
        ++j;
        continue;
      }
    }
    out.push_back(p[i++]);
  }
  return out;
}

Vec monic(Vec v) {
  FieldElement s = v.front().c.inv();
  for (auto& t : v) t.c *= s;
  return v;
}

struct VecDivision {
  std::vector<std::vector<Term>> quotients;
  Vec remainder;
};

VecDivision vdivide(Vec p, const std::vector<Vec>& G, bool keep_quotients) {
  VecDivision out;
  if (keep_quotients) out.quotients.resize(G.size());
  std::size_t head = 0;
  while (head < p.size()) {
    const VTerm& lt = p[head];
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      const VTerm& lg = G[i].front();
      if (lg.key.position != lt.key.position || !lg.key.monomial.divides(lt.key.monomial)) continue;
      FieldElement c = lt.c / lg.c;
      Monomial t = lt.key.monomial / lg.key.monomial;
      if (keep_quotients) out.quotients[i].push_back({t, c});
      p = sub_mul(p, head, c, t, G[i]);
      head = 0;
      reduced = true;
      break;
    }
    if (!reduced) out.remainder.push_back(p[head++]);
  }
  return out;
}

Vec vspoly(const Vec& f, const Vec& g) {
  const Monomial L = lcm(f.front().key.monomial, g.front().key.monomial);
  Vec a = sub_mul(Vec{}, 0, -(f.front().c.inv()), L / f.front().key.monomial, f);
  return sub_mul(a, 0, g.front().c.inv(), L / g.front().key.monomial, g);
}

bool coprime(const Monomial& a, const Monomial& b) { return std::min(a.x, b.x) == 0 && std::min(a.z, b.z) == 0; }

std::vector<Vec> vbuchberger(std::vector<Vec> gens, bool ideal) {
  std::vector<Vec> G;
  for (auto& g : gens)
    if (!g.empty()) G.push_back(monic(std::move(g)));
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (G[i].front().key.position == G[j].front().key.position) pending.insert({i, j});
  auto lcm_key = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return ModuleTerm{G[pr.first].front().key.position,
                      lcm(G[pr.first].front().key.monomial, G[pr.second].front().key.monomial)};
  };
  auto in_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };
  while (!pending.empty()) {
    auto best = pending.begin();
    ModuleTerm best_key = lcm_key(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      ModuleTerm k = lcm_key(*it);
      if (greater(best_key, k)) {
        best = it;
        best_key = k;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);
    const Monomial& mi = G[i].front().key.monomial;
    const Monomial& mj = G[j].front().key.monomial;
    if (ideal && coprime(mi, mj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j || G[k].front().key.position != best_key.position) continue;
      chain = G[k].front().key.monomial.divides(best_key.monomial) && !in_pending(i, k) && !in_pending(j, k);
    }
    if (chain) continue;
    Vec r = vdivide(vspoly(G[i], G[j]), G, false).remainder;
    if (r.empty()) continue;
    const std::size_t n = G.size();
    G.push_back(monic(std::move(r)));
    for (std::size_t l = 0; l < n; ++l)
      if (G[l].front().key.position == G[n].front().key.position) pending.insert({l, n});
  }
  return G;
}

bool vis_groebner(const std::vector<Vec>& G) {
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (G[i].front().key.position != G[j].front().key.position) continue;
      if (!vdivide(vspoly(G[i], G[j]), G, false).remainder.empty()) return false;
    }
  return true;
}

std::vector<Vec> vminimalize(const std::vector<Vec>& G) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < G.size(); ++i) {
    const ModuleTerm& li = G[i].front().key;
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const ModuleTerm& lj = G[j].front().key;
      if (lj.position != li.position || !lj.monomial.divides(li.monomial)) continue;
      redundant = !(lj.monomial == li.monomial) || j < i;
    }
    if (!redundant) out.push_back(monic(G[i]));
  }
  return out;
}

std::vector<Vec> vreduce(const std::vector<Vec>& G) {
  std::vector<Vec> out = vminimalize(G);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) others.push_back(out[j]);
    out[i] = vdivide(out[i], others, false).remainder;
  }
  std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
    const ModuleTerm& ka = a.front().key;
    const ModuleTerm& kb = b.front().key;
    if (ka.position != kb.position) return ka.position < kb.position;
    if (ka.monomial.x != kb.monomial.x) return ka.monomial.x > kb.monomial.x;
    return ka.monomial.z > kb.monomial.z;
  });
  return out;
}

std::vector<Vec> vecs_of(std::span<const Poly> ps) {
  std::vector<Vec> out;
  for (const auto& p : ps) {
    if (p.is_zero()) throw UsageError("zero polynomial in a basis");
    out.push_back(to_vec(p, 0));
  }
  return out;
}

std::vector<Poly> polys_of(const Field& field, const std::vector<Vec>& vs) {
  std::vector<Poly> out;
  for (const auto& v : vs) out.push_back(from_vec(field, v, 0));
  return out;
}

const Field& field_of(std::span<const Poly> ps) {
  if (ps.empty()) throw UsageError("empty generator list");
  return ps.front().field();
}

}  // namespace

// ---------------------------------------------------------------- ideal operations

Poly spoly(const Poly& g, const Poly& h) {
  if (g.is_zero() || h.is_zero()) throw UsageError("spoly of zero");
  return from_vec(g.field(), vspoly(to_vec(g, 0), to_vec(h, 0)), 0);
}

Form spoly(const Form& g, const Form& h) { return spoly(Poly::from_form(g), Poly::from_form(h)).to_form(); }

Division divide(const Poly& p, std::span<const Poly> G) {
  auto res = vdivide(to_vec(p, 0), vecs_of(G), true);
  Division out{{}, from_vec(p.field(), res.remainder, 0)};
  for (auto& q : res.quotients) out.quotients.push_back(Poly::from_terms(p.field(), std::move(q)));
  return out;
}

Poly remainder(const Poly& p, std::span<const Poly> G) {
  return from_vec(p.field(), vdivide(to_vec(p, 0), vecs_of(G), false).remainder, 0);
}

Form remainder(const Form& p, std::span<const Form> G) {
  auto polys = to_polys(G);
  return remainder(Poly::from_form(p), polys).to_form();
}

std::vector<Poly> buchberger(std::span<const Poly> gens) {
  const Field& field = field_of(gens);
  std::vector<Vec> vs;
  for (const auto& p : gens)
    if (!p.is_zero()) vs.push_back(to_vec(p, 0));
  return polys_of(field, vbuchberger(std::move(vs), true));
}

std::vector<Form> buchberger(std::span<const Form> gens) {
  auto polys = to_polys(gens);
  auto gb = buchberger(polys);
  return to_forms(gb);
}

bool is_groebner(std::span<const Poly> G) { return vis_groebner(vecs_of(G)); }

bool is_minimal(std::span<const Poly> G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero() || !G[i].leading_term().coeff.is_one()) return false;
    for (std::size_t j = 0; j < G.size(); ++j)
      if (i != j && G[j].leading_monomial().divides(G[i].leading_monomial())) return false;
  }
  return is_groebner(G);
}

bool is_reduced(std::span<const Poly> G) {
  if (!is_minimal(G)) return false;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (const auto& t : G[i].terms())
      for (std::size_t j = 0; j < G.size(); ++j)
        if (i != j && G[j].leading_monomial().divides(t.monomial)) return false;
  return true;
}

bool is_groebner(std::span<const Form> G) {
  auto p = to_polys(G);
  return is_groebner(p);
}
bool is_minimal(std::span<const Form> G) {
  auto p = to_polys(G);
  return is_minimal(p);
}
bool is_reduced(std::span<const Form> G) {
  auto p = to_polys(G);
  return is_reduced(p);
}

std::vector<Poly> minimalize(std::span<const Poly> G) { return polys_of(field_of(G), vminimalize(vecs_of(G))); }

std::vector<Poly> reduce_gb(std::span<const Poly> G) { return polys_of(field_of(G), vreduce(vecs_of(G))); }

std::vector<Form> reduce_gb(std::span<const Form> G) {
  auto p = to_polys(G);
  auto r = reduce_gb(p);
  return to_forms(r);
}

// ---------------------------------------------------------------- syzygies

std::vector<PolyVector> syzygy_basis(std::span<const PolyVector> rows) {
  if (rows.empty()) return {};
  const Field& field = rows.front().field();
  const int e = static_cast<int>(rows.front().size());
  const int k = static_cast<int>(rows.size());
  std::vector<Vec> gens;
  for (int i = 0; i < k; ++i) {
    const PolyVector& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != e) throw UsageError("syzygy_basis: rows of different lengths");
    if (!(row.field() == field)) detail::throw_mixed_fields(field, row.field());
    Vec v;
    for (int c = 0; c < e; ++c)
      for (const auto& t : row[static_cast<std::size_t>(c)].terms()) v.push_back({{c, t.monomial}, t.coeff});
    v.push_back({{e + i, Monomial{0, 0}}, field.one()});
    gens.push_back(std::move(v));
  }
  std::vector<Vec> syz;
  for (auto& g : vbuchberger(std::move(gens), false))
    if (g.front().key.position >= e) syz.push_back(std::move(g));
  std::vector<PolyVector> out;
  for (const auto& v : vreduce(syz)) {
    std::vector<Poly> comps;
    for (int i = 0; i < k; ++i) comps.push_back(from_vec(field, v, e + i));
    out.emplace_back(std::move(comps));
  }
  return out;
}

std::vector<Form> intersect_ideals(std::span<const Form> A, std::span<const Form> B) {
  if (A.empty() || B.empty()) throw UsageError("intersect_ideals: empty generator list");
  const Field& field = A.front().field();
  const Poly zero = Poly::zero(field);
  const Poly one = Poly::from_form(Form::monomial(field, Monomial{0, 0}));
  std::vector<PolyVector> rows;
  rows.emplace_back(std::vector<Poly>{one, one});
  for (const auto& f : A) rows.emplace_back(std::vector<Poly>{Poly::from_form(f), zero});
  for (const auto& g : B) rows.emplace_back(std::vector<Poly>{zero, Poly::from_form(g)});
  std::vector<Poly> parts;
  for (const auto& w : syzygy_basis(rows))
    for (const auto& f : w[0].homogeneous_components()) parts.push_back(Poly::from_form(f));
  if (parts.empty()) throw InvariantViolation("intersect_ideals: empty intersection basis");
  auto gb = buchberger(parts);
  auto reduced = reduce_gb(gb);
  return to_forms(reduced);
}

std::vector<Form> intersect_ideals(const ViablePair& f, const ViablePair& g) {
  const Form a[] = {f.f1, f.f2};
  const Form b[] = {g.f1, g.f2};
  return intersect_ideals(a, b);
}

}  // namespace annideal
