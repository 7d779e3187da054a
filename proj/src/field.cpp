// Copyright 2026 The diffprim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diffprim/field.hpp"

#include <algorithm>
#include <set>

#include "diffprim/error.hpp"
#include "diffprim/linalg.hpp"
#include "diffprim/random.hpp"
#include "modular.hpp"
#include "multimodular.hpp"

namespace diffprim {

std::string to_string(const FieldElement& f) { return to_string(f.value()); }

DiffFieldPresentation::DiffFieldPresentation(std::vector<std::string> generators,
                                             std::map<std::string, RatFunc> derivation)
    : generators_(std::move(generators)), derivation_(std::move(derivation)) {
  if (generators_.empty()) throw Error(ErrorKind::InvalidArgument, "a field needs at least one generator");
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!is_valid_var_name(g)) throw Error(ErrorKind::InvalidArgument, "invalid generator name '" + g + "'");
    if (!seen.insert(g).second) throw Error(ErrorKind::DuplicateGenerator, "duplicate generator '" + g + "'");
    if (!derivation_.count(g)) throw Error(ErrorKind::MissingDerivation, "no derivation given for '" + g + "'");
  }
  for (auto& [name, value] : derivation_) {
    if (!seen.count(name)) throw Error(ErrorKind::UnknownVariable, "derivation for unknown generator '" + name + "'");
    for (const auto& s : value.symbols()) {
      if (s.order != 0 || !seen.count(s.base)) {
        throw Error(ErrorKind::UnknownVariable, "derivation of '" + name + "' mentions unknown '" + to_string(s) + "'");
      }
    }
    value = normalize(value);
  }
}

const RatFunc& DiffFieldPresentation::derivative_of(const std::string& generator) const {
  auto it = derivation_.find(generator);
  if (it == derivation_.end()) throw Error(ErrorKind::UnknownVariable, "unknown generator '" + generator + "'");
  return it->second;
}

bool DiffFieldPresentation::is_generator(const std::string& name) const {
  return derivation_.count(name) > 0;
}

FieldElement DiffFieldPresentation::generator(const std::string& name) const {
  if (!is_generator(name)) throw Error(ErrorKind::UnknownVariable, "unknown generator '" + name + "'");
  return FieldElement(RatFunc::variable(Symbol(name)));
}

void DiffFieldPresentation::check_element(const FieldElement& f) const {
  for (const auto& s : f.value().symbols()) {
    if (s.order != 0 || !is_generator(s.base)) {
      throw Error(ErrorKind::UnknownVariable, "element mentions unknown symbol '" + to_string(s) + "'");
    }
  }
}

namespace {

RatFunc derive_polynomial(const MultiPoly& p, const DiffFieldPresentation& field) {
  RatFunc out;
  for (const auto& s : p.symbols()) {
    MultiPoly dp = p.partial(s);
    if (dp.is_zero()) continue;
    const RatFunc& ds = field.derivative_of(s.base);
    if (ds.is_zero()) continue;
    out += RatFunc(dp) * ds;
  }
  return out;
}

}  // namespace

FieldElement derive_element(const FieldElement& f, const DiffFieldPresentation& field, unsigned times) {
  FieldElement cur = f;
  for (unsigned k = 0; k < times; ++k) {
    const RatFunc& v = cur.value();
    RatFunc dn = derive_polynomial(v.num(), field);
    if (v.den().is_constant()) {
      cur = FieldElement(dn);
      continue;
    }
    RatFunc dd = derive_polynomial(v.den(), field);
    // (n/d)' = (n' d - n d') / d^2
    RatFunc top = dn * RatFunc(v.den()) - RatFunc(v.num()) * dd;
    cur = FieldElement(top / RatFunc(v.den() * v.den()));
  }
  return cur;
}

std::vector<FieldElement> prolongation(const FieldElement& f, const DiffFieldPresentation& field, unsigned up_to) {
  std::vector<FieldElement> out{f};
  for (unsigned i = 0; i < up_to; ++i) out.push_back(derive_element(out.back(), field));
  return out;
}

bool is_nonconstant(const FieldElement& f, const DiffFieldPresentation& field) {
  return !derive_element(f, field).is_zero();
}

namespace {

struct JacobianRow {
  MultiPoly num, den;
  std::vector<MultiPoly> num_partials, den_partials;
};

std::vector<JacobianRow> jacobian_rows(const std::vector<FieldElement>& elements,
                                       const std::vector<Symbol>& gens) {
  std::vector<JacobianRow> rows;
  for (const auto& e : elements) {
    JacobianRow r{e.value().num(), e.value().den(), {}, {}};
    for (const auto& g : gens) {
      r.num_partials.push_back(r.num.partial(g));
      r.den_partials.push_back(r.den.partial(g));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

RankResult jacobian_rank(const std::vector<FieldElement>& elements, const DiffFieldPresentation& field,
                         const RankOptions& options) {
  RankResult result;
  if (elements.empty()) return result;
  std::vector<Symbol> gens;
  for (const auto& g : field.generators()) gens.emplace_back(g);
  for (const auto& e : elements) field.check_element(e);
  auto rows = jacobian_rows(elements, gens);
  const std::size_t max_rank = std::min(elements.size(), gens.size());

  if (options.method == RankMethod::Symbolic) {
    // Row i shares the denominator d_i^2, which does not change the rank.
    Matrix<MultiPoly> m;
    for (const auto& r : rows) {
      std::vector<MultiPoly> row;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        row.push_back(r.num_partials[j] * r.den - r.num * r.den_partials[j]);
      }
      m.push_back(std::move(row));
    }
    result.rank = bareiss_rank(std::move(m));
    return result;
  }

  Rng rng(options.seed);
  constexpr int kWantedPoints = 2;
  int good = 0;
  for (int attempt = 0; attempt < options.retries && good < kWantedPoints; ++attempt) {
    Point pt;
    for (const auto& g : gens) pt[g] = Rational(rng.uniform(-options.bound, options.bound));
    Matrix<Rational> m;
    bool pole = false;
    for (const auto& r : rows) {
      Rational d = r.den.evaluate(pt);
      if (d == 0) {
        pole = true;
        break;
      }
      Rational n = r.num.evaluate(pt);
      Rational d2 = d * d;
      std::vector<Rational> row;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        Rational nt = r.num_partials[j].evaluate(pt);
        Rational dt = r.den_partials[j].is_zero() ? Rational(0) : r.den_partials[j].evaluate(pt);
        row.push_back((nt * d - n * dt) / d2);
      }
      m.push_back(std::move(row));
    }
    if (pole) continue;
    ++good;
    result.rank = std::max(result.rank, rank(std::move(m)));
    result.witness_points.push_back(std::move(pt));
    if (result.rank == max_rank) break;
  }
  if (good == 0) {
    throw Error(ErrorKind::RandomizationExhausted,
                "no pole-free evaluation point in " + std::to_string(options.retries) + " attempts");
  }
  return result;
}

std::size_t alg_trdeg(const std::vector<FieldElement>& elements, const DiffFieldPresentation& field,
                      const RankOptions& options) {
  return jacobian_rank(elements, field, options).rank;
}

TrdegReport diff_trdeg(const std::vector<FieldElement>& gens, const DiffFieldPresentation& field,
                       const RankOptions& options) {
  TrdegReport report;
  report.method = options.method;
  if (gens.empty()) return report;
  std::vector<FieldElement> all = gens;
  std::vector<FieldElement> frontier = gens;
  RankOptions opts = options;
  opts.seed = mix_seed(options.seed, 0);
  RankResult prev = jacobian_rank(all, field, opts);
  for (unsigned order = 0;; ++order) {
    for (auto& f : frontier) {
      f = derive_element(f, field);
      all.push_back(f);
    }
    opts.seed = mix_seed(options.seed, order + 1);
    RankResult next = jacobian_rank(all, field, opts);
    if (next.rank <= prev.rank) {
      report.trdeg = prev.rank;
      report.stabilization_order = order;
      report.witness_points = std::move(prev.witness_points);
      return report;
    }
    prev = std::move(next);
  }
}

// ------------------------------------------------------------- membership

Symbol tower_symbol(std::size_t index) { return Symbol("z", static_cast<unsigned>(index)); }

std::vector<std::pair<std::vector<unsigned>, Rational>> coefficient_list(const MultiPoly& p, std::size_t tower_size) {
  std::vector<std::pair<std::vector<unsigned>, Rational>> out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::vector<unsigned> exps(tower_size, 0);
    for (std::size_t i = 0; i < tower_size; ++i) exps[i] = it->first.exponent(tower_symbol(i));
    out.emplace_back(std::move(exps), it->second);
  }
  return out;
}

bool MembershipCertificate::revalidate() const {
  std::map<Symbol, RatFunc> bind;
  for (std::size_t i = 0; i < tower.size(); ++i) bind.emplace(tower_symbol(i), tower[i].value());
  for (const auto& s : numerator.symbols()) {
    if (!bind.count(s)) return false;
  }
  for (const auto& s : denominator.symbols()) {
    if (!bind.count(s)) return false;
  }
  RatFunc q = substitute(denominator, bind);
  if (q.is_zero()) return false;
  RatFunc p = substitute(numerator, bind);
  return target.value() * q == p;
}

namespace {

// Exponent vectors of total degree <= d over n variables.
void enumerate_exponents(std::size_t n, unsigned d, std::vector<unsigned>& cur, std::size_t pos,
                         std::vector<std::vector<unsigned>>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  unsigned used = 0;
  for (std::size_t i = 0; i < pos; ++i) used += cur[i];
  for (unsigned e = 0; e + used <= d; ++e) {
    cur[pos] = e;
    enumerate_exponents(n, d, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

// Filter for the membership system. Over Q the point equations
// g(pt) Q(tower(pt)) - P(tower(pt)) = 0 are implied by the polynomial
// identity, and reduction mod a prime can only lower the rank. So a point
// system of full column rank mod p proves that degree has no solution.
using modular::add_mod;
using modular::eval_mod;
using modular::inv_mod;
using modular::kPrime;
using modular::mul_mod;
using modular::pow_mod;

std::optional<std::uint64_t> eval_mod(const RatFunc& f, const std::map<Symbol, std::uint64_t>& pt) {
  auto n = eval_mod(f.num(), pt);
  auto d = eval_mod(f.den(), pt);
  if (!n || !d || *d == 0) return std::nullopt;
  return mul_mod(*n, inv_mod(*d));
}

// Reduced row echelon form mod p in place; returns the pivot columns.
std::vector<std::size_t> rref_mod(std::vector<std::vector<std::uint64_t>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const std::uint64_t inv = inv_mod(m[rank][c]);
    for (std::size_t k = c; k < cols; ++k) m[rank][k] = mul_mod(m[rank][k], inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t f = kPrime - m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] = add_mod(m[r][k], mul_mod(f, m[rank][k]));
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

class ModularPoints {
 public:
  ModularPoints(const FieldElement& target, const std::vector<FieldElement>& tower,
                const DiffFieldPresentation& field)
      : target_(target), tower_(tower), field_(field) {}

  // Supports of the reduced null basis of the point system mod p, one per
  // free column in increasing order: the free column plus the pivot columns
  // it depends on. Empty means no (P, Q) on these exponents exists; nullopt
  // means too few pole-free points turned up to say anything.
  std::optional<std::vector<std::vector<std::size_t>>> null_supports(const std::vector<std::vector<unsigned>>& q_exps,
                                                                      const std::vector<std::vector<unsigned>>& p_exps) {
    const std::size_t cols = q_exps.size() + p_exps.size();
    if (!grow(cols + 4)) return std::nullopt;
    std::vector<std::vector<std::uint64_t>> rows;
    for (std::size_t r = 0; r < cols + 4; ++r) {
      const auto& [g, t] = values_[r];
      auto mono = [&](const std::vector<unsigned>& e) {
        std::uint64_t m = 1;
        for (std::size_t i = 0; i < t.size(); ++i) m = mul_mod(m, pow_mod(t[i], e[i]));
        return m;
      };
      std::vector<std::uint64_t> row;
      for (const auto& e : q_exps) row.push_back(mul_mod(g, mono(e)));
      for (const auto& e : p_exps) {
        std::uint64_t m = mono(e);
        row.push_back(m == 0 ? 0 : kPrime - m);
      }
      rows.push_back(std::move(row));
    }
    auto pivots = rref_mod(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::size_t>> supports;
    for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) continue;
      std::vector<std::size_t> support;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (rows[r][free] != 0) support.push_back(pivots[r]);
      }
      support.push_back(free);
      std::sort(support.begin(), support.end());
      supports.push_back(std::move(support));
    }
    return supports;
  }

 private:
  // Collects pole-free points; false if too few turn up.
  bool grow(std::size_t wanted) {
    int misses = 0;
    while (values_.size() < wanted) {
      if (misses > 64) return false;
      std::map<Symbol, std::uint64_t> pt;
      for (const auto& g : field_.generators()) pt[Symbol(g)] = rng_.next() % kPrime;
      auto g = eval_mod(target_.value(), pt);
      std::vector<std::uint64_t> t;
      bool ok = g.has_value();
      for (std::size_t i = 0; ok && i < tower_.size(); ++i) {
        auto v = eval_mod(tower_[i].value(), pt);
        if (v) t.push_back(*v); else ok = false;
      }
      if (!ok) {
        ++misses;
        continue;
      }
      values_.emplace_back(*g, std::move(t));
    }
    return true;
  }

  const FieldElement& target_;
  const std::vector<FieldElement>& tower_;
  const DiffFieldPresentation& field_;
  Rng rng_{0x746f776572};
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> values_;
};

// Outcome of an exact solve on a column subset.
struct Solve {
  std::optional<MembershipCertificate> cert;
  // Null space dimension of the restricted system.
  std::size_t nullity = 0;
};

// Solves target * Q(tower) - P(tower) = 0 with Q supported on q_exps and P
// on p_exps (both in descending grlex order) by clearing denominators and
// matching monomials in the generators. Columns are q_exps then p_exps; when
// subset is given only those columns may be nonzero. The certificate is the
// first null basis vector with Q(tower) != 0, scaled so the leading nonzero
// Q coefficient is 1.
Solve solve_membership(const FieldElement& target, const std::vector<FieldElement>& tower, unsigned deg,
                       const std::vector<std::vector<unsigned>>& q_exps,
                       const std::vector<std::vector<unsigned>>& p_exps,
                       const std::vector<std::size_t>* subset = nullptr) {
  const std::size_t n = tower.size();
  const std::size_t kq = q_exps.size();
  std::vector<std::size_t> cols;
  if (subset) {
    cols = *subset;
  } else {
    for (std::size_t c = 0; c < kq + p_exps.size(); ++c) cols.push_back(c);
  }
  // M_alpha = prod n_i^{alpha_i} d_i^{deg - alpha_i} = z^alpha * prod d_i^deg.
  std::vector<std::vector<MultiPoly>> num_pows(n), den_pows(n);
  for (std::size_t i = 0; i < n; ++i) {
    num_pows[i].push_back(MultiPoly(1));
    den_pows[i].push_back(MultiPoly(1));
    for (unsigned k = 0; k < deg; ++k) {
      num_pows[i].push_back(num_pows[i].back() * tower[i].value().num());
      den_pows[i].push_back(den_pows[i].back() * tower[i].value().den());
    }
  }
  auto cleared = [&](const std::vector<unsigned>& e) {
    MultiPoly m(1);
    for (std::size_t i = 0; i < n; ++i) {
      m *= num_pows[i][e[i]];
      if (!tower[i].value().den().is_constant()) m *= den_pows[i][deg - e[i]];
    }
    return m;
  };
  auto monomial = [&](const std::vector<unsigned>& e) {
    std::vector<Monomial::Factor> f;
    for (std::size_t i = 0; i < n; ++i) f.emplace_back(tower_symbol(i), e[i]);
    return Monomial::from_factors(std::move(f));
  };

  const MultiPoly& gn = target.value().num();
  const MultiPoly& gd = target.value().den();
  std::vector<MultiPoly> q_cleared(kq);
  std::vector<MultiPoly> columns;
  for (std::size_t c : cols) {
    if (c < kq) {
      q_cleared[c] = cleared(q_exps[c]);
      columns.push_back(gn * q_cleared[c]);
    } else {
      columns.push_back(-(gd * cleared(p_exps[c - kq])));
    }
  }

  std::map<Monomial, std::size_t, GrlexLess> row_of;
  for (const auto& c : columns) {
    for (const auto& [mono, coeff] : c.terms()) row_of.try_emplace(mono, row_of.size());
  }
  Matrix<Rational> system(row_of.size(), std::vector<Rational>(columns.size(), Rational(0)));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [mono, coeff] : columns[j].terms()) system[row_of.at(mono)][j] = coeff;
  }

  Solve out;
  auto basis = null_space(std::move(system), columns.size());
  out.nullity = basis.size();
  for (const auto& restricted : basis) {
    std::vector<Rational> v(kq + p_exps.size(), Rational(0));
    for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = restricted[j];
    MultiPoly q_value;
    for (std::size_t j = 0; j < kq; ++j) {
      if (v[j] != 0) q_value += q_cleared[j] * v[j];
    }
    if (q_value.is_zero()) continue;
    Rational scale;
    for (std::size_t j = 0; j < kq; ++j) {
      if (v[j] != 0) {
        scale = 1 / v[j];
        break;
      }
    }
    MembershipCertificate cert{target, tower, MultiPoly(), MultiPoly(), static_cast<int>(deg)};
    for (std::size_t j = 0; j < kq; ++j) cert.denominator.add_term(monomial(q_exps[j]), v[j] * scale);
    for (std::size_t j = 0; j < p_exps.size(); ++j) cert.numerator.add_term(monomial(p_exps[j]), v[kq + j] * scale);
    if (!cert.revalidate()) {
      throw Error(ErrorKind::InvalidArgument, "internal: membership certificate failed revalidation");
    }
    out.cert = std::move(cert);
    return out;
  }
  return out;
}

// Certificate from a null vector restricted to support: Q and P scaled so
// the leading nonzero Q coefficient is 1. nullopt when Q vanishes.
std::optional<MembershipCertificate> certificate_on(const FieldElement& target, const std::vector<FieldElement>& tower,
                                                    unsigned deg, const std::vector<std::vector<unsigned>>& q_exps,
                                                    const std::vector<std::vector<unsigned>>& p_exps,
                                                    const std::vector<std::size_t>& support,
                                                    const std::vector<Rational>& v) {
  const std::size_t kq = q_exps.size();
  auto monomial = [&](const std::vector<unsigned>& e) {
    std::vector<Monomial::Factor> f;
    for (std::size_t i = 0; i < e.size(); ++i) f.emplace_back(tower_symbol(i), e[i]);
    return Monomial::from_factors(std::move(f));
  };
  MembershipCertificate cert{target, tower, MultiPoly(), MultiPoly(), static_cast<int>(deg)};
  for (std::size_t j = 0; j < support.size(); ++j) {
    const std::size_t c = support[j];
    if (c < kq) {
      cert.denominator.add_term(monomial(q_exps[c]), v[j]);
    } else {
      cert.numerator.add_term(monomial(p_exps[c - kq]), v[j]);
    }
  }
  if (cert.denominator.is_zero()) return std::nullopt;
  std::map<Symbol, RatFunc> bind;
  for (std::size_t i = 0; i < tower.size(); ++i) bind.emplace(tower_symbol(i), tower[i].value());
  if (substitute(cert.denominator, bind).is_zero()) return std::nullopt;
  Rational scale;
  for (std::size_t j = 0; j < support.size(); ++j) {
    if (support[j] < kq && v[j] != 0) {
      scale = 1 / v[j];
      break;
    }
  }
  cert.denominator *= scale;
  cert.numerator *= scale;
  return cert;
}

// The exact null vector on one modular null support (last entry 1), found
// from the point system at integer points and accepted only when
// target * Q(tower) = P(tower) holds identically. nullopt if none is
// accepted; the caller then solves the coefficient system.
std::optional<std::vector<Rational>> support_vector(const FieldElement& target, const std::vector<FieldElement>& tower,
                                                    const std::vector<std::vector<unsigned>>& q_exps,
                                                    const std::vector<std::vector<unsigned>>& p_exps,
                                                    const std::vector<std::size_t>& support) {
  const std::size_t kq = q_exps.size();
  auto exps_of = [&](std::size_t c) -> const std::vector<unsigned>& { return c < kq ? q_exps[c] : p_exps[c - kq]; };
  std::set<Symbol> vars = target.value().symbols();
  for (const auto& t : tower) {
    for (const auto& g : t.value().symbols()) vars.insert(g);
  }
  Rng rng(0x737570);
  Matrix<Rational> system;
  int misses = 0;
  while (system.size() < support.size() + 8) {
    if (misses > 64) return std::nullopt;
    std::map<Symbol, Rational> pt;
    for (const auto& g : vars) pt.emplace(g, Rational(static_cast<long>(rng.uniform(-1000, 1000))));
    std::vector<Rational> t;
    Rational g;
    try {
      g = target.value().evaluate(pt);
      for (const auto& e : tower) t.push_back(e.value().evaluate(pt));
    } catch (const Error&) {
      ++misses;
      continue;
    }
    std::vector<Rational> row;
    for (std::size_t c : support) {
      Rational m = 1;
      const auto& e = exps_of(c);
      for (std::size_t i = 0; i < t.size(); ++i) {
        for (unsigned k = 0; k < e[i]; ++k) m *= t[i];
      }
      row.push_back(c < kq ? Rational(g * m) : Rational(-m));
    }
    system.push_back(std::move(row));
  }

  std::map<Symbol, RatFunc> bind;
  for (std::size_t i = 0; i < tower.size(); ++i) bind.emplace(tower_symbol(i), tower[i].value());
  auto holds = [&](const std::vector<Rational>& v) {
    MultiPoly q, p;
    for (std::size_t j = 0; j < support.size(); ++j) {
      std::vector<Monomial::Factor> f;
      const auto& e = exps_of(support[j]);
      for (std::size_t i = 0; i < e.size(); ++i) f.emplace_back(tower_symbol(i), e[i]);
      (support[j] < kq ? q : p).add_term(Monomial::from_factors(std::move(f)), v[j]);
    }
    return target.value() * substitute(q, bind) == substitute(p, bind);
  };
  return kernel_vector_multimodular(system, holds);
}

// One exponent layout at one degree. The modular null basis predicts the
// supports of the exact reduced null basis; when every support carries
// exactly one exact null vector the prediction is confirmed and the small
// solves give the same answer as the full one. Otherwise the full system
// is solved.
std::optional<MembershipCertificate> attempt(ModularPoints& points, const FieldElement& target,
                                             const std::vector<FieldElement>& tower, unsigned deg,
                                             const std::vector<std::vector<unsigned>>& q_exps,
                                             const std::vector<std::vector<unsigned>>& p_exps) {
  auto supports = points.null_supports(q_exps, p_exps);
  if (supports) {
    if (supports->empty()) return std::nullopt;
    bool confirmed = true;
    for (const auto& support : *supports) {
      if (auto v = support_vector(target, tower, q_exps, p_exps, support)) {
        if (auto cert = certificate_on(target, tower, deg, q_exps, p_exps, support, *v)) return cert;
        continue;
      }
      Solve s = solve_membership(target, tower, deg, q_exps, p_exps, &support);
      if (s.cert) return s.cert;
      if (s.nullity != 1) {
        confirmed = false;
        break;
      }
    }
    if (confirmed) return std::nullopt;
  }
  return solve_membership(target, tower, deg, q_exps, p_exps).cert;
}

}  // namespace

std::optional<MembershipCertificate> member_of_tower(const FieldElement& target,
                                                     const std::vector<FieldElement>& tower,
                                                     const DiffFieldPresentation& field, int degree_cap) {
  if (tower.empty()) throw Error(ErrorKind::InvalidArgument, "membership tower is empty");
  if (degree_cap < 0) throw Error(ErrorKind::InvalidArgument, "negative degree cap");
  field.check_element(target);
  for (const auto& t : tower) field.check_element(t);

  ModularPoints points(target, tower, field);
  const std::size_t n = tower.size();
  const std::vector<std::vector<unsigned>> constant{std::vector<unsigned>(n, 0)};

  for (int d = 0; d <= degree_cap; ++d) {
    const unsigned deg = static_cast<unsigned>(d);
    std::vector<std::vector<unsigned>> exps;
    std::vector<unsigned> cur(n, 0);
    enumerate_exponents(n, deg, cur, 0, exps);
    std::vector<Monomial> monos;
    for (const auto& e : exps) {
      std::vector<Monomial::Factor> f;
      for (std::size_t i = 0; i < n; ++i) f.emplace_back(tower_symbol(i), e[i]);
      monos.push_back(Monomial::from_factors(std::move(f)));
    }
    std::vector<std::size_t> order(exps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return GrlexLess{}(monos[b], monos[a]); });
    std::vector<std::vector<unsigned>> sorted;
    for (std::size_t idx : order) sorted.push_back(exps[idx]);

    // Polynomial expressions first, then quotients.
    if (auto cert = attempt(points, target, tower, deg, constant, sorted)) return cert;
    if (d > 0) {
      if (auto cert = attempt(points, target, tower, deg, sorted, sorted)) return cert;
    }
  }
  return std::nullopt;
}

}  // namespace diffprim
