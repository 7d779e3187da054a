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

#include "diffprim/diffpoly.hpp"

#include "diffprim/error.hpp"

namespace diffprim {

int DiffPoly::order_of(const std::string& base) const {
  int best = -1;
  for (const auto& s : body_.symbols()) {
    if (s.base == base) best = std::max(best, static_cast<int>(s.order));
  }
  return best;
}

std::string to_string(const DiffPoly& q) { return to_string(q.body()); }

namespace {

// Applies the derivation determined by its action on single symbols via
// Leibniz: D(c * prod s^e) = c * sum e * s^(e-1) * D(s) * rest.
template <typename Image>
MultiPoly derive_with(const MultiPoly& p, Image&& image_of) {
  MultiPoly out;
  std::map<Symbol, MultiPoly> cache;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [sym, e] : m.factors()) {
      auto it = cache.find(sym);
      if (it == cache.end()) it = cache.emplace(sym, image_of(sym)).first;
      if (it->second.is_zero()) continue;
      Monomial rest = m.with_exponent(sym, e - 1);
      MultiPoly term = it->second.mul_monomial(rest);
      term *= c * e;
      out += term;
    }
  }
  return out;
}

}  // namespace

DiffPoly formal_derive(const DiffPoly& q, unsigned times) {
  MultiPoly cur = q.body();
  for (unsigned k = 0; k < times; ++k) {
    cur = derive_with(cur, [](const Symbol& s) { return MultiPoly::variable(s.derivative()); });
  }
  return DiffPoly(std::move(cur));
}

DiffPoly lambda_derive(const DiffPoly& q, const LambdaConfig& cfg) {
  const auto* weight = std::get_if<DerivSymbol>(&cfg.weight);
  if (!weight) throw Error(ErrorKind::InvalidArgument, "lambda_derive on DiffPoly needs a symbolic weight");
  MultiPoly w = MultiPoly::variable(*weight);
  return DiffPoly(derive_with(q.body(), [&](const Symbol& s) {
    MultiPoly next = MultiPoly::variable(s.derivative());
    return s.base == cfg.lambda_base ? w * next : next;
  }));
}

RatFunc lambda_derive(const RatFunc& q, const LambdaConfig& cfg, const DiffFieldPresentation& field) {
  const auto* weight = std::get_if<FieldElement>(&cfg.weight);
  if (!weight) throw Error(ErrorKind::InvalidArgument, "lambda_derive on E[Lambda] needs a field-element weight");
  // D(s) is a rational function; bring everything over the common
  // denominator of the generator derivatives and the weight.
  MultiPoly common = weight->value().den();
  for (const auto& g : field.generators()) {
    const MultiPoly& d = field.derivative_of(g).den();
    if (!(d == common) && !d.is_constant()) common *= d;
  }
  auto scaled = [&](const RatFunc& r) { return *exact_divide(r.num() * common, r.den()); };
  auto image = [&](const Symbol& s) -> MultiPoly {
    if (s.base == cfg.lambda_base) return scaled(weight->value()) * MultiPoly::variable(s.derivative());
    if (s.order == 0 && field.is_generator(s.base)) return scaled(field.derivative_of(s.base));
    throw Error(ErrorKind::InvalidArgument, "symbol " + to_string(s) + " is neither a generator nor a Lambda");
  };
  // (n/d)' = (D(n) d - n D(d)) / (common * d^2)
  MultiPoly dn = derive_with(q.num(), image);
  MultiPoly dd = derive_with(q.den(), image);
  return normalize(RatFunc(dn * q.den() - q.num() * dd, common * q.den() * q.den()));
}

DiffPoly t_operator(const DiffPoly& q, unsigned n, const std::string& lambda_base) {
  MultiPoly out;
  for (unsigned i = 0; i <= n; ++i) {
    MultiPoly d = q.body().partial(Symbol(lambda_base, i));
    if (d.is_zero()) continue;
    out += MultiPoly::variable(Symbol(lambda_base, i + 1)) * d;
  }
  return DiffPoly(std::move(out));
}

namespace {

std::map<Symbol, RatFunc> bindings_for(const std::set<Symbol>& symbols,
                                       const std::map<std::string, FieldElement>& binding,
                                       const DiffFieldPresentation& field, const UniPoly* p, const FieldElement* b,
                                       const std::string& lambda_base) {
  std::map<std::string, std::vector<FieldElement>> prolongs;
  std::map<Symbol, RatFunc> out;
  for (const auto& s : symbols) {
    if (p && s.base == lambda_base) {
      out.emplace(s, p->derivative(s.order).evaluate(b->value()));
      continue;
    }
    auto it = binding.find(s.base);
    if (it == binding.end()) {
      if (s.order == 0 && field.is_generator(s.base)) continue;
      throw Error(ErrorKind::InvalidArgument, "unbound differential indeterminate " + to_string(s));
    }
    auto& pr = prolongs[s.base];
    if (pr.empty()) pr.push_back(it->second);
    while (pr.size() <= s.order) pr.push_back(derive_element(pr.back(), field));
    out.emplace(s, pr[s.order].value());
  }
  return out;
}

}  // namespace

FieldElement diff_substitute(const RatFunc& q, const std::map<std::string, FieldElement>& binding,
                             const DiffFieldPresentation& field) {
  return FieldElement(substitute(q, bindings_for(q.symbols(), binding, field, nullptr, nullptr, "")));
}

FieldElement diff_substitute(const DiffPoly& q, const std::map<std::string, FieldElement>& binding,
                             const DiffFieldPresentation& field) {
  return FieldElement(substitute(q.body(), bindings_for(q.body().symbols(), binding, field, nullptr, nullptr, "")));
}

FieldElement phi_p(const RatFunc& q, const UniPoly& p, const FieldElement& b, const DiffFieldPresentation& field,
                   const std::map<std::string, FieldElement>& binding, const std::string& lambda_base) {
  return FieldElement(substitute(q, bindings_for(q.symbols(), binding, field, &p, &b, lambda_base)));
}

FieldElement phi_p(const DiffPoly& q, const UniPoly& p, const FieldElement& b, const DiffFieldPresentation& field,
                   const std::map<std::string, FieldElement>& binding, const std::string& lambda_base) {
  return FieldElement(substitute(q.body(), bindings_for(q.body().symbols(), binding, field, &p, &b, lambda_base)));
}

}  // namespace diffprim
