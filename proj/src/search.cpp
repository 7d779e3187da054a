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

#include "diffprim/search.hpp"

#include <algorithm>
#include <sstream>

#include "diffprim/error.hpp"
#include "diffprim/random.hpp"
#include "diffprim/ritt.hpp"

namespace diffprim {
namespace {

RankOptions search_rank(const SearchConfig& cfg, std::uint64_t salt) {
  RankOptions o;
  o.method = cfg.symbolic_rank ? RankMethod::Symbolic : RankMethod::Randomized;
  o.seed = mix_seed(cfg.seed, salt);
  o.retries = cfg.retries;
  return o;
}

RankOptions symbolic_rank() { return RankOptions{RankMethod::Symbolic}; }

// Exact when symbolic confirmation is on, randomized otherwise.
std::size_t confirmed_trdeg(const std::vector<FieldElement>& gens, const DiffFieldPresentation& field,
                            const SearchConfig& cfg, std::uint64_t salt) {
  return diff_trdeg(gens, field, cfg.symbolic_confirm ? symbolic_rank() : search_rank(cfg, salt)).trdeg;
}

DensityResult density_core(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                           const DiffFieldPresentation& field, const SearchConfig& cfg) {
  cfg.validate();
  field.check_element(a);
  field.check_element(b);
  field.check_element(c);
  if (!is_nonconstant(b, field)) throw Error(ErrorKind::ConstantB, "density step needs a nonconstant b");

  DensityResult result;
  result.factor = c;
  result.trdeg_pair = confirmed_trdeg({a, b}, field, cfg, 0);

  CandidateEnumerator candidates(cfg.max_p_degree, cfg.max_coeff_height);
  std::optional<UniPoly> p = UniPoly();
  std::uint64_t index = 0;
  for (; p; p = candidates.next(), ++index) {
    ++result.candidates_tried;
    FieldElement candidate = p->is_zero() ? a : a + c * FieldElement(p->evaluate(b.value()));
    std::size_t t = diff_trdeg({candidate}, field, search_rank(cfg, index + 1)).trdeg;
    if (t > result.trdeg_pair) {
      throw Error(ErrorKind::InvalidArgument, "internal: candidate exceeds the transcendence degree of the pair");
    }
    if (t != result.trdeg_pair) continue;
    if (cfg.symbolic_confirm && diff_trdeg({candidate}, field, symbolic_rank()).trdeg != t) continue;
    result.p = *p;
    result.candidate = candidate;
    result.trdeg_candidate = t;
    return result;
  }
  throw Error(ErrorKind::CapExceeded,
              "density step: no p with degree <= " + std::to_string(cfg.max_p_degree) + " and height <= " +
                  std::to_string(cfg.max_coeff_height) + " after " + std::to_string(result.candidates_tried) +
                  " candidates");
}

std::optional<std::vector<MembershipCertificate>> certify_all(const std::vector<FieldElement>& targets,
                                                              const std::vector<FieldElement>& tower,
                                                              const DiffFieldPresentation& field, int cap) {
  std::vector<MembershipCertificate> certs;
  for (const auto& g : targets) {
    auto cert = member_of_tower(g, tower, field, cap);
    if (!cert) return std::nullopt;
    certs.push_back(std::move(*cert));
  }
  return certs;
}

Rational sample_rational(Rng& rng, int height) {
  Rational q(rng.uniform(-height, height), static_cast<unsigned long>(rng.uniform(1, height)));
  q.canonicalize();
  return q;
}

}  // namespace

DensityResult density_step(const FieldElement& a, const FieldElement& b, const DiffFieldPresentation& field,
                           const SearchConfig& cfg) {
  return density_core(a, b, FieldElement(1), field, cfg);
}

DensityResult density_step_with_factor(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                                       const DiffFieldPresentation& field, const SearchConfig& cfg) {
  if (c.is_zero()) throw Error(ErrorKind::ZeroFactor, "density step with a zero factor");
  return density_core(a, b, c, field, cfg);
}

std::pair<FieldElement, FieldElement> reduce_to_two(const std::vector<FieldElement>& generators,
                                                    const DiffFieldPresentation& field, const SearchConfig& cfg) {
  cfg.validate();
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "no generators given");
  std::size_t seed_index = generators.size();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    field.check_element(generators[i]);
    if (seed_index == generators.size() && is_nonconstant(generators[i], field)) seed_index = i;
  }
  if (seed_index == generators.size()) {
    throw Error(ErrorKind::NoNonconstant, "every generator is constant; no primitive element exists");
  }

  FieldElement a = generators[seed_index];
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i == seed_index) continue;
    const FieldElement& g = generators[i];
    // Fold g into a with a nonconstant element in the b slot.
    a = is_nonconstant(g, field) ? density_step(a, g, field, cfg).candidate
                                 : density_step(g, a, field, cfg).candidate;
  }
  if (generators.size() == 1) return {a, FieldElement(0)};

  auto generates_all = [&](const FieldElement& b) {
    TrdegReport pair = diff_trdeg({a, b}, field, search_rank(cfg, 7));
    std::vector<FieldElement> tower = prolongation(a, field, pair.stabilization_order);
    auto pb = prolongation(b, field, pair.stabilization_order);
    tower.insert(tower.end(), pb.begin(), pb.end());
    return certify_all(generators, tower, field, cfg.membership_degree_cap).has_value();
  };

  for (const auto& g : generators) {
    if (generates_all(g)) return {a, g};
  }
  Rng rng(mix_seed(cfg.seed, 0x6d75));
  for (int attempt = 0; attempt < cfg.retries; ++attempt) {
    FieldElement b(0);
    for (const auto& g : generators) {
      long mu = 0;
      while (mu == 0) mu = rng.uniform(-cfg.max_coeff_height, cfg.max_coeff_height);
      b = b + FieldElement(Rational(mu)) * g;
    }
    if (generates_all(b)) return {a, b};
  }
  throw Error(ErrorKind::CapExceeded, "reduce_to_two: no companion b verified after " +
                                          std::to_string(cfg.retries) + " random folds");
}

PrimitiveResult lambda_search(const FieldElement& a, const FieldElement& b, const DiffFieldPresentation& field,
                              const SearchConfig& cfg) {
  cfg.validate();
  field.check_element(a);
  field.check_element(b);
  if (!is_nonconstant(a, field) && !is_nonconstant(b, field)) {
    throw Error(ErrorKind::NoNonconstant, "lambda_search: a and b are both constant");
  }
  const std::size_t n = confirmed_trdeg({a}, field, cfg, 1);
  if (confirmed_trdeg({a, b}, field, cfg, 2) != n) {
    throw Error(ErrorKind::InvalidArgument, "lambda_search: trdeg k<a> differs from trdeg k<a, b>");
  }
  std::vector<FieldElement> powers{a};
  for (std::size_t i = 1; i < n + 2; ++i) powers.push_back(powers.back() * a);

  Rng rng(mix_seed(cfg.seed, 0x6c616d));
  std::ostringstream rejected;
  for (int attempt = 0; attempt < cfg.retries; ++attempt) {
    // Attempt r < n + 2 keeps only lambda_1..lambda_{r+1}, so low-degree
    // candidates come first; later attempts sample every lambda.
    const std::size_t support = std::min(n + 2, static_cast<std::size_t>(attempt) + 1);
    std::vector<Rational> lambdas;
    FieldElement z = b;
    for (std::size_t i = 0; i < n + 2; ++i) {
      Rational l = 0;
      while (i < support && l == 0) l = sample_rational(rng, cfg.lambda_height);
      lambdas.push_back(l);
      if (lambdas.back() != 0) z = z + FieldElement(lambdas.back()) * powers[i];
    }
    std::string why;
    if (confirmed_trdeg({z}, field, cfg, 100 + static_cast<std::uint64_t>(attempt)) != n) {
      why = "trdeg";
    } else if (auto certs = certify_all({a, b}, prolongation(z, field, static_cast<unsigned>(n)), field,
                                        cfg.membership_degree_cap)) {
      PrimitiveResult result;
      result.primitive = z;
      result.n = n;
      result.lambdas = std::move(lambdas);
      result.generators = {a, b};
      result.certificates = std::move(*certs);
      result.a = a;
      result.b = b;
      return result;
    } else {
      why = "membership";
    }
    rejected << "\n  [";
    for (std::size_t i = 0; i < lambdas.size(); ++i) rejected << (i ? ", " : "") << lambdas[i].get_str();
    rejected << "]: " << why;
  }
  throw Error(ErrorKind::CapExceeded,
              "lambda_search: no lambda vector accepted in " + std::to_string(cfg.retries) + " samples" + rejected.str());
}

PrimitiveResult find_primitive(const std::vector<FieldElement>& generators, const DiffFieldPresentation& field,
                               const SearchConfig& cfg) {
  auto [a, b] = reduce_to_two(generators, field, cfg);
  const std::size_t n = confirmed_trdeg({a}, field, cfg, 3);
  auto tower = prolongation(a, field, static_cast<unsigned>(n));
  if (auto certs = certify_all(generators, tower, field, cfg.membership_degree_cap)) {
    PrimitiveResult result;
    result.primitive = a;
    result.n = n;
    result.generators = generators;
    result.certificates = std::move(*certs);
    result.a = a;
    result.b = b;
    return result;
  }
  PrimitiveResult result = lambda_search(a, b, field, cfg);
  auto z_tower = prolongation(result.primitive, field, static_cast<unsigned>(result.n));
  auto certs = certify_all(generators, z_tower, field, cfg.membership_degree_cap);
  if (!certs) {
    throw Error(ErrorKind::CapExceeded, "find_primitive: an input generator is not certified within degree cap " +
                                            std::to_string(cfg.membership_degree_cap));
  }
  result.generators = generators;
  result.certificates = std::move(*certs);
  return result;
}

bool revalidate(const DensityResult& r, const FieldElement& a, const FieldElement& b,
                const DiffFieldPresentation& field) {
  FieldElement expected = r.p.is_zero() ? a : a + r.factor * FieldElement(r.p.evaluate(b.value()));
  if (!(expected == r.candidate)) return false;
  auto pair = diff_trdeg({a, b}, field, symbolic_rank()).trdeg;
  auto cand = diff_trdeg({r.candidate}, field, symbolic_rank()).trdeg;
  return pair == r.trdeg_pair && cand == r.trdeg_candidate && cand == pair;
}

bool revalidate(const PrimitiveResult& r, const DiffFieldPresentation& field) {
  if (diff_trdeg({r.primitive}, field, symbolic_rank()).trdeg != r.n) return false;
  if (r.certificates.size() != r.generators.size()) return false;
  auto tower = prolongation(r.primitive, field, static_cast<unsigned>(r.n));
  for (std::size_t i = 0; i < r.certificates.size(); ++i) {
    const auto& cert = r.certificates[i];
    if (!(cert.target == r.generators[i]) || cert.tower.size() != tower.size()) return false;
    for (std::size_t j = 0; j < tower.size(); ++j) {
      if (!(cert.tower[j] == tower[j])) return false;
    }
    if (!cert.revalidate()) return false;
  }
  return true;
}

}  // namespace diffprim
