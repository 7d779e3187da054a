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

#include "commands.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "diffprim/error.hpp"
#include "diffprim/search.hpp"
#include "diffprim/wronskian.hpp"

namespace diffprim {

using nlohmann::ordered_json;

FieldElement LoadedField::resolve(const std::string& name) const {
  for (const auto& [n, e] : elements) {
    if (n == name) return e;
  }
  if (presentation.is_generator(name)) return presentation.generator(name);
  throw Error(ErrorKind::UnknownVariable, "unknown element '" + name + "'");
}

LoadedField load_field(const std::string& text) {
  FieldFile file = parse_field_file(text);
  DiffFieldPresentation presentation = file.presentation();
  auto elements = file.elements();
  return LoadedField{std::move(file), std::move(presentation), std::move(elements)};
}

namespace {

// Exit 1: the claim was not established. Exit 2: the input was unusable.
int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded:
    case ErrorKind::NoWitness:
    case ErrorKind::DecompositionFailed:
    case ErrorKind::RandomizationExhausted:
      return 1;
    default:
      return 2;
  }
}

ordered_json config_json(const SearchConfig& c) {
  ordered_json j;
  j["max_p_degree"] = c.max_p_degree;
  j["max_coeff_height"] = c.max_coeff_height;
  j["lambda_height"] = c.lambda_height;
  j["retries"] = c.retries;
  j["seed"] = c.seed;
  j["membership_degree_cap"] = c.membership_degree_cap;
  j["symbolic_confirm"] = c.symbolic_confirm;
  j["symbolic_rank"] = c.symbolic_rank;
  return j;
}

const char* status_name(int exit_code) {
  switch (exit_code) {
    case 0: return "ok";
    case 1: return "not_established";
    case 2: return "input_error";
    default: return "internal_error";
  }
}

RankOptions rank_options(const SearchConfig& c) {
  RankOptions o;
  o.method = c.symbolic_rank ? RankMethod::Symbolic : RankMethod::Randomized;
  o.seed = c.seed;
  o.retries = c.retries;
  return o;
}

struct Payload {
  ordered_json result;
  std::ostringstream human;
  int exit_code = 0;
  // Soft failure: the result stays, exit 1, error names what was not established.
  std::string error_kind, error_message;
  void not_established(std::string kind, std::string message) {
    exit_code = 1;
    error_kind = std::move(kind);
    error_message = std::move(message);
  }
};

// Wraps a command body: echo, config, timing and the error mapping.
Report execute(const RunSettings& s, const std::function<void(Payload&)>& body) {
  auto start = std::chrono::steady_clock::now();
  Payload p;
  p.result = ordered_json::object();
  std::string error_kind, error_message;
  try {
    s.search.validate();
    body(p);
    error_kind = p.error_kind;
    error_message = p.error_message;
  } catch (const Error& e) {
    p.exit_code = exit_code_for(e.kind());
    error_kind = error_kind_name(e.kind());
    error_message = e.what();
  } catch (const std::exception& e) {
    p.exit_code = 3;
    error_kind = "Internal";
    error_message = e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Report r;
  r.exit_code = p.exit_code;
  r.machine["command"] = s.command;
  r.machine["config"] = config_json(s.search);
  r.machine["status"] = status_name(p.exit_code);
  r.machine["exit_code"] = p.exit_code;
  r.machine["result"] = p.result;
  std::ostringstream h;
  h << p.human.str();
  if (!error_kind.empty()) {
    r.machine["error"] = {{"kind", error_kind}, {"message", error_message}};
    h << "error: " << error_kind << ": " << error_message << "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", elapsed);
  h << "status: " << status_name(p.exit_code) << " (exit " << p.exit_code << ", " << buf << " s)\n";
  r.human = h.str();
  return r;
}

ordered_json element_json(const std::string& name, const FieldElement& e) {
  return ordered_json{{"name", name}, {"expr", to_string(e)}};
}

ordered_json coefficients_json(const MultiPoly& p, std::size_t tower_size) {
  ordered_json out = ordered_json::array();
  for (const auto& [exps, c] : coefficient_list(p, tower_size)) {
    out.push_back(ordered_json{{"exponents", exps}, {"coeff", c.get_str()}});
  }
  return out;
}

ordered_json certificate_json(const MembershipCertificate& c) {
  ordered_json j;
  j["target"] = to_string(c.target);
  ordered_json tower = ordered_json::array();
  for (const auto& t : c.tower) tower.push_back(to_string(t));
  j["tower"] = tower;
  j["degree_bound"] = c.degree_bound;
  j["P"] = to_string(c.numerator);
  j["Q"] = to_string(c.denominator);
  j["P_coefficients"] = coefficients_json(c.numerator, c.tower.size());
  j["Q_coefficients"] = coefficients_json(c.denominator, c.tower.size());
  j["revalidated"] = c.revalidate();
  return j;
}

void certificate_human(std::ostream& os, const MembershipCertificate& c) {
  os << "  " << to_string(c.target) << " = (" << to_string(c.numerator) << ") / (" << to_string(c.denominator)
     << ")  [degree " << c.degree_bound << (c.revalidate() ? ", revalidated" : ", REVALIDATION FAILED") << "]\n";
}

std::vector<FieldElement> resolve_all(const LoadedField& f, const std::vector<std::string>& names) {
  if (names.empty()) throw Error(ErrorKind::InvalidArgument, "no elements given");
  std::vector<FieldElement> out;
  for (const auto& n : names) out.push_back(f.resolve(n));
  return out;
}

}  // namespace

Report error_report(const RunSettings& s, int exit_code, const std::string& kind, const std::string& message) {
  Report r;
  r.exit_code = exit_code;
  r.machine["command"] = s.command;
  r.machine["config"] = config_json(s.search);
  r.machine["status"] = status_name(exit_code);
  r.machine["exit_code"] = exit_code;
  r.machine["result"] = ordered_json::object();
  r.machine["error"] = {{"kind", kind}, {"message", message}};
  r.human = "error: " + kind + ": " + message + "\n";
  return r;
}

Report run_trdeg(const LoadedField& f, const std::vector<std::string>& names, const RunSettings& s) {
  return execute(s, [&](Payload& p) {
    auto elems = resolve_all(f, names);
    TrdegReport t = diff_trdeg(elems, f.presentation, rank_options(s.search));
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < names.size(); ++i) list.push_back(element_json(names[i], elems[i]));
    p.result["elements"] = list;
    p.result["trdeg"] = t.trdeg;
    p.result["stabilization_order"] = t.stabilization_order;
    p.result["method"] = t.method == RankMethod::Symbolic ? "symbolic" : "randomized";
    for (std::size_t i = 0; i < names.size(); ++i) p.human << names[i] << " = " << to_string(elems[i]) << "\n";
    p.human << "trdeg: " << t.trdeg << "\nstabilization order: " << t.stabilization_order << "\n";
  });
}

Report run_wronskian(const LoadedField& f, const std::vector<std::string>& names, const RunSettings& s) {
  return execute(s, [&](Payload& p) {
    auto elems = resolve_all(f, names);
    FieldElement w = wronskian(elems, f.presentation);
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < names.size(); ++i) list.push_back(element_json(names[i], elems[i]));
    p.result["elements"] = list;
    p.result["wronskian"] = to_string(w);
    p.result["zero"] = w.is_zero();
    p.human << "wronskian: " << to_string(w) << "\n"
            << (w.is_zero() ? "linearly dependent over constants\n" : "linearly independent over constants\n");
  });
}

Report run_wkl(int k, int l, const RunSettings& s) {
  return execute(s, [&](Payload& p) {
    DiffPoly w = build_wkl(k, l);
    p.result["k"] = k;
    p.result["l"] = l;
    p.result["W"] = to_string(w);
    p.human << "W_{" << k << "," << l << "} = " << to_string(w) << "\n";
    WklDecomposition d = decompose_wkl(k, l);
    ordered_json dj;
    dj["A"] = to_string(d.A);
    dj["B"] = to_string(d.B);
    dj["C"] = to_string(d.C);
    if (d.D) dj["D"] = to_string(*d.D);
    dj["reassembles"] = d.reassembles();
    p.result["decomposition"] = dj;
    p.human << "A = " << to_string(d.A) << "\nB = " << to_string(d.B) << "\nC = " << to_string(d.C) << "\n";
    if (d.D) p.human << "D = " << to_string(*d.D) << "\n";
    if (!d.reassembles()) p.not_established("DecompositionFailed", "decomposition does not reassemble W");
  });
}

Report run_density(const LoadedField& f, const std::string& a, const std::string& b,
                   const std::optional<std::string>& c, const RunSettings& s) {
  return execute(s, [&](Payload& p) {
    FieldElement ea = f.resolve(a), eb = f.resolve(b);
    DensityResult r = c ? density_step_with_factor(ea, eb, f.resolve(*c), f.presentation, s.search)
                        : density_step(ea, eb, f.presentation, s.search);
    bool ok = revalidate(r, ea, eb, f.presentation);
    p.result["a"] = element_json(a, ea);
    p.result["b"] = element_json(b, eb);
    if (c) p.result["c"] = element_json(*c, r.factor);
    p.result["p"] = to_string(r.p);
    p.result["candidate"] = to_string(r.candidate);
    p.result["trdeg_pair"] = r.trdeg_pair;
    p.result["trdeg_candidate"] = r.trdeg_candidate;
    p.result["candidates_tried"] = r.candidates_tried;
    p.result["revalidated"] = ok;
    p.human << "p = " << to_string(r.p) << "\ncandidate = " << to_string(r.candidate) << "\ntrdeg: pair "
            << r.trdeg_pair << ", candidate " << r.trdeg_candidate << " (" << r.candidates_tried
            << " candidates tried)\n";
    if (!ok) p.not_established("RevalidationFailed", "density result failed revalidation");
  });
}

Report run_primitive(const LoadedField& f, const std::vector<std::string>& names, const RunSettings& s) {
  return execute(s, [&](Payload& p) {
    std::vector<std::string> used = names;
    if (used.empty()) used = f.presentation.generators();
    auto elems = resolve_all(f, used);
    PrimitiveResult r = find_primitive(elems, f.presentation, s.search);
    bool ok = revalidate(r, f.presentation);
    ordered_json gens = ordered_json::array();
    for (std::size_t i = 0; i < used.size(); ++i) gens.push_back(element_json(used[i], elems[i]));
    p.result["generators"] = gens;
    p.result["primitive"] = to_string(r.primitive);
    p.result["n"] = r.n;
    ordered_json lambdas = ordered_json::array();
    for (const auto& l : r.lambdas) lambdas.push_back(l.get_str());
    p.result["lambdas"] = lambdas;
    p.result["a"] = to_string(r.a);
    p.result["b"] = to_string(r.b);
    ordered_json certs = ordered_json::array();
    for (const auto& c : r.certificates) certs.push_back(certificate_json(c));
    p.result["certificates"] = certs;
    p.result["revalidated"] = ok;
    p.human << "primitive element: " << to_string(r.primitive) << "\ntrdeg n = " << r.n << "\n";
    if (!r.lambdas.empty()) {
      p.human << "lambdas:";
      for (const auto& l : r.lambdas) p.human << " " << l.get_str();
      p.human << "\n";
    }
    p.human << "certificates (z = primitive element):\n";
    for (const auto& c : r.certificates) certificate_human(p.human, c);
    if (!ok) p.not_established("RevalidationFailed", "a membership certificate failed revalidation");
  });
}

Report run_member(const LoadedField& f, const std::string& target, const std::string& tower, int order,
                  int deg_cap, const RunSettings& s) {
  return execute(s, [&](Payload& p) {
    FieldElement g = f.resolve(target), z = f.resolve(tower);
    unsigned n = order >= 0 ? static_cast<unsigned>(order)
                            : static_cast<unsigned>(diff_trdeg({z}, f.presentation, rank_options(s.search)).trdeg);
    int cap = deg_cap >= 0 ? deg_cap : s.search.membership_degree_cap;
    auto tower_elems = prolongation(z, f.presentation, n);
    p.result["target"] = element_json(target, g);
    p.result["tower_element"] = element_json(tower, z);
    p.result["order"] = n;
    p.result["degree_cap"] = cap;
    auto cert = member_of_tower(g, tower_elems, f.presentation, cap);
    p.result["found"] = cert.has_value();
    if (cert) {
      p.result["certificate"] = certificate_json(*cert);
      p.human << "certificate (z = " << tower << "):\n";
      certificate_human(p.human, *cert);
      if (!cert->revalidate()) p.not_established("RevalidationFailed", "certificate failed revalidation");
    } else {
      p.human << "no certificate of degree <= " << cap << " over the order-" << n << " tower\n";
      p.not_established("NotFound", "no certificate of degree <= " + std::to_string(cap));
    }
  });
}

Report run_verify_lemmas(int k_max, const RunSettings& s) {
  return execute(s, [&](Payload& p) {
    auto rows = verify_lemmas(k_max);
    ordered_json list = ordered_json::array();
    std::size_t passed = 0;
    for (const auto& r : rows) {
      ordered_json row{{"lemma", r.lemma}, {"instance", r.instance}, {"passed", r.passed}};
      if (!r.passed) row["detail"] = r.detail;
      list.push_back(row);
      p.human << (r.passed ? "PASS  " : "FAIL  ") << r.lemma << "  [" << r.instance << "]\n";
      if (r.passed) ++passed;
    }
    p.result["k_max"] = k_max;
    p.result["checks"] = list;
    p.result["passed"] = passed;
    p.result["failed"] = rows.size() - passed;
    p.human << passed << "/" << rows.size() << " checks passed\n";
    if (passed != rows.size()) p.not_established("LemmaFailed", std::to_string(rows.size() - passed) + " checks failed");
  });
}

}  // namespace diffprim
