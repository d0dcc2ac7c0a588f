#include "bifix/charging.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bifix/error.hpp"
#include "bifix/language.hpp"

namespace bifix {

GroupCode::GroupCode(FiniteMonoidPresentation monoid, std::string label)
    : monoid_(std::move(monoid)), label_(std::move(label)) {}

GroupCode GroupCode::resolve(const Alphabet& alphabet, const GroupCodeSpec& spec) {
  if (spec.power.has_value() == spec.code.has_value()) {
    throw_invalid("group code spec must be exactly one of A^n or an explicit code");
  }
  if (spec.power) {
    int n = *spec.power;
    Dfa dfa = power_code_dfa(alphabet, n);
    return GroupCode(transition_monoid(dfa), "A^" + std::to_string(n));
  }
  const FiniteCode& code = *spec.code;
  if (!(code.alphabet() == alphabet)) throw_invalid("group code alphabet mismatch");
  Dfa dfa = dfa_of_star(code);
  GroupCodeResult gc = is_group_code_dfa(dfa);
  if (!gc.group) throw_invalid("the given code is not a group code");
  std::string label;
  for (const Word& w : code.words()) {
    if (!label.empty()) label += ',';
    label += format_word(alphabet, w);
  }
  return GroupCode(transition_monoid(dfa), "{" + label + "}");
}

int GroupCode::eta_word(const Word& w) const { return eta(monoid_, w); }

std::string to_string(ChargeCertificateKind kind) {
  switch (kind) {
    case ChargeCertificateKind::HChargingByStableInvertible:
      return "HChargingByStableInvertible";
    case ChargeCertificateKind::GChargingByConnectedness:
      return "GChargingByConnectedness";
    case ChargeCertificateKind::ProperNonperiodicExact:
      return "ProperNonperiodicExact";
    case ChargeCertificateKind::StableLowerBound:
      return "StableLowerBound";
    case ChargeCertificateKind::PeriodicShortcut:
      return "PeriodicShortcut";
  }
  return "?";
}

std::string to_string(ChargeVerdict::Status status) {
  switch (status) {
    case ChargeVerdict::Status::Charged:
      return "Charged";
    case ChargeVerdict::Status::NotCharged:
      return "NotCharged";
    case ChargeVerdict::Status::Unknown:
      return "Unknown";
  }
  return "?";
}

OmegaImage omega_image(const Substitution& phi, const GroupCode& code) {
  const FiniteMonoidPresentation& g = code.monoid();
  int n = phi.alphabet().size();
  std::vector<int> vec(n);
  for (int a = 0; a < n; ++a) vec[a] = g.generator(a);

  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> history;
  int k = 0;
  while (!seen.count(vec)) {
    seen.emplace(vec, k);
    history.push_back(vec);
    std::vector<int> next(n);
    for (int a = 0; a < n; ++a) {
      int acc = g.identity();
      for (int b : phi.image(a).letters()) acc = g.mul(acc, vec[b]);
      next[a] = acc;
    }
    vec = std::move(next);
    ++k;
  }
  OmegaImage out;
  out.preperiod_q = seen.at(vec);
  out.period_p = k - out.preperiod_q;
  int m = std::max(out.preperiod_q, 1);
  if (m % out.period_p != 0) m += out.period_p - (m % out.period_p);
  out.exponent_m = m;
  int idx = out.preperiod_q + ((m - out.preperiod_q) % out.period_p);
  out.g_omega = history.at(idx);
  return out;
}

std::vector<int> subgroup_generated(const FiniteMonoidPresentation& group,
                                    std::vector<int> generators) {
  std::set<int> closure;
  closure.insert(group.identity());
  std::vector<int> todo(generators.begin(), generators.end());
  for (int g : generators) closure.insert(g);
  while (!todo.empty()) {
    int x = todo.back();
    todo.pop_back();
    for (int g : generators) {
      int p = group.mul(x, g);
      if (closure.insert(p).second) todo.push_back(p);
      p = group.mul(g, x);
      if (closure.insert(p).second) todo.push_back(p);
    }
  }
  return std::vector<int>(closure.begin(), closure.end());
}

namespace {

struct FoldingGraph {
  std::vector<int> parent;
  struct Edge {
    int from;
    int to;
    int letter;
  };
  std::vector<Edge> edges;

  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_G_invertible(const Substitution& phi) {
  FoldingGraph g;
  g.parent.push_back(0);  // base vertex of the wedge
  for (int a = 0; a < phi.alphabet().size(); ++a) {
    int prev = 0;
    const auto& img = phi.image(a).letters();
    for (std::size_t i = 0; i < img.size(); ++i) {
      int next;
      if (i + 1 == img.size()) {
        next = 0;
      } else {
        next = static_cast<int>(g.parent.size());
        g.parent.push_back(next);
      }
      g.edges.push_back({prev, next, img[i]});
      prev = next;
    }
  }

  // fold until no two same-label edges share an origin or a terminus
  bool changed = true;
  while (changed) {
    changed = false;
    // canonicalize and drop duplicate edges
    std::set<std::tuple<int, int, int>> dedup;
    std::vector<FoldingGraph::Edge> kept;
    for (const auto& e : g.edges) {
      auto key = std::make_tuple(g.find(e.from), g.find(e.to), e.letter);
      if (dedup.insert(key).second) {
        kept.push_back({std::get<0>(key), std::get<1>(key), e.letter});
      } else {
        changed = true;
      }
    }
    g.edges = std::move(kept);
    std::map<std::pair<int, int>, int> by_origin;   // (vertex, letter) -> target
    std::map<std::pair<int, int>, int> by_terminus;  // (vertex, letter) -> source
    for (const auto& e : g.edges) {
      int u = g.find(e.from), v = g.find(e.to);
      auto ok = std::make_pair(u, e.letter);
      auto it = by_origin.find(ok);
      if (it != by_origin.end() && g.find(it->second) != v) {
        g.unite(it->second, v);
        changed = true;
        break;
      }
      by_origin[ok] = v;
      auto tk = std::make_pair(v, e.letter);
      auto jt = by_terminus.find(tk);
      if (jt != by_terminus.end() && g.find(jt->second) != u) {
        g.unite(jt->second, u);
        changed = true;
        break;
      }
      by_terminus[tk] = u;
    }
  }

  std::set<int> vertices;
  for (const auto& e : g.edges) {
    vertices.insert(g.find(e.from));
    vertices.insert(g.find(e.to));
  }
  vertices.insert(g.find(0));
  if (vertices.size() != 1) return false;
  if (g.edges.size() != static_cast<std::size_t>(phi.alphabet().size())) return false;
  std::set<int> letters;
  for (const auto& e : g.edges) letters.insert(e.letter);
  return static_cast<int>(letters.size()) == phi.alphabet().size();
}

NilpotentPiResult is_nilpotent_pi_invertible(const Substitution& phi,
                                             const std::vector<long long>& primes) {
  BigInt det = determinant(incidence_matrix(phi));
  for (long long p : primes) {
    if (p < 2) throw_invalid("pi must consist of primes");
    if (det % p == 0) return {false, p};
  }
  return {true, std::nullopt};
}

std::optional<ChargingCertificate> charging_certificate(const Substitution& phi,
                                                        const FormationTarget& target) {
  FactorSet two = factor_language(phi, 2);
  StabilityResult st = is_stable(phi, two);
  if (!st.stable) return std::nullopt;
  if (target.all_finite_groups) {
    if (!is_G_invertible(phi)) return std::nullopt;
  } else {
    if (!is_nilpotent_pi_invertible(phi, target.primes).invertible) return std::nullopt;
  }
  return ChargingCertificate{target, *st.witness_k};
}

std::optional<ConnectednessCertificate> connected_charging(const FactorSet& factors,
                                                           int center_bound) {
  if (center_bound + 2 > factors.max_length()) {
    throw_invalid("connectedness bound too large for the factor window");
  }
  if (!is_uniformly_recurrent_up_to(factors, 1).uniform) return std::nullopt;
  WordClassification cls = classify_words(factors, center_bound);
  if (cls.connected_up_to && *cls.connected_up_to == center_bound) {
    return ConnectednessCertificate{center_bound, factors.max_length()};
  }
  return std::nullopt;
}

std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool group_is_nilpotent(const FiniteMonoidPresentation& group) {
  auto order_of = [&](int x) {
    int cur = x;
    long long ord = 1;
    while (cur != group.identity()) {
      cur = group.mul(cur, x);
      ++ord;
    }
    return ord;
  };
  long long size = static_cast<long long>(group.size());
  std::vector<long long> orders(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) orders[i] = order_of(static_cast<int>(i));
  for (long long p : prime_divisors(size)) {
    std::vector<int> p_elems;
    auto is_p_power = [&](long long v) {
      while (v % p == 0) v /= p;
      return v == 1;
    };
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (is_p_power(orders[i])) p_elems.push_back(static_cast<int>(i));
    }
    std::set<int> p_set(p_elems.begin(), p_elems.end());
    for (int x : p_elems) {
      for (int y : p_elems) {
        if (!p_set.count(group.mul(x, y))) return false;
      }
    }
  }
  return true;
}

namespace {

bool whole_group(const FiniteMonoidPresentation& g, const std::vector<int>& sub) {
  return sub.size() == g.size();
}

std::string format_subgroup_size(const FiniteMonoidPresentation& g,
                                 const std::vector<int>& sub) {
  return "image subgroup of order " + std::to_string(sub.size()) + " in a group of order " +
         std::to_string(g.size());
}

}  // namespace

ChargeVerdict charged_verdict(const Substitution& phi, const GroupCode& code,
                              const ChargeContext& context) {
  if (context.factors == nullptr) throw_invalid("charge context needs a factor set");
  const FactorSet& factors = *context.factors;
  if (phi.alphabet().size() >= 2 && !is_primitive(phi).primitive) {
    throw_not_applicable("charged verdicts are defined for primitive substitutions");
  }

  ChargeVerdict verdict;

  // periodic systems: the maximal subgroup is procyclic, generated by any
  // period word, so its image is computed directly
  if (context.nonperiodicity.is_periodic()) {
    int t = context.nonperiodicity.value;
    if (t > factors.max_length() || factors.count(t) == 0) {
      throw_invalid("periodic shortcut needs a period word inside the window");
    }
    Word period_word = factors.word(t, 0);
    std::vector<int> sub = subgroup_generated(code.monoid(), {code.eta_word(period_word)});
    verdict.image_subgroup = sub;
    verdict.certificate = ChargeCertificateKind::PeriodicShortcut;
    verdict.status = whole_group(code.monoid(), sub) ? ChargeVerdict::Status::Charged
                                                     : ChargeVerdict::Status::NotCharged;
    verdict.assumptions.push_back("Periodic(" + std::to_string(t) + ") via period word " +
                                  format_word(phi.alphabet(), period_word));
    verdict.assumptions.push_back(format_subgroup_size(code.monoid(), sub));
    return verdict;
  }

  // formation certificate over all finite groups: stable + free-group invertible
  if (auto cert = charging_certificate(phi, FormationTarget::all())) {
    verdict.status = ChargeVerdict::Status::Charged;
    verdict.certificate = ChargeCertificateKind::HChargingByStableInvertible;
    verdict.assumptions.push_back("stable with witness " + std::to_string(cert->stable_witness));
    verdict.assumptions.push_back("invertible over the free group");
    return verdict;
  }

  // connectedness certificate (window-bounded)
  {
    int bound = std::min(context.connectedness_center_bound, factors.max_length() - 2);
    if (bound >= 0) {
      if (auto cert = connected_charging(factors, bound)) {
        verdict.status = ChargeVerdict::Status::Charged;
        verdict.certificate = ChargeCertificateKind::GChargingByConnectedness;
        verdict.assumptions.push_back("connectedness verified for centers up to " +
                                      std::to_string(cert->center_bound) + " within window " +
                                      std::to_string(cert->window) + " only");
        return verdict;
      }
    }
  }

  PropernessResult proper = is_proper(phi);
  bool aperiodic_evidence =
      context.nonperiodicity.kind == PeriodicityVerdict::Kind::AperiodicUpTo ||
      context.nonperiodicity.kind == PeriodicityVerdict::Kind::AssertedAperiodic;

  if (proper.proper && aperiodic_evidence) {
    OmegaImage omega = omega_image(phi, code);
    std::vector<int> sub = subgroup_generated(code.monoid(), omega.g_omega);
    verdict.omega = omega;
    verdict.image_subgroup = sub;
    verdict.certificate = ChargeCertificateKind::ProperNonperiodicExact;
    verdict.status = whole_group(code.monoid(), sub) ? ChargeVerdict::Status::Charged
                                                     : ChargeVerdict::Status::NotCharged;
    if (context.nonperiodicity.kind == PeriodicityVerdict::Kind::AperiodicUpTo) {
      verdict.assumptions.push_back("AperiodicUpTo(" +
                                    std::to_string(context.nonperiodicity.value) + ")");
    } else {
      verdict.assumptions.push_back("AssertedAperiodic");
    }
    verdict.assumptions.push_back(format_subgroup_size(code.monoid(), sub));
    return verdict;
  }

  // formation certificate for the code's own nilpotent formation
  if (group_is_nilpotent(code.monoid())) {
    std::vector<long long> pi = prime_divisors(static_cast<long long>(code.order()));
    if (auto cert = charging_certificate(phi, FormationTarget::nilpotent(pi))) {
      verdict.status = ChargeVerdict::Status::Charged;
      verdict.certificate = ChargeCertificateKind::HChargingByStableInvertible;
      verdict.assumptions.push_back("stable with witness " + std::to_string(cert->stable_witness));
      std::string ps;
      for (long long p : pi) ps += (ps.empty() ? "" : ",") + std::to_string(p);
      verdict.assumptions.push_back("invertible over nilpotent {" + ps + "}-groups");
      return verdict;
    }
  }

  StabilityResult st = is_stable(phi, factors);
  if (st.stable) {
    OmegaImage omega = omega_image(phi, code);
    std::vector<int> sub = subgroup_generated(code.monoid(), omega.g_omega);
    verdict.omega = omega;
    verdict.image_subgroup = sub;
    if (whole_group(code.monoid(), sub)) {
      verdict.status = ChargeVerdict::Status::Charged;
      verdict.certificate = ChargeCertificateKind::StableLowerBound;
      verdict.assumptions.push_back("stable with witness " + std::to_string(*st.witness_k));
      verdict.assumptions.push_back("omega image already generates the whole group");
      return verdict;
    }
    verdict.status = ChargeVerdict::Status::Unknown;
    verdict.obstructions.push_back(
        "omega image is only a lower bound for a stable non-proper substitution; " +
        format_subgroup_size(code.monoid(), sub));
    return verdict;
  }

  verdict.status = ChargeVerdict::Status::Unknown;
  if (!proper.proper) verdict.obstructions.push_back("substitution is not proper");
  verdict.obstructions.push_back("substitution is not stable");
  if (!aperiodic_evidence) verdict.obstructions.push_back("no nonperiodicity evidence");
  return verdict;
}

const FingerprintEntry& Fingerprint::at(int n) const {
  for (const auto& e : entries) {
    if (e.n == n) return e;
  }
  throw_invalid("fingerprint entry out of range");
}

Fingerprint procyclic_fingerprint(const Substitution& phi, int n_max,
                                  const ChargeContext& context) {
  if (n_max < 1) throw_invalid("fingerprint needs n_max >= 1");
  if (context.factors == nullptr) throw_invalid("fingerprint needs a factor set");
  Fingerprint fp;
  fp.n_max = n_max;

  bool have_all_cert = charging_certificate(phi, FormationTarget::all()).has_value();
  FactorSet two = factor_language(phi, 2);
  bool stable = is_stable(phi, two).stable;
  BigInt det = determinant(incidence_matrix(phi));
  PropernessResult proper = is_proper(phi);
  bool aperiodic_evidence =
      context.nonperiodicity.kind != PeriodicityVerdict::Kind::Periodic;
  std::optional<int> period;
  if (context.nonperiodicity.is_periodic()) period = context.nonperiodicity.value;

  auto nilpotent_cert = [&](int n) {
    if (!stable) return false;
    for (long long p : prime_divisors(n)) {
      if (det % p == 0) return false;
    }
    return true;
  };

  for (int n = 1; n <= n_max; ++n) {
    FingerprintEntry e;
    e.n = n;
    if (n == 1) {
      e.d = 1;
      e.exact = true;
      e.branch = "trivial";
      fp.entries.push_back(e);
      continue;
    }
    if (period) {
      e.d = static_cast<int>(std::gcd(static_cast<long long>(n), static_cast<long long>(*period)));
      e.exact = true;
      e.branch = "PeriodicShortcut";
      fp.entries.push_back(e);
      continue;
    }
    if (have_all_cert) {
      e.d = 1;
      e.exact = true;
      e.branch = "HChargingByStableInvertible";
      fp.entries.push_back(e);
      continue;
    }
    if (proper.proper && aperiodic_evidence) {
      GroupCode zn = GroupCode::resolve(phi.alphabet(), GroupCodeSpec::power_code(n));
      OmegaImage omega = omega_image(phi, zn);
      std::vector<int> sub = subgroup_generated(zn.monoid(), omega.g_omega);
      e.d = static_cast<int>(zn.order() / sub.size());
      e.exact = true;
      e.branch = "ProperNonperiodicExact";
      fp.entries.push_back(e);
      continue;
    }
    if (nilpotent_cert(n)) {
      e.d = 1;
      e.exact = true;
      e.branch = "HChargingByStableInvertible";
      fp.entries.push_back(e);
      continue;
    }
    GroupCode zn = GroupCode::resolve(phi.alphabet(), GroupCodeSpec::power_code(n));
    OmegaImage omega = omega_image(phi, zn);
    std::vector<int> sub = subgroup_generated(zn.monoid(), omega.g_omega);
    e.d = static_cast<int>(zn.order() / sub.size());
    e.exact = false;
    e.branch = "lower-bound-only";
    fp.entries.push_back(e);
  }
  return fp;
}

FingerprintComparison compare_fingerprints(const Fingerprint& left, const Fingerprint& right) {
  FingerprintComparison cmp;
  int n_max = std::min(left.n_max, right.n_max);
  for (int n = 2; n <= n_max; ++n) {
    FingerprintComparison::Row row{n, left.at(n), right.at(n), false};
    row.compared = row.left.exact && row.right.exact;
    if (row.compared && row.left.d != row.right.d &&
        cmp.verdict == FingerprintComparison::Verdict::Inconclusive) {
      cmp.verdict = FingerprintComparison::Verdict::NotConjugate;
      cmp.witness_n = n;
    }
    if (!row.compared) {
      cmp.notes.push_back("n=" + std::to_string(n) +
                          " excluded: at least one side is lower-bound-only");
    }
    cmp.rows.push_back(std::move(row));
  }
  auto collapsed_primes = [&](const Fingerprint& fp) {
    std::vector<int> out;
    for (const auto& e : fp.entries) {
      if (e.n >= 2 && e.n <= n_max && e.exact && e.d == e.n &&
          prime_divisors(e.n).size() == 1 && prime_divisors(e.n)[0] == e.n) {
        out.push_back(e.n);
      }
    }
    return out;
  };
  cmp.left_collapsed_primes = collapsed_primes(left);
  cmp.right_collapsed_primes = collapsed_primes(right);
  cmp.notes.push_back(
      "eventual conjugacy would still allow the collapsed prime sets to differ in at most one "
      "element beyond an unknown threshold; no eventual-conjugacy verdict is emitted");
  return cmp;
}

}  // namespace bifix
