#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bifix/alphabet.hpp"
#include "bifix/code.hpp"
#include "bifix/monoid.hpp"
#include "bifix/substitution.hpp"

namespace bifix {

/// Input form of a group code: the power code A^n or an explicit finite code
/// whose star must have a group syntactic monoid.
struct GroupCodeSpec {
  std::optional<int> power;        // Z = A^n
  std::optional<FiniteCode> code;  // explicit finite code

  static GroupCodeSpec power_code(int n) { return {n, std::nullopt}; }
  static GroupCodeSpec explicit_code(FiniteCode c) { return {std::nullopt, std::move(c)}; }
};

/// A certified group code: syntactic monoid of Z^* (a group) together with
/// the syntactic morphism on letters.
class GroupCode {
 public:
  static GroupCode resolve(const Alphabet& alphabet, const GroupCodeSpec& spec);

  const FiniteMonoidPresentation& monoid() const noexcept { return monoid_; }
  std::size_t order() const noexcept { return monoid_.size(); }
  int eta_letter(int a) const { return monoid_.generator(a); }
  int eta_word(const Word& w) const;
  const std::string& label() const noexcept { return label_; }

 private:
  GroupCode(FiniteMonoidPresentation monoid, std::string label);

  FiniteMonoidPresentation monoid_;
  std::string label_;
};

/// Per-letter limits of eta(phi^{k!}(a)) in a finite group, with the
/// preperiod/period of the iterated letter vector and the exponent realising
/// the limit.
struct OmegaImage {
  std::vector<int> g_omega;  // element id per letter
  int preperiod_q = 0;
  int period_p = 1;
  int exponent_m = 1;  // least m >= max(q,1) with m == 0 mod p
};

struct FormationTarget {
  bool all_finite_groups = false;
  std::vector<long long> primes;  // nilpotent pi-groups

  static FormationTarget all() { return {true, {}}; }
  static FormationTarget nilpotent(std::vector<long long> pi) { return {false, std::move(pi)}; }
};

struct ChargingCertificate {
  FormationTarget target;
  int stable_witness = 0;
};

struct ConnectednessCertificate {
  int center_bound = 0;  // connectedness verified for centers up to here only
  int window = 0;
};

struct NilpotentPiResult {
  bool invertible = false;
  std::optional<long long> failing_prime;
};

enum class ChargeCertificateKind {
  HChargingByStableInvertible,
  GChargingByConnectedness,
  ProperNonperiodicExact,
  StableLowerBound,
  PeriodicShortcut,
};

struct ChargeVerdict {
  enum class Status { Charged, NotCharged, Unknown };
  Status status = Status::Unknown;
  std::optional<ChargeCertificateKind> certificate;
  std::vector<std::string> assumptions;   // hypotheses actually verified or asserted
  std::vector<std::string> obstructions;  // why no decision, for Unknown
  std::optional<OmegaImage> omega;
  std::vector<int> image_subgroup;  // element ids of the computed image, when iterated
};

/// Inputs the charging ladder needs besides the substitution and the code.
struct ChargeContext {
  const FactorSet* factors = nullptr;
  PeriodicityVerdict nonperiodicity;
  int connectedness_center_bound = 8;
};

std::string to_string(ChargeCertificateKind kind);
std::string to_string(ChargeVerdict::Status status);

OmegaImage omega_image(const Substitution& phi, const GroupCode& code);

/// Closure of a subset of a finite group under multiplication (a finite
/// subsemigroup of a group is a subgroup). Empty input yields the trivial
/// subgroup. Returns sorted element ids.
std::vector<int> subgroup_generated(const FiniteMonoidPresentation& group,
                                    std::vector<int> generators);

/// Stallings folding of the wedge of loops spelling the letter images: the
/// substitution generates the free group iff the folded graph is the rose
/// with one loop per letter.
bool is_G_invertible(const Substitution& phi);

/// Invertibility over nilpotent pi-groups: det M not == 0 mod p for each p.
NilpotentPiResult is_nilpotent_pi_invertible(const Substitution& phi,
                                             const std::vector<long long>& primes);

/// Stable + invertible over the target formation makes F_phi charging for
/// that formation, hence every code of the formation charged.
std::optional<ChargingCertificate> charging_certificate(const Substitution& phi,
                                                        const FormationTarget& target);

/// Uniformly recurrent connected languages are charging for all finite
/// groups; connectedness is verified on the window only and the certificate
/// records that caveat.
std::optional<ConnectednessCertificate> connected_charging(const FactorSet& factors,
                                                           int center_bound);

/// Whether a finite group is nilpotent (each set of p-elements closed).
bool group_is_nilpotent(const FiniteMonoidPresentation& group);

std::vector<long long> prime_divisors(long long n);

/// Decision ladder for F_phi-chargedness of a group code: periodic shortcut,
/// formation certificates, connectedness certificate, exact omega image for
/// proper nonperiodic substitutions, omega lower bound for stable ones.
ChargeVerdict charged_verdict(const Substitution& phi, const GroupCode& code,
                              const ChargeContext& context);

struct FingerprintEntry {
  int n = 0;
  int d = 0;  // image subgroup of Z/nZ is d(Z/nZ)
  bool exact = false;
  std::string branch;
};

struct Fingerprint {
  int n_max = 0;
  std::vector<FingerprintEntry> entries;  // n = 1..n_max

  const FingerprintEntry& at(int n) const;
};

/// Image subgroup of Z/nZ under the length-mod-n morphism, for each
/// n <= n_max, recorded by its generator gcd; entries carry the branch that
/// justified them and whether it is exact or a lower bound.
Fingerprint procyclic_fingerprint(const Substitution& phi, int n_max,
                                  const ChargeContext& context);

struct FingerprintComparison {
  enum class Verdict { NotConjugate, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::optional<int> witness_n;
  struct Row {
    int n;
    FingerprintEntry left;
    FingerprintEntry right;
    bool compared;  // both sides exact
  };
  std::vector<Row> rows;
  std::vector<int> left_collapsed_primes;   // primes p with d(p) = p (image 0), exact entries
  std::vector<int> right_collapsed_primes;
  std::vector<std::string> notes;
};

/// Conjugate systems have equal procyclic images, so any exact-entry
/// disagreement is a conjugacy obstruction. No eventual-conjugacy verdict is
/// ever emitted; the caveat about one-element prime-set discrepancies is
/// attached to the report notes.
FingerprintComparison compare_fingerprints(const Fingerprint& left, const Fingerprint& right);

}  // namespace bifix
