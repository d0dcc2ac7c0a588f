#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bifix/alphabet.hpp"

namespace bifix {

using BigInt = boost::multiprecision::cpp_int;

class FactorSet;  // language.hpp

/// An endomorphism of the free monoid over an alphabet, given by one
/// nonempty image word per letter.
class Substitution {
 public:
  Substitution(Alphabet alphabet, std::vector<Word> images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Word& image(int letter) const { return images_.at(letter); }
  const std::vector<Word>& images() const noexcept { return images_; }

  /// The composition this∘this (images rewritten through the substitution).
  Substitution squared() const;

  bool operator==(const Substitution&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

/// Entry (a,b) counts the occurrences of letter a in the image of letter b,
/// so column b sums to the image length of b.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(std::vector<std::vector<long long>> entries);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  long long at(int row, int col) const { return entries_.at(row).at(col); }
  const std::vector<std::vector<long long>>& entries() const noexcept { return entries_; }

  IncidenceMatrix operator*(const IncidenceMatrix& rhs) const;
  bool all_positive() const;

  bool operator==(const IncidenceMatrix&) const = default;

 private:
  std::vector<std::vector<long long>> entries_;
};

/// First/last-letter maps of a substitution together with the eventual
/// period of the sequence k -> (last^k, first^k), indexed from k = 1.
/// Invariant: the pair at q+p equals the pair at q+2p, with p then q minimal.
struct BoundaryMaps {
  std::vector<int> first;  // first letter of the image of each letter
  std::vector<int> last;   // last letter of the image of each letter
  int preperiod_q = 0;
  int period_p = 1;

  std::vector<int> first_power(int k) const;  // first^k as a letter map
  std::vector<int> last_power(int k) const;
};

struct PrimitivityResult {
  bool applicable = true;  // false when |A| = 1
  bool primitive = false;
  std::optional<int> witness_exponent;  // least k with M^k entrywise positive
};

struct PropernessResult {
  bool proper = false;
  std::optional<int> first;  // shared first letter when proper
  std::optional<int> last;   // shared last letter when proper
};

struct StabilityResult {
  bool stable = false;
  std::optional<int> witness_k;
};

/// Outcome of the complexity-plateau periodicity probe. Periodic carries the
/// detected period; AperiodicUpTo only certifies absence of a plateau within
/// the inspected window; AssertedAperiodic records a user assertion.
struct PeriodicityVerdict {
  enum class Kind { Periodic, AperiodicUpTo, AssertedAperiodic };
  Kind kind = Kind::AperiodicUpTo;
  int value = 0;  // period for Periodic, window bound for AperiodicUpTo

  static PeriodicityVerdict periodic(int period) { return {Kind::Periodic, period}; }
  static PeriodicityVerdict aperiodic_up_to(int bound) { return {Kind::AperiodicUpTo, bound}; }
  static PeriodicityVerdict asserted() { return {Kind::AssertedAperiodic, 0}; }

  bool is_periodic() const { return kind == Kind::Periodic; }
};

struct FactorLanguageOptions {
  std::size_t max_total_bytes = std::size_t(1) << 29;  // cap on stored factors
  bool allow_partial = false;  // return a flagged partial set instead of throwing
};

Word apply(const Substitution& phi, const Word& w);

/// apply iterated k times.
Word apply_power(const Substitution& phi, const Word& w, int k);

IncidenceMatrix incidence_matrix(const Substitution& phi);

/// Exact integer determinant (fraction-free Bareiss elimination over
/// arbitrary-precision integers).
BigInt determinant(const IncidenceMatrix& m);

/// Primitive iff some power of the incidence matrix is entrywise positive;
/// the search is bounded by the Wielandt exponent (|A|-1)^2 + 1.
PrimitivityResult is_primitive(const Substitution& phi);

PropernessResult is_proper(const Substitution& phi);

BoundaryMaps boundary_maps(const Substitution& phi);

/// Stability test against the length-2 factors of F_phi. The boundary
/// condition is monotone in k and the boundary pair sequence is eventually
/// periodic, so searching k in [1, q+p] is a complete decision procedure.
StabilityResult is_stable(const Substitution& phi, const FactorSet& factors);

/// The factors of F_phi of length at most max_length, exactly.
///
/// Construction: pick a letter c on a cycle of the first-letter map, so that
/// sigma = phi^s satisfies sigma(c) = c..., and each sigma step extends the
/// previous word as a prefix. The length-L factor set of the prefix evolves
/// under a deterministic set map, so two consecutive equal sets certify that
/// the full set has been reached; shorter levels are read off the length-L
/// level by factoriality.
FactorSet factor_language(const Substitution& phi, int max_length,
                          const FactorLanguageOptions& options = {});

/// Morse-Hedlund plateau probe: p(k+1) = p(k) for some k < L implies the
/// language is that of a single periodic orbit whose period is the plateau
/// value; otherwise only AperiodicUpTo(L) can be reported.
PeriodicityVerdict periodicity(const FactorSet& factors);

}  // namespace bifix
