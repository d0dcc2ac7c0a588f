#include "bifix/substitution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bifix/error.hpp"
#include "bifix/language.hpp"

namespace bifix {

Substitution::Substitution(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet_.size()) {
    throw_invalid("substitution needs exactly one image per letter");
  }
  for (const Word& w : images_) {
    if (w.empty()) throw_invalid("substitution images must be nonempty");
    check_word(alphabet_, w);
  }
}

Substitution Substitution::squared() const {
  std::vector<Word> imgs;
  imgs.reserve(images_.size());
  for (const Word& w : images_) imgs.push_back(apply(*this, w));
  return Substitution(alphabet_, std::move(imgs));
}

IncidenceMatrix::IncidenceMatrix(std::vector<std::vector<long long>> entries)
    : entries_(std::move(entries)) {
  for (const auto& row : entries_) {
    if (row.size() != entries_.size()) throw_invalid("incidence matrix must be square");
    for (long long v : row) {
      if (v < 0) throw_invalid("incidence matrix entries must be nonnegative");
    }
  }
}

IncidenceMatrix IncidenceMatrix::operator*(const IncidenceMatrix& rhs) const {
  if (size() != rhs.size()) throw_invalid("matrix size mismatch");
  int n = size();
  std::vector<std::vector<long long>> out(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) out[i][j] += entries_[i][k] * rhs.entries_[k][j];
    }
  }
  return IncidenceMatrix(std::move(out));
}

bool IncidenceMatrix::all_positive() const {
  for (const auto& row : entries_) {
    for (long long v : row) {
      if (v == 0) return false;
    }
  }
  return true;
}

std::vector<int> BoundaryMaps::first_power(int k) const {
  std::vector<int> m(first.size());
  std::iota(m.begin(), m.end(), 0);
  for (int step = 0; step < k; ++step) {
    for (auto& x : m) x = first[x];
  }
  return m;
}

std::vector<int> BoundaryMaps::last_power(int k) const {
  std::vector<int> m(last.size());
  std::iota(m.begin(), m.end(), 0);
  for (int step = 0; step < k; ++step) {
    for (auto& x : m) x = last[x];
  }
  return m;
}

Word apply(const Substitution& phi, const Word& w) {
  check_word(phi.alphabet(), w);
  std::vector<int> out;
  for (int a : w.letters()) {
    const auto& img = phi.image(a).letters();
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out));
}

Word apply_power(const Substitution& phi, const Word& w, int k) {
  Word cur = w;
  for (int i = 0; i < k; ++i) cur = apply(phi, cur);
  return cur;
}

IncidenceMatrix incidence_matrix(const Substitution& phi) {
  int n = phi.alphabet().size();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int b = 0; b < n; ++b) {
    for (int a : phi.image(b).letters()) m[a][b] += 1;
  }
  return IncidenceMatrix(std::move(m));
}

BigInt determinant(const IncidenceMatrix& matrix) {
  int n = matrix.size();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = matrix.at(i, j);
  }
  BigInt sign = 1;
  BigInt prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Boolean positivity of M^k, clamping entries so powers cannot overflow.
std::vector<std::vector<bool>> bool_square(const std::vector<std::vector<bool>>& a,
                                           const std::vector<std::vector<bool>>& b) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (!a[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j]) out[i][j] = true;
      }
    }
  }
  return out;
}

bool bool_all(const std::vector<std::vector<bool>>& m) {
  for (const auto& row : m) {
    for (bool v : row) {
      if (!v) return false;
    }
  }
  return true;
}

// Least k <= wielandt bound with M^k entrywise positive, or nullopt.
std::optional<int> positivity_exponent(const Substitution& phi) {
  int n = phi.alphabet().size();
  IncidenceMatrix m = incidence_matrix(phi);
  std::vector<std::vector<bool>> base(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) base[i][j] = m.at(i, j) > 0;
  }
  int bound = (n - 1) * (n - 1) + 1;
  std::vector<std::vector<bool>> pow = base;
  for (int k = 1; k <= bound; ++k) {
    if (bool_all(pow)) return k;
    pow = bool_square(pow, base);
  }
  return std::nullopt;
}

}  // namespace

PrimitivityResult is_primitive(const Substitution& phi) {
  PrimitivityResult res;
  if (phi.alphabet().size() < 2) {
    res.applicable = false;
    res.primitive = false;
    return res;
  }
  auto k = positivity_exponent(phi);
  res.primitive = k.has_value();
  res.witness_exponent = k;
  return res;
}

PropernessResult is_proper(const Substitution& phi) {
  PropernessResult res;
  int first = phi.image(0).at(0);
  int last = phi.image(0).at(phi.image(0).size() - 1);
  for (int a = 1; a < phi.alphabet().size(); ++a) {
    const Word& img = phi.image(a);
    if (img.at(0) != first || img.at(img.size() - 1) != last) {
      return res;
    }
  }
  res.proper = true;
  res.first = first;
  res.last = last;
  return res;
}

BoundaryMaps boundary_maps(const Substitution& phi) {
  BoundaryMaps bm;
  int n = phi.alphabet().size();
  bm.first.resize(n);
  bm.last.resize(n);
  for (int a = 0; a < n; ++a) {
    bm.first[a] = phi.image(a).at(0);
    bm.last[a] = phi.image(a).at(phi.image(a).size() - 1);
  }
  // pair sequence k -> (last^k, first^k), k >= 1; detect its cycle
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> seen;
  std::vector<int> f(n), l(n);
  std::iota(f.begin(), f.end(), 0);
  std::iota(l.begin(), l.end(), 0);
  for (int k = 1;; ++k) {
    for (auto& x : f) x = bm.first[x];
    for (auto& x : l) x = bm.last[x];
    auto key = std::make_pair(l, f);
    auto it = seen.find(key);
    if (it != seen.end()) {
      bm.preperiod_q = it->second - 1;
      bm.period_p = k - it->second;
      return bm;
    }
    seen.emplace(std::move(key), k);
  }
}

StabilityResult is_stable(const Substitution& phi, const FactorSet& factors) {
  if (phi.alphabet().size() >= 2 && !is_primitive(phi).primitive) {
    throw_not_applicable("stability is defined for primitive substitutions");
  }
  if (factors.max_length() < 2) throw_invalid("stability needs length-2 factors");
  BoundaryMaps bm = boundary_maps(phi);
  int n = phi.alphabet().size();
  StabilityResult res;
  for (int k = 1; k <= bm.preperiod_q + bm.period_p; ++k) {
    std::vector<int> lk = bm.last_power(k);
    std::vector<int> fk = bm.first_power(k);
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        std::string pair{static_cast<char>(lk[a]), static_cast<char>(fk[b])};
        ok = factors.contains_bytes(pair);
      }
    }
    if (ok) {
      res.stable = true;
      res.witness_k = k;
      return res;
    }
  }
  return res;
}

namespace {

// Distinct factors of every length <= depth of the byte string p, via
// left-to-right partition refinement of start positions: level-m groups hold
// the positions sharing the same length-m prefix, kept in lexicographic
// order; splitting on the next byte yields level m+1.
//
// emit(level, flat) receives each level's sorted flat word buffer.
template <typename Emit>
void refine_factors(const std::string& p, int depth, int alphabet_size, Emit&& emit) {
  std::vector<std::vector<std::size_t>> groups;
  {
    std::vector<std::vector<std::size_t>> buckets(alphabet_size);
    for (std::size_t i = 0; i < p.size(); ++i) {
      buckets[static_cast<unsigned char>(p[i])].push_back(i);
    }
    for (auto& b : buckets) {
      if (!b.empty()) groups.push_back(std::move(b));
    }
  }
  for (int m = 1; m <= depth && !groups.empty(); ++m) {
    std::string flat;
    flat.reserve(groups.size() * m);
    for (const auto& g : groups) flat.append(p, g.front(), m);
    emit(m, std::move(flat));
    if (m == depth) break;
    std::vector<std::vector<std::size_t>> next;
    std::vector<std::vector<std::size_t>> buckets(alphabet_size);
    for (const auto& g : groups) {
      for (std::size_t pos : g) {
        if (pos + m < p.size()) buckets[static_cast<unsigned char>(p[pos + m])].push_back(pos);
      }
      for (auto& b : buckets) {
        if (!b.empty()) {
          next.push_back(std::move(b));
          b.clear();
        }
      }
    }
    groups = std::move(next);
  }
}

std::string level_of_prefix(const std::string& p, int length, int alphabet_size) {
  std::string out;
  refine_factors(p, length, alphabet_size, [&](int m, std::string flat) {
    if (m == length) out = std::move(flat);
  });
  return out;
}

}  // namespace

FactorSet factor_language(const Substitution& phi, int max_length,
                          const FactorLanguageOptions& options) {
  if (max_length < 1) throw_invalid("factor window must be at least 1");
  if (phi.alphabet().size() >= 2 && !positivity_exponent(phi).has_value()) {
    throw_not_applicable("factor language generation needs a primitive substitution");
  }
  int n = phi.alphabet().size();

  // Letter c on a cycle of the first-letter map, with cycle length s, makes
  // sigma = phi^s satisfy sigma(c) = c..., so sigma-iterates of c grow as
  // prefixes of one another.
  std::vector<int> first(n);
  for (int a = 0; a < n; ++a) first[a] = phi.image(a).at(0);
  int c = 0;
  {
    std::vector<int> when(n, -1);
    int x = 0, step = 0;
    while (when[x] < 0) {
      when[x] = step++;
      x = first[x];
    }
    c = x;
  }
  int s = 1;
  for (int x = first[c]; x != c; x = first[x]) ++s;

  std::vector<std::string> sigma(n);
  for (int a = 0; a < n; ++a) {
    sigma[a] = apply_power(phi, Word(std::vector<int>{a}), s).to_bytes();
  }
  auto sigma_apply = [&](const std::string& w) {
    std::string out;
    std::size_t total = 0;
    for (char ch : w) total += sigma[static_cast<unsigned char>(ch)].size();
    out.reserve(total);
    for (char ch : w) out += sigma[static_cast<unsigned char>(ch)];
    return out;
  };

  std::string prefix(1, static_cast<char>(c));
  std::string level_L = level_of_prefix(prefix, max_length, n);
  bool exact = false;
  for (;;) {
    std::string next = sigma_apply(prefix);
    if (next.size() > options.max_total_bytes) {
      if (options.allow_partial) break;
      throw_resource_limit("factor window exceeds the configured byte cap (" +
                           std::to_string(options.max_total_bytes) + " bytes)");
    }
    bool grew = next.size() > prefix.size();
    std::string next_level = level_of_prefix(next, max_length, n);
    bool stable = next_level == level_L &&
                  prefix.size() >= static_cast<std::size_t>(max_length);
    prefix = std::move(next);
    level_L = std::move(next_level);
    if (stable || !grew) {
      exact = true;
      break;
    }
  }

  std::vector<std::string> levels(max_length);
  std::size_t total = 0;
  refine_factors(prefix, max_length, n, [&](int m, std::string flat) {
    total += flat.size();
    if (total > options.max_total_bytes && !options.allow_partial) {
      throw_resource_limit("factor set exceeds the configured byte cap");
    }
    levels[m - 1] = std::move(flat);
  });
  return FactorSet(phi.alphabet(), max_length, std::move(levels), exact);
}

PeriodicityVerdict periodicity(const FactorSet& factors) {
  if (factors.max_length() < 2) throw_invalid("periodicity probe needs window >= 2");
  int L = factors.max_length();
  for (int k = 1; k < L; ++k) {
    if (factors.count(k + 1) == factors.count(k)) {
      // plateau: in a subshift language every vertex of the order-k Rauzy
      // graph then has a unique successor, so the language is a single
      // periodic orbit of period p(k)
      return PeriodicityVerdict::periodic(static_cast<int>(factors.count(k)));
    }
  }
  return PeriodicityVerdict::aperiodic_up_to(L);
}

}  // namespace bifix
