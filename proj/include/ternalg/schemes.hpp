#pragma once

/// Candidate ternary products as contraction schemes, and a brute-force
/// search for the ones that satisfy generalized associativity.
///
/// A scheme picks three of the nine index slots A1..C3 as free (labelled
/// i, j, k in slot order) and pairs the remaining six across different
/// factors. The search evaluates every such scheme on seeded random
/// quintuples and keeps those whose three bracketings agree on every trial.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ternalg/random.hpp"
#include "ternalg/ternary.hpp"

namespace ternalg {

/// Slot id = 3 * factor + position, factor 0/1/2 = A/B/C, position 0..2.
using Slot = int;

inline std::string slot_name(Slot s) {
  return std::string(1, static_cast<char>('A' + s / 3)) + std::to_string(s % 3 + 1);
}

class ContractionScheme {
public:
  using Pair = std::pair<Slot, Slot>;

  /// Throws InputError unless the slots form 3 free + 3 cross-factor pairs.
  ContractionScheme(std::array<Slot, 3> free_slots, std::array<Pair, 3> pairs)
      : free_(free_slots), pairs_(pairs) {
    std::array<int, 9> seen{};
    for (Slot s : free_) mark(seen, s);
    for (auto& [x, y] : pairs_) {
      mark(seen, x);
      mark(seen, y);
      if (x / 3 == y / 3)
        throw InputError("pair (" + slot_name(x) + "," + slot_name(y) +
                         ") joins two slots of the same factor");
      if (x > y) std::swap(x, y);
    }
    std::sort(free_.begin(), free_.end());
    std::sort(pairs_.begin(), pairs_.end());
  }

  const std::array<Slot, 3>& free_slots() const { return free_; }
  const std::array<Pair, 3>& pairs() const { return pairs_; }

  /// e.g. "A1=i A2=j | (A3,B3)(B1,C1)(B2,C2) | C3=k": free slots of A, the
  /// sorted pairs, then free slots of B and C. An empty side prints as "-".
  std::string encoding() const {
    static constexpr char labels[] = {'i', 'j', 'k'};
    std::string left, right, mid;
    for (std::size_t n = 0; n < 3; ++n) {
      std::string& side = free_[n] < 3 ? left : right;
      if (!side.empty()) side += ' ';
      side += slot_name(free_[n]) + '=' + labels[n];
    }
    for (const auto& [x, y] : pairs_) mid += "(" + slot_name(x) + "," + slot_name(y) + ")";
    return (left.empty() ? "-" : left) + " | " + mid + " | " + (right.empty() ? "-" : right);
  }

  /// Free slots only, e.g. "A1 C2 C3".
  std::string free_pattern() const {
    return slot_name(free_[0]) + " " + slot_name(free_[1]) + " " + slot_name(free_[2]);
  }

  /// Free patterns of the four associative products: (A1; C2, C3) and (A1, A2; C3).
  bool in_product_pattern() const {
    return free_ == std::array<Slot, 3>{0, 7, 8} || free_ == std::array<Slot, 3>{0, 1, 8};
  }

  /// Brute-force index sum over all six labels.
  template <std::floating_point Real>
  BasicHypermatrix<Real> evaluate(const BasicHypermatrix<Real>& a, const BasicHypermatrix<Real>& b,
                                  const BasicHypermatrix<Real>& c) const {
    require_same_dim(a, b);
    require_same_dim(a, c);
    const std::size_t n = a.dim();
    // label of each slot: 0..2 free, 3..5 contracted
    std::array<int, 9> label{};
    for (int f = 0; f < 3; ++f) label[free_[f]] = f;
    for (int p = 0; p < 3; ++p) label[pairs_[p].first] = label[pairs_[p].second] = 3 + p;
    BasicHypermatrix<Real> r(n);
    std::array<std::size_t, 6> v{};
    const std::size_t total = n * n * n * n * n * n;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      for (int d = 5; d >= 0; --d) {
        v[d] = rest % n;
        rest /= n;
      }
      auto at = [&](const BasicHypermatrix<Real>& t, int factor) {
        return t(v[label[3 * factor]], v[label[3 * factor + 1]], v[label[3 * factor + 2]]);
      };
      r(v[0], v[1], v[2]) += at(a, 0) * at(b, 1) * at(c, 2);
    }
    return r;
  }

  friend bool operator==(const ContractionScheme&, const ContractionScheme&) = default;
  friend auto operator<=>(const ContractionScheme&, const ContractionScheme&) = default;

private:
  static void mark(std::array<int, 9>& seen, Slot s) {
    if (s < 0 || s > 8) throw InputError("slot id out of range: " + std::to_string(s));
    if (seen[s]++) throw InputError("slot " + slot_name(s) + " used twice");
  }

  std::array<Slot, 3> free_;
  std::array<Pair, 3> pairs_;
};

/// The contraction scheme of each of the four products.
inline ContractionScheme scheme_of(ProductKind kind) {
  constexpr Slot A1 = 0, A2 = 1, A3 = 2, B1 = 3, B2 = 4, B3 = 5, C1 = 6, C2 = 7, C3 = 8;
  switch (kind) {
    case ProductKind::p1: return {{A1, C2, C3}, {{{A2, B2}, {A3, B3}, {B1, C1}}}};
    case ProductKind::p2: return {{A1, C2, C3}, {{{A2, B3}, {A3, B2}, {B1, C1}}}};
    case ProductKind::diamond: return {{A1, A2, C3}, {{{A3, B3}, {B1, C2}, {B2, C1}}}};
    case ProductKind::bullet: break;
  }
  return {{A1, A2, C3}, {{{A3, B3}, {B1, C1}, {B2, C2}}}};
}

inline std::optional<ProductKind> classify(const ContractionScheme& s) {
  for (auto k : all_product_kinds)
    if (scheme_of(k) == s) return k;
  return std::nullopt;
}

namespace detail {

inline void cross_factor_matchings(std::vector<Slot> rest,
                                   std::vector<ContractionScheme::Pair>& acc,
                                   std::vector<std::array<ContractionScheme::Pair, 3>>& out) {
  if (rest.empty()) {
    out.push_back({acc[0], acc[1], acc[2]});
    return;
  }
  const Slot first = rest.front();
  for (std::size_t i = 1; i < rest.size(); ++i) {
    if (rest[i] / 3 == first / 3) continue;
    std::vector<Slot> remaining;
    for (std::size_t j = 1; j < rest.size(); ++j)
      if (j != i) remaining.push_back(rest[j]);
    acc.emplace_back(first, rest[i]);
    cross_factor_matchings(std::move(remaining), acc, out);
    acc.pop_back();
  }
}

} // namespace detail

/// Every valid scheme, sorted.
inline std::vector<ContractionScheme> all_schemes() {
  std::vector<ContractionScheme> out;
  for (Slot a = 0; a < 9; ++a)
    for (Slot b = a + 1; b < 9; ++b)
      for (Slot c = b + 1; c < 9; ++c) {
        std::vector<Slot> rest;
        for (Slot s = 0; s < 9; ++s)
          if (s != a && s != b && s != c) rest.push_back(s);
        std::vector<ContractionScheme::Pair> acc;
        std::vector<std::array<ContractionScheme::Pair, 3>> matchings;
        detail::cross_factor_matchings(rest, acc, matchings);
        for (const auto& m : matchings) out.emplace_back(std::array<Slot, 3>{a, b, c}, m);
      }
  std::sort(out.begin(), out.end());
  return out;
}

struct SchemeVerdict {
  ContractionScheme scheme;
  std::optional<ProductKind> product;  // set when the scheme is one of P1..P4
  bool in_product_pattern = false;
  double max_residual = 0;
};

struct SchemeReport {
  std::size_t dim = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 0;
  std::size_t schemes_examined = 0;
  std::vector<SchemeVerdict> survivors;  // sorted by encoding

  /// Survivors sharing a free pattern with the four products.
  std::vector<SchemeVerdict> pattern_survivors() const {
    std::vector<SchemeVerdict> out;
    for (const auto& v : survivors)
      if (v.in_product_pattern) out.push_back(v);
    return out;
  }

  /// Survivors outside those patterns (scalar-multiplier schemes and the like).
  std::vector<SchemeVerdict> extra_survivors() const {
    std::vector<SchemeVerdict> out;
    for (const auto& v : survivors)
      if (!v.in_product_pattern) out.push_back(v);
    return out;
  }

  /// True when the in-pattern survivors are exactly P1, P2, P3, P4.
  bool reproduces_four_products() const {
    const auto in = pattern_survivors();
    if (in.size() != 4) return false;
    std::array<int, 4> hits{};
    for (const auto& v : in) {
      if (!v.product) return false;
      ++hits[static_cast<int>(*v.product)];
    }
    return hits == std::array<int, 4>{1, 1, 1, 1};
  }
};

inline SchemeReport enumerate_schemes(std::size_t dim, std::size_t trials, std::uint64_t seed,
                                      double tolerance = 1e-8) {
  if (dim < 2) throw InputError("scheme enumeration needs dim >= 2");
  if (trials == 0) throw InputError("scheme enumeration needs at least one trial");

  Xorshift64Star rng(seed);
  std::vector<std::array<Hypermatrix, 5>> quintuples;
  quintuples.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    auto draw = [&] { return random_hypermatrix(dim, rng); };
    quintuples.push_back({draw(), draw(), draw(), draw(), draw()});
  }

  SchemeReport report;
  report.dim = dim;
  report.trials = trials;
  report.seed = seed;
  report.tolerance = tolerance;

  for (const auto& scheme : all_schemes()) {
    ++report.schemes_examined;
    auto prod = [&](const Hypermatrix& x, const Hypermatrix& y, const Hypermatrix& z) {
      return scheme.evaluate(x, y, z);
    };
    double worst = 0;
    bool survived = true;
    for (const auto& [a, b, c, f, g] : quintuples) {
      const auto left = prod(prod(a, b, c), f, g);
      const auto mid = prod(a, prod(f, c, b), g);
      const auto right = prod(a, b, prod(c, f, g));
      worst = std::max({worst, distance(left, mid), distance(left, right), distance(mid, right)});
      if (worst > tolerance) {
        survived = false;
        break;
      }
    }
    if (survived)
      report.survivors.push_back({scheme, classify(scheme), scheme.in_product_pattern(), worst});
  }
  std::sort(report.survivors.begin(), report.survivors.end(),
            [](const SchemeVerdict& x, const SchemeVerdict& y) {
              return x.scheme.encoding() < y.scheme.encoding();
            });
  return report;
}

inline std::string format_report(const SchemeReport& r) {
  std::ostringstream out;
  out << "schemes examined: " << r.schemes_examined << " (dim " << r.dim << ", " << r.trials
      << " trials, seed " << r.seed << ", tol " << r.tolerance << ")\n";
  out << "survivors: " << r.survivors.size() << "\n";
  std::map<std::string, std::vector<const SchemeVerdict*>> by_pattern;
  for (const auto& v : r.survivors) by_pattern[v.scheme.free_pattern()].push_back(&v);
  for (const auto& [pattern, list] : by_pattern) {
    out << "free pattern " << pattern
        << (list.front()->in_product_pattern ? " (product pattern)" : " (outside product patterns)")
        << "\n";
    for (const auto* v : list) {
      out << "  " << v->scheme.encoding() << "  ";
      if (v->product)
        out << to_string(*v->product);
      else
        out << (v->in_product_pattern ? "UNEXPECTED" : "FLAGGED extra");
      out << "\n";
    }
  }
  out << "four products reproduced: " << (r.reproduces_four_products() ? "yes" : "no") << "\n";
  return out.str();
}

} // namespace ternalg
