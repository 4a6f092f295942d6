#ifndef PMDEPTH_BRUHAT_HPP
#define PMDEPTH_BRUHAT_HPP

// Strong Bruhat order restricted to fixed-point-free involutions of [2n],
// compared through rank-matrix dominance.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pmdepth/core.hpp"
#include "pmdepth/enumerate.hpp"
#include "pmdepth/qpoly.hpp"
#include "pmdepth/stats.hpp"

namespace pmdepth {

/// r(i, j) = |{k <= i : sigma(k) <= j}| for 0 <= i, j <= size.
class RankMatrix {
 public:
  explicit RankMatrix(const std::vector<Vertex>& sigma) : size_(static_cast<int>(sigma.size())) {
    const auto stride = static_cast<std::size_t>(size_) + 1;
    entries_.assign(stride * stride, 0);
    for (int i = 1; i <= size_; ++i) {
      for (int j = 1; j <= size_; ++j) {
        entries_[i * stride + j] = entries_[(i - 1) * stride + j] + (sigma[i - 1] <= j ? 1 : 0);
      }
    }
  }

  explicit RankMatrix(const PerfectMatching& m) : RankMatrix(as_involution(m)) {}

  int size() const { return size_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * (size_ + 1) + j]; }

  /// Entrywise >=.
  bool dominates(const RankMatrix& o) const {
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (entries_[k] < o.entries_[k]) return false;
    }
    return true;
  }

 private:
  int size_;
  std::vector<std::uint16_t> entries_;
};

/// a <= b in Bruhat order iff the rank matrix of a dominates that of b. The
/// identity has the largest rank matrix, so the all-adjacent matching is the
/// minimum.
inline bool bruhat_leq(const PerfectMatching& a, const PerfectMatching& b) {
  if (a.pairs() != b.pairs()) throw DomainError("Bruhat comparison of matchings of different sizes");
  return RankMatrix(a).dominates(RankMatrix(b));
}

inline constexpr int kDefaultBruhatBound = 5;

/// The whole poset PM_2n with its comparability relation, in stream order.
class MatchingPoset {
 public:
  explicit MatchingPoset(int n, int bound = kDefaultBruhatBound) : n_(n) {
    if (n < 1) throw DomainError("poset needs n >= 1");
    if (n > bound) {
      throw DomainError("n = " + std::to_string(n) + " exceeds the configured bound " + std::to_string(bound));
    }
    elements_ = perfect_matchings(n);
    const std::size_t count = elements_.size();
    words_ = (count + 63) / 64;
    std::vector<RankMatrix> ranks;
    ranks.reserve(count);
    for (const auto& m : elements_) {
      ranks.emplace_back(m);
      ell_.push_back(length_ds(m));
    }
    up_.assign(count * words_, 0);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        if (ranks[a].dominates(ranks[b])) up_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
      }
    }
  }

  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<PerfectMatching>& elements() const { return elements_; }
  Count ell(std::size_t idx) const { return ell_[idx]; }

  bool leq(std::size_t a, std::size_t b) const { return (up_[a * words_ + b / 64] >> (b % 64)) & 1U; }

  /// Transitive reduction: a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> cover_indices() const {
    const std::size_t count = size();
    // down_[b] = {c : c <= b}, the transpose of up_
    std::vector<std::uint64_t> down(count * words_, 0);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        if (leq(a, b)) down[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        if (a == b || !leq(a, b)) continue;
        bool between = false;
        for (std::size_t w = 0; w < words_ && !between; ++w) {
          std::uint64_t mid = up_[a * words_ + w] & down[b * words_ + w];
          // drop a and b themselves
          if (a / 64 == w) mid &= ~(std::uint64_t{1} << (a % 64));
          if (b / 64 == w) mid &= ~(std::uint64_t{1} << (b % 64));
          between = mid != 0;
        }
        if (!between) covers.emplace_back(a, b);
      }
    }
    return covers;
  }

  /// Index of the first reflexivity/antisymmetry/transitivity violation, if any.
  std::optional<std::pair<std::size_t, std::size_t>> partial_order_violation() const {
    const std::size_t count = size();
    for (std::size_t a = 0; a < count; ++a) {
      if (!leq(a, a)) return std::pair{a, a};
    }
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        if (a == b || !leq(a, b)) continue;
        if (leq(b, a)) return std::pair{a, b};
        // every c above b must be above a
        for (std::size_t w = 0; w < words_; ++w) {
          if (up_[b * words_ + w] & ~up_[a * words_ + w]) return std::pair{a, b};
        }
      }
    }
    return std::nullopt;
  }

 private:
  int n_;
  std::size_t words_ = 0;
  std::vector<PerfectMatching> elements_;
  std::vector<Count> ell_;
  std::vector<std::uint64_t> up_;  // up_[a] = {b : a <= b}, one bit row per element
};

inline std::vector<std::pair<PerfectMatching, PerfectMatching>> hasse_covers(int n, int bound = kDefaultBruhatBound) {
  MatchingPoset poset(n, bound);
  std::vector<std::pair<PerfectMatching, PerfectMatching>> out;
  for (auto [a, b] : poset.cover_indices()) out.emplace_back(poset.elements()[a], poset.elements()[b]);
  return out;
}

inline PerfectMatching adjacent_matching(int n) {
  std::vector<Arc> arcs;
  for (Vertex i = 1; i <= n; ++i) arcs.push_back({2 * i - 1, 2 * i});
  return PerfectMatching::from_arcs(std::move(arcs));
}

inline PerfectMatching nested_matching(int n) {
  std::vector<Arc> arcs;
  for (Vertex i = 1; i <= n; ++i) arcs.push_back({i, 2 * n + 1 - i});
  return PerfectMatching::from_arcs(std::move(arcs));
}

struct RankCounterexample {
  std::string clause;
  PerfectMatching a;
  std::optional<PerfectMatching> b;
};

struct RankReport {
  int n = 0;
  std::size_t elements = 0;
  std::size_t covers = 0;
  bool partial_order = false;
  bool unique_min = false;
  bool unique_max = false;
  bool covers_step_one = false;
  bool monotone = false;
  bool rank_polynomial = false;
  QPolynomial rank_generating;
  std::optional<RankCounterexample> counterexample;

  bool pass() const {
    return partial_order && unique_min && unique_max && covers_step_one && monotone && rank_polynomial;
  }
};

/// Checks that ell is the rank function of the poset: unique minimum (the
/// all-adjacent matching, ell 0), unique maximum (the fully nested matching,
/// ell n^2 - n), every cover raises ell by one, ell is monotone, and the rank
/// generating function equals [2n-1]_q!!.
inline RankReport verify_rank_is_length(int n, int bound = kDefaultBruhatBound) {
  MatchingPoset poset(n, bound);
  RankReport rep;
  rep.n = n;
  rep.elements = poset.size();
  const auto& el = poset.elements();
  auto note = [&](std::string clause, std::size_t a, std::optional<std::size_t> b = std::nullopt) {
    if (rep.counterexample) return;
    rep.counterexample = RankCounterexample{std::move(clause), el[a], b ? std::optional{el[*b]} : std::nullopt};
  };

  if (auto bad = poset.partial_order_violation()) {
    note("partial_order", bad->first, bad->second);
  } else {
    rep.partial_order = true;
  }

  std::vector<std::size_t> minimal, maximal;
  for (std::size_t a = 0; a < poset.size(); ++a) {
    bool is_min = true, is_max = true;
    for (std::size_t b = 0; b < poset.size(); ++b) {
      if (b == a) continue;
      if (poset.leq(b, a)) is_min = false;
      if (poset.leq(a, b)) is_max = false;
    }
    if (is_min) minimal.push_back(a);
    if (is_max) maximal.push_back(a);
  }
  const Count top = static_cast<Count>(n) * n - n;
  rep.unique_min = minimal.size() == 1 && el[minimal[0]] == adjacent_matching(n) && poset.ell(minimal[0]) == 0;
  if (!rep.unique_min) note("unique_min", minimal.empty() ? 0 : minimal[0]);
  rep.unique_max = maximal.size() == 1 && el[maximal[0]] == nested_matching(n) && poset.ell(maximal[0]) == top;
  if (!rep.unique_max) note("unique_max", maximal.empty() ? 0 : maximal[0]);

  const auto covers = poset.cover_indices();
  rep.covers = covers.size();
  rep.covers_step_one = true;
  for (auto [a, b] : covers) {
    if (poset.ell(b) != poset.ell(a) + 1) {
      rep.covers_step_one = false;
      note("covers_step_one", a, b);
      break;
    }
  }

  rep.monotone = true;
  for (std::size_t a = 0; a < poset.size() && rep.monotone; ++a) {
    for (std::size_t b = 0; b < poset.size(); ++b) {
      if (poset.leq(a, b) && poset.ell(a) > poset.ell(b)) {
        rep.monotone = false;
        note("monotone", a, b);
        break;
      }
    }
  }

  // Poset rank: longest cover chain from below, relaxed along a linear
  // extension (elements sorted by down-set size).
  std::vector<std::size_t> order(poset.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::size_t> below(poset.size(), 0);
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (std::size_t b = 0; b < poset.size(); ++b) {
      if (b != a && poset.leq(b, a)) ++below[a];
    }
  }
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
  std::vector<std::vector<std::size_t>> preds(poset.size());
  for (auto [a, b] : covers) preds[b].push_back(a);
  std::vector<Count> rank(poset.size(), 0);
  for (std::size_t idx : order) {
    for (std::size_t p : preds[idx]) rank[idx] = std::max(rank[idx], rank[p] + 1);
  }
  for (Count r : rank) rep.rank_generating.add_term(static_cast<std::size_t>(r));
  rep.rank_polynomial = rep.rank_generating == q_double_factorial(n);
  if (!rep.rank_polynomial) note("rank_polynomial", 0);
  return rep;
}

/// Cover digraph in DOT; nodes labeled by the pair-list form and ell.
inline void write_dot(std::ostream& os, const MatchingPoset& poset) {
  os << "digraph bruhat_pm" << 2 * poset.n() << " {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    os << "  m" << i << " [label=\"" << format_matching(poset.elements()[i]) << "\\nell=" << poset.ell(i)
       << "\"];\n";
  }
  for (auto [a, b] : poset.cover_indices()) os << "  m" << a << " -> m" << b << ";\n";
  os << "}\n";
}

}  // namespace pmdepth

#endif  // PMDEPTH_BRUHAT_HPP
