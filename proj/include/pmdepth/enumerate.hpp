#ifndef PMDEPTH_ENUMERATE_HPP
#define PMDEPTH_ENUMERATE_HPP

// Exhaustive streams over set partitions (restricted-growth-string lex order)
// and perfect matchings (smallest free vertex matched to each larger free
// vertex in ascending order), plus distribution aggregation over them.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "pmdepth/core.hpp"
#include "pmdepth/qpoly.hpp"
#include "pmdepth/stats.hpp"

namespace pmdepth {

enum class Family { Partitions, Matchings };

enum class Statistic { DIndex, INumber, Ell, Cro, Nst, Al, Tvd, CNumber, SpanSum };

inline std::string_view to_string(Family f) { return f == Family::Partitions ? "partitions" : "matchings"; }

inline Family parse_family(std::string_view s) {
  if (s == "partitions") return Family::Partitions;
  if (s == "matchings") return Family::Matchings;
  throw ParseError("unknown family '" + std::string(s) + "'");
}

inline std::string_view to_string(Statistic s) {
  switch (s) {
    case Statistic::DIndex: return "dindex";
    case Statistic::INumber: return "inumber";
    case Statistic::Ell: return "ell";
    case Statistic::Cro: return "cro";
    case Statistic::Nst: return "nst";
    case Statistic::Al: return "al";
    case Statistic::Tvd: return "tvd";
    case Statistic::CNumber: return "cnumber";
    case Statistic::SpanSum: return "span_sum";
  }
  return "?";
}

inline Statistic parse_statistic(std::string_view s) {
  for (auto st : {Statistic::DIndex, Statistic::INumber, Statistic::Ell, Statistic::Cro, Statistic::Nst,
                  Statistic::Al, Statistic::Tvd, Statistic::CNumber, Statistic::SpanSum}) {
    if (to_string(st) == s) return st;
  }
  throw ParseError("unknown statistic '" + std::string(s) + "'");
}

/// cro, nst, al and ell are only defined on perfect matchings.
constexpr bool defined_on_partitions(Statistic s) {
  return s == Statistic::DIndex || s == Statistic::INumber || s == Statistic::Tvd || s == Statistic::CNumber ||
         s == Statistic::SpanSum;
}

inline Count statistic_value(const StatRecord& r, Statistic s) {
  switch (s) {
    case Statistic::DIndex: return r.dindex;
    case Statistic::INumber: return r.inumber;
    case Statistic::Ell: return r.ell;
    case Statistic::Cro: return r.cro;
    case Statistic::Nst: return r.nst;
    case Statistic::Al: return r.al;
    case Statistic::Tvd: return r.tvd;
    case Statistic::CNumber: return r.cnumber;
    case Statistic::SpanSum: return r.span_sum;
  }
  return 0;
}

inline Count statistic_value(const SetPartition& p, Statistic s) {
  switch (s) {
    case Statistic::DIndex: return depth_index(p);
    case Statistic::INumber: return intertwining_number(p);
    case Statistic::Tvd: return total_vertex_depth(p);
    case Statistic::CNumber: return crossing_number(p);
    case Statistic::SpanSum: {
      Count sum = 0;
      for (const Arc& a : partition_arcs(p)) sum += span(a);
      return sum;
    }
    default:
      throw DomainError(std::string(to_string(s)) + " is only defined on perfect matchings");
  }
}

// ---------------------------------------------------------------------------
// Streams

/// Set partitions of [n] in RGS-lex order. A nonempty `prefix` restricts the
/// stream to partitions whose restricted growth string starts with it; the
/// streams over all valid prefixes of one length partition the full stream.
class SetPartitionStream {
 public:
  explicit SetPartitionStream(int n, std::vector<int> prefix = {}) : n_(n), prefix_(std::move(prefix)) {
    if (n < 1) throw DomainError("set partitions need n >= 1");
    if (static_cast<int>(prefix_.size()) > n) throw DomainError("prefix longer than n");
    int mx = -1;
    for (int a : prefix_) {
      if (a < 0 || a > mx + 1) throw DomainError("prefix is not a restricted growth string");
      mx = std::max(mx, a);
    }
    reset();
  }

  void reset() {
    rgs_.assign(static_cast<std::size_t>(n_), 0);
    std::copy(prefix_.begin(), prefix_.end(), rgs_.begin());
    done_ = false;
  }

  std::optional<SetPartition> next() {
    if (done_) return std::nullopt;
    SetPartition out = SetPartition::from_rgs(rgs_);
    advance();
    return out;
  }

  /// Current restricted growth string (valid before `next` returns nullopt).
  const std::vector<int>& rgs() const { return rgs_; }

 private:
  void advance() {
    // prefix maxima: running max of rgs_[0..i)
    std::vector<int> pmax(static_cast<std::size_t>(n_), 0);
    int mx = -1;
    for (int i = 0; i < n_; ++i) {
      pmax[i] = mx;
      mx = std::max(mx, rgs_[i]);
    }
    const int frozen = std::max<int>(1, static_cast<int>(prefix_.size()));
    for (int i = n_ - 1; i >= frozen; --i) {
      if (rgs_[i] <= pmax[i]) {
        ++rgs_[i];
        std::fill(rgs_.begin() + i + 1, rgs_.end(), 0);
        return;
      }
    }
    done_ = true;
  }

  int n_;
  std::vector<int> prefix_;
  std::vector<int> rgs_;
  bool done_ = false;
};

/// Perfect matchings of [2n]: the smallest free vertex is matched with each
/// larger free vertex in ascending order, recursively. `first_partner`, when
/// set, fixes the partner of vertex 1 (one shard of the full stream).
class PerfectMatchingStream {
 public:
  explicit PerfectMatchingStream(int n, std::optional<Vertex> first_partner = std::nullopt)
      : n_(n), first_partner_(first_partner) {
    if (n < 1) throw DomainError("perfect matchings need n >= 1");
    if (first_partner && (*first_partner < 2 || *first_partner > 2 * n)) {
      throw DomainError("partner of vertex 1 must lie in [2, 2n]");
    }
    reset();
  }

  void reset() {
    choice_.assign(static_cast<std::size_t>(n_), 0);
    if (first_partner_) choice_[0] = *first_partner_ - 2;
    done_ = false;
  }

  std::optional<PerfectMatching> next() {
    if (done_) return std::nullopt;
    PerfectMatching out = build();
    advance();
    return out;
  }

 private:
  PerfectMatching build() const {
    std::vector<Vertex> free;
    for (Vertex v = 1; v <= 2 * n_; ++v) free.push_back(v);
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n_));
    for (int level = 0; level < n_; ++level) {
      const Vertex lo = free.front();
      const Vertex hi = free[1 + choice_[level]];
      arcs.push_back({lo, hi});
      free.erase(free.begin() + 1 + choice_[level]);
      free.erase(free.begin());
    }
    return PerfectMatching::from_arcs(std::move(arcs));
  }

  void advance() {
    const int frozen = first_partner_ ? 1 : 0;
    for (int level = n_ - 1; level >= frozen; --level) {
      // 2(n - level) free vertices remain at this level, so 2(n - level) - 1 choices.
      if (choice_[level] + 1 < 2 * (n_ - level) - 1) {
        ++choice_[level];
        std::fill(choice_.begin() + level + 1, choice_.end(), 0);
        return;
      }
    }
    done_ = true;
  }

  int n_;
  std::optional<Vertex> first_partner_;
  std::vector<int> choice_;
  bool done_ = false;
};

template <typename Fn>
void for_each_set_partition(int n, Fn&& fn) {
  SetPartitionStream s(n);
  while (auto p = s.next()) fn(*p);
}

template <typename Fn>
void for_each_perfect_matching(int n, Fn&& fn) {
  PerfectMatchingStream s(n);
  while (auto m = s.next()) fn(*m);
}

inline std::vector<SetPartition> set_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

inline std::vector<PerfectMatching> perfect_matchings(int n) {
  std::vector<PerfectMatching> out;
  for_each_perfect_matching(n, [&](const PerfectMatching& m) { out.push_back(m); });
  return out;
}

/// All restricted growth strings of the given length (valid shard prefixes).
inline std::vector<std::vector<int>> rgs_prefixes(int length) {
  std::vector<std::vector<int>> out;
  if (length < 1) return {{}};
  SetPartitionStream walk(length);
  for (;;) {
    auto rgs = walk.rgs();
    if (!walk.next()) break;
    out.push_back(std::move(rgs));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Aggregation

namespace detail {

inline void check_stat_family(Family family, Statistic stat) {
  if (family == Family::Partitions && !defined_on_partitions(stat)) {
    throw DomainError(std::string(to_string(stat)) + " is only defined on perfect matchings");
  }
}

/// Runs `work(shard_index)` for shard_index in [0, shards) on up to `threads`
/// workers and returns the per-shard results in shard order.
template <typename R, typename Work>
std::vector<R> run_shards(std::size_t shards, unsigned threads, Work work) {
  std::vector<R> results(shards);
  if (threads <= 1 || shards <= 1) {
    for (std::size_t s = 0; s < shards; ++s) results[s] = work(s);
    return results;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t s = t; s < shards; s += threads) results[s] = work(s);
    });
  }
  pool.clear();  // joins
  return results;
}

}  // namespace detail

/// Sum over the family of q^{stat(object)}. With threads > 1 the stream is
/// split into shards (first partner of vertex 1 / RGS prefixes) and the
/// partial polynomials are added.
inline QPolynomial generating_polynomial(Family family, int n, Statistic stat, unsigned threads = 1) {
  detail::check_stat_family(family, stat);
  if (family == Family::Matchings) {
    const auto shards = static_cast<std::size_t>(2 * n - 1);
    auto parts = detail::run_shards<QPolynomial>(shards, threads, [&](std::size_t s) {
      QPolynomial acc;
      PerfectMatchingStream stream(n, static_cast<Vertex>(s + 2));
      while (auto m = stream.next()) acc.add_term(static_cast<std::size_t>(statistic_value(stat_record(*m), stat)));
      return acc;
    });
    QPolynomial total;
    for (const auto& p : parts) total += p;
    return total;
  }
  const auto prefixes = rgs_prefixes(std::min(n, 3));
  auto parts = detail::run_shards<QPolynomial>(prefixes.size(), threads, [&](std::size_t s) {
    QPolynomial acc;
    SetPartitionStream stream(n, prefixes[s]);
    while (auto p = stream.next()) acc.add_term(static_cast<std::size_t>(statistic_value(*p, stat)));
    return acc;
  });
  QPolynomial total;
  for (const auto& p : parts) total += p;
  return total;
}

struct DistributionTable {
  std::vector<Statistic> stats;
  std::map<std::vector<Count>, std::uint64_t> counts;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [key, c] : counts) t += c;
    return t;
  }

  std::uint64_t at(const std::vector<Count>& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
  }

  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

inline DistributionTable joint_distribution(Family family, int n, const std::vector<Statistic>& stats) {
  if (stats.empty()) throw DomainError("joint distribution needs at least one statistic");
  for (auto s : stats) detail::check_stat_family(family, s);
  DistributionTable table{stats, {}};
  std::vector<Count> key(stats.size());
  if (family == Family::Matchings) {
    for_each_perfect_matching(n, [&](const PerfectMatching& m) {
      const auto r = stat_record(m);
      for (std::size_t i = 0; i < stats.size(); ++i) key[i] = statistic_value(r, stats[i]);
      ++table.counts[key];
    });
  } else {
    for_each_set_partition(n, [&](const SetPartition& p) {
      for (std::size_t i = 0; i < stats.size(); ++i) key[i] = statistic_value(p, stats[i]);
      ++table.counts[key];
    });
  }
  return table;
}

/// One row per object: canonical string, then every StatRecord field.
/// Fields undefined on set partitions (cro, nst, al, ell) are left empty.
inline void write_csv(std::ostream& os, Family family, int n) {
  os << "object,dindex,inumber,cro,nst,al,tvd,ell,cnumber,span_sum\n";
  if (family == Family::Matchings) {
    for_each_perfect_matching(n, [&](const PerfectMatching& m) {
      const auto r = stat_record(m);
      os << '"' << format_matching(m) << '"' << ',' << r.dindex << ',' << r.inumber << ',' << r.cro << ',' << r.nst
         << ',' << r.al << ',' << r.tvd << ',' << r.ell << ',' << r.cnumber << ',' << r.span_sum << '\n';
    });
    return;
  }
  for_each_set_partition(n, [&](const SetPartition& p) {
    os << '"' << format_partition(p) << '"' << ',' << depth_index(p) << ',' << intertwining_number(p) << ",,,,"
       << total_vertex_depth(p) << ",," << crossing_number(p) << ','
       << statistic_value(p, Statistic::SpanSum) << '\n';
  });
}

}  // namespace pmdepth

#endif  // PMDEPTH_ENUMERATE_HPP
