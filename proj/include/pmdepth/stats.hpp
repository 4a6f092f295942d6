#ifndef PMDEPTH_STATS_HPP
#define PMDEPTH_STATS_HPP

// Scalar statistics of arc diagrams: vertex and arc depths, depth index,
// intertwining number, crossings/nestings/alignments, spans and the length
// function on perfect matchings.
//
// Pair counts use Fenwick-tree sweeps (O(k log k)); the all-pairs scans that
// define them live in the test oracles.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pmdepth/core.hpp"

namespace pmdepth {

using Count = std::int64_t;

struct CrNeAl {
  Count cro = 0;
  Count nst = 0;
  Count al = 0;

  friend bool operator==(const CrNeAl&, const CrNeAl&) = default;
};

struct StatRecord {
  Count dindex = 0;
  Count inumber = 0;
  Count cro = 0;
  Count nst = 0;
  Count al = 0;
  Count tvd = 0;
  Count ell = 0;
  Count cnumber = 0;
  Count span_sum = 0;

  friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

constexpr Count binom2(Count n) { return n < 2 ? 0 : n * (n - 1) / 2; }

namespace detail {

class Fenwick {
 public:
  explicit Fenwick(int size) : tree_(static_cast<std::size_t>(size) + 1, 0) {}

  void add(int pos, Count delta) {
    for (; pos < static_cast<int>(tree_.size()); pos += pos & -pos) tree_[pos] += delta;
  }
  Count prefix(int pos) const {
    Count s = 0;
    for (pos = std::min(pos, static_cast<int>(tree_.size()) - 1); pos > 0; pos -= pos & -pos) s += tree_[pos];
    return s;
  }
  /// Sum over the closed range [lo, hi]; empty when lo > hi.
  Count range(int lo, int hi) const { return lo > hi ? 0 : prefix(hi) - prefix(lo - 1); }

 private:
  std::vector<Count> tree_;
};

/// depth[v] for v in [1, ground]; index 0 unused.
inline std::vector<Count> vertex_depths(std::span<const Arc> arcs, int ground) {
  std::vector<Count> diff(static_cast<std::size_t>(ground) + 2, 0);
  for (const Arc& a : arcs) {
    if (a.hi - a.lo < 2) continue;
    diff[a.lo + 1] += 1;
    diff[a.hi] -= 1;
  }
  std::vector<Count> depth(static_cast<std::size_t>(ground) + 1, 0);
  Count running = 0;
  for (int v = 1; v <= ground; ++v) {
    running += diff[v];
    depth[v] = running;
  }
  return depth;
}

/// Depth of each arc, in input order. Arcs must be sorted by lo with distinct
/// lower endpoints (true for every arc diagram).
inline std::vector<Count> arc_depths(std::span<const Arc> arcs, int ground) {
  Fenwick his(ground);
  std::vector<Count> out(arcs.size());
  for (std::size_t idx = 0; idx < arcs.size(); ++idx) {
    const Arc& a = arcs[idx];
    out[idx] = his.range(a.hi + 1, ground);
    his.add(a.hi, 1);
  }
  return out;
}

/// Pairs i < k < j < l among the given arcs (sorted by distinct lo).
inline Count crossing_count(std::span<const Arc> arcs, int ground) {
  Fenwick his(ground);
  Count total = 0;
  for (const Arc& a : arcs) {
    total += his.range(a.lo + 1, a.hi - 1);
    his.add(a.hi, 1);
  }
  return total;
}

inline Count sum_depths(const std::vector<Count>& v) {
  Count s = 0;
  for (Count x : v) s += x;
  return s;
}

inline Count depth_index(std::span<const Arc> arcs, int ground) {
  Count base = 0;
  for (Count i = 1; i <= static_cast<Count>(arcs.size()); ++i) base += ground - i;
  return base - sum_depths(vertex_depths(arcs, ground)) + sum_depths(arc_depths(arcs, ground));
}

inline Count intertwining(const std::vector<GeneralizedArc>& ext) {
  Count total = 0;
  for (std::size_t a = 0; a < ext.size(); ++a) {
    for (std::size_t b = a + 1; b < ext.size(); ++b) {
      if (arcs_cross(ext[a], ext[b])) ++total;
    }
  }
  return total;
}

inline std::vector<GeneralizedArc> extended_matching_arcs(const PerfectMatching& m) {
  std::vector<GeneralizedArc> out;
  for (const Arc& a : m.arcs()) {
    out.push_back({Endpoint::at(a.lo), Endpoint::at(a.hi)});
    out.push_back({Endpoint::left_inf(), Endpoint::at(a.lo)});
    out.push_back({Endpoint::at(a.hi), Endpoint::right_inf()});
  }
  return out;
}

inline void check_vertex(int ground, Vertex v) {
  if (v < 1 || v > ground) {
    throw DomainError("vertex " + std::to_string(v) + " outside [1," + std::to_string(ground) + "]");
  }
}

inline Count arc_depth_in(std::span<const Arc> arcs, const Arc& target) {
  bool found = false;
  Count depth = 0;
  for (const Arc& a : arcs) {
    if (a == target) found = true;
    if (a.lo < target.lo && target.hi < a.hi) ++depth;
  }
  if (!found) {
    throw DomainError("(" + std::to_string(target.lo) + "," + std::to_string(target.hi) + ") is not an arc of the diagram");
  }
  return depth;
}

}  // namespace detail

/// Number of dots strictly below the arc.
constexpr Count span(const Arc& a) { return a.hi - a.lo - 1; }

/// Number of arcs (i,j) with i < v < j.
inline Count vertex_depth(const SetPartition& p, Vertex v) {
  detail::check_vertex(p.size(), v);
  return detail::vertex_depths(partition_arcs(p), p.size())[v];
}
inline Count vertex_depth(const PerfectMatching& m, Vertex v) {
  detail::check_vertex(m.ground_size(), v);
  return detail::vertex_depths(m.arcs(), m.ground_size())[v];
}

/// Number of arcs strictly covering `a`. Throws DomainError if `a` is not an
/// arc of the diagram.
inline Count arc_depth(const SetPartition& p, const Arc& a) { return detail::arc_depth_in(partition_arcs(p), a); }
inline Count arc_depth(const PerfectMatching& m, const Arc& a) { return detail::arc_depth_in(m.arcs(), a); }

/// sum_{i=1}^{k} (N - i) - sum_v depth(v) + sum_arcs depth(arc), with N the
/// ground-set size and k the number of arcs.
inline Count depth_index(const SetPartition& p) { return detail::depth_index(partition_arcs(p), p.size()); }
inline Count depth_index(const PerfectMatching& m) { return detail::depth_index(m.arcs(), m.ground_size()); }

/// Crossings in the extended arc diagram.
inline Count intertwining_number(const SetPartition& p) { return detail::intertwining(extended_arcs(p)); }
inline Count intertwining_number(const PerfectMatching& m) {
  return detail::intertwining(detail::extended_matching_arcs(m));
}

inline Count total_vertex_depth(const SetPartition& p) {
  return detail::sum_depths(detail::vertex_depths(partition_arcs(p), p.size()));
}
inline Count total_vertex_depth(const PerfectMatching& m) {
  return detail::sum_depths(detail::vertex_depths(m.arcs(), m.ground_size()));
}

/// Crossing pairs within the ordinary (non-extended) arc diagram.
inline Count crossing_number(const SetPartition& p) { return detail::crossing_count(partition_arcs(p), p.size()); }
inline Count crossing_number(const PerfectMatching& m) { return detail::crossing_count(m.arcs(), m.ground_size()); }

/// Crossings, nestings and alignments over the C(n,2) arc pairs, each pair
/// counted once with the arc of smaller lower endpoint as initial edge.
inline CrNeAl cr_ne_al(const PerfectMatching& m) {
  const int ground = m.ground_size();
  detail::Fenwick open_lo(ground);
  detail::Fenwick closed_lo(ground);
  CrNeAl out;
  Count opened = 0;
  for (Vertex v = 1; v <= ground; ++v) {
    const Vertex w = m.partner(v);
    if (w > v) {
      open_lo.add(v, 1);
      ++opened;
      continue;
    }
    // v closes the arc (w, v)
    open_lo.add(w, -1);
    out.cro += open_lo.range(w + 1, v - 1);
    out.nst += closed_lo.range(w + 1, v - 1);
    out.al += m.pairs() - opened;
    closed_lo.add(w, 1);
  }
  return out;
}

template <typename SpanFn = Count (*)(const Arc&)>
Count span_sum(const PerfectMatching& m, SpanFn span_fn = span) {
  Count s = 0;
  for (const Arc& a : m.arcs()) s += span_fn(a);
  return s;
}

/// Length function on fixed-point-free involutions: span sum minus crossing
/// number.
inline Count length_ds(const PerfectMatching& m) { return span_sum(m) - crossing_number(m); }

/// Every statistic of one matching. `span_fn` replaces the span of an arc in
/// span_sum and ell; it exists so tests can inject faults.
template <typename SpanFn = Count (*)(const Arc&)>
StatRecord stat_record(const PerfectMatching& m, SpanFn span_fn = span) {
  const int ground = m.ground_size();
  StatRecord r;
  const auto depths = detail::vertex_depths(m.arcs(), ground);
  const auto adepths = detail::arc_depths(m.arcs(), ground);
  Count base = 0;
  for (Count i = 1; i <= m.pairs(); ++i) base += ground - i;
  r.tvd = detail::sum_depths(depths);
  r.dindex = base - r.tvd + detail::sum_depths(adepths);
  r.inumber = intertwining_number(m);
  const CrNeAl c = cr_ne_al(m);
  r.cro = c.cro;
  r.nst = c.nst;
  r.al = c.al;
  r.cnumber = detail::crossing_count(m.arcs(), ground);
  r.span_sum = span_sum(m, span_fn);
  r.ell = r.span_sum - r.cnumber;
  return r;
}

}  // namespace pmdepth

#endif  // PMDEPTH_STATS_HPP
