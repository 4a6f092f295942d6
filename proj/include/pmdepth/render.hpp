#ifndef PMDEPTH_RENDER_HPP
#define PMDEPTH_RENDER_HPP

// SVG 1.1 arc diagrams. Vertices sit on a horizontal baseline; every arc is an
// elliptical arc above it whose height grows with its length. In extended
// mode left half-arcs leave each opener toward the left edge and right
// half-arcs leave each closer toward the right edge, fanned out by rank so
// that half-arcs on the same side never cross.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pmdepth/core.hpp"
#include "pmdepth/stats.hpp"

namespace pmdepth {

enum class PairKind { Crossings, Nestings, Alignments };

inline PairKind parse_pair_kind(std::string_view s) {
  if (s == "crossings") return PairKind::Crossings;
  if (s == "nestings") return PairKind::Nestings;
  if (s == "alignments") return PairKind::Alignments;
  throw ParseError("unknown highlight '" + std::string(s) + "'");
}

struct RenderSpec {
  std::variant<SetPartition, PerfectMatching> object;
  bool extended = false;
  int width = 640;
  int height = 320;
  std::optional<PairKind> highlight;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

/// Arcs of `m` that take part in at least one pair of the given kind.
inline std::set<Arc> highlighted_arcs(const PerfectMatching& m, PairKind kind) {
  std::set<Arc> out;
  const auto& arcs = m.arcs();
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (std::size_t b = a + 1; b < arcs.size(); ++b) {
      const Arc& e = arcs[a];  // e.lo < f.lo
      const Arc& f = arcs[b];
      bool hit = false;
      switch (kind) {
        case PairKind::Crossings: hit = f.lo < e.hi && e.hi < f.hi; break;
        case PairKind::Nestings: hit = f.hi < e.hi; break;
        case PairKind::Alignments: hit = e.hi < f.lo; break;
      }
      if (hit) {
        out.insert(e);
        out.insert(f);
      }
    }
  }
  return out;
}

}  // namespace detail

inline std::string render_svg(const RenderSpec& spec) {
  if (spec.width < 64 || spec.height < 64) throw DomainError("canvas must be at least 64x64 pixels");
  if (spec.highlight && !std::holds_alternative<PerfectMatching>(spec.object)) {
    throw DomainError("highlighting is only defined for perfect matchings");
  }
  const SetPartition partition = std::holds_alternative<SetPartition>(spec.object)
                                     ? std::get<SetPartition>(spec.object)
                                     : std::get<PerfectMatching>(spec.object).to_partition();
  const int n = partition.size();
  const auto arcs = partition_arcs(partition);
  std::set<Arc> marked;
  if (spec.highlight) marked = detail::highlighted_arcs(std::get<PerfectMatching>(spec.object), *spec.highlight);

  const double side = spec.extended ? spec.width * 0.18 : 24.0;
  const double baseline = spec.height - 36.0;
  const double top = 16.0;
  const double step = n > 1 ? (spec.width - 2 * side) / (n - 1) : 0.0;
  auto x_of = [&](Vertex v) { return n > 1 ? side + (v - 1) * step : spec.width / 2.0; };

  int longest = 1;
  for (const Arc& a : arcs) longest = std::max(longest, a.hi - a.lo);
  const double rise = std::min(step / 2.0, (baseline - top) / longest);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec.width) +
         "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
         std::to_string(spec.height) + "\">\n";
  svg += "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const Arc& a : arcs) {
    const double x1 = x_of(a.lo), x2 = x_of(a.hi);
    const double rx = (x2 - x1) / 2.0;
    const double ry = rise * (a.hi - a.lo);
    const bool hl = marked.count(a) != 0;
    svg += "<path class=\"arc" + std::string(hl ? " highlight\" stroke=\"#d62728\" stroke-width=\"3\"" : "\"") +
           " d=\"M " + detail::fmt(x1) + " " + detail::fmt(baseline) + " A " + detail::fmt(rx) + " " +
           detail::fmt(ry) + " 0 0 1 " + detail::fmt(x2) + " " + detail::fmt(baseline) + "\"/>\n";
  }
  if (spec.extended) {
    const auto openers = partition.openers();  // ascending
    const auto closers = partition.closers();  // ascending
    const std::size_t most = std::max(openers.size(), closers.size());
    const double fan = (baseline - top) / (static_cast<double>(most) + 1.0);
    // Leftmost opener exits lowest; rightmost closer exits lowest.
    for (std::size_t k = 0; k < openers.size(); ++k) {
      const double x = x_of(openers[k]);
      const double y = baseline - fan * (k + 1);
      svg += "<path class=\"half-arc left\" stroke=\"#d62728\" d=\"M 0.00 " + detail::fmt(y) + " C " +
             detail::fmt(x * 0.6) + " " + detail::fmt(y) + " " + detail::fmt(x) + " " +
             detail::fmt(y + (baseline - y) * 0.4) + " " + detail::fmt(x) + " " + detail::fmt(baseline) + "\"/>\n";
    }
    for (std::size_t k = 0; k < closers.size(); ++k) {
      const double x = x_of(closers[closers.size() - 1 - k]);
      const double y = baseline - fan * (k + 1);
      const double w = spec.width;
      svg += "<path class=\"half-arc right\" stroke=\"#d62728\" d=\"M " + detail::fmt(x) + " " +
             detail::fmt(baseline) + " C " + detail::fmt(x) + " " + detail::fmt(y + (baseline - y) * 0.4) + " " +
             detail::fmt(x + (w - x) * 0.4) + " " + detail::fmt(y) + " " + detail::fmt(w) + " " + detail::fmt(y) +
             "\"/>\n";
    }
  }
  svg += "</g>\n<g fill=\"black\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">\n";
  for (Vertex v = 1; v <= n; ++v) {
    svg += "<circle class=\"vertex\" cx=\"" + detail::fmt(x_of(v)) + "\" cy=\"" + detail::fmt(baseline) +
           "\" r=\"3.5\"/>\n";
    svg += "<text x=\"" + detail::fmt(x_of(v)) + "\" y=\"" + detail::fmt(baseline + 22) + "\">" +
           std::to_string(v) + "</text>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace pmdepth

#endif  // PMDEPTH_RENDER_HPP
