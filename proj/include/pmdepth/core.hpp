#ifndef PMDEPTH_CORE_HPP
#define PMDEPTH_CORE_HPP

// Set partitions, perfect matchings and their arc diagrams.
//
// Vertices are 1-based throughout. Every type is an immutable value once
// constructed; the factory functions validate and canonicalize.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pmdepth/error.hpp"

namespace pmdepth {

using Vertex = int;

struct Arc {
  Vertex lo = 0;
  Vertex hi = 0;

  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

/// Endpoint of a generalized arc: a vertex or one of the two sentinels.
/// Ordered LEFT_INF < 1 < 2 < ... < n < RIGHT_INF.
class Endpoint {
 public:
  enum class Kind : std::uint8_t { LeftInf = 0, Finite = 1, RightInf = 2 };

  static constexpr Endpoint left_inf() { return Endpoint(Kind::LeftInf, 0); }
  static constexpr Endpoint right_inf() { return Endpoint(Kind::RightInf, 0); }
  static constexpr Endpoint at(Vertex v) { return Endpoint(Kind::Finite, v); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr Vertex vertex() const { return vertex_; }

  friend constexpr auto operator<=>(const Endpoint&, const Endpoint&) = default;

 private:
  constexpr Endpoint(Kind k, Vertex v) : kind_(k), vertex_(v) {}
  // Member order matters: the defaulted comparison orders by kind first.
  Kind kind_;
  Vertex vertex_;
};

struct GeneralizedArc {
  Endpoint lo;
  Endpoint hi;

  friend constexpr auto operator<=>(const GeneralizedArc&, const GeneralizedArc&) = default;
};

/// True iff the two arcs cross, i.e. a.lo < b.lo < a.hi < b.hi or the same
/// with the roles swapped.
template <typename A>
constexpr bool arcs_cross(const A& a, const A& b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
         (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

/// A partition of {1,...,n} in standard form: ascending elements inside each
/// block, blocks ordered by their minima.
class SetPartition {
 public:
  using Block = std::vector<Vertex>;

  /// Validates and canonicalizes. Throws DomainError on an empty block, a
  /// duplicate, an element outside [n], or a missing element.
  static SetPartition from_blocks(int n, std::vector<Block> blocks) {
    if (n < 1) throw DomainError("ground set size must be positive");
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (auto& b : blocks) {
      if (b.empty()) throw DomainError("empty block");
      for (Vertex v : b) {
        if (v < 1 || v > n) {
          throw DomainError("element " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
        }
        if (seen[v]++) throw DomainError("duplicate element " + std::to_string(v));
      }
      std::sort(b.begin(), b.end());
    }
    for (Vertex v = 1; v <= n; ++v) {
      if (!seen[v]) throw DomainError("missing element " + std::to_string(v));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return SetPartition(n, std::move(blocks));
  }

  /// Builds from a restricted growth string a[0..n) with a[0] = 0 and
  /// a[i] <= 1 + max(a[0..i)). Element i+1 goes to block a[i].
  static SetPartition from_rgs(const std::vector<int>& rgs) {
    if (rgs.empty()) throw DomainError("empty restricted growth string");
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      const int b = rgs[i];
      if (b < 0 || b > static_cast<int>(blocks.size())) {
        throw DomainError("not a restricted growth string");
      }
      if (b == static_cast<int>(blocks.size())) blocks.emplace_back();
      blocks[b].push_back(static_cast<Vertex>(i + 1));
    }
    return SetPartition(static_cast<int>(rgs.size()), std::move(blocks));
  }

  int size() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  std::vector<Vertex> openers() const {
    std::vector<Vertex> out;
    for (const auto& b : blocks_) out.push_back(b.front());
    return out;
  }

  std::vector<Vertex> closers() const {
    std::vector<Vertex> out;
    for (const auto& b : blocks_) out.push_back(b.back());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> rgs() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      for (Vertex v : blocks_[b]) out[v - 1] = static_cast<int>(b);
    }
    return out;
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {}

  int n_;
  std::vector<Block> blocks_;
};

/// n disjoint arcs covering {1,...,2n}, sorted by lower endpoint.
class PerfectMatching {
 public:
  /// Throws DomainError unless the arcs cover [2n] exactly once.
  static PerfectMatching from_arcs(std::vector<Arc> arcs) {
    if (arcs.empty()) throw DomainError("a perfect matching needs at least one arc");
    const int ground = 2 * static_cast<int>(arcs.size());
    std::vector<Vertex> partner(static_cast<std::size_t>(ground) + 1, 0);
    for (auto& a : arcs) {
      if (a.lo > a.hi) std::swap(a.lo, a.hi);
      if (a.lo == a.hi) throw DomainError("loop arc at " + std::to_string(a.lo));
      for (Vertex v : {a.lo, a.hi}) {
        if (v < 1 || v > ground) {
          throw DomainError("vertex " + std::to_string(v) + " outside [1," + std::to_string(ground) + "]");
        }
        if (partner[v] != 0) throw DomainError("vertex " + std::to_string(v) + " touches two arcs");
      }
      partner[a.lo] = a.hi;
      partner[a.hi] = a.lo;
    }
    std::sort(arcs.begin(), arcs.end());
    return PerfectMatching(std::move(arcs), std::move(partner));
  }

  /// From a fixed-point-free involution given as a 1-based image list.
  static PerfectMatching from_involution(const std::vector<Vertex>& sigma) {
    const int ground = static_cast<int>(sigma.size());
    if (ground == 0 || ground % 2 != 0) throw DomainError("involution must act on an even, nonempty set");
    std::vector<Arc> arcs;
    for (Vertex i = 1; i <= ground; ++i) {
      const Vertex j = sigma[i - 1];
      if (j < 1 || j > ground || sigma[j - 1] != i) throw DomainError("not an involution");
      if (j == i) throw DomainError("involution has a fixed point at " + std::to_string(i));
      if (i < j) arcs.push_back({i, j});
    }
    return from_arcs(std::move(arcs));
  }

  int pairs() const { return static_cast<int>(arcs_.size()); }
  int ground_size() const { return 2 * pairs(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  Vertex partner(Vertex v) const { return partner_.at(v); }

  SetPartition to_partition() const {
    std::vector<SetPartition::Block> blocks;
    blocks.reserve(arcs_.size());
    for (const Arc& a : arcs_) blocks.push_back({a.lo, a.hi});
    return SetPartition::from_blocks(ground_size(), std::move(blocks));
  }

  friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) { return a.arcs_ == b.arcs_; }
  friend auto operator<=>(const PerfectMatching& a, const PerfectMatching& b) {
    if (auto c = a.arcs_.size() <=> b.arcs_.size(); c != 0) return c;
    return a.arcs_ <=> b.arcs_;
  }

 private:
  PerfectMatching(std::vector<Arc> arcs, std::vector<Vertex> partner)
      : arcs_(std::move(arcs)), partner_(std::move(partner)) {}

  std::vector<Arc> arcs_;
  std::vector<Vertex> partner_;  // index 0 unused
};

/// Arcs joining consecutive elements of each block, sorted by lo.
inline std::vector<Arc> partition_arcs(const SetPartition& p) {
  std::vector<Arc> arcs;
  for (const auto& b : p.blocks()) {
    for (std::size_t i = 1; i < b.size(); ++i) arcs.push_back({b[i - 1], b[i]});
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

/// The arc diagram plus a half-arc from LEFT_INF into every opener and one
/// from every closer out to RIGHT_INF. Sorted by (lo, hi).
inline std::vector<GeneralizedArc> extended_arcs(const SetPartition& p) {
  std::vector<GeneralizedArc> out;
  for (const Arc& a : partition_arcs(p)) out.push_back({Endpoint::at(a.lo), Endpoint::at(a.hi)});
  for (Vertex v : p.openers()) out.push_back({Endpoint::left_inf(), Endpoint::at(v)});
  for (Vertex v : p.closers()) out.push_back({Endpoint::at(v), Endpoint::right_inf()});
  std::sort(out.begin(), out.end());
  return out;
}

inline PerfectMatching matching_from_partition(const SetPartition& p) {
  if (p.size() % 2 != 0) throw DomainError("odd ground set cannot carry a perfect matching");
  std::vector<Arc> arcs;
  for (const auto& b : p.blocks()) {
    if (b.size() != 2) throw DomainError("block of size " + std::to_string(b.size()) + " in a matching");
    arcs.push_back({b[0], b[1]});
  }
  return PerfectMatching::from_arcs(std::move(arcs));
}

/// sigma[i-1] = image of i.
inline std::vector<Vertex> as_involution(const PerfectMatching& m) {
  std::vector<Vertex> sigma(static_cast<std::size_t>(m.ground_size()));
  for (const Arc& a : m.arcs()) {
    sigma[a.lo - 1] = a.hi;
    sigma[a.hi - 1] = a.lo;
  }
  return sigma;
}

// ---------------------------------------------------------------------------
// Text forms

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline int parse_positive(std::string_view tok) {
  tok = trim(tok);
  if (tok.empty()) throw ParseError("empty element token");
  long long v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') throw ParseError("bad character '" + std::string(1, c) + "' in element token");
    v = v * 10 + (c - '0');
    if (v > 1'000'000) throw ParseError("element token too large");
  }
  return static_cast<int>(v);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace detail

/// Bar notation: blocks separated by '|'. For n <= 9 a comma-free block is a
/// run of single-digit labels ("1378"); a block containing commas is always
/// read as comma-separated labels. For n >= 10 a comma-free block is one label.
inline SetPartition parse_partition(std::string_view text, int n) {
  if (n < 1) throw ParseError("ground set size must be positive");
  text = detail::trim(text);
  if (text.empty()) throw ParseError("empty partition text");
  std::vector<SetPartition::Block> blocks;
  for (std::string_view raw : detail::split(text, '|')) {
    const auto block_text = detail::trim(raw);
    if (block_text.empty()) throw ParseError("empty block");
    SetPartition::Block block;
    if (block_text.find(',') != std::string_view::npos) {
      for (auto tok : detail::split(block_text, ',')) block.push_back(detail::parse_positive(tok));
    } else if (n <= 9) {
      for (char c : block_text) block.push_back(detail::parse_positive(std::string_view(&c, 1)));
    } else {
      block.push_back(detail::parse_positive(block_text));
    }
    blocks.push_back(std::move(block));
  }
  try {
    return SetPartition::from_blocks(n, std::move(blocks));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

inline std::string format_partition(const SetPartition& p) {
  const bool compact = p.size() <= 9;
  std::string out;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b) out += '|';
    const auto& block = p.blocks()[b];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i && !compact) out += ',';
      out += std::to_string(block[i]);
    }
  }
  return out;
}

/// "1-4,2-3": comma-separated lo-hi pairs. Any order is accepted.
inline PerfectMatching parse_matching(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) throw ParseError("empty matching text");
  std::vector<Arc> arcs;
  for (auto pair : detail::split(text, ',')) {
    const auto parts = detail::split(detail::trim(pair), '-');
    if (parts.size() != 2) throw ParseError("expected lo-hi pair, got '" + std::string(pair) + "'");
    arcs.push_back({detail::parse_positive(parts[0]), detail::parse_positive(parts[1])});
  }
  try {
    return PerfectMatching::from_arcs(std::move(arcs));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

inline std::string format_matching(const PerfectMatching& m) {
  std::string out;
  for (const Arc& a : m.arcs()) {
    if (!out.empty()) out += ',';
    out += std::to_string(a.lo) + '-' + std::to_string(a.hi);
  }
  return out;
}

inline std::string format_endpoint(const Endpoint& e) {
  switch (e.kind()) {
    case Endpoint::Kind::LeftInf:
      return "-inf";
    case Endpoint::Kind::RightInf:
      return "+inf";
    case Endpoint::Kind::Finite:
      break;
  }
  return std::to_string(e.vertex());
}

}  // namespace pmdepth

#endif  // PMDEPTH_CORE_HPP
