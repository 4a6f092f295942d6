#ifndef PMDEPTH_SYMMETRY_HPP
#define PMDEPTH_SYMMETRY_HPP

// Explicit bijections on PM_2n:
//   phi: involution exchanging crossings and nestings, preserving alignments
//   psi: involution sending ell to n^2 - n - ell
//   psi . phi: dindex(m) = C(n+1, 2) + ell(psi(phi(m)))
//
// Both are built by the same canonical pairing: group matchings by a
// statistic key, sort each class, and pair the i-th element of class K with
// the i-th element of its mirror class. A self-mirrored class is reversed
// onto itself, fixing its middle element when the size is odd.

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "pmdepth/core.hpp"
#include "pmdepth/enumerate.hpp"
#include "pmdepth/stats.hpp"

namespace pmdepth {

inline constexpr int kDefaultSymmetryBound = 6;

class BijectionTable {
 public:
  /// `forward[i]` is the index of the image of `domain[i]`. Throws
  /// DomainError unless it is a permutation of the indices.
  BijectionTable(int n, std::vector<PerfectMatching> domain, std::vector<std::size_t> forward)
      : n_(n), domain_(std::move(domain)), forward_(std::move(forward)) {
    if (forward_.size() != domain_.size()) throw DomainError("bijection table size mismatch");
    std::vector<bool> hit(forward_.size(), false);
    for (std::size_t f : forward_) {
      if (f >= forward_.size() || hit[f]) throw DomainError("table is not a bijection");
      hit[f] = true;
    }
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      if (domain_[i].pairs() != n_) throw DomainError("matching of the wrong size in table");
      if (!index_.emplace(domain_[i], i).second) throw DomainError("duplicate matching in table domain");
    }
  }

  int n() const { return n_; }
  std::size_t size() const { return domain_.size(); }
  const std::vector<PerfectMatching>& domain() const { return domain_; }
  std::size_t image_index(std::size_t i) const { return forward_.at(i); }

  std::size_t index_of(const PerfectMatching& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw DomainError("matching " + format_matching(m) + " is not in the table");
    return it->second;
  }

  const PerfectMatching& operator()(const PerfectMatching& m) const { return domain_[forward_[index_of(m)]]; }

  bool is_involution() const {
    for (std::size_t i = 0; i < forward_.size(); ++i) {
      if (forward_[forward_[i]] != i) return false;
    }
    return true;
  }

  /// (this . inner)(m) = this(inner(m)).
  BijectionTable after(const BijectionTable& inner) const {
    if (inner.n_ != n_) throw DomainError("composing tables of different sizes");
    std::vector<std::size_t> out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) {
      const PerfectMatching& mid = inner.domain_[inner.forward_[i]];
      out[i] = inner.index_of((*this)(mid));
    }
    return BijectionTable(n_, inner.domain_, std::move(out));
  }

  /// "object,image" header then one quoted pair-list row per matching.
  void write_csv(std::ostream& os) const {
    os << "object,image\n";
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      os << '"' << format_matching(domain_[i]) << "\",\"" << format_matching(domain_[forward_[i]]) << "\"\n";
    }
  }

  static BijectionTable read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || detail::trim(line) != "object,image") {
      throw ParseError("bijection CSV must start with 'object,image'");
    }
    std::vector<std::pair<PerfectMatching, PerfectMatching>> rows;
    while (std::getline(is, line)) {
      if (detail::trim(line).empty()) continue;
      const auto q = detail::split(line, '"');
      // "a","b" splits into: "", a, ",", b, ""
      if (q.size() != 5 || q[2] != ",") throw ParseError("bad bijection CSV row: " + line);
      rows.emplace_back(parse_matching(q[1]), parse_matching(q[3]));
    }
    if (rows.empty()) throw ParseError("empty bijection CSV");
    const int n = rows.front().first.pairs();
    std::vector<PerfectMatching> domain;
    for (const auto& r : rows) domain.push_back(r.first);
    std::map<PerfectMatching, std::size_t> idx;
    for (std::size_t i = 0; i < domain.size(); ++i) idx.emplace(domain[i], i);
    std::vector<std::size_t> fwd;
    for (const auto& r : rows) {
      auto it = idx.find(r.second);
      if (it == idx.end()) throw ParseError("image " + format_matching(r.second) + " is outside the domain");
      fwd.push_back(it->second);
    }
    return BijectionTable(n, std::move(domain), std::move(fwd));
  }

  friend bool operator==(const BijectionTable& a, const BijectionTable& b) {
    return a.n_ == b.n_ && a.domain_ == b.domain_ && a.forward_ == b.forward_;
  }

 private:
  int n_;
  std::vector<PerfectMatching> domain_;
  std::vector<std::size_t> forward_;
  std::map<PerfectMatching, std::size_t> index_;
};

namespace detail {

template <typename Key>
BijectionTable mirror_pairing(int n, std::vector<PerfectMatching> domain, const std::vector<Key>& keys,
                              const std::function<Key(const Key&)>& mirror, const char* what) {
  std::map<Key, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < domain.size(); ++i) classes[keys[i]].push_back(i);
  for (auto& [k, members] : classes) {
    std::sort(members.begin(), members.end(),
              [&](std::size_t a, std::size_t b) { return domain[a] < domain[b]; });
  }
  std::vector<std::size_t> fwd(domain.size(), domain.size());
  for (const auto& [k, members] : classes) {
    const Key m = mirror(k);
    if (m == k) {
      for (std::size_t i = 0; i < members.size(); ++i) fwd[members[i]] = members[members.size() - 1 - i];
      continue;
    }
    auto it = classes.find(m);
    if (it == classes.end() || it->second.size() != members.size()) {
      throw ContractViolation(std::string(what) + ": mirrored class sizes differ for n = " + std::to_string(n));
    }
    for (std::size_t i = 0; i < members.size(); ++i) fwd[members[i]] = it->second[i];
  }
  return BijectionTable(n, std::move(domain), std::move(fwd));
}

inline void check_symmetry_bound(int n, int bound) {
  if (n < 1) throw DomainError("bijection tables need n >= 1");
  if (n > bound) {
    throw DomainError("n = " + std::to_string(n) + " exceeds the configured bound " + std::to_string(bound));
  }
}

}  // namespace detail

/// Involution with cro(phi(m)) = nst(m), nst(phi(m)) = cro(m), al preserved.
inline BijectionTable cn_involution(int n, int bound = kDefaultSymmetryBound) {
  detail::check_symmetry_bound(n, bound);
  auto domain = perfect_matchings(n);
  using Key = std::tuple<Count, Count, Count>;
  std::vector<Key> keys;
  for (const auto& m : domain) {
    const auto c = cr_ne_al(m);
    keys.emplace_back(c.cro, c.nst, c.al);
  }
  return detail::mirror_pairing<Key>(
      n, std::move(domain), keys,
      [](const Key& k) { return Key{std::get<1>(k), std::get<0>(k), std::get<2>(k)}; }, "cn_involution");
}

/// Involution with ell(psi(m)) = n^2 - n - ell(m).
inline BijectionTable length_complement(int n, int bound = kDefaultSymmetryBound) {
  detail::check_symmetry_bound(n, bound);
  auto domain = perfect_matchings(n);
  std::vector<Count> keys;
  for (const auto& m : domain) keys.push_back(length_ds(m));
  const Count top = static_cast<Count>(n) * n - n;
  return detail::mirror_pairing<Count>(
      n, std::move(domain), keys, [top](const Count& r) { return top - r; }, "length_complement");
}

/// psi . phi, satisfying dindex(m) = C(n+1, 2) + ell(psi(phi(m))).
inline BijectionTable main_theorem_witness(int n, int bound = kDefaultSymmetryBound) {
  return length_complement(n, bound).after(cn_involution(n, bound));
}

}  // namespace pmdepth

#endif  // PMDEPTH_SYMMETRY_HPP
