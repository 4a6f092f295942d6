#ifndef PMDEPTH_VERIFY_HPP
#define PMDEPTH_VERIFY_HPP

// Registry of the identities between the statistics and an exhaustive runner.
//
// Per-object identities stop at the first counterexample in enumeration
// order; distribution identities always finish the enumeration and compare
// polynomials exactly.

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmdepth/bruhat.hpp"
#include "pmdepth/core.hpp"
#include "pmdepth/enumerate.hpp"
#include "pmdepth/qpoly.hpp"
#include "pmdepth/stats.hpp"
#include "pmdepth/symmetry.hpp"

namespace pmdepth {

enum class CheckKind { PerObject, Distribution, Structure };

struct IdentityCheck {
  std::string id;
  Family family;
  CheckKind kind;
  std::string statement;
};

inline const std::vector<IdentityCheck>& identity_registry() {
  static const std::vector<IdentityCheck> registry = {
      {"DI_SUM", Family::Partitions, CheckKind::PerObject, "dindex(A) + inumber(A) = C(N,2) for every A in Pi_N"},
      {"TRIPLE", Family::Matchings, CheckKind::PerObject, "cro + nst + al = C(n,2)"},
      {"DEPTH_ID", Family::Matchings, CheckKind::PerObject,
       "sum of vertex depths = sum of spans; nst = sum of arc depths"},
      {"DINDEX_FORM", Family::Matchings, CheckKind::PerObject,
       "dindex = sum_{i=1}^{n}(2n-i) - tvd + nst = n^2 + 2C(n,2) - tvd - cro - al"},
      {"INUM_LIN", Family::Matchings, CheckKind::PerObject, "inumber = 3cro + 2nst + al"},
      {"TVD", Family::Matchings, CheckKind::PerObject, "tvd = span sum = 2(cro + nst) = 2C(n,2) - 2al"},
      {"STAT_FORM", Family::Matchings, CheckKind::PerObject, "ell = cro + 2nst; dindex = n^2 + C(n,2) - 2cro - nst"},
      {"L_GEN", Family::Matchings, CheckKind::Distribution, "sum q^ell = [2n-1]_q!!"},
      {"MAIN", Family::Matchings, CheckKind::Distribution, "sum q^dindex = q^C(n+1,2) [2n-1]_q!!"},
      {"I_GEN", Family::Matchings, CheckKind::Distribution, "sum q^inumber = q^C(n,2) [2n-1]_q!!"},
      {"PALIN", Family::Matchings, CheckKind::Structure, "[2n-1]_q!! is palindromic of degree n^2 - n"},
      {"PHI", Family::Matchings, CheckKind::PerObject,
       "phi is an involution with cro(phi m) = nst(m), nst(phi m) = cro(m), al(phi m) = al(m)"},
      {"PSI", Family::Matchings, CheckKind::PerObject,
       "psi is an involution with ell(psi m) = n^2 - n - ell(m); ell level sizes match [2n-1]_q!!"},
      {"WITNESS", Family::Matchings, CheckKind::PerObject, "dindex(m) = C(n+1,2) + ell(psi(phi(m)))"},
      {"BRUHAT_RANK", Family::Matchings, CheckKind::Structure,
       "Bruhat order on PM_2n is graded by ell with [2n-1]_q!! as rank generating function"},
  };
  return registry;
}

inline const IdentityCheck& find_identity(std::string_view id) {
  for (const auto& c : identity_registry()) {
    if (c.id == id) return c;
  }
  throw DomainError("unknown identity '" + std::string(id) + "'");
}

using RecordFn = std::function<StatRecord(const PerfectMatching&)>;

// Hard safety caps; requests above these are rejected.
inline constexpr int kMaxPartitionN = 11;
inline constexpr int kMaxMatchingN = 7;
inline constexpr int kMaxBruhatN = 5;

struct SuiteOptions {
  std::vector<std::string> ids;  // empty = whole registry
  int max_n_matchings = 5;
  int max_n_partitions = 9;
  int max_n_bruhat = 4;
  /// Statistic source for matching identities; defaults to stat_record.
  RecordFn record = [](const PerfectMatching& m) { return stat_record(m); };
  unsigned threads = 1;
};

enum class Status { Pass, Fail };

struct CheckResult {
  std::string identity;
  int n = 0;
  Status status = Status::Pass;
  std::optional<std::string> counterexample;
  std::uint64_t objects_visited = 0;
  double elapsed_ms = 0;
};

struct SuiteReport {
  std::vector<CheckResult> results;

  bool all_pass() const {
    for (const auto& r : results) {
      if (r.status != Status::Pass) return false;
    }
    return true;
  }

  std::vector<std::string> failed_identities() const {
    std::vector<std::string> out;
    for (const auto& r : results) {
      if (r.status == Status::Fail && (out.empty() || out.back() != r.identity)) out.push_back(r.identity);
    }
    return out;
  }
};

namespace detail {

inline std::string show(Count v) { return std::to_string(v); }

struct PerObjectOutcome {
  std::uint64_t visited = 0;
  std::optional<std::string> counterexample;
};

/// Runs `check(m, record)` over PM_2n; a non-empty string is a failure
/// description and stops the walk.
template <typename Check>
PerObjectOutcome walk_matchings(int n, const RecordFn& record, Check check) {
  PerObjectOutcome out;
  PerfectMatchingStream stream(n);
  while (auto m = stream.next()) {
    ++out.visited;
    if (std::string why = check(*m, record(*m)); !why.empty()) {
      out.counterexample = format_matching(*m) + ": " + why;
      break;
    }
  }
  return out;
}

inline std::string expect_eq(std::string_view what, Count got, Count want) {
  if (got == want) return {};
  return std::string(what) + " = " + show(got) + ", expected " + show(want);
}

inline CheckResult run_one(const IdentityCheck& check, int n, const SuiteOptions& opt) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  CheckResult res;
  res.identity = check.id;
  res.n = n;
  PerObjectOutcome out;
  const Count nn = n;
  const Count c2 = binom2(nn);
  const QPolynomial qdf = q_double_factorial(n);
  const auto& id = check.id;

  auto distribution = [&](auto stat_of, const QPolynomial& want) {
    QPolynomial got;
    PerfectMatchingStream stream(n);
    while (auto m = stream.next()) {
      ++out.visited;
      got.add_term(static_cast<std::size_t>(stat_of(opt.record(*m))));
    }
    if (got != want) out.counterexample = "got " + to_string(got) + ", expected " + to_string(want);
  };

  if (id == "DI_SUM") {
    SetPartitionStream stream(n);
    while (auto p = stream.next()) {
      ++out.visited;
      const Count d = depth_index(*p), i = intertwining_number(*p);
      if (d + i != c2) {
        out.counterexample = format_partition(*p) + ": dindex + inumber = " + show(d + i) + ", expected " + show(c2);
        break;
      }
    }
  } else if (id == "TRIPLE") {
    out = walk_matchings(n, opt.record, [&](const PerfectMatching&, const StatRecord& r) {
      return expect_eq("cro + nst + al", r.cro + r.nst + r.al, c2);
    });
  } else if (id == "DEPTH_ID") {
    out = walk_matchings(n, opt.record, [&](const PerfectMatching& m, const StatRecord& r) {
      Count vsum = 0, asum = 0;
      for (Vertex v = 1; v <= m.ground_size(); ++v) vsum += vertex_depth(m, v);
      for (const Arc& a : m.arcs()) asum += arc_depth(m, a);
      if (auto e = expect_eq("sum of vertex depths", vsum, r.span_sum); !e.empty()) return e;
      if (auto e = expect_eq("tvd", r.tvd, r.span_sum); !e.empty()) return e;
      return expect_eq("nst", r.nst, asum);
    });
  } else if (id == "DINDEX_FORM") {
    out = walk_matchings(n, opt.record, [&](const PerfectMatching&, const StatRecord& r) {
      Count base = 0;
      for (Count i = 1; i <= nn; ++i) base += 2 * nn - i;
      if (auto e = expect_eq("dindex", r.dindex, base - r.tvd + r.nst); !e.empty()) return e;
      return expect_eq("dindex", r.dindex, nn * nn + 2 * c2 - r.tvd - r.cro - r.al);
    });
  } else if (id == "INUM_LIN") {
    out = walk_matchings(n, opt.record, [&](const PerfectMatching&, const StatRecord& r) {
      return expect_eq("inumber", r.inumber, 3 * r.cro + 2 * r.nst + r.al);
    });
  } else if (id == "TVD") {
    out = walk_matchings(n, opt.record, [&](const PerfectMatching&, const StatRecord& r) {
      if (auto e = expect_eq("tvd", r.tvd, 2 * (r.cro + r.nst)); !e.empty()) return e;
      if (auto e = expect_eq("span sum", r.span_sum, 2 * (r.cro + r.nst)); !e.empty()) return e;
      return expect_eq("tvd", r.tvd, 2 * c2 - 2 * r.al);
    });
  } else if (id == "STAT_FORM") {
    out = walk_matchings(n, opt.record, [&](const PerfectMatching&, const StatRecord& r) {
      if (auto e = expect_eq("ell", r.ell, r.cro + 2 * r.nst); !e.empty()) return e;
      return expect_eq("dindex", r.dindex, nn * nn + c2 - 2 * r.cro - r.nst);
    });
  } else if (id == "L_GEN") {
    distribution([](const StatRecord& r) { return r.ell; }, qdf);
  } else if (id == "MAIN") {
    distribution([](const StatRecord& r) { return r.dindex; }, shift(qdf, static_cast<std::size_t>(binom2(nn + 1))));
  } else if (id == "I_GEN") {
    distribution([](const StatRecord& r) { return r.inumber; }, shift(qdf, static_cast<std::size_t>(c2)));
  } else if (id == "PALIN") {
    out.visited = 1;
    if (qdf.degree() != nn * nn - nn) {
      out.counterexample = "degree " + std::to_string(qdf.degree()) + ", expected " + show(nn * nn - nn);
    } else if (!is_palindromic(qdf)) {
      out.counterexample = "not palindromic: " + to_string(qdf);
    }
  } else if (id == "PHI") {
    const auto phi = cn_involution(n, kMaxMatchingN);
    if (!phi.is_involution()) out.counterexample = "phi is not an involution";
    if (!out.counterexample) {
      out = walk_matchings(n, opt.record, [&](const PerfectMatching& m, const StatRecord& r) {
        const StatRecord img = opt.record(phi(m));
        if (auto e = expect_eq("cro(phi m)", img.cro, r.nst); !e.empty()) return e;
        if (auto e = expect_eq("nst(phi m)", img.nst, r.cro); !e.empty()) return e;
        return expect_eq("al(phi m)", img.al, r.al);
      });
    }
  } else if (id == "PSI") {
    const auto psi = length_complement(n, kMaxMatchingN);
    if (!psi.is_involution()) out.counterexample = "psi is not an involution";
    QPolynomial levels;
    if (!out.counterexample) {
      out = walk_matchings(n, opt.record, [&](const PerfectMatching& m, const StatRecord& r) {
        levels.add_term(static_cast<std::size_t>(r.ell));
        return expect_eq("ell(psi m)", opt.record(psi(m)).ell, nn * nn - nn - r.ell);
      });
    }
    if (!out.counterexample && (levels != qdf || reverse(levels) != levels)) {
      out.counterexample = "ell level sizes " + to_string(levels) + " differ from " + to_string(qdf);
    }
  } else if (id == "WITNESS") {
    const auto w = main_theorem_witness(n, kMaxMatchingN);
    out = walk_matchings(n, opt.record, [&](const PerfectMatching& m, const StatRecord& r) {
      return expect_eq("dindex", r.dindex, binom2(nn + 1) + opt.record(w(m)).ell);
    });
  } else if (id == "BRUHAT_RANK") {
    const auto rep = verify_rank_is_length(n, kMaxBruhatN);
    out.visited = rep.elements;
    if (!rep.pass()) {
      const auto& ce = *rep.counterexample;
      out.counterexample = ce.clause + ": " + format_matching(ce.a) + (ce.b ? " vs " + format_matching(*ce.b) : "");
    }
  } else {
    throw DomainError("no runner for identity '" + id + "'");
  }

  res.objects_visited = out.visited;
  res.counterexample = out.counterexample;
  res.status = out.counterexample ? Status::Fail : Status::Pass;
  res.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return res;
}

}  // namespace detail

/// Checks every selected identity for each size 1..max. Results are ordered
/// by registry position, then n, independent of `threads`.
inline SuiteReport run_identity_suite(const SuiteOptions& opt = {}) {
  if (opt.max_n_partitions > kMaxPartitionN || opt.max_n_matchings > kMaxMatchingN ||
      opt.max_n_bruhat > kMaxBruhatN) {
    throw DomainError("requested size exceeds the hard safety cap (partitions " + std::to_string(kMaxPartitionN) +
                      ", matchings " + std::to_string(kMaxMatchingN) + ", bruhat " + std::to_string(kMaxBruhatN) +
                      ")");
  }
  std::vector<const IdentityCheck*> selected;
  if (opt.ids.empty()) {
    for (const auto& c : identity_registry()) selected.push_back(&c);
  } else {
    for (const auto& c : identity_registry()) {
      for (const auto& want : opt.ids) {
        if (want == c.id) {
          selected.push_back(&c);
          break;
        }
      }
    }
    for (const auto& want : opt.ids) find_identity(want);  // throws on unknown ids
  }

  std::vector<std::pair<const IdentityCheck*, int>> jobs;
  for (const auto* c : selected) {
    int top = c->family == Family::Partitions ? opt.max_n_partitions : opt.max_n_matchings;
    if (c->id == "BRUHAT_RANK") top = std::min(top, opt.max_n_bruhat);
    for (int n = 1; n <= top; ++n) jobs.emplace_back(c, n);
  }
  auto results = detail::run_shards<CheckResult>(
      jobs.size(), opt.threads, [&](std::size_t j) { return detail::run_one(*jobs[j].first, jobs[j].second, opt); });
  return SuiteReport{std::move(results)};
}

}  // namespace pmdepth

#endif  // PMDEPTH_VERIFY_HPP
