#ifndef PMDEPTH_IO_HPP
#define PMDEPTH_IO_HPP

// JSON forms (nlohmann::json ADL hooks) for the public value types.

#include <nlohmann/json.hpp>

#include "pmdepth/bruhat.hpp"
#include "pmdepth/core.hpp"
#include "pmdepth/enumerate.hpp"
#include "pmdepth/qpoly.hpp"
#include "pmdepth/stats.hpp"
#include "pmdepth/verify.hpp"

namespace pmdepth {

using json = nlohmann::json;

// {"n":8,"blocks":[[1,3,7,8],[2,6],[4,5]]}
inline void to_json(json& j, const SetPartition& p) { j = json{{"n", p.size()}, {"blocks", p.blocks()}}; }

inline void to_json(json& j, const StatRecord& r) {
  j = json{{"dindex", r.dindex}, {"inumber", r.inumber}, {"cro", r.cro},         {"nst", r.nst},
           {"al", r.al},         {"tvd", r.tvd},         {"ell", r.ell},         {"cnumber", r.cnumber},
           {"span_sum", r.span_sum}};
}

inline void from_json(const json& j, StatRecord& r) {
  r.dindex = j.at("dindex").get<Count>();
  r.inumber = j.at("inumber").get<Count>();
  r.cro = j.at("cro").get<Count>();
  r.nst = j.at("nst").get<Count>();
  r.al = j.at("al").get<Count>();
  r.tvd = j.at("tvd").get<Count>();
  r.ell = j.at("ell").get<Count>();
  r.cnumber = j.at("cnumber").get<Count>();
  r.span_sum = j.at("span_sum").get<Count>();
}

// Coefficient array, exponent 0 first.
inline void to_json(json& j, const QPolynomial& p) { j = p.coeffs(); }

inline void from_json(const json& j, QPolynomial& p) {
  p = QPolynomial(j.get<std::vector<QPolynomial::Coeff>>());
}

inline void to_json(json& j, const DistributionTable& t) {
  json stats = json::array();
  for (auto s : t.stats) stats.push_back(std::string(to_string(s)));
  json rows = json::array();
  for (const auto& [key, count] : t.counts) rows.push_back(json{{"key", key}, {"count", count}});
  j = json{{"stats", stats}, {"rows", rows}, {"total", t.total()}};
}

inline void to_json(json& j, const CheckResult& r) {
  j = json{{"identity", r.identity},
           {"n", r.n},
           {"status", r.status == Status::Pass ? "PASS" : "FAIL"},
           {"objects_visited", r.objects_visited},
           {"elapsed_ms", r.elapsed_ms}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
}

inline void to_json(json& j, const SuiteReport& rep) {
  j = json{{"all_pass", rep.all_pass()}, {"results", rep.results}};
}

inline void to_json(json& j, const RankReport& r) {
  j = json{{"n", r.n},
           {"status", r.pass() ? "PASS" : "FAIL"},
           {"elements", r.elements},
           {"covers", r.covers},
           {"partial_order", r.partial_order},
           {"unique_min", r.unique_min},
           {"unique_max", r.unique_max},
           {"covers_step_one", r.covers_step_one},
           {"monotone", r.monotone},
           {"rank_polynomial", r.rank_polynomial},
           {"rank_generating_function", r.rank_generating}};
  if (r.counterexample) {
    json ce{{"clause", r.counterexample->clause}, {"a", format_matching(r.counterexample->a)}};
    if (r.counterexample->b) ce["b"] = format_matching(*r.counterexample->b);
    j["counterexample"] = ce;
  }
}

}  // namespace pmdepth

// SetPartition has no default state, so it is read through a serializer
// specialization rather than an ADL from_json.
template <>
struct nlohmann::adl_serializer<pmdepth::SetPartition> {
  static pmdepth::SetPartition from_json(const nlohmann::json& j) {
    try {
      return pmdepth::SetPartition::from_blocks(j.at("n").get<int>(),
                                                j.at("blocks").get<std::vector<std::vector<pmdepth::Vertex>>>());
    } catch (const nlohmann::json::exception& e) {
      throw pmdepth::ParseError(std::string("bad partition JSON: ") + e.what());
    } catch (const pmdepth::DomainError& e) {
      throw pmdepth::ParseError(e.what());
    }
  }
  static void to_json(nlohmann::json& j, const pmdepth::SetPartition& p) { pmdepth::to_json(j, p); }
};


#endif  // PMDEPTH_IO_HPP
