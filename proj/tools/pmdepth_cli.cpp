// pmdepth: statistics, generating polynomials, exhaustive identity checks,
// Bruhat order and arc-diagram rendering for set partitions and perfect
// matchings.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmdepth/pmdepth.hpp"

using namespace pmdepth;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ObjectArgs {
  std::string partition;
  std::string matching;
  std::string json_text;
  int n = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--partition", partition, "set partition in bar notation, e.g. 1378|26|45");
    cmd->add_option("--n", n, "ground-set size for --partition");
    cmd->add_option("--matching", matching, "perfect matching as lo-hi pairs, e.g. 1-4,2-3");
    cmd->add_option("--json", json_text, R"(set partition as JSON {"n":..,"blocks":[[..],..]})");
  }

  std::variant<SetPartition, PerfectMatching> resolve() const {
    const int given = !partition.empty() + !matching.empty() + !json_text.empty();
    if (given != 1) throw UsageError("give exactly one of --partition, --matching, --json");
    if (!matching.empty()) return parse_matching(matching);
    if (!json_text.empty()) {
      try {
        return json::parse(json_text).get<SetPartition>();
      } catch (const json::exception& e) {
        throw ParseError(e.what());
      }
    }
    if (n < 1) throw UsageError("--partition needs --n");
    return parse_partition(partition, n);
  }
};

json partition_stats(const SetPartition& p) {
  return json{{"object", format_partition(p)},
              {"n", p.size()},
              {"dindex", depth_index(p)},
              {"inumber", intertwining_number(p)},
              {"tvd", total_vertex_depth(p)},
              {"cnumber", crossing_number(p)},
              {"span_sum", statistic_value(p, Statistic::SpanSum)}};
}

json matching_stats(const PerfectMatching& m) {
  json j = stat_record(m);
  j["object"] = format_matching(m);
  j["n"] = m.pairs();
  return j;
}

void print_json_or_text(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump() << '\n';
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
  }
}

std::optional<QPolynomial> closed_form(Family family, int n, Statistic stat) {
  if (family != Family::Matchings) return std::nullopt;
  const auto base = q_double_factorial(n);
  switch (stat) {
    case Statistic::Ell: return base;
    case Statistic::DIndex: return shift(base, static_cast<std::size_t>(binom2(n + 1)));
    case Statistic::INumber: return shift(base, static_cast<std::size_t>(binom2(n)));
    default: return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth index, intertwining number and related statistics on set partitions and perfect matchings"};
  app.require_subcommand(1);

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "all statistics of one object");
  ObjectArgs stats_obj;
  stats_obj.add_to(stats_cmd);
  std::string stats_format = "json";
  stats_cmd->add_option("--format", stats_format)->check(CLI::IsMember({"json", "text"}));

  // poly
  auto* poly_cmd = app.add_subcommand("poly", "generating polynomial of a statistic over a family");
  std::string poly_family = "matchings", poly_stat, poly_format = "text";
  int poly_n = 0;
  unsigned poly_threads = 1;
  bool poly_compare = false;
  poly_cmd->add_option("--family", poly_family)->check(CLI::IsMember({"partitions", "matchings"}));
  poly_cmd->add_option("--n", poly_n, "size (ground set for partitions, pairs for matchings)")->required();
  poly_cmd->add_option("--stat", poly_stat, "dindex|inumber|ell|cro|nst|al|tvd|cnumber|span_sum")->required();
  poly_cmd->add_option("--threads", poly_threads);
  poly_cmd->add_flag("--compare-closed-form", poly_compare, "compare with the q-double-factorial closed form");
  poly_cmd->add_option("--format", poly_format)->check(CLI::IsMember({"json", "text"}));

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "list a family with statistics");
  std::string enum_family = "matchings", enum_format = "csv";
  std::vector<std::string> enum_joint;
  int enum_n = 0;
  enum_cmd->add_option("--family", enum_family)->check(CLI::IsMember({"partitions", "matchings"}));
  enum_cmd->add_option("--n", enum_n)->required();
  enum_cmd->add_option("--joint", enum_joint, "emit the joint distribution of these statistics instead");
  enum_cmd->add_option("--format", enum_format)->check(CLI::IsMember({"csv", "text", "json"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check registered identities exhaustively");
  bool verify_all = false, verify_long = false;
  std::vector<std::string> verify_ids;
  int verify_max_n = 5, verify_max_partitions = 9;
  unsigned verify_threads = 1;
  std::string verify_format = "json";
  verify_cmd->add_flag("--all", verify_all, "run the whole registry");
  verify_cmd->add_option("--id", verify_ids, "identity id (repeatable)");
  verify_cmd->add_option("--max-n", verify_max_n, "largest n for matchings");
  verify_cmd->add_option("--max-n-partitions", verify_max_partitions, "largest ground set for partitions");
  verify_cmd->add_flag("--long", verify_long, "allow matchings n = 6, 7 and Bruhat n = 5");
  verify_cmd->add_option("--threads", verify_threads);
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));

  // bruhat
  auto* bruhat_cmd = app.add_subcommand("bruhat", "Bruhat order on fixed-point-free involutions");
  int bruhat_n = 0, bruhat_bound = kDefaultBruhatBound;
  bool bruhat_covers = false, bruhat_check = false;
  bruhat_cmd->add_option("--n", bruhat_n)->required();
  bruhat_cmd->add_option("--bound", bruhat_bound, "largest n accepted");
  bruhat_cmd->add_flag("--covers", bruhat_covers, "emit Hasse diagram as DOT");
  bruhat_cmd->add_flag("--check-rank", bruhat_check, "check that ell is the rank function; JSON report");

  // bijection
  auto* bij_cmd = app.add_subcommand("bijection", "export phi, psi or psi.phi as CSV");
  std::string bij_kind;
  int bij_n = 0, bij_bound = kDefaultSymmetryBound;
  bij_cmd->add_option("--kind", bij_kind)->required()->check(CLI::IsMember({"phi", "psi", "witness"}));
  bij_cmd->add_option("--n", bij_n)->required();
  bij_cmd->add_option("--bound", bij_bound, "largest n accepted");

  // render
  auto* render_cmd = app.add_subcommand("render", "SVG arc diagram");
  ObjectArgs render_obj;
  render_obj.add_to(render_cmd);
  bool render_extended = false;
  int render_w = 640, render_h = 320;
  std::string render_highlight, render_out;
  render_cmd->add_flag("--extended", render_extended, "draw half-arcs at openers and closers");
  render_cmd->add_option("--width", render_w);
  render_cmd->add_option("--height", render_h);
  render_cmd->add_option("--highlight", render_highlight, "crossings|nestings|alignments (matchings only)");
  render_cmd->add_option("-o,--output", render_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (stats_cmd->parsed()) {
      const auto obj = stats_obj.resolve();
      const json j = std::holds_alternative<SetPartition>(obj) ? partition_stats(std::get<SetPartition>(obj))
                                                               : matching_stats(std::get<PerfectMatching>(obj));
      print_json_or_text(j, stats_format);
      return 0;
    }

    if (poly_cmd->parsed()) {
      const Family family = parse_family(poly_family);
      const Statistic stat = parse_statistic(poly_stat);
      const auto got = generating_polynomial(family, poly_n, stat, poly_threads);
      if (!poly_compare) {
        if (poly_format == "json") {
          std::cout << json{{"family", poly_family}, {"n", poly_n}, {"stat", poly_stat}, {"coeffs", got}}.dump()
                    << '\n';
        } else {
          std::cout << to_string(got) << '\n';
        }
        return 0;
      }
      const auto want = closed_form(family, poly_n, stat);
      if (!want) throw UsageError("no closed form for " + poly_stat + " on " + poly_family);
      const bool match = got == *want;
      if (poly_format == "json") {
        std::cout << json{{"status", match ? "MATCH" : "MISMATCH"}, {"got", got}, {"expected", *want}}.dump() << '\n';
      } else if (match) {
        std::cout << "MATCH: " << to_string(got) << '\n';
      } else {
        std::cout << "MISMATCH: got " << to_string(got) << ", expected " << to_string(*want) << '\n';
      }
      return match ? 0 : kExitFail;
    }

    if (enum_cmd->parsed()) {
      const Family family = parse_family(enum_family);
      if (!enum_joint.empty()) {
        std::vector<Statistic> stats;
        for (const auto& s : enum_joint) stats.push_back(parse_statistic(s));
        const json j = joint_distribution(family, enum_n, stats);
        std::cout << j.dump() << '\n';
        return 0;
      }
      if (enum_format == "csv") {
        write_csv(std::cout, family, enum_n);
      } else if (enum_format == "text") {
        if (family == Family::Matchings) {
          for_each_perfect_matching(enum_n, [](const PerfectMatching& m) { std::cout << format_matching(m) << '\n'; });
        } else {
          for_each_set_partition(enum_n, [](const SetPartition& p) { std::cout << format_partition(p) << '\n'; });
        }
      } else {
        json arr = json::array();
        if (family == Family::Matchings) {
          for_each_perfect_matching(enum_n, [&](const PerfectMatching& m) { arr.push_back(matching_stats(m)); });
        } else {
          for_each_set_partition(enum_n, [&](const SetPartition& p) { arr.push_back(partition_stats(p)); });
        }
        std::cout << arr.dump() << '\n';
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (verify_all == !verify_ids.empty()) throw UsageError("give either --all or at least one --id");
      if (!verify_long && verify_max_n > 5) throw UsageError("--max-n above 5 needs --long");
      SuiteOptions opt;
      opt.ids = verify_ids;
      opt.max_n_matchings = verify_max_n;
      opt.max_n_partitions = verify_max_partitions;
      opt.max_n_bruhat = std::min(verify_max_n, verify_long ? kMaxBruhatN : 4);
      opt.threads = verify_threads;
      const auto rep = run_identity_suite(opt);
      if (verify_format == "json") {
        std::cout << json(rep).dump(2) << '\n';
      } else {
        for (const auto& r : rep.results) {
          std::cout << (r.status == Status::Pass ? "PASS " : "FAIL ") << r.identity << " n=" << r.n
                    << " visited=" << r.objects_visited;
          if (r.counterexample) std::cout << " counterexample: " << *r.counterexample;
          std::cout << '\n';
        }
      }
      return rep.all_pass() ? 0 : kExitFail;
    }

    if (bruhat_cmd->parsed()) {
      if (bruhat_covers == bruhat_check) throw UsageError("give exactly one of --covers, --check-rank");
      if (bruhat_covers) {
        write_dot(std::cout, MatchingPoset(bruhat_n, bruhat_bound));
        return 0;
      }
      const auto rep = verify_rank_is_length(bruhat_n, bruhat_bound);
      std::cout << json(rep).dump(2) << '\n';
      return rep.pass() ? 0 : kExitFail;
    }

    if (bij_cmd->parsed()) {
      const auto table = bij_kind == "phi"   ? cn_involution(bij_n, bij_bound)
                         : bij_kind == "psi" ? length_complement(bij_n, bij_bound)
                                             : main_theorem_witness(bij_n, bij_bound);
      table.write_csv(std::cout);
      return 0;
    }

    if (render_cmd->parsed()) {
      RenderSpec spec{render_obj.resolve(), render_extended, render_w, render_h, std::nullopt};
      if (!render_highlight.empty()) spec.highlight = parse_pair_kind(render_highlight);
      const auto svg = render_svg(spec);
      if (render_out.empty()) {
        std::cout << svg;
      } else {
        std::ofstream f(render_out, std::ios::binary);
        if (!f) throw UsageError("cannot open " + render_out);
        f << svg;
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
