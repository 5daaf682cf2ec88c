// sunflower-kit: command-line front end for the library. Every subcommand
// maps onto one library operation; reports come out as text or as JSON
// objects {claim_id, holds, lhs, rhs, witness?, note?, runtime_ms}.
//
// Exit codes: 0 all checks hold or are vacuous, 1 a check failed, 2 the
// input was malformed, 3 a search or comparison gave up within its budget.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sunflower/construction.hpp"
#include "sunflower/extension.hpp"
#include "sunflower/family.hpp"
#include "sunflower/family_io.hpp"
#include "sunflower/gamma.hpp"
#include "sunflower/generator.hpp"
#include "sunflower/oracle_suite.hpp"
#include "sunflower/random_families.hpp"
#include "sunflower/special.hpp"
#include "sunflower/split.hpp"
#include "sunflower/sunflower_find.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sunflower;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

// ---------------------------------------------------------------------------
// Shared plumbing

// Display form: integers lose the "/1" the canonical file format keeps.
std::string rat_str(const BigRat& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : rational_string(q);
}

BigRat ratio_arg(const std::string& text, const char* flag) {
  auto q = parse_rational(text);
  if (!q) {
    throw std::invalid_argument(std::string(flag) + ": expected N or N/D, got '" +
                                text + "'");
  }
  return *q;
}

SetFamily read_family(const std::string& path) {
  if (path == "-") return parse_family(std::cin);
  return load_family(path);
}

ordered_json value_json(const ReportValue& v) {
  switch (v.kind) {
    case ReportValue::Kind::None:
      return nullptr;
    case ReportValue::Kind::Exact:
      return rat_str(v.exact);
    case ReportValue::Kind::Interval:
      return ordered_json{{"lo", v.lo}, {"hi", v.hi}};
    case ReportValue::Kind::Infinite:
      return "inf";
    case ReportValue::Kind::Text:
      return v.text;
  }
  return nullptr;
}

ordered_json holds_json(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return true;
    case Verdict::Fails:
      return false;
    case Verdict::Vacuous:
      return "vacuous";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

ordered_json witness_json(const ReportWitness& w) {
  ordered_json j = ordered_json::object();
  if (!w.elements.empty()) j["elements"] = w.elements;
  if (!w.indices.empty()) j["indices"] = w.indices;
  if (!w.text.empty()) j["text"] = w.text;
  return j;
}

ordered_json report_json(const VerdictReport& r) {
  ordered_json j;
  j["claim_id"] = r.claim_id;
  j["holds"] = holds_json(r.holds);
  j["lhs"] = value_json(r.lhs);
  j["rhs"] = value_json(r.rhs);
  if (!r.witness.empty()) j["witness"] = witness_json(r.witness);
  if (!r.note.empty()) j["note"] = r.note;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

ordered_json interval_json(const Interval& v) {
  return ordered_json{{"lo", v.lo_string()}, {"hi", v.hi_string()}};
}

// Collects reports and auxiliary payload lines for one subcommand run, then
// renders them once and derives the exit code: any Fails wins over any
// Inconclusive, which wins over pass.
class Emitter {
 public:
  explicit Emitter(bool as_json) : json_(as_json) {}

  void report(const VerdictReport& r) {
    reports_.push_back(r);
    if (json_) return;
    std::cout << r.to_text() << "\n";
  }

  // Non-report payload: a text line, and the same fact as a JSON key.
  void info(const std::string& key, const ordered_json& value,
            const std::string& text_line) {
    extra_[key] = value;
    if (!json_) std::cout << text_line << "\n";
  }

  // Raw payload that replaces the default JSON rendering of one report's
  // witness; used where the witness has domain structure (sunflower cores).
  void override_witness(ordered_json w) { witness_override_ = std::move(w); }

  int finish() {
    if (json_) {
      ordered_json out = extra_;
      if (reports_.size() == 1) {
        ordered_json r = report_json(reports_.front());
        if (witness_override_ && !witness_override_->is_null())
          r["witness"] = *witness_override_;
        if (out.empty()) {
          out = std::move(r);
        } else {
          out["report"] = std::move(r);
        }
      } else if (!reports_.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports_) arr.push_back(report_json(r));
        if (out.empty()) {
          out = std::move(arr);
        } else {
          out["reports"] = std::move(arr);
        }
      }
      std::cout << out.dump(2) << "\n";
    }
    bool failed = false, inconclusive = false;
    for (const auto& r : reports_) {
      failed = failed || r.holds == Verdict::Fails;
      inconclusive = inconclusive || r.holds == Verdict::Inconclusive;
    }
    if (failed) return kExitFail;
    if (inconclusive) return kExitBudget;
    return kExitPass;
  }

 private:
  bool json_;
  std::vector<VerdictReport> reports_;
  ordered_json extra_ = ordered_json::object();
  std::optional<ordered_json> witness_override_;
};

FamilyShape shape_of(const std::string& name) {
  if (name == "uniform") return FamilyShape::Uniform;
  if (name == "star") return FamilyShape::Star;
  if (name == "clustered") return FamilyShape::Clustered;
  throw std::invalid_argument("--dist: expected uniform|star|clustered, got '" +
                              name + "'");
}

// "1,2|3,4" -> blocks {1,2}, {3,4}.
std::vector<ElementSet> parse_blocks(const std::string& text) {
  std::vector<ElementSet> blocks;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, '|')) {
    ElementSet s;
    std::stringstream elems(group);
    std::string elem;
    while (std::getline(elems, elem, ',')) {
      std::size_t pos = 0;
      int e = 0;
      try {
        e = std::stoi(elem, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != elem.size() || e < 1)
        throw std::invalid_argument("--blocks: bad element '" + elem + "'");
      s.add(e);
    }
    if (s.empty()) throw std::invalid_argument("--blocks: empty block");
    blocks.push_back(s);
  }
  if (blocks.empty()) throw std::invalid_argument("--blocks: no blocks given");
  return blocks;
}

// ---------------------------------------------------------------------------
// Subcommands

struct GenOpts {
  int n = 10, m = 3;
  std::size_t count = 20;
  std::uint64_t seed = 12345;
  std::string dist = "uniform";
  bool weighted = false;
  std::string output = "-";
};

int run_gen(const GenOpts& o) {
  const FamilyShape shape = shape_of(o.dist);
  const SetFamily f = o.weighted
                          ? random_weighted_family(o.n, o.m, o.count, o.seed, shape)
                          : random_family(o.n, o.m, o.count, o.seed, shape);
  const std::string text = serialize_family(f);
  if (o.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    if (!out) throw std::invalid_argument("cannot open " + o.output);
    out << text;
  }
  return kExitPass;
}

struct ExtOpts {
  std::string input;
  int l = 0;
  bool phase2 = false;
  long precision = Interval::kDefaultPrecision;
  bool json = false;
};

int run_ext(const ExtOpts& o) {
  const SetFamily f = read_family(o.input);
  Emitter em(o.json);
  const ExtensionResult e = ext(f, o.l);
  em.info("count", e.count.get_str(),
          "|Ext(F, " + std::to_string(o.l) + ")| = " + e.count.get_str() +
              " of C(" + std::to_string(f.n()) + ", " + std::to_string(o.l) +
              ") = " + binom(f.n(), o.l).get_str());
  em.report(ext_lower_bound_check(f, o.l, o.precision));
  if (o.phase2) em.report(phase2_check(f));
  return em.finish();
}

struct KappaOpts {
  std::string input;
  long precision = Interval::kDefaultPrecision;
  bool json = false;
};

int run_kappa(const KappaOpts& o) {
  const SetFamily f = read_family(o.input);
  const Sparsity s = sparsity(f);
  if (o.json) {
    ordered_json j;
    j["exp_kappa"] = s.infinite ? ordered_json("inf")
                                : ordered_json(rat_str(s.exp_kappa));
    j["kappa"] = s.infinite ? ordered_json("inf")
                            : interval_json(s.log(o.precision));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "kappa(F) = " << s.str() << "\n";
    if (!s.infinite)
      std::cout << "e^kappa = " << rat_str(s.exp_kappa) << "\n";
  }
  return kExitPass;
}

struct GammaOpts {
  std::string input;
  std::string b;
  bool unit_only = false, weighted_only = false;
  bool json = false;
};

int run_gamma_check(const GammaOpts& o) {
  const SetFamily f = read_family(o.input);
  const BigRat b = ratio_arg(o.b, "--b");
  Emitter em(o.json);
  if (!o.weighted_only) em.report(gamma_unit_check(f, b));
  if (!o.unit_only) em.report(gamma_weighted_check(f, b));
  return em.finish();
}

struct MdOpts {
  std::string input;
  int l = 0;
  std::string gamma;
  bool json = false;
};

int run_md(const MdOpts& o) {
  const SetFamily f = read_family(o.input);
  Emitter em(o.json);
  const MdQuantities md = md_quantities(f, o.l);
  em.info("mark", rat_str(md.mark), "M = " + rat_str(md.mark));
  em.info("double_mark", rat_str(md.double_mark),
          "D = " + rat_str(md.double_mark));
  ordered_json profile = ordered_json::object();
  std::string profile_line = "profile:";
  for (const auto& [j, mass] : md.profile) {
    profile[std::to_string(j)] = rat_str(mass);
    profile_line += " " + std::to_string(j) + "->" + rat_str(mass);
  }
  em.info("profile", profile, profile_line);
  if (!o.gamma.empty())
    em.report(double_mark_check(f, o.l, ratio_arg(o.gamma, "--gamma")));
  return em.finish();
}

struct EgtFindOpts {
  std::string input;
  int l = 0;
  std::string lambda, eps;
  long precision = Interval::kDefaultPrecision;
  bool json = false;
};

int run_egt_find(const EgtFindOpts& o) {
  const SetFamily f = read_family(o.input);
  const BigRat lambda = ratio_arg(o.lambda, "--lambda");
  const BigRat eps = ratio_arg(o.eps, "--eps");
  Emitter em(o.json);
  const GeneratorCertificate c = egt_find(f, o.l, lambda, eps, o.precision);
  ordered_json t = c.t.elements();
  em.info("t", t, "T = " + c.t.str());
  em.info("l0", c.l0, "l0 = " + std::to_string(c.l0));
  em.info("b", rat_str(c.b_used), "b = " + rat_str(c.b_used));
  em.info("achieved", c.achieved.get_str(),
          "|Ext(F[T], l)| = " + c.achieved.get_str());
  em.info("required", interval_json(c.required),
          "required >= " + c.required.str());
  em.info("degenerate", c.degenerate,
          std::string("degenerate = ") + (c.degenerate ? "true" : "false"));
  em.report(c.property);
  em.report(c.t_bound);
  em.report(c.residual_gamma);
  return em.finish();
}

struct Egt4Opts {
  std::string input;
  int l = 0;
  std::string gamma;
  bool unit = false;
  std::string pair_value;  // uniform pair-weight value; selects the pair form
  std::string h = "1";
  std::string eps;
  bool json = false;
};

int run_egt4_verify(const Egt4Opts& o) {
  const SetFamily f = read_family(o.input);
  const BigRat gamma = ratio_arg(o.gamma, "--gamma");
  Emitter em(o.json);
  Egt4Result res;
  if (!o.pair_value.empty()) {
    if (o.eps.empty())
      throw std::invalid_argument("--pair requires --eps");
    const BigRat w = ratio_arg(o.pair_value, "--pair");
    if (w.get_den() != 1 || w < 0)
      throw std::invalid_argument("--pair: expected a nonnegative integer");
    const PairWeight pw = PairWeight::uniform(f.size(), w.get_num());
    res = egt4tilde_verify(f, pw, o.l, gamma, ratio_arg(o.h, "--h"),
                           ratio_arg(o.eps, "--eps"));
  } else if (o.unit) {
    res = egt4cor_verify(f, o.l, gamma);
  } else {
    res = egt4_verify(f, o.l, gamma);
  }
  em.info("qualifying", res.qualifying.get_str(),
          "qualifying Y = " + res.qualifying.get_str());
  em.info("required", res.required.get_str(),
          "required    = " + res.required.get_str());
  em.report(res.report);
  return em.finish();
}

struct SplitCheckOpts {
  std::string input;
  int d = 0, j = 0;
  bool json = false;
};

int run_split_check(const SplitCheckOpts& o) {
  const SetFamily f = read_family(o.input);
  Emitter em(o.json);
  em.report(split1_identity_check(f, o.d, o.j));
  return em.finish();
}

struct SplitFindOpts {
  std::string input;
  std::uint64_t seed = 0;
  long budget = 10000;
  long precision = Interval::kDefaultPrecision;
  bool json = false;
};

int run_split_find(const SplitFindOpts& o) {
  const SetFamily f = read_family(o.input);
  Emitter em(o.json);
  const Split2Result res = split2_find(f, o.seed, o.budget);
  ordered_json blocks = ordered_json::array();
  std::string blocks_line = "split:";
  for (const auto& b : res.split.blocks) {
    blocks.push_back(b.elements());
    blocks_line += " " + b.str();
  }
  em.info("split", blocks, blocks_line);
  em.info("size", rat_str(res.size),
          "||F_X|| = " + rat_str(res.size));
  em.info("bound", rat_str(res.bound),
          "bound   = " + rat_str(res.bound));
  em.report(res.report);
  if (res.report.holds == Verdict::Holds)
    em.report(split_sparsity_check(f, res.split, o.precision));
  return em.finish();
}

struct SunflowerOpts {
  std::string input;
  int k = 3;
  long budget = 2000000;
  bool naive = false;
  bool json = false;
};

int run_sunflower(const SunflowerOpts& o) {
  const SetFamily f = read_family(o.input);
  Emitter em(o.json);
  StopWatch sw;
  const SunflowerSearch res = o.naive ? naive_find_sunflower(f, o.k)
                                      : find_sunflower(f, o.k, o.budget);
  VerdictReport r;
  r.claim_id = "sunflower-free";
  r.lhs = ReportValue::of_text("k = " + std::to_string(o.k));
  r.rhs = ReportValue::none();
  switch (res.status) {
    case SearchStatus::Found: {
      const Sunflower& s = *res.witness;
      r.holds = Verdict::Fails;
      r.witness.elements = s.core.elements();
      r.witness.indices = s.petals;
      r.note = "sunflower found; witness elements are the core, indices the petals";
      em.override_witness(ordered_json{{"core", s.core.elements()},
                                       {"petals", s.petals}});
      break;
    }
    case SearchStatus::NotFound:
      r.holds = Verdict::Holds;
      r.note = "no " + std::to_string(o.k) + "-sunflower";
      break;
    case SearchStatus::BudgetExceeded:
      r.holds = Verdict::Inconclusive;
      r.note = "budget exhausted before the search space was covered";
      break;
  }
  r.runtime_ms = sw.ms();
  em.report(r);
  return em.finish();
}

struct PiCheckOpts {
  std::string f1, f2, f3;
  std::string blocks;
  int q = 0, j = 1;
  long beta = 0;
  std::string eps, b1;
  std::string fsize;
  bool json = false;
};

int run_pi_check(const PiCheckOpts& o) {
  const SetFamily f1 = read_family(o.f1);
  const SetFamily f2 = read_family(o.f2);
  const SetFamily f3 = read_family(o.f3);
  const std::vector<ElementSet> blocks = parse_blocks(o.blocks);
  const BlockPartition p = make_block_partition(f1.universe(), o.q, blocks);
  const ConstructionParams params = ConstructionParams::direct(
      o.q, p.r(), o.beta, ratio_arg(o.eps, "--eps"), ratio_arg(o.b1, "--b1"));
  const BigRat fsize = ratio_arg(o.fsize, "--fsize");
  if (fsize.get_den() != 1 || fsize < 0)
    throw std::invalid_argument("--fsize: expected a nonnegative integer");
  Emitter em(o.json);
  em.report(pi_check(f1, f2, f3, p, o.j, params, fsize.get_num()));
  return em.finish();
}

struct VerifyLemmasOpts {
  long max_x = 300;
  long max_y = 20;
  long precision = 128;
  bool json = false;
};

// Sweeps the three appendix-grade inequalities over their full grids. Each
// lemma contributes one summary report; the first failing or undecided cell
// is carried as the witness.
int run_verify_lemmas(const VerifyLemmasOpts& o) {
  Emitter em(o.json);
  struct Sweep {
    const char* claim;
    std::function<void(const std::function<void(long, long, long)>&)> grid;
    std::function<VerdictReport(long, long, long)> check;
  };
  const Sweep sweeps[] = {
      {"lemma-a.1",
       [&](const std::function<void(long, long, long)>& cell) {
         for (long x = 2; x <= o.max_x; ++x)
           for (long y = 1; y < x; ++y) cell(x, y, 0);
       },
       [&](long x, long y, long) {
         return lemma_asymptotic_check(x, y, o.precision);
       }},
      {"lemma-a.2",
       [&](const std::function<void(long, long, long)>& cell) {
         for (long y = 1; y <= o.max_y; ++y)
           for (long x = 3 * y; x <= 12 * y; ++x)
             for (long j = 0; j < y; ++j) cell(x, y, j);
       },
       [&](long x, long y, long j) {
         return lemma_asymptotic1_check(x, y, j, o.precision);
       }},
      {"eq-2.3",
       [&](const std::function<void(long, long, long)>& cell) {
         for (long x = 1; x <= o.max_x; ++x)
           for (long y = 1; y <= x; ++y) cell(x, y, 0);
       },
       [&](long x, long y, long) { return binom_upper_check(x, y, o.precision); }},
  };
  for (const Sweep& sweep : sweeps) {
    StopWatch sw;
    long checked = 0;
    std::optional<VerdictReport> bad;
    std::string bad_cell;
    sweep.grid([&](long x, long y, long j) {
      if (bad) return;
      VerdictReport r = sweep.check(x, y, j);
      ++checked;
      if (r.holds != Verdict::Holds && r.holds != Verdict::Vacuous) {
        bad = std::move(r);
        bad_cell = "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                   (sweep.claim == std::string("lemma-a.2")
                        ? " j=" + std::to_string(j)
                        : "");
      }
    });
    VerdictReport summary;
    summary.claim_id = sweep.claim;
    summary.lhs = ReportValue::of(BigInt(checked));
    summary.rhs = ReportValue::of_text("cells checked");
    if (bad) {
      summary.holds = bad->holds;
      summary.note = "first bad cell at " + bad_cell + ": " + bad->note;
      summary.witness.text = bad_cell;
    } else {
      summary.holds = Verdict::Holds;
      summary.note = "entire grid holds";
    }
    summary.runtime_ms = sw.ms();
    em.report(summary);
  }
  return em.finish();
}

struct OracleOpts {
  std::uint64_t seed = 12345;
  int scale = 1;
  bool json = false;
};

int run_oracle_suite(const OracleOpts& o) {
  OracleConfig cfg;
  cfg.seed = o.seed;
  cfg.scale = o.scale;
  const std::vector<OracleCaseResult> results = sunflower::run_oracle_suite(cfg);
  if (o.json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      arr.push_back(ordered_json{{"name", r.name},
                                 {"pass", r.pass},
                                 {"detail", r.detail},
                                 {"runtime_ms", r.runtime_ms}});
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << oracle_table(results);
  }
  return all_pass(results) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sunflower-kit: exact checks for extremal set families"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* cgen = app.add_subcommand("gen", "Generate a seeded random family");
  cgen->add_option("--n", gen.n, "Universe size")->required();
  cgen->add_option("--m", gen.m, "Member size")->required();
  cgen->add_option("--count", gen.count, "Number of members")->required();
  cgen->add_option("--seed", gen.seed, "RNG seed");
  cgen->add_option("--dist", gen.dist, "uniform|star|clustered");
  cgen->add_flag("--weighted", gen.weighted, "Draw random weights");
  cgen->add_option("-o,--output", gen.output, "Output path, - for stdout");

  ExtOpts exto;
  auto* cext = app.add_subcommand("ext", "Extension count and its lower bound");
  cext->add_option("--input", exto.input, "Family file, - for stdin")->required();
  cext->add_option("--l", exto.l, "Extension size")->required();
  cext->add_flag("--phase2", exto.phase2, "Also check the 2m sparsity doubling");
  cext->add_option("--precision", exto.precision, "Interval bits");
  cext->add_flag("--json", exto.json, "JSON reports");

  KappaOpts kap;
  auto* ckap = app.add_subcommand("kappa", "Sparsity of a family");
  ckap->add_option("--input", kap.input, "Family file, - for stdin")->required();
  ckap->add_option("--precision", kap.precision, "Interval bits");
  ckap->add_flag("--json", kap.json, "JSON output");

  GammaOpts gam;
  auto* cgam = app.add_subcommand("gamma-check", "Gamma conditions at threshold b");
  cgam->add_option("--input", gam.input, "Family file, - for stdin")->required();
  cgam->add_option("--b", gam.b, "Threshold, N or N/D")->required();
  cgam->add_flag("--unit-only", gam.unit_only, "Only the set-count condition");
  cgam->add_flag("--weighted-only", gam.weighted_only,
                 "Only the pair-mass condition");
  cgam->add_flag("--json", gam.json, "JSON reports");

  MdOpts md;
  auto* cmd = app.add_subcommand("md", "Mark totals over l-sets");
  cmd->add_option("--input", md.input, "Family file, - for stdin")->required();
  cmd->add_option("--l", md.l, "Window size l")->required();
  cmd->add_option("--gamma", md.gamma,
                  "Also bound the double mark at this gamma (N or N/D)");
  cmd->add_flag("--json", md.json, "JSON output");

  EgtFindOpts ef;
  auto* cef = app.add_subcommand("egt-find", "Search for an extension-generator core");
  cef->add_option("--input", ef.input, "Family file, - for stdin")->required();
  cef->add_option("--l", ef.l, "Extension size")->required();
  cef->add_option("--lambda", ef.lambda, "Generator quality, N or N/D")->required();
  cef->add_option("--eps", ef.eps, "Epsilon, N or N/D")->required();
  cef->add_option("--precision", ef.precision, "Interval bits");
  cef->add_flag("--json", ef.json, "JSON output");

  Egt4Opts e4;
  auto* ce4 = app.add_subcommand("egt4-verify", "Window concentration of l-sets");
  ce4->set_help_flag("--help", "Print help");  // frees -h for the slack option
  ce4->add_option("--input", e4.input, "Family file, - for stdin")->required();
  ce4->add_option("--l", e4.l, "Window size l")->required();
  ce4->add_option("--gamma", e4.gamma, "Gamma, N or N/D")->required();
  ce4->add_flag("--unit", e4.unit, "Count members instead of weights");
  ce4->add_option("--pair", e4.pair_value,
                  "Uniform pair-weight value; switches to the pair form");
  ce4->add_option("--h", e4.h, "Pair slack h (pair form)");
  ce4->add_option("--eps", e4.eps, "Epsilon (pair form)");
  ce4->add_flag("--json", e4.json, "JSON output");

  SplitCheckOpts sc;
  auto* csc = app.add_subcommand("split-check", "Ordered split counting identity");
  csc->add_option("--input", sc.input, "Family file, - for stdin")->required();
  csc->add_option("--d", sc.d, "Block size")->required();
  csc->add_option("--j", sc.j, "Number of blocks")->required();
  csc->add_flag("--json", sc.json, "JSON reports");

  SplitFindOpts sf;
  auto* csf = app.add_subcommand("split-find", "Find an above-average full split");
  csf->add_option("--input", sf.input, "Family file, - for stdin")->required();
  csf->add_option("--seed", sf.seed, "Restart seed");
  csf->add_option("--budget", sf.budget, "Partition / restart budget");
  csf->add_option("--precision", sf.precision, "Interval bits");
  csf->add_flag("--json", sf.json, "JSON output");

  SunflowerOpts sun;
  auto* csun = app.add_subcommand("sunflower", "Find a k-sunflower or certify none");
  csun->add_option("--input", sun.input, "Family file, - for stdin")->required();
  csun->add_option("--k", sun.k, "Number of petals")->required();
  csun->add_option("--budget", sun.budget, "Backtracking node budget");
  csun->add_flag("--naive", sun.naive, "Use the all-subsets reference search");
  csun->add_flag("--json", sun.json, "JSON output");

  PiCheckOpts pi;
  auto* cpi = app.add_subcommand("pi-check", "Level property of three nested families");
  cpi->add_option("--f1", pi.f1, "First family file")->required();
  cpi->add_option("--f2", pi.f2, "Second family file")->required();
  cpi->add_option("--f3", pi.f3, "Third family file")->required();
  cpi->add_option("--blocks", pi.blocks, "Blocks as e,e,...|e,e,...")->required();
  cpi->add_option("--q", pi.q, "Per-member block intersection size")->required();
  cpi->add_option("--j", pi.j, "Level index")->required();
  cpi->add_option("--beta", pi.beta, "Vector norm threshold")->required();
  cpi->add_option("--eps", pi.eps, "Epsilon, N or N/D")->required();
  cpi->add_option("--b1", pi.b1, "Level-1 threshold, N or N/D")->required();
  cpi->add_option("--fsize", pi.fsize, "Reference family size")->required();
  cpi->add_flag("--json", pi.json, "JSON reports");

  VerifyLemmasOpts vl;
  auto* cvl = app.add_subcommand("verify-lemmas", "Sweep the inequality grids");
  cvl->add_option("--max-x", vl.max_x, "Upper x for the two binomial grids");
  cvl->add_option("--max-y", vl.max_y, "Upper y for the shifted-binomial grid");
  cvl->add_option("--precision", vl.precision, "Interval bits");
  cvl->add_flag("--json", vl.json, "JSON reports");

  OracleOpts ora;
  auto* cora = app.add_subcommand("oracle-suite", "Cross-check table of every oracle");
  cora->add_option("--seed", ora.seed, "RNG seed");
  cora->add_option("--scale", ora.scale, "Randomized trial multiplier");
  cora->add_flag("--json", ora.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*cgen) return run_gen(gen);
    if (*cext) return run_ext(exto);
    if (*ckap) return run_kappa(kap);
    if (*cgam) return run_gamma_check(gam);
    if (*cmd) return run_md(md);
    if (*cef) return run_egt_find(ef);
    if (*ce4) return run_egt4_verify(e4);
    if (*csc) return run_split_check(sc);
    if (*csf) return run_split_find(sf);
    if (*csun) return run_sunflower(sun);
    if (*cpi) return run_pi_check(pi);
    if (*cvl) return run_verify_lemmas(vl);
    if (*cora) return run_oracle_suite(ora);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitBadInput;
}
