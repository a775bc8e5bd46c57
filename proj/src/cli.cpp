#include "coarse/cli.hpp"

#include "coarse/aggregation.hpp"
#include "coarse/choice.hpp"
#include "coarse/criteria.hpp"
#include "coarse/documents.hpp"
#include "coarse/efficiency.hpp"
#include "coarse/errors.hpp"
#include "coarse/storage.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace coarse::cli {

namespace {

enum class Verdict { pass, fail, notApplicable, theoremViolation };

const char* verdictName(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::notApplicable:
      return "NOT_APPLICABLE";
    case Verdict::theoremViolation:
      return "THEOREM_VIOLATION";
  }
  return "?";
}

class Report {
 public:
  Report(std::ostream& out, const std::vector<std::string>& args) : out_(out) {
    out_ << "command: coarse";
    for (const auto& a : args) out_ << ' ' << a;
    out_ << '\n';
  }

  std::ostream& os() { return out_; }

  void verdict(const std::string& check, Verdict v) {
    out_ << "verdict " << check << ": " << verdictName(v) << '\n';
    if (v == Verdict::fail || v == Verdict::theoremViolation) failed_ = true;
  }

  int exitCode() const { return failed_ ? kExitPropertyFailure : kExitOk; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

const char* yesNo(bool b) { return b ? "true" : "false"; }

std::string indexVector(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string joinList(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string labelSet(const Domain& d, const std::vector<std::size_t>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) s += (i ? "," : "") + d.label(members[i]);
  return s + "}";
}

std::vector<std::size_t> parseIndexList(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw InputError("bad");
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("'" + item + "' is not a nonnegative integer");
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError(path + ": cannot write file");
  f << content;
}

std::vector<std::vector<std::string>> readCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ';')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

// ---- analyze / theorem ----------------------------------------------------

void printCriteria(std::ostream& os, const CriteriaSet& cs) {
  const Domain& d = cs.domain();
  os << "alternatives: " << d.size() << '\n';
  os << "criteria: " << cs.size() << '\n';
  for (const auto& c : cs.criteria()) {
    os << "criterion " << c.name << ": e=" << c.structure.e() << '\n';
    for (std::size_t j = 0; j < c.structure.e(); ++j) {
      os << "  E" << j + 1 << " = " << labelSet(d, c.structure.cells[j]) << '\n';
    }
    std::string order;
    for (std::size_t a = 0; a < c.structure.e(); ++a) {
      for (std::size_t b = 0; b < c.structure.e(); ++b) {
        if (c.structure.order(a, b)) {
          order += (order.empty() ? "" : " ") + ("E" + std::to_string(a + 1)) + ">E" +
                   std::to_string(b + 1);
        }
      }
    }
    os << "  order: " << (order.empty() ? "(none)" : order) << '\n';
  }
}

int cmdAnalyze(const std::string& file, Report& report) {
  const CriteriaSet cs = io::loadCriteria(file);
  auto& os = report.os();
  printCriteria(os, cs);
  const DiscriminationVector v = discriminationVector(cs);
  const DiscriminationPartition p = discriminationPartition(cs);
  os << "discrimination vector: " << v.str() << '\n';
  os << "partition cells: " << p.cells.size() << '\n';
  os << "product of category counts: " << v.product() << '\n';
  os << "maximally categorizes: " << yesNo(p.cells.size() == v.product()) << '\n';
  return report.exitCode();
}

int cmdTheorem(const std::string& file, bool exhaustive, bool unionSelectors, Report& report) {
  const CriteriaSet cs = io::loadCriteria(file);
  auto& os = report.os();
  os << "discrimination vector: " << discriminationVector(cs).str() << '\n';
  const TheoremReport r = theoremCheck(cs);
  os << "(i) maximally categorizes: " << yesNo(r.maximallyCategorizes) << '\n';
  os << "(ii) order-isomorphism property: " << yesNo(r.orderIsomorphismProperty) << '\n';
  os << "(iii) product representation: " << yesNo(r.productRepresentation) << '\n';
  bool agree = r.agree();
  if (exhaustive) {
    OrderIsomorphismOptions opt;
    opt.exhaustive = true;
    const bool all = orderIsomorphismProperty(cs, opt);
    os << "(ii) over all selectors: " << yesNo(all) << '\n';
    agree = agree && all == r.orderIsomorphismProperty;
  }
  if (unionSelectors) {
    OrderIsomorphismOptions opt;
    opt.semantics = SelectorSemantics::categoryUnions;
    opt.exhaustive = exhaustive;
    os << "(ii') union-of-categories reading (informational): "
       << yesNo(orderIsomorphismProperty(cs, opt)) << '\n';
  }
  report.verdict("theorem", agree ? Verdict::pass : Verdict::theoremViolation);

  if (const auto rep = productRepresentation(cs)) {
    os << "relabeling:\n";
    for (std::size_t x = 0; x < cs.domain().size(); ++x) {
      std::vector<std::size_t> oneBased = rep->relabeling[x];
      for (auto& j : oneBased) ++j;
      os << "  " << cs.domain().label(x) << " -> " << indexVector(oneBased) << '\n';
    }
    os << "category bijections:\n";
    for (std::size_t i = 0; i < cs.size(); ++i) {
      os << "  " << cs[i].name << ":";
      for (std::size_t j = 0; j < rep->categoryBijections[i].size(); ++j) {
        os << " E" << j + 1 << "->Y" << i + 1 << "^" << rep->categoryBijections[i][j] + 1;
      }
      os << '\n';
    }
  }
  return report.exitCode();
}

// ---- frontier -------------------------------------------------------------

std::string frontierCsv(const std::vector<EfficiencyPoint>& points) {
  std::ostringstream csv;
  csv << "vector;cost;n\n";
  for (const auto& p : points) {
    csv << joinList(p.vector.entries) << ';' << p.cost.str() << ';' << p.maxDistinctions << '\n';
  }
  return csv.str();
}

bool verifyFrontierCsv(const std::string& path, const CostModel& kappa, std::uint64_t domainSize,
                       std::size_t budget, std::ostream& os) {
  const auto rows = readCsv(path);
  const auto expected = frontier(kappa, domainSize, budget);
  if (rows.empty() || rows[0] != std::vector<std::string>{"vector", "cost", "n"}) {
    os << "csv header mismatch\n";
    return false;
  }
  if (rows.size() - 1 != expected.size()) {
    os << "csv has " << rows.size() - 1 << " rows, recomputation has " << expected.size() << '\n';
    return false;
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 3) {
      os << "csv row " << r << " malformed\n";
      return false;
    }
    const DiscriminationVector v{parseIndexList(rows[r][0])};
    const EfficiencyPoint p = makePoint(v, kappa, domainSize);
    const bool ok = p.cost.str() == rows[r][1] && std::to_string(p.maxDistinctions) == rows[r][2] &&
                    v == expected[r - 1].vector;
    if (!ok) {
      os << "csv row " << r << " disagrees with recomputation\n";
      return false;
    }
  }
  os << "csv rows verified: " << rows.size() - 1 << '\n';
  return true;
}

int cmdFrontier(const std::string& costSpec, std::uint64_t domainSize, std::size_t budget,
                const std::string& csvPath, const std::string& verifyPath, Report& report) {
  const CostModel kappa = io::parseCostSpec(costSpec);
  requireNondecreasing(kappa, budget + 1);
  const auto points = frontier(kappa, domainSize, budget);
  auto& os = report.os();
  os << "cost model: " << kappa.description() << '\n';
  os << "domain size: " << domainSize << '\n';
  os << "budget: " << budget << '\n';
  os << "frontier points: " << points.size() << '\n';
  for (const auto& p : points) {
    os << "  vector=" << p.vector.str() << " cost=" << p.cost.str() << " n=" << p.maxDistinctions
       << '\n';
  }

  if (budget + 1 >= 3) {
    const auto cond = binaryCondition(kappa, budget + 1);
    os << "binary condition up to e=" << budget + 1 << ": " << (cond.holds ? "holds" : "fails")
       << '\n';
    if (cond.holds) {
      bool allBinary = true;
      for (const auto& p : points) {
        if (p.maxDistinctions >= domainSize) continue;
        allBinary = allBinary && std::all_of(p.vector.entries.begin(), p.vector.entries.end(),
                                             [](std::size_t e) { return e == 2; });
      }
      os << "frontier points below n=" << domainSize << " all binary: " << yesNo(allBinary) << '\n';
      report.verdict("binary-efficiency", allBinary ? Verdict::pass : Verdict::theoremViolation);
    } else {
      report.verdict("binary-efficiency", Verdict::notApplicable);
    }
    os << "note: checked on one generated domain size and budget, not all admissible domains\n";
  }

  if (!csvPath.empty()) {
    writeFile(csvPath, frontierCsv(points));
    os << "csv written: " << csvPath << '\n';
  }
  if (!verifyPath.empty()) {
    const bool ok = verifyFrontierCsv(verifyPath, kappa, domainSize, budget, os);
    report.verdict("csv", ok ? Verdict::pass : Verdict::fail);
  }
  return report.exitCode();
}

// ---- radix ----------------------------------------------------------------

std::string sweepCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream csv;
  csv << "n;k*;cost\n";
  for (const auto& r : rows) csv << r.n << ';' << joinList(r.bases) << ';' << r.cost.str() << '\n';
  return csv.str();
}

bool verifySweepCsv(const std::string& path, const CostModel& kappa, std::size_t kMax,
                    std::uint64_t nMax, std::ostream& os) {
  const auto rows = readCsv(path);
  if (rows.empty() || rows[0] != std::vector<std::string>{"n", "k*", "cost"}) {
    os << "csv header mismatch\n";
    return false;
  }
  if (rows.size() - 1 != nMax) {
    os << "csv has " << rows.size() - 1 << " rows, expected " << nMax << '\n';
    return false;
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 3 || rows[r][0] != std::to_string(r)) {
      os << "csv row " << r << " malformed\n";
      return false;
    }
    const OptimalBases best = optimalBases(r, kappa, kMax);
    if (joinList(best.bases) != rows[r][1] || best.cost.str() != rows[r][2]) {
      os << "csv row " << r << " disagrees with recomputation\n";
      return false;
    }
  }
  os << "csv rows verified: " << rows.size() - 1 << '\n';
  return true;
}

void printWitness(std::ostream& os, const StorageWitness& w) {
  os << "witness: n=" << w.n << " k=" << w.k << " base cost=" << w.baseCost.str()
     << " binary cost=" << w.binaryCost.str() << (w.tie ? " (tie)" : "") << '\n';
}

// ---- choice / vote --------------------------------------------------------

void printWeakOrder(std::ostream& os, const Domain& d, const WeakOrder& w) {
  os << "rationalizing order:";
  for (std::size_t l = 0; l < w.levels.size(); ++l) {
    os << (l ? " > " : " ") << labelSet(d, w.levels[l]);
  }
  os << '\n';
}

int cmdChoiceBuild(const std::string& file, const std::string& output, Report& report) {
  const CriteriaSet cs = io::loadCriteria(file);
  const ChoiceFunction c = buildMaxChoice(cs);
  const std::string doc = io::choiceToJson(c).dump(2) + "\n";
  if (output.empty()) {
    report.os() << doc;
  } else {
    writeFile(output, doc);
    report.os() << "choice document written: " << output << '\n';
  }
  return report.exitCode();
}

int cmdChoiceCheck(const std::string& file, const std::string& choiceFile, Report& report) {
  const CriteriaSet cs = io::loadCriteria(file);
  const ChoiceFunction c = io::loadChoice(choiceFile);
  if (!(cs.domain() == c.domain())) throw InputError("criteria and choice documents use different domains");
  auto& os = report.os();
  const Domain& d = c.domain();

  const ChoiceClassPartition classes = choiceClasses(c);
  if (!classes.wellDefined) {
    os << "choice classes: not well defined\n";
    os << "witness: " << d.label(classes.witnessX) << " ~ " << d.label(classes.witnessVia) << ", "
       << d.label(classes.witnessVia) << " ~ " << d.label(classes.witnessY) << ", but not "
       << d.label(classes.witnessX) << " ~ " << d.label(classes.witnessY) << '\n';
    report.verdict("choice", Verdict::fail);
    return report.exitCode();
  }
  os << "choice classes: " << classes.classes.size() << '\n';
  for (const auto& cls : classes.classes) os << "  " << labelSet(d, cls) << '\n';

  const bool usesCriteria = uses(cs, c);
  os << "uses: " << yesNo(usesCriteria) << '\n';
  bool maxDisc = false;
  if (usesCriteria) {
    maxDisc = maximallyDiscriminates(cs, c);
    os << "maximally discriminates: " << yesNo(maxDisc) << '\n';
  } else {
    os << "maximally discriminates: n/a (choice function does not use the criteria)\n";
  }
  const auto order = rationalizable(c);
  os << "rationalizable: " << yesNo(order.has_value()) << '\n';
  if (order) printWeakOrder(os, d, *order);
  const bool condorcet = condorcetConsistent(c);
  os << "condorcet consistent: " << yesNo(condorcet) << '\n';
  const bool all = usesCriteria && maxDisc && order.has_value() && condorcet;
  report.verdict("choice", all ? Verdict::pass : Verdict::fail);
  return report.exitCode();
}

int cmdVote(const std::string& file, const std::string& weights, const std::string& choiceOut,
            Report& report) {
  const CriteriaSet cs = io::loadCriteria(file);
  const WeightProfile w = io::parseWeights(weights);
  const Tournament t = weightedTournament(cs, w);
  auto& os = report.os();
  const Domain& d = cs.domain();

  os << "positive margins:\n";
  for (std::size_t x = 0; x < d.size(); ++x) {
    for (std::size_t y = 0; y < d.size(); ++y) {
      if (t.margin(x, y) > 0) os << "  " << d.label(x) << " > " << d.label(y) << " by " << t.margin(x, y) << '\n';
    }
  }

  if (const auto cycle = findCondorcetCycle(t)) {
    os << "condorcet cycle:";
    for (std::size_t x : *cycle) os << ' ' << d.label(x) << " >";
    os << ' ' << d.label(cycle->front()) << '\n';
    report.verdict("vote", Verdict::fail);
    return report.exitCode();
  }
  os << "condorcet cycle: none\n";

  const bool allBinary = std::all_of(cs.criteria().begin(), cs.criteria().end(), [](const Criterion& c) {
    return c.structure.e() == 2 && c.structure.order(0, 1) != c.structure.order(1, 0);
  });
  const ChoiceFunction c = allBinary ? aggregateChoice(cs, w) : majorityChoice(t);
  os << "aggregation: " << (allBinary ? "weighted top-category scores" : "pairwise majority") << '\n';
  const auto order = rationalizable(c);
  const bool condorcet = condorcetConsistent(c);
  os << "rationalizable: " << yesNo(order.has_value()) << '\n';
  if (order) printWeakOrder(os, d, *order);
  os << "condorcet consistent: " << yesNo(condorcet) << '\n';
  if (allBinary) {
    os << "note: verified for additive weighted voting only\n";
    report.verdict("vote", order && condorcet ? Verdict::pass : Verdict::theoremViolation);
  } else {
    report.verdict("vote", order && condorcet ? Verdict::pass : Verdict::fail);
  }
  if (!choiceOut.empty()) {
    writeFile(choiceOut, io::choiceToJson(c).dump(2) + "\n");
    os << "choice document written: " << choiceOut << '\n';
  }
  return report.exitCode();
}

int cmdResult1(const std::string& v, const std::string& w, const std::string& costSpec,
               std::uint64_t domainSize, Report& report) {
  const CostModel kappa = io::parseCostSpec(costSpec);
  const DiscriminationVector dv{parseIndexList(v)};
  const DiscriminationVector dw{parseIndexList(w)};
  const Result1Verdict r = verifyResult1(dv, dw, kappa, domainSize);
  auto& os = report.os();
  os << "v: " << r.v.vector.str() << " n=" << r.v.maxDistinctions << " cost=" << r.v.cost.str() << '\n';
  os << "w: " << r.w.vector.str() << " n=" << r.w.maxDistinctions << " cost=" << r.w.cost.str() << '\n';
  if (!r.variant.empty()) os << "marginal-cost variant: " << r.variant << '\n';
  os << "relation: " << toString(r.relation) << '\n';
  os << "reason: " << r.reason << '\n';
  report.verdict("result1", r.status == VerdictStatus::pass   ? Verdict::pass
                            : r.status == VerdictStatus::fail ? Verdict::fail
                                                              : Verdict::notApplicable);
  return report.exitCode();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coarse decision criteria: categories, efficiency, radix economy, aggregation"};
  app.name("coarse");
  app.require_subcommand(1);

  std::string file, costSpec = "linear:1", csvPath, verifyPath, output, choiceFile, weights, digits;
  std::string vText, wText;
  std::uint64_t domainSize = 0, n = 0, nMax = 0, value = 0;
  std::size_t budget = 0, k = 2, kMax = 0;
  bool exhaustive = false, unionSelectors = false;

  auto* analyze = app.add_subcommand("analyze", "Categories, discrimination vector and partition");
  analyze->add_option("file", file, "criteria document")->required();

  auto* theorem = app.add_subcommand("theorem", "Maximal categorization / order isomorphism / product");
  theorem->add_option("file", file, "criteria document")->required();
  theorem->add_flag("--exhaustive-selectors", exhaustive, "check every selector union");
  theorem->add_flag("--union-selectors", unionSelectors, "also report the union-of-categories reading");

  auto* front = app.add_subcommand("frontier", "Pareto frontier over discrimination vectors");
  front->add_option("--cost", costSpec, "cost model")->required();
  front->add_option("--domain-size", domainSize, "|X|")->required()->check(CLI::PositiveNumber);
  front->add_option("--budget", budget, "max sum of (e - 1)")->required()->check(CLI::PositiveNumber);
  front->add_option("--csv", csvPath, "write the frontier as CSV");
  front->add_option("--verify-csv", verifyPath, "re-check a frontier CSV against recomputation");

  auto* radix = app.add_subcommand("radix", "Digit-base storage cost");
  radix->require_subcommand(1);
  auto* rCost = radix->add_subcommand("cost", "Storage plan for one base");
  rCost->add_option("--n", n, "range size")->required()->check(CLI::PositiveNumber);
  rCost->add_option("--k", k, "base")->required()->check(CLI::Range(2, 1 << 20));
  rCost->add_option("--cost", costSpec, "cost model (default linear:1)");
  auto* rOpt = radix->add_subcommand("optimal", "Minimum-cost bases");
  rOpt->add_option("--n", n, "range size")->required()->check(CLI::PositiveNumber);
  rOpt->add_option("--cost", costSpec, "cost model (default linear:1)");
  rOpt->add_option("--kmax", kMax, "largest base")->required()->check(CLI::Range(2, 1 << 20));
  auto* rCheck = radix->add_subcommand("check-binary", "Binary optimality against the binary condition");
  rCheck->add_option("--cost", costSpec, "cost model")->required();
  rCheck->add_option("--kmax", kMax, "largest base")->required()->check(CLI::Range(3, 1 << 20));
  rCheck->add_option("--nmax", nMax, "largest range")->required()->check(CLI::Range(2, 100000000));
  auto* rSweep = radix->add_subcommand("sweep", "Optimal bases for n = 1..nmax as CSV");
  rSweep->add_option("--cost", costSpec, "cost model")->required();
  rSweep->add_option("--kmax", kMax, "largest base")->required()->check(CLI::Range(2, 1 << 20));
  rSweep->add_option("--nmax", nMax, "largest range")->required()->check(CLI::Range(1, 100000000));
  rSweep->add_option("--csv", csvPath, "write CSV to a file instead of stdout");
  rSweep->add_option("--verify-csv", verifyPath, "re-check a sweep CSV against recomputation");
  auto* rEncode = radix->add_subcommand("encode", "Digits storing a value in 1..n");
  rEncode->add_option("--n", n, "range size")->required()->check(CLI::PositiveNumber);
  rEncode->add_option("--k", k, "base")->required()->check(CLI::Range(2, 1 << 20));
  rEncode->add_option("--value", value, "value in 1..n")->required();
  auto* rDecode = radix->add_subcommand("decode", "Value stored by a digit vector");
  rDecode->add_option("--n", n, "range size")->required()->check(CLI::PositiveNumber);
  rDecode->add_option("--k", k, "base")->required()->check(CLI::Range(2, 1 << 20));
  rDecode->add_option("--digits", digits, "comma-separated digits (empty for zero digits)");

  auto* choice = app.add_subcommand("choice", "Choice functions over criteria");
  choice->require_subcommand(1);
  auto* cBuild = choice->add_subcommand("build", "Maximally discriminating choice document");
  cBuild->add_option("file", file, "criteria document")->required();
  cBuild->add_option("-o,--output", output, "write the choice document to a file");
  auto* cCheck = choice->add_subcommand("check", "uses / maximal discrimination / rationality / Condorcet");
  cCheck->add_option("file", file, "criteria document")->required();
  cCheck->add_option("--choice", choiceFile, "choice document")->required();

  auto* vote = app.add_subcommand("vote", "Weighted voting over criteria");
  vote->add_option("file", file, "criteria document")->required();
  vote->add_option("--weights", weights, "comma-separated positive weights")->required();
  vote->add_option("--choice-out", output, "write the aggregate choice document");

  auto* r1 = app.add_subcommand("result1", "Coarser proportions at equal costly-category budget");
  r1->add_option("--v", vText, "coarser vector, e.g. 2,2,2")->required();
  r1->add_option("--w", wText, "finer vector, e.g. 4")->required();
  r1->add_option("--cost", costSpec, "cost model")->required();
  r1->add_option("--domain-size", domainSize, "|X|")->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    Report report(out, args);
    if (*analyze) return cmdAnalyze(file, report);
    if (*theorem) return cmdTheorem(file, exhaustive, unionSelectors, report);
    if (*front) return cmdFrontier(costSpec, domainSize, budget, csvPath, verifyPath, report);
    if (*vote) return cmdVote(file, weights, output, report);
    if (*r1) return cmdResult1(vText, wText, costSpec, domainSize, report);
    if (*cBuild) return cmdChoiceBuild(file, output, report);
    if (*cCheck) return cmdChoiceCheck(file, choiceFile, report);

    auto& os = report.os();
    const CostModel kappa = io::parseCostSpec(costSpec);
    if (*rCost) {
      const StoragePlan plan = storageCost(n, k, kappa);
      os << "cost model: " << kappa.description() << '\n';
      os << "base: " << plan.k << "\ndigits: " << plan.digits << "\ncost: " << plan.cost.str() << '\n';
      return report.exitCode();
    }
    if (*rOpt) {
      const OptimalBases best = optimalBases(n, kappa, kMax);
      os << "cost model: " << kappa.description() << '\n';
      os << "optimal bases: " << joinList(best.bases) << "\ncost: " << best.cost.str() << '\n';
      os << "binary cost: " << storageCost(n, 2, kappa).cost.str() << '\n';
      return report.exitCode();
    }
    if (*rCheck) {
      requireNondecreasing(kappa, kMax);
      const BinaryOptimalityReport r = binaryAlwaysOptimal(kappa, kMax, nMax);
      const BinaryConditionReport cond = binaryCondition(kappa, kMax);
      os << "cost model: " << kappa.description() << '\n';
      for (const auto& row : cond.rows) {
        os << "  e=" << row.e << " kappa=" << row.cost.str() << " bound=" << row.bound.str()
           << (row.holds ? " holds" : " fails") << '\n';
      }
      os << "binary condition: " << (r.conditionHolds ? "holds" : "fails");
      if (r.conditionFailure) os << " (first failure at e=" << *r.conditionFailure << ")";
      os << '\n';
      os << "binary strictly optimal for n in 2.." << nMax << ": " << yesNo(r.binaryOptimal) << '\n';
      if (r.witness) printWitness(os, *r.witness);
      os << "agree: " << yesNo(r.agree) << '\n';
      report.verdict("binary-storage", r.agree ? Verdict::pass : Verdict::theoremViolation);
      return report.exitCode();
    }
    if (*rSweep) {
      const auto rows = radixSweep(kappa, kMax, nMax);
      if (csvPath.empty() && verifyPath.empty()) {
        os << sweepCsv(rows);
      } else if (!csvPath.empty()) {
        writeFile(csvPath, sweepCsv(rows));
        os << "csv written: " << csvPath << '\n';
      }
      if (!verifyPath.empty()) {
        const bool ok = verifySweepCsv(verifyPath, kappa, kMax, nMax, os);
        report.verdict("csv", ok ? Verdict::pass : Verdict::fail);
      }
      return report.exitCode();
    }
    if (*rEncode) {
      const StoragePlan plan = storageCost(n, k, CostModel::linear(1));
      os << "digits: " << joinList(encode(value, plan)) << '\n';
      return report.exitCode();
    }
    if (*rDecode) {
      const StoragePlan plan = storageCost(n, k, CostModel::linear(1));
      const auto ds = digits.empty() ? std::vector<std::size_t>{} : parseIndexList(digits);
      os << "value: " << decode(ds, plan) << '\n';
      return report.exitCode();
    }
    err << "error: no command\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UnsupportedDomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace coarse::cli
