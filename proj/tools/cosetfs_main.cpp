// Command-line front end: single queries, batch tables, and the full
// verification harness. Every number prints exactly (integers bare,
// rationals as "p/q"); JSON output keeps numeric values as strings.
//
// Exit codes: 0 ok, 1 usage error, 2 cap exceeded, 3 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosetfs/bilinear_forms.hpp"
#include "cosetfs/indicators.hpp"
#include "cosetfs/oracle.hpp"
#include "cosetfs/rep_io.hpp"
#include "cosetfs/verify.hpp"

using nlohmann::ordered_json;
using namespace cosetfs;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kCapExceeded = 2, kVerifyFailed = 3 };

struct Options {
  std::string format = "plain";  // plain | json | csv
  int workers = std::max(1, std::min(8, static_cast<int>(std::thread::hardware_concurrency())));
};

std::string csv_cell(const ordered_json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  }
  return s;
}

/// One header row naming the query parameters, then one row per record.
void emit_records(const Options& opt, const std::vector<ordered_json>& records) {
  if (records.empty()) return;
  if (opt.format == "json") {
    if (records.size() == 1) {
      std::cout << records.front().dump(2) << "\n";
    } else {
      ordered_json arr = records;
      std::cout << arr.dump(2) << "\n";
    }
    return;
  }
  if (opt.format == "csv") {
    std::string header;
    for (auto it = records.front().begin(); it != records.front().end(); ++it) {
      if (!header.empty()) header += ',';
      header += it.key();
    }
    std::cout << header << "\n";
    for (const auto& rec : records) {
      std::string row;
      for (auto it = rec.begin(); it != rec.end(); ++it) {
        if (!row.empty()) row += ',';
        row += csv_cell(it.value());
      }
      std::cout << row << "\n";
    }
    return;
  }
  bool first = true;
  for (const auto& rec : records) {
    if (!first) std::cout << "\n";
    first = false;
    for (auto it = rec.begin(); it != rec.end(); ++it)
      std::cout << it.key() << ": "
                << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                << "\n";
  }
}

void emit_record(const Options& opt, const ordered_json& record) {
  emit_records(opt, {record});
}

int cmd_involutions(const Options& opt, int n, const std::string& alpha_s, const std::string& b_s,
                    bool check) {
  const Composition alpha = Composition::parse(alpha_s);
  if (alpha.total() != n || !alpha.all_positive())
    throw std::invalid_argument("alpha must be a composition of n with positive parts");
  const Permutation b = Permutation::parse_cycles(b_s, n);
  const CompositionMatrix gamma = gamma_matrix_of_coset(alpha, b);
  const long long value = involutions_in_young_coset(alpha, b);

  ordered_json rec;
  rec["query"] = "involutions in b*S_alpha";
  rec["n"] = n;
  rec["alpha"] = alpha.str();
  rec["b"] = b.cycles();
  rec["gamma"] = gamma.str();
  rec["symmetric"] = gamma.is_symmetric();
  rec["value"] = std::to_string(value);
  rec["method"] = "young-closed-form";
  int code = kOk;
  if (check) {
    auto H = PermGroup::young(alpha);
    const long long ora = oracle::count_involutions_in_coset(*H, b);
    rec["oracle"] = std::to_string(ora);
    rec["certificate"] = value == ora ? "oracle-match" : "ORACLE-MISMATCH";
    if (value != ora) code = kVerifyFailed;
  }
  emit_record(opt, rec);
  return code;
}

int cmd_roots(const Options& opt, int n, const std::string& alpha_s, const std::string& b_s,
              int r, const std::string& a_s, bool check) {
  const Composition alpha = Composition::parse(alpha_s);
  if (alpha.total() != n || !alpha.all_positive())
    throw std::invalid_argument("alpha must be a composition of n with positive parts");
  const Permutation b = Permutation::parse_cycles(b_s, n);
  const Permutation a = a_s.empty() ? Permutation(n) : Permutation::parse_cycles(a_s, n);
  auto G = PermGroup::symmetric(n);
  auto H = PermGroup::young(alpha);

  ordered_json rec;
  rec["query"] = "roots: |{c in b*S_alpha : c^r = a}|";
  rec["n"] = n;
  rec["alpha"] = alpha.str();
  rec["b"] = b.cycles();
  rec["r"] = r;
  rec["a"] = a.cycles();

  std::optional<Rational> formula;
  std::string method = "oracle";
  std::string certificate = "enumeration";
  if (H->contains(a)) {
    const ExpansionResult er = coset_root_expansion(G, alpha, b, r);
    if (er.X->act(a, er.y) != er.y) {
      formula = Rational(0);
      method = "expansion";
      certificate = "a moves the second base point; count vanishes";
    } else {
      formula = er.value_at(a);
      method = "expansion";
      certificate = "character expansion over the two-point stabilizer";
    }
  }

  int code = kOk;
  long long ora = -1;
  if (check || !formula) ora = oracle::count_roots_in_coset(*H, b, r, a);
  rec["value"] = formula ? to_string(*formula) : std::to_string(ora);
  rec["method"] = method;
  if (check) {
    rec["oracle"] = std::to_string(ora);
    if (formula && *formula != Rational(static_cast<long>(ora))) {
      certificate = "ORACLE-MISMATCH";
      code = kVerifyFailed;
    } else if (formula) {
      certificate += "; oracle-match";
    }
  }
  rec["certificate"] = certificate;
  emit_record(opt, rec);
  return code;
}

int cmd_expansion(const Options& opt, int n, const std::string& alpha_s, const std::string& b_s,
                  int r, bool check) {
  const Composition alpha = Composition::parse(alpha_s);
  if (alpha.total() != n || !alpha.all_positive())
    throw std::invalid_argument("alpha must be a composition of n with positive parts");
  const Permutation b = Permutation::parse_cycles(b_s, n);
  auto G = PermGroup::symmetric(n);
  const ExpansionResult er = coset_root_expansion(G, alpha, b, r);
  auto H = PermGroup::young(alpha);

  ordered_json rec;
  rec["query"] = "class-function expansion of coset root counts";
  rec["n"] = n;
  rec["alpha"] = alpha.str();
  rec["b"] = b.cycles();
  rec["r"] = r;
  rec["gamma"] = er.stab.gamma.str();
  rec["stabilizer_order"] = std::to_string(er.stab.K->size());
  ordered_json coeffs = ordered_json::array();
  for (std::size_t i = 0; i < er.labels.size(); ++i) {
    ordered_json c;
    c["lambda"] = er.labels[i].str();
    c["fs_r"] = to_string(er.coefficients[i]);
    c["degree"] = std::to_string(er.characters[i].degree());
    coeffs.push_back(std::move(c));
  }
  rec["coefficients"] = std::move(coeffs);
  ordered_json values = ordered_json::array();
  int code = kOk;
  bool all_match = true;
  for (const auto& cls : er.stab.K->conjugacy_classes()) {
    const Permutation& k = er.stab.K->element(cls.rep);
    ordered_json v;
    v["class_rep"] = k.cycles();
    v["class_size"] = std::to_string(cls.members.size());
    const Rational val = er.value_at(k);
    v["value"] = to_string(val);
    if (check) {
      const long long ora = oracle::count_roots_in_coset(*H, b, r, k);
      v["oracle"] = std::to_string(ora);
      if (val != Rational(static_cast<long>(ora))) all_match = false;
    }
    values.push_back(std::move(v));
  }
  rec["values"] = std::move(values);
  if (check) {
    rec["certificate"] = all_match ? "oracle-match on all classes" : "ORACLE-MISMATCH";
    if (!all_match) code = kVerifyFailed;
  } else {
    rec["certificate"] = "character expansion over the two-point stabilizer";
  }
  emit_record(opt, rec);
  return code;
}

int cmd_indicator(const Options& opt, int n, const std::string& alpha_s, const std::string& b_s,
                  const std::string& lambda_s, int r, const std::string& rep_file) {
  const Composition alpha = Composition::parse(alpha_s);
  if (alpha.total() != n || !alpha.all_positive())
    throw std::invalid_argument("alpha must be a composition of n with positive parts");
  auto G = PermGroup::symmetric(n);
  auto H = PermGroup::young(alpha);
  auto X = GSet::ordered_set_partitions(G, alpha);
  const int x = X->base_point();

  std::vector<Permutation> bs;
  if (!b_s.empty())
    bs.push_back(Permutation::parse_cycles(b_s, n));
  else
    bs = G->double_cosets(*H).reps;

  RepPtr user_rep;
  if (!rep_file.empty()) {
    std::ifstream in(rep_file);
    if (!in) throw std::invalid_argument("cannot open representation file " + rep_file);
    user_rep = representation_from_json(nlohmann::json::parse(in));
  }

  std::optional<PartitionMatrix> want;
  if (!lambda_s.empty()) want = PartitionMatrix::parse(lambda_s);

  AmbientPtr amb;
  try {
    amb = std::make_shared<const Ambient>(G, X);
  } catch (const CapExceeded&) {
    amb = nullptr;  // trace methods will be skipped
  }

  int code = kOk;
  std::vector<ordered_json> records;
  for (const auto& b : bs) {
    const int y = X->act(b, x);
    auto sd = two_point_stabilizer(*X, x, y);
    const RootScan rs = root_scan(*X, x, y, r);
    auto transposer = find_transposer(*X, x, y);

    auto process = [&](const std::string& label, const CharFn& chi, const RepPtr& V,
                       const PartitionMatrix* lam) {
      ordered_json rec;
      rec["query"] = "indicator of the induced module";
      rec["n"] = n;
      rec["alpha"] = alpha.str();
      rec["b"] = b.cycles();
      rec["gamma"] = sd.gamma.str();
      rec["module"] = label;
      rec["r"] = r;
      std::vector<std::pair<std::string, Rational>> methods;
      methods.emplace_back("formula", fs_from_scan(rs, chi));
      if (r == 2 && lam)
        methods.emplace_back("closed-form-young", Rational(fs2_young(sd.gamma, *lam)));
      if (r == 2 && transposer)
        methods.emplace_back("twisted", twisted_fs2(*sd.K, chi, *transposer));
      if (amb) {
        auto M = InducedModule::induce(amb, x, y, V);
        methods.emplace_back("direct-trace", M->fs_direct(r));
        long long budget = Config::global().nu_budget;
        long long size = 1;
        bool fits = true;
        for (int i = 0; i < r && fits; ++i) {
          size *= M->dim();
          if (size > budget) fits = false;
        }
        if (fits) methods.emplace_back("nu_r", M->nu_r(r));
      } else {
        rec["note"] = "trace methods skipped: ambient above cap";
      }
      ordered_json mj;
      bool agree = true;
      for (const auto& [name, val] : methods) {
        mj[name] = to_string(val);
        if (val != methods.front().second) agree = false;
      }
      rec["methods"] = std::move(mj);
      rec["value"] = to_string(methods.front().second);
      rec["agreement"] = agree;
      if (!agree) code = kVerifyFailed;
      records.push_back(std::move(rec));
    };

    if (user_rep) {
      if (user_rep->group()->size() != sd.K->size())
        throw std::invalid_argument("supplied representation is not of the two-point stabilizer");
      process("user-representation",
              [V = user_rep](const Permutation& k) { return V->of(k).trace(); }, user_rep,
              nullptr);
    } else {
      for (const auto& lam : partition_matrices(sd.gamma)) {
        if (want && !(lam == *want)) continue;
        const ProductCharacter chi = character_on_stabilizer(sd, lam);
        process("[" + lam.str() + "]", chi.fn(), module_representation(sd, lam), &lam);
      }
    }
  }
  emit_records(opt, records);
  return code;
}

int cmd_verify(const Options& opt, const std::string& suite, int max_n, int max_r, int m) {
  verify::SuiteOptions so;
  so.max_n = max_n;
  so.max_r = max_r;
  so.m = m;
  so.workers = opt.workers;
  std::vector<std::string> names =
      suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
  bool any_failed = false;
  for (const auto& name : names) {
    const verify::SuiteResult res = verify::run_suite(name, so);
    ordered_json rec;
    rec["suite"] = res.name;
    rec["instances"] = res.instances;
    rec["failures"] = static_cast<long long>(res.failures.size());
    rec["seconds"] = res.seconds;
    std::cout << rec.dump() << "\n";
    for (std::size_t i = 0; i < res.failures.size() && i < 10; ++i)
      std::cerr << "  failure: " << res.failures[i] << "\n";
    if (!res.ok()) any_failed = true;
  }
  return any_failed ? kVerifyFailed : kOk;
}

int cmd_tables(int n, const std::string& out_file) {
  const std::string csv = character_table_csv(n);
  if (out_file.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_file);
    if (!out) throw std::invalid_argument("cannot open output file " + out_file);
    out << csv;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  apply_env_caps(Config::global());

  CLI::App app{"exact indicators and root counts for symmetric group cosets"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "output format: plain|json|csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--workers", opt.workers, "worker threads for verification suites");
  std::size_t cap_override = 0;
  app.add_option("--cap", cap_override, "ambient cap override (|X|^2 |G| symbol universe)");

  int n = 0, r = 2, max_n = 0, max_r = 0, m = 0;
  std::string alpha, b, a, lambda, rep_file, suite = "all", out_file;
  bool check = false;

  auto* inv = app.add_subcommand("involutions", "count involutions in a Young-subgroup coset");
  inv->add_option("--n", n, "degree")->required();
  inv->add_option("--alpha", alpha, "composition, e.g. 2,2")->required();
  inv->add_option("--b", b, "coset representative in cycle form, e.g. \"(2 3)\"")->required();
  inv->add_flag("--check", check, "compare with enumeration");

  auto* roots = app.add_subcommand("roots", "count r-th roots of a in a Young-subgroup coset");
  roots->add_option("--n", n, "degree")->required();
  roots->add_option("--alpha", alpha, "composition")->required();
  roots->add_option("--b", b, "coset representative")->required();
  roots->add_option("--r", r, "root exponent")->required();
  roots->add_option("--a", a, "target element (default identity)");
  roots->add_flag("--check", check, "compare with enumeration");

  auto* ind = app.add_subcommand("indicator", "indicators of induced modules, every method");
  ind->add_option("--n", n, "degree")->required();
  ind->add_option("--alpha", alpha, "composition")->required();
  ind->add_option("--b", b, "orbital representative (default: all double cosets)");
  ind->add_option("--lambda", lambda, "partition matrix, e.g. \"(1) (1);(1) (1)\"");
  ind->add_option("--r", r, "indicator order (default 2)");
  ind->add_option("--rep", rep_file, "json file with a stabilizer representation");

  auto* exp = app.add_subcommand("expansion", "class-function expansion of coset root counts");
  exp->add_option("--n", n, "degree")->required();
  exp->add_option("--alpha", alpha, "composition")->required();
  exp->add_option("--b", b, "coset representative")->required();
  exp->add_option("--r", r, "root exponent")->required();
  exp->add_flag("--check", check, "compare with enumeration pointwise");

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", suite, "suite name or 'all'");
  ver->add_option("--max-n", max_n, "override the maximal degree");
  ver->add_option("--r", max_r, "override the maximal exponent");
  ver->add_option("--m", m, "restrict the tableau identity to one block size");

  auto* tab = app.add_subcommand("tables", "symmetric group character table as CSV");
  tab->add_option("--n", n, "degree")->required();
  tab->add_option("--out", out_file, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (cap_override > 0) Config::global().ambient_cap = cap_override;

  try {
    if (inv->parsed()) return cmd_involutions(opt, n, alpha, b, check);
    if (roots->parsed()) return cmd_roots(opt, n, alpha, b, r, a, check);
    if (ind->parsed()) return cmd_indicator(opt, n, alpha, b, lambda, r, rep_file);
    if (exp->parsed()) return cmd_expansion(opt, n, alpha, b, r, check);
    if (ver->parsed()) return cmd_verify(opt, suite, max_n, max_r, m);
    if (tab->parsed()) return cmd_tables(n, out_file);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
