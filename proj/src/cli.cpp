#include "wright/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ios>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "wright/arithfun.hpp"
#include "wright/asymptotics.hpp"
#include "wright/semigroups.hpp"
#include "wright/serialize.hpp"
#include "wright/triples.hpp"

namespace wright {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string semigroup = "graphs";
  std::string q = "2";
  unsigned k = 2;
  std::string counts;
  std::string function = "d2";
  std::string values;
  unsigned M = 1;
  std::size_t R = 3;
  std::optional<std::size_t> max_n;
  std::string n_range;
  std::string format = "json";
  bool parallel = false;
  std::string reading = "unnormalized";
  std::string suite = "expansion";
  std::string golden_dir;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

SemigroupModel build_model(const Options& o) {
  SemigroupSpec spec;
  spec.name = o.semigroup;
  spec.q = parse_bigint(o.q);
  spec.k = o.k;
  if (o.semigroup == "custom") {
    for (const auto& s : split_list(o.counts)) spec.counts.push_back(parse_bigint(s));
    if (spec.counts.empty()) throw UsageError("--semigroup custom needs --counts");
  }
  return make_semigroup(spec);
}

WarlimontFn build_function(const Options& o) {
  std::vector<Rat> custom;
  for (const auto& s : split_list(o.values)) custom.push_back(parse_rat(s));
  if (o.function == "custom" && custom.empty()) throw UsageError("--function custom needs --values");
  return make_function(o.function, o.k, custom);
}

std::pair<std::size_t, std::size_t> range_or(const Options& o, std::size_t lo, std::size_t hi) {
  if (o.n_range.empty()) return {lo, hi};
  return parse_range(o.n_range);
}

std::vector<Rat> ones(std::size_t N) { return std::vector<Rat>(N + 1, Rat(1)); }

Json model_json(const SemigroupModel& model) {
  Json params = Json::object();
  for (const auto& [key, value] : model.info().params) params[key] = value;
  return Json{{"name", model.name()}, {"params", std::move(params)}};
}

std::string join(std::span<const Rat> values, std::size_t from = 0) {
  std::string out;
  for (std::size_t i = from; i < values.size(); ++i) {
    if (i > from) out += ",";
    out += to_string(values[i]);
  }
  return out;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// G_n and G^+_n; a non-integral inversion is printed as rationals.
int cmd_counts(const Options& o, std::ostream& out, bool with_counts, bool with_primes) {
  const auto model = build_model(o);
  const std::size_t N = o.max_n.value_or(10);
  const auto G = model.counts(N);
  const auto inv = invert_to_primes(G, ones(N));
  std::vector<Rat> primes(inv.t.begin() + 1, inv.t.end());
  if (o.format == "json") {
    Json j{{"semigroup", model_json(model)}, {"max_n", N}};
    if (with_counts) j["counts"] = rats_to_json(G);
    if (with_primes) {
      j["primes"] = rats_to_json(primes);
      j["primes_integral"] = inv.integral;
    }
    emit_json(out, j);
  } else if (o.format == "csv") {
    out << "n" << (with_counts ? ",count" : "") << (with_primes ? ",prime" : "") << '\n';
    for (std::size_t n = 0; n <= N; ++n) {
      out << n;
      if (with_counts) out << ',' << to_string(G[n]);
      if (with_primes) out << ',' << (n == 0 ? "" : to_string(inv.t[n]));
      out << '\n';
    }
  } else {
    if (with_counts) out << "G: " << join(G) << '\n';
    if (with_primes) out << "primes: " << join(primes) << '\n';
  }
  return 0;
}

int cmd_beta(const Options& o, std::ostream& out) {
  const auto model = build_model(o);
  const std::size_t N = o.max_n.value_or(10);
  const auto beta = derive_beta(model.counts(N));
  if (o.format == "json") {
    emit_json(out, Json{{"semigroup", model_json(model)}, {"beta", rats_to_json(beta)}});
  } else if (o.format == "csv") {
    out << "n,beta\n";
    for (std::size_t n = 0; n <= N; ++n) out << n << ',' << to_string(beta[n]) << '\n';
  } else {
    out << "beta: " << join(beta) << '\n';
  }
  return 0;
}

TotalsReading reading_of(const Options& o) {
  return o.reading == "normalized" ? TotalsReading::Normalized : TotalsReading::Unnormalized;
}

int cmd_expansion(const Options& o, std::ostream& out) {
  const auto model = build_model(o);
  const auto F = build_function(o);
  const auto ex = expand_moment(F, model, o.M, o.R, reading_of(o));
  if (o.format == "json") {
    Json j{{"semigroup", model_json(model)}, {"function", F.name()}, {"M", o.M}, {"R", o.R}, {"reading", o.reading}};
    const Json tables = moment_expansion_to_json(ex);
    for (const auto& [key, value] : tables.items()) j[key] = value;
    emit_json(out, j);
  } else if (o.format == "csv") {
    out << "table,s,t,power,coeff\n";
    auto rows = [&](const std::string& table, std::size_t s, std::size_t t, const Poly& p) {
      for (std::size_t i = 0; i < std::max<std::size_t>(p.coeffs().size(), 1); ++i)
        out << table << ',' << s << ',' << t << ',' << i << ',' << to_string(p.coeff(i)) << '\n';
    };
    for (std::size_t s = 1; s < o.R; ++s) rows("psi", s, 0, ex.psi.term(s));
    for (std::size_t s = 1; s < o.R; ++s)
      for (std::size_t t = 1; t <= s; ++t) rows("nu", s, t, ex.nu.at(s, t));
    for (std::size_t s = 1; s < o.R; ++s) rows("xi", s, 0, Poly::constant(ex.xi.xi[s]));
    for (std::size_t s = 1; s < o.R; ++s) rows("tau", s, 0, ex.tau.tau[s]);
  } else {
    out << "base " << to_string(ex.psi.base()) << '\n';
    for (std::size_t s = 1; s < o.R; ++s) out << "psi_" << s << "(n) = " << poly_to_text(ex.psi.term(s)) << '\n';
    for (std::size_t s = 1; s < o.R; ++s)
      for (std::size_t t = 1; t <= s; ++t)
        out << "nu_" << s << ',' << t << "(n) = " << poly_to_text(ex.nu.at(s, t)) << '\n';
    for (std::size_t s = 1; s < o.R; ++s) out << "xi_" << s << " = " << to_string(ex.xi.xi[s]) << '\n';
    for (std::size_t s = 1; s < o.R; ++s) out << "tau_" << s << "(n) = " << poly_to_text(ex.tau.tau[s]) << '\n';
  }
  return 0;
}

int cmd_moment(const Options& o, std::ostream& out) {
  const auto model = build_model(o);
  const auto F = build_function(o);
  const auto [lo, hi] = range_or(o, 0, o.max_n.value_or(10));
  const auto table = moment_table(F, model, o.M, hi, o.parallel);
  if (o.format == "json") {
    Json rows = Json::array();
    for (std::size_t n = lo; n <= hi; ++n) rows.push_back(Json{{"n", n}, {"mu", to_string(table.mu[n])}});
    emit_json(out, Json{{"semigroup", model_json(model)}, {"function", F.name()}, {"M", o.M}, {"mu", rows}});
  } else if (o.format == "csv") {
    out << "n,mu\n";
    for (std::size_t n = lo; n <= hi; ++n) out << n << ',' << to_string(table.mu[n]) << '\n';
  } else {
    for (std::size_t n = lo; n <= hi; ++n) out << "mu(" << n << ") = " << to_string(table.mu[n]) << '\n';
  }
  return 0;
}

std::string float_text(const BigFloat& x) { return x.str(30, std::ios_base::scientific); }

int cmd_lambda(const Options& o, std::ostream& out) {
  const auto model = build_model(o);
  const auto F = build_function(o);
  const auto [lo, hi] = range_or(o, 1, o.max_n.value_or(10));
  Json rows = Json::array();
  if (o.format == "csv") out << "s,n,exact,approx\n";
  for (std::size_t s = 1; s < o.R; ++s) {
    for (std::size_t n = std::max(lo, s); n <= hi; ++n) {
      const auto v = lambda_pointwise(F, model, o.M, s, n);
      const std::string exact = v.exact ? to_string(*v.exact) : "";
      if (o.format == "json") {
        rows.push_back(Json{{"s", s}, {"n", n}, {"exact", v.exact ? Json(exact) : Json(nullptr)},
                            {"approx", float_text(v.approx)}});
      } else if (o.format == "csv") {
        out << s << ',' << n << ',' << exact << ',' << float_text(v.approx) << '\n';
      } else {
        out << "lambda_" << s << '(' << n << ") = " << (v.exact ? exact : float_text(v.approx)) << '\n';
      }
    }
  }
  if (o.format == "json") {
    emit_json(out, Json{{"semigroup", model_json(model)}, {"function", F.name()}, {"M", o.M}, {"lambda", rows}});
  }
  return 0;
}

CheckResult identity_check(const std::string& name, const IdentityReport& report) {
  CheckResult c{name, report.ok(), std::to_string(report.checks) + " exact checks"};
  if (const auto& f = report.failure) {
    c.detail = f->identity + " fails at n=" + std::to_string(f->n) + " R=" + std::to_string(f->R) +
               ": " + to_string(f->lhs) + " != " + to_string(f->rhs);
  }
  return c;
}

CheckResult bound_check(const std::string& name, const RatioTable& table, BoundCriterion criterion) {
  const auto v = judge_bounded(table, criterion);
  return {name, v.bounded, v.detail};
}

std::vector<CheckResult> suite_expansion(const Options& o, const SemigroupModel& model, const WarlimontFn& F,
                                         Json& reports) {
  const std::size_t start = std::max<std::size_t>(o.R, 10);
  const auto [lo, hi] = range_or(o, start, start + 12);
  const auto ex = expand_moment(F, model, o.M, o.R);
  const auto report = verify_expansion(F, model, o.M, o.R, lo, hi, o.parallel);
  reports.push_back(moment_report_to_json(ex, report));
  const std::string name = "expansion " + model.name() + " " + F.name() + " M=" + std::to_string(o.M) +
                           " R=" + std::to_string(o.R) + " n=" + std::to_string(lo) + ".." + std::to_string(hi);
  return {{name, report.verdict.bounded, report.verdict.detail}};
}

WarlimontTriple triple_of(const SemigroupModel& model, const WarlimontFn& F, std::size_t N) {
  return WarlimontTriple::from_primes(model.primes(N), F.values(N), N);
}

std::vector<CheckResult> suite_lemma2(const Options& o, const SemigroupModel& model, const WarlimontFn& F) {
  const std::size_t N = o.max_n.value_or(12);
  const auto triple = triple_of(model, F, N);
  std::vector<CheckResult> out;
  const std::string tag = " " + model.name() + " " + F.name() + " N=" + std::to_string(N);
  out.push_back(identity_check("lemma2" + tag, check_lemma2_identities(triple, N)));
  out.push_back(identity_check("beta*T=delta" + tag, check_beta_convolution(triple.T(), N)));
  const auto back = invert_to_primes(triple.T(), triple.a());
  const bool round_trip = back.integral && std::equal(back.t.begin(), back.t.end(), triple.t().begin());
  out.push_back({"inversion round trip" + tag, round_trip && triple.satisfies_product_identity(),
                 round_trip ? "t recovered exactly" : "recovered t differs"});
  return out;
}

std::vector<CheckResult> suite_lemma3(const Options& o, const SemigroupModel& model, const WarlimontFn& F) {
  const std::size_t N = o.max_n.value_or(12);
  const auto triple = triple_of(model, F, N);
  return {identity_check("lemma3 " + model.name() + " " + F.name() + " N=" + std::to_string(N),
                         check_lemma3(triple, N))};
}

std::vector<CheckResult> suite_axiom(const Options& o, const SemigroupModel& model, const WarlimontFn& F) {
  const std::size_t N = o.max_n.value_or(20);
  const auto G = model.counts(N);
  const auto triple = triple_of(model, F, N);
  std::vector<CheckResult> out;
  for (std::size_t r = 1; r <= o.R; ++r) {
    const std::string tag = " " + model.name() + " R=" + std::to_string(r) + " N=" + std::to_string(N);
    const auto tables = check_axiom_WR(G, r, N);
    out.push_back(bound_check("W_R convolution" + tag, tables.convolution, BoundCriterion::Stable));
    out.push_back(bound_check("W_R successive" + tag, tables.successive, BoundCriterion::NonGrowing));
    out.push_back(bound_check("lemma4 " + F.name() + tag, lemma4_ratios(triple, r, N), BoundCriterion::NonGrowing));
  }
  return out;
}

std::filesystem::path golden_dir_of(const Options& o) {
  return o.golden_dir.empty() ? default_golden_dir() : std::filesystem::path(o.golden_dir);
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<CheckResult> checks;
  Json reports = Json::array();
  const bool all = o.suite == "all";
  if (o.suite == "golden" || all) {
    auto g = run_golden_suite(golden_dir_of(o));
    checks.insert(checks.end(), g.begin(), g.end());
  }
  if (o.suite != "golden") {
    const auto model = build_model(o);
    const auto F = build_function(o);
    auto add = [&](std::vector<CheckResult> more) { checks.insert(checks.end(), more.begin(), more.end()); };
    if (o.suite == "expansion" || all) add(suite_expansion(o, model, F, reports));
    if (o.suite == "lemma2" || all) add(suite_lemma2(o, model, F));
    if (o.suite == "lemma3" || all) add(suite_lemma3(o, model, F));
    if (o.suite == "axiom" || all) add(suite_axiom(o, model, F));
  }
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    Json j{{"suite", o.suite}, {"pass", ok}, {"checks", std::move(arr)}};
    if (!reports.empty()) j["reports"] = std::move(reports);
    emit_json(out, j);
  } else if (o.format == "csv") {
    out << "check,pass,detail\n";
    for (const auto& c : checks) out << '"' << c.name << "\"," << (c.pass ? "1" : "0") << ",\"" << c.detail << "\"\n";
  } else {
    for (const auto& c : checks) out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    out << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? 0 : 1;
}

// golden comparisons

template <class T, class Str>
CheckResult compare_seq(const std::string& name, const std::vector<T>& expected, const std::vector<T>& actual,
                        Str str) {
  if (expected.size() != actual.size())
    return {name, false, "length " + std::to_string(actual.size()) + ", expected " + std::to_string(expected.size())};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!(expected[i] == actual[i]))
      return {name, false, "index " + std::to_string(i) + ": got " + str(actual[i]) + ", expected " + str(expected[i])};
  }
  return {name, true, std::to_string(expected.size()) + " entries exact"};
}

CheckResult compare_rats(const std::string& name, const Json& expected, const std::vector<Rat>& actual) {
  return compare_seq(name, rats_from_json(expected), actual, [](const Rat& r) { return to_string(r); });
}

CheckResult compare_polys(const std::string& name, const Json& expected, const std::vector<Poly>& actual) {
  std::vector<Poly> want;
  for (const auto& p : expected) want.push_back(poly_from_json(p));
  return compare_seq(name, want, actual, [](const Poly& p) { return poly_to_text(p); });
}

std::vector<CheckResult> check_golden_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  const Json g = Json::parse(in);
  const std::string stem = file.stem().string();
  Options o;
  o.semigroup = g.at("semigroup").get<std::string>();
  if (g.contains("q")) o.q = g["q"].get<std::string>();
  if (g.contains("k")) o.k = g["k"].get<unsigned>();
  const auto model = build_model(o);

  std::vector<CheckResult> out;
  auto label = [&](const std::string& what) { return stem + ": " + what; };
  if (g.contains("counts")) {
    out.push_back(compare_rats(label("counts"), g["counts"], model.counts(g["counts"].size() - 1)));
  }
  if (g.contains("beta")) {
    const auto N = g["beta"].size() - 1;
    out.push_back(compare_rats(label("beta"), g["beta"], derive_beta(model.counts(N))));
  }
  if (g.contains("phi")) {
    out.push_back(compare_polys(label("phi"), g["phi"], model.phi(g["phi"].size() - 1)));
  }
  if (g.contains("psi")) {
    const auto want = expansion_from_json(g["psi"]);
    const auto got = model.ratio_expansion(want.order());
    auto c = compare_polys(label("psi"), g["psi"]["terms"], {got.terms().begin(), got.terms().end()});
    if (c.pass && got.base() != want.base()) c = {c.name, false, "base " + to_string(got.base())};
    out.push_back(c);
  }
  if (g.contains("nu")) {
    std::size_t R = 0;
    for (const auto& e : g["nu"]) R = std::max(R, e.at("s").get<std::size_t>() + 1);
    const auto nu = compute_nu(model.ratio_expansion(R), R);
    std::vector<Poly> got;
    for (const auto& e : g["nu"]) got.push_back(nu.at(e["s"].get<std::size_t>(), e["t"].get<std::size_t>()));
    Json want = Json::array();
    for (const auto& e : g["nu"]) want.push_back(e["poly"]);
    out.push_back(compare_polys(label("nu"), want, got));
  }
  if (g.contains("function")) {
    Options fo;
    fo.function = g["function"].get<std::string>();
    const auto F = build_function(fo);
    const unsigned M = g.value("M", 1u);
    if (g.contains("totals")) {
      const auto N = g["totals"].size() - 1;
      out.push_back(compare_rats(label("totals"), g["totals"], fn_totals(F, model.primes(N), N)));
    }
    if (g.contains("square_totals")) {
      const auto N = g["square_totals"].size() - 1;
      out.push_back(
          compare_rats(label("square totals"), g["square_totals"], fn_totals(fn_power(F, 2), model.primes(N), N)));
    }
    if (g.contains("tau")) {
      const auto ex = expand_moment(F, model, M, g["tau"].size());
      out.push_back(compare_polys(label("tau"), g["tau"], ex.tau.tau));
    }
    if (g.contains("xi")) {
      std::size_t R = 0;
      for (const auto& [key, value] : g["xi"].items()) R = std::max<std::size_t>(R, std::stoul(key) + 1);
      const auto xi = compute_xi(F, model, M, R).xi;
      for (const auto& [key, value] : g["xi"].items()) {
        const Rat want = parse_rat(value.get<std::string>());
        const Rat& got = xi[std::stoul(key)];
        out.push_back({label("xi_" + key), got == want, "got " + to_string(got) + ", expected " + to_string(want)});
      }
    }
  }
  return out;
}

}  // namespace

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  static const std::regex pattern(R"((\d+)\.\.(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw UsageError("malformed range '" + text + "' (expected a..b)");
  const auto lo = std::stoul(m[1].str());
  const auto hi = std::stoul(m[2].str());
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

std::filesystem::path default_golden_dir() {
#ifdef WRIGHT_GOLDEN_DIR
  return WRIGHT_GOLDEN_DIR;
#else
  return "golden";
#endif
}

std::vector<CheckResult> run_golden_suite(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (files.empty()) throw std::runtime_error("no golden files in " + dir.string());
  std::sort(files.begin(), files.end());
  std::vector<CheckResult> out;
  for (const auto& f : files) {
    auto more = check_golden_file(f);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact counts, moments and asymptotic expansions on arithmetical semigroups", "wright"};
  app.require_subcommand(1);

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--semigroup", o.semigroup, "graphs | even-graphs | fq-poly | custom")
        ->check(CLI::IsMember({"graphs", "even-graphs", "fq-poly", "custom"}));
    sub->add_option("--q", o.q, "field size for fq-poly");
    sub->add_option("--k", o.k, "number of variables for fq-poly (also k for --function dk)");
    sub->add_option("--counts", o.counts, "comma-separated G_0,G_1,... for --semigroup custom");
    sub->add_option("--max-n", o.max_n, "largest degree");
    sub->add_option("--format", o.format, "json | csv | plain")->check(CLI::IsMember({"json", "csv", "plain"}));
  };
  auto add_function = [&](CLI::App* sub) {
    sub->add_option("--function", o.function, "one | d<k> | dk | dstar | bigB | custom");
    sub->add_option("--values", o.values, "comma-separated F+_1,F+_2,... for --function custom");
    sub->add_option("--M", o.M, "moment order")->check(CLI::PositiveNumber);
    sub->add_option("--R", o.R, "expansion order")->check(CLI::PositiveNumber);
    sub->add_option("--n", o.n_range, "degree range a..b");
    sub->add_flag("--parallel", o.parallel, "compute the totals of each power concurrently");
  };

  auto* counts = app.add_subcommand("counts", "G_n and prime counts G+_n");
  auto* primes = app.add_subcommand("primes", "prime counts G+_n");
  auto* beta = app.add_subcommand("beta", "coefficients of the inverse count series");
  auto* expansion = app.add_subcommand("expansion", "psi, nu, xi and tau tables");
  auto* moment = app.add_subcommand("moment", "exact normalized moments");
  auto* lambda = app.add_subcommand("lambda", "pointwise lambda_s(n)");
  auto* verify = app.add_subcommand("verify", "run check suites");
  for (auto* sub : {counts, primes, beta, expansion, moment, lambda, verify}) add_model(sub);
  for (auto* sub : {expansion, moment, lambda, verify}) add_function(sub);
  expansion->add_option("--reading", o.reading, "how totals enter xi: unnormalized | normalized")
      ->check(CLI::IsMember({"unnormalized", "normalized"}));
  verify->add_option("--suite", o.suite, "expansion | lemma2 | lemma3 | axiom | golden | all")
      ->check(CLI::IsMember({"expansion", "lemma2", "lemma3", "axiom", "golden", "all"}));
  verify->add_option("--golden-dir", o.golden_dir, "directory of golden JSON files");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (verify->parsed() && verify->count("--format") == 0) o.format = "plain";

  try {
    if (counts->parsed()) return cmd_counts(o, out, true, true);
    if (primes->parsed()) return cmd_counts(o, out, false, true);
    if (beta->parsed()) return cmd_beta(o, out);
    if (expansion->parsed()) return cmd_expansion(o, out);
    if (moment->parsed()) return cmd_moment(o, out);
    if (lambda->parsed()) return cmd_lambda(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace wright
