// gtstate: exact states, limit covariances, Plancherel samples and the
// verification suites from the command line.
//
// Exit codes: 0 success, 1 failed check or runtime failure, 2 usage error.

#include "gtstate/io.hpp"
#include "gtstate/limits.hpp"
#include "gtstate/measures.hpp"
#include "gtstate/shifted_symmetric.hpp"
#include "gtstate/verify.hpp"
#include "gtstate/weyl.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gtstate;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "3/4", "-2" or a terminating decimal such as "0.25", all read exactly.
Rational parse_exact(const std::string& text, const char* what) {
  try {
    const auto dot = text.find('.');
    if (dot == std::string::npos) return parse_rational(text);
    const std::string frac = text.substr(dot + 1);
    const std::string whole = text.substr(0, dot);
    if (frac.empty() || text.find('/') != std::string::npos) throw std::invalid_argument("bad decimal");
    const bool neg = !whole.empty() && whole[0] == '-';
    Rational w = (whole.empty() || whole == "-" || whole == "+") ? Rational(0) : parse_rational(whole);
    Rational f = parse_rational(frac) / Rational(pow(BigInt(10), static_cast<unsigned>(frac.size())));
    if (frac[0] == '-' || frac[0] == '+') throw std::invalid_argument("bad decimal");
    return neg ? Rational(w - f) : Rational(w + f);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  }
}

// Exact p/q only; decimals are rejected where exactness is part of the contract.
Rational parse_strict(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("invalid ") + what + " (expected p/q): '" + text + "'");
  }
}

std::vector<int> parse_index_set(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 1) throw std::invalid_argument("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("invalid index set: '" + text + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Partition parse_rho(const std::string& text) {
  try {
    const Partition p = parse_partition(text);
    if (p.empty()) throw std::invalid_argument("");
    return p;
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid partition: '" + text + "'");
  }
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content << std::flush;
  } else {
    write_atomic(out_path, content);
  }
}

// ---- state --------------------------------------------------------------

struct StateArgs {
  std::vector<std::string> rhos;
  std::vector<std::string> index_sets;
  std::string ambient;
  std::string gamma = "1";
  bool centered = false;
  bool naive = false;
  std::uint64_t budget = EngineOptions{}.term_budget;
};

int cmd_state(const StateArgs& a, unsigned threads, const std::string& out) {
  if (a.rhos.empty()) throw UsageError("state: at least one --rho is required");
  if (a.rhos.size() != a.index_sets.size()) throw UsageError("state: every --rho needs a matching --I");
  const Rational gamma = parse_strict(a.gamma, "gamma");
  if (gamma <= 0) throw UsageError("state: gamma must be positive");

  std::vector<PsharpFactor> factors;
  std::vector<int> amb;
  for (size_t i = 0; i < a.rhos.size(); ++i) {
    PsharpFactor f{parse_rho(a.rhos[i]), parse_index_set(a.index_sets[i]), a.centered};
    std::vector<int> merged;
    std::set_union(amb.begin(), amb.end(), f.index_set.begin(), f.index_set.end(), std::back_inserter(merged));
    amb = std::move(merged);
    factors.push_back(std::move(f));
  }
  if (!a.ambient.empty()) {
    const auto j = parse_index_set(a.ambient);
    if (!std::includes(j.begin(), j.end(), amb.begin(), amb.end())) throw UsageError("state: --J must contain every --I");
    amb = j;
  }

  EngineOptions eo;
  eo.term_budget = a.budget;
  eo.threads = threads;
  const StatePolynomial p = a.naive ? state_of_psharp_product_naive(factors, amb, gamma, eo)
                                    : state_of_psharp_product(factors, amb, gamma, eo);
  json j = to_json(p);
  j["polynomial"] = p.to_string();
  j["ambient"] = amb;
  emit(out, j.dump(2) + "\n");
  return 0;
}

// ---- limit --------------------------------------------------------------

struct LimitArgs {
  std::string method = "all";
  std::vector<int> ks{1};
  std::vector<int> ls{1};
  std::string eta1 = "1", eta2 = "1", c = "1", gamma = "1";
  int nodes = 2048;
};

int cmd_limit(const LimitArgs& a, unsigned threads, const std::string& out) {
  static const std::vector<std::string> methods{"closed", "genfun", "series", "contour-log", "contour-rational"};
  std::vector<std::string> chosen;
  if (a.method == "all") {
    chosen = methods;
  } else if (std::find(methods.begin(), methods.end(), a.method) != methods.end()) {
    chosen = {a.method};
  } else {
    throw UsageError("limit: unknown method '" + a.method + "'");
  }
  const Rational e1 = parse_exact(a.eta1, "eta1"), e2 = parse_exact(a.eta2, "eta2");
  const Rational c = parse_exact(a.c, "c"), g = parse_exact(a.gamma, "gamma");
  if (g <= 0 || e1 <= 0 || e2 <= 0 || c < 0) throw UsageError("limit: need gamma, eta > 0 and c >= 0");
  if (c > e1 || c > e2) throw UsageError("limit: need c <= min(eta1, eta2)");
  for (int v : a.ks) {
    if (v < 1) throw UsageError("limit: k must be positive");
  }
  for (int v : a.ls) {
    if (v < 1) throw UsageError("limit: l must be positive");
  }
  ContourSpec spec;
  spec.nodes = a.nodes;
  spec.threads = threads;
  if (spec.nodes < 16) throw UsageError("limit: need at least 16 nodes");

  std::ostringstream os;
  CsvWriter csv(os, "gtstate-limit", 1, {"k", "l", "eta1", "eta2", "c", "gamma", "method", "value", "flag"});
  const double de1 = to_double(e1), de2 = to_double(e2), dc = to_double(c), dg = to_double(g);
  for (int k : a.ks) {
    for (int l : a.ls) {
      const Rational series = cov_p_series(k, l, e1, e2, c, g);
      for (const auto& m : chosen) {
        std::string value, flag;
        if (m == "closed") {
          value = to_string(cov_sharp_limit(k, l, c, g));
          flag = "ORACLE";
        } else if (m == "genfun") {
          const Rational v = cov_sharp_genfun_coeff(k, l, c, g);
          value = to_string(v);
          flag = v == cov_sharp_limit(k, l, c, g) ? "AGREES" : "DISAGREES";
        } else if (m == "series") {
          value = to_string(series);
          flag = "ORACLE";
        } else if (m == "contour-log") {
          const ContourResult r = cov_p_contour_log(k, l, de1, de2, dc, dg, spec);
          value = format_double(r.value);
          flag = !r.converged ? "NONCONVERGED" : std::abs(r.value - to_double(series)) <= 1e-6 ? "AGREES" : "DISAGREES";
        } else {
          const RationalContourResult r = cov_p_contour_rational(k, l, de1, de2, dc, dg, spec);
          value = format_double(r.value);
          flag = r.flag();
        }
        csv.row({std::to_string(k), std::to_string(l), to_string(e1), to_string(e2), to_string(c), to_string(g), m, value, flag});
      }
    }
  }
  emit(out, os.str());
  return 0;
}

// ---- sample -------------------------------------------------------------

struct SampleArgs {
  std::string config;
  std::string gamma = "1";
  int L = 10;
  long samples = 100;
  std::uint64_t seed = 1;
  std::vector<double> grid_x;
  std::vector<double> grid_y;
};

int cmd_sample(SampleArgs a, unsigned threads, const std::string& out) {
  if (!a.config.empty()) {
    std::ifstream f(a.config);
    if (!f) throw UsageError("sample: cannot read config '" + a.config + "'");
    json j;
    try {
      f >> j;
    } catch (const json::exception& e) {
      throw UsageError(std::string("sample: bad config: ") + e.what());
    }
    try {
      if (j.contains("gamma")) a.gamma = j["gamma"].is_string() ? j["gamma"].get<std::string>() : j["gamma"].dump();
      if (j.contains("L")) a.L = j["L"].get<int>();
      if (j.contains("samples")) a.samples = j["samples"].get<long>();
      if (j.contains("seed")) a.seed = j["seed"].get<std::uint64_t>();
      if (j.contains("grid_x")) a.grid_x = j["grid_x"].get<std::vector<double>>();
      if (j.contains("grid_y")) a.grid_y = j["grid_y"].get<std::vector<double>>();
    } catch (const json::exception& e) {
      throw UsageError(std::string("sample: bad config value: ") + e.what());
    }
  }
  if (a.samples < 1) throw UsageError("sample: --samples must be at least 1");
  if (a.L < 1) throw UsageError("sample: --L must be a positive integer");
  const Rational gamma = parse_exact(a.gamma, "gamma");
  if (gamma <= 0) throw UsageError("sample: gamma must be positive");
  if (a.grid_x.size() != a.grid_y.size()) throw UsageError("sample: --x and --y must have equal length");

  const PlancherelParams p{gamma, a.L};
  const auto recs = sample_plancherel_many(p, a.seed, static_cast<size_t>(a.samples), threads);
  std::vector<std::string> cols{"seed", "index", "n_letters", "shape", "p1", "p2", "p3", "p4"};
  for (size_t g = 0; g < a.grid_x.size(); ++g) {
    cols.push_back("H(" + format_double(a.grid_x[g]) + ";" + format_double(a.grid_y[g]) + ")");
  }
  std::ostringstream os;
  CsvWriter csv(os, "gtstate-sample", 1, cols);
  for (const auto& s : recs) {
    const Signature sig = Signature::from_partition(s.shape, std::max(a.L, s.shape.length()));
    std::vector<std::string> row{std::to_string(s.master_seed), std::to_string(s.index), std::to_string(s.n_letters),
                                 format_partition(s.shape)};
    for (int k = 1; k <= 4; ++k) row.push_back(to_string(p_shifted_sum(k, sig)));
    for (size_t g = 0; g < a.grid_x.size(); ++g) row.push_back(format_double(height_at(s, a.grid_x[g], a.grid_y[g], a.L)));
    csv.row(row);
  }
  emit(out, os.str());
  return 0;
}

// ---- verify -------------------------------------------------------------

int cmd_verify(const std::string& suite, unsigned threads, std::uint64_t seed, const std::string& out) {
  if (!is_suite(suite)) throw UsageError("verify: unknown suite '" + suite + "'");
  VerifyOptions vo;
  vo.threads = threads;
  vo.seed = seed;
  std::ostringstream os;
  std::vector<CheckResult> results;
  for (const auto& name : suite == "all" ? std::vector<std::string>(suite_names().begin(), suite_names().end() - 1)
                                         : std::vector<std::string>{suite}) {
    for (auto& r : run_suite(name, vo)) {
      const std::string line = format_result(r);
      if (out.empty()) std::cout << line << std::endl;
      os << line << "\n";
      results.push_back(std::move(r));
    }
  }
  const bool ok = gated_pass(results);
  const std::string summary = std::string(ok ? "verify: all gating checks passed" : "verify: gating checks FAILED") + "\n";
  if (out.empty()) {
    std::cout << summary;
  } else {
    os << summary;
    write_atomic(out, os.str());
  }
  return ok ? 0 : 1;
}

// ---- gff ----------------------------------------------------------------

struct GffArgs {
  std::string kind = "green";
  double alpha = 1.0;
  std::vector<double> z_re{0.0}, z_im{1.0}, w_re{0.0}, w_im{2.0};
};

int cmd_gff(const GffArgs& a, const std::string& out) {
  if (a.kind != "green" && a.kind != "kernel") throw UsageError("gff: --kind must be green or kernel");
  for (double v : a.z_im) {
    if (!(v > 0)) throw UsageError("gff: points must have positive imaginary part");
  }
  for (double v : a.w_im) {
    if (!(v > 0)) throw UsageError("gff: points must have positive imaginary part");
  }
  std::ostringstream os;
  CsvWriter csv(os, "gtstate-gff", 1, {"kind", "alpha", "z_re", "z_im", "w_re", "w_im", "value"});
  for (double zr : a.z_re) {
    for (double zi : a.z_im) {
      for (double wr : a.w_re) {
        for (double wi : a.w_im) {
          const std::complex<double> z(zr, zi), w(wr, wi);
          std::string value;
          if (a.kind == "kernel") {
            value = format_double(gff_kernel(a.alpha, z, w));
          } else {
            value = z == w ? "inf" : format_double(gff_green(z, w));
          }
          csv.row({a.kind, a.kind == "kernel" ? format_double(a.alpha) : "", format_double(zr), format_double(zi),
                   format_double(wr), format_double(wi), value});
        }
      }
    }
  }
  emit(out, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact states of central elements under the one-sided Plancherel character"};
  app.require_subcommand(1);
  unsigned threads = 1;
  std::string out;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--out", out, "Write output to this file (atomically) instead of stdout");

  StateArgs sa;
  auto* st = app.add_subcommand("state", "Exact state of a product of p# elements");
  st->add_option("--rho", sa.rhos, "Cycle type, e.g. 2,1 (repeat per factor)")->allow_extra_args(false);
  st->add_option("--I", sa.index_sets, "Index set, e.g. 1,2,3 (repeat per factor)")->allow_extra_args(false);
  st->add_option("--J", sa.ambient, "Ambient index set (default: union of the --I sets)");
  st->add_option("--gamma", sa.gamma, "gamma as p/q");
  st->add_flag("--centered", sa.centered, "Center every factor");
  st->add_flag("--naive", sa.naive, "Expand every term instead of counting equality patterns");
  st->add_option("--budget", sa.budget, "Maximum expanded terms or patterns");

  LimitArgs la;
  auto* li = app.add_subcommand("limit", "Limit covariances by closed form, series or quadrature");
  li->add_option("--method", la.method, "closed|genfun|series|contour-log|contour-rational|all");
  li->add_option("--k", la.ks, "k values")->delimiter(',');
  li->add_option("--l", la.ls, "l values")->delimiter(',');
  li->add_option("--eta1", la.eta1);
  li->add_option("--eta2", la.eta2);
  li->add_option("--c", la.c);
  li->add_option("--gamma", la.gamma);
  li->add_option("--nodes", la.nodes, "Quadrature nodes per contour");

  SampleArgs sm;
  auto* sp = app.add_subcommand("sample", "Poissonized Plancherel samples as CSV");
  sp->add_option("--config", sm.config, "JSON file with gamma, L, samples, seed, grid_x, grid_y");
  sp->add_option("--gamma", sm.gamma);
  sp->add_option("--L", sm.L);
  sp->add_option("--samples", sm.samples);
  sp->add_option("--seed", sm.seed);
  sp->add_option("--x", sm.grid_x, "Height grid x coordinates")->delimiter(',');
  sp->add_option("--y", sm.grid_y, "Height grid y coordinates")->delimiter(',');

  std::string suite;
  std::uint64_t verify_seed = VerifyOptions{}.seed;
  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  ve->add_option("suite", suite, "Suite name or 'all'")->required();
  ve->add_option("--seed", verify_seed);

  GffArgs ga;
  auto* gf = app.add_subcommand("gff", "GFF kernel or Green function on a point grid");
  gf->add_option("--kind", ga.kind, "green|kernel");
  gf->add_option("--alpha", ga.alpha);
  gf->add_option("--z-re", ga.z_re)->delimiter(',');
  gf->add_option("--z-im", ga.z_im)->delimiter(',');
  gf->add_option("--w-re", ga.w_re)->delimiter(',');
  gf->add_option("--w-im", ga.w_im)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*st) return cmd_state(sa, threads, out);
    if (*li) return cmd_limit(la, threads, out);
    if (*sp) return cmd_sample(sm, threads, out);
    if (*ve) return cmd_verify(suite, threads, verify_seed, out);
    if (*gf) return cmd_gff(ga, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
