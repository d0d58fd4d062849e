#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "simplex_sections/closed_form.hpp"
#include "simplex_sections/errors.hpp"
#include "simplex_sections/extremal.hpp"
#include "simplex_sections/irregular.hpp"
#include "simplex_sections/polytope.hpp"
#include "simplex_sections/report.hpp"
#include "simplex_sections/sampling.hpp"
#include "simplex_sections/spectral.hpp"

namespace simplex_sections::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::optional<std::uint64_t> seed;
  int threads = 0;
  bool no_timestamp = false;
  std::string output;

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("SIMPLEX_SECTIONS_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError("SIMPLEX_SECTIONS_SEED is not an unsigned integer");
      }
    }
    return 42;
  }
};

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Vec parse_vector(const std::string& text) {
  Vec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not a real number: '" + item + "'");
    }
  }
  if (v.empty()) throw UsageError("empty vector");
  return v;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Direction make_direction(Vec v, bool exact) { return exact ? Direction::exact(std::move(v)) : Direction(std::move(v)); }

void check_n(int n, std::size_t len) {
  if (n >= 0 && static_cast<std::size_t>(n + 1) != len)
    throw UsageError("vector has " + std::to_string(len) + " entries, expected n+1 = " + std::to_string(n + 1));
}

std::vector<std::string> split_methods(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") return {"residue", "quadrature", "oracle", "mc"};
    if (item != "residue" && item != "quadrature" && item != "oracle" && item != "mc")
      throw UsageError("unknown method '" + item + "'");
    out.push_back(item);
  }
  return out;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json witness_json(const Counterexample& c) {
  return json{{"witness", c.witness()}, {"value", c.value()}, {"bound", c.bound()}, {"message", c.what()}};
}

// ---------------------------------------------------------------- volume

struct VolumeArgs {
  int n = -1;
  std::string a, special, file, basis_file, methods = "residue,oracle";
  std::optional<double> t;
  std::int64_t samples = 1000000;
  double eps = 1e-3, tol = 1e-10;
  bool exact = false;
};

void add_agreement(ResultRecord& rec) {
  json rows = json::array();
  for (std::size_t i = 0; i < rec.methods.size(); ++i)
    for (std::size_t j = i + 1; j < rec.methods.size(); ++j) {
      const auto& x = rec.methods[i].result;
      const auto& y = rec.methods[j].result;
      const double diff = std::abs(x.value - y.value);
      const double scale = std::max(std::abs(x.value), std::abs(y.value));
      const std::string name = std::string(to_string(x.method)) + "~" + std::string(to_string(y.method));
      bool ok;
      if (x.method == Method::MonteCarlo || y.method == Method::MonteCarlo) {
        const double se = std::hypot(x.err, y.err);
        ok = diff <= 3.0 * se;
        rows.push_back({{"pair", name}, {"abs_diff", diff}, {"standard_errors", se > 0 ? diff / se : 0.0}});
      } else {
        const double tol = (x.method == Method::Quadrature || y.method == Method::Quadrature) ? 1e-7 : 1e-9;
        ok = diff <= tol * scale;
        rows.push_back({{"pair", name}, {"rel_diff", scale > 0 ? diff / scale : 0.0}});
      }
      rec.checks[name] = ok;
    }
  rec.data["agreement"] = rows;
}

int cmd_volume(const VolumeArgs& va, const Common& common, ResultRecord& rec) {
  const auto methods = split_methods(va.methods);
  const std::uint64_t seed = common.resolved_seed();
  std::optional<Direction> dir;
  std::optional<SubspaceBasis> basis;
  int n = va.n;

  const int sources = !va.a.empty() + !va.special.empty() + !va.file.empty() + !va.basis_file.empty();
  if (sources != 1) throw UsageError("give exactly one of --a, --special, --file, --basis-file");

  auto load_basis = [&](const json& j) {
    std::vector<Vec> rows;
    if (j.contains("basis")) {
      rows = j.at("basis").get<std::vector<Vec>>();
      for (const auto& r : rows) check_n(n, r.size());
      if (rows.empty()) throw UsageError("basis is empty");
      basis = SubspaceBasis::from_normals(rows);
    } else if (j.contains("span")) {
      rows = j.at("span").get<std::vector<Vec>>();
      if (rows.empty()) throw UsageError("span is empty");
      for (const auto& r : rows) check_n(n, r.size());
      basis = SubspaceBasis::from_spanning(rows, rows.front().size());
    } else {
      throw UsageError("input file needs \"a\", \"basis\" or \"span\"");
    }
  };

  if (!va.special.empty()) {
    if (n < 2) throw UsageError("--special needs --n >= 2");
    if (va.special == "min")
      dir = special_min_direction(n);
    else if (va.special == "max")
      dir = special_max_direction(n);
    else
      throw UsageError("--special must be min or max");
  } else if (!va.a.empty()) {
    Vec v = parse_vector(va.a);
    check_n(n, v.size());
    if (va.t) {
      dir = central_to_embedded(CentralForm::make(std::move(v), *va.t));
    } else {
      dir = make_direction(std::move(v), va.exact);
    }
  } else {
    const json j = load_json(va.file.empty() ? va.basis_file : va.file);
    if (j.contains("n")) n = j.at("n").get<int>();
    if (j.contains("a")) {
      Vec v = j.at("a").get<Vec>();
      check_n(n, v.size());
      dir = make_direction(std::move(v), va.exact);
    } else {
      load_basis(j);
    }
  }
  if (basis && basis->codim() == 1) {
    dir = Direction(basis->normals().front());
    basis.reset();
  }

  rec.inputs["methods"] = methods;
  rec.inputs["seed"] = seed;
  if (dir) {
    rec.inputs["n"] = dir->n();
    rec.inputs["a"] = dir->vec();
    rec.inputs["ksum"] = dir->ksum();
  } else {
    rec.inputs["n"] = basis->n();
    rec.inputs["k"] = basis->k();
    rec.inputs["basis"] = basis->normals();
  }

  json errors = json::object();
  const SimplexSpec simplex = SimplexSpec::regular(dir ? dir->n() : basis->n());
  for (const auto& m : methods) {
    try {
      MethodEntry e;
      if (dir) {
        if (m == "residue") {
          e.result = residue_volume(*dir);
        } else if (m == "quadrature") {
          e.result = hyperplane_volume_quadrature(*dir, va.tol);
        } else if (m == "oracle") {
          const SectionPolytope p = hyperplane_section_vertices(simplex, *dir);
          e.result = polytope_volume(p);
          e.vertices = static_cast<int>(p.vertices.size());
        } else {
          e.result = mc_slab_volume(simplex, *dir, va.eps, va.samples, seed);
        }
      } else {
        if (m == "residue") {
          throw SectionError(ErrorCode::NotSupported, "the residue sum needs a hyperplane");
        } else if (m == "quadrature") {
          e.result = kdim_volume_quadrature(*basis, std::max(va.tol, 1e-8));
        } else if (m == "oracle") {
          const SectionPolytope p = kdim_section_vertices(simplex, *basis);
          e.result = polytope_volume(p);
          e.vertices = static_cast<int>(p.vertices.size());
        } else {
          e.result = mc_exponential_check(*basis, va.samples, seed);
        }
      }
      rec.methods.push_back(e);
    } catch (const SectionError& ex) {
      errors[m] = ex.what();
    }
  }
  add_agreement(rec);
  if (!errors.empty()) {
    rec.data["errors"] = errors;
    rec.failure = "a method failed";
    return kNumeric;
  }
  return rec.pass() ? kPass : kCounterexample;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  bool frustum = false, ratio = false, maxbound = false;
  int N = 5, n = 5, grid = 1000;
  std::string k_grid = "0:1:0.05", format = "csv";
  std::int64_t trials = 2000;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<Vec> rows;
};

Vec parse_range(const std::string& text) {
  double lo, hi, step;
  char c1, c2;
  std::stringstream ss(text);
  if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(step > 0.0) || hi < lo)
    throw UsageError("range must be lo:hi:step");
  Vec out;
  const long count = std::lround(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= count; ++i) out.push_back(lo + i * step);
  return out;
}

Table sweep_table(const SweepArgs& sa, std::uint64_t seed) {
  Table t;
  if (sa.frustum) {
    if (sa.N < 2) throw UsageError("--N must be at least 2");
    t.columns = {"x", "frustum", "residue"};
    t.rows.resize(static_cast<std::size_t>(sa.grid) + 1);
    for_each_index(Execution::Parallel, sa.grid + 1, [&](std::int64_t i) {
      const double x = static_cast<double>(i) / sa.grid;
      Vec a(static_cast<std::size_t>(sa.N + 2), -1.0 / sa.N);
      a[0] = x;
      a[1] = 1.0 - x;
      t.rows[static_cast<std::size_t>(i)] = {x, frustum_volume(sa.N, x), residue_volume(Direction(a)).value};
    });
  } else if (sa.ratio) {
    t.columns = {"delta", "ratio"};
    const double lo = -1.0 / (sa.n + 1) + 1e-6;
    t.rows.resize(static_cast<std::size_t>(sa.grid) + 1);
    for_each_index(Execution::Parallel, sa.grid + 1, [&](std::int64_t i) {
      const double d = lo * (1.0 - static_cast<double>(i) / sa.grid);
      t.rows[static_cast<std::size_t>(i)] = {d, central_vs_face_ratio(sa.n, d)};
    });
  } else {
    t.columns = {"K", "bound", "maximizer", "sampled_max"};
    for (double k : parse_range(sa.k_grid)) {
      if (k < 0.0 || k > 1.0 + 1e-12) throw UsageError("K must lie in [0, 1]");
      k = std::min(k, 1.0);
      const NoncentralBound b = max_noncentral_bound(sa.n, k);
      const SearchReport r = verify_noncentral_bound(sa.n, k, sa.trials, seed);
      t.rows.push_back({k, b.bound, residue_volume(b.maximizer).value, r.extreme});
    }
  }
  return t;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  int n_max = 7, n = 5;
  std::int64_t trials = 0;
};

std::int64_t trials_or(const VerifyArgs& v, std::int64_t fallback) { return v.trials > 0 ? v.trials : fallback; }

void suite_formulas(const VerifyArgs& v, std::uint64_t seed, ResultRecord& rec) {
  json out = json::object();
  for (int n = 2; n <= 10; ++n) {
    const double a = residue_volume(special_min_direction(n)).value, ea = special_min_volume(n);
    const double b = residue_volume(special_max_direction(n)).value, eb = special_max_volume(n);
    rec.checks["closed_form/n=" + std::to_string(n)] =
        std::abs(a - ea) <= 1e-12 * ea && std::abs(b - eb) <= 1e-12 * eb;
  }
  const std::int64_t trials = trials_or(v, 20);
  for (int n = 3; n <= std::max(3, v.n_max); ++n) {
    std::vector<std::array<double, 2>> diffs(static_cast<std::size_t>(trials));
    const SimplexSpec s = SimplexSpec::regular(n);
    for_each_index(Execution::Parallel, trials, [&](std::int64_t i) {
      Rng rng = make_rng(seed + static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i));
      const double k = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const Direction a = random_constrained_direction(rng, n, k);
      const double r = residue_volume(a).value;
      const double q = hyperplane_volume_quadrature(a).value;
      const double o = polytope_volume(hyperplane_section_vertices(s, a)).value;
      diffs[static_cast<std::size_t>(i)] = {std::abs(q - r) / r, std::abs(o - r) / r};
    });
    double dq = 0.0, dor = 0.0;
    for (const auto& d : diffs) {
      dq = std::max(dq, d[0]);
      dor = std::max(dor, d[1]);
    }
    const std::string key = "n=" + std::to_string(n);
    out[key] = {{"max_rel_quadrature", dq}, {"max_rel_oracle", dor}};
    rec.checks["agreement/" + key] = dq <= 1e-7 && dor <= 1e-9;
  }
  rec.data["formulas"] = out;
}

void suite_extremal(const VerifyArgs& v, std::uint64_t seed, ResultRecord& rec) {
  json out = json::object();
  const std::int64_t trials = trials_or(v, 2000);
  for (int n = 2; n <= 4; ++n) {
    const SearchReport r = verify_global_min_small(n, trials, seed);
    out["global_min/n=" + std::to_string(n)] = {{"min", r.extreme}, {"bound", r.bound}, {"argmin", r.witness}};
    rec.checks["global_min/n=" + std::to_string(n)] = r.margin >= -1e-10;
  }
  for (int n = 3; n <= 8; ++n) {
    const SearchReport r = verify_single_positive_min(n, trials, seed);
    out["single_positive/n=" + std::to_string(n)] = {{"min", r.extreme}, {"bound", r.bound}};
    rec.checks["single_positive/n=" + std::to_string(n)] = r.margin >= -1e-10;
    for (double k : {0.0, 0.5, 1.0}) {
      const SearchReport b = verify_noncentral_bound(n, k, trials, seed);
      const std::string key = "noncentral/n=" + std::to_string(n) + "/K=" + fmt17(k);
      out[key] = {{"max", b.extreme}, {"bound", b.bound}};
      rec.checks[key] = b.margin >= -1e-10;
    }
  }
  const double v0 = frustum_volume(5, 0.0), vh = frustum_volume(5, 0.5);
  out["frustum/N=5"] = {{"V0", v0}, {"Vhalf", vh}};
  rec.checks["frustum/N=5"] = v0 < vh;
  for (int N = 2; N <= 4; ++N) rec.checks["frustum_argmin/N=" + std::to_string(N)] = std::abs(minimize_frustum(N).x - 0.5) <= 1e-8;
  rec.data["extremal"] = out;
}

void suite_kdim(const VerifyArgs& v, std::uint64_t seed, ResultRecord& rec) {
  if (v.n < 2 || v.n > 8) throw UsageError("--n must lie in 2..8 for the kdim suite");
  json out = json::object();
  for (int k = std::max(2, v.n - 3); k <= v.n; ++k) {
    const KdimReport r = verify_kdim_bound(v.n, k, trials_or(v, 200), seed);
    const std::string key = "n=" + std::to_string(v.n) + "/k=" + std::to_string(k);
    out[key] = {{"max_general_ratio", r.max_general_ratio},
                {"qualified", r.qualified},
                {"max_conditional_ratio", r.max_conditional_ratio},
                {"witness_volume", r.witness_volume},
                {"conditional_bound", r.conditional_bound}};
    rec.checks["kdim/" + key] = r.witness_saturates;
  }
  rec.data["kdim"] = out;
}

void suite_irregular(ResultRecord& rec) {
  json out = json::object();
  for (int n : {5, 7}) {
    const CounterexampleDelta c = find_counterexample_delta(n);
    const double lim = extrapolated_ratio_limit(n);
    const std::string key = "n=" + std::to_string(n);
    out[key] = {{"delta", c.delta},
                {"ratio", c.ratio},
                {"central_oracle", c.central_oracle},
                {"face_oracle", c.face_oracle},
                {"ratio_limit", ratio_limit(n)},
                {"extrapolated_limit", lim}};
    rec.checks["irregular/" + key] = c.face_spread <= 1e-10 && std::abs(lim - ratio_limit(n)) <= 1e-5;
  }
  bool not_found = false;
  try {
    find_counterexample_delta(3);
  } catch (const SectionError& e) {
    not_found = e.code() == ErrorCode::NotFound;
  }
  rec.checks["irregular/n=3 has no delta"] = not_found;
  rec.data["irregular"] = out;
}

int cmd_verify(const VerifyArgs& v, const Common& common, ResultRecord& rec) {
  const std::uint64_t seed = common.resolved_seed();
  rec.inputs = {{"suite", v.suite}, {"seed", seed}, {"n_max", v.n_max}, {"n", v.n}, {"trials", v.trials}};
  const bool all = v.suite == "all";
  if (!all && v.suite != "formulas" && v.suite != "extremal" && v.suite != "kdim" && v.suite != "irregular")
    throw UsageError("unknown suite '" + v.suite + "'");
  try {
    if (all || v.suite == "formulas") suite_formulas(v, seed, rec);
    if (all || v.suite == "extremal") suite_extremal(v, seed, rec);
    if (all || v.suite == "kdim") suite_kdim(v, seed, rec);
    if (all || v.suite == "irregular") suite_irregular(rec);
  } catch (const Counterexample& c) {
    rec.failure = c.what();
    rec.data["counterexample"] = witness_json(c);
    return kCounterexample;
  }
  return rec.pass() ? kPass : kCounterexample;
}

// ---------------------------------------------------------------- convert, bounds

struct ConvertArgs {
  std::string a, b;
  double t = 0.0;
};

int cmd_convert(const ConvertArgs& c, ResultRecord& rec) {
  if (c.a.empty() == c.b.empty()) throw UsageError("give exactly one of --a (with --t) or --b");
  std::optional<CentralForm> cf;
  std::optional<Direction> b;
  if (!c.a.empty()) {
    rec.inputs = {{"a0", parse_vector(c.a)}, {"t", c.t}};
    cf = CentralForm::make(parse_vector(c.a), c.t);
    b = central_to_embedded(*cf);
  } else {
    rec.inputs = {{"b", parse_vector(c.b)}};
    b = Direction(parse_vector(c.b));
    cf = embedded_to_central(*b);
  }
  rec.data = {{"central", {{"a0", cf->a0.vec()}, {"t", cf->t}}},
              {"embedded", b->vec()},
              {"centroid_distance", centroid_distance(*b)}};
  return kPass;
}

struct BoundsArgs {
  int n = -1, k = -1;
  std::optional<double> K;
};

int cmd_bounds(const BoundsArgs& ba, ResultRecord& rec) {
  if (ba.n < 2) throw UsageError("--n must be at least 2");
  rec.inputs["n"] = ba.n;
  rec.data = json::object();
  rec.data["special_min"] = special_min_volume(ba.n);
  rec.data["special_max"] = special_max_volume(ba.n);
  if (ba.K) {
    if (*ba.K < 0.0 || *ba.K > 1.0) throw UsageError("--K must lie in [0, 1]");
    rec.inputs["K"] = *ba.K;
    const NoncentralBound b = max_noncentral_bound(ba.n, *ba.K);
    rec.data["noncentral"] = {{"bound", b.bound}, {"maximizer", b.maximizer.vec()}};
  }
  if (ba.k >= 0) {
    if (ba.k < 2 || ba.k > ba.n) throw UsageError("--k must lie in 2..n");
    rec.inputs["k"] = ba.k;
    const KdimBounds b = bl_bounds(ba.n, ba.k);
    rec.data["kdim"] = {{"general", b.general},
                        {"conditional", b.conditional},
                        {"distance_threshold", kdim_distance_threshold(ba.n, ba.k)}};
  }
  return kPass;
}

void emit(const std::string& text, const Common& common, std::ostream& out) {
  if (common.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(common.output);
  if (!f) throw UsageError("cannot write " + common.output);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Volumes of sections of the regular simplex"};
  app.require_subcommand(1);
  Common common;
  std::uint64_t seed_flag = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_flag, "Random seed (default: $SIMPLEX_SECTIONS_SEED or 42)");
    sub->add_option("--threads", common.threads, "OpenMP thread count")->check(CLI::NonNegativeNumber);
    sub->add_flag("--no-timestamp", common.no_timestamp, "Omit timestamp and timings from the output");
    sub->add_option("--output,-o", common.output, "Write the result here instead of stdout");
  };

  VolumeArgs va;
  auto* volume = app.add_subcommand("volume", "Section volume by one or more methods");
  volume->add_option("--n", va.n, "Dimension of the simplex");
  volume->add_option("--a", va.a, "Comma-separated normal vector");
  volume->add_option("--t", va.t, "Offset: treat --a as a zero-sum normal of {<a,x> = t}");
  volume->add_option("--special", va.special, "min or max")->check(CLI::IsMember({"min", "max"}));
  volume->add_option("--file", va.file, "JSON input with \"a\", \"basis\" or \"span\"");
  volume->add_option("--basis-file", va.basis_file, "JSON input with the normals of a subspace");
  volume->add_option("--methods", va.methods, "residue,quadrature,oracle,mc or all");
  volume->add_option("--samples", va.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  volume->add_option("--eps", va.eps, "Slab half-width for the hyperplane Monte Carlo");
  volume->add_option("--tol", va.tol, "Quadrature tolerance");
  volume->add_flag("--exact-norm", va.exact, "Reject vectors whose norm is not 1 within 1e-9");
  add_common(volume);

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Tabulate a curve");
  auto* f1 = sweep->add_flag("--frustum", sa.frustum, "V(x) for the two-positive family");
  auto* f2 = sweep->add_flag("--ratio", sa.ratio, "Central/face ratio on the compressed simplex");
  auto* f3 = sweep->add_flag("--maxbound", sa.maxbound, "Non-central upper bound against K");
  f1->excludes(f2)->excludes(f3);
  f2->excludes(f3);
  sweep->add_option("--N", sa.N, "Negative block size for --frustum");
  sweep->add_option("--n", sa.n, "Dimension for --ratio and --maxbound");
  sweep->add_option("--grid", sa.grid, "Grid intervals")->check(CLI::PositiveNumber);
  sweep->add_option("--K-grid", sa.k_grid, "lo:hi:step for --maxbound");
  sweep->add_option("--trials", sa.trials, "Random directions per K for --maxbound")->check(CLI::PositiveNumber);
  sweep->add_option("--format", sa.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_common(sweep);

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", vargs.suite, "formulas, extremal, kdim, irregular or all")->required();
  verify->add_option("--n-max", vargs.n_max, "Largest n for the formulas suite");
  verify->add_option("--n", vargs.n, "Dimension for the kdim suite");
  verify->add_option("--trials", vargs.trials, "Trials per check (0: suite default)");
  add_common(verify);

  ConvertArgs ca;
  auto* convert = app.add_subcommand("convert", "Central <-> embedded hyperplane representation");
  convert->add_option("--a", ca.a, "Zero-sum normal of the central form");
  convert->add_option("--t", ca.t, "Offset of the central form");
  convert->add_option("--b", ca.b, "Normal of the embedded form");
  add_common(convert);

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds");
  bounds->add_option("--n", ba.n, "Dimension")->required();
  bounds->add_option("--K", ba.K, "Coordinate sum for the non-central bound");
  bounds->add_option("--k", ba.k, "Subspace dimension for the k-dimensional bounds");
  add_common(bounds);

  std::vector<std::string> argv_store{"simplex-sections"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  for (auto* sub : app.get_subcommands())
    if (sub->count("--seed") > 0) common.seed = seed_flag;
  if (common.threads > 0) set_threads(common.threads);

  ResultRecord rec;
  const auto start = std::chrono::steady_clock::now();
  int code = kPass;
  try {
    if (volume->parsed()) {
      rec.command = "volume";
      code = cmd_volume(va, common, rec);
    } else if (sweep->parsed()) {
      if (!sa.frustum && !sa.ratio && !sa.maxbound) throw UsageError("choose --frustum, --ratio or --maxbound");
      const Table t = sweep_table(sa, common.resolved_seed());
      if (sa.format == "csv") {
        std::ostringstream csv;
        for (std::size_t i = 0; i < t.columns.size(); ++i) csv << (i ? "," : "") << t.columns[i];
        csv << "\n";
        for (const auto& r : t.rows) {
          for (std::size_t i = 0; i < r.size(); ++i) csv << (i ? "," : "") << fmt17(r[i]);
          csv << "\n";
        }
        emit(csv.str(), common, out);
        return kPass;
      }
      rec.command = "sweep";
      rec.inputs = {{"kind", sa.frustum ? "frustum" : sa.ratio ? "ratio" : "maxbound"},
                    {"N", sa.N}, {"n", sa.n}, {"grid", sa.grid}};
      rec.data = {{"columns", t.columns}, {"rows", t.rows}};
    } else if (verify->parsed()) {
      rec.command = "verify";
      code = cmd_verify(vargs, common, rec);
    } else if (convert->parsed()) {
      rec.command = "convert";
      code = cmd_convert(ca, rec);
    } else {
      rec.command = "bounds";
      code = cmd_bounds(ba, rec);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Counterexample& e) {
    rec.failure = e.what();
    rec.data["counterexample"] = witness_json(e);
    code = kCounterexample;
  } catch (const SectionError& e) {
    err << "numeric error: " << e.what() << "\n";
    rec.failure = e.what();
    code = kNumeric;
  } catch (const json::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  if (!common.no_timestamp) {
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rec.timestamp = utc_now();
  }
  try {
    emit(rec.to_json().dump(2) + "\n", common, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

}  // namespace simplex_sections::cli
