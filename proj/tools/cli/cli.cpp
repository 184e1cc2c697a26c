#include "cli.hpp"

#include "CLI11.hpp"
#include "pplab/bundle_split.hpp"
#include "pplab/jetmap.hpp"
#include "pplab/symspace.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace pplab::cli {

using nlohmann::json;

std::string_view command_name(Command c)
{
  switch (c) {
  case Command::verify_theorem: return "verify-theorem";
  case Command::verify_corollary: return "verify-corollary";
  case Command::dims: return "dims";
  case Command::splitting_type: return "splitting-type";
  case Command::sweep: return "sweep";
  case Command::export_transition: return "export-transition";
  }
  return "?";
}

namespace {

unsigned parse_nat(std::string_view s)
{
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UsageError("expected a non-negative integer, got '" + std::string(s) + "'");
  unsigned long v = std::stoul(std::string(s));
  if (v > 64)
    throw UsageError("parameter " + std::string(s) + " is too large (limit 64)");
  return static_cast<unsigned>(v);
}

} // namespace

std::vector<unsigned> parse_range(std::string_view spec)
{
  std::vector<unsigned> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    if (comma == std::string_view::npos)
      comma = spec.size();
    std::string_view item = spec.substr(start, comma - start);
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      const unsigned lo = parse_nat(item.substr(0, dots));
      const unsigned hi = parse_nat(item.substr(dots + 2));
      for (unsigned v = lo; v <= hi; ++v)
        out.push_back(v);
    } else {
      out.push_back(parse_nat(item));
    }
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Triple> expand_triples(const RunConfig& config)
{
  if (config.N_values.empty() || config.n_values.empty() ||
      (config.k_values && config.k_values->empty()))
    throw UsageError("empty parameter range");

  std::vector<Triple> out;
  for (unsigned N : config.N_values) {
    if (N < 1)
      throw UsageError("N >= 1 violated (N = " + std::to_string(N) + ")");
    for (unsigned n : config.n_values) {
      std::vector<unsigned> ks;
      if (config.k_values) {
        ks = *config.k_values;
      } else if (config.command == Command::sweep) {
        for (unsigned k = 1; k < n; ++k)
          ks.push_back(k);
      } else {
        throw UsageError("--k is required for " + std::string(command_name(config.command)));
      }
      for (unsigned k : ks) {
        switch (config.command) {
        case Command::sweep:
          if (k >= 1 && k < n)
            out.push_back({N, n, k});
          break;
        case Command::splitting_type:
        case Command::export_transition:
          if (n < 1)
            throw UsageError("n >= 1 violated (n = " + std::to_string(n) + ")");
          out.push_back({N, n, k});
          break;
        default:
          if (k < 1)
            throw UsageError("1 <= k violated (k = " + std::to_string(k) + ")");
          if (k >= n)
            throw UsageError("k < n violated (k = " + std::to_string(k) + ", n = " +
                             std::to_string(n) + ")");
          out.push_back({N, n, k});
        }
      }
    }
  }
  if (out.empty())
    throw UsageError("no (N, n, k) with 1 <= k < n in the requested ranges");
  if (config.command == Command::export_transition && out.size() != 1)
    throw UsageError("export-transition takes a single (N, n, k)");
  return out;
}

namespace {

json matrix_json(const RationalMatrix& m)
{
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& q : m.row(i))
      row.push_back(to_fraction_string(q));
    rows.push_back(std::move(row));
  }
  return rows;
}

json theorem_json(const TheoremReport& r)
{
  return {{"kernel_matches", r.kernel_matches},
          {"taylor_kernel_matches", r.taylor_kernel_matches},
          {"rank_correct", r.rank_correct},
          {"equivariance_trials", r.equivariance_trials},
          {"equivariance_failures", r.equivariance_failures},
          {"quotient_iso_equivariant", r.quotient_iso_equivariant},
          {"passed", r.passed()}};
}

json splitting_json(const TransitionData& T, unsigned N, unsigned n, unsigned k, bool verbose)
{
  const SplittingType st = splitting_type(T);
  json j;
  j["splitting"] = st.degrees();
  j["determinant_exponent"] = st.degree_sum();
  if (k < n) {
    const SplittingType want = expected_splitting(N, n, k);
    j["expected"] = want.degrees();
    j["passed"] = st == want;
  } else {
    j["passed"] = true;
  }
  if (verbose)
    j["transition"] = json::parse(transition_to_json(T));
  return j;
}

json run_triple(const RunConfig& cfg, const Triple& t)
{
  const auto [N, n, k] = t;
  json j{{"N", N}, {"n", n}, {"k", k}};
  bool passed = true;

  auto add_theorem = [&] {
    const TheoremReport r = verify_theorem(N, n, k, cfg.trials, cfg.seed, cfg.height);
    j["theorem"] = theorem_json(r);
    if (cfg.verbose)
      j["theorem"]["phi_matrix"] = matrix_json(phi_matrix(N, n, k));
    passed = passed && r.passed();
  };
  auto add_corollary = [&] {
    json c = splitting_json(jet_transition_matrix(N, n, k), N, n, k, cfg.verbose);
    passed = passed && c["passed"].get<bool>();
    j["corollary"] = std::move(c);
  };

  switch (cfg.command) {
  case Command::verify_theorem:
    add_theorem();
    break;
  case Command::verify_corollary:
    add_corollary();
    break;
  case Command::dims: {
    const bool ok = lemma1_identity(N, n, k);
    j["dims"] = {{"dim_sym", dim_sym(N, n)},
                 {"dim_m_power", dim_m_power(N, n, k)},
                 {"fiber_dim", binomial(k + N, N)},
                 {"lemma1", ok}};
    passed = ok;
    break;
  }
  case Command::splitting_type: {
    json s = splitting_json(jet_transition_matrix(N, n, k), N, n, k, cfg.verbose);
    passed = s["passed"].get<bool>();
    j["splitting_type"] = std::move(s);
    break;
  }
  case Command::sweep: {
    add_theorem();
    const bool exact = exact_sequence_check(N, n, k);
    const bool lemma = lemma1_identity(N, n, k);
    j["exact_sequence"] = exact;
    j["lemma1"] = lemma;
    passed = passed && exact && lemma;
    add_corollary();
    break;
  }
  case Command::export_transition:
    break;
  }
  j["passed"] = passed;
  return j;
}

json config_json(const RunConfig& c)
{
  json j;
  j["command"] = command_name(c.command);
  j["N"] = c.N_values;
  j["n"] = c.n_values;
  j["k"] = c.k_values ? json(*c.k_values) : json(nullptr);
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["height"] = c.height;
  j["verbose"] = c.verbose;
  return j;
}

} // namespace

json build_report(const RunConfig& config)
{
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Triple> triples = expand_triples(config);

  // Triples are independent; results are stored by index, so the report is
  // identical whatever the scheduling.
  std::vector<json> results(triples.size());
  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(triples.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < triples.size();)
      results[i] = run_triple(config, triples[i]);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool)
      f.get();
  }

  bool overall = true;
  for (const auto& r : results)
    overall = overall && r["passed"].get<bool>();

  json report;
  report["schema"] = kSchemaVersion;
  report["tool_version"] = kToolVersion;
  report["config"] = config_json(config);
  report["results"] = std::move(results);
  report["overall_pass"] = overall;
  if (config.timing)
    report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return report;
}

std::string render_text(const json& report)
{
  auto mark = [](bool b) { return b ? "✓" : "✗"; };
  std::ostringstream os;
  os << "pplab " << report["tool_version"].get<std::string>() << "  "
     << report["config"]["command"].get<std::string>() << "  seed "
     << report["config"]["seed"].get<std::uint64_t>() << "\n";
  for (const auto& r : report["results"]) {
    os << "(N, n, k) = (" << r["N"] << ", " << r["n"] << ", " << r["k"] << ") ->";
    if (r.contains("theorem")) {
      const auto& t = r["theorem"];
      const auto trials = t["equivariance_trials"].get<std::size_t>();
      const auto fails = t["equivariance_failures"].get<std::size_t>();
      os << " kernel " << mark(t["kernel_matches"].get<bool>() && t["taylor_kernel_matches"].get<bool>())
         << ", rank " << mark(t["rank_correct"].get<bool>()) << ", equivariance "
         << (trials - fails) << "/" << trials << ", quotient "
         << mark(t["quotient_iso_equivariant"].get<bool>());
    }
    if (r.contains("exact_sequence"))
      os << ", exact " << mark(r["exact_sequence"].get<bool>());
    if (r.contains("lemma1"))
      os << ", lemma1 " << mark(r["lemma1"].get<bool>());
    if (r.contains("dims")) {
      const auto& d = r["dims"];
      os << " dim S^n " << d["dim_sym"] << ", dim m-power " << d["dim_m_power"] << ", fiber "
         << d["fiber_dim"] << ", lemma1 " << mark(d["lemma1"].get<bool>());
    }
    for (const char* key : {"corollary", "splitting_type"}) {
      if (!r.contains(key))
        continue;
      const auto& c = r[key];
      os << (r.contains("theorem") ? ", " : " ") << "splitting "
         << SplittingType(c["splitting"].get<std::vector<int>>()).to_string() << " "
         << mark(c["passed"].get<bool>());
    }
    os << "  " << (r["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
  }
  os << (report["overall_pass"].get<bool>() ? "overall: PASS" : "overall: FAIL");
  if (report.contains("elapsed_ms"))
    os << "  (" << report["elapsed_ms"] << " ms)";
  os << "\n";
  return os.str();
}

namespace {

int emit(const RunConfig& config, const std::string& text, std::ostream& out, std::ostream& err)
{
  if (!config.out_path) {
    out << text;
    return 0;
  }
  std::ofstream f(*config.out_path, std::ios::binary);
  f << text;
  if (!f) {
    err << "error: cannot write " << *config.out_path << "\n";
    return static_cast<int>(ExitCode::usage);
  }
  return 0;
}

} // namespace

ExitCode exit_code_for(const json& report)
{
  return report.at("overall_pass").get<bool>() ? ExitCode::pass : ExitCode::counterexample;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
  try {
    if (config.height < 1)
      throw UsageError("height >= 1 violated");
    if (config.command == Command::export_transition) {
      const Triple t = expand_triples(config).front();
      const TransitionData T = jet_transition_matrix(t.N, t.n, t.k);
      return emit(config, transition_to_json(T, 2) + "\n", out, err);
    }
    const json report = build_report(config);
    const std::string text =
      config.output == OutputFormat::json ? report.dump(2) + "\n" : render_text(report);
    if (int rc = emit(config, text, out, err); rc != 0)
      return rc;
    return static_cast<int>(exit_code_for(report));
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact verification of the jet-bundle representation of Pr^k(O(n)) on P^N"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string N_spec, n_spec, k_spec, format = "text";
  std::int64_t seed = 0;

  auto add_common = [&](CLI::App* sub, bool ranged_defaults) {
    sub->add_option("--N", N_spec, "projective dimension N: value, a..b or list")
      ->required(!ranged_defaults);
    sub->add_option("--n", n_spec, "twist n of O(n): value, a..b or list")->required(!ranged_defaults);
    sub->add_option("--k", k_spec, "jet order k: value, a..b or list");
    sub->add_option("--trials", cfg.trials, "random parabolic elements per triple")
      ->capture_default_str();
    sub->add_option("--seed", seed, "base seed (PPLAB_SEED overrides)")->capture_default_str();
    sub->add_option("--height", cfg.height, "entry height of random elements")->capture_default_str();
    sub->add_option("--output", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
    sub->add_option("--out", cfg.out_path, "write the report to this path");
    sub->add_flag("--verbose", cfg.verbose, "include full matrices in JSON output");
    sub->add_flag("--no-timing", [&](std::int64_t) { cfg.timing = false; },
                  "omit elapsed_ms from the report");
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)")->capture_default_str();
  };

  struct Sub {
    Command cmd;
    const char* help;
  };
  const Sub subs[] = {
    {Command::verify_theorem, "kernel, rank and equivariance checks for phi"},
    {Command::verify_corollary, "splitting type of the jet transition matrix"},
    {Command::dims, "dimension identities for S^n(V*) and its m-power subspace"},
    {Command::splitting_type, "splitting type of Pr^k(O(n)) restricted to a line (any k >= 0)"},
    {Command::sweep, "all checks over a parameter grid"},
    {Command::export_transition, "transition matrix as JSON"},
  };
  std::vector<std::pair<CLI::App*, Command>> apps;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(std::string(command_name(s.cmd)), s.help);
    add_common(sub, s.cmd == Command::sweep);
    apps.emplace_back(sub, s.cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  try {
    for (const auto& [sub, cmd] : apps)
      if (sub->parsed())
        cfg.command = cmd;
    const bool sweep = cfg.command == Command::sweep;
    cfg.N_values = parse_range(N_spec.empty() && sweep ? "1..3" : N_spec);
    cfg.n_values = parse_range(n_spec.empty() && sweep ? "2..5" : n_spec);
    if (!k_spec.empty())
      cfg.k_values = parse_range(k_spec);
    cfg.output = format == "json" ? OutputFormat::json : OutputFormat::text;

    if (const char* env = std::getenv("PPLAB_SEED"); env && *env) {
      try {
        std::size_t used = 0;
        seed = std::stoll(env, &used);
        if (used != std::string_view(env).size())
          throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw UsageError(std::string("PPLAB_SEED is not an integer: ") + env);
      }
    }
    cfg.seed = static_cast<std::uint64_t>(seed);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  }
  return run(cfg, out, err);
}

} // namespace pplab::cli
