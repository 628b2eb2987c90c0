#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "repfn/constructions.hpp"
#include "repfn/representation.hpp"
#include "repfn/search.hpp"
#include "repfn/verify.hpp"

namespace repfn::cli {
namespace {

// Signals a failed theorem check after the report has been written.
struct CheckFailed {};

struct RunConfig {
  std::string set_text;
  std::optional<std::uint64_t> n_param;
  std::optional<std::uint64_t> k_param;
  std::optional<std::uint64_t> n_max;
  std::string method = "bitpar";
  std::string out_path;
  double theta = 0.01;
  double c = 1.0;
  unsigned workers = 0;
  std::uint64_t seed = 0;
  std::string construction;
  std::string theorem;
  std::string sequence = "pow";
  std::uint64_t step = 1;
  std::uint64_t count = 8;
  std::optional<std::uint64_t> k_max;
  unsigned l_max = 10;
  unsigned m_max = 10;
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw std::invalid_argument("invalid " + what + ": '" + text + "'");
  }
  return value;
}

Method parse_method(const std::string& name) {
  if (name == "naive") {
    return Method::NaiveOracle;
  }
  if (name == "bitpar") {
    return Method::BitParallel;
  }
  if (name == "conv") {
    return Method::Convolution;
  }
  throw std::invalid_argument("unknown method '" + name + "'");
}

unsigned effective_workers(unsigned requested) {
  if (requested != 0) {
    return requested;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::uint64_t memory_cap_bytes() {
  const char* env = std::getenv("REPFN_MAX_MEMORY_MB");
  if (env == nullptr || *env == '\0') {
    return ScanOptions{}.max_memory_bytes;
  }
  return parse_u64(env, "REPFN_MAX_MEMORY_MB") << 20;
}

// Writes to --out when given, otherwise to the default stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw std::invalid_argument("cannot open output file '" + path + "'");
      }
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

SarkozySet construction_set(const std::string& name, std::uint64_t param) {
  if (name == "thm1") {
    return thm1_set(param);
  }
  if (name == "thm2") {
    return thm2_set(param);
  }
  if (name == "thm3") {
    return thm3_set(param);
  }
  if (name == "cor3") {
    return cor3_set(param);
  }
  throw std::invalid_argument("unknown construction '" + name + "'");
}

// One of --set or the --n/--k parameter of a named construction.
SarkozySet input_set(const RunConfig& cfg, const std::string& construction) {
  const bool has_param = cfg.n_param.has_value() || cfg.k_param.has_value();
  if (!cfg.set_text.empty() && has_param && !construction.empty()) {
    throw std::invalid_argument("give either --set or a construction parameter, not both");
  }
  if (!cfg.set_text.empty()) {
    return resolve_set(cfg.set_text, cfg.seed);
  }
  if (construction.empty() || !has_param) {
    throw std::invalid_argument("an input set is required (--set)");
  }
  const bool wants_k = construction == "thm2" || construction == "cor3";
  const auto param = wants_k ? cfg.k_param : cfg.n_param;
  if (!param) {
    throw std::invalid_argument(construction + " requires " + (wants_k ? "--k" : "--n"));
  }
  return construction_set(construction, *param);
}

void emit_reports(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                  const std::vector<BoundReport>& reports) {
  Sink sink(cfg.out_path, out);
  write_report_csv_header(sink.get());
  bool all_passed = true;
  for (const BoundReport& r : reports) {
    write_report_csv_row(sink.get(), r);
    all_passed = all_passed && r.passed;
  }
  for (const BoundReport& r : reports) {
    err << to_string(r.theorem) << ": " << (r.passed ? "PASS" : "FAIL");
    if (!r.passed && r.worst_n) {
      err << " (witness n=" << *r.worst_n << ")";
    }
    err << '\n';
  }
  if (!all_passed) {
    throw CheckFailed{};
  }
}

void cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const bool wants_k = cfg.construction == "thm2" || cfg.construction == "cor3";
  const auto param = wants_k ? cfg.k_param : cfg.n_param;
  if (!param) {
    throw std::invalid_argument("construct " + cfg.construction + " requires " +
                                (wants_k ? "--k" : "--n"));
  }
  out << format_spec(construction_set(cfg.construction, *param).spec()) << '\n';
}

void cmd_repfn(const RunConfig& cfg, std::ostream& out) {
  const SarkozySet s = input_set(cfg, "");
  const std::uint64_t n_max = cfg.n_max.value_or(1000);
  const Method method = parse_method(cfg.method);
  const unsigned workers = effective_workers(cfg.workers);
  const BitVector a = s.enumerate(n_max);
  const BitVector comp = s.complement().enumerate(n_max);
  const auto ra = r2_profile(a, n_max, method, workers);
  const auto rc = r2_profile(comp, n_max, method, workers);
  const auto cross = cross_profile(a, comp, n_max, method, workers);
  Sink sink(cfg.out_path, out);
  write_repfn_csv(sink.get(), ra, rc, cross);
}

void cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string& t = cfg.theorem;
  const std::uint64_t n_max = cfg.n_max.value_or(10000);
  const unsigned workers = effective_workers(cfg.workers);
  std::vector<BoundReport> reports;
  if (t == "dombi") {
    reports.push_back(check_dombi(n_max, workers));
  } else if (t == "thm-a") {
    reports.push_back(check_theorem_a(input_set(cfg, ""), n_max, workers));
  } else if (t == "lemma1") {
    const SarkozySet s = input_set(cfg, "");
    reports.push_back(
        check_lemma1(s, cfg.k_max.value_or(4 * s.threshold()), cfg.l_max));
  } else if (t == "thm1") {
    reports.push_back(check_thm1_upper(input_set(cfg, "thm1"), cfg.m_max));
  } else if (t == "cor3") {
    if (!cfg.k_param) {
      throw std::invalid_argument("verify cor3 requires --k");
    }
    reports.push_back(check_cor3_upper(*cfg.k_param, cfg.m_max));
  } else if (t == "thm2") {
    if (!cfg.k_param) {
      throw std::invalid_argument("verify thm2 requires --k");
    }
    reports.push_back(check_thm2_zero(*cfg.k_param, n_max));
  } else if (t == "thm3") {
    if (!cfg.n_param) {
      throw std::invalid_argument("verify thm3 requires --n");
    }
    reports.push_back(check_thm3_zero(*cfg.n_param, n_max));
  } else if (t == "lower-bounds") {
    reports = check_lower_bounds(input_set(cfg, ""), n_max, workers);
    if (reports.empty()) {
      err << "lower-bounds: no bound applies to this set\n";
    }
  } else {
    throw std::invalid_argument("unknown theorem '" + t + "'");
  }
  emit_reports(cfg, out, err, reports);
}

void cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.n_param) {
    throw std::invalid_argument("scan requires --n");
  }
  const std::uint64_t n = *cfg.n_param;
  const std::uint64_t n_max = cfg.n_max.value_or(default_scan_horizon(n));
  ScanOptions options{effective_workers(cfg.workers), memory_cap_bytes()};
  Sink sink(cfg.out_path, out);
  write_scan_csv_header(sink.get());
  const ScanSummary summary = scan_stream(
      n, n_max, options,
      [&](const SearchRecord& r) { write_scan_csv_row(sink.get(), r); });
  err << "scan N=" << n << " n_max=" << n_max << ": " << summary.records
      << " prefixes; max last zero (neither) = ";
  if (summary.max_neither_last_zero) {
    err << *summary.max_neither_last_zero;
  } else {
    err << "none";
  }
  err << "; 14(N-1) = " << summary.f_threshold << "; 3N-1 = " << 3 * n - 1
      << '\n';
}

void cmd_density(const RunConfig& cfg, std::ostream& out) {
  const SarkozySet s = input_set(cfg, "");
  const std::uint64_t n_max = cfg.n_max.value_or(100000);
  const DensityReport d =
      empirical_density(s, n_max, cfg.theta, cfg.c, effective_workers(cfg.workers));
  std::ostringstream value;
  value << std::setprecision(17) << d.density;
  out << "n_max,theta,c,qualifying,hits,density\n"
      << d.n_max << ',' << cfg.theta << ',' << cfg.c << ',' << d.qualifying
      << ',' << d.hits << ',' << value.str() << '\n';
  if (!cfg.out_path.empty()) {
    Sink sink(cfg.out_path, out);
    sink.get() << "bucket,ratio_lo_num,ratio_den,count\n";
    for (std::size_t j = 0; j < d.histogram.size(); ++j) {
      sink.get() << j << ',' << j << ",64," << d.histogram[j] << '\n';
    }
  }
}

void cmd_ratios(const RunConfig& cfg, std::ostream& out) {
  const SarkozySet s = input_set(cfg, "");
  RatioSequence seq;
  if (cfg.sequence == "pow") {
    seq.kind = RatioSequence::Kind::OddPowerOfTwoMinusOne;
  } else if (cfg.sequence == "arith") {
    seq.kind = RatioSequence::Kind::Arithmetic;
    seq.step = cfg.step;
  } else {
    throw std::invalid_argument("unknown sequence '" + cfg.sequence + "'");
  }
  Sink sink(cfg.out_path, out);
  sink.get() << "n,r2,ratio\n";
  for (const RatioPoint& p : ratio_sequence(s, seq, cfg.count)) {
    std::ostringstream ratio;
    ratio << std::setprecision(17) << p.ratio;
    sink.get() << p.n << ',' << p.r2 << ',' << ratio.str() << '\n';
  }
}

}  // namespace

SarkozySet resolve_set(const std::string& text, std::uint64_t seed) {
  if (text == "A0") {
    return SarkozySet::a0();
  }
  if (text == "B0") {
    return SarkozySet::b0();
  }
  const auto colon = text.find(':');
  if (colon != std::string::npos && text.find('=') == std::string::npos) {
    const std::string name = text.substr(0, colon);
    const std::uint64_t param = parse_u64(text.substr(colon + 1), name + " parameter");
    if (name == "random") {
      return random_balanced_set(param, seed);
    }
    return construction_set(name, param);
  }
  static const std::string kUnchecked = "(unchecked)";
  if (text.size() > kUnchecked.size() &&
      text.compare(text.size() - kUnchecked.size(), kUnchecked.size(), kUnchecked) == 0) {
    return SarkozySet::make_unchecked(
        parse_spec(std::string_view(text).substr(0, text.size() - kUnchecked.size())));
  }
  return SarkozySet::make(parse_spec(text));
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Representation functions of Thue-Morse type partitions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_set = [&](CLI::App* sub) {
    sub->add_option("--set", cfg.set_text,
                    "A0, B0, N=<int>;P=<list>[(unchecked)], thm1:N, thm2:k, "
                    "thm3:N, cor3:k or random:N");
    sub->add_option("--seed", cfg.seed, "Seed for random:N sets");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n-max", cfg.n_max, "Largest n examined")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out_path, "Output file (default stdout)");
    sub->add_option("--workers", cfg.workers,
                    "Worker threads (default: available parallelism)");
  };

  auto* construct = app.add_subcommand("construct", "Print an extremal set as a spec");
  construct->add_option("name", cfg.construction, "thm1, thm2, thm3 or cor3")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "cor3"}));
  construct->add_option("--n", cfg.n_param, "Threshold N (thm1, thm3)");
  construct->add_option("--k", cfg.k_param, "Index k (thm2, cor3)");

  auto* repfn = app.add_subcommand("repfn", "R2 profiles of A, its complement and the cross term");
  add_set(repfn);
  add_common(repfn);
  repfn->add_option("--method", cfg.method, "naive, bitpar or conv")
      ->check(CLI::IsMember({"naive", "bitpar", "conv"}));

  auto* verify = app.add_subcommand("verify", "Run a theorem check and emit its report");
  verify->add_option("theorem", cfg.theorem,
                     "dombi, thm-a, lemma1, thm1, cor3, thm2, thm3, lower-bounds")
      ->required();
  add_set(verify);
  add_common(verify);
  verify->add_option("--n", cfg.n_param, "Threshold N (thm1, thm3)");
  verify->add_option("--k", cfg.k_param, "Index k (thm2, cor3)");
  verify->add_option("--k-max", cfg.k_max, "lemma1: largest k (default 4N)");
  verify->add_option("--l-max", cfg.l_max, "lemma1: largest l");
  verify->add_option("--m-max", cfg.m_max, "thm1/cor3: largest m");

  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive scan of balanced prefixes");
  scan_cmd->add_option("--n", cfg.n_param, "Threshold N (at most 10)")->required();
  add_common(scan_cmd);

  auto* density = app.add_subcommand("density", "Empirical n/8 concentration");
  add_set(density);
  add_common(density);
  density->add_option("--theta", cfg.theta, "Exponent theta");
  density->add_option("--c", cfg.c, "Constant C");

  auto* ratios = app.add_subcommand("ratios", "R2(A,n)/n along a sequence");
  add_set(ratios);
  add_common(ratios);
  ratios->add_option("--seq", cfg.sequence, "pow (n = 2^(2m+1)-1) or arith")
      ->check(CLI::IsMember({"pow", "arith"}));
  ratios->add_option("--step", cfg.step, "Step of the arithmetic sequence");
  ratios->add_option("--count", cfg.count, "Number of terms");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) {
      cmd_construct(cfg, out);
    } else if (repfn->parsed()) {
      cmd_repfn(cfg, out);
    } else if (verify->parsed()) {
      cmd_verify(cfg, out, err);
    } else if (scan_cmd->parsed()) {
      cmd_scan(cfg, out, err);
    } else if (density->parsed()) {
      cmd_density(cfg, out);
    } else if (ratios->parsed()) {
      cmd_ratios(cfg, out);
    }
  } catch (const CheckFailed&) {
    return kExitCheckFailed;
  } catch (const ScanContradiction& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace repfn::cli
