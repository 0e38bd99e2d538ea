// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "checks.hpp"
#include "cli.hpp"
#include "corpus.hpp"
#include "gonlab/bounds.hpp"
#include "gonlab/reduction.hpp"

using namespace gonlab;
using nlohmann::json;

namespace {

// Pinned tolerances.
constexpr double kLambda2Tol = 1e-6;
constexpr double kSpectralTol = 0.01;
constexpr double kFourDecimals = 5e-5;
// The published spectral constant is a truncation of 0.048657, not a rounding.
constexpr double kTruncatedFourDecimals = 1e-4;
constexpr double kGonalitySeconds1 = 600.0;
constexpr double kGonalitySeconds8 = 120.0;
constexpr double kSandwichSeconds = 300.0;
constexpr std::size_t kMinCorpus = 200;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string run_cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run(args, out, err, [](const std::string&) { return std::nullopt; });
  if (code) *code = c;
  return out.str();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string summarize(const checks::Result& r) {
  std::string s = std::to_string(r.cases) + " cases, " + std::to_string(r.violations.size()) + " violations";
  if (!r.ok()) s += "; first: " + r.violations.front();
  return s;
}

Verdict pappus_table() {
  int code = 0;
  const auto j = json::parse(run_cli({"cheeger", "pappus", "--json", "--threads", "1"}, &code));
  const std::vector<std::string> table{"3", "2", "5/3", "3/2", "7/5", "1", "1", "1", "7/9"};
  bool ok = code == 0 && j["exact"].get<bool>() && j["rows"].size() == table.size();
  std::string got;
  for (std::size_t i = 0; ok && i < table.size(); ++i) {
    const auto h = j["rows"][i]["h_u"].get<std::string>();
    const auto u = j["rows"][i]["u"].get<std::string>();
    ok = ok && h == table[i] && u == std::to_string(i + 1) + "/18";
    got += (i ? " " : "") + h;
  }
  return {ok, "h_u = " + got};
}

Verdict pappus_spectral() {
  const auto g = pappus_graph();
  const auto s = algebraic_connectivity(g);
  const auto b = spectral_bound(g, s);
  const double dev = std::abs(s.lambda2 - (3.0 - std::sqrt(3.0)));
  const bool ok = dev < kLambda2Tol && std::abs(b.value - 5.04) < kSpectralTol && b.ceiling == 6;
  return {ok, "lambda2 = " + fmt("%.12f", s.lambda2) + " (|dev| " + fmt("%.1e", dev) +
                  ", certified error " + fmt("%.1e", s.error_bound) + "), bound = " +
                  fmt("%.6f", b.value) + ", ceiling = " + std::to_string(b.ceiling)};
}

Verdict pappus_cheeger_route() {
  const auto g = pappus_graph();
  const auto profile = cheeger_profile(g);
  const auto rc = regular_cheeger_bound(g, profile);
  const auto sb = separator_bound(g, profile, separator_profile(g));
  const bool ok = rc.value == Rational(9, 2) && rc.j * 3 == g.vertex_count() && sb.value >= rc.value;
  return {ok, "best grid value " + rc.value.to_string() + " at u = " + std::to_string(rc.j) +
                  "/18; with exact B_u the same route gives " + sb.value.to_string() + " at u = " +
                  std::to_string(sb.j) + "/18"};
}

Verdict pappus_gonality() {
  const auto g = pappus_graph();
  const bool middle = has_positive_rank(Divisor::indicator(g, pappus_middle_ring()));
  auto timed = [&](int threads, double& secs) {
    GonalityOptions opts;
    opts.threads = threads;
    const auto t = std::chrono::steady_clock::now();
    const auto r = exact_gonality(g, opts);
    secs = seconds_since(t);
    return r;
  };
  double s1 = 0, s8 = 0;
  const auto r1 = timed(1, s1);
  const auto r8 = timed(8, s8);
  const bool ok = middle && r1.certified() && r1.certificate->value == 6 &&
                  r1.certificate->cleared_degree == 5 && r1.certificate->exhaustive &&
                  r8.certified() && r8.certificate->witness == r1.certificate->witness &&
                  s1 <= kGonalitySeconds1 && s8 <= kGonalitySeconds8;
  return {ok, std::string("middle-ring divisor positive rank: ") + (middle ? "yes" : "no") +
                  "; degrees <= " + std::to_string(r1.cleared_degree) + " cleared (" +
                  std::to_string(r1.candidates_checked) + " candidates); gonality " +
                  (r1.certified() ? std::to_string(r1.certificate->value) : "?") + "; " +
                  fmt("%.2fs", s1) + " on 1 thread, " + fmt("%.2fs", s8) + " on 8"};
}

Verdict constants() {
  const double c = random_regular_cheeger_constant();
  const double s = random_regular_spectral_constant(ramanujan_lambda2(3), 3);
  const bool ok = std::abs(c - 0.0727) < kFourDecimals && std::trunc(c * 1000) / 1000 == 0.072 &&
                  std::abs(s - 0.0486) < kTruncatedFourDecimals && std::trunc(s * 1e4) / 1e4 == 0.0486;
  return {ok, "min{0.24/3.24, 0.36/4.95} = " + fmt("%.6f", c) + " (0.072 truncated), spectral = " +
                  fmt("%.6f", s) + " (0.0486 truncated)"};
}

const std::vector<corpus::Sample>& small() {
  static const auto graphs = corpus::small_connected();
  return graphs;
}

Verdict sandwich() {
  const auto t = std::chrono::steady_clock::now();
  const auto r = checks::soundness_sandwich(small());
  const double secs = seconds_since(t);
  return {r.ok() && r.cases >= kMinCorpus && secs <= kSandwichSeconds,
          summarize(r) + ", " + fmt("%.1fs", secs)};
}

Verdict reduction() {
  const auto r = checks::reduction_properties(small());
  return {r.ok() && r.cases >= kMinCorpus, summarize(r)};
}

Verdict cheeger_inequalities() {
  const auto r = checks::cheeger_inequalities(corpus::regular_up_to_16());
  return {r.ok() && r.cases > 0, summarize(r)};
}

Verdict determinism() {
  const std::vector<std::string> base{"random", "--k",  "3",      "--n", "100",
                                      "--samples", "10", "--seed", "42"};
  std::vector<std::string> outputs;
  for (const char* threads : {"1", "1", "2", "8"}) {
    auto args = base;
    args.insert(args.end(), {"--threads", threads});
    int code = 0;
    outputs.push_back(run_cli(args, &code));
    if (code != 0) return {false, "exit status " + std::to_string(code)};
  }
  bool same = true;
  for (const auto& o : outputs) same = same && o == outputs.front();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : outputs.front()) h = (h ^ ch) * 1099511628211ULL;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return {same && !outputs.front().empty(),
          std::to_string(outputs.front().size()) + " bytes, FNV-1a " + buf +
              ", identical across 2 runs and 1/2/8 threads"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"Pappus u-Cheeger table", pappus_table},
      {"Pappus spectral bound", pappus_spectral},
      {"Pappus regular Cheeger route", pappus_cheeger_route},
      {"Pappus gonality certificate", pappus_gonality},
      {"published constant pipelines", constants},
      {"soundness sandwich", sandwich},
      {"reduction engine properties", reduction},
      {"Cheeger inequalities", cheeger_inequalities},
      {"random experiment determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("criterion %zu %s  %s: %s [%.2fs]\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first,
                v.detail.c_str(), seconds_since(t));
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
