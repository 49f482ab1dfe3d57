#include "ramsey/campaign.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "ramsey/error.hpp"
#include "ramsey/extract.hpp"

namespace ramsey {

const char* to_string(Engine e) { return e == Engine::Oracle ? "ORACLE" : "PROOF"; }

const char* to_string(CampaignMode m) { return m == CampaignMode::Exhaustive ? "EXHAUSTIVE" : "SAMPLED"; }

std::optional<Witness> engine_witness(const TwoColoring& c, const ForestSpec& f, const CliqueUnion& h,
                                      Engine engine, bool* fell_back,
                                      bool record_trace) {
  if (fell_back) *fell_back = false;
  const Graph red_pattern = f.graph();
  std::optional<Witness> w;
  if (engine == Engine::Oracle) {
    w = search_witness(c, red_pattern, h);
  } else {
    ExtractOptions opt;
    opt.enforce_threshold = c.order() >= ramsey_value(f, h);
    opt.record_trace = record_trace;
    try {
      w = proof_extract(c, f, h, opt).witness;
    } catch (const std::logic_error&) {
      // An internal invariant broke: count the coloring as a failure.
      return std::nullopt;
    }
    if (!w && !opt.enforce_threshold) {
      w = search_witness(c, red_pattern, h);
      if (w) w->trace.insert(w->trace.begin(), "proof route left this coloring open below the threshold");
      if (fell_back) *fell_back = true;
    }
  }
  if (w && !verify_witness(c, red_pattern, h, *w)) return std::nullopt;
  return w;
}

namespace {

struct Tally {
  CampaignResult& r;
  void record(const TwoColoring& c, const ForestSpec& f, const CliqueUnion& h, Engine engine) {
    bool fell_back = false;
    const auto w = engine_witness(c, f, h, engine, &fell_back);
    ++r.trials;
    if (fell_back) ++r.fallbacks;
    if (w) return;
    ++r.failures;
    if (!r.first_failure) r.first_failure = c;
  }
};

}  // namespace

CampaignResult exhaustive_verify(const ForestSpec& f, const CliqueUnion& h, int n, Engine engine,
                                 int cap_bits) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  const auto pairs = pair_count(n);
  if (pairs > static_cast<std::size_t>(cap_bits) || pairs >= 64)
    throw Error(ErrorKind::CapExceeded, "C(N,2)=" + std::to_string(pairs) + " exceeds the cap of " +
                                            std::to_string(cap_bits) + " bits");
  if (engine == Engine::Proof) check_supported(f, h);
  const auto start = std::chrono::steady_clock::now();
  CampaignResult r;
  r.mode = CampaignMode::Exhaustive;
  Tally tally{r};
  const std::uint64_t total = std::uint64_t{1} << pairs;
  for (std::uint64_t bits = 0; bits < total; ++bits) tally.record(TwoColoring::from_bits(n, bits), f, h, engine);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

TwoColoring sample_coloring(int n, std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  TwoColoring c(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng() & 1) c.set(i, j, Color::Red);
  return c;
}

CampaignResult sampled_verify(const ForestSpec& f, const CliqueUnion& h, int n, Engine engine,
                              std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "N must be positive");
  if (engine == Engine::Proof) check_supported(f, h);
  const auto start = std::chrono::steady_clock::now();
  CampaignResult r;
  r.mode = CampaignMode::Sampled;
  r.seed = seed;
  Tally tally{r};
  for (std::uint64_t t = 0; t < trials; ++t) tally.record(sample_coloring(n, seed, t), f, h, engine);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

std::string write_report(const CampaignResult& r) {
  std::ostringstream out;
  out << "mode: " << to_string(r.mode) << '\n';
  if (r.seed) out << "seed: " << *r.seed << '\n';
  out << "trials: " << r.trials << '\n';
  out << "failures: " << r.failures << '\n';
  if (r.fallbacks) out << "oracle fallbacks: " << r.fallbacks << '\n';
  if (r.first_failure) out << "first failure:\n" << write_coloring(*r.first_failure);
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace ramsey
