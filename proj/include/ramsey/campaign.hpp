#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "ramsey/formulas.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

enum class Engine { Oracle, Proof };
enum class CampaignMode { Exhaustive, Sampled };

const char* to_string(Engine e);
const char* to_string(CampaignMode m);

struct CampaignResult {
  CampaignMode mode = CampaignMode::Exhaustive;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::optional<TwoColoring> first_failure;
  std::chrono::duration<double> elapsed{0};
  std::optional<std::uint64_t> seed;
  /// PROOF engine only: colorings the proof route left open and the oracle settled.
  std::uint64_t fallbacks = 0;

  bool passed() const { return failures == 0; }
};

/// Witness for one coloring from the chosen engine, validated before it is returned.
/// PROOF runs the extractors (strict at or above the formula value, best effort
/// below it, then the oracle for whatever remains open).
std::optional<Witness> engine_witness(const TwoColoring& c, const ForestSpec& f, const CliqueUnion& h,
                                      Engine engine, bool* fell_back = nullptr,
                                      bool record_trace = false);

/// Every coloring of K_N as the integers 0..2^C(N,2)-1 (bit k = pair k, 1 = red).
/// Throws CapExceeded when C(N,2) > cap_bits.
CampaignResult exhaustive_verify(const ForestSpec& f, const CliqueUnion& h, int n, Engine engine,
                                 int cap_bits = 28);

/// Trial t draws each pair colour from std::mt19937_64 seeded with seed_seq{seed, t}.
CampaignResult sampled_verify(const ForestSpec& f, const CliqueUnion& h, int n, Engine engine,
                              std::uint64_t trials, std::uint64_t seed);

TwoColoring sample_coloring(int n, std::uint64_t seed, std::uint64_t trial);

/// Deterministic text report (no timing).
std::string write_report(const CampaignResult& r);

}  // namespace ramsey
