#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "longknot/invariants.hpp"

namespace longknot {

struct FuzzConfig {
  std::size_t sequences = 100;
  /// Each sequence has between 1 and `max_moves` moves.
  std::size_t max_moves = 6;
  std::size_t r_max = 0;
  /// Per-diagram cap on the determinant work spent above codimension 0
  /// (see CodimStats::work); 0 means no cap. Diagrams that exceed it are
  /// compared up to the last codimension that fit.
  std::size_t work_limit = 0;
  std::uint64_t seed = 1;
  /// Also run the p | ǒp, p | ňp checks on every perturbed virtual diagram.
  bool check_divisibility = false;
  /// Recompute each mismatching entry at Λ level (scalar_codim_det) on both
  /// diagrams, within this work cap; 0 disables the classification.
  std::size_t classify_work_limit = 0;
  std::optional<UnitMode> mode;
};

struct FuzzFailure {
  std::size_t sequence = 0;
  /// Seeds a std::mt19937_64 that replays this sequence.
  std::uint64_t sequence_seed = 0;
  std::vector<MoveSpec> trace;
  std::string code;
  std::string detail;
  /// For profile mismatches: whether the Λ-level values of the differing
  /// entries agree; nullopt when not classified or over the work cap.
  std::optional<bool> scalar_agrees;
};

struct FuzzReport {
  std::size_t sequences = 0;
  std::size_t profile_mismatches = 0;
  std::size_t divisibility_failures = 0;
  /// Profile mismatches whose Λ-level values agree, differ, or were not
  /// classified.
  std::size_t scalar_agreeing = 0;
  std::size_t scalar_differing = 0;
  /// checked_up_to[r]: perturbed diagrams whose comparison reached codimension r.
  std::vector<std::size_t> checked_up_to;
  std::vector<FuzzFailure> failures;

  bool ok() const { return profile_mismatches == 0 && divisibility_failures == 0; }
};

/// Draws the move sequence for one fuzz run from its own seed.
std::pair<LongDiagram, std::vector<MoveSpec>> random_sequence(const LongDiagram& d, std::size_t max_moves,
                                                              std::uint64_t sequence_seed);

/// Compares the Λ-level values of the listed entries on two diagrams;
/// nullopt when some value exceeds `work_limit`.
template <Coefficient K>
std::optional<bool> scalar_values_agree(const LongDiagram& a, const LongDiagram& b, const Switch<K>& s,
                                        const std::vector<std::pair<Variant, std::size_t>>& keys, UnitMode mode,
                                        std::size_t work_limit) {
  bool agree = true;
  for (const auto& [v, r] : keys) {
    auto x = scalar_codim_det(build_presentation(a, s, v), s, r, mode, work_limit);
    auto y = scalar_codim_det(build_presentation(b, s, v), s, r, mode, work_limit);
    if (!x || !y) return std::nullopt;
    agree = agree && *x == *y;
  }
  return agree;
}

/// Applies random move sequences to `d` and compares each invariant profile
/// with the profile of `d`.
template <Coefficient K>
FuzzReport fuzz_invariance(const LongDiagram& d, const Switch<K>& s, const FuzzConfig& cfg) {
  const InvariantProfile<K> base = bounded_profile(d, s, cfg.r_max, cfg.work_limit, cfg.mode);
  std::mt19937_64 master(cfg.seed);
  FuzzReport rep;
  rep.checked_up_to.assign(base.r_max + 1, 0);
  for (std::size_t n = 0; n < cfg.sequences; ++n) {
    const std::uint64_t seq_seed = master();
    auto [moved, trace] = random_sequence(d, cfg.max_moves, seq_seed);
    ++rep.sequences;
    const InvariantProfile<K> prof = bounded_profile(moved, s, base.r_max, cfg.work_limit, cfg.mode);
    for (std::size_t r = 0; r <= prof.r_max; ++r) ++rep.checked_up_to[r];
    std::string detail;
    std::vector<std::pair<Variant, std::size_t>> differing;
    for (const auto& [key, got] : prof.values) {
      const auto& want = base.values.at(key);
      if (got == want) continue;
      differing.push_back(key);
      detail += std::string(to_string(key.first)) + "^" + std::to_string(key.second) + ": expected " +
                want.to_string() + ", got " + got.to_string() + "; ";
    }
    if (!detail.empty()) {
      ++rep.profile_mismatches;
      FuzzFailure f{n, seq_seed, trace, moved.code(), detail, std::nullopt};
      if (cfg.classify_work_limit) {
        f.scalar_agrees = scalar_values_agree(d, moved, s, differing, base.mode, cfg.classify_work_limit);
        if (f.scalar_agrees) ++(*f.scalar_agrees ? rep.scalar_agreeing : rep.scalar_differing);
      }
      rep.failures.push_back(std::move(f));
    }
    if (cfg.check_divisibility && moved.kind() == KnotKind::virtual_knot) {
      const DivisibilityReport div = check_divisibility(moved, s, prof);
      if (!div.ok()) {
        ++rep.divisibility_failures;
        rep.failures.push_back({n, seq_seed, trace, moved.code(), "divisibility check failed", std::nullopt});
      }
    }
  }
  return rep;
}

}  // namespace longknot
