#include "longknot/fuzz.hpp"

namespace longknot {

std::pair<LongDiagram, std::vector<MoveSpec>> random_sequence(const LongDiagram& d, std::size_t max_moves,
                                                              std::uint64_t sequence_seed) {
  std::mt19937_64 rng(sequence_seed);
  std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(max_moves, 1));
  const std::size_t n = max_moves == 0 ? 0 : length(rng);
  LongDiagram cur = d;
  std::vector<MoveSpec> trace;
  for (std::size_t k = 0; k < n; ++k) {
    MoveSpec m = random_move(cur, rng);
    cur = apply_move(cur, m);
    trace.push_back(m);
  }
  return {std::move(cur), std::move(trace)};
}

}  // namespace longknot
