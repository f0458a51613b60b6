#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "longknot/switch.hpp"

namespace longknot {

enum class Role { over, under, virtual_pass, flat_first, flat_second };

/// One visit of the strand to a crossing. `sign` is ±1 for over/under
/// passages and 0 otherwise.
struct Passage {
  std::uint32_t crossing = 0;
  Role role = Role::over;
  int sign = 0;

  bool is_virtual() const { return role == Role::virtual_pass; }
  /// Classical or flat: the passage ends a semi-arc.
  bool is_real() const { return role != Role::virtual_pass; }

  friend bool operator==(const Passage&, const Passage&) = default;
};

/// A long virtual or flat knot diagram given by its passage sequence from
/// the input end x₀ to the output end.
///
/// Semi-arcs are delimited by classical/flat passages only; the k-th such
/// passage leads from x_k to x_{k+1}.
class LongDiagram {
 public:
  LongDiagram() = default;
  /// Validates the pairing rules; throws ParseError on violation.
  LongDiagram(std::vector<Passage> passages, KnotKind kind);

  /// Whitespace-separated tokens `O1+`, `U1-`, `V3`, `L2`, `R2`. An empty
  /// code is the trivial long knot of `kind` (virtual by default).
  static LongDiagram parse(std::string_view code, std::optional<KnotKind> kind = std::nullopt);

  const std::vector<Passage>& passages() const noexcept { return passages_; }
  KnotKind kind() const noexcept { return kind_; }
  bool empty() const noexcept { return passages_.empty(); }

  /// Number of classical (or flat) crossings.
  std::size_t crossing_count() const noexcept { return real_passages_ / 2; }
  std::size_t semi_arc_count() const noexcept { return real_passages_ + 1; }
  /// Classical/flat crossing ids in order of first appearance.
  std::vector<std::uint32_t> crossing_order() const;
  std::uint32_t max_id() const;

  std::string code() const;

  friend bool operator==(const LongDiagram& a, const LongDiagram& b) {
    return a.kind_ == b.kind_ && a.passages_ == b.passages_;
  }

 private:
  std::vector<Passage> passages_;
  KnotKind kind_ = KnotKind::virtual_knot;
  std::size_t real_passages_ = 0;
};

enum class Transform { mirror, reflect, reverse };

std::string_view to_string(Transform t);
Transform parse_transform(std::string_view text);

/// mirror: swap over/under and flip signs. reflect: flip signs, or swap the
/// two flat roles. reverse: traverse the strand backwards.
LongDiagram transform(const LongDiagram& d, Transform t);

/// `a` followed by `b`, with b's crossing ids shifted past a's.
LongDiagram concat(const LongDiagram& a, const LongDiagram& b);

/// Turaev's descent of a flat diagram: the first-met passage of every
/// crossing becomes the over passage. The crossing is positive when the
/// first-met passage has the first flat role and negative otherwise.
LongDiagram descent(const LongDiagram& d);

/// Renumbers ids 1, 2, ... in order of first appearance.
LongDiagram relabel(const LongDiagram& d);

enum class Move { r1, r2, v1, v2 };

std::string_view to_string(Move m);
Move parse_move(std::string_view text);

/// Parameters of one inserted move. Positions are insertion points in the
/// passage list, 0 ≤ p, q ≤ passages().size().
struct MoveSpec {
  Move move = Move::r1;
  std::size_t p = 0;
  std::size_t q = 0;
  /// r1: the over (first flat role) passage comes first.
  bool over_first = true;
  /// r1, r2: sign of the first new crossing.
  int sign = 1;
  /// r2: both strands run the same way; v2: second pair in the same order.
  bool parallel = false;

  std::string to_string() const;
};

/// Inserts the move. New ids are allocated above `d.max_id()`.
/// Throws PreconditionError on positions out of range.
LongDiagram apply_move(const LongDiagram& d, const MoveSpec& m);

/// Draws uniform parameters for `move` on `d`.
MoveSpec random_move(const LongDiagram& d, Move move, std::mt19937_64& rng);

/// Draws a move type and its parameters.
MoveSpec random_move(const LongDiagram& d, std::mt19937_64& rng);

LongDiagram perturb(const LongDiagram& d, Move move, std::mt19937_64& rng);

std::vector<std::string> builtin_diagram_names();
/// fly | flat-fly | virtual-trefoil-long | kishino-long | empty.
LongDiagram builtin_diagram(std::string_view name);

}  // namespace longknot
