#include "longknot/invariants.hpp"

#include <algorithm>
#include <unordered_map>

namespace longknot {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::M:
      return "M";
    case Variant::Mhat:
      return "Mhat";
    case Variant::Mo:
      return "Mo";
    case Variant::Mn:
      return "Mn";
  }
  return "?";
}

Variant parse_variant(std::string_view text) {
  for (Variant v : kVariants) {
    if (text == to_string(v)) return v;
  }
  throw ParseError("unknown variant '" + std::string(text) + "' (expected M, Mhat, Mo or Mn)");
}

std::string BlockEntry::to_string() const {
  static constexpr std::array<const char*, 5> names{"1", "A", "B", "C", "D"};
  std::string s;
  // blocks first, the identity last: "D-1" rather than "-1+D"
  for (std::size_t n = 0; n < 5; ++n) {
    const std::size_t k = (n + 1) % 5;
    const std::int32_t c = coeff[k];
    if (c == 0) continue;
    if (c < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    const std::int32_t a = c < 0 ? -c : c;
    if (k == 0) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += names[k];
    }
  }
  return s.empty() ? "0" : s;
}

std::string PresentationMatrix::render() const {
  std::vector<std::size_t> width(cols_, 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) width[c] = std::max(width[c], (*this)(r, c).to_string().size());
  }
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      std::string e = (*this)(r, c).to_string();
      if (c) out += "  ";
      out += std::string(width[c] - e.size(), ' ') + e;
    }
    out += '\n';
  }
  return out;
}

bool PresentationMatrix::has_zero_line(const std::vector<std::size_t>& rows,
                                       const std::vector<std::size_t>& cols) const {
  for (std::size_t r : rows) {
    if (std::all_of(cols.begin(), cols.end(), [&](std::size_t c) { return (*this)(r, c).is_zero(); })) return true;
  }
  for (std::size_t c : cols) {
    if (std::all_of(rows.begin(), rows.end(), [&](std::size_t r) { return (*this)(r, c).is_zero(); })) return true;
  }
  return false;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t b = 1;
  for (std::size_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

std::size_t PresentationMatrix::minor_count(std::size_t r) const {
  if (rows_ <= r) return 0;
  const std::size_t keep = rows_ - r;
  return binomial(rows_, keep) * binomial(cols_, keep);
}

void check_compatible(const LongDiagram& d, KnotKind switch_kind) {
  if (d.kind() == KnotKind::flat && switch_kind != KnotKind::flat) {
    throw KindError("flat diagrams need a flat (involutory) switch");
  }
}

namespace {

struct Crossing {
  int sign = 1;
  // passage indices (among real passages) of the i-strand and j-strand
  std::size_t i = 0;
  std::size_t j = 0;
};

// The i-strand is the over strand of a positive crossing, the under strand
// of a negative one, and the first flat role.
std::vector<Crossing> crossings(const LongDiagram& d) {
  std::unordered_map<std::uint32_t, std::size_t> slot;
  std::vector<Crossing> out;
  std::size_t k = 0;
  for (const auto& p : d.passages()) {
    if (p.is_virtual()) continue;
    auto [it, fresh] = slot.emplace(p.crossing, out.size());
    if (fresh) out.emplace_back();
    Crossing& c = out[it->second];
    bool first_role;
    if (p.role == Role::flat_first || p.role == Role::flat_second) {
      c.sign = 1;
      first_role = p.role == Role::flat_first;
    } else {
      c.sign = p.sign;
      first_role = (p.role == Role::over) == (p.sign > 0);
    }
    (first_role ? c.i : c.j) = k;
    ++k;
  }
  return out;
}

void fill_relations(PresentationMatrix& m, const LongDiagram& d, std::size_t semi_arcs) {
  // column of semi-arc x_k; x_n wraps to x_0 for the closed diagram
  auto col = [semi_arcs](std::size_t k) { return k % semi_arcs; };
  std::size_t row = 0;
  for (const Crossing& c : crossings(d)) {
    const std::size_t i = c.i;
    const std::size_t j = c.j;
    if (c.sign > 0) {
      m(row, col(j + 1)) += BlockEntry::identity(-1);
      m(row, col(i)) += BlockEntry::a();
      m(row, col(j)) += BlockEntry::b();
      m(row + 1, col(i + 1)) += BlockEntry::identity(-1);
      m(row + 1, col(i)) += BlockEntry::c();
      m(row + 1, col(j)) += BlockEntry::d();
    } else {
      m(row, col(i)) += BlockEntry::identity(-1);
      m(row, col(j + 1)) += BlockEntry::a();
      m(row, col(i + 1)) += BlockEntry::b();
      m(row + 1, col(j)) += BlockEntry::identity(-1);
      m(row + 1, col(j + 1)) += BlockEntry::c();
      m(row + 1, col(i + 1)) += BlockEntry::d();
    }
    row += 2;
  }
}

}  // namespace

PresentationMatrix build_presentation(const LongDiagram& d, Variant variant) {
  const std::size_t rel = 2 * d.crossing_count();
  const std::size_t n = d.semi_arc_count() - 1;
  const std::size_t rows = variant == Variant::M ? rel : rel + 1;
  PresentationMatrix m(variant, rows, n + 1, d.code(), d.kind());
  fill_relations(m, d, n + 2);  // no wrap-around: every index stays below n + 2
  switch (variant) {
    case Variant::M:
      break;
    case Variant::Mhat:
      m(rel, 0) += BlockEntry::identity(1);
      m(rel, n) += BlockEntry::identity(-1);
      break;
    case Variant::Mo:
      m(rel, 0) += BlockEntry::identity(1);
      break;
    case Variant::Mn:
      m(rel, n) += BlockEntry::identity(1);
      break;
  }
  return m;
}

PresentationMatrix closed_presentation(const LongDiagram& d) {
  const std::size_t n = d.semi_arc_count() - 1;
  if (n == 0) {
    // one arc and no relations; the trivial relation x₀ = x₀ keeps it square
    return PresentationMatrix(Variant::Mhat, 1, 1, d.code(), d.kind());
  }
  PresentationMatrix m(Variant::Mhat, n, n, d.code(), d.kind());
  fill_relations(m, d, n);
  return m;
}

PresentationMatrix fold_closure(const PresentationMatrix& mhat) {
  const std::size_t n = mhat.cols() - 1;
  if (n == 0) return mhat;
  PresentationMatrix out(Variant::Mhat, mhat.rows() - 1, n, mhat.diagram_code(), mhat.kind());
  for (std::size_t r = 0; r + 1 < mhat.rows(); ++r) {
    for (std::size_t c = 0; c <= n; ++c) out(r, c % n) += mhat(r, c);
  }
  return out;
}

}  // namespace longknot
