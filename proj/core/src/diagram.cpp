#include "longknot/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace longknot {

namespace {

bool is_classical(Role r) { return r == Role::over || r == Role::under; }
bool is_flat(Role r) { return r == Role::flat_first || r == Role::flat_second; }

char role_letter(Role r) {
  switch (r) {
    case Role::over:
      return 'O';
    case Role::under:
      return 'U';
    case Role::virtual_pass:
      return 'V';
    case Role::flat_first:
      return 'L';
    case Role::flat_second:
      return 'R';
  }
  return '?';
}

std::string token(const Passage& p) {
  std::string s(1, role_letter(p.role));
  s += std::to_string(p.crossing);
  if (is_classical(p.role)) s += p.sign > 0 ? '+' : '-';
  return s;
}

// Forgets over/under while keeping which strand carries the first role:
// the over strand of a positive crossing and the under strand of a negative one.
Passage flatten(Passage p) {
  if (!is_classical(p.role)) return p;
  const bool first = (p.role == Role::over) == (p.sign > 0);
  return {p.crossing, first ? Role::flat_first : Role::flat_second, 0};
}

}  // namespace

LongDiagram::LongDiagram(std::vector<Passage> passages, KnotKind kind) : passages_(std::move(passages)), kind_(kind) {
  struct Seen {
    std::vector<Role> roles;
    std::vector<int> signs;
  };
  std::map<std::uint32_t, Seen> seen;
  for (const auto& p : passages_) {
    if (p.crossing == 0) throw ParseError("crossing ids must be positive");
    if (is_classical(p.role) && kind_ == KnotKind::flat) {
      throw ParseError("classical passage " + token(p) + " in a flat diagram");
    }
    if (is_flat(p.role) && kind_ == KnotKind::virtual_knot) {
      throw ParseError("flat passage " + token(p) + " in a virtual diagram");
    }
    if (is_classical(p.role) != (p.sign != 0)) throw ParseError("passage " + token(p) + " has an invalid sign");
    auto& s = seen[p.crossing];
    s.roles.push_back(p.role);
    s.signs.push_back(p.sign);
    if (p.is_real()) ++real_passages_;
  }
  for (const auto& [id, s] : seen) {
    const std::string name = "crossing " + std::to_string(id);
    if (s.roles.size() != 2) {
      throw ParseError(name + " appears " + std::to_string(s.roles.size()) + " time(s), expected 2");
    }
    const Role a = s.roles[0];
    const Role b = s.roles[1];
    if (a == Role::virtual_pass || b == Role::virtual_pass) {
      if (a != b) throw ParseError(name + " mixes virtual and non-virtual passages");
    } else if (is_classical(a)) {
      if (!is_classical(b) || a == b) throw ParseError(name + " needs one over and one under passage");
      if (s.signs[0] != s.signs[1]) throw ParseError("sign mismatch at " + name);
    } else if (!is_flat(b) || a == b) {
      throw ParseError(name + " needs one L and one R passage");
    }
  }
}

LongDiagram LongDiagram::parse(std::string_view code, std::optional<KnotKind> kind) {
  std::vector<Passage> ps;
  bool any_classical = false;
  bool any_flat = false;
  std::size_t pos = 0;
  while (pos < code.size()) {
    if (std::isspace(static_cast<unsigned char>(code[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < code.size() && !std::isspace(static_cast<unsigned char>(code[end]))) ++end;
    const std::string_view tok = code.substr(pos, end - pos);
    auto bad = [&](const std::string& why) {
      return ParseError("bad token '" + std::string(tok) + "': " + why, 1, pos + 1);
    };
    Passage p;
    switch (tok[0]) {
      case 'O':
        p.role = Role::over;
        break;
      case 'U':
        p.role = Role::under;
        break;
      case 'V':
        p.role = Role::virtual_pass;
        break;
      case 'L':
        p.role = Role::flat_first;
        break;
      case 'R':
        p.role = Role::flat_second;
        break;
      default:
        throw bad("unknown passage type");
    }
    std::string_view rest = tok.substr(1);
    if (is_classical(p.role)) {
      if (rest.empty() || (rest.back() != '+' && rest.back() != '-')) throw bad("missing sign");
      p.sign = rest.back() == '+' ? 1 : -1;
      rest.remove_suffix(1);
      any_classical = true;
    }
    if (is_flat(p.role)) any_flat = true;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p.crossing);
    if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size() || p.crossing == 0) {
      throw bad("expected a positive crossing id");
    }
    ps.push_back(p);
    pos = end;
  }
  if (any_classical && any_flat) throw ParseError("code mixes classical and flat crossings");
  KnotKind k = any_flat ? KnotKind::flat : KnotKind::virtual_knot;
  if (kind) {
    if ((any_flat && *kind != KnotKind::flat) || (any_classical && *kind != KnotKind::virtual_knot)) {
      throw KindError("code does not match the requested kind " + std::string(to_string(*kind)));
    }
    k = *kind;
  }
  return LongDiagram(std::move(ps), k);
}

std::vector<std::uint32_t> LongDiagram::crossing_order() const {
  std::vector<std::uint32_t> out;
  for (const auto& p : passages_) {
    if (p.is_real() && std::find(out.begin(), out.end(), p.crossing) == out.end()) out.push_back(p.crossing);
  }
  return out;
}

std::uint32_t LongDiagram::max_id() const {
  std::uint32_t m = 0;
  for (const auto& p : passages_) m = std::max(m, p.crossing);
  return m;
}

std::string LongDiagram::code() const {
  std::string s;
  for (const auto& p : passages_) {
    if (!s.empty()) s += ' ';
    s += token(p);
  }
  return s;
}

std::string_view to_string(Transform t) {
  switch (t) {
    case Transform::mirror:
      return "mirror";
    case Transform::reflect:
      return "reflect";
    case Transform::reverse:
      return "reverse";
  }
  return "?";
}

Transform parse_transform(std::string_view text) {
  if (text == "mirror") return Transform::mirror;
  if (text == "reflect") return Transform::reflect;
  if (text == "reverse") return Transform::reverse;
  throw ParseError("unknown transform '" + std::string(text) + "' (expected mirror, reflect or reverse)");
}

LongDiagram transform(const LongDiagram& d, Transform t) {
  std::vector<Passage> ps = d.passages();
  switch (t) {
    case Transform::mirror:
      for (auto& p : ps) {
        if (!is_classical(p.role)) continue;
        p.role = p.role == Role::over ? Role::under : Role::over;
        p.sign = -p.sign;
      }
      break;
    case Transform::reflect:
      for (auto& p : ps) {
        if (is_classical(p.role)) p.sign = -p.sign;
        if (p.role == Role::flat_first) {
          p.role = Role::flat_second;
        } else if (p.role == Role::flat_second) {
          p.role = Role::flat_first;
        }
      }
      break;
    case Transform::reverse:
      std::reverse(ps.begin(), ps.end());
      break;
  }
  return LongDiagram(std::move(ps), d.kind());
}

LongDiagram concat(const LongDiagram& a, const LongDiagram& b) {
  if (a.kind() != b.kind() && !a.empty() && !b.empty()) {
    throw KindError("cannot concatenate a " + std::string(to_string(a.kind())) + " and a " +
                    std::string(to_string(b.kind())) + " diagram");
  }
  const KnotKind kind = a.empty() ? b.kind() : a.kind();
  std::vector<Passage> ps = a.passages();
  const std::uint32_t offset = a.max_id();
  for (Passage p : b.passages()) {
    p.crossing += offset;
    ps.push_back(p);
  }
  return LongDiagram(std::move(ps), kind);
}

LongDiagram descent(const LongDiagram& d) {
  if (d.kind() != KnotKind::flat) throw KindError("descent applies to flat diagrams only");
  std::map<std::uint32_t, int> sign;
  std::vector<Passage> ps;
  for (const auto& p : d.passages()) {
    if (p.is_virtual()) {
      ps.push_back(p);
      continue;
    }
    auto it = sign.find(p.crossing);
    if (it == sign.end()) {
      const int s = p.role == Role::flat_first ? 1 : -1;
      sign.emplace(p.crossing, s);
      ps.push_back({p.crossing, Role::over, s});
    } else {
      ps.push_back({p.crossing, Role::under, it->second});
    }
  }
  return LongDiagram(std::move(ps), KnotKind::virtual_knot);
}

LongDiagram relabel(const LongDiagram& d) {
  std::map<std::uint32_t, std::uint32_t> ids;
  std::vector<Passage> ps = d.passages();
  for (auto& p : ps) {
    auto [it, fresh] = ids.emplace(p.crossing, static_cast<std::uint32_t>(ids.size() + 1));
    p.crossing = it->second;
  }
  return LongDiagram(std::move(ps), d.kind());
}

std::string_view to_string(Move m) {
  switch (m) {
    case Move::r1:
      return "r1";
    case Move::r2:
      return "r2";
    case Move::v1:
      return "v1";
    case Move::v2:
      return "v2";
  }
  return "?";
}

Move parse_move(std::string_view text) {
  if (text == "r1") return Move::r1;
  if (text == "r2") return Move::r2;
  if (text == "v1") return Move::v1;
  if (text == "v2") return Move::v2;
  throw ParseError("unknown move '" + std::string(text) + "' (expected r1, r2, v1 or v2)");
}

std::string MoveSpec::to_string() const {
  std::ostringstream os;
  os << longknot::to_string(move) << "(p=" << p;
  if (move == Move::r2 || move == Move::v2) os << ",q=" << q;
  if (move == Move::r1) os << (over_first ? ",over-first" : ",under-first");
  if (move == Move::r1 || move == Move::r2) os << ",sign=" << (sign > 0 ? '+' : '-');
  if (move == Move::r2 || move == Move::v2) os << (parallel ? ",parallel" : ",antiparallel");
  os << ')';
  return os.str();
}

LongDiagram apply_move(const LongDiagram& d, const MoveSpec& m) {
  const std::size_t len = d.passages().size();
  const bool two = m.move == Move::r2 || m.move == Move::v2;
  if (m.p > len || (two && m.q > len)) {
    throw PreconditionError("move position out of range 0.." + std::to_string(len) + ": " + m.to_string());
  }
  if ((m.move == Move::r1 || m.move == Move::r2) && m.sign != 1 && m.sign != -1) {
    throw PreconditionError("move sign must be +1 or -1");
  }
  const std::uint32_t c = d.max_id() + 1;
  const std::uint32_t e = c + 1;
  std::vector<Passage> at_p;
  std::vector<Passage> at_q;
  switch (m.move) {
    case Move::r1:
      at_p = {{c, Role::over, m.sign}, {c, Role::under, m.sign}};
      if (!m.over_first) std::swap(at_p[0], at_p[1]);
      break;
    case Move::r2:
      at_p = {{c, Role::over, m.sign}, {e, Role::over, -m.sign}};
      if (m.parallel) {
        at_q = {{c, Role::under, m.sign}, {e, Role::under, -m.sign}};
      } else {
        at_q = {{e, Role::under, -m.sign}, {c, Role::under, m.sign}};
      }
      break;
    case Move::v1:
      at_p = {{c, Role::virtual_pass, 0}, {c, Role::virtual_pass, 0}};
      break;
    case Move::v2:
      at_p = {{c, Role::virtual_pass, 0}, {e, Role::virtual_pass, 0}};
      if (m.parallel) {
        at_q = at_p;
      } else {
        at_q = {{e, Role::virtual_pass, 0}, {c, Role::virtual_pass, 0}};
      }
      break;
  }
  if (d.kind() == KnotKind::flat) {
    for (auto& p : at_p) p = flatten(p);
    for (auto& p : at_q) p = flatten(p);
  }

  std::vector<Passage> out;
  out.reserve(len + at_p.size() + at_q.size());
  const auto& src = d.passages();
  for (std::size_t k = 0; k <= len; ++k) {
    if (k == m.p) out.insert(out.end(), at_p.begin(), at_p.end());
    if (two && k == m.q) out.insert(out.end(), at_q.begin(), at_q.end());
    if (k < len) out.push_back(src[k]);
  }
  return LongDiagram(std::move(out), d.kind());
}

MoveSpec random_move(const LongDiagram& d, Move move, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pos(0, d.passages().size());
  std::bernoulli_distribution coin(0.5);
  MoveSpec m;
  m.move = move;
  m.p = pos(rng);
  m.q = pos(rng);
  m.over_first = coin(rng);
  m.sign = coin(rng) ? 1 : -1;
  m.parallel = coin(rng);
  return m;
}

MoveSpec random_move(const LongDiagram& d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  return random_move(d, static_cast<Move>(kind(rng)), rng);
}

LongDiagram perturb(const LongDiagram& d, Move move, std::mt19937_64& rng) {
  return apply_move(d, random_move(d, move, rng));
}

std::vector<std::string> builtin_diagram_names() {
  return {"fly", "flat-fly", "virtual-trefoil-long", "kishino-long", "empty"};
}

LongDiagram builtin_diagram(std::string_view name) {
  if (name == "fly") return LongDiagram::parse("U1- O2+ O1- U2+");
  if (name == "flat-fly") return LongDiagram::parse("L1 L2 R1 R2");
  if (name == "virtual-trefoil-long") return LongDiagram::parse("O1+ O2+ U1+ U2+");
  if (name == "kishino-long") return LongDiagram::parse("U1- O2+ O1- U2+ O3+ U4- U3+ O4-");
  if (name == "empty") return LongDiagram();
  throw PreconditionError("unknown diagram '" + std::string(name) + "'");
}

}  // namespace longknot
