#include <doctest.h>

#include <map>

#include "longknot/diagram.hpp"

using namespace longknot;

namespace {

LongDiagram code(std::string_view text) { return LongDiagram::parse(text); }

// Each id must occur exactly twice with matching roles and signs.
bool well_formed(const LongDiagram& d) {
  try {
    LongDiagram copy(d.passages(), d.kind());
    return copy == d;
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace

TEST_CASE("parsing") {
  const auto fly = code("U1- O2+ O1- U2+");
  CHECK(fly.kind() == KnotKind::virtual_knot);
  CHECK(fly.crossing_count() == 2);
  CHECK(fly.semi_arc_count() == 5);
  CHECK(fly.code() == "U1- O2+ O1- U2+");
  CHECK(fly == builtin_diagram("fly"));

  const auto ff = code("L1 L2 R1 R2");
  CHECK(ff.kind() == KnotKind::flat);
  CHECK(ff.semi_arc_count() == 5);

  const auto empty = builtin_diagram("empty");
  CHECK(empty.empty());
  CHECK(empty.crossing_count() == 0);
  CHECK(empty.semi_arc_count() == 1);

  const auto virt = code("O1+ V7 U1+ V7");
  CHECK(virt.crossing_count() == 1);
  CHECK(virt.semi_arc_count() == 3);
  CHECK(virt.crossing_order() == std::vector<std::uint32_t>{1});
  CHECK(virt.max_id() == 7);
  CHECK(code("  O1+\tU1+  ").code() == "O1+ U1+");
  CHECK(LongDiagram::parse("", KnotKind::flat).kind() == KnotKind::flat);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(code("O1+ U1-"), doctest::Contains("sign mismatch"), ParseError);
  CHECK_THROWS_AS(code("O1+"), ParseError);
  CHECK_THROWS_AS(code("O1+ U1+ O1+"), ParseError);
  CHECK_THROWS_AS(code("O1+ O1+"), ParseError);
  CHECK_THROWS_AS(code("X1+"), ParseError);
  CHECK_THROWS_AS(code("O1"), ParseError);
  CHECK_THROWS_AS(code("O0+ U0+"), ParseError);
  CHECK_THROWS_AS(code("V1 O1+ U1+"), ParseError);
  CHECK_THROWS_AS(code("L1 R1 O2+ U2+"), ParseError);
  CHECK_THROWS_AS(code("L1 L1"), ParseError);
  CHECK_THROWS_AS(code("L1+ R1"), ParseError);
  CHECK_THROWS_AS(LongDiagram::parse("L1 R1", KnotKind::virtual_knot), KindError);
}

TEST_CASE("built-in fixtures") {
  for (const auto& name : builtin_diagram_names()) {
    CAPTURE(name);
    const auto d = builtin_diagram(name);
    CHECK(well_formed(d));
    CHECK(code(d.code()) == d);
  }
  CHECK(builtin_diagram("virtual-trefoil-long").code() == "O1+ O2+ U1+ U2+");
  CHECK(builtin_diagram("kishino-long").crossing_count() == 4);
  CHECK_THROWS_AS(builtin_diagram("unknot"), Error);
}

TEST_CASE("transforms") {
  const auto fly = builtin_diagram("fly");
  CHECK(transform(fly, Transform::mirror).code() == "O1+ U2- U1+ O2-");
  CHECK(transform(fly, Transform::reflect).code() == "U1+ O2- O1+ U2-");
  CHECK(transform(fly, Transform::reverse).code() == "U2+ O1- O2+ U1-");
  CHECK(transform(code("L1 L2 R1 R2"), Transform::reflect).code() == "R1 R2 L1 L2");
  // flat crossings carry no over/under data for the mirror to swap
  CHECK(transform(code("L1 L2 R1 R2"), Transform::mirror).code() == "L1 L2 R1 R2");
  CHECK(transform(code("O1+ V2 U1+ V2"), Transform::reverse).code() == "V2 U1+ V2 O1+");

  for (const auto& name : builtin_diagram_names()) {
    const auto d = builtin_diagram(name);
    for (Transform t : {Transform::mirror, Transform::reflect, Transform::reverse}) {
      CAPTURE(name);
      CHECK(transform(transform(d, t), t) == d);
      CHECK(well_formed(transform(d, t)));
    }
    CHECK(transform(transform(d, Transform::mirror), Transform::reflect) ==
          transform(transform(d, Transform::reflect), Transform::mirror));
  }
  CHECK(parse_transform("reverse") == Transform::reverse);
  CHECK_THROWS_AS(parse_transform("rotate"), ParseError);
}

TEST_CASE("concatenation") {
  const auto fly = builtin_diagram("fly");
  const auto bar = transform(fly, Transform::reflect);
  const auto empty = builtin_diagram("empty");
  CHECK(concat(fly, empty) == fly);
  CHECK(concat(empty, fly) == fly);

  const auto fb = concat(fly, bar);
  CHECK(fb.code() == "U1- O2+ O1- U2+ U3+ O4- O3+ U4-");
  CHECK(fb.crossing_count() == 4);
  CHECK(fb.semi_arc_count() == fly.semi_arc_count() + bar.semi_arc_count() - 1);
  CHECK(concat(bar, fly) != fb);

  const auto tre = builtin_diagram("virtual-trefoil-long");
  CHECK(concat(concat(fly, bar), tre) == concat(fly, concat(bar, tre)));
  CHECK(concat(code("O1+ V5 U1+ V5"), code("V1 V1")).code() == "O1+ V5 U1+ V5 V6 V6");
  CHECK_THROWS_AS(concat(fly, builtin_diagram("flat-fly")), KindError);
}

TEST_CASE("descent") {
  const auto d = descent(builtin_diagram("flat-fly"));
  CHECK(d.kind() == KnotKind::virtual_knot);
  CHECK(d.code() == "O1+ O2+ U1+ U2+");
  // the first-met passage has the second role: negative crossing
  CHECK(descent(code("R1 L1")).code() == "O1- U1-");
  CHECK(descent(code("L1 V2 R1 V2")).code() == "O1+ V2 U1+ V2");
  CHECK_THROWS_AS(descent(builtin_diagram("fly")), KindError);
}

TEST_CASE("relabel") {
  CHECK(relabel(code("O7+ V3 U7+ V3")).code() == "O1+ V2 U1+ V2");
  CHECK(relabel(builtin_diagram("fly")) == builtin_diagram("fly"));
}

TEST_CASE("explicit moves") {
  const auto fly = builtin_diagram("fly");

  MoveSpec r1{Move::r1, 2, 0, true, -1, false};
  const auto k = apply_move(fly, r1);
  CHECK(k.code() == "U1- O2+ O3- U3- O1- U2+");
  CHECK(k.crossing_count() == 3);

  MoveSpec r2{Move::r2, 1, 3, false, 1, false};
  const auto r = apply_move(fly, r2);
  CHECK(r.crossing_count() == 4);
  CHECK(well_formed(r));

  MoveSpec v1{Move::v1, 4, 0, true, 1, false};
  CHECK(apply_move(fly, v1).code() == "U1- O2+ O1- U2+ V3 V3");
  MoveSpec v2{Move::v2, 0, 2, true, 1, true};
  const auto v = apply_move(fly, v2);
  CHECK(v.crossing_count() == 2);
  CHECK(v.passages().size() == 8);

  MoveSpec bad{Move::r1, 9, 0, true, 1, false};
  CHECK_THROWS_AS(apply_move(fly, bad), PreconditionError);
  MoveSpec bad_sign{Move::r1, 0, 0, true, 0, false};
  CHECK_THROWS_AS(apply_move(fly, bad_sign), PreconditionError);
  const auto flat_kink = apply_move(builtin_diagram("flat-fly"), r1);
  CHECK(flat_kink.kind() == KnotKind::flat);
  CHECK(flat_kink.crossing_count() == 3);

  MoveSpec v1_start{Move::v1, 0, 0, true, 1, false};
  CHECK(apply_move(builtin_diagram("empty"), v1_start).code() == "V1 V1");
}

TEST_CASE("r2 inserts a cancelling pair") {
  const auto empty = builtin_diagram("empty");
  for (bool parallel : {false, true}) {
    for (int sign : {1, -1}) {
      MoveSpec m{Move::r2, 0, 0, true, sign, parallel};
      const auto d = apply_move(empty, m);
      CAPTURE(d.code());
      CHECK(d.crossing_count() == 2);
      CHECK(well_formed(d));
      std::map<std::uint32_t, int> signs;
      for (const auto& p : d.passages()) signs[p.crossing] = p.sign;
      REQUIRE(signs.size() == 2);
      CHECK(signs.begin()->second == -std::next(signs.begin())->second);
    }
  }
}

TEST_CASE("random moves keep diagrams well formed") {
  std::mt19937_64 rng(99);
  for (const auto& name : builtin_diagram_names()) {
    auto d = builtin_diagram(name);
    for (int n = 0; n < 40; ++n) {
      const MoveSpec m = random_move(d, rng);
      CAPTURE(m.to_string());
      d = apply_move(d, m);
      CHECK(well_formed(d));
      CHECK(code(d.code()) == d);
    }
  }
  auto ff = builtin_diagram("flat-fly");
  for (int n = 0; n < 20; ++n) ff = perturb(ff, Move::r2, rng);
  CHECK(ff.kind() == KnotKind::flat);
  CHECK(ff.crossing_count() == 42);
}

TEST_CASE("move names") {
  CHECK(parse_move("v2") == Move::v2);
  CHECK(to_string(Move::r1) == "r1");
  CHECK_THROWS_AS(parse_move("r3"), ParseError);
}
