// Acceptance report: one PASS/FAIL line per criterion, sub-checks indented
// below it. Every comparison is exact: polynomials are compared as
// canonical associate classes (field mode: nonzero constants times powers of
// the variable; content mode: Gaussian-integer units times powers), matrices
// entry by entry. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "longknot/fuzz.hpp"
#include "support.hpp"

using namespace lk_test;

namespace {

int g_passed = 0;
int g_total = 0;

struct Item {
  std::string label;
  bool ok = false;
  std::string detail;
};

class Criterion {
 public:
  explicit Criterion(std::string title, double budget_s = 10.0)
      : title_(std::move(title)), budget_s_(budget_s), start_(std::chrono::steady_clock::now()) {}

  void check(std::string label, bool ok, std::string detail = "") {
    items_.push_back({std::move(label), ok, std::move(detail)});
  }
  bool ok() const {
    for (const auto& i : items_) {
      if (!i.ok) return false;
    }
    return !items_.empty();
  }
  void print(const std::string& id) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    char budget[64];
    std::snprintf(budget, sizeof budget, "%.2f s of %.0f s", secs, budget_s_);
    check("runtime budget", secs <= budget_s_, budget);
    std::printf("criterion %-3s %s  %s (%.2f s)\n", id.c_str(), ok() ? "PASS" : "FAIL", title_.c_str(), secs);
    for (const auto& i : items_) {
      std::printf("    %s %s%s%s\n", i.ok ? "ok  " : "FAIL", i.label.c_str(), i.detail.empty() ? "" : ": ",
                  i.detail.c_str());
    }
    std::fflush(stdout);
    ++g_total;
    if (ok()) ++g_passed;
  }

 private:
  std::string title_;
  double budget_s_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Item> items_;
};

const Switch<GaussianRational>& budapest() {
  static const auto s = std::get<Switch<GaussianRational>>(builtin_switch("budapest"));
  return s;
}
const Switch<Rational>& weyl() {
  static const auto s = std::get<Switch<Rational>>(builtin_switch("weyl-q"));
  return s;
}
const Switch<GF2>& flat_weyl() {
  static const auto s = std::get<Switch<GF2>>(builtin_switch("flat-weyl"));
  return s;
}

LongDiagram knot(std::string_view name) { return builtin_diagram(name); }
LongDiagram mirror(const LongDiagram& d) { return transform(d, Transform::mirror); }
LongDiagram reflect(const LongDiagram& d) { return transform(d, Transform::reflect); }

template <Coefficient K>
UnitNormalForm<K> value(const LongDiagram& d, const Switch<K>& s, Variant v, std::size_t r = 0,
                        UnitMode mode = UnitMode::field) {
  return codim_det(build_presentation(d, s, v), s, r, mode);
}

template <Coefficient K>
void expect(Criterion& c, const std::string& label, const UnitNormalForm<K>& got, std::string_view want,
            Variables vars, UnitMode mode = UnitMode::field) {
  const bool ok = same_class(got, want, vars, mode);
  c.check(label, ok, "got " + got.to_string() + ", want " + std::string(want));
}

template <Coefficient K>
void expect_zero(Criterion& c, const std::string& label, const UnitNormalForm<K>& got) {
  c.check(label, got.is_zero(), "got " + got.to_string());
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
  return out;
}

void criterion_1() {
  Criterion c("fly presentation block patterns, tolerance exact");
  const auto fly = knot("fly");
  const std::array<std::pair<Variant, std::vector<std::string>>, 4> want{{
      {Variant::M, {}},
      {Variant::Mhat, {"1", "0", "0", "0", "-1"}},
      {Variant::Mo, {"1", "0", "0", "0", "0"}},
      {Variant::Mn, {"0", "0", "0", "0", "1"}},
  }};
  for (const auto& [v, extra] : want) {
    const auto p = build_presentation(fly, v);
    std::string rows = p.render();
    std::replace(rows.begin(), rows.end(), '\n', '/');
    c.check(std::string(to_string(v)), symbols(p) == fly_with(extra), rows);
  }
  c.print("1");
}

void criterion_2() {
  Criterion c("quaternionic switch on the fly, unsimplified matrices, tolerance exact up to units");
  const auto fly = knot("fly");
  const auto& s = budapest();
  const auto m = build_presentation(fly, Variant::M).expand(s);
  const auto o = build_presentation(fly, Variant::Mo).expand(s);
  c.check("matrix sizes", m.rows() == 8 && m.cols() == 10 && o.rows() == 10 && o.cols() == 10,
          m.shape() + ", " + o.shape());
  expect(c, "p(0)", value(fly, s, Variant::M), "2 + t^-2", kT);
  expect_zero(c, "phat(0)", value(fly, s, Variant::Mhat));
  expect(c, "op(0)", value(fly, s, Variant::Mo), "2 + 5*t^-2 + 2*t^-4", kT);
  expect(c, "np(0)", value(fly, s, Variant::Mn), "2 + 5*t^-2 + 2*t^-4", kT);
  bool ones = true;
  for (Variant v : kVariants) {
    for (std::size_t r = 1; r <= 2; ++r) ones = ones && value(fly, s, v, r).is_one();
  }
  c.check("every codim 1..2 value is 1", ones);
  c.print("2");
}

void criterion_3() {
  Criterion c("quantum Weyl table for F, -F, Fbar, -Fbar, tolerance exact up to units");
  const auto fly = knot("fly");
  const std::array<std::pair<const char*, LongDiagram>, 4> row{
      {{"F", fly}, {"-F", mirror(fly)}, {"Fbar", reflect(fly)}, {"-Fbar", mirror(reflect(fly))}}};
  const std::array<const char*, 4> p0{"1", "2 - q", "1", "2*q - 1"};
  const std::array<const char*, 4> o0{"2 - q", "2 - q", "2*q - 1", "2*q - 1"};
  for (std::size_t k = 0; k < 4; ++k) {
    const std::string n = row[k].first;
    expect(c, n + " p0", value(row[k].second, weyl(), Variant::M), p0[k], kQ);
    expect_zero(c, n + " phat0", value(row[k].second, weyl(), Variant::Mhat));
    expect(c, n + " op0", value(row[k].second, weyl(), Variant::Mo), o0[k], kQ);
    expect(c, n + " np0", value(row[k].second, weyl(), Variant::Mn), o0[k], kQ);
  }
  c.print("3");
}

void criterion_4() {
  Criterion c("reverse(F) and reflect(F) profiles agree, codim 0..2, tolerance exact up to units");
  const auto fly = knot("fly");
  const auto rev = transform(fly, Transform::reverse);
  const auto ref = reflect(fly);
  c.check("quaternionic switch", invariant_profile(rev, budapest(), 2).same_values(invariant_profile(ref, budapest(), 2)));
  c.check("weyl-q", invariant_profile(rev, weyl(), 2).same_values(invariant_profile(ref, weyl(), 2)));
  c.print("4");
}

void criterion_5() {
  Criterion c("F.Fbar versus Fbar.F, tolerance exact up to units");
  const auto fly = knot("fly");
  const auto fb = concat(fly, reflect(fly));
  const auto bf = concat(reflect(fly), fly);
  const auto& s = budapest();
  const auto a = value(fb, s, Variant::M);
  const auto b = value(bf, s, Variant::M);
  expect(c, "p0(F.Fbar)", a, "6*t^4 + 15*t^2 + 6", kT);
  expect(c, "p0(Fbar.F)", b, "3*t^4 + 15/2*t^2 + 3", kT);
  c.check("field mode: canonical-equal", a == b);
  const auto six = canonicalize(gpoly("6*t^4 + 15*t^2 + 6"), UnitMode::gaussian_integer_content);
  const auto three = canonicalize(gpoly("3*t^4 + 15/2*t^2 + 3"), UnitMode::gaussian_integer_content);
  c.check("content mode on the listed polynomials: contents differ by exactly 2",
          six.primitive == three.primitive && six.content == three.content * GaussianRational(2),
          "contents " + six.content.to_string() + " and " + three.content.to_string());
  const auto ac = value(fb, s, Variant::M, 0, UnitMode::gaussian_integer_content);
  const auto bc = value(bf, s, Variant::M, 0, UnitMode::gaussian_integer_content);
  const bool factor_two = ac.primitive == bc.primitive &&
                          (ac.content == bc.content * GaussianRational(2) || bc.content == ac.content * GaussianRational(2));
  c.check("content mode: contents differ by exactly 2", factor_two,
          "contents " + ac.content.to_string() + " and " + bc.content.to_string());
  c.print("5");
}

void criterion_6() {
  Criterion c("triple products, tolerance exact up to units", 60.0);
  const auto fly = knot("fly");
  const auto fb = concat(fly, reflect(fly));
  const auto left = concat(fb, fly);
  const auto right = concat(fly, fb);
  const auto& s = budapest();
  const char* p0 = "12*t^8 + 60*t^6 + 99*t^4 + 60*t^2 + 12";
  expect(c, "p0((F.Fbar).F)", value(left, s, Variant::M), p0, kT);
  expect(c, "p0(F.(F.Fbar))", value(right, s, Variant::M), p0, kT);
  const auto l1 = value(left, s, Variant::M, 1);
  const auto r1 = value(right, s, Variant::M, 1);
  expect(c, "p1((F.Fbar).F)", l1, "9*t^2 + 9", kT);
  expect(c, "p1(F.(F.Fbar))", r1, "2*t^4 + 5*t^2 + 2", kT);
  c.check("p1 values distinct", !(l1 == r1));
  const auto listed = gpoly("12*t^8 + 60*t^6 + 99*t^4 + 60*t^2 + 12");
  c.check("computed p1 divide listed p0", laurent_divides(l1.representative(), listed) && laurent_divides(r1.representative(), listed));
  c.check("listed 9(t^2 + 1) cannot divide listed p0", !laurent_divides(gpoly("9*t^2 + 9"), listed));
  c.print("6");
}

void criterion_7() {
  Criterion c("flat fly table and descent, tolerance exact up to units");
  const auto ff = knot("flat-fly");
  const auto bar = reflect(ff);
  const auto& s = flat_weyl();
  expect(c, "p0(FF)", value(ff, s, Variant::M), "x^2 + 1", kX);
  expect(c, "p0(FFbar)", value(bar, s, Variant::M), "x^6 + 1", kX);
  for (const auto& [n, d] : {std::pair{"FF", ff}, std::pair{"FFbar", bar}}) {
    expect_zero(c, std::string("phat0(") + n + ")", value(d, s, Variant::Mhat));
    expect(c, std::string("op0(") + n + ")", value(d, s, Variant::Mo), "x^8 + x^6 + x^2 + 1", kX);
    expect(c, std::string("np0(") + n + ")", value(d, s, Variant::Mn), "x^8 + x^6 + x^2 + 1", kX);
  }
  const auto d = descent(ff);
  c.check("descent(FF) code", d.code() == "O1+ O2+ U1+ U2+", d.code());
  c.check("profile of descent(FF) equals profile of FF, codim 0..2",
          invariant_profile(d, s, 2).same_values(invariant_profile(ff, s, 2)));
  c.print("7");
}

void criterion_8() {
  Criterion c("virtual trefoil closure, tolerance exact up to units, orientation t (no inversion)");
  expect(c, "phat0", value(knot("virtual-trefoil-long"), budapest(), Variant::Mhat), "1 + 2*t^2 + t^4", kT);
  c.print("8");
}

void criterion_9() {
  Criterion c("Kishino fixture, tolerance exact up to units");
  const auto k = knot("kishino-long");
  c.check("fixture", true, k.code());
  expect_zero(c, "phat0", value(k, budapest(), Variant::Mhat));
  expect(c, "phat1", value(k, budapest(), Variant::Mhat, 1), "1 + 5/2*t^2 + t^4", kT);
  c.print("9");
}

KnotKind kind_of(const AnySwitch& s) {
  return std::visit([](const auto& x) { return x.kind(); }, s);
}

template <Coefficient K>
bool switch_identities(const Switch<K>& s) {
  validate_switch(s);
  const auto [lhs, rhs] = algebra_relation_sides(s.a(), s.b());
  bool ok = satisfies_yang_baxter(s) && lhs == rhs;
  if (s.kind() == KnotKind::flat) ok = ok && (s.matrix() * s.matrix()).is_identity();
  return ok;
}

void criterion_10a() {
  Criterion c("switch identities: Yang-Baxter, S^2 = I for flat switches, algebra relation; exact");
  for (const auto& name : builtin_switch_names()) {
    c.check(name, std::visit([](const auto& s) { return switch_identities(s); }, builtin_switch(name)));
  }
  c.print("10a");
}

struct FuzzTotals {
  std::size_t combos = 0;
  std::size_t mismatches = 0;
  std::size_t scalar_agree = 0;
  std::size_t scalar_differ = 0;
  std::size_t divisibility = 0;
  std::size_t sequences = 0;
  std::vector<std::size_t> coverage = std::vector<std::size_t>(3, 0);
  std::vector<Item> lines;
};

FuzzTotals run_fuzz_suite() {
  FuzzConfig cfg;
  cfg.sequences = 100;
  cfg.max_moves = 6;
  cfg.r_max = 2;
  cfg.seed = 42;
  cfg.work_limit = 15'000'000;
  cfg.classify_work_limit = 30'000'000;
  cfg.check_divisibility = true;
  FuzzTotals t;
  for (const auto& dn : builtin_diagram_names()) {
    const LongDiagram d = builtin_diagram(dn);
    for (const auto& sn : builtin_switch_names()) {
      const AnySwitch any = builtin_switch(sn);
      if (d.kind() == KnotKind::flat && kind_of(any) != KnotKind::flat) continue;
      const auto start = std::chrono::steady_clock::now();
      const FuzzReport rep = std::visit([&](const auto& s) { return fuzz_invariance(d, s, cfg); }, any);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      ++t.combos;
      t.sequences += rep.sequences;
      t.mismatches += rep.profile_mismatches;
      t.scalar_agree += rep.scalar_agreeing;
      t.scalar_differ += rep.scalar_differing;
      t.divisibility += rep.divisibility_failures;
      for (std::size_t r = 0; r < rep.checked_up_to.size(); ++r) t.coverage[r] += rep.checked_up_to[r];
      std::ostringstream line;
      const std::size_t unclassified = rep.profile_mismatches - rep.scalar_agreeing - rep.scalar_differing;
      line << rep.profile_mismatches << " mismatches (scalar level: " << rep.scalar_agreeing << " agree, "
           << rep.scalar_differing << " differ, " << unclassified << " over the work cap), divisibility failures "
           << rep.divisibility_failures << ", compared through codim 0/1/2: " << join(rep.checked_up_to) << ", "
           << static_cast<int>(secs) << " s";
      t.lines.push_back({dn + " x " + sn, rep.profile_mismatches == 0, line.str()});
      for (const auto& f : rep.failures) {
        if (f.scalar_agrees && !*f.scalar_agrees) t.lines.push_back({"  scalar-level difference", false, f.code});
      }
    }
  }
  return t;
}

void criterion_10bc() {
  Criterion b("fuzz invariance: 100 sequences of 1..6 moves, seed 42, codim 0..2, exact up to units");
  const FuzzTotals t = run_fuzz_suite();
  for (const auto& l : t.lines) b.check(l.label, l.ok, l.detail);
  b.check("total profile mismatches", t.mismatches == 0,
          std::to_string(t.mismatches) + " over " + std::to_string(t.combos) + " combinations; classified at scalar level: " +
              std::to_string(t.scalar_agree) + " agree, " + std::to_string(t.scalar_differ) + " differ");
  b.print("10b");

  Criterion c("divisibility p | op and p | np on every fuzzed virtual diagram of the 10b run, codim 0..2; exact");
  c.check("failures", t.divisibility == 0, std::to_string(t.divisibility));
  c.check("diagrams compared through codim 0/1/2", t.coverage[0] == t.sequences, join(t.coverage));
  c.print("10c");
}

void criterion_10d() {
  Criterion c("product formula on all built-in pairs at codim 0, exact up to units");
  std::size_t pairs = 0;
  std::size_t bad = 0;
  for (const auto& a : builtin_diagram_names()) {
    for (const auto& b : builtin_diagram_names()) {
      const LongDiagram x = builtin_diagram(a);
      const LongDiagram y = builtin_diagram(b);
      if (x.kind() != y.kind()) continue;
      for (const auto& sn : builtin_switch_names()) {
        const AnySwitch any = builtin_switch(sn);
        if (x.kind() == KnotKind::flat && kind_of(any) != KnotKind::flat) continue;
        ++pairs;
        const bool ok = std::visit([&](const auto& s) { return check_product_formula(x, y, s).ok(); }, any);
        if (!ok) {
          ++bad;
          c.check(a + " . " + b + " under " + sn, false);
        }
      }
    }
  }
  c.check("pairs checked", bad == 0, std::to_string(pairs) + " (diagram pair, switch) combinations");
  c.print("10d");
}

template <Coefficient K>
std::size_t algorithm_disagreements(Variables vars, std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  for (int k = 0; k < 200; ++k) {
    const auto m = random_matrix<K>(rng, n, vars, 0.6);
    if (determinant(m, DetAlgorithm::bareiss) != determinant(m, DetAlgorithm::cofactor)) ++bad;
  }
  return bad;
}

void criterion_10e() {
  Criterion c("Bareiss and cofactor determinants agree on 200 random matrices per domain; exact");
  c.check("rational 5x5", algorithm_disagreements<Rational>(kT, 101, 5) == 0);
  c.check("gaussian 5x5", algorithm_disagreements<GaussianRational>(kT, 102, 5) == 0);
  c.check("gf2 5x5", algorithm_disagreements<GF2>(kX, 103, 5) == 0);
  c.print("10e");
}

void criterion_10f() {
  Criterion c("quaternion representation is a ring homomorphism on 100 random pairs; exact");
  std::mt19937_64 rng(104);
  auto q = [&] {
    return Quaternion(random_poly<Rational>(rng, kT, 2), random_poly<Rational>(rng, kT, 2),
                      random_poly<Rational>(rng, kT, 2), random_poly<Rational>(rng, kT, 2));
  };
  std::size_t bad = 0;
  for (int n = 0; n < 100; ++n) {
    const auto a = q();
    const auto b = q();
    if (quat_to_matrix(a * b) != quat_to_matrix(a) * quat_to_matrix(b) ||
        quat_to_matrix(a + b) != quat_to_matrix(a) + quat_to_matrix(b)) {
      ++bad;
    }
  }
  c.check("failing pairs", bad == 0, std::to_string(bad));
  c.print("10f");
}

void criterion_10g() {
  Criterion c("canonical form ignores 100 random unit multiples; exact");
  std::mt19937_64 rng(105);
  std::uniform_int_distribution<int> shift(-5, 5);
  std::uniform_int_distribution<int> pick(0, 3);
  const std::array<GaussianRational, 4> units{GaussianRational(1), GaussianRational(-1), GaussianRational::i(),
                                              -GaussianRational::i()};
  std::size_t bad = 0;
  for (int n = 0; n < 100; ++n) {
    const auto p = random_poly<GaussianRational>(rng, kT, 3);
    const auto mono = LaurentPoly<GaussianRational>::variable(kT, Var::t, shift(rng));
    const auto u = mono.scaled(units[pick(rng)]);
    const auto f = mono.scaled(GaussianRational(Rational(Integer(2 * shift(rng) + 11), Integer(3)), Rational(1)));
    if (canonicalize(p * u, UnitMode::gaussian_integer_content) != canonicalize(p, UnitMode::gaussian_integer_content) ||
        canonicalize(p * f) != canonicalize(p)) {
      ++bad;
    }
  }
  c.check("failing multiples", bad == 0, std::to_string(bad));
  c.print("10g");
}

}  // namespace

int main() {
  for (auto* f : {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
                  criterion_8, criterion_9, criterion_10a, criterion_10bc, criterion_10d, criterion_10e,
                  criterion_10f, criterion_10g}) {
    try {
      f();
    } catch (const std::exception& e) {
      std::printf("criterion FAIL  aborted by exception: %s\n", e.what());
      ++g_total;
    }
  }
  std::printf("%d of %d criterion lines passed\n", g_passed, g_total);
  return g_passed == g_total ? 0 : 1;
}
