#include "longknot/switch.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace longknot {

using json = nlohmann::json;

std::string_view to_string(KnotKind k) { return k == KnotKind::flat ? "flat" : "virtual"; }

KnotKind parse_knot_kind(std::string_view text) {
  if (text == "virtual") return KnotKind::virtual_knot;
  if (text == "flat") return KnotKind::flat;
  throw ParseError("unknown knot kind '" + std::string(text) + "' (expected virtual or flat)");
}

namespace {

template <Coefficient K>
Matrix<K> grid(Variables vars, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<LaurentPoly<K>>> ps;
  for (const auto& r : rows) {
    auto& out = ps.emplace_back();
    for (const auto& e : r) out.push_back(parse_laurent<K>(e, vars));
  }
  return Matrix<K>::from_rows(vars, ps);
}

Quaternion quat(Variables vars, const std::array<std::string, 4>& c) {
  return {parse_laurent<Rational>(c[0], vars), parse_laurent<Rational>(c[1], vars),
          parse_laurent<Rational>(c[2], vars), parse_laurent<Rational>(c[3], vars)};
}

Switch<GaussianRational> budapest() {
  const Variables t{Var::t};
  return make_switch("budapest", KnotKind::virtual_knot, UnitMode::field,  //
                     quat_to_matrix(quat(t, {"1", "1", "0", "0"})),        //
                     quat_to_matrix(quat(t, {"0", "0", "-t", "0"})),       //
                     quat_to_matrix(quat(t, {"0", "0", "t^-1", "0"})),     //
                     quat_to_matrix(quat(t, {"1", "1", "0", "0"})));
}

Switch<Rational> weyl_q() {
  const Variables q{Var::q};
  return make_switch("weyl-q", KnotKind::virtual_knot, UnitMode::field,
                     grid<Rational>(q, {{"1 - q", "-q^3 + 2*q^2 - 1"}, {"0", "1 - q"}}),
                     grid<Rational>(q, {{"q", "1"}, {"0", "1"}}),
                     grid<Rational>(q, {{"1", "-q^3 + 3*q^2 - 2*q - 2 + q^-1"}, {"0", "q"}}),
                     grid<Rational>(q, {{"0", "q^2 - 2*q + q^-1"}, {"0", "0"}}));
}

Switch<GF2> flat_weyl() {
  const Variables x{Var::x};
  const Matrix<GF2> u = grid<GF2>(x, {{"x", "1"}, {"0", "x"}});
  const Matrix<GF2> v = grid<GF2>(x, {{"x", "0"}, {"1", "x"}});
  auto a = inverse(u * v);
  if (!a) throw PreconditionError("uv is not invertible");
  return complete_switch(*a, u, "flat-weyl", KnotKind::flat);
}

Switch<Rational> alexander_spec() {
  const Variables t{Var::t};
  return complete_switch(grid<Rational>(t, {{"2"}}), grid<Rational>(t, {{"1"}}), "alexander-spec");
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class SwitchReader {
 public:
  explicit SwitchReader(std::string_view text) : text_(text) {
    try {
      doc_ = json::parse(text);
    } catch (const json::parse_error& e) {
      auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
      throw ParseError("malformed switch document: " + std::string(e.what()), line, col);
    }
    if (!doc_.is_object()) throw SchemaError("switch document must be an object");
  }

  AnySwitch read(bool validate) {
    const std::string name = field("name").is_string() ? field("name").get<std::string>() : "unnamed";
    const KnotKind kind = parse_knot_kind(string_field("kind"));
    const CoefficientDomain dom = parse_coefficient_domain(string_field("coefficients"));
    const std::string entry = string_field("entry-type");
    UnitMode mode = UnitMode::field;
    if (doc_.contains("unit-mode")) mode = parse_unit_mode(string_field("unit-mode"));
    const json& vs = field("variables");
    if (!vs.is_array()) throw SchemaError("'variables' must be a list of names");
    std::vector<std::string> names;
    for (const auto& v : vs) {
      if (!v.is_string()) throw SchemaError("'variables' must be a list of names");
      names.push_back(v.get<std::string>());
    }
    vars_ = Variables::parse(names);

    if (entry != "quaternion" && entry != "matrix") {
      throw SchemaError("'entry-type' must be quaternion or matrix, got '" + entry + "'");
    }
    if (entry == "quaternion" && dom != CoefficientDomain::gaussian) {
      throw SchemaError("quaternion entries require coefficients 'gaussian'");
    }
    const bool has_c = doc_.contains("C");
    const bool has_d = doc_.contains("D");
    if (!doc_.contains("A") || !doc_.contains("B")) throw SchemaError("switch needs at least blocks 'A' and 'B'");
    if (has_c != has_d) throw SchemaError("give both 'C' and 'D' or neither");

    switch (dom) {
      case CoefficientDomain::rational:
        return build<Rational>(name, kind, mode, has_c, validate);
      case CoefficientDomain::gaussian:
        if (entry == "quaternion") return build_quaternion(name, kind, mode, has_c, validate);
        return build<GaussianRational>(name, kind, mode, has_c, validate);
      case CoefficientDomain::gf2:
        return build<GF2>(name, kind, mode, has_c, validate);
    }
    throw SchemaError("unreachable coefficient domain");
  }

 private:
  const json& field(const char* key) const {
    if (!doc_.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    return doc_.at(key);
  }

  std::string string_field(const char* key) const {
    const json& f = field(key);
    if (!f.is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
    return f.get<std::string>();
  }

  // Parses one polynomial string, mapping grammar errors to a document position.
  template <Coefficient K>
  LaurentPoly<K> poly(const json& j, const std::string& where) const {
    if (!j.is_string()) throw SchemaError(where + ": entries must be polynomial strings");
    const std::string s = j.get<std::string>();
    try {
      return parse_laurent<K>(s, vars_);
    } catch (const ParseError& e) {
      std::size_t off = text_.find('"' + s + '"');
      if (off == std::string_view::npos) throw ParseError(where + ": " + e.what());
      auto [line, col] = locate(text_, off + 1 + (e.column() ? e.column() - 1 : 0));
      throw ParseError(where + ": " + e.what(), line, col);
    }
  }

  template <Coefficient K>
  Matrix<K> matrix_block(const char* key) const {
    const json& g = field(key);
    if (!g.is_array() || g.empty()) throw SchemaError(std::string("block '") + key + "' must be a non-empty grid");
    const std::size_t n = g.size();
    Matrix<K> m(n, n, vars_);
    for (std::size_t i = 0; i < n; ++i) {
      if (!g[i].is_array() || g[i].size() != n) {
        throw SchemaError(std::string("block '") + key + "' must be square");
      }
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = poly<K>(g[i][j], std::string(key) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
      }
    }
    return m;
  }

  Matrix<GaussianRational> quaternion_block(const char* key) const {
    const json& q = field(key);
    if (!q.is_array() || q.size() != 4) throw SchemaError(std::string("block '") + key + "' must be a 4-tuple");
    std::array<LaurentPoly<Rational>, 4> c;
    for (std::size_t k = 0; k < 4; ++k) c[k] = poly<Rational>(q[k], std::string(key) + "[" + std::to_string(k) + "]");
    return quat_to_matrix(Quaternion(c[0], c[1], c[2], c[3]));
  }

  template <Coefficient K>
  static Switch<K> finish(const std::string& name, KnotKind kind, UnitMode mode, Matrix<K> a, Matrix<K> b,
                          std::optional<std::pair<Matrix<K>, Matrix<K>>> cd, bool validate) {
    if (!cd) {
      if (!validate) {
        cd = completion_blocks(a, b);
        if (!cd) throw PreconditionError("cannot complete a switch with singular A or B");
      } else {
        const Matrix<K> id = Matrix<K>::identity(a.rows(), a.vars());
        if (a.is_square() && b.is_square() && a.rows() == b.rows()) {
          const std::pair<const char*, const Matrix<K>*> parts[] = {{"A", &a}, {"B", &b}, {"I-A", nullptr}};
          for (const auto& [label, m] : parts) {
            const LaurentPoly<K> det = determinant(m ? *m : id - a);
            if (det.is_zero()) throw InvalidSwitchError(std::string(label) + "-invertible", "switch '" + name + "'");
          }
        }
        return complete_switch(a, b, name, kind, mode);
      }
    }
    Switch<K> s(name, kind, mode, std::move(a), std::move(b), std::move(cd->first), std::move(cd->second));
    if (validate) validate_switch(s);
    return s;
  }

  template <Coefficient K>
  AnySwitch build(const std::string& name, KnotKind kind, UnitMode mode, bool has_cd, bool validate) const {
    std::optional<std::pair<Matrix<K>, Matrix<K>>> cd;
    if (has_cd) cd.emplace(matrix_block<K>("C"), matrix_block<K>("D"));
    return finish<K>(name, kind, mode, matrix_block<K>("A"), matrix_block<K>("B"), std::move(cd), validate);
  }

  AnySwitch build_quaternion(const std::string& name, KnotKind kind, UnitMode mode, bool has_cd,
                             bool validate) const {
    using G = GaussianRational;
    std::optional<std::pair<Matrix<G>, Matrix<G>>> cd;
    if (has_cd) cd.emplace(quaternion_block("C"), quaternion_block("D"));
    return finish<G>(name, kind, mode, quaternion_block("A"), quaternion_block("B"), std::move(cd), validate);
  }

  std::string_view text_;
  json doc_;
  Variables vars_;
};

template <Coefficient K>
CoefficientDomain domain_of() {
  if constexpr (std::is_same_v<K, Rational>) {
    return CoefficientDomain::rational;
  } else if constexpr (std::is_same_v<K, GaussianRational>) {
    return CoefficientDomain::gaussian;
  } else {
    return CoefficientDomain::gf2;
  }
}

}  // namespace

std::vector<std::string> builtin_switch_names() { return {"budapest", "weyl-q", "flat-weyl", "alexander-spec"}; }

AnySwitch builtin_switch(std::string_view name) {
  if (name == "budapest") return budapest();
  if (name == "weyl-q") return weyl_q();
  if (name == "flat-weyl") return flat_weyl();
  if (name == "alexander-spec") return alexander_spec();
  throw PreconditionError("unknown switch '" + std::string(name) + "'");
}

AnySwitch parse_switch(std::string_view text, bool validate) { return SwitchReader(text).read(validate); }

AnySwitch load_switch(const std::string& path, bool validate) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open switch file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_switch(ss.str(), validate);
}

std::string dump_switch(const AnySwitch& any) {
  return std::visit(
      [](const auto& s) {
        using K = typename std::decay_t<decltype(s)>::Mat::Coeff;
        json doc;
        doc["name"] = s.name();
        doc["kind"] = std::string(to_string(s.kind()));
        doc["coefficients"] = std::string(to_string(domain_of<K>()));
        doc["variables"] = s.vars().names();
        doc["entry-type"] = "matrix";
        doc["unit-mode"] = std::string(to_string(s.unit_mode()));
        auto block = [](const Matrix<K>& m) {
          json g = json::array();
          for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(render(m(i, j)));
            g.push_back(row);
          }
          return g;
        };
        doc["A"] = block(s.a());
        doc["B"] = block(s.b());
        doc["C"] = block(s.c());
        doc["D"] = block(s.d());
        return doc.dump(2);
      },
      any);
}

const std::string& switch_name(const AnySwitch& s) {
  return std::visit([](const auto& x) -> const std::string& { return x.name(); }, s);
}

KnotKind switch_kind(const AnySwitch& s) {
  return std::visit([](const auto& x) { return x.kind(); }, s);
}

AnySwitch with_unit_mode(const AnySwitch& s, UnitMode mode) {
  return std::visit([mode](const auto& x) -> AnySwitch { return x.with_unit_mode(mode); }, s);
}

template class Switch<Rational>;
template class Switch<GaussianRational>;
template class Switch<GF2>;

}  // namespace longknot
