#include "longknot/laurent.hpp"

namespace longknot {

std::optional<Var> var_from_name(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  for (int i = 0; i < kMaxVars; ++i) {
    if (kVarNames[i] == name[0]) return static_cast<Var>(i);
  }
  return std::nullopt;
}

Variables Variables::parse(const std::vector<std::string>& names) {
  Variables vs;
  for (const auto& n : names) {
    auto v = var_from_name(n);
    if (!v) throw ParseError("unknown variable '" + n + "' (expected one of t, q, x, y, a)");
    vs = vs.with(*v);
  }
  return vs;
}

std::vector<Var> Variables::list() const {
  std::vector<Var> out;
  for (int i = 0; i < kMaxVars; ++i) {
    if (contains_index(i)) out.push_back(static_cast<Var>(i));
  }
  return out;
}

std::vector<std::string> Variables::names() const {
  std::vector<std::string> out;
  for (Var v : list()) out.emplace_back(1, kVarNames[static_cast<int>(v)]);
  return out;
}

std::string Variables::to_string() const {
  std::string s = "{";
  for (const auto& n : names()) {
    if (s.size() > 1) s += ",";
    s += n;
  }
  return s + "}";
}

CoefficientDomain parse_coefficient_domain(std::string_view name) {
  if (name == "rational") return CoefficientDomain::rational;
  if (name == "gaussian") return CoefficientDomain::gaussian;
  if (name == "gf2") return CoefficientDomain::gf2;
  throw ParseError("unknown coefficient domain '" + std::string(name) + "'");
}

std::string_view to_string(CoefficientDomain d) {
  switch (d) {
    case CoefficientDomain::rational:
      return Rational::kDomainName;
    case CoefficientDomain::gaussian:
      return GaussianRational::kDomainName;
    case CoefficientDomain::gf2:
      return GF2::kDomainName;
  }
  return "?";
}

template class LaurentPoly<Rational>;
template class LaurentPoly<GaussianRational>;
template class LaurentPoly<GF2>;

}  // namespace longknot
