#include "longknot/normal_form.hpp"

namespace longknot {

std::string_view to_string(UnitMode m) {
  return m == UnitMode::field ? "field" : "gaussian-integer-content";
}

UnitMode parse_unit_mode(std::string_view text) {
  if (text == "field") return UnitMode::field;
  if (text == "content" || text == "gaussian-integer-content") return UnitMode::gaussian_integer_content;
  throw ParseError("unknown unit mode '" + std::string(text) + "' (expected field or gaussian-integer-content)");
}

}  // namespace longknot
