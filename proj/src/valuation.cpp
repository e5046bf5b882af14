#include "supercong/valuation.hpp"

namespace supercong {

std::string Valuation::to_string() const {
  switch (kind) {
    case Kind::Finite:
      return std::to_string(value);
    case Kind::AtLeast:
      return "≥" + std::to_string(value);
    case Kind::Infinite:
      break;
  }
  return "∞";
}

bool meets(const Valuation& observed, const Valuation& required) noexcept {
  if (observed.kind == Valuation::Kind::Infinite) return true;
  if (required.kind == Valuation::Kind::Infinite) return false;
  return observed.value >= required.value;
}

}  // namespace supercong
