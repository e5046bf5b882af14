#pragma once

#include <compare>
#include <string>

namespace supercong {

/// A p-adic valuation as observed in a truncated ring or in exact arithmetic.
///
/// Finite(t): exactly t.  AtLeast(e): the residue vanished in Z/p^e, so all we
/// know is t >= e.  Infinite: the quantity is exactly zero.
struct Valuation {
  enum class Kind { Finite, AtLeast, Infinite };

  Kind kind = Kind::Finite;
  int value = 0;

  static constexpr Valuation finite(int t) { return {Kind::Finite, t}; }
  static constexpr Valuation at_least(int e) { return {Kind::AtLeast, e}; }
  static constexpr Valuation infinite() { return {Kind::Infinite, 0}; }

  bool operator==(const Valuation&) const = default;

  /// "2", "≥3" or "∞".
  std::string to_string() const;
};

/// True when `observed` certifies at least `required`.  An AtLeast(e) lower
/// bound meets Finite(r) iff e >= r; only Infinite meets Infinite.
bool meets(const Valuation& observed, const Valuation& required) noexcept;

}  // namespace supercong
