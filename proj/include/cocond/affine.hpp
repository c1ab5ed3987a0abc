#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cocond/rational.hpp"

namespace cocond {

// Renders a 1-based index subset as concatenated digits: {1,3} -> "13".
// Families stay small, so single-digit indices are enough to be unambiguous.
std::string subset_indices(uint32_t mask);

// A prevision unknown. Conj/Disj symbols are keyed by the subset of family
// indices they belong to ("x12", "y13"); Named covers ad-hoc targets such as a
// quasi conjunction's "z". Subset masks use bit i-1 for family index i.
struct Symbol {
  enum class Kind : uint8_t { Conj = 0, Disj = 1, Named = 2 };

  Kind kind = Kind::Named;
  uint32_t subset = 0;  // Conj/Disj
  std::string name;     // Named

  static Symbol conj(uint32_t subset_mask) { return {Kind::Conj, subset_mask, {}}; }
  static Symbol disj(uint32_t subset_mask) { return {Kind::Disj, subset_mask, {}}; }
  static Symbol named(std::string n) { return {Kind::Named, 0, std::move(n)}; }

  std::string to_string() const;

  auto operator<=>(const Symbol&) const = default;
};

// Affine expression c0 + sum coeff_s * s over prevision symbols, with exact
// rational coefficients. Zero coefficients are never stored, so equality of
// the representation is equality of the expression.
class Affine {
 public:
  Affine() = default;
  Affine(Rat constant) : constant_(std::move(constant)) {}  // NOLINT: implicit
  Affine(int constant) : constant_(constant) {}             // NOLINT: implicit
  explicit Affine(const Symbol& s) { terms_[s] = 1; }

  const Rat& constant() const { return constant_; }
  const std::map<Symbol, Rat>& terms() const { return terms_; }

  bool is_constant() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && constant_ == 0; }

  Affine& operator+=(const Affine& o);
  Affine& operator-=(const Affine& o);
  friend Affine operator+(Affine l, const Affine& r) { return l += r; }
  friend Affine operator-(Affine l, const Affine& r) { return l -= r; }
  friend Affine operator*(const Rat& k, const Affine& a);
  bool operator==(const Affine& o) const = default;

  // Replaces symbols by rationals (or by whole expressions). Symbols absent
  // from the map stay symbolic.
  Affine substitute(const std::map<Symbol, Rat>& values) const;
  Affine substitute(const std::map<Symbol, Affine>& values) const;

  // Fully numeric value; throws std::invalid_argument naming the first
  // missing symbol otherwise.
  Rat evaluate(const std::map<Symbol, Rat>& values) const;

  // "0", "1/2", "x1", "1 - x1 - x2 + x12", "2/3 x12" etc.
  std::string to_string() const;

 private:
  Rat constant_ = 0;
  std::map<Symbol, Rat> terms_;
};

}  // namespace cocond
