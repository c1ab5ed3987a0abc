#include "cocond/affine.hpp"

#include <stdexcept>

namespace cocond {

std::string subset_indices(uint32_t mask) {
  std::string out;
  for (int i = 0; i < 32; ++i)
    if (mask & (uint32_t{1} << i)) out += std::to_string(i + 1);
  return out;
}

std::string Symbol::to_string() const {
  switch (kind) {
    case Kind::Conj:
      return "x" + subset_indices(subset);
    case Kind::Disj:
      return "y" + subset_indices(subset);
    case Kind::Named:
      return name;
  }
  return "?";
}

Affine& Affine::operator+=(const Affine& o) {
  constant_ += o.constant_;
  for (const auto& [s, c] : o.terms_) {
    Rat& mine = terms_[s];
    mine += c;
    if (mine == 0) terms_.erase(s);
  }
  return *this;
}

Affine& Affine::operator-=(const Affine& o) {
  constant_ -= o.constant_;
  for (const auto& [s, c] : o.terms_) {
    Rat& mine = terms_[s];
    mine -= c;
    if (mine == 0) terms_.erase(s);
  }
  return *this;
}

Affine operator*(const Rat& k, const Affine& a) {
  Affine r;
  if (k == 0) return r;
  r.constant_ = k * a.constant_;
  for (const auto& [s, c] : a.terms_) r.terms_[s] = k * c;
  return r;
}

Affine Affine::substitute(const std::map<Symbol, Rat>& values) const {
  Affine r(constant_);
  for (const auto& [s, c] : terms_) {
    auto it = values.find(s);
    if (it == values.end()) {
      Rat& mine = r.terms_[s];
      mine += c;
      if (mine == 0) r.terms_.erase(s);
    } else {
      r.constant_ += c * it->second;
    }
  }
  return r;
}

Affine Affine::substitute(const std::map<Symbol, Affine>& values) const {
  Affine r(constant_);
  for (const auto& [s, c] : terms_) {
    auto it = values.find(s);
    if (it == values.end())
      r += c * Affine(s);
    else
      r += c * it->second;
  }
  return r;
}

Rat Affine::evaluate(const std::map<Symbol, Rat>& values) const {
  Rat out = constant_;
  for (const auto& [s, c] : terms_) {
    auto it = values.find(s);
    if (it == values.end())
      throw std::invalid_argument("no value for symbol " + s.to_string());
    out += c * it->second;
  }
  return out;
}

std::string Affine::to_string() const {
  std::string out;
  bool first = true;
  if (constant_ != 0 || terms_.empty()) {
    out = cocond::to_string(constant_);
    first = false;
  }
  for (const auto& [s, c] : terms_) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += cocond::to_string(mag) + " ";
    out += s.to_string();
  }
  return out;
}

}  // namespace cocond
