#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cocond {

// Boolean expression over named atoms. Immutable tree with value semantics;
// copying shares nodes. Build with Event::atom / certain / impossible and the
// !, &&, || operators.
class Event {
 public:
  enum class Kind { True, False, Atom, Not, And, Or };

  struct Node {
    Kind kind;
    std::string name;               // Atom only
    std::shared_ptr<const Node> a;  // Not/And/Or
    std::shared_ptr<const Node> b;  // And/Or only
  };

  Event() : node_(certain().node_) {}

  static Event atom(std::string name);
  static Event certain();
  static Event impossible();

  Kind kind() const { return node_->kind; }
  const Node& node() const { return *node_; }

  // Collects atom names referenced by the expression (deduplicated, in first
  // appearance order).
  std::vector<std::string> atoms() const;

  std::string to_string() const;

  friend Event operator!(const Event& e);
  friend Event operator&&(const Event& l, const Event& r);
  friend Event operator||(const Event& l, const Event& r);

 private:
  explicit Event(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Declared atom universe. Order is significant: assignment bit i is the truth
// value of name i, and minterm indices run over all 2^size() assignments.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(std::vector<std::string> names);

  int add(const std::string& name);  // throws on duplicates
  int index(const std::string& name) const;  // throws on unknown atoms
  bool contains(const std::string& name) const;
  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  uint64_t assignment_count() const { return uint64_t{1} << names_.size(); }

 private:
  std::vector<std::string> names_;
};

// Truth value of an expression under one assignment (bit i of `assignment`
// holds atom i). Throws std::invalid_argument on atoms absent from `atoms`.
bool evaluate(const Event& e, const AtomSet& atoms, uint64_t assignment);

// Set of satisfying assignments, stored as a bitset over all 2^k assignments.
class Minterms {
 public:
  Minterms() = default;
  explicit Minterms(uint64_t assignment_count, bool fill = false);

  bool test(uint64_t i) const;
  void set(uint64_t i, bool value);
  uint64_t count() const;
  bool any() const { return count() > 0; }
  bool none() const { return count() == 0; }
  uint64_t size() const { return bit_count_; }

  Minterms operator&(const Minterms& o) const;
  Minterms operator|(const Minterms& o) const;
  Minterms operator~() const;
  bool subset_of(const Minterms& o) const;
  bool operator==(const Minterms& o) const;

 private:
  uint64_t bit_count_ = 0;
  std::vector<uint64_t> words_;
};

Minterms truth_set(const Event& e, const AtomSet& atoms);

// Conjunction of events asserted identically true. Side conditions such as
// incompatibility or containment are written as expressions: H and K
// incompatible is !(H && K), H contained in E is !(H && !E).
class ConstraintSet {
 public:
  ConstraintSet() = default;

  void add(Event e) { asserted_.push_back(std::move(e)); }
  const std::vector<Event>& asserted() const { return asserted_; }

  // Assignments satisfying every constraint.
  Minterms admissible(const AtomSet& atoms) const;

 private:
  std::vector<Event> asserted_;
};

struct ConditionalEvent {
  Event consequent;   // E in E|H
  Event antecedent;   // H in E|H
};

// All of these reason modulo the constraints (only admissible assignments
// count).
bool satisfiable(const Event& e, const AtomSet& atoms, const ConstraintSet& cs);
bool implies(const Event& a, const Event& b, const AtomSet& atoms,
             const ConstraintSet& cs);
bool equivalent(const Event& a, const Event& b, const AtomSet& atoms,
                const ConstraintSet& cs);

// Inclusion order on conditional events: c1's yes-region inside c2's and c2's
// no-region inside c1's.
bool gn_includes(const ConditionalEvent& c1, const ConditionalEvent& c2,
                 const AtomSet& atoms, const ConstraintSet& cs);

// True when the listed events realize all 2^n truth combinations among the
// admissible assignments.
bool events_logically_independent(const std::vector<Event>& events,
                                  const AtomSet& atoms,
                                  const ConstraintSet& cs);

}  // namespace cocond
