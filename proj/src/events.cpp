#include "cocond/events.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cocond {

namespace {

std::shared_ptr<const Event::Node> make_node(Event::Kind kind, std::string name,
                                             std::shared_ptr<const Event::Node> a,
                                             std::shared_ptr<const Event::Node> b) {
  auto n = std::make_shared<Event::Node>();
  n->kind = kind;
  n->name = std::move(name);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

void collect_atoms(const Event::Node& n, std::vector<std::string>& out,
                   std::unordered_set<std::string>& seen) {
  switch (n.kind) {
    case Event::Kind::Atom:
      if (seen.insert(n.name).second) out.push_back(n.name);
      break;
    case Event::Kind::Not:
      collect_atoms(*n.a, out, seen);
      break;
    case Event::Kind::And:
    case Event::Kind::Or:
      collect_atoms(*n.a, out, seen);
      collect_atoms(*n.b, out, seen);
      break;
    default:
      break;
  }
}

bool eval_node(const Event::Node& n, const AtomSet& atoms, uint64_t assignment) {
  switch (n.kind) {
    case Event::Kind::True:
      return true;
    case Event::Kind::False:
      return false;
    case Event::Kind::Atom:
      return (assignment >> atoms.index(n.name)) & 1;
    case Event::Kind::Not:
      return !eval_node(*n.a, atoms, assignment);
    case Event::Kind::And:
      return eval_node(*n.a, atoms, assignment) && eval_node(*n.b, atoms, assignment);
    case Event::Kind::Or:
      return eval_node(*n.a, atoms, assignment) || eval_node(*n.b, atoms, assignment);
  }
  throw std::logic_error("unreachable");
}

int precedence(Event::Kind k) {
  switch (k) {
    case Event::Kind::Or:
      return 1;
    case Event::Kind::And:
      return 2;
    default:
      return 3;
  }
}

void print_node(const Event::Node& n, std::string& out) {
  auto child = [&](const Event::Node& c, int min_prec) {
    if (precedence(c.kind) < min_prec) {
      out += '(';
      print_node(c, out);
      out += ')';
    } else {
      print_node(c, out);
    }
  };
  switch (n.kind) {
    case Event::Kind::True:
      out += "TRUE";
      break;
    case Event::Kind::False:
      out += "FALSE";
      break;
    case Event::Kind::Atom:
      out += n.name;
      break;
    case Event::Kind::Not:
      out += '!';
      child(*n.a, 3);
      break;
    case Event::Kind::And:
      child(*n.a, 2);
      out += " & ";
      child(*n.b, 2);
      break;
    case Event::Kind::Or:
      child(*n.a, 1);
      out += " v ";
      child(*n.b, 1);
      break;
  }
}

}  // namespace

Event Event::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty atom name");
  return Event(make_node(Kind::Atom, std::move(name), nullptr, nullptr));
}

Event Event::certain() {
  static const Event e(make_node(Kind::True, "", nullptr, nullptr));
  return e;
}

Event Event::impossible() {
  static const Event e(make_node(Kind::False, "", nullptr, nullptr));
  return e;
}

std::vector<std::string> Event::atoms() const {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  collect_atoms(*node_, out, seen);
  return out;
}

std::string Event::to_string() const {
  std::string out;
  print_node(*node_, out);
  return out;
}

Event operator!(const Event& e) {
  return Event(make_node(Event::Kind::Not, "", e.node_, nullptr));
}

Event operator&&(const Event& l, const Event& r) {
  return Event(make_node(Event::Kind::And, "", l.node_, r.node_));
}

Event operator||(const Event& l, const Event& r) {
  return Event(make_node(Event::Kind::Or, "", l.node_, r.node_));
}

AtomSet::AtomSet(std::vector<std::string> names) {
  for (auto& n : names) add(n);
}

int AtomSet::add(const std::string& name) {
  if (contains(name)) throw std::invalid_argument("duplicate atom: " + name);
  if (names_.size() >= 24)
    throw std::invalid_argument("too many atoms (enumeration limit is 24)");
  names_.push_back(name);
  return static_cast<int>(names_.size()) - 1;
}

int AtomSet::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::invalid_argument("unknown atom: " + name);
  return static_cast<int>(it - names_.begin());
}

bool AtomSet::contains(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

bool evaluate(const Event& e, const AtomSet& atoms, uint64_t assignment) {
  return eval_node(e.node(), atoms, assignment);
}

Minterms::Minterms(uint64_t assignment_count, bool fill)
    : bit_count_(assignment_count),
      words_((assignment_count + 63) / 64, fill ? ~uint64_t{0} : 0) {
  if (!words_.empty() && bit_count_ % 64 != 0)
    words_.back() &= (uint64_t{1} << (bit_count_ % 64)) - 1;
}

bool Minterms::test(uint64_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

void Minterms::set(uint64_t i, bool value) {
  if (value)
    words_[i / 64] |= uint64_t{1} << (i % 64);
  else
    words_[i / 64] &= ~(uint64_t{1} << (i % 64));
}

uint64_t Minterms::count() const {
  uint64_t total = 0;
  for (uint64_t w : words_) total += static_cast<uint64_t>(__builtin_popcountll(w));
  return total;
}

Minterms Minterms::operator&(const Minterms& o) const {
  Minterms r(bit_count_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
  return r;
}

Minterms Minterms::operator|(const Minterms& o) const {
  Minterms r(bit_count_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
  return r;
}

Minterms Minterms::operator~() const {
  Minterms r(bit_count_);
  for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  if (!r.words_.empty() && bit_count_ % 64 != 0)
    r.words_.back() &= (uint64_t{1} << (bit_count_ % 64)) - 1;
  return r;
}

bool Minterms::subset_of(const Minterms& o) const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool Minterms::operator==(const Minterms& o) const {
  return bit_count_ == o.bit_count_ && words_ == o.words_;
}

Minterms truth_set(const Event& e, const AtomSet& atoms) {
  Minterms m(atoms.assignment_count());
  for (uint64_t a = 0; a < atoms.assignment_count(); ++a)
    if (evaluate(e, atoms, a)) m.set(a, true);
  return m;
}

Minterms ConstraintSet::admissible(const AtomSet& atoms) const {
  Minterms m(atoms.assignment_count(), true);
  for (const Event& e : asserted_) m = m & truth_set(e, atoms);
  return m;
}

bool satisfiable(const Event& e, const AtomSet& atoms, const ConstraintSet& cs) {
  return (truth_set(e, atoms) & cs.admissible(atoms)).any();
}

bool implies(const Event& a, const Event& b, const AtomSet& atoms,
             const ConstraintSet& cs) {
  return (truth_set(a, atoms) & cs.admissible(atoms))
      .subset_of(truth_set(b, atoms));
}

bool equivalent(const Event& a, const Event& b, const AtomSet& atoms,
                const ConstraintSet& cs) {
  return implies(a, b, atoms, cs) && implies(b, a, atoms, cs);
}

bool gn_includes(const ConditionalEvent& c1, const ConditionalEvent& c2,
                 const AtomSet& atoms, const ConstraintSet& cs) {
  return implies(c1.consequent && c1.antecedent, c2.consequent && c2.antecedent,
                 atoms, cs) &&
         implies(!c2.consequent && c2.antecedent, !c1.consequent && c1.antecedent,
                 atoms, cs);
}

bool events_logically_independent(const std::vector<Event>& events,
                                  const AtomSet& atoms, const ConstraintSet& cs) {
  if (events.size() > 20)
    throw std::invalid_argument("too many events for independence check");
  Minterms ok = cs.admissible(atoms);
  std::vector<Minterms> truth;
  truth.reserve(events.size());
  for (const Event& e : events) truth.push_back(truth_set(e, atoms));
  std::unordered_set<uint64_t> combos;
  for (uint64_t a = 0; a < atoms.assignment_count(); ++a) {
    if (!ok.test(a)) continue;
    uint64_t key = 0;
    for (size_t i = 0; i < truth.size(); ++i)
      if (truth[i].test(a)) key |= uint64_t{1} << i;
    combos.insert(key);
  }
  return combos.size() == (uint64_t{1} << events.size());
}

}  // namespace cocond
