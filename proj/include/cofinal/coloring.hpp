#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cofinal/finset.hpp"

namespace cofinal {

// Colors are 1-based: {1..k}.
using Color = int;

enum class Rule { Const1, Parity, TopSize, MaxGap };

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);

// Total deterministic color assignment on inclusion pairs (x,y), x proper
// subset of y. Backed by a named rule, an explicit table over a declared
// window, or a constraint map with a default color.
class PairColoring {
public:
  struct Table {
    int window = 0;
    // key (x,y) in size-lex order of x within y; value color
    std::map<std::pair<FinSet, FinSet>, Color> entries;
  };
  struct Constraints {
    std::map<std::pair<FinSet, FinSet>, Color> entries;
    Color fallback = 1;
  };

  static PairColoring from_rule(Rule rule, int k = 2);
  // Requires a complete table: every inclusion pair inside the window.
  static PairColoring from_table(int k, int window,
                                 std::map<std::pair<FinSet, FinSet>, Color> entries);
  // Dense variant used by sweeps: colors indexed by canonical_pair_index.
  static PairColoring from_dense_table(int k, int window, const std::vector<Color>& colors);
  static PairColoring from_constraints(int k, std::map<std::pair<FinSet, FinSet>, Color> entries,
                                       Color fallback);

  int k() const noexcept { return k_; }

  // Color of the pair (x,y). Requires x proper subset of y and the pair
  // inside the declared domain (table backings only).
  Color eval(const FinSet& x, const FinSet& y) const;

  // Mask fast path over window labels; same contract as eval.
  Color eval_mask(std::uint64_t x, std::uint64_t y) const;

  bool is_rule() const { return std::holds_alternative<Rule>(backing_); }
  const Rule* rule() const { return std::get_if<Rule>(&backing_); }
  const Table* table() const { return std::get_if<Table>(&backing_); }
  const Constraints* constraints() const { return std::get_if<Constraints>(&backing_); }

private:
  int k_ = 2;
  std::variant<Rule, Table, Constraints> backing_;
};

// Canonical enumeration of the inclusion pairs of P({0..w-1}): y in
// (size,lex) order, then x over proper subsets of y in (size,lex) order.
// Gives the index layout of dense tables; count is 3^w - 2^w.
std::vector<std::pair<FinSet, FinSet>> canonical_pair_list(int window);

// Partial coloring of the subsets of `base`. Assignments are stored densely,
// indexed by submask over the base positions (0 = unassigned).
class PartialColoring {
public:
  PartialColoring() = default;
  explicit PartialColoring(FinSet base);

  static constexpr std::size_t kMaxBase = 20;

  const FinSet& base() const noexcept { return base_; }

  void assign(const FinSet& subset, Color c);  // subset must be within base
  std::optional<Color> at(const FinSet& subset) const;
  std::size_t domain_size() const noexcept { return assigned_; }
  bool total() const noexcept { return assigned_ == values_.size(); }

  // keys in (size,lex) order
  std::vector<std::pair<FinSet, Color>> items() const;

  // f' submap of f: same base family, every assignment of f' agrees with f.
  bool submap_of(const PartialColoring& f) const;

  // dense access for scan code
  std::uint32_t base_index(const FinSet& subset) const;
  FinSet subset_for_index(std::uint32_t idx) const;
  Color value_at_index(std::uint32_t idx) const { return values_[idx]; }
  std::size_t index_count() const noexcept { return values_.size(); }

  bool operator==(const PartialColoring&) const = default;

private:
  FinSet base_;
  std::vector<std::uint8_t> values_;
  std::size_t assigned_ = 0;
};

// Total coloring: a partial coloring covering every subset of its base.
using TotalColoring = PartialColoring;

struct CorrectnessResult {
  bool correct = true;
  std::optional<FinSet> first_violation;  // least violating x in (size,lex)
};

// b is f-correct: every x in dom(f) has eval(F,x,b) = f(x).
// Requires f.base proper subset of b.
CorrectnessResult is_f_correct(const PairColoring& F, const PartialColoring& f, const FinSet& b);

// g on all subsets of b with g(x) = eval(F,x,c); c is g-correct by
// construction. Requires b proper subset of c.
TotalColoring induced_total_coloring(const PairColoring& F, const FinSet& b, const FinSet& c);

// Exactly k^(2^|b|) distinct total colorings, lexicographic over the
// (size,lex)-ordered subset keys. Throws CapExceeded when |b| > cap.
void enumerate_total_colorings(const FinSet& b, int k, std::size_t cap,
                               const std::function<bool(const TotalColoring&)>& visit);
std::vector<TotalColoring> enumerate_total_colorings(const FinSet& b, int k,
                                                     std::size_t cap = 4);

struct DerivedColoring {
  PartialColoring f;
  std::vector<FinSet> omitted;  // x in H below a with no witness in H
};

// f^H_a of the approximation machinery: domain {x proper subset of a, x in H},
// value = color of (x,y) for a witness y in H above x. Disagreeing witnesses
// raise WitnessDisagreement carrying the offending triple in the message.
DerivedColoring derive_f_H_a(const PairColoring& F, const std::vector<FinSet>& H,
                             const FinSet& a);

}  // namespace cofinal
