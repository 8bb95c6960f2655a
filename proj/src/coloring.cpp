#include "cofinal/coloring.hpp"

#include <algorithm>
#include <bit>

namespace cofinal {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::Const1: return "CONST1";
    case Rule::Parity: return "PARITY";
    case Rule::TopSize: return "TOPSIZE";
    case Rule::MaxGap: return "MAXGAP";
  }
  return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
  if (name == "CONST1") return Rule::Const1;
  if (name == "PARITY") return Rule::Parity;
  if (name == "TOPSIZE") return Rule::TopSize;
  if (name == "MAXGAP") return Rule::MaxGap;
  return std::nullopt;
}

namespace {

Color eval_rule(Rule rule, std::size_t x_size, std::size_t y_size, long long x_max,
                long long y_max) {
  switch (rule) {
    case Rule::Const1:
      return 1;
    case Rule::Parity:
      return (y_size - x_size) % 2 == 0 ? 1 : 2;
    case Rule::TopSize:
      return y_size % 2 == 0 ? 1 : 2;
    case Rule::MaxGap:
      return (y_max - x_max) % 2 == 0 ? 1 : 2;
  }
  return 1;
}

}  // namespace

PairColoring PairColoring::from_rule(Rule rule, int k) {
  if (k < 2) fail(Errc::InvalidInput, "coloring needs k >= 2");
  PairColoring f;
  f.k_ = k;
  f.backing_ = rule;
  return f;
}

PairColoring PairColoring::from_table(int k, int window,
                                      std::map<std::pair<FinSet, FinSet>, Color> entries) {
  if (k < 2) fail(Errc::InvalidInput, "coloring needs k >= 2");
  // completeness validation enumerates every inclusion pair: 3^w - 2^w entries
  if (window < 1 || window > 6) fail(Errc::InvalidInput, "table window out of range");
  for (const auto& [key, color] : entries) {
    const auto& [x, y] = key;
    if (!is_proper_subset(x, y)) fail(Errc::InvalidInput, "table key is not an inclusion pair");
    if (!y.empty() && y.max() >= static_cast<Label>(window)) {
      fail(Errc::InvalidInput, "table key outside declared window");
    }
    if (color < 1 || color > k) fail(Errc::InvalidInput, "table color out of range");
  }
  const auto pairs = canonical_pair_list(window);
  if (entries.size() != pairs.size()) {
    fail(Errc::InvalidInput, "table does not cover every inclusion pair of its window");
  }
  PairColoring f;
  f.k_ = k;
  f.backing_ = Table{window, std::move(entries)};
  return f;
}

PairColoring PairColoring::from_dense_table(int k, int window, const std::vector<Color>& colors) {
  const auto pairs = canonical_pair_list(window);
  if (colors.size() != pairs.size()) fail(Errc::InvalidInput, "dense table size mismatch");
  std::map<std::pair<FinSet, FinSet>, Color> entries;
  for (std::size_t i = 0; i < pairs.size(); ++i) entries[pairs[i]] = colors[i];
  return from_table(k, window, std::move(entries));
}

PairColoring PairColoring::from_constraints(int k,
                                            std::map<std::pair<FinSet, FinSet>, Color> entries,
                                            Color fallback) {
  if (k < 2) fail(Errc::InvalidInput, "coloring needs k >= 2");
  if (fallback < 1 || fallback > k) fail(Errc::InvalidInput, "default color out of range");
  for (const auto& [key, color] : entries) {
    if (!is_proper_subset(key.first, key.second)) {
      fail(Errc::InvalidInput, "constraint key is not an inclusion pair");
    }
    if (color < 1 || color > k) fail(Errc::InvalidInput, "constraint color out of range");
  }
  PairColoring f;
  f.k_ = k;
  f.backing_ = Constraints{std::move(entries), fallback};
  return f;
}

Color PairColoring::eval(const FinSet& x, const FinSet& y) const {
  if (!is_proper_subset(x, y)) {
    fail(Errc::NotProperSubset, "eval requires x proper subset of y");
  }
  if (const Rule* r = std::get_if<Rule>(&backing_)) {
    long long x_max = x.empty() ? -1 : static_cast<long long>(x.max());
    return eval_rule(*r, x.size(), y.size(), x_max, static_cast<long long>(y.max()));
  }
  if (const Table* t = std::get_if<Table>(&backing_)) {
    if (!y.empty() && y.max() >= static_cast<Label>(t->window)) {
      fail(Errc::OutOfDomain, "pair outside the table window");
    }
    auto it = t->entries.find({x, y});
    if (it == t->entries.end()) fail(Errc::OutOfDomain, "pair not covered by the table");
    return it->second;
  }
  const Constraints& c = std::get<Constraints>(backing_);
  auto it = c.entries.find({x, y});
  return it == c.entries.end() ? c.fallback : it->second;
}

Color PairColoring::eval_mask(std::uint64_t x, std::uint64_t y) const {
  if (const Rule* r = std::get_if<Rule>(&backing_)) {
    long long x_max = x == 0 ? -1 : 63 - std::countl_zero(x);
    long long y_max = 63 - std::countl_zero(y);
    return eval_rule(*r, static_cast<std::size_t>(std::popcount(x)),
                     static_cast<std::size_t>(std::popcount(y)), x_max, y_max);
  }
  return eval(FinSet::from_mask(x), FinSet::from_mask(y));
}

std::vector<std::pair<FinSet, FinSet>> canonical_pair_list(int window) {
  std::vector<FinSet> nodes;
  std::vector<Label> elems(static_cast<std::size_t>(window));
  for (int i = 0; i < window; ++i) elems[static_cast<std::size_t>(i)] = static_cast<Label>(i);
  for_each_subset_size_lex(elems, [&](const FinSet& s) {
    nodes.push_back(s);
    return true;
  });
  std::vector<std::pair<FinSet, FinSet>> pairs;
  for (const FinSet& y : nodes) {
    for_each_subset_size_lex(y.labels(), [&](const FinSet& x) {
      if (x.size() < y.size()) pairs.emplace_back(x, y);
      return true;
    });
  }
  return pairs;
}

PartialColoring::PartialColoring(FinSet base) : base_(std::move(base)) {
  if (base_.size() > kMaxBase) fail(Errc::CapExceeded, "coloring base too large");
  values_.assign(std::size_t{1} << base_.size(), 0);
}

std::uint32_t PartialColoring::base_index(const FinSet& subset) const {
  std::uint32_t idx = 0;
  std::size_t pos = 0;
  const auto& base = base_.labels();
  for (Label x : subset.labels()) {
    while (pos < base.size() && base[pos] < x) ++pos;
    if (pos == base.size() || base[pos] != x) {
      fail(Errc::InvalidInput, "subset not within the coloring base");
    }
    idx |= std::uint32_t{1} << pos;
    ++pos;
  }
  return idx;
}

FinSet PartialColoring::subset_for_index(std::uint32_t idx) const {
  std::vector<Label> out;
  const auto& base = base_.labels();
  for (std::size_t pos = 0; pos < base.size(); ++pos) {
    if (idx >> pos & 1) out.push_back(base[pos]);
  }
  return FinSet::from_sorted(std::move(out));
}

void PartialColoring::assign(const FinSet& subset, Color c) {
  if (c < 1 || c > 255) fail(Errc::InvalidInput, "color out of range");
  std::uint32_t idx = base_index(subset);
  if (values_[idx] == 0) ++assigned_;
  values_[idx] = static_cast<std::uint8_t>(c);
}

std::optional<Color> PartialColoring::at(const FinSet& subset) const {
  std::uint32_t idx = base_index(subset);
  if (values_[idx] == 0) return std::nullopt;
  return values_[idx];
}

std::vector<std::pair<FinSet, Color>> PartialColoring::items() const {
  std::vector<std::pair<FinSet, Color>> out;
  for_each_subset_size_lex(base_.labels(), [&](const FinSet& s) {
    std::uint32_t idx = base_index(s);
    if (values_[idx] != 0) out.emplace_back(s, values_[idx]);
    return true;
  });
  return out;
}

bool PartialColoring::submap_of(const PartialColoring& f) const {
  for (const auto& [key, color] : items()) {
    if (!key.subset_of(f.base())) return false;
    auto v = f.at(key);
    if (!v || *v != color) return false;
  }
  return true;
}

CorrectnessResult is_f_correct(const PairColoring& F, const PartialColoring& f,
                               const FinSet& b) {
  if (!f.base().proper_subset_of(b)) {
    fail(Errc::InvalidInput, "correctness check requires f's base proper subset of b");
  }
  for (const auto& [x, color] : f.items()) {
    if (F.eval(x, b) != color) return {false, x};
  }
  return {true, std::nullopt};
}

TotalColoring induced_total_coloring(const PairColoring& F, const FinSet& b, const FinSet& c) {
  if (!b.proper_subset_of(c)) {
    fail(Errc::InvalidInput, "induced coloring requires b proper subset of c");
  }
  TotalColoring g(b);
  for_each_subset_size_lex(b.labels(), [&](const FinSet& x) {
    g.assign(x, F.eval(x, c));
    return true;
  });
  return g;
}

void enumerate_total_colorings(const FinSet& b, int k, std::size_t cap,
                               const std::function<bool(const TotalColoring&)>& visit) {
  if (k < 1) fail(Errc::InvalidInput, "k must be positive");
  if (b.size() > cap) fail(Errc::CapExceeded, "coloring base exceeds enumeration cap");
  std::vector<FinSet> keys;
  for_each_subset_size_lex(b.labels(), [&](const FinSet& s) {
    keys.push_back(s);
    return true;
  });
  std::vector<Color> digits(keys.size(), 1);
  while (true) {
    TotalColoring g(b);
    for (std::size_t i = 0; i < keys.size(); ++i) g.assign(keys[i], digits[i]);
    if (!visit(g)) return;
    // lexicographic successor: rightmost key varies fastest
    std::size_t i = keys.size();
    while (i > 0 && digits[i - 1] == k) {
      digits[i - 1] = 1;
      --i;
    }
    if (i == 0) return;
    ++digits[i - 1];
  }
}

std::vector<TotalColoring> enumerate_total_colorings(const FinSet& b, int k, std::size_t cap) {
  std::vector<TotalColoring> out;
  enumerate_total_colorings(b, k, cap, [&](const TotalColoring& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

DerivedColoring derive_f_H_a(const PairColoring& F, const std::vector<FinSet>& H,
                             const FinSet& a) {
  DerivedColoring out;
  out.f = PartialColoring(a);
  for_each_subset_size_lex(a.labels(), [&](const FinSet& x) {
    if (x == a) return true;
    bool in_H = std::find(H.begin(), H.end(), x) != H.end();
    if (!in_H) return true;
    std::optional<Color> value;
    const FinSet* first_witness = nullptr;
    for (const FinSet& y : H) {
      if (!x.proper_subset_of(y)) continue;
      Color c = F.eval(x, y);
      if (!value) {
        value = c;
        first_witness = &y;
      } else if (*value != c) {
        fail(Errc::WitnessDisagreement,
             "witnesses disagree at " + x.to_string() + ": " + first_witness->to_string() +
                 " gives color " + std::to_string(*value) + ", " + y.to_string() +
                 " gives color " + std::to_string(c));
      }
    }
    if (value) {
      out.f.assign(x, *value);
    } else {
      out.omitted.push_back(x);
    }
    return true;
  });
  return out;
}

}  // namespace cofinal
