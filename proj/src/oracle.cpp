#include "cofinal/oracle.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace cofinal {

// ---------------------------------------------------------------------------
// search_cofinal_homogeneous

std::optional<CofinalSearchResult> search_cofinal_homogeneous(
    const FinPoset& S, int k, const std::function<Color(std::size_t, std::size_t)>& F,
    const std::vector<std::size_t>& interior, std::size_t min_chain) {
  const std::size_t n = S.size();
  if (n > 24) fail(Errc::SizeLimit, "search limited to posets of 24 elements");
  if (n == 0) return std::nullopt;

  // upset masks including the element itself
  std::vector<std::uint32_t> up(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    up[i] |= std::uint32_t{1} << i;
    for (std::size_t j = 0; j < n; ++j) {
      if (S.less(i, j)) up[i] |= std::uint32_t{1} << j;
    }
  }

  std::vector<std::size_t> order(n);  // topological, for the chain DP
  {
    std::vector<std::size_t> preds(n, 0);
    for (std::size_t i = 0; i < n; ++i) preds[i] = S.predecessor_count(i);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return preds[a] < preds[b]; });
  }

  for (Color c = 1; c <= k; ++c) {
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      bool dominated = true;
      for (std::size_t x : interior) {
        if (!(up[x] & mask)) {
          dominated = false;
          break;
        }
      }
      if (!dominated) continue;

      bool homogeneous = true;
      for (std::size_t i = 0; i < n && homogeneous; ++i) {
        if (!(mask >> i & 1)) continue;
        for (std::size_t j = 0; j < n && homogeneous; ++j) {
          if (i != j && (mask >> j & 1) && S.less(i, j) && F(i, j) != c) homogeneous = false;
        }
      }
      if (!homogeneous) continue;

      std::vector<std::size_t> depth(n, 0);
      std::size_t longest = 0;
      for (std::size_t idx : order) {
        if (!(mask >> idx & 1)) continue;
        std::size_t d = 1;
        for (std::size_t j = 0; j < n; ++j) {
          if ((mask >> j & 1) && S.less(j, idx)) d = std::max(d, depth[j] + 1);
        }
        depth[idx] = d;
        longest = std::max(longest, d);
      }
      if (longest < min_chain) continue;

      CofinalSearchResult result;
      result.color = c;
      result.chain_length = longest;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) result.H.push_back(i);
      }
      return result;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// sweep_colorings

namespace {

FinPoset subset_lattice_poset(int window, std::vector<FinSet>* nodes_out) {
  std::vector<FinSet> nodes;
  std::vector<Label> elems(static_cast<std::size_t>(window));
  for (int i = 0; i < window; ++i) elems[static_cast<std::size_t>(i)] = static_cast<Label>(i);
  for_each_subset_size_lex(elems, [&](const FinSet& s) {
    nodes.push_back(s);
    return true;
  });
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    labels.push_back(nodes[i].to_string());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (nodes[i].proper_subset_of(nodes[j])) edges.emplace_back(i, j);
    }
  }
  if (nodes_out) *nodes_out = nodes;
  return FinPoset(nodes.size(), edges, std::move(labels));
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

SweepReport sweep_colorings(const SweepOptions& options) {
  if (options.window < 1 || options.window > 4) {
    fail(Errc::InvalidInput, "sweep window out of range");
  }
  if (options.k < 2 || options.k > 4) fail(Errc::InvalidInput, "sweep needs 2 <= k <= 4");

  std::vector<FinSet> nodes;
  FinPoset poset = subset_lattice_poset(options.window, &nodes);
  const auto pair_list = canonical_pair_list(options.window);
  const std::size_t n = nodes.size();

  auto node_index = [&](const FinSet& s) {
    return static_cast<std::size_t>(
        std::distance(nodes.begin(), std::find(nodes.begin(), nodes.end(), s)));
  };
  std::vector<std::pair<std::size_t, std::size_t>> pair_nodes;
  for (const auto& [x, y] : pair_list) pair_nodes.emplace_back(node_index(x), node_index(y));
  std::vector<std::vector<int>> pair_id(n, std::vector<int>(n, -1));
  for (std::size_t p = 0; p < pair_nodes.size(); ++p) {
    pair_id[pair_nodes[p].first][pair_nodes[p].second] = static_cast<int>(p);
  }

  std::vector<std::size_t> interior;
  if (options.interior) {
    interior = *options.interior;
    for (std::size_t x : interior) {
      if (x >= n) fail(Errc::InvalidInput, "interior node out of range");
    }
  } else {
    interior.resize(n);
    for (std::size_t i = 0; i < n; ++i) interior[i] = i;
  }

  std::uint64_t total;
  if (options.exhaustive) {
    total = checked_pow(static_cast<std::uint64_t>(options.k), pair_list.size(),
                        std::uint64_t{1} << 20);
    if (total > (std::uint64_t{1} << 20)) {
      fail(Errc::CapExceeded, "exhaustive sweep would exceed the coloring cap");
    }
  } else {
    if (options.samples == 0) fail(Errc::InvalidInput, "sampled sweep needs a sample count");
    total = options.samples;
  }

  // coloring #idx: exhaustive -> base-k digits, pair 0 least significant;
  // sampled -> splitmix64 stream seeded per index for job-count independence.
  auto make_table = [&](std::uint64_t idx, std::vector<Color>& table) {
    table.resize(pair_list.size());
    if (options.exhaustive) {
      std::uint64_t v = idx;
      for (std::size_t p = 0; p < table.size(); ++p) {
        table[p] = static_cast<Color>(v % options.k) + 1;
        v /= options.k;
      }
    } else {
      std::uint64_t state = options.seed ^ (0xd1b54a32d192ed03ULL * (idx + 1));
      for (std::size_t p = 0; p < table.size(); ++p) {
        table[p] = static_cast<Color>(splitmix64(state) % options.k) + 1;
      }
    }
  };

  struct Chunk {
    std::uint64_t found = 0, none = 0;
    std::map<Color, std::uint64_t> by_color;
    std::map<std::size_t, std::uint64_t> histogram;
  };
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  std::vector<Chunk> chunks(jobs);

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Chunk& chunk) {
    std::vector<Color> table;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      make_table(idx, table);
      auto result = search_cofinal_homogeneous(
          poset, options.k,
          [&](std::size_t i, std::size_t j) { return table[static_cast<std::size_t>(pair_id[i][j])]; },
          interior, options.min_chain);
      if (result) {
        ++chunk.found;
        ++chunk.by_color[result->color];
        ++chunk.histogram[result->H.size()];
      } else {
        ++chunk.none;
      }
    }
  };

  if (jobs == 1) {
    run_range(0, total, chunks[0]);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < jobs; ++j) {
      std::uint64_t lo = total * j / jobs;
      std::uint64_t hi = total * (j + 1) / jobs;
      threads.emplace_back(run_range, lo, hi, std::ref(chunks[j]));
    }
    for (auto& t : threads) t.join();
  }

  SweepReport report;
  report.options = options;
  report.coloring_count = total;
  for (const Chunk& chunk : chunks) {
    report.found += chunk.found;
    report.none += chunk.none;
    for (const auto& [c, v] : chunk.by_color) report.found_by_color[c] += v;
    for (const auto& [s, v] : chunk.histogram) report.h_size_histogram[s] += v;
  }
  return report;
}

// ---------------------------------------------------------------------------
// remark_monotonicity_sweep

namespace {

struct PairSlot {
  std::uint64_t part = 0;
  std::uint64_t ground = 0;
  std::uint64_t free_mask = 0;
  bool vacuous = false;                  // no admissible quantified ground
  std::vector<std::uint64_t> keys;       // subsets of part, (size,lex)
  std::uint64_t code_count = 1;          // (k+1)^keys
  // decoded assignment lists per f-code, flattened
  std::vector<detail::MaskAssignment> decoded;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> decoded_span;  // offset,count
  // drop-one-key generators: (code, smaller code), every assigned key
  std::vector<std::pair<std::uint32_t, std::uint32_t>> drops;
};

}  // namespace

MonotonicityReport remark_monotonicity_sweep(const MonotonicityOptions& options) {
  const int w = options.window;
  const int k = options.k;
  if (w < 1 || w > 3) fail(Errc::InvalidInput, "exhaustive monotonicity sweep needs window <= 3");
  if (k < 2 || k > 3) fail(Errc::InvalidInput, "monotonicity sweep needs k in {2,3}");
  Window win(w, options.reserve);

  const auto pair_list = canonical_pair_list(w);
  std::vector<std::vector<int>> pair_id(std::size_t{1} << w,
                                        std::vector<int>(std::size_t{1} << w, -1));
  for (std::size_t p = 0; p < pair_list.size(); ++p) {
    pair_id[pair_list[p].first.to_mask()][pair_list[p].second.to_mask()] = static_cast<int>(p);
  }

  const std::uint64_t window_mask = win.mask();
  const std::uint64_t reserve = static_cast<std::uint64_t>(win.reserve);

  // all anchored pairs (a,A), a <= A <= window
  std::vector<PairSlot> slots;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> slot_index;
  for (std::uint64_t A = 0; A <= window_mask; ++A) {
    if ((A & window_mask) != A) continue;
    for (std::uint64_t a = A;; a = (a - 1) & A) {
      PairSlot slot;
      slot.part = a;
      slot.ground = A;
      slot.free_mask = window_mask & ~A;
      slot.vacuous =
          static_cast<std::uint64_t>(std::popcount(slot.free_mask)) < reserve;
      for_each_submask_size_lex(a, [&](std::uint64_t key) {
        slot.keys.push_back(key);
        return true;
      });
      for (std::size_t i = 0; i < slot.keys.size(); ++i) {
        slot.code_count *= static_cast<std::uint64_t>(k + 1);
      }
      if (!slot.vacuous) {
        // decode every f-code once; digit d at key j: 0 absent, else color d
        slot.decoded_span.resize(slot.code_count);
        for (std::uint64_t code = 0; code < slot.code_count; ++code) {
          std::uint32_t offset = static_cast<std::uint32_t>(slot.decoded.size());
          std::uint64_t v = code;
          for (std::size_t j = 0; j < slot.keys.size(); ++j) {
            int digit = static_cast<int>(v % (k + 1));
            v /= (k + 1);
            if (digit > 0) slot.decoded.push_back({slot.keys[j], digit});
          }
          slot.decoded_span[code] = {offset,
                                     static_cast<std::uint32_t>(slot.decoded.size()) - offset};
        }
        std::uint64_t pow = 1;
        for (std::size_t j = 0; j < slot.keys.size(); ++j) {
          for (std::uint64_t code = 0; code < slot.code_count; ++code) {
            int digit = static_cast<int>(code / pow % (k + 1));
            if (digit > 0) {
              slot.drops.push_back({static_cast<std::uint32_t>(code),
                                    static_cast<std::uint32_t>(code - pow * digit)});
            }
          }
          pow *= (k + 1);
        }
      }
      slots.push_back(std::move(slot));
      slot_index[{a, A}] = slots.size() - 1;
      if (a == 0) break;
    }
  }

  // covering edges between non-vacuous slots, with f-code translation
  struct Covering {
    std::size_t from, to;
    std::vector<std::uint32_t> inject;  // from-code -> to-code
  };
  std::vector<Covering> coverings;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (slots[s].vacuous) continue;
    for (int e = 0; e < w; ++e) {
      std::uint64_t bit = std::uint64_t{1} << e;
      if (slots[s].ground & bit) continue;
      for (std::uint64_t part2 : {slots[s].part, slots[s].part | bit}) {
        std::size_t target = slot_index.at({part2, slots[s].ground | bit});
        if (slots[target].vacuous) continue;  // consequent constant-true
        Covering cov;
        cov.from = s;
        cov.to = target;
        cov.inject.resize(slots[s].code_count);
        // key j of the source maps to its position among the target's keys
        std::vector<std::size_t> key_pos(slots[s].keys.size());
        for (std::size_t j = 0; j < slots[s].keys.size(); ++j) {
          auto it = std::find(slots[target].keys.begin(), slots[target].keys.end(),
                              slots[s].keys[j]);
          key_pos[j] = static_cast<std::size_t>(std::distance(slots[target].keys.begin(), it));
        }
        for (std::uint64_t code = 0; code < slots[s].code_count; ++code) {
          std::uint64_t v = code, translated = 0;
          for (std::size_t j = 0; j < slots[s].keys.size(); ++j) {
            std::uint64_t digit = v % (k + 1);
            v /= (k + 1);
            std::uint64_t pow = 1;
            for (std::size_t t = 0; t < key_pos[j]; ++t) pow *= (k + 1);
            translated += digit * pow;
          }
          cov.inject[code] = static_cast<std::uint32_t>(translated);
        }
        coverings.push_back(std::move(cov));
      }
    }
  }

  std::uint64_t total = checked_pow(static_cast<std::uint64_t>(k), pair_list.size(),
                                    options.coloring_cap);
  if (total > options.coloring_cap) {
    fail(Errc::CapExceeded, "coloring space exceeds the sweep cap");
  }

  MonotonicityReport report;
  report.colorings = total;
  for (const PairSlot& slot : slots) {
    report.combos_per_coloring += slot.code_count;
  }

  struct Chunk {
    std::uint64_t violations = 0;
    std::uint64_t first_coloring = UINT64_MAX;
    std::string description;
  };
  const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
  std::vector<Chunk> chunks(jobs);

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Chunk& chunk) {
    std::vector<Color> table(pair_list.size());
    detail::ScanScratch scratch;
    std::vector<std::vector<std::uint8_t>> good(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (!slots[s].vacuous) good[s].resize(slots[s].code_count);
    }
    auto eval = [&](std::uint64_t x, std::uint64_t y) {
      return table[static_cast<std::size_t>(pair_id[x][y])];
    };
    auto note_violation = [&](std::uint64_t idx, const std::string& what) {
      ++chunk.violations;
      if (idx < chunk.first_coloring) {
        chunk.first_coloring = idx;
        chunk.description = what;
      }
    };

    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t p = 0; p < table.size(); ++p) {
        table[p] = static_cast<Color>(v % k) + 1;
        v /= k;
      }
      for (std::size_t s = 0; s < slots.size(); ++s) {
        const PairSlot& slot = slots[s];
        if (slot.vacuous) continue;
        for (std::uint64_t code = 0; code < slot.code_count; ++code) {
          auto [offset, count] = slot.decoded_span[code];
          auto result = detail::goodness_scan_masks(
              eval, slot.part, slot.free_mask, win.reserve,
              std::span<const detail::MaskAssignment>(slot.decoded.data() + offset, count),
              UINT64_MAX, false, scratch);
          good[s][code] = result.good ? 1 : 0;
        }
        for (auto [code, dropped] : slot.drops) {
          if (good[s][code] && !good[s][dropped]) {
            note_violation(idx, "submap restriction fails at coloring " + std::to_string(idx));
          }
        }
      }
      for (const Covering& cov : coverings) {
        const auto& from = good[cov.from];
        const auto& to = good[cov.to];
        for (std::uint64_t code = 0; code < slots[cov.from].code_count; ++code) {
          if (from[code] && !to[cov.inject[code]]) {
            note_violation(idx, "pair-order monotonicity fails at coloring " + std::to_string(idx));
          }
        }
      }
    }
  };

  if (jobs == 1) {
    run_range(0, total, chunks[0]);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < jobs; ++j) {
      std::uint64_t lo = total * j / jobs;
      std::uint64_t hi = total * (j + 1) / jobs;
      threads.emplace_back(run_range, lo, hi, std::ref(chunks[j]));
    }
    for (auto& t : threads) t.join();
  }

  std::uint64_t first = UINT64_MAX;
  for (const Chunk& chunk : chunks) {
    report.violations += chunk.violations;
    if (chunk.first_coloring < first) {
      first = chunk.first_coloring;
      report.first_violation = chunk.description;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// generated posets and char-width

const char* GeneratedPoset::kind_name(Kind k) {
  switch (k) {
    case Kind::SubsetLattice: return "SUBSET_LATTICE";
    case Kind::OrdinalSum: return "ORDINAL_SUM";
    case Kind::Product: return "PRODUCT";
  }
  return "?";
}

GeneratedPrefix materialize(const GeneratedPoset& spec) {
  if (spec.depth < 1 || spec.depth > 14) fail(Errc::InvalidInput, "generator depth out of range");
  GeneratedPrefix out;
  switch (spec.kind) {
    case GeneratedPoset::Kind::SubsetLattice: {
      std::vector<FinSet> nodes;
      std::vector<Label> elems(static_cast<std::size_t>(spec.depth));
      for (int i = 0; i < spec.depth; ++i) elems[static_cast<std::size_t>(i)] = static_cast<Label>(i);
      for_each_subset_size_lex(elems, [&](const FinSet& s) {
        nodes.push_back(s);
        return true;
      });
      for (const FinSet& s : nodes) out.node_labels.push_back(s.to_string());
      out.less = [nodes](std::size_t i, std::size_t j) {
        return nodes[i].proper_subset_of(nodes[j]);
      };
      break;
    }
    case GeneratedPoset::Kind::OrdinalSum: {
      const std::size_t t = static_cast<std::size_t>(spec.depth);
      for (std::size_t i = 0; i < t; ++i) out.node_labels.push_back(std::to_string(i));
      for (std::size_t i = 0; i < t; ++i) out.node_labels.push_back("w" + std::to_string(i));
      out.less = [t](std::size_t i, std::size_t j) {
        bool i_nat = i < t, j_nat = j < t;
        if (i_nat && j_nat) return i < j;
        if (i_nat && !j_nat) return true;   // every natural below every omega
        if (!i_nat && !j_nat) return i < j;
        return false;
      };
      break;
    }
    case GeneratedPoset::Kind::Product: {
      if (spec.factors.size() != 2) fail(Errc::InvalidInput, "product needs two factors");
      GeneratedPrefix left = materialize(spec.factors[0]);
      GeneratedPrefix right = materialize(spec.factors[1]);
      const std::size_t nl = left.size(), nr = right.size();
      if (nl * nr > (std::size_t{1} << 14)) fail(Errc::SizeLimit, "product prefix too large");
      for (std::size_t i = 0; i < nl; ++i) {
        for (std::size_t j = 0; j < nr; ++j) {
          out.node_labels.push_back("(" + left.node_labels[i] + "," + right.node_labels[j] + ")");
        }
      }
      auto lless = left.less, rless = right.less;
      out.less = [nl, nr, lless, rless](std::size_t x, std::size_t y) {
        std::size_t xi = x / nr, xj = x % nr, yi = y / nr, yj = y % nr;
        bool le_l = xi == yi || lless(xi, yi);
        bool le_r = xj == yj || rless(xj, yj);
        return le_l && le_r && x != y;
      };
      break;
    }
  }
  out.maximal_in_limit.assign(out.size(), false);
  if (out.size() > (std::size_t{1} << 14)) fail(Errc::SizeLimit, "generated prefix too large");
  return out;
}

namespace {

struct PosetView {
  std::size_t n;
  std::function<bool(std::size_t, std::size_t)> less;
  std::vector<std::size_t> seed;  // initial members of S'
};

CharWidthResult char_width_impl(const PosetView& view, std::size_t bound, bool exact) {
  CharWidthResult result;
  result.exact = exact;
  const std::size_t n = view.n;
  if (exact) {
    if (n > 16) fail(Errc::SizeLimit, "exact char-width limited to 16 elements");
    std::optional<std::uint32_t> best_mask;
    std::size_t best_preds = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      bool cofinal = true;
      for (std::size_t x = 0; x < n && cofinal; ++x) {
        bool dominated = false;
        for (std::size_t y = 0; y < n && !dominated; ++y) {
          if ((mask >> y & 1) && (x == y || view.less(x, y))) dominated = true;
        }
        cofinal = dominated;
      }
      if (!cofinal) continue;
      std::size_t worst = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (!(mask >> x & 1)) continue;
        std::size_t preds = 0;
        for (std::size_t y = 0; y < n; ++y) {
          if ((mask >> y & 1) && view.less(y, x)) ++preds;
        }
        worst = std::max(worst, preds);
      }
      if (!best_mask || worst < best_preds) {
        best_mask = mask;
        best_preds = worst;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (*best_mask >> i & 1) result.s_prime.push_back(i);
    }
    result.max_preds = best_preds;
  } else {
    std::vector<bool> in(n, false);
    for (std::size_t s : view.seed) in[s] = true;
    for (std::size_t x = 0; x < n; ++x) {
      bool dominated = false;
      for (std::size_t y = 0; y < n && !dominated; ++y) {
        if (in[y] && (x == y || view.less(x, y))) dominated = true;
      }
      if (!dominated) in[x] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (in[i]) result.s_prime.push_back(i);
    }
    std::size_t worst = 0;
    for (std::size_t x : result.s_prime) {
      std::size_t preds = 0;
      for (std::size_t y : result.s_prime) {
        if (view.less(y, x)) ++preds;
      }
      worst = std::max(worst, preds);
    }
    result.max_preds = worst;
  }
  result.pass = result.max_preds <= bound;
  return result;
}

}  // namespace

CharWidthResult char_width(const FinPoset& S, std::size_t bound, bool exact) {
  PosetView view;
  view.n = S.size();
  view.less = [&S](std::size_t i, std::size_t j) { return S.less(i, j); };
  view.seed = S.maximal_elements();
  return char_width_impl(view, bound, exact);
}

CharWidthResult char_width(const GeneratedPrefix& S, std::size_t bound, bool exact) {
  PosetView view;
  view.n = S.size();
  view.less = S.less;
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (S.maximal_in_limit[i]) view.seed.push_back(i);
  }
  return char_width_impl(view, bound, exact);
}

}  // namespace cofinal
