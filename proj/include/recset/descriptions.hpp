#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recset/engine.hpp"
#include "recset/instance.hpp"
#include "recset/text.hpp"

namespace recset {

// A finite sequence <a_1, ..., a_m> ending at its target element; each entry
// is a base element or an operation image of earlier entries. Repetitions
// count toward the length.
struct description {
  std::vector<element> seq;
  element target;

  std::int64_t length() const { return static_cast<std::int64_t>(seq.size()); }
};

enum class description_style { paper, compact };

inline constexpr std::int64_t default_description_cap = 1000000;

// Extracts a description for an element of M from its recorded witnesses.
//
// paper style mirrors the inductive existence argument literally: the
// descriptions of the witness arguments are concatenated in argument order
// and the element itself is appended; a base element yields the one-entry
// sequence. Shared sub-derivations are re-expanded every time they occur, so
// the output can repeat elements exponentially; max_entries caps it.
//
// compact style lists each element of the witness closure exactly once, in
// (order, element) order, which respects witnesses and ends at the target.
inline description extract_description(const saturation_result& result, const element& e,
                                       description_style style,
                                       std::int64_t max_entries = default_description_cap) {
  witness_of(result, e);  // throws not_in_m_error if unreached

  if (style == description_style::compact) {
    std::set<element, element_less> closure;
    std::vector<element> work{e};
    while (!work.empty()) {
      element cur = work.back();
      work.pop_back();
      if (!closure.insert(cur).second) continue;
      for (const auto& arg : witness_of(result, cur).args) work.push_back(arg);
    }
    std::vector<element> seq(closure.begin(), closure.end());
    std::stable_sort(seq.begin(), seq.end(),
                     [&](const element& a, const element& b) {
                       auto pa = result.order_map.at(a);
                       auto pb = result.order_map.at(b);
                       if (pa != pb) return pa < pb;
                       return compare_elements(a, b) == ordering::less;
                     });
    return description{std::move(seq), e};
  }

  // paper style: iterative post-order walk of the witness tree.
  std::vector<element> seq;
  struct frame {
    element elem;
    size_t next_arg = 0;
  };
  std::vector<frame> stack;
  stack.push_back({e});
  while (!stack.empty()) {
    frame& top = stack.back();
    const witness& w = witness_of(result, top.elem);
    if (top.next_arg < w.args.size()) {
      stack.push_back({w.args[top.next_arg++]});
      continue;
    }
    if (static_cast<std::int64_t>(seq.size()) >= max_entries) {
      throw error(errc::description_too_long,
                  "paper-style description of " + to_text(e) + " exceeds " +
                      std::to_string(max_entries) + " entries");
    }
    seq.push_back(top.elem);
    stack.pop_back();
  }
  return description{std::move(seq), e};
}

struct description_check {
  bool valid = true;
  std::int64_t invalid_index = 0;  // 1-based; 0 when valid
  std::string reason;
};

// Checks a candidate sequence against Def. 6: every entry must be a base
// element or an operation image of a tuple drawn (with repetition) from the
// entries strictly before it, and the last entry must equal the target. The
// tuple search over the prefix is exhaustive; descriptions are desk-scale.
inline description_check validate_description(const instance& inst,
                                              std::span<const element> seq,
                                              const element& target) {
  if (seq.empty()) {
    return {false, 0, "the sequence is empty"};
  }
  std::vector<element> prefix;  // distinct entries seen so far, sorted
  for (size_t i = 0; i < seq.size(); ++i) {
    const element& entry = seq[i];
    bool ok = inst.in_base(entry);
    if (!ok && !prefix.empty()) {
      for (const operation& op : inst.ops()) {
        const size_t n = static_cast<size_t>(op.arity);
        std::vector<size_t> idx(n, 0);
        std::vector<element> args(n, prefix[0]);
        do {
          for (size_t j = 0; j < n; ++j) args[j] = prefix[idx[j]];
          auto out = op.eval(args);
          if (out && *out == entry) {
            ok = true;
            break;
          }
        } while (detail::next_index_tuple(idx, prefix.size()));
        if (ok) break;
      }
    }
    if (!ok) {
      return {false, static_cast<std::int64_t>(i + 1),
              to_text(entry) + " is neither a base element nor obtained from the "
                               "entries that precede it"};
    }
    auto pos = std::lower_bound(prefix.begin(), prefix.end(), entry, element_less{});
    if (pos == prefix.end() || !(*pos == entry)) prefix.insert(pos, entry);
  }
  if (!(seq.back() == target)) {
    return {false, static_cast<std::int64_t>(seq.size()),
            "the last entry " + to_text(seq.back()) + " differs from the target " +
                to_text(target)};
  }
  return {};
}

// Prefixes h copies of the first base element a_1, which keeps the sequence
// a valid description and grows its length by exactly h.
inline description pad_description(const description& d, std::int64_t h,
                                   const instance& inst) {
  if (h < 0) throw error(errc::invalid_input, "pad count must be >= 0");
  auto check = validate_description(inst, d.seq, d.target);
  if (!check.valid) {
    throw error(errc::invalid_input,
                "cannot pad an invalid description (entry " +
                    std::to_string(check.invalid_index) + ": " + check.reason + ")");
  }
  std::vector<element> seq;
  seq.reserve(d.seq.size() + static_cast<size_t>(h));
  for (std::int64_t i = 0; i < h; ++i) seq.push_back(inst.base().front());
  seq.insert(seq.end(), d.seq.begin(), d.seq.end());
  return description{std::move(seq), d.target};
}

}  // namespace recset
