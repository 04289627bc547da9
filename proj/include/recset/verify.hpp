#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "recset/engine.hpp"
#include "recset/instance.hpp"
#include "recset/text.hpp"

namespace recset {

// ---------------------------------------------------------------------------
// Closedness of an explicit set.
// ---------------------------------------------------------------------------

// One escape from a candidate set: applying op_id to args (all inside the
// set) produced a result outside it. op_id is empty for a missing base
// element; then args is empty and result is the absent base element.
struct closure_counterexample {
  std::optional<int> op_id;
  std::vector<element> args;
  element result;
};

struct closure_report {
  bool closed = true;
  std::vector<closure_counterexample> counterexamples;
};

namespace detail {

inline bool sorted_contains(const std::vector<element>& sorted, const element& e) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), e, element_less{});
  return it != sorted.end() && *it == e;
}

// Operation part of the closure check: every defined application over
// `sorted` must land inside `sorted`. Reports every escape, ops in
// declaration order, tuples in lexicographic order.
inline void closure_op_escapes(const instance& inst, const std::vector<element>& sorted,
                               std::vector<closure_counterexample>& out) {
  std::vector<element> args;
  for (const auto& op : inst.ops()) {
    if (sorted.empty()) break;
    std::vector<size_t> idx(static_cast<size_t>(op.arity), 0);
    do {
      args.clear();
      for (size_t i : idx) args.push_back(sorted[i]);
      std::optional<element> r = apply_operation(op, args);
      if (r && !sorted_contains(sorted, *r)) {
        out.push_back({op.id, args, *r});
      }
    } while (next_index_tuple(idx, sorted.size()));
  }
}

}  // namespace detail

inline closure_report is_recursively_closed(const std::vector<element>& candidate,
                                            const instance& inst) {
  std::vector<element> sorted;
  sorted.reserve(candidate.size());
  for (const auto& e : candidate) sorted.push_back(canonicalize(inst.carrier(), e));
  std::sort(sorted.begin(), sorted.end(), element_less{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  closure_report report;
  for (const auto& b : inst.base()) {
    if (!detail::sorted_contains(sorted, b)) {
      report.counterexamples.push_back({std::nullopt, {}, b});
    }
  }
  detail::closure_op_escapes(inst, sorted, report.counterexamples);
  report.closed = report.counterexamples.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Brute-force minimality and intersection over an explicit finite universe.
// Subsets are bitmasks over the sorted universe; enumeration is capped at 20
// elements (2^20 subsets, each checked against precomputed operation tables).
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr size_t brute_universe_cap = 20;

struct subset_tables {
  std::vector<element> elems;  // sorted, distinct
  std::uint32_t base_mask = 0;
  // One row per defined operation application over elems; result < 0 means
  // the result escapes the enumeration, so no superset of args_mask is closed.
  struct row {
    std::uint32_t args_mask;
    int result;
  };
  std::vector<row> rows;
};

inline subset_tables build_subset_tables(const instance& inst,
                                         const std::vector<element>& enumeration) {
  subset_tables t;
  t.elems.reserve(enumeration.size());
  for (const auto& e : enumeration) t.elems.push_back(canonicalize(inst.carrier(), e));
  std::sort(t.elems.begin(), t.elems.end(), element_less{});
  t.elems.erase(std::unique(t.elems.begin(), t.elems.end()), t.elems.end());
  if (t.elems.size() > brute_universe_cap) {
    throw error(errc::universe_too_large,
                "universe enumeration has " + std::to_string(t.elems.size()) +
                    " elements, cap is " + std::to_string(brute_universe_cap));
  }
  auto index_of = [&](const element& e) -> int {
    auto it = std::lower_bound(t.elems.begin(), t.elems.end(), e, element_less{});
    if (it == t.elems.end() || !(*it == e)) return -1;
    return static_cast<int>(it - t.elems.begin());
  };
  for (const auto& b : inst.base()) {
    int i = index_of(b);
    if (i < 0) {
      throw error(errc::no_closed_superset,
                  "universe enumeration omits the base element " + to_text(b));
    }
    t.base_mask |= std::uint32_t{1} << i;
  }
  std::vector<element> args;
  for (const auto& op : inst.ops()) {
    std::vector<size_t> idx(static_cast<size_t>(op.arity), 0);
    do {
      args.clear();
      std::uint32_t mask = 0;
      for (size_t i : idx) {
        args.push_back(t.elems[i]);
        mask |= std::uint32_t{1} << i;
      }
      std::optional<element> r = apply_operation(op, args);
      if (r) t.rows.push_back({mask, index_of(*r)});
    } while (next_index_tuple(idx, t.elems.size()));
  }
  return t;
}

inline bool mask_is_closed(const subset_tables& t, std::uint32_t s) {
  for (const auto& row : t.rows) {
    if ((s & row.args_mask) != row.args_mask) continue;
    if (row.result < 0) return false;
    if (!(s & (std::uint32_t{1} << row.result))) return false;
  }
  return true;
}

// All closed subsets containing the base, by submask enumeration over the
// non-base positions.
inline std::vector<std::uint32_t> closed_supersets(const subset_tables& t) {
  const std::uint32_t full = t.elems.size() == 32
                                 ? ~std::uint32_t{0}
                                 : (std::uint32_t{1} << t.elems.size()) - 1;
  const std::uint32_t free_bits = full & ~t.base_mask;
  std::vector<std::uint32_t> closed;
  std::uint32_t sub = free_bits;
  while (true) {
    std::uint32_t s = sub | t.base_mask;
    if (mask_is_closed(t, s)) closed.push_back(s);
    if (sub == 0) break;
    sub = (sub - 1) & free_bits;
  }
  return closed;
}

inline std::vector<element> mask_to_elements(const subset_tables& t, std::uint32_t s) {
  std::vector<element> out;
  for (size_t i = 0; i < t.elems.size(); ++i) {
    if (s & (std::uint32_t{1} << i)) out.push_back(t.elems[i]);
  }
  return out;
}

}  // namespace detail

// The unique inclusion-minimal recursively closed superset of the base
// within the enumeration, found by checking every subset. Throws if no
// closed superset exists or if the minimum is not unique (both impossible
// when the enumeration itself is closed).
inline std::vector<element> brute_minimal_closed(const instance& inst,
                                                 const std::vector<element>& enumeration) {
  detail::subset_tables t = detail::build_subset_tables(inst, enumeration);
  std::vector<std::uint32_t> closed = detail::closed_supersets(t);
  if (closed.empty()) {
    throw error(errc::no_closed_superset,
                "no recursively closed superset of the base inside the enumeration");
  }
  std::uint32_t best = closed.front();
  for (std::uint32_t s : closed) {
    if (std::popcount(s) < std::popcount(best)) best = s;
  }
  for (std::uint32_t s : closed) {
    if ((best & s) != best) {
      throw error(errc::validation_error,
                  "minimal closed superset is not unique; closedness is broken");
    }
  }
  return detail::mask_to_elements(t, best);
}

// The intersection of every recursively closed superset of the base within
// the enumeration.
inline std::vector<element> brute_intersection_closed(
    const instance& inst, const std::vector<element>& enumeration) {
  detail::subset_tables t = detail::build_subset_tables(inst, enumeration);
  std::vector<std::uint32_t> closed = detail::closed_supersets(t);
  if (closed.empty()) {
    throw error(errc::no_closed_superset,
                "no recursively closed superset of the base inside the enumeration");
  }
  std::uint32_t meet = ~std::uint32_t{0};
  for (std::uint32_t s : closed) meet &= s;
  return detail::mask_to_elements(t, meet);
}

// ---------------------------------------------------------------------------
// Extension invariance: enlarging the base by derivable elements, or the
// operation family by operations the set is already closed under, does not
// change the generated set. Hypothesis failures are reported, not thrown.
// ---------------------------------------------------------------------------

struct base_extension_report {
  std::vector<std::pair<element, bool>> derivability;  // extra element -> in M?
  bool hypothesis_ok = true;
  std::optional<bool> sets_equal;  // only set when the hypothesis holds
};

namespace detail {

inline saturation_result saturate_to_fixpoint(const instance& inst) {
  saturation_result res = saturate(inst);
  if (res.termination != termination_reason::fixpoint) {
    throw error(errc::validation_error,
                std::string("instance did not reach a fixpoint within limits (") +
                    termination_reason_name(res.termination) + ")");
  }
  return res;
}

}  // namespace detail

inline base_extension_report check_base_extension(const instance& inst,
                                                  const std::vector<element>& extra_base) {
  saturation_result res = detail::saturate_to_fixpoint(inst);
  base_extension_report report;
  std::vector<element> extras;
  for (const auto& raw : extra_base) {
    element e = canonicalize(inst.carrier(), raw);
    bool in_m = res.contains(e);
    report.derivability.emplace_back(e, in_m);
    report.hypothesis_ok = report.hypothesis_ok && in_m;
    extras.push_back(std::move(e));
  }
  if (!report.hypothesis_ok) return report;

  std::vector<element> new_base = inst.base();
  for (const auto& e : extras) {
    bool seen = false;
    for (const auto& b : new_base) seen = seen || b == e;
    if (!seen) new_base.push_back(e);
  }
  saturation_result extended = detail::saturate_to_fixpoint(inst.with_base(new_base));
  report.sets_equal = res.all_elements() == extended.all_elements();
  return report;
}

struct op_extension_report {
  closure_report m_closed_under_extras;
  std::optional<bool> sets_equal;  // only set when M is closed under the extras
};

inline op_extension_report check_op_extension(const instance& inst,
                                              std::vector<operation> extra_ops) {
  saturation_result res = detail::saturate_to_fixpoint(inst);
  std::vector<element> m = res.all_elements();

  op_extension_report report;
  if (!extra_ops.empty()) {
    // Operation part of the closure check only: the base is in M by
    // construction. make() numbers the extras 0..q-1; shift the reported ids
    // to where with_extra_ops will place them.
    instance extras_only =
        instance::make(inst.carrier(), inst.base(), extra_ops, inst.resource_limits());
    std::vector<closure_counterexample> escapes;
    detail::closure_op_escapes(extras_only, m, escapes);
    for (auto& c : escapes) c.op_id = *c.op_id + static_cast<int>(inst.ops().size());
    report.m_closed_under_extras.counterexamples = std::move(escapes);
    report.m_closed_under_extras.closed =
        report.m_closed_under_extras.counterexamples.empty();
  }
  if (!report.m_closed_under_extras.closed) return report;

  saturation_result extended =
      detail::saturate_to_fixpoint(inst.with_extra_ops(std::move(extra_ops)));
  report.sets_equal = m == extended.all_elements();
  return report;
}

// ---------------------------------------------------------------------------
// Structural induction: P holds on the base and is preserved by every
// operation over tuples from M, hence holds on all of M. The report also
// carries an independent pointwise check of P over M, so the conclusion is
// tested against itself.
// ---------------------------------------------------------------------------

enum class induction_conclusion { proven, refuted };

inline const char* induction_conclusion_name(induction_conclusion c) {
  return c == induction_conclusion::proven ? "proven" : "refuted";
}

struct preservation_failure {
  int op_id;
  std::vector<element> args;
  element result;
};

struct induction_report {
  std::vector<element> base_failures;
  std::vector<preservation_failure> preservation_failures;
  induction_conclusion conclusion = induction_conclusion::proven;
  std::vector<element> exhaustive_check;  // elements of M violating P
};

template <typename Predicate>
induction_report check_property_induction(const instance& inst, Predicate&& p) {
  saturation_result res = detail::saturate_to_fixpoint(inst);
  std::vector<element> m = res.all_elements();

  induction_report report;
  for (const auto& b : inst.base()) {
    if (!p(b)) report.base_failures.push_back(b);
  }
  std::vector<element> args;
  for (const auto& op : inst.ops()) {
    std::vector<size_t> idx(static_cast<size_t>(op.arity), 0);
    if (m.empty()) break;
    do {
      args.clear();
      bool all_hold = true;
      for (size_t i : idx) {
        args.push_back(m[i]);
        all_hold = all_hold && p(m[i]);
      }
      if (!all_hold) continue;
      std::optional<element> r = apply_operation(op, args);
      if (r && !p(*r)) report.preservation_failures.push_back({op.id, args, *r});
    } while (detail::next_index_tuple(idx, m.size()));
  }
  report.conclusion = report.base_failures.empty() && report.preservation_failures.empty()
                          ? induction_conclusion::proven
                          : induction_conclusion::refuted;
  for (const auto& e : m) {
    if (!p(e)) report.exhaustive_check.push_back(e);
  }
  return report;
}

}  // namespace recset
