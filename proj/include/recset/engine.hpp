#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recset/instance.hpp"
#include "recset/text.hpp"

namespace recset {

enum class saturation_mode { naive, semi_naive };

inline const char* saturation_mode_name(saturation_mode m) {
  return m == saturation_mode::naive ? "naive" : "semi-naive";
}

enum class termination_reason {
  fixpoint,
  max_order_hit,
  max_elements_hit,
  max_tuple_evals_hit,
};

inline const char* termination_reason_name(termination_reason t) {
  switch (t) {
    case termination_reason::fixpoint: return "fixpoint";
    case termination_reason::max_order_hit: return "max_order_hit";
    case termination_reason::max_elements_hit: return "max_elements_hit";
    case termination_reason::max_tuple_evals_hit: return "max_tuple_evals_hit";
  }
  return "?";
}

// How an element first entered M: as a base element, or as the image of the
// recorded operation applied to the recorded argument tuple. For a derived
// element of order p, every argument has order <= p-1 and at least one has
// order exactly p-1.
struct witness {
  std::optional<int> op_id;   // nullopt = base element
  std::vector<element> args;  // empty for base elements

  bool is_base() const { return !op_id.has_value(); }
  bool operator==(const witness& other) const = default;

  static witness base() { return witness{}; }
  static witness derived(int op, std::vector<element> args) {
    return witness{op, std::move(args)};
  }
};

struct stratum_stats {
  std::uint64_t tuples_enumerated = 0;
  std::uint64_t evaluator_calls = 0;
  std::uint64_t undefined_skips = 0;
};

// Saturation output. strata[p-1] holds the elements of order p, each stratum
// sorted under compare_elements; the strata partition M. stats[p-1] records
// the work spent producing stratum p (zero for the base stratum), plus one
// trailing entry for the final stage that either found nothing new
// (fixpoint) or was cut off by a limit.
struct saturation_result {
  std::vector<std::vector<element>> strata;
  std::map<element, std::int64_t, element_less> order_map;
  std::map<element, witness, element_less> witness_map;
  std::vector<stratum_stats> stats;
  saturation_mode mode = saturation_mode::semi_naive;
  termination_reason termination = termination_reason::fixpoint;

  bool contains(const element& e) const { return order_map.count(e) > 0; }

  std::vector<element> all_elements() const {
    std::vector<element> out;
    out.reserve(order_map.size());
    for (const auto& [e, p] : order_map) out.push_back(e);
    return out;
  }

  stratum_stats totals() const {
    stratum_stats t;
    for (const auto& s : stats) {
      t.tuples_enumerated += s.tuples_enumerated;
      t.evaluator_calls += s.evaluator_calls;
      t.undefined_skips += s.undefined_skips;
    }
    return t;
  }
};

namespace detail {

// Lexicographically-next index tuple over [0, n); false once exhausted.
inline bool next_index_tuple(std::vector<size_t>& idx, size_t n) {
  for (size_t j = idx.size(); j-- > 0;) {
    if (++idx[j] < n) return true;
    idx[j] = 0;
  }
  return false;
}

// Candidate elements of the next stratum, each with the first producer under
// (operation declaration order, lexicographic tuple order). Tuples arrive in
// exactly that order in both modes, so the first claim stands.
struct stage_candidates {
  std::map<element, std::pair<int, std::vector<element>>, element_less> found;

  void claim(const element& e, int op_id, const std::vector<element>& args) {
    found.emplace(e, std::make_pair(op_id, args));
  }
};

}  // namespace detail

// Least-fixpoint saturation of an instance, stratified by order.
//
// M_1 is the base. Stage k derives the candidate stratum M_{k+1}: naive mode
// enumerates every arity-tuple over the union of the first k strata and
// subtracts everything already present; semi-naive mode enumerates only
// tuples with at least one component in M_k (the frontier tuples), which are
// the only ones that can produce new elements. Both modes yield identical
// strata and witnesses.
//
// Hitting a limit discards the stage in progress, so the recorded strata are
// always an exact prefix of the true stratification.
inline saturation_result saturate(const instance& inst,
                                  saturation_mode mode = saturation_mode::semi_naive) {
  const limits& lim = inst.resource_limits();

  saturation_result result;
  result.mode = mode;

  std::vector<element> first(inst.base());
  std::sort(first.begin(), first.end(), element_less{});
  result.strata.push_back(first);
  result.stats.push_back({});
  for (const auto& e : first) {
    result.order_map.emplace(e, 1);
    result.witness_map.emplace(e, witness::base());
  }

  if (static_cast<std::int64_t>(first.size()) > lim.max_elements) {
    result.termination = termination_reason::max_elements_hit;
    return result;
  }

  std::vector<element> pool = first;  // union of strata so far, sorted
  std::uint64_t eval_budget = static_cast<std::uint64_t>(lim.max_tuple_evals);
  std::uint64_t evals_used = 0;

  for (std::int64_t k = 1;; ++k) {
    const std::vector<element>& delta = result.strata.back();
    const size_t pool_size = pool.size();

    detail::stage_candidates candidates;
    stratum_stats stage;
    bool budget_hit = false;

    // Positions of the current stratum's elements inside the sorted pool;
    // a tuple is a frontier tuple iff it touches one of them.
    std::vector<bool> is_delta(pool_size, false);
    {
      size_t di = 0;
      for (size_t i = 0; i < pool_size && di < delta.size(); ++i) {
        if (pool[i] == delta[di]) {
          is_delta[i] = true;
          ++di;
        }
      }
    }

    for (const operation& op : inst.ops()) {
      const size_t n = static_cast<size_t>(op.arity);
      std::vector<size_t> idx(n, 0);
      std::vector<element> args;
      args.reserve(n);

      auto run_tuple = [&](const std::vector<size_t>& ix) -> bool {
        if (mode == saturation_mode::semi_naive) {
          bool touches_delta = false;
          for (size_t j : ix) {
            if (is_delta[j]) {
              touches_delta = true;
              break;
            }
          }
          if (!touches_delta) return true;  // not a frontier tuple
        }
        ++stage.tuples_enumerated;
        if (evals_used >= eval_budget) {
          budget_hit = true;
          return false;
        }
        ++evals_used;
        ++stage.evaluator_calls;
        args.clear();
        for (size_t j : ix) args.push_back(pool[j]);
        std::optional<element> out = op.eval(args);
        if (!out) {
          ++stage.undefined_skips;
          return true;
        }
        if (result.order_map.count(*out)) return true;  // already in an earlier stratum
        candidates.claim(*out, op.id, args);
        return true;
      };

      bool keep_going = true;
      do {
        keep_going = run_tuple(idx);
      } while (keep_going && detail::next_index_tuple(idx, pool_size));
      if (budget_hit) break;
    }

    if (budget_hit) {
      result.stats.push_back(stage);
      result.termination = termination_reason::max_tuple_evals_hit;
      return result;
    }

    if (candidates.found.empty()) {
      result.stats.push_back(stage);
      result.termination = termination_reason::fixpoint;
      return result;
    }

    if (k + 1 > lim.max_order) {
      result.stats.push_back(stage);
      result.termination = termination_reason::max_order_hit;
      return result;
    }

    if (static_cast<std::int64_t>(result.order_map.size() + candidates.found.size()) >
        lim.max_elements) {
      result.stats.push_back(stage);
      result.termination = termination_reason::max_elements_hit;
      return result;
    }

    std::vector<element> stratum;
    stratum.reserve(candidates.found.size());
    for (const auto& [e, prod] : candidates.found) {
      stratum.push_back(e);
      result.order_map.emplace(e, k + 1);
      result.witness_map.emplace(e, witness::derived(prod.first, prod.second));
    }
    result.strata.push_back(stratum);
    result.stats.push_back(stage);

    std::vector<element> merged;
    merged.reserve(pool.size() + stratum.size());
    std::merge(pool.begin(), pool.end(), stratum.begin(), stratum.end(),
               std::back_inserter(merged), element_less{});
    pool = std::move(merged);
  }
}

// The order of an element: the index of the stratum holding it (Def: the
// smallest number of rule applications that produces it).
inline std::int64_t order_of(const saturation_result& result, const element& e) {
  auto it = result.order_map.find(e);
  if (it == result.order_map.end()) {
    bool proven = result.termination == termination_reason::fixpoint;
    throw not_in_m_error(to_text(e) + (proven ? " is not in M"
                                              : " was not reached before a limit; "
                                                "absence is unproven"),
                         proven);
  }
  return it->second;
}

inline const witness& witness_of(const saturation_result& result, const element& e) {
  auto it = result.witness_map.find(e);
  if (it == result.witness_map.end()) {
    bool proven = result.termination == termination_reason::fixpoint;
    throw not_in_m_error(to_text(e) + (proven ? " is not in M"
                                              : " was not reached before a limit; "
                                                "absence is unproven"),
                         proven);
  }
  return it->second;
}

struct partition_violation {
  element elem;
  std::string reason;
};

struct partition_check {
  bool ok = true;
  std::vector<partition_violation> violations;
};

// Checks that the strata are pairwise disjoint and match the order map
// exactly; any violation indicates an engine bug, not a property of the
// instance.
inline partition_check partition_report(const saturation_result& result) {
  partition_check report;
  std::map<element, std::int64_t, element_less> seen;
  for (size_t p = 0; p < result.strata.size(); ++p) {
    for (const auto& e : result.strata[p]) {
      auto [it, inserted] = seen.emplace(e, static_cast<std::int64_t>(p + 1));
      if (!inserted) {
        report.violations.push_back(
            {e, "appears in both stratum " + std::to_string(it->second) + " and stratum " +
                    std::to_string(p + 1)});
        continue;
      }
      auto om = result.order_map.find(e);
      if (om == result.order_map.end()) {
        report.violations.push_back({e, "present in stratum " + std::to_string(p + 1) +
                                            " but missing from the order map"});
      } else if (om->second != static_cast<std::int64_t>(p + 1)) {
        report.violations.push_back(
            {e, "in stratum " + std::to_string(p + 1) + " but order map says " +
                    std::to_string(om->second)});
      }
    }
  }
  for (const auto& [e, p] : result.order_map) {
    if (!seen.count(e)) {
      report.violations.push_back(
          {e, "in the order map (order " + std::to_string(p) + ") but in no stratum"});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

}  // namespace recset
