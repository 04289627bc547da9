#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "recset/element.hpp"
#include "recset/errors.hpp"
#include "recset/operation.hpp"
#include "recset/text.hpp"

namespace recset {

// Resource limits keep saturation of infinite carriers finite.
struct limits {
  std::int64_t max_order = 1000;
  std::int64_t max_elements = 100000;
  std::int64_t max_tuple_evals = 100000000;
};

// The full datum of a recursive-set definition: a carrier universe, base
// elements a_1..a_n (declaration order is significant; a_1 is what padding
// repeats), operations f_1..f_s, and limits. Immutable after construction.
class instance {
 public:
  static instance make(universe u, std::vector<element> base, std::vector<operation> ops,
                       limits lim = {}) {
    if (base.empty()) {
      throw error(errc::empty_base, "the base must contain at least one element");
    }
    for (auto& e : base) e = canonicalize(u, e);
    for (size_t i = 0; i < base.size(); ++i) {
      for (size_t j = i + 1; j < base.size(); ++j) {
        if (base[i] == base[j]) {
          throw error(errc::invalid_instance,
                      "duplicate base element " + to_text(base[i]));
        }
      }
    }
    if (ops.empty()) {
      throw error(errc::invalid_instance, "at least one operation is required");
    }
    for (size_t i = 0; i < ops.size(); ++i) {
      if (ops[i].arity < 1) {
        throw error(errc::invalid_instance,
                    "operation " + ops[i].name + " has arity < 1");
      }
      if (!ops[i].eval) {
        throw error(errc::invalid_instance,
                    "operation " + ops[i].name + " has no evaluator");
      }
      ops[i].id = static_cast<int>(i);
    }
    if (lim.max_order < 1 || lim.max_elements < 1 || lim.max_tuple_evals < 1) {
      throw error(errc::invalid_instance, "limits must be strictly positive");
    }
    return instance(std::move(u), std::move(base), std::move(ops), lim);
  }

  const universe& carrier() const { return universe_; }
  const std::vector<element>& base() const { return base_; }
  const std::vector<operation>& ops() const { return ops_; }
  const limits& resource_limits() const { return limits_; }

  bool in_base(const element& e) const {
    for (const auto& b : base_) {
      if (b == e) return true;
    }
    return false;
  }

  // Same universe and limits, different base (already canonical, distinct).
  instance with_base(std::vector<element> new_base) const {
    return make(universe_, std::move(new_base), ops_, limits_);
  }

  // Same universe, base, and limits, extra operations appended after the
  // existing ones (ids are reassigned by declaration position).
  instance with_extra_ops(std::vector<operation> extra) const {
    std::vector<operation> all = ops_;
    for (auto& op : extra) all.push_back(std::move(op));
    return make(universe_, base_, std::move(all), limits_);
  }

  instance with_limits(limits lim) const { return make(universe_, base_, ops_, lim); }

 private:
  instance(universe u, std::vector<element> base, std::vector<operation> ops, limits lim)
      : universe_(std::move(u)),
        base_(std::move(base)),
        ops_(std::move(ops)),
        limits_(lim) {}

  universe universe_;
  std::vector<element> base_;
  std::vector<operation> ops_;
  limits limits_;
};

}  // namespace recset
