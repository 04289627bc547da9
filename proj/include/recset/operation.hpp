#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "recset/element.hpp"
#include "recset/errors.hpp"

namespace recset {

// An identified n-ary partial map on elements. Evaluators must be
// deterministic and, when defined, return canonical in-universe values;
// an empty optional means the operation is undefined on that tuple.
struct operation {
  int id = 0;  // declaration index within the instance
  std::string name;
  int arity = 1;
  std::function<std::optional<element>(std::span<const element>)> eval;
};

inline std::optional<element> apply_operation(const operation& op,
                                              std::span<const element> args) {
  if (static_cast<int>(args.size()) != op.arity) {
    throw error(errc::arity_mismatch,
                op.name + " takes " + std::to_string(op.arity) + " arguments, got " +
                    std::to_string(args.size()));
  }
  return op.eval(args);
}

}  // namespace recset
