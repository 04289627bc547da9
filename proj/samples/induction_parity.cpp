// Proves by structural induction that every element of the closure of {2}
// under addition mod 10 is even, then shows what a refutation looks like.

#include <iostream>

#include "recset/recset.hpp"

using namespace recset;

namespace {

bool even(const element& e) { return floored_mod(e.as_int_mod().value, 2) == 0; }

void show(const char* title, const instance& inst, const induction_report& r) {
  std::cout << title << ": " << induction_conclusion_name(r.conclusion) << "\n";
  for (const auto& e : r.base_failures) {
    std::cout << "  base failure: " << to_text(e) << "\n";
  }
  for (const auto& f : r.preservation_failures) {
    std::cout << "  not preserved: " << inst.ops()[static_cast<size_t>(f.op_id)].name
              << "(";
    for (size_t i = 0; i < f.args.size(); ++i) {
      std::cout << (i ? ", " : "") << to_text(f.args[i]);
    }
    std::cout << ") = " << to_text(f.result) << "\n";
  }
  std::cout << "  members violating the property: " << r.exhaustive_check.size() << "\n";
}

}  // namespace

int main() {
  instance evens = build_custom_modular(10, {2}, {"add"});
  show("evenness on <2> in (Z_10, +)", evens,
       check_property_induction(evens, even));

  instance z5 = build_cyclic_group(5, 1, group_flavor::additive);
  show("oddness on <1> in (Z_5, +)", z5,
       check_property_induction(z5, [](const element& e) { return !even(e); }));
  return 0;
}
