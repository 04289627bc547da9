// Builds truncated regular languages over {a, b} up to order 3 and shows how
// a chosen language was derived, step by step.

#include <iostream>

#include "recset/recset.hpp"

using namespace recset;

int main() {
  instance inst = build_regular_sets("ab", 3, limits{3, 100000, 100000000});
  saturation_result res = saturate(inst);

  std::cout << "languages over {a,b} truncated at length 3, orders 1..3\n";
  for (size_t p = 0; p < res.strata.size(); ++p) {
    std::cout << "order " << p + 1 << ": " << res.strata[p].size() << " languages\n";
  }

  element star_a = element::lang({"", "a", "aa", "aaa"}, 3);
  std::cout << "\nderivation of " << to_text(star_a) << " (compact style):\n";
  description d = extract_description(res, star_a, description_style::compact);
  for (const auto& e : d.seq) {
    const witness& w = res.witness_map.at(e);
    std::cout << "  " << to_text(e);
    if (w.is_base()) {
      std::cout << "  [base]";
    } else {
      std::cout << "  [" << inst.ops()[static_cast<size_t>(*w.op_id)].name;
      for (const auto& a : w.args) std::cout << " " << to_text(a);
      std::cout << "]";
    }
    std::cout << "\n";
  }
  return 0;
}
