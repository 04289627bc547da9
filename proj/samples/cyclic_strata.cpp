// Saturates the additive subgroup of Z_12 generated by 5 and prints each
// stratum with the witness that first produced every element.

#include <iostream>

#include "recset/recset.hpp"

using namespace recset;

int main() {
  instance inst = build_cyclic_group(12, 5, group_flavor::additive);
  saturation_result res = saturate(inst);

  std::cout << "M = <5> in (Z_12, +), " << res.order_map.size() << " elements, "
            << termination_reason_name(res.termination) << "\n";
  for (size_t p = 0; p < res.strata.size(); ++p) {
    std::cout << "M_" << p + 1 << ":";
    for (const auto& e : res.strata[p]) {
      std::cout << " " << to_text(e);
      const witness& w = res.witness_map.at(e);
      if (w.is_base()) {
        std::cout << " (base)";
      } else {
        std::cout << " (" << inst.ops()[static_cast<size_t>(*w.op_id)].name << " "
                  << to_text(w.args[0]) << " " << to_text(w.args[1]) << ")";
      }
    }
    std::cout << "\n";
  }

  element zero = element::int_mod(0, 12);
  description d = extract_description(res, zero, description_style::paper);
  std::cout << "description of 0:";
  for (const auto& e : d.seq) std::cout << " " << to_text(e);
  std::cout << "\n";
  return 0;
}
