#pragma once

// Helpers shared by the test files: randomized modular instances and small
// independent oracles the engine results are checked against.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "recset/instance.hpp"
#include "recset/instances.hpp"

namespace testsupport {

// A random custom-modular instance: m <= 20, up to 3 base residues, up to 3
// operations drawn from add/mul/neg/affine with small random coefficients.
inline recset::instance random_modular_instance(std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> mod_dist(2, 20);
  std::int64_t m = mod_dist(rng);
  std::uniform_int_distribution<std::int64_t> res_dist(0, m - 1);
  std::uniform_int_distribution<int> base_count(1, 3);
  std::uniform_int_distribution<int> op_count(1, 3);
  std::uniform_int_distribution<int> op_pick(0, 3);
  std::uniform_int_distribution<std::int64_t> coeff(0, 6);

  std::vector<std::int64_t> base;
  int nb = base_count(rng);
  for (int i = 0; i < nb; ++i) base.push_back(res_dist(rng));
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());

  std::vector<std::string> ops;
  int no = op_count(rng);
  for (int i = 0; i < no; ++i) {
    switch (op_pick(rng)) {
      case 0: ops.push_back("add"); break;
      case 1: ops.push_back("mul"); break;
      case 2: ops.push_back("neg"); break;
      default:
        ops.push_back("affine:" + std::to_string(coeff(rng)) + "," +
                      std::to_string(coeff(rng)));
        break;
    }
  }
  return recset::build_custom_modular(m, base, ops);
}

// Order oracle: plain breadth-first closure over std::set, written without
// any of the engine's machinery. Level 1 is the base; level k+1 holds the
// new elements producible from everything known after level k.
inline std::map<recset::element, std::int64_t, recset::element_less> bfs_orders(
    const recset::instance& inst) {
  using recset::element;
  std::map<element, std::int64_t, recset::element_less> level;
  std::set<element, recset::element_less> known;
  for (const auto& b : inst.base()) {
    known.insert(b);
    level.emplace(b, 1);
  }
  std::int64_t k = 1;
  while (true) {
    std::set<element, recset::element_less> next;
    std::vector<element> pool(known.begin(), known.end());
    for (const auto& op : inst.ops()) {
      std::vector<size_t> idx(static_cast<size_t>(op.arity), 0);
      if (pool.empty()) break;
      while (true) {
        std::vector<element> args;
        for (size_t i : idx) args.push_back(pool[i]);
        auto r = recset::apply_operation(op, args);
        if (r && !known.count(*r)) next.insert(*r);
        size_t j = idx.size();
        while (j > 0 && ++idx[j - 1] == pool.size()) idx[--j] = 0;
        if (j == 0) break;
      }
    }
    if (next.empty()) return level;
    ++k;
    for (const auto& e : next) {
      known.insert(e);
      level.emplace(e, k);
    }
  }
}

}  // namespace testsupport
