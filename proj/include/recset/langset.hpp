#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "recset/element.hpp"

namespace recset {

// Regular-set algebra on length-truncated languages. A language is a sorted
// duplicate-free list of strings of length <= max_len; the operators compute
// the untruncated result and drop the strings that no longer fit. Star is
// computable because only finitely many strings survive the truncation.

struct shortlex {
  bool operator()(const std::string& a, const std::string& b) const {
    return shortlex_less(a, b);
  }
};

inline std::vector<std::string> trunc_union(const std::vector<std::string>& p,
                                            const std::vector<std::string>& q) {
  std::set<std::string, shortlex> out(p.begin(), p.end());
  out.insert(q.begin(), q.end());
  return {out.begin(), out.end()};
}

inline std::vector<std::string> trunc_concat(const std::vector<std::string>& p,
                                             const std::vector<std::string>& q,
                                             std::int64_t max_len) {
  std::set<std::string, shortlex> out;
  for (const auto& x : p) {
    if (static_cast<std::int64_t>(x.size()) > max_len) continue;
    for (const auto& y : q) {
      if (static_cast<std::int64_t>(x.size() + y.size()) <= max_len) out.insert(x + y);
    }
  }
  return {out.begin(), out.end()};
}

// Least set S with epsilon in S and trunc(S . p) included in S: the strings
// of total length <= max_len that split into finitely many p-strings.
inline std::vector<std::string> trunc_star(const std::vector<std::string>& p,
                                           std::int64_t max_len) {
  std::set<std::string, shortlex> out;
  out.insert("");
  std::vector<std::string> frontier{""};
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const auto& s : frontier) {
      for (const auto& w : p) {
        if (w.empty()) continue;  // appending epsilon never grows anything
        if (static_cast<std::int64_t>(s.size() + w.size()) > max_len) continue;
        std::string cat = s + w;
        if (out.insert(cat).second) next.push_back(std::move(cat));
      }
    }
    frontier = std::move(next);
  }
  return {out.begin(), out.end()};
}

// Element-level wrappers; all inputs and outputs share one max_len.

inline element lang_union(const element& p, const element& q) {
  return element::lang(trunc_union(p.as_lang().strings, q.as_lang().strings),
                       p.as_lang().max_len);
}

inline element lang_concat(const element& p, const element& q) {
  std::int64_t L = p.as_lang().max_len;
  return element::lang(trunc_concat(p.as_lang().strings, q.as_lang().strings, L), L);
}

inline element lang_star(const element& p) {
  std::int64_t L = p.as_lang().max_len;
  return element::lang(trunc_star(p.as_lang().strings, L), L);
}

}  // namespace recset
