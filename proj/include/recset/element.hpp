#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "recset/errors.hpp"

namespace recset {

enum class element_kind { int_mod, vec_mod, indexed, lang, sym };

inline const char* element_kind_name(element_kind k) {
  switch (k) {
    case element_kind::int_mod: return "int_mod";
    case element_kind::vec_mod: return "vec_mod";
    case element_kind::indexed: return "indexed";
    case element_kind::lang: return "lang";
    case element_kind::sym: return "sym";
  }
  return "?";
}

// (length, lexicographic) order on strings; the order used inside language
// values and for language string listings.
inline bool shortlex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Payload structs. An element holds exactly one of these.

struct int_mod_value {
  std::int64_t value = 0;
  std::optional<std::int64_t> modulus;  // nullopt = plain integer
};

struct vec_mod_value {
  std::vector<std::int64_t> coords;
  std::int64_t modulus = 1;
};

// A (position, term value) pair for recurrence sequences.
struct indexed_value {
  std::int64_t position = 1;
  std::int64_t value = 0;
};

// A language truncated at max_len: sorted duplicate-free strings, each of
// length <= max_len. The empty string stands for epsilon.
struct lang_value {
  std::vector<std::string> strings;
  std::int64_t max_len = 0;
};

struct sym_value {
  std::string name;
};

inline std::int64_t floored_mod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

// A single carrier value. Factories normalize what they can without a
// universe (residue reduction, language sort/dedupe); full validation
// against a universe happens in canonicalize().
class element {
 public:
  element() : v_(sym_value{"?"}) {}

  static element int_mod(std::int64_t value,
                         std::optional<std::int64_t> modulus = std::nullopt) {
    if (modulus && *modulus >= 1) value = floored_mod(value, *modulus);
    return element(int_mod_value{value, modulus});
  }

  static element vec_mod(std::vector<std::int64_t> coords, std::int64_t modulus) {
    if (modulus >= 1) {
      for (auto& c : coords) c = floored_mod(c, modulus);
    }
    return element(vec_mod_value{std::move(coords), modulus});
  }

  static element indexed(std::int64_t position, std::int64_t value) {
    return element(indexed_value{position, value});
  }

  static element lang(std::vector<std::string> strings, std::int64_t max_len) {
    std::sort(strings.begin(), strings.end(), shortlex_less);
    strings.erase(std::unique(strings.begin(), strings.end()), strings.end());
    return element(lang_value{std::move(strings), max_len});
  }

  static element sym(std::string name) { return element(sym_value{std::move(name)}); }

  element_kind kind() const { return static_cast<element_kind>(v_.index()); }

  const int_mod_value& as_int_mod() const { return std::get<int_mod_value>(v_); }
  const vec_mod_value& as_vec_mod() const { return std::get<vec_mod_value>(v_); }
  const indexed_value& as_indexed() const { return std::get<indexed_value>(v_); }
  const lang_value& as_lang() const { return std::get<lang_value>(v_); }
  const sym_value& as_sym() const { return std::get<sym_value>(v_); }

  const std::variant<int_mod_value, vec_mod_value, indexed_value, lang_value,
                     sym_value>&
  raw() const {
    return v_;
  }

 private:
  template <typename T>
  explicit element(T&& v) : v_(std::forward<T>(v)) {}

  std::variant<int_mod_value, vec_mod_value, indexed_value, lang_value, sym_value> v_;
};

enum class ordering { less, equal, greater };

namespace detail {

inline ordering cmp_i64(std::int64_t a, std::int64_t b) {
  if (a < b) return ordering::less;
  if (a > b) return ordering::greater;
  return ordering::equal;
}

inline ordering cmp_opt_i64(const std::optional<std::int64_t>& a,
                            const std::optional<std::int64_t>& b) {
  if (!a && !b) return ordering::equal;
  if (!a) return ordering::less;
  if (!b) return ordering::greater;
  return cmp_i64(*a, *b);
}

inline ordering cmp_shortlex(const std::string& a, const std::string& b) {
  if (shortlex_less(a, b)) return ordering::less;
  if (shortlex_less(b, a)) return ordering::greater;
  return ordering::equal;
}

}  // namespace detail

// Strict total order over elements of one universe. Langs compare by
// (cardinality, then elementwise string order), vectors lexicographically,
// indexed values by (position, value). Parameter fields (modulus, max_len)
// break remaining ties so that equality coincides with byte-identical
// canonical encodings.
inline ordering compare_elements(const element& x, const element& y) {
  if (x.kind() != y.kind()) {
    throw error(errc::mixed_universe,
                std::string("cannot compare ") + element_kind_name(x.kind()) +
                    " with " + element_kind_name(y.kind()));
  }
  using detail::cmp_i64;
  using detail::cmp_opt_i64;
  using detail::cmp_shortlex;
  switch (x.kind()) {
    case element_kind::int_mod: {
      const auto& a = x.as_int_mod();
      const auto& b = y.as_int_mod();
      if (auto c = cmp_i64(a.value, b.value); c != ordering::equal) return c;
      return cmp_opt_i64(a.modulus, b.modulus);
    }
    case element_kind::vec_mod: {
      const auto& a = x.as_vec_mod();
      const auto& b = y.as_vec_mod();
      size_t n = std::min(a.coords.size(), b.coords.size());
      for (size_t i = 0; i < n; ++i) {
        if (auto c = cmp_i64(a.coords[i], b.coords[i]); c != ordering::equal) return c;
      }
      if (auto c = cmp_i64(static_cast<std::int64_t>(a.coords.size()),
                           static_cast<std::int64_t>(b.coords.size()));
          c != ordering::equal)
        return c;
      return cmp_i64(a.modulus, b.modulus);
    }
    case element_kind::indexed: {
      const auto& a = x.as_indexed();
      const auto& b = y.as_indexed();
      if (auto c = cmp_i64(a.position, b.position); c != ordering::equal) return c;
      return cmp_i64(a.value, b.value);
    }
    case element_kind::lang: {
      const auto& a = x.as_lang();
      const auto& b = y.as_lang();
      if (auto c = cmp_i64(static_cast<std::int64_t>(a.strings.size()),
                           static_cast<std::int64_t>(b.strings.size()));
          c != ordering::equal)
        return c;
      for (size_t i = 0; i < a.strings.size(); ++i) {
        if (auto c = cmp_shortlex(a.strings[i], b.strings[i]); c != ordering::equal)
          return c;
      }
      return cmp_i64(a.max_len, b.max_len);
    }
    case element_kind::sym: {
      const auto& a = x.as_sym();
      const auto& b = y.as_sym();
      if (a.name < b.name) return ordering::less;
      if (b.name < a.name) return ordering::greater;
      return ordering::equal;
    }
  }
  return ordering::equal;
}

inline bool operator==(const element& x, const element& y) {
  if (x.kind() != y.kind()) return false;
  return compare_elements(x, y) == ordering::equal;
}

inline bool operator!=(const element& x, const element& y) { return !(x == y); }

// Comparator for ordered containers of same-universe elements.
struct element_less {
  bool operator()(const element& a, const element& b) const {
    return compare_elements(a, b) == ordering::less;
  }
};

// Canonical byte encoding: kind tag byte, big-endian fixed-width integer
// fields, length-prefixed strings. Two elements are equal exactly when their
// encodings are byte-identical.
namespace detail {

inline void put_u8(std::string& out, std::uint8_t v) { out.push_back(static_cast<char>(v)); }

inline void put_u64(std::string& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8)
    out.push_back(static_cast<char>((v >> shift) & 0xff));
}

inline void put_i64(std::string& out, std::int64_t v) {
  put_u64(out, static_cast<std::uint64_t>(v));
}

inline void put_str(std::string& out, const std::string& s) {
  put_u64(out, s.size());
  out += s;
}

}  // namespace detail

inline std::string encode(const element& e) {
  using namespace detail;
  std::string out;
  switch (e.kind()) {
    case element_kind::int_mod: {
      const auto& v = e.as_int_mod();
      put_u8(out, 1);
      put_u8(out, v.modulus ? 1 : 0);
      put_i64(out, v.value);
      put_i64(out, v.modulus ? *v.modulus : 0);
      break;
    }
    case element_kind::vec_mod: {
      const auto& v = e.as_vec_mod();
      put_u8(out, 2);
      put_u64(out, v.coords.size());
      for (auto c : v.coords) put_i64(out, c);
      put_i64(out, v.modulus);
      break;
    }
    case element_kind::indexed: {
      const auto& v = e.as_indexed();
      put_u8(out, 3);
      put_i64(out, v.position);
      put_i64(out, v.value);
      break;
    }
    case element_kind::lang: {
      const auto& v = e.as_lang();
      put_u8(out, 4);
      put_i64(out, v.max_len);
      put_u64(out, v.strings.size());
      for (const auto& s : v.strings) put_str(out, s);
      break;
    }
    case element_kind::sym: {
      put_u8(out, 5);
      put_str(out, e.as_sym().name);
      break;
    }
  }
  return out;
}

// Universe descriptor: the carrier set T one instance lives in.
struct universe {
  element_kind kind = element_kind::sym;
  std::optional<std::int64_t> modulus;    // int_mod (nullopt = plain ints), vec_mod
  std::optional<std::int64_t> dimension;  // vec_mod
  std::string alphabet;                   // lang: sorted distinct characters
  std::optional<std::int64_t> max_len;    // lang
  std::optional<std::int64_t> horizon;    // indexed: positions range over [1, horizon]

  static universe ints() { return universe{element_kind::int_mod, {}, {}, "", {}, {}}; }

  static universe ints_mod(std::int64_t m) {
    return universe{element_kind::int_mod, m, {}, "", {}, {}};
  }

  static universe vectors(std::int64_t m, std::int64_t dim) {
    return universe{element_kind::vec_mod, m, dim, "", {}, {}};
  }

  static universe positions(std::optional<std::int64_t> horizon = std::nullopt) {
    return universe{element_kind::indexed, {}, {}, "", {}, horizon};
  }

  static universe languages(std::string alphabet, std::int64_t max_len) {
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    return universe{element_kind::lang, {}, {}, std::move(alphabet), max_len, {}};
  }

  static universe symbols() { return universe{element_kind::sym, {}, {}, "", {}, {}}; }
};

// Reduces a raw element to the unique canonical form of the universe, or
// rejects it. Idempotent. Missing parameter fields (an int without an
// explicit modulus, a language without a max_len) are adopted from the
// universe; conflicting ones are rejected rather than silently rewritten.
inline element canonicalize(const universe& u, const element& raw) {
  if (raw.kind() != u.kind) {
    throw error(errc::out_of_universe,
                std::string("expected a ") + element_kind_name(u.kind) +
                    " element, got " + element_kind_name(raw.kind()));
  }
  switch (u.kind) {
    case element_kind::int_mod: {
      const auto& v = raw.as_int_mod();
      if (v.modulus && u.modulus && *v.modulus != *u.modulus) {
        throw error(errc::out_of_universe,
                    "modulus " + std::to_string(*v.modulus) +
                        " does not match universe modulus " + std::to_string(*u.modulus));
      }
      if (v.modulus && !u.modulus) {
        throw error(errc::out_of_universe, "universe has plain integers, element has a modulus");
      }
      return element::int_mod(v.value, u.modulus);
    }
    case element_kind::vec_mod: {
      const auto& v = raw.as_vec_mod();
      if (!u.modulus || !u.dimension) {
        throw error(errc::out_of_universe, "vector universe lacks modulus or dimension");
      }
      if (v.modulus != 0 && v.modulus != *u.modulus) {
        throw error(errc::out_of_universe,
                    "vector modulus " + std::to_string(v.modulus) +
                        " does not match universe modulus " + std::to_string(*u.modulus));
      }
      if (static_cast<std::int64_t>(v.coords.size()) != *u.dimension) {
        throw error(errc::out_of_universe,
                    "vector has dimension " + std::to_string(v.coords.size()) +
                        ", universe requires " + std::to_string(*u.dimension));
      }
      return element::vec_mod(v.coords, *u.modulus);
    }
    case element_kind::indexed: {
      const auto& v = raw.as_indexed();
      if (v.position < 1) {
        throw error(errc::out_of_universe,
                    "position must be >= 1, got " + std::to_string(v.position));
      }
      if (u.horizon && v.position > *u.horizon) {
        throw error(errc::out_of_universe,
                    "position " + std::to_string(v.position) + " exceeds horizon " +
                        std::to_string(*u.horizon));
      }
      return element::indexed(v.position, v.value);
    }
    case element_kind::lang: {
      const auto& v = raw.as_lang();
      if (!u.max_len) {
        throw error(errc::out_of_universe, "language universe lacks max_len");
      }
      for (const auto& s : v.strings) {
        if (static_cast<std::int64_t>(s.size()) > *u.max_len) {
          throw error(errc::out_of_universe,
                      "string \"" + s + "\" exceeds max_len " + std::to_string(*u.max_len));
        }
        for (char ch : s) {
          if (u.alphabet.find(ch) == std::string::npos) {
            throw error(errc::out_of_universe,
                        std::string("character '") + ch + "' is outside the alphabet");
          }
        }
      }
      return element::lang(v.strings, *u.max_len);
    }
    case element_kind::sym: {
      const auto& v = raw.as_sym();
      if (v.name.empty()) {
        throw error(errc::out_of_universe, "symbol name must be non-empty");
      }
      return element::sym(v.name);
    }
  }
  throw error(errc::out_of_universe, "unknown universe kind");
}

}  // namespace recset
