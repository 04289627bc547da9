#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "recset/instance.hpp"
#include "recset/langset.hpp"

namespace recset {

namespace detail {

inline std::int64_t narrow_i128(__int128 v, const std::string& what) {
  if (v > static_cast<__int128>(std::numeric_limits<std::int64_t>::max()) ||
      v < static_cast<__int128>(std::numeric_limits<std::int64_t>::min())) {
    throw error(errc::value_overflow, what + " overflows 64-bit integers");
  }
  return static_cast<std::int64_t>(v);
}

inline std::int64_t mod_reduce(__int128 v, std::int64_t m) {
  __int128 r = v % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Named operations on modular integers and residue vectors. These are the
// operation vocabulary of the custom-modular builder, of op extension, and of
// the randomized test instances. Tokens: add, mul, neg, double, succ,
// affine:a,b and (vectors only) smul:c. The token doubles as the operation
// name, so witnesses stay greppable.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::int64_t> parse_op_params(std::string_view text,
                                                 const std::string& token) {
  std::vector<std::int64_t> params;
  size_t start = 0;
  while (start <= text.size()) {
    size_t pos = text.find(',', start);
    std::string_view part =
        pos == std::string_view::npos ? text.substr(start) : text.substr(start, pos - start);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw error(errc::validation_error,
                  "bad parameter \"" + std::string(part) + "\" in operation token \"" +
                      token + "\"");
    }
    params.push_back(value);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return params;
}

inline std::int64_t int_arith(std::optional<std::int64_t> m, __int128 v,
                              const std::string& what) {
  if (m) return mod_reduce(v, *m);
  return narrow_i128(v, what);
}

}  // namespace detail

inline operation make_named_op(const universe& u, const std::string& token, int id = 0) {
  std::string name = token;
  std::string_view params_text;
  if (size_t colon = token.find(':'); colon != std::string::npos) {
    name = token.substr(0, colon);
    params_text = std::string_view(token).substr(colon + 1);
  }
  std::vector<std::int64_t> params;
  if (!params_text.empty()) params = detail::parse_op_params(params_text, token);

  auto need_params = [&](size_t n) {
    if (params.size() != n) {
      throw error(errc::validation_error,
                  "operation \"" + name + "\" takes " + std::to_string(n) +
                      " parameter(s), token was \"" + token + "\"");
    }
  };

  if (u.kind == element_kind::int_mod) {
    const std::optional<std::int64_t> m = u.modulus;
    auto unary = [&](auto fn) {
      return operation{id, token, 1,
                       [m, fn](std::span<const element> a) -> std::optional<element> {
                         return element::int_mod(fn(m, a[0].as_int_mod().value), m);
                       }};
    };
    if (name == "add") {
      need_params(0);
      return operation{id, token, 2,
                       [m](std::span<const element> a) -> std::optional<element> {
                         __int128 v = static_cast<__int128>(a[0].as_int_mod().value) +
                                      a[1].as_int_mod().value;
                         return element::int_mod(detail::int_arith(m, v, "add"), m);
                       }};
    }
    if (name == "mul") {
      need_params(0);
      return operation{id, token, 2,
                       [m](std::span<const element> a) -> std::optional<element> {
                         __int128 v = static_cast<__int128>(a[0].as_int_mod().value) *
                                      a[1].as_int_mod().value;
                         return element::int_mod(detail::int_arith(m, v, "mul"), m);
                       }};
    }
    if (name == "neg") {
      need_params(0);
      return unary([](std::optional<std::int64_t> mod, std::int64_t x) {
        return detail::int_arith(mod, -static_cast<__int128>(x), "neg");
      });
    }
    if (name == "double") {
      need_params(0);
      return unary([](std::optional<std::int64_t> mod, std::int64_t x) {
        return detail::int_arith(mod, 2 * static_cast<__int128>(x), "double");
      });
    }
    if (name == "succ") {
      need_params(0);
      return unary([](std::optional<std::int64_t> mod, std::int64_t x) {
        return detail::int_arith(mod, static_cast<__int128>(x) + 1, "succ");
      });
    }
    if (name == "affine") {
      need_params(2);
      std::int64_t ca = params[0], cb = params[1];
      return unary([ca, cb](std::optional<std::int64_t> mod, std::int64_t x) {
        return detail::int_arith(mod, static_cast<__int128>(ca) * x + cb, "affine");
      });
    }
    throw error(errc::validation_error,
                "unknown integer operation \"" + name + "\"; expected one of "
                "add, mul, neg, double, succ, affine:a,b");
  }

  if (u.kind == element_kind::vec_mod) {
    if (!u.modulus || !u.dimension) {
      throw error(errc::validation_error, "vector universe lacks modulus or dimension");
    }
    const std::int64_t m = *u.modulus;
    auto componentwise = [&](auto fn) {
      return operation{id, token, 1,
                       [m, fn](std::span<const element> a) -> std::optional<element> {
                         std::vector<std::int64_t> out;
                         out.reserve(a[0].as_vec_mod().coords.size());
                         for (auto c : a[0].as_vec_mod().coords)
                           out.push_back(detail::mod_reduce(fn(c), m));
                         return element::vec_mod(std::move(out), m);
                       }};
    };
    if (name == "add") {
      need_params(0);
      return operation{id, token, 2,
                       [m](std::span<const element> a) -> std::optional<element> {
                         const auto& x = a[0].as_vec_mod().coords;
                         const auto& y = a[1].as_vec_mod().coords;
                         std::vector<std::int64_t> out(x.size());
                         for (size_t i = 0; i < x.size(); ++i)
                           out[i] = detail::mod_reduce(static_cast<__int128>(x[i]) + y[i], m);
                         return element::vec_mod(std::move(out), m);
                       }};
    }
    if (name == "neg") {
      need_params(0);
      return componentwise([](std::int64_t c) { return -static_cast<__int128>(c); });
    }
    if (name == "double") {
      need_params(0);
      return componentwise([](std::int64_t c) { return 2 * static_cast<__int128>(c); });
    }
    if (name == "succ") {
      need_params(0);
      return componentwise([](std::int64_t c) { return static_cast<__int128>(c) + 1; });
    }
    if (name == "smul") {
      need_params(1);
      std::int64_t ca = params[0];
      return componentwise([ca](std::int64_t c) { return static_cast<__int128>(ca) * c; });
    }
    if (name == "affine") {
      need_params(2);
      std::int64_t ca = params[0], cb = params[1];
      return componentwise(
          [ca, cb](std::int64_t c) { return static_cast<__int128>(ca) * c + cb; });
    }
    throw error(errc::validation_error,
                "unknown vector operation \"" + name + "\"; expected one of "
                "add, neg, double, succ, smul:c, affine:a,b");
  }

  throw error(errc::validation_error,
              std::string("no named operations for ") + element_kind_name(u.kind) +
                  " universes");
}

// ---------------------------------------------------------------------------
// Builders for the worked instances.
// ---------------------------------------------------------------------------

// A finite set presented as the closure of itself under the identity map.
inline instance build_identity_closure(std::vector<element> elements, limits lim = {}) {
  if (elements.empty()) {
    throw error(errc::empty_base, "identity closure needs at least one element");
  }
  const element_kind kind = elements.front().kind();
  for (const auto& e : elements) {
    if (e.kind() != kind) {
      throw error(errc::invalid_instance, "identity closure elements must share one universe");
    }
  }
  universe u;
  switch (kind) {
    case element_kind::int_mod:
      u = elements.front().as_int_mod().modulus
              ? universe::ints_mod(*elements.front().as_int_mod().modulus)
              : universe::ints();
      break;
    case element_kind::vec_mod:
      u = universe::vectors(elements.front().as_vec_mod().modulus,
                            static_cast<std::int64_t>(elements.front().as_vec_mod().coords.size()));
      break;
    case element_kind::indexed:
      u = universe::positions();
      break;
    case element_kind::lang: {
      std::string alphabet;
      std::int64_t max_len = 0;
      for (const auto& e : elements) {
        max_len = std::max(max_len, e.as_lang().max_len);
        for (const auto& s : e.as_lang().strings) {
          max_len = std::max(max_len, static_cast<std::int64_t>(s.size()));
          alphabet += s;
        }
      }
      u = universe::languages(alphabet, max_len);
      break;
    }
    case element_kind::sym:
      u = universe::symbols();
      break;
  }
  operation id_op{0, "id", 1,
                  [](std::span<const element> a) -> std::optional<element> { return a[0]; }};
  return instance::make(u, std::move(elements), {id_op}, lim);
}

enum class group_flavor { additive, multiplicative };

// The cyclic subgroup of (Z_m, +) or (Z_m^*, .) generated by one element:
// base {g}, one binary group operation. The identity arises as a power of g.
inline instance build_cyclic_group(std::int64_t modulus, std::int64_t generator,
                                   group_flavor flavor, limits lim = {}) {
  if (modulus < 2) {
    throw error(errc::invalid_input, "cyclic group modulus must be >= 2");
  }
  universe u = universe::ints_mod(modulus);
  std::int64_t g = floored_mod(generator, modulus);
  if (flavor == group_flavor::multiplicative && std::gcd(g, modulus) != 1) {
    throw error(errc::not_a_unit, std::to_string(g) + " is not a unit modulo " +
                                      std::to_string(modulus));
  }
  operation op = make_named_op(u, flavor == group_flavor::additive ? "add" : "mul");
  return instance::make(u, {element::int_mod(g, modulus)}, {op}, lim);
}

// A linear recurrence a_{n+k} = c_0 a_n + ... + c_{k-1} a_{n+k-1} + constant,
// cut off at a horizon so the carrier stays finite.
struct recurrence_spec {
  std::int64_t order_k = 1;
  std::vector<std::int64_t> coeffs;
  std::int64_t constant = 0;
  std::vector<std::int64_t> initial;
  std::int64_t horizon = 1;
};

// Terms as (position, value) pairs; the step operation is partial, defined
// only on tuples whose positions are consecutive and whose successor still
// fits under the horizon.
inline instance build_recurrence(const recurrence_spec& spec, limits lim = {}) {
  const std::int64_t k = spec.order_k;
  if (k < 1 || static_cast<std::int64_t>(spec.coeffs.size()) != k ||
      static_cast<std::int64_t>(spec.initial.size()) != k || spec.horizon < k) {
    throw error(errc::invalid_spec,
                "recurrence needs k >= 1, k coefficients, k initial values, horizon >= k");
  }
  universe u = universe::positions(spec.horizon);
  std::vector<element> base;
  for (std::int64_t i = 0; i < k; ++i) {
    base.push_back(element::indexed(i + 1, spec.initial[static_cast<size_t>(i)]));
  }
  std::vector<std::int64_t> coeffs = spec.coeffs;
  std::int64_t constant = spec.constant;
  std::int64_t horizon = spec.horizon;
  operation step{
      0, "step", static_cast<int>(k),
      [coeffs, constant, horizon, k](std::span<const element> a) -> std::optional<element> {
        std::int64_t n = a[0].as_indexed().position;
        for (std::int64_t j = 0; j < k; ++j) {
          if (a[static_cast<size_t>(j)].as_indexed().position != n + j) return std::nullopt;
        }
        if (n + k > horizon) return std::nullopt;
        __int128 sum = constant;
        for (std::int64_t j = 0; j < k; ++j) {
          sum += static_cast<__int128>(coeffs[static_cast<size_t>(j)]) *
                 a[static_cast<size_t>(j)].as_indexed().value;
        }
        return element::indexed(n + k, detail::narrow_i128(sum, "recurrence term"));
      }};
  return instance::make(u, std::move(base), {step}, lim);
}

// The submodule of Z_m^d generated by a set of vectors: one internal vector
// addition plus one unary scalar-multiplication operation per scalar, since
// operations consume carrier elements only and scalars live outside T.
inline instance build_span(std::int64_t modulus, std::int64_t dimension,
                           const std::vector<std::vector<std::int64_t>>& generators,
                           limits lim = {}) {
  if (modulus < 2) throw error(errc::invalid_input, "span modulus must be >= 2");
  if (dimension < 1) throw error(errc::invalid_input, "span dimension must be >= 1");
  if (generators.empty()) throw error(errc::empty_base, "span needs at least one generator");
  universe u = universe::vectors(modulus, dimension);
  std::vector<element> base;
  for (const auto& g : generators) {
    if (static_cast<std::int64_t>(g.size()) != dimension) {
      throw error(errc::dimension_mismatch,
                  "generator has dimension " + std::to_string(g.size()) + ", expected " +
                      std::to_string(dimension));
    }
    element e = element::vec_mod(g, modulus);
    bool seen = false;
    for (const auto& b : base) seen = seen || b == e;
    if (!seen) base.push_back(e);
  }
  std::vector<operation> ops;
  ops.push_back(make_named_op(u, "add"));
  for (std::int64_t c = 0; c < modulus; ++c) {
    ops.push_back(make_named_op(u, "smul:" + std::to_string(c)));
  }
  return instance::make(u, std::move(base), std::move(ops), lim);
}

// Regular sets over an alphabet, truncated at max_len: base languages are
// the empty set, {epsilon}, and the singletons; the operations are union,
// truncated concatenation, and truncated star. The empty set comes first in
// the base, so it is what description padding repeats.
inline instance build_regular_sets(const std::string& alphabet, std::int64_t max_len,
                                   limits lim = {}) {
  if (alphabet.empty()) throw error(errc::bad_alphabet, "alphabet must be non-empty");
  for (char ch : alphabet) {
    if (!std::isalnum(static_cast<unsigned char>(ch))) {
      throw error(errc::bad_alphabet,
                  std::string("alphabet symbol '") + ch + "' is not alphanumeric");
    }
  }
  std::string sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw error(errc::bad_alphabet, "alphabet symbols must be distinct");
  }
  if (max_len < 1) {
    throw error(errc::invalid_input,
                "max_len must be >= 1 so the singleton base languages are representable");
  }
  universe u = universe::languages(sorted, max_len);
  std::vector<element> base;
  base.push_back(element::lang({}, max_len));      // empty set
  base.push_back(element::lang({""}, max_len));    // {epsilon}
  for (char ch : sorted) base.push_back(element::lang({std::string(1, ch)}, max_len));

  operation op_union{0, "union", 2,
                     [](std::span<const element> a) -> std::optional<element> {
                       return lang_union(a[0], a[1]);
                     }};
  operation op_concat{1, "concat", 2,
                      [](std::span<const element> a) -> std::optional<element> {
                        return lang_concat(a[0], a[1]);
                      }};
  operation op_star{2, "star", 1,
                    [](std::span<const element> a) -> std::optional<element> {
                      return lang_star(a[0]);
                    }};
  return instance::make(u, std::move(base), {op_union, op_concat, op_star}, lim);
}

// Explicit base residues plus named modular operations; the CLI's free-form
// modular instance.
inline instance build_custom_modular(std::int64_t modulus,
                                     const std::vector<std::int64_t>& base_residues,
                                     const std::vector<std::string>& op_tokens,
                                     limits lim = {}) {
  if (modulus < 2) throw error(errc::invalid_input, "modulus must be >= 2");
  if (base_residues.empty()) throw error(errc::empty_base, "base must be non-empty");
  if (op_tokens.empty()) {
    throw error(errc::invalid_instance, "at least one operation token is required");
  }
  universe u = universe::ints_mod(modulus);
  std::vector<element> base;
  for (auto r : base_residues) {
    element e = element::int_mod(r, modulus);
    bool seen = false;
    for (const auto& b : base) seen = seen || b == e;
    if (!seen) base.push_back(e);
  }
  std::vector<operation> ops;
  for (const auto& token : op_tokens) ops.push_back(make_named_op(u, token));
  return instance::make(u, std::move(base), std::move(ops), lim);
}

}  // namespace recset
