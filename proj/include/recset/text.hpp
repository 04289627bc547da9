#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "recset/element.hpp"
#include "recset/errors.hpp"

namespace recset {

// Textual element forms:
//   int_mod  "2"           (modulus implied by the instance universe)
//   vec_mod  "[2,0]%6"
//   indexed  "(3->2)"
//   lang     "{}", "{eps}", "{a,ab}"   ("eps" is the reserved token for the
//                                       empty string)
//   sym      bare token
inline std::string to_text(const element& e) {
  switch (e.kind()) {
    case element_kind::int_mod:
      return std::to_string(e.as_int_mod().value);
    case element_kind::vec_mod: {
      const auto& v = e.as_vec_mod();
      std::string out = "[";
      for (size_t i = 0; i < v.coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v.coords[i]);
      }
      out += "]%" + std::to_string(v.modulus);
      return out;
    }
    case element_kind::indexed: {
      const auto& v = e.as_indexed();
      return "(" + std::to_string(v.position) + "->" + std::to_string(v.value) + ")";
    }
    case element_kind::lang: {
      const auto& v = e.as_lang();
      std::string out = "{";
      for (size_t i = 0; i < v.strings.size(); ++i) {
        if (i) out += ",";
        out += v.strings[i].empty() ? "eps" : v.strings[i];
      }
      out += "}";
      return out;
    }
    case element_kind::sym:
      return e.as_sym().name;
  }
  return "?";
}

namespace detail {

inline std::int64_t parse_i64(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw error(errc::parse_error,
                "expected an integer for " + std::string(what) + ", got \"" +
                    std::string(text) + "\"");
  }
  return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace detail

// Parses the textual form against a universe; the result is canonical.
// The universe's kind selects the grammar, so a bare token is a symbol in a
// symbol universe and an integer in an integer universe.
inline element parse_element(std::string_view text, const universe& u) {
  using detail::parse_i64;
  using detail::split;
  if (text.empty()) throw error(errc::parse_error, "empty element text");
  switch (u.kind) {
    case element_kind::int_mod: {
      std::optional<std::int64_t> modulus;
      std::string_view digits = text;
      if (size_t pos = text.find('%'); pos != std::string_view::npos) {
        modulus = parse_i64(text.substr(pos + 1), "modulus");
        digits = text.substr(0, pos);
      }
      return canonicalize(u, element::int_mod(parse_i64(digits, "value"), modulus));
    }
    case element_kind::vec_mod: {
      if (text.front() != '[') {
        throw error(errc::parse_error, "vector must look like [a,b]%m, got \"" +
                                           std::string(text) + "\"");
      }
      size_t close = text.find(']');
      if (close == std::string_view::npos) {
        throw error(errc::parse_error, "vector is missing ']'");
      }
      std::int64_t modulus = 0;  // 0 = adopt the universe modulus
      std::string_view rest = text.substr(close + 1);
      if (!rest.empty()) {
        if (rest.front() != '%') {
          throw error(errc::parse_error, "unexpected trailing text after ']'");
        }
        modulus = parse_i64(rest.substr(1), "modulus");
      }
      std::vector<std::int64_t> coords;
      std::string_view body = text.substr(1, close - 1);
      if (!body.empty()) {
        for (auto part : split(body, ',')) coords.push_back(parse_i64(part, "coordinate"));
      }
      return canonicalize(u, element::vec_mod(std::move(coords), modulus));
    }
    case element_kind::indexed: {
      if (text.front() != '(' || text.back() != ')') {
        throw error(errc::parse_error, "indexed value must look like (pos->value), got \"" +
                                           std::string(text) + "\"");
      }
      std::string_view body = text.substr(1, text.size() - 2);
      size_t arrow = body.find("->");
      if (arrow == std::string_view::npos) {
        throw error(errc::parse_error, "indexed value is missing '->'");
      }
      return canonicalize(u, element::indexed(parse_i64(body.substr(0, arrow), "position"),
                                              parse_i64(body.substr(arrow + 2), "value")));
    }
    case element_kind::lang: {
      if (text.front() != '{' || text.back() != '}') {
        throw error(errc::parse_error, "language must look like {a,ab}, got \"" +
                                           std::string(text) + "\"");
      }
      std::string_view body = text.substr(1, text.size() - 2);
      std::vector<std::string> strings;
      if (!body.empty()) {
        for (auto part : split(body, ',')) {
          if (part == "eps") {
            strings.emplace_back();
          } else if (part.empty()) {
            throw error(errc::parse_error, "empty string in language; use \"eps\"");
          } else {
            strings.emplace_back(part);
          }
        }
      }
      return canonicalize(u, element::lang(std::move(strings), u.max_len.value_or(0)));
    }
    case element_kind::sym:
      return canonicalize(u, element::sym(std::string(text)));
  }
  throw error(errc::parse_error, "unknown universe kind");
}

}  // namespace recset
