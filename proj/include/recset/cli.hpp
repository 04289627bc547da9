#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "recset/descriptions.hpp"
#include "recset/engine.hpp"
#include "recset/instances.hpp"
#include "recset/text.hpp"
#include "recset/verify.hpp"

// Command-line front end. Reports are single-line JSON with keys in fixed
// insertion order, so identical inputs give byte-identical outputs.
//
// Exit codes: 0 verified/success, 1 refuted or violated hypothesis (a report
// is still emitted), 2 input errors, 3 I/O errors.
namespace recset::cli {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Files and JSON plumbing.
// ---------------------------------------------------------------------------

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw error(errc::io_error, "cannot read " + path);
  return std::move(buf).str();
}

inline ordered_json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(errc::parse_error, what + ": " + e.what());
  }
}

namespace detail {

inline void check_keys(const ordered_json& obj, const std::string& ctx,
                       std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw error(errc::validation_error, ctx + ": unknown key \"" + key + "\"");
  }
}

inline const ordered_json& require_field(const ordered_json& obj, const char* key,
                                         const std::string& ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw error(errc::validation_error, ctx + ": missing key \"" + std::string(key) + "\"");
  }
  return *it;
}

inline std::int64_t as_int(const ordered_json& v, const std::string& ctx) {
  if (!v.is_number_integer()) {
    throw error(errc::validation_error, ctx + ": expected an integer");
  }
  return v.get<std::int64_t>();
}

inline std::int64_t int_field(const ordered_json& obj, const char* key,
                              const std::string& ctx) {
  return as_int(require_field(obj, key, ctx), ctx + "." + key);
}

inline std::int64_t int_field_or(const ordered_json& obj, const char* key,
                                 const std::string& ctx, std::int64_t fallback) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : as_int(*it, ctx + "." + key);
}

inline std::string str_field(const ordered_json& obj, const char* key,
                             const std::string& ctx) {
  const ordered_json& v = require_field(obj, key, ctx);
  if (!v.is_string()) {
    throw error(errc::validation_error, ctx + "." + key + ": expected a string");
  }
  return v.get<std::string>();
}

inline std::vector<std::int64_t> int_array_field(const ordered_json& obj, const char* key,
                                                 const std::string& ctx) {
  const ordered_json& v = require_field(obj, key, ctx);
  if (!v.is_array()) {
    throw error(errc::validation_error, ctx + "." + key + ": expected an array");
  }
  std::vector<std::int64_t> out;
  for (const auto& item : v) out.push_back(as_int(item, ctx + "." + key + "[]"));
  return out;
}

inline std::vector<std::string> str_array_field(const ordered_json& obj, const char* key,
                                                const std::string& ctx) {
  const ordered_json& v = require_field(obj, key, ctx);
  if (!v.is_array()) {
    throw error(errc::validation_error, ctx + "." + key + ": expected an array");
  }
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) {
      throw error(errc::validation_error, ctx + "." + key + ": expected strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Instance specification files.
//
// {"version": 1, "builder": "...", "params": {...}, "limits": {...}}
// Unknown keys are rejected; params mirror the builder signatures.
// ---------------------------------------------------------------------------

inline limits parse_limits(const ordered_json& j) {
  detail::check_keys(j, "limits", {"max_order", "max_elements", "max_tuple_evals"});
  limits lim;
  lim.max_order = detail::int_field_or(j, "max_order", "limits", lim.max_order);
  lim.max_elements = detail::int_field_or(j, "max_elements", "limits", lim.max_elements);
  lim.max_tuple_evals =
      detail::int_field_or(j, "max_tuple_evals", "limits", lim.max_tuple_evals);
  return lim;
}

namespace detail {

inline instance load_identity(const ordered_json& params, limits lim) {
  const std::string ctx = "params";
  std::string kind = "sym";
  if (params.contains("kind")) kind = str_field(params, "kind", ctx);
  universe u;
  if (kind == "sym") {
    check_keys(params, ctx, {"kind", "elements"});
    u = universe::symbols();
  } else if (kind == "int") {
    check_keys(params, ctx, {"kind", "elements"});
    u = universe::ints();
  } else if (kind == "int-mod") {
    check_keys(params, ctx, {"kind", "elements", "modulus"});
    u = universe::ints_mod(int_field(params, "modulus", ctx));
  } else if (kind == "vec") {
    check_keys(params, ctx, {"kind", "elements", "modulus", "dimension"});
    u = universe::vectors(int_field(params, "modulus", ctx),
                          int_field(params, "dimension", ctx));
  } else if (kind == "indexed") {
    check_keys(params, ctx, {"kind", "elements", "horizon"});
    u = params.contains("horizon")
            ? universe::positions(int_field(params, "horizon", ctx))
            : universe::positions();
  } else if (kind == "lang") {
    check_keys(params, ctx, {"kind", "elements", "alphabet", "max_len"});
    u = universe::languages(str_field(params, "alphabet", ctx),
                            int_field(params, "max_len", ctx));
  } else {
    throw error(errc::validation_error,
                ctx + ".kind: unknown kind \"" + kind +
                    "\"; expected sym, int, int-mod, vec, indexed, or lang");
  }
  std::vector<element> elems;
  for (const auto& text : str_array_field(params, "elements", ctx)) {
    elems.push_back(parse_element(text, u));
  }
  return build_identity_closure(std::move(elems), lim);
}

}  // namespace detail

inline instance instance_from_spec_json(const ordered_json& spec) {
  if (!spec.is_object()) {
    throw error(errc::validation_error, "instance spec must be a JSON object");
  }
  detail::check_keys(spec, "spec", {"version", "builder", "params", "limits"});
  if (spec.contains("version") && detail::as_int(spec["version"], "spec.version") != 1) {
    throw error(errc::validation_error, "spec.version: only version 1 is supported");
  }
  std::string builder = detail::str_field(spec, "builder", "spec");
  const ordered_json& params = detail::require_field(spec, "params", "spec");
  if (!params.is_object()) {
    throw error(errc::validation_error, "spec.params: expected an object");
  }
  limits lim;
  if (spec.contains("limits")) {
    if (!spec["limits"].is_object()) {
      throw error(errc::validation_error, "spec.limits: expected an object");
    }
    lim = parse_limits(spec["limits"]);
  }

  const std::string ctx = "params";
  if (builder == "identity") {
    return detail::load_identity(params, lim);
  }
  if (builder == "cyclic") {
    detail::check_keys(params, ctx, {"modulus", "generator", "flavor"});
    std::string flavor = detail::str_field(params, "flavor", ctx);
    if (flavor != "additive" && flavor != "multiplicative") {
      throw error(errc::validation_error,
                  "params.flavor: expected \"additive\" or \"multiplicative\"");
    }
    return build_cyclic_group(detail::int_field(params, "modulus", ctx),
                              detail::int_field(params, "generator", ctx),
                              flavor == "additive" ? group_flavor::additive
                                                   : group_flavor::multiplicative,
                              lim);
  }
  if (builder == "recurrence") {
    detail::check_keys(params, ctx, {"k", "coeffs", "constant", "initial", "horizon"});
    recurrence_spec rs;
    rs.order_k = detail::int_field(params, "k", ctx);
    rs.coeffs = detail::int_array_field(params, "coeffs", ctx);
    rs.constant = detail::int_field_or(params, "constant", ctx, 0);
    rs.initial = detail::int_array_field(params, "initial", ctx);
    rs.horizon = detail::int_field(params, "horizon", ctx);
    return build_recurrence(rs, lim);
  }
  if (builder == "span") {
    detail::check_keys(params, ctx, {"modulus", "dimension", "generators"});
    const ordered_json& gens = detail::require_field(params, "generators", ctx);
    if (!gens.is_array()) {
      throw error(errc::validation_error, "params.generators: expected an array");
    }
    std::vector<std::vector<std::int64_t>> generators;
    for (const auto& g : gens) {
      if (!g.is_array()) {
        throw error(errc::validation_error,
                    "params.generators[]: expected arrays of integers");
      }
      std::vector<std::int64_t> coords;
      for (const auto& c : g) coords.push_back(detail::as_int(c, "params.generators[][]"));
      generators.push_back(std::move(coords));
    }
    return build_span(detail::int_field(params, "modulus", ctx),
                      detail::int_field(params, "dimension", ctx), generators, lim);
  }
  if (builder == "regular") {
    detail::check_keys(params, ctx, {"alphabet", "max_len"});
    return build_regular_sets(detail::str_field(params, "alphabet", ctx),
                              detail::int_field(params, "max_len", ctx), lim);
  }
  if (builder == "custom-modular") {
    detail::check_keys(params, ctx, {"modulus", "base", "ops"});
    return build_custom_modular(detail::int_field(params, "modulus", ctx),
                                detail::int_array_field(params, "base", ctx),
                                detail::str_array_field(params, "ops", ctx), lim);
  }
  throw error(errc::validation_error,
              "spec.builder: unknown builder \"" + builder +
                  "\"; expected identity, cyclic, recurrence, span, regular, or "
                  "custom-modular");
}

inline instance load_instance_spec(const std::string& path) {
  return instance_from_spec_json(parse_json_text(read_text_file(path), path));
}

inline std::vector<element> load_element_list(const std::string& path, const universe& u) {
  ordered_json j = parse_json_text(read_text_file(path), path);
  if (!j.is_array()) {
    throw error(errc::validation_error, path + ": expected a JSON array of element strings");
  }
  std::vector<element> out;
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw error(errc::validation_error, path + ": expected element strings");
    }
    out.push_back(parse_element(item.get<std::string>(), u));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named predicates for prop-check. Tokens: parity[:even|:odd], range:lo,hi,
// divisible:k, maxlen:L, span-representable.
// ---------------------------------------------------------------------------

inline std::function<bool(const element&)> make_predicate(const std::string& token,
                                                          const instance& inst) {
  std::string name = token;
  std::string params_text;
  if (size_t colon = token.find(':'); colon != std::string::npos) {
    name = token.substr(0, colon);
    params_text = token.substr(colon + 1);
  }
  const universe& u = inst.carrier();
  auto need_ints = [&] {
    if (u.kind != element_kind::int_mod) {
      throw error(errc::validation_error,
                  "predicate \"" + name + "\" needs an integer universe");
    }
  };

  if (name == "parity") {
    need_ints();
    if (!params_text.empty() && params_text != "even" && params_text != "odd") {
      throw error(errc::validation_error, "parity takes \"even\" or \"odd\"");
    }
    const std::int64_t want = params_text == "odd" ? 1 : 0;
    return [want](const element& e) {
      return floored_mod(e.as_int_mod().value, 2) == want;
    };
  }
  if (name == "range") {
    need_ints();
    auto ps = recset::detail::parse_op_params(params_text, token);
    if (ps.size() != 2) {
      throw error(errc::validation_error, "range takes exactly lo,hi");
    }
    const std::int64_t lo = ps[0], hi = ps[1];
    return [lo, hi](const element& e) {
      std::int64_t v = e.as_int_mod().value;
      return lo <= v && v <= hi;
    };
  }
  if (name == "divisible") {
    need_ints();
    auto ps = recset::detail::parse_op_params(params_text, token);
    if (ps.size() != 1 || ps[0] == 0) {
      throw error(errc::validation_error, "divisible takes one non-zero divisor");
    }
    const std::int64_t k = ps[0];
    return [k](const element& e) { return e.as_int_mod().value % k == 0; };
  }
  if (name == "maxlen") {
    if (u.kind != element_kind::lang) {
      throw error(errc::validation_error, "maxlen needs a language universe");
    }
    auto ps = recset::detail::parse_op_params(params_text, token);
    if (ps.size() != 1 || ps[0] < 0) {
      throw error(errc::validation_error, "maxlen takes one bound >= 0");
    }
    const std::int64_t bound = ps[0];
    return [bound](const element& e) {
      for (const auto& s : e.as_lang().strings) {
        if (static_cast<std::int64_t>(s.size()) > bound) return false;
      }
      return true;
    };
  }
  if (name == "span-representable") {
    if (!params_text.empty()) {
      throw error(errc::validation_error, "span-representable takes no parameters");
    }
    if (u.kind != element_kind::vec_mod || !u.modulus) {
      throw error(errc::validation_error,
                  "span-representable needs a modular vector universe");
    }
    const std::int64_t m = *u.modulus;
    std::vector<std::vector<std::int64_t>> gens;
    for (const auto& b : inst.base()) gens.push_back(b.as_vec_mod().coords);
    double combos = 1;
    for (size_t i = 0; i < gens.size(); ++i) combos *= static_cast<double>(m);
    if (combos > 1e6) {
      throw error(errc::validation_error,
                  "span-representable would enumerate more than 10^6 coefficient tuples");
    }
    return [m, gens](const element& e) {
      const auto& target = e.as_vec_mod().coords;
      std::vector<std::int64_t> a(gens.size(), 0);
      while (true) {
        bool match = true;
        for (size_t c = 0; match && c < target.size(); ++c) {
          __int128 sum = 0;
          for (size_t i = 0; i < gens.size(); ++i) {
            sum += static_cast<__int128>(a[i]) * gens[i][c];
          }
          match = recset::detail::mod_reduce(sum, m) == target[c];
        }
        if (match) return true;
        size_t i = 0;
        while (i < a.size() && ++a[i] == m) a[i++] = 0;
        if (i == a.size()) return false;
      }
    };
  }
  throw error(errc::validation_error,
              "unknown predicate \"" + name + "\"; expected parity, range, divisible, "
              "maxlen, or span-representable");
}

// ---------------------------------------------------------------------------
// Report rendering.
// ---------------------------------------------------------------------------

namespace detail {

inline ordered_json render_elements(const std::vector<element>& es) {
  ordered_json out = ordered_json::array();
  for (const auto& e : es) out.push_back(to_text(e));
  return out;
}

inline ordered_json render_stat(const stratum_stats& s) {
  ordered_json out;
  out["tuples_enumerated"] = s.tuples_enumerated;
  out["evaluator_calls"] = s.evaluator_calls;
  out["undefined_skips"] = s.undefined_skips;
  return out;
}

inline std::string op_display_name(const instance& inst, int op_id) {
  const auto& ops = inst.ops();
  if (op_id >= 0 && static_cast<size_t>(op_id) < ops.size()) {
    return ops[static_cast<size_t>(op_id)].name;
  }
  return "op" + std::to_string(op_id);
}

inline ordered_json render_counterexample(const instance& inst,
                                          const closure_counterexample& c) {
  ordered_json out;
  out["op"] = c.op_id ? op_display_name(inst, *c.op_id) : "base";
  out["args"] = render_elements(c.args);
  out["result"] = to_text(c.result);
  return out;
}

// The standard block every report carries: strata, orders, witnesses (unless
// quiet), stats, termination.
inline void append_standard_block(ordered_json& report, const instance& inst,
                                  const saturation_result& res, bool quiet) {
  ordered_json strata = ordered_json::array();
  for (const auto& stratum : res.strata) strata.push_back(render_elements(stratum));
  report["strata"] = std::move(strata);

  ordered_json orders = ordered_json::object();
  for (const auto& [e, p] : res.order_map) orders[to_text(e)] = p;
  report["orders"] = std::move(orders);

  if (!quiet) {
    ordered_json witnesses = ordered_json::object();
    for (const auto& [e, p] : res.order_map) {
      const witness& w = res.witness_map.at(e);
      if (w.is_base()) {
        witnesses[to_text(e)] = "base";
      } else {
        ordered_json jw;
        jw["op"] = op_display_name(inst, *w.op_id);
        jw["args"] = render_elements(w.args);
        witnesses[to_text(e)] = std::move(jw);
      }
    }
    report["witnesses"] = std::move(witnesses);
  }

  ordered_json stages = ordered_json::array();
  for (const auto& s : res.stats) stages.push_back(render_stat(s));
  ordered_json stats;
  stats["per_stage"] = std::move(stages);
  stats["totals"] = render_stat(res.totals());
  report["stats"] = std::move(stats);
  report["termination"] = termination_reason_name(res.termination);
}

inline void require_fixpoint(const saturation_result& res, const std::string& command) {
  if (res.termination != termination_reason::fixpoint) {
    throw error(errc::validation_error,
                command + " needs a saturation that reaches its fixpoint; got " +
                    termination_reason_name(res.termination));
  }
}

// ---------------------------------------------------------------------------
// Argument grammar: <command> [options] [positionals...] <spec-path>.
// Options take their value as the following argument; --quiet is a flag.
// ---------------------------------------------------------------------------

struct parsed_args {
  std::string command;
  std::vector<std::string> positionals;  // spec path excluded
  std::string spec_path;
  std::map<std::string, std::string> options;
  bool quiet = false;
};

inline parsed_args parse_args(const std::vector<std::string>& args) {
  if (args.empty()) {
    throw error(errc::invalid_input,
                "usage: <command> [options] [args...] <spec.json>");
  }
  parsed_args p;
  p.command = args[0];
  static const std::set<std::string> value_options = {"--mode", "--style", "--pad",
                                                      "--universe", "--predicate"};
  std::vector<std::string> positionals;
  for (size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--quiet") {
      p.quiet = true;
    } else if (a.rfind("--", 0) == 0) {
      if (!value_options.count(a)) {
        throw error(errc::invalid_input, "unknown option " + a);
      }
      if (i + 1 >= args.size()) {
        throw error(errc::invalid_input, a + " needs a value");
      }
      std::string key = a.substr(2);
      if (p.options.count(key)) {
        throw error(errc::invalid_input, "duplicate option " + a);
      }
      p.options[key] = args[++i];
    } else {
      positionals.push_back(a);
    }
  }
  if (positionals.empty()) {
    throw error(errc::invalid_input, "missing instance spec path");
  }
  p.spec_path = positionals.back();
  positionals.pop_back();
  p.positionals = std::move(positionals);
  return p;
}

inline void need_positionals(const parsed_args& p, size_t n, const std::string& what) {
  if (p.positionals.size() != n) {
    throw error(errc::invalid_input,
                p.command + " takes " + what + " before the spec path");
  }
}

inline const std::string& need_option(const parsed_args& p, const std::string& key) {
  auto it = p.options.find(key);
  if (it == p.options.end()) {
    throw error(errc::invalid_input, p.command + " needs --" + key);
  }
  return it->second;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Command dispatch.
// ---------------------------------------------------------------------------

inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  try {
    detail::parsed_args p = detail::parse_args(args);
    static const std::set<std::string> commands = {
        "saturate",     "order",          "derive",
        "validate-desc", "check-closed",  "verify-minimal",
        "verify-intersection", "extend-base", "extend-ops",
        "prop-check"};
    if (!commands.count(p.command)) {
      throw error(errc::invalid_input, "unknown command \"" + p.command + "\"");
    }

    instance inst = load_instance_spec(p.spec_path);

    saturation_mode mode = saturation_mode::semi_naive;
    if (auto it = p.options.find("mode"); it != p.options.end()) {
      if (it->second == "naive") {
        mode = saturation_mode::naive;
      } else if (it->second == "semi-naive") {
        mode = saturation_mode::semi_naive;
      } else {
        throw error(errc::invalid_input, "--mode takes naive or semi-naive");
      }
    }
    saturation_result res = saturate(inst, mode);

    ordered_json report;
    report["version"] = 1;
    report["command"] = p.command;
    report["mode"] = saturation_mode_name(mode);
    detail::append_standard_block(report, inst, res, p.quiet);

    int exit_code = 0;

    if (p.command == "saturate") {
      detail::need_positionals(p, 0, "no arguments");
    } else if (p.command == "order") {
      detail::need_positionals(p, 1, "one element");
      element e = parse_element(p.positionals[0], inst.carrier());
      ordered_json q;
      q["element"] = to_text(e);
      try {
        std::int64_t ord = order_of(res, e);
        q["present"] = true;
        q["order"] = ord;
      } catch (const not_in_m_error& ex) {
        q["present"] = false;
        q["absence"] = ex.known_absent() ? "proven" : "unknown";
        exit_code = 1;
      }
      report["query"] = std::move(q);
    } else if (p.command == "derive") {
      detail::need_positionals(p, 1, "one element");
      element target = parse_element(p.positionals[0], inst.carrier());
      description_style style = description_style::paper;
      if (auto it = p.options.find("style"); it != p.options.end()) {
        if (it->second == "paper") {
          style = description_style::paper;
        } else if (it->second == "compact") {
          style = description_style::compact;
        } else {
          throw error(errc::invalid_input, "--style takes paper or compact");
        }
      }
      std::int64_t pad = 0;
      if (auto it = p.options.find("pad"); it != p.options.end()) {
        pad = recset::detail::parse_i64(it->second, "--pad");
      }
      ordered_json d;
      d["style"] = style == description_style::paper ? "paper" : "compact";
      d["target"] = to_text(target);
      try {
        description desc = extract_description(res, target, style);
        if (pad != 0) desc = pad_description(desc, pad, inst);
        d["padding"] = pad;
        d["length"] = desc.length();
        d["sequence"] = detail::render_elements(desc.seq);
      } catch (const not_in_m_error& ex) {
        d["present"] = false;
        d["absence"] = ex.known_absent() ? "proven" : "unknown";
        exit_code = 1;
      }
      report["description"] = std::move(d);
    } else if (p.command == "validate-desc") {
      detail::need_positionals(p, 2, "a description file and a target element");
      std::vector<element> seq = load_element_list(p.positionals[0], inst.carrier());
      element target = parse_element(p.positionals[1], inst.carrier());
      description_check chk = validate_description(inst, seq, target);
      ordered_json v;
      v["target"] = to_text(target);
      v["sequence"] = detail::render_elements(seq);
      v["valid"] = chk.valid;
      if (!chk.valid) {
        v["invalid_index"] = chk.invalid_index;
        v["reason"] = chk.reason;
        exit_code = 1;
      }
      report["validation"] = std::move(v);
    } else if (p.command == "check-closed") {
      detail::need_positionals(p, 1, "a set file");
      std::vector<element> candidate = load_element_list(p.positionals[0], inst.carrier());
      closure_report rep = is_recursively_closed(candidate, inst);
      ordered_json c;
      c["candidate_size"] = candidate.size();
      c["closed"] = rep.closed;
      ordered_json ces = ordered_json::array();
      for (const auto& ce : rep.counterexamples) {
        ces.push_back(detail::render_counterexample(inst, ce));
      }
      c["counterexamples"] = std::move(ces);
      report["closure"] = std::move(c);
      exit_code = rep.closed ? 0 : 1;
    } else if (p.command == "verify-minimal" || p.command == "verify-intersection") {
      detail::need_positionals(p, 0, "no arguments");
      detail::require_fixpoint(res, p.command);
      std::vector<element> uni =
          load_element_list(detail::need_option(p, "universe"), inst.carrier());
      std::vector<element> brute = p.command == "verify-minimal"
                                       ? brute_minimal_closed(inst, uni)
                                       : brute_intersection_closed(inst, uni);
      bool agrees = brute == res.all_elements();
      ordered_json v;
      v["universe_size"] = uni.size();
      v["set"] = detail::render_elements(brute);
      v["saturation"] = detail::render_elements(res.all_elements());
      v["agrees"] = agrees;
      report[p.command == "verify-minimal" ? "minimal" : "intersection"] = std::move(v);
      exit_code = agrees ? 0 : 1;
    } else if (p.command == "extend-base") {
      std::vector<element> extras;
      for (const auto& text : p.positionals) {
        extras.push_back(parse_element(text, inst.carrier()));
      }
      base_extension_report rep = check_base_extension(inst, extras);
      ordered_json ext;
      ext["kind"] = "base";
      ordered_json der = ordered_json::array();
      for (const auto& [e, in_m] : rep.derivability) {
        ordered_json row;
        row["element"] = to_text(e);
        row["in_m"] = in_m;
        der.push_back(std::move(row));
      }
      ext["derivability"] = std::move(der);
      ext["hypothesis_ok"] = rep.hypothesis_ok;
      ext["sets_equal"] = rep.sets_equal ? ordered_json(*rep.sets_equal) : ordered_json();
      report["extension"] = std::move(ext);
      exit_code = rep.hypothesis_ok && rep.sets_equal.value_or(false) ? 0 : 1;
    } else if (p.command == "extend-ops") {
      std::vector<operation> extras;
      for (const auto& token : p.positionals) {
        extras.push_back(make_named_op(inst.carrier(), token));
      }
      op_extension_report rep = check_op_extension(inst, extras);
      ordered_json ext;
      ext["kind"] = "ops";
      ext["ops"] = p.positionals;
      ext["closed"] = rep.m_closed_under_extras.closed;
      ordered_json ces = ordered_json::array();
      for (const auto& ce : rep.m_closed_under_extras.counterexamples) {
        ordered_json row;
        int idx = ce.op_id ? *ce.op_id - static_cast<int>(inst.ops().size()) : -1;
        row["op"] = idx >= 0 && static_cast<size_t>(idx) < p.positionals.size()
                        ? p.positionals[static_cast<size_t>(idx)]
                        : "base";
        row["args"] = detail::render_elements(ce.args);
        row["result"] = to_text(ce.result);
        ces.push_back(std::move(row));
      }
      ext["counterexamples"] = std::move(ces);
      ext["sets_equal"] = rep.sets_equal ? ordered_json(*rep.sets_equal) : ordered_json();
      report["extension"] = std::move(ext);
      exit_code =
          rep.m_closed_under_extras.closed && rep.sets_equal.value_or(false) ? 0 : 1;
    } else if (p.command == "prop-check") {
      detail::need_positionals(p, 0, "no arguments");
      const std::string& token = detail::need_option(p, "predicate");
      auto predicate = make_predicate(token, inst);
      induction_report rep = check_property_induction(inst, predicate);
      ordered_json ind;
      ind["predicate"] = token;
      ind["base_failures"] = detail::render_elements(rep.base_failures);
      ordered_json fails = ordered_json::array();
      for (const auto& f : rep.preservation_failures) {
        ordered_json row;
        row["op"] = detail::op_display_name(inst, f.op_id);
        row["args"] = detail::render_elements(f.args);
        row["result"] = to_text(f.result);
        fails.push_back(std::move(row));
      }
      ind["preservation_failures"] = std::move(fails);
      ind["conclusion"] = induction_conclusion_name(rep.conclusion);
      ind["exhaustive_check"] = detail::render_elements(rep.exhaustive_check);
      report["induction"] = std::move(ind);
      exit_code = rep.conclusion == induction_conclusion::proven ? 0 : 1;
    }

    out << report.dump() << "\n";
    if (!out) throw error(errc::io_error, "failed to write the report");
    return exit_code;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == errc::io_error ? 3 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace recset::cli
