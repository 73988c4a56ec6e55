#include "flt/json_io.hpp"

#include <stdexcept>

namespace flt {

json to_json(const Integer& v) { return v.get_str(); }

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  Integer v;
  if (!j.is_string() || v.set_str(j.get<std::string>(), 10) != 0) {
    throw std::invalid_argument("expected an integer, got " + j.dump());
  }
  return v;
}

json to_json(const EvalPoint& p) { return json::array({to_json(p.x), to_json(p.y), to_json(p.z)}); }

json to_json(const PythTriple& t) { return {{"A", to_json(t.A)}, {"B", to_json(t.B)}, {"C", to_json(t.C)}}; }

json to_json(const Representation& r) { return {{"p", to_json(r.p)}, {"q", to_json(r.q)}}; }

json to_json(const FermatSolution& s) {
  return {{"x", to_json(s.x)}, {"y", to_json(s.y)}, {"z", to_json(s.z)}, {"n", s.n}};
}

json to_json(const ConjectureInstance& i) {
  return {{"a", to_json(i.a)},         {"b", to_json(i.b)},         {"c", to_json(i.c)},
          {"d", to_json(i.d)},         {"e", to_json(i.e)},         {"f", to_json(i.f)},
          {"alpha", to_json(i.alpha)}, {"beta", to_json(i.beta)},   {"gamma", to_json(i.gamma)},
          {"p", to_json(i.p)},         {"q", to_json(i.q)}};
}

json to_json(const PerReading& r) { return {{"pairwise", r.pairwise}, {"adjacent", r.adjacent}}; }

json to_json(const ConditionReport& c) {
  return {{"satisfied", c.satisfied},
          {"nontrivial", c.nontrivial},
          {"def_distinct_nonzero", to_json(c.def_distinct_nonzero)},
          {"case_unit", c.case_unit},
          {"case_general_distinct", to_json(c.case_general_distinct)},
          {"divisibility", c.divisibility},
          {"non_unit_divisors", c.non_unit_divisors},
          {"mixed_sign_coefficients", c.mixed_sign_coefficients},
          {"p_gt_q_gt_0", c.p_gt_q_gt_0}};
}

json result_log_entry(const Solution& s) {
  json j = to_json(s.instance);
  j["conditions"] = to_json(s.conditions);
  j["counterexample"] = to_json(s.conditions.counterexample);
  return j;
}

json to_json(const SearchSpace& s) {
  json bounds = json::object();
  for (std::size_t v = 0; v < kSearchVars; ++v) {
    bounds[std::string(var_name(v))] = json::array({s.bounds[v].lo, s.bounds[v].hi});
  }
  return {{"case", std::string(to_string(s.coefficient_case))}, {"bounds", bounds}, {"shards", s.shards}};
}

SearchSpace search_space_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("search space must be an object");
  SearchSpace s;
  for (const auto& [key, value] : j.items()) {
    if (key == "case") {
      const auto c = value.get<std::string>();
      if (c == "unit") {
        s.coefficient_case = CoefficientCase::unit;
      } else if (c == "general") {
        s.coefficient_case = CoefficientCase::general;
      } else {
        throw std::invalid_argument("case must be unit or general");
      }
    } else if (key == "shards") {
      s.shards = value.get<unsigned>();
    } else if (key != "bounds") {
      throw std::invalid_argument("unknown search key: " + key);
    }
  }
  if (s.coefficient_case == CoefficientCase::unit) {
    s.bounds[kAlpha] = s.bounds[kBeta] = s.bounds[kGamma] = {1, 1};
  }
  if (j.contains("bounds")) {
    for (const auto& [key, value] : j.at("bounds").items()) {
      std::size_t v = 0;
      while (v < kSearchVars && var_name(v) != key) ++v;
      if (v == kSearchVars) throw std::invalid_argument("unknown search variable: " + key);
      if (!value.is_array() || value.size() != 2) throw std::invalid_argument("bounds must be [lo, hi]");
      s.bounds[v] = {value[0].get<std::int64_t>(), value[1].get<std::int64_t>()};
    }
  }
  return s;
}

json to_json(const ImplicationCounterexample& c) {
  return {{"implication", std::string(to_string(c.implication))},
          {"reading", std::string(to_string(c.reading))},
          {"x", c.x},
          {"y", c.y},
          {"z", c.z},
          {"k", c.k},
          {"detail", c.detail}};
}

json to_json(const IdentityRecord& r) {
  return {{"n", r.n},
          {"residual_zero", r.residual_zero},
          {"lhs_terms", r.lhs_terms},
          {"lhs_degree", r.lhs_degree},
          {"a_terms", r.a_terms},
          {"b_terms", r.b_terms},
          {"c_terms", r.c_terms},
          {"residual_terms", r.residual_terms},
          {"wall_ms", r.millis}};
}

json to_json(const CrossCheckSummary& s) {
  json mismatches = json::array();
  for (const auto& p : s.mismatches) mismatches.push_back(to_json(p));
  return {{"n", s.n}, {"seed", s.seed}, {"points", s.points}, {"mismatches", mismatches}};
}

json to_json(const ParamAuditOptions& o) {
  return {{"allow_swap", o.convention.allow_swap},
          {"allow_sign", o.convention.allow_sign},
          {"primitive_even_b_only", o.primitive_even_b_only},
          {"include_signed", o.include_signed}};
}

json to_json(const Evidence& e) {
  return std::visit(
      [](const auto& ev) -> json {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, IdentityEvidence>) {
          return {{"kind", "identity"}, {"n", ev.n}, {"detail", ev.detail}};
        } else if constexpr (std::is_same_v<T, TripleEvidence>) {
          json j = to_json(ev.triple);
          j["kind"] = "triple";
          j["detail"] = ev.detail;
          return j;
        } else if constexpr (std::is_same_v<T, ImplicationEvidence>) {
          json j = to_json(ev.point);
          j["kind"] = "implication";
          return j;
        } else {
          json j = to_json(ev.instance);
          j["kind"] = "instance";
          j["reading"] = std::string(to_string(ev.reading));
          return j;
        }
      },
      e);
}

json to_json(const AuditConfig& c) {
  json searches = json::array();
  for (const auto& s : c.searches) searches.push_back(to_json(s));
  return {{"identity_n_min", c.identity_n_min},
          {"identity_n_max", c.identity_n_max},
          {"c_max", c.c_max},
          {"param", to_json(c.param)},
          {"derivation_n_min", c.derivation_n_min},
          {"derivation_n_max", c.derivation_n_max},
          {"consistency_n_min", c.consistency_n_min},
          {"consistency_n_max", c.consistency_n_max},
          {"box_bound", c.box_bound},
          {"k", c.k},
          {"triple_base_max", c.triple_base_max},
          {"searches", searches},
          {"primary_reading", std::string(to_string(c.primary_reading))}};
}

AuditConfig audit_config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("audit config must be a JSON object");
  AuditConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "identity_n_min") c.identity_n_min = value.get<unsigned>();
      else if (key == "identity_n_max") c.identity_n_max = value.get<unsigned>();
      else if (key == "c_max") c.c_max = value.get<std::uint64_t>();
      else if (key == "derivation_n_min") c.derivation_n_min = value.get<unsigned>();
      else if (key == "derivation_n_max") c.derivation_n_max = value.get<unsigned>();
      else if (key == "consistency_n_min") c.consistency_n_min = value.get<unsigned>();
      else if (key == "consistency_n_max") c.consistency_n_max = value.get<unsigned>();
      else if (key == "box_bound") c.box_bound = value.get<std::int64_t>();
      else if (key == "k") c.k = value.get<unsigned>();
      else if (key == "triple_base_max") c.triple_base_max = value.get<std::uint64_t>();
      else if (key == "primary_reading") {
        auto r = parse_reading(value.get<std::string>());
        if (!r) throw std::invalid_argument("primary_reading must be pairwise or adjacent");
        c.primary_reading = *r;
      } else if (key == "param") {
        for (const auto& [pk, pv] : value.items()) {
          if (pk == "allow_swap") c.param.convention.allow_swap = pv.get<bool>();
          else if (pk == "allow_sign") c.param.convention.allow_sign = pv.get<bool>();
          else if (pk == "primitive_even_b_only") c.param.primitive_even_b_only = pv.get<bool>();
          else if (pk == "include_signed") c.param.include_signed = pv.get<bool>();
          else throw std::invalid_argument("unknown param key: " + pk);
        }
      } else if (key == "searches") {
        c.searches.clear();
        for (const auto& s : value) c.searches.push_back(search_space_from_json(s));
      } else {
        throw std::invalid_argument("unknown config key: " + key);
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  c.validate();
  return c;
}

}  // namespace flt
