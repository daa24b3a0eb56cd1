#include "skoda/io.hpp"

#include <fstream>

#include "skoda/parse.hpp"

namespace skoda {

namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

template <class T>
T get(const nlohmann::json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(where + ": missing or malformed \"" + key + "\"");
  }
}

Field parse_field(const nlohmann::json& f) {
  if (f.is_string()) {
    const auto s = f.get<std::string>();
    if (s == "Q") return Field::rationals();
    try {
      std::size_t used = 0;
      unsigned long long p = std::stoull(s, &used);
      if (used == s.size()) return Field::prime(p);
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw InputError("unknown field \"" + s + "\"");
  }
  if (f.is_object() && f.contains("Fp") && f["Fp"].is_number_unsigned()) {
    try {
      return Field::prime(f["Fp"].get<std::uint64_t>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("field must be \"Q\", a prime, or {\"Fp\": p}");
}

MonomialOrder parse_order(const std::string& s) {
  if (s == "grevlex") return MonomialOrder::grevlex();
  if (s == "lex") return MonomialOrder::lex();
  throw InputError("unknown monomial order \"" + s + "\"");
}

}  // namespace

Field Config::field_value() const { return parse_field(nlohmann::json(field)); }

MonomialOrder Config::order_value() const { return parse_order(order); }

void Config::validate() const {
  if (cap_pairs == 0 || cap_degree == 0) throw InputError("Groebner caps must be positive");
  if (closure_N == 0 || closure_s == 0) throw InputError("closure caps must be positive");
  if (workers == 0) throw InputError("workers must be positive");
  field_value();
  order_value();
}

nlohmann::json to_json(const Config& c) {
  return {{"field", c.field},         {"order", c.order},         {"cap_pairs", c.cap_pairs},
          {"cap_degree", c.cap_degree}, {"closure_N", c.closure_N}, {"closure_s", c.closure_s},
          {"verbosity", c.verbosity},   {"workers", c.workers},     {"corpus_paths", c.corpus_paths}};
}

Config config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  Config c;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "field") c.field = v.get<std::string>();
      else if (key == "order") c.order = v.get<std::string>();
      else if (key == "cap_pairs") c.cap_pairs = v.get<std::size_t>();
      else if (key == "cap_degree") c.cap_degree = v.get<unsigned>();
      else if (key == "closure_N") c.closure_N = v.get<unsigned>();
      else if (key == "closure_s") c.closure_s = v.get<unsigned>();
      else if (key == "verbosity") c.verbosity = v.get<int>();
      else if (key == "workers") c.workers = v.get<unsigned>();
      else if (key == "corpus_paths") c.corpus_paths = v.get<std::vector<std::string>>();
      else throw InputError("unknown config key \"" + key + "\"");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed config: ") + e.what());
  }
  c.validate();
  return c;
}

Config load_config(const std::filesystem::path& path) { return config_from_json(read_json(path)); }

Presentation ring_from_json(const nlohmann::json& j, const Config& cfg) {
  if (!j.is_object()) throw InputError("ring must be a JSON object");
  Field F = j.contains("field") ? parse_field(j["field"]) : cfg.field_value();
  MonomialOrder order = j.contains("order") ? parse_order(get<std::string>(j, "order", "ring")) : cfg.order_value();
  auto vars = get<std::vector<std::string>>(j, "vars", "ring");
  if (vars.empty()) throw InputError("ring: no variables");
  auto base = polynomial_ring(vars, F, order);
  if (!j.contains("relations")) return base;
  auto rels = get<std::vector<std::string>>(j, "relations", "ring");
  return ring_quotient(base, parse_all(base, rels));
}

Presentation load_ring(const std::filesystem::path& path, const Config& cfg) { return ring_from_json(read_json(path), cfg); }

std::vector<Poly> parse_all(const Presentation& R, const std::vector<std::string>& exprs) {
  std::vector<Poly> out;
  for (const auto& e : exprs) {
    try {
      out.push_back(R->parse(e));
    } catch (const ParseError& err) {
      throw InputError("cannot parse \"" + e + "\": " + err.what());
    }
  }
  return out;
}

Instance instance_from_json(const nlohmann::json& j, const std::filesystem::path& dir, const Config& cfg) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  Instance I;
  I.name = j.value("name", std::string());
  if (!j.contains("ring")) throw InputError("instance: missing \"ring\"");
  I.ring = j["ring"].is_string() ? load_ring(dir / j["ring"].get<std::string>(), cfg) : ring_from_json(j["ring"], cfg);
  I.J = parse_all(I.ring, get<std::vector<std::string>>(j, "J", "instance"));
  if (I.J.empty()) throw InputError("instance: J has no generators");
  I.k = get<unsigned>(j, "k", "instance");
  if (I.k == 0) throw InputError("instance: k must be positive");
  if (j.contains("n") && get<std::size_t>(j, "n", "instance") != I.J.size())
    throw InputError("instance: n differs from the number of generators of J");
  if (j.contains("closure_gens")) {
    std::vector<ClosureHint> hints;
    for (const auto& c : j["closure_gens"]) {
      ClosureHint h;
      h.g = parse_all(I.ring, {get<std::string>(c, "expr", "closure_gens")})[0];
      if (c.contains("s")) h.s = get<unsigned>(c, "s", "closure_gens");
      if (c.contains("via")) h.via = parse_all(I.ring, get<std::vector<std::string>>(c, "via", "closure_gens"));
      hints.push_back(std::move(h));
    }
    I.closure_gens = std::move(hints);
  }
  if (j.contains("expected")) {
    auto e = get<std::string>(j, "expected", "instance");
    if (e != "HOLDS" && e != "FAILS") throw InputError("instance: expected must be HOLDS or FAILS");
    I.expect_holds = e == "HOLDS";
  }
  return I;
}

Instance load_instance(const std::filesystem::path& path, const Config& cfg) {
  Instance I = instance_from_json(read_json(path), path.parent_path(), cfg);
  if (I.name.empty()) I.name = path.stem().string();
  return I;
}

}  // namespace skoda
