#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <atomic>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "skoda/io.hpp"

namespace skoda::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
  std::string ring_file;
  std::string config_file;
  std::size_t cap_pairs = 0;
  unsigned cap_degree = 0;
  unsigned workers = 0;
  bool json_out = false;

  std::vector<std::string> exprs;
  std::string instance;
  std::vector<std::string> hs;
  unsigned k = 1;
  unsigned m = 1;
  unsigned s = 0;
  unsigned power = 1;
  std::vector<std::string> via, center, charts;
  std::vector<std::string> manifests;
};

// Outcome of one command on one instance.
struct Run {
  json doc;
  int code = Ok;
  std::string status = "ok";  // ok, alarm, cap, error
  std::string summary;
};

Config resolve_config(const Options& o) {
  Config cfg;
  std::string path = o.config_file;
  if (path.empty())
    if (const char* env = std::getenv("SKODA_CONFIG")) path = env;
  if (!path.empty()) cfg = load_config(path);
  if (o.cap_pairs) cfg.cap_pairs = o.cap_pairs;
  if (o.cap_degree) cfg.cap_degree = o.cap_degree;
  if (o.workers) cfg.workers = o.workers;
  cfg.validate();
  return cfg;
}

Presentation ring_of(const Options& o, const Config& cfg) {
  if (o.ring_file.empty()) throw InputError("--ring FILE is required");
  return load_ring(o.ring_file, cfg);
}

json strings(const std::vector<Poly>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(p.to_string());
  return a;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::vector<ClosureHint> hints_for(const Instance& I, const std::vector<std::string>& hs, const Config& cfg) {
  if (!hs.empty()) {
    std::vector<ClosureHint> out;
    for (const auto& p : parse_all(I.ring, hs)) out.push_back({p, 0, {}});
    return out;
  }
  if (I.closure_gens) return *I.closure_gens;
  Ideal J(I.ring, I.J);
  const unsigned p = static_cast<unsigned>(I.J.size()) + I.k - 1;
  auto G = closure_generators(J, p, cfg.closure_caps());
  std::vector<ClosureHint> out;
  for (const auto& c : G.accepted) out.push_back({c.g, 0, {}});
  return out;
}

Run cmd_bs_check(const Instance& I, const Config& cfg) {
  Run r;
  BsReport rep = bs_check(Ideal(I.ring, I.J), I.k, I.closure_gens, cfg.closure_caps());
  r.doc = {{"command", "bs-check"}, {"instance", I.name}, {"report", to_json(rep)}};
  r.summary = rep.holds ? "HOLDS" : "FAILS";
  if (I.expect_holds) {
    bool expected = *I.expect_holds == rep.holds;
    r.doc["expected"] = *I.expect_holds ? "HOLDS" : "FAILS";
    r.doc["as_expected"] = expected;
    if (!expected) {
      r.code = Falsification;
      r.status = "alarm";
    }
  }
  return r;
}

Run cmd_verify_main(const Instance& I, const std::vector<std::string>& hs, const Config& cfg) {
  Run r;
  json results = json::array();
  std::size_t alarms = 0;
  for (const auto& hint : hints_for(I, hs, cfg)) {
    MainTheoremResult res = main_theorem_verify(I.ring, hint.g, I.J, I.k, hint, cfg.closure_caps());
    json j = to_json(res);
    j["h"] = I.ring->reduce(hint.g).to_string();
    results.push_back(std::move(j));
    if (res.alarm) ++alarms;
  }
  r.doc = {{"command", "verify-main"}, {"instance", I.name}, {"k", I.k}, {"results", results}, {"alarms", alarms}};
  r.summary = std::to_string(results.size()) + " witnesses, " + std::to_string(alarms) + " alarms";
  if (alarms) {
    r.code = Falsification;
    r.status = "alarm";
  }
  return r;
}

Run cmd_bir_member(const Instance& I, const std::vector<std::string>& hs, const Config& cfg) {
  Run r;
  Ideal J(I.ring, I.J);
  const unsigned p = static_cast<unsigned>(I.J.size()) + I.k - 1;
  auto hints = hints_for(I, hs, cfg);
  std::vector<Poly> certified;
  std::vector<bool> is_certified;
  for (const auto& h : hints) {
    bool ok = certify(h, J, p, cfg.closure_caps()).member();
    is_certified.push_back(ok);
    if (ok) certified.push_back(h.g);
  }
  BlowupModel model = closure_model(I.ring, I.J, I.k, certified);
  json results = json::array();
  std::size_t alarms = 0;
  for (std::size_t i = 0; i < hints.size(); ++i) {
    BirResult b = bir_preclosure_member(hints[i].g, J, I.k, model);
    json j = to_json(b);
    j["h"] = I.ring->reduce(hints[i].g).to_string();
    j["certified_in_closure"] = static_cast<bool>(is_certified[i]);
    if (is_certified[i] && !b.member) ++alarms;
    results.push_back(std::move(j));
  }
  r.doc = {{"command", "bir-member"}, {"instance", I.name}, {"k", I.k}, {"results", results}, {"alarms", alarms}};
  r.summary = std::to_string(results.size()) + " checked, " + std::to_string(alarms) + " alarms";
  if (alarms) {
    r.code = Falsification;
    r.status = "alarm";
  }
  return r;
}

// Exceptions become exit codes; the document records what happened.
template <class F>
Run guarded(F&& f) {
  try {
    return f();
  } catch (const ResourceCapExceeded& e) {
    Run r;
    r.code = ResourceCap;
    r.status = "cap";
    r.summary = e.what();
    r.doc = {{"error", "resource cap"}, {"message", e.what()}};
    return r;
  } catch (const std::exception& e) {
    Run r;
    r.code = Usage;
    r.status = "error";
    r.summary = e.what();
    r.doc = {{"error", "input"}, {"message", e.what()}};
    return r;
  }
}

Run run_instance(const std::string& command, const fs::path& file, const std::vector<std::string>& hs, const Config& cfg) {
  return guarded([&] {
    LimitScope scope(cfg.limits());
    Instance I = load_instance(file, cfg);
    if (command == "bs-check") return cmd_bs_check(I, cfg);
    if (command == "verify-main") return cmd_verify_main(I, hs, cfg);
    if (command == "bir-member") return cmd_bir_member(I, hs, cfg);
    throw InputError("unknown corpus command \"" + command + "\"");
  });
}

struct CorpusItem {
  fs::path file;
  std::string command;
};

std::vector<CorpusItem> read_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("instances") || !j["instances"].is_array())
    throw InputError(path.string() + ": manifest needs an \"instances\" array");
  std::vector<CorpusItem> items;
  for (const auto& e : j["instances"]) {
    if (e.is_string()) {
      items.push_back({path.parent_path() / e.get<std::string>(), "bs-check"});
      continue;
    }
    if (!e.is_object() || !e.contains("file")) throw InputError(path.string() + ": malformed manifest entry");
    std::vector<std::string> cmds = e.value("commands", std::vector<std::string>{"bs-check"});
    for (const auto& c : cmds) items.push_back({path.parent_path() / e["file"].get<std::string>(), c});
  }
  return items;
}

int emit(const Run& r, const Options& o, std::ostream& out, std::ostream& err) {
  if (r.status == "error" || r.status == "cap") {
    err << "skoda: " << (r.status == "cap" ? "resource cap exceeded: " : "") << r.summary << "\n";
    if (o.json_out) out << r.doc.dump(2) << "\n";
    return r.code;
  }
  if (o.json_out)
    out << r.doc.dump(2) << "\n";
  else
    out << r.summary << "\n";
  return r.code;
}

Run cmd_corpus(const Options& o, const Config& cfg) {
  std::vector<std::string> manifests = o.manifests.empty() ? cfg.corpus_paths : o.manifests;
  if (manifests.empty()) throw InputError("corpus: no manifest given");
  std::vector<CorpusItem> items;
  for (const auto& m : manifests) {
    auto more = read_manifest(m);
    items.insert(items.end(), more.begin(), more.end());
  }
  std::vector<Run> runs(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) runs[i] = run_instance(items[i].command, items[i].file, {}, cfg);
  };
  const unsigned nthreads = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Run r;
  json results = json::array();
  std::size_t alarms = 0, caps = 0, errors = 0;
  std::string lines;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Run& x = runs[i];
    json entry = {{"file", items[i].file.filename().string()}, {"command", items[i].command}, {"status", x.status}};
    if (x.status == "ok" || x.status == "alarm") entry["result"] = x.doc;
    else entry["message"] = x.summary;
    results.push_back(std::move(entry));
    alarms += x.status == "alarm";
    caps += x.status == "cap";
    errors += x.status == "error";
    lines += items[i].file.filename().string() + " " + items[i].command + ": " + x.status + " (" + x.summary + ")\n";
  }
  const bool all_ok = alarms + caps + errors == 0;
  const std::string message = all_ok ? "all verdicts expected"
                                     : std::to_string(alarms) + " alarms, " + std::to_string(caps) + " caps, " +
                                           std::to_string(errors) + " errors";
  r.doc = {{"command", "corpus"},
           {"results", results},
           {"summary", {{"total", items.size()}, {"alarms", alarms}, {"caps", caps}, {"errors", errors}, {"message", message}}}};
  r.summary = lines + message;
  r.code = alarms ? Falsification : caps ? ResourceCap : errors ? Usage : Ok;
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Briancon-Skoda workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--ring", o.ring_file, "ring file (JSON)");
  app.add_option("--config", o.config_file, "config file (JSON); defaults to $SKODA_CONFIG");
  app.add_option("--cap-pairs", o.cap_pairs, "Groebner pair cap")->check(CLI::PositiveNumber);
  app.add_option("--cap-degree", o.cap_degree, "Groebner degree cap")->check(CLI::PositiveNumber);
  app.add_option("--workers", o.workers, "corpus worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json_out, "JSON output");

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
  gb->add_option("exprs", o.exprs, "generators")->delimiter(',')->required();
  auto* member = app.add_subcommand("member", "ideal membership of the first expression in the rest");
  member->add_option("exprs", o.exprs, "h, then generators")->delimiter(',')->required()->expected(2, -1);
  auto* icl = app.add_subcommand("icl", "integral closure membership: h in the closure of J^m");
  icl->add_option("--m", o.m, "power of J")->check(CLI::PositiveNumber);
  icl->add_option("--s", o.s, "power certificate exponent to try first");
  icl->add_option("--via", o.via, "intermediate ideal inside the closure of J")->delimiter(',')->allow_extra_args(false);
  icl->add_option("exprs", o.exprs, "h, then generators of J")->delimiter(',')->required()->expected(2, -1);
  auto* lc = app.add_subcommand("lcomplex", "the complex L^k(f)");
  lc->add_option("--k", o.k, "power")->check(CLI::PositiveNumber);
  lc->add_option("exprs", o.exprs, "f_1 .. f_n")->delimiter(',')->required();
  auto* bl = app.add_subcommand("blowup", "charts, overlaps and restrictions of a blowup");
  bl->add_option("--center", o.center, "center generators")->delimiter(',')->required()->allow_extra_args(false);
  bl->add_option("--charts", o.charts, "chart generators")->delimiter(',')->required()->allow_extra_args(false);
  bl->add_option("--power", o.power, "chart generators enter the center to this power")->check(CLI::PositiveNumber);
  auto* bs = app.add_subcommand("bs-check", "closure of J^(n+k-1) inside J^k");
  bs->add_option("instance", o.instance, "instance file")->required();
  auto* vm = app.add_subcommand("verify-main", "vanishing witnesses for certified closure elements");
  vm->add_option("instance", o.instance, "instance file")->required();
  vm->add_option("--elem", o.hs, "elements to verify (default: closure generators)")->allow_extra_args(false);
  auto* bm = app.add_subcommand("bir-member", "birational pre-closure membership on the closure model");
  bm->add_option("instance", o.instance, "instance file")->required();
  bm->add_option("--elem", o.hs, "elements to test (default: closure generators)")->allow_extra_args(false);
  auto* co = app.add_subcommand("corpus", "run every instance of one or more manifests");
  co->add_option("manifests", o.manifests, "manifest files (default: corpus_paths from the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? Ok : Usage;
  }

  Run r = guarded([&]() -> Run {
    Config cfg = resolve_config(o);
    LimitScope scope(cfg.limits());
    Run res;
    if (gb->parsed()) {
      auto R = ring_of(o, cfg);
      auto G = groebner_basis(Ideal(R, parse_all(R, o.exprs)));
      res.doc = {{"command", "gb"}, {"ring", presentation_json(*R)}, {"gb", strings(G)}};
      for (const auto& g : G) res.summary += (res.summary.empty() ? "" : "\n") + g.to_string();
    } else if (member->parsed()) {
      auto R = ring_of(o, cfg);
      auto ps = parse_all(R, o.exprs);
      std::vector<Poly> gens(ps.begin() + 1, ps.end());
      bool in = ideal_member(ps[0], Ideal(R, gens));
      res.doc = {{"command", "member"}, {"h", ps[0].to_string()}, {"ideal", strings(gens)}, {"member", in}};
      res.summary = yes_no(in);
    } else if (icl->parsed()) {
      auto R = ring_of(o, cfg);
      auto ps = parse_all(R, o.exprs);
      Ideal J(R, std::vector<Poly>(ps.begin() + 1, ps.end()));
      ClosureHint hint{ps[0], o.s, parse_all(R, o.via)};
      auto v = certify(hint, J, o.m, cfg.closure_caps());
      res.doc = {{"command", "icl"}, {"h", ps[0].to_string()}, {"J", strings(J.gens())}, {"m", o.m}, {"verdict", to_json(v)}};
      res.summary = to_string(v.status);
    } else if (lc->parsed()) {
      auto R = ring_of(o, cfg);
      auto C = l_complex(R, parse_all(R, o.exprs), o.k);
      bool dd = check_d_squared(C);
      res.doc = {{"command", "lcomplex"}, {"k", o.k}, {"complex", to_json(C)}, {"d_squared_zero", dd}};
      std::string ranks;
      for (auto x : C.ranks) ranks += (ranks.empty() ? "" : " ") + std::to_string(x);
      res.summary = "ranks " + ranks + "; d^2 = 0: " + yes_no(dd);
    } else if (bl->parsed()) {
      auto R = ring_of(o, cfg);
      auto M = build_blowup(R, parse_all(R, o.center), parse_all(R, o.charts), o.power);
      auto chk = check_model(M);
      bool dd = cech_complex(M).delta_squared_zero;
      res.doc = {{"command", "blowup"},
                 {"model", to_json(M)},
                 {"check", {{"ok", chk.ok()}, {"problems", chk.problems}}},
                 {"delta_squared_zero", dd}};
      res.summary = std::to_string(M.ncharts()) + " charts; model consistent: " + yes_no(chk.ok()) +
                    "; delta^2 = 0: " + yes_no(dd);
      for (const auto& C : M.charts) {
        res.summary += "\nchart " + std::to_string(C.index + 1) + ": ";
        std::string rels;
        for (const auto& g : C.ring->relations()) rels += (rels.empty() ? "" : ", ") + g.to_string();
        res.summary += rels;
      }
    } else if (bs->parsed()) {
      return run_instance("bs-check", o.instance, {}, cfg);
    } else if (vm->parsed()) {
      return run_instance("verify-main", o.instance, o.hs, cfg);
    } else if (bm->parsed()) {
      return run_instance("bir-member", o.instance, o.hs, cfg);
    } else if (co->parsed()) {
      return cmd_corpus(o, cfg);
    }
    return res;
  });
  return emit(r, o, out, err);
}

}  // namespace skoda::cli
