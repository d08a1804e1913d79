// qhent: entropy computations, structure analysis, and law checks for
// descriptor-built locally finite groups. Documents in, reports out.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qhent/json_io.hpp"
#include "qhent/laws.hpp"

namespace fs = std::filesystem;
using qhent::io::Json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Opts {
  std::string group, endo, witness, alpha, suite;
  std::string bases = "blocks:2";
  std::string format = "text";
  std::string out;
  std::uint64_t n_max = 32;
  std::uint64_t window = 3;
  std::uint64_t size_budget = std::uint64_t{1} << 20;
  std::uint64_t seed = 0;
  std::uint64_t m = 2;
  bool strict = false;
};

void add_common(CLI::App* sub, Opts& o) {
  sub->add_option("--group", o.group, "group descriptor file");
  sub->add_option("--endo", o.endo, "endomorphism descriptor file");
  sub->add_option("--bases", o.bases,
                  "base family: blocks:K, cyclic, @file, or inline JSON");
  sub->add_option("--witness", o.witness, "subgroup witness file");
  sub->add_option("--n-max", o.n_max, "deepest trajectory level");
  sub->add_option("--window", o.window, "stabilization window");
  sub->add_option("--size-budget", o.size_budget, "largest level size");
  sub->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", o.out, "write the report to this file");
  sub->add_option("--seed", o.seed, "sampling seed");
  sub->add_flag("--strict", o.strict, "exit 3 when a budget was exhausted");
}

qhent::EntropyConfig config_of(const Opts& o) {
  return {o.n_max, o.window, static_cast<std::size_t>(o.size_budget)};
}

// ---------------------------------------------------------------------------
// report plumbing

bool g_budget_hit = false;
bool g_violation = false;

void note_status(qhent::EntropyStatus s) {
  if (s == qhent::EntropyStatus::budget_exhausted) g_budget_hit = true;
}

Json estimate_json(const qhent::EntropyEstimate& e) {
  return Json{{"beta", e.beta},
              {"status", qhent::entropy_status_name(e.status)},
              {"reached_at", e.reached_at},
              {"betas", e.betas}};
}

Json job_echo(const std::string& command, const Opts& o, const Json* group,
              const Json* endo) {
  Json job{{"command", command}};
  job["group"] = group ? *group : Json();
  job["endomorphism"] = endo ? *endo : Json();
  job["bases"] = o.bases;
  job["config"] = Json{{"n_max", o.n_max},
                       {"window", o.window},
                       {"size_budget", o.size_budget},
                       {"seed", o.seed}};
  return job;
}

Json opt_bool(const std::optional<bool>& b) {
  return b ? Json(*b) : Json();
}

// Text rendering: one "key: value" line per leaf, two-space indent per
// level. Integer betas additionally get a decimal log, clearly display-only.
void render_text(std::ostream& os, const Json& j, const std::string& key,
                 int depth) {
  std::string pad(2 * depth, ' ');
  auto line = [&](const std::string& v) {
    os << pad << key << ": " << v << "\n";
  };
  if (j.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (const auto& [k, v] : j.items())
      render_text(os, v, k, depth + (key.empty() ? 0 : 1));
  } else if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(),
                            [](const Json& x) { return x.is_primitive(); });
    if (flat) {
      std::ostringstream row;
      row << "[";
      for (std::size_t i = 0; i < j.size(); ++i)
        row << (i ? ", " : "") << j[i].dump();
      row << "]";
      line(row.str());
    } else {
      os << pad << key << ":\n";
      std::size_t i = 0;
      for (const auto& v : j)
        render_text(os, v, "- " + std::to_string(i++), depth + 1);
    }
  } else if (j.is_null()) {
    line("undecided");
  } else if ((key == "beta" || key == "lhs" || key == "rhs") &&
             j.is_number_unsigned()) {
    std::uint64_t b = j.get<std::uint64_t>();
    std::ostringstream row;
    row << b << "  (log beta = " << std::log(static_cast<double>(b))
        << ", decimal display only)";
    line(row.str());
  } else {
    line(j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void emit(const Opts& o, const std::string& command, Json job, Json results,
          std::chrono::steady_clock::time_point started) {
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started)
                .count();
  Json doc{{"tool", Json{{"name", "qhent"}, {"version", kVersion}}},
           {"job", std::move(job)},
           {"results", std::move(results)},
           {"timing", Json{{"elapsed_ms", ms}}}};

  std::ostringstream body;
  if (o.format == "json") {
    body << doc.dump(2) << "\n";
  } else {
    body << "qhent " << kVersion << " :: " << command << "\n";
    render_text(body, doc["job"], "job", 0);
    render_text(body, doc["results"], "results", 0);
    render_text(body, doc["timing"], "timing", 0);
  }
  if (o.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw qhent::DecodeError("cannot write " + o.out);
    f << body.str();
  }
}

// ---------------------------------------------------------------------------
// document loading

Json need_file(const std::string& path, const char* what) {
  if (path.empty())
    throw qhent::DecodeError(std::string("missing --") + what + " FILE");
  return qhent::io::load_json_file(path);
}

/// A document slot in a suite: inline object, or "@path" relative to the
/// suite file.
Json resolve_doc(const Json& slot, const fs::path& dir) {
  if (slot.is_string()) {
    const auto& s = slot.get_ref<const std::string&>();
    if (!s.empty() && s[0] == '@')
      return qhent::io::load_json_file((dir / s.substr(1)).string());
    throw qhent::DecodeError("expected an object or \"@file\": " + s);
  }
  return slot;
}

// ---------------------------------------------------------------------------
// commands

int cmd_entropy(const Opts& o, bool limit_free) {
  auto started = std::chrono::steady_clock::now();
  Json gdoc = need_file(o.group, "group");
  Json edoc = need_file(o.endo, "endo");
  auto g = qhent::io::parse_group(gdoc, o.seed);
  auto phi = qhent::io::parse_endo(edoc, g);
  auto bases = qhent::io::parse_bases_string(o.bases, g);
  auto cfg = config_of(o);

  Json per_base = Json::array();
  qhent::SupEntropyResult sup;
  if (limit_free) {
    for (const auto& U : bases) {
      auto e = qhent::limit_free_entropy(phi, U, cfg);
      note_status(e.status);
      Json row = estimate_json(e);
      row["base_size"] = U.size();
      per_base.push_back(std::move(row));
      sup.beta = std::max(sup.beta, e.beta);
    }
  } else {
    sup = qhent::entropy_sup(phi, bases, cfg);
    for (std::size_t i = 0; i < bases.size(); ++i) {
      note_status(sup.per_base[i].status);
      Json row = estimate_json(sup.per_base[i]);
      row["base_size"] = bases[i].size();
      per_base.push_back(std::move(row));
    }
  }

  Json results{{"map", phi->describe()},
               {"per_base", std::move(per_base)},
               {"sup", Json{{"beta", sup.beta}}}};
  if (!limit_free)
    results["sup"]["status"] = qhent::entropy_status_name(sup.status);
  emit(o, limit_free ? "limit-free" : "entropy",
       job_echo(limit_free ? "limit-free" : "entropy", o, &gdoc, &edoc),
       std::move(results), started);
  return 0;
}

int cmd_structure(const Opts& o) {
  auto started = std::chrono::steady_clock::now();
  Json gdoc = need_file(o.group, "group");
  auto g = qhent::io::parse_group(gdoc, o.seed);

  auto cls = qhent::classify(g, o.seed);
  Json c{{"abelian", opt_bool(cls.abelian)},
         {"quasihamiltonian", opt_bool(cls.quasihamiltonian)},
         {"dedekind", opt_bool(cls.dedekind)},
         {"hamiltonian", opt_bool(cls.hamiltonian)},
         {"method", cls.method}};
  if (cls.obstruction)
    c["obstruction"] =
        Json::array({cls.obstruction->first.hex(), cls.obstruction->second.hex()});

  auto fc = qhent::fc_by_commutator(g);
  Json results{{"classification", std::move(c)},
               {"fc", Json{{"value", opt_bool(fc.fc)}, {"reason", fc.reason}}}};

  if (qhent::iwasawa_params(*g->descriptor())) {
    auto rep = qhent::iwasawa_derived(g);
    results["iwasawa_derived"] = Json{{"match", rep.match},
                                      {"derived_order", rep.derived.size()},
                                      {"predicted_order", rep.predicted.size()}};
  }
  emit(o, "structure", job_echo("structure", o, &gdoc, nullptr),
       std::move(results), started);
  return 0;
}

int cmd_decompose(const Opts& o) {
  auto started = std::chrono::steady_clock::now();
  Json gdoc = need_file(o.group, "group");
  auto g = qhent::io::parse_group(gdoc, o.seed);

  Json results;
  if (g->order()) {
    auto whole = qhent::FiniteSubgroup::whole_group(g);
    if (auto dec = qhent::dedekind_baer_decompose(whole)) {
      Json b = Json::array(), d = Json::array();
      for (const auto& x : dec->b.elements()) b.push_back(x.hex());
      for (const auto& x : dec->d.elements()) d.push_back(x.hex());
      results["dedekind_baer"] = Json{{"q8_order", dec->q8.size()},
                                      {"b_order", dec->b.size()},
                                      {"d_order", dec->d.size()},
                                      {"b", std::move(b)},
                                      {"d", std::move(d)}};
    } else {
      results["dedekind_baer"] = Json();
    }
  } else {
    results["dedekind_baer"] = Json();
  }

  Json primary = Json::array();
  for (const auto& x : qhent::sample_elements(g, 8, o.seed)) {
    auto dec = qhent::p_decompose_element(g, x);
    Json parts = Json::array();
    for (const auto& p : dec.parts)
      parts.push_back(Json{{"prime", p.prime},
                           {"order", p.order},
                           {"part", p.part.hex()}});
    primary.push_back(Json{{"element", x.hex()},
                           {"verified", dec.verified},
                           {"parts", std::move(parts)}});
  }
  results["primary"] = std::move(primary);
  emit(o, "decompose", job_echo("decompose", o, &gdoc, nullptr),
       std::move(results), started);
  return 0;
}

int cmd_validate(const Opts& o) {
  auto started = std::chrono::steady_clock::now();
  Json gdoc = need_file(o.group, "group");
  auto rep = qhent::io::validate_group(gdoc);
  if (!o.endo.empty()) {
    auto er = qhent::io::validate_endo(qhent::io::load_json_file(o.endo));
    for (auto& v : er.violations)
      rep.violations.push_back({"endomorphism" + v.location, v.message});
  }
  Json violations = Json::array();
  for (const auto& v : rep.violations)
    violations.push_back(Json{{"location", v.location}, {"message", v.message}});
  Json results{{"valid", rep.ok()}, {"violations", std::move(violations)}};
  emit(o, "validate", job_echo("validate", o, &gdoc, nullptr),
       std::move(results), started);
  return rep.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

int verdict_severity(qhent::Verdict v) {
  switch (v) {
    case qhent::Verdict::holds_exactly: return 0;
    case qhent::Verdict::holds_within_certification: return 1;
    case qhent::Verdict::inequality_observed: return 2;
    case qhent::Verdict::inconclusive: return 3;
    case qhent::Verdict::violation: return 4;
  }
  return 4;
}

qhent::LawReport run_instance(const Json& inst, const fs::path& dir,
                              const Opts& o) {
  auto cfg = config_of(o);
  std::string law = inst.at("law").get<std::string>();
  auto g = qhent::io::parse_group(resolve_doc(inst.at("group"), dir), o.seed);
  auto bases = qhent::io::parse_bases(
      inst.contains("bases") ? inst["bases"] : Json(o.bases), g);

  auto endo_of = [&](const char* key) {
    return qhent::io::parse_endo(resolve_doc(inst.at(key), dir), g);
  };

  if (law == "identity") return qhent::check_identity_zero(g, bases, cfg);
  if (law == "addition" || law == "monotonicity") {
    qhent::ATInstance at{endo_of("endo"),
                         qhent::io::parse_witness(
                             resolve_doc(inst.at("witness"), dir), g),
                         bases};
    return law == "addition" ? qhent::check_addition(at, cfg)
                             : qhent::check_monotonicity(at, cfg);
  }
  if (law == "conjugation")
    return qhent::check_conjugation(endo_of("endo"), endo_of("alpha"), bases,
                                    cfg);
  if (law == "log")
    return qhent::check_log_law(endo_of("endo"),
                                inst.value("m", std::uint64_t{2}), bases, cfg);
  if (law == "prime_sum") return qhent::check_prime_sum(endo_of("endo"), bases, cfg);
  if (law == "inverse_modulus") {
    auto phi = endo_of("endo");
    qhent::LawReport agg;
    agg.law = "inverse_modulus";
    agg.verdict = qhent::Verdict::holds_exactly;
    for (const auto& U : bases) {
      auto rep = qhent::check_inverse_modulus(phi, U, cfg);
      if (verdict_severity(rep.verdict) > verdict_severity(agg.verdict))
        agg.verdict = rep.verdict;
      agg.lhs = rep.lhs;
      agg.rhs = rep.rhs;
      if (!agg.detail.empty()) agg.detail += "; ";
      agg.detail += rep.detail;
    }
    return agg;
  }
  throw qhent::DecodeError("unknown law \"" + law + "\"");
}

int cmd_verify(const Opts& o) {
  auto started = std::chrono::steady_clock::now();
  Json suite;
  fs::path dir;
  Json job;
  if (!o.suite.empty()) {
    suite = qhent::io::load_json_file(o.suite);
    dir = fs::path(o.suite).parent_path();
    job = job_echo("verify", o, nullptr, nullptr);
    job["suite"] = fs::path(o.suite).filename().string();
  } else {
    // single-instance mode: the laws applicable to one (group, map) pair
    Json gdoc = need_file(o.group, "group");
    Json edoc = need_file(o.endo, "endo");
    job = job_echo("verify", o, &gdoc, &edoc);
    auto g = qhent::io::parse_group(gdoc, o.seed);
    Json instances = Json::array();
    instances.push_back(Json{{"name", "identity-zero"},
                             {"law", "identity"},
                             {"group", gdoc},
                             {"bases", o.bases}});
    instances.push_back(Json{{"name", "logarithmic"},
                             {"law", "log"},
                             {"group", gdoc},
                             {"endo", edoc},
                             {"m", o.m},
                             {"bases", o.bases}});
    if (g->abelian_hint())
      instances.push_back(Json{{"name", "prime-sum"},
                               {"law", "prime_sum"},
                               {"group", gdoc},
                               {"endo", edoc},
                               {"bases", o.bases}});
    if (qhent::io::parse_endo(edoc, g)->inverse())
      instances.push_back(Json{{"name", "inverse-modulus"},
                               {"law", "inverse_modulus"},
                               {"group", gdoc},
                               {"endo", edoc},
                               {"bases", o.bases}});
    suite = Json{{"instances", std::move(instances)}};
  }

  Json reports = Json::array();
  std::size_t violations = 0;
  for (const auto& inst : suite.at("instances")) {
    auto rep = run_instance(inst, dir, o);
    if (rep.verdict == qhent::Verdict::violation) {
      ++violations;
      g_violation = true;
    }
    if (rep.detail.find("budget_exhausted") != std::string::npos)
      g_budget_hit = true;
    reports.push_back(Json{{"name", inst.value("name", std::string("?"))},
                           {"law", rep.law},
                           {"verdict", qhent::verdict_name(rep.verdict)},
                           {"lhs", rep.lhs},
                           {"rhs", rep.rhs},
                           {"detail", rep.detail}});
  }
  Json results{{"reports", std::move(reports)}, {"violations", violations}};
  emit(o, "verify", std::move(job), std::move(results), started);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact algebraic entropy for discrete locally finite groups"};
  app.require_subcommand(1);
  Opts o;

  auto* entropy = app.add_subcommand("entropy", "trajectory entropy per base");
  auto* limit_free =
      app.add_subcommand("limit-free", "limit-free entropy per base");
  auto* structure =
      app.add_subcommand("structure", "classification and structure reports");
  auto* decompose =
      app.add_subcommand("decompose", "direct and primary decompositions");
  auto* verify = app.add_subcommand("verify", "law checks over fixtures");
  auto* validate = app.add_subcommand("validate", "schema-check documents");
  for (auto* sub :
       {entropy, limit_free, structure, decompose, verify, validate})
    add_common(sub, o);
  verify->add_option("--suite", o.suite, "law suite manifest");
  verify->add_option("--m", o.m, "iterate exponent for the logarithmic law");

  CLI11_PARSE(app, argc, argv);

  try {
    int rc = 0;
    if (entropy->parsed()) rc = cmd_entropy(o, false);
    if (limit_free->parsed()) rc = cmd_entropy(o, true);
    if (structure->parsed()) rc = cmd_structure(o);
    if (decompose->parsed()) rc = cmd_decompose(o);
    if (verify->parsed()) rc = cmd_verify(o);
    if (validate->parsed()) rc = cmd_validate(o);
    if (g_violation) return 2;
    if (o.strict && g_budget_hit) return 3;
    return rc;
  } catch (const qhent::BudgetError& e) {
    std::cerr << "qhent: budget exhausted: " << e.what() << "\n";
    return o.strict ? 3 : 1;
  } catch (const qhent::Error& e) {
    std::cerr << "qhent: " << e.what() << "\n";
    return 1;
  }
}
