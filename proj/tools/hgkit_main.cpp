// hgkit command-line front end. Every command prints one JSON object
// {command, inputs, result, version, seed} unless --csv is given;
// verify-beckmann first streams one JSON line per specialization.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "hgkit/classify.hpp"
#include "hgkit/covers.hpp"
#include "hgkit/group_spec.hpp"
#include "hgkit/kummer.hpp"
#include "hgkit/local_tame.hpp"
#include "hgkit/prime_strata.hpp"
#include "hgkit/version.hpp"

using nlohmann::json;
using namespace hgkit;

namespace {

constexpr int kUsageError = 1;
constexpr int kVerificationFailure = 2;

struct Globals {
  bool csv = false;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct Outcome {
  json inputs = json::object();
  json result;
  /// Rows printed instead of the report under --csv.
  std::vector<std::string> csv;
  /// JSON lines printed before the report (sweeps).
  std::vector<std::string> stream;
  int exit_code = 0;
};

std::string join(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
  return out;
}

std::string cell(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

/// key,value rows for a flat JSON object.
std::vector<std::string> key_value_rows(const json& j) {
  std::vector<std::string> rows{"key,value"};
  for (const auto& [k, v] : j.items()) rows.push_back(k + "," + (v.is_structured() ? "\"" + v.dump() + "\"" : cell(v)));
  return rows;
}

Outcome cmd_classify(const std::string& spec) {
  const auto g = group::parse_group_spec(spec);
  Outcome out;
  out.inputs = {{"group", spec}};
  out.result = group::classify(g);
  out.csv = {"field,value"};
  for (const char* key : {"group_label", "order", "is_trivial", "hg_real", "hg_sqrt_minus1", "pd1_candidate"})
    out.csv.push_back(std::string(key) + "," + cell(out.result[key]));
  return out;
}

Outcome cmd_obstructions(const std::string& spec) {
  const auto g = group::parse_group_spec(spec);
  Outcome out;
  out.inputs = {{"group", spec}};
  const auto obs = group::detect_obstructions(g);
  out.result = {{"obstructions", obs}, {"all_witnesses_verified", true}};
  out.csv = {"kind,witness"};
  for (const auto& w : obs) {
    if (!group::verify_witness(g, w)) out.result["all_witnesses_verified"] = false;
    std::string ws;
    for (auto x : w.witness) ws += (ws.empty() ? "" : " ") + std::to_string(x);
    out.csv.push_back(group::to_string(w.kind) + "," + ws);
  }
  if (!out.result["all_witnesses_verified"].get<bool>()) out.exit_code = kVerificationFailure;
  return out;
}

Outcome cmd_local_cyclic(std::uint64_t q, std::uint64_t d, std::uint64_t e) {
  Outcome out;
  out.inputs = {{"q", q}, {"d", d}, {"e", e}};
  out.result = {{"exists", tame::cyclic_tame_exists(q, d, e)}};
  out.csv = key_value_rows(out.result);
  return out;
}

Outcome cmd_tame_pairs(const std::string& spec, std::uint64_t q, std::size_t limit) {
  const auto g = group::parse_group_spec(spec);
  const auto pairs = tame::enumerate_tame_pairs(g, q);
  Outcome out;
  out.inputs = {{"group", spec}, {"q", q}, {"limit", limit}};
  std::vector<tame::TamePair> shown(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(std::min(limit, pairs.size())));
  json inertia = json::array();
  for (const auto& p : shown) inertia.push_back(g.element_order(p.tau));
  out.result = {{"count", pairs.size()}, {"pairs", shown}, {"inertia_orders", inertia}};
  out.csv = {"sigma,tau,inertia_order"};
  for (const auto& p : shown)
    out.csv.push_back(std::to_string(p.sigma) + "," + std::to_string(p.tau) + "," + std::to_string(g.element_order(p.tau)));
  return out;
}

tame::LocalExtensionSpec parse_at(const std::string& text) {
  // "p,e,f" or "p,e,f,D"; the key=value form is accepted as well
  if (text.find('=') != std::string::npos) return tame::parse_local_spec(text);
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() < 3) throw PreconditionError("--at expects p,e,f[,D]: '" + text + "'");
  std::string spec = "p=" + parts[0] + ",e=" + parts[1] + ",f=" + parts[2];
  if (parts.size() > 3) {
    spec += ",D=";
    for (std::size_t i = 3; i < parts.size(); ++i) spec += (i > 3 ? "," : "") + parts[i];
  }
  return tame::parse_local_spec(spec);
}

Outcome cmd_grunwald(const std::string& spec, const std::vector<std::string>& at, const std::string& batch) {
  const auto g = group::parse_group_spec(spec);
  std::vector<tame::LocalExtensionSpec> problems;
  for (const auto& a : at) problems.push_back(parse_at(a));
  if (!batch.empty()) {
    std::ifstream in(batch);
    if (!in) throw PreconditionError("cannot open batch file '" + batch + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw PreconditionError("batch file '" + batch + "' is not valid JSON: " + e.what());
    }
    for (auto& p : tame::parse_local_specs(j)) problems.push_back(std::move(p));
  }
  if (problems.empty()) throw PreconditionError("grunwald needs at least one --at or --batch problem");
  Outcome out;
  out.inputs = {{"group", spec}, {"problems", problems}};
  const auto report = tame::grunwald_feasible(g, problems);
  out.result = report;
  out.csv = {"p,e,f,D,feasible"};
  for (const auto& r : report.problems)
    out.csv.push_back(join({std::to_string(r.spec.p), std::to_string(r.spec.e), std::to_string(r.spec.f),
                            r.spec.group_spec, r.feasible ? "true" : "false"}));
  return out;
}

Outcome cmd_specialize(const std::string& cover_spec, const std::string& t0_text, std::uint64_t p) {
  const auto cover = covers::parse_cover_spec(cover_spec);
  const Rational t0 = nt::parse_rational(t0_text);
  Outcome out;
  out.inputs = {{"cover", cover}, {"t0", nt::to_string(t0)}, {"p", p}};
  const auto pred = covers::predict_specialization(cover, t0, p);
  out.result = {{"branch_data", covers::branch_data(cover)},
                {"branch_inertia", pred.branch_inertia},
                {"multiplicity", pred.multiplicity},
                {"point", pred.point ? json(covers::to_string(*pred.point)) : json(nullptr)},
                {"predicted_e", pred.predicted_e},
                {"predicted_f", pred.predicted_f ? json(*pred.predicted_f) : json(nullptr)},
                {"exceptional", pred.exceptional}};
  if (cover.d % p != 0) out.result["report"] = covers::verify_beckmann(cover, t0, p);
  out.csv = {"predicted_e,predicted_f,exceptional"};
  out.csv.push_back(join({std::to_string(pred.predicted_e), pred.predicted_f ? std::to_string(*pred.predicted_f) : "",
                          pred.exceptional ? "true" : "false"}));
  return out;
}

Outcome cmd_verify_beckmann(const std::string& cover_spec, std::uint64_t bound, std::size_t samples,
                            bool summary_only, const Globals& globals) {
  const auto cover = covers::parse_cover_spec(cover_spec);
  covers::SweepOptions opt;
  opt.prime_bound = bound;
  opt.samples = samples;
  opt.seed = globals.seed;
  opt.threads = globals.threads;
  const auto sweep = covers::sweep(cover, opt);
  Outcome out;
  out.inputs = {{"cover", cover}, {"primes", bound}, {"samples", samples}};
  out.result = {{"summary", sweep.summary}, {"rng", "mt19937_64, rejection-sampled bounded integers"}};
  out.result["stratum_law"] = sweep.stratum_law ? json(*sweep.stratum_law) : json(nullptr);
  out.csv = {"t0,p,point,multiplicity,predicted_e,predicted_f,oracle_e,oracle_f,exceptional,agree"};
  for (const auto& r : sweep.reports) {
    const json j = r;
    if (!summary_only) out.stream.push_back(j.dump());
    out.csv.push_back(join({cell(j["t0"]), cell(j["p"]),
                            r.prediction.point ? covers::to_string(*r.prediction.point) : "",
                            std::to_string(r.prediction.multiplicity), cell(j["predicted_e"]),
                            j["predicted_f"].is_null() ? "" : cell(j["predicted_f"]), cell(j["oracle_e"]),
                            cell(j["oracle_f"]), cell(j["exceptional"]), cell(j["agree"])}));
  }
  if (sweep.summary.disagree > 0) out.exit_code = kVerificationFailure;
  return out;
}

Outcome cmd_oracle(std::uint64_t p, std::uint64_t d, std::int64_t v, std::int64_t w, const std::string& coeffs) {
  Outcome out;
  out.inputs = {{"p", p}, {"d", d}, {"v", v}};
  oracle::KummerLocalInvariants inv;
  if (coeffs.empty()) {
    out.inputs["w"] = w;
    inv = oracle::kummer_local_invariants(p, d, v, w);
  } else {
    std::vector<std::uint64_t> cs;
    std::stringstream ss(coeffs);
    for (std::string item; std::getline(ss, item, ',');) cs.push_back(static_cast<std::uint64_t>(std::stoull(item)));
    out.inputs["w_coeffs"] = cs;
    if (d == 0) throw PreconditionError("degree d must be positive");
    const auto f0 = static_cast<unsigned>(nt::multiplicative_order(p % d, d));
    const auto& field = oracle::cached_field(p, f0);
    out.inputs["modulus"] = field.modulus();
    inv = oracle::kummer_local_invariants(p, d, v, field.from_coeffs(cs));
  }
  out.result = inv;
  out.csv = key_value_rows(out.result);
  return out;
}

Outcome cmd_strata(std::uint64_t d, std::uint64_t e, std::uint64_t bound) {
  Outcome out;
  out.inputs = {{"d", d}, {"e", e}, {"bound", bound}};
  const auto s = strata::enumerate_stratum(d, e, bound);
  out.result = s;
  for (auto p : s.primes) out.csv.push_back(std::to_string(p));
  return out;
}

Outcome cmd_lemma32(std::uint64_t q, std::uint64_t r, std::uint64_t bound) {
  Outcome out;
  out.inputs = {{"q", q}, {"r", r}, {"bound", bound}};
  const auto primes = strata::lemma32_prime_set(q, r, bound);
  out.result = {{"primes", primes}, {"count", primes.size()}, {"component", "cyclotomic"}};
  for (auto p : primes) out.csv.push_back(std::to_string(p));
  return out;
}

Outcome cmd_biquad(std::int64_t a, std::int64_t b, std::uint64_t p) {
  Outcome out;
  out.inputs = {{"a", a}, {"b", b}, {"p", p}};
  const auto split = strata::biquadratic_split(a, b, p);
  const auto g = static_cast<std::int64_t>(nt::gcd(a < 0 ? -a : a, b < 0 ? -b : b));
  out.result = {{"split", split}, {"radicands", {a, b, (a / g) * (b / g)}}};
  for (int j : split) out.csv.push_back(std::to_string(j));
  return out;
}

Outcome cmd_sum_two_squares(const std::string& text) {
  const Rational a = nt::parse_rational(text);
  Outcome out;
  out.inputs = {{"a", nt::to_string(a)}};
  out.result = tame::c4_embeddable_quadratic(a);
  out.csv = key_value_rows(out.result);
  return out;
}

void emit(const std::string& command, const Outcome& outcome, const Globals& globals) {
  if (globals.csv) {
    for (const auto& row : outcome.csv) std::cout << row << '\n';
    return;
  }
  for (const auto& line : outcome.stream) std::cout << line << '\n';
  const json report{{"command", command},
                    {"inputs", outcome.inputs},
                    {"result", outcome.result},
                    {"version", kVersion},
                    {"seed", globals.seed}};
  std::cout << report.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hgkit: Hilbert-Grunwald eligibility, tame local Galois theory and Kummer specialization checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON report (default)");
  app.add_flag("--csv", globals.csv, "CSV rows instead of the JSON report");
  app.add_option("--seed", globals.seed, "seed for sweeps")->capture_default_str();
  app.add_option("--threads", globals.threads, "worker threads for sweeps")->capture_default_str()->check(CLI::PositiveNumber);

  std::string command;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&command, name] { command = name; });
    return s;
  };

  std::string group_spec, cover_spec, t0_text, batch, coeffs, rational_text;
  std::vector<std::string> at;
  std::uint64_t q = 0, d = 0, e = 0, p = 0, r = 0, prime_bound = 0, strata_bound = 0, lemma_bound = 0;
  std::int64_t v = 0, w = 1, a = 0, b = 0;
  std::size_t samples = 200, limit = 50;
  bool summary_only = false;

  auto* classify = sub("classify", "classification report for a group");
  classify->add_option("group", group_spec, "group spec, e.g. SD:7,3,2 or X:C3*S3 or table.json")->required();

  auto* obstructions = sub("obstructions", "obstruction witnesses of a group");
  obstructions->add_option("group", group_spec)->required();

  auto* local_cyclic = sub("local-cyclic", "does Q_q have a cyclic degree-d extension with ramification e");
  local_cyclic->add_option("q", q)->required();
  local_cyclic->add_option("d", d)->required();
  local_cyclic->add_option("e", e)->required();

  auto* tame_pairs = sub("tame-pairs", "generating pairs with sigma^-1 tau sigma = tau^q");
  tame_pairs->add_option("group", group_spec)->required();
  tame_pairs->add_option("q", q)->required();
  tame_pairs->add_option("--limit", limit, "pairs listed in the report")->capture_default_str();

  auto* grunwald = sub("grunwald", "per-prime feasibility of local conditions");
  grunwald->add_option("group", group_spec)->required();
  grunwald->add_option("--at", at, "p,e,f[,D] (repeatable)");
  grunwald->add_option("--batch", batch, "JSON array of local specs");

  auto* specialize = sub("specialize", "predicted local invariants of a specialization");
  specialize->add_option("cover", cover_spec, "d=<int>,m=<int>,c=<rational>")->required();
  specialize->add_option("t0", t0_text)->required();
  specialize->add_option("p", p)->required();

  auto* verify = sub("verify-beckmann", "seeded predictor-vs-oracle sweep");
  verify->add_option("cover", cover_spec, "d=<int>,m=<int>,c=<rational>")->required();
  verify->add_option("--primes", prime_bound, "prime bound")->default_val(10000);
  verify->add_option("--samples", samples)->capture_default_str();
  verify->add_flag("--summary-only", summary_only, "omit the per-sample JSON lines");

  auto* oracle_cmd = sub("oracle", "local invariants of X^d - p^v w over Q_p");
  oracle_cmd->add_option("p", p)->required();
  oracle_cmd->add_option("d", d)->required();
  oracle_cmd->add_option("v", v)->required();
  oracle_cmd->add_option("w", w, "unit residue mod p")->default_val(1);
  oracle_cmd->add_option("--w-coeffs", coeffs, "w in F_{p^f0} by coefficients c0,c1,... of the field modulus");

  auto* strata_cmd = sub("strata", "primes with gcd(d, p - 1) = e up to a bound");
  strata_cmd->add_option("d", d)->required();
  strata_cmd->add_option("e", e)->required();
  strata_cmd->add_option("--bound", strata_bound)->default_val(10000);

  auto* lemma32 = sub("lemma32-set",
                      "primes p = 1 mod r, p != 1 mod q (cyclotomic part only; the auxiliary-field Frobenius "
                      "condition needs a specific cover and is not modelled)");
  lemma32->add_option("q", q)->required();
  lemma32->add_option("r", r)->required();
  lemma32->add_option("--bound", lemma_bound)->default_val(1000);

  auto* biquad = sub("biquad-split", "quadratic subfields of Q(sqrt a, sqrt b) in which p splits");
  biquad->add_option("a", a)->required();
  biquad->add_option("b", b)->required();
  biquad->add_option("p", p)->required();

  auto* sum_two = sub("sum-two-squares", "is a a sum of two rational squares (C4-embedding of Q(sqrt a))");
  sum_two->add_option("a", rational_text, "rational a, e.g. 13 or -5/7")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  (void)json_flag;

  try {
    Outcome outcome;
    if (command == "classify") outcome = cmd_classify(group_spec);
    else if (command == "obstructions") outcome = cmd_obstructions(group_spec);
    else if (command == "local-cyclic") outcome = cmd_local_cyclic(q, d, e);
    else if (command == "tame-pairs") outcome = cmd_tame_pairs(group_spec, q, limit);
    else if (command == "grunwald") outcome = cmd_grunwald(group_spec, at, batch);
    else if (command == "specialize") outcome = cmd_specialize(cover_spec, t0_text, p);
    else if (command == "verify-beckmann") outcome = cmd_verify_beckmann(cover_spec, prime_bound, samples, summary_only, globals);
    else if (command == "oracle") outcome = cmd_oracle(p, d, v, w, coeffs);
    else if (command == "strata") outcome = cmd_strata(d, e, strata_bound);
    else if (command == "lemma32-set") outcome = cmd_lemma32(q, r, lemma_bound);
    else if (command == "biquad-split") outcome = cmd_biquad(a, b, p);
    else if (command == "sum-two-squares") outcome = cmd_sum_two_squares(rational_text);
    emit(command, outcome, globals);
    return outcome.exit_code;
  } catch (const std::exception& ex) {
    std::cerr << "hgkit " << command << ": " << ex.what() << '\n';
    return kUsageError;
  }
}
