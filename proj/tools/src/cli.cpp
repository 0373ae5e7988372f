#include "ringstar/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "report.hpp"
#include "ringstar/corpus.hpp"
#include "ringstar/errors.hpp"
#include "ringstar/presented.hpp"
#include "ringstar/semiunit.hpp"
#include "ringstar/spectrum.hpp"
#include "ringstar/star.hpp"

#ifndef RINGSTAR_VERSION
#define RINGSTAR_VERSION "0.0.0"
#endif

namespace ringstar::cli {

namespace {

struct Outcome {
  Json ring;                    // canonical spec string, or null
  Json result;
  std::optional<bool> verdict;  // consulted by --fail-on-false
  Json timing = Json::object();
};

std::vector<Element> parse_elements(const FiniteRing& ring, const std::string& text) {
  std::vector<Element> out;
  for (const auto& item : split_top_level(text, ',')) {
    if (!item.empty()) out.push_back(ring.parse_element(item));
  }
  return out;
}

Ideal parse_ideal(const FiniteRing& ring, const std::string& text) {
  const auto gens = parse_elements(ring, text);
  return ideal_closure(ring, gens);
}

Json maximal_json(const MaximalIdealList& maximal) {
  Json out = Json::array();
  for (const Ideal& m : maximal.ideals) out.push_back(elements_json(m.ring(), m.generators()));
  return out;
}

Outcome ring_info(const std::string& text, const Limits& limits) {
  const FiniteRing R = make_ring(text, limits);
  const Spectrum spec = spectrum(R, limits);
  Json result;
  result["carrier"] = R.size();
  result["units"] = elements_json(R, R.units());
  result["unitCount"] = R.units().size();
  result["rad"] = elements_json(R, spec.radical.elements());
  result["maximalIdeals"] = spec.maximal.ideals.size();
  result["maximalIdealGenerators"] = maximal_json(spec.maximal);
  result["idempotents"] = elements_json(R, idempotents(R));
  result["connected"] = is_connected_mod_rad(R);
  result["isField"] = R.is_field();
  result["reduced"] = spec.radical.is_zero();
  return {R.spec().to_string(), std::move(result), std::nullopt};
}

Outcome ring_ideals(const std::string& text, const Limits& limits) {
  const FiniteRing R = make_ring(text, limits);
  const Spectrum spec = spectrum(R, limits);
  Json list = Json::array();
  for (const Ideal& ideal : enumerate_ideals(R, limits)) {
    Json entry = ideal_json(ideal);
    entry["proper"] = ideal.is_proper();
    bool maximal = false;
    for (const Ideal& m : spec.maximal.ideals) maximal = maximal || m == ideal;
    entry["maximal"] = maximal;
    entry["radical"] = ideal == spec.radical;
    list.push_back(std::move(entry));
  }
  Json result;
  result["count"] = list.size();
  result["ideals"] = std::move(list);
  return {R.spec().to_string(), std::move(result), std::nullopt};
}

Outcome rho_table(const std::string& text, const Limits& limits) {
  const FiniteRing R = make_ring(text, limits);
  const Spectrum spec = spectrum(R, limits);
  Json rows = Json::array();
  std::size_t semi_units = 0;
  for (Element r : R.elements()) {
    Json row;
    row["element"] = element_json(R, r);
    const Rho value = rho(spec, r);
    row["rho"] = std::string(to_string(value));
    row["unit"] = R.is_unit(r);
    if (value == Rho::one) {
      ++semi_units;
      row["semiInverses"] = elements_json(R, semi_inverses(spec, r));
    }
    rows.push_back(std::move(row));
  }
  Json result;
  result["semifield"] = is_semifield(spec);
  result["semiUnits"] = semi_units;
  result["table"] = std::move(rows);
  return {R.spec().to_string(), std::move(result), std::nullopt};
}

Outcome decompose(const std::string& text, const std::string& element, const Limits& limits) {
  const FiniteRing R = make_ring(text, limits);
  const Spectrum spec = spectrum(R, limits);
  const Element r = R.parse_element(element);
  const SemiUnitDecomposition d = semi_unit_decomposition(spec, r);
  Json result;
  result["r"] = element_json(R, r);
  result["u"] = element_json(R, d.u);
  result["e"] = element_json(R, d.e);
  result["t"] = element_json(R, d.t);
  result["uInverse"] = element_json(R, d.u_inverse);
  const auto& c = d.certificates;
  result["certificates"] = Json{{"uIsUnit", c.u_is_unit},
                                {"eIdempotentModRad", c.e_idempotent_mod_rad},
                                {"tInRadical", c.t_in_radical},
                                {"recombines", c.recombines},
                                {"uInverseIsSemiInverse", c.u_inverse_is_semi_inverse}};
  return {R.spec().to_string(), std::move(result), std::nullopt};
}

Json verdict_witness(const StarReport& report, const FiniteRing& R, const StarVerdict& v) {
  const FiniteRing& ring = v.method == StarMethod::direct ? report.quotient : R;
  return Json{{"method", std::string(to_string(v.method))}, {"element", element_json(ring, *v.witness)}};
}

Outcome star_check_command(const std::string& text, const std::string& gens, const Limits& limits) {
  const FiniteRing R = make_ring(text, limits);
  const Ideal ideal = parse_ideal(R, gens);
  const StarReport report = star_report(R, ideal);
  Json methods = Json::object();
  Json witnesses = Json::array();
  for (const StarVerdict& v : report.verdicts) {
    methods[std::string(to_string(v.method))] = v.holds;
    if (v.witness) witnesses.push_back(verdict_witness(report, R, v));
  }
  Json result;
  result["ring"] = R.spec().to_string();
  result["ideal"] = ideal_json(ideal);
  result["quotient"] = report.quotient.spec().to_string();
  result["holds"] = report.holds();
  result["methods"] = std::move(methods);
  result["witnesses"] = std::move(witnesses);
  return {R.spec().to_string(), std::move(result), report.holds()};
}

Outcome star_ring_command(const std::string& text, const Limits& limits) {
  const FiniteRing R = make_ring(text, limits);
  const RingStarReport report = ring_has_star(R, limits);
  Json ideals = Json::array();
  for (std::size_t i = 0; i < report.ideals.size(); ++i) {
    Json entry;
    entry["generators"] = elements_json(R, report.ideals[i].generators());
    entry["size"] = report.ideals[i].size();
    entry["holds"] = report.verdicts[i].holds;
    if (report.verdicts[i].witness) {
      const FiniteRing quotient = quotient_ring(R, report.ideals[i]).ring;
      entry["witness"] = element_json(quotient, *report.verdicts[i].witness);
    }
    ideals.push_back(std::move(entry));
  }
  Json result;
  result["hasStar"] = report.holds;
  result["semifield"] = is_semifield(R);
  result["properIdeals"] = report.ideals.size();
  result["ideals"] = std::move(ideals);
  return {R.spec().to_string(), std::move(result), report.holds};
}

Outcome star_presented(const std::string& ring_text, const std::string& modulus_text,
                       const Limits& limits) {
  const PresentedRing P = parse_presented_ring(ring_text);
  const PresentedElement modulus = P.parse_element(modulus_text);
  const PresentedStarResult r = presented_star_check(P, modulus, limits);
  Json result;
  result["hasStar"] = r.has_star;
  result["modulus"] = P.format(modulus);
  result["quotient"] = r.quotient.spec().to_string();
  Json units = Json::array();
  for (const auto& u : P.unit_list()) units.push_back(P.format(u));
  result["unitList"] = std::move(units);
  result["unitImage"] = elements_json(r.quotient, r.unit_image);
  result["quotientUnits"] = elements_json(r.quotient, r.quotient.units());
  result["witness"] = r.witness ? element_json(r.quotient, *r.witness) : Json();
  result["witnessInverse"] = r.witness_inverse ? element_json(r.quotient, *r.witness_inverse) : Json();
  return {P.name(), std::move(result), r.has_star};
}

Matrix parse_matrix(const FiniteRing& ring, const std::string& text) {
  std::vector<std::vector<Element>> rows;
  for (const auto& row : split_top_level(text, ';')) rows.push_back(parse_elements(ring, row));
  if (rows.empty()) throw PreconditionError("empty matrix");
  return Matrix::from_rows(ring, rows);
}

Outcome gl_lift_command(const std::string& source_text, const std::string& kernel_gens,
                        const std::string& matrix_text, const Limits& limits) {
  const FiniteRing R = make_ring(source_text, limits);
  const Spectrum spec = spectrum(R, limits);
  const Ideal kernel = parse_ideal(R, kernel_gens);
  const Quotient q = quotient_ring(R, kernel);
  const Matrix b = parse_matrix(q.ring, matrix_text);
  const Matrix lift = gl_lift(spec, q.projection, b, limits);
  Json result;
  result["source"] = R.spec().to_string();
  result["kernel"] = ideal_json(kernel);
  result["target"] = q.ring.spec().to_string();
  result["matrix"] = matrix_json(b);
  result["det"] = element_json(q.ring, det(b));
  result["lift"] = matrix_json(lift);
  result["liftDet"] = element_json(R, det(lift));
  result["liftInverse"] = matrix_json(*matrix_inverse(lift));
  return {R.spec().to_string(), std::move(result), std::nullopt};
}

Json criterion_json(const CriterionResult& c) {
  Json out;
  out["id"] = c.id;
  out["name"] = c.name;
  out["passed"] = c.passed;
  out["checked"] = c.checked;
  out["failureCount"] = c.failure_count;
  out["failures"] = c.failures;
  out["detail"] = c.detail;
  return out;
}

using CriterionFn = CriterionResult (*)(const CorpusOptions&);
constexpr CriterionFn kCriteria[] = {
    check_star_agreement,     check_semifield_has_star,    check_integer_example,
    check_polynomial_example, check_radical_of_product,    check_reduction_mod_radical,
    check_rho_laws,           check_semi_inverse_uniqueness, check_decomposition,
    check_crt_lifting,        check_product_of_fields,     check_gl_lifting,
    check_dedekind_finite,    check_saturation_laws};

Json corpus_pass(const CorpusOptions& options, const std::vector<int>& only, Json& timing) {
  Json criteria = Json::array();
  for (std::size_t i = 0; i < std::size(kCriteria); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    criteria.push_back(criterion_json(kCriteria[i](options)));
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    timing[std::to_string(id)] = elapsed.count();
  }
  return criteria;
}

Outcome corpus_run(const CorpusOptions& options, const std::vector<int>& only, bool single_pass) {
  Outcome outcome{nullptr, Json::object(), std::nullopt};
  Json timing = Json::object();
  Json criteria = corpus_pass(options, only, timing);
  outcome.timing["criteria"] = timing;

  bool all = true;
  for (const auto& c : criteria) all = all && c["passed"].get<bool>();
  if (!single_pass) {
    Json second_timing = Json::object();
    const bool same = corpus_pass(options, only, second_timing).dump() == criteria.dump();
    outcome.timing["secondPass"] = second_timing;
    Json c15;
    c15["id"] = 15;
    c15["name"] = "two runs with the same seed give byte-identical stable sections";
    c15["passed"] = same;
    c15["checked"] = 1;
    c15["failureCount"] = same ? 0 : 1;
    c15["failures"] = same ? Json::array() : Json::array({"second pass differs"});
    c15["detail"] = "";
    criteria.push_back(std::move(c15));
    all = all && same;
  }
  outcome.result["maxCarrier"] = options.max_carrier;
  outcome.result["seed"] = options.seed;
  outcome.result["liftSamples"] = options.lift_samples;
  outcome.result["rings"] = corpus_specs(options.max_carrier).size();
  outcome.result["passed"] = all;
  outcome.result["criteria"] = std::move(criteria);
  outcome.verdict = all;
  return outcome;
}

}  // namespace

std::string stable_section(const std::string& report_json) {
  Json report = Json::parse(report_json);
  report.erase("timing");
  return report.dump();
}

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit-lifting computations over finite commutative rings", "ringstar"};
  app.require_subcommand(1);
  app.set_version_flag("--version", RINGSTAR_VERSION);

  std::string format = "json";
  bool fail_on_false = false;
  Limits limits;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--fail-on-false", fail_on_false, "Exit with status 2 when the answer is false");
  app.add_option("--carrier-guard", limits.max_carrier, "Largest ring carrier accepted");
  app.add_option("--ideal-guard", limits.max_ideal_enumeration, "Largest ideal enumeration accepted");

  std::function<Outcome()> command;
  std::vector<std::string> command_words;
  std::string spec_text;
  std::string element_text;
  std::string ideal_text;
  std::string matrix_text;

  auto* ring = app.add_subcommand("ring", "Ring structure")->require_subcommand(1);
  auto* info = ring->add_subcommand("info", "Carrier, units, radical, maximal ideals, idempotents");
  info->add_option("spec", spec_text)->required();
  info->callback([&] { command = [&] { return ring_info(spec_text, limits); }; });
  auto* ideals = ring->add_subcommand("ideals", "Every ideal of the ring");
  ideals->add_option("spec", spec_text)->required();
  ideals->callback([&] { command = [&] { return ring_ideals(spec_text, limits); }; });

  auto* rho_cmd = app.add_subcommand("rho", "Semi-inverse data")->require_subcommand(1);
  auto* table = rho_cmd->add_subcommand("table", "rho and semi-inverses for every element");
  table->add_option("spec", spec_text)->required();
  table->callback([&] { command = [&] { return rho_table(spec_text, limits); }; });

  auto* decomp = app.add_subcommand("decompose", "Write a semi-unit as u*e + t");
  decomp->add_option("spec", spec_text)->required();
  decomp->add_option("element", element_text)->required();
  decomp->callback([&] { command = [&] { return decompose(spec_text, element_text, limits); }; });

  auto* star = app.add_subcommand("star", "Unit lifting along quotients")->require_subcommand(1);
  auto* check = star->add_subcommand("check", "All four formulations for one ideal");
  check->add_option("spec", spec_text)->required();
  check->add_option("--ideal", ideal_text, "Comma-separated generators")->required();
  check->callback([&] { command = [&] { return star_check_command(spec_text, ideal_text, limits); }; });
  auto* star_ring = star->add_subcommand("ring", "Every proper ideal of the ring");
  star_ring->add_option("spec", spec_text)->required();
  star_ring->callback([&] { command = [&] { return star_ring_command(spec_text, limits); }; });
  auto* presented = star->add_subcommand("presented", "Z or GF(p)[x] modulo one element");
  presented->add_option("ring", spec_text)->required();
  presented->add_option("modulus", element_text)->required();
  presented->callback([&] { command = [&] { return star_presented(spec_text, element_text, limits); }; });

  auto* gl = app.add_subcommand("gl", "Invertible matrices")->require_subcommand(1);
  auto* lift = gl->add_subcommand("lift", "Lift an invertible matrix along R -> R/I");
  lift->add_option("source", spec_text)->required();
  lift->add_option("kernel", ideal_text, "Comma-separated generators of I")->required();
  lift->add_option("--matrix", matrix_text, "Rows a,b;c,d over R/I")->required();
  lift->callback(
      [&] { command = [&] { return gl_lift_command(spec_text, ideal_text, matrix_text, limits); }; });

  CorpusOptions corpus;
  std::vector<int> only;
  bool single_pass = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "Verification suite")->require_subcommand(1);
  auto* run = corpus_cmd->add_subcommand("run", "Run every criterion over the corpus");
  run->add_option("--max-carrier", corpus.max_carrier, "Largest corpus carrier");
  run->add_option("--seed", corpus.seed, "Seed for sampled checks");
  run->add_option("--lift-samples", corpus.lift_samples, "Random lifts per sampled case");
  run->add_option("--only", only, "Restrict to these criterion ids")->check(CLI::Range(1, 14));
  run->add_flag("--single-pass", single_pass, "Skip the repeat run behind the determinism check");
  run->callback([&] { command = [&] { return corpus_run(corpus, only, single_pass); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? exit_code::ok : exit_code::usage;
  }
  for (const std::string& arg : args) command_words.push_back(arg);

  Json report;
  report["tool"] = "ringstar";
  report["version"] = RINGSTAR_VERSION;
  report["command"] = command_words;
  int status = exit_code::ok;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome outcome = command();
    report["ring"] = outcome.ring;
    report["result"] = std::move(outcome.result);
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    outcome.timing["elapsedMs"] = elapsed.count();
    report["timing"] = std::move(outcome.timing);
    if (fail_on_false && outcome.verdict == false) status = exit_code::false_verdict;
  } catch (const SpecError& e) {
    err << "ringstar: invalid ring spec at position " << e.position() << ": " << e.what() << "\n";
    return exit_code::bad_input;
  } catch (const PreconditionError& e) {
    err << "ringstar: " << e.what() << "\n";
    return exit_code::bad_input;
  } catch (const GuardError& e) {
    err << "ringstar: guard exceeded: " << e.what() << "\n";
    return exit_code::guard;
  } catch (const DefectError& e) {
    report["error"] = Json{{"kind", "defect"}, {"message", e.what()}};
    out << report.dump(2) << "\n";
    err << "ringstar: internal defect: " << e.what() << "\n";
    return exit_code::defect;
  } catch (const Error& e) {
    err << "ringstar: " << e.what() << "\n";
    return exit_code::bad_input;
  }

  if (format == "text") {
    out << render_text(report);
  } else {
    out << report.dump(2) << "\n";
  }
  return status;
}

}  // namespace ringstar::cli
