#include "bifix/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "bifix/decoding.hpp"
#include "bifix/error.hpp"
#include "bifix/json_io.hpp"
#include "bifix/text_format.hpp"

namespace bifix::cli {

namespace {

struct Bounds {
  int L = 40;
  int Lx = 10;
  int k_max = 8;
  int n_max = 8;
  bool assert_aperiodic = false;
  unsigned long long seed = 1;
};

Json bounds_json(const Bounds& b) {
  return Json{{"L", b.L},       {"Lx", b.Lx},
              {"k_max", b.k_max}, {"n_max", b.n_max},
              {"assert_aperiodic", b.assert_aperiodic}, {"seed", b.seed}};
}

struct Request {
  std::string command;
  Bounds bounds;
  std::string rules;
  std::string rules2;
  std::string factors_json_path;
  std::string code_text;
  int power_n = 2;
  bool strict_windows = false;
  std::string json_path;
};

FactorSet load_factors(const Request& req) {
  if (!req.rules.empty()) {
    Substitution phi = parse_substitution(req.rules);
    return factor_language(phi, req.bounds.L);
  }
  if (!req.factors_json_path.empty()) {
    std::ifstream in(req.factors_json_path);
    if (!in) throw_invalid("cannot open factors file: " + req.factors_json_path);
    Json j = Json::parse(in);
    return factor_set_from_json(j);
  }
  throw_invalid("need --rules or --factors-json");
}

PeriodicityVerdict periodicity_for(const Request& req, const FactorSet& factors) {
  if (req.bounds.assert_aperiodic) return PeriodicityVerdict::asserted();
  return periodicity(factors);
}

std::string fmt_periodicity(const PeriodicityVerdict& v) {
  switch (v.kind) {
    case PeriodicityVerdict::Kind::Periodic:
      return "Periodic(" + std::to_string(v.value) + ")";
    case PeriodicityVerdict::Kind::AperiodicUpTo:
      return "AperiodicUpTo(" + std::to_string(v.value) + ")";
    case PeriodicityVerdict::Kind::AssertedAperiodic:
      return "AssertedAperiodic";
  }
  return "?";
}

void cmd_analyze(const Request& req, std::ostringstream& out, Json& body) {
  Substitution phi = parse_substitution(req.rules);
  out << "substitution: " << format_substitution(phi) << "\n";
  body["substitution"] = to_json(phi);

  IncidenceMatrix m = incidence_matrix(phi);
  out << "incidence matrix (entry (a,b) counts a in the image of b):\n";
  Json mj = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    out << " ";
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) {
      out << " " << m.at(i, j);
      row.push_back(m.at(i, j));
    }
    out << "\n";
    mj.push_back(std::move(row));
  }
  body["incidence_matrix"] = mj;
  BigInt det = determinant(m);
  out << "determinant: " << det.str() << "\n";
  body["determinant"] = det.str();

  PrimitivityResult prim = is_primitive(phi);
  if (!prim.applicable) {
    out << "primitive: not applicable (single-letter alphabet)\n";
    body["primitive"] = nullptr;
  } else {
    out << "primitive: " << (prim.primitive ? "yes" : "no");
    if (prim.witness_exponent) out << " (witness exponent " << *prim.witness_exponent << ")";
    out << "\n";
    body["primitive"] = prim.primitive;
    if (prim.witness_exponent) body["primitivity_witness"] = *prim.witness_exponent;
  }

  PropernessResult prop = is_proper(phi);
  out << "proper: " << (prop.proper ? "yes" : "no");
  if (prop.proper) {
    out << " (" << phi.alphabet().name(*prop.first) << "," << phi.alphabet().name(*prop.last)
        << ")";
  }
  out << "\n";
  body["proper"] = prop.proper;

  BoundaryMaps bm = boundary_maps(phi);
  out << "boundary maps: preperiod " << bm.preperiod_q << ", period " << bm.period_p << "\n";
  body["boundary"] = Json{{"preperiod", bm.preperiod_q}, {"period", bm.period_p}};

  if (!prim.applicable || prim.primitive) {
    FactorSet factors = factor_language(phi, req.bounds.L);
    StabilityResult st = is_stable(phi, factors);
    out << "stable: " << (st.stable ? "yes" : "no");
    if (st.witness_k) out << " (witness k=" << *st.witness_k << ")";
    out << "\n";
    body["stable"] = st.stable;
    if (st.witness_k) body["stability_witness"] = *st.witness_k;

    PeriodicityVerdict pv = periodicity_for(req, factors);
    out << "periodicity: " << fmt_periodicity(pv) << "\n";
    body["periodicity"] = to_json(pv);

    int cmax = std::min(12, factors.max_length());
    out << "complexity:";
    Json cj = Json::array();
    for (int k = 1; k <= cmax; ++k) {
      out << " p(" << k << ")=" << complexity(factors, k);
      cj.push_back(complexity(factors, k));
    }
    out << "\n";
    body["complexity"] = cj;

    int center = std::min(8, factors.max_length() - 2);
    if (center >= 0) {
      WordClassification cls = classify_words(factors, center);
      out << "extension graphs up to center " << center << ": ";
      if (cls.dendric_up_to && *cls.dendric_up_to == center) {
        out << "dendric";
      } else if (cls.connected_up_to && *cls.connected_up_to == center) {
        out << "connected, not dendric";
      } else {
        out << "not connected";
        if (cls.first_disconnected) {
          out << " (disconnected at \"" << format_word(phi.alphabet(), *cls.first_disconnected)
              << "\")";
        }
      }
      out << " [window verdict]\n";
      body["dendric_up_to"] =
          cls.dendric_up_to ? Json(*cls.dendric_up_to) : Json(nullptr);
      body["connected_up_to"] =
          cls.connected_up_to ? Json(*cls.connected_up_to) : Json(nullptr);
    }

    int k_rec = std::min(req.bounds.k_max, factors.max_length() - 1);
    RecurrenceResult rec = is_recurrent_up_to(factors, k_rec);
    out << "recurrent up to order " << k_rec << ": " << (rec.recurrent ? "yes" : "no") << "\n";
    body["recurrent_up_to"] = Json{{"order", k_rec}, {"recurrent", rec.recurrent}};
  } else {
    out << "stable: not applicable (not primitive)\n";
  }
}

void cmd_factors(const Request& req, std::ostringstream& out, Json& body) {
  FactorSet factors = load_factors(req);
  body["factor_set"] = to_json(factors);
  body["exact"] = factors.exact();
  out << "factors up to length " << factors.max_length() << " over {";
  for (int i = 0; i < factors.alphabet().size(); ++i) {
    out << (i ? "," : "") << factors.alphabet().name(i);
  }
  out << "}\n";
  for (int k = 1; k <= factors.max_length(); ++k) {
    out << "p(" << k << ")=" << factors.count(k);
    out << (k == factors.max_length() ? "\n" : " ");
  }
}

void cmd_check_code(const Request& req, std::ostringstream& out, Json& body) {
  if (req.code_text.empty()) throw_invalid("check-code needs --code");
  std::optional<FactorSet> factors;
  if (!req.rules.empty() || !req.factors_json_path.empty()) factors = load_factors(req);

  Alphabet alphabet = factors ? factors->alphabet() : infer_alphabet(req.code_text);
  FiniteCode code = parse_code(alphabet, req.code_text);
  body["code_words"] = to_json(alphabet, code);
  CodeFlags flags = classify_code(code);
  out << "code: " << format_code(code) << "\n";
  out << "is code: " << (flags.is_code ? "yes" : "no") << "\n";
  out << "prefix: " << (flags.is_prefix ? "yes" : "no") << ", suffix: "
      << (flags.is_suffix ? "yes" : "no") << ", bifix: " << (flags.is_bifix ? "yes" : "no")
      << "\n";
  body["is_code"] = flags.is_code;
  body["is_prefix"] = flags.is_prefix;
  body["is_suffix"] = flags.is_suffix;
  body["is_bifix"] = flags.is_bifix;
  if (flags.counterexample) {
    out << "double factorization of \""
        << format_word(alphabet, flags.counterexample->word) << "\": ";
    auto fmt_parse = [&](const std::vector<Word>& parts) {
      std::string s;
      for (const Word& p : parts) s += "[" + format_word(alphabet, p) + "]";
      return s;
    };
    out << fmt_parse(flags.counterexample->left) << " vs "
        << fmt_parse(flags.counterexample->right) << "\n";
    body["double_factorization"] =
        Json{{"word", format_word(alphabet, flags.counterexample->word)}};
  }

  if (factors) {
    auto fmt_verdict = [&](const CompletenessVerdict& v) {
      if (v.holds) return "HoldsUpTo(" + std::to_string(v.bound) + ")";
      return "Fails(counterexample \"" + format_word(alphabet, *v.counterexample) + "\")";
    };
    CompletenessVerdict right = is_right_F_complete(code, *factors);
    CompletenessVerdict left = is_left_F_complete(code, *factors);
    out << "right F-complete: " << fmt_verdict(right) << "\n";
    out << "left F-complete: " << fmt_verdict(left) << "\n";
    auto verdict_json = [&](const CompletenessVerdict& v) {
      Json j{{"holds", v.holds}, {"bound", v.bound}};
      if (v.counterexample) j["counterexample"] = format_word(alphabet, *v.counterexample);
      return j;
    };
    body["right_F_complete"] = verdict_json(right);
    body["left_F_complete"] = verdict_json(left);

    bool in_F = true;
    for (const Word& w : code.words()) {
      if (w.size() > factors->max_length() || !factors->contains(w)) in_F = false;
    }
    if (flags.is_prefix && in_F) {
      MaximalityResult max = is_F_maximal_prefix(code, *factors);
      if (max.maximal) {
        out << "F-maximal prefix code up to " << max.bound << ": yes\n";
      } else {
        out << "F-maximal prefix code: no (extension \""
            << format_word(alphabet, *max.extension) << "\")\n";
      }
      body["F_maximal_prefix"] = max.maximal;
      if (max.extension) body["extension"] = format_word(alphabet, *max.extension);
    }
    if (flags.is_bifix && in_F) {
      BifixCompletenessResult bc = is_F_complete_bifix(code, *factors);
      out << "F-complete bifix: " << (bc.complete ? "yes" : "no") << "\n";
      body["F_complete_bifix"] = bc.complete;
      if (bc.consistency_alarm) {
        out << "CONSISTENCY ALARM: one-sided completeness verdicts disagree on a recurrent "
               "window\n";
        body["consistency_alarm"] = true;
      }
    }
  }
}

void cmd_monoid(const Request& req, std::ostringstream& out, Json& body) {
  if (req.code_text.empty()) throw_invalid("monoid needs --code");
  bool power_literal = req.code_text.rfind("A^", 0) == 0;
  Alphabet alphabet = !req.rules.empty() ? parse_substitution(req.rules).alphabet()
                     : power_literal     ? Alphabet::lowercase(2)
                                         : infer_alphabet(req.code_text);
  GroupCodeSpec spec = parse_group_code_spec(alphabet, req.code_text);
  Dfa dfa = spec.power ? power_code_dfa(alphabet, *spec.power)
                       : dfa_of_star(*spec.code);
  out << "minimal DFA of the star: " << dfa.num_states() << " states\n";
  body["dfa"] = to_json(dfa);

  FiniteMonoidPresentation monoid = transition_monoid(dfa);
  out << "transition monoid order: " << monoid.size() << "\n";
  GroupCodeResult gc = is_group_code_dfa(dfa);
  out << "group code: " << (gc.group ? "yes" : "no");
  if (gc.order) out << " (group order " << *gc.order << ")";
  out << "\n";
  body["is_group_code"] = gc.group;

  GreenSummary green = green_summary(monoid);
  body["green"] = to_json(green, monoid);
  out << "Green classes: " << green.num_r << " R, " << green.num_l << " L, " << green.num_j
      << " J, " << green.num_h << " H; " << green.idempotents.size() << " idempotents\n";
  out << "minimal ideal size: " << green.minimal_ideal.size() << ", maximal subgroup order: "
      << green.maximal_subgroup.size() << "\n";
  out << egg_box_text(green, monoid);
  body["egg_box"] = egg_box_text(green, monoid);
}

void cmd_charge(const Request& req, std::ostringstream& out, Json& body) {
  Substitution phi = parse_substitution(req.rules);
  FactorSet factors = factor_language(phi, req.bounds.L);
  PeriodicityVerdict pv = periodicity_for(req, factors);
  GroupCodeSpec spec = parse_group_code_spec(phi.alphabet(), req.code_text);
  GroupCode code = GroupCode::resolve(phi.alphabet(), spec);
  ChargeContext context{&factors, pv, std::min(8, factors.max_length() - 2)};
  ChargeVerdict verdict = charged_verdict(phi, code, context);

  out << "substitution: " << format_substitution(phi) << "\n";
  out << "code: " << code.label() << " (group of order " << code.order() << ")\n";
  out << "periodicity: " << fmt_periodicity(pv) << "\n";
  out << "verdict: " << to_string(verdict.status);
  if (verdict.certificate) out << " [" << to_string(*verdict.certificate) << "]";
  out << "\n";
  for (const auto& a : verdict.assumptions) out << "  assumption: " << a << "\n";
  for (const auto& o : verdict.obstructions) out << "  obstruction: " << o << "\n";

  body = to_json(verdict, phi.alphabet());
  body["code"] = code.label();
  body["periodicity"] = to_json(pv);
}

void cmd_fingerprint(const Request& req, std::ostringstream& out, Json& body) {
  Substitution phi = parse_substitution(req.rules);
  FactorSet factors = factor_language(phi, req.bounds.L);
  PeriodicityVerdict pv = periodicity_for(req, factors);
  ChargeContext context{&factors, pv, std::min(8, factors.max_length() - 2)};
  Fingerprint fp = procyclic_fingerprint(phi, req.bounds.n_max, context);

  out << "substitution: " << format_substitution(phi) << "\n";
  out << "procyclic fingerprint (d(n): image of Z/nZ is d*(Z/nZ)):\n";
  for (const auto& e : fp.entries) {
    out << "  n=" << e.n << ": d=" << e.d << (e.exact ? "" : " (lower bound only)") << " ["
        << e.branch << "]\n";
  }
  body["fingerprint"] = to_json(fp);
  body["periodicity"] = to_json(pv);
}

void cmd_compare(const Request& req, std::ostringstream& out, Json& body) {
  if (req.rules.empty() || req.rules2.empty()) throw_invalid("compare needs --rules and --rules2");
  auto fingerprint_of = [&](const std::string& rules) {
    Substitution phi = parse_substitution(rules);
    FactorSet factors = factor_language(phi, req.bounds.L);
    PeriodicityVerdict pv = periodicity_for(req, factors);
    ChargeContext context{&factors, pv, std::min(8, factors.max_length() - 2)};
    return procyclic_fingerprint(phi, req.bounds.n_max, context);
  };
  Fingerprint f1 = fingerprint_of(req.rules);
  Fingerprint f2 = fingerprint_of(req.rules2);
  FingerprintComparison cmp = compare_fingerprints(f1, f2);

  out << "left:  " << req.rules << "\n";
  out << "right: " << req.rules2 << "\n";
  for (const auto& r : cmp.rows) {
    out << "  n=" << r.n << ": d_left=" << r.left.d << (r.left.exact ? "" : "?")
        << " d_right=" << r.right.d << (r.right.exact ? "" : "?")
        << (r.compared ? "" : " [excluded]") << "\n";
  }
  out << "verdict: "
      << (cmp.verdict == FingerprintComparison::Verdict::NotConjugate ? "NotConjugate"
                                                                      : "Inconclusive");
  if (cmp.witness_n) out << " (witness n=" << *cmp.witness_n << ")";
  out << "\n";
  for (const auto& nn : cmp.notes) out << "  note: " << nn << "\n";
  body = to_json(cmp);
}

void cmd_decode(const Request& req, std::ostringstream& out, Json& body, bool power) {
  FactorSet factors = load_factors(req);
  DecodedLanguage decoded =
      power ? higher_power(factors, req.power_n, req.bounds.Lx)
            : decode(factors, parse_code(factors.alphabet(), req.code_text), req.bounds.Lx);

  out << "decoded alphabet (" << decoded.x_alphabet.size() << " letters):";
  for (int i = 0; i < decoded.x_alphabet.size(); ++i) {
    out << " " << decoded.x_alphabet.name(i);
  }
  out << "\n";
  std::size_t total = 0;
  for (int k = 1; k <= decoded.factors.max_length(); ++k) total += decoded.factors.count(k);
  out << "members up to X-length " << decoded.factors.max_length() << ": " << total
      << " (plus the empty word)\n";
  for (int k = 1; k <= decoded.factors.max_length(); ++k) {
    out << "  p(" << k << ")=" << decoded.factors.count(k);
  }
  out << "\n";
  if (total <= 32) {
    for (int k = 1; k <= decoded.factors.max_length(); ++k) {
      for (std::size_t i = 0; i < decoded.factors.count(k); ++i) {
        out << "  " << format_word(decoded.x_alphabet, decoded.factors.word(k, i)) << "\n";
      }
    }
  }
  int k_rec = std::min(req.bounds.k_max, decoded.factors.max_length() - 1);
  if (k_rec >= 1) {
    DecodingRecurrenceReport rec = check_decoding_recurrence(decoded, k_rec);
    out << "decoding recurrent up to order " << k_rec << ": "
        << (rec.recurrent.recurrent ? "yes" : "no");
    if (rec.recurrent.failing_order) out << " (fails at order " << *rec.recurrent.failing_order << ")";
    out << "\n";
    out << "decoding uniformly recurrent up to order: " << rec.uniformly_recurrent_up_to << "\n";
    body["recurrent"] = rec.recurrent.recurrent;
    body["uniformly_recurrent_up_to"] = rec.uniformly_recurrent_up_to;
  }
  body["decoded"] = to_json(decoded);
}

void cmd_verify(const Request& req, std::ostringstream& out, Json& body) {
  Substitution phi = parse_substitution(req.rules);
  TheoremReportParams params;
  params.factor_window = req.bounds.L;
  params.x_length_bound = req.bounds.Lx;
  params.k_max = req.bounds.k_max;
  params.assert_aperiodic = req.bounds.assert_aperiodic;
  params.strict_windows = req.strict_windows;
  GroupCodeSpec spec = parse_group_code_spec(phi.alphabet(), req.code_text);
  TheoremConsistencyReport report = theorem_consistency_report(phi, spec, params);

  out << "substitution: " << format_substitution(phi) << "\n";
  out << "code: " << report.code_label << "\n";
  out << "periodicity: " << fmt_periodicity(report.periodicity) << "\n";
  out << "charge verdict: " << to_string(report.verdict.status);
  if (report.verdict.certificate) out << " [" << to_string(*report.verdict.certificate) << "]";
  out << "\n";
  out << "decoding recurrent up to " << report.recurrence.k_max << ": "
      << (report.recurrence.recurrent.recurrent ? "yes" : "no") << "\n";
  out << "decoding uniformly recurrent up to order: "
      << report.recurrence.uniformly_recurrent_up_to << "\n";
  out << "outcome: " << to_string(report.outcome) << "\n";
  for (const auto& nn : report.notes) out << "  note: " << nn << "\n";
  body = to_json(report);
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult result;
  Request req;

  CLI::App app{"bifix: substitution subshifts, bifix codes, and charged decodings"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--L", req.bounds.L, "factor window length");
    sub->add_option("--Lx", req.bounds.Lx, "decoded X-length window");
    sub->add_option("--k-max", req.bounds.k_max, "recurrence order bound");
    sub->add_option("--n-max", req.bounds.n_max, "fingerprint modulus bound");
    sub->add_flag("--assert-aperiodic", req.bounds.assert_aperiodic,
                  "assert nonperiodicity instead of probing for it");
    sub->add_option("--seed", req.bounds.seed, "seed echoed into reports");
    sub->add_option("--json", req.json_path, "write the JSON report to this path");
  };

  std::vector<std::string> simple = {
      "analyze-substitution", "factors", "check-code",        "monoid",
      "charge",               "compare", "fingerprint",       "verify-theorems",
  };
  for (const auto& name : simple) {
    CLI::App* sub = app.add_subcommand(name, "");
    add_common(sub);
    sub->add_option("--rules", req.rules, "substitution rules, e.g. \"a->ab; b->a\"");
    sub->add_option("--rules2", req.rules2, "second substitution (compare)");
    sub->add_option("--factors-json", req.factors_json_path, "factor set JSON file");
    sub->add_option("--code", req.code_text, "code words or A^n literal");
    sub->add_flag("--strict-windows", req.strict_windows,
                  "arm the contradiction alarm (windows vouched for)");
    std::string name_copy = name;
    sub->callback([&req, name_copy]() { req.command = name_copy; });
  }
  for (auto& [name, is_power] : std::vector<std::pair<std::string, bool>>{
           {"decode", false}, {"higher-power", true}}) {
    CLI::App* sub = app.add_subcommand(name, "");
    add_common(sub);
    sub->add_option("--rules", req.rules, "substitution rules");
    sub->add_option("--factors-json", req.factors_json_path, "factor set JSON file");
    sub->add_option("--code", req.code_text, "code words");
    sub->add_option("--n", req.power_n, "higher-power exponent");
    std::string name_copy = name;
    sub->callback([&req, name_copy]() { req.command = name_copy; });
  }

  std::ostringstream out;
  Json body = Json::object();
  try {
    std::vector<const char*> argv;
    argv.push_back("bifix");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (req.command == "analyze-substitution") {
      cmd_analyze(req, out, body);
    } else if (req.command == "factors") {
      cmd_factors(req, out, body);
    } else if (req.command == "check-code") {
      cmd_check_code(req, out, body);
    } else if (req.command == "monoid") {
      cmd_monoid(req, out, body);
    } else if (req.command == "charge") {
      cmd_charge(req, out, body);
    } else if (req.command == "fingerprint") {
      cmd_fingerprint(req, out, body);
    } else if (req.command == "compare") {
      cmd_compare(req, out, body);
    } else if (req.command == "decode") {
      cmd_decode(req, out, body, false);
    } else if (req.command == "higher-power") {
      cmd_decode(req, out, body, true);
    } else if (req.command == "verify-theorems") {
      cmd_verify(req, out, body);
    } else {
      throw_invalid("unknown command");
    }
  } catch (const CLI::ParseError& e) {
    result.exit_code = e.get_exit_code() == 0 ? 0 : 2;
    std::ostringstream msg;
    result.exit_code == 0 ? void(msg << app.help()) : void(msg << e.what() << "\n");
    result.output = msg.str();
    return result;
  } catch (const Error& e) {
    result.exit_code = e.kind() == ErrorKind::resource_limit ? 3 : 2;
    result.output = std::string("error: ") + e.what() + "\n";
    return result;
  }

  Json envelope;
  envelope["command"] = req.command;
  envelope["bounds"] = bounds_json(req.bounds);
  envelope["report"] = body;
  result.json = envelope;
  result.json_path = req.json_path;
  result.output = out.str();
  result.exit_code = 0;
  return result;
}

}  // namespace bifix::cli
