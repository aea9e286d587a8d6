#include "rank2/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "rank2/aplus.hpp"
#include "rank2/covering.hpp"
#include "rank2/decide.hpp"
#include "rank2/oracle.hpp"
#include "rank2/roots.hpp"
#include "rank2/scheme.hpp"

namespace rank2::cli {

namespace {

using nlohmann::ordered_json;

// Errors caused by user input; they exit with code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Seq parse_seq(const std::string& text) {
  Seq out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw input_error("not an integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw input_error("empty integer list");
  return out;
}

ordered_json scheme_doc(const CartanScheme2& s) {
  ordered_json doc;
  doc["kind"] = s.kind == DiagramKind::Cycle ? "cycle" : "chain";
  doc[s.kind == DiagramKind::Cycle ? "char_seq" : "spine"] = s.seq;
  return doc;
}

CartanScheme2 scheme_from_doc(const ordered_json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw input_error("scheme document needs a \"kind\" of \"cycle\" or \"chain\"");
  const std::string kind = doc["kind"].get<std::string>();
  CartanScheme2 s;
  try {
    if (kind == "cycle") {
      s.kind = DiagramKind::Cycle;
      if (!doc.contains("char_seq") || !doc["char_seq"].is_array())
        throw input_error("cycle document needs an integer array \"char_seq\"");
      s.seq = doc["char_seq"].get<Seq>();
    } else if (kind == "chain") {
      s.kind = DiagramKind::Chain;
      if (!doc.contains("spine") || !doc["spine"].is_array())
        throw input_error("chain document needs an integer array \"spine\"");
      s.seq = doc["spine"].get<Seq>();
    } else {
      throw input_error("unknown scheme kind '" + kind + "'");
    }
  } catch (const ordered_json::exception&) {
    throw input_error("scheme sequences must be arrays of integers");
  }
  return s;
}

ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file '" + path + "'");
  try {
    return ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw input_error("cannot parse '" + path + "': " + e.what());
  }
}

// Raw scheme from exactly one of the input flags; validated against the
// hard axioms ((M1), structure) but mixed-zero obstructions pass through.
CartanScheme2 resolve_scheme(const std::string& cycle_list, const std::string& chain_list,
                             const std::string& input_path) {
  const int sources = (!cycle_list.empty()) + (!chain_list.empty()) + (!input_path.empty());
  if (sources != 1)
    throw input_error("need exactly one scheme input (--cycle, --chain or --input)");
  CartanScheme2 s;
  if (!cycle_list.empty())
    s = CartanScheme2{DiagramKind::Cycle, parse_seq(cycle_list)};
  else if (!chain_list.empty())
    s = CartanScheme2{DiagramKind::Chain, parse_seq(chain_list)};
  else
    s = scheme_from_doc(read_json_file(input_path));
  const ValidationReport rep = validate(s);
  if (!rep.ok()) throw input_error("invalid scheme: " + rep.violations.front());
  return s;
}

ordered_json roots_doc(const std::vector<Root>& roots) {
  ordered_json arr = ordered_json::array();
  for (const Root& r : roots)
    if (r[0] >= 0 && r[1] >= 0) arr.push_back(ordered_json::array({r[0], r[1]}));
  return arr;
}

std::string roots_line(const std::vector<Root>& roots) {
  std::ostringstream os;
  bool first = true;
  for (const Root& r : roots) {
    if (r[0] < 0 || r[1] < 0) continue;
    if (!first) os << ' ';
    os << '(' << r[0] << ',' << r[1] << ')';
    first = false;
  }
  return os.str();
}

ordered_json step_doc(const DecisionStep& step) {
  ordered_json doc;
  doc["step"] = step_name(step.kind);
  if (step.position) doc["position"] = *step.position + 1;  // 1-based outside
  if (step.entry) doc["entry"] = *step.entry;
  doc["before"] = scheme_doc(step.before);
  doc["after"] = scheme_doc(step.after);
  return doc;
}

DecisionStep step_from_doc(const ordered_json& doc) {
  DecisionStep step;
  const std::string name = doc.at("step").get<std::string>();
  bool known = false;
  for (StepKind kind :
       {StepKind::ChainToCycle, StepKind::NonCSDouble, StepKind::ZeroCase, StepKind::AllGeTwo,
        StepKind::TripleOnes, StepKind::BaseFour, StepKind::Contract, StepKind::SmallCaseOracle}) {
    if (name == step_name(kind)) {
      step.kind = kind;
      known = true;
      break;
    }
  }
  if (!known) throw input_error("unknown certificate step '" + name + "'");
  if (doc.contains("position")) {
    const std::int64_t pos = doc["position"].get<std::int64_t>();
    if (pos < 1) throw input_error("certificate positions are 1-based");
    step.position = static_cast<std::size_t>(pos - 1);
  }
  if (doc.contains("entry")) step.entry = doc["entry"].get<std::int64_t>();
  step.before = scheme_from_doc(doc.at("before"));
  step.after = scheme_from_doc(doc.at("after"));
  return step;
}

ordered_json decision_doc(const CartanScheme2& input, const Decision& dec) {
  ordered_json doc;
  doc["command"] = "decide";
  doc["input"] = scheme_doc(input);
  doc["verdict"] = dec.finite ? "finite" : "not-finite";
  doc["finite"] = dec.finite;
  doc["irreducible"] = dec.irreducible;
  ordered_json steps = ordered_json::array();
  for (const DecisionStep& step : dec.certificate) steps.push_back(step_doc(step));
  doc["certificate"] = steps;
  if (dec.stats) {
    doc["stats"] = ordered_json{
        {"h", dec.stats->h}, {"q", dec.stats->q}, {"positive_roots", dec.stats->positive_roots}};
  }
  return doc;
}

std::string step_line(const DecisionStep& step, bool finite) {
  std::ostringstream os;
  os << scheme_to_string(step.before) << " --" << step_name(step.kind);
  if (step.position) os << " at " << *step.position + 1;
  if (step.entry) os << " c1=" << *step.entry;
  os << "--> ";
  if (step.after == step.before)
    os << (finite ? "finite" : "not finite");
  else
    os << scheme_to_string(step.after);
  return os.str();
}

void print_decision(std::ostream& out, const CartanScheme2& input, const Decision& dec,
                    bool trace) {
  out << "scheme: " << scheme_to_string(input) << '\n';
  out << "verdict: " << (dec.finite ? "finite" : "not finite") << '\n';
  if (dec.stats) {
    out << "h: " << dec.stats->h << '\n';
    out << "q: " << dec.stats->q << '\n';
    out << "positive roots: " << dec.stats->positive_roots << '\n';
  }
  if (trace) {
    out << "certificate:\n";
    for (const DecisionStep& step : dec.certificate)
      out << "  " << step_line(step, dec.finite) << '\n';
  }
}

struct SchemeFlags {
  std::string cycle;
  std::string chain;
  std::string input;
};

void add_scheme_flags(CLI::App* cmd, SchemeFlags& flags) {
  cmd->add_option("--cycle", flags.cycle, "cycle scheme by characteristic sequence (comma list)");
  cmd->add_option("--chain", flags.chain, "chain scheme by spine (comma list)");
  cmd->add_option("--input", flags.input, "scheme document file (JSON)");
}

int run_decide(std::ostream& out, const SchemeFlags& flags, const std::string& batch,
               const std::string& verify_cert, bool json, bool trace, bool strict) {
  if (!verify_cert.empty()) {
    const ordered_json doc = read_json_file(verify_cert);
    CartanScheme2 input;
    Decision dec;
    try {
      input = scheme_from_doc(doc.at("input"));
      dec.finite = doc.at("finite").get<bool>();
      dec.irreducible = doc.at("irreducible").get<bool>();
      for (const ordered_json& s : doc.at("certificate")) dec.certificate.push_back(step_from_doc(s));
      if (doc.contains("stats"))
        dec.stats = Stats{doc["stats"].at("q").get<std::int64_t>(),
                          doc["stats"].at("h").get<std::int64_t>(),
                          doc["stats"].at("positive_roots").get<std::int64_t>()};
    } catch (const ordered_json::exception& e) {
      throw input_error(std::string("malformed decision document: ") + e.what());
    }
    try {
      replay_certificate(input, dec);
    } catch (const std::exception& e) {
      throw input_error(std::string("certificate replay failed: ") + e.what());
    }
    out << "certificate: valid (verdict "
        << (dec.finite ? "finite" : "not finite") << ")\n";
    return 0;
  }

  if (!batch.empty()) {
    std::ifstream in(batch);
    if (!in) throw input_error("cannot open file '" + batch + "'");
    ordered_json results = ordered_json::array();
    bool any_not_finite = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string kind, list;
      ls >> kind >> list;
      CartanScheme2 s;
      if (kind == "cycle")
        s = CartanScheme2{DiagramKind::Cycle, parse_seq(list)};
      else if (kind == "chain")
        s = CartanScheme2{DiagramKind::Chain, parse_seq(list)};
      else
        throw input_error("batch line " + std::to_string(line_no) +
                          ": expected 'cycle LIST' or 'chain LIST'");
      const ValidationReport rep = validate(s);
      if (!rep.ok())
        throw input_error("batch line " + std::to_string(line_no) + ": invalid scheme: " +
                          rep.violations.front());
      const Decision dec = decide(s);
      any_not_finite = any_not_finite || !dec.finite;
      if (json) {
        ordered_json entry = decision_doc(s, dec);
        entry["line"] = line_no;
        results.push_back(entry);
      } else {
        out << "line " << line_no << ": " << scheme_to_string(s) << ": "
            << (dec.finite ? "finite" : "not finite");
        if (dec.stats)
          out << " (h=" << dec.stats->h << ", q=" << dec.stats->q
              << ", positive roots=" << dec.stats->positive_roots << ")";
        out << '\n';
      }
    }
    if (json) {
      ordered_json doc;
      doc["command"] = "decide-batch";
      doc["results"] = results;
      out << doc.dump() << '\n';
    }
    return strict && any_not_finite ? 1 : 0;
  }

  const CartanScheme2 scheme = resolve_scheme(flags.cycle, flags.chain, flags.input);
  const Decision dec = decide(scheme);
  if (json)
    out << decision_doc(scheme, dec).dump() << '\n';
  else
    print_decision(out, scheme, dec, trace);
  return strict && !dec.finite ? 1 : 0;
}

int run_enumerate(std::ostream& out, std::size_t length, bool json) {
  const std::vector<Seq> classes = enumerate_aplus(length);
  if (json) {
    ordered_json doc;
    doc["command"] = "enumerate";
    doc["length"] = length;
    doc["count"] = classes.size();
    doc["classes"] = classes;
    out << doc.dump() << '\n';
  } else {
    for (const Seq& s : classes) out << seq_to_string(s) << '\n';
  }
  return 0;
}

int run_roots(std::ostream& out, const SchemeFlags& flags, const std::string& aplus_list,
              bool json) {
  RootSystem2 rs;
  if (!aplus_list.empty()) {
    if (!flags.cycle.empty() || !flags.chain.empty() || !flags.input.empty())
      throw input_error("--aplus excludes the scheme input flags");
    const Seq d = parse_seq(aplus_list);
    if (!is_in_Aplus(d)) throw input_error("sequence " + seq_to_string(d) + " is not in A+");
    rs = build_root_system(d);
  } else {
    const CartanScheme2 scheme = resolve_scheme(flags.cycle, flags.chain, flags.input);
    try {
      rs = realize_root_system(scheme);
    } catch (const std::domain_error& e) {
      throw input_error(e.what());
    }
  }
  const AxiomReport axioms = verify_axioms(rs);
  if (!axioms.ok())
    throw std::logic_error("constructed root system violates " + axioms.violations.front());
  const std::size_t count = positive_root_count(rs);
  if (json) {
    ordered_json doc;
    doc["command"] = "roots";
    doc["scheme"] = scheme_doc(rs.scheme);
    doc["objects"] = rs.roots.size();
    doc["positive_root_count"] = count;
    ordered_json per_object = ordered_json::array();
    for (const std::vector<Root>& roots : rs.roots) per_object.push_back(roots_doc(roots));
    doc["positive_roots"] = per_object;
    out << doc.dump() << '\n';
  } else {
    out << "scheme: " << scheme_to_string(rs.scheme) << '\n';
    out << "objects: " << rs.roots.size() << '\n';
    out << "positive roots per object: " << count << '\n';
    for (std::size_t a = 0; a < rs.roots.size(); ++a)
      out << "object " << a + 1 << ": " << roots_line(rs.roots[a]) << '\n';
  }
  return 0;
}

ordered_json covering_doc(const char* mode, const CoveringRelation& rel) {
  ordered_json doc;
  doc["command"] = "cover";
  doc["mode"] = mode;
  doc["base"] = scheme_doc(rel.base);
  doc["cover"] = scheme_doc(rel.cover);
  doc["fold"] = rel.fold;
  ordered_json map = ordered_json::array();
  for (std::size_t b : rel.object_map) map.push_back(b + 1);
  doc["object_map"] = map;
  return doc;
}

void print_covering(std::ostream& out, const CoveringRelation& rel) {
  out << "base: " << scheme_to_string(rel.base) << '\n';
  out << "cover: " << scheme_to_string(rel.cover) << '\n';
  out << "fold: " << rel.fold << '\n';
  out << "object map:";
  for (std::size_t b : rel.object_map) out << ' ' << b + 1;
  out << '\n';
}

int run_cover(std::ostream& out, const SchemeFlags& flags, std::size_t k, bool chain_double,
              bool universal, bool quotients, bool json) {
  const CartanScheme2 scheme = resolve_scheme(flags.cycle, flags.chain, flags.input);
  const int modes = (k > 0) + chain_double + universal + quotients;
  if (modes != 1)
    throw input_error("need exactly one of --k, --chain-double, --universal, --detect-quotients");
  try {
    if (quotients) {
      const QuotientReport rep = detect_quotients(scheme);
      if (json) {
        ordered_json doc;
        doc["command"] = "cover";
        doc["mode"] = "detect-quotients";
        doc["scheme"] = scheme_doc(scheme);
        doc["chain_spines"] = rep.chain_spines;
        if (rep.half_quotient)
          doc["half_quotient"] = *rep.half_quotient;
        else
          doc["half_quotient"] = nullptr;
        out << doc.dump() << '\n';
      } else {
        if (rep.chain_spines.empty()) {
          out << "chain quotients: none\n";
        } else {
          out << "chain quotients:";
          for (const Seq& spine : rep.chain_spines) out << ' ' << seq_to_string(spine);
          out << '\n';
        }
        out << "half quotient: "
            << (rep.half_quotient ? seq_to_string(*rep.half_quotient) : "none") << '\n';
      }
      return 0;
    }
    CoveringRelation rel;
    const char* mode = "";
    if (k > 0) {
      rel = k_fold_cover(scheme, k);
      mode = "k-fold";
    } else if (chain_double) {
      rel = rank2::chain_double_cover(scheme);
      mode = "chain-double";
    } else {
      rel = rank2::universal_cover(scheme);
      mode = "universal";
    }
    if (json)
      out << covering_doc(mode, rel).dump() << '\n';
    else
      print_covering(out, rel);
  } catch (const std::invalid_argument& e) {
    throw input_error(e.what());
  } catch (const std::domain_error& e) {
    throw input_error(e.what());
  }
  return 0;
}

int run_validate(std::ostream& out, const SchemeFlags& flags, std::size_t cap, bool json) {
  const int sources = (!flags.cycle.empty()) + (!flags.chain.empty()) + (!flags.input.empty());
  if (sources != 1)
    throw input_error("need exactly one scheme input (--cycle, --chain or --input)");
  CartanScheme2 s;
  if (!flags.cycle.empty())
    s = CartanScheme2{DiagramKind::Cycle, parse_seq(flags.cycle)};
  else if (!flags.chain.empty())
    s = CartanScheme2{DiagramKind::Chain, parse_seq(flags.chain)};
  else
    s = scheme_from_doc(read_json_file(flags.input));
  const ValidationReport rep = validate(s);

  std::optional<oracle::BFSReport> bfs;
  if (cap > 0 && rep.ok()) bfs = oracle::groupoid_bfs(s, cap);

  if (json) {
    ordered_json doc;
    doc["command"] = "validate";
    doc["scheme"] = scheme_doc(s);
    doc["valid"] = rep.ok();
    doc["violations"] = rep.violations;
    doc["mixed_zero_obstruction"] = rep.mixed_zero;
    if (bfs) {
      doc["groupoid"] = ordered_json{{"cap", cap},
                                     {"states", bfs->states},
                                     {"end_order", bfs->end_order},
                                     {"c3_ok", bfs->c3_ok},
                                     {"end_all_even", bfs->end_all_even},
                                     {"budget_exceeded", bfs->budget_exceeded}};
    }
    out << doc.dump() << '\n';
  } else {
    if (rep.ok())
      out << "valid\n";
    else
      for (const std::string& v : rep.violations) out << "violation: " << v << '\n';
    if (rep.mixed_zero)
      out << "obstruction: zero and nonzero off-diagonal entries mixed; "
             "no root system exists\n";
    if (bfs) {
      if (bfs->budget_exceeded)
        out << "groupoid: budget exceeded at cap " << cap << '\n';
      else
        out << "groupoid: states=" << bfs->states << " end_order=" << bfs->end_order
            << " c3=" << (bfs->c3_ok ? "ok" : "violated")
            << " end_parity=" << (bfs->end_all_even ? "all even" : "odd present") << '\n';
    }
  }
  return rep.ok() ? 0 : 2;
}

int run_extremal(std::ostream& out, std::size_t n, bool json) {
  if (n < 1) throw input_error("--n must be >= 1");
  const auto [cycle, chain] = extremal_scheme(n);
  if (json) {
    ordered_json doc;
    doc["command"] = "extremal";
    doc["n"] = n;
    doc["cycle"] = scheme_doc(cycle);
    doc["chain"] = scheme_doc(chain);
    out << doc.dump() << '\n';
  } else {
    out << "cycle: " << scheme_to_string(cycle) << '\n';
    out << "chain: " << scheme_to_string(chain) << '\n';
  }
  return 0;
}

int run_stats(std::ostream& out, const SchemeFlags& flags, bool json) {
  const CartanScheme2 scheme = resolve_scheme(flags.cycle, flags.chain, flags.input);
  const Decision dec = decide(scheme);
  if (json) {
    ordered_json doc;
    doc["command"] = "stats";
    doc["scheme"] = scheme_doc(scheme);
    doc["verdict"] = dec.finite ? "finite" : "not-finite";
    if (dec.stats)
      doc["stats"] = ordered_json{{"h", dec.stats->h},
                                  {"q", dec.stats->q},
                                  {"positive_roots", dec.stats->positive_roots}};
    out << doc.dump() << '\n';
  } else {
    out << "scheme: " << scheme_to_string(scheme) << '\n';
    out << "verdict: " << (dec.finite ? "finite" : "not finite") << '\n';
    if (dec.stats) {
      out << "h: " << dec.stats->h << '\n';
      out << "q: " << dec.stats->q << '\n';
      out << "positive roots: " << dec.stats->positive_roots << '\n';
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finiteness decisions, certificates and root systems for rank-two Cartan schemes"};
  app.name("rank2");
  app.require_subcommand(1);

  SchemeFlags decide_flags;
  std::string decide_batch, decide_verify;
  bool decide_json = false, decide_trace = false, decide_strict = false;
  CLI::App* cmd_decide = app.add_subcommand("decide", "decide finiteness, emit a certificate");
  add_scheme_flags(cmd_decide, decide_flags);
  cmd_decide->add_option("--batch", decide_batch, "file of schemes, one 'cycle LIST'/'chain LIST' per line");
  cmd_decide->add_option("--verify-cert", decide_verify, "replay a decision document (JSON)");
  cmd_decide->add_flag("--json", decide_json, "machine-readable output");
  cmd_decide->add_flag("--trace", decide_trace, "print the reduction certificate");
  cmd_decide->add_flag("--strict", decide_strict, "exit 1 when the verdict is not finite");

  std::size_t enum_length = 0;
  bool enum_json = false;
  CLI::App* cmd_enum = app.add_subcommand("enumerate", "all A+ classes of a given length");
  cmd_enum->add_option("--length", enum_length, "sequence length (>= 3)")->required();
  cmd_enum->add_flag("--json", enum_json, "machine-readable output");

  SchemeFlags roots_flags;
  std::string roots_aplus;
  bool roots_json = false;
  CLI::App* cmd_roots = app.add_subcommand("roots", "construct an explicit root system");
  add_scheme_flags(cmd_roots, roots_flags);
  cmd_roots->add_option("--aplus", roots_aplus, "A+ sequence (comma list)");
  cmd_roots->add_flag("--json", roots_json, "machine-readable output");

  SchemeFlags cover_flags;
  std::size_t cover_k = 0;
  bool cover_chain_double = false, cover_universal = false, cover_quotients = false,
       cover_json = false;
  CLI::App* cmd_cover = app.add_subcommand("cover", "covering constructions and quotient detection");
  add_scheme_flags(cmd_cover, cover_flags);
  cmd_cover->add_option("--k", cover_k, "k-fold cover of a cycle");
  cmd_cover->add_flag("--chain-double", cover_chain_double, "double cover of a chain");
  cmd_cover->add_flag("--universal", cover_universal, "universal (simply connected) cover");
  cmd_cover->add_flag("--detect-quotients", cover_quotients, "chain and half quotients");
  cmd_cover->add_flag("--json", cover_json, "machine-readable output");

  SchemeFlags validate_flags;
  std::size_t validate_cap = 0;
  bool validate_json = false;
  CLI::App* cmd_validate = app.add_subcommand("validate", "axiom checks for a scheme document");
  add_scheme_flags(cmd_validate, validate_flags);
  cmd_validate->add_option("--cap", validate_cap, "also run the groupoid search with this state budget");
  cmd_validate->add_flag("--json", validate_json, "machine-readable output");

  std::size_t extremal_n = 0;
  bool extremal_json = false;
  CLI::App* cmd_extremal = app.add_subcommand("extremal", "schemes meeting the sharp entry bounds");
  cmd_extremal->add_option("--n", extremal_n, "index n >= 1 (entry 2n+1)")->required();
  cmd_extremal->add_flag("--json", extremal_json, "machine-readable output");

  SchemeFlags stats_flags;
  bool stats_json = false;
  CLI::App* cmd_stats = app.add_subcommand("stats", "h, q and |R+| of a finite scheme");
  add_scheme_flags(cmd_stats, stats_flags);
  cmd_stats->add_flag("--json", stats_json, "machine-readable output");

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_decide))
      return run_decide(out, decide_flags, decide_batch, decide_verify, decide_json, decide_trace,
                        decide_strict);
    if (app.got_subcommand(cmd_enum)) return run_enumerate(out, enum_length, enum_json);
    if (app.got_subcommand(cmd_roots)) return run_roots(out, roots_flags, roots_aplus, roots_json);
    if (app.got_subcommand(cmd_cover))
      return run_cover(out, cover_flags, cover_k, cover_chain_double, cover_universal,
                       cover_quotients, cover_json);
    if (app.got_subcommand(cmd_validate))
      return run_validate(out, validate_flags, validate_cap, validate_json);
    if (app.got_subcommand(cmd_extremal)) return run_extremal(out, extremal_n, extremal_json);
    if (app.got_subcommand(cmd_stats)) return run_stats(out, stats_flags, stats_json);
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace rank2::cli
