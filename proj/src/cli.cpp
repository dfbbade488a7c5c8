#include "unigraph/cli.hpp"

#include <chrono>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "unigraph/classes.hpp"
#include "unigraph/decomposition.hpp"
#include "unigraph/degree_sequence.hpp"
#include "unigraph/errors.hpp"
#include "unigraph/graph6.hpp"
#include "unigraph/oracle.hpp"
#include "unigraph/report.hpp"
#include "unigraph/verify.hpp"

namespace unigraph::cli {
namespace {

struct Options {
  bool json = false;
  bool strict = false;
  bool no_meta = false;
  std::string input;
  std::string sequence;
  std::optional<std::size_t> limit;
  int max_n = 7;
  int min_n = 0;
  int jobs = 1;
  bool list = false;
};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string resolve(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::string all{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return trim(all);
}

// graph6 from stdin: first non-empty line only.
std::string first_line(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (!line.empty()) return line;
  }
  return {};
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string tri(const std::optional<bool>& b) { return b ? yes_no(*b) : "n/a"; }

struct Emitter {
  const Options& opt;
  std::ostream& out;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void json(Json j) const {
    if (!opt.no_meta) {
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      j["meta"] = {{"tool", "unigraph"}, {"version", kVersion}, {"elapsedSeconds", secs}};
    }
    out << j.dump(2) << '\n';
  }
};

void print_decomposition_text(std::ostream& out, const SequenceDecomposition& sd) {
  out << "EG terms: " << format_sequence(sd.eg) << "  (t = " << sd.t << ")\n";
  std::size_t trivial = 0;
  for (const auto& c : sd.components) trivial += c.trivial() ? 1 : 0;
  out << "components: " << sd.components.size() << " (" << trivial << " trivial)\n";
  for (std::size_t i = 0; i < sd.components.size(); ++i) {
    const auto& c = sd.components[i];
    out << "  [" << i << "] " << format_sequence(c.sequence(), true);
    if (!c.trivial()) {
      out << "  clique " << format_sequence(c.b_part(), true) << " | independent "
          << (c.a_part().empty() ? std::string("-") : format_sequence(c.a_part(), true));
    }
    if (c.slot) out << "  slot (" << c.slot->first << "," << c.slot->second << ")";
    out << '\n';
  }
  if (sd.tail) out << "  tail " << format_sequence(*sd.tail, true) << " (non-split)\n";
}

int cmd_analyze(const Options& opt, std::istream& in, std::ostream& out) {
  const Emitter emit{opt, out};
  const std::string text = resolve(opt.input, in);
  const DegreeSequence d = parse_sequence(text);
  const SequenceAnalysis a = analyze_sequence(d);
  if (opt.json) {
    Json j;
    j["command"] = "analyze";
    j["input"] = text;
    Json body = to_json(a);
    for (auto& [k, v] : body.items()) j[k] = v;
    emit.json(std::move(j));
  } else {
    out << "sequence: " << format_sequence(a.d.terms(), true) << '\n';
    out << "graphic: " << yes_no(a.profile.graphic()) << '\n';
    if (a.profile.graphic()) {
      out << "m(d): " << a.profile.m << '\n';
      print_decomposition_text(out, *a.decomposition);
      out << "threshold: " << tri(a.threshold) << '\n'
          << "split: " << tri(a.split) << '\n'
          << "pseudo-split: " << tri(a.pseudo_split) << '\n'
          << "matrogenic: " << tri(a.matrogenic) << '\n'
          << "matroidal: " << tri(a.matroidal) << '\n'
          << "hereditary unigraph: " << yes_no(a.hereditary_direct->member) << '\n';
      if (!a.hereditary_direct->reason.empty()) out << "  " << a.hereditary_direct->reason << '\n';
      out << "unigraph (oracle): " << tri(a.unigraph) << '\n';
    }
    for (const auto& w : a.warnings) out << "warning: " << w << '\n';
  }
  return opt.strict && !a.profile.graphic() ? kExitNegative : kExitOk;
}

int cmd_classify(const Options& opt, std::istream& in, std::ostream& out) {
  const Emitter emit{opt, out};
  const std::string text = first_line(resolve(opt.input, in));
  const Graph g = parse_graph6(text);
  const ClassReport r = classify(g);
  const CanonicalDecomposition cd = decompose(g);
  if (opt.json) {
    Json j;
    j["command"] = "classify";
    j["input"] = text;
    j["n"] = g.order();
    j["edges"] = g.edge_count();
    j["degreeSequence"] = format_sequence(g.degree_sequence(), true);
    j["decomposition"] = to_json(cd);
    j["classes"] = to_json(r);
    emit.json(std::move(j));
  } else {
    out << "graph6: " << text << "  (n = " << g.order() << ", m = " << g.edge_count() << ")\n";
    out << "degrees: " << format_sequence(g.degree_sequence(), true) << '\n';
    auto line = [&](const char* name, const ClassVerdict& v) {
      out << name << ": " << yes_no(v.member);
      if (v.witness) {
        out << "  (induced " << v.witness->pattern << " on";
        for (Vertex u : v.witness->embedding) out << ' ' << u;
        out << ')';
      }
      out << '\n';
    };
    line("threshold", r.threshold);
    line("split", r.split);
    line("pseudo-split", r.pseudo_split);
    line("{2K2,C4,chair}-free", r.chair_free);
    line("{2K2,C4,kite}-free", r.kite_free);
    line("class G", r.class_g);
    line("forcibly class G", r.forcibly_class_g);
    line("matrogenic", r.matrogenic);
    line("matroidal", r.matroidal);
    line("hereditary unigraph", r.hereditary_unigraph);
    out << "unigraph (oracle): " << tri(r.unigraph_desk_scale) << '\n';
  }
  return opt.strict && !r.hereditary_unigraph.member ? kExitNegative : kExitOk;
}

int cmd_decompose(const Options& opt, std::istream& in, std::ostream& out) {
  const Emitter emit{opt, out};
  if (!opt.sequence.empty()) {
    const std::string text = resolve(opt.sequence, in);
    const DegreeSequence d = parse_sequence(text);
    const EGProfile p = eg_profile(d);
    if (!p.graphic()) {
      if (opt.json) {
        emit.json({{"command", "decompose"}, {"input", text}, {"graphic", false}, {"decomposition", nullptr}});
      } else {
        out << "not graphic\n";
      }
      return opt.strict ? kExitNegative : kExitOk;
    }
    const SequenceDecomposition sd = decompose_sequence(d, p);
    if (opt.json) {
      emit.json({{"command", "decompose"}, {"input", text}, {"graphic", true}, {"decomposition", to_json(sd)}});
    } else {
      print_decomposition_text(out, sd);
    }
    return kExitOk;
  }
  if (opt.input.empty()) throw CLI::RequiredError("a graph6 argument or --sequence");
  const std::string text = first_line(resolve(opt.input, in));
  const Graph g = parse_graph6(text);
  const CanonicalDecomposition cd = decompose(g);
  if (opt.json) {
    emit.json({{"command", "decompose"}, {"input", text}, {"n", g.order()}, {"decomposition", to_json(cd)}});
  } else {
    out << "components: " << cd.components.size() << (cd.tail ? " + non-split tail" : "") << '\n';
    for (std::size_t i = 0; i < cd.components.size(); ++i) {
      const auto& c = cd.components[i];
      out << "  [" << i << "] " << emit_graph6(c.part.graph()) << "  clique {";
      const char* sep = "";
      for (Vertex v : c.part.b()) { out << sep << c.vertices[static_cast<std::size_t>(v)]; sep = ","; }
      out << "} independent {";
      sep = "";
      for (Vertex v : c.part.a()) { out << sep << c.vertices[static_cast<std::size_t>(v)]; sep = ","; }
      out << "}\n";
    }
    if (cd.tail) {
      out << "  tail " << emit_graph6(cd.tail->graph) << "  on {";
      const char* sep = "";
      for (Vertex v : cd.tail->vertices) { out << sep << v; sep = ","; }
      out << "}\n";
    }
  }
  return kExitOk;
}

int cmd_realizations(const Options& opt, std::istream& in, std::ostream& out) {
  const Emitter emit{opt, out};
  const std::string text = resolve(opt.input, in);
  const DegreeSequence d = parse_sequence(text);
  const bool graphic = is_graphic(d);
  const std::vector<Graph> rs = realizations(d, opt.limit);
  if (opt.json) {
    Json list = Json::array();
    for (const auto& g : rs) list.push_back(emit_graph6(g));
    Json j{{"command", "realizations"}, {"input", text}, {"graphic", graphic}};
    j["limit"] = opt.limit ? Json(*opt.limit) : Json(nullptr);
    j["count"] = rs.size();
    j["complete"] = !opt.limit || rs.size() < *opt.limit;
    j["realizations"] = std::move(list);
    emit.json(std::move(j));
  } else {
    out << "sequence: " << format_sequence(d.terms(), true) << '\n';
    out << "realizations: " << rs.size();
    if (opt.limit && rs.size() >= *opt.limit) out << " (limit reached)";
    out << '\n';
    for (const auto& g : rs) out << "  " << emit_graph6(g) << '\n';
  }
  return opt.strict && !graphic ? kExitNegative : kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Emitter emit{opt, out};
  if (opt.list) {
    if (opt.json) {
      Json list = Json::array();
      for (const auto& p : properties()) {
        list.push_back({{"id", p.id}, {"description", p.description}, {"maxN", p.max_n}});
      }
      emit.json({{"command", "verify"}, {"properties", std::move(list)}});
    } else {
      for (const auto& p : properties()) {
        out << p.id << " (n <= " << p.max_n << "): " << p.description << '\n';
      }
    }
    return kExitOk;
  }
  if (opt.input.empty()) throw CLI::RequiredError("property");
  const VerificationResult r = verify(opt.input, opt.max_n, opt.jobs, opt.min_n);
  if (opt.json) {
    Json j{{"command", "verify"}};
    Json body = to_json(r);
    for (auto& [k, v] : body.items()) j[k] = v;
    if (opt.no_meta) j.erase("elapsedSeconds");
    emit.json(std::move(j));
  } else {
    out << r.property << " n=" << r.min_n << ".." << r.max_n << ": " << (r.pass() ? "PASS" : "FAIL")
        << " (" << r.classes_checked << " classes, " << r.counterexamples.size() << " counterexamples)\n";
    for (const auto& f : r.failures) out << "  " << f << '\n';
    for (const auto& note : r.notes) out << "  note: " << note << '\n';
  }
  return r.pass() ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognize and decompose graphs and degree sequences (hereditary unigraphs)", "unigraph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Emit a JSON report");
    sub->add_flag("--strict", opt.strict, "Exit with status 2 on a negative answer");
    sub->add_flag("--no-meta", opt.no_meta, "Omit the meta block (timing, version) from JSON");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a degree sequence such as 4,2^5");
  analyze->add_option("sequence", opt.input, "Degree sequence, or - for stdin")->required();
  common(analyze);

  CLI::App* classify_cmd = app.add_subcommand("classify", "Run every recognizer on a graph6 graph");
  classify_cmd->add_option("graph6", opt.input, "graph6 text, or - for stdin")->required();
  common(classify_cmd);

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Canonical decomposition of a graph or sequence");
  decompose_cmd->add_option("graph6", opt.input, "graph6 text, or - for stdin");
  decompose_cmd->add_option("--sequence", opt.sequence, "Decompose a degree sequence instead");
  common(decompose_cmd);

  CLI::App* real = app.add_subcommand("realizations", "List non-isomorphic realizations (n <= 8)");
  real->add_option("sequence", opt.input, "Degree sequence, or - for stdin")->required();
  real->add_option("--limit", opt.limit, "Stop after this many realizations")->check(CLI::PositiveNumber);
  common(real);

  CLI::App* ver = app.add_subcommand("verify", "Exhaustively check a property over all small graphs");
  ver->add_option("property", opt.input, "Property id (see --list)");
  ver->add_option("--max-n", opt.max_n, "Largest vertex count")->check(CLI::NonNegativeNumber);
  ver->add_option("--min-n", opt.min_n, "Smallest vertex count")->check(CLI::NonNegativeNumber);
  ver->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  ver->add_flag("--list", opt.list, "List property ids");
  common(ver);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e_out;
    const int code = app.exit(e, o, e_out);
    out << o.str();
    err << e_out.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opt, in, out);
    if (classify_cmd->parsed()) return cmd_classify(opt, in, out);
    if (decompose_cmd->parsed()) return cmd_decompose(opt, in, out);
    if (real->parsed()) return cmd_realizations(opt, in, out);
    return cmd_verify(opt, out);
  } catch (const RouteDisagreement& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const SequenceParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Graph6Error& e) {
    err << "graph6 error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownProperty& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace unigraph::cli
