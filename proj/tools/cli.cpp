#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coxfsa/automaton.hpp"
#include "coxfsa/coxeter.hpp"
#include "coxfsa/errors.hpp"
#include "coxfsa/experiments.hpp"
#include "coxfsa/language.hpp"

namespace coxfsa::cli {
namespace {

struct RunConfig {
  std::string group;
  std::string format = "text";
  std::string output;
  std::size_t radius = 0;
  std::vector<std::size_t> radii;
  std::size_t scan_len = 0;
  unsigned threads = 1;
  std::size_t max_states = 100'000;
  std::size_t max_ball = 1'000'000;
  std::size_t max_words = 10'000;
  bool all_words = false;
  std::string lang_action;
  std::string word;
};

// Writes to --output when given, otherwise to the primary stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw PreconditionError("cannot open output file '" + path + "'");
    os_ = file_.get();
  }
  std::ostream& stream() { return *os_; }
  bool to_file() const { return file_ != nullptr; }
  void finish() {
    os_->flush();
    if (!*os_) throw Error("failed to write output");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

ScanOptions scan_options(const RunConfig& cfg) {
  ScanOptions o;
  o.threads = cfg.threads;
  o.ball.max_elements = cfg.max_ball;
  o.all_words = cfg.all_words;
  o.word_cap = cfg.max_words;
  return o;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw PreconditionError("format '" + cfg.format + "' is not available for this command");
}

std::string field_name(const CoxeterSystem& sys) {
  if (sys.field().degree() == 1) return "Q";
  return "Q(2cos(pi/" + std::to_string(sys.field().n()) + "))";
}

int cmd_info(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text"});
  const auto sys = load_system(cfg.group);
  Sink sink(cfg.output, out);
  auto& os = sink.stream();
  const auto& mx = sys->matrix();
  os << "generators:";
  for (const auto& name : mx.names()) os << ' ' << name;
  os << "\nrank: " << sys->rank() << "\ncoxeter matrix:\n";
  for (Generator s = 0; s < sys->rank(); ++s) {
    os << ' ';
    for (Generator t = 0; t < sys->rank(); ++t) os << ' ' << mx.m(s, t).to_string();
    os << '\n';
  }
  os << "field: " << field_name(*sys) << ", degree " << sys->field().degree() << '\n';
  os << "2-dimensional: " << (is_two_dimensional(*sys) ? "yes" : "no")
     << "; K = " << k_constant(*sys) << '\n';
  sink.finish();
  return kOk;
}

int cmd_lang(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text"});
  const auto sys = load_system(cfg.group);
  const Word w = sys->parse_word(cfg.word);
  Sink sink(cfg.output, out);
  auto& os = sink.stream();
  if (cfg.lang_action == "check") {
    os << "in language: " << (is_in_standard_language(*sys, w) ? "true" : "false") << '\n';
  } else if (cfg.lang_action == "word") {
    os << sys->format_word(canonical_word(element_of(*sys, w))) << '\n';
  } else {
    os << "k\tT\tw\tPi\n";
    std::size_t k = 1;
    for (const auto& c : chunk_decomposition(element_of(*sys, w))) {
      os << k++ << '\t' << sys->format_set(c.t) << '\t' << sys->format_word(c.w.normal_form())
         << '\t' << sys->format_word(c.pi.normal_form()) << '\n';
    }
  }
  sink.finish();
  return kOk;
}

int cmd_automaton(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, {"text", "json", "dot"});
  const auto sys = load_system(cfg.group);
  const auto [fsa, report] = build_automaton(*sys, BuildCaps{cfg.max_states});
  Sink sink(cfg.output, out);
  // The summary shares stdout only when the automaton itself is not there.
  std::ostream& summary = cfg.format == "text" ? sink.stream() : (sink.to_file() ? out : err);
  if (cfg.format == "json") export_json(fsa, *sys, sink.stream());
  if (cfg.format == "dot") export_dot(fsa, *sys, sink.stream());
  summary << "states: " << report.state_count << "\ntransitions: " << report.transition_count
          << "\nmax wall depth: " << report.max_wall_depth << '\n';
  if (report.truncated) {
    summary << "truncated: state cap " << cfg.max_states << " reached\n";
    sink.finish();
    return kResourceCap;
  }
  int code = kOk;
  if (cfg.scan_len > 0) {
    const auto scan = equivalence_scan(fsa, *sys, cfg.scan_len, cfg.threads);
    if (scan.mismatches == 0) {
      summary << "equivalent up to length " << cfg.scan_len << " (" << scan.words_checked
              << " words, " << scan.accepted << " accepted)\n";
    } else {
      summary << "NOT equivalent: " << scan.mismatches << " mismatches, first "
              << sys->format_word(*scan.first_counterexample) << '\n';
      code = kInvariantViolation;
    }
  }
  sink.finish();
  return code;
}

std::string witness_text(const CoxeterSystem& sys, const std::optional<Witness>& w) {
  if (!w) return "-";
  return "g = " + sys.format_word(w->g) + ", s = " + sys.matrix().name(w->s);
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "tsv"});
  const auto sys = load_system(cfg.group);
  std::vector<std::size_t> radii = cfg.radii.empty() ? std::vector<std::size_t>{cfg.radius} : cfg.radii;
  std::vector<FtReport> reports;
  for (std::size_t r : radii) reports.push_back(ft_scan(*sys, r, scan_options(cfg)));
  Sink sink(cfg.output, out);
  auto& os = sink.stream();
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.bound_holds();
  if (cfg.format == "tsv") {
    write_ft_tsv(*sys, reports, os);
  } else {
    for (const auto& r : reports) {
      os << "radius " << r.radius << ": K = " << r.k << ", pairs = " << r.pairs
         << ", max_ii = " << r.max_ii << " (" << witness_text(*sys, r.witness_ii)
         << "), max_iii = " << r.max_iii << " (" << witness_text(*sys, r.witness_iii) << ")\n";
    }
    if (!reports.empty() && reports.front().two_dimensional) {
      os << "5K bound (" << 5 * reports.front().k << "): " << (ok ? "holds" : "VIOLATED") << '\n';
    } else {
      os << "5K bound: not asserted (system is not 2-dimensional)\n";
    }
  }
  sink.finish();
  return ok ? kOk : kInvariantViolation;
}

int cmd_divergence(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "tsv"});
  const auto sys = load_system(cfg.group);
  if (cfg.radii.empty()) throw PreconditionError("divergence needs --radii");
  const auto rows = divergence_scan(*sys, cfg.radii, scan_options(cfg));
  Sink sink(cfg.output, out);
  auto& os = sink.stream();
  if (cfg.format == "tsv") {
    write_divergence_tsv(*sys, rows, os);
  } else {
    for (const auto& row : rows) {
      os << "radius " << row.radius << ": max divergence " << row.max << " ("
         << witness_text(*sys, row.witness) << ")\n";
    }
  }
  sink.finish();
  return kOk;
}

int cmd_prop(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text"});
  const auto sys = load_system(cfg.group);
  const auto report = prop_main_scan(*sys, cfg.radius, scan_options(cfg));
  Sink sink(cfg.output, out);
  auto& os = sink.stream();
  os << "radius " << report.radius << ": checked " << report.checked << ", failures "
     << report.failures << '\n';
  if (report.first_failure) {
    const auto& f = *report.first_failure;
    os << "first failure: g = " << sys->format_word(f.g) << ", g' = " << sys->format_word(f.g_prime)
       << ", s = " << sys->matrix().name(f.s) << ", t = " << sys->matrix().name(f.t) << '\n';
  }
  sink.finish();
  return report.failures == 0 ? kOk : kInvariantViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Standard-language automata and fellow-traveller scans for Coxeter groups"};
  app.name("coxfsa");
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("group", cfg.group, "Group definition file")->required();
    sub->add_option("--output,-o", cfg.output, "Write the result to this file");
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1U, 256U));
    sub->add_option("--max-ball", cfg.max_ball, "Cap on ball elements")->check(CLI::PositiveNumber);
  };
  auto format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(allowed));
  };

  auto* info = app.add_subcommand("info", "Summarize a group definition");
  common(info);

  auto* lang = app.add_subcommand("lang", "Standard-language operations");
  common(lang);
  lang->add_option("action", cfg.lang_action, "check | word | chunks")
      ->required()
      ->check(CLI::IsMember({"check", "word", "chunks"}));
  lang->add_option("word", cfg.word, "Word over the generators ('-' for the empty word)")->required();

  auto* automaton = app.add_subcommand("automaton", "Build the residue automaton");
  common(automaton);
  format(automaton, {"text", "json", "dot"});
  automaton->add_option("--scan-len", cfg.scan_len, "Compare with the language up to this length");
  automaton->add_option("--max-states", cfg.max_states, "Cap on automaton states")
      ->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan", "Fellow-traveller scan over a ball");
  common(scan);
  format(scan, {"text", "tsv"});
  scan->add_option("--radius", cfg.radius, "Ball radius");
  scan->add_option("--radii", cfg.radii, "Several radii")->delimiter(',');
  scan->add_flag("--all-words", cfg.all_words, "Use every language word, not only canonical ones");
  scan->add_option("--max-words", cfg.max_words, "Cap on language words per element")
      ->check(CLI::PositiveNumber);

  auto* divergence = app.add_subcommand("divergence", "Right-multiplication divergence by radius");
  common(divergence);
  format(divergence, {"text", "tsv"});
  divergence->add_option("--radii", cfg.radii, "Radii, strictly increasing")->delimiter(',')->required();

  auto* prop = app.add_subcommand("prop", "Search residue-gate witnesses over a ball");
  common(prop);
  prop->add_option("--radius", cfg.radius, "Ball radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (info->parsed()) return cmd_info(cfg, out);
    if (lang->parsed()) return cmd_lang(cfg, out);
    if (automaton->parsed()) return cmd_automaton(cfg, out, err);
    if (scan->parsed()) return cmd_scan(cfg, out);
    if (divergence->parsed()) return cmd_divergence(cfg, out);
    if (prop->parsed()) return cmd_prop(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvariantViolation;
  }
  return kUsage;
}

}  // namespace coxfsa::cli
