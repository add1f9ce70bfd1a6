// fobnn-sat: reaction network to FOBNN, CNF and transition graphs.

#include "fobnn/classic.hpp"
#include "fobnn/errors.hpp"
#include "fobnn/graph.hpp"
#include "fobnn/pipeline.hpp"
#include "fobnn/session.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace fobnn;

namespace {

struct Options {
  std::string input;
  std::string input_format = "auto";
  std::string mass_action = "off";
  std::string constraints_file;
  bool derivative_zero = false;
  std::string backend;
  bool force = false;
  std::string output;

  // subcommand specific
  bool show_fobnn = false;
  std::string from;
  std::size_t limit = 0;
  bool extended = false;
  std::string format = "dot";
  std::size_t loop_limit = kDefaultLoopLimit;
  std::string against = "classic";
};

class Timer {
 public:
  explicit Timer(std::string label) : label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }
  ~Timer() { std::cerr << label_ << ": " << ms() << " ms\n"; }

 private:
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// One constraint file may spread its conjunction over several lines.
std::string read_constraints(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string out;
  for (std::string line; std::getline(in, line);) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    out += line + " ";
  }
  out.erase(out.find_last_not_of(" \t\r") + 1);
  return out;
}

ReactionNetwork load(const Options& o) {
  Timer t("parse");
  InputFormat fmt = guess_format(o.input);
  if (o.input_format == "native") fmt = InputFormat::Native;
  if (o.input_format == "coresbml") fmt = InputFormat::CoreSbml;
  return load_network(o.input, fmt);
}

Fobnn build(const Options& o, const ReactionNetwork& rn) {
  Timer t("build");
  ModelOptions mo;
  mo.mass_action = o.mass_action;
  if (!o.constraints_file.empty()) mo.constraints = read_constraints(o.constraints_file);
  mo.derivative_zero = o.derivative_zero;
  return prepare_fobnn(rn, mo);
}

SolverSession session_for(const Options& o, const Fobnn& f) {
  Timer t("encode");
  return SolverSession(encode_fobnn(f), o.backend.empty() ? default_backend_name() : o.backend);
}

void annotate(TransitionGraph& g, const Options& o) {
  g.metadata["model"] = fs::path(o.input).filename().string();
  if (g.kind != GraphKind::Classic) {
    g.metadata["mass_action"] = o.mass_action;
    g.metadata["derivative_zero"] = o.derivative_zero ? "true" : "false";
    if (!o.constraints_file.empty()) g.metadata["constraints"] = fs::path(o.constraints_file).filename().string();
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw InputError("cannot write '" + o.output + "'");
  out << text;
}

std::string serialize(const Options& o, const TransitionGraph& g) {
  return o.format == "json" ? to_json(g) : to_dot(g);
}

void cmd_parse(const Options& o) {
  const ReactionNetwork rn = load(o);
  std::string text = render_native(rn);
  if (o.show_fobnn) text += "\n" + build(o, rn).to_string() + "\n";
  emit(o, text);
}

void cmd_encode(const Options& o) {
  const ReactionNetwork rn = load(o);
  const Fobnn f = build(o, rn);
  Timer t("encode");
  const Encoding enc = encode_fobnn(f);
  emit(o, emit_dimacs(enc.cnf, enc.registry));
}

void cmd_transitions(const Options& o) {
  const ReactionNetwork rn = load(o);
  SolverSession s = session_for(o, build(o, rn));
  std::optional<State> start;
  if (!o.from.empty()) {
    try {
      start = parse_state(o.from, rn.species);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--from: ") + e.what());
    }
  }
  std::optional<std::size_t> limit;
  if (o.limit > 0) limit = o.limit;
  const Timer t("transitions");
  const auto ts = s.enumerate_transitions(limit, start, o.extended);
  std::ostringstream out;
  for (const auto& tr : ts) out << format_state(tr.from, rn.species) << " -> " << format_state(tr.to, rn.species) << "\n";
  emit(o, out.str());
  if (!ts.empty()) std::cerr << "per transition: " << t.ms() / static_cast<double>(ts.size()) << " ms\n";
  std::cerr << "transitions: " << ts.size() << " (backend " << s.backend_name() << ")\n";
}

TransitionGraph fobnn_graph(const Options& o, const ReactionNetwork& rn) {
  SolverSession s = session_for(o, build(o, rn));
  const Timer t("stg");
  TransitionGraph g = s.build_stg(o.extended, o.force);
  annotate(g, o);
  return g;
}

void cmd_stg(const Options& o) { emit(o, serialize(o, fobnn_graph(o, load(o)))); }

void cmd_fixedpoints(const Options& o) {
  const ReactionNetwork rn = load(o);
  SolverSession s = session_for(o, build(o, rn));
  const Timer t("fixedpoints");
  const FixedPointResult r = s.find_fixed_points(o.loop_limit);
  std::ostringstream out;
  for (const auto& st : r.states) out << format_state(st, rn.species) << "\n";
  emit(o, out.str());
  std::cerr << "loop candidates: " << r.candidates << (r.exhausted ? "" : " (loop limit reached, result may be incomplete)")
            << "\n";
}

void cmd_classic(const Options& o) {
  const ReactionNetwork rn = load(o);
  const Timer t("classic-stg");
  TransitionGraph g = classic_stg(rn, o.force);
  annotate(g, o);
  emit(o, serialize(o, g));
}

void cmd_compare(const Options& o) {
  const ReactionNetwork rn = load(o);
  std::future<TransitionGraph> other;
  if (o.against == "classic") {
    other = std::async(std::launch::async, [&] {
      TransitionGraph g = classic_stg(rn, o.force);
      annotate(g, o);
      return g;
    });
  } else {
    other = std::async(std::launch::deferred, [&] {
      try {
        return graph_from_json(read_file(o.against));
      } catch (const std::invalid_argument& e) {
        throw InputError(o.against + ": " + e.what());
      }
    });
  }
  const TransitionGraph a = fobnn_graph(o, rn);
  const TransitionGraph b = other.get();
  emit(o, report_to_json(compare(a, b), rn.species));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign-abstracted transition analysis of reaction networks"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Model file (.rn native, .xml CoreSBML)")->required();
    sub->add_option("--input-format", o.input_format, "auto, native or coresbml")
        ->check(CLI::IsMember({"auto", "native", "coresbml"}));
    sub->add_option("--mass-action", o.mass_action, "auto, all, off or a comma-separated species list");
    sub->add_option("--constraints", o.constraints_file, "File with extra constraints: t >= t | t = t joined by 'and'");
    sub->add_flag("--derivative-zero", o.derivative_zero, "Add dot(X) = 0 for every species");
    sub->add_option("--backend", o.backend, "SAT backend (picosat, cdcl); default $FOBNN_SAT_BACKEND or picosat");
    sub->add_option("-o,--output", o.output, "Write the result here instead of stdout");
  };
  auto graph_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    sub->add_flag("--force", o.force, "Ignore the species guard");
  };

  auto* parse = app.add_subcommand("parse", "Validate and echo the model");
  common(parse);
  parse->add_flag("--fobnn", o.show_fobnn, "Also print the FOBNN formula");
  parse->callback([&] { cmd_parse(o); });

  auto* enc = app.add_subcommand("encode", "Emit the CNF as DIMACS");
  common(enc);
  enc->callback([&] { cmd_encode(o); });

  auto* tr = app.add_subcommand("transitions", "Enumerate transitions");
  common(tr);
  tr->add_option("--from", o.from, "Start state, e.g. S=+,E=0,C=0,P=0");
  tr->add_option("--limit", o.limit, "Stop after N transitions")->check(CLI::PositiveNumber);
  tr->add_flag("--extended", o.extended, "Include derivative signs in states");
  tr->callback([&] { cmd_transitions(o); });

  auto* stg = app.add_subcommand("stg", "Full state transition graph");
  common(stg);
  graph_format(stg);
  stg->add_flag("--extended", o.extended, "Extended states");
  stg->callback([&] { cmd_stg(o); });

  auto* fp = app.add_subcommand("fixedpoints", "Fixed points of the base graph");
  common(fp);
  fp->add_option("--loop-limit", o.loop_limit, "Maximum loop candidates")->check(CLI::PositiveNumber);
  fp->callback([&] { cmd_fixedpoints(o); });

  auto* cl = app.add_subcommand("classic-stg", "Classic boolean semantics graph");
  common(cl);
  graph_format(cl);
  cl->callback([&] { cmd_classic(o); });

  auto* cmp = app.add_subcommand("compare", "Compare the FOBNN graph with another graph");
  common(cmp);
  cmp->add_option("--against", o.against, "'classic' or a graph JSON file");
  cmp->add_flag("--force", o.force, "Ignore the species guard");
  cmp->callback([&] { cmd_compare(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << o.input << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
