// Copyright 2026 The qworlds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qworlds/battery.hpp"
#include "qworlds/contexts.hpp"
#include "qworlds/error.hpp"
#include "qworlds/evaluator.hpp"
#include "qworlds/fixtures.hpp"
#include "qworlds/formula.hpp"
#include "qworlds/lattice_io.hpp"
#include "qworlds/lset.hpp"
#include "qworlds/model_io.hpp"
#include "qworlds/oml.hpp"
#include "qworlds/presheaf.hpp"
#include "qworlds/qreals.hpp"

namespace {

using namespace qworlds;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct Caps {
  std::size_t contexts = 4096;
  std::size_t subcl_bits = 20;
  std::size_t rank = 3;
};

std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return fallback;
  try {
    std::size_t used = 0;
    const long long n = std::stoll(value, &used);
    if (used == std::string(value).size() && n > 0) return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidArgument,
              std::string(name) + " must be a positive integer, got '" + value + "'");
}

void require_positive(std::size_t value, const char* what) {
  if (value == 0) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be positive");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

ContextOptions context_options(const Caps& caps, bool exclude_trivial = false) {
  ContextOptions options;
  options.cap = caps.contexts;
  options.include_trivial = !exclude_trivial;
  return options;
}

int cmd_verify(const std::string& source, bool dot, const std::string& output) {
  std::optional<Oml> lattice = builtin_fixture(source);
  if (!lattice) {
    try {
      lattice = Oml::verify(parse_lattice(read_text_file(source)));
    } catch (const Error& e) {
      const ErrorCode code = e.code();
      if (code == ErrorCode::kNotALattice || code == ErrorCode::kNotOrtho ||
          code == ErrorCode::kNotOrthomodular) {
        std::cout << "invalid: " << e.what() << '\n';
        return kExitFailure;
      }
      throw;
    }
  }
  if (dot) {
    emit(hasse_dot(*lattice), output);
    return kExitOk;
  }
  std::ostringstream out;
  out << "valid orthomodular lattice\n"
      << "elements: " << lattice->size() << '\n'
      << "atoms: " << lattice->atoms().size() << '\n'
      << "blocks: " << blocks(*lattice).size() << '\n'
      << "irreducible: " << (is_irreducible(*lattice) ? "yes" : "no") << '\n';
  emit(out.str(), output);
  return kExitOk;
}

int cmd_contexts(const std::string& source, bool dot, bool exclude_trivial, const Caps& caps,
                 const std::string& output) {
  const Oml lattice = load_lattice(source);
  const ContextPoset poset = ContextPoset::enumerate(lattice, context_options(caps, exclude_trivial));
  emit(dot ? contexts_dot(poset) : format_contexts(poset), output);
  return kExitOk;
}

int cmd_daseinise(const std::string& source, const std::string& element, bool dot,
                  const Caps& caps, const std::string& output) {
  const Oml lattice = load_lattice(source);
  const SpectralPresheaf presheaf = SpectralPresheaf::build(lattice, context_options(caps));
  const ClopenSubobject s = presheaf.daseinise(lattice.at(element));
  if (dot) {
    emit(presheaf.dot(s), output);
    return kExitOk;
  }
  std::ostringstream out;
  out << presheaf.format(s) << '\n';
  const ContextPoset& poset = presheaf.poset();
  for (std::size_t id = 0; id < poset.size(); ++id) {
    const BooleanContext& context = poset[id];
    out << format_context(poset, id) << " -> "
        << lattice.name(context.element_of(s.component(id))) << '\n';
  }
  emit(out.str(), output);
  return kExitOk;
}

template <typename A>
int eval_in(Universe<A>& universe, const std::string& model_text, const std::string& formula_text,
            Arrow arrow, bool relativize, const Caps& caps, const std::string& output) {
  const auto sets = load_model(model_text, universe);
  Environment env;
  std::vector<LSetId> domain;
  for (const auto& [name, id] : sets) {
    if (universe.rank(id) > caps.rank) {
      throw Error(ErrorCode::kSizeLimitExceeded, "set '" + name + "' has rank " +
                                                     std::to_string(universe.rank(id)) +
                                                     " above the cap " + std::to_string(caps.rank));
    }
    env[name] = id;
    domain.push_back(id);
  }
  const FormulaPtr f = parse_formula(formula_text);
  EvalOptions options;
  if (relativize) options.relativized_domain = domain;
  Evaluator<A> evaluator(universe, arrow, options);
  const auto value = evaluator.eval(*f, env);
  const A& algebra = universe.algebra();
  std::string text = algebra.format(value);
  if (value == algebra.top()) {
    text += "  (top)";
  } else if (value == algebra.bottom()) {
    text += "  (bottom)";
  }
  if (relativize) text += "  [relativized to the model's sets]";
  emit(text + "\n", output);
  return kExitOk;
}

int cmd_eval(const std::string& source, const std::string& model_path,
             const std::string& formula, const std::string& j, const std::string& universe,
             bool relativize, const Caps& caps, const std::string& output) {
  const Oml lattice = load_lattice(source);
  const Arrow arrow = parse_arrow(j);
  const std::string model_text = read_text_file(model_path);
  if (universe == "lattice") {
    LatticeUniverse u{LatticeAlgebra(lattice)};
    return eval_in(u, model_text, formula, arrow, relativize, caps, output);
  }
  if (universe == "subcl") {
    SubclUniverse u{SubclAlgebra(SpectralPresheaf::build(lattice, context_options(caps)))};
    return eval_in(u, model_text, formula, arrow, relativize, caps, output);
  }
  throw Error(ErrorCode::kInvalidArgument, "universe must be 'lattice' or 'subcl'");
}

std::string witness_text(const RealCheck& check) {
  std::string out;
  for (const std::string& w : check.witnesses) out += (out.empty() ? "" : "; ") + w;
  return out;
}

int cmd_reals(const std::string& source, const std::string& action, const std::string& path,
              const std::string& j, const Caps& caps, const std::string& output) {
  const Oml lattice = load_lattice(source);
  const SpectralPresheaf presheaf = SpectralPresheaf::build(lattice, context_options(caps));
  const std::vector<RealLiteral> literals = parse_reals(read_text_file(path));
  std::ostringstream out;
  int status = kExitOk;
  if (action == "check") {
    for (const RealLiteral& literal : literals) {
      const SubclReal u = to_subcl_real(presheaf, literal);
      const RealCheck check = check_real(presheaf, u);
      out << literal.name << ": " << (check.pass() ? "real" : "not a real");
      if (check.pass()) out << (is_regular(presheaf, u) ? ", regular" : ", not regular");
      if (!check.pass()) {
        out << " (" << witness_text(check) << ")";
        status = kExitFailure;
      }
      out << '\n';
    }
  } else if (action == "roundtrip") {
    for (const RealLiteral& literal : literals) {
      const LatticeReal x = to_lattice_real(lattice, literal);
      const RealCheck check = check_real(lattice, x);
      if (!check.pass()) {
        out << literal.name << ": not a spectral family (" << witness_text(check) << ")\n";
        status = kExitFailure;
        continue;
      }
      const SubclReal h = embed_real(presheaf, x);
      const LatticeReal back = extract_real(presheaf, h);
      out << literal.name << ": " << format_real(lattice, x) << '\n'
          << "  embedded:  " << format_real(presheaf, h) << '\n'
          << "  extracted: " << format_real(lattice, back) << '\n'
          << "  roundtrip: " << (back == x ? "identity" : "MISMATCH") << '\n';
      if (!(back == x)) status = kExitFailure;
    }
  } else if (action == "eq") {
    const Arrow arrow = parse_arrow(j);
    std::vector<SubclReal> reals;
    for (const RealLiteral& literal : literals) reals.push_back(to_subcl_real(presheaf, literal));
    for (std::size_t a = 0; a < reals.size(); ++a)
      for (std::size_t b = a; b < reals.size(); ++b) {
        const ClopenSubobject v = real_truth_eq(presheaf, reals[a], reals[b], arrow);
        out << "[" << literals[a].name << " = " << literals[b].name << "]_" << arrow_name(arrow)
            << " = " << presheaf.format(v) << (v == presheaf.top() ? "  (top)" : "") << '\n';
      }
  } else {
    throw Error(ErrorCode::kInvalidArgument, "reals action must be roundtrip, check or eq");
  }
  emit(out.str(), output);
  return status;
}

int cmd_battery(const std::string& source, const std::string& suite, std::uint64_t seed,
                std::size_t trials, std::size_t samples, const std::string& format,
                const Caps& caps, const std::string& output) {
  if (format != "text" && format != "structured") {
    throw Error(ErrorCode::kInvalidArgument, "format must be 'text' or 'structured'");
  }
  const Oml lattice = load_lattice(source);
  BatteryConfig config;
  config.seed = seed;
  config.trials = trials;
  config.samples = samples;
  config.max_rank = caps.rank;
  config.contexts = context_options(caps);
  config.subcl.enumeration_bits = caps.subcl_bits;
  const std::vector<BatteryRecord> records = run_battery(lattice, source, suite, config);
  emit(format == "text" ? format_text(records) : format_structured(records), output);
  return battery_passed(records) ? kExitOk : kExitFailure;
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::kSizeLimitExceeded ? kExitCap : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quantum logic, daseinisation and quantum-valued set theory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qworlds 0.1.0");

  Caps caps;
  std::optional<std::size_t> context_cap;
  std::optional<std::size_t> subcl_cap;
  std::optional<std::size_t> rank_cap;
  std::string output;
  app.add_option("--context-cap", context_cap,
                 "Maximum number of contexts (env QWORLDS_CONTEXT_CAP, default 4096)");
  app.add_option("--subcl-cap", subcl_cap,
                 "Stone points up to which subobjects are enumerated (env QWORLDS_SUBCL_CAP, "
                 "default 20)");
  app.add_option("--rank-cap", rank_cap, "Maximum set rank (env QWORLDS_RANK_CAP, default 3)");
  app.add_option("-o,--output", output, "Write output to a file instead of stdout");

  std::string lattice_source;
  bool dot = false;

  auto* verify = app.add_subcommand("verify", "Check that a lattice file is an orthomodular lattice");
  verify->add_option("lattice", lattice_source, "Fixture name or lattice file")->required();
  verify->add_flag("--dot", dot, "Print the Hasse diagram as DOT");

  bool exclude_trivial = false;
  auto* contexts = app.add_subcommand("contexts", "List the Boolean contexts of a lattice");
  contexts->add_option("lattice", lattice_source, "Fixture name or lattice file")->required();
  contexts->add_flag("--dot", dot, "Print the context poset as DOT");
  contexts->add_flag("--exclude-trivial", exclude_trivial, "Leave out the context {0, 1}");

  std::string element;
  auto* daseinise = app.add_subcommand("daseinise", "Daseinise a lattice element");
  daseinise->add_option("lattice", lattice_source, "Fixture name or lattice file")->required();
  daseinise->add_option("element", element, "Element name")->required();
  daseinise->add_flag("--dot", dot, "Print the subobject as DOT");

  std::string model_path;
  std::string formula;
  std::string j = "S";
  std::string universe = "lattice";
  bool relativize = false;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula in a model file");
  eval->add_option("lattice", lattice_source, "Fixture name or lattice file")->required();
  eval->add_option("model", model_path, "Model file")->required();
  eval->add_option("formula", formula, "Formula")->required();
  eval->add_option("--j", j, "Implication: S, C or R")->capture_default_str();
  eval->add_option("--universe", universe, "lattice or subcl")->capture_default_str();
  eval->add_flag("--relativize", relativize,
                 "Let unbounded quantifiers range over the model's sets");

  std::string action;
  std::string reals_path;
  auto* reals = app.add_subcommand("reals", "Check, round-trip or compare step reals");
  reals->add_option("lattice", lattice_source, "Fixture name or lattice file")->required();
  reals->add_option("action", action, "roundtrip, check or eq")->required();
  reals->add_option("file", reals_path, "File of `real name = [...]` lines")->required();
  reals->add_option("--j", j, "Implication for eq: S, C or R")->capture_default_str();

  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t samples = 500;
  std::string format = "text";
  auto* battery = app.add_subcommand("battery", "Run the theorem battery on a lattice");
  battery->add_option("lattice", lattice_source, "Fixture name or lattice file")->required();
  battery->add_option("--suite", suite,
                      "all, adjunction, star, mirror, commutativity, paraconsistency, "
                      "transfer, hat, reals or topos")
      ->capture_default_str();
  battery->add_option("--seed", seed, "Random seed")->capture_default_str();
  battery->add_option("--trials", trials, "Random transfer cases")->capture_default_str();
  battery->add_option("--samples", samples, "Samples when not exhaustive")->capture_default_str();
  battery->add_option("--format", format, "text or structured")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    caps.contexts = context_cap.value_or(env_cap("QWORLDS_CONTEXT_CAP", caps.contexts));
    caps.subcl_bits = subcl_cap.value_or(env_cap("QWORLDS_SUBCL_CAP", caps.subcl_bits));
    caps.rank = rank_cap.value_or(env_cap("QWORLDS_RANK_CAP", caps.rank));
    require_positive(caps.contexts, "context cap");
    require_positive(caps.subcl_bits, "subobject enumeration cap");
    require_positive(caps.rank, "rank cap");
    require_positive(trials, "trials");
    require_positive(samples, "samples");

    if (*verify) return cmd_verify(lattice_source, dot, output);
    if (*contexts) return cmd_contexts(lattice_source, dot, exclude_trivial, caps, output);
    if (*daseinise) return cmd_daseinise(lattice_source, element, dot, caps, output);
    if (*eval) {
      return cmd_eval(lattice_source, model_path, formula, j, universe, relativize, caps, output);
    }
    if (*reals) return cmd_reals(lattice_source, action, reals_path, j, caps, output);
    if (*battery) {
      return cmd_battery(lattice_source, suite, seed, trials, samples, format, caps, output);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitInput;
}
