#include "qunit_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qunit/entangle.hpp"
#include "qunit/errors.hpp"
#include "qunit/tableaux.hpp"

namespace qunit::cli {

namespace {

using hilbert::SpaceSpec;
using hilbert::StateVector;
using tableaux::Partition;

std::string number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", round_sig(value));
  return buffer;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void append_state_csv(std::ostringstream& csv, const std::string& id, const std::string& label,
                      const StateVector& psi) {
  for (const auto& [word, amplitude] : psi.terms(1e-14)) {
    csv << csv_field(id) << ',' << csv_field(label) << ',' << word.to_string() << ','
        << number(amplitude.real()) << ',' << number(amplitude.imag()) << '\n';
  }
}

// "0.707106781187 |11> + 0.707106781187 |22>"
std::string ket_string(const StateVector& psi) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [word, amplitude] : psi.terms(1e-12)) {
    std::string coefficient;
    if (std::abs(amplitude.imag()) < 1e-12) {
      const double re = amplitude.real();
      coefficient = number(first ? re : std::abs(re));
      if (!first) os << (re < 0 ? " - " : " + ");
    } else {
      if (!first) os << " + ";
      coefficient = "(" + number(amplitude.real()) + (amplitude.imag() < 0 ? "" : "+") +
                    number(amplitude.imag()) + "i)";
    }
    os << coefficient << " |" << word.to_string() << '>';
    first = false;
  }
  return first ? "0" : os.str();
}

std::string report_pretty(const entangle::EntanglementReport& report) {
  std::ostringstream os;
  os << "entropies:";
  for (double s : report.per_particle_entropy) os << ' ' << number(s);
  os << "  rdm_deviation: " << number(report.rdm_deviation)
     << "  maximal: " << (report.maximal ? "yes" : "no");
  return os.str();
}

const char* convention_name(symmetry::CouplingConvention c) {
  return c == symmetry::CouplingConvention::Sequential ? "sequential" : "paper-fixtures";
}

SpaceSpec space_of(const CommandConfig& config) {
  return SpaceSpec(config.n, config.N, config.max_levels);
}

Json sector_states_json(const std::vector<StateVector>& vectors) {
  Json states = Json::array();
  for (const auto& v : vectors) states.push_back(Json{{"state", state_to_json(v)}});
  return states;
}

Rendered coupled_basis_output(const CommandConfig& config) {
  const SpaceSpec space = space_of(config);
  const auto basis = symmetry::coupled_basis(space, config.convention);
  Rendered r;
  std::ostringstream csv, pretty;
  csv << "state,label,word,re,im\n";
  pretty << "coupled basis n=" << config.n << " N=" << config.N
         << " convention=" << convention_name(config.convention) << '\n';
  Json states = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& [label, state] = basis[i];
    const Partition lambda = symmetry::coupled_partition(config.N, label.twice_j);
    states.push_back(Json{{"label", Json{{"j", label.j()},
                                         {"m", label.m()},
                                         {"d", label.d},
                                         {"text", label.to_string()}}},
                          {"lambda", partition_to_json(lambda)},
                          {"state", state_to_json(state)}});
    append_state_csv(csv, std::to_string(i), label.to_string(), state);
    pretty << std::left << std::setw(16) << label.to_string() << ket_string(state) << '\n';
  }
  r.json = Json{{"n", config.n},
                {"N", config.N},
                {"convention", convention_name(config.convention)},
                {"count", basis.size()},
                {"states", std::move(states)}};
  r.csv = csv.str();
  r.pretty = pretty.str();
  return r;
}

Rendered sector_basis_output(const CommandConfig& config) {
  const SpaceSpec space = space_of(config);
  std::vector<Partition> lambdas;
  if (config.lambda) {
    if (config.lambda->size() != config.N) {
      throw DomainError("--lambda " + config.lambda->to_string() + " is not a partition of N = " +
                        std::to_string(config.N));
    }
    lambdas.push_back(*config.lambda);
  } else {
    lambdas = tableaux::enumerate_partitions(config.N);
  }

  Rendered r;
  std::ostringstream csv, pretty;
  csv << "state,label,word,re,im\n";
  Json sectors = Json::array();
  std::size_t id = 0;
  for (const Partition& lambda : lambdas) {
    const symmetry::SectorBasis basis =
        config.copy_index ? symmetry::sector_copy_basis(lambda, *config.copy_index, space)
                          : symmetry::sector_basis(lambda, space);
    Json sector{{"lambda", partition_to_json(lambda)},
                {"dimension", basis.vectors.size()},
                {"copy_index", basis.copy_index ? Json(*basis.copy_index) : Json(nullptr)},
                {"states", sector_states_json(basis.vectors)}};
    sectors.push_back(std::move(sector));
    pretty << "sector " << lambda.to_string() << " dimension " << basis.vectors.size() << '\n';
    for (const auto& v : basis.vectors) {
      append_state_csv(csv, std::to_string(id++), lambda.to_string(), v);
      pretty << "  " << ket_string(v) << '\n';
    }
  }
  r.json = Json{{"n", config.n}, {"N", config.N}, {"sectors", std::move(sectors)}};
  r.csv = csv.str();
  r.pretty = pretty.str();
  return r;
}

struct LabeledState {
  Json label;
  std::string text;
  StateVector state;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  return in;
}

}  // namespace

hilbert::StateVector load_state(const std::string& path, int max_levels) {
  std::ifstream in = open_input(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  StateVector psi = parse_state_text(buffer.str(), max_levels);
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-6) {
    throw InputError("state norm " + number(norm) + " is not within 1e-6 of 1");
  }
  return psi.normalized();
}

hilbert::StateVector random_state(const SpaceSpec& space, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> gauss;
  hilbert::Vector amplitudes(static_cast<Eigen::Index>(space.dimension()));
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
    const double re = gauss(engine);
    const double im = gauss(engine);
    amplitudes[i] = hilbert::Complex(re, im);
  }
  return StateVector(space, std::move(amplitudes)).normalized();
}

Rendered cmd_partitions(const CommandConfig& config) {
  const auto partitions = tableaux::enumerate_partitions(config.N);
  Rendered r;
  Json list = Json::array();
  std::ostringstream csv, pretty;
  csv << "lambda\n";
  for (const auto& lambda : partitions) {
    list.push_back(partition_to_json(lambda));
    csv << csv_field(lambda.to_string()) << '\n';
    pretty << lambda.to_string() << '\n';
  }
  r.json = Json{{"N", config.N}, {"count", partitions.size()}, {"partitions", std::move(list)}};
  r.csv = csv.str();
  r.pretty = pretty.str();
  return r;
}

Rendered cmd_dims(const CommandConfig& config) {
  const auto check = tableaux::schur_weyl_identity(config.N, config.n);
  Rendered r;
  Json rows = Json::array();
  std::ostringstream csv, pretty;
  csv << "lambda,f,weyl_dim,product\n";
  pretty << std::left << std::setw(20) << "lambda" << std::setw(10) << "f" << std::setw(12)
         << "dim T" << "product\n";
  for (const auto& term : check.per_lambda) {
    rows.push_back(Json{{"lambda", partition_to_json(term.lambda)},
                        {"f", term.specht_dim},
                        {"weyl_dim", term.weyl_dim},
                        {"product", term.product}});
    csv << csv_field(term.lambda.to_string()) << ',' << term.specht_dim << ',' << term.weyl_dim
        << ',' << term.product << '\n';
    pretty << std::left << std::setw(20) << term.lambda.to_string() << std::setw(10)
           << term.specht_dim << std::setw(12) << term.weyl_dim << term.product << '\n';
  }
  csv << "total,,," << check.total << '\n';
  pretty << "total " << check.total << " = " << config.n << '^' << config.N << " = "
         << check.expected << (check.holds ? "  (holds)" : "  (FAILS)") << '\n';
  r.json = Json{{"N", config.N},
                {"n", config.n},
                {"rows", std::move(rows)},
                {"total", check.total},
                {"expected", check.expected},
                {"holds", check.holds}};
  r.csv = csv.str();
  r.pretty = pretty.str();
  r.exit_code = check.holds ? kSuccess : kIdentityFailed;
  return r;
}

Rendered cmd_characters(const CommandConfig& config) {
  const auto table = symmetry::character_table(config.N);
  Rendered r;
  Json classes = Json::array();
  std::ostringstream csv, pretty;
  csv << "lambda";
  pretty << std::left << std::setw(18) << "lambda \\ class";
  for (const auto& cls : table.classes) {
    classes.push_back(Json{{"cycle_type", partition_to_json(cls.cycle_type)}, {"size", cls.size}});
    csv << ',' << csv_field(cls.cycle_type.to_string());
    pretty << std::setw(14) << cls.cycle_type.to_string();
  }
  csv << '\n';
  pretty << '\n';
  Json rows = Json::array();
  for (std::size_t i = 0; i < table.irreps.size(); ++i) {
    rows.push_back(Json{{"lambda", partition_to_json(table.irreps[i])}, {"values", table.values[i]}});
    csv << csv_field(table.irreps[i].to_string());
    pretty << std::setw(18) << table.irreps[i].to_string();
    for (auto v : table.values[i]) {
      csv << ',' << v;
      pretty << std::setw(14) << v;
    }
    csv << '\n';
    pretty << '\n';
  }
  r.json = Json{{"N", config.N}, {"classes", std::move(classes)}, {"table", std::move(rows)}};
  r.csv = csv.str();
  r.pretty = pretty.str();
  return r;
}

Rendered cmd_basis(const CommandConfig& config) {
  const bool coupled = config.n == 2 && !config.lambda && !config.copy_index;
  if (coupled) return coupled_basis_output(config);
  if (config.convention == symmetry::CouplingConvention::PaperFixtures) {
    throw UnsupportedError("paper-fixtures convention applies to the n = 2 coupled basis only");
  }
  return sector_basis_output(config);
}

Rendered cmd_entangle(const CommandConfig& config) {
  std::vector<LabeledState> states;
  if (config.method == "paper-pairs") {
    if (config.n != 2) throw UnsupportedError("paper-pairs method needs n = 2; use --method ghz");
    for (auto& paired : entangle::paper_pair_basis(config.N, config.convention)) {
      const auto& label = std::get<symmetry::CoupledLabel>(paired.source);
      const double phase = paired.phase.real();
      std::string text = label.to_string();
      if (label.twice_m != 0) {
        symmetry::CoupledLabel partner{label.twice_j, -label.twice_m, label.d};
        text += (phase > 0 ? " + " : " - ") + partner.to_string();
      }
      states.push_back({Json{{"j", label.j()}, {"m", label.m()}, {"d", label.d}, {"phase", phase}},
                        text, std::move(paired.vector)});
    }
  } else if (config.method == "ghz") {
    for (auto& g : entangle::ghz_basis(space_of(config))) {
      states.push_back({Json{{"phase_index", g.phase_index}, {"shifts", g.shifts}}, g.label(),
                        std::move(g.state)});
    }
  } else {
    throw UnsupportedError("unknown method '" + config.method + "'");
  }

  Rendered r;
  std::ostringstream csv, pretty;
  csv << "state,label,word,re,im\n";
  Json out_states = Json::array();
  std::vector<StateVector> vectors;
  double min_entropy = 1e300, max_entropy = -1e300;
  std::size_t maximal_count = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto& s = states[i];
    const auto report = entangle::verify_entanglement(s.state, config.tol);
    min_entropy = std::min(min_entropy, report.min_entropy);
    max_entropy = std::max(max_entropy, report.max_entropy);
    maximal_count += report.maximal;
    Json label = s.label;
    label["text"] = s.text;
    out_states.push_back(Json{{"label", std::move(label)},
                              {"state", state_to_json(s.state)},
                              {"report", report_to_json(report, config.with_spectra)}});
    append_state_csv(csv, std::to_string(i), s.text, s.state);
    pretty << s.text << "\n  " << ket_string(s.state) << "\n  " << report_pretty(report) << '\n';
    vectors.push_back(s.state);
  }

  const hilbert::Matrix gram = hilbert::gram_matrix(vectors);
  double max_overlap = 0.0;
  for (Eigen::Index a = 0; a < gram.rows(); ++a) {
    for (Eigen::Index b = 0; b < gram.cols(); ++b) {
      if (a != b) max_overlap = std::max(max_overlap, std::abs(gram(a, b)));
    }
  }
  Json summary{{"count", states.size()},
               {"max_overlap", round_sig(max_overlap)},
               {"min_entropy", round_sig(min_entropy)},
               {"max_entropy", round_sig(max_entropy)},
               {"maximal_count", maximal_count},
               {"all_maximal", maximal_count == states.size()}};
  pretty << "count " << states.size() << "  max |<a|b>| " << number(max_overlap) << "  maximal "
         << maximal_count << '/' << states.size() << '\n';

  Json doc{{"n", config.n}, {"N", config.N}, {"method", config.method}};
  if (config.method == "paper-pairs") doc["convention"] = convention_name(config.convention);
  doc["states"] = std::move(out_states);
  doc["summary"] = std::move(summary);
  r.json = std::move(doc);
  r.csv = csv.str();
  r.pretty = pretty.str();
  return r;
}

Rendered cmd_verify(const CommandConfig& config) {
  std::optional<StateVector> generated;
  StateVector psi = [&] {
    if (config.input_path) return load_state(*config.input_path, config.max_levels);
    if (config.seed) {
      generated = random_state(space_of(config), *config.seed);
      return *generated;
    }
    throw DomainError("verify needs --input or --seed");
  }();

  const auto report = entangle::verify_entanglement(psi, config.tol);
  Rendered r;
  r.json = report_to_json(report, config.with_spectra);
  std::ostringstream csv, pretty;
  csv << "particle,entropy,rdm_deviation\n";
  for (std::size_t p = 0; p < report.per_particle_entropy.size(); ++p) {
    csv << p + 1 << ',' << number(report.per_particle_entropy[p]) << ','
        << number(report.per_particle_deviation[p]) << '\n';
  }
  pretty << report_pretty(report) << '\n';
  if (config.with_spectra) {
    for (std::size_t p = 0; p < report.rdm_spectra.size(); ++p) {
      pretty << "particle " << p + 1 << " eigenvalues:";
      for (double v : report.rdm_spectra[p]) pretty << ' ' << number(v);
      pretty << '\n';
    }
  }
  if (config.with_bipartitions) {
    Json cuts = Json::array();
    for (const auto& cut : entangle::bipartition_entropies(psi)) {
      cuts.push_back(Json{{"keep", cut.keep}, {"entropy", round_sig(cut.entropy)}});
      pretty << "cut {";
      for (std::size_t i = 0; i < cut.keep.size(); ++i) pretty << (i ? "," : "") << cut.keep[i];
      pretty << "} entropy " << number(cut.entropy) << '\n';
    }
    r.json["bipartitions"] = std::move(cuts);
  }
  if (generated) r.json["state"] = state_to_json(*generated);
  r.csv = csv.str();
  r.pretty = pretty.str();
  return r;
}

Rendered cmd_project(const CommandConfig& config) {
  if (!config.input_path) throw DomainError("project needs --input");
  const StateVector psi = load_state(*config.input_path, config.max_levels);
  std::vector<Partition> lambdas;
  if (config.lambda) {
    if (config.lambda->size() != psi.space().particles()) {
      throw DomainError("--lambda " + config.lambda->to_string() + " is not a partition of N = " +
                        std::to_string(psi.space().particles()));
    }
    lambdas.push_back(*config.lambda);
  } else {
    lambdas = tableaux::enumerate_partitions(psi.space().particles());
  }
  Rendered r;
  Json weights = Json::array();
  std::ostringstream csv, pretty;
  csv << "lambda,weight\n";
  double total = 0.0;
  for (const auto& lambda : lambdas) {
    const double w = symmetry::sector_membership(psi, lambda);
    total += w;
    weights.push_back(Json{{"lambda", partition_to_json(lambda)}, {"weight", round_sig(w)}});
    csv << csv_field(lambda.to_string()) << ',' << number(w) << '\n';
    pretty << std::left << std::setw(20) << lambda.to_string() << number(w) << '\n';
  }
  pretty << "total " << number(total) << '\n';
  r.json = Json{{"n", psi.space().levels()},
                {"N", psi.space().particles()},
                {"weights", std::move(weights)},
                {"total", round_sig(total)}};
  r.csv = csv.str();
  r.pretty = pretty.str();
  return r;
}

Rendered cmd_classify(const CommandConfig& config) {
  const auto decomposition = entangle::classify_all(space_of(config), config.tol);
  Rendered r;
  Json sectors = Json::array();
  std::ostringstream csv, pretty;
  csv << "state,label,word,re,im\n";
  std::size_t id = 0;
  for (const auto& sector : decomposition.sectors) {
    Json candidates = Json::array();
    pretty << "sector " << sector.lambda.to_string() << " dimension " << sector.dimension
           << " (expected " << sector.expected_dimension << ")\n";
    for (const auto& c : sector.candidates) {
      candidates.push_back(Json{{"state", state_to_json(c.candidate.vector)},
                                {"phase", c.candidate.phase.real()},
                                {"report", report_to_json(c.report, config.with_spectra)}});
      append_state_csv(csv, std::to_string(id++), sector.lambda.to_string(), c.candidate.vector);
      pretty << "  " << ket_string(c.candidate.vector) << "\n    " << report_pretty(c.report) << '\n';
    }
    sectors.push_back(Json{{"lambda", partition_to_json(sector.lambda)},
                           {"dimension", sector.dimension},
                           {"expected_dimension", sector.expected_dimension},
                           {"basis", sector_states_json(sector.basis)},
                           {"candidates", std::move(candidates)}});
  }
  r.json = Json{{"n", decomposition.n},
                {"N", decomposition.N},
                {"total_dimension", decomposition.total_dimension},
                {"sectors", std::move(sectors)}};
  r.csv = csv.str();
  r.pretty = pretty.str();
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig config;
  std::string format = "json";
  std::string convention = "sequential";
  std::string lambda_text;

  CLI::App app{"Permutation-symmetry sectors and maximally entangled bases of N n-level particles",
               "qunit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", config.tol, "Maximality tolerance (max-abs RDM deviation)")
      ->check(CLI::PositiveNumber);
  app.add_option("--structural-tol", config.structural_tol, "Normalization/Hermiticity tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--output", config.output_path, "Write output to this file instead of stdout");
  app.add_option("--max-levels", config.max_levels, "Level guard for n (at most 6)")
      ->check(CLI::Range(2, hilbert::kHardMaxLevels));

  auto add_N = [&](CLI::App* sub) { sub->add_option("--N", config.N, "Particle count")->required(); };
  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n", config.n, "Levels per particle");
    if (required) opt->required();
  };
  auto add_convention = [&](CLI::App* sub) {
    sub->add_option("--convention", convention, "Coupled basis convention")
        ->check(CLI::IsMember({"sequential", "sequential-coupling", "paper-fixtures"}));
  };

  auto* partitions = app.add_subcommand("partitions", "List partitions of N");
  add_N(partitions);

  auto* dims = app.add_subcommand("dims", "Schur-Weyl dimension table");
  add_N(dims);
  add_n(dims, true);

  auto* characters = app.add_subcommand("characters", "Character table of S_N");
  add_N(characters);

  auto* basis = app.add_subcommand("basis", "Coupled or symmetry-sector basis");
  add_N(basis);
  add_n(basis, true);
  basis->add_option("--lambda", lambda_text, "Restrict to one sector, e.g. 2,1");
  basis->add_option("--copy", config.copy_index, "Single copy cut out by the k-th standard tableau");
  add_convention(basis);

  auto* entangle_cmd = app.add_subcommand("entangle", "Maximally entangled basis with reports");
  add_N(entangle_cmd);
  add_n(entangle_cmd, true);
  entangle_cmd->add_option("--method", config.method, "paper-pairs or ghz")
      ->check(CLI::IsMember({"paper-pairs", "ghz"}));
  add_convention(entangle_cmd);
  entangle_cmd->add_flag("--spectra", config.with_spectra, "Include RDM eigenvalues");

  auto* verify = app.add_subcommand("verify", "Entanglement report for a state file");
  verify->add_option("--input", config.input_path, "State JSON file");
  verify->add_option("--seed", config.seed, "Verify a seeded random state instead of a file");
  add_n(verify, false);
  verify->add_option("--N", config.N, "Particle count for --seed");
  verify->add_flag("--spectra", config.with_spectra, "Include RDM eigenvalues");
  verify->add_flag("--bipartitions", config.with_bipartitions, "Include entropies of every cut");

  auto* project = app.add_subcommand("project", "Sector weights of a state file");
  project->add_option("--input", config.input_path, "State JSON file")->required();
  project->add_option("--lambda", lambda_text, "Single sector");

  auto* classify = app.add_subcommand("classify", "Sector decomposition with paired candidates");
  add_N(classify);
  add_n(classify, true);
  classify->add_flag("--spectra", config.with_spectra, "Include RDM eigenvalues");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = format == "csv" ? Format::Csv : format == "pretty" ? Format::Pretty : Format::Json;
  config.convention = convention == "paper-fixtures" ? symmetry::CouplingConvention::PaperFixtures
                                                     : symmetry::CouplingConvention::Sequential;

  Rendered rendered;
  try {
    if (!lambda_text.empty()) config.lambda = Partition::parse(lambda_text);
    static const std::map<std::string, Rendered (*)(const CommandConfig&)> commands{
        {"partitions", cmd_partitions}, {"dims", cmd_dims},         {"characters", cmd_characters},
        {"basis", cmd_basis},           {"entangle", cmd_entangle}, {"verify", cmd_verify},
        {"project", cmd_project},       {"classify", cmd_classify},
    };
    rendered = commands.at(config.subcommand)(config);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputData;
  } catch (const BoundsError& e) {
    err << "bounds error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kIdentityFailed;
  }

  std::string text;
  switch (config.format) {
    case Format::Json: text = rendered.json.dump(2) + "\n"; break;
    case Format::Csv: text = rendered.csv; break;
    case Format::Pretty: text = rendered.pretty; break;
  }
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      err << "cannot write '" << *config.output_path << "'\n";
      return kUsage;
    }
    file << text;
  } else {
    out << text;
  }
  return rendered.exit_code;
}

}  // namespace qunit::cli
