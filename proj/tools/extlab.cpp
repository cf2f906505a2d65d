// extlab: command-line front end.
//
// Exit codes: 0 positive verdict, 1 negative or refuted, 2 usage or input
// error, 3 a resource cap was hit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "extlab/corpus.hpp"
#include "extlab/extension.hpp"
#include "extlab/harmonic.hpp"
#include "extlab/json_io.hpp"
#include "extlab/markov.hpp"

using namespace extlab;

namespace {

constexpr int kPositive = 0, kNegative = 1, kUsage = 2, kCap = 3;

struct Options {
  std::string input;
  std::string output;
  bool signed_input = false;
  std::size_t window = 0;
  std::vector<Coord> period;
  std::size_t max_window = 0;
  std::string windows;
  std::string sets;
  std::size_t max_variables = 1u << 14;
  std::size_t max_configs = 1u << 17;
  std::size_t pivot_limit = 1'000'000;
  std::uint64_t node_limit = 200'000'000;
  std::optional<Coord> horizon;
  std::string corpus_name;
  int alphabet = 2;
  std::string rho;
  std::string reading = "distinct";
  int bits = 3;
  int rule = 110;
  bool words = false;
};

std::string slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Json read_json(const std::string& path) { return Json::parse(slurp(path)); }

void emit(const Options& o, const Json& j) {
  if (o.output.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw std::invalid_argument("cannot write '" + o.output + "'");
  out << j.dump(2) << "\n";
}

std::vector<Domain> parse_schedule(const Options& o, const Domain& u) {
  if (!o.windows.empty()) {
    Json j = Json::parse(o.windows.front() == '[' ? o.windows : slurp(o.windows));
    auto s = schedule_from_json(j);
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!s[i - 1].is_subset_of(s[i]) || s[i - 1] == s[i])
        throw std::invalid_argument("window schedule must be strictly nested");
    return s;
  }
  return box_schedule(u, o.max_window ? o.max_window : 6);
}

int cmd_stationary(const Options& o) {
  SignedMeasure mu = o.signed_input ? signed_measure_from_json(read_json(o.input))
                                    : SignedMeasure(measure_from_json(read_json(o.input)));
  auto r = is_locally_stationary(mu);
  Json j{{"stationary", r.stationary}};
  if (!r.stationary) {
    j["subdomain"] = to_json(r.subdomain);
    j["shift"] = to_json(r.shift);
    j["word"] = symbols_key(r.word);
    j["mass_on_subdomain"] = to_string(r.mass_here);
    j["mass_on_shifted_subdomain"] = to_string(r.mass_shifted);
  }
  emit(o, j);
  return r.stationary ? kPositive : kNegative;
}

int cmd_markov(const Options& o) {
  Measure mu = measure_from_json(read_json(o.input));
  if (!mu.domain().is_interval()) {
    std::cerr << "markov: the Markov extension is defined only for 1-D interval domains; got "
              << to_string(mu.domain()) << "\n";
    return kUsage;
  }
  MarkovExtension ext(mu);
  const std::size_t n = o.window ? o.window : ext.memory() + 1;
  if (n < ext.memory() + 1) throw std::invalid_argument("window must be at least the base length");
  auto rate = entropy_rate(ext, n);
  emit(o, Json{{"window_measure", to_json(markov_window_measure(ext, n))},
               {"entropy", {{"approximate", true}, {"window_per_site", rate.window_per_site}, {"markov_rate", rate.markov_rate}}}});
  return kPositive;
}

int cmd_periodic(const Options& o) {
  Measure mu = measure_from_json(read_json(o.input));
  PolytopeCaps caps{o.max_configs, SearchLimits{o.node_limit}};
  auto r = periodic_extension(mu, PeriodVector(o.period), caps, SolverOptions{o.pivot_limit});
  std::ostringstream fp;
  fp << std::hex << r.system_fingerprint;
  Json j{{"verdict", to_string(r.verdict)}, {"warnings", r.warnings}, {"system_fingerprint", fp.str()},
         {"variables", r.variables}};
  if (r.measure) j["torus_measure"] = to_json(*r.measure);
  emit(o, j);
  return r.verdict == Feasibility::Feasible ? kPositive : r.verdict == Feasibility::Infeasible ? kNegative : kCap;
}

int cmd_refute(const Options& o) {
  Measure mu = measure_from_json(read_json(o.input));
  RefutationCaps caps;
  caps.entropy_horizon = o.horizon;
  caps.max_lp_variables = o.max_variables;
  caps.search.node_limit = o.node_limit;
  caps.solver.pivot_limit = o.pivot_limit;
  auto r = refute_nonextendible(mu, parse_schedule(o, mu.domain()), caps);
  emit(o, to_json(r));
  if (r.verdict == RefutationReport::Verdict::Refuted) return kNegative;
  return r.reason.empty() ? kPositive : kCap;
}

// A word-set document, or a measure document standing for its support.
WordSet load_word_set(const Json& j) {
  if (j.is_object() && j.contains("masses")) return support_of(signed_measure_from_json(j));
  return word_set_from_json(j);
}

int cmd_tiling(const Options& o) {
  WordSet t = load_word_set(read_json(o.input));
  auto r = sft_emptiness(t, parse_schedule(o, t.domain), SearchLimits{o.node_limit});
  Json j{{"verdict", r.verdict == EmptinessResult::Verdict::Empty ? "empty" : "unknown"}, {"nodes", r.nodes}};
  j["window"] = r.empty_window ? to_json(*r.empty_window) : Json(nullptr);
  j["largest_window_checked"] = r.largest_window_checked ? to_json(*r.largest_window_checked) : Json(nullptr);
  if (!r.reason.empty()) j["reason"] = r.reason;
  emit(o, j);
  if (r.verdict == EmptinessResult::Verdict::Empty) return kNegative;
  return r.reason.empty() ? kPositive : kCap;
}

int cmd_perconfig(const Options& o) {
  WordSet t = load_word_set(read_json(o.input));
  auto r = periodic_config_search(t, PeriodVector(o.period), SearchLimits{o.node_limit});
  const char* status = r.status == PeriodicSearchResult::Status::Found  ? "found"
                       : r.status == PeriodicSearchResult::Status::None ? "none"
                                                                        : "aborted";
  Json j{{"status", status}, {"nodes", r.nodes}, {"periods", o.period}};
  if (r.status == PeriodicSearchResult::Status::Found) {
    j["cells"] = to_json(FiniteModule(PeriodVector(o.period)).cells());
    j["configuration"] = symbols_key(r.configuration);
  }
  emit(o, j);
  return r.status == PeriodicSearchResult::Status::Found ? kPositive
         : r.status == PeriodicSearchResult::Status::None ? kNegative
                                                          : kCap;
}

int cmd_fourier(const Options& o) {
  Measure mu = measure_from_json(read_json(o.input));
  emit(o, to_json(fourier_transform(mu)));
  return kPositive;
}

int cmd_entropy_metric(const Options& o) {
  Measure mu = measure_from_json(read_json(o.input));
  Json sets = Json::parse(o.sets);
  if (!sets.is_array() || sets.size() != 2) throw std::invalid_argument("--sets takes a JSON pair of domains");
  Domain u = domain_from_json(sets[0]), v = domain_from_json(sets[1]);
  emit(o, Json{{"approximate", true},
               {"distance", entropy_metric(mu, u, v)},
               {"h_first_given_second", conditional_entropy(mu, u, v)},
               {"h_second_given_first", conditional_entropy(mu, v, u)}});
  return kPositive;
}

std::vector<Rational> parse_distribution(const std::string& text, int alphabet) {
  if (text.empty()) return std::vector<Rational>(static_cast<std::size_t>(alphabet), Rational(1, alphabet));
  std::vector<Rational> rho;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) rho.push_back(parse_rational(item));
  return rho;
}

int cmd_corpus(const Options& o) {
  const std::string& n = o.corpus_name;
  if (n == "disconnected") {
    emit(o, to_json(disconnected_counterexample(o.alphabet, parse_distribution(o.rho, o.alphabet))));
  } else if (n == "pseudolattice") {
    emit(o, to_json(pseudolattice_measure()));
  } else if (n == "robinson") {
    if (o.reading != "distinct" && o.reading != "typo")
      throw std::invalid_argument("--reading must be 'distinct' or 'typo'");
    emit(o, to_json(robinson_tileset(o.reading == "distinct" ? RobinsonReading::DistinctLetter
                                                             : RobinsonReading::TypoForC)));
  } else if (n == "counter") {
    if (o.words)
      emit(o, to_json(binary_counter_words(o.bits)));
    else
      emit(o, to_json(binary_counter_measure(o.bits)));
  } else if (n == "eca") {
    emit(o, to_json(ca_to_sft(elementary_rule(o.rule), Domain::interval(-1, 1), 2)));
  } else {
    throw std::invalid_argument("unknown corpus entry '" + n + "' (disconnected, pseudolattice, robinson, counter, eca)");
  }
  return kPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally stationary measures: extension and refutation"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Options o;
  app.add_option("-o,--output", o.output, "Write JSON here instead of stdout");
  app.add_option("--pivot-limit", o.pivot_limit, "Simplex pivot limit")->check(CLI::PositiveNumber);
  app.add_option("--node-limit", o.node_limit, "Backtracking node limit")->check(CLI::PositiveNumber);

  auto input = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", o.input, what)->required();
  };
  auto schedule = [&](CLI::App* sub) {
    auto* mw = sub->add_option("--max-window", o.max_window, "Boxes of side 1..N (default 6)")->check(CLI::PositiveNumber);
    auto* ws = sub->add_option("--windows", o.windows, "JSON list of nested windows, inline or as a file");
    mw->excludes(ws);
  };

  auto* st = app.add_subcommand("stationary", "Check local stationarity");
  input(st, "Measure JSON ('-' for stdin)");
  st->add_flag("--signed", o.signed_input, "Accept signed masses");

  auto* mk = app.add_subcommand("markov", "Markov extension window and entropy");
  input(mk, "Measure JSON on a 1-D interval");
  mk->add_option("--window", o.window, "Window length N")->check(CLI::PositiveNumber);

  auto* pe = app.add_subcommand("periodic", "Periodic extension on a torus");
  input(pe, "Measure JSON");
  pe->add_option("--period", o.period, "Periods P1,...,PD")->delimiter(',')->required();
  pe->add_option("--max-configs", o.max_configs, "Cap on admissible torus configurations")->check(CLI::PositiveNumber);

  auto* rf = app.add_subcommand("refute", "Try to prove that no stationary extension exists");
  input(rf, "Measure JSON");
  schedule(rf);
  rf->add_option("--max-variables", o.max_variables, "Cap on window LP variables")->check(CLI::PositiveNumber);
  rf->add_option("--horizon", o.horizon, "Translation horizon for the entropy chain");

  auto* ti = app.add_subcommand("tiling", "Search for an empty window of a word set's subshift");
  input(ti, "Word-set JSON, or a measure for its support");
  schedule(ti);

  auto* pc = app.add_subcommand("perconfig", "Search for a periodic admissible configuration");
  input(pc, "Word-set JSON, or a measure for its support");
  pc->add_option("--period", o.period, "Periods P1,...,PD")->delimiter(',')->required();

  auto* fo = app.add_subcommand("fourier", "Fourier coefficients of a measure");
  input(fo, "Measure JSON");

  auto* em = app.add_subcommand("entropy-metric", "Entropy distance between two site sets");
  input(em, "Measure JSON");
  em->add_option("--sets", o.sets, "JSON pair of domains, e.g. [[[0]],[[3]]]")->required();

  auto* co = app.add_subcommand("corpus", "Emit a built-in instance");
  co->add_option("name", o.corpus_name, "disconnected | pseudolattice | robinson | counter | eca")->required();
  co->add_option("--alphabet", o.alphabet, "Alphabet size (disconnected)")->check(CLI::PositiveNumber);
  co->add_option("--rho", o.rho, "Single-site distribution p/q,... (disconnected; default uniform)");
  co->add_option("--reading", o.reading, "How to read the stray 'd': distinct | typo (robinson)");
  co->add_option("--bits", o.bits, "Counter width k (counter)")->check(CLI::PositiveNumber);
  co->add_flag("--words", o.words, "Emit the word set instead of the measure (counter)");
  co->add_option("--rule", o.rule, "Elementary rule number (eca)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*st) return cmd_stationary(o);
    if (*mk) return cmd_markov(o);
    if (*pe) return cmd_periodic(o);
    if (*rf) return cmd_refute(o);
    if (*ti) return cmd_tiling(o);
    if (*pc) return cmd_perconfig(o);
    if (*fo) return cmd_fourier(o);
    if (*em) return cmd_entropy_metric(o);
    if (*co) return cmd_corpus(o);
  } catch (const CapExceeded& e) {
    std::cerr << "cap reached: " << e.what() << "\n";
    return kCap;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
