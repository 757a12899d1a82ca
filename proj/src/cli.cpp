#include "stlmon/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stlmon/bench.hpp"
#include "stlmon/chirp.hpp"

namespace stlmon {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    auto comma = line.find(',', pos);
    fields.push_back(trim(std::string_view(line).substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return fields;
}

bool parse_double(const std::string& text, double& out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

// Streams steps out of a `time,signal,value` CSV.
class StepReader {
 public:
  explicit StepReader(std::istream& in) : in_(in) {}

  /// False at end of input.
  bool next(Step& step) {
    std::string line;
    while (std::getline(in_, line)) {
      if (trim(line).empty()) continue;
      if (!header_seen_) {
        header_seen_ = true;
        auto h = split_commas(line);
        if (h != std::vector<std::string>{"time", "signal", "value"}) {
          throw CsvError(0, "expected header 'time,signal,value', found '" + trim(line) + "'");
        }
        continue;
      }
      ++row_;
      auto f = split_commas(line);
      if (f.size() != 3) {
        throw CsvError(row_, "expected 3 fields, found " + std::to_string(f.size()));
      }
      if (!parse_double(f[0], step.timestamp) || !std::isfinite(step.timestamp)) {
        throw CsvError(row_, "time '" + f[0] + "' is not a finite number");
      }
      if (f[1].empty()) throw CsvError(row_, "empty signal name");
      step.signal = f[1];
      if (!parse_double(f[2], step.value) || !std::isfinite(step.value)) {
        throw CsvError(row_, "value '" + f[2] + "' is not a finite number");
      }
      if (row_ > 1 && step.timestamp < last_time_) {
        throw CsvError(row_, "time " + format_number(step.timestamp) +
                                 " is lower than the previous row's " +
                                 format_number(last_time_));
      }
      last_time_ = step.timestamp;
      return true;
    }
    return false;
  }

  std::size_t row() const { return row_; }

 private:
  std::istream& in_;
  bool header_seen_ = false;
  std::size_t row_ = 0;
  double last_time_ = 0.0;
};

struct Overloaded {
  std::string operator()(bool b) const { return std::string("boolean,") + (b ? "true" : "false") + ","; }
  std::string operator()(double r) const { return "robustness," + format_number(r) + ","; }
  std::string operator()(ThreeValued v) const {
    return "three-valued," + std::string(to_string(v)) + ",";
  }
  std::string operator()(const RobustnessInterval& i) const {
    return "rosi," + format_number(i.lo) + "," + format_number(i.hi);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct FormulaOptions {
  std::string text;
  std::string file;
  std::vector<std::string> defines;

  void add_to(CLI::App* app) {
    auto* f = app->add_option("--formula", text, "STL formula text");
    auto* ff = app->add_option("--formula-file", file, "File holding the formula text");
    f->excludes(ff);
    app->add_option("--define", defines,
                    "Named subformula NAME=FORMULA, usable as a bare identifier");
  }

  Formula parse() const {
    FormulaEnvironment env;
    for (const auto& d : defines) {
      auto eq = d.find('=');
      if (eq == std::string::npos) throw Error("--define expects NAME=FORMULA, got '" + d + "'");
      env.define(trim(d.substr(0, eq)), parse_formula(d.substr(eq + 1), env));
    }
    const std::string source = file.empty() ? text : read_file(file);
    if (trim(source).empty()) throw Error("no formula given (use --formula or --formula-file)");
    return parse_formula(source, env);
  }
};

Variables parse_vars(const std::vector<std::string>& specs) {
  Variables vars;
  for (const auto& s : specs) {
    auto eq = s.find('=');
    double v = 0.0;
    if (eq == std::string::npos || !parse_double(trim(s.substr(eq + 1)), v)) {
      throw Error("--var expects NAME=VALUE, got '" + s + "'");
    }
    vars[trim(s.substr(0, eq))] = v;
  }
  return vars;
}

// Output goes to `out` for "-", to a file otherwise.
class Sink {
 public:
  Sink(const std::string& target, std::ostream& fallback) {
    if (target == "-" || target.empty()) {
      os_ = &fallback;
    } else {
      file_.open(target);
      if (!file_) throw Error("cannot write '" + target + "'");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

int run(const FormulaOptions& fo, const std::string& input, const std::string& semantics,
        const std::string& algorithm, const std::vector<std::string>& var_specs,
        const std::string& output, std::ostream& out, std::ostream& err) {
  Monitor monitor = Monitor::builder()
                        .formula(fo.parse())
                        .semantics(parse_semantics(semantics))
                        .algorithm(parse_algorithm(algorithm))
                        .variables(parse_vars(var_specs))
                        .build();
  std::ifstream file;
  std::istream* in = &std::cin;
  if (input != "-") {
    file.open(input);
    if (!file) throw Error("cannot open '" + input + "'");
    in = &file;
  }
  Sink sink(output, out);
  auto& os = sink.stream();
  os << kVerdictCsvHeader << '\n';
  StepReader reader(*in);
  Step step;
  while (reader.next(step)) {
    MonitorOutput result;
    try {
      result = monitor.update(step);
    } catch (const Error& e) {
      err << "error: row " << reader.row() << ": " << e.what() << '\n';
      return 2;
    }
    for (const auto& e : result.events) os << format_event_csv(e) << '\n';
  }
  return 0;
}

int check(const FormulaOptions& fo, std::ostream& out) {
  const auto f = fo.parse();
  out << "formula: " << format_formula(f) << '\n';
  out << "temporal depth: " << format_number(temporal_depth(f)) << '\n';
  out << "signals:";
  for (const auto& s : signal_names(f)) out << ' ' << s;
  out << "\nvariables:";
  for (const auto& v : free_variables(f)) out << " $" << v;
  out << '\n';
  return 0;
}

int chirp(const ChirpSpec& spec, const std::string& output, std::ostream& out) {
  Sink sink(output, out);
  auto& os = sink.stream();
  os << "time,signal,value\n";
  for (const auto& s : generate_chirp(spec)) {
    os << format_number(s.timestamp) << ',' << s.signal << ',' << format_number(s.value) << '\n';
  }
  return 0;
}

struct BenchOptions {
  std::string suite = "paper";
  std::size_t samples = 20000;
  std::size_t runs = 50;
  std::string semantics = "all";
  std::string algorithm = "incremental";
  std::string filter;
  std::string report = "bench_report.json";
};

int bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  SuitePart part = SuitePart::All;
  if (o.suite == "table") {
    part = SuitePart::Table;
  } else if (o.suite == "sweep") {
    part = SuitePart::Sweep;
  } else if (o.suite != "paper") {
    throw Error("unknown suite '" + o.suite + "' (expected paper, table or sweep)");
  }
  std::optional<Semantics> only;
  if (o.semantics != "all") only = parse_semantics(o.semantics);
  const auto algorithm = parse_algorithm(o.algorithm);

  ChirpSpec spec;
  spec.duration = static_cast<double>(o.samples) / spec.sample_rate;
  const auto trace = generate_chirp(spec);

  std::vector<BenchResult> results;
  for (const auto& c : paper_suite(part, only)) {
    if (!o.filter.empty() && c.name.find(o.filter) == std::string::npos) continue;
    results.push_back(run_bench(c, trace, o.runs, algorithm));
    err << c.name << ' ' << to_string(c.semantics) << ": "
        << format_number(results.back().per_sample_mean) << " us/sample\n";
  }
  out << bench_table(results);
  Sink sink(o.report, out);
  sink.stream() << bench_report_json(results);
  return 0;
}

}  // namespace

std::vector<Step> read_steps_csv(std::istream& in) {
  StepReader reader(in);
  std::vector<Step> steps;
  Step step;
  while (reader.next(step)) steps.push_back(step);
  return steps;
}

std::string format_event_csv(const Event& e) {
  return format_number(e.time) + "," + std::visit(Overloaded{}, e.verdict.value()) + "," +
         (e.final ? "true" : "false");
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Online STL monitoring over CSV traces"};
  app.require_subcommand(1);

  FormulaOptions run_formula;
  std::string input = "-";
  std::string semantics = "delayed-quantitative";
  std::string algorithm = "incremental";
  std::vector<std::string> vars;
  std::string output = "-";
  auto* run_cmd = app.add_subcommand("run", "Monitor a CSV trace and print verdict rows");
  run_formula.add_to(run_cmd);
  run_cmd->add_option("--input", input, "Input CSV with header time,signal,value ('-' = stdin)");
  run_cmd->add_option("--semantics", semantics,
                      "delayed-quantitative|delayed-qualitative|eager-qualitative|rosi");
  run_cmd->add_option("--algorithm", algorithm, "incremental|naive");
  run_cmd->add_option("--var", vars, "Variable binding NAME=VALUE (repeatable)");
  run_cmd->add_option("--output", output, "Verdict CSV path ('-' = stdout)");

  FormulaOptions check_formula;
  auto* check_cmd = app.add_subcommand("check", "Parse a formula and print its canonical form");
  check_formula.add_to(check_cmd);

  ChirpSpec spec;
  std::string chirp_output = "-";
  auto* chirp_cmd = app.add_subcommand("chirp", "Write the benchmark chirp trace as CSV");
  chirp_cmd->add_option("--f0", spec.f0, "Start frequency in Hz");
  chirp_cmd->add_option("--f1", spec.f1, "End frequency in Hz");
  chirp_cmd->add_option("--duration", spec.duration, "Duration in seconds");
  chirp_cmd->add_option("--rate", spec.sample_rate, "Sample rate in Hz");
  chirp_cmd->add_option("--output", chirp_output, "CSV path ('-' = stdout)");

  BenchOptions bo;
  auto* bench_cmd = app.add_subcommand("bench", "Time the chirp benchmark suite");
  bench_cmd->add_option("--suite", bo.suite, "paper (everything), table (phi1-phi3) or sweep");
  bench_cmd->add_option("--samples", bo.samples, "Chirp samples at 1 Hz");
  bench_cmd->add_option("--runs", bo.runs, "Timed runs per case");
  bench_cmd->add_option("--semantics", bo.semantics, "all or one semantics tag");
  bench_cmd->add_option("--algorithm", bo.algorithm, "incremental|naive");
  bench_cmd->add_option("--filter", bo.filter, "Only cases whose name contains this text");
  bench_cmd->add_option("--report", bo.report, "JSON report path ('-' = stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) return run(run_formula, input, semantics, algorithm, vars, output, out, err);
    if (*check_cmd) return check(check_formula, out);
    if (*chirp_cmd) return chirp(spec, chirp_output, out);
    if (*bench_cmd) return bench(bo, out, err);
  } catch (const SyntaxError& e) {
    err << "error: formula " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace stlmon
