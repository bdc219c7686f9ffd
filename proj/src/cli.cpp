#include "tmdiff/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tmdiff/autocorrelation.hpp"
#include "tmdiff/distribution.hpp"
#include "tmdiff/grid_function.hpp"
#include "tmdiff/periodogram.hpp"
#include "tmdiff/riesz.hpp"
#include "tmdiff/verify.hpp"

namespace tmdiff::cli {
namespace {

struct CommandInfo {
  const char *name;
  Command command;
  const char *description;
};

constexpr CommandInfo kCommands[] = {
    {"eta", Command::Eta, "exact autocorrelation coefficients eta(0..M)"},
    {"wiener", Command::Wiener, "Wiener sums for N = 2, 4, ..., M and the log-log decay fit"},
    {"distfn", Command::Distfn, "distribution function from the Fourier series truncated at M"},
    {"volterra", Command::Volterra, "level-n Volterra coefficients and sampled iterate"},
    {"riesz", Command::Riesz, "sampled level-n Riesz product density"},
    {"periodogram", Command::Periodogram, "periodogram of the length-N prefix and its cumulative distribution"},
    {"verify", Command::Verify, "cross-validation and invariant checks; exit 2 if any fails"},
    {"figure", Command::Figure, "SVG plot of the level-n iterate on [0,1]"}};

std::string dump(const nlohmann::ordered_json &j) { return j.dump(2) + "\n"; }

std::string render_eta(const RunConfig &c) {
  const EtaTable table(c.truncation);
  if (c.effective_format() == OutputFormat::Json) return dump(eta_json(table, c.precision));
  std::ostringstream out;
  write_eta_csv(out, table, c.precision);
  return out.str();
}

std::string render_wiener(const RunConfig &c) {
  std::vector<std::int64_t> windows;
  for (std::int64_t n = 2; n <= c.truncation; n *= 2) windows.push_back(n);
  const DecayFit fit = wiener_average_decay(windows);
  if (c.effective_format() == OutputFormat::Json) return dump(wiener_json(fit));
  std::ostringstream out;
  write_wiener_csv(out, fit);
  return out.str();
}

std::string render_distribution(const FourierDistribution &dist, const RunConfig &c) {
  const auto samples = GridFunction::sample(dist, c.grid_size);
  if (c.effective_format() == OutputFormat::Json) {
    auto j = samples_json(samples, dist.label().describe());
    if (dist.label().kind == Construction::Volterra) j["coefficients"] = coefficients_json(dist.coefficients(), c.precision);
    return dump(j);
  }
  std::ostringstream out;
  if (dist.label().kind == Construction::Volterra) {
    write_coefficients_csv(out, dist.coefficients(), c.precision);
    out << '\n';
  }
  write_samples_csv(out, samples);
  return out.str();
}

std::string render_riesz(const RunConfig &c) {
  const RieszDensity density(c.level);
  const auto samples = GridFunction::sample(c.grid_size, [&](double x) { return density(x); });
  if (c.effective_format() == OutputFormat::Json) return dump(samples_json(samples, "riesz n=" + std::to_string(c.level)));
  std::ostringstream out;
  write_samples_csv(out, samples);
  return out.str();
}

std::string render_periodogram(const RunConfig &c, const ResourceCaps &caps) {
  // 4x oversampled frequency grid, reduced toward N when it would exceed the grid cap
  std::int64_t p_grid = c.word_length;
  while (p_grid < 4 * c.word_length && 2 * p_grid <= caps.max_grid_size) p_grid *= 2;
  while (p_grid < c.grid_size) p_grid *= 2;
  const Periodogram p = periodogram(c.word_length, p_grid, caps);
  const EmpiricalDistribution empirical(p);
  const auto samples = GridFunction::sample(c.grid_size, [&](double x) { return empirical(x); });
  if (c.effective_format() == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["word_length"] = p.word_length;
    j["frequency_grid"] = p.grid_size;
    j["intensity"] = p.intensities;
    j["empirical"] = samples_json(samples, "empirical N=" + std::to_string(c.word_length));
    return dump(j);
  }
  std::ostringstream out;
  write_periodogram_csv(out, p);
  out << '\n';
  write_samples_csv(out, samples);
  return out.str();
}

std::string render_figure(const RunConfig &c, const ResourceCaps &caps) {
  const auto samples = GridFunction::sample(volterra_distribution(c.level, caps), c.grid_size);
  SvgOptions options;
  options.title = "Thue-Morse diffraction distribution function (level " + std::to_string(c.level) + ")";
  return render_distribution_svg(samples, options);
}

}  // namespace

OutputFormat RunConfig::effective_format() const {
  if (format) return *format;
  return command == Command::Figure ? OutputFormat::Svg : OutputFormat::Csv;
}

void validate(const RunConfig &c, const ResourceCaps &caps) {
  const OutputFormat format = c.effective_format();
  if (format == OutputFormat::Svg && c.command != Command::Figure) {
    throw std::invalid_argument("svg output is only available for the figure command");
  }
  if (c.command == Command::Figure && format != OutputFormat::Svg) {
    throw std::invalid_argument("figure only writes svg");
  }
  if (c.truncation < 0) throw std::invalid_argument("--max must be >= 0");
  if (c.level < 0) throw std::invalid_argument("--level must be >= 0");
  if (c.word_length < 1) throw std::invalid_argument("--length must be >= 1");
  if (c.grid_size < 2) throw std::invalid_argument("--grid must be >= 2");
  if (c.command == Command::Wiener && c.truncation < 8) {
    throw std::invalid_argument("wiener needs --max >= 8 for a three-point fit");
  }
  if ((c.command == Command::Periodogram || c.command == Command::Verify) &&
      (c.word_length & (c.word_length - 1)) != 0) {
    throw std::invalid_argument("--length must be a power of two");
  }
  if (c.command == Command::Verify && c.grid_size % 2 != 0) throw std::invalid_argument("--grid must be even for verify");

  check_cap(c.truncation, caps.max_truncation, "truncation order");
  check_cap(c.level, caps.max_level, "Volterra level");
  check_cap(c.word_length, caps.max_word_length, "word length");
  check_cap(c.grid_size, caps.max_grid_size, "grid size");
}

int run(const RunConfig &c, std::ostream &out, std::ostream &err, const ResourceCaps &caps) {
  std::string payload;
  int status = kSuccess;
  try {
    validate(c, caps);
    switch (c.command) {
      case Command::Eta: payload = render_eta(c); break;
      case Command::Wiener: payload = render_wiener(c); break;
      case Command::Distfn:
        payload = render_distribution(fourier_distribution(c.truncation, EtaTable(c.truncation)), c);
        break;
      case Command::Volterra: payload = render_distribution(volterra_distribution(c.level, caps), c); break;
      case Command::Riesz: payload = render_riesz(c); break;
      case Command::Periodogram: payload = render_periodogram(c, caps); break;
      case Command::Figure: payload = render_figure(c, caps); break;
      case Command::Verify: {
        const auto results = run_verification({c.truncation, c.level, c.word_length, c.grid_size}, caps);
        payload = c.effective_format() == OutputFormat::Json ? dump(verification_json(results))
                                                              : verification_text(results);
        for (const auto &r : results) {
          if (!r.passed) status = kVerificationFailure;
        }
        break;
      }
    }
  } catch (const ResourceCapError &e) {
    err << "tmdiff: " << e.what() << '\n';
    return kResourceCap;
  } catch (const std::invalid_argument &e) {
    err << "tmdiff: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception &e) {
    err << "tmdiff: " << e.what() << '\n';
    return kUsageError;
  }

  if (c.output_path.empty()) {
    out << payload;
  } else {
    std::ofstream file(c.output_path, std::ios::binary);
    if (!file) {
      err << "tmdiff: cannot open " << c.output_path << '\n';
      return kUsageError;
    }
    file << payload;
  }
  return status;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Thue-Morse diffraction measure: autocorrelation, distribution function, oracles", "tmdiff"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format;
  std::string precision = "exact";

  for (const auto &[name, command, description] : kCommands) {
    auto *sub = app.add_subcommand(name, description);
    sub->add_option("--max,-M", config.truncation, "eta lags / Fourier truncation order / largest Wiener window");
    sub->add_option("--level,-n", config.level, "Volterra iteration level or Riesz level");
    sub->add_option("--length,-N", config.word_length, "word length for the periodogram route");
    sub->add_option("--grid,-g", config.grid_size, "number of grid intervals on [0,1]");
    sub->add_option("--format,-f", format, "csv, json or svg")->check(CLI::IsMember({"csv", "json", "svg"}));
    sub->add_option("--out,-o", config.output_path, "output file (default: standard output)");
    sub->add_option("--precision", precision, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sub->callback([&config, command = command] { config.command = command; });
  }

  // CLI11 parses in reverse order from a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError &e) {
    err << "tmdiff: " << e.what() << '\n';
    return kUsageError;
  }

  if (format == "csv") config.format = OutputFormat::Csv;
  if (format == "json") config.format = OutputFormat::Json;
  if (format == "svg") config.format = OutputFormat::Svg;
  config.precision = precision == "float" ? PrecisionMode::Float : PrecisionMode::Exact;

  ResourceCaps caps;
  try {
    caps = ResourceCaps::from_environment();
  } catch (const std::exception &e) {
    err << "tmdiff: " << e.what() << '\n';
    return kUsageError;
  }
  return run(config, out, err, caps);
}

}  // namespace tmdiff::cli
