#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mellin::cli {

enum class Command { Coeffs, Sample, Reconstruct, BoasDiff, ValidateNodes, Convolve, Bench };
enum class Method { WeakShannon, Valiron, DiffQuot, Higgins, Seip };
enum class BenchTarget { Reconstruct, BoasDiff, Convolve };

/// Rejected command line; the message names the offending option.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FunctionSpec {
  std::string generator = "fejer";  // fejer, wave, shifted, combo, constant
  double sigma = 3.141592653589793;
  double lebesgue_index = 2.0;
  double shift = 0.0;
  std::vector<double> weights{1.0, -0.5};
  std::vector<double> shifts{-0.5, 0.75};
  double value = 1.0;
};

/// tau in [start, stop], `count` points uniform in ln tau.
struct TauGrid {
  double start = 0.368;
  double stop = 2.718;
  long count = 101;

  std::vector<double> points() const;
};

TauGrid parse_grid(const std::string& text);
std::vector<double> parse_list(const std::string& text, const std::string& field);

struct RunConfig {
  Command command = Command::Reconstruct;
  FunctionSpec function;
  bool function_given = false;
  FunctionSpec test;  // pairing partner g / convolution kernel h
  Method method = Method::WeakShannon;
  BenchTarget bench_target = BenchTarget::Reconstruct;

  double gamma = 0.5;
  bool gamma_given = false;
  std::vector<double> bench_gammas;
  long N = 256;
  long K = 512;
  int r = 1;
  std::optional<double> sigma_op;
  bool power = false;
  long max_k = 100;
  double delta = 0.5;
  double perturbation = 0.0;
  std::vector<long> sweep{64, 128, 256, 512, 1024};

  std::string input;
  std::string output;
  std::string table;
  TauGrid grid;
  double tolerance = 1e-9;
};

/// Parses argv. `--help` output goes to `help_text` with `help_requested`
/// set. Throws ConfigError for anything invalid.
struct ParseResult {
  RunConfig config;
  bool help_requested = false;
  std::string help_text;
};

ParseResult parse_command_line(int argc, const char* const* argv);

/// Applies MELLIN_QUAD_TOL when --tolerance was not given.
double resolve_tolerance(std::optional<double> flag);

const char* to_string(Command command);
const char* to_string(Method method);

}  // namespace mellin::cli
