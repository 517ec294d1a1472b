#include "cli/formats.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace mellin::cli {

namespace {

double read_double(std::string_view text, long line) {
  double value = 0.0;
  if (text == "inf" || text == "-inf" || text == "nan") {
    throw std::runtime_error("line " + std::to_string(line) + ": non-finite value");
  }
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::runtime_error("line " + std::to_string(line) + ": cannot parse '" +
                             std::string(text) + "' as a number");
  }
  return value;
}

long read_long(std::string_view text, long line) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::runtime_error("line " + std::to_string(line) + ": cannot parse '" +
                             std::string(text) + "' as an integer");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buffer{};
  const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer.data(), ptr);
}

void write_samples_csv(std::ostream& out, const SampleSet& samples, const std::string& generator) {
  out << "# generator=" << generator << '\n';
  out << "# sigma=" << format_double(samples.grid.sigma()) << '\n';
  out << "# gamma=" << format_double(samples.grid.gamma()) << '\n';
  if (samples.anchor_value) out << "# anchor_value=" << format_double(*samples.anchor_value) << '\n';
  if (samples.anchor_derivative) {
    out << "# anchor_derivative=" << format_double(*samples.anchor_derivative) << '\n';
  }
  out << "k,node,value\n";
  const long N = samples.grid.half_count();
  for (long k = -N; k <= N; ++k) {
    out << k << ',' << format_double(samples.grid.node(k)) << ','
        << format_double(samples.at(k)) << '\n';
  }
}

SampleSet read_samples_csv(std::istream& in) {
  std::map<std::string, double> header;
  std::vector<long> ks;
  std::vector<double> values;
  bool saw_columns = false;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    strip_cr(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(' '));
      if (key == "generator") continue;
      header[key] = read_double(std::string_view(line).substr(eq + 1), number);
      continue;
    }
    if (!saw_columns) {
      if (line != "k,node,value") {
        throw std::runtime_error("line " + std::to_string(number) +
                                 ": expected header 'k,node,value'");
      }
      saw_columns = true;
      continue;
    }
    const auto fields = split(line);
    if (fields.size() != 3) {
      throw std::runtime_error("line " + std::to_string(number) + ": expected 3 fields");
    }
    ks.push_back(read_long(fields[0], number));
    values.push_back(read_double(fields[2], number));
  }
  if (!saw_columns || ks.empty()) throw std::runtime_error("samples file has no data rows");
  if (ks.size() % 2 == 0) throw std::runtime_error("samples file needs an odd number of rows");
  const long N = static_cast<long>(ks.size() / 2);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] != static_cast<long>(i) - N) {
      throw std::runtime_error("samples file: k must run from -N to N in order");
    }
  }
  for (const char* key : {"sigma", "gamma"}) {
    if (!header.count(key)) {
      throw std::runtime_error(std::string("samples file: missing '# ") + key + "=' header");
    }
  }
  SampleSet out{ExponentialGrid(header["sigma"], header["gamma"], N), std::move(values),
                std::nullopt, std::nullopt};
  if (header.count("anchor_value")) out.anchor_value = header["anchor_value"];
  if (header.count("anchor_derivative")) out.anchor_derivative = header["anchor_derivative"];
  return out;
}

void write_nodes_csv(std::ostream& out, const std::vector<double>& nodes) {
  out << "k,t_k\n";
  const long M = static_cast<long>(nodes.size() / 2);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << (static_cast<long>(i) - M) << ',' << format_double(nodes[i]) << '\n';
  }
}

std::vector<double> read_nodes_csv(std::istream& in) {
  std::vector<long> ks;
  std::vector<double> nodes;
  std::string line;
  long number = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++number;
    strip_cr(line);
    if (line.empty() || line.front() == '#') continue;
    if (!saw_header) {
      saw_header = true;
      if (line == "k,t_k") continue;
    }
    const auto fields = split(line);
    if (fields.size() != 2) {
      throw std::runtime_error("line " + std::to_string(number) + ": expected 2 fields k,t_k");
    }
    ks.push_back(read_long(fields[0], number));
    nodes.push_back(read_double(fields[1], number));
  }
  if (nodes.empty()) throw std::runtime_error("nodes file has no data rows");
  const long M = static_cast<long>(nodes.size() / 2);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] != static_cast<long>(i) - M) {
      throw std::runtime_error("nodes file: k must run from -M to M in order");
    }
  }
  return nodes;
}

}  // namespace mellin::cli
