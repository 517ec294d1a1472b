#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mellin/regular_sampling.hpp"

namespace mellin::cli {

/// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

/// Samples CSV: '# key=value' header lines (generator, sigma, gamma,
/// anchor_value, anchor_derivative), then 'k,node,value'.
void write_samples_csv(std::ostream& out, const SampleSet& samples, const std::string& generator);
/// Throws std::runtime_error on malformed input (message names the line).
SampleSet read_samples_csv(std::istream& in);

/// Nodes CSV: 'k,t_k' with k = -M..M in order.
void write_nodes_csv(std::ostream& out, const std::vector<double>& nodes);
std::vector<double> read_nodes_csv(std::istream& in);

}  // namespace mellin::cli
