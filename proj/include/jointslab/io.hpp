#pragma once

#include <string>

#include "jointslab/algorithms.hpp"
#include "jointslab/geometry.hpp"
#include "jointslab/interpolation.hpp"
#include "jointslab/polynomial.hpp"

namespace jointslab {

// JSON round trips. Parse errors surface as ParseError with a path-free
// message; the CLI attaches file names.
std::string line_collection_to_json(const LineCollection& c);
LineCollection line_collection_from_json(const std::string& text);

std::string joints_to_json(const LineCollection& c, const std::vector<JointRecord>& records);

std::string point_set_to_json(const FieldSpec& field, std::size_t n,
                              const std::set<Point>& points);
std::pair<FieldSpec, std::set<Point>> point_set_from_json(const std::string& text);

std::string polynomial_to_json(const MultivariatePolynomial& f);
MultivariatePolynomial polynomial_from_json(const FieldSpec& field, const std::string& text);

std::string peeling_trace_to_json(const PeelingTrace& trace);
std::string choice_assignment_to_json(const ChoiceAssignment& a);
std::string genericity_witness_to_json(const GenericityWitness& w);
std::string sampling_report_to_json(const SamplingReport& r);
std::string sampling_report_to_csv(const SamplingReport& r);
std::string slope_partition_to_json(const SlopePartitionReport& r);

// Writes via a temporary file in the same directory plus rename, so readers
// never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace jointslab
