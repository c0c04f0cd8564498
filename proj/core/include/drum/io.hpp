#pragma once

#include <string>

#include "drum/axioms.hpp"
#include "drum/feasibility.hpp"
#include "drum/pooling.hpp"
#include "drum/rationality.hpp"

namespace drum {

/// Parses a dataset from its JSON text, builds the per-period patch sets and
/// validates the probabilities. All rationals are "num/den" strings (plain
/// integers are accepted); floating-point literals are rejected.
StochasticChoice parse_dataset(const std::string& json_text);

StochasticChoice load_dataset(const std::string& path);

std::string dataset_json(const StochasticChoice& data);
void save_dataset(const StochasticChoice& data, const std::string& path);

/// The patch layout of one period: budgets, patch sign vectors,
/// representatives and the dominance pairs.
std::string patches_json(const PatchSet& ps);

/// Sparse triplet export of the 0/1 system with row/column legends.
std::string matrix_json(const ProfileMatrix& m);

/// The test outcome with its witness or certificate, ready to write next to
/// the dataset.
std::string verdict_json(const ProfileMatrix& m, const FeasibilityResult& res);

std::string axiom_report_json(const AxiomReport& report);

std::string slice_json(const Slice& s);

std::string static_rum_json(const StaticRumResult& res);

std::string sarpd_json(const SarpdResult& res);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace drum
