#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>

#include "graphsig/filters.hpp"
#include "graphsig/optimize.hpp"

namespace graphsig {

/// {"kind", "lmax", "params", "eigenvalues"?}. Custom banks throw NotSerializable.
nlohmann::json bank_to_json(const FilterBank& fb);
/// Rebuilds the bank through design(); ParseError on malformed input.
FilterBank bank_from_json(const nlohmann::json& j);

nlohmann::json descriptor_to_json(const BankDescriptor& d);
BankDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const SolverReport& report);
SolverReport report_from_json(const nlohmann::json& j);

/// Reads a JSON file; IoError when missing, ParseError when malformed.
nlohmann::json read_json(const std::filesystem::path& file);
void write_json(const std::filesystem::path& file, const nlohmann::json& j);

}  // namespace graphsig
