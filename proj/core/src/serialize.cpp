#include "graphsig/serialize.hpp"

#include <fstream>
#include <string>

#include "graphsig/error.hpp"

namespace graphsig {

nlohmann::json descriptor_to_json(const BankDescriptor& d) {
  nlohmann::json j;
  j["kind"] = d.kind;
  j["lmax"] = d.lmax;
  j["params"] = nlohmann::json::object();
  for (const auto& [key, value] : d.params) j["params"][key] = value;
  if (!d.eigenvalues.empty()) j["eigenvalues"] = d.eigenvalues;
  return j;
}

BankDescriptor descriptor_from_json(const nlohmann::json& j) {
  BankDescriptor d;
  try {
    d.kind = j.at("kind").get<std::string>();
    d.lmax = j.at("lmax").get<double>();
    if (j.contains("params"))
      for (const auto& [key, value] : j.at("params").items()) d.params[key] = value.get<double>();
    if (j.contains("eigenvalues")) d.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("filter bank descriptor: ") + e.what());
  }
  return d;
}

nlohmann::json bank_to_json(const FilterBank& fb) {
  if (fb.descriptor().kind == "custom")
    throw Error(ErrorCode::NotSerializable, "custom filter banks have no descriptor");
  return descriptor_to_json(fb.descriptor());
}

FilterBank bank_from_json(const nlohmann::json& j) { return design(descriptor_from_json(j)); }

nlohmann::json report_to_json(const SolverReport& report) {
  return {{"iterations", report.iterations},
          {"objective", report.objective},
          {"residual", report.residual},
          {"converged", report.converged},
          {"objective_history", report.objective_history}};
}

SolverReport report_from_json(const nlohmann::json& j) {
  SolverReport r;
  try {
    r.iterations = j.at("iterations").get<int>();
    r.objective = j.at("objective").get<double>();
    r.residual = j.at("residual").get<double>();
    r.converged = j.at("converged").get<bool>();
    r.objective_history = j.value("objective_history", std::vector<double>{});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("solver report: ") + e.what());
  }
  return r;
}

nlohmann::json read_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + file.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, file.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& file, const nlohmann::json& j) {
  std::ofstream out(file);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + file.string() + "'");
  out << j.dump(2) << '\n';
}

}  // namespace graphsig
