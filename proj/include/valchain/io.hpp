#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "valchain/chains.hpp"

namespace valchain {

using Json = nlohmann::ordered_json;

/// Malformed input; `location` is a JSON pointer into the document (or the
/// file path when the document itself does not parse).
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(location) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

inline constexpr int kFormatVersion = 1;

Json to_json(const BaseField& field);
Json to_json(const ContinuousFamily& family);
Json to_json(const Step& step);
Json to_json(const MLVChain& chain);
Json to_json(const ABKPSequence& seq);
Json to_json(const ValidationReport& report);

BaseField field_from_json(const Json& j);
MLVChain chain_from_json(const Json& j);
ABKPSequence sequence_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
MLVChain read_chain_file(const std::filesystem::path& path);
ABKPSequence read_sequence_file(const std::filesystem::path& path);

}  // namespace valchain
