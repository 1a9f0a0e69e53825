#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hamdec/instance_gen.hpp"
#include "hamdec/orchestrator.hpp"

namespace hamdec::cli {

// Unreadable, unwritable or malformed files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"n": 6, "directed": false, "x": [1, ...], "y": [1, ...]}
nlohmann::json instance_to_json(const HamCycle& x, const HamCycle& y);
Instance instance_from_json(const nlohmann::json& doc);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const HamCycle& x,
                   const HamCycle& y);

// {"z": [...], "w": [...]}
void save_witness(const std::filesystem::path& path, const Witness& witness);

// Reads a witness and re-validates it against the instance: both cycles must
// use exactly the multigraph's edges and differ from {x, y}. Throws IoError
// on unreadable files and InputError on an invalid witness.
Witness load_witness(const std::filesystem::path& path,
                     const Instance& instance);

nlohmann::json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace hamdec::cli
