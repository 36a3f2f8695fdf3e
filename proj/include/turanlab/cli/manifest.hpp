#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include <json.hpp>

#include "turanlab/version.hpp"

// Record of one CLI run: arguments, seeds, and SHA-256 digests of what was read
// and written. Needs OpenSSL's libcrypto.

namespace turanlab {

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

inline std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Digest {
  std::string name;
  std::string sha256;
  bool operator==(const Digest&) const = default;
};

struct RunManifest {
  std::vector<std::string> command_line;
  std::vector<std::uint64_t> seeds;
  std::vector<Digest> inputs;
  std::vector<Digest> outputs;
  std::string tool_version = kToolVersion;
  std::string timestamp;

  void add_input_file(const std::string& path) { inputs.push_back({path, sha256_hex(read_file_bytes(path))}); }
  void add_output(const std::string& name, const std::string& bytes) { outputs.push_back({name, sha256_hex(bytes)}); }

  // True when every input file still hashes to its recorded digest.
  bool inputs_unchanged() const {
    for (const auto& d : inputs)
      if (sha256_hex(read_file_bytes(d.name)) != d.sha256) return false;
    return true;
  }

  nlohmann::ordered_json to_json() const {
    auto digests = [](const std::vector<Digest>& ds) {
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& d : ds) out.push_back({{"name", d.name}, {"sha256", d.sha256}});
      return out;
    };
    return {{"tool_version", tool_version}, {"timestamp", timestamp}, {"command_line", command_line},
            {"seeds", seeds},               {"inputs", digests(inputs)}, {"outputs", digests(outputs)}};
  }
};

}  // namespace turanlab
