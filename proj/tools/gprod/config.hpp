#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gprod/cocycle_lab.hpp>
#include <gprod/invariants.hpp>

namespace gprod::cli {

/// Config ingestion failure; the message carries the file and field path.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct GroupSpec {
  GroupKind kind = GroupKind::integers;
  std::int64_t order = 0;  // cyclic
  std::vector<std::string> elements;               // table
  std::vector<std::vector<std::string>> table;     // table
  std::vector<std::string> generators;             // table
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct CocycleSpec {
  enum class Kind { translation, regular, padded };
  Kind kind = Kind::translation;
  Rational scale = 1;                    // regular, padded
  std::shared_ptr<const CocycleSpec> base;  // padded
  friend bool operator==(const CocycleSpec& a, const CocycleSpec& b);
};

struct VertexSpec {
  std::string name;
  GroupSpec group;
  std::optional<CocycleSpec> cocycle;
  std::optional<std::uint64_t> adim;
  std::optional<double> alpha;
  friend bool operator==(const VertexSpec&, const VertexSpec&) = default;
};

struct ProductConfig {
  double p = 2.0;
  std::vector<VertexSpec> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  friend bool operator==(const ProductConfig&, const ProductConfig&) = default;
};

/// Parses and validates; `source` prefixes error messages.
ProductConfig parse_config(const std::string& text, const std::string& source = "config");
ProductConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const ProductConfig& config);

/// Everything a command needs, built from a validated config.
struct Loaded {
  ProductConfig config;
  SimplicialGraph graph;
  std::vector<VertexGroup> groups;
  ProductAction action;

  const GraphProduct& product() const { return action.product(); }
  std::vector<GroupOrder> orders() const;
  /// Declared adims; default 1 for ℤ and 0 for finite groups.
  std::vector<std::uint64_t> adims() const;
  /// Declared alphas; default 1.
  std::vector<double> alphas() const;
};

Loaded build(const ProductConfig& config);

}  // namespace gprod::cli
