#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace atm {

/// Degrees of adversarial control or visibility over an asset.
/// The first four are read (confidentiality) capabilities, the next four are
/// write (integrity) capabilities, and Withhold covers availability.
enum class Capability : std::uint8_t {
  Inspect,
  PartiallyInspect,
  IndirectlyInspect,
  Monitor,
  MakeArbitraryChanges,
  MakeLimitedChanges,
  Influence,
  Contribute,
  Withhold,
};

inline constexpr std::size_t kCapabilityCount = 9;

enum class CiaClass : std::uint8_t { Confidentiality, Integrity, Availability };

/// How a capability crosses an edge between two assets.
/// ComponentPart: the source is a modifiable region of the target.
/// ComponentFeed: the source is additively incorporated into the target.
/// Dependency: the target is derived from the source.
/// Leak: the source's content can be inferred by observing the target... and
///       vice versa; the edge declares an inference channel source -> target.
/// Relationship: the same data crossing a stage or agent boundary.
enum class EdgeMode : std::uint8_t {
  ComponentPart,
  ComponentFeed,
  Dependency,
  Leak,
  Relationship,
};

inline constexpr std::size_t kEdgeModeCount = 5;

constexpr std::array<Capability, kCapabilityCount> all_capabilities() {
  return {Capability::Inspect,
          Capability::PartiallyInspect,
          Capability::IndirectlyInspect,
          Capability::Monitor,
          Capability::MakeArbitraryChanges,
          Capability::MakeLimitedChanges,
          Capability::Influence,
          Capability::Contribute,
          Capability::Withhold};
}

constexpr std::array<EdgeMode, kEdgeModeCount> all_edge_modes() {
  return {EdgeMode::ComponentPart, EdgeMode::ComponentFeed, EdgeMode::Dependency,
          EdgeMode::Leak, EdgeMode::Relationship};
}

/// True iff holding `stronger` implicitly grants `weaker`.
/// Reflexive, antisymmetric, and transitive over the nine capabilities.
bool implies(Capability stronger, Capability weaker);

/// The capability obtained over an edge's target given `cap` over its source.
/// nullopt means the capability does not cross edges of this mode.
std::optional<Capability> degrade(Capability cap, EdgeMode mode);

CiaClass cia_class(Capability cap);

std::string_view to_string(Capability cap);
std::string_view to_string(CiaClass cls);
std::string_view to_string(EdgeMode mode);
std::optional<Capability> parse_capability(std::string_view text);
std::optional<EdgeMode> parse_edge_mode(std::string_view text);

/// One of the eight canonical AI asset kinds, or a namespaced custom kind for
/// case-study assets that do not map onto the canonical set.
class AssetKind {
 public:
  enum class Canonical : std::uint8_t {
    Inputs,
    Outputs,
    OutputDetails,
    Dataset,
    ModelParameters,
    ValidationCriteria,
    ValidationResults,
    Hyperparameters,
  };

  static constexpr std::size_t kCanonicalCount = 8;

  AssetKind() : canonical_(Canonical::Inputs) {}
  AssetKind(Canonical c) : canonical_(c) {}  // NOLINT: implicit by design

  /// Custom kinds carry a non-empty namespace and name; "core" is reserved.
  /// Throws std::invalid_argument on violation.
  static AssetKind custom(std::string ns, std::string name);

  /// Parses either a canonical kebab-case name or "namespace:name".
  static std::optional<AssetKind> parse(std::string_view text);

  bool is_custom() const { return !canonical_.has_value(); }
  std::optional<Canonical> canonical() const { return canonical_; }
  const std::string& custom_namespace() const { return ns_; }
  const std::string& custom_name() const { return name_; }

  std::string to_string() const;
  /// Human-facing title, e.g. "Output Details"; custom kinds render verbatim.
  std::string display_name() const;

  friend bool operator==(const AssetKind&, const AssetKind&) = default;
  friend auto operator<=>(const AssetKind&, const AssetKind&) = default;

 private:
  std::optional<Canonical> canonical_;
  std::string ns_;
  std::string name_;
};

constexpr std::array<AssetKind::Canonical, AssetKind::kCanonicalCount>
all_canonical_kinds() {
  using C = AssetKind::Canonical;
  return {C::Inputs,           C::Outputs,           C::OutputDetails,
          C::Dataset,          C::ModelParameters,   C::ValidationCriteria,
          C::ValidationResults, C::Hyperparameters};
}

}  // namespace atm
