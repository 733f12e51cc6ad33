#include "atm/taxonomy.hpp"

#include <stdexcept>

namespace atm {
namespace {

constexpr std::size_t index(Capability c) { return static_cast<std::size_t>(c); }
constexpr std::size_t index(EdgeMode m) { return static_cast<std::size_t>(m); }

// Reflexive-transitive closure of the implication generators:
//   Inspect > PartiallyInspect > IndirectlyInspect > Monitor
//   MakeArbitraryChanges > MakeLimitedChanges > {Influence, Contribute}
//   MakeArbitraryChanges > Withhold
// Influence and Contribute are incomparable; no read/write cross-implications.
// Row = stronger, column = weaker; order matches the Capability enum.
constexpr bool kImplies[kCapabilityCount][kCapabilityCount] = {
    // In  PI  II  Mon MAC MLC Inf Con Wh
    {1, 1, 1, 1, 0, 0, 0, 0, 0},  // Inspect
    {0, 1, 1, 1, 0, 0, 0, 0, 0},  // PartiallyInspect
    {0, 0, 1, 1, 0, 0, 0, 0, 0},  // IndirectlyInspect
    {0, 0, 0, 1, 0, 0, 0, 0, 0},  // Monitor
    {0, 0, 0, 0, 1, 1, 1, 1, 1},  // MakeArbitraryChanges
    {0, 0, 0, 0, 0, 1, 1, 1, 0},  // MakeLimitedChanges
    {0, 0, 0, 0, 0, 0, 1, 0, 0},  // Influence
    {0, 0, 0, 0, 0, 0, 0, 1, 0},  // Contribute
    {0, 0, 0, 0, 0, 0, 0, 0, 1},  // Withhold
};

constexpr std::int8_t kAbsent = -1;

// Capability obtained over the target per edge mode. Rows follow the EdgeMode
// enum, columns the Capability enum. -1 means the capability does not cross.
constexpr std::int8_t kDegrade[kEdgeModeCount][kCapabilityCount] = {
    // In  PI  II  Mon MAC MLC Inf Con Wh
    {1, 1, 2, 3, 5, 5, 6, 7, 6},                  // ComponentPart
    {1, 1, 2, 3, 7, 7, 6, 7, 6},                  // ComponentFeed
    {-1, -1, -1, -1, 6, 6, 6, 6, 8},              // Dependency
    {2, 2, 2, -1, -1, -1, -1, -1, -1},            // Leak
    {0, 1, 2, 3, 4, 5, 6, 7, 8},                  // Relationship (identity)
};

constexpr CiaClass kCia[kCapabilityCount] = {
    CiaClass::Confidentiality, CiaClass::Confidentiality,
    CiaClass::Confidentiality, CiaClass::Confidentiality,
    CiaClass::Integrity,       CiaClass::Integrity,
    CiaClass::Integrity,       CiaClass::Integrity,
    CiaClass::Availability,
};

constexpr std::string_view kCapabilityNames[kCapabilityCount] = {
    "inspect",
    "partially-inspect",
    "indirectly-inspect",
    "monitor",
    "make-arbitrary-changes",
    "make-limited-changes",
    "influence",
    "contribute",
    "withhold",
};

constexpr std::string_view kEdgeModeNames[kEdgeModeCount] = {
    "component-part", "component-feed", "dependency", "leak", "relationship",
};

constexpr std::string_view kKindNames[AssetKind::kCanonicalCount] = {
    "inputs",
    "outputs",
    "output-details",
    "dataset",
    "model-parameters",
    "validation-criteria",
    "validation-results",
    "hyperparameters",
};

constexpr std::string_view kKindTitles[AssetKind::kCanonicalCount] = {
    "Inputs",
    "Outputs",
    "Output Details",
    "Dataset",
    "Model Parameters",
    "Validation Criteria",
    "Validation Results",
    "Hyperparameters",
};

}  // namespace

bool implies(Capability stronger, Capability weaker) {
  return kImplies[index(stronger)][index(weaker)];
}

std::optional<Capability> degrade(Capability cap, EdgeMode mode) {
  const std::int8_t out = kDegrade[index(mode)][index(cap)];
  if (out == kAbsent) return std::nullopt;
  return static_cast<Capability>(out);
}

CiaClass cia_class(Capability cap) { return kCia[index(cap)]; }

std::string_view to_string(Capability cap) { return kCapabilityNames[index(cap)]; }

std::string_view to_string(CiaClass cls) {
  switch (cls) {
    case CiaClass::Confidentiality: return "confidentiality";
    case CiaClass::Integrity: return "integrity";
    case CiaClass::Availability: return "availability";
  }
  return "confidentiality";
}

std::string_view to_string(EdgeMode mode) { return kEdgeModeNames[index(mode)]; }

std::optional<Capability> parse_capability(std::string_view text) {
  for (std::size_t i = 0; i < kCapabilityCount; ++i) {
    if (kCapabilityNames[i] == text) return static_cast<Capability>(i);
  }
  return std::nullopt;
}

std::optional<EdgeMode> parse_edge_mode(std::string_view text) {
  for (std::size_t i = 0; i < kEdgeModeCount; ++i) {
    if (kEdgeModeNames[i] == text) return static_cast<EdgeMode>(i);
  }
  return std::nullopt;
}

AssetKind AssetKind::custom(std::string ns, std::string name) {
  if (ns.empty() || name.empty()) {
    throw std::invalid_argument("custom asset kind needs a namespace and a name");
  }
  if (ns == "core") {
    throw std::invalid_argument("asset kind namespace 'core' is reserved");
  }
  AssetKind kind;
  kind.canonical_.reset();
  kind.ns_ = std::move(ns);
  kind.name_ = std::move(name);
  return kind;
}

std::optional<AssetKind> AssetKind::parse(std::string_view text) {
  for (std::size_t i = 0; i < kCanonicalCount; ++i) {
    if (kKindNames[i] == text) return AssetKind(static_cast<Canonical>(i));
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view ns = text.substr(0, colon);
  const std::string_view name = text.substr(colon + 1);
  if (ns.empty() || name.empty() || ns == "core") return std::nullopt;
  if (name.find(':') != std::string_view::npos) return std::nullopt;
  return custom(std::string(ns), std::string(name));
}

std::string AssetKind::to_string() const {
  if (canonical_) return std::string(kKindNames[static_cast<std::size_t>(*canonical_)]);
  return ns_ + ":" + name_;
}

std::string AssetKind::display_name() const {
  if (canonical_) return std::string(kKindTitles[static_cast<std::size_t>(*canonical_)]);
  return to_string();
}

}  // namespace atm
