#pragma once

// Construction provenance for presentations: a tree of the group-theoretic
// steps (free products, amalgams, HNN extensions, central extensions) that
// produced a presentation from its inputs.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fpg {

enum class TraceKind {
  FreeBase,
  DiscreteSubgroupInput,
  Amalgam,
  HNN,
  CentralExtension,
  Quotient,  // relators added outside any recorded amalgam
};

enum class SubgroupKind { Free, Abelian, Cyclic, Other };

struct TraceNode;
using Trace = std::shared_ptr<const TraceNode>;

struct TraceNode {
  TraceKind kind;
  SubgroupKind subgroup = SubgroupKind::Free;  // Amalgam and HNN only
  std::vector<Trace> children;

  static Trace free_base();
  static Trace input();
  static Trace amalgam(SubgroupKind kind, Trace left, Trace right);
  static Trace hnn(SubgroupKind kind, Trace base);
  static Trace central_extension(Trace base);
  static Trace quotient(Trace base);
};

bool operator==(const TraceNode& a, const TraceNode& b);

/// S-expression form, e.g. `(amalgam cyclic input (hnn free free))`.
std::string to_string(const Trace& trace);
/// Inverse of to_string; throws ParseError.
Trace parse_trace(std::string_view text);

bool traces_equal(const Trace& a, const Trace& b);

}  // namespace fpg
