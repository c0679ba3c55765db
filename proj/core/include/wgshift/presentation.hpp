#ifndef WGSHIFT_PRESENTATION_HPP
#define WGSHIFT_PRESENTATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wgshift/field.hpp"
#include "wgshift/word.hpp"

namespace wgs {

// Lengths of the cycles in a CycleFamily, indexed by member k >= 1.
struct LengthSpec {
  enum class Kind { Constant, Linear, Geometric };
  Kind kind = Kind::Constant;
  // constant: len = c; linear: len = a*k + b; geometric: len = b * base^k
  std::uint64_t c = 1;
  std::uint64_t a = 1, b = 0;
  std::uint64_t base = 2;

  bool unbounded() const { return kind != Kind::Constant; }
  // Saturates at LENGTH_CAP; use length_mod for exact residues of huge lengths.
  std::uint64_t length(std::uint64_t k) const;
  std::uint64_t length_mod(std::uint64_t k, std::uint64_t m) const;

  static constexpr std::uint64_t LENGTH_CAP = std::uint64_t(1) << 62;
};

// Node address inside a presentation. member is 1 for non-family components.
// position: finite node index, ray index i >= 0, bi-ray index (any sign),
// cycle offset in [0, len_k), or tail depth j >= 1.
struct NodeAddress {
  std::string component;
  std::uint64_t member = 1;
  std::int64_t position = 0;

  bool operator==(const NodeAddress& o) const = default;
  auto operator<=>(const NodeAddress& o) const = default;
};

std::string to_string(const NodeAddress& a);

struct FiniteComponent {
  std::vector<std::uint32_t> map;     // image table on [0, n)
  std::vector<FieldElement> weights;  // size n
};

struct ForwardRayComponent {
  EventuallyPeriodicWord weights; // weight of r_i is position i
};

struct BiRayComponent {
  std::vector<FieldElement> block; // weight of z_n is block[n mod len], floor residue
};

struct BackwardTailComponent {
  NodeAddress target;             // phi(t_1); tails attach only to non-tail components
  EventuallyPeriodicWord weights; // weight of t_j is position j-1
};

struct CycleFamilyComponent {
  LengthSpec lengths;
  EventuallyPeriodicWord weights; // member k, offset i carries position i
};

struct TailFamilyComponent {
  std::string target_component;   // one backward tail onto every node of it
  EventuallyPeriodicWord weights; // depth j carries position j-1
};

using ComponentKind = std::variant<FiniteComponent, ForwardRayComponent, BiRayComponent,
                                   BackwardTailComponent, CycleFamilyComponent,
                                   TailFamilyComponent>;

struct Component {
  std::string id;
  ComponentKind kind;
};

const char* component_kind_name(const ComponentKind& k);

struct Violation {
  std::string code;
  std::string component;
  std::string detail;
};

struct Presentation {
  FieldSpec field{2};
  std::vector<Component> components;

  const Component* find(const std::string& id) const;
  std::size_t index_of(const std::string& id) const; // throws AddressOutOfRange
};

std::vector<Violation> validate(const Presentation& p);

// Total on valid addresses; throws AddressOutOfRange otherwise.
NodeAddress eval_phi(const Presentation& p, const NodeAddress& a);
FieldElement eval_weight(const Presentation& p, const NodeAddress& a);
bool contains_address(const Presentation& p, const NodeAddress& a);

// Deterministic finite cover: all finite nodes, ray/tail positions <= radius,
// bi-ray indices in [-radius, radius], family members k <= radius with
// positions <= radius. Monotone in radius.
std::vector<NodeAddress> enumerate_nodes(const Presentation& p, std::uint64_t radius);

// The node a TailFamily member k attaches to (canonical flat order of the
// target component: finite index, ray index, bi-ray zigzag 0,1,-1,2,-2,...,
// cycle nodes ordered member-major).
NodeAddress tail_family_anchor(const Presentation& p, const TailFamilyComponent& tf,
                               std::uint64_t k);
// Inverse of the anchor order; 1-based. Throws AddressOutOfRange on overflow.
std::uint64_t flat_node_index(const Presentation& p, const NodeAddress& target);
// Node count of a component when finite, nullopt for infinite components.
std::optional<std::uint64_t> component_node_count(const Component& c);

// Every phi-preimage of a node, with its weight: the in-component predecessor(s)
// plus t_1 of every tail attached at the node.
std::vector<std::pair<NodeAddress, FieldElement>> structural_preimages(const Presentation& p,
                                                                       const NodeAddress& a);

struct ComponentZeroSummary {
  std::string component;
  std::vector<std::uint64_t> finite_zero_positions; // table/prefix zeros (used positions)
  std::vector<std::uint64_t> block_zero_offsets;    // offsets into the repeating block
};

struct ZeroSetSummary {
  std::vector<ComponentZeroSummary> per_component;
  bool zero_set_empty = true;
  bool zero_set_finite = true;
};

ZeroSetSummary zero_set_summary(const Presentation& p);

} // namespace wgs

#endif
