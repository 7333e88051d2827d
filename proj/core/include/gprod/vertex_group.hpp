#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gprod {

/// Payload of a vertex-group element: an integer for ℤ, a residue in [0, n)
/// for ℤ/n, a row index for multiplication-table groups.
using Element = std::int64_t;

enum class GroupKind { integers, cyclic, table };

/// A concrete non-trivial vertex group with a finite symmetric generating set.
///
/// Copies share table data, so passing groups by value is cheap.
class VertexGroup {
 public:
  static VertexGroup integers();
  /// ℤ/n with generators {g, g^-1}; n ≥ 2.
  static VertexGroup cyclic(std::int64_t order);
  /// A finite group given by its multiplication table (row·column) over the
  /// named elements. The table is validated exhaustively: closure, identity,
  /// inverses, associativity, generators closed under inverse and generating.
  static VertexGroup table(std::vector<std::string> element_names,
                           const std::vector<std::vector<std::string>>& products,
                           const std::vector<std::string>& generators);

  GroupKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != GroupKind::integers; }
  /// Group order, or nullopt for ℤ.
  std::optional<std::uint64_t> order() const;
  std::int64_t cyclic_order() const { return modulus_; }

  Element identity() const;
  bool is_identity(Element g) const { return g == identity(); }
  bool is_valid(Element g) const;

  Element multiply(Element a, Element b) const;
  Element inverse(Element g) const;

  /// Word length with respect to the generating set X_v.
  std::size_t word_length(Element g) const;

  const std::vector<Element>& generators() const { return generators_; }

  /// All elements of a finite group, identity first; throws for ℤ.
  std::vector<Element> elements() const;

  /// Elements with word length ≤ radius, ordered by length then payload.
  std::vector<Element> ball(std::size_t radius) const;

  /// Integers/cyclic: decimal exponent (reduced mod n for ℤ/n).
  /// Table groups: element name.
  Element parse_element(std::string_view token) const;
  std::string format_element(Element g) const;

  /// Table data, for serialization.
  const std::vector<std::string>& element_names() const;
  std::vector<std::vector<std::string>> product_names() const;
  std::vector<std::string> generator_names() const;

  friend bool operator==(const VertexGroup& a, const VertexGroup& b);

 private:
  struct Table {
    std::vector<std::string> names;
    std::vector<std::vector<Element>> mul;
    std::vector<Element> inv;
    std::vector<std::size_t> length;
    Element identity = 0;
  };

  VertexGroup() = default;

  GroupKind kind_ = GroupKind::integers;
  std::int64_t modulus_ = 0;
  std::vector<Element> generators_;
  std::shared_ptr<const Table> table_;
};

/// An element tagged with its owning group, for checked arithmetic.
struct VertexElement {
  const VertexGroup* group = nullptr;
  Element value = 0;
};

/// Group product; throws gprod::Error when the operands belong to different groups.
VertexElement multiply(const VertexElement& a, const VertexElement& b);

}  // namespace gprod
