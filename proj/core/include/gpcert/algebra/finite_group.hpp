#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gpcert/error.hpp"

namespace gpcert {

using Element = std::uint32_t;

// Groups larger than this are refused by constructions that multiply orders.
inline constexpr std::size_t kDefaultOrderCap = 5040;

// A finite group stored as a full Cayley table. Element 0 is always the
// identity. Copies share the immutable table.
class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup();

  // Builds a group from a flat row-major table without running the axiom
  // checks. The caller guarantees a group table whose identity is 0.
  static FiniteGroup from_trusted_table(std::size_t order,
                                        std::vector<Element> flat_table,
                                        std::vector<std::string> labels = {});

  std::size_t order() const noexcept;
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  Element pow(Element a, long long exponent) const;
  Element commutator(Element a, Element b) const;  // a b a^-1 b^-1
  std::size_t element_order(Element a) const;

  bool contains(std::int64_t index) const noexcept {
    return index >= 0 && static_cast<std::size_t>(index) < order_;
  }
  bool is_abelian() const;

  std::span<const Element> flat_table() const noexcept;
  std::vector<std::vector<Element>> rows() const;

  const std::vector<std::string>& labels() const noexcept;
  std::string label(Element a) const;
  std::optional<Element> find_label(std::string_view label) const;

  friend bool operator==(const FiniteGroup& lhs, const FiniteGroup& rhs);

 private:
  struct Data {
    std::size_t order = 1;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::string> labels;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data);

  std::shared_ptr<const Data> data_;
  // Cached views into *data_ for the hot multiplication path.
  const Element* table_ = nullptr;
  const Element* inverse_ = nullptr;
  std::size_t order_ = 1;
};

// Validation failure carrying the offending element indices (in the input's
// own numbering).
class TableError : public Error {
 public:
  TableError(ErrorKind kind, std::vector<std::int64_t> witness,
             const std::string& detail)
      : Error(kind, detail), witness_(std::move(witness)) {}

  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::int64_t> witness_;
};

// Checks the group axioms of a square table and returns the group with its
// identity moved to index 0. When a relabeling is needed and no labels are
// given, the original indices become the labels.
// Throws TableError with MalformedTable, NoIdentity, NoInverse(a) or
// NotAssociative(a, b, c), checked in that order.
FiniteGroup validate_group(const std::vector<std::vector<std::int64_t>>& table,
                           std::vector<std::string> labels = {});

}  // namespace gpcert
