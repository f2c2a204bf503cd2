#pragma once

#include <vector>

#include "gpcert/algebra/finite_group.hpp"
#include "gpcert/algebra/subgroup.hpp"

namespace gpcert {

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     std::span<const Element> images);

// A homomorphism between finite groups, stored as its full image table.
class Homomorphism {
 public:
  // Throws PreconditionViolated unless images define a homomorphism.
  Homomorphism(FiniteGroup source, FiniteGroup target,
               std::vector<Element> images);

  static Homomorphism identity(const FiniteGroup& group);
  static Homomorphism trivial(const FiniteGroup& source,
                              const FiniteGroup& target);

  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  const std::vector<Element>& images() const noexcept { return images_; }

  Element operator()(Element a) const { return images_[a]; }

  Subgroup kernel() const;
  Subgroup image() const;
  Subgroup image_of(const Subgroup& h) const;
  bool is_surjective() const { return image().is_whole(); }

  // this followed by next: x -> next(this(x)).
  Homomorphism then(const Homomorphism& next) const;

 private:
  struct Trusted {};
  Homomorphism(Trusted, FiniteGroup source, FiniteGroup target,
               std::vector<Element> images);

  friend Homomorphism trusted_homomorphism(FiniteGroup, FiniteGroup,
                                           std::vector<Element>);

  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Element> images_;
};

// Skips the homomorphism check; for maps that are homomorphisms by
// construction.
Homomorphism trusted_homomorphism(FiniteGroup source, FiniteGroup target,
                                  std::vector<Element> images);

// Extends generator images to the whole source. Returns nothing when the
// assignment does not extend to a homomorphism.
std::optional<std::vector<Element>> extend_generator_images(
    const FiniteGroup& source, std::span<const Element> generators,
    std::span<const Element> images, const FiniteGroup& target);

}  // namespace gpcert
