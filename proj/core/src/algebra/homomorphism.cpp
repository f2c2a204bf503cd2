#include "gpcert/algebra/homomorphism.hpp"

namespace gpcert {

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     std::span<const Element> images) {
  if (images.size() != source.order()) return false;
  for (Element x : images) {
    if (!target.contains(x)) return false;
  }
  for (Element a = 0; a < source.order(); ++a) {
    for (Element b = 0; b < source.order(); ++b) {
      if (images[source.mul(a, b)] != target.mul(images[a], images[b])) {
        return false;
      }
    }
  }
  return true;
}

Homomorphism::Homomorphism(FiniteGroup source, FiniteGroup target,
                           std::vector<Element> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (!is_homomorphism(source_, target_, images_)) {
    throw Error(ErrorKind::PreconditionViolated,
                "map is not a homomorphism");
  }
}

Homomorphism::Homomorphism(Trusted, FiniteGroup source, FiniteGroup target,
                           std::vector<Element> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {}

Homomorphism trusted_homomorphism(FiniteGroup source, FiniteGroup target,
                                  std::vector<Element> images) {
  return Homomorphism(Homomorphism::Trusted{}, std::move(source),
                      std::move(target), std::move(images));
}

Homomorphism Homomorphism::identity(const FiniteGroup& group) {
  std::vector<Element> images(group.order());
  for (Element i = 0; i < group.order(); ++i) images[i] = i;
  return trusted_homomorphism(group, group, std::move(images));
}

Homomorphism Homomorphism::trivial(const FiniteGroup& source,
                                   const FiniteGroup& target) {
  return trusted_homomorphism(source, target,
                              std::vector<Element>(source.order(), 0));
}

Subgroup Homomorphism::kernel() const {
  std::vector<Element> k;
  for (Element a = 0; a < source_.order(); ++a) {
    if (images_[a] == 0) k.push_back(a);
  }
  return Subgroup(source_, std::move(k));
}

Subgroup Homomorphism::image() const {
  return Subgroup(target_, images_);
}

Subgroup Homomorphism::image_of(const Subgroup& h) const {
  std::vector<Element> img;
  img.reserve(h.order());
  for (Element a : h.elements()) img.push_back(images_[a]);
  return Subgroup(target_, std::move(img));
}

Homomorphism Homomorphism::then(const Homomorphism& next) const {
  std::vector<Element> composed(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    composed[i] = next(images_[i]);
  }
  return trusted_homomorphism(source_, next.target(), std::move(composed));
}

std::optional<std::vector<Element>> extend_generator_images(
    const FiniteGroup& source, std::span<const Element> generators,
    std::span<const Element> images, const FiniteGroup& target) {
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> map(source.order(), kUnset);
  std::vector<Element> queue{0};
  map[0] = 0;
  // f(x s) = f(x) f(s) for every generator s; agreeing on all Cayley edges
  // makes f a homomorphism because every element is a positive word.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element x = queue[i];
    for (std::size_t k = 0; k < generators.size(); ++k) {
      Element y = source.mul(x, generators[k]);
      Element fy = target.mul(map[x], images[k]);
      if (map[y] == kUnset) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != source.order()) return std::nullopt;
  return map;
}

}  // namespace gpcert
