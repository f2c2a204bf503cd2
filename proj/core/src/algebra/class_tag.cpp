#include "gpcert/algebra/class_tag.hpp"

#include <charconv>

namespace gpcert {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ClassTag ClassTag::pgroup(unsigned p) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::PreconditionViolated,
                std::to_string(p) + " is not prime");
  }
  return ClassTag(Kind::PGroup, p);
}

ClassTag ClassTag::parse(std::string_view text) {
  if (text == "finite") return finite();
  if (text == "solvable") return solvable();
  if (text == "finite-solvable") return finite_solvable();
  if (text == "abelian") return abelian();
  if (text == "nilpotent") return nilpotent();
  constexpr std::string_view prefix = "pgroup:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    unsigned p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && is_prime(p)) {
      return pgroup(p);
    }
  }
  throw Error(ErrorKind::SchemaError, "unknown class tag '" + std::string(text) + "'");
}

std::string ClassTag::to_string() const {
  switch (kind_) {
    case Kind::Finite: return "finite";
    case Kind::PGroup: return "pgroup:" + std::to_string(prime_);
    case Kind::Solvable: return "solvable";
    case Kind::FiniteSolvable: return "finite-solvable";
    case Kind::Abelian: return "abelian";
    case Kind::Nilpotent: return "nilpotent";
  }
  return "finite";
}

std::vector<Subgroup> derived_series(const FiniteGroup& group) {
  std::vector<Subgroup> series{whole_group(group)};
  while (true) {
    Subgroup next = commutator_subgroup(series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& group) {
  const Subgroup whole = whole_group(group);
  std::vector<Subgroup> series{whole};
  while (true) {
    Subgroup next = commutator_subgroup(whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool class_membership(const FiniteGroup& group, const ClassTag& tag) {
  switch (tag.kind()) {
    case ClassTag::Kind::Finite:
      return true;
    case ClassTag::Kind::PGroup: {
      std::size_t n = group.order();
      while (n % tag.prime() == 0) n /= tag.prime();
      return n == 1;
    }
    case ClassTag::Kind::Solvable:
    case ClassTag::Kind::FiniteSolvable:
      return derived_series(group).back().is_trivial();
    case ClassTag::Kind::Abelian:
      return group.is_abelian();
    case ClassTag::Kind::Nilpotent:
      return lower_central_series(group).back().is_trivial();
  }
  return false;
}

}  // namespace gpcert
