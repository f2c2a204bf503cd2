#include "gpcert/separation/base_separator.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gpcert/algebra/catalog.hpp"
#include "gpcert/algebra/constructions.hpp"
#include "gpcert/algebra/hom_search.hpp"

namespace gpcert {

namespace {

Element evaluate(const FiniteGroup& d, const AmalgamWord& w,
                 const std::vector<Element>& theta_q,
                 const std::vector<Element>& theta_s) {
  Element value = 0;
  for (std::size_t i = 0; i < w.q_parts.size(); ++i) {
    value = d.mul(value, theta_q[w.q_parts[i]]);
    if (i < w.s_parts.size()) value = d.mul(value, theta_s[w.s_parts[i]]);
  }
  return value;
}

[[noreturn]] void out_of_budget(const std::string& why) {
  throw Error(ErrorKind::BudgetExceeded, why);
}

}  // namespace

bool is_reduced_amalgam_word(const AmalgamWord& word, const Subgroup& b) {
  if (word.q_parts.size() != word.s_parts.size() + 1) return false;
  for (Element s : word.s_parts) {
    if (s == 0) return false;
  }
  for (std::size_t i = 1; i + 1 < word.q_parts.size(); ++i) {
    if (b.contains(word.q_parts[i])) return false;
  }
  return true;
}

std::vector<std::size_t> search_targets(const ClassTag& tag,
                                        const SearchBudget& budget) {
  const auto& catalog = group_catalog();
  std::vector<std::size_t> inside, outside;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const FiniteGroup& t = catalog[i].group;
    if (t.order() < 2 || t.order() > budget.max_target_order) continue;
    (class_membership(t, tag) ? inside : outside).push_back(i);
  }
  if (budget.seed != 0) {
    std::mt19937_64 rng(budget.seed);
    std::shuffle(inside.begin(), inside.end(), rng);
    std::shuffle(outside.begin(), outside.end(), rng);
  }
  inside.insert(inside.end(), outside.begin(), outside.end());
  return inside;
}

AmalgamSeparation base_separate_amalgam(const FiniteGroup& q, const FiniteGroup& s,
                                        const Subgroup& b, const AmalgamWord& word,
                                        const ClassTag& tag,
                                        const SearchBudget& budget) {
  SearchMeter meter;
  return base_separate_amalgam(q, s, b, word, tag, budget, meter);
}

AmalgamSeparation base_separate_amalgam(const FiniteGroup& q, const FiniteGroup& s,
                                        const Subgroup& b, const AmalgamWord& word,
                                        const ClassTag& tag,
                                        const SearchBudget& budget,
                                        SearchMeter& meter) {
  if (!(b.parent() == q) || !is_reduced_amalgam_word(word, b)) {
    throw Error(ErrorKind::PreconditionViolated, "amalgam word is not reduced");
  }
  if (word.s_parts.empty() && word.q_parts[0] == 0) {
    throw Error(ErrorKind::TrivialElement, "amalgam word is trivial");
  }

  // Stage 1: the projection onto Q x S.
  Element q_total = 0, s_total = 0;
  for (Element x : word.q_parts) q_total = q.mul(q_total, x);
  for (Element x : word.s_parts) s_total = s.mul(s_total, x);
  if (q_total != 0 || s_total != 0) {
    DirectProduct qs = [&] {
      try {
        return direct_product(q, s, budget.order_cap);
      } catch (const Error&) {
        out_of_budget("Q x S exceeds the order cap");
      }
    }();
    AmalgamSeparation out;
    out.target = qs.group;
    for (Element x = 0; x < q.order(); ++x) out.theta_q.push_back(qs.pair(x, 0));
    for (Element x = 0; x < s.order(); ++x) out.theta_s.push_back(qs.pair(0, x));
    out.image = qs.pair(q_total, s_total);
    out.stage = 1;
    out.target_name = "QxS";
    return out;
  }

  // Stage 2: bounded search over catalog targets.
  const std::vector<Element> q_gens = generating_set(q);
  const std::vector<Element> s_gens = generating_set(s);
  const std::vector<Element> b_gens = generating_set(b);
  const auto& catalog = group_catalog();
  const std::size_t start = meter.candidates;

  for (std::size_t index : search_targets(tag, budget)) {
    const FiniteGroup& t = catalog[index].group;
    const bool t_in_class = class_membership(t, tag);
    std::vector<std::vector<Element>> s_maps;
    for_each_hom_from(s, s_gens, t, [&](const std::vector<Element>& m) {
      s_maps.push_back(m);
      return true;
    });
    std::optional<AmalgamSeparation> found;
    std::map<std::vector<Element>, bool> image_in_class;
    for_each_hom_from(q, q_gens, t, [&](const std::vector<Element>& theta_q) {
      for (const auto& theta_s : s_maps) {
        bool centralizes = true;
        for (Element x : s_gens) {
          for (Element y : b_gens) {
            Element sx = theta_s[x], by = theta_q[y];
            if (t.mul(sx, by) != t.mul(by, sx)) {
              centralizes = false;
              break;
            }
          }
          if (!centralizes) break;
        }
        if (!centralizes) continue;
        if (++meter.candidates > budget.max_candidates) {
          out_of_budget("candidate budget of " + std::to_string(budget.max_candidates) +
                        " exhausted");
        }
        Element value = evaluate(t, word, theta_q, theta_s);
        if (value == 0) continue;

        std::vector<Element> gens;
        for (Element x : q_gens) gens.push_back(theta_q[x]);
        for (Element x : s_gens) gens.push_back(theta_s[x]);
        Subgroup image = generate_subgroup(t, gens);
        if (!t_in_class) {
          auto [it, fresh] = image_in_class.emplace(image.elements(), false);
          if (fresh) {
            it->second = class_membership(realize_subgroup(image).group, tag);
          }
          if (!it->second) continue;
        }
        SubgroupRealization d = realize_subgroup(image);
        AmalgamSeparation out;
        out.target = d.group;
        for (Element x : theta_q) out.theta_q.push_back(d.restriction.at(x));
        for (Element x : theta_s) out.theta_s.push_back(d.restriction.at(x));
        out.image = d.restriction.at(value);
        out.stage = 2;
        out.target_name = catalog[index].name;
        out.candidates = meter.candidates - start;
        found = std::move(out);
        return false;
      }
      return true;
    });
    if (found) return *found;
  }
  out_of_budget("no catalog target of order <= " +
                std::to_string(budget.max_target_order) + " separates the element");
}

}  // namespace gpcert
