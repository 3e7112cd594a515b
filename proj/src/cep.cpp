#include "frameforge/cep.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace frameforge {

const char* cep_method_name(CepMethod m) {
  switch (m) {
    case CepMethod::Direct: return "direct";
    case CepMethod::TwoGenerated: return "two-generated";
    case CepMethod::Pcep: return "pcep";
  }
  return "?";
}

namespace {

Element restrict_unchecked(Element a, const Subalgebra& sub) {
  Element r = 0;
  for (Element x : sub.elements)
    if (BooleanFrame::leq(x, a)) r |= x;
  return r;
}

struct WitnessOrder {
  bool operator()(const CepWitness& a, const CepWitness& b) const {
    if (a.sub.elements.size() != b.sub.elements.size())
      return a.sub.elements.size() < b.sub.elements.size();
    if (a.sub.elements != b.sub.elements) return a.sub.elements < b.sub.elements;
    return a.generator < b.generator;
  }
};

void keep_least(std::optional<CepWitness>& best, CepWitness candidate) {
  if (!best || WitnessOrder{}(candidate, *best)) best = std::move(candidate);
}

/// Failures of the canonical principal extension test within one
/// subalgebra: for each b in the subalgebra, the ambient principal closure
/// of b must restrict to the relative principal closure of b.
void principal_extension_failures(const BooleanFrame& frame,
                                  const std::vector<Element>& ambient_pc,
                                  const Subalgebra& sub,
                                  std::optional<CepWitness>& best) {
  const auto rel = relative_frame(frame, sub);
  for (Element b_rel = 0; b_rel < rel.embedding.size(); ++b_rel) {
    const Element b_amb = rel.embedding[b_rel];
    const Element pc_rel = principal_congruence(rel.frame, b_rel, 0);
    const Element restricted = restrict_unchecked(ambient_pc[b_amb], sub);
    if (restricted != rel.embedding[pc_rel])
      keep_least(best, CepWitness{sub, rel.embedding[pc_rel]});
  }
}

std::vector<Element> ambient_principal_table(const BooleanFrame& frame) {
  std::vector<Element> pc(frame.size());
  for (Element b = 0; b < frame.size(); ++b)
    pc[b] = principal_congruence(frame, b, 0);
  return pc;
}

}  // namespace

Element restrict_congruence(const BooleanFrame& frame, Element a,
                            const Subalgebra& sub) {
  if (!is_congruential(frame, a))
    throw Error(Errc::NotCongruential,
                "element " + std::to_string(a) + " is not congruential");
  if (!is_closed_subuniverse(frame, sub))
    throw Error(Errc::NotClosed, "element set is not a closed subuniverse");
  return restrict_unchecked(a, sub);
}

CepVerdict cep_direct(const BooleanFrame& frame,
                      const StructureLimits& limits) {
  CepVerdict verdict;
  verdict.method = CepMethod::Direct;
  const auto ambient = congruence_generators(frame);
  for (const auto& sub : all_subalgebras(frame, limits.bell_max_atoms)) {
    const auto rel = relative_frame(frame, sub);
    std::set<Element> restrictions;
    for (Element a : ambient) restrictions.insert(restrict_unchecked(a, sub));
    std::optional<CepWitness> best;
    for (Element b : congruence_generators(rel.frame))
      if (!restrictions.count(rel.embedding[b]))
        keep_least(best, CepWitness{sub, rel.embedding[b]});
    if (best) {
      verdict.holds = false;
      verdict.witness = std::move(best);
      return verdict;
    }
  }
  return verdict;
}

CepVerdict cep_two_generated(const BooleanFrame& frame,
                             const StructureLimits& limits) {
  (void)limits;
  CepVerdict verdict;
  verdict.method = CepMethod::TwoGenerated;
  const auto ambient_pc = ambient_principal_table(frame);
  std::set<std::vector<Element>> seen;
  std::optional<CepWitness> best;
  for (Element x = 0; x < frame.size(); ++x)
    for (Element y = x; y < frame.size(); ++y) {
      Subalgebra sub = generated_subalgebra(frame, {x, y});
      if (!seen.insert(sub.elements).second) continue;
      principal_extension_failures(frame, ambient_pc, sub, best);
    }
  if (best) {
    verdict.holds = false;
    verdict.witness = std::move(best);
  }
  return verdict;
}

CepVerdict pcep(const BooleanFrame& frame, const StructureLimits& limits) {
  CepVerdict verdict;
  verdict.method = CepMethod::Pcep;
  const auto ambient_pc = ambient_principal_table(frame);
  std::optional<CepWitness> best;
  for (const auto& sub : all_subalgebras(frame, limits.bell_max_atoms)) {
    principal_extension_failures(frame, ambient_pc, sub, best);
    if (best) {  // subalgebras arrive in canonical order
      verdict.holds = false;
      verdict.witness = std::move(best);
      return verdict;
    }
  }
  return verdict;
}

CepVerdict cep_by_method(const BooleanFrame& frame, CepMethod method,
                         const StructureLimits& limits) {
  switch (method) {
    case CepMethod::Direct: return cep_direct(frame, limits);
    case CepMethod::TwoGenerated: return cep_two_generated(frame, limits);
    case CepMethod::Pcep: return pcep(frame, limits);
  }
  throw Error(Errc::UnknownSpec, "unhandled method");
}

}  // namespace frameforge
