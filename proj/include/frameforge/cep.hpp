#pragma once

#include <optional>
#include <string>

#include "frameforge/structure.hpp"

namespace frameforge {

enum class CepMethod { Direct, TwoGenerated, Pcep };

const char* cep_method_name(CepMethod m);

/// A congruence of a subalgebra that no ambient congruence restricts to.
/// The generator is stated in ambient coordinates.
struct CepWitness {
  Subalgebra sub;
  Element generator = 0;
};

struct CepVerdict {
  bool holds = true;
  CepMethod method = CepMethod::Direct;
  std::optional<CepWitness> witness;
};

/// Generator (in ambient coordinates) of the restriction of the congruence
/// of a to the subalgebra: the join of the subalgebra elements below a.
Element restrict_congruence(const BooleanFrame& frame, Element a,
                            const Subalgebra& sub);

/// Definition-level check: every congruence of every subalgebra must be
/// the restriction of some ambient congruence. The witness is the first
/// failure with subalgebras in canonical order and generators ascending.
CepVerdict cep_direct(const BooleanFrame& frame,
                      const StructureLimits& limits = {});

/// Reduction to principal congruences of 2-generated subalgebras, using
/// the canonical extension test: the ambient principal closure of the
/// same generator must restrict back to the relative principal closure.
CepVerdict cep_two_generated(const BooleanFrame& frame,
                             const StructureLimits& limits = {});

/// Principal congruence extension over all subalgebras, with the same
/// canonical extension test.
CepVerdict pcep(const BooleanFrame& frame, const StructureLimits& limits = {});

CepVerdict cep_by_method(const BooleanFrame& frame, CepMethod method,
                         const StructureLimits& limits = {});

}  // namespace frameforge
