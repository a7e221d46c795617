#pragma once

#include <set>
#include <vector>

#include "taxalign/relaxation.hpp"

namespace taxalign::test {

/// Reference support computation: no evidence index, no connection lookup
/// tables. Scope sets come straight from the taxonomy API and candidate
/// membership from a plain set of id pairs built by rescanning the candidate
/// table. Loops run in the canonical order (codes in pack order; supporting
/// source ascending, supporting target ascending; hypernym side outer for B),
/// so against the scalar kernels the indexed path must match bit for bit.
std::vector<double> naiveSupport(const Assignment& a, const CandidateTable& table,
                                 const ConstraintPack& pack);

}  // namespace taxalign::test
