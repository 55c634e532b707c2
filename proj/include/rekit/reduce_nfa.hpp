#pragma once

// NFA reduction by the coarsest right- and left-invariant equivalences.

#include "rekit/automata.hpp"

namespace rekit {

/// Coarsest right-invariant equivalence, computed by saturating the set of
/// distinguishable pairs (naive fixed point, row-major pair order).
Partition autobisimulation(const Nfa &a);

/// a quotiented by autobisimulation(a).
Nfa rEquiv(const Nfa &a);
/// a quotiented by autobisimulation(reverse(a)).
Nfa lEquiv(const Nfa &a);
/// rEquiv(lEquiv(a)).
Nfa lrEquiv(const Nfa &a);

} // namespace rekit
