#pragma once

#include "monres/simplicial.hpp"

namespace monres {

/// The Scarf complex: all generator subsets whose lcm is shared by no
/// other subset.  It is downward closed and carries the genericity flag
/// of its ideal; resolution construction requires generic = true.
struct ScarfComplex {
    LabeledComplex base;
    bool generic;

    const SimplicialComplex& complex() const { return base.complex(); }
    const MonomialIdeal& ideal() const { return base.ideal(); }
};

/// Breadth-first growth from the singletons.  A candidate face I is
/// admitted when no proper deletion keeps the lcm (every vertex is the
/// unique maximizer of some coordinate) and no outside generator divides
/// the lcm.  The local test is equivalent to the global uniqueness
/// condition: a subset J with m_J = m_I yields m_{I u j} = m_I for any
/// j in J \ I, or m_{I \ i} = m_I for suitable i when J is nested.
ScarfComplex scarf_complex(const MonomialIdeal& ideal);

/// Verification oracle: enumerates all 2^r subsets and keeps those whose
/// lcm occurs exactly once.
ScarfComplex scarf_brute_force(const MonomialIdeal& ideal, int cap = 12);

}  // namespace monres
