#pragma once

#include "physarum/term.hpp"

namespace physarum {

/// Canonical representative under the congruence laws for fusion, choice,
/// inaction and hiding. The result is a choice of fusion-monomials:
///
///  - `+` and `&` are flattened, sorted and duplicate-free; a monomial that
///    contains another monomial of the same sum is absorbed;
///  - `P + 0 = P`, `P & 0 = 0`, `0 \ H = 0`;
///  - fusion distributes over choice (`P & (Q + R)` becomes
///    `(P & Q) + (P & R)`); the converse distribution is never rewritten;
///  - repeated fusion operands merge, then operands that are syntactic
///    complements annihilate to `0`; checked on whole operands before
///    distributing and on atoms after;
///  - hiding is pushed through `+` and `&` down to the atoms;
///  - a constant-free subterm with no named label is `0`: it is its own
///    complement, so `P = P & P = P & ~P = 0`.
///
/// Prefix, attraction, repelling, cooperation and hiding bodies are
/// normalized in place. Idempotent.
Term normalize(const Term& term);

/// normalize(a) == normalize(b).
bool axiom_equal(const Term& a, const Term& b);

}  // namespace physarum
