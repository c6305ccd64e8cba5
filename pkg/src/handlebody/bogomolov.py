"""Conservative rule engine for vanishing of the Bogomolov multiplier B0(G),
plus the extendability verdict it supports.

The engine never computes B0 itself; it applies structural sufficient
conditions for B0(G) = 0 in a fixed order and reports Zero with the rule
that fired, or Unknown with the list of rules attempted.  NonZero is never
derived — it can only be asserted externally (the ``known_b0`` override in
run config files), matching how such facts enter from the literature.

The verdict layer: if B0(G) = 0 every free genus-2-quotient action of G on a
surface extends over some compact 3-manifold without singular points; if
B0(G) != 0 and G has at most one involution, some free action admits no such
extension; anything else is Unknown.
"""

from __future__ import annotations

import warnings

import numpy as np

ZERO = "Zero"
NONZERO = "NonZero"
UNKNOWN = "Unknown"

ALL_EXTEND = "AllFreeActionsExtend"
EXISTS_NON_EXTENDABLE = "ExistsNonExtendableFreeAction"
VERDICT_UNKNOWN = "Unknown"


class B0Status:
    """Outcome of the rule chain: value Zero/NonZero/Unknown plus a reason.

    ``attempted`` lists the rules tried when the value is Unknown;
    ``warning`` carries a conflict message when an override disagrees with a
    rule-derived value (the derived value wins).
    """

    def __init__(self, value, reason, attempted=(), warning=None):
        self.value = value
        self.reason = reason
        self.attempted = tuple(attempted)
        self.warning = warning

    def __eq__(self, other):
        return (isinstance(other, B0Status) and self.value == other.value
                and self.reason == other.reason)

    def __repr__(self):
        return "B0Status(%s, %r)" % (self.value, self.reason)


class ExtendVerdict:
    def __init__(self, value, basis):
        self.value = value
        self.basis = basis

    def __eq__(self, other):
        return isinstance(other, ExtendVerdict) and self.value == other.value

    def __repr__(self):
        return "ExtendVerdict(%s, %r)" % (self.value, self.basis)


def _greedy_subgroup_generators(G, elements):
    """A small generating list for a known subgroup, deterministically."""
    current = {0}
    chosen = []
    for g in elements:
        if g not in current:
            chosen.append(g)
            current = set(G.subgroup_closure(chosen))
    return chosen


def _prime_power(n):
    """(p, k) if n = p**k with k >= 1, else None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 else None
        p += 1
    return (n, 1)


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_extraspecial(G):
    """Center of prime order p, all commutators central, all p-th powers
    central (so G/Z is elementary abelian of exponent p)."""
    center = G.center()
    pk = _prime_power(len(center))
    if pk is None or pk[1] != 1 or len(center) == G.order:
        return False
    p = pk[0]
    zset = set(center)
    for g in range(G.order):
        if G.power(g, p) not in zset:
            return False
        for h in range(g + 1, G.order):
            if G.commutator(g, h) not in zset:
                return False
    return True


def _quotient_is_cyclic(G, normal_elements):
    """Whether G/N is cyclic, for N given as an element set."""
    nset = set(normal_elements)
    quotient_order = G.order // len(normal_elements)
    for g in range(G.order):
        k, acc = 1, g
        while acc not in nset:
            acc = G.mult(acc, g)
            k += 1
        if k == quotient_order:
            return True
    return quotient_order == 1


def recognize_direct_product(G, candidate_cap=128):
    """An internal direct decomposition (N1, N2) as element lists, or None.

    Candidate normal subgroups: normal closures of single elements, the
    center and the derived subgroup, saturated under pairwise joins (the
    join of two normal subgroups is normal).  Sound — any returned pair is a
    genuine decomposition (trivial intersection, orders multiply to |G|) —
    but not complete if the candidate cap truncates saturation.
    """
    candidates = {}  # elements tuple -> small generating list

    def add(elems, gens):
        key = tuple(elems)
        if 1 < len(elems) < G.order and key not in candidates:
            candidates[key] = list(gens)
            return True
        return False

    # One normal closure per conjugacy class (conjugate elements have equal
    # normal closures).
    for cls in G.conjugacy_classes():
        g = cls[0]
        if g != 0:
            add(G.normal_closure([g]), [g])
    center = G.center()
    add(center, _greedy_subgroup_generators(G, center))
    derived = G.derived_subgroup()
    add(derived, _greedy_subgroup_generators(G, derived))

    # Saturate under joins until fixpoint or cap; joins use the recorded
    # generating lists, so each join is one cheap normal closure.
    grew = True
    while grew and len(candidates) < candidate_cap:
        grew = False
        ordered = sorted(candidates.items(), key=lambda kv: (len(kv[0]), kv[0]))
        for i, (k1, gens1) in enumerate(ordered):
            s1 = set(k1)
            for k2, gens2 in ordered[i + 1:]:
                if len(candidates) >= candidate_cap:
                    break
                if set(k2) <= s1:
                    continue
                join_gens = gens1 + [g for g in gens2 if g not in s1]
                if add(G.normal_closure(join_gens), join_gens):
                    grew = True

    ordered = sorted(candidates, key=lambda k: (len(k), k))
    for i, n1 in enumerate(ordered):
        s1 = set(n1)
        for n2 in ordered[i:]:
            if len(n1) * len(n2) != G.order:
                continue
            if sum(1 for x in n2 if x in s1) == 1:  # intersection = {identity}
                return n1, n2
    return None


def _apply_rules(G, _seen_orders=()):
    attempted = []

    attempted.append("R1:abelian")
    if G.is_abelian():
        return B0Status(ZERO, "R1: abelian")

    attempted.append("R2:p-group order<=p^4")
    pk = _prime_power(G.order)
    if pk is not None and pk[1] <= 4:
        return B0Status(ZERO, "R2: group of order %d^%d (<= %d^4)"
                        % (pk[0], pk[1], pk[0]))

    attempted.append("R3:extraspecial")
    if is_extraspecial(G):
        return B0Status(ZERO, "R3: extraspecial (center of prime order, "
                              "central commutators and p-th powers)")

    attempted.append("R4:derived-abelian-with-cyclic-quotient")
    derived = G.derived_subgroup()
    derived_group = G.subgroup_as_group(derived)
    if derived_group.is_abelian() and _quotient_is_cyclic(G, derived):
        return B0Status(ZERO, "R4: derived subgroup abelian and G/[G,G] cyclic")

    attempted.append("R5:all-Sylow-Zero")
    if pk is None:  # for a p-group this rule would just recurse into G itself
        reasons = []
        all_zero = True
        for p in _prime_factors(G.order):
            syl = G.subgroup_as_group(G.sylow_subgroup(p),
                                      name="sylow_%d(%s)" % (p, G.name))
            sub_status = _apply_rules(syl)
            if sub_status.value != ZERO:
                all_zero = False
                break
            reasons.append("p=%d: %s" % (p, sub_status.reason))
        if all_zero:
            return B0Status(ZERO, "R5: every Sylow subgroup has Zero status "
                                  "(%s)" % "; ".join(reasons))

    attempted.append("R6:direct-product")
    decomposition = recognize_direct_product(G)
    if decomposition is not None:
        n1, n2 = decomposition
        s1 = _apply_rules(G.subgroup_as_group(n1))
        s2 = _apply_rules(G.subgroup_as_group(n2))
        if s1.value == ZERO and s2.value == ZERO:
            return B0Status(ZERO, "R6: direct product of orders %d x %d, "
                                  "both factors Zero (%s | %s)"
                            % (len(n1), len(n2), s1.reason, s2.reason))

    return B0Status(UNKNOWN, "no rule applied", attempted=attempted)


def b0_status(G, override=None):
    """Classify B0(G) by the rule chain; ``override`` (Zero/NonZero) applies
    only when the rules are inconclusive."""
    status = _apply_rules(G)
    if override is None:
        return status
    if override not in (ZERO, NONZERO):
        raise ValueError("override must be %r or %r" % (ZERO, NONZERO))
    if status.value == UNKNOWN:
        return B0Status(override, "asserted", attempted=status.attempted)
    if status.value != override:
        message = ("override %s conflicts with derived %s (%s); "
                   "keeping the derived value" % (override, status.value,
                                                  status.reason))
        warnings.warn(message)
        return B0Status(status.value, status.reason, warning=message)
    return status


def all_sylows_abelian(G):
    """True when every Sylow subgroup of G is abelian.

    A Sylow subgroup of any subgroup of any finite power of G embeds in a
    power of a Sylow subgroup of G, so this condition propagates Zero
    status to all of those groups at once.
    """
    for p in _prime_factors(G.order):
        sub = np.asarray(G.sylow_subgroup(p))
        block = G.table[np.ix_(sub, sub)]
        if not np.array_equal(block, block.T):
            return False
    return True


def samperton_verdict(G, status):
    """Extendability-over-3-manifolds verdict from a B0 status."""
    if status.value == ZERO:
        return ExtendVerdict(ALL_EXTEND,
                             "B0(G)=0 (%s)" % status.reason)
    if status.value == NONZERO:
        involutions = G.count_involutions()
        if involutions <= 1:
            return ExtendVerdict(
                EXISTS_NON_EXTENDABLE,
                "B0(G)!=0 (%s) and %d involution(s) <= 1"
                % (status.reason, involutions))
        return ExtendVerdict(VERDICT_UNKNOWN,
                             "B0(G)!=0 but %d involutions > 1" % involutions)
    return ExtendVerdict(VERDICT_UNKNOWN, "B0 status unknown")
