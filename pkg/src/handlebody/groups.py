"""Finite groups with explicit arithmetic.

Groups are realized by their regular representation: elements are integers
0..n-1 with 0 the identity, and a dense n x n multiplication table drives
every query (center, conjugacy classes, Sylow subgroups, automorphisms).
Groups come from built-in constructors (cyclic, the order-pq metacyclic
family, Heisenberg mod p, direct products) or from a finite presentation via
Todd-Coxeter coset enumeration over the trivial subgroup.

Scale: everything here is desk scale (orders up to a few thousand); the
dense-table representation is chosen for uniformity and determinism, not
asymptotics.
"""

from __future__ import annotations

import numpy as np

from .words import Word, parse_word, print_word

SENTINEL = -1


class PresentationError(ValueError):
    """Malformed presentation (bad names, empty or out-of-rank relators)."""


class CosetCapExceeded(RuntimeError):
    """Coset enumeration hit its cap; the presentation may define a larger
    or infinite group.  Never produces a wrong group."""


class AutCapExceeded(RuntimeError):
    """Automorphism backtracking hit its node cap; partial results unusable."""


class Presentation:
    """Generator names plus relator words (rank = number of generators)."""

    def __init__(self, gen_names, relators):
        self.gen_names = tuple(gen_names)
        if not self.gen_names:
            raise PresentationError("need at least one generator")
        if len(set(self.gen_names)) != len(self.gen_names):
            raise PresentationError("duplicate generator names")
        rels = []
        for rel in relators:
            if isinstance(rel, str):
                rel = parse_word(rel, self.gen_names)
            if not isinstance(rel, Word) or rel.rank != len(self.gen_names):
                raise PresentationError(
                    "relator %r does not match the declared generators" % (rel,))
            if rel.is_identity():
                raise PresentationError("relators must be nonempty")
            rels.append(rel)
        self.relators = tuple(rels)

    @property
    def gen_count(self):
        return len(self.gen_names)

    def __repr__(self):
        return "Presentation(%s | %s)" % (
            " ".join(self.gen_names),
            ", ".join(print_word(r, self.gen_names) for r in self.relators))


class FiniteGroup:
    """A finite group as a dense multiplication table over 0..n-1.

    ``table[g, h]`` is the product g*h; element 0 is the identity.
    ``generators`` are the distinguished generator elements (matching the
    source presentation or constructor).
    """

    def __init__(self, table, generators, gen_names=None, name="",
                 presentation=None):
        table = np.ascontiguousarray(table, dtype=np.int32)
        n = table.shape[0]
        if table.shape != (n, n):
            raise ValueError("multiplication table must be square")
        if not (np.array_equal(table[0], np.arange(n)) and
                np.array_equal(table[:, 0], np.arange(n))):
            raise ValueError("element 0 must be the identity")
        self.table = table
        self.order = n
        self.generators = tuple(int(g) for g in generators)
        self.gen_names = tuple(gen_names) if gen_names else tuple(
            "g%d" % (i + 1) for i in range(len(self.generators)))
        self.name = name or "group(order=%d)" % n
        self.presentation = presentation
        inv = np.empty(n, dtype=np.int32)
        rows, cols = np.nonzero(table == 0)
        inv[rows] = cols
        self.inv = inv
        if self.generators:
            if len(self.subgroup_closure(self.generators)) != n:
                raise ValueError("declared generators do not generate")
        self._orders = None
        self._classes = None

    # -- element arithmetic -------------------------------------------

    @property
    def identity(self):
        return 0

    def mult(self, g, h):
        return int(self.table[g, h])

    def inverse(self, g):
        return int(self.inv[g])

    def conjugate(self, g, h):
        """h g h^-1."""
        return int(self.table[self.table[h, g], self.inv[h]])

    def commutator(self, g, h):
        """g h g^-1 h^-1."""
        gh = self.table[g, h]
        return int(self.table[self.table[gh, self.inv[g]], self.inv[h]])

    def power(self, g, k):
        if k < 0:
            g, k = self.inverse(g), -k
        out, acc = 0, g
        while k:
            if k & 1:
                out = int(self.table[out, acc])
            acc = int(self.table[acc, acc])
            k >>= 1
        return out

    def element_order(self, g):
        k, acc = 1, g
        while acc != 0:
            acc = int(self.table[acc, g])
            k += 1
        return k

    def element_orders(self):
        if self._orders is None:
            self._orders = np.array([self.element_order(g)
                                     for g in range(self.order)])
        return self._orders

    # -- subgroup machinery -------------------------------------------

    def subgroup_closure(self, gens):
        """Sorted element list of the subgroup generated by ``gens``."""
        gens = [int(g) for g in gens]
        seen = {0}
        frontier = [0]
        step = gens + [int(self.inv[g]) for g in gens]
        while frontier:
            nxt = []
            for h in frontier:
                for g in step:
                    x = int(self.table[h, g])
                    if x not in seen:
                        seen.add(x)
                        nxt.append(x)
            frontier = nxt
        if self.order % len(seen):
            raise AssertionError("closure size %d does not divide group order %d"
                                 % (len(seen), self.order))
        return sorted(seen)

    def conjugacy_class_of(self, g):
        allg = np.arange(self.order)
        orbit = np.unique(self.table[self.table[allg, g], self.inv[allg]])
        return [int(x) for x in orbit]

    def normal_closure(self, gens):
        """Smallest normal subgroup containing ``gens``.

        The subgroup generated by a conjugation-closed set is normal, so one
        closure over the union of conjugacy classes suffices; a greedy
        generating subset keeps the closure cheap.
        """
        seed = set()
        for g in gens:
            seed.update(self.conjugacy_class_of(g))
        current = {0}
        chosen = []
        for s in sorted(seed):
            if s not in current:
                chosen.append(s)
                current = set(self.subgroup_closure(chosen))
        return sorted(current)

    def center(self):
        n = self.order
        mask = (self.table == self.table.T).all(axis=1)
        return [int(g) for g in np.nonzero(mask)[0]]

    def centralizer(self, g):
        mask = self.table[:, g] == self.table[g, :]
        return [int(h) for h in np.nonzero(mask)[0]]

    def is_abelian(self):
        return bool((self.table == self.table.T).all())

    def conjugacy_classes(self):
        if self._classes is None:
            n = self.order
            seen = np.zeros(n, dtype=bool)
            classes = []
            allg = np.arange(n)
            inv_all = self.inv[allg]
            for g in range(n):
                if seen[g]:
                    continue
                orbit = np.unique(self.table[self.table[allg, g], inv_all])
                seen[orbit] = True
                classes.append([int(x) for x in orbit])
            self._classes = classes
        return self._classes

    def conjugacy_class_count(self):
        return len(self.conjugacy_classes())

    def count_involutions(self):
        diag = self.table[np.arange(self.order), np.arange(self.order)]
        return int(np.count_nonzero(diag == 0)) - 1  # exclude the identity

    def derived_subgroup(self):
        comms = set()
        for g in range(self.order):
            gh = self.table[g]
            row = self.table[self.table[gh, self.inv[g]], self.inv[np.arange(self.order)]]
            # row[h] = [g, h]
            comms.update(int(x) for x in np.unique(row))
        return self.normal_closure(sorted(comms))

    def sylow_subgroup(self, p):
        """A Sylow p-subgroup, by greedy normalizer extension."""
        n = self.order
        target = 1
        while n % p == 0:
            target *= p
            n //= p
        sub = [0]
        orders = self.element_orders()
        while len(sub) < target:
            sub_set = set(sub)
            candidate = None
            for g in self._normalizer(sub):
                if g in sub_set:
                    continue
                o = orders[g]
                while o % p == 0:
                    o //= p
                if o == 1:
                    candidate = g
                    break
            if candidate is None:  # cannot happen for correct tables
                raise AssertionError("Sylow extension stuck at order %d" % len(sub))
            sub = self.subgroup_closure(sub + [candidate])
        return sub

    def _normalizer(self, sub):
        sub_set = set(sub)
        out = []
        for g in range(self.order):
            ig = self.inv[g]
            if all(int(self.table[self.table[g, s], ig]) in sub_set for s in sub):
                out.append(g)
        return out

    def subgroup_as_group(self, elements, name=""):
        """Reindex a closed element subset as its own FiniteGroup."""
        elements = sorted(int(x) for x in elements)
        if elements[0] != 0:
            raise ValueError("subgroup must contain the identity")
        index = {g: i for i, g in enumerate(elements)}
        k = len(elements)
        table = np.empty((k, k), dtype=np.int32)
        for i, g in enumerate(elements):
            row = self.table[g, elements]
            try:
                table[i] = [index[int(x)] for x in row]
            except KeyError:
                raise ValueError("element set is not closed under product")
        gens = _greedy_generators(table)
        sub = FiniteGroup(table, gens, name=name or ("subgroup(order=%d) of %s"
                                                     % (k, self.name)))
        return sub

    def __repr__(self):
        return "FiniteGroup(%s, order=%d)" % (self.name, self.order)


def _greedy_generators(table):
    """A small generating list for a multiplication table, deterministically."""
    n = table.shape[0]
    if n == 1:
        return []
    gens = []
    size = 1
    current = {0}
    for g in range(1, n):
        if g in current:
            continue
        gens.append(g)
        current = set(_closure_from_table(table, gens))
        size = len(current)
        if size == n:
            break
    return gens


def _closure_from_table(table, gens):
    seen = {0}
    frontier = [0]
    n = table.shape[0]
    inv = np.empty(n, dtype=np.int64)
    rows, cols = np.nonzero(table == 0)
    inv[rows] = cols
    step = list(gens) + [int(inv[g]) for g in gens]
    while frontier:
        nxt = []
        for h in frontier:
            for g in step:
                x = int(table[h, g])
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return sorted(seen)


# --- Todd-Coxeter coset enumeration ------------------------------------


def _relator_letters(rel, rank):
    out = []
    for gen, sign in rel.letters:
        out.append(2 * gen if sign > 0 else 2 * gen + 1)
    return out


class _CosetTable:
    def __init__(self, nletters, cap):
        self.nletters = nletters
        self.cap = cap
        self.rows = [[SENTINEL] * nletters]
        self.parent = [(SENTINEL, SENTINEL)]  # (parent coset, letter)
        self.labels = [0]  # union-find
        self.dead = 0

    def rep(self, c):
        labels = self.labels
        root = c
        while labels[root] != root:
            root = labels[root]
        while labels[c] != root:
            labels[c], c = root, labels[c]
        return root

    def entry(self, c, x):
        t = self.rows[c][x]
        return SENTINEL if t == SENTINEL else self.rep(t)

    def define(self, c, x):
        if len(self.rows) - self.dead >= self.cap:
            raise CosetCapExceeded(
                "coset cap %d exceeded (presentation may define a larger or "
                "infinite group)" % self.cap)
        new = len(self.rows)
        self.rows.append([SENTINEL] * self.nletters)
        self.parent.append((c, x))
        self.labels.append(new)
        self.rows[c][x] = new
        self.rows[new][x ^ 1] = c
        return new

    def merge(self, a, b, queue):
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        keep, drop = (a, b) if a < b else (b, a)
        self.labels[drop] = keep
        self.dead += 1
        queue.append(drop)

    def process_coincidences(self, queue):
        while queue:
            dead_coset = queue.pop()
            row = self.rows[dead_coset]
            for x in range(self.nletters):
                t = row[x]
                if t == SENTINEL:
                    continue
                row[x] = SENTINEL
                # transfer the fact dead*x = t to the surviving labels
                a, b = self.rep(dead_coset), self.rep(t)
                ax = self.rows[a][x]
                if ax != SENTINEL:
                    self.merge(self.rep(ax), b, queue)
                else:
                    bx = self.rows[b][x ^ 1]
                    if bx != SENTINEL:
                        self.merge(self.rep(bx), a, queue)
                    else:
                        self.rows[a][x] = b
                        self.rows[b][x ^ 1] = a

    def scan(self, c, rel, fill):
        """Scan relator ``rel`` from coset ``c``; fill gaps if ``fill``."""
        queue = []
        f, i = c, 0
        b, j = c, len(rel) - 1
        while True:
            while i <= j:
                t = self.entry(f, rel[i])
                if t == SENTINEL:
                    break
                f, i = t, i + 1
            if i > j:
                if f != b:
                    self.merge(f, b, queue)
                    self.process_coincidences(queue)
                return
            while j >= i:
                t = self.entry(b, rel[j] ^ 1)
                if t == SENTINEL:
                    break
                b, j = t, j - 1
            if j < i:
                self.merge(f, b, queue)
                self.process_coincidences(queue)
                return
            if j == i:
                self.rows[f][rel[i]] = b
                self.rows[b][rel[i] ^ 1] = f
                return
            if not fill:
                return
            self.define(f, rel[i])


def coset_enumerate(pres, coset_cap=50000):
    """Enumerate the cosets of the trivial subgroup (HLT with lookahead) and
    return the group in its regular representation.

    Raises CosetCapExceeded when more than ``coset_cap`` live cosets would be
    needed even after a lookahead compression pass.
    """
    nletters = 2 * pres.gen_count
    rels = [_relator_letters(r, pres.gen_count) for r in pres.relators]
    ct = _CosetTable(nletters, coset_cap)

    def live_cosets():
        return [c for c in range(len(ct.rows)) if ct.rep(c) == c]

    c = 0
    while c < len(ct.rows):
        if ct.rep(c) != c:
            c += 1
            continue
        try:
            for rel in rels:
                if ct.rep(c) != c:
                    break
                ct.scan(c, rel, fill=True)
            if ct.rep(c) == c:
                for x in range(nletters):
                    if ct.entry(c, x) == SENTINEL:
                        ct.define(c, x)
        except CosetCapExceeded:
            # Lookahead: deduce and merge without defining, then retry once.
            before = len(ct.rows) - ct.dead
            for d in live_cosets():
                if ct.rep(d) != d:
                    continue
                for rel in rels:
                    ct.scan(d, rel, fill=False)
            if len(ct.rows) - ct.dead >= before:
                raise
            continue  # retry the same coset index
        c += 1

    live = live_cosets()
    index = {old: i for i, old in enumerate(live)}
    n = len(live)
    # Letter action on compacted cosets.
    action = np.empty((nletters, n), dtype=np.int32)
    for i, old in enumerate(live):
        for x in range(nletters):
            t = ct.entry(old, x)
            if t == SENTINEL:
                raise AssertionError("incomplete coset table after enumeration")
            action[x, i] = index[t]

    # Multiplication table column-by-column along the definition tree:
    # coset 0 is the identity; a coset defined as parent*letter has
    # column = letter action applied to the parent's column.
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n)
    order_of_def = sorted(live[1:])  # definition order = coset numbers
    for old in order_of_def:
        p, x = ct.parent[old]
        # The parent may itself have been merged; its representative's
        # column is already filled iff rep(parent) was defined earlier.
        p = ct.rep(p)
        table[:, index[old]] = action[x, table[:, index[p]]]
    generators = [int(action[2 * i, 0]) for i in range(pres.gen_count)]
    g = FiniteGroup(table, generators, gen_names=pres.gen_names,
                    name="presented(%s)" % ",".join(pres.gen_names),
                    presentation=pres)
    # Safety: all relators must evaluate to the identity.
    for rel in pres.relators:
        if evaluate_in_group(g, rel, g.generators) != 0:
            raise AssertionError("relator %r violated in enumerated group"
                                 % print_word(rel, pres.gen_names))
    return g


def evaluate_in_group(G, word, images):
    """Image of a word under generator assignments ``images``."""
    out = 0
    for gen, sign in word.letters:
        g = images[gen] if sign > 0 else G.inverse(images[gen])
        out = G.mult(out, g)
    return out


# --- built-in constructors ----------------------------------------------


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def cyclic(n):
    """The cyclic group of order n, generator at index 1."""
    if n < 1:
        raise ValueError("order must be positive")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    pres = Presentation(("a",), ("a^%d" % n,)) if n > 1 else None
    gens = [1] if n > 1 else []
    return FiniteGroup(table, gens, gen_names=("a",) if n > 1 else (),
                       name="cyclic(%d)" % n, presentation=pres)


def semidirect_pq(p, q, r):
    """The metacyclic group <a,b | a^p, b^q, b a b^-1 = a^r> of order p*q.

    Conditions: p, q prime with 3 <= q < p, 2 <= r < p, and r^q = 1 mod p.
    Violations raise ValueError naming the failed condition.
    """
    if not (_is_prime(p) and _is_prime(q)):
        raise ValueError("p=%d and q=%d must both be prime" % (p, q))
    if not 3 <= q < p:
        raise ValueError("need 3 <= q < p, got q=%d, p=%d" % (q, p))
    if not 2 <= r < p:
        raise ValueError("need 2 <= r < p, got r=%d, p=%d" % (r, p))
    if pow(r, q, p) != 1:
        raise ValueError("need r^q = 1 mod p: %d^%d = %d mod %d"
                         % (r, q, pow(r, q, p), p))
    n = p * q
    rpow = [pow(r, j, p) for j in range(q)]
    table = np.empty((n, n), dtype=np.int32)
    for i1 in range(p):
        for j1 in range(q):
            e1 = i1 * q + j1
            for i2 in range(p):
                for j2 in range(q):
                    table[e1, i2 * q + j2] = ((i1 + i2 * rpow[j1]) % p) * q \
                        + (j1 + j2) % q
    pres = Presentation(("a", "b"),
                        ("a^%d" % p, "b^%d" % q, "b a b^-1 a^-%d" % r))
    return FiniteGroup(table, [q, 1], gen_names=("a", "b"),
                       name="semidirect_pq(%d,%d,%d)" % (p, q, r),
                       presentation=pres)


def heisenberg_presentation(p):
    return Presentation(("x", "y"),
                        ("x^%d" % p, "y^%d" % p, "[x,y]^%d" % p,
                         "[x,[x,y]]", "[y,[x,y]]"))


def heisenberg(p):
    """Upper unitriangular 3x3 matrices over Z/p; order p^3.

    Triples (i,j,k) with (i,j,k)*(m,n,l) = (i+m, j+n, k+l+i*n);
    generators x = (1,0,0), y = (0,1,0); [x,y] = (0,0,1) is central.
    """
    if not _is_prime(p):
        raise ValueError("p=%d must be prime" % p)
    n = p ** 3

    def enc(i, j, k):
        return (i * p + j) * p + k

    table = np.empty((n, n), dtype=np.int32)
    for i in range(p):
        for j in range(p):
            for k in range(p):
                e1 = enc(i, j, k)
                for m in range(p):
                    for nn in range(p):
                        for l in range(p):
                            table[e1, enc(m, nn, l)] = enc(
                                (i + m) % p, (j + nn) % p, (k + l + i * nn) % p)
    x, y = enc(1, 0, 0), enc(0, 1, 0)
    return FiniteGroup(table, [x, y], gen_names=("x", "y"),
                       name="heisenberg(%d)" % p,
                       presentation=heisenberg_presentation(p))


def direct_product(G1, G2, name=""):
    """External direct product; element (g1, g2) at index g1*|G2| + g2."""
    n1, n2 = G1.order, G2.order
    t1 = G1.table.astype(np.int64)
    t2 = G2.table.astype(np.int64)
    # table[(a1,a2),(b1,b2)] = (t1[a1,b1], t2[a2,b2])
    block = (t1[:, None, :, None] * n2 + t2[None, :, None, :])
    table = block.reshape(n1 * n2, n1 * n2)
    gens = [g * n2 for g in G1.generators] + list(G2.generators)
    names = tuple("l_%s" % s for s in G1.gen_names) + \
        tuple("r_%s" % s for s in G2.gen_names)
    return FiniteGroup(table, gens, gen_names=names,
                       name=name or "%s x %s" % (G1.name, G2.name))


# --- automorphisms -------------------------------------------------------


def _relator_survivors(G, rel, images, var_gen, cands):
    """Subset of ``cands`` that, assigned as images[var_gen], map ``rel`` to 1.

    All other generators appearing in the relator must already be assigned
    in ``images``.  Evaluates the relator over the whole candidate vector
    with table indexing.
    """
    table = G.table
    inv_cands = G.inv[cands]
    acc = np.zeros(len(cands), dtype=np.int32)
    for gen, sign in rel.letters:
        if gen == var_gen:
            acc = table[acc, cands if sign > 0 else inv_cands]
        else:
            g = images[gen] if sign > 0 else int(G.inv[images[gen]])
            acc = table[acc, g]
    return cands[acc == 0]


def automorphisms(G, pres=None, node_cap=200000, fixed=None, limit=None):
    """Automorphisms of G as generator-image tuples.

    Backtracking over images of the presentation's generators, pruned by
    element-order equality, partial relator satisfaction, and a final
    generation check.  Raises AutCapExceeded past ``node_cap`` visited nodes.

    ``fixed`` optionally pins the images of some generators (a dict mapping
    generator index to element); ``limit`` stops the search after that many
    automorphisms have been found, which makes existence queries cheap even
    when the full automorphism group is far too large to enumerate.
    """
    if pres is None:
        pres = G.presentation
    if pres is None:
        raise ValueError("no presentation available for %s" % G.name)
    k = pres.gen_count
    gens = G.generators
    if len(gens) != k:
        raise ValueError("group generators do not match the presentation")
    orders = G.element_orders()
    gen_orders = [int(orders[g]) for g in gens]

    # Assign images for generators in decreasing element-order; candidates
    # restricted to matching element order (or to the pinned image).
    assign_order = sorted(range(k), key=lambda i: (-gen_orders[i], i))
    candidates = {}
    for i in range(k):
        if fixed is not None and i in fixed:
            img = int(fixed[i])
            pool = [img] if int(orders[img]) == gen_orders[i] else []
        else:
            pool = [g for g in range(G.order) if orders[g] == gen_orders[i]]
        candidates[i] = np.array(pool, dtype=np.int32)

    # For pruning: relators checkable once all their generators are assigned.
    # Each lands at the level where its last generator gets an image, so it
    # always references the level's own generator plus earlier ones.
    rel_gens = []
    for rel in pres.relators:
        rel_gens.append(set(g for g, _ in rel.letters))
    check_after = [[] for _ in range(k)]
    for ri, used in enumerate(rel_gens):
        last = max(assign_order.index(g) for g in used)
        check_after[last].append(ri)

    images = [None] * k
    found = []
    nodes = 0

    def backtrack(pos):
        nonlocal nodes
        if pos == k:
            if len(G.subgroup_closure([g for g in images])) == G.order:
                found.append(tuple(int(g) for g in images))
                return limit is not None and len(found) >= limit
            return False
        gi = assign_order[pos]
        cands = candidates[gi]
        nodes += len(cands)
        if nodes > node_cap:
            raise AutCapExceeded(
                "automorphism search exceeded node cap %d" % node_cap)
        for ri in check_after[pos]:
            if not len(cands):
                break
            cands = _relator_survivors(G, pres.relators[ri], images, gi, cands)
        for cand in cands:
            images[gi] = int(cand)
            if backtrack(pos + 1):
                images[gi] = None
                return True
        images[gi] = None
        return False

    backtrack(0)
    return found


def extend_to_permutation(G, pres_gens, images):
    """The permutation of G induced by mapping generator elements
    ``pres_gens`` to ``images`` (assumed to define an automorphism)."""
    n = G.order
    perm = np.full(n, SENTINEL, dtype=np.int32)
    perm[0] = 0
    frontier = [0]
    step = [(g, img) for g, img in zip(pres_gens, images)]
    step += [(G.inverse(g), G.inverse(img)) for g, img in step]
    while frontier:
        nxt = []
        for h in frontier:
            for g, img in step:
                x = int(G.table[h, g])
                if perm[x] == SENTINEL:
                    perm[x] = G.table[perm[h], img]
                    nxt.append(x)
        frontier = nxt
    if SENTINEL in perm:
        raise ValueError("generator elements do not generate the group")
    return perm


def automorphism_permutations(G, auts):
    return [extend_to_permutation(G, G.generators, t) for t in auts]


def pair_orbit_count(G, pairs, auts=None, pres=None, node_cap=200000):
    """Orbits of the diagonal Aut(G) action on an explicit pair list.

    The automorphism list is a whole group, so the orbit of a pair is its
    image set under every listed map; the minimum image code is a
    canonical orbit label, computed vectorized over all pairs at once.
    """
    if auts is None:
        auts = automorphisms(G, pres, node_cap=node_cap)
    perms = automorphism_permutations(G, auts)
    n = G.order
    first = np.array([g for g, _ in pairs], dtype=np.int64)
    second = np.array([h for _, h in pairs], dtype=np.int64)
    codes = first * n + second
    canon = codes.copy()
    valid = np.zeros(n * n, dtype=bool)
    valid[codes] = True
    for perm in perms:
        mapped = perm[first].astype(np.int64) * n + perm[second]
        if not valid[mapped].all():
            raise ValueError("pair list is not Aut-invariant")
        np.minimum(canon, mapped, out=canon)
    return len(np.unique(canon))


def single_aut_orbit_certificate(G, pairs, pres=None, node_cap=200000):
    """Best-effort proof that an Aut-closed pair list is one Aut(G) orbit.

    Avoids enumerating Aut(G): pairs are first fused under conjugation
    (inner maps are free), then one constrained automorphism-existence
    query runs per conjugation class, pinning a noncommuting pair of
    presentation generators onto the class representative.  Every class
    reached means every pair lies in the generator pair's orbit, so the
    list is exactly one orbit.

    Returns True (certified single orbit), False (some class admits no
    automorphism, so there are at least two orbits), or None when no
    presentation or no noncommuting generator pair is available.  Raises
    AutCapExceeded if an existence query hits the node cap.  The single-
    orbit reading requires ``pairs`` to be closed under the diagonal
    Aut(G) action (e.g. all noncommuting pairs).
    """
    if pres is None:
        pres = G.presentation
    if pres is None or not pairs:
        return None
    gens = G.generators
    source = None
    for i in range(len(gens)):
        for j in range(len(gens)):
            if i != j and G.commutator(gens[i], gens[j]) != 0:
                source = (i, j)
                break
        if source is not None:
            break
    if source is None:
        return None

    n = G.order
    conj = []
    for g in G.generators:
        for h in (g, int(G.inv[g])):
            x = np.arange(n, dtype=np.int64)
            conj.append(G.table[G.table[h, x], G.inv[h]].astype(np.int64))

    visited = set()
    reps = []
    for u, v in pairs:
        code = int(u) * n + int(v)
        if code in visited:
            continue
        reps.append((int(u), int(v)))
        visited.add(code)
        frontier = [code]
        while frontier:
            us = np.array([c // n for c in frontier], dtype=np.int64)
            vs = np.array([c % n for c in frontier], dtype=np.int64)
            nxt = []
            for perm in conj:
                for m in (perm[us] * n + perm[vs]).tolist():
                    if m not in visited:
                        visited.add(m)
                        nxt.append(m)
            frontier = nxt

    gi, gj = source
    for a, b in reps:
        if not automorphisms(G, pres, node_cap=node_cap,
                             fixed={gi: a, gj: b}, limit=1):
            return False
    return True
