"""The ten built-in substitution automorphisms of the rank-4 free group.

Each automorphism is stored extensionally as the 4-tuple of images of the
generators x1, y1, x2, y2.  Applying one to a word substitutes each letter by
the corresponding image (or its inverse) and freely reduces; composition is
substitution of substitutions.  The built-ins come in inverse pairs:
``sigma(j)`` and ``sigma(j + 5)`` undo each other for j in 1..5.

Labels follow the rightmost-applied-first convention used in reports:
``"s1*s3"`` is the map sending w to s1(s3(w)).
"""

from __future__ import annotations

from .words import Word, identity, parse_word, print_word

RANK = 4


class TwistAuto:
    """A free-group endomorphism given by generator images (rank 4)."""

    __slots__ = ("images", "label", "_table")

    def __init__(self, images, label=None):
        images = tuple(images)
        if len(images) != RANK:
            raise ValueError("need %d image words, got %d" % (RANK, len(images)))
        for img in images:
            if not isinstance(img, Word) or img.rank != RANK:
                raise ValueError("images must be rank-%d words" % RANK)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "label", label)
        # Byte-level substitution table: letter value 1..8 -> image bytes.
        table = [b""] * (2 * RANK + 1)
        for i, img in enumerate(images):
            table[i + 1] = img.data
            table[i + 1 + RANK] = (~img).data
        object.__setattr__(self, "_table", tuple(table))

    def __setattr__(self, name, value):
        raise AttributeError("TwistAuto is immutable")

    def __eq__(self, other):
        return isinstance(other, TwistAuto) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        imgs = ", ".join(print_word(w) for w in self.images)
        if self.label:
            return "TwistAuto(%s; label=%r)" % (imgs, self.label)
        return "TwistAuto(%s)" % imgs


def apply_bytes(table, data, rank=RANK):
    """Substitute letter bytes through ``table`` and freely reduce.

    Shared hot path for apply() and the orbit generator; ``table`` maps each
    letter byte to the byte string of its image word.
    """
    out = bytearray()
    for b in data:
        for c in table[b]:
            if out and out[-1] == (c - rank if c > rank else c + rank):
                out.pop()
            else:
                out.append(c)
    return bytes(out)


def apply(f, w):
    """Image of word ``w`` under the substitution ``f``."""
    if w.rank != RANK:
        raise ValueError("expected a rank-%d word" % RANK)
    return Word.from_bytes(apply_bytes(f._table, w.data), RANK)


def _join_labels(a, b):
    if a is None or b is None:
        return None
    if a == "id":
        return b
    if b == "id":
        return a
    return "%s*%s" % (a, b)


def compose(f, g):
    """f after g: apply(compose(f, g), w) = apply(f, apply(g, w))."""
    return TwistAuto(tuple(apply(f, img) for img in g.images),
                     _join_labels(f.label, g.label))


def identity_auto():
    """The identity substitution (neutral for compose)."""
    return TwistAuto(tuple(parse_word(n) for n in ("x1", "y1", "x2", "y2")),
                     label="id")


# Images of (x1, y1, x2, y2) for the five positive twists and their inverses.
_SIGMA_IMAGES = {
    1: ("x1 y1", "y1", "x2", "y2"),
    2: ("x1", "y1 x1^-1", "x2", "y2"),
    3: ("x2^-1 y1 x1", "y1", "x2", "x2^-1 y1 y2"),
    4: ("x1", "y1", "x2 y2^-1", "y2"),
    5: ("x1", "y1", "x2", "y2 x2^-1"),
    6: ("x1 y1^-1", "y1", "x2", "y2"),
    7: ("x1", "y1 x1", "x2", "y2"),
    8: ("y1^-1 x2 x1", "y1", "x2", "y1^-1 x2 y2"),
    9: ("x1", "y1", "x2 y2", "y2"),
    10: ("x1", "y1", "x2", "y2 x2"),
}

_SIGMA_CACHE = {}


def sigma(j):
    """The j-th built-in twist substitution, 1 <= j <= 10.

    sigma(j) and sigma(j+5) are mutually inverse for j in 1..5.
    """
    if j not in _SIGMA_IMAGES:
        raise ValueError("sigma index must be in 1..10, got %r" % (j,))
    auto = _SIGMA_CACHE.get(j)
    if auto is None:
        auto = TwistAuto(tuple(parse_word(t) for t in _SIGMA_IMAGES[j]),
                         label="s%d" % j)
        _SIGMA_CACHE[j] = auto
    return auto


def compose_path(indices):
    """The substitution for a path of σ indices in application order.

    ``compose_path([3, 1, 5])`` is s5∘s1∘s3 (3 applied first), matching the
    report label "s5*s1*s3".
    """
    auto = identity_auto()
    for j in indices:
        auto = compose(sigma(j), auto)
    return auto


def commutator_base():
    """The seed word [x1, y1]."""
    return parse_word("[x1,y1]")
