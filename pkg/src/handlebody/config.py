"""Plain-text run configuration: a group, an optional generator
assignment, and an optional asserted extension-obstruction status.

Format (one directive per line, ``#`` starts a comment):

    group <name>
    kind cyclic n=<int>
    kind semidirect_pq p=<int> q=<int> r=<int>
    kind heisenberg p=<int>
    kind presentation
    gens <name> <name> ...          # presentation kind only
    rel <word over gens>            # repeatable; presentation kind only
    known_b0 zero|nonzero           # optional asserted status
    theta x1=<word> y1=<word> x2=<word> y2=<word>   # optional

Theta words are written over the group's generator names and must be
whitespace-free (use ``*`` between factors, e.g. ``b*a^-1``).
"""

from __future__ import annotations

from .words import parse_word
from .groups import (Presentation, coset_enumerate, evaluate_in_group,
                     cyclic, semidirect_pq, heisenberg)
from .homs import Epimorphism

KINDS = ("cyclic", "semidirect_pq", "heisenberg", "presentation")
SURFACE_KEYS = ("x1", "y1", "x2", "y2")


class ConfigError(ValueError):
    """Malformed configuration text."""


class RunConfig:
    """Parsed configuration: the group is built eagerly, theta lazily
    validated (its errors are the caller's domain errors, not syntax)."""

    def __init__(self, name, group, theta_words, known_b0, kind, params,
                 kind_line, gens_line, rel_lines):
        self.name = name
        self.group = group
        self.theta_words = theta_words
        self.known_b0 = known_b0
        self.kind = kind
        self.params = params
        self._kind_line = kind_line
        self._gens_line = gens_line
        self._rel_lines = rel_lines

    def theta(self):
        """Build the epimorphism, or None when no theta was declared.
        Raises the group-level validation errors unchanged."""
        if self.theta_words is None:
            return None
        G = self.group
        images = []
        for key in SURFACE_KEYS:
            w = parse_word(self.theta_words[key], names=G.gen_names)
            images.append(evaluate_in_group(G, w, G.generators))
        return Epimorphism(G, tuple(images))

    def normalized(self):
        """Canonical text form; parsing it again yields an equal config."""
        lines = ["group %s" % self.name, self._kind_line]
        if self._gens_line:
            lines.append(self._gens_line)
        lines.extend(self._rel_lines)
        if self.known_b0 is not None:
            lines.append("known_b0 %s" % self.known_b0)
        if self.theta_words is not None:
            lines.append("theta " + " ".join(
                "%s=%s" % (k, self.theta_words[k]) for k in SURFACE_KEYS))
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return (isinstance(other, RunConfig)
                and self.normalized() == other.normalized())


def _parse_params(tokens, line_no):
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise ConfigError("line %d: expected key=value, got %r"
                              % (line_no, tok))
        key, _, value = tok.partition("=")
        try:
            out[key] = int(value)
        except ValueError:
            raise ConfigError("line %d: %s must be an integer, got %r"
                              % (line_no, key, value)) from None
    return out


def _require(params, keys, kind, line_no):
    missing = [k for k in keys if k not in params]
    extra = [k for k in params if k not in keys]
    if missing or extra:
        raise ConfigError("line %d: kind %s takes exactly %s"
                          % (line_no, kind, ", ".join(keys)))


def parse_config(text, coset_cap=50000):
    name = None
    kind = None
    params = {}
    gens = None
    rels = []
    known_b0 = None
    theta_words = None
    kind_line = gens_line = None
    rel_lines = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        directive, rest = tokens[0], tokens[1:]
        if directive == "group":
            if len(rest) != 1:
                raise ConfigError("line %d: group takes one name" % line_no)
            name = rest[0]
        elif directive == "kind":
            if not rest or rest[0] not in KINDS:
                raise ConfigError("line %d: kind must be one of %s"
                                  % (line_no, ", ".join(KINDS)))
            kind = rest[0]
            params = _parse_params(rest[1:], line_no)
            kind_line = "kind " + " ".join([kind] + sorted(
                "%s=%d" % kv for kv in params.items()))
        elif directive == "gens":
            if not rest:
                raise ConfigError("line %d: gens needs at least one name"
                                  % line_no)
            gens = rest
            gens_line = "gens " + " ".join(gens)
        elif directive == "rel":
            if not rest:
                raise ConfigError("line %d: rel needs a word" % line_no)
            rels.append(" ".join(rest))
            rel_lines.append("rel " + " ".join(rest))
        elif directive == "known_b0":
            if rest not in (["zero"], ["nonzero"]):
                raise ConfigError("line %d: known_b0 must be zero or nonzero"
                                  % line_no)
            known_b0 = rest[0]
        elif directive == "theta":
            theta_words = {}
            for tok in rest:
                key, eq, word = tok.partition("=")
                if not eq or key not in SURFACE_KEYS or not word:
                    raise ConfigError(
                        "line %d: theta entries are x1=<word> .. y2=<word>"
                        % line_no)
                theta_words[key] = word
            if sorted(theta_words) != sorted(SURFACE_KEYS):
                raise ConfigError("line %d: theta needs all of %s"
                                  % (line_no, ", ".join(SURFACE_KEYS)))
        else:
            raise ConfigError("line %d: unknown directive %r"
                              % (line_no, directive))

    if name is None:
        raise ConfigError("missing 'group <name>' line")
    if kind is None:
        raise ConfigError("missing 'kind' line")

    if kind == "cyclic":
        _require(params, ("n",), kind, 0)
        group = cyclic(params["n"])
    elif kind == "semidirect_pq":
        _require(params, ("p", "q", "r"), kind, 0)
        group = semidirect_pq(params["p"], params["q"], params["r"])
    elif kind == "heisenberg":
        _require(params, ("p",), kind, 0)
        group = heisenberg(params["p"])
    else:
        if params:
            raise ConfigError("kind presentation takes no parameters")
        if gens is None:
            raise ConfigError("kind presentation requires a gens line")
        if not rels:
            raise ConfigError("kind presentation requires rel lines")
        try:
            pres = Presentation(gens, rels)
        except ValueError as exc:
            raise ConfigError("bad relator: %s" % exc) from None
        group = coset_enumerate(pres, coset_cap=coset_cap)
    group.name = name

    if theta_words is not None:
        for key in SURFACE_KEYS:
            # Surface early on syntax/unknown-generator errors; group-level
            # validation stays in theta().
            try:
                parse_word(theta_words[key], names=group.gen_names)
            except ValueError as exc:
                raise ConfigError("theta %s: %s" % (key, exc)) from None

    return RunConfig(name, group, theta_words, known_b0, kind, params,
                     kind_line, gens_line, rel_lines)


def load_config(path, coset_cap=50000):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_config(text, coset_cap=coset_cap)
    except ConfigError as exc:
        raise ConfigError("%s: %s" % (path, exc)) from None
