"""Run-configuration parsing, validation, and normalization."""

import glob
import os

import pytest

from handlebody.config import (ConfigError, RunConfig, load_config,
                               parse_config)
from handlebody.homs import NotGenerating, RelationViolated

CONFIG_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "configs")

MINIMAL = """
# a comment
group three
kind cyclic n=3
theta x1=a y1=a x2=a y2=a
"""


def test_parse_minimal():
    cfg = parse_config(MINIMAL)
    assert cfg.name == "three"
    assert cfg.kind == "cyclic"
    assert cfg.params == {"n": 3}
    assert cfg.group.order == 3
    assert cfg.known_b0 is None
    theta = cfg.theta()
    assert theta.images == (1, 1, 1, 1)


def test_parse_presentation_kind():
    text = """group k4
kind presentation
gens a b
rel a^2
rel b^2
rel [a,b]
"""
    cfg = parse_config(text)
    assert cfg.group.order == 4
    assert cfg.theta_words is None
    assert cfg.theta() is None


def test_known_b0_values():
    cfg = parse_config("group g\nkind cyclic n=5\nknown_b0 zero\n")
    assert cfg.known_b0 == "zero"
    cfg = parse_config("group g\nkind heisenberg p=3\nknown_b0 nonzero\n")
    assert cfg.known_b0 == "nonzero"
    with pytest.raises(ConfigError):
        parse_config("group g\nkind cyclic n=5\nknown_b0 maybe\n")


@pytest.mark.parametrize("text,fragment", [
    ("kind cyclic n=3\n", "group"),                      # missing name
    ("group g\n", "kind"),                               # missing kind
    ("group g\nkind wheel n=3\n", "kind"),               # unknown kind
    ("group g\nkind cyclic\n", "exactly"),               # missing param
    ("group g\nkind cyclic n=3 m=4\n", "exactly"),       # extra param
    ("group g\nkind cyclic n=x\n", "integer"),           # non-integer
    ("group g\nkind cyclic n=3\nbogus 1\n", "directive"),
    ("group g\nkind presentation\nrel a^2\n", "gens"),
    ("group g\nkind presentation\ngens a\nrel a^^2\n", "bad relator"),
    ("group g\nkind cyclic n=3\ntheta x1=a\n", "theta"),
    ("group g\nkind cyclic n=3\ntheta x1=Q y1=a x2=a y2=a\n", "theta x1"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ConfigError) as err:
        parse_config(text)
    assert fragment in str(err.value)


def test_theta_domain_errors_pass_through():
    # Images that do not generate: caught at theta() time, not parse time.
    cfg = parse_config("group g\nkind heisenberg p=3\n"
                       "theta x1=x y1=x x2=x y2=x\n")
    with pytest.raises(NotGenerating):
        cfg.theta()
    # Images violating the surface relation.
    cfg = parse_config("group g\nkind semidirect_pq p=11 q=5 r=3\n"
                       "theta x1=a y1=b x2=a y2=b\n")
    with pytest.raises(RelationViolated):
        cfg.theta()


def test_normalized_round_trip_for_shipped_configs():
    paths = sorted(glob.glob(os.path.join(CONFIG_DIR, "*.cfg")))
    assert paths, "no shipped configs found"
    for path in paths:
        cfg = load_config(path)
        again = parse_config(cfg.normalized())
        assert again == cfg
        # Normalization is idempotent.
        assert again.normalized() == cfg.normalized()


def test_normalized_orders_directives():
    text = ("group g\nknown_b0 zero\nkind semidirect_pq r=3 q=5 p=11\n"
            "theta x1=a y1=b x2=b^-1 y2=b*a^-1\n")
    cfg = parse_config(text)
    norm = cfg.normalized()
    lines = norm.splitlines()
    assert lines[0] == "group g"
    assert lines[1].startswith("kind semidirect_pq")
    assert lines[-2] == "known_b0 zero"
    assert lines[-1].startswith("theta x1=")


def test_load_config_wraps_path(tmp_path):
    p = tmp_path / "bad.cfg"
    p.write_text("group g\nkind cyclic\n")
    with pytest.raises(ConfigError) as err:
        load_config(str(p))
    assert "bad.cfg" in str(err.value)
    with pytest.raises((ConfigError, OSError)):
        load_config(str(tmp_path / "missing.cfg"))


def test_coset_cap_forwarded():
    text = "group g\nkind presentation\ngens a\nrel a^50\n"
    with pytest.raises((ConfigError, Exception)) as err:
        parse_config(text, coset_cap=5)
    assert "cap" in str(err.value).lower() or "coset" in str(err.value).lower()
