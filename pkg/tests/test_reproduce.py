"""Every worked example reproduces, and the frozen goldens match the oracle."""

import importlib.util
from pathlib import Path

import pytest

from projdel.goldens import GOLDENS
from projdel.reproduce import EXAMPLES, reproduce

SCRIPT = Path(__file__).resolve().parents[1] / "scripts" / "derive_goldens.py"


@pytest.mark.parametrize("example", sorted(EXAMPLES))
def test_reproduces(example):
    rep = reproduce(example)
    failed = [c for c in rep.checks if not c["pass"]]
    assert rep.status == "PASS", failed


def _oracle():
    spec = importlib.util.spec_from_file_location("derive_goldens", SCRIPT)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def test_goldens_are_current():
    pytest.importorskip("numpy")
    mod = _oracle()
    assert mod.scc() == GOLDENS["scc"]
    assert mod.cub_hyp() == GOLDENS["cub-hyp"]
    assert mod.finite_01() == GOLDENS["finite-01"]
    assert mod.lc_line() == GOLDENS["lc-line"]
    assert mod.p_del_not_proj() == GOLDENS["p-del-not-proj"]
    assert mod.circle_quartic() == GOLDENS["prop4-circle"]
