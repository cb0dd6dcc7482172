"""The uncompiled kernel path must agree with the numba path bit for bit."""
import json
import os
import subprocess
import sys

from modk import _numba_utils

SNIPPET = r"""
import json
from modk import graph as gr
from modk._numba_utils import NUMBA_ENABLED
from modk.colouring import exact_chi
from modk.divisible import find_divisible, find_regular_subgraph
from modk.pipeline import colour_graph

out = {"numba": NUMBA_ENABLED, "runs": []}
for seed in range(4):
    g = gr.gnp(14, 0.45, seed)
    out["runs"].append({
        "order": list(gr.degeneracy_order(g).order),
        "exact": [exact_chi(gr.gnp(7, 0.5, seed), k, 8, 10**5).value for k in (2, 3)],
        "div": [list(map(list, find_divisible(g, k, 10**5).witness)) for k in (3, 4)],
        "colour": sorted((list(e), c) for e, c in colour_graph(g, 3)[0].assignment.items()),
    })
out["regular"] = list(map(list, find_regular_subgraph(gr.petersen(), 2, 10**5).witness))
print(json.dumps(out))
"""


def _run(disable):
    env = dict(os.environ)
    env.pop("MODK_DISABLE_NUMBA", None)
    if disable:
        env["MODK_DISABLE_NUMBA"] = "1"
    res = subprocess.run([sys.executable, "-c", SNIPPET], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def test_fallback_matches_compiled():
    pure = _run(True)
    fast = _run(False)
    assert pure["numba"] is False
    assert fast["numba"] is _numba_utils.NUMBA_ENABLED
    assert pure["runs"] == fast["runs"] and pure["regular"] == fast["regular"]


def test_flag_values():
    for value, expected in [("1", True), ("yes", True), ("0", False), ("", False)]:
        env = dict(os.environ, MODK_DISABLE_NUMBA=value)
        res = subprocess.run([sys.executable, "-c", "from modk._numba_utils import DISABLED_BY_ENV as d; print(d)"],
                             env=env, capture_output=True, text=True, check=True)
        assert res.stdout.strip() == str(expected)
