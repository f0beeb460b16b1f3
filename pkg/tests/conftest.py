import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from dircut.graph import Digraph

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def digraphs(draw, min_n=2, max_n=6, max_arcs=None):
    n = draw(st.integers(min_n, max_n))
    slots = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(slots), unique=True, max_size=max_arcs or len(slots)))
    return Digraph(n, tuple(sorted(chosen)))


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        ok, detail = results[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def run_cli(capsys):
    from dircut.cli import run

    def call(*argv):
        code = run([str(a) for a in argv])
        out = capsys.readouterr()
        return code, out.out, out.err

    return call
