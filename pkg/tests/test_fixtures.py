import pytest

from rankedtutte.fixtures import FIXTURES, run_fixtures


@pytest.mark.parametrize("name", [fx.name for fx in FIXTURES])
def test_fixture(name):
    results = list(run_fixtures(name))
    fx, rows, ok = next(r for r in results if r[0].name == name)
    assert ok, [(c, d) for c, o, d in rows if not o]
