import pytest

from tanaka_forge.lie import jacobi_violations
from tanaka_forge.modules import realize_module, representation_violations, sp_dense
from tanaka_forge.presets import chevalley
from tanaka_forge.roots import WeightError, weight_system

CASES = [("A1", (4,)), ("A2", (1, 0)), ("A2", (1, 1)), ("A2", (2, 1)), ("B2", (1, 0)), ("B2", (0, 1)), ("G2", (1, 0))]


@pytest.mark.parametrize("label,w", CASES)
def test_realized_module_is_a_representation(label, w):
    ch = chevalley(label)
    mod = realize_module(ch, w)
    assert mod.dim == ch.root_system.weyl_dimension(w)
    assert representation_violations(ch.table, mod.matrices) == []
    assert mod.character() == weight_system(ch.root_system, w)


def test_cartan_acts_by_weights():
    ch = chevalley("A2")
    mod = realize_module(ch, (2, 0))
    for i in range(2):
        h = sp_dense(mod.action(ch.h_index(i)), mod.dim)
        for k, w in enumerate(mod.weights):
            assert h[k][k] == w[i]
            assert all(h[r][k] == 0 for r in range(mod.dim) if r != k)


def test_dimension_cap():
    ch = chevalley("A2")
    with pytest.raises(WeightError):
        realize_module(ch, (6, 6), dim_cap=200)
    with pytest.raises(WeightError):
        realize_module(ch, (1, -1))


def test_adjoint_module_matches_table():
    ch = chevalley("A1")
    mod = realize_module(ch, (2,))
    assert mod.dim == 3
    assert jacobi_violations(ch.table) == []
