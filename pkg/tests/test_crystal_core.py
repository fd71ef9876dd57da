import pytest

from gkm_crystals.cartan import dominant_weight, validate_datum
from gkm_crystals.crystal import (
    check_axioms,
    check_strict_morphism,
    connected_to_seed,
    generate_component,
    weight_multiplicities,
)
from gkm_crystals.highest_weight import BInfCrystal, generate_highest_weight
from gkm_crystals.models import C_ELEMENT, CCrystal, ElementaryCrystal, TCrystal, c_crystal, t_lambda
from gkm_crystals.tensor import TensorCrystal


class PhiShifted(ElementaryCrystal):
    """B_i with phi_i raised by one at a single letter."""

    def __init__(self, datum, i, bad_n):
        super().__init__(datum, i)
        self.bad_n = bad_n

    def phi(self, i, b):
        v = super().phi(i, b)
        return v + 1 if i == self.i and b.n == self.bad_n else v


def test_planted_phi_defect_violates_iii():
    d = validate_datum([[2]])
    B = PhiShifted(d, 0, -2)
    rep = check_axioms(B, [B.letter(n) for n in range(-4, 2)])
    axioms = {v.axiom for v in rep.violations}
    assert "iii" in axioms
    assert any(v.axiom == "iii" and v.element.n == -2 for v in rep.violations)


def test_boundary_partners_are_skipped_not_failed():
    d = validate_datum([[2]])
    B = ElementaryCrystal(d, 0)
    rep = check_axioms(B, [B.letter(0)])
    assert rep.ok and rep.skipped == 2


def test_generate_c_and_t_are_singletons():
    d = validate_datum([[2, -1], [-1, 0]])
    g = generate_component(c_crystal(d), C_ELEMENT, 5)
    assert len(g.nodes) == 1 and g.edges == [] and not g.truncated
    T = t_lambda(d, dominant_weight(d, [1, 1]))
    g = generate_component(T, T.element, 5)
    assert len(g.nodes) == 1 and g.edges == []


def test_generate_rejects_negative_depth():
    d = validate_datum([[2]])
    with pytest.raises(ValueError):
        generate_component(c_crystal(d), C_ELEMENT, -1)


def test_generation_is_deterministic():
    d = validate_datum([[2, -1], [-1, 0]])
    lam = dominant_weight(d, [1, 1])
    _, g1 = generate_highest_weight(d, lam, 4)
    _, g2 = generate_highest_weight(d, lam, 4)
    assert g1.nodes == g2.nodes
    assert g1.sorted_edges() == g2.sorted_edges()
    assert g1.truncated_frontier == g2.truncated_frontier


def test_edges_satisfy_weight_shift_and_inverse():
    d = validate_datum([[2, -1], [-1, -2]])
    crystal, g = generate_highest_weight(d, dominant_weight(d, [1, 2]), 4)
    for s, i, t in g.edges:
        assert g.nodes[t].wt == g.nodes[s].wt.minus_root(i)
        assert crystal.e(i, t) == s


def test_multiplicities_and_connectedness():
    d = validate_datum([[2, -1], [-1, 2]])
    crystal, g = generate_highest_weight(d, dominant_weight(d, [1, 1]), 6)
    mult = {w.root: n for w, n in weight_multiplicities(g).items()}
    assert mult[(1, 1)] == 2 and sum(mult.values()) == 8
    assert connected_to_seed(crystal, g) == []


def test_connectedness_detects_stray_node():
    d = validate_datum([[2]])
    crystal, g = generate_highest_weight(d, dominant_weight(d, [1]), 4)
    _, other = generate_highest_weight(d, dominant_weight(d, [3]), 4)
    stray = max(other.nodes, key=lambda b: other.nodes[b].wt.height)
    g.nodes[stray] = other.nodes[stray]
    assert connected_to_seed(crystal, g) == [stray]


# ---------------------------------------------------------------- morphisms


def test_identity_on_t_lambda_is_strict_embedding():
    d = validate_datum([[2, -1], [-1, 0]])
    T = t_lambda(d, dominant_weight(d, [2, 1]))
    rep = check_strict_morphism(lambda b: b, [T.element], T, T)
    assert rep.strict_embedding


def test_tautological_embedding_into_tensor_product():
    d = validate_datum([[2, -1], [-1, 0]])
    lam = dominant_weight(d, [1, 1])
    crystal, g = generate_highest_weight(d, lam, 3)
    target = TensorCrystal([BInfCrystal(d), TCrystal(d, lam), CCrystal(d)])
    psi = {b: b for b in g.nodes}
    rep = check_strict_morphism(psi, g.interior(), crystal, target)
    assert rep.strict_embedding, rep.violations[:3]
    assert rep.skipped == 0


def test_collapsing_map_is_not_an_embedding():
    d = validate_datum([[2]])
    crystal, g = generate_highest_weight(d, dominant_weight(d, [2]), 4)
    nodes = g.sorted_nodes()
    psi = {b: crystal.seed for b in nodes}
    rep = check_strict_morphism(psi, nodes, crystal, crystal)
    assert not rep.injective
    assert not rep.strict_embedding
    assert rep.violations
