"""Hand-built representation points with values worked out by hand.

``expected`` lists: unframed moment map zero, framed moment map zero, flag
exists, barred loops regular semisimple, N(alpha) member, stable, and
eps^Omega per vertex.
"""
from gkm_crystals.quiver_geom import RepPoint

JORDAN = {"vertices": ["1"], "arrow_pairs": [{"id": "s", "from": "1", "to": "1"}]}
TWO_LOOPS = {"vertices": ["1"], "arrow_pairs": [{"id": "s", "from": "1", "to": "1"}, {"id": "u", "from": "1", "to": "1"}]}
A2Q = {"vertices": ["1", "2"], "arrow_pairs": [{"id": "a", "from": "1", "to": "2"}]}
POINT = {"vertices": ["1"], "arrow_pairs": []}
# loop at i plus an arrow a: j -> i
LOOP_ARM = {"vertices": ["i", "j"], "arrow_pairs": [{"id": "s", "from": "i", "to": "i"}, {"id": "a", "from": "j", "to": "i"}]}

D12 = [["1", "0"], ["0", "2"]]
Z22 = [["0", "0"], ["0", "0"]]

FIXTURES = {
    "loop_nilpotent_sigma": (
        {"quiver": JORDAN, "dims": {"1": 2}, "x": {"s": [["0", "1"], ["0", "0"]], "s_bar": D12}},
        dict(mu=False, mu_framed=False, flag=True, rs=True, member=False, stable=False, eps={"1": 2}),
    ),
    "loop_nilpotent_sigma_framed": (
        {"quiver": JORDAN, "dims": {"1": 2}, "framing": {"1": 1}, "x": {"s": [["0", "1"], ["0", "0"]], "s_bar": D12}, "t": {"1": [["1", "1"]]}},
        dict(mu=False, mu_framed=False, flag=True, rs=True, member=False, stable=True, eps={"1": 2}),
    ),
    "loop_member_framed": (
        {"quiver": JORDAN, "dims": {"1": 2}, "framing": {"1": 1}, "x": {"s": Z22, "s_bar": D12}, "t": {"1": [["1", "1"]]}},
        dict(mu=True, mu_framed=True, flag=True, rs=True, member=True, stable=True, eps={"1": 2}),
    ),
    "loop_repeated_eigenvalue": (
        {"quiver": JORDAN, "dims": {"1": 2}, "x": {"s": Z22, "s_bar": [["1", "0"], ["0", "1"]]}},
        dict(mu=True, mu_framed=True, flag=True, rs=False, member=False, stable=False, eps={"1": 2}),
    ),
    "loop_jordan_block_barred": (
        {"quiver": JORDAN, "dims": {"1": 2}, "x": {"s": Z22, "s_bar": [["1", "1"], ["0", "1"]]}},
        dict(mu=True, mu_framed=True, flag=True, rs=False, member=False, stable=False, eps={"1": 2}),
    ),
    "loop_invertible_sigma": (
        {"quiver": JORDAN, "dims": {"1": 2}, "x": {"s": [["0", "1"], ["1", "0"]], "s_bar": Z22}},
        dict(mu=True, mu_framed=True, flag=False, rs=False, member=False, stable=False, eps={"1": 2}),
    ),
    "zero_loopless_dim1": (
        {"quiver": POINT, "dims": {"1": 1}},
        dict(mu=True, mu_framed=True, flag=True, rs=True, member=True, stable=False, eps={"1": 1}),
    ),
    "all_dims_zero": (
        {"quiver": A2Q, "dims": {"1": 0, "2": 0}},
        dict(mu=True, mu_framed=True, flag=True, rs=True, member=True, stable=True, eps={"1": 0, "2": 0}),
    ),
    "arm_image_e1": (
        {"quiver": LOOP_ARM, "dims": {"i": 2, "j": 1}, "x": {"s_bar": D12, "a": [["1"], ["0"]]}},
        dict(mu=True, mu_framed=True, flag=True, rs=True, member=True, stable=False, eps={"i": 1, "j": 1}),
    ),
    "arm_image_e1_plus_e2": (
        {"quiver": LOOP_ARM, "dims": {"i": 2, "j": 1}, "x": {"s_bar": D12, "a": [["1"], ["1"]]}},
        dict(mu=True, mu_framed=True, flag=True, rs=True, member=True, stable=False, eps={"i": 0, "j": 1}),
    ),
    "a2_framed_stable": (
        {"quiver": A2Q, "dims": {"1": 1, "2": 1}, "framing": {"2": 1}, "x": {"a": [["1"]]}, "t": {"2": [["1"]]}},
        dict(mu=True, mu_framed=True, flag=True, rs=True, member=True, stable=True, eps={"1": 1, "2": 0}),
    ),
    "a2_cycle_unstable": (
        {"quiver": A2Q, "dims": {"1": 1, "2": 1}, "x": {"a": [["1"]], "a_bar": [["1/2"]]}},
        dict(mu=False, mu_framed=False, flag=False, rs=True, member=False, stable=False, eps={"1": 0, "2": 0}),
    ),
    "loop_framed_invariant_line": (
        {"quiver": JORDAN, "dims": {"1": 2}, "framing": {"1": 1}, "x": {"s": Z22, "s_bar": D12}, "t": {"1": [["1", "0"]]}},
        dict(mu=True, mu_framed=True, flag=True, rs=True, member=True, stable=False, eps={"1": 2}),
    ),
    "point_framed_moment": (
        {"quiver": POINT, "dims": {"1": 1}, "framing": {"1": 1}, "s": {"1": [["1"]]}, "t": {"1": [["-3/2"]]}},
        dict(mu=True, mu_framed=False, flag=True, rs=True, member=True, stable=True, eps={"1": 1}),
    ),
    "two_loops_commuting": (
        {"quiver": TWO_LOOPS, "dims": {"1": 2}, "x": {"s_bar": D12, "u_bar": [["3", "0"], ["0", "5"]]}},
        dict(mu=True, mu_framed=True, flag=True, rs=True, member=True, stable=False, eps={"1": 2}),
    ),
    "two_loops_no_common_eigenvector": (
        {"quiver": TWO_LOOPS, "dims": {"1": 2}, "x": {"s_bar": D12, "u_bar": [["1", "1"], ["1", "1"]]}},
        dict(mu=True, mu_framed=True, flag=False, rs=True, member=False, stable=False, eps={"1": 2}),
    ),
}


def load(name: str) -> RepPoint:
    return RepPoint.from_json(FIXTURES[name][0])
