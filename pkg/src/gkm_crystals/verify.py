"""Invariant suite run over a generated ``B(lambda)`` graph."""
from __future__ import annotations

from dataclasses import dataclass, field

from .cartan import pair
from .crystal import CrystalGraph, check_axioms, connected_to_seed, sort_key
from .highest_weight import HighestWeightCrystal
from .quiver_geom import check_eps_condition

MAX_REPORTED = 20


@dataclass
class CheckResult:
    name: str
    violations: list[str] = field(default_factory=list)
    exercised: int = 0
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, msg: str):
        self.violations.append(msg)


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "exercised": c.exercised,
                    "violation_count": len(c.violations),
                    "violations": c.violations[:MAX_REPORTED],
                    **({"note": c.note} if c.note else {}),
                }
                for c in self.checks
            ],
        }


def e_string_length(crystal, i, b, limit: int) -> int:
    n = 0
    while n <= limit:
        b = crystal.e(i, b)
        if b is None:
            return n
        n += 1
    return n


def verify_graph(crystal: HighestWeightCrystal, g: CrystalGraph, extensions: tuple[int, ...] | None = None) -> VerifyReport:
    """Run every structural check on ``g`` against ``crystal``.

    Edges and statistics are taken from ``g`` as stored and compared with
    fresh evaluations, so a tampered graph is caught.
    """
    datum = crystal.datum
    indices = list(datum.indices)
    nodes = sorted(g.nodes, key=sort_key)
    ident = g.node_id
    report = VerifyReport()
    if extensions is None:
        extensions = (datum.rank, 2 * datum.rank)

    # crystal axioms on interior nodes
    c = CheckResult("axioms")
    interior = g.interior()
    ax = check_axioms(crystal, interior)
    c.exercised = ax.checked
    c.violations = [str(v) for v in ax.violations]
    c.note = f"{len(interior)} interior nodes, {ax.skipped} boundary conditions skipped"
    report.checks.append(c)

    # stored statistics agree with the crystal
    c = CheckResult("statistics")
    for b in nodes:
        data = g.nodes[b]
        if data.wt != crystal.wt(b):
            c.fail(f"stored weight differs at {ident(b)}")
        for i in indices:
            c.exercised += 1
            if data.eps[i] != crystal.epsilon(i, b) or data.phi[i] != crystal.phi(i, b):
                c.fail(f"stored eps/phi_{datum.label(i)} differ at {ident(b)}")
    report.checks.append(c)

    # every edge is an f-edge and is undone by e
    c = CheckResult("mutual_inverse")
    for s, i, t in g.edges:
        c.exercised += 1
        if crystal.f(i, s) != t:
            c.fail(f"edge {ident(s)} -{datum.label(i)}-> {ident(t)} is not f_{datum.label(i)}")
        if crystal.e(i, t) != s:
            c.fail(f"e_{datum.label(i)}({ident(t)}) != {ident(s)}")
    report.checks.append(c)

    c = CheckResult("phi_nonnegative")
    for b in nodes:
        for i in indices:
            c.exercised += 1
            ph = crystal.phi(i, b)
            if not ph >= 0:
                c.fail(f"phi_{datum.label(i)}({ident(b)}) = {ph}")
    report.checks.append(c)

    c = CheckResult("f_vanishing")
    for b in nodes:
        for i in indices:
            c.exercised += 1
            if (crystal.f(i, b) is None) != (crystal.phi(i, b) == 0):
                c.fail(f"f_{datum.label(i)} vanishing disagrees with phi at {ident(b)}")
    report.checks.append(c)

    c = CheckResult("imaginary_eps_zero")
    for b in nodes:
        for i in datum.imaginary_indices:
            c.exercised += 1
            if crystal.epsilon(i, b) != 0:
                c.fail(f"eps_{datum.label(i)}({ident(b)}) = {crystal.epsilon(i, b)}")
    report.checks.append(c)

    # imaginary e_i vanishes once <h_i, wt> <= -a_ii
    c = CheckResult("imaginary_e_vanishing")
    incoming = {(t, i) for s, i, t in g.edges}
    for b in nodes:
        w = crystal.wt(b)
        for i in datum.imaginary_indices:
            if pair(datum, w, i) <= -datum.a(i, i):
                c.exercised += 1
                if crystal.e(i, b) is not None:
                    c.fail(f"e_{datum.label(i)}({ident(b)}) is nonzero")
                if (b, i) in incoming:
                    c.fail(f"{ident(b)} has an incoming {datum.label(i)}-edge")
    report.checks.append(c)

    c = CheckResult("connected")
    c.exercised = len(nodes)
    if g.seed is None or g.seed not in g.nodes:
        c.fail("seed missing from graph")
    else:
        for b in connected_to_seed(crystal, g):
            c.fail(f"{ident(b)} has no e-path to the seed")
    report.checks.append(c)

    c = CheckResult("highest_element_unique")
    for b in nodes:
        top = all(crystal.epsilon(i, b) == 0 and crystal.e(i, b) is None for i in indices)
        if top:
            c.exercised += 1
            if b != g.seed:
                c.fail(f"{ident(b)} is a second highest element")
    if g.seed in g.nodes and not all(crystal.e(i, g.seed) is None for i in indices):
        c.fail("seed is not annihilated by every e_i")
    report.checks.append(c)

    # operators must not depend on how far the B(infinity) window extends
    c = CheckResult("window_invariance")
    others = [HighestWeightCrystal(datum, crystal.weight, crystal.iota, extra=k) for k in extensions]
    for b in nodes:
        for i in indices:
            base = (crystal.epsilon(i, b), crystal.phi(i, b), crystal.e(i, b), crystal.f(i, b))
            for k, other in zip(extensions, others):
                c.exercised += 1
                if (other.epsilon(i, b), other.phi(i, b), other.e(i, b), other.f(i, b)) != base:
                    c.fail(f"window extension by {k} changes index {datum.label(i)} at {ident(b)}")
    report.checks.append(c)

    # for real i, eps_i is the length of the e_i-string
    c = CheckResult("real_string_length")
    for b in nodes:
        limit = sum(crystal.wt(b).root)
        for i in datum.real_indices:
            c.exercised += 1
            l = e_string_length(crystal, i, b, limit)
            if l != crystal.epsilon(i, b):
                c.fail(f"e_{datum.label(i)}-string at {ident(b)} has length {l}, eps = {crystal.epsilon(i, b)}")
    report.checks.append(c)

    # nonemptiness condition for every realized e_i-string
    c = CheckResult("eps_condition")
    lam = crystal.weight.base
    for b in nodes:
        root = crystal.wt(b).root
        for i in indices:
            depth = sum(root)
            l = e_string_length(crystal, i, b, depth)
            alpha = list(root)
            alpha[i] -= l
            if l > 0:
                c.exercised += 1
            if not check_eps_condition(datum, lam, alpha, i, l):
                c.fail(f"{ident(b)} realizes an e_{datum.label(i)}-string of length {l} violating the condition")
    report.checks.append(c)
    return report
