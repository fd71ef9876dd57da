"""``gkm`` command line: JSON in, JSON or DOT out.

Exit codes: 0 success, 1 input error, 2 verification failure.
"""
from __future__ import annotations

import functools
import json
import random
import sys

import click

from .cartan import QuiverPresentation, cartan_from_quiver, dominant_weight, pair, validate_datum
from .crystal import weight_multiplicities
from .errors import GKMError
from .export import export_graph, graph_from_json
from .highest_weight import generate_highest_weight, make_iota
from .quiver_geom import (
    check_membership_N,
    check_regular_semisimple,
    check_stability,
    eps_omega,
    gl_action,
    moment_map,
    random_gl,
    RepPoint,
)
from .verify import verify_graph

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2
DEFAULT_DEPTH = 8


class InputError(click.ClickException):
    exit_code = EXIT_INPUT


def _guard(fn):
    """Turn parse and validation failures into exit code 1 with a diagnostic."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
        except (GKMError, KeyError, TypeError, ValueError, OSError) as exc:
            raise InputError(f"{type(exc).__name__}: {exc}") from None

    return wrapper


def _read_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _datum_from_doc(doc):
    if isinstance(doc, dict) and "matrix" in doc:
        return validate_datum(doc["matrix"], doc.get("labels"))
    if isinstance(doc, dict) and "vertices" in doc:
        return cartan_from_quiver(QuiverPresentation.from_json(doc))
    if isinstance(doc, list):
        return validate_datum(doc)
    raise ValueError("expected a matrix, a {matrix, labels} object or a quiver document")


def _load_datum(matrix: str | None, datum_path: str | None):
    if (matrix is None) == (datum_path is None):
        raise click.UsageError("give exactly one of --matrix or --datum")
    doc = json.loads(matrix) if matrix is not None else _read_json(datum_path)
    return _datum_from_doc(doc)


def _parse_weight(datum, text: str):
    """Accept a JSON list/object of pairings or a comma-separated list."""
    text = text.strip()
    if text.startswith(("[", "{")):
        values = json.loads(text)
    else:
        values = [int(v) for v in text.split(",") if v.strip()]
    return dominant_weight(datum, values)


def _parse_iota(text: str | None):
    if text is None:
        return None
    text = text.strip()
    if text.startswith("["):
        return [str(v) for v in json.loads(text)]
    return [v.strip() for v in text.split(",") if v.strip()]


def _emit(data: bytes | str, output: str | None):
    if isinstance(data, str):
        data = data.encode("utf-8")
    if output:
        with open(output, "wb") as fh:
            fh.write(data)
    else:
        click.echo(data.decode("utf-8"), nl=False)


def _summary(g) -> str:
    frontier = len(g.truncated_frontier)
    trunc = f"truncated at depth {g.depth_bound} ({frontier} frontier nodes)" if frontier else "complete"
    return f"nodes={len(g.nodes)} edges={len(g.edges)} {trunc}"


def _datum_options(fn):
    fn = click.option("--matrix", help="Borcherds-Cartan matrix as inline JSON.")(fn)
    fn = click.option("--datum", "datum_path", type=click.Path(dir_okay=False), help="JSON file: matrix, {matrix, labels} or quiver.")(fn)
    return fn


def _hw_options(require_weight: bool = True):
    def deco(fn):
        fn = _datum_options(fn)
        fn = click.option("--weight", required=require_weight, help="Pairings <h_i, lambda>, e.g. 1,0 or {\"1\": 1}.")(fn)
        fn = click.option("--depth", type=click.IntRange(min=0), default=DEFAULT_DEPTH, envvar="GKM_DEPTH", show_default=True)(fn)
        fn = click.option("--iota", help="Explicit iota cycle as labels, e.g. 1,2.")(fn)
        return fn

    return deco


def _generate(matrix, datum_path, weight, depth, iota):
    datum = _load_datum(matrix, datum_path)
    w = _parse_weight(datum, weight)
    return generate_highest_weight(datum, w, depth, make_iota(datum, _parse_iota(iota)))


class _Group(click.Group):
    """Group whose usage errors exit with 1, keeping 2 for failed verification."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        if not standalone_mode:
            return super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as exc:
            exc.show()
            sys.exit(EXIT_INPUT)
        except click.ClickException as exc:
            exc.show()
            sys.exit(exc.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_INPUT)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


@click.group(cls=_Group)
@click.version_option(package_name="artifact")
def main():
    """Highest weight crystals for generalized Kac-Moody algebras."""


# ------------------------------------------------------------------- cartan


@main.group()
def cartan():
    """Borcherds-Cartan data."""


@cartan.command("from-quiver")
@click.argument("path", type=click.Path(dir_okay=False))
@_guard
def cartan_from_quiver_cmd(path):
    """Print the Borcherds-Cartan datum of a quiver with edge loops."""
    datum = cartan_from_quiver(QuiverPresentation.from_json(_read_json(path)))
    doc = datum.to_json()
    doc["real"] = [datum.label(i) for i in datum.real_indices]
    doc["imaginary"] = [datum.label(i) for i in datum.imaginary_indices]
    click.echo(json.dumps(doc, indent=2))


# ------------------------------------------------------------------ crystal


@main.group()
def crystal():
    """Generate and check B(lambda)."""


@crystal.command()
@_hw_options()
@click.option("--format", "fmt", type=click.Choice(["json", "dot"]), default="json", show_default=True)
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="Write the graph here instead of stdout.")
@_guard
def generate(matrix, datum_path, weight, depth, iota, fmt, output):
    """Generate B(lambda) up to DEPTH f-steps from the highest weight element."""
    _, g = _generate(matrix, datum_path, weight, depth, iota)
    _emit(export_graph(g, fmt), output)
    click.echo(_summary(g), err=True)


@crystal.command()
@_hw_options(require_weight=False)
@click.option("--graph", "graph_path", type=click.Path(dir_okay=False), help="Verify an exported JSON graph instead of generating one.")
@click.pass_context
def verify(ctx, matrix, datum_path, weight, depth, iota, graph_path):
    """Run the invariant suite; exit 2 if any check fails."""
    report, g = _guard(_verify_inputs)(matrix, datum_path, weight, depth, iota, graph_path)
    doc = report.to_json()
    doc["summary"] = _summary(g)
    click.echo(json.dumps(doc, indent=2))
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        click.echo(f"{status} {c.name} (exercised {c.exercised}, violations {len(c.violations)})", err=True)
    ctx.exit(EXIT_OK if report.passed else EXIT_VERIFY)


def _verify_inputs(matrix, datum_path, weight, depth, iota, graph_path):
    if graph_path:
        g = graph_from_json(_read_json(graph_path))
        if g.crystal is None:
            raise ValueError("graph document lacks the highest weight metadata")
        return verify_graph(g.crystal, g), g
    if weight is None:
        raise click.UsageError("--weight is required unless --graph is given")
    crystal_, g = _generate(matrix, datum_path, weight, depth, iota)
    return verify_graph(crystal_, g), g


@crystal.command()
@_hw_options()
@_guard
def multiplicities(matrix, datum_path, weight, depth, iota):
    """Print weight multiplicities as [{weight, count}] up to DEPTH."""
    _, g = _generate(matrix, datum_path, weight, depth, iota)
    datum = g.datum
    rows = []
    for w, n in sorted(weight_multiplicities(g).items(), key=lambda kv: (sum(kv[0].root), kv[0].root)):
        rows.append({
            "weight": {
                "pairings": {datum.label(i): pair(datum, w, i) for i in datum.indices},
                "root": {datum.label(i): w.root[i] for i in datum.indices},
            },
            "count": n,
        })
    click.echo(json.dumps(rows, indent=2))
    click.echo(_summary(g), err=True)


# ------------------------------------------------------------------- quiver


@main.group()
def quiver():
    """Exact checks on framed quiver representations."""


@quiver.command("check")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for random GL conjugations.")
@click.option("--invariance", type=click.IntRange(min=0), default=0, help="Also check invariance under N random GL conjugations.")
@click.pass_context
def quiver_check(ctx, path, seed, invariance):
    """Report moment map, flag, regular semisimplicity, stability and eps^Omega."""
    doc, ok = _guard(_quiver_report)(path, seed, invariance)
    click.echo(json.dumps(doc, indent=2))
    ctx.exit(EXIT_OK if ok else EXIT_VERIFY)


def _quiver_report(path, seed, invariance):
    p = RepPoint.from_json(_read_json(path))
    q = p.quiver
    membership = check_membership_N(p)
    mu = moment_map(p, framed=True)
    rs = {}
    for v in q.vertices:
        barred = [a for a in q.loops_at(v) if a.id not in q.orientation]
        rs[v] = {a.id: check_regular_semisimple(p.x[a.id]) for a in barred}
    stab = check_stability(p)
    eps = {v: eps_omega(p, v) for v in q.vertices}
    doc = {
        "moment_map_zero": membership.moment_map_zero,
        "framed_moment_map_zero": all(m.is_zero_matrix for m in mu.values()),
        "flag": membership.flag,
        "regular_semisimple": rs,
        "member_N": membership.member,
        "stable": stab.stable,
        "eps_omega": eps,
    }
    ok = True
    if invariance:
        rng = random.Random(seed)
        bad = 0
        for _ in range(invariance):
            gp = gl_action(p, random_gl(p, rng))
            if check_stability(gp).stable != stab.stable or {v: eps_omega(gp, v) for v in q.vertices} != eps:
                bad += 1
        doc["invariance"] = {"trials": invariance, "seed": seed, "failures": bad}
        ok = bad == 0
    return doc, ok


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
