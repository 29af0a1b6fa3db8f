"""Command-line front door: table emission, the verification battery, and
the acceptance-suite driver, with on-disk caching of Weyl enumerations and
character tables.

All output is deterministic given (flags, seed): JSON documents are emitted
with sorted keys and TSV rows in sorted order.
"""

from __future__ import annotations

import json

import click

from . import affine, cache, characters, hessenberg
from .acceptance import run_all
from .gkm import KModel
from .rootdata import RootDatum


def _emit_json(doc):
    click.echo(json.dumps(doc, sort_keys=True, indent=2))


def _parse_vec(text, rank):
    parts = tuple(int(x) for x in text.split(","))
    if len(parts) != rank:
        raise click.UsageError(f"expected {rank} comma-separated integers, got {text!r}")
    return parts


_datum_options = [
    click.option("--type", "type_label", required=True,
                 type=click.Choice(["A", "B", "C", "D", "E", "F", "G"]),
                 help="Dynkin type."),
    click.option("--rank", required=True, type=int, help="Rank."),
    click.option("--lattice-mode", default="simply_connected",
                 type=click.Choice(["simply_connected", "adjoint"]),
                 show_default=True,
                 help="Coweight lattice: coroot lattice or full coweight lattice."),
]


def datum_options(fn):
    for opt in reversed(_datum_options):
        fn = opt(fn)
    return fn


@click.group()
@click.option("--cache-dir", default=None, envvar="WEYLKIT_CACHE_DIR",
              help="Cache directory (also via WEYLKIT_CACHE_DIR).")
@click.option("--seed", default=0, type=int, show_default=True,
              help="Seed for randomized property checks.")
@click.pass_context
def main(ctx, cache_dir, seed):
    """Exact root-system, affine Weyl, and equivariant K-theory tables."""
    ctx.ensure_object(dict)
    ctx.obj["cache_dir"] = cache_dir
    ctx.obj["seed"] = seed


@main.command()
@datum_options
@click.pass_context
def roots(ctx, type_label, rank, lattice_mode):
    """Emit the root datum as JSON."""
    rd = RootDatum(type_label, rank, lattice_mode=lattice_mode)
    doc = cache.cached(
        "root_datum",
        rd.to_json,
        directory=ctx.obj["cache_dir"],
        type=type_label, rank=rank, lattice_mode=lattice_mode,
    )
    _emit_json(doc)


@main.command()
@datum_options
@click.option("--radius", default=2, type=int, show_default=True)
@click.option("--format", "fmt", default="tsv", type=click.Choice(["tsv", "json"]),
              show_default=True)
def dtable(type_label, rank, lattice_mode, radius, fmt):
    """Orbit dimensions d_lambda over a lattice window (TSV: lambda, d)."""
    rd = RootDatum(type_label, rank, lattice_mode=lattice_mode)
    rows = [(lam, affine.d_lambda(rd, lam)) for lam in sorted(rd.lattice_points(radius))]
    if fmt == "json":
        _emit_json([{"lambda": list(l), "d": d} for l, d in rows])
    else:
        for lam, d in rows:
            click.echo("\t".join([",".join(map(str, lam)), str(d)]))


@main.command()
@datum_options
@click.option("--radius", default=2, type=int, show_default=True)
@click.option("--format", "fmt", default="tsv", type=click.Choice(["tsv", "json"]),
              show_default=True)
def conv(type_label, rank, lattice_mode, radius, fmt):
    """Convolution fiber dimensions for dominant lambda and arbitrary mu
    (TSV: lambda, mu, lambda+mu, fiber dim)."""
    rd = RootDatum(type_label, rank, lattice_mode=lattice_mode)
    window = sorted(rd.lattice_points(radius))
    rows = []
    for lam in window:
        if not rd.is_dominant(lam):
            continue
        for mu in window:
            total, dim = affine.standard_convolution(rd, lam, mu)
            rows.append((lam, mu, total, dim))
    if fmt == "json":
        _emit_json(
            [{"lambda": list(a), "mu": list(b), "sum": list(s), "fiber_dim": d}
             for a, b, s, d in rows]
        )
    else:
        for a, b, s, d in rows:
            click.echo("\t".join([",".join(map(str, a)), ",".join(map(str, b)),
                                  ",".join(map(str, s)), str(d)]))


@main.command()
@datum_options
@click.option("--lambda", "lam_text", default=None,
              help="Coweight in lattice coordinates, e.g. 0,0.")
@click.option("--gl", "gl_text", default=None,
              help="GL_n diagonal coordinates, e.g. -1,0,1 (type A, adjoint).")
def hess(type_label, rank, lattice_mode, lam_text, gl_text):
    """Fixed-component datum: dimension, Betti numbers, root sets."""
    if (lam_text is None) == (gl_text is None):
        raise click.UsageError("provide exactly one of --lambda or --gl")
    if gl_text is not None:
        rd = RootDatum(type_label, rank, lattice_mode="adjoint")
        entries = tuple(int(x) for x in gl_text.split(","))
        lam = hessenberg.gl_coweight(rd, entries)
    else:
        rd = RootDatum(type_label, rank, lattice_mode=lattice_mode)
        lam = _parse_vec(lam_text, rank)
    datum = hessenberg.hessenberg_datum(rd, lam)
    doc = datum.to_json()
    doc["poincare"] = hessenberg.poincare_polynomial(rd, lam)
    _emit_json(doc)


@main.command()
@datum_options
@click.option("--mu", "mu_text", required=True,
              help="Dominant highest weight in lattice coordinates.")
@click.option("--format", "fmt", default="json", type=click.Choice(["tsv", "json"]),
              show_default=True)
@click.pass_context
def weights(ctx, type_label, rank, lattice_mode, mu_text, fmt):
    """Weight multiplicities, microstalk dimensions, and the total dimension
    for one highest weight."""
    rd = RootDatum(type_label, rank, lattice_mode=lattice_mode)
    mu = _parse_vec(mu_text, rank)

    def compute():
        table = characters.character_multiplicities(rd, mu)
        return {
            "mu": list(mu),
            "dimension": characters.weyl_dimension(rd, mu),
            "multiplicities": [[list(l), m] for l, m in sorted(table.items())],
            "microstalk": [[list(l), m]
                           for l, m in sorted(characters.microstalk_dims(rd, mu).items())],
        }

    doc = cache.cached(
        "character_table", compute, directory=ctx.obj["cache_dir"],
        type=type_label, rank=rank, lattice_mode=lattice_mode, mu=list(mu),
    )
    if fmt == "json":
        _emit_json(doc)
    else:
        for lam, m in doc["multiplicities"]:
            click.echo("\t".join([",".join(map(str, lam)), str(m)]))


@main.command()
@datum_options
def kmod(type_label, rank, lattice_mode):
    """Structural summary of the fixed-point K-theory model."""
    rd = RootDatum(type_label, rank, lattice_mode=lattice_mode)
    model = KModel(rd)
    conv_choice = model.resolve_convention()
    doc = {
        "root_datum": rd.to_json(),
        "fixed_points": [list(w.word) for w in model.W],
        "positive_coroots": sorted(list(c) for c in model.coroot_of.values()),
        "right_action_convention": {
            "family": conv_choice["family"],
            "eps": conv_choice["eps"],
            "gamma": [list(g) for g in conv_choice["gamma"]],
        },
    }
    _emit_json(doc)


@main.command()
@click.option("--type", "type_label", required=True,
              type=click.Choice(["A", "B", "C", "D", "E", "F", "G"]))
@click.option("--rank", required=True, type=int)
@click.option("--lattice-mode", default="adjoint",
              type=click.Choice(["simply_connected", "adjoint"]),
              show_default=True,
              help="Defaults to adjoint: the basis certificate lives there.")
@click.pass_context
def verify(ctx, type_label, rank, lattice_mode):
    """Run the bimodule verification battery; exit 0 iff the structure is
    certified."""
    rd = RootDatum(type_label, rank, lattice_mode=lattice_mode)
    rep = KModel(rd).verify_cc_bimodule(seed=ctx.obj["seed"])
    _emit_json(rep.to_json())
    ctx.exit(0 if rep.iso_found and rep.all_relations_pass() else 1)


@main.command(name="verify-all")
@click.pass_context
def verify_all(ctx):
    """Run the full acceptance suite: one line per criterion, nonzero exit on
    any failure."""
    records = run_all(seed=ctx.obj["seed"])
    ok = True
    for rec in records:
        status = "PASS" if rec["passed"] else "FAIL"
        ok = ok and rec["passed"]
        click.echo(f"{status} {rec['name']}: {rec['detail']}")
    ctx.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
