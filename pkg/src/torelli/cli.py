"""Command-line surface with JSON output for scripting and golden files.

Every library operation is reachable from exactly one subcommand; JSON
output is byte-stable for identical inputs.  Exit codes: 0 success,
1 domain error (violated precondition, reported verbatim), 2 usage
error.
"""

from __future__ import annotations

import json
import sys

import click

from . import config as cfg
from . import drags, johnson, lattice, rewriter, words


def _emit(ctx: click.Context, obj: dict) -> None:
    if ctx.obj and ctx.obj.get("human"):
        for key, value in obj.items():
            click.echo(f"{key}: {json.dumps(value, separators=(',', ':'))}")
    else:
        click.echo(json.dumps(obj, separators=(",", ":")))


def _fail(exc: Exception) -> None:
    click.echo(json.dumps({"error": str(exc)}, separators=(",", ":")),
               err=True)
    sys.exit(1)


def _domain(func):
    """Map parse failures to usage errors (exit 2) and precondition or
    validation failures to domain errors (exit 1)."""
    import functools

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except words.ParseError as exc:
            raise click.UsageError(str(exc))
        except (words.PreconditionError, cfg.ConfigError, ValueError) as exc:
            _fail(exc)
    return wrapper


def _config_option(func):
    return click.option("--config", "config_text", required=True,
                        help='configuration JSON, e.g. '
                             '\'{"n":2,"b":1,"partition":[[1]]}\'')(func)


def _load_config(config_text: str) -> cfg.PartitionConfig:
    return cfg.config_from_json(config_text)


def _parse_boundary(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise words.ParseError(f"boundary must be 'r,s', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise words.ParseError(f"boundary must be 'r,s', got {text!r}") from None


@click.group()
@click.option("--output", type=click.Choice(["json", "human"]),
              default="json", help="output mode")
@click.pass_context
def main(ctx: click.Context, output: str) -> None:
    """Exact computation with drag generators, Johnson images,
    Tomaszewski rewriting and summand lattices."""
    ctx.obj = {"human": output == "human"}


# --- words ------------------------------------------------------------------

@main.group()
def word() -> None:
    """Free-group word arithmetic."""


@word.command("reduce")
@click.option("--n", type=int, required=True)
@click.option("--word", "word_text", required=True)
@click.pass_context
@_domain
def word_reduce(ctx, n: int, word_text: str) -> None:
    w = words.parse_word(word_text, n)
    _emit(ctx, {"word": words.word_text(w)})


@word.command("mul")
@click.option("--n", type=int, required=True)
@click.option("--word", "u_text", required=True)
@click.option("--other", "v_text", required=True)
@click.pass_context
@_domain
def word_mul(ctx, n: int, u_text: str, v_text: str) -> None:
    u = words.parse_word(u_text, n)
    v = words.parse_word(v_text, n)
    _emit(ctx, {"word": words.word_text(words.mul(u, v))})


@word.command("inv")
@click.option("--n", type=int, required=True)
@click.option("--word", "word_text", required=True)
@click.pass_context
@_domain
def word_inv(ctx, n: int, word_text: str) -> None:
    w = words.parse_word(word_text, n)
    _emit(ctx, {"word": words.word_text(words.inv(w))})


# --- Johnson ----------------------------------------------------------------

@main.command()
@click.option("--n", type=int, required=True)
@click.option("--word", "word_text", required=True)
@click.pass_context
@_domain
def rho(ctx, n: int, word_text: str) -> None:
    """Degree-2 Magnus projection of a commutator-subgroup word."""
    w = words.parse_word(word_text, n)
    vec = johnson.rho(w)
    _emit(ctx, {"coeffs": [list(t) for t in vec.coeffs]})


@main.command()
@_config_option
@click.option("--drags", "drags_text", required=True,
              help="drag word, e.g. 'HD:1,2 CD-:1,2,3^-1'")
@click.pass_context
@_domain
def tau(ctx, config_text: str, drags_text: str) -> None:
    """Johnson image of a realized drag word."""
    config = _load_config(config_text)
    table = drags.tau_star(config, drags.parse_drag_word(drags_text))
    _emit(ctx, table.to_json())


# --- drags ------------------------------------------------------------------

@main.command()
@_config_option
@click.option("--reduced", is_flag=True, help="reduced generating set")
@click.pass_context
@_domain
def gens(ctx, config_text: str, reduced: bool) -> None:
    """List drag generators for a configuration."""
    config = _load_config(config_text)
    gs = (drags.reduced_generating_set(config) if reduced
          else drags.all_generators(config))
    _emit(ctx, {"count": len(gs), "generators": [g.token() for g in gs]})


@main.command()
@_config_option
@click.option("--drags", "drags_text", required=True)
@click.pass_context
@_domain
def realize(ctx, config_text: str, drags_text: str) -> None:
    """Generator images of a realized drag word."""
    config = _load_config(config_text)
    basis = cfg.build_basis(config)
    f = drags.realize_word(config, drags.parse_drag_word(drags_text))
    _emit(ctx, {
        "rank": f.rank,
        "basis": [role.text() for role in basis.roles],
        "images": [words.word_text(w) for w in f.images],
        "inverse_images": [words.word_text(w) for w in f.inverse_images],
    })


def _verify_config(config: cfg.PartitionConfig, mode: str) -> list[dict]:
    checks: list[dict] = []
    header = json.dumps(cfg.config_to_json(config), separators=(",", ":"))

    def record(name: str, detail: str, ok: bool) -> None:
        checks.append({"config": header, "check": name, "detail": detail,
                       "ok": bool(ok)})

    n = config.n
    if mode in ("membership", "all"):
        for g in drags.all_generators(config):
            f = drags.realize(config, g)
            ok = drags.membership_IOP(config, f) and words.verify_certificate(f)
            record("membership", g.token(), ok)
    if mode in ("relations", "all"):
        for j in range(1, n + 1):
            record("pd_relation", f"j={j}", drags.verify_pd_relation(config, j))
        for r in range(1, config.num_blocks + 1):
            for i in range(1, n + 1):
                for j in range(i + 1, n + 1):
                    record("bcd_relation", f"r={r},i={i},j={j}",
                           drags.verify_bcd_relation(config, r, i, j))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                for k in range(j + 1, n + 1):
                    if i != j and i != k:
                        ok, expr = drags.verify_cd_identity(config, i, j, k)
                        record("cd_identity", f"i={i},j={j},k={k} -> {expr}", ok)
    if mode == "all":
        for g in drags.all_generators(config):
            ok = (drags.tau_star(config, ((g, 1),))
                  == drags.tau_star_formula(config, g))
            record("tau_table", g.token(), ok)
        computed, formula, invariants = drags.abelianization_rank(config)
        record("rank", f"computed={computed} formula={formula} "
               f"invariants={invariants}",
               computed == formula and all(x == 1 for x in invariants))
    return checks


@main.command()
@click.option("--config", "config_text", default=None,
              help="configuration JSON; omit to run the whole test grid")
@click.option("--relations", "mode", flag_value="relations")
@click.option("--membership", "mode", flag_value="membership")
@click.option("--all", "mode", flag_value="all", default=True)
@click.pass_context
@_domain
def verify(ctx, config_text: str | None, mode: str) -> None:
    """Check drag membership certificates and relations; --all also
    reproduces the Johnson table and the rank formula.  Without --config
    the whole standard grid is verified and a certificate listing every
    identity is emitted."""
    if config_text is None:
        configs = cfg.standard_grid()
    else:
        configs = [_load_config(config_text)]
    checks: list[dict] = []
    for config in configs:
        checks.extend(_verify_config(config, mode))
    _emit(ctx, {"configs": len(configs),
                "ok": all(c["ok"] for c in checks),
                "checks": checks})


@main.command()
@_config_option
@click.pass_context
@_domain
def rank(ctx, config_text: str) -> None:
    """Abelianization rank: computed vs formula."""
    config = _load_config(config_text)
    computed, formula, _ = drags.abelianization_rank(config)
    _emit(ctx, {"computed_rank": computed, "formula_rank": formula,
                "match": computed == formula})


# --- rewriting --------------------------------------------------------------

@main.command()
@click.option("--n", type=int, required=True)
@click.option("--word", "word_text", required=True)
@click.pass_context
@_domain
def rewrite(ctx, n: int, word_text: str) -> None:
    """Tomaszewski factorization of a commutator-subgroup word."""
    w = words.parse_word(word_text, n)
    fact = rewriter.tomaszewski_factor(w)
    _emit(ctx, {"word": words.word_text(w),
                "factors": [{"factor": f.text(), "exp": e}
                            for f, e in fact.factors]})


@main.command()
@_config_option
@click.option("--boundary", required=True, help="boundary address 'r,s'")
@click.option("--gamma", "gamma_text", required=True,
              help="loop word (rank n)")
@click.pass_context
@_domain
def push(ctx, config_text: str, boundary: str, gamma_text: str) -> None:
    """Realize a boundary push and report its membership status."""
    config = _load_config(config_text)
    gamma = words.parse_word(gamma_text, config.n)
    f = drags.push_boundary(config, _parse_boundary(boundary), gamma)
    _emit(ctx, {
        "rank": f.rank,
        "images": [words.word_text(w) for w in f.images],
        "membership": drags.membership_IOP(config, f),
    })


@main.command("push-factor")
@_config_option
@click.option("--boundary", required=True, help="boundary address 'r,s'")
@click.option("--word", "word_text", required=True,
              help="commutator-subgroup loop word (rank n)")
@click.pass_context
@_domain
def push_factor(ctx, config_text: str, boundary: str, word_text: str) -> None:
    """Drag word realizing a pushed commutator word, with a check that
    it matches the direct push realization."""
    config = _load_config(config_text)
    addr = _parse_boundary(boundary)
    w = words.parse_word(word_text, config.n)
    dw = rewriter.push_factorization(config, addr, w)
    matches = words.same_map(drags.realize_word(config, dw),
                             drags.push_boundary(config, addr, w))
    _emit(ctx, {"drags": drags.drag_word_text(dw), "matches_push": matches})


# --- lattices ---------------------------------------------------------------

@main.command()
@click.option("--n", type=int, required=True)
@click.option("--bound", type=int, required=True)
@click.option("--homology", is_flag=True,
              help="also compute the truncated H_1 rank")
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False),
              default=None, help="write the 1-skeleton in DOT format")
@click.pass_context
@_domain
def fs(ctx, n: int, bound: int, homology: bool, dot_path: str | None) -> None:
    """Truncation of the complex of rank-1 summands of Z^n."""
    verts = lattice.fs_vertices(n, bound)
    edges = lattice.fs_edges(n, bound)
    out = {
        "vertices": [list(v) for v in verts],
        "edges": [[list(u), list(v)] for u, v in edges],
        "connected": lattice.fs_connected(n, bound),
    }
    if homology:
        out["h1_rank"] = lattice.fs_h1_rank(n, bound)
    if dot_path:
        with open(dot_path, "w") as handle:
            handle.write(lattice.fs_dot(n, bound))
        out["dot"] = dot_path
    _emit(ctx, out)


@main.command("complete-basis")
@click.option("--n", type=int, required=True)
@click.option("--vectors", "vectors_text", required=True,
              help="JSON list of integer vectors, e.g. '[[1,1]]'")
@click.pass_context
@_domain
def complete_basis_cmd(ctx, n: int, vectors_text: str) -> None:
    """Extend summand-spanning rows to a basis of Z^n."""
    try:
        vectors = json.loads(vectors_text)
    except json.JSONDecodeError as exc:
        raise words.ParseError(f"bad vector JSON: {exc}") from None
    if (not isinstance(vectors, list)
            or any(not isinstance(v, list) for v in vectors)):
        raise words.ParseError("vectors must be a JSON list of lists")
    out = lattice.complete_basis(vectors, n)
    _emit(ctx, {"matrix": out, "det": lattice.det(out)})


if __name__ == "__main__":
    main()
