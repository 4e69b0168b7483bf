"""Command-line front end.

Subcommands: ``constant``, ``product``, ``restrict``, ``verify``,
``trace``, ``info``.  Groups are selected with ``--group``, taking either
a named type ("A3", "B2", ...) or a path to a JSON file containing
``{"cartan": [[...], ...]}`` (or just a type label).

Elements are written either in one-line permutation notation (type A
only: a digit string like ``2413`` for n <= 9, or a comma-separated list
covering 1..n), as words in the simple reflections (``s1 s3 s2``, or bare
indices like ``1 3 2`` when they do not form a permutation), or ``e`` for
the identity.

Exit codes are part of the contract: 0 success, 2 usage errors, 3 engine
mismatches, 4 exact-division failures or violated internal invariants.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import billey, oracle, recurrence
from .errors import (
    DimensionMismatchError,
    EngineMismatchError,
    NonzeroResidualError,
    NotDivisibleError,
    SchubertError,
    UnknownTypeError,
)
from .gkm import SchubertExpansion
from .polyring import poly_to_json, render
from .rootsys import RootSystem, WeylElement, named, build, perm_to_element, word_to_element

__all__ = ["main"]

USAGE_EXIT = 2
MISMATCH_EXIT = 3
INVARIANT_EXIT = 4


class UsageError(Exception):
    pass


def load_group(source: str) -> RootSystem:
    path = Path(source)
    if path.is_file():
        text = path.read_text()
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            data = text.strip().strip('"')
        if isinstance(data, dict):
            if "cartan" not in data:
                raise UsageError(f"{source}: JSON group file must contain a 'cartan' key")
            return build(data["cartan"], type_label=data.get("label"))
        if isinstance(data, str):
            return named(data)
        raise UsageError(f"{source}: unsupported group file contents")
    try:
        return named(source)
    except UnknownTypeError as exc:
        raise UsageError(str(exc)) from None


def parse_element(rs: RootSystem, text: str) -> WeylElement:
    s = text.strip()
    if not s:
        raise UsageError("empty element")
    if s in ("e", "id", "identity"):
        return rs.identity
    n = rs.rank + 1
    if s.isdigit() and rs.is_type_a and len(s) == n and n <= 9:
        digits = [int(c) for c in s]
        if sorted(digits) == list(range(1, n + 1)):
            return perm_to_element(rs, digits)
    tokens = s.replace("*", " ").replace(",", " ").split()
    if all(t.isdigit() for t in tokens):
        ints = [int(t) for t in tokens]
        if rs.is_type_a and len(ints) == n and sorted(ints) == list(range(1, n + 1)):
            return perm_to_element(rs, ints)
        if all(1 <= i <= rs.rank for i in ints):
            return word_to_element(rs, ints)
        raise UsageError(f"{text!r} is neither a permutation of 1..{n} nor a word in s1..s{rs.rank}")
    if all(t.startswith("s") and t[1:].isdigit() for t in tokens):
        ints = [int(t[1:]) for t in tokens]
        if not all(1 <= i <= rs.rank for i in ints):
            raise UsageError(f"simple index out of range in {text!r}")
        return word_to_element(rs, ints)
    raise UsageError(f"cannot parse element {text!r}")


def _default_basis(rs: RootSystem, basis: str | None) -> str:
    if basis is None:
        return "y" if rs.is_type_a else "alpha"
    if basis == "y" and not rs.is_type_a:
        raise UsageError("the y basis is only available for type A groups")
    return basis


def _expansion_json(exp: SchubertExpansion) -> list[dict]:
    return [
        {"element": u.describe(), "coeff": poly_to_json(c)} for u, c in exp.items()
    ]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="schubertcalc",
        description="Equivariant Schubert structure constants for finite Weyl groups",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, elems):
        p.add_argument("--group", required=True, help="named type (A3, B2, ...) or Cartan JSON file")
        for e in elems:
            p.add_argument(f"--{e}", required=True)
        p.add_argument("--output", choices=["text", "json"], default="text")
        p.add_argument("--basis", choices=["alpha", "y"], default=None)

    p = sub.add_parser("constant", help="one structure constant c_{wv}^u")
    add_common(p, ["w", "v", "u"])
    p.add_argument("--engine", choices=["recurrence", "oracle", "both"], default="recurrence")

    p = sub.add_parser("product", help="full Schubert expansion of S_w * S_v")
    add_common(p, ["w", "v"])
    p.add_argument("--engine", choices=["recurrence", "oracle", "both"], default="recurrence")

    p = sub.add_parser("restrict", help="fixed-point restriction S_v|_w")
    add_common(p, ["v", "w"])

    p = sub.add_parser("verify", help="run verification sweeps; nonzero exit on failure")
    p.add_argument("--group", required=True)
    p.add_argument("--suite", choices=["sweep", "cover", "props", "all"], default="all")
    p.add_argument("--force", action="store_true", help="override the oracle sweep size cap")
    p.add_argument("--output", choices=["text", "json"], default="text")

    p = sub.add_parser("trace", help="like constant, but print the derivation tree")
    add_common(p, ["w", "v", "u"])
    p.add_argument("--first-r", type=int, default=None, help="override the reflection at the root step")
    p.add_argument("--replay", action="store_true", help="re-evaluate the tree and confirm the root value")
    p.add_argument("--keep-equivariant", action="store_true", help="do not drop equivariant terms by degree")

    p = sub.add_parser("info", help="group data: rank, roots, order, longest element")
    p.add_argument("--group", required=True)
    p.add_argument("--output", choices=["text", "json"], default="text")

    return ap


def _result_cache_path(rs: RootSystem, w, v, u, engine: str) -> Path | None:
    """Optional persistent result cache, enabled by SCHUBERTCALC_CACHE_DIR.

    Caches are in-memory by default; this only stores final constants.
    """
    root = os.environ.get("SCHUBERTCALC_CACHE_DIR")
    if not root or engine == "both":
        return None
    key = json.dumps(
        [list(map(list, rs.cartan)), w.describe(), v.describe(), u.describe(), engine]
    )
    digest = hashlib.sha256(key.encode()).hexdigest()[:32]
    return Path(root) / f"constant-{digest}.json"


def _cmd_constant(args) -> int:
    rs = load_group(args.group)
    basis = _default_basis(rs, args.basis)
    w, v, u = (parse_element(rs, getattr(args, x)) for x in "wvu")
    cache_path = _result_cache_path(rs, w, v, u, args.engine)
    value = None
    if cache_path is not None and cache_path.is_file():
        from .polyring import poly_from_json

        value = poly_from_json(json.loads(cache_path.read_text())["value"], rs.rank)
    if value is None:
        if args.engine in ("recurrence", "both"):
            value = recurrence.structure_constant(w, v, u)
        else:
            value = oracle.oracle_constant(w, v, u)
        if cache_path is not None:
            try:
                cache_path.parent.mkdir(parents=True, exist_ok=True)
                cache_path.write_text(json.dumps({"value": poly_to_json(value)}))
            except OSError:
                pass  # the cache is best-effort
    if args.engine == "both":
        other = oracle.oracle_constant(w, v, u)
        if other != value:
            raise EngineMismatchError(w, v, u, value, other)
    if args.output == "json":
        print(json.dumps({
            "group": rs.type_label,
            "w": w.describe(), "v": v.describe(), "u": u.describe(),
            "engine": args.engine,
            "value": poly_to_json(value),
            "value_str": render(value, basis),
        }))
    else:
        print(render(value, basis))
    return 0


def _cmd_product(args) -> int:
    rs = load_group(args.group)
    basis = _default_basis(rs, args.basis)
    w, v = parse_element(rs, args.w), parse_element(rs, args.v)
    exp = recurrence.product_expansion(w, v, engine=args.engine)
    if args.output == "json":
        print(json.dumps({
            "group": rs.type_label,
            "w": w.describe(), "v": v.describe(),
            "engine": args.engine,
            "terms": _expansion_json(exp),
        }))
    else:
        if not exp.coeffs:
            print("0")
        for u, c in exp.items():
            print(f"S[{u.describe()}] : {render(c, basis)}")
    return 0


def _cmd_restrict(args) -> int:
    rs = load_group(args.group)
    basis = _default_basis(rs, args.basis)
    v, w = parse_element(rs, args.v), parse_element(rs, args.w)
    value = billey.restrict(v, w)
    if args.output == "json":
        print(json.dumps({
            "group": rs.type_label,
            "v": v.describe(), "w": w.describe(),
            "value": poly_to_json(value),
            "value_str": render(value, basis),
        }))
    else:
        print(render(value, basis))
    return 0


def _run_props(rs: RootSystem) -> list[str]:
    """Quick operator property suite; returns a list of violations."""
    from .gkm import (
        chern_class,
        chern_times_schubert,
        is_gkm,
        leibniz_check,
        left_dd,
        right_dd,
    )

    bad = []
    classes = [billey.schubert_class(w) for w in rs.elements()]
    for w, s in zip(rs.elements(), classes):
        if not is_gkm(s):
            bad.append(f"GKM fails for the Schubert class of {w.describe()}")
    for i in range(1, rs.rank + 1):
        alpha = rs.simple_root(i)
        if not is_gkm(chern_class(rs, alpha)):
            bad.append(f"GKM fails for the Chern class of alpha_{i}")
        for w, s in zip(rs.elements(), classes):
            for op, side in ((left_dd, "left"), (right_dd, "right")):
                out = op(alpha, s)
                if not is_gkm(out):
                    bad.append(f"GKM fails for {side} dd_{i} of S_{w.describe()}")
        for w in rs.elements():
            exp = chern_times_schubert(rs, alpha, w)
            direct = oracle.expand_in_schubert(
                chern_class(rs, alpha) * billey.schubert_class(w)
            ).expansion
            if exp != direct:
                bad.append(f"Chern expansion mismatch at alpha_{i}, {w.describe()}")
    for w in rs.elements()[: min(6, rs.order())]:
        for v in rs.elements()[: min(6, rs.order())]:
            for i in range(1, rs.rank + 1):
                if not leibniz_check(
                    rs.simple_root(i), billey.schubert_class(w), billey.schubert_class(v)
                ):
                    bad.append(f"Leibniz fails at alpha_{i}, ({w.describe()}, {v.describe()})")
    return bad


def _cmd_verify(args) -> int:
    rs = load_group(args.group)
    payload = {}
    lines = []
    mismatch = False
    invariant_bad = False
    if args.suite in ("sweep", "all"):
        rep = oracle.verify_sweep(rs, force=args.force)
        payload["sweep"] = rep.to_json()
        lines += rep.text_lines()
        mismatch = mismatch or not rep.ok
        invariant_bad = invariant_bad or bool(rep.ordinary_violations or rep.coeff_violations)
    if args.suite in ("cover", "all"):
        rep = oracle.lemma_cover_sweep(rs)
        payload["cover"] = rep.to_json()
        lines += rep.text_lines()
        invariant_bad = invariant_bad or not rep.ok
    if args.suite in ("props", "all"):
        bad = _run_props(rs)
        payload["props"] = {"violations": bad}
        lines.append(f"props {rs.type_label or rs.rank}: {len(bad)} violations")
        lines += [f"  {b}" for b in bad]
        invariant_bad = invariant_bad or bool(bad)
    if args.output == "json":
        print(json.dumps(payload))
    else:
        print("\n".join(lines))
    if mismatch:
        return MISMATCH_EXIT
    if invariant_bad:
        return INVARIANT_EXIT
    return 0


def _cmd_trace(args) -> int:
    rs = load_group(args.group)
    basis = _default_basis(rs, args.basis)
    w, v, u = (parse_element(rs, getattr(args, x)) for x in "wvu")
    node = recurrence.trace_constant(
        w, v, u,
        drop_equivariant=not args.keep_equivariant,
        first_r=args.first_r,
    )
    if args.output == "json":
        def to_json(n):
            return {
                "w": n.key.w.describe(), "v": n.key.v.describe(), "u": n.key.u.describe(),
                "rule": n.rule, "r": n.chosen_r,
                "value": poly_to_json(n.value),
                "children": [
                    {"weight": poly_to_json(wt), "node": to_json(ch)} for wt, ch in n.children
                ],
            }
        print(json.dumps(to_json(node)))
    else:
        print("\n".join(recurrence.format_trace(node, basis)))
    if args.replay:
        recurrence.replay_trace(node)
        print(f"replay ok: root value = {render(node.value, basis)}")
    return 0


def _cmd_info(args) -> int:
    rs = load_group(args.group)
    w0 = rs.longest_element()
    data = {
        "label": rs.type_label,
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "positive_roots": len(rs.positive_roots),
        "order": rs.order(),
        "w0": w0.describe(),
    }
    if args.output == "json":
        print(json.dumps(data))
    else:
        print(f"group      : {data['label'] or 'custom'}")
        print(f"rank       : {data['rank']}")
        print(f"|Delta_+|  : {data['positive_roots']}")
        print(f"|W|        : {data['order']}")
        print(f"w0         : {data['w0']}")
    return 0


_COMMANDS = {
    "constant": _cmd_constant,
    "product": _cmd_product,
    "restrict": _cmd_restrict,
    "verify": _cmd_verify,
    "trace": _cmd_trace,
    "info": _cmd_info,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except EngineMismatchError as exc:
        print(f"engine mismatch: {exc}", file=sys.stderr)
        return MISMATCH_EXIT
    except (NotDivisibleError, NonzeroResidualError, AssertionError) as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return INVARIANT_EXIT
    except (DimensionMismatchError, SchubertError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
