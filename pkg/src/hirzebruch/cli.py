"""Command-line front end.

Commands:

* ``epoly EXPR``                    E-polynomial of a motivic expression
* ``genus --motivic EXPR``          compactly supported chi_y of a class
* ``genus --space SPEC``            chi_y of a space model, with the y = -1, 0, 1
                                    specializations
* ``classes --space SPEC --series S``  a characteristic class of the tangent
                                    bundle (chern | todd | l | ty), by degree
* ``arrangement --n N --k K --op O``   csm | mht | genus for the complement of
                                    K general-position hyperplanes in P^N
* ``verify --suite NAME|all``       run verification suites; exit 1 on failure
* ``describe --space SPEC``         print the model's presentation

Every command accepts ``--format text|json``; JSON output is a single
deterministic document {command, inputs, results, suites}.  A space SPEC may
be ``@path`` to load a custom space document.  Exit codes: 0 success,
1 verification failure, 2 usage or computation-domain error.  The
``HIRZ_ORDER`` environment variable sets the default series order for
``verify``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import (
    InvalidParameter,
    MissingLogStructure,
    NotPolynomial,
    ParseError,
    UnsupportedMap,
)
from .rings import render_uv, render_y
from . import bundles
from . import exprlang
from . import motivic
from . import spaces as sp
from . import transforms as tr
from . import verify as verify_mod


class Report:
    """What a command produced, in a rendering-agnostic form."""

    def __init__(self, command, inputs=None, results=None, suites=None):
        self.command = command
        self.inputs = inputs or {}
        self.results = results or {}
        self.suites = suites or []

    def to_json(self):
        doc = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "suites": [list(s) for s in self.suites],
        }
        return json.dumps(doc, sort_keys=True, indent=2)

    def to_text(self):
        lines = []
        for key, value in self.inputs.items():
            lines.append(f"{key}: {value}")
        for key, value in self.results.items():
            if isinstance(value, dict):
                lines.append(f"{key}:")
                for k2, v2 in value.items():
                    lines.append(f"  {k2}: {v2}")
            else:
                lines.append(f"{key}: {value}")
        for name, status, detail in self.suites:
            line = f"{name}: {status.upper()}"
            if detail:
                line += f"  [{detail}]"
            lines.append(line)
        return "\n".join(lines)


def _render_hom(c):
    """Dimension-graded rendering of a homology ledger class."""
    return {
        f"dim {k}": c.space.render_class(c.component_class(k))
        for k in sorted(c.comps, reverse=True)
    }


def _cmd_epoly(args):
    tree = exprlang.parse_expr(args.expr)
    cls = exprlang.evaluate(tree)
    return Report(
        command=f"epoly {args.expr}",
        inputs={"expr": exprlang.render(tree)},
        results={"epoly": render_uv(cls.e_polynomial()),
                 "chi_y": render_y(cls.chi_y()),
                 "hodge_table": cls.realization.triples()},
    )


def _cmd_genus(args):
    if (args.motivic is None) == (args.space is None):
        raise InvalidParameter("genus needs exactly one of --motivic or --space")
    results = {}
    if args.motivic is not None:
        tree = exprlang.parse_expr(args.motivic)
        cls = exprlang.evaluate(tree)
        chi = cls.chi_y()
        inputs = {"motivic": exprlang.render(tree), "support": "compact"}
        results["hodge_table"] = cls.realization.triples()
    else:
        space = exprlang.load_space(args.space)
        mode = "open_complement" if space.log is not None else "closed"
        chi = tr.chi_y_genus(space, mode)
        inputs = {"space": space.name, "mode": mode}
    results.update({
        "chi_y": render_y(chi),
        "euler": str(chi(Fraction(-1))),
        "chi_0": str(chi(Fraction(0))),
        "signature": str(chi(Fraction(1))),
    })
    return Report(command="genus", inputs=inputs, results=results)


_SERIES = {"chern": "chern", "todd": "todd", "l": "lclass", "ty": "hirzebruch"}


def _cmd_classes(args):
    space = exprlang.load_space(args.space)
    kind = _SERIES[args.series]
    series = bundles.genus_series(kind, max(space.dim, 1))
    cls = bundles.apply_series(series, space.tangent_bundle(), space)
    by_degree = {f"degree {d}": space.render_class(c) for d, c in cls.by_degree().items()}
    return Report(
        command="classes",
        inputs={"space": space.name, "series": args.series},
        results={"class": by_degree, "integral": str(space.integrate(cls.component(space.dim)))},
    )


def _cmd_arrangement(args):
    n, k = args.n, args.k
    inputs = {"n": n, "k": k, "op": args.op}
    if args.op == "csm":
        cls = tr.csm_arrangement(n, k)
        results = {
            "csm": tr.render_homology_on_projective(cls),
            "components": _render_hom(cls),
        }
    elif args.op == "mht":
        arr = sp.with_arrangement(sp.projective(n), k)
        cls = tr.mht(tr.mhc_y(arr, "open_complement"))
        results = {
            "components": _render_hom(cls),
            "y=-1": tr.render_homology_on_projective(tr.specialize_minus_one(cls)),
        }
    else:
        arr = sp.with_arrangement(sp.projective(n), k)
        ordinary = tr.chi_y_genus(arr, "open_complement")
        compact = motivic.arrangement_complement(n, k).chi_y()
        results = {"chi_y": render_y(ordinary), "chi_y_compact": render_y(compact)}
    return Report(command="arrangement", inputs=inputs, results=results)


def _cmd_verify(args):
    order = args.order
    if order is None:
        order = int(os.environ.get("HIRZ_ORDER", "8"))
    results = verify_mod.run_suites(args.suite, order=order)
    suites = []
    counts = {}
    for name, checks in results.items():
        passed = sum(1 for c in checks if c.ok)
        counts[name] = f"{passed}/{len(checks)}"
        for c in checks:
            suites.append((f"{name}: {c.name}", "pass" if c.ok else "fail", c.detail))
    report = Report(
        command="verify",
        inputs={"suite": args.suite, "order": order},
        results={"summary": counts},
        suites=suites,
    )
    return report, verify_mod.all_passed(results)


def _cmd_describe(args):
    space = exprlang.load_space(args.space)
    return Report(command="describe", inputs={"space": args.space},
                  results=space.describe())


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hirz",
        description="Exact Hodge genera and characteristic classes of space models.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("epoly", help="E-polynomial of a motivic expression")
    p.add_argument("expr")

    p = add("genus", help="chi_y genus of a motivic class or space model")
    p.add_argument("--motivic")
    p.add_argument("--space")

    p = add("classes", help="characteristic class of the tangent bundle")
    p.add_argument("--space", required=True)
    p.add_argument("--series", required=True, choices=sorted(_SERIES))

    p = add("arrangement", help="hyperplane-arrangement complement computations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--op", choices=("csm", "mht", "genus"), default="genus")

    p = add("verify", help="run verification suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--order", type=int, default=None)

    p = add("describe", help="print a space model's presentation")
    p.add_argument("--space", required=True)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    exit_code = 0
    try:
        if args.cmd == "epoly":
            report = _cmd_epoly(args)
        elif args.cmd == "genus":
            report = _cmd_genus(args)
        elif args.cmd == "classes":
            report = _cmd_classes(args)
        elif args.cmd == "arrangement":
            report = _cmd_arrangement(args)
        elif args.cmd == "verify":
            report, ok = _cmd_verify(args)
            exit_code = 0 if ok else 1
        else:
            report = _cmd_describe(args)
    except (ParseError, InvalidParameter, NotPolynomial,
            MissingLogStructure, UnsupportedMap, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json() if args.format == "json" else report.to_text())
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
