"""Command-line surface.  Every subcommand prints deterministic,
tab-separated output; polynomials use the qpoly text format.

Exit codes: 0 success, 1 contract violations, 2 parse errors.
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as bounds_mod
from . import composite as composite_mod
from . import fock, wick
from .errors import ContractViolation, ParseError, QuonError
from .permutations import RepCoefficients, preset_rep
from .wick import ModeLabel

GRAM_CLI_CAP = 6  # (n!)^2 scalar products; 6 keeps the CLI responsive


def _parse_labels(raw: str) -> tuple[ModeLabel, ...]:
    if not raw:
        raise ParseError("empty label list")
    labels = []
    for token in raw.split(","):
        token = token.strip()
        if not token:
            raise ParseError(f"empty label in {raw!r}")
        tag, sep, index = token.partition(":")
        labels.append(ModeLabel(index, tag) if sep else ModeLabel(token))
    return tuple(labels)


def _parse_rep(raw: str, n: int) -> RepCoefficients:
    if raw == "sym":
        return preset_rep(n, "symmetric")
    if raw == "antisym":
        return preset_rep(n, "antisymmetric")
    path = Path(raw)
    if not path.exists():
        raise ParseError(f"rep must be 'sym', 'antisym', or a file; {raw!r} not found")
    coeffs = {}
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split("\t")
        if len(parts) != 2:
            raise ParseError(f"{raw}:{lineno}: expected 'images<TAB>coefficient'")
        try:
            images = tuple(int(x) for x in parts[0].split(","))
            coeff = Fraction(parts[1])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{raw}:{lineno}: {exc}") from None
        coeffs[images] = coeff
    if not coeffs:
        raise ParseError(f"{raw}: no coefficients found")
    rep = RepCoefficients(n=len(next(iter(coeffs))), coeffs=coeffs, label=path.stem)
    if rep.n != n:
        raise ContractViolation(f"rep file is over S_{rep.n}, but --n is {n}")
    return rep


def _parse_matrix(path: str) -> list[list[int]]:
    rows = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            row = [int(x) for x in stripped.split("\t")]
        except ValueError:
            raise ParseError(f"{path}:{lineno}: entries must be integers") from None
        if any(x not in (0, 1) for x in row):
            raise ParseError(f"{path}:{lineno}: matrix entries must be 0 or 1")
        rows.append(row)
    if not rows:
        raise ParseError(f"{path}: empty matrix")
    return rows


def _cmd_sp(args) -> int:
    left = _parse_labels(args.left)
    right = _parse_labels(args.right)
    print(wick.scalar_product(left, right))
    return 0


def _cmd_qperm(args) -> int:
    print(wick.q_permanent(_parse_matrix(args.matrix)))
    return 0


def _cmd_norm(args) -> int:
    rep = _parse_rep(args.rep, args.n)
    labels = [ModeLabel(i) for i in range(1, args.n + 1)]
    print(fock.normalization_poly(rep, labels))
    return 0


def _cmd_gram(args) -> int:
    labels = _parse_labels(args.labels)
    if len(labels) > GRAM_CLI_CAP:
        raise ContractViolation(f"gram is capped at {GRAM_CLI_CAP} labels on the CLI")
    basis = fock.permutation_basis(labels)
    g = fock.gram(basis)
    if args.q is None:
        for row in g.entries:
            print("\t".join(str(entry) for entry in row))
    else:
        numeric = g.evaluate(args.q)
        for row in numeric:
            print("\t".join(f"{value:.10g}" for value in row))
        if args.check_psd:
            report = fock.check_psd(g, args.q)
            verdict = "pass" if report.passed else "fail"
            flag = "in_range" if report.q_in_range else "outside_range"
            print(f"psd\t{verdict}\t{report.min_eigenvalue:.6e}\t{flag}")
    return 0


def _cmd_weights(args) -> int:
    weights = fock.irrep_weights(args.n, args.q)
    for label, value in weights.items():
        print(f"{label}\t{value:.10g}")
    return 0


def _cmd_composite(args) -> int:
    rep = _parse_rep(args.rep, args.n)
    spec = composite_mod.CompositeSpec(
        n=args.n, internal_labels=tuple(range(1, args.n + 1)), rep=rep
    )
    aligned = composite_mod.two_composite_scalar(spec, ("t1", "t2"), ("t1", "t2"))
    swapped = composite_mod.two_composite_scalar(spec, ("t1", "t2"), ("t2", "t1"))
    cross = composite_mod.cross_term_magnitude(spec, shared_tags=args.overlap)
    exponent = composite_mod.effective_exponent(spec)
    print(f"direct\t{aligned.direct}")
    print(f"exchange\t{swapped.exchange}")
    print(f"cross\t{cross}")
    print(f"exponent\t{exponent}")
    return 0


def _cmd_weo(args) -> int:
    sign = "bose" if args.q == 1 else "fermi"
    print(composite_mod.weo_limit_check(args.n, sign))
    return 0


def _cmd_bounds_propagate(args) -> int:
    if args.exact:
        value = bounds_mod.propagate_exact(args.epsilon, args.n)
    else:
        value = bounds_mod.propagate_first_order(args.epsilon, args.n)
    print(f"{value:.3e}")
    return 0


def _parse_chain(raw: str) -> list[tuple[str, int]]:
    chain = []
    for token in raw.split(","):
        token = token.strip()
        if not token:
            raise ParseError(f"empty chain entry in {raw!r}")
        species, sep, n_raw = token.partition(":")
        if sep:
            try:
                n = int(n_raw)
            except ValueError:
                raise ParseError(f"bad constituent count in {token!r}") from None
        else:
            n = 1
        chain.append((species, n))
    return chain


def _cmd_bounds_chain(args) -> int:
    path = args.input if args.input else bounds_mod.bundled_limits_path()
    records = bounds_mod.ingest_limits(path)
    rows = bounds_mod.derive_chain(records, _parse_chain(args.path))
    print("species\tn\tparity\tepsilon_first_order\tepsilon_exact\tproximity")
    for row in rows:
        print(
            f"{row.species}\t{row.n}\t{row.parity}\t"
            f"{row.epsilon_first_order:.6e}\t{row.epsilon_exact:.6e}\t{row.proximity}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quonstat",
        description="Exact quon-algebra scalar products, composite statistics, "
        "and Pauli-violation bound propagation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sp", help="scalar product of two creation words")
    p.add_argument("--left", required=True, help="comma-separated labels, 'tag:index' allowed")
    p.add_argument("--right", required=True)
    p.set_defaults(func=_cmd_sp)

    p = sub.add_parser("qperm", help="q-permanent of a 0/1 matrix file")
    p.add_argument("--matrix", required=True, help="tab-separated 0/1 rows")
    p.set_defaults(func=_cmd_qperm)

    p = sub.add_parser("norm", help="normalization polynomial of a representation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rep", required=True, help="sym | antisym | coefficient file")
    p.set_defaults(func=_cmd_norm)

    p = sub.add_parser("gram", help="Gram matrix over the permutation basis")
    p.add_argument("--labels", required=True)
    p.add_argument("--q", type=float)
    p.add_argument("--check-psd", action="store_true")
    p.set_defaults(func=_cmd_gram)

    p = sub.add_parser("weights", help="irrep weights of the n-quon state")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=float, required=True)
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("composite", help="two-composite components and exchange exponent")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rep", required=True, help="sym | antisym | coefficient file")
    p.add_argument(
        "--overlap",
        action="store_true",
        help="report the cross component under forced tag overlap",
    )
    p.set_defaults(func=_cmd_composite)

    p = sub.add_parser("weo", help="boundary statistics of an n-constituent composite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, choices=(-1, 1), required=True)
    p.set_defaults(func=_cmd_weo)

    p = sub.add_parser("bounds", help="limit propagation")
    bounds_sub = p.add_subparsers(dest="bounds_command", required=True)

    bp = bounds_sub.add_parser("propagate", help="propagate one deviation bound")
    bp.add_argument("--epsilon", type=float, required=True)
    bp.add_argument("--n", type=int, required=True)
    bp.add_argument("--exact", action="store_true")
    bp.set_defaults(func=_cmd_bounds_propagate)

    bc = bounds_sub.add_parser("chain", help="derive bounds down a constituent chain")
    bc.add_argument("--input", help="limits file (default: bundled dataset)")
    bc.add_argument(
        "--path",
        required=True,
        help="comma-separated chain, e.g. 'O16,nucleon:16,quark:3'",
    )
    bc.set_defaults(func=_cmd_bounds_chain)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QuonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
