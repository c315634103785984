"""Command-line surface: every computation as reproducible table output.

Output contract: tables are tab-separated with `#`-prefixed header lines,
floats are printed with 9 decimal places, and repeated runs with the same
flags produce byte-identical output.  Exit codes: 0 success, 2 usage or
input error, 3 refused enumeration bound, 4 failed internal assertion.
"""

from __future__ import annotations

import argparse
import math
import sys

from .characters import irreducible_character
from .combinatorics import centralizer_order, cycle_types_of, partitions_of
from .dimensions import mixed_dimension, restricted_dimension, stable_dimension
from .errors import ConsistencyError, EnumerationBoundError, IntegralityError
from .free_group_census import conjugation_orbit_count, count_subgroup_classes
from .invariants import (
    eta,
    higher_invariant,
    i_from_j,
    invariant_I,
    invariant_I_vector,
    invariant_J,
    invariant_J_vector,
    j_from_i,
    meyer_wallach,
)
from .series import euler_exponents, hilbert_series
from .states import (
    DensityMatrix,
    PureState,
    invariant_space_rank,
    projector,
    read_state_file,
)
from .subsets import SubsetMask, all_subsets


def _fmt(value: float) -> str:
    if abs(value) < 5e-10:
        value = 0.0
    return f"{value:.9f}"


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(tok) for tok in text.split(",") if tok != "")
    except ValueError as exc:
        raise ValueError(f"bad dimension list {text!r}") from exc
    if not dims or any(n < 1 for n in dims):
        raise ValueError(f"bad dimension list {text!r}")
    return dims


def _parse_subset(text: str, k: int) -> SubsetMask:
    members = [int(tok) for tok in text.split(",") if tok != ""]
    return SubsetMask.of(k, members)


def _cmd_dims(args) -> int:
    if args.local_dims is not None:
        if args.mixed:
            raise ValueError("--local-dims and --mixed cannot be combined")
        value = restricted_dimension(_parse_dims(args.local_dims), args.m)
    elif args.mixed:
        if args.k is None:
            raise ValueError("--mixed requires --k")
        value = mixed_dimension(args.k, args.m)
    else:
        if args.k is None:
            raise ValueError("need --k or --local-dims")
        value = stable_dimension(args.k, args.m)
    print(value)
    return 0


def _cmd_hilbert(args) -> int:
    series = hilbert_series(args.k, args.order)
    counts = euler_exponents(series, args.k)
    print("# grading: half-degree m, i.e. degree 2m (real)")
    print("# m\tdim")
    for m, coeff in enumerate(series.coeffs):
        print(f"{m}\t{coeff}")
    print("# d\tu_d")
    for d, u in enumerate(counts.u, start=1):
        print(f"{d}\t{u}")
    return 0


def _cmd_subgroups(args) -> int:
    print("# index\tclasses")
    for d in range(1, args.max_index + 1):
        print(f"{d}\t{count_subgroup_classes(args.rank, d)}")
    return 0


def _cmd_orbits(args) -> int:
    print(conjugation_orbit_count(args.tuple_length, args.m))
    return 0


def _cmd_char_table(args) -> int:
    partitions = partitions_of(args.m)
    classes = cycle_types_of(args.m)
    labels = [str(p) for p in partitions]
    print("# class\t" + "\t".join(labels))
    sizes = [math.factorial(args.m) // centralizer_order(a) for a in classes]
    print("# size\t" + "\t".join(str(s) for s in sizes))
    for lam in partitions:
        chi = irreducible_character(lam)
        print(str(lam) + "\t" + "\t".join(str(v) for v in chi.values))
    return 0


def _as_density(state) -> DensityMatrix:
    return projector(state) if isinstance(state, PureState) else state


def _as_pure(state) -> PureState:
    if not isinstance(state, PureState):
        raise ValueError("this invariant needs a pure state file")
    return state


def _cmd_eval(args) -> int:
    state = read_state_file(args.state)
    k = len(state.dims)
    subset = _parse_subset(args.subset, k)
    if args.invariant == "I":
        value = invariant_I(_as_pure(state), subset)
    elif args.invariant == "J":
        value = invariant_J(_as_density(state), subset)
    elif args.invariant == "eta":
        value = eta(_as_density(state), subset)
    elif args.invariant == "Q":
        value = meyer_wallach(_as_pure(state))
    elif args.invariant == "higher":
        if args.m is None:
            raise ValueError("--invariant higher requires --m")
        value = higher_invariant(_as_pure(state), subset, args.m)
    else:
        raise ValueError(f"unknown invariant {args.invariant!r}")
    print(_fmt(value))
    return 0


def _cmd_transform(args) -> int:
    psi = _as_pure(read_state_file(args.state))
    k = psi.k
    ivec = invariant_I_vector(psi)
    jvec = invariant_J_vector(projector(psi))
    forward = j_from_i(ivec)
    backward = i_from_j(jvec)
    residual = max(
        max(abs(a - b) for a, b in zip(forward.values, jvec.values)),
        max(abs(a - b) for a, b in zip(backward.values, ivec.values)),
    )
    print("# subset\tI\tJ")
    for s in all_subsets(k):
        print(f"{s}\t{_fmt(ivec[s])}\t{_fmt(jvec[s])}")
    print(f"# max_residual\t{residual:.3e}")
    return 0


def _cmd_rank_oracle(args) -> int:
    dims = _parse_dims(args.local_dims)
    print(invariant_space_rank(dims, args.m, args.samples, args.seed))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="luinv",
        description="Dimensions, Hilbert series, and explicit local-unitary invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="invariant-space dimension")
    p.add_argument("--k", type=int, help="number of subsystems")
    p.add_argument("--m", type=int, required=True, help="half-degree")
    p.add_argument(
        "--local-dims",
        help="comma-separated bounded subsystem dimensions (environment implicit)",
    )
    p.add_argument("--mixed", action="store_true", help="mixed-state dimension")
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("hilbert", help="Hilbert series and Euler exponents")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("subgroups", help="free-group subgroup class census")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--max-index", type=int, required=True)
    p.set_defaults(func=_cmd_subgroups)

    p = sub.add_parser("orbits", help="conjugation orbits on permutation tuples")
    p.add_argument("--tuple-length", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("char-table", help="character table of S_m")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_char_table)

    p = sub.add_parser("eval", help="evaluate an invariant on a state file")
    p.add_argument("--state", required=True)
    p.add_argument(
        "--invariant", required=True, choices=["I", "J", "eta", "Q", "higher"]
    )
    p.add_argument("--subset", default="", help="comma-separated subsystem labels")
    p.add_argument("--m", type=int, help="order for --invariant higher")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("transform", help="I- and J-vectors and transform residual")
    p.add_argument("--state", required=True)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("rank-oracle", help="numerical invariant-space rank")
    p.add_argument("--local-dims", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=_cmd_rank_oracle)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationBoundError as exc:
        print(f"luinv: {exc}", file=sys.stderr)
        return 3
    except (IntegralityError, ConsistencyError) as exc:
        print(f"luinv: {exc}", file=sys.stderr)
        return 4
    except (ValueError, OSError) as exc:
        print(f"luinv: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
