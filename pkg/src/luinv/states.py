"""Pure and mixed multipartite states as complex coefficient tensors.

Index convention, shared by every module and the state file format:
coefficients are stored row-major over the subsystem multi-index with the
last subsystem varying fastest, i.e. C-order flattening of an array of
shape dims.
"""

from __future__ import annotations

import itertools
import math
import string
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EnumerationBoundError
from .subsets import SubsetMask

HERMITICITY_TOL = 1e-12
PURIFY_CUTOFF = 1e-12
RANK_TOL = 1e-8

_LETTERS = string.ascii_lowercase + string.ascii_uppercase


@dataclass(frozen=True)
class PureState:
    dims: tuple[int, ...]
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if any(n < 1 for n in self.dims):
            raise ValueError("dimensions must be positive")
        coeffs = np.asarray(self.coeffs, dtype=complex).reshape(-1)
        if coeffs.size != math.prod(self.dims):
            raise ValueError(
                f"expected {math.prod(self.dims)} coefficients, got {coeffs.size}"
            )
        if not np.all(np.isfinite(coeffs.view(float))):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def k(self) -> int:
        return len(self.dims)

    def tensor(self) -> np.ndarray:
        return self.coeffs.reshape(self.dims)

    def norm_squared(self) -> float:
        return float(np.vdot(self.coeffs, self.coeffs).real)

    def normalized(self) -> "PureState":
        norm = math.sqrt(self.norm_squared())
        if norm == 0.0:
            raise ValueError("cannot normalize the zero state")
        return PureState(self.dims, self.coeffs / norm)


@dataclass(frozen=True)
class DensityMatrix:
    dims: tuple[int, ...]
    entries: np.ndarray

    def __post_init__(self) -> None:
        if any(n < 1 for n in self.dims):
            raise ValueError("dimensions must be positive")
        side = math.prod(self.dims)
        entries = np.asarray(self.entries, dtype=complex)
        if entries.shape != (side, side):
            raise ValueError(f"expected a {side}x{side} matrix, got {entries.shape}")
        scale = max(1.0, float(np.abs(entries).max(initial=0.0)))
        if float(np.abs(entries - entries.conj().T).max(initial=0.0)) > HERMITICITY_TOL * scale:
            raise ValueError("matrix is not Hermitian within tolerance")
        object.__setattr__(self, "entries", entries)

    @property
    def k(self) -> int:
        return len(self.dims)

    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    def validate_physical(self, tol: float = 1e-10) -> None:
        """Check positive semidefiniteness and trace at most 1."""
        eigs = np.linalg.eigvalsh(self.entries)
        scale = max(1.0, float(eigs[-1]) if eigs.size else 1.0)
        if eigs.size and eigs[0] < -tol * scale:
            raise ValueError(f"not positive semidefinite: min eigenvalue {eigs[0]}")
        if self.trace() > 1.0 + tol:
            raise ValueError(f"trace {self.trace()} exceeds 1")


def projector(psi: PureState) -> DensityMatrix:
    """The rank-one operator psi psi*."""
    return DensityMatrix(psi.dims, np.outer(psi.coeffs, psi.coeffs.conj()))


def _traced_axes(rho: DensityMatrix, traced: SubsetMask | Iterable[int]) -> list[int]:
    if isinstance(traced, SubsetMask):
        if traced.k != rho.k:
            raise ValueError(f"subset is over {traced.k} labels, state has {rho.k}")
        labels = sorted(traced.members)
    else:
        labels = sorted(set(traced))
    if any(j < 1 or j > rho.k for j in labels):
        raise ValueError(f"subsystem labels {labels} out of range 1..{rho.k}")
    return [j - 1 for j in labels]


def partial_trace(rho: DensityMatrix, traced: SubsetMask | Iterable[int]) -> DensityMatrix:
    """Trace out the subsystems listed in `traced`, keeping the rest.

    Tracing out nothing returns rho itself; tracing out everything returns
    the 1x1 matrix holding the trace.
    """
    axes = _traced_axes(rho, traced)
    if not axes:
        return rho
    k = rho.k
    if 2 * k > len(_LETTERS):
        raise ValueError("too many subsystems for the index alphabet")
    row = list(_LETTERS[:k])
    col = list(_LETTERS[k : 2 * k])
    for ax in axes:
        col[ax] = row[ax]
    keep = [ax for ax in range(k) if ax not in axes]
    out_letters = "".join(row[ax] for ax in keep) + "".join(col[ax] for ax in keep)
    sub = f"{''.join(row)}{''.join(col)}->{out_letters}"
    tensor = rho.entries.reshape(rho.dims + rho.dims)
    reduced = np.einsum(sub, tensor)
    new_dims = tuple(rho.dims[ax] for ax in keep)
    side = math.prod(new_dims)
    return DensityMatrix(new_dims, reduced.reshape(side, side))


def purify(rho: DensityMatrix) -> PureState:
    """A pure state on system + environment whose environment trace is rho.

    The environment is appended as the last subsystem with dimension equal
    to the numerical rank of rho (eigenvalues above 1e-12).
    """
    vals, vecs = np.linalg.eigh(rho.entries)
    scale = max(1.0, float(vals[-1]) if vals.size else 1.0)
    if vals.size and vals[0] < -HERMITICITY_TOL * scale:
        raise ValueError(f"not positive semidefinite: min eigenvalue {vals[0]}")
    order = np.argsort(-vals)
    keep = [int(i) for i in order if vals[i] > PURIFY_CUTOFF]
    if not keep:
        raise ValueError("state has numerical rank 0, nothing to purify")
    rank = len(keep)
    columns = vecs[:, keep] * np.sqrt(vals[keep])
    return PureState(rho.dims + (rank,), columns.reshape(-1))


def random_pure_state(dims: Sequence[int], seed) -> PureState:
    """Unit-norm state with Haar-uniform direction, deterministic in seed."""
    rng = np.random.default_rng(seed)
    n = math.prod(dims)
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return PureState(tuple(dims), z / np.linalg.norm(z))


def random_density_matrix(dims: Sequence[int], seed, rank: int | None = None) -> DensityMatrix:
    """Trace-one random mixed state from a Ginibre factor of the given rank."""
    rng = np.random.default_rng(seed)
    n = math.prod(dims)
    r = n if rank is None else rank
    g = rng.standard_normal((n, r)) + 1j * rng.standard_normal((n, r))
    rho = g @ g.conj().T
    return DensityMatrix(tuple(dims), rho / np.trace(rho).real)


def random_unitary(n: int, seed) -> np.ndarray:
    """Haar-distributed unitary via QR of a Ginibre matrix."""
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def apply_local_unitaries(psi: PureState, unitaries: Sequence[np.ndarray]) -> PureState:
    """Apply one unitary per subsystem."""
    if len(unitaries) != psi.k:
        raise ValueError("need one unitary per subsystem")
    tensor = psi.tensor()
    for axis, u in enumerate(unitaries):
        tensor = np.moveaxis(np.tensordot(u, tensor, axes=(1, axis)), 0, axis)
    return PureState(psi.dims, tensor.reshape(-1))


def product_state(factors: Sequence[np.ndarray]) -> PureState:
    """Tensor product of single-subsystem vectors."""
    coeffs = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        coeffs = np.kron(coeffs, np.asarray(f, dtype=complex))
    return PureState(tuple(len(f) for f in factors), coeffs)


def ghz_state(k: int, local_dim: int = 2) -> PureState:
    """(|0...0> + ... + |d-1...d-1>)/sqrt(d) on k subsystems."""
    dims = (local_dim,) * k
    tensor = np.zeros(dims, dtype=complex)
    for level in range(local_dim):
        tensor[(level,) * k] = 1.0 / math.sqrt(local_dim)
    return PureState(dims, tensor.reshape(-1))


def bell_state() -> PureState:
    return ghz_state(2)


# ---------------------------------------------------------------------------
# Permutation contractions and the numerical rank oracle


def _check_perms(perms: Sequence[Sequence[int]], k: int) -> tuple[tuple[int, ...], ...]:
    if len(perms) != k:
        raise ValueError(f"need one permutation per subsystem, got {len(perms)} for k={k}")
    tups = tuple(tuple(p) for p in perms)
    if not tups:
        return tups
    m = len(tups[0])
    for p in tups:
        if sorted(p) != list(range(m)):
            raise ValueError(f"not a permutation of range({m}): {p}")
    return tups


def permutation_contraction(psi: PureState, perms: Sequence[Sequence[int]]) -> complex:
    """Contract m copies of psi against m copies of its conjugate, wiring
    subsystem l of conjugate copy j to copy perms[l][j].

    With every permutation equal to the identity this is the m-th power of
    the squared norm; over all tuples of permutations these values span the
    degree-(m, m) local-unitary invariants.
    """
    tups = _check_perms(perms, psi.k)
    if not tups:
        raise ValueError("state must have at least one subsystem")
    m = len(tups[0])
    if m == 0:
        return 1.0 + 0.0j
    k = psi.k
    if m * k > len(_LETTERS):
        raise ValueError("contraction too large for the index alphabet")
    letter = [[_LETTERS[j * k + l] for l in range(k)] for j in range(m)]
    subs = []
    for j in range(m):
        subs.append("".join(letter[j]))
    for j in range(m):
        subs.append("".join(letter[tups[l][j]][l] for l in range(k)))
    tensor = psi.tensor()
    operands = [tensor] * m + [tensor.conj()] * m
    return complex(np.einsum(",".join(subs) + "->", *operands, optimize=True))


def _invert(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _all_contractions(psi_flat_sys_env: np.ndarray, sys_dims: tuple[int, ...], m: int):
    """Values of every permutation contraction on a system+environment pure
    state, exploiting that simultaneously left-translating all permutations
    leaves the value unchanged.

    Returns the table over tuples of system permutations (environment
    permutation translated to the identity), in lexicographic order of
    itertools.product.
    """
    n_sys = math.prod(sys_dims)
    k_sys = len(sys_dims)
    perms = list(itertools.permutations(range(m)))
    rho_sys = psi_flat_sys_env @ psi_flat_sys_env.conj().T
    power = np.ones((1, 1), dtype=complex)
    for _ in range(m):
        power = np.kron(power, rho_sys)
    grid = np.indices((n_sys,) * m).reshape(m, -1)  # grid[j] = copy-j flat index
    digits = np.empty((m, k_sys, n_sys**m), dtype=np.int64)
    sys_strides = [math.prod(sys_dims[l + 1 :]) for l in range(k_sys)]
    for j in range(m):
        rem = grid[j]
        for l in range(k_sys):
            digits[j, l] = rem // sys_strides[l]
            rem = rem % sys_strides[l]
    copy_strides = [n_sys ** (m - 1 - j) for j in range(m)]
    xs = np.arange(n_sys**m)
    values = np.empty((len(perms),) * k_sys, dtype=complex).reshape(-1)
    for idx, taus in enumerate(itertools.product(perms, repeat=k_sys)):
        ys = np.zeros(n_sys**m, dtype=np.int64)
        for j in range(m):
            for l in range(k_sys):
                ys += digits[taus[l][j], l] * (copy_strides[j] * sys_strides[l])
        values[idx] = power[xs, ys].sum()
    return perms, values


def invariant_space_rank(
    dims: Sequence[int], m: int, sample_count: int | None = None, seed=0
) -> int:
    """Numerical rank of the evaluation matrix of all permutation
    contractions over random pure states on dims plus an appended
    environment subsystem of dimension prod(dims).

    Singular values above 1e-8 of the largest count toward the rank.
    """
    sys_dims = tuple(dims)
    if m < 0:
        raise ValueError("need m >= 0")
    k_full = len(sys_dims) + 1
    n_cols = math.factorial(m) ** k_full
    if sample_count is None:
        sample_count = 3 * n_cols
    if sample_count < n_cols:
        raise ValueError(f"need at least {n_cols} samples")
    if m == 0:
        return 1  # the single empty contraction is the constant 1
    if n_cols * sample_count > 80_000_000:
        raise EnumerationBoundError(
            f"refusing a {sample_count} x {n_cols} evaluation matrix"
        )
    n_sys = math.prod(sys_dims)
    perms = list(itertools.permutations(range(m)))
    perm_index = {p: i for i, p in enumerate(perms)}
    k_sys = len(sys_dims)
    # Column -> translated-tuple index; the environment permutation is
    # removed by left translation, which does not change the value.
    colmap = np.empty(n_cols, dtype=np.int64)
    for c, pis in enumerate(itertools.product(perms, repeat=k_full)):
        env_inv = _invert(pis[-1])
        flat = 0
        for l in range(k_sys):
            tau = tuple(env_inv[pis[l][j]] for j in range(m))
            flat = flat * len(perms) + perm_index[tau]
        colmap[c] = flat
    rng = np.random.default_rng(seed)
    matrix = np.empty((sample_count, n_cols), dtype=complex)
    n_env = n_sys
    for s in range(sample_count):
        z = rng.standard_normal(n_sys * n_env) + 1j * rng.standard_normal(n_sys * n_env)
        z /= np.linalg.norm(z)
        _, values = _all_contractions(z.reshape(n_sys, n_env), sys_dims, m)
        matrix[s] = values[colmap]
    singular = np.linalg.svd(matrix, compute_uv=False)
    if singular.size == 0 or singular[0] <= 0.0:
        return 0
    return int(np.count_nonzero(singular > RANK_TOL * singular[0]))


# ---------------------------------------------------------------------------
# State files


def read_state_file(path) -> PureState | DensityMatrix:
    """Parse the text state format: a `pure`/`mixed` line, a `dims` line,
    then one `re im` coefficient per line; `#` lines are comments."""
    with open(path, "r", encoding="utf-8") as handle:
        lines = [
            line.strip()
            for line in handle
            if line.strip() and not line.lstrip().startswith("#")
        ]
    if len(lines) < 2:
        raise ValueError("state file needs a kind line and a dims line")
    kind = lines[0]
    if kind not in ("pure", "mixed"):
        raise ValueError(f"unknown state kind {kind!r}")
    dims_tokens = lines[1].split()
    if dims_tokens[0] != "dims" or len(dims_tokens) < 2:
        raise ValueError("second line must be `dims n1 n2 ...`")
    dims = tuple(int(tok) for tok in dims_tokens[1:])
    values = []
    for line in lines[2:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"expected `re im`, got {line!r}")
        values.append(complex(float(tokens[0]), float(tokens[1])))
    n = math.prod(dims)
    if kind == "pure":
        if len(values) != n:
            raise ValueError(f"expected {n} coefficients, got {len(values)}")
        return PureState(dims, np.array(values))
    if len(values) != n * n:
        raise ValueError(f"expected {n * n} entries, got {len(values)}")
    return DensityMatrix(dims, np.array(values).reshape(n, n))


def write_state_file(path, state: PureState | DensityMatrix) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        if isinstance(state, PureState):
            handle.write("pure\n")
            flat = state.coeffs
        else:
            handle.write("mixed\n")
            flat = state.entries.reshape(-1)
        handle.write("dims " + " ".join(str(n) for n in state.dims) + "\n")
        for value in flat:
            handle.write(f"{float(value.real)!r} {float(value.imag)!r}\n")
