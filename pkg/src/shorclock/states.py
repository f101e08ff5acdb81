"""Dense state vectors and operator algebra for small qubit registers.

Bit convention used everywhere in this package: qubit 0 is the MOST
significant bit of a basis index, so basis index b of an n-qubit register
stores qubit k in bit (n - 1 - k). Registers are capped at 10 qubits;
every operator is a dense complex matrix.

Spin operators follow the I_k = sigma_k / 2 convention, so a resonant
pulse Hamiltonian omega_n * I_x rotates the spin by omega_n radians per
second (a pi pulse takes pi / omega_n seconds).

All public functions are pure and safe to call from multiple threads;
StateVector instances are immutable after construction.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_QUBITS = 10

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

I_X = 0.5 * SIGMA_X
I_Y = 0.5 * SIGMA_Y
I_Z = 0.5 * SIGMA_Z

# Two-spin products used by the controlled phase gate generator.
IZ_1 = np.kron(I_Z, np.eye(2))
ONE_SZ = np.kron(np.eye(2), I_Z)
IZ_SZ = IZ_1 @ ONE_SZ


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entrywise deviation of M from its conjugate transpose."""
    return float(np.max(np.abs(m - m.conj().T)))


def is_hermitian(m: np.ndarray, tol: float = 1e-12) -> bool:
    scale = max(1.0, float(np.max(np.abs(m)))) if m.size else 1.0
    return hermiticity_defect(m) <= tol * scale


def is_unitary(m: np.ndarray, tol: float = 1e-10) -> bool:
    return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0])))) <= tol


@dataclass(frozen=True)
class StateVector:
    """Immutable amplitude vector over an n-qubit register."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ValueError(f"n_qubits must be in 1..{MAX_QUBITS}, got {self.n_qubits}")
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape[0] != 2**self.n_qubits:
            raise ValueError(
                f"amplitude vector has length {amps.shape[0]}, expected {2**self.n_qubits}"
            )
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dimension(self) -> int:
        return 2**self.n_qubits

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "StateVector":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return StateVector(self.n_qubits, self.amplitudes / n)


def new_basis_state(n_qubits: int, index: int) -> StateVector:
    """Computational basis state |index> of an n-qubit register."""
    dim = 2**n_qubits
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for {n_qubits} qubits")
    amps = np.zeros(dim, dtype=complex)
    amps[index] = 1.0
    return StateVector(n_qubits, amps)


def inner_product(a: StateVector, b: StateVector) -> complex:
    """<a|b>, conjugate linear in the first argument."""
    if a.n_qubits != b.n_qubits:
        raise ValueError("states live on registers of different sizes")
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def apply_operator(m: np.ndarray, state: StateVector) -> StateVector:
    """Matrix-vector product M|state>. M must act on the full register."""
    if m.shape != (state.dimension, state.dimension):
        raise ValueError(f"operator shape {m.shape} does not match dimension {state.dimension}")
    return StateVector(state.n_qubits, m @ state.amplitudes)


def embed_operator(gate_matrix: np.ndarray, targets: list[int] | tuple[int, ...], n_qubits: int) -> np.ndarray:
    """Lift a 1- or 2-qubit gate matrix onto the full register.

    The first listed target supplies the most significant bit of the
    gate's own index space, so a CNOT with targets (c, t) treats c as
    the control. Targets must be distinct and in range.
    """
    targets = list(targets)
    k = len(targets)
    if gate_matrix.shape != (2**k, 2**k):
        raise ValueError(f"gate matrix shape {gate_matrix.shape} does not match {k} targets")
    if len(set(targets)) != k:
        raise ValueError(f"repeated target in {targets}")
    for q in targets:
        if not 0 <= q < n_qubits:
            raise ValueError(f"target qubit {q} out of range for {n_qubits} qubits")

    dim = 2**n_qubits
    shifts = [n_qubits - 1 - q for q in targets]  # bit position of each target in a basis index
    out = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        sub_in = 0
        for pos, sh in enumerate(shifts):
            sub_in |= ((col >> sh) & 1) << (k - 1 - pos)
        base = col
        for sh in shifts:
            base &= ~(1 << sh)
        for sub_out in range(2**k):
            amp = gate_matrix[sub_out, sub_in]
            if amp == 0:
                continue
            row = base
            for pos, sh in enumerate(shifts):
                row |= ((sub_out >> (k - 1 - pos)) & 1) << sh
            out[row, col] = amp
    return out


def evolve(hamiltonian: np.ndarray, t: float, state: StateVector) -> StateVector:
    """exp(-i H t)|state> via eigendecomposition of the Hermitian H."""
    if hamiltonian.shape != (state.dimension, state.dimension):
        raise ValueError("Hamiltonian dimension does not match the state")
    if not is_hermitian(hamiltonian):
        raise ValueError(f"Hamiltonian is not Hermitian (defect {hermiticity_defect(hamiltonian):.3e})")
    w, v = np.linalg.eigh(hamiltonian)
    phases = np.exp(-1j * w * t)
    amps = v @ (phases * (v.conj().T @ state.amplitudes))
    return StateVector(state.n_qubits, amps)


def measure_register(state: StateVector, qubits: list[int] | tuple[int, ...]) -> np.ndarray:
    """Probability distribution over the listed qubits.

    Outcome indices read the first listed qubit as their most significant
    bit, matching the global bit convention. The listed qubits must be
    distinct; unlisted qubits are marginalized out.
    """
    qubits = list(qubits)
    if len(set(qubits)) != len(qubits):
        raise ValueError(f"repeated qubit in {qubits}")
    for q in qubits:
        if not 0 <= q < state.n_qubits:
            raise ValueError(f"qubit {q} out of range for {state.n_qubits} qubits")
    probs = np.abs(state.amplitudes) ** 2
    grid = probs.reshape([2] * state.n_qubits)  # axis k <-> qubit k
    drop = tuple(ax for ax in range(state.n_qubits) if ax not in qubits)
    if drop:
        grid = grid.sum(axis=drop)
    # surviving axes sit in ascending qubit order; reorder to the listed order
    kept_sorted = sorted(qubits)
    grid = np.transpose(grid, axes=[kept_sorted.index(q) for q in qubits])
    return grid.reshape(-1)


def register_index(values: dict[int, int], n_qubits: int) -> int:
    """Basis index with qubit q set to values[q] (unlisted qubits 0)."""
    idx = 0
    for q, bit in values.items():
        if not 0 <= q < n_qubits:
            raise ValueError(f"qubit {q} out of range")
        if bit not in (0, 1):
            raise ValueError(f"bit value for qubit {q} must be 0 or 1")
        idx |= bit << (n_qubits - 1 - q)
    return idx


def place_value(value: int, qubits: list[int] | tuple[int, ...], n_qubits: int) -> dict[int, int]:
    """Spread an integer over an ordered qubit list, first qubit most significant."""
    k = len(qubits)
    if not 0 <= value < 2**k:
        raise ValueError(f"value {value} does not fit in {k} qubits")
    return {q: (value >> (k - 1 - pos)) & 1 for pos, q in enumerate(qubits)}
