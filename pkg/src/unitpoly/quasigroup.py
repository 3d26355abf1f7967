"""Huge k-ary quasigroups built from permutation polynomials modulo 2**n.

Three combiners are supported. UNIT_PRODUCT multiplies permuted odd
residues, so the carrier is the odd residues. The two RING modes add
permutations of the whole ring built piecewise from polynomials on the
odd residues: RING_ADDITIVE extends each polynomial to even arguments by
conjugation with x+1, RING_GLUED uses a second polynomial for the even
half. Every coordinate's inverse permutation is computed once at
construction, so adjoint solving never searches.
"""

from __future__ import annotations

import itertools
import json
import random
from enum import Enum

from .context import Context, DEFAULT_MAX_N
from .errors import BudgetExceeded, CarrierError
from .poly import ReducedPoly, evaluate, induces_permutation_on_units
from .residue import unit_inverse
from .solve import invert_permutation

DEFAULT_LATIN_BUDGET = 1 << 20


class Mode(Enum):
    UNIT_PRODUCT = "UNIT_PRODUCT"
    RING_ADDITIVE = "RING_ADDITIVE"
    RING_GLUED = "RING_GLUED"


def random_permutational_poly(ctx: Context, rng: random.Random) -> ReducedPoly:
    """Uniform canonical permutation polynomial.

    Coefficients are drawn uniformly from their ranges and redrawn until
    both parity conditions hold; each draw is accepted with probability
    one quarter, so the loop is short.
    """
    while True:
        coeffs = tuple(rng.randrange(1 << bits) for bits in ctx.coeff_bits)
        if induces_permutation_on_units(coeffs):
            return ReducedPoly(coeffs, ctx.n)


class QuasigroupSpec:
    """A k-ary quasigroup given by one permutation polynomial per slot.

    Attributes:
        ctx: the modulus context.
        n, k: modulus exponent and arity.
        mode: the combiner.
        p_polys: the k coordinate permutations (canonical forms).
        h_polys: the k even-half permutations, RING_GLUED only.
    """

    def __init__(self, ctx: Context, mode, p_polys, h_polys=None):
        self.ctx = ctx
        self.n = ctx.n
        self.mode = Mode(mode)
        self.p_polys = tuple(p_polys)
        self.k = len(self.p_polys)
        if self.k < 1:
            raise ValueError("a quasigroup needs at least one coordinate")
        self._validate_polys(self.p_polys, "p")
        if self.mode is Mode.RING_GLUED:
            if h_polys is None:
                raise ValueError("RING_GLUED needs one h polynomial per coordinate")
            self.h_polys = tuple(h_polys)
            if len(self.h_polys) != self.k:
                raise ValueError("h polynomial count must match k")
            self._validate_polys(self.h_polys, "h")
        else:
            if h_polys is not None:
                raise ValueError(f"mode {self.mode.value} does not take h polynomials")
            self.h_polys = None
        self._p_inv = tuple(invert_permutation(p, ctx) for p in self.p_polys)
        self._h_inv = (
            tuple(invert_permutation(h, ctx) for h in self.h_polys)
            if self.h_polys is not None
            else None
        )

    def _validate_polys(self, polys, label):
        from .errors import NotAPermutation

        for idx, p in enumerate(polys):
            if not isinstance(p, ReducedPoly):
                raise ValueError(f"{label}[{idx}] must be a canonical polynomial")
            if p.n != self.n:
                raise ValueError(f"{label}[{idx}] is canonical for n={p.n}, spec has n={self.n}")
            if not induces_permutation_on_units(p):
                raise NotAPermutation(f"{label}[{idx}] does not permute the odd residues")

    # -- carrier handling ---------------------------------------------------

    def carrier(self) -> range:
        if self.mode is Mode.UNIT_PRODUCT:
            return self.ctx.units()
        return self.ctx.ring()

    def _check_args(self, args) -> list[int]:
        out = [int(a) for a in args]
        if len(out) != self.k:
            raise ValueError(f"expected {self.k} arguments, got {len(out)}")
        modulus = self.ctx.modulus
        for a in out:
            if not 0 <= a < modulus:
                raise CarrierError(f"{a} is not a residue modulo 2**{self.n}")
            if self.mode is Mode.UNIT_PRODUCT and a & 1 == 0:
                raise CarrierError(f"{a} is even; this carrier is the odd residues")
        return out

    # -- the operation and its adjoints -------------------------------------

    def _piece_value(self, idx: int, a: int) -> int:
        # value of coordinate idx's ring permutation at a (RING modes)
        if a & 1:
            return evaluate(self.p_polys[idx], a, self.ctx)
        base = self.p_polys[idx] if self.mode is Mode.RING_ADDITIVE else self.h_polys[idx]
        return (evaluate(base, a + 1, self.ctx) - 1) & self.ctx.mask

    def _piece_inverse(self, idx: int, c: int) -> int:
        if c & 1:
            return evaluate(self._p_inv[idx], c, self.ctx)
        base = self._p_inv[idx] if self.mode is Mode.RING_ADDITIVE else self._h_inv[idx]
        return (evaluate(base, c + 1, self.ctx) - 1) & self.ctx.mask

    def apply(self, args) -> int:
        """The quasigroup operation on a full argument tuple."""
        args = self._check_args(args)
        mask = self.ctx.mask
        if self.mode is Mode.UNIT_PRODUCT:
            out = 1
            for p, a in zip(self.p_polys, args):
                out = (out * evaluate(p, a, self.ctx)) & mask
            return out
        total = 0
        for idx, a in enumerate(args):
            total = (total + self._piece_value(idx, a)) & mask
        return total

    def adjoint(self, i: int, args) -> int:
        """Solve the operation for its i-th argument (1-based).

        args carries the target value in position i and the remaining
        arguments in their own positions: the returned b satisfies
        apply(args with position i replaced by b) == args[i-1].
        """
        if not 1 <= i <= self.k:
            raise ValueError(f"coordinate must be in 1..{self.k}, got {i}")
        args = self._check_args(args)
        idx = i - 1
        target = args[idx]
        mask = self.ctx.mask
        if self.mode is Mode.UNIT_PRODUCT:
            # strip the left factors in descending order, then the right ones
            acc = 1
            for j in range(idx - 1, -1, -1):
                acc = (acc * unit_inverse(evaluate(self.p_polys[j], args[j], self.ctx), self.n)) & mask
            acc = (acc * target) & mask
            for j in range(self.k - 1, idx, -1):
                acc = (acc * unit_inverse(evaluate(self.p_polys[j], args[j], self.ctx), self.n)) & mask
            return evaluate(self._p_inv[idx], acc, self.ctx)
        acc = target
        for j in range(self.k):
            if j != idx:
                acc = (acc - self._piece_value(j, args[j])) & mask
        return self._piece_inverse(idx, acc)

    # -- verification --------------------------------------------------------

    def latin_check(self, budget: int = DEFAULT_LATIN_BUDGET) -> bool:
        """Exhaustively confirm the quasigroup and adjoint properties.

        Checks that every unary section (one free slot, all others fixed)
        permutes the carrier, and that every adjoint inverts the operation
        at every point.

        Raises:
            BudgetExceeded: carrier_size**k exceeds the budget.
        """
        carrier = list(self.carrier())
        size = len(carrier)
        if size**self.k > budget:
            raise BudgetExceeded(
                f"carrier size {size}**{self.k} exceeds the exhaustion budget {budget}"
            )
        for idx in range(self.k):
            for rest in itertools.product(carrier, repeat=self.k - 1):
                seen = set()
                args = list(rest[:idx]) + [0] + list(rest[idx:])
                for b in carrier:
                    args[idx] = b
                    seen.add(self.apply(args))
                if len(seen) != size:
                    return False
        for args in itertools.product(carrier, repeat=self.k):
            value = self.apply(args)
            for i in range(1, self.k + 1):
                probe = list(args)
                probe[i - 1] = value
                if self.adjoint(i, probe) != args[i - 1]:
                    return False
        return True

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        data = {
            "n": self.n,
            "k": self.k,
            "mode": self.mode.value,
            "p": [[str(c) for c in p.coeffs] for p in self.p_polys],
        }
        if self.h_polys is not None:
            data["h"] = [[str(c) for c in h.coeffs] for h in self.h_polys]
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict, max_n: int = DEFAULT_MAX_N) -> "QuasigroupSpec":
        try:
            n = int(data["n"])
            k = int(data["k"])
            mode = Mode(str(data["mode"]).upper())
            p_arrays = data["p"]
        except (KeyError, ValueError) as exc:
            raise ValueError(f"malformed quasigroup document: {exc}") from None
        ctx = Context(n, max_n=max_n)
        p_polys = [ReducedPoly(tuple(int(c) for c in arr), n) for arr in p_arrays]
        h_polys = None
        if data.get("h") is not None:
            h_polys = [ReducedPoly(tuple(int(c) for c in arr), n) for arr in data["h"]]
        spec = cls(ctx, mode, p_polys, h_polys)
        if spec.k != k:
            raise ValueError(f"document says k={k} but carries {spec.k} polynomials")
        return spec

    @classmethod
    def from_json(cls, text: str, max_n: int = DEFAULT_MAX_N) -> "QuasigroupSpec":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed quasigroup document: {exc}") from None
        return cls.from_dict(data, max_n=max_n)

    @classmethod
    def random(cls, ctx: Context, k: int, mode, rng: random.Random) -> "QuasigroupSpec":
        """Seeded uniform spec: every polynomial drawn by rejection sampling."""
        mode = Mode(mode)
        p_polys = [random_permutational_poly(ctx, rng) for _ in range(k)]
        h_polys = (
            [random_permutational_poly(ctx, rng) for _ in range(k)]
            if mode is Mode.RING_GLUED
            else None
        )
        return cls(ctx, mode, p_polys, h_polys)

    def __repr__(self) -> str:
        return f"QuasigroupSpec(n={self.n}, k={self.k}, mode={self.mode.value})"
