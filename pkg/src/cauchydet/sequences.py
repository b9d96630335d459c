"""Term-sequence models: a_1, a_2, ... pairwise distinct and nonzero.

Every matrix family downstream is parameterized by such a sequence.  Four
models cover the sweeps:

* ``nat``      a_l = l
* ``recip``    a_l = 1/l
* ``list:...`` explicit finite terms, e.g. ``list:1,2,5/3``
* ``random:<seed>:<bound>`` seeded random rationals, numerator in
  [-bound, bound] \\ {0}, denominator in [1, bound], duplicates redrawn

The text forms above are the CLI/caseId syntax; ``Sequence.parse`` and
``describe`` round-trip them.  Random sequences are lazy but cached, so
``term(l)`` is a pure function of (seed, bound, l) no matter the call
order.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .rational import as_rational
from .rng import SplitMix64

__all__ = ["Sequence"]

# A bound this small can run out of distinct values; the retry loop gives
# up loudly rather than spinning.
_MAX_DRAWS_PER_TERM = 10_000


class Sequence:
    """One-based sequence of pairwise distinct nonzero rationals."""

    __slots__ = ("kind", "_terms", "_seed", "_bound", "_rng", "_seen", "_lock")

    def __init__(self, kind: str, terms=None, seed=None, bound=None):
        self.kind = kind
        self._terms = terms
        self._seed = seed
        self._bound = bound
        if kind == "random":
            self._rng = SplitMix64(seed)
            self._seen: set[Fraction] = set()
            self._lock = threading.Lock()
        else:
            self._rng = None
            self._seen = None
            self._lock = None

    # -- constructors -------------------------------------------------

    @classmethod
    def natural(cls) -> "Sequence":
        """a_l = l."""
        return cls("nat")

    @classmethod
    def reciprocal(cls) -> "Sequence":
        """a_l = 1/l."""
        return cls("recip")

    @classmethod
    def explicit(cls, terms) -> "Sequence":
        """Finite sequence from explicit terms (distinct, nonzero)."""
        vals = tuple(as_rational(t) for t in terms)
        if not vals:
            raise ValueError("explicit sequence needs at least one term")
        for i, v in enumerate(vals):
            if v == 0:
                raise ValueError(f"term {i + 1} is zero; sequence terms must be nonzero")
        if len(set(vals)) != len(vals):
            raise ValueError("sequence terms must be pairwise distinct")
        return cls("list", terms=vals)

    @classmethod
    def random(cls, seed: int, bound: int = 9) -> "Sequence":
        """Seeded random sequence; same (seed, bound) means same terms."""
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")
        return cls("random", terms=[], seed=int(seed), bound=int(bound))

    @classmethod
    def parse(cls, text: str) -> "Sequence":
        """Parse the CLI spec syntax (see module docstring)."""
        if text == "nat":
            return cls.natural()
        if text == "recip":
            return cls.reciprocal()
        if text.startswith("list:"):
            body = text[len("list:") :]
            if not body:
                raise ValueError("empty list: sequence spec")
            try:
                terms = [Fraction(part) for part in body.split(",")]
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"bad list term in {text!r}: {exc}") from None
            return cls.explicit(terms)
        if text.startswith("random:"):
            parts = text.split(":")
            if len(parts) != 3:
                raise ValueError(f"random spec must be random:<seed>:<bound>, got {text!r}")
            try:
                seed = int(parts[1], 0)
                bound = int(parts[2])
            except ValueError:
                raise ValueError(f"random spec must be random:<seed>:<bound>, got {text!r}") from None
            return cls.random(seed, bound)
        raise ValueError(f"unknown sequence spec: {text!r}")

    # -- protocol ------------------------------------------------------

    def describe(self) -> str:
        """Spec text that parses back to an equivalent sequence."""
        if self.kind == "nat":
            return "nat"
        if self.kind == "recip":
            return "recip"
        if self.kind == "list":
            return "list:" + ",".join(str(t) for t in self._terms)
        return f"random:{self._seed}:{self._bound}"

    def __repr__(self) -> str:
        return f"Sequence({self.describe()!r})"

    def term(self, l: int) -> Fraction:
        """a_l for l >= 1."""
        if not isinstance(l, int) or l < 1:
            raise ValueError(f"sequence index must be an integer >= 1, got {l!r}")
        if self.kind == "nat":
            return Fraction(l)
        if self.kind == "recip":
            return Fraction(1, l)
        if self.kind == "list":
            if l > len(self._terms):
                raise ValueError(
                    f"index {l} out of range for explicit sequence of {len(self._terms)} terms"
                )
            return self._terms[l - 1]
        self._materialize(l)
        return self._terms[l - 1]

    def terms(self, count: int) -> tuple[Fraction, ...]:
        """First ``count`` terms."""
        return tuple(self.term(l) for l in range(1, count + 1))

    def diff(self, l: int, e: int) -> Fraction:
        """d_(l,e) = a_l - a_e; nonzero whenever l != e by distinctness."""
        return self.term(l) - self.term(e)

    def _materialize(self, upto: int) -> None:
        # The lock keeps term generation a pure function of (seed, bound,
        # index) even under concurrent callers.
        with self._lock:
            while len(self._terms) < upto:
                for _ in range(_MAX_DRAWS_PER_TERM):
                    q = self._rng.fraction(self._bound)
                    if q not in self._seen:
                        self._seen.add(q)
                        self._terms.append(q)
                        break
                else:
                    raise RuntimeError(
                        f"random sequence with bound {self._bound} ran out of distinct "
                        f"values after {len(self._terms)} terms"
                    )
