"""Exact sparse arithmetic in the subring Z[h_1, ..., h_k] of symmetric functions.

Three bases, all indexed by k-bounded partitions: products of complete
homogeneous generators (h), the homogeneous affine Schubert basis defined
by the weak-strip Pieri rule (ks), and its inhomogeneous K-theoretic
analogue defined by the signed set-valued Pieri rule (g).  Coefficients
are arbitrary-precision integers; the only fractions ever formed live
inside the basis-change inversion, whose integrality is asserted.
"""

from __future__ import annotations

import functools
import hashlib
import itertools
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .affine import AffinePermutation, IndexSet, bruhat_leq
from .partitions import (
    KBoundedPartition,
    k_rectangle,
    kbounded_partitions,
    union_sort,
)
from .shapes import (
    bounded_to_perm,
    perm_to_bounded,
    setvalued_strips,
    strip_top,
    weak_strips,
)

__all__ = [
    "BASES",
    "SymElt",
    "pieri_kschur",
    "pieri_kk",
    "h_mult",
    "h_monomial_mult",
    "h_to_g",
    "h_to_ks",
    "g_to_h",
    "ks_to_h",
    "product_g",
    "product_ks",
    "bruhat_lower_partitions",
    "gtilde",
    "gtilde_pieri",
    "gtilde_pieri_direct",
    "gtilde_pieri_ie",
    "expand_gtilde_combination",
    "gtilde_factorize_check",
    "kschur_rectangle_check",
    "kschur_top_degree_check",
    "transition_cache_path",
]

BASES = ("h", "ks", "g")

CACHE_ENV_VAR = "AFFINESCHUR_TABLE_CACHE"


def partition_sort_key(parts: tuple[int, ...]) -> tuple:
    """(degree, parts reverse-lexicographic): the documented term order."""
    return (sum(parts), tuple(-p for p in parts))


@dataclass(frozen=True)
class SymElt:
    """Sparse integer combination of basis elements, zero terms dropped."""

    k: int
    basis: str
    coeffs: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}, got {self.basis!r}")
        cleaned = {}
        for parts, c in self.coeffs:
            parts = tuple(parts)
            KBoundedPartition(self.k, parts)  # validates boundedness
            if c:
                cleaned[parts] = cleaned.get(parts, 0) + c
        terms = tuple(
            (p, c)
            for p, c in sorted(cleaned.items(), key=lambda pc: partition_sort_key(pc[0]))
            if c
        )
        object.__setattr__(self, "coeffs", terms)

    @classmethod
    def from_dict(cls, k: int, basis: str, d: dict[tuple[int, ...], int]) -> "SymElt":
        return cls(k, basis, tuple(d.items()))

    @classmethod
    def zero(cls, k: int, basis: str) -> "SymElt":
        return cls(k, basis, ())

    @classmethod
    def unit(cls, k: int, basis: str) -> "SymElt":
        return cls(k, basis, (((), 1),))

    @classmethod
    def single(cls, k: int, basis: str, parts: tuple[int, ...], coeff: int = 1) -> "SymElt":
        return cls(k, basis, ((tuple(parts), coeff),))

    def as_mapping(self) -> dict[tuple[int, ...], int]:
        return dict(self.coeffs)

    def coefficient(self, parts: tuple[int, ...]) -> int:
        return self.as_mapping().get(tuple(parts), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max((sum(p) for p, _ in self.coeffs), default=0)

    def top_degree_part(self) -> "SymElt":
        d = self.degree()
        return SymElt(self.k, self.basis, tuple((p, c) for p, c in self.coeffs if sum(p) == d))

    def __add__(self, other: "SymElt") -> "SymElt":
        self._check_compatible(other)
        return SymElt(self.k, self.basis, self.coeffs + other.coeffs)

    def __sub__(self, other: "SymElt") -> "SymElt":
        return self + other.scale(-1)

    def scale(self, c: int) -> "SymElt":
        return SymElt(self.k, self.basis, tuple((p, c * v) for p, v in self.coeffs))

    def _check_compatible(self, other: "SymElt") -> None:
        if self.k != other.k:
            raise ValueError(f"rank mismatch: k={self.k} vs k={other.k}")
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __repr__(self):
        if not self.coeffs:
            return f"SymElt(k={self.k}, {self.basis}: 0)"
        body = " + ".join(f"{c}*{self.basis}{list(p)}" for p, c in self.coeffs)
        return f"SymElt(k={self.k}, {body})"

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "basis": self.basis,
            "terms": [{"parts": list(p), "coeff": str(c)} for p, c in self.coeffs],
        }


@functools.lru_cache(maxsize=None)
def _grassmannian_of(lam: KBoundedPartition) -> AffinePermutation:
    return bounded_to_perm(lam)


def pieri_kschur(lam: KBoundedPartition, r: int) -> SymElt:
    """h_r times the homogeneous basis element of lam: sum over weak strips."""
    if not 0 <= r <= lam.k:
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={lam.k}")
    acc: dict[tuple[int, ...], int] = {}
    for A in weak_strips(lam, r):
        top = strip_top(lam, A)
        acc[top.parts] = acc.get(top.parts, 0) + 1
    return SymElt.from_dict(lam.k, "ks", acc)


def pieri_kk(lam: KBoundedPartition, r: int) -> SymElt:
    """h_r times the K-theoretic basis element of lam.

    Signed sum over set-valued strips (A, v): the coefficient of the
    target v gains (-1)^(r + l(w_lam) - l(v)); distinct A with the same
    product accumulate.
    """
    if not 1 <= r <= lam.k:
        raise ValueError(f"need 1 <= r <= k, got r={r}, k={lam.k}")
    w = _grassmannian_of(lam)
    acc: dict[tuple[int, ...], int] = {}
    for A, v in setvalued_strips(w, r):
        parts = perm_to_bounded(v).parts
        sign = (-1) ** (r + w.length - v.length)
        acc[parts] = acc.get(parts, 0) + sign
    return SymElt.from_dict(lam.k, "g", acc)


def h_mult(elt: SymElt, r: int) -> SymElt:
    """Multiply by h_r in the ks or g basis (h_0 acts as the identity)."""
    if r == 0:
        return elt
    if elt.basis == "ks":
        rule = pieri_kschur
    elif elt.basis == "g":
        rule = pieri_kk
    else:
        raise ValueError("h_mult needs the ks or g basis")
    acc: dict[tuple[int, ...], int] = {}
    for parts, c in elt.coeffs:
        for q, v in rule(KBoundedPartition(elt.k, parts), r).coeffs:
            acc[q] = acc.get(q, 0) + c * v
    return SymElt.from_dict(elt.k, elt.basis, acc)


def h_monomial_mult(elt: SymElt, parts: tuple[int, ...]) -> SymElt:
    """Multiply by a whole h monomial, largest generator first."""
    out = elt
    for r in sorted(parts, reverse=True):
        out = h_mult(out, r)
    return out


@functools.lru_cache(maxsize=None)
def h_to_g(mu: KBoundedPartition) -> SymElt:
    """Expansion of the h monomial of mu in the g basis, by iterated Pieri."""
    return h_monomial_mult(SymElt.unit(mu.k, "g"), mu.parts)


@functools.lru_cache(maxsize=None)
def h_to_ks(mu: KBoundedPartition) -> SymElt:
    """Expansion of the h monomial of mu in the ks basis (homogeneous)."""
    return h_monomial_mult(SymElt.unit(mu.k, "ks"), mu.parts)


def _invert_integer_matrix(rows: list[list[int]]) -> list[list[int]]:
    """Exact inverse of an integer matrix that must be unimodular.

    Gauss-Jordan over Fractions; a singular pivot or a fractional entry in
    the result signals a broken transition table, not bad input.
    """
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise RuntimeError("singular transition block")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    out = []
    for r in range(n):
        row = []
        for x in aug[r][n:]:
            if x.denominator != 1:
                raise RuntimeError("transition inverse is not integral")
            row.append(int(x))
        out.append(row)
    return out


def transition_cache_path() -> Path | None:
    p = os.environ.get(CACHE_ENV_VAR)
    return Path(p) if p else None


def _table_content_hash(payload: dict) -> str:
    return hashlib.sha256(
        json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    ).hexdigest()


_G2H_TABLES: dict[tuple[int, int], dict[tuple[int, ...], dict[tuple[int, ...], int]]] = {}


def _g_to_h_table(
    k: int, degree: int, cache_path: Path | None = None
) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
    """g -> h transition for every k-bounded partition of size <= degree.

    Built by inverting the stacked h -> g rows over the (size, revlex)
    ordered basis; persisted as JSON with a content hash when a cache
    path is configured.
    """
    key = (k, degree)
    if key in _G2H_TABLES:
        return _G2H_TABLES[key]
    path = cache_path or transition_cache_path()
    fname = None
    if path is not None:
        fname = Path(path) / f"g_to_h_k{k}_d{degree}.json"
        table = _load_table(fname)
        if table is not None:
            _G2H_TABLES[key] = table
            return table
    basis = [p.parts for p in kbounded_partitions(k, degree)]
    index = {p: i for i, p in enumerate(basis)}
    rows = []
    for mu in basis:
        vec = [0] * len(basis)
        for parts, c in h_to_g(KBoundedPartition(k, mu)).coeffs:
            vec[index[parts]] = c
        rows.append(vec)
    inv = _invert_integer_matrix(rows)
    table = {
        basis[i]: {basis[j]: inv[i][j] for j in range(len(basis)) if inv[i][j]}
        for i in range(len(basis))
    }
    _G2H_TABLES[key] = table
    if fname is not None:
        _store_table(fname, k, degree, table)
    return table


def _load_table(fname: Path):
    if not fname.exists():
        return None
    try:
        blob = json.loads(fname.read_text())
        payload = blob["table"]
        if _table_content_hash(payload) != blob.get("hash"):
            return None
        return {
            tuple(json.loads(p)): {tuple(json.loads(q)): int(c) for q, c in row.items()}
            for p, row in payload.items()
        }
    except (ValueError, KeyError, OSError):
        return None


def _store_table(fname: Path, k: int, degree: int, table) -> None:
    payload = {
        json.dumps(list(p)): {json.dumps(list(q)): c for q, c in sorted(row.items())}
        for p, row in sorted(table.items())
    }
    blob = {
        "k": k,
        "degree": degree,
        "order": "size ascending, then parts reverse-lexicographic",
        "hash": _table_content_hash(payload),
        "table": payload,
    }
    try:
        fname.parent.mkdir(parents=True, exist_ok=True)
        fname.write_text(json.dumps(blob, sort_keys=True, indent=0))
    except OSError:
        pass  # caching is best-effort


def g_to_h(lam: KBoundedPartition, cache_path: Path | None = None) -> SymElt:
    """Exact integer expansion of a g basis element in the h basis."""
    table = _g_to_h_table(lam.k, lam.size, cache_path)
    return SymElt.from_dict(lam.k, "h", dict(table[lam.parts]))


_KS2H_TABLES: dict[tuple[int, int], dict[tuple[int, ...], dict[tuple[int, ...], int]]] = {}


def _ks_to_h_table(k: int, degree: int) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
    """ks -> h transition on the homogeneous component of one degree."""
    key = (k, degree)
    if key in _KS2H_TABLES:
        return _KS2H_TABLES[key]
    basis = [p.parts for p in kbounded_partitions(k, degree) if p.size == degree]
    index = {p: i for i, p in enumerate(basis)}
    rows = []
    for mu in basis:
        vec = [0] * len(basis)
        for parts, c in h_to_ks(KBoundedPartition(k, mu)).coeffs:
            vec[index[parts]] = c
        rows.append(vec)
    inv = _invert_integer_matrix(rows)
    table = {
        basis[i]: {basis[j]: inv[i][j] for j in range(len(basis)) if inv[i][j]}
        for i in range(len(basis))
    }
    _KS2H_TABLES[key] = table
    return table


def ks_to_h(lam: KBoundedPartition) -> SymElt:
    """Expansion of a homogeneous basis element in the h basis."""
    table = _ks_to_h_table(lam.k, lam.size)
    return SymElt.from_dict(lam.k, "h", dict(table[lam.parts]))


def _product_via_h(a: SymElt, b: SymElt, to_h) -> SymElt:
    a._check_compatible(b)
    out = SymElt.zero(a.k, a.basis)
    for parts, c in a.coeffs:
        for hparts, hc in to_h(KBoundedPartition(a.k, parts)).coeffs:
            out = out + h_monomial_mult(b, hparts).scale(c * hc)
    return out


def product_g(a: SymElt, b: SymElt) -> SymElt:
    """Product in the g basis: route one factor through h, then Pieri."""
    return _product_via_h(a, b, g_to_h)


def product_ks(a: SymElt, b: SymElt) -> SymElt:
    """Product in the ks basis through the homogeneous h expansion."""
    return _product_via_h(a, b, ks_to_h)


@functools.lru_cache(maxsize=None)
def bruhat_lower_partitions(lam: KBoundedPartition) -> tuple[KBoundedPartition, ...]:
    """All k-bounded mu with w_mu <= w_lam in the strong order."""
    w = _grassmannian_of(lam)
    out = []
    for mu in kbounded_partitions(lam.k, lam.size):
        if bruhat_leq(_grassmannian_of(mu), w):
            out.append(mu)
    return tuple(out)


def gtilde(lam: KBoundedPartition) -> SymElt:
    """Sum of the g basis over the strong-order lower ideal of lam."""
    return SymElt.from_dict(
        lam.k, "g", {mu.parts: 1 for mu in bruhat_lower_partitions(lam)}
    )


def gtilde_pieri(lam: KBoundedPartition, r: int) -> SymElt:
    """gtilde(lam) times h_0 + ... + h_r, in closed form.

    The product is the 0/1 indicator sum over the union of the lower
    ideals of the size-r weak-strip tops.
    """
    if not 0 <= r <= lam.k:
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={lam.k}")
    seen: set[tuple[int, ...]] = set()
    for A in weak_strips(lam, r):
        for mu in bruhat_lower_partitions(strip_top(lam, A)):
            seen.add(mu.parts)
    return SymElt.from_dict(lam.k, "g", {p: 1 for p in seen})


def gtilde_pieri_direct(lam: KBoundedPartition, r: int) -> SymElt:
    """gtilde(lam) times h_0 + ... + h_r by the raw signed Pieri sums."""
    if not 0 <= r <= lam.k:
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={lam.k}")
    base = gtilde(lam)
    out = SymElt.zero(lam.k, "g")
    for i in range(r + 1):
        out = out + h_mult(base, i)
    return out


def gtilde_pieri_ie(lam: KBoundedPartition, r: int) -> dict[tuple[int, ...], int]:
    """Inclusion-exclusion form of the same product, as gtilde labels.

    Alternating sum over nonempty collections of the size-r strips; the
    label of a collection is the strip of the intersection of its index
    sets (intersections of strip labels are again strips).
    """
    if not 0 <= r <= lam.k:
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={lam.k}")
    strips = weak_strips(lam, r)
    acc: dict[tuple[int, ...], int] = {}
    for m in range(1, len(strips) + 1):
        sign = (-1) ** (m - 1)
        for combo in itertools.combinations(strips, m):
            inter = frozenset.intersection(*(A.members for A in combo))
            label = strip_top(lam, IndexSet(lam.k, inter)).parts
            acc[label] = acc.get(label, 0) + sign
    return {
        p: c
        for p, c in sorted(acc.items(), key=lambda pc: partition_sort_key(pc[0]))
        if c
    }


def expand_gtilde_combination(
    k: int, combo: dict[tuple[int, ...], int]
) -> SymElt:
    """Expand an integer combination of gtilde labels into the g basis."""
    out = SymElt.zero(k, "g")
    for parts, c in combo.items():
        out = out + gtilde(KBoundedPartition(k, parts)).scale(c)
    return out


def gtilde_factorize_check(lam: KBoundedPartition, t: int) -> bool:
    """Whether gtilde of the rectangle-union equals the product of gtildes."""
    if not 1 <= t <= lam.k:
        raise ValueError(f"need 1 <= t <= k, got t={t}, k={lam.k}")
    rect = k_rectangle(t, lam.k)
    lhs = gtilde(union_sort(rect, lam))
    rhs = product_g(gtilde(rect), gtilde(lam))
    return lhs == rhs


def kschur_rectangle_check(lam: KBoundedPartition, t: int) -> bool:
    """Whether the homogeneous basis element of the rectangle-union factors."""
    if not 1 <= t <= lam.k:
        raise ValueError(f"need 1 <= t <= k, got t={t}, k={lam.k}")
    rect = k_rectangle(t, lam.k)
    lhs = SymElt.single(lam.k, "ks", union_sort(rect, lam).parts)
    rhs = product_ks(
        SymElt.single(lam.k, "ks", rect.parts), SymElt.single(lam.k, "ks", lam.parts)
    )
    return lhs == rhs


def kschur_top_degree_check(lam: KBoundedPartition) -> bool:
    """Top-degree h terms of the g element match the homogeneous element."""
    top = SymElt(
        lam.k,
        "h",
        tuple((p, c) for p, c in g_to_h(lam).coeffs if sum(p) == lam.size),
    )
    return top == ks_to_h(lam)
