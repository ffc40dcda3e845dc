"""Integer criteria deciding when the tree T_n is status injective."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import isqrt

from statuspairs.constructions import build_tree, closed_form_table
from statuspairs.graph import statuses

LEMMA3_INTEGER_SOLUTIONS = frozenset({(-4, -3), (-4, 2), (-1, -3), (-1, 2)})


class CriterionError(ValueError):
    pass


def f(p: int) -> int:
    return p * p + 5 * p + 4


def h(q: int) -> int:
    return q * q + q - 6


def _exact_sqrt(x: int) -> int | None:
    if x < 0:
        return None
    r = isqrt(x)
    return r if r * r == x else None


def _q_roots(value: int) -> list[int]:
    """All integers ``q`` with ``h(q) == value``."""
    r = _exact_sqrt(4 * value + 25)
    if r is None:
        return []
    # q = (-1 +- r) / 2; r is odd whenever 4v+25 is an odd square
    return sorted({(-1 + r) // 2, (-1 - r) // 2})


def _p_roots(value: int) -> list[int]:
    """All integers ``p`` with ``f(p) == value``."""
    r = _exact_sqrt(4 * value + 9)
    if r is None:
        return []
    return sorted({(-5 + r) // 2, (-5 - r) // 2})


def lemma3_solutions(bound: int, nonnegative: bool = False) -> list[tuple[int, int]]:
    """Integer pairs ``(p, q)`` with ``|p|, |q| <= bound`` and ``f(p) == h(q)``.

    Each ``p`` is inverted through ``h`` exactly, so the cost is linear in
    ``bound``.  With ``nonnegative`` the search is restricted to ``p, q >= 0``.
    """
    if bound < 0:
        raise CriterionError("bound must be nonnegative")
    lo = 0 if nonnegative else -bound
    out = []
    for p in range(lo, bound + 1):
        for q in _q_roots(f(p)):
            if lo <= q <= bound:
                out.append((p, q))
    return out


def lemma4_check(p: int, q: int) -> bool:
    """Whether ``p >= 7 and |f(p) - h(q)| <= 15`` implies ``q == p + 2 and f(p) - h(q) == 4``."""
    diff = f(p) - h(q)
    if p >= 7 and abs(diff) <= 15:
        return q == p + 2 and diff == 4
    return True


def lemma4_sweep(p_max: int, q_max: int) -> list[tuple[int, int]]:
    """Counterexamples to ``lemma4_check`` for ``7 <= p <= p_max``, ``1 <= q <= q_max``."""
    return [(p, q) for p in range(7, p_max + 1) for q in range(1, q_max + 1) if not lemma4_check(p, q)]


@dataclass(frozen=True)
class GammaMembership:
    value: int
    a_witness: int | None
    b_witness: int | None

    @property
    def in_a(self) -> bool:
        return self.a_witness is not None

    @property
    def in_b(self) -> bool:
        return self.b_witness is not None

    @property
    def present(self) -> bool:
        return self.in_a or self.in_b


def gamma_member(v: int) -> GammaMembership:
    """Decide ``v in {f(p) : p >= 1}`` and ``v in {h(q) : q >= 1}`` exactly."""
    if v < 0:
        raise CriterionError("gamma_member expects a nonnegative value")
    p = next((x for x in _p_roots(v) if x >= 1), None)
    q = next((x for x in _q_roots(v) if x >= 1), None)
    return GammaMembership(v, p, q)


def omega(k: int) -> tuple[int, int, int]:
    return (2 * k + 2, 2 * k + 10, 4 * k + 6)


@dataclass(frozen=True)
class InjectivityVerdict:
    n: int
    k: int
    parity: str
    injective: bool
    witness: tuple[int, int] | None
    criterion_path: str

    def to_dict(self) -> dict:
        d = asdict(self)
        d["witness"] = list(self.witness) if self.witness else None
        return d


ODD_RULE = "odd-family rule"
EVEN_RULE = "even omega-gamma rule"
BRUTE_FORCE = "direct brute force"


def _check_k(k: int) -> None:
    if k < 7:
        raise CriterionError(f"construction undefined for k={k} (need k >= 7)")


def _witness_from_table(n: int) -> tuple[int, int] | None:
    """First pair of labels sharing a closed-form status, pendant vertex first."""
    table = closed_form_table(n)
    seen: dict[int, int] = {}
    pairs = []
    for label, s in enumerate(table.entries, start=1):
        if s in seen:
            pairs.append((seen[s], label))
        else:
            seen[s] = label
    if not pairs:
        return None
    k = table.k
    pendant = {2 * k + 4, 2 * k + 5, 2 * k + 6}
    pairs.sort(key=lambda pr: (not (pr[1] in pendant or pr[0] in pendant), pr))
    i, j = pairs[0]
    return (j, i) if j in pendant and i not in pendant else (i, j)


def _witness_from_bfs(n: int) -> tuple[int, int] | None:
    seen: dict[int, int] = {}
    for label, s in enumerate(statuses(build_tree(n)), start=1):
        if s in seen:
            return (seen[s], label)
        seen[s] = label
    return None


def odd_family_collides(k: int) -> bool:
    """True iff ``k`` is ``2c^2 - 2``, ``2c^2 - 4`` or ``2c^2 - 6`` for an integer ``c``."""
    for shift in (2, 4, 6):
        half, rem = divmod(k + shift, 2)
        if rem == 0 and _exact_sqrt(half) is not None:
            return True
    return False


def odd_injective(k: int, with_witness: bool = True) -> InjectivityVerdict:
    _check_k(k)
    n = 2 * k + 5
    injective = not odd_family_collides(k)
    witness = None if injective or not with_witness else _witness_from_table(n)
    return InjectivityVerdict(n, k, "odd", injective, witness, ODD_RULE)


def even_injective(k: int, with_witness: bool = True) -> InjectivityVerdict:
    _check_k(k)
    n = 2 * k + 6
    if k <= 8:
        witness = _witness_from_bfs(n)
        return InjectivityVerdict(n, k, "even", witness is None, witness, BRUTE_FORCE)
    injective = not any(gamma_member(v).present for v in omega(k))
    witness = None if injective or not with_witness else _witness_from_table(n)
    return InjectivityVerdict(n, k, "even", injective, witness, EVEN_RULE)


def verdict_for_order(n: int, with_witness: bool = True) -> InjectivityVerdict:
    if n % 2:
        return odd_injective((n - 5) // 2, with_witness)
    return even_injective((n - 6) // 2, with_witness)


def brute_force_verdict(n: int) -> InjectivityVerdict:
    k = (n - 5) // 2 if n % 2 else (n - 6) // 2
    _check_k(k)
    witness = _witness_from_bfs(n)
    return InjectivityVerdict(n, k, "odd" if n % 2 else "even", witness is None, witness, BRUTE_FORCE)


def four_window_check(k_lo: int, k_hi: int) -> tuple[bool, int | None]:
    """Check that every window ``k..k+3`` inside the range has an injective even order.

    Returns ``(True, None)`` or ``(False, first failing k)``.
    """
    if k_lo < 7 or k_lo > k_hi:
        raise CriterionError(f"invalid k range {k_lo}..{k_hi} (need 7 <= lo <= hi)")
    good = [even_injective(k, with_witness=False).injective for k in range(k_lo, k_hi + 1)]
    for start in range(len(good) - 3):
        if not any(good[start : start + 4]):
            return False, k_lo + start
    return True, None
