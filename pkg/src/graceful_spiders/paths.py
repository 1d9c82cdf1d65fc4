"""Path labeling providers.

The existence results these providers fulfill (graceful path labelings with a
prescribed zero vertex, alpha-labelings with a prescribed endpoint label or
index) come without constructions. Witnesses are produced by a recursive
closed-form construction with a constrained depth-first search as fallback.

The construction rests on the structure of alpha-labelings of paths: the
low/high classes coincide with the two bipartition classes (alternating
positions), and the subsequence of low labels must descend cyclically while
the highs ascend cyclically in interleaved "fan" blocks. Concretely, the
labeling with a prescribed low endpoint j is assembled by peeling a fan block
off the front -- lows j..0 interleaved with the top highs, consuming the
largest edge differences -- and recursing on the contiguous middle label band,
which is the same problem again after shifting. Two symmetries extend the
family: the flip x -> alpha - x (resp. m + alpha + 1 - x) moves the endpoint
within the low class, and the complement x -> m - x swaps the classes, turning
high-endpoint requests into low-endpoint ones. The only unreachable cases are
exactly the known infeasible pairs (n = 4s+1 with endpoint s or 3s, and the
central vertex of P_5 for the zero-position variant), so search is needed
only for a thin residue of zero-position requests with near-equal arms.
"""

from __future__ import annotations

import json
import os
import tempfile
from typing import Iterator, Optional

from .errors import InfeasibleError, ResourceBudgetError, ValidationError
from .model import AlphaLabeling, Labeling, path_tree

DEFAULT_NODE_BUDGET = 10**8
ENUMERATION_BOUND = 14

CACHE_ENV_VAR = "GRACEFUL_SPIDERS_CACHE"
_CACHE_FORMAT = "graceful-spiders-path-cache"
_CACHE_VERSION = 1


class PathCache:
    """Disk-backed memo of provider results, keyed by request parameters.

    The file is a versioned JSON map; writes go through a temp file and an
    atomic replace so concurrent readers never see a torn file.
    """

    def __init__(self, path: Optional[str] = None):
        self.path = path
        self._entries: dict[str, list[int]] = {}
        self._loaded = path is None

    def _load(self):
        if self._loaded:
            return
        self._loaded = True
        try:
            with open(self.path) as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError):
            return
        if doc.get("format") == _CACHE_FORMAT and doc.get("version") == _CACHE_VERSION:
            self._entries = {k: list(map(int, v)) for k, v in doc.get("entries", {}).items()}

    def get(self, key: str) -> Optional[list[int]]:
        self._load()
        return self._entries.get(key)

    def put(self, key: str, labels: list[int]):
        self._load()
        self._entries[key] = list(labels)
        if self.path is None:
            return
        doc = {"format": _CACHE_FORMAT, "version": _CACHE_VERSION, "entries": self._entries}
        os.makedirs(os.path.dirname(self.path) or ".", exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(self.path) or ".", suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(doc, fh)
            os.replace(tmp, self.path)
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass


_default_cache: Optional[PathCache] = None


def default_cache() -> PathCache:
    global _default_cache
    if _default_cache is None:
        path = os.environ.get(CACHE_ENV_VAR)
        if path is None:
            path = os.path.join(
                os.path.expanduser("~"), ".cache", "graceful-spiders", "paths.json"
            )
        _default_cache = PathCache(path)
    return _default_cache


def zigzag_alpha_path(n: int) -> AlphaLabeling:
    """The classical alternating path labeling 0, m, 1, m-1, ...

    Position j gets j/2 when j is even and (n-1) - (j-1)/2 when odd; the
    first endpoint is labeled 0.
    """
    if n < 1:
        raise ValidationError("n must be >= 1")
    return AlphaLabeling(
        path_tree(n), Labeling.from_sequence(_zigzag_seq(n)), (n - 1) // 2
    )


# ---------------------------------------------------------------------------
# Closed-form construction of alpha path labelings.
#
# _alpha_low_end(n, j) produces the label sequence of an alpha-labeling of
# P_n whose low class [0, alpha] sits on the even positions (so the index is
# alpha = ceil(n/2) - 1) and whose first endpoint carries the low label j.
# All other requests reduce to it by reversal, flip and complement.
# ---------------------------------------------------------------------------


def _zigzag_seq(n: int) -> list[int]:
    return [j // 2 if j % 2 == 0 else (n - 1) - (j - 1) // 2 for j in range(n)]


def _fan_seq(n: int) -> list[int]:
    """The labeling alpha, alpha+1, alpha-1, alpha+2, ... with ascending
    differences 1, 2, ..., n-1; the endpoint carries the index itself."""
    a = (n + 1) // 2 - 1
    return [a - j // 2 if j % 2 == 0 else a + 1 + (j - 1) // 2 for j in range(n)]


def _flip_seq(seq: list[int]) -> list[int]:
    """Reflect each class: x -> alpha - x on lows, m + alpha + 1 - x on highs.
    Preserves gracefulness, the index and the class layout."""
    m = len(seq) - 1
    a = (len(seq) + 1) // 2 - 1
    return [a - x if x <= a else m + a + 1 - x for x in seq]


def _comp_seq(seq: list[int]) -> list[int]:
    """Complement x -> m - x; swaps the low/high classes."""
    m = len(seq) - 1
    return [m - x for x in seq]


_low_end_memo: dict[tuple[int, int], Optional[list[int]]] = {}


def _alpha_low_end(n: int, j: int) -> list[int]:
    key = (n, j)
    hit = _low_end_memo.get(key, False)
    if hit is not False:
        if hit is None:
            raise InfeasibleError(
                f"P_{n} has no alpha-labeling with endpoint label {j}"
            )
        return list(hit)
    try:
        seq = _build_low_end(n, j)
    except InfeasibleError:
        _low_end_memo[key] = None
        raise
    _low_end_memo[key] = seq
    return list(seq)


def _build_low_end(n: int, j: int) -> list[int]:
    m = n - 1
    alpha = (n + 1) // 2 - 1
    if not 0 <= j <= alpha:
        raise InfeasibleError(
            f"endpoint label {j} is not in the low class [0, {alpha}] of P_{n}"
        )
    if j == 0:
        return _zigzag_seq(n)
    if j == alpha:
        return _fan_seq(n)
    if alpha == 2 * j:
        # n is 4j+1 (the infeasible pair of Lemma 2(c)) or 4j+2, which gets
        # its own two-block form: a fan on the extreme labels, a bridge of
        # difference 2j+1, then a fan on the middle band.
        if n % 2 == 1:
            raise InfeasibleError(
                f"P_{n} has no alpha-labeling with endpoint label {j}"
            )
        seq = []
        for k in range(j + 1):
            seq.append(j - k)
            if k < j:
                seq.append(m - j + 1 + k)
        for k in range(j + 1):
            seq.append(2 * j + 1 + k)
            if k < j:
                seq.append(2 * j - k)
        return seq
    if 2 * j > alpha:
        return _flip_seq(_alpha_low_end(n, alpha - j))
    # Peel a fan block off the front: an alpha-labeling of P_{2k+2} with
    # endpoint j, its lows kept as the extreme lows [0, k] and its highs
    # shifted onto the extreme highs [m-k, m]. The block consumes the top
    # differences [m-2k, m]; the bridge edge contributes m-2k-1; the rest is
    # the same problem on the band [k+1, m-k-1], shifted down by k+1. The
    # smallest block (k = j) almost always works; larger k sidesteps the
    # rare infeasible sub-instances.
    for k in range(j, alpha):
        if 2 * k + 2 >= n:
            break
        try:
            pre = _alpha_low_end(2 * k + 2, j)
        except InfeasibleError:
            continue
        h = pre[-1]
        if h > alpha:
            continue
        np_, jp = n - 2 * k - 2, h - (k + 1)
        if not 0 <= jp <= (np_ + 1) // 2 - 1:
            continue
        try:
            suf = _alpha_low_end(np_, jp)
        except InfeasibleError:
            continue
        return [x if x <= k else x + (m - 2 * k - 1) for x in pre] + [
            x + (k + 1) for x in suf
        ]
    raise InfeasibleError(
        f"no alpha-labeling of P_{n} with endpoint label {j} in the "
        f"constructive family; this contradicts the guaranteed existence"
    )


def _alpha_of_sequence(n: int, low_is_even: bool) -> int:
    n_low = (n + 1) // 2 if low_is_even else n // 2
    return n_low - 1


class _Budget:
    __slots__ = ("remaining", "spent")

    def __init__(self, limit: int):
        self.remaining = limit
        self.spent = 0

    def tick(self):
        if self.remaining <= 0:
            raise ResourceBudgetError(
                f"path search exhausted its node budget after {self.spent} extensions"
            )
        self.remaining -= 1
        self.spent += 1


def _search_path(
    n: int,
    fixed: dict[int, int],
    budget: _Budget,
    low_is_even: Optional[bool] = None,
    order: Optional[list[int]] = None,
) -> Optional[list[int]]:
    """First witness of a (possibly alpha-constrained) graceful path labeling.

    With low_is_even set, even/odd positions draw from the low/high label
    ranges of the implied index; otherwise any unused label is allowed.
    `order` overrides the position assignment order (default left to right);
    assigning outward from a fixed vertex keeps the constrained searches
    shallow. Returns None when the constrained space holds no witness.
    """
    m = n - 1
    if low_is_even is not None:
        n_low = (n + 1) // 2 if low_is_even else n // 2
        alpha = n_low - 1
        pos_is_low = [(p % 2 == 0) == low_is_even for p in range(n)]
        for p, lab in fixed.items():
            if (lab <= alpha) != pos_is_low[p]:
                return None
        candidate_pools = [
            list(range(0, alpha + 1)) if pos_is_low[p] else list(range(m, alpha, -1))
            for p in range(n)
        ]
    else:
        candidate_pools = [list(range(0, m + 1)) for _ in range(n)]

    if order is None:
        order = list(range(n))
    labels: dict[int, int] = {}

    def extend(idx: int, used_labels: int, used_diffs: int) -> bool:
        if idx == n:
            return True
        pos = order[idx]
        pool = [fixed[pos]] if pos in fixed else candidate_pools[pos]
        for lab in pool:
            budget.tick()
            bit = 1 << lab
            if used_labels & bit:
                continue
            new_diffs = 0
            ok = True
            for q in (pos - 1, pos + 1):
                if q in labels:
                    diff = abs(lab - labels[q])
                    dbit = 1 << diff
                    if diff == 0 or (used_diffs | new_diffs) & dbit:
                        ok = False
                        break
                    new_diffs |= dbit
            if not ok:
                continue
            labels[pos] = lab
            if extend(idx + 1, used_labels | bit, used_diffs | new_diffs):
                return True
            del labels[pos]
        return False

    if extend(0, 0, 0):
        return [labels[p] for p in range(n)]
    return None


def _outward_order(n: int, position: int) -> list[int]:
    order = [position]
    left, right = position - 1, position + 1
    while left >= 0 or right < n:
        if right < n:
            order.append(right)
            right += 1
        if left >= 0:
            order.append(left)
            left -= 1
    return order


def _enumerate_alpha_sequences(n: int, low_is_even: bool) -> Iterator[tuple[int, ...]]:
    """All alpha-labelings of P_n whose low class sits on the given parity."""
    m = n - 1
    n_low = (n + 1) // 2 if low_is_even else n // 2
    alpha = n_low - 1
    labels = [-1] * n

    def extend(pos: int, used_labels: int, used_diffs: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(labels)
            return
        low = (pos % 2 == 0) == low_is_even
        pool = range(0, alpha + 1) if low else range(alpha + 1, m + 1)
        prev = labels[pos - 1] if pos > 0 else None
        for lab in pool:
            bit = 1 << lab
            if used_labels & bit:
                continue
            if prev is not None:
                diff = abs(lab - prev)
                dbit = 1 << diff
                if used_diffs & dbit:
                    continue
            else:
                dbit = 0
            labels[pos] = lab
            yield from extend(pos + 1, used_labels | bit, used_diffs | dbit)

    yield from extend(0, 0, 0)


def graceful_path_zero_at(
    n: int,
    position: int,
    budget: int = DEFAULT_NODE_BUDGET,
    cache: Optional[PathCache] = None,
) -> Labeling:
    """A graceful labeling of P_n with the vertex at `position` labeled 0.

    Endpoints come straight from the zigzag labeling. Interior positions
    reuse the alpha provider (an alpha-labeling is graceful), with the lone
    alpha-infeasible case (n=5, central vertex) falling back to
    unconstrained backtracking.
    """
    if not 0 <= position < n:
        raise ValidationError(f"position {position} out of range for n={n}")
    if position == 0:
        return zigzag_alpha_path(n).labeling
    if position == n - 1:
        seq = zigzag_alpha_path(n).labeling.as_sequence(n)
        return Labeling.from_sequence(seq[::-1])
    if (n, position) == (5, 2):
        cache = cache or default_cache()
        key = f"graceful_zero:{n}:{position}"
        hit = cache.get(key)
        if hit is None:
            hit = _search_path(n, {position: 0}, _Budget(budget))
            if hit is None:
                raise InfeasibleError("no graceful labeling found; contradicts Cattell")
            cache.put(key, hit)
        return Labeling.from_sequence(hit)
    return alpha_path_zero_at(n, position, budget=budget, cache=cache).labeling


def alpha_path_zero_at(
    n: int,
    position: int,
    budget: int = DEFAULT_NODE_BUDGET,
    cache: Optional[PathCache] = None,
) -> AlphaLabeling:
    """An alpha-labeling of P_n with the vertex at `position` labeled 0.

    Infeasible exactly for n=5 with the central vertex. The construction
    runs a zigzag from the zero vertex along one arm (consuming the largest
    differences) and reduces the other arm to an endpoint-constrained
    labeling of the remaining label band; the few position splits where
    neither arm admits that reduction (near-equal arms) fall back to
    constrained search.
    """
    if not 0 <= position < n:
        raise ValidationError(f"position {position} out of range for n={n}")
    if (n, position) == (5, 2):
        raise InfeasibleError("P_5 has no alpha-labeling with the central vertex at 0")
    if n == 1:
        return AlphaLabeling(path_tree(1), Labeling({0: 0}), 0)
    low_is_even = position % 2 == 0
    alpha = _alpha_of_sequence(n, low_is_even)
    if position in (0, n - 1):
        seq = _zigzag_seq(n)
        if position == n - 1:
            seq = seq[::-1]
        return AlphaLabeling(path_tree(n), Labeling.from_sequence(seq), alpha)
    cache = cache or default_cache()
    key = f"alpha_zero:{n}:{position}"
    seq = cache.get(key)
    if seq is None:
        seq = _zero_at_construct(n, position)
        if seq is None:
            seq = _search_path(
                n,
                {position: 0},
                _Budget(budget),
                low_is_even=low_is_even,
                order=_outward_order(n, position),
            )
        if seq is None:
            raise InfeasibleError(
                f"exhaustive search found no alpha-labeling of P_{n} with 0 at "
                f"position {position}; this contradicts the guaranteed existence"
            )
        cache.put(key, seq)
    return AlphaLabeling(path_tree(n), Labeling.from_sequence(seq), alpha)


def _zero_at_construct(n: int, position: int) -> Optional[list[int]]:
    """Closed-form alpha-labeling with 0 at an interior position, or None.

    Zigzag along the arm of q vertices beyond zero: it consumes the top q
    differences, the lows [0, q//2] and the top highs. The other arm then
    lives on a contiguous label band of its own size r = n-1-q, entered
    through a bridge edge of difference exactly r, which pins its endpoint
    label; that band problem is the complemented low-endpoint construction.
    """
    for q, rev in ((position, False), (n - 1 - position, True)):
        r = n - 1 - q
        if q < 1 or r < 1:
            continue
        a = q // 2 + 1  # lows consumed by the arm, including the zero
        if a > (r + 1) // 2:
            continue
        try:
            sub = _comp_seq(_alpha_low_end(r, a - 1))
        except InfeasibleError:
            continue
        seq = [0] * n
        zz = _zigzag_seq(n)
        for k in range(q + 1):
            seq[q - k] = zz[k]
        for i, x in enumerate(sub):
            seq[q + 1 + i] = x + a
        return seq[::-1] if rev else seq
    return None


def alpha_path_end_label(
    n: int,
    end_label: int,
    required_index: Optional[int] = None,
    budget: int = DEFAULT_NODE_BUDGET,
    cache: Optional[PathCache] = None,
) -> AlphaLabeling:
    """An alpha-labeling of P_n whose first endpoint carries `end_label`.

    When required_index is given the result's index equals it; that pins the
    low-class size, hence which class the endpoint may sit in. The
    (n = 4s+1, end_label in {s, 3s}) pairs are provably infeasible; every
    other in-range request is served by the closed-form construction (via
    the complement symmetry when the endpoint is a high label).
    """
    if n < 2:
        raise ValidationError("n must be >= 2")
    if not 0 <= end_label <= n - 1:
        raise ValidationError(f"end_label {end_label} out of range for n={n}")
    if n % 4 == 1:
        s = (n - 1) // 4
        if end_label in (s, 3 * s):
            raise InfeasibleError(
                f"P_{n} (n=4s+1, s={s}) has no alpha-labeling with endpoint label "
                f"{end_label}"
            )
    hi_index = (n + 1) // 2 - 1
    lo_index = n // 2 - 1
    if required_index is not None and required_index not in (hi_index, lo_index):
        raise InfeasibleError(
            f"every alpha-labeling of P_{n} has index {lo_index} or {hi_index}; "
            f"index {required_index} is impossible"
        )
    cache = cache or default_cache()
    key = f"alpha_end:{n}:{end_label}:{required_index}"
    hit = cache.get(key)
    if hit is not None:
        seq, low_flag = hit[:-1], bool(hit[-1])
        return AlphaLabeling(
            path_tree(n), Labeling.from_sequence(seq), _alpha_of_sequence(n, low_flag)
        )
    seq = None
    low_is_even = True
    if end_label <= hi_index and required_index in (None, hi_index):
        # Low endpoint; the low class carries the larger index and sits on
        # the even positions, endpoint included.
        seq = _alpha_low_end(n, end_label)
        low_is_even = True
    elif end_label > lo_index and (n - 1) - end_label <= hi_index and required_index in (
        None,
        lo_index,
    ):
        # High endpoint; complement a low-endpoint labeling, which swaps the
        # classes and turns the index into lo_index.
        seq = _comp_seq(_alpha_low_end(n, (n - 1) - end_label))
        low_is_even = False
    if seq is None:
        raise InfeasibleError(
            f"no alpha-labeling of P_{n} has endpoint label {end_label}"
            + (f" with index {required_index}" if required_index is not None else "")
        )
    cache.put(key, seq + [int(low_is_even)])
    return AlphaLabeling(
        path_tree(n),
        Labeling.from_sequence(seq),
        _alpha_of_sequence(n, low_is_even),
    )


def enumerate_alpha_paths(n: int, bound: int = ENUMERATION_BOUND) -> Iterator[AlphaLabeling]:
    """Every alpha-labeling of P_n, in lexicographic order of the label sequence.

    Exhaustive oracle support; refuses n above the configured bound.
    """
    if n > bound:
        raise ResourceBudgetError(f"enumeration limited to n <= {bound}, got {n}")
    if n < 1:
        raise ValidationError("n must be >= 1")
    t = path_tree(n)
    if n == 1:
        yield AlphaLabeling(t, Labeling({0: 0}), 0)
        return
    found: list[tuple[tuple[int, ...], int]] = []
    for low_is_even in (True, False):
        alpha = _alpha_of_sequence(n, low_is_even)
        for seq in _enumerate_alpha_sequences(n, low_is_even):
            found.append((seq, alpha))
    found.sort()
    for seq, alpha in found:
        yield AlphaLabeling(t, Labeling.from_sequence(list(seq)), alpha)
