"""Substitutions on small alphabets, the Thue-Morse word and desubstitution.

Words are Python strings of one-character letters.  The level-indexed
alphabets {D_j, E_j} are written as plain ``"D"``/``"E"``; the level is
passed alongside.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import Diagram, DiagramError, vertex_coding


@dataclass(frozen=True)
class Morphism:
    images: tuple  # ((letter, image), ...)

    @classmethod
    def of(cls, mapping: dict) -> "Morphism":
        for a, img in mapping.items():
            if not img:
                raise ValueError(f"empty image for {a!r}")
        return cls(tuple(sorted(mapping.items())))

    @property
    def table(self) -> dict:
        return dict(self.images)

    @property
    def domain(self) -> tuple:
        return tuple(a for a, _ in self.images)

    def __call__(self, w: str) -> str:
        return apply(self, w)

    def compose(self, inner: "Morphism") -> "Morphism":
        """``self`` after ``inner``: a -> self(inner(a))."""
        return Morphism.of({a: apply(self, img) for a, img in inner.images})


def apply(m: Morphism, w: str) -> str:
    table = m.table
    try:
        return "".join(table[a] for a in w)
    except KeyError as exc:
        raise ValueError(f"letter {exc.args[0]!r} outside the morphism's domain") from None


def tau(j: int) -> Morphism:
    """E -> E E D E^(2j-5), D -> E D E^(2j-4); both images have length 2j-2."""
    if j < 3:
        raise ValueError("tau(j) needs j >= 3")
    return Morphism.of({"E": "EED" + "E" * (2 * j - 5), "D": "ED" + "E" * (2 * j - 4)})


def ptm_word(length: int) -> str:
    """Prefix of the fixed point of a -> ab, b -> ba."""
    return "".join("ab"[bin(i).count("1") & 1] for i in range(length))


# ---------------------------------------------------------------------------
# GJ-specific reductions


def _col(d: Diagram, level: int, idx: int) -> int:
    return int(d.levels[level][idx].name.rsplit("_", 1)[1].rstrip("'"))


def phi_factor(d: Diagram, level: int, word) -> str:
    """Map level-``level`` vertex indices to D (column 3) or E (all others)."""
    return "".join("D" if _col(d, level, i) == 3 else "E" for i in word)


def phi_coding(d: Diagram, w, j: int) -> str:
    """phi applied to the coding of vertex ``w`` by level-j vertices."""
    return phi_factor(d, j, vertex_coding(d, w, j))


def _tilde_relabel(d: Diagram, level: int, word) -> str:
    out = []
    for i in word:
        c = _col(d, level, i)
        out.append("a" if c == 2 else "b" if c == 3 else "0")
    return "".join(out)


def tilde_reduction(d: Diagram, n: int) -> str:
    """Expand C_{n-1}(v(n,1)) down to level 2, keeping only columns 2 and 3.

    At each level j the kept symbols a = v(j,2), b = v(j,3) are replaced by
    their codings at level j-1 (then relabeled) and every 0 by 2j-2 zeros.
    Returns the word over {a, b, 0} reached at level 2.
    """
    if not 3 <= n <= d.depth:
        raise DiagramError(f"n={n} must lie in 3..{d.depth}")
    top = d.index(n, f"v{n}_1")
    cur = _tilde_relabel(d, n - 1, vertex_coding(d, (n, top), n - 1))
    for j in range(n - 1, 2, -1):
        a = _tilde_relabel(d, j - 1, vertex_coding(d, (j, d.index(j, f"v{j}_2")), j - 1))
        b = _tilde_relabel(d, j - 1, vertex_coding(d, (j, d.index(j, f"v{j}_3")), j - 1))
        zero = "0" * (2 * j - 2)
        cur = "".join(a if c == "a" else b if c == "b" else zero for c in cur)
    return cur


def erase_zeros(w: str) -> str:
    return w.replace("0", "")


# ---------------------------------------------------------------------------
# Periodicity


def smallest_period(w) -> int:
    """Smallest p >= 1 with w[i] == w[i+p] for all valid i (len(w) if none smaller)."""
    n = len(w)
    if n == 0:
        return 0
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    return n - fail[-1]


@dataclass(frozen=True)
class PowerForm:
    P: object
    k: int
    Q: object


def power_form(w):
    """w = P^k Q with k >= 2, |P| minimal and Q a proper prefix of P; None if impossible."""
    p = smallest_period(w)
    if p == 0 or len(w) // p < 2:
        return None
    k = len(w) // p
    return PowerForm(w[:p], k, w[k * p:])


# ---------------------------------------------------------------------------
# Desubstitution


@dataclass(frozen=True)
class Factorization:
    """Upper letters whose images lie entirely inside the word, with start positions."""

    letters: tuple  # ((letter, start), ...)
    offset: int  # position of the word's first letter inside its first image
    left: tuple  # possible letters of a partially covered first image
    right: tuple  # possible letters of a partially covered last image

    @property
    def word(self) -> str:
        return "".join(a for a, _ in self.letters)


@dataclass(frozen=True)
class Ambiguous:
    count: int


@dataclass(frozen=True)
class NoParse:
    reason: str = ""


def _check_letters(w: str) -> None:
    bad = set(w) - {"D", "E"}
    if bad:
        raise ValueError(f"letters {sorted(bad)} outside {{D, E}}")


def _dd_free_choice(options: list) -> bool:
    """Can one letter be picked from each set with no two adjacent Ds?"""
    can_end = {"D": True, "E": True}
    first = True
    for opts in options:
        nxt = {}
        for a in ("D", "E"):
            if a not in opts:
                nxt[a] = False
            elif first:
                nxt[a] = True
            else:
                nxt[a] = can_end["E"] or (a == "E" and can_end["D"])
        can_end = nxt
        first = False
    return any(can_end.values())


def _parses(w: str, j: int) -> list:
    """All (offset, factorization) parses of w as an infix of tau(j)(u), u free of DD."""
    m = tau(j).table
    L = 2 * j - 2
    out = []
    for off in range(L):
        pos = 0
        options = []
        letters = []
        left = right = ()
        ok = True
        if off:
            seg = w[: L - off]
            left = tuple(a for a in "DE" if m[a][off: off + len(seg)] == seg)
            if not left:
                continue
            options.append(set(left))
            pos = len(seg)
        while ok and pos + L <= len(w):
            seg = w[pos: pos + L]
            hit = [a for a in "DE" if m[a] == seg]
            if not hit:
                ok = False
                break
            letters.append((hit[0], pos))
            options.append({hit[0]})
            pos += L
        if not ok:
            continue
        if pos < len(w):
            seg = w[pos:]
            right = tuple(a for a in "DE" if m[a].startswith(seg))
            if not right:
                continue
            options.append(set(right))
        if not _dd_free_choice(options):
            continue
        out.append(Factorization(tuple(letters), off, left, right))
    return out


def desubstitute(w: str, j: int):
    """Unique way to read ``w`` as an infix of tau(j)(u) for a DD-free u.

    Returns a :class:`Factorization` of the images that lie fully inside
    ``w``, :class:`Ambiguous` with the number of distinct parses, or
    :class:`NoParse`.
    """
    _check_letters(w)
    if j < 3:
        raise ValueError("j must be >= 3")
    parses = _parses(w, j)
    if not parses:
        return NoParse(f"no alignment of tau({j}) images fits the word")
    if len(parses) == 1:
        return parses[0]
    return Ambiguous(len(parses))


def count_factorizations(w: str, j: int) -> int:
    """Brute-force count of distinct parses by expanding every short DD-free upper word."""
    _check_letters(w)
    m = tau(j).table
    L = 2 * j - 2
    need = -(-(len(w) + L - 1) // L)
    seen = set()
    for u in product("DE", repeat=need):
        if any(a == b == "D" for a, b in zip(u, u[1:])):
            continue
        image = "".join(m[a] for a in u)
        for off in range(L):
            if off + len(w) > len(image) or image[off: off + len(w)] != w:
                continue
            inner = []
            for i, a in enumerate(u):
                s, e = i * L - off, (i + 1) * L - off
                if s >= 0 and e <= len(w):
                    inner.append((a, s))
            seen.add((off, tuple(inner)))
    return len(seen)


def anchors(w: str, j: int) -> list:
    """Blocks D E^q D in w whose gap q pins the upper pair (EE, ED or DE).

    For tau(j) the gaps are 2j-3 (EE), 2j-4 (ED) and 2j-2 (DE); returns
    (position of the first D, upper pair, offset of that D inside the
    first image).
    """
    m = tau(j).table
    gaps = {2 * j - 3: "EE", 2 * j - 4: "ED", 2 * j - 2: "DE"}
    ds = [i for i, c in enumerate(w) if c == "D"]
    out = []
    for a, b in zip(ds, ds[1:]):
        q = b - a - 1
        if q in gaps:
            pair = gaps[q]
            out.append((a, pair, m[pair[0]].index("D")))
    return out
