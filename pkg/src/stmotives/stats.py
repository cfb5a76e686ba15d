"""Moment statistics over L-polynomial streams and nearest-group ranking.

A moment statistic M_n[a_i] is the plain average of a_i(p)^n over the
retained primes.  Classification compares the statistics to the exact
group moments through the scale-normalized squared deviation

    d(G) = sum_n ((M_n[stat] - M_n[G]) / max(1, |M_n[G]|))^2

over a1 moments M_2..M_12 and a2 moments M_1..M_9 (whichever the input
carries).  Groups whose distances agree to within 1% relative are
reported as a tie cluster ordered by catalog position: several catalog
groups have identical moment vectors through this range (C4, C6 and F;
J(C4), J(C6) and F_{ab}; and C3 differs from that first cluster only in
the 12th a1 moment, by half a part in a thousand), so finite-bound
statistics cannot split them and the deterministic catalog order picks
the representative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal

from . import stgroups

A1_NS = (2, 4, 6, 8, 10, 12)
A2_NS = (1, 2, 3, 4, 5, 6, 7, 8, 9)

# printed-precision profiles (decimal places) for the statistics tables
A1_DECIMALS = (3, 3, 3, 2, 1, 0)
A2_DECIMALS = (3, 3, 3, 3, 3, 2, 1)


@dataclass(frozen=True)
class MomentStats:
    bound: int
    count: int
    a1: dict[int, float]  # n -> M_n[a1]
    a2: dict[int, float] | None  # None for c1-only streams

    def moment(self, coeff: str, n: int) -> float:
        d = self.a1 if coeff == "a1" else self.a2
        if d is None or n not in d:
            raise KeyError(f"{coeff} M_{n} not computed")
        return d[n]


def moment_statistics(rows, bound: int, n_max_a1: int = 12, n_max_a2: int = 9) -> MomentStats:
    """Compute the moment statistics of a stream of (p, c1[, c2]) rows.

    Sums are compensated (math.fsum) so results are deterministic and
    independent of accumulation order."""
    rows = list(rows)
    if not rows:
        raise ValueError("empty stream: no retained primes")
    has_a2 = len(rows[0]) >= 3
    a1_ns = [n for n in A1_NS if n <= n_max_a1]
    a2_ns = [n for n in A2_NS if n <= n_max_a2]
    a1_acc: dict[int, list[float]] = {n: [] for n in a1_ns}
    a2_acc: dict[int, list[float]] = {n: [] for n in a2_ns} if has_a2 else {}
    for row in rows:
        p = row[0]
        a1 = row[1] / p**1.5
        for n in a1_ns:
            a1_acc[n].append(a1**n)
        if has_a2:
            a2 = row[2] / p**2
            for n in a2_ns:
                a2_acc[n].append(a2**n)
    count = len(rows)
    a1_m = {n: math.fsum(v) / count for n, v in a1_acc.items()}
    a2_m = {n: math.fsum(v) / count for n, v in a2_acc.items()} if has_a2 else None
    return MomentStats(bound, count, a1_m, a2_m)


@dataclass(frozen=True)
class ClassificationResult:
    ranked: tuple[tuple[str, float], ...]
    metric: str
    clusters: tuple[tuple[str, ...], ...] = field(default=())

    @property
    def top(self) -> str:
        return self.ranked[0][0]


TIE_RELATIVE = 0.01


def _metric_vector(stats: MomentStats, g) -> tuple[list[float], list[int]]:
    """Per-moment scaled deviations and the group's raw moment vector on
    the same moment set (the latter feeds the inter-group separation)."""
    devs = []
    raw = []
    for n in A1_NS:
        if n in stats.a1:
            m = stgroups.moment(g, "a1", n)
            devs.append((stats.a1[n] - m) / max(1.0, abs(m)))
            raw.append(m)
    if stats.a2 is not None:
        for n in A2_NS:
            if n in stats.a2:
                m = stgroups.moment(g, "a2", n)
                devs.append((stats.a2[n] - m) / max(1.0, abs(m)))
                raw.append(m)
    return devs, raw


def classify(stats: MomentStats, groups=None) -> ClassificationResult:
    """Rank candidate groups by moment distance, with tie clusters.

    Two candidates land in one cluster when their distance gap is below
    the classifier's resolution: within TIE_RELATIVE of each other, or
    (for an imperfect best fit) below 2*sqrt(d)*separation, the first-order
    distance jitter of two model vectors separated by `separation` under
    a misfit of size sqrt(d).  An exact fit (d = 0) is never absorbed by
    the jitter radius, so exact group moments classify to that group (up
    to the catalog pairs with strictly identical metric vectors).  Inside
    a cluster the catalog order picks the representative."""
    if groups is None:
        groups = stgroups.catalog()
    scored = []
    vectors = {}
    for idx, g in enumerate(groups):
        devs, raw = _metric_vector(stats, g)
        vectors[g.name] = raw
        d = math.fsum(x * x for x in devs)
        scored.append((d, idx, g.name))
    scored.sort(key=lambda t: (t[0], t[1]))
    clusters: list[list[tuple[float, int, str]]] = []
    for item in scored:
        if clusters:
            head = clusters[-1][0]
            gap = item[0] - head[0]
            tol = TIE_RELATIVE * max(head[0], item[0])
            if head[0] > 0.0:
                sep2 = math.fsum(
                    ((a - b) / max(1.0, abs(a))) ** 2
                    for a, b in zip(vectors[head[2]], vectors[item[2]])
                )
                # near-degenerate candidates (model separation well inside
                # the misfit ball) cannot be resolved: their distance gap
                # is first-order jitter of size 2*sqrt(d)*sep
                if sep2 <= 0.1 * head[0]:
                    tol = max(tol, 2.0 * math.sqrt(head[0] * sep2))
            if gap <= tol:
                clusters[-1].append(item)
                continue
        clusters.append([item])
    ranked = []
    cluster_names = []
    for cl in clusters:
        cl_sorted = sorted(cl, key=lambda t: t[1])  # catalog order inside a tie
        cluster_names.append(tuple(name for _, _, name in cl_sorted))
        ranked.extend((name, d) for d, _, name in cl_sorted)
    metric = ("sum_n ((stat-M_n)/max(1,|M_n|))^2 over a1 M2..M12, a2 M1..M9; "
              "resolution-aware tie clusters")
    return ClassificationResult(tuple(ranked), metric, tuple(cluster_names))


# ---------------------------------------------------------------------------
# table emission


def _fmt(x: float, places: int) -> str:
    q = Decimal(1).scaleb(-places) if places else Decimal(1)
    return str(Decimal(repr(x)).quantize(q, rounding=ROUND_HALF_EVEN))


def stats_row(stats: MomentStats, label: str | None = None) -> list[str]:
    n = stats.bound.bit_length() - 1 if stats.bound & (stats.bound - 1) == 0 else stats.bound
    cells = [label if label is not None else str(n)]
    for nn, places in zip(A1_NS, A1_DECIMALS):
        cells.append(_fmt(stats.a1[nn], places) if nn in stats.a1 else "")
    if stats.a2 is not None:
        for nn, places in zip(A2_NS[:7], A2_DECIMALS):
            cells.append(_fmt(stats.a2[nn], places) if nn in stats.a2 else "")
    else:
        cells.extend([""] * 7)
    return cells


STATS_HEADER = ["n"] + [f"a1.M{n}" for n in A1_NS] + [f"a2.M{n}" for n in A2_NS[:7]]


def emit_table(rows: list[list[str]], header: list[str] | None = None, fmt: str = "tsv") -> str:
    """Render rows as TSV ('#'-prefixed header) or aligned text."""
    header = header or STATS_HEADER
    if fmt == "tsv":
        out = ["#" + "\t".join(header)]
        out += ["\t".join(r) for r in rows]
        return "\n".join(out) + "\n"
    if fmt == "aligned":
        table = [header] + rows
        widths = [max(len(r[i]) for r in table) for i in range(len(header))]
        lines = [" ".join(c.rjust(w) for c, w in zip(r, widths)) for r in table]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt}")


def parse_stats_tsv(text: str) -> MomentStats:
    """Read back a stats TSV produced by emit_table (last data row)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = None
    data = None
    for ln in lines:
        if ln.startswith("#"):
            header = ln[1:].split("\t")
        else:
            data = ln.split("\t")
    if header is None or data is None:
        raise ValueError("no stats rows found")
    a1: dict[int, float] = {}
    a2: dict[int, float] = {}
    for name, cell in zip(header[1:], data[1:]):
        if not cell:
            continue
        coeff, mn = name.split(".M")
        (a1 if coeff == "a1" else a2)[int(mn)] = float(cell)
    n = int(data[0])
    return MomentStats(2**n if n < 64 else n, 0, a1, a2 or None)
