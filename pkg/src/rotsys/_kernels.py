"""Flat-array scan kernels for exhaustive rotation-system enumeration.

Per rotation system the kernel traces all faces, derives the genus, and
computes two independent bits: polyhedrality (simple faces plus the
pairwise single-vertex-or-edge rule) and dual simplicity (no edge borders
one face twice, no two edges border the same face pair).  Everything runs
on preallocated int64 arrays; vertex/dart marks use monotone stamps so no
array is ever cleared between systems.

Dart layout: edge k (u < v) owns darts 2k (u -> v) and 2k + 1 (v -> u),
so the inverse of dart d is d ^ 1.  Rotation systems are indexed in mixed
radix over the per-vertex counts (deg - 1)!: vertex 0 is the most
significant digit, and each digit selects a lexicographic permutation of
the vertex's neighbors after the smallest one, which stays fixed.
"""

import numpy as np

from ._accel import njit
from .errors import InvariantViolation, TooLarge
from .graphs import SimpleGraph

_MAX_DEGREE = 20  # (d-1)! overflows any practical budget long before this


@njit(cache=True)
def _rebuild_vertex(v, k, deg, off, inc_dart, factorials, rot, nxt, scratch):
    # Writes the k-th rotation of vertex v (lexicographic unranking of the
    # neighbors after the fixed first one) and refreshes the successor map.
    d = deg[v]
    o = off[v]
    rot[o] = inc_dart[o]
    r = d - 1
    for t in range(r):
        scratch[t] = o + 1 + t
    x = k
    for pos in range(r):
        f = factorials[r - 1 - pos]
        q = x // f
        x -= q * f
        rot[o + 1 + pos] = inc_dart[scratch[q]]
        for s in range(q, r - 1 - pos):
            scratch[s] = scratch[s + 1]
    for t in range(d):
        nxt[rot[o + t]] = rot[o + (t + 1) % d]


@njit(cache=True)
def _rebuild_all(n, digits, deg, off, inc_dart, factorials, rot, nxt, scratch):
    for v in range(n):
        _rebuild_vertex(v, digits[v], deg, off, inc_dart, factorials, rot, nxt, scratch)


@njit(cache=True)
def _scan_range(
    count,
    n,
    m,
    f_cap,
    deg,
    off,
    inc_dart,
    radix,
    factorials,
    digits,
    rot,
    nxt,
    dart_tail,
    visited,
    vstamp,
    face_of,
    pair_vcnt,
    pair_ecnt,
    touched_v,
    touched_e,
    scratch,
    counters,
    genus_out,
    poly_out,
    dual_out,
):
    """Process ``count`` systems starting from the current odometer state.

    Fills genus_out / poly_out / dual_out (length count) and leaves the
    odometer advanced past the last processed system.  A genus of -1
    signals an Euler-formula inconsistency, which callers treat as a bug.
    """
    two_m = 2 * m
    for it in range(count):
        sys_stamp = counters[0] + 1
        counters[0] = sys_stamp

        # trace all faces of dart -> nxt[dart ^ 1]
        f = 0
        nonsimple = False
        for d0 in range(two_m):
            if visited[d0] == sys_stamp:
                continue
            face_stamp = counters[1] + 1
            counters[1] = face_stamp
            length = 0
            dart = d0
            while True:
                visited[dart] = sys_stamp
                face_of[dart] = f
                t = dart_tail[dart]
                if vstamp[t] == face_stamp:
                    nonsimple = True
                vstamp[t] = face_stamp
                length += 1
                dart = nxt[dart ^ 1]
                if dart == d0:
                    break
            if length < 3:
                nonsimple = True
            f += 1

        defect = 2 - (n - m + f)
        if defect < 0 or defect % 2 != 0:
            genus_out[it] = -1
        else:
            genus_out[it] = defect // 2

        # dual simplicity: loops and parallel edges from edge face-pairs
        ne_t = 0
        loops = False
        parallel = False
        for k in range(m):
            a = face_of[2 * k]
            b = face_of[2 * k + 1]
            if a == b:
                loops = True
            else:
                if a > b:
                    a, b = b, a
                idx = a * f_cap + b
                pair_ecnt[idx] += 1
                touched_e[ne_t] = idx
                ne_t += 1
                if pair_ecnt[idx] >= 2:
                    parallel = True
        dual_out[it] = 0 if (loops or parallel) else 1

        # polyhedrality: with all faces simple, any two faces may share at
        # most one vertex unless they also share the edge joining the pair
        if nonsimple:
            poly_out[it] = 0
        else:
            nv_t = 0
            for v in range(n):
                lo = off[v]
                hi = lo + deg[v]
                for i in range(lo, hi):
                    fa = face_of[inc_dart[i]]
                    for j in range(i + 1, hi):
                        fb = face_of[inc_dart[j]]
                        a, b = (fa, fb) if fa < fb else (fb, fa)
                        idx = a * f_cap + b
                        pair_vcnt[idx] += 1
                        touched_v[nv_t] = idx
                        nv_t += 1
            poly = 1
            for t in range(nv_t):
                idx = touched_v[t]
                c = pair_vcnt[idx]
                if c >= 3 or (c == 2 and pair_ecnt[idx] != 1):
                    poly = 0
                    break
            poly_out[it] = poly
            for t in range(nv_t):
                pair_vcnt[touched_v[t]] = 0
        for t in range(ne_t):
            pair_ecnt[touched_e[t]] = 0

        # advance the odometer (vertex n-1 varies fastest)
        v = n - 1
        while v >= 0:
            digits[v] += 1
            if digits[v] < radix[v]:
                _rebuild_vertex(v, digits[v], deg, off, inc_dart, factorials, rot, nxt, scratch)
                break
            digits[v] = 0
            _rebuild_vertex(v, 0, deg, off, inc_dart, factorials, rot, nxt, scratch)
            v -= 1


def _factorials(limit: int) -> np.ndarray:
    out = np.ones(limit + 1, dtype=np.int64)
    for i in range(1, limit + 1):
        out[i] = out[i - 1] * i
    return out


class FlatScanner:
    """Drives the scan kernel over the rotation systems of one graph.

    The scan is chunked: ``scan(start, stop)`` yields per-system genus,
    polyhedral and dual-simplicity arrays for consecutive index windows.
    Results are independent of the chunking.
    """

    def __init__(self, graph: SimpleGraph):
        if not graph.is_connected():
            raise InvariantViolation("scanner requires a connected graph")
        if max(graph.degrees) >= _MAX_DEGREE:
            raise TooLarge(
                f"degree {max(graph.degrees)} gives an unenumerable rotation space"
            )
        self.graph = graph
        n, m = graph.n, graph.m
        self.n = n
        self.m = m
        self.deg = np.array(graph.degrees, dtype=np.int64)
        self.off = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(self.deg, out=self.off[1:])
        self.dart_tail = np.empty(2 * m, dtype=np.int64)
        self.inc_dart = np.empty(2 * m, dtype=np.int64)
        edge_index = {}
        for k, (u, v) in enumerate(graph.edges):
            edge_index[(u, v)] = k
            self.dart_tail[2 * k] = u
            self.dart_tail[2 * k + 1] = v
        fill = self.off[:-1].copy()
        for v in range(n):
            for u in graph.adj[v]:  # ascending, so inc_dart slots are sorted by head
                k = edge_index[(v, u)] if v < u else edge_index[(u, v)]
                dart = 2 * k if v < u else 2 * k + 1
                self.inc_dart[fill[v]] = dart
                fill[v] += 1
        self.factorials = _factorials(_MAX_DEGREE)
        self.radix = np.array(
            [int(self.factorials[d - 1]) if d > 1 else 1 for d in graph.degrees],
            dtype=np.int64,
        )
        self.total = 1
        for r in self.radix:
            self.total *= int(r)
        self.f_cap = max(1, m - n + 2)

        self.digits = np.zeros(n, dtype=np.int64)
        self.rot = np.empty(2 * m, dtype=np.int64)
        self.nxt = np.empty(2 * m, dtype=np.int64)
        self.visited = np.full(2 * m, -1, dtype=np.int64)
        self.vstamp = np.full(n, -1, dtype=np.int64)
        self.face_of = np.empty(2 * m, dtype=np.int64)
        self.pair_vcnt = np.zeros(self.f_cap * self.f_cap, dtype=np.int64)
        self.pair_ecnt = np.zeros(self.f_cap * self.f_cap, dtype=np.int64)
        max_pairs = int(sum(d * (d - 1) // 2 for d in graph.degrees))
        self.touched_v = np.empty(max(1, max_pairs), dtype=np.int64)
        self.touched_e = np.empty(max(1, m), dtype=np.int64)
        self.scratch = np.empty(_MAX_DEGREE, dtype=np.int64)
        self.counters = np.zeros(2, dtype=np.int64)
        self._position = None

    def digits_of(self, index: int) -> list:
        digits = [0] * self.n
        for v in range(self.n - 1, -1, -1):
            index, digits[v] = divmod(index, int(self.radix[v]))
        return digits

    def _seek(self, index: int) -> None:
        self.digits[:] = self.digits_of(index)
        _rebuild_all(
            self.n, self.digits, self.deg, self.off, self.inc_dart,
            self.factorials, self.rot, self.nxt, self.scratch,
        )
        self._position = index

    def scan(self, start: int, stop: int, chunk: int = 1 << 15):
        """Yield (base_index, genus, poly, dual) arrays for [start, stop)."""
        if not 0 <= start <= stop <= self.total:
            raise ValueError(f"bad scan range [{start}, {stop}) of {self.total}")
        if self._position != start:
            self._seek(start)
        pos = start
        while pos < stop:
            count = min(chunk, stop - pos)
            genus_out = np.empty(count, dtype=np.int64)
            poly_out = np.empty(count, dtype=np.uint8)
            dual_out = np.empty(count, dtype=np.uint8)
            _scan_range(
                count, self.n, self.m, self.f_cap,
                self.deg, self.off, self.inc_dart, self.radix, self.factorials,
                self.digits, self.rot, self.nxt, self.dart_tail,
                self.visited, self.vstamp, self.face_of,
                self.pair_vcnt, self.pair_ecnt, self.touched_v, self.touched_e,
                self.scratch, self.counters,
                genus_out, poly_out, dual_out,
            )
            if (genus_out < 0).any():
                raise InvariantViolation("Euler defect negative or odd during scan")
            yield pos, genus_out, poly_out, dual_out
            pos += count
            self._position = pos
