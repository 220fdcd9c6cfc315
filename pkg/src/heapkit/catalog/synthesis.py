"""
Synthesis of full heaps over an affine diagram.

A periodic full heap is the heap of a bi-infinite word ... w w w ... where w has
character delta. The search enumerates words w that are lexicographically least in
their commutation class and satisfy the interval condition of full heaps on the cyclic
word: between consecutive occurrences of p the neighbours of p contribute
sum a[p][q] = -2. Survivors are checked with verify_axioms and deduplicated by their
canonical word.

Search prefixes are queued in a deque and handed to a thread pool.
"""

from __future__ import annotations

import threading
import time
from collections import deque
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from heapkit.cartan.matrix import DynkinDiagram, GeneralizedCartanMatrix
from heapkit.cartan.roots import null_root
from heapkit.config import SynthesisConfig
from heapkit.core.errors import InvalidCut, SearchBudgetExceeded
from heapkit.core.logging_config import get_logger
from heapkit.heap.isomorphism import canonical_word
from heapkit.heap.periodic import PeriodicHeap, verify_axioms

log = get_logger(__name__)


@dataclass(frozen=True)
class _Prefix:
    """Search state after a prefix of the period word."""

    word: tuple[int, ...]
    remaining: tuple[int, ...]
    seen: tuple[bool, ...]
    before_first: tuple[int, ...]  # neighbour sum before the first p
    running: tuple[int, ...]  # neighbour sum since the last p


@dataclass
class SynthesisStats:
    diagram: str
    nodes: int = 0
    candidates: int = 0
    classes: int = 0
    complete: bool = True
    time_ms: int = 0
    words: list[tuple[int, ...]] = field(default_factory=list)

    def to_dict(self) -> dict[str, object]:
        return {
            "diagram": self.diagram,
            "nodes": self.nodes,
            "candidates": self.candidates,
            "classes": self.classes,
            "complete": self.complete,
            "time_ms": self.time_ms,
            "words": [list(w) for w in self.words],
        }


def _start(delta: Sequence[int]) -> _Prefix:
    n = len(delta)
    return _Prefix((), tuple(delta), (False,) * n, (0,) * n, (0,) * n)


def _admissible(a: GeneralizedCartanMatrix, state: _Prefix, q: int) -> bool:
    if state.remaining[q] == 0:
        return False
    for r in reversed(state.word):
        if a.related(r, q):
            break
        if r > q:
            return False
    if state.seen[q] and state.running[q] != -2:
        return False
    for p in a.neighbors[q]:
        total = state.running[p] if state.seen[p] else state.before_first[p]
        if total + a[p, q] < -2:
            return False
    return True


def _extend(a: GeneralizedCartanMatrix, state: _Prefix, q: int) -> _Prefix:
    running = list(state.running)
    before = list(state.before_first)
    for p in a.neighbors[q]:
        if state.seen[p]:
            running[p] += a[p, q]
        else:
            before[p] += a[p, q]
    seen = list(state.seen)
    running[q] = 0
    seen[q] = True
    remaining = list(state.remaining)
    remaining[q] -= 1
    return _Prefix(
        state.word + (q,), tuple(remaining), tuple(seen), tuple(before), tuple(running)
    )


def _closes(state: _Prefix) -> bool:
    """The cyclic interval condition across the end of the word."""
    return all(r + b == -2 for r, b in zip(state.running, state.before_first, strict=True))


class FullHeapSynthesizer:
    """Threaded search for full heaps over one affine diagram."""

    def __init__(self, diagram: DynkinDiagram, config: SynthesisConfig | None = None):
        self.diagram = diagram
        self.config = config or SynthesisConfig()
        self.cartan = diagram.cartan
        self.delta = null_root(self.cartan)

        self._lock = threading.Lock()
        self._results: dict[tuple[int, ...], PeriodicHeap] = {}
        self._results_lock = threading.Lock()
        self._work_queue: deque[_Prefix] = deque()
        self._work_lock = threading.Lock()
        self._stop = threading.Event()
        self.stats = SynthesisStats(diagram.name)
        self.max_solutions: int | None = None

    # ------------------------------------------------------------------
    # Search
    # ------------------------------------------------------------------

    def _seed(self) -> list[_Prefix]:
        """All admissible prefixes of length prefix_depth (or shorter complete words)."""
        level = [_start(self.delta.coeffs)]
        for _ in range(self.config.prefix_depth):
            nxt = []
            for state in level:
                if not any(state.remaining):
                    nxt.append(state)
                    continue
                nxt.extend(
                    _extend(self.cartan, state, q)
                    for q in range(self.cartan.n)
                    if _admissible(self.cartan, state, q)
                )
            level = nxt
        return level

    def _count_node(self) -> bool:
        with self._lock:
            self.stats.nodes += 1
            if self.stats.nodes > self.config.node_budget:
                self.stats.complete = False
                self._stop.set()
        return not self._stop.is_set()

    def _accept(self, word: tuple[int, ...]) -> None:
        with self._lock:
            self.stats.candidates += 1
        heap = PeriodicHeap.from_word(self.diagram, word, check_diagram=False)
        if not verify_axioms(heap, k=2).passed:
            return
        try:
            key = canonical_word(heap)
        except InvalidCut as e:
            log.debug(f"Rejected {word}: {e}")
            return
        with self._results_lock:
            if key in self._results:
                return
            if self.max_solutions is not None and len(self._results) >= self.max_solutions:
                return
            self._results[key] = heap
            log.debug(f"New full heap over {self.diagram.name}: {key}")
            if self.max_solutions is not None and len(self._results) >= self.max_solutions:
                self._stop.set()

    def _dfs(self, state: _Prefix) -> None:
        if not self._count_node():
            return
        if not any(state.remaining):
            if _closes(state):
                self._accept(state.word)
            return
        for q in range(self.cartan.n):
            if self._stop.is_set():
                return
            if _admissible(self.cartan, state, q):
                self._dfs(_extend(self.cartan, state, q))

    def _worker(self) -> None:
        while not self._stop.is_set():
            with self._work_lock:
                if not self._work_queue:
                    return
                state = self._work_queue.popleft()
            self._dfs(state)

    def run(self, max_solutions: int | None = None) -> list[PeriodicHeap]:
        """All full heaps up to isomorphism; SearchBudgetExceeded carries partial results."""
        self.max_solutions = max_solutions
        start = time.perf_counter()
        self._work_queue.extend(self._seed())
        workers = max(1, self.config.workers)
        log.info(
            f"Synthesizing full heaps over {self.diagram.name}: delta={self.delta}, "
            f"{len(self._work_queue)} prefixes, {workers} workers"
        )
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(self._worker) for _ in range(workers)]
            for future in futures:
                future.result()

        heaps = [self._results[k] for k in sorted(self._results)]
        self.stats.classes = len(heaps)
        self.stats.words = sorted(self._results)
        self.stats.time_ms = int((time.perf_counter() - start) * 1000)
        log.info(
            f"Synthesis over {self.diagram.name}: {len(heaps)} classes, "
            f"{self.stats.nodes} nodes, {self.stats.time_ms} ms"
        )
        if not self.stats.complete:
            raise SearchBudgetExceeded(
                f"Node budget {self.config.node_budget} exhausted on {self.diagram.name}",
                partial=heaps,
            )
        return heaps


def synthesize_full_heaps(
    diagram: DynkinDiagram,
    max_solutions: int | None = None,
    config: SynthesisConfig | None = None,
) -> list[PeriodicHeap]:
    """Full heaps over an affine diagram, one per isomorphism class, by canonical word."""
    return FullHeapSynthesizer(diagram, config).run(max_solutions)
