"""Exact computation of P_ℓ(n) by close-by-one branch and bound.

The search walks closed pairs (A, B) of the Galois connection in
close-by-one order: a child adds one candidate set t ≥ y to A, shrinks B
to B ∩ N(t), and closes A again. The child is kept only when closing did
not add any set below t that A lacked (the canonicity test), so every
closed pair is reached exactly once.

Every nonempty family has a smallest member, which after relabeling is
[s]. The search therefore runs one root branch per s, seeded with the
closure of {[s]} and restricted to sets of size at least s; any closure
that picks up a smaller set belongs to another branch and is skipped with
its whole subtree. Root branches are independent and go to worker
processes that share one monotone incumbent.

Pruning is strict (bound < incumbent), so all optimal pairs of every
branch are visited regardless of scheduling. The reported witness is the
optimal pair with the least ``.fam`` encoding.
"""

import logging
import multiprocessing
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from typing import (
    Any,
    Dict,
    Iterable,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Set,
    Tuple,
    Union,
)

from ..bounds.products import construction_lower_bound
from ..config.settings import Settings, get_settings
from ..exceptions import ParameterError
from ..io.fam_format import encode_pair
from ..models.families import CrossPair
from ..models.search import SearchConfig, SearchReport
from ..spectra.echelon import integer_rank
from ..utils.counters import SearchCounters
from ..utils.logging_setup import setup_logging
from ..utils.run_context import get_run_id, set_branch, set_run_id
from .galois import (
    UniverseMask,
    family_from_universe,
    full_universe,
    iter_bits,
    polar,
    relation_masks,
)

logger = logging.getLogger(__name__)

PairMasks = Tuple[UniverseMask, UniverseMask]


class _BranchTask(NamedTuple):
    n: int
    ell: int
    root_size: int
    prune_product: bool
    prune_dimension: bool
    seed: int
    sync_interval: int


class _BranchResult(NamedTuple):
    root_size: int
    best_value: int
    pairs: Tuple[PairMasks, ...]
    counters: SearchCounters


class _LocalIncumbent:
    """Incumbent for in-process runs."""

    def __init__(self, value: int) -> None:
        self.value = value

    def read(self) -> int:
        return self.value

    def offer(self, value: int) -> None:
        if value > self.value:
            self.value = value


class _SharedIncumbent:
    """Incumbent held in shared memory; only ever increases."""

    def __init__(self, shared: Any) -> None:
        self._shared = shared

    def read(self) -> int:
        return int(self._shared.value)

    def offer(self, value: int) -> None:
        with self._shared.get_lock():
            if value > self._shared.value:
                self._shared.value = value


Incumbent = Union[_LocalIncumbent, _SharedIncumbent]

_worker_incumbent: Optional[_SharedIncumbent] = None


def _init_worker(shared: object, log_level: str, run_id: Optional[str]) -> None:
    """Process-pool initializer: logging, run id and the incumbent."""
    global _worker_incumbent
    setup_logging(log_level, force=True)
    set_run_id(run_id)
    _worker_incumbent = _SharedIncumbent(shared)


def _run_branch_in_worker(task: _BranchTask) -> _BranchResult:
    assert _worker_incumbent is not None
    return _BranchSearch(task, _worker_incumbent).run()


def _size_at_least(n: int, s: int) -> UniverseMask:
    out = 0
    for t in range(1 << n):
        if t.bit_count() >= s:
            out |= 1 << t
    return out


class _BranchSearch:
    """Depth-first close-by-one search below the root [s]."""

    def __init__(self, task: _BranchTask, incumbent: Incumbent) -> None:
        self.task = task
        self.n = task.n
        self.incumbent = incumbent
        self.neighbors = relation_masks(task.n, task.ell)
        self.candidates = _size_at_least(task.n, task.root_size)
        self.too_small = full_universe(task.n) & ~self.candidates
        self.counters = SearchCounters()
        self.best_value = 0
        self.best: Set[PairMasks] = set()
        self.shared_value = incumbent.read()
        self._since_sync = 0
        self._k_cache: Dict[UniverseMask, int] = {}
        self._h_cache: Dict[UniverseMask, int] = {}

    def run(self) -> _BranchResult:
        s = self.task.root_size
        set_branch(f"root-{s}")
        logger.info("Starting root branch [%d]", s)
        root = (1 << s) - 1
        b0 = self.neighbors[root]
        if not b0:
            self.counters.record_prune("root")
        else:
            a0 = polar(b0, self.neighbors, self.n)
            if a0 & self.too_small:
                self.counters.record_prune("root")
            else:
                self._process(a0, b0, 0)
        logger.info(
            "Finished root branch [%d]: best %d after %d nodes",
            s,
            self.best_value,
            self.counters.nodes_visited,
        )
        set_branch(None)
        return _BranchResult(
            root_size=s,
            best_value=self.best_value,
            pairs=tuple(sorted(self.best)),
            counters=self.counters,
        )

    def _threshold(self) -> int:
        return max(self.task.seed, self.best_value, self.shared_value)

    def _tick(self) -> None:
        self._since_sync += 1
        if self._since_sync >= self.task.sync_interval:
            self._since_sync = 0
            self.shared_value = self.incumbent.read()

    def _offer(self, a: UniverseMask, b: UniverseMask, product: int) -> None:
        if product < self.best_value or product < self.task.seed:
            return
        if product > self.best_value:
            self.best_value = product
            self.best.clear()
            self.counters.record_incumbent(product)
            self.incumbent.offer(product)
        self.best.add((a, b))

    def _a_rank(self, a: UniverseMask) -> int:
        cached = self._k_cache.get(a)
        if cached is None:
            cached = integer_rank(
                [[(m >> j) & 1 for j in range(self.n)] for m in iter_bits(a)]
            )
            self._k_cache[a] = cached
        return cached

    def _b_rank(self, b: UniverseMask) -> int:
        cached = self._h_cache.get(b)
        if cached is None:
            members = list(iter_bits(b))
            base = members[0]
            rows = [
                [((m >> j) & 1) - ((base >> j) & 1) for j in range(self.n)]
                for m in members[1:]
            ]
            cached = integer_rank(rows)
            self._h_cache[b] = cached
        return cached

    def _dimension_bound(
        self, a: UniverseMask, b: UniverseMask, grow: int, max_degree: int
    ) -> int:
        """Bound descendants through k(E) + h(B') ≤ n.

        k can only grow and h only shrink along a branch, so every
        descendant has h'' ≤ min(h(B), n − k(A)) with |E| ≤ 2^{n−h''}
        and |B'| ≤ 2^{h''}.
        """
        k = self._a_rank(a)
        h = self._b_rank(b)
        return max(
            min(grow, 2 ** (self.n - h2)) * min(max_degree, 2**h2)
            for h2 in range(0, min(h, self.n - k) + 1)
        )

    def _process(self, a: UniverseMask, b: UniverseMask, y: int) -> None:
        self.counters.record_node()
        self._tick()
        size_a = a.bit_count()
        self._offer(a, b, size_a * b.bit_count())

        open_sets = self.candidates & ~a & ~((1 << y) - 1)
        degrees = []
        for t in iter_bits(open_sets):
            d = (b & self.neighbors[t]).bit_count()
            if d:
                degrees.append((t, d))
        if not degrees:
            return

        suffix: List[int] = []
        descending: List[int] = []
        if self.task.prune_product:
            descending = sorted((d for _, d in degrees), reverse=True)
            suffix = [0] * (len(descending) + 1)
            for i in range(len(descending) - 1, -1, -1):
                suffix[i] = max(
                    (size_a + i + 1) * descending[i], suffix[i + 1]
                )
            if suffix[0] < self._threshold():
                self.counters.record_prune("product")
                return
        if self.task.prune_dimension:
            max_degree = max(d for _, d in degrees)
            bound = self._dimension_bound(
                a, b, size_a + len(degrees), max_degree
            )
            if bound < self._threshold():
                self.counters.record_prune("dimension")
                return

        negated = [-d for d in descending]
        for t, d in degrees:
            if self.task.prune_product:
                at_least = bisect_right(negated, -d)
                child_bound = max((size_a + at_least) * d, suffix[at_least])
                if child_bound < self._threshold():
                    self.counters.record_prune("product")
                    continue
            child_b = b & self.neighbors[t]
            child_a = polar(child_b, self.neighbors, self.n)
            below = (1 << t) - 1
            if (child_a ^ a) & below:
                self.counters.record_prune("canonicity")
                continue
            if child_a & self.too_small:
                self.counters.record_prune("root")
                continue
            self._process(child_a, child_b, t + 1)


def _pair_from_masks(n: int, ell: int, masks: PairMasks) -> CrossPair:
    return CrossPair.build(
        family_from_universe(n, masks[0]),
        family_from_universe(n, masks[1]),
        ell,
        verified=True,
    )


def _check_search_params(n: int, ell: int, settings: Settings) -> None:
    if n < 1:
        raise ParameterError("n must be positive", "n", n)
    if n > settings.hard_cap:
        raise ParameterError(
            f"n={n} exceeds the search cap {settings.hard_cap} "
            "(raise CROSSINT_HARD_CAP to go further)",
            "n",
            n,
        )
    if not 0 <= ell <= n:
        raise ParameterError(f"ell must lie in [0, {n}]", "ell", ell)


def _run_tasks(
    tasks: List[_BranchTask], workers: int, seed: int
) -> List[_BranchResult]:
    if workers == 1 or len(tasks) == 1:
        incumbent = _LocalIncumbent(seed)
        return [_BranchSearch(task, incumbent).run() for task in tasks]
    ctx = multiprocessing.get_context()
    shared = ctx.Value("q", seed)
    level = logging.getLevelName(logging.getLogger().getEffectiveLevel())
    with ProcessPoolExecutor(
        max_workers=min(workers, len(tasks)),
        mp_context=ctx,
        initializer=_init_worker,
        initargs=(shared, level, get_run_id()),
    ) as pool:
        return list(pool.map(_run_branch_in_worker, tasks))


def max_product(
    n: int,
    ell: int,
    config: Optional[SearchConfig] = None,
    settings: Optional[Settings] = None,
) -> SearchReport:
    """Compute P_ℓ(n) exactly.

    :param n: Ground-set size, 1 ≤ n ≤ hard cap
    :param ell: Target intersection size, 0 ≤ ℓ ≤ n
    :param config: Pruning and worker options
    :param settings: Settings override; read from the environment if None
    :return: The value, witnesses and search counters
    :raises ParameterError: If n or ℓ is out of range
    """
    settings = settings or get_settings()
    config = config or SearchConfig(worker_count=settings.default_workers)
    _check_search_params(n, ell, settings)

    prune_dimension = (
        config.prune_dimension
        if config.prune_dimension is not None
        else n >= settings.dimension_prune_min_n
    )
    seed = construction_lower_bound(n, ell)
    tasks = [
        _BranchTask(
            n=n,
            ell=ell,
            root_size=s,
            prune_product=config.prune_product,
            prune_dimension=prune_dimension,
            seed=seed,
            sync_interval=settings.incumbent_sync_interval,
        )
        for s in range(ell, n + 1)
    ]
    logger.info(
        "Searching P_%d(%d): %d root branches, %d workers, seed %d",
        ell,
        n,
        len(tasks),
        config.worker_count,
        seed,
    )
    totals = SearchCounters()
    results = _run_tasks(tasks, config.worker_count, seed)

    value = max((r.best_value for r in results), default=0)
    masks: Set[PairMasks] = set()
    for r in results:
        totals.merge(r.counters)
        if r.best_value == value:
            masks.update(r.pairs)
    witnesses = sorted(
        (_pair_from_masks(n, ell, m) for m in masks), key=encode_pair
    )
    if not config.enumerate_all_optima:
        witnesses = witnesses[:1]
    logger.info(
        "P_%d(%d) = %d (%d nodes, %d pruned)",
        ell,
        n,
        value,
        totals.nodes_visited,
        totals.nodes_pruned,
    )
    return SearchReport(
        n=n,
        ell=ell,
        value=value,
        witnesses=tuple(witnesses),
        nodes_visited=totals.nodes_visited,
        nodes_pruned=totals.nodes_pruned,
        elapsed_ms=totals.elapsed_ms(),
        counters=totals.get_metrics(),
    )


def enumerate_closed_pairs(n: int, ell: int) -> Iterator[CrossPair]:
    """Yield every closed pair with both sides nonempty, once each.

    Plain close-by-one over the whole universe, without roots or bounds.
    """
    neighbors = relation_masks(n, ell)
    universe = full_universe(n)

    def walk(a: UniverseMask, b: UniverseMask, y: int) -> Iterator[PairMasks]:
        if a and b:
            yield a, b
        for t in iter_bits(universe & ~a & ~((1 << y) - 1)):
            child_b = b & neighbors[t]
            child_a = polar(child_b, neighbors, n)
            if (child_a ^ a) & ((1 << t) - 1):
                continue
            yield from walk(child_a, child_b, t + 1)

    start_a = polar(universe, neighbors, n)
    for masks in walk(start_a, universe, 0):
        yield _pair_from_masks(n, ell, masks)


def naive_max_product(
    n: int, ell: int, settings: Optional[Settings] = None
) -> int:
    """Brute-force P_ℓ(n): close every subfamily of 2^[n].

    :raises ParameterError: Above ``naive_oracle_max_n``
    """
    settings = settings or get_settings()
    if not 1 <= n <= settings.naive_oracle_max_n:
        raise ParameterError(
            f"The brute-force oracle runs for n <= "
            f"{settings.naive_oracle_max_n}",
            "n",
            n,
        )
    neighbors = relation_masks(n, ell)
    best = 0
    for family in range(1, 1 << (1 << n)):
        b = polar(family, neighbors, n)
        if not b:
            continue
        a = polar(b, neighbors, n)
        best = max(best, a.bit_count() * b.bit_count())
    return best


def value_profile(
    n: int,
    ells: Iterable[int],
    config: Optional[SearchConfig] = None,
    settings: Optional[Settings] = None,
) -> Dict[int, int]:
    """P_ℓ(n) for several ℓ at a fixed n."""
    return {
        ell: max_product(n, ell, config, settings).value for ell in ells
    }
