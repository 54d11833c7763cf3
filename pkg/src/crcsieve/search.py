"""Exhaustive ranking of degree-p generator polynomials by score.

Candidates are the 2^(p-1) masks with both the constant and the degree-p
bit set (a factor of x never helps), thinned to one representative per
reciprocal pair since reversed polynomials generate equivalent codes.  The
cheapest filter runs first: any candidate whose order is below the
smallest target length can never be scored, so it is dropped before any
distance work.  Survivors get one profile built to the largest target and
a score per applicable target, feeding fixed-size leaderboards.

The sweep is split into contiguous blocks of candidate masks.  Blocks are
scanned independently (optionally by a pool of worker processes, each
owning a single transform scratch buffer) and merged through a total order
on (score desc, mask asc), so the outcome is identical for any worker
count or scheduling.  Completed blocks are recorded in a checkpoint file
from which an interrupted sweep resumes without rescanning.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing
import os
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator

import numpy as np

from .distance import DistanceEngine
from .gf2poly import Gf2Poly
from .profile import build_profile, score

CHECKPOINT_FORMAT = 1
LONG_RUN_DEGREE = 20  # sweeps this size and up must be requested explicitly


class CheckpointError(Exception):
    """Checkpoint file is unreadable or belongs to a different search."""


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one exhaustive sweep."""

    p: int
    targets: tuple[int, ...]
    top_k: int = 8
    workers: int = 1
    block_size: int = 512  # candidate masks per work unit
    checkpoint_path: str | None = None
    long_run: bool = False

    def validate(self) -> None:
        if not 2 <= self.p <= 24:
            raise ValueError(f"degree {self.p} out of supported range 2..24")
        if not self.targets:
            raise ValueError("at least one target length is required")
        if list(self.targets) != sorted(set(self.targets)):
            raise ValueError("target lengths must be strictly increasing")
        if self.targets[0] < self.p + 1:
            raise ValueError(f"target {self.targets[0]} below minimum length {self.p + 1}")
        if self.top_k < 1:
            raise ValueError("top_k must be at least 1")
        if self.block_size < 1:
            raise ValueError("block_size must be at least 1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.p >= LONG_RUN_DEGREE and not self.long_run:
            raise ValueError(
                f"a full degree-{self.p} sweep takes a very long time; pass long_run=True "
                "(--long-run) to confirm"
            )

    def fingerprint(self) -> str:
        """Hash of the fields that determine the result; guards checkpoint reuse."""
        payload = json.dumps(
            {"p": self.p, "targets": list(self.targets), "top_k": self.top_k,
             "block_size": self.block_size},
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    @property
    def block_count(self) -> int:
        space = 1 << (self.p - 1)
        return (space + self.block_size - 1) // self.block_size


@dataclass(frozen=True)
class ScoredPoly:
    """One leaderboard entry: a canonical representative with its score at one target."""

    g: Gf2Poly
    order: int
    score: int


@dataclass
class Leaderboard:
    """Per-target top-k rankings plus sweep counters."""

    targets: tuple[int, ...]
    top_k: int
    boards: dict[int, list[ScoredPoly]] = field(default_factory=dict)
    scanned: int = 0
    skipped_low_order: int = 0
    complete: bool = False
    skipped_sample: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        for m in self.targets:
            self.boards.setdefault(m, [])

    def merge_rows(self, m: int, rows: list[tuple[int, int, int]]) -> None:
        """Fold (mask, order, score) rows into target m's board; order-independent."""
        board = self.boards[m]
        board.extend(ScoredPoly(Gf2Poly(mask), order, s) for mask, order, s in rows)
        board.sort(key=lambda e: (-e.score, e.g.mask))
        del board[self.top_k:]

    def rows(self) -> list[tuple[str, int, int, int, int]]:
        """Flat (poly_hex, degree, order, M, score) rows in reporting order."""
        out = []
        for m in self.targets:
            for e in self.boards[m]:
                out.append((e.g.to_hex(), e.g.degree, e.order, m, e.score))
        return out


def enumerate_candidates(p: int) -> Iterator[Gf2Poly]:
    """All degree-p generator candidates, one per reciprocal-equivalent pair, ascending."""
    if not 2 <= p <= 24:
        raise ValueError(f"degree {p} out of supported range 2..24")
    base = (1 << p) | 1
    for mid in range(1 << (p - 1)):
        mask = base | (mid << 1)
        if _reverse_mask(mask, p) >= mask:
            yield Gf2Poly(mask)


def _reverse_mask(mask: int, p: int) -> int:
    rev = 0
    for _ in range(p + 1):
        rev = (rev << 1) | (mask & 1)
        mask >>= 1
    return rev


def batch_orders(masks: np.ndarray, p: int) -> np.ndarray:
    """Orders of many degree-p candidates at once, by stepping all residues together."""
    count = masks.size
    orders = np.zeros(count, dtype=np.int64)
    if count == 0:
        return orders
    r = np.ones(count, dtype=np.int64)
    alive = np.ones(count, dtype=bool)
    for m in range(1, 1 << p):
        r <<= 1
        hit = (r >> p) & 1
        r ^= masks * hit
        done = alive & (r == 1)
        if done.any():
            orders[done] = m
            alive &= ~done
            if not alive.any():
                break
    if alive.any():
        bad = Gf2Poly(int(masks[np.nonzero(alive)[0][0]]))
        raise RuntimeError(f"no return to 1 within 2^{p} steps for {bad}")
    return orders


# Per-process state for pool workers: configuration plus one shared scratch
# buffer sized 2^p, reused by every engine the worker creates.
_WORKER: dict = {}


def _init_worker(p: int, targets: tuple[int, ...], top_k: int, block_size: int,
                 collect_skipped: bool) -> None:
    _WORKER.update(
        p=p, targets=targets, top_k=top_k, block_size=block_size,
        collect_skipped=collect_skipped,
        scratch=np.empty(1 << p, dtype=np.int32),
    )


def _scan_block(block_index: int):
    p = _WORKER["p"]
    targets = _WORKER["targets"]
    top_k = _WORKER["top_k"]
    block_size = _WORKER["block_size"]
    space = 1 << (p - 1)
    lo = block_index * block_size
    hi = min(lo + block_size, space)
    base = (1 << p) | 1
    masks = [base | (mid << 1) for mid in range(lo, hi)]
    masks = [m for m in masks if _reverse_mask(m, p) >= m]

    orders = batch_orders(np.asarray(masks, dtype=np.int64), p)
    min_target, max_target = targets[0], targets[-1]
    rows_by_target: dict[int, list[tuple[int, int, int]]] = {m: [] for m in targets}
    skipped = 0
    skipped_masks: list[tuple[int, int]] = []
    for mask, n_c in zip(masks, (int(o) for o in orders)):
        if n_c < min_target:
            skipped += 1
            if _WORKER["collect_skipped"]:
                skipped_masks.append((mask, n_c))
            continue
        g = Gf2Poly(mask)
        engine = DistanceEngine(g, order=n_c, scratch=_WORKER["scratch"])
        profile = build_profile(g, max_target, engine=engine)
        for m in targets:
            s = score(profile, m)
            if s is not None:
                rows_by_target[m].append((mask, n_c, s))
    for m in targets:
        rows_by_target[m].sort(key=lambda row: (-row[2], row[0]))
        del rows_by_target[m][top_k:]
    return block_index, rows_by_target, len(masks), skipped, skipped_masks


def save_checkpoint(path: str, config: SearchConfig, completed: set[int],
                    board: Leaderboard) -> None:
    state = {
        "format": CHECKPOINT_FORMAT,
        "config": {"p": config.p, "targets": list(config.targets),
                   "top_k": config.top_k, "block_size": config.block_size},
        "config_hash": config.fingerprint(),
        "completed_blocks": sorted(completed),
        "scanned": board.scanned,
        "skipped_low_order": board.skipped_low_order,
        "boards": {
            str(m): [[e.g.to_hex(), e.order, e.score] for e in board.boards[m]]
            for m in board.targets
        },
    }
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        json.dump(state, fh)
    os.replace(tmp, path)


def load_checkpoint(path: str, config: SearchConfig) -> tuple[set[int], Leaderboard]:
    try:
        with open(path) as fh:
            state = json.load(fh)
        if state["format"] != CHECKPOINT_FORMAT:
            raise CheckpointError(f"unsupported checkpoint format {state['format']}")
        if state["config_hash"] != config.fingerprint():
            raise CheckpointError(
                f"checkpoint {path} was written by a different search "
                f"(its config: {state['config']})"
            )
        board = Leaderboard(config.targets, config.top_k)
        board.scanned = state["scanned"]
        board.skipped_low_order = state["skipped_low_order"]
        for m in config.targets:
            rows = [(int(h, 16), o, s) for h, o, s in state["boards"][str(m)]]
            board.merge_rows(m, rows)
        return set(state["completed_blocks"]), board
    except CheckpointError:
        raise
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CheckpointError(f"corrupt checkpoint {path}: {exc}") from exc


ProgressFn = Callable[[int, int, int, int], None]


def run_search(
    config: SearchConfig,
    *,
    progress: ProgressFn | None = None,
    block_limit: int | None = None,
    collect_skipped: bool = False,
) -> Leaderboard:
    """Sweep all candidates of degree p and rank them per target length.

    The result is deterministic: independent of worker count, scheduling,
    and of interruption/resume via the checkpoint file.  ``block_limit``
    bounds how many new blocks are processed in this call (the checkpoint
    then holds the partial state), which is also how tests exercise
    interrupted sweeps.
    """
    config.validate()
    completed: set[int] = set()
    board = Leaderboard(config.targets, config.top_k)
    if config.checkpoint_path and os.path.exists(config.checkpoint_path):
        completed, board = load_checkpoint(config.checkpoint_path, config)

    total = config.block_count
    pending = [b for b in range(total) if b not in completed]
    if block_limit is not None:
        pending = pending[:block_limit]

    def absorb(result) -> None:
        block_index, rows_by_target, scanned, skipped, skipped_masks = result
        for m in config.targets:
            board.merge_rows(m, rows_by_target[m])
        board.scanned += scanned
        board.skipped_low_order += skipped
        board.skipped_sample.extend(skipped_masks)
        completed.add(block_index)
        if config.checkpoint_path:
            save_checkpoint(config.checkpoint_path, config, completed, board)
        if progress is not None:
            progress(len(completed), total, board.scanned, board.skipped_low_order)

    init_args = (config.p, config.targets, config.top_k, config.block_size, collect_skipped)
    if config.workers == 1 or len(pending) <= 1:
        _init_worker(*init_args)
        for b in pending:
            absorb(_scan_block(b))
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(config.workers, initializer=_init_worker, initargs=init_args) as pool:
            for result in pool.imap_unordered(_scan_block, pending):
                absorb(result)

    board.complete = len(completed) == total
    board.skipped_sample.sort()
    return board
