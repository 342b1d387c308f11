"""Exhaustive verification sweeps with deterministic, resumable reports.

Every sweep walks a fully enumerated domain (permutations of S_n, ordered
pairs of them, or a box of shift vectors), splits it into chunks whose
boundaries depend only on the domain, and aggregates chunk results in
domain order.  Reports are therefore identical whatever the worker count;
only the wall-time field varies.  Workers are forked processes that
inherit the parent's precomputed polynomial tables, so nothing is pickled
per task beyond small index ranges.

Pair sweeps at n = 7 walk about 25 million pairs and are refused unless
the long_run flag is set; with a cache directory they write a checkpoint
roughly every checkpoint_every pairs and resume from it.
"""

from __future__ import annotations

import json
import math
import multiprocessing
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, NamedTuple, Sequence

from .complement import complement_delta, f_1432, is_schubert, w_star
from .perm import (
    Perm,
    Vec,
    all_perms,
    avoids,
    complement_perm,
    conjugate,
    format_perm,
    format_vec,
    inverse,
    inversion_code,
    lr_vectors,
)
from .poly import leading_exponent, smallest_exponent
from .schubert import ensure_all, schubert, schubert_bjs, schubert_rc

MAX_COUNTEREXAMPLES = 10


class LongRunRequired(ValueError):
    """Raised when an n = 7 pair sweep is requested without long_run."""


@dataclass(frozen=True)
class SweepConfig:
    """Knobs shared by all sweeps."""

    jobs: int = 1
    long_run: bool = False
    cache_dir: Path | None = None
    checkpoint_every: int = 100_000


@dataclass
class VerificationReport:
    claim: str
    n: int
    total: int
    passed: int
    failed: int
    counterexamples: list[str]
    seconds: float

    def to_dict(self, seconds_override: float | None = None) -> dict:
        return {
            "claim": self.claim,
            "n": self.n,
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "counterexamples": list(self.counterexamples),
            "seconds": self.seconds if seconds_override is None else seconds_override,
        }

    def to_json(self, seconds_override: float | None = None) -> str:
        return json.dumps(self.to_dict(seconds_override), sort_keys=True) + "\n"

    def to_csv(self, seconds_override: float | None = None) -> str:
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        d = self.to_dict(seconds_override)
        writer.writerow(["claim", "n", "total", "passed", "failed", "counterexamples", "seconds"])
        writer.writerow(
            [d["claim"], d["n"], d["total"], d["passed"], d["failed"],
             ";".join(d["counterexamples"]), d["seconds"]]
        )
        return buf.getvalue()

    @property
    def ok(self) -> bool:
        return self.failed == 0


class ChunkResult(NamedTuple):
    checked: int
    passed: int
    cexs: tuple[str, ...]


# Context shared with forked workers.  The parent fills it right before
# mapping chunks; children see a copy-on-write snapshot.
_CTX: dict = {}


def _chunk_rows(count: int, block: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + block, count)) for lo in range(0, count, block)]


def _block_size(count: int) -> int:
    return max(1, count // 96)


def _run_chunk(task: tuple[str, object]) -> ChunkResult:
    key, payload = task
    return _CHUNK_FNS[key](payload)


def _execute(
    claim: str,
    n: int,
    chunks: list[tuple[str, object]],
    cfg: SweepConfig,
    total_domain: int,
    checkpoint_path: Path | None = None,
    chunk_budget: int | None = None,
) -> VerificationReport | None:
    """Run chunks in order, merging results and checkpointing as asked.

    Returns None when a chunk budget ran out before the domain was done
    (the checkpoint then holds the partial aggregate).
    """
    if chunk_budget is not None and checkpoint_path is None:
        raise ValueError("a chunk budget needs a checkpoint path to resume from")
    t0 = time.perf_counter()
    done = 0
    checked = passed = 0
    cexs: list[str] = []
    if checkpoint_path is not None and checkpoint_path.is_file():
        state = json.loads(checkpoint_path.read_text())
        if state.get("claim") != claim or state.get("n") != n:
            raise ValueError(f"checkpoint {checkpoint_path} belongs to another sweep")
        done = state["chunks_done"]
        if not 0 <= done <= len(chunks):
            raise ValueError(f"checkpoint {checkpoint_path} is ahead of the domain")
        checked = state["checked"]
        passed = state["passed"]
        cexs = list(state["counterexamples"])
    todo = chunks[done:]
    if chunk_budget is not None:
        todo = todo[:chunk_budget]

    def merge(res: ChunkResult) -> None:
        nonlocal checked, passed
        checked += res.checked
        passed += res.passed
        for c in res.cexs:
            if len(cexs) < MAX_COUNTEREXAMPLES:
                cexs.append(c)

    since_checkpoint = 0

    def maybe_checkpoint() -> None:
        nonlocal since_checkpoint
        if checkpoint_path is None:
            return
        if since_checkpoint >= cfg.checkpoint_every and done < len(chunks):
            _write_checkpoint(checkpoint_path, claim, n, done, checked, passed, cexs)
            since_checkpoint = 0

    if cfg.jobs > 1 and len(todo) > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=cfg.jobs) as pool:
            for res in pool.imap(_run_chunk, todo, chunksize=1):
                merge(res)
                done += 1
                since_checkpoint += res.checked
                maybe_checkpoint()
    else:
        for task in todo:
            res = _run_chunk(task)
            merge(res)
            done += 1
            since_checkpoint += res.checked
            maybe_checkpoint()

    if done < len(chunks):
        _write_checkpoint(checkpoint_path, claim, n, done, checked, passed, cexs)
        return None
    if checked != total_domain:
        raise RuntimeError(
            f"{claim}: checked {checked} of {total_domain} cases; corrupt checkpoint?"
        )
    if checkpoint_path is not None and checkpoint_path.is_file():
        checkpoint_path.unlink()
    return VerificationReport(
        claim=claim,
        n=n,
        total=checked,
        passed=passed,
        failed=checked - passed,
        counterexamples=cexs,
        seconds=round(time.perf_counter() - t0, 3),
    )


def _write_checkpoint(path, claim, n, done, checked, passed, cexs) -> None:
    state = {
        "claim": claim,
        "n": n,
        "chunks_done": done,
        "checked": checked,
        "passed": passed,
        "counterexamples": cexs,
    }
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(state, sort_keys=True))
    tmp.replace(path)


def checkpoint_path_for(cache_dir: Path, claim: str, n: int) -> Path:
    return Path(cache_dir) / f"checkpoint-{claim}-n{n}.json"


def _both_avoider(w: Perm) -> bool:
    return avoids(w, (1, 3, 2)) and avoids(w, (3, 1, 2))


# ---------------------------------------------------------------- theorem1


def _chunk_theorem1(perms: tuple[Perm, ...]) -> ChunkResult:
    checked = passed = 0
    cexs = []
    for w in perms:
        checked += 1
        want = _both_avoider(w)
        _, v = complement_delta(w)
        ok = (v is not None) == want and (v is None or v == complement_perm(w))
        if ok:
            passed += 1
        elif len(cexs) < MAX_COUNTEREXAMPLES:
            got = format_perm(v) if v is not None else "none"
            cexs.append(f"w={format_perm(w)} recognized={got} both-avoider={want}")
    return ChunkResult(checked, passed, tuple(cexs))


def verify_theorem_main(
    n: int, cfg: SweepConfig = SweepConfig(), chunk_budget: int | None = None
) -> VerificationReport | None:
    """Staircase complement is Schubert iff w avoids 132 and 312, with
    index w^c; exactly 2^(n-1) successes."""
    ensure_all(n, cfg.cache_dir)
    perms = list(all_perms(n))
    block = _block_size(len(perms))
    chunks = [
        ("theorem1", tuple(perms[lo:hi]))
        for lo, hi in _chunk_rows(len(perms), block)
    ]
    report = _execute("theorem1", n, chunks, cfg, len(perms))
    if report is not None and report.ok:
        successes = sum(1 for w in all_perms(n) if _both_avoider(w))
        if successes != 2 ** (n - 1):
            raise RuntimeError(
                f"theorem1: {successes} successes, expected {2 ** (n - 1)}"
            )
    return report


# ---------------------------------------------------------------- extremal


def _chunk_extremal(perms: tuple[Perm, ...]) -> ChunkResult:
    checked = passed = 0
    cexs = []
    for w in perms:
        checked += 1
        f = schubert(w)
        ok = leading_exponent(f) == inversion_code(w) and smallest_exponent(
            f
        ) == conjugate(inversion_code(inverse(w)))
        if ok:
            passed += 1
        elif len(cexs) < MAX_COUNTEREXAMPLES:
            cexs.append(f"w={format_perm(w)}")
    return ChunkResult(checked, passed, tuple(cexs))


def verify_extremal(
    n: int, cfg: SweepConfig = SweepConfig(), chunk_budget: int | None = None
) -> VerificationReport | None:
    """Largest exponent is the code, smallest is the transposed inverse code."""
    ensure_all(n, cfg.cache_dir)
    perms = list(all_perms(n))
    chunks = [
        ("extremal", tuple(perms[lo:hi]))
        for lo, hi in _chunk_rows(len(perms), _block_size(len(perms)))
    ]
    return _execute("extremal", n, chunks, cfg, len(perms))


# ---------------------------------------------------------------- code-lemma


def _chunk_code_lemma(perms: tuple[Perm, ...]) -> ChunkResult:
    checked = passed = 0
    cexs = []
    for w in perms:
        checked += 1
        code = inversion_code(w)
        decreasing = all(code[i] >= code[i + 1] for i in range(len(code) - 1))
        ok = decreasing == avoids(w, (1, 3, 2))
        if ok and decreasing:
            wi = inverse(w)
            ok = inversion_code(wi) == conjugate(code) and avoids(wi, (1, 3, 2))
        if ok:
            passed += 1
        elif len(cexs) < MAX_COUNTEREXAMPLES:
            cexs.append(f"w={format_perm(w)}")
    return ChunkResult(checked, passed, tuple(cexs))


def verify_code_lemma(
    n: int, cfg: SweepConfig = SweepConfig(), chunk_budget: int | None = None
) -> VerificationReport | None:
    """132-avoidance is a weakly decreasing code; the inverse then has the
    transposed code and avoids 132 as well."""
    perms = list(all_perms(n))
    chunks = [
        ("code-lemma", tuple(perms[lo:hi]))
        for lo, hi in _chunk_rows(len(perms), _block_size(len(perms)))
    ]
    return _execute("code-lemma", n, chunks, cfg, len(perms))


# ------------------------------------------------------------ rearrangement


def _chunk_rearrangement(payload: tuple[int, int]) -> ChunkResult:
    lo, hi = payload
    u_list = _CTX["u_list"]
    v_list = _CTX["v_list"]
    u_stats = _CTX["u_stats"]
    v_stats = _CTX["v_stats"]
    checked = passed = 0
    cexs = []
    for ui in range(lo, hi):
        su = u_stats[ui]
        for vi in range(len(v_list)):
            checked += 1
            if su == v_stats[vi] and u_list[ui] != v_list[vi]:
                if len(cexs) < MAX_COUNTEREXAMPLES:
                    cexs.append(
                        f"u={format_perm(u_list[ui])} v={format_perm(v_list[vi])}"
                    )
            else:
                passed += 1
    return ChunkResult(checked, passed, tuple(cexs))


def verify_rearrangement(
    n: int, cfg: SweepConfig = SweepConfig(), chunk_budget: int | None = None
) -> VerificationReport | None:
    """A 312-avoider and a 132-avoider sharing both left-count multisets
    are equal.  The domain is the Catalan-squared grid of such pairs."""
    global _CTX
    u_list = [w for w in all_perms(n) if avoids(w, (3, 1, 2))]
    v_list = [w for w in all_perms(n) if avoids(w, (1, 3, 2))]
    cat = math.comb(2 * n, n) // (n + 1)
    if len(u_list) != cat or len(v_list) != cat:
        raise RuntimeError(f"avoider counts {len(u_list)}, {len(v_list)} != catalan({n})")

    def stats(w):
        left, right = lr_vectors(w)
        return (tuple(sorted(left)), tuple(sorted(right)))

    _CTX = {
        "u_list": u_list,
        "v_list": v_list,
        "u_stats": [stats(w) for w in u_list],
        "v_stats": [stats(w) for w in v_list],
    }
    try:
        chunks = [
            ("rearrangement", (lo, hi))
            for lo, hi in _chunk_rows(len(u_list), _block_size(len(u_list)))
        ]
        return _execute("rearrangement", n, chunks, cfg, len(u_list) * len(v_list))
    finally:
        _CTX = {}


# ---------------------------------------------------------------- involution


def _chunk_involution(perms: tuple[Perm, ...]) -> ChunkResult:
    checked = passed = 0
    cexs = []
    for w in perms:
        checked += 1
        if (w_star(w_star(w)) == w) == _both_avoider(w):
            passed += 1
        elif len(cexs) < MAX_COUNTEREXAMPLES:
            cexs.append(f"w={format_perm(w)}")
    return ChunkResult(checked, passed, tuple(cexs))


def verify_involution(
    n: int, cfg: SweepConfig = SweepConfig(), chunk_budget: int | None = None
) -> VerificationReport | None:
    """Applying the complement index chain twice fixes w exactly when w
    avoids 132 and 312."""
    perms = list(all_perms(n))
    chunks = [
        ("involution", tuple(perms[lo:hi]))
        for lo, hi in _chunk_rows(len(perms), _block_size(len(perms)))
    ]
    return _execute("involution", n, chunks, cfg, len(perms))


# ------------------------------------------------------------------- conj1


def _pair_context(n: int, cache_dir: Path | None) -> None:
    global _CTX
    table = ensure_all(n, cache_dir)
    perms = list(table)
    polys = [table[w].terms for w in perms]
    _CTX = {
        "perms": perms,
        "polys": polys,
        "counts": [len(t) for t in polys],
        "leads": [leading_exponent(table[w]) for w in perms],
        "smalls": [smallest_exponent(table[w]) for w in perms],
    }


def _find_shift(fi: int, gi: int) -> Vec | None:
    """quotient_shift on the cached tables, written out for the hot loop."""
    polys = _CTX["polys"]
    if _CTX["counts"][gi] != _CTX["counts"][fi]:
        return None
    mu = tuple(a + b for a, b in zip(_CTX["leads"][fi], _CTX["smalls"][gi]))
    fterms = polys[fi]
    for e, c in polys[gi].items():
        beta = tuple(u - a for u, a in zip(mu, e))
        if min(beta) < 0 or fterms.get(beta) != c:
            return None
    return mu


def _chunk_conj1(payload: tuple[int, int]) -> ChunkResult:
    lo, hi = payload
    perms = _CTX["perms"]
    nperm = len(perms)
    checked = passed = 0
    cexs = []
    for fi in range(lo, hi):
        for gi in range(nperm):
            checked += 1
            mu = _find_shift(fi, gi)
            if mu is None or all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)):
                passed += 1
            elif len(cexs) < MAX_COUNTEREXAMPLES:
                cexs.append(
                    f"w={format_perm(perms[gi])} w'={format_perm(perms[fi])}"
                    f" mu={format_vec(mu)}"
                )
    return ChunkResult(checked, passed, tuple(cexs))


def verify_conjecture_partition(
    n: int, cfg: SweepConfig = SweepConfig(), chunk_budget: int | None = None
) -> VerificationReport | None:
    """Whenever schubert(w) = x^mu schubert(w')(1/x), mu is weakly
    decreasing.  Walks all ordered pairs of S_n."""
    _require_long_run("conj1", n, cfg)
    global _CTX
    _pair_context(n, cfg.cache_dir)
    try:
        nperm = len(_CTX["perms"])
        block = _block_size(nperm)
        chunks = [("conj1", span) for span in _chunk_rows(nperm, block)]
        ckpt = (
            checkpoint_path_for(cfg.cache_dir, "conj1", n)
            if cfg.cache_dir is not None
            else None
        )
        return _execute(
            "conj1", n, chunks, cfg, nperm * nperm, ckpt, chunk_budget
        )
    finally:
        _CTX = {}


# ------------------------------------------------------------------- conj2


def _chunk_conj2(payload: tuple[int, int]) -> ChunkResult:
    lo, hi = payload
    containers = _CTX["containers"]
    perms = _CTX["perms"]
    checked = passed = 0
    cexs = []
    for fi in range(lo, hi):
        for gi in containers:
            checked += 1
            mu = _find_shift(fi, gi)
            if mu is None:
                passed += 1
            elif len(cexs) < MAX_COUNTEREXAMPLES:
                cexs.append(
                    f"w={format_perm(perms[gi])} w'={format_perm(perms[fi])}"
                    f" mu={format_vec(mu)}"
                )
    return ChunkResult(checked, passed, tuple(cexs))


def verify_conjecture_1432(
    n: int, cfg: SweepConfig = SweepConfig(), chunk_budget: int | None = None
) -> VerificationReport | None:
    """No complement of the Schubert polynomial of a 1432-containing w is
    itself a Schubert polynomial.  Vacuous below n = 4."""
    _require_long_run("conj2", n, cfg)
    global _CTX
    _pair_context(n, cfg.cache_dir)
    try:
        perms = _CTX["perms"]
        containers = [
            i for i, w in enumerate(perms) if not avoids(w, (1, 4, 3, 2))
        ]
        _CTX["containers"] = containers
        chunks = []
        if containers:
            block = _block_size(len(perms))
            chunks = [("conj2", span) for span in _chunk_rows(len(perms), block)]
        ckpt = (
            checkpoint_path_for(cfg.cache_dir, "conj2", n)
            if cfg.cache_dir is not None
            else None
        )
        return _execute(
            "conj2", n, chunks, cfg, len(perms) * len(containers), ckpt, chunk_budget
        )
    finally:
        _CTX = {}


# ----------------------------------------------------------------- thm1432


def _chunk_thm1432(mus: tuple[Vec, ...]) -> ChunkResult:
    checked = passed = 0
    cexs = []
    for mu in mus:
        checked += 1
        v = is_schubert(f_1432(mu))
        if v is None:
            passed += 1
        elif len(cexs) < MAX_COUNTEREXAMPLES:
            cexs.append(f"mu={format_vec(mu)} recognized={format_perm(v)}")
    return ChunkResult(checked, passed, tuple(cexs))


def verify_1432_shifts(
    bound: int, cfg: SweepConfig = SweepConfig(), chunk_budget: int | None = None
) -> VerificationReport | None:
    """No shifted complement of schubert(1432) is a Schubert polynomial,
    over the full box of shift vectors with entries up to the bound."""
    import itertools

    mus = [tuple(m) for m in itertools.product(range(bound + 1), repeat=5)]
    chunks = [
        ("thm1432", tuple(mus[lo:hi]))
        for lo, hi in _chunk_rows(len(mus), _block_size(len(mus)))
    ]
    return _execute("thm1432", bound, chunks, cfg, len(mus))


# ------------------------------------------------------------------ methods


def _chunk_methods(perms: tuple[Perm, ...]) -> ChunkResult:
    checked = passed = 0
    cexs = []
    for w in perms:
        checked += 1
        f = schubert(w)
        if schubert_bjs(w) == f and schubert_rc(w) == f:
            passed += 1
        elif len(cexs) < MAX_COUNTEREXAMPLES:
            cexs.append(f"w={format_perm(w)}")
    return ChunkResult(checked, passed, tuple(cexs))


def verify_methods_agree(
    n: int, cfg: SweepConfig = SweepConfig(), chunk_budget: int | None = None
) -> VerificationReport | None:
    """Divided differences, the word/sequence sum, and the ladder-move
    closure produce the same polynomial for every w."""
    ensure_all(n, cfg.cache_dir)
    perms = list(all_perms(n))
    chunks = [
        ("methods", tuple(perms[lo:hi]))
        for lo, hi in _chunk_rows(len(perms), _block_size(len(perms)))
    ]
    return _execute("methods", n, chunks, cfg, len(perms))


# -------------------------------------------------------------------- basis


def exact_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination.

    All intermediate entries stay integers; the exact divisions are
    checked and would raise on any violation.
    """
    m = [list(row) for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            row_i = m[i]
            row_r = m[r]
            factor = row_i[c]
            for j in range(c + 1, ncols):
                num = pivot * row_i[j] - factor * row_r[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                row_i[j] = q
            row_i[c] = 0
        prev = pivot
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def staircase_box(n: int) -> list[Vec]:
    """All exponents with entry i at most n - i, in lexicographic order."""
    import itertools

    return [tuple(e) for e in itertools.product(*[range(n - i) for i in range(n)])]


def verify_basis(
    n: int, cfg: SweepConfig = SweepConfig(), chunk_budget: int | None = None
) -> VerificationReport | None:
    """The staircase complements of all schubert(w), w in S_n, span the
    space of polynomials under the staircase: the n! x n! coefficient
    matrix has full rank."""
    t0 = time.perf_counter()
    cols = staircase_box(n)
    col_index = {e: i for i, e in enumerate(cols)}
    matrix = []
    for w in all_perms(n):
        g, _ = complement_delta(w)
        row = [0] * len(cols)
        for e, c in g.items():
            row[col_index[e]] = c
        matrix.append(row)
    rank = exact_rank(matrix)
    want = math.factorial(n)
    ok = rank == want
    return VerificationReport(
        claim="basis",
        n=n,
        total=1,
        passed=1 if ok else 0,
        failed=0 if ok else 1,
        counterexamples=[] if ok else [f"rank={rank} expected={want}"],
        seconds=round(time.perf_counter() - t0, 3),
    )


# ----------------------------------------------------------------- registry


_CHUNK_FNS: dict[str, Callable] = {
    "theorem1": _chunk_theorem1,
    "extremal": _chunk_extremal,
    "code-lemma": _chunk_code_lemma,
    "rearrangement": _chunk_rearrangement,
    "involution": _chunk_involution,
    "conj1": _chunk_conj1,
    "conj2": _chunk_conj2,
    "thm1432": _chunk_thm1432,
    "methods": _chunk_methods,
}


@dataclass(frozen=True)
class ClaimSpec:
    run: Callable
    min_n: int
    max_n: int
    gated: tuple[int, ...] = ()
    describe: str = ""


CLAIMS: dict[str, ClaimSpec] = {
    "theorem1": ClaimSpec(
        verify_theorem_main, 1, 7,
        describe="staircase complement is Schubert iff w avoids 132 and 312",
    ),
    "extremal": ClaimSpec(
        verify_extremal, 1, 6,
        describe="leading exponent is the code, smallest the transposed inverse code",
    ),
    "code-lemma": ClaimSpec(
        verify_code_lemma, 1, 7,
        describe="132-avoidance = weakly decreasing code, with transposed inverse code",
    ),
    "rearrangement": ClaimSpec(
        verify_rearrangement, 1, 7,
        describe="a 312-avoider and a 132-avoider with matching L/R multisets are equal",
    ),
    "involution": ClaimSpec(
        verify_involution, 1, 7,
        describe="the complement index chain squares to the identity iff both patterns avoided",
    ),
    "conj1": ClaimSpec(
        verify_conjecture_partition, 1, 7, gated=(7,),
        describe="every complement shift between Schubert polynomials is a partition",
    ),
    "conj2": ClaimSpec(
        verify_conjecture_1432, 1, 7, gated=(7,),
        describe="complements of 1432-containing Schubert polynomials are never Schubert",
    ),
    "thm1432": ClaimSpec(
        verify_1432_shifts, 0, 6,
        describe="no shifted complement of schubert(1432) is Schubert (n = entry bound)",
    ),
    "basis": ClaimSpec(
        verify_basis, 1, 5,
        describe="staircase complements of S_n form a basis below the staircase",
    ),
    "methods": ClaimSpec(
        verify_methods_agree, 1, 6,
        describe="all three Schubert constructions agree",
    ),
}


def _require_long_run(claim: str, n: int, cfg: SweepConfig) -> None:
    if n in CLAIMS[claim].gated and not cfg.long_run:
        raise LongRunRequired(
            f"{claim} at n={n} walks ~{math.factorial(n) ** 2:,} pairs; "
            "enable the long-run flag to confirm"
        )


def run_claim(
    claim: str,
    n: int,
    cfg: SweepConfig = SweepConfig(),
    chunk_budget: int | None = None,
) -> VerificationReport | None:
    """Dispatch a named sweep after validating its range and gating."""
    spec = CLAIMS.get(claim)
    if spec is None:
        raise KeyError(f"unknown claim {claim!r}; known: {', '.join(sorted(CLAIMS))}")
    if not spec.min_n <= n <= spec.max_n:
        raise ValueError(
            f"claim {claim} accepts n in [{spec.min_n}, {spec.max_n}], got {n}"
        )
    return spec.run(n, cfg, chunk_budget)
