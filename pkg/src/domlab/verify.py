"""Corpus sweeps: run a theorem over every in-budget instance and report.

Instances come either from the internal enumerator (connected graphs of a
range of orders, optionally triangle-free) or from a .g6 file.  Pair
theorems sweep ordered pairs of two corpora under a product-order cap.
Sweeps can fan out over a process pool; results are merged in instance
order, so reports are identical regardless of scheduling.  Counterexample
certificates carry the instance in graph6, the violated clause, and witness
sets; the report keeps at most ``cap`` certificates but always the full
count.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from multiprocessing import get_context
from pathlib import Path

from .enumeration import DEFAULT_BUDGET, enumerate_connected
from .graph6 import load_graph6_file, parse_graph6, to_graph6
from .graphs import Graph, is_triangle_free
from .classify import NOT_MEMBER, classify_small_triangle_free
from .theorems import THEOREMS, Verdict, check_instance

COUNTEREXAMPLE_CAP = 10


@dataclass(frozen=True)
class CorpusSpec:
    """Connected graphs of orders ``min_order..max_order`` (optionally
    triangle-free), or the contents of a .g6 file when ``path`` is set."""

    min_order: int = 1
    max_order: int = 8
    triangle_free: bool = False
    path: str | None = None
    budget: int = DEFAULT_BUDGET

    def describe(self) -> str:
        if self.path is not None:
            return f"file:{self.path}"
        tf = " triangle-free" if self.triangle_free else ""
        return f"connected{tf} orders {self.min_order}..{self.max_order}"

    def graphs(self, cache_dir: str | Path | None = None) -> list[Graph]:
        if self.path is not None:
            graphs = load_graph6_file(self.path)
            if self.triangle_free:
                graphs = [g for g in graphs if is_triangle_free(g)]
            return graphs
        if not 1 <= self.min_order <= self.max_order <= self.budget:
            raise ValueError(
                f"orders {self.min_order}..{self.max_order} outside the "
                f"enumeration budget 1..{self.budget}"
            )
        out: list[Graph] = []
        for n in range(self.min_order, self.max_order + 1):
            out.extend(
                enumerate_connected(
                    n,
                    triangle_free=self.triangle_free,
                    budget=self.budget,
                    cache_dir=cache_dir,
                )
            )
        return out


@dataclass(frozen=True)
class PairCorpusSpec:
    """Ordered pairs drawn from two corpora, capped by product order."""

    left: CorpusSpec
    right: CorpusSpec
    product_cap: int = 25

    def describe(self) -> str:
        return (f"ordered pairs of ({self.left.describe()}) x "
                f"({self.right.describe()}), product order <= {self.product_cap}")


#: Default sweep budgets: single-graph statements over connected orders <= 8,
#: pair statements over factors of order 2..5 (2..4 for disjunctive products)
#: with product order <= 25.
def _pair(lo: int, hi: int, triangle_free: bool = False) -> PairCorpusSpec:
    spec = CorpusSpec(lo, hi, triangle_free)
    return PairCorpusSpec(spec, spec)


DEFAULT_CORPORA: dict[str, CorpusSpec | PairCorpusSpec] = {
    "T1": _pair(2, 5),
    "T2": _pair(2, 5, triangle_free=True),
    "T3": _pair(2, 5),
    "T4": _pair(2, 4),
    "P1": CorpusSpec(1, 8),
    "CHAIN": CorpusSpec(1, 8),
    "UB3": _pair(2, 5),
    "WCFACTOR": _pair(2, 5),
    "G4CART": _pair(2, 5, triangle_free=True),
    "PRISM": CorpusSpec(2, 8),
    "BC": CorpusSpec(1, 7),
    "DK": _pair(2, 5),
    "L3G": _pair(2, 5),
    "TV": _pair(2, 5),
    "PX": CorpusSpec(2, 8),
    "LK2": CorpusSpec(2, 8),
    "L2P": CorpusSpec(1, 8),
    "LK3": CorpusSpec(2, 8),
    "LNE": CorpusSpec(1, 8),
    "DIND": _pair(2, 4),
    "DTOT": _pair(2, 4),
    "DNE": _pair(2, 4),
    "DKN": _pair(2, 4),
    "E1": _pair(2, 4),
    "TF11": CorpusSpec(1, 8, triangle_free=True),
    "G5WD": CorpusSpec(1, 8),
}


@dataclass
class VerificationReport:
    theorem: str
    corpus: str
    scanned: int
    holds: int
    hypothesis_not_met: int
    counterexample_count: int
    counterexamples: list[dict]
    elapsed_ms: float
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "corpus": self.corpus,
            "scanned": self.scanned,
            "holds": self.holds,
            "hypothesis_not_met": self.hypothesis_not_met,
            "counterexample_count": self.counterexample_count,
            "counterexamples": self.counterexamples,
            "elapsed_ms": self.elapsed_ms,
            "details": self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _instances(tid: str, corpus, cache_dir):
    entry = THEOREMS[tid]
    if entry.arity == 1:
        if isinstance(corpus, PairCorpusSpec):
            raise ValueError(f"{tid} takes a single-graph corpus")
        return [to_graph6(g) for g in corpus.graphs(cache_dir)]
    if not isinstance(corpus, PairCorpusSpec):
        raise ValueError(f"{tid} takes a pair corpus")
    left = corpus.left.graphs(cache_dir)
    right = corpus.right.graphs(cache_dir)
    return [
        (to_graph6(g), to_graph6(h))
        for g in left
        for h in right
        if g.n * h.n <= corpus.product_cap
    ]


def _check_task(args: tuple[str, object]) -> tuple[str, str | None, dict | None, str | None]:
    tid, payload = args
    if isinstance(payload, tuple):
        instance: object = tuple(parse_graph6(p) for p in payload)
    else:
        instance = parse_graph6(payload)
    verdict = check_instance(tid, instance)
    tag = None
    if tid == "TF11" and verdict.status != "hypothesis-not-met":
        tag = classify_small_triangle_free(instance)  # type: ignore[arg-type]
    return verdict.status, verdict.clause, verdict.witness, tag


def verify_corpus(
    tid: str,
    corpus: CorpusSpec | PairCorpusSpec | None = None,
    workers: int = 1,
    cache_dir: str | Path | None = None,
    cap: int = COUNTEREXAMPLE_CAP,
) -> VerificationReport:
    """Sweep one theorem over a corpus and aggregate the verdicts."""
    if tid not in THEOREMS:
        raise KeyError(f"unknown theorem id {tid!r}")
    if corpus is None:
        corpus = DEFAULT_CORPORA[tid]
    start = time.perf_counter()
    payloads = _instances(tid, corpus, cache_dir)
    tasks = [(tid, p) for p in payloads]
    if workers > 1 and len(tasks) > 1:
        try:
            ctx = get_context("fork")  # inherits warm caches
        except ValueError:
            ctx = get_context()
        chunk = max(1, len(tasks) // (workers * 8))
        with ctx.Pool(workers) as pool:
            results = pool.map(_check_task, tasks, chunksize=chunk)
    else:
        results = [_check_task(t) for t in tasks]

    holds = hnm = 0
    certs: list[dict] = []
    cert_count = 0
    member_tags: list[str] = []
    for payload, (status, clause, witness, tag) in zip(payloads, results):
        if status == "holds":
            holds += 1
        elif status == "hypothesis-not-met":
            hnm += 1
        else:
            cert_count += 1
            if len(certs) < cap:
                cert = {"clause": clause, "witness_sets": witness or {}}
                if isinstance(payload, tuple):
                    cert["pair"] = list(payload)
                else:
                    cert["graph6"] = payload
                certs.append(cert)
        if tag is not None and tag != NOT_MEMBER:
            member_tags.append(tag)
    details: dict = {}
    if tid == "TF11":
        details["members"] = len(member_tags)
        details["member_tags"] = sorted(member_tags)
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        theorem=tid,
        corpus=corpus.describe(),
        scanned=len(payloads),
        holds=holds,
        hypothesis_not_met=hnm,
        counterexample_count=cert_count,
        counterexamples=certs,
        elapsed_ms=elapsed,
        details=details,
    )
