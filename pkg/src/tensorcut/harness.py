"""Verification campaigns: corpora, per-pair checks, reports, certificates.

A campaign crosses a corpus of first factors with a corpus of dense second
factors and runs the selected checks on every pair.  Any disagreement with
the brute-force oracles is recorded as a replayable counterexample
certificate; budget-limited instances are marked inconclusive, never failed.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import dataclass
from typing import Iterator, Optional, TextIO

from .catalog import all_graphs, connected_graphs
from .dense import (
    CutClassificationError,
    CutVerdict,
    ExcludedCaseError,
    classify_min_cut,
    dense_precondition,
    exceptional_cut,
    exceptional_member,
    is_exceptional_member,
    is_super_edge_connected_kn,
    kappa_formula,
    kappa_formula_kn,
)
from .graph6 import emit_graph6, load_graph6_file, parse_graph6
from .graphs import Graph, complete_graph
from .mincut import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    edge_connectivity,
    edge_connectivity_subset,
    enumerate_min_cuts,
    is_vertex_star,
)
from .product import (
    direct_product,
    fibers_contained,
    format_product_cut,
    parse_product_cut,
    product_connected,
)

CHECK_NAMES = ("theorem1", "corollary1", "theorem2", "corollary2", "weichsel", "lemma2")
_LEMMA2_SAMPLES = 16


@dataclass(frozen=True)
class CampaignConfig:
    """What to verify and over which corpus.

    Sources are "enumerate" (internal non-isomorphic generation), a
    "random:COUNT[:MINDEG]" draw, or a path to a graph6 file.
    """

    g_source: str = "enumerate"
    h_source: str = "enumerate"
    max_g_order: int = 5
    max_h_order: int = 5
    enumeration_budget: int = DEFAULT_BUDGET
    seed: int = 0
    checks: tuple[str, ...] = ("theorem1",)
    oracle: str = "maxflow"

    def __post_init__(self) -> None:
        if self.max_g_order < 2:
            raise ValueError("max_g_order must be >= 2")
        if self.max_h_order < 3:
            raise ValueError("max_h_order must be >= 3")
        if self.enumeration_budget < 0:
            raise ValueError("enumeration_budget must be >= 0")
        if not self.checks:
            raise ValueError("at least one check must be selected")
        unknown = set(self.checks) - set(CHECK_NAMES)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.oracle not in ("maxflow", "subset"):
            raise ValueError("oracle must be 'maxflow' or 'subset'")
        ordered = tuple(c for c in CHECK_NAMES if c in self.checks)
        object.__setattr__(self, "checks", ordered)


_INT_KEYS = {"max_g_order", "max_h_order", "enumeration_budget", "seed"}
_STR_KEYS = {"g_source", "h_source", "oracle"}


def parse_config(text: str) -> CampaignConfig:
    """Flat key=value config text; '#' lines are comments."""
    values: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno} is not key=value: {raw!r}")
        key, _, val = line.partition("=")
        key, val = key.strip(), val.strip()
        if key in _INT_KEYS:
            values[key] = int(val)
        elif key in _STR_KEYS:
            values[key] = val
        elif key == "checks":
            values[key] = tuple(c.strip() for c in val.split(",") if c.strip())
        else:
            raise ValueError(f"unknown config key {key!r}")
    return CampaignConfig(**values)


def load_config(path: str) -> CampaignConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


# ---------------------------------------------------------------------------
# Corpus generation.

def random_graph_with_min_degree(
    n: int, min_degree: int, rng: random.Random, require_connected: bool = False
) -> Graph:
    """Rejection-sample a uniform-ish random graph meeting a degree floor."""
    if min_degree > n - 1:
        raise ValueError(f"infeasible degree constraint: {min_degree} on {n} vertices")
    for _ in range(200000):
        edges = {
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.5
        }
        g = Graph(n, edges)
        if n > 0 and g.min_degree() < min_degree:
            continue
        if require_connected and not g.is_connected():
            continue
        return g
    raise RuntimeError("rejection sampling failed to meet the degree constraint")


def _parse_source(src: str) -> tuple:
    if src == "enumerate":
        return ("enumerate",)
    if src.startswith("random:"):
        parts = src.split(":")
        if len(parts) == 2:
            return ("random", int(parts[1]), None)
        if len(parts) == 3:
            return ("random", int(parts[1]), int(parts[2]))
        raise ValueError(f"bad random source {src!r}")
    return ("file", src)


def _g_corpus(config: CampaignConfig) -> list[Graph]:
    source = _parse_source(config.g_source)
    if source[0] == "enumerate":
        out: list[Graph] = []
        for n in range(2, config.max_g_order + 1):
            out.extend(connected_graphs(n))
        return out
    if source[0] == "random":
        _, count, mindeg = source
        rng = random.Random(config.seed)
        out = []
        for n in range(2, config.max_g_order + 1):
            for _ in range(count):
                out.append(
                    random_graph_with_min_degree(
                        n, mindeg if mindeg is not None else 1, rng,
                        require_connected=True,
                    )
                )
        return out
    graphs = load_graph6_file(source[1])
    return [
        g for g in graphs
        if 2 <= g.n <= config.max_g_order and g.is_connected()
    ]


def _h_corpus(config: CampaignConfig, dense_only: bool = True) -> list[Graph]:
    source = _parse_source(config.h_source)
    if source[0] == "enumerate":
        out: list[Graph] = []
        for n in range(3, config.max_h_order + 1):
            for h in all_graphs(n):
                if not dense_only or dense_precondition(h):
                    out.append(h)
        return out
    if source[0] == "random":
        _, count, mindeg = source
        rng = random.Random(config.seed + 1)
        out = []
        for n in range(3, config.max_h_order + 1):
            floor = mindeg if mindeg is not None else 0
            if dense_only:
                floor = max(floor, n // 2 + 1)
            for _ in range(count):
                out.append(random_graph_with_min_degree(n, floor, rng))
        return out
    graphs = load_graph6_file(source[1])
    return [
        h for h in graphs
        if 3 <= h.n <= config.max_h_order
        and (not dense_only or dense_precondition(h))
    ]


def generate_corpus(config: CampaignConfig) -> Iterator[tuple[int, Graph, Graph]]:
    """Deterministic stream of (pair_id, g, h) with dense second factors."""
    pid = 0
    hs = _h_corpus(config, dense_only=True)
    for g in _g_corpus(config):
        for h in hs:
            yield pid, g, h
            pid += 1


# ---------------------------------------------------------------------------
# Per-pair checks.  Each returns a record dict with at least "status".

def _certificate(check: str, g: Graph, h: Graph, expected, observed,
                 cut: Optional[str] = None) -> dict:
    cert = {
        "check": check,
        "g": emit_graph6(g),
        "h": emit_graph6(h),
        "expected": expected,
        "observed": observed,
    }
    if cut is not None:
        cert["cut"] = cut
    return cert


def _product_kappa(product: Graph, config: CampaignConfig) -> Optional[int]:
    if config.oracle == "subset":
        try:
            return edge_connectivity_subset(product, config.enumeration_budget).value
        except BudgetExceeded:
            return None
    return edge_connectivity(product).value


def _check_theorem1(pid: int, g: Graph, h: Graph, config: CampaignConfig,
                    caches: dict) -> dict:
    res = kappa_formula(g, h)
    oracle = _product_kappa(direct_product(g, h), config)
    rec = {
        "formula": res.value,
        "branch": res.branch.value,
        "oracle": oracle,
    }
    if oracle is None:
        rec["status"] = "inconclusive"
    elif oracle == res.value:
        rec["status"] = "ok"
    else:
        rec["status"] = "mismatch"
        rec["certificate"] = _certificate("theorem1", g, h, res.value, oracle)
    return rec


def _check_corollary1(pid: int, g: Graph, h: Graph, config: CampaignConfig,
                      caches: dict) -> dict:
    n = h.n
    kn = kappa_formula_kn(g, n)
    general = kappa_formula(g, h)
    oracle = _product_kappa(direct_product(g, h), config)
    rec = {"n": n, "kn_value": kn.value, "formula": general.value, "oracle": oracle}
    if oracle is None:
        rec["status"] = "inconclusive"
    elif kn.value == general.value == oracle:
        rec["status"] = "ok"
    else:
        rec["status"] = "mismatch"
        rec["certificate"] = _certificate(
            "corollary1", g, h, kn.value,
            {"formula": general.value, "oracle": oracle},
        )
    return rec


def _cached_enumeration(product: Graph, config: CampaignConfig, caches: dict):
    key = emit_graph6(product)
    if key not in caches:
        caches[key] = enumerate_min_cuts(product, config.enumeration_budget)
    return caches[key]


def _check_theorem2(pid: int, g: Graph, h: Graph, config: CampaignConfig,
                    caches: dict) -> dict:
    product = direct_product(g, h)
    value = edge_connectivity(product).value
    subsets = math.comb(len(product.edges), value)
    rec: dict = {"kappa": value, "subsets": subsets}
    if subsets > config.enumeration_budget:
        rec.update(exhaustive=False, status="inconclusive")
        return rec
    enum = _cached_enumeration(product, config, caches)
    counts = {v.value: 0 for v in CutVerdict}
    exceptional_pair = g == complete_graph(2) and is_exceptional_member(h) is not None
    rec.update(exhaustive=True, cuts=len(enum.cuts), exceptional_pair=exceptional_pair)
    for cut in enum.cuts:
        try:
            verdict = classify_min_cut(g, h, cut)
        except CutClassificationError:
            rec["status"] = "mismatch"
            rec["certificate"] = _certificate(
                "theorem2", g, h, "classifiable", "unclassifiable",
                cut=format_product_cut(cut, h.n),
            )
            rec["verdicts"] = counts
            return rec
        counts[verdict.verdict.value] += 1
    rec["verdicts"] = counts
    if exceptional_pair:
        l = is_exceptional_member(h)
        if h == exceptional_member(l).graph:
            _, canonical = exceptional_cut(l)
            rec["canonical_cut_seen"] = canonical in enum.cuts
        if counts[CutVerdict.EXCEPTIONAL.value] == 0:
            rec["status"] = "mismatch"
            rec["certificate"] = _certificate(
                "theorem2", g, h, "at least one exceptional cut", counts,
            )
            return rec
    rec["status"] = "ok"
    return rec


def _check_corollary2(pid: int, g: Graph, h: Graph, config: CampaignConfig,
                      caches: dict) -> dict:
    n = h.n
    product = direct_product(g, h)
    value = edge_connectivity(product).value
    rec: dict = {"n": n}
    if math.comb(len(product.edges), value) > config.enumeration_budget:
        rec.update(status="inconclusive", exhaustive=False)
        return rec
    enum = _cached_enumeration(product, config, caches)
    brute = all(is_vertex_star(product, c) is not None for c in enum.cuts)
    rec["bruteforce"] = brute
    try:
        predicted = is_super_edge_connected_kn(g, n)
    except ExcludedCaseError as exc:
        rec.update(excluded=True, predicted=None)
        if brute == exc.bruteforce_answer:
            rec["status"] = "ok"
        else:
            rec["status"] = "mismatch"
            rec["certificate"] = _certificate(
                "corollary2", g, h, exc.bruteforce_answer, brute
            )
        return rec
    rec["predicted"] = predicted
    if predicted == brute:
        rec["status"] = "ok"
    else:
        rec["status"] = "mismatch"
        rec["certificate"] = _certificate("corollary2", g, h, predicted, brute)
    return rec


def _check_weichsel(pid: int, g: Graph, h: Graph, config: CampaignConfig,
                    caches: dict) -> dict:
    predicted = product_connected(g, h)
    actual = direct_product(g, h).is_connected()
    rec = {"predicted": predicted, "traversal": actual}
    if predicted == actual:
        rec["status"] = "ok"
    else:
        rec["status"] = "mismatch"
        rec["certificate"] = _certificate("weichsel", g, h, predicted, actual)
    return rec


def _check_lemma2(pid: int, g: Graph, h: Graph, config: CampaignConfig,
                  caches: dict) -> dict:
    product = direct_product(g, h)
    bound = g.min_degree() * h.min_degree()
    edges_sorted = sorted(product.edges)
    rng = random.Random(config.seed * 1_000_003 + pid)
    rec: dict = {"bound": bound, "samples": _LEMMA2_SAMPLES}
    for _ in range(_LEMMA2_SAMPLES):
        size = rng.randrange(min(bound, len(edges_sorted) + 1))
        cut = frozenset(rng.sample(edges_sorted, size))
        if not fibers_contained(g, h, cut):
            rec["status"] = "mismatch"
            rec["certificate"] = _certificate(
                "lemma2", g, h, "fibers contained", "fiber split",
                cut=format_product_cut(cut, h.n),
            )
            return rec
    rec["status"] = "ok"
    return rec


_CHECK_FUNCS = {
    "theorem1": _check_theorem1,
    "corollary1": _check_corollary1,
    "theorem2": _check_theorem2,
    "corollary2": _check_corollary2,
    "weichsel": _check_weichsel,
    "lemma2": _check_lemma2,
}


def _pairs_for_check(check: str, config: CampaignConfig,
                     g_list: list[Graph], h_dense: list[Graph],
                     h_all: list[Graph]) -> Iterator[tuple[int, Graph, Graph]]:
    if check == "weichsel":
        hs = h_all
    elif check in ("corollary1", "corollary2"):
        hs = [h for h in h_dense if h == complete_graph(h.n)]
    else:
        hs = h_dense
    pid = 0
    for g in g_list:
        for h in hs:
            yield pid, g, h
            pid += 1


# ---------------------------------------------------------------------------
# Campaign runner and reports.

@dataclass
class VerificationReport:
    records: list[dict]
    summary: dict

    @property
    def exit_code(self) -> int:
        if self.summary["mismatches"] > 0:
            return 1
        if self.summary["inconclusive"] > 0:
            return 2
        return 0


def run_campaign(config: CampaignConfig) -> VerificationReport:
    records: list[dict] = []
    g_list = _g_corpus(config)
    h_dense = _h_corpus(config, dense_only=True)
    h_all = _h_corpus(config, dense_only=False) if "weichsel" in config.checks else []
    caches: dict = {}
    mismatches = inconclusive = exceptional = 0
    for check in config.checks:
        func = _CHECK_FUNCS[check]
        for pid, g, h in _pairs_for_check(check, config, g_list, h_dense, h_all):
            t0 = time.perf_counter()
            rec = func(pid, g, h, config, caches)
            rec["ms"] = int(round((time.perf_counter() - t0) * 1000))
            rec.update(record="instance", check=check, pair=pid,
                       g=emit_graph6(g), h=emit_graph6(h))
            if rec["status"] == "mismatch":
                mismatches += 1
            elif rec["status"] == "inconclusive":
                inconclusive += 1
            if check == "theorem2":
                exceptional += rec.get("verdicts", {}).get(
                    CutVerdict.EXCEPTIONAL.value, 0
                )
            records.append(rec)
    summary = {
        "record": "summary",
        "instances": len(records),
        "checks": list(config.checks),
        "mismatches": mismatches,
        "inconclusive": inconclusive,
        "exceptional_sightings": exceptional,
        "seed": config.seed,
        "budget": config.enumeration_budget,
        "max_g_order": config.max_g_order,
        "max_h_order": config.max_h_order,
    }
    return VerificationReport(records, summary)


_CSV_COLUMNS = ("record", "check", "pair", "g", "h", "status", "ms", "details")
_CSV_SKIP = set(_CSV_COLUMNS) - {"details"}


def write_jsonl(report: VerificationReport, stream: TextIO) -> None:
    for rec in report.records:
        stream.write(json.dumps(rec) + "\n")
    stream.write(json.dumps(report.summary) + "\n")


def write_csv(report: VerificationReport, stream: TextIO) -> None:
    import csv

    writer = csv.DictWriter(stream, fieldnames=_CSV_COLUMNS)
    writer.writeheader()
    for rec in report.records + [report.summary]:
        row = {k: rec.get(k, "") for k in _CSV_COLUMNS if k != "details"}
        details = {k: v for k, v in rec.items() if k not in _CSV_SKIP}
        row["details"] = json.dumps(details, sort_keys=True)
        writer.writerow(row)


def replay_certificate(cert: dict, budget: int = DEFAULT_BUDGET) -> dict:
    """Re-run the check a certificate came from, on its own graph6 payloads.

    Returns fresh observations plus a "reproduced" flag that is True when the
    recorded mismatch shows up again.
    """
    check = cert["check"]
    g = parse_graph6(cert["g"])
    h = parse_graph6(cert["h"])
    out: dict = {"check": check}
    if check == "theorem1":
        formula = kappa_formula(g, h).value
        oracle = edge_connectivity(direct_product(g, h)).value
        out.update(formula=formula, oracle=oracle, reproduced=formula != oracle)
    elif check == "corollary1":
        kn = kappa_formula_kn(g, h.n).value
        formula = kappa_formula(g, h).value
        oracle = edge_connectivity(direct_product(g, h)).value
        out.update(kn_value=kn, formula=formula, oracle=oracle,
                   reproduced=not (kn == formula == oracle))
    elif check == "theorem2":
        cut = parse_product_cut(cert["cut"], h.n)
        try:
            verdict = classify_min_cut(g, h, cut)
            out.update(verdict=verdict.verdict.value, reproduced=False)
        except CutClassificationError:
            out.update(verdict="unclassifiable", reproduced=True)
    elif check == "corollary2":
        product = direct_product(g, h)
        enum = enumerate_min_cuts(product, budget)
        if not enum.exhaustive:
            raise BudgetExceeded("replay needs an exhaustive enumeration")
        brute = all(is_vertex_star(product, c) is not None for c in enum.cuts)
        try:
            predicted = is_super_edge_connected_kn(g, h.n)
        except ExcludedCaseError as exc:
            predicted = exc.bruteforce_answer
        out.update(predicted=predicted, bruteforce=brute,
                   reproduced=predicted != brute)
    elif check == "weichsel":
        predicted = product_connected(g, h)
        actual = direct_product(g, h).is_connected()
        out.update(predicted=predicted, traversal=actual,
                   reproduced=predicted != actual)
    elif check == "lemma2":
        cut = parse_product_cut(cert["cut"], h.n)
        contained = fibers_contained(g, h, cut)
        out.update(fibers_contained=contained, reproduced=not contained)
    else:
        raise ValueError(f"unknown check {check!r}")
    return out
