"""
Reproduction suite: every quantitative packing/covering claim on the
constructive families, recomputed with the exact oracle, plus the hard
structural checks that must hold for the run to succeed.

A refuted claim is reported, never fatal. Only failed hard assertions
change the exit code.
"""
import logging
import time
from dataclasses import dataclass
from typing import Optional

from .corpus import DEFAULT_CORPUS_SIZE, DEFAULT_SEED, barbell, random_corpus
from .cycles import longest_cycle
from .exceptions import BudgetExceeded, GraphError
from .families import (
    ChordSpec,
    FamilySpec,
    G3_T2_IMAGE,
    canonical_g3,
    family_from_spec,
    g3_from_k4,
    h_chain,
)
from .graph import has_clique_minor, is_k_connected, reference_blocks
from .graphio import format_records
from .heuristics import pack_t1, pack_t2
from .oracle import Budget, CoverSolution, check_packing, max_packing, min_cover, validate_solution
from .patterns import TreeEmbedding, is_valid_embedding
from .simulation import run_block_detection

logger = logging.getLogger(__name__)

CONFIRMED = "confirmed"
REFUTED = "refuted"
OUT_OF_BUDGET = "out-of-budget"

CLAIM_FIELDS = (
    "claim_id",
    "paper_alpha",
    "paper_beta",
    "computed_alpha",
    "computed_beta",
    "verdict",
    "runtime_ms",
)


@dataclass(frozen=True)
class Claim:
    """
    A quoted (alpha, beta) pair on one family instance. `exact` claims must
    match in both values; the others only assert alpha == paper_alpha and
    alpha <= beta, leaving beta to the verdict. A claim quoting no values
    (both None) only states alpha == beta, and that equality is asserted.
    """

    claim_id: str
    spec: FamilySpec
    k: int
    paper_alpha: Optional[int]
    paper_beta: Optional[int]
    exact: bool = True

    @property
    def equality_only(self):
        return self.paper_alpha is None and self.paper_beta is None


@dataclass(frozen=True)
class ClaimRecord:
    claim_id: str
    paper_alpha: Optional[int]
    paper_beta: Optional[int]
    computed_alpha: Optional[int]
    computed_beta: Optional[int]
    verdict: str
    runtime_ms: float
    hard_ok: bool = True
    note: str = ""

    def as_record(self, timings=False):
        record = [
            ("claim_id", self.claim_id),
            ("paper_alpha", _or_dash(self.paper_alpha)),
            ("paper_beta", _or_dash(self.paper_beta)),
            ("computed_alpha", _or_dash(self.computed_alpha)),
            ("computed_beta", _or_dash(self.computed_beta)),
            ("verdict", self.verdict),
            ("runtime_ms", f"{self.runtime_ms:.1f}" if timings else "-"),
            ("hard_ok", self.hard_ok),
        ]
        if self.note:
            record.append(("note", self.note))
        return record


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    passed: bool
    detail: str
    runtime_ms: float

    def as_record(self, timings=False):
        return [
            ("check_id", self.check_id),
            ("passed", self.passed),
            ("detail", self.detail),
            ("runtime_ms", f"{self.runtime_ms:.1f}" if timings else "-"),
        ]


@dataclass(frozen=True)
class Report:
    seed: int
    corpus_size: int
    claims: tuple
    checks: tuple

    @property
    def hard_failures(self):
        failed = [c.claim_id for c in self.claims if not c.hard_ok]
        failed += [c.check_id for c in self.checks if not c.passed]
        return failed

    @property
    def exit_code(self):
        return 1 if self.hard_failures else 0

    def totals(self):
        verdicts = [c.verdict for c in self.claims]
        return [
            ("claims", len(self.claims)),
            ("confirmed", verdicts.count(CONFIRMED)),
            ("refuted", verdicts.count(REFUTED)),
            ("out_of_budget", verdicts.count(OUT_OF_BUDGET)),
            ("checks", len(self.checks)),
            ("checks_failed", sum(1 for c in self.checks if not c.passed)),
            ("hard_failures", " ".join(self.hard_failures)),
            ("exit_code", self.exit_code),
        ]

    def render(self, timings=False, table=False):
        header = [
            ("report", "treepack reproduction"),
            ("seed", self.seed),
            ("corpus_size", self.corpus_size),
        ]
        records = [header]
        records += [c.as_record(timings) for c in self.claims]
        records += [c.as_record(timings) for c in self.checks]
        records.append(self.totals())

        text = format_records(records)
        if table:
            text += "\n" + render_table(self.claims, timings)
        return text


def render_table(claims, timings=False):
    rows = [CLAIM_FIELDS]
    for claim in claims:
        values = dict(claim.as_record(timings))
        rows.append(tuple(str(values[name]) for name in CLAIM_FIELDS))

    widths = [max(len(row[i]) for row in rows) for i in range(len(CLAIM_FIELDS))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


#######################################
## claims
#######################################
def quoted_claims():
    claims = []
    for r in range(1, 6):
        claims.append(Claim(f"lemma-2.1-cycle-r{r}", FamilySpec("cycle", r=r), 1, r, r))
        claims.append(Claim(f"lemma-2.1-path-r{r}", FamilySpec("path", r=r), 1, r, r))

    claims += [
        Claim("thm-2.2-case2-r2", FamilySpec("chorded_cycle", r=2, chords=(ChordSpec(0, 3, 3),)), 1, 2, 2),
        Claim("thm-2.2-case3-r3-short", FamilySpec("chorded_cycle", r=3, chords=(ChordSpec(0, 6, 3),)), 1, 3, 3),
        Claim("thm-2.2-case3-r4", FamilySpec("chorded_cycle", r=4, chords=(ChordSpec(0, 6, 6),)), 1, 5, 5),
        Claim(
            "thm-2.2-case3-r6-q2",
            FamilySpec("chorded_cycle", r=6, chords=(ChordSpec(0, 6, 6), ChordSpec(9, 15, 6))),
            1, 8, 8,
        ),
        Claim("thm-2.2-case4-r5", FamilySpec("chorded_cycle", r=5, chords=(ChordSpec(0, 9, 6),)), 1, None, None),
    ]

    for r, h in ((2, 1), (2, 2), (3, 2)):
        claims.append(
            Claim(f"thm-2.3-r{r}-h{h}", FamilySpec("erdos_posa", r=r, h=h), 1, r, r + h, exact=False)
        )

    for r in (1, 2):
        claims.append(Claim(f"thm-2.6-r{r}", FamilySpec("h_chain", r=r), 2, r, r, exact=False))

    return sorted(claims, key=lambda c: c.claim_id)


def evaluate_claim(claim, budget=None):
    started = time.perf_counter()
    g = family_from_spec(claim.spec).build()

    try:
        packing = max_packing(g, claim.k, budget)
        cover = min_cover(g, claim.k, budget)
        report = validate_solution(g, claim.k, packing, cover, budget)
    except BudgetExceeded as e:
        logger.warning("Claim %s is out of budget: %s", claim.claim_id, e)
        return ClaimRecord(
            claim.claim_id, claim.paper_alpha, claim.paper_beta, None, None,
            OUT_OF_BUDGET, _elapsed(started), note=str(e),
        )

    alpha, beta = packing.size, cover.size
    if claim.equality_only:
        matches = alpha == beta
    else:
        matches = (alpha, beta) == (claim.paper_alpha, claim.paper_beta)
    verdict = CONFIRMED if matches else REFUTED

    if claim.exact:
        hard_ok = matches
    else:
        hard_ok = alpha == claim.paper_alpha and alpha <= beta
    hard_ok = hard_ok and report.ok

    note = "; ".join(report.problems())
    logger.info("Claim %s: quoted (%s, %s), computed (%d, %d), %s.",
                claim.claim_id, claim.paper_alpha, claim.paper_beta, alpha, beta, verdict)
    return ClaimRecord(
        claim.claim_id, claim.paper_alpha, claim.paper_beta, alpha, beta,
        verdict, _elapsed(started), hard_ok, note,
    )


#######################################
## hard checks
#######################################
def _check(check_id, func):
    started = time.perf_counter()
    try:
        passed, detail = func()
    except (GraphError, BudgetExceeded) as e:
        passed, detail = False, f"{type(e).__name__}: {e}"
    if not passed:
        logger.warning("Check %s failed: %s", check_id, detail)
    return CheckRecord(check_id, passed, detail, _elapsed(started))


def check_g3_structure():
    g = canonical_g3()
    quoted = TreeEmbedding(2, G3_T2_IMAGE)
    results = dict(
        three_connected=is_k_connected(g, 3),
        k4_minor=has_clique_minor(g, 4),
        quoted_t2=is_valid_embedding(g, quoted) and quoted.vertex_set == frozenset(g.vertices),
        anti_contraction=g3_from_k4() == g,
    )
    return all(results.values()), _describe(results)


def check_h_chain_structure():
    g = h_chain(2)
    results = dict(
        order=g.vertex_count == 14,
        size=g.edge_count == 31,
        three_connected=is_k_connected(g, 3),
    )
    return all(results.values()), _describe(results)


def check_longest_cycle_premise():
    try:
        family_from_spec(FamilySpec("chorded_cycle", r=3, chords=(ChordSpec(0, 6, 6),))).build()
        rejected = False
    except GraphError:
        rejected = True

    lengths = []
    for claim in quoted_claims():
        if claim.spec.family != "chorded_cycle":
            continue
        witness = longest_cycle(family_from_spec(claim.spec).build())
        lengths.append(witness.exact and witness.length == 3 * claim.spec.r)

    return rejected and all(lengths), f"r3_chord_rejected={rejected} accepted_longest_3r={all(lengths)}"


def check_cover_witnesses():
    problems = []
    specs = [FamilySpec(name, r=r) for name in ("cycle", "path") for r in range(1, 6)]
    specs += [FamilySpec("erdos_posa", r=r, h=h) for r, h in ((2, 1), (2, 2), (3, 2))]

    for spec in specs:
        family = family_from_spec(spec)
        g = family.build()
        cover = CoverSolution(1, family.cover_witness())
        report = validate_solution(g, 1, max_packing(g, 1), cover)
        if not report.cover_valid or cover.size != spec.r:
            problems.append(f"{spec.family}-r{spec.r}-h{spec.h}")

    return not problems, "all witnesses cover with r vertices" if not problems else " ".join(problems)


def check_corpus(instances, budget=None):
    """Duality and heuristic soundness on the random corpus."""
    violations, unsound, skipped = [], [], 0

    for instance in instances:
        g, k = instance.graph, instance.k
        try:
            packing = max_packing(g, k, budget)
            cover = min_cover(g, k, budget)
            report = validate_solution(g, k, packing, cover, budget)
        except BudgetExceeded:
            skipped += 1
            continue

        if not report.ok:
            violations.append(instance.name)

        heuristic = pack_t1(g) if k == 1 else pack_t2(g)
        if check_packing(g, k, heuristic) or heuristic.size > packing.size:
            unsound.append(instance.name)

    detail = (
        f"instances={len(instances)} skipped={skipped} "
        f"duality_violations={len(violations)} unsound_heuristics={len(unsound)}"
    )
    if violations or unsound:
        detail += " failing=" + ",".join(violations + unsound)
    return not violations and not unsound, detail


def check_heuristic_optimality():
    misses = []
    for claim in quoted_claims():
        if claim.spec.family != "chorded_cycle":
            continue
        g = family_from_spec(claim.spec).build()
        if pack_t1(g).size != max_packing(g, 1).size:
            misses.append(claim.claim_id)

    for r in (1, 2):
        g = h_chain(r)
        if pack_t2(g).size != r:
            misses.append(f"h_chain-r{r}")

    return not misses, "heuristics reach alpha" if not misses else " ".join(misses)


def check_block_agreement():
    graphs = [(f"barbell-{length}", barbell(length)) for length in range(2, 7)]
    graphs += [(c.claim_id, family_from_spec(c.spec).build()) for c in quoted_claims()]
    graphs.append(("g3", canonical_g3()))

    disagreements = []
    for name, g in graphs:
        decomposition, _ = run_block_detection(g)
        if not decomposition.agrees_with(reference_blocks(g)):
            disagreements.append(name)

    return not disagreements, f"graphs={len(graphs)} disagreements={' '.join(disagreements) or 0}"


def survey_corpus_blocks(instances):
    """Protocol/oracle disagreement on the random corpus, reported only."""
    disagreements = 0
    for instance in instances:
        decomposition, _ = run_block_detection(instance.graph)
        if not decomposition.agrees_with(reference_blocks(instance.graph)):
            disagreements += 1
    return True, f"instances={len(instances)} disagreements={disagreements}"


#######################################
## suite
#######################################
def run_reproduction(seed=DEFAULT_SEED, corpus_size=DEFAULT_CORPUS_SIZE, budget=None):
    budget = budget or Budget()
    claims = tuple(evaluate_claim(claim, budget) for claim in quoted_claims())

    instances = random_corpus(corpus_size, seed)
    checks = (
        _check("g3-structure", check_g3_structure),
        _check("h-chain-structure", check_h_chain_structure),
        _check("longest-cycle-premise", check_longest_cycle_premise),
        _check("cover-witnesses", check_cover_witnesses),
        _check("corpus-duality-and-heuristics", lambda: check_corpus(instances, budget)),
        _check("heuristic-optimality", check_heuristic_optimality),
        _check("block-agreement", check_block_agreement),
        _check("corpus-block-survey", lambda: survey_corpus_blocks(instances)),
    )

    return Report(seed, corpus_size, claims, checks)


def _describe(results):
    return " ".join(f"{name}={value}" for name, value in results.items())


def _elapsed(started):
    return (time.perf_counter() - started) * 1000


def _or_dash(value):
    return "-" if value is None else value
