"""The full verification suite: one check per structural statement.

Each check runs exact computations through the library and produces a
CheckResult with per-degree data; `run_verification` collects them into a
VerificationReport.  Reports serialize to canonical JSON: fixed key order,
no timestamps, and timings kept out of the default serialization so that
identical inputs give byte-identical bytes (timings are available as an
explicitly non-deterministic sidecar).

Checks at distinct degrees are independent, so the heavy ones accept a
process pool; results are merged in degree order and the report does not
depend on the worker count.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import __version__
from .algebra import exterior_dim
from .groupcoh import h1_certificate, load_group_data
from .modules import tor_dimension
from .stable import FalsificationError, StableCohomology


@dataclass
class CheckResult:
    check_id: str
    statement: str
    status: str  # "pass" | "fail"
    per_degree_data: List[Dict[str, object]]
    elapsed_ms: float
    failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "check_id": self.check_id,
            "statement": self.statement,
            "status": self.status,
            "per_degree_data": self.per_degree_data,
        }
        if self.failure is not None:
            out["failure"] = self.failure
        return out


@dataclass
class VerificationReport:
    artifact_version: str
    degree_bound: int
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self, include_timings: bool = False) -> Dict[str, object]:
        out: Dict[str, object] = {
            "artifact_version": self.artifact_version,
            "degree_bound": self.degree_bound,
            "all_passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }
        if include_timings:
            # wall-clock times are the one non-deterministic field; callers
            # asking for them opt out of byte-identical reports
            out["timings_ms"] = {c.check_id: round(c.elapsed_ms, 3) for c in self.checks}
        return out

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_dict(include_timings), indent=2)


# ---------------------------------------------------------------------------
# the individual checks; each returns per-degree rows or raises


def _check_contraction(ctx: StableCohomology, jobs: int) -> List[Dict[str, object]]:
    return ctx.verify_contraction_table()


def _check_injectivity(ctx: StableCohomology, jobs: int) -> List[Dict[str, object]]:
    rows = ctx.verify_injectivity()
    table = ctx.stable_cohomology_tilde_dual()
    out = []
    for d, row in sorted(rows.items()):
        ok = row["injective"] and row["cokernel"] == row["cokernel_expected"]
        out.append({"degree": d, **row, "ok": int(ok)})
        if not ok:
            raise FalsificationError(f"cokernel mismatch at degree {d}", out)
    # parity sanity on the verified table
    if any(c % 2 == 0 and n for c, n in table.dims.items()):
        raise FalsificationError("dual table has even-degree classes")
    return out


def _check_surjectivity(ctx: StableCohomology, jobs: int) -> List[Dict[str, object]]:
    rows = ctx.verify_surjectivity()
    table = ctx.stable_cohomology_tilde()
    even = {c: n for c, n in table.dims.items() if c % 2 == 0}
    if even != {0: 1}:
        raise FalsificationError(f"even part should be one theta line, got {even}")
    return [{"degree": d, **row} for d, row in sorted(rows.items())]


def _check_generators(ctx: StableCohomology, jobs: int) -> List[Dict[str, object]]:
    report = ctx.verify_generators()
    rows: List[Dict[str, object]] = [dict(r) for r in report.per_degree]
    rows.append(
        {
            "syzygies_checked": report.syzygies_checked,
            "minimal_generator_counts": {
                str(d): n for d, n in sorted(report.minimal_counts.items())
            },
        }
    )
    return rows


def _check_tor(ctx: StableCohomology, jobs: int) -> List[Dict[str, object]]:
    j_max = 4
    bound = ctx.degree_bound
    if jobs > 1:
        degree_rows = _pool_map(_tor_degree_worker, bound, list(range(0, bound + 1, 2)), jobs)
    else:
        module = ctx.tilde_module()
        degree_rows = [_tor_rows_for_degree(module, j_max, d) for d in range(0, bound + 1, 2)]
    rows: List[Dict[str, object]] = []
    for chunk in degree_rows:
        rows.extend(chunk)
    for row in rows:
        if row["got"] != row["expected"]:
            raise FalsificationError(f"Tor mismatch: {row}", rows)
    witness = next(
        (r for r in rows if r["j"] == 1 and r["degree"] == 2), {"got": 0}
    )
    if witness["got"] != 1:
        raise FalsificationError("missing non-freeness witness at Tor_1, degree 2")
    return rows


def _tor_rows_for_degree(module, j_max: int, d: int) -> List[Dict[str, object]]:
    out = []
    for j in range(0, j_max + 1):
        got = tor_dimension(module, j, d)
        expected = exterior_dim(j, d) + exterior_dim(j + 2, d)
        if got or expected:
            out.append({"j": j, "degree": d, "got": got, "expected": expected})
    return out


def _check_exactness(ctx: StableCohomology, jobs: int) -> List[Dict[str, object]]:
    bound = ctx.degree_bound
    forms = ctx.forms
    rows: List[Dict[str, object]] = []
    if jobs > 1:
        reports = _pool_map(_exactness_degree_worker, bound, list(range(1, bound + 1)), jobs)
        for rep in reports:
            rows.append(rep)
    else:
        for d in range(1, bound + 1):
            rows.append(_exactness_row(forms, d))
    for row in rows:
        if not (row["all_exact"] and row["cartan"] and row["diagonal"]):
            raise FalsificationError(f"forms complex fails at degree {row['degree']}", rows)
    return rows


def _exactness_row(forms, d: int) -> Dict[str, object]:
    report = forms.verify_exactness(d)
    top = forms.max_form_degree()
    cartan = all(forms.verify_cartan(n, d) for n in range(0, top + 1))
    # the homotopy argument behind exactness needs every eigenvalue of
    # L = d p + p d to be invertible in positive degree; check it
    diagonal = all(
        w > 0 for n in range(0, top + 1) for w in forms.euler_weights(n, d)
    ) or d == 0
    return {
        "degree": d,
        "all_exact": report.all_exact,
        "cartan": cartan,
        "diagonal": diagonal,
        "spots": [s.to_dict() for s in report.spots],
    }


def _check_h1(ctx: StableCohomology, jobs: int) -> List[Dict[str, object]]:
    doc = json.loads(
        (resources.files("mmmcoh") / "data" / "b3.json").read_text(encoding="utf-8")
    )
    pres, rep = load_group_data(doc)
    cert = h1_certificate(pres, rep)
    if (cert.z1_dim, cert.b1_dim, cert.h1_dim) != (2, 2, 0):
        raise FalsificationError(
            f"expected Z1=2, B1=2, H1=0; got {cert.z1_dim}, {cert.b1_dim}, {cert.h1_dim}"
        )
    return [
        {
            "group": "three-strand braid group on the torus homology lattice",
            "z1_dim": cert.z1_dim,
            "b1_dim": cert.b1_dim,
            "h1_dim": cert.h1_dim,
        }
    ]


def _check_cross(ctx: StableCohomology, jobs: int) -> List[Dict[str, object]]:
    return ctx.kernel_cross_check()


def _check_audit(ctx: StableCohomology, jobs: int) -> List[Dict[str, object]]:
    return ctx.exact_sequence_audit()


CHECKS: List[Tuple[str, str, Callable]] = [
    (
        "contraction-identity",
        "the pairing of twisted classes satisfies mu(m_l, m_l') = -e_(l+l'-1) "
        "for every pair of indices inside the degree bound",
        _check_contraction,
    ),
    (
        "dual-injectivity",
        "cup product with the degree-1 twisted class embeds the coefficient "
        "ring into the twisted module in every degree, with cokernel the free "
        "module on the twisted classes of index at least 2",
        _check_injectivity,
    ),
    (
        "covariant-surjectivity",
        "contraction against the degree-1 twisted class maps the twisted "
        "module onto every positive degree of the coefficient ring, leaving "
        "only the degree-0 fiber class in even degrees",
        _check_surjectivity,
    ),
    (
        "kernel-generators",
        "the classes M(i,j) = e_i m_j - e_j m_i span the contraction kernel "
        "degreewise, satisfy the cyclic syzygies exactly, and minimally "
        "generate with multiplicities dim Lambda^2 E",
        _check_generators,
    ),
    (
        "tor-dimensions",
        "Koszul homology of the verified cohomology module has dimensions "
        "dim Lambda^j E + dim Lambda^(j+2) E in every bidegree, and Tor_1 is "
        "nonzero, so the module is not free",
        _check_tor,
    ),
    (
        "resolution-exactness",
        "the contraction sequence of differential forms is exact in every "
        "positive internal degree, and d p + p d acts diagonally with weight "
        "(generator factors + form degree)",
        _check_exactness,
    ),
    (
        "torus-h1",
        "first cohomology of the once-bordered torus mapping class group "
        "with lattice coefficients vanishes: cocycles and coboundaries both "
        "have dimension 2",
        _check_h1,
    ),
    (
        "kernel-cross-check",
        "the twisted-class contraction and the Euler contraction on 1-forms "
        "are the same matrices up to one global sign, with equal kernel "
        "dimensions in every degree",
        _check_cross,
    ),
    (
        "sequence-audit",
        "the alternating dimension sum of 0 -> kernel -> twisted module -> "
        "coefficient ring -> Q -> 0 vanishes in every degree block",
        _check_audit,
    ),
]


def run_verification(
    degree_bound: int = 24,
    jobs: int = 1,
    check_ids: Optional[Sequence[str]] = None,
) -> VerificationReport:
    """Run every check (or a subset) and collect the report."""
    ctx = StableCohomology(degree_bound)
    wanted = set(check_ids) if check_ids else None
    results: List[CheckResult] = []
    for check_id, statement, runner in CHECKS:
        if wanted and check_id not in wanted:
            continue
        t0 = time.perf_counter()
        try:
            rows = runner(ctx, jobs)
            status, failure = "pass", None
        except FalsificationError as exc:
            rows = []
            status, failure = "fail", str(exc)
        elapsed = (time.perf_counter() - t0) * 1000.0
        results.append(
            CheckResult(
                check_id=check_id,
                statement=statement,
                status=status,
                per_degree_data=rows,
                elapsed_ms=elapsed,
                failure=failure,
            )
        )
    return VerificationReport(
        artifact_version=__version__,
        degree_bound=degree_bound,
        checks=results,
    )


# ---------------------------------------------------------------------------
# degree-indexed process pool


_WORKER_CTX: Optional[StableCohomology] = None


def _pool_init(bound: int) -> None:
    global _WORKER_CTX
    _WORKER_CTX = StableCohomology(bound)


def _tor_degree_worker(d: int):
    assert _WORKER_CTX is not None
    return _tor_rows_for_degree(_WORKER_CTX.tilde_module(), 4, d)


def _exactness_degree_worker(d: int):
    assert _WORKER_CTX is not None
    return _exactness_row(_WORKER_CTX.forms, d)


def _pool_map(worker, bound: int, degrees: List[int], jobs: int):
    with ProcessPoolExecutor(max_workers=jobs, initializer=_pool_init, initargs=(bound,)) as pool:
        return list(pool.map(worker, degrees))
