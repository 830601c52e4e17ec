"""Deterministic rendering and serialization of results.

Text mode truncates decimals (never rounds) to two places and trims
trailing zeros, matching the reference tables' convention ("36.1", "8.16").
JSON carries exact rationals as numerator/denominator strings and round-trips
losslessly; CSV emits one row per record with exact values alongside the
truncated display form.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Sequence, Union

from .bounds import BoundReport, Coverage, FormulaBound
from .candidates import CandidateTriple, e_value
from .effectivity import SpecializationConfig, UnloadingTrace
from .lattice import QuadraticExpr, sign_of

Value = Union[Fraction, QuadraticExpr]


def truncate2(x: Fraction) -> str:
    """Decimal expansion of x truncated (toward zero) to two places,
    trailing zeros trimmed: 313600/310 -> '1011.61', 361/10 -> '36.1'."""
    if x < 0:
        return "-" + truncate2(-x)
    scaled = (x.numerator * 100) // x.denominator
    whole, frac = divmod(scaled, 100)
    if frac == 0:
        return str(whole)
    return f"{whole}.{frac:02d}".rstrip("0")


def qx_floor_scaled(x: QuadraticExpr, scale: int = 1) -> int:
    """Exact floor(scale * (a + b*sqrt(q))), using float only as a seed."""
    v = QuadraticExpr(x.a * scale, x.b * scale, x.q)
    z = int(float(v))
    while sign_of(QuadraticExpr(v.a - z, v.b, v.q)) < 0:
        z -= 1
    while sign_of(QuadraticExpr(v.a - (z + 1), v.b, v.q)) >= 0:
        z += 1
    return z


def truncate2_value(x: Value) -> str:
    """Truncated display of a rational or surd value (toward zero)."""
    if isinstance(x, Fraction):
        return truncate2(x)
    neg = sign_of(x) < 0
    y = QuadraticExpr(-x.a, -x.b, x.q) if neg else x
    scaled = qx_floor_scaled(y, 100)
    whole, frac = divmod(scaled, 100)
    s = str(whole) if frac == 0 else f"{whole}.{frac:02d}".rstrip("0")
    return "-" + s if neg else s


def fraction_to_json(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def fraction_from_json(d: dict) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))


def value_to_json(x: Value) -> dict:
    if isinstance(x, Fraction):
        return {"kind": "rational", **fraction_to_json(x)}
    return {
        "kind": "quadratic",
        "a": fraction_to_json(x.a),
        "b": fraction_to_json(x.b),
        "q": fraction_to_json(x.q),
    }


def value_from_json(d: dict) -> Value:
    if d["kind"] == "rational":
        return fraction_from_json(d)
    return QuadraticExpr(
        fraction_from_json(d["a"]), fraction_from_json(d["b"]), fraction_from_json(d["q"])
    )


def candidate_to_json(c: CandidateTriple) -> dict:
    return {"n": c.n, "t": c.t, "m": c.m, "k": c.k}


def candidate_from_json(d: dict) -> CandidateTriple:
    return CandidateTriple(n=int(d["n"]), t=int(d["t"]), m=int(d["m"]), k=int(d["k"]))


def cfg_to_json(cfg: SpecializationConfig) -> dict:
    return {"n": cfg.n, "d": cfg.d, "r": cfg.r, "g": cfg.g}


def cfg_from_json(d: dict) -> SpecializationConfig:
    return SpecializationConfig(n=int(d["n"]), d=int(d["d"]), r=int(d["r"]), g=int(d["g"]))


def report_to_json_dict(rep: BoundReport) -> dict:
    return {
        "n": rep.n,
        "f": fraction_to_json(rep.f),
        "mu": fraction_to_json(rep.mu),
        "blocker": candidate_to_json(rep.blocker) if rep.blocker else None,
        "exclusions_used": [
            {"candidate": candidate_to_json(c), "reason": reason}
            for c, reason in rep.exclusions_used
        ],
        "coverage": {"m_checked_k0": rep.coverage.m_checked_k0,
                     "m_checked_knz": rep.coverage.m_checked_knz},
        "cfg": cfg_to_json(rep.cfg),
        "budget_limited": rep.budget_limited,
        "m_budget_cap": rep.m_budget_cap,
    }


def report_from_json_dict(d: dict) -> BoundReport:
    return BoundReport(
        n=int(d["n"]),
        f=fraction_from_json(d["f"]),
        mu=fraction_from_json(d["mu"]),
        blocker=candidate_from_json(d["blocker"]) if d["blocker"] else None,
        exclusions_used=tuple(
            (candidate_from_json(e["candidate"]), e["reason"]) for e in d["exclusions_used"]
        ),
        coverage=Coverage(
            m_checked_k0=int(d["coverage"]["m_checked_k0"]),
            m_checked_knz=int(d["coverage"]["m_checked_knz"]),
        ),
        cfg=cfg_from_json(d["cfg"]),
        budget_limited=bool(d["budget_limited"]),
        m_budget_cap=int(d["m_budget_cap"]),
    )


def dumps(obj: dict) -> str:
    """Canonical JSON: sorted keys, stable separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def render_candidates(cands: Sequence[CandidateTriple], fmt: str) -> str:
    rows = [(c, e_value(c)) for c in cands]
    if fmt == "text":
        lines = [f"{'t':>6} {'m':>5} {'k':>4}  {'e':>10}"]
        for c, ev in rows:
            lines.append(f"{c.t:>6} {c.m:>5} {c.k:>4}  {truncate2(ev.e):>10}")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "m", "k", "e_num", "e_den", "e_trunc", "f_num", "f_den"])
        for c, ev in rows:
            w.writerow([c.t, c.m, c.k, ev.e.numerator, ev.e.denominator,
                        truncate2(ev.e), ev.f.numerator, ev.f.denominator])
        return buf.getvalue()
    if fmt == "json":
        return dumps({
            "candidates": [
                {**candidate_to_json(c), "e": fraction_to_json(ev.e), "f": fraction_to_json(ev.f)}
                for c, ev in rows
            ]
        })
    raise ValueError(f"unknown format {fmt!r}")


def render_report(rep: BoundReport, fmt: str) -> str:
    if fmt == "text":
        lines = []
        blocker = rep.blocker.label() if rep.blocker else "none"
        lines.append(
            f"n = {rep.n}: f = {truncate2(rep.f)} (exact {rep.f.numerator}/{rep.f.denominator}), "
            f"blocker {blocker}"
        )
        lines.append(
            f"mu = {truncate2(rep.mu)} (exact {rep.mu.numerator}/{rep.mu.denominator}); "
            f"coverage m <= {rep.coverage.m_checked_k0} (k=0), "
            f"m <= {rep.coverage.m_checked_knz} (k!=0)"
        )
        if rep.budget_limited:
            lines.append(f"BUDGET-LIMITED at m_cap = {rep.m_budget_cap}; bound is valid but not maximal")
        if rep.exclusions_used:
            lines.append("exclusions used:")
            for c, reason in rep.exclusions_used:
                lines.append(f"  {c.label():>16}  e = {truncate2(e_value(c).e):>9}  [{reason}]")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "f_num", "f_den", "f_trunc", "mu_num", "mu_den",
                    "blocker_t", "blocker_m", "blocker_k",
                    "m_checked_k0", "m_checked_knz", "budget_limited", "exclusions"])
        b = rep.blocker
        w.writerow([
            rep.n, rep.f.numerator, rep.f.denominator, truncate2(rep.f),
            rep.mu.numerator, rep.mu.denominator,
            b.t if b else "", b.m if b else "", b.k if b else "",
            rep.coverage.m_checked_k0, rep.coverage.m_checked_knz,
            int(rep.budget_limited),
            ";".join(f"{c.label()}:{reason}" for c, reason in rep.exclusions_used),
        ])
        return buf.getvalue()
    if fmt == "json":
        return dumps(report_to_json_dict(rep))
    raise ValueError(f"unknown format {fmt!r}")


def render_formulas(per_n: Sequence[tuple[int, Sequence[FormulaBound]]], fmt: str) -> str:
    if fmt == "text":
        lines = []
        for n, bounds in per_n:
            lines.append(f"n = {n}:")
            applicable = [fb for fb in bounds if fb.applicable and fb.value is not None]
            if not applicable:
                lines.append("  (no applicable formulas; n may be a square)")
            for fb in applicable:
                lines.append(f"  {fb.name:<16} f = {truncate2_value(fb.value):>10}   [{fb.source}]")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "name", "applicable", "f_trunc", "f_json", "source"])
        for n, bounds in per_n:
            for fb in bounds:
                w.writerow([
                    n, fb.name, int(fb.applicable),
                    truncate2_value(fb.value) if fb.value is not None else "",
                    json.dumps(value_to_json(fb.value), sort_keys=True) if fb.value is not None else "",
                    fb.source,
                ])
        return buf.getvalue()
    if fmt == "json":
        return dumps({
            "formulas": [
                {
                    "n": n,
                    "bounds": [
                        {
                            "name": fb.name,
                            "applicable": fb.applicable,
                            "value": value_to_json(fb.value) if fb.value is not None else None,
                            "trunc": truncate2_value(fb.value) if fb.value is not None else None,
                            "source": fb.source,
                        }
                        for fb in bounds
                    ],
                }
                for n, bounds in per_n
            ]
        })
    raise ValueError(f"unknown format {fmt!r}")


def render_trace(trace: UnloadingTrace) -> str:
    lines = [f"{'i':>4} {'t_i':>6} {'D_i.C':>7}  multiplicities"]
    for step in trace.steps:
        lines.append(f"{step.index:>4} {step.t:>6} {step.dot_c:>7}  {step.cls.mults}")
    lines.append(f"j = {trace.j}" + (f", omega' = {trace.omega_prime}" if trace.omega_prime is not None else ""))
    return "\n".join(lines) + "\n"
