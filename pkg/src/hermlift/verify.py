"""Invariant checks bundled for the ``verify`` subcommand."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import floor
from typing import Callable, Optional

from . import bounds, codec, curve, goodness, poly
from .field import GF2m


@dataclass
class Check:
    name: str
    passed: Optional[bool]  # None means skipped
    detail: str = ""

    @property
    def status(self) -> str:
        return {True: "PASS", False: "FAIL", None: "SKIP"}[self.passed]


def _field_axioms(F: GF2m, rng: random.Random) -> tuple[bool, str]:
    elems = list(F.elements())
    if F.order <= 16:
        triples = itertools.product(elems, repeat=3)
    else:
        triples = ((rng.choice(elems), rng.choice(elems), rng.choice(elems)) for _ in range(3000))
    for a, b, c in triples:
        if F.mul(a, b) != F.mul(b, a):
            return False, f"commutativity at {a},{b}"
        if F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c)):
            return False, f"associativity at {a},{b},{c}"
        if F.mul(a, b ^ c) != F.mul(a, b) ^ F.mul(a, c):
            return False, f"distributivity at {a},{b},{c}"
    return True, ""


def _powers(F: GF2m) -> tuple[bool, str]:
    for x in F.elements():
        if F.pow(x, F.order) != x:
            return False, f"x^(q^2) != x at {x}"
        if x and F.pow(x, F.order - 1) != 1:
            return False, f"x^(q^2-1) != 1 at {x}"
    return True, ""


def _subfield_fibers(F: GF2m) -> tuple[bool, str]:
    sub = set(F.subfield())
    if len(sub) != F.q:
        return False, "subfield size"
    traces: dict[int, int] = {}
    norms: dict[int, int] = {}
    for x in F.elements():
        traces[F.trace(x)] = traces.get(F.trace(x), 0) + 1
        if x:
            norms[F.norm(x)] = norms.get(F.norm(x), 0) + 1
    ok = (set(traces) == sub and all(v == F.q for v in traces.values())
          and set(norms) == sub - {0} and all(v == F.q + 1 for v in norms.values()))
    return ok, "" if ok else "trace/norm fiber sizes"


def _geometry(F: GF2m) -> tuple[bool, str]:
    q = F.q
    pts = curve.hermitian_points(F)
    lines = curve.hermitian_lines(F)
    if len(pts) != q**3 or len(lines) != q**4 - q**3:
        return False, f"|H|={len(pts)} |lines|={len(lines)}"
    incidences = 0
    for p in pts:
        through = curve.lines_through(F, p)
        if len(through) != q * q - 1:
            return False, f"{len(through)} lines through {p}"
        sets = [set(curve.line_points(F, ln)) for ln in through]
        incidences += len(sets)
        if any(p not in s for s in sets):
            return False, f"line through {p} misses it"
        total = sum(len(s) for s in sets)
        if len(set().union(*sets)) != total - len(sets) + 1:
            return False, f"two lines through {p} share a second point"
    if incidences != (q**4 - q**3) * (q + 1):
        return False, "double counting"
    return True, ""


def _vanishing(F: GF2m) -> tuple[bool, str]:
    for ln in curve.hermitian_lines(F):
        xs = [p.alpha for p in curve.line_points(F, ln)]
        if poly.from_roots(F, xs) != curve.vanishing_poly(F, ln):
            return False, f"mismatch on line {(ln.a, ln.b)}"
    return True, ""


def _soundness(F: GF2m) -> tuple[bool, str]:
    reports = goodness.classify(F, "exact")
    bad = [r.monomial for r in reports if r.certified and not r.exact]
    return not bad, f"certified but bad: {bad[:5]}" if bad else ""


def _bound_validity(F: GF2m) -> tuple[bool, str]:
    count, _ = goodness.enumerate_good(F, "exact")
    need = floor(bounds.bound_new(F.k))
    return count >= need, f"exact good count {count}, floor(bound_new) {need}"


def _dimension_chain(F: GF2m) -> tuple[bool, str]:
    count, _ = goodness.enumerate_good(F, "exact")
    dim = bounds.exact_dimension(F)
    need = floor(bounds.bound_new(F.k))
    ok = need <= count <= dim <= F.q**3
    return ok, f"{need} <= {count} <= {dim} <= {F.q**3}"


def _codec(F: GF2m, rng: random.Random) -> tuple[bool, str]:
    spec = codec.build_code(F)
    if codec.generator_rank(spec) != spec.dimension:
        return False, "generator matrix not full rank"
    word = codec.encode(spec, codec.random_message(spec, rng))
    if not codec.satisfies_parity(spec, word):
        return False, "codeword violates a line check"
    for _ in range(50):
        pos = rng.randrange(spec.n)
        ln = rng.choice(codec.recovery_lines(spec, pos))
        damaged = list(word)
        damaged[pos] = None
        if codec.recover_erasure(spec, damaged, pos, ln) != word[pos]:
            return False, f"bad repair at {pos}"
    return True, ""


def run_checks(k: int, seed: int = 0) -> list[Check]:
    F = GF2m(k)
    rng = random.Random(seed)
    small = k <= 3
    plan: list[tuple[str, bool, Callable[[], tuple[bool, str]]]] = [
        ("field axioms", True, lambda: _field_axioms(F, rng)),
        ("x^(q^2) = x", True, lambda: _powers(F)),
        ("trace/norm fibers", True, lambda: _subfield_fibers(F)),
        ("geometry counts", small, lambda: _geometry(F)),
        ("vanishing polynomial identity", small, lambda: _vanishing(F)),
        ("certificate soundness", small, lambda: _soundness(F)),
        ("exact good count >= floor(bound_new)", small, lambda: _bound_validity(F)),
        ("dimension chain", small, lambda: _dimension_chain(F)),
        ("codec round trip", small, lambda: _codec(F, rng)),
    ]
    out = []
    for name, enabled, fn in plan:
        if not enabled:
            out.append(Check(name, None, f"skipped at k={k}"))
            continue
        ok, detail = fn()
        out.append(Check(name, ok, detail))
    return out
