"""Seeded random instances and oracle cross-checks (backs ``shirac verify``)."""

from __future__ import annotations

from fractions import Fraction
from importlib import resources
import random

from ._rational import fmt, rational
from .bounds import MAX_KINDS, MIN_KINDS, extrema, heaviside_duration, HeavisideMask
from .errors import ShiracError
from .impulse import (ImpulseInterference, ImpulseSpectralDensity, ImpulseSpectralTrain,
                      convolve, flatten, offset, periodic_train)
from .oracle import oracle_extremum, oracle_flatten
from .specfile import parse_spec
from .transform import distance_set

DENOMINATORS = (1, 2, 3, 4)


def random_rational(rng, lo, hi, denominators=DENOMINATORS):
    den = rng.choice(denominators)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_train(rng, max_degree=5, negative=False, max_step=4):
    degree = rng.randint(1, max_degree)
    step = random_rational(rng, -max_step if negative else 0, max_step)
    lo = -5 if negative else 0
    amps = tuple(Fraction(rng.randint(lo, 9), rng.choice((1, 1, 2))) for _ in range(degree))
    return ImpulseSpectralTrain(step, degree, amps)


def random_interference(rng, max_rows=3, max_cols=3, max_degree=5, negative=False,
                        max_impulses=None):
    """Random finite interference; retried until it has at most *max_impulses*."""
    while True:
        rows = rng.randint(1, max_rows)
        x = ImpulseInterference(tuple(
            ImpulseSpectralDensity(tuple(random_train(rng, max_degree, negative)
                                         for _ in range(rng.randint(1, max_cols))))
            for _ in range(rows)))
        if rng.random() < 0.3:
            x = offset(x, random_rational(rng, -3 if negative else 0, 3))
        if max_impulses is None or len(flatten(x)) <= max_impulses:
            return x


def random_periodic(rng, max_summands=2):
    """Superposition of one-sided periodic trains, each offset by less than its step.

    Such interferences repeat exactly with their hyperperiod on x >= 0.
    """
    summands = []
    for _ in range(rng.randint(1, max_summands)):
        step = rng.choice((Fraction(1), Fraction(2), Fraction(3), Fraction(3, 2), Fraction(4)))
        cycle = tuple(Fraction(rng.randint(0, 6)) for _ in range(rng.randint(1, 2)))
        if not any(cycle):
            cycle = (Fraction(1),) + cycle[1:]
        part = ImpulseInterference((ImpulseSpectralDensity((periodic_train(step, cycle),)),))
        phi = Fraction(rng.randint(0, int(step * 2) - 1), 2)
        summands.extend(offset(part, phi).summands)
    return ImpulseInterference(tuple(summands))


def cross_product_oracle(a, b):
    """Pairwise product of two flat trains, merged by position."""
    acc = {}
    for p, u in a:
        for q, v in b:
            acc[p + q] = acc.get(p + q, Fraction(0)) + u * v
    return tuple((p, acc[p]) for p in sorted(acc) if acc[p] != 0)


class Report:
    def __init__(self):
        self.passed = 0
        self.failures = []

    def check(self, ok, label):
        if ok:
            self.passed += 1
        else:
            self.failures.append(label)

    @property
    def total(self):
        return self.passed + len(self.failures)


def _flat_pairs(train):
    return tuple((imp.position, imp.amplitude) for imp in train)


def check_bounds(report, x, window, label, max_ds=12):
    ds = distance_set(x, *window)[:max_ds]
    for extremum, table in (("max", MAX_KINDS), ("min", MIN_KINDS)):
        for kind in table:
            got = extrema(x, ds, window, kind, extremum)
            for d, r in zip(ds, got):
                want = oracle_extremum(x, d, window, kind, extremum)
                report.check(r.value == want.value,
                             f"{label}: {extremum} {kind.value} d={fmt(d)}: "
                             f"{fmt(r.value)} != oracle {fmt(want.value)}")


def check_spec(report, doc):
    x = doc.interference
    label = doc.name
    window = doc.window
    report.check(_flat_pairs(flatten(x, window)) == oracle_flatten(x, window),
                 f"{label}: expansion differs from oracle")
    expect = doc.expect
    if "expand" in expect:
        want = tuple((rational(p), rational(a)) for p, a in expect["expand"])
        report.check(_flat_pairs(flatten(x, window)) == want,
                     f"{label}: expansion differs from expected fixture")
    for case in expect.get("eval", []):
        mask = HeavisideMask.of_kind(case["lo"], case["hi"], case.get("mask", "cc"))
        got = heaviside_duration(x, mask)
        report.check(got == rational(case["value"]),
                     f"{label}: duration on {mask} is {fmt(got)}, expected {case['value']}")
    for case in expect.get("bound", []):
        w = (case["w1"], case["w2"])
        got = extrema(x, [case["d"]], w, case.get("mask", "cc"), case.get("kind", "max"))[0]
        report.check(got.value == rational(case["value"]),
                     f"{label}: {case.get('kind', 'max')} bound is {fmt(got.value)}, "
                     f"expected {case['value']}")
    if window is None:
        train = flatten(x)
        if not train:
            return
        window = (train[0].position, train[-1].position)
    if all(imp.amplitude >= 0 for imp in flatten(x, (window[0], 2 * window[1] - window[0]))):
        check_bounds(report, x, window, label)


def bundled_specs():
    folder = resources.files("shirac") / "data"
    docs = []
    for entry in sorted(folder.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            docs.append(parse_spec(entry.read_text(encoding="utf-8"), entry.name))
    return docs


def random_suite(report, seed, cases):
    rng = random.Random(seed)
    for i in range(cases):
        a = random_interference(rng, 2, 2, 4, negative=True)
        b = random_interference(rng, 2, 2, 4, negative=True)
        report.check(_flat_pairs(flatten(convolve(a, b)))
                     == cross_product_oracle(_flat_pairs(flatten(a)), _flat_pairs(flatten(b))),
                     f"random case {i}: convolution disagrees with cross-product oracle")
        c = random_interference(rng, 3, 3, 3, max_impulses=30)
        report.check(_flat_pairs(flatten(c)) == oracle_flatten(c),
                     f"random case {i}: expansion disagrees with oracle")
        train = flatten(c)
        if train:
            w1 = train[0].position - 1
            w2 = train[-1].position
            check_bounds(report, c, (w1, w2), f"random case {i}", max_ds=4)


def run(docs, seed=0, cases=20):
    report = Report()
    for doc in docs:
        try:
            check_spec(report, doc)
        except ShiracError as exc:
            report.check(False, f"{doc.name}: {exc}")
    random_suite(report, seed, cases)
    return report
